//! The remainder Δ(x) = D(x) − x log x − (2γ − 1)x − 1/4 of the divisor
//! problem and its split Δ(x) = A(x) + B(x) with
//!
//! ```text
//! A(x) = −2 Σ_{m ≤ √x} ψ(x/m)
//! B(x) = 4x ∫_{√x}^∞ ψ₂(u)/u³ du − ψ(√x)² − 2ψ₂(√x)
//! ```
//!
//! For integer x, A(x) also has a trigonometric form built from the
//! symmetric sums Σ_{v ≡ r (mod m)} 1/v = (π/m)·cot(πr/m).

use std::f64::consts::PI;

use crate::arith::{floor_sqrt, DivisorSieve, EULER_GAMMA};
use crate::error::{Error, Result};
use crate::periodic::{bernoulli_scaled, cot_closed, cot_partial_fraction, psi, psi2_tail_integral};
use crate::summation::KahanSum;

/// |B(x)| ≤ 1/6 + 1/4 + 1/6 from the bounds on each of its three parts.
pub const B_BOUND: f64 = 7.0 / 12.0;

/// Largest x for which A(x) uses exact integer reduction of x mod m.
const EXACT_INTEGER_LIMIT: f64 = 9_007_199_254_740_992.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RemainderBreakdown {
    pub x: f64,
    /// D(x)
    pub d: u64,
    pub main_term: f64,
    pub delta: f64,
    pub a: f64,
    pub b: f64,
    /// delta − a − b
    pub residual: f64,
}

/// x log x + (2γ − 1)x + 1/4
pub fn main_term(x: f64) -> f64 {
    x * x.ln() + (2.0 * EULER_GAMMA - 1.0) * x + 0.25
}

/// Δ(x) = D(x) − main_term(x), with D(x) read from the sieve.
pub fn delta_direct(x: f64, sieve: &DivisorSieve) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Argument(format!("delta needs x > 0, got {x}")));
    }
    let d = sieve.summatory(x)?;
    Ok(d as f64 - main_term(x))
}

/// A(x) = −2 Σ_{m ≤ √x} ψ(x/m). Integer x is reduced exactly modulo m.
pub fn a_of(x: f64) -> f64 {
    let Ok(terms) = floor_sqrt(x.max(0.0)) else {
        return f64::NAN;
    };
    let mut acc = KahanSum::new();
    if x.fract() == 0.0 && x < EXACT_INTEGER_LIMIT {
        let n = x as u64;
        for m in 1..=terms {
            acc.add((n % m) as f64 / m as f64 - 0.5);
        }
    } else {
        for m in 1..=terms {
            acc.add(psi(x / m as f64));
        }
    }
    -2.0 * acc.value()
}

/// B(x) with total error ≤ tol; the tail integral is requested to tol/(8x).
pub fn b_of(x: f64, tol: f64) -> Result<f64> {
    if !(x >= 1.0 && x.is_finite()) {
        return Err(Error::Argument(format!("B(x) needs finite x >= 1, got {x}")));
    }
    let root = x.sqrt();
    let tail = psi2_tail_integral(root, tol / (8.0 * x))?;
    let p = psi(root);
    let frac = root - root.floor();
    Ok(4.0 * x * tail.value - p * p - 2.0 * bernoulli_scaled(frac, 2))
}

/// Assemble D(x), the main term, Δ(x), A(x), B(x) and the residual Δ − A − B.
pub fn decompose(x: f64, sieve: &DivisorSieve, tol: f64) -> Result<RemainderBreakdown> {
    if !(x >= 1.0) {
        return Err(Error::Argument(format!("decomposition needs x >= 1, got {x}")));
    }
    let d = sieve.summatory(x)?;
    let main = main_term(x);
    let delta = d as f64 - main;
    let a = a_of(x);
    let b = b_of(x, tol)?;
    Ok(RemainderBreakdown {
        x,
        d,
        main_term: main,
        delta,
        a,
        b,
        residual: delta - a - b,
    })
}

/// How the residue sums Σ_{v ≡ r (mod m)} 1/v are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigMode {
    /// 1/r − 2r Σ_{v ≤ V} 1/(m²v² − r²) with tail correction. `None` uses
    /// V(m) = max(1000, ⌈1000/m⌉·m).
    PartialFraction(Option<u64>),
    /// (π/m)·cot(πr/m).
    Cotangent,
}

impl TrigMode {
    fn truncation(self, m: u64) -> u64 {
        match self {
            TrigMode::PartialFraction(Some(v)) => v,
            _ => 1000u64.max(1000u64.div_ceil(m) * m),
        }
    }
}

/// Value of the trigonometric form of A(x) together with the imaginary
/// part left over when it is accumulated as (1/(πi)) Σ_r e^{2πirx/m} S(r, m).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigEvaluation {
    pub value: f64,
    pub imaginary: f64,
    /// #{m ≤ √x : m | x}, the contribution of the dividing m.
    pub dividing: u64,
}

/// Residue sums S(r, m) for 2 ≤ m ≤ max_m, reused across many x.
#[derive(Debug, Clone)]
pub struct TrigTable {
    mode: TrigMode,
    max_m: u64,
    /// rows[m][r] = S(r, m); rows 0 and 1 are empty.
    rows: Vec<Vec<f64>>,
}

impl TrigTable {
    pub fn new(max_m: u64, mode: TrigMode) -> Result<Self> {
        if let TrigMode::PartialFraction(Some(0)) = mode {
            return Err(Error::Argument("truncation V must be at least 1".into()));
        }
        let mut rows = vec![Vec::new(); (max_m + 1).max(2) as usize];
        for m in 2..=max_m {
            let mut row = vec![0.0; m as usize];
            for r in 1..m {
                row[r as usize] = match mode {
                    TrigMode::Cotangent => cot_closed(r, m)?,
                    TrigMode::PartialFraction(_) => cot_partial_fraction(r, m, mode.truncation(m))?,
                };
            }
            rows[m as usize] = row;
        }
        Ok(Self { mode, max_m, rows })
    }

    pub fn mode(&self) -> TrigMode {
        self.mode
    }

    /// Largest integer x the table covers, (max_m + 1)² − 1.
    pub fn max_x(&self) -> u64 {
        (self.max_m + 1) * (self.max_m + 1) - 1
    }

    /// A(x) = Σ_{m ≤ √x, m ∤ x} (1/π) Σ_{r=1}^{m−1} sin(2πrx/m)·S(r, m) + #{m ≤ √x : m | x}.
    pub fn evaluate(&self, x: u64) -> Result<TrigEvaluation> {
        if x == 0 {
            return Err(Error::Argument("integer formula needs x >= 1".into()));
        }
        let top = x.isqrt();
        if top > self.max_m {
            return Err(Error::Range {
                what: "x",
                value: x as f64,
                limit: self.max_x() as f64,
            });
        }
        let mut re = KahanSum::new();
        let mut im = KahanSum::new();
        let mut dividing = 0;
        for m in 1..=top {
            let residue = x % m;
            if residue == 0 {
                dividing += 1;
                continue;
            }
            let row = &self.rows[m as usize];
            for r in 1..m {
                let angle = 2.0 * PI * ((r * residue) % m) as f64 / m as f64;
                let (s, c) = angle.sin_cos();
                re.add(s * row[r as usize]);
                im.add(-c * row[r as usize]);
            }
        }
        Ok(TrigEvaluation {
            value: re.value() / PI + dividing as f64,
            imaginary: im.value() / PI,
            dividing,
        })
    }
}

/// Trigonometric form of A(x) for a single integer x.
pub fn a_trig_integer(x: u64, mode: TrigMode) -> Result<f64> {
    let table = TrigTable::new(x.isqrt(), mode)?;
    Ok(table.evaluate(x)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periodic::psi2_tail_integral;

    #[test]
    fn main_term_values() {
        assert!((main_term(1.0) - (2.0 * EULER_GAMMA - 0.75)).abs() < 1e-15);
        assert!((main_term(1.0) - 0.404_431_329_803_065_7).abs() < 1e-15);
        let e = std::f64::consts::E;
        assert!((main_term(e) - (2.0 * EULER_GAMMA * e + 0.25)).abs() < 1e-14);
        let hundred = 100.0 * 100f64.ln() + (2.0 * EULER_GAMMA - 1.0) * 100.0 + 0.25;
        assert_eq!(main_term(100.0), hundred);
    }

    #[test]
    fn delta_values() {
        let sieve = DivisorSieve::new(100).unwrap();
        let d1 = delta_direct(1.0, &sieve).unwrap();
        assert!((d1 - (1.75 - 2.0 * EULER_GAMMA)).abs() < 1e-15);
        let d4 = delta_direct(4.0, &sieve).unwrap();
        assert!((d4 - (8.0 - main_term(4.0))).abs() < 1e-15);
        assert!((d4 - 1.5871).abs() < 1e-4);
        let lo = delta_direct(10.5, &sieve).unwrap();
        let hi = delta_direct(10.999, &sieve).unwrap();
        assert!(((lo - hi) - (main_term(10.999) - main_term(10.5))).abs() < 1e-12);
        assert!(delta_direct(101.0, &sieve).is_err());
    }

    #[test]
    fn a_values() {
        assert_eq!(a_of(1.0), 1.0);
        assert_eq!(a_of(4.0), 2.0);
        assert_eq!(a_of(2.5), 0.0);
        // integer reduction and the floating route agree away from jumps
        assert!((a_of(1000.0) - (-2.0 * (1..=31).map(|m| psi(1000.0 / m as f64)).sum::<f64>())).abs() < 1e-12);
    }

    #[test]
    fn b_values() {
        let tail2 = psi2_tail_integral(2.0, 1e-16).unwrap().value;
        let b4 = b_of(4.0, 1e-12).unwrap();
        assert!((b4 - (16.0 * tail2 - 0.25 - 1.0 / 6.0)).abs() < 1e-13);

        let tail25 = psi2_tail_integral(2.5, 1e-16).unwrap().value;
        let b = b_of(6.25, 1e-12).unwrap();
        assert!((b - (25.0 * tail25 + 1.0 / 12.0)).abs() < 1e-13);

        for x in [1.0, 2.0, 3.3, 17.0, 1e3, 12345.6, 1e6] {
            assert!(b_of(x, 1e-10).unwrap().abs() <= 0.6);
        }
        assert!(b_of(0.5, 1e-10).is_err());
    }

    #[test]
    fn decomposition_closes_at_small_x() {
        let sieve = DivisorSieve::new(1000).unwrap();
        let one = decompose(1.0, &sieve, 1e-14).unwrap();
        assert!(one.residual.abs() < 1e-14, "{one:?}");
        assert!((one.b - (0.75 - 2.0 * EULER_GAMMA)).abs() < 1e-14);
        let four = decompose(4.0, &sieve, 1e-12).unwrap();
        assert!(four.residual.abs() <= 1e-9);
        for x in [2.0, 2.5, 9.99, 10.0, 99.5, 577.0, 999.9] {
            let r = decompose(x, &sieve, 1e-12).unwrap();
            assert!(r.residual.abs() < 1e-9, "x = {x}: {r:?}");
            assert_eq!(r.delta, r.d as f64 - r.main_term);
        }
    }

    #[test]
    fn trig_form_examples() {
        assert_eq!(a_trig_integer(4, TrigMode::Cotangent).unwrap(), 2.0);
        let five = a_trig_integer(5, TrigMode::Cotangent).unwrap();
        assert!((five - a_of(5.0)).abs() < 1e-15);
        assert!((five - 1.0).abs() < 1e-15);
        let pf = a_trig_integer(5, TrigMode::PartialFraction(None)).unwrap();
        assert!((pf - 1.0).abs() < 1e-12);
        assert!(a_trig_integer(0, TrigMode::Cotangent).is_err());
    }

    #[test]
    fn trig_form_matches_sawtooth_sum() {
        let cot = TrigTable::new(44, TrigMode::Cotangent).unwrap();
        let pf = TrigTable::new(44, TrigMode::PartialFraction(None)).unwrap();
        for x in 2..=2000u64 {
            let exact = a_of(x as f64);
            let c = cot.evaluate(x).unwrap();
            assert!((c.value - exact).abs() <= 1e-10, "x = {x}");
            assert!(c.imaginary.abs() <= 1e-12, "x = {x}");
            assert!((pf.evaluate(x).unwrap().value - exact).abs() <= 1e-6, "x = {x}");
        }
        assert!(cot.evaluate(45 * 45).is_err());
    }

    #[test]
    fn dividing_count_is_small_divisor_count() {
        let cot = TrigTable::new(40, TrigMode::Cotangent).unwrap();
        let e = cot.evaluate(360).unwrap();
        // m ≤ 18 dividing 360: 1 2 3 4 5 6 8 9 10 12 15 18
        assert_eq!(e.dividing, 12);
    }
}
