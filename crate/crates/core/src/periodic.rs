//! Periodized Bernoulli functions ψ_r(u) = B_r({u})/r!, their Fourier
//! series, the cotangent partial-fraction sums and the tail integral
//! ∫_T^∞ ψ₂(t)/t³ dt.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gauss::gauss_legendre_16;
use crate::summation::KahanSum;

/// Highest order of ψ_r available from the coefficient table.
pub const MAX_ORDER: usize = 8;

/// Bernoulli numbers B_0..B_8 as (numerator, denominator), with B_1 = −1/2.
const BERNOULLI: [(i64, i64); MAX_ORDER + 1] = [
    (1, 1),
    (-1, 2),
    (1, 6),
    (0, 1),
    (-1, 30),
    (0, 1),
    (1, 42),
    (0, 1),
    (-1, 30),
];

/// `table[r][j]` is the coefficient of x^j in B_r(x)/r!.
fn coefficient_table() -> &'static [[f64; MAX_ORDER + 1]; MAX_ORDER + 1] {
    static TABLE: OnceLock<[[f64; MAX_ORDER + 1]; MAX_ORDER + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [[0.0; MAX_ORDER + 1]; MAX_ORDER + 1];
        for (r, row) in table.iter_mut().enumerate() {
            let r_factorial: i64 = (1..=r as i64).product();
            // B_r(x) = Σ_k C(r, k) B_k x^{r−k}
            let mut binom: i64 = 1;
            for (k, &(num, den)) in BERNOULLI.iter().enumerate().take(r + 1) {
                if k > 0 {
                    binom = binom * (r as i64 - k as i64 + 1) / k as i64;
                }
                row[r - k] = (binom * num) as f64 / (den * r_factorial) as f64;
            }
        }
        table
    })
}

/// The sawtooth ψ(u) = u − ⌊u⌋ − 1/2.
#[inline]
pub fn psi(u: f64) -> f64 {
    u - u.floor() - 0.5
}

/// ψ_r(u) = B_r({u})/r! for 1 ≤ r ≤ 8 (r = 0 gives the constant 1).
pub fn psi_r(u: f64, r: usize) -> Result<f64> {
    if r > MAX_ORDER {
        return Err(Error::Argument(format!(
            "psi_r supports orders up to {MAX_ORDER}, got {r}"
        )));
    }
    Ok(bernoulli_scaled(u - u.floor(), r))
}

/// B_r(t)/r! for t in [0, 1]; callers guarantee r ≤ 8.
#[inline]
pub(crate) fn bernoulli_scaled(t: f64, r: usize) -> f64 {
    let row = &coefficient_table()[r];
    row[..=r].iter().rev().fold(0.0, |acc, &c| acc * t + c)
}

/// sup |ψ_r| over a period. For even r the maximum sits at the integers.
pub fn psi_r_sup(r: usize) -> f64 {
    match r {
        0 => 1.0,
        1 => 0.5,
        r if r % 2 == 0 => bernoulli_scaled(0.0, r).abs(),
        // |B_r(x)| < |B_{r−1}|·r/… is awkward in closed form; a sampled sup is
        // enough for the places that ask for odd orders.
        r => {
            let n = 4096;
            (0..=n)
                .map(|i| bernoulli_scaled(i as f64 / n as f64, r).abs())
                .fold(0.0, f64::max)
                * 1.001
        }
    }
}

/// Partial sum of −Σ_{1≤|n|≤V} e^{2πinu}/(2πin)^r, i.e.
/// −2 Σ_{n=1}^{V} cos(2πnu − rπ/2)/(2πn)^r.
///
/// For r = 1 the series converges slowly and only conditionally; at the
/// integers it converges to 0 rather than ψ(u) = −1/2.
pub fn psi_r_fourier(u: f64, r: usize, terms: u64) -> f64 {
    let frac = u - u.floor();
    let shift = r as f64 * PI / 2.0;
    let mut acc = KahanSum::new();
    for n in (1..=terms).rev() {
        let phase = (n as f64 * frac).fract();
        let denom = (2.0 * PI * n as f64).powi(r as i32);
        acc.add((2.0 * PI * phase - shift).cos() / denom);
    }
    -2.0 * acc.value()
}

/// (π/m)·cot(πr/m) for 1 ≤ r ≤ m − 1.
///
/// Evaluated as tan(π(m − 2r)/(2m)) so that r = m/2 gives 0 exactly and
/// r ↦ m − r flips the sign exactly.
pub fn cot_closed(r: u64, m: u64) -> Result<f64> {
    check_residue(r, m)?;
    let angle = PI * (m as f64 - 2.0 * r as f64) / (2.0 * m as f64);
    Ok(PI / m as f64 * angle.tan())
}

/// 1/r − 2r Σ_{v=1}^{V} 1/(m²v² − r²), with the remaining tail Σ_{v>V}
/// estimated by midpoint Euler–Maclaurin (the integral from V + 1/2 plus
/// two derivative corrections).
///
/// The infinite sum equals Σ_{v ≡ r (mod m)} 1/v taken symmetrically,
/// which is (π/m)·cot(πr/m).
pub fn cot_partial_fraction(r: u64, m: u64, terms: u64) -> Result<f64> {
    check_residue(r, m)?;
    if terms == 0 {
        return Err(Error::Argument("truncation V must be at least 1".into()));
    }
    let (rf, mf) = (r as f64, m as f64);
    let mut acc = KahanSum::new();
    for v in (1..=terms).rev() {
        let mv = mf * v as f64;
        acc.add(1.0 / ((mv - rf) * (mv + rf)));
    }
    let c = terms as f64 + 0.5;
    let mc = mf * c;
    let integral = (2.0 * rf / (mc - rf)).ln_1p() / (2.0 * mf * rf);
    // k-th derivative of 1/(m²v² − r²) at v = c
    let derivative = |k: i32| {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let k_fact: f64 = (1..=k).map(f64::from).product();
        sign * k_fact * mf.powi(k) * ((mc - rf).powi(-k - 1) - (mc + rf).powi(-k - 1)) / (2.0 * rf)
    };
    acc.add(integral);
    acc.add(derivative(1) / 24.0);
    acc.add(-7.0 * derivative(3) / 5760.0);
    Ok(1.0 / rf - 2.0 * rf * acc.value())
}

fn check_residue(r: u64, m: u64) -> Result<()> {
    if m < 2 || r == 0 || r >= m {
        return Err(Error::Argument(format!(
            "need 1 <= r <= m - 1 with m >= 2, got r = {r}, m = {m}"
        )));
    }
    Ok(())
}

/// Value of ∫_T^∞ ψ₂(t)/t³ dt with a bound on its error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailIntegral {
    pub lower_limit: f64,
    pub value: f64,
    pub error_bound: f64,
}

/// Below this lower limit the integration-by-parts expansion is not used
/// directly; whole periods are integrated numerically up to a safe start.
const IBP_MIN_START: f64 = 10.0;
/// Number of integrations by parts (ψ₂ → ψ₈).
const IBP_DEPTH: usize = 6;
/// Periods integrated numerically before giving up on a tolerance.
const MAX_PERIODS: f64 = 1e7;

/// 3·4·…·(2 + depth), the coefficient of the final remainder integral.
fn ibp_coefficient() -> f64 {
    (3..=2 + IBP_DEPTH).map(|p| p as f64).product()
}

/// Bound on |c·∫_M^∞ ψ₈(t) t⁻⁹ dt| ≤ c·sup|ψ₈|/(8M⁸).
fn ibp_remainder_bound(start: f64) -> f64 {
    let p = (3 + IBP_DEPTH) as i32;
    ibp_coefficient() * psi_r_sup(2 + IBP_DEPTH) / ((p - 1) as f64 * start.powi(p - 1))
}

/// Boundary terms of the repeated integration by parts
/// ∫_M^∞ ψ_r t^{−p} = −ψ_{r+1}(M) M^{−p} + p ∫_M^∞ ψ_{r+1} t^{−p−1}.
fn ibp_boundary_terms(start: f64) -> (f64, f64) {
    let frac = start - start.floor();
    let mut value = 0.0;
    let mut magnitude = 0.0;
    let mut coefficient = 1.0;
    let mut power = 3;
    for r in 3..=2 + IBP_DEPTH {
        let term = coefficient * bernoulli_scaled(frac, r) / start.powi(power);
        value -= term;
        magnitude += term.abs();
        coefficient *= power as f64;
        power += 1;
    }
    (value, magnitude)
}

/// ∫_lo^hi ψ₂(t)/t³ dt on a piece where ⌊t⌋ = k throughout.
fn period_piece(lo: f64, hi: f64, k: f64) -> f64 {
    gauss_legendre_16().integrate(
        |t| {
            let s = t - k;
            0.5 * (s * s - s + 1.0 / 6.0) / (t * t * t)
        },
        lo,
        hi,
    )
}

/// ∫_T^∞ ψ₂(t)/t³ dt to absolute accuracy `tol`.
///
/// For large T only the boundary terms of six integrations by parts are
/// needed. Otherwise whole periods from T up to an integer start M are
/// integrated with a 16-point Gauss–Legendre rule per period and the
/// expansion is applied at M.
pub fn psi2_tail_integral(lower_limit: f64, tol: f64) -> Result<TailIntegral> {
    if !(lower_limit > 0.0 && lower_limit.is_finite()) {
        return Err(Error::Argument(format!(
            "tail integral needs a finite T > 0, got {lower_limit}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::Argument(format!("tolerance must be positive, got {tol}")));
    }
    let t = lower_limit;
    let budget = 0.5 * tol;

    if t >= IBP_MIN_START && ibp_remainder_bound(t) <= budget {
        let (value, magnitude) = ibp_boundary_terms(t);
        return finish(t, value, ibp_remainder_bound(t), 4.0 * f64::EPSILON * magnitude, tol);
    }

    // Smallest start M with remainder bound ≤ budget.
    let needed = (ibp_remainder_bound(1.0) / budget).powf(1.0 / (2 + IBP_DEPTH) as f64);
    let start = needed.max(IBP_MIN_START).max(t).ceil();
    if start - t > MAX_PERIODS {
        let (value, _) = ibp_boundary_terms(t);
        return Err(Error::Tolerance {
            requested: tol,
            achieved: ibp_remainder_bound(t),
            lo: t,
            hi: f64::INFINITY,
            context: Some(format!("psi2 tail integral (value ≈ {value:e})")),
        });
    }

    let mut acc = KahanSum::new();
    let mut magnitude = 0.0;
    let mut push = |piece: f64| {
        acc.add(piece);
        magnitude += piece.abs();
    };

    let mut lo = t;
    if lo < 1.0 {
        // ψ₂(t)/t³ grows like t⁻³ near 0: split geometrically so every
        // piece has hi/lo ≤ 2.
        while lo < 1.0 {
            let hi = (2.0 * lo).min(1.0);
            push(period_piece(lo, hi, 0.0));
            lo = hi;
        }
    } else if lo.fract() != 0.0 {
        let hi = lo.ceil();
        push(period_piece(lo, hi, lo.floor()));
        lo = hi;
    }
    let mut k = lo;
    while k < start {
        push(period_piece(k, k + 1.0, k));
        k += 1.0;
    }
    let (boundary, boundary_magnitude) = ibp_boundary_terms(start);
    acc.add(boundary);
    let value = acc.value();
    let rounding = 4.0 * f64::EPSILON * (magnitude + boundary_magnitude);
    finish(t, value, ibp_remainder_bound(start), rounding, tol)
}

/// ∫_k^∞ ψ₂(t)/t³ dt tabulated at the integers below the point where the
/// expansion alone meets the tolerance, for repeated evaluation at many
/// lower limits.
#[derive(Debug, Clone)]
pub struct Psi2TailTable {
    tol: f64,
    /// values[k] = ∫_k^∞ for 1 ≤ k ≤ last; values[0] is unused.
    values: Vec<f64>,
}

impl Psi2TailTable {
    pub fn new(tol: f64) -> Result<Self> {
        if !(tol > 0.0) {
            return Err(Error::Argument(format!("tolerance must be positive, got {tol}")));
        }
        let needed = (ibp_remainder_bound(1.0) / (0.5 * tol)).powf(1.0 / (2 + IBP_DEPTH) as f64);
        let last = needed.max(IBP_MIN_START).ceil() as usize;
        let mut values = vec![0.0; last + 1];
        values[last] = psi2_tail_integral(last as f64, tol)?.value;
        for k in (1..last).rev() {
            let kf = k as f64;
            values[k] = period_piece(kf, kf + 1.0, kf) + values[k + 1];
        }
        Ok(Self { tol, values })
    }

    /// ∫_T^∞ ψ₂(t)/t³ dt.
    pub fn eval(&self, lower_limit: f64) -> Result<f64> {
        let last = self.values.len() - 1;
        if lower_limit >= 1.0 && lower_limit < last as f64 {
            let k = lower_limit.floor();
            if lower_limit == k {
                return Ok(self.values[k as usize]);
            }
            Ok(period_piece(lower_limit, k + 1.0, k) + self.values[k as usize + 1])
        } else {
            psi2_tail_integral(lower_limit, self.tol).map(|r| r.value)
        }
    }
}

/// Only the truncation bound is held to `tol`; the rounding estimate is
/// added to the reported bound but cannot be reduced by more work.
fn finish(lower_limit: f64, value: f64, truncation: f64, rounding: f64, tol: f64) -> Result<TailIntegral> {
    if truncation > tol {
        return Err(Error::Tolerance {
            requested: tol,
            achieved: truncation,
            lo: lower_limit,
            hi: f64::INFINITY,
            context: Some(format!("psi2 tail integral (value ≈ {value:e})")),
        });
    }
    Ok(TailIntegral {
        lower_limit,
        value,
        error_bound: truncation + rounding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{harmonic_number, EULER_GAMMA};
    use proptest::prelude::*;

    #[test]
    fn sawtooth_values() {
        assert_eq!(psi(0.25), -0.25);
        assert_eq!(psi(7.0), -0.5);
        assert_eq!(psi(2.5), 0.0);
        assert_eq!(psi(-0.25), 0.25);
    }

    #[test]
    fn bernoulli_values() {
        assert!((psi_r(0.0, 2).unwrap() - 1.0 / 12.0).abs() < 1e-16);
        assert!((psi_r(0.5, 2).unwrap() + 1.0 / 24.0).abs() < 1e-16);
        assert!((psi_r(0.3, 1).unwrap() + 0.2).abs() < 1e-15);
        assert!((psi_r(0.0, 8).unwrap() + 1.0 / 30.0 / 40320.0).abs() < 1e-20);
        assert!(psi_r(0.1, 9).is_err());
        // B_4(x) = x⁴ − 2x³ + x² − 1/30 at x = 1/3
        let x: f64 = 1.0 / 3.0;
        let b4 = x.powi(4) - 2.0 * x.powi(3) + x * x - 1.0 / 30.0;
        assert!((psi_r(x, 4).unwrap() - b4 / 24.0).abs() < 1e-16);
    }

    #[test]
    fn order_one_is_sawtooth_off_integers() {
        for u in [-3.7, -0.1, 0.3, 2.9, 1234.56] {
            assert!((psi_r(u, 1).unwrap() - psi(u)).abs() < 1e-12);
        }
    }

    #[test]
    fn sawtooth_has_zero_mean() {
        let n = 10_000;
        let mean: f64 = (0..n).map(|i| psi((i as f64 + 0.5) / n as f64)).sum::<f64>() / n as f64;
        assert!(mean.abs() <= 1e-15);
    }

    #[test]
    fn continuity_at_integers_for_higher_orders() {
        for r in 2..=MAX_ORDER {
            let left = bernoulli_scaled(1.0, r);
            let right = bernoulli_scaled(0.0, r);
            assert!((left - right).abs() < 1e-16, "r = {r}");
        }
    }

    #[test]
    fn derivative_chain() {
        let h = 1e-5;
        for r in 2..=4 {
            for u in [0.13, 0.37, 0.5, 0.81, 3.29, -1.6] {
                let fd = (psi_r(u + h, r).unwrap() - psi_r(u - h, r).unwrap()) / (2.0 * h);
                assert!((fd - psi_r(u, r - 1).unwrap()).abs() < 1e-8, "r = {r}, u = {u}");
            }
        }
    }

    #[test]
    fn fourier_examples() {
        // alternating series: truncation error below the first omitted term
        assert!((psi_r_fourier(0.5, 2, 1000) + 1.0 / 24.0).abs() < 2.0 / (4.0 * PI * PI * 1001.0 * 1001.0));
        assert!((psi_r_fourier(0.25, 1, 100_000) + 0.25).abs() < 1e-4);
        let at_zero = psi_r_fourier(0.0, 2, 100_000);
        assert!((at_zero - 1.0 / 12.0).abs() < 1e-6);
        // truncation bound for r = 2: 2(2π)^{-2} Σ_{n>V} n^{-2} ≤ 2(2π)^{-2}/V
        let v = 50;
        let bound = 2.0 / (2.0 * PI).powi(2) / v as f64;
        for u in [0.1, 0.77, 3.3] {
            let err = (psi_r_fourier(u, 2, v) - psi_r(u, 2).unwrap()).abs();
            assert!(err <= bound);
        }
        // series converges to 0 at the jump of ψ
        assert!(psi_r_fourier(3.0, 1, 1000).abs() < 1e-12);
    }

    #[test]
    fn fourier_consistency_random() {
        let mut state = 12345u64;
        for _ in 0..1000 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let u = (state >> 11) as f64 / (1u64 << 53) as f64 * 20.0 - 10.0;
            for r in [2, 3] {
                let diff = (psi_r_fourier(u, r, 10_000) - psi_r(u, r).unwrap()).abs();
                assert!(diff <= 1e-6, "u = {u}, r = {r}, diff = {diff}");
            }
        }
    }

    #[test]
    fn cotangent_closed_values() {
        assert_eq!(cot_closed(1, 2).unwrap(), 0.0);
        assert!((cot_closed(1, 4).unwrap() - PI / 4.0).abs() < 1e-15);
        assert!((cot_closed(3, 4).unwrap() + PI / 4.0).abs() < 1e-15);
        assert!(cot_closed(0, 4).is_err());
        assert!(cot_closed(4, 4).is_err());
    }

    #[test]
    fn cotangent_partial_fraction_telescopes() {
        // Σ 1/(4v² − 1) = 1/2, so 1 − 2·(1/2) = 0
        assert!(cot_partial_fraction(1, 2, 10_000).unwrap().abs() < 1e-13);
        assert!(cot_partial_fraction(2, 2, 10).is_err());
        assert!(cot_partial_fraction(0, 2, 10).is_err());
        assert!(cot_partial_fraction(1, 2, 0).is_err());
    }

    #[test]
    fn cotangent_partial_fraction_converges() {
        for m in 2..=50u64 {
            let terms = 1_000_000 / m;
            for r in 1..m {
                let pf = cot_partial_fraction(r, m, terms).unwrap();
                let closed = cot_closed(r, m).unwrap();
                assert!((pf - closed).abs() <= 1e-10, "r = {r}, m = {m}");
                let mirrored = cot_partial_fraction(m - r, m, terms).unwrap();
                assert!((pf + mirrored).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn cotangent_partial_fraction_tail_correction_at_small_v() {
        for m in [2u64, 3, 7, 20, 50] {
            for r in 1..m {
                let pf = cot_partial_fraction(r, m, 100).unwrap();
                assert!((pf - cot_closed(r, m).unwrap()).abs() < 1e-12, "r = {r}, m = {m}");
            }
        }
    }

    /// Closed-form ∫_k^{k+1} ψ₂(t)/t³ dt from the antiderivative
    /// ½[ln t + (2k+1)/t − (k² + k + 1/6)/(2t²)].
    fn period_closed_form(k: f64) -> f64 {
        let c = k * k + k + 1.0 / 6.0;
        0.5 * ((1.0 / k).ln_1p() - (2.0 * k + 1.0) / (k * (k + 1.0))
            - 0.5 * c * (1.0 / ((k + 1.0) * (k + 1.0)) - 1.0 / (k * k)))
    }

    #[test]
    fn tail_at_integers_matches_harmonic_identity() {
        // ∫_N^∞ ψ₂/t³ = ½(H_N − ln N − γ − 1/(2N) + 1/(12N²))
        for n in [1u64, 2, 3, 5, 9, 17] {
            let nf = n as f64;
            let expected = 0.5
                * (harmonic_number(n) - nf.ln() - EULER_GAMMA - 0.5 / nf + 1.0 / (12.0 * nf * nf));
            let got = psi2_tail_integral(nf, 1e-16).unwrap();
            assert!((got.value - expected).abs() < 2e-16, "N = {n}: {} vs {expected}", got.value);
        }
        let one = psi2_tail_integral(1.0, 1e-15).unwrap().value;
        assert!((one - (7.0 / 24.0 - EULER_GAMMA / 2.0)).abs() < 1e-16);
    }

    #[test]
    fn tail_at_two_against_closed_form_period_sum() {
        let periods = 200_000u64;
        let mut acc = KahanSum::new();
        for k in (2..2 + periods).rev() {
            acc.add(period_closed_form(k as f64));
        }
        let remaining = 1.0 / (24.0 * ((2 + periods) as f64).powi(2));
        let got = psi2_tail_integral(2.0, 1e-15).unwrap().value;
        assert!((got - acc.value()).abs() <= remaining + 1e-14, "{got} vs {}", acc.value());
        // ½(H₂ − log 2 − γ − 1/4 + 1/48)
        assert!((got - 2.352_439_36e-4).abs() < 1e-11);
    }

    #[test]
    fn tail_difference_is_one_period() {
        for k in [1.0, 4.0, 11.0, 40.0, 300.0] {
            let a = psi2_tail_integral(k, 1e-17).unwrap().value;
            let b = psi2_tail_integral(k + 1.0, 1e-17).unwrap().value;
            let expected = period_closed_form(k);
            assert!((a - b - expected).abs() < 1e-16 + 1e-9 * expected.abs(), "k = {k}");
        }
    }

    #[test]
    fn tail_below_one_and_bounds() {
        for t in [0.01, 0.1, 0.5, 0.999, 1.5, 7.25, 10.0, 55.5, 1e3, 1e6] {
            let res = psi2_tail_integral(t, 1e-14).unwrap();
            assert!(res.error_bound <= 1e-14 + 1e-14 * res.value.abs(), "T = {t}");
            assert!(res.value.abs() <= 1.0 / (24.0 * t * t), "T = {t}");
        }
        // near zero ψ₂(t) ≈ 1/12 − t/2, so the integral is 1/(24T²) − 1/(2T) + O(log T)
        let t = 1e-3;
        let v = psi2_tail_integral(t, 1e-6).unwrap().value;
        let leading = 1.0 / (24.0 * t * t) - 1.0 / (2.0 * t);
        assert!(((v - leading) * 24.0 * t * t).abs() < 1e-3);
    }

    #[test]
    fn tail_rejects_bad_arguments() {
        assert!(psi2_tail_integral(0.0, 1e-10).is_err());
        assert!(psi2_tail_integral(-2.0, 1e-10).is_err());
        assert!(psi2_tail_integral(2.0, 0.0).is_err());
        assert!(matches!(
            psi2_tail_integral(2.0, 1e-300),
            Err(Error::Tolerance { .. })
        ));
    }

    #[test]
    fn tail_table_agrees_with_direct_evaluation() {
        let table = Psi2TailTable::new(1e-17).unwrap();
        for t in [0.5, 1.0, 1.41, 2.0, 7.5, 9.999, 23.0, 50.3, 89.9, 120.0, 1e4] {
            let direct = psi2_tail_integral(t, 1e-17).unwrap().value;
            assert!((table.eval(t).unwrap() - direct).abs() < 1e-17, "T = {t}");
        }
    }

    proptest! {
        #[test]
        fn periodicity(u in -1e4f64..1e4, r in 1usize..=8) {
            let a = psi_r(u, r).unwrap();
            let b = psi_r(u + 1.0, r).unwrap();
            // u + 1 may shift the fractional part by one ulp of u
            prop_assert!((a - b).abs() <= 1e-11);
        }

        #[test]
        fn sawtooth_range(u in -1e6f64..1e6) {
            let v = psi(u);
            prop_assert!((-0.5..0.5).contains(&v));
        }

        #[test]
        fn remark_scaling(t in 1.0f64..1e4) {
            let v = psi2_tail_integral(t, 1e-14).unwrap().value;
            prop_assert!(t * t * v.abs() <= 1.0 / 24.0);
        }
    }
}
