//! Real-s zeta values and the tails
//!
//! ```text
//! E₁(s, x) = ζ(s) − Σ_{n≤x} n^{−s}
//! E₂(s, x) = ζ(s)² − Σ_{n≤x} d(n) n^{−s}
//! ```
//!
//! for 0 < s ≠ 1. Both tails are formed from the Hurwitz-type tail
//! T(s, N) = Σ_{n>N} n^{−s} (analytically continued for s < 1) instead of
//! subtracting a partial sum from ζ(s), so they keep full relative accuracy
//! when they are many orders of magnitude below ζ(s).

use crate::arith::{floor_index, floor_sqrt, harmonic_sum, DivisorSieve};
use crate::error::{Error, Result};
use crate::periodic::psi;
use crate::remainder::delta_direct;
use crate::summation::KahanSum;

/// B_{2j}/(2j)! for j = 1..=9.
const BERNOULLI_OVER_FACTORIAL: [f64; 9] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
    5.0 / 66.0 / 3_628_800.0,
    -691.0 / 2730.0 / 479_001_600.0,
    7.0 / 6.0 / 87_178_291_200.0,
    -3617.0 / 510.0 / 20_922_789_888_000.0,
    43_867.0 / 798.0 / 6_402_373_705_728_000.0,
];

pub const MAX_EM_ORDER: usize = 8;
pub const DEFAULT_EM_ORDER: usize = 6;

/// Relative size of the first omitted Euler–Maclaurin term.
const EM_TARGET: f64 = 1e-17;
const MAX_START: u64 = 10_000_000;

fn check_s(s: f64) -> Result<()> {
    if s == 1.0 {
        return Err(Error::Pole);
    }
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::Domain(s));
    }
    Ok(())
}

fn check_order(order: usize) -> Result<()> {
    if !(1..=MAX_EM_ORDER).contains(&order) {
        return Err(Error::Argument(format!(
            "Euler-Maclaurin order must be in 1..={MAX_EM_ORDER}, got {order}"
        )));
    }
    Ok(())
}

/// Euler–Maclaurin value of T(s, n) with `order` Bernoulli corrections,
/// together with the magnitude of the first omitted correction.
fn em_tail(s: f64, n: u64, order: usize) -> (f64, f64) {
    let nf = n as f64;
    let pow = nf.powf(-s);
    let mut acc = KahanSum::new();
    acc.add(nf * pow / (s - 1.0));
    acc.add(-0.5 * pow);
    let inv_sq = 1.0 / (nf * nf);
    let mut rising = s;
    let mut power = pow / nf;
    let mut next = 0.0;
    for (j, c) in BERNOULLI_OVER_FACTORIAL.iter().enumerate().take(order + 1) {
        let term = c * rising * power;
        if j == order {
            next = term.abs();
        } else {
            acc.add(term);
        }
        let k = 2.0 * j as f64;
        rising *= (s + k + 1.0) * (s + k + 2.0);
        power *= inv_sq;
    }
    (acc.value(), next)
}

/// ζ(s) as Σ_{k≤n} k^{−s} + T(s, n) with T from `order` Euler–Maclaurin
/// corrections at n.
pub fn zeta_em(s: f64, n: u64, order: usize) -> Result<f64> {
    check_s(s)?;
    check_order(order)?;
    if n == 0 {
        return Err(Error::Argument("zeta_em needs n >= 1".into()));
    }
    let mut acc = KahanSum::new();
    acc.add(em_tail(s, n, order).0);
    for k in (1..=n).rev() {
        acc.add((k as f64).powf(-s));
    }
    Ok(acc.value())
}

/// ζ(s) for real 0 < s ≠ 1 with an automatically chosen cut-off.
pub fn zeta_real(s: f64, order: usize) -> Result<f64> {
    Ok(HurwitzTail::new(s, order)?.zeta())
}

/// T(s, q) = Σ_{n>q} n^{−s} for every integer q ≥ 0.
///
/// Below the cut-off `start` the tail is the exact suffix sum on top of the
/// Euler–Maclaurin value at `start`; above it Euler–Maclaurin is applied at q.
#[derive(Debug, Clone)]
pub struct HurwitzTail {
    s: f64,
    order: usize,
    start: u64,
    below: Vec<f64>,
}

impl HurwitzTail {
    pub fn new(s: f64, order: usize) -> Result<Self> {
        check_s(s)?;
        check_order(order)?;
        let mut start: u64 = 4;
        loop {
            let nf = start as f64;
            let (_, next) = em_tail(s, start, order);
            let scale = nf.powf(-s) * (nf / (s - 1.0).abs()).max(0.5);
            if next <= EM_TARGET * scale {
                break;
            }
            if start >= MAX_START {
                return Err(Error::Tolerance {
                    requested: EM_TARGET,
                    achieved: next / scale,
                    lo: s,
                    hi: s,
                    context: Some("zeta cut-off".into()),
                });
            }
            start += start / 4 + 1;
        }
        let mut below = vec![0.0; start as usize + 1];
        let mut acc = KahanSum::new();
        acc.add(em_tail(s, start, order).0);
        below[start as usize] = acc.value();
        for q in (0..start).rev() {
            acc.add(((q + 1) as f64).powf(-s));
            below[q as usize] = acc.value();
        }
        Ok(Self {
            s,
            order,
            start,
            below,
        })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// Cut-off above which Euler–Maclaurin is applied directly.
    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn zeta(&self) -> f64 {
        self.below[0]
    }

    /// T(s, q)
    pub fn at(&self, q: u64) -> f64 {
        match self.below.get(q as usize) {
            Some(&v) => v,
            None => em_tail(self.s, q, self.order).0,
        }
    }

    /// T(s, ⌊y⌋) = Σ_{n>y} n^{−s} for y ≥ 0.
    pub fn beyond(&self, y: f64) -> Result<f64> {
        Ok(self.at(floor_index(y)?))
    }
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Argument(format!("expected finite x > 0, got {x}")));
    }
    Ok(())
}

/// E₁(s, x) = Σ_{n>x} n^{−s}, continued to s < 1.
pub fn e1(s: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    HurwitzTail::new(s, DEFAULT_EM_ORDER)?.beyond(x)
}

/// x^{1−s}/(s−1) + x^{−s} ψ(x)
pub fn e1_asymptotic(s: f64, x: f64) -> Result<f64> {
    check_s(s)?;
    if !(x >= 1.0) || !x.is_finite() {
        return Err(Error::Argument(format!("expected finite x >= 1, got {x}")));
    }
    let pow = x.powf(-s);
    Ok(x * pow / (s - 1.0) + pow * psi(x))
}

/// E₂(s, x) = Σ_{n>x} d(n) n^{−s}, computed as
/// ζ(s)·T(s, ⌊x⌋) + Σ_{a≤x} a^{−s} T(s, ⌊x/a⌋).
pub fn e2(s: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    let tail = HurwitzTail::new(s, DEFAULT_EM_ORDER)?;
    e2_with(&tail, x)
}

fn e2_with(tail: &HurwitzTail, x: f64) -> Result<f64> {
    let n = floor_index(x)?;
    let s = tail.s();
    let mut acc = KahanSum::new();
    for a in (1..=n).rev() {
        acc.add((a as f64).powf(-s) * tail.at(n / a));
    }
    acc.add(tail.zeta() * tail.at(n));
    Ok(acc.value())
}

/// E₂(s, x) as ζ(s)² minus the partial sum of d(n) n^{−s} from the sieve.
/// Limited by cancellation once E₂ is far below ζ(s)².
pub fn e2_sieve(s: f64, x: f64, sieve: &DivisorSieve) -> Result<f64> {
    check_x(x)?;
    let zeta = zeta_real(s, DEFAULT_EM_ORDER)?;
    let n = floor_index(x)?;
    sieve.check_range(x)?;
    let mut acc = KahanSum::new();
    for k in (1..=n).rev() {
        acc.add(-(sieve.divisor_count(k) as f64) * (k as f64).powf(-s));
    }
    acc.add(zeta * zeta);
    Ok(acc.value())
}

/// 2 Σ_{n≤√x} n^{−s} E₁(s, x/n) + E₁(s, √x)²
pub fn hyperbola_identity_rhs(s: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    let tail = HurwitzTail::new(s, DEFAULT_EM_ORDER)?;
    hyperbola_with(&tail, x)
}

fn hyperbola_with(tail: &HurwitzTail, x: f64) -> Result<f64> {
    let n = floor_index(x)?;
    let r = floor_sqrt(x)?;
    let s = tail.s();
    let mut acc = KahanSum::new();
    for k in (1..=r).rev() {
        acc.add(2.0 * (k as f64).powf(-s) * tail.at(n / k));
    }
    let corner = tail.at(r);
    acc.add(corner * corner);
    Ok(acc.value())
}

/// (2x^{1−s}/(s−1)) Σ_{n≤√x} 1/n − x^{−s} Δ(x) + E₁(s, √x)²
pub fn afe_relation_rhs(s: f64, x: f64, sieve: &DivisorSieve) -> Result<f64> {
    check_x(x)?;
    let tail = HurwitzTail::new(s, DEFAULT_EM_ORDER)?;
    relation_with(&tail, x, sieve)
}

fn relation_with(tail: &HurwitzTail, x: f64, sieve: &DivisorSieve) -> Result<f64> {
    let s = tail.s();
    let delta = delta_direct(x, sieve)?;
    let corner = tail.beyond(x.sqrt())?;
    let pow = x.powf(-s);
    let mut acc = KahanSum::new();
    acc.add(2.0 * x * pow / (s - 1.0) * harmonic_sum(x.sqrt()));
    acc.add(-pow * delta);
    acc.add(corner * corner);
    Ok(acc.value())
}

/// One (s, x) cell of the tail comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AfeRecord {
    pub s: f64,
    pub x: f64,
    pub e1: f64,
    pub e2: f64,
    /// |E₂ − hyperbola_identity_rhs|
    pub hyperbola_residual: f64,
    /// E₂ − afe_relation_rhs
    pub relation_residual: f64,
    /// |relation_residual|·x^s/s
    pub scaled_residual: f64,
}

impl AfeRecord {
    /// hyperbola_residual / max(1, |E₂|)
    pub fn hyperbola_relative(&self) -> f64 {
        self.hyperbola_residual / self.e2.abs().max(1.0)
    }
}

pub fn afe_record(s: f64, x: f64, sieve: &DivisorSieve) -> Result<AfeRecord> {
    check_x(x)?;
    let tail = HurwitzTail::new(s, DEFAULT_EM_ORDER)?;
    afe_record_with(&tail, x, sieve)
}

/// Same as [`afe_record`] with a prepared tail for this s.
pub fn afe_record_with(tail: &HurwitzTail, x: f64, sieve: &DivisorSieve) -> Result<AfeRecord> {
    check_x(x)?;
    let s = tail.s();
    let e1 = tail.beyond(x)?;
    let e2 = e2_with(tail, x)?;
    let hyperbola = hyperbola_with(tail, x)?;
    let relation = relation_with(tail, x, sieve)?;
    let relation_residual = e2 - relation;
    Ok(AfeRecord {
        s,
        x,
        e1,
        e2,
        hyperbola_residual: (e2 - hyperbola).abs(),
        relation_residual,
        scaled_residual: relation_residual.abs() * x.powf(s) / s,
    })
}
