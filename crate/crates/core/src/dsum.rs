//! Divisor-weighted summation Σ_{a<n≤b} d(n) f(n) as eight integral and
//! boundary terms.
//!
//! Writing D(u) = u log u + 1/4 − 2u ∫_1^{√u} ψ(t)/t² dt − ψ²(√u) + A(u) and
//! integrating f against each part gives
//!
//! ```text
//! t1 =  ∫ (log u + 2γ) f(u) du
//! t2 = −2 ∫ f(u) ψ₂(√u)/u du
//! t3 = −∫ f(u) ψ(√u)/√u du
//! t4 =  4 ∫ f(u) (∫_{√u}^∞ ψ₂(t)/t³ dt) du
//! t5 = −f(b)ψ²(√b) + f(a)ψ²(√a)
//! t6 =  ∫ ψ²(√u) f′(u) du
//! t7 =  2f(a) Σ_{m≤√a} ψ(a/m) − 2f(b) Σ_{m≤√b} ψ(b/m)
//! t8 =  2 Σ_{m≤√b} ∫_{max(a,m²)}^b ψ(u/m) f′(u) du
//! ```
//!
//! All integrals run over [a, b]. The Stieltjes integrals behind them are
//! evaluated as ordinary integrals split where the integrator jumps or
//! kinks: at squares for the ψ(√u) terms, at multiples of m inside t8.
//! t8 can also be evaluated from the Fourier series of ψ truncated at V,
//! −(2/π) Σ_m Σ_{v≤V} (1/v) ∫ sin(2πvu/m) f′(u) du.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::arith::{floor_index, floor_sqrt, DivisorSieve, EULER_GAMMA};
use crate::error::{Error, Result};
use crate::oscillatory::{LegendreExpansion, PeriodSum, ORDER};
use crate::periodic::{bernoulli_scaled, psi, Psi2TailTable};
use crate::quad::{integrate_pieces, Piece, QuadConfig};
use crate::remainder::a_of;
use crate::summation::KahanSum;

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A continuously differentiable f with its derivative, on [lower, upper].
#[derive(Clone)]
pub struct SmoothFn {
    name: String,
    value: RealFn,
    derivative: RealFn,
    lower: f64,
    upper: f64,
}

impl fmt::Debug for SmoothFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SmoothFn")
            .field("name", &self.name)
            .field("lower", &self.lower)
            .field("upper", &self.upper)
            .finish()
    }
}

impl SmoothFn {
    /// Requires 0 < lower ≤ upper; lower = upper is the empty range.
    pub fn new<F, D>(name: impl Into<String>, value: F, derivative: D, lower: f64, upper: f64) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        check_interval(lower, upper)?;
        Ok(Self {
            name: name.into(),
            value: Arc::new(value),
            derivative: Arc::new(derivative),
            lower,
            upper,
        })
    }

    /// Same function pair on another interval.
    pub fn on(&self, lower: f64, upper: f64) -> Result<Self> {
        check_interval(lower, upper)?;
        Ok(Self {
            lower,
            upper,
            ..self.clone()
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    #[inline]
    pub fn eval(&self, u: f64) -> f64 {
        (self.value)(u)
    }

    #[inline]
    pub fn deriv(&self, u: f64) -> f64 {
        (self.derivative)(u)
    }

    /// Largest |centred difference − f′| / (1 + |f′|) over `samples` interior
    /// points, with step h = 1e-5·(1 + |u|). Of order h² for a consistent pair.
    pub fn derivative_mismatch(&self, samples: usize) -> f64 {
        let (a, b) = (self.lower, self.upper);
        (1..=samples)
            .map(|i| {
                let u = a + (b - a) * i as f64 / (samples + 1) as f64;
                let h = (1e-5 * (1.0 + u.abs())).min(0.5 * u);
                let fd = (self.eval(u + h) - self.eval(u - h)) / (2.0 * h);
                let exact = self.deriv(u);
                (fd - exact).abs() / (1.0 + exact.abs())
            })
            .fold(0.0, f64::max)
    }
}

fn check_interval(lower: f64, upper: f64) -> Result<()> {
    if !(lower.is_finite() && upper.is_finite()) || !(lower > 0.0) || upper < lower {
        return Err(Error::Argument(format!(
            "need 0 < a <= b, got [{lower}, {upper}]"
        )));
    }
    Ok(())
}

/// Names accepted by [`registered`].
pub const REGISTERED: [&str; 5] = ["one", "id", "inv", "log", "expdecay"];

/// Built-in test functions: 1, u, 1/u, log u and e^{−u/50}.
pub fn registered(name: &str, lower: f64, upper: f64) -> Result<SmoothFn> {
    match name {
        "one" => SmoothFn::new(name, |_| 1.0, |_| 0.0, lower, upper),
        "id" => SmoothFn::new(name, |u| u, |_| 1.0, lower, upper),
        "inv" => SmoothFn::new(name, |u| 1.0 / u, |u| -1.0 / (u * u), lower, upper),
        "log" => SmoothFn::new(name, f64::ln, |u| 1.0 / u, lower, upper),
        "expdecay" => SmoothFn::new(
            name,
            |u| (-u / 50.0).exp(),
            |u| -(-u / 50.0).exp() / 50.0,
            lower,
            upper,
        ),
        other => Err(Error::Argument(format!(
            "unknown function '{other}', expected one of {}",
            REGISTERED.join(", ")
        ))),
    }
}

/// Which form of the t8 term to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TailMode {
    /// Sawtooth integrals split at multiples of m. Exact up to quadrature.
    Sawtooth,
    /// Fourier series of ψ truncated at `QuadConfig::fourier_terms`.
    Fourier,
}

impl fmt::Display for TailMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TailMode::Sawtooth => "sawtooth",
            TailMode::Fourier => "fourier",
        })
    }
}

/// Right-hand side term by term, with the directly summed left-hand side.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorSumBreakdown {
    pub lower: f64,
    pub upper: f64,
    pub tail_mode: TailMode,
    /// t1..t8 in order.
    pub terms: [f64; 8],
    pub rhs_total: f64,
    pub lhs: f64,
    /// lhs − rhs_total
    pub residual: f64,
}

/// Both tail modes side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorSumReport {
    pub lhs: f64,
    pub sawtooth: DivisorSumBreakdown,
    pub fourier: DivisorSumBreakdown,
    /// Sawtooth t8 minus Fourier t8.
    pub tail_discrepancy: f64,
}

/// Σ_{a<n≤b} d(n) f(n), compensated.
pub fn lhs_divisor_sum(f: &SmoothFn, sieve: &DivisorSieve) -> Result<f64> {
    let first = floor_index(f.lower())? + 1;
    let last = floor_index(f.upper())?;
    sieve.check_range(f.upper())?;
    let mut acc = KahanSum::new();
    for n in first..=last {
        acc.add(sieve.divisor_count(n) as f64 * f.eval(n as f64));
    }
    Ok(acc.value())
}

/// Evaluate t1..t8 and compare with the direct sum.
pub fn rhs_divisor_sum(
    f: &SmoothFn,
    sieve: &DivisorSieve,
    cfg: &QuadConfig,
    mode: TailMode,
) -> Result<DivisorSumBreakdown> {
    cfg.validate()?;
    let lhs = lhs_divisor_sum(f, sieve)?;
    let common = common_terms(f, cfg)?;
    let tail = tail_term(f, cfg, mode)?;
    Ok(assemble(f, lhs, common, tail, mode))
}

/// Run both tail modes and report the t8 discrepancy.
pub fn verify_divisor_sum(f: &SmoothFn, sieve: &DivisorSieve, cfg: &QuadConfig) -> Result<DivisorSumReport> {
    cfg.validate()?;
    let lhs = lhs_divisor_sum(f, sieve)?;
    let common = common_terms(f, cfg)?;
    let saw = tail_term(f, cfg, TailMode::Sawtooth)?;
    let fourier = tail_term(f, cfg, TailMode::Fourier)?;
    Ok(DivisorSumReport {
        lhs,
        sawtooth: assemble(f, lhs, common, saw, TailMode::Sawtooth),
        fourier: assemble(f, lhs, common, fourier, TailMode::Fourier),
        tail_discrepancy: saw - fourier,
    })
}

fn assemble(f: &SmoothFn, lhs: f64, common: [f64; 7], tail: f64, mode: TailMode) -> DivisorSumBreakdown {
    let mut terms = [0.0; 8];
    terms[..7].copy_from_slice(&common);
    terms[7] = tail;
    let rhs_total = terms.iter().copied().collect::<KahanSum>().value();
    DivisorSumBreakdown {
        lower: f.lower(),
        upper: f.upper(),
        tail_mode: mode,
        terms,
        rhs_total,
        lhs,
        residual: lhs - rhs_total,
    }
}

/// Pieces of [a, b] between consecutive squares, labelled by k with
/// k² ≤ u ≤ (k+1)² on the piece.
pub fn square_pieces(a: f64, b: f64) -> Result<Vec<Piece>> {
    let mut pieces = Vec::new();
    if b <= a {
        return Ok(pieces);
    }
    let mut k = floor_sqrt(a)?;
    let mut lo = a;
    loop {
        let next = ((k + 1) * (k + 1)) as f64;
        let hi = next.min(b);
        pieces.push(Piece { lo, hi, label: k as i64 });
        if next >= b {
            break;
        }
        lo = next;
        k += 1;
    }
    Ok(pieces)
}

/// Pieces of [lo, hi] between consecutive multiples of m, as (lo, hi, k)
/// with km ≤ u ≤ (k+1)m on the piece.
pub fn multiple_pieces(lo: f64, hi: f64, m: u64) -> Result<Vec<(f64, f64, u64)>> {
    let mut pieces = Vec::new();
    if hi <= lo {
        return Ok(pieces);
    }
    let mut k = floor_index(lo)? / m;
    let mut start = lo;
    loop {
        let next = ((k + 1) * m) as f64;
        let end = next.min(hi);
        pieces.push((start, end, k));
        if next >= hi {
            break;
        }
        start = next;
        k += 1;
    }
    Ok(pieces)
}

/// ψ(√u) on the piece labelled k.
#[inline]
fn psi_sqrt(u: f64, k: i64) -> f64 {
    u.sqrt() - k as f64 - 0.5
}

/// ψ₂(√u) on the piece labelled k.
#[inline]
fn psi2_sqrt(u: f64, k: i64) -> f64 {
    bernoulli_scaled(u.sqrt() - k as f64, 2)
}

fn common_terms(f: &SmoothFn, cfg: &QuadConfig) -> Result<[f64; 7]> {
    let (a, b) = (f.lower(), f.upper());
    let squares = square_pieces(a, b)?;
    let whole = [Piece { lo: a, hi: b, label: 0 }];
    let label = |i: usize| move |e: Error| e.in_context(format!("term t{i}"));

    let t1 = integrate_pieces(|_, u| (u.ln() + 2.0 * EULER_GAMMA) * f.eval(u), &whole, cfg)
        .map_err(label(1))?
        .value;
    let t2 = integrate_pieces(|k, u| -2.0 * f.eval(u) * psi2_sqrt(u, k) / u, &squares, cfg)
        .map_err(label(2))?
        .value;
    let t3 = integrate_pieces(|k, u| -f.eval(u) * psi_sqrt(u, k) / u.sqrt(), &squares, cfg)
        .map_err(label(3))?
        .value;

    let tail_tol = (cfg.abs_tol / (4.0 * (b - a).max(1.0))).clamp(1e-18, 1e-16);
    let table = Psi2TailTable::new(tail_tol).map_err(label(4))?;
    let t4 = integrate_pieces(
        |_, u| 4.0 * f.eval(u) * table.eval(u.sqrt()).unwrap_or(f64::NAN),
        &squares,
        cfg,
    )
    .map_err(label(4))?
    .value;
    if !t4.is_finite() {
        return Err(Error::Argument("tail integral failed inside term t4".into()));
    }

    let ps = |u: f64| {
        let p = psi(u.sqrt());
        p * p
    };
    let t5 = -f.eval(b) * ps(b) + f.eval(a) * ps(a);
    let t6 = integrate_pieces(
        |k, u| {
            let p = psi_sqrt(u, k);
            p * p * f.deriv(u)
        },
        &squares,
        cfg,
    )
    .map_err(label(6))?
    .value;
    let t7 = f.eval(b) * a_of(b) - f.eval(a) * a_of(a);
    Ok([t1, t2, t3, t4, t5, t6, t7])
}

fn tail_term(f: &SmoothFn, cfg: &QuadConfig, mode: TailMode) -> Result<f64> {
    match mode {
        TailMode::Sawtooth => sawtooth_tail(f, cfg),
        TailMode::Fourier => fourier_tail(f, cfg),
    }
    .map_err(|e| e.in_context("term t8"))
}

const LABEL_SHIFT: u32 = 32;

fn sawtooth_tail(f: &SmoothFn, cfg: &QuadConfig) -> Result<f64> {
    let (a, b) = (f.lower(), f.upper());
    let top = floor_sqrt(b)?;
    let mut pieces = Vec::new();
    for m in 1..=top {
        let lo = a.max((m * m) as f64);
        for (p, q, k) in multiple_pieces(lo, b, m)? {
            pieces.push(Piece {
                lo: p,
                hi: q,
                label: ((m as i64) << LABEL_SHIFT) | k as i64,
            });
        }
    }
    let value = integrate_pieces(
        |label, u| {
            let m = (label >> LABEL_SHIFT) as f64;
            let k = (label & ((1 << LABEL_SHIFT) - 1)) as f64;
            2.0 * (u / m - k - 0.5) * f.deriv(u)
        },
        &pieces,
        cfg,
    )?
    .value;
    Ok(value)
}

fn fourier_tail(f: &SmoothFn, cfg: &QuadConfig) -> Result<f64> {
    let (a, b) = (f.lower(), f.upper());
    let top = floor_sqrt(b)?;
    let terms = cfg.fourier_terms;
    let per_m: Vec<f64> = (1..=top)
        .into_par_iter()
        .map(|m| -> Result<f64> {
            let lo = a.max((m * m) as f64);
            let mut periods = PeriodSum::new(m);
            let mut partial = Vec::new();
            for (p, q, _) in multiple_pieces(lo, b, m)? {
                let expansion = LegendreExpansion::fit(|u| f.deriv(u), p, q);
                if q - p == m as f64 {
                    periods.add(&expansion);
                } else {
                    partial.push(expansion);
                }
            }
            let mut bessel = [0.0; ORDER];
            let mut acc = KahanSum::new();
            for v in (1..=terms).rev() {
                let mut moment = periods.sine_moment(v, &mut bessel);
                for e in &partial {
                    moment += e.sine_moment(v, m, &mut bessel);
                }
                acc.add(moment / v as f64);
            }
            Ok(-2.0 / PI * acc.value())
        })
        .collect::<Result<_>>()?;
    Ok(per_m.into_iter().collect::<KahanSum>().value())
}
