//! Adaptive Gauss–Kronrod quadrature over a union of smooth pieces.
//!
//! Integrands in this crate are smooth between known points (squares of
//! integers, multiples of m) and jump or kink at them. Every piece starts
//! as its own panel and the panel with the largest error estimate is
//! bisected until the global estimate meets the tolerance.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::gauss::gauss_kronrod_21;
use crate::summation::KahanSum;

/// Tolerances and limits for the quadrature engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum number of bisections of any initial piece.
    pub max_depth: u32,
    /// Truncation V of the Fourier series in the Fourier-mode tail term.
    pub fourier_terms: u64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_depth: 40,
            fourier_terms: 1000,
        }
    }
}

impl QuadConfig {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            abs_tol: tol,
            rel_tol: tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::Argument(format!(
                "quadrature tolerances must be positive (abs {}, rel {})",
                self.abs_tol, self.rel_tol
            )));
        }
        if self.max_depth == 0 || self.max_depth > 60 {
            return Err(Error::Argument(format!(
                "max_depth must lie in 1..=60, got {}",
                self.max_depth
            )));
        }
        if self.fourier_terms == 0 {
            return Err(Error::Argument("fourier_terms must be at least 1".into()));
        }
        Ok(())
    }
}

/// An interval on which the integrand is smooth. `label` is handed back
/// to the integrand so it can evaluate piece-local formulas (for instance
/// ψ(√u) = √u − k − 1/2 on [k², (k+1)²]) without recomputing a floor at
/// nodes close to the ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub lo: f64,
    pub hi: f64,
    pub label: i64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    /// Panels in the final partition.
    pub panels: usize,
}

struct Panel {
    lo: f64,
    hi: f64,
    label: i64,
    depth: u32,
    value: f64,
    error: f64,
    at_roundoff: bool,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn panel<F: Fn(i64, f64) -> f64>(g: &F, lo: f64, hi: f64, label: i64, depth: u32) -> Panel {
    let est = gauss_kronrod_21(&|u| g(label, u), lo, hi);
    Panel {
        lo,
        hi,
        label,
        depth,
        value: est.value,
        error: est.error,
        at_roundoff: est.at_roundoff,
    }
}

/// ∫ g over the union of `pieces`, with global error ≤ max(abs_tol, rel_tol·|I|)
/// unless every remaining panel is limited by rounding.
pub fn integrate_pieces<F>(g: F, pieces: &[Piece], cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(i64, f64) -> f64,
{
    cfg.validate()?;
    let mut heap = BinaryHeap::with_capacity(pieces.len() * 2);
    let mut done: Vec<Panel> = Vec::new();
    let mut value = 0.0;
    let mut error = 0.0;
    for piece in pieces {
        if !(piece.lo.is_finite() && piece.hi.is_finite()) {
            return Err(Error::Argument(format!(
                "non-finite piece [{}, {}]",
                piece.lo, piece.hi
            )));
        }
        if piece.hi <= piece.lo {
            continue;
        }
        let p = panel(&g, piece.lo, piece.hi, piece.label, 0);
        value += p.value;
        error += p.error;
        heap.push(p);
    }

    loop {
        let target = cfg.abs_tol.max(cfg.rel_tol * value.abs());
        if error <= target {
            break;
        }
        let Some(worst) = heap.pop() else { break };
        if worst.at_roundoff {
            done.push(worst);
            continue;
        }
        if worst.depth >= cfg.max_depth {
            return Err(Error::Tolerance {
                requested: target,
                achieved: error,
                lo: worst.lo,
                hi: worst.hi,
                context: None,
            });
        }
        let mid = 0.5 * (worst.lo + worst.hi);
        let left = panel(&g, worst.lo, mid, worst.label, worst.depth + 1);
        let right = panel(&g, mid, worst.hi, worst.label, worst.depth + 1);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    let panels = heap.len() + done.len();
    let mut total = KahanSum::new();
    let mut total_error = 0.0;
    for p in heap.iter().chain(done.iter()) {
        total.add(p.value);
        total_error += p.error;
    }
    Ok(QuadResult {
        value: total.value(),
        error: total_error,
        panels,
    })
}

/// ∫_a^b g(u) du, splitting at the given interior points.
///
/// Breakpoints outside (a, b) are ignored; they need not be sorted or
/// distinct.
pub fn quad_with_breakpoints<F>(
    g: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    cfg: &QuadConfig,
) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    if !(a.is_finite() && b.is_finite()) || b < a {
        return Err(Error::Argument(format!("invalid interval [{a}, {b}]")));
    }
    let mut cuts: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&p| p > a && p < b)
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut pieces = Vec::with_capacity(cuts.len() + 1);
    let mut lo = a;
    for &c in cuts.iter().chain(std::iter::once(&b)) {
        pieces.push(Piece { lo, hi: c, label: 0 });
        lo = c;
    }
    integrate_pieces(|_, u| g(u), &pieces, cfg)
}
