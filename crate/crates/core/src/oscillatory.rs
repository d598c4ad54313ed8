//! Integrals ∫ sin(2πvu/m)·g(u) du for many frequencies v at once.
//!
//! g is expanded in Legendre polynomials on each piece; the moments
//! ∫_{-1}^{1} e^{iκt} P_j(t) dt = 2 i^j j_j(κ) then reduce every frequency
//! to a short dot product with spherical Bessel values.

use std::f64::consts::PI;

use crate::gauss::{gauss_legendre_24, GaussLegendre};

/// Expansion order used for every piece.
pub const ORDER: usize = 24;

/// Fill `out[k] = j_k(κ)` for k < out.len(), κ ≥ 0.
pub fn spherical_bessel_j(kappa: f64, out: &mut [f64]) {
    let n = out.len();
    if n == 0 {
        return;
    }
    if kappa < 1.0 {
        series(kappa, out);
    } else if kappa > n as f64 {
        upward(kappa, out);
    } else {
        miller(kappa, out);
    }
}

fn series(kappa: f64, out: &mut [f64]) {
    let z = -0.5 * kappa * kappa;
    let mut prefactor = 1.0;
    for (k, slot) in out.iter_mut().enumerate() {
        if k > 0 {
            prefactor *= kappa / (2 * k + 1) as f64;
        }
        let mut term = 1.0;
        let mut total = 1.0;
        for l in 1..40 {
            term *= z / (l as f64 * (2 * k + 2 * l + 1) as f64);
            total += term;
            if term.abs() < 1e-17 * total.abs() {
                break;
            }
        }
        *slot = prefactor * total;
    }
}

fn upward(kappa: f64, out: &mut [f64]) {
    let (s, c) = kappa.sin_cos();
    out[0] = s / kappa;
    if out.len() > 1 {
        out[1] = s / (kappa * kappa) - c / kappa;
    }
    for k in 1..out.len() - 1 {
        out[k + 1] = (2 * k + 1) as f64 / kappa * out[k] - out[k - 1];
    }
}

fn miller(kappa: f64, out: &mut [f64]) {
    let n = out.len();
    let start = n + 30 + kappa.ceil() as usize;
    let mut above = 0.0;
    let mut current = 1e-200;
    for k in (1..=start).rev() {
        let below = (2 * k + 1) as f64 / kappa * current - above;
        above = current;
        current = below;
        if k - 1 < n {
            out[k - 1] = current;
        }
        if k == 1 {
            break;
        }
    }
    // `out` now holds j_k up to a common factor; fix it from j_0 or j_1.
    let (s, c) = kappa.sin_cos();
    let j0 = s / kappa;
    let j1 = s / (kappa * kappa) - c / kappa;
    let scale = if j0.abs() >= j1.abs() || n == 1 {
        j0 / out[0]
    } else {
        j1 / out[1]
    };
    for v in out.iter_mut() {
        *v *= scale;
    }
}

/// Legendre coefficients of g on [lo, hi].
#[derive(Debug, Clone)]
pub struct LegendreExpansion {
    pub lo: f64,
    pub hi: f64,
    pub coefficients: [f64; ORDER],
}

impl LegendreExpansion {
    /// Discrete projection onto P_0..P_{n−1} using the n-point Gauss rule,
    /// exact for polynomials of degree < n.
    pub fn fit<G: Fn(f64) -> f64>(g: G, lo: f64, hi: f64) -> Self {
        let rule: &GaussLegendre = gauss_legendre_24();
        let c = 0.5 * (lo + hi);
        let h = 0.5 * (hi - lo);
        let mut coefficients = [0.0; ORDER];
        for (&t, &w) in rule.nodes.iter().zip(&rule.weights) {
            let wg = w * g(c + h * t);
            let mut p_prev = 1.0;
            let mut p = t;
            coefficients[0] += wg;
            coefficients[1] += wg * t;
            for j in 1..ORDER - 1 {
                let next = ((2 * j + 1) as f64 * t * p - j as f64 * p_prev) / (j + 1) as f64;
                p_prev = p;
                p = next;
                coefficients[j + 1] += wg * p;
            }
        }
        for (j, coefficient) in coefficients.iter_mut().enumerate() {
            *coefficient *= (2 * j + 1) as f64 / 2.0;
        }
        Self {
            lo,
            hi,
            coefficients,
        }
    }

    /// Evaluate the expansion at u.
    pub fn eval(&self, u: f64) -> f64 {
        let t = (2.0 * u - self.lo - self.hi) / (self.hi - self.lo);
        let mut p_prev = 1.0;
        let mut p = t;
        let mut acc = self.coefficients[0] + self.coefficients[1] * t;
        for j in 1..ORDER - 1 {
            let next = ((2 * j + 1) as f64 * t * p - j as f64 * p_prev) / (j + 1) as f64;
            p_prev = p;
            p = next;
            acc += self.coefficients[j + 1] * p;
        }
        acc
    }

    /// ∫_lo^hi sin(2πvu/m)·g(u) du. The phase 2πv·c/m at the centre c is
    /// reduced modulo one period before the sine is taken.
    pub fn sine_moment(&self, v: u64, m: u64, bessel: &mut [f64; ORDER]) -> f64 {
        let c = 0.5 * (self.lo + self.hi);
        let h = 0.5 * (self.hi - self.lo);
        let mf = m as f64;
        let kappa = 2.0 * PI * v as f64 * h / mf;
        spherical_bessel_j(kappa, bessel);
        let centre_turns = (c - mf * (c / mf).floor()) / mf;
        let theta = 2.0 * PI * (v as f64 * centre_turns).fract();
        let (real, imag) = rotated_moment(&self.coefficients, bessel);
        let (s, co) = theta.sin_cos();
        2.0 * h * (s * real + co * imag)
    }
}

/// Real and imaginary parts of Σ_j c_j i^j j_j(κ).
fn rotated_moment(coefficients: &[f64; ORDER], bessel: &[f64; ORDER]) -> (f64, f64) {
    let mut real = 0.0;
    let mut imag = 0.0;
    for j in 0..ORDER {
        let term = coefficients[j] * bessel[j];
        match j % 4 {
            0 => real += term,
            1 => imag += term,
            2 => real -= term,
            _ => imag -= term,
        }
    }
    (real, imag)
}

/// Sum of Legendre coefficients over whole periods [km, (k+1)m]. Since
/// every such period sees the same κ = πv and the phase (−1)^v, one dot
/// product per v covers them all.
#[derive(Debug, Clone)]
pub struct PeriodSum {
    m: u64,
    coefficients: [f64; ORDER],
    periods: usize,
}

impl PeriodSum {
    pub fn new(m: u64) -> Self {
        Self {
            m,
            coefficients: [0.0; ORDER],
            periods: 0,
        }
    }

    pub fn add(&mut self, expansion: &LegendreExpansion) {
        for (acc, c) in self.coefficients.iter_mut().zip(&expansion.coefficients) {
            *acc += c;
        }
        self.periods += 1;
    }

    pub fn periods(&self) -> usize {
        self.periods
    }

    /// Σ over the periods of ∫ sin(2πvu/m)·g(u) du.
    pub fn sine_moment(&self, v: u64, bessel: &mut [f64; ORDER]) -> f64 {
        if self.periods == 0 {
            return 0.0;
        }
        spherical_bessel_j(PI * v as f64, bessel);
        let (_, imag) = rotated_moment(&self.coefficients, bessel);
        let sign = if v % 2 == 0 { 1.0 } else { -1.0 };
        sign * self.m as f64 * imag
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::GaussLegendre;

    fn bessel_by_quadrature(k: usize, kappa: f64) -> f64 {
        // j_k(κ) = (1/2) ∫_{-1}^{1} cos(κt − kπ/2) P_k(t) dt, resolved with a
        // dense composite rule.
        let rule = GaussLegendre::new(20);
        let pieces = 200;
        let mut acc = 0.0;
        for i in 0..pieces {
            let lo = -1.0 + 2.0 * i as f64 / pieces as f64;
            let hi = lo + 2.0 / pieces as f64;
            acc += rule.integrate(
                |t| {
                    let (p, _) = crate::gauss::legendre_with_derivative(k, t);
                    (kappa * t - k as f64 * PI / 2.0).cos() * p
                },
                lo,
                hi,
            );
        }
        0.5 * acc
    }

    #[test]
    fn bessel_matches_integral_representation() {
        for &kappa in &[1e-6, 0.3, 0.99, 1.0, 2.5, 7.0, 23.9, 24.5, 31.4159, 100.0, 1234.5] {
            let mut out = [0.0; ORDER];
            spherical_bessel_j(kappa, &mut out);
            for (k, &got) in out.iter().enumerate() {
                let expected = bessel_by_quadrature(k, kappa);
                assert!(
                    (got - expected).abs() < 1e-13,
                    "k = {k}, κ = {kappa}: {got} vs {expected}"
                );
            }
        }
    }

    #[test]
    fn bessel_closed_forms() {
        let mut out = [0.0; 3];
        spherical_bessel_j(2.0, &mut out);
        let (s, c) = 2f64.sin_cos();
        assert!((out[0] - s / 2.0).abs() < 1e-15);
        assert!((out[1] - (s / 4.0 - c / 2.0)).abs() < 1e-15);
        assert!((out[2] - ((3.0 / 8.0 - 0.5) * s - 3.0 / 4.0 * c)).abs() < 1e-15);
    }

    #[test]
    fn expansion_reproduces_smooth_function() {
        let e = LegendreExpansion::fit(|u: f64| 1.0 / (u * u), 4.0, 6.0);
        for u in [4.0, 4.3, 5.0, 5.9, 6.0] {
            assert!((e.eval(u) - 1.0 / (u * u)).abs() < 1e-15);
        }
    }

    #[test]
    fn sine_moment_matches_direct_quadrature() {
        let g = |u: f64| (-u / 50.0).exp() / 50.0 + 1.0 / u;
        let rule = GaussLegendre::new(40);
        for &(lo, hi, m) in &[(9.0, 12.0, 3u64), (10.3, 11.7, 2), (50.0, 57.0, 7), (2.5, 3.0, 1)] {
            let e = LegendreExpansion::fit(g, lo, hi);
            let mut bessel = [0.0; ORDER];
            for v in [1u64, 2, 5, 17, 60] {
                let omega = 2.0 * PI * v as f64 / m as f64;
                let pieces = 8 * v as usize;
                let mut direct = 0.0;
                for i in 0..pieces {
                    let a = lo + (hi - lo) * i as f64 / pieces as f64;
                    let b = lo + (hi - lo) * (i + 1) as f64 / pieces as f64;
                    direct += rule.integrate(|u| (omega * u).sin() * g(u), a, b);
                }
                let got = e.sine_moment(v, m, &mut bessel);
                assert!((got - direct).abs() < 1e-13, "[{lo}, {hi}] m = {m} v = {v}: {got} vs {direct}");
            }
        }
    }

    #[test]
    fn period_sum_matches_piecewise_moments() {
        let g = |u: f64| u.ln();
        let m = 4u64;
        let mut sum = PeriodSum::new(m);
        let mut pieces = Vec::new();
        for k in 3..9u64 {
            let e = LegendreExpansion::fit(g, (k * m) as f64, ((k + 1) * m) as f64);
            sum.add(&e);
            pieces.push(e);
        }
        let mut bessel = [0.0; ORDER];
        for v in [1u64, 2, 3, 10, 101] {
            let separate: f64 = pieces.iter().map(|e| e.sine_moment(v, m, &mut bessel)).sum();
            let combined = sum.sine_moment(v, &mut bessel);
            assert!((separate - combined).abs() < 1e-13, "v = {v}");
        }
    }
}
