//! Integer substrate: the divisor function d(n), its summatory function D(x)
//! and harmonic sums.

use crate::error::{Error, Result};
use crate::periodic::psi;
use crate::summation::KahanSum;

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_43;

/// Table of d(n) for 1 ≤ n ≤ limit together with the running sums D(n).
///
/// Immutable once built, so a single sieve can be shared across threads.
#[derive(Debug, Clone)]
pub struct DivisorSieve {
    limit: u64,
    counts: Vec<u32>,
    prefix: Vec<u64>,
}

impl DivisorSieve {
    /// Build the table by adding one to every multiple of every m ≤ N.
    pub fn new(limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(Error::Argument("sieve limit must be at least 1".into()));
        }
        let len = usize::try_from(limit)
            .ok()
            .and_then(|n| n.checked_add(1))
            .ok_or(Error::Resource(usize::MAX))?;
        let mut counts: Vec<u32> = Vec::new();
        counts.try_reserve_exact(len).map_err(|_| Error::Resource(len))?;
        counts.resize(len, 0);
        let mut prefix: Vec<u64> = Vec::new();
        prefix.try_reserve_exact(len).map_err(|_| Error::Resource(len))?;

        let n = len - 1;
        for m in 1..=n {
            for multiple in (m..=n).step_by(m) {
                counts[multiple] += 1;
            }
        }
        let mut running = 0u64;
        for &c in &counts {
            running += u64::from(c);
            prefix.push(running);
        }
        Ok(Self {
            limit,
            counts,
            prefix,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// d(n) for n within the table; `None` outside it.
    pub fn get(&self, n: u64) -> Option<u32> {
        if n == 0 || n > self.limit {
            None
        } else {
            Some(self.counts[n as usize])
        }
    }

    /// d(n), falling back to trial division above the table limit.
    pub fn divisor_count(&self, n: u64) -> u64 {
        match self.get(n) {
            Some(c) => u64::from(c),
            None => divisor_count_trial(n),
        }
    }

    /// Slice view with `counts()[n] = d(n)`; index 0 holds 0.
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// D(x) = Σ_{n ≤ x} d(n), exactly.
    pub fn summatory(&self, x: f64) -> Result<u64> {
        let n = floor_index(x)?;
        self.summatory_int(n)
    }

    /// D(n) for an integer argument.
    pub fn summatory_int(&self, n: u64) -> Result<u64> {
        if n > self.limit {
            return Err(Error::Range {
                what: "x",
                value: n as f64,
                limit: self.limit as f64,
            });
        }
        Ok(self.prefix[n as usize])
    }

    /// Fail with a range error unless ⌊x⌋ is inside the table.
    pub fn check_range(&self, x: f64) -> Result<()> {
        self.summatory(x).map(|_| ())
    }
}

/// ⌊x⌋ as an unsigned integer for nonnegative finite x.
pub fn floor_index(x: f64) -> Result<u64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Argument(format!("expected finite x >= 0, got {x}")));
    }
    if x >= 2f64.powi(63) {
        return Err(Error::Range {
            what: "x",
            value: x,
            limit: 2f64.powi(63),
        });
    }
    Ok(x.floor() as u64)
}

/// Number of integers m ≥ 1 with m² ≤ x, i.e. ⌊√x⌋.
pub fn floor_sqrt(x: f64) -> Result<u64> {
    floor_index(x).map(u64::isqrt)
}

/// d(n) by factoring n with trial division. d(0) is reported as 0.
pub fn divisor_count_trial(mut n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut count = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        let mut exponent = 0;
        while n % p == 0 {
            n /= p;
            exponent += 1;
        }
        count *= exponent + 1;
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        count *= 2;
    }
    count
}

/// Σ_{n ≤ x} 1/n, summed from the smallest term upward with compensation.
///
/// Returns 0 for x < 1.
pub fn harmonic_sum(x: f64) -> f64 {
    match floor_index(x.max(0.0)) {
        Ok(n) => harmonic_number(n),
        Err(_) => f64::NAN,
    }
}

/// H_n = 1 + 1/2 + … + 1/n.
pub fn harmonic_number(n: u64) -> f64 {
    let mut acc = KahanSum::new();
    for k in (1..=n).rev() {
        acc.add(1.0 / k as f64);
    }
    acc.value()
}

/// Coefficients extracted from Σ_{n≤x} 1/n = log x + γ + γ₁(x)/x + γ₂(x)/x² + O(x⁻³).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicExpansion {
    pub x: f64,
    pub sum: f64,
    /// x·(sum − log x − γ); tends to −ψ(x).
    pub gamma1: f64,
    /// x·(γ₁(x) + ψ(x)), the next coefficient once −ψ(x) is taken as the
    /// first-order term; tends to −ψ₂(x).
    pub gamma2: f64,
}

pub fn harmonic_expansion(x: f64) -> Result<HarmonicExpansion> {
    if !x.is_finite() || x < 1.0 {
        return Err(Error::Argument(format!(
            "harmonic expansion needs x >= 1, got {x}"
        )));
    }
    let sum = harmonic_sum(x);
    let gamma1 = x * (sum - x.ln() - EULER_GAMMA);
    let gamma2 = x * (gamma1 + psi(x));
    Ok(HarmonicExpansion {
        x,
        sum,
        gamma1,
        gamma2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periodic::psi_r;
    use proptest::prelude::*;

    fn brute_divisors(n: u64) -> u64 {
        (1..=n).filter(|d| n % d == 0).count() as u64
    }

    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }

    #[test]
    fn small_sieves() {
        let s1 = DivisorSieve::new(1).unwrap();
        assert_eq!(&s1.counts()[1..], &[1]);
        assert_eq!(DivisorSieve::new(12).unwrap().get(12), Some(6));
        assert_eq!(DivisorSieve::new(10).unwrap().get(9), Some(3));
        assert!(DivisorSieve::new(0).is_err());
    }

    #[test]
    fn sieve_matches_brute_force_exhaustively() {
        let sieve = DivisorSieve::new(10_000).unwrap();
        for n in 1..=10_000u64 {
            assert_eq!(u64::from(sieve.get(n).unwrap()), brute_divisors(n), "n = {n}");
        }
    }

    #[test]
    fn primes_have_two_divisors() {
        let sieve = DivisorSieve::new(2000).unwrap();
        for p in (2..=2000u64).filter(|&p| brute_divisors(p) == 2) {
            assert_eq!(sieve.get(p), Some(2));
        }
    }

    #[test]
    fn divisor_count_falls_back_beyond_table() {
        let sieve = DivisorSieve::new(100).unwrap();
        assert_eq!(sieve.divisor_count(1), 1);
        assert_eq!(sieve.divisor_count(12), 6);
        assert_eq!(sieve.divisor_count(1_000_003), 2);
        assert_eq!(sieve.divisor_count(720_720), brute_divisors(720_720));
        assert_eq!(divisor_count_trial(1 << 20), 21);
    }

    #[test]
    fn summatory_values() {
        let sieve = DivisorSieve::new(100).unwrap();
        assert_eq!(sieve.summatory(0.9).unwrap(), 0);
        assert_eq!(sieve.summatory(10.0).unwrap(), 27);
        assert_eq!(sieve.summatory(10.7).unwrap(), 27);
        assert!(matches!(sieve.summatory(101.0), Err(Error::Range { .. })));
        assert!(sieve.summatory(-1.0).is_err());
        for n in 1..=100u64 {
            let step = sieve.summatory(n as f64).unwrap() - sieve.summatory(n as f64 - 1.0).unwrap();
            assert_eq!(step, u64::from(sieve.get(n).unwrap()));
        }
    }

    #[test]
    fn multiplicative_on_random_coprime_pairs() {
        let sieve = DivisorSieve::new(1_000_000).unwrap();
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut checked = 0;
        while checked < 1000 {
            let a = next() % 1000 + 1;
            let b = next() % 1000 + 1;
            if gcd(a, b) != 1 {
                continue;
            }
            assert_eq!(
                sieve.get(a * b).unwrap(),
                sieve.get(a).unwrap() * sieve.get(b).unwrap()
            );
            checked += 1;
        }
    }

    #[test]
    fn harmonic_small_values() {
        assert_eq!(harmonic_sum(1.0), 1.0);
        assert!((harmonic_sum(3.0) - 11.0 / 6.0).abs() < 1e-15);
        assert!((harmonic_sum(3.9) - 11.0 / 6.0).abs() < 1e-15);
        assert_eq!(harmonic_sum(0.5), 0.0);
    }

    #[test]
    fn harmonic_large_matches_pairwise_reference() {
        // Pairwise summation over exact reciprocals is an independent route.
        fn pairwise(lo: u64, hi: u64) -> f64 {
            if hi - lo < 64 {
                (lo..hi).map(|k| 1.0 / k as f64).sum()
            } else {
                let mid = lo + (hi - lo) / 2;
                pairwise(lo, mid) + pairwise(mid, hi)
            }
        }
        let reference = pairwise(1, 1_000_001);
        let value = harmonic_sum(1e6);
        assert!((value - reference).abs() <= 10.0 * f64::EPSILON * 1e6f64.ln());
        // And against the asymptotic expansion of H_n.
        let n = 1e6f64;
        let em = n.ln() + EULER_GAMMA + 0.5 / n - 1.0 / (12.0 * n * n);
        assert!((value - em).abs() < 1e-14);
    }

    #[test]
    fn euler_gamma_matches_harmonic_tail() {
        // γ = H_N − ln N − 1/(2N) + 1/(12N²) − 1/(120N⁴) + 1/(252N⁶) − …
        let n = 1000.0f64;
        let h = harmonic_number(1000);
        let gamma = h - n.ln() - 0.5 / n + 1.0 / (12.0 * n.powi(2)) - 1.0 / (120.0 * n.powi(4))
            + 1.0 / (252.0 * n.powi(6));
        assert!((gamma - EULER_GAMMA).abs() < 1e-14, "{gamma}");
    }

    #[test]
    fn gamma1_tends_to_minus_psi() {
        let e = harmonic_expansion(2.5).unwrap();
        assert!(e.gamma1.abs() < 1.0 / 2.5, "{}", e.gamma1);

        for n in [100.0, 1e4, 1e5] {
            let e = harmonic_expansion(n).unwrap();
            assert!((e.gamma1 - 0.5).abs() < 1.0 / n);
        }

        let x = 1e4 + 0.37;
        let e = harmonic_expansion(x).unwrap();
        assert!((e.gamma1 + psi(x)).abs() <= 1.0 / x);
    }

    #[test]
    fn gamma2_tends_to_minus_psi2() {
        for x in [500.25, 1234.5, 3000.0, 7777.7] {
            let e = harmonic_expansion(x).unwrap();
            assert!(
                (e.gamma2 + psi_r(x, 2).unwrap()).abs() < 1e-3,
                "x = {x}: {}",
                e.gamma2
            );
        }
    }

    #[test]
    fn gamma1_envelope_constant() {
        let mut worst = 0.0f64;
        let samples = 400;
        for i in 0..=samples {
            let x = 10f64.powf(1.0 + 5.0 * i as f64 / samples as f64);
            let e = harmonic_expansion(x).unwrap();
            worst = worst.max((e.gamma1 + psi(x)).abs() * x);
        }
        println!("fitted C for |gamma1 + psi| <= C/x: {worst:.6}");
        assert!(worst <= 1.0);
    }

    proptest! {
        #[test]
        fn trial_division_agrees_with_brute(n in 1u64..5000) {
            prop_assert_eq!(divisor_count_trial(n), brute_divisors(n));
        }
    }
}
