//! Certified evaluation of the Riemann zeta function, the prime zeta
//! function, the k-almost-prime zeta sums S_k(s) = Σ_{Ω(n)=k} n^{-s}, and the
//! square-root sum F(σ) = Σ_{k≥1} sqrt(S_k(2σ)) whose level sets define the
//! abscissa bounds.

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::primes::moebius;

/// Truncation orders for the certified series evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    /// Direct terms summed before the Euler–Maclaurin correction of ζ.
    pub zeta_terms: u32,
    /// Truncation order M of the Möbius series for the prime zeta function.
    pub moebius_terms: u32,
    /// Cutoff for the outer sum of F: stop once the certified geometric tail
    /// bound drops below this.
    pub k_tail_tolerance: f64,
}

impl TruncationPolicy {
    /// Tighten the policy one notch: double the term counts and halve the
    /// tail tolerance.
    pub fn tightened(self) -> Self {
        TruncationPolicy {
            zeta_terms: self.zeta_terms.saturating_mul(2),
            moebius_terms: self.moebius_terms.saturating_mul(2),
            k_tail_tolerance: self.k_tail_tolerance * 0.5,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.zeta_terms < 2 || self.moebius_terms == 0 {
            return Err(Error::InvalidArgument("truncation orders must be positive".into()));
        }
        if !(self.k_tail_tolerance > 0.0 && self.k_tail_tolerance < 1.0) {
            return Err(Error::InvalidArgument("k_tail_tolerance must lie in (0, 1)".into()));
        }
        Ok(())
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        // Overshoots the 4-decimal targets with wide margin at negligible cost.
        TruncationPolicy { zeta_terms: 64, moebius_terms: 64, k_tail_tolerance: 1e-14 }
    }
}

fn require_domain(s: f64) -> Result<()> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Domain(format!("zeta sums require s > 1, got {s}")));
    }
    Ok(())
}

/// Enclosure of ζ(s) − 1 for real s > 1, by direct summation plus the
/// Euler–Maclaurin tail through the B₄ term. The magnitude of the first
/// omitted (B₆) term bounds the truncation remainder.
///
/// Kept separate from [`riemann_zeta`] so that for large s the error radius
/// scales with the tiny result instead of flooring at epsilon times 1.
pub fn riemann_zeta_minus_one(s: f64, policy: &TruncationPolicy) -> Result<Enclosure> {
    require_domain(s)?;
    policy.validate()?;
    let n = policy.zeta_terms as f64;

    let mut sum = Enclosure::exact(0.0);
    let mut m = 2.0;
    while m < n {
        sum = sum.add(Enclosure::exact(m.powf(-s)));
        m += 1.0;
    }

    // Tail from the boundary N: N^{1-s}/(s-1) + N^{-s}/2
    //   + s N^{-s-1}/12 - s(s+1)(s+2) N^{-s-3}/720.
    let tail = n.powf(1.0 - s) / (s - 1.0)
        + 0.5 * n.powf(-s)
        + s * n.powf(-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * n.powf(-s - 3.0) / 720.0;
    let remainder = s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * n.powf(-s - 5.0) / 30240.0;

    Ok(sum.add(Enclosure::exact(tail)).widen(remainder.abs()))
}

/// Enclosure of ζ(s) for real s > 1.
pub fn riemann_zeta(s: f64, policy: &TruncationPolicy) -> Result<Enclosure> {
    Ok(Enclosure::exact(1.0).add(riemann_zeta_minus_one(s, policy)?))
}

/// Enclosure of the prime zeta function P(s) = Σ_p p^{-s} for real s > 1,
/// via P(s) = Σ_{m≥1} μ(m)/m · log ζ(ms) truncated at M = moebius_terms.
///
/// Tail bound: log ζ(t) ≤ ζ(t) − 1 ≤ 2^{-t}(1 + 2/(t−1)), summed
/// geometrically over m > M.
pub fn prime_zeta(s: f64, policy: &TruncationPolicy) -> Result<Enclosure> {
    require_domain(s)?;
    policy.validate()?;
    let m_max = policy.moebius_terms as u64;

    let mut sum = Enclosure::exact(0.0);
    for m in 1..=m_max {
        let mu = moebius(m);
        if mu == 0 {
            continue;
        }
        let z1 = riemann_zeta_minus_one(m as f64 * s, policy)?;
        sum = sum.add(z1.ln_1p()?.scale(mu as f64 / m as f64));
    }

    let t_min = (m_max + 1) as f64 * s;
    let c = 1.0 + 2.0 / (t_min - 1.0);
    let tail = c / (m_max + 1) as f64 * 2f64.powf(-t_min) / (1.0 - 2f64.powf(-s));
    Ok(sum.widen(tail))
}

/// Enclosures of S_0(s), …, S_k(s), where S_k(s) = Σ_{Ω(n)=k} n^{-s}, via the
/// power-sum recurrence k·S_k = Σ_{j=1..k} P(js)·S_{k-j} with S_0 = 1.
pub fn almost_prime_zeta_upto(k: u32, s: f64, policy: &TruncationPolicy) -> Result<Vec<Enclosure>> {
    require_domain(s)?;
    let mut p = Vec::with_capacity(k as usize + 1);
    p.push(Enclosure::exact(0.0)); // unused index 0
    for j in 1..=k {
        p.push(prime_zeta(j as f64 * s, policy)?);
    }
    let mut sums = vec![Enclosure::exact(1.0)];
    for kk in 1..=k as usize {
        let mut acc = Enclosure::exact(0.0);
        for j in 1..=kk {
            acc = acc.add(p[j].mul(sums[kk - j]));
        }
        sums.push(acc.scale(1.0 / kk as f64));
    }
    Ok(sums)
}

/// Enclosure of S_k(s) = Σ_{Ω(n)=k} n^{-s}; S_0 = 1 exactly.
pub fn almost_prime_zeta(k: u32, s: f64, policy: &TruncationPolicy) -> Result<Enclosure> {
    Ok(almost_prime_zeta_upto(k, s, policy)?[k as usize])
}

/// Hard cap on the outer sum of F; never reached for σ in the solver bracket.
const MAX_OUTER_TERMS: u32 = 20_000;

/// Enclosure of F(σ) = Σ_{k≥1} sqrt(S_k(2σ)).
///
/// Requires the upper edge of P(2σ) to be below 1. The outer sum stops at the
/// first K where the geometric tail bound sqrt(S_K(2σ))·q/(1−q), with
/// q = sqrt(upper edge of P(2σ)), falls below `policy.k_tail_tolerance`; that
/// bound is added to the radius. The tail rests on S_{k+1}(s) ≤ P(s)·S_k(s):
/// every (k+1)-almost prime factors as a prime times a k-almost prime.
pub fn bohr_sum(sigma: f64, policy: &TruncationPolicy) -> Result<Enclosure> {
    let s = 2.0 * sigma;
    require_domain(s).map_err(|_| {
        Error::Domain(format!("bohr_sum requires 2σ > 1, got σ = {sigma}"))
    })?;
    let p1 = prime_zeta(s, policy)?;
    if !(p1.upper() < 1.0) {
        return Err(Error::Domain(format!(
            "bohr_sum requires P(2σ) < 1; at σ = {sigma} the enclosure is {p1}"
        )));
    }
    let q = p1.upper().sqrt();
    let geometric = q / (1.0 - q);

    let mut p_cache = vec![Enclosure::exact(0.0), p1];
    let mut s_k = vec![Enclosure::exact(1.0)];
    let mut total = Enclosure::exact(0.0);
    for k in 1..=MAX_OUTER_TERMS as usize {
        while p_cache.len() <= k {
            p_cache.push(prime_zeta(p_cache.len() as f64 * s, policy)?);
        }
        let mut acc = Enclosure::exact(0.0);
        for j in 1..=k {
            acc = acc.add(p_cache[j].mul(s_k[k - j]));
        }
        let sk = acc.scale(1.0 / k as f64);
        s_k.push(sk);
        let root = sk.sqrt()?;
        total = total.add(root);
        let tail = root.upper() * geometric;
        if tail <= policy.k_tail_tolerance {
            return Ok(total.widen(tail));
        }
    }
    Err(Error::Precision(format!(
        "outer sum of F did not reach the tail tolerance within {MAX_OUTER_TERMS} terms at σ = {sigma}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    const ZETA_2: f64 = 1.6449340668482264; // π²/6
    const ZETA_4: f64 = 1.0823232337111382; // π⁴/90

    // Independent oracle: partial sum to 10^6 plus integral tail bound.
    fn zeta_oracle(s: f64) -> (f64, f64) {
        let n = 1_000_000u64;
        let mut sum = 0.0;
        for m in (1..=n).rev() {
            sum += (m as f64).powf(-s);
        }
        let tail = (n as f64).powf(1.0 - s) / (s - 1.0);
        (sum, tail + 1e-10 * sum)
    }

    #[test]
    fn riemann_zeta_matches_oracle() {
        let pol = TruncationPolicy::default();
        for s in [2.0, 4.0] {
            let z = riemann_zeta(s, &pol).unwrap();
            let (ov, ot) = zeta_oracle(s);
            assert!(
                (z.value() - ov).abs() <= z.error() + ot,
                "zeta({s}) = {z}, oracle {ov} ± {ot}"
            );
        }
        let z2 = riemann_zeta(2.0, &pol).unwrap();
        assert!(z2.contains(ZETA_2));
        let z4 = riemann_zeta(4.0, &pol).unwrap();
        assert!(z4.contains(ZETA_4));
    }

    #[test]
    fn riemann_zeta_large_s() {
        let z = riemann_zeta(60.0, &TruncationPolicy::default()).unwrap();
        assert!((z.value() - 1.0).abs() < 2f64.powi(-59));
    }

    #[test]
    fn riemann_zeta_domain() {
        assert!(riemann_zeta(1.0, &TruncationPolicy::default()).is_err());
        assert!(riemann_zeta(0.5, &TruncationPolicy::default()).is_err());
    }

    #[test]
    fn prime_zeta_reference_values() {
        let pol = TruncationPolicy::default();
        // Direct sums over primes ≤ 10^6 give these (tail < 1e-6 for s=2).
        let p2 = prime_zeta(2.0, &pol).unwrap();
        assert!((p2.value() - 0.4522474200410654).abs() <= p2.error() + 1e-12);
        let p4 = prime_zeta(4.0, &pol).unwrap();
        assert!((p4.value() - 0.0769931397642468).abs() <= p4.error() + 1e-12);
    }

    #[test]
    fn prime_zeta_first_term_domination() {
        let p = prime_zeta(40.0, &TruncationPolicy::default()).unwrap();
        assert!((p.value() - 2f64.powi(-40)).abs() < 2.0 * 3f64.powi(-40));
    }

    #[test]
    fn almost_prime_zeta_base_cases() {
        let pol = TruncationPolicy::default();
        let s0 = almost_prime_zeta(0, 3.0, &pol).unwrap();
        assert_eq!(s0.value(), 1.0);
        assert_eq!(s0.error(), 0.0);

        let s1 = almost_prime_zeta(1, 4.0, &pol).unwrap();
        let p4 = prime_zeta(4.0, &pol).unwrap();
        assert!((s1.value() - p4.value()).abs() <= s1.error() + p4.error());
    }

    #[test]
    fn almost_prime_zeta_k2_identity() {
        // S_2(s) = (P(s)² + P(2s))/2
        let pol = TruncationPolicy::default();
        let s2 = almost_prime_zeta(2, 4.0, &pol).unwrap();
        let p4 = prime_zeta(4.0, &pol).unwrap();
        let p8 = prime_zeta(8.0, &pol).unwrap();
        let check = p4.mul(p4).add(p8).scale(0.5);
        assert!((s2.value() - check.value()).abs() <= s2.error() + check.error());
        assert!((s2.value() - 0.0049946744686373).abs() < 1e-12);
    }

    #[test]
    fn tail_lemma_numeric() {
        // S_{k+1}(s) ≤ P(s)·S_k(s) for k ≤ 5, s ∈ {3, 4}.
        let pol = TruncationPolicy::default();
        for s in [3.0, 4.0] {
            let sums = almost_prime_zeta_upto(6, s, &pol).unwrap();
            let p = prime_zeta(s, &pol).unwrap();
            for k in 0..=5 {
                assert!(
                    sums[k + 1].lower() <= p.upper() * sums[k].upper(),
                    "tail lemma fails at k={k}, s={s}"
                );
            }
        }
    }

    #[test]
    fn bohr_sum_large_sigma_two_terms_dominate() {
        let pol = TruncationPolicy::default();
        let f = bohr_sum(4.0, &pol).unwrap();
        let sums = almost_prime_zeta_upto(3, 8.0, &pol).unwrap();
        let two = sums[1].sqrt().unwrap().add(sums[2].sqrt().unwrap());
        // remaining terms sum to at most sqrt(S_3(8)) / (1 - q), q = sqrt(P(8))
        let q = prime_zeta(8.0, &pol).unwrap().sqrt().unwrap().upper();
        let tail = sums[3].sqrt().unwrap().upper() / (1.0 - q);
        let gap = f.value() - two.value();
        assert!(gap > 0.0 && gap < tail, "gap {gap} vs third-term bound {tail}");
    }

    #[test]
    fn bohr_sum_paper_levels() {
        let pol = TruncationPolicy::default();
        let f_bohr = bohr_sum(1.7267, &pol).unwrap();
        assert!((f_bohr.value() - 0.5).abs() < 1e-3);
        let f_mixed = bohr_sum(1.2061, &pol).unwrap();
        assert!((f_mixed.value() - 1.0).abs() < 1e-3);
    }

    #[test]
    fn bohr_sum_precondition() {
        let err = bohr_sum(0.55, &TruncationPolicy::default());
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn monotonicity_on_grid() {
        let pol = TruncationPolicy::default();
        let mut prev = f64::INFINITY;
        for i in 0..=20 {
            let sigma = 1.0 + i as f64 * 0.1;
            let f = bohr_sum(sigma, &pol).unwrap();
            assert!(f.upper() <= prev + 1e-12, "F not decreasing at σ = {sigma}");
            prev = f.upper() + f.error();
        }
        // each S_k(s) strictly decreases in s
        for k in 1..=4u32 {
            let a = almost_prime_zeta(k, 3.0, &pol).unwrap();
            let b = almost_prime_zeta(k, 4.0, &pol).unwrap();
            assert!(b.value() < a.value());
        }
    }

    #[test]
    fn enclosure_soundness_under_refinement() {
        // a tighter policy never escapes the coarser enclosure
        let coarse = TruncationPolicy { zeta_terms: 16, moebius_terms: 16, k_tail_tolerance: 1e-8 };
        let fine = coarse.tightened().tightened();
        for sigma in [1.1, 1.5, 2.0, 3.0] {
            let a = bohr_sum(sigma, &coarse).unwrap();
            let b = bohr_sum(sigma, &fine).unwrap();
            assert!(b.lower() >= a.lower() - 1e-15 && b.upper() <= a.upper() + 1e-15);
        }
    }
}
