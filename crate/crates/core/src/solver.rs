//! Root-finding for the defining equations F(σ) = target, the closed-form
//! abscissa constants, and the Rogosinski radii r_l.

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::zeta::{bohr_sum, TruncationPolicy};

/// Cited comparison constants (prior work, reported but never recomputed).
pub mod cited {
    /// Upper estimate for the isometric Bohr abscissa from earlier work.
    pub const BOHR_UPPER: f64 = 1.8154;
    /// Abscissa estimate for the mixed |a₁|² inequality from earlier work.
    pub const MIXED_UPPER: f64 = 1.7287;
    /// Lower estimate log 3 / log 2 for the isometric Bohr abscissa.
    pub fn bohr_lower() -> f64 {
        3f64.ln() / 2f64.ln()
    }
}

/// Certified root of a monotone equation F(σ) = target.
#[derive(Debug, Clone)]
pub struct AbscissaResult {
    /// Midpoint of the final bracket.
    pub root: f64,
    /// Final bracket (lo, hi); F(lo) > target > F(hi) certified.
    pub bracket: (f64, f64),
    /// Enclosure of F(root) − target.
    pub residual: Enclosure,
    pub iterations: u32,
    /// Policy the solve started from (midpoint retries may tighten locally).
    pub policy: TruncationPolicy,
}

const BRACKET_LO: f64 = 1.0;
const BRACKET_HI: f64 = 3.0;
const MAX_TIGHTENINGS: u32 = 3;

enum Side {
    /// F(σ) certified above the target.
    Above(Enclosure),
    /// F(σ) certified below the target.
    Below(Enclosure),
    /// Enclosure still straddles the target after all refinements; happens
    /// when the target equals F(σ) to within the achievable radius.
    Straddle,
}

/// Evaluate F with up to `MAX_TIGHTENINGS` policy refinements until the
/// enclosure certifies a side of `target`.
fn certified_side(sigma: f64, target: f64, policy: &TruncationPolicy) -> Result<Side> {
    let mut pol = *policy;
    for _ in 0..=MAX_TIGHTENINGS {
        let f = bohr_sum(sigma, &pol)?;
        if f.lower() > target {
            return Ok(Side::Above(f));
        }
        if f.upper() < target {
            return Ok(Side::Below(f));
        }
        pol = pol.tightened();
    }
    Ok(Side::Straddle)
}

/// Bisection for the unique σ₀ in [1, 3] with F(σ₀) = target. F is strictly
/// decreasing there, so the sign-change certificate at the final bracket
/// endpoints certifies the root. The reported residual is the hull of the
/// endpoint residuals, so it contains 0 by that certificate.
pub fn solve_abscissa(target: f64, policy: &TruncationPolicy, tol: f64) -> Result<AbscissaResult> {
    if !(target > 0.0) {
        return Err(Error::InvalidArgument(format!("target must be positive, got {target}")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tol must be positive, got {tol}")));
    }

    let f_lo = bohr_sum(BRACKET_LO, policy)?;
    let f_hi = bohr_sum(BRACKET_HI, policy)?;
    if !(f_lo.lower() > target && f_hi.upper() < target) {
        return Err(Error::Bracket(format!(
            "target {target} not straddled on [{BRACKET_LO}, {BRACKET_HI}]: \
             F({BRACKET_LO}) = {f_lo}, F({BRACKET_HI}) = {f_hi}"
        )));
    }

    let (mut lo, mut hi) = (BRACKET_LO, BRACKET_HI);
    let (mut f_lo, mut f_hi) = (f_lo, f_hi);
    let mut iterations = 0u32;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        iterations += 1;
        match certified_side(mid, target, policy)? {
            Side::Above(f) => {
                lo = mid;
                f_lo = f;
            }
            Side::Below(f) => {
                hi = mid;
                f_hi = f;
            }
            Side::Straddle => {
                // F(mid) equals the target to within the achievable radius
                // (e.g. a round-trip target). Nudge both endpoints inward
                // past the ambiguous zone instead; F is strictly decreasing,
                // so the offset points certify.
                let delta = 0.125 * (hi - lo);
                match (
                    certified_side(mid - delta, target, policy)?,
                    certified_side(mid + delta, target, policy)?,
                ) {
                    (Side::Above(fa), Side::Below(fb)) => {
                        lo = mid - delta;
                        hi = mid + delta;
                        f_lo = fa;
                        f_hi = fb;
                    }
                    _ => {
                        return Err(Error::Precision(format!(
                            "cannot certify the sign of F − {target} near σ = {mid} even after \
                             {MAX_TIGHTENINGS} policy refinements; tighten the truncation policy"
                        )));
                    }
                }
            }
        }
    }
    let root = 0.5 * (lo + hi);
    // Hull of the endpoint residuals: [F(hi) − target, F(lo) − target].
    let res_lo = f_hi.lower() - target;
    let res_hi = f_lo.upper() - target;
    let residual = Enclosure::new(0.5 * (res_lo + res_hi), 0.5 * (res_hi - res_lo));
    Ok(AbscissaResult { root, bracket: (lo, hi), residual, iterations, policy: *policy })
}

/// Enclosure of |a₁| + (1 − |a₁|²)·F(σ), the upper bound for Σ|a_n| n^{-σ}.
pub fn bohr_bound_modulus(a1_abs: f64, sigma: f64, policy: &TruncationPolicy) -> Result<Enclosure> {
    if a1_abs == 1.0 {
        check_unit(a1_abs)?;
        return Ok(Enclosure::exact(1.0));
    }
    combine_modulus(a1_abs, bohr_sum(sigma, policy)?)
}

/// The |a₁| + (1 − |a₁|²)·F combination for an already-evaluated F(σ).
pub fn combine_modulus(a1_abs: f64, f: Enclosure) -> Result<Enclosure> {
    check_unit(a1_abs)?;
    if a1_abs == 1.0 {
        return Ok(Enclosure::exact(1.0));
    }
    Ok(f.scale(1.0 - a1_abs * a1_abs).add(Enclosure::exact(a1_abs)))
}

/// Enclosure of |a₁|² + (1 − |a₁|²)·F(σ).
pub fn bohr_bound_squared(a1_abs: f64, sigma: f64, policy: &TruncationPolicy) -> Result<Enclosure> {
    if a1_abs == 1.0 {
        check_unit(a1_abs)?;
        return Ok(Enclosure::exact(1.0));
    }
    combine_squared(a1_abs, bohr_sum(sigma, policy)?)
}

/// The |a₁|² + (1 − |a₁|²)·F combination for an already-evaluated F(σ).
pub fn combine_squared(a1_abs: f64, f: Enclosure) -> Result<Enclosure> {
    check_unit(a1_abs)?;
    if a1_abs == 1.0 {
        return Ok(Enclosure::exact(1.0));
    }
    Ok(f.scale(1.0 - a1_abs * a1_abs).add(Enclosure::exact(a1_abs * a1_abs)))
}

fn check_unit(a: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::InvalidArgument(format!("|a₁| must lie in [0, 1], got {a}")));
    }
    Ok(())
}

/// The abscissa σ with 2^{-σ} = r: log(1/r)/log 2, for the power series in
/// 2^{-s}.
pub fn radius_to_abscissa(r: f64) -> Result<f64> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::InvalidArgument(format!("radius must lie in (0, 1], got {r}")));
    }
    Ok(-r.ln() / 2f64.ln())
}

/// Which value to use for the radius r₂.
///
/// The source states r₂ = √3/8 ≈ 0.2165, which breaks the monotonicity
/// pattern r₁ = 1/2 < r₃ ≈ 0.6478; the reading √(3/8) ≈ 0.6124 would fit it.
/// The literal stated value is the default; the alternate reading is opt-in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum R2Reading {
    /// √3 / 8 — the value as printed.
    #[default]
    Literal,
    /// √(3/8) — the monotone reading.
    Alternate,
}

/// Rogosinski radius r_l: r₁ = 1/2, r₂ per [`R2Reading`], and for l ≥ 3 the
/// unique positive root of 1 − r − 2r^{l+1} = 0 with residual ≤ `tol`.
pub fn rogosinski_radius(l: u32, tol: f64) -> Result<f64> {
    rogosinski_radius_with(l, tol, R2Reading::default())
}

pub fn rogosinski_radius_with(l: u32, tol: f64, r2: R2Reading) -> Result<f64> {
    if l == 0 {
        return Err(Error::InvalidArgument("l must be >= 1".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tol must be positive, got {tol}")));
    }
    match l {
        1 => Ok(0.5),
        2 => Ok(match r2 {
            R2Reading::Literal => 3f64.sqrt() / 8.0,
            R2Reading::Alternate => (3f64 / 8.0).sqrt(),
        }),
        _ => {
            let g = |r: f64| 1.0 - r - 2.0 * r.powi(l as i32 + 1);
            // g is strictly decreasing on (0,1): g(0)=1, g(1)=-2.
            let (mut lo, mut hi) = (0.0f64, 1.0f64);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let gm = g(mid);
                if gm.abs() <= tol * 1e-3 || hi - lo <= f64::EPSILON {
                    break;
                }
                if gm > 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let root = 0.5 * (lo + hi);
            if g(root).abs() > tol {
                return Err(Error::Precision(format!(
                    "residual {} above tolerance {tol} at r_{l}",
                    g(root).abs()
                )));
            }
            Ok(root)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_targets() {
        let pol = TruncationPolicy::default();
        let bohr = solve_abscissa(0.5, &pol, 1e-8).unwrap();
        assert!((bohr.root - 1.7267).abs() <= 2e-3, "root = {}", bohr.root);
        assert!(bohr.residual.contains(0.0));
        assert!(bohr.bracket.0 < bohr.root && bohr.root < bohr.bracket.1);

        let mixed = solve_abscissa(1.0, &pol, 1e-8).unwrap();
        assert!((mixed.root - 1.2061).abs() <= 2e-3, "root = {}", mixed.root);
    }

    #[test]
    fn round_trip_fixed_point() {
        let pol = TruncationPolicy::default();
        let target = bohr_sum(2.0, &pol).unwrap().value();
        let r = solve_abscissa(target, &pol, 1e-8).unwrap();
        assert!((r.root - 2.0).abs() <= 1e-8 + 1e-10);
    }

    #[test]
    fn bracket_error_reported() {
        let pol = TruncationPolicy::default();
        // F(1) ≈ 2.06, F(3) ≈ 0.147: target 3 is never straddled
        let err = solve_abscissa(3.0, &pol, 1e-8);
        assert!(matches!(err, Err(Error::Bracket(_))));
    }

    #[test]
    fn bound_functionals() {
        let pol = TruncationPolicy::default();
        let one = bohr_bound_modulus(1.0, 1.7, &pol).unwrap();
        assert_eq!(one.value(), 1.0);
        assert_eq!(one.error(), 0.0);
        let one = bohr_bound_squared(1.0, 1.2, &pol).unwrap();
        assert_eq!(one.value(), 1.0);

        let root = solve_abscissa(0.5, &pol, 1e-10).unwrap().root;
        let half = bohr_bound_modulus(0.0, root, &pol).unwrap();
        assert!((half.value() - 0.5).abs() < 1e-6);
        let mid = bohr_bound_modulus(0.5, root, &pol).unwrap();
        assert!((mid.value() - 0.875).abs() < 1e-6);

        let root1 = solve_abscissa(1.0, &pol, 1e-10).unwrap().root;
        let b = bohr_bound_squared(0.0, root1, &pol).unwrap();
        assert!((b.value() - 1.0).abs() < 1e-6);
        let tele = bohr_bound_squared(0.6, root1, &pol).unwrap();
        assert!((tele.value() - 1.0).abs() < 1e-6);

        assert!(bohr_bound_modulus(1.5, 1.7, &pol).is_err());
        assert!(bohr_bound_squared(-0.1, 1.7, &pol).is_err());
    }

    #[test]
    fn radius_abscissa_conversion() {
        assert!((radius_to_abscissa(0.5).unwrap() - 1.0).abs() < 1e-15);
        assert!((radius_to_abscissa(1.0 / 3.0).unwrap() - 1.5849625007211562).abs() < 1e-12);
        assert_eq!(radius_to_abscissa(1.0).unwrap(), 0.0);
        assert!(radius_to_abscissa(0.0).is_err());
        assert!(radius_to_abscissa(1.5).is_err());
    }

    #[test]
    fn radius_abscissa_is_logarithmic() {
        for (r1, r2) in [(0.3, 0.7), (0.9, 0.2), (0.5, 0.5)] {
            let lhs = radius_to_abscissa(r1 * r2).unwrap();
            let rhs = radius_to_abscissa(r1).unwrap() + radius_to_abscissa(r2).unwrap();
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn rogosinski_special_values() {
        assert_eq!(rogosinski_radius(1, 1e-12).unwrap(), 0.5);
        assert_eq!(rogosinski_radius(2, 1e-12).unwrap(), 3f64.sqrt() / 8.0);
        assert_eq!(
            rogosinski_radius_with(2, 1e-12, R2Reading::Alternate).unwrap(),
            (3f64 / 8.0).sqrt()
        );
        let r3 = rogosinski_radius(3, 1e-12).unwrap();
        assert!((r3 - 0.6478).abs() < 1e-4);
        assert!(rogosinski_radius(0, 1e-12).is_err());
    }

    #[test]
    fn rogosinski_monotone_towards_one() {
        let mut prev = 0.0;
        for l in 3..=20 {
            let r = rogosinski_radius(l, 1e-12).unwrap();
            assert!(r > prev, "r_{l} = {r} not above r_{} = {prev}", l - 1);
            assert!((1.0 - r - 2.0 * r.powi(l as i32 + 1)).abs() < 1e-12);
            prev = r;
        }
        assert!(rogosinski_radius(200, 1e-12).unwrap() < 1.0);
    }

    #[test]
    fn cited_window() {
        assert!(cited::bohr_lower() < 1.7267 && 1.7267 < cited::BOHR_UPPER);
    }
}
