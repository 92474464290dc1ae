//! The lift of a Dirichlet polynomial to a multivariate monomial expansion
//! over prime coordinates z_i = p_i^{-s}, the exponent lattice cut out by
//! Π p_i^{α_i} ≤ k together with its integer rationalization, and the derived
//! per-degree Rogosinski half-plane bounds.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::primes::{factorize, PrimeTable};
use crate::solver::rogosinski_radius;

/// Finite Dirichlet polynomial Σ_{n=1..k} a_n n^{-s}, stored densely:
/// index n-1 holds a_n. The length records the declared degree even when the
/// trailing coefficient is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletPolynomial {
    coefficients: Vec<Complex64>,
}

impl DirichletPolynomial {
    pub fn new(coefficients: Vec<Complex64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidArgument("a Dirichlet polynomial needs degree >= 1".into()));
        }
        Ok(DirichletPolynomial { coefficients })
    }

    pub fn degree(&self) -> u64 {
        self.coefficients.len() as u64
    }

    /// Coefficient a_n (1-based).
    pub fn coefficient(&self, n: u64) -> Complex64 {
        self.coefficients.get(n as usize - 1).copied().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    /// Parse the shared text format: one `n re im` line per nonzero term,
    /// `#` comments and blank lines allowed, degree = max n present.
    pub fn parse(text: &str) -> Result<Self> {
        let mut terms: Vec<(u64, Complex64)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::Parse(format!(
                    "line {}: expected `n re im`, got {:?}",
                    lineno + 1,
                    line
                )));
            }
            let n: u64 = fields[0]
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: bad index: {e}", lineno + 1)))?;
            if n == 0 {
                return Err(Error::Parse(format!("line {}: index must be >= 1", lineno + 1)));
            }
            let re: f64 = fields[1]
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: bad real part: {e}", lineno + 1)))?;
            let im: f64 = fields[2]
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: bad imaginary part: {e}", lineno + 1)))?;
            terms.push((n, Complex64::new(re, im)));
        }
        let degree = terms.iter().map(|&(n, _)| n).max().ok_or_else(|| {
            Error::Parse("no coefficient lines found".into())
        })?;
        let mut coeffs = vec![Complex64::default(); degree as usize];
        for (n, c) in terms {
            coeffs[n as usize - 1] += c;
        }
        DirichletPolynomial::new(coeffs)
    }
}

/// The lifted form: a prime basis and one (coefficient, exponent vector)
/// term per nonzero a_n, where the exponents factor n over the basis.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialExpansion {
    prime_basis: Vec<u64>,
    terms: Vec<(Complex64, Vec<u32>)>,
}

impl MonomialExpansion {
    pub fn prime_basis(&self) -> &[u64] {
        &self.prime_basis
    }

    pub fn terms(&self) -> &[(Complex64, Vec<u32>)] {
        &self.terms
    }
}

/// Lift a Dirichlet polynomial to its monomial expansion over the primes
/// occurring in 2..k; a_1 maps to the zero exponent vector.
pub fn lift(poly: &DirichletPolynomial, table: &PrimeTable) -> Result<MonomialExpansion> {
    let k = poly.degree();
    if k > table.limit() {
        return Err(Error::OutOfRange(format!(
            "polynomial degree {k} exceeds sieve limit {}",
            table.limit()
        )));
    }
    let basis: Vec<u64> = if k >= 2 { table.primes_up_to(k)?.to_vec() } else { Vec::new() };
    let index: std::collections::HashMap<u64, usize> =
        basis.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    let mut terms = Vec::new();
    for n in 1..=k {
        let c = poly.coefficient(n);
        if c == Complex64::default() {
            continue;
        }
        let mut exps = vec![0u32; basis.len()];
        for &(p, a) in factorize(n, table)?.entries() {
            exps[index[&p]] = a;
        }
        terms.push((c, exps));
    }
    Ok(MonomialExpansion { prime_basis: basis, terms })
}

/// Σ a_n n^{-s} by direct evaluation at a complex point with Re s > 0.
pub fn evaluate_dirichlet(poly: &DirichletPolynomial, s: Complex64) -> Complex64 {
    let mut total = Complex64::default();
    for (i, &a) in poly.coefficients().iter().enumerate() {
        if a == Complex64::default() {
            continue;
        }
        let n = (i + 1) as f64;
        total += a * (-s * n.ln()).exp();
    }
    total
}

/// Evaluate the lifted expansion at z_i = p_i^{-s}; agrees with
/// [`evaluate_dirichlet`] on the source polynomial up to rounding.
pub fn evaluate_monomials(exp: &MonomialExpansion, s: Complex64) -> Complex64 {
    let z: Vec<Complex64> =
        exp.prime_basis.iter().map(|&p| (-s * (p as f64).ln()).exp()).collect();
    let mut total = Complex64::default();
    for (c, alphas) in &exp.terms {
        let mut m = *c;
        for (zi, &a) in z.iter().zip(alphas) {
            for _ in 0..a {
                m *= zi;
            }
        }
        total += m;
    }
    total
}

/// Exponent lattice of degree k: the point set {α : Π p_i^{α_i} ≤ k} together
/// with verified integer weights (m_1..m_m; m), gcd-reduced, cutting out the
/// same set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSpec {
    prime_basis: Vec<u64>,
    degree: u64,
    integer_weights: Vec<u64>,
    integer_bound: u64,
    points: Vec<Vec<u32>>,
}

impl LatticeSpec {
    pub fn prime_basis(&self) -> &[u64] {
        &self.prime_basis
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn integer_weights(&self) -> &[u64] {
        &self.integer_weights
    }

    pub fn integer_bound(&self) -> u64 {
        self.integer_bound
    }

    /// Member exponent vectors, in increasing order of the integer they
    /// reconstruct (n = 1..k).
    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    /// Exact log-form membership: Π p_i^{α_i} ≤ k, decided in integer
    /// arithmetic (never by floating-point logarithms).
    pub fn log_form_contains(&self, alphas: &[u32]) -> bool {
        product_within(&self.prime_basis, alphas, self.degree).is_some()
    }

    /// Integer-form membership: Σ α_i m_i ≤ m.
    pub fn integer_form_contains(&self, alphas: &[u32]) -> bool {
        let mut acc: u128 = 0;
        for (&w, &a) in self.integer_weights.iter().zip(alphas) {
            acc += w as u128 * a as u128;
        }
        acc <= self.integer_bound as u128
    }

    /// Construct with externally supplied weights (no verification); used by
    /// the enumeration check to probe candidate weight tuples.
    pub fn with_weights(
        prime_basis: Vec<u64>,
        degree: u64,
        integer_weights: Vec<u64>,
        integer_bound: u64,
        points: Vec<Vec<u32>>,
    ) -> Self {
        LatticeSpec { prime_basis, degree, integer_weights, integer_bound, points }
    }
}

/// Π p_i^{α_i} if it stays ≤ bound, else None. Overflow-safe.
fn product_within(basis: &[u64], alphas: &[u32], bound: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for (&p, &a) in basis.iter().zip(alphas) {
        for _ in 0..a {
            acc = acc.checked_mul(p)?;
            if acc > bound {
                return None;
            }
        }
    }
    Some(acc)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Enumerate all α ≥ 0 with Σ α_i w_i ≤ bound by depth-first search, calling
/// `visit` on each; aborts (returning false) once `cap` members are exceeded.
fn for_each_integer_member(
    weights: &[u64],
    bound: u64,
    cap: usize,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> bool {
    fn rec(
        weights: &[u64],
        remaining: u64,
        cap: &mut usize,
        prefix: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        if weights.is_empty() {
            if *cap == 0 {
                return false;
            }
            *cap -= 1;
            return visit(prefix);
        }
        let w = weights[0];
        let mut a = 0u32;
        loop {
            let used = w as u128 * a as u128;
            if used > remaining as u128 {
                break;
            }
            prefix.push(a);
            let ok = rec(&weights[1..], remaining - (used as u64), cap, prefix, visit);
            prefix.pop();
            if !ok {
                return false;
            }
            a += 1;
        }
        true
    }
    let mut cap = cap;
    rec(weights, bound, &mut cap, &mut Vec::new(), visit)
}

/// True iff the integer form {Σ α_i m_i ≤ m} and the exact product form
/// {Π p_i^{α_i} ≤ k} cut out exactly the same point set.
pub fn weights_match_points(spec: &LatticeSpec) -> bool {
    // every log-form point must satisfy the integer inequality
    for alphas in spec.points() {
        if !spec.integer_form_contains(alphas) {
            return false;
        }
    }
    // every integer-form member must be a log-form point; member counts match
    let mut count = 0usize;
    let complete = for_each_integer_member(
        spec.integer_weights(),
        spec.integer_bound(),
        spec.points().len(),
        &mut |alphas| {
            // padded DFS vectors have the basis length by construction
            if !spec.log_form_contains(alphas) {
                return false;
            }
            count += 1;
            true
        },
    );
    complete && count == spec.points().len()
}

/// Build the exponent lattice for degree k: enumerate the point set exactly
/// (one point per n = 1..k) and search for the smallest log-scaling D whose
/// rounded, gcd-reduced integer weights reproduce it.
pub fn lattice_for_degree(k: u64, table: &PrimeTable) -> Result<LatticeSpec> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("lattice degree must be >= 2, got {k}")));
    }
    if k > table.limit() {
        return Err(Error::OutOfRange(format!("degree {k} exceeds sieve limit {}", table.limit())));
    }
    let basis: Vec<u64> = table.primes_up_to(k)?.to_vec();
    let index: std::collections::HashMap<u64, usize> =
        basis.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    let mut points = Vec::with_capacity(k as usize);
    for n in 1..=k {
        let mut exps = vec![0u32; basis.len()];
        for &(p, a) in factorize(n, table)?.entries() {
            exps[index[&p]] = a;
        }
        points.push(exps);
    }

    // Scaling search: first D whose rounded weights cut out the same set.
    // Termination is guaranteed: the excluded points are separated from log k
    // by a positive margin, which D amplifies past the rounding error.
    for d in 1u64.. {
        let weights: Vec<u64> =
            basis.iter().map(|&p| (d as f64 * (p as f64).ln()).round() as u64).collect();
        if weights.iter().any(|&w| w == 0) {
            continue;
        }
        let bound = (d as f64 * (k as f64).ln()).round() as u64;
        if bound == 0 {
            continue;
        }
        let g = weights.iter().fold(bound, |acc, &w| gcd(acc, w));
        let weights: Vec<u64> = weights.iter().map(|&w| w / g).collect();
        let bound = bound / g;
        let candidate =
            LatticeSpec::with_weights(basis.clone(), k, weights, bound, points.clone());
        if weights_match_points(&candidate) {
            return Ok(candidate);
        }
    }
    unreachable!("scaling search terminates for every finite lattice")
}

/// Certified half-plane abscissa for degree-k partial sums: with verified
/// lattice integers (m_1..m_m; m) and r_m the Rogosinski radius of order m,
/// the smallest σ' such that p_i^{-σ'} ≤ r_m^{m_i} for every basis prime,
/// i.e. σ' = max_i m_i·log(1/r_m)/log p_i.
pub fn rogosinski_halfplane_bound(k: u64, table: &PrimeTable, tol: f64) -> Result<f64> {
    let spec = lattice_for_degree(k, table)?;
    let m = spec.integer_bound();
    let r = rogosinski_radius(u32::try_from(m).map_err(|_| {
        Error::Resource(format!("lattice bound {m} too large for a radius order"))
    })?, tol)?;
    let log_inv_r = -r.ln();
    let bound = spec
        .prime_basis()
        .iter()
        .zip(spec.integer_weights())
        .map(|(&p, &w)| w as f64 * log_inv_r / (p as f64).ln())
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn table() -> &'static PrimeTable {
        static TABLE: OnceLock<PrimeTable> = OnceLock::new();
        TABLE.get_or_init(|| PrimeTable::build(1000).unwrap())
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn lift_small_cases() {
        let poly = DirichletPolynomial::new(vec![c(1.0), c(1.0)]).unwrap();
        let e = lift(&poly, table()).unwrap();
        assert_eq!(e.prime_basis(), &[2]);
        assert_eq!(e.terms(), &[(c(1.0), vec![0]), (c(1.0), vec![1])]);

        let mut coeffs = vec![Complex64::default(); 12];
        coeffs[11] = c(5.0);
        let poly = DirichletPolynomial::new(coeffs).unwrap();
        let e = lift(&poly, table()).unwrap();
        assert_eq!(e.prime_basis(), &[2, 3, 5, 7, 11]);
        assert_eq!(e.terms(), &[(c(5.0), vec![2, 1, 0, 0, 0])]);

        let poly =
            DirichletPolynomial::new(vec![c(1.0), c(1.0), c(0.0), c(0.0), c(0.0), c(1.0)]).unwrap();
        let e = lift(&poly, table()).unwrap();
        assert_eq!(e.prime_basis(), &[2, 3, 5]);
        let exps: Vec<&[u32]> = e.terms().iter().map(|(_, a)| a.as_slice()).collect();
        assert_eq!(exps, vec![&[0u32, 0, 0][..], &[1, 0, 0], &[1, 1, 0]]);
    }

    #[test]
    fn lift_degree_beyond_limit() {
        let poly = DirichletPolynomial::new(vec![c(1.0); 2000]).unwrap();
        assert!(matches!(lift(&poly, table()), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn evaluate_examples() {
        let one = DirichletPolynomial::new(vec![c(1.0)]).unwrap();
        assert_eq!(evaluate_dirichlet(&one, Complex64::new(2.0, 1.0)), c(1.0));

        let half = DirichletPolynomial::new(vec![c(0.0), c(1.0)]).unwrap();
        let v = evaluate_dirichlet(&half, c(1.0));
        assert!((v - c(0.5)).norm() < 1e-15);

        let p = DirichletPolynomial::new(vec![c(1.0), c(1.0), c(1.0)]).unwrap();
        let v = evaluate_dirichlet(&p, c(2.0));
        assert!((v - c(49.0 / 36.0)).norm() < 1e-15);
    }

    #[test]
    fn monomials_match_dirichlet() {
        let poly =
            DirichletPolynomial::new(vec![c(1.0), c(1.0), c(0.0), c(0.0), c(0.0), c(1.0)]).unwrap();
        let e = lift(&poly, table()).unwrap();
        for s in [c(1.0), Complex64::new(0.7, 2.0), Complex64::new(2.5, -1.0)] {
            let a = evaluate_dirichlet(&poly, s);
            let b = evaluate_monomials(&e, s);
            assert!((a - b).norm() <= 1e-12 * a.norm().max(1.0));
        }

        let mut coeffs = vec![Complex64::default(); 12];
        coeffs[11] = c(5.0);
        let e = lift(&DirichletPolynomial::new(coeffs).unwrap(), table()).unwrap();
        let v = evaluate_monomials(&e, c(2.0));
        assert!((v - c(5.0 / 144.0)).norm() < 1e-15);
    }

    #[test]
    fn parse_polynomial_file() {
        let text = "# comment\n1 1.0 0.0\n\n12 5.0 -2.5\n";
        let poly = DirichletPolynomial::parse(text).unwrap();
        assert_eq!(poly.degree(), 12);
        assert_eq!(poly.coefficient(1), c(1.0));
        assert_eq!(poly.coefficient(12), Complex64::new(5.0, -2.5));
        assert_eq!(poly.coefficient(5), Complex64::default());

        assert!(DirichletPolynomial::parse("").is_err());
        assert!(DirichletPolynomial::parse("1 2").is_err());
        assert!(DirichletPolynomial::parse("0 1 0").is_err());
    }

    #[test]
    fn lattice_small_degrees() {
        let l2 = lattice_for_degree(2, table()).unwrap();
        assert_eq!(l2.prime_basis(), &[2]);
        assert_eq!(l2.points(), &[vec![0], vec![1]]);
        assert_eq!(l2.integer_weights(), &[1]);
        assert_eq!(l2.integer_bound(), 1);

        let l3 = lattice_for_degree(3, table()).unwrap();
        assert_eq!(l3.prime_basis(), &[2, 3]);
        assert_eq!(l3.points(), &[vec![0, 0], vec![1, 0], vec![0, 1]]);

        let l4 = lattice_for_degree(4, table()).unwrap();
        assert_eq!(l4.points(), &[vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0]]);
        assert!(weights_match_points(&l4));
        // the stated alternative weights also cut out the same set
        let alt = LatticeSpec::with_weights(
            l4.prime_basis().to_vec(),
            4,
            vec![5, 8],
            10,
            l4.points().to_vec(),
        );
        assert!(weights_match_points(&alt));
    }

    #[test]
    fn lattice_rejects_tampered_weights() {
        let l4 = lattice_for_degree(4, table()).unwrap();
        let bad = LatticeSpec::with_weights(
            l4.prime_basis().to_vec(),
            4,
            vec![1, 1],
            10,
            l4.points().to_vec(),
        );
        assert!(!weights_match_points(&bad));
    }

    #[test]
    fn lattice_equality_vector_is_member() {
        let t = table();
        for k in 2..=60u64 {
            let spec = lattice_for_degree(k, t).unwrap();
            let boundary = spec.points().last().unwrap(); // the vector for n = k
            assert!(spec.log_form_contains(boundary));
            assert!(spec.integer_form_contains(boundary));
            // gcd-reduced
            let g = spec
                .integer_weights()
                .iter()
                .fold(spec.integer_bound(), |acc, &w| super::gcd(acc, w));
            assert_eq!(g, 1, "weights not reduced at k = {k}");
        }
    }

    #[test]
    fn halfplane_bound_examples() {
        let t = table();
        let b2 = rogosinski_halfplane_bound(2, t, 1e-12).unwrap();
        assert!((b2 - 1.0).abs() < 1e-12);
        // weights (1,1;1) give exactly log 2 / log 2 = 1 at k = 3
        let b3 = rogosinski_halfplane_bound(3, t, 1e-12).unwrap();
        assert!((b3 - 1.0).abs() < 1e-10);
        // weights (2,3;4) and r_4 ≈ 0.6894
        let b4 = rogosinski_halfplane_bound(4, t, 1e-12).unwrap();
        assert!((b4 - 1.0744).abs() < 1e-3, "got {b4}");
        // minimal weights can certify abscissas below 1 for composite-rich
        // degrees; the certificate is still valid, just not ≥ 1
        let b10 = rogosinski_halfplane_bound(10, t, 1e-12).unwrap();
        assert!((b10 - 0.98786).abs() < 1e-4, "got {b10}");
        for k in [20, 30, 50] {
            let b = rogosinski_halfplane_bound(k, t, 1e-12).unwrap();
            assert!(b.is_finite() && b > 0.5 && b < 1.5, "bound {b} at k = {k}");
        }
    }
}
