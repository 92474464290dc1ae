//! Independent brute-force validators: literal direct summation of the
//! almost-prime zeta sums with a sound tail bound, and exhaustive lattice
//! comparison. Deliberately slow and simple; used by the test suites and the
//! CLI to cross-check the certified kernels.

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lift::{weights_match_points, LatticeSpec};
use crate::primes::{omega, PrimeTable};

/// Result of a brute-force evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub value: f64,
    /// Sound over-estimate of everything beyond the summation limit.
    pub tail_bound: f64,
    /// Number of qualifying terms actually summed.
    pub terms_used: u64,
    pub k: u32,
    pub s: f64,
    pub limit: u64,
}

/// Block size for the fixed-block pairwise summation; keeps the reduction
/// order deterministic regardless of the evaluation schedule.
const SUM_BLOCK: usize = 4096;

/// Σ_{n ≤ N, Ω(n)=k} n^{-s} by literal enumeration. The tail bound
/// N^{1-s}/(s-1) drops the Ω constraint (coarse but sound).
pub fn direct_sum_oracle(k: u32, s: f64, n: u64, table: &PrimeTable) -> Result<OracleReport> {
    if n > table.limit() {
        return Err(Error::OutOfRange(format!("N = {n} exceeds sieve limit {}", table.limit())));
    }
    if !(s > 1.0) {
        return Err(Error::Domain(format!("direct sum requires s > 1, got {s}")));
    }
    let mut block = Vec::with_capacity(SUM_BLOCK);
    let mut block_totals = Vec::new();
    let mut terms_used = 0u64;
    for m in 2..=n {
        if omega(m, table)? == k {
            block.push((m as f64).powf(-s));
            terms_used += 1;
            if block.len() == SUM_BLOCK {
                block_totals.push(block.iter().sum::<f64>());
                block.clear();
            }
        }
    }
    if !block.is_empty() {
        block_totals.push(block.iter().sum::<f64>());
    }
    let value = block_totals.iter().sum::<f64>();
    let tail_bound = (n as f64).powf(1.0 - s) / (s - 1.0);
    Ok(OracleReport { value, tail_bound, terms_used, k, s, limit: n })
}

/// True iff the integer form and the exact product-comparison form of the
/// lattice agree, enumerated exhaustively.
pub fn lattice_enumeration_check(spec: &LatticeSpec) -> bool {
    weights_match_points(spec)
}

const FIXTURE_VERSION: &str = "bohr-oracle-fixture v1";

/// Serialize oracle reports as a versioned text fixture.
pub fn write_fixture(path: &Path, reports: &[OracleReport]) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    writeln!(f, "# {FIXTURE_VERSION}")?;
    for r in reports {
        writeln!(
            f,
            "direct-sum k={} s={} N={} value={:.17e} tail={:.17e} terms={}",
            r.k, r.s, r.limit, r.value, r.tail_bound, r.terms_used
        )?;
    }
    Ok(())
}

/// Read a fixture written by [`write_fixture`].
pub fn read_fixture(path: &Path) -> Result<Vec<OracleReport>> {
    let text = std::fs::read_to_string(path)?;
    let mut lines = text.lines();
    match lines.next() {
        Some(header) if header.trim_start_matches("# ") == FIXTURE_VERSION => {}
        other => {
            return Err(Error::Parse(format!("unrecognized fixture header: {other:?}")));
        }
    }
    let mut out = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut k = None;
        let mut s = None;
        let mut n = None;
        let mut value = None;
        let mut tail = None;
        let mut terms = None;
        let mut fields = line.split_whitespace();
        let op = fields.next();
        if op != Some("direct-sum") {
            return Err(Error::Parse(format!("line {}: unknown operation {op:?}", lineno + 2)));
        }
        for field in fields {
            let (key, val) = field.split_once('=').ok_or_else(|| {
                Error::Parse(format!("line {}: malformed field {field:?}", lineno + 2))
            })?;
            let bad = |e: &dyn std::fmt::Display| {
                Error::Parse(format!("line {}: bad {key}: {e}", lineno + 2))
            };
            match key {
                "k" => k = Some(val.parse::<u32>().map_err(|e| bad(&e))?),
                "s" => s = Some(val.parse::<f64>().map_err(|e| bad(&e))?),
                "N" => n = Some(val.parse::<u64>().map_err(|e| bad(&e))?),
                "value" => value = Some(val.parse::<f64>().map_err(|e| bad(&e))?),
                "tail" => tail = Some(val.parse::<f64>().map_err(|e| bad(&e))?),
                "terms" => terms = Some(val.parse::<u64>().map_err(|e| bad(&e))?),
                _ => return Err(Error::Parse(format!("line {}: unknown key {key}", lineno + 2))),
            }
        }
        match (k, s, n, value, tail, terms) {
            (Some(k), Some(s), Some(limit), Some(value), Some(tail_bound), Some(terms_used)) => {
                out.push(OracleReport { value, tail_bound, terms_used, k, s, limit });
            }
            _ => return Err(Error::Parse(format!("line {}: missing fields", lineno + 2))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lift::lattice_for_degree;
    use crate::zeta::{almost_prime_zeta, TruncationPolicy};
    use std::sync::OnceLock;

    fn table() -> &'static PrimeTable {
        static TABLE: OnceLock<PrimeTable> = OnceLock::new();
        TABLE.get_or_init(|| PrimeTable::build(1_100_000).unwrap())
    }

    #[test]
    fn four_primes_below_ten() {
        let r = direct_sum_oracle(1, 2.0, 10, table()).unwrap();
        let expected = 0.25 + 1.0 / 9.0 + 1.0 / 25.0 + 1.0 / 49.0;
        assert!((r.value - expected).abs() < 1e-15);
        assert_eq!(r.terms_used, 4);
    }

    #[test]
    fn no_qualifying_terms() {
        // smallest 20-almost prime is 2^20 = 1048576 > 10^6
        let r = direct_sum_oracle(20, 4.0, 1_000_000, table()).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.terms_used, 0);
        assert!(r.tail_bound > 0.0);
    }

    #[test]
    fn oracle_agrees_with_kernel() {
        let pol = TruncationPolicy::default();
        let r = direct_sum_oracle(2, 4.0, 1_000_000, table()).unwrap();
        assert!((r.value - 0.0049946744686373).abs() < 1e-14);
        assert!(r.tail_bound < 1e-12);
        let kernel = almost_prime_zeta(2, 4.0, &pol).unwrap();
        assert!((kernel.value() - r.value).abs() <= kernel.error() + r.tail_bound);
    }

    #[test]
    fn oracle_monotone_in_limit() {
        let a = direct_sum_oracle(2, 3.0, 1_000, table()).unwrap();
        let b = direct_sum_oracle(2, 3.0, 100_000, table()).unwrap();
        assert!(b.value >= a.value);
        let kernel = almost_prime_zeta(2, 3.0, &TruncationPolicy::default()).unwrap();
        assert!(b.value <= kernel.upper());
    }

    #[test]
    fn lattice_checks() {
        let spec = lattice_for_degree(4, table()).unwrap();
        assert!(lattice_enumeration_check(&spec));
        let bad = LatticeSpec::with_weights(
            spec.prime_basis().to_vec(),
            4,
            vec![1, 1],
            10,
            spec.points().to_vec(),
        );
        assert!(!lattice_enumeration_check(&bad));
        let spec2 = lattice_for_degree(2, table()).unwrap();
        assert!(lattice_enumeration_check(&spec2));
    }

    #[test]
    fn fixture_roundtrip() {
        let dir = std::env::temp_dir().join("bohr-fixture-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("oracle.txt");
        let reports = vec![direct_sum_oracle(1, 2.0, 10, table()).unwrap()];
        write_fixture(&path, &reports).unwrap();
        let back = read_fixture(&path).unwrap();
        assert_eq!(back, reports);
    }
}
