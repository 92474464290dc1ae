//! Prime sieving, factorization, and the prime-divisor counting function Ω.
//!
//! The sieve stores the smallest prime factor of every integer up to its
//! limit, so each factorization query walks the factor chain in O(log n).

use crate::error::{Error, Result};

/// Immutable sieve-backed prime table.
///
/// After construction the table is read-only and safe to share across
/// threads.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    /// smallest_prime_factor[n] for n in 0..=limit; entries 0 and 1 unused.
    smallest_prime_factor: Vec<u32>,
    primes: Vec<u64>,
}

impl PrimeTable {
    /// Sieve all primes and smallest prime factors up to `limit` (inclusive).
    pub fn build(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::InvalidArgument(format!("sieve limit must be >= 2, got {limit}")));
        }
        if limit > u32::MAX as u64 {
            return Err(Error::Resource(format!(
                "sieve limit {limit} exceeds the supported maximum {}",
                u32::MAX
            )));
        }
        let n = (limit + 1) as usize;
        let mut spf: Vec<u32> = Vec::new();
        spf.try_reserve_exact(n).map_err(|_| {
            Error::Resource(format!("cannot allocate {} bytes for sieve of limit {limit}", n * 4))
        })?;
        spf.resize(n, 0u32);

        let mut primes = Vec::new();
        for i in 2..n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u64);
                if (i as u64) * (i as u64) <= limit {
                    let mut j = i * i;
                    while j < n {
                        if spf[j] == 0 {
                            spf[j] = i as u32;
                        }
                        j += i;
                    }
                }
            }
        }
        Ok(PrimeTable { limit, smallest_prime_factor: spf, primes })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// All primes `<= limit`, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// All primes `<= bound`, ascending. `bound` must not exceed the limit.
    pub fn primes_up_to(&self, bound: u64) -> Result<&[u64]> {
        if bound > self.limit {
            return Err(Error::OutOfRange(format!("bound {bound} exceeds sieve limit {}", self.limit)));
        }
        let cut = self.primes.partition_point(|&p| p <= bound);
        Ok(&self.primes[..cut])
    }

    /// Smallest prime factor of `n` (n >= 2, n <= limit).
    pub fn smallest_prime_factor(&self, n: u64) -> Result<u64> {
        self.check_range(n)?;
        if n < 2 {
            return Err(Error::InvalidArgument(format!("smallest prime factor undefined for {n}")));
        }
        Ok(self.smallest_prime_factor[n as usize] as u64)
    }

    fn check_range(&self, n: u64) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        if n > self.limit {
            return Err(Error::OutOfRange(format!("{n} exceeds sieve limit {}", self.limit)));
        }
        Ok(())
    }
}

/// Prime factorization as an exponent vector: ascending primes, exponents >= 1.
///
/// The empty vector represents n = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentVector {
    entries: Vec<(u64, u32)>,
}

impl ExponentVector {
    pub fn entries(&self) -> &[(u64, u32)] {
        &self.entries
    }

    /// Reconstruct the original integer.
    pub fn reconstruct(&self) -> u64 {
        self.entries.iter().fold(1u64, |acc, &(p, a)| acc * p.pow(a))
    }

    /// Ω: total number of prime factors counted with multiplicity.
    pub fn total_multiplicity(&self) -> u32 {
        self.entries.iter().map(|&(_, a)| a).sum()
    }
}

/// Factor `n` using the table; n = 1 yields the empty vector.
pub fn factorize(n: u64, table: &PrimeTable) -> Result<ExponentVector> {
    table.check_range(n)?;
    let mut entries = Vec::new();
    let mut m = n;
    while m > 1 {
        let p = table.smallest_prime_factor[m as usize] as u64;
        let mut a = 0u32;
        while m % p == 0 {
            m /= p;
            a += 1;
        }
        entries.push((p, a));
    }
    Ok(ExponentVector { entries })
}

/// Ω(n): number of prime divisors of n counted with multiplicity; Ω(1) = 0.
pub fn omega(n: u64, table: &PrimeTable) -> Result<u32> {
    table.check_range(n)?;
    let mut m = n;
    let mut count = 0u32;
    while m > 1 {
        m /= table.smallest_prime_factor[m as usize] as u64;
        count += 1;
    }
    Ok(count)
}

/// Möbius function by trial division. Only used for small arguments (the
/// truncation order of the prime-zeta series), so no sieve is required.
pub fn moebius(n: u64) -> i32 {
    assert!(n >= 1);
    let mut m = n;
    let mut factors = 0;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0; // squareful
            }
            factors += 1;
        }
        d += 1;
    }
    if m > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}
