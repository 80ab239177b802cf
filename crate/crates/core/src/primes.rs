//! Primality, prime pair decompositions and prime arithmetic progressions.
//!
//! A process-wide sieve backs the edge predicate of every prime difference
//! graph. It grows on demand, so callers never have to size it up front.

use std::sync::{Arc, OnceLock, RwLock};

use thiserror::Error;

/// Values above this are tested by trial division instead of growing the sieve.
const SIEVE_CEILING: u64 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PrimeError {
    #[error("{value} exceeds the prime table limit {limit}")]
    OutOfRange { value: u64, limit: u64 },
}

/// Sieve of Eratosthenes over `[0, limit]`.
#[derive(Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    composite: Vec<bool>,
}

impl std::fmt::Debug for PrimeTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PrimeTable")
            .field("limit", &self.limit)
            .field("count", &self.count())
            .finish()
    }
}

impl PrimeTable {
    /// Sieves every integer up to and including `limit`.
    pub fn sieve(limit: u64) -> Self {
        let size = limit as usize + 1;
        let mut composite = vec![false; size.max(2)];
        composite[0] = true;
        composite[1] = true;
        let mut i = 2usize;
        while i * i < size {
            if !composite[i] {
                let mut j = i * i;
                while j < size {
                    composite[j] = true;
                    j += i;
                }
            }
            i += 1;
        }
        composite.truncate(size);
        PrimeTable { limit, composite }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Membership test; `k` must lie in `[0, limit]`.
    pub fn is_prime(&self, k: u64) -> Result<bool, PrimeError> {
        if k > self.limit {
            return Err(PrimeError::OutOfRange {
                value: k,
                limit: self.limit,
            });
        }
        Ok(!self.composite[k as usize])
    }

    /// Unchecked membership for callers that already know `k <= limit`.
    #[inline]
    pub(crate) fn contains(&self, k: u64) -> bool {
        !self.composite[k as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.composite
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(k, _)| k as u64)
    }

    pub fn count(&self) -> usize {
        self.composite.iter().filter(|&&c| !c).count()
    }
}

fn shared() -> &'static RwLock<Arc<PrimeTable>> {
    static TABLE: OnceLock<RwLock<Arc<PrimeTable>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(Arc::new(PrimeTable::sieve(1 << 12))))
}

/// Returns a snapshot of the shared sieve that covers at least `limit`.
///
/// The sieve at least doubles on each growth, so repeated calls with slowly
/// increasing limits stay amortised linear. Limits above the internal ceiling
/// are clamped; use [`is_prime`] for arbitrary values.
pub fn table_covering(limit: u64) -> Arc<PrimeTable> {
    let limit = limit.min(SIEVE_CEILING);
    {
        let table = shared().read().unwrap_or_else(|e| e.into_inner());
        if table.limit() >= limit {
            return Arc::clone(&table);
        }
    }
    let mut table = shared().write().unwrap_or_else(|e| e.into_inner());
    if table.limit() < limit {
        let grown = limit
            .max(table.limit().saturating_mul(2))
            .min(SIEVE_CEILING);
        *table = Arc::new(PrimeTable::sieve(grown));
    }
    Arc::clone(&table)
}

fn trial_division(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    if k.is_multiple_of(2) {
        return k == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= k {
        if k.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primality of any `k`, extending the shared sieve when needed.
pub fn is_prime(k: u64) -> bool {
    if k > SIEVE_CEILING {
        return trial_division(k);
    }
    table_covering(k).contains(k)
}

/// `n = p + q` with `p < q`, both prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePair {
    p: u64,
    q: u64,
}

impl PrimePair {
    /// Builds a pair from two distinct primes in either order.
    pub fn new(a: u64, b: u64) -> Option<Self> {
        if a == b || !is_prime(a) || !is_prime(b) {
            return None;
        }
        Some(PrimePair {
            p: a.min(b),
            q: a.max(b),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn sum(&self) -> u64 {
        self.p + self.q
    }

    pub fn contains(&self, prime: u64) -> bool {
        self.p == prime || self.q == prime
    }
}

/// All ways of writing `n` as a sum of two distinct primes, by ascending `p`.
pub fn prime_pair_decompositions(n: u64) -> Vec<PrimePair> {
    if n < 5 {
        return Vec::new();
    }
    let table = table_covering(n);
    (2..=(n - 1) / 2)
        .filter(|&p| table.contains(p) && table.contains(n - p))
        .map(|p| PrimePair { p, q: n - p })
        .collect()
}

/// Smallest `k`-term arithmetic progression of primes, ordered by first term
/// and then by common difference.
///
/// `search_limit` bounds both the first term and the difference. Returns
/// `None` when nothing is found inside that box.
pub fn prime_arithmetic_progression(k: usize, search_limit: u64) -> Option<Vec<u64>> {
    if k == 0 {
        return None;
    }
    if k == 1 {
        return (search_limit >= 2).then(|| vec![2]);
    }
    let span = (k as u64 - 1).checked_mul(search_limit)?;
    let table = table_covering(search_limit.saturating_add(span));
    let prime = |v: u64| {
        if v <= table.limit() {
            table.contains(v)
        } else {
            trial_division(v)
        }
    };
    for first in (2..=search_limit).filter(|&a| prime(a)) {
        for diff in 1..=search_limit {
            if (1..k as u64).all(|i| prime(first + i * diff)) {
                return Some((0..k as u64).map(|i| first + i * diff).collect());
            }
        }
    }
    None
}
