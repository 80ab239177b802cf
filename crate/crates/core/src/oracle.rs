//! Exhaustive search at small orders.
//!
//! Nothing here calls into the constructions, and primality is decided by
//! trial division rather than the shared sieve, so the oracle can serve as
//! independent ground truth for them.

use thiserror::Error;

use crate::graph::{
    canonical_cycle, CycleWitness, Interval, PathWitness, TwoFactorWitness, Vertex,
};

/// Default cap for the path and cycle searches.
pub const DEFAULT_MAX_ORDER: usize = 22;
/// Default cap for the 2-factor search.
pub const DEFAULT_MAX_FACTOR_ORDER: usize = 14;
/// Above this the subset table would pass 1 GiB whatever the configuration.
pub const HARD_MAX_ORDER: usize = 28;
pub const MAX_ORDER_VAR: &str = "ORACLE_MAX_ORDER";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("order {order} exceeds the oracle cap {cap}")]
    OrderExceedsCap { order: usize, cap: usize },
    #[error("vertex {vertex} is outside [{lo}, {hi}]")]
    OutOfRange {
        vertex: Vertex,
        lo: Vertex,
        hi: Vertex,
    },
    #[error("endpoints must be distinct, got {0} twice")]
    SameEndpoints(Vertex),
    #[error("invalid order {0}")]
    BadOrder(Vertex),
    #[error("{0} is not set to a valid order")]
    BadEnv(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_order: usize,
    pub max_factor_order: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_order: DEFAULT_MAX_ORDER,
            max_factor_order: DEFAULT_MAX_FACTOR_ORDER,
        }
    }
}

impl OracleConfig {
    /// Defaults, with `max_order` taken from `ORACLE_MAX_ORDER` when set.
    pub fn from_env() -> Result<Self, OracleError> {
        let mut config = OracleConfig::default();
        if let Ok(value) = std::env::var(MAX_ORDER_VAR) {
            config.max_order = value
                .trim()
                .parse()
                .map_err(|_| OracleError::BadEnv(MAX_ORDER_VAR))?;
        }
        Ok(config)
    }

    fn guard(cap: usize, order: usize) -> Result<(), OracleError> {
        let cap = cap.min(HARD_MAX_ORDER);
        if order > cap {
            return Err(OracleError::OrderExceedsCap { order, cap });
        }
        Ok(())
    }
}

fn prime(d: u32) -> bool {
    d >= 2
        && (2..)
            .take_while(|k| k * k <= d)
            .all(|k| !d.is_multiple_of(k))
}

/// Adjacency bitmasks over local indices `0..order`, keeping only
/// differences accepted by `keep`.
fn adjacency(order: usize, keep: impl Fn(u32) -> bool) -> Vec<u32> {
    (0..order)
        .map(|u| {
            (0..order)
                .filter(|&v| v != u && keep(u.abs_diff(v) as u32))
                .fold(0u32, |mask, v| mask | 1 << v)
        })
        .collect()
}

fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            i
        })
    })
}

/// `table[mask]` holds every start vertex of a Hamilton path of `mask`
/// that ends at `end`.
fn paths_into(adj: &[u32], end: usize) -> Vec<u32> {
    let order = adj.len();
    let mut table = vec![0u32; 1 << order];
    table[1 << end] = 1 << end;
    for mask in 0..table.len() {
        let starts = table[mask];
        for u in bits(starts) {
            for v in bits(adj[u] & !(mask as u32)) {
                table[mask | 1 << v] |= 1 << v;
            }
        }
    }
    table
}

/// Walks from `start` to the table's end, always taking the smallest
/// feasible successor.
fn reconstruct(adj: &[u32], table: &[u32], start: usize) -> Vec<usize> {
    let mut mask = (1u32 << adj.len()) - 1;
    let mut path = vec![start];
    let mut current = start;
    while mask != 1 << current {
        mask &= !(1 << current);
        let next = bits(adj[current] & mask)
            .find(|&v| table[mask as usize] & 1 << v != 0)
            .expect("table entry implies a successor");
        path.push(next);
        current = next;
    }
    path
}

fn locate(interval: Interval, vertex: Vertex) -> Result<usize, OracleError> {
    if !interval.contains(vertex) {
        return Err(OracleError::OutOfRange {
            vertex,
            lo: interval.lo(),
            hi: interval.hi(),
        });
    }
    Ok((vertex - interval.lo()) as usize)
}

fn first(n: Vertex) -> Result<Interval, OracleError> {
    Interval::first(n).map_err(|_| OracleError::BadOrder(n))
}

/// Some Hamilton path of `G_{lo,hi}` from `a` to `b`, or `None`.
pub fn brute_hamilton_path(
    config: &OracleConfig,
    interval: Interval,
    a: Vertex,
    b: Vertex,
) -> Result<Option<PathWitness>, OracleError> {
    OracleConfig::guard(config.max_order, interval.order())?;
    let (start, end) = (locate(interval, a)?, locate(interval, b)?);
    if start == end {
        return Err(OracleError::SameEndpoints(a));
    }
    let adj = adjacency(interval.order(), prime);
    let table = paths_into(&adj, end);
    if table[table.len() - 1] & 1 << start == 0 {
        return Ok(None);
    }
    let seq = reconstruct(&adj, &table, start)
        .into_iter()
        .map(|i| interval.lo() + i as Vertex)
        .collect();
    Ok(Some(PathWitness::new(interval, seq)))
}

/// Endpoint pairs `(a, b)`, `a < b`, of `G_n` with no Hamilton path.
pub fn brute_infeasible_pairs(
    config: &OracleConfig,
    n: Vertex,
) -> Result<Vec<(Vertex, Vertex)>, OracleError> {
    let interval = first(n)?;
    OracleConfig::guard(config.max_order, interval.order())?;
    let adj = adjacency(interval.order(), prime);
    let full = (1usize << adj.len()) - 1;
    let mut pairs = Vec::new();
    for end in 1..adj.len() {
        let starts = paths_into(&adj, end)[full];
        for start in 0..end {
            if starts & 1 << start == 0 {
                pairs.push((start as Vertex + 1, end as Vertex + 1));
            }
        }
    }
    pairs.sort_unstable();
    Ok(pairs)
}

fn restricted_cycle(
    config: &OracleConfig,
    n: Vertex,
    keep: impl Fn(u32) -> bool,
) -> Result<Option<CycleWitness>, OracleError> {
    let interval = first(n)?;
    OracleConfig::guard(config.max_order, interval.order())?;
    if n < 3 {
        return Ok(None);
    }
    let adj = adjacency(interval.order(), keep);
    let table = paths_into(&adj, 0);
    let full = table[table.len() - 1];
    let Some(start) = bits(adj[0] & full).next() else {
        return Ok(None);
    };
    let seq: Vec<Vertex> = reconstruct(&adj, &table, start)
        .into_iter()
        .map(|i| i as Vertex + 1)
        .collect();
    Ok(Some(CycleWitness::new(interval, canonical_cycle(&seq))))
}

/// Some Hamilton cycle of `G_n`, or `None`.
pub fn brute_hamilton_cycle(
    config: &OracleConfig,
    n: Vertex,
) -> Result<Option<CycleWitness>, OracleError> {
    restricted_cycle(config, n, prime)
}

/// Some Hamilton cycle of `G_n` whose differences all lie in `allowed`.
/// Non-prime entries of `allowed` are ignored.
pub fn brute_diff_restricted_cycle(
    config: &OracleConfig,
    n: Vertex,
    allowed: &[u32],
) -> Result<Option<CycleWitness>, OracleError> {
    restricted_cycle(config, n, |d| prime(d) && allowed.contains(&d))
}

/// Neighbour order for [`dfs_hamilton_path`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Traversal {
    Ascending,
    Descending,
}

/// Plain depth-first search for a Hamilton path, visiting neighbours in
/// the given order. Slower than [`brute_hamilton_path`]; kept as a second
/// opinion.
pub fn dfs_hamilton_path(
    config: &OracleConfig,
    interval: Interval,
    a: Vertex,
    b: Vertex,
    traversal: Traversal,
) -> Result<Option<PathWitness>, OracleError> {
    OracleConfig::guard(config.max_order, interval.order())?;
    let (start, end) = (locate(interval, a)?, locate(interval, b)?);
    if start == end {
        return Err(OracleError::SameEndpoints(a));
    }
    let adj = adjacency(interval.order(), prime);
    let full = (1u32 << adj.len()) - 1;

    fn go(
        adj: &[u32],
        full: u32,
        end: usize,
        traversal: Traversal,
        used: u32,
        path: &mut Vec<usize>,
    ) -> bool {
        let current = *path.last().expect("path starts non-empty");
        if used == full {
            return current == end;
        }
        let mut next: Vec<usize> = bits(adj[current] & !used).collect();
        if traversal == Traversal::Descending {
            next.reverse();
        }
        for v in next {
            // The far endpoint may only be entered last.
            if v == end && used | 1 << v != full {
                continue;
            }
            path.push(v);
            if go(adj, full, end, traversal, used | 1 << v, path) {
                return true;
            }
            path.pop();
        }
        false
    }

    let mut path = vec![start];
    if !go(&adj, full, end, traversal, 1 << start, &mut path) {
        return Ok(None);
    }
    let seq = path
        .into_iter()
        .map(|i| interval.lo() + i as Vertex)
        .collect();
    Ok(Some(PathWitness::new(interval, seq)))
}

/// Some 2-factor of `G_n`, `n` the sum of `lengths`, with exactly those
/// cycle lengths.
pub fn brute_two_factor(
    config: &OracleConfig,
    lengths: &[usize],
) -> Result<Option<TwoFactorWitness>, OracleError> {
    let order: usize = lengths.iter().sum();
    OracleConfig::guard(config.max_factor_order, order)?;
    let n = Vertex::try_from(order).map_err(|_| OracleError::BadOrder(Vertex::MAX))?;
    let interval = first(n)?;
    if lengths.iter().any(|&l| l < 3) {
        return Ok(None);
    }
    let adj = adjacency(order, prime);
    let mut remaining = vec![0usize; order + 1];
    for &l in lengths {
        remaining[l] += 1;
    }
    let mut cycles = Vec::new();
    if !cover(&adj, 0, &mut remaining, &mut cycles) {
        return Ok(None);
    }
    let cycles = cycles
        .into_iter()
        .map(|c: Vec<usize>| c.into_iter().map(|i| i as Vertex + 1).collect())
        .collect();
    Ok(Some(TwoFactorWitness::new(interval, cycles)))
}

/// Whether `G_n` has a 2-factor with the given cycle lengths.
pub fn brute_two_factor_exists(
    config: &OracleConfig,
    lengths: &[usize],
) -> Result<bool, OracleError> {
    brute_two_factor(config, lengths).map(|w| w.is_some())
}

/// Covers the unused vertices with cycles of the remaining lengths. Each
/// cycle starts at the smallest unused vertex and is oriented so its second
/// vertex is smaller than its last.
fn cover(adj: &[u32], used: u32, remaining: &mut [usize], cycles: &mut Vec<Vec<usize>>) -> bool {
    let free = !used & ((1u32 << adj.len()) - 1);
    if free == 0 {
        return remaining.iter().all(|&c| c == 0);
    }
    let pivot = free.trailing_zeros() as usize;
    for length in 3..remaining.len() {
        if remaining[length] == 0 || (free.count_ones() as usize) < length {
            continue;
        }
        remaining[length] -= 1;
        let mut cycle = vec![pivot];
        if grow(
            adj,
            used | 1 << pivot,
            length,
            &mut cycle,
            remaining,
            cycles,
        ) {
            return true;
        }
        remaining[length] += 1;
    }
    false
}

fn grow(
    adj: &[u32],
    used: u32,
    length: usize,
    cycle: &mut Vec<usize>,
    remaining: &mut [usize],
    cycles: &mut Vec<Vec<usize>>,
) -> bool {
    let pivot = cycle[0];
    let current = *cycle.last().expect("cycle starts at the pivot");
    if cycle.len() == length {
        if adj[current] & 1 << pivot == 0 || cycle[1] > current {
            return false;
        }
        cycles.push(cycle.clone());
        if cover(adj, used, remaining, cycles) {
            return true;
        }
        cycles.pop();
        return false;
    }
    for v in bits(adj[current] & !used) {
        cycle.push(v);
        if grow(adj, used | 1 << v, length, cycle, remaining, cycles) {
            return true;
        }
        cycle.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{verify_cycle, verify_path, verify_two_factor};

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    fn span(n: Vertex) -> Interval {
        Interval::first(n).unwrap()
    }

    #[test]
    fn own_primality() {
        let small: Vec<u32> = (0..40).filter(|&d| prime(d)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }

    #[test]
    fn listed_paths() {
        let p = brute_hamilton_path(&cfg(), span(5), 1, 3).unwrap().unwrap();
        assert_eq!(p.sequence(), &[1, 4, 2, 5, 3]);
        assert!(brute_hamilton_path(&cfg(), span(5), 4, 5)
            .unwrap()
            .is_none());
        let shifted = Interval::new(11, 20).unwrap();
        let p = brute_hamilton_path(&cfg(), shifted, 20, 11)
            .unwrap()
            .unwrap();
        assert_eq!(verify_path(&p, Some((20, 11))), Ok(()));
    }

    #[test]
    fn exception_sets() {
        assert_eq!(
            brute_infeasible_pairs(&cfg(), 5).unwrap(),
            vec![(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]
        );
        assert_eq!(
            brute_infeasible_pairs(&cfg(), 6).unwrap(),
            vec![(2, 3), (3, 4), (4, 5)]
        );
        assert_eq!(
            brute_infeasible_pairs(&cfg(), 7).unwrap(),
            vec![(3, 4), (4, 5)]
        );
        assert_eq!(brute_infeasible_pairs(&cfg(), 8).unwrap(), vec![(4, 5)]);
        assert!(brute_infeasible_pairs(&cfg(), 9).unwrap().is_empty());
    }

    #[test]
    fn cycles() {
        assert!(brute_hamilton_cycle(&cfg(), 4).unwrap().is_none());
        for n in 5..=12 {
            let c = brute_hamilton_cycle(&cfg(), n).unwrap().unwrap();
            assert_eq!(verify_cycle(&c, None, None), Ok(()));
        }
        let c = brute_diff_restricted_cycle(&cfg(), 5, &[2, 3])
            .unwrap()
            .unwrap();
        assert_eq!(c.sequence(), canonical_cycle(&[1, 4, 2, 5, 3]).as_slice());
        for n in [4, 6, 7, 8, 9] {
            assert!(brute_diff_restricted_cycle(&cfg(), n, &[2, 3])
                .unwrap()
                .is_none());
        }
        let c = brute_diff_restricted_cycle(&cfg(), 9, &[2, 7])
            .unwrap()
            .unwrap();
        assert_eq!(verify_cycle(&c, None, Some(&[2, 7])), Ok(()));
        assert!(brute_diff_restricted_cycle(&cfg(), 10, &[2, 3])
            .unwrap()
            .is_some());
    }

    #[test]
    fn two_factors() {
        assert!(!brute_two_factor_exists(&cfg(), &[3, 3]).unwrap());
        assert!(brute_two_factor_exists(&cfg(), &[3, 4]).unwrap());
        assert!(brute_two_factor_exists(&cfg(), &[3, 3, 3]).unwrap());
        assert!(!brute_two_factor_exists(&cfg(), &[4]).unwrap());
        let w = brute_two_factor(&cfg(), &[4, 3, 4]).unwrap().unwrap();
        assert_eq!(verify_two_factor(&w, Some(&[3, 4, 4])), Ok(()));
    }

    #[test]
    fn traversal_orders_agree() {
        for n in 2..=10 {
            for a in 1..=n {
                for b in (1..=n).filter(|&b| b != a) {
                    let dp = brute_hamilton_path(&cfg(), span(n), a, b).unwrap();
                    for t in [Traversal::Ascending, Traversal::Descending] {
                        let dfs = dfs_hamilton_path(&cfg(), span(n), a, b, t).unwrap();
                        assert_eq!(dp.is_some(), dfs.is_some(), "n={n} ({a},{b}) {t:?}");
                        if let Some(p) = dfs {
                            assert_eq!(verify_path(&p, Some((a, b))), Ok(()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        let tight = OracleConfig {
            max_order: 8,
            max_factor_order: 6,
        };
        assert_eq!(
            brute_hamilton_path(&tight, span(9), 1, 2),
            Err(OracleError::OrderExceedsCap { order: 9, cap: 8 })
        );
        assert_eq!(
            brute_two_factor_exists(&tight, &[3, 4]),
            Err(OracleError::OrderExceedsCap { order: 7, cap: 6 })
        );
        let loose = OracleConfig {
            max_order: 100,
            ..cfg()
        };
        assert_eq!(
            brute_infeasible_pairs(&loose, 40),
            Err(OracleError::OrderExceedsCap {
                order: 40,
                cap: HARD_MAX_ORDER
            })
        );
        assert_eq!(
            brute_hamilton_path(&cfg(), span(5), 3, 3),
            Err(OracleError::SameEndpoints(3))
        );
        assert!(matches!(
            brute_hamilton_path(&cfg(), span(5), 1, 6),
            Err(OracleError::OutOfRange { vertex: 6, .. })
        ));
    }
}
