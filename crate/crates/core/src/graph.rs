//! The prime difference graph on an integer interval, the witness types that
//! certify Hamilton paths, cycles and 2-factors in it, and their verifiers.
//!
//! Two vertices `u`, `v` are adjacent iff `|u - v|` is prime. Witnesses carry
//! their interval explicitly; the verifiers never infer the vertex set from
//! the sequence.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::primes::{self, PrimeTable};

pub type Vertex = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("interval [{lo}, {hi}] is empty or starts below 1")]
    BadInterval { lo: u64, hi: u64 },
}

/// A contiguous vertex set `[lo, hi]` with `1 <= lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Vertex,
    hi: Vertex,
}

impl Interval {
    pub fn new(lo: Vertex, hi: Vertex) -> Result<Self, DomainError> {
        if lo == 0 || lo > hi {
            return Err(DomainError::BadInterval {
                lo: lo.into(),
                hi: hi.into(),
            });
        }
        Ok(Interval { lo, hi })
    }

    /// `[1, n]`, the vertex set of `G_n`.
    pub fn first(n: Vertex) -> Result<Self, DomainError> {
        Interval::new(1, n)
    }

    pub fn lo(&self) -> Vertex {
        self.lo
    }

    pub fn hi(&self) -> Vertex {
        self.hi
    }

    pub fn order(&self) -> usize {
        (self.hi - self.lo) as usize + 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        self.lo..=self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// `|u - v|` is prime.
pub fn adjacent(u: Vertex, v: Vertex) -> bool {
    primes::is_prime(u64::from(u.abs_diff(v)))
}

/// Claimed Hamilton path of an interval.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWitness {
    interval: Interval,
    sequence: Vec<Vertex>,
}

impl PathWitness {
    pub fn new(interval: Interval, sequence: Vec<Vertex>) -> Self {
        PathWitness { interval, sequence }
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn sequence(&self) -> &[Vertex] {
        &self.sequence
    }

    pub fn into_sequence(self) -> Vec<Vertex> {
        self.sequence
    }

    /// First and last vertex, if the sequence is non-empty.
    pub fn endpoints(&self) -> Option<(Vertex, Vertex)> {
        Some((*self.sequence.first()?, *self.sequence.last()?))
    }

    /// Joins the path into a cycle through its end vertices.
    pub fn close(self) -> CycleWitness {
        CycleWitness::new(self.interval, self.sequence)
    }
}

/// Claimed Hamilton cycle of an interval; the last vertex wraps to the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWitness {
    interval: Interval,
    sequence: Vec<Vertex>,
}

impl CycleWitness {
    pub fn new(interval: Interval, sequence: Vec<Vertex>) -> Self {
        CycleWitness { interval, sequence }
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn sequence(&self) -> &[Vertex] {
        &self.sequence
    }

    pub fn into_sequence(self) -> Vec<Vertex> {
        self.sequence
    }

    /// Same cycle, rotated to start at its minimum and oriented towards the
    /// smaller neighbour.
    pub fn canonical(&self) -> CycleWitness {
        CycleWitness::new(self.interval, canonical_cycle(&self.sequence))
    }

    /// Unordered consecutive pairs, wraparound included.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        cycle_edges(&self.sequence)
    }

    /// Drops the closing edge; the path starts at `sequence[start]`.
    pub fn open_at(&self, start: usize) -> PathWitness {
        let len = self.sequence.len();
        let seq = (0..len).map(|i| self.sequence[(start + i) % len]).collect();
        PathWitness::new(self.interval, seq)
    }
}

/// Claimed 2-factor: vertex-disjoint cycles covering the interval.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoFactorWitness {
    interval: Interval,
    cycles: Vec<Vec<Vertex>>,
}

impl TwoFactorWitness {
    pub fn new(interval: Interval, cycles: Vec<Vec<Vertex>>) -> Self {
        TwoFactorWitness { interval, cycles }
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn cycles(&self) -> &[Vec<Vertex>] {
        &self.cycles
    }

    pub fn into_cycles(self) -> Vec<Vec<Vertex>> {
        self.cycles
    }

    /// Cycle lengths in ascending order.
    pub fn lengths(&self) -> Vec<usize> {
        let mut lengths: Vec<_> = self.cycles.iter().map(Vec::len).collect();
        lengths.sort_unstable();
        lengths
    }
}

/// Rotate so the minimum is first, then orient so the second entry is the
/// smaller of the minimum's two neighbours.
pub fn canonical_cycle(sequence: &[Vertex]) -> Vec<Vertex> {
    let len = sequence.len();
    let Some((start, _)) = sequence.iter().enumerate().min_by_key(|(_, &v)| v) else {
        return Vec::new();
    };
    let next = sequence[(start + 1) % len];
    let prev = sequence[(start + len - 1) % len];
    if next <= prev {
        (0..len).map(|i| sequence[(start + i) % len]).collect()
    } else {
        (0..len)
            .map(|i| sequence[(start + len - i) % len])
            .collect()
    }
}

fn cycle_edges(sequence: &[Vertex]) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    let len = sequence.len();
    (0..len).map(move |i| {
        let (a, b) = (sequence[i], sequence[(i + 1) % len]);
        (a.min(b), a.max(b))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("sequence is not a permutation of the interval")]
    NotPermutation,
    #[error("difference at position {position} is not prime")]
    NonPrimeDifference { position: usize },
    #[error("expected endpoints {expected:?}, found {found:?}")]
    WrongEndpoints {
        expected: (Vertex, Vertex),
        found: Option<(Vertex, Vertex)>,
    },
    #[error("cycle {cycle} has fewer than 3 vertices")]
    ShortCycle { cycle: usize },
    #[error("required edge {edge:?} is not traversed")]
    MissingRequiredEdge { edge: (Vertex, Vertex) },
    #[error("difference {difference} at position {position} is not allowed")]
    DisallowedDifference { position: usize, difference: u32 },
    #[error("cycles do not partition the interval")]
    NotPartition,
    #[error("difference at position {position} of cycle {cycle} is not prime")]
    CycleNonPrimeDifference { cycle: usize, position: usize },
    #[error("cycle lengths {found:?} differ from {expected:?}")]
    WrongLengthMultiset {
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("edge {edge:?} is shared by cycles {cycles:?}")]
    SharedEdge {
        edge: (Vertex, Vertex),
        cycles: (usize, usize),
    },
    #[error("cycles live on different intervals")]
    IntervalMismatch,
}

fn is_permutation(interval: Interval, sequence: &[Vertex]) -> bool {
    if sequence.len() != interval.order() {
        return false;
    }
    let mut seen = vec![false; sequence.len()];
    sequence.iter().all(|&v| {
        interval.contains(v) && !std::mem::replace(&mut seen[(v - interval.lo) as usize], true)
    })
}

fn table_for(interval: Interval) -> std::sync::Arc<PrimeTable> {
    primes::table_covering(interval.order() as u64)
}

/// Certifies a Hamilton path, optionally with ordered end vertices.
pub fn verify_path(
    witness: &PathWitness,
    expected_endpoints: Option<(Vertex, Vertex)>,
) -> Result<(), Violation> {
    let seq = witness.sequence();
    if !is_permutation(witness.interval, seq) {
        return Err(Violation::NotPermutation);
    }
    let table = table_for(witness.interval);
    if let Some(position) = seq
        .windows(2)
        .position(|w| !table.contains(u64::from(w[0].abs_diff(w[1]))))
    {
        return Err(Violation::NonPrimeDifference { position });
    }
    if let Some(expected) = expected_endpoints {
        let found = witness.endpoints();
        if found != Some(expected) {
            return Err(Violation::WrongEndpoints { expected, found });
        }
    }
    Ok(())
}

/// Certifies a Hamilton cycle, optionally requiring an edge and restricting
/// the differences used.
pub fn verify_cycle(
    witness: &CycleWitness,
    required_edge: Option<(Vertex, Vertex)>,
    allowed_diffs: Option<&[u32]>,
) -> Result<(), Violation> {
    let seq = witness.sequence();
    if seq.len() < 3 {
        return Err(Violation::ShortCycle { cycle: 0 });
    }
    if !is_permutation(witness.interval, seq) {
        return Err(Violation::NotPermutation);
    }
    let table = table_for(witness.interval);
    let len = seq.len();
    for position in 0..len {
        let difference = seq[position].abs_diff(seq[(position + 1) % len]);
        if !table.contains(u64::from(difference)) {
            return Err(Violation::NonPrimeDifference { position });
        }
        if allowed_diffs.is_some_and(|allowed| !allowed.contains(&difference)) {
            return Err(Violation::DisallowedDifference {
                position,
                difference,
            });
        }
    }
    if let Some((a, b)) = required_edge {
        let edge = (a.min(b), a.max(b));
        if !witness.edges().any(|e| e == edge) {
            return Err(Violation::MissingRequiredEdge { edge });
        }
    }
    Ok(())
}

/// Certifies a 2-factor, optionally against a multiset of cycle lengths
/// (given in any order).
pub fn verify_two_factor(
    witness: &TwoFactorWitness,
    expected_lengths: Option<&[usize]>,
) -> Result<(), Violation> {
    let interval = witness.interval;
    if let Some(cycle) = witness.cycles.iter().position(|c| c.len() < 3) {
        return Err(Violation::ShortCycle { cycle });
    }
    let total: usize = witness.cycles.iter().map(Vec::len).sum();
    if total != interval.order() {
        return Err(Violation::NotPartition);
    }
    let mut seen = vec![false; total];
    for &v in witness.cycles.iter().flatten() {
        if !interval.contains(v) || std::mem::replace(&mut seen[(v - interval.lo) as usize], true) {
            return Err(Violation::NotPartition);
        }
    }
    let table = table_for(interval);
    for (cycle, seq) in witness.cycles.iter().enumerate() {
        let len = seq.len();
        if let Some(position) =
            (0..len).find(|&i| !table.contains(u64::from(seq[i].abs_diff(seq[(i + 1) % len]))))
        {
            return Err(Violation::CycleNonPrimeDifference { cycle, position });
        }
    }
    if let Some(expected) = expected_lengths {
        let mut expected = expected.to_vec();
        expected.sort_unstable();
        let found = witness.lengths();
        if found != expected {
            return Err(Violation::WrongLengthMultiset { expected, found });
        }
    }
    Ok(())
}

/// No unordered vertex pair is consecutive in two different cycles.
pub fn verify_edge_disjoint(cycles: &[CycleWitness]) -> Result<(), Violation> {
    if cycles.windows(2).any(|w| w[0].interval != w[1].interval) {
        return Err(Violation::IntervalMismatch);
    }
    let mut owner: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for (index, cycle) in cycles.iter().enumerate() {
        for edge in cycle.edges() {
            match owner.get(&edge) {
                Some(&first) if first != index => {
                    return Err(Violation::SharedEdge {
                        edge,
                        cycles: (first, index),
                    })
                }
                Some(_) => {}
                None => {
                    owner.insert(edge, index);
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(lo: Vertex, hi: Vertex, seq: &[Vertex]) -> PathWitness {
        PathWitness::new(Interval::new(lo, hi).unwrap(), seq.to_vec())
    }

    fn cycle(lo: Vertex, hi: Vertex, seq: &[Vertex]) -> CycleWitness {
        CycleWitness::new(Interval::new(lo, hi).unwrap(), seq.to_vec())
    }

    #[test]
    fn interval_bounds() {
        assert!(Interval::new(0, 3).is_err());
        assert!(Interval::new(4, 3).is_err());
        let i = Interval::new(3, 8).unwrap();
        assert_eq!(i.order(), 6);
        assert!(i.contains(3) && i.contains(8) && !i.contains(9));
        assert_eq!(Interval::first(1).unwrap().order(), 1);
    }

    #[test]
    fn adjacency() {
        assert!(adjacent(1, 3));
        assert!(!adjacent(1, 2));
        assert!(adjacent(2, 9));
        assert!(adjacent(9, 2));
        assert!(!adjacent(5, 5));
    }

    #[test]
    fn path_verifier() {
        assert_eq!(
            verify_path(&path(1, 7, &[1, 6, 4, 2, 7, 5, 3]), Some((1, 3))),
            Ok(())
        );
        assert_eq!(
            verify_path(&path(1, 3, &[1, 2, 3]), None),
            Err(Violation::NonPrimeDifference { position: 0 })
        );
        assert_eq!(
            verify_path(&path(1, 3, &[1, 3, 1]), None),
            Err(Violation::NotPermutation)
        );
        assert_eq!(
            verify_path(&path(1, 7, &[1, 6, 4, 2, 7, 5, 3]), Some((3, 1))),
            Err(Violation::WrongEndpoints {
                expected: (3, 1),
                found: Some((1, 3))
            })
        );
        assert_eq!(
            verify_path(&path(1, 3, &[1, 3]), None),
            Err(Violation::NotPermutation)
        );
        assert_eq!(
            verify_path(&path(2, 4, &[1, 3, 4]), None),
            Err(Violation::NotPermutation)
        );
        assert_eq!(verify_path(&path(5, 5, &[5]), Some((5, 5))), Ok(()));
    }

    #[test]
    fn shifted_interval_is_not_inferred() {
        // Valid on [3, 8] but not on [1, 6].
        let seq = [3, 6, 8, 5, 7, 4];
        assert_eq!(verify_path(&path(3, 8, &seq), None), Ok(()));
        assert_eq!(
            verify_path(&path(1, 6, &seq), None),
            Err(Violation::NotPermutation)
        );
    }

    #[test]
    fn cycle_verifier() {
        let g9 = cycle(1, 9, &[1, 3, 5, 7, 9, 2, 4, 6, 8]);
        assert_eq!(verify_cycle(&g9, None, Some(&[2, 7])), Ok(()));
        assert_eq!(
            verify_cycle(&cycle(1, 5, &[1, 4, 2, 5, 3]), None, None),
            Ok(())
        );
        assert_eq!(
            verify_cycle(&g9, None, Some(&[2, 3])),
            Err(Violation::DisallowedDifference {
                position: 4,
                difference: 7
            })
        );
        assert_eq!(verify_cycle(&g9, Some((8, 1)), None), Ok(()));
        assert_eq!(
            verify_cycle(&g9, Some((1, 4)), None),
            Err(Violation::MissingRequiredEdge { edge: (1, 4) })
        );
        // G_4 has Hamilton paths but no Hamilton cycle.
        assert_eq!(
            verify_cycle(&cycle(1, 4, &[3, 1, 4, 2]), None, None),
            Err(Violation::NonPrimeDifference { position: 3 })
        );
        assert_eq!(
            verify_cycle(&cycle(1, 2, &[1, 2]), None, None),
            Err(Violation::ShortCycle { cycle: 0 })
        );
    }

    #[test]
    fn two_factor_verifier() {
        let i7 = Interval::first(7).unwrap();
        let w = TwoFactorWitness::new(i7, vec![vec![1, 3, 6], vec![2, 5, 7, 4]]);
        assert_eq!(verify_two_factor(&w, Some(&[3, 4])), Ok(()));
        assert_eq!(verify_two_factor(&w, Some(&[4, 3])), Ok(()));
        assert_eq!(
            verify_two_factor(&w, Some(&[7])),
            Err(Violation::WrongLengthMultiset {
                expected: vec![7],
                found: vec![3, 4]
            })
        );
        let i9 = Interval::first(9).unwrap();
        let w = TwoFactorWitness::new(i9, vec![vec![1, 3, 8], vec![2, 5, 7], vec![4, 6, 9]]);
        assert_eq!(verify_two_factor(&w, Some(&[3, 3, 3])), Ok(()));

        let overlap = TwoFactorWitness::new(i7, vec![vec![1, 3, 6], vec![1, 5, 7, 4]]);
        assert_eq!(
            verify_two_factor(&overlap, None),
            Err(Violation::NotPartition)
        );
        let short = TwoFactorWitness::new(i7, vec![vec![1, 3], vec![2, 5, 7, 4, 6]]);
        assert_eq!(
            verify_two_factor(&short, None),
            Err(Violation::ShortCycle { cycle: 0 })
        );
        let bad = TwoFactorWitness::new(i7, vec![vec![1, 3, 6], vec![2, 4, 5, 7]]);
        assert_eq!(
            verify_two_factor(&bad, None),
            Err(Violation::CycleNonPrimeDifference {
                cycle: 1,
                position: 1
            })
        );
        let outside = TwoFactorWitness::new(i7, vec![vec![1, 3, 6], vec![2, 5, 8, 4]]);
        assert_eq!(
            verify_two_factor(&outside, None),
            Err(Violation::NotPartition)
        );
    }

    #[test]
    fn edge_disjointness() {
        let a = cycle(1, 9, &[1, 3, 5, 7, 9, 2, 4, 6, 8]);
        assert!(matches!(
            verify_edge_disjoint(&[a.clone(), a.clone()]),
            Err(Violation::SharedEdge { cycles: (0, 1), .. })
        ));
        assert_eq!(verify_edge_disjoint(std::slice::from_ref(&a)), Ok(()));
        assert_eq!(verify_edge_disjoint(&[]), Ok(()));
        let other = cycle(1, 10, &[1, 3, 5, 7, 9, 2, 4, 6, 8, 10]);
        assert_eq!(
            verify_edge_disjoint(&[a, other]),
            Err(Violation::IntervalMismatch)
        );
    }

    #[test]
    fn canonical_form() {
        assert_eq!(canonical_cycle(&[2, 5, 3, 1, 4]), vec![1, 3, 5, 2, 4]);
        assert_eq!(canonical_cycle(&[3, 5, 2, 4, 1]), vec![1, 3, 5, 2, 4]);
        assert_eq!(canonical_cycle(&[1, 4, 2, 5, 3]), vec![1, 3, 5, 2, 4]);
        assert_eq!(canonical_cycle(&[]), Vec::<Vertex>::new());
        let c = cycle(1, 5, &[5, 3, 1, 4, 2]);
        assert_eq!(c.canonical().sequence(), &[1, 3, 5, 2, 4]);
    }

    #[test]
    fn open_cycle_rotations() {
        let c = cycle(1, 5, &[1, 4, 2, 5, 3]);
        for start in 0..5 {
            assert_eq!(verify_path(&c.open_at(start), None), Ok(()));
        }
    }
}
