//! Hamilton cycles built from two prime differences, and families of
//! edge-disjoint ones.

use std::fmt;

use thiserror::Error;

use crate::graph::{
    canonical_cycle, verify_cycle, verify_edge_disjoint, verify_path, CycleWitness, Interval,
    PathWitness, Vertex, Violation,
};
use crate::paths::{self, PathError};
use crate::primes::{self, PrimePair};
use crate::transforms::Symmetry;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("order {n} is below the minimum {min}")]
    OrderTooSmall { n: Vertex, min: Vertex },
    #[error("G_{n} has no Hamilton cycle using only differences 2 and 3")]
    Infeasible { n: Vertex },
    #[error("{p} + {q} is not a decomposition of {n} into distinct primes")]
    BadPair { n: Vertex, p: u64, q: u64 },
    #[error("no {len}-term prime progression with first term and difference up to {search_limit}")]
    NotFound { len: usize, search_limit: u64 },
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("generated witness failed verification: {0}")]
    SelfCheck(Violation),
}

fn check<T>(witness: T, verdict: Result<(), Violation>) -> Result<T, GeneratorError> {
    verdict.map(|()| witness).map_err(GeneratorError::SelfCheck)
}

/// Hamilton path of `G_n` from `n` to `n - 1` with every step 2 or 3.
pub fn path_diff23(n: Vertex) -> Result<PathWitness, GeneratorError> {
    if n < 6 {
        return Err(GeneratorError::OrderTooSmall { n, min: 6 });
    }
    let mut seq = Vec::with_capacity(n as usize);
    if n.is_multiple_of(2) {
        seq.extend((6..=n).rev().step_by(2));
        seq.extend([3, 1, 4, 2, 5]);
        seq.extend((7..n).step_by(2));
    } else {
        seq.extend((5..=n).rev().step_by(2));
        seq.extend([2, 4, 1, 3]);
        seq.extend((6..n).step_by(2));
    }
    let witness = PathWitness::new(Interval::first(n).expect("n >= 6"), seq);
    let verdict = verify_path(&witness, Some((n, n - 1)))
        .and_then(|()| diff_check(witness.sequence(), &[2, 3]));
    check(witness, verdict)
}

fn diff_check(seq: &[Vertex], allowed: &[u32]) -> Result<(), Violation> {
    for (position, pair) in seq.windows(2).enumerate() {
        let difference = pair[0].abs_diff(pair[1]);
        if !allowed.contains(&difference) {
            return Err(Violation::DisallowedDifference {
                position,
                difference,
            });
        }
    }
    Ok(())
}

/// Hamilton cycle of `G_n` using only differences 2 and 3.
///
/// Exists exactly for `n = 5` and `n >= 10`. For `n >= 10` two such paths
/// on overlapping halves are glued at the vertices `h` and `h + 1`,
/// `h = n / 2`; the result is kept in construction order.
pub fn cycle_diff23(n: Vertex) -> Result<CycleWitness, GeneratorError> {
    let seq = match n {
        5 => vec![1, 4, 2, 5, 3],
        10.. => {
            let h = n / 2;
            let left = path_diff23(h + 1)?;
            let right = path_diff23(n - h + 1)?
                .complement()
                .shift(i64::from(h) - 1)
                .map_err(|_| GeneratorError::Infeasible { n })?;
            let right = right.sequence();
            let mut seq = left.into_sequence();
            seq.extend_from_slice(&right[1..right.len() - 1]);
            seq
        }
        _ => return Err(GeneratorError::Infeasible { n }),
    };
    let witness = CycleWitness::new(Interval::first(n).expect("n >= 5"), seq);
    let verdict = verify_cycle(&witness, None, Some(&[2, 3]));
    check(witness, verdict)
}

/// The Hamilton cycle of `G_n`, `n = p + q`, stepping by `p` modulo `n`,
/// returned in canonical form.
pub fn cycle_two_primes(n: Vertex, pair: PrimePair) -> Result<CycleWitness, GeneratorError> {
    if pair.sum() != u64::from(n) {
        return Err(GeneratorError::BadPair {
            n,
            p: pair.p(),
            q: pair.q(),
        });
    }
    let modulus = u64::from(n);
    let seq: Vec<Vertex> = (0..modulus)
        .map(|i| ((i * pair.p()) % modulus + 1) as Vertex)
        .collect();
    let witness = CycleWitness::new(Interval::first(n).expect("n >= 5"), canonical_cycle(&seq));
    let allowed = [pair.p() as u32, pair.q() as u32];
    let verdict = verify_cycle(&witness, None, Some(&allowed));
    check(witness, verdict)
}

/// Where a cycle in an edge-disjoint family came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Pair(PrimePair),
    Diff23,
    /// A generic Hamilton cycle, used only when nothing else applies.
    Fallback,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Pair(pair) => write!(f, "{{{},{}}}", pair.p(), pair.q()),
            Generator::Diff23 => write!(f, "{{2,3}}"),
            Generator::Fallback => write!(f, "fallback"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleFamily {
    pub cycles: Vec<CycleWitness>,
    pub generators: Vec<Generator>,
}

impl CycleFamily {
    /// True when the family is a single generic cycle rather than generated
    /// ones.
    pub fn is_fallback(&self) -> bool {
        self.generators == [Generator::Fallback]
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Pairwise edge-disjoint Hamilton cycles of `G_n`: one per prime pair
/// decomposition of `n`, with the {2,3} cycle replacing the (at most one)
/// pair that contains 2 or 3.
///
/// The {2,3} cycle is always taken when it exists, since it never costs more
/// than the one pair it displaces. If neither source yields a cycle the
/// family is a single generic Hamilton cycle.
pub fn edge_disjoint_cycles(n: Vertex) -> Result<CycleFamily, GeneratorError> {
    if n < 5 {
        return Err(GeneratorError::OrderTooSmall { n, min: 5 });
    }
    let diff23 = match cycle_diff23(n) {
        Ok(cycle) => Some(cycle),
        Err(GeneratorError::Infeasible { .. }) => None,
        Err(e) => return Err(e),
    };
    let mut cycles = Vec::new();
    let mut generators = Vec::new();
    for pair in primes::prime_pair_decompositions(u64::from(n)) {
        if diff23.is_some() && (pair.contains(2) || pair.contains(3)) {
            continue;
        }
        cycles.push(cycle_two_primes(n, pair)?);
        generators.push(Generator::Pair(pair));
    }
    if let Some(cycle) = diff23 {
        cycles.push(cycle);
        generators.push(Generator::Diff23);
    }
    if cycles.is_empty() {
        cycles.push(paths::hamilton_cycle(n)?);
        generators.push(Generator::Fallback);
    }
    verify_edge_disjoint(&cycles).map_err(GeneratorError::SelfCheck)?;
    Ok(CycleFamily { cycles, generators })
}

/// `t` edge-disjoint Hamilton cycles on a common order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointFamily {
    pub n: Vertex,
    pub progression: Vec<u64>,
    pub pairs: Vec<PrimePair>,
    pub cycles: Vec<CycleWitness>,
}

/// Finds an order `n` with `t` edge-disjoint Hamilton cycles.
///
/// A prime progression `p_1 < ... < p_2t` gives `n = p_1 + p_2t`, and each
/// pair `(p_i, p_{2t-i+1})` sums to `n` and generates one cycle.
pub fn n_for_t_disjoint(t: usize, search_limit: u64) -> Result<DisjointFamily, GeneratorError> {
    let len = t
        .checked_mul(2)
        .filter(|&k| k > 0)
        .ok_or(GeneratorError::NotFound {
            len: 0,
            search_limit,
        })?;
    let progression = primes::prime_arithmetic_progression(len, search_limit)
        .ok_or(GeneratorError::NotFound { len, search_limit })?;
    let total = progression[0] + progression[len - 1];
    let n = Vertex::try_from(total).map_err(|_| GeneratorError::NotFound { len, search_limit })?;
    let mut pairs = Vec::with_capacity(t);
    let mut cycles = Vec::with_capacity(t);
    for i in 0..t {
        let (a, b) = (progression[i], progression[len - 1 - i]);
        let pair = PrimePair::new(a, b).ok_or(GeneratorError::BadPair { n, p: a, q: b })?;
        cycles.push(cycle_two_primes(n, pair)?);
        pairs.push(pair);
    }
    verify_edge_disjoint(&cycles).map_err(GeneratorError::SelfCheck)?;
    Ok(DisjointFamily {
        n,
        progression,
        pairs,
        cycles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(p: u64, q: u64) -> PrimePair {
        PrimePair::new(p, q).unwrap()
    }

    #[test]
    fn diff23_paths() {
        assert_eq!(
            path_diff23(8).unwrap().sequence(),
            &[8, 6, 3, 1, 4, 2, 5, 7]
        );
        assert_eq!(
            path_diff23(9).unwrap().sequence(),
            &[9, 7, 5, 2, 4, 1, 3, 6, 8]
        );
        assert_eq!(path_diff23(6).unwrap().sequence(), &[6, 3, 1, 4, 2, 5]);
        let p = path_diff23(14).unwrap();
        assert_eq!(p.endpoints(), Some((14, 13)));
        assert!(path_diff23(5).is_err());
        for n in 6..=500 {
            let p = path_diff23(n).unwrap();
            assert_eq!(diff_check(p.sequence(), &[2, 3]), Ok(()));
        }
    }

    #[test]
    fn diff23_cycles() {
        assert_eq!(cycle_diff23(5).unwrap().sequence(), &[1, 4, 2, 5, 3]);
        assert_eq!(
            cycle_diff23(10).unwrap().sequence(),
            &[6, 3, 1, 4, 2, 5, 8, 10, 7, 9]
        );
        for n in (1..10).filter(|&n| n != 5) {
            assert_eq!(cycle_diff23(n), Err(GeneratorError::Infeasible { n }));
        }
        for n in 10..=400 {
            cycle_diff23(n).unwrap();
        }
    }

    #[test]
    fn two_prime_cycles() {
        assert_eq!(
            cycle_two_primes(9, pair(2, 7)).unwrap().sequence(),
            &[1, 3, 5, 7, 9, 2, 4, 6, 8]
        );
        let c5 = cycle_two_primes(5, pair(2, 3)).unwrap();
        assert_eq!(c5.sequence(), canonical_cycle(&[1, 4, 2, 5, 3]).as_slice());
        let c20 = cycle_two_primes(20, pair(7, 13)).unwrap();
        assert_eq!(verify_cycle(&c20, None, Some(&[7, 13])), Ok(()));
        assert!(matches!(
            cycle_two_primes(10, pair(2, 7)),
            Err(GeneratorError::BadPair { .. })
        ));
    }

    #[test]
    fn families() {
        let f20 = edge_disjoint_cycles(20).unwrap();
        // (3, 17) shares difference 3 with the {2,3} cycle, which wins the tie.
        assert_eq!(
            f20.generators,
            vec![Generator::Pair(pair(7, 13)), Generator::Diff23]
        );
        let f30 = edge_disjoint_cycles(30).unwrap();
        assert_eq!(
            f30.generators,
            vec![
                Generator::Pair(pair(7, 23)),
                Generator::Pair(pair(11, 19)),
                Generator::Pair(pair(13, 17)),
                Generator::Diff23,
            ]
        );
        let f6 = edge_disjoint_cycles(6).unwrap();
        assert!(f6.is_fallback());
        assert_eq!(
            edge_disjoint_cycles(5).unwrap().generators,
            vec![Generator::Diff23]
        );
        assert!(edge_disjoint_cycles(4).is_err());
        for n in 5..=200 {
            let family = edge_disjoint_cycles(n).unwrap();
            assert!(!family.is_empty());
            assert_eq!(verify_edge_disjoint(&family.cycles), Ok(()));
        }
    }

    #[test]
    fn disjoint_from_progressions() {
        let one = n_for_t_disjoint(1, 100).unwrap();
        assert_eq!((one.n, one.cycles.len()), (5, 1));
        let two = n_for_t_disjoint(2, 100).unwrap();
        assert_eq!(two.progression, vec![5, 11, 17, 23]);
        assert_eq!(two.n, 28);
        let three = n_for_t_disjoint(3, 10_000).unwrap();
        assert_eq!(three.progression, vec![7, 37, 67, 97, 127, 157]);
        assert_eq!(three.n, 164);
        assert_eq!(three.pairs, vec![pair(7, 157), pair(37, 127), pair(67, 97)]);
        assert!(matches!(
            n_for_t_disjoint(3, 20),
            Err(GeneratorError::NotFound { len: 6, .. })
        ));
    }
}
