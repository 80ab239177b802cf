//! Realising any 2-factor shape inside `G_n`.
//!
//! A spec is a multiset of cycle lengths (each at least 3) summing to `n`.
//! The constructor plans a sequence of blocks, each a small 2-factor on a
//! run of consecutive vertices, and lays them out left to right. Blocks
//! holding 3-cycles come first, then 4-cycles, then single cycles of length
//! five or more.

mod tables;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{verify_two_factor, Interval, TwoFactorWitness, Vertex, Violation};
use crate::paths::{self, PathError};
use tables::Block;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("invalid 2-factor spec: {0}")]
    InvalidSpec(String),
    #[error("G_{n} has no 2-factor with cycle lengths {lengths:?}")]
    Infeasible { n: Vertex, lengths: Vec<usize> },
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("constructed 2-factor failed verification: {0}")]
    SelfCheck(Violation),
}

/// Multiset of cycle lengths, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoFactorSpec {
    n: Vertex,
    lengths: Vec<usize>,
}

impl TwoFactorSpec {
    pub fn new(mut lengths: Vec<usize>) -> Result<Self, FactorError> {
        if lengths.is_empty() {
            return Err(FactorError::InvalidSpec("no cycles".into()));
        }
        if let Some(&short) = lengths.iter().find(|&&l| l < 3) {
            return Err(FactorError::InvalidSpec(format!(
                "cycle length {short} is below 3"
            )));
        }
        let n = lengths
            .iter()
            .try_fold(0usize, |acc, &l| acc.checked_add(l))
            .and_then(|n| Vertex::try_from(n).ok())
            .ok_or_else(|| FactorError::InvalidSpec("total order overflows".into()))?;
        lengths.sort_unstable();
        Ok(TwoFactorSpec { n, lengths })
    }

    /// Like [`TwoFactorSpec::new`], additionally requiring the lengths to sum
    /// to `n`.
    pub fn with_order(n: Vertex, lengths: Vec<usize>) -> Result<Self, FactorError> {
        let spec = TwoFactorSpec::new(lengths)?;
        if spec.n != n {
            return Err(FactorError::InvalidSpec(format!(
                "lengths sum to {}, not {n}",
                spec.n
            )));
        }
        Ok(spec)
    }

    pub fn order(&self) -> Vertex {
        self.n
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }
}

impl fmt::Display for TwoFactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lengths.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses a comma-separated length list such as `3,4,4`.
impl FromStr for TwoFactorSpec {
    type Err = FactorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lengths = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| FactorError::InvalidSpec(format!("bad length {part:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        TwoFactorSpec::new(lengths)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BlockKind {
    /// One Hamilton cycle of the block.
    Single(usize),
    C3With(usize),
    C4With(usize),
    TwoC3With(usize),
    C3TwoC4,
    TwoC4,
    ThreeC4,
    ThreeC3,
    FourC3,
    FiveC3,
    ThreeC3C4,
}

impl BlockKind {
    fn order(self) -> usize {
        match self {
            BlockKind::Single(l) => l,
            BlockKind::C3With(l) => 3 + l,
            BlockKind::C4With(l) => 4 + l,
            BlockKind::TwoC3With(l) => 6 + l,
            BlockKind::C3TwoC4 => 11,
            BlockKind::TwoC4 => 8,
            BlockKind::ThreeC4 => 12,
            BlockKind::ThreeC3 => 9,
            BlockKind::FourC3 => 12,
            BlockKind::FiveC3 => 15,
            BlockKind::ThreeC3C4 => 13,
        }
    }

    fn lengths(self) -> Vec<usize> {
        match self {
            BlockKind::Single(l) => vec![l],
            BlockKind::C3With(l) => vec![3, l],
            BlockKind::C4With(l) => vec![4, l],
            BlockKind::TwoC3With(l) => vec![3, 3, l],
            BlockKind::C3TwoC4 => vec![3, 4, 4],
            BlockKind::TwoC4 => vec![4, 4],
            BlockKind::ThreeC4 => vec![4, 4, 4],
            BlockKind::ThreeC3 => vec![3, 3, 3],
            BlockKind::FourC3 => vec![3, 3, 3, 3],
            BlockKind::FiveC3 => vec![3; 5],
            BlockKind::ThreeC3C4 => vec![3, 3, 3, 4],
        }
    }

    fn table(self) -> Option<Block> {
        use tables::*;
        Some(match self {
            BlockKind::Single(_) => return None,
            BlockKind::C3With(4) => C3_C4,
            BlockKind::C3With(5) => C3_C5,
            BlockKind::C3With(6) => C3_C6,
            BlockKind::C3With(7) => C3_C7,
            BlockKind::C3With(8) => C3_C8,
            BlockKind::C3With(_) => C3_CL,
            BlockKind::C4With(5) => C4_C5,
            BlockKind::C4With(6) => C4_C6,
            BlockKind::C4With(7) => C4_C7,
            BlockKind::C4With(8) => C4_C8,
            BlockKind::C4With(_) => C4_CL,
            BlockKind::TwoC3With(4) => TWO_C3_C4,
            BlockKind::TwoC3With(5) => TWO_C3_C5,
            BlockKind::TwoC3With(_) => TWO_C3_CL,
            BlockKind::C3TwoC4 => C3_TWO_C4,
            BlockKind::TwoC4 => TWO_C4,
            BlockKind::ThreeC4 => THREE_C4,
            BlockKind::ThreeC3 => THREE_C3,
            BlockKind::FourC3 => FOUR_C3,
            BlockKind::FiveC3 => FIVE_C3,
            BlockKind::ThreeC3C4 => THREE_C3_C4,
        })
    }

    /// Appends this block's cycles on `[offset + 1, offset + order]`.
    fn realize(self, offset: Vertex, cycles: &mut Vec<Vec<Vertex>>) -> Result<(), PathError> {
        let order = self.order() as Vertex;
        match self.table() {
            None => {
                let mut cycle = Vec::with_capacity(order as usize);
                paths::emit_1_to_m(order, 4, offset, &mut cycle)?;
                cycles.push(cycle);
            }
            Some(block) => {
                for pieces in block {
                    let mut cycle = Vec::new();
                    paths::emit_pieces(pieces, order, offset, &mut cycle)?;
                    cycles.push(cycle);
                }
            }
        }
        Ok(())
    }
}

/// `m` 3-cycles from 3C3, 4C3 and 5C3 blocks; `m >= 3`.
fn triangle_blocks(m: usize, plan: &mut Vec<BlockKind>) {
    let threes = match m % 3 {
        0 => m / 3,
        1 => {
            plan.push(BlockKind::FourC3);
            (m - 4) / 3
        }
        _ if m == 5 => {
            plan.push(BlockKind::FiveC3);
            0
        }
        _ => {
            plan.push(BlockKind::FourC3);
            plan.push(BlockKind::FourC3);
            (m - 8) / 3
        }
    };
    plan.extend(std::iter::repeat_n(BlockKind::ThreeC3, threes));
}

fn plan(lengths: &[usize]) -> Option<Vec<BlockKind>> {
    let mut threes = lengths.iter().filter(|&&l| l == 3).count();
    let mut fours = lengths.iter().filter(|&&l| l == 4).count();
    let mut big: VecDeque<usize> = lengths.iter().copied().filter(|&l| l >= 5).collect();
    let mut plan = Vec::new();

    match threes {
        0 => {}
        1 | 2 if fours == 2 && big.is_empty() => {
            if threes == 1 {
                plan.push(BlockKind::C3TwoC4);
            } else {
                plan.push(BlockKind::C3With(4));
                plan.push(BlockKind::C3With(4));
            }
            fours = 0;
        }
        1 | 2 => {
            let partner = if fours >= 1 {
                fours -= 1;
                4
            } else {
                big.pop_front()?
            };
            plan.push(if threes == 1 {
                BlockKind::C3With(partner)
            } else {
                BlockKind::TwoC3With(partner)
            });
        }
        _ => {
            if fours == 1 && big.is_empty() {
                fours = 0;
                if threes == 3 {
                    plan.push(BlockKind::ThreeC3C4);
                    threes = 0;
                } else {
                    plan.push(BlockKind::C3With(4));
                    threes -= 1;
                }
            }
            if threes > 0 {
                triangle_blocks(threes, &mut plan);
            }
        }
    }

    match fours {
        0 => {}
        1 => plan.push(BlockKind::C4With(big.pop_front()?)),
        _ => {
            if fours % 2 == 1 {
                plan.push(BlockKind::ThreeC4);
                fours -= 3;
            }
            plan.extend(std::iter::repeat_n(BlockKind::TwoC4, fours / 2));
        }
    }

    plan.extend(big.into_iter().map(BlockKind::Single));
    Some(plan)
}

/// A 2-factor of `G_n` whose cycle lengths are exactly `spec`.
///
/// Every spec with `n >= 7` is realisable. Below that only the single
/// Hamilton cycle of `G_5` or `G_6` exists.
pub fn two_factor(spec: &TwoFactorSpec) -> Result<TwoFactorWitness, FactorError> {
    let infeasible = || FactorError::Infeasible {
        n: spec.n,
        lengths: spec.lengths.clone(),
    };
    let plan = plan(&spec.lengths).ok_or_else(infeasible)?;
    let interval = Interval::first(spec.n).map_err(|_| infeasible())?;

    let mut cycles = Vec::with_capacity(spec.lengths.len());
    let mut offset: Vertex = 0;
    for block in plan {
        let start = cycles.len();
        block.realize(offset, &mut cycles)?;
        let size = block.order() as Vertex;
        let piece = TwoFactorWitness::new(
            Interval::new(offset + 1, offset + size).map_err(|_| infeasible())?,
            cycles[start..].to_vec(),
        );
        verify_two_factor(&piece, Some(&block.lengths())).map_err(FactorError::SelfCheck)?;
        offset += size;
    }
    debug_assert_eq!(offset, spec.n);

    let witness = TwoFactorWitness::new(interval, cycles);
    verify_two_factor(&witness, Some(&spec.lengths)).map_err(FactorError::SelfCheck)?;
    Ok(witness)
}

/// Every multiset of integers `>= 3` summing to `n`, grouped by number of
/// parts and lexicographic (ascending parts) within a group.
pub fn enumerate_specs(n: usize, max_parts: Option<usize>) -> impl Iterator<Item = TwoFactorSpec> {
    let most = (n / 3).min(max_parts.unwrap_or(usize::MAX));
    (1..=most).flat_map(move |k| {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        fill_parts(n, k, 3, &mut current, &mut out);
        out.into_iter()
    })
}

fn fill_parts(
    remaining: usize,
    parts: usize,
    min: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<TwoFactorSpec>,
) {
    if parts == 1 {
        if remaining >= min {
            current.push(remaining);
            out.push(TwoFactorSpec {
                n: current.iter().sum::<usize>() as Vertex,
                lengths: current.clone(),
            });
            current.pop();
        }
        return;
    }
    let mut part = min;
    while part * parts <= remaining {
        current.push(part);
        fill_parts(remaining - part, parts - 1, part, current, out);
        current.pop();
        part += 1;
    }
}
