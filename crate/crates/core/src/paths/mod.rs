//! Hamilton paths with designated end vertices, Hamilton cycles, and cycles
//! through a designated edge.
//!
//! Constructions write straight into one output buffer with a vertex offset,
//! so a shifted sub-path costs nothing beyond its own length and every
//! witness is built in linear time. Each public entry point runs the
//! verifier on its result before returning it.

mod tables;

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph::{
    adjacent, verify_cycle, verify_path, CycleWitness, Interval, PathWitness, Vertex, Violation,
};

pub(crate) use tables::Piece;
use tables::{
    EXCEPTIONS, LARGE_M_TABLE, LOW_PAIR_PATTERNS, SEEDS_1_TO_M, SMALL_ORDER_ROWS, SPLIT_GAPS,
    STEPS_1_TO_M,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("no base construction for a (1, {m})-path on [1, {n}]")]
    UnsupportedBase { n: Vertex, m: Vertex },
    #[error("order {n} is below the supported range")]
    UnsupportedOrder { n: Vertex },
    #[error("vertex {vertex} is outside [1, {n}]")]
    EndpointOutOfRange { n: Vertex, vertex: Vertex },
    #[error("both endpoints are {vertex}")]
    SameEndpoints { vertex: Vertex },
    #[error("G_{n} has no Hamilton path from {n1} to {n2}")]
    Infeasible { n: Vertex, n1: Vertex, n2: Vertex },
    #[error("{u} and {v} are not adjacent")]
    NonEdge { u: Vertex, v: Vertex },
    #[error("constructed witness failed verification: {0}")]
    SelfCheck(Violation),
}

/// Two distinct end vertices, stored with `n1 < n2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndpointPair {
    n1: Vertex,
    n2: Vertex,
}

impl EndpointPair {
    pub fn new(a: Vertex, b: Vertex) -> Result<Self, PathError> {
        if a == b {
            return Err(PathError::SameEndpoints { vertex: a });
        }
        Ok(EndpointPair {
            n1: a.min(b),
            n2: a.max(b),
        })
    }

    pub fn n1(&self) -> Vertex {
        self.n1
    }

    pub fn n2(&self) -> Vertex {
        self.n2
    }
}

impl std::fmt::Display for EndpointPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.n1, self.n2)
    }
}

// ---------------------------------------------------------------------------
// Emitters. Each appends a path of `[1, order]` with every vertex shifted by
// `offset`.

fn push_shifted(out: &mut Vec<Vertex>, seq: &[Vertex], offset: Vertex) {
    out.extend(seq.iter().map(|&v| v + offset));
}

/// Mirror the tail `out[start..]` through `[offset + 1, offset + order]`.
fn complement_tail(out: &mut [Vertex], start: usize, order: Vertex, offset: Vertex) {
    let sum = 2 * offset + order + 1;
    for v in &mut out[start..] {
        *v = sum - *v;
    }
}

/// 1 to 2: `<1, (1 -> 2 on [1, order - 2]) + 2, 2>`, unrolled.
fn emit_1_to_2(order: Vertex, offset: Vertex, out: &mut Vec<Vertex>) -> Result<(), PathError> {
    if order < 6 {
        return Err(PathError::UnsupportedBase { n: order, m: 2 });
    }
    let wraps = (order - 6) / 2;
    let seed = seed(2, order - 2 * wraps).expect("orders 6 and 7 are seeded");
    out.extend((0..wraps).map(|i| offset + 2 * i + 1));
    push_shifted(out, seed, offset + 2 * wraps);
    out.extend((1..=wraps).rev().map(|i| offset + 2 * i));
    Ok(())
}

fn seed(m: Vertex, n: Vertex) -> Option<&'static [Vertex]> {
    SEEDS_1_TO_M
        .iter()
        .find(|&&(sm, sn, _)| sm == m && sn == n)
        .map(|&(_, _, s)| s)
}

/// Paths from 1 to `m` for `m` in `[2, 6]`.
fn emit_base(
    order: Vertex,
    m: Vertex,
    offset: Vertex,
    out: &mut Vec<Vertex>,
) -> Result<(), PathError> {
    if m == 2 {
        return emit_1_to_2(order, offset, out);
    }
    if let Some(s) = seed(m, order) {
        push_shifted(out, s, offset);
        return Ok(());
    }
    match STEPS_1_TO_M.iter().find(|&&(sm, _, _)| sm == m) {
        Some(&(_, from, pieces)) if order >= from => emit_pieces(pieces, order, offset, out),
        _ => Err(PathError::UnsupportedBase { n: order, m }),
    }
}

/// Paths from 1 to any `m` in `[2, order]`, chaining shifted (1, 6)-paths
/// through 1, 6, 11, ... and finishing with a base or table path.
pub(crate) fn emit_1_to_m(
    order: Vertex,
    m: Vertex,
    offset: Vertex,
    out: &mut Vec<Vertex>,
) -> Result<(), PathError> {
    if m < 2 || m > order {
        return Err(PathError::UnsupportedBase { n: order, m });
    }
    if m <= 6 {
        return emit_base(order, m, offset, out);
    }
    if order <= 10 {
        return match LARGE_M_TABLE
            .iter()
            .find(|&&(n, tm, _)| n == order && tm == m)
        {
            Some(&(_, _, s)) => {
                push_shifted(out, s, offset);
                Ok(())
            }
            None => Err(PathError::UnsupportedBase { n: order, m }),
        };
    }
    // order = 5 q1 + r1 with r1 in [6, 10]; m = 5 q2 + r2 with r2 in [2, 6].
    let q1 = (order - 6) / 5;
    let q2 = (m - 2) / 5;
    let q = q1.min(q2);
    let window = seed(6, 6).expect("(1, 6)-path on [1, 6] is seeded");
    for k in 0..q {
        if k > 0 {
            out.pop();
        }
        push_shifted(out, window, offset + 5 * k);
    }
    if q > 0 {
        out.pop();
    }
    emit_1_to_m(order - 5 * q, m - 5 * q, offset + 5 * q, out)
}

/// Hamilton path of `[lo, n]` between `from` and `to`, one of which is `lo`.
fn emit_sub(
    n: Vertex,
    from: Vertex,
    to: Vertex,
    lo: Vertex,
    offset: Vertex,
    out: &mut Vec<Vertex>,
) -> Result<(), PathError> {
    let order = n + 1 - lo;
    let shift = offset + lo - 1;
    if from == lo {
        emit_1_to_m(order, to + 1 - lo, shift, out)
    } else {
        debug_assert_eq!(to, lo);
        let start = out.len();
        emit_1_to_m(order, from + 1 - lo, shift, out)?;
        out[start..].reverse();
        Ok(())
    }
}

pub(crate) fn emit_pieces(
    pieces: &[Piece],
    n: Vertex,
    offset: Vertex,
    out: &mut Vec<Vertex>,
) -> Result<(), PathError> {
    for piece in pieces {
        match *piece {
            Piece::Fixed(seq) => push_shifted(out, seq, offset),
            Piece::Sub { from, to, lo } => emit_sub(n, from, to, lo, offset, out)?,
        }
    }
    Ok(())
}

fn small_order_table() -> &'static HashMap<(Vertex, Vertex, Vertex), Vec<Vertex>> {
    static TABLE: OnceLock<HashMap<(Vertex, Vertex, Vertex), Vec<Vertex>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut map = HashMap::new();
        let rows = SMALL_ORDER_ROWS
            .iter()
            .flat_map(|&(n, left, right)| std::iter::once((n, left)).chain(right.map(|r| (n, r))));
        for (n, seq) in rows {
            let (a, b) = (seq[0], seq[seq.len() - 1]);
            let mut oriented = seq.to_vec();
            if a > b {
                oriented.reverse();
            }
            map.insert((n, a.min(b), a.max(b)), oriented);
        }
        map
    })
}

pub(crate) fn is_listed_exception(n: Vertex, n1: Vertex, n2: Vertex) -> bool {
    EXCEPTIONS
        .iter()
        .any(|&(en, pairs)| en == n && pairs.contains(&(n1, n2)))
}

/// Path from `n1` to `n2` (`n1 < n2`) on `[1, n]`, `n >= 5`.
pub(crate) fn emit_path(
    n: Vertex,
    n1: Vertex,
    n2: Vertex,
    offset: Vertex,
    out: &mut Vec<Vertex>,
) -> Result<(), PathError> {
    let infeasible = PathError::Infeasible { n, n1, n2 };
    if n < 5 {
        return Err(PathError::UnsupportedOrder { n });
    }
    if n <= 8 {
        if is_listed_exception(n, n1, n2) {
            return Err(infeasible);
        }
        if n >= 6 && n1 == 1 {
            return emit_1_to_m(n, n2, offset, out);
        }
        if n >= 6 && n2 == n {
            return emit_complemented(n, n1, n2, offset, out);
        }
        return match small_order_table().get(&(n, n1, n2)) {
            Some(seq) => {
                push_shifted(out, seq, offset);
                Ok(())
            }
            None => Err(infeasible),
        };
    }

    if n1 == 1 {
        return emit_1_to_m(n, n2, offset, out);
    }
    if n1 + n2 > n + 1 {
        return emit_complemented(n, n1, n2, offset, out);
    }
    if n1 >= 6 {
        // [1, n1] from n1 to n1 - 1, then [n1 + 1, n] ending at n2.
        let start = out.len();
        emit_1_to_2(n1, offset, out)?;
        complement_tail(out, start, n1, offset);
        let rest = n - n1;
        if n2 == n1 + 1 {
            let start = out.len();
            emit_1_to_2(rest, offset + n1, out)?;
            out[start..].reverse();
            return Ok(());
        }
        return emit_1_to_m(rest, n2 - n1, offset + n1, out);
    }
    if n2 >= 7 {
        if let Some(&(_, _, _, seq)) = SPLIT_GAPS
            .iter()
            .find(|&&(gn, g1, g2, _)| gn == n && g1 == n1 && g2 == n2)
        {
            push_shifted(out, seq, offset);
            return Ok(());
        }
        // n1 -> 6 on [1, 6], then 6 -> n2 on [6, n].
        let start = out.len();
        emit_1_to_m(6, 7 - n1, offset, out)?;
        complement_tail(out, start, 6, offset);
        out[start..].reverse();
        out.pop();
        return emit_1_to_m(n - 5, n2 - 5, offset + 5, out);
    }
    match LOW_PAIR_PATTERNS
        .iter()
        .find(|&&(pair, orders, _)| pair == (n1, n2) && orders.admits(n))
    {
        Some(&(_, _, pieces)) => emit_pieces(pieces, n, offset, out),
        None => Err(infeasible),
    }
}

/// Build `n + 1 - n2 -> n + 1 - n1`, mirror it, and reverse.
fn emit_complemented(
    n: Vertex,
    n1: Vertex,
    n2: Vertex,
    offset: Vertex,
    out: &mut Vec<Vertex>,
) -> Result<(), PathError> {
    let start = out.len();
    emit_path(n, n + 1 - n2, n + 1 - n1, offset, out).map_err(|e| match e {
        PathError::Infeasible { .. } => PathError::Infeasible { n, n1, n2 },
        other => other,
    })?;
    complement_tail(out, start, n, offset);
    out[start..].reverse();
    Ok(())
}

// ---------------------------------------------------------------------------

fn checked_path(
    interval: Interval,
    seq: Vec<Vertex>,
    endpoints: (Vertex, Vertex),
) -> Result<PathWitness, PathError> {
    let witness = PathWitness::new(interval, seq);
    verify_path(&witness, Some(endpoints)).map_err(PathError::SelfCheck)?;
    Ok(witness)
}

fn first_interval(n: Vertex) -> Result<Interval, PathError> {
    Interval::first(n).map_err(|_| PathError::UnsupportedOrder { n })
}

/// Hamilton path of `G_n` from 1 to `m` for `m` in `[2, 6]`, from the seed
/// paths and their recursive extensions.
pub fn base_path_1_to_m(n: Vertex, m: Vertex) -> Result<PathWitness, PathError> {
    let supported = (2..=6).contains(&m) && (n >= 6 || (n == 5 && (m == 3 || m == 4)));
    if !supported {
        return Err(PathError::UnsupportedBase { n, m });
    }
    let mut seq = Vec::with_capacity(n as usize);
    emit_base(n, m, 0, &mut seq)?;
    checked_path(first_interval(n)?, seq, (1, m))
}

/// Hamilton path of `G_n` from 1 to any `m` in `[2, n]` (`n >= 6`; at
/// `n = 5` only `m` in `{3, 4}`).
pub fn path_1_to_m(n: Vertex, m: Vertex) -> Result<PathWitness, PathError> {
    let supported = (2..=n).contains(&m) && (n >= 6 || (n == 5 && (m == 3 || m == 4)));
    if !supported {
        return Err(PathError::UnsupportedBase { n, m });
    }
    let mut seq = Vec::with_capacity(n as usize);
    emit_1_to_m(n, m, 0, &mut seq)?;
    checked_path(first_interval(n)?, seq, (1, m))
}

/// Hamilton path of `G_n` from `a` to `b`, in the order given.
///
/// Returns [`PathError::Infeasible`] exactly for the small-order exceptions
/// at `n` in `[5, 8]`; every pair is feasible from `n = 9` on.
pub fn hamilton_path(n: Vertex, a: Vertex, b: Vertex) -> Result<PathWitness, PathError> {
    if n < 5 {
        return Err(PathError::UnsupportedOrder { n });
    }
    for vertex in [a, b] {
        if !(1..=n).contains(&vertex) {
            return Err(PathError::EndpointOutOfRange { n, vertex });
        }
    }
    let pair = EndpointPair::new(a, b)?;
    let mut seq = Vec::with_capacity(n as usize);
    emit_path(n, pair.n1, pair.n2, 0, &mut seq)?;
    if a > b {
        seq.reverse();
    }
    checked_path(first_interval(n)?, seq, (a, b))
}

/// Endpoint pairs of `G_n` for which [`hamilton_path`] reports infeasibility.
pub fn infeasible_pairs(n: Vertex) -> Result<Vec<EndpointPair>, PathError> {
    let mut pairs = Vec::new();
    for n1 in 1..=n {
        for n2 in n1 + 1..=n {
            match hamilton_path(n, n1, n2) {
                Ok(_) => {}
                Err(PathError::Infeasible { .. }) => pairs.push(EndpointPair { n1, n2 }),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(pairs)
}

/// Hamilton cycle of `G_n`: a (1, 4)-path closed by the edge {4, 1}.
pub fn hamilton_cycle(n: Vertex) -> Result<CycleWitness, PathError> {
    if n < 5 {
        return Err(PathError::UnsupportedOrder { n });
    }
    let mut seq = Vec::with_capacity(n as usize);
    emit_1_to_m(n, 4, 0, &mut seq)?;
    let witness = CycleWitness::new(first_interval(n)?, seq);
    verify_cycle(&witness, Some((1, 4)), None).map_err(PathError::SelfCheck)?;
    Ok(witness)
}

/// Hamilton cycle of `G_n` that uses the edge `{u, v}`.
pub fn hamilton_cycle_through_edge(
    n: Vertex,
    (u, v): (Vertex, Vertex),
) -> Result<CycleWitness, PathError> {
    if n < 5 {
        return Err(PathError::UnsupportedOrder { n });
    }
    for vertex in [u, v] {
        if !(1..=n).contains(&vertex) {
            return Err(PathError::EndpointOutOfRange { n, vertex });
        }
    }
    if !adjacent(u, v) {
        return Err(PathError::NonEdge { u, v });
    }
    let witness = hamilton_path(n, u, v)?.close();
    verify_cycle(&witness, Some((u, v)), None).map_err(PathError::SelfCheck)?;
    Ok(witness)
}
