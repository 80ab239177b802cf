//! Complement, shift and reversal of witnesses.
//!
//! `v -> lo + hi - v` is an automorphism of the graph on `[lo, hi]`, and
//! `v -> v + k` is an isomorphism onto `[lo + k, hi + k]`. Both preserve
//! every difference, so they carry valid witnesses to valid witnesses.

use thiserror::Error;

use crate::graph::{CycleWitness, Interval, PathWitness, TwoFactorWitness, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("shifting [{lo}, {hi}] by {by} leaves the positive integers")]
    ShiftOutOfDomain { lo: Vertex, hi: Vertex, by: i64 },
}

fn shifted_interval(interval: Interval, by: i64) -> Result<Interval, TransformError> {
    let err = TransformError::ShiftOutOfDomain {
        lo: interval.lo(),
        hi: interval.hi(),
        by,
    };
    let lo = i64::from(interval.lo()) + by;
    let hi = i64::from(interval.hi()) + by;
    if lo < 1 || hi > i64::from(Vertex::MAX) {
        return Err(err);
    }
    Interval::new(lo as Vertex, hi as Vertex).map_err(|_| err)
}

fn shift_vertex(v: Vertex, by: i64) -> Vertex {
    (i64::from(v) + by) as Vertex
}

fn mirror(interval: Interval) -> impl Fn(&Vertex) -> Vertex {
    let sum = u64::from(interval.lo()) + u64::from(interval.hi());
    move |&v| (sum - u64::from(v)) as Vertex
}

/// The three symmetries used by the recursive constructions.
pub trait Symmetry: Sized {
    /// `v -> lo + hi - v` on the witness's own interval.
    fn complement(&self) -> Self;

    /// `v -> v + by`, interval included.
    fn shift(&self, by: i64) -> Result<Self, TransformError>;

    /// Traverse in the opposite direction.
    fn reverse(&self) -> Self;
}

impl Symmetry for PathWitness {
    fn complement(&self) -> Self {
        let interval = self.interval();
        PathWitness::new(
            interval,
            self.sequence().iter().map(mirror(interval)).collect(),
        )
    }

    fn shift(&self, by: i64) -> Result<Self, TransformError> {
        let interval = shifted_interval(self.interval(), by)?;
        let seq = self
            .sequence()
            .iter()
            .map(|&v| shift_vertex(v, by))
            .collect();
        Ok(PathWitness::new(interval, seq))
    }

    fn reverse(&self) -> Self {
        let mut seq = self.sequence().to_vec();
        seq.reverse();
        PathWitness::new(self.interval(), seq)
    }
}

impl Symmetry for CycleWitness {
    fn complement(&self) -> Self {
        let interval = self.interval();
        CycleWitness::new(
            interval,
            self.sequence().iter().map(mirror(interval)).collect(),
        )
    }

    fn shift(&self, by: i64) -> Result<Self, TransformError> {
        let interval = shifted_interval(self.interval(), by)?;
        let seq = self
            .sequence()
            .iter()
            .map(|&v| shift_vertex(v, by))
            .collect();
        Ok(CycleWitness::new(interval, seq))
    }

    fn reverse(&self) -> Self {
        let mut seq = self.sequence().to_vec();
        seq.reverse();
        CycleWitness::new(self.interval(), seq)
    }
}

impl Symmetry for TwoFactorWitness {
    fn complement(&self) -> Self {
        let interval = self.interval();
        let f = mirror(interval);
        let cycles = self
            .cycles()
            .iter()
            .map(|c| c.iter().map(&f).collect())
            .collect();
        TwoFactorWitness::new(interval, cycles)
    }

    fn shift(&self, by: i64) -> Result<Self, TransformError> {
        let interval = shifted_interval(self.interval(), by)?;
        let cycles = self
            .cycles()
            .iter()
            .map(|c| c.iter().map(|&v| shift_vertex(v, by)).collect())
            .collect();
        Ok(TwoFactorWitness::new(interval, cycles))
    }

    fn reverse(&self) -> Self {
        let cycles = self
            .cycles()
            .iter()
            .map(|c| c.iter().rev().copied().collect())
            .collect();
        TwoFactorWitness::new(self.interval(), cycles)
    }
}

pub fn complement<W: Symmetry>(witness: &W) -> W {
    witness.complement()
}

pub fn shift<W: Symmetry>(witness: &W, by: i64) -> Result<W, TransformError> {
    witness.shift(by)
}

pub fn reverse<W: Symmetry>(witness: &W) -> W {
    witness.reverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{verify_cycle, verify_path};

    fn path(lo: Vertex, hi: Vertex, seq: &[Vertex]) -> PathWitness {
        PathWitness::new(Interval::new(lo, hi).unwrap(), seq.to_vec())
    }

    #[test]
    fn complement_examples() {
        let p = path(1, 5, &[1, 4, 2, 5, 3]);
        assert_eq!(complement(&p).sequence(), &[5, 2, 4, 1, 3]);
        let q = path(1, 6, &[6, 3, 1, 4, 2, 5]);
        let c = complement(&q);
        assert_eq!(c.sequence(), &[1, 4, 6, 3, 5, 2]);
        assert_eq!(verify_path(&c, None), Ok(()));
        assert_eq!(complement(&c), q);
    }

    #[test]
    fn complement_on_shifted_interval() {
        let p = path(3, 8, &[3, 6, 8, 5, 7, 4]);
        let c = complement(&p);
        assert_eq!(c.sequence(), &[8, 5, 3, 6, 4, 7]);
        assert_eq!(c.interval(), p.interval());
        assert_eq!(verify_path(&c, None), Ok(()));
    }

    #[test]
    fn shift_examples() {
        let p = path(1, 6, &[1, 4, 6, 3, 5, 2]);
        let s = shift(&p, 2).unwrap();
        assert_eq!(s.sequence(), &[3, 6, 8, 5, 7, 4]);
        assert_eq!(s.interval(), Interval::new(3, 8).unwrap());
        assert_eq!(verify_path(&s, Some((3, 4))), Ok(()));
        assert_eq!(shift(&p, 0).unwrap(), p);
        assert_eq!(shift(&s, -2).unwrap(), p);
        assert_eq!(
            shift(&p, -1),
            Err(TransformError::ShiftOutOfDomain {
                lo: 1,
                hi: 6,
                by: -1
            })
        );
    }

    #[test]
    fn reverse_examples() {
        let p = path(1, 5, &[1, 3, 5, 2, 4]);
        assert_eq!(reverse(&p).sequence(), &[4, 2, 5, 3, 1]);
        assert_eq!(reverse(&reverse(&p)), p);
        let q = path(1, 7, &[1, 6, 4, 2, 7, 5, 3]);
        let r = reverse(&q);
        assert_eq!(r.sequence(), &[3, 5, 7, 2, 4, 6, 1]);
        assert_eq!(verify_path(&r, Some((3, 1))), Ok(()));
    }

    #[test]
    fn cycle_and_factor_variants() {
        let c = CycleWitness::new(Interval::first(5).unwrap(), vec![1, 4, 2, 5, 3]);
        for w in [c.complement(), c.reverse(), c.shift(10).unwrap()] {
            assert_eq!(verify_cycle(&w, None, None), Ok(()));
        }
        let f = TwoFactorWitness::new(
            Interval::first(7).unwrap(),
            vec![vec![1, 3, 6], vec![2, 5, 7, 4]],
        );
        let moved = f.shift(5).unwrap();
        assert_eq!(moved.cycles(), &[vec![6, 8, 11], vec![7, 10, 12, 9]]);
        assert_eq!(
            crate::graph::verify_two_factor(&moved, Some(&[3, 4])),
            Ok(())
        );
        assert_eq!(
            crate::graph::verify_two_factor(&f.complement(), Some(&[3, 4])),
            Ok(())
        );
    }
}
