//! Witness interchange format.
//!
//! ```json
//! {"kind": "path", "lo": 1, "hi": 7, "sequences": [[1, 6, 4, 2, 7, 5, 3]]}
//! ```
//!
//! `kind` is one of `path`, `cycle` or `two_factor`. Paths and cycles carry
//! exactly one inner list. An optional `"ok"` flag is written by tools that
//! report a verdict alongside the witness and ignored on input.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    verify_cycle, verify_path, verify_two_factor, CycleWitness, Interval, PathWitness,
    TwoFactorWitness, Vertex, Violation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Path,
    Cycle,
    TwoFactor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub kind: WitnessKind,
    pub lo: i64,
    pub hi: i64,
    pub sequences: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ok: Option<bool>,
}

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("malformed witness JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid interval [{lo}, {hi}]")]
    BadInterval { lo: i64, hi: i64 },
    #[error("vertex {0} is not a valid vertex label")]
    BadVertex(i64),
    #[error("a {kind:?} witness needs exactly one sequence, found {count}")]
    SequenceCount { kind: WitnessKind, count: usize },
}

/// Any of the three witness shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Path(PathWitness),
    Cycle(CycleWitness),
    TwoFactor(TwoFactorWitness),
}

fn vertex(v: i64) -> Result<Vertex, DecodeError> {
    Vertex::try_from(v).map_err(|_| DecodeError::BadVertex(v))
}

fn to_i64(seq: &[Vertex]) -> Vec<i64> {
    seq.iter().map(|&v| i64::from(v)).collect()
}

impl Witness {
    pub fn interval(&self) -> Interval {
        match self {
            Witness::Path(w) => w.interval(),
            Witness::Cycle(w) => w.interval(),
            Witness::TwoFactor(w) => w.interval(),
        }
    }

    pub fn kind(&self) -> WitnessKind {
        match self {
            Witness::Path(_) => WitnessKind::Path,
            Witness::Cycle(_) => WitnessKind::Cycle,
            Witness::TwoFactor(_) => WitnessKind::TwoFactor,
        }
    }

    /// Structural verification with no extra requirements.
    pub fn verify(&self) -> Result<(), Violation> {
        match self {
            Witness::Path(w) => verify_path(w, None),
            Witness::Cycle(w) => verify_cycle(w, None, None),
            Witness::TwoFactor(w) => verify_two_factor(w, None),
        }
    }

    pub fn from_document(doc: &WitnessDocument) -> Result<Self, DecodeError> {
        let bad = || DecodeError::BadInterval {
            lo: doc.lo,
            hi: doc.hi,
        };
        let lo = vertex(doc.lo).map_err(|_| bad())?;
        let hi = vertex(doc.hi).map_err(|_| bad())?;
        let interval = Interval::new(lo, hi).map_err(|_| bad())?;
        let sequences = doc
            .sequences
            .iter()
            .map(|s| s.iter().map(|&v| vertex(v)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let single = |mut sequences: Vec<Vec<Vertex>>| match sequences.len() {
            1 => Ok(sequences.pop().unwrap_or_default()),
            count => Err(DecodeError::SequenceCount {
                kind: doc.kind,
                count,
            }),
        };
        Ok(match doc.kind {
            WitnessKind::Path => Witness::Path(PathWitness::new(interval, single(sequences)?)),
            WitnessKind::Cycle => Witness::Cycle(CycleWitness::new(interval, single(sequences)?)),
            WitnessKind::TwoFactor => {
                Witness::TwoFactor(TwoFactorWitness::new(interval, sequences))
            }
        })
    }

    pub fn to_document(&self) -> WitnessDocument {
        let interval = self.interval();
        let sequences = match self {
            Witness::Path(w) => vec![to_i64(w.sequence())],
            Witness::Cycle(w) => vec![to_i64(w.sequence())],
            Witness::TwoFactor(w) => w.cycles().iter().map(|c| to_i64(c)).collect(),
        };
        WitnessDocument {
            kind: self.kind(),
            lo: interval.lo().into(),
            hi: interval.hi().into(),
            sequences,
            ok: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, DecodeError> {
        let doc: WitnessDocument = serde_json::from_str(text)?;
        Witness::from_document(&doc)
    }

    pub fn from_slice(bytes: &[u8]) -> Result<Self, DecodeError> {
        let doc: WitnessDocument = serde_json::from_slice(bytes)?;
        Witness::from_document(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("witness documents always serialise")
    }
}

impl From<PathWitness> for Witness {
    fn from(w: PathWitness) -> Self {
        Witness::Path(w)
    }
}

impl From<CycleWitness> for Witness {
    fn from(w: CycleWitness) -> Self {
        Witness::Cycle(w)
    }
}

impl From<TwoFactorWitness> for Witness {
    fn from(w: TwoFactorWitness) -> Self {
        Witness::TwoFactor(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_names_are_exact() {
        let w = Witness::Path(PathWitness::new(
            Interval::first(7).unwrap(),
            vec![1, 6, 4, 2, 7, 5, 3],
        ));
        assert_eq!(
            w.to_json(),
            r#"{"kind":"path","lo":1,"hi":7,"sequences":[[1,6,4,2,7,5,3]]}"#
        );
        let f = Witness::TwoFactor(TwoFactorWitness::new(
            Interval::first(7).unwrap(),
            vec![vec![1, 3, 6], vec![2, 5, 7, 4]],
        ));
        assert_eq!(
            f.to_json(),
            r#"{"kind":"two_factor","lo":1,"hi":7,"sequences":[[1,3,6],[2,5,7,4]]}"#
        );
    }

    #[test]
    fn decode_and_verify() {
        let w = Witness::from_json(
            r#"{"kind":"cycle","lo":1,"hi":5,"sequences":[[1,4,2,5,3]],"ok":true}"#,
        )
        .unwrap();
        assert_eq!(w.kind(), WitnessKind::Cycle);
        assert_eq!(w.verify(), Ok(()));
        let w =
            Witness::from_json(r#"{"kind":"path","lo":1,"hi":3,"sequences":[[1,2,3]]}"#).unwrap();
        assert_eq!(
            w.verify(),
            Err(Violation::NonPrimeDifference { position: 0 })
        );
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(Witness::from_json("{"), Err(DecodeError::Json(_))));
        assert!(matches!(
            Witness::from_json(r#"{"kind":"loop","lo":1,"hi":3,"sequences":[[1]]}"#),
            Err(DecodeError::Json(_))
        ));
        assert!(matches!(
            Witness::from_json(r#"{"kind":"path","lo":0,"hi":3,"sequences":[[1]]}"#),
            Err(DecodeError::BadInterval { .. })
        ));
        assert!(matches!(
            Witness::from_json(r#"{"kind":"path","lo":4,"hi":3,"sequences":[[1]]}"#),
            Err(DecodeError::BadInterval { .. })
        ));
        assert!(matches!(
            Witness::from_json(r#"{"kind":"path","lo":1,"hi":3,"sequences":[[1,-3,2]]}"#),
            Err(DecodeError::BadVertex(-3))
        ));
        assert!(matches!(
            Witness::from_json(r#"{"kind":"cycle","lo":1,"hi":3,"sequences":[]}"#),
            Err(DecodeError::SequenceCount { count: 0, .. })
        ));
        assert!(matches!(
            Witness::from_json(r#"{"kind":"path","lo":1,"hi":3,"sequences":[[1],[2]]}"#),
            Err(DecodeError::SequenceCount { count: 2, .. })
        ));
    }

    #[test]
    fn huge_interval_does_not_allocate() {
        let w = Witness::from_json(r#"{"kind":"path","lo":1,"hi":4294967295,"sequences":[[1,3]]}"#)
            .unwrap();
        assert_eq!(w.verify(), Err(Violation::NotPermutation));
        let f = Witness::from_json(
            r#"{"kind":"two_factor","lo":1,"hi":4294967295,"sequences":[[1,3,6]]}"#,
        )
        .unwrap();
        assert_eq!(f.verify(), Err(Violation::NotPartition));
    }
}
