use proptest::prelude::*;

use primediff::factors::{two_factor, TwoFactorSpec};
use primediff::graph::canonical_cycle;
use primediff::json::Witness;
use primediff::oracle::{brute_hamilton_path, dfs_hamilton_path, OracleConfig, Traversal};
use primediff::{
    hamilton_cycle_through_edge, hamilton_path, verify_cycle, verify_path, verify_two_factor,
    CycleWitness, Interval, Symmetry, Violation,
};

fn endpoints(max: u32) -> impl Strategy<Value = (u32, u32, u32)> {
    (9..max)
        .prop_flat_map(|n| (Just(n), 1..=n, 1..=n))
        .prop_filter("distinct", |(_, a, b)| a != b)
}

proptest! {
    #[test]
    fn path_symmetries_preserve_validity((n, a, b) in endpoints(150), k in -8i64..500) {
        let w = hamilton_path(n, a, b).unwrap();
        let c = w.complement();
        prop_assert_eq!(verify_path(&c, Some((n + 1 - a, n + 1 - b))), Ok(()));
        prop_assert_eq!(verify_path(&w.reverse(), Some((b, a))), Ok(()));
        match w.shift(k) {
            Ok(s) => {
                let (sa, sb) = ((a as i64 + k) as u32, (b as i64 + k) as u32);
                prop_assert_eq!(verify_path(&s, Some((sa, sb))), Ok(()));
                prop_assert_eq!(s.shift(-k).unwrap(), w.clone());
            }
            Err(_) => prop_assert!(k < 0),
        }
        prop_assert_eq!(c.complement(), w);
    }

    #[test]
    fn duplicated_vertex_is_rejected((n, a, b) in endpoints(80), i in 0usize..80, j in 0usize..80) {
        let w = hamilton_path(n, a, b).unwrap();
        let mut seq = w.sequence().to_vec();
        let (i, j) = (i % seq.len(), j % seq.len());
        prop_assume!(i != j);
        seq[i] = seq[j];
        let broken = primediff::PathWitness::new(w.interval(), seq);
        prop_assert_eq!(verify_path(&broken, None), Err(Violation::NotPermutation));
    }

    #[test]
    fn wrong_endpoints_are_rejected((n, a, b) in endpoints(80)) {
        let w = hamilton_path(n, a, b).unwrap();
        let other = if a == 1 { 2 } else { 1 };
        prop_assume!(other != b);
        let verdict = verify_path(&w, Some((other, b)));
        prop_assert!(matches!(verdict, Err(Violation::WrongEndpoints { .. })), "{:?}", verdict);
    }

    #[test]
    fn cycle_rotations_verify((n, a, b) in endpoints(80), r in 0usize..80) {
        prop_assume!(primediff::adjacent(a, b));
        let w = hamilton_cycle_through_edge(n, (a, b)).unwrap();
        let seq = w.sequence();
        let r = r % seq.len();
        let rotated: Vec<u32> = seq[r..].iter().chain(&seq[..r]).copied().collect();
        let rw = CycleWitness::new(w.interval(), rotated);
        prop_assert_eq!(verify_cycle(&rw, Some((b, a)), None), Ok(()));
        prop_assert_eq!(rw.canonical(), w.canonical());
        prop_assert_eq!(canonical_cycle(w.reverse().sequence()), w.canonical().sequence().to_vec());
    }

    #[test]
    fn json_round_trip(parts in proptest::collection::vec(3usize..10, 1..5), lo in 1u32..1000) {
        let spec = TwoFactorSpec::new(parts).unwrap();
        prop_assume!(spec.order() >= 7);
        let w = two_factor(&spec).unwrap().shift(i64::from(lo) - 1).unwrap();
        let doc: Witness = w.clone().into();
        let back = Witness::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.verify(), Ok(()));
        prop_assert_eq!(verify_two_factor(&w, Some(spec.lengths())), Ok(()));
    }

    #[test]
    fn oracle_agrees_with_constructor(n in 5u32..=12, a in 1u32..=12, b in 1u32..=12) {
        prop_assume!(a <= n && b <= n && a != b);
        let config = OracleConfig::default();
        let interval = Interval::first(n).unwrap();
        let brute = brute_hamilton_path(&config, interval, a, b).unwrap();
        let built = hamilton_path(n, a, b);
        prop_assert_eq!(brute.is_some(), built.is_ok());
        if let Some(p) = brute {
            prop_assert_eq!(verify_path(&p, Some((a, b))), Ok(()));
        }
        let dfs = dfs_hamilton_path(&config, interval, a, b, Traversal::Descending).unwrap();
        prop_assert_eq!(dfs.is_some(), built.is_ok());
    }

    #[test]
    fn oracle_on_shifted_intervals(lo in 1u32..500, len in 5u32..=10, a in 0u32..10, b in 0u32..10) {
        prop_assume!(a < len && b < len && a != b);
        let config = OracleConfig::default();
        let here = brute_hamilton_path(&config, Interval::new(lo, lo + len - 1).unwrap(), lo + a, lo + b)
            .unwrap();
        let base = brute_hamilton_path(&config, Interval::first(len).unwrap(), a + 1, b + 1).unwrap();
        prop_assert_eq!(here.is_some(), base.is_some());
    }
}

#[test]
fn oracle_agrees_exhaustively_up_to_eleven() {
    let config = OracleConfig::default();
    for n in 5..=11 {
        let interval = Interval::first(n).unwrap();
        for a in 1..=n {
            for b in (1..=n).filter(|&b| b != a) {
                let brute = brute_hamilton_path(&config, interval, a, b).unwrap();
                assert_eq!(
                    brute.is_some(),
                    hamilton_path(n, a, b).is_ok(),
                    "n={n} ({a},{b})"
                );
            }
        }
    }
}
