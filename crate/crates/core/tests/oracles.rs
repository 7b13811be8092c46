mod common;

use proptest::prelude::*;

use diamond_core::cover::{is_correctable, CoverOptions};
use diamond_core::fixtures;
use diamond_core::model::{hamming_distance, Symbol};
use diamond_core::netcode::NetworkCode;
use diamond_core::search::{sigma_binary_fast, sigma_exact, SearchConfig};
use diamond_core::symmetry::Isometry;
use diamond_core::tau::TauTable;
use diamond_core::{Code, NetworkParams, Word};

fn params(s: usize, a: usize) -> NetworkParams {
    NetworkParams::new(s, a).unwrap()
}

/// A code with d >= 3 built from arbitrary word indices, keeping each word
/// that is far enough from the ones already kept.
fn code_strategy() -> impl Strategy<Value = (usize, usize, Code)> {
    (1usize..=3, 2usize..=4)
        .prop_flat_map(|(s, a)| {
            let total = a.pow((s + 2) as u32);
            (Just(s), Just(a), prop::collection::vec(0..total, 1..10))
        })
        .prop_map(|(s, a, picks)| {
            let n = s + 2;
            let mut words: Vec<Word> = Vec::new();
            for i in picks {
                let w = Word::from_index(i, a, n);
                if words.iter().all(|c| common::dist(c.symbols(), w.symbols()) >= 3) {
                    words.push(w);
                }
            }
            (s, a, Code::with_length(a, n, words).unwrap())
        })
}

fn isometry_strategy(n: usize, a: usize) -> impl Strategy<Value = Isometry> {
    let perm = Just((0..n - 1).collect::<Vec<usize>>()).prop_shuffle();
    let maps = prop::collection::vec(Just((0..a as Symbol).collect::<Vec<Symbol>>()).prop_shuffle(), n);
    (perm, maps).prop_map(|(p, m)| Isometry::new(p, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn metric_axioms(a in 2usize..6, n in 1usize..8, seed in any::<[u64; 3]>()) {
        let total = a.pow(n as u32) as u64;
        let [x, y, z] = seed.map(|v| Word::from_index((v % total) as usize, a, n));
        let d = |u: &Word, v: &Word| hamming_distance(u, v).unwrap();
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        prop_assert_eq!(d(&x, &y) == 0, x == y);
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z));
    }

    #[test]
    fn tau_table_matches_reference((_s, _a, code) in code_strategy()) {
        let table = TauTable::build(&code).unwrap();
        for (tail, set) in table.iter() {
            prop_assert_eq!(set, &common::tau(&code, tail.symbols()));
        }
    }

    #[test]
    fn correctability_is_isometry_invariant(
        (s, a, code, g) in code_strategy().prop_flat_map(|(s, a, c)| {
            let n = s + 2;
            (Just(s), Just(a), Just(c), isometry_strategy(n, a))
        })
    ) {
        let p = params(s, a);
        let before = is_correctable(&code, &p, CoverOptions::default());
        let image = g.apply_code(&code).unwrap();
        let after = is_correctable(&image, &p, CoverOptions::default());
        prop_assert_eq!(before.is_feasible(), after.is_feasible());
        prop_assert_eq!(before.cover().map(|c| c.len()), after.cover().map(|c| c.len()));
    }

    #[test]
    fn correctable_codes_round_trip((s, a, code) in code_strategy()) {
        let p = params(s, a);
        if let Some(cover) = is_correctable(&code, &p, CoverOptions::default()).cover() {
            let net = NetworkCode::build(&code, &p, cover).unwrap();
            prop_assert!(net.verify_correcting().correct);
            prop_assert!(net.check_state_heads().is_ok());
            prop_assert!(net.check_singleton_states().is_ok());
        }
    }
}

#[test]
fn generators_keep_fixtures_correctable() {
    for f in fixtures::ALL.iter().filter(|f| f.certifies_sigma()) {
        let code = f.code().unwrap();
        let p = f.params().unwrap();
        for g in Isometry::generators(code.length(), code.alphabet()) {
            let image = g.apply_code(&code).unwrap();
            assert_eq!(image.len(), code.len());
            assert!(
                is_correctable(&image, &p, CoverOptions::default()).is_feasible(),
                "{} image not correctable",
                f.name
            );
        }
    }
}

#[test]
fn s1_search_matches_brute_force() {
    for a in [2, 3] {
        let p = params(1, a);
        let best = common::class_representatives_d3(a, 3, usize::MAX)
            .iter()
            .map(|c| common::code_from_indices(c, a, 3))
            .filter(|c| common::brute_force_correctable(c, &p))
            .map(|c| c.len())
            .max()
            .unwrap();
        assert_eq!(sigma_exact(&SearchConfig::new(p)).unwrap().lower, best);
        assert_eq!(best, a - 1);
    }
}

#[test]
fn witnesses_reverify_end_to_end() {
    for (s, a) in [(2, 2), (3, 2), (2, 3), (1, 4), (4, 2)] {
        let p = params(s, a);
        let cfg = SearchConfig::new(p);
        let r = if a == 2 { sigma_binary_fast(&cfg) } else { sigma_exact(&cfg) }.unwrap();
        let res = is_correctable(&r.witness, &p, CoverOptions::default());
        let net = NetworkCode::build(&r.witness, &p, res.cover().unwrap()).unwrap();
        assert!(net.verify_correcting().correct, "({s},{a})");
    }
}

#[test]
fn min_cover_matches_brute_force_on_classes() {
    for (s, a) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
        let n = s + 2;
        for class in common::class_representatives_d3(a, n, 6) {
            let code = common::code_from_indices(&class, a, n);
            let res = is_correctable(&code, &params(s, a), CoverOptions::default());
            let brute = common::brute_force_min_cover(&code);
            let fits = code.len() + brute <= a.pow(s as u32);
            assert_eq!(res.is_feasible(), fits, "({s},{a}) {class:?}");
            if let Some(cover) = res.cover() {
                assert_eq!(cover.len(), brute, "({s},{a}) {class:?}");
            }
        }
    }
}
