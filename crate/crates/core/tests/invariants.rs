//! Structural invariants over random and canonical graphs.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use num_bigint::BigInt;
use proptest::prelude::*;
use qwalk::graph::io::{decode_graph6, encode_graph6, parse_graph, serialize_graph, GraphFormat};
use qwalk::graph::random::{random_connected_graph, random_graph, random_integer_weighted};
use qwalk::graph::{build_complete, build_cycle, build_path, one_sum};
use qwalk::poly::{charpoly, charpoly_deleted, one_sum_charpoly};
use qwalk::pst::{evolve_fidelity, fidelity_scan, pst_certificate};
use qwalk::spectral::{cospectral, decompose, exact_strongly_cospectral, strongly_cospectral};
use qwalk::verify::{search_no_pst, Bridge, GraphSource, SearchOptions};
use qwalk::{Graph, IntPoly, Matrix, SpectralDecomposition, Tolerances};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn seeded_graph(seed: u64, n: usize, p: f64) -> Graph {
    random_connected_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn projectors_resolve_identity(seed in any::<u64>(), n in 1usize..=9, p in 0.1f64..0.9) {
        let g = seeded_graph(seed, n, p);
        let dec: SpectralDecomposition = decompose(&g, None).unwrap();
        let sum = dec.projectors.iter().fold(Matrix::zeros(n, n), |s, e| s.add(e).unwrap());
        prop_assert!(sum.max_abs_diff(&Matrix::identity(n)) < 1e-10);
        prop_assert!(dec.reconstruct().max_abs_diff(&g.adjacency()) < 1e-10);
        for (r, e) in dec.projectors.iter().enumerate() {
            prop_assert!(e.mul(e).unwrap().max_abs_diff(e) < 1e-10);
            prop_assert!((e.trace() - dec.multiplicities[r] as f64).abs() < 1e-10);
            for f in &dec.projectors[r + 1..] {
                prop_assert!(e.mul(f).unwrap().max_abs_diff(&Matrix::zeros(n, n)) < 1e-10);
            }
        }
        prop_assert!(dec.eigenvalues.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn exact_and_numeric_strong_cospectrality_agree(seed in any::<u64>(), n in 2usize..=7) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, 0.5);
        for a in 0..n {
            for b in a + 1..n {
                // errors if the two decisions disagree
                let (numeric, sig) = strongly_cospectral(&g, a, b, &Tolerances::default()).unwrap();
                prop_assert_eq!(numeric, exact_strongly_cospectral(&g, a, b).unwrap());
                prop_assert_eq!(numeric, sig.strongly_cospectral);
                let co = cospectral(&g, a, b).unwrap();
                prop_assert_eq!(co, cospectral(&g, b, a).unwrap());
                prop_assert!(!numeric || co);
            }
        }
    }

    #[test]
    fn one_sum_recurrence(s1 in any::<u64>(), s2 in any::<u64>(), n1 in 1usize..=5, n2 in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(s1 ^ s2.rotate_left(17));
        let y1 = random_integer_weighted(&mut rng, n1, 0.5, 2, 0.3);
        let y2 = random_integer_weighted(&mut rng, n2, 0.5, 2, 0.3);
        let (a, b) = ((s1 as usize) % n1, (s2 as usize) % n2);
        let (z, _) = one_sum(&y1, a, &y2, b).unwrap();
        let predicted = one_sum_charpoly(
            &charpoly(&y1).unwrap(),
            &charpoly_deleted(&y1, &[a]).unwrap(),
            &charpoly(&y2).unwrap(),
            &charpoly_deleted(&y2, &[b]).unwrap(),
        );
        prop_assert_eq!(charpoly(&z).unwrap(), predicted);
    }

    #[test]
    fn integer_roots_are_exact(roots in proptest::collection::vec(-12i64..=12, 1..8)) {
        let p = roots.iter().fold(IntPoly::one(), |acc, &r| &acc * &IntPoly::new(vec![BigInt::from(-r), BigInt::from(1)]));
        let mut distinct = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let found = p.real_roots().unwrap();
        prop_assert_eq!(found, distinct.iter().map(|&r| r as f64).collect::<Vec<_>>());
    }

    #[test]
    fn graph6_and_edgelist_round_trip(seed in any::<u64>(), n in 1usize..=12, p in 0.0f64..1.0) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p);
        let code = encode_graph6(&g).unwrap();
        prop_assert_eq!(&decode_graph6(&code, 1).unwrap(), &g);
        let text = serialize_graph(&g, GraphFormat::Edgelist).unwrap();
        prop_assert_eq!(GraphFormat::detect(&text), GraphFormat::Edgelist);
        prop_assert_eq!(&parse_graph(&text, GraphFormat::Edgelist).unwrap(), &g);
    }

    #[test]
    fn fidelity_is_bounded_and_symmetric(seed in any::<u64>(), n in 2usize..=8, t in 0.0f64..20.0) {
        let g = seeded_graph(seed, n, 0.5);
        let f = evolve_fidelity(&g, 0, n - 1, t).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&f));
        prop_assert!((f - evolve_fidelity(&g, n - 1, 0, t).unwrap()).abs() < 1e-12);
    }
}

/// Pairs with perfect state transfer and their minimal times.
fn known_transfers() -> Vec<(&'static str, Graph, usize, usize, f64)> {
    vec![
        ("P2", build_path(2).unwrap(), 0, 1, FRAC_PI_2),
        ("P3", build_path(3).unwrap(), 0, 2, PI / SQRT_2),
        ("C4", build_cycle(4).unwrap(), 0, 2, FRAC_PI_2),
    ]
}

#[test]
fn certified_times_are_minimal_and_repeat_at_odd_multiples() {
    for (name, g, a, b, expected) in known_transfers() {
        let cert = pst_certificate(&g, a, b).unwrap();
        assert!(cert.is_success(), "{name}");
        let t = cert.pst_time.unwrap();
        assert!((t - expected).abs() < 1e-10, "{name}: {t}");
        for k in [1.0, 3.0, 5.0] {
            assert!(evolve_fidelity(&g, a, b, k * t).unwrap() >= 1.0 - 1e-9, "{name} at {k} t");
        }
        // no earlier transfer
        let early = fidelity_scan(&g, a, b, 0.98 * t, 4000).unwrap();
        assert!(early.fidelity < 1.0 - 1e-4, "{name}: {early:?}");
        // at even multiples the walk is back home
        assert!(evolve_fidelity(&g, a, b, 2.0 * t).unwrap() < 1e-9, "{name}");
    }
}

#[test]
fn complete_graphs_have_no_transfer() {
    for n in 3..=7 {
        let g = build_complete(n).unwrap();
        let cert = pst_certificate(&g, 0, 1).unwrap();
        assert!(!cert.is_success());
        let scan = fidelity_scan(&g, 0, 1, 20.0, 2000).unwrap();
        assert!((scan.fidelity - 2.0 / n as f64).abs() < 1e-9);
    }
}

#[test]
fn search_is_independent_of_thread_count() {
    for bridge in [Bridge::P2, Bridge::P3] {
        let source = GraphSource::Builtin { max_n: 4 };
        let serial = search_no_pst(&source, &SearchOptions { jobs: 1, ..SearchOptions::new(bridge) }).unwrap();
        let parallel = search_no_pst(&source, &SearchOptions { jobs: 4, ..SearchOptions::new(bridge) }).unwrap();
        assert_eq!(format!("{serial:?}"), format!("{parallel:?}"), "{bridge:?}");
    }
}


#[test]
fn p4_middle_pair_comes_close_without_transfer() {
    let g = build_path(4).unwrap();
    assert!(!pst_certificate(&g, 1, 2).unwrap().is_success());
    let scan = fidelity_scan(&g, 1, 2, 100.0, 100_000).unwrap();
    // value from the closed-form sine eigenbasis of P4
    assert!((scan.time - 53.393).abs() < 1e-3, "{scan:?}");
    assert!((scan.fidelity - 0.9999786).abs() < 1e-7, "{scan:?}");
    assert!(scan.fidelity < 1.0 - 1e-6);
}
