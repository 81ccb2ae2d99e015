mod common;

use burnkit::solver::{check_partition, static_lower_bound};
use burnkit::{
    burning_number_exact, extract_partition, verify_sequence, BurningSequence, DistanceMatrix,
    FamilySpec, Graph,
};
use common::{brute_force_burning_number, distances_from, edges_of};
use proptest::prelude::*;

fn spec(s: &str) -> Graph {
    s.parse::<FamilySpec>().unwrap().build()
}

fn brute(g: &Graph) -> usize {
    let (n, edges) = edges_of(g);
    brute_force_burning_number(n, &edges)
}

#[test]
fn frozen_values_match_brute_force() {
    let cases = [
        ("uni:4;4,4", 4),
        ("uni:7;3", 3),
        ("uni:7;4", 4),
        ("forest:5,4", 3),
        ("forest:3,2,1", 3),
        ("forest:2,2", 3),
        ("forest:2,2,2", 4),
        ("star:8,1,1", 4),
        ("uni:4;6", 3),
        ("uni:8;5,4", 4),
        ("cycle:5", 3),
        ("cycle:4", 2),
    ];
    for (s, expected) in cases {
        let g = spec(s);
        assert_eq!(brute(&g), expected, "{s} by brute force");
        assert_eq!(
            burning_number_exact(&g, None).unwrap().value,
            expected,
            "{s} by search"
        );
    }
}

#[test]
fn two_paths_of_two_partition_heights() {
    let g = spec("forest:2,2");
    let mut valid = 0;
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                let seq = BurningSequence(vec![a, b, c]);
                if !verify_sequence(&g, &seq).unwrap() {
                    continue;
                }
                valid += 1;
                let p = extract_partition(&g, &seq).unwrap();
                assert_eq!(p.parts.len(), 3);
                for (i, part) in p.parts.iter().enumerate() {
                    assert!(
                        part.height <= 2 - i,
                        "{seq}: part {i} has height {}",
                        part.height
                    );
                }
                check_partition(&g, &p).unwrap();
            }
        }
    }
    assert!(valid > 0);
}

#[test]
fn oracle_distances_agree_with_library() {
    for s in ["uni:5;3,2", "forest:3,2,1", "star:2,2,1", "cycle:7"] {
        let g = spec(s);
        let (n, edges) = edges_of(&g);
        let adj = common::adjacency(n, &edges);
        let dm = DistanceMatrix::new(&g);
        for u in 0..n {
            for (v, d) in distances_from(&adj, u).into_iter().enumerate() {
                let lib = dm.get(u, v);
                assert_eq!(d.map(|x| x as u32), (lib != u32::MAX).then_some(lib));
            }
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            (
                Just(n),
                Just(pairs),
                proptest::collection::vec(any::<bool>(), len),
            )
        })
        .prop_map(|(n, pairs, keep)| {
            let edges: Vec<_> = pairs
                .into_iter()
                .zip(keep)
                .filter_map(|(e, k)| k.then_some(e))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
}

/// Random trees: vertex `i` attaches to an earlier vertex.
fn arb_tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(any::<prop::sample::Index>(), n - 1))
        .prop_map(|parents| {
            let edges: Vec<_> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            Graph::from_edges(edges.len() + 1, &edges).unwrap()
        })
}

fn check_against_brute_force(g: &Graph) -> Result<(), TestCaseError> {
    let r = burning_number_exact(g, None).unwrap();
    prop_assert_eq!(r.value, brute(g));
    let cert = r.certificate.as_ref().unwrap();
    prop_assert_eq!(cert.len(), r.value);
    prop_assert!(verify_sequence(g, cert).unwrap());
    prop_assert!(r.refuted_below);
    prop_assert!(r.lower_bound <= r.value && r.value <= r.upper_bound);
    prop_assert!(static_lower_bound(g, &DistanceMatrix::new(g)) <= r.value);
    let p = extract_partition(g, cert).unwrap();
    prop_assert!(
        check_partition(g, &p).is_ok(),
        "{:?}",
        check_partition(g, &p)
    );
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn search_matches_brute_force_on_random_graphs(g in arb_graph(10)) {
        check_against_brute_force(&g)?;
    }

    #[test]
    fn search_matches_brute_force_on_random_trees(g in arb_tree(16)) {
        check_against_brute_force(&g)?;
    }

    #[test]
    fn search_matches_brute_force_on_random_unicyclic(g0 in 3usize..9, arms in proptest::collection::vec(1usize..5, 1..4)) {
        let g = FamilySpec::uni(g0, &arms).unwrap().build();
        check_against_brute_force(&g)?;
    }
}
