//! Oracle-backed property tests: the fast predicates, the canonical form and
//! the extension machinery against brute-force enumeration.

mod common;

use common::*;
use ramsey::enumerate::{enumerate_family, neighborhood_subset_search};
use ramsey::{
    canonical_form, check_member, contains_c4, contains_k4, contains_w5, extension_ok,
    has_independent_set, is_isomorphic, FamilySpec, IsoStore, SmallGraph, VertexSet,
};

fn petersen() -> SmallGraph {
    let mut g = SmallGraph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    g
}

#[test]
fn frozen_derived_values() {
    // Petersen is C4-free (girth 5); frozen from the tuple-scan oracle.
    let p = petersen();
    assert!(!naive_contains_c4(&p));
    assert!(!contains_c4(&p));
    // The complement of C5 is C5 again: no K4; frozen from the 4-subset scan.
    let c5c = SmallGraph::cycle(5).complement();
    assert!(!naive_contains_k4(&c5c));
    assert!(!contains_k4(&c5c));
    // The 26-vertex critical circulant has an independent 4-set but no 5-set.
    let g = SmallGraph::circulant(26, &[1, 5, 8, 12, 13]).unwrap();
    assert!(has_independent_set(&g, 4));
    assert!(!has_independent_set(&g, 5));
}

#[test]
fn canonical_class_counts_match_permutation_oracle() {
    // 1, 2, 4, 11, 34 isomorphism classes of graphs on 1..=5 vertices,
    // counted both by the library form and by the n!-permutation oracle.
    let expected = [1usize, 2, 4, 11, 34];
    for (n, &want) in (1..=5).zip(expected.iter()) {
        let store = IsoStore::new();
        let mut oracle_forms: Vec<Vec<u8>> = Vec::new();
        for_each_labeled_graph(n, |g| {
            store.insert_if_new(g);
            let f = naive_canonical(g);
            if !oracle_forms.contains(&f) {
                oracle_forms.push(f);
            }
        });
        assert_eq!(store.len(), want, "library count at n={n}");
        assert_eq!(oracle_forms.len(), want, "oracle count at n={n}");
    }
}

#[test]
fn canonical_form_agrees_with_permutation_oracle_on_pairs() {
    // Random pairs at n <= 7: equal forms iff the permutation oracle finds
    // an isomorphism.
    let mut rng = Rng::new(0x1435);
    for round in 0..2000 {
        let n = 4 + round % 4; // 4..=7
        let a = random_graph(&mut rng, n, 100 + (round % 3) as u32 * 40);
        let b = if round % 5 == 0 {
            a.relabel(&random_permutation(&mut rng, n))
        } else {
            random_graph(&mut rng, n, 100 + (round % 3) as u32 * 40)
        };
        if n <= 7 {
            // Oracle needs a <= 8-vertex graph; compare via minimum encodings.
            let iso_oracle = {
                if a.order() != b.order() || a.edge_count() != b.edge_count() {
                    false
                } else {
                    naive_canonical(&a) == naive_canonical(&b)
                }
            };
            assert_eq!(is_isomorphic(&a, &b), iso_oracle, "{a:?} vs {b:?}");
        }
    }
}

#[test]
fn extension_ok_equals_full_recheck_on_random_members() {
    // 10,000 random (member, neighborhood) pairs with n <= 12.
    let mut rng = Rng::new(0xe77);
    let fams = [FamilySpec::C4_K5, FamilySpec::W5_K4, FamilySpec::W5_K5];
    let mut done = 0;
    while done < 10_000 {
        let fam = fams[rng.below(3)];
        let n = 1 + rng.below(12);
        let g = random_member(&mut rng, n, fam);
        for _ in 0..8 {
            let nbrs = VertexSet((rng.next_u64() as u32) & VertexSet::full(g.order()).0);
            let fast = extension_ok(&g, nbrs, fam);
            let slow = check_member(&g.add_vertex(nbrs).unwrap(), fam);
            assert_eq!(fast, slow, "fam={fam:?} g={g:?} nbrs={nbrs:?}");
            done += 1;
        }
    }
}

#[test]
fn subset_search_equals_extension_filter_on_random_members() {
    let mut rng = Rng::new(0x5ea);
    for round in 0..300 {
        let fam = [FamilySpec::C4_K5, FamilySpec::W5_K4, FamilySpec::W5_K5][round % 3];
        let n = 1 + rng.below(9);
        let g = random_member(&mut rng, n, fam);
        let mut got: Vec<u32> = neighborhood_subset_search(&g, fam)
            .iter()
            .map(|s| s.0)
            .collect();
        got.sort_unstable();
        let want: Vec<u32> = (0u32..1 << g.order())
            .filter(|&bits| extension_ok(&g, VertexSet(bits), fam))
            .collect();
        assert_eq!(got, want);
    }
}

#[test]
fn monotonicity_of_predicates() {
    // Adding edges never destroys a forbidden subgraph; removing them never
    // destroys an independent set.
    let mut rng = Rng::new(0xaa11);
    for _ in 0..500 {
        let n = 5 + rng.below(5);
        let g = random_graph(&mut rng, n, 110);
        let mut super_g = g;
        for u in 0..n {
            for v in (u + 1)..n {
                if !super_g.has_edge(u, v) && rng.chance(64) {
                    super_g.add_edge(u, v);
                }
            }
        }
        if contains_c4(&g) {
            assert!(contains_c4(&super_g));
        }
        if contains_k4(&g) {
            assert!(contains_k4(&super_g));
        }
        if contains_w5(&g) {
            assert!(contains_w5(&super_g));
        }
        for k in 0..=n {
            if has_independent_set(&super_g, k) {
                assert!(has_independent_set(&g, k));
            }
        }
    }
}

#[test]
fn membership_is_hereditary() {
    let mut rng = Rng::new(0xbeaf);
    for round in 0..300 {
        let fam = [FamilySpec::C4_K5, FamilySpec::W5_K4, FamilySpec::W5_K5][round % 3];
        let n = 2 + rng.below(9);
        let g = random_member(&mut rng, n, fam);
        assert!(check_member(&g, fam));
        let keep = VertexSet((rng.next_u64() as u32) & VertexSet::full(g.order()).0);
        assert!(check_member(&g.induced_subgraph(keep), fam));
    }
}

#[test]
fn enumerate_counts_match_brute_force_pipeline_small_orders() {
    // All labeled graphs -> membership filter -> canonical dedup, against
    // the one-vertex-extension generator, for every family at n <= 6.
    for fam in [FamilySpec::C4_K5, FamilySpec::W5_K4, FamilySpec::W5_K5] {
        let levels = enumerate_family(fam, 6).unwrap();
        for n in 1..=6 {
            let store = IsoStore::new();
            for_each_labeled_graph(n, |g| {
                if check_member(g, fam) {
                    store.insert_if_new(g);
                }
            });
            assert_eq!(
                store.len(),
                levels[n].graphs.len(),
                "fam={fam:?} n={n}"
            );
        }
    }
}

#[test]
fn enumerate_counts_match_fully_naive_pipeline_tiny_orders() {
    // Same cross-check with oracle predicates and the permutation-oracle
    // canonical form: nothing from the library in the reference path.
    let naive_member = |g: &SmallGraph, fam: FamilySpec| -> bool {
        let forbidden = match fam.forbidden {
            ramsey::Forbidden::C4 => naive_contains_c4(g),
            ramsey::Forbidden::K4 => naive_contains_k4(g),
            ramsey::Forbidden::W5 => naive_contains_w5(g),
        };
        !forbidden && !naive_has_independent_set(g, fam.independence_bound + 1)
    };
    for fam in [FamilySpec::C4_K5, FamilySpec::W5_K4, FamilySpec::W5_K5] {
        let levels = enumerate_family(fam, 5).unwrap();
        for n in 1..=5 {
            let mut forms: Vec<Vec<u8>> = Vec::new();
            for_each_labeled_graph(n, |g| {
                if naive_member(g, fam) {
                    let f = naive_canonical(g);
                    if !forms.contains(&f) {
                        forms.push(f);
                    }
                }
            });
            assert_eq!(forms.len(), levels[n].graphs.len(), "fam={fam:?} n={n}");
        }
    }
}

#[test]
fn canonical_forms_of_family_members_are_stable_under_relabeling() {
    let mut rng = Rng::new(0xf00d);
    for round in 0..500 {
        let fam = [FamilySpec::C4_K5, FamilySpec::W5_K4, FamilySpec::W5_K5][round % 3];
        let n = 3 + rng.below(10);
        let g = random_member(&mut rng, n, fam);
        let perm = random_permutation(&mut rng, g.order());
        assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }
}
