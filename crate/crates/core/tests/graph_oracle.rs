//! Multigraph enumeration and canonical coding checked against exhaustive
//! brute force, and chains checked against the exhaustive scanner.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tetcensus::graphfilter::find_chains;
use tetcensus::multigraph::{canonical_code, enumerate_graphs, Multigraph};
use tetcensus_oracles::graphs::{all_labeled_graphs, iso_classes, scan_chains, ScannedChain};

#[test]
fn brute_force_iso_classes_match_enumeration() {
    for n in 1..=4 {
        let classes = iso_classes(all_labeled_graphs(n));
        let enumerated = enumerate_graphs(n).unwrap();
        assert_eq!(
            classes.len(),
            enumerated.len(),
            "class count mismatch at n={n}"
        );
        // Same classes: every brute-force representative has exactly one
        // canonical code, and those codes are exactly the enumerated ones.
        let mut codes: Vec<_> = classes.iter().map(canonical_code).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), classes.len(), "codes collide at n={n}");
        let enum_codes: Vec<_> = enumerated.iter().map(canonical_code).collect();
        assert_eq!(codes, enum_codes);
    }
}

#[test]
fn four_vertex_graphs_have_ten_codes() {
    let classes = iso_classes(all_labeled_graphs(4));
    assert_eq!(classes.len(), 10);
    let labeled = all_labeled_graphs(4);
    let mut codes: Vec<_> = labeled.iter().map(canonical_code).collect();
    codes.sort();
    codes.dedup();
    assert_eq!(codes.len(), 10);
}

fn relabel(g: &Multigraph, perm: &[u8]) -> Multigraph {
    let edges = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (perm[a as usize], perm[b as usize]);
            (x.min(y), x.max(y))
        })
        .collect();
    Multigraph::new(g.order(), edges).unwrap()
}

#[test]
fn canonical_code_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let code = canonical_code(&g);
            let reps = if n <= 4 { 120 } else { 100 };
            for _ in 0..reps {
                let mut perm: Vec<u8> = (0..n as u8).collect();
                perm.shuffle(&mut rng);
                let h = relabel(&g, &perm);
                assert_eq!(canonical_code(&h), code, "n={n} relabeling changed code");
            }
        }
    }
}

#[test]
fn chains_match_exhaustive_scanner() {
    for n in 1..=7 {
        for g in enumerate_graphs(n).unwrap() {
            let fast = find_chains(&g);
            let mut got: Vec<ScannedChain> = fast
                .chains
                .iter()
                .map(|c| {
                    let mut vertices = c.vertices.clone();
                    let mut loop_first = c.loop_at_first;
                    let mut loop_last = c.loop_at_last;
                    let rev: Vec<u8> = vertices.iter().rev().copied().collect();
                    if rev < vertices {
                        vertices = rev;
                        std::mem::swap(&mut loop_first, &mut loop_last);
                    }
                    ScannedChain {
                        vertices,
                        loop_first,
                        loop_last,
                    }
                })
                .collect();
            got.sort();
            let want = scan_chains(&g);
            assert_eq!(got, want, "chains differ on {g:?}");
        }
    }
}
