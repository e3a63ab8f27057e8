//! Differential tests of the gluing arithmetic against first-principles
//! oracles, exhaustively over every complete gluing for one and two
//! tetrahedra (36 + 2 x 1296 triangulations).

use tetcensus::multigraph::enumerate_graphs;
use tetcensus::triangulation::{
    iso_signature, realize_pairing, validate_closed, vertex_links_orientable,
};
use tetcensus_oracles::tri::{all_gluings, classify, iso_classes};

#[test]
fn validity_matches_oracle_exhaustively_for_small_n() {
    let mut checked = 0;
    for n in 1..=2 {
        for g in enumerate_graphs(n).unwrap() {
            let pairing = realize_pairing(&g);
            for t in all_gluings(&pairing) {
                let got = validate_closed(&t);
                let want = classify(&t);
                assert_eq!(got.vertices, want.vertices, "vertex count on {t:?}");
                assert_eq!(got.edges, want.edges, "edge count on {t:?}");
                assert_eq!(got.is_3mfd, want.is_3mfd, "3-manifold verdict on {t:?}");
                assert_eq!(got.orientable, want.orientable, "orientability on {t:?}");
                assert_eq!(
                    vertex_links_orientable(&t),
                    want.links_orientable,
                    "link orientability on {t:?}"
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 36 + 2 * 1296);
}

#[test]
fn n1_signature_count_matches_pairwise_isomorphism_oracle() {
    let g = &enumerate_graphs(1).unwrap()[0];
    let pairing = realize_pairing(g);
    let all: Vec<_> = all_gluings(&pairing)
        .into_iter()
        .filter(|t| classify(t).is_3mfd)
        .collect();
    let classes = iso_classes(all.clone());
    let mut sigs: Vec<_> = all.iter().map(iso_signature).collect();
    sigs.sort();
    sigs.dedup();
    assert_eq!(sigs.len(), classes.len());
}

#[test]
fn n2_signature_count_matches_pairwise_isomorphism_oracle() {
    for g in enumerate_graphs(2).unwrap() {
        let pairing = realize_pairing(&g);
        let all: Vec<_> = all_gluings(&pairing)
            .into_iter()
            .filter(|t| classify(t).is_3mfd)
            .collect();
        let classes = iso_classes(all.clone());
        let mut sigs: Vec<_> = all.iter().map(iso_signature).collect();
        sigs.sort();
        sigs.dedup();
        assert_eq!(sigs.len(), classes.len(), "graph {g:?}");
    }
}

#[test]
fn signatures_separate_different_edge_counts() {
    // Any two closed n=2 gluings with different edge class counts are
    // non-isomorphic and must get different signatures.
    let g = &enumerate_graphs(2).unwrap()[0];
    let pairing = realize_pairing(g);
    let tris = all_gluings(&pairing);
    let facts: Vec<_> = tris
        .iter()
        .map(|t| (validate_closed(t).edges, iso_signature(t)))
        .collect();
    for (ea, sa) in &facts {
        for (eb, sb) in &facts {
            if ea != eb {
                assert_ne!(sa, sb);
            }
        }
    }
}
