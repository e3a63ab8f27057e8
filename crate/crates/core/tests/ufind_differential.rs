//! Differential tests of the rollback union-find against the naive
//! label-array oracle, checked after every single operation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tetcensus::ufind::{LinkMode, RollbackUnionFind, UnionOutcome};
use tetcensus_oracles::{NaiveOutcome, NaiveUnionFind};

fn outcomes_match(a: UnionOutcome, b: NaiveOutcome) -> bool {
    matches!(
        (a, b),
        (UnionOutcome::Merged, NaiveOutcome::Merged)
            | (UnionOutcome::RedundantConsistent, NaiveOutcome::RedundantConsistent)
            | (UnionOutcome::RedundantConflict, NaiveOutcome::RedundantConflict)
    )
}

fn check_states(u: &RollbackUnionFind, oracle: &NaiveUnionFind, step: usize) {
    let st = oracle.state();
    let n = u.len();
    assert_eq!(u.num_classes(), st.class_count, "class count at step {step}");
    for i in 0..n as u32 {
        let (ri, pi) = u.find(i);
        for j in 0..n as u32 {
            let (rj, pj) = u.find(j);
            let same_real = ri == rj;
            let same_oracle = st.label[i as usize] == st.label[j as usize];
            assert_eq!(same_real, same_oracle, "membership of ({i},{j}) at step {step}");
            if same_real {
                assert_eq!(
                    pi ^ pj,
                    st.parity[i as usize] ^ st.parity[j as usize],
                    "relative parity of ({i},{j}) at step {step}"
                );
            }
        }
        if ri == i {
            let oracle_label = st.label[i as usize] as usize;
            assert_eq!(
                u.class_size(i),
                st.size[oracle_label],
                "class size of {i} at step {step}"
            );
            if u.mode() == LinkMode::VertexLink {
                assert_eq!(
                    u.boundary_arcs(i),
                    st.boundary[oracle_label],
                    "boundary of {i} at step {step}"
                );
            }
        }
        // Depth law: never deeper than floor(log2(size)) + 1.
        let size = u.class_size(ri);
        let bound = 32 - (size as u32).leading_zeros();
        assert!(
            u.depth_of(i) <= bound,
            "depth law violated for {i} at step {step}: depth {} size {}",
            u.depth_of(i),
            size
        );
    }
}

fn run_sequence(seed: u64, n: usize, ops: usize, mode: LinkMode) {
    let initial_boundary = if mode == LinkMode::VertexLink { 3 } else { 0 };
    let fresh = RollbackUnionFind::new(n, mode, initial_boundary);
    let mut real = fresh.clone();
    let mut oracle = NaiveUnionFind::new(n, mode, initial_boundary);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for step in 0..ops {
        let undo = real.log_len() > 0 && rng.gen_bool(0.45);
        if undo {
            real.undo();
            oracle.undo();
        } else {
            let x = rng.gen_range(0..n) as u32;
            let y = rng.gen_range(0..n) as u32;
            let parity = rng.gen_bool(0.5);
            let a = real.union(x, y, parity);
            let b = oracle.union(x, y, parity);
            assert!(outcomes_match(a, b), "outcome mismatch at step {step}: {a:?} vs {b:?}");
        }
        check_states(&real, &oracle, step);
    }
    // Unwind everything: the structure must equal a fresh one field for field.
    while real.log_len() > 0 {
        real.undo();
    }
    assert!(real.same_state(&fresh), "full unwind must restore pristine state");
}

#[test]
fn randomized_against_oracle_both_modes() {
    for seed in 0..6 {
        run_sequence(seed, 24, 400, LinkMode::EdgeLink);
        run_sequence(1000 + seed, 16, 400, LinkMode::VertexLink);
    }
}

#[test]
fn mass_union_then_mass_undo_restores_fresh() {
    let n = 64;
    let fresh = RollbackUnionFind::new(n, LinkMode::VertexLink, 3);
    let mut u = fresh.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut applied = 0;
    while applied < 10_000 {
        let x = rng.gen_range(0..n) as u32;
        let y = rng.gen_range(0..n) as u32;
        let parity = rng.gen_bool(0.5);
        u.union(x, y, parity);
        applied += 1;
    }
    assert_eq!(u.log_len(), 10_000);
    for _ in 0..10_000 {
        u.undo();
    }
    assert!(u.same_state(&fresh));
    assert_eq!(u.num_classes(), n);
}

#[test]
fn dfs_style_interleaving_matches_oracle() {
    // Simulates the search discipline: bursts of three unions, explored
    // depth-first with exact rollback, oracle consulted at each node.
    let n = 24;
    let mut real = RollbackUnionFind::new(n, LinkMode::VertexLink, 3);
    let mut oracle = NaiveUnionFind::new(n, LinkMode::VertexLink, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut step = 0;
    fn descend(
        depth: usize,
        real: &mut RollbackUnionFind,
        oracle: &mut NaiveUnionFind,
        rng: &mut ChaCha8Rng,
        n: usize,
        step: &mut usize,
    ) {
        if depth == 4 {
            return;
        }
        for _branch in 0..2 {
            let mut burst = 0;
            for _ in 0..3 {
                let x = rng.gen_range(0..n) as u32;
                let y = rng.gen_range(0..n) as u32;
                let parity = rng.gen_bool(0.5);
                let a = real.union(x, y, parity);
                let b = oracle.union(x, y, parity);
                assert!(outcomes_match(a, b));
                burst += 1;
            }
            check_states(real, oracle, *step);
            *step += 1;
            descend(depth + 1, real, oracle, rng, n, step);
            for _ in 0..burst {
                real.undo();
                oracle.undo();
            }
            check_states(real, oracle, *step);
        }
    }
    descend(0, &mut real, &mut oracle, &mut rng, n, &mut step);
}
