//! Brute-force multigraph references: exhaustive enumeration of labeled
//! 4-valent multigraphs on very small vertex counts, isomorphism testing
//! by trying every vertex permutation, and an exhaustive chain scanner.

use tetcensus::multigraph::Multigraph;

/// All connected 4-valent labeled multigraphs on n vertices (n small),
/// enumerated by assigning every multiplicity vector directly.
pub fn all_labeled_graphs(n: usize) -> Vec<Multigraph> {
    assert!(n <= 4, "labeled enumeration is exponential; keep n tiny");
    let mut cells = Vec::new();
    for a in 0..n as u8 {
        for b in a..n as u8 {
            cells.push((a, b));
        }
    }
    let mut out = Vec::new();
    let mut mult = vec![0u8; cells.len()];
    assign(n, &cells, &mut mult, 0, &mut out);
    out
}

fn assign(n: usize, cells: &[(u8, u8)], mult: &mut [u8], i: usize, out: &mut Vec<Multigraph>) {
    if i == cells.len() {
        let mut edges = Vec::new();
        for (ci, &(a, b)) in cells.iter().enumerate() {
            for _ in 0..mult[ci] {
                edges.push((a, b));
            }
        }
        if edges.len() == 2 * n {
            if let Ok(g) = Multigraph::new(n, edges) {
                out.push(g);
            }
        }
        return;
    }
    let (a, b) = cells[i];
    let max = if a == b { 2 } else { 4 };
    for m in 0..=max {
        mult[i] = m;
        // Degree caps prune wildly infeasible assignments early.
        if degree_ok(n, cells, mult, i) {
            assign(n, cells, mult, i + 1, out);
        }
    }
    mult[i] = 0;
}

fn degree_ok(n: usize, cells: &[(u8, u8)], mult: &[u8], upto: usize) -> bool {
    let mut deg = vec![0u32; n];
    for (ci, &(a, b)) in cells.iter().enumerate().take(upto + 1) {
        if a == b {
            deg[a as usize] += 2 * mult[ci] as u32;
        } else {
            deg[a as usize] += mult[ci] as u32;
            deg[b as usize] += mult[ci] as u32;
        }
    }
    deg.iter().all(|&d| d <= 4)
}

/// Isomorphism test by trying all vertex permutations.
pub fn isomorphic(g: &Multigraph, h: &Multigraph) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let n = g.order();
    let mut perm: Vec<u8> = (0..n as u8).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let mut mapped: Vec<(u8, u8)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (p[a as usize], p[b as usize]);
                (x.min(y), x.max(y))
            })
            .collect();
        mapped.sort_unstable();
        mapped == h.edges()
    })
}

fn permute_all(perm: &mut [u8], k: usize, test: &mut impl FnMut(&[u8]) -> bool) -> bool {
    if k == perm.len() {
        return test(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permute_all(perm, k + 1, test) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Buckets labeled graphs into isomorphism classes, returning one
/// representative per class.
pub fn iso_classes(graphs: Vec<Multigraph>) -> Vec<Multigraph> {
    let mut reps: Vec<Multigraph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

/// A chain reported by the exhaustive scanner: the ordered vertices of a
/// maximal double-edge path plus the loop caps at its two ends.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ScannedChain {
    pub vertices: Vec<u8>,
    pub loop_first: bool,
    pub loop_last: bool,
}

/// Exhaustive chain scanner: tries every simple path of double edges and
/// keeps those whose interior vertices carry exactly the two chain double
/// edges and whose end vertices carry exactly one (so nothing traversing
/// a cycle of double edges qualifies). Lone looped vertices without
/// double edges count as zero-length chains.
pub fn scan_chains(g: &Multigraph) -> Vec<ScannedChain> {
    let n = g.order();
    let is_double = |a: u8, b: u8| a != b && g.multiplicity(a, b) == 2;
    let double_degree = |v: u8| (0..n as u8).filter(|&w| is_double(v, w)).count();
    let has_double = |v: u8| double_degree(v) > 0;
    let mut found = Vec::new();
    for v in 0..n as u8 {
        if !has_double(v) && g.multiplicity(v, v) >= 1 {
            found.push(ScannedChain {
                vertices: vec![v],
                loop_first: true,
                loop_last: g.multiplicity(v, v) >= 2,
            });
        }
    }
    let mut stack: Vec<Vec<u8>> = (0..n as u8).map(|v| vec![v]).collect();
    while let Some(path) = stack.pop() {
        let last = *path.last().unwrap();
        let mut extended = false;
        for w in 0..n as u8 {
            if !path.contains(&w) && is_double(last, w) {
                let mut next = path.clone();
                next.push(w);
                stack.push(next);
                extended = true;
            }
        }
        if path.len() >= 2 && !extended {
            let first = path[0];
            let ends_are_true_ends =
                double_degree(first) == 1 && double_degree(last) == 1;
            if ends_are_true_ends {
                let mut c = ScannedChain {
                    vertices: path.clone(),
                    loop_first: g.multiplicity(first, first) >= 1,
                    loop_last: g.multiplicity(last, last) >= 1,
                };
                // Canonical direction so each chain is reported once.
                let rev: Vec<u8> = path.iter().rev().copied().collect();
                if rev < c.vertices {
                    c = ScannedChain {
                        vertices: rev,
                        loop_first: c.loop_last,
                        loop_last: c.loop_first,
                    };
                }
                if !found.contains(&c) {
                    found.push(c);
                }
            }
        }
    }
    found.sort();
    found
}
