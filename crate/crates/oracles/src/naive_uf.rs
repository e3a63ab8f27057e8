//! Label-array union-find oracle: stores the raw relationship list and
//! recomputes classes, parities, sizes, and boundaries by breadth-first
//! search on every query.

use tetcensus::ufind::LinkMode;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NaiveOutcome {
    Merged,
    RedundantConsistent,
    RedundantConflict,
}

#[derive(Clone, Copy)]
enum Rel {
    Ok { x: u32, y: u32, parity: bool },
    Conflict,
}

pub struct NaiveUnionFind {
    n: usize,
    mode: LinkMode,
    initial_boundary: i32,
    rels: Vec<Rel>,
}

/// Snapshot of the oracle's current equivalence structure.
pub struct NaiveState {
    /// Class label per element (the smallest element of its class).
    pub label: Vec<u32>,
    /// Absolute parity per element, relative to its class label.
    pub parity: Vec<bool>,
    /// Class size, indexed by class label.
    pub size: Vec<u32>,
    /// Boundary count per class label (vertex-link semantics).
    pub boundary: Vec<i32>,
    pub class_count: usize,
}

impl NaiveUnionFind {
    pub fn new(n: usize, mode: LinkMode, initial_boundary: i32) -> NaiveUnionFind {
        NaiveUnionFind {
            n,
            mode,
            initial_boundary,
            rels: Vec::new(),
        }
    }

    pub fn state(&self) -> NaiveState {
        let mut adj: Vec<Vec<(u32, bool)>> = vec![Vec::new(); self.n];
        for rel in &self.rels {
            if let Rel::Ok { x, y, parity } = *rel {
                adj[x as usize].push((y, parity));
                adj[y as usize].push((x, parity));
            }
        }
        let mut label = vec![u32::MAX; self.n];
        let mut parity = vec![false; self.n];
        let mut size = vec![0u32; self.n];
        let mut class_count = 0;
        for start in 0..self.n as u32 {
            if label[start as usize] != u32::MAX {
                continue;
            }
            class_count += 1;
            let mut queue = vec![start];
            label[start as usize] = start;
            parity[start as usize] = false;
            while let Some(v) = queue.pop() {
                size[start as usize] += 1;
                for &(w, p) in &adj[v as usize] {
                    if label[w as usize] == u32::MAX {
                        label[w as usize] = start;
                        parity[w as usize] = parity[v as usize] ^ p;
                        queue.push(w);
                    }
                }
            }
        }
        let mut boundary = vec![0i32; self.n];
        for c in 0..self.n {
            if label[c] == c as u32 {
                boundary[c] = self.initial_boundary * size[c] as i32;
            }
        }
        for rel in &self.rels {
            if let Rel::Ok { x, .. } = *rel {
                boundary[label[x as usize] as usize] -= 2;
            }
        }
        NaiveState {
            label,
            parity,
            size,
            boundary,
            class_count,
        }
    }

    pub fn union(&mut self, x: u32, y: u32, rel_parity: bool) -> NaiveOutcome {
        let st = self.state();
        let (xi, yi) = (x as usize, y as usize);
        if st.label[xi] == st.label[yi] {
            if (st.parity[xi] ^ st.parity[yi]) != rel_parity {
                self.rels.push(Rel::Conflict);
                return NaiveOutcome::RedundantConflict;
            }
            self.rels.push(Rel::Ok { x, y, parity: rel_parity });
            return NaiveOutcome::RedundantConsistent;
        }
        self.rels.push(Rel::Ok { x, y, parity: rel_parity });
        NaiveOutcome::Merged
    }

    pub fn undo(&mut self) {
        self.rels.pop().expect("oracle undo with no relationships");
    }

    pub fn len_log(&self) -> usize {
        self.rels.len()
    }

    pub fn mode(&self) -> LinkMode {
        self.mode
    }
}
