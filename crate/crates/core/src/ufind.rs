//! Backtrackable union-find with height balancing, O(1) LIFO undo, and
//! per-class aggregates.
//!
//! Path compression is deliberately absent: compressed trees are hard to
//! split when the search backtracks, while height balancing alone keeps
//! every operation logarithmic. Each relationship pushes exactly one log
//! entry (merges, redundant relationships, and conflicts alike), so the
//! caller can undo a gluing by popping a fixed number of entries.

/// Which kind of link the structure is tracking. Vertex-link mode carries
/// per-class boundary-arc counts; edge-link mode carries per-class
/// completion flags instead.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LinkMode {
    EdgeLink,
    VertexLink,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UnionOutcome {
    /// Two classes were merged.
    Merged,
    /// Both elements were already in one class and the new relationship
    /// agrees with their stored relative orientation.
    RedundantConsistent,
    /// Both elements were already in one class and the new relationship
    /// contradicts their stored relative orientation. Nothing is mutated;
    /// a no-op log entry keeps undo counts aligned.
    RedundantConflict,
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct Node {
    parent: Option<u32>,
    /// d(x): upper bound on the depth of the subtree rooted here.
    depth_bound: u32,
    /// n(x): class size. Valid while this node is a root; frozen
    /// historical data afterwards, which is exactly what undo needs.
    size: u32,
    /// b(x): boundary arcs of the partially built link (vertex-link mode).
    boundary: i32,
    /// Orientation of this node relative to its parent.
    parity_to_parent: bool,
    /// Link completely constructed (edge-link mode).
    complete: bool,
}

#[derive(Clone, Copy, Debug)]
enum LogEntry {
    Merge { child: u32, old_parent_depth: u32 },
    Redundant { root: u32, boundary_delta: i32, completed_set: bool },
    Conflict,
}

/// Union-find forest over a fixed set of nodes with undo support.
#[derive(Clone)]
pub struct RollbackUnionFind {
    nodes: Vec<Node>,
    log: Vec<LogEntry>,
    class_count: usize,
    mode: LinkMode,
}

impl RollbackUnionFind {
    /// `count` singleton classes, each with the given initial boundary
    /// (3 for the link triangle of a tetrahedron corner; 0 in edge mode).
    pub fn new(count: usize, mode: LinkMode, initial_boundary: i32) -> RollbackUnionFind {
        assert!(count >= 1, "union-find needs at least one node");
        RollbackUnionFind {
            nodes: vec![
                Node {
                    parent: None,
                    depth_bound: 1,
                    size: 1,
                    boundary: initial_boundary,
                    parity_to_parent: false,
                    complete: false,
                };
                count
            ],
            log: Vec::new(),
            class_count: count,
            mode,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn mode(&self) -> LinkMode {
        self.mode
    }

    /// Representative of x's class and the orientation of x relative to it
    /// (the XOR of parities along the path). Does not mutate the forest.
    pub fn find(&self, x: u32) -> (u32, bool) {
        let mut cur = x;
        let mut parity = false;
        while let Some(p) = self.nodes[cur as usize].parent {
            parity ^= self.nodes[cur as usize].parity_to_parent;
            cur = p;
        }
        (cur, parity)
    }

    /// Records the relationship `x ~ y` with the given relative
    /// orientation (true = orientation-reversing).
    pub fn union(&mut self, x: u32, y: u32, rel_parity: bool) -> UnionOutcome {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            if (px ^ py) != rel_parity {
                self.log.push(LogEntry::Conflict);
                return UnionOutcome::RedundantConflict;
            }
            let root = rx as usize;
            match self.mode {
                LinkMode::VertexLink => {
                    self.nodes[root].boundary -= 2;
                    self.log.push(LogEntry::Redundant {
                        root: rx,
                        boundary_delta: 2,
                        completed_set: false,
                    });
                }
                LinkMode::EdgeLink => {
                    let was = self.nodes[root].complete;
                    self.nodes[root].complete = true;
                    self.log.push(LogEntry::Redundant {
                        root: rx,
                        boundary_delta: 0,
                        completed_set: !was,
                    });
                }
            }
            return UnionOutcome::RedundantConsistent;
        }
        // The shallower root becomes the child; on equal depth bounds the
        // second argument's root takes parenthood and deepens by one.
        let (parent, child) = if self.nodes[rx as usize].depth_bound
            > self.nodes[ry as usize].depth_bound
        {
            (rx, ry)
        } else {
            (ry, rx)
        };
        let old_parent_depth = self.nodes[parent as usize].depth_bound;
        if self.nodes[rx as usize].depth_bound == self.nodes[ry as usize].depth_bound {
            self.nodes[parent as usize].depth_bound += 1;
        }
        let q = rel_parity ^ px ^ py;
        let child_ix = child as usize;
        let parent_ix = parent as usize;
        self.nodes[child_ix].parent = Some(parent);
        self.nodes[child_ix].parity_to_parent = q;
        self.nodes[parent_ix].size += self.nodes[child_ix].size;
        if self.mode == LinkMode::VertexLink {
            self.nodes[parent_ix].boundary += self.nodes[child_ix].boundary - 2;
        }
        self.class_count -= 1;
        self.log.push(LogEntry::Merge {
            child,
            old_parent_depth,
        });
        UnionOutcome::Merged
    }

    /// Reverts the most recent relationship in constant time.
    pub fn undo(&mut self) {
        match self.log.pop().expect("undo with an empty log") {
            LogEntry::Conflict => {}
            LogEntry::Redundant {
                root,
                boundary_delta,
                completed_set,
            } => {
                let root = root as usize;
                self.nodes[root].boundary += boundary_delta;
                if completed_set {
                    self.nodes[root].complete = false;
                }
            }
            LogEntry::Merge {
                child,
                old_parent_depth,
            } => {
                let child_ix = child as usize;
                let parent_ix = self.nodes[child_ix].parent.unwrap() as usize;
                self.nodes[parent_ix].size -= self.nodes[child_ix].size;
                if self.mode == LinkMode::VertexLink {
                    self.nodes[parent_ix].boundary -= self.nodes[child_ix].boundary - 2;
                }
                self.nodes[parent_ix].depth_bound = old_parent_depth;
                self.nodes[child_ix].parent = None;
                self.nodes[child_ix].parity_to_parent = false;
                self.class_count += 1;
            }
        }
    }

    pub fn log_len(&self) -> usize {
        self.log.len()
    }

    pub fn num_classes(&self) -> usize {
        self.class_count
    }

    fn assert_root(&self, root: u32) {
        assert!(
            self.nodes[root as usize].parent.is_none(),
            "node {root} is not a class representative"
        );
    }

    pub fn class_size(&self, root: u32) -> u32 {
        self.assert_root(root);
        self.nodes[root as usize].size
    }

    /// Boundary arcs of the class's partially built link (vertex-link
    /// mode); the link is completely constructed exactly when this is 0.
    pub fn boundary_arcs(&self, root: u32) -> i32 {
        self.assert_root(root);
        self.nodes[root as usize].boundary
    }

    /// Whether the class's link is completely constructed.
    pub fn is_complete(&self, root: u32) -> bool {
        self.assert_root(root);
        match self.mode {
            LinkMode::EdgeLink => self.nodes[root as usize].complete,
            LinkMode::VertexLink => self.nodes[root as usize].boundary == 0,
        }
    }

    /// Depth of x below its root; test hook for the balancing law.
    pub fn depth_of(&self, x: u32) -> u32 {
        let mut cur = x;
        let mut d = 0;
        while let Some(p) = self.nodes[cur as usize].parent {
            d += 1;
            cur = p;
        }
        d
    }

    /// Node table as TSV (node, parent, depth bound, size, boundary,
    /// parity, complete), for differential debugging.
    pub fn dump_tsv(&self) -> String {
        let mut out = String::from("node\tparent\tdepth\tsize\tboundary\tparity\tcomplete\n");
        for (i, n) in self.nodes.iter().enumerate() {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                i,
                n.parent.map_or("-".to_string(), |p| p.to_string()),
                n.depth_bound,
                n.size,
                n.boundary,
                n.parity_to_parent as u8,
                n.complete as u8,
            ));
        }
        out
    }

    /// Field-for-field equality against another structure, ignoring logs.
    pub fn same_state(&self, other: &RollbackUnionFind) -> bool {
        self.nodes == other.nodes && self.class_count == other.class_count
    }
}
