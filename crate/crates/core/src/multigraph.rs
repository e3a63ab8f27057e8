//! Enumeration, canonical coding, and text serialization of connected
//! 4-valent multigraphs — the candidate face pairing graphs.
//!
//! Enumeration is orderly generation: edge multisets are extended in
//! nondecreasing lexicographic order and a branch survives only while its
//! edge list is the canonical (lexicographically least) representative of
//! its isomorphism class. Every prefix of a canonical list is canonical,
//! so pruning non-canonical partial lists is exhaustive, and each class is
//! emitted exactly once, already in canonical form.

use rayon::prelude::*;
use thiserror::Error;

/// Largest supported vertex count. Graph lists have been needed up to 13
/// tetrahedra; beyond that the enumeration is refused.
pub const MAX_ORDER: usize = 13;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("vertex {vertex} has degree {degree}, expected 4")]
    Degree { vertex: usize, degree: u32 },
    #[error("graph is not connected")]
    Disconnected,
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("vertex count {n} outside supported range 1..={MAX_ORDER}")]
    Order { n: usize },
}

/// A connected 4-valent multigraph on `n` vertices. Loops are allowed and
/// contribute 2 to the degree of their endpoint. Edges are stored as
/// normalized pairs `(a, b)` with `a <= b`, sorted; there are exactly `2n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(u8, u8)>,
}

/// Total-order serialization of a multigraph that is identical for
/// isomorphic graphs: the vertex count followed by the lexicographically
/// minimal sorted edge list over all vertex relabelings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GraphCode {
    bytes: Vec<u8>,
}

impl GraphCode {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }
}

impl Multigraph {
    /// Builds a multigraph from an edge list, normalizing and sorting it,
    /// and checking all invariants (degree 4 everywhere, 2n edges,
    /// connected when loops are ignored).
    pub fn new(n: usize, edges: Vec<(u8, u8)>) -> Result<Multigraph, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::Order { n });
        }
        if edges.len() != 2 * n {
            return Err(GraphError::EdgeCount {
                expected: 2 * n,
                found: edges.len(),
            });
        }
        let mut edges: Vec<(u8, u8)> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        edges.sort_unstable();
        let mut deg = [0u32; MAX_ORDER];
        for &(a, b) in &edges {
            if b as usize >= n {
                return Err(GraphError::Syntax {
                    line: 0,
                    msg: format!("vertex {b} out of range for order {n}"),
                });
            }
            if a == b {
                deg[a as usize] += 2;
            } else {
                deg[a as usize] += 1;
                deg[b as usize] += 1;
            }
        }
        for (v, &d) in deg.iter().enumerate().take(n) {
            if d != 4 {
                return Err(GraphError::Degree { vertex: v, degree: d });
            }
        }
        let g = Multigraph { n, edges };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The 2n normalized edges, sorted lexicographically.
    pub fn edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    /// Number of parallel edges between `a` and `b`; for `a == b`, the
    /// number of loops at that vertex.
    pub fn multiplicity(&self, a: u8, b: u8) -> u8 {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.edges.iter().filter(|&&e| e == key).count() as u8
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let (a, b) = (a as usize, b as usize);
                if a == v && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                } else if b == v && !seen[a] {
                    seen[a] = true;
                    stack.push(a);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn to_matrix(&self) -> MultMat {
        let mut m = MultMat::new(self.n);
        for &(a, b) in &self.edges {
            m.add(a as usize, b as usize);
        }
        m
    }
}

impl std::fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Multigraph({})", render_graph(self))
    }
}

/// Multiplicity matrix over the active vertices; the diagonal counts loops
/// (each loop appearing once, although it contributes 2 to the degree).
#[derive(Clone)]
struct MultMat {
    v: usize,
    m: [[u8; MAX_ORDER]; MAX_ORDER],
}

impl MultMat {
    fn new(v: usize) -> MultMat {
        MultMat {
            v,
            m: [[0; MAX_ORDER]; MAX_ORDER],
        }
    }

    fn add(&mut self, a: usize, b: usize) {
        self.m[a][b] += 1;
        if a != b {
            self.m[b][a] += 1;
        }
    }

    fn remove(&mut self, a: usize, b: usize) {
        self.m[a][b] -= 1;
        if a != b {
            self.m[b][a] -= 1;
        }
    }

    /// Row-major position of upper-triangle cell (r, c), r <= c. The flat
    /// sequence of these cells, compared with higher multiplicities first,
    /// orders graphs exactly as their sorted edge lists do.
    fn pos(&self, r: usize, c: usize) -> u32 {
        (r * self.v - r * (r + 1) / 2 + c) as u32
    }

    fn row_of_pos(&self, p: u32) -> usize {
        let mut r = 0usize;
        let mut base = 0u32;
        loop {
            let row_len = (self.v - r) as u32;
            if p < base + row_len {
                return r;
            }
            base += row_len;
            r += 1;
        }
    }

    fn relabeled(&self, lab: &[u8]) -> MultMat {
        let mut out = MultMat::new(self.v);
        for i in 0..self.v {
            for j in 0..self.v {
                out.m[i][j] = self.m[lab[i] as usize][lab[j] as usize];
            }
        }
        out
    }

    /// Decodes the upper triangle into the sorted edge list it represents.
    fn edge_list(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for r in 0..self.v {
            for c in r..self.v {
                for _ in 0..self.m[r][c] {
                    out.push((r as u8, c as u8));
                }
            }
        }
        out
    }
}

/// Searches for a relabeling of the `mat.v` vertices under which `mat`'s
/// multiplicity string is strictly greater (row-major, element-wise) than
/// `refm`'s — i.e. whose sorted edge list is strictly smaller. Returns the
/// first such labeling found, or None if `refm` is already maximal.
///
/// The search assigns labels 0, 1, ... in turn and tracks the earliest
/// determined cell where the candidate differs from the reference. A
/// difference in row 0 is decisive immediately; a difference in a lower
/// row stays pending until no earlier cell can still change the outcome.
fn find_greater_labeling(mat: &MultMat, refm: &MultMat) -> Option<Vec<u8>> {
    let v = mat.v;
    let mut lab = vec![0u8; v];
    let mut used = vec![false; v];
    rec_greater(mat, refm, &mut lab, &mut used, 0, None)
}

fn rec_greater(
    mat: &MultMat,
    refm: &MultMat,
    lab: &mut [u8],
    used: &mut [bool],
    j: usize,
    diff: Option<(u32, bool)>,
) -> Option<Vec<u8>> {
    let v = mat.v;
    if j == v {
        return match diff {
            Some((_, true)) => Some(lab.to_vec()),
            _ => None,
        };
    }
    let next_undetermined = if j + 1 < v {
        mat.pos(0, j + 1)
    } else {
        u32::MAX
    };
    for w in 0..v {
        if used[w] {
            continue;
        }
        // Cells newly determined by assigning label j to vertex w are
        // (i, j) for i <= j; their positions increase with i, so only the
        // first difference in the column can tighten the tracked state.
        let mut nd = diff;
        for i in 0..=j {
            let val = if i == j {
                mat.m[w][w]
            } else {
                mat.m[lab[i] as usize][w]
            };
            let rv = refm.m[i][j];
            if val != rv {
                let p = mat.pos(i, j);
                if nd.map_or(true, |(dp, _)| p < dp) {
                    nd = Some((p, val > rv));
                }
                break;
            }
        }
        match nd {
            Some((p, true)) if p < next_undetermined => {
                // Decisive win: every earlier cell is determined and equal.
                lab[j] = w as u8;
                used[w] = true;
                let mut fill = j + 1;
                for x in 0..v {
                    if !used[x] {
                        lab[fill] = x as u8;
                        fill += 1;
                    }
                }
                let result = lab.to_vec();
                used[w] = false;
                return Some(result);
            }
            Some((p, false)) if p < next_undetermined => {
                continue;
            }
            Some((p, false)) => {
                // Losing at p; only a win strictly before p can save the
                // branch, and such a win must come from rows above p's row.
                let rstar = mat.row_of_pos(p);
                let mut hope = false;
                'rows: for r in 0..rstar {
                    let lr = lab[r] as usize;
                    let mut maxw = 0u8;
                    for x in 0..v {
                        if !used[x] && x != w {
                            maxw = maxw.max(mat.m[lr][x]);
                        }
                    }
                    for c in j + 1..v {
                        if maxw > refm.m[r][c] {
                            hope = true;
                            break 'rows;
                        }
                    }
                }
                if !hope {
                    continue;
                }
            }
            _ => {}
        }
        lab[j] = w as u8;
        used[w] = true;
        let found = rec_greater(mat, refm, lab, used, j + 1, nd);
        used[w] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// True when the matrix's own labeling is the canonical one (no relabeling
/// yields a smaller sorted edge list).
fn is_canonical(mat: &MultMat) -> bool {
    find_greater_labeling(mat, mat).is_none()
}

/// Canonical code of an arbitrary multigraph: the lexicographically
/// minimal sorted edge list over all vertex relabelings, prefixed by the
/// vertex count. Equal for every relabeling of the same graph.
pub fn canonical_code(g: &Multigraph) -> GraphCode {
    let mat = g.to_matrix();
    let mut best = mat.clone();
    while let Some(lab) = find_greater_labeling(&mat, &best) {
        best = mat.relabeled(&lab);
    }
    code_from_matrix(g.n, &best)
}

fn code_from_matrix(n: usize, mat: &MultMat) -> GraphCode {
    let mut bytes = Vec::with_capacity(1 + 4 * n);
    bytes.push(n as u8);
    for (a, b) in mat.edge_list() {
        bytes.push(a);
        bytes.push(b);
    }
    GraphCode { bytes }
}

/// State of the orderly enumeration: the partial edge list plus degree and
/// adjacency bookkeeping.
#[derive(Clone)]
struct EnumState {
    n: usize,
    mat: MultMat,
    deg: [u8; MAX_ORDER],
    edges: Vec<(u8, u8)>,
    used: usize,
}

impl EnumState {
    fn new(n: usize) -> EnumState {
        EnumState {
            n,
            mat: MultMat::new(n),
            deg: [0; MAX_ORDER],
            edges: Vec::with_capacity(2 * n),
            used: 0,
        }
    }

    fn push(&mut self, a: u8, b: u8) {
        self.mat.add(a as usize, b as usize);
        if a == b {
            self.deg[a as usize] += 2;
        } else {
            self.deg[a as usize] += 1;
            self.deg[b as usize] += 1;
        }
        self.edges.push((a, b));
        self.used = self.used.max(b as usize + 1);
    }

    fn pop(&mut self) {
        let (a, b) = self.edges.pop().unwrap();
        self.mat.remove(a as usize, b as usize);
        if a == b {
            self.deg[a as usize] -= 2;
        } else {
            self.deg[a as usize] -= 1;
            self.deg[b as usize] -= 1;
        }
        self.used = self
            .edges
            .iter()
            .map(|&(_, b)| b as usize + 1)
            .max()
            .unwrap_or(0);
    }

    /// Candidate next edges: nondecreasing lexicographic order, first
    /// endpoint forced to the first deficient vertex, new labels taken
    /// consecutively, degree caps respected.
    fn candidates(&self) -> Vec<(u8, u8)> {
        let last = self.edges.last().copied().unwrap_or((0, 0));
        let x = match (0..self.n).find(|&v| self.deg[v] < 4) {
            Some(x) => x,
            None => return Vec::new(),
        };
        if x < last.0 as usize {
            // A vertex before the current edge frontier is deficient and
            // can never be completed.
            return Vec::new();
        }
        let y_start = if x == last.0 as usize {
            last.1 as usize
        } else {
            x
        };
        let y_start = y_start.max(x);
        // One fresh label may be introduced per edge, in consecutive order.
        let y_max = if x < self.used {
            self.used.min(self.n - 1)
        } else {
            (x + 1).min(self.n - 1)
        };
        let mut out = Vec::new();
        for y in y_start..=y_max {
            if y == x {
                if self.deg[x] + 2 <= 4 {
                    out.push((x as u8, y as u8));
                }
            } else if self.deg[x] < 4 && self.deg[y] < 4 {
                out.push((x as u8, y as u8));
            }
        }
        out
    }

    /// After an edge saturates both endpoints, a finished component that
    /// does not contain every vertex can never be connected to the rest.
    fn frozen_component(&self, a: u8) -> bool {
        if self.deg[a as usize] != 4 {
            return false;
        }
        let mut seen = [false; MAX_ORDER];
        let mut stack = vec![a as usize];
        seen[a as usize] = true;
        let mut size = 0usize;
        while let Some(v) = stack.pop() {
            size += 1;
            if self.deg[v] != 4 {
                return false;
            }
            for w in 0..self.used {
                if w != v && self.mat.m[v][w] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        size < self.n
    }

    fn active_view(&self) -> MultMat {
        let mut m = self.mat.clone();
        m.v = self.used;
        m
    }
}

/// Enumerates connected 4-valent multigraphs on `n` vertices, one per
/// isomorphism class, sorted by canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Multigraph>, GraphError> {
    if n == 0 || n > MAX_ORDER {
        return Err(GraphError::Order { n });
    }
    // Split the tree a few levels down and explore branches in parallel;
    // branch prefixes are generated in lexicographic order, so the
    // concatenated output stays sorted.
    let split_depth = if n >= 5 { 3 } else { 0 };
    let mut prefixes = Vec::new();
    let mut state = EnumState::new(n);
    collect_prefixes(&mut state, split_depth, &mut prefixes);
    let graphs: Vec<Multigraph> = prefixes
        .into_par_iter()
        .map(|prefix| {
            let mut st = EnumState::new(n);
            for (a, b) in prefix {
                st.push(a, b);
            }
            let mut out = Vec::new();
            enumerate_rec(&mut st, &mut out);
            out
        })
        .flatten()
        .collect();
    Ok(graphs)
}

/// Collects all canonical partial edge lists of the given depth (or
/// complete graphs shorter than it, which are emitted by the walker).
fn collect_prefixes(state: &mut EnumState, depth: usize, out: &mut Vec<Vec<(u8, u8)>>) {
    if state.edges.len() == depth || state.edges.len() == 2 * state.n {
        out.push(state.edges.clone());
        return;
    }
    for (a, b) in state.candidates() {
        state.push(a, b);
        if is_canonical(&state.active_view()) && !state.frozen_component(a) {
            collect_prefixes(state, depth, out);
        }
        state.pop();
    }
}

fn enumerate_rec(state: &mut EnumState, out: &mut Vec<Multigraph>) {
    if state.edges.len() == 2 * state.n {
        if let Ok(g) = Multigraph::new(state.n, state.edges.clone()) {
            out.push(g);
        }
        return;
    }
    for (a, b) in state.candidates() {
        state.push(a, b);
        if is_canonical(&state.active_view()) && !state.frozen_component(a) {
            enumerate_rec(state, out);
        }
        state.pop();
    }
}

/// Renders a multigraph in the one-line text format
/// `<n>: <a>-<b> <a>-<b> ...` with edges normalized and sorted.
pub fn render_graph(g: &Multigraph) -> String {
    let mut s = format!("{}:", g.n);
    for &(a, b) in &g.edges {
        s.push_str(&format!(" {a}-{b}"));
    }
    s
}

/// Parses a single graph line. Accepts edges in any order and
/// orientation; the result is normalized.
pub fn parse_graph(text: &str) -> Result<Multigraph, GraphError> {
    let syntax = |msg: String| GraphError::Syntax { line: 0, msg };
    let (head, rest) = text
        .split_once(':')
        .ok_or_else(|| syntax("missing ':' after vertex count".into()))?;
    let n: usize = head
        .trim()
        .parse()
        .map_err(|_| syntax(format!("invalid vertex count {:?}", head.trim())))?;
    if n == 0 || n > MAX_ORDER {
        return Err(GraphError::Order { n });
    }
    let mut edges = Vec::new();
    for tok in rest.split_whitespace() {
        let (a, b) = tok
            .split_once('-')
            .ok_or_else(|| syntax(format!("invalid edge token {tok:?}")))?;
        let a: u8 = a
            .parse()
            .map_err(|_| syntax(format!("invalid vertex in edge {tok:?}")))?;
        let b: u8 = b
            .parse()
            .map_err(|_| syntax(format!("invalid vertex in edge {tok:?}")))?;
        if a as usize >= n || b as usize >= n {
            return Err(syntax(format!("edge {tok:?} out of range for order {n}")));
        }
        edges.push((a, b));
    }
    Multigraph::new(n, edges)
}

/// Error from parsing a graph file, carrying the offending line number.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {source}")]
pub struct GraphFileError {
    pub line: usize,
    pub source: GraphError,
}

/// Parses a graph file: one graph per line, blank lines and `#` comments
/// ignored, with an optional trailing `count <N>` line which is validated.
pub fn parse_graph_lines(text: &str) -> Result<Vec<Multigraph>, GraphFileError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if let Some(count) = t.strip_prefix("count ") {
            let expected: usize = count.trim().parse().map_err(|_| GraphFileError {
                line,
                source: GraphError::Syntax {
                    line,
                    msg: format!("invalid count trailer {t:?}"),
                },
            })?;
            if expected != out.len() {
                return Err(GraphFileError {
                    line,
                    source: GraphError::Syntax {
                        line,
                        msg: format!("count trailer says {expected}, file has {}", out.len()),
                    },
                });
            }
            continue;
        }
        let g = parse_graph(t).map_err(|source| GraphFileError { line, source })?;
        out.push(g);
    }
    Ok(out)
}

impl Multigraph {
    /// The canonical code, assuming `self` is already canonically labeled
    /// (true for everything produced by `enumerate_graphs`).
    pub fn code(&self) -> GraphCode {
        canonical_code(self)
    }
}
