//! Core types for gluings of tetrahedra: face pairings realizing a
//! multigraph, the edge and corner identifications a gluing induces,
//! validity of completed gluings, and relabeling-invariant signatures.
//!
//! Conventions, fixed once and used everywhere: face `f` of a tetrahedron
//! is the face opposite vertex `f`; tetrahedron edges are canonically
//! oriented from the lower vertex to the higher; face slot `(t, f)` is
//! packed as `4t + f`, edge slot `(t, e)` as `6t + e`, corner slot
//! `(t, v)` as `4t + v`.

use crate::multigraph::Multigraph;
use crate::perm::Perm4;
use thiserror::Error;

/// The six tetrahedron edges in index order.
pub const EDGE_VERTS: [(u8, u8); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Edge index of the pair {a, b}, a != b.
pub fn edge_index(a: u8, b: u8) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => unreachable!("bad edge {a},{b}"),
    }
}

/// The three vertices of face `f` (everything except `f`), ascending.
pub fn face_vertices(f: u8) -> [u8; 3] {
    let mut out = [0u8; 3];
    let mut i = 0;
    for v in 0..4u8 {
        if v != f {
            out[i] = v;
            i += 1;
        }
    }
    out
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TriError {
    #[error("{0}")]
    Syntax(String),
    #[error("slot {slot} is unglued; triangulation is not closed")]
    Incomplete { slot: usize },
    #[error("gluing of slot {slot} is not involutive with its partner")]
    NotInvolutive { slot: usize },
    #[error("gluing permutation of slot {slot} does not carry its face to the partner face")]
    WrongFace { slot: usize },
}

/// A concrete matching of the `4n` tetrahedron faces realizing a
/// multigraph: `partner` is a fixed-point-free involution on face slots,
/// and `pair_order` lists the `2n` unordered slot pairs in the order the
/// search glues them (the canonical edge order of the source graph).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePairing {
    n: usize,
    partner: Vec<usize>,
    pair_order: Vec<(usize, usize)>,
}

impl FacePairing {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, slot: usize) -> usize {
        self.partner[slot]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pair_order
    }

    /// Recomputes the multigraph this pairing realizes: one edge per slot
    /// pair, between the two tetrahedra it joins.
    pub fn quotient_graph(&self) -> Multigraph {
        let edges = self
            .pair_order
            .iter()
            .map(|&(a, b)| {
                let (ta, tb) = ((a / 4) as u8, (b / 4) as u8);
                (ta.min(tb), ta.max(tb))
            })
            .collect();
        Multigraph::new(self.n, edges).expect("pairing quotient is a valid multigraph")
    }
}

/// Realizes a multigraph as a face pairing: graph edges are taken in
/// canonical order and each consumes the lowest unused face index at each
/// endpoint (a loop consumes the two lowest of one tetrahedron).
pub fn realize_pairing(g: &Multigraph) -> FacePairing {
    let n = g.order();
    let mut next_face = vec![0u8; n];
    let mut take = |t: usize| {
        let f = next_face[t];
        debug_assert!(f < 4, "tetrahedron {t} has no free face");
        next_face[t] = f + 1;
        4 * t + f as usize
    };
    let mut partner = vec![usize::MAX; 4 * n];
    let mut pair_order = Vec::with_capacity(2 * n);
    for &(a, b) in g.edges() {
        let s1 = take(a as usize);
        let s2 = take(b as usize);
        partner[s1] = s2;
        partner[s2] = s1;
        pair_order.push((s1.min(s2), s1.max(s2)));
    }
    FacePairing {
        n,
        partner,
        pair_order,
    }
}

/// One induced identification between two edge slots (`6t + e` indices);
/// `reversed` means the low-to-high orientations disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeIdent {
    pub a: usize,
    pub b: usize,
    pub reversed: bool,
}

/// One induced identification between two corner slots (`4t + v`);
/// `reversed` means the link triangles are identified so that consistent
/// surface orientation forces them onto the same side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerIdent {
    pub a: usize,
    pub b: usize,
    pub reversed: bool,
}

/// The three edge identifications introduced by gluing face `f` of
/// tetrahedron `t` to face `g` of `u` via `p` (which must map `f` to `g`).
pub fn induced_edge_identifications(t: usize, f: u8, u: usize, p: Perm4) -> [EdgeIdent; 3] {
    debug_assert_ne!(t * 4 + f as usize, u * 4 + p.apply(f) as usize);
    let fv = face_vertices(f);
    let mut out = [EdgeIdent {
        a: 0,
        b: 0,
        reversed: false,
    }; 3];
    for (i, &(x, y)) in [(fv[0], fv[1]), (fv[0], fv[2]), (fv[1], fv[2])]
        .iter()
        .enumerate()
    {
        let (px, py) = (p.apply(x), p.apply(y));
        out[i] = EdgeIdent {
            a: 6 * t + edge_index(x, y),
            b: 6 * u + edge_index(px, py),
            // x < y by construction, so orientations disagree iff p flips.
            reversed: px > py,
        };
    }
    out
}

/// Parity of the 3-element map sending the ascending non-`v` vertices to
/// their images under `p`, read against the ascending non-`p(v)` order.
fn link_map_is_odd(v: u8, p: Perm4) -> bool {
    let src = face_vertices(v);
    let dst = face_vertices(p.apply(v));
    let mut positions = [0usize; 3];
    for i in 0..3 {
        let img = p.apply(src[i]);
        positions[i] = dst.iter().position(|&d| d == img).unwrap();
    }
    let mut inversions = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if positions[i] > positions[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// The three corner identifications introduced by gluing face `f` of `t`
/// to `p(f)` of `u`. The `reversed` flag is the parity convention under
/// which a redundant conflicting union means a non-orientable vertex link:
/// an even induced map on the three remaining vertices glues the two link
/// triangles along a side with matching induced directions, forcing them
/// onto opposite sides of any consistent surface orientation.
pub fn induced_vertex_identifications(t: usize, f: u8, u: usize, p: Perm4) -> [CornerIdent; 3] {
    let fv = face_vertices(f);
    let mut out = [CornerIdent {
        a: 0,
        b: 0,
        reversed: false,
    }; 3];
    for (i, &v) in fv.iter().enumerate() {
        out[i] = CornerIdent {
            a: 4 * t + v as usize,
            b: 4 * u + p.apply(v) as usize,
            reversed: !link_map_is_odd(v, p),
        };
    }
    out
}

/// A completed closed gluing: every face slot glued, gluings mutually
/// inverse across each pair, every permutation carrying its face to the
/// partner's face. The constructor enforces all of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    n: usize,
    glue: Vec<(usize, Perm4)>,
}

impl Triangulation {
    pub fn new(n: usize, gluings: Vec<Option<(usize, Perm4)>>) -> Result<Triangulation, TriError> {
        assert_eq!(gluings.len(), 4 * n);
        let mut glue = Vec::with_capacity(4 * n);
        for (slot, entry) in gluings.iter().enumerate() {
            let (partner, p) = entry.ok_or(TriError::Incomplete { slot })?;
            let f = (slot % 4) as u8;
            let g = (partner % 4) as u8;
            if partner / 4 != {
                let (q, _) = entry.unwrap();
                q / 4
            } {
                unreachable!()
            }
            if p.apply(f) != g || partner == slot {
                return Err(TriError::WrongFace { slot });
            }
            let (back, q) = gluings[partner].ok_or(TriError::Incomplete { slot: partner })?;
            if back != slot || q != p.inverse() {
                return Err(TriError::NotInvolutive { slot });
            }
            glue.push((partner, p));
        }
        Ok(Triangulation { n, glue })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partner slot and gluing permutation for a face slot.
    pub fn gluing(&self, slot: usize) -> (usize, Perm4) {
        self.glue[slot]
    }
}

/// Validity report for a completed gluing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedReport {
    /// No edge identified with itself in reverse, all vertex links closed
    /// and orientable, and Euler characteristic V - E + n = 0 (which
    /// forces every link to be a sphere).
    pub is_3mfd: bool,
    pub vertices: usize,
    pub edges: usize,
    /// Whether tetrahedra admit a consistent orientation: signs s with
    /// s(t)·s(u) = -sign(p) across every gluing.
    pub orientable: bool,
}

/// Whether every vertex link admits a consistent orientation, judged by
/// parity tracking over the induced corner identifications.
pub fn vertex_links_orientable(t: &Triangulation) -> bool {
    let n = t.n;
    let mut corner_adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); 4 * n];
    for slot in 0..4 * n {
        let (partner, p) = t.glue[slot];
        if partner < slot {
            continue;
        }
        let (tt, f) = (slot / 4, (slot % 4) as u8);
        let u = partner / 4;
        for id in induced_vertex_identifications(tt, f, u, p) {
            corner_adj[id.a].push((id.b, id.reversed));
            corner_adj[id.b].push((id.a, id.reversed));
        }
    }
    let mut corner_class = vec![usize::MAX; 4 * n];
    let mut corner_parity = vec![false; 4 * n];
    let mut ok = true;
    for start in 0..4 * n {
        if corner_class[start] != usize::MAX {
            continue;
        }
        corner_class[start] = start;
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for &(c2, rev) in &corner_adj[c] {
                let want = corner_parity[c] ^ rev;
                if corner_class[c2] == usize::MAX {
                    corner_class[c2] = start;
                    corner_parity[c2] = want;
                    stack.push(c2);
                } else if corner_parity[c2] != want {
                    ok = false;
                }
            }
        }
    }
    ok
}

/// Rebuilds all equivalence classes from scratch (independently of the
/// incremental structures used by the search) and reports validity.
pub fn validate_closed(t: &Triangulation) -> ClosedReport {
    let n = t.n;
    // Edge classes with orientations.
    let mut edge_class = vec![usize::MAX; 6 * n];
    let mut edge_parity = vec![false; 6 * n];
    let mut edge_adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); 6 * n];
    let mut corner_adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); 4 * n];
    for slot in 0..4 * n {
        let (partner, p) = t.glue[slot];
        if partner < slot {
            continue;
        }
        let (tt, f) = (slot / 4, (slot % 4) as u8);
        let u = partner / 4;
        for id in induced_edge_identifications(tt, f, u, p) {
            edge_adj[id.a].push((id.b, id.reversed));
            edge_adj[id.b].push((id.a, id.reversed));
        }
        for id in induced_vertex_identifications(tt, f, u, p) {
            corner_adj[id.a].push((id.b, id.reversed));
            corner_adj[id.b].push((id.a, id.reversed));
        }
    }
    let mut edges = 0;
    let mut edge_reversed = false;
    for start in 0..6 * n {
        if edge_class[start] != usize::MAX {
            continue;
        }
        edges += 1;
        edge_class[start] = start;
        edge_parity[start] = false;
        let mut stack = vec![start];
        while let Some(e) = stack.pop() {
            for &(e2, rev) in &edge_adj[e] {
                let want = edge_parity[e] ^ rev;
                if edge_class[e2] == usize::MAX {
                    edge_class[e2] = start;
                    edge_parity[e2] = want;
                    stack.push(e2);
                } else if edge_parity[e2] != want {
                    edge_reversed = true;
                }
            }
        }
    }
    // Vertex classes with link orientations.
    let mut corner_class = vec![usize::MAX; 4 * n];
    let mut corner_parity = vec![false; 4 * n];
    let mut vertices = 0;
    let mut links_orientable = true;
    for start in 0..4 * n {
        if corner_class[start] != usize::MAX {
            continue;
        }
        vertices += 1;
        corner_class[start] = start;
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for &(c2, rev) in &corner_adj[c] {
                let want = corner_parity[c] ^ rev;
                if corner_class[c2] == usize::MAX {
                    corner_class[c2] = start;
                    corner_parity[c2] = want;
                    stack.push(c2);
                } else if corner_parity[c2] != want {
                    links_orientable = false;
                }
            }
        }
    }
    // Overall orientability via tetrahedron signs.
    let mut sign = vec![0i8; n];
    let mut orientable = true;
    for start in 0..n {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut stack = vec![start];
        while let Some(tt) = stack.pop() {
            for f in 0..4 {
                let (partner, p) = t.glue[4 * tt + f];
                let u = partner / 4;
                let want = if p.is_odd() { sign[tt] } else { -sign[tt] };
                if sign[u] == 0 {
                    sign[u] = want;
                    stack.push(u);
                } else if sign[u] != want {
                    orientable = false;
                }
            }
        }
    }
    let euler_zero = vertices as i64 - edges as i64 + n as i64 == 0;
    ClosedReport {
        is_3mfd: !edge_reversed && links_orientable && euler_zero,
        vertices,
        edges,
        orientable,
    }
}

/// Relabeling-invariant canonical encoding of a closed triangulation,
/// rendered in lowercase base-36. Equal exactly for combinatorially
/// isomorphic triangulations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoSignature(String);

impl IsoSignature {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Debug for IsoSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IsoSignature({})", self.0)
    }
}

impl std::fmt::Display for IsoSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

const BASE36: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// Canonical signature: the lexicographically least encoding of the
/// gluing table over all choices of starting tetrahedron and starting
/// vertex labeling, with labels propagated breadth-first across gluings.
pub fn iso_signature(t: &Triangulation) -> IsoSignature {
    let n = t.n;
    let mut best: Option<Vec<u8>> = None;
    for start in 0..n {
        for code in 0..24 {
            let enc = encode_from(t, start, Perm4::from_code(code));
            if best.as_ref().map_or(true, |b| enc < *b) {
                best = Some(enc);
            }
        }
    }
    let bytes = best.unwrap();
    let mut s = String::with_capacity(bytes.len());
    for b in bytes {
        s.push(BASE36[b as usize] as char);
    }
    IsoSignature(s)
}

/// Encodes the gluing table after relabeling so that `start` becomes
/// tetrahedron 0 with vertex relabeling `rho0`, and every later
/// tetrahedron is labeled on first visit so its discovery gluing becomes
/// the identity permutation.
fn encode_from(t: &Triangulation, start: usize, rho0: Perm4) -> Vec<u8> {
    let n = t.n;
    let mut new_of_old = vec![usize::MAX; n];
    let mut old_of_new = vec![usize::MAX; n];
    let mut rho = vec![Perm4::IDENTITY; n];
    new_of_old[start] = 0;
    old_of_new[0] = start;
    rho[start] = rho0;
    let mut assigned = 1;
    let mut out = Vec::with_capacity(1 + 8 * n);
    out.push(n as u8);
    let mut new_t = 0;
    while new_t < assigned {
        let old_t = old_of_new[new_t];
        for new_f in 0..4u8 {
            let old_f = rho[old_t].inverse().apply(new_f);
            let (partner, p) = t.glue[4 * old_t + old_f as usize];
            let old_u = partner / 4;
            if new_of_old[old_u] == usize::MAX {
                new_of_old[old_u] = assigned;
                old_of_new[assigned] = old_u;
                // Choose the partner's relabeling so this gluing reads as
                // the identity in final labels.
                rho[old_u] = rho[old_t].compose(p.inverse());
                assigned += 1;
            }
            let final_perm = rho[old_u].compose(p).compose(rho[old_t].inverse());
            out.push(new_of_old[old_u] as u8);
            out.push(final_perm.code());
        }
        new_t += 1;
    }
    debug_assert_eq!(assigned, n, "gluing graph is connected");
    out
}

/// Renders a triangulation in the one-line text format
/// `n | t0f0:u,g,p t0f1:... | t1f0:... ...` (slots in order, one group
/// of four per tetrahedron).
pub fn render_triangulation(t: &Triangulation) -> String {
    let mut parts = Vec::with_capacity(t.n);
    for tt in 0..t.n {
        let mut toks = Vec::with_capacity(4);
        for f in 0..4 {
            let (partner, p) = t.glue[4 * tt + f];
            toks.push(format!(
                "t{}f{}:{},{},{}",
                tt,
                f,
                partner / 4,
                partner % 4,
                p.code()
            ));
        }
        parts.push(toks.join(" "));
    }
    format!("{} | {}", t.n, parts.join(" | "))
}

/// Parses the text format, rejecting non-involutive or
/// non-face-preserving data.
pub fn parse_triangulation(text: &str) -> Result<Triangulation, TriError> {
    let err = |msg: String| TriError::Syntax(msg);
    let mut sections = text.split('|').map(str::trim);
    let n: usize = sections
        .next()
        .ok_or_else(|| err("empty input".into()))?
        .parse()
        .map_err(|_| err("invalid tetrahedron count".into()))?;
    let mut gluings: Vec<Option<(usize, Perm4)>> = vec![None; 4 * n];
    let mut seen_tets = 0;
    for (tt, section) in sections.enumerate() {
        seen_tets += 1;
        let toks: Vec<&str> = section.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(err(format!("tetrahedron {tt}: expected 4 slots")));
        }
        for (f, tok) in toks.iter().enumerate() {
            let want = format!("t{tt}f{f}:");
            let rest = tok
                .strip_prefix(&want)
                .ok_or_else(|| err(format!("expected token {want}..., found {tok:?}")))?;
            let nums: Vec<&str> = rest.split(',').collect();
            if nums.len() != 3 {
                return Err(err(format!("slot t{tt}f{f}: expected u,g,p")));
            }
            let u: usize = nums[0]
                .parse()
                .map_err(|_| err(format!("slot t{tt}f{f}: bad tetrahedron")))?;
            let g: usize = nums[1]
                .parse()
                .map_err(|_| err(format!("slot t{tt}f{f}: bad face")))?;
            let pcode: u8 = nums[2]
                .parse()
                .map_err(|_| err(format!("slot t{tt}f{f}: bad permutation")))?;
            if u >= n || g >= 4 || pcode >= 24 {
                return Err(err(format!("slot t{tt}f{f}: value out of range")));
            }
            gluings[4 * tt + f] = Some((4 * u + g, Perm4::from_code(pcode)));
        }
    }
    if seen_tets != n {
        return Err(err(format!("expected {n} tetrahedra, found {seen_tets}")));
    }
    Triangulation::new(n, gluings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{enumerate_graphs, parse_graph};

    #[test]
    fn realize_double_loop() {
        let g = parse_graph("1: 0-0 0-0").unwrap();
        let fp = realize_pairing(&g);
        assert_eq!(fp.pairs(), &[(0, 1), (2, 3)]);
        assert_eq!(fp.partner(0), 1);
        assert_eq!(fp.partner(2), 3);
    }

    #[test]
    fn realize_quadruple_edge() {
        let g = parse_graph("2: 0-1 0-1 0-1 0-1").unwrap();
        let fp = realize_pairing(&g);
        let pairs: Vec<_> = (0..4).map(|f| (f, 4 + f)).collect();
        assert_eq!(fp.pairs(), &pairs[..]);
    }

    #[test]
    fn quotient_recovers_source_graph() {
        for n in 1..=6 {
            for g in enumerate_graphs(n).unwrap() {
                let fp = realize_pairing(&g);
                let q = fp.quotient_graph();
                assert_eq!(
                    crate::multigraph::canonical_code(&q),
                    crate::multigraph::canonical_code(&g)
                );
            }
        }
    }

    #[test]
    fn order_preserving_gluing_has_no_reversals() {
        // Perm [0,1,2,3] restricted to any face preserves ascending order.
        for f in 0..4u8 {
            let ids = induced_edge_identifications(0, f, 1, Perm4::IDENTITY);
            assert!(ids.iter().all(|id| !id.reversed));
        }
    }

    #[test]
    fn transposition_reverses_exactly_the_joining_edge() {
        // Gluing face 3 of tet 0 to face 3 of tet 1 with p swapping 0 and 1:
        // the edge {0,1} maps to itself with order flipped; the other two
        // face edges keep ascending order.
        let p = Perm4::from_images([1, 0, 2, 3]);
        let ids = induced_edge_identifications(0, 3, 1, p);
        let rev_count = ids.iter().filter(|id| id.reversed).count();
        assert_eq!(rev_count, 1);
        let flipped = ids.iter().find(|id| id.reversed).unwrap();
        assert_eq!(flipped.a, edge_index(0, 1));
        assert_eq!(flipped.b, 6 + edge_index(0, 1));
    }

    #[test]
    fn full_reversal_reverses_all_three() {
        // p = [2,1,0,3] on face 3: 0->2, 1->1, 2->0 reverses every edge
        // of the face... check each edge individually instead.
        let p = Perm4::from_images([2, 1, 0, 3]);
        let ids = induced_edge_identifications(0, 3, 1, p);
        // {0,1}->{2,1} reversed, {0,2}->{2,0} reversed, {1,2}->{1,0} reversed.
        assert!(ids.iter().all(|id| id.reversed));
    }

    #[test]
    fn signature_stable_under_relabeling() {
        // Two-tetrahedron triangulation: glue all four faces of tet 0 to
        // tet 1 by the identity (the double of a tetrahedron, a 3-sphere).
        let mut gluings = vec![None; 8];
        for f in 0..4 {
            gluings[f] = Some((4 + f, Perm4::IDENTITY));
            gluings[4 + f] = Some((f, Perm4::IDENTITY));
        }
        let t = Triangulation::new(2, gluings).unwrap();
        let sig = iso_signature(&t);
        // Relabel: swap the two tetrahedra and scramble vertex labels.
        let rho = Perm4::from_images([2, 0, 3, 1]);
        let mut relabeled = vec![None; 8];
        for tt in 0..2usize {
            for f in 0..4u8 {
                let (partner, p) = t.gluing(4 * tt + f as usize);
                let (u, g) = (partner / 4, (partner % 4) as u8);
                let nt = 1 - tt;
                let nu = 1 - u;
                let nf = rho.apply(f);
                let ng = rho.apply(g);
                let np = rho.compose(p).compose(rho.inverse());
                relabeled[4 * nt + nf as usize] = Some((4 * nu + ng as usize, np));
            }
        }
        let t2 = Triangulation::new(2, relabeled).unwrap();
        assert_eq!(iso_signature(&t2), sig);
    }

    #[test]
    fn sphere_double_is_a_valid_orientable_manifold() {
        let mut gluings = vec![None; 8];
        for f in 0..4 {
            gluings[f] = Some((4 + f, Perm4::IDENTITY));
            gluings[4 + f] = Some((f, Perm4::IDENTITY));
        }
        let t = Triangulation::new(2, gluings).unwrap();
        let report = validate_closed(&t);
        assert!(report.is_3mfd);
        assert!(report.orientable);
        assert_eq!(report.vertices, 4);
        assert_eq!(report.edges, 6);
    }

    #[test]
    fn text_round_trip_and_rejections() {
        let mut gluings = vec![None; 8];
        for f in 0..4 {
            gluings[f] = Some((4 + f, Perm4::IDENTITY));
            gluings[4 + f] = Some((f, Perm4::IDENTITY));
        }
        let t = Triangulation::new(2, gluings).unwrap();
        let text = render_triangulation(&t);
        let back = parse_triangulation(&text).unwrap();
        assert_eq!(back, t);
        // Perm code 1 = [0,1,3,2] maps face 0 to face 0 but its partner
        // entry claims the identity: not involutive.
        let bad = "2 | t0f0:1,0,1 t0f1:1,1,0 t0f2:1,2,0 t0f3:1,3,0 | t1f0:0,0,0 t1f1:0,1,0 t1f2:0,2,0 t1f3:0,3,0";
        assert!(parse_triangulation(bad).is_err());
        let wrong_face = "1 | t0f0:0,1,0 t0f1:0,0,0 t0f2:0,3,5 t0f3:0,2,5";
        assert!(parse_triangulation(wrong_face).is_err());
    }

    #[test]
    fn incomplete_rejected() {
        let gluings = vec![None; 4];
        assert!(matches!(
            Triangulation::new(1, gluings),
            Err(TriError::Incomplete { .. })
        ));
    }
}
