//! Triangulation references: exhaustive gluing enumeration, validity
//! derived from first principles (directed edge identifications and an
//! explicit link-surface complex), and isomorphism by trying every
//! relabeling.

use tetcensus::perm::Perm4;
use tetcensus::triangulation::{face_vertices, FacePairing, Triangulation};

/// Every completed gluing of a face pairing: all 6^(2n) combinations of
/// rotations and reflections, with no pruning at all.
pub fn all_gluings(pairing: &FacePairing) -> Vec<Triangulation> {
    let n = pairing.n();
    let pairs = pairing.pairs();
    let options: Vec<Vec<Perm4>> = pairs
        .iter()
        .map(|&(s1, s2)| {
            let f = (s1 % 4) as u8;
            let g = (s2 % 4) as u8;
            Perm4::face_gluings(f, g).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; pairs.len()];
    loop {
        let mut gluings: Vec<Option<(usize, Perm4)>> = vec![None; 4 * n];
        for (i, &(s1, s2)) in pairs.iter().enumerate() {
            let p = options[i][choice[i]];
            gluings[s1] = Some((s2, p));
            gluings[s2] = Some((s1, p.inverse()));
        }
        out.push(Triangulation::new(n, gluings).expect("complete assignment"));
        // Odometer.
        let mut i = 0;
        loop {
            if i == pairs.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < 6 {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn bfs_classes(n_items: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut label = vec![usize::MAX; n_items];
    for start in 0..n_items {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = start;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if label[w] == usize::MAX {
                    label[w] = start;
                    stack.push(w);
                }
            }
        }
    }
    label
}

/// Validity facts recomputed from first principles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub edge_reversed: bool,
    pub vertices: usize,
    pub edges: usize,
    pub links_orientable: bool,
    /// Euler characteristic of each vertex link, one entry per class.
    pub link_eulers: Vec<i64>,
    pub orientable: bool,
    pub is_3mfd: bool,
}

/// Classifies a completed gluing using only definitions: directed edge
/// slots for reversal detection, an explicit link-surface complex for
/// link orientability and Euler characteristics, and brute force over
/// tetrahedron orientations with the boundary-orientation rule.
pub fn classify(t: &Triangulation) -> OracleReport {
    let n = t.n();

    // Directed tetrahedron edges: slot (t, x -> y), x != y.
    let dir = |tt: usize, x: u8, y: u8| -> usize {
        let mut i = 0;
        for a in 0..4u8 {
            for b in 0..4u8 {
                if a != b {
                    if (a, b) == (x, y) {
                        return 12 * tt + i;
                    }
                    i += 1;
                }
            }
        }
        unreachable!()
    };
    let mut dir_adj: Vec<Vec<usize>> = vec![Vec::new(); 12 * n];
    for slot in 0..4 * n {
        let (partner, p) = t.gluing(slot);
        if partner < slot {
            continue;
        }
        let (tt, f) = (slot / 4, (slot % 4) as u8);
        let u = partner / 4;
        let fv = face_vertices(f);
        for &x in &fv {
            for &y in &fv {
                if x != y {
                    let a = dir(tt, x, y);
                    let b = dir(u, p.apply(x), p.apply(y));
                    dir_adj[a].push(b);
                    dir_adj[b].push(a);
                }
            }
        }
    }
    let dir_label = bfs_classes(12 * n, &dir_adj);
    let mut edge_reversed = false;
    for tt in 0..n {
        for x in 0..4u8 {
            for y in 0..4u8 {
                if x < y && dir_label[dir(tt, x, y)] == dir_label[dir(tt, y, x)] {
                    edge_reversed = true;
                }
            }
        }
    }
    // Undirected edge classes: additionally identify the two directions
    // of each tetrahedron edge.
    let mut edge_adj = dir_adj.clone();
    for tt in 0..n {
        for x in 0..4u8 {
            for y in 0..4u8 {
                if x < y {
                    let a = dir(tt, x, y);
                    let b = dir(tt, y, x);
                    edge_adj[a].push(b);
                    edge_adj[b].push(a);
                }
            }
        }
    }
    let edge_label = bfs_classes(12 * n, &edge_adj);
    let mut edge_reprs: Vec<usize> = edge_label.clone();
    edge_reprs.sort_unstable();
    edge_reprs.dedup();
    let edges = edge_reprs.len();

    // Link-surface complex. Triangles: corners (t, v). Sides: one per
    // (face gluing, corner on that face). Link corners: (t, v, w), w != v.
    let corner = |tt: usize, v: u8| 4 * tt + v as usize;
    let lcorner = |tt: usize, v: u8, w: u8| {
        let fv = face_vertices(v);
        let k = fv.iter().position(|&x| x == w).unwrap();
        12 * tt + 3 * v as usize + k
    };
    struct Side {
        ca: usize,
        cb: usize,
        wa: [u8; 2],
        wb: [u8; 2],
    }
    let mut tri_adj: Vec<Vec<usize>> = vec![Vec::new(); 4 * n];
    let mut lc_adj: Vec<Vec<usize>> = vec![Vec::new(); 12 * n];
    let mut sides = Vec::new();
    for slot in 0..4 * n {
        let (partner, p) = t.gluing(slot);
        if partner < slot {
            continue;
        }
        let (tt, f) = (slot / 4, (slot % 4) as u8);
        let u = partner / 4;
        for &v in &face_vertices(f) {
            let pv = p.apply(v);
            tri_adj[corner(tt, v)].push(corner(u, pv));
            tri_adj[corner(u, pv)].push(corner(tt, v));
            let ws: Vec<u8> = face_vertices(f)
                .iter()
                .copied()
                .filter(|&w| w != v)
                .collect();
            for &w in &ws {
                let a = lcorner(tt, v, w);
                let b = lcorner(u, pv, p.apply(w));
                lc_adj[a].push(b);
                lc_adj[b].push(a);
            }
            sides.push(Side {
                ca: corner(tt, v),
                cb: corner(u, pv),
                wa: [ws[0], ws[1]],
                wb: [p.apply(ws[0]), p.apply(ws[1])],
            });
        }
    }
    let corner_label = bfs_classes(4 * n, &tri_adj);
    let mut vertex_reprs: Vec<usize> = corner_label.clone();
    vertex_reprs.sort_unstable();
    vertex_reprs.dedup();
    let vertices = vertex_reprs.len();

    // Link orientability: orient each link triangle by the ascending
    // cyclic order of its corners and 2-color across sides. A side whose
    // induced directions agree under the identification forces opposite
    // triangle signs.
    let induced_forward = |v: u8, w0: u8, w1: u8| -> bool {
        let fv = face_vertices(v);
        let i0 = fv.iter().position(|&x| x == w0).unwrap();
        let i1 = fv.iter().position(|&x| x == w1).unwrap();
        (i0 + 1) % 3 == i1
    };
    let mut cons: Vec<Vec<(usize, bool)>> = vec![Vec::new(); 4 * n];
    for s in &sides {
        let va = (s.ca % 4) as u8;
        let vb = (s.cb % 4) as u8;
        let fa = induced_forward(va, s.wa[0], s.wa[1]);
        let fb = induced_forward(vb, s.wb[0], s.wb[1]);
        // fa == fb: the identification carries the induced direction of
        // one side onto the induced direction of the other.
        let opposite_signs = fa == fb;
        cons[s.ca].push((s.cb, opposite_signs));
        cons[s.cb].push((s.ca, opposite_signs));
    }
    let mut sign = vec![0i8; 4 * n];
    let mut links_orientable = true;
    for start in 0..4 * n {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for &(d, opp) in &cons[c] {
                let want = if opp { -sign[c] } else { sign[c] };
                if sign[d] == 0 {
                    sign[d] = want;
                    stack.push(d);
                } else if sign[d] != want {
                    links_orientable = false;
                }
            }
        }
    }

    // Euler characteristic per link: V - E + F.
    let lc_label = bfs_classes(12 * n, &lc_adj);
    let mut link_eulers = Vec::new();
    for &rep in &vertex_reprs {
        let faces = (0..4 * n).filter(|&c| corner_label[c] == rep).count() as i64;
        let mut lc_reprs: Vec<usize> = Vec::new();
        for tt in 0..n {
            for v in 0..4u8 {
                if corner_label[corner(tt, v)] == rep {
                    for &w in &face_vertices(v) {
                        lc_reprs.push(lc_label[lcorner(tt, v, w)]);
                    }
                }
            }
        }
        lc_reprs.sort_unstable();
        lc_reprs.dedup();
        let lverts = lc_reprs.len() as i64;
        let ledges = sides.iter().filter(|s| corner_label[s.ca] == rep).count() as i64;
        link_eulers.push(lverts - ledges + faces);
    }

    // Manifold orientability: brute force over tetrahedron signs with the
    // boundary-orientation compatibility rule. A gluing of face f of t to
    // face g of u via p, whose face-vertex rearrangement has sign tau,
    // is compatible iff s_t (-1)^f tau = -s_u (-1)^g.
    let mut orientable = false;
    'outer: for bits in 0..(1u32 << n) {
        let s = |tt: usize| if bits & (1 << tt) != 0 { 1i32 } else { -1 };
        for slot in 0..4 * n {
            let (partner, p) = t.gluing(slot);
            if partner < slot {
                continue;
            }
            let (tt, f) = (slot / 4, (slot % 4) as u8);
            let (u, g) = (partner / 4, (partner % 4) as u8);
            let fv = face_vertices(f);
            let gv = face_vertices(g);
            let mut positions = [0usize; 3];
            for i in 0..3 {
                positions[i] = gv.iter().position(|&d| d == p.apply(fv[i])).unwrap();
            }
            let mut inversions = 0;
            for i in 0..3 {
                for j in i + 1..3 {
                    if positions[i] > positions[j] {
                        inversions += 1;
                    }
                }
            }
            let tau = if inversions % 2 == 0 { 1i32 } else { -1 };
            let sf = if f % 2 == 0 { 1i32 } else { -1 };
            let sg = if g % 2 == 0 { 1i32 } else { -1 };
            if s(tt) * sf * tau != -s(u) * sg {
                continue 'outer;
            }
        }
        orientable = true;
        break;
    }

    let is_3mfd = !edge_reversed && link_eulers.iter().all(|&e| e == 2);
    OracleReport {
        edge_reversed,
        vertices,
        edges,
        links_orientable,
        link_eulers,
        orientable,
        is_3mfd,
    }
}

/// Isomorphism by brute force: every assignment of tetrahedra and every
/// vertex relabeling per tetrahedron.
pub fn isomorphic(a: &Triangulation, b: &Triangulation) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let n = a.n();
    let mut tet_map: Vec<usize> = (0..n).collect();
    try_tet_maps(a, b, &mut tet_map, 0)
}

fn try_tet_maps(a: &Triangulation, b: &Triangulation, tet_map: &mut Vec<usize>, k: usize) -> bool {
    let n = a.n();
    if k == n {
        let mut rhos = vec![Perm4::IDENTITY; n];
        return try_vertex_maps(a, b, tet_map, &mut rhos, 0);
    }
    for i in k..n {
        tet_map.swap(k, i);
        if try_tet_maps(a, b, tet_map, k + 1) {
            tet_map.swap(k, i);
            return true;
        }
        tet_map.swap(k, i);
    }
    false
}

fn try_vertex_maps(
    a: &Triangulation,
    b: &Triangulation,
    tet_map: &[usize],
    rhos: &mut Vec<Perm4>,
    k: usize,
) -> bool {
    let n = a.n();
    if k == n {
        return gluings_match(a, b, tet_map, rhos);
    }
    for code in 0..24 {
        rhos[k] = Perm4::from_code(code);
        if try_vertex_maps(a, b, tet_map, rhos, k + 1) {
            return true;
        }
    }
    false
}

fn gluings_match(a: &Triangulation, b: &Triangulation, tet_map: &[usize], rhos: &[Perm4]) -> bool {
    let n = a.n();
    for tt in 0..n {
        for f in 0..4u8 {
            let (partner, p) = a.gluing(4 * tt + f as usize);
            let (u, g) = (partner / 4, (partner % 4) as u8);
            let bt = tet_map[tt];
            let bf = rhos[tt].apply(f);
            let (bpartner, bp) = b.gluing(4 * bt + bf as usize);
            let want_partner = 4 * tet_map[u] + rhos[u].apply(g) as usize;
            let want_p = rhos[u].compose(p).compose(rhos[tt].inverse());
            if bpartner != want_partner || bp != want_p {
                return false;
            }
        }
    }
    true
}

/// One representative per isomorphism class, by pairwise brute force.
/// Candidates are pre-bucketed by isomorphism-invariant facts (vertex and
/// edge counts, orientability, sorted link Euler characteristics) so the
/// quadratic scan only runs within a bucket.
pub fn iso_classes(tris: Vec<Triangulation>) -> Vec<Triangulation> {
    let mut buckets: Vec<(OracleKey, Vec<Triangulation>)> = Vec::new();
    for t in tris {
        let key = OracleKey::of(&t);
        match buckets.iter_mut().find(|(k, _)| *k == key) {
            Some((_, b)) => b.push(t),
            None => buckets.push((key, vec![t])),
        }
    }
    let mut reps: Vec<Triangulation> = Vec::new();
    for (_, bucket) in buckets {
        let mut local: Vec<Triangulation> = Vec::new();
        for t in bucket {
            if !local.iter().any(|r| isomorphic(r, &t)) {
                local.push(t);
            }
        }
        reps.extend(local);
    }
    reps
}

#[derive(PartialEq, Eq)]
struct OracleKey {
    vertices: usize,
    edges: usize,
    orientable: bool,
    eulers: Vec<i64>,
    edge_degrees: Vec<usize>,
}

impl OracleKey {
    fn of(t: &Triangulation) -> OracleKey {
        let r = classify(t);
        let mut eulers = r.link_eulers.clone();
        eulers.sort_unstable();
        OracleKey {
            vertices: r.vertices,
            edges: r.edges,
            orientable: r.orientable,
            eulers,
            edge_degrees: edge_degree_profile(t),
        }
    }
}

/// Sorted multiset of edge class degrees, another relabeling invariant.
fn edge_degree_profile(t: &Triangulation) -> Vec<usize> {
    let n = t.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 6 * n];
    let eix = |x: u8, y: u8| -> usize {
        let (x, y) = (x.min(y), x.max(y));
        match (x, y) {
            (0, 1) => 0,
            (0, 2) => 1,
            (0, 3) => 2,
            (1, 2) => 3,
            (1, 3) => 4,
            _ => 5,
        }
    };
    for slot in 0..4 * n {
        let (partner, p) = t.gluing(slot);
        if partner < slot {
            continue;
        }
        let (tt, f) = (slot / 4, (slot % 4) as u8);
        let u = partner / 4;
        let fv = face_vertices(f);
        for i in 0..3 {
            for j in i + 1..3 {
                let a = 6 * tt + eix(fv[i], fv[j]);
                let b = 6 * u + eix(p.apply(fv[i]), p.apply(fv[j]));
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    let label = bfs_classes(6 * n, &adj);
    let mut degs: Vec<usize> = {
        let mut reprs: Vec<usize> = label.clone();
        reprs.sort_unstable();
        reprs.dedup();
        reprs
            .iter()
            .map(|&r| label.iter().filter(|&&l| l == r).count())
            .collect()
    };
    degs.sort_unstable();
    degs
}
