//! Permutations of {0,1,2,3}, indexed 0..24 by lexicographic rank of the
//! image sequence.

/// All 24 permutations of {0,1,2,3} as image arrays, in lexicographic order.
/// `PERMS[0] = [0,1,2,3]` is the identity and `PERMS[23] = [3,2,1,0]`.
const PERMS: [[u8; 4]; 24] = build_perms();

const fn build_perms() -> [[u8; 4]; 24] {
    let mut out = [[0u8; 4]; 24];
    let mut idx = 0;
    let mut a = 0u8;
    while a < 4 {
        let mut b = 0u8;
        while b < 4 {
            let mut c = 0u8;
            while c < 4 {
                let mut d = 0u8;
                while d < 4 {
                    if a != b && a != c && a != d && b != c && b != d && c != d {
                        out[idx] = [a, b, c, d];
                        idx += 1;
                    }
                    d += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
}

/// A permutation of {0,1,2,3}: a vertex relabelling of one tetrahedron, or
/// the gluing map carrying the vertices of one tetrahedron to another.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4 {
    code: u8,
}

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4 { code: 0 };

    /// Permutation with the given lexicographic rank (0..24).
    pub fn from_code(code: u8) -> Perm4 {
        assert!(code < 24, "permutation code out of range: {code}");
        Perm4 { code }
    }

    /// Permutation sending `i` to `images[i]`.
    pub fn from_images(images: [u8; 4]) -> Perm4 {
        for code in 0..24 {
            if PERMS[code] == images {
                return Perm4 { code: code as u8 };
            }
        }
        panic!("not a permutation of 0..4: {images:?}");
    }

    pub fn code(self) -> u8 {
        self.code
    }

    pub fn images(self) -> [u8; 4] {
        PERMS[self.code as usize]
    }

    #[inline]
    pub fn apply(self, x: u8) -> u8 {
        PERMS[self.code as usize][x as usize]
    }

    /// Composition: `(self.compose(other)).apply(x) == self.apply(other.apply(x))`.
    pub fn compose(self, other: Perm4) -> Perm4 {
        let a = self.images();
        let b = other.images();
        Perm4::from_images([
            a[b[0] as usize],
            a[b[1] as usize],
            a[b[2] as usize],
            a[b[3] as usize],
        ])
    }

    pub fn inverse(self) -> Perm4 {
        let im = self.images();
        let mut inv = [0u8; 4];
        for i in 0..4u8 {
            inv[im[i as usize] as usize] = i;
        }
        Perm4::from_images(inv)
    }

    /// True for odd permutations (an odd number of transpositions).
    pub fn is_odd(self) -> bool {
        let im = self.images();
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if im[i] > im[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 1
    }

    /// The six permutations mapping `f` to `g`: the rotations and
    /// reflections by which face `f` of one tetrahedron may be identified
    /// with face `g` of another (faces are indexed by opposite vertex).
    pub fn face_gluings(f: u8, g: u8) -> impl Iterator<Item = Perm4> {
        (0..24u8)
            .map(Perm4::from_code)
            .filter(move |p| p.apply(f) == g)
    }
}

impl std::fmt::Debug for Perm4 {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let im = self.images();
        write!(fm, "Perm4({}{}{}{})", im[0], im[1], im[2], im[3])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_round_trip() {
        for code in 0..24 {
            let p = Perm4::from_code(code);
            assert_eq!(Perm4::from_images(p.images()), p);
            assert_eq!(p.code(), code);
        }
    }

    #[test]
    fn lexicographic_rank_convention() {
        assert_eq!(Perm4::from_code(0).images(), [0, 1, 2, 3]);
        assert_eq!(Perm4::from_code(1).images(), [0, 1, 3, 2]);
        assert_eq!(Perm4::from_code(23).images(), [3, 2, 1, 0]);
    }

    #[test]
    fn composition_is_associative_and_closed() {
        for a in 0..24 {
            let pa = Perm4::from_code(a);
            for b in 0..24 {
                let pb = Perm4::from_code(b);
                let ab = pa.compose(pb);
                for x in 0..4 {
                    assert_eq!(ab.apply(x), pa.apply(pb.apply(x)));
                }
                for c in 0..24 {
                    let pc = Perm4::from_code(c);
                    assert_eq!(pa.compose(pb).compose(pc), pa.compose(pb.compose(pc)));
                }
            }
        }
    }

    #[test]
    fn inverse_is_two_sided() {
        for code in 0..24 {
            let p = Perm4::from_code(code);
            assert_eq!(p.compose(p.inverse()), Perm4::IDENTITY);
            assert_eq!(p.inverse().compose(p), Perm4::IDENTITY);
        }
    }

    #[test]
    fn parity_is_a_homomorphism() {
        for a in 0..24 {
            for b in 0..24 {
                let pa = Perm4::from_code(a);
                let pb = Perm4::from_code(b);
                assert_eq!(
                    pa.compose(pb).is_odd(),
                    pa.is_odd() ^ pb.is_odd(),
                    "parity of composition must be the parity sum"
                );
            }
        }
    }

    #[test]
    fn six_gluings_per_face_pair() {
        for f in 0..4 {
            for g in 0..4 {
                let gluings: Vec<_> = Perm4::face_gluings(f, g).collect();
                assert_eq!(gluings.len(), 6);
                for p in gluings {
                    assert_eq!(p.apply(f), g);
                }
            }
        }
    }
}
