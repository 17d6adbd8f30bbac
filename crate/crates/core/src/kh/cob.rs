//! Dotted cobordisms between crossingless matchings, over GF(2).
//!
//! Local relations: a sphere is 0, a dotted sphere is 1, two dots on one
//! component vanish, a handle vanishes, and a neck may be cut into two dotted
//! caps. Under these, every cobordism between matchings `M` and `N` is a sum
//! of disjoint unions of disks, one disk per circle of `M ∪ N`, each disk
//! dotted or not. A basis element is therefore a bitmask of dotted circles.

use std::fmt;

pub(crate) type Mask = u64;

/// Crossingless matching of boundary positions: `m[p]` is the partner of `p`.
pub(crate) type Matching = Vec<u8>;

/// A GF(2) combination of dotted-disk configurations.
#[derive(Clone, Default, PartialEq, Eq)]
pub(crate) struct Mor {
    terms: Vec<Mask>,
}

impl Mor {
    pub fn identity() -> Self {
        Mor { terms: vec![0] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.terms == [0]
    }

    pub fn terms(&self) -> &[Mask] {
        &self.terms
    }

    pub fn coefficient(&self, mask: Mask) -> bool {
        self.terms.binary_search(&mask).is_ok()
    }

    pub fn toggle(&mut self, mask: Mask) {
        match self.terms.binary_search(&mask) {
            Ok(i) => {
                self.terms.remove(i);
            }
            Err(i) => self.terms.insert(i, mask),
        }
    }

    pub fn add_assign(&mut self, other: &Mor) {
        for &t in &other.terms {
            self.toggle(t);
        }
    }
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mor{:?}", self.terms)
    }
}

/// Circles of `a ∪ b`: the circle index of every position, and the count.
/// Circles are numbered by their smallest position.
pub(crate) fn circles(a: &[u8], b: &[u8]) -> (Vec<u8>, usize) {
    debug_assert_eq!(a.len(), b.len());
    let mut of = vec![u8::MAX; a.len()];
    let mut count = 0;
    for p in 0..a.len() {
        if of[p] != u8::MAX {
            continue;
        }
        let mut cur = p;
        loop {
            of[cur] = count as u8;
            let q = a[cur] as usize;
            of[q] = count as u8;
            cur = b[q] as usize;
            if cur == p {
                break;
            }
        }
        count += 1;
    }
    (of, count)
}

/// Disks glued into a surface, before evaluation.
pub(crate) struct ShapeBuilder {
    parent: Vec<usize>,
    chi: Vec<i32>,
}

impl ShapeBuilder {
    pub fn new(pieces: usize) -> Self {
        ShapeBuilder { parent: (0..pieces).collect(), chi: vec![1; pieces] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Glues two pieces along a boundary interval.
    pub fn glue(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb] = ra;
            self.chi[ra] += self.chi[rb];
        }
        self.chi[ra] -= 1;
    }

    /// Caps a boundary circle lying on `piece` with a disk.
    pub fn cap(&mut self, piece: usize) {
        let r = self.find(piece);
        self.chi[r] += 1;
    }

    /// `circle_piece[k]` is a piece containing remaining boundary circle `k`.
    pub fn finish(mut self, circle_piece: &[usize]) -> Shape {
        let n = self.parent.len();
        let mut comp_index = vec![usize::MAX; n];
        let mut comps: Vec<Comp> = vec![];
        let mut comp_of_piece = vec![0u8; n];
        for p in 0..n {
            let r = self.find(p);
            if comp_index[r] == usize::MAX {
                comp_index[r] = comps.len();
                comps.push(Comp { chi: self.chi[r], circles: 0 });
            }
            comp_of_piece[p] = comp_index[r] as u8;
        }
        for (k, &p) in circle_piece.iter().enumerate() {
            comps[comp_of_piece[p] as usize].circles |= 1 << k;
        }
        Shape { comp_of_piece, comps }
    }
}

#[derive(Debug, Clone, Copy)]
struct Comp {
    chi: i32,
    circles: Mask,
}

pub(crate) struct Shape {
    comp_of_piece: Vec<u8>,
    comps: Vec<Comp>,
}

impl Shape {
    pub fn comp_count(&self) -> usize {
        self.comps.len()
    }

    pub fn comp_of(&self, piece: usize) -> usize {
        self.comp_of_piece[piece] as usize
    }

    /// Adds to `out` the reduced form of this surface carrying `dots[c]` dots
    /// on component `c`.
    pub fn evaluate(&self, dots: &[u8], out: &mut Mor) {
        let mut acc: Vec<Mask> = vec![0];
        for (c, comp) in self.comps.iter().enumerate() {
            let b = comp.circles.count_ones() as i32;
            let twice_genus = 2 - comp.chi - b;
            debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0, "bad surface {comp:?}");
            if twice_genus != 0 {
                return;
            }
            match (b, dots[c]) {
                (0, 1) => {}
                (0, _) => return,
                (_, 0) => {
                    // neck-cutting: every circle but one gets a dot
                    let mut next = Vec::with_capacity(acc.len() * b as usize);
                    let mut rest = comp.circles;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        rest ^= bit;
                        next.extend(acc.iter().map(|a| a | (comp.circles & !bit)));
                    }
                    acc = next;
                }
                (_, 1) => acc.iter_mut().for_each(|a| *a |= comp.circles),
                _ => return,
            }
        }
        for a in acc {
            out.toggle(a);
        }
    }
}

/// `gamma ∘ delta` for `delta: C -> K` and `gamma: K -> D`.
#[cfg(test)]
pub(crate) fn compose(mc: &[u8], mk: &[u8], md: &[u8], delta: &Mor, gamma: &Mor) -> Mor {
    Composer::new(mc, mk, md).apply(delta, gamma)
}

/// The surface obtained by stacking cobordisms `C -> K` and `K -> D`, reusable
/// for every pair of morphisms between the same three matchings.
pub(crate) struct Composer {
    lower: usize,
    shape: Shape,
}

impl Composer {
    pub fn new(mc: &[u8], mk: &[u8], md: &[u8]) -> Self {
        let (dc, nd) = circles(mc, mk);
        let (gc, ng) = circles(mk, md);
        let mut b = ShapeBuilder::new(nd + ng);
        for p in 0..mk.len() {
            if p < mk[p] as usize {
                b.glue(dc[p] as usize, nd + gc[p] as usize);
            }
        }
        let (nc, n_new) = circles(mc, md);
        let mut circle_piece = vec![usize::MAX; n_new];
        for p in 0..mc.len() {
            let k = nc[p] as usize;
            if circle_piece[k] == usize::MAX {
                circle_piece[k] = dc[p] as usize;
            }
        }
        Composer { lower: nd, shape: b.finish(&circle_piece) }
    }

    pub fn apply(&self, delta: &Mor, gamma: &Mor) -> Mor {
        let shape = &self.shape;
        let mut out = Mor::default();
        let mut dots = vec![0u8; shape.comp_count()];
        for &x in delta.terms() {
            for &y in gamma.terms() {
                dots.iter_mut().for_each(|d| *d = 0);
                for_bits(x, |k| dots[shape.comp_of(k)] += 1);
                for_bits(y, |k| dots[shape.comp_of(self.lower + k)] += 1);
                shape.evaluate(&dots, &mut out);
            }
        }
        out
    }
}

#[inline]
pub(crate) fn for_bits(mut m: Mask, mut f: impl FnMut(usize)) {
    while m != 0 {
        f(m.trailing_zeros() as usize);
        m &= m - 1;
    }
}
