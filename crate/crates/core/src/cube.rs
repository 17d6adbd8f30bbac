//! The cube of resolutions.
//!
//! A state is a bit-word over the crossings. Bit 0 at `X(a,b,c,d)` joins `a-b`
//! and `c-d`; bit 1 joins `a-d` and `b-c`. Circles are identified by their
//! smallest edge label.

use crate::error::{Error, Result};
use crate::pd::{Diagram, Edge};

/// Crossing `k` is bit `k` (least significant first).
pub type Bits = u64;

/// Largest crossing count for which states fit in [`Bits`].
pub const MAX_CUBE_CROSSINGS: usize = 63;

/// Slot joined to `slot` by the given smoothing.
#[inline]
pub(crate) fn smoothing_partner(slot: usize, one: bool) -> usize {
    if one {
        3 - slot
    } else {
        slot ^ 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionState {
    bits: Bits,
    len: usize,
    /// Each circle's edges in traversal order, starting from its smallest edge.
    circles: Vec<Vec<Edge>>,
    /// Index into `circles` for every edge label (index 0 unused).
    circle_of_edge: Vec<usize>,
}

impl ResolutionState {
    pub fn bits(&self) -> Bits {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bit(&self, k: usize) -> bool {
        self.bits >> k & 1 == 1
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn circles(&self) -> &[Vec<Edge>] {
        &self.circles
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    /// Key (smallest edge) of the circle through `edge`.
    pub fn circle_key(&self, edge: Edge) -> Edge {
        self.circles[self.circle_of_edge[edge as usize]][0]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitionKind {
    /// Two circles (keys) fuse into one.
    Merge { a: Edge, b: Edge, into: Edge },
    /// One circle splits into two.
    Split { from: Edge, a: Edge, b: Edge },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeTransition {
    pub from_state: Bits,
    pub flipped_crossing: usize,
    pub kind: TransitionKind,
}

impl EdgeTransition {
    pub fn to_state(&self) -> Bits {
        self.from_state | 1 << self.flipped_crossing
    }
}

/// Resolves every crossing of `d` according to `bits` (given as a word of
/// length equal to the crossing count).
pub fn resolve(d: &Diagram, bits: &[bool]) -> Result<ResolutionState> {
    if bits.len() != d.crossing_count() {
        return Err(Error::StateLength { expected: d.crossing_count(), got: bits.len() });
    }
    let word = bits.iter().enumerate().fold(0, |w, (k, &b)| w | (b as Bits) << k);
    resolve_bits(d, word)
}

/// As [`resolve`], with the state packed into an integer.
pub fn resolve_bits(d: &Diagram, bits: Bits) -> Result<ResolutionState> {
    let len = d.crossing_count();
    if len > MAX_CUBE_CROSSINGS {
        return Err(Error::TooLarge(format!("{len} crossings exceed the cube limit")));
    }
    if d.is_crossingless() {
        return Ok(ResolutionState { bits: 0, len: 0, circles: vec![vec![1]], circle_of_edge: vec![0, 0] });
    }
    let n = d.edge_count() as usize;
    let tuples = d.tuples();
    let occ = occurrences(d);
    let mut circle_of_edge = vec![usize::MAX; n + 1];
    let mut circles = vec![];
    for e0 in 1..=n {
        if circle_of_edge[e0] != usize::MAX {
            continue;
        }
        let id = circles.len();
        let mut circle = vec![];
        // leave e0 through its first occurrence and walk until we re-enter it
        let (mut edge, mut exit) = (e0, occ[e0][0]);
        loop {
            circle_of_edge[edge] = id;
            circle.push(edge as Edge);
            let (x, s) = exit;
            let s2 = smoothing_partner(s, bits >> x & 1 == 1);
            let next = tuples[x][s2] as usize;
            let entered = if occ[next][0] == (x, s2) { 0 } else { 1 };
            if next == e0 && entered == 1 {
                break;
            }
            edge = next;
            exit = occ[next][1 - entered];
        }
        circles.push(circle);
    }
    Ok(ResolutionState { bits, len, circles, circle_of_edge })
}

/// The cube edge from `state` flipping crossing `k` from 0 to 1.
pub fn transition(d: &Diagram, state: &ResolutionState, k: usize) -> Result<EdgeTransition> {
    if k >= d.crossing_count() {
        return Err(Error::CrossingIndex { crossing: k });
    }
    if state.bit(k) {
        return Err(Error::BitAlreadySet { crossing: k });
    }
    let target = resolve_bits(d, state.bits | 1 << k)?;
    let [a, b, c, _] = d.crossings()[k].edges();
    let kind = match target.circle_count() as i64 - state.circle_count() as i64 {
        -1 => TransitionKind::Merge { a: state.circle_key(a), b: state.circle_key(c), into: target.circle_key(a) },
        1 => TransitionKind::Split { from: state.circle_key(a), a: target.circle_key(a), b: target.circle_key(b) },
        delta => return Err(Error::NonPlanar { crossing: k, delta }),
    };
    Ok(EdgeTransition { from_state: state.bits, flipped_crossing: k, kind })
}

/// `(crossing, slot)` of both occurrences of every edge.
pub(crate) fn occurrences(d: &Diagram) -> Vec<[(usize, usize); 2]> {
    let mut occ = vec![[(usize::MAX, 0); 2]; d.edge_count() as usize + 1];
    for (x, c) in d.crossings().iter().enumerate() {
        for (s, &e) in c.edges().iter().enumerate() {
            let o = &mut occ[e as usize];
            if o[0].0 == usize::MAX {
                o[0] = (x, s);
            } else {
                o[1] = (x, s);
            }
        }
    }
    occ
}

/// Union-find circle labelling used by the engine. Returns the circle index of
/// every edge and the number of circles; circles are numbered by smallest edge.
#[derive(Debug, Clone)]
pub(crate) struct CircleFinder {
    /// For each crossing, its four edges (0-based).
    tuples: Vec<[u32; 4]>,
    parent: Vec<u32>,
}

impl CircleFinder {
    pub fn new(d: &Diagram) -> Self {
        let tuples = d.tuples().iter().map(|t| t.map(|e| e - 1)).collect();
        CircleFinder { tuples, parent: vec![0; d.edge_count() as usize] }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so that roots are circle minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }

    /// Writes the circle index (by smallest edge) of edge `e` into `out[e - 1]`.
    pub fn label(&mut self, bits: Bits, out: &mut Vec<u8>) -> usize {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        for k in 0..self.tuples.len() {
            let [a, b, c, d] = self.tuples[k];
            if bits >> k & 1 == 0 {
                self.union(a, b);
                self.union(c, d);
            } else {
                self.union(a, d);
                self.union(b, c);
            }
        }
        out.clear();
        let mut count = 0;
        for e in 0..self.parent.len() as u32 {
            let r = self.find(e);
            if r == e {
                out.push(count as u8);
                count += 1;
            } else {
                out.push(out[r as usize]);
            }
        }
        count
    }
}

/// All `2^c` states in reflected Gray-code order.
pub fn gray_states(crossings: usize) -> impl Iterator<Item = Bits> {
    (0..1u64 << crossings).map(|i| i ^ (i >> 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::parse_pd;

    fn trefoil() -> Diagram {
        parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]").unwrap()
    }

    #[test]
    fn trefoil_extreme_states() {
        let d = trefoil();
        let s0 = resolve(&d, &[false, false, false]).unwrap();
        assert_eq!(s0.circle_count(), 3);
        assert_eq!(s0.circles(), &[vec![1, 4], vec![2, 5], vec![3, 6]]);
        let s1 = resolve(&d, &[true, true, true]).unwrap();
        assert_eq!(s1.circle_count(), 2);
        assert_eq!(s1.weight(), 3);
    }

    #[test]
    fn unknot_single_circle() {
        let s = resolve(&Diagram::unknot(), &[]).unwrap();
        assert_eq!(s.circle_count(), 1);
        assert_eq!(s.circle_key(1), 1);
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(
            resolve(&trefoil(), &[true]).unwrap_err(),
            Error::StateLength { expected: 3, got: 1 }
        );
    }

    #[test]
    fn trefoil_transitions() {
        let d = trefoil();
        let s = resolve_bits(&d, 0b000).unwrap();
        let t = transition(&d, &s, 0).unwrap();
        assert!(matches!(t.kind, TransitionKind::Merge { a: 1, b: 2, into: 1 }), "{t:?}");
        assert_eq!(t.to_state(), 0b001);
        let s = resolve_bits(&d, 0b011).unwrap();
        assert_eq!(s.circle_count(), 1);
        let t = transition(&d, &s, 2).unwrap();
        assert!(matches!(t.kind, TransitionKind::Split { from: 1, .. }), "{t:?}");
        assert_eq!(transition(&d, &s, 1).unwrap_err(), Error::BitAlreadySet { crossing: 1 });
    }

    #[test]
    fn union_find_matches_tracing() {
        let d = parse_pd("PD[X(1,6,2,7),X(3,8,4,9),X(5,10,6,1),X(7,2,8,3),X(9,4,10,5)]").unwrap();
        let mut finder = CircleFinder::new(&d);
        let mut labels = vec![];
        for bits in gray_states(d.crossing_count()) {
            let n = finder.label(bits, &mut labels);
            let s = resolve_bits(&d, bits).unwrap();
            assert_eq!(n, s.circle_count());
            for e in 1..=d.edge_count() {
                assert_eq!(labels[e as usize - 1] as usize, s.circle_of_edge[e as usize]);
            }
        }
    }

    #[test]
    fn gray_order_covers_cube() {
        let mut v: Vec<_> = gray_states(5).collect();
        assert!(v.windows(2).all(|w| (w[0] ^ w[1]).count_ones() == 1));
        v.sort();
        assert_eq!(v, (0..32).collect::<Vec<_>>());
    }
}
