//! Planar diagram codes.
//!
//! A crossing `X(a,b,c,d)` lists its four edges counterclockwise, starting
//! from the incoming under-strand: `a` enters under, `c` leaves under, and the
//! over-strand runs between `b` and `d`. A crossing is positive when the
//! over-strand enters at `d` (for consecutively numbered knots, `b = d+1`).
//!
//! The unknot with no crossings is written `U`.

mod parse;
pub(crate) mod planar;

use std::fmt;

use crate::error::{Error, Result};
use planar::PortGraph;

pub use parse::parse_pd;

/// Edge label, `1..=edge_count`.
pub type Edge = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Crossing {
    edges: [Edge; 4],
    sign: i8,
}

impl Crossing {
    pub fn edges(&self) -> [Edge; 4] {
        self.edges
    }

    /// +1 or -1.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_positive(&self) -> bool {
        self.sign > 0
    }

    /// Slot (0..4) where the over-strand enters.
    pub fn over_in_slot(&self) -> usize {
        if self.sign > 0 {
            3
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    edge_count: u32,
    basepoint: Edge,
    components: usize,
}

impl Diagram {
    /// The crossingless unknot. It has a single edge (the whole circle), which is
    /// also the basepoint.
    pub fn unknot() -> Self {
        Diagram { crossings: vec![], edge_count: 1, basepoint: 1, components: 1 }
    }

    /// Builds and validates a diagram from crossing tuples. The basepoint defaults
    /// to edge 1.
    pub fn from_tuples(tuples: &[[Edge; 4]], basepoint: Option<Edge>) -> Result<Self> {
        if tuples.is_empty() {
            return match basepoint {
                None | Some(1) => Ok(Self::unknot()),
                Some(e) => Err(Error::Basepoint { edge: e }),
            };
        }
        let edge_count = validate_edges(tuples)?;
        let basepoint = basepoint.unwrap_or(1);
        if basepoint == 0 || basepoint > edge_count {
            return Err(Error::Basepoint { edge: basepoint });
        }
        let over_in_d = orient(tuples, edge_count)?;
        let crossings = tuples
            .iter()
            .zip(&over_in_d)
            .map(|(t, &d_in)| Crossing { edges: *t, sign: if d_in { 1 } else { -1 } })
            .collect::<Vec<_>>();
        let mut d = Diagram { crossings, edge_count, basepoint, components: 0 };
        d.components = d.component_edges().len();
        Ok(d)
    }

    /// Builds a diagram whose orientation is already known (one sign per crossing).
    pub(crate) fn from_oriented(tuples: &[[Edge; 4]], signs: &[i8], basepoint: Edge) -> Result<Self> {
        let edge_count = validate_edges(tuples)?;
        if basepoint == 0 || basepoint > edge_count {
            return Err(Error::Basepoint { edge: basepoint });
        }
        let crossings = tuples.iter().zip(signs).map(|(t, &sign)| Crossing { edges: *t, sign }).collect();
        let mut d = Diagram { crossings, edge_count, basepoint, components: 0 };
        d.components = d.component_edges().len();
        Ok(d)
    }

    /// Closure of a braid on `strands` strands. Generator `k > 0` is the positive
    /// crossing between positions `k` and `k+1` (strands oriented upward); `-k` is
    /// its inverse.
    pub fn from_braid(strands: usize, word: &[i32]) -> Result<Self> {
        PortGraph::from_braid(strands, word)?.to_diagram()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> u32 {
        self.edge_count
    }

    pub fn basepoint(&self) -> Edge {
        self.basepoint
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    pub fn is_crossingless(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn tuples(&self) -> Vec<[Edge; 4]> {
        self.crossings.iter().map(|x| x.edges).collect()
    }

    /// Same crossings, different basepoint edge.
    pub fn with_basepoint(&self, edge: Edge) -> Result<Self> {
        if edge == 0 || edge > self.edge_count {
            return Err(Error::Basepoint { edge });
        }
        Ok(Diagram { basepoint: edge, ..self.clone() })
    }

    /// Number of positive and negative crossings.
    pub fn signed_counts(&self) -> (usize, usize) {
        let pos = self.crossings.iter().filter(|x| x.sign > 0).count();
        (pos, self.crossings.len() - pos)
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign as i64).sum()
    }

    /// Swaps over and under at every crossing.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.edges;
                let edges = if x.sign > 0 { [d, a, b, c] } else { [b, c, d, a] };
                Crossing { edges, sign: -x.sign }
            })
            .collect();
        Diagram { crossings, ..self.clone() }
    }

    /// Reverses the orientation of a knot. Edges are renumbered along the new
    /// orientation starting from edge 1, so reversing twice restores a
    /// consecutively numbered diagram exactly.
    pub fn reverse(&self) -> Result<Self> {
        self.require_knot()?;
        if self.is_crossingless() {
            return Ok(self.clone());
        }
        let succ = self.successors();
        let mut pred = vec![0; succ.len()];
        for (e, &s) in succ.iter().enumerate().skip(1) {
            pred[s as usize] = e as Edge;
        }
        let mut relabel = vec![0; succ.len()];
        let mut e = 1;
        for k in 1..=self.edge_count {
            relabel[e as usize] = k;
            e = pred[e as usize];
        }
        let tuples: Vec<_> = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.edges.map(|e| relabel[e as usize]);
                [c, d, a, b]
            })
            .collect();
        Diagram::from_tuples(&tuples, Some(relabel[self.basepoint as usize]))
    }

    /// Band sum of two knots at their basepoint edges. The result keeps the first
    /// diagram's basepoint.
    pub fn connected_sum(&self, other: &Diagram) -> Result<Self> {
        self.require_knot()?;
        other.require_knot()?;
        if other.is_crossingless() {
            return Ok(self.clone());
        }
        if self.is_crossingless() {
            return Ok(other.clone());
        }
        let (mut g1, out1) = PortGraph::from_diagram(self);
        let (g2, out2) = PortGraph::from_diagram(other);
        let shift = g1.slot_count();
        g1.append(&g2);
        let p = out1[self.basepoint as usize];
        let q = g1.partner(p);
        let r = out2[other.basepoint as usize] + shift;
        let s = g1.partner(r);
        g1.link(p, s);
        g1.link(r, q);
        let start = if self.basepoint == 1 { p } else { out1[1] };
        let (d, labels) = g1.to_diagram_from(&[start])?;
        d.with_basepoint(labels[p])
    }

    pub(crate) fn require_knot(&self) -> Result<()> {
        if self.components != 1 {
            return Err(Error::MultiComponent { components: self.components });
        }
        Ok(())
    }

    /// `succ[e]` is the edge following `e` along the orientation. Index 0 unused.
    pub fn successors(&self) -> Vec<Edge> {
        let mut succ = vec![0; self.edge_count as usize + 1];
        if self.is_crossingless() {
            succ[1] = 1;
            return succ;
        }
        for x in &self.crossings {
            let [a, b, c, d] = x.edges;
            succ[a as usize] = c;
            if x.sign > 0 {
                succ[d as usize] = b;
            } else {
                succ[b as usize] = d;
            }
        }
        succ
    }

    /// Edges of each component, in orientation order. Components are listed by
    /// their smallest edge.
    pub fn component_edges(&self) -> Vec<Vec<Edge>> {
        let succ = self.successors();
        let mut seen = vec![false; succ.len()];
        let mut out = vec![];
        for start in 1..=self.edge_count {
            if seen[start as usize] {
                continue;
            }
            let mut comp = vec![];
            let mut e = start;
            while !seen[e as usize] {
                seen[e as usize] = true;
                comp.push(e);
                e = succ[e as usize];
            }
            out.push(comp);
        }
        out
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_crossingless() {
            return write!(f, "U");
        }
        write!(f, "PD[")?;
        for (i, x) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let [a, b, c, d] = x.edges;
            write!(f, "X({a},{b},{c},{d})")?;
        }
        write!(f, "] base={}", self.basepoint)
    }
}

impl std::str::FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pd(s)
    }
}

/// Checks that labels are exactly `1..=max`, each used twice. Returns `max`.
fn validate_edges(tuples: &[[Edge; 4]]) -> Result<u32> {
    let max = tuples.iter().flatten().copied().max().unwrap_or(0);
    let mut count = vec![0usize; max as usize + 1];
    for &e in tuples.iter().flatten() {
        if e == 0 {
            return Err(Error::EdgeMultiplicity { edge: 0, count: 1 });
        }
        count[e as usize] += 1;
    }
    if let Some(e) = (1..=max).find(|&e| count[e as usize] != 2) {
        return Err(Error::EdgeMultiplicity { edge: e, count: count[e as usize] });
    }
    Ok(max)
}

/// Decides, for every crossing, whether the over-strand enters at `d`.
///
/// Slot `a` is always incoming and `c` outgoing; each edge must have exactly one
/// incoming and one outgoing end. The constraints are propagated from the under
/// strands. Components that pass only over (possible in links) are oriented by
/// their numbering.
fn orient(tuples: &[[Edge; 4]], edge_count: u32) -> Result<Vec<bool>> {
    // occurrences of each edge as (crossing, slot)
    let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::with_capacity(2); edge_count as usize + 1];
    for (x, t) in tuples.iter().enumerate() {
        for (s, &e) in t.iter().enumerate() {
            occ[e as usize].push((x, s));
        }
    }
    let n = tuples.len();
    let mut var: Vec<Option<bool>> = vec![None; n];

    // incoming status of a slot under a (partial) assignment
    let is_in = |var: &[Option<bool>], x: usize, s: usize| -> Option<bool> {
        match s {
            0 => Some(true),
            2 => Some(false),
            1 => var[x].map(|v| !v),
            _ => var[x],
        }
    };

    let mut queue: Vec<usize> = vec![];
    let assign = |var: &mut Vec<Option<bool>>, x: usize, v: bool, e: Edge, queue: &mut Vec<usize>| -> Result<()> {
        match var[x] {
            Some(old) if old != v => Err(Error::Orientation { edge: e }),
            Some(_) => Ok(()),
            None => {
                var[x] = Some(v);
                queue.push(x);
                Ok(())
            }
        }
    };

    // edges touching an under-slot fix the other end
    for e in 1..=edge_count {
        let [(x, s), (y, t)] = [occ[e as usize][0], occ[e as usize][1]];
        let (ix, iy) = (is_in(&var, x, s), is_in(&var, y, t));
        match (ix, iy) {
            (Some(p), Some(q)) if p == q => return Err(Error::Orientation { edge: e }),
            (Some(p), None) => assign(&mut var, y, want(t, !p), e, &mut queue)?,
            (None, Some(q)) => assign(&mut var, x, want(s, !q), e, &mut queue)?,
            _ => {}
        }
    }

    let mut next_free = 0;
    loop {
        while let Some(x) = queue.pop() {
            for s in [1usize, 3] {
                let e = tuples[x][s];
                for &(y, t) in &occ[e as usize] {
                    if (y, t) == (x, s) {
                        continue;
                    }
                    let p = is_in(&var, x, s).expect("assigned");
                    match is_in(&var, y, t) {
                        Some(q) if q == p => return Err(Error::Orientation { edge: e }),
                        Some(_) => {}
                        None => assign(&mut var, y, want(t, !p), e, &mut queue)?,
                    }
                }
            }
        }
        while next_free < n && var[next_free].is_some() {
            next_free += 1;
        }
        if next_free == n {
            break;
        }
        // over-only component: follow the numbering
        let [_, b, _, d] = tuples[next_free];
        let d_in = b == d % edge_count + 1;
        assign(&mut var, next_free, d_in, d, &mut queue)?;
    }
    Ok(var.into_iter().map(|v| v.expect("all assigned")).collect())
}

/// Value of the crossing variable (over enters at `d`) that makes slot `s`
/// incoming (`incoming = true`) or outgoing.
fn want(s: usize, incoming: bool) -> bool {
    match s {
        1 => !incoming,
        3 => incoming,
        _ => unreachable!("under slots are fixed"),
    }
}
