//! Unoriented crossing graphs.
//!
//! A [`PortGraph`] is a set of crossings, each with four slots in
//! counterclockwise order (slots 0 and 2 on the under-strand), and a perfect
//! matching of slots along edges. Orientation and edge numbering are only
//! assigned when converting back to a [`Diagram`].

use super::{Diagram, Edge};
use crate::error::{Error, Result};

const UNLINKED: usize = usize::MAX;

#[derive(Debug, Clone, Default)]
pub(crate) struct PortGraph {
    link: Vec<usize>,
    /// Preferred outgoing slots used to orient components.
    starts: Vec<usize>,
}

impl PortGraph {
    pub fn with_crossings(n: usize) -> Self {
        PortGraph { link: vec![UNLINKED; 4 * n], starts: vec![] }
    }

    pub fn slot_count(&self) -> usize {
        self.link.len()
    }

    /// Adds a crossing and returns the index of its slot 0.
    pub fn add_crossing(&mut self) -> usize {
        let base = self.link.len();
        self.link.extend([UNLINKED; 4]);
        base
    }

    pub fn partner(&self, slot: usize) -> usize {
        self.link[slot]
    }

    pub fn link(&mut self, a: usize, b: usize) {
        self.link[a] = b;
        self.link[b] = a;
    }

    pub fn append(&mut self, other: &PortGraph) {
        let shift = self.link.len();
        self.link.extend(other.link.iter().map(|&s| if s == UNLINKED { s } else { s + shift }));
        self.starts.extend(other.starts.iter().map(|&s| s + shift));
    }

    /// Returns the graph and, for every edge label, the slot it leaves from.
    pub fn from_diagram(d: &Diagram) -> (PortGraph, Vec<usize>) {
        let mut g = PortGraph::with_crossings(d.crossing_count());
        let mut out_slot = vec![UNLINKED; d.edge_count() as usize + 1];
        let mut in_slot = vec![UNLINKED; d.edge_count() as usize + 1];
        for (x, c) in d.crossings().iter().enumerate() {
            let e = c.edges();
            let over_in = c.over_in_slot();
            let over_out = (over_in + 2) % 4;
            in_slot[e[0] as usize] = 4 * x;
            out_slot[e[2] as usize] = 4 * x + 2;
            in_slot[e[over_in] as usize] = 4 * x + over_in;
            out_slot[e[over_out] as usize] = 4 * x + over_out;
        }
        for e in 1..=d.edge_count() as usize {
            g.link(out_slot[e], in_slot[e]);
        }
        g.starts = d.component_edges().iter().map(|c| out_slot[c[0] as usize]).collect();
        (g, out_slot)
    }

    /// Braid closure; see [`Diagram::from_braid`].
    pub fn from_braid(strands: usize, word: &[i32]) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Braid("no strands".into()));
        }
        let mut g = PortGraph::with_crossings(0);
        // bottom slot of the first crossing on each position, and current top
        let mut first = vec![UNLINKED; strands];
        let mut top = vec![UNLINKED; strands];
        let attach = |g: &mut PortGraph, pos: usize, bottom: usize, first: &mut [usize], top: &[usize]| {
            if top[pos] == UNLINKED {
                first[pos] = bottom;
            } else {
                g.link(top[pos], bottom);
            }
        };
        for &gen in word {
            let k = gen.unsigned_abs() as usize;
            if gen == 0 || k >= strands {
                return Err(Error::Braid(format!("generator {gen} on {strands} strands")));
            }
            let (l, r) = (k - 1, k);
            let x = g.add_crossing();
            // slot layout, counterclockwise from the incoming under end
            let (sw, se, ne, nw) = if gen > 0 { (x + 3, x, x + 1, x + 2) } else { (x, x + 1, x + 2, x + 3) };
            attach(&mut g, l, sw, &mut first, &top);
            attach(&mut g, r, se, &mut first, &top);
            top[l] = nw;
            top[r] = ne;
            g.starts.push(x + 2);
            g.starts.push(if gen > 0 { ne } else { nw });
        }
        for pos in 0..strands {
            if first[pos] == UNLINKED {
                return Err(Error::Braid(format!("strand {} has no crossing", pos + 1)));
            }
            g.link(top[pos], first[pos]);
        }
        Ok(g)
    }

    pub fn to_diagram(&self) -> Result<Diagram> {
        self.to_diagram_from(&self.starts).map(|(d, _)| d)
    }

    /// Orients and numbers the graph. Components are traversed starting from the
    /// given outgoing slots (in order, skipping slots already visited), then from
    /// the lowest unvisited slot. Returns the diagram and the edge label at every
    /// slot.
    pub fn to_diagram_from(&self, starts: &[usize]) -> Result<(Diagram, Vec<Edge>)> {
        let n = self.slot_count();
        if n == 0 {
            return Ok((Diagram::unknot(), vec![]));
        }
        if let Some(s) = self.link.iter().position(|&l| l == UNLINKED) {
            return Err(Error::Braid(format!("slot {s} is not linked")));
        }
        let mut label = vec![0 as Edge; n];
        let mut incoming = vec![false; n];
        let mut next: Edge = 1;
        let fallback = 0..n;
        for start in starts.iter().copied().chain(fallback) {
            if label[start] != 0 {
                continue;
            }
            let mut out = start;
            loop {
                let inn = self.link[out];
                if label[out] != 0 || label[inn] != 0 {
                    return Err(Error::Orientation { edge: next });
                }
                label[out] = next;
                label[inn] = next;
                incoming[inn] = true;
                next += 1;
                out = inn - inn % 4 + (inn % 4 + 2) % 4;
                if out == start {
                    break;
                }
            }
        }
        let mut tuples = Vec::with_capacity(n / 4);
        let mut signs = Vec::with_capacity(n / 4);
        for x in 0..n / 4 {
            let u = if incoming[4 * x] { 0 } else { 2 };
            tuples.push([0, 1, 2, 3].map(|k| label[4 * x + (u + k) % 4]));
            // over-strand enters at tuple position 3 (d) for a positive crossing
            let d_slot = 4 * x + (u + 3) % 4;
            signs.push(if incoming[d_slot] { 1 } else { -1 });
        }
        let d = Diagram::from_oriented(&tuples, &signs, 1)?;
        Ok((d, label))
    }
}
