//! Twisted satellite diagrams.
//!
//! The pattern lives in a band along the companion: the companion is doubled
//! along its blackboard framing, `-writhe` full twists are added to reach the
//! Seifert framing, and the band is closed off by a clasp region of `n`
//! vertical half twists joining its two ends.
//!
//! Layout, for reproducible numbering: companion crossing `x` becomes crossings
//! `4x..4x+4` (left-bottom, right-bottom, left-top, right-top, with the
//! companion's under strand vertical); the framing twists follow, then the
//! clasp crossings from top to bottom. Both regions sit on the companion's
//! basepoint edge. Edges are numbered by traversal from slot 0 of the first
//! crossing.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::pd::planar::PortGraph;
use crate::pd::Diagram;

/// The pattern `K_n`: `n = 0` is the unknot, `n = ±1` the `(2, ±1)`-cable and
/// `n = ±2` the untwisted Whitehead double with a positive (negative) clasp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternSpec {
    pub n: i32,
}

/// Full twists added to the doubled band so that it carries the Seifert framing.
pub fn framing_twists(companion: &Diagram) -> i64 {
    -companion.writhe()
}

/// Crossing count of `build_satellite(companion, p)`.
pub fn satellite_crossings(companion: &Diagram, p: PatternSpec) -> usize {
    4 * companion.crossing_count() + 2 * companion.writhe().unsigned_abs() as usize + p.n.unsigned_abs() as usize
}

/// Slots `(sw, se, ne, nw)` of a crossing whose under strand runs SW-NE or
/// NW-SE.
fn corners(g: &mut PortGraph, under_sw_ne: bool) -> [usize; 4] {
    let x = g.add_crossing();
    if under_sw_ne {
        [x, x + 1, x + 2, x + 3]
    } else {
        [x + 1, x + 2, x + 3, x]
    }
}

pub fn build_satellite(companion: &Diagram, p: PatternSpec) -> Result<Diagram> {
    companion.require_knot()?;
    let mut g = PortGraph::with_crossings(4 * companion.crossing_count());
    // strand ends around the band cut: (bottom, top) on each side, or None
    // when the band closes on itself without crossings
    let (left, right) = if companion.is_crossingless() {
        (None, None)
    } else {
        let (cg, out_slot) = PortGraph::from_diagram(companion);
        // the two strand ends at side `s` of companion crossing `x`, counterclockwise
        let port = |slot: usize, i: usize| -> usize {
            let (x, s) = (slot / 4, slot % 4);
            let [lb, rb, lt, rt] = [0, 1, 2, 3].map(|k| 4 * (4 * x + k));
            match (s, i) {
                (0, 0) => lb,
                (0, 1) => rb,
                (1, 0) => rb + 1,
                (1, 1) => rt + 1,
                (2, 0) => rt + 2,
                (2, 1) => lt + 2,
                (3, 0) => lt + 3,
                _ => lb + 3,
            }
        };
        for x in 0..companion.crossing_count() {
            let [lb, rb, lt, rt] = [0, 1, 2, 3].map(|k| 4 * (4 * x + k));
            g.link(lb + 2, lt);
            g.link(rb + 2, rt);
            g.link(rb + 3, lb + 1);
            g.link(rt + 3, lt + 1);
        }
        let cut = out_slot[companion.basepoint() as usize];
        for &a in &out_slot[1..=companion.edge_count() as usize] {
            let b = cg.partner(a);
            if a != cut {
                g.link(port(a, 0), port(b, 1));
                g.link(port(a, 1), port(b, 0));
            }
        }
        let b = cg.partner(cut);
        (Some([port(cut, 0), port(cut, 1)]), Some([port(b, 1), port(b, 0)]))
    };

    let twists = framing_twists(companion);
    let mut left = left;
    for _ in 0..2 * twists.unsigned_abs() {
        let [sw, se, ne, nw] = corners(&mut g, twists > 0);
        let [bottom, top] = left.expect("twists need crossings");
        g.link(bottom, sw);
        g.link(top, nw);
        left = Some([se, ne]);
    }

    if p.n == 0 {
        match (left, right) {
            (Some([lb, lt]), Some([rb, rt])) => {
                g.link(lb, lt);
                g.link(rb, rt);
            }
            _ => return Ok(Diagram::unknot()),
        }
    } else {
        let mut above: Option<[usize; 2]> = None;
        for _ in 0..p.n.unsigned_abs() {
            let [sw, se, ne, nw] = corners(&mut g, p.n > 0);
            match (above, left, right) {
                (Some([l, r]), _, _) => {
                    g.link(l, nw);
                    g.link(r, ne);
                }
                (None, Some([_, lt]), Some([_, rt])) => {
                    g.link(lt, nw);
                    g.link(rt, ne);
                }
                _ => g.link(nw, ne),
            }
            above = Some([sw, se]);
        }
        let [sw, se] = above.expect("clasp has crossings");
        match (left, right) {
            (Some([lb, _]), Some([rb, _])) => {
                g.link(lb, sw);
                g.link(rb, se);
            }
            _ => g.link(sw, se),
        }
    }
    g.to_diagram()
}
