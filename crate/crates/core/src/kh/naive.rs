//! Direct construction of the cube complex.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{Block, Generator, GradedComplex};
use crate::cube::{gray_states, Bits, CircleFinder};
use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::pd::Diagram;

/// Largest diagram the naive path accepts.
pub const NAIVE_MAX_CROSSINGS: usize = 24;

/// Builds the full (or reduced) Khovanov complex of a diagram.
pub fn build_complex(d: &Diagram, reduced: bool) -> Result<GradedComplex> {
    build(d, reduced, None)
}

/// The complex of the face of the cube where crossing `crossing` is fixed to
/// `bit`. Its homology is that of the diagram with that crossing smoothed
/// (up to an overall grading shift); gradings are kept as in the full cube.
pub fn build_face_complex(d: &Diagram, reduced: bool, crossing: usize, bit: bool) -> Result<GradedComplex> {
    if crossing >= d.crossing_count() {
        return Err(Error::CrossingIndex { crossing });
    }
    build(d, reduced, Some((crossing, bit)))
}

/// Per-state circle data.
struct StateInfo {
    /// circle index of every edge (0-based edges)
    circle_of: Vec<u8>,
    count: usize,
    /// position of each labelling in its block, indexed by x-mask; `u32::MAX`
    /// for masks excluded by reduction
    index: Vec<u32>,
}

fn build(d: &Diagram, reduced: bool, fixed: Option<(usize, bool)>) -> Result<GradedComplex> {
    if reduced {
        d.require_knot()?;
    }
    let c = d.crossing_count();
    if c > NAIVE_MAX_CROSSINGS {
        return Err(Error::TooLarge(format!("{c} crossings; the naive path stops at {NAIVE_MAX_CROSSINGS}")));
    }
    let (n_plus, n_minus) = d.signed_counts();
    let shift = reduced as i32 + n_plus as i32 - 2 * n_minus as i32;

    if d.is_crossingless() {
        let gens: Vec<(i32, Generator)> = if reduced {
            vec![(0, Generator { state: 0, x_mask: 1 })]
        } else {
            vec![(1, Generator { state: 0, x_mask: 0 }), (-1, Generator { state: 0, x_mask: 1 })]
        };
        let blocks = gens
            .into_iter()
            .map(|(j, g)| ((0, j), Block { generators: vec![g], differential: F2Matrix::zeros(0, 1) }))
            .collect();
        return Ok(GradedComplex { blocks, n_plus, n_minus, reduced });
    }

    let keep = |s: Bits| fixed.is_none_or(|(k, b)| (s >> k & 1 == 1) == b);
    let base_edge = d.basepoint() as usize - 1;

    // circle labels for every state, in Gray order
    let states: Vec<Bits> = gray_states(c).filter(|&s| keep(s)).collect();
    let mut finder = CircleFinder::new(d);
    let mut info: Vec<Option<StateInfo>> = (0..1usize << c).map(|_| None).collect();
    let mut labels = Vec::new();
    for &s in &states {
        let count = finder.label(s, &mut labels);
        info[s as usize] = Some(StateInfo { circle_of: labels.clone(), count, index: vec![] });
    }

    // enumerate generators block by block
    let mut blocks: BTreeMap<(i32, i32), Vec<Generator>> = BTreeMap::new();
    let mut sorted = states.clone();
    sorted.sort_unstable();
    for &s in &sorted {
        let st = info[s as usize].as_mut().expect("state resolved");
        let w = s.count_ones() as i32;
        let i = w - n_minus as i32;
        let base_circle = st.circle_of[base_edge];
        st.index = vec![u32::MAX; 1 << st.count];
        for mask in 0..1u64 << st.count {
            if reduced && mask >> base_circle & 1 == 0 {
                continue;
            }
            let j = st.count as i32 - 2 * mask.count_ones() as i32 + w + shift;
            let block = blocks.entry((i, j)).or_default();
            st.index[mask as usize] = block.len() as u32;
            block.push(Generator { state: s, x_mask: mask });
        }
    }

    // differential entries, grouped by source block
    let tuples: Vec<[usize; 4]> = d.tuples().iter().map(|t| t.map(|e| e as usize - 1)).collect();
    let info = &info;
    let entries: Vec<Vec<((i32, i32), u32, u32)>> = sorted
        .par_iter()
        .map(|&s| {
            let src = info[s as usize].as_ref().expect("state resolved");
            let w = s.count_ones() as i32;
            let mut out = vec![];
            for k in 0..c {
                if s >> k & 1 == 1 || fixed.is_some_and(|(f, _)| f == k) {
                    continue;
                }
                let t = s | 1 << k;
                let dst = info[t as usize].as_ref().expect("state resolved");
                let delta = dst.count as i64 - src.count as i64;
                if delta.abs() != 1 {
                    return Err(Error::NonPlanar { crossing: k, delta });
                }
                edge_entries(src, dst, &tuples[k], |mask, image| {
                    let j = src.count as i32 - 2 * mask.count_ones() as i32 + w + shift;
                    let i = w - n_minus as i32;
                    out.push(((i, j), src.index[mask as usize], dst.index[image as usize]));
                });
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;

    let dims: BTreeMap<(i32, i32), usize> = blocks.iter().map(|(k, v)| (*k, v.len())).collect();
    let mut mats: BTreeMap<(i32, i32), F2Matrix> = dims
        .iter()
        .map(|(&(i, j), &n)| ((i, j), F2Matrix::zeros(dims.get(&(i + 1, j)).copied().unwrap_or(0), n)))
        .collect();
    for (key, col, row) in entries.into_iter().flatten() {
        debug_assert!(col != u32::MAX && row != u32::MAX, "reduced subcomplex not closed");
        mats.get_mut(&key).expect("block exists").toggle(row as usize, col as usize);
    }

    let blocks = blocks
        .into_iter()
        .map(|(key, generators)| {
            let differential = mats.remove(&key).expect("matrix exists");
            (key, Block { generators, differential })
        })
        .collect();
    Ok(GradedComplex { blocks, n_plus, n_minus, reduced })
}

/// Calls `emit(source_mask, target_mask)` for every term of the edge map
/// between two adjacent states, over all source labellings present in `src`.
fn edge_entries(src: &StateInfo, dst: &StateInfo, edges: &[usize; 4], mut emit: impl FnMut(u64, u64)) {
    let [a, b, c, _] = *edges;
    let (ca, cc) = (src.circle_of[a] as usize, src.circle_of[c] as usize);
    // where each source circle goes; uninvolved circles keep their identity
    let mut rep = vec![usize::MAX; src.count];
    for (e, &k) in src.circle_of.iter().enumerate() {
        if rep[k as usize] == usize::MAX {
            rep[k as usize] = e;
        }
    }
    let image_of = |mask: u64, skip: &[usize]| -> u64 {
        let mut out = 0;
        for (k, &e) in rep.iter().enumerate() {
            if skip.contains(&k) || mask >> k & 1 == 0 {
                continue;
            }
            out |= 1 << dst.circle_of[e];
        }
        out
    };
    for (mask, &idx) in src.index.iter().enumerate() {
        if idx == u32::MAX {
            continue;
        }
        let mask = mask as u64;
        if ca != cc {
            // merge: 1*1 -> 1, 1*x -> x, x*x -> 0
            let (la, lc) = (mask >> ca & 1, mask >> cc & 1);
            if la == 1 && lc == 1 {
                continue;
            }
            let merged = dst.circle_of[a];
            let image = image_of(mask, &[ca, cc]) | (la | lc) << merged;
            emit(mask, image);
        } else {
            // split: 1 -> 1*x + x*1, x -> x*x
            let (ta, tb) = (dst.circle_of[a], dst.circle_of[b]);
            debug_assert_ne!(ta, tb);
            let rest = image_of(mask, &[ca]);
            if mask >> ca & 1 == 1 {
                emit(mask, rest | 1 << ta | 1 << tb);
            } else {
                emit(mask, rest | 1 << ta);
                emit(mask, rest | 1 << tb);
            }
        }
    }
}
