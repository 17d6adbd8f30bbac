//! Homology by scanning: crossings are tensored in one at a time onto a complex
//! of crossingless tangles, closed loops are delooped as soon as they appear,
//! and isomorphisms are cancelled by Gaussian elimination after every step.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};
use std::rc::Rc;

use super::cob::{circles, for_bits, Composer, Mask, Matching, Mor, Shape, ShapeBuilder};
use super::RankTable;
use crate::error::{Error, Result};
use crate::f2::{homology_rank, F2Matrix};
use crate::pd::Diagram;

/// Widest tangle boundary the scanner will carry.
pub const MAX_BOUNDARY: usize = 128;

const R0: [usize; 4] = [1, 0, 3, 2];
const R1: [usize; 4] = [3, 2, 1, 0];

/// Khovanov homology of a diagram computed by the scanning algorithm.
pub fn homology_fast(d: &Diagram, reduced: bool) -> Result<RankTable> {
    if reduced {
        d.require_knot()?;
    }
    if d.is_crossingless() {
        let entries: Vec<_> = if reduced { vec![((0, 0), 1)] } else { vec![((0, 1), 1), ((0, -1), 1)] };
        return Ok(RankTable::new(reduced, entries));
    }
    let cut = reduced.then(|| d.basepoint());
    let tuples = d.tuples();
    let mut cx = Complex::default();
    let empty = cx.intern(vec![]);
    cx.add_obj(Obj { h: 0, q: 0, m: empty });
    let mut boundary: Vec<u32> = vec![];
    let mut seen = vec![false; d.edge_count() as usize + 1];

    for x in scan_order(d) {
        let nb = boundary.len();
        let mut points = [0u32; 4];
        let mut glue: Vec<Option<usize>> = vec![None; nb + 4];
        for (s, &e) in tuples[x].iter().enumerate() {
            if !seen[e as usize] {
                seen[e as usize] = true;
                points[s] = 2 * e;
                continue;
            }
            points[s] = 2 * e + 1;
            if cut == Some(e) {
                continue;
            }
            let other = match points[..s].iter().position(|&p| p == 2 * e) {
                Some(s2) => nb + s2,
                None => boundary.binary_search(&(2 * e)).expect("first end on the boundary"),
            };
            glue[nb + s] = Some(other);
            glue[other] = Some(nb + s);
        }
        let step = Step::new(&boundary, points, glue)?;
        cx = step.apply(&cx);
        cx.eliminate();
        boundary = step.new_boundary;
    }
    debug_assert_eq!(boundary.len(), if reduced { 2 } else { 0 });

    let (n_plus, n_minus) = d.signed_counts();
    let (n_plus, n_minus) = (n_plus as i32, n_minus as i32);
    let mut index: BTreeMap<(i32, i32), Vec<usize>> = BTreeMap::new();
    let mut pos = vec![0usize; cx.objs.len()];
    for (id, o) in cx.live() {
        let v = index.entry((o.h - n_minus, o.q + n_plus - 2 * n_minus)).or_default();
        pos[id] = v.len();
        v.push(id);
    }
    let mut mats: BTreeMap<(i32, i32), F2Matrix> = index
        .iter()
        .map(|(&(i, j), v)| ((i, j), F2Matrix::zeros(index.get(&(i + 1, j)).map_or(0, Vec::len), v.len())))
        .collect();
    for (&(i, j), ids) in &index {
        for &s in ids {
            for (&t, f) in &cx.out[s] {
                if f.coefficient(0) {
                    mats.get_mut(&(i, j)).expect("block").toggle(pos[t], pos[s]);
                }
            }
        }
    }
    let mut entries = vec![];
    for (&(i, j), ids) in &index {
        let zero;
        let d_in = match mats.get(&(i - 1, j)) {
            Some(m) => m,
            None => {
                zero = F2Matrix::zeros(ids.len(), 0);
                &zero
            }
        };
        entries.push(((i, j), homology_rank(d_in, &mats[&(i, j)])?));
    }
    Ok(RankTable::new(reduced, entries))
}

/// Crossings ordered so each one shares as many edges as possible with those
/// already placed. Every starting crossing is tried; the order with the
/// smallest widest boundary (then smallest total boundary) wins.
fn scan_order(d: &Diagram) -> Vec<usize> {
    let tuples = d.tuples();
    (0..tuples.len())
        .map(|start| greedy_order(&tuples, d.edge_count() as usize, start))
        .min_by_key(|(_, cost)| *cost)
        .map(|(order, _)| order)
        .expect("diagram has crossings")
}

fn greedy_order(tuples: &[[u32; 4]], edges: usize, start: usize) -> (Vec<usize>, (usize, usize)) {
    let mut placed = vec![false; tuples.len()];
    // step at which each open edge was opened
    let mut opened: Vec<Option<usize>> = vec![None; edges + 1];
    let mut order = Vec::with_capacity(tuples.len());
    let (mut width, mut widest, mut total) = (0usize, 0, 0);
    for step in 0..tuples.len() {
        let next = if step == 0 {
            start
        } else {
            (0..tuples.len())
                .filter(|&x| !placed[x])
                .max_by_key(|&x| {
                    let shared = tuples[x].iter().filter(|&&e| opened[e as usize].is_some()).count();
                    let oldest = tuples[x].iter().filter_map(|&e| opened[e as usize]).min().unwrap_or(usize::MAX);
                    (shared, std::cmp::Reverse(oldest), std::cmp::Reverse(x))
                })
                .expect("crossings remain")
        };
        placed[next] = true;
        for &e in &tuples[next] {
            let o = &mut opened[e as usize];
            if o.is_some() {
                *o = None;
                width -= 1;
            } else {
                *o = Some(step);
                width += 1;
            }
        }
        widest = widest.max(width);
        total += width;
        order.push(next);
    }
    (order, (widest, total))
}

#[derive(Debug, Clone, Copy)]
struct Obj {
    h: i32,
    q: i32,
    /// index into the complex's matching table
    m: u32,
}

#[derive(Default)]
struct Complex {
    objs: Vec<Option<Obj>>,
    out: Vec<BTreeMap<usize, Mor>>,
    inn: Vec<BTreeSet<usize>>,
    matchings: Vec<Matching>,
    matching_ids: HashMap<Matching, u32>,
    composers: HashMap<(u32, u32, u32), Rc<Composer>>,
}

impl Complex {
    fn intern(&mut self, m: Matching) -> u32 {
        if let Some(&id) = self.matching_ids.get(&m) {
            return id;
        }
        let id = self.matchings.len() as u32;
        self.matchings.push(m.clone());
        self.matching_ids.insert(m, id);
        id
    }

    fn matching(&self, id: u32) -> &[u8] {
        &self.matchings[id as usize]
    }

    fn add_obj(&mut self, o: Obj) -> usize {
        self.objs.push(Some(o));
        self.out.push(BTreeMap::new());
        self.inn.push(BTreeSet::new());
        self.objs.len() - 1
    }

    fn obj(&self, id: usize) -> Obj {
        self.objs[id].expect("live object")
    }

    fn live(&self) -> impl Iterator<Item = (usize, Obj)> + '_ {
        self.objs.iter().enumerate().filter_map(|(i, o)| o.map(|o| (i, o)))
    }

    /// Adds `f` to the arrow `s -> t`; returns whether the arrow is now an
    /// isomorphism.
    fn add_to_edge(&mut self, s: usize, t: usize, f: &Mor) -> bool {
        let e = self.out[s].entry(t).or_default();
        e.add_assign(f);
        if e.is_zero() {
            self.out[s].remove(&t);
            self.inn[t].remove(&s);
            false
        } else {
            let iso = e.is_identity();
            self.inn[t].insert(s);
            iso && self.invertible(s, t)
        }
    }

    fn remove_obj(&mut self, id: usize) {
        for t in std::mem::take(&mut self.out[id]).into_keys() {
            self.inn[t].remove(&id);
        }
        for s in std::mem::take(&mut self.inn[id]) {
            self.out[s].remove(&id);
        }
        self.objs[id] = None;
    }

    fn invertible(&self, s: usize, t: usize) -> bool {
        let (a, b) = (self.obj(s), self.obj(t));
        a.m == b.m && a.q == b.q
    }

    fn is_iso(&self, s: usize, t: usize) -> bool {
        self.objs[s].is_some()
            && self.objs[t].is_some()
            && self.out[s].get(&t).is_some_and(Mor::is_identity)
            && self.invertible(s, t)
    }

    /// Number of arrows created by cancelling `s -> t`.
    fn fill(&self, s: usize, t: usize) -> usize {
        (self.inn[t].len() - 1) * (self.out[s].len() - 1)
    }

    /// Cancels isomorphisms until none is left, cheapest first.
    fn eliminate(&mut self) {
        let mut heap = BinaryHeap::new();
        for s in 0..self.objs.len() {
            if self.objs[s].is_none() {
                continue;
            }
            for &t in self.out[s].keys() {
                if self.is_iso(s, t) {
                    heap.push(Reverse((self.fill(s, t), s, t)));
                }
            }
        }
        while let Some(Reverse((cost, s, t))) = heap.pop() {
            if !self.is_iso(s, t) {
                continue;
            }
            let now = self.fill(s, t);
            if now > cost {
                heap.push(Reverse((now, s, t)));
                continue;
            }
            for (c, d) in self.cancel(s, t) {
                heap.push(Reverse((self.fill(c, d), c, d)));
            }
        }
    }

    fn composer(&mut self, c: u32, k: u32, d: u32) -> Rc<Composer> {
        if let Some(g) = self.composers.get(&(c, k, d)) {
            return g.clone();
        }
        let g = Rc::new(Composer::new(self.matching(c), self.matching(k), self.matching(d)));
        self.composers.insert((c, k, d), g.clone());
        g
    }

    /// Removes `b1 -> b2` (an identity), adding the zig-zag `C -> b2 -> b1 -> D`
    /// to every `C -> D`. Returns the arrows that became isomorphisms.
    fn cancel(&mut self, b1: usize, b2: usize) -> Vec<(usize, usize)> {
        let ins: Vec<(usize, Mor)> =
            self.inn[b2].iter().filter(|&&c| c != b1).map(|&c| (c, self.out[c][&b2].clone())).collect();
        let outs: Vec<(usize, Mor)> =
            self.out[b1].iter().filter(|(&t, _)| t != b2).map(|(&t, f)| (t, f.clone())).collect();
        let mk = self.obj(b1).m;
        let mut isos = vec![];
        for (c, delta) in &ins {
            let mc = self.obj(*c).m;
            for (t, gamma) in &outs {
                let g = self.composer(mc, mk, self.obj(*t).m);
                let f = g.apply(delta, gamma);
                if !f.is_zero() && self.add_to_edge(*c, *t, &f) {
                    isos.push((*c, *t));
                }
            }
        }
        self.remove_obj(b1);
        self.remove_obj(b2);
        isos
    }
}

/// A matching after tensoring with one crossing smoothing: the new matching on
/// the outgoing boundary and one representative point for each closed loop.
struct Resolved {
    m: Matching,
    loops: Vec<usize>,
}

/// The surface of a crossing cobordism placed beside a cobordism of the old
/// tangle, with its loops capped off.
struct Extension {
    shape: Shape,
    src_comp: Vec<usize>,
    tgt_comp: Vec<usize>,
}

/// The bookkeeping for adding one crossing. Points are indexed in a combined
/// space: old boundary positions first, then the crossing's four slots.
struct Step {
    nb: usize,
    glue: Vec<Option<usize>>,
    new_boundary: Vec<u32>,
    new_pos: Vec<Option<u8>>,
    inv: Vec<usize>,
}

impl Step {
    fn new(boundary: &[u32], points: [u32; 4], glue: Vec<Option<usize>>) -> Result<Self> {
        let nb = boundary.len();
        let all: Vec<u32> = boundary.iter().copied().chain(points).collect();
        let mut inv: Vec<usize> = (0..nb + 4).filter(|&u| glue[u].is_none()).collect();
        inv.sort_by_key(|&u| all[u]);
        if inv.len() > MAX_BOUNDARY {
            return Err(Error::TooLarge(format!("tangle boundary of {} points", inv.len())));
        }
        let mut new_pos = vec![None; nb + 4];
        for (p, &u) in inv.iter().enumerate() {
            new_pos[u] = Some(p as u8);
        }
        let new_boundary = inv.iter().map(|&u| all[u]).collect();
        Ok(Step { nb, glue, new_boundary, new_pos, inv })
    }

    fn arc(&self, m: &[u8], r: &[usize; 4], u: usize) -> usize {
        if u < self.nb {
            m[u] as usize
        } else {
            self.nb + r[u - self.nb]
        }
    }

    fn combine(&self, m: &[u8], r: &[usize; 4]) -> Resolved {
        let n = self.nb + 4;
        let mut seen = vec![false; n];
        let mut out = vec![0u8; self.inv.len()];
        for (p, &u) in self.inv.iter().enumerate() {
            if seen[u] {
                continue;
            }
            let mut v = u;
            loop {
                seen[v] = true;
                let w = self.arc(m, r, v);
                seen[w] = true;
                match self.glue[w] {
                    Some(x) => v = x,
                    None => {
                        let q = self.new_pos[w].expect("open end") as usize;
                        out[p] = q as u8;
                        out[q] = p as u8;
                        break;
                    }
                }
            }
        }
        let mut loops = vec![];
        for u in 0..n {
            if seen[u] {
                continue;
            }
            loops.push(u);
            let mut v = u;
            loop {
                seen[v] = true;
                let w = self.arc(m, r, v);
                seen[w] = true;
                v = self.glue[w].expect("closed loop");
                if v == u {
                    break;
                }
            }
        }
        Resolved { m: out, loops }
    }

    /// The surface of `ms -> mt` (old boundary) beside the crossing cobordism
    /// `rs -> rt`, with the loops of both ends capped.
    fn extension(&self, ms: &[u8], mt: &[u8], rs: &[usize; 4], rt: &[usize; 4], src: &Resolved, tgt: &Resolved) -> Extension {
        let (oc, on) = circles(ms, mt);
        let rs8: Vec<u8> = rs.iter().map(|&x| x as u8).collect();
        let rt8: Vec<u8> = rt.iter().map(|&x| x as u8).collect();
        let (ec, en) = circles(&rs8, &rt8);
        let piece = |u: usize| if u < self.nb { oc[u] as usize } else { on + ec[u - self.nb] as usize };
        let mut b = ShapeBuilder::new(on + en);
        for u in 0..self.nb + 4 {
            if let Some(v) = self.glue[u] {
                if u < v {
                    b.glue(piece(u), piece(v));
                }
            }
        }
        for &u in src.loops.iter().chain(&tgt.loops) {
            b.cap(piece(u));
        }
        let (nc, nn) = circles(&src.m, &tgt.m);
        let mut circle_piece = vec![usize::MAX; nn];
        for (p, &u) in self.inv.iter().enumerate() {
            let k = nc[p] as usize;
            if circle_piece[k] == usize::MAX {
                circle_piece[k] = piece(u);
            }
        }
        let shape = b.finish(&circle_piece);
        let src_comp = src.loops.iter().map(|&u| shape.comp_of(piece(u))).collect();
        let tgt_comp = tgt.loops.iter().map(|&u| shape.comp_of(piece(u))).collect();
        Extension { shape, src_comp, tgt_comp }
    }

    /// Extends `f` through `ext`, calling `emit(sigma, tau, g)` for every
    /// nonzero component; bit `l` of `sigma`/`tau` selects the `x` summand of
    /// loop `l`.
    fn extend(ext: &Extension, f: &Mor, mut emit: impl FnMut(usize, usize, Mor)) {
        let shape = &ext.shape;
        let mut dots = vec![0u8; shape.comp_count()];
        for sigma in 0..1usize << ext.src_comp.len() {
            for tau in 0..1usize << ext.tgt_comp.len() {
                let mut g = Mor::default();
                for &term in f.terms() {
                    dots.iter_mut().for_each(|d| *d = 0);
                    for_bits(term, |k| dots[shape.comp_of(k)] += 1);
                    for_bits(sigma as Mask, |l| dots[ext.src_comp[l]] += 1);
                    for (l, &c) in ext.tgt_comp.iter().enumerate() {
                        if tau >> l & 1 == 0 {
                            dots[c] += 1;
                        }
                    }
                    shape.evaluate(&dots, &mut g);
                }
                if !g.is_zero() {
                    emit(sigma, tau, g);
                }
            }
        }
    }

    fn apply(&self, old: &Complex) -> Complex {
        let mut cx = Complex::default();
        // per old matching and smoothing: the resolved matching
        let mut resolved: HashMap<(u32, usize), Resolved> = HashMap::new();
        let mut made: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (id, o) in old.live() {
            for (bit, r) in [R0, R1].iter().enumerate() {
                let res = resolved.entry((o.m, bit)).or_insert_with(|| self.combine(old.matching(o.m), r));
                let (loops, m) = (res.loops.len(), res.m.clone());
                let m = cx.intern(m);
                let mut first = usize::MAX;
                for sigma in 0..1usize << loops {
                    let x = sigma.count_ones() as i32;
                    let q = o.q + bit as i32 + (loops as i32 - 2 * x);
                    let n = cx.add_obj(Obj { h: o.h + bit as i32, q, m });
                    if sigma == 0 {
                        first = n;
                    }
                }
                made.insert((id, bit), first);
            }
        }
        let mut extensions: HashMap<(u32, u32, usize), Rc<Extension>> = HashMap::new();
        let mut ext = |ms: u32, mt: u32, kind: usize| -> Rc<Extension> {
            let e = extensions.entry((ms, mt, kind)).or_insert_with(|| {
                let (rs, rt) = match kind {
                    0 => (&R0, &R0),
                    1 => (&R1, &R1),
                    _ => (&R0, &R1),
                };
                let (bs, bt) = if kind == 2 { (0, 1) } else { (kind, kind) };
                let (src, tgt) = (&resolved[&(ms, bs)], &resolved[&(mt, bt)]);
                Rc::new(self.extension(old.matching(ms), old.matching(mt), rs, rt, src, tgt))
            });
            e.clone()
        };
        for (s, o) in old.live() {
            for (&t, f) in &old.out[s] {
                for bit in 0..2 {
                    let (fs, ft) = (made[&(s, bit)], made[&(t, bit)]);
                    let e = ext(o.m, old.obj(t).m, bit);
                    Self::extend(&e, f, |sigma, tau, g| {
                        cx.add_to_edge(fs + sigma, ft + tau, &g);
                    });
                }
            }
            let (fs, ft) = (made[&(s, 0)], made[&(s, 1)]);
            let e = ext(o.m, o.m, 2);
            Self::extend(&e, &Mor::identity(), |sigma, tau, g| {
                cx.add_to_edge(fs + sigma, ft + tau, &g);
            });
        }
        cx
    }
}
