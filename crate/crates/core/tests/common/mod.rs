//! Independent oracles and diagram generators shared by the integration tests.

#![allow(dead_code)]

use knotkh::corpus::{builtin, CorpusEntry};
use knotkh::{Diagram, LaurentPoly};
use rand::Rng;

/// Dart `(crossing, slot)` at the other end of the edge leaving `(x, s)`.
fn other_end(d: &Diagram, x: usize, s: usize) -> (usize, usize) {
    let e = d.crossings()[x].edges()[s];
    for (y, c) in d.crossings().iter().enumerate() {
        for (t, &f) in c.edges().iter().enumerate() {
            if f == e && (y, t) != (x, s) {
                return (y, t);
            }
        }
    }
    unreachable!("every edge occurs twice")
}

/// Face index of the corner between slots `k` and `k + 1` of every crossing.
fn corner_faces(d: &Diagram) -> (Vec<[usize; 4]>, usize) {
    let c = d.crossing_count();
    let mut face = vec![[usize::MAX; 4]; c];
    let mut faces = 0;
    for x in 0..c {
        for k in 0..4 {
            if face[x][k] != usize::MAX {
                continue;
            }
            // walk the face boundary: enter a crossing at slot t, leave at t + 1
            let (mut y, mut t) = (x, k);
            while face[y][t] == usize::MAX {
                face[y][t] = faces;
                let (z, u) = other_end(d, y, (t + 1) % 4);
                y = z;
                t = u;
            }
            faces += 1;
        }
    }
    (face, faces)
}

fn bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Knot determinant from the Goeritz matrix of a checkerboard colouring.
pub fn goeritz_det(d: &Diagram) -> u64 {
    if d.is_crossingless() {
        return 1;
    }
    let (corner, faces) = corner_faces(d);
    assert_eq!(faces, d.crossing_count() + 2, "diagram is not planar");
    // colour faces: corners k and k + 1 differ, k and k + 2 agree
    let mut colour = vec![u8::MAX; faces];
    colour[corner[0][0]] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for c in &corner {
            for k in 0..4 {
                let (a, b) = (c[k], c[(k + 1) % 4]);
                if colour[a] != u8::MAX && colour[b] == u8::MAX {
                    colour[b] = 1 - colour[a];
                    changed = true;
                }
                if colour[b] != u8::MAX && colour[a] == u8::MAX {
                    colour[a] = 1 - colour[b];
                    changed = true;
                }
                assert!(colour[a] == u8::MAX || colour[b] == u8::MAX || colour[a] != colour[b]);
            }
        }
    }
    let white: Vec<usize> = (0..faces).filter(|&f| colour[f] == 0).collect();
    let index = |f: usize| white.iter().position(|&w| w == f).unwrap();
    let n = white.len();
    let mut g = vec![vec![0i128; n]; n];
    for c in &corner {
        let (k, eta) = if colour[c[0]] == 0 { (0, 1) } else { (1, -1) };
        let (i, j) = (index(c[k]), index(c[k + 2]));
        if i != j {
            g[i][j] -= eta;
            g[j][i] -= eta;
            g[i][i] += eta;
            g[j][j] += eta;
        }
    }
    let minor: Vec<Vec<i128>> = g[1..].iter().map(|r| r[1..].to_vec()).collect();
    bareiss(minor).unsigned_abs() as u64
}

/// Jones polynomial in `q` (with `t = q^2`) from the Kauffman bracket state sum.
pub fn bracket_jones(d: &Diagram) -> LaurentPoly {
    let c = d.crossing_count();
    if c == 0 {
        return LaurentPoly::one();
    }
    let loop_value = LaurentPoly::new([(2, -1), (-2, -1)]);
    let mut bracket = LaurentPoly::default();
    for s in 0..1u64 << c {
        let loops = count_loops(d, s);
        let b = s.count_ones() as i32;
        let mut term = LaurentPoly::new([(c as i32 - 2 * b, 1)]);
        for _ in 1..loops {
            term = term.mul(&loop_value);
        }
        bracket = LaurentPoly::new(bracket.terms().chain(term.terms()));
    }
    let w = d.writhe() as i32;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let v = bracket.mul(&LaurentPoly::new([(-3 * w, sign)]));
    // A = t^(-1/4) = q^(-1/2)
    LaurentPoly::new(v.terms().map(|(e, c)| {
        assert_eq!(e % 2, 0, "odd power of A in a knot bracket");
        (-e / 2, c)
    }))
}

/// Loops of the smoothing where bit 0 at crossing `X(a,b,c,d)` joins `a-b`
/// and `c-d` (the A-smoothing) and bit 1 joins `a-d` and `b-c`.
fn count_loops(d: &Diagram, s: u64) -> usize {
    let n = d.edge_count() as usize;
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    let mut join = |a: u32, b: u32| {
        let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
        parent[ra] = rb;
    };
    for (k, x) in d.crossings().iter().enumerate() {
        let [a, b, c, e] = x.edges();
        if s >> k & 1 == 0 {
            join(a, b);
            join(c, e);
        } else {
            join(a, e);
            join(b, c);
        }
    }
    (1..=n).filter(|&e| find(&mut parent, e) == e).count()
}

/// A random braid closure that is a knot, with at most `max_crossings` crossings.
pub fn random_knot(rng: &mut impl Rng, max_crossings: usize) -> Diagram {
    loop {
        let strands = rng.gen_range(2..=4);
        let len = rng.gen_range(strands - 1..=max_crossings);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        if let Ok(d) = Diagram::from_braid(strands, &word) {
            if d.is_knot() {
                return d;
            }
        }
    }
}

pub fn corpus_upto(crossings: usize) -> Vec<CorpusEntry> {
    builtin().into_iter().filter(|e| e.diagram.crossing_count() <= crossings).collect()
}

pub fn is_unknot_fixture(e: &CorpusEntry) -> bool {
    e.name == "U" || e.name.starts_with("unknot")
}

/// Peak resident memory of this process in bytes, where the platform reports it.
pub fn peak_memory() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}
