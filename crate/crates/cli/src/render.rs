use std::fmt::Write;

use knotkh::RankTable;

/// Aligned grid with one row per quantum grading (highest first), one column
/// per homological grading, then the total.
pub fn table(t: &RankTable) -> String {
    let mut out = String::new();
    let is: Vec<i32> = sorted(t.iter().map(|((i, _), _)| i));
    let mut js: Vec<i32> = sorted(t.iter().map(|((_, j), _)| j));
    js.reverse();
    let cell = |v: usize| if v == 0 { ".".to_string() } else { v.to_string() };
    let width = t
        .iter()
        .map(|(_, v)| cell(v).len())
        .chain(is.iter().chain(&js).map(|x| x.to_string().len()))
        .chain([3])
        .max()
        .unwrap_or(3);
    if !is.is_empty() {
        write!(out, "{:>width$}", "j\\i").unwrap();
        for i in &is {
            write!(out, " {i:>width$}").unwrap();
        }
        out.push('\n');
        for &j in &js {
            write!(out, "{j:>width$}").unwrap();
            for &i in &is {
                write!(out, " {:>width$}", cell(t.get(i, j))).unwrap();
            }
            out.push('\n');
        }
    }
    writeln!(out, "total {}", t.total_rank()).unwrap();
    out
}

fn sorted(it: impl Iterator<Item = i32>) -> Vec<i32> {
    let mut v: Vec<i32> = it.collect();
    v.sort_unstable();
    v.dedup();
    v
}
