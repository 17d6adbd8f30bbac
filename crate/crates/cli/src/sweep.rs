use std::io::Write;
use std::time::Instant;

use knotkh::invariants::check_detection_inequality;
use knotkh::CorpusEntry;
use rayon::prelude::*;

use crate::compute;

pub struct Row {
    pub name: String,
    pub crossings: usize,
    pub outcome: Result<(usize, u64), String>,
    pub ms: f64,
    pub expected_rank: Option<usize>,
    pub expected_det: Option<u64>,
}

/// Computes every entry in parallel; rows come back in input order.
pub fn run(entries: &[CorpusEntry], naive: bool) -> Vec<Row> {
    entries
        .par_iter()
        .map(|e| {
            let start = Instant::now();
            let outcome = compute(&e.diagram, true, naive)
                .and_then(|t| check_detection_inequality(&t))
                .map(|r| (r.total_rank, r.determinant))
                .map_err(|err| err.to_string());
            Row {
                name: e.name.clone(),
                crossings: e.diagram.crossing_count(),
                outcome,
                ms: start.elapsed().as_secs_f64() * 1e3,
                expected_rank: e.expected_rank,
                expected_det: e.expected_det,
            }
        })
        .collect()
}

/// Writes the CSV to `out` and one line per problem to `err`. Returns the
/// number of entries with a problem: an error, a value differing from the
/// expected one, or a determinant above the rank.
pub fn report(rows: &[Row], out: impl Write, err: &mut impl Write) -> csv::Result<usize> {
    let mut csv = csv::Writer::from_writer(out);
    csv.write_record(["name", "crossings", "rank", "det", "slack", "ms"])?;
    let mut failures = 0;
    for r in rows {
        let ms = format!("{:.3}", r.ms);
        let crossings = r.crossings.to_string();
        match &r.outcome {
            Ok((rank, det)) => {
                let slack = *rank as i64 - *det as i64;
                csv.write_record([&r.name, &crossings, &rank.to_string(), &det.to_string(), &slack.to_string(), &ms])?;
                let mut problems = vec![];
                if let Some(x) = r.expected_rank.filter(|x| x != rank) {
                    problems.push(format!("rank {rank}, expected {x}"));
                }
                if let Some(x) = r.expected_det.filter(|x| x != det) {
                    problems.push(format!("det {det}, expected {x}"));
                }
                if slack < 0 {
                    problems.push(format!("det {det} exceeds rank {rank}"));
                }
                if !problems.is_empty() {
                    failures += 1;
                    writeln!(err, "mismatch {}: {}", r.name, problems.join("; "))?;
                }
            }
            Err(e) => {
                failures += 1;
                csv.write_record([r.name.as_str(), &crossings, "", "", "", &ms])?;
                writeln!(err, "error {}: {e}", r.name)?;
            }
        }
    }
    csv.flush()?;
    Ok(failures)
}
