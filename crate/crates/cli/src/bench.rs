//! Size ladder for hom counting. Inputs depend only on the seed, the size
//! and the repetition, so reruns differ only in the millis column.

use std::io::Write;
use std::time::Instant;

use hypercount_core::counting::{HomCounter, OrientedInput};
use hypercount_core::generate::random_degenerate;
use hypercount_core::{Error, Hypergraph, Result};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::commands::{csv_appender, load, stem, COUNT_HEADER};
use crate::BenchArgs;

fn cycle(k: u32) -> Hypergraph {
    Hypergraph::new(k as usize, (0..k).map(|i| [i, (i + 1) % k])).expect("cycle edges are in range")
}

fn instance_seed(seed: u64, n: usize, rep: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (n as u64) << 16 ^ rep as u64
}

struct Row {
    n: usize,
    m: usize,
    kappa: usize,
    count: u128,
    millis: f64,
}

pub fn run(a: &BenchArgs) -> Result<()> {
    let (h, name) = match &a.pattern {
        Some(p) => (load(p)?.graph, stem(p)),
        None => (cycle(5), "C5".to_string()),
    };
    let counter = HomCounter::new(&h, a.l)?;
    let rows = ladder(a, &h, &counter)?;

    let record = |r: &Row| {
        [
            r.n.to_string(),
            r.m.to_string(),
            r.kappa.to_string(),
            name.clone(),
            a.l.to_string(),
            "hom".to_string(),
            r.count.to_string(),
            format!("{:.3}", r.millis),
        ]
    };
    let csv_error = |e: csv::Error| Error::input(format!("csv output: {e}"));
    match &a.csv {
        Some(path) => {
            let mut w = csv_appender(path, &COUNT_HEADER)?;
            for r in &rows {
                w.write_record(record(r)).map_err(csv_error)?;
            }
            w.flush().map_err(|e| Error::input(format!("csv output: {e}")))?;
        }
        None => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(COUNT_HEADER).map_err(csv_error)?;
            for r in &rows {
                w.write_record(record(r)).map_err(csv_error)?;
            }
            w.flush().map_err(|e| Error::input(format!("csv output: {e}")))?;
        }
    }

    let mut err = std::io::stderr().lock();
    let mut prev: Option<(usize, f64)> = None;
    for &n in &a.sizes {
        let mut t: Vec<f64> = rows.iter().filter(|r| r.n == n).map(|r| r.millis).collect();
        if t.is_empty() {
            continue;
        }
        t.sort_by(f64::total_cmp);
        let median = t[t.len() / 2];
        let _ = write!(err, "n={n} median_ms={median:.3}");
        if let Some((pn, pm)) = prev {
            let per_decade = (median / pm).powf(1.0 / (n as f64 / pn as f64).log10());
            let _ = write!(err, " growth_per_decade={per_decade:.2}");
        }
        let _ = writeln!(err);
        prev = Some((n, median));
    }
    Ok(())
}

fn ladder(a: &BenchArgs, h: &Hypergraph, counter: &HomCounter) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for &n in &a.sizes {
        for rep in 0..a.reps {
            let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(a.seed, n, rep));
            let g = random_degenerate(n, a.density * n, a.rank, a.degeneracy, &mut rng)?;
            let start = Instant::now();
            let input = OrientedInput::new(&g, a.l, h.rank());
            let report = counter.report_with(&input)?;
            rows.push(Row {
                n,
                m: g.num_edges(),
                kappa: report.kappa_l,
                count: report.total,
                millis: start.elapsed().as_secs_f64() * 1e3,
            });
        }
    }
    Ok(rows)
}
