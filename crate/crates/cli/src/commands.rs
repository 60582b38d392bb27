use std::fs::OpenOptions;
use std::path::Path;
use std::time::Instant;

use hypercount_core::counting::{count_homs_report, count_subs_report};
use hypercount_core::dagdecomp::{l_dag_treewidth, DagTreeDecomposition};
use hypercount_core::degeneracy::compute_ordering;
use hypercount_core::generate::random_degenerate;
use hypercount_core::hypercore::io::HgFile;
use hypercount_core::oracle::{brute_colorful_hom, brute_hom, brute_simplex, brute_sub, OracleGuard};
use hypercount_core::patterns::classify as classify_pattern;
use hypercount_core::reductions::{build_gadget, build_simplex, gadget_degeneracy_check, tensor_product, GadgetSpec};
use hypercount_core::{Dah, Error, Result, Vertex};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{ClassifyArgs, CountArgs, DegeneracyArgs, GenCommand, LevelFile, Mode, OracleCommand};

/// Combinations of edge cells above this make the tensor product explode.
const MAX_TENSOR_CELLS: usize = 20;

/// Loads a `.hg` file, naming it in parse errors.
pub fn load(path: &Path) -> Result<HgFile> {
    HgFile::load(path).map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{}: {msg}", path.display()),
        },
        other => other,
    })
}

fn save(file: &HgFile, path: &Path) -> Result<()> {
    file.save(path)?;
    println!(
        "wrote {} ({} vertices, {} edges)",
        path.display(),
        file.graph.num_vertices(),
        file.graph.num_edges()
    );
    Ok(())
}

pub fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn labels(file: &HgFile, vs: &[Vertex]) -> String {
    let names: Vec<&str> = vs.iter().map(|&v| file.labels[v as usize].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::input(format!("csv output: {e}"))
}

/// Opens `path` for appending rows, writing `header` first if it is new or empty.
pub fn csv_appender(path: &Path, header: &[&str]) -> Result<csv::Writer<std::fs::File>> {
    let fresh = std::fs::metadata(path).map_or(true, |m| m.len() == 0);
    let f = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| Error::input(format!("cannot open {}: {e}", path.display())))?;
    let mut w = csv::Writer::from_writer(f);
    if fresh {
        w.write_record(header).map_err(csv_error)?;
    }
    Ok(w)
}

pub const COUNT_HEADER: [&str; 8] = ["n", "m", "kappa_l", "pattern", "l", "mode", "count", "millis"];

pub fn count(a: &CountArgs) -> Result<()> {
    let pattern = load(&a.pattern)?;
    let input = load(&a.input)?;
    let (g, h) = (&input.graph, &pattern.graph);
    let start = Instant::now();
    let (total, kappa) = match a.mode {
        Mode::Hom => {
            let r = count_homs_report(g, h, a.l)?;
            println!("{}", r.total);
            println!("orientation kappa_l={} millis={:.3}", r.kappa_l, r.orient_time.as_secs_f64() * 1e3);
            for t in &r.terms {
                println!(
                    "term vertices={} edges={} beta={} orientations={} width={} count={} millis={:.3}",
                    t.pattern.num_vertices(),
                    t.pattern.num_edges(),
                    t.beta,
                    t.multiplicity,
                    t.width,
                    t.count,
                    t.elapsed.as_secs_f64() * 1e3
                );
            }
            (r.total, r.kappa_l)
        }
        Mode::Sub => {
            let r = count_subs_report(g, h, a.l)?;
            println!("{}", r.total);
            println!("orientation kappa_l={}", r.kappa_l);
            for t in &r.terms {
                println!(
                    "term vertices={} edges={} gamma={} hom={} millis={:.3}",
                    t.pattern.num_vertices(),
                    t.pattern.num_edges(),
                    t.gamma,
                    t.hom,
                    t.elapsed.as_secs_f64() * 1e3
                );
            }
            (r.total, r.kappa_l)
        }
    };
    let millis = start.elapsed().as_secs_f64() * 1e3;
    if let Some(path) = &a.csv {
        let mut w = csv_appender(path, &COUNT_HEADER)?;
        w.write_record([
            g.num_vertices().to_string(),
            g.num_edges().to_string(),
            kappa.to_string(),
            stem(&a.pattern),
            a.l.to_string(),
            a.mode.name().to_string(),
            total.to_string(),
            format!("{millis:.3}"),
        ])
        .map_err(csv_error)?;
        w.flush().map_err(csv_error)?;
    }
    Ok(())
}

fn print_decomposition(file: &HgFile, dah: &Dah, td: &DagTreeDecomposition) {
    let order: Vec<&str> = dah.ordering().iter().map(|&v| file.labels[v as usize].as_str()).collect();
    println!("orientation {}", order.join(" < "));
    for (i, bag) in td.bags.iter().enumerate() {
        match td.parent[i] {
            Some(p) => println!("bag {i} {} parent {p}", labels(file, bag)),
            None => println!("bag {i} {} root", labels(file, bag)),
        }
    }
}

pub fn classify(a: &ClassifyArgs) -> Result<()> {
    let file = load(&a.pattern)?;
    let c = classify_pattern(&file.graph, a.l)?;
    println!("l={}", c.level);
    println!("its_free={}", c.its_free);
    println!("tau={}", c.tau());
    if let Some(licl) = c.licl {
        println!("licl_clique_completion={licl}");
    }
    let mut core = String::new();
    match &c.witness {
        Some(its) => {
            let w = &its.witness;
            core = labels(&file, &w.core);
            println!("witness subset {}", labels(&file, &its.subset));
            println!("witness core {core}");
            for (i, comp) in w.components.iter().enumerate() {
                let edges: Vec<String> = w.connectors[i]
                    .iter()
                    .map(|&e| labels(&file, &file.graph.edges()[e]))
                    .collect();
                println!("component {i} {} connector {}", labels(&file, comp), edges.join(" "));
            }
            for (i, &comp) in w.assignment.iter().enumerate() {
                println!("core vertex {} avoided by component {comp}", file.labels[w.core[i] as usize]);
            }
        }
        None => {
            println!("certificate: width-1 decomposition of a maximizing orientation");
            print_decomposition(&file, &c.treewidth.orientation, &c.treewidth.decomposition);
        }
    }
    if let Some(path) = &a.csv {
        let mut w = csv::Writer::from_path(path).map_err(csv_error)?;
        w.write_record(["pattern", "l", "its_free", "tau", "licl", "core"]).map_err(csv_error)?;
        w.write_record([
            stem(&a.pattern),
            c.level.to_string(),
            c.its_free.to_string(),
            c.tau().to_string(),
            c.licl.map(|x| x.to_string()).unwrap_or_default(),
            core,
        ])
        .map_err(csv_error)?;
        w.flush().map_err(csv_error)?;
    }
    Ok(())
}

pub fn dtw(a: &LevelFile) -> Result<()> {
    let file = load(&a.file)?;
    let r = l_dag_treewidth(&file.graph, a.l)?;
    println!("tau={}", r.tau);
    print_decomposition(&file, &r.orientation, &r.decomposition);
    Ok(())
}

pub fn degeneracy(a: &DegeneracyArgs) -> Result<()> {
    let file = load(&a.file)?;
    let r = compute_ordering(&file.graph, a.l);
    println!("kappa_l={}", r.kappa_l);
    println!("max_l_outdegree={}", r.max_l_outdegree);
    if a.emit_ordering {
        let names: Vec<&str> = r.ordering.iter().map(|&v| file.labels[v as usize].as_str()).collect();
        println!("ordering {}", names.join(" "));
    }
    Ok(())
}

pub fn gen(g: &GenCommand) -> Result<()> {
    match g {
        GenCommand::Gadget {
            pattern,
            witness,
            input,
            l,
            output,
        } => {
            if witness != "auto" {
                return Err(Error::input(format!("--witness {witness:?}: only \"auto\" is supported")));
            }
            let h = load(pattern)?.graph;
            let gc = load(input)?.colored()?;
            let spec = GadgetSpec::auto(&h, *l)?;
            let out = build_gadget(&gc, &spec)?;
            println!("core size {} kappa_l={}", spec.core_size(), gadget_degeneracy_check(&out, *l));
            save(&HgFile::from_colored(&out), output)
        }
        GenCommand::Simplex { k, output } => save(&HgFile::unlabeled(build_simplex(*k)?), output),
        GenCommand::Tensor { a, b, output } => {
            let (ga, gb) = (load(a)?.graph, load(b)?.graph);
            let cells = ga.rank() * gb.rank();
            if cells > MAX_TENSOR_CELLS {
                return Err(Error::Guard {
                    what: "cells of an edge pair in the tensor product",
                    actual: cells as u128,
                    limit: MAX_TENSOR_CELLS as u128,
                });
            }
            save(&HgFile::unlabeled(tensor_product(&ga, &gb)), output)
        }
        GenCommand::Random {
            n,
            m,
            rank,
            degeneracy,
            seed,
            output,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let g = random_degenerate(*n, *m, *rank, *degeneracy, &mut rng)?;
            save(&HgFile::unlabeled(g), output)
        }
    }
}

pub fn oracle(o: &OracleCommand) -> Result<()> {
    let guard = OracleGuard::default();
    match o {
        OracleCommand::Hom { pattern, input } => {
            println!("{}", brute_hom(&load(input)?.graph, &load(pattern)?.graph, &guard)?);
        }
        OracleCommand::Sub { pattern, input } => {
            println!("{}", brute_sub(&load(input)?.graph, &load(pattern)?.graph, &guard)?);
        }
        OracleCommand::Colhom { pattern, input } => {
            let gc = load(input)?.colored()?;
            println!("{}", brute_colorful_hom(&gc, &load(pattern)?.graph, &guard)?);
        }
        OracleCommand::Simplex { k, input } => {
            println!("{}", brute_simplex(&load(input)?.graph, *k, &guard)?);
        }
    }
    Ok(())
}
