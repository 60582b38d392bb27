//! Seeded differential run of the engine against the brute-force oracles.

use hypercount_core::counting::{count_homs, count_subs};
use hypercount_core::degeneracy::{brute_degeneracy, compute_ordering};
use hypercount_core::generate::{random_colored_uniform, random_hypergraph};
use hypercount_core::oracle::{brute_colorful_hom, brute_hom, brute_sub, OracleGuard};
use hypercount_core::patterns::classify;
use hypercount_core::reductions::colorful_hom_count;
use hypercount_core::{Error, Level, Result};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::DifftestArgs;

const LEVELS: [Level; 3] = [Level::Finite(0), Level::Finite(1), Level::Infinity];

fn below(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as usize
}

pub fn run(a: &DifftestArgs) -> Result<()> {
    let guard = OracleGuard::default();
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut checks = 0usize;
    let mut failures: Vec<String> = Vec::new();
    let mut check = |what: &str, engine: u128, oracle: u128, ctx: &dyn Fn() -> String| {
        checks += 1;
        if engine != oracle {
            failures.push(format!("{what}: engine {engine}, oracle {oracle} on {}", ctx()));
        }
    };

    for trial in 0..a.trials {
        let g = random_hypergraph(below(&mut rng, 1, 7), below(&mut rng, 0, 9), 3, &mut rng);
        let h = random_hypergraph(below(&mut rng, 1, 4), below(&mut rng, 0, 4), 3, &mut rng);
        let l = LEVELS[trial % LEVELS.len()];
        let ctx = || format!("trial {trial}, l = {l}, G = {g:?}, H = {h:?}");
        check("hom", count_homs(&g, &h, l)?, brute_hom(&g, &h, &guard)?, &ctx);
        check("sub", count_subs(&g, &h, l)?, brute_sub(&g, &h, &guard)?, &ctx);
        check(
            "degeneracy",
            compute_ordering(&g, l).kappa_l as u128,
            brute_degeneracy(&g, l)? as u128,
            &ctx,
        );
        // classification cross-checks itself and reports disagreement as an error
        classify(&h, l)?;

        let arity = below(&mut rng, 2, 3);
        let colors = h.num_vertices().max(1) as u32;
        let gc = random_colored_uniform(below(&mut rng, 1, 7), below(&mut rng, 0, 8), arity, colors, &mut rng);
        let cctx = || format!("trial {trial}, l = {l}, colored G = {gc:?}, H = {h:?}");
        check(
            "colorful hom",
            colorful_hom_count(&gc, &h, l)?,
            brute_colorful_hom(&gc, &h, &guard)?,
            &cctx,
        );
    }

    for f in &failures {
        eprintln!("mismatch {f}");
    }
    println!("difftest: {} trials, {checks} comparisons, {} mismatches", a.trials, failures.len());
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Error::inconsistency(format!("{} of {checks} comparisons disagreed", failures.len())))
    }
}
