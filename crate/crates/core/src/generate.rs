//! Seeded random inputs.

use rand::seq::SliceRandom;
use rand::Rng;
use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::hypercore::{ColoredHypergraph, Hypergraph, Vertex};

/// `m` edges of arity `2..=rank` on `n` vertices with `κ_0 ≤ d`.
///
/// Each edge is charged to its first vertex in a hidden peel order and
/// every vertex takes at most `d` charges, so deleting along that order
/// never sees a vertex of 0-trimmed degree above `d`. Vertex ids are
/// shuffled afterwards.
pub fn random_degenerate<R: Rng + ?Sized>(n: usize, m: usize, rank: usize, d: usize, rng: &mut R) -> Result<Hypergraph> {
    if rank < 2 || n < 2 {
        return Err(Error::input("need rank >= 2 and at least two vertices"));
    }
    if m > d * (n - 1) {
        return Err(Error::input(format!(
            "{m} edges do not fit under degeneracy {d} on {n} vertices"
        )));
    }
    let mut load = vec![0usize; n];
    let mut seen: FxHashSet<Vec<Vertex>> = FxHashSet::default();
    let mut edges = Vec::with_capacity(m);
    let mut attempts = 0usize;
    while edges.len() < m {
        attempts += 1;
        if attempts > 50 * m + 1000 {
            return Err(Error::input("could not place all edges; lower m or raise n"));
        }
        let u = rng.gen_range(0..n - 1);
        if load[u] >= d {
            continue;
        }
        let arity = rng.gen_range(2..=rank).min(n - u);
        let mut e: Vec<Vertex> = rand::seq::index::sample(rng, n - u - 1, arity - 1)
            .into_iter()
            .map(|x| (u + 1 + x) as Vertex)
            .collect();
        e.push(u as Vertex);
        e.sort_unstable();
        if seen.insert(e.clone()) {
            load[u] += 1;
            edges.push(e);
        }
    }
    let mut perm: Vec<Vertex> = (0..n as Vertex).collect();
    perm.shuffle(rng);
    Hypergraph::new(n, edges.into_iter().map(|e| e.into_iter().map(|v| perm[v as usize]).collect::<Vec<_>>()))
}

/// Up to `m` distinct edges, arity uniform in `2..=rank` (capped by `n`).
pub fn random_hypergraph<R: Rng + ?Sized>(n: usize, m: usize, rank: usize, rng: &mut R) -> Hypergraph {
    if n < 2 {
        return Hypergraph::empty(n);
    }
    let edges: Vec<Vec<Vertex>> = (0..m)
        .map(|_| {
            let a = rng.gen_range(2..=rank.max(2)).min(n);
            rand::seq::index::sample(rng, n, a).into_iter().map(|v| v as Vertex).collect()
        })
        .collect();
    Hypergraph::new(n, edges).expect("sampled edges are in range")
}

/// Up to `m` distinct edges of a single arity with uniform vertex colors.
pub fn random_colored_uniform<R: Rng + ?Sized>(
    n: usize,
    m: usize,
    arity: usize,
    colors: u32,
    rng: &mut R,
) -> ColoredHypergraph {
    let g = if n >= arity {
        let edges: Vec<Vec<Vertex>> = (0..m)
            .map(|_| rand::seq::index::sample(rng, n, arity).into_iter().map(|v| v as Vertex).collect())
            .collect();
        Hypergraph::new(n, edges).expect("sampled edges are in range")
    } else {
        Hypergraph::empty(n)
    };
    let color = (0..n).map(|_| rng.gen_range(0..colors)).collect();
    ColoredHypergraph::new(g, color).expect("one color per vertex")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneracy::compute_ordering;
    use crate::Level;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn degenerate_generator_respects_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for d in 1..5 {
            let g = random_degenerate(300, 200 * d, 3, d, &mut rng).unwrap();
            assert_eq!(g.num_edges(), 200 * d);
            assert!(compute_ordering(&g, Level::Finite(0)).kappa_l <= d);
        }
        assert!(random_degenerate(10, 100, 3, 2, &mut rng).is_err());
    }

    #[test]
    fn seeded_output_repeats() {
        let a = random_hypergraph(8, 10, 3, &mut ChaCha8Rng::seed_from_u64(5));
        let b = random_hypergraph(8, 10, 3, &mut ChaCha8Rng::seed_from_u64(5));
        assert_eq!(a, b);
        let c = random_colored_uniform(9, 12, 2, 3, &mut ChaCha8Rng::seed_from_u64(5));
        assert!(c.base.edges().iter().all(|e| e.len() == 2));
        assert!(c.color.iter().all(|&x| x < 3));
    }
}
