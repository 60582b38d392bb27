//! Brute-force reference counts. Each routine enumerates maps directly from
//! the definition and only prunes a partial map once an edge check fails.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::hypercore::{ColoredHypergraph, Dah, Hypergraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleGuard {
    pub max_pattern_vertices: usize,
    pub max_input_vertices: usize,
    /// Bound on the nominal number of candidate maps `|V(G)|^|V(H)|`.
    pub max_maps: u128,
}

impl Default for OracleGuard {
    fn default() -> Self {
        OracleGuard {
            max_pattern_vertices: 6,
            max_input_vertices: 10,
            max_maps: 100_000_000,
        }
    }
}

impl OracleGuard {
    /// No limits; for tests that size their own instances.
    pub fn unbounded() -> Self {
        OracleGuard {
            max_pattern_vertices: usize::MAX,
            max_input_vertices: usize::MAX,
            max_maps: u128::MAX,
        }
    }

    fn check(&self, pattern: usize, input: usize) -> Result<()> {
        Error::check_guard("oracle pattern vertices", pattern, self.max_pattern_vertices)?;
        Error::check_guard("oracle input vertices", input, self.max_input_vertices)?;
        let maps = (input as u128).checked_pow(pattern as u32).unwrap_or(u128::MAX);
        if maps > self.max_maps {
            return Err(Error::Guard {
                what: "oracle candidate maps",
                actual: maps,
                limit: self.max_maps,
            });
        }
        Ok(())
    }
}

/// Visits every map `V(H) -> 0..ng` in lexicographic order of a fixed vertex
/// sequence; `edge_ok` is called for each pattern edge once all its vertices
/// are assigned, and `vertex_ok` whenever a vertex is placed.
fn count_maps(
    h: &Hypergraph,
    ng: usize,
    vertex_ok: &dyn Fn(&[Vertex], usize, Vertex) -> bool,
    edge_ok: &dyn Fn(usize, &[Vertex]) -> bool,
) -> u128 {
    let nh = h.num_vertices();
    // edges become checkable at the position of their last vertex
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); nh];
    for (i, e) in h.edges().iter().enumerate() {
        let last = *e.iter().max().unwrap() as usize;
        ready[last].push(i);
    }
    let mut assign: Vec<Vertex> = vec![0; nh];
    fn go(
        pos: usize,
        nh: usize,
        ng: usize,
        assign: &mut Vec<Vertex>,
        ready: &[Vec<usize>],
        vertex_ok: &dyn Fn(&[Vertex], usize, Vertex) -> bool,
        edge_ok: &dyn Fn(usize, &[Vertex]) -> bool,
    ) -> u128 {
        if pos == nh {
            return 1;
        }
        let mut total = 0;
        for x in 0..ng as Vertex {
            if !vertex_ok(assign, pos, x) {
                continue;
            }
            assign[pos] = x;
            if ready[pos].iter().all(|&i| edge_ok(i, assign)) {
                total += go(pos + 1, nh, ng, assign, ready, vertex_ok, edge_ok);
            }
        }
        total
    }
    go(0, nh, ng, &mut assign, &ready, vertex_ok, edge_ok)
}

fn image(e: &[Vertex], assign: &[Vertex]) -> Vec<Vertex> {
    let mut img: Vec<Vertex> = e.iter().map(|&v| assign[v as usize]).collect();
    img.sort_unstable();
    img.dedup();
    img
}

/// Maps `V(H) -> V(G)` sending every edge onto a set that is an edge of `G`.
pub fn brute_hom(g: &Hypergraph, h: &Hypergraph, guard: &OracleGuard) -> Result<u128> {
    guard.check(h.num_vertices(), g.num_vertices())?;
    let edges = h.edges();
    Ok(count_maps(h, g.num_vertices(), &|_, _, _| true, &|i, a| {
        g.contains_edge(&image(&edges[i], a))
    }))
}

/// As [`brute_hom`] but every edge image must keep the edge's arity.
pub fn brute_arity_hom(g: &Hypergraph, h: &Hypergraph, guard: &OracleGuard) -> Result<u128> {
    guard.check(h.num_vertices(), g.num_vertices())?;
    let edges = h.edges();
    Ok(count_maps(h, g.num_vertices(), &|_, _, _| true, &|i, a| {
        let img = image(&edges[i], a);
        img.len() == edges[i].len() && g.contains_edge(&img)
    }))
}

/// Maps sending each ordered edge of `hd` position-wise onto an ordered
/// edge of `gd`.
pub fn brute_dah_hom(hd: &Dah, gd: &Dah, guard: &OracleGuard) -> Result<u128> {
    guard.check(hd.num_vertices(), gd.num_vertices())?;
    let targets: HashSet<&[Vertex]> = gd.ordered_edges().iter().map(Vec::as_slice).collect();
    let ordered = hd.ordered_edges();
    Ok(count_maps(hd.base(), gd.num_vertices(), &|_, _, _| true, &|i, a| {
        let img: Vec<Vertex> = ordered[i].iter().map(|&v| a[v as usize]).collect();
        targets.contains(img.as_slice())
    }))
}

/// Homomorphisms whose images carry pairwise distinct colors.
pub fn brute_colorful_hom(gc: &ColoredHypergraph, h: &Hypergraph, guard: &OracleGuard) -> Result<u128> {
    let g = &gc.base;
    guard.check(h.num_vertices(), g.num_vertices())?;
    let edges = h.edges();
    let color = &gc.color;
    Ok(count_maps(
        h,
        g.num_vertices(),
        &|a, pos, x| a[..pos].iter().all(|&y| color[y as usize] != color[x as usize]),
        &|i, a| g.contains_edge(&image(&edges[i], a)),
    ))
}

/// Number of subhypergraphs `(U, E')` of `G` isomorphic to `H`: for every
/// vertex set `U` of the right size, the distinct edge sets obtained as
/// images of `E(H)` under bijections `V(H) -> U`.
pub fn brute_sub(g: &Hypergraph, h: &Hypergraph, guard: &OracleGuard) -> Result<u128> {
    guard.check(h.num_vertices(), g.num_vertices())?;
    let (nh, ng) = (h.num_vertices(), g.num_vertices());
    if nh > ng {
        return Ok(0);
    }
    let mut total = 0u128;
    let mut subset: Vec<Vertex> = (0..nh as Vertex).collect();
    loop {
        let mut images: BTreeSet<Vec<Vec<Vertex>>> = BTreeSet::new();
        let mut perm = subset.clone();
        permutations(&mut perm, 0, &mut |p| {
            let mut img: Vec<Vec<Vertex>> = h.edges().iter().map(|e| image(e, p)).collect();
            if img.iter().all(|e| g.contains_edge(e)) {
                img.sort_unstable();
                images.insert(img);
            }
        });
        total += images.len() as u128;
        if !next_combination(&mut subset, ng) {
            return Ok(total);
        }
    }
}

fn permutations(p: &mut Vec<Vertex>, k: usize, f: &mut impl FnMut(&[Vertex])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Advances a strictly increasing selection from `0..n`.
pub(crate) fn next_combination(c: &mut [Vertex], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if (c[i] as usize) < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Whether some `k+1` vertices have all their `k`-subsets as edges.
pub fn brute_simplex(g: &Hypergraph, k: usize, guard: &OracleGuard) -> Result<bool> {
    Error::check_guard("oracle input vertices", g.num_vertices(), guard.max_input_vertices)?;
    Ok(find_simplex(g, k, None))
}

/// As [`brute_simplex`] with the `k+1` vertices pairwise differently colored.
pub fn brute_colorful_simplex(gc: &ColoredHypergraph, k: usize, guard: &OracleGuard) -> Result<bool> {
    Error::check_guard("oracle input vertices", gc.base.num_vertices(), guard.max_input_vertices)?;
    Ok(find_simplex(&gc.base, k, Some(&gc.color)))
}

fn find_simplex(g: &Hypergraph, k: usize, color: Option<&[u32]>) -> bool {
    let n = g.num_vertices();
    if k < 1 || k + 1 > n {
        return false;
    }
    let mut c: Vec<Vertex> = (0..=k as Vertex).collect();
    loop {
        let rainbow = color.map_or(true, |col| {
            let s: BTreeSet<u32> = c.iter().map(|&v| col[v as usize]).collect();
            s.len() == c.len()
        });
        if rainbow
            && (0..c.len()).all(|skip| {
                let face: Vec<Vertex> =
                    c.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                g.contains_edge(&face)
            })
        {
            return true;
        }
        if !next_combination(&mut c, n) {
            return false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn guard() -> OracleGuard {
        OracleGuard::default()
    }

    fn k(n: usize) -> Hypergraph {
        let mut es = Vec::new();
        for a in 0..n as u32 {
            for b in a + 1..n as u32 {
                es.push(vec![a, b]);
            }
        }
        Hypergraph::new(n, es).unwrap()
    }

    #[test]
    fn hom_examples() {
        let edge = Hypergraph::from_edges(2, &[&[0, 1]]);
        assert_eq!(brute_hom(&k(4), &edge, &guard()).unwrap(), 12);
        let tri = k(3);
        assert_eq!(brute_hom(&tri, &tri, &guard()).unwrap(), 6);
        let e3 = Hypergraph::from_edges(3, &[&[0, 1, 2]]);
        assert_eq!(brute_arity_hom(&k(4), &e3, &guard()).unwrap(), 0);
        // a triple may collapse onto the single pair: the 6 surjections
        assert_eq!(brute_hom(&k(2), &e3, &guard()).unwrap(), 6);
    }

    #[test]
    fn sub_examples() {
        assert_eq!(brute_sub(&k(4), &k(3), &guard()).unwrap(), 4);
        let edge = Hypergraph::from_edges(2, &[&[0, 1]]);
        assert_eq!(brute_sub(&k(4), &edge, &guard()).unwrap(), 6);
        let two = Hypergraph::empty(2);
        assert_eq!(brute_sub(&k(4), &two, &guard()).unwrap(), 6);
    }

    #[test]
    fn colorful_examples() {
        let tri = k(3);
        let rainbow = ColoredHypergraph::new(tri.clone(), vec![0, 1, 2]).unwrap();
        assert_eq!(brute_colorful_hom(&rainbow, &tri, &guard()).unwrap(), 6);
        let dull = ColoredHypergraph::new(tri.clone(), vec![0, 0, 1]).unwrap();
        assert_eq!(brute_colorful_hom(&dull, &tri, &guard()).unwrap(), 0);
    }

    #[test]
    fn simplex_examples() {
        let tet = Hypergraph::from_edges(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        assert!(brute_simplex(&tet, 3, &guard()).unwrap());
        assert!(brute_simplex(&k(4), 2, &guard()).unwrap());
        let c4 = Hypergraph::from_edges(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert!(!brute_simplex(&c4, 2, &guard()).unwrap());
    }

    #[test]
    fn dah_examples() {
        let e = Hypergraph::from_edges(3, &[&[0, 1, 2]]);
        let a = Dah::new(e.clone(), &[0, 1, 2]).unwrap();
        let b = Dah::new(e, &[2, 1, 0]).unwrap();
        assert_eq!(brute_dah_hom(&a, &b, &guard()).unwrap(), 1);
        assert!(brute_dah_hom(&a, &a, &guard()).unwrap() >= 1);
    }

    #[test]
    fn guards_fire() {
        let big = Hypergraph::empty(11);
        let edge = Hypergraph::from_edges(2, &[&[0, 1]]);
        assert!(matches!(brute_hom(&big, &edge, &guard()), Err(Error::Guard { .. })));
        let tight = OracleGuard {
            max_maps: 10,
            ..OracleGuard::default()
        };
        assert!(brute_hom(&k(4), &edge, &tight).is_err());
    }
}
