//! Canonical labeling for small hypergraphs and DAHs.
//!
//! Search tree of colour refinement plus individualization. Every leaf is a
//! discrete colouring and therefore a relabeling; the canonical key is the
//! smallest relabeled edge list over all leaves. No automorphism pruning is
//! done, so the number of leaves reaching the minimum equals |Aut|.

use super::{Dah, Hypergraph, Vertex};
use crate::error::{Error, Result};

/// Largest pattern the canonical labeler accepts.
pub const MAX_CANON_VERTICES: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u32,
    ordered: bool,
    edges: Vec<Vec<u32>>,
}

impl CanonicalKey {
    pub fn num_vertices(&self) -> usize {
        self.n as usize
    }

    /// Hypergraph with the canonical labeling (order information dropped).
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.n as usize, self.edges.iter().map(|e| e.iter().copied()))
            .expect("canonical edges are in range")
    }

    /// Relabeled edges; ordered lists when built from a DAH.
    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }
}

pub(crate) struct Canon {
    pub key: CanonicalKey,
    /// `labeling[v]` is the canonical id of vertex `v` for one minimal leaf.
    pub labeling: Vec<u32>,
    pub automorphisms: u64,
}

pub(crate) fn canonize(n: usize, edges: &[Vec<Vertex>], ordered: bool) -> Result<Canon> {
    Error::check_guard("pattern vertices for canonical form", n, MAX_CANON_VERTICES)?;
    let mut incident = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        for &v in e {
            incident[v as usize].push(i);
        }
    }
    let mut search = Search {
        n,
        edges,
        ordered,
        incident,
        best: None,
    };
    let colours = search.refine(vec![0; n]);
    search.descend(colours);
    let (key_edges, labeling, automorphisms) = search.best.expect("search visits a leaf");
    Ok(Canon {
        key: CanonicalKey {
            n: n as u32,
            ordered,
            edges: key_edges,
        },
        labeling,
        automorphisms,
    })
}

struct Search<'a> {
    n: usize,
    edges: &'a [Vec<Vertex>],
    ordered: bool,
    incident: Vec<Vec<usize>>,
    best: Option<(Vec<Vec<u32>>, Vec<u32>, u64)>,
}

impl Search<'_> {
    fn position(&self, e: &[Vertex], v: Vertex) -> u32 {
        if self.ordered {
            e.iter().position(|&x| x == v).unwrap() as u32
        } else {
            0
        }
    }

    /// Order-preserving refinement to the coarsest equitable colouring.
    fn refine(&self, mut colour: Vec<u32>) -> Vec<u32> {
        let mut cells = count_cells(&colour);
        loop {
            let mut sigs: Vec<(Vec<(u32, Vec<(u32, u32)>)>, usize)> = Vec::with_capacity(self.n);
            for v in 0..self.n {
                let mut per_edge: Vec<(u32, Vec<(u32, u32)>)> = self.incident[v]
                    .iter()
                    .map(|&i| {
                        let e = &self.edges[i];
                        let mut members: Vec<(u32, u32)> = e
                            .iter()
                            .map(|&w| (colour[w as usize], self.position(e, w)))
                            .collect();
                        members.sort_unstable();
                        (self.position(e, v as Vertex), members)
                    })
                    .collect();
                per_edge.sort_unstable();
                sigs.push((per_edge, v));
            }
            sigs.sort_by(|a, b| colour[a.1].cmp(&colour[b.1]).then_with(|| a.0.cmp(&b.0)));
            let mut next = vec![0u32; self.n];
            let mut rank = 0u32;
            for i in 0..sigs.len() {
                if i > 0 {
                    let (pa, va) = (&sigs[i - 1].0, sigs[i - 1].1);
                    let (pb, vb) = (&sigs[i].0, sigs[i].1);
                    if colour[va] != colour[vb] || pa != pb {
                        rank = i as u32;
                    }
                }
                next[sigs[i].1] = rank;
            }
            let next_cells = count_cells(&next);
            colour = next;
            if next_cells == cells {
                return colour;
            }
            cells = next_cells;
        }
    }

    fn descend(&mut self, colour: Vec<u32>) {
        // colours are ranks, so a discrete colouring is a permutation
        let target = (0..self.n as u32)
            .find(|&c| colour.iter().filter(|&&x| x == c).count() > 1);
        let Some(cell) = target else {
            self.leaf(colour);
            return;
        };
        let members: Vec<usize> = (0..self.n).filter(|&v| colour[v] == cell).collect();
        for &v in &members {
            let mut c = colour.clone();
            for &w in &members {
                if w != v {
                    c[w] = cell + 1;
                }
            }
            // shift cells above to keep colours as ranks
            for (w, cw) in c.iter_mut().enumerate() {
                if colour[w] > cell {
                    *cw = colour[w];
                }
            }
            let c = self.refine(c);
            self.descend(c);
        }
    }

    fn leaf(&mut self, labeling: Vec<u32>) {
        let mut key: Vec<Vec<u32>> = self
            .edges
            .iter()
            .map(|e| {
                let mut r: Vec<u32> = e.iter().map(|&v| labeling[v as usize]).collect();
                if !self.ordered {
                    r.sort_unstable();
                }
                r
            })
            .collect();
        key.sort_unstable();
        match &mut self.best {
            Some((best, _, count)) if *best == key => *count += 1,
            Some((best, _, _)) if *best < key => {}
            _ => self.best = Some((key, labeling, 1)),
        }
    }
}

fn count_cells(colour: &[u32]) -> usize {
    let mut c = colour.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalKey> {
    Ok(canonize(h.num_vertices(), h.edges(), false)?.key)
}

/// `labeling[v]` is the canonical id of `v`; mapping `h` through it gives
/// the hypergraph of [`canonical_form`].
pub fn canonical_labeling(h: &Hypergraph) -> Result<Vec<u32>> {
    Ok(canonize(h.num_vertices(), h.edges(), false)?.labeling)
}

pub fn automorphism_count(h: &Hypergraph) -> Result<u64> {
    Ok(canonize(h.num_vertices(), h.edges(), false)?.automorphisms)
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Order-aware canonical form: two DAHs get the same key iff some vertex
/// bijection maps ordered edges onto ordered edges position-wise.
pub fn canonical_dah(d: &Dah) -> Result<CanonicalKey> {
    Ok(canonize(d.num_vertices(), d.ordered_edges(), true)?.key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn brute_aut(h: &Hypergraph) -> u64 {
        let n = h.num_vertices();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut count = 0;
        permute(&mut perm, 0, &mut |p| {
            if h.map_vertices(p, n) == *h {
                count += 1;
            }
        });
        count
    }

    fn permute(p: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn isomorphism_examples() {
        let a = Hypergraph::from_edges(4, &[&[0, 1]]);
        let b = Hypergraph::from_edges(4, &[&[2, 3]]);
        assert!(is_isomorphic(&a, &b).unwrap());
        let tri = Hypergraph::from_edges(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let p3 = Hypergraph::from_edges(3, &[&[0, 1], &[1, 2]]);
        assert!(!is_isomorphic(&tri, &p3).unwrap());
        let e3 = Hypergraph::from_edges(3, &[&[0, 1, 2]]);
        assert!(!is_isomorphic(&e3, &tri).unwrap());
    }

    #[test]
    fn automorphism_counts() {
        let tri = Hypergraph::from_edges(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(automorphism_count(&tri).unwrap(), 6);
        let c6 = Hypergraph::from_edges(6, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[0, 5]]);
        assert_eq!(automorphism_count(&c6).unwrap(), 12);
        assert_eq!(automorphism_count(&Hypergraph::empty(4)).unwrap(), 24);
        let k33 = Hypergraph::from_edges(
            6,
            &[&[0, 3], &[0, 4], &[0, 5], &[1, 3], &[1, 4], &[1, 5], &[2, 3], &[2, 4], &[2, 5]],
        );
        assert_eq!(automorphism_count(&k33).unwrap(), 72);
    }

    #[test]
    fn dah_keys_distinguish_orders() {
        let p3 = Hypergraph::from_edges(3, &[&[0, 1], &[1, 2]]);
        let keys: std::collections::BTreeSet<_> = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]]
            .iter()
            .map(|o| canonical_dah(&Dah::new(p3.clone(), o).unwrap()).unwrap())
            .collect();
        assert_eq!(keys.len(), 3);
    }

    #[test]
    fn guard_applies() {
        assert!(canonical_form(&Hypergraph::empty(13)).is_err());
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (1usize..7).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::btree_set(0..n as u32, 1..=3.min(n)), 0..7)
                .prop_map(move |es| Hypergraph::new(n, es).unwrap())
        })
    }

    proptest! {
        #[test]
        fn key_invariant_under_permutation(h in arb_hypergraph(), seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut perm: Vec<u32> = (0..h.num_vertices() as u32).collect();
            perm.shuffle(&mut rng);
            let g = h.map_vertices(&perm, h.num_vertices());
            prop_assert_eq!(canonical_form(&h).unwrap(), canonical_form(&g).unwrap());
            prop_assert_eq!(canonical_form(&h).unwrap().to_hypergraph().num_edges(), h.num_edges());
            let lab = canonical_labeling(&h).unwrap();
            prop_assert_eq!(h.map_vertices(&lab, h.num_vertices()), canonical_form(&h).unwrap().to_hypergraph());
        }

        #[test]
        fn aut_matches_brute_force(h in arb_hypergraph()) {
            prop_assert_eq!(automorphism_count(&h).unwrap(), brute_aut(&h));
        }

        #[test]
        fn distinct_keys_mean_non_isomorphic(a in arb_hypergraph(), b in arb_hypergraph()) {
            if a.num_vertices() == b.num_vertices() {
                let n = a.num_vertices();
                let mut perm: Vec<u32> = (0..n as u32).collect();
                let mut iso = false;
                permute(&mut perm, 0, &mut |p| iso |= a.map_vertices(p, n) == b);
                prop_assert_eq!(iso, is_isomorphic(&a, &b).unwrap());
            }
        }
    }
}
