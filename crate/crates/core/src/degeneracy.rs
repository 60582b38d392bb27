//! `l`-degeneracy by greedy peeling, and the orientations it induces.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::hypercore::{induced_trimmed_mask, Dah, Hypergraph, Level, TrimConfig, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyResult {
    /// Deletion order, first deleted first.
    pub ordering: Vec<Vertex>,
    pub kappa_l: usize,
    pub max_l_outdegree: usize,
}

/// Repeatedly deletes a minimum-degree vertex of the current induced
/// `l`-trimmed subhypergraph (lowest id on ties).
///
/// Each edge carries a counter of deleted members and dies once that counter
/// exceeds `l` or it runs out of members. Two live edges whose remaining
/// members coincide are the same trimmed edge; the one with more deletions is
/// dropped for good, since the survivor outlives it from then on.
pub fn compute_ordering(g: &Hypergraph, l: Level) -> DegeneracyResult {
    let (ordering, kappa_l) = peel(g, l);
    let dah = Dah::new(g.clone(), &ordering).expect("peeling order is a permutation");
    DegeneracyResult {
        max_l_outdegree: max_l_outdegree(&dah, l),
        ordering,
        kappa_l,
    }
}

/// Deletion order and `κ_l`, without the outdegree pass.
pub(crate) fn peel(g: &Hypergraph, l: Level) -> (Vec<Vertex>, usize) {
    let lr = l.resolve(g.rank());
    let n = g.num_vertices();
    let edges = g.edges();
    // members and incidence in compressed rows
    let mut edge_start = Vec::with_capacity(edges.len() + 1);
    let mut members: Vec<Vertex> = Vec::new();
    let mut inc_start = vec![0usize; n + 1];
    for e in edges {
        edge_start.push(members.len());
        members.extend_from_slice(e);
        for &v in e {
            inc_start[v as usize + 1] += 1;
        }
    }
    edge_start.push(members.len());
    let member = |i: usize| &members[edge_start[i]..edge_start[i + 1]];
    for v in 0..n {
        inc_start[v + 1] += inc_start[v];
    }
    let mut fill = inc_start.clone();
    let mut inc = vec![0usize; inc_start[n]];
    for (i, e) in edges.iter().enumerate() {
        for &v in e {
            inc[fill[v as usize]] = i;
            fill[v as usize] += 1;
        }
    }
    let incident = |v: Vertex| &inc[inc_start[v as usize]..inc_start[v as usize + 1]];

    let mut deg: Vec<usize> = (0..n).map(|v| inc_start[v + 1] - inc_start[v]).collect();
    let mut heap = MinTree::new(&deg);
    let mut deleted_count = vec![0usize; edges.len()];
    let mut alive = vec![true; edges.len()];
    let mut removed = vec![false; n];
    // live edges with at least one deletion, by remaining members; live
    // untouched edges are found by binary search in `edges`
    let mut trimmed: FxHashMap<Vec<Vertex>, usize> = FxHashMap::default();

    let drop_edge = |i: usize,
                     alive: &mut Vec<bool>,
                     removed: &[bool],
                     deg: &mut Vec<usize>,
                     heap: &mut MinTree| {
        alive[i] = false;
        for &w in member(i) {
            if !removed[w as usize] {
                deg[w as usize] -= 1;
                heap.set(w, deg[w as usize]);
            }
        }
    };

    let mut ordering = Vec::with_capacity(n);
    let mut kappa = 0;
    while let Some((d, v)) = heap.min() {
        heap.remove(v);
        kappa = kappa.max(d);
        ordering.push(v);
        let live: Vec<usize> = incident(v).iter().copied().filter(|&i| alive[i]).collect();
        for &i in &live {
            if deleted_count[i] > 0 {
                let old: Vec<Vertex> = member(i).iter().copied().filter(|&w| !removed[w as usize]).collect();
                trimmed.remove(&old);
            }
        }
        removed[v as usize] = true;

        for i in live {
            deleted_count[i] += 1;
            if deleted_count[i] > lr || deleted_count[i] == member(i).len() {
                drop_edge(i, &mut alive, &removed, &mut deg, &mut heap);
                continue;
            }
            let key: Vec<Vertex> = member(i).iter().copied().filter(|&w| !removed[w as usize]).collect();
            let rival = trimmed.get(&key).copied().or_else(|| {
                edges
                    .binary_search(&key)
                    .ok()
                    .filter(|&j| alive[j] && deleted_count[j] == 0)
            });
            match rival {
                None => {
                    trimmed.insert(key, i);
                }
                Some(j) if deleted_count[j] <= deleted_count[i] => {
                    drop_edge(i, &mut alive, &removed, &mut deg, &mut heap);
                }
                Some(j) => {
                    drop_edge(j, &mut alive, &removed, &mut deg, &mut heap);
                    trimmed.insert(key, i);
                }
            }
        }
    }

    (ordering, kappa)
}

/// Tournament tree over vertices holding `(degree, id)` packed into one
/// word, so the minimum is the lowest id among minimum degrees. Stays small
/// enough to live in cache, unlike a heap of stale entries.
struct MinTree {
    leaves: usize,
    tree: Vec<u64>,
}

impl MinTree {
    fn new(deg: &[usize]) -> Self {
        let leaves = deg.len().next_power_of_two();
        let mut tree = vec![u64::MAX; 2 * leaves];
        for (v, &d) in deg.iter().enumerate() {
            tree[leaves + v] = Self::key(d, v as Vertex);
        }
        for i in (1..leaves).rev() {
            tree[i] = tree[2 * i].min(tree[2 * i + 1]);
        }
        MinTree { leaves, tree }
    }

    fn key(d: usize, v: Vertex) -> u64 {
        (d as u64) << 32 | v as u64
    }

    fn min(&self) -> Option<(usize, Vertex)> {
        let k = *self.tree.get(1)?;
        (k != u64::MAX).then(|| ((k >> 32) as usize, k as Vertex))
    }

    fn set(&mut self, v: Vertex, d: usize) {
        self.put(v, Self::key(d, v));
    }

    fn remove(&mut self, v: Vertex) {
        self.put(v, u64::MAX);
    }

    fn put(&mut self, v: Vertex, k: u64) {
        let mut i = self.leaves + v as usize;
        self.tree[i] = k;
        while i > 1 {
            i /= 2;
            let m = self.tree[2 * i].min(self.tree[2 * i + 1]);
            if self.tree[i] == m {
                break;
            }
            self.tree[i] = m;
        }
    }
}

/// Orients `g` by `ordering` (first listed vertex first).
pub fn orient(g: &Hypergraph, ordering: &[Vertex]) -> Result<Dah> {
    Dah::new(g.clone(), ordering)
}

pub fn max_l_outdegree(d: &Dah, l: Level) -> usize {
    d.l_skeleton(l).max_out_degree()
}

pub const MAX_BRUTE_DEGENERACY_VERTICES: usize = 16;

/// Maximum over nonempty vertex sets of the minimum degree of the induced
/// `l`-trimmed subhypergraph, arity-1 trimmed edges included.
pub fn brute_degeneracy(g: &Hypergraph, l: Level) -> Result<usize> {
    let n = g.num_vertices();
    Error::check_guard("vertices for brute-force degeneracy", n, MAX_BRUTE_DEGENERACY_VERTICES)?;
    let cfg = TrimConfig::new(l, true);
    let mut best = 0;
    let mut inside = vec![false; n];
    for mask in 1u32..(1u32 << n) {
        for (v, b) in inside.iter_mut().enumerate() {
            *b = mask >> v & 1 == 1;
        }
        let sub = induced_trimmed_mask(g, &inside, cfg).graph;
        let mut deg = vec![0usize; sub.num_vertices()];
        for e in sub.edges() {
            for &v in e {
                deg[v as usize] += 1;
            }
        }
        best = best.max(deg.into_iter().min().unwrap_or(0));
    }
    Ok(best)
}
