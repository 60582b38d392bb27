use std::collections::VecDeque;

use super::{Hypergraph, Level, Vertex};
use crate::error::{Error, Result};

/// Directed simple graph in compressed sparse rows: sorted, deduplicated
/// out-lists laid out back to back.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl Digraph {
    /// Builds from an arc list. Self-arcs are rejected, duplicates collapse.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut list: Vec<(Vertex, Vertex)> = Vec::new();
        for (a, b) in arcs {
            if a as usize >= n || b as usize >= n {
                return Err(Error::input(format!("arc {a}->{b} outside 0..{n}")));
            }
            if a == b {
                return Err(Error::input(format!("self-arc at {a}")));
            }
            list.push((a, b));
        }
        list.sort_unstable();
        list.dedup();
        let mut offsets = vec![0usize; n + 1];
        for &(a, _) in &list {
            offsets[a as usize + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        Ok(Digraph {
            offsets,
            targets: list.into_iter().map(|(_, b)| b).collect(),
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_arcs(&self) -> usize {
        self.targets.len()
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn has_arc(&self, a: Vertex, b: Vertex) -> bool {
        self.out_neighbors(a).binary_search(&b).is_ok()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.num_vertices() as Vertex).flat_map(move |a| self.out_neighbors(a).iter().map(move |&b| (a, b)))
    }

    pub fn max_out_degree(&self) -> usize {
        self.offsets.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0)
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices()];
        for &b in &self.targets {
            deg[b as usize] += 1;
        }
        deg
    }

    /// Vertices with no incoming arc, ascending.
    pub fn sources(&self) -> Vec<Vertex> {
        self.in_degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| v as Vertex)
            .collect()
    }

    /// Kahn order, or `None` when a directed cycle exists.
    pub fn topological_order(&self) -> Option<Vec<Vertex>> {
        let mut deg = self.in_degrees();
        let n = self.num_vertices();
        let mut queue: VecDeque<Vertex> = (0..n as Vertex).filter(|&v| deg[v as usize] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in self.out_neighbors(v) {
                deg[w as usize] -= 1;
                if deg[w as usize] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }
}

/// Forward closure of `s`, sorted ascending.
pub fn reach_set(d: &Digraph, s: &[Vertex]) -> Vec<Vertex> {
    let mut seen = vec![false; d.num_vertices()];
    let mut stack: Vec<Vertex> = Vec::new();
    for &v in s {
        if !seen[v as usize] {
            seen[v as usize] = true;
            stack.push(v);
        }
    }
    while let Some(v) = stack.pop() {
        for &w in d.out_neighbors(v) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                stack.push(w);
            }
        }
    }
    (0..d.num_vertices() as Vertex).filter(|&v| seen[v as usize]).collect()
}

/// Directed acyclic hypergraph: a hypergraph plus a total vertex order.
/// Every edge is also kept as a list sorted by that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dah {
    base: Hypergraph,
    position: Vec<u32>,
    ordered: Vec<Vec<Vertex>>,
}

impl Dah {
    /// `ordering` lists the vertices first to last.
    pub fn new(base: Hypergraph, ordering: &[Vertex]) -> Result<Self> {
        let n = base.num_vertices();
        if ordering.len() != n {
            return Err(Error::input(format!(
                "ordering has {} entries for {n} vertices",
                ordering.len()
            )));
        }
        let mut position = vec![u32::MAX; n];
        for (i, &v) in ordering.iter().enumerate() {
            if v as usize >= n || position[v as usize] != u32::MAX {
                return Err(Error::input(format!("ordering is not a permutation (at {v})")));
            }
            position[v as usize] = i as u32;
        }
        Ok(Self::from_positions(base, position))
    }

    pub(crate) fn from_positions(base: Hypergraph, position: Vec<u32>) -> Self {
        let ordered = base
            .edges()
            .iter()
            .map(|e| {
                let mut o = e.clone();
                o.sort_unstable_by_key(|&v| position[v as usize]);
                o
            })
            .collect();
        Dah {
            base,
            position,
            ordered,
        }
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn num_vertices(&self) -> usize {
        self.base.num_vertices()
    }

    pub fn position(&self, v: Vertex) -> u32 {
        self.position[v as usize]
    }

    /// Vertices first to last.
    pub fn ordering(&self) -> Vec<Vertex> {
        let mut order = vec![0; self.position.len()];
        for (v, &p) in self.position.iter().enumerate() {
            order[p as usize] = v as Vertex;
        }
        order
    }

    /// Edges as lists in order, parallel to `base().edges()`.
    pub fn ordered_edges(&self) -> &[Vec<Vertex>] {
        &self.ordered
    }

    /// Arcs from each of the first `l+1` vertices of every ordered edge to
    /// all later vertices of that edge.
    pub fn l_skeleton(&self, l: Level) -> Digraph {
        let l = l.resolve(self.base.rank());
        let mut arcs = Vec::new();
        for e in &self.ordered {
            let heads = (l + 1).min(e.len());
            for i in 0..heads {
                arcs.extend(e[i + 1..].iter().map(|&b| (e[i], b)));
            }
        }
        Digraph::new(self.num_vertices(), arcs).expect("skeleton arcs join distinct vertices in range")
    }

    /// Vertices that come first in every edge containing them.
    pub fn sources(&self) -> Vec<Vertex> {
        let mut not_source = vec![false; self.num_vertices()];
        for e in &self.ordered {
            for &v in &e[1..] {
                not_source[v as usize] = true;
            }
        }
        (0..self.num_vertices() as Vertex).filter(|&v| !not_source[v as usize]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arcs(d: &Digraph) -> Vec<(Vertex, Vertex)> {
        d.arcs().collect()
    }

    #[test]
    fn skeleton_examples() {
        let g = Hypergraph::from_edges(3, &[&[0, 1, 2]]);
        let d = Dah::new(g, &[0, 1, 2]).unwrap();
        assert_eq!(arcs(&d.l_skeleton(Level::Finite(0))), vec![(0, 1), (0, 2)]);
        assert_eq!(arcs(&d.l_skeleton(Level::Finite(1))), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(d.l_skeleton(Level::Infinity), d.l_skeleton(Level::Finite(1)));
    }

    #[test]
    fn skeleton_respects_ordering() {
        let g = Hypergraph::from_edges(3, &[&[0, 1, 2]]);
        let d = Dah::new(g, &[2, 0, 1]).unwrap();
        assert_eq!(d.ordered_edges(), &[vec![2, 0, 1]]);
        assert_eq!(arcs(&d.l_skeleton(Level::Finite(0))), vec![(2, 0), (2, 1)]);
        assert_eq!(d.sources(), vec![2]);
    }

    #[test]
    fn reach_examples() {
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(reach_set(&path, &[0]), vec![0, 1, 2]);
        assert_eq!(reach_set(&path, &[2]), vec![2]);
        let vee = Digraph::new(3, [(0, 2), (1, 2)]).unwrap();
        assert_eq!(reach_set(&vee, &[0, 1]), vec![0, 1, 2]);
        assert_eq!(vee.sources(), vec![0, 1]);
    }

    #[test]
    fn digraph_validation() {
        assert!(Digraph::new(2, [(0, 0)]).is_err());
        assert!(Digraph::new(2, [(0, 2)]).is_err());
        let d = Digraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(d.num_arcs(), 1);
        let cyc = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!cyc.is_acyclic());
    }

    #[test]
    fn ordering_must_be_permutation() {
        let g = Hypergraph::from_edges(3, &[&[0, 1]]);
        assert!(Dah::new(g.clone(), &[0, 0, 1]).is_err());
        assert!(Dah::new(g, &[0, 1]).is_err());
    }
}
