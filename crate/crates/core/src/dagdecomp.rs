//! Reachability hypergraphs, α-acyclicity by GYO reduction, DAG-tree
//! decompositions and DAG-treewidth.

use crate::error::{Error, Result};
use crate::hypercore::{clique_completion, reach_set, Dah, Digraph, Hypergraph, Level, Vertex};

/// Rooted tree over bags of sources; `parent[i]` is `None` only at the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DagTreeDecomposition {
    pub bags: Vec<Vec<Vertex>>,
    pub parent: Vec<Option<usize>>,
}

impl DagTreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn root(&self) -> usize {
        self.parent.iter().position(Option::is_none).expect("tree has a root")
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.bags.len()];
        for (i, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                ch[*p].push(i);
            }
        }
        ch
    }

    /// Bags in an order where every child precedes its parent.
    pub fn post_order(&self) -> Vec<usize> {
        let ch = self.children();
        let mut out = Vec::with_capacity(self.bags.len());
        let mut stack = vec![(self.root(), false)];
        while let Some((b, done)) = stack.pop() {
            if done {
                out.push(b);
            } else {
                stack.push((b, true));
                stack.extend(ch[b].iter().map(|&c| (c, false)));
            }
        }
        out
    }

    /// Bag ids of the subtree rooted at `b`.
    pub fn subtree(&self, b: usize) -> Vec<usize> {
        let ch = self.children();
        let mut out = vec![b];
        let mut i = 0;
        while i < out.len() {
            out.extend_from_slice(&ch[out[i]]);
            i += 1;
        }
        out
    }

    /// Union of the bags below and including `b`.
    pub fn down_closure(&self, b: usize) -> Vec<Vertex> {
        let mut s: Vec<Vertex> = self.subtree(b).iter().flat_map(|&i| self.bags[i].clone()).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Independent check of the three decomposition axioms against `d`.
    pub fn is_valid_for(&self, d: &Digraph) -> bool {
        let sources = d.sources();
        let k = self.bags.len();
        if k == 0 || self.parent.len() != k || self.parent.iter().filter(|p| p.is_none()).count() != 1 {
            return sources.is_empty() && k == 0;
        }
        // parent links must form a tree reaching the root
        for mut b in 0..k {
            let mut steps = 0;
            while let Some(p) = self.parent[b] {
                b = p;
                steps += 1;
                if steps > k {
                    return false;
                }
            }
        }
        let mut covered: Vec<Vertex> = self.bags.iter().flatten().copied().collect();
        covered.sort_unstable();
        covered.dedup();
        if self.bags.iter().flatten().any(|v| sources.binary_search(v).is_err()) || covered != sources {
            return false;
        }
        let reach: Vec<Vec<bool>> = self
            .bags
            .iter()
            .map(|b| {
                let mut m = vec![false; d.num_vertices()];
                for v in reach_set(d, b) {
                    m[v as usize] = true;
                }
                m
            })
            .collect();
        let path = |a: usize, b: usize| -> Vec<usize> {
            let up = |mut x: usize| {
                let mut chain = vec![x];
                while let Some(p) = self.parent[x] {
                    chain.push(p);
                    x = p;
                }
                chain
            };
            let (ua, ub) = (up(a), up(b));
            let meet = *ua.iter().find(|x| ub.contains(x)).unwrap();
            let mut p: Vec<usize> = ua.iter().copied().take_while(|&x| x != meet).collect();
            p.push(meet);
            p.extend(ub.iter().copied().take_while(|&x| x != meet));
            p
        };
        for a in 0..k {
            for b in a + 1..k {
                for mid in path(a, b) {
                    for v in 0..d.num_vertices() {
                        if reach[a][v] && reach[b][v] && !reach[mid][v] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// One hyperedge `Reach(s)` per source `s`, in source order. Distinct
/// sources always have distinct reach sets since a source is reachable only
/// from itself.
pub fn reachability_hypergraph(d: &Digraph) -> Result<Hypergraph> {
    Ok(Hypergraph::new(d.num_vertices(), source_reaches(d)?.into_iter().map(|(_, r)| r))?)
}

fn source_reaches(d: &Digraph) -> Result<Vec<(Vertex, Vec<Vertex>)>> {
    if !d.is_acyclic() {
        return Err(Error::input("digraph has a directed cycle"));
    }
    Ok(d.sources().into_iter().map(|s| (s, reach_set(d, &[s]))).collect())
}

/// Join tree over an edge list: `parent[i]` for each edge, `None` at the root.
pub type JoinTree = Vec<Option<usize>>;

/// GYO reduction over an explicit edge list (duplicates allowed). Returns a
/// join tree when the list is α-acyclic.
pub fn gyo_join_tree(n: usize, edges: &[Vec<Vertex>]) -> Option<JoinTree> {
    let k = edges.len();
    let mut parent: JoinTree = vec![None; k];
    if k == 0 {
        return Some(parent);
    }
    let mut cur: Vec<Vec<bool>> = edges
        .iter()
        .map(|e| {
            let mut m = vec![false; n];
            for &v in e {
                m[v as usize] = true;
            }
            m
        })
        .collect();
    let mut alive = vec![true; k];
    let mut left = k;
    loop {
        let mut changed = false;
        // vertices in exactly one live edge
        for v in 0..n {
            let holders: Vec<usize> = (0..k).filter(|&i| alive[i] && cur[i][v]).collect();
            if holders.len() == 1 {
                cur[holders[0]][v] = false;
                changed = true;
            }
        }
        // an edge contained in another live edge
        'outer: for i in 0..k {
            if !alive[i] || left == 1 {
                continue;
            }
            for j in 0..k {
                if j != i && alive[j] && (0..n).all(|v| !cur[i][v] || cur[j][v]) {
                    alive[i] = false;
                    parent[i] = Some(j);
                    left -= 1;
                    changed = true;
                    continue 'outer;
                }
            }
        }
        if left == 1 {
            return Some(parent);
        }
        if !changed {
            return None;
        }
    }
}

pub fn is_alpha_acyclic(f: &Hypergraph) -> Option<JoinTree> {
    gyo_join_tree(f.num_vertices(), f.edges())
}

pub const MAX_DECOMPOSITION_SOURCES: usize = 12;

/// A decomposition of width at most `tau_max`, if one exists.
///
/// Width 1 comes straight from the join tree of the reachability
/// hypergraph. Wider bags are searched over antichain families of source
/// sets: dropping a bag contained in another is a GYO step, so antichains
/// suffice, and a family works exactly when its reach sets are α-acyclic.
pub fn dag_tree_decomposition(d: &Digraph, tau_max: usize) -> Result<Option<DagTreeDecomposition>> {
    let sources = source_reaches(d)?;
    let s = sources.len();
    Error::check_guard("decomposition sources", s, MAX_DECOMPOSITION_SOURCES)?;
    if s == 0 {
        return Ok(Some(DagTreeDecomposition {
            bags: Vec::new(),
            parent: Vec::new(),
        }));
    }
    let n = d.num_vertices();
    let reaches: Vec<Vec<Vertex>> = sources.iter().map(|(_, r)| r.clone()).collect();
    if tau_max >= 1 {
        if let Some(tree) = gyo_join_tree(n, &reaches) {
            return Ok(Some(DagTreeDecomposition {
                bags: sources.iter().map(|&(x, _)| vec![x]).collect(),
                parent: tree,
            }));
        }
    }
    for t in 2..=tau_max.min(s) {
        if t == s {
            return Ok(Some(DagTreeDecomposition {
                bags: vec![sources.iter().map(|&(x, _)| x).collect()],
                parent: vec![None],
            }));
        }
        if let Some(td) = search_width(d, &sources, t) {
            return Ok(Some(td));
        }
    }
    Ok(None)
}

fn search_width(d: &Digraph, sources: &[(Vertex, Vec<Vertex>)], t: usize) -> Option<DagTreeDecomposition> {
    let s = sources.len();
    let n = d.num_vertices();
    // candidate bags as source-index masks with their reach sets
    let mut cands: Vec<(u32, Vec<Vertex>)> = Vec::new();
    for mask in 1u32..(1 << s) {
        if mask.count_ones() as usize <= t {
            let members: Vec<Vertex> = (0..s).filter(|&i| mask >> i & 1 == 1).map(|i| sources[i].0).collect();
            cands.push((mask, reach_set(d, &members)));
        }
    }
    let full = (1u32 << s) - 1;
    let mut chosen: Vec<usize> = Vec::new();
    let found = antichains(&cands, 0, 0, full, &mut chosen, &mut |fam| {
        let edges: Vec<Vec<Vertex>> = fam.iter().map(|&i| cands[i].1.clone()).collect();
        gyo_join_tree(n, &edges).map(|tree| (fam.to_vec(), tree))
    })?;
    let (fam, tree) = found;
    let bags = fam
        .iter()
        .map(|&i| (0..s).filter(|&j| cands[i].0 >> j & 1 == 1).map(|j| sources[j].0).collect())
        .collect();
    Some(DagTreeDecomposition { bags, parent: tree })
}

type Found = (Vec<usize>, JoinTree);

fn antichains(
    cands: &[(u32, Vec<Vertex>)],
    from: usize,
    covered: u32,
    full: u32,
    chosen: &mut Vec<usize>,
    test: &mut impl FnMut(&[usize]) -> Option<Found>,
) -> Option<Found> {
    if covered == full {
        if let Some(f) = test(chosen) {
            return Some(f);
        }
    }
    for i in from..cands.len() {
        let m = cands[i].0;
        if chosen.iter().any(|&j| {
            let o = cands[j].0;
            o & m == m || o & m == o
        }) {
            continue;
        }
        chosen.push(i);
        let r = antichains(cands, i + 1, covered | m, full, chosen, test);
        chosen.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

/// Smallest width admitting a decomposition, with a witness.
pub fn dag_treewidth(d: &Digraph) -> Result<(usize, DagTreeDecomposition)> {
    let s = d.sources().len();
    for t in 1..=s.max(1) {
        if let Some(td) = dag_tree_decomposition(d, t)? {
            return Ok((td.width().max(1), td));
        }
    }
    unreachable!("a single bag of all sources is always a decomposition")
}

pub const MAX_ORIENTATION_VERTICES: usize = 10;

/// Every acyclic orientation of `h` as a DAH, one per distinct assignment of
/// edge orders. These are the acyclic orientations of the clique completion.
pub fn labelled_orientations(h: &Hypergraph) -> Result<Vec<Dah>> {
    let n = h.num_vertices();
    Error::check_guard("pattern vertices for orientation enumeration", n, MAX_ORIENTATION_VERTICES)?;
    let pairs: Vec<(Vertex, Vertex)> = clique_completion(h).edges().iter().map(|e| (e[0], e[1])).collect();
    let mut out: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut result = Vec::new();
    orient_pairs(&pairs, 0, &mut out, &mut |out| {
        let d = Digraph::new(n, out.iter().enumerate().flat_map(|(a, l)| l.iter().map(move |&b| (a as Vertex, b))))
            .expect("arcs in range");
        let order = d.topological_order().expect("acyclic by construction");
        result.push(Dah::new(h.clone(), &order).expect("topological order is a permutation"));
    });
    Ok(result)
}

fn orient_pairs(
    pairs: &[(Vertex, Vertex)],
    i: usize,
    out: &mut Vec<Vec<Vertex>>,
    emit: &mut impl FnMut(&[Vec<Vertex>]),
) {
    if i == pairs.len() {
        emit(out);
        return;
    }
    let (a, b) = pairs[i];
    for (x, y) in [(a, b), (b, a)] {
        if !reaches(out, y, x) {
            out[x as usize].push(y);
            orient_pairs(pairs, i + 1, out, emit);
            out[x as usize].pop();
        }
    }
}

fn reaches(out: &[Vec<Vertex>], from: Vertex, to: Vertex) -> bool {
    let mut seen = vec![false; out.len()];
    let mut stack = vec![from];
    seen[from as usize] = true;
    while let Some(v) = stack.pop() {
        if v == to {
            return true;
        }
        for &w in &out[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                stack.push(w);
            }
        }
    }
    false
}

#[derive(Clone, Debug)]
pub struct DagTreewidthReport {
    pub tau: usize,
    /// An orientation attaining `tau` and its optimal decomposition.
    pub orientation: Dah,
    pub decomposition: DagTreeDecomposition,
}

/// Maximum over acyclic orientations of the DAG-treewidth of the
/// `l`-skeleton.
pub fn l_dag_treewidth(h: &Hypergraph, l: Level) -> Result<DagTreewidthReport> {
    let mut best: Option<DagTreewidthReport> = None;
    for dah in labelled_orientations(h)? {
        let (tau, td) = dag_treewidth(&dah.l_skeleton(l))?;
        if best.as_ref().is_none_or(|b| tau > b.tau) {
            best = Some(DagTreewidthReport {
                tau,
                orientation: dah,
                decomposition: td,
            });
        }
    }
    Ok(best.expect("at least one orientation exists"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: usize) -> Hypergraph {
        let es: Vec<Vec<Vertex>> = (0..n as Vertex).map(|i| vec![i, (i + 1) % n as Vertex]).collect();
        Hypergraph::new(n, es).unwrap()
    }

    #[test]
    fn reachability_examples() {
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(reachability_hypergraph(&path).unwrap().edges(), &[vec![0, 1, 2]]);
        let vee = Digraph::new(3, [(0, 2), (1, 2)]).unwrap();
        assert_eq!(reachability_hypergraph(&vee).unwrap().edges(), &[vec![0, 2], vec![1, 2]]);
        let iso = Digraph::new(3, []).unwrap();
        assert_eq!(reachability_hypergraph(&iso).unwrap().num_edges(), 3);
        let cyc = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert!(reachability_hypergraph(&cyc).is_err());
    }

    #[test]
    fn alpha_acyclicity_examples() {
        assert!(is_alpha_acyclic(&Hypergraph::from_edges(3, &[&[0, 1, 2]])).is_some());
        let tri = cycle(3);
        assert!(is_alpha_acyclic(&tri).is_none());
        let covered = Hypergraph::from_edges(3, &[&[0, 1], &[1, 2], &[0, 2], &[0, 1, 2]]);
        assert!(is_alpha_acyclic(&covered).is_some());
        assert!(is_alpha_acyclic(&Hypergraph::empty(3)).is_some());
    }

    #[test]
    fn decomposition_examples() {
        let star = Digraph::new(3, [(0, 1), (0, 2)]).unwrap();
        let td = dag_tree_decomposition(&star, 1).unwrap().unwrap();
        assert_eq!(td.bags, vec![vec![0]]);
        // C6 with alternating sources 0, 2, 4
        let c6 = Digraph::new(6, [(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (0, 5)]).unwrap();
        assert!(dag_tree_decomposition(&c6, 1).unwrap().is_none());
        let td = dag_tree_decomposition(&c6, 2).unwrap().unwrap();
        assert_eq!(td.width(), 2);
        assert!(td.is_valid_for(&c6));
        assert_eq!(dag_treewidth(&c6).unwrap().0, 2);
    }

    #[test]
    fn treewidth_of_patterns() {
        for l in [Level::Finite(0), Level::Finite(1), Level::Infinity] {
            assert_eq!(l_dag_treewidth(&cycle(6), l).unwrap().tau, 2);
            assert_eq!(l_dag_treewidth(&cycle(5), l).unwrap().tau, 1);
            let e = Hypergraph::from_edges(4, &[&[0, 1, 2, 3]]);
            assert_eq!(l_dag_treewidth(&e, l).unwrap().tau, 1);
        }
    }

    #[test]
    fn orientation_counts() {
        // acyclic orientations of a graph: triangle 6, path on 3 vertices 4
        assert_eq!(labelled_orientations(&cycle(3)).unwrap().len(), 6);
        let p3 = Hypergraph::from_edges(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(labelled_orientations(&p3).unwrap().len(), 4);
        assert_eq!(labelled_orientations(&cycle(6)).unwrap().len(), 62);
    }

    /// α-acyclicity through the two forbidden configurations: a set `S`
    /// (|S| ≥ 3) whose pairwise edge traces form a Hamiltonian cycle on `S`
    /// with no larger trace, or a set all of whose co-singletons are edge
    /// traces while no edge covers it.
    fn acyclic_by_conditions(h: &Hypergraph) -> bool {
        let n = h.num_vertices();
        for mask in 1u32..(1 << n) {
            let s: Vec<Vertex> = (0..n as Vertex).filter(|&v| mask >> v & 1 == 1).collect();
            if s.len() < 3 {
                continue;
            }
            let traces: Vec<Vec<Vertex>> = h
                .edges()
                .iter()
                .map(|e| e.iter().copied().filter(|v| mask >> v & 1 == 1).collect::<Vec<_>>())
                .collect();
            // simplex condition
            let covered = traces.iter().any(|t| t.len() == s.len());
            let all_faces = s.iter().all(|&x| {
                traces.iter().any(|t| t.len() == s.len() - 1 && !t.contains(&x))
            });
            if all_faces && !covered {
                return false;
            }
            // cycle condition
            let big: Vec<&Vec<Vertex>> = traces.iter().filter(|t| t.len() >= 2).collect();
            if !big.is_empty() && big.iter().all(|t| t.len() == 2) {
                let mut adj = vec![Vec::new(); n];
                let mut pairs: Vec<&Vec<Vertex>> = big.clone();
                pairs.sort();
                pairs.dedup();
                for p in &pairs {
                    adj[p[0] as usize].push(p[1]);
                    adj[p[1] as usize].push(p[0]);
                }
                if pairs.len() == s.len() && s.iter().all(|&v| adj[v as usize].len() == 2) {
                    let sub = Hypergraph::new(n, pairs.iter().map(|p| p.iter().copied())).unwrap();
                    let comps = sub.components().into_iter().filter(|c| c.len() > 1).count();
                    if comps == 1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn condition_oracle_examples() {
        assert!(!acyclic_by_conditions(&cycle(3)));
        assert!(!acyclic_by_conditions(&cycle(4)));
        let tet = Hypergraph::from_edges(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        assert!(!acyclic_by_conditions(&tet));
        assert!(acyclic_by_conditions(&Hypergraph::from_edges(3, &[&[0, 1], &[1, 2], &[0, 2], &[0, 1, 2]])));
    }

    #[test]
    fn gyo_matches_conditions_exhaustive_small() {
        // all hypergraphs on 4 vertices with edges of arity >= 2 and at most 4 edges
        let n = 4u32;
        let cands: Vec<Vec<Vertex>> = (1u32..16)
            .filter(|m| m.count_ones() >= 2)
            .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
            .collect();
        for fam in 0u32..(1 << cands.len()) {
            if fam.count_ones() > 4 {
                continue;
            }
            let es: Vec<Vec<Vertex>> = (0..cands.len()).filter(|i| fam >> i & 1 == 1).map(|i| cands[i].clone()).collect();
            let h = Hypergraph::new(n as usize, es).unwrap();
            assert_eq!(is_alpha_acyclic(&h).is_some(), acyclic_by_conditions(&h), "{h:?}");
        }
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (2usize..7).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::btree_set(0..n as u32, 1..=4.min(n)), 0..7)
                .prop_map(move |es| Hypergraph::new(n, es).unwrap())
        })
    }

    fn arb_dag() -> impl Strategy<Value = Digraph> {
        (2usize..8).prop_flat_map(|n| {
            proptest::collection::vec((0..n as u32, 0..n as u32), 0..12).prop_map(move |arcs| {
                Digraph::new(n, arcs.into_iter().filter(|(a, b)| a < b)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn gyo_agrees_with_conditions(h in arb_hypergraph()) {
            prop_assert_eq!(is_alpha_acyclic(&h).is_some(), acyclic_by_conditions(&h));
        }

        #[test]
        fn width_one_iff_reach_hypergraph_acyclic(d in arb_dag()) {
            let one = dag_tree_decomposition(&d, 1).unwrap();
            let acyclic = is_alpha_acyclic(&reachability_hypergraph(&d).unwrap()).is_some();
            prop_assert_eq!(one.is_some(), acyclic);
            let (tau, td) = dag_treewidth(&d).unwrap();
            prop_assert!(td.is_valid_for(&d));
            prop_assert_eq!(td.width().max(1), tau);
            if tau > 1 {
                prop_assert!(dag_tree_decomposition(&d, tau - 1).unwrap().is_none());
            }
        }
    }
}
