//! Pattern-side analysis: orientation classes, contract and quotient bases,
//! the obstruction search and the classifier built on it.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::dagdecomp::{l_dag_treewidth, labelled_orientations, DagTreewidthReport};
use crate::error::{Error, Result};
use crate::hypercore::{
    automorphism_count, canonical_dah, canonical_form, clique_completion, induced_trimmed_mask,
    CanonicalKey, Dah, Hypergraph, Level, TrimConfig, UnionFind, Vertex,
};

/// One isomorphism class of acyclic orientations, with the number of
/// labelled orientations (distinct edge-order assignments) it contains.
#[derive(Clone, Debug)]
pub struct OrientationClass {
    pub dah: Dah,
    pub multiplicity: u64,
}

/// Acyclic orientations of `h` up to isomorphism.
pub fn acyclic_orientations(h: &Hypergraph) -> Result<Vec<OrientationClass>> {
    let mut classes: BTreeMap<CanonicalKey, OrientationClass> = BTreeMap::new();
    for dah in labelled_orientations(h)? {
        let key = canonical_dah(&dah)?;
        classes
            .entry(key)
            .and_modify(|c| c.multiplicity += 1)
            .or_insert(OrientationClass { dah, multiplicity: 1 });
    }
    Ok(classes.into_values().collect())
}

/// All set partitions of `0..n` as block labels in restricted growth form.
pub fn set_partitions(n: usize) -> Vec<Vec<u32>> {
    fn go(i: usize, n: usize, cur: &mut Vec<u32>, max: u32, out: &mut Vec<Vec<u32>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur.push(b);
            go(i + 1, n, cur, max.max(b), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cur = vec![0];
    go(1, n, &mut cur, 0, &mut out);
    out
}

fn block_count(p: &[u32]) -> usize {
    p.iter().map(|&b| b as usize + 1).max().unwrap_or(0)
}

/// Quotient by a partition: blocks become vertices, edges map blockwise and
/// merge under set semantics.
pub fn quotient(h: &Hypergraph, partition: &[u32]) -> Hypergraph {
    h.map_vertices(partition, block_count(partition))
}

fn blocks_connected(h: &Hypergraph, partition: &[u32]) -> bool {
    let n = h.num_vertices();
    let mut uf = UnionFind::new(n);
    for e in clique_completion(h).edges() {
        if partition[e[0] as usize] == partition[e[1] as usize] {
            uf.union(e[0] as usize, e[1] as usize);
        }
    }
    (0..n).all(|v| {
        let first = partition.iter().position(|&b| b == partition[v]).unwrap();
        uf.find(v) == uf.find(first)
    })
}

#[derive(Clone, Debug)]
pub struct ContractTerm {
    pub graph: Hypergraph,
    pub key: CanonicalKey,
    /// Number of connected partitions whose quotient lands in this class.
    pub beta: u64,
}

#[derive(Clone, Debug)]
pub struct QuotientTerm {
    pub graph: Hypergraph,
    pub key: CanonicalKey,
    pub gamma: Ratio<i128>,
}

#[derive(Clone, Debug)]
pub struct PatternBasis {
    pub contract: Vec<ContractTerm>,
    pub quotient: Vec<QuotientTerm>,
    pub aut_count: u64,
}

pub fn pattern_basis(h: &Hypergraph) -> Result<PatternBasis> {
    Ok(PatternBasis {
        contract: contract_set(h)?,
        quotient: quotient_set(h)?,
        aut_count: automorphism_count(h)?,
    })
}

/// Quotients by partitions whose blocks are connected in `h`, grouped by
/// isomorphism class. `Hom(G, h) = Σ β · (arity-preserving Hom)(G, H')`.
pub fn contract_set(h: &Hypergraph) -> Result<Vec<ContractTerm>> {
    let mut classes: BTreeMap<CanonicalKey, ContractTerm> = BTreeMap::new();
    for p in set_partitions(h.num_vertices()) {
        if !blocks_connected(h, &p) {
            continue;
        }
        let q = quotient(h, &p);
        let key = canonical_form(&q)?;
        classes
            .entry(key.clone())
            .and_modify(|t| t.beta += 1)
            .or_insert(ContractTerm {
                graph: key.to_hypergraph(),
                key,
                beta: 1,
            });
    }
    Ok(classes.into_values().collect())
}

/// Quotients by all partitions with Möbius coefficients of the partition
/// lattice: `Sub(G, h) = Σ γ · Hom(G, H')`.
pub fn quotient_set(h: &Hypergraph) -> Result<Vec<QuotientTerm>> {
    let aut = automorphism_count(h)? as i128;
    let mut classes: BTreeMap<CanonicalKey, i128> = BTreeMap::new();
    for p in set_partitions(h.num_vertices()) {
        let mut sizes = vec![0i128; block_count(&p)];
        for &b in &p {
            sizes[b as usize] += 1;
        }
        let mu: i128 = sizes
            .iter()
            .map(|&s| {
                let f: i128 = (1..s).product();
                if (s - 1) % 2 == 0 {
                    f
                } else {
                    -f
                }
            })
            .product();
        let key = canonical_form(&quotient(h, &p))?;
        *classes.entry(key).or_insert(0) += mu;
    }
    Ok(classes
        .into_iter()
        .map(|(key, mu)| QuotientTerm {
            graph: key.to_hypergraph(),
            gamma: Ratio::new(mu, aut),
            key,
        })
        .collect())
}

/// Certificate of membership in the obstruction set at some level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionWitness {
    pub core: Vec<Vertex>,
    /// Components of the ∞-trimmed subhypergraph induced off the core.
    pub components: Vec<Vec<Vertex>>,
    /// Edge ids (into the pattern's edge list) of the connector of each
    /// component.
    pub connectors: Vec<Vec<usize>>,
    /// `assignment[i]` is the component whose connector covers every core
    /// vertex except `core[i]`.
    pub assignment: Vec<usize>,
}

impl ObstructionWitness {
    fn relabel(&self, map: &[Vertex], edge_map: &[usize]) -> Self {
        let m = |vs: &Vec<Vertex>| vs.iter().map(|&v| map[v as usize]).collect();
        ObstructionWitness {
            core: m(&self.core),
            components: self.components.iter().map(m).collect(),
            connectors: self
                .connectors
                .iter()
                .map(|es| es.iter().map(|&e| edge_map[e]).collect())
                .collect(),
            assignment: self.assignment.clone(),
        }
    }
}

/// Components of `V ∖ core` where two vertices are linked when some edge
/// meets both outside the core.
fn off_core_components(h: &Hypergraph, in_core: &[bool]) -> Vec<Vec<Vertex>> {
    let n = h.num_vertices();
    let mut uf = UnionFind::new(n);
    for e in h.edges() {
        let rest: Vec<Vertex> = e.iter().copied().filter(|&v| !in_core[v as usize]).collect();
        for w in rest.windows(2) {
            uf.union(w[0] as usize, w[1] as usize);
        }
    }
    uf.groups()
        .into_iter()
        .filter(|g| !in_core[g[0] as usize])
        .collect()
}

fn core_masks(n: usize) -> impl Iterator<Item = u32> {
    (0u32..(1 << n)).filter(|m| m.count_ones() >= 3)
}

/// Checks the three obstruction conditions for a given core.
pub fn check_core(h: &Hypergraph, core: &[Vertex], l: Level) -> Option<ObstructionWitness> {
    let n = h.num_vertices();
    let lr = l.resolve(h.rank());
    let mut in_core = vec![false; n];
    for &c in core {
        in_core[c as usize] = true;
    }
    // condition 1: no trimmed edge of arity >= 2 on the core
    for e in h.edges() {
        let inside = e.iter().filter(|&&v| in_core[v as usize]).count();
        if inside >= 2 && e.len() - inside <= lr {
            return None;
        }
    }
    let components = off_core_components(h, &in_core);
    let mut comp_of = vec![usize::MAX; n];
    for (i, c) in components.iter().enumerate() {
        for &v in c {
            comp_of[v as usize] = i;
        }
    }
    let mut connectors: Vec<Vec<usize>> = vec![Vec::new(); components.len()];
    let mut spans: Vec<Vec<bool>> = vec![vec![false; n]; components.len()];
    for (ei, e) in h.edges().iter().enumerate() {
        if e.len() < 2 {
            continue;
        }
        let Some(&outside) = e.iter().find(|&&v| !in_core[v as usize]) else {
            continue;
        };
        let c = comp_of[outside as usize];
        connectors[c].push(ei);
        for &v in e {
            spans[c][v as usize] = true;
        }
    }
    let covers = |c: usize, skip: Option<Vertex>| core.iter().all(|&x| Some(x) == skip || spans[c][x as usize]);
    // condition 2
    if (0..components.len()).any(|c| covers(c, None)) {
        return None;
    }
    // condition 3
    let mut assignment = Vec::with_capacity(core.len());
    for &x in core {
        let c = (0..components.len()).find(|&c| covers(c, Some(x)))?;
        assignment.push(c);
    }
    Some(ObstructionWitness {
        core: core.to_vec(),
        components,
        connectors,
        assignment,
    })
}

/// First core (by bitmask order) making `h` an obstruction at level `l`.
pub fn is_obstruction(h: &Hypergraph, l: Level) -> Option<ObstructionWitness> {
    let n = h.num_vertices();
    core_masks(n).find_map(|m| {
        let core: Vec<Vertex> = (0..n as Vertex).filter(|&v| m >> v & 1 == 1).collect();
        check_core(h, &core, l)
    })
}

/// Split into a core `X` and connector pieces `V_i`, `E_i`, where piece `i`
/// connects every core vertex except `core[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectorSplit {
    pub core: Vec<Vertex>,
    pub parts: Vec<Vec<Vertex>>,
    pub edges: Vec<Vec<usize>>,
}

/// Whether `split` satisfies the connector formulation: every piece is
/// connected, every edge with two core vertices keeps more than `l` vertices
/// in its piece, some component of the piece touches every core vertex it
/// must connect, and no edge leaves its piece.
pub fn is_valid_split(h: &Hypergraph, split: &ConnectorSplit, l: Level) -> bool {
    let n = h.num_vertices();
    let k = split.core.len();
    let lr = l.resolve(h.rank());
    if k < 3 || split.parts.len() != k || split.edges.len() != k {
        return false;
    }
    let mut owner = vec![usize::MAX; n];
    for &x in &split.core {
        owner[x as usize] = k;
    }
    for (i, p) in split.parts.iter().enumerate() {
        for &v in p {
            if owner[v as usize] != usize::MAX {
                return false;
            }
            owner[v as usize] = i;
        }
    }
    if owner.contains(&usize::MAX) {
        return false;
    }
    let mut edge_seen = vec![false; h.num_edges()];
    for es in &split.edges {
        for &e in es {
            if edge_seen[e] {
                return false;
            }
            edge_seen[e] = true;
        }
    }
    if edge_seen.contains(&false) {
        return false;
    }
    for i in 0..k {
        let xi = split.core[i];
        let part = &split.parts[i];
        if part.is_empty() {
            return false;
        }
        let mut inside = vec![false; n];
        for &v in part {
            inside[v as usize] = true;
        }
        for &x in &split.core {
            if x != xi {
                inside[x as usize] = true;
            }
        }
        let mut uf = UnionFind::new(n);
        let mut part_uf = UnionFind::new(n);
        for &ei in &split.edges[i] {
            let e = &h.edges()[ei];
            if !e.iter().all(|&v| inside[v as usize]) {
                return false;
            }
            let in_x = e.iter().filter(|&&v| owner[v as usize] == k).count();
            let in_v = e.len() - in_x;
            if in_x >= 2 && in_v <= lr {
                return false;
            }
            for w in e.windows(2) {
                uf.union(w[0] as usize, w[1] as usize);
            }
            let pv: Vec<Vertex> = e.iter().copied().filter(|&v| owner[v as usize] == i).collect();
            for w in pv.windows(2) {
                part_uf.union(w[0] as usize, w[1] as usize);
            }
        }
        let members: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
        if members.iter().any(|&v| uf.find(v) != uf.find(members[0])) {
            return false;
        }
        let targets: Vec<Vertex> = split.core.iter().copied().filter(|&x| x != xi).collect();
        let hub = part.iter().any(|&root| {
            let r = part_uf.find(root as usize);
            targets.iter().all(|&x| {
                split.edges[i].iter().any(|&ei| {
                    let e = &h.edges()[ei];
                    e.contains(&x) && e.iter().any(|&v| owner[v as usize] == i && part_uf.find(v as usize) == r)
                })
            })
        });
        if !hub {
            return false;
        }
    }
    true
}

/// Membership in the connector formulation by search: for each core, every
/// off-core component is assigned to one piece.
pub fn find_connector_split(h: &Hypergraph, l: Level) -> Option<ConnectorSplit> {
    let n = h.num_vertices();
    for m in core_masks(n) {
        let core: Vec<Vertex> = (0..n as Vertex).filter(|&v| m >> v & 1 == 1).collect();
        let k = core.len();
        let mut in_core = vec![false; n];
        for &c in &core {
            in_core[c as usize] = true;
        }
        let comps = off_core_components(h, &in_core);
        if comps.len() < k {
            continue;
        }
        let mut comp_of = vec![usize::MAX; n];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v as usize] = i;
            }
        }
        let mut assign = vec![0usize; comps.len()];
        loop {
            let mut parts = vec![Vec::new(); k];
            for (c, &i) in assign.iter().enumerate() {
                parts[i].extend_from_slice(&comps[c]);
            }
            let mut edges = vec![Vec::new(); k];
            let mut ok = true;
            for (ei, e) in h.edges().iter().enumerate() {
                let piece = match e.iter().find(|&&v| !in_core[v as usize]) {
                    Some(&v) => assign[comp_of[v as usize]],
                    // core-only edges go to the first piece not excluding them
                    None => match (0..k).find(|&i| !e.contains(&core[i])) {
                        Some(i) => i,
                        None => {
                            ok = false;
                            break;
                        }
                    },
                };
                edges[piece].push(ei);
            }
            if ok {
                for p in &mut parts {
                    p.sort_unstable();
                }
                let split = ConnectorSplit {
                    core: core.clone(),
                    parts,
                    edges,
                };
                if is_valid_split(h, &split, l) {
                    return Some(split);
                }
            }
            // next assignment in base k
            let mut i = 0;
            while i < assign.len() {
                assign[i] += 1;
                if assign[i] < k {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
            if i == assign.len() {
                break;
            }
        }
    }
    None
}

/// Converts a witness into a connector split: each core vertex takes the
/// component certifying it, leftover components join a piece whose
/// excluded core vertex their connector misses.
pub fn witness_to_split(h: &Hypergraph, w: &ObstructionWitness) -> ConnectorSplit {
    let k = w.core.len();
    let mut parts: Vec<Vec<Vertex>> = w.assignment.iter().map(|&c| w.components[c].clone()).collect();
    let mut edges: Vec<Vec<usize>> = w.assignment.iter().map(|&c| w.connectors[c].clone()).collect();
    for c in 0..w.components.len() {
        if w.assignment.contains(&c) {
            continue;
        }
        let spans = |x: Vertex| w.connectors[c].iter().any(|&e| h.edges()[e].contains(&x));
        let i = (0..k).find(|&i| !spans(w.core[i])).expect("no connector spans the whole core");
        parts[i].extend_from_slice(&w.components[c]);
        edges[i].extend_from_slice(&w.connectors[c]);
    }
    // arity-1 edges are in no connector; park each away from its vertex
    let mut placed = vec![false; h.num_edges()];
    for es in &edges {
        for &e in es {
            placed[e] = true;
        }
    }
    for (ei, e) in h.edges().iter().enumerate() {
        if !placed[ei] {
            let i = (0..k).find(|&i| !e.contains(&w.core[i])).unwrap_or(0);
            edges[i].push(ei);
        }
    }
    for p in &mut parts {
        p.sort_unstable();
    }
    for es in &mut edges {
        es.sort_unstable();
    }
    ConnectorSplit {
        core: w.core.clone(),
        parts,
        edges,
    }
}

pub const MAX_PATTERN_SUBSETS_VERTICES: usize = 16;

#[derive(Clone, Debug)]
pub struct ItsWitness {
    /// Vertex set (original ids) inducing the obstruction.
    pub subset: Vec<Vertex>,
    /// The induced ∞-trimmed subhypergraph, relabeled to `0..|S|`.
    pub induced: Hypergraph,
    /// Witness in original vertex ids and original edge ids where the
    /// trimmed edge comes from a unique original edge, else the first one.
    pub witness: ObstructionWitness,
}

fn induced_inf(h: &Hypergraph, mask: u32) -> (Hypergraph, Vec<Vertex>) {
    let inside: Vec<bool> = (0..h.num_vertices()).map(|v| mask >> v & 1 == 1).collect();
    let ind = induced_trimmed_mask(h, &inside, TrimConfig::new(Level::Infinity, true));
    (ind.graph, ind.vertices)
}

fn subset_masks(n: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0u32..(1 << n)).filter(|m| m.count_ones() >= 3).collect();
    masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    masks
}

/// Returns `None` when `h` is free of obstructions as induced ∞-trimmed
/// subhypergraphs, else the first (largest) offending vertex set.
pub fn is_its_free(h: &Hypergraph, l: Level) -> Result<Option<ItsWitness>> {
    let n = h.num_vertices();
    Error::check_guard("pattern vertices for obstruction search", n, MAX_PATTERN_SUBSETS_VERTICES)?;
    for mask in subset_masks(n) {
        let (sub, vertices) = induced_inf(h, mask);
        if let Some(w) = is_obstruction(&sub, l) {
            let edge_map: Vec<usize> = sub
                .edges()
                .iter()
                .map(|e| {
                    let orig: Vec<Vertex> = e.iter().map(|&v| vertices[v as usize]).collect();
                    h.edges()
                        .iter()
                        .position(|f| orig.iter().all(|v| f.contains(v)) && f.iter().all(|v| !vertices.contains(v) || orig.contains(v)))
                        .expect("trimmed edge has a source edge")
                })
                .collect();
            return Ok(Some(ItsWitness {
                subset: vertices.clone(),
                witness: w.relabel(&vertices, &edge_map),
                induced: sub,
            }));
        }
    }
    Ok(None)
}

/// Freeness by the connector formulation over all induced ∞-trimmed
/// subhypergraphs. Used to cross-check [`is_its_free`].
pub fn is_its_free_by_splits(h: &Hypergraph, l: Level) -> Result<bool> {
    let n = h.num_vertices();
    Error::check_guard("pattern vertices for obstruction search", n, MAX_PATTERN_SUBSETS_VERTICES)?;
    Ok(subset_masks(n)
        .into_iter()
        .all(|mask| find_connector_split(&induced_inf(h, mask).0, l).is_none()))
}

/// Longest induced cycle of a graph, 0 when acyclic.
pub fn licl(g: &Hypergraph) -> Result<usize> {
    if g.rank() > 2 {
        return Err(Error::input("longest induced cycle needs a graph (rank <= 2)"));
    }
    let n = g.num_vertices();
    Error::check_guard("graph vertices for induced cycle search", n, MAX_PATTERN_SUBSETS_VERTICES)?;
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < 3 || k <= best {
            continue;
        }
        let inside: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let sub = induced_trimmed_mask(g, &inside, TrimConfig::new(Level::Finite(0), false)).graph;
        let pairs = sub.edges().iter().filter(|e| e.len() == 2).count();
        let deg_two = (0..k as Vertex).all(|v| sub.edges().iter().filter(|e| e.len() == 2 && e.contains(&v)).count() == 2);
        if pairs == k && deg_two && sub.filter_rank(2).components().len() == 1 {
            best = k;
        }
    }
    Ok(best)
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub level: Level,
    pub its_free: bool,
    pub witness: Option<ItsWitness>,
    pub treewidth: DagTreewidthReport,
    /// Longest induced cycle of the clique completion, reported at `l = ∞`.
    pub licl: Option<usize>,
}

impl Classification {
    pub fn tau(&self) -> usize {
        self.treewidth.tau
    }
}

/// Runs the obstruction search and the treewidth computation and insists
/// they agree (and, at `l = ∞`, that the induced-cycle test agrees too).
pub fn classify(h: &Hypergraph, l: Level) -> Result<Classification> {
    let witness = is_its_free(h, l)?;
    let treewidth = l_dag_treewidth(h, l)?;
    let its_free = witness.is_none();
    if its_free != (treewidth.tau == 1) {
        return Err(Error::inconsistency(format!(
            "pattern {h:?} at l = {l}: obstruction search says its_free = {its_free} but DAG-treewidth is {}",
            treewidth.tau
        )));
    }
    let licl = if l.is_infinite() {
        let c = licl(&clique_completion(h))?;
        if (c < 6) != its_free {
            return Err(Error::inconsistency(format!(
                "pattern {h:?}: its_free = {its_free} but longest induced cycle of the clique completion is {c}"
            )));
        }
        Some(c)
    } else {
        None
    };
    Ok(Classification {
        level: l,
        its_free,
        witness,
        treewidth,
        licl,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_arity_hom, brute_hom, brute_sub, OracleGuard};
    use proptest::prelude::*;

    fn cycle(n: usize) -> Hypergraph {
        let es: Vec<Vec<Vertex>> = (0..n as Vertex).map(|i| vec![i, (i + 1) % n as Vertex]).collect();
        Hypergraph::new(n, es).unwrap()
    }

    fn sensitive() -> Hypergraph {
        Hypergraph::from_edges(6, &[&[0, 1, 5], &[1, 2, 3], &[0, 2, 4]])
    }

    const LEVELS: [Level; 3] = [Level::Finite(0), Level::Finite(1), Level::Infinity];

    #[test]
    fn orientation_classes() {
        let edge = Hypergraph::from_edges(2, &[&[0, 1]]);
        let o = acyclic_orientations(&edge).unwrap();
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].multiplicity, 2);
        assert_eq!(acyclic_orientations(&cycle(3)).unwrap().len(), 1);
        let p3 = Hypergraph::from_edges(3, &[&[0, 1], &[1, 2]]);
        let o = acyclic_orientations(&p3).unwrap();
        assert_eq!(o.len(), 3);
        assert_eq!(o.iter().map(|c| c.multiplicity).sum::<u64>(), 4);
    }

    #[test]
    fn partition_counts() {
        let bell = [1, 1, 2, 5, 15, 52, 203];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(set_partitions(n).len(), b);
        }
    }

    #[test]
    fn contract_examples() {
        let edge = Hypergraph::from_edges(2, &[&[0, 1]]);
        let c = contract_set(&edge).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|t| t.beta == 1));
        let e3 = Hypergraph::from_edges(3, &[&[0, 1, 2]]);
        let mut betas: Vec<(usize, u64)> =
            contract_set(&e3).unwrap().iter().map(|t| (t.graph.num_vertices(), t.beta)).collect();
        betas.sort_unstable();
        assert_eq!(betas, vec![(1, 1), (2, 3), (3, 1)]);
        let c = contract_set(&Hypergraph::empty(2)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].graph.num_vertices(), 2);
    }

    #[test]
    fn quotient_examples() {
        let edge = Hypergraph::from_edges(2, &[&[0, 1]]);
        let q = quotient_set(&edge).unwrap();
        let mut gammas: Vec<(usize, Ratio<i128>)> = q.iter().map(|t| (t.graph.num_vertices(), t.gamma)).collect();
        gammas.sort();
        assert_eq!(gammas, vec![(1, Ratio::new(-1, 2)), (2, Ratio::new(1, 2))]);
        // Sub(K4, triangle) from the basis and oracle homs
        let k4 = Hypergraph::from_edges(4, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
        let total: Ratio<i128> = quotient_set(&cycle(3))
            .unwrap()
            .iter()
            .map(|t| t.gamma * brute_hom(&k4, &t.graph, &OracleGuard::default()).unwrap() as i128)
            .sum();
        assert_eq!(total, Ratio::from_integer(4));
        assert!(q.iter().all(|t| t.gamma != Ratio::from_integer(0)));
    }

    #[test]
    fn obstruction_examples() {
        let w = is_obstruction(&cycle(6), Level::Finite(0)).unwrap();
        assert_eq!(w.core.len(), 3);
        assert!(w.core == vec![0, 2, 4] || w.core == vec![1, 3, 5]);
        assert!(is_obstruction(&cycle(6), Level::Infinity).is_some());
        let w = is_obstruction(&sensitive(), Level::Finite(0)).unwrap();
        assert_eq!(w.core, vec![0, 1, 2]);
        assert!(is_obstruction(&sensitive(), Level::Finite(1)).is_none());
        for l in LEVELS {
            assert!(is_obstruction(&cycle(5), l).is_none());
        }
    }

    #[test]
    fn its_examples() {
        let w = is_its_free(&cycle(6), Level::Finite(0)).unwrap().unwrap();
        assert_eq!(w.subset, vec![0, 1, 2, 3, 4, 5]);
        for k in 2..6 {
            let e: Vec<Vertex> = (0..k as Vertex).collect();
            let h = Hypergraph::new(k, vec![e]).unwrap();
            for l in LEVELS {
                assert!(is_its_free(&h, l).unwrap().is_none());
            }
        }
    }

    #[test]
    fn licl_examples() {
        assert_eq!(licl(&cycle(6)).unwrap(), 6);
        assert_eq!(licl(&cycle(5)).unwrap(), 5);
        let k4 = Hypergraph::from_edges(4, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(licl(&k4).unwrap(), 3);
        assert_eq!(licl(&Hypergraph::from_edges(3, &[&[0, 1], &[1, 2]])).unwrap(), 0);
        assert!(licl(&Hypergraph::from_edges(3, &[&[0, 1, 2]])).is_err());
    }

    #[test]
    fn classify_examples() {
        let c = classify(&cycle(5), Level::Finite(0)).unwrap();
        assert!(c.its_free);
        assert_eq!(c.tau(), 1);
        let c = classify(&cycle(6), Level::Finite(0)).unwrap();
        assert!(!c.its_free);
        assert_eq!(c.tau(), 2);
        let c = classify(&cycle(6), Level::Infinity).unwrap();
        assert_eq!(c.licl, Some(6));
        assert!(!classify(&sensitive(), Level::Finite(0)).unwrap().its_free);
        assert!(classify(&sensitive(), Level::Finite(1)).unwrap().its_free);
    }

    #[test]
    fn witnesses_convert_to_splits() {
        for h in [cycle(6), cycle(7), sensitive()] {
            let w = is_obstruction(&h, Level::Finite(0)).unwrap();
            let split = witness_to_split(&h, &w);
            assert!(is_valid_split(&h, &split, Level::Finite(0)), "{h:?}");
            assert!(find_connector_split(&h, Level::Finite(0)).is_some());
        }
        assert!(find_connector_split(&sensitive(), Level::Finite(1)).is_none());
    }

    fn arb_pattern() -> impl Strategy<Value = Hypergraph> {
        (1usize..5).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::btree_set(0..n as u32, 2.min(n)..=3.min(n)), 0..5)
                .prop_map(move |es| Hypergraph::new(n, es.into_iter().filter(|e| e.len() >= 2)).unwrap())
        })
    }

    fn arb_input() -> impl Strategy<Value = Hypergraph> {
        (1usize..6).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::btree_set(0..n as u32, 2.min(n)..=3.min(n)), 0..8)
                .prop_map(move |es| Hypergraph::new(n, es.into_iter().filter(|e| e.len() >= 2)).unwrap())
        })
    }

    proptest! {
        #[test]
        fn contract_identity(g in arb_input(), h in arb_pattern()) {
            let guard = OracleGuard::default();
            let expect = brute_hom(&g, &h, &guard).unwrap();
            let got: u128 = contract_set(&h).unwrap().iter()
                .map(|t| t.beta as u128 * brute_arity_hom(&g, &t.graph, &guard).unwrap())
                .sum();
            prop_assert_eq!(got, expect);
        }

        #[test]
        fn quotient_identity(g in arb_input(), h in arb_pattern()) {
            let guard = OracleGuard::default();
            let expect = brute_sub(&g, &h, &guard).unwrap() as i128;
            let got: Ratio<i128> = quotient_set(&h).unwrap().iter()
                .map(|t| t.gamma * brute_hom(&g, &t.graph, &guard).unwrap() as i128)
                .sum();
            prop_assert_eq!(got, Ratio::from_integer(expect));
        }

        #[test]
        fn orientation_sum(g in arb_input(), h in arb_pattern()) {
            let guard = OracleGuard::default();
            let gd = Dah::new(g.clone(), &(0..g.num_vertices() as u32).collect::<Vec<_>>()).unwrap();
            let total: u128 = acyclic_orientations(&h).unwrap().iter()
                .map(|c| c.multiplicity as u128 * crate::oracle::brute_dah_hom(&c.dah, &gd, &guard).unwrap())
                .sum();
            prop_assert_eq!(total, brute_arity_hom(&g, &h, &guard).unwrap());
        }
    }
}
