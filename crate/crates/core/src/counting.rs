//! Homomorphism and subhypergraph counting on a degeneracy-oriented input.
//!
//! The input is oriented once by its `l`-degeneracy ordering. Every pattern
//! term is a pair (contracted pattern, orientation class); each term is
//! counted by dynamic programming over a DAG-tree decomposition of the
//! pattern's `l`-skeleton, enumerating partial maps bag by bag.

use std::time::{Duration, Instant};

use num_rational::Ratio;
use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use smallvec::SmallVec;

use crate::dagdecomp::{dag_treewidth, DagTreeDecomposition};
use crate::degeneracy::peel;
use crate::error::{Error, Result};
use crate::hypercore::{reach_set, Dah, Digraph, Hypergraph, Level, Vertex};
use crate::patterns::{acyclic_orientations, contract_set, quotient_set};

type Key = SmallVec<[Vertex; 8]>;

/// Aggregate keyed by images on a shared domain: packed into one integer
/// up to four vertices, a vector above that.
enum Agg {
    Packed(FxHashMap<u128, u128>),
    Wide(FxHashMap<Key, u128>),
}

impl Agg {
    fn for_width(w: usize) -> Self {
        if w <= 4 {
            Agg::Packed(FxHashMap::default())
        } else {
            Agg::Wide(FxHashMap::default())
        }
    }

    fn get(&self, steps: &[usize], img: &[Vertex]) -> u128 {
        match self {
            Agg::Packed(m) => m.get(&u128::pack(steps, img, 32)).copied().unwrap_or(0),
            Agg::Wide(m) => {
                let key: Key = steps.iter().map(|&s| img[s]).collect();
                m.get(&key).copied().unwrap_or(0)
            }
        }
    }

    fn add(&mut self, steps: &[usize], img: &[Vertex], val: u128) -> Result<()> {
        let slot = match self {
            Agg::Packed(m) => m.entry(u128::pack(steps, img, 32)).or_insert(0),
            Agg::Wide(m) => m.entry(steps.iter().map(|&s| img[s]).collect()).or_insert(0),
        };
        *slot = slot.checked_add(val).ok_or_else(overflow)?;
        Ok(())
    }
}

/// Images on a shared domain packed `bits` per vertex.
trait PackedKey: Copy + Ord + Send {
    fn pack(steps: &[usize], img: &[Vertex], bits: usize) -> Self;
}

impl PackedKey for u64 {
    fn pack(steps: &[usize], img: &[Vertex], bits: usize) -> Self {
        steps.iter().fold(0, |acc, &s| acc << bits | img[s] as u64)
    }
}

impl PackedKey for u128 {
    fn pack(steps: &[usize], img: &[Vertex], bits: usize) -> Self {
        steps.iter().fold(0, |acc, &s| acc << bits | img[s] as u128)
    }
}


/// Partial map keyed by its images on a fixed, sorted domain.
#[derive(Clone, Debug, Default)]
pub struct CountTable {
    pub domain: Vec<Vertex>,
    pub entries: FxHashMap<Key, u128>,
}

impl CountTable {
    /// Missing keys count as zero.
    pub fn get(&self, images: &[Vertex]) -> u128 {
        self.entries.get(images).copied().unwrap_or(0)
    }
}

/// Pattern vertex → input vertex on a prescribed domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialHom {
    pub domain: Vec<Vertex>,
    pub images: Vec<Vertex>,
}

/// Oriented input: skeleton out-lists plus the ordered edge set.
#[derive(Clone, Debug)]
pub struct OrientedInput {
    pub level: Level,
    pub kappa_l: usize,
    pub dah: Dah,
    skeleton: Digraph,
    ordered_edges: FxHashSet<Vec<Vertex>>,
    pairs_only: bool,
}

impl OrientedInput {
    /// Orients `g` by its `l`-degeneracy ordering. Edges above `max_arity`
    /// can never be images of pattern edges and are dropped first.
    pub fn new(g: &Hypergraph, l: Level, max_arity: usize) -> Self {
        let graph = if g.rank() <= max_arity { g.clone() } else { g.filter_rank(max_arity) };
        let (ordering, kappa_l) = peel(&graph, l);
        let dah = Dah::new(graph, &ordering).expect("peeling order is a permutation");
        Self::from_dah(dah, l, kappa_l)
    }

    pub fn from_dah(dah: Dah, l: Level, kappa_l: usize) -> Self {
        let skeleton = dah.l_skeleton(l);
        let pairs_only = dah.base().edges().iter().all(|e| e.len() == 2);
        // with pairs only, every ordered-edge check reduces to an arc check
        let ordered_edges = if pairs_only {
            FxHashSet::default()
        } else {
            dah.ordered_edges().iter().cloned().collect()
        };
        OrientedInput {
            pairs_only,
            level: l,
            kappa_l,
            dah,
            skeleton,
            ordered_edges,
        }
    }

    /// The filtered input the orientation was built from.
    pub fn graph(&self) -> &Hypergraph {
        self.dah.base()
    }

    pub fn skeleton(&self) -> &Digraph {
        &self.skeleton
    }

    pub fn max_l_outdegree(&self) -> usize {
        self.skeleton.max_out_degree()
    }

    fn target(&self) -> Target<'_> {
        Target {
            skeleton: &self.skeleton,
            edges: Some(&self.ordered_edges),
            pairs_only: self.pairs_only,
        }
    }
}

/// Where candidate images come from and which tuples count as edges.
struct Target<'a> {
    skeleton: &'a Digraph,
    edges: Option<&'a FxHashSet<Vec<Vertex>>>,
    /// every input edge is a pair, so an arc already is an ordered edge
    pairs_only: bool,
}

/// Enumeration plan for one bag: the placement order over `Reach(B)` and
/// the checks due at each step.
#[derive(Clone, Debug)]
struct BagPlan {
    reach: Vec<Vertex>,
    order: Vec<Vertex>,
    anchor: Vec<Option<usize>>,
    /// `(earlier step, arc goes from earlier step to this one)`
    arcs: Vec<Vec<(usize, bool)>>,
    /// ordered edges as step lists, checked at their last step
    edges: Vec<Vec<Vec<usize>>>,
    /// steps of the vertices of `reach`, in vertex order
    sorted_steps: Vec<usize>,
}

impl BagPlan {
    fn new(hsk: &Digraph, ordered_edges: &[Vec<Vertex>], bag: &[Vertex]) -> Self {
        let n = hsk.num_vertices();
        let reach = reach_set(hsk, bag);
        let mut in_reach = vec![false; n];
        for &v in &reach {
            in_reach[v as usize] = true;
        }
        let mut step = vec![usize::MAX; n];
        let mut order: Vec<Vertex> = Vec::with_capacity(reach.len());
        let mut anchor = Vec::with_capacity(reach.len());
        for &s in bag {
            if step[s as usize] == usize::MAX {
                step[s as usize] = order.len();
                order.push(s);
                anchor.push(None);
            }
        }
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            for &w in hsk.out_neighbors(u) {
                if step[w as usize] == usize::MAX {
                    step[w as usize] = order.len();
                    order.push(w);
                    anchor.push(Some(i));
                }
            }
            i += 1;
        }
        debug_assert_eq!(order.len(), reach.len());
        let mut arcs = vec![Vec::new(); order.len()];
        for (a, b) in hsk.arcs() {
            if in_reach[a as usize] && in_reach[b as usize] {
                let (sa, sb) = (step[a as usize], step[b as usize]);
                if sa < sb {
                    arcs[sb].push((sa, true));
                } else {
                    arcs[sa].push((sb, false));
                }
            }
        }
        let mut edges = vec![Vec::new(); order.len()];
        for e in ordered_edges {
            if e.iter().all(|&v| in_reach[v as usize]) {
                let steps: Vec<usize> = e.iter().map(|&v| step[v as usize]).collect();
                let last = *steps.iter().max().unwrap();
                edges[last].push(steps);
            }
        }
        let sorted_steps = reach.iter().map(|&v| step[v as usize]).collect();
        BagPlan {
            reach,
            order,
            anchor,
            arcs,
            edges,
            sorted_steps,
        }
    }

    /// Steps of `domain` (sorted vertices, all inside `reach`).
    fn steps_of(&self, domain: &[Vertex]) -> Vec<usize> {
        domain
            .iter()
            .map(|v| self.sorted_steps[self.reach.binary_search(v).expect("domain inside reach")])
            .collect()
    }

    fn enumerate(&self, target: &Target, f: &mut impl FnMut(&[Vertex]) -> Result<()>) -> Result<()> {
        let mut img = vec![0 as Vertex; self.order.len()];
        self.place(0, target, &mut img, f)
    }

    fn place(
        &self,
        i: usize,
        target: &Target,
        img: &mut Vec<Vertex>,
        f: &mut impl FnMut(&[Vertex]) -> Result<()>,
    ) -> Result<()> {
        if i == self.order.len() {
            return f(img);
        }
        let n = target.skeleton.num_vertices() as Vertex;
        match self.anchor[i] {
            None => {
                for x in 0..n {
                    img[i] = x;
                    if self.ok(i, target, img) {
                        self.place(i + 1, target, img, f)?;
                    }
                }
            }
            Some(a) => {
                for &x in target.skeleton.out_neighbors(img[a]) {
                    img[i] = x;
                    if self.ok(i, target, img) {
                        self.place(i + 1, target, img, f)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn ok(&self, i: usize, target: &Target, img: &[Vertex]) -> bool {
        let x = img[i];
        for &(j, forward) in &self.arcs[i] {
            let y = img[j];
            let fine = if forward {
                target.skeleton.has_arc(y, x)
            } else {
                target.skeleton.has_arc(x, y)
            };
            if !fine {
                return false;
            }
        }
        if let Some(edges) = target.edges {
            let mut buf: SmallVec<[Vertex; 8]> = SmallVec::new();
            for e in &self.edges[i] {
                if target.pairs_only && e.len() == 2 {
                    continue;
                }
                buf.clear();
                buf.extend(e.iter().map(|&s| img[s]));
                if !edges.contains(buf.as_slice()) {
                    return false;
                }
            }
        }
        true
    }
}

/// Everything about one oriented pattern that does not depend on the input.
#[derive(Clone, Debug)]
pub struct PatternPlan {
    pub pattern: Dah,
    pub decomposition: DagTreeDecomposition,
    bags: Vec<BagPlan>,
    /// per bag: steps (in that bag) of the domain shared with its parent
    up_steps: Vec<Vec<usize>>,
    /// per bag: for each child, (child id, steps in this bag of the shared domain)
    child_steps: Vec<Vec<(usize, Vec<usize>)>>,
    post_order: Vec<usize>,
}

impl PatternPlan {
    /// Uses a minimum-width decomposition of the pattern's `l`-skeleton.
    pub fn new(pattern: &Dah, l: Level) -> Result<Self> {
        let hsk = pattern.l_skeleton(l);
        let (_, td) = dag_treewidth(&hsk)?;
        Ok(Self::with_decomposition(pattern, &hsk, td))
    }

    pub fn with_decomposition(pattern: &Dah, hsk: &Digraph, td: DagTreeDecomposition) -> Self {
        let bags: Vec<BagPlan> = td
            .bags
            .iter()
            .map(|b| BagPlan::new(hsk, pattern.ordered_edges(), b))
            .collect();
        let k = bags.len();
        let mut up_steps = vec![Vec::new(); k];
        let mut child_steps = vec![Vec::new(); k];
        for c in 0..k {
            if let Some(p) = td.parent[c] {
                let closure = reach_set(hsk, &td.down_closure(c));
                let shared: Vec<Vertex> =
                    bags[p].reach.iter().copied().filter(|v| closure.binary_search(v).is_ok()).collect();
                up_steps[c] = bags[c].steps_of(&shared);
                child_steps[p].push((c, bags[p].steps_of(&shared)));
            }
        }
        let post_order = if k == 0 { Vec::new() } else { td.post_order() };
        PatternPlan {
            pattern: pattern.clone(),
            decomposition: td,
            bags,
            up_steps,
            child_steps,
            post_order,
        }
    }

    pub fn width(&self) -> usize {
        self.decomposition.width()
    }

    /// Total count. Shared-domain images are packed into one integer when
    /// they fit, and the recursion then joins children by sorting instead of
    /// hashing; large tables stay in sequential memory that way.
    fn count(&self, input: &OrientedInput) -> Result<u128> {
        let n = input.skeleton.num_vertices();
        let bits = (usize::BITS - n.saturating_sub(1).leading_zeros()).max(1) as usize;
        let width = self.up_steps.iter().map(Vec::len).max().unwrap_or(0);
        if width * bits <= 64 {
            self.run_sorted::<u64>(input, bits)
        } else if width * bits <= 128 {
            self.run_sorted::<u128>(input, bits)
        } else {
            Ok(self.run(input, false)?.0)
        }
    }

    fn run_sorted<K: PackedKey>(&self, input: &OrientedInput, bits: usize) -> Result<u128> {
        let target = input.target();
        let k = self.bags.len();
        if k == 0 {
            return Ok(1);
        }
        // per finished bag: distinct shared-domain keys, ascending, with sums
        let mut agg: Vec<(Vec<K>, Vec<u128>)> = vec![(Vec::new(), Vec::new()); k];
        let root = self.decomposition.root();
        let mut total = 0u128;
        for &b in &self.post_order {
            let plan = &self.bags[b];
            let children = &self.child_steps[b];
            let mut probes: Vec<Vec<(K, usize)>> = vec![Vec::new(); children.len()];
            let mut ups: Vec<K> = Vec::new();
            let mut rows = 0usize;
            plan.enumerate(&target, &mut |img| {
                for ((_, steps), p) in children.iter().zip(probes.iter_mut()) {
                    p.push((K::pack(steps, img, bits), rows));
                }
                if b != root {
                    ups.push(K::pack(&self.up_steps[b], img, bits));
                }
                rows += 1;
                Ok(())
            })?;

            let mut weight: Vec<u128> = Vec::new();
            if !children.is_empty() {
                weight = vec![1; rows];
                for ((c, _), mut p) in children.iter().zip(probes) {
                    let (keys, vals) = std::mem::take(&mut agg[*c]);
                    p.sort_unstable_by_key(|e| e.0);
                    let mut j = 0;
                    for (key, row) in p {
                        while j < keys.len() && keys[j] < key {
                            j += 1;
                        }
                        weight[row] = if j < keys.len() && keys[j] == key {
                            weight[row].checked_mul(vals[j]).ok_or_else(overflow)?
                        } else {
                            0
                        };
                    }
                }
            }

            if b == root {
                total = if children.is_empty() {
                    rows as u128
                } else {
                    weight.iter().try_fold(0u128, |acc, &w| acc.checked_add(w)).ok_or_else(overflow)?
                };
                continue;
            }
            let mut pairs: Vec<(K, u128)> = if children.is_empty() {
                ups.into_iter().map(|u| (u, 1)).collect()
            } else {
                ups.into_iter().zip(weight).filter(|&(_, w)| w > 0).collect()
            };
            pairs.sort_unstable_by_key(|e| e.0);
            let (mut keys, mut vals): (Vec<K>, Vec<u128>) = (Vec::new(), Vec::new());
            for (key, w) in pairs {
                if keys.last() == Some(&key) {
                    let v = vals.last_mut().unwrap();
                    *v = v.checked_add(w).ok_or_else(overflow)?;
                } else {
                    keys.push(key);
                    vals.push(w);
                }
            }
            agg[b] = (keys, vals);
        }
        Ok(total)
    }

    /// Runs the bag recursion. With `keep` set, also returns every bag's
    /// table keyed by the full map on `Reach(B)`.
    fn run(&self, input: &OrientedInput, keep: bool) -> Result<(u128, Vec<CountTable>)> {
        let target = input.target();
        let k = self.bags.len();
        let mut kept: Vec<CountTable> = vec![CountTable::default(); if keep { k } else { 0 }];
        if k == 0 {
            // empty pattern: the single empty map
            return Ok((1, kept));
        }
        let mut agg: Vec<Agg> = (0..k).map(|_| Agg::for_width(0)).collect();
        let mut total: u128 = 0;
        let root = self.decomposition.root();
        for &b in &self.post_order {
            let plan = &self.bags[b];
            let mut up = Agg::for_width(self.up_steps[b].len());
            let mut table = FxHashMap::default();
            let children = &self.child_steps[b];
            plan.enumerate(&target, &mut |img| {
                let mut val: u128 = 1;
                for (c, steps) in children {
                    let a = agg[*c].get(steps, img);
                    val = val.checked_mul(a).ok_or_else(overflow)?;
                    if val == 0 {
                        return Ok(());
                    }
                }
                if keep {
                    let key: Key = plan.sorted_steps.iter().map(|&s| img[s]).collect();
                    table.insert(key, val);
                }
                if b == root {
                    total = total.checked_add(val).ok_or_else(overflow)?;
                } else {
                    up.add(&self.up_steps[b], img, val)?;
                }
                Ok(())
            })?;
            for (c, _) in children {
                agg[*c] = Agg::for_width(0);
            }
            agg[b] = up;
            if keep {
                kept[b] = CountTable {
                    domain: plan.reach.clone(),
                    entries: table,
                };
            }
        }
        Ok((total, kept))
    }
}

fn overflow() -> Error {
    Error::input("count exceeds the 128-bit range")
}

/// Digraph homomorphisms from the subgraph of `hsk` induced by
/// `Reach(bag)` into `gsk`, as maps on that reach set.
pub fn enumerate_skeleton_homs(hsk: &Digraph, bag: &[Vertex], gsk: &Digraph) -> Vec<PartialHom> {
    let plan = BagPlan::new(hsk, &[], bag);
    collect(
        &plan,
        &Target {
            skeleton: gsk,
            edges: None,
            pairs_only: false,
        },
    )
}

/// Skeleton homomorphisms on `Reach(bag)` that also send every ordered
/// pattern edge inside the reach set onto an ordered input edge.
pub fn filtered_homs(hd: &Dah, bag: &[Vertex], input: &OrientedInput) -> Vec<PartialHom> {
    let hsk = hd.l_skeleton(input.level);
    let plan = BagPlan::new(&hsk, hd.ordered_edges(), bag);
    collect(&plan, &input.target())
}

fn collect(plan: &BagPlan, target: &Target) -> Vec<PartialHom> {
    let mut out = Vec::new();
    plan.enumerate(target, &mut |img| {
        out.push(PartialHom {
            domain: plan.reach.clone(),
            images: plan.sorted_steps.iter().map(|&s| img[s]).collect(),
        });
        Ok(())
    })
    .expect("collecting never fails");
    out.sort();
    out
}

/// Per-bag tables of the recursion for `hd` on `input`, using the given
/// decomposition of the pattern's skeleton.
pub fn homcount_tables(hd: &Dah, input: &OrientedInput, td: DagTreeDecomposition) -> Result<Vec<CountTable>> {
    let hsk = hd.l_skeleton(input.level);
    let plan = PatternPlan::with_decomposition(hd, &hsk, td);
    Ok(plan.run(input, true)?.1)
}

/// DAH homomorphisms from `hd` into the oriented input.
pub fn count_dah_homs(hd: &Dah, input: &OrientedInput) -> Result<u128> {
    PatternPlan::new(hd, input.level)?.count(input)
}

#[derive(Clone, Debug)]
pub struct HomTerm {
    /// Contracted pattern (canonical labeling).
    pub pattern: Hypergraph,
    pub beta: u64,
    pub multiplicity: u64,
    pub width: usize,
    pub count: u128,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct HomReport {
    pub total: u128,
    pub terms: Vec<HomTerm>,
    pub kappa_l: usize,
    pub orient_time: Duration,
}

/// `Hom(G, H)` through the contract set and orientation classes.
pub fn count_homs(g: &Hypergraph, h: &Hypergraph, l: Level) -> Result<u128> {
    Ok(count_homs_report(g, h, l)?.total)
}

pub fn count_homs_report(g: &Hypergraph, h: &Hypergraph, l: Level) -> Result<HomReport> {
    let start = Instant::now();
    let input = OrientedInput::new(g, l, h.rank());
    let orient_time = start.elapsed();
    let mut report = count_homs_with(&input, h)?;
    report.orient_time = orient_time;
    Ok(report)
}

/// As [`count_homs`] against an input oriented beforehand.
pub fn count_homs_with(input: &OrientedInput, h: &Hypergraph) -> Result<HomReport> {
    HomCounter::new(h, input.level)?.report_with(input)
}

#[derive(Clone, Debug)]
struct PlannedTerm {
    pattern: Hypergraph,
    beta: u64,
    multiplicity: u64,
    arities: Vec<usize>,
    plan: PatternPlan,
}

/// Term plans for one pattern at one level, reusable across inputs.
#[derive(Clone, Debug)]
pub struct HomCounter {
    rank: usize,
    level: Level,
    terms: Vec<PlannedTerm>,
}

impl HomCounter {
    pub fn new(h: &Hypergraph, l: Level) -> Result<Self> {
        let mut terms = Vec::new();
        for term in contract_set(h)? {
            let mut arities: Vec<usize> = term.graph.edges().iter().map(Vec::len).collect();
            arities.sort_unstable();
            arities.dedup();
            for class in acyclic_orientations(&term.graph)? {
                let plan = PatternPlan::new(&class.dah, l)?;
                terms.push(PlannedTerm {
                    pattern: term.graph.clone(),
                    beta: term.beta,
                    multiplicity: class.multiplicity,
                    arities: arities.clone(),
                    plan,
                });
            }
        }
        Ok(HomCounter {
            rank: h.rank(),
            level: l,
            terms,
        })
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn count(&self, g: &Hypergraph) -> Result<u128> {
        let input = OrientedInput::new(g, self.level, self.rank);
        Ok(self.report_with(&input)?.total)
    }

    pub fn report_with(&self, input: &OrientedInput) -> Result<HomReport> {
        if input.level != self.level {
            return Err(Error::input(format!(
                "input oriented at level {} but the counter was planned at {}",
                input.level, self.level
            )));
        }
        let terms: Vec<HomTerm> = self
            .terms
            .par_iter()
            .filter(|t| t.arities.iter().all(|&a| input.graph().has_arity(a)))
            .map(|t| {
                let start = Instant::now();
                if t.plan.width() > 1 {
                    log::info!(
                        "term {:?} has DAG-treewidth {}; counting it in n^{} time",
                        t.pattern.edges(),
                        t.plan.width(),
                        t.plan.width()
                    );
                }
                let count = t.plan.count(input)?;
                Ok(HomTerm {
                    pattern: t.pattern.clone(),
                    beta: t.beta,
                    multiplicity: t.multiplicity,
                    width: t.plan.width(),
                    count,
                    elapsed: start.elapsed(),
                })
            })
            .collect::<Result<_>>()?;
        let mut total: u128 = 0;
        for t in &terms {
            let c = t
                .count
                .checked_mul(t.beta as u128 * t.multiplicity as u128)
                .ok_or_else(overflow)?;
            total = total.checked_add(c).ok_or_else(overflow)?;
        }
        Ok(HomReport {
            total,
            terms,
            kappa_l: input.kappa_l,
            orient_time: Duration::ZERO,
        })
    }
}

#[derive(Clone, Debug)]
pub struct SubTerm {
    pub pattern: Hypergraph,
    pub gamma: Ratio<i128>,
    pub hom: u128,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SubReport {
    pub total: u128,
    pub terms: Vec<SubTerm>,
    pub kappa_l: usize,
}

/// `Sub(G, H)` as the quotient-set combination of homomorphism counts.
pub fn count_subs(g: &Hypergraph, h: &Hypergraph, l: Level) -> Result<u128> {
    Ok(count_subs_report(g, h, l)?.total)
}

pub fn count_subs_report(g: &Hypergraph, h: &Hypergraph, l: Level) -> Result<SubReport> {
    let input = OrientedInput::new(g, l, h.rank());
    let mut terms = Vec::new();
    let mut sum = Ratio::from_integer(0i128);
    for q in quotient_set(h)? {
        let t = Instant::now();
        let hom = count_homs_with(&input, &q.graph)?.total;
        let hom_i = i128::try_from(hom).map_err(|_| overflow())?;
        sum += q.gamma * hom_i;
        terms.push(SubTerm {
            pattern: q.graph,
            gamma: q.gamma,
            hom,
            elapsed: t.elapsed(),
        });
    }
    if !sum.is_integer() || sum < Ratio::from_integer(0) {
        return Err(Error::inconsistency(format!(
            "subhypergraph combination evaluated to {sum}, not a non-negative integer"
        )));
    }
    Ok(SubReport {
        total: sum.to_integer() as u128,
        terms,
        kappa_l: input.kappa_l,
    })
}
