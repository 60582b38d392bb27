//! Hardness-side constructions: colorful counting by inclusion-exclusion,
//! simplices, the simplex-to-pattern gadget, tensor products and the
//! sub-to-hom instance family.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::counting::HomCounter;
use crate::degeneracy::compute_ordering;
use crate::error::{Error, Result};
use crate::hypercore::{canonical_form, ColoredHypergraph, Hypergraph, Level, Vertex};
use crate::oracle::{brute_hom, OracleGuard};
use crate::patterns::{is_its_free, is_obstruction, witness_to_split, ItsWitness};

/// Colorful homomorphisms of `h` into `gc` (image uses each of the
/// `|V(H)|` colors once), by inclusion-exclusion over color subsets.
pub fn colorful_hom_count(gc: &ColoredHypergraph, h: &Hypergraph, l: Level) -> Result<u128> {
    let counter = HomCounter::new(h, l)?;
    colorful_hom_count_with(gc, h, |g| counter.count(g))
}

/// As [`colorful_hom_count`] with a caller-supplied `Hom(-, H)` counter.
pub fn colorful_hom_count_with<F>(gc: &ColoredHypergraph, h: &Hypergraph, counter: F) -> Result<u128>
where
    F: Fn(&Hypergraph) -> Result<u128> + Sync,
{
    let k = h.num_vertices();
    if k > 62 {
        return Err(Error::input("too many colors for inclusion-exclusion"));
    }
    if let Some(&c) = gc.color.iter().find(|&&c| c as usize >= k) {
        return Err(Error::input(format!("color {c} outside the palette of {k} pattern vertices")));
    }
    let terms: Vec<i128> = (0u64..1 << k)
        .into_par_iter()
        .map(|mask| {
            let hom = counter(&gc.restrict_colors(mask).graph)?;
            let hom = i128::try_from(hom).map_err(|_| Error::input("count exceeds the 128-bit range"))?;
            let sign = if (k - mask.count_ones() as usize) % 2 == 0 { 1 } else { -1 };
            Ok(sign * hom)
        })
        .collect::<Result<_>>()?;
    let total: i128 = terms.iter().sum();
    u128::try_from(total)
        .map_err(|_| Error::inconsistency(format!("colorful inclusion-exclusion gave {total}")))
}

/// The `k`-simplex: `k + 1` vertices and every `k`-subset as an edge.
pub fn build_simplex(k: usize) -> Result<Hypergraph> {
    if k < 2 {
        return Err(Error::input(format!("a {k}-simplex needs k >= 2")));
    }
    Hypergraph::new(k + 1, (0..=k as Vertex).combinations(k))
}

/// `k` vertices with every `(k - 1)`-subset as an edge: the simplex the
/// gadget reduces from for a core of size `k`. Equals `build_simplex(k - 1)`.
pub fn vertex_simplex(k: usize) -> Result<Hypergraph> {
    if k < 3 {
        return Err(Error::input(format!("a simplex on {k} vertices needs k >= 3")));
    }
    build_simplex(k - 1)
}

/// Obstruction with core `0..k` and one extra vertex `k + i` per core
/// vertex, joined by the edge `{k + i} ∪ core ∖ {i}`. It is an obstruction
/// at level 0 but not at any level above.
pub fn pendant_simplex_pattern(k: usize) -> Result<Hypergraph> {
    if k < 3 {
        return Err(Error::input(format!("core size {k} is below 3")));
    }
    let edges = (0..k as Vertex).map(|i| {
        let mut e: Vec<Vertex> = (0..k as Vertex).filter(|&j| j != i).collect();
        e.push(k as Vertex + i);
        e
    });
    Hypergraph::new(2 * k, edges)
}

/// Pattern split for the gadget: core `X`, pieces `V_i`/`E_i` (piece `i`
/// connects `X ∖ {x_i}`) and the external part.
#[derive(Clone, Debug)]
pub struct GadgetSpec {
    pub pattern: Hypergraph,
    pub level: Level,
    pub core: Vec<Vertex>,
    pub parts: Vec<Vec<Vertex>>,
    /// Edge ids of the pattern carried by each piece.
    pub piece_edges: Vec<Vec<usize>>,
    pub ext: Vec<Vertex>,
    pub ext_edges: Vec<usize>,
    /// `pi[v]` is the color of pattern vertex `v`; core vertex `i` gets `i`.
    pub pi: Vec<u32>,
}

impl GadgetSpec {
    /// Uses the first obstruction found among the induced trimmed
    /// subhypergraphs of `h`.
    pub fn auto(h: &Hypergraph, l: Level) -> Result<Self> {
        match is_its_free(h, l)? {
            None => Err(Error::input(format!(
                "pattern has no obstruction at level {l}; no gadget applies"
            ))),
            Some(w) => Self::from_witness(h, &w, l),
        }
    }

    pub fn from_witness(h: &Hypergraph, its: &ItsWitness, l: Level) -> Result<Self> {
        let local = is_obstruction(&its.induced, l)
            .ok_or_else(|| Error::input("witness subset does not induce an obstruction"))?;
        let split = witness_to_split(&its.induced, &local);
        let s = &its.subset;
        let k = split.core.len();
        let n = h.num_vertices();
        let core: Vec<Vertex> = split.core.iter().map(|&v| s[v as usize]).collect();
        let parts: Vec<Vec<Vertex>> = split
            .parts
            .iter()
            .map(|p| p.iter().map(|&v| s[v as usize]).collect())
            .collect();
        let mut local_piece = vec![usize::MAX; its.induced.num_edges()];
        for (i, es) in split.edges.iter().enumerate() {
            for &e in es {
                local_piece[e] = i;
            }
        }
        let mut index = vec![None; n];
        for (i, &v) in s.iter().enumerate() {
            index[v as usize] = Some(i as Vertex);
        }
        let ext: Vec<Vertex> = (0..n as Vertex).filter(|v| index[*v as usize].is_none()).collect();
        let mut piece_edges = vec![Vec::new(); k];
        let mut ext_edges = Vec::new();
        for (ei, e) in h.edges().iter().enumerate() {
            let trace: Vec<Vertex> = e.iter().filter_map(|&v| index[v as usize]).collect();
            if trace.is_empty() {
                ext_edges.push(ei);
                continue;
            }
            let local_id = its
                .induced
                .edges()
                .binary_search(&trace)
                .map_err(|_| Error::inconsistency("trace of a pattern edge is missing from the induced part"))?;
            piece_edges[local_piece[local_id]].push(ei);
        }
        let mut pi = vec![u32::MAX; n];
        for (i, &x) in core.iter().enumerate() {
            pi[x as usize] = i as u32;
        }
        let mut next = k as u32;
        for c in pi.iter_mut().filter(|c| **c == u32::MAX) {
            *c = next;
            next += 1;
        }
        Ok(GadgetSpec {
            pattern: h.clone(),
            level: l,
            core,
            parts,
            piece_edges,
            ext,
            ext_edges,
            pi,
        })
    }

    pub fn core_size(&self) -> usize {
        self.core.len()
    }
}

/// Builds the gadget: the colored input, one shared copy of the external
/// part, and for every colorful input edge missing color `i` a fresh copy
/// of piece `i` wired to that edge.
pub fn build_gadget(gc: &ColoredHypergraph, spec: &GadgetSpec) -> Result<ColoredHypergraph> {
    let k = spec.core_size();
    let h = &spec.pattern;
    if let Some(&c) = gc.color.iter().find(|&&c| c as usize >= k) {
        return Err(Error::input(format!("input color {c} outside the {k} core colors")));
    }
    if let Some(e) = gc.base.edges().iter().find(|e| e.len() != k - 1) {
        return Err(Error::input(format!(
            "gadget input needs arity {} edges, found {:?}",
            k - 1,
            e
        )));
    }
    let n = gc.base.num_vertices();
    let mut color = gc.color.clone();
    let mut shared = vec![Vertex::MAX; h.num_vertices()];
    for &v in &spec.ext {
        shared[v as usize] = color.len() as Vertex;
        color.push(spec.pi[v as usize]);
    }
    let mut edges: Vec<Vec<Vertex>> = spec
        .ext_edges
        .iter()
        .map(|&e| h.edges()[e].iter().map(|&v| shared[v as usize]).collect())
        .collect();
    let mut core_pos = vec![usize::MAX; h.num_vertices()];
    for (j, &x) in spec.core.iter().enumerate() {
        core_pos[x as usize] = j;
    }
    let mut copy = vec![Vertex::MAX; h.num_vertices()];
    for e in gc.base.edges() {
        let mut by_color = vec![Vertex::MAX; k];
        for &v in e {
            by_color[gc.color[v as usize] as usize] = v;
        }
        let missing: Vec<usize> = (0..k).filter(|&c| by_color[c] == Vertex::MAX).collect();
        if missing.len() != 1 {
            continue;
        }
        let i = missing[0];
        for &v in &spec.parts[i] {
            copy[v as usize] = color.len() as Vertex;
            color.push(spec.pi[v as usize]);
        }
        for &f in &spec.piece_edges[i] {
            let wired: Vec<Vertex> = h.edges()[f]
                .iter()
                .map(|&v| {
                    if core_pos[v as usize] != usize::MAX {
                        by_color[core_pos[v as usize]]
                    } else if shared[v as usize] != Vertex::MAX {
                        shared[v as usize]
                    } else {
                        copy[v as usize]
                    }
                })
                .collect();
            if wired.iter().any(|&v| v == Vertex::MAX) {
                return Err(Error::inconsistency("piece edge leaves its piece"));
            }
            edges.push(wired);
        }
    }
    debug_assert!(color.len() >= n);
    ColoredHypergraph::new(Hypergraph::new(color.len(), edges)?, color)
}

/// `κ_l` of a gadget.
pub fn gadget_degeneracy_check(out: &ColoredHypergraph, l: Level) -> usize {
    compute_ordering(&out.base, l).kappa_l
}

/// Vertex `(a, b)` of `G ⊗ H` is `a * |V(H)| + b`. Edges are the subsets of
/// `e_G × e_H` whose two projections are `e_G` and `e_H`.
pub fn tensor_product(g: &Hypergraph, h: &Hypergraph) -> Hypergraph {
    let nh = h.num_vertices() as Vertex;
    let mut edges = Vec::new();
    for eg in g.edges() {
        for eh in h.edges() {
            let cells: Vec<(usize, usize)> = (0..eg.len()).cartesian_product(0..eh.len()).collect();
            let need = eg.len().max(eh.len());
            for mask in 1u64..(1u64 << cells.len()) {
                if (mask.count_ones() as usize) < need {
                    continue;
                }
                let (mut pg, mut ph) = (0u64, 0u64);
                for (c, &(a, b)) in cells.iter().enumerate() {
                    if mask >> c & 1 == 1 {
                        pg |= 1 << a;
                        ph |= 1 << b;
                    }
                }
                if pg.count_ones() as usize != eg.len() || ph.count_ones() as usize != eh.len() {
                    continue;
                }
                edges.push(
                    cells
                        .iter()
                        .enumerate()
                        .filter(|(c, _)| mask >> c & 1 == 1)
                        .map(|(_, &(a, b))| eg[a] * nh + eh[b])
                        .collect::<Vec<_>>(),
                );
            }
        }
    }
    Hypergraph::new(g.num_vertices() * h.num_vertices(), edges).expect("product edges are in range")
}

/// Replaces vertex `v` by `w[v]` copies. Edges are the copy sets whose
/// owners are exactly an edge of `f`, so a map into the blow-up is a
/// homomorphism iff its projection is; homomorphisms into the blow-up are
/// then the `w`-weighted homomorphisms into `f`. Returns the blow-up and
/// the owner of each copy.
pub fn blow_up(f: &Hypergraph, w: &[u32]) -> Result<(Hypergraph, Vec<Vertex>)> {
    if w.len() != f.num_vertices() || w.contains(&0) {
        return Err(Error::input("blow-up weights must be positive, one per vertex"));
    }
    if w.iter().any(|&c| c > 16) {
        return Err(Error::input("blow-up weights above 16 are not supported"));
    }
    let mut first = Vec::with_capacity(w.len());
    let mut owner = Vec::new();
    for (v, &c) in w.iter().enumerate() {
        first.push(owner.len() as Vertex);
        owner.extend(std::iter::repeat(v as Vertex).take(c as usize));
    }
    // nonempty copy subsets of each vertex
    let choices: Vec<Vec<Vec<Vertex>>> = (0..f.num_vertices())
        .map(|v| {
            (1u32..1 << w[v])
                .map(|mask| (0..w[v]).filter(|b| mask >> b & 1 == 1).map(|b| first[v] + b).collect())
                .collect()
        })
        .collect();
    let edges = f.edges().iter().flat_map(|e| {
        e.iter()
            .map(|&v| choices[v as usize].clone())
            .multi_cartesian_product()
            .map(|parts| parts.concat())
    });
    Ok((Hypergraph::new(owner.len(), edges)?, owner))
}

/// Family `F_j` (blow-ups of the patterns) whose matrix
/// `M[j][i] = Hom(H_i → F_j)` is invertible.
#[derive(Clone, Debug)]
pub struct BasisFamily {
    pub patterns: Vec<Hypergraph>,
    pub weights: Vec<Vec<u32>>,
    pub family: Vec<Hypergraph>,
    pub matrix: Vec<Vec<BigInt>>,
}

/// Searches vertex weights in order of total weight, lexicographically
/// within a total, starting from all ones. Entries go up to `max_weight`.
pub fn build_basis_family(patterns: &[Hypergraph], max_weight: u32) -> Result<BasisFamily> {
    let keys: Vec<_> = patterns.iter().map(canonical_form).collect::<Result<_>>()?;
    if keys.iter().duplicates().next().is_some() {
        return Err(Error::input("basis patterns must be pairwise non-isomorphic"));
    }
    let sizes: Vec<usize> = patterns.iter().map(Hypergraph::num_vertices).collect();
    let len: usize = sizes.iter().sum();
    let guard = OracleGuard::unbounded();
    let max_weight = max_weight.max(1);
    for total in len..=len * max_weight as usize {
        for flat in compositions(len, total, max_weight) {
            let mut weights = Vec::with_capacity(patterns.len());
            let mut at = 0;
            for &s in &sizes {
                weights.push(flat[at..at + s].to_vec());
                at += s;
            }
            let family: Vec<Hypergraph> = patterns
                .iter()
                .zip(&weights)
                .map(|(p, w)| blow_up(p, w).map(|b| b.0))
                .collect::<Result<_>>()?;
            let matrix: Vec<Vec<BigInt>> = family
                .iter()
                .map(|f| patterns.iter().map(|p| brute_hom(f, p, &guard).map(BigInt::from)).collect())
                .collect::<Result<_>>()?;
            if !determinant(&matrix).is_zero() {
                return Ok(BasisFamily {
                    patterns: patterns.to_vec(),
                    weights,
                    family,
                    matrix,
                });
            }
        }
    }
    Err(Error::input(format!(
        "no invertible family with vertex weights up to {max_weight}"
    )))
}

/// Vectors of `len` entries in `1..=cap` summing to `total`, lexicographic.
fn compositions(len: usize, total: usize, cap: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, total: usize, cap: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for x in 1..=cap.min(total) {
            let rest = total - x;
            if rest >= len - 1 && rest <= (len - 1) * cap {
                cur.push(x as u32);
                go(len - 1, rest, cap, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(len, total, cap as usize, &mut Vec::new(), &mut out);
    out
}

pub fn determinant(m: &[Vec<BigInt>]) -> BigRational {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let n = a.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for r in c + 1..n {
            let f = a[r][c].clone() / a[c][c].clone();
            for j in c..n {
                let t = f.clone() * a[c][j].clone();
                a[r][j] -= t;
            }
        }
    }
    det
}

/// Exact solution of `m · x = b`.
pub fn solve_rational(m: &[Vec<BigInt>], b: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(b)
        .map(|(r, y)| {
            let mut row: Vec<BigRational> = r.iter().cloned().map(BigRational::from_integer).collect();
            row.push(y.clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| !a[r][c].is_zero())
            .ok_or_else(|| Error::inconsistency("singular basis matrix"))?;
        a.swap(p, c);
        let piv = a[c][c].clone();
        for j in c..=n {
            a[c][j] = a[c][j].clone() / piv.clone();
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in c..=n {
                    let t = f.clone() * a[c][j].clone();
                    a[r][j] -= t;
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n].clone()).collect())
}

/// `G_j = G ⊗ F_j` for every member of the family.
pub fn build_sub_to_hom_instances(g: &Hypergraph, family: &BasisFamily) -> Vec<Hypergraph> {
    family.family.iter().map(|f| tensor_product(g, f)).collect()
}

/// Given `b_j = Σ_i c_i · Hom(H_i → G_j)`, returns `Hom(H_i → G)`.
pub fn recover_homs(family: &BasisFamily, coefficients: &[BigRational], b: &[BigRational]) -> Result<Vec<BigRational>> {
    if coefficients.iter().any(Zero::is_zero) || coefficients.len() != family.patterns.len() {
        return Err(Error::input("one non-zero coefficient per pattern is required"));
    }
    let y = solve_rational(&family.matrix, b)?;
    Ok(y.into_iter().zip(coefficients).map(|(y, c)| y / c.clone()).collect())
}

/// Randomized `k`-simplex detection on a `k`-uniform input: colors with
/// `k + 1` colors per trial and asks the gadget for a colorful copy of the
/// pendant pattern. One-sided: `true` is always correct.
pub fn color_coding_simplex(g: &Hypergraph, k: usize, trials: usize, seed: u64) -> Result<bool> {
    build_simplex(k)?;
    if g.edges().iter().any(|e| e.len() != k) {
        return Err(Error::input(format!("simplex detection needs a {k}-uniform input")));
    }
    if g.num_edges() < k + 1 {
        return Ok(false);
    }
    let l = Level::Finite(0);
    let pattern = pendant_simplex_pattern(k + 1)?;
    let spec = GadgetSpec::auto(&pattern, l)?;
    let counter = HomCounter::new(&pattern, l)?;
    let hits = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t));
            let color = (0..g.num_vertices()).map(|_| rng.gen_range(0..=k as u32)).collect();
            let gc = ColoredHypergraph::new(g.clone(), color)?;
            let gadget = build_gadget(&gc, &spec)?;
            Ok(colorful_hom_count_with(&gadget, &pattern, |x| counter.count(x))? > 0)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(hits.into_iter().any(|b| b))
}
