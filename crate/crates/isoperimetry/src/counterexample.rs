//! The graph on `Z^d` with generating set `{±e_i} ∪ {±2e_1}`, which has no
//! nested solutions: constructions and finite checks around its lower-bound
//! argument (cube boundary, projection bound, Loomis–Whitney), plus
//! desk-scale exploration of how optimal sets fail to nest in d = 2.

use crate::lattice::{edge_boundary, CayleyGraphSpec, LatticePoint, VertexSet};
use crate::oracle::{max_induced_edges, Budget, CanonicalSet};
use crate::{Error, Result};
use rand::Rng;
use serde::Serialize;
use std::collections::HashSet;

/// `Z^d` with `U = {±e_i : i = 1..d} ∪ {±2e_1}`; degree `2d + 2`.
pub fn counterexample_spec(d: usize) -> Result<CayleyGraphSpec> {
    if d < 1 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    let mut gens = Vec::with_capacity(2 * d + 2);
    for i in 0..d {
        let mut plus = vec![0i64; d];
        plus[i] = 1;
        gens.push(LatticePoint::new(plus.iter().copied()));
        let mut minus = vec![0i64; d];
        minus[i] = -1;
        gens.push(LatticePoint::new(minus.iter().copied()));
    }
    let mut two = vec![0i64; d];
    two[0] = 2;
    gens.push(LatticePoint::new(two.iter().copied()));
    two[0] = -2;
    gens.push(LatticePoint::new(two.iter().copied()));
    CayleyGraphSpec::new(d, gens)
}

/// The grid cube `{1..k}^d`.
pub fn cube_set(d: usize, k: i64) -> Result<VertexSet> {
    if d < 1 || k < 1 {
        return Err(Error::Domain("cube_set needs d >= 1 and k >= 1".into()));
    }
    let mut points = vec![LatticePoint::new(vec![1i64; d])];
    for axis in 0..d {
        let mut next = Vec::with_capacity(points.len() * k as usize);
        for p in &points {
            for v in 1..=k {
                let mut c = p.coords().to_vec();
                c[axis] = v;
                next.push(LatticePoint::new(c));
            }
        }
        points = next;
    }
    VertexSet::new(points)
}

/// Sizes of the d coordinate projections `P_i = π_i(S)` (delete coordinate i).
#[derive(Clone, Debug, Serialize)]
pub struct ProjectionProfile {
    pub sizes: Vec<u64>,
}

pub fn projection_profile(s: &VertexSet) -> Result<ProjectionProfile> {
    let d = s
        .points()
        .first()
        .map(|p| p.dim())
        .ok_or_else(|| Error::Domain("projection of an empty set".into()))?;
    if d < 2 {
        return Err(Error::Domain("projections need d >= 2".into()));
    }
    let mut sizes = Vec::with_capacity(d);
    for i in 0..d {
        let proj: HashSet<Vec<i64>> = s
            .points()
            .iter()
            .map(|p| {
                p.coords()
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, &c)| c)
                    .collect()
            })
            .collect();
        sizes.push(proj.len() as u64);
    }
    Ok(ProjectionProfile { sizes })
}

/// `4|P_1| + Σ_{i>=2} 2|P_i|`, a lower bound on the edge boundary: along each
/// occupied line in direction `e_1` the two extreme points miss `e_1` and
/// `2e_1` steps (2 boundary edges each end), and similarly one edge per end
/// for the other directions.
pub fn projection_lower_bound(s: &VertexSet) -> Result<u64> {
    let p = projection_profile(s)?;
    Ok(4 * p.sizes[0] + p.sizes[1..].iter().map(|x| 2 * x).sum::<u64>())
}

/// Exact integer check of `Π |P_i| >= |S|^(d-1)`.
pub fn loomis_whitney_holds(s: &VertexSet) -> Result<bool> {
    let p = projection_profile(s)?;
    let d = p.sizes.len();
    let product: u128 = p.sizes.iter().map(|&x| x as u128).product();
    let n = s.len() as u128;
    Ok(product >= n.pow(d as u32 - 1))
}

/// Cube boundary, with two closed forms reported alongside the
/// authoritative direct enumeration. The coarse form `2(d+1)k^(d-1)` counts
/// one lost step per row end per generator pair; for `k >= 2` each occupied
/// `e_1`-line actually loses 2 edges per end (the unit and the double step),
/// giving `(2d+4)k^(d-1)`. Both are `O(k^(d-1))`, so every asymptotic use is
/// unaffected; the enumeration decides.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CubeBoundary {
    pub d: usize,
    pub k: i64,
    /// Direct enumeration via `edge_boundary`; authoritative.
    pub enumerated: u64,
    /// The coarse closed form `2(d+1)k^(d-1)`; undercounts for `k >= 2`.
    pub coarse_formula: u64,
    /// Row-end count `(2d+4)k^(d-1)` for `k >= 2`, `2(d+1)` at `k = 1`.
    pub row_end_formula: u64,
}

pub fn cube_boundary(d: usize, k: i64) -> Result<CubeBoundary> {
    let spec = counterexample_spec(d)?;
    let cube = cube_set(d, k)?;
    let enumerated = edge_boundary(&cube, &spec)?;
    let pow = (k as u64).pow(d as u32 - 1);
    let coarse_formula = 2 * (d as u64 + 1) * pow;
    let row_end_formula = if k >= 2 {
        (2 * d as u64 + 4) * pow
    } else {
        2 * (d as u64 + 1)
    };
    Ok(CubeBoundary {
        d,
        k,
        enumerated,
        coarse_formula,
        row_end_formula,
    })
}

/// Random connected set of `n` points in the given spec, grown from the
/// origin by random neighbor additions.
pub fn random_connected_set(
    rng: &mut impl Rng,
    spec: &CayleyGraphSpec,
    n: usize,
) -> Result<VertexSet> {
    let origin = LatticePoint::zero(spec.dimension());
    let mut list = vec![origin.clone()];
    let mut set: HashSet<LatticePoint> = list.iter().cloned().collect();
    while list.len() < n {
        let base = &list[rng.gen_range(0..list.len())];
        let gens = spec.generators();
        let cand = base.add(&gens[rng.gen_range(0..gens.len())]);
        if set.insert(cand.clone()) {
            list.push(cand);
        }
    }
    VertexSet::new(list)
}

/// Per-size slice of the optimal-set containment relation in d = 2.
#[derive(Clone, Debug, Serialize)]
pub struct NestingLevel {
    pub n: usize,
    pub best_edges: u64,
    pub best_boundary: u64,
    pub class_count: usize,
    /// For each optimal class (in witness order), whether some translate of
    /// it is contained in an optimal class one size larger. Empty at the last
    /// level, where no successor was computed.
    pub extendable: Vec<bool>,
    pub extendable_count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct NestingDagReport {
    pub n_max: usize,
    pub levels: Vec<NestingLevel>,
    /// Longest chain `A_n ⊂ A_{n+1} ⊂ ...` of optimal sets, counted in
    /// levels.
    pub longest_chain: usize,
    /// True when the oracle budget ran out; levels then stop early.
    pub truncated: bool,
}

/// Whether some translate of `a` is contained in `b`.
fn embeds_into(a: &CanonicalSet, b: &CanonicalSet) -> bool {
    let b_set: HashSet<&LatticePoint> = b.points().iter().collect();
    let a0 = &a.points()[0];
    for anchor in b.points() {
        let shift = anchor.sub(a0);
        if a.points().iter().all(|p| b_set.contains(&p.add(&shift))) {
            return true;
        }
    }
    false
}

/// Collects all optimal translation classes for each `n <= n_max` on the
/// d = 2 counterexample graph and reports the containment structure between
/// consecutive optimal levels.
pub fn nesting_dag(n_max: usize, budget: Budget) -> Result<NestingDagReport> {
    if n_max < 1 {
        return Err(Error::Domain("n_max must be positive".into()));
    }
    let spec = counterexample_spec(2)?;
    let mut per_level: Vec<crate::oracle::OracleResult> = Vec::new();
    let mut truncated = false;
    for n in 1..=n_max {
        match max_induced_edges(&spec, n, budget) {
            Ok(r) => per_level.push(r),
            Err(Error::BudgetExceeded { .. }) => {
                truncated = true;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if per_level.is_empty() {
        return Err(Error::BudgetExceeded {
            sets_explored: 0,
            best_lower_bound: None,
        });
    }

    // containment edges between consecutive levels
    let mut edges: Vec<Vec<Vec<usize>>> = Vec::new(); // edges[l][i] = successor indices
    for l in 0..per_level.len().saturating_sub(1) {
        let cur = &per_level[l].witnesses;
        let next = &per_level[l + 1].witnesses;
        let mut level_edges = Vec::with_capacity(cur.len());
        for a in cur {
            let succ: Vec<usize> = next
                .iter()
                .enumerate()
                .filter(|(_, b)| embeds_into(a, b))
                .map(|(j, _)| j)
                .collect();
            level_edges.push(succ);
        }
        edges.push(level_edges);
    }

    // longest chain by backward DP
    let levels_count = per_level.len();
    let mut chain: Vec<Vec<usize>> = (0..levels_count)
        .map(|l| vec![1usize; per_level[l].witnesses.len()])
        .collect();
    for l in (0..levels_count.saturating_sub(1)).rev() {
        for (i, succ) in edges[l].iter().enumerate() {
            let best_succ = succ.iter().map(|&j| chain[l + 1][j]).max().unwrap_or(0);
            chain[l][i] = 1 + best_succ;
        }
    }
    let longest_chain = chain
        .iter()
        .flat_map(|c| c.iter().copied())
        .max()
        .unwrap_or(0);

    let levels = per_level
        .iter()
        .enumerate()
        .map(|(l, r)| {
            let extendable: Vec<bool> = if l + 1 < levels_count {
                edges[l].iter().map(|succ| !succ.is_empty()).collect()
            } else {
                Vec::new()
            };
            let extendable_count = extendable.iter().filter(|&&x| x).count();
            NestingLevel {
                n: r.n,
                best_edges: r.best_edges,
                best_boundary: r.best_boundary,
                class_count: r.witnesses.len(),
                extendable,
                extendable_count,
            }
        })
        .collect();

    Ok(NestingDagReport {
        n_max,
        levels,
        longest_chain,
        truncated,
    })
}
