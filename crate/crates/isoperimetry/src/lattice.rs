//! Points, generating sets, Cayley-graph adjacency, and exact edge counting
//! for finite vertex sets on `Z^d`.
//!
//! The graph itself is infinite and never materialized; adjacency is computed
//! on demand from the generating set. All values are immutable after
//! construction and all operations are pure functions.

use crate::{Error, Result};
use smallvec::SmallVec;
use std::collections::HashSet;

/// Inline storage for up to 4 coordinates; desk-scale instances use d = 2, 3.
pub type Coords = SmallVec<[i64; 4]>;

/// A point of `Z^d`. Ordering is componentwise-lexicographic and total.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LatticePoint {
    coords: Coords,
}

impl LatticePoint {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        Self {
            coords: coords.into_iter().collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            coords: std::iter::repeat_n(0, dim).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), other.dim());
        LatticePoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), other.dim());
        LatticePoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// Generators of a `Z^d` Cayley graph that point along the same line through
/// the origin, keyed by the primitive direction. Each occupied line of a
/// vertex set in this direction forces at least `generator_count` boundary
/// edges (half at each extreme point of the line), which is the fact behind
/// both the oracle's pruning bound and the projection lower bound of the
/// counterexample graph.
#[derive(Clone, Debug)]
pub struct LineClass {
    pub primitive: LatticePoint,
    pub generator_count: usize,
}

/// A finite symmetric generating set on `Z^d`.
///
/// Whether the set actually generates `Z^d` as a group is a documented
/// assumption, not a checked invariant.
#[derive(Clone, Debug)]
pub struct CayleyGraphSpec {
    dimension: usize,
    generators: Vec<LatticePoint>,
    classes: Vec<LineClass>,
}

impl CayleyGraphSpec {
    /// Validates: no zero generator, all dimensions equal, closure under
    /// negation. Generators are deduplicated and sorted.
    pub fn new(dimension: usize, generators: Vec<LatticePoint>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidSpec("dimension must be positive".into()));
        }
        let mut gens: Vec<LatticePoint> = generators;
        gens.sort();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::InvalidSpec("empty generating set".into()));
        }
        let set: HashSet<&LatticePoint> = gens.iter().collect();
        for g in &gens {
            if g.dim() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    got: g.dim(),
                });
            }
            if g.is_zero() {
                return Err(Error::InvalidSpec(
                    "generating set contains the identity".into(),
                ));
            }
            if !set.contains(&g.neg()) {
                return Err(Error::InvalidSpec(format!(
                    "generating set is not symmetric: missing -{:?}",
                    g.coords()
                )));
            }
        }
        let classes = line_classes(&gens);
        Ok(Self {
            dimension,
            generators: gens,
            classes,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[LatticePoint] {
        &self.generators
    }

    /// Regular degree = number of generators.
    pub fn degree(&self) -> usize {
        self.generators.len()
    }

    pub fn line_classes(&self) -> &[LineClass] {
        &self.classes
    }

    fn check_dim(&self, p: &LatticePoint) -> Result<()> {
        if p.dim() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: p.dim(),
            });
        }
        Ok(())
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Group generators by primitive line direction (sign-normalized so the first
/// nonzero coordinate is positive).
fn line_classes(gens: &[LatticePoint]) -> Vec<LineClass> {
    let mut map: Vec<(LatticePoint, usize)> = Vec::new();
    for g in gens {
        let d = g.coords().iter().copied().fold(0, gcd);
        let mut prim: Coords = g.coords().iter().map(|&c| c / d).collect();
        if prim.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
            for c in prim.iter_mut() {
                *c = -*c;
            }
        }
        let prim = LatticePoint { coords: prim };
        match map.iter_mut().find(|(p, _)| *p == prim) {
            Some((_, count)) => *count += 1,
            None => map.push((prim, 1)),
        }
    }
    map.sort_by(|a, b| a.0.cmp(&b.0));
    map.into_iter()
        .map(|(primitive, generator_count)| LineClass {
            primitive,
            generator_count,
        })
        .collect()
}

/// A finite set of lattice points, deduplicated and kept sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSet {
    points: Vec<LatticePoint>,
}

impl VertexSet {
    pub fn new(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut points: Vec<LatticePoint> = points.into_iter().collect();
        points.sort();
        points.dedup();
        if let Some(first) = points.first() {
            let d = first.dim();
            for p in &points {
                if p.dim() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        got: p.dim(),
                    });
                }
            }
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn translate(&self, v: &LatticePoint) -> VertexSet {
        VertexSet {
            points: self.points.iter().map(|p| p.add(v)).collect(),
        }
    }

    fn hash_set(&self) -> HashSet<&LatticePoint> {
        self.points.iter().collect()
    }
}

/// The neighbors `{ p + u : u in generators }` of a point.
pub fn neighbors(p: &LatticePoint, g: &CayleyGraphSpec) -> Result<Vec<LatticePoint>> {
    g.check_dim(p)?;
    Ok(g.generators().iter().map(|u| p.add(u)).collect())
}

/// Number of unordered pairs `{x, y} ⊆ S` with `y - x` in the generators.
pub fn induced_edge_count(s: &VertexSet, g: &CayleyGraphSpec) -> Result<u64> {
    if let Some(p) = s.points.first() {
        g.check_dim(p)?;
    }
    let set = s.hash_set();
    let mut ordered = 0u64;
    for p in &s.points {
        for u in g.generators() {
            if set.contains(&p.add(u)) {
                ordered += 1;
            }
        }
    }
    // Symmetric generating set: each edge counted once per direction.
    Ok(ordered / 2)
}

/// Number of edges with exactly one endpoint in `S`, counted directly (not via
/// the handshake identity, which tests use as an independent cross-check).
pub fn edge_boundary(s: &VertexSet, g: &CayleyGraphSpec) -> Result<u64> {
    if let Some(p) = s.points.first() {
        g.check_dim(p)?;
    }
    let set = s.hash_set();
    let mut out = 0u64;
    for p in &s.points {
        for u in g.generators() {
            if !set.contains(&p.add(u)) {
                out += 1;
            }
        }
    }
    Ok(out)
}

/// For each line class of the spec, the number of distinct lines in that
/// direction meeting `S`.
///
/// Every counted line contributes at least `generator_count` edges to the
/// boundary of any superset of `S`: its extreme point in the direction of the
/// primitive vector is missing all generators of the class that are positive
/// multiples of it, and symmetrically at the other extreme.
pub fn occupied_lines_by_class(s: &VertexSet, g: &CayleyGraphSpec) -> Result<Vec<u64>> {
    if let Some(p) = s.points.first() {
        g.check_dim(p)?;
    }
    let mut counts = Vec::with_capacity(g.line_classes().len());
    for class in g.line_classes() {
        let v = &class.primitive;
        let j = v
            .coords()
            .iter()
            .position(|&c| c != 0)
            .expect("primitive direction is nonzero");
        let mut reps: HashSet<LatticePoint> = HashSet::new();
        for p in &s.points {
            // Canonical representative of the line {p + t v}: reduce so the
            // j-th coordinate lies in [0, v_j).
            let t = p.coords()[j].div_euclid(v.coords()[j]);
            let rep = LatticePoint {
                coords: p
                    .coords()
                    .iter()
                    .zip(v.coords())
                    .map(|(a, b)| a - t * b)
                    .collect(),
            };
            reps.insert(rep);
        }
        counts.push(reps.len() as u64);
    }
    Ok(counts)
}
