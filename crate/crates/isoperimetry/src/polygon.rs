//! The lattice 12-gon calculus: hulls, side parameters, the vertex-count
//! formula, closure conditions, and the boundary formula.
//!
//! A hull is the set of lattice points inside the intersection of the 12
//! supporting half-planes of a finite set, with boundary lines parallel to
//! the generators. The supporting functional of a generator `u = (p, q)` on a
//! point `v = (a, b)` reduces to the integer determinant `p·b - q·a` in
//! lattice coordinates, so no irrational arithmetic ever occurs.
//!
//! Side lengths are read counterclockwise starting from the bottom side:
//! `u_1` along `g1`, then `t_1` along `g1+g2`, alternating short and long
//! directions all the way around.

use crate::arith::binom2;
use crate::trilattice::TriPoint;
use crate::{Error, Result};
use rand::Rng;
use std::collections::HashSet;

/// Counterclockwise side directions: even indices are the short sides
/// `u_1..u_6`, odd indices the long sides `t_1..t_6`.
pub const SIDE_DIRS: [TriPoint; 12] = [
    TriPoint::new(1, 0),   // u1
    TriPoint::new(1, 1),   // t1
    TriPoint::new(0, 1),   // u2
    TriPoint::new(-1, 2),  // t2
    TriPoint::new(-1, 1),  // u3
    TriPoint::new(-2, 1),  // t3
    TriPoint::new(-1, 0),  // u4
    TriPoint::new(-1, -1), // t4
    TriPoint::new(0, -1),  // u5
    TriPoint::new(1, -2),  // t5
    TriPoint::new(1, -1),  // u6
    TriPoint::new(2, -1),  // t6
];

fn det(u: TriPoint, v: TriPoint) -> i64 {
    u.a * v.b - u.b * v.a
}

/// Side lengths `u_1..u_6` and `t_1..t_6` of a lattice 12-gon, in lattice
/// steps. Degenerate (zero-length) sides are first-class.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TwelveGonParams {
    pub u: [i64; 6],
    pub t: [i64; 6],
}

impl TwelveGonParams {
    pub fn new(u: [i64; 6], t: [i64; 6]) -> Result<Self> {
        if u.iter().chain(&t).any(|&s| s < 0) {
            return Err(Error::Domain("side lengths must be nonnegative".into()));
        }
        Ok(Self { u, t })
    }

    /// All `u_i = u`, all `t_i = t`.
    pub fn regular(u: i64, t: i64) -> Result<Self> {
        Self::new([u; 6], [t; 6])
    }

    pub fn b_u(&self) -> i64 {
        self.u.iter().sum()
    }

    pub fn b_t(&self) -> i64 {
        self.t.iter().sum()
    }

    /// Total boundary edge count `b = b_u + b_t`.
    pub fn b(&self) -> i64 {
        self.b_u() + self.b_t()
    }

    /// Side lengths in walk order `u_1, t_1, u_2, t_2, ...`.
    pub fn side_lengths(&self) -> [i64; 12] {
        let mut out = [0; 12];
        for i in 0..6 {
            out[2 * i] = self.u[i];
            out[2 * i + 1] = self.t[i];
        }
        out
    }
}

/// The two closure residuals of the side walk; both vanish iff the 12-gon
/// closes. They are the `g1` and `g2` components of the signed sum of side
/// vectors.
pub fn closure_residuals(p: &TwelveGonParams) -> (i64, i64) {
    let (u, t) = (&p.u, &p.t);
    let r1 = u[0] - u[3] + t[0] - t[3] - t[1] + t[4] - u[2] + u[5] - 2 * t[2] + 2 * t[5];
    let r2 = t[0] - t[3] + u[1] - u[4] + 2 * t[1] - 2 * t[4] + u[2] - u[5] + t[2] - t[5];
    (r1, r2)
}

/// Number of lattice points of the filled 12-gon: circumscribed parallelogram
/// count, minus the two triangular corners cut by the `g2-g1` supports, minus
/// one triangle of `C(t_i+1, 2)` points per long side.
pub fn vertex_count(p: &TwelveGonParams) -> Result<i64> {
    if closure_residuals(p) != (0, 0) {
        return Err(Error::Domain("12-gon side walk does not close".into()));
    }
    if p.u.iter().chain(&p.t).any(|&s| s < 0) {
        return Err(Error::Domain("side lengths must be nonnegative".into()));
    }
    let (u, t) = (&p.u, &p.t);
    let first = t[1] + 2 * t[2] + t[3] + u[2] + u[3] + 1;
    let second = t[0] + 2 * t[1] + t[2] + u[1] + u[2] + 1;
    let corners = binom2(t[1] + t[2] + u[2] + 1) + binom2(t[4] + t[5] + u[5] + 1);
    let long_cuts: i64 = t.iter().map(|&ti| binom2(ti + 1)).sum();
    Ok(first * second - corners - long_cuts)
}

/// A finite set of lattice points equal to its own hull. Points are sorted;
/// the anchor (least point, i.e. the left end of the bottom row) is where the
/// boundary walk starts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HullSet {
    points: Vec<TriPoint>,
}

impl HullSet {
    /// Validates hull idempotence: the points must equal their own hull.
    pub fn from_points(points: &[TriPoint]) -> Result<Self> {
        let h = hull(points)?;
        if h.points.len() != points.len() {
            return Err(Error::Domain(
                "point set is not equal to its own hull".into(),
            ));
        }
        Ok(h)
    }

    pub fn points(&self) -> &[TriPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn anchor(&self) -> TriPoint {
        self.points[0]
    }

    pub fn contains(&self, p: TriPoint) -> bool {
        self.points.binary_search(&p).is_ok()
    }
}

/// Supporting values `h_u = max det(u, s)` over the set, one per generator.
fn support_values(points: &[TriPoint]) -> [i64; 12] {
    let mut h = [i64::MIN; 12];
    for &p in points {
        for (i, &dir) in crate::trilattice::tri_generators().iter().enumerate() {
            h[i] = h[i].max(det(dir, p));
        }
    }
    h
}

/// Lattice points satisfying all 12 supporting inequalities.
fn enumerate_support_region(h: &[i64; 12]) -> Result<Vec<TriPoint>> {
    let gens = crate::trilattice::tri_generators();
    let idx = |g: TriPoint| gens.iter().position(|&x| x == g).unwrap();
    // det((1,0), v) = b and det((0,1), v) = -a give the bounding box.
    let b_max = h[idx(TriPoint::new(1, 0))];
    let b_min = -h[idx(TriPoint::new(-1, 0))];
    let a_min = -h[idx(TriPoint::new(0, 1))];
    let a_max = h[idx(TriPoint::new(0, -1))];
    let area = (b_max - b_min + 1) as i128 * (a_max - a_min + 1) as i128;
    if area > 100_000_000 {
        return Err(Error::Domain(format!(
            "hull bounding box of {area} cells exceeds the supported desk scale"
        )));
    }
    let mut out = Vec::new();
    for b in b_min..=b_max {
        for a in a_min..=a_max {
            let v = TriPoint::new(a, b);
            if gens.iter().enumerate().all(|(i, &g)| det(g, v) <= h[i]) {
                out.push(v);
            }
        }
    }
    // b-major scan order is already the TriPoint order
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    Ok(out)
}

/// The hull of a nonempty finite set: the lattice points inside the
/// intersection of its 12 supporting half-planes.
pub fn hull(points: &[TriPoint]) -> Result<HullSet> {
    if points.is_empty() {
        return Err(Error::Domain("hull of an empty set".into()));
    }
    let h = support_values(points);
    Ok(HullSet {
        points: enumerate_support_region(&h)?,
    })
}

/// Reads the side lengths off a hull by walking its boundary
/// counterclockwise from the anchor.
pub fn params_from_hull(h: &HullSet) -> Result<TwelveGonParams> {
    if h.is_empty() {
        return Err(Error::Domain("empty hull".into()));
    }
    let set: HashSet<TriPoint> = h.points.iter().copied().collect();
    let mut lens = [0i64; 12];
    let mut cur = h.anchor();
    for (s, &dir) in SIDE_DIRS.iter().enumerate() {
        // Convexity: the supporting line meets the hull in exactly this side,
        // so walking until the next point leaves the set finds the corner.
        let mut len = 0i64;
        while set.contains(&(cur + dir)) && len <= h.len() as i64 {
            cur = cur + dir;
            len += 1;
        }
        lens[s] = len;
    }
    if cur != h.anchor() {
        return Err(Error::Domain(
            "boundary walk did not close; input is not a filled 12-gon".into(),
        ));
    }
    let params = TwelveGonParams {
        u: [lens[0], lens[2], lens[4], lens[6], lens[8], lens[10]],
        t: [lens[1], lens[3], lens[5], lens[7], lens[9], lens[11]],
    };
    if vertex_count(&params)? != h.len() as i64 {
        return Err(Error::Domain(
            "side walk does not account for all points; input is not a hull".into(),
        ));
    }
    Ok(params)
}

/// The filled 12-gon with the given side lengths, walked from `anchor` (the
/// future least point of the set).
pub fn twelvegon_points(params: &TwelveGonParams, anchor: TriPoint) -> Result<HullSet> {
    if closure_residuals(params) != (0, 0) {
        return Err(Error::Domain("12-gon side walk does not close".into()));
    }
    if params.u.iter().chain(&params.t).any(|&s| s < 0) {
        return Err(Error::Domain("side lengths must be nonnegative".into()));
    }
    let lens = params.side_lengths();
    let mut corners = Vec::with_capacity(13);
    let mut cur = anchor;
    corners.push(cur);
    for (s, &dir) in SIDE_DIRS.iter().enumerate() {
        cur = cur + dir.scale(lens[s]);
        corners.push(cur);
    }
    debug_assert_eq!(cur, anchor);
    let h = support_values(&corners);
    let points = enumerate_support_region(&h)?;
    debug_assert_eq!(points[0], anchor);
    Ok(HullSet { points })
}

/// Interior-angle guard: no side pattern `0 = u_i = t_i = u_{i+1}` or
/// `0 = t_i = u_{i+1} = t_{i+1}` (indices cyclic). Equivalent to every
/// boundary vertex having interior angle at least 90 degrees.
pub fn interior_angles_ok(p: &TwelveGonParams) -> bool {
    for i in 0..6 {
        let j = (i + 1) % 6;
        if p.u[i] == 0 && p.t[i] == 0 && p.u[j] == 0 {
            return false;
        }
        if p.t[i] == 0 && p.u[j] == 0 && p.t[j] == 0 {
            return false;
        }
    }
    true
}

/// Boundary statistics of a filled 12-gon.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundaryStats {
    pub b_u: i64,
    pub b_t: i64,
    pub b: i64,
    /// Edge boundary of the vertex set in the ambient graph:
    /// `6 b_u + 10 b_t + 12`.
    pub boundary: i64,
}

/// `∂(V(P)) = 6 b_u + 10 b_t + 12`, valid under the interior-angle guard.
pub fn boundary_stats(p: &TwelveGonParams) -> Result<BoundaryStats> {
    if closure_residuals(p) != (0, 0) {
        return Err(Error::Domain("12-gon side walk does not close".into()));
    }
    if !interior_angles_ok(p) {
        return Err(Error::Precondition(
            "boundary formula requires interior angles of at least 90 degrees \
             (no two consecutive degenerate sides)"
                .into(),
        ));
    }
    let b_u = p.b_u();
    let b_t = p.b_t();
    let boundary = 6 * b_u + 10 * b_t + 12;
    debug_assert_eq!(boundary, 6 * (b_u + b_t) + 4 * b_t + 12);
    Ok(BoundaryStats {
        b_u,
        b_t,
        b: b_u + b_t,
        boundary,
    })
}

/// Draws `u_1..u_6, t_1, t_2, t_3, t_6` uniformly in `0..=max_side` and
/// solves the two closure equations for `t_4, t_5`; `None` when the solution
/// is not a nonnegative integer pair. Closure is a rank-2 linear condition,
/// so this samples the full space of realizable parameter tuples.
pub fn sample_realizable_params(rng: &mut impl Rng, max_side: i64) -> Option<TwelveGonParams> {
    let mut u = [0i64; 6];
    for s in &mut u {
        *s = rng.gen_range(0..=max_side);
    }
    let t1 = rng.gen_range(0..=max_side);
    let t2 = rng.gen_range(0..=max_side);
    let t3 = rng.gen_range(0..=max_side);
    let t6 = rng.gen_range(0..=max_side);
    // r1 = 0  =>  t5 - t4 = A;  r2 = 0  =>  t4 + 2 t5 = B
    let a = u[3] - u[0] - t1 + t2 + u[2] - u[5] + 2 * t3 - 2 * t6;
    let b = t1 + u[1] - u[4] + 2 * t2 + u[2] - u[5] + t3 - t6;
    let num4 = b - 2 * a;
    if num4.rem_euclid(3) != 0 {
        return None;
    }
    let t4 = num4 / 3;
    let t5 = t4 + a;
    if t4 < 0 || t5 < 0 {
        return None;
    }
    let params = TwelveGonParams {
        u,
        t: [t1, t2, t3, t4, t5, t6],
    };
    debug_assert_eq!(closure_residuals(&params), (0, 0));
    Some(params)
}

/// Primitive line directions of the six generator pairs.
const LINE_DIRS: [TriPoint; 6] = [
    TriPoint::new(1, 0),
    TriPoint::new(0, 1),
    TriPoint::new(-1, 1),
    TriPoint::new(1, 1),
    TriPoint::new(-1, 2),
    TriPoint::new(-2, 1),
];

/// True iff some lattice line parallel to a generator misses `S` but has
/// points of `S` strictly on both sides. Hull boundary domination is only
/// asserted when this is false.
pub fn has_empty_separating_line(points: &[TriPoint]) -> bool {
    for &dir in &LINE_DIRS {
        // Lines parallel to dir are the level sets of det(dir, .), and every
        // integer level is realized by lattice points.
        let levels: HashSet<i64> = points.iter().map(|&p| det(dir, p)).collect();
        let lo = *levels.iter().min().unwrap();
        let hi = *levels.iter().max().unwrap();
        if (lo..=hi).any(|l| !levels.contains(&l)) {
            return true;
        }
    }
    false
}

/// Random connected set of `n` points grown from the origin by repeatedly
/// adding a random neighbor; used by the property suites.
pub fn random_connected_tri_set(rng: &mut impl Rng, n: usize) -> Vec<TriPoint> {
    let mut set: HashSet<TriPoint> = HashSet::new();
    let mut list = vec![TriPoint::new(0, 0)];
    set.insert(list[0]);
    while list.len() < n {
        let base = list[rng.gen_range(0..list.len())];
        let gens = crate::trilattice::tri_generators();
        let cand = base + gens[rng.gen_range(0..12)];
        if set.insert(cand) {
            list.push(cand);
        }
    }
    list
}

/// TriPoint set -> VertexSet for the edge-counting operations.
pub fn tri_vertex_set(points: &[TriPoint]) -> crate::lattice::VertexSet {
    crate::lattice::VertexSet::new(points.iter().map(|p| p.to_lattice()))
        .expect("tri points share dimension 2")
}
