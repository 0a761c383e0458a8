//! The triangular-lattice Cayley graph with edges at distance 1 and √3.
//!
//! Points are written in the basis `g1 = (1, 0)`, `g2 = (1/2, √3/2)`: the
//! point `(a, b)` is `a·g1 + b·g2`. The twelve generators split into six
//! short directions (Euclidean length 1) and six long ones (length √3), and
//! the squared Euclidean length of `(a, b)` is the integer `a² + ab + b²`.
//!
//! `e_of_n` is the closed-form maximum number of edges of an n-vertex
//! subgraph; every floor/ceiling is computed with exact integer square roots.

use crate::arith::{ceil_sqrt, is_perfect_square, isqrt};
use crate::lattice::{CayleyGraphSpec, LatticePoint, VertexSet};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

/// A point `a·g1 + b·g2` of the triangular lattice.
///
/// The derived order is row-major: by `b` first, then `a`. The least point of
/// a filled 12-gon under this order is the left end of its bottom row, which
/// is where the boundary walk of the polygon calculus starts.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct TriPoint {
    pub a: i64,
    pub b: i64,
}

impl PartialOrd for TriPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TriPoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.b, self.a).cmp(&(other.b, other.a))
    }
}

impl std::ops::Add for TriPoint {
    type Output = TriPoint;
    fn add(self, other: TriPoint) -> TriPoint {
        TriPoint::new(self.a + other.a, self.b + other.b)
    }
}

impl std::ops::Sub for TriPoint {
    type Output = TriPoint;
    fn sub(self, other: TriPoint) -> TriPoint {
        TriPoint::new(self.a - other.a, self.b - other.b)
    }
}

impl TriPoint {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn scale(self, m: i64) -> TriPoint {
        TriPoint::new(self.a * m, self.b * m)
    }

    pub fn to_lattice(self) -> LatticePoint {
        LatticePoint::new([self.a, self.b])
    }

    pub fn from_lattice(p: &LatticePoint) -> TriPoint {
        debug_assert_eq!(p.dim(), 2);
        TriPoint::new(p.coords()[0], p.coords()[1])
    }
}

/// Short generators: the unit-length directions `±g1, ±g2, ±(g2-g1)`.
pub const TRI_SHORT: [TriPoint; 6] = [
    TriPoint::new(1, 0),
    TriPoint::new(0, 1),
    TriPoint::new(-1, 1),
    TriPoint::new(-1, 0),
    TriPoint::new(0, -1),
    TriPoint::new(1, -1),
];

/// Long generators: the √3-length directions `±(g1+g2), ±(2g2-g1), ±(g2-2g1)`.
pub const TRI_LONG: [TriPoint; 6] = [
    TriPoint::new(1, 1),
    TriPoint::new(-1, 2),
    TriPoint::new(-2, 1),
    TriPoint::new(-1, -1),
    TriPoint::new(1, -2),
    TriPoint::new(2, -1),
];

/// All twelve generators.
pub fn tri_generators() -> [TriPoint; 12] {
    let mut out = [TriPoint::new(0, 0); 12];
    out[..6].copy_from_slice(&TRI_SHORT);
    out[6..].copy_from_slice(&TRI_LONG);
    out
}

/// Squared Euclidean length of `(a, b)` in the planar embedding.
pub fn tri_norm_sq(a: i64, b: i64) -> i64 {
    a * a + a * b + b * b
}

/// The 12-regular Cayley graph spec of the triangular lattice.
pub fn tri_spec() -> &'static CayleyGraphSpec {
    static SPEC: OnceLock<CayleyGraphSpec> = OnceLock::new();
    SPEC.get_or_init(|| {
        let gens = tri_generators().iter().map(|p| p.to_lattice()).collect();
        CayleyGraphSpec::new(2, gens).expect("fixed generating set is valid")
    })
}

/// The twelve neighbors of a point.
pub fn tri_neighbors(p: TriPoint) -> [TriPoint; 12] {
    let mut out = [TriPoint::new(0, 0); 12];
    for (o, g) in out.iter_mut().zip(tri_generators()) {
        *o = p + g;
    }
    out
}

/// Unit hexagon plus center, the unique (up to translation) optimal 7-point
/// configuration.
pub fn hexagon_plus_center() -> VertexSet {
    let mut pts = vec![TriPoint::new(0, 0)];
    pts.extend(TRI_SHORT);
    VertexSet::new(pts.into_iter().map(|p| p.to_lattice())).expect("valid set")
}

/// Returns `k` iff `n = 24k² - 24k + 7` for some `k >= 1`.
pub fn special_k_of_n(n: u64) -> Option<u64> {
    if n < 7 {
        return None;
    }
    let disc = 96u128 * n as u128 - 96;
    let s = isqrt(disc);
    if s * s != disc || !(24 + s).is_multiple_of(48) {
        return None;
    }
    let k = ((24 + s) / 48) as u64;
    (k >= 1 && 24 * k * k - 24 * k + 7 == n).then_some(k)
}

/// The maximum number of edges of an n-vertex subgraph, `n >= 3`.
///
/// At special `n = 24k² - 24k + 7` the radicand `6n - 6` is the perfect
/// square `(12k - 6)²` and the special branch wins; otherwise the floor
/// `⌊6n - √(96n - 63)⌋` is computed as `6n - ⌈√(96n - 63)⌉`.
pub fn e_of_n(n: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "e(n) is defined for n >= 3, got {n}; see e_small for n = 1, 2"
        )));
    }
    if special_k_of_n(n).is_some() {
        let rad = 6u128 * n as u128 - 6;
        debug_assert!(is_perfect_square(rad));
        Ok(6 * n - 4 * isqrt(rad) as u64)
    } else {
        Ok(6 * n - ceil_sqrt(96u128 * n as u128 - 63) as u64)
    }
}

/// Maximum edge counts for the sizes below the `e_of_n` domain.
pub fn e_small(n: u64) -> Result<u64> {
    match n {
        1 => Ok(0),
        2 => Ok(1),
        _ => Err(Error::Domain(format!(
            "e_small covers n = 1, 2 only, got {n}"
        ))),
    }
}

/// `e(n)` extended over `n >= 1`.
pub fn e_any(n: u64) -> Result<u64> {
    if n <= 2 {
        e_small(n)
    } else {
        e_of_n(n)
    }
}

/// One row of the `table` output: `n`, `e(n)`, and the increment from the
/// previous row (absent at `n = 3`).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TableRow {
    pub n: u64,
    pub e: u64,
    pub delta: Option<u64>,
}

/// The `(n, e(n), e(n) - e(n-1))` table for `3 <= n <= n_max`.
pub fn e_table(n_max: u64) -> Result<Vec<TableRow>> {
    if n_max < 3 {
        return Err(Error::Domain("table requires n_max >= 3".into()));
    }
    let mut rows = Vec::with_capacity((n_max - 2) as usize);
    let mut prev: Option<u64> = None;
    for n in 3..=n_max {
        let e = e_of_n(n)?;
        rows.push(TableRow {
            n,
            e,
            delta: prev.map(|p| e - p),
        });
        prev = Some(e);
    }
    Ok(rows)
}

/// Exact planar embedding of a lattice point, kept symbolic: the coordinates
/// are `(x_half / 2, (y_sqrt3_half / 2)·√3)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PlaneEmbedding {
    /// Twice the x-coordinate: `2a + b`.
    pub x_half: i64,
    /// Twice the coefficient of √3 in the y-coordinate: `b`.
    pub y_sqrt3_half: i64,
}

impl PlaneEmbedding {
    pub fn to_f64(self) -> (f64, f64) {
        (
            self.x_half as f64 / 2.0,
            self.y_sqrt3_half as f64 / 2.0 * 3f64.sqrt(),
        )
    }
}

/// `a·g1 + b·g2 = (a + b/2, (b/2)·√3)`, exactly.
pub fn embed_to_plane(p: TriPoint) -> PlaneEmbedding {
    PlaneEmbedding {
        x_half: 2 * p.a + p.b,
        y_sqrt3_half: p.b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference values of (n, e(n)) for 3 <= n <= 55.
    pub(crate) const TABLE1: [(u64, u64); 53] = [
        (3, 3),
        (4, 6),
        (5, 9),
        (6, 13),
        (7, 18),
        (8, 21),
        (9, 25),
        (10, 30),
        (11, 34),
        (12, 39),
        (13, 43),
        (14, 48),
        (15, 52),
        (16, 57),
        (17, 62),
        (18, 67),
        (19, 72),
        (20, 76),
        (21, 81),
        (22, 86),
        (23, 91),
        (24, 96),
        (25, 101),
        (26, 106),
        (27, 111),
        (28, 116),
        (29, 121),
        (30, 126),
        (31, 132),
        (32, 137),
        (33, 142),
        (34, 147),
        (35, 152),
        (36, 157),
        (37, 162),
        (38, 168),
        (39, 173),
        (40, 178),
        (41, 183),
        (42, 189),
        (43, 194),
        (44, 199),
        (45, 204),
        (46, 210),
        (47, 215),
        (48, 220),
        (49, 225),
        (50, 231),
        (51, 236),
        (52, 241),
        (53, 247),
        (54, 252),
        (55, 258),
    ];

    #[test]
    fn table1_exact() {
        for (n, e) in TABLE1 {
            assert_eq!(e_of_n(n).unwrap(), e, "e({n})");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(e_of_n(2).is_err());
        assert_eq!(e_small(1).unwrap(), 0);
        assert_eq!(e_small(2).unwrap(), 1);
        assert!(e_small(3).is_err());
    }

    #[test]
    fn special_values() {
        assert_eq!(special_k_of_n(7), Some(1));
        assert_eq!(special_k_of_n(55), Some(2));
        assert_eq!(special_k_of_n(56), None);
        assert_eq!(special_k_of_n(727), Some(6));
        let specials: Vec<u64> = (1..=6).map(|k| 24 * k * k - 24 * k + 7).collect();
        assert_eq!(specials, vec![7, 55, 151, 295, 487, 727]);
        assert_eq!(e_of_n(151).unwrap(), 786);
    }

    #[test]
    fn special_branch_wins() {
        // At special n the generic floor formula gives strictly less.
        for k in 1..=10u64 {
            let n = 24 * k * k - 24 * k + 7;
            let special = 6 * n - 4 * isqrt(6 * n as u128 - 6) as u64;
            let generic = 6 * n - ceil_sqrt(96 * n as u128 - 63) as u64;
            assert!(special > generic);
            assert_eq!(e_of_n(n).unwrap(), special);
        }
    }

    #[test]
    fn increment_laws_to_10000() {
        let exceptions = [4u64, 5, 6, 8, 9, 11, 13, 15, 20];
        let mut prev = e_of_n(3).unwrap();
        for n in 4..=10_000u64 {
            let e = e_of_n(n).unwrap();
            let d = e - prev;
            if n >= 56 {
                assert!(d == 5 || d == 6, "delta at n={n} is {d}");
            }
            if d < 5 {
                assert!(exceptions.contains(&n), "unexpected exception at n={n}");
            }
            prev = e;
        }
        // every listed exception really has increment < 5
        let mut prev = e_of_n(3).unwrap();
        for n in 4..=20u64 {
            let e = e_of_n(n).unwrap();
            if exceptions.contains(&n) {
                assert!(e - prev < 5);
            }
            prev = e;
        }
    }

    #[test]
    fn embedding_distances() {
        assert_eq!(
            embed_to_plane(TriPoint::new(1, 0)),
            PlaneEmbedding {
                x_half: 2,
                y_sqrt3_half: 0
            }
        );
        // g2 = (1/2, sqrt3/2)
        assert_eq!(
            embed_to_plane(TriPoint::new(0, 1)),
            PlaneEmbedding {
                x_half: 1,
                y_sqrt3_half: 1
            }
        );
        for g in TRI_SHORT {
            assert_eq!(tri_norm_sq(g.a, g.b), 1);
        }
        for g in TRI_LONG {
            assert_eq!(tri_norm_sq(g.a, g.b), 3);
        }
        // squared distance from the embedding agrees with the integer norm:
        // 4 * |(x, y)|^2 = x_half^2 + 3 * y_sqrt3_half^2
        for p in [
            TriPoint::new(3, -2),
            TriPoint::new(-1, 4),
            TriPoint::new(2, 2),
        ] {
            let e = embed_to_plane(p);
            assert_eq!(
                e.x_half * e.x_half + 3 * e.y_sqrt3_half * e.y_sqrt3_half,
                4 * tri_norm_sq(p.a, p.b)
            );
        }
    }

    #[test]
    fn twelve_regular() {
        let g = tri_spec();
        assert_eq!(g.degree(), 12);
        for p in [TriPoint::new(0, 0), TriPoint::new(7, -3)] {
            assert_eq!(tri_neighbors(p).len(), 12);
        }
    }

    #[test]
    fn tripoint_order_is_row_major() {
        let mut pts = [
            TriPoint::new(1, 0),
            TriPoint::new(-1, 0),
            TriPoint::new(0, -1),
            TriPoint::new(5, -1),
        ];
        pts.sort();
        assert_eq!(pts[0], TriPoint::new(0, -1));
        assert_eq!(pts[1], TriPoint::new(5, -1));
        assert_eq!(pts[2], TriPoint::new(-1, 0));
    }
}
