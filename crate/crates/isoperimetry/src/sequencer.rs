//! The growth machinery behind the nested ordering: the auxiliary graph of
//! 12-gon shapes under side fills, its shortest 48-move path from one
//! extremal 12-gon to the next, the explicit vertex ordering of the lattice,
//! and the independent prefix-optimality recount.
//!
//! A node fixes each side symbolically as `u_i = k + cu_i`, `t_i = k + ct_i`;
//! `k` is never instantiated during graph construction. Filling a long side
//! `t_i` shortens it by one and lengthens the two adjacent short sides;
//! filling a short side `u_i` shortens it by three and lengthens the two
//! adjacent long sides. Every admissible node's maximal edge count takes the
//! form `6n - √(96n + a)` with `a < 33` and zero additive constant — the
//! constant equals three times the difference of the closure residuals, so it
//! vanishes identically on closed nodes, and the graph construction asserts
//! this rather than filtering on it.

use crate::lattice::induced_edge_count;
use crate::polygon::{params_from_hull, twelvegon_points, vertex_count, HullSet, TwelveGonParams};
use crate::trilattice::{e_any, TriPoint};
use crate::verifier::{case_edge_formula, n_star_poly, EdgeFormula, OffsetCase};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

/// A 12-gon shape node: side offsets relative to the growth symbol `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GonNode {
    pub cu: [i64; 6],
    pub ct: [i64; 6],
}

/// The extremal 12-gon one generation down: `u_i = k - 1`, `t_i = k - 2`.
pub const INITIAL_NODE: GonNode = GonNode {
    cu: [-1; 6],
    ct: [-2; 6],
};

/// The extremal 12-gon of the current generation: `u_i = k`, `t_i = k - 1`.
pub const TERMINAL_NODE: GonNode = GonNode {
    cu: [0; 6],
    ct: [-1; 6],
};

impl GonNode {
    /// Offsets as a verifier case (`μ_i = -cu_i`, `τ_i = ct_i + 3`), for the
    /// shared edge-formula machinery.
    fn to_offset_case(self) -> OffsetCase {
        OffsetCase::new(
            std::array::from_fn(|i| -self.cu[i]),
            std::array::from_fn(|i| self.ct[i] + 3),
        )
    }

    /// Closure residuals; constant in `k` because the symbol cancels in every
    /// side difference.
    pub fn closure_residuals(&self) -> (i64, i64) {
        self.to_offset_case().closure_residuals()
    }

    /// Concrete side lengths at a given `k`.
    pub fn params_at(&self, k: i64) -> Result<TwelveGonParams> {
        TwelveGonParams::new(
            std::array::from_fn(|i| k + self.cu[i]),
            std::array::from_fn(|i| k + self.ct[i]),
        )
    }

    /// The node's edge formula `6n - √(96n + a) + c`; `c` must be zero for
    /// every closed node and the caller treats anything else as a defect.
    pub fn edge_formula(&self) -> Result<EdgeFormula> {
        case_edge_formula(&self.to_offset_case())
    }

    /// Vertex count polynomial `n(k)`.
    pub fn count_poly(&self) -> Result<crate::verifier::KPolynomial> {
        n_star_poly(&self.to_offset_case())
    }
}

/// Label of a side fill: which of the twelve sides receives a full row.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SideMove {
    /// Fill the short side `u_{i+1}` (0-based index).
    U(usize),
    /// Fill the long side `t_{i+1}` (0-based index).
    T(usize),
}

impl SideMove {
    /// All moves in tie-break order `u_1 < ... < u_6 < t_1 < ... < t_6`.
    pub fn all() -> [SideMove; 12] {
        std::array::from_fn(|i| {
            if i < 6 {
                SideMove::U(i)
            } else {
                SideMove::T(i - 6)
            }
        })
    }

    pub fn parse(label: &str) -> Option<SideMove> {
        let (kind, idx) = label.split_at(1);
        let i: usize = idx.parse().ok()?;
        if !(1..=6).contains(&i) {
            return None;
        }
        match kind {
            "u" => Some(SideMove::U(i - 1)),
            "t" => Some(SideMove::T(i - 1)),
            _ => None,
        }
    }
}

impl fmt::Display for SideMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SideMove::U(i) => write!(f, "u{}", i + 1),
            SideMove::T(i) => write!(f, "t{}", i + 1),
        }
    }
}

impl Serialize for SideMove {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Applies a side fill. Errors when a resulting side would be negative at
/// `k = 3` (offset below -3), which is the admissibility floor for the whole
/// construction.
pub fn apply_side_fill(node: GonNode, mv: SideMove) -> Result<GonNode> {
    let mut next = node;
    match mv {
        SideMove::T(i) => {
            next.ct[i] -= 1;
            next.cu[i] += 1;
            next.cu[(i + 1) % 6] += 1;
        }
        SideMove::U(i) => {
            next.cu[i] -= 3;
            next.ct[(i + 5) % 6] += 1;
            next.ct[i] += 1;
        }
    }
    if next.cu.iter().chain(&next.ct).any(|&c| c < -3) {
        return Err(Error::InadmissibleMove(format!(
            "{mv} on {node:?} makes a side negative at k = 3"
        )));
    }
    debug_assert_eq!(next.closure_residuals(), node.closure_residuals());
    Ok(next)
}

/// Aux-graph admissibility: sides nonnegative at `k = 3` and at most two
/// above the initial shape (`u_i <= k+1`, `t_i <= k`), radicand offset
/// `a < 33`. The additive constant is asserted zero, not filtered.
fn admissible(node: &GonNode) -> Result<Option<i64>> {
    if node.cu.iter().any(|&c| !(-3..=1).contains(&c))
        || node.ct.iter().any(|&c| !(-3..=0).contains(&c))
    {
        return Ok(None);
    }
    let f = node.edge_formula()?;
    if f.c != 0 {
        return Err(Error::Verification(format!(
            "admissible candidate {node:?} has nonzero additive constant {}",
            f.c
        )));
    }
    Ok((f.a < 33).then_some(f.a))
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct AuxGraphStats {
    pub nodes: usize,
    pub edges: usize,
}

/// The auxiliary directed graph, BFS-layered from the initial node. Every
/// move raises the linear coefficient of `n(k)` by exactly one, so all paths
/// from the initial to the terminal node have length 48 and expansion stops
/// at that layer; only the terminal is admitted there.
pub struct AuxGraph {
    pub nodes: Vec<GonNode>,
    pub a_values: Vec<i64>,
    pub dist: Vec<usize>,
    parent: Vec<Option<(usize, SideMove)>>,
    pub stats: AuxGraphStats,
    terminal_index: usize,
}

pub const PATH_LENGTH: usize = 48;

pub fn build_aux_graph() -> Result<AuxGraph> {
    let mut nodes = vec![INITIAL_NODE];
    let mut a_values = vec![admissible(&INITIAL_NODE)?
        .ok_or_else(|| Error::Internal("initial node inadmissible".into()))?];
    let mut dist = vec![0usize];
    let mut parent: Vec<Option<(usize, SideMove)>> = vec![None];
    let mut index: HashMap<GonNode, usize> = HashMap::new();
    index.insert(INITIAL_NODE, 0);
    let mut queue = VecDeque::from([0usize]);
    let mut edges = 0usize;

    while let Some(cur) = queue.pop_front() {
        if dist[cur] >= PATH_LENGTH {
            continue;
        }
        let cur_node = nodes[cur];
        for mv in SideMove::all() {
            let Ok(next) = apply_side_fill(cur_node, mv) else {
                continue;
            };
            let Some(a) = admissible(&next)? else {
                continue;
            };
            if dist[cur] + 1 == PATH_LENGTH && next != TERMINAL_NODE {
                continue;
            }
            edges += 1;
            if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(next) {
                let id = nodes.len();
                slot.insert(id);
                nodes.push(next);
                a_values.push(a);
                dist.push(dist[cur] + 1);
                parent.push(Some((cur, mv)));
                queue.push_back(id);
                if nodes.len() > 100_000 {
                    return Err(Error::Internal(
                        "auxiliary graph exceeds the expected scale".into(),
                    ));
                }
            }
        }
    }

    let terminal_index = *index.get(&TERMINAL_NODE).ok_or_else(|| {
        Error::Verification("terminal 12-gon unreachable in the auxiliary graph".into())
    })?;
    let stats = AuxGraphStats {
        nodes: nodes.len(),
        edges,
    };
    Ok(AuxGraph {
        nodes,
        a_values,
        dist,
        parent,
        stats,
        terminal_index,
    })
}

impl AuxGraph {
    /// The BFS shortest path from the initial to the terminal node. Moves
    /// were expanded in label order, so the path is reproducible.
    pub fn shortest_path(&self) -> Result<Vec<SideMove>> {
        let mut path = Vec::new();
        let mut cur = self.terminal_index;
        while let Some((prev, mv)) = self.parent[cur] {
            path.push(mv);
            cur = prev;
        }
        if cur != 0 {
            return Err(Error::Internal(
                "path does not reach the initial node".into(),
            ));
        }
        path.reverse();
        if path.len() != PATH_LENGTH {
            return Err(Error::Verification(format!(
                "shortest path has length {}, expected {PATH_LENGTH}",
                path.len()
            )));
        }
        Ok(path)
    }
}

/// Convenience wrapper: build the graph and return its shortest path.
pub fn find_side_sequence() -> Result<Vec<SideMove>> {
    build_aux_graph()?.shortest_path()
}

/// A known 48-move growth sequence, kept as a reference fixture: each move
/// with the radicand offset `a` of the node it produces. The walk starts at
/// the initial node with `a = -96`.
pub const REFERENCE_GROWTH_ROWS: [(&str, i64); 48] = [
    ("t1", -47),
    ("t2", 4),
    ("u2", -39),
    ("t1", 16),
    ("u1", -23),
    ("t6", -60),
    ("t2", 1),
    ("u3", -32),
    ("t3", -63),
    ("t1", 4),
    ("u2", -23),
    ("t2", -48),
    ("t1", 25),
    ("u1", 4),
    ("t6", -15),
    ("u6", -32),
    ("t5", -47),
    ("t6", -60),
    ("t1", 25),
    ("u1", 16),
    ("u2", 9),
    ("t2", 4),
    ("u3", 1),
    ("t3", 0),
    ("u4", 1),
    ("t4", 4),
    ("u5", 9),
    ("t5", 16),
    ("u6", 25),
    ("t6", -60),
    ("t1", -47),
    ("t2", -32),
    ("u2", -15),
    ("t1", 4),
    ("u1", 25),
    ("t6", -48),
    ("t2", -23),
    ("u3", 4),
    ("t3", -63),
    ("t1", -32),
    ("u2", 1),
    ("t2", -60),
    ("t1", -23),
    ("u1", 16),
    ("t6", -39),
    ("u6", 4),
    ("t5", -47),
    ("t6", -96),
];

/// Validates the reference move sequence as a path: every intermediate node
/// is admissible with the recorded `a` value, and the walk ends at the
/// terminal.
pub fn validate_reference_growth_path() -> Result<Vec<SideMove>> {
    let mut node = INITIAL_NODE;
    let f0 = node.edge_formula()?;
    if (f0.a, f0.c) != (-96, 0) {
        return Err(Error::Verification(format!(
            "initial node formula {f0:?}, expected (-96, 0)"
        )));
    }
    let mut moves = Vec::with_capacity(48);
    for (step, (label, a_expected)) in REFERENCE_GROWTH_ROWS.iter().enumerate() {
        let mv = SideMove::parse(label)
            .ok_or_else(|| Error::Internal(format!("bad move label {label}")))?;
        node = apply_side_fill(node, mv)?;
        let a = admissible(&node)?.ok_or_else(|| {
            Error::Verification(format!("reference row {} is inadmissible", step + 2))
        })?;
        if a != *a_expected {
            return Err(Error::Verification(format!(
                "reference row {}: a = {a}, recorded {a_expected}",
                step + 2
            )));
        }
        moves.push(mv);
    }
    if node != TERMINAL_NODE {
        return Err(Error::Verification(
            "reference walk does not end at the terminal 12-gon".into(),
        ));
    }
    Ok(moves)
}

/// One vertex of the nested ordering.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct OrderingEntry {
    pub index: u64,
    pub point: TriPoint,
    pub edges_added: u32,
    pub cumulative_edges: u64,
}

/// On-disk record of the first-55 asset (JSON lines).
#[derive(Serialize, Deserialize)]
struct AssetRecord {
    index: u64,
    a: i64,
    b: i64,
    edges_added: u32,
}

const EMBEDDED_FIRST55: &str = include_str!("../assets/first55.jsonl");

/// Loads the first-55 ordering from `$ISOP_ASSET_DIR/first55.jsonl` when the
/// variable is set, otherwise from the copy embedded at build time. The
/// records are revalidated by a direct recount.
pub fn load_first55() -> Result<Vec<OrderingEntry>> {
    let text = match std::env::var_os("ISOP_ASSET_DIR") {
        Some(dir) => {
            let path = std::path::Path::new(&dir).join("first55.jsonl");
            std::fs::read_to_string(&path)
                .map_err(|e| Error::Asset(format!("cannot read {}: {e}", path.display())))?
        }
        None => EMBEDDED_FIRST55.to_string(),
    };
    parse_first55(&text)
}

fn parse_first55(text: &str) -> Result<Vec<OrderingEntry>> {
    let mut entries = Vec::with_capacity(55);
    let mut seen: HashSet<TriPoint> = HashSet::new();
    let mut cumulative = 0u64;
    for (i, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
        let rec: AssetRecord = serde_json::from_str(line)
            .map_err(|e| Error::Asset(format!("first55 line {}: {e}", i + 1)))?;
        if rec.index != i as u64 + 1 {
            return Err(Error::Asset(format!(
                "first55 line {}: index {} out of order",
                i + 1,
                rec.index
            )));
        }
        let point = TriPoint::new(rec.a, rec.b);
        // recount: the claimed increment must match the actual adjacency
        let actual = crate::trilattice::tri_neighbors(point)
            .iter()
            .filter(|nb| seen.contains(nb))
            .count() as u32;
        if actual != rec.edges_added || !seen.insert(point) {
            return Err(Error::Asset(format!(
                "first55 line {}: inconsistent record",
                i + 1
            )));
        }
        cumulative += rec.edges_added as u64;
        entries.push(OrderingEntry {
            index: rec.index,
            point,
            edges_added: rec.edges_added,
            cumulative_edges: cumulative,
        });
    }
    if entries.len() != 55 {
        return Err(Error::Asset(format!(
            "first55 asset has {} records, expected 55",
            entries.len()
        )));
    }
    Ok(entries)
}

pub fn entries_to_jsonl(entries: &[OrderingEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let rec = AssetRecord {
            index: e.index,
            a: e.point.a,
            b: e.point.b,
            edges_added: e.edges_added,
        };
        out.push_str(&serde_json::to_string(&rec).expect("serializable record"));
        out.push('\n');
    }
    out
}

/// Translation-normal form: subtract the least point.
fn normalized(points: &[TriPoint]) -> Vec<TriPoint> {
    let mut pts = points.to_vec();
    pts.sort();
    let least = pts[0];
    for p in &mut pts {
        *p = *p - least;
    }
    pts
}

/// Searches for a 55-vertex ordering whose every prefix has exactly `e(n)`
/// edges, ending in the extremal 12-gon with `u_i = 2, t_i = 1`.
///
/// Any valid ordering ends in a translate of that 12-gon (it is the unique
/// optimum at n = 55) and every prefix is a subset of the final set, so the
/// search fixes one concrete copy and peels it backwards: at size m it
/// removes a point whose degree is exactly `e(m) - e(m-1)`, which leaves a
/// prefix with exactly `e(m-1)` edges. Candidates are tried in lexicographic
/// order with backtracking; peeling keeps every intermediate state inside the
/// target, where the forward search wastes most of its time on prefixes that
/// can never reach the final shape.
pub fn generate_first55() -> Result<Vec<OrderingEntry>> {
    let target = twelvegon_points(
        &TwelveGonParams::regular(2, 1).expect("valid sides"),
        TriPoint::new(0, 0),
    )?;
    let required: Vec<u64> = {
        let mut req = vec![0u64];
        for n in 2..=55u64 {
            req.push(e_any(n)? - e_any(n - 1)?);
        }
        req
    };

    struct Peel<'a> {
        required: &'a [u64],
        current: HashSet<TriPoint>,
        removed: Vec<TriPoint>,
        steps: u64,
    }

    impl Peel<'_> {
        fn degree(&self, p: TriPoint) -> u64 {
            crate::trilattice::tri_neighbors(p)
                .iter()
                .filter(|nb| self.current.contains(nb))
                .count() as u64
        }

        fn run(&mut self) -> Result<bool> {
            let m = self.current.len();
            if m == 1 {
                return Ok(true);
            }
            self.steps += 1;
            if self.steps > 50_000_000 {
                return Err(Error::Verification(
                    "first-55 search exhausted its step budget".into(),
                ));
            }
            let need = self.required[m - 1];
            let mut candidates: Vec<TriPoint> = self
                .current
                .iter()
                .copied()
                .filter(|&p| self.degree(p) == need)
                .collect();
            candidates.sort();
            for cand in candidates {
                self.current.remove(&cand);
                self.removed.push(cand);
                if self.run()? {
                    return Ok(true);
                }
                self.removed.pop();
                self.current.insert(cand);
            }
            Ok(false)
        }
    }

    let mut peel = Peel {
        required: &required,
        current: target.points().iter().copied().collect(),
        removed: Vec::with_capacity(55),
        steps: 0,
    };
    if !peel.run()? {
        return Err(Error::Verification(
            "no prefix-optimal ordering of the extremal 55-gon exists under the search bounds"
                .into(),
        ));
    }

    let mut chosen: Vec<TriPoint> = peel.current.iter().copied().collect();
    chosen.extend(peel.removed.iter().rev());
    debug_assert_eq!(normalized(&chosen), normalized(target.points()));
    let mut entries = Vec::with_capacity(55);
    let mut cumulative = 0u64;
    for (i, &point) in chosen.iter().enumerate() {
        let edges_added = required[i] as u32;
        cumulative += edges_added as u64;
        entries.push(OrderingEntry {
            index: i as u64 + 1,
            point,
            edges_added,
            cumulative_edges: cumulative,
        });
    }
    Ok(entries)
}

/// Anchor motion per side fill: filling `t_6` extends the bottom row one
/// step left; filling `u_1` adds a new bottom row whose left end sits one
/// long step below. All other fills leave the bottom-left corner alone.
fn anchor_after(anchor: TriPoint, mv: SideMove) -> TriPoint {
    match mv {
        SideMove::T(5) => anchor + TriPoint::new(-1, 0),
        SideMove::U(0) => anchor + TriPoint::new(2, -1),
        _ => anchor,
    }
}

/// The nested ordering `v_1, v_2, ...` up to `n_max`: the first-55 asset,
/// then for k = 3, 4, ... the 48 side fills of the growth sequence, each
/// expanded into its row of concrete vertices added end to end from the
/// least endpoint.
pub fn ordering(n_max: u64) -> Result<Vec<OrderingEntry>> {
    if n_max < 1 {
        return Err(Error::Domain("ordering needs n_max >= 1".into()));
    }
    let first = load_first55()?;
    let mut entries: Vec<OrderingEntry> =
        first.iter().take(n_max.min(55) as usize).copied().collect();
    if n_max <= 55 {
        return Ok(entries);
    }

    let moves = find_side_sequence()?;
    let mut in_set: HashSet<TriPoint> = first.iter().map(|e| e.point).collect();
    let mut cumulative = first.last().expect("55 entries").cumulative_edges;
    let mut index = 55u64;

    // Recover the concrete polygon position from the asset's final set.
    let start_hull = HullSet::from_points(&first.iter().map(|e| e.point).collect::<Vec<_>>())
        .map_err(|e| Error::Asset(format!("first-55 asset is not a filled 12-gon: {e}")))?;
    let params = params_from_hull(&start_hull)?;
    if params != TwelveGonParams::regular(2, 1).expect("valid sides") {
        return Err(Error::Asset(
            "first-55 asset does not end in the extremal 12-gon".into(),
        ));
    }
    let mut anchor = start_hull.anchor();
    let mut old_points = start_hull;

    'grow: for k in 3.. {
        let mut node = INITIAL_NODE;
        for &mv in &moves {
            let next = apply_side_fill(node, mv)?;
            let next_anchor = anchor_after(anchor, mv);
            let next_points = twelvegon_points(&next.params_at(k)?, next_anchor)?;
            if next_points.points().first() != Some(&next_anchor) {
                return Err(Error::Internal(
                    "anchor tracking diverged from the polygon walk".into(),
                ));
            }
            let expected_row =
                vertex_count(&next.params_at(k)?)? - vertex_count(&node.params_at(k)?)?;
            let mut row: Vec<TriPoint> = next_points
                .points()
                .iter()
                .copied()
                .filter(|p| !old_points.contains(*p))
                .collect();
            row.sort();
            if row.len() as i64 != expected_row {
                return Err(Error::Internal(format!(
                    "side fill {mv} at k={k} added {} vertices, expected {expected_row}",
                    row.len()
                )));
            }
            for point in row {
                let edges_added = crate::trilattice::tri_neighbors(point)
                    .iter()
                    .filter(|nb| in_set.contains(nb))
                    .count() as u32;
                in_set.insert(point);
                index += 1;
                cumulative += edges_added as u64;
                entries.push(OrderingEntry {
                    index,
                    point,
                    edges_added,
                    cumulative_edges: cumulative,
                });
                if index == n_max {
                    break 'grow;
                }
            }
            node = next;
            anchor = next_anchor;
            old_points = next_points;
        }
        debug_assert_eq!(node, TERMINAL_NODE);
        // terminal at k equals initial at k+1; anchor and points carry over
    }
    Ok(entries)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct NestedReport {
    pub n_max: u64,
    pub prefixes_checked: u64,
}

/// Recounts the induced edges of every prefix through the lattice module and
/// compares with `e(n)`; independent of the generator's bookkeeping. Also
/// checks the per-step increments are 5 or 6 beyond the first 12-gon.
pub fn verify_nested(n_max: u64) -> Result<NestedReport> {
    if n_max < 1 {
        return Err(Error::Domain("verify_nested needs n_max >= 1".into()));
    }
    let entries = ordering(n_max)?;
    if entries.len() as u64 != n_max {
        return Err(Error::Internal(format!(
            "ordering produced {} entries for n_max={n_max}",
            entries.len()
        )));
    }
    let spec = crate::trilattice::tri_spec();
    let mut prefix: Vec<crate::lattice::LatticePoint> = Vec::with_capacity(n_max as usize);
    for (i, entry) in entries.iter().enumerate() {
        let n = i as u64 + 1;
        prefix.push(entry.point.to_lattice());
        let set = crate::lattice::VertexSet::new(prefix.iter().cloned())?;
        if set.len() as u64 != n {
            return Err(Error::Verification(format!(
                "ordering repeats a point at index {n}"
            )));
        }
        let recount = induced_edge_count(&set, spec)?;
        let expected = e_any(n)?;
        if recount != expected {
            return Err(Error::Verification(format!(
                "prefix {n} has {recount} edges, expected e({n}) = {expected}"
            )));
        }
        if entry.cumulative_edges != recount {
            return Err(Error::Verification(format!(
                "generator bookkeeping at index {n} disagrees with the recount"
            )));
        }
        if n > 56 && !(entry.edges_added == 5 || entry.edges_added == 6) {
            return Err(Error::Verification(format!(
                "step {n} adds {} edges; beyond the first 12-gon every step adds 5 or 6",
                entry.edges_added
            )));
        }
    }
    Ok(NestedReport {
        n_max,
        prefixes_checked: n_max,
    })
}
