//! Verifiers for mutual-visibility, outer and total mutual-visibility and
//! general position, plus twin detection and the twin transforms.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{visible, DistanceMatrix, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PropertyKind {
    /// Members are pairwise visible.
    MutualVisibility,
    /// Mutual-visibility, and every member sees every non-member.
    OuterMutualVisibility,
    /// Every pair of vertices of the graph is visible.
    TotalMutualVisibility,
    /// No three members on a common geodesic.
    GeneralPosition,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 4] = [
        PropertyKind::MutualVisibility,
        PropertyKind::OuterMutualVisibility,
        PropertyKind::TotalMutualVisibility,
        PropertyKind::GeneralPosition,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            PropertyKind::MutualVisibility => "mv",
            PropertyKind::OuterMutualVisibility => "outer",
            PropertyKind::TotalMutualVisibility => "total",
            PropertyKind::GeneralPosition => "gp",
        }
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for PropertyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mv" | "mu" => Ok(PropertyKind::MutualVisibility),
            "outer" | "outer-mv" | "mu-o" => Ok(PropertyKind::OuterMutualVisibility),
            "total" | "total-mv" | "mu-t" => Ok(PropertyKind::TotalMutualVisibility),
            "gp" => Ok(PropertyKind::GeneralPosition),
            _ => Err(Error::InvalidParameter(format!(
                "unknown property kind {s:?} (expected mv, outer, total or gp)"
            ))),
        }
    }
}

fn check_inputs(g: &Graph, d: &DistanceMatrix, s: VertexSet) -> Result<()> {
    if g.order() != d.order() {
        return Err(Error::Precondition(
            "distance matrix does not match graph".into(),
        ));
    }
    if let Some(v) = s.difference(g.vertices()).first() {
        return Err(Error::VertexOutOfRange {
            index: v,
            order: g.order(),
        });
    }
    d.ensure_connected()
}

pub fn is_mutual_visibility_set(g: &Graph, d: &DistanceMatrix, s: VertexSet) -> Result<bool> {
    check_inputs(g, d, s)?;
    Ok(pairs_visible(g, d, s, s, s))
}

pub fn is_outer_mutual_visibility_set(g: &Graph, d: &DistanceMatrix, s: VertexSet) -> Result<bool> {
    check_inputs(g, d, s)?;
    Ok(pairs_visible(g, d, s, s, s) && pairs_visible(g, d, s, g.vertices().difference(s), s))
}

pub fn is_total_mutual_visibility_set(g: &Graph, d: &DistanceMatrix, s: VertexSet) -> Result<bool> {
    check_inputs(g, d, s)?;
    Ok(pairs_visible(g, d, g.vertices(), g.vertices(), s))
}

/// Every distinct pair from `left x right` is visible with respect to
/// `blocked`.
fn pairs_visible(
    g: &Graph,
    d: &DistanceMatrix,
    left: VertexSet,
    right: VertexSet,
    blocked: VertexSet,
) -> bool {
    for u in left {
        for v in right {
            if u == v || (v < u && left.contains(v) && right.contains(u)) {
                continue;
            }
            if !visible(g, d, u, v, blocked) {
                return false;
            }
        }
    }
    true
}

/// Distance test over all triples of `s`.
pub fn is_general_position_set(g: &Graph, d: &DistanceMatrix, s: VertexSet) -> Result<bool> {
    check_inputs(g, d, s)?;
    let members = s.to_vec();
    for (i, &x) in members.iter().enumerate() {
        for (j, &y) in members.iter().enumerate().skip(i + 1) {
            for &z in &members[j + 1..] {
                let (xy, yz, xz) = (d.get(x, y), d.get(y, z), d.get(x, z));
                if xy + yz == xz || xy + xz == yz || xz + yz == xy {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Partition of a general position set into the components of the subgraph
/// it induces, with the common distance between any two blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionWitness {
    pub blocks: Vec<VertexSet>,
    /// `distances[i][j]` is the distance between blocks `i` and `j`
    /// (0 on the diagonal).
    pub distances: Vec<Vec<u32>>,
}

/// General position via the block structure of `G[S]`: components must be
/// cliques, the component partition must be distance-constant, and no block
/// distance may split through a third block.
pub fn is_general_position_set_via_characterization(
    g: &Graph,
    d: &DistanceMatrix,
    s: VertexSet,
) -> Result<(bool, Option<PartitionWitness>)> {
    check_inputs(g, d, s)?;
    let mut blocks = Vec::new();
    let mut rest = s;
    while let Some(v) = rest.first() {
        let block = g.component_within(v, s);
        if !g.is_clique(block) {
            return Ok((false, None));
        }
        rest = rest.difference(block);
        blocks.push(block);
    }

    let p = blocks.len();
    let mut distances = vec![vec![0u32; p]; p];
    for i in 0..p {
        for j in i + 1..p {
            let x0 = blocks[i].first().unwrap();
            let y0 = blocks[j].first().unwrap();
            let common = d.get(x0, y0);
            for x in blocks[i] {
                for y in blocks[j] {
                    if d.get(x, y) != common {
                        return Ok((false, None));
                    }
                }
            }
            distances[i][j] = common;
            distances[j][i] = common;
        }
    }

    for i in 0..p {
        for j in 0..p {
            for k in 0..p {
                if i == j || j == k || i == k {
                    continue;
                }
                if distances[i][k] == distances[i][j] + distances[j][k] {
                    return Ok((false, None));
                }
            }
        }
    }
    Ok((true, Some(PartitionWitness { blocks, distances })))
}

pub fn satisfies(kind: PropertyKind, g: &Graph, d: &DistanceMatrix, s: VertexSet) -> Result<bool> {
    match kind {
        PropertyKind::MutualVisibility => is_mutual_visibility_set(g, d, s),
        PropertyKind::OuterMutualVisibility => is_outer_mutual_visibility_set(g, d, s),
        PropertyKind::TotalMutualVisibility => is_total_mutual_visibility_set(g, d, s),
        PropertyKind::GeneralPosition => is_general_position_set(g, d, s),
    }
}

/// Unordered pairs `(u, v)`, `u < v`, with `N(u) = N(v)`.
pub fn find_false_twins(g: &Graph) -> Vec<(usize, usize)> {
    twin_pairs(g, |v| g.neighbors(v))
}

/// Unordered pairs `(u, v)`, `u < v`, with `N[u] = N[v]`.
pub fn find_true_twins(g: &Graph) -> Vec<(usize, usize)> {
    twin_pairs(g, |v| g.closed_neighbors(v))
}

fn twin_pairs(g: &Graph, hood: impl Fn(usize) -> VertexSet) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if hood(u) == hood(v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// `(S \ {u}) ∪ {v}` for false twins `u ∈ S`, `v ∉ S`. The result satisfies
/// general position, resp. mutual-visibility, exactly when `S` does.
pub fn false_twin_swap(g: &Graph, s: VertexSet, u: usize, v: usize) -> Result<VertexSet> {
    let n = g.order();
    if u >= n || v >= n {
        return Err(Error::VertexOutOfRange {
            index: u.max(v),
            order: n,
        });
    }
    if u == v || g.neighbors(u) != g.neighbors(v) {
        return Err(Error::Precondition(format!(
            "{} and {} are not false twins",
            g.label(u),
            g.label(v)
        )));
    }
    if !s.contains(u) || s.contains(v) {
        return Err(Error::Precondition(
            "swap needs u in the set and v outside it".into(),
        ));
    }
    Ok(s.without(u).with(v))
}

/// `S ∪ {v}` for a true twin `v` of some `u ∈ S`; preserves general position
/// only. Mutual-visibility can break.
pub fn true_twin_extend(g: &Graph, s: VertexSet, u: usize, v: usize) -> Result<VertexSet> {
    let n = g.order();
    if u >= n || v >= n {
        return Err(Error::VertexOutOfRange {
            index: u.max(v),
            order: n,
        });
    }
    if u == v || g.closed_neighbors(u) != g.closed_neighbors(v) {
        return Err(Error::Precondition(format!(
            "{} and {} are not true twins",
            g.label(u),
            g.label(v)
        )));
    }
    if !s.contains(u) {
        return Err(Error::Precondition("extension needs u in the set".into()));
    }
    Ok(s.with(v))
}
