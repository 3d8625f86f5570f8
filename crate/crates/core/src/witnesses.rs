//! Closed-form values for the double-graph and Mycielskian families, and
//! explicit mutual-visibility sets realising their lower bounds.
//!
//! Witness sets use the operator layout from [`crate::families`]: base
//! vertex `i` is index `i`, its copy is `n + i`, the apex is `2n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::{Family, GraphSpec};
use crate::graph::{Graph, VertexSet};
use crate::visibility::{is_outer_mutual_visibility_set, is_total_mutual_visibility_set};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormulaId {
    /// `mu(D(C_n)) = n`, n >= 7.
    MuDoubleCycle,
    /// `mu(D(C_4)) = mu(D(C_5)) = 6`, `mu(D(C_6)) = 7`.
    MuDoubleCycleSmall,
    /// `gp(D(P_n)) = 4`, n >= 3.
    GpDoublePath,
    /// `gp(D(C_n)) = 6`, n >= 6.
    GpDoubleCycle,
    /// `gp(D(K_n)) = n`, n >= 2.
    GpDoubleComplete,
    /// `gp(D(K_n^-)) = n`, n >= 5, as stated; the solver finds n - 1.
    GpDoubleKminus,
    /// `mu(M(P_n)) = n + floor((n+1)/4)`, n >= 5.
    MuMycPath,
    /// `mu(M(C_n)) = n + floor(n/4)`, n >= 8.
    MuMycCycle,
    /// `mu(M(C_n)) = n + 2`, 4 <= n <= 7.
    MuMycCycleSmall,
    /// `mu(D(G)) = 2n - 1` when G has a universal vertex, n >= 2.
    MuUniversalDouble,
    /// `mu(M(G)) = 2n - 1` when G has a universal vertex, n >= 2.
    MuUniversalMyc,
    /// `mu(M(K_{r,s})) = 2(r + s) - 2`, r, s >= 3.
    MuMycKbip,
}

impl FormulaId {
    pub const ALL: [FormulaId; 12] = [
        FormulaId::MuDoubleCycle,
        FormulaId::MuDoubleCycleSmall,
        FormulaId::GpDoublePath,
        FormulaId::GpDoubleCycle,
        FormulaId::GpDoubleComplete,
        FormulaId::GpDoubleKminus,
        FormulaId::MuMycPath,
        FormulaId::MuMycCycle,
        FormulaId::MuMycCycleSmall,
        FormulaId::MuUniversalDouble,
        FormulaId::MuUniversalMyc,
        FormulaId::MuMycKbip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::MuDoubleCycle => "mu_double_cycle",
            FormulaId::MuDoubleCycleSmall => "mu_double_cycle_small",
            FormulaId::GpDoublePath => "gp_double_path",
            FormulaId::GpDoubleCycle => "gp_double_cycle",
            FormulaId::GpDoubleComplete => "gp_double_complete",
            FormulaId::GpDoubleKminus => "gp_double_kminus",
            FormulaId::MuMycPath => "mu_myc_path",
            FormulaId::MuMycCycle => "mu_myc_cycle",
            FormulaId::MuMycCycleSmall => "mu_myc_cycle_small",
            FormulaId::MuUniversalDouble => "mu_universal_double",
            FormulaId::MuUniversalMyc => "mu_universal_myc",
            FormulaId::MuMycKbip => "mu_myc_kbip",
        }
    }

    /// Number of integer parameters the formula takes.
    pub fn arity(self) -> usize {
        match self {
            FormulaId::MuMycKbip => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<FormulaId> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown formula {s:?}")))
    }
}

pub fn formula_value(id: FormulaId, params: &[usize]) -> Result<usize> {
    if params.len() != id.arity() {
        return Err(Error::InvalidParameter(format!(
            "{id} takes {} parameter(s), got {}",
            id.arity(),
            params.len()
        )));
    }
    let n = params[0];
    let domain = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{id}: {what}")))
        }
    };
    match id {
        FormulaId::MuDoubleCycle => {
            domain(n >= 7, "needs n >= 7")?;
            Ok(n)
        }
        FormulaId::MuDoubleCycleSmall => match n {
            4 | 5 => Ok(6),
            6 => Ok(7),
            _ => Err(Error::InvalidParameter(format!("{id}: needs n in 4..=6"))),
        },
        FormulaId::GpDoublePath => {
            domain(n >= 3, "needs n >= 3")?;
            Ok(4)
        }
        FormulaId::GpDoubleCycle => {
            domain(n >= 6, "needs n >= 6")?;
            Ok(6)
        }
        FormulaId::GpDoubleComplete => {
            domain(n >= 2, "needs n >= 2")?;
            Ok(n)
        }
        FormulaId::GpDoubleKminus => {
            domain(n >= 5, "needs n >= 5")?;
            Ok(n)
        }
        FormulaId::MuMycPath => {
            domain(n >= 5, "needs n >= 5")?;
            Ok(n + (n + 1) / 4)
        }
        FormulaId::MuMycCycle => {
            domain(n >= 8, "needs n >= 8")?;
            Ok(n + n / 4)
        }
        FormulaId::MuMycCycleSmall => {
            domain((4..=7).contains(&n), "needs 4 <= n <= 7")?;
            Ok(n + 2)
        }
        FormulaId::MuUniversalDouble | FormulaId::MuUniversalMyc => {
            domain(n >= 2, "needs n >= 2")?;
            Ok(2 * n - 1)
        }
        FormulaId::MuMycKbip => {
            let (r, s) = (params[0], params[1]);
            domain(r.min(s) >= 3, "needs both sides >= 3")?;
            Ok(2 * (r + s) - 2)
        }
    }
}

fn copies(n: usize) -> VertexSet {
    VertexSet::range(n, 2 * n)
}

/// `V(G') ∪ S` inside `D(G)` for a total mutual-visibility set `S` of a
/// connected non-complete `G`.
pub fn witness_double_from_total(g: &Graph, total_set: VertexSet) -> Result<VertexSet> {
    let d = g.distances();
    if g.is_complete() {
        return Err(Error::Precondition(
            "base graph must not be complete".into(),
        ));
    }
    if !is_total_mutual_visibility_set(g, &d, total_set)? {
        return Err(Error::Precondition(
            "set is not a total mutual-visibility set".into(),
        ));
    }
    Ok(copies(g.order()).union(total_set))
}

/// Mutual-visibility set of `M(P_n)` of size `n + floor((n+1)/4)`: the odd
/// base vertices `R`, plus every copy except `v'_2, v'_6, v'_10, ...`, with
/// `v'_{k-1}` also dropped when `|R|` is odd (`v_k` the last vertex of `R`).
pub fn witness_myc_path(n: usize) -> Result<VertexSet> {
    if n < 5 {
        return Err(Error::InvalidParameter("path witness needs n >= 5".into()));
    }
    // 1-based labels throughout, shifted to indices at the end
    let k = if n.is_multiple_of(2) { n - 1 } else { n };
    let r: Vec<usize> = (1..=k).step_by(2).collect();
    let mut dropped: Vec<usize> = (0..=(n - 3) / 4).map(|l| 4 * l + 2).collect();
    if r.len() % 2 == 1 {
        dropped.push(k - 1);
    }
    let mut s: VertexSet = r.iter().map(|&i| i - 1).collect();
    for i in 1..=n {
        if !dropped.contains(&i) {
            s.insert(n + i - 1);
        }
    }
    Ok(s)
}

/// Mutual-visibility set of `M(C_n)` of size `n + floor(n/4)`: the maximum
/// independent set `v1, v3, ...` plus every copy except the dominators
/// `v'_2, v'_6, v'_10, ...`.
pub fn witness_myc_cycle(n: usize) -> Result<VertexSet> {
    if n < 8 {
        return Err(Error::InvalidParameter("cycle witness needs n >= 8".into()));
    }
    let half = n / 2;
    let r: VertexSet = (0..half).map(|j| 2 * j).collect();
    let dominators: VertexSet = (0..half.div_ceil(2)).map(|l| 4 * l + 1).collect();
    Ok(r.union(copies(n).difference(dominators.iter().map(|i| n + i).collect())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    Double,
    Mycielskian,
}

/// For a universal vertex `v`: `N[v]` in `D(G)`, or `(V(G) \ {v}) ∪ V(G')`
/// in `M(G)`. Both have `2n - 1` vertices.
pub fn witness_universal(g: &Graph, v: usize, operator: Operator) -> Result<VertexSet> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "needs at least two vertices".into(),
        ));
    }
    if v >= n {
        return Err(Error::VertexOutOfRange { index: v, order: n });
    }
    if !g.universal_vertices().contains(v) {
        return Err(Error::Precondition(format!(
            "{} is not universal",
            g.label(v)
        )));
    }
    Ok(match operator {
        Operator::Double => {
            let hood = g.neighbors(v);
            hood.union(hood.iter().map(|u| n + u).collect()).with(v)
        }
        Operator::Mycielskian => g.vertices().without(v).union(copies(n)),
    })
}

/// `M ∪ V(G')` inside `M(G)` for an outer mutual-visibility set `M` of a
/// connected non-complete `G` of diameter at most 3.
pub fn witness_diam3(g: &Graph, outer_set: VertexSet) -> Result<VertexSet> {
    let d = g.distances();
    d.ensure_connected()?;
    if g.is_complete() {
        return Err(Error::Precondition(
            "base graph must not be complete".into(),
        ));
    }
    if d.diameter().unwrap_or(0) > 3 {
        return Err(Error::Precondition(
            "base graph has diameter above 3".into(),
        ));
    }
    if !is_outer_mutual_visibility_set(g, &d, outer_set)? {
        return Err(Error::Precondition(
            "set is not an outer mutual-visibility set".into(),
        ));
    }
    Ok(outer_set.union(copies(g.order())))
}

/// Literal small-cycle sets in `D(C_4)`, `D(C_5)` and `D(C_6)`
/// (`dc4`, `dc5`, `dc6`).
pub fn fixed_witness(name: &str) -> Result<(GraphSpec, VertexSet)> {
    let (n, labels) = match name {
        "dc4" => (4, "v1' v2' v3' v4' v1 v2"),
        "dc5" => (5, "v2' v3' v4' v5' v2 v5"),
        "dc6" => (6, "v2' v3' v4' v5' v6' v2 v6"),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "unknown fixed witness {name:?}"
            )))
        }
    };
    let spec = GraphSpec::double(Family::Cycle(n).into());
    let set = spec.build()?.parse_set(labels)?;
    Ok((spec, set))
}

/// Golden witness text: one set per line, labels in index order.
pub fn format_golden(g: &Graph, sets: &[VertexSet]) -> String {
    sets.iter().map(|&s| g.format_set(s) + "\n").collect()
}

/// Reads golden witness text; `#` lines are comments.
pub fn parse_golden(g: &Graph, text: &str) -> Result<Vec<VertexSet>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| g.parse_set(l))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{double_graph, generate, mycielskian};
    use crate::visibility::is_mutual_visibility_set;

    fn fam(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    fn is_mv(g: &Graph, s: VertexSet) -> bool {
        is_mutual_visibility_set(g, &g.distances(), s).unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(formula_value(FormulaId::MuMycPath, &[8]).unwrap(), 10);
        assert_eq!(formula_value(FormulaId::MuDoubleCycle, &[7]).unwrap(), 7);
        assert_eq!(formula_value(FormulaId::MuMycKbip, &[3, 3]).unwrap(), 10);
        assert_eq!(formula_value(FormulaId::MuMycKbip, &[3, 4]).unwrap(), 12);
        assert_eq!(
            formula_value(FormulaId::MuDoubleCycleSmall, &[6]).unwrap(),
            7
        );
        assert_eq!(formula_value(FormulaId::MuMycCycle, &[9]).unwrap(), 11);
        assert_eq!(formula_value(FormulaId::MuMycCycleSmall, &[5]).unwrap(), 7);
        assert_eq!(formula_value(FormulaId::MuUniversalMyc, &[4]).unwrap(), 7);
    }

    #[test]
    fn formula_domains() {
        let bad: [(FormulaId, &[usize]); 9] = [
            (FormulaId::MuDoubleCycle, &[6]),
            (FormulaId::MuDoubleCycleSmall, &[7]),
            (FormulaId::GpDoublePath, &[2]),
            (FormulaId::GpDoubleCycle, &[5]),
            (FormulaId::GpDoubleKminus, &[4]),
            (FormulaId::MuMycPath, &[4]),
            (FormulaId::MuMycCycleSmall, &[8]),
            (FormulaId::MuMycKbip, &[2, 5]),
            (FormulaId::MuMycKbip, &[5]),
        ];
        for (id, params) in bad {
            assert!(formula_value(id, params).is_err(), "{id} {params:?}");
        }
        for id in FormulaId::ALL {
            assert_eq!(id.name().parse::<FormulaId>().unwrap(), id);
        }
    }

    #[test]
    fn double_from_total_examples() {
        let p5 = fam(Family::Path(5));
        let s = witness_double_from_total(&p5, [0, 4].into_iter().collect()).unwrap();
        assert_eq!(s.len(), 7);
        assert!(is_mv(&double_graph(&p5).unwrap(), s));

        let c7 = fam(Family::Cycle(7));
        let s = witness_double_from_total(&c7, VertexSet::EMPTY).unwrap();
        assert_eq!(s, VertexSet::range(7, 14));
        assert!(is_mv(&double_graph(&c7).unwrap(), s));

        assert!(witness_double_from_total(&fam(Family::Complete(4)), VertexSet::EMPTY).is_err());
        assert!(witness_double_from_total(&p5, [0, 1].into_iter().collect()).is_err());
    }

    #[test]
    fn myc_path_witness_n5() {
        let g = mycielskian(&fam(Family::Path(5))).unwrap();
        let s = witness_myc_path(5).unwrap();
        assert_eq!(g.format_set(s), "v1 v3 v5 v1' v3' v5'");
        assert!(is_mv(&g, s));
        assert_eq!(witness_myc_path(8).unwrap().len(), 10);
        assert!(witness_myc_path(4).is_err());
    }

    #[test]
    fn myc_cycle_witness_n8() {
        let g = mycielskian(&fam(Family::Cycle(8))).unwrap();
        let s = witness_myc_cycle(8).unwrap();
        assert_eq!(g.format_set(s), "v1 v3 v5 v7 v1' v3' v4' v5' v7' v8'");
        assert!(is_mv(&g, s));
        assert_eq!(witness_myc_cycle(9).unwrap().len(), 11);
        assert!(witness_myc_cycle(7).is_err());
    }

    #[test]
    fn universal_witnesses() {
        let star = fam(Family::Star(4));
        let s = witness_universal(&star, 0, Operator::Double).unwrap();
        assert_eq!(s.len(), 7);
        assert!(is_mv(&double_graph(&star).unwrap(), s));
        let s = witness_universal(&star, 0, Operator::Mycielskian).unwrap();
        assert_eq!(s.len(), 7);
        assert!(is_mv(&mycielskian(&star).unwrap(), s));
        let k3 = fam(Family::Complete(3));
        let s = witness_universal(&k3, 1, Operator::Mycielskian).unwrap();
        assert_eq!(s.len(), 5);
        assert!(is_mv(&mycielskian(&k3).unwrap(), s));
        assert!(witness_universal(&star, 1, Operator::Double).is_err());
    }

    #[test]
    fn diam3_preconditions() {
        let p5 = fam(Family::Path(5));
        assert!(witness_diam3(&p5, VertexSet::EMPTY).is_err());
        assert!(witness_diam3(&fam(Family::Complete(3)), VertexSet::EMPTY).is_err());
        let c5 = fam(Family::Cycle(5));
        assert!(witness_diam3(&c5, [0, 1, 2].into_iter().collect()).is_err());
        let outer = crate::solver::max_property_set(
            &c5,
            crate::visibility::PropertyKind::OuterMutualVisibility,
            &Default::default(),
        )
        .unwrap();
        let s = witness_diam3(&c5, outer.witness).unwrap();
        assert_eq!(s.len(), 5 + outer.value);
        assert!(is_mv(&mycielskian(&c5).unwrap(), s));
    }

    #[test]
    fn fixed_witness_sizes() {
        for (name, size) in [("dc4", 6), ("dc5", 6), ("dc6", 7)] {
            let (spec, s) = fixed_witness(name).unwrap();
            assert_eq!(s.len(), size);
            assert!(is_mv(&spec.build().unwrap(), s));
        }
        assert!(fixed_witness("dc7").is_err());
    }

    #[test]
    fn golden_round_trip() {
        let (spec, s) = fixed_witness("dc6").unwrap();
        let g = spec.build().unwrap();
        let text = format_golden(&g, &[s, VertexSet::EMPTY.with(0)]);
        assert_eq!(text, "v2 v6 v2' v3' v4' v5' v6'\nv1\n");
        assert_eq!(
            parse_golden(&g, &format!("# header\n{text}")).unwrap(),
            vec![s, VertexSet::singleton(0)]
        );
    }
}
