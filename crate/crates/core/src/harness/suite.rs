//! The reproduction suite behind `verify-paper`.
//!
//! Checks are declared in a fixed order and may run concurrently; the report
//! keeps declaration order.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;

use super::corpus::{self, TwinKind};
use super::report::{Check, Expected, Report, Status};
use crate::error::{Error, Result};
use crate::families::{double_graph, generate, mycielskian, Family};
use crate::graph::{Graph, VertexSet};
use crate::solver::{self, SearchStatus, SolveOptions};
use crate::visibility::{
    false_twin_swap, is_general_position_set, is_general_position_set_via_characterization,
    is_mutual_visibility_set, satisfies, true_twin_extend, PropertyKind,
};
use crate::witnesses::{self, formula_value, FormulaId, Operator};

const MV: PropertyKind = PropertyKind::MutualVisibility;
const OUTER: PropertyKind = PropertyKind::OuterMutualVisibility;
const TOTAL: PropertyKind = PropertyKind::TotalMutualVisibility;
const GP: PropertyKind = PropertyKind::GeneralPosition;

pub const TWIN_TRIALS: usize = 200;
pub const BALLOON_GOLDEN: &str = include_str!("../../golden/double_balloon2_mv.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Double,
    Mycielskian,
    Bounds,
}

impl Scope {
    fn includes(self, other: Scope) -> bool {
        self == Scope::All || self == other
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::All => "all",
            Scope::Double => "double",
            Scope::Mycielskian => "mycielskian",
            Scope::Bounds => "bounds",
        })
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scope> {
        match s {
            "all" => Ok(Scope::All),
            "double" => Ok(Scope::Double),
            "mycielskian" | "myc" => Ok(Scope::Mycielskian),
            "bounds" => Ok(Scope::Bounds),
            _ => Err(Error::InvalidParameter(format!("unknown scope {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub scope: Scope,
    pub seed: u64,
    /// Instances of larger order are reported as `skip`.
    pub max_n: usize,
    /// Per-check solver limit.
    pub time_limit: Option<Duration>,
    /// Checks run on this many threads.
    pub workers: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            scope: Scope::All,
            seed: corpus::DEFAULT_SEED,
            max_n: solver::DEFAULT_MAX_ORDER,
            time_limit: Some(Duration::from_secs(300)),
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

type Job = Box<dyn Fn(&SuiteConfig) -> Check + Send + Sync>;

struct Declared {
    name: String,
    job: Job,
}

/// Names of the checks `scope` runs, in report order.
pub fn check_names(scope: Scope) -> Vec<String> {
    declare(scope).into_iter().map(|d| d.name).collect()
}

pub fn run_verification_suite(config: &SuiteConfig) -> Report {
    let start = Instant::now();
    let declared = declare(config.scope);
    let run = |d: &Declared| {
        let t = Instant::now();
        let mut check = (d.job)(config);
        check.elapsed = t.elapsed();
        check
    };
    let checks = if config.workers > 1 {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
        {
            Ok(pool) => pool.install(|| declared.par_iter().map(run).collect()),
            Err(_) => declared.iter().map(run).collect(),
        }
    } else {
        declared.iter().map(run).collect()
    };
    Report {
        checks,
        elapsed: start.elapsed(),
    }
}

fn declare(scope: Scope) -> Vec<Declared> {
    let mut out = Vec::new();
    if scope.includes(Scope::Double) {
        declare_double(&mut out);
    }
    if scope.includes(Scope::Mycielskian) {
        declare_mycielskian(&mut out);
    }
    if scope.includes(Scope::Bounds) {
        declare_bounds(&mut out);
    }
    out
}

fn formula(id: FormulaId, params: &[usize]) -> usize {
    formula_value(id, params).expect("declared parameters are in the formula domain")
}

fn push(out: &mut Vec<Declared>, name: String, job: Job) {
    out.push(Declared { name, job });
}

/// Solver check on the graph described by `spec`.
fn solve(
    out: &mut Vec<Declared>,
    name: String,
    spec: String,
    kind: PropertyKind,
    expected: Expected,
) {
    solve_with(out, name, spec, kind, expected, None);
}

fn solve_with(
    out: &mut Vec<Declared>,
    name: String,
    spec: String,
    kind: PropertyKind,
    expected: Expected,
    target: Option<usize>,
) {
    let check_name = name.clone();
    push(
        out,
        name,
        Box::new(move |cfg| {
            let mut check = Check {
                name: check_name.clone(),
                graph: spec.clone(),
                kind: Some(kind),
                expected,
                actual: None,
                status: Status::Fail,
                elapsed: Duration::ZERO,
            };
            let Ok(g) = super::parse_graph_spec(&spec) else {
                return check;
            };
            if g.order() > cfg.max_n {
                check.status = Status::Skip;
                return check;
            }
            let mut options = SolveOptions {
                max_order: cfg.max_n.max(g.order()),
                ..SolveOptions::default()
            };
            options.time_limit = cfg.time_limit;
            options.target = target;
            let Ok(result) = solver::max_property_set(&g, kind, &options) else {
                return check;
            };
            check.actual = Some(result.value);
            let verified = solver::verify_result(&g, &g.distances(), &result).unwrap_or(false);
            // a timed-out search only settles a lower-bound expectation
            let settled =
                matches!(expected, Expected::AtLeast(_)) && expected.accepts(result.value);
            check.status = match result.status {
                SearchStatus::TimedOut if !settled => Status::Timeout,
                _ if verified && expected.accepts(result.value) => Status::Pass,
                _ => Status::Fail,
            };
            check
        }),
    );
}

/// Check whose outcome is an integer computed by `f`; errors fail the check.
fn count<F>(
    out: &mut Vec<Declared>,
    name: String,
    graph: String,
    kind: Option<PropertyKind>,
    expected: Expected,
    f: F,
) where
    F: Fn(&SuiteConfig) -> Result<usize> + Send + Sync + 'static,
{
    let check_name = name.clone();
    push(
        out,
        name,
        Box::new(move |cfg| match f(cfg) {
            Ok(actual) => Check::decided(check_name.clone(), graph.clone(), kind, expected, actual),
            Err(_) => Check {
                name: check_name.clone(),
                graph: graph.clone(),
                kind,
                expected,
                actual: None,
                status: Status::Fail,
                elapsed: Duration::ZERO,
            },
        }),
    );
}

/// Size of `s` if it is a mutual-visibility set of `g`, else 0.
fn verified_mv_size(g: &Graph, s: VertexSet) -> Result<usize> {
    Ok(if is_mutual_visibility_set(g, &g.distances(), s)? {
        s.len()
    } else {
        0
    })
}

fn build(spec: &str) -> Result<Graph> {
    super::parse_graph_spec(spec)
}

fn declare_double(out: &mut Vec<Declared>) {
    for n in 7..=10 {
        let e = formula(FormulaId::MuDoubleCycle, &[n]);
        solve(
            out,
            format!("mu_D_C{n}"),
            format!("double(cycle:{n})"),
            MV,
            Expected::Exact(e),
        );
    }
    for n in 4..=6 {
        let e = formula(FormulaId::MuDoubleCycleSmall, &[n]);
        solve(
            out,
            format!("mu_D_C{n}"),
            format!("double(cycle:{n})"),
            MV,
            Expected::Exact(e),
        );
    }
    for n in 4..=10usize {
        let bound = 6.max(n / 2 + 4).max(n);
        solve(
            out,
            format!("mu_D_C{n}_upper"),
            format!("double(cycle:{n})"),
            MV,
            Expected::AtMost(bound),
        );
    }
    for n in 3..=8 {
        solve(
            out,
            format!("mu_D_P{n}"),
            format!("double(path:{n})"),
            MV,
            Expected::Exact(n + 2),
        );
    }
    for n in 3..=8 {
        let e = formula(FormulaId::GpDoublePath, &[n]);
        solve(
            out,
            format!("gp_D_P{n}"),
            format!("double(path:{n})"),
            GP,
            Expected::Exact(e),
        );
    }
    for n in 6..=10 {
        let e = formula(FormulaId::GpDoubleCycle, &[n]);
        solve(
            out,
            format!("gp_D_C{n}"),
            format!("double(cycle:{n})"),
            GP,
            Expected::Exact(e),
        );
    }
    for n in 2..=7 {
        let e = formula(FormulaId::GpDoubleComplete, &[n]);
        solve(
            out,
            format!("gp_D_K{n}"),
            format!("double(complete:{n})"),
            GP,
            Expected::Exact(e),
        );
    }
    for n in 5..=8 {
        let e = formula(FormulaId::GpDoubleKminus, &[n]);
        solve(
            out,
            format!("gp_D_Kminus{n}"),
            format!("double(kminus:{n})"),
            GP,
            Expected::Exact(e),
        );
    }
    for m in 2..=5 {
        let e = formula(FormulaId::MuUniversalDouble, &[m + 1]);
        solve(
            out,
            format!("mu_D_star{m}"),
            format!("double(star:{})", m + 1),
            MV,
            Expected::Exact(e),
        );
    }
    for n in 4..=6 {
        let e = formula(FormulaId::MuUniversalDouble, &[n + 1]);
        solve(
            out,
            format!("mu_D_W{n}"),
            format!("double(wheel:{n})"),
            MV,
            Expected::Exact(e),
        );
    }

    solve_with(
        out,
        "mu_D_balloon2".into(),
        "double(balloon:2)".into(),
        MV,
        Expected::AtLeast(12),
        Some(12),
    );
    solve(
        out,
        "mut_balloon2".into(),
        "balloon:2".into(),
        TOTAL,
        Expected::Exact(0),
    );
    count(
        out,
        "golden_D_balloon2".into(),
        "double(balloon:2)".into(),
        Some(MV),
        Expected::AtLeast(12),
        |_| {
            let g = build("double(balloon:2)")?;
            let sets = witnesses::parse_golden(&g, BALLOON_GOLDEN)?;
            let mut best = 0;
            for s in sets {
                best = best.max(verified_mv_size(&g, s)?);
            }
            Ok(best)
        },
    );

    for (name, size) in [("dc4", 6), ("dc5", 6), ("dc6", 7)] {
        count(
            out,
            format!("witness_{name}"),
            name.to_string(),
            Some(MV),
            Expected::Exact(size),
            move |_| {
                let (spec, s) = witnesses::fixed_witness(name)?;
                verified_mv_size(&spec.build()?, s)
            },
        );
    }
    for (spec, total) in [("path:5", "v1,v5"), ("cycle:7", ""), ("cycle:9", "")] {
        let n = build(spec).map_or(0, |g| g.order());
        let expected = n + if total.is_empty() {
            0
        } else {
            total.split(',').count()
        };
        count(
            out,
            format!("witness_D_total_{}", spec.replace(':', "")),
            format!("double({spec})"),
            Some(MV),
            Expected::Exact(expected),
            move |_| {
                let g = build(spec)?;
                let t = if total.is_empty() {
                    VertexSet::EMPTY
                } else {
                    g.parse_set(total)?
                };
                verified_mv_size(
                    &double_graph(&g)?,
                    witnesses::witness_double_from_total(&g, t)?,
                )
            },
        );
    }
    universal_witnesses(out, Operator::Double);
}

fn universal_witnesses(out: &mut Vec<Declared>, op: Operator) {
    let (tag, wrap, id) = match op {
        Operator::Double => ("D", "double", FormulaId::MuUniversalDouble),
        Operator::Mycielskian => ("M", "myc", FormulaId::MuUniversalMyc),
    };
    let mut bases: Vec<(String, String)> = (2..=5)
        .map(|m| (format!("star{m}"), format!("star:{}", m + 1)))
        .collect();
    bases.extend((4..=6).map(|n| (format!("W{n}"), format!("wheel:{n}"))));
    bases.push(("K3".into(), "complete:3".into()));
    for (short, spec) in bases {
        let n = build(&spec).map_or(0, |g| g.order());
        let expected = formula(id, &[n]);
        count(
            out,
            format!("witness_universal_{tag}_{short}"),
            format!("{wrap}({spec})"),
            Some(MV),
            Expected::Exact(expected),
            move |_| {
                let g = build(&spec)?;
                let v = g
                    .universal_vertices()
                    .first()
                    .ok_or_else(|| Error::Precondition("no universal vertex".into()))?;
                let s = witnesses::witness_universal(&g, v, op)?;
                let big = match op {
                    Operator::Double => double_graph(&g)?,
                    Operator::Mycielskian => mycielskian(&g)?,
                };
                verified_mv_size(&big, s)
            },
        );
    }
}

fn declare_mycielskian(out: &mut Vec<Declared>) {
    solve(
        out,
        "mu_M_P4".into(),
        "myc(path:4)".into(),
        MV,
        Expected::Exact(6),
    );
    for n in 5..=10 {
        let e = formula(FormulaId::MuMycPath, &[n]);
        solve(
            out,
            format!("mu_M_P{n}"),
            format!("myc(path:{n})"),
            MV,
            Expected::Exact(e),
        );
    }
    for n in 8..=10 {
        let e = formula(FormulaId::MuMycCycle, &[n]);
        solve(
            out,
            format!("mu_M_C{n}"),
            format!("myc(cycle:{n})"),
            MV,
            Expected::Exact(e),
        );
    }
    for n in 4..=7 {
        let e = formula(FormulaId::MuMycCycleSmall, &[n]);
        solve(
            out,
            format!("mu_M_C{n}"),
            format!("myc(cycle:{n})"),
            MV,
            Expected::Exact(e),
        );
    }
    for (r, s) in [(3, 3), (4, 3)] {
        let e = formula(FormulaId::MuMycKbip, &[r, s]);
        solve(
            out,
            format!("mu_M_K{r}_{s}"),
            format!("myc(kbip:{r},{s})"),
            MV,
            Expected::Exact(e),
        );
    }
    for m in 2..=5 {
        let e = formula(FormulaId::MuUniversalMyc, &[m + 1]);
        solve(
            out,
            format!("mu_M_star{m}"),
            format!("myc(star:{})", m + 1),
            MV,
            Expected::Exact(e),
        );
    }
    for n in 4..=6 {
        let e = formula(FormulaId::MuUniversalMyc, &[n + 1]);
        solve(
            out,
            format!("mu_M_W{n}"),
            format!("myc(wheel:{n})"),
            MV,
            Expected::Exact(e),
        );
    }

    for n in 5..=12 {
        let e = formula(FormulaId::MuMycPath, &[n]);
        count(
            out,
            format!("witness_myc_path{n}"),
            format!("myc(path:{n})"),
            Some(MV),
            Expected::Exact(e),
            move |_| {
                verified_mv_size(
                    &build(&format!("myc(path:{n})"))?,
                    witnesses::witness_myc_path(n)?,
                )
            },
        );
    }
    for n in 8..=12 {
        let e = formula(FormulaId::MuMycCycle, &[n]);
        count(
            out,
            format!("witness_myc_cycle{n}"),
            format!("myc(cycle:{n})"),
            Some(MV),
            Expected::Exact(e),
            move |_| {
                verified_mv_size(
                    &build(&format!("myc(cycle:{n})"))?,
                    witnesses::witness_myc_cycle(n)?,
                )
            },
        );
    }
    universal_witnesses(out, Operator::Mycielskian);
    for (short, spec) in [("C5", "cycle:5"), ("K3_3", "kbip:3,3"), ("P4", "path:4")] {
        // the expected size n + mu_o(G) comes from the solver
        let expected = build(spec)
            .and_then(|g| Ok(g.order() + solver::invariant(&g, OUTER)?))
            .unwrap_or(usize::MAX);
        count(
            out,
            format!("witness_diam3_{short}"),
            format!("myc({spec})"),
            Some(MV),
            Expected::Exact(expected),
            move |_| {
                let g = build(spec)?;
                let outer = solver::max_property_set(&g, OUTER, &SolveOptions::default())?.witness;
                verified_mv_size(&mycielskian(&g)?, witnesses::witness_diam3(&g, outer)?)
            },
        );
    }
}

/// Solver values reused across the corpus checks.
struct Profile {
    g: Graph,
    complete: bool,
    diameter: u32,
    mu: usize,
    mu_o: usize,
    mu_t: usize,
    gp: usize,
}

fn profile(g: Graph) -> Result<Profile> {
    let d = g.distances();
    Ok(Profile {
        complete: g.is_complete(),
        diameter: d.diameter().unwrap_or(u32::MAX),
        mu: solver::invariant(&g, MV)?,
        mu_o: solver::invariant(&g, OUTER)?,
        mu_t: solver::invariant(&g, TOTAL)?,
        gp: solver::invariant(&g, GP)?,
        g,
    })
}

fn corpus_profiles(seed: u64) -> Result<Vec<Profile>> {
    corpus::corpus(seed).into_iter().map(profile).collect()
}

fn corpus_label(seed: u64) -> String {
    format!("corpus(seed={seed})")
}

/// Every connected named-family graph on 1 to 7 vertices.
pub fn small_named_graphs() -> Vec<Graph> {
    let mut fams = Vec::new();
    for n in 1..=7 {
        fams.push(Family::Path(n));
        fams.push(Family::Complete(n));
    }
    for n in 2..=7 {
        fams.push(Family::Star(n));
    }
    for n in 3..=7 {
        fams.push(Family::Cycle(n));
        fams.push(Family::CompleteMinusEdge(n));
    }
    for n in 3..=6 {
        fams.push(Family::Wheel(n));
    }
    for r in 1..=6 {
        for s in r..=7 - r {
            fams.push(Family::CompleteBipartite(r, s));
        }
    }
    fams.iter()
        .map(|f| generate(f).expect("in-range family"))
        .collect()
}

/// `true` when `s` is `X ∪ X′` for an independent `X` of the base graph.
pub fn is_doubled_independent(base: &Graph, s: VertexSet) -> bool {
    let n = base.order();
    let x = s.intersection(VertexSet::full(n));
    let copies: VertexSet = x.iter().map(|v| v + n).collect();
    s == x.union(copies) && base.is_independent(x)
}

fn declare_bounds(out: &mut Vec<Declared>) {
    count_seeded(
        out,
        "bounds_gp_double",
        Some(GP),
        Expected::Exact(0),
        |seed| {
            let mut bad = 0;
            for p in corpus_profiles(seed)? {
                let gd = solver::invariant(&double_graph(&p.g)?, GP)?;
                if !(p.gp <= gd && gd <= 2 * p.gp) {
                    bad += 1;
                }
            }
            Ok(bad)
        },
    );
    count_seeded(
        out,
        "bounds_mu_double_total",
        Some(MV),
        Expected::Exact(0),
        |seed| {
            let mut bad = 0;
            for p in corpus_profiles(seed)?.into_iter().filter(|p| !p.complete) {
                if solver::invariant(&double_graph(&p.g)?, MV)? < p.g.order() + p.mu_t {
                    bad += 1;
                }
            }
            Ok(bad)
        },
    );
    count_seeded(
        out,
        "bounds_myc_sandwich",
        Some(MV),
        Expected::Exact(0),
        |seed| {
            let mut bad = 0;
            for p in corpus_profiles(seed)?
                .into_iter()
                .filter(|p| !p.complete && p.diameter <= 3)
            {
                let n = p.g.order();
                let m = solver::invariant(&mycielskian(&p.g)?, MV)?;
                if !(n + p.mu_o <= m && m <= n + p.mu + 1) {
                    bad += 1;
                }
            }
            Ok(bad)
        },
    );
    count_seeded(
        out,
        "bounds_myc_sandwich_cases",
        Some(MV),
        Expected::AtLeast(1),
        |seed| {
            Ok(corpus::corpus(seed)
                .iter()
                .filter(|g| !g.is_complete() && g.distances().diameter().is_some_and(|d| d <= 3))
                .count())
        },
    );

    count_seeded(
        out,
        "oracle_gp_characterization",
        Some(GP),
        Expected::Exact(0),
        |seed| {
            let mut graphs: Vec<Graph> = corpus::corpus(seed)
                .into_iter()
                .filter(|g| g.order() <= 7)
                .collect();
            graphs.extend(small_named_graphs());
            let mut bad = 0;
            for g in &graphs {
                let d = g.distances();
                for bits in 0..1u64 << g.order() {
                    let s = VertexSet::from_bits(bits);
                    if is_general_position_set(g, &d, s)?
                        != is_general_position_set_via_characterization(g, &d, s)?.0
                    {
                        bad += 1;
                    }
                }
            }
            Ok(bad)
        },
    );

    count_seeded(out, "twin_false_swap", None, Expected::Exact(0), |seed| {
        twin_trials(seed, TwinKind::False)
    });
    count_seeded(
        out,
        "twin_true_extend",
        Some(GP),
        Expected::Exact(0),
        |seed| twin_trials(seed, TwinKind::True),
    );
    count(
        out,
        "twin_kminus_regression".into(),
        "kminus:4".into(),
        Some(MV),
        Expected::Exact(0),
        |_| {
            // v1 v2 is the missing edge; v3 v4 are true twins
            let g = generate(&Family::CompleteMinusEdge(4))?;
            let d = g.distances();
            let s = g.parse_set("v1,v2,v3")?;
            let t = true_twin_extend(&g, s, 2, 3)?;
            let confirmed =
                is_mutual_visibility_set(&g, &d, s)? && !is_mutual_visibility_set(&g, &d, t)?;
            Ok(usize::from(!confirmed))
        },
    );

    count_seeded(
        out,
        "gp_equality_structure",
        Some(GP),
        Expected::Exact(0),
        |seed| {
            let mut bad = 0;
            for (g, dg) in equality_cases(seed)? {
                for s in solver::enumerate_maximum_sets(&dg, GP)? {
                    if !is_doubled_independent(&g, s) {
                        bad += 1;
                    }
                }
            }
            Ok(bad)
        },
    );
    count_seeded(
        out,
        "gp_equality_cases",
        Some(GP),
        Expected::AtLeast(1),
        |seed| Ok(equality_cases(seed)?.len()),
    );
}

fn count_seeded<F>(
    out: &mut Vec<Declared>,
    name: &str,
    kind: Option<PropertyKind>,
    expected: Expected,
    f: F,
) where
    F: Fn(u64) -> Result<usize> + Send + Sync + 'static,
{
    let check_name = name.to_string();
    push(
        out,
        check_name.clone(),
        Box::new(move |cfg| match f(cfg.seed) {
            Ok(actual) => Check::decided(
                check_name.clone(),
                corpus_label(cfg.seed),
                kind,
                expected,
                actual,
            ),
            Err(_) => Check {
                name: check_name.clone(),
                graph: corpus_label(cfg.seed),
                kind,
                expected,
                actual: None,
                status: Status::Fail,
                elapsed: Duration::ZERO,
            },
        }),
    );
}

/// Corpus graphs with `gp(D(G)) = 2 gp(G)` and `n(D(G))` within the
/// enumeration cap, paired with their double graphs.
fn equality_cases(seed: u64) -> Result<Vec<(Graph, Graph)>> {
    let mut out = Vec::new();
    for g in corpus::corpus(seed) {
        if 2 * g.order() > solver::ENUMERATION_MAX_ORDER {
            continue;
        }
        let dg = double_graph(&g)?;
        if solver::invariant(&dg, GP)? == 2 * solver::invariant(&g, GP)? {
            out.push((g, dg));
        }
    }
    Ok(out)
}

/// Number of planted-twin trials where the twin operation changed the
/// answer of a verifier it should preserve. Each trial tests a random subset
/// and random maximal MV and GP sets through the twin.
pub fn twin_trials(seed: u64, kind: TwinKind) -> Result<usize> {
    let salt = match kind {
        TwinKind::False => 1,
        TwinKind::True => 2,
    };
    let mut rng = corpus::rng(seed.wrapping_mul(31).wrapping_add(salt));
    let mut violations = 0;
    for _ in 0..TWIN_TRIALS {
        let base_order = rng.gen_range(3..=7);
        let (g, u, v) = corpus::planted_twin(&mut rng, base_order, kind);
        let d = g.distances();
        let pool = g.vertices().without(v);
        let start = VertexSet::singleton(u);
        let mut sets = vec![corpus::random_subset(&mut rng, pool.without(u)).with(u)];
        for k in [MV, GP] {
            sets.push(corpus::random_maximal(&mut rng, start, pool, |s| {
                satisfies(k, &g, &d, s).unwrap_or(false)
            }));
        }
        let mut broken = false;
        for s in sets {
            match kind {
                TwinKind::False => {
                    let t = false_twin_swap(&g, s, u, v)?;
                    for k in [MV, GP] {
                        broken |= satisfies(k, &g, &d, s)? != satisfies(k, &g, &d, t)?;
                    }
                }
                TwinKind::True => {
                    let t = true_twin_extend(&g, s, u, v)?;
                    broken |= satisfies(GP, &g, &d, s)? && !satisfies(GP, &g, &d, t)?;
                }
            }
        }
        violations += usize::from(broken);
    }
    Ok(violations)
}
