//! Exact maximum sets for the four hereditary properties.
//!
//! The search enumerates sets in a fixed vertex order (descending degree,
//! ties by index) and keeps, for every node, the candidates that extend the
//! current set on their own. Since all four properties are closed under
//! subsets, a vertex that fails at some node is dropped for the whole
//! subtree, and `|current| + |candidates| <= best` cuts the node.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{visible, DistanceMatrix, Graph, VertexSet};
use crate::visibility::{satisfies, PropertyKind};

/// Default cap on the order of graphs handed to the solver.
pub const DEFAULT_MAX_ORDER: usize = 26;

/// Largest order accepted by [`enumerate_maximum_sets`].
pub const ENUMERATION_MAX_ORDER: usize = 14;

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Stop as soon as a set of at least this size is found.
    pub target: Option<usize>,
    pub time_limit: Option<Duration>,
    /// Worker threads; 1 runs the search on the calling thread.
    pub workers: usize,
    pub max_order: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            target: None,
            time_limit: None,
            workers: 1,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl SolveOptions {
    pub fn with_target(mut self, target: usize) -> Self {
        self.target = Some(target);
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    /// `value` is the exact maximum.
    Optimal,
    /// A set of the requested target size was found; `value` is a lower bound.
    TargetReached,
    /// The time limit expired; `value` is a lower bound.
    TimedOut,
}

#[derive(Clone, Debug)]
pub struct InvariantResult {
    pub kind: PropertyKind,
    pub value: usize,
    pub witness: VertexSet,
    pub status: SearchStatus,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl InvariantResult {
    pub fn is_optimal(&self) -> bool {
        self.status == SearchStatus::Optimal
    }
}

/// Incremental feasibility oracle over a graph relabelled into branching
/// order.
struct Extender {
    kind: PropertyKind,
    g: Graph,
    d: DistanceMatrix,
    /// `through[w * n + x]`: vertices `y` with `w` strictly inside `I[x, y]`.
    through: Vec<VertexSet>,
    /// `collinear[x * n + w]`: vertices `y` such that `x, w, y` lie on a
    /// common geodesic in some order.
    collinear: Vec<VertexSet>,
}

impl Extender {
    fn new(g: Graph, kind: PropertyKind) -> Result<Extender> {
        let d = g.distances();
        d.ensure_connected()?;
        let n = g.order();
        let mut through = vec![VertexSet::EMPTY; n * n];
        let mut collinear = Vec::new();
        match kind {
            PropertyKind::GeneralPosition => {
                collinear = vec![VertexSet::EMPTY; n * n];
                for x in 0..n {
                    for w in 0..n {
                        if x == w {
                            continue;
                        }
                        let mut mask = VertexSet::EMPTY;
                        for y in 0..n {
                            if y == x || y == w {
                                continue;
                            }
                            let (xw, wy, xy) = (d.get(x, w), d.get(w, y), d.get(x, y));
                            if xw + wy == xy || xy + wy == xw || xw + xy == wy {
                                mask.insert(y);
                            }
                        }
                        collinear[x * n + w] = mask;
                    }
                }
            }
            _ => {
                for x in 0..n {
                    for y in 0..n {
                        for w in d.interior(x, y) {
                            through[w * n + x].insert(y);
                        }
                    }
                }
            }
        }
        Ok(Extender {
            kind,
            g,
            d,
            through,
            collinear,
        })
    }

    fn order(&self) -> usize {
        self.g.order()
    }

    /// Whether `s ∪ {w}` has the property, given that `s` has it.
    fn extends(&self, s: VertexSet, w: usize) -> bool {
        let n = self.order();
        let (g, d) = (&self.g, &self.d);
        let t = s.with(w);
        match self.kind {
            PropertyKind::GeneralPosition => {
                s.iter().all(|x| self.collinear[x * n + w].is_disjoint(s))
            }
            PropertyKind::MutualVisibility => self.mv_extends(s, w, t),
            PropertyKind::OuterMutualVisibility => {
                if !self.mv_extends(s, w, t) {
                    return false;
                }
                let outside = g.vertices().difference(t);
                if !outside.iter().all(|y| visible(g, d, w, y, t)) {
                    return false;
                }
                for x in s {
                    let affected = self.through[w * n + x].intersection(outside);
                    if !affected.iter().all(|y| visible(g, d, x, y, t)) {
                        return false;
                    }
                }
                true
            }
            PropertyKind::TotalMutualVisibility => {
                for x in 0..n {
                    let affected = self.through[w * n + x];
                    for y in affected.iter().filter(|&y| y > x) {
                        if !visible(g, d, x, y, t) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    fn mv_extends(&self, s: VertexSet, w: usize, t: VertexSet) -> bool {
        let n = self.order();
        let (g, d) = (&self.g, &self.d);
        if !s.iter().all(|x| visible(g, d, x, w, t)) {
            return false;
        }
        for x in s {
            let affected = self.through[w * n + x].intersection(s);
            for y in affected.iter().filter(|&y| y > x) {
                if !visible(g, d, x, y, t) {
                    return false;
                }
            }
        }
        true
    }

    fn filter(&self, s: VertexSet, cand: VertexSet) -> VertexSet {
        cand.iter().filter(|&c| self.extends(s, c)).collect()
    }

    fn greedy(&self) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in 0..self.order() {
            if self.extends(s, v) {
                s.insert(v);
            }
        }
        s
    }
}

/// Vertex order used for branching: descending degree, ties by index.
fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn unpermute(s: VertexSet, order: &[usize]) -> VertexSet {
    s.iter().map(|i| order[i]).collect()
}

/// Vertices after position `w`.
#[inline]
fn above(w: usize) -> VertexSet {
    VertexSet::from_bits(if w >= 63 { 0 } else { !0u64 << (w + 1) })
}

struct Shared {
    best: AtomicUsize,
    best_set: Mutex<VertexSet>,
    stop: AtomicBool,
    timed_out: AtomicBool,
    target: usize,
    deadline: Option<Instant>,
    nodes: AtomicU64,
}

impl Shared {
    fn offer(&self, s: VertexSet) {
        let mut guard = self.best_set.lock().unwrap();
        if s.len() > guard.len() {
            *guard = s;
            self.best.store(s.len(), Ordering::SeqCst);
            if s.len() >= self.target {
                self.stop.store(true, Ordering::SeqCst);
            }
        }
    }
}

struct Worker<'a> {
    ext: &'a Extender,
    shared: &'a Shared,
    nodes: u64,
}

impl Worker<'_> {
    fn search(&mut self, s: VertexSet, cand: VertexSet) {
        self.nodes += 1;
        if self.nodes & 255 == 0 {
            if let Some(deadline) = self.shared.deadline {
                if Instant::now() >= deadline {
                    self.shared.timed_out.store(true, Ordering::SeqCst);
                    self.shared.stop.store(true, Ordering::SeqCst);
                }
            }
        }
        if self.shared.stop.load(Ordering::Relaxed) {
            return;
        }
        if s.len() > self.shared.best.load(Ordering::Relaxed) {
            self.shared.offer(s);
        }
        for w in cand {
            let rest = cand.intersection(above(w));
            if s.len() + 1 + rest.len() <= self.shared.best.load(Ordering::Relaxed) {
                break;
            }
            let t = s.with(w);
            let next = self.ext.filter(t, rest);
            if t.len() + next.len() > self.shared.best.load(Ordering::Relaxed) {
                self.search(t, next);
            } else if t.len() > self.shared.best.load(Ordering::Relaxed) {
                self.shared.offer(t);
            }
            if self.shared.stop.load(Ordering::Relaxed) {
                return;
            }
        }
    }
}

fn prepare(g: &Graph, kind: PropertyKind, max_order: usize) -> Result<(Extender, Vec<usize>)> {
    if g.order() > max_order {
        return Err(Error::TooLarge {
            order: g.order(),
            max: max_order,
        });
    }
    let order = branching_order(g);
    let ext = Extender::new(g.permuted(&order), kind)?;
    Ok((ext, order))
}

/// Maximum set of the given kind by branch-and-bound.
pub fn max_property_set(
    g: &Graph,
    kind: PropertyKind,
    options: &SolveOptions,
) -> Result<InvariantResult> {
    let start = Instant::now();
    let (ext, order) = prepare(g, kind, options.max_order)?;
    let n = ext.order();

    let greedy = ext.greedy();
    let shared = Shared {
        best: AtomicUsize::new(greedy.len()),
        best_set: Mutex::new(greedy),
        stop: AtomicBool::new(false),
        timed_out: AtomicBool::new(false),
        target: options.target.unwrap_or(usize::MAX),
        deadline: options.time_limit.map(|t| start + t),
        nodes: AtomicU64::new(0),
    };
    if greedy.len() >= shared.target {
        shared.stop.store(true, Ordering::SeqCst);
    }

    let root = ext.filter(VertexSet::EMPTY, VertexSet::full(n));
    if !shared.stop.load(Ordering::SeqCst) {
        if options.workers <= 1 {
            let mut worker = Worker {
                ext: &ext,
                shared: &shared,
                nodes: 0,
            };
            worker.search(VertexSet::EMPTY, root);
            shared.nodes.fetch_add(worker.nodes, Ordering::Relaxed);
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(options.workers)
                .build()
                .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
            pool.install(|| {
                root.to_vec().into_par_iter().for_each(|w| {
                    let mut worker = Worker {
                        ext: &ext,
                        shared: &shared,
                        nodes: 0,
                    };
                    let rest = root.intersection(above(w));
                    if 1 + rest.len() > shared.best.load(Ordering::Relaxed) {
                        let t = VertexSet::singleton(w);
                        worker.search(t, ext.filter(t, rest));
                    }
                    shared.nodes.fetch_add(worker.nodes, Ordering::Relaxed);
                });
            });
        }
    }

    let best = *shared.best_set.lock().unwrap();
    let status = if shared.timed_out.load(Ordering::SeqCst) && best.len() < shared.target {
        SearchStatus::TimedOut
    } else if best.len() >= shared.target {
        SearchStatus::TargetReached
    } else {
        SearchStatus::Optimal
    };
    Ok(InvariantResult {
        kind,
        value: best.len(),
        witness: unpermute(best, &order),
        status,
        nodes_explored: shared.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    })
}

/// Exact value with default options.
pub fn invariant(g: &Graph, kind: PropertyKind) -> Result<usize> {
    Ok(max_property_set(g, kind, &SolveOptions::default())?.value)
}

/// Deterministic greedy sweep in branching order; seeds the incumbent.
pub fn greedy_lower_bound(g: &Graph, kind: PropertyKind) -> Result<VertexSet> {
    let (ext, order) = prepare(g, kind, crate::graph::MAX_ORDER)?;
    Ok(unpermute(ext.greedy(), &order))
}

/// Every set of maximum size, sorted lexicographically by member lists.
pub fn enumerate_maximum_sets(g: &Graph, kind: PropertyKind) -> Result<Vec<VertexSet>> {
    if g.order() > ENUMERATION_MAX_ORDER {
        return Err(Error::TooLarge {
            order: g.order(),
            max: ENUMERATION_MAX_ORDER,
        });
    }
    let value = max_property_set(g, kind, &SolveOptions::default())?.value;
    let (ext, order) = prepare(g, kind, ENUMERATION_MAX_ORDER)?;

    fn collect(
        ext: &Extender,
        s: VertexSet,
        cand: VertexSet,
        size: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if s.len() == size {
            out.push(s);
            return;
        }
        for w in cand {
            let rest = cand.intersection(above(w));
            if s.len() + 1 + rest.len() < size {
                break;
            }
            let t = s.with(w);
            let next = ext.filter(t, rest);
            if t.len() + next.len() >= size {
                collect(ext, t, next, size, out);
            }
        }
    }

    let mut found = Vec::new();
    let root = ext.filter(VertexSet::EMPTY, VertexSet::full(ext.order()));
    collect(&ext, VertexSet::EMPTY, root, value, &mut found);
    let mut sets: Vec<VertexSet> = found.into_iter().map(|s| unpermute(s, &order)).collect();
    sets.sort_by_key(|s| s.to_vec());
    Ok(sets)
}

/// Re-checks a result's witness with the stand-alone verifier.
pub fn verify_result(g: &Graph, d: &DistanceMatrix, result: &InvariantResult) -> Result<bool> {
    Ok(result.witness.len() == result.value && satisfies(result.kind, g, d, result.witness)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{double_graph, generate, mycielskian, Family};

    fn fam(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    /// Maximum over all subsets, using only the verifiers.
    fn brute_force(g: &Graph, kind: PropertyKind) -> usize {
        let d = g.distances();
        let n = g.order();
        (0u64..1 << n)
            .map(VertexSet::from_bits)
            .filter(|&s| satisfies(kind, g, &d, s).unwrap())
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    #[test]
    fn complete_graph_mv_is_order() {
        let g = fam(Family::Complete(5));
        assert_eq!(invariant(&g, PropertyKind::MutualVisibility).unwrap(), 5);
        assert_eq!(
            greedy_lower_bound(&fam(Family::Complete(4)), PropertyKind::MutualVisibility)
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn path_values() {
        let g = fam(Family::Path(6));
        assert_eq!(
            invariant(&g, PropertyKind::TotalMutualVisibility).unwrap(),
            2
        );
        assert_eq!(invariant(&g, PropertyKind::GeneralPosition).unwrap(), 2);
        assert!(
            greedy_lower_bound(&fam(Family::Path(5)), PropertyKind::GeneralPosition)
                .unwrap()
                .len()
                >= 2
        );
    }

    #[test]
    fn small_double_and_mycielskian_values() {
        let dp5 = double_graph(&fam(Family::Path(5))).unwrap();
        assert_eq!(invariant(&dp5, PropertyKind::GeneralPosition).unwrap(), 4);
        // brute force over all 1024 subsets gives 4 = n - 1
        let dk5 = double_graph(&fam(Family::CompleteMinusEdge(5))).unwrap();
        assert_eq!(
            invariant(&dk5, PropertyKind::GeneralPosition).unwrap(),
            brute_force(&dk5, PropertyKind::GeneralPosition)
        );
        assert_eq!(invariant(&dk5, PropertyKind::GeneralPosition).unwrap(), 4);
        let mp4 = mycielskian(&fam(Family::Path(4))).unwrap();
        assert_eq!(invariant(&mp4, PropertyKind::MutualVisibility).unwrap(), 6);
    }

    #[test]
    fn greedy_is_feasible_and_below_optimum() {
        let g = double_graph(&fam(Family::Cycle(8))).unwrap();
        let d = g.distances();
        let greedy = greedy_lower_bound(&g, PropertyKind::MutualVisibility).unwrap();
        assert!(satisfies(PropertyKind::MutualVisibility, &g, &d, greedy).unwrap());
        let exact = invariant(&g, PropertyKind::MutualVisibility).unwrap();
        assert_eq!(exact, 8);
        assert!(greedy.len() <= exact);
    }

    #[test]
    fn matches_brute_force_on_families() {
        let graphs = [
            fam(Family::Cycle(7)),
            fam(Family::Balloon(1)),
            fam(Family::CompleteBipartite(2, 4)),
            fam(Family::Wheel(5)),
            double_graph(&fam(Family::Path(4))).unwrap(),
            mycielskian(&fam(Family::Cycle(4))).unwrap(),
        ];
        for g in &graphs {
            let d = g.distances();
            for kind in PropertyKind::ALL {
                let r = max_property_set(g, kind, &SolveOptions::default()).unwrap();
                assert_eq!(r.value, brute_force(g, kind), "{g:?} {kind}");
                assert!(r.is_optimal());
                assert!(verify_result(g, &d, &r).unwrap());
            }
        }
    }

    #[test]
    fn target_mode_stops_early() {
        let g = double_graph(&fam(Family::Cycle(9))).unwrap();
        let r = max_property_set(
            &g,
            PropertyKind::MutualVisibility,
            &SolveOptions::default().with_target(5),
        )
        .unwrap();
        assert_eq!(r.status, SearchStatus::TargetReached);
        assert!(r.value >= 5 && r.value <= 9);
        let r = max_property_set(
            &g,
            PropertyKind::MutualVisibility,
            &SolveOptions::default().with_target(40),
        )
        .unwrap();
        assert_eq!((r.status, r.value), (SearchStatus::Optimal, 9));
    }

    #[test]
    fn time_limit_reports_lower_bound() {
        let g = double_graph(&fam(Family::Cycle(10))).unwrap();
        let r = max_property_set(
            &g,
            PropertyKind::MutualVisibility,
            &SolveOptions::default().with_time_limit(Duration::ZERO),
        )
        .unwrap();
        assert!(matches!(
            r.status,
            SearchStatus::TimedOut | SearchStatus::Optimal
        ));
        assert!(r.value <= 10);
        assert!(verify_result(&g, &g.distances(), &r).unwrap());
    }

    #[test]
    fn parallel_agrees_with_sequential() {
        let g = mycielskian(&fam(Family::Cycle(6))).unwrap();
        for kind in PropertyKind::ALL {
            let a = max_property_set(&g, kind, &SolveOptions::default()).unwrap();
            let b = max_property_set(&g, kind, &SolveOptions::default().with_workers(4)).unwrap();
            assert_eq!(a.value, b.value, "{kind}");
            assert!(verify_result(&g, &g.distances(), &b).unwrap());
        }
    }

    #[test]
    fn rejects_disconnected_and_oversized() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            invariant(&g, PropertyKind::GeneralPosition),
            Err(Error::Disconnected)
        ));
        let big = fam(Family::Cycle(27));
        assert!(matches!(
            invariant(&big, PropertyKind::GeneralPosition),
            Err(Error::TooLarge { .. })
        ));
        let g15 = fam(Family::Cycle(15));
        assert!(matches!(
            enumerate_maximum_sets(&g15, PropertyKind::GeneralPosition),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn enumeration_examples() {
        let k3 = fam(Family::Complete(3));
        assert_eq!(
            enumerate_maximum_sets(&k3, PropertyKind::GeneralPosition).unwrap(),
            vec![k3.vertices()]
        );

        let c4 = fam(Family::Cycle(4));
        let d = c4.distances();
        let sets = enumerate_maximum_sets(&c4, PropertyKind::MutualVisibility).unwrap();
        let brute: Vec<VertexSet> = (0u64..16)
            .map(VertexSet::from_bits)
            .filter(|s| {
                s.len() == 3 && satisfies(PropertyKind::MutualVisibility, &c4, &d, *s).unwrap()
            })
            .collect();
        assert_eq!(sets.len(), brute.len());
        assert_eq!(sets.len(), 4);
        assert!(sets.windows(2).all(|w| w[0].to_vec() < w[1].to_vec()));

        let p3 = fam(Family::Path(3));
        let dp3 = double_graph(&p3).unwrap();
        for s in enumerate_maximum_sets(&dp3, PropertyKind::GeneralPosition).unwrap() {
            assert_eq!(s.len(), 4);
            let x = s.intersection(VertexSet::full(3));
            let x_copy: VertexSet = x.iter().map(|v| v + 3).collect();
            assert_eq!(s, x.union(x_copy));
            assert!(p3.is_independent(x));
        }
    }
}
