//! Simple undirected graphs on at most 64 vertices, all-pairs hop distances,
//! and the geodesic visibility primitive every verifier is built on.
//!
//! Vertex sets and adjacency rows are `u64` bit masks. Vertex `i` is bit `i`.

use std::collections::VecDeque;
use std::fmt;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can have.
pub const MAX_ORDER: usize = 64;

/// Distance stored for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// A set of vertices of a graph of order at most [`MAX_ORDER`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// `{lo, ..., hi-1}`.
    pub fn range(lo: usize, hi: usize) -> Self {
        VertexSet::full(hi).difference(VertexSet::full(lo))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// Where a vertex came from when a graph is produced by an operator.
///
/// Plain graphs label vertex `i` as `Base(i)`. The double graph and the
/// Mycielskian lay out the base block, then the copy block, then the apex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Base(usize),
    Copy(usize),
    Apex,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Base(i) => write!(f, "v{}", i + 1),
            Role::Copy(i) => write!(f, "v{}'", i + 1),
            Role::Apex => f.write_str("v*"),
        }
    }
}

impl std::str::FromStr for Role {
    type Err = Error;

    /// Parses `v3`, `v3'` or `v*` (1-based).
    fn from_str(s: &str) -> Result<Role> {
        let bad = || Error::InvalidParameter(format!("bad vertex label {s:?}"));
        let body = s.trim().strip_prefix('v').ok_or_else(bad)?;
        if body == "*" {
            return Ok(Role::Apex);
        }
        let (digits, copy) = match body.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (body, false),
        };
        let i: usize = digits.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        Ok(if copy {
            Role::Copy(i - 1)
        } else {
            Role::Base(i - 1)
        })
    }
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    roles: Vec<Role>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges collapse; roles default
    /// to `Base(i)`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            adj,
            roles: (0..n).map(Role::Base).collect(),
        })
    }

    /// Replaces the vertex roles. Labels must be distinct.
    pub fn with_roles(mut self, roles: Vec<Role>) -> Result<Graph> {
        if roles.len() != self.order() {
            return Err(Error::Precondition(format!(
                "{} roles for {} vertices",
                roles.len(),
                self.order()
            )));
        }
        for (i, r) in roles.iter().enumerate() {
            if roles[..i].contains(r) {
                return Err(Error::Precondition(format!("duplicate role {r}")));
            }
        }
        self.roles = roles;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn label(&self, v: usize) -> String {
        self.roles[v].to_string()
    }

    /// Index of the vertex carrying `role`.
    pub fn vertex_with_role(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    /// Parses a label list such as `v1,v3,v2',v*` (commas or whitespace).
    pub fn parse_set(&self, text: &str) -> Result<VertexSet> {
        let mut s = VertexSet::EMPTY;
        for tok in text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let role: Role = tok.parse()?;
            let v = self.vertex_with_role(role).ok_or_else(|| {
                Error::InvalidParameter(format!("no vertex labelled {tok} in this graph"))
            })?;
            s.insert(v);
        }
        Ok(s)
    }

    /// Space-separated labels in index order, e.g. `v1 v2 v1' v2'`.
    pub fn format_set(&self, s: VertexSet) -> String {
        s.iter()
            .map(|v| self.label(v))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn is_complete(&self) -> bool {
        (0..self.order()).all(|v| self.degree(v) + 1 == self.order())
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        (0..self.order())
            .filter(|&v| self.degree(v) + 1 == self.order())
            .collect()
    }

    /// Vertices reachable from `v` inside `within` (which must contain `v`).
    pub fn component_within(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for x in frontier {
                next = next.union(self.adj[x]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_within(0, self.vertices()) == self.vertices()
    }

    /// Relabels vertices so that new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        let n = self.order();
        debug_assert_eq!(order.len(), n);
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| self.adj[v].iter().map(|w| pos[w]).collect())
            .collect();
        let roles = order.iter().map(|&v| self.roles[v]).collect();
        Graph { adj, roles }
    }

    /// Parses the edge-list format: a header `n m`, then `m` lines `u v` with
    /// 1-based endpoints. Lines starting with `#` and blank lines are ignored.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_pair = |lineno: usize, line: &str| -> Result<(usize, usize)> {
            let err = |msg: &str| Error::Parse {
                pos: lineno,
                msg: format!("line {lineno}: {msg}"),
            };
            let mut it = line.split_whitespace();
            let a = it.next().ok_or_else(|| err("expected two integers"))?;
            let b = it.next().ok_or_else(|| err("expected two integers"))?;
            if it.next().is_some() {
                return Err(err("trailing tokens"));
            }
            let a = a.parse().map_err(|_| err("not an integer"))?;
            let b = b.parse().map_err(|_| err("not an integer"))?;
            Ok((a, b))
        };
        let (lineno, header) = lines.next().ok_or(Error::Parse {
            pos: 0,
            msg: "empty edge list".into(),
        })?;
        let (n, m) = parse_pair(lineno, header)?;
        let mut edges = Vec::with_capacity(m);
        for (lineno, line) in lines {
            let (u, v) = parse_pair(lineno, line)?;
            if u == 0 || v == 0 {
                return Err(Error::Parse {
                    pos: lineno,
                    msg: format!("line {lineno}: vertex labels are 1-based"),
                });
            }
            edges.push((u - 1, v - 1));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    pub fn read_edge_list(path: &Path) -> Result<Graph> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Graph::from_edge_list(&text)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.order(), edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    /// All-pairs BFS distances.
    pub fn distances(&self) -> DistanceMatrix {
        all_pairs_distances(self)
    }
}

/// All-pairs hop distances plus derived geodesic data.
///
/// `spheres[v][k]` is the set of vertices at distance exactly `k` from `v`;
/// `interiors[u * n + v]` is the set of vertices on some shortest `u,v`-path
/// other than `u` and `v` (filled only for connected graphs).
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    spheres: Vec<Vec<VertexSet>>,
    interiors: Vec<VertexSet>,
    connected: bool,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Hop distance, or [`UNREACHABLE`].
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn diameter(&self) -> Option<u32> {
        self.connected
            .then(|| self.dist.iter().copied().max().unwrap_or(0))
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    #[inline]
    pub fn sphere(&self, v: usize, k: u32) -> VertexSet {
        self.spheres[v].get(k as usize).copied().unwrap_or_default()
    }

    /// Vertices strictly inside the interval `I[u, v]`.
    #[inline]
    pub fn interior(&self, u: usize, v: usize) -> VertexSet {
        self.interiors[u * self.n + v]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.dist.chunks(self.n.max(1)).take(self.n)
    }
}

impl fmt::Display for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|&d| {
                    if d == UNREACHABLE {
                        "-".to_string()
                    } else {
                        d.to_string()
                    }
                })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            let next = row[x] + 1;
            for y in g.neighbors(x) {
                if row[y] == UNREACHABLE {
                    row[y] = next;
                    queue.push_back(y);
                }
            }
        }
    }

    let spheres: Vec<Vec<VertexSet>> = (0..n)
        .map(|v| {
            let row = &dist[v * n..(v + 1) * n];
            let ecc = row
                .iter()
                .copied()
                .filter(|&d| d != UNREACHABLE)
                .max()
                .unwrap_or(0);
            let mut layers = vec![VertexSet::EMPTY; ecc as usize + 1];
            for (x, &d) in row.iter().enumerate() {
                if d != UNREACHABLE {
                    layers[d as usize].insert(x);
                }
            }
            layers
        })
        .collect();

    let connected = dist.iter().all(|&d| d != UNREACHABLE);
    let mut interiors = vec![VertexSet::EMPTY; n * n];
    if connected {
        for u in 0..n {
            for v in 0..n {
                let duv = dist[u * n + v];
                let mut inner = VertexSet::EMPTY;
                for x in 0..n {
                    if x != u && x != v && dist[u * n + x] + dist[x * n + v] == duv {
                        inner.insert(x);
                    }
                }
                interiors[u * n + v] = inner;
            }
        }
    }

    DistanceMatrix {
        n,
        dist,
        spheres,
        interiors,
        connected,
    }
}

fn check_vertex(d: &DistanceMatrix, v: usize) -> Result<()> {
    if v >= d.order() {
        Err(Error::VertexOutOfRange {
            index: v,
            order: d.order(),
        })
    } else {
        Ok(())
    }
}

/// Whether `x` lies on a shortest `u,v`-path: `d(u,x) + d(x,v) = d(u,v)`.
/// Holds trivially for `x = u` and `x = v`.
pub fn lies_between(d: &DistanceMatrix, x: usize, u: usize, v: usize) -> Result<bool> {
    for w in [x, u, v] {
        check_vertex(d, w)?;
    }
    let (ux, xv, uv) = (d.get(u, x), d.get(x, v), d.get(u, v));
    if ux == UNREACHABLE || xv == UNREACHABLE || uv == UNREACHABLE {
        return Err(Error::Disconnected);
    }
    Ok(ux + xv == uv)
}

/// Whether some shortest `u,v`-path has no internal vertex in `blocked`.
/// The endpoints never block their own pair.
pub fn exists_avoiding_geodesic(
    g: &Graph,
    d: &DistanceMatrix,
    u: usize,
    v: usize,
    blocked: VertexSet,
) -> Result<bool> {
    check_vertex(d, u)?;
    check_vertex(d, v)?;
    if g.order() != d.order() {
        return Err(Error::Precondition(
            "distance matrix does not match graph".into(),
        ));
    }
    if u == v {
        return Err(Error::Precondition(
            "visibility needs two distinct vertices".into(),
        ));
    }
    d.ensure_connected()?;
    Ok(visible(g, d, u, v, blocked))
}

/// Unchecked core of [`exists_avoiding_geodesic`]: sweeps the shortest-path
/// DAG from `u` layer by layer, keeping only unblocked interval vertices.
#[inline]
pub(crate) fn visible(
    g: &Graph,
    d: &DistanceMatrix,
    u: usize,
    v: usize,
    blocked: VertexSet,
) -> bool {
    let duv = d.get(u, v);
    if duv <= 1 || d.interior(u, v).is_disjoint(blocked) {
        return true;
    }
    let mut frontier = VertexSet::singleton(u);
    for k in 1..duv {
        let layer = d
            .sphere(u, k)
            .intersection(d.sphere(v, duv - k))
            .difference(blocked);
        let mut reach = VertexSet::EMPTY;
        for x in frontier {
            reach = reach.union(g.neighbors(x));
        }
        frontier = reach.intersection(layer);
        if frontier.is_empty() {
            return false;
        }
    }
    true
}
