//! Named graph families and the two graph operators.
//!
//! Numbering is fixed so that labelled witness sets map to indices
//! deterministically:
//!
//! * paths and cycles: `v1..vn` in order;
//! * `K_n^-` misses the edge `v1 v2`;
//! * `K_{r,s}`: `v1..vr` on one side, `v(r+1)..v(r+s)` on the other;
//! * stars and wheels: the hub is `v1`, wheel rim `v2..v(n+1)` in cyclic order;
//! * balloons: cycle `i` occupies `v(5i-4)..v(5i)`, its first vertex carries
//!   the spoke, and the hub is the last vertex;
//! * operators: base block `0..n`, copy block `n..2n`, then the apex.

use std::fmt;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::graph::{Graph, Role, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `P_n`, n >= 1.
    Path(usize),
    /// `C_n`, n >= 3.
    Cycle(usize),
    /// `K_n`, n >= 1.
    Complete(usize),
    /// `K_n` minus one edge, n >= 3.
    CompleteMinusEdge(usize),
    /// `K_{r,s}`, r, s >= 1.
    CompleteBipartite(usize, usize),
    /// `K_{1,n-1}` on n >= 2 vertices.
    Star(usize),
    /// A hub joined to every vertex of `C_n`, n >= 3 (order n + 1).
    Wheel(usize),
    /// `k` disjoint 5-cycles plus a hub with one spoke into each, k >= 1.
    Balloon(usize),
    FromFile(PathBuf),
}

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what.to_string()))
    }
}

fn cycle_edges(vertices: impl Iterator<Item = usize>) -> Vec<(usize, usize)> {
    let vs: Vec<usize> = vertices.collect();
    (0..vs.len())
        .map(|i| (vs[i], vs[(i + 1) % vs.len()]))
        .collect()
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Path(n) => {
            need(n >= 1, "path needs n >= 1")?;
            need(n <= MAX_ORDER, "path too long")?;
            Graph::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
        }
        Family::Cycle(n) => {
            need(n >= 3, "cycle needs n >= 3")?;
            need(n <= MAX_ORDER, "cycle too long")?;
            Graph::new(n, &cycle_edges(0..n))
        }
        Family::Complete(n) => {
            need(n >= 1, "complete graph needs n >= 1")?;
            need(n <= MAX_ORDER, "complete graph too large")?;
            let mut edges = Vec::new();
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
            Graph::new(n, &edges)
        }
        Family::CompleteMinusEdge(n) => {
            need(n >= 3, "K_n minus an edge needs n >= 3")?;
            need(n <= MAX_ORDER, "complete graph too large")?;
            let mut edges = Vec::new();
            for u in 0..n {
                edges.extend((u + 1..n).filter(|&v| (u, v) != (0, 1)).map(|v| (u, v)));
            }
            Graph::new(n, &edges)
        }
        Family::CompleteBipartite(r, s) => {
            need(r >= 1 && s >= 1, "complete bipartite graph needs r, s >= 1")?;
            need(r + s <= MAX_ORDER, "complete bipartite graph too large")?;
            let mut edges = Vec::new();
            for u in 0..r {
                edges.extend((r..r + s).map(|v| (u, v)));
            }
            Graph::new(r + s, &edges)
        }
        Family::Star(n) => {
            need(n >= 2, "star needs n >= 2")?;
            need(n <= MAX_ORDER, "star too large")?;
            Graph::new(n, &(1..n).map(|v| (0, v)).collect::<Vec<_>>())
        }
        Family::Wheel(n) => {
            need(n >= 3, "wheel needs a rim of at least 3 vertices")?;
            need(n < MAX_ORDER, "wheel too large")?;
            let mut edges = cycle_edges(1..=n);
            edges.extend((1..=n).map(|v| (0, v)));
            Graph::new(n + 1, &edges)
        }
        Family::Balloon(k) => {
            need(k >= 1, "balloon needs k >= 1")?;
            need(5 * k < MAX_ORDER, "balloon too large")?;
            let hub = 5 * k;
            let mut edges = Vec::with_capacity(6 * k);
            for i in 0..k {
                edges.extend(cycle_edges(5 * i..5 * i + 5));
                edges.push((hub, 5 * i));
            }
            Graph::new(5 * k + 1, &edges)
        }
        Family::FromFile(ref path) => Graph::read_edge_list(path),
    }
}

/// `D(G)`: vertex `n + i` is the copy of `i` and has exactly the neighbours
/// of `i`, in both blocks.
pub fn double_graph(g: &Graph) -> Result<Graph> {
    let n = g.order();
    need(n >= 1, "double graph of the empty graph")?;
    if 2 * n > MAX_ORDER {
        return Err(Error::TooLarge {
            order: 2 * n,
            max: MAX_ORDER,
        });
    }
    let mut edges = Vec::with_capacity(4 * g.size());
    for (u, v) in g.edges() {
        edges.extend([(u, v), (u, n + v), (n + u, v), (n + u, n + v)]);
    }
    let roles = (0..n)
        .map(Role::Base)
        .chain((0..n).map(Role::Copy))
        .collect();
    Graph::new(2 * n, &edges)?.with_roles(roles)
}

/// `M(G)`: base block, copy block with `u v'` for every edge `uv`, and an
/// apex (index `2n`) adjacent to every copy.
pub fn mycielskian(g: &Graph) -> Result<Graph> {
    let n = g.order();
    need(n >= 1, "Mycielskian of the empty graph")?;
    if 2 * n + 1 > MAX_ORDER {
        return Err(Error::TooLarge {
            order: 2 * n + 1,
            max: MAX_ORDER,
        });
    }
    let apex = 2 * n;
    let mut edges = Vec::with_capacity(3 * g.size() + n);
    for (u, v) in g.edges() {
        edges.extend([(u, v), (u, n + v), (n + u, v)]);
    }
    edges.extend((0..n).map(|i| (n + i, apex)));
    let roles = (0..n)
        .map(Role::Base)
        .chain((0..n).map(Role::Copy))
        .chain(std::iter::once(Role::Apex))
        .collect();
    Graph::new(2 * n + 1, &edges)?.with_roles(roles)
}

/// A family, possibly wrapped in operators. Text form:
/// `path:n`, `cycle:n`, `complete:n`, `kminus:n`, `kbip:r,s`, `star:n`,
/// `wheel:n`, `balloon:k`, `file:<path>`, `double(<spec>)`, `myc(<spec>)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Family(Family),
    Double(Box<GraphSpec>),
    Mycielskian(Box<GraphSpec>),
}

impl GraphSpec {
    pub fn double(inner: GraphSpec) -> GraphSpec {
        GraphSpec::Double(Box::new(inner))
    }

    pub fn mycielskian(inner: GraphSpec) -> GraphSpec {
        GraphSpec::Mycielskian(Box::new(inner))
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Family(f) => generate(f),
            GraphSpec::Double(inner) => double_graph(&inner.build()?),
            GraphSpec::Mycielskian(inner) => mycielskian(&inner.build()?),
        }
    }

    pub fn parse(text: &str) -> Result<GraphSpec> {
        let mut p = SpecParser {
            text,
            pos: 0,
            depth: 0,
        };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(spec)
    }
}

impl From<Family> for GraphSpec {
    fn from(f: Family) -> Self {
        GraphSpec::Family(f)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteMinusEdge(n) => write!(f, "kminus:{n}"),
            Family::CompleteBipartite(r, s) => write!(f, "kbip:{r},{s}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Wheel(n) => write!(f, "wheel:{n}"),
            Family::Balloon(k) => write!(f, "balloon:{k}"),
            Family::FromFile(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Family(fam) => fam.fmt(f),
            GraphSpec::Double(inner) => write!(f, "double({inner})"),
            GraphSpec::Mycielskian(inner) => write!(f, "myc({inner})"),
        }
    }
}

struct SpecParser<'a> {
    text: &'a str,
    pos: usize,
    depth: usize,
}

impl SpecParser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Result<&str> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a family or operator name"));
        }
        let start = self.pos;
        self.pos += len;
        Ok(&self.text[start..start + len])
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a non-negative integer"));
        }
        let value = self.rest()[..len]
            .parse()
            .map_err(|_| self.error("integer too large"))?;
        self.pos += len;
        Ok(value)
    }

    fn spec(&mut self) -> Result<GraphSpec> {
        let start = self.pos;
        let name = self.ident()?.to_string();
        match name.as_str() {
            "double" | "myc" => {
                self.eat('(')?;
                self.depth += 1;
                let inner = self.spec()?;
                self.depth -= 1;
                self.eat(')')?;
                Ok(if name == "double" {
                    GraphSpec::double(inner)
                } else {
                    GraphSpec::mycielskian(inner)
                })
            }
            "file" => {
                self.eat(':')?;
                // the path runs to the closing parentheses of the enclosing operators
                let body = self.rest().trim_end();
                if body.len() < self.depth
                    || !body[body.len() - self.depth..].chars().all(|c| c == ')')
                {
                    return Err(self.error("unbalanced parentheses after file path"));
                }
                let path = PathBuf::from(body[..body.len() - self.depth].trim());
                if path.as_os_str().is_empty() {
                    return Err(self.error("empty file path"));
                }
                self.pos += body.len() - self.depth;
                Ok(Family::FromFile(path).into())
            }
            _ => {
                self.eat(':')?;
                let a = self.number()?;
                let fam = match name.as_str() {
                    "path" => Family::Path(a),
                    "cycle" => Family::Cycle(a),
                    "complete" => Family::Complete(a),
                    "kminus" => Family::CompleteMinusEdge(a),
                    "star" => Family::Star(a),
                    "wheel" => Family::Wheel(a),
                    "balloon" => Family::Balloon(a),
                    "kbip" => {
                        self.eat(',')?;
                        Family::CompleteBipartite(a, self.number()?)
                    }
                    _ => {
                        return Err(Error::Parse {
                            pos: start,
                            msg: format!("unknown family {name:?}"),
                        });
                    }
                };
                Ok(fam.into())
            }
        }
    }
}
