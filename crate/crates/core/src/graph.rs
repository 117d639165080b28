//! Wheel-derived graph families as immutable adjacency structures.
//!
//! Every family is built on an n-cycle. Vertex ids follow one canonical
//! layout so that colourings and reports are reproducible:
//!
//! * rim vertices `u1..un` get ids `0..n`,
//! * outer (pendant / apex) vertices `v1..vn` get ids `n..2n` when present,
//! * the hub comes last.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Hub,
    Rim,
    Outer,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cycle,
    Wheel,
    Helm,
    Flower,
    Sunflower,
    ClosedSunflower,
    Blossom,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Cycle,
        Family::Wheel,
        Family::Helm,
        Family::Flower,
        Family::Sunflower,
        Family::ClosedSunflower,
        Family::Blossom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Wheel => "wheel",
            Family::Helm => "helm",
            Family::Flower => "flower",
            Family::Sunflower => "sunflower",
            Family::ClosedSunflower => "closed_sunflower",
            Family::Blossom => "blossom",
        }
    }

    fn has_outer(self) -> bool {
        !matches!(self, Family::Cycle | Family::Wheel)
    }

    fn has_hub(self) -> bool {
        !matches!(self, Family::Cycle)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::Unknown { what: "family", value: s.to_string() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: u32,
}

impl FamilySpec {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidN(n));
        }
        Ok(FamilySpec { family, n })
    }

    pub fn build(&self) -> Result<Graph> {
        build(*self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.n)
    }
}

/// Simple undirected graph with role-tagged vertices. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    roles: Vec<Role>,
    edge_count: usize,
    spec: Option<FamilySpec>,
}

/// Builds the family graph in canonical vertex layout.
pub fn build(spec: FamilySpec) -> Result<Graph> {
    if spec.n < 3 {
        return Err(Error::InvalidN(spec.n));
    }
    let n = spec.n as usize;
    let fam = spec.family;
    let outer = |i: usize| n + i;
    let hub = match fam {
        Family::Cycle => None,
        Family::Wheel => Some(n),
        _ => Some(2 * n),
    };

    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
    }
    if let Some(h) = hub {
        for i in 0..n {
            edges.push((i, h));
        }
    }
    match fam {
        Family::Cycle | Family::Wheel => {}
        Family::Helm | Family::Flower => {
            for i in 0..n {
                edges.push((i, outer(i)));
            }
        }
        Family::Sunflower | Family::ClosedSunflower | Family::Blossom => {
            for i in 0..n {
                edges.push((outer(i), i));
                edges.push((outer(i), (i + 1) % n));
            }
        }
    }
    if matches!(fam, Family::ClosedSunflower | Family::Blossom) {
        for i in 0..n {
            edges.push((outer(i), outer((i + 1) % n)));
        }
    }
    if let (Family::Flower | Family::Blossom, Some(h)) = (fam, hub) {
        for i in 0..n {
            edges.push((outer(i), h));
        }
    }

    let mut roles = vec![Role::Rim; n];
    if fam.has_outer() {
        roles.extend(std::iter::repeat_n(Role::Outer, n));
    }
    if fam.has_hub() {
        roles.push(Role::Hub);
    }
    let mut g = Graph::with_roles(roles, &edges)?;
    g.spec = Some(spec);
    Ok(g)
}

impl Graph {
    /// Graph on `vertex_count` plain vertices. Loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Graph::with_roles(vec![Role::Plain; vertex_count], edges)
    }

    fn with_roles(roles: Vec<Role>, edges: &[(usize, usize)]) -> Result<Graph> {
        let count = roles.len();
        let mut adjacency = vec![Vec::new(); count];
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= count {
                    return Err(Error::VertexOutOfRange { vertex: v, count });
                }
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if adjacency[a].contains(&b) {
                return Err(Error::InvalidGraph(format!("duplicate edge {a}-{b}")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            roles,
            edge_count: edges.len(),
            spec: None,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// The family this graph was built from, if any.
    pub fn spec(&self) -> Option<FamilySpec> {
        self.spec
    }

    /// Sorted neighbour ids. Panics on an out-of-range id.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count(),
            });
        }
        Ok(())
    }

    pub fn role(&self, v: usize) -> Result<Role> {
        self.check_vertex(v)?;
        Ok(self.roles[v])
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency
            .get(a)
            .is_some_and(|nb| nb.binary_search(&b).is_ok())
    }

    /// Each edge once as `(low, high)`, in lexicographic order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (a, nb) in self.adjacency.iter().enumerate() {
            out.extend(nb.iter().filter(|&&b| b > a).map(|&b| (a, b)));
        }
        out
    }

    pub fn is_independent(&self, set: &[usize]) -> Result<bool> {
        for &v in set {
            self.check_vertex(v)?;
        }
        Ok(set
            .iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.has_edge(a, b))))
    }

    pub fn is_connected(&self) -> bool {
        let count = self.vertex_count();
        if count == 0 {
            return true;
        }
        let mut seen = vec![false; count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == count
    }

    /// Neighbourhoods as 64-bit vertex sets, for the exhaustive searches.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.vertex_count() <= 64);
        self.adjacency
            .iter()
            .map(|nb| nb.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect()
    }

    /// Copy of the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let count = self.vertex_count();
        let mut seen = vec![false; count];
        if perm.len() != count || perm.iter().any(|&p| p >= count || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidGraph("relabeling is not a permutation".into()));
        }
        let mut roles = vec![Role::Plain; count];
        for (v, &p) in perm.iter().enumerate() {
            roles[p] = self.roles[v];
        }
        let edges: Vec<_> = self
            .edge_list()
            .into_iter()
            .map(|(a, b)| (perm[a], perm[b]))
            .collect();
        Graph::with_roles(roles, &edges)
    }

    /// Display labels: `u1..un` for the rim, `v1..vn` for outer vertices,
    /// `hub`, and `x<id>` for plain vertices.
    pub fn labels(&self) -> Vec<String> {
        let (mut rim, mut outer) = (0, 0);
        self.roles
            .iter()
            .enumerate()
            .map(|(id, role)| match role {
                Role::Rim => {
                    rim += 1;
                    format!("u{rim}")
                }
                Role::Outer => {
                    outer += 1;
                    format!("v{outer}")
                }
                Role::Hub => "hub".to_string(),
                Role::Plain => format!("x{id}"),
            })
            .collect()
    }

    /// DOT document with one `graph` block and edges in lexicographic order.
    pub fn to_dot(&self) -> String {
        let labels = self.labels();
        let name = self
            .spec
            .map(|s| format!("{}_{}", s.family, s.n))
            .unwrap_or_else(|| "g".to_string());
        let mut out = format!("graph {name} {{\n");
        for (a, b) in self.edge_list() {
            out.push_str(&format!("  {} -- {};\n", labels[a], labels[b]));
        }
        out.push_str("}\n");
        out
    }

    /// Adjacency document for JSON export.
    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            family: self.spec.map(|s| s.family),
            n: self.spec.map(|s| s.n),
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count,
            labels: self.labels(),
            roles: self.roles.clone(),
            adjacency: self.adjacency.clone(),
            edges: self.edge_list().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphDocument {
    pub family: Option<Family>,
    pub n: Option<u32>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub labels: Vec<String>,
    pub roles: Vec<Role>,
    pub adjacency: Vec<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
}
