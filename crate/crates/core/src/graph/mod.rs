//! Simple undirected graphs with stable edge indices, vertex paths and cycles.

mod algo;
mod flow;
mod io;

pub use algo::{
    as_cycle, cycle_order, diameter, distances_from, find_even_cycle, is_connected, two_disjoint_paths,
    vertex_connectivity_at_least,
};
pub(crate) use flow::vertex_disjoint_paths;
pub use io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed edge `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("not a path: {0}")]
    NotAPath(String),
    #[error("no even cycle: input is an odd cycle or not 2-connected")]
    NoEvenCycle,
    #[error("two disjoint paths not found: input is not 2-connected")]
    NotFound,
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`; the position of an edge in
/// [`Graph::edges`] is its index and never changes. Adjacency lists are kept
/// sorted by neighbour so that every traversal is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range ids.
    /// Line numbers in errors are 1-based positions in `edges`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (i, (a, b)) in edges.into_iter().enumerate() {
            let line = i + 1;
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop { line, vertex: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adj[u].iter().any(|&(w, _)| w == v) {
                return Err(GraphError::DuplicateEdge { line, u, v });
            }
            let e = list.len();
            list.push((u, v));
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// The cycle `0-1-...-(n-1)-0`; edge `i` joins `i` and `i+1 mod n`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbour, edge index)` pairs in ascending neighbour order.
    #[inline]
    pub fn neighbours(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let row = &self.adj[u];
        row.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| row[i].1)
    }

    /// The endpoint of `e` that is not `v`.
    #[inline]
    pub fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Edge set as sorted pairs, independent of edge indexing.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut out = self.edges.clone();
        out.sort_unstable();
        out
    }

    pub fn same_edge_set(&self, other: &Graph) -> bool {
        self.n == other.n && self.sorted_edges() == other.sorted_edges()
    }
}

/// A path given by its vertex sequence and the indices of the edges between
/// consecutive vertices. A single vertex is a path of length zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VPath {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl VPath {
    pub fn from_vertices(g: &Graph, vertices: &[usize]) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::NotAPath("empty vertex list".into()));
        }
        let mut seen = vec![false; g.n()];
        for &v in vertices {
            if v >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::NotAPath(format!("vertex {v} repeated")));
            }
        }
        let edges = vertices
            .windows(2)
            .map(|w| {
                g.edge_between(w[0], w[1])
                    .ok_or_else(|| GraphError::NotAPath(format!("{}-{} is not an edge", w[0], w[1])))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(VPath { vertices: vertices.to_vec(), edges })
    }

    pub fn trivial(v: usize) -> Self {
        VPath { vertices: vec![v], edges: Vec::new() }
    }

    #[inline]
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    #[inline]
    pub fn edge_indices(&self) -> &[usize] {
        &self.edges
    }

    /// Number of edges.
    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    #[inline]
    pub fn is_even(&self) -> bool {
        self.edges.len().is_multiple_of(2)
    }

    #[inline]
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    #[inline]
    pub fn end(&self) -> usize {
        *self.vertices.last().expect("paths are non-empty")
    }

    pub fn internal(&self) -> &[usize] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut edges = self.edges.clone();
        edges.reverse();
        VPath { vertices, edges }
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Subpath between positions `i` and `j` (inclusive), oriented from `i`.
    pub fn subpath(&self, i: usize, j: usize) -> Self {
        if i <= j {
            VPath { vertices: self.vertices[i..=j].to_vec(), edges: self.edges[i..j].to_vec() }
        } else {
            self.subpath(j, i).reversed()
        }
    }

    /// Appends `other`, which must start where `self` ends. The result is not
    /// re-checked for repeated vertices.
    pub(crate) fn join(mut self, other: &VPath) -> Self {
        debug_assert_eq!(self.end(), other.start());
        self.vertices.extend_from_slice(&other.vertices[1..]);
        self.edges.extend_from_slice(&other.edges);
        self
    }

    pub(crate) fn from_parts(vertices: Vec<usize>, edges: Vec<usize>) -> Self {
        debug_assert_eq!(vertices.len(), edges.len() + 1);
        VPath { vertices, edges }
    }
}

/// A cycle `v0 v1 ... v(k-1)`; edge `i` joins `vertices[i]` and `vertices[i+1 mod k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Cycle {
    pub fn from_vertices(g: &Graph, vertices: &[usize]) -> Result<Self, GraphError> {
        if vertices.len() < 3 {
            return Err(GraphError::NotAPath("a cycle needs three vertices".into()));
        }
        let path = VPath::from_vertices(g, vertices)?;
        let closing = g
            .edge_between(path.end(), path.start())
            .ok_or_else(|| GraphError::NotAPath("cycle does not close".into()))?;
        let mut edges = path.edges;
        edges.push(closing);
        Ok(Cycle { vertices: path.vertices, edges })
    }

    #[inline]
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    #[inline]
    pub fn edge_indices(&self) -> &[usize] {
        &self.edges
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    #[inline]
    pub fn is_even(&self) -> bool {
        self.edges.len().is_multiple_of(2)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// The path from position `i` to position `j` walking forwards.
    pub fn forward_arc(&self, i: usize, j: usize) -> VPath {
        let k = self.len();
        let mut vertices = vec![self.vertices[i]];
        let mut edges = Vec::new();
        let mut p = i;
        while p != j {
            edges.push(self.edges[p]);
            p = (p + 1) % k;
            vertices.push(self.vertices[p]);
        }
        VPath { vertices, edges }
    }

    /// The two arcs between distinct positions `i` and `j`, both oriented from `i`.
    pub fn arcs(&self, i: usize, j: usize) -> (VPath, VPath) {
        (self.forward_arc(i, j), self.forward_arc(j, i).reversed())
    }
}

/// Fixed-size membership mask over vertices or edges.
pub(crate) fn mask_of(len: usize, items: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut mask = vec![false; len];
    for i in items {
        mask[i] = true;
    }
    mask
}
