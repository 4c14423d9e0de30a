//! Simple undirected graphs, lattice generators, and the edge-list text
//! format.
//!
//! A [`Graph`] is the data that parameterizes a cluster state: vertices are
//! dense indices `0..n`, edges are unordered pairs, and the adjacency matrix
//! is kept as packed GF(2) bit rows. Lattice generators ([`chain`], [`grid`],
//! [`honeycomb`]) all use row-major `(row, col) -> row * width + col`
//! indexing so that sites can be addressed deterministically.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    /// Self-loops are rejected; the adjacency matrix has a zero diagonal.
    #[error("invalid edge ({0}, {1}): self-loops are not allowed")]
    InvalidEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid lattice dimension: {0}")]
    InvalidDimension(&'static str),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored canonically as `(min, max)` pairs; duplicates are merged
/// on construction. The adjacency matrix is symmetric with zero diagonal and
/// always agrees with the edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    /// Packed adjacency rows: bit `b` of word `adj[v * words + b / 64]`.
    adj: Vec<u64>,
    words: usize,
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges are merged silently.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let words = n.div_ceil(64).max(1);
        let mut g = Graph {
            n,
            edges: BTreeSet::new(),
            adj: vec![0; n * words],
            words,
        };
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::InvalidEdge(u, v));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Graph with no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph::new(n, &[]).expect("edgeless graph is always valid")
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.insert((a, b));
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in canonical `(min, max)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        let row = &self.adj[v * self.words..(v + 1) * self.words];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    /// The adjacency row of `v` as packed bits (bit `u` set iff `{u,v}` is an
    /// edge).
    pub fn adjacency_row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Rank over GF(2) of the submatrix `Γ[rows, cols]`.
    ///
    /// This is the block-entropy workhorse: for a graph state, the
    /// entanglement entropy of a region `A` equals `rank(Γ[A, Ā])`.
    pub fn submatrix_rank(&self, rows: &[usize], cols: &[usize]) -> usize {
        let words = cols.len().div_ceil(64).max(1);
        let mut mat: Vec<Vec<u64>> = rows
            .iter()
            .map(|&r| {
                let mut packed = vec![0u64; words];
                for (j, &c) in cols.iter().enumerate() {
                    if self.has_edge(r, c) {
                        packed[j / 64] |= 1 << (j % 64);
                    }
                }
                packed
            })
            .collect();
        gf2_rank(&mut mat)
    }

    /// Number of edges with one endpoint in `region` and one outside.
    pub fn crossing_edges(&self, region: &BTreeSet<usize>) -> usize {
        self.edges
            .iter()
            .filter(|(u, v)| region.contains(u) != region.contains(v))
            .count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Remove a vertex, relabeling every vertex above it down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let relabel = |u: usize| if u > v { u - 1 } else { u };
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Graph::new(self.n - 1, &edges)
    }

    /// Serialize to the edge-list text format (`n <count>` then `e <u> <v>`
    /// lines in canonical order).
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n {}", self.n).unwrap();
        for (u, v) in &self.edges {
            writeln!(out, "e {u} {v}").unwrap();
        }
        out
    }

    /// Parse the edge-list text format. `#` begins a comment; blank lines are
    /// skipped.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut n: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut fields = content.split_whitespace();
            let tag = fields.next().unwrap();
            let parse_num = |s: Option<&str>| -> Result<usize, GraphError> {
                s.ok_or(GraphError::Parse { line, msg: "missing field".into() })?
                    .parse()
                    .map_err(|_| GraphError::Parse { line, msg: format!("not a number: {content:?}") })
            };
            match tag {
                "n" => {
                    if n.is_some() {
                        return Err(GraphError::Parse { line, msg: "duplicate 'n' line".into() });
                    }
                    n = Some(parse_num(fields.next())?);
                }
                "e" => {
                    if n.is_none() {
                        return Err(GraphError::Parse { line, msg: "'e' before 'n'".into() });
                    }
                    let u = parse_num(fields.next())?;
                    let v = parse_num(fields.next())?;
                    edges.push((u, v));
                }
                other => {
                    return Err(GraphError::Parse { line, msg: format!("unknown tag {other:?}") });
                }
            }
            if fields.next().is_some() {
                return Err(GraphError::Parse { line, msg: "trailing fields".into() });
            }
        }
        let n = n.ok_or(GraphError::Parse { line: text.lines().count().max(1), msg: "missing 'n' line".into() })?;
        Graph::new(n, &edges)
    }
}

/// Row-reduce packed GF(2) rows in place and return the rank.
pub(crate) fn gf2_rank(rows: &mut [Vec<u64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let words = rows[0].len();
    let mut rank = 0;
    for col in 0..words * 64 {
        let (w, b) = (col / 64, col % 64);
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r][w] >> b & 1 == 1 {
                let (head, tail) = rows.split_at_mut(rank.max(r));
                let (src, dst) = if r < rank { (&tail[0], &mut head[r]) } else { (&head[rank], &mut tail[0]) };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d ^= s;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Path graph on `n` vertices: edges `(i, i+1)`.
pub fn chain(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidDimension("chain length must be >= 1"));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

/// `rows x cols` square lattice with nearest-neighbor edges, row-major
/// indexing `(r, c) -> r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph, GraphError> {
    if rows == 0 || cols == 0 {
        return Err(GraphError::InvalidDimension("grid dimensions must be >= 1"));
    }
    let idx = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, &edges)
}

/// Brick-wall patch of the hexagonal lattice with `rows x cols` hexagons.
///
/// Vertices form a `(rows + 1) x (2 cols + 1)` row-major grid. Every row is a
/// horizontal path; vertical rungs sit at `(r, c)-(r+1, c)` whenever `r + c`
/// is even. Interior vertices then have degree 3, matching a hexagonal
/// lattice; `honeycomb(1, 1)` is the single hexagon (a 6-cycle).
pub fn honeycomb(rows: usize, cols: usize) -> Result<Graph, GraphError> {
    if rows == 0 || cols == 0 {
        return Err(GraphError::InvalidDimension("honeycomb dimensions must be >= 1"));
    }
    let height = rows + 1;
    let width = 2 * cols + 1;
    let idx = |r: usize, c: usize| r * width + c;
    let mut edges = Vec::new();
    for r in 0..height {
        for c in 0..width {
            if c + 1 < width {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r + 1 < height && (r + c) % 2 == 0 {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
        }
    }
    Graph::new(height * width, &edges)
}
