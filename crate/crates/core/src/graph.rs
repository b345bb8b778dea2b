//! Undirected simple graphs over dense vertex indices `0..n`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::text;

pub type Vertex = usize;

/// An immutable undirected simple graph.
///
/// Adjacency lists are sorted and symmetric; there are no loops and no
/// parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

/// A proper 2-coloring of a graph's vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_x: Vec<Vertex>,
    pub side_y: Vec<Vertex>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Self { n, adj, edge_count })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Self {
            n,
            adj,
            edge_count: n * n.saturating_sub(1) / 2,
        }
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::new(a + b, edges).expect("complete bipartite edges are simple")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least three vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted open neighborhood. Panics on an out-of-range vertex.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(v)?;
        let list = &self.adj[v];
        let at = list.partition_point(|&w| w < v);
        let mut out = Vec::with_capacity(list.len() + 1);
        out.extend_from_slice(&list[..at]);
        out.push(v);
        out.extend_from_slice(&list[at..]);
        Ok(out)
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(|&v| self.adj[v].is_empty())
    }

    pub fn complement(&self) -> Self {
        let mut adj = Vec::with_capacity(self.n);
        for u in 0..self.n {
            let mut present = self.adj[u].iter().copied().peekable();
            let mut list = Vec::with_capacity(self.n - 1 - self.adj[u].len());
            for v in 0..self.n {
                if present.peek() == Some(&v) {
                    present.next();
                } else if v != u {
                    list.push(v);
                }
            }
            adj.push(list);
        }
        let total = self.n * self.n.saturating_sub(1) / 2;
        Self {
            n: self.n,
            adj,
            edge_count: total - self.edge_count,
        }
    }

    /// Breadth-first 2-coloring. Each component's lowest vertex goes to
    /// `side_x`, so isolated vertices always land there. `None` if an odd
    /// cycle exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut side_x, mut side_y) = (Vec::new(), Vec::new());
        for (v, c) in color.into_iter().enumerate() {
            if c == Some(false) {
                side_x.push(v);
            } else {
                side_y.push(v);
            }
        }
        Some(Bipartition { side_x, side_y })
    }

    /// Induced subgraph on `keep`, relabelled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[Vertex]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Self::new(keep.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Parses the `n m` / `u v` text format. `#` lines are comments.
    pub fn parse(input: &str) -> Result<Self> {
        let mut lines = text::content_lines(input);
        let (line_no, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing `n m` header".into(),
        })?;
        let [n, m] = text::parse_fixed::<2>(line_no, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line_no, line) in lines.by_ref().take(m) {
            let [u, v] = text::parse_fixed::<2>(line_no, line)?;
            edges.push((u, v, line_no));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::Parse {
                line: line_no,
                message: "unexpected content after the last edge".into(),
            });
        }
        let mut seen = std::collections::HashSet::with_capacity(m);
        for &(u, v, line_no) in &edges {
            let message = if u >= n || v >= n {
                format!("vertex out of range for {n} vertices")
            } else if u == v {
                format!("self-loop at vertex {u}")
            } else if !seen.insert((u.min(v), u.max(v))) {
                format!("duplicate edge {u} {v}")
            } else {
                continue;
            };
            return Err(Error::Parse {
                line: line_no,
                message,
            });
        }
        Self::new(n, edges.into_iter().map(|(u, v, _)| (u, v)))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count);
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}
