//! Hypergraphs with edge covers, legal edge sequences and legal transversal
//! sequences.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::text;

/// Largest vertex count for which edges also get a `u128` mask.
pub const BITSET_LIMIT: usize = 128;

/// A hypergraph on `0..n`. Edge order is the order given at construction
/// and defines edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    masks: Option<Vec<u128>>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Each edge is sorted and deduplicated. Empty edges and out-of-range
    /// vertices are rejected. Isolated vertices are allowed here.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = edges;
        let mut incidence = vec![Vec::new(); n];
        for (i, edge) in edges.iter_mut().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyEdge(i));
            }
            edge.sort_unstable();
            edge.dedup();
            for &v in edge.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                incidence[v].push(i);
            }
        }
        let masks = (n <= BITSET_LIMIT).then(|| {
            edges
                .iter()
                .map(|e| e.iter().fold(0u128, |m, &v| m | 1 << v))
                .collect()
        });
        Ok(Self {
            n,
            edges,
            masks,
            incidence,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    /// Bitset form of edge `i`, available when `n <= BITSET_LIMIT`.
    pub fn edge_mask(&self, i: usize) -> Option<u128> {
        self.masks.as_ref().map(|m| m[i])
    }

    /// Indices of the edges containing `v`, ascending.
    pub fn edges_containing(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| self.incidence[v].is_empty())
    }

    pub fn require_no_isolated(&self) -> Result<()> {
        match self.isolated_vertices().next() {
            Some(v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    fn check_edge(&self, index: usize) -> Result<()> {
        if index < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                index,
                m: self.edges.len(),
            })
        }
    }

    pub fn is_edge_cover(&self, chosen: &[usize]) -> Result<bool> {
        let mut covered = vec![false; self.n];
        for &i in chosen {
            self.check_edge(i)?;
            for &v in &self.edges[i] {
                covered[v] = true;
            }
        }
        Ok(covered.into_iter().all(|c| c))
    }

    /// Every edge must add a vertex not covered by its predecessors.
    pub fn is_legal_edge_sequence(&self, seq: &[usize]) -> Result<bool> {
        let mut used = vec![false; self.edges.len()];
        for &i in seq {
            self.check_edge(i)?;
            if std::mem::replace(&mut used[i], true) {
                return Err(Error::RepeatedEdge(i));
            }
        }
        let mut covered = vec![false; self.n];
        for &i in seq {
            let mut fresh = false;
            for &v in &self.edges[i] {
                fresh |= !std::mem::replace(&mut covered[v], true);
            }
            if !fresh {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every vertex must lie in some edge that avoids all earlier vertices.
    pub fn is_legal_transversal_sequence(&self, seq: &[usize]) -> Result<bool> {
        for &v in seq {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        // alive[e]: edge e is disjoint from the prefix so far
        let mut alive = vec![true; self.edges.len()];
        for &v in seq {
            if !self.incidence[v].iter().any(|&e| alive[e]) {
                return Ok(false);
            }
            for &e in &self.incidence[v] {
                alive[e] = false;
            }
        }
        Ok(true)
    }

    /// Parses `n m` followed by one line of vertex indices per edge.
    pub fn parse(input: &str) -> Result<Self> {
        let mut lines = text::content_lines(input);
        let (line_no, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing `n m` header".into(),
        })?;
        let [n, m] = text::parse_fixed::<2>(line_no, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line_no, line) in lines.by_ref().take(m) {
            let edge = text::parse_list(line_no, line)?;
            if let Some(&v) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("vertex {v} out of range for {n} vertices"),
                });
            }
            edges.push(edge);
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
        Self::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for edge in &self.edges {
            let line: Vec<String> = edge.iter().map(usize::to_string).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::example_hypergraph;

    fn path_like() -> Hypergraph {
        Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap()
    }

    #[test]
    fn edge_cover_examples() {
        let h = path_like();
        assert!(h.is_edge_cover(&[0, 1]).unwrap());
        assert!(!h.is_edge_cover(&[0]).unwrap());
        assert!(example_hypergraph().is_edge_cover(&[0, 1]).unwrap());
        assert_eq!(
            h.is_edge_cover(&[2]),
            Err(Error::EdgeOutOfRange { index: 2, m: 2 })
        );
    }

    #[test]
    fn legal_edge_sequence_examples() {
        assert!(path_like().is_legal_edge_sequence(&[0, 1]).unwrap());
        let twins = Hypergraph::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert!(!twins.is_legal_edge_sequence(&[0, 1]).unwrap());
        // E3 adds x1,x2; E2 adds x3; E1 adds x4
        assert!(example_hypergraph()
            .is_legal_edge_sequence(&[2, 1, 0])
            .unwrap());
        assert_eq!(
            path_like().is_legal_edge_sequence(&[1, 1]),
            Err(Error::RepeatedEdge(1))
        );
    }

    #[test]
    fn legal_transversal_examples() {
        let h = path_like();
        assert!(h.is_legal_transversal_sequence(&[0, 2]).unwrap());
        assert!(!h.is_legal_transversal_sequence(&[1, 0]).unwrap());
        let single = Hypergraph::new(1, vec![vec![0]]).unwrap();
        assert!(single.is_legal_transversal_sequence(&[0]).unwrap());
        assert!(!single.is_legal_transversal_sequence(&[0, 0]).unwrap());
        assert!(h.is_legal_transversal_sequence(&[3]).is_err());
    }

    #[test]
    fn construction_and_text() {
        assert_eq!(Hypergraph::new(2, vec![vec![]]), Err(Error::EmptyEdge(0)));
        let h = Hypergraph::parse("3 2\n0 1\n# c\n2 1\n").unwrap();
        assert_eq!(h.edge(1), &[1, 2]);
        assert_eq!(h.edge_mask(0), Some(0b011));
        assert_eq!(Hypergraph::parse(&h.to_text()).unwrap(), h);
        assert!(Hypergraph::parse("3 2\n0 1\n").is_err());
        assert!(Hypergraph::parse("3 1\n0 5\n").is_err());
        let wide = Hypergraph::new(200, vec![(0..200).collect()]).unwrap();
        assert_eq!(wide.edge_mask(0), None);
        let iso = Hypergraph::new(3, vec![vec![0, 1]]).unwrap();
        assert_eq!(iso.require_no_isolated(), Err(Error::IsolatedVertex(2)));
    }
}
