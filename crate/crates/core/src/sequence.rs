//! Legality, footprints and domination of vertex sequences.
//!
//! Everything here recomputes from the graph and the raw order; nothing is
//! trusted from whichever solver produced the sequence.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::text;

/// A legal closed neighborhood sequence together with its footprints.
///
/// `footprints[i]` is `N[order[i]]` minus everything dominated by earlier
/// entries. It is never empty, and footprints are pairwise disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSequence {
    order: Vec<Vertex>,
    footprints: Vec<Vec<Vertex>>,
}

impl VertexSequence {
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn footprints(&self) -> &[Vec<Vertex>] {
        &self.footprints
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Number of vertices dominated by the whole sequence.
    pub fn dominated_count(&self) -> usize {
        self.footprints.iter().map(Vec::len).sum()
    }

    pub fn into_order(self) -> Vec<Vertex> {
        self.order
    }
}

fn check_distinct(g: &Graph, order: &[Vertex]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for &v in order {
        g.check_vertex(v)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::DuplicateVertex(v));
        }
    }
    Ok(())
}

/// Sweeps `order` left to right over a dominated-vertex set and records what
/// each step newly dominates. Fails at the first step that adds nothing.
pub fn check_closed_neighborhood_sequence(g: &Graph, order: &[Vertex]) -> Result<VertexSequence> {
    check_distinct(g, order)?;
    let mut dominated = vec![false; g.n()];
    let mut footprints = Vec::with_capacity(order.len());
    for (position, &v) in order.iter().enumerate() {
        let mut fp = Vec::new();
        if !std::mem::replace(&mut dominated[v], true) {
            fp.push(v);
        }
        for &w in g.neighbors(v) {
            if !std::mem::replace(&mut dominated[w], true) {
                fp.push(w);
            }
        }
        if fp.is_empty() {
            return Err(Error::IllegalStep {
                position,
                vertex: v,
            });
        }
        fp.sort_unstable();
        footprints.push(fp);
    }
    Ok(VertexSequence {
        order: order.to_vec(),
        footprints,
    })
}

/// `Ok(true)` iff `order` is legal and dominates every vertex. An illegal
/// order is an error, not `false`.
pub fn is_dominating_sequence(g: &Graph, order: &[Vertex]) -> Result<bool> {
    let seq = check_closed_neighborhood_sequence(g, order)?;
    Ok(seq.dominated_count() == g.n())
}

/// Checks that whenever `N[u] ⊆ N[v]` for two members of the sequence, `u`
/// comes first. This holds for every legal sequence, so a `false` here
/// means the sequence was not legal to begin with.
pub fn check_subset_ordering(g: &Graph, seq: &VertexSequence) -> bool {
    let closed: Vec<Vec<Vertex>> = seq
        .order
        .iter()
        .map(|&v| {
            g.closed_neighborhood(v)
                .expect("sequence vertices are in range")
        })
        .collect();
    for later in 0..closed.len() {
        for earlier in 0..later {
            if is_sorted_subset(&closed[later], &closed[earlier]) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut it = big.iter();
    small.iter().all(|s| it.by_ref().any(|b| b == s))
}

/// Parses the one-line sequence format: space-separated vertex indices.
/// Surrounding parentheses are tolerated.
pub fn parse_sequence(input: &str) -> Result<Vec<Vertex>> {
    let cleaned: String = input
        .chars()
        .map(|c| {
            if c == '(' || c == ')' || c == ',' {
                ' '
            } else {
                c
            }
        })
        .collect();
    let mut lines = text::content_lines(&cleaned);
    let Some((line_no, line)) = lines.next() else {
        return Ok(Vec::new());
    };
    if let Some((extra, _)) = lines.next() {
        return Err(Error::Parse {
            line: extra,
            message: "a sequence file holds a single line".into(),
        });
    }
    text::parse_list(line_no, line)
}

pub fn format_sequence(order: &[Vertex]) -> String {
    order
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
