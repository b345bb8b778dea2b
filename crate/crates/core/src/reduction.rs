//! Gadget graphs for the two hardness reductions, with vertex provenance.
//!
//! * [`hypergraph_to_bipartite`]: hypergraph `H` on `n` vertices and `m`
//!   edges to a bipartite graph with `γ_gr = n + m + ρ_gr(H)`.
//! * [`graph_to_cobipartite`]: graph `G` to a co-bipartite graph with the
//!   same Grundy domination number.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::hypergraph::Hypergraph;
use crate::sequence::VertexSequence;

/// Where a gadget vertex comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// `a_i`, one per hypergraph vertex.
    A(usize),
    /// `x_i'`, the copy of hypergraph vertex `i`.
    XPrime(usize),
    /// `e_i`, the copy of hyperedge `i`.
    EPrime(usize),
    /// `b_i`, one per hyperedge.
    B(usize),
    /// `v^1` or `v^2` for source vertex `v`.
    Copy { vertex: Vertex, copy: u8 },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::A(i) => write!(f, "A:{i}"),
            Role::XPrime(i) => write!(f, "X:{i}"),
            Role::EPrime(i) => write!(f, "E:{i}"),
            Role::B(i) => write!(f, "B:{i}"),
            Role::Copy { vertex, copy } => write!(f, "V{copy}:{vertex}"),
        }
    }
}

/// A gadget graph together with the role of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionMap {
    pub target: Graph,
    pub roles: Vec<Role>,
}

impl ReductionMap {
    /// Provenance sidecar: one `<index> <tag>` line per target vertex.
    pub fn provenance(&self) -> String {
        self.roles
            .iter()
            .enumerate()
            .map(|(i, r)| format!("{i} {r}\n"))
            .collect()
    }
}

/// Block offsets of the bipartite gadget: `A`, `X'`, `E'`, `B` in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartiteLayout {
    pub n: usize,
    pub m: usize,
}

impl BipartiteLayout {
    pub fn a(&self, i: usize) -> Vertex {
        i
    }
    pub fn x(&self, i: usize) -> Vertex {
        self.n + i
    }
    pub fn e(&self, i: usize) -> Vertex {
        2 * self.n + i
    }
    pub fn b(&self, i: usize) -> Vertex {
        2 * self.n + self.m + i
    }
    pub fn vertex_count(&self) -> usize {
        2 * (self.n + self.m)
    }
}

/// `A ∪ X'` spans `K_{n,n}`, `E' ∪ B` spans `K_{m,m}`, and `x_v'` is joined
/// to `e_i` exactly when `v` lies in edge `i`.
pub fn hypergraph_to_bipartite(h: &Hypergraph) -> Result<ReductionMap> {
    let (n, m) = (h.n(), h.m());
    if n < 2 || m < 2 {
        return Err(Error::Precondition(format!(
            "the bipartite gadget needs at least 2 vertices and 2 edges, got n={n} m={m}"
        )));
    }
    h.require_no_isolated()?;
    let l = BipartiteLayout { n, m };
    let mut edges =
        Vec::with_capacity(n * n + m * m + h.edges().iter().map(Vec::len).sum::<usize>());
    for i in 0..n {
        for j in 0..n {
            edges.push((l.a(i), l.x(j)));
        }
    }
    for i in 0..m {
        for j in 0..m {
            edges.push((l.e(i), l.b(j)));
        }
    }
    for (i, edge) in h.edges().iter().enumerate() {
        for &v in edge {
            edges.push((l.x(v), l.e(i)));
        }
    }
    let target = Graph::new(l.vertex_count(), edges)?;
    let roles = (0..n)
        .map(Role::A)
        .chain((0..n).map(Role::XPrime))
        .chain((0..m).map(Role::EPrime))
        .chain((0..m).map(Role::B))
        .collect();
    Ok(ReductionMap { target, roles })
}

/// Two cliques `V_1`, `V_2` on copies of `V(g)`, with `v_i^1 v_j^2` an edge
/// exactly when `v_j ∈ N_g[v_i]`.
pub fn graph_to_cobipartite(g: &Graph) -> Result<ReductionMap> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition(
            "the co-bipartite gadget needs a vertex".into(),
        ));
    }
    let mut edges = Vec::new();
    for copy in [0, n] {
        for i in 0..n {
            for j in i + 1..n {
                edges.push((copy + i, copy + j));
            }
        }
    }
    for i in 0..n {
        for v in g.closed_neighborhood(i)? {
            edges.push((i, n + v));
        }
    }
    let target = Graph::new(2 * n, edges)?;
    let roles = (0..2 * n)
        .map(|t| Role::Copy {
            vertex: t % n,
            copy: if t < n { 1 } else { 2 },
        })
        .collect();
    Ok(ReductionMap { target, roles })
}

/// Forward map for the bipartite gadget: an edge covering sequence of `h`
/// becomes `(b_1, …, b_m, e_{i_1}, …, e_{i_t}, a_1, …, a_n)`.
pub fn lift_cover_sequence(h: &Hypergraph, cover: &[usize]) -> Vec<Vertex> {
    let l = BipartiteLayout { n: h.n(), m: h.m() };
    (0..l.m)
        .map(|i| l.b(i))
        .chain(cover.iter().map(|&i| l.e(i)))
        .chain((0..l.n).map(|i| l.a(i)))
        .collect()
}

/// What a gadget dominating sequence says about the hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Projection {
    /// Edge indices of the `E'` vertices, in sequence order.
    Edges(Vec<usize>),
    /// Source vertices of the `X'` vertices, used when no `E'` vertex occurs.
    Transversal(Vec<usize>),
}

/// Projects a gadget sequence onto `E'`, or onto `X'` when it avoids `E'`.
/// This mirrors the backward direction of the equivalence only for sequences
/// already in the normal form where `A` and `B` come first; other optimal
/// sequences may project to something illegal.
pub fn project_to_hypergraph(map: &ReductionMap, order: &[Vertex]) -> Projection {
    let edges: Vec<usize> = order
        .iter()
        .filter_map(|&v| match map.roles[v] {
            Role::EPrime(i) => Some(i),
            _ => None,
        })
        .collect();
    if !edges.is_empty() {
        return Projection::Edges(edges);
    }
    Projection::Transversal(
        order
            .iter()
            .filter_map(|&v| match map.roles[v] {
                Role::XPrime(i) => Some(i),
                _ => None,
            })
            .collect(),
    )
}

/// Forward map for the co-bipartite gadget: `u_1, …, u_t` becomes
/// `u_1^1, …, u_t^1`.
pub fn lift_dominating_sequence(order: &[Vertex]) -> Vec<Vertex> {
    order.to_vec()
}

/// Backward map for the co-bipartite gadget. Takes a dominating sequence of
/// the gadget and returns a dominating sequence of the source of the same
/// length.
///
/// All but possibly the last entry lie in the same clique as the first
/// entry. A last entry from the other clique is swapped for the home copy of
/// a vertex it footprints whose home copy is not yet in the sequence.
pub fn project_to_source(map: &ReductionMap, seq: &VertexSequence) -> Result<Vec<Vertex>> {
    let copy_of = |v: Vertex| match map.roles[v] {
        Role::Copy { vertex, copy } => Ok((vertex, copy)),
        other => Err(Error::Precondition(format!(
            "{other} is not a co-bipartite gadget vertex"
        ))),
    };
    let order = seq.order();
    let Some(&first) = order.first() else {
        return Ok(Vec::new());
    };
    let home = copy_of(first)?.1;
    let mut out = Vec::with_capacity(order.len());
    for (pos, &w) in order.iter().enumerate() {
        let (vertex, copy) = copy_of(w)?;
        if copy == home {
            out.push(vertex);
            continue;
        }
        if pos + 1 != order.len() {
            return Err(Error::Verification(format!(
                "other-clique vertex {w} at position {pos} is not last"
            )));
        }
        let mut replacement = None;
        for &f in &seq.footprints()[pos] {
            let (src, c) = copy_of(f)?;
            if c != home && !out.contains(&src) {
                replacement = Some(src);
                break;
            }
        }
        let src = replacement.ok_or_else(|| {
            Error::Verification(format!("no replacement for the final vertex {w}"))
        })?;
        out.push(src);
    }
    Ok(out)
}

/// A small hypergraph with four vertices and five edges, used in examples and tests:
/// `E1={x1,x2,x4} E2={x2,x3} E3={x1,x2} E4={x2,x3,x4} E5={x1,x3,x4}`,
/// 0-based.
pub fn example_hypergraph() -> Hypergraph {
    Hypergraph::new(
        4,
        vec![
            vec![0, 1, 3],
            vec![1, 2],
            vec![0, 1],
            vec![1, 2, 3],
            vec![0, 2, 3],
        ],
    )
    .expect("example hypergraph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{grundy_cover_exact, grundy_domination_exact};
    use crate::sequence::{check_closed_neighborhood_sequence, is_dominating_sequence};

    #[test]
    fn example_hypergraph_gadget_counts() {
        let map = hypergraph_to_bipartite(&example_hypergraph()).unwrap();
        assert_eq!(map.target.n(), 18);
        assert_eq!(map.target.edge_count(), 16 + 25 + 13);
        let sides = map.target.bipartition().unwrap();
        // A ∪ E' against X' ∪ B
        let a_e: Vec<usize> = (0..4).chain(8..13).collect();
        let x_b: Vec<usize> = (4..8).chain(13..18).collect();
        assert_eq!(sides.side_x, a_e);
        assert_eq!(sides.side_y, x_b);
    }

    #[test]
    fn two_parallel_edges_gadget() {
        let h = Hypergraph::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        let map = hypergraph_to_bipartite(&h).unwrap();
        assert_eq!((map.target.n(), map.target.edge_count()), (8, 12));
        let rho = grundy_cover_exact(&h).unwrap().best_length;
        assert_eq!(
            grundy_domination_exact(&map.target, None)
                .unwrap()
                .best_length,
            2 + 2 + rho
        );
    }

    #[test]
    fn bipartite_preconditions() {
        let tiny = Hypergraph::new(1, vec![vec![0], vec![0]]).unwrap();
        assert!(matches!(
            hypergraph_to_bipartite(&tiny),
            Err(Error::Precondition(_))
        ));
        let one_edge = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        assert!(matches!(
            hypergraph_to_bipartite(&one_edge),
            Err(Error::Precondition(_))
        ));
        let iso = Hypergraph::new(3, vec![vec![0, 1], vec![1]]).unwrap();
        assert_eq!(
            hypergraph_to_bipartite(&iso).unwrap_err(),
            Error::IsolatedVertex(2)
        );
    }

    #[test]
    fn lifted_cover_dominates() {
        let h = example_hypergraph();
        let map = hypergraph_to_bipartite(&h).unwrap();
        let cover = grundy_cover_exact(&h).unwrap();
        let lifted = lift_cover_sequence(&h, &cover.best_sequence);
        assert!(is_dominating_sequence(&map.target, &lifted).unwrap());
        assert_eq!(lifted.len(), h.n() + h.m() + cover.best_length);
        assert_eq!(
            project_to_hypergraph(&map, &lifted),
            Projection::Edges(cover.best_sequence.clone())
        );
    }

    #[test]
    fn path_three_cobipartite_gadget() {
        let g = Graph::path(3);
        let map = graph_to_cobipartite(&g).unwrap();
        assert_eq!((map.target.n(), map.target.edge_count()), (6, 13));
        assert!(map.target.complement().bipartition().is_some());
        let k1 = graph_to_cobipartite(&Graph::empty(1)).unwrap();
        assert_eq!((k1.target.n(), k1.target.edge_count()), (2, 1));
        assert!(graph_to_cobipartite(&Graph::empty(0)).is_err());
    }

    #[test]
    fn cobipartite_maps_both_ways() {
        let g = Graph::path(4);
        let map = graph_to_cobipartite(&g).unwrap();
        let src = grundy_domination_exact(&g, None).unwrap();
        let lifted = lift_dominating_sequence(src.best_sequence.order());
        assert!(is_dominating_sequence(&map.target, &lifted).unwrap());

        let gadget = grundy_domination_exact(&map.target, None).unwrap();
        let back = project_to_source(&map, &gadget.best_sequence).unwrap();
        assert_eq!(back.len(), gadget.best_length);
        assert!(is_dominating_sequence(&g, &back).unwrap());
        // ending in the other clique: v0^1 then v2^2
        let seq = check_closed_neighborhood_sequence(&map.target, &[0, 6]).unwrap();
        let back = project_to_source(&map, &seq).unwrap();
        assert!(check_closed_neighborhood_sequence(&g, &back).is_ok());
    }

    #[test]
    fn provenance_lines() {
        let map = graph_to_cobipartite(&Graph::path(2)).unwrap();
        assert_eq!(map.provenance(), "0 V1:0\n1 V1:1\n2 V2:0\n3 V2:1\n");
        let map = hypergraph_to_bipartite(&example_hypergraph()).unwrap();
        let tags: Vec<String> = map.roles.iter().map(Role::to_string).collect();
        assert_eq!(&tags[..1], &["A:0"]);
        assert_eq!(tags[4], "X:0");
        assert_eq!(tags[8], "E:0");
        assert_eq!(tags[17], "B:4");
    }
}
