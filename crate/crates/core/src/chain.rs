//! Chain graphs: recognition, open-twin parts, the linear-time Grundy
//! dominating sequence, the independence number, and co-chain graphs.
//!
//! A chain graph is bipartite with sides `X` and `Y` whose neighborhoods are
//! nested. Grouping open twins gives parts `X_1..X_k` and `Y_1..Y_k` with
//! `N(X_i) = Y_1 ∪ … ∪ Y_i` and `N(Y_j) = X_j ∪ … ∪ X_k`.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::sequence::{self, is_sorted_subset, VertexSequence};

/// Chain ordering and open-twin parts of a chain graph without isolated
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStructure {
    n: usize,
    x_order: Vec<Vertex>,
    y_order: Vec<Vertex>,
    x_parts: Vec<Vec<Vertex>>,
    y_parts: Vec<Vec<Vertex>>,
}

impl ChainStructure {
    /// `X` side, neighborhoods ascending under inclusion.
    pub fn x_order(&self) -> &[Vertex] {
        &self.x_order
    }

    /// `Y` side, neighborhoods descending under inclusion.
    pub fn y_order(&self) -> &[Vertex] {
        &self.y_order
    }

    pub fn x_parts(&self) -> &[Vec<Vertex>] {
        &self.x_parts
    }

    pub fn y_parts(&self) -> &[Vec<Vertex>] {
        &self.y_parts
    }

    pub fn k(&self) -> usize {
        self.x_parts.len()
    }

    pub fn n1(&self) -> usize {
        self.x_order.len()
    }

    pub fn n2(&self) -> usize {
        self.y_order.len()
    }

    /// Vertex count of the underlying graph.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn x_sizes(&self) -> Vec<usize> {
        self.x_parts.iter().map(Vec::len).collect()
    }

    pub fn y_sizes(&self) -> Vec<usize> {
        self.y_parts.iter().map(Vec::len).collect()
    }

    /// Checks every structural invariant against `g`: both orders nest, and
    /// each part has exactly the neighborhood its index dictates.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::Verification(msg));
        let k = self.k();
        if k == 0 || self.y_parts.len() != k || self.n1() + self.n2() != g.n() {
            return fail("part counts do not match the graph".into());
        }
        for w in self.x_order.windows(2) {
            if !is_sorted_subset(g.neighbors(w[0]), g.neighbors(w[1])) {
                return fail(format!("x order not nested at {} {}", w[0], w[1]));
            }
        }
        for w in self.y_order.windows(2) {
            if !is_sorted_subset(g.neighbors(w[1]), g.neighbors(w[0])) {
                return fail(format!("y order not nested at {} {}", w[0], w[1]));
            }
        }
        // part index of every vertex, 1-based; X parts positive, Y parts negative
        let mut part = vec![0isize; g.n()];
        for (i, p) in self.x_parts.iter().enumerate() {
            p.iter().for_each(|&v| part[v] = i as isize + 1);
        }
        for (j, p) in self.y_parts.iter().enumerate() {
            p.iter().for_each(|&v| part[v] = -(j as isize + 1));
        }
        if part.contains(&0) {
            return fail("parts do not cover the vertex set".into());
        }
        let ys = self.y_sizes();
        let xs = self.x_sizes();
        for (i, p) in self.x_parts.iter().enumerate() {
            let expected: usize = ys[..=i].iter().sum();
            for &x in p {
                let ok = g.degree(x) == expected
                    && g.neighbors(x)
                        .iter()
                        .all(|&y| (1..=i as isize + 1).contains(&-part[y]));
                if !ok {
                    return fail(format!("N({x}) is not Y_1..Y_{}", i + 1));
                }
            }
        }
        for (j, p) in self.y_parts.iter().enumerate() {
            let expected: usize = xs[j..].iter().sum();
            for &y in p {
                let ok =
                    g.degree(y) == expected && g.neighbors(y).iter().all(|&x| part[x] > j as isize);
                if !ok {
                    return fail(format!("N({y}) is not X_{}..X_{k}", j + 1));
                }
            }
        }
        Ok(())
    }
}

/// Recognizes a chain graph and computes its chain structure in `O(n + m)`.
///
/// `X` is the side holding vertex 0. Its vertices are counting-sorted by
/// degree; nesting then only has to be checked between consecutive
/// vertices, and equal degrees must mean equal neighborhoods.
pub fn recognize_chain(g: &Graph) -> Result<ChainStructure> {
    if let Some(v) = g.isolated_vertices().next() {
        return Err(Error::IsolatedVertex(v));
    }
    let sides = g.bipartition().ok_or(Error::NotBipartite)?;

    let max_degree = sides.side_x.iter().map(|&x| g.degree(x)).max().unwrap_or(0);
    let mut buckets = vec![Vec::new(); max_degree + 1];
    for &x in &sides.side_x {
        buckets[g.degree(x)].push(x);
    }
    let x_order: Vec<Vertex> = buckets.into_iter().flatten().collect();

    let mut x_parts: Vec<Vec<Vertex>> = Vec::new();
    for (pos, &x) in x_order.iter().enumerate() {
        if pos == 0 {
            x_parts.push(vec![x]);
            continue;
        }
        let prev = x_order[pos - 1];
        let (a, b) = (g.neighbors(prev), g.neighbors(x));
        if a.len() == b.len() {
            if a != b {
                return Err(Error::NotChain(prev, x));
            }
            x_parts.last_mut().unwrap().push(x);
        } else {
            if !is_sorted_subset(a, b) {
                return Err(Error::NotChain(prev, x));
            }
            x_parts.push(vec![x]);
        }
    }

    // Y_j collects the neighbors of X_j not already seen from X_1..X_{j-1}
    let mut assigned = vec![false; g.n()];
    let mut y_parts = Vec::with_capacity(x_parts.len());
    for part in &x_parts {
        let mut fresh: Vec<Vertex> = g
            .neighbors(part[0])
            .iter()
            .copied()
            .filter(|&y| !std::mem::replace(&mut assigned[y], true))
            .collect();
        fresh.sort_unstable();
        y_parts.push(fresh);
    }
    let y_order: Vec<Vertex> = y_parts.iter().flatten().copied().collect();
    debug_assert_eq!(y_order.len(), sides.side_y.len());

    Ok(ChainStructure {
        n: g.n(),
        x_order,
        y_order,
        x_parts,
        y_parts,
    })
}

/// The score table over `i = 0..=k`. Entry `i` is the length of the
/// sequence built for that split.
pub fn chain_scores(cs: &ChainStructure) -> Vec<usize> {
    let k = cs.k();
    let (xs, ys) = (cs.x_sizes(), cs.y_sizes());
    let (n1, n2) = (cs.n1(), cs.n2());
    let mut scores = Vec::with_capacity(k + 1);
    scores.push(if ys[0] == 1 { n2 + xs[0] } else { n2 });
    let (mut px, mut py) = (0, 0);
    for i in 1..k {
        px += xs[i - 1];
        py += ys[i - 1];
        scores.push(px + n2 - py + 1);
    }
    scores.push(if xs[k - 1] == 1 { n1 + ys[k - 1] } else { n1 });
    scores
}

/// Smallest index attaining the maximum score.
pub fn best_split(scores: &[usize]) -> usize {
    let max = *scores.iter().max().expect("score table is never empty");
    scores.iter().position(|&s| s == max).unwrap()
}

/// Builds the dominating sequence without verifying it.
///
/// For `k = 1` (complete bipartite) this is the larger side, `X` on ties.
/// Otherwise the split `i*` from [`best_split`] picks one of the sequence
/// shapes below, with parts written 1-based.
pub fn grundy_chain_order(cs: &ChainStructure) -> Vec<Vertex> {
    let k = cs.k();
    if k == 1 {
        return if cs.n1() >= cs.n2() {
            cs.x_order.clone()
        } else {
            cs.y_order.clone()
        };
    }
    let x = |i: usize| cs.x_parts[i - 1].as_slice();
    let y = |j: usize| cs.y_parts[j - 1].as_slice();
    let mut out: Vec<Vertex> = Vec::with_capacity(cs.n);
    let mut push = |part: &[Vertex]| out.extend_from_slice(part);

    let scores = chain_scores(cs);
    let split = best_split(&scores);
    if split == 0 && y(1).len() > 1 {
        (1..=k).rev().for_each(|j| push(y(j)));
    } else if split == 0 {
        push(x(1));
        if k >= 3 {
            (3..=k).rev().for_each(|j| push(y(j)));
        }
        push(y(1));
        push(y(2));
    } else if split == k && x(k).len() > 1 {
        (1..=k).for_each(|i| push(x(i)));
    } else if split == k {
        if k >= 3 {
            (1..=k - 2).for_each(|i| push(x(i)));
            push(y(k));
            push(x(k));
            push(x(k - 1));
        } else {
            push(y(2));
            push(x(2));
            push(x(1));
        }
    } else {
        let pivot = x(split + 1)[0];
        if split > 1 {
            (1..split).for_each(|i| push(x(i)));
            (split + 1..=k).rev().for_each(|j| push(y(j)));
            push(&[pivot]);
            push(x(split));
        } else {
            (2..=k).rev().for_each(|j| push(y(j)));
            push(&[pivot]);
            push(x(1));
        }
    }
    out
}

/// A Grundy dominating sequence of the chain graph `g` with structure `cs`,
/// re-verified against `g` before it is returned.
pub fn grundy_chain(g: &Graph, cs: &ChainStructure) -> Result<VertexSequence> {
    let order = grundy_chain_order(cs);
    let seq = sequence::check_closed_neighborhood_sequence(g, &order)
        .map_err(|e| Error::Verification(format!("chain sequence rejected: {e}")))?;
    if seq.dominated_count() != g.n() {
        return Err(Error::Verification(
            "chain sequence does not dominate".into(),
        ));
    }
    let expected = if cs.k() == 1 {
        cs.n1().max(cs.n2())
    } else {
        chain_scores(cs).into_iter().max().unwrap()
    };
    if seq.len() != expected {
        return Err(Error::Verification(format!(
            "chain sequence has length {}, score table says {expected}",
            seq.len()
        )));
    }
    Ok(seq)
}

/// `α(g)` for a chain graph: the best of `X`, `Y`, and
/// `X_1 ∪ … ∪ X_i ∪ Y_{i+1} ∪ … ∪ Y_k` for `1 <= i < k`.
pub fn independence_number_chain(cs: &ChainStructure) -> usize {
    let (xs, ys) = (cs.x_sizes(), cs.y_sizes());
    let mut best = cs.n1().max(cs.n2());
    let (mut px, mut py) = (0, 0);
    for i in 1..cs.k() {
        px += xs[i - 1];
        py += ys[i - 1];
        best = best.max(px + cs.n2() - py);
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainSolution {
    /// Number of closed-twin classes per side.
    pub k: usize,
    pub gamma_gr: usize,
    pub sequence: VertexSequence,
}

/// Solves a co-chain graph, i.e. one whose complement is a chain graph.
///
/// In `g` both sides are cliques. With the complement's parts, `N[y]` for
/// `y ∈ Y_j` is `Y ∪ X_1 ∪ … ∪ X_{j-1}` and `N[x]` for `x ∈ X_i` is
/// `X ∪ Y_{i+1} ∪ … ∪ Y_k`. One vertex from each of `Y_1, …, Y_k` followed
/// by one from `X_k` footprints `Y`, then `X_1`, …, `X_{k-1}`, then `X_k`,
/// for `k + 1` steps. No longer sequence exists: after the first `X` and
/// the first `Y` vertex everything is dominated, and before that only one
/// side can contribute, at most one step per class.
pub fn grundy_cochain(g: &Graph) -> Result<CochainSolution> {
    let complement = g.complement();
    let cs = recognize_chain(&complement)?;
    let k = cs.k();
    let mut order: Vec<Vertex> = cs.y_parts.iter().map(|p| p[0]).collect();
    order.push(cs.x_parts[k - 1][0]);
    let seq = sequence::check_closed_neighborhood_sequence(g, &order)
        .map_err(|e| Error::Verification(format!("co-chain sequence rejected: {e}")))?;
    if seq.dominated_count() != g.n() {
        return Err(Error::Verification(
            "co-chain sequence does not dominate".into(),
        ));
    }
    Ok(CochainSolution {
        k,
        gamma_gr: seq.len(),
        sequence: seq,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::grundy_domination_exact;

    /// P4 with X = {a, b} = {0, 1}, Y = {c, d} = {2, 3}; edges a-c, b-c, b-d.
    fn p4() -> Graph {
        Graph::new(4, [(0, 2), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn recognizes_p4() {
        let g = p4();
        let cs = recognize_chain(&g).unwrap();
        assert_eq!(cs.x_parts(), &[vec![0], vec![1]]);
        assert_eq!(cs.y_parts(), &[vec![2], vec![3]]);
        cs.validate(&g).unwrap();
    }

    #[test]
    fn complete_bipartite_is_one_part() {
        let g = Graph::complete_bipartite(3, 2);
        let cs = recognize_chain(&g).unwrap();
        assert_eq!(cs.k(), 1);
        assert_eq!(cs.x_parts(), &[vec![0, 1, 2]]);
        assert_eq!(cs.y_parts(), &[vec![3, 4]]);
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            recognize_chain(&Graph::cycle(6)),
            Err(Error::NotChain(_, _))
        ));
        assert_eq!(recognize_chain(&Graph::cycle(5)), Err(Error::NotBipartite));
        let iso = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(recognize_chain(&iso), Err(Error::IsolatedVertex(2)));
        // 2K2: disconnected, incomparable
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            recognize_chain(&two_k2),
            Err(Error::NotChain(_, _))
        ));
    }

    #[test]
    fn p4_scores_and_sequence() {
        let g = p4();
        let cs = recognize_chain(&g).unwrap();
        assert_eq!(chain_scores(&cs), vec![3, 3, 3]);
        assert_eq!(best_split(&chain_scores(&cs)), 0);
        let seq = grundy_chain(&g, &cs).unwrap();
        assert_eq!(seq.order(), &[0, 2, 3]);
        assert_eq!(
            seq.len(),
            grundy_domination_exact(&g, None).unwrap().best_length
        );
    }

    #[test]
    fn complete_bipartite_takes_the_larger_side() {
        let g = Graph::complete_bipartite(2, 3);
        let cs = recognize_chain(&g).unwrap();
        assert_eq!(grundy_chain(&g, &cs).unwrap().order(), &[2, 3, 4]);
        // the k = 1 table would claim 2 + 1 for K_{1,1}; the short circuit gives 1
        let k2 = Graph::complete_bipartite(1, 1);
        let cs = recognize_chain(&k2).unwrap();
        assert_eq!(grundy_chain(&k2, &cs).unwrap().len(), 1);
    }

    #[test]
    fn independence_examples() {
        let cs = recognize_chain(&p4()).unwrap();
        assert_eq!(independence_number_chain(&cs), 2);
        for (a, b) in [(1, 1), (2, 5), (4, 3)] {
            let cs = recognize_chain(&Graph::complete_bipartite(a, b)).unwrap();
            assert_eq!(independence_number_chain(&cs), a.max(b));
        }
    }

    #[test]
    fn cochain_examples() {
        let g = Graph::complete_bipartite(2, 3).complement();
        let sol = grundy_cochain(&g).unwrap();
        assert_eq!(sol.k, 1);
        assert_eq!(
            sol.gamma_gr,
            grundy_domination_exact(&g, None).unwrap().best_length
        );

        let g = p4().complement();
        let sol = grundy_cochain(&g).unwrap();
        assert_eq!(
            sol.gamma_gr,
            grundy_domination_exact(&g, None).unwrap().best_length
        );

        assert!(grundy_cochain(&Graph::cycle(6).complement()).is_err());
    }
}
