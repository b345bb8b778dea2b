//! Exact Grundy numbers by memoized branch and bound.
//!
//! All three searches share one engine. A state is a set of "used up"
//! elements of a small universe: dominated vertices for `γ_gr`, covered
//! vertices for `ρ_gr`, and edges already hit for `τ_gr`. A move is a mask
//! over the same universe; it is legal when it contains an element outside
//! the state, and it turns the state into the union. The value of a state is
//! the longest run of legal moves from it until the universe is exhausted.
//!
//! # Why a state alone determines the future
//!
//! Two prefixes that reach the same state have identical continuations. A
//! move's legality and effect only depend on the state, and a move that was
//! already played is contained in the state, so it can never be legal
//! again. The chosen set therefore carries no information beyond the state,
//! and the best remaining length can be memoized per state. The plain
//! depth-first search in [`grundy_domination_plain`] does not use this fact
//! and serves as the cross-check.
//!
//! # Bounds
//!
//! Every legal move uses up at least one new element, so a state with `r`
//! elements left has value at most `r`. A child is skipped when
//! `1 + r(child)` cannot beat the best sibling found so far, and a node stops
//! as soon as it reaches `r`. Skipped children never contribute to their
//! parent's maximum, so every memoized value is exact.
//!
//! From any state other than the full universe some move is legal (an
//! undominated vertex can always pick itself; an uncovered vertex lies in some
//! edge; an unhit edge has a vertex). Runs therefore always end at the full
//! universe: the longest legal sequence is also the longest dominating
//! (covering) one.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{Hypergraph, BITSET_LIMIT};
use crate::sequence::{self, VertexSequence};

/// Default and dense-memo vertex cap for the graph search.
pub const DEFAULT_VERTEX_CAP: usize = 20;
/// Edge cap for the hypergraph searches.
pub const EDGE_CAP: usize = 20;
/// Universes up to this many bits use a flat memo table.
const DENSE_MEMO_BITS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult<W> {
    pub best_length: usize,
    pub best_sequence: W,
    pub nodes_explored: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest accepted vertex count, at most 128.
    pub vertex_cap: usize,
    /// Maximum number of expanded search nodes, or unlimited.
    pub node_budget: Option<u64>,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            vertex_cap: DEFAULT_VERTEX_CAP,
            node_budget: None,
        }
    }
}

const UNKNOWN: u8 = u8::MAX;

enum Memo {
    Dense(Vec<u8>),
    Sparse(HashMap<u128, u8>),
}

impl Memo {
    fn new(bits: usize) -> Self {
        if bits <= DENSE_MEMO_BITS {
            Memo::Dense(vec![UNKNOWN; 1 << bits])
        } else {
            Memo::Sparse(HashMap::new())
        }
    }

    fn get(&self, state: u128) -> Option<u8> {
        match self {
            Memo::Dense(t) => Some(t[state as usize]).filter(|&v| v != UNKNOWN),
            Memo::Sparse(m) => m.get(&state).copied(),
        }
    }

    fn set(&mut self, state: u128, value: u8) {
        match self {
            Memo::Dense(t) => t[state as usize] = value,
            Memo::Sparse(m) => {
                m.insert(state, value);
            }
        }
    }
}

struct Engine<'a> {
    moves: &'a [u128],
    full: u128,
    memo: Memo,
    nodes: u64,
    budget: Option<u64>,
}

impl<'a> Engine<'a> {
    fn new(bits: usize, moves: &'a [u128], budget: Option<u64>) -> Self {
        let full = if bits == 128 {
            u128::MAX
        } else {
            (1u128 << bits) - 1
        };
        Self {
            moves,
            full,
            memo: Memo::new(bits),
            nodes: 0,
            budget,
        }
    }

    fn remaining(&self, state: u128) -> u32 {
        (self.full & !state).count_ones()
    }

    /// Legal moves from `state`, largest gain first, ties by index.
    fn candidates(&self, state: u128) -> Vec<(u32, usize)> {
        let mut c: Vec<(u32, usize)> = self
            .moves
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| {
                let gain = (m & !state).count_ones();
                (gain > 0).then_some((gain, i))
            })
            .collect();
        c.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        c
    }

    fn value(&mut self, state: u128) -> Result<u32> {
        if state == self.full {
            return Ok(0);
        }
        if let Some(v) = self.memo.get(state) {
            return Ok(v as u32);
        }
        self.nodes += 1;
        if let Some(budget) = self.budget {
            if self.nodes > budget {
                return Err(Error::BudgetExceeded(budget));
            }
        }
        let cap = self.remaining(state);
        let mut best = 0;
        for (_, i) in self.candidates(state) {
            let child = state | self.moves[i];
            if self.remaining(child) < best {
                continue;
            }
            best = best.max(1 + self.value(child)?);
            if best == cap {
                break;
            }
        }
        self.memo.set(state, best as u8);
        Ok(best)
    }

    /// Solves from the empty state and returns the optimum with the move
    /// indices of one optimal run (first optimal candidate at every step).
    fn solve(&mut self) -> Result<(usize, Vec<usize>)> {
        let total = self.value(0)?;
        let mut witness = Vec::with_capacity(total as usize);
        let mut state = 0u128;
        let mut left = total;
        while state != self.full {
            let mut next = None;
            for (_, i) in self.candidates(state) {
                let child = state | self.moves[i];
                if 1 + self.value(child)? == left {
                    next = Some((i, child));
                    break;
                }
            }
            let (i, child) = next.expect("an optimal move exists at every reachable state");
            witness.push(i);
            state = child;
            left -= 1;
        }
        Ok((total as usize, witness))
    }
}

fn closed_masks(g: &Graph) -> Vec<u128> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(1u128 << v, |m, &w| m | 1 << w))
        .collect()
}

fn check_vertex_cap(g: &Graph, limits: &Limits) -> Result<()> {
    let cap = limits.vertex_cap.min(BITSET_LIMIT);
    if g.n() > cap {
        return Err(Error::SizeCap {
            what: "vertices",
            size: g.n(),
            cap,
        });
    }
    Ok(())
}

/// `γ_gr(g)` with a maximum-length dominating sequence, under the default
/// vertex cap.
pub fn grundy_domination_exact(
    g: &Graph,
    node_budget: Option<u64>,
) -> Result<SearchResult<VertexSequence>> {
    grundy_domination_exact_with(
        g,
        &Limits {
            node_budget,
            ..Limits::default()
        },
    )
}

pub fn grundy_domination_exact_with(
    g: &Graph,
    limits: &Limits,
) -> Result<SearchResult<VertexSequence>> {
    check_vertex_cap(g, limits)?;
    let moves = closed_masks(g);
    let mut engine = Engine::new(g.n(), &moves, limits.node_budget);
    let (best_length, order) = engine.solve()?;
    let seq = sequence::check_closed_neighborhood_sequence(g, &order)
        .map_err(|e| Error::Verification(format!("exact witness rejected: {e}")))?;
    if seq.dominated_count() != g.n() || seq.len() != best_length {
        return Err(Error::Verification(
            "exact witness does not dominate".into(),
        ));
    }
    Ok(SearchResult {
        best_length,
        best_sequence: seq,
        nodes_explored: engine.nodes,
    })
}

/// Depth-first search over legal sequences without memoization, pruning
/// against the best complete sequence found so far. Exponentially slower
/// than [`grundy_domination_exact`]; kept as its cross-check.
pub fn grundy_domination_plain(g: &Graph) -> Result<SearchResult<VertexSequence>> {
    check_vertex_cap(g, &Limits::default())?;
    let moves = closed_masks(g);
    let full = if g.n() == 0 { 0 } else { (1u128 << g.n()) - 1 };

    struct Dfs<'a> {
        moves: &'a [u128],
        full: u128,
        path: Vec<usize>,
        best: Vec<usize>,
        nodes: u64,
    }
    impl Dfs<'_> {
        fn go(&mut self, state: u128) {
            self.nodes += 1;
            if state == self.full {
                if self.path.len() > self.best.len() {
                    self.best = self.path.clone();
                }
                return;
            }
            if self.path.len() + (self.full & !state).count_ones() as usize <= self.best.len() {
                return;
            }
            for (i, &m) in self.moves.iter().enumerate() {
                if m & !state != 0 {
                    self.path.push(i);
                    self.go(state | m);
                    self.path.pop();
                }
            }
        }
    }

    let mut dfs = Dfs {
        moves: &moves,
        full,
        path: Vec::new(),
        best: Vec::new(),
        nodes: 0,
    };
    dfs.go(0);
    let seq = sequence::check_closed_neighborhood_sequence(g, &dfs.best)
        .map_err(|e| Error::Verification(format!("plain search witness rejected: {e}")))?;
    Ok(SearchResult {
        best_length: seq.len(),
        best_sequence: seq,
        nodes_explored: dfs.nodes,
    })
}

fn check_hypergraph(h: &Hypergraph) -> Result<()> {
    if h.m() > EDGE_CAP {
        return Err(Error::SizeCap {
            what: "edges",
            size: h.m(),
            cap: EDGE_CAP,
        });
    }
    if h.n() > BITSET_LIMIT {
        return Err(Error::SizeCap {
            what: "vertices",
            size: h.n(),
            cap: BITSET_LIMIT,
        });
    }
    Ok(())
}

/// `ρ_gr(h)`: the longest legal edge sequence whose edges cover every vertex.
/// The witness lists edge indices.
pub fn grundy_cover_exact(h: &Hypergraph) -> Result<SearchResult<Vec<usize>>> {
    h.require_no_isolated()?;
    check_hypergraph(h)?;
    let moves: Vec<u128> = (0..h.m()).map(|i| h.edge_mask(i).unwrap()).collect();
    let mut engine = Engine::new(h.n(), &moves, None);
    let (best_length, witness) = engine.solve()?;
    if !h.is_legal_edge_sequence(&witness)? || !h.is_edge_cover(&witness)? {
        return Err(Error::Verification(
            "cover witness is not a legal covering sequence".into(),
        ));
    }
    Ok(SearchResult {
        best_length,
        best_sequence: witness,
        nodes_explored: engine.nodes,
    })
}

/// `τ_gr(h)`: the longest legal transversal sequence. The witness lists
/// vertices.
pub fn grundy_transversal_exact(h: &Hypergraph) -> Result<SearchResult<Vec<usize>>> {
    check_hypergraph(h)?;
    // a vertex "uses up" the edges containing it
    let moves: Vec<u128> = (0..h.n())
        .map(|v| h.edges_containing(v).iter().fold(0u128, |m, &e| m | 1 << e))
        .collect();
    let mut engine = Engine::new(h.m(), &moves, None);
    let (best_length, witness) = engine.solve()?;
    if !h.is_legal_transversal_sequence(&witness)? {
        return Err(Error::Verification(
            "transversal witness is not legal".into(),
        ));
    }
    Ok(SearchResult {
        best_length,
        best_sequence: witness,
        nodes_explored: engine.nodes,
    })
}

/// `α(g)` by branching on the lowest remaining vertex (take it or drop it).
pub fn independence_number_exact(g: &Graph) -> Result<usize> {
    check_vertex_cap(
        g,
        &Limits {
            vertex_cap: 64,
            node_budget: None,
        },
    )?;
    let open: Vec<u128> = closed_masks(g)
        .iter()
        .enumerate()
        .map(|(v, m)| m & !(1 << v))
        .collect();
    fn best(open: &[u128], cand: u128) -> usize {
        if cand == 0 {
            return 0;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !(1 << v);
        if open[v] & rest == 0 {
            return 1 + best(open, rest);
        }
        best(open, rest).max(1 + best(open, rest & !open[v]))
    }
    let all = if g.n() == 0 { 0 } else { (1u128 << g.n()) - 1 };
    Ok(best(&open, all))
}
