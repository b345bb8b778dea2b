//! Property and equivalence sweeps over exhaustive and seeded instance
//! families, run in parallel.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::chain::{grundy_chain, independence_number_chain, recognize_chain};
use crate::error::Error;
use crate::exact::{
    grundy_cover_exact, grundy_domination_exact, grundy_transversal_exact,
    independence_number_exact,
};
use crate::generate::{
    all_chain_profiles, all_graphs, all_hypergraphs, chain_from_profile, random_chain_profile,
    random_graph, random_hypergraph, EdgeListing, XorShift64Star,
};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::reduction::{graph_to_cobipartite, hypergraph_to_bipartite};
use crate::sequence::check_subset_ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepKind {
    /// Chain algorithm against the exact search.
    Chain,
    /// Both solvers on `K_{a,b}`, `1 <= a, b <= 6`.
    CompleteBipartite,
    /// `γ_gr - α ∈ {0, 1}` on chain graphs, and the chain `α` against brute force.
    Alpha,
    /// `γ_gr` of the bipartite gadget against `n + m + ρ_gr`.
    BipartiteReduction,
    /// `γ_gr` of the co-bipartite gadget against the source.
    CobipartiteReduction,
    /// `τ_gr = ρ_gr`.
    Duality,
}

impl SweepKind {
    pub const ALL: [SweepKind; 6] = [
        SweepKind::Chain,
        SweepKind::CompleteBipartite,
        SweepKind::Alpha,
        SweepKind::BipartiteReduction,
        SweepKind::CobipartiteReduction,
        SweepKind::Duality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepKind::Chain => "chain",
            SweepKind::CompleteBipartite => "complete-bipartite",
            SweepKind::Alpha => "alpha",
            SweepKind::BipartiteReduction => "bipartite-reduction",
            SweepKind::CobipartiteReduction => "cobipartite-reduction",
            SweepKind::Duality => "duality",
        }
    }

    /// Number of seeded random instances in the default sweep.
    pub fn default_random(self) -> usize {
        match self {
            SweepKind::Chain | SweepKind::Alpha => 1000,
            SweepKind::BipartiteReduction | SweepKind::CobipartiteReduction => 200,
            SweepKind::Duality => 500,
            SweepKind::CompleteBipartite => 0,
        }
    }
}

impl fmt::Display for SweepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown sweep `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepOutcome {
    pub kind: SweepKind,
    pub instances: usize,
    /// Descriptions of failing instances, at most [`MAX_REPORTED`].
    pub failures: Vec<String>,
    pub failure_count: usize,
    pub elapsed_ms: f64,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

pub const MAX_REPORTED: usize = 10;

type Check = Result<(), String>;

fn exact_gamma(g: &Graph) -> Result<usize, String> {
    grundy_domination_exact(g, None)
        .map(|r| r.best_length)
        .map_err(|e| e.to_string())
}

/// Chain algorithm vs exact search, with the witness re-verified.
pub fn check_chain_instance(g: &Graph) -> Check {
    let cs = recognize_chain(g).map_err(|e| e.to_string())?;
    cs.validate(g).map_err(|e| e.to_string())?;
    let seq = grundy_chain(g, &cs).map_err(|e| e.to_string())?;
    if !check_subset_ordering(g, &seq) {
        return Err("chain witness breaks subset ordering".into());
    }
    let exact = exact_gamma(g)?;
    if seq.len() != exact {
        return Err(format!("chain gives {}, exact gives {exact}", seq.len()));
    }
    Ok(())
}

pub fn check_alpha_instance(g: &Graph) -> Check {
    let cs = recognize_chain(g).map_err(|e| e.to_string())?;
    let gamma = grundy_chain(g, &cs).map_err(|e| e.to_string())?.len();
    let alpha = independence_number_chain(&cs);
    if gamma < alpha || gamma - alpha > 1 {
        return Err(format!("γ_gr = {gamma}, α = {alpha}"));
    }
    if g.n() <= 14 {
        let brute = independence_number_exact(g).map_err(|e| e.to_string())?;
        if brute != alpha {
            return Err(format!("chain α = {alpha}, brute force α = {brute}"));
        }
    }
    Ok(())
}

pub fn check_bipartite_reduction(h: &Hypergraph) -> Check {
    let rho = grundy_cover_exact(h)
        .map_err(|e| e.to_string())?
        .best_length;
    let map = hypergraph_to_bipartite(h).map_err(|e| e.to_string())?;
    let gamma = exact_gamma(&map.target)?;
    let expected = h.n() + h.m() + rho;
    if gamma != expected {
        return Err(format!("gadget γ_gr = {gamma}, n + m + ρ_gr = {expected}"));
    }
    Ok(())
}

pub fn check_cobipartite_reduction(g: &Graph) -> Check {
    let map = graph_to_cobipartite(g).map_err(|e| e.to_string())?;
    let (source, gadget) = (exact_gamma(g)?, exact_gamma(&map.target)?);
    if source != gadget {
        return Err(format!("source γ_gr = {source}, gadget γ_gr = {gadget}"));
    }
    Ok(())
}

pub fn check_duality(h: &Hypergraph) -> Check {
    let rho = grundy_cover_exact(h)
        .map_err(|e| e.to_string())?
        .best_length;
    let tau = grundy_transversal_exact(h)
        .map_err(|e| e.to_string())?
        .best_length;
    if rho != tau {
        return Err(format!("ρ_gr = {rho}, τ_gr = {tau}"));
    }
    Ok(())
}

/// Exhaustive chain profiles (`k <= 4`, sizes `<= 3`, `<= 16` vertices)
/// followed by `random` seeded profiles with at most 18 vertices.
pub fn chain_family(random: usize, seed: u64) -> Vec<Graph> {
    all_chain_profiles(4, 3, 16)
        .iter()
        .chain(
            (0..random as u64)
                .map(|i| random_chain_profile(18, 6, seed.wrapping_add(i)))
                .collect::<Vec<_>>()
                .iter(),
        )
        .map(chain_from_profile)
        .collect()
}

/// Seeded hypergraph with `2 <= n <= max_n`, `2 <= m <= max_m`.
pub fn random_sized_hypergraph(min: usize, max_n: usize, max_m: usize, seed: u64) -> Hypergraph {
    let mut rng = XorShift64Star::new(seed);
    let n = min + rng.below(max_n - min + 1);
    let m = min + rng.below(max_m - min + 1);
    random_hypergraph(n, m, rng.next_u64())
}

/// Seeded graph with `1 <= n <= max_n` and edge probability in `[0.1, 0.9)`.
pub fn random_sized_graph(max_n: usize, seed: u64) -> Graph {
    let mut rng = XorShift64Star::new(seed);
    let n = 1 + rng.below(max_n);
    let p = 0.1 + 0.8 * rng.unit();
    random_graph(n, p, rng.next_u64())
}

fn run_checks<T, I, F>(kind: SweepKind, items: I, check: F) -> SweepOutcome
where
    T: Send + fmt::Debug,
    I: Iterator<Item = T> + Send,
    F: Fn(&T) -> Check + Sync,
{
    let start = Instant::now();
    let results: Vec<Option<String>> = items
        .enumerate()
        .par_bridge()
        .map(|(i, item)| check(&item).err().map(|e| format!("#{i} {item:?}: {e}")))
        .collect();
    let instances = results.len();
    let mut failures: Vec<String> = results.into_iter().flatten().collect();
    failures.sort();
    let failure_count = failures.len();
    failures.truncate(MAX_REPORTED);
    SweepOutcome {
        kind,
        instances,
        failures,
        failure_count,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Runs one sweep with `random` seeded instances starting at `seed`.
pub fn run(kind: SweepKind, random: usize, seed: u64) -> SweepOutcome {
    match kind {
        SweepKind::Chain => run_checks(
            kind,
            chain_family(random, seed).into_iter(),
            check_chain_instance,
        ),
        SweepKind::Alpha => run_checks(
            kind,
            chain_family(random, seed).into_iter(),
            check_alpha_instance,
        ),
        SweepKind::CompleteBipartite => {
            let pairs = (1..=6).flat_map(|a| (1..=6).map(move |b| (a, b)));
            run_checks(kind, pairs, |&(a, b)| {
                let g = Graph::complete_bipartite(a, b);
                let cs = recognize_chain(&g).map_err(|e| e.to_string())?;
                let chain = grundy_chain(&g, &cs).map_err(|e| e.to_string())?.len();
                let exact = exact_gamma(&g)?;
                if chain == a.max(b) && exact == a.max(b) {
                    Ok(())
                } else {
                    Err(format!(
                        "chain {chain}, exact {exact}, expected {}",
                        a.max(b)
                    ))
                }
            })
        }
        SweepKind::BipartiteReduction => {
            let exhaustive = (2..=4).flat_map(|n| {
                [2, 3]
                    .into_iter()
                    .flat_map(move |m| all_hypergraphs(n, m, EdgeListing::Ordered))
            });
            let random = (0..random as u64)
                .map(move |i| random_sized_hypergraph(2, 5, 4, seed.wrapping_add(i)));
            run_checks(kind, exhaustive.chain(random), check_bipartite_reduction)
        }
        SweepKind::CobipartiteReduction => {
            let exhaustive = (1..=5).flat_map(all_graphs);
            let random =
                (0..random as u64).map(move |i| random_sized_graph(8, seed.wrapping_add(i)));
            run_checks(kind, exhaustive.chain(random), check_cobipartite_reduction)
        }
        SweepKind::Duality => {
            let exhaustive = (1..=6).flat_map(|n| {
                (1..=5).flat_map(move |m| all_hypergraphs(n, m, EdgeListing::Multiset))
            });
            let random = (0..random as u64)
                .map(move |i| random_sized_hypergraph(1, 8, 6, seed.wrapping_add(i)));
            run_checks(kind, exhaustive.chain(random), check_duality)
        }
    }
}
