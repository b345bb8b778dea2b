//! Exhaustive brute-force oracles checked against the solvers, and property
//! tests for the structural invariants.

use grundy_core::chain::{grundy_chain, recognize_chain};
use grundy_core::exact::{
    grundy_cover_exact, grundy_domination_exact, grundy_domination_plain, grundy_transversal_exact,
    independence_number_exact,
};
use grundy_core::generate::{
    all_graphs, all_hypergraphs, chain_from_profile, random_chain_profile, random_graph,
    random_hypergraph, ChainProfile, EdgeListing,
};
use grundy_core::reduction::example_hypergraph;
use grundy_core::sequence::{check_closed_neighborhood_sequence, check_subset_ordering};
use grundy_core::{Graph, Hypergraph};
use proptest::prelude::*;

/// Longest dominating sequence, by walking every legal sequence.
fn brute_gamma(g: &Graph) -> usize {
    fn walk(g: &Graph, dominated: &mut Vec<bool>, used: &mut Vec<bool>, len: usize) -> usize {
        let mut best = if dominated.iter().all(|&d| d) { len } else { 0 };
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            let closed: Vec<usize> = std::iter::once(v)
                .chain(g.neighbors(v).iter().copied())
                .collect();
            let fresh: Vec<usize> = closed.into_iter().filter(|&w| !dominated[w]).collect();
            if fresh.is_empty() {
                continue;
            }
            used[v] = true;
            fresh.iter().for_each(|&w| dominated[w] = true);
            best = best.max(walk(g, dominated, used, len + 1));
            fresh.iter().for_each(|&w| dominated[w] = false);
            used[v] = false;
        }
        best
    }
    walk(g, &mut vec![false; g.n()], &mut vec![false; g.n()], 0)
}

/// Longest covering legal edge sequence, by walking every legal edge sequence.
fn brute_rho(h: &Hypergraph) -> usize {
    fn walk(h: &Hypergraph, covered: &mut Vec<bool>, used: &mut Vec<bool>, len: usize) -> usize {
        let mut best = if covered.iter().all(|&c| c) { len } else { 0 };
        for e in 0..h.m() {
            if used[e] {
                continue;
            }
            let fresh: Vec<usize> = h.edge(e).iter().copied().filter(|&v| !covered[v]).collect();
            if fresh.is_empty() {
                continue;
            }
            used[e] = true;
            fresh.iter().for_each(|&v| covered[v] = true);
            best = best.max(walk(h, covered, used, len + 1));
            fresh.iter().for_each(|&v| covered[v] = false);
            used[e] = false;
        }
        best
    }
    walk(h, &mut vec![false; h.n()], &mut vec![false; h.m()], 0)
}

/// Longest legal transversal sequence, by walking every vertex sequence and
/// searching for a private witnessing edge at each step.
fn brute_tau(h: &Hypergraph) -> usize {
    fn walk(h: &Hypergraph, chosen: &mut Vec<usize>) -> usize {
        let mut best = chosen.len();
        for v in 0..h.n() {
            let witnessed = h
                .edges()
                .iter()
                .any(|e| e.contains(&v) && chosen.iter().all(|c| !e.contains(c)));
            if witnessed {
                chosen.push(v);
                best = best.max(walk(h, chosen));
                chosen.pop();
            }
        }
        best
    }
    walk(h, &mut Vec::new())
}

fn brute_alpha(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|&s| g.edges().all(|(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[test]
fn p4_gamma_by_enumeration() {
    assert_eq!(brute_gamma(&Graph::path(4)), 3);
    assert_eq!(
        grundy_domination_exact(&Graph::path(4), None)
            .unwrap()
            .best_length,
        3
    );
}

#[test]
fn exact_matches_enumeration_on_all_small_graphs() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            let exact = grundy_domination_exact(&g, None).unwrap();
            assert_eq!(exact.best_length, brute_gamma(&g), "{g:?}");
            assert!(check_subset_ordering(&g, &exact.best_sequence));
        }
    }
}

#[test]
fn memoized_matches_plain_search_up_to_ten_vertices() {
    for seed in 0..150 {
        let n = 1 + (seed as usize % 10);
        let g = random_graph(n, 0.15 + 0.1 * (seed % 7) as f64, seed);
        let memo = grundy_domination_exact(&g, None).unwrap().best_length;
        let plain = grundy_domination_plain(&g).unwrap().best_length;
        assert_eq!(memo, plain, "seed {seed}: {g:?}");
    }
}

#[test]
fn example_hypergraph_cover_and_transversal_by_enumeration() {
    let h = example_hypergraph();
    let rho = brute_rho(&h);
    assert_eq!(grundy_cover_exact(&h).unwrap().best_length, rho);
    assert_eq!(
        grundy_transversal_exact(&h).unwrap().best_length,
        brute_tau(&h)
    );
    assert_eq!(brute_tau(&h), rho);
}

#[test]
fn hypergraph_searches_match_enumeration() {
    for n in 1..=3 {
        for m in 1..=3 {
            for h in all_hypergraphs(n, m, EdgeListing::Ordered) {
                assert_eq!(
                    grundy_cover_exact(&h).unwrap().best_length,
                    brute_rho(&h),
                    "{h:?}"
                );
                assert_eq!(
                    grundy_transversal_exact(&h).unwrap().best_length,
                    brute_tau(&h),
                    "{h:?}"
                );
            }
        }
    }
    for seed in 0..100 {
        let h = random_hypergraph(2 + seed as usize % 5, 2 + seed as usize % 4, seed);
        assert_eq!(grundy_cover_exact(&h).unwrap().best_length, brute_rho(&h));
        assert_eq!(
            grundy_transversal_exact(&h).unwrap().best_length,
            brute_tau(&h)
        );
    }
}

#[test]
fn gamma_is_at_least_alpha() {
    for seed in 0..120 {
        let g = random_graph(2 + seed as usize % 15, 0.3, seed);
        let gamma = grundy_domination_exact(&g, None).unwrap().best_length;
        let alpha = brute_alpha(&g);
        assert!(gamma >= alpha, "seed {seed}");
        assert_eq!(independence_number_exact(&g).unwrap(), alpha);
    }
}

#[test]
fn an_isolated_vertex_adds_exactly_one() {
    for seed in 0..60 {
        let g = random_graph(1 + seed as usize % 10, 0.4, seed);
        let plus = Graph::new(g.n() + 1, g.edges()).unwrap();
        let a = grundy_domination_exact(&g, None).unwrap().best_length;
        let b = grundy_domination_exact(&plus, None).unwrap().best_length;
        assert_eq!(b, a + 1);
    }
}

#[test]
fn chain_profiles_round_trip() {
    for k in 1..=4 {
        for p in grundy_core::generate::all_chain_profiles(k, 3, 24)
            .into_iter()
            .filter(|p| p.k() == k)
        {
            let g = chain_from_profile(&p);
            let cs = recognize_chain(&g).unwrap();
            assert_eq!(
                (cs.x_sizes(), cs.y_sizes()),
                (p.x_sizes.clone(), p.y_sizes.clone())
            );
            cs.validate(&g).unwrap();
        }
    }
}

#[test]
fn cycle_six_has_no_nested_ordering() {
    // every ordering of one side has an incomparable consecutive pair
    let g = Graph::cycle(6);
    let side: Vec<usize> = vec![0, 2, 4];
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
    let mut any_nested = false;
    for perm in [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ] {
        let order: Vec<usize> = perm.iter().map(|&i| side[i]).collect();
        any_nested |= order
            .windows(2)
            .all(|w| subset(g.neighbors(w[0]), g.neighbors(w[1])));
    }
    assert!(!any_nested);
    assert!(recognize_chain(&g).is_err());
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1usize..=7, 1usize..=6).prop_flat_map(|(n, m)| {
        proptest::collection::vec(proptest::collection::vec(0..n, 1..=n), m)
            .prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
    })
}

fn legal_sequences(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &frontier {
            for v in 0..g.n() {
                if prefix.contains(&v) {
                    continue;
                }
                let mut s = prefix.clone();
                s.push(v);
                if check_closed_neighborhood_sequence(g, &s).is_ok() {
                    next.push(s);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(g.edge_count() + c.edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn bipartition_colors_every_edge_across(g in arb_graph(12)) {
        if let Some(b) = g.bipartition() {
            let mut side = vec![None; g.n()];
            b.side_x.iter().for_each(|&v| side[v] = Some(0));
            b.side_y.iter().for_each(|&v| side[v] = Some(1));
            prop_assert!(side.iter().all(Option::is_some));
            for (u, v) in g.edges() {
                prop_assert_ne!(side[u], side[v]);
            }
        }
    }

    #[test]
    fn text_format_round_trips(g in arb_graph(12), h in arb_hypergraph()) {
        prop_assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        prop_assert_eq!(Hypergraph::parse(&h.to_text()).unwrap(), h);
    }

    #[test]
    fn footprints_partition_what_is_dominated(g in arb_graph(10)) {
        for order in legal_sequences(&g, 4) {
            let seq = check_closed_neighborhood_sequence(&g, &order).unwrap();
            prop_assert!(check_subset_ordering(&g, &seq));
            let mut seen = vec![false; g.n()];
            for fp in seq.footprints() {
                prop_assert!(!fp.is_empty());
                for &v in fp {
                    prop_assert!(!seen[v]);
                    seen[v] = true;
                }
            }
            prop_assert!(seq.dominated_count() <= g.n());
            let dominating = grundy_core::sequence::is_dominating_sequence(&g, &order).unwrap();
            prop_assert_eq!(dominating, seq.dominated_count() == g.n());
        }
    }

    #[test]
    fn solver_outputs_reverify(g in arb_graph(14)) {
        let r = grundy_domination_exact(&g, None).unwrap();
        let seq = check_closed_neighborhood_sequence(&g, r.best_sequence.order()).unwrap();
        prop_assert_eq!(seq.dominated_count(), g.n());
        prop_assert!(check_subset_ordering(&g, &seq));
    }

    #[test]
    fn moving_the_last_vertex_first_is_rechecked_from_scratch(g in arb_graph(10)) {
        let r = grundy_domination_exact(&g, None).unwrap();
        let mut order = r.best_sequence.into_order();
        if let Some(last) = order.pop() {
            order.insert(0, last);
            // still distinct, legality decided afresh
            if let Ok(seq) = check_closed_neighborhood_sequence(&g, &order) {
                prop_assert!(check_subset_ordering(&g, &seq));
            }
        }
    }

    #[test]
    fn legal_edge_sequences_are_prefix_closed_and_short(h in arb_hypergraph(), perm_seed in any::<u64>()) {
        // a greedy legal sequence in a seeded edge order
        let mut order: Vec<usize> = (0..h.m()).collect();
        let mut rng = grundy_core::generate::XorShift64Star::new(perm_seed);
        for i in (1..order.len()).rev() {
            order.swap(i, rng.below(i + 1));
        }
        let mut seq = Vec::new();
        for e in order {
            seq.push(e);
            if !h.is_legal_edge_sequence(&seq).unwrap() {
                seq.pop();
            }
        }
        prop_assert!(seq.len() <= h.n());
        for cut in 0..=seq.len() {
            prop_assert!(h.is_legal_edge_sequence(&seq[..cut]).unwrap());
        }
        let tau = grundy_transversal_exact(&h).unwrap();
        prop_assert!(tau.best_length <= h.m());
    }

    #[test]
    fn chain_graphs_from_profiles(seed in any::<u64>()) {
        let p: ChainProfile = random_chain_profile(40, 8, seed);
        let g = chain_from_profile(&p);
        let cs = recognize_chain(&g).unwrap();
        cs.validate(&g).unwrap();
        prop_assert_eq!(cs.x_sizes(), p.x_sizes.clone());
        let seq = grundy_chain(&g, &cs).unwrap();
        prop_assert!(check_subset_ordering(&g, &seq));
    }
}
