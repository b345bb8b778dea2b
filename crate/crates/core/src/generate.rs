//! Seeded instance generators.
//!
//! Every generator is a pure function of its arguments. Randomness comes
//! from [`XorShift64Star`], whose update rule is fixed below so instance
//! streams can be reproduced bit for bit elsewhere.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// xorshift64* generator.
///
/// * seeding: the state is `splitmix64(seed)`, replaced by
///   `0x9E3779B97F4A7C15` if that is zero. `splitmix64(z)` is
///   `z += 0x9E3779B97F4A7C15; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
///   z = (z ^ z>>27) * 0x94D049BB133111EB; z ^ z>>31` (wrapping arithmetic).
/// * step: `x ^= x>>12; x ^= x<<25; x ^= x>>27`, output
///   `x * 0x2545F4914F6CDD1D` (wrapping).
/// * `unit()`: `(output >> 11) * 2^-53`, in `[0, 1)`.
/// * `below(b)`: `(output as u128 * b) >> 64`.
#[derive(Clone, Debug)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        Self {
            state: if z == 0 { 0x9E37_79B9_7F4A_7C15 } else { z },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: usize) -> usize {
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }
}

/// Part sizes `|X_1|..|X_k|` and `|Y_1|..|Y_k|` of a chain graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainProfile {
    pub x_sizes: Vec<usize>,
    pub y_sizes: Vec<usize>,
}

impl ChainProfile {
    pub fn new(x_sizes: Vec<usize>, y_sizes: Vec<usize>) -> Result<Self> {
        if x_sizes.is_empty() || x_sizes.len() != y_sizes.len() {
            return Err(Error::Precondition(format!(
                "a chain profile needs k >= 1 parts on both sides, got {} and {}",
                x_sizes.len(),
                y_sizes.len()
            )));
        }
        if x_sizes.iter().chain(&y_sizes).any(|&s| s == 0) {
            return Err(Error::Precondition(
                "chain profile part sizes must be positive".into(),
            ));
        }
        Ok(Self { x_sizes, y_sizes })
    }

    pub fn k(&self) -> usize {
        self.x_sizes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.x_sizes.iter().chain(&self.y_sizes).sum()
    }

    pub fn edge_count(&self) -> usize {
        let mut prefix_y = 0;
        let mut total = 0;
        for (x, y) in self.x_sizes.iter().zip(&self.y_sizes) {
            prefix_y += y;
            total += x * prefix_y;
        }
        total
    }
}

impl FromStr for ChainProfile {
    type Err = Error;

    /// `"1,2,1x2,1,3"`: X sizes, then `x`, then Y sizes.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 1,
            message: format!("expected a profile like `1,2x2,1`, found `{s}`"),
        };
        let (xs, ys) = s.trim().split_once('x').ok_or_else(bad)?;
        let list = |part: &str| -> Result<Vec<usize>> {
            part.split(',')
                .map(|t| t.trim().parse().map_err(|_| bad()))
                .collect()
        };
        Self::new(list(xs)?, list(ys)?)
    }
}

impl fmt::Display for ChainProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}x{}", join(&self.x_sizes), join(&self.y_sizes))
    }
}

/// The chain graph of a profile. `X_1..X_k` come first, then `Y_1..Y_k`;
/// every vertex of `X_i` is adjacent to all of `Y_1 ∪ … ∪ Y_i`.
pub fn chain_from_profile(p: &ChainProfile) -> Graph {
    let n1: usize = p.x_sizes.iter().sum();
    let mut y_start = Vec::with_capacity(p.k() + 1);
    let mut acc = n1;
    for &s in &p.y_sizes {
        y_start.push(acc);
        acc += s;
    }
    y_start.push(acc);

    let mut edges = Vec::with_capacity(p.edge_count());
    let mut x = 0;
    for (i, &size) in p.x_sizes.iter().enumerate() {
        for _ in 0..size {
            edges.extend((n1..y_start[i + 1]).map(|y| (x, y)));
            x += 1;
        }
    }
    Graph::new(acc, edges).expect("profile edges are simple")
}

/// A profile with at most `max_vertices` vertices and at most `max_k`
/// parts per side. Needs `max_vertices >= 2`.
pub fn random_chain_profile(max_vertices: usize, max_k: usize, seed: u64) -> ChainProfile {
    assert!(max_vertices >= 2 && max_k >= 1);
    let mut rng = XorShift64Star::new(seed);
    let k = 1 + rng.below(max_k.min(max_vertices / 2));
    let total = 2 * k + rng.below(max_vertices - 2 * k + 1);
    // every part starts at 1; the surplus is spread uniformly over 2k parts
    let mut sizes = vec![1usize; 2 * k];
    for _ in 0..total - 2 * k {
        sizes[rng.below(2 * k)] += 1;
    }
    let y_sizes = sizes.split_off(k);
    ChainProfile::new(sizes, y_sizes).expect("sizes are positive")
}

/// Each pair `u < v`, in lexicographic order, becomes an edge when a fresh
/// `unit()` draw is below `edge_prob`.
pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Graph {
    let mut rng = XorShift64Star::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.unit() < edge_prob {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("sampled edges are simple")
}

/// `m` non-empty edges over `n` vertices with no isolated vertex.
///
/// Each edge takes each vertex with probability 1/2 (in vertex order); an
/// edge that comes out empty takes one uniform vertex instead. Vertices
/// left uncovered afterwards are appended to the edge that was
/// lexicographically first before patching (lowest index on ties).
pub fn random_hypergraph(n: usize, m: usize, seed: u64) -> Hypergraph {
    assert!(
        n >= 1 && m >= 1,
        "random_hypergraph needs a vertex and an edge"
    );
    let mut rng = XorShift64Star::new(seed);
    let mut edges: Vec<Vec<usize>> = (0..m)
        .map(|_| {
            let mut e: Vec<usize> = (0..n).filter(|_| rng.next_u64() >> 63 == 1).collect();
            if e.is_empty() {
                e.push(rng.below(n));
            }
            e
        })
        .collect();
    let mut covered = vec![false; n];
    edges.iter().flatten().for_each(|&v| covered[v] = true);
    let first = (0..m).min_by(|&a, &b| edges[a].cmp(&edges[b])).unwrap();
    for v in (0..n).filter(|&v| !covered[v]) {
        edges[first].push(v);
    }
    Hypergraph::new(n, edges).expect("sampled edges are valid")
}

/// Every chain profile with `k <= max_k`, part sizes `<= max_size` and at
/// most `max_vertices` vertices, ordered by `k` then lexicographically.
pub fn all_chain_profiles(max_k: usize, max_size: usize, max_vertices: usize) -> Vec<ChainProfile> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        for sizes in Tuples::new(max_size, 2 * k, false) {
            let sizes: Vec<usize> = sizes.into_iter().map(|s| s + 1).collect();
            if sizes.iter().sum::<usize>() <= max_vertices {
                let (xs, ys) = sizes.split_at(k);
                out.push(ChainProfile::new(xs.to_vec(), ys.to_vec()).unwrap());
            }
        }
    }
    out
}

/// Every labelled graph on `n` vertices, one per subset of the `n(n-1)/2`
/// possible edges. Needs `n <= 11`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 64, "too many graphs to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

/// Whether [`all_hypergraphs`] lists edge sequences or edge multisets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeListing {
    /// Every ordered list of `m` edges (repeats allowed).
    Ordered,
    /// One list per multiset of `m` edges, in nondecreasing subset order.
    Multiset,
}

/// Every hypergraph with `m` non-empty edges over `n` vertices that leaves no
/// vertex isolated. Edges are drawn from the `2^n - 1` non-empty subsets,
/// subset `s` being the vertices of the bit mask `s + 1`.
pub fn all_hypergraphs(
    n: usize,
    m: usize,
    listing: EdgeListing,
) -> impl Iterator<Item = Hypergraph> {
    assert!(n < 32);
    let subsets: Vec<Vec<usize>> = (1u32..1 << n)
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        .collect();
    let full = (1u32 << n) - 1;
    Tuples::new(subsets.len(), m, listing == EdgeListing::Multiset)
        .filter(move |t| t.iter().fold(0, |acc, &i| acc | (i as u32 + 1)) == full)
        .map(move |t| Hypergraph::new(n, t.iter().map(|&i| subsets[i].clone()).collect()).unwrap())
}

/// Odometer over `{0..base}^len`, last position fastest, optionally
/// restricted to nondecreasing tuples.
struct Tuples {
    base: usize,
    nondecreasing: bool,
    current: Option<Vec<usize>>,
}

impl Tuples {
    fn new(base: usize, len: usize, nondecreasing: bool) -> Self {
        Self {
            base,
            nondecreasing,
            current: (base > 0 || len == 0).then(|| vec![0; len]),
        }
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        match cur.iter().rposition(|&d| d + 1 < self.base) {
            None => self.current = None,
            Some(pos) => {
                cur[pos] += 1;
                let reset = if self.nondecreasing { cur[pos] } else { 0 };
                cur[pos + 1..].iter_mut().for_each(|d| *d = reset);
            }
        }
        Some(out)
    }
}
