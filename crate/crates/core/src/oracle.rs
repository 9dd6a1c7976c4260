//! Ground truth for small graphs: exact rainbow connection numbers by
//! exhaustive search, the layered lower-bound family, and generators for
//! 2-connected graphs (exhaustive and seeded random).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::colouring::Colouring;
use crate::exec::Execution;
use crate::graph::{self, Graph};
use crate::painter;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("search budget exhausted; rc lies in [{lower}, {upper}]")]
    BudgetExceeded { lower: usize, upper: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph too large for exhaustive search ({0})")]
    TooLarge(String),
    #[error("invalid family parameters k={k}, ell={ell} (need k >= 2, ell >= 2)")]
    InvalidFamily { k: usize, ell: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcResult {
    pub rc: usize,
    /// A rainbow-connecting colouring with `rc` colours.
    pub witness: Colouring,
    /// The diameter, where the search started.
    pub lower_bound_used: usize,
    pub colourings_tested: u64,
}

/// Restricted-growth strings of length `m` using exactly `k` symbols, in
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    a: Vec<u8>,
    k: u8,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(m: usize, k: usize) -> Self {
        let done = k == 0 && m > 0 || k > m || k > u8::MAX as usize;
        let mut it = RestrictedGrowth { a: vec![0; m], k: k as u8, started: false, done };
        if !done {
            it.fill_from(0, None);
        }
        it
    }

    /// Smallest valid suffix from `start`, given the prefix maximum.
    fn fill_from(&mut self, start: usize, mut max: Option<u8>) {
        let m = self.a.len();
        for i in start..m {
            let have = max.map_or(0, |x| x + 1);
            if max.is_none() {
                self.a[i] = 0;
                max = Some(0);
            } else if (self.k - have) as usize == m - i {
                self.a[i] = have;
                max = Some(have);
            } else {
                self.a[i] = 0;
            }
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.a.clone());
        }
        let m = self.a.len();
        let prefix_max: Vec<u8> = self
            .a
            .iter()
            .scan(0u8, |cur, &x| {
                *cur = (*cur).max(x);
                Some(*cur)
            })
            .collect();
        for i in (1..m).rev() {
            let before = prefix_max[i - 1];
            let bumped = self.a[i] + 1;
            if bumped > before + 1 || bumped >= self.k {
                continue;
            }
            let new_max = before.max(bumped);
            if (self.k - 1 - new_max) as usize > m - 1 - i {
                continue;
            }
            self.a[i] = bumped;
            self.fill_from(i + 1, Some(new_max));
            return Some(self.a.clone());
        }
        self.done = true;
        None
    }
}

/// Whether the colouring `colours` (indexed by edge) rainbow-connects `g`.
/// Bitmask search, independent of the checker module; needs `n <= 64` and
/// fewer than 64 colours.
fn rainbow_connected_masks(g: &Graph, colours: &[u8]) -> bool {
    let n = g.n();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    fn dfs(g: &Graph, colours: &[u8], x: usize, used: u64, visited: u64, reached: &mut u64, full: u64) -> bool {
        *reached |= 1 << x;
        if *reached == full {
            return true;
        }
        for &(y, e) in g.neighbours(x) {
            let bit = 1u64 << colours[e];
            if visited & (1 << y) == 0 && used & bit == 0 && dfs(g, colours, y, used | bit, visited | (1 << y), reached, full) {
                return true;
            }
        }
        false
    }
    (0..n).all(|s| {
        let mut reached = 0u64;
        dfs(g, colours, s, 0, 1 << s, &mut reached, full)
    })
}

const BATCH: usize = 2048;

/// Least number of colours in a rainbow-connecting colouring, by testing
/// canonical colourings with `k` colours for `k = diam, diam + 1, ...`.
///
/// `budget` caps the number of colourings tested.
pub fn rc_exact(g: &Graph, budget: u64, exec: Execution) -> Result<RcResult, OracleError> {
    let n = g.n();
    if n > 64 || g.m() > 255 {
        return Err(OracleError::TooLarge(format!("n={n}, m={}", g.m())));
    }
    let diam = graph::diameter(g).ok_or(OracleError::Disconnected)?;
    if n <= 1 {
        return Ok(RcResult { rc: 0, witness: Colouring::empty(0), lower_bound_used: 0, colourings_tested: 0 });
    }
    let mut tested = 0u64;
    for k in diam.max(1)..=g.m() {
        let mut strings = RestrictedGrowth::new(g.m(), k);
        loop {
            let batch: Vec<Vec<u8>> = strings.by_ref().take(BATCH).collect();
            if batch.is_empty() {
                break;
            }
            let remaining = budget.saturating_sub(tested);
            let batch = &batch[..batch.len().min(remaining as usize)];
            if let Some(pos) = exec.find_map_first(&enumerate(batch), |(i, s)| rainbow_connected_masks(g, s).then_some(*i)) {
                tested += pos as u64 + 1;
                let witness = Colouring::from_total(batch[pos].iter().map(|&c| c as u32));
                return Ok(RcResult { rc: k, witness, lower_bound_used: diam, colourings_tested: tested });
            }
            tested += batch.len() as u64;
            if tested >= budget {
                return Err(OracleError::BudgetExceeded { lower: k, upper: upper_estimate(g) });
            }
        }
    }
    unreachable!("a colouring with all edges distinct rainbow-connects a connected graph")
}

fn enumerate<T: Clone>(items: &[T]) -> Vec<(usize, T)> {
    items.iter().cloned().enumerate().collect()
}

fn upper_estimate(g: &Graph) -> usize {
    painter::rainbow_colouring(g)
        .or_else(|_| painter::spanning_tree_colouring(g))
        .map(|c| c.palette_size())
        .unwrap_or(g.m())
}

/// `rc(G) >= diam(G)`.
pub fn rc_lower_bound(g: &Graph) -> Option<usize> {
    graph::diameter(g)
}

/// End vertices `u = 0` and `v = n - 1` joined through `ell - 1` layers of
/// `k` independent vertices, consecutive layers completely joined.
/// `n = k(ell - 1) + 2`, diameter `ell`, and `k`-connected.
pub fn lower_bound_family(k: usize, ell: usize) -> Result<Graph, OracleError> {
    if k < 2 || ell < 2 {
        return Err(OracleError::InvalidFamily { k, ell });
    }
    let layers = ell - 1;
    let n = k * layers + 2;
    let v = n - 1;
    let layer = |i: usize| (0..k).map(move |j| 1 + i * k + j);
    let mut edges = Vec::new();
    edges.extend(layer(0).map(|x| (0, x)));
    for i in 0..layers - 1 {
        for x in layer(i) {
            edges.extend(layer(i + 1).map(|y| (x, y)));
        }
    }
    edges.extend(layer(layers - 1).map(|x| (x, v)));
    Ok(Graph::new(n, edges).expect("family edges are simple"))
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn adjacency_of(mask: u64, pairs: &[(usize, usize)], n: usize) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        if mask >> b & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    adj
}

fn connected_without(adj: &[u32], n: usize, removed: Option<usize>) -> bool {
    let alive: u32 = ((1u64 << n) - 1) as u32 & !removed.map_or(0, |r| 1 << r);
    if alive == 0 {
        return true;
    }
    let start = alive.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let x = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[x] & alive & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == alive
}

fn two_connected_mask(mask: u64, pairs: &[(usize, usize)], n: usize) -> bool {
    if (mask.count_ones() as usize) < n {
        return false;
    }
    let adj = adjacency_of(mask, pairs, n);
    if adj.iter().any(|a| a.count_ones() < 2) {
        return false;
    }
    connected_without(&adj, n, None) && (0..n).all(|v| connected_without(&adj, n, Some(v)))
}

fn graph_of_mask(mask: u64, pairs: &[(usize, usize)], n: usize) -> Graph {
    let edges = pairs.iter().enumerate().filter(|&(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p);
    Graph::new(n, edges).expect("mask edges are simple")
}

/// Every 2-connected graph on vertex set `0..n` (labelled), for `3 <= n <= 7`,
/// in increasing order of edge bitmask.
pub fn enumerate_two_connected(n: usize) -> Vec<Graph> {
    enumerate_two_connected_with(n, Execution::default())
}

pub fn enumerate_two_connected_with(n: usize, exec: Execution) -> Vec<Graph> {
    assert!(n <= 7, "labelled enumeration is limited to n <= 7");
    if n < 3 {
        return Vec::new();
    }
    let pairs = pair_index(n);
    let total = 1u64 << pairs.len();
    exec.filter_map_range(0..total, |mask| two_connected_mask(mask, &pairs, n).then(|| graph_of_mask(mask, &pairs, n)))
}

/// Smallest edge bitmask over relabellings that keep vertices sorted by
/// non-increasing degree. Equal for isomorphic graphs.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical_mask is for small graphs");
    let pairs = pair_index(n);
    let mut bit = vec![vec![0u64; n]; n];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        bit[i][j] = 1 << b;
        bit[j][i] = 1 << b;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // slot p may hold any vertex whose degree equals that of order[p]
    let slot_degree: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let mut best = u64::MAX;
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn assign(
        g: &Graph,
        p: usize,
        slot_degree: &[usize],
        bit: &[Vec<u64>],
        image: &mut [usize],
        used: &mut [bool],
        partial: u64,
        best: &mut u64,
    ) {
        let n = g.n();
        if p == n {
            *best = (*best).min(partial);
            return;
        }
        for v in 0..n {
            if used[v] || g.degree(v) != slot_degree[p] {
                continue;
            }
            // edges from v to already placed vertices land on fixed bits
            let mut add = 0u64;
            for &(w, _) in g.neighbours(v) {
                if used[w] {
                    add |= bit[p][image[w]];
                }
            }
            image[v] = p;
            used[v] = true;
            assign(g, p + 1, slot_degree, bit, image, used, partial | add, best);
            used[v] = false;
            image[v] = usize::MAX;
        }
    }
    assign(g, 0, &slot_degree, &bit, &mut image, &mut used, 0, &mut best);
    best
}

/// One representative per isomorphism class of 2-connected graphs on `n`
/// vertices (`3 <= n <= 7`), ordered by canonical mask.
pub fn enumerate_two_connected_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "enumeration is limited to n <= 7");
    if n < 3 {
        return Vec::new();
    }
    let pairs = pair_index(n);
    let total = 1u64 << pairs.len();
    // every class has a labelling with degrees non-increasing in vertex id
    let candidates = Execution::default().filter_map_range(0..total, |mask| {
        let adj = adjacency_of(mask, &pairs, n);
        let sorted = adj.windows(2).all(|w| w[0].count_ones() >= w[1].count_ones());
        (sorted && two_connected_mask(mask, &pairs, n)).then(|| graph_of_mask(mask, &pairs, n))
    });
    let mut classes = std::collections::BTreeMap::new();
    for g in candidates {
        classes.entry(canonical_mask(&g)).or_insert(g);
    }
    let n_pairs = pairs.len();
    classes
        .into_keys()
        .map(|mask| {
            debug_assert!(mask < 1 << n_pairs);
            graph_of_mask(mask, &pairs, n)
        })
        .collect()
}

/// A random ear decomposition on `n` vertices: a cycle, then `extra_edges`
/// ears (paths between two existing vertices through new ones; an ear with
/// no new vertex is a chord). The cycle and ear lengths are random with all
/// `n` vertices used, so `m = n + extra_edges` unless chords run out.
/// With `extra_edges = 0` the result is an `n`-cycle. Labels are shuffled;
/// deterministic in `seed`.
pub fn random_two_connected(n: usize, extra_edges: usize, seed: u64) -> Graph {
    assert!(n >= 3, "a 2-connected graph needs at least 3 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cycle_len = if extra_edges == 0 { n } else { rng.random_range(3..=n) };
    let mut internal = vec![0usize; extra_edges];
    for _ in cycle_len..n {
        internal[rng.random_range(0..extra_edges)] += 1;
    }
    // ears with new vertices first, so chords see the final vertex set
    internal.sort_unstable_by(|a, b| b.cmp(a));
    let mut present = vec![vec![false; n]; n];
    let mut edges = Vec::with_capacity(n + extra_edges);
    fn add(a: usize, b: usize, present: &mut [Vec<bool>], edges: &mut Vec<(usize, usize)>) {
        present[a][b] = true;
        present[b][a] = true;
        edges.push((a, b));
    }
    for i in 0..cycle_len {
        add(i, (i + 1) % cycle_len, &mut present, &mut edges);
    }
    let mut placed = cycle_len;
    for &k in &internal {
        if k == 0 {
            let room = placed * (placed - 1) / 2 - edges.len();
            if room == 0 {
                continue;
            }
            loop {
                let (a, b) = (rng.random_range(0..placed), rng.random_range(0..placed));
                if a != b && !present[a][b] {
                    add(a, b, &mut present, &mut edges);
                    break;
                }
            }
            continue;
        }
        let a = rng.random_range(0..placed);
        let b = loop {
            let b = rng.random_range(0..placed);
            if b != a {
                break b;
            }
        };
        let mut prev = a;
        for v in placed..placed + k {
            add(prev, v, &mut present, &mut edges);
            prev = v;
        }
        add(prev, b, &mut present, &mut edges);
        placed += k;
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);
    let g = Graph::new(n, edges.into_iter().map(|(a, b)| (label[a], label[b]))).expect("ears are simple");
    debug_assert!(graph::vertex_connectivity_at_least(&g, 2));
    g
}
