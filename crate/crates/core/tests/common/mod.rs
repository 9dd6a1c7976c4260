//! Reference implementations used only by tests. Each is deliberately
//! naive and shares no code with the library beyond the `Graph` container.

#![allow(dead_code)]

use rainbow_core::Graph;

/// Every simple path from `s` to `t`, as edge index lists, with no pruning.
pub fn all_simple_paths(g: &Graph, s: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, x: usize, t: usize, seen: &mut Vec<bool>, edges: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if x == t {
            out.push(edges.clone());
            return;
        }
        for &(y, e) in g.neighbours(x) {
            if !seen[y] {
                seen[y] = true;
                edges.push(e);
                go(g, y, t, seen, edges, out);
                edges.pop();
                seen[y] = false;
            }
        }
    }
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut out = Vec::new();
    go(g, s, t, &mut seen, &mut Vec::new(), &mut out);
    out
}

fn distinct(colours: &[u32], path: &[usize]) -> bool {
    let mut cs: Vec<u32> = path.iter().map(|&e| colours[e]).collect();
    cs.sort_unstable();
    cs.windows(2).all(|w| w[0] != w[1])
}

/// Every pair of vertices has some simple path with distinct colours.
pub fn naive_rainbow_connected(g: &Graph, colours: &[u32]) -> bool {
    (0..g.n()).all(|s| (s + 1..g.n()).all(|t| all_simple_paths(g, s, t).iter().any(|p| distinct(colours, p))))
}

/// For each `x`, the `y` joined to it by rainbow paths that all use every
/// colour of the palette.
pub fn naive_blocked(g: &Graph, colours: &[u32]) -> Vec<Vec<usize>> {
    let mut palette: Vec<u32> = colours.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let k = palette.len();
    (0..g.n())
        .map(|x| {
            (0..g.n())
                .filter(|&y| {
                    if y == x {
                        return false;
                    }
                    let rainbow: Vec<_> =
                        all_simple_paths(g, x, y).into_iter().filter(|p| distinct(colours, p)).collect();
                    !rainbow.is_empty() && rainbow.iter().all(|p| p.len() == k)
                })
                .collect()
        })
        .collect()
}

/// Articulation points by Tarjan's low-link DFS.
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    fn dfs(g: &Graph, u: usize, parent: usize, time: &mut usize, disc: &mut [usize], low: &mut [usize], is_cut: &mut [bool]) {
        disc[u] = *time;
        low[u] = *time;
        *time += 1;
        let mut children = 0;
        for &(v, _) in g.neighbours(u) {
            if disc[v] == usize::MAX {
                children += 1;
                dfs(g, v, u, time, disc, low, is_cut);
                low[u] = low[u].min(low[v]);
                if parent != usize::MAX && low[v] >= disc[u] {
                    is_cut[u] = true;
                }
            } else if v != parent {
                low[u] = low[u].min(disc[v]);
            }
        }
        if parent == usize::MAX && children > 1 {
            is_cut[u] = true;
        }
    }
    for s in 0..n {
        if disc[s] == usize::MAX {
            dfs(g, s, usize::MAX, &mut time, &mut disc, &mut low, &mut is_cut);
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

fn components(g: &Graph, removed: &[bool]) -> usize {
    let n = g.n();
    let mut seen = removed.to_vec();
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            for &(y, _) in g.neighbours(x) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

/// Connected, at least 3 vertices, no articulation point.
pub fn is_biconnected(g: &Graph) -> bool {
    g.n() >= 3 && components(g, &vec![false; g.n()]) == 1 && articulation_points(g).is_empty()
}

/// `n > k` and removing any set of fewer than `k` vertices leaves the
/// graph connected, by trying every such set.
pub fn brute_connectivity_at_least(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    (0u64..1 << n).filter(|s| (s.count_ones() as usize) < k).all(|s| {
        let removed: Vec<bool> = (0..n).map(|v| s >> v & 1 == 1).collect();
        components(g, &removed) <= 1
    })
}

/// Eccentricity maximum by Floyd–Warshall.
pub fn floyd_diameter(g: &Graph) -> Option<usize> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for &(a, b) in g.edges() {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let max = d.iter().flatten().copied().max()?;
    (max < inf).then_some(max)
}

/// All labelled graphs on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|&(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p);
        Graph::new(n, edges).unwrap()
    })
}

/// Deterministic random-instance family for the colour-accounting checks.
pub fn random_instances(count: u64) -> Vec<rainbow_core::Graph> {
    (0..count)
        .map(|i| {
            let n = 8 + (i % 7) as usize;
            let ears = 2 + (i % 5) as usize;
            rainbow_core::oracle::random_two_connected(n, ears, i)
        })
        .collect()
}
