use std::collections::VecDeque;

use super::flow::vertex_disjoint_paths;
use super::{mask_of, Cycle, Graph, GraphError, VPath};

/// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
pub fn distances_from(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for &(y, _) in g.neighbours(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || distances_from(g, 0).iter().all(|&d| d != usize::MAX)
}

/// Largest shortest-path distance, or `None` for a disconnected or empty graph.
pub fn diameter(g: &Graph) -> Option<usize> {
    if g.n() == 0 {
        return None;
    }
    let mut best = 0;
    for s in 0..g.n() {
        for d in distances_from(g, s) {
            if d == usize::MAX {
                return None;
            }
            best = best.max(d);
        }
    }
    Some(best)
}

/// True iff `g` has more than `k` vertices and no vertex cut of size below `k`.
///
/// Checks every nonadjacent pair with a unit-vertex-capacity flow capped at `k`.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if g.edge_between(u, v).is_some() {
                continue;
            }
            if vertex_disjoint_paths(g, &[u], &[v], k, true, true, None).len() < k {
                return false;
            }
        }
    }
    true
}

/// `Some(n)` iff the graph is a single cycle through all its vertices.
pub fn as_cycle(g: &Graph) -> Option<usize> {
    let n = g.n();
    (n >= 3 && (0..n).all(|v| g.degree(v) == 2) && is_connected(g)).then_some(n)
}

/// The cycle of `g` in its natural traversal order, when `g` is a cycle.
pub fn cycle_order(g: &Graph) -> Option<Cycle> {
    as_cycle(g)?;
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    loop {
        let next = g.neighbours(cur).iter().map(|&(w, _)| w).find(|&w| w != prev)?;
        if next == 0 {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    Cycle::from_vertices(g, &order).ok()
}

struct BfsTree {
    depth: Vec<usize>,
    parent: Vec<usize>,
    parent_edge: Vec<usize>,
}

fn bfs_tree(g: &Graph, root: usize) -> BfsTree {
    let n = g.n();
    let mut t = BfsTree {
        depth: vec![usize::MAX; n],
        parent: vec![usize::MAX; n],
        parent_edge: vec![usize::MAX; n],
    };
    t.depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &(y, e) in g.neighbours(x) {
            if t.depth[y] == usize::MAX {
                t.depth[y] = t.depth[x] + 1;
                t.parent[y] = x;
                t.parent_edge[y] = e;
                queue.push_back(y);
            }
        }
    }
    t
}

/// The fundamental cycle of non-tree edge `x-y` in a BFS tree.
fn tree_cycle(t: &BfsTree, x: usize, y: usize) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        if t.depth[a] >= t.depth[b] {
            a = t.parent[a];
            left.push(a);
        } else {
            b = t.parent[b];
            right.push(b);
        }
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Shortest fundamental cycles of each parity over BFS trees from every root.
fn shortest_fundamental_cycles(g: &Graph) -> (Option<Vec<usize>>, Option<Vec<usize>>) {
    let mut even: Option<Vec<usize>> = None;
    let mut odd: Option<Vec<usize>> = None;
    for root in 0..g.n() {
        let t = bfs_tree(g, root);
        for (e, &(x, y)) in g.edges().iter().enumerate() {
            if t.depth[x] == usize::MAX || t.parent_edge[x] == e || t.parent_edge[y] == e {
                continue;
            }
            let slot = if t.depth[x] == t.depth[y] { &mut odd } else { &mut even };
            let cyc = tree_cycle(&t, x, y);
            if slot.as_ref().is_none_or(|best| cyc.len() < best.len()) {
                *slot = Some(cyc);
            }
        }
        if even.as_ref().is_some_and(|c| c.len() == 4) {
            break;
        }
    }
    (even, odd)
}

/// An even cycle of a 2-connected graph that is not an odd cycle.
///
/// The shortest even fundamental cycle over all BFS trees is preferred. If
/// every fundamental cycle is odd, an odd cycle `Z` is combined with either a
/// chord or two disjoint paths from an outside vertex into an even cycle.
pub fn find_even_cycle(g: &Graph) -> Result<Cycle, GraphError> {
    let (even, odd) = shortest_fundamental_cycles(g);
    if let Some(c) = even {
        return Cycle::from_vertices(g, &c);
    }
    let z = odd.ok_or(GraphError::NoEvenCycle)?;
    even_cycle_from_odd(g, &Cycle::from_vertices(g, &z)?)
}

pub(crate) fn even_cycle_from_odd(g: &Graph, z: &Cycle) -> Result<Cycle, GraphError> {
    let on_z = mask_of(g.n(), z.vertices().iter().copied());
    let z_edges = mask_of(g.m(), z.edge_indices().iter().copied());
    // A chord splits Z into two cycles of opposite parity.
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if on_z[a] && on_z[b] && !z_edges[e] {
            let (i, j) = (z.position(a).unwrap(), z.position(b).unwrap());
            let (p, q) = z.arcs(i, j);
            let arc = if p.len() % 2 == 1 { p } else { q };
            return Cycle::from_vertices(g, arc.vertices());
        }
    }
    let v = (0..g.n()).find(|&v| !on_z[v]).ok_or(GraphError::NoEvenCycle)?;
    let (r1, r2) = two_disjoint_paths(g, v, z.vertices()).map_err(|_| GraphError::NoEvenCycle)?;
    let (i, j) = (z.position(r1.end()).unwrap(), z.position(r2.end()).unwrap());
    let (p, q) = z.arcs(i, j);
    let arc = if (r1.len() + r2.len() + p.len()) % 2 == 0 { p } else { q };
    let closed = r1.join(&arc).join(&r2.reversed());
    let verts = closed.vertices();
    Cycle::from_vertices(g, &verts[..verts.len() - 1])
}

/// Two paths from `w` to distinct vertices of `targets`, sharing only `w`
/// and with no interior vertex in `targets`.
pub fn two_disjoint_paths(
    g: &Graph,
    w: usize,
    targets: &[usize],
) -> Result<(VPath, VPath), GraphError> {
    if targets.contains(&w) || targets.len() < 2 {
        return Err(GraphError::NotFound);
    }
    let mut paths = vertex_disjoint_paths(g, &[w], targets, 2, true, false, None);
    if paths.len() < 2 {
        return Err(GraphError::NotFound);
    }
    let second = paths.pop().unwrap();
    let first = paths.pop().unwrap();
    Ok((first, second))
}
