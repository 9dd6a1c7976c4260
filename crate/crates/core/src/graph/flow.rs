//! Vertex-disjoint paths by unit-capacity max-flow on the split graph.

use std::collections::VecDeque;

use super::{Graph, VPath};

struct Arc {
    to: usize,
    cap: usize,
    orig: usize,
}

struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn add(&mut self, from: usize, to: usize, cap: usize) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap, orig: cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0, orig: 0 });
    }

    /// One BFS augmentation of a single unit. Arcs are scanned in insertion
    /// order, which follows ascending vertex ids.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut queue = VecDeque::from([s]);
        let mut reached = vec![false; self.out.len()];
        reached[s] = true;
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &a in &self.out[x] {
                let y = self.arcs[a].to;
                if self.arcs[a].cap > 0 && !reached[y] {
                    reached[y] = true;
                    via[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !reached[t] {
            return false;
        }
        let mut x = t;
        while x != s {
            let a = via[x];
            self.arcs[a].cap -= 1;
            self.arcs[a ^ 1].cap += 1;
            x = self.arcs[a ^ 1].to;
        }
        true
    }

    fn flow_on(&self, a: usize) -> usize {
        self.arcs[a].orig.saturating_sub(self.arcs[a].cap)
    }
}

/// Up to `limit` paths from `sources` to `targets` whose interiors avoid
/// `sources`, `targets` and every vertex flagged in `avoid`.
///
/// Paths are pairwise vertex-disjoint except that, when `share_sources` /
/// `share_targets` is set, a source / target vertex may be the endpoint of
/// several paths. Sources and targets must be disjoint.
pub(crate) fn vertex_disjoint_paths(
    g: &Graph,
    sources: &[usize],
    targets: &[usize],
    limit: usize,
    share_sources: bool,
    share_targets: bool,
    avoid: Option<&[bool]>,
) -> Vec<VPath> {
    let n = g.n();
    let is_source = super::mask_of(n, sources.iter().copied());
    let is_target = super::mask_of(n, targets.iter().copied());
    debug_assert!((0..n).all(|v| !(is_source[v] && is_target[v])));
    let avoided = |v: usize| avoid.is_some_and(|a| a[v]);
    let (src, sink) = (2 * n, 2 * n + 1);
    let mut net = Network::new(2 * n + 2);
    for &s in sources {
        net.add(src, 2 * s, if share_sources { limit } else { 1 });
    }
    for v in 0..n {
        if avoided(v) {
            continue;
        }
        let shared = (share_sources && is_source[v]) || (share_targets && is_target[v]);
        net.add(2 * v, 2 * v + 1, if shared { limit } else { 1 });
        if is_target[v] {
            continue;
        }
        for &(w, _) in g.neighbours(v) {
            if !avoided(w) && !is_source[w] {
                net.add(2 * v + 1, 2 * w, 1);
            }
        }
    }
    for &t in targets {
        net.add(2 * t + 1, sink, if share_targets { limit } else { 1 });
    }

    let mut value = 0;
    while value < limit && net.augment(src, sink) {
        value += 1;
    }

    let mut paths = Vec::with_capacity(value);
    let mut used = vec![0usize; net.arcs.len()];
    for _ in 0..value {
        let mut nodes = Vec::new();
        let mut x = src;
        while x != sink {
            let a = *net.out[x]
                .iter()
                .find(|&&a| a % 2 == 0 && net.flow_on(a) > used[a])
                .expect("flow is conserved");
            used[a] += 1;
            x = net.arcs[a].to;
            if x < 2 * n && x % 2 == 0 {
                nodes.push(x / 2);
            }
        }
        let edges = nodes
            .windows(2)
            .map(|w| g.edge_between(w[0], w[1]).expect("flow follows edges"))
            .collect();
        paths.push(VPath::from_parts(nodes, edges));
    }
    paths
}
