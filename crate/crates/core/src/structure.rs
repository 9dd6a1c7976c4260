//! Growing a core subgraph out of an even cycle by odd ears and even ear
//! pairs, and decomposing what is left into weak bridges.
//!
//! Throughout, `H` is the current core. An *H-path* meets `H` exactly in its
//! two endvertices; a *weak H-bridge* is a component of `G - E(H)` that has
//! at least one edge (vertices of `H` stay in `G - E(H)`, so bridges sharing
//! an attachment vertex are one bridge).

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::graph::{mask_of, vertex_disjoint_paths, Cycle, Graph, GraphError, VPath};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Where the far endpoint `v'` of `Q'` sits relative to `Q`, once `Q` runs
/// `u -> v` and `Q'` runs `u' -> v'` with `u'` in the first half of `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoExtensionType {
    /// `v'` on `u'Qv`, possibly `v' = v`.
    I,
    /// `v'` in `H` but not on `Q`.
    II,
    /// `v'` on `uQu'`, possibly `v' = u`.
    III,
}

impl fmt::Display for TwoExtensionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwoExtensionType::I => "I",
            TwoExtensionType::II => "II",
            TwoExtensionType::III => "III",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionStep {
    /// An odd H-path.
    OddPath(VPath),
    /// An even H-path `q` followed by an even `(H ∪ q)`-path `qp` with an
    /// endvertex on `q`; both stored in the orientation used for colouring.
    EvenPair { q: VPath, qp: VPath, kind: TwoExtensionType },
}

impl ExtensionStep {
    pub fn paths(&self) -> Vec<&VPath> {
        match self {
            ExtensionStep::OddPath(p) => vec![p],
            ExtensionStep::EvenPair { q, qp, .. } => vec![q, qp],
        }
    }

    /// Vertices added to the core by this step.
    pub fn new_vertex_count(&self) -> usize {
        self.paths().iter().map(|p| p.len() - 1).sum()
    }
}

fn path_label(p: &VPath) -> String {
    p.vertices().iter().map(usize::to_string).collect::<Vec<_>>().join("-")
}

/// The core `H` together with the steps that built it from its seed cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphState {
    vertices: Vec<bool>,
    edge_set: Vec<bool>,
    seed: Cycle,
    history: Vec<ExtensionStep>,
}

impl SubgraphState {
    pub fn from_cycle(g: &Graph, seed: &Cycle) -> Self {
        SubgraphState {
            vertices: mask_of(g.n(), seed.vertices().iter().copied()),
            edge_set: mask_of(g.m(), seed.edge_indices().iter().copied()),
            seed: seed.clone(),
            history: Vec::new(),
        }
    }

    #[inline]
    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices[v]
    }

    #[inline]
    pub fn contains_edge(&self, e: usize) -> bool {
        self.edge_set[e]
    }

    pub fn vertex_mask(&self) -> &[bool] {
        &self.vertices
    }

    pub fn edge_mask(&self) -> &[bool] {
        &self.edge_set
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.iter().filter(|&&b| b).count()
    }

    pub fn vertex_list(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.vertices[v]).collect()
    }

    pub fn edge_list(&self) -> Vec<usize> {
        (0..self.edge_set.len()).filter(|&e| self.edge_set[e]).collect()
    }

    pub fn seed(&self) -> &Cycle {
        &self.seed
    }

    pub fn history(&self) -> &[ExtensionStep] {
        &self.history
    }

    /// Whether `p` meets the core exactly in its endvertices.
    pub fn is_h_path(&self, p: &VPath) -> bool {
        !p.is_empty()
            && p.start() != p.end()
            && self.vertices[p.start()]
            && self.vertices[p.end()]
            && p.internal().iter().all(|&v| !self.vertices[v])
            && p.edge_indices().iter().all(|&e| !self.edge_set[e])
    }

    fn absorb(&mut self, p: &VPath) {
        for &v in p.vertices() {
            self.vertices[v] = true;
        }
        for &e in p.edge_indices() {
            self.edge_set[e] = true;
        }
    }

    /// The core grown by an odd H-path.
    pub fn with_odd_path(&self, p: VPath) -> Result<Self, StructureError> {
        if !self.is_h_path(&p) {
            return Err(StructureError::InvalidExtension(format!("{} is not an H-path", path_label(&p))));
        }
        if p.is_even() {
            return Err(StructureError::ParityViolation(format!("{} is even", path_label(&p))));
        }
        let mut next = self.clone();
        next.absorb(&p);
        next.history.push(ExtensionStep::OddPath(p));
        Ok(next)
    }

    /// The core grown by an even 2-extension, oriented and typed first.
    pub fn with_even_pair(&self, q: VPath, qp: VPath) -> Result<Self, StructureError> {
        let (q, qp, kind) = classify_two_extension(self, &q, &qp)?;
        let mut next = self.clone();
        next.absorb(&q);
        next.absorb(&qp);
        next.history.push(ExtensionStep::EvenPair { q, qp, kind });
        Ok(next)
    }

    /// The cores `H_0, H_1, ..., H_t = self` along the history.
    pub fn prefixes(&self, g: &Graph) -> Vec<SubgraphState> {
        let mut cur = SubgraphState::from_cycle(g, &self.seed);
        let mut out = vec![cur.clone()];
        for step in &self.history {
            for p in step.paths() {
                cur.absorb(p);
            }
            cur.history.push(step.clone());
            out.push(cur.clone());
        }
        out
    }

    /// One line for the seed and one per extension step.
    pub fn trace(&self) -> String {
        let mut out = String::new();
        let seed: Vec<_> = self.seed.vertices().iter().map(usize::to_string).collect();
        let _ = writeln!(out, "seed cycle={}", seed.join("-"));
        for (i, step) in self.history.iter().enumerate() {
            let _ = match step {
                ExtensionStep::OddPath(p) => writeln!(out, "step {i} odd path={}", path_label(p)),
                ExtensionStep::EvenPair { q, qp, kind } => writeln!(
                    out,
                    "step {i} even type={kind} q={} qp={}",
                    path_label(q),
                    path_label(qp)
                ),
            };
        }
        out
    }
}

/// Side of every vertex in a proper 2-colouring of `G - E(H)` with all of
/// `H` pinned to side 0 (a 2-colouring of the contraction `G/H`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<u8>,
}

impl Bipartition {
    #[inline]
    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }
}

/// Evidence that `G/H` has an odd closed walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OddWitness {
    /// An edge outside `E(H)` with both ends in `H`.
    Chord(usize),
    /// The odd closed walk at `*_H` is already an odd H-path.
    HPath(VPath),
    /// An odd cycle meeting `H` in exactly `anchor`.
    AnchoredCycle { cycle: Cycle, anchor: usize },
    /// An odd cycle disjoint from `H`.
    DisjointCycle(Cycle),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Contraction {
    Bipartite(Bipartition),
    Odd(OddWitness),
}

/// BFS 2-colouring of `G/H` rooted at the contracted vertex.
pub fn contract_bipartition(g: &Graph, h: &SubgraphState) -> Contraction {
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if !h.contains_edge(e) && h.contains_vertex(a) && h.contains_vertex(b) {
            return Contraction::Odd(OddWitness::Chord(e));
        }
    }
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for v in h.vertex_list() {
        depth[v] = 0;
        queue.push_back(v);
    }
    while let Some(x) = queue.pop_front() {
        for &(y, e) in g.neighbours(x) {
            if !h.contains_edge(e) && depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let conflict = g.edges().iter().enumerate().find(|&(e, &(x, y))| {
        !h.contains_edge(e)
            && depth[x] != usize::MAX
            && depth[y] != usize::MAX
            && depth[x] % 2 == depth[y] % 2
    });
    let Some((_, &(x, y))) = conflict else {
        let side = depth.iter().map(|&d| if d == usize::MAX { 0 } else { (d % 2) as u8 }).collect();
        return Contraction::Bipartite(Bipartition { side });
    };

    // Climb both tree paths until they meet or both reach H.
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b && !(depth[a] == 0 && depth[b] == 0) {
        if depth[a] >= depth[b] {
            a = parent[a];
            left.push(a);
        } else {
            b = parent[b];
            right.push(b);
        }
    }
    let build = |vs: &[usize]| VPath::from_vertices(g, vs).expect("tree paths are paths");
    if a != b {
        // left runs x..ra, right runs y..rb with ra != rb in H
        let mut vs: Vec<usize> = left.iter().rev().copied().collect();
        vs.extend(right.iter().copied());
        return Contraction::Odd(OddWitness::HPath(build(&vs)));
    }
    right.pop();
    let mut cyc = left.clone();
    cyc.extend(right.into_iter().rev());
    let cycle = Cycle::from_vertices(g, &cyc).expect("fundamental cycle");
    if depth[a] == 0 {
        Contraction::Odd(OddWitness::AnchoredCycle { cycle, anchor: a })
    } else {
        Contraction::Odd(OddWitness::DisjointCycle(cycle))
    }
}

/// An odd H-path, if one exists.
pub fn find_odd_h_path(g: &Graph, h: &SubgraphState) -> Option<VPath> {
    let witness = match contract_bipartition(g, h) {
        Contraction::Bipartite(_) => return None,
        Contraction::Odd(w) => w,
    };
    let path = match witness {
        OddWitness::Chord(e) => {
            let (a, b) = g.edge(e);
            VPath::from_vertices(g, &[a, b]).expect("edge")
        }
        OddWitness::HPath(p) => p,
        OddWitness::AnchoredCycle { cycle, anchor } => anchored_cycle_to_h_path(g, h, &cycle, anchor)?,
        OddWitness::DisjointCycle(cycle) => disjoint_cycle_to_h_path(g, h, &cycle)?,
    };
    debug_assert!(h.is_h_path(&path) && !path.is_even());
    Some(path)
}

/// Join the odd cycle to `H - anchor` by a shortest path and close off with
/// the arc back to the anchor that makes the total odd.
fn anchored_cycle_to_h_path(
    g: &Graph,
    h: &SubgraphState,
    cycle: &Cycle,
    anchor: usize,
) -> Option<VPath> {
    let on_cycle = mask_of(g.n(), cycle.vertices().iter().copied());
    let mut prev = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for v in h.vertex_list() {
        if v != anchor {
            prev[v] = v;
            queue.push_back(v);
        }
    }
    let mut hit = None;
    'bfs: while let Some(x) = queue.pop_front() {
        for &(y, _) in g.neighbours(x) {
            if prev[y] != usize::MAX || y == anchor || h.contains_vertex(y) {
                continue;
            }
            prev[y] = x;
            if on_cycle[y] {
                hit = Some(y);
                break 'bfs;
            }
            queue.push_back(y);
        }
    }
    let c = hit?;
    let mut vs = vec![c];
    let mut x = c;
    while prev[x] != x {
        x = prev[x];
        vs.push(x);
    }
    vs.reverse();
    let lead = VPath::from_vertices(g, &vs).ok()?;
    let (p, q) = cycle.arcs(cycle.position(c)?, cycle.position(anchor)?);
    let arc = if (lead.len() + p.len()) % 2 == 1 { p } else { q };
    Some(lead.join(&arc))
}

/// Two disjoint `H`-to-cycle paths plus the arc between their cycle ends
/// with the parity that makes the whole H-path odd.
fn disjoint_cycle_to_h_path(g: &Graph, h: &SubgraphState, cycle: &Cycle) -> Option<VPath> {
    let paths = vertex_disjoint_paths(g, &h.vertex_list(), cycle.vertices(), 2, false, false, None);
    let [r1, r2] = <[VPath; 2]>::try_from(paths).ok()?;
    let (p, q) = cycle.arcs(cycle.position(r1.end())?, cycle.position(r2.end())?);
    let odd = |arc: &VPath| (r1.len() + arc.len() + r2.len()) % 2 == 1;
    let arc = match (odd(&p), odd(&q)) {
        (true, true) => {
            if q.len() < p.len() {
                q
            } else {
                p
            }
        }
        (true, false) => p,
        _ => q,
    };
    Some(r1.join(&arc).join(&r2.reversed()))
}

/// All H-paths of exactly `len` edges, starting at the smaller endpoint, in
/// lexicographic vertex order.
fn h_paths_of_length(g: &Graph, h: &SubgraphState, len: usize, out: &mut Vec<Vec<usize>>) {
    fn extend(
        g: &Graph,
        h: &SubgraphState,
        len: usize,
        stack: &mut Vec<usize>,
        on_stack: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let x = *stack.last().unwrap();
        let steps = stack.len() - 1;
        for &(y, e) in g.neighbours(x) {
            if h.contains_edge(e) || on_stack[y] {
                continue;
            }
            if h.contains_vertex(y) {
                if steps + 1 == len && y > stack[0] {
                    let mut p = stack.clone();
                    p.push(y);
                    out.push(p);
                }
            } else if steps + 1 < len {
                stack.push(y);
                on_stack[y] = true;
                extend(g, h, len, stack, on_stack, out);
                on_stack[y] = false;
                stack.pop();
            }
        }
    }
    let mut on_stack = vec![false; g.n()];
    for u in h.vertex_list() {
        let mut stack = vec![u];
        on_stack[u] = true;
        extend(g, h, len, &mut stack, &mut on_stack, out);
        on_stack[u] = false;
    }
}

/// An even `(H ∪ q)`-path with an endvertex on `q`, if the bridges of
/// `H ∪ q` offer one. Parity of any path avoiding `E(H)` is read off `sides`.
fn second_even_path(g: &Graph, h: &SubgraphState, sides: &Bipartition, q: &VPath) -> Option<VPath> {
    let n = g.n();
    let mut core = h.vertex_mask().to_vec();
    for &v in q.vertices() {
        core[v] = true;
    }
    let on_q = mask_of(n, q.vertices().iter().copied());
    let mut comp = vec![usize::MAX; n];
    for root in 0..n {
        if core[root] || comp[root] != usize::MAX {
            continue;
        }
        let mut members = vec![root];
        comp[root] = root;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            i += 1;
            for &(y, _) in g.neighbours(x) {
                if !core[y] && comp[y] == usize::MAX {
                    comp[y] = root;
                    members.push(y);
                }
            }
        }
        let mut attachments: Vec<usize> = members
            .iter()
            .flat_map(|&x| g.neighbours(x).iter().map(|&(y, _)| y))
            .filter(|&y| core[y])
            .collect();
        attachments.sort_unstable();
        attachments.dedup();
        let pair = attachments.iter().enumerate().find_map(|(i, &x)| {
            attachments[i + 1..]
                .iter()
                .find(|&&y| sides.side(x) == sides.side(y) && (on_q[x] || on_q[y]))
                .map(|&y| (x, y))
        });
        if let Some((x, y)) = pair {
            return path_through_component(g, &comp, root, x, y);
        }
    }
    None
}

/// Shortest path `x - k1 - ... - kt - y` with every `ki` in component `root`.
fn path_through_component(g: &Graph, comp: &[usize], root: usize, x: usize, y: usize) -> Option<VPath> {
    let n = g.n();
    let inside = |v: usize| comp[v] == root;
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &(k, _) in g.neighbours(x) {
        if inside(k) {
            prev[k] = x;
            queue.push_back(k);
        }
    }
    while let Some(k) = queue.pop_front() {
        if g.edge_between(k, y).is_some() {
            let mut vs = vec![y, k];
            let mut cur = k;
            while prev[cur] != x {
                cur = prev[cur];
                vs.push(cur);
            }
            vs.push(x);
            vs.reverse();
            return VPath::from_vertices(g, &vs).ok();
        }
        for &(w, _) in g.neighbours(k) {
            if inside(w) && prev[w] == usize::MAX {
                prev[w] = k;
                queue.push_back(w);
            }
        }
    }
    None
}

/// An even 2-extension `(Q, Q')` of `H`, or `None`.
///
/// Only meaningful once no odd H-path exists, so that `G/H` is bipartite.
/// Candidate `Q` are tried by increasing length, then lexicographically.
pub fn find_even_two_extension(g: &Graph, h: &SubgraphState) -> Option<(VPath, VPath)> {
    let sides = match contract_bipartition(g, h) {
        Contraction::Bipartite(b) => b,
        Contraction::Odd(_) => return None,
    };
    let core = h.vertex_count();
    let mut candidates = Vec::new();
    for len in (2..=g.n() - core + 1).step_by(2) {
        candidates.clear();
        h_paths_of_length(g, h, len, &mut candidates);
        for vs in &candidates {
            let q = VPath::from_vertices(g, vs).expect("enumerated path");
            if let Some(qp) = second_even_path(g, h, &sides, &q) {
                return Some((q, qp));
            }
        }
    }
    None
}

/// Orients `q` as `u_0..u_{2l}` and `qp` as `u'..v'` so that `u'` is at
/// least as far from `H` as `v'` (inside `H ∪ q`), `u' = u_k` with `k <= l`,
/// and `v'` lies on `u_l Q v` or in `H` when `k = l`.
pub fn classify_two_extension(
    h: &SubgraphState,
    q: &VPath,
    qp: &VPath,
) -> Result<(VPath, VPath, TwoExtensionType), StructureError> {
    let invalid = |msg: &str| Err(StructureError::InvalidExtension(msg.to_string()));
    if !h.is_h_path(q) {
        return invalid("Q is not an H-path");
    }
    if !q.is_even() || !qp.is_even() || qp.is_empty() {
        return Err(StructureError::ParityViolation("both paths must be even".into()));
    }
    let two_l = q.len();
    let l = two_l / 2;
    let dist = |w: usize| -> Option<usize> {
        match q.position(w) {
            Some(i) => Some(i.min(two_l - i)),
            None if h.contains_vertex(w) => Some(0),
            None => None,
        }
    };
    let (a, b) = (qp.start(), qp.end());
    let (Some(da), Some(db)) = (dist(a), dist(b)) else {
        return invalid("Q' must end in H ∪ Q");
    };
    if !q.contains(a) && !q.contains(b) {
        return invalid("Q' has no endvertex on Q");
    }
    for &v in qp.internal() {
        if h.contains_vertex(v) || q.contains(v) {
            return invalid("Q' meets H ∪ Q internally");
        }
    }
    if qp.edge_indices().iter().any(|&e| h.contains_edge(e) || q.edge_indices().contains(&e)) {
        return invalid("Q' reuses an edge of H ∪ Q");
    }
    let a_first = da > db || (da == db && (q.contains(a) || !q.contains(b)));
    let qp = if a_first { qp.clone() } else { qp.reversed() };
    let (u_prime, v_prime) = (qp.start(), qp.end());
    let mut q = q.clone();
    let k = q.position(u_prime).expect("u' lies on Q");
    let flip = k > l || (k == l && q.position(v_prime).is_some_and(|j| j < l));
    if flip {
        q = q.reversed();
    }
    let k = q.position(u_prime).unwrap();
    let kind = match q.position(v_prime) {
        Some(j) if j > k => TwoExtensionType::I,
        Some(_) => TwoExtensionType::III,
        None => TwoExtensionType::II,
    };
    Ok((q, qp, kind))
}

/// Grows the seed cycle by odd H-paths (preferred) and even 2-extensions
/// until neither exists.
pub fn build_h_star(g: &Graph, seed: &Cycle) -> Result<SubgraphState, StructureError> {
    if !seed.is_even() {
        return Err(StructureError::ParityViolation("seed cycle must be even".into()));
    }
    let mut state = SubgraphState::from_cycle(g, seed);
    loop {
        if let Some(p) = find_odd_h_path(g, &state) {
            state = state.with_odd_path(p)?;
        } else if let Some((q, qp)) = find_even_two_extension(g, &state) {
            state = state.with_even_pair(q, qp)?;
        } else {
            return Ok(state);
        }
    }
}

/// A component of `G - E(H*)` with at least one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakBridge {
    /// Sorted.
    pub vertices: Vec<usize>,
    /// Sorted edge indices.
    pub edges: Vec<usize>,
    /// Sorted vertices shared with the core.
    pub attachments: Vec<usize>,
}

impl WeakBridge {
    /// Vertices of the bridge outside the core.
    pub fn off_core_count(&self) -> usize {
        self.vertices.len() - self.attachments.len()
    }
}

/// Weak bridges ordered by their smallest vertex.
pub fn weak_bridges(g: &Graph, hstar: &SubgraphState) -> Vec<WeakBridge> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for root in 0..n {
        if seen[root] || g.neighbours(root).iter().all(|&(_, e)| hstar.contains_edge(e)) {
            continue;
        }
        let mut vertices = vec![root];
        let mut edges = Vec::new();
        seen[root] = true;
        let mut i = 0;
        while i < vertices.len() {
            let x = vertices[i];
            i += 1;
            for &(y, e) in g.neighbours(x) {
                if hstar.contains_edge(e) {
                    continue;
                }
                if x < y {
                    edges.push(e);
                }
                if !seen[y] {
                    seen[y] = true;
                    vertices.push(y);
                }
            }
        }
        vertices.sort_unstable();
        edges.sort_unstable();
        let attachments = vertices.iter().copied().filter(|&v| hstar.contains_vertex(v)).collect();
        out.push(WeakBridge { vertices, edges, attachments });
    }
    out
}

/// An ordered list of paths; each path after the first is an
/// `(H ∪ P_1 ∪ ... ∪ P_{i-1})`-path with an endvertex on an earlier path.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathSeq {
    pub paths: Vec<VPath>,
}

impl PathSeq {
    /// Re-checks the path-sequence conditions against the core `h`.
    pub fn validate(&self, g: &Graph, h: &SubgraphState) -> Result<(), StructureError> {
        let mut in_m = h.vertex_mask().to_vec();
        let mut edge_in_m = h.edge_mask().to_vec();
        let mut on_paths = vec![false; g.n()];
        for (i, p) in self.paths.iter().enumerate() {
            let ends_ok = !p.is_empty() && p.start() != p.end() && in_m[p.start()] && in_m[p.end()];
            let interior_ok = p.internal().iter().all(|&v| !in_m[v]);
            let edges_ok = p.edge_indices().iter().all(|&e| !edge_in_m[e]);
            let touches = i == 0 || on_paths[p.start()] || on_paths[p.end()];
            if !(ends_ok && interior_ok && edges_ok && touches) {
                return Err(StructureError::InvalidExtension(format!(
                    "path {i} ({}) breaks the sequence conditions",
                    path_label(p)
                )));
            }
            for &v in p.vertices() {
                in_m[v] = true;
                on_paths[v] = true;
            }
            for &e in p.edge_indices() {
                edge_in_m[e] = true;
            }
        }
        Ok(())
    }

    /// First path even, all others odd.
    pub fn has_base_parity(&self) -> bool {
        self.paths.first().is_some_and(VPath::is_even) && self.paths.iter().skip(1).all(|p| !p.is_even())
    }
}

/// A weak bridge with a path sequence covering it; `base` is the first path,
/// running from `u` to `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeInfo {
    pub bridge: WeakBridge,
    pub path_seq: PathSeq,
    pub u: usize,
    pub v: usize,
}

impl BridgeInfo {
    pub fn base(&self) -> &VPath {
        &self.path_seq.paths[0]
    }
}

/// Covers a weak bridge by a path sequence over `H*`: an even base, then odd
/// paths, each hanging off vertices already on the sequence.
pub fn bridge_path_sequence(
    g: &Graph,
    hstar: &SubgraphState,
    bridge: &WeakBridge,
) -> Result<BridgeInfo, StructureError> {
    if bridge.off_core_count().is_multiple_of(2) {
        return Err(StructureError::ParityViolation(format!(
            "bridge at {:?} has {} vertices off the core",
            bridge.attachments,
            bridge.off_core_count()
        )));
    }
    let n = g.n();
    let in_bridge_edge = mask_of(g.m(), bridge.edges.iter().copied());
    let mut in_m = hstar.vertex_mask().to_vec();
    let mut covered = vec![false; g.m()];
    let mut on_paths = vec![false; n];

    let base = bridge
        .attachments
        .iter()
        .find_map(|&a| bridge_base_from(g, &in_bridge_edge, &in_m, a))
        .ok_or_else(|| StructureError::InvalidExtension("bridge has no H*-path".into()))?;
    if !base.is_even() {
        return Err(StructureError::ParityViolation(format!("base {} is odd", path_label(&base))));
    }
    let mut paths = Vec::new();
    let mut take = |p: VPath, in_m: &mut Vec<bool>, covered: &mut Vec<bool>, on_paths: &mut Vec<bool>| {
        for &v in p.vertices() {
            in_m[v] = true;
            on_paths[v] = true;
        }
        for &e in p.edge_indices() {
            covered[e] = true;
        }
        paths.push(p);
    };
    take(base, &mut in_m, &mut covered, &mut on_paths);

    loop {
        // Lowest uncovered vertex next to the sequence so far.
        let ear_start = bridge.vertices.iter().find_map(|&w| {
            if in_m[w] {
                return None;
            }
            g.neighbours(w)
                .iter()
                .find(|&&(s, e)| in_bridge_edge[e] && on_paths[s])
                .map(|&(s, _)| (w, s))
        });
        let next = if let Some((w, s)) = ear_start {
            ear_through(g, &in_m, s, w)
                .ok_or_else(|| StructureError::InvalidExtension(format!("no ear through {w}")))?
        } else if let Some(e) = bridge.edges.iter().copied().find(|&e| {
            let (a, b) = g.edge(e);
            !covered[e] && in_m[a] && in_m[b] && (on_paths[a] || on_paths[b])
        }) {
            let (a, b) = g.edge(e);
            VPath::from_vertices(g, &[a, b])?
        } else {
            break;
        };
        if next.is_even() {
            return Err(StructureError::ParityViolation(format!(
                "path {} after the base is even",
                path_label(&next)
            )));
        }
        take(next, &mut in_m, &mut covered, &mut on_paths);
    }
    if bridge.edges.iter().any(|&e| !covered[e]) || bridge.vertices.iter().any(|&v| !in_m[v]) {
        return Err(StructureError::InvalidExtension("path sequence does not cover the bridge".into()));
    }
    let path_seq = PathSeq { paths };
    let (u, v) = (path_seq.paths[0].start(), path_seq.paths[0].end());
    Ok(BridgeInfo { bridge: bridge.clone(), path_seq, u, v })
}

/// Shortest path inside the bridge from attachment `a` to another core vertex.
fn bridge_base_from(g: &Graph, in_bridge_edge: &[bool], in_core: &[bool], a: usize) -> Option<VPath> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        for &(y, e) in g.neighbours(x) {
            if !in_bridge_edge[e] || prev[y] != usize::MAX {
                continue;
            }
            prev[y] = x;
            if in_core[y] {
                let mut vs = vec![y];
                let mut cur = y;
                while cur != a {
                    cur = prev[cur];
                    vs.push(cur);
                }
                vs.reverse();
                return VPath::from_vertices(g, &vs).ok();
            }
            queue.push_back(y);
        }
    }
    None
}

/// `s - w - ... - t` where `t` is the first vertex of `M - s` reached by BFS
/// from `w` outside `M`.
fn ear_through(g: &Graph, in_m: &[bool], s: usize, w: usize) -> Option<VPath> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[w] = w;
    let mut queue = VecDeque::from([w]);
    while let Some(x) = queue.pop_front() {
        for &(y, _) in g.neighbours(x) {
            if y == s || prev[y] != usize::MAX {
                continue;
            }
            prev[y] = x;
            if in_m[y] {
                let mut vs = vec![y];
                let mut cur = y;
                while cur != w {
                    cur = prev[cur];
                    vs.push(cur);
                }
                vs.push(s);
                vs.reverse();
                return VPath::from_vertices(g, &vs).ok();
            }
            queue.push_back(y);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_with_chord() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
    }

    fn state(g: &Graph, cyc: &[usize]) -> SubgraphState {
        SubgraphState::from_cycle(g, &Cycle::from_vertices(g, cyc).unwrap())
    }

    #[test]
    fn bipartition_of_bare_cycle() {
        let g = Graph::cycle(6);
        let h = state(&g, &[0, 1, 2, 3, 4, 5]);
        assert!(matches!(contract_bipartition(&g, &h), Contraction::Bipartite(_)));
        assert_eq!(find_odd_h_path(&g, &h), None);
        assert_eq!(find_even_two_extension(&g, &h), None);
    }

    #[test]
    fn chord_is_an_odd_witness() {
        let g = c4_with_chord();
        let h = state(&g, &[0, 1, 2, 3]);
        assert_eq!(contract_bipartition(&g, &h), Contraction::Odd(OddWitness::Chord(4)));
        assert_eq!(find_odd_h_path(&g, &h).unwrap().vertices(), &[0, 2]);
    }

    #[test]
    fn k4_grows_by_its_chords() {
        let g = Graph::complete(4);
        let h = state(&g, &[0, 1, 3, 2]);
        let p = find_odd_h_path(&g, &h).unwrap();
        assert_eq!(p.len(), 1);
        let hs = build_h_star(&g, h.seed()).unwrap();
        assert_eq!(hs.history().len(), 2);
        assert!(hs.history().iter().all(|s| matches!(s, ExtensionStep::OddPath(p) if p.len() == 1)));
        assert_eq!(hs.edge_list().len(), 6);
    }

    #[test]
    fn disjoint_odd_cycle_becomes_odd_h_path() {
        // C4 on 0..3, triangle 4-5-6 joined by 0-4 and 2-5
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 4), (0, 4), (2, 5)])
            .unwrap();
        let h = state(&g, &[0, 1, 2, 3]);
        let p = find_odd_h_path(&g, &h).unwrap();
        assert!(h.is_h_path(&p));
        assert_eq!(p.len() % 2, 1);
        let witness = disjoint_cycle_to_h_path(&g, &h, &Cycle::from_vertices(&g, &[4, 5, 6]).unwrap());
        let w = witness.unwrap();
        assert!(h.is_h_path(&w) && w.len() % 2 == 1);
    }

    #[test]
    fn anchored_odd_cycle_becomes_odd_h_path() {
        // C4 on 0..3; triangle 0-4-5 hangs at 0; 5-6-2 reaches back into H
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 0), (5, 6), (6, 2)])
            .unwrap();
        let h = state(&g, &[0, 1, 2, 3]);
        let cyc = Cycle::from_vertices(&g, &[0, 4, 5]).unwrap();
        let p = anchored_cycle_to_h_path(&g, &h, &cyc, 0).unwrap();
        assert!(h.is_h_path(&p));
        assert_eq!(p.len() % 2, 1);
        assert!(find_odd_h_path(&g, &h).is_some_and(|p| h.is_h_path(&p) && p.len() % 2 == 1));
    }

    #[test]
    fn classification_types() {
        // H = C4 0-1-2-3; Q = 0-4-5-6-2 (length 4).
        let base = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 2)];
        let with = |extra: &[(usize, usize)], n: usize| {
            let mut e = base.to_vec();
            e.extend_from_slice(extra);
            Graph::new(n, e).unwrap()
        };
        // type I: Q' = 4-7-2 ends at v
        let g = with(&[(4, 7), (7, 2)], 8);
        let h = state(&g, &[0, 1, 2, 3]);
        let q = VPath::from_vertices(&g, &[0, 4, 5, 6, 2]).unwrap();
        let qp = VPath::from_vertices(&g, &[2, 7, 4]).unwrap();
        let (q2, qp2, kind) = classify_two_extension(&h, &q, &qp).unwrap();
        assert_eq!(kind, TwoExtensionType::I);
        assert_eq!(qp2.start(), 4);
        assert_eq!(q2.start(), 0);
        // type II: Q' = 4-7-3 ends in H off Q
        let g = with(&[(4, 7), (7, 3)], 8);
        let h = state(&g, &[0, 1, 2, 3]);
        let qp = VPath::from_vertices(&g, &[3, 7, 4]).unwrap();
        let (_, qp2, kind) = classify_two_extension(&h, &q, &qp).unwrap();
        assert_eq!(kind, TwoExtensionType::II);
        assert_eq!((qp2.start(), qp2.end()), (4, 3));
        // type III: Q' = 5-7-0 from the middle back to u
        let g = with(&[(5, 7), (7, 0)], 8);
        let h = state(&g, &[0, 1, 2, 3]);
        let qp = VPath::from_vertices(&g, &[0, 7, 5]).unwrap();
        let (q2, qp2, kind) = classify_two_extension(&h, &q, &qp).unwrap();
        assert_eq!(q2.position(qp2.start()), Some(2));
        // u' = u_l, so v' must be on u_l Q v or in H: reorientation puts v' = v
        assert_eq!(kind, TwoExtensionType::I);
        // genuine type III: Q of length 6, Q' from u_2 back to u_0
        let g = Graph::new(
            10,
            [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 2), (5, 9), (9, 0)],
        )
        .unwrap();
        let h = state(&g, &[0, 1, 2, 3]);
        let q = VPath::from_vertices(&g, &[0, 4, 5, 6, 7, 8, 2]).unwrap();
        let qp = VPath::from_vertices(&g, &[0, 9, 5]).unwrap();
        let (_, _, kind) = classify_two_extension(&h, &q, &qp).unwrap();
        assert_eq!(kind, TwoExtensionType::III);
    }

    #[test]
    fn classification_rejects_detached_second_path() {
        let g = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (1, 5), (5, 3)]).unwrap();
        let h = state(&g, &[0, 1, 2, 3]);
        let q = VPath::from_vertices(&g, &[0, 4, 2]).unwrap();
        let qp = VPath::from_vertices(&g, &[1, 5, 3]).unwrap();
        assert!(matches!(
            classify_two_extension(&h, &q, &qp),
            Err(StructureError::InvalidExtension(_))
        ));
    }

    #[test]
    fn bridges_and_sequences() {
        // C6 plus an even ear 0-6-7-8-3 of length 4
        let g = Graph::new(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (7, 8), (8, 3)])
            .unwrap();
        let hs = build_h_star(&g, &Cycle::from_vertices(&g, &[0, 1, 2, 3, 4, 5]).unwrap()).unwrap();
        assert!(hs.history().is_empty());
        let bridges = weak_bridges(&g, &hs);
        assert_eq!(bridges.len(), 1);
        assert_eq!(bridges[0].edges, vec![6, 7, 8, 9]);
        assert_eq!(bridges[0].attachments, vec![0, 3]);
        let info = bridge_path_sequence(&g, &hs, &bridges[0]).unwrap();
        assert_eq!(info.path_seq.paths.len(), 1);
        assert_eq!(info.base().vertices(), &[0, 6, 7, 8, 3]);
        assert_eq!((info.u, info.v), (0, 3));
    }

    #[test]
    fn even_off_core_count_is_a_parity_violation() {
        // C4 plus an odd ear 0-4-5-2 (two new vertices), treated as if it were a bridge
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 2)]).unwrap();
        let h = state(&g, &[0, 1, 2, 3]);
        let bridges = weak_bridges(&g, &h);
        assert!(matches!(
            bridge_path_sequence(&g, &h, &bridges[0]),
            Err(StructureError::ParityViolation(_))
        ));
    }

    #[test]
    fn trace_lines() {
        let g = Graph::complete(4);
        let hs = build_h_star(&g, &find_even_cycle_k4(&g)).unwrap();
        let t = hs.trace();
        assert_eq!(t.lines().count(), 3);
        assert!(t.lines().nth(1).unwrap().starts_with("step 0 odd path="));
    }

    fn find_even_cycle_k4(g: &Graph) -> Cycle {
        crate::graph::find_even_cycle(g).unwrap()
    }
}
