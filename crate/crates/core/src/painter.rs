//! The colouring construction: a seed cycle pattern, continuations over
//! the core's extension steps, one base-plus-continuations colouring per
//! weak bridge, and a final recolouring that removes one colour when there
//! are one or two bridges.

use thiserror::Error;

use crate::colouring::{ColourAllocator, ColourId, Colouring};
use crate::graph::{self, Cycle, Graph, GraphError, VPath};
use crate::structure::{
    bridge_path_sequence, build_h_star, classify_two_extension, weak_bridges, BridgeInfo, ExtensionStep,
    StructureError, SubgraphState,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PaintError {
    #[error("graph is not 2-connected on at least 3 vertices")]
    NotTwoConnected,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("expected an odd cycle, got length {0}")]
    EvenLength(usize),
    #[error("expected an even cycle of length at least 4, got length {0}")]
    OddLength(usize),
    #[error("path does not attach to the coloured subgraph as required")]
    NotAnHPath,
    #[error("even pair is not in classified orientation")]
    Unoriented,
    #[error("special colour collides with the core palette")]
    SpecialCollision,
    #[error("no rainbow path between the two bases misses a core colour")]
    NoSafePath,
    #[error("reduction needs {expected} bridge(s), found {found}")]
    BridgeCount { expected: usize, found: usize },
    #[error("edge {0} is coloured by two bridges")]
    BridgeOverlap(usize),
    #[error("the seed colouring has no distinguished colour")]
    MissingGamma,
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `1..⌊n/2⌋, ⌈n/2⌉, 1..⌊n/2⌋` around `g`, which must be an odd cycle.
pub fn colour_odd_cycle(g: &Graph) -> Result<Colouring, PaintError> {
    let cycle = graph::as_cycle(g).and_then(|_| cycle_of(g)).ok_or(PaintError::NotTwoConnected)?;
    let n = cycle.len();
    if n % 2 == 0 {
        return Err(PaintError::EvenLength(n));
    }
    let half = n / 2;
    let mut c = Colouring::empty(g.m());
    for (i, &e) in cycle.edge_indices().iter().enumerate() {
        let colour = match i.cmp(&half) {
            std::cmp::Ordering::Less => i,
            std::cmp::Ordering::Equal => half,
            std::cmp::Ordering::Greater => i - half - 1,
        };
        c.set(e, ColourId(colour as u32));
    }
    Ok(c)
}

fn cycle_of(g: &Graph) -> Option<Cycle> {
    graph::cycle_order(g)
}

/// `1..k, 1..k` around an even cycle; the last of the `k` colours is `γ`.
pub fn colour_even_cycle(g: &Graph, h0: &Cycle, alloc: &mut ColourAllocator) -> Result<Colouring, PaintError> {
    let len = h0.len();
    if len % 2 == 1 || len < 4 {
        return Err(PaintError::OddLength(len));
    }
    let k = len / 2;
    let colours = alloc.fresh_many(k);
    let mut c = Colouring::empty(g.m());
    for (i, &e) in h0.edge_indices().iter().enumerate() {
        c.set(e, colours[i % k]);
    }
    c.roles_mut().gamma = Some(colours[k - 1]);
    Ok(c)
}

/// Colours an odd H-path `a_1..a_k, γ, a_1..a_k` with `k` fresh colours.
pub fn continue_odd(
    c: &Colouring,
    h: &SubgraphState,
    p: &VPath,
    alloc: &mut ColourAllocator,
) -> Result<Colouring, PaintError> {
    let gamma = c.roles().gamma.ok_or(PaintError::MissingGamma)?;
    if !h.is_h_path(p) {
        return Err(PaintError::NotAnHPath);
    }
    if p.is_even() {
        return Err(StructureError::ParityViolation("odd continuation of an even path".into()).into());
    }
    Ok(paint_odd(c, p, gamma, alloc))
}

fn paint_odd(c: &Colouring, p: &VPath, gamma: ColourId, alloc: &mut ColourAllocator) -> Colouring {
    let k = p.len() / 2;
    let fresh = alloc.fresh_many(k);
    let mut out = c.clone();
    for (j, &e) in p.edge_indices().iter().enumerate() {
        let colour = match j.cmp(&k) {
            std::cmp::Ordering::Less => fresh[j],
            std::cmp::Ordering::Equal => gamma,
            std::cmp::Ordering::Greater => fresh[j - k - 1],
        };
        out.set(e, colour);
    }
    out
}

/// Colours an even pair with `l + l' - 1` fresh colours: `q` (length `2l`)
/// gets `a_1..a_l, γ, a_1..a_{l-1}` and `qp` (length `2l'`) gets
/// `a_{l+1}..a_{l+l'-1}, γ, a_l, a_{l+1}..a_{l+l'-1}`.
pub fn continue_even2(
    c: &Colouring,
    h: &SubgraphState,
    q: &VPath,
    qp: &VPath,
    alloc: &mut ColourAllocator,
) -> Result<Colouring, PaintError> {
    let gamma = c.roles().gamma.ok_or(PaintError::MissingGamma)?;
    let (q2, qp2, _) = classify_two_extension(h, q, qp)?;
    if &q2 != q || &qp2 != qp {
        return Err(PaintError::Unoriented);
    }
    Ok(paint_even_pair(c, q, qp, gamma, alloc))
}

fn paint_even_pair(c: &Colouring, q: &VPath, qp: &VPath, gamma: ColourId, alloc: &mut ColourAllocator) -> Colouring {
    let l = q.len() / 2;
    let lp = qp.len() / 2;
    // a[i] is a_{i+1}
    let a = alloc.fresh_many(l + lp - 1);
    let mut out = c.clone();
    for (j, &e) in q.edge_indices().iter().enumerate() {
        let colour = match j.cmp(&l) {
            std::cmp::Ordering::Less => a[j],
            std::cmp::Ordering::Equal => gamma,
            std::cmp::Ordering::Greater => a[j - l - 1],
        };
        out.set(e, colour);
    }
    for (j, &e) in qp.edge_indices().iter().enumerate() {
        let colour = if j + 1 < lp {
            a[l + j]
        } else if j + 1 == lp {
            gamma
        } else {
            a[l - 1 + (j - lp)]
        };
        out.set(e, colour);
    }
    out
}

/// The colourings `c_0, c_1, ..., c*` of the cores `H_0, H_1, ..., H*`.
pub fn colour_core_steps(g: &Graph, hstar: &SubgraphState) -> Result<Vec<(SubgraphState, Colouring)>, PaintError> {
    let mut alloc = ColourAllocator::new();
    let prefixes = hstar.prefixes(g);
    let mut c = colour_even_cycle(g, hstar.seed(), &mut alloc)?;
    let mut out = Vec::with_capacity(prefixes.len());
    out.push((prefixes[0].clone(), c.clone()));
    for (i, step) in hstar.history().iter().enumerate() {
        let h = &prefixes[i];
        c = match step {
            ExtensionStep::OddPath(p) => continue_odd(&c, h, p, &mut alloc)?,
            ExtensionStep::EvenPair { q, qp, .. } => continue_even2(&c, h, q, qp, &mut alloc)?,
        };
        out.push((prefixes[i + 1].clone(), c.clone()));
    }
    Ok(out)
}

/// The colouring `c*` of `H*`, using `|V(H*)|/2` colours.
pub fn colour_core(g: &Graph, hstar: &SubgraphState) -> Result<Colouring, PaintError> {
    Ok(colour_core_steps(g, hstar)?.pop().expect("seed colouring").1)
}

/// A bridge coloured on top of `c*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaintedBridge {
    pub info: BridgeInfo,
    /// `c*` extended to the bridge.
    pub colouring: Colouring,
    pub e_alpha: usize,
    pub e_beta: usize,
    /// Colours on the bridge outside the core palette, `α` and `β` included.
    pub new_colours: usize,
}

/// Base `a_1..a_{k-1}, α, β, a_1..a_{k-1}` from `u` to `v`, then the odd
/// paths of the sequence by continuation.
pub fn colour_bridge(
    cstar: &Colouring,
    info: &BridgeInfo,
    alpha: ColourId,
    beta: ColourId,
    alloc: &mut ColourAllocator,
) -> Result<PaintedBridge, PaintError> {
    let gamma = cstar.roles().gamma.ok_or(PaintError::MissingGamma)?;
    let core_palette = cstar.palette();
    if alpha == beta || core_palette.contains(&alpha) || core_palette.contains(&beta) {
        return Err(PaintError::SpecialCollision);
    }
    let base = info.base();
    if !base.is_even() || base.is_empty() {
        return Err(StructureError::ParityViolation("bridge base must be even".into()).into());
    }
    let k1 = base.len() / 2;
    let fresh = alloc.fresh_many(k1 - 1);
    let mut c = cstar.clone();
    let edges = base.edge_indices();
    for (j, &e) in edges.iter().enumerate() {
        let colour = if j + 1 < k1 {
            fresh[j]
        } else if j + 1 == k1 {
            alpha
        } else if j == k1 {
            beta
        } else {
            fresh[j - k1 - 1]
        };
        c.set(e, colour);
    }
    for p in &info.path_seq.paths[1..] {
        if p.is_even() {
            return Err(StructureError::ParityViolation("bridge path after the base is even".into()).into());
        }
        c = paint_odd(&c, p, gamma, alloc);
    }
    c.roles_mut().alpha = Some(alpha);
    c.roles_mut().beta = Some(beta);
    let new_colours = c.palette().difference(&core_palette).count();
    Ok(PaintedBridge { info: info.clone(), colouring: c, e_alpha: edges[k1 - 1], e_beta: edges[k1], new_colours })
}

/// Merges the bridge colourings over `c*`.
pub fn assemble(g: &Graph, cstar: &Colouring, bridges: &[PaintedBridge]) -> Result<Colouring, PaintError> {
    let mut out = cstar.clone();
    let mut owner = vec![usize::MAX; g.m()];
    for (j, b) in bridges.iter().enumerate() {
        for &e in &b.info.bridge.edges {
            if owner[e] != usize::MAX {
                return Err(PaintError::BridgeOverlap(e));
            }
            owner[e] = j;
            out.set(e, b.colouring.get(e).expect("bridge edges are coloured"));
        }
        out.roles_mut().alpha = b.colouring.roles().alpha;
        out.roles_mut().beta = b.colouring.roles().beta;
    }
    Ok(out)
}

/// With a single bridge, its `β` edge takes the smallest core colour other than `γ`.
pub fn reduce_r1(cstar: &Colouring, assembled: &Colouring, bridges: &[PaintedBridge]) -> Result<Colouring, PaintError> {
    let [bridge] = bridges else {
        return Err(PaintError::BridgeCount { expected: 1, found: bridges.len() });
    };
    let gamma = cstar.roles().gamma.ok_or(PaintError::MissingGamma)?;
    let replacement = cstar.palette().into_iter().find(|&c| c != gamma).ok_or(PaintError::MissingGamma)?;
    let mut out = assembled.clone();
    out.set(bridge.e_beta, replacement);
    Ok(out)
}

/// What the two-bridge reduction chose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoBridgeChoice {
    /// Rainbow path in `(H*, c*)` from the first base's `u` end to the
    /// second base's `v` end (after any reversal).
    pub path: VPath,
    pub delta: ColourId,
    /// Whether the second base's colouring was reversed.
    pub reversed: bool,
}

/// With two bridges, finds a rainbow path in `(H*, c*)` from `u^1` to `u^2`
/// or `v^2` that misses some core colour `δ`, reverses the second base if
/// the path ends at `u^2`, and recolours both `β` edges to `δ`.
///
/// `bridges` is updated in place when the second base is reversed.
pub fn reduce_r2(
    g: &Graph,
    cstar: &Colouring,
    assembled: &Colouring,
    bridges: &mut [PaintedBridge],
) -> Result<(Colouring, TwoBridgeChoice), PaintError> {
    let [b1, b2] = bridges else {
        return Err(PaintError::BridgeCount { expected: 2, found: bridges.len() });
    };
    let palette: Vec<ColourId> = cstar.palette().into_iter().collect();
    let found = [(b2.info.u, true), (b2.info.v, false)]
        .into_iter()
        .find_map(|(target, reverse)| non_blocking_path(g, cstar, b1.info.u, target).map(|p| (p, reverse)));
    let (path, reversed) = found.ok_or(PaintError::NoSafePath)?;
    let on_path: Vec<ColourId> = path.edge_indices().iter().map(|&e| cstar.get(e).expect("core edge")).collect();
    let delta = *palette.iter().find(|c| !on_path.contains(c)).ok_or(PaintError::NoSafePath)?;

    let mut out = assembled.clone();
    if reversed {
        let (ca, cb) = (out.get(b2.e_alpha).unwrap(), out.get(b2.e_beta).unwrap());
        out.set(b2.e_alpha, cb);
        out.set(b2.e_beta, ca);
        std::mem::swap(&mut b2.e_alpha, &mut b2.e_beta);
        std::mem::swap(&mut b2.info.u, &mut b2.info.v);
        b2.info.path_seq.paths[0] = b2.info.path_seq.paths[0].reversed();
        let (ca, cb) = (b2.colouring.get(b2.e_alpha).unwrap(), b2.colouring.get(b2.e_beta).unwrap());
        b2.colouring.set(b2.e_alpha, cb);
        b2.colouring.set(b2.e_beta, ca);
    }
    out.set(b1.e_beta, delta);
    out.set(b2.e_beta, delta);
    out.roles_mut().delta = Some(delta);
    Ok((out, TwoBridgeChoice { path, delta, reversed }))
}

/// Shortest rainbow path in the coloured part of `c` from `s` to `t` that
/// is shorter than the palette, by iterative deepening.
fn non_blocking_path(g: &Graph, c: &Colouring, s: usize, t: usize) -> Option<VPath> {
    if s == t {
        return Some(VPath::trivial(s));
    }
    let k = c.palette_size();
    let mut used = vec![false; c.id_bound()];
    let mut on_path = vec![false; g.n()];
    let mut stack = vec![s];
    on_path[s] = true;
    for limit in 1..k {
        if deepen(g, c, t, limit, &mut stack, &mut on_path, &mut used) {
            return VPath::from_vertices(g, &stack).ok();
        }
    }
    None
}

fn deepen(
    g: &Graph,
    c: &Colouring,
    t: usize,
    limit: usize,
    stack: &mut Vec<usize>,
    on_path: &mut [bool],
    used: &mut [bool],
) -> bool {
    let x = *stack.last().unwrap();
    if x == t {
        return true;
    }
    if stack.len() > limit {
        return false;
    }
    for &(y, e) in g.neighbours(x) {
        let Some(col) = c.get(e) else { continue };
        if on_path[y] || used[col.index()] {
            continue;
        }
        used[col.index()] = true;
        on_path[y] = true;
        stack.push(y);
        if deepen(g, c, t, limit, stack, on_path, used) {
            return true;
        }
        stack.pop();
        on_path[y] = false;
        used[col.index()] = false;
    }
    false
}

/// How the final colour count was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// Odd cycle pattern, or no bridges, or three or more bridges.
    None,
    SingleBridge { edge: usize, colour: ColourId },
    TwoBridges(TwoBridgeChoice),
}

/// Every stage of the construction for one graph.
#[derive(Clone, Debug)]
pub struct Construction {
    /// `None` when the graph is an odd cycle.
    pub hstar: Option<SubgraphState>,
    pub cstar: Colouring,
    pub bridges: Vec<PaintedBridge>,
    /// The merged colouring before any reduction.
    pub assembled: Colouring,
    pub reduction: Reduction,
    /// Canonical colour ids `0..K`.
    pub colouring: Colouring,
}

impl Construction {
    pub fn bridge_count(&self) -> usize {
        self.bridges.len()
    }
}

fn ensure_two_connected(g: &Graph) -> Result<(), PaintError> {
    if g.n() >= 3 && graph::vertex_connectivity_at_least(g, 2) {
        Ok(())
    } else {
        Err(PaintError::NotTwoConnected)
    }
}

/// Runs the whole construction and keeps every intermediate stage.
pub fn construct(g: &Graph) -> Result<Construction, PaintError> {
    ensure_two_connected(g)?;
    if graph::as_cycle(g).is_some_and(|n| n % 2 == 1) {
        let c = colour_odd_cycle(g)?;
        return Ok(Construction {
            hstar: None,
            cstar: c.clone(),
            bridges: Vec::new(),
            assembled: c.clone(),
            reduction: Reduction::None,
            colouring: c.canonicalised(),
        });
    }
    let seed = graph::find_even_cycle(g)?;
    let hstar = build_h_star(g, &seed)?;
    let cstar = colour_core(g, &hstar)?;
    let mut alloc = ColourAllocator::above(&cstar);
    let (alpha, beta) = (alloc.fresh(), alloc.fresh());
    let mut bridges = Vec::new();
    for b in weak_bridges(g, &hstar) {
        let info = bridge_path_sequence(g, &hstar, &b)?;
        bridges.push(colour_bridge(&cstar, &info, alpha, beta, &mut alloc)?);
    }
    let assembled = assemble(g, &cstar, &bridges)?;
    let (reduced, reduction) = match bridges.len() {
        1 => {
            let c = reduce_r1(&cstar, &assembled, &bridges)?;
            let edge = bridges[0].e_beta;
            let colour = c.get(edge).unwrap();
            (c, Reduction::SingleBridge { edge, colour })
        }
        2 => {
            let (c, choice) = reduce_r2(g, &cstar, &assembled, &mut bridges)?;
            (c, Reduction::TwoBridges(choice))
        }
        _ => (assembled.clone(), Reduction::None),
    };
    let colouring = reduced.canonicalised();
    Ok(Construction { hstar: Some(hstar), cstar, bridges, assembled, reduction, colouring })
}

/// A rainbow-connecting colouring of a 2-connected graph with at most
/// `⌈n/2⌉` colours, canonically labelled.
pub fn rainbow_colouring(g: &Graph) -> Result<Colouring, PaintError> {
    Ok(construct(g)?.colouring)
}

/// Distinct colours on a BFS spanning tree from vertex 0, colour 0 elsewhere.
pub fn spanning_tree_colouring(g: &Graph) -> Result<Colouring, PaintError> {
    if !graph::is_connected(g) {
        return Err(PaintError::Disconnected);
    }
    let mut c = Colouring::empty(g.m());
    let mut seen = vec![false; g.n()];
    let mut next = 0u32;
    if g.n() > 0 {
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in g.neighbours(x) {
                if !seen[y] {
                    seen[y] = true;
                    c.set(e, ColourId(next));
                    next += 1;
                    queue.push_back(y);
                }
            }
        }
    }
    for e in 0..g.m() {
        if c.get(e).is_none() {
            c.set(e, ColourId(0));
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn colours_along(c: &Colouring, p: &VPath) -> Vec<u32> {
        p.edge_indices().iter().map(|&e| c.get(e).unwrap().0).collect()
    }

    fn cycle_colours(g: &Graph, c: &Colouring) -> Vec<u32> {
        let cyc = cycle_of(g).unwrap();
        cyc.edge_indices().iter().map(|&e| c.get(e).unwrap().0 + 1).collect()
    }

    #[test]
    fn odd_cycle_patterns() {
        assert_eq!(cycle_colours(&Graph::cycle(5), &colour_odd_cycle(&Graph::cycle(5)).unwrap()), [1, 2, 3, 1, 2]);
        assert_eq!(cycle_colours(&Graph::cycle(3), &colour_odd_cycle(&Graph::cycle(3)).unwrap()), [1, 2, 1]);
        assert_eq!(
            cycle_colours(&Graph::cycle(7), &colour_odd_cycle(&Graph::cycle(7)).unwrap()),
            [1, 2, 3, 4, 1, 2, 3]
        );
        assert_eq!(colour_odd_cycle(&Graph::cycle(6)), Err(PaintError::EvenLength(6)));
    }

    #[test]
    fn even_cycle_patterns() {
        let g = Graph::cycle(6);
        let cyc = cycle_of(&g).unwrap();
        let c = colour_even_cycle(&g, &cyc, &mut ColourAllocator::new()).unwrap();
        assert_eq!(cycle_colours(&g, &c), [1, 2, 3, 1, 2, 3]);
        assert_eq!(c.roles().gamma, Some(ColourId(2)));
        let g5 = Graph::cycle(5);
        let c5 = cycle_of(&g5).unwrap();
        assert_eq!(colour_even_cycle(&g5, &c5, &mut ColourAllocator::new()), Err(PaintError::OddLength(5)));
    }

    #[test]
    fn odd_continuation_patterns() {
        // C4 with an ear 0-4-5-2 of length 3
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 2)]).unwrap();
        let seed = Cycle::from_vertices(&g, &[0, 1, 2, 3]).unwrap();
        let h = SubgraphState::from_cycle(&g, &seed);
        let mut alloc = ColourAllocator::new();
        let c0 = colour_even_cycle(&g, &seed, &mut alloc).unwrap();
        let p = VPath::from_vertices(&g, &[0, 4, 5, 2]).unwrap();
        let c1 = continue_odd(&c0, &h, &p, &mut alloc).unwrap();
        assert_eq!(colours_along(&c1, &p), [2, 1, 2]);
        assert_eq!(c1.palette_size(), 3);
        let even = VPath::from_vertices(&g, &[0, 4, 5]).unwrap();
        assert!(continue_odd(&c0, &h, &even, &mut alloc).is_err());
    }

    #[test]
    fn even_pair_patterns() {
        // H = C4; Q = 0-4-5-6-2 (l = 2); Q' = 5-7-3 (l' = 1)
        let g = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 2), (5, 7), (7, 3)])
            .unwrap();
        let seed = Cycle::from_vertices(&g, &[0, 1, 2, 3]).unwrap();
        let h = SubgraphState::from_cycle(&g, &seed);
        let q = VPath::from_vertices(&g, &[0, 4, 5, 6, 2]).unwrap();
        let qp = VPath::from_vertices(&g, &[5, 7, 3]).unwrap();
        let (q, qp, _) = classify_two_extension(&h, &q, &qp).unwrap();
        let mut alloc = ColourAllocator::new();
        let c0 = colour_even_cycle(&g, &seed, &mut alloc).unwrap();
        let c1 = continue_even2(&c0, &h, &q, &qp, &mut alloc).unwrap();
        // gamma = 1, a_1 = 2, a_2 = 3
        assert_eq!(colours_along(&c1, &q), [2, 3, 1, 2]);
        assert_eq!(colours_along(&c1, &qp), [1, 3]);
        assert_eq!(c1.palette_size(), 4);
        assert_eq!(
            continue_even2(&c0, &h, &q, &qp.reversed(), &mut alloc),
            Err(PaintError::Unoriented)
        );
    }

    #[test]
    fn k4_core_uses_two_colours() {
        let g = Graph::complete(4);
        let seed = graph::find_even_cycle(&g).unwrap();
        let hstar = build_h_star(&g, &seed).unwrap();
        let c = colour_core(&g, &hstar).unwrap();
        assert_eq!(c.palette_size(), 2);
        let gamma = c.roles().gamma.unwrap();
        for step in hstar.history() {
            let ExtensionStep::OddPath(p) = step else { panic!("K4 grows by chords") };
            assert_eq!(c.get(p.edge_indices()[0]), Some(gamma));
        }
    }

    #[test]
    fn bridge_base_patterns() {
        // C6 with an ear of length 4 and a chord of the ear's middle to the far side
        let g = Graph::new(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (7, 8), (8, 3)])
            .unwrap();
        let con = construct(&g).unwrap();
        assert_eq!(con.bridges.len(), 1);
        let b = &con.bridges[0];
        let cols = colours_along(&b.colouring, b.info.base());
        assert_eq!(cols[1], b.colouring.roles().alpha.unwrap().0);
        assert_eq!(cols[2], b.colouring.roles().beta.unwrap().0);
        assert_eq!(cols[0], cols[3]);
        assert_eq!(b.new_colours, 3);
        assert_eq!(con.assembled.palette_size(), 6);
        assert_eq!(con.colouring.palette_size(), 5);
    }

    #[test]
    fn small_pipelines() {
        assert_eq!(rainbow_colouring(&Graph::complete(4)).unwrap().palette_size(), 2);
        assert_eq!(rainbow_colouring(&Graph::cycle(7)).unwrap().palette_size(), 4);
        assert_eq!(rainbow_colouring(&Graph::path(3)), Err(PaintError::NotTwoConnected));
        let c = rainbow_colouring(&Graph::cycle(8)).unwrap();
        let ids: Vec<u32> = (0..8).map(|e| c.get(e).unwrap().0).collect();
        assert_eq!(ids.iter().max(), Some(&3));
    }

    #[test]
    fn spanning_tree_baseline() {
        assert_eq!(spanning_tree_colouring(&Graph::cycle(4)).unwrap().palette_size(), 3);
        assert_eq!(spanning_tree_colouring(&Graph::complete(4)).unwrap().palette_size(), 3);
        let p = spanning_tree_colouring(&Graph::path(5)).unwrap();
        assert_eq!(p.palette_size(), 4);
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_colouring(&split), Err(PaintError::Disconnected));
    }
}
