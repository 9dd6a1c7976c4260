//! Exhaustive rainbow-path search and the predicates built on it:
//! rainbow-connectedness, blocked pairs and safety, groundedness of a
//! bridge colouring, and a serialisable verification report.
//!
//! Only coloured edges exist for the checker, so a partial colouring
//! describes the subgraph it governs.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::colouring::{ColourId, Colouring};
use crate::exec::Execution;
use crate::graph::{Graph, VPath};
use crate::structure::{BridgeInfo, SubgraphState};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("search expanded more than {budget} nodes")]
pub struct BudgetExceeded {
    pub budget: u64,
}

/// Constraints on a sought rainbow path.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RainbowQuery {
    pub source: usize,
    pub target: usize,
    pub forbidden: BTreeSet<ColourId>,
    /// The path must miss at least one colour of this set.
    pub must_avoid_one_of: Option<BTreeSet<ColourId>>,
    /// Only these edge indices may be used.
    pub restrict_edges: Option<BTreeSet<usize>>,
}

impl RainbowQuery {
    pub fn new(source: usize, target: usize) -> Self {
        RainbowQuery { source, target, ..Default::default() }
    }

    pub fn forbid(mut self, colours: impl IntoIterator<Item = ColourId>) -> Self {
        self.forbidden.extend(colours);
        self
    }

    pub fn missing_one_of(mut self, colours: impl IntoIterator<Item = ColourId>) -> Self {
        self.must_avoid_one_of = Some(colours.into_iter().collect());
        self
    }

    pub fn within(mut self, edges: impl IntoIterator<Item = usize>) -> Self {
        self.restrict_edges = Some(edges.into_iter().collect());
        self
    }
}

/// Vertices a colouring blocks for each vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SafetyReport {
    /// `blocked[x]`: every rainbow path from `x` to each listed `y` uses the
    /// whole palette.
    pub blocked: BTreeMap<usize, BTreeSet<usize>>,
    /// Ordered pairs with no rainbow path at all.
    pub unreachable: Vec<(usize, usize)>,
    pub safe: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub x: usize,
    pub y: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub x: usize,
    pub y: usize,
    pub path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub n: usize,
    pub m: usize,
    pub colours: usize,
    pub ceil_half: usize,
    pub bound_ok: bool,
    pub rc_ok: bool,
    pub safe: bool,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Witness>>,
}

/// Search state shared by the depth-first enumerators.
struct Search<'a> {
    g: &'a Graph,
    colour: Vec<Option<usize>>,
    allowed: Vec<bool>,
    used: Vec<bool>,
    on_path: Vec<bool>,
    stack: Vec<usize>,
    expanded: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, c: &Colouring, budget: u64, allowed: Option<&BTreeSet<usize>>) -> Self {
        let width = c.id_bound();
        Search {
            g,
            colour: (0..g.m()).map(|e| c.get(e).map(ColourId::index)).collect(),
            allowed: (0..g.m()).map(|e| allowed.is_none_or(|s| s.contains(&e))).collect(),
            used: vec![false; width],
            on_path: vec![false; g.n()],
            stack: Vec::new(),
            expanded: 0,
            budget,
        }
    }

    fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.expanded += 1;
        if self.expanded > self.budget {
            Err(BudgetExceeded { budget: self.budget })
        } else {
            Ok(())
        }
    }

    /// Depth-first walk over all rainbow paths from the vertex on top of the
    /// stack. `visit` sees each path (as the stack) and returns true to stop.
    fn walk(
        &mut self,
        max_len: usize,
        visit: &mut dyn FnMut(&[usize], &[bool]) -> bool,
    ) -> Result<bool, BudgetExceeded> {
        self.tick()?;
        if visit(&self.stack, &self.used) {
            return Ok(true);
        }
        if self.stack.len() > max_len {
            return Ok(false);
        }
        let x = *self.stack.last().unwrap();
        let g = self.g;
        for &(y, e) in g.neighbours(x) {
            let Some(col) = self.colour[e] else { continue };
            if !self.allowed[e] || self.used[col] || self.on_path[y] {
                continue;
            }
            self.used[col] = true;
            self.on_path[y] = true;
            self.stack.push(y);
            let stop = self.walk(max_len, visit)?;
            self.stack.pop();
            self.on_path[y] = false;
            self.used[col] = false;
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn start(&mut self, s: usize) {
        self.stack.clear();
        self.stack.push(s);
        self.on_path.iter_mut().for_each(|b| *b = false);
        self.used.iter_mut().for_each(|b| *b = false);
        self.on_path[s] = true;
    }
}

/// Vertices incident to a coloured edge.
fn governed_vertices(g: &Graph, c: &Colouring) -> Vec<usize> {
    let mut touched = vec![false; g.n()];
    for (e, _) in c.coloured_edges() {
        let (a, b) = g.edge(e);
        touched[a] = true;
        touched[b] = true;
    }
    (0..g.n()).filter(|&v| touched[v]).collect()
}

/// Per-target outcome of enumerating all rainbow paths from one source.
struct Reach {
    any: Vec<bool>,
    short: Vec<bool>,
    witness: Vec<Option<Vec<usize>>>,
}

/// Configured entry point for all checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checker {
    /// Node expansions allowed per single-source search.
    pub budget: u64,
    pub exec: Execution,
}

impl Default for Checker {
    fn default() -> Self {
        Checker { budget: DEFAULT_BUDGET, exec: Execution::default() }
    }
}

impl Checker {
    pub fn with_budget(budget: u64) -> Self {
        Checker { budget, ..Self::default() }
    }

    pub fn execution(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    /// First rainbow path (neighbours in ascending order) meeting `q`.
    pub fn find_rainbow_path(&self, g: &Graph, c: &Colouring, q: &RainbowQuery) -> Result<Option<VPath>, BudgetExceeded> {
        if q.source == q.target {
            return Ok(Some(VPath::trivial(q.source)));
        }
        let mut s = Search::new(g, c, self.budget, q.restrict_edges.as_ref());
        for col in &q.forbidden {
            if col.index() < s.used.len() {
                s.used[col.index()] = true;
            }
        }
        let forbidden_mask = s.used.clone();
        let avoid: Option<Vec<usize>> = q
            .must_avoid_one_of
            .as_ref()
            .map(|set| set.iter().map(|c| c.index()).collect());
        s.stack.push(q.source);
        s.on_path[q.source] = true;
        let target = q.target;
        let mut found = None;
        s.walk(usize::MAX, &mut |stack, used| {
            if *stack.last().unwrap() != target {
                return false;
            }
            let ok = avoid.as_ref().is_none_or(|set| {
                set.iter().any(|&col| col >= used.len() || !used[col] || forbidden_mask[col])
            });
            if ok {
                found = Some(stack.to_vec());
            }
            ok
        })?;
        Ok(found.map(|vs| VPath::from_vertices(g, &vs).expect("search follows edges")))
    }

    /// All rainbow paths from `s`, noting for each target whether some path
    /// reaches it and whether some path shorter than `short_below` does.
    fn reach_from(&self, g: &Graph, c: &Colouring, s: usize, short_below: usize, targets: &[usize], keep_witness: bool) -> Result<Reach, BudgetExceeded> {
        let n = g.n();
        let mut reach = Reach { any: vec![false; n], short: vec![false; n], witness: vec![None; n] };
        let mut wanted = vec![false; n];
        for &t in targets {
            if t != s {
                wanted[t] = true;
            }
        }
        let mut remaining = wanted.iter().filter(|&&w| w).count();
        if remaining == 0 {
            return Ok(reach);
        }
        let mut search = Search::new(g, c, self.budget, None);
        search.start(s);
        let max_len = c.palette_size();
        search.walk(max_len, &mut |stack, _| {
            let y = *stack.last().unwrap();
            if !wanted[y] {
                return false;
            }
            if !reach.any[y] {
                reach.any[y] = true;
                if keep_witness {
                    reach.witness[y] = Some(stack.to_vec());
                }
            }
            if !reach.short[y] && stack.len() - 1 < short_below {
                reach.short[y] = true;
                remaining -= 1;
            }
            remaining == 0
        })?;
        Ok(reach)
    }

    /// Every pair of vertices touched by the colouring is joined by a rainbow path.
    pub fn is_rainbow_connected(&self, g: &Graph, c: &Colouring) -> Result<bool, BudgetExceeded> {
        let verts = governed_vertices(g, c);
        let results = self.exec.map(&verts, |&s| {
            // every reached target counts as short, so the walk stops once all are reached
            let reach = self.reach_from(g, c, s, usize::MAX, &verts, false)?;
            Ok(verts.iter().all(|&t| t == s || reach.any[t]))
        });
        results.into_iter().try_fold(true, |acc, r: Result<bool, BudgetExceeded>| Ok(acc && r?))
    }

    /// Blocked partners per vertex; pairs with no rainbow path are listed
    /// apart and do not count as blocked.
    pub fn safety_report(&self, g: &Graph, c: &Colouring) -> Result<SafetyReport, BudgetExceeded> {
        let verts = governed_vertices(g, c);
        let k = c.palette_size();
        let per_source = self.exec.map(&verts, |&s| self.reach_from(g, c, s, k, &verts, false));
        let mut report = SafetyReport { safe: true, ..Default::default() };
        for (&x, reach) in verts.iter().zip(per_source) {
            let reach = reach?;
            let mut blocked = BTreeSet::new();
            for &y in &verts {
                if y == x {
                    continue;
                }
                if !reach.any[y] {
                    report.unreachable.push((x, y));
                } else if !reach.short[y] {
                    blocked.insert(y);
                }
            }
            if blocked.len() > 1 {
                report.safe = false;
            }
            report.blocked.insert(x, blocked);
        }
        Ok(report)
    }

    /// Rainbow-connected with at most one blocked partner per vertex.
    pub fn is_safely_rainbow_connecting(&self, g: &Graph, c: &Colouring) -> Result<bool, BudgetExceeded> {
        let r = self.safety_report(g, c)?;
        Ok(r.safe && r.unreachable.is_empty())
    }

    /// Whether `c`, restricted to `H* ∪ B`, agrees with `cstar` on `H*` and
    /// meets both escape conditions at every bridge vertex off the core.
    ///
    /// Special colours are read from the roles of `c` (`α`, `β`) and
    /// `cstar` (`γ`).
    pub fn check_grounded(
        &self,
        g: &Graph,
        c: &Colouring,
        hstar: &SubgraphState,
        cstar: &Colouring,
        b: &BridgeInfo,
    ) -> Result<bool, BudgetExceeded> {
        let (Some(alpha), Some(beta), Some(gamma)) = (c.roles().alpha, c.roles().beta, cstar.roles().gamma) else {
            return Ok(false);
        };
        for e in hstar.edge_list() {
            if c.get(e) != cstar.get(e) {
                return Ok(false);
            }
        }
        let bridge_edges: BTreeSet<usize> = b.bridge.edges.iter().copied().collect();
        if bridge_edges.iter().any(|&e| c.get(e).is_none()) {
            return Ok(false);
        }
        // Only H* ∪ B is coloured for the search.
        let mut local = Colouring::empty(g.m());
        for e in hstar.edge_list().into_iter().chain(bridge_edges.iter().copied()) {
            local.set(e, c.get(e).unwrap());
        }
        let local_vertices = governed_vertices(g, &local);
        let off_core: Vec<usize> = b.bridge.vertices.iter().copied().filter(|&v| !hstar.contains_vertex(v)).collect();
        for &x in &off_core {
            let in_bridge = |target: usize, forbid: &[ColourId]| {
                RainbowQuery::new(x, target).forbid(forbid.iter().copied()).within(bridge_edges.iter().copied())
            };
            let mut a1 = false;
            for &w in &b.bridge.attachments {
                if self.find_rainbow_path(g, &local, &in_bridge(w, &[alpha, beta, gamma]))?.is_some() {
                    a1 = true;
                    break;
                }
            }
            if !a1 {
                a1 = self.find_rainbow_path(g, &local, &in_bridge(b.u, &[beta, gamma]))?.is_some()
                    && self.find_rainbow_path(g, &local, &in_bridge(b.v, &[alpha, gamma]))?.is_some();
            }
            if !a1 {
                return Ok(false);
            }
            for &y in &local_vertices {
                if y == x {
                    continue;
                }
                let inside = self.find_rainbow_path(g, &local, &in_bridge(y, &[]))?.is_some();
                if !inside && self.find_rainbow_path(g, &local, &RainbowQuery::new(x, y).forbid([beta]))?.is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Palette size against `⌈n/2⌉`, rainbow-connectedness with a failure
    /// per unjoined pair, and safety. Witness paths are kept on request.
    pub fn verify_certificate(&self, g: &Graph, c: &Colouring, witnesses: bool) -> Result<Report, BudgetExceeded> {
        let n = g.n();
        let ceil_half = n.div_ceil(2);
        let colours = c.palette_size();
        let mut failures = Vec::new();
        for e in 0..g.m() {
            if c.get(e).is_none() {
                let (x, y) = g.edge(e);
                failures.push(Failure { x, y, reason: format!("edge {e} is uncoloured") });
            }
        }
        let verts: Vec<usize> = (0..n).collect();
        let per_source = self.exec.map(&verts, |&s| self.reach_from(g, c, s, colours, &verts, witnesses));
        let mut safe = true;
        let mut found = Vec::new();
        for (x, reach) in per_source.into_iter().enumerate() {
            let reach = reach?;
            let mut blocked = 0;
            for y in 0..n {
                if y == x {
                    continue;
                }
                if !reach.any[y] {
                    if x < y {
                        failures.push(Failure { x, y, reason: "no rainbow path".into() });
                    }
                } else {
                    blocked += usize::from(!reach.short[y]);
                    if x < y {
                        if let Some(path) = &reach.witness[y] {
                            found.push(Witness { x, y, path: path.clone() });
                        }
                    }
                }
            }
            safe &= blocked <= 1;
        }
        let rc_ok = failures.is_empty();
        Ok(Report {
            n,
            m: g.m(),
            colours,
            ceil_half,
            bound_ok: colours <= ceil_half,
            rc_ok,
            safe: safe && rc_ok,
            failures,
            witnesses: witnesses.then_some(found),
        })
    }
}

/// [`Checker::find_rainbow_path`] with default settings.
pub fn find_rainbow_path(g: &Graph, c: &Colouring, q: &RainbowQuery) -> Result<Option<VPath>, BudgetExceeded> {
    Checker::default().find_rainbow_path(g, c, q)
}

/// [`Checker::is_rainbow_connected`] with default settings.
pub fn is_rainbow_connected(g: &Graph, c: &Colouring) -> Result<bool, BudgetExceeded> {
    Checker::default().is_rainbow_connected(g, c)
}

/// [`Checker::safety_report`] with default settings.
pub fn safety_report(g: &Graph, c: &Colouring) -> Result<SafetyReport, BudgetExceeded> {
    Checker::default().safety_report(g, c)
}

/// [`Checker::verify_certificate`] with default settings and no witnesses.
pub fn verify_certificate(g: &Graph, c: &Colouring) -> Result<Report, BudgetExceeded> {
    Checker::default().verify_certificate(g, c, false)
}
