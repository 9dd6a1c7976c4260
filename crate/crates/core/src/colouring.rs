//! Edge colourings, colour roles and their JSON form.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColourId(pub u32);

impl ColourId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for ColourId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Distinguished colours tracked through the construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Roles {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma: Option<ColourId>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<ColourId>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<ColourId>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<ColourId>,
}

impl Roles {
    fn map(self, f: impl Fn(ColourId) -> Option<ColourId>) -> Roles {
        Roles {
            gamma: self.gamma.and_then(&f),
            alpha: self.alpha.and_then(&f),
            beta: self.beta.and_then(&f),
            delta: self.delta.and_then(&f),
        }
    }
}

/// A (possibly partial) colouring of the edges of a host graph.
///
/// Uncoloured edges are absent from the governed subgraph: checkers only look
/// at coloured edges and the vertices they touch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    assignment: Vec<Option<ColourId>>,
    roles: Roles,
}

impl Colouring {
    /// Nothing coloured yet.
    pub fn empty(m: usize) -> Self {
        Colouring { assignment: vec![None; m], roles: Roles::default() }
    }

    pub fn from_total(colours: impl IntoIterator<Item = u32>) -> Self {
        Colouring {
            assignment: colours.into_iter().map(|c| Some(ColourId(c))).collect(),
            roles: Roles::default(),
        }
    }

    #[inline]
    pub fn get(&self, e: usize) -> Option<ColourId> {
        self.assignment[e]
    }

    #[inline]
    pub fn set(&mut self, e: usize, c: ColourId) {
        self.assignment[e] = Some(c);
    }

    pub fn clear(&mut self, e: usize) {
        self.assignment[e] = None;
    }

    /// Number of edge slots (the host's `m`).
    #[inline]
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    pub fn assignment(&self) -> &[Option<ColourId>] {
        &self.assignment
    }

    pub fn coloured_edges(&self) -> impl Iterator<Item = (usize, ColourId)> + '_ {
        self.assignment.iter().enumerate().filter_map(|(e, c)| c.map(|c| (e, c)))
    }

    /// The image of the colouring.
    pub fn palette(&self) -> BTreeSet<ColourId> {
        self.assignment.iter().flatten().copied().collect()
    }

    pub fn palette_size(&self) -> usize {
        self.palette().len()
    }

    /// One past the largest colour id in use.
    pub fn id_bound(&self) -> usize {
        self.assignment.iter().flatten().map(|c| c.index() + 1).max().unwrap_or(0)
    }

    #[inline]
    pub fn roles(&self) -> &Roles {
        &self.roles
    }

    #[inline]
    pub fn roles_mut(&mut self) -> &mut Roles {
        &mut self.roles
    }

    /// Relabels colours `0..K` in order of first occurrence along the edge
    /// indices. Roles follow their colours; a role whose colour vanished is
    /// dropped.
    pub fn canonicalised(&self) -> Colouring {
        let mut relabel: HashMap<ColourId, ColourId> = HashMap::new();
        let assignment = self
            .assignment
            .iter()
            .map(|c| {
                c.map(|c| {
                    let next = ColourId(relabel.len() as u32);
                    *relabel.entry(c).or_insert(next)
                })
            })
            .collect();
        let roles = self.roles.map(|c| relabel.get(&c).copied());
        Colouring { assignment, roles }
    }
}

/// Monotone source of colours never handed out before.
#[derive(Clone, Debug, Default)]
pub struct ColourAllocator {
    next: u32,
}

impl ColourAllocator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts above every colour already used by `c`.
    pub fn above(c: &Colouring) -> Self {
        ColourAllocator { next: c.id_bound() as u32 }
    }

    pub fn fresh(&mut self) -> ColourId {
        let c = ColourId(self.next);
        self.next += 1;
        c
    }

    pub fn fresh_many(&mut self, k: usize) -> Vec<ColourId> {
        (0..k).map(|_| self.fresh()).collect()
    }

    pub fn issued(&self) -> usize {
        self.next as usize
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColouringFileError {
    #[error("invalid colouring JSON: {0}")]
    Json(String),
    #[error("edge index `{0}` is not an integer in range")]
    BadEdgeIndex(String),
    #[error("edge {0} has no colour")]
    MissingEdge(usize),
    #[error("edge {index} is {found:?} in the colouring file but {expected:?} in the graph")]
    EdgeMismatch { index: usize, expected: (usize, usize), found: (usize, usize) },
}

/// On-disk form: `{"n":..,"m":..,"edges":[[u,v],..],"colours":{"0":c,..},"roles":{..}}`.
/// `n`, `m` and `edges` are informational; `edges`, when present, is checked
/// against the graph.
#[derive(Debug, Serialize, Deserialize)]
struct ColouringDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<(usize, usize)>>,
    colours: BTreeMap<String, u32>,
    #[serde(default)]
    roles: Roles,
}

pub fn colouring_to_json(g: &Graph, c: &Colouring) -> String {
    let mut colours: Vec<(usize, u32)> = c.coloured_edges().map(|(e, c)| (e, c.0)).collect();
    colours.sort_unstable();
    let doc = ColouringDoc {
        n: Some(g.n()),
        m: Some(g.m()),
        edges: Some(g.edges().to_vec()),
        colours: colours.into_iter().map(|(e, c)| (e.to_string(), c)).collect(),
        roles: *c.roles(),
    };
    serde_json::to_string_pretty(&doc).expect("colouring serialises")
}

/// Reads a total colouring of `g`; every edge index must be present.
pub fn colouring_from_json(g: &Graph, text: &str) -> Result<Colouring, ColouringFileError> {
    let doc: ColouringDoc =
        serde_json::from_str(text).map_err(|e| ColouringFileError::Json(e.to_string()))?;
    if let Some(edges) = &doc.edges {
        for (index, (&found, &expected)) in edges.iter().zip(g.edges()).enumerate() {
            let found = (found.0.min(found.1), found.0.max(found.1));
            if found != expected {
                return Err(ColouringFileError::EdgeMismatch { index, expected, found });
            }
        }
    }
    let mut c = Colouring::empty(g.m());
    for (key, &colour) in &doc.colours {
        let e: usize = key
            .parse()
            .ok()
            .filter(|&e| e < g.m())
            .ok_or_else(|| ColouringFileError::BadEdgeIndex(key.clone()))?;
        c.set(e, ColourId(colour));
    }
    if let Some(e) = (0..g.m()).find(|&e| c.get(e).is_none()) {
        return Err(ColouringFileError::MissingEdge(e));
    }
    *c.roles_mut() = doc.roles;
    Ok(c)
}
