//! Batch runs of the construction with independent verification, one row
//! per input graph in input order.

use serde::Serialize;

use crate::checker::Checker;
use crate::exec::Execution;
use crate::graph::{to_graph6, Graph};
use crate::oracle::{rc_exact, OracleError};
use crate::painter::rainbow_colouring;

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    /// Cross-check against the exact oracle when `m` is at most this.
    pub exact_max_edges: usize,
    /// Colourings the oracle may test per graph.
    pub exact_budget: u64,
    pub exec: Execution,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { exact_max_edges: 10, exact_budget: 2_000_000, exec: Execution::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// Palette size of the construction, if it succeeded.
    pub colours: Option<usize>,
    pub ceil_half: usize,
    pub rc_exact: Option<usize>,
    pub ok: bool,
    /// Why the row failed, if it did.
    pub error: Option<String>,
}

impl SweepRow {
    pub const CSV_HEADER: &'static str = "n,m,colours,ceil_half,rc_exact,ok";

    pub fn to_csv(&self) -> String {
        let opt = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
        format!("{},{},{},{},{},{}", self.n, self.m, opt(self.colours), self.ceil_half, opt(self.rc_exact), self.ok)
    }
}

/// Colours, verifies and optionally cross-checks one graph.
pub fn sweep_one(g: &Graph, opts: &SweepOptions) -> SweepRow {
    let checker = Checker::default().execution(Execution::Sequential);
    let mut row = SweepRow {
        graph6: to_graph6(g),
        n: g.n(),
        m: g.m(),
        colours: None,
        ceil_half: g.n().div_ceil(2),
        rc_exact: None,
        ok: false,
        error: None,
    };
    let c = match rainbow_colouring(g) {
        Ok(c) => c,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    let k = c.palette_size();
    row.colours = Some(k);
    let verified = match checker.is_rainbow_connected(g, &c) {
        Ok(v) => v,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    if !verified {
        row.error = Some("colouring is not rainbow-connecting".into());
        return row;
    }
    if k > row.ceil_half {
        row.error = Some(format!("{k} colours exceed the bound {}", row.ceil_half));
        return row;
    }
    if g.m() <= opts.exact_max_edges {
        match rc_exact(g, opts.exact_budget, Execution::Sequential) {
            Ok(r) => {
                row.rc_exact = Some(r.rc);
                if r.rc > k {
                    row.error = Some(format!("oracle rc {} exceeds palette {k}", r.rc));
                    return row;
                }
            }
            Err(OracleError::BudgetExceeded { .. }) => {}
            Err(e) => {
                row.error = Some(e.to_string());
                return row;
            }
        }
    }
    row.ok = true;
    row
}

/// [`sweep_one`] over every graph, in parallel when `opts.exec` allows.
pub fn sweep(graphs: &[Graph], opts: &SweepOptions) -> Vec<SweepRow> {
    opts.exec.map(graphs, |g| sweep_one(g, opts))
}
