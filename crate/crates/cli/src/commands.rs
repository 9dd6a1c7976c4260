use std::fmt::Write as _;

use rainbow_core::checker::Checker;
use rainbow_core::colouring::{colouring_from_json, colouring_to_json};
use rainbow_core::graph::{diameter, to_edge_list, to_graph6};
use rainbow_core::oracle::{
    enumerate_two_connected_up_to_iso, enumerate_two_connected_with, lower_bound_family, random_two_connected,
    rc_exact, OracleError,
};
use rainbow_core::painter::{construct, Construction, Reduction};
use rainbow_core::sweep::{sweep as run_sweep, SweepOptions, SweepRow};
use rainbow_core::{Execution, Graph, PaintError};

use crate::dot::to_dot;
use crate::io::{deliver, parse_graph, read_graph, read_text, Failure, EXIT_PARSE};
use crate::{ColourArgs, Emit, ExactArgs, GenCommand, GenOutput, GraphFormat, OutFormat, SweepArgs, VerifyArgs};

const EXIT_NOT_RAINBOW: u8 = 1;
const EXIT_NOT_TWO_CONNECTED: u8 = 3;
const EXIT_VERIFICATION: u8 = 4;
const EXIT_BUDGET: u8 = 5;

fn finish(result: Result<u8, Failure>) -> u8 {
    result.unwrap_or_else(|f| {
        eprintln!("error: {}", f.message);
        f.code
    })
}

pub fn colour(args: &ColourArgs, exec: Execution) -> u8 {
    finish(colour_inner(args, exec))
}

fn colour_inner(args: &ColourArgs, exec: Execution) -> Result<u8, Failure> {
    let g = read_graph(&args.input)?;
    let con = construct(&g).map_err(|e| match e {
        PaintError::NotTwoConnected | PaintError::Disconnected => Failure::new(EXIT_NOT_TWO_CONNECTED, e.to_string()),
        other => Failure::new(EXIT_VERIFICATION, format!("construction failed: {other}")),
    })?;
    let c = &con.colouring;
    let report = Checker::default()
        .execution(exec)
        .verify_certificate(&g, c, false)
        .map_err(|e| Failure::new(EXIT_VERIFICATION, format!("verification did not finish: {e}")))?;
    let verified = report.rc_ok && report.bound_ok;
    let summary = format!(
        "n={} m={} colours={} bound={} verified={verified}",
        g.n(),
        g.m(),
        report.colours,
        report.ceil_half
    );
    let artefact = match args.emit {
        Emit::Json => colouring_to_json(&g, c),
        Emit::Dot => to_dot(&g, Some(c)),
        Emit::Trace => trace(&g, &con),
    };
    deliver(&args.output, &artefact, &summary)?;
    if !verified {
        return Err(Failure::new(EXIT_VERIFICATION, "the constructed colouring failed verification"));
    }
    Ok(0)
}

fn path_label(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join("-")
}

/// Core history, then one line per bridge and the reduction applied.
fn trace(g: &Graph, con: &Construction) -> String {
    let Some(hs) = &con.hstar else {
        return format!("odd cycle length={}\ncolours={}\n", g.n(), con.colouring.palette_size());
    };
    let mut out = hs.trace();
    if !out.ends_with('\n') {
        out.push('\n');
    }
    for (j, b) in con.bridges.iter().enumerate() {
        let paths: Vec<String> = b.info.path_seq.paths.iter().map(|p| path_label(p.vertices())).collect();
        let _ = writeln!(out, "bridge {j} u={} v={} paths={}", b.info.u, b.info.v, paths.join("|"));
    }
    let _ = match &con.reduction {
        Reduction::None => writeln!(out, "reduction none"),
        Reduction::SingleBridge { edge, colour } => writeln!(out, "reduction single edge={edge} colour={}", colour.0),
        Reduction::TwoBridges(ch) => writeln!(
            out,
            "reduction pair path={} delta={} reversed={}",
            path_label(ch.path.vertices()),
            ch.delta.0,
            ch.reversed
        ),
    };
    let _ = writeln!(out, "colours={}", con.colouring.palette_size());
    out
}

pub fn verify(args: &VerifyArgs, exec: Execution) -> u8 {
    finish(verify_inner(args, exec))
}

fn verify_inner(args: &VerifyArgs, exec: Execution) -> Result<u8, Failure> {
    let g = read_graph(&args.input)?;
    let text = read_text(&args.colouring.to_string_lossy())?;
    let c = colouring_from_json(&g, &text).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    let report = Checker::default()
        .execution(exec)
        .verify_certificate(&g, &c, args.witnesses)
        .map_err(|e| Failure::new(EXIT_BUDGET, e.to_string()))?;
    let summary = format!(
        "n={} m={} colours={} bound={} rainbow={} safe={}",
        report.n, report.m, report.colours, report.ceil_half, report.rc_ok, report.safe
    );
    let json = serde_json::to_string_pretty(&report).expect("report serialises");
    deliver(&args.output, &json, &summary)?;
    Ok(if report.rc_ok { 0 } else { EXIT_NOT_RAINBOW })
}

pub fn exact(args: &ExactArgs, exec: Execution) -> u8 {
    finish(exact_inner(args, exec))
}

fn exact_inner(args: &ExactArgs, exec: Execution) -> Result<u8, Failure> {
    let g = read_graph(&args.input)?;
    let diam = diameter(&g).map_or_else(|| "none".to_string(), |d| d.to_string());
    match rc_exact(&g, args.budget, exec) {
        Ok(r) => {
            let summary = format!("rc={} lower={} tested={}", r.rc, r.lower_bound_used, r.colourings_tested);
            deliver(&args.output, &colouring_to_json(&g, &r.witness), &summary)?;
            Ok(0)
        }
        Err(OracleError::BudgetExceeded { lower, upper }) => {
            println!("rc=[{lower},{upper}] lower={diam} tested={}", args.budget);
            Err(Failure::new(EXIT_BUDGET, format!("budget of {} colourings exhausted", args.budget)))
        }
        Err(e @ OracleError::Disconnected) => Err(Failure::new(EXIT_NOT_TWO_CONNECTED, e.to_string())),
        Err(e) => Err(Failure::new(EXIT_PARSE, e.to_string())),
    }
}

fn render(g: &Graph, format: OutFormat) -> String {
    match format {
        OutFormat::Edgelist => to_edge_list(g),
        OutFormat::Graph6 => format!("{}\n", to_graph6(g)),
        OutFormat::Dot => to_dot(g, None),
    }
}

pub fn gen(cmd: &GenCommand, exec: Execution) -> u8 {
    finish(gen_inner(cmd, exec))
}

fn gen_inner(cmd: &GenCommand, exec: Execution) -> Result<u8, Failure> {
    match cmd {
        GenCommand::Family { k, ell, out: GenOutput { format, output } } => {
            let g = lower_bound_family(*k, *ell).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
            let diam = diameter(&g).expect("family is connected");
            let summary = format!("n={} diam={diam} rc_lower={}", g.n(), (g.n() - 2) / k + 1);
            deliver(output, &render(&g, *format), &summary)?;
        }
        GenCommand::Random { n, extra, seed, out: GenOutput { format, output } } => {
            if *n < 3 {
                return Err(Failure::new(EXIT_PARSE, "a 2-connected graph needs at least 3 vertices"));
            }
            let g = random_two_connected(*n, *extra, *seed);
            deliver(output, &render(&g, *format), &format!("n={} m={} seed={seed}", g.n(), g.m()))?;
        }
        GenCommand::TwoConnected { n, labelled, output } => {
            let graphs =
                if *labelled { enumerate_two_connected_with(*n, exec) } else { enumerate_two_connected_up_to_iso(*n) };
            let mut text = String::new();
            for g in &graphs {
                let _ = writeln!(text, "{}", to_graph6(g));
            }
            deliver(output, &text, &format!("n={n} count={}", graphs.len()))?;
        }
    }
    Ok(0)
}

pub fn sweep(args: &SweepArgs, exec: Execution) -> u8 {
    finish(sweep_inner(args, exec))
}

fn sweep_inner(args: &SweepArgs, exec: Execution) -> Result<u8, Failure> {
    let mut graphs = Vec::new();
    if let Some(input) = &args.input {
        for (i, line) in read_text(input)?.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let g = parse_graph(line, GraphFormat::Graph6)
                .map_err(|f| Failure::new(f.code, format!("line {}: {}", i + 1, f.message)))?;
            graphs.push(g);
        }
    } else if args.n_max > 0 {
        for n in args.n_min.max(3)..=args.n_max {
            if args.labelled {
                graphs.extend(enumerate_two_connected_with(n, exec));
            } else {
                graphs.extend(enumerate_two_connected_up_to_iso(n));
            }
        }
    }
    if args.random > 0 {
        if args.random_n < 3 {
            return Err(Failure::new(EXIT_PARSE, "random instances need at least 3 vertices"));
        }
        for i in 0..args.random as u64 {
            graphs.push(random_two_connected(args.random_n, 1 + (i % 5) as usize, args.seed.wrapping_add(i)));
        }
    }
    let opts = SweepOptions { exact_max_edges: args.exact_max_edges, exact_budget: args.budget, exec };
    let rows = run_sweep(&graphs, &opts);
    let mut csv = format!("{}\n", SweepRow::CSV_HEADER);
    for row in &rows {
        let _ = writeln!(csv, "{}", row.to_csv());
    }
    let failed: Vec<&SweepRow> = rows.iter().filter(|r| !r.ok).collect();
    for row in &failed {
        eprintln!("FAIL {} {}", row.graph6, row.error.as_deref().unwrap_or("unknown"));
    }
    let summary = format!("rows={} ok={} failed={}", rows.len(), rows.len() - failed.len(), failed.len());
    deliver(&args.output, &csv, &summary)?;
    Ok(if failed.is_empty() { 0 } else { EXIT_VERIFICATION })
}
