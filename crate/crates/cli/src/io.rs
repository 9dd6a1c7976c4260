use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use rainbow_core::graph::{parse_edge_list, parse_graph6};
use rainbow_core::Graph;

use crate::{GraphFormat, InputArgs};

/// A failed command: message for stderr and the exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

pub const EXIT_PARSE: u8 = 2;

pub fn read_text(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::new(EXIT_PARSE, format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::new(EXIT_PARSE, format!("{path}: {e}")))
    }
}

/// A single whitespace-free token outside comments reads as graph6.
fn looks_like_graph6(text: &str) -> bool {
    let mut tokens = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    matches!((tokens.next(), tokens.next()), (Some(t), None) if !t.contains(char::is_whitespace))
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, Failure> {
    let as_graph6 = match format {
        GraphFormat::Graph6 => true,
        GraphFormat::Edgelist => false,
        GraphFormat::Auto => looks_like_graph6(text),
    };
    let parsed = if as_graph6 { parse_graph6(text) } else { parse_edge_list(text) };
    parsed.map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))
}

pub fn read_graph(args: &InputArgs) -> Result<Graph, Failure> {
    parse_graph(&read_text(&args.input)?, args.format)
}

/// Routes an artefact and its one-line summary: with an output file the
/// artefact goes there and the summary to stdout; otherwise the artefact
/// takes stdout and the summary moves to stderr.
pub fn deliver(output: &Option<PathBuf>, artefact: &str, summary: &str) -> Result<(), Failure> {
    let io_err = |e: std::io::Error| Failure::new(1, format!("write failed: {e}"));
    match output {
        Some(path) => {
            fs::write(path, artefact).map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?;
            println!("{summary}");
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(artefact.as_bytes()).map_err(io_err)?;
            if !artefact.ends_with('\n') {
                out.write_all(b"\n").map_err(io_err)?;
            }
            out.flush().map_err(io_err)?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}
