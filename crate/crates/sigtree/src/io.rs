//! Plain-text tree inputs.
//!
//! Edge lists: the first non-empty line is `n`, then one `u v` pair per line
//! (0-based, whitespace separated). Lines starting with `#` are ignored.
//! Prüfer sequences: comma-separated integers, `n` = length + 2.

use std::fmt::Write as _;
use std::path::Path;

use sigtree_core::{prufer_decode, PruferSequence, Tree};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("empty edge list")]
    Empty,
    #[error("bad Prüfer symbol {0:?}")]
    PruferSymbol(String),
    #[error(transparent)]
    Tree(#[from] sigtree_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub fn parse_edge_list(text: &str) -> Result<Tree, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, first) = lines.next().ok_or(FormatError::Empty)?;
    let n: usize = first.parse().map_err(|_| FormatError::Syntax {
        line,
        msg: format!("expected vertex count, found {first:?}"),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = fields.as_slice() else {
            return Err(FormatError::Syntax {
                line,
                msg: format!("expected `u v`, found {l:?}"),
            });
        };
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| FormatError::Syntax {
                line,
                msg: format!("{s:?} is not a vertex label"),
            })
        };
        edges.push((parse(u)?, parse(v)?));
    }
    Ok(Tree::from_edges(n, edges)?)
}

pub fn read_edge_list(path: &Path) -> Result<Tree, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_edge_list(&text)
}

pub fn format_edge_list(t: &Tree) -> String {
    let mut out = format!("{}\n", t.n());
    for (u, v) in t.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_prufer(text: &str) -> Result<PruferSequence, FormatError> {
    let text = text.trim();
    let symbols = if text.is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|s| {
                let s = s.trim();
                s.parse::<usize>()
                    .map_err(|_| FormatError::PruferSymbol(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(PruferSequence::from_symbols(symbols)?)
}

pub fn tree_from_prufer(text: &str) -> Result<Tree, FormatError> {
    Ok(prufer_decode(&parse_prufer(text)?))
}

pub fn format_prufer(seq: &PruferSequence) -> String {
    seq.symbols()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
