//! Line helpers shared by the graph, hypergraph and sequence formats.

use crate::error::{Error, Result};

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_list(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected a non-negative integer, found `{tok}`"),
            })
        })
        .collect()
}

pub(crate) fn parse_fixed<const N: usize>(line_no: usize, line: &str) -> Result<[usize; N]> {
    let values = parse_list(line_no, line)?;
    values.try_into().map_err(|v: Vec<usize>| Error::Parse {
        line: line_no,
        message: format!("expected {N} integers, found {}", v.len()),
    })
}
