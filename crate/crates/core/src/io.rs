//! Plain-text formats.
//!
//! Graph: `#` starts a comment, the first data line is `n m`, then exactly
//! `m` lines `u v` with 0-based ids; an arc of multiplicity `c` is written as
//! `c` identical lines. Feedback arc sets use the same arc lines without a
//! header. An ordering is one line of space-separated ids. A trace has one
//! record per line:
//!
//! ```text
//! G2B k=0 focus=1,0,2 removed=(0 1)(1 2) added=(0 2)
//! ```

use std::fmt::Write as _;

use crate::error::{FasError, Result};
use crate::graph::{ArcMultiset, FeedbackArcSet, Ordering, OrientedMultigraph, VertexId};
use crate::reduce::{ReductionRecord, ReductionTrace};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_err(line: usize, reason: impl Into<String>) -> FasError {
    FasError::Parse {
        line,
        reason: reason.into(),
    }
}

fn two_numbers(line: usize, s: &str) -> Result<(usize, usize)> {
    let mut it = s.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line, format!("{what} `{tok}` is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(parse_err(line, format!("unexpected field `{extra}`")));
    }
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<OrientedMultigraph> {
    let mut lines = data_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(hline, header)?;
    let mut g = OrientedMultigraph::new(n);
    let mut last = hline;
    for (line, s) in lines {
        last = line;
        if g.arc_count() == m {
            return Err(parse_err(line, format!("more than {m} arc lines")));
        }
        let (u, v) = two_numbers(line, s)?;
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex id out of range 0..{n}")));
        }
        g.add_arc(VertexId(u), VertexId(v), 1)?;
    }
    if g.arc_count() != m {
        return Err(parse_err(
            last,
            format!("expected {m} arcs, found {}", g.arc_count()),
        ));
    }
    Ok(g)
}

/// Canonical text: inactive ids are squeezed out and arcs sorted.
pub fn write_graph(g: &OrientedMultigraph) -> String {
    let g = g.compacted();
    let mut out = format!("{} {}\n", g.vertex_count(), g.arc_count());
    out.push_str(&arc_lines(g.arcs()));
    out
}

fn arc_lines(arcs: impl Iterator<Item = (VertexId, VertexId, u32)>) -> String {
    let mut out = String::new();
    for (u, v, c) in arcs {
        for _ in 0..c {
            writeln!(out, "{u} {v}").unwrap();
        }
    }
    out
}

pub fn parse_fas(text: &str) -> Result<FeedbackArcSet> {
    let mut fas = ArcMultiset::new();
    for (line, s) in data_lines(text) {
        let (u, v) = two_numbers(line, s)?;
        fas.insert(VertexId(u), VertexId(v), 1);
    }
    Ok(fas)
}

pub fn write_fas(fas: &FeedbackArcSet) -> String {
    arc_lines(fas.iter())
}

pub fn parse_ordering(text: &str) -> Result<Ordering> {
    let mut seq = Vec::new();
    for (line, s) in data_lines(text) {
        for tok in s.split_whitespace() {
            let id = tok
                .parse()
                .map_err(|_| parse_err(line, format!("`{tok}` is not a vertex id")))?;
            seq.push(VertexId(id));
        }
    }
    Ordering::new(seq)
}

pub fn write_ordering(ord: &Ordering) -> String {
    let ids: Vec<String> = ord.as_slice().iter().map(|v| v.to_string()).collect();
    format!("{}\n", ids.join(" "))
}

fn arc_list(set: &ArcMultiset) -> String {
    let mut out = String::new();
    for (u, v, c) in set.iter() {
        for _ in 0..c {
            write!(out, "({u} {v})").unwrap();
        }
    }
    out
}

pub fn write_record(r: &ReductionRecord) -> String {
    let focus: Vec<String> = r.focus.iter().map(|v| v.to_string()).collect();
    format!(
        "{} k={} focus={} removed={} added={}",
        r.kind,
        r.k,
        focus.join(","),
        arc_list(&r.removed),
        arc_list(&r.added)
    )
}

pub fn write_trace(trace: &ReductionTrace) -> String {
    trace.records.iter().map(|r| write_record(r) + "\n").collect()
}
