//! The line-oriented quiver file format.
//!
//! ```text
//! # comment
//! vertices 3
//! arrow a 1 2
//! arrow b 2 3
//! zero 1 2 3
//! comm 1 2 3 = 1 4 3
//! ```

use crate::error::{Error, Result};
use crate::quiver::{Arrow, Path, Quiver, Vertex};
use crate::relations::Relation;

/// A parsed file: the quiver, and its relations if any were listed.
#[derive(Clone, Debug)]
pub struct QuiverFile {
    pub quiver: Quiver,
    pub relations: Option<Vec<Relation>>,
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_vertex(tok: &str, line: usize) -> Result<Vertex> {
    tok.parse::<u32>()
        .map(Vertex)
        .map_err(|_| syntax(line, format!("expected a vertex number, found `{tok}`")))
}

fn parse_path(q: &Quiver, toks: &[&str], line: usize) -> Result<Path> {
    let vs = toks
        .iter()
        .map(|t| parse_vertex(t, line))
        .collect::<Result<Vec<_>>>()?;
    Path::new(q, vs).map_err(|e| syntax(line, e.to_string()))
}

/// Parses a whole file. Structural violations (loops, 2-cycles, parallel
/// arrows, duplicates) are reported with their own error variants.
pub fn parse_quiver_file(text: &str) -> Result<QuiverFile> {
    let mut n: Option<u32> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut pending: Vec<(usize, Vec<&str>)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some((&head, rest)) = toks.split_first() else {
            continue;
        };
        if n.is_none() && head != "vertices" {
            return Err(syntax(line, "the first directive must be `vertices N`"));
        }
        match head {
            "vertices" => {
                if n.is_some() {
                    return Err(syntax(line, "repeated `vertices` directive"));
                }
                let [count] = rest else {
                    return Err(syntax(line, "usage: vertices N"));
                };
                let count = count
                    .parse::<u32>()
                    .map_err(|_| syntax(line, format!("bad vertex count `{count}`")))?;
                n = Some(count);
            }
            "arrow" => {
                let [name, s, t] = rest else {
                    return Err(syntax(line, "usage: arrow NAME S T"));
                };
                if name.contains('=') {
                    return Err(syntax(line, format!("bad arrow name `{name}`")));
                }
                arrows.push(Arrow::new(*name, parse_vertex(s, line)?, parse_vertex(t, line)?));
            }
            "zero" | "comm" => pending.push((line, toks)),
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }

    let n = n.ok_or_else(|| syntax(text.lines().count().max(1), "missing `vertices N`"))?;
    let quiver = Quiver::new((1..=n).map(Vertex), arrows)?;

    if pending.is_empty() {
        return Ok(QuiverFile {
            quiver,
            relations: None,
        });
    }
    let mut relations = Vec::with_capacity(pending.len());
    for (line, toks) in pending {
        let rel = match toks[0] {
            "zero" => {
                if toks.len() < 4 {
                    return Err(syntax(line, "a zero relation lists at least 3 vertices"));
                }
                Relation::zero(parse_path(&quiver, &toks[1..], line)?)
            }
            _ => {
                let eq = toks
                    .iter()
                    .position(|t| *t == "=")
                    .ok_or_else(|| syntax(line, "usage: comm V1 ... Vk = W1 ... Wm"))?;
                let p = parse_path(&quiver, &toks[1..eq], line)?;
                let q = parse_path(&quiver, &toks[eq + 1..], line)?;
                Relation::comm(p, q)
            }
        };
        relations.push(rel.map_err(|e| syntax(line, e.to_string()))?);
    }
    Ok(QuiverFile {
        quiver,
        relations: Some(relations),
    })
}

pub fn parse_quiver(text: &str) -> Result<Quiver> {
    parse_quiver_file(text).map(|f| f.quiver)
}

/// Writes a quiver on vertices `1..=N`, optionally followed by relations.
pub fn write_quiver(q: &Quiver, relations: &[Relation]) -> Result<String> {
    let n = q.n_vertices() as u32;
    if q.vertices().iter().copied().ne((1..=n).map(Vertex)) {
        return Err(Error::Precondition(
            "the file format needs vertices numbered 1..N".into(),
        ));
    }
    let mut out = format!("vertices {n}\n");
    for a in q.arrows() {
        out.push_str(&format!("arrow {} {} {}\n", a.name, a.source, a.target));
    }
    for r in relations {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    Ok(out)
}
