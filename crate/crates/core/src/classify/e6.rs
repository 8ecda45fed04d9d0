//! The 21 templates covering the mutation class of `E_6`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::format::parse_quiver_file;
use crate::quiver::{is_isomorphic, Arrow, Quiver, Vertex, VertexMap};
use crate::relations::Relation;

const DATA: &str = include_str!("../../data/e6_templates.txt");

#[derive(Clone, Debug)]
pub struct E6Template {
    pub index: usize,
    /// Directed arrows only.
    pub quiver: Quiver,
    /// Arrows of free orientation.
    pub edges: Vec<(Vertex, Vertex)>,
    pub relations: Vec<Relation>,
}

impl E6Template {
    /// The template with edge `i` oriented as listed iff bit `i` of `mask`
    /// is clear.
    pub fn oriented(&self, mask: u32) -> (Quiver, Vec<(Vertex, Vertex)>) {
        let mut arrows = self.quiver.arrows().to_vec();
        let mut chosen = Vec::with_capacity(self.edges.len());
        for (i, &(s, t)) in self.edges.iter().enumerate() {
            let (s, t) = if mask >> i & 1 == 0 { (s, t) } else { (t, s) };
            arrows.push(Arrow::new(format!("e{}", i + 1), s, t));
            chosen.push((s, t));
        }
        let q = Quiver::new(self.quiver.vertices().iter().copied(), arrows)
            .expect("template orientations are valid quivers");
        (q, chosen)
    }
}

/// A template match: `map` sends template vertices to the matched quiver's
/// vertices; `orientations` lists the template edges as oriented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E6Match {
    pub template: usize,
    pub map: VertexMap,
    pub orientations: Vec<(Vertex, Vertex)>,
}

fn load(text: &str) -> Result<Vec<E6Template>> {
    let mut sections: Vec<(usize, usize, String)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let toks: Vec<&str> = line.split('#').next().unwrap_or("").split_whitespace().collect();
        match toks.as_slice() {
            ["template", n] => {
                let n = n.parse::<usize>().map_err(|_| Error::Syntax {
                    line: i + 1,
                    msg: format!("bad template number `{n}`"),
                })?;
                sections.push((n, i + 1, String::new()));
            }
            ["version", _] if sections.is_empty() => {}
            [] => {}
            _ => {
                let Some((_, _, body)) = sections.last_mut() else {
                    return Err(Error::Syntax {
                        line: i + 1,
                        msg: "content before the first template".into(),
                    });
                };
                body.push_str(line);
                body.push('\n');
            }
        }
    }

    let mut out = Vec::with_capacity(sections.len());
    for (n, start, body) in sections {
        let mut edges = Vec::new();
        let mut rest = String::new();
        for line in body.lines() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if let ["edge", s, t] = toks.as_slice() {
                let parse = |x: &str| {
                    x.parse::<u32>().map(Vertex).map_err(|_| Error::Syntax {
                        line: start,
                        msg: format!("template {n}: bad edge endpoint `{x}`"),
                    })
                };
                edges.push((parse(s)?, parse(t)?));
            } else {
                rest.push_str(line);
                rest.push('\n');
            }
        }
        let file = parse_quiver_file(&rest).map_err(|e| Error::Syntax {
            line: start,
            msg: format!("template {n}: {e}"),
        })?;
        let t = E6Template {
            index: n,
            quiver: file.quiver,
            edges,
            relations: file.relations.unwrap_or_default(),
        };
        if t.quiver.n_vertices() != 6 || n != out.len() + 1 {
            return Err(Error::Syntax {
                line: start,
                msg: format!("template {n}: expected template {} on 6 vertices", out.len() + 1),
            });
        }
        out.push(t);
    }
    if out.len() != 21 {
        return Err(Error::Syntax {
            line: text.lines().count(),
            msg: format!("expected 21 templates, found {}", out.len()),
        });
    }
    Ok(out)
}

pub fn templates() -> &'static [E6Template] {
    static TEMPLATES: OnceLock<Vec<E6Template>> = OnceLock::new();
    TEMPLATES.get_or_init(|| load(DATA).expect("bundled template data is valid"))
}

/// Tries the templates in order and returns the first that matches.
pub fn match_e6(q: &Quiver) -> Option<E6Match> {
    if q.n_vertices() != 6 {
        return None;
    }
    for t in templates() {
        if t.quiver.n_arrows() + t.edges.len() != q.n_arrows() {
            continue;
        }
        for mask in 0..(1u32 << t.edges.len()) {
            let (oriented, orientations) = t.oriented(mask);
            if let Some(map) = is_isomorphic(&oriented, q) {
                return Some(E6Match {
                    template: t.index,
                    map,
                    orientations,
                });
            }
        }
    }
    None
}
