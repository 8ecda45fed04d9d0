use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::{Quiver, Vertex};

/// Why a quiver is not in the mutation class of some `A_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AViolation {
    /// A cycle in the underlying graph that is not an oriented triangle.
    Cycle(Vec<Vertex>),
    ValencyTooHigh { vertex: Vertex, valency: usize },
    /// Valency 4 without two 3-cycles through the vertex.
    ValencyFour(Vertex),
    /// Valency 3 without a 3-cycle through the vertex.
    ValencyThree(Vertex),
}

impl fmt::Display for AViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AViolation::Cycle(c) if c.len() == 3 => {
                let vs: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                write!(f, "non-oriented 3-cycle on vertices {}", vs.join(" "))
            }
            AViolation::Cycle(c) => {
                let vs: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                write!(f, "non-trivial cycle of length {} ({})", c.len(), vs.join(" "))
            }
            AViolation::ValencyTooHigh { vertex, valency } => {
                write!(f, "vertex {vertex} has valency {valency} > 4")
            }
            AViolation::ValencyFour(v) => {
                write!(f, "vertex {v} has valency 4 but does not lie on two 3-cycles")
            }
            AViolation::ValencyThree(v) => {
                write!(f, "vertex {v} has valency 3 but does not lie on a 3-cycle")
            }
        }
    }
}

/// Checks the four membership conditions; `Ok(None)` means the quiver is in
/// the class.
pub fn check_mutation_class_a(q: &Quiver) -> Result<Option<AViolation>> {
    if !q.is_connected() {
        return Err(Error::Disconnected);
    }
    for block in blocks(q) {
        if block.len() <= 2 {
            continue;
        }
        let sub = q.induced(&block);
        if block.len() == 3 && sub.three_cycles().len() == 1 {
            continue;
        }
        return Ok(Some(AViolation::Cycle(long_cycle(&sub))));
    }
    let cycles = q.three_cycles();
    for &v in q.vertices() {
        let val = q.valency(v)?;
        let through = cycles.iter().filter(|c| c.contains(&v)).count();
        match val {
            0..=2 => {}
            3 if through == 1 => {}
            3 => return Ok(Some(AViolation::ValencyThree(v))),
            4 if through == 2 => {}
            4 => return Ok(Some(AViolation::ValencyFour(v))),
            _ => return Ok(Some(AViolation::ValencyTooHigh { vertex: v, valency: val })),
        }
    }
    Ok(None)
}

pub fn is_mutation_class_a(q: &Quiver) -> Result<bool> {
    check_mutation_class_a(q).map(|v| v.is_none())
}

/// Vertices of valency 1, or of valency 2 on a 3-cycle. A lone vertex also
/// counts, so that one-vertex attachments are allowed.
pub fn connecting_vertices(q: &Quiver) -> Result<BTreeSet<Vertex>> {
    if let Some(v) = check_mutation_class_a(q)? {
        return Err(Error::Precondition(format!("quiver is not in the type A class: {v}")));
    }
    let mut out = BTreeSet::new();
    for &v in q.vertices() {
        let ok = match q.valency(v)? {
            0 | 1 => true,
            2 => q.on_three_cycle(v),
            _ => false,
        };
        if ok {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Whether `q` is in the type A class and `v` is one of its connecting
/// vertices. Disconnected quivers fail.
pub(crate) fn attaches_at(q: &Quiver, v: Vertex) -> bool {
    q.is_connected() && connecting_vertices(q).is_ok_and(|cs| cs.contains(&v))
}

/// Vertex sets of the biconnected components of the underlying graph.
fn blocks(q: &Quiver) -> Vec<BTreeSet<Vertex>> {
    struct State<'a> {
        q: &'a Quiver,
        disc: Vec<(Vertex, usize)>,
        low: std::collections::BTreeMap<Vertex, usize>,
        stack: Vec<(Vertex, Vertex)>,
        out: Vec<BTreeSet<Vertex>>,
    }
    impl State<'_> {
        fn index(&self, v: Vertex) -> Option<usize> {
            self.disc.iter().find(|(w, _)| *w == v).map(|(_, d)| *d)
        }
        fn visit(&mut self, v: Vertex, parent: Option<Vertex>) {
            let d = self.disc.len();
            self.disc.push((v, d));
            self.low.insert(v, d);
            for w in self.q.neighbors(v) {
                if Some(w) == parent {
                    continue;
                }
                match self.index(w) {
                    None => {
                        self.stack.push((v, w));
                        self.visit(w, Some(v));
                        let lw = self.low[&w];
                        if lw < self.low[&v] {
                            self.low.insert(v, lw);
                        }
                        if lw >= d {
                            let mut block = BTreeSet::new();
                            while let Some((x, y)) = self.stack.pop() {
                                block.insert(x);
                                block.insert(y);
                                if (x, y) == (v, w) {
                                    break;
                                }
                            }
                            self.out.push(block);
                        }
                    }
                    Some(dw) if dw < d => {
                        self.stack.push((v, w));
                        if dw < self.low[&v] {
                            self.low.insert(v, dw);
                        }
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let mut st = State {
        q,
        disc: Vec::new(),
        low: Default::default(),
        stack: Vec::new(),
        out: Vec::new(),
    };
    for &v in q.vertices() {
        if st.index(v).is_none() {
            st.visit(v, None);
        }
    }
    st.out
}

/// A cycle in a 2-connected quiver with at least 4 vertices that has length
/// at least 4, or the triangle itself for a 3-vertex block.
fn long_cycle(block: &Quiver) -> Vec<Vertex> {
    let vs = block.vertices();
    if vs.len() == 3 {
        return vs.to_vec();
    }
    fn dfs(q: &Quiver, path: &mut Vec<Vertex>, best: &mut Option<Vec<Vertex>>) {
        if best.is_some() {
            return;
        }
        let last = *path.last().unwrap();
        for w in q.neighbors(last) {
            if w == path[0] && path.len() >= 4 {
                *best = Some(path.clone());
                return;
            }
            if !path.contains(&w) {
                path.push(w);
                dfs(q, path, best);
                path.pop();
                if best.is_some() {
                    return;
                }
            }
        }
    }
    let mut best = None;
    dfs(block, &mut vec![vs[0]], &mut best);
    best.unwrap_or_else(|| vs.to_vec())
}
