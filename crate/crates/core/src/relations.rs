//! Zero and commutativity relations, and their generation per family.

use std::collections::BTreeSet;
use std::fmt;

use crate::classify::{classify, is_mutation_class_a, ClassKind, DWitness, E6Match};
use crate::classify::e6_templates;
use crate::error::{Error, Result};
use crate::format::QuiverFile;
use crate::quiver::{Path, Quiver, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// The path lies in the ideal.
    Zero(Path),
    /// The difference of the two paths lies in the ideal.
    Comm(Path, Path),
}

impl Relation {
    pub fn zero(p: Path) -> Result<Relation> {
        if p.len() < 2 {
            return Err(Error::InvalidRelation(format!("zero relation `{p}` has length < 2")));
        }
        Ok(Relation::Zero(p))
    }

    pub fn comm(p: Path, q: Path) -> Result<Relation> {
        if p.source() != q.source() || p.target() != q.target() {
            return Err(Error::InvalidRelation(format!("`{p}` and `{q}` have different endpoints")));
        }
        if p.len() < 2 || q.len() < 2 {
            return Err(Error::InvalidRelation(format!("`{p}` = `{q}` has a path of length < 2")));
        }
        if p == q {
            return Err(Error::InvalidRelation(format!("`{p}` is related to itself")));
        }
        Ok(Relation::Comm(p, q))
    }

    pub fn first(&self) -> &Path {
        match self {
            Relation::Zero(p) | Relation::Comm(p, _) => p,
        }
    }

    pub fn paths(&self) -> Vec<&Path> {
        match self {
            Relation::Zero(p) => vec![p],
            Relation::Comm(p, q) => vec![p, q],
        }
    }

    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Relation {
        match self {
            Relation::Zero(p) => Relation::Zero(p.map_vertices(&f)),
            Relation::Comm(p, q) => Relation::Comm(p.map_vertices(&f), q.map_vertices(&f)),
        }
    }

    /// Every path of the relation exists in `q`.
    pub fn valid_in(&self, q: &Quiver) -> bool {
        self.paths()
            .iter()
            .all(|p| Path::new(q, p.vertices().to_vec()).is_ok())
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Zero(p) => write!(f, "zero {p}"),
            Relation::Comm(p, q) => write!(f, "comm {p} = {q}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BoundQuiver {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl BoundQuiver {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        if let Some(r) = relations.iter().find(|r| !r.valid_in(&quiver)) {
            return Err(Error::InvalidRelation(format!("`{r}` is not a path relation of the quiver")));
        }
        Ok(BoundQuiver { quiver, relations })
    }

    pub fn free(quiver: Quiver) -> Self {
        BoundQuiver {
            quiver,
            relations: Vec::new(),
        }
    }
}

fn seq(vs: &[Vertex]) -> Path {
    Path::from_vertices_unchecked(vs.to_vec())
}

/// The three length-2 zero relations of each 3-cycle of `q`.
fn saturate(q: &Quiver) -> Vec<Relation> {
    let mut out = Vec::new();
    for [x, y, z] in q.three_cycles() {
        for w in [[x, y, z], [y, z, x], [z, x, y]] {
            out.push(Relation::Zero(seq(&w)));
        }
    }
    out
}

pub fn relations_a(q: &Quiver) -> Result<Vec<Relation>> {
    if !is_mutation_class_a(q)? {
        return Err(Error::Precondition("quiver is not in the type A class".into()));
    }
    Ok(saturate(q))
}

pub fn relations_d(q: &Quiver, w: &DWitness) -> Result<Vec<Relation>> {
    let mismatch = || Error::LabelMismatch(format!("witness {w:?} does not fit the quiver"));
    let need = |s: Vertex, t: Vertex| if q.has_arrow(s, t) { Ok(()) } else { Err(mismatch()) };
    let mut out = Vec::new();
    match w {
        DWitness::I { a, b, c } => {
            for x in [a, b] {
                if !q.adjacent(*x, *c) {
                    return Err(mismatch());
                }
            }
        }
        &DWitness::II { a, b, c, d } => {
            for (s, t) in [(d, c), (c, b), (b, d), (c, a), (a, d)] {
                need(s, t)?;
            }
            out.push(Relation::Comm(seq(&[c, b, d]), seq(&[c, a, d])));
            for p in [[d, c, b], [d, c, a], [b, d, c], [a, d, c]] {
                out.push(Relation::Zero(seq(&p)));
            }
        }
        &DWitness::III { a, b, c, d } => {
            for (s, t) in [(c, b), (b, d), (d, a), (a, c)] {
                need(s, t)?;
            }
            for p in [[c, b, d, a], [b, d, a, c], [d, a, c, b], [a, c, b, d]] {
                out.push(Relation::Zero(seq(&p)));
            }
        }
        DWitness::IV { cycle, spikes } => {
            let k = cycle.len();
            if k < 3 || spikes.len() != k {
                return Err(mismatch());
            }
            for i in 0..k {
                let (x, y) = (cycle[i], cycle[(i + 1) % k]);
                need(x, y)?;
                // from the head of arrow i around to its tail
                let around: Vec<Vertex> = (1..=k).map(|j| cycle[(i + j) % k]).collect();
                match spikes[i] {
                    Some(s) => {
                        need(y, s)?;
                        need(s, x)?;
                        out.push(Relation::Comm(seq(&around), seq(&[y, s, x])));
                        out.push(Relation::Zero(seq(&[x, y, s])));
                        out.push(Relation::Zero(seq(&[s, x, y])));
                    }
                    None => out.push(Relation::Zero(seq(&around))),
                }
            }
        }
    }
    let core: BTreeSet<Vertex> = w.core();
    let parts = w.attachments(q);
    if parts.iter().any(|(v, p)| !p.has_vertex(*v)) || core.iter().any(|v| !q.has_vertex(*v)) {
        return Err(mismatch());
    }
    for (_, part) in parts {
        out.extend(saturate(&part));
    }
    Ok(out)
}

pub fn relations_e6(q: &Quiver, m: &E6Match) -> Result<Vec<Relation>> {
    let t = e6_templates()
        .get(m.template.wrapping_sub(1))
        .ok_or(Error::IndexOutOfRange {
            index: m.template,
            len: 21,
        })?;
    let mut out = Vec::with_capacity(t.relations.len());
    for r in &t.relations {
        let covered = r.paths().iter().all(|p| p.vertices().iter().all(|&v| m.map.get(v).is_some()));
        let mapped = r.map_vertices(|v| m.map.get(v).unwrap_or(v));
        if !covered || !mapped.valid_in(q) {
            return Err(Error::LabelMismatch(format!(
                "template {} relation `{r}` does not transport to the quiver",
                m.template
            )));
        }
        out.push(mapped);
    }
    Ok(out)
}

/// Classifies and generates relations.
pub fn bound_quiver(q: &Quiver) -> Result<BoundQuiver> {
    let label = classify(q)?;
    let relations = match &label.kind {
        ClassKind::TypeA => relations_a(q)?,
        ClassKind::TypeD(w) => relations_d(q, w)?,
        ClassKind::TypeE6(m) => relations_e6(q, m)?,
        ClassKind::Unknown => return Err(Error::Unclassified),
    };
    BoundQuiver::new(q.clone(), relations)
}

/// Relations listed in the file are used verbatim; otherwise they are
/// generated from the classification.
pub fn bound_quiver_from_file(file: &QuiverFile) -> Result<BoundQuiver> {
    match &file.relations {
        Some(rels) => BoundQuiver::new(file.quiver.clone(), rels.clone()),
        None => bound_quiver(&file.quiver),
    }
}
