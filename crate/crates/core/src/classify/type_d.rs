//! Recognition of the four type D shapes.
//!
//! Roles follow the standard pictures:
//!
//! * I: leaves `a`, `b` hanging off `c`, both pointing the same way.
//! * II: `d -> c`, `c -> b -> d`, `c -> a -> d`.
//! * III: the square `c -> b -> d -> a -> c`.
//! * IV: a chordless oriented cycle, with an optional spike `c_i` on each
//!   arrow `v_i -> v_{i+1}` closing the 3-cycle `v_i -> v_{i+1} -> c_i -> v_i`.
//!
//! Everything outside the core must hang off `c`/`d` (or the spikes) and
//! form type A quivers there with the attaching vertex connecting.

use std::collections::BTreeSet;

use super::type_a::{attaches_at, is_mutation_class_a};
use crate::quiver::{Quiver, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DSubtype {
    I,
    II,
    III,
    IV,
}

impl std::fmt::Display for DSubtype {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DSubtype::I => "I",
            DSubtype::II => "II",
            DSubtype::III => "III",
            DSubtype::IV => "IV",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DWitness {
    I {
        a: Vertex,
        b: Vertex,
        c: Vertex,
    },
    II {
        a: Vertex,
        b: Vertex,
        c: Vertex,
        d: Vertex,
    },
    III {
        a: Vertex,
        b: Vertex,
        c: Vertex,
        d: Vertex,
    },
    IV {
        /// `cycle[i] -> cycle[i + 1]`, indices mod `k`.
        cycle: Vec<Vertex>,
        /// `spikes[i]` sits on the arrow `cycle[i] -> cycle[i + 1]`.
        spikes: Vec<Option<Vertex>>,
    },
}

impl DWitness {
    pub fn subtype(&self) -> DSubtype {
        match self {
            DWitness::I { .. } => DSubtype::I,
            DWitness::II { .. } => DSubtype::II,
            DWitness::III { .. } => DSubtype::III,
            DWitness::IV { .. } => DSubtype::IV,
        }
    }

    /// Vertices of the core shape.
    pub fn core(&self) -> BTreeSet<Vertex> {
        match self {
            DWitness::I { a, b, c } => [*a, *b, *c].into(),
            DWitness::II { a, b, c, d } | DWitness::III { a, b, c, d } => [*a, *b, *c, *d].into(),
            DWitness::IV { cycle, spikes } => {
                cycle.iter().copied().chain(spikes.iter().flatten().copied()).collect()
            }
        }
    }

    /// The attached type A pieces, each with its connecting vertex: `Q'` for
    /// I, `Q'` and `Q''` for II/III, one `Q^i` per spike for IV.
    pub fn attachments(&self, q: &Quiver) -> Vec<(Vertex, Quiver)> {
        match self {
            DWitness::I { a, b, c } => {
                let keep: BTreeSet<Vertex> =
                    q.vertices().iter().copied().filter(|v| v != a && v != b).collect();
                vec![(*c, q.induced(&keep))]
            }
            DWitness::II { c, d, .. } | DWitness::III { c, d, .. } => {
                let core = self.core();
                vec![(*c, hanging(q, &core, *c)), (*d, hanging(q, &core, *d))]
            }
            DWitness::IV { spikes, .. } => {
                let core = self.core();
                spikes.iter().flatten().map(|&s| (s, hanging(q, &core, s))).collect()
            }
        }
    }

    /// Length of the central cycle for IV.
    pub fn cycle_len(&self) -> Option<usize> {
        match self {
            DWitness::IV { cycle, .. } => Some(cycle.len()),
            _ => None,
        }
    }
}

/// `v` together with everything reachable from it outside the core.
fn hanging(q: &Quiver, core: &BTreeSet<Vertex>, v: Vertex) -> Quiver {
    let mut blocked = core.clone();
    blocked.remove(&v);
    q.induced(&q.component_of(v, &blocked))
}

/// The vertices outside `core` are all accounted for by the attachments, the
/// attachments are disjoint, and each is type A with its vertex connecting.
fn attachments_valid(q: &Quiver, w: &DWitness) -> bool {
    let core = w.core();
    let parts = w.attachments(q);
    let mut covered: BTreeSet<Vertex> = core.clone();
    let mut total = core.len();
    for (v, part) in &parts {
        total += part.n_vertices() - 1;
        covered.extend(part.vertices().iter().copied());
        if !attaches_at(part, *v) {
            return false;
        }
    }
    total == q.n_vertices() && covered.len() == q.n_vertices()
}

fn neighbours_within(q: &Quiver, v: Vertex, allowed: &BTreeSet<Vertex>) -> bool {
    q.neighbors(v).iter().all(|w| allowed.contains(w))
}

fn arrows_within(q: &Quiver, set: &BTreeSet<Vertex>) -> usize {
    q.arrows()
        .iter()
        .filter(|a| set.contains(&a.source) && set.contains(&a.target))
        .count()
}

pub fn detect_type_i(q: &Quiver) -> Option<DWitness> {
    for &c in q.vertices() {
        let leaves: Vec<Vertex> = q
            .neighbors(c)
            .into_iter()
            .filter(|&x| q.valency(x) == Ok(1))
            .collect();
        for (i, &a) in leaves.iter().enumerate() {
            for &b in &leaves[i + 1..] {
                let same_way = (q.has_arrow(c, a) && q.has_arrow(c, b))
                    || (q.has_arrow(a, c) && q.has_arrow(b, c));
                if !same_way {
                    continue;
                }
                let w = DWitness::I { a, b, c };
                if attachments_valid(q, &w) {
                    return Some(w);
                }
            }
        }
    }
    None
}

pub fn detect_type_ii(q: &Quiver) -> Option<DWitness> {
    for (d, c) in q.arrow_pairs() {
        let mids: Vec<Vertex> = q.successors(c).filter(|&x| q.has_arrow(x, d)).collect();
        for (i, &a) in mids.iter().enumerate() {
            for &b in &mids[i + 1..] {
                if q.adjacent(a, b) || q.valency(a) != Ok(2) || q.valency(b) != Ok(2) {
                    continue;
                }
                let w = DWitness::II { a, b, c, d };
                if attachments_valid(q, &w) {
                    return Some(w);
                }
            }
        }
    }
    None
}

pub fn detect_type_iii(q: &Quiver) -> Option<DWitness> {
    for (c, b) in q.arrow_pairs() {
        for d in q.successors(b) {
            for a in q.successors(d) {
                if a == c || a == b || !q.has_arrow(a, c) {
                    continue;
                }
                if q.adjacent(c, d) || q.adjacent(a, b) {
                    continue;
                }
                if q.valency(a) != Ok(2) || q.valency(b) != Ok(2) {
                    continue;
                }
                let w = DWitness::III { a, b, c, d };
                if attachments_valid(q, &w) {
                    return Some(w);
                }
            }
        }
    }
    None
}

pub fn detect_type_iv(q: &Quiver) -> Option<DWitness> {
    for cycle in chordless_cycles(q) {
        if let Some(w) = central_cycle_witness(q, &cycle) {
            return Some(w);
        }
    }
    None
}

fn central_cycle_witness(q: &Quiver, cycle: &[Vertex]) -> Option<DWitness> {
    let k = cycle.len();
    let on_cycle: BTreeSet<Vertex> = cycle.iter().copied().collect();
    let mut spikes = Vec::with_capacity(k);
    for i in 0..k {
        let (x, y) = (cycle[i], cycle[(i + 1) % k]);
        let cands: Vec<Vertex> = q
            .successors(y)
            .filter(|&s| !on_cycle.contains(&s) && q.has_arrow(s, x))
            .collect();
        match cands.as_slice() {
            [] => spikes.push(None),
            [s] => spikes.push(Some(*s)),
            _ => return None,
        }
    }
    let w = DWitness::IV {
        cycle: cycle.to_vec(),
        spikes,
    };
    let core = w.core();
    let n_spikes = match &w {
        DWitness::IV { spikes, .. } => spikes.iter().flatten().count(),
        _ => unreachable!(),
    };
    if core.len() != k + n_spikes || arrows_within(q, &core) != k + 2 * n_spikes {
        return None;
    }
    if !cycle.iter().all(|&v| neighbours_within(q, v, &core)) {
        return None;
    }
    attachments_valid(q, &w).then_some(w)
}

/// Oriented chordless cycles of length at least 3 through vertices of
/// valency at most 4, each rotated to start at its smallest vertex, ordered
/// by that vertex and then lexicographically.
fn chordless_cycles(q: &Quiver) -> Vec<Vec<Vertex>> {
    let ok: BTreeSet<Vertex> = q
        .vertices()
        .iter()
        .copied()
        .filter(|&v| q.valency(v).is_ok_and(|d| d <= 4))
        .collect();
    let mut out = Vec::new();
    for &start in &ok {
        let mut path = vec![start];
        extend(q, &ok, &mut path, &mut out);
    }
    out
}

fn extend(q: &Quiver, ok: &BTreeSet<Vertex>, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    let start = path[0];
    let last = *path.last().unwrap();
    for w in q.successors(last).collect::<Vec<_>>() {
        if w == start {
            if path.len() >= 3 {
                out.push(path.clone());
            }
            continue;
        }
        if w < start || !ok.contains(&w) || path.contains(&w) {
            continue;
        }
        // chordless: `w` may touch only `last` and, when closing, `start`
        let interior = path.get(1..path.len() - 1).unwrap_or(&[]);
        if interior.iter().any(|&u| q.adjacent(u, w)) {
            continue;
        }
        if path.len() >= 2 && q.adjacent(start, w) {
            if q.has_arrow(w, start) {
                path.push(w);
                out.push(path.clone());
                path.pop();
            }
            continue;
        }
        path.push(w);
        extend(q, ok, path, out);
        path.pop();
    }
}

/// Priority IV, II, III, I. Returns `None` for type A members.
pub fn classify_d(q: &Quiver) -> Option<DWitness> {
    if !q.is_connected() || is_mutation_class_a(q).unwrap_or(false) {
        return None;
    }
    detect_type_iv(q)
        .or_else(|| detect_type_ii(q))
        .or_else(|| detect_type_iii(q))
        .or_else(|| detect_type_i(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: u32) -> Vertex {
        Vertex(x)
    }

    fn q(n: u32, pairs: &[(u32, u32)]) -> Quiver {
        Quiver::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn fork_is_type_i() {
        // c = 1, a = 2, b = 3, d = 4: c -> a, c -> b, d -> c
        let fork = q(4, &[(1, 2), (1, 3), (4, 1)]);
        assert_eq!(
            classify_d(&fork),
            Some(DWitness::I {
                a: v(2),
                b: v(3),
                c: v(1)
            })
        );
    }

    #[test]
    fn square_is_type_iii_and_type_iv() {
        // c=1, b=2, d=3, a=4
        let sq = q(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert_eq!(
            detect_type_iii(&sq),
            Some(DWitness::III {
                a: v(4),
                b: v(2),
                c: v(1),
                d: v(3)
            })
        );
        assert_eq!(classify_d(&sq).unwrap().subtype(), DSubtype::IV);
        assert_eq!(classify_d(&sq).unwrap().cycle_len(), Some(4));
    }

    #[test]
    fn type_ii_core_with_attachment_at_c() {
        // d=1, c=2, a=3, b=4, 3-cycle c -> 5 -> 6 -> c
        let qq = q(
            6,
            &[(1, 2), (2, 3), (2, 4), (3, 1), (4, 1), (2, 5), (5, 6), (6, 2)],
        );
        assert_eq!(
            classify_d(&qq),
            Some(DWitness::II {
                a: v(3),
                b: v(4),
                c: v(2),
                d: v(1)
            })
        );
    }

    #[test]
    fn type_iv_with_spike_and_attachment() {
        // cycle 1 -> 2 -> 3 -> 4 -> 1, spike 5 on 1 -> 2, tail 5 -> 6
        let qq = q(
            6,
            &[(1, 2), (2, 3), (3, 4), (4, 1), (2, 5), (5, 1), (5, 6)],
        );
        assert_eq!(
            classify_d(&qq),
            Some(DWitness::IV {
                cycle: vec![v(1), v(2), v(3), v(4)],
                spikes: vec![Some(v(5)), None, None, None]
            })
        );
    }

    #[test]
    fn attachment_on_cycle_vertex_is_not_type_iv() {
        let qq = q(5, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 5)]);
        assert_eq!(detect_type_iv(&qq), None);
    }

    #[test]
    fn type_a_quivers_are_not_type_d() {
        assert_eq!(classify_d(&q(3, &[(1, 2), (2, 3), (3, 1)])), None);
    }

    #[test]
    fn mixed_fork_is_not_type_i() {
        // 2 -> 1 -> 3 and 1 -> 4 -> 5
        let qq = q(5, &[(2, 1), (1, 3), (1, 4), (4, 5)]);
        assert_eq!(detect_type_i(&qq), None);
    }
}
