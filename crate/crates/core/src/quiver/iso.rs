//! Canonical forms and isomorphism testing.
//!
//! Vertices are first split into classes by iterated degree refinement. A
//! backtracking search then orders the vertices, class by class, so that the
//! adjacency encoding is lexicographically minimal. The encoding lists the
//! pairs `(i, j)` by `max(i, j)` first, so each prefix depends only on the
//! vertices placed so far and losing branches are cut early.

use std::collections::{BTreeMap, BTreeSet};

use super::{Quiver, Vertex};

/// A bijection between vertex sets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexMap {
    pairs: BTreeMap<Vertex, Vertex>,
}

impl VertexMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        VertexMap {
            pairs: pairs.into_iter().collect(),
        }
    }

    pub fn insert(&mut self, from: Vertex, to: Vertex) {
        self.pairs.insert(from, to);
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.pairs.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.pairs.iter().map(|(a, b)| (*a, *b))
    }

    pub fn inverse(&self) -> VertexMap {
        VertexMap::from_pairs(self.iter().map(|(a, b)| (b, a)))
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &VertexMap) -> Option<VertexMap> {
        self.iter()
            .map(|(a, b)| then.get(b).map(|c| (a, c)))
            .collect::<Option<Vec<_>>>()
            .map(VertexMap::from_pairs)
    }

    /// Whether this is an isomorphism from `q1` onto `q2`.
    pub fn is_isomorphism(&self, q1: &Quiver, q2: &Quiver) -> bool {
        if q1.n_vertices() != q2.n_vertices() || q1.n_arrows() != q2.n_arrows() {
            return false;
        }
        let image: BTreeSet<Vertex> = self.pairs.values().copied().collect();
        if self.len() != q1.n_vertices()
            || image.len() != self.len()
            || q1.vertices().iter().any(|v| !self.pairs.contains_key(v))
            || q2.vertices().iter().any(|v| !image.contains(v))
        {
            return false;
        }
        q1.arrows()
            .iter()
            .all(|a| q2.has_arrow(self.pairs[&a.source], self.pairs[&a.target]))
    }
}

/// Isomorphism invariant of a quiver: vertex count plus the minimal
/// adjacency encoding.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    colours: Vec<u32>,
    code: Vec<bool>,
}

impl CanonicalForm {
    /// Quiver on `1..=n` realising this form.
    pub fn to_quiver(&self) -> Quiver {
        let mut pairs = Vec::new();
        let mut it = self.code.iter();
        for m in 1..self.n {
            for i in 0..m {
                if *it.next().unwrap() {
                    pairs.push((i as u32 + 1, m as u32 + 1));
                }
                if *it.next().unwrap() {
                    pairs.push((m as u32 + 1, i as u32 + 1));
                }
            }
        }
        Quiver::from_pairs(self.n as u32, &pairs).expect("canonical code encodes a valid quiver")
    }
}

/// Canonical form of `q` and the vertex order realising it (`order[i]` is
/// placed at position `i`).
pub fn canonical_form(q: &Quiver) -> (CanonicalForm, Vec<Vertex>) {
    let n = q.n_vertices();
    let verts = q.vertices().to_vec();
    let index: BTreeMap<Vertex, usize> = verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut adj = vec![vec![false; n]; n];
    for a in q.arrows() {
        adj[index[&a.source]][index[&a.target]] = true;
    }
    let colour = refine(&adj);

    // cell sequence: positions are filled in increasing colour order
    let mut slots: Vec<u32> = colour.clone();
    slots.sort();

    let mut search = Search {
        adj: &adj,
        colour: &colour,
        slots: &slots,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        code: Vec::with_capacity(n * n),
        best: None,
    };
    search.run(false);
    let (code, order) = search.best.unwrap_or_default();
    (
        CanonicalForm {
            n,
            colours: slots,
            code,
        },
        order.into_iter().map(|i| verts[i]).collect(),
    )
}

/// An isomorphism `q1 -> q2`, if one exists.
pub fn is_isomorphic(q1: &Quiver, q2: &Quiver) -> Option<VertexMap> {
    if q1.n_vertices() != q2.n_vertices() || q1.n_arrows() != q2.n_arrows() {
        return None;
    }
    let (c1, o1) = canonical_form(q1);
    let (c2, o2) = canonical_form(q2);
    if c1 != c2 {
        return None;
    }
    let map = VertexMap::from_pairs(o1.into_iter().zip(o2));
    debug_assert!(map.is_isomorphism(q1, q2));
    Some(map)
}

/// Colour refinement by (out-neighbour colours, in-neighbour colours).
/// Colours are ranks of sorted signatures, so they are isomorphism invariant.
fn refine(adj: &[Vec<bool>]) -> Vec<u32> {
    let n = adj.len();
    let mut colour = vec![0u32; n];
    let mut classes = if n == 0 { 0 } else { 1 };
    loop {
        let sigs: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut outs: Vec<u32> = (0..n).filter(|&w| adj[v][w]).map(|w| colour[w]).collect();
                let mut ins: Vec<u32> = (0..n).filter(|&w| adj[w][v]).map(|w| colour[w]).collect();
                outs.sort();
                ins.sort();
                (colour[v], outs, ins)
            })
            .collect();
        let distinct: BTreeSet<&(u32, Vec<u32>, Vec<u32>)> = sigs.iter().collect();
        let rank: BTreeMap<&(u32, Vec<u32>, Vec<u32>), u32> =
            distinct.iter().enumerate().map(|(i, s)| (*s, i as u32)).collect();
        let next: Vec<u32> = sigs.iter().map(|s| rank[s]).collect();
        let count = distinct.len();
        colour = next;
        if count == classes {
            return colour;
        }
        classes = count;
    }
}

struct Search<'a> {
    adj: &'a [Vec<bool>],
    colour: &'a [u32],
    slots: &'a [u32],
    order: Vec<usize>,
    used: Vec<bool>,
    code: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl Search<'_> {
    /// `ahead` means the current prefix is already strictly below the best.
    fn run(&mut self, ahead: bool) {
        let m = self.order.len();
        if m == self.slots.len() {
            if ahead || self.best.is_none() {
                self.best = Some((self.code.clone(), self.order.clone()));
            }
            return;
        }
        for v in 0..self.adj.len() {
            if self.used[v] || self.colour[v] != self.slots[m] {
                continue;
            }
            let start = self.code.len();
            for &u in &self.order {
                self.code.push(self.adj[u][v]);
                self.code.push(self.adj[v][u]);
            }
            let mut now_ahead = ahead;
            let mut prune = false;
            if !ahead {
                if let Some((best, _)) = &self.best {
                    match self.code[start..].cmp(&best[start..self.code.len()]) {
                        std::cmp::Ordering::Less => now_ahead = true,
                        std::cmp::Ordering::Greater => prune = true,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            if !prune {
                self.used[v] = true;
                self.order.push(v);
                self.run(now_ahead);
                self.order.pop();
                self.used[v] = false;
            }
            self.code.truncate(start);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u32, pairs: &[(u32, u32)]) -> Quiver {
        Quiver::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn relabelled_quivers_are_isomorphic() {
        let a = q(4, &[(1, 2), (2, 3), (3, 1), (3, 4)]);
        let b = q(4, &[(4, 3), (3, 2), (2, 4), (2, 1)]);
        let map = is_isomorphic(&a, &b).unwrap();
        assert!(map.is_isomorphism(&a, &b));
        assert_eq!(canonical_form(&a).0, canonical_form(&b).0);
    }

    #[test]
    fn orientation_matters() {
        let a = q(3, &[(1, 2), (2, 3)]);
        let b = q(3, &[(1, 2), (3, 2)]);
        assert!(is_isomorphic(&a, &b).is_none());
        let c = q(3, &[(2, 1), (2, 3)]);
        assert!(is_isomorphic(&b, &c).is_none());
    }

    #[test]
    fn canonical_form_round_trips() {
        let a = q(5, &[(1, 2), (2, 5), (5, 1), (2, 3), (4, 3)]);
        let (cf, _) = canonical_form(&a);
        let back = cf.to_quiver();
        assert!(is_isomorphic(&a, &back).is_some());
        assert_eq!(canonical_form(&back).0, cf);
    }

    #[test]
    fn symmetric_quiver() {
        // oriented 5-cycle, every vertex has the same colour
        let a = q(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
        let b = q(5, &[(3, 1), (1, 5), (5, 2), (2, 4), (4, 3)]);
        assert!(is_isomorphic(&a, &b).unwrap().is_isomorphism(&a, &b));
    }

    #[test]
    fn map_helpers() {
        let m = VertexMap::from_pairs([(Vertex(1), Vertex(2)), (Vertex(2), Vertex(1))]);
        assert_eq!(m.compose(&m.inverse()).unwrap(), VertexMap::from_pairs([
            (Vertex(1), Vertex(1)),
            (Vertex(2), Vertex(2))
        ]));
    }
}
