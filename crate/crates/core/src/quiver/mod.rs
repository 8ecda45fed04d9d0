//! Quivers without loops, 2-cycles or parallel arrows, and paths in them.
//!
//! Paths compose left to right: for arrows `a` then `b` with `t(a) = s(b)`
//! the composite is `ab`. Because there is at most one arrow between any
//! ordered pair of vertices, a path is stored as the sequence of vertices it
//! traverses.

mod enumerate;
mod iso;
mod mutation;

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

pub use enumerate::enumerate_mutation_class;
pub use iso::{canonical_form, is_isomorphic, CanonicalForm, VertexMap};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Vertex {
    fn from(v: u32) -> Self {
        Vertex(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: Vertex,
    pub target: Vertex,
}

impl Arrow {
    pub fn new(name: impl Into<String>, source: Vertex, target: Vertex) -> Self {
        Arrow {
            name: name.into(),
            source,
            target,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    out: BTreeMap<Vertex, Vec<usize>>,
    inc: BTreeMap<Vertex, Vec<usize>>,
}

impl PartialEq for Quiver {
    /// Same vertex set and the same arrows as ordered pairs; names ignored.
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrow_pairs() == other.arrow_pairs()
    }
}

impl Eq for Quiver {}

impl Quiver {
    /// Validates every invariant: unique vertices and arrow names, endpoints
    /// present, no loops, no 2-cycles, no parallel arrows.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut vs: Vec<Vertex> = Vec::new();
        let mut seen = BTreeSet::new();
        for v in vertices {
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex(v));
            }
            vs.push(v);
        }
        vs.sort();
        let mut names = HashSet::new();
        let mut pairs = BTreeSet::new();
        for a in &arrows {
            if !names.insert(a.name.as_str()) {
                return Err(Error::DuplicateArrow(a.name.clone()));
            }
            for v in [a.source, a.target] {
                if !seen.contains(&v) {
                    return Err(Error::UnknownVertex(v));
                }
            }
            if a.source == a.target {
                return Err(Error::Loop(a.source));
            }
            if pairs.contains(&(a.target, a.source)) {
                return Err(Error::TwoCycle(a.target, a.source));
            }
            if !pairs.insert((a.source, a.target)) {
                return Err(Error::ParallelArrows(a.source, a.target));
            }
        }
        let mut out: BTreeMap<Vertex, Vec<usize>> = vs.iter().map(|v| (*v, vec![])).collect();
        let mut inc = out.clone();
        for (i, a) in arrows.iter().enumerate() {
            out.get_mut(&a.source).unwrap().push(i);
            inc.get_mut(&a.target).unwrap().push(i);
        }
        for list in out.values_mut() {
            list.sort_by_key(|&i| arrows[i].target);
        }
        for list in inc.values_mut() {
            list.sort_by_key(|&i| arrows[i].source);
        }
        Ok(Quiver {
            vertices: vs,
            arrows,
            out,
            inc,
        })
    }

    /// Vertices `1..=n` with arrows given as pairs, named `a1, a2, ...`.
    pub fn from_pairs(n: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        let arrows = pairs
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| Arrow::new(format!("a{}", i + 1), Vertex(s), Vertex(t)))
            .collect();
        Quiver::new((1..=n).map(Vertex), arrows)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.out.contains_key(&v)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn arrow_between(&self, s: Vertex, t: Vertex) -> Option<&Arrow> {
        self.out
            .get(&s)?
            .iter()
            .map(|&i| &self.arrows[i])
            .find(|a| a.target == t)
    }

    pub fn has_arrow(&self, s: Vertex, t: Vertex) -> bool {
        self.arrow_between(s, t).is_some()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arrow(u, v) || self.has_arrow(v, u)
    }

    pub fn out_arrows(&self, v: Vertex) -> impl Iterator<Item = &Arrow> + '_ {
        self.out
            .get(&v)
            .into_iter()
            .flatten()
            .map(move |&i| &self.arrows[i])
    }

    pub fn in_arrows(&self, v: Vertex) -> impl Iterator<Item = &Arrow> + '_ {
        self.inc
            .get(&v)
            .into_iter()
            .flatten()
            .map(move |&i| &self.arrows[i])
    }

    pub fn successors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.out_arrows(v).map(|a| a.target)
    }

    pub fn predecessors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.in_arrows(v).map(|a| a.source)
    }

    /// Underlying undirected neighbours, sorted.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut ns: Vec<Vertex> = self.successors(v).chain(self.predecessors(v)).collect();
        ns.sort();
        ns
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.inc.get(&v).map_or(0, Vec::len)
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out.get(&v).map_or(0, Vec::len)
    }

    /// In-degree plus out-degree.
    pub fn valency(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.in_degree(v) + self.out_degree(v))
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.in_degree(v) == 0
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.out_degree(v) == 0
    }

    /// Oriented 3-cycles `x -> y -> z -> x`, each once, rotated so that `x` is
    /// the smallest vertex. Sorted.
    pub fn three_cycles(&self) -> Vec<[Vertex; 3]> {
        let mut cycles = Vec::new();
        for &x in &self.vertices {
            for y in self.successors(x) {
                if y < x {
                    continue;
                }
                for z in self.successors(y) {
                    if z > x && self.has_arrow(z, x) {
                        cycles.push([x, y, z]);
                    }
                }
            }
        }
        cycles.sort();
        cycles
    }

    /// Whether `v` lies on an oriented 3-cycle.
    pub fn on_three_cycle(&self, v: Vertex) -> bool {
        self.three_cycles().iter().any(|c| c.contains(&v))
    }

    pub fn arrow_pairs(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.arrows.iter().map(|a| (a.source, a.target)).collect()
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.first() else {
            return true;
        };
        self.component_of(start, &BTreeSet::new()).len() == self.vertices.len()
    }

    /// Vertices reachable from `start` in the underlying graph without
    /// entering `blocked`.
    pub fn component_of(&self, start: Vertex, blocked: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !blocked.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// No oriented cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg: BTreeMap<Vertex, usize> =
            self.vertices.iter().map(|&v| (v, self.in_degree(v))).collect();
        let mut queue: VecDeque<Vertex> =
            indeg.iter().filter(|(_, d)| **d == 0).map(|(v, _)| *v).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop_front() {
            removed += 1;
            for w in self.successors(v) {
                let d = indeg.get_mut(&w).unwrap();
                *d -= 1;
                if *d == 0 {
                    queue.push_back(w);
                }
            }
        }
        removed == self.vertices.len()
    }

    /// Full (induced) subquiver on `keep`.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .filter(|a| keep.contains(&a.source) && keep.contains(&a.target))
            .cloned()
            .collect();
        Quiver::new(keep.iter().copied(), arrows).expect("subquiver of a valid quiver")
    }

    /// Renames vertices along `map` (which must be injective on vertices).
    pub fn relabel(&self, map: &VertexMap) -> Result<Quiver> {
        let image = |v: Vertex| map.get(v).ok_or(Error::UnknownVertex(v));
        let vertices = self.vertices.iter().map(|&v| image(v)).collect::<Result<Vec<_>>>()?;
        let arrows = self
            .arrows
            .iter()
            .map(|a| Ok(Arrow::new(a.name.clone(), image(a.source)?, image(a.target)?)))
            .collect::<Result<Vec<_>>>()?;
        Quiver::new(vertices, arrows)
    }

    /// Same quiver with arrows renamed `a1, a2, ...` in (source, target) order.
    pub fn with_canonical_names(&self) -> Quiver {
        let mut pairs: Vec<(Vertex, Vertex)> = self.arrow_pairs().into_iter().collect();
        pairs.sort();
        let arrows = pairs
            .into_iter()
            .enumerate()
            .map(|(i, (s, t))| Arrow::new(format!("a{}", i + 1), s, t))
            .collect();
        Quiver::new(self.vertices.clone(), arrows).expect("renaming keeps invariants")
    }

    /// Fomin-Zelevinsky mutation at `k`.
    pub fn mutate(&self, k: Vertex) -> Result<Quiver> {
        mutation::mutate(self, k)
    }

    pub fn path(&self, seq: &[Vertex]) -> Result<Path> {
        Path::new(self, seq.to_vec())
    }
}

/// A path, stored as the sequence of vertices it visits. A stationary path
/// `e_v` is the one-element sequence `[v]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    pub fn new(q: &Quiver, vertices: Vec<Vertex>) -> Result<Path> {
        let Some(&first) = vertices.first() else {
            return Err(Error::InvalidRelation("empty vertex sequence".into()));
        };
        q.check_vertex(first)?;
        for w in vertices.windows(2) {
            q.check_vertex(w[1])?;
            if !q.has_arrow(w[0], w[1]) {
                return Err(Error::InvalidRelation(format!("no arrow {} -> {}", w[0], w[1])));
            }
        }
        Ok(Path { vertices })
    }

    /// Caller guarantees consecutive vertices are joined by arrows.
    pub(crate) fn from_vertices_unchecked(vertices: Vec<Vertex>) -> Path {
        debug_assert!(!vertices.is_empty());
        Path { vertices }
    }

    pub fn stationary(v: Vertex) -> Path {
        Path { vertices: vec![v] }
    }

    pub fn source(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn target(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    /// Number of arrows.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_stationary(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn visits(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn arrows<'q>(&self, q: &'q Quiver) -> Vec<&'q Arrow> {
        self.vertices
            .windows(2)
            .map(|w| q.arrow_between(w[0], w[1]).expect("valid path"))
            .collect()
    }

    /// `self` followed by `other`, if `t(self) = s(other)`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target() != other.source() {
            return None;
        }
        let mut vs = self.vertices.clone();
        vs.extend_from_slice(&other.vertices[1..]);
        Some(Path { vertices: vs })
    }

    /// Relabels vertices; the caller guarantees the map is a quiver map.
    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Path {
        Path {
            vertices: self.vertices.iter().map(|&v| f(v)).collect(),
        }
    }
}

impl Ord for Path {
    /// Length first, then lexicographic on vertex sequences.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Path {
    /// `e V` for stationary paths, otherwise the vertex sequence.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_stationary() {
            return write!(f, "e {}", self.vertices[0]);
        }
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: u32) -> Vertex {
        Vertex(x)
    }

    #[test]
    fn rejects_invariant_violations() {
        assert_eq!(Quiver::from_pairs(2, &[(1, 1)]).unwrap_err(), Error::Loop(v(1)));
        assert_eq!(
            Quiver::from_pairs(2, &[(1, 2), (2, 1)]).unwrap_err(),
            Error::TwoCycle(v(1), v(2))
        );
        assert_eq!(
            Quiver::from_pairs(2, &[(1, 2), (1, 2)]).unwrap_err(),
            Error::ParallelArrows(v(1), v(2))
        );
        assert_eq!(Quiver::from_pairs(2, &[(1, 3)]).unwrap_err(), Error::UnknownVertex(v(3)));
    }

    #[test]
    fn valency_and_three_cycles() {
        let a2 = Quiver::from_pairs(2, &[(1, 2)]).unwrap();
        assert_eq!(a2.valency(v(1)).unwrap(), 1);
        assert!(a2.valency(v(7)).is_err());

        let cyc = Quiver::from_pairs(3, &[(2, 3), (3, 1), (1, 2)]).unwrap();
        for x in 1..=3 {
            assert_eq!(cyc.valency(v(x)).unwrap(), 2);
        }
        assert_eq!(cyc.three_cycles(), vec![[v(1), v(2), v(3)]]);

        // the opposite orientation is rotated to start at 1 as well
        let rev = Quiver::from_pairs(3, &[(1, 3), (3, 2), (2, 1)]).unwrap();
        assert_eq!(rev.three_cycles(), vec![[v(1), v(3), v(2)]]);
    }

    #[test]
    fn e6_template_eight_valency() {
        let q = Quiver::from_pairs(
            6,
            &[(1, 2), (3, 2), (2, 4), (2, 6), (4, 1), (4, 5), (5, 2), (6, 3), (6, 5)],
        )
        .unwrap();
        // in from 1, 3, 5 and out to 4, 6
        assert_eq!(q.valency(v(2)).unwrap(), 5);
        assert_eq!(q.n_arrows(), 9);
    }

    #[test]
    fn acyclicity_and_connectivity() {
        let line = Quiver::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(line.is_acyclic());
        assert!(line.is_connected());
        let cyc = Quiver::from_pairs(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(!cyc.is_acyclic());
        let split = Quiver::from_pairs(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(!split.is_connected());
    }

    #[test]
    fn path_order_and_concat() {
        let q = Quiver::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        let p = q.path(&[v(1), v(2)]).unwrap();
        let r = q.path(&[v(2), v(3)]).unwrap();
        let pr = p.concat(&r).unwrap();
        assert_eq!(pr.vertices(), &[v(1), v(2), v(3)]);
        assert_eq!(pr.len(), 2);
        assert!(r.concat(&p).is_none());
        assert!(Path::stationary(v(3)) < p);
        assert!(p < r);
        assert!(q.path(&[v(1), v(3)]).is_err());
        assert_eq!(Path::stationary(v(2)).to_string(), "e 2");
        assert_eq!(pr.to_string(), "1 2 3");
    }
}
