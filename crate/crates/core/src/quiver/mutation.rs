use std::collections::{BTreeMap, HashSet};

use super::{Arrow, Quiver, Vertex};
use crate::error::{Error, Result};

/// Arrows not touching `k` keep their names. Reversed arrows toggle a
/// trailing `*`, so a second mutation at `k` restores their names; arrows
/// cancelled against a composite lose theirs. A new arrow `i -> j` coming
/// from `a: i -> k`, `b: k -> j` is named `a_b`.
pub(super) fn mutate(q: &Quiver, k: Vertex) -> Result<Quiver> {
    q.check_vertex(k)?;

    // signed adjacency b[(i, j)] = #(i -> j) - #(j -> i), keyed with i < j
    let mut b: BTreeMap<(Vertex, Vertex), i32> = BTreeMap::new();
    let mut names: BTreeMap<(Vertex, Vertex), String> = BTreeMap::new();
    let key = |i: Vertex, j: Vertex| if i < j { ((i, j), 1) } else { ((j, i), -1) };
    let add = |b: &mut BTreeMap<(Vertex, Vertex), i32>, i: Vertex, j: Vertex, n: i32| {
        let (kk, s) = key(i, j);
        *b.entry(kk).or_insert(0) += s * n;
    };

    for a in q.arrows() {
        if a.source == k || a.target == k {
            continue;
        }
        add(&mut b, a.source, a.target, 1);
        names.insert((a.source, a.target), a.name.clone());
    }

    let mut composite: BTreeMap<(Vertex, Vertex), String> = BTreeMap::new();
    for alpha in q.in_arrows(k) {
        for beta in q.out_arrows(k) {
            let (i, j) = (alpha.source, beta.target);
            add(&mut b, i, j, 1);
            composite.insert((i, j), format!("{}_{}", alpha.name, beta.name));
        }
    }

    let mut arrows: Vec<Arrow> = Vec::new();
    for (&(i, j), &n) in &b {
        let (s, t) = match n {
            0 => continue,
            1 => (i, j),
            -1 => (j, i),
            _ if n > 0 => return Err(Error::ParallelArrows(i, j)),
            _ => return Err(Error::ParallelArrows(j, i)),
        };
        let name = names
            .get(&(s, t))
            .or_else(|| composite.get(&(s, t)))
            .cloned()
            .expect("surviving arrow is either old or new");
        arrows.push(Arrow::new(name, s, t));
    }
    for a in q.arrows() {
        if a.source == k || a.target == k {
            let name = match a.name.strip_suffix('*') {
                Some(base) => base.to_string(),
                None => format!("{}*", a.name),
            };
            arrows.push(Arrow::new(name, a.target, a.source));
        }
    }

    dedupe_names(&mut arrows);
    Quiver::new(q.vertices().iter().copied(), arrows)
}

fn dedupe_names(arrows: &mut [Arrow]) {
    let mut used: HashSet<String> = HashSet::new();
    for a in arrows.iter_mut() {
        while used.contains(&a.name) {
            a.name.push('\'');
        }
        used.insert(a.name.clone());
    }
}
