use std::collections::{BTreeMap, VecDeque};

use super::iso::canonical_form;
use super::{CanonicalForm, Quiver};
use crate::error::{Error, Result};

/// All isomorphism classes of quivers reachable from `seed` by mutation,
/// one canonical representative each (vertices `1..=n`), sorted by
/// canonical form. Fails with [`Error::ClassLimit`] once more than `limit`
/// classes have been found, and with [`Error::ParallelArrows`] if some
/// mutation leaves the simply-laced world.
pub fn enumerate_mutation_class(seed: &Quiver, limit: usize) -> Result<Vec<Quiver>> {
    let mut found: BTreeMap<CanonicalForm, Quiver> = BTreeMap::new();
    let mut queue: VecDeque<Quiver> = VecDeque::new();
    let visit = |q: Quiver,
                     found: &mut BTreeMap<CanonicalForm, Quiver>,
                     queue: &mut VecDeque<Quiver>|
     -> Result<()> {
        let (cf, _) = canonical_form(&q);
        if found.contains_key(&cf) {
            return Ok(());
        }
        let rep = cf.to_quiver();
        found.insert(cf, rep.clone());
        if found.len() > limit {
            return Err(Error::ClassLimit(limit));
        }
        queue.push_back(rep);
        Ok(())
    };
    visit(seed.clone(), &mut found, &mut queue)?;
    while let Some(q) = queue.pop_front() {
        for &k in q.vertices() {
            visit(q.mutate(k)?, &mut found, &mut queue)?;
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn linear(n: u32) -> Quiver {
        let pairs: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
        Quiver::from_pairs(n, &pairs).unwrap()
    }

    #[test]
    fn type_a_class_sizes() {
        for (n, size) in [(1, 1), (2, 1), (3, 4), (4, 6), (5, 19), (6, 49)] {
            assert_eq!(enumerate_mutation_class(&linear(n), 1000).unwrap().len(), size, "A_{n}");
        }
    }

    #[test]
    fn limit_is_enforced() {
        assert_eq!(
            enumerate_mutation_class(&linear(5), 10).unwrap_err(),
            Error::ClassLimit(10)
        );
    }

    #[test]
    fn result_is_independent_of_seed() {
        let a = enumerate_mutation_class(&linear(4), 100).unwrap();
        let seed = a[3].clone();
        let b = enumerate_mutation_class(&seed, 100).unwrap();
        assert_eq!(a, b);
    }
}
