//! Sparse exact elimination over the integers.
//!
//! Rows are kept primitive (content divided out, leading coefficient
//! positive), so elimination is fraction-free; rationals only appear when a
//! fully reduced system is normalised to leading coefficient one.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A sparse integer row with strictly increasing column indices and no
/// explicit zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseRow {
    entries: Vec<(usize, BigInt)>,
}

impl SparseRow {
    /// Builds a row from arbitrary `(column, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (col, c) in entries {
            *acc.entry(col).or_insert_with(BigInt::zero) += c;
        }
        SparseRow {
            entries: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Builds an integer row proportional to a rational one (denominators
    /// cleared by their lcm).
    pub fn from_rationals<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, BigRational)>,
    {
        let entries: Vec<(usize, BigRational)> = entries.into_iter().collect();
        let lcm = entries
            .iter()
            .fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
        Self::from_entries(
            entries
                .into_iter()
                .map(|(col, c)| (col, (c * BigRational::from_integer(lcm.clone())).to_integer())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.entries
    }

    pub fn leading(&self) -> Option<(usize, &BigInt)> {
        self.entries.first().map(|(c, v)| (*c, v))
    }

    pub fn get(&self, col: usize) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    /// `a * self - b * other`
    fn combine(&self, a: &BigInt, other: &SparseRow, b: &BigInt) -> SparseRow {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let take_left = match (self.entries.get(i), other.entries.get(j)) {
                (Some((ci, _)), Some((cj, _))) => ci.cmp(cj),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match take_left {
                std::cmp::Ordering::Less => {
                    let (c, v) = &self.entries[i];
                    out.push((*c, a * v));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let (c, v) = &other.entries[j];
                    out.push((*c, -(b * v)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let (c, v) = &self.entries[i];
                    let w = a * v - b * &other.entries[j].1;
                    if !w.is_zero() {
                        out.push((*c, w));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SparseRow { entries: out }
    }

    fn make_primitive(&mut self) {
        let Some((_, lead)) = self.entries.first() else {
            return;
        };
        let mut g = lead.abs();
        for (_, v) in &self.entries[1..] {
            if g.is_one() {
                break;
            }
            g = g.gcd(v);
        }
        let negate = lead.is_negative();
        if !g.is_one() || negate {
            let g = if negate { -g } else { g };
            for (_, v) in &mut self.entries {
                *v = &*v / &g;
            }
        }
    }
}

/// Incremental row echelon form. The pivot of a row is its smallest column.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots and keeps the remainder.
    /// Returns `true` if the rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        debug_assert!(row.entries.iter().all(|(c, _)| *c < self.ncols));
        row.make_primitive();
        loop {
            let Some((col, coeff)) = row.leading() else {
                return false;
            };
            match self.pivots.get(&col) {
                Some(pivot) => {
                    let a = pivot.entries[0].1.clone();
                    let b = coeff.clone();
                    row = row.combine(&a, pivot, &b);
                    row.make_primitive();
                }
                None => {
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
    }

    /// Back-substitutes into reduced row echelon form.
    pub fn reduce(mut self) -> Reduced {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for col in cols {
            let mut row = self.pivots.remove(&col).expect("pivot present");
            loop {
                let target = row.entries[1..]
                    .iter()
                    .find(|(c, _)| done.contains_key(c))
                    .map(|(c, v)| (*c, v.clone()));
                let Some((pc, coeff)) = target else { break };
                let pivot = &done[&pc];
                let a = pivot.entries[0].1.clone();
                row = row.combine(&a, pivot, &coeff);
                row.make_primitive();
            }
            done.insert(col, row);
        }
        let pivots = done
            .into_iter()
            .map(|(col, row)| {
                let lead = row.entries[0].1.clone();
                let rest = row.entries[1..]
                    .iter()
                    .map(|(c, v)| (*c, BigRational::new(v.clone(), lead.clone())))
                    .collect();
                (col, rest)
            })
            .collect();
        Reduced {
            ncols: self.ncols,
            pivots,
        }
    }
}

/// Reduced row echelon form with unit pivots. Each pivot row reads
/// `x_pivot + sum(c_j * x_j) = 0` over free columns `j`.
#[derive(Clone, Debug)]
pub struct Reduced {
    ncols: usize,
    pivots: BTreeMap<usize, Vec<(usize, BigRational)>>,
}

impl Reduced {
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect()
    }

    /// Non-pivot part of the pivot row for `col`.
    pub fn pivot_row(&self, col: usize) -> Option<&[(usize, BigRational)]> {
        self.pivots.get(&col).map(Vec::as_slice)
    }

    /// Expresses column `col` modulo the row space as a combination of free
    /// columns.
    pub fn normal_form(&self, col: usize) -> Vec<(usize, BigRational)> {
        match self.pivots.get(&col) {
            Some(rest) => rest.iter().map(|(c, v)| (*c, -v.clone())).collect(),
            None => vec![(col, BigRational::one())],
        }
    }

    /// Kernel basis, one vector per free column `f` (with `x_f = 1`), in
    /// increasing order of `f`. Vectors are sparse and sorted by column.
    pub fn nullspace(&self) -> Vec<Vec<(usize, BigRational)>> {
        let mut by_free: BTreeMap<usize, Vec<(usize, BigRational)>> = self
            .free_columns()
            .into_iter()
            .map(|f| (f, vec![(f, BigRational::one())]))
            .collect();
        for (&p, rest) in &self.pivots {
            for (f, c) in rest {
                by_free
                    .get_mut(f)
                    .expect("non-pivot entry lies in a free column")
                    .push((p, -c.clone()));
            }
        }
        by_free
            .into_values()
            .map(|mut v| {
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }
}

/// Rank of a list of rows.
pub fn rank<I: IntoIterator<Item = SparseRow>>(ncols: usize, rows: I) -> usize {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[(usize, i64)]) -> SparseRow {
        SparseRow::from_entries(v.iter().map(|&(c, x)| (c, BigInt::from(x))))
    }

    fn dense_apply(rows: &[Vec<i64>], x: &[(usize, BigRational)]) -> Vec<BigRational> {
        rows.iter()
            .map(|r| {
                x.iter().fold(BigRational::zero(), |acc, (c, v)| {
                    acc + BigRational::from_integer(BigInt::from(r[*c])) * v
                })
            })
            .collect()
    }

    #[test]
    fn duplicate_entries_are_summed() {
        let r = row(&[(2, 1), (0, 3), (2, -1)]);
        assert_eq!(r.entries(), &[(0, BigInt::from(3))]);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![row(&[(0, 2), (1, 4)]), row(&[(0, 1), (1, 2)]), row(&[(2, 5)])];
        assert_eq!(rank(3, rows), 2);
    }

    #[test]
    fn empty_system_has_full_nullspace() {
        let red = Echelon::new(3).reduce();
        assert_eq!(red.nullity(), 3);
        assert_eq!(red.nullspace().len(), 3);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let dense = vec![vec![1, 2, 0, -1], vec![2, 4, 1, 0], vec![3, 6, 1, -1]];
        let mut ech = Echelon::new(4);
        for r in &dense {
            ech.insert(row(&r.iter().enumerate().map(|(c, v)| (c, *v)).collect::<Vec<_>>()));
        }
        let red = ech.reduce();
        assert_eq!(red.rank(), 2);
        let ns = red.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dense_apply(&dense, v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rational_rows_are_scaled_to_integers() {
        let r = SparseRow::from_rationals(vec![
            (0, BigRational::new(1.into(), 2.into())),
            (1, BigRational::new(1.into(), 3.into())),
        ]);
        assert_eq!(r.entries(), &[(0, BigInt::from(3)), (1, BigInt::from(2))]);
    }

    #[test]
    fn normal_form_of_pivot() {
        // x0 - x2 = 0, x1 + x2 = 0
        let mut ech = Echelon::new(3);
        ech.insert(row(&[(0, 1), (2, -1)]));
        ech.insert(row(&[(1, 1), (2, 1)]));
        let red = ech.reduce();
        assert_eq!(red.normal_form(0), vec![(2, BigRational::one())]);
        assert_eq!(red.normal_form(1), vec![(2, -BigRational::one())]);
        assert_eq!(red.normal_form(2), vec![(2, BigRational::one())]);
    }
}
