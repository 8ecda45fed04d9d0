//! Frobenius dimension: the exact oracle and the combinatorial formulas.
//!
//! A coproduct is determined by `z = Δ(1) ∈ A ⊗ A`, and the admissible `z`
//! are those with `(x ⊗ 1) z = z (1 ⊗ x)` for every `x` in `A`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{Element, PathAlgebra};
use crate::classify::{classify, classify_d, ClassKind, ClassLabel, DWitness};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseRow};
use crate::quiver::{Path, Vertex};
use crate::relations::BoundQuiver;

/// Sparse element of `A ⊗ A`, keyed by pairs of basis indices.
pub type Tensor = BTreeMap<(usize, usize), BigRational>;

fn add_to(t: &mut Tensor, key: (usize, usize), c: BigRational) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(key).or_insert_with(BigRational::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&key);
    }
}

/// `(x ⊗ 1) t`.
pub fn left_mul(a: &PathAlgebra, x: &Element, t: &Tensor) -> Tensor {
    let mut out = Tensor::new();
    for (i, ci) in x.terms() {
        for (&(p, q), c) in t {
            if let Some(prod) = a.mult_basis(i, p) {
                for (r, cr) in prod.terms() {
                    add_to(&mut out, (r, q), ci * c * cr);
                }
            }
        }
    }
    out
}

/// `t (1 ⊗ x)`.
pub fn right_mul(a: &PathAlgebra, t: &Tensor, x: &Element) -> Tensor {
    let mut out = Tensor::new();
    for (i, ci) in x.terms() {
        for (&(p, q), c) in t {
            if let Some(prod) = a.mult_basis(q, i) {
                for (s, cs) in prod.terms() {
                    add_to(&mut out, (p, s), ci * c * cs);
                }
            }
        }
    }
    out
}

/// `x` for every algebra generator: idempotents first, then arrows.
fn generators(a: &PathAlgebra) -> Vec<usize> {
    let q = a.quiver();
    let mut out: Vec<usize> = q
        .vertices()
        .iter()
        .map(|&v| a.idempotent(v).expect("vertex of the algebra"))
        .collect();
    for arr in q.arrows() {
        let p = Path::from_vertices_unchecked(vec![arr.source, arr.target]);
        out.push(a.basis_index(&p).expect("arrows are never in an admissible ideal"));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSpace {
    pub dim: usize,
    /// Reduced echelon basis over the lexicographic order on pairs.
    pub basis: Vec<Tensor>,
}

/// Kernel of `z -> (x ⊗ 1) z - z (1 ⊗ x)` for `x` in `gens`, with `z`
/// supported on `keys` (lexicographically sorted).
fn solve(a: &PathAlgebra, keys: &[(usize, usize)], gens: &[usize]) -> Vec<Tensor> {
    let mut ech = Echelon::new(keys.len());
    for &g in gens {
        let mut eqs: BTreeMap<(usize, usize), Vec<(usize, BigRational)>> = BTreeMap::new();
        for (c, &(p, q)) in keys.iter().enumerate() {
            if let Some(prod) = a.mult_basis(g, p) {
                for (r, cr) in prod.terms() {
                    eqs.entry((r, q)).or_default().push((c, cr.clone()));
                }
            }
            if let Some(prod) = a.mult_basis(q, g) {
                for (s, cs) in prod.terms() {
                    eqs.entry((p, s)).or_default().push((c, -cs.clone()));
                }
            }
        }
        for (_, row) in eqs {
            ech.insert(SparseRow::from_rationals(row));
        }
    }
    let red = ech.reduce();
    red.nullspace()
        .into_iter()
        .map(|v| v.into_iter().map(|(c, x)| (keys[c], x)).collect())
        .collect()
}

/// The Frobenius space of `a`. Constraints for the idempotents force
/// `z_(p, q) = 0` unless `s(p) = t(q)`, so only those coordinates are kept;
/// the arrows then give the remaining equations.
pub fn frobdim_oracle(a: &PathAlgebra) -> FrobeniusSpace {
    let b = a.basis();
    let mut keys = Vec::new();
    for (p, bp) in b.iter().enumerate() {
        for (q, bq) in b.iter().enumerate() {
            if bp.source() == bq.target() {
                keys.push((p, q));
            }
        }
    }
    let arrows: Vec<usize> = generators(a).into_iter().skip(a.quiver().n_vertices()).collect();
    let basis = solve(a, &keys, &arrows);
    FrobeniusSpace {
        dim: basis.len(),
        basis,
    }
}

/// Nullity of the system imposing the constraint for every basis element on
/// every coordinate of `A ⊗ A`.
pub fn full_constraint_nullity(a: &PathAlgebra) -> usize {
    let d = a.dim();
    let keys: Vec<(usize, usize)> = (0..d).flat_map(|p| (0..d).map(move |q| (p, q))).collect();
    let all: Vec<usize> = (0..d).collect();
    solve(a, &keys, &all).len()
}

/// `Δ(x) = (x ⊗ 1) z` for basis tensor `index`.
pub fn coproduct_of(space: &FrobeniusSpace, a: &PathAlgebra, index: usize, x: &Element) -> Result<Tensor> {
    let z = space.basis.get(index).ok_or(Error::IndexOutOfRange {
        index,
        len: space.dim,
    })?;
    Ok(left_mul(a, x, z))
}

/// `(x ⊗ 1) z = z (1 ⊗ x)` for every idempotent and arrow.
pub fn satisfies_generator_constraints(a: &PathAlgebra, z: &Tensor) -> bool {
    generators(a).into_iter().all(|g| {
        let x = Element::basis(g);
        left_mul(a, &x, z) == right_mul(a, z, &x)
    })
}

/// First basis triple `(i, j, k)` with
/// `Δ(b_i b_j b_k) ≠ (b_i ⊗ 1) Δ(b_j) (1 ⊗ b_k)`. Triples that are not
/// composable vanish on both sides once `z` meets the idempotent
/// constraints, so only composable ones are visited.
pub fn bimodule_failure(a: &PathAlgebra, z: &Tensor) -> Option<(usize, usize, usize)> {
    let basis = a.basis();
    let d = a.dim();
    let delta: Vec<Tensor> = (0..d).map(|x| left_mul(a, &Element::basis(x), z)).collect();
    let delta_of = |e: &Element| {
        let mut t = Tensor::new();
        for (c, k) in e.terms() {
            for (&key, v) in &delta[c] {
                add_to(&mut t, key, k * v);
            }
        }
        t
    };
    for j in 0..d {
        let (s, t) = (basis[j].source(), basis[j].target());
        for i in (0..d).filter(|&i| basis[i].target() == s) {
            let bi = Element::basis(i);
            let left = left_mul(a, &bi, &delta[j]);
            let ij = a.multiply(&bi, &Element::basis(j));
            for k in (0..d).filter(|&k| basis[k].source() == t) {
                let bk = Element::basis(k);
                let rhs = right_mul(a, &left, &bk);
                let lhs = delta_of(&a.multiply(&ij, &bk));
                if lhs != rhs {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Terms of `t` as `(coefficient, left path, right path)`.
pub fn tensor_terms<'a>(a: &'a PathAlgebra, t: &'a Tensor) -> impl Iterator<Item = (&'a BigRational, &'a Path, &'a Path)> + 'a {
    t.iter().map(move |(&(p, q), c)| (c, &a.basis()[p], &a.basis()[q]))
}

/// Valency-2 vertices with one arrow in, one arrow out and zero composite;
/// with `extended` also `c` and `d` of a type D_II witness when of valency 3.
pub fn special_vertices(a: &PathAlgebra, extended: bool) -> Result<BTreeSet<Vertex>> {
    let q = a.quiver();
    let mut out = BTreeSet::new();
    for &v in q.vertices() {
        if q.in_degree(v) == 1 && q.out_degree(v) == 1 {
            let u = q.predecessors(v).next().expect("one predecessor");
            let w = q.successors(v).next().expect("one successor");
            if a.reduce_vertices(&[u, v, w]).is_zero() {
                out.insert(v);
            }
        }
    }
    if extended {
        let Some(DWitness::II { c, d, .. }) = classify_d(q) else {
            return Err(Error::Precondition("extended special vertices need a D_II quiver".into()));
        };
        for v in [c, d] {
            if q.valency(v)? == 3 {
                out.insert(v);
            }
        }
    }
    Ok(out)
}

/// Maximal nonzero classes whose endpoints are in `special` or have valency
/// at most one, dropping those that visit `excluded`. An isolated vertex
/// contributes its stationary path.
pub fn basis_paths(a: &PathAlgebra, special: &BTreeSet<Vertex>, excluded: Option<Vertex>) -> Result<Vec<Path>> {
    let q = a.quiver();
    let arrow_idx = |s: Vertex, t: Vertex| {
        a.basis_index(&Path::from_vertices_unchecked(vec![s, t]))
            .expect("arrow is a basis class")
    };
    let endpoint = |v: Vertex| -> Result<bool> { Ok(special.contains(&v) || q.valency(v)? <= 1) };
    let mut out = Vec::new();
    for (i, p) in a.basis().iter().enumerate() {
        let (s, t) = (p.source(), p.target());
        if p.is_stationary() && q.valency(s)? != 0 {
            continue;
        }
        if !endpoint(s)? || !endpoint(t)? {
            continue;
        }
        let left_dead = q.predecessors(s).all(|u| a.mult_basis(arrow_idx(u, s), i).is_none());
        let right_dead = q.successors(t).all(|w| a.mult_basis(i, arrow_idx(t, w)).is_none());
        if left_dead && right_dead && excluded.map_or(true, |c| !p.visits(c)) {
            out.push(p.clone());
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaKind {
    Exact,
    LowerBound,
    NotApplicable,
}

impl fmt::Display for FormulaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaKind::Exact => "exact",
            FormulaKind::LowerBound => "lower-bound",
            FormulaKind::NotApplicable => "not-applicable",
        })
    }
}

/// A special vertex with its incoming and outgoing path statistic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialTerm {
    pub vertex: Vertex,
    pub into: usize,
    pub out: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaResult {
    pub kind: FormulaKind,
    pub value: usize,
    pub basis_paths: Vec<Path>,
    pub special: Vec<SpecialTerm>,
}

impl FormulaResult {
    fn bound(kind: FormulaKind, value: usize) -> Self {
        FormulaResult {
            kind,
            value,
            basis_paths: Vec::new(),
            special: Vec::new(),
        }
    }
}

fn exact(a: &PathAlgebra, special: BTreeSet<Vertex>, excluded: Option<Vertex>, counts: bool) -> Result<FormulaResult> {
    let basis_paths = basis_paths(a, &special, excluded)?;
    let mut terms = Vec::new();
    for v in special {
        let (into, out) = if counts {
            (a.count_in(v)?, a.count_out(v)?)
        } else {
            (a.longest_in(v)?, a.longest_out(v)?)
        };
        terms.push(SpecialTerm { vertex: v, into, out });
    }
    let value = basis_paths.len() + terms.iter().map(|t| t.into * t.out).sum::<usize>();
    Ok(FormulaResult {
        kind: FormulaKind::Exact,
        value,
        basis_paths,
        special: terms,
    })
}

/// Exact value for A, D_I and D_II; lower bounds for D_III, D_IV and
/// non-hereditary E6.
pub fn frobdim_formula(a: &PathAlgebra, label: &ClassLabel) -> Result<FormulaResult> {
    let actual = classify(a.quiver())?;
    if actual != *label {
        return Err(Error::LabelMismatch(format!("given {label}, quiver is {actual}")));
    }
    match &label.kind {
        ClassKind::TypeA => exact(a, special_vertices(a, false)?, None, false),
        ClassKind::TypeD(DWitness::I { c, .. }) => exact(a, special_vertices(a, false)?, Some(*c), false),
        ClassKind::TypeD(DWitness::II { .. }) => exact(a, special_vertices(a, true)?, None, true),
        ClassKind::TypeD(DWitness::III { .. }) => Ok(FormulaResult::bound(FormulaKind::LowerBound, 2)),
        ClassKind::TypeD(DWitness::IV { cycle, .. }) => {
            Ok(FormulaResult::bound(FormulaKind::LowerBound, cycle.len()))
        }
        ClassKind::TypeE6(_) if !label.hereditary => Ok(FormulaResult::bound(FormulaKind::LowerBound, 1)),
        ClassKind::TypeE6(_) | ClassKind::Unknown => Ok(FormulaResult::bound(FormulaKind::NotApplicable, 0)),
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub label: ClassLabel,
    pub formula: FormulaResult,
    pub oracle: FrobeniusSpace,
    pub pass: bool,
}

/// Whether an oracle value is consistent with a formula result.
pub fn agrees(formula: &FormulaResult, oracle_dim: usize) -> bool {
    match formula.kind {
        FormulaKind::Exact => formula.value == oracle_dim,
        FormulaKind::LowerBound => oracle_dim >= formula.value,
        FormulaKind::NotApplicable => true,
    }
}

/// Runs formula and oracle on a bound quiver.
pub fn verify(bq: &BoundQuiver) -> Result<VerifyReport> {
    let label = classify(&bq.quiver)?;
    let a = PathAlgebra::build(bq)?;
    let formula = frobdim_formula(&a, &label)?;
    let oracle = frobdim_oracle(&a);
    let pass = agrees(&formula, oracle.dim);
    Ok(VerifyReport {
        label,
        formula,
        oracle,
        pass,
    })
}
