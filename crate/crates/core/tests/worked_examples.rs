//! Small hand-checked examples for each public operation.

use std::collections::BTreeSet;

use frobdim::algebra::{Element, PathAlgebra};
use frobdim::classify::{
    check_mutation_class_a, classify, connecting_vertices, detect_type_ii, detect_type_iii,
    detect_type_iv, e6_templates, is_mutation_class_a, match_e6, ClassKind, DWitness,
};
use frobdim::corpus;
use frobdim::format::parse_quiver;
use frobdim::frobenius::{
    basis_paths, coproduct_of, frobdim_formula, frobdim_oracle, special_vertices, tensor_terms,
    verify, FormulaKind,
};
use frobdim::quiver::{enumerate_mutation_class, is_isomorphic, Arrow, Path, Quiver, Vertex};
use frobdim::relations::{bound_quiver, relations_a, relations_d, relations_e6, BoundQuiver, Relation};

fn v(i: u32) -> Vertex {
    Vertex(i)
}

fn q(n: u32, pairs: &[(u32, u32)]) -> Quiver {
    Quiver::from_pairs(n, pairs).unwrap()
}

fn pairs(q: &Quiver) -> BTreeSet<(u32, u32)> {
    q.arrow_pairs().into_iter().map(|(s, t)| (s.0, t.0)).collect()
}

fn three_cycle() -> Quiver {
    q(3, &[(1, 2), (2, 3), (3, 1)])
}

fn algebra(q: &Quiver) -> PathAlgebra {
    PathAlgebra::build(&bound_quiver(q).unwrap()).unwrap()
}

fn strings(rels: &[Relation]) -> BTreeSet<String> {
    rels.iter().map(|r| r.to_string()).collect()
}

/// The D_II core on `a, b, c, d = 1..4` with its relations.
fn d_ii_core() -> (Quiver, DWitness) {
    let core = q(4, &[(3, 2), (2, 4), (3, 1), (1, 4), (4, 3)]);
    let w = detect_type_ii(&core).expect("core is a D_II shape");
    (core, w)
}

fn template_quiver(index: usize, mask: u32) -> Quiver {
    e6_templates()[index - 1].oriented(mask).0
}

fn path(q: &Quiver, vs: &[u32]) -> Path {
    q.path(&vs.iter().map(|&i| v(i)).collect::<Vec<_>>()).unwrap()
}

mod parsing {
    use super::*;

    #[test]
    fn smallest_nonempty_file() {
        let q = parse_quiver("vertices 2\narrow a 1 2").unwrap();
        assert_eq!(q.n_vertices(), 2);
        assert_eq!(q.arrows(), &[Arrow::new("a", v(1), v(2))]);
    }

    #[test]
    fn two_cycles_are_rejected() {
        let e = parse_quiver("vertices 2\narrow a 1 2\narrow b 2 1").unwrap_err();
        assert!(e.to_string().contains("2-cycle"), "{e}");
    }

    #[test]
    fn e6_member_eight() {
        let text = "vertices 6\narrow a 1 2\narrow b 3 2\narrow c 2 4\narrow d 2 6\narrow e 4 1\n\
                    arrow f 4 5\narrow g 5 2\narrow h 6 3\narrow i 6 5\n";
        let q = parse_quiver(text).unwrap();
        assert_eq!((q.n_vertices(), q.n_arrows()), (6, 9));
    }
}

mod quiver_ops {
    use super::*;

    #[test]
    fn sink_mutation_reverses() {
        let m = q(2, &[(1, 2)]).mutate(v(2)).unwrap();
        assert_eq!(pairs(&m), BTreeSet::from([(2, 1)]));
    }

    #[test]
    fn mutation_at_a_source_of_the_five_vertex_quiver() {
        let m = corpus::sink_source_example().mutate(v(4)).unwrap();
        assert_eq!(pairs(&m), BTreeSet::from([(1, 2), (2, 5), (5, 1), (2, 3), (3, 4)]));
    }

    #[test]
    fn isomorphism_examples() {
        let other = Quiver::new([v(3), v(4)], vec![Arrow::new("x", v(3), v(4))]).unwrap();
        let f = is_isomorphic(&q(2, &[(1, 2)]), &other).unwrap();
        assert_eq!(f.get(v(1)), Some(v(3)));
        assert!(is_isomorphic(&q(2, &[(1, 2)]), &q(2, &[(2, 1)])).is_some());
        assert!(is_isomorphic(&corpus::linear_a(3), &three_cycle()).is_none());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_mutation_class(&corpus::linear_a(2), 100).unwrap().len(), 1);
        assert_eq!(enumerate_mutation_class(&corpus::linear_a(3), 100).unwrap().len(), 4);
        assert_eq!(enumerate_mutation_class(&corpus::e6_seed(), 100).unwrap().len(), 67);
    }

    #[test]
    fn valency_and_three_cycles() {
        assert_eq!(q(2, &[(1, 2)]).valency(v(1)).unwrap(), 1);
        let c = three_cycle();
        for &x in c.vertices() {
            assert_eq!(c.valency(x).unwrap(), 2);
        }
        assert_eq!(c.three_cycles().len(), 1);
    }
}

mod classification {
    use super::*;

    #[test]
    fn type_a_membership() {
        assert!(is_mutation_class_a(&corpus::linear_a(5)).unwrap());
        assert!(is_mutation_class_a(&corpus::sink_source_example()).unwrap());
        let square = q(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let why = check_mutation_class_a(&square).unwrap().unwrap();
        assert!(why.to_string().starts_with("non-trivial cycle of length 4"), "{why}");
    }

    #[test]
    fn connecting_vertex_examples() {
        assert_eq!(connecting_vertices(&q(2, &[(1, 2)])).unwrap(), BTreeSet::from([v(1), v(2)]));
        assert_eq!(connecting_vertices(&three_cycle()).unwrap(), BTreeSet::from([v(1), v(2), v(3)]));
        assert_eq!(connecting_vertices(&corpus::linear_a(3)).unwrap(), BTreeSet::from([v(1), v(3)]));
    }

    #[test]
    fn type_d_examples() {
        match classify(&corpus::d_i_fork(0, false)).unwrap().kind {
            ClassKind::TypeD(DWitness::I { a, b, c }) => {
                assert_eq!(BTreeSet::from([a, b]), BTreeSet::from([v(1), v(2)]));
                assert_eq!(c, v(3));
            }
            k => panic!("unexpected {k:?}"),
        }
        assert!(matches!(detect_type_iii(&corpus::d_iii_square()), Some(DWitness::III { .. })));
        let square = q(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        match classify(&square).unwrap().kind {
            ClassKind::TypeD(DWitness::IV { cycle, spikes }) => {
                assert_eq!(cycle.len(), 4);
                assert!(spikes.iter().all(Option::is_none));
            }
            k => panic!("unexpected {k:?}"),
        }
    }

    #[test]
    fn e6_template_eighteen() {
        let q = template_quiver(18, 0);
        assert!(q.has_arrow(v(1), v(2)));
        let m = match_e6(&q).unwrap();
        assert_eq!(m.template, 18);
        assert_eq!(m.map.len(), 6);
        assert_eq!(m.orientations.len(), 1);
        assert!(match_e6(&corpus::linear_a(6)).is_none());
    }

    #[test]
    fn labels() {
        let l = classify(&corpus::linear_a(4)).unwrap();
        assert_eq!((l.tag().as_str(), l.hereditary), ("A", true));
        let l = classify(&three_cycle()).unwrap();
        assert_eq!((l.tag().as_str(), l.hereditary), ("A", false));
        let l = classify(&template_quiver(21, 0)).unwrap();
        assert!(matches!(l.kind, ClassKind::TypeE6(ref m) if m.template == 21));
        assert!(!l.hereditary);
    }
}

mod relation_examples {
    use super::*;

    #[test]
    fn type_a() {
        assert!(relations_a(&corpus::linear_a(5)).unwrap().is_empty());
        assert_eq!(relations_a(&three_cycle()).unwrap().len(), 3);
        let rels = relations_a(&corpus::sink_source_example()).unwrap();
        assert_eq!(strings(&rels), BTreeSet::from(["zero 1 2 5".into(), "zero 2 5 1".into(), "zero 5 1 2".into()]));
    }

    #[test]
    fn type_d() {
        let sq = corpus::d_iii_square();
        let rels = relations_d(&sq, &detect_type_iii(&sq).unwrap()).unwrap();
        assert_eq!(rels.len(), 4);
        assert!(rels.iter().all(|r| matches!(r, Relation::Zero(p) if p.len() == 3)));

        let (core, w) = d_ii_core();
        let rels = relations_d(&core, &w).unwrap();
        let comm: Vec<_> = rels.iter().filter(|r| matches!(r, Relation::Comm(..))).collect();
        assert_eq!(comm.len(), 1);
        let ends: BTreeSet<_> = comm[0].paths().into_iter().map(|p| p.to_string()).collect();
        assert_eq!(ends, BTreeSet::from(["3 1 4".into(), "3 2 4".into()]));
        let zeros: BTreeSet<_> = rels.iter().filter(|r| matches!(r, Relation::Zero(_))).map(|r| r.to_string()).collect();
        assert_eq!(
            zeros,
            BTreeSet::from(["zero 1 4 3".into(), "zero 2 4 3".into(), "zero 4 3 1".into(), "zero 4 3 2".into()])
        );

        let c = three_cycle();
        let rels = relations_d(&c, &detect_type_iv(&c).unwrap()).unwrap();
        assert_eq!(rels.len(), 3);
        assert!(rels.iter().all(|r| matches!(r, Relation::Zero(p) if p.len() == 2)));
    }

    #[test]
    fn type_e6() {
        let rels_of = |i: usize| {
            let q = template_quiver(i, 0);
            relations_e6(&q, &match_e6(&q).unwrap()).unwrap()
        };
        assert!(rels_of(1).is_empty());
        let r21 = rels_of(21);
        assert_eq!(r21.len(), 5);
        assert!(r21.iter().all(|r| matches!(r, Relation::Zero(p) if p.len() == 4)));
        let r9 = rels_of(9);
        assert!(r9.iter().any(|r| matches!(r, Relation::Comm(p, q)
            if BTreeSet::from([p.to_string(), q.to_string()]) == BTreeSet::from(["2 4 5".into(), "2 3 6 5".into()]))));
    }

    #[test]
    fn bound_quivers() {
        assert!(bound_quiver(&corpus::linear_a(3)).unwrap().relations.is_empty());
        assert_eq!(bound_quiver(&three_cycle()).unwrap().relations.len(), 3);
    }
}

mod algebra_examples {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(algebra(&corpus::linear_a(3)).dim(), 6);
        assert_eq!(algebra(&three_cycle()).dim(), 6);
        let (core, w) = d_ii_core();
        let bq = BoundQuiver::new(core.clone(), relations_d(&core, &w).unwrap()).unwrap();
        let a = PathAlgebra::build(&bq).unwrap();
        assert_eq!(a.dim(), 10);
        assert_eq!(a.dim_hom(v(3), v(4)).unwrap(), 1);
        let (alpha, delta) = (a.reduce(&path(&core, &[3, 1])), a.reduce(&path(&core, &[1, 4])));
        let (beta, gamma) = (a.reduce(&path(&core, &[3, 2])), a.reduce(&path(&core, &[2, 4])));
        assert_eq!(a.multiply(&alpha, &delta), a.multiply(&beta, &gamma));
        assert!(!a.multiply(&alpha, &delta).is_zero());
    }

    #[test]
    fn hom_dimensions() {
        assert_eq!(algebra(&corpus::linear_a(3)).dim_hom(v(1), v(3)).unwrap(), 1);
        assert_eq!(algebra(&three_cycle()).dim_hom(v(1), v(3)).unwrap(), 0);
        assert!(algebra(&three_cycle()).dim_hom(v(1), v(9)).is_err());
    }

    #[test]
    fn path_statistics() {
        for n in 2..7 {
            let a = algebra(&corpus::linear_a(n));
            assert_eq!(a.longest_in(v(n)).unwrap(), n as usize - 1);
            assert_eq!(a.longest_out(v(1)).unwrap(), n as usize - 1);
        }
        for n in 1..5 {
            let a = algebra(&corpus::lineal_freecycle(n));
            let b = v(n + 2);
            assert_eq!(a.longest_in(b).unwrap(), n as usize + 1);
            assert_eq!(a.longest_out(b).unwrap(), 1);
        }
        for m in 1..5 {
            let a = algebra(&corpus::d_ii_example(1, m));
            assert_eq!(a.count_in(v(4)).unwrap(), 4);
            assert_eq!(a.count_out(v(4)).unwrap(), m as usize + 1);
        }
        assert_eq!(algebra(&q(2, &[(1, 2)])).count_in(v(1)).unwrap(), 0);
    }

    #[test]
    fn products() {
        let a = algebra(&three_cycle());
        let e = |i| Element::basis(a.idempotent(v(i)).unwrap());
        assert_eq!(a.multiply(&e(1), &e(1)), e(1));
        assert!(a.multiply(&e(1), &e(2)).is_zero());
        let (g1, g2) = (a.reduce_vertices(&[v(1), v(2)]), a.reduce_vertices(&[v(2), v(3)]));
        assert!(a.multiply(&g1, &g2).is_zero());
    }
}

mod frobenius_examples {
    use super::*;

    #[test]
    fn special_vertex_examples() {
        assert!(special_vertices(&algebra(&corpus::linear_a(4)), false).unwrap().is_empty());
        assert_eq!(special_vertices(&algebra(&three_cycle()), false).unwrap().len(), 3);
        let a = algebra(&corpus::d_ii_example(1, 2));
        assert!(special_vertices(&a, true).unwrap().contains(&v(4)));
    }

    #[test]
    fn basis_path_examples() {
        for n in 2..6 {
            let a = algebra(&corpus::linear_a(n));
            let s = special_vertices(&a, false).unwrap();
            let b = basis_paths(&a, &s, None).unwrap();
            assert_eq!(b, vec![path(a.quiver(), &(1..=n).collect::<Vec<_>>())]);
        }
        let n = 3;
        let a = algebra(&corpus::lineal_freecycle(n));
        let s = special_vertices(&a, false).unwrap();
        let got: BTreeSet<String> = basis_paths(&a, &s, None).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, BTreeSet::from(["1 2 3 4 5".into(), "5 6".into()]));

        let a = algebra(&corpus::big_example());
        let s = special_vertices(&a, false).unwrap();
        assert!(basis_paths(&a, &s, None).unwrap().is_empty());
    }

    #[test]
    fn formula_values() {
        let value = |q: &Quiver| {
            let f = frobdim_formula(&algebra(q), &classify(q).unwrap()).unwrap();
            assert_eq!(f.kind, FormulaKind::Exact);
            f.value
        };
        let q = corpus::sink_source_example();
        assert_eq!(value(&q), 4);
        assert_eq!(value(&q.mutate(v(4)).unwrap()), 6);
    }

    #[test]
    fn oracle_values() {
        assert_eq!(frobdim_oracle(&algebra(&q(1, &[]))).dim, 1);
        for n in 2..7 {
            assert_eq!(frobdim_oracle(&algebra(&corpus::linear_a(n))).dim, 1);
        }
        assert_eq!(frobdim_oracle(&algebra(&q(3, &[(1, 2), (3, 2)]))).dim, 0);
    }

    #[test]
    fn lineal_coproduct() {
        let a = algebra(&corpus::linear_a(3));
        let s = frobdim_oracle(&a);
        assert_eq!(s.dim, 1);
        let t = coproduct_of(&s, &a, 0, &Element::basis(a.idempotent(v(1)).unwrap())).unwrap();
        let terms: Vec<String> = tensor_terms(&a, &t).map(|(_, p, q)| format!("{p}|{q}")).collect();
        assert_eq!(terms, vec!["1 2 3|e 1".to_string()]);
        assert_eq!(coproduct_of(&s, &a, 0, &a.unit()).unwrap(), s.basis[0]);
        assert!(coproduct_of(&s, &a, 1, &a.unit()).is_err());
    }

    #[test]
    fn freecycle_structure_at_the_cycle_entry() {
        let n = 2;
        let a = algebra(&corpus::lineal_freecycle(n));
        let s = frobdim_oracle(&a);
        let ea = Element::basis(a.idempotent(v(n + 1)).unwrap());
        let found = (0..s.dim).any(|i| {
            let t = coproduct_of(&s, &a, i, &ea).unwrap();
            let terms: Vec<String> = tensor_terms(&a, &t).map(|(_, p, q)| format!("{p}|{q}")).collect();
            terms == ["3 4|1 2 3"]
        });
        assert!(found);
    }

    #[test]
    fn verification_reports() {
        let check = |q: &Quiver, kind: FormulaKind, value: usize, oracle: usize| {
            let r = verify(&bound_quiver(q).unwrap()).unwrap();
            assert_eq!((r.formula.kind, r.formula.value, r.oracle.dim, r.pass), (kind, value, oracle, true));
        };
        check(&corpus::mutation_pair_first(), FormulaKind::Exact, 0, 0);
        check(&corpus::mutation_pair_second(), FormulaKind::Exact, 7, 7);
        check(&corpus::d_iii_example(), FormulaKind::LowerBound, 2, 2);
        check(&three_cycle(), FormulaKind::Exact, 6, 6);
    }
}
