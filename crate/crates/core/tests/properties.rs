use std::sync::OnceLock;

use cobase_core::constructions::build_enumerated;
use cobase_core::group::DEFAULT_ENUMERATION_CAP;
use cobase_core::linalg::VectorIndexer;
use cobase_core::probability::{
    bound_report, pb_bruteforce, pb_formula_diagonal, pb_formula_sym, DEFAULT_TUPLE_CAP,
};
use cobase_core::verify::small_instances;
use cobase_core::{GroupSpec, Matrix, MatrixGroup, SupportKind};
use num_rational::BigRational;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn instances() -> &'static [MatrixGroup] {
    static GROUPS: OnceLock<Vec<MatrixGroup>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        let mut specs = small_instances();
        specs.push(GroupSpec::heisenberg(3, 7));
        specs.push(GroupSpec::diagonal_wreath(3, 7));
        specs
            .iter()
            .map(|s| build_enumerated(s, DEFAULT_ENUMERATION_CAP).unwrap())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_is_closed(gi in 0usize..10, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let g = &instances()[gi];
        let els = g.elements().unwrap();
        let (x, y) = (&els[a.index(els.len())], &els[b.index(els.len())]);
        prop_assert!(g.contains(&(x * y)).unwrap());
        prop_assert!(g.contains(&x.inverse().unwrap()).unwrap());
    }

    #[test]
    fn spectrum_mass(gi in 0usize..10) {
        let g = &instances()[gi];
        for kind in [SupportKind::Fixed, SupportKind::Projective] {
            let s = g.support_spectrum(kind).unwrap();
            prop_assert_eq!(s.total(), g.order().unwrap() as u64);
        }
        prop_assert_eq!(g.support_spectrum(SupportKind::Fixed).unwrap().count(0), 1);
    }

    #[test]
    fn commutator_support(gi in 0usize..10, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let g = &instances()[gi];
        let els = g.elements().unwrap();
        let (x, y) = (&els[a.index(els.len())], &els[b.index(els.len())]);
        let k = Matrix::commutator(x, y).unwrap();
        prop_assert!(k.support().unwrap() <= 2 * x.support().unwrap());
    }

    #[test]
    fn extending_a_base_keeps_it_a_base(gi in 0usize..10, raw in prop::collection::vec(any::<u64>(), 1..4), extra in any::<u64>()) {
        let g = &instances()[gi];
        let idx = VectorIndexer::new(g.field(), g.dim()).unwrap();
        let mut tuple: Vec<_> = raw.iter().map(|&r| idx.decode(r % idx.size())).collect();
        if g.is_base(&tuple).unwrap() {
            tuple.push(idx.decode(extra % idx.size()));
            prop_assert!(g.is_base(&tuple).unwrap());
        }
    }

    #[test]
    fn bound_chain(gi in 0usize..8, c in 1u32..=3) {
        let g = &instances()[gi];
        let r = bound_report(g, c, None).unwrap();
        let pb = pb_bruteforce(g, c, DEFAULT_TUPLE_CAP).unwrap();
        prop_assert!(r.minsupp_bound <= r.union_bound);
        prop_assert!(&r.union_bound <= pb.exact().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn diagonal_formula_agrees(n in 1usize..=3, pi in 0usize..3, c in 1u32..=2) {
        let p = [3u64, 5, 7][pi];
        let g = build_enumerated(&GroupSpec::diagonal(n, p), DEFAULT_ENUMERATION_CAP).unwrap();
        let pb = pb_bruteforce(&g, c, DEFAULT_TUPLE_CAP).unwrap();
        prop_assert_eq!(pb.exact().unwrap(), &pb_formula_diagonal(n, p, c).unwrap());
    }

    #[test]
    fn sym_formula_agrees(m in 1usize..=4, pi in 0usize..2, c in 1u32..=2) {
        let p = [5u64, 7][pi];
        let g = build_enumerated(&GroupSpec::sym_natural(m, p), DEFAULT_ENUMERATION_CAP).unwrap();
        let pb = pb_bruteforce(&g, c, DEFAULT_TUPLE_CAP).unwrap();
        prop_assert_eq!(pb.exact().unwrap(), &pb_formula_sym(m, p, c).unwrap());
    }

    #[test]
    fn pb_is_a_reduced_probability(gi in 0usize..8, c in 1u32..=2) {
        let pb = pb_bruteforce(&instances()[gi], c, DEFAULT_TUPLE_CAP).unwrap();
        let r = pb.exact().unwrap();
        prop_assert!(!r.is_negative() && *r <= BigRational::one());
        let reduced = BigRational::new(r.numer().clone(), r.denom().clone());
        prop_assert_eq!(&reduced, r);
    }
}
