use exactlin::Scalar;
use hopfhc_core::cocyclic::{Chain, ChainKey, ModuleCoalgebra, Ops};
use hopfhc_core::coefficients::{Character, CoefficientModule};
use hopfhc_core::{HopfPreset, Word};
use proptest::prelude::*;

fn coefficient(h: &HopfPreset, which: usize) -> CoefficientModule {
    match which {
        0 => CoefficientModule::trivial(h),
        1 => CoefficientModule::modular_pair(h, Character::Counit, "g").unwrap(),
        _ => CoefficientModule::coalgebra_self(h).unwrap(),
    }
}

fn chain(basis: &[Word], ydim: usize, slots: usize, picks: &[(usize, i64)]) -> Chain {
    Chain::from_terms(picks.iter().map(|&(seed, c)| {
        let mut s = seed;
        let words: Vec<Word> = (0..slots)
            .map(|_| {
                let w = basis[s % basis.len()];
                s /= basis.len();
                w
            })
            .collect();
        (ChainKey::new(&words, s % ydim), Scalar::from_int(c))
    }))
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64)>> {
    proptest::collection::vec((0usize..100_000, -2i64..=2), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn para_cocyclic_relations(which in 0usize..3, n in 0usize..3, p in picks()) {
        let h = HopfPreset::sweedler4();
        let y = coefficient(&h, which);
        let x = ModuleCoalgebra::Regular;
        let ops = Ops::new(&h, &x, &y).unwrap();
        let v = chain(h.basis(), y.dim(), n + 1, &p);
        for j in 0..=n + 1 {
            let dj = ops.face(j, &v).unwrap();
            for i in 0..=j {
                prop_assert_eq!(ops.face(i, &dj).unwrap(), ops.face(j + 1, &ops.face(i, &v).unwrap()).unwrap());
            }
            prop_assert_eq!(ops.face_conj(j, &v).unwrap(), dj.clone());
            if j <= n {
                prop_assert_eq!(ops.tau(&dj).unwrap(), ops.face(j + 1, &ops.tau(&v).unwrap()).unwrap());
            }
        }
        prop_assert_eq!(ops.tau(&ops.face(n + 1, &v).unwrap()).unwrap(), ops.face(0, &v).unwrap());
        prop_assert_eq!(ops.tau(&ops.tau_inv(&v).unwrap()).unwrap(), v.clone());
        prop_assert_eq!(ops.phi(true, &ops.phi(false, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn uq_tau_is_invertible(n in 0usize..2, p in picks()) {
        let h = HopfPreset::uq_sl2(Scalar::from_int(2), 2).unwrap();
        let low: Vec<Word> = h.basis().iter().copied().filter(|w| w.total_degree() <= 1).collect();
        let y = CoefficientModule::trivial(&h);
        let x = ModuleCoalgebra::Regular;
        let ops = Ops::new(&h, &x, &y).unwrap();
        let v = chain(&low, 1, n + 1, &p);
        prop_assert_eq!(ops.tau_inv(&ops.tau(&v).unwrap()).unwrap(), v.clone());
        for j in 0..=n {
            let lhs = ops.tau(&ops.face(j, &v).unwrap()).unwrap();
            prop_assert_eq!(lhs, ops.face(j + 1, &ops.tau(&v).unwrap()).unwrap());
        }
    }

    /// With aYD coefficients p is a cyclic map onto a cocyclic module that
    /// kills every κ_x.
    #[test]
    fn projection_onto_cm(n in 1usize..3, p in picks()) {
        let h = HopfPreset::sweedler4();
        let y = coefficient(&h, 1);
        let x = ModuleCoalgebra::Regular;
        let ops = Ops::new(&h, &x, &y).unwrap();
        let v = chain(h.basis(), y.dim(), n + 1, &p);
        let w = ops.cm_project(&v).unwrap();
        prop_assert_eq!(ops.cm_cyclic(&w).unwrap(), ops.cm_project(&ops.tau(&v).unwrap()).unwrap());
        prop_assert_eq!(ops.cm_project(&ops.cm_include(&w).unwrap()).unwrap(), w.clone());
        let mut cur = w.clone();
        for _ in 0..=n {
            cur = ops.cm_cyclic(&cur).unwrap();
        }
        prop_assert_eq!(cur, w);
        for g in h.generators() {
            let k = ops.kappa(&hopfhc_core::AlgebraElement::basis(g), &v).unwrap();
            prop_assert!(ops.cm_project(&k).unwrap().is_zero());
        }
    }
}
