use exactlin::Scalar;
use hopfhc_core::{AlgebraElement, HopfPreset, TensorElement};
use proptest::prelude::*;

fn presets() -> Vec<HopfPreset> {
    vec![
        HopfPreset::kc2(),
        HopfPreset::ks3(),
        HopfPreset::sweedler4(),
        HopfPreset::km2(),
        HopfPreset::uq_sl2(Scalar::from_int(2), 3).unwrap(),
    ]
}

/// Random combination of basis words of total degree at most `max_deg`.
fn element(h: &HopfPreset, coeffs: &[i64], max_deg: u32) -> AlgebraElement {
    let words: Vec<_> = h.basis().iter().filter(|w| w.total_degree() <= max_deg).collect();
    AlgebraElement::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (*words[i % words.len()], Scalar::from_int(*c))),
    )
}

fn apply_pair(h: &HopfPreset, t: &TensorElement, left_s: bool) -> AlgebraElement {
    let mut acc = AlgebraElement::zero();
    for (legs, c) in t.iter() {
        let (a, b) = (AlgebraElement::basis(legs[0]), AlgebraElement::basis(legs[1]));
        let prod = if left_s {
            h.mul(&h.antipode(&a, 1).unwrap(), &b)
        } else {
            h.mul(&a, &h.antipode(&b, 1).unwrap())
        };
        acc.add_scaled(&prod, c);
    }
    acc
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bialgebra_axioms(which in 0usize..5, a in coeffs(), b in coeffs(), c in coeffs()) {
        let h = &presets()[which];
        let (x, y, z) = (element(h, &a, 1), element(h, &b, 1), element(h, &c, 1));
        prop_assert_eq!(h.mul(&h.mul(&x, &y), &z), h.mul(&x, &h.mul(&y, &z)));
        prop_assert_eq!(h.mul(&h.one(), &x), x.clone());
        let xy = h.mul(&x, &y);
        prop_assert_eq!(h.iterated(&xy, 1), h.tensor_mul(&h.iterated(&x, 1), &h.iterated(&y, 1)));
        prop_assert_eq!(h.counit(&xy), h.counit(&x) * h.counit(&y));
        // (Δ ⊗ id)Δ = (id ⊗ Δ)Δ, both compared to the twice-iterated coproduct
        let mut left = TensorElement::zero();
        let mut right = TensorElement::zero();
        for (legs, c) in h.iterated(&x, 1).iter() {
            for (l, d) in h.iterated_word(&legs[0], 1).iter() {
                left.add_term([l[0], l[1], legs[1]].into_iter().collect(), c * d);
            }
            for (r, d) in h.iterated_word(&legs[1], 1).iter() {
                right.add_term([legs[0], r[0], r[1]].into_iter().collect(), c * d);
            }
        }
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left, h.iterated(&x, 2));
    }

    #[test]
    fn antipode_axioms(which in 0usize..5, a in coeffs(), b in coeffs()) {
        let h = &presets()[which];
        prop_assume!(h.is_hopf());
        let (x, y) = (element(h, &a, 1), element(h, &b, 1));
        let unit = h.one().scale(&h.counit(&x));
        let dx = h.iterated(&x, 1);
        prop_assert_eq!(apply_pair(h, &dx, true), unit.clone());
        prop_assert_eq!(apply_pair(h, &dx, false), unit);
        let s = |e: &AlgebraElement| h.antipode(e, 1).unwrap();
        prop_assert_eq!(s(&h.mul(&x, &y)), h.mul(&s(&y), &s(&x)));
        prop_assert_eq!(h.antipode(&s(&x), -1).unwrap(), x);
    }
}

#[test]
fn basis_sizes() {
    let dims: Vec<usize> = presets().iter().map(HopfPreset::dim).collect();
    assert_eq!(dims, [2, 6, 4, 2, 30]);
    assert_eq!(HopfPreset::uq_sl2(Scalar::q(), 2).unwrap().dim(), 14);
}
