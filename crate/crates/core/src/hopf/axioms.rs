use smallvec::SmallVec;

use super::{AlgebraElement, HopfPreset, Tensor, TensorElement, Word};
use crate::error::Result;
use crate::ledger::{check_cases, LedgerEntry};

fn flip(t: &TensorElement) -> TensorElement {
    t.iter()
        .map(|(k, c)| {
            let r: Tensor = k.iter().rev().copied().collect();
            (r, c.clone())
        })
        .collect()
}

/// Applies Δ to leg `slot` of every term.
fn comultiply_leg(h: &HopfPreset, t: &TensorElement, slot: usize) -> TensorElement {
    let mut out = TensorElement::zero();
    for (k, c) in t.iter() {
        for (pair, d) in h.iterated_word(&k[slot], 1).iter() {
            let mut nk: Tensor = SmallVec::with_capacity(k.len() + 1);
            nk.extend_from_slice(&k[..slot]);
            nk.extend_from_slice(pair);
            nk.extend_from_slice(&k[slot + 1..]);
            out.add_term(nk, c * d);
        }
    }
    out
}

/// Applies ε to leg `slot`, dropping it.
fn counit_leg(t: &TensorElement, slot: usize) -> TensorElement {
    let mut out = TensorElement::zero();
    for (k, c) in t.iter() {
        let e = k[slot].counit();
        if e.is_zero() {
            continue;
        }
        let mut nk = k.clone();
        nk.remove(slot);
        out.add_term(nk, c * &e);
    }
    out
}

fn single_leg(t: &TensorElement) -> AlgebraElement {
    t.iter().map(|(k, c)| (k[0], c.clone())).collect()
}

/// Verifies the bialgebra and Hopf axioms on every basis word of total degree
/// at most `sample_cap` (all basis words when `None`), returning one ledger
/// entry per axiom with the first counterexample.
pub fn check_hopf_axioms(h: &HopfPreset, sample_cap: Option<u32>) -> Result<Vec<LedgerEntry>> {
    let words: Vec<Word> = h
        .basis()
        .iter()
        .filter(|w| sample_cap.is_none_or(|c| w.total_degree() <= c))
        .copied()
        .collect();
    let pairs: Vec<(Word, Word)> = words.iter().flat_map(|a| words.iter().map(move |b| (*a, *b))).collect();
    let triples: Vec<(Word, Word, Word)> = pairs
        .iter()
        .flat_map(|(a, b)| words.iter().map(move |c| (*a, *b, *c)))
        .collect();
    let name = |w: &Word| h.word_name(w);
    let one = h.one();
    let mut out = Vec::new();

    out.push(check_cases("unit", vec![], true, &words, |w| {
        let b = AlgebraElement::basis(*w);
        Ok((h.mul(&one, &b) != b || h.mul(&b, &one) != b).then(|| format!("w={}", name(w))))
    })?);

    out.push(check_cases("associativity", vec![], true, &triples, |(a, b, c)| {
        let (a, b, c) = (AlgebraElement::basis(*a), AlgebraElement::basis(*b), AlgebraElement::basis(*c));
        let lhs = h.mul(&h.mul(&a, &b), &c);
        let rhs = h.mul(&a, &h.mul(&b, &c));
        Ok((lhs != rhs).then(|| {
            format!(
                "({})({})({}): {} vs {}",
                h.element_name(&a),
                h.element_name(&b),
                h.element_name(&c),
                h.element_name(&lhs),
                h.element_name(&rhs)
            )
        }))
    })?);

    out.push(check_cases("coassociativity", vec![], true, &words, |w| {
        let d = h.iterated_word(w, 1);
        let left = comultiply_leg(h, &d, 0);
        let right = comultiply_leg(h, &d, 1);
        Ok((left != right).then(|| format!("w={}", name(w))))
    })?);

    out.push(check_cases("counit", vec![], true, &words, |w| {
        let d = h.iterated_word(w, 1);
        let b = AlgebraElement::basis(*w);
        let l = single_leg(&counit_leg(&d, 0));
        let r = single_leg(&counit_leg(&d, 1));
        Ok((l != b || r != b).then(|| format!("w={}", name(w))))
    })?);

    out.push(check_cases("coproduct is multiplicative", vec![], true, &pairs, |(a, b)| {
        let prod = h.mul_words(a, b);
        let lhs = h.iterated(&prod, 1);
        let rhs = h.tensor_mul(&h.iterated_word(a, 1), &h.iterated_word(b, 1));
        Ok((lhs != rhs).then(|| format!("a={}, b={}", name(a), name(b))))
    })?);

    out.push(check_cases("counit is multiplicative", vec![], true, &pairs, |(a, b)| {
        let lhs = h.counit(&h.mul_words(a, b));
        let rhs = &a.counit() * &b.counit();
        Ok((lhs != rhs).then(|| format!("a={}, b={}", name(a), name(b))))
    })?);

    let unit_cop = h.iterated_word(&h.unit(), 1);
    out.push(LedgerEntry::new(
        "coproduct of unit",
        vec![],
        true,
        (*unit_cop != TensorElement::basis(SmallVec::from_slice(&[h.unit(), h.unit()])))
            .then(|| h.tensor_name(&unit_cop)),
    ));

    let cocomm = check_cases("cocommutative flag agrees", vec![], true, &words, |w| {
        let d = h.iterated_word(w, 1);
        Ok((flip(&d) != *d).then(|| format!("w={}", name(w))))
    })?;
    let symmetric = cocomm.pass;
    out.push(LedgerEntry::new(
        "cocommutative flag agrees",
        vec![],
        true,
        (symmetric != h.is_cocommutative()).then(|| {
            format!(
                "flag={} but coproduct symmetric={}; {}",
                h.is_cocommutative(),
                symmetric,
                cocomm.witness.unwrap_or_default()
            )
        }),
    ));

    if h.is_hopf() {
        out.push(check_cases("antipode", vec![], true, &words, |w| {
            let d = h.iterated_word(w, 1);
            let target = h.one().scale(&w.counit());
            let mut left = AlgebraElement::zero();
            let mut right = AlgebraElement::zero();
            for (k, c) in d.iter() {
                let s0 = h.antipode_word(&k[0], false)?;
                let s1 = h.antipode_word(&k[1], false)?;
                left.add_scaled(&h.mul(&s0, &AlgebraElement::basis(k[1])), c);
                right.add_scaled(&h.mul(&AlgebraElement::basis(k[0]), &s1), c);
            }
            Ok((left != target || right != target).then(|| format!("w={}", name(w))))
        })?);

        out.push(check_cases("antipode is invertible", vec![], true, &words, |w| {
            let b = AlgebraElement::basis(*w);
            let si = h.antipode(&h.antipode(&b, -1)?, 1)?;
            let is = h.antipode(&h.antipode(&b, 1)?, -1)?;
            Ok((si != b || is != b).then(|| format!("w={}", name(w))))
        })?);

        out.push(check_cases("antipode is anti-multiplicative", vec![], true, &pairs, |(a, b)| {
            let lhs = h.antipode(&h.mul_words(a, b), 1)?;
            let rhs = h.mul(&*h.antipode_word(b, false)?, &*h.antipode_word(a, false)?);
            Ok((lhs != rhs).then(|| format!("a={}, b={}", name(a), name(b))))
        })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactlin::Scalar;

    fn all_pass(h: &HopfPreset, cap: Option<u32>) {
        for e in check_hopf_axioms(h, cap).unwrap() {
            assert!(e.pass, "{} failed for {}: {:?}", e.name, h.name(), e.witness);
        }
    }

    #[test]
    fn finite_presets_satisfy_axioms() {
        all_pass(&HopfPreset::field(), None);
        all_pass(&HopfPreset::kc2(), None);
        all_pass(&HopfPreset::ks3(), None);
        all_pass(&HopfPreset::sweedler4(), None);
        all_pass(&HopfPreset::km2(), None);
    }

    #[test]
    fn symbolic_uq_satisfies_axioms() {
        let h = HopfPreset::uq_sl2(Scalar::q(), 2).unwrap();
        all_pass(&h, Some(2));
    }
}
