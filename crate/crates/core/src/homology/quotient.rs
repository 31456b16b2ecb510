use std::collections::HashMap;

use exactlin::{EchelonBuilder, SparseVector};

use super::complex::{coinvariant_dims, coinvariant_route};
use super::space::ChainSpace;
use crate::cocyclic::{Chain, ChainKey, ModuleCoalgebra, Ops, QuotientCoalgebra};
use crate::coefficients::CoefficientModule;
use crate::error::{HopfError, Result};
use crate::hopf::{AlgebraElement, HopfPreset, Word};
use crate::ledger::LedgerEntry;

/// Extra degrees of room used when generating an ideal of a truncated
/// preset, so that products leaving the cap can still cancel back into it.
const MARGIN: u32 = 2;

#[derive(Clone, Debug)]
pub struct QuotientReport {
    pub coalgebra: ModuleCoalgebra,
    pub representatives: Vec<String>,
    /// Basis of J (within the cap) as named elements.
    pub ideal: Vec<String>,
    pub ledger: Vec<LedgerEntry>,
    /// Whether the slab hypothesis was evaluated, and its first counterexample.
    pub hypothesis_checked: bool,
    pub hypothesis_witness: Option<String>,
    /// Dimensions of ℂ𝕄_n(B, Y) (coinvariant route) and ₍B₎𝕋_n(B/J, Y).
    pub cm_dims: Option<Vec<usize>>,
    pub quotient_dims: Option<Vec<usize>>,
    pub certified: bool,
}

struct Ideal {
    /// In-cap basis of J as algebra elements.
    basis: Vec<AlgebraElement>,
    representatives: Vec<Word>,
    classes: HashMap<Word, AlgebraElement>,
}

/// The left ideal generated by `gens`, intersected with the cap for a
/// truncated preset. Coordinates outside the cap come first so the
/// echelon rows with in-cap pivots span exactly J ∩ (in-cap span).
fn left_ideal(h: &HopfPreset, gens: &[AlgebraElement]) -> Result<Ideal> {
    let (ambient, cap, big) = match h.cap() {
        None => (h.basis().to_vec(), u32::MAX, None),
        Some(cap) => {
            let q = h.q().expect("truncated presets carry q").clone();
            let big = HopfPreset::uq_sl2(q, cap + MARGIN)?;
            let mut words: Vec<Word> = big.basis().iter().filter(|w| w.total_degree() > cap).copied().collect();
            // Higher degrees first so low-degree words (1 above all) end up
            // as representatives.
            let mut inside = h.basis().to_vec();
            inside.sort_by_key(|w| std::cmp::Reverse(w.total_degree()));
            words.extend(inside);
            (words, cap, Some(big))
        }
    };
    let alg = big.as_ref().unwrap_or(h);
    let index: HashMap<Word, usize> = ambient.iter().enumerate().map(|(i, w)| (*w, i)).collect();
    let outside = ambient.len() - h.dim();
    let to_vec = |x: &AlgebraElement| -> Result<SparseVector> {
        let mut entries = Vec::new();
        for (w, c) in x.iter() {
            let i = index.get(w).ok_or_else(|| HopfError::DegreeOverflow {
                word: h.word_name(w),
                cap: cap.saturating_add(MARGIN),
            })?;
            entries.push((*i, c.clone()));
        }
        Ok(SparseVector::from_entries(ambient.len(), entries))
    };
    let mut builder = EchelonBuilder::new(ambient.len());
    for g in gens {
        let g_deg = g.keys().map(|w| w.total_degree()).max().unwrap_or(0);
        for b in alg.basis() {
            if h.cap().is_some() && b.total_degree() + g_deg > cap + MARGIN {
                continue;
            }
            builder.insert(&to_vec(&alg.mul(&AlgebraElement::basis(*b), g))?);
        }
    }
    let echelon = builder.finish();
    let from_vec = |v: &SparseVector| -> AlgebraElement {
        AlgebraElement::from_terms(v.entries().iter().map(|(i, c)| (ambient[*i], c.clone())))
    };
    let basis: Vec<AlgebraElement> = echelon
        .vectors()
        .iter()
        .filter(|v| v.leading_index().is_some_and(|i| i >= outside))
        .map(from_vec)
        .collect();
    let pivots: std::collections::HashSet<usize> = echelon.pivots().into_iter().collect();
    let mut representatives: Vec<Word> = (outside..ambient.len()).filter(|i| !pivots.contains(i)).map(|i| ambient[i]).collect();
    representatives.sort_by_key(|w| h.index_of(w));
    let reducer = echelon.to_builder();
    let classes = h
        .basis()
        .iter()
        .map(|w| (*w, from_vec(&reducer.reduce(&SparseVector::unit(ambient.len(), index[w])))))
        .collect();
    Ok(Ideal {
        basis,
        representatives,
        classes,
    })
}

fn coideal_witness(h: &HopfPreset, ideal: &Ideal) -> Option<String> {
    let project = |w: &Word| ideal.classes[w].clone();
    for j in &ideal.basis {
        let eps = h.counit(j);
        if !eps.is_zero() {
            return Some(format!("ε({}) = {eps}", h.element_name(j)));
        }
        let mut image: HashMap<(Word, Word), exactlin::Scalar> = HashMap::new();
        for (w, c) in j.iter() {
            for (legs, d) in h.iterated_word(w, 1).iter() {
                let (l, r) = (project(&legs[0]), project(&legs[1]));
                for (a, x) in l.iter() {
                    for (b, y) in r.iter() {
                        let e = image.entry((*a, *b)).or_insert_with(exactlin::Scalar::zero);
                        *e += &(&(c * d) * &(x * y));
                    }
                }
            }
        }
        if image.values().any(|v| !v.is_zero()) {
            return Some(format!("Δ({}) ∉ J⊗B + B⊗J", h.element_name(j)));
        }
    }
    None
}

/// Builds B/J, verifies that J is a coideal and, for a finite Hopf preset,
/// compares ℂ𝕄_n(B, Y) with ₍B₎𝕋_n(B/J, Y) for n ≤ top. The slab hypothesis
/// "p* kills every chain with a J entry" is evaluated with p* the projection
/// onto ₍B₎(𝕋/I), which agrees with p for aYD coefficients; the literal p
/// is recorded alongside for information.
pub fn analyze_quotient(h: &HopfPreset, gens: &[AlgebraElement], y: &CoefficientModule, top: usize) -> Result<QuotientReport> {
    let ideal = left_ideal(h, gens)?;
    if let Some(w) = coideal_witness(h, &ideal) {
        return Err(HopfError::NotCoideal(w));
    }
    let coalgebra = if ideal.basis.is_empty() {
        ModuleCoalgebra::Regular
    } else {
        ModuleCoalgebra::Quotient(QuotientCoalgebra {
            representatives: ideal.representatives.clone(),
            classes: ideal.classes.clone(),
        })
    };
    let mut ledger = vec![
        LedgerEntry::passed("J is a coideal with ε(J) = 0", vec![], true),
    ];
    let mut report = QuotientReport {
        representatives: ideal.representatives.iter().map(|w| h.word_name(w)).collect(),
        ideal: ideal.basis.iter().map(|j| h.element_name(j)).collect(),
        coalgebra: coalgebra.clone(),
        ledger: Vec::new(),
        hypothesis_checked: false,
        hypothesis_witness: None,
        cm_dims: None,
        quotient_dims: None,
        certified: false,
    };
    if !h.is_finite() {
        ledger.push(LedgerEntry::new(
            "quotient certification",
            vec![],
            false,
            Some("not attempted: truncated preset".into()),
        ));
        report.ledger = ledger;
        return Ok(report);
    }
    let degrees: Vec<usize> = (0..=top).collect();
    let quotient_dims = coinvariant_dims(h, &coalgebra, y, top)?;
    let (cm, quotients) = coinvariant_route(h, y, top, 2)?;
    if h.is_hopf() {
        let x = ModuleCoalgebra::Regular;
        let ops = Ops::new(h, &x, y)?;
        let mut witness = None;
        let mut literal = None;
        'outer: for n in 0..=top {
            let space = ChainSpace::new(h.basis(), n + 1, y.dim());
            let others = ChainSpace::new(h.basis(), n, y.dim());
            for slot in 0..=n {
                for j in &ideal.basis {
                    for i in 0..others.dim() {
                        let k = others.key(i);
                        let mut chain = Chain::zero();
                        for (w, c) in j.iter() {
                            let mut slots: Vec<Word> = k.slots.to_vec();
                            slots.insert(slot, *w);
                            chain.add_term(ChainKey::new(&slots, k.y), c.clone());
                        }
                        if literal.is_none() && !ops.cm_project(&chain)?.is_zero() {
                            literal = Some(format!("n={n}: p({}) ≠ 0", ops.chain_name(&chain)));
                        }
                        if !quotients[n].subspace.contains(&space.to_vector(h, &chain)?) {
                            witness = Some(format!("n={n}: p*({}) ≠ 0", ops.chain_name(&chain)));
                            break 'outer;
                        }
                    }
                }
            }
        }
        report.hypothesis_checked = true;
        report.hypothesis_witness = witness.clone();
        ledger.push(LedgerEntry::new("p* kills the J-slabs", degrees.clone(), false, witness));
        ledger.push(LedgerEntry::new("literal p kills the J-slabs", degrees.clone(), false, literal));
    }
    let dims_witness = (0..=top)
        .find(|&n| cm.dims[n] != quotient_dims[n])
        .map(|n| format!("n={n}: ℂ𝕄 {} vs ₍B₎𝕋(B/J,Y) {}", cm.dims[n], quotient_dims[n]));
    report.certified = report.hypothesis_checked && report.hypothesis_witness.is_none() && dims_witness.is_none();
    // The lemma only predicts equal dimensions under the slab hypothesis.
    let fatal = report.hypothesis_checked && report.hypothesis_witness.is_none();
    ledger.push(LedgerEntry::new("ℂ𝕄(B,Y) ≅ ₍B₎𝕋(B/J,Y) by dimension", degrees, fatal, dims_witness));
    report.cm_dims = Some(cm.dims);
    report.quotient_dims = Some(quotient_dims);
    report.ledger = ledger;
    Ok(report)
}

/// As `analyze_quotient`, but a failed slab hypothesis is an error.
pub fn quotient_module_coalgebra(h: &HopfPreset, gens: &[AlgebraElement], y: &CoefficientModule, top: usize) -> Result<QuotientReport> {
    let report = analyze_quotient(h, gens, y, top)?;
    if let Some(w) = &report.hypothesis_witness {
        return Err(HopfError::HypothesisFailed(w.clone()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_ideal_is_trivial() {
        let h = HopfPreset::kc2();
        let y = CoefficientModule::trivial(&h);
        let r = quotient_module_coalgebra(&h, &[], &y, 2).unwrap();
        assert!(r.coalgebra.is_regular());
        assert!(r.certified);
    }

    #[test]
    fn sweedler_nilpotent_quotient() {
        let h = HopfPreset::sweedler4();
        let y = CoefficientModule::trivial(&h);
        let r = analyze_quotient(&h, &[h.parse_element("x").unwrap()], &y, 2).unwrap();
        assert_eq!(r.representatives, vec!["1", "g"]);
        assert_eq!(r.quotient_dims, Some(vec![1, 2, 4]));
    }

    #[test]
    fn non_coideal_is_rejected() {
        let h = HopfPreset::kc2();
        let y = CoefficientModule::trivial(&h);
        let r = analyze_quotient(&h, &[h.parse_element("g").unwrap()], &y, 1);
        assert!(matches!(r, Err(HopfError::NotCoideal(_))));
    }

    #[test]
    fn uq_quotient_by_root_vectors() {
        let h = HopfPreset::uq_sl2(exactlin::Scalar::from_int(2), 2).unwrap();
        let y = CoefficientModule::coalgebra_self(&h).unwrap();
        let gens = [h.parse_element("X+").unwrap(), h.parse_element("X-").unwrap()];
        let r = analyze_quotient(&h, &gens, &y, 1).unwrap();
        assert_eq!(r.representatives.len(), 2);
        assert_eq!(r.representatives[0], "1");
    }
}
