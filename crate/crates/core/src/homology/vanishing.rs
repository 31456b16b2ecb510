//! The U_q(sl2) relations forced by p*κ_x ≡ 0, certified chain by chain:
//! the difference of the two sides is written explicitly as a combination
//! of κ's (which lie in I) and L_x(W) with ε(x) = 0 (a coinvariant
//! relation), so p* of it vanishes. All products are exact; only the input
//! chains are taken within the cap.
//!
//! For x = X⁺ and x = X⁻K, with Δx = 1⊗x + x⊗K and K x = s·x K
//! (s = q² resp. q⁻²), writing c = h⁰⊗⋯⊗hⁿ⊗y,
//!   A  = S⁻¹(y')x h⁰ ⊗ h¹ ⊗ ⋯ ⊗ hⁿ ⊗ y₀,
//!   R  = K x S⁻¹(y')h⁰ ⊗ Kh¹ ⊗ ⋯ ⊗ Khⁿ ⊗ y₀,
//!   w₀ = S⁻¹(y')h⁰ ⊗ h¹ ⊗ ⋯,  w₁ = K S⁻¹(y')h⁰ ⊗ h¹ ⊗ ⋯,
//!   c′ = Σᵢ h⁰ ⊗ ⋯ ⊗ x hⁱ ⊗ K hⁱ⁺¹ ⊗ ⋯ ⊗ K hⁿ ⊗ y  (1 ≤ i ≤ n),
//! one has A − s⁻¹R = κ_x(c) − (1 − s)κ_K(c′) + L_x(w₀ − w₁).
//! In degree 0, c′ = 0 and w₀ − w₁ gives A − R = κ_x(c) + L_x(w₀ − s w₁)
//! as well, which is the relation exactly as usually stated.

use exactlin::Scalar;

use crate::cocyclic::{Chain, ChainKey, ModuleCoalgebra, Ops};
use crate::coefficients::CoefficientModule;
use crate::error::{HopfError, Result};
use crate::exec;
use crate::homology::space::ChainSpace;
use crate::hopf::{AlgebraElement, HopfPreset, Word};
use crate::ledger::LedgerEntry;

fn expand(slots: &[AlgebraElement], y: usize, c: &Scalar, out: &mut Chain) {
    let mut partial: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), c.clone())];
    for s in slots {
        let mut next = Vec::with_capacity(partial.len() * s.len());
        for (prefix, pc) in &partial {
            for (w, e) in s.iter() {
                let mut p = prefix.clone();
                p.push(*w);
                next.push((p, pc * e));
            }
        }
        partial = next;
    }
    for (p, pc) in partial {
        out.add_term(ChainKey::new(&p, y), pc);
    }
}

/// Σ (slot0(S⁻¹(y')) ⊗ rest·h¹ ⊗ ⋯ ⊗ rest·hⁿ ⊗ y₀), where `slot0` builds
/// the first slot from S⁻¹(y').
fn coacted<F>(h: &HopfPreset, y: &CoefficientModule, k: &ChainKey, rest: &AlgebraElement, slot0: F) -> Result<Chain>
where
    F: Fn(&AlgebraElement) -> AlgebraElement,
{
    let mut out = Chain::zero();
    for (yw, yj, d) in y.coact_basis(k.y) {
        let s = (*h.antipode_word(yw, true)?).clone();
        let mut slots = vec![slot0(&s)];
        for w in &k.slots[1..] {
            slots.push(h.mul(rest, &AlgebraElement::basis(*w)));
        }
        expand(&slots, *yj, d, &mut out);
    }
    Ok(out)
}

/// Σᵢ h⁰ ⊗ ⋯ ⊗ x hⁱ ⊗ K hⁱ⁺¹ ⊗ ⋯ ⊗ K hⁿ ⊗ y over 1 ≤ i ≤ n.
fn inserted(h: &HopfPreset, k: &ChainKey, x: &AlgebraElement, kk: &AlgebraElement) -> Chain {
    let n = k.slots.len() - 1;
    let mut out = Chain::zero();
    for i in 1..=n {
        let slots: Vec<AlgebraElement> = k
            .slots
            .iter()
            .enumerate()
            .map(|(j, w)| {
                let b = AlgebraElement::basis(*w);
                match j.cmp(&i) {
                    std::cmp::Ordering::Less => b,
                    std::cmp::Ordering::Equal => h.mul(x, &b),
                    std::cmp::Ordering::Greater => h.mul(kk, &b),
                }
            })
            .collect();
        expand(&slots, k.y, &Scalar::one(), &mut out);
    }
    out
}

/// The closed formula for κ_x that holds when x₍ₙ₊₁₎S(x₍ₙ₎) collapses,
/// i.e. when S² = id on the legs involved.
pub fn kappa_closed_form(h: &HopfPreset, y: &CoefficientModule, x: &AlgebraElement, k: &ChainKey) -> Result<Chain> {
    let n = k.slots.len() - 1;
    let mut out = coacted(h, y, k, &h.one(), |s| h.mul(&h.mul(s, x), &AlgebraElement::basis(k.slots[0])))?;
    let legs = h.iterated(x, 2 * n);
    for (yw, yj, d) in y.coact_basis(k.y) {
        let s = (*h.antipode_word(yw, true)?).clone();
        for (e, c) in legs.iter() {
            let mut slots = vec![h.mul(&h.mul(&AlgebraElement::basis(e[n]), &s), &AlgebraElement::basis(k.slots[0]))];
            for i in 1..=n {
                let se = (*h.antipode_word(&e[n - i], false)?).clone();
                slots.push(h.mul(&h.mul(&AlgebraElement::basis(e[n + i]), &se), &AlgebraElement::basis(k.slots[i])));
            }
            expand(&slots, *yj, &-(d * c), &mut out);
        }
    }
    Ok(out)
}

struct Setup {
    k: AlgebraElement,
    k_inv: AlgebraElement,
    x_plus: AlgebraElement,
    /// X⁻K, whose coproduct 1⊗X⁻K + X⁻K⊗K mirrors that of X⁺.
    x_minus_k: AlgebraElement,
    q_sq: Scalar,
}

fn setup(h: &HopfPreset) -> Result<Setup> {
    let q = h
        .q()
        .ok_or_else(|| HopfError::InvalidParameter(format!("{} is not U_q(sl2)", h.name())))?
        .clone();
    let k = h.parse_element("K")?;
    Ok(Setup {
        k_inv: h.parse_element("K^-1")?,
        x_plus: h.parse_element("X+")?,
        x_minus_k: h.mul(&h.parse_element("X-")?, &k),
        k,
        q_sq: &q * &q,
    })
}

/// Outcome of every assertion on one chain; `None` means it holds.
#[derive(Default)]
struct ChainOutcome {
    grouplike: [Option<String>; 2],
    corrected: [Option<String>; 2],
    /// The relation in its usual form; only certified in degree 0.
    usual: [Option<String>; 2],
    closed_form: [Option<String>; 2],
}

/// Runs every instance over basis chains of degree ≤ n_max with Y the
/// truncated coalgebra_self coefficients.
pub fn uq_vanishing_check(q: Scalar, cap: u32, n_max: usize) -> Result<Vec<LedgerEntry>> {
    let h = HopfPreset::uq_sl2(q, cap)?;
    let y = CoefficientModule::coalgebra_self(&h)?;
    uq_vanishing_ledger(&h, &y, n_max)
}

pub fn uq_vanishing_ledger(h: &HopfPreset, y: &CoefficientModule, n_max: usize) -> Result<Vec<LedgerEntry>> {
    let s = setup(h)?;
    let x = ModuleCoalgebra::Regular;
    let ops = Ops::new(h, &x, y)?;
    let one = h.one();
    let mut chains = Vec::new();
    for n in 0..=n_max {
        let space = ChainSpace::new(h.basis(), n + 1, y.dim());
        chains.extend((0..space.dim()).map(|i| space.key(i)));
    }
    let ratios = [s.q_sq.clone(), s.q_sq.inv()];
    let nilpotents = [&s.x_plus, &s.x_minus_k];
    let names = ["X+", "X-K"];

    let evaluate = |k: &ChainKey| -> Result<ChainOutcome> {
        let c = Chain::basis(k.clone());
        let h0 = AlgebraElement::basis(k.slots[0]);
        let n = k.slots.len() - 1;
        let mut out = ChainOutcome::default();
        for (idx, g) in [&s.k, &s.k_inv].into_iter().enumerate() {
            let lhs = coacted(h, y, k, &one, |t| h.mul(&h.mul(t, g), &h0))?;
            let rhs = coacted(h, y, k, &one, |t| h.mul(&h.mul(g, t), &h0))?;
            if lhs.minus(&rhs) != ops.kappa(g, &c)? {
                out.grouplike[idx] = Some(format!("chain {}: difference is not κ", ops.key_name(k)));
            }
        }
        for idx in 0..2 {
            let (g, ratio) = (nilpotents[idx], &ratios[idx]);
            let kg = h.mul(&s.k, g);
            let a = coacted(h, y, k, &one, |t| h.mul(&h.mul(t, g), &h0))?;
            let r = coacted(h, y, k, &s.k, |t| h.mul(&h.mul(&kg, t), &h0))?;
            let w0 = coacted(h, y, k, &one, |t| h.mul(t, &h0))?;
            let w1 = coacted(h, y, k, &one, |t| h.mul(&h.mul(&s.k, t), &h0))?;
            let kappa = ops.kappa(g, &c)?;
            let c_prime = inserted(h, k, g, &s.k);
            let cert = kappa
                .minus(&ops.kappa(&s.k, &c_prime)?.scale(&(Scalar::one() - ratio)))
                .plus(&ops.act(g, &w0.minus(&w1))?);
            if a.minus(&r.scale(&ratio.inv())) != cert {
                out.corrected[idx] = Some(format!("chain {}: certificate does not match", ops.key_name(k)));
            }
            out.usual[idx] = if n == 0 {
                let cert0 = kappa.plus(&ops.act(g, &w0.minus(&w1.scale(ratio)))?);
                (a.minus(&r) != cert0).then(|| format!("chain {}: certificate does not match", ops.key_name(k)))
            } else {
                Some(format!(
                    "chain {}: no certificate in degree {n}; the usual derivation uses the closed formula for κ",
                    ops.key_name(k)
                ))
            };
            if kappa != kappa_closed_form(h, y, g, k)? {
                out.closed_form[idx] = Some(format!("chain {}", ops.key_name(k)));
            }
        }
        Ok(out)
    };
    let outcomes: Vec<ChainOutcome> = exec::map(&chains, evaluate).into_iter().collect::<Result<_>>()?;

    let degrees: Vec<usize> = (0..=n_max).collect();
    let first = |pick: &dyn Fn(&ChainOutcome) -> &Option<String>| outcomes.iter().find_map(|o| pick(o).clone());
    let mut ledger = Vec::new();
    for (idx, name) in ["K", "K^-1"].iter().enumerate() {
        ledger.push(LedgerEntry::new(
            format!("p*(S⁻¹(y')·{name}·h⁰⊗⋯) = p*({name}·S⁻¹(y')h⁰⊗⋯)"),
            degrees.clone(),
            true,
            first(&|o| &o.grouplike[idx]),
        ));
    }
    for (idx, name) in names.iter().enumerate() {
        ledger.push(LedgerEntry::new(
            format!("p*(S⁻¹(y')·{name}·h⁰⊗⋯) = p*({name}·K·S⁻¹(y')h⁰⊗Kh¹⊗⋯⊗Khⁿ⊗y₀)"),
            degrees.clone(),
            true,
            first(&|o| &o.corrected[idx]),
        ));
        ledger.push(LedgerEntry::new(
            format!("p*(S⁻¹(y')·{name}·h⁰⊗⋯) = p*(K·{name}·S⁻¹(y')h⁰⊗h¹⊗⋯) in degree 0"),
            vec![0],
            true,
            outcomes
                .iter()
                .zip(&chains)
                .filter(|(_, k)| k.slots.len() == 1)
                .find_map(|(o, _)| o.usual[idx].clone()),
        ));
        if n_max >= 1 {
            ledger.push(
                LedgerEntry::new(
                    format!("p*(S⁻¹(y')·{name}·h⁰⊗⋯) = p*(K·{name}·S⁻¹(y')h⁰⊗h¹⊗⋯) in degree ≥ 1"),
                    (1..=n_max).collect(),
                    false,
                    first(&|o| &o.usual[idx]),
                )
                .informational(),
            );
        }
        ledger.push(
            LedgerEntry::new(
                format!("closed formula for κ_{name} agrees with its definition"),
                degrees.clone(),
                false,
                first(&|o| &o.closed_form[idx]),
            )
            .informational(),
        );
    }
    Ok(ledger)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_chain_for_k() {
        let h = HopfPreset::uq_sl2(Scalar::from_int(2), 2).unwrap();
        let y = CoefficientModule::coalgebra_self(&h).unwrap();
        let unit_y = y.labels().iter().position(|l| l == "1").unwrap();
        let k = ChainKey::new(&[h.unit()], unit_y);
        let kk = h.parse_element("K").unwrap();
        let one = h.one();
        let lhs = coacted(&h, &y, &k, &one, |t| h.mul(&h.mul(t, &kk), &one)).unwrap();
        let rhs = coacted(&h, &y, &k, &one, |t| h.mul(&h.mul(&kk, t), &one)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn small_numeric_instance() {
        for e in uq_vanishing_check(Scalar::from_int(3), 1, 1).unwrap() {
            assert!(e.pass || !e.fatal, "{e:?}");
        }
    }

    #[test]
    fn closed_form_fails_off_degree_zero() {
        let h = HopfPreset::uq_sl2(Scalar::from_int(2), 1).unwrap();
        let y = CoefficientModule::coalgebra_self(&h).unwrap();
        let unit_y = y.labels().iter().position(|l| l == "1").unwrap();
        let x = ModuleCoalgebra::Regular;
        let ops = Ops::new(&h, &x, &y).unwrap();
        let xp = h.parse_element("X+").unwrap();
        let k0 = ChainKey::new(&[h.unit()], unit_y);
        let k1 = ChainKey::new(&[h.unit(), h.unit()], unit_y);
        assert_eq!(ops.kappa(&xp, &Chain::basis(k0.clone())).unwrap(), kappa_closed_form(&h, &y, &xp, &k0).unwrap());
        assert_ne!(ops.kappa(&xp, &Chain::basis(k1.clone())).unwrap(), kappa_closed_form(&h, &y, &xp, &k1).unwrap());
    }
}
