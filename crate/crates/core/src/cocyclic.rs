//! Operator calculus on the chain spaces X^⊗(n+1) ⊗ Y, the cobar complex
//! coad(H) ⊗ H^⊗n ⊗ Y and the reduced spaces H^⊗n ⊗ Y.
//!
//! All three kinds of chain share one representation: a linear combination
//! of (tuple of basis words, Y-basis index). A chain of degree n has n + 1
//! slots on the big complexes and n slots on the reduced one.

use std::collections::HashMap;

use exactlin::Scalar;
use smallvec::SmallVec;

use crate::coefficients::{CoefficientModule, YVector};
use crate::error::{HopfError, Result};
use crate::hopf::{format_comb, AlgebraElement, HopfPreset, Tensor, Word};
use crate::linear::LinComb;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ChainKey {
    pub slots: Tensor,
    pub y: usize,
}

impl ChainKey {
    pub fn new(slots: &[Word], y: usize) -> Self {
        ChainKey {
            slots: SmallVec::from_slice(slots),
            y,
        }
    }
}

pub type Chain = LinComb<ChainKey>;

/// The module coalgebra X whose tensor powers carry the complex: either the
/// algebra itself (left multiplication) or a quotient B/J by a left ideal
/// and coideal, represented on a set of representative basis words.
#[derive(Clone, Debug)]
pub enum ModuleCoalgebra {
    Regular,
    Quotient(QuotientCoalgebra),
}

#[derive(Clone, Debug)]
pub struct QuotientCoalgebra {
    pub representatives: Vec<Word>,
    /// Class of every basis word of B in the representatives.
    pub classes: HashMap<Word, AlgebraElement>,
}

impl ModuleCoalgebra {
    pub fn is_regular(&self) -> bool {
        matches!(self, ModuleCoalgebra::Regular)
    }

    pub fn basis(&self, h: &HopfPreset) -> Vec<Word> {
        match self {
            ModuleCoalgebra::Regular => h.basis().to_vec(),
            ModuleCoalgebra::Quotient(q) => q.representatives.clone(),
        }
    }

    pub fn project(&self, x: &AlgebraElement) -> AlgebraElement {
        match self {
            ModuleCoalgebra::Regular => x.clone(),
            ModuleCoalgebra::Quotient(q) => {
                let mut out = AlgebraElement::zero();
                for (w, c) in x.iter() {
                    out.add_scaled(&q.classes[w], c);
                }
                out
            }
        }
    }

    /// Δ of a basis word of X, as (left, right, coefficient) terms.
    fn coproduct(&self, h: &HopfPreset, w: &Word) -> Vec<(AlgebraElement, AlgebraElement, Scalar)> {
        h.iterated_word(w, 1)
            .iter()
            .map(|(legs, c)| {
                (
                    self.project(&AlgebraElement::basis(legs[0])),
                    self.project(&AlgebraElement::basis(legs[1])),
                    c.clone(),
                )
            })
            .collect()
    }

    /// a · x for an algebra element a and a basis word x of X.
    fn act(&self, h: &HopfPreset, a: &AlgebraElement, x: &Word) -> AlgebraElement {
        self.project(&h.mul(a, &AlgebraElement::basis(*x)))
    }
}

/// Which face maps of the reduced complex to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmVariant {
    /// Faces induced through p and i.
    Induced,
    /// The classical faces: insert 1 first, coaction last.
    Classical,
}

/// Accumulates Σ c · (slot₀ ⊗ ⋯ ⊗ slotₖ ⊗ yvec) into `out`.
fn expand_into(out: &mut Chain, slots: &[AlgebraElement], y: &YVector, c: &Scalar) {
    if c.is_zero() || y.is_zero() || slots.iter().any(|s| s.is_zero()) {
        return;
    }
    let mut partial: Vec<(Tensor, Scalar)> = vec![(SmallVec::new(), c.clone())];
    for s in slots {
        let mut next = Vec::with_capacity(partial.len() * s.len());
        for (prefix, pc) in &partial {
            for (w, d) in s.iter() {
                let mut k = prefix.clone();
                k.push(*w);
                next.push((k, pc * d));
            }
        }
        partial = next;
    }
    for (k, pc) in partial {
        for (j, d) in y.iter() {
            out.add_term(ChainKey { slots: k.clone(), y: *j }, &pc * d);
        }
    }
}

fn basis_el(w: &Word) -> AlgebraElement {
    AlgebraElement::basis(*w)
}

/// Operators for one (algebra, module coalgebra, coefficients) triple.
pub struct Ops<'a> {
    pub h: &'a HopfPreset,
    pub x: &'a ModuleCoalgebra,
    pub y: &'a CoefficientModule,
    one_stable: bool,
}

impl<'a> Ops<'a> {
    pub fn new(h: &'a HopfPreset, x: &'a ModuleCoalgebra, y: &'a CoefficientModule) -> Result<Self> {
        let one_stable = h.is_hopf() && y.is_m_stable(h, 1)?;
        Ok(Ops { h, x, y, one_stable })
    }

    fn require_hopf(&self) -> Result<()> {
        if self.h.is_hopf() {
            Ok(())
        } else {
            Err(HopfError::NotHopf(self.h.name().into()))
        }
    }

    fn require_regular(&self) -> Result<()> {
        if self.x.is_regular() {
            Ok(())
        } else {
            Err(HopfError::InvalidParameter(
                "this operator needs X = H (the regular module coalgebra)".into(),
            ))
        }
    }

    fn s(&self, w: &Word) -> Result<AlgebraElement> {
        Ok((*self.h.antipode_word(w, false)?).clone())
    }

    fn s_inv(&self, w: &Word) -> Result<AlgebraElement> {
        Ok((*self.h.antipode_word(w, true)?).clone())
    }

    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.h.mul(a, b)
    }

    fn mul3(&self, a: &AlgebraElement, b: &AlgebraElement, c: &AlgebraElement) -> AlgebraElement {
        self.h.mul(&self.h.mul(a, b), c)
    }

    /// Applies a map defined on basis chains linearly.
    pub fn linear<F>(&self, v: &Chain, f: F) -> Result<Chain>
    where
        F: Fn(&ChainKey) -> Result<Chain>,
    {
        let mut out = Chain::zero();
        for (k, c) in v.iter() {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    /// ρ applied `n` times: (y₍₋ₙ₎, …, y₍₋₁₎, y₍₀₎) terms.
    pub fn iterated_coaction(&self, y: usize, n: usize) -> Vec<(Vec<Word>, usize, Scalar)> {
        let mut acc = vec![(Vec::new(), y, Scalar::one())];
        for _ in 0..n {
            let mut next = Vec::new();
            for (legs, yi, c) in &acc {
                for (w, j, d) in self.y.coact_basis(*yi) {
                    let mut l = legs.clone();
                    l.push(*w);
                    next.push((l, *j, c * d));
                }
            }
            acc = next;
        }
        acc
    }

    pub fn chain_name(&self, v: &Chain) -> String {
        let labels = self.y.labels();
        format_comb(v.iter().map(|(k, c)| {
            let mut parts: Vec<String> = k.slots.iter().map(|w| self.h.word_name(w)).collect();
            parts.push(labels[k.y].clone());
            (parts.join("⊗"), c)
        }))
    }

    pub fn key_name(&self, k: &ChainKey) -> String {
        self.chain_name(&Chain::basis(k.clone()))
    }

    // ---- the big complex X^⊗(n+1) ⊗ Y ----

    /// ∂_j: comultiply slot j for j ≤ n; ∂_{n+1} = (x⁰₍₂₎, x¹, …, y₍₋₁₎x⁰₍₁₎, y₍₀₎).
    pub fn face(&self, j: usize, v: &Chain) -> Result<Chain> {
        self.linear(v, |k| {
            let n = k.slots.len() - 1;
            let mut out = Chain::zero();
            if j <= n {
                for (a, b, c) in self.x.coproduct(self.h, &k.slots[j]) {
                    let mut parts: Vec<AlgebraElement> = k.slots.iter().map(basis_el).collect();
                    parts[j] = b;
                    parts.insert(j, a);
                    expand_into(&mut out, &parts, &YVector::basis(k.y), &c);
                }
            } else if j == n + 1 {
                for (a, b, c) in self.x.coproduct(self.h, &k.slots[0]) {
                    for (w, yj, d) in self.y.coact_basis(k.y) {
                        let mut parts = vec![b.clone()];
                        parts.extend(k.slots[1..].iter().map(basis_el));
                        let mut acted = AlgebraElement::zero();
                        for (xw, e) in a.iter() {
                            acted.add_scaled(&self.x.act(self.h, &basis_el(w), xw), e);
                        }
                        parts.push(acted);
                        expand_into(&mut out, &parts, &YVector::basis(*yj), &(&c * d));
                    }
                }
            } else {
                return Err(HopfError::InvalidParameter(format!("face index {j} out of range for degree {n}")));
            }
            Ok(out)
        })
    }

    /// τ⁻¹(h⁰ ⊗ ⋯ ⊗ hⁿ ⊗ y) = h¹ ⊗ ⋯ ⊗ hⁿ ⊗ y₍₋₁₎h⁰ ⊗ y₍₀₎. Needs no antipode.
    pub fn tau_inv(&self, v: &Chain) -> Result<Chain> {
        self.linear(v, |k| {
            let mut out = Chain::zero();
            for (w, yj, d) in self.y.coact_basis(k.y) {
                let mut parts: Vec<AlgebraElement> = k.slots[1..].iter().map(basis_el).collect();
                parts.push(self.x.act(self.h, &basis_el(w), &k.slots[0]));
                expand_into(&mut out, &parts, &YVector::basis(*yj), d);
            }
            Ok(out)
        })
    }

    /// τ(h⁰ ⊗ ⋯ ⊗ hⁿ ⊗ y) = S⁻¹(y₍₋₁₎)hⁿ ⊗ h⁰ ⊗ ⋯ ⊗ hⁿ⁻¹ ⊗ y₍₀₎.
    pub fn tau(&self, v: &Chain) -> Result<Chain> {
        self.require_hopf()?;
        self.linear(v, |k| {
            let n = k.slots.len() - 1;
            let mut out = Chain::zero();
            for (w, yj, d) in self.y.coact_basis(k.y) {
                let mut parts = vec![self.x.act(self.h, &self.s_inv(w)?, &k.slots[n])];
                parts.extend(k.slots[..n].iter().map(basis_el));
                expand_into(&mut out, &parts, &YVector::basis(*yj), d);
            }
            Ok(out)
        })
    }

    /// τ^power; negative powers use τ⁻¹ and need no antipode.
    pub fn tau_pow(&self, power: i64, v: &Chain) -> Result<Chain> {
        let mut cur = v.clone();
        for _ in 0..power.unsigned_abs() {
            cur = if power > 0 { self.tau(&cur)? } else { self.tau_inv(&cur)? };
        }
        Ok(cur)
    }

    /// Diagonal action b₍₁₎x⁰ ⊗ ⋯ ⊗ b₍ₙ₊₁₎xⁿ ⊗ b₍ₙ₊₂₎y.
    pub fn act(&self, b: &AlgebraElement, v: &Chain) -> Result<Chain> {
        self.linear(v, |k| {
            let n = k.slots.len() - 1;
            let mut out = Chain::zero();
            for (bw, bc) in b.iter() {
                for (legs, d) in self.h.iterated_word(bw, n + 1).iter() {
                    let mut parts: Vec<AlgebraElement> = Vec::with_capacity(n + 1);
                    for (leg, xw) in legs.iter().zip(k.slots.iter()) {
                        parts.push(self.x.act(self.h, &basis_el(leg), xw));
                    }
                    let yv = self.y.act_word(self.h, &legs[n + 1], k.y);
                    expand_into(&mut out, &parts, &yv, &(bc * d));
                }
            }
            Ok(out)
        })
    }

    /// ∂_j computed as τ^j ∂₀ τ^{−j}; an independent oracle for `face`.
    pub fn face_conj(&self, j: usize, v: &Chain) -> Result<Chain> {
        let w = self.tau_pow(-(j as i64), v)?;
        self.tau_pow(j as i64, &self.face(0, &w)?)
    }

    // ---- the cobar complex coad(H) ⊗ H^⊗n ⊗ Y ----

    /// d₀ applies the coadjoint coaction to slot 0, middle faces comultiply,
    /// d_{n+1} appends the coaction of Y.
    pub fn cobar_face(&self, j: usize, v: &Chain) -> Result<Chain> {
        self.require_hopf()?;
        self.require_regular()?;
        self.linear(v, |k| {
            let n = k.slots.len() - 1;
            let mut out = Chain::zero();
            if j == 0 {
                let coad = self.h.coadjoint_coaction(&basis_el(&k.slots[0]))?;
                for (legs, c) in coad.iter() {
                    let mut slots: Tensor = SmallVec::from_slice(&legs[..]);
                    slots.extend_from_slice(&k.slots[1..]);
                    out.add_term(ChainKey { slots, y: k.y }, c.clone());
                }
            } else if j <= n {
                return self.face(j, &Chain::basis(k.clone()));
            } else if j == n + 1 {
                for (w, yj, d) in self.y.coact_basis(k.y) {
                    let mut slots = k.slots.clone();
                    slots.push(*w);
                    out.add_term(ChainKey { slots, y: *yj }, d.clone());
                }
            } else {
                return Err(HopfError::InvalidParameter(format!("face index {j} out of range for degree {n}")));
            }
            Ok(out)
        })
    }

    /// Φ(h⁰ ⊗ h¹ ⊗ ⋯ ⊗ hⁿ ⊗ y) = h⁰₍₂₎ ⊗ (h¹ ⊗ ⋯ ⊗ hⁿ)·S(h⁰₍₁₎) ⊗ y with the
    /// right diagonal action; Φ⁻¹ uses h⁰₍₁₎ in place of S(h⁰₍₁₎).
    pub fn phi(&self, inverse: bool, v: &Chain) -> Result<Chain> {
        self.require_hopf()?;
        self.require_regular()?;
        self.linear(v, |k| {
            let n = k.slots.len() - 1;
            let mut out = Chain::zero();
            for (pair, c) in self.h.iterated_word(&k.slots[0], 1).iter() {
                let twist = if inverse { basis_el(&pair[0]) } else { self.s(&pair[0])? };
                if n == 0 {
                    let e = self.h.counit(&twist);
                    out.add_term(ChainKey::new(&[pair[1]], k.y), c * &e);
                    continue;
                }
                for (tw, tc) in twist.iter() {
                    for (legs, d) in self.h.iterated_word(tw, n - 1).iter() {
                        let mut parts = vec![basis_el(&pair[1])];
                        for (i, leg) in legs.iter().enumerate() {
                            parts.push(self.mul(&basis_el(&k.slots[i + 1]), &basis_el(leg)));
                        }
                        expand_into(&mut out, &parts, &YVector::basis(k.y), &(&(c * tc) * d));
                    }
                }
            }
            Ok(out)
        })
    }

    /// The cobar cyclic operator Φτ⁻¹Φ⁻¹.
    pub fn cobar_cyclic_inv(&self, v: &Chain) -> Result<Chain> {
        let w = self.phi(true, v)?;
        self.phi(false, &self.tau_inv(&w)?)
    }

    // ---- the reduced complex H^⊗n ⊗ Y ----

    /// p_n(h⁰ ⊗ ⋯ ⊗ hⁿ ⊗ y) = S(hⁿ₍ₙ₊₁₎)y₍₋ₙ₎h⁰ ⊗ ⋯ ⊗ S(hⁿ₍₂₎)y₍₋₁₎hⁿ⁻¹ ⊗ S(hⁿ₍₁₎)y₍₀₎.
    pub fn cm_project(&self, v: &Chain) -> Result<Chain> {
        self.require_hopf()?;
        self.require_regular()?;
        self.linear(v, |k| {
            let n = k.slots.len() - 1;
            let mut out = Chain::zero();
            let legs_terms = self.h.iterated_word(&k.slots[n], n);
            let coacts = self.iterated_coaction(k.y, n);
            for (legs, c) in legs_terms.iter() {
                let s_legs: Vec<AlgebraElement> = legs.iter().map(|l| self.s(l)).collect::<Result<_>>()?;
                for (ms, y0, d) in &coacts {
                    let parts: Vec<AlgebraElement> = (0..n)
                        .map(|i| self.mul3(&s_legs[n - i], &basis_el(&ms[i]), &basis_el(&k.slots[i])))
                        .collect();
                    let yv = self.y.act(self.h, &s_legs[0], &YVector::basis(*y0));
                    expand_into(&mut out, &parts, &yv, &(c * d));
                }
            }
            Ok(out)
        })
    }

    /// i_n(h⁰ ⊗ ⋯ ⊗ hⁿ⁻¹ ⊗ y) = h⁰ ⊗ ⋯ ⊗ hⁿ⁻¹ ⊗ y₍₋₁₎ ⊗ y₍₀₎.
    pub fn cm_include(&self, w: &Chain) -> Result<Chain> {
        self.linear(w, |k| {
            let mut out = Chain::zero();
            for (yw, yj, d) in self.y.coact_basis(k.y) {
                let mut slots = k.slots.clone();
                slots.push(*yw);
                out.add_term(ChainKey { slots, y: *yj }, d.clone());
            }
            Ok(out)
        })
    }

    /// t⁻¹(h⁰ ⊗ ⋯ ⊗ hⁿ⁻¹ ⊗ y) = S(h⁰₍ₙ₊₁₎)h¹ ⊗ ⋯ ⊗ S(h⁰₍₂₎)y₍₋₁₎ ⊗ S(h⁰₍₁₎)y₍₀₎;
    /// the identity in degree 0.
    pub fn cm_cyclic_inv(&self, w: &Chain) -> Result<Chain> {
        self.require_hopf()?;
        if !self.one_stable {
            return Err(HopfError::NotStable(1));
        }
        self.linear(w, |k| {
            let n = k.slots.len();
            if n == 0 {
                return Ok(Chain::basis(k.clone()));
            }
            let mut out = Chain::zero();
            for (legs, c) in self.h.iterated_word(&k.slots[0], n).iter() {
                let s_legs: Vec<AlgebraElement> = legs.iter().map(|l| self.s(l)).collect::<Result<_>>()?;
                for (yw, yj, d) in self.y.coact_basis(k.y) {
                    let mut parts: Vec<AlgebraElement> = (0..n - 1)
                        .map(|i| self.mul(&s_legs[n - i], &basis_el(&k.slots[i + 1])))
                        .collect();
                    parts.push(self.mul(&s_legs[1], &basis_el(yw)));
                    let yv = self.y.act(self.h, &s_legs[0], &YVector::basis(*yj));
                    expand_into(&mut out, &parts, &yv, &(c * d));
                }
            }
            Ok(out)
        })
    }

    /// t = p τ i.
    pub fn cm_cyclic(&self, w: &Chain) -> Result<Chain> {
        if !self.one_stable {
            return Err(HopfError::NotStable(1));
        }
        self.cm_project(&self.tau(&self.cm_include(w)?)?)
    }

    pub fn cm_face(&self, variant: CmVariant, j: usize, w: &Chain) -> Result<Chain> {
        self.require_hopf()?;
        self.linear(w, |k| {
            let n = k.slots.len();
            if j > n + 1 {
                return Err(HopfError::InvalidParameter(format!("face index {j} out of range for degree {n}")));
            }
            let comultiply = |slot: usize| {
                let mut out = Chain::zero();
                for (pair, c) in self.h.iterated_word(&k.slots[slot], 1).iter() {
                    let mut slots = k.slots.clone();
                    slots[slot] = pair[1];
                    slots.insert(slot, pair[0]);
                    out.add_term(ChainKey { slots, y: k.y }, c.clone());
                }
                out
            };
            let unit_first = |v: &Chain| {
                v.iter()
                    .map(|(kk, c)| {
                        let mut slots: Tensor = SmallVec::with_capacity(kk.slots.len() + 1);
                        slots.push(self.h.unit());
                        slots.extend_from_slice(&kk.slots);
                        (ChainKey { slots, y: kk.y }, c.clone())
                    })
                    .collect::<Chain>()
            };
            let single = Chain::basis(k.clone());
            Ok(match variant {
                CmVariant::Induced => {
                    if j < n {
                        comultiply(j)
                    } else if j == n {
                        self.cm_include(&single)?
                    } else {
                        unit_first(&self.cm_cyclic_inv(&single)?)
                    }
                }
                CmVariant::Classical => {
                    if j == 0 {
                        unit_first(&single)
                    } else if j <= n {
                        comultiply(j - 1)
                    } else {
                        self.cm_include(&single)?
                    }
                }
            })
        })
    }

    /// κ_x = Σ [τ, L_{x₍ₙ₊₁₎}] τ⁻¹ (S⁻¹(y₍₋₁₎)h⁰ ⊗ S(x₍ₙ₎)h¹ ⊗ ⋯ ⊗ S(x₍₁₎)hⁿ ⊗ y₍₀₎).
    pub fn kappa(&self, x: &AlgebraElement, v: &Chain) -> Result<Chain> {
        self.require_hopf()?;
        self.require_regular()?;
        self.linear(v, |k| {
            let n = k.slots.len() - 1;
            let mut out = Chain::zero();
            let xs = self.h.iterated(x, n);
            for (legs, c) in xs.iter() {
                let mut inner = Chain::zero();
                for (yw, yj, d) in self.y.coact_basis(k.y) {
                    let mut parts = vec![self.mul(&self.s_inv(yw)?, &basis_el(&k.slots[0]))];
                    for i in 1..=n {
                        parts.push(self.mul(&self.s(&legs[n - i])?, &basis_el(&k.slots[i])));
                    }
                    expand_into(&mut inner, &parts, &YVector::basis(*yj), d);
                }
                let last = basis_el(&legs[n]);
                let t_inner = self.tau_inv(&inner)?;
                let lhs = self.tau(&self.act(&last, &t_inner)?)?;
                let rhs = self.act(&last, &inner)?;
                out.add_scaled(&lhs.minus(&rhs), c);
            }
            Ok(out)
        })
    }

    /// τ^j κ_x τ^{−j}.
    pub fn kappa_conjugated(&self, x: &AlgebraElement, j: usize, v: &Chain) -> Result<Chain> {
        let w = self.tau_pow(-(j as i64), v)?;
        self.tau_pow(j as i64, &self.kappa(x, &w)?)
    }

    /// (h⁰ ⊗ ⋯ ⊗ [S⁻¹(y₍₋₁₎), x]h^j ⊗ ⋯ ⊗ hⁿ ⊗ y₍₀₎).
    pub fn kappa_insertion(&self, x: &AlgebraElement, j: usize, v: &Chain) -> Result<Chain> {
        self.require_hopf()?;
        self.linear(v, |k| {
            let mut out = Chain::zero();
            for (yw, yj, d) in self.y.coact_basis(k.y) {
                let s = self.s_inv(yw)?;
                let comm = self.mul(&s, x).minus(&self.mul(x, &s));
                let mut parts: Vec<AlgebraElement> = k.slots.iter().map(basis_el).collect();
                parts[j] = self.mul(&comm, &parts[j]);
                expand_into(&mut out, &parts, &YVector::basis(*yj), d);
            }
            Ok(out)
        })
    }

    /// (ε(b) − L_b) v, the generators of the coinvariant relations.
    pub fn coinvariant_relation(&self, b: &Word, v: &Chain) -> Result<Chain> {
        Ok(v.scale(&b.counit()).minus(&self.act(&basis_el(b), v)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::Character;

    fn key(h: &HopfPreset, slots: &[&str], y: usize) -> Chain {
        let words: Vec<Word> = slots
            .iter()
            .map(|s| *h.parse_element(s).unwrap().keys().next().unwrap())
            .collect();
        Chain::basis(ChainKey::new(&words, y))
    }

    #[test]
    fn sweedler_modular_pair_examples() {
        let h = HopfPreset::sweedler4();
        let y = CoefficientModule::modular_pair(&h, Character::Counit, "g").unwrap();
        let x = ModuleCoalgebra::Regular;
        let ops = Ops::new(&h, &x, &y).unwrap();
        let v = key(&h, &["1", "x"], 0);
        assert_eq!(ops.chain_name(&ops.face(1, &v).unwrap()), "1⊗x⊗1⊗1_Y + 1⊗g⊗x⊗1_Y");
        assert_eq!(ops.chain_name(&ops.face(2, &v).unwrap()), "1⊗x⊗g⊗1_Y");
        assert_eq!(ops.chain_name(&ops.tau_inv(&key(&h, &["x", "1"], 0)).unwrap()), "1⊗gx⊗1_Y");
        assert_eq!(ops.chain_name(&ops.tau(&v).unwrap()), "gx⊗1⊗1_Y");
        let k = ops.kappa(&h.parse_element("x").unwrap(), &key(&h, &["1"], 0)).unwrap();
        assert_eq!(ops.chain_name(&k), "2·gx⊗1_Y");
        assert!(ops.cm_project(&k).unwrap().is_zero());
        let i0 = ops.cm_include(&Chain::basis(ChainKey::new(&[], 0))).unwrap();
        assert_eq!(ops.chain_name(&i0), "g⊗1_Y");
        let d0 = ops.cm_face(CmVariant::Induced, 0, &Chain::basis(ChainKey::new(&[], 0))).unwrap();
        assert_eq!(ops.chain_name(&d0), "g⊗1_Y");
    }

    #[test]
    fn phi_examples() {
        let h = HopfPreset::sweedler4();
        let y = CoefficientModule::trivial(&h);
        let x = ModuleCoalgebra::Regular;
        let ops = Ops::new(&h, &x, &y).unwrap();
        let v = key(&h, &["g", "x"], 0);
        assert_eq!(ops.chain_name(&ops.phi(false, &v).unwrap()), "-g⊗gx⊗1_Y");
        assert_eq!(ops.phi(true, &ops.phi(false, &v).unwrap()).unwrap(), v);
        assert_eq!(ops.chain_name(&ops.cobar_face(0, &key(&h, &["g"], 0)).unwrap()), "g⊗1⊗1_Y");
        let k = HopfPreset::kc2();
        let yk = CoefficientModule::trivial(&k);
        let ops = Ops::new(&k, &x, &yk).unwrap();
        assert_eq!(ops.chain_name(&ops.phi(false, &key(&k, &["g", "g"], 0)).unwrap()), "g⊗1⊗1_Y");
    }

    #[test]
    fn kc2_projection_examples() {
        let h = HopfPreset::kc2();
        let y = CoefficientModule::trivial(&h);
        let x = ModuleCoalgebra::Regular;
        let ops = Ops::new(&h, &x, &y).unwrap();
        assert_eq!(ops.chain_name(&ops.cm_project(&key(&h, &["g"], 0)).unwrap()), "1_Y");
        assert_eq!(ops.chain_name(&ops.cm_project(&key(&h, &["g", "g"], 0)).unwrap()), "1⊗1_Y");
        let w = key(&h, &["g"], 0);
        assert_eq!(ops.cm_cyclic_inv(&w).unwrap(), w);
    }

    #[test]
    fn coalgebra_self_inclusion() {
        let h = HopfPreset::sweedler4();
        let y = CoefficientModule::coalgebra_self(&h).unwrap();
        let x = ModuleCoalgebra::Regular;
        let ops = Ops::new(&h, &x, &y).unwrap();
        let i0 = ops.cm_include(&Chain::basis(ChainKey::new(&[], 2))).unwrap();
        assert_eq!(ops.chain_name(&i0), "x⊗1 + g⊗x");
    }
}
