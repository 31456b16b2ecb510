//! The identity ledger: every operator identity the construction relies on,
//! checked exactly on basis chains. Entries that only hold for aYD
//! coefficients are fatal exactly when the coefficients are aYD; otherwise
//! they are informational and carry the counterexample.

use exactlin::{rank, SparseMatrix};

use crate::cocyclic::{Chain, ChainKey, CmVariant, ModuleCoalgebra, Ops};
use crate::coefficients::CoefficientModule;
use crate::error::Result;
use crate::homology::{self, assemble, ChainSpace, DegreeOperators, GradedSubspace};
use crate::hopf::{AlgebraElement, HopfPreset, Word};
use crate::ledger::{check_cases, LedgerEntry};

pub struct Suite<'a> {
    pub h: &'a HopfPreset,
    pub y: &'a CoefficientModule,
    pub max_degree: usize,
    x: ModuleCoalgebra,
    ayd: bool,
}

fn chain_keys(basis: &[Word], slots: usize, ydim: usize) -> Vec<ChainKey> {
    let space = ChainSpace::new(basis, slots, ydim);
    (0..space.dim()).map(|i| space.key(i)).collect()
}

fn degrees(to: usize) -> Vec<usize> {
    (0..=to).collect()
}

impl<'a> Suite<'a> {
    pub fn new(h: &'a HopfPreset, y: &'a CoefficientModule, max_degree: usize) -> Result<Self> {
        let ayd = h.is_hopf() && y.ayd_witness(h)?.is_none();
        Ok(Suite {
            h,
            y,
            max_degree,
            x: ModuleCoalgebra::Regular,
            ayd,
        })
    }

    pub fn ops(&self) -> Result<Ops<'_>> {
        Ops::new(self.h, &self.x, self.y)
    }

    pub fn is_ayd(&self) -> bool {
        self.ayd
    }

    /// Basis chains of the big complex in degree n (n + 1 slots).
    fn big(&self, n: usize) -> Vec<ChainKey> {
        chain_keys(self.h.basis(), n + 1, self.y.dim())
    }

    /// Basis chains of the reduced complex in degree n (n slots).
    fn small(&self, n: usize) -> Vec<ChainKey> {
        chain_keys(self.h.basis(), n, self.y.dim())
    }

    fn over_degrees<F>(&self, name: &str, fatal: bool, to: usize, small: bool, check: F) -> Result<LedgerEntry>
    where
        F: Fn(usize, &ChainKey) -> Result<Option<String>> + Sync + Send,
    {
        let mut cases = Vec::new();
        for n in 0..=to {
            let keys = if small { self.small(n) } else { self.big(n) };
            cases.extend(keys.into_iter().map(|k| (n, k)));
        }
        check_cases(name, degrees(to), fatal, &cases, |(n, k)| check(*n, k))
    }

    /// ∂_i∂_j = ∂_{j+1}∂_i, τ∂_j = ∂_{j+1}τ, τ∂_{n+1} = ∂₀, ττ⁻¹ = τ⁻¹τ = id
    /// and, for Hopf algebras, ∂_j = τ^j∂₀τ^{−j}.
    pub fn cosimplicial(&self) -> Result<Vec<LedgerEntry>> {
        let ops = self.ops()?;
        let top = self.max_degree;
        let mut out = vec![self.over_degrees("cosimplicial ∂_i∂_j = ∂_(j+1)∂_i", true, top, false, |n, k| {
            let v = Chain::basis(k.clone());
            for j in 0..=n + 1 {
                let dj = ops.face(j, &v)?;
                for i in 0..=j {
                    if ops.face(i, &dj)? != ops.face(j + 1, &ops.face(i, &v)?)? {
                        return Ok(Some(format!("i={i}, j={j} on {}", ops.key_name(k))));
                    }
                }
            }
            Ok(None)
        })?];
        if !self.h.is_hopf() {
            return Ok(out);
        }
        out.push(self.over_degrees("para-cocyclic τ∂_j = ∂_(j+1)τ", true, top, false, |n, k| {
            let v = Chain::basis(k.clone());
            for j in 0..=n {
                if ops.tau(&ops.face(j, &v)?)? != ops.face(j + 1, &ops.tau(&v)?)? {
                    return Ok(Some(format!("j={j} on {}", ops.key_name(k))));
                }
            }
            Ok(None)
        })?);
        out.push(self.over_degrees("para-cocyclic τ∂_(n+1) = ∂_0", true, top, false, |n, k| {
            let v = Chain::basis(k.clone());
            Ok((ops.tau(&ops.face(n + 1, &v)?)? != ops.face(0, &v)?).then(|| ops.key_name(k)))
        })?);
        out.push(self.over_degrees("ττ⁻¹ = τ⁻¹τ = id", true, top, false, |_, k| {
            let v = Chain::basis(k.clone());
            let ok = ops.tau(&ops.tau_inv(&v)?)? == v && ops.tau_inv(&ops.tau(&v)?)? == v;
            Ok((!ok).then(|| ops.key_name(k)))
        })?);
        out.push(self.over_degrees("∂_j = τ^j ∂_0 τ^(-j)", true, top, false, |n, k| {
            let v = Chain::basis(k.clone());
            for j in 0..=n + 1 {
                if ops.face(j, &v)? != ops.face_conj(j, &v)? {
                    return Ok(Some(format!("j={j} on {}", ops.key_name(k))));
                }
            }
            Ok(None)
        })?);
        Ok(out)
    }

    /// Φ is a cosimplicial isomorphism onto the cobar complex, and the cobar
    /// cyclic operator matches its closed formula.
    pub fn coadjoint(&self) -> Result<Vec<LedgerEntry>> {
        let ops = self.ops()?;
        let top = self.max_degree;
        let mut out = vec![
            self.over_degrees("Φ⁻¹Φ = ΦΦ⁻¹ = id", true, top, false, |_, k| {
                let v = Chain::basis(k.clone());
                let ok = ops.phi(true, &ops.phi(false, &v)?)? == v && ops.phi(false, &ops.phi(true, &v)?)? == v;
                Ok((!ok).then(|| ops.key_name(k)))
            })?,
            self.over_degrees("Φ∂_j = d_jΦ", true, top, false, |n, k| {
                let v = Chain::basis(k.clone());
                for j in 0..=n + 1 {
                    if ops.phi(false, &ops.face(j, &v)?)? != ops.cobar_face(j, &ops.phi(false, &v)?)? {
                        return Ok(Some(format!("j={j} on {}", ops.key_name(k))));
                    }
                }
                Ok(None)
            })?,
            self.over_degrees("cobar t⁻¹ matches its closed formula", true, top, false, |_, k| {
                let v = Chain::basis(k.clone());
                Ok((ops.cobar_cyclic_inv(&v)? != cobar_cyclic_inv_closed(&ops, k)?).then(|| ops.key_name(k)))
            })?,
        ];
        if self.h.is_finite() {
            let mut witness = None;
            for n in 0..=top {
                let space = ChainSpace::new(self.h.basis(), n + 1, self.y.dim());
                let m = assemble(self.h, &space, &space, |v| ops.phi(false, v))?;
                if rank(&m) != space.dim() {
                    witness = Some(format!("n={n}: rank {} < {}", rank(&m), space.dim()));
                    break;
                }
            }
            out.push(LedgerEntry::new("Φ bijective", degrees(top), true, witness));
        }
        Ok(out)
    }

    /// p, i and t on the reduced complex.
    pub fn epimorphism(&self) -> Result<Vec<LedgerEntry>> {
        let ops = self.ops()?;
        let top = self.max_degree;
        let mut out = Vec::new();
        if !self.y.is_m_stable(self.h, 1)? {
            return Ok(out);
        }
        let fatal = self.ayd;
        out.push(self.over_degrees("p∘i = id", true, top, true, |_, k| {
            let w = Chain::basis(k.clone());
            Ok((ops.cm_project(&ops.cm_include(&w)?)? != w).then(|| ops.key_name(k)))
        })?);
        out.push(self.over_degrees("t∘t⁻¹ = t⁻¹∘t = id on the image of p", fatal, top, true, |_, k| {
            let w = Chain::basis(k.clone());
            let a = ops.cm_cyclic(&ops.cm_cyclic_inv(&w)?)?;
            let b = ops.cm_cyclic_inv(&ops.cm_cyclic(&w)?)?;
            Ok((a != w || b != w).then(|| format!("{} ↦ t t⁻¹ = {}", ops.key_name(k), ops.chain_name(&a))))
        })?);
        out.push(self.over_degrees("t∘p = p∘τ", fatal, top, false, |_, k| {
            let v = Chain::basis(k.clone());
            let lhs = ops.cm_cyclic(&ops.cm_project(&v)?)?;
            Ok((lhs != ops.cm_project(&ops.tau(&v)?)?).then(|| ops.key_name(k)))
        })?);
        out.push(self.over_degrees("t^{n+1}=id on the image of p", fatal, top, true, |n, k| {
            let w = Chain::basis(k.clone());
            let mut cur = w.clone();
            for _ in 0..=n {
                cur = ops.cm_cyclic(&cur)?;
            }
            Ok((cur != w).then(|| ops.key_name(k)))
        })?);
        out.push(self.over_degrees("d_j∘p = p∘∂_j", fatal, top, false, |n, k| {
            let v = Chain::basis(k.clone());
            let pv = ops.cm_project(&v)?;
            for j in 0..=n + 1 {
                if ops.cm_face(CmVariant::Induced, j, &pv)? != ops.cm_project(&ops.face(j, &v)?)? {
                    return Ok(Some(format!("j={j} on {}", ops.key_name(k))));
                }
            }
            Ok(None)
        })?);
        out.push(self.over_degrees("α = t⁻¹ intertwines d and d̃", fatal, top, true, |n, k| {
            let w = Chain::basis(k.clone());
            let aw = ops.cm_cyclic_inv(&w)?;
            for j in 0..=n + 1 {
                let lhs = ops.cm_cyclic_inv(&ops.cm_face(CmVariant::Induced, j, &w)?)?;
                if lhs != ops.cm_face(CmVariant::Classical, j, &aw)? {
                    return Ok(Some(format!("j={j} on {}", ops.key_name(k))));
                }
            }
            Ok(None)
        })?);
        let gens = self.h.generators();
        out.push(self.over_degrees("p∘[L_h, τ^i] = 0", fatal, top, false, |_, k| {
            let v = Chain::basis(k.clone());
            for g in &gens {
                let el = AlgebraElement::basis(*g);
                for i in [-2i64, -1, 1, 2] {
                    let comm = ops.act(&el, &ops.tau_pow(i, &v)?)?.minus(&ops.tau_pow(i, &ops.act(&el, &v)?)?);
                    if !ops.cm_project(&comm)?.is_zero() {
                        return Ok(Some(format!("h={}, i={i} on {}", self.h.word_name(g), ops.key_name(k))));
                    }
                }
            }
            Ok(None)
        })?);
        Ok(out)
    }

    /// ker p_n = span{(ε(b) − L_b)v}, by dimension and double inclusion.
    pub fn factoring(&self) -> Result<LedgerEntry> {
        let ops = self.ops()?;
        let mut witness = None;
        for n in 0..=self.max_degree {
            let big = ChainSpace::new(self.h.basis(), n + 1, self.y.dim());
            let small = ChainSpace::new(self.h.basis(), n, self.y.dim());
            let p = assemble(self.h, &big, &small, |v| ops.cm_project(v))?;
            let kernel = exactlin::kernel_basis(&p);
            let d = DegreeOperators::build(&ops, n)?;
            let relations = d.coinvariant_relations()?;
            let mut problem = None;
            if kernel.dim() != relations.dim() {
                problem = Some(format!("n={n}: dim ker p = {}, dim im(ε−ρ) = {}", kernel.dim(), relations.dim()));
            } else if let Some(v) = relations.vectors().iter().find(|v| !kernel.contains(v)) {
                problem = Some(format!("n={n}: p({}) ≠ 0", ops.chain_name(&big.to_chain(v))));
            } else if let Some(v) = kernel.vectors().iter().find(|v| !relations.contains(v)) {
                problem = Some(format!("n={n}: {} ∈ ker p \\ im(ε−ρ)", ops.chain_name(&big.to_chain(v))));
            }
            if problem.is_some() {
                witness = problem;
                break;
            }
        }
        Ok(LedgerEntry::new("ker p = im(ε−ρ)", degrees(self.max_degree), self.ayd, witness))
    }

    /// Whether 𝕋 is a para-cocyclic H-module, i.e. L_h commutes with ∂_(n+1).
    pub fn module_faces(&self) -> Result<LedgerEntry> {
        let ops = self.ops()?;
        let gens = self.h.generators();
        let e = self.over_degrees("[L_h, ∂_(n+1)] = 0", false, self.max_degree, false, |n, k| {
            let v = Chain::basis(k.clone());
            for g in &gens {
                let el = AlgebraElement::basis(*g);
                let c = ops.act(&el, &ops.face(n + 1, &v)?)?.minus(&ops.face(n + 1, &ops.act(&el, &v)?)?);
                if !c.is_zero() {
                    return Ok(Some(format!("h={}, v={}: {}", self.h.word_name(g), ops.key_name(k), ops.chain_name(&c))));
                }
            }
            Ok(None)
        })?;
        Ok(e.informational())
    }

    /// p* kills τ^j κ_x τ^{−j} for generators x and 0 ≤ j ≤ n. Here p* is p
    /// itself for aYD coefficients and the projection onto ₍H₎(𝕋/I)
    /// otherwise; `extra` elements (class sums, say) are tested as well.
    pub fn kappa_vanishing(&self, extra: &[AlgebraElement]) -> Result<Vec<LedgerEntry>> {
        let ops = self.ops()?;
        let top = self.max_degree;
        let mut xs: Vec<AlgebraElement> = self.h.generators().iter().map(|g| AlgebraElement::basis(*g)).collect();
        xs.extend(extra.iter().cloned());
        let kernels = if self.ayd || !self.h.is_finite() {
            None
        } else {
            let graded = GradedSubspace::build(&ops, top, 2)?;
            let mut ks = Vec::new();
            for (d, i) in graded.operators.iter().zip(&graded.degrees) {
                ks.push((d.space.clone(), i.basis.sum(&d.coinvariant_relations()?)));
            }
            Some(ks)
        };
        let pstar_zero = |n: usize, v: &Chain| -> Result<bool> {
            match &kernels {
                None => Ok(ops.cm_project(v)?.is_zero()),
                Some(ks) => Ok(ks[n].1.contains(&ks[n].0.to_vector(self.h, v)?)),
            }
        };
        let mut out = vec![self.over_degrees("p*∘τ^j κ_x τ^(-j) = 0", true, top, false, |n, k| {
            let v = Chain::basis(k.clone());
            for x in &xs {
                for j in 0..=n {
                    if !pstar_zero(n, &ops.kappa_conjugated(x, j, &v)?)? {
                        return Ok(Some(format!("x={}, j={j} on {}", self.h.element_name(x), ops.key_name(k))));
                    }
                }
            }
            Ok(None)
        })?];
        if !self.ayd {
            out.push(
                self.over_degrees("literal p∘τ^j κ_x τ^(-j) = 0", false, top, false, |n, k| {
                    let v = Chain::basis(k.clone());
                    for x in &xs {
                        for j in 0..=n {
                            if !ops.cm_project(&ops.kappa_conjugated(x, j, &v)?)?.is_zero() {
                                return Ok(Some(format!("x={}, j={j} on {}", self.h.element_name(x), ops.key_name(k))));
                            }
                        }
                    }
                    Ok(None)
                })?
                .informational(),
            );
        }
        // The insertion formula needs a cocommutative comodule, the counit
        // action and x in the cocenter.
        let cocentral: Vec<&AlgebraElement> = xs.iter().filter(|x| is_cocentral(self.h, x, 3)).collect();
        if self.y.has_counit_action() && self.y.is_cocommutative_comodule(self.h) && !cocentral.is_empty() {
            out.push(self.over_degrees("τ^j κ_x τ^(-j) equals the insertion formula", true, top, false, |n, k| {
                let v = Chain::basis(k.clone());
                for x in &cocentral {
                    for j in 0..=n {
                        if ops.kappa_conjugated(x, j, &v)? != ops.kappa_insertion(x, j, &v)? {
                            return Ok(Some(format!("x={}, j={j} on {}", self.h.element_name(x), ops.key_name(k))));
                        }
                    }
                }
                Ok(None)
            })?);
        }
        Ok(out)
    }

    /// dim ₍H₎(H⊗Y) = dim H^R ⊗_H Y for X = H with left multiplication.
    pub fn equivariant(&self) -> Result<LedgerEntry> {
        let h = self.h;
        let y_action = |a: &AlgebraElement| -> Result<SparseMatrix> {
            let cols = (0..self.y.dim())
                .map(|j| {
                    let v = self.y.act(h, a, &crate::coefficients::YVector::basis(j));
                    exactlin::SparseVector::from_entries(self.y.dim(), v.iter().map(|(i, c)| (*i, c.clone())))
                })
                .collect();
            Ok(SparseMatrix::from_columns(self.y.dim(), cols))
        };
        let (lhs, rhs) = homology::equivariant_dims(h, h.dim(), |a| homology::subspace::regular_action(h, a), self.y.dim(), y_action)?;
        Ok(LedgerEntry::new(
            "dim ₍H₎(H⊗Y) = dim H^R⊗_H Y",
            vec![],
            true,
            (lhs != rhs).then(|| format!("{lhs} vs {rhs}")),
        ))
    }

    /// Everything the `check` theory reports.
    pub fn full_ledger(&self) -> Result<Vec<LedgerEntry>> {
        let h = self.h;
        let sample = if h.is_finite() { None } else { h.cap() };
        let mut out = crate::hopf::check_hopf_axioms(h, sample)?;
        out.extend(self.y.check_axioms(h, sample)?);
        out.extend(self.y.classification(h, true)?);
        out.push(LedgerEntry::new(
            "cocommutative",
            vec![],
            false,
            (!h.is_cocommutative()).then(|| format!("{} is not cocommutative", h.name())),
        ));
        out.extend(self.cosimplicial()?);
        if h.is_hopf() {
            out.extend(self.coadjoint()?);
            out.extend(self.epimorphism()?);
            out.push(self.module_faces()?);
            out.extend(self.kappa_vanishing(&[])?);
        }
        if h.is_finite() {
            if h.is_hopf() {
                out.push(self.equivariant()?);
                if self.y.is_m_stable(h, 1)? {
                    out.push(self.factoring()?);
                }
            }
            if self.y.is_m_stable(h, 0)? {
                let c = homology::build_cm_complex(h, self.y, self.max_degree, homology::Route::CoinvariantQuotient)?;
                out.extend(c.ledger);
                if self.ayd {
                    let p = homology::build_cm_complex(h, self.y, self.max_degree, homology::Route::Both)?;
                    out.extend(p.ledger.into_iter().filter(|e| e.name.contains("route") || e.name.starts_with("p ")));
                }
            }
        }
        Ok(out)
    }
}

/// Whether Δ^(m)(x) is symmetric under swapping neighbouring legs, for
/// m < depth.
pub fn is_cocentral(h: &HopfPreset, x: &AlgebraElement, depth: usize) -> bool {
    (1..depth).all(|m| {
        let t = h.iterated(x, m);
        (0..m).all(|i| {
            let swapped: crate::hopf::TensorElement = t
                .iter()
                .map(|(legs, c)| {
                    let mut l = legs.clone();
                    l.swap(i, i + 1);
                    (l, c.clone())
                })
                .collect();
            swapped == t
        })
    })
}

/// The cobar t⁻¹ in closed form: with e = Δ^(2n)(h⁰) and f = Δ^(n)(h¹),
/// t⁻¹ = f₍ₙ₊₁₎e₍ₙ₊₁₎ ⊗ h²e₍ₙ₊₂₎S(e₍ₙ₎)S(f₍ₙ₎) ⊗ ⋯ ⊗ y₍₋₁₎e₍₂ₙ₊₁₎S(e₍₁₎)S(f₍₁₎) ⊗ y₍₀₎,
/// and y₍₋₁₎h⁰ ⊗ y₍₀₎ in degree 0.
pub fn cobar_cyclic_inv_closed(ops: &Ops, k: &ChainKey) -> Result<Chain> {
    let h = ops.h;
    let n = k.slots.len() - 1;
    let b = |w: &Word| AlgebraElement::basis(*w);
    let s = |w: &Word| -> Result<AlgebraElement> { Ok((*h.antipode_word(w, false)?).clone()) };
    let mut out = Chain::zero();
    if n == 0 {
        for (yw, yj, d) in ops.y.coact_basis(k.y) {
            for (w, c) in h.mul(&b(yw), &b(&k.slots[0])).iter() {
                out.add_term(ChainKey::new(&[*w], *yj), d * c);
            }
        }
        return Ok(out);
    }
    let es = h.iterated_word(&k.slots[0], 2 * n);
    let fs = h.iterated_word(&k.slots[1], n);
    for (e, ec) in es.iter() {
        for (f, fc) in fs.iter() {
            for (yw, yj, d) in ops.y.coact_basis(k.y) {
                // legs are 0-based: e₍ᵢ₎ = e[i-1]
                let mut slots = vec![h.mul(&b(&f[n]), &b(&e[n]))];
                for m in 1..n {
                    let right = h.mul(&s(&e[n - m])?, &s(&f[n - m])?);
                    slots.push(h.mul(&h.mul(&b(&k.slots[m + 1]), &b(&e[n + m])), &right));
                }
                let right = h.mul(&s(&e[0])?, &s(&f[0])?);
                slots.push(h.mul(&h.mul(&b(yw), &b(&e[2 * n])), &right));
                let coeff = &(ec * fc) * d;
                let mut partial: Vec<(Vec<Word>, exactlin::Scalar)> = vec![(Vec::new(), coeff)];
                for sl in &slots {
                    let mut next = Vec::new();
                    for (p, pc) in &partial {
                        for (w, c) in sl.iter() {
                            let mut q = p.clone();
                            q.push(*w);
                            next.push((q, pc * c));
                        }
                    }
                    partial = next;
                }
                for (p, pc) in partial {
                    out.add_term(ChainKey::new(&p, *yj), pc);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::Character;

    fn all_pass(entries: &[LedgerEntry]) {
        for e in entries {
            assert!(e.pass, "{e:?}");
        }
    }

    #[test]
    fn kc2_full_ledger_passes() {
        let h = HopfPreset::kc2();
        let y = CoefficientModule::trivial(&h);
        let s = Suite::new(&h, &y, 2).unwrap();
        all_pass(&s.full_ledger().unwrap());
    }

    #[test]
    fn sweedler_modular_pair_identities() {
        let h = HopfPreset::sweedler4();
        let y = CoefficientModule::modular_pair(&h, Character::Counit, "g").unwrap();
        let s = Suite::new(&h, &y, 2).unwrap();
        assert!(s.is_ayd());
        all_pass(&s.cosimplicial().unwrap());
        all_pass(&s.coadjoint().unwrap());
        all_pass(&s.epimorphism().unwrap());
        all_pass(&[s.factoring().unwrap()]);
        all_pass(&s.kappa_vanishing(&[]).unwrap());
        assert!(!s.module_faces().unwrap().pass);
    }

    #[test]
    fn cocentral_detection() {
        let h = HopfPreset::sweedler4();
        assert!(is_cocentral(&h, &h.parse_element("g").unwrap(), 3));
        assert!(!is_cocentral(&h, &h.parse_element("x").unwrap(), 3));
    }
}
