//! Coefficient module/comodules Y over a preset bialgebra.

use std::collections::HashMap;

use exactlin::{quotient_projection, Scalar, SparseVector};

use crate::error::{HopfError, Result};
use crate::hopf::{format_comb, AlgebraElement, HopfPreset, Word};
use crate::ledger::{check_cases, LedgerEntry};
use crate::linear::LinComb;

/// Vector in Y, keyed by Y-basis index.
pub type YVector = LinComb<usize>;
/// Element of B ⊗ Y.
pub type CoactionElement = LinComb<(Word, usize)>;

/// One-dimensional characters offered by the modular-pair preset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Character {
    Counit,
    /// -1 on odd group elements, g and K; 0 on nilpotents and on e in kM2.
    Sign,
}

#[derive(Clone, Debug)]
enum Action {
    Counit,
    Character(Character),
    /// Column-sparse matrix per algebra basis word.
    Matrices(HashMap<Word, Vec<Vec<(usize, Scalar)>>>),
}

#[derive(Clone, Debug)]
pub struct CoefficientModule {
    name: String,
    algebra: String,
    labels: Vec<String>,
    action: Action,
    coaction: Vec<Vec<(Word, usize, Scalar)>>,
}

pub fn character_value(h: &HopfPreset, chi: Character, w: &Word) -> Scalar {
    match chi {
        Character::Counit => w.counit(),
        Character::Sign => {
            let minus = Scalar::from_int(-1);
            match w {
                Word::Unit => Scalar::one(),
                Word::Elem(i) => match (h.name(), *i) {
                    (_, 0) => Scalar::one(),
                    ("kM2", _) => Scalar::zero(),
                    ("kS3", 3 | 4) => Scalar::one(),
                    _ => minus,
                },
                Word::Sweedler { g, x } => match (g, x) {
                    (_, true) => Scalar::zero(),
                    (true, false) => minus,
                    (false, false) => Scalar::one(),
                },
                Word::Pbw { minus: a, k, plus: c } => {
                    if *a > 0 || *c > 0 {
                        Scalar::zero()
                    } else if k % 2 == 0 {
                        Scalar::one()
                    } else {
                        minus
                    }
                }
            }
        }
    }
}

impl CoefficientModule {
    /// Y = k with the counit action and the trivial coaction.
    pub fn trivial(h: &HopfPreset) -> Self {
        CoefficientModule {
            name: "trivial".into(),
            algebra: h.name().into(),
            labels: vec!["1_Y".into()],
            action: Action::Counit,
            coaction: vec![vec![(h.unit(), 0, Scalar::one())]],
        }
    }

    /// Y = k with action through a character and coaction 1 ↦ σ ⊗ 1.
    pub fn modular_pair(h: &HopfPreset, delta: Character, sigma: &str) -> Result<Self> {
        let s = h.parse_element(sigma)?;
        let word = match s.iter().next() {
            Some((w, c)) if s.len() == 1 && c.is_one() => *w,
            _ => return Err(HopfError::InvalidParameter(format!("`{sigma}` is not a basis word"))),
        };
        h.check_cap(&word)?;
        let cop = h.iterated_word(&word, 1);
        if *cop != LinComb::basis(smallvec::smallvec![word, word]) || !word.counit().is_one() {
            return Err(HopfError::InvalidParameter(format!("`{sigma}` is not grouplike")));
        }
        let words = h.basis();
        for a in words {
            for b in words {
                let lhs: Scalar = h
                    .mul_words(a, b)
                    .iter()
                    .map(|(w, c)| c * &character_value(h, delta, w))
                    .sum();
                let rhs = &character_value(h, delta, a) * &character_value(h, delta, b);
                if lhs != rhs {
                    return Err(HopfError::InvalidParameter(format!(
                        "{delta:?} is not a character of {}: fails on ({}, {})",
                        h.name(),
                        h.word_name(a),
                        h.word_name(b)
                    )));
                }
            }
        }
        let dname = match delta {
            Character::Counit => "eps",
            Character::Sign => "sign",
        };
        Ok(CoefficientModule {
            name: format!("modular_pair({dname},{})", h.word_name(&word)),
            algebra: h.name().into(),
            labels: vec!["1_Y".into()],
            action: Action::Character(delta),
            coaction: vec![vec![(word, 0, Scalar::one())]],
        })
    }

    /// Y = the algebra itself (its in-cap basis), counit action, coaction Δ.
    pub fn coalgebra_self(h: &HopfPreset) -> Result<Self> {
        let mut coaction = Vec::with_capacity(h.dim());
        for w in h.basis() {
            let mut row = Vec::new();
            for (legs, c) in h.iterated_word(w, 1).iter() {
                h.check_cap(&legs[0])?;
                let j = h.index_of(&legs[1]).ok_or_else(|| HopfError::DegreeOverflow {
                    word: h.word_name(&legs[1]),
                    cap: h.cap().unwrap_or(0),
                })?;
                row.push((legs[0], j, c.clone()));
            }
            coaction.push(row);
        }
        Ok(CoefficientModule {
            name: "coalgebra_self".into(),
            algebra: h.name().into(),
            labels: h.basis().iter().map(|w| h.word_name(w)).collect(),
            action: Action::Counit,
            coaction,
        })
    }

    /// Y = B / (left ideal generated by `generators`) with the left regular
    /// action and the trivial coaction. Finite presets only.
    pub fn trivial_coaction(h: &HopfPreset, generators: &[AlgebraElement]) -> Result<Self> {
        if !h.is_finite() {
            return Err(HopfError::InvalidParameter(
                "trivial_coaction needs a finite-dimensional algebra".into(),
            ));
        }
        let dim = h.dim();
        let to_vec = |x: &AlgebraElement| {
            SparseVector::from_entries(dim, x.iter().map(|(w, c)| (h.index_of(w).expect("finite basis"), c.clone())))
        };
        let ideal: Vec<SparseVector> = generators
            .iter()
            .flat_map(|g| h.basis().iter().map(move |b| (b, g)))
            .map(|(b, g)| to_vec(&h.mul(&AlgebraElement::basis(*b), g)))
            .collect();
        let quot = quotient_projection(dim, &ideal);
        let reps: Vec<Word> = quot.representatives.iter().map(|&i| h.basis()[i]).collect();
        let mut matrices = HashMap::new();
        for b in h.basis() {
            let cols = reps
                .iter()
                .map(|r| {
                    let img = quot.projection.mul_vec(&to_vec(&h.mul_words(b, r)))?;
                    Ok(img.into_entries())
                })
                .collect::<Result<Vec<_>>>()?;
            matrices.insert(*b, cols);
        }
        let n = reps.len();
        Ok(CoefficientModule {
            name: if generators.is_empty() {
                "trivial_coaction".into()
            } else {
                format!(
                    "trivial_coaction({})",
                    generators.iter().map(|g| h.element_name(g)).collect::<Vec<_>>().join(", ")
                )
            },
            algebra: h.name().into(),
            labels: reps.iter().map(|w| h.word_name(w)).collect(),
            action: Action::Matrices(matrices),
            coaction: (0..n).map(|i| vec![(h.unit(), i, Scalar::one())]).collect(),
        })
    }

    /// Builds a catalog preset by name; `params` carries `delta`, `sigma` or
    /// `generators` (comma separated) as needed.
    pub fn by_name(h: &HopfPreset, name: &str, params: &HashMap<String, String>) -> Result<Self> {
        match name {
            "trivial" => Ok(Self::trivial(h)),
            "coalgebra_self" => Self::coalgebra_self(h),
            "modular_pair" => {
                let delta = match params.get("delta").map(String::as_str).unwrap_or("eps") {
                    "eps" | "counit" => Character::Counit,
                    "sign" => Character::Sign,
                    other => return Err(HopfError::InvalidParameter(format!("unknown character `{other}`"))),
                };
                let default_sigma = match h.name() {
                    "sweedler4" | "kC2" => "g",
                    "uq_sl2" => "K",
                    _ => "1",
                };
                let sigma = params.get("sigma").map(String::as_str).unwrap_or(default_sigma);
                Self::modular_pair(h, delta, sigma)
            }
            "trivial_coaction" => {
                let gens = match params.get("generators") {
                    Some(s) => s
                        .split(',')
                        .filter(|t| !t.trim().is_empty())
                        .map(|t| h.parse_element(t))
                        .collect::<Result<Vec<_>>>()?,
                    None => Vec::new(),
                };
                Self::trivial_coaction(h, &gens)
            }
            other => Err(HopfError::InvalidParameter(format!("unknown coefficient preset `{other}`"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &str {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// True when every b acts by ε(b).
    pub fn has_counit_action(&self) -> bool {
        matches!(self.action, Action::Counit | Action::Character(Character::Counit))
    }

    /// True when ρ(y) = 1 ⊗ y for every basis vector.
    pub fn has_trivial_coaction(&self, h: &HopfPreset) -> bool {
        self.coaction
            .iter()
            .enumerate()
            .all(|(i, row)| row.len() == 1 && row[0].0 == h.unit() && row[0].1 == i && row[0].2.is_one())
    }

    /// b · y for a basis word b and a basis vector y.
    pub fn act_word(&self, h: &HopfPreset, b: &Word, y: usize) -> YVector {
        match &self.action {
            Action::Counit => YVector::term(y, b.counit()),
            Action::Character(chi) => YVector::term(y, character_value(h, *chi, b)),
            Action::Matrices(m) => {
                let col = &m.get(b).unwrap_or_else(|| panic!("{} acts only by its basis", self.name))[y];
                col.iter().cloned().collect()
            }
        }
    }

    pub fn act(&self, h: &HopfPreset, b: &AlgebraElement, y: &YVector) -> YVector {
        let mut out = YVector::zero();
        for (w, c) in b.iter() {
            for (j, d) in y.iter() {
                out.add_scaled(&self.act_word(h, w, *j), &(c * d));
            }
        }
        out
    }

    /// Terms (y₍₋₁₎, y₍₀₎, coefficient) of ρ on a basis vector.
    pub fn coact_basis(&self, y: usize) -> &[(Word, usize, Scalar)] {
        &self.coaction[y]
    }

    pub fn coact(&self, y: &YVector) -> CoactionElement {
        let mut out = CoactionElement::zero();
        for (i, c) in y.iter() {
            for (w, j, d) in &self.coaction[*i] {
                out.add_term((*w, *j), c * d);
            }
        }
        out
    }

    pub fn vector_name(&self, y: &YVector) -> String {
        format_comb(y.iter().map(|(i, c)| (self.labels[*i].clone(), c)))
    }

    pub fn coaction_name(&self, h: &HopfPreset, t: &CoactionElement) -> String {
        format_comb(t.iter().map(|((w, j), c)| (format!("{}⊗{}", h.word_name(w), self.labels[*j]), c)))
    }

    fn stability_defect(&self, h: &HopfPreset, m: i64, y: usize) -> Result<Option<String>> {
        let mut out = YVector::zero();
        for (w, j, c) in &self.coaction[y] {
            let s = h.antipode(&AlgebraElement::basis(*w), m)?;
            out.add_scaled(&self.act(h, &s, &YVector::basis(*j)), c);
        }
        Ok((out != YVector::basis(y)).then(|| {
            format!("y={}: S^{m}(y(-1))·y(0) = {}", self.labels[y], self.vector_name(&out))
        }))
    }

    /// Whether Sᵐ(y₍₋₁₎)·y₍₀₎ = y on every basis vector; the witness names
    /// the first failure.
    pub fn m_stability(&self, h: &HopfPreset, m: i64) -> Result<Option<String>> {
        if m != 0 && !h.is_hopf() {
            return Err(HopfError::NotHopf(h.name().into()));
        }
        for y in 0..self.dim() {
            if let Some(w) = self.stability_defect(h, m, y)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    pub fn is_m_stable(&self, h: &HopfPreset, m: i64) -> Result<bool> {
        Ok(self.m_stability(h, m)?.is_none())
    }

    pub fn is_stable(&self, h: &HopfPreset) -> Result<bool> {
        Ok(self.is_m_stable(h, 0)? && self.is_m_stable(h, 1)?)
    }

    /// Checks ρ(h·y) = h₍₁₎y₍₋₁₎S⁻¹(h₍₃₎) ⊗ h₍₂₎·y₍₀₎ on every basis pair,
    /// iterating h in the outer loop. Returns the first counterexample.
    pub fn ayd_witness(&self, h: &HopfPreset) -> Result<Option<String>> {
        if !h.is_hopf() {
            return Err(HopfError::NotHopf(h.name().into()));
        }
        for hw in h.basis() {
            for y in 0..self.dim() {
                let lhs = self.coact(&self.act_word(h, hw, y));
                let rhs = self.ayd_rhs(h, hw, y)?;
                if lhs != rhs {
                    return Ok(Some(format!(
                        "h={}, y={}: ρ(h·y) = {}, h(1)y(-1)S⁻¹(h(3))⊗h(2)·y(0) = {}",
                        h.word_name(hw),
                        self.labels[y],
                        self.coaction_name(h, &lhs),
                        self.coaction_name(h, &rhs)
                    )));
                }
            }
        }
        Ok(None)
    }

    fn ayd_rhs(&self, h: &HopfPreset, hw: &Word, y: usize) -> Result<CoactionElement> {
        let mut out = CoactionElement::zero();
        for (legs, c) in h.iterated_word(hw, 2).iter() {
            let sinv = h.antipode_word(&legs[2], true)?;
            for (w, j, d) in &self.coaction[y] {
                let left = h.mul(&h.mul(&AlgebraElement::basis(legs[0]), &AlgebraElement::basis(*w)), &sinv);
                let right = self.act_word(h, &legs[1], *j);
                let cd = c * d;
                for (lw, e) in left.iter() {
                    for (rj, f) in right.iter() {
                        out.add_term((*lw, *rj), &(&cd * e) * f);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_ayd(&self, h: &HopfPreset) -> Result<bool> {
        Ok(self.ayd_witness(h)?.is_none())
    }

    /// Whether y₍₋₂₎⊗y₍₋₁₎⊗y₍₀₎ is symmetric in its two algebra legs.
    pub fn is_cocommutative_comodule(&self, h: &HopfPreset) -> bool {
        (0..self.dim()).all(|y| {
            let mut fwd = LinComb::<(Word, Word, usize)>::zero();
            let mut flipped = LinComb::<(Word, Word, usize)>::zero();
            for (w, j, c) in &self.coaction[y] {
                for (legs, d) in h.iterated_word(w, 1).iter() {
                    fwd.add_term((legs[0], legs[1], *j), c * d);
                    flipped.add_term((legs[1], legs[0], *j), c * d);
                }
            }
            fwd == flipped
        })
    }

    /// Module and comodule axioms on basis words of total degree at most
    /// `sample_cap` (all in-cap words when `None`).
    pub fn check_axioms(&self, h: &HopfPreset, sample_cap: Option<u32>) -> Result<Vec<LedgerEntry>> {
        let words: Vec<Word> = h
            .basis()
            .iter()
            .filter(|w| sample_cap.is_none_or(|c| w.total_degree() <= c))
            .copied()
            .collect();
        let ys: Vec<usize> = (0..self.dim()).collect();
        let pairs: Vec<(Word, Word)> = words.iter().flat_map(|a| words.iter().map(move |b| (*a, *b))).collect();
        let mut out = Vec::new();
        out.push(check_cases("module unit", vec![], true, &ys, |y| {
            let v = self.act_word(h, &h.unit(), *y);
            Ok((v != YVector::basis(*y)).then(|| format!("y={}", self.labels[*y])))
        })?);
        out.push(check_cases("module associativity", vec![], true, &pairs, |(a, b)| {
            for y in 0..self.dim() {
                let lhs = self.act(h, &h.mul_words(a, b), &YVector::basis(y));
                let rhs = self.act(h, &AlgebraElement::basis(*a), &self.act_word(h, b, y));
                if lhs != rhs {
                    return Ok(Some(format!("a={}, b={}, y={}", h.word_name(a), h.word_name(b), self.labels[y])));
                }
            }
            Ok(None)
        })?);
        out.push(check_cases("comodule coassociativity", vec![], true, &ys, |y| {
            let mut left = LinComb::<(Word, Word, usize)>::zero();
            let mut right = LinComb::<(Word, Word, usize)>::zero();
            for (w, j, c) in &self.coaction[*y] {
                for (legs, d) in h.iterated_word(w, 1).iter() {
                    left.add_term((legs[0], legs[1], *j), c * d);
                }
                for (w2, k, d) in &self.coaction[*j] {
                    right.add_term((*w, *w2, *k), c * d);
                }
            }
            Ok((left != right).then(|| format!("y={}", self.labels[*y])))
        })?);
        out.push(check_cases("comodule counit", vec![], true, &ys, |y| {
            let mut v = YVector::zero();
            for (w, j, c) in &self.coaction[*y] {
                v.add_term(*j, c * &w.counit());
            }
            Ok((v != YVector::basis(*y)).then(|| format!("y={}", self.labels[*y])))
        })?);
        Ok(out)
    }

    /// Stability and aYD classification as ledger entries. Stability entries
    /// are fatal only when `require_stable` says the run depends on them.
    pub fn classification(&self, h: &HopfPreset, require_stable: bool) -> Result<Vec<LedgerEntry>> {
        let mut out = vec![LedgerEntry::new("0-stable", vec![], require_stable, self.m_stability(h, 0)?)];
        if h.is_hopf() {
            out.push(LedgerEntry::new("1-stable", vec![], false, self.m_stability(h, 1)?));
            let ayd = self.ayd_witness(h)?;
            let ayd_flag = ayd.is_none();
            out.push(LedgerEntry::new("aYD", vec![], false, ayd));
            if ayd_flag {
                // stability equivalence for aYD modules
                let s0 = self.is_m_stable(h, 0)?;
                let s1 = self.is_m_stable(h, 1)?;
                out.push(LedgerEntry::new(
                    "aYD: 0-stable iff 1-stable",
                    vec![],
                    true,
                    (s0 != s1).then(|| format!("0-stable={s0}, 1-stable={s1}")),
                ));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweedler_coefficient_presets() {
        let h = HopfPreset::sweedler4();
        let t = CoefficientModule::trivial(&h);
        assert!(t.is_stable(&h).unwrap());
        // S² ≠ id, so (ε, 1) is not a modular pair in involution
        let w = t.ayd_witness(&h).unwrap().unwrap();
        assert!(w.starts_with("h=x, y=1_Y"), "{w}");
        let mp = CoefficientModule::modular_pair(&h, Character::Counit, "g").unwrap();
        assert!(mp.is_stable(&h).unwrap());
        assert!(mp.is_ayd(&h).unwrap());
        let x = h.parse_element("x").unwrap();
        assert!(mp.act(&h, &x, &YVector::basis(0)).is_zero());
        assert_eq!(mp.coaction_name(&h, &mp.coact(&YVector::basis(0))), "g⊗1_Y");
        let cs = CoefficientModule::coalgebra_self(&h).unwrap();
        for m in -3..=3 {
            assert!(cs.is_m_stable(&h, m).unwrap());
        }
        assert_eq!(cs.coaction_name(&h, &cs.coact(&YVector::basis(2))), "x⊗1 + g⊗x");
        let w = cs.ayd_witness(&h).unwrap().unwrap();
        assert!(w.starts_with("h=g, y=x"), "{w}");
        assert!(w.contains("x⊗1 + g⊗x") && w.contains("-x⊗1 + g⊗x"), "{w}");
        for m in [&t, &mp, &cs] {
            assert!(m.check_axioms(&h, None).unwrap().iter().all(|e| e.pass));
        }
    }

    #[test]
    fn characters_are_checked() {
        let h = HopfPreset::sweedler4();
        assert!(CoefficientModule::modular_pair(&h, Character::Sign, "g").is_ok());
        assert!(CoefficientModule::modular_pair(&h, Character::Counit, "x").is_err());
        let k = HopfPreset::kc2();
        let mp = CoefficientModule::modular_pair(&k, Character::Counit, "g").unwrap();
        assert!(mp.is_ayd(&k).unwrap());
    }

    #[test]
    fn trivial_coaction_quotients_by_left_ideal() {
        let h = HopfPreset::kc2();
        let gen = h.parse_element("1").unwrap().minus(&h.parse_element("g").unwrap());
        let y = CoefficientModule::trivial_coaction(&h, &[gen]).unwrap();
        assert_eq!(y.dim(), 1);
        for m in -2..=2 {
            assert!(y.is_m_stable(&h, m).unwrap());
        }
        let reg = CoefficientModule::trivial_coaction(&HopfPreset::ks3(), &[]).unwrap();
        assert_eq!(reg.dim(), 6);
        assert!(reg.check_axioms(&HopfPreset::ks3(), None).unwrap().iter().all(|e| e.pass));
    }

    #[test]
    fn uq_coalgebra_self_is_a_subcomodule() {
        let h = HopfPreset::uq_sl2(Scalar::from_int(2), 3).unwrap();
        let y = CoefficientModule::coalgebra_self(&h).unwrap();
        assert_eq!(y.dim(), 30);
        assert!(y.is_m_stable(&h, 0).unwrap());
        assert!(y.check_axioms(&h, Some(2)).unwrap().iter().all(|e| e.pass));
    }
}
