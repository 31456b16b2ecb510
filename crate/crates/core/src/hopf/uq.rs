//! U_q(sl2) in the PBW basis X-^a K^b X+^c.
//!
//! Relations: K X+ = q² X+ K, K X- = q⁻² X- K, [X+, X-] = (K - K⁻¹)/(q - q⁻¹).
//! Coproduct: Δ(K) = K⊗K, Δ(X+) = 1⊗X+ + X+⊗K, Δ(X-) = K⁻¹⊗X- + X-⊗1.
//! Antipode: S(K) = K⁻¹, S(X+) = -X+K⁻¹, S(X-) = -KX-.

use exactlin::Scalar;
use smallvec::smallvec;

use super::{AlgebraElement, TensorElement, Word};
use crate::error::{HopfError, Result};

#[derive(Clone, Copy, Debug)]
pub(crate) enum Gen {
    Plus,
    Minus,
}

pub(crate) const GENERATORS: [Word; 4] = [
    Word::Pbw { minus: 0, k: 1, plus: 0 },
    Word::Pbw { minus: 0, k: -1, plus: 0 },
    Word::Pbw { minus: 0, k: 0, plus: 1 },
    Word::Pbw { minus: 1, k: 0, plus: 0 },
];

pub(crate) fn word(minus: u16, k: i16, plus: u16) -> Word {
    Word::Pbw { minus, k, plus }
}

#[derive(Debug)]
pub(crate) struct UqSl2 {
    pub q: Scalar,
    pub cap: u32,
    /// 1/(q - q⁻¹)
    commutator_scale: Scalar,
    /// q^(2e) for e in -POW_RANGE..=POW_RANGE
    q_sq_pows: Vec<Scalar>,
}

const POW_RANGE: i64 = 64;

impl UqSl2 {
    pub fn new(q: Scalar, cap: u32) -> Result<Self> {
        let bad = [Scalar::zero(), Scalar::one(), Scalar::from_int(-1)];
        if bad.contains(&q) {
            return Err(HopfError::InvalidParameter(format!(
                "q = {q} is not allowed: q must be nonzero and not ±1"
            )));
        }
        if cap > i16::MAX as u32 {
            return Err(HopfError::InvalidParameter(format!("cap {cap} too large")));
        }
        let commutator_scale = (&q - &q.inv()).inv();
        let q2 = &q * &q;
        let q_sq_pows = (-POW_RANGE..=POW_RANGE).map(|e| q2.pow(e)).collect();
        Ok(UqSl2 {
            q,
            cap,
            commutator_scale,
            q_sq_pows,
        })
    }

    /// In-cap words ordered by total degree, then (a, b, c).
    pub fn basis(&self) -> Vec<Word> {
        let cap = self.cap as i64;
        let mut out = Vec::new();
        for d in 0..=cap {
            for a in 0..=d {
                for b in -(d - a)..=(d - a) {
                    let c = d - a - b.abs();
                    out.push(word(a as u16, b as i16, c as u16));
                }
            }
        }
        out
    }

    fn q_sq(&self, e: i64) -> Scalar {
        if e.abs() <= POW_RANGE {
            self.q_sq_pows[(e + POW_RANGE) as usize].clone()
        } else {
            (&self.q * &self.q).pow(e)
        }
    }

    fn times_plus(&self, x: &AlgebraElement) -> AlgebraElement {
        x.iter()
            .map(|(w, c)| match w {
                Word::Pbw { minus, k, plus } => (word(*minus, *k, plus + 1), c.clone()),
                _ => unreachable!(),
            })
            .collect()
    }

    fn times_k(&self, x: &AlgebraElement, e: i16) -> AlgebraElement {
        // X+^c K^e = q^(-2ce) K^e X+^c
        x.iter()
            .map(|(w, c)| match w {
                Word::Pbw { minus, k, plus } => (
                    word(*minus, k + e, *plus),
                    c * &self.q_sq(-(*plus as i64) * e as i64),
                ),
                _ => unreachable!(),
            })
            .collect()
    }

    fn times_minus(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (w, coef) in x.iter() {
            let Word::Pbw { minus: a, k: b, plus: c } = *w else { unreachable!() };
            // K^b X- = q^(-2b) X- K^b
            out.add_term(word(a + 1, b, c), coef * &self.q_sq(-(b as i64)));
            if c > 0 {
                // X+^c X- = X- X+^c + Σ_i (q^(-2i) K - q^(2i) K⁻¹) X+^(c-1) / (q - q⁻¹)
                let scaled = coef * &self.commutator_scale;
                let mut up = Scalar::zero();
                let mut down = Scalar::zero();
                for i in 0..c as i64 {
                    up += &self.q_sq(-i);
                    down += &self.q_sq(i);
                }
                out.add_term(word(a, b + 1, c - 1), &scaled * &up);
                out.add_term(word(a, b - 1, c - 1), -(&scaled * &down));
            }
        }
        out
    }

    pub fn mul_words(&self, lhs: &Word, rhs: &Word) -> AlgebraElement {
        let Word::Pbw { minus, k, plus } = *rhs else { unreachable!() };
        let mut acc = AlgebraElement::basis(*lhs);
        for _ in 0..minus {
            acc = self.times_minus(&acc);
        }
        if k != 0 {
            acc = self.times_k(&acc, k);
        }
        for _ in 0..plus {
            acc = self.times_plus(&acc);
        }
        acc
    }

    pub fn coproduct_generator(&self, g: Gen) -> TensorElement {
        let one = word(0, 0, 0);
        match g {
            Gen::Plus => TensorElement::from_terms([
                (smallvec![one, word(0, 0, 1)], Scalar::one()),
                (smallvec![word(0, 0, 1), word(0, 1, 0)], Scalar::one()),
            ]),
            Gen::Minus => TensorElement::from_terms([
                (smallvec![word(0, -1, 0), word(1, 0, 0)], Scalar::one()),
                (smallvec![word(1, 0, 0), one], Scalar::one()),
            ]),
        }
    }

    /// Images of (X+, X-) under S, or under S⁻¹ when `inverse`.
    pub fn antipode_generators(&self, inverse: bool) -> (AlgebraElement, AlgebraElement) {
        let minus_one = Scalar::from_int(-1);
        if inverse {
            // S⁻¹(X+) = -K⁻¹X+, S⁻¹(X-) = -X-K
            (
                AlgebraElement::term(word(0, -1, 1), minus_one.clone()),
                AlgebraElement::term(word(1, 1, 0), minus_one),
            )
        } else {
            // S(X+) = -X+K⁻¹ = -q² K⁻¹X+, S(X-) = -KX- = -q⁻² X-K
            (
                AlgebraElement::term(word(0, -1, 1), -self.q_sq(1)),
                AlgebraElement::term(word(1, 1, 0), -self.q_sq(-1)),
            )
        }
    }
}

pub(crate) fn pbw_name(minus: u16, k: i16, plus: u16) -> String {
    let mut parts = Vec::new();
    match minus {
        0 => {}
        1 => parts.push("X-".to_string()),
        a => parts.push(format!("X-^{a}")),
    }
    match k {
        0 => {}
        1 => parts.push("K".to_string()),
        b => parts.push(format!("K^{b}")),
    }
    match plus {
        0 => {}
        1 => parts.push("X+".to_string()),
        c => parts.push(format!("X+^{c}")),
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// Parses `X+`, `X-^2`, `K`, `K^-1`, `K-` (alias of K⁻¹) and similar tokens.
pub(crate) fn parse_generator_power(tok: &str) -> Option<Word> {
    if tok == "K-" {
        return Some(word(0, -1, 0));
    }
    let (base, exp) = match tok.split_once('^') {
        Some((b, e)) => (b, e.parse::<i64>().ok()?),
        None => (tok, 1),
    };
    match base {
        "K" if exp.abs() <= i16::MAX as i64 => Some(word(0, exp as i16, 0)),
        "X+" if (0..=u16::MAX as i64).contains(&exp) => Some(word(0, 0, exp as u16)),
        "X-" if (0..=u16::MAX as i64).contains(&exp) => Some(word(exp as u16, 0, 0)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_degree_basis_sizes() {
        let u = UqSl2::new(Scalar::from_int(2), 3).unwrap();
        assert_eq!(u.basis().len(), 30);
        let u = UqSl2::new(Scalar::from_int(2), 2).unwrap();
        assert_eq!(u.basis().len(), 14);
    }

    #[test]
    fn names_round_trip() {
        for (a, b, c) in [(0, 0, 0), (1, 0, 0), (2, -1, 3), (0, 1, 1)] {
            let name = pbw_name(a, b, c);
            let mut w = word(0, 0, 0);
            if name != "1" {
                let parts: Vec<Word> = name.split(' ').map(|t| parse_generator_power(t).unwrap()).collect();
                // X- first, then K, then X+: already normal order
                let (mut ma, mut kb, mut pc) = (0u16, 0i16, 0u16);
                for p in parts {
                    let Word::Pbw { minus, k, plus } = p else { unreachable!() };
                    ma += minus;
                    kb += k;
                    pc += plus;
                }
                w = word(ma, kb, pc);
            }
            assert_eq!(w, word(a, b, c));
        }
    }
}
