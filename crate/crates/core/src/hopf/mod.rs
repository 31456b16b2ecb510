//! Concrete bialgebras and Hopf algebras in a canonical basis.

mod axioms;
mod memo;
mod uq;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use exactlin::Scalar;
use smallvec::{smallvec, SmallVec};

use crate::error::{HopfError, Result};
use crate::linear::LinComb;
use memo::Memo;
use uq::UqSl2;

pub use axioms::check_hopf_axioms;

/// A canonical basis word of some preset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Word {
    /// The unit of the ground field viewed as a Hopf algebra.
    Unit,
    /// Group or monoid element by table index; index 0 is the identity.
    Elem(u8),
    /// g^g x^x in Sweedler's four-dimensional algebra.
    Sweedler { g: bool, x: bool },
    /// PBW monomial X-^minus K^k X+^plus.
    Pbw { minus: u16, k: i16, plus: u16 },
}

impl Word {
    pub fn counit(&self) -> Scalar {
        let nil = match self {
            Word::Unit | Word::Elem(_) => false,
            Word::Sweedler { x, .. } => *x,
            Word::Pbw { minus, plus, .. } => *minus > 0 || *plus > 0,
        };
        if nil {
            Scalar::zero()
        } else {
            Scalar::one()
        }
    }

    /// Total degree of a PBW word, zero otherwise.
    pub fn total_degree(&self) -> u32 {
        match self {
            Word::Pbw { minus, k, plus } => *minus as u32 + k.unsigned_abs() as u32 + *plus as u32,
            _ => 0,
        }
    }
}

pub type Tensor = SmallVec<[Word; 4]>;
pub type AlgebraElement = LinComb<Word>;
pub type TensorElement = LinComb<Tensor>;

#[derive(Clone, Debug)]
struct FiniteTable {
    names: Vec<String>,
    mul: Vec<Vec<u8>>,
    inv: Option<Vec<u8>>,
}

impl FiniteTable {
    fn from_permutations(perms: &[Vec<usize>], names: &[&str]) -> Self {
        let find = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
        let n = perms.len();
        let mut mul = vec![vec![0u8; n]; n];
        let mut inv = vec![0u8; n];
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                // (a b)(k) = a(b(k))
                let prod: Vec<usize> = b.iter().map(|&k| a[k]).collect();
                mul[i][j] = find(&prod) as u8;
            }
            let mut ai = vec![0usize; a.len()];
            for (k, &v) in a.iter().enumerate() {
                ai[v] = k;
            }
            inv[i] = find(&ai) as u8;
        }
        FiniteTable {
            names: names.iter().map(|s| s.to_string()).collect(),
            mul,
            inv: Some(inv),
        }
    }
}

#[derive(Debug)]
enum Kind {
    Field,
    Group(FiniteTable),
    Monoid(FiniteTable),
    Sweedler,
    Uq(UqSl2),
}

/// A preset bialgebra with exact structure maps.
///
/// Products, coproducts and antipodes are computed exactly without any
/// truncation; the degree cap of `uq_sl2` only bounds the enumerated basis and
/// is enforced by the checked entry points (`multiply`, `coproduct`, ...).
#[derive(Debug)]
pub struct HopfPreset {
    name: String,
    kind: Kind,
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
    mul_cache: Memo<(Word, Word), AlgebraElement>,
    cop_cache: Memo<(Word, usize), TensorElement>,
    antipode_cache: Memo<(Word, bool), AlgebraElement>,
}

const SWEEDLER_BASIS: [Word; 4] = [
    Word::Sweedler { g: false, x: false },
    Word::Sweedler { g: true, x: false },
    Word::Sweedler { g: false, x: true },
    Word::Sweedler { g: true, x: true },
];

impl HopfPreset {
    fn build(name: &str, kind: Kind, basis: Vec<Word>) -> Self {
        let index = basis.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        HopfPreset {
            name: name.to_string(),
            kind,
            basis,
            index,
            mul_cache: Memo::new(),
            cop_cache: Memo::new(),
            antipode_cache: Memo::new(),
        }
    }

    /// The ground field as a one-dimensional Hopf algebra.
    pub fn field() -> Self {
        Self::build("k", Kind::Field, vec![Word::Unit])
    }

    pub fn kc2() -> Self {
        let t = FiniteTable::from_permutations(&[vec![0, 1], vec![1, 0]], &["1", "g"]);
        Self::build("kC2", Kind::Group(t), vec![Word::Elem(0), Word::Elem(1)])
    }

    /// Group algebra of S3. Elements are permutations of {1,2,3} in
    /// lexicographic order of their one-line notation:
    /// e, (23), (12), (123), (132), (13).
    pub fn ks3() -> Self {
        let perms = vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ];
        let t = FiniteTable::from_permutations(&perms, &["e", "(23)", "(12)", "(123)", "(132)", "(13)"]);
        Self::build("kS3", Kind::Group(t), (0..6).map(Word::Elem).collect())
    }

    /// Monoid algebra of {1, e} with e² = e: a bialgebra without antipode.
    pub fn km2() -> Self {
        let t = FiniteTable {
            names: vec!["1".into(), "e".into()],
            mul: vec![vec![0, 1], vec![1, 1]],
            inv: None,
        };
        Self::build("kM2", Kind::Monoid(t), vec![Word::Elem(0), Word::Elem(1)])
    }

    /// Sweedler's Hopf algebra: g² = 1, x² = 0, xg = -gx, Δx = x⊗1 + g⊗x.
    pub fn sweedler4() -> Self {
        Self::build("sweedler4", Kind::Sweedler, SWEEDLER_BASIS.to_vec())
    }

    /// U_q(sl2) with PBW basis X-^a K^b X+^c; the enumerated basis holds the
    /// words of total degree a + |b| + c at most `cap`.
    pub fn uq_sl2(q: Scalar, cap: u32) -> Result<Self> {
        let data = UqSl2::new(q, cap)?;
        let basis = data.basis();
        Ok(Self::build("uq_sl2", Kind::Uq(data), basis))
    }

    pub fn by_name(name: &str, q: Option<Scalar>, cap: Option<u32>) -> Result<Self> {
        match name {
            "k" => Ok(Self::field()),
            "kC2" => Ok(Self::kc2()),
            "kS3" => Ok(Self::ks3()),
            "kM2" => Ok(Self::km2()),
            "sweedler4" => Ok(Self::sweedler4()),
            "uq_sl2" => Self::uq_sl2(q.unwrap_or_else(|| Scalar::from_int(2)), cap.unwrap_or(3)),
            other => Err(HopfError::InvalidParameter(format!("unknown algebra preset `{other}`"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_hopf(&self) -> bool {
        !matches!(self.kind, Kind::Monoid(_))
    }

    pub fn is_cocommutative(&self) -> bool {
        matches!(self.kind, Kind::Field | Kind::Group(_) | Kind::Monoid(_))
    }

    /// True when the algebra itself is finite-dimensional.
    pub fn is_finite(&self) -> bool {
        !matches!(self.kind, Kind::Uq(_))
    }

    pub fn cap(&self) -> Option<u32> {
        match &self.kind {
            Kind::Uq(u) => Some(u.cap),
            _ => None,
        }
    }

    pub fn q(&self) -> Option<&Scalar> {
        match &self.kind {
            Kind::Uq(u) => Some(&u.q),
            _ => None,
        }
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn unit(&self) -> Word {
        match self.kind {
            Kind::Field => Word::Unit,
            Kind::Group(_) | Kind::Monoid(_) => Word::Elem(0),
            Kind::Sweedler => SWEEDLER_BASIS[0],
            Kind::Uq(_) => Word::Pbw { minus: 0, k: 0, plus: 0 },
        }
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::basis(self.unit())
    }

    /// Algebra generators used by generator-level checks.
    pub fn generators(&self) -> Vec<Word> {
        match &self.kind {
            Kind::Field => vec![Word::Unit],
            Kind::Group(t) if t.names.len() == 6 => vec![Word::Elem(2), Word::Elem(3)],
            Kind::Group(_) | Kind::Monoid(_) => vec![Word::Elem(1)],
            Kind::Sweedler => vec![SWEEDLER_BASIS[1], SWEEDLER_BASIS[2]],
            Kind::Uq(_) => uq::GENERATORS.to_vec(),
        }
    }

    pub fn in_cap(&self, w: &Word) -> bool {
        self.index.contains_key(w)
    }

    pub fn check_cap(&self, w: &Word) -> Result<()> {
        if self.in_cap(w) {
            Ok(())
        } else {
            Err(HopfError::DegreeOverflow {
                word: self.word_name(w),
                cap: self.cap().unwrap_or(0),
            })
        }
    }

    fn check_element(&self, x: &AlgebraElement) -> Result<()> {
        x.keys().try_for_each(|w| self.check_cap(w))
    }

    fn check_tensor(&self, t: &TensorElement) -> Result<()> {
        t.keys().flat_map(|k| k.iter()).try_for_each(|w| self.check_cap(w))
    }

    fn table(&self) -> Option<&FiniteTable> {
        match &self.kind {
            Kind::Group(t) | Kind::Monoid(t) => Some(t),
            _ => None,
        }
    }

    pub fn word_name(&self, w: &Word) -> String {
        match (w, &self.kind) {
            (Word::Unit, _) => "1".into(),
            (Word::Elem(i), _) => self
                .table()
                .and_then(|t| t.names.get(*i as usize).cloned())
                .unwrap_or_else(|| format!("#{i}")),
            (Word::Sweedler { g, x }, _) => match (g, x) {
                (false, false) => "1".into(),
                (true, false) => "g".into(),
                (false, true) => "x".into(),
                (true, true) => "gx".into(),
            },
            (Word::Pbw { minus, k, plus }, _) => uq::pbw_name(*minus, *k, *plus),
        }
    }

    pub fn element_name(&self, x: &AlgebraElement) -> String {
        format_comb(x.iter().map(|(w, c)| (self.word_name(w), c)))
    }

    pub fn tensor_name(&self, t: &TensorElement) -> String {
        format_comb(t.iter().map(|(k, c)| {
            (
                k.iter().map(|w| self.word_name(w)).collect::<Vec<_>>().join("⊗"),
                c,
            )
        }))
    }

    /// Parses a product of basis names, e.g. `g x` or `X- K^-1 X+^2`, with an
    /// optional leading minus sign.
    pub fn parse_element(&self, text: &str) -> Result<AlgebraElement> {
        let t = text.trim();
        let (sign, body) = match t.strip_prefix('-') {
            Some(rest) => (Scalar::from_int(-1), rest.trim()),
            None => (Scalar::one(), t),
        };
        let mut acc = self.one();
        let tokens: Vec<&str> = body.split(|c: char| c.is_whitespace() || c == '*').filter(|s| !s.is_empty()).collect();
        if tokens.is_empty() {
            return Err(HopfError::InvalidParameter(format!("empty element `{text}`")));
        }
        for tok in tokens {
            let w = self.parse_token(tok)?;
            acc = self.mul(&acc, &AlgebraElement::basis(w));
        }
        Ok(acc.scale(&sign))
    }

    fn parse_token(&self, tok: &str) -> Result<Word> {
        if tok == "1" {
            return Ok(self.unit());
        }
        if let Kind::Uq(_) = self.kind {
            return uq::parse_generator_power(tok)
                .ok_or_else(|| HopfError::InvalidParameter(format!("unknown U_q token `{tok}`")));
        }
        self.basis
            .iter()
            .find(|w| self.word_name(w) == tok)
            .copied()
            .ok_or_else(|| HopfError::InvalidParameter(format!("unknown basis word `{tok}` for {}", self.name)))
    }

    /// Exact product of two basis words (never truncated).
    pub fn mul_words(&self, a: &Word, b: &Word) -> Arc<AlgebraElement> {
        self.mul_cache.get_or((*a, *b), || self.compute_mul(a, b))
    }

    fn compute_mul(&self, a: &Word, b: &Word) -> AlgebraElement {
        match (&self.kind, a, b) {
            (Kind::Field, _, _) => AlgebraElement::basis(Word::Unit),
            (Kind::Group(t) | Kind::Monoid(t), Word::Elem(i), Word::Elem(j)) => {
                AlgebraElement::basis(Word::Elem(t.mul[*i as usize][*j as usize]))
            }
            (Kind::Sweedler, Word::Sweedler { g: g1, x: x1 }, Word::Sweedler { g: g2, x: x2 }) => {
                if *x1 && *x2 {
                    return AlgebraElement::zero();
                }
                // x^x1 g^g2 = (-1)^(x1 g2) g^g2 x^x1
                let sign = if *x1 && *g2 { -1 } else { 1 };
                AlgebraElement::term(Word::Sweedler { g: g1 ^ g2, x: *x1 || *x2 }, Scalar::from_int(sign))
            }
            (Kind::Uq(u), _, _) => u.mul_words(a, b),
            _ => panic!("word {:?} or {:?} does not belong to {}", a, b, self.name),
        }
    }

    /// Exact product of elements (never truncated).
    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (a, c) in x.iter() {
            for (b, d) in y.iter() {
                let p = self.mul_words(a, b);
                out.add_scaled(&p, &(c * d));
            }
        }
        out
    }

    /// Checked product: inputs and output must lie within the degree cap.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        let out = self.mul(x, y);
        self.check_element(&out)?;
        Ok(out)
    }

    /// Δ^(n) of a basis word, n + 1 tensor legs; n = 0 is the word itself.
    pub fn iterated_word(&self, w: &Word, n: usize) -> Arc<TensorElement> {
        self.cop_cache.get_or((*w, n), || self.compute_iterated(w, n))
    }

    fn compute_iterated(&self, w: &Word, n: usize) -> TensorElement {
        if n == 0 {
            return TensorElement::basis(smallvec![*w]);
        }
        if n == 1 {
            return self.compute_coproduct(w);
        }
        // (Δ ⊗ id^(n-1)) Δ^(n-1)
        let prev = self.iterated_word(w, n - 1);
        let mut out = TensorElement::zero();
        for (legs, c) in prev.iter() {
            let first = self.iterated_word(&legs[0], 1);
            for (pair, d) in first.iter() {
                let mut k: Tensor = SmallVec::with_capacity(n + 1);
                k.push(pair[0]);
                k.push(pair[1]);
                k.extend_from_slice(&legs[1..]);
                out.add_term(k, c * d);
            }
        }
        out
    }

    fn compute_coproduct(&self, w: &Word) -> TensorElement {
        match (&self.kind, w) {
            (Kind::Field, _) | (Kind::Group(_) | Kind::Monoid(_), _) => TensorElement::basis(smallvec![*w, *w]),
            (Kind::Sweedler, Word::Sweedler { g, x }) => {
                let one = SWEEDLER_BASIS[0];
                let gw = SWEEDLER_BASIS[1];
                match (g, x) {
                    (false, false) | (true, false) => TensorElement::basis(smallvec![*w, *w]),
                    // Δx = x⊗1 + g⊗x
                    (false, true) => TensorElement::from_terms([
                        (smallvec![*w, one], Scalar::one()),
                        (smallvec![gw, *w], Scalar::one()),
                    ]),
                    // Δ(gx) = gx⊗g + 1⊗gx
                    (true, true) => TensorElement::from_terms([
                        (smallvec![*w, gw], Scalar::one()),
                        (smallvec![one, *w], Scalar::one()),
                    ]),
                }
            }
            (Kind::Uq(u), Word::Pbw { minus, k, plus }) => {
                // Δ is an algebra map; peel one generator off the right end.
                if *plus > 0 {
                    let prefix = Word::Pbw { minus: *minus, k: *k, plus: plus - 1 };
                    let left = self.iterated_word(&prefix, 1);
                    self.tensor_mul(&left, &u.coproduct_generator(uq::Gen::Plus))
                } else if *k != 0 {
                    let prefix = Word::Pbw { minus: *minus, k: 0, plus: 0 };
                    let left = self.iterated_word(&prefix, 1);
                    let kk = Word::Pbw { minus: 0, k: *k, plus: 0 };
                    self.tensor_mul(&left, &TensorElement::basis(smallvec![kk, kk]))
                } else if *minus > 0 {
                    let prefix = Word::Pbw { minus: minus - 1, k: 0, plus: 0 };
                    let left = self.iterated_word(&prefix, 1);
                    self.tensor_mul(&left, &u.coproduct_generator(uq::Gen::Minus))
                } else {
                    TensorElement::basis(smallvec![*w, *w])
                }
            }
            _ => panic!("word {:?} does not belong to {}", w, self.name),
        }
    }

    /// Slotwise product of two tensors with the same number of legs.
    pub fn tensor_mul(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (ka, ca) in a.iter() {
            for (kb, cb) in b.iter() {
                let mut partial: Vec<(Tensor, Scalar)> = vec![(SmallVec::new(), ca * cb)];
                for (wa, wb) in ka.iter().zip(kb.iter()) {
                    let p = self.mul_words(wa, wb);
                    let mut next = Vec::with_capacity(partial.len() * p.len());
                    for (prefix, c) in &partial {
                        for (w, d) in p.iter() {
                            let mut k = prefix.clone();
                            k.push(*w);
                            next.push((k, c * d));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    out.add_term(k, c);
                }
            }
        }
        out
    }

    /// Exact Δ^(n)(x) (n + 1 legs), never truncated.
    pub fn iterated(&self, x: &AlgebraElement, n: usize) -> TensorElement {
        let mut out = TensorElement::zero();
        for (w, c) in x.iter() {
            out.add_scaled(&self.iterated_word(w, n), c);
        }
        out
    }

    pub fn coproduct(&self, x: &AlgebraElement) -> Result<TensorElement> {
        self.iterated_coproduct(x, 1)
    }

    /// Checked Δ^(n): every word involved must lie within the degree cap.
    pub fn iterated_coproduct(&self, x: &AlgebraElement, n: usize) -> Result<TensorElement> {
        self.check_element(x)?;
        let out = self.iterated(x, n);
        self.check_tensor(&out)?;
        Ok(out)
    }

    pub fn counit(&self, x: &AlgebraElement) -> Scalar {
        x.iter().map(|(w, c)| c * &w.counit()).sum()
    }

    fn require_hopf(&self) -> Result<()> {
        if self.is_hopf() {
            Ok(())
        } else {
            Err(HopfError::NotHopf(self.name.clone()))
        }
    }

    /// S (`inverse = false`) or S⁻¹ (`inverse = true`) of a basis word.
    pub fn antipode_word(&self, w: &Word, inverse: bool) -> Result<Arc<AlgebraElement>> {
        self.require_hopf()?;
        Ok(self.antipode_cache.get_or((*w, inverse), || self.compute_antipode(w, inverse)))
    }

    fn compute_antipode(&self, w: &Word, inverse: bool) -> AlgebraElement {
        match (&self.kind, w) {
            (Kind::Field, _) => AlgebraElement::basis(*w),
            (Kind::Group(t), Word::Elem(i)) => {
                let inv = t.inv.as_ref().expect("groups have inverses");
                AlgebraElement::basis(Word::Elem(inv[*i as usize]))
            }
            (Kind::Sweedler, Word::Sweedler { g, x }) => match (g, x, inverse) {
                (_, false, _) => AlgebraElement::basis(*w),
                // S(x) = -gx, S(gx) = x; S⁻¹(x) = gx, S⁻¹(gx) = -x
                (false, true, false) => AlgebraElement::term(SWEEDLER_BASIS[3], Scalar::from_int(-1)),
                (true, true, false) => AlgebraElement::basis(SWEEDLER_BASIS[2]),
                (false, true, true) => AlgebraElement::basis(SWEEDLER_BASIS[3]),
                (true, true, true) => AlgebraElement::term(SWEEDLER_BASIS[2], Scalar::from_int(-1)),
            },
            (Kind::Uq(u), Word::Pbw { minus, k, plus }) => {
                // S and S⁻¹ are anti-multiplicative: reverse the generator order.
                let (sp, sm) = u.antipode_generators(inverse);
                let mut acc = self.one();
                for _ in 0..*plus {
                    acc = self.mul(&acc, &sp);
                }
                acc = self.mul(&acc, &AlgebraElement::basis(Word::Pbw { minus: 0, k: -k, plus: 0 }));
                for _ in 0..*minus {
                    acc = self.mul(&acc, &sm);
                }
                acc
            }
            _ => panic!("word {:?} does not belong to {}", w, self.name),
        }
    }

    /// S^power for any integer power; negative powers use S⁻¹.
    pub fn antipode(&self, x: &AlgebraElement, power: i64) -> Result<AlgebraElement> {
        if power != 0 {
            self.require_hopf()?;
        }
        let inverse = power < 0;
        let mut cur = x.clone();
        for _ in 0..power.unsigned_abs() {
            let mut next = AlgebraElement::zero();
            for (w, c) in cur.iter() {
                next.add_scaled(&*self.antipode_word(w, inverse)?, c);
            }
            cur = next;
        }
        Ok(cur)
    }

    /// h ↦ h₍₂₎ ⊗ h₍₃₎S(h₍₁₎).
    pub fn coadjoint_coaction(&self, x: &AlgebraElement) -> Result<TensorElement> {
        self.require_hopf()?;
        let mut out = TensorElement::zero();
        for (w, c) in x.iter() {
            for (legs, d) in self.iterated_word(w, 2).iter() {
                let s = self.antipode_word(&legs[0], false)?;
                let right = self.mul(&AlgebraElement::basis(legs[2]), &s);
                for (r, e) in right.iter() {
                    out.add_term(smallvec![legs[1], *r], &(c * d) * e);
                }
            }
        }
        Ok(out)
    }
}

/// Renders `c1 name1 + c2 name2` deterministically.
pub(crate) fn format_comb<'a>(terms: impl Iterator<Item = (String, &'a Scalar)>) -> String {
    let mut s = String::new();
    for (name, c) in terms {
        let coeff = c.to_string();
        let neg = c.is_negative_rational();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let abs = if neg { coeff[1..].to_string() } else { coeff };
        if abs != "1" {
            let _ = write!(s, "{}·", if c.is_rational() { abs } else { format!("({abs})") });
        }
        s.push_str(&name);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
