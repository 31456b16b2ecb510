use exactlin::{quotient_by, EchelonBuilder, QuotientProjection, Scalar, SparseMatrix, SparseVector, SubspaceBasis};

use super::space::{assemble, ChainSpace};
use crate::cocyclic::Ops;
use crate::error::Result;
use crate::hopf::{AlgebraElement, HopfPreset, Word};
use crate::ledger::LedgerEntry;

/// Matrices of τ, τ⁻¹ and every L_b on one degree of the big complex.
pub struct DegreeOperators {
    pub space: ChainSpace,
    pub tau: Option<SparseMatrix>,
    pub tau_inv: SparseMatrix,
    /// (basis word, ε(word), matrix of L_word)
    pub actions: Vec<(Word, Scalar, SparseMatrix)>,
}

impl DegreeOperators {
    pub fn build(ops: &Ops, n: usize) -> Result<Self> {
        let h = ops.h;
        let space = ChainSpace::new(&ops.x.basis(h), n + 1, ops.y.dim());
        let tau = if h.is_hopf() {
            Some(assemble(h, &space, &space, |v| ops.tau(v))?)
        } else {
            None
        };
        let tau_inv = assemble(h, &space, &space, |v| ops.tau_inv(v))?;
        let mut actions = Vec::with_capacity(h.dim());
        for b in h.basis() {
            let el = AlgebraElement::basis(*b);
            actions.push((*b, b.counit(), assemble(h, &space, &space, |v| ops.act(&el, v))?));
        }
        Ok(DegreeOperators {
            space,
            tau,
            tau_inv,
            actions,
        })
    }

    /// The operators I is closed under.
    fn closure_ops(&self) -> Vec<&SparseMatrix> {
        let mut out: Vec<&SparseMatrix> = self.tau.iter().collect();
        out.push(&self.tau_inv);
        out.extend(self.actions.iter().map(|(_, _, m)| m));
        out
    }

    /// Span of (ε(b) − L_b)v over basis words b and basis vectors v.
    pub fn coinvariant_relations(&self) -> Result<SubspaceBasis> {
        let d = self.space.dim();
        let mut builder = EchelonBuilder::new(d);
        for (_, eps, m) in &self.actions {
            let rel = SparseMatrix::identity(d).scale(eps).sub(m)?;
            for c in rel.columns() {
                builder.insert(c);
            }
        }
        Ok(builder.finish())
    }
}

/// The commutator subspace of one degree together with its verification.
#[derive(Clone, Debug)]
pub struct CommutatorSubspace {
    pub degree: usize,
    pub basis: SubspaceBasis,
    pub tau_stable: bool,
    pub action_stable: bool,
    /// Recomputing with j_bound + 1 gave the same subspace.
    pub bound_independent: bool,
}

fn commutator_generators(d: &DegreeOperators, j_bound: usize) -> Result<Vec<SparseVector>> {
    let mut powers: Vec<SparseMatrix> = Vec::new();
    for j in 1..=j_bound {
        powers.push(d.tau_inv.pow(j)?);
        if let Some(t) = &d.tau {
            powers.push(t.pow(j)?);
        }
    }
    let mut gens = Vec::new();
    for (_, _, l) in &d.actions {
        for p in &powers {
            let c = l.mul(p)?.sub(&p.mul(l)?)?;
            gens.extend(c.columns().iter().filter(|v| !v.is_zero()).cloned());
        }
    }
    Ok(gens)
}

fn close(d: &DegreeOperators, gens: &[SparseVector]) -> Result<SubspaceBasis> {
    let mut builder = EchelonBuilder::new(d.space.dim());
    let mut queue: Vec<SparseVector> = gens.iter().filter_map(|g| builder.insert_residue(g)).collect();
    let closure_ops = d.closure_ops();
    while let Some(v) = queue.pop() {
        for m in &closure_ops {
            if let Some(r) = builder.insert_residue(&m.mul_vec(&v)?) {
                queue.push(r);
            }
        }
    }
    Ok(builder.finish())
}

fn stable_under(s: &SubspaceBasis, m: &SparseMatrix) -> Result<bool> {
    for v in s.vectors() {
        if !s.contains(&m.mul_vec(v)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// span{[L_b, τ^{±j}]v : 1 ≤ j ≤ j_bound} closed under τ^{±1} (τ⁻¹ only for
/// a bialgebra) and every L_b. A zero `j_bound` is rejected.
pub fn commutator_subspace(d: &DegreeOperators, degree: usize, j_bound: usize) -> Result<CommutatorSubspace> {
    if j_bound == 0 {
        return Err(crate::error::HopfError::InvalidParameter("j_bound must be at least 1".into()));
    }
    let basis = close(d, &commutator_generators(d, j_bound)?)?;
    let again = close(d, &commutator_generators(d, j_bound + 1)?)?;
    let mut tau_stable = stable_under(&basis, &d.tau_inv)?;
    if let Some(t) = &d.tau {
        tau_stable &= stable_under(&basis, t)?;
    }
    let mut action_stable = true;
    for (_, _, l) in &d.actions {
        action_stable &= stable_under(&basis, l)?;
    }
    Ok(CommutatorSubspace {
        degree,
        bound_independent: again == basis,
        basis,
        tau_stable,
        action_stable,
    })
}

/// Commutator subspaces in degrees 0..=max_degree with the per-degree
/// operators kept for reuse.
pub struct GradedSubspace {
    pub operators: Vec<DegreeOperators>,
    pub degrees: Vec<CommutatorSubspace>,
    /// ∂₀(I_n) ⊆ I_{n+1}, checked for n < max_degree.
    pub face0_stable: bool,
    pub ledger: Vec<LedgerEntry>,
}

impl GradedSubspace {
    pub fn build(ops: &Ops, max_degree: usize, j_bound: usize) -> Result<Self> {
        let mut operators = Vec::new();
        let mut degrees = Vec::new();
        for n in 0..=max_degree {
            let d = DegreeOperators::build(ops, n)?;
            degrees.push(commutator_subspace(&d, n, j_bound)?);
            operators.push(d);
        }
        let mut face0_witness = None;
        for n in 0..max_degree {
            let face0 = assemble(ops.h, &operators[n].space, &operators[n + 1].space, |v| ops.face(0, v))?;
            for v in degrees[n].basis.vectors() {
                if !degrees[n + 1].basis.contains(&face0.mul_vec(v)?) {
                    face0_witness = Some(format!(
                        "n={n}: ∂₀ of {} leaves I",
                        ops.chain_name(&operators[n].space.to_chain(v))
                    ));
                    break;
                }
            }
            if face0_witness.is_some() {
                break;
            }
        }
        let all: Vec<usize> = (0..=max_degree).collect();
        let flag = |name: &str, ok: bool, what: &str| {
            let w = (!ok).then(|| format!("{what} fails in some degree"));
            LedgerEntry::new(name, all.clone(), true, w)
        };
        let tau_ok = degrees.iter().all(|d| d.tau_stable);
        let act_ok = degrees.iter().all(|d| d.action_stable);
        let bound_ok = degrees.iter().all(|d| d.bound_independent);
        let ledger = vec![
            flag("I is τ-stable", tau_ok, "τ-stability"),
            flag("I is L_b-stable", act_ok, "L_b-stability"),
            flag("I independent of j_bound", bound_ok, "j_bound independence"),
            LedgerEntry::new("I is ∂₀-stable", (0..max_degree).collect(), true, face0_witness.clone()),
        ];
        Ok(GradedSubspace {
            operators,
            degrees,
            face0_stable: face0_witness.is_none(),
            ledger,
        })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.basis.dim()).collect()
    }
}

/// Coinvariants M/span{ε(b)m − b·m} of a module given by its action matrices.
pub fn coinvariants(space_dim: usize, actions: &[(Scalar, SparseMatrix)]) -> Result<QuotientProjection> {
    let mut builder = EchelonBuilder::new(space_dim);
    for (eps, m) in actions {
        let rel = SparseMatrix::identity(space_dim).scale(eps).sub(m)?;
        for c in rel.columns() {
            builder.insert(c);
        }
    }
    Ok(quotient_by(builder.finish()))
}

/// Kronecker product a ⊗ b, with the b index varying fastest.
pub fn kron(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    let mut triplets = Vec::with_capacity(a.nnz() * b.nnz());
    for (i, j, x) in a.entries() {
        for (k, l, y) in b.entries() {
            triplets.push((i * b.nrows() + k, j * b.ncols() + l, x * y));
        }
    }
    SparseMatrix::from_triplets(a.nrows() * b.nrows(), a.ncols() * b.ncols(), triplets)
}

/// Both sides of the equivariance identity dim ₍H₎(X⊗Y) = dim X^R ⊗_H Y,
/// where X^R is X made a right module by x·h := S⁻¹(h)·x. `x_action` and
/// `y_action` give the action matrix of an algebra element.
pub fn equivariant_dims<FX, FY>(h: &HopfPreset, x_dim: usize, x_action: FX, y_dim: usize, y_action: FY) -> Result<(usize, usize)>
where
    FX: Fn(&AlgebraElement) -> Result<SparseMatrix>,
    FY: Fn(&AlgebraElement) -> Result<SparseMatrix>,
{
    let dim = x_dim * y_dim;
    let mut diagonal = Vec::new();
    let mut balanced = EchelonBuilder::new(dim);
    for b in h.basis() {
        let mut m = SparseMatrix::zero(dim, dim);
        for (legs, c) in h.iterated_word(b, 1).iter() {
            let left = x_action(&AlgebraElement::basis(legs[0]))?;
            let right = y_action(&AlgebraElement::basis(legs[1]))?;
            m = m.add_scaled(&kron(&left, &right), c)?;
        }
        diagonal.push((b.counit(), m));
        let s_inv = (*h.antipode_word(b, true)?).clone();
        let rel = kron(&x_action(&s_inv)?, &SparseMatrix::identity(y_dim))
            .sub(&kron(&SparseMatrix::identity(x_dim), &y_action(&AlgebraElement::basis(*b))?))?;
        for c in rel.columns() {
            balanced.insert(c);
        }
    }
    let lhs = coinvariants(dim, &diagonal)?.dim();
    Ok((lhs, dim - balanced.rank()))
}

/// Left multiplication matrix of an element on the finite basis of `h`.
pub fn regular_action(h: &HopfPreset, a: &AlgebraElement) -> Result<SparseMatrix> {
    let basis = h.basis();
    let mut cols = Vec::with_capacity(basis.len());
    for w in basis {
        let prod = h.multiply(a, &AlgebraElement::basis(*w))?;
        let mut entries = Vec::new();
        for (u, c) in prod.iter() {
            let i = h.index_of(u).ok_or_else(|| crate::error::HopfError::DegreeOverflow {
                word: h.word_name(u),
                cap: h.cap().unwrap_or(0),
            })?;
            entries.push((i, c.clone()));
        }
        cols.push(SparseVector::from_entries(basis.len(), entries));
    }
    Ok(SparseMatrix::from_columns(basis.len(), cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocyclic::ModuleCoalgebra;
    use crate::coefficients::CoefficientModule;

    #[test]
    fn kc2_coinvariants_of_regular_module() {
        let h = HopfPreset::kc2();
        let acts: Vec<(Scalar, SparseMatrix)> = h
            .basis()
            .iter()
            .map(|b| (b.counit(), regular_action(&h, &AlgebraElement::basis(*b)).unwrap()))
            .collect();
        assert_eq!(coinvariants(2, &acts).unwrap().dim(), 1);
        let trivial: Vec<(Scalar, SparseMatrix)> = acts.iter().map(|(e, _)| (e.clone(), SparseMatrix::identity(2).scale(e))).collect();
        assert_eq!(coinvariants(2, &trivial).unwrap().dim(), 2);
    }

    #[test]
    fn kc2_equivariant_identity() {
        let h = HopfPreset::kc2();
        let act = |a: &AlgebraElement| regular_action(&h, a);
        assert_eq!(equivariant_dims(&h, 2, act, 2, act).unwrap(), (2, 2));
    }

    #[test]
    fn cocommutative_commutators_vanish() {
        let h = HopfPreset::kc2();
        let y = CoefficientModule::trivial(&h);
        let x = ModuleCoalgebra::Regular;
        let ops = Ops::new(&h, &x, &y).unwrap();
        let g = GradedSubspace::build(&ops, 2, 2).unwrap();
        assert_eq!(g.dims(), vec![0, 0, 0]);
        assert!(g.ledger.iter().all(|e| e.pass));
    }

    #[test]
    fn sweedler_commutators_are_stable() {
        let h = HopfPreset::sweedler4();
        let y = CoefficientModule::trivial(&h);
        let x = ModuleCoalgebra::Regular;
        let ops = Ops::new(&h, &x, &y).unwrap();
        let g = GradedSubspace::build(&ops, 1, 2).unwrap();
        assert!(g.dims()[1] > 0);
        for e in &g.ledger {
            assert!(e.pass, "{e:?}");
        }
    }
}
