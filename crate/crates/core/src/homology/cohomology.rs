use std::time::Instant;

use exactlin::{rank, Scalar, SparseMatrix};
use serde::Serialize;

use super::complex::CocyclicData;
use crate::error::{HopfError, Result};
use crate::exec;
use crate::ledger::LedgerEntry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theory {
    Hochschild,
    Cyclic,
}

/// Cohomology ranks of a cocyclic module in degrees 0..=max_degree.
#[derive(Clone, Debug, Serialize)]
pub struct HomologyReport {
    pub theory: Theory,
    pub max_degree: usize,
    pub ranks: Vec<usize>,
    #[serde(skip)]
    pub runtime_ms: u128,
    pub ledger: Vec<LedgerEntry>,
}

fn alternating(faces: &[SparseMatrix], count: usize) -> Result<SparseMatrix> {
    let mut acc = SparseMatrix::zero(faces[0].nrows(), faces[0].ncols());
    for (j, f) in faces.iter().take(count).enumerate() {
        let sign = if j % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        acc = acc.add_scaled(f, &sign)?;
    }
    Ok(acc)
}

/// b = Σ_{j=0}^{n+1} (−1)^j d_j.
pub fn coboundary(c: &CocyclicData, n: usize) -> Result<SparseMatrix> {
    alternating(&c.faces[n], n + 2)
}

/// b′ = Σ_{j=0}^{n} (−1)^j d_j.
pub fn coboundary_prime(c: &CocyclicData, n: usize) -> Result<SparseMatrix> {
    alternating(&c.faces[n], n + 1)
}

fn require_faces(c: &CocyclicData, n: usize) -> Result<()> {
    if c.faces.len() <= n {
        return Err(HopfError::InvalidParameter(format!(
            "need faces out of degree {n}, complex stops at {}",
            c.top()
        )));
    }
    Ok(())
}

pub fn hochschild_cohomology(c: &CocyclicData, max_degree: usize) -> Result<HomologyReport> {
    let start = Instant::now();
    require_faces(c, max_degree)?;
    let b: Vec<SparseMatrix> = (0..=max_degree).map(|n| coboundary(c, n)).collect::<Result<_>>()?;
    for n in 1..=max_degree {
        if !b[n].mul(&b[n - 1])?.is_zero() {
            return Err(HopfError::NotAComplex(format!("b∘b ≠ 0 out of degree {}", n - 1)));
        }
    }
    let ranks_b = exec::map(&b, rank);
    let ranks = (0..=max_degree)
        .map(|n| c.dims[n] - ranks_b[n] - if n > 0 { ranks_b[n - 1] } else { 0 })
        .collect();
    Ok(HomologyReport {
        theory: Theory::Hochschild,
        max_degree,
        ranks,
        runtime_ms: start.elapsed().as_millis(),
        ledger: vec![LedgerEntry::passed("b∘b = 0", (0..max_degree).collect(), true)],
    })
}

/// λ_n = (−1)ⁿ t_n⁻¹. With b′ omitting the last face this is the sign
/// convention for which (1 − λ)b = b′(1 − λ) holds.
fn lambda(c: &CocyclicData, n: usize) -> Result<SparseMatrix> {
    let t_inv = c.cyclic[n].pow(n)?;
    Ok(if n.is_multiple_of(2) { t_inv } else { t_inv.neg() })
}

trait Neg {
    fn neg(&self) -> Self;
}

impl Neg for SparseMatrix {
    fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }
}

/// Total cohomology of the cyclic bicomplex truncated to total degree
/// max_degree + 1: column p holds C^n in bidegree (p, n); even columns carry
/// b, odd columns −b′; horizontal maps are 1 − λ (even → odd) and the norm
/// Σ λ^i (odd → even).
pub fn cyclic_cohomology_bicomplex(c: &CocyclicData, max_degree: usize) -> Result<HomologyReport> {
    let start = Instant::now();
    require_faces(c, max_degree)?;
    for n in 0..=max_degree {
        if c.cyclic[n].pow(n + 1)? != SparseMatrix::identity(c.dims[n]) {
            return Err(HopfError::NotCocyclic(format!("t^(n+1) ≠ id in degree {n}")));
        }
    }
    let b: Vec<SparseMatrix> = (0..=max_degree).map(|n| coboundary(c, n)).collect::<Result<_>>()?;
    let bp: Vec<SparseMatrix> = (0..=max_degree).map(|n| coboundary_prime(c, n)).collect::<Result<_>>()?;
    let lam: Vec<SparseMatrix> = (0..=max_degree + 1).map(|n| lambda(c, n)).collect::<Result<_>>()?;
    let one_minus: Vec<SparseMatrix> = lam
        .iter()
        .enumerate()
        .map(|(n, l)| SparseMatrix::identity(c.dims[n]).sub(l))
        .collect::<std::result::Result<_, _>>()?;
    let mut norm = Vec::with_capacity(max_degree + 2);
    for (n, l) in lam.iter().enumerate() {
        let mut acc = SparseMatrix::zero(c.dims[n], c.dims[n]);
        let mut power = SparseMatrix::identity(c.dims[n]);
        for _ in 0..=n {
            acc = acc.add(&power)?;
            power = power.mul(l)?;
        }
        norm.push(acc);
    }

    let mut witness = None;
    for n in 0..=max_degree {
        let checks = [
            ("(1−λ)b = b′(1−λ)", one_minus[n + 1].mul(&b[n])?, bp[n].mul(&one_minus[n])?),
            ("N b′ = b N", norm[n + 1].mul(&bp[n])?, b[n].mul(&norm[n])?),
        ];
        for (name, lhs, rhs) in checks {
            if witness.is_none() && lhs != rhs {
                witness = Some(format!("n={n}: {name} fails"));
            }
        }
        if n > 0 && witness.is_none() && !bp[n].mul(&bp[n - 1])?.is_zero() {
            witness = Some(format!("n={n}: b′∘b′ ≠ 0"));
        }
        if n > 0 && witness.is_none() && !b[n].mul(&b[n - 1])?.is_zero() {
            witness = Some(format!("n={n}: b∘b ≠ 0"));
        }
    }
    if let Some(w) = witness {
        return Err(HopfError::NotAComplex(w));
    }

    // D_m : Tot^m → Tot^{m+1}, Tot^m = ⊕_{p=0}^{m} C^{m−p}.
    let offsets = |m: usize| -> Vec<usize> {
        let mut off = Vec::with_capacity(m + 2);
        let mut acc = 0;
        for p in 0..=m {
            off.push(acc);
            acc += c.dims[m - p];
        }
        off.push(acc);
        off
    };
    let total = |m: usize| -> Result<SparseMatrix> {
        let src = offsets(m);
        let dst = offsets(m + 1);
        let mut triplets = Vec::new();
        for p in 0..=m {
            let n = m - p;
            let vertical = if p % 2 == 0 { b[n].clone() } else { bp[n].neg() };
            for (r, col, x) in vertical.entries() {
                triplets.push((dst[p] + r, src[p] + col, x.clone()));
            }
            let horizontal = if p % 2 == 0 { &one_minus[n] } else { &norm[n] };
            for (r, col, x) in horizontal.entries() {
                triplets.push((dst[p + 1] + r, src[p] + col, x.clone()));
            }
        }
        Ok(SparseMatrix::from_triplets(dst[m + 2], src[m + 1], triplets))
    };
    let d: Vec<SparseMatrix> = (0..=max_degree).map(total).collect::<Result<_>>()?;
    for m in 1..=max_degree {
        if !d[m].mul(&d[m - 1])?.is_zero() {
            return Err(HopfError::NotAComplex(format!("total differential squares to nonzero at {m}")));
        }
    }
    let ranks_d = exec::map(&d, rank);
    let ranks = (0..=max_degree)
        .map(|m| d[m].ncols() - ranks_d[m] - if m > 0 { ranks_d[m - 1] } else { 0 })
        .collect();
    let below: Vec<usize> = (0..=max_degree).collect();
    Ok(HomologyReport {
        theory: Theory::Cyclic,
        max_degree,
        ranks,
        runtime_ms: start.elapsed().as_millis(),
        ledger: vec![
            LedgerEntry::passed("cyclic operators of order n+1 in the bicomplex", below.clone(), true),
            LedgerEntry::passed("bicomplex squares commute", below.clone(), true),
            LedgerEntry::passed("total differential squares to zero", below, true),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::CoefficientModule;
    use crate::homology::{build_cm_complex, Route};
    use crate::hopf::HopfPreset;

    #[test]
    fn point_complex() {
        let h = HopfPreset::field();
        let y = CoefficientModule::trivial(&h);
        let c = build_cm_complex(&h, &y, 4, Route::CoinvariantQuotient).unwrap();
        assert_eq!(hochschild_cohomology(&c, 3).unwrap().ranks, vec![1, 0, 0, 0]);
        assert_eq!(cyclic_cohomology_bicomplex(&c, 3).unwrap().ranks, vec![1, 0, 1, 0]);
    }

    #[test]
    fn zero_complex() {
        let c = CocyclicData::zero(4);
        assert_eq!(hochschild_cohomology(&c, 3).unwrap().ranks, vec![0; 4]);
        assert_eq!(cyclic_cohomology_bicomplex(&c, 3).unwrap().ranks, vec![0; 4]);
    }

    #[test]
    fn missing_faces_are_rejected() {
        let c = CocyclicData::zero(2);
        assert!(hochschild_cohomology(&c, 2).is_err());
    }
}
