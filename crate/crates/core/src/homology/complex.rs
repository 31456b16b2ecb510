use exactlin::{charpoly, quotient_by, rank, EchelonBuilder, QuotientProjection, SparseMatrix};
use serde::Serialize;

use super::space::{assemble, ChainSpace};
use super::subspace::{DegreeOperators, GradedSubspace};
use crate::cocyclic::{CmVariant, ModuleCoalgebra, Ops};
use crate::coefficients::CoefficientModule;
use crate::error::{HopfError, Result};
use crate::hopf::HopfPreset;
use crate::ledger::LedgerEntry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    PImage,
    CoinvariantQuotient,
    Both,
}

impl Route {
    pub fn parse(s: &str) -> Option<Route> {
        match s {
            "p_image" => Some(Route::PImage),
            "coinvariant_quotient" => Some(Route::CoinvariantQuotient),
            "both" => Some(Route::Both),
            _ => None,
        }
    }
}

/// A cocyclic module in coordinates: dimensions, faces d_j: C^n → C^{n+1}
/// for n < top, and cyclic operators t_n for every n.
#[derive(Clone, Debug)]
pub struct CocyclicData {
    pub dims: Vec<usize>,
    pub faces: Vec<Vec<SparseMatrix>>,
    pub cyclic: Vec<SparseMatrix>,
    pub route: Route,
    pub ledger: Vec<LedgerEntry>,
}

impl CocyclicData {
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    /// The zero module in degrees 0..=top.
    pub fn zero(top: usize) -> Self {
        CocyclicData {
            dims: vec![0; top + 1],
            faces: (0..top).map(|n| vec![SparseMatrix::zero(0, 0); n + 2]).collect(),
            cyclic: vec![SparseMatrix::zero(0, 0); top + 1],
            route: Route::CoinvariantQuotient,
            ledger: Vec::new(),
        }
    }

    /// Checks the cocyclic relations on the matrices:
    /// d_i d_j = d_{j+1} d_i (i ≤ j), t d_j = d_{j+1} t (j ≤ n),
    /// t d_{n+1} = d₀ and t_n^{n+1} = id.
    pub fn verify(&self) -> Result<Vec<LedgerEntry>> {
        let top = self.top();
        let mut cosimplicial = None;
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n + 1 {
                for i in 0..=j {
                    let lhs = self.faces[n + 1][i].mul(&self.faces[n][j])?;
                    let rhs = self.faces[n + 1][j + 1].mul(&self.faces[n][i])?;
                    if cosimplicial.is_none() && lhs != rhs {
                        cosimplicial = Some(format!("n={n}: d_{i} d_{j} ≠ d_{} d_{i}", j + 1));
                    }
                }
            }
        }
        let mut compat = None;
        for n in 0..top {
            for j in 0..=n + 1 {
                let lhs = self.cyclic[n + 1].mul(&self.faces[n][j])?;
                let rhs = if j <= n {
                    self.faces[n][j + 1].mul(&self.cyclic[n])?
                } else {
                    self.faces[n][0].clone()
                };
                if compat.is_none() && lhs != rhs {
                    compat = Some(format!("n={n}, j={j}: t d_j ≠ d_(j+1) t"));
                }
            }
        }
        let mut order = None;
        for n in 0..=top {
            let p = self.cyclic[n].pow(n + 1)?;
            if order.is_none() && p != SparseMatrix::identity(self.dims[n]) {
                order = Some(format!("n={n}: t^(n+1) ≠ id"));
            }
        }
        let below: Vec<usize> = (0..top).collect();
        Ok(vec![
            LedgerEntry::new("CM cosimplicial identities", below.clone(), true, cosimplicial),
            LedgerEntry::new("CM t d_j = d_(j+1) t, t d_(n+1) = d_0", below, true, compat),
            LedgerEntry::new("t^{n+1}=id on ℂ𝕄", (0..=top).collect(), true, order),
        ])
    }

    pub fn is_cocyclic(&self) -> Result<bool> {
        for n in 0..=self.top() {
            if self.cyclic[n].pow(n + 1)? != SparseMatrix::identity(self.dims[n]) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn require_stable(h: &HopfPreset, y: &CoefficientModule) -> Result<()> {
    if !y.is_m_stable(h, 0)? {
        return Err(HopfError::NotStable(0));
    }
    Ok(())
}

/// Quotients T_n/K_n for the given per-degree subspaces K_n, with faces and
/// cyclic operators induced from the big complex. Well-definedness (the
/// operators preserve K) is recorded in the returned ledger.
fn induced_quotient(
    ops: &Ops,
    operators: &[DegreeOperators],
    kernels: Vec<exactlin::SubspaceBasis>,
    route: Route,
) -> Result<(CocyclicData, Vec<QuotientProjection>)> {
    let h = ops.h;
    let top = operators.len() - 1;
    let quotients: Vec<QuotientProjection> = kernels.into_iter().map(quotient_by).collect();
    let inclusions: Vec<SparseMatrix> = quotients.iter().map(|q| q.inclusion()).collect();
    let mut faces = Vec::with_capacity(top);
    let mut well_defined = None;
    for n in 0..top {
        let mut row = Vec::with_capacity(n + 2);
        for j in 0..=n + 1 {
            let big = assemble(h, &operators[n].space, &operators[n + 1].space, |v| ops.face(j, v))?;
            for v in quotients[n].subspace.vectors() {
                if well_defined.is_none() && !quotients[n + 1].projection.mul_vec(&big.mul_vec(v)?)?.is_zero() {
                    well_defined = Some(format!(
                        "n={n}: ∂_{j} of {} leaves the kernel",
                        ops.chain_name(&operators[n].space.to_chain(v))
                    ));
                }
            }
            row.push(quotients[n + 1].projection.mul(&big)?.mul(&inclusions[n])?);
        }
        faces.push(row);
    }
    let mut cyclic = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let d = &operators[n];
        for m in d.tau.iter().chain(std::iter::once(&d.tau_inv)) {
            for v in quotients[n].subspace.vectors() {
                if well_defined.is_none() && !quotients[n].projection.mul_vec(&m.mul_vec(v)?)?.is_zero() {
                    well_defined = Some(format!(
                        "n={n}: τ^(±1) of {} leaves the kernel",
                        ops.chain_name(&d.space.to_chain(v))
                    ));
                }
            }
        }
        let t = match &d.tau {
            Some(t) => quotients[n].projection.mul(t)?.mul(&inclusions[n])?,
            // t = (t⁻¹)^n, valid once (t⁻¹)^(n+1) = id is verified.
            None => quotients[n].projection.mul(&d.tau_inv)?.mul(&inclusions[n])?.pow(n)?,
        };
        cyclic.push(t);
    }
    let data = CocyclicData {
        dims: quotients.iter().map(|q| q.dim()).collect(),
        faces,
        cyclic,
        route,
        ledger: vec![LedgerEntry::new(
            "quotient operators well defined",
            (0..=top).collect(),
            true,
            well_defined,
        )],
    };
    Ok((data, quotients))
}

/// The coinvariant route: ₍B₎(T/I) in degrees 0..=top.
pub fn coinvariant_route(h: &HopfPreset, y: &CoefficientModule, top: usize, j_bound: usize) -> Result<(CocyclicData, Vec<QuotientProjection>)> {
    require_stable(h, y)?;
    let x = ModuleCoalgebra::Regular;
    let ops = Ops::new(h, &x, y)?;
    let graded = GradedSubspace::build(&ops, top, j_bound)?;
    let mut kernels = Vec::with_capacity(top + 1);
    for (d, i) in graded.operators.iter().zip(&graded.degrees) {
        kernels.push(i.basis.sum(&d.coinvariant_relations()?));
    }
    let (mut data, quotients) = induced_quotient(&ops, &graded.operators, kernels, Route::CoinvariantQuotient)?;
    let mut ledger = graded.ledger.clone();
    ledger.append(&mut data.ledger);
    ledger.extend(data.verify()?);
    data.ledger = ledger;
    Ok((data, quotients))
}

/// Plain coinvariants ₍B₎T_n(X, Y) with no commutator quotient, for a
/// module coalgebra X (used to compare against a quotient coalgebra).
pub fn coinvariant_dims(h: &HopfPreset, x: &ModuleCoalgebra, y: &CoefficientModule, top: usize) -> Result<Vec<usize>> {
    let ops = Ops::new(h, x, y)?;
    let mut dims = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let space = ChainSpace::new(&x.basis(h), n + 1, y.dim());
        let mut builder = EchelonBuilder::new(space.dim());
        for b in h.basis() {
            let rel = assemble(h, &space, &space, |v| ops.coinvariant_relation(b, v))?;
            for c in rel.columns() {
                builder.insert(c);
            }
        }
        dims.push(space.dim() - builder.rank());
    }
    Ok(dims)
}

/// The p-image route on H^⊗n ⊗ Y with d_j = p ∂_j i and t = p τ i.
pub fn p_image_route(h: &HopfPreset, y: &CoefficientModule, top: usize) -> Result<CocyclicData> {
    if !h.is_hopf() {
        return Err(HopfError::NotHopf(h.name().into()));
    }
    require_stable(h, y)?;
    if !y.is_m_stable(h, 1)? {
        return Err(HopfError::NotStable(1));
    }
    if let Some(w) = y.ayd_witness(h)? {
        return Err(HopfError::NotAyd(w));
    }
    let x = ModuleCoalgebra::Regular;
    let ops = Ops::new(h, &x, y)?;
    let spaces: Vec<ChainSpace> = (0..=top + 1).map(|n| ChainSpace::new(h.basis(), n, y.dim())).collect();
    let mut faces = Vec::with_capacity(top);
    for n in 0..top {
        let mut row = Vec::with_capacity(n + 2);
        for j in 0..=n + 1 {
            row.push(assemble(h, &spaces[n], &spaces[n + 1], |w| ops.cm_face(CmVariant::Induced, j, w))?);
        }
        faces.push(row);
    }
    let mut cyclic = Vec::with_capacity(top + 1);
    for space in spaces.iter().take(top + 1) {
        cyclic.push(assemble(h, space, space, |w| ops.cm_cyclic(w))?);
    }
    let mut data = CocyclicData {
        dims: spaces[..=top].iter().map(|s| s.dim()).collect(),
        faces,
        cyclic,
        route: Route::PImage,
        ledger: Vec::new(),
    };
    data.ledger = data.verify()?;
    Ok(data)
}

/// Builds the reduced cocyclic module in degrees 0..=top. Route `both`
/// builds both and checks that p induces an isomorphism between them.
pub fn build_cm_complex(h: &HopfPreset, y: &CoefficientModule, top: usize, route: Route) -> Result<CocyclicData> {
    match route {
        Route::PImage => p_image_route(h, y, top),
        Route::CoinvariantQuotient => Ok(coinvariant_route(h, y, top, 2)?.0),
        Route::Both => {
            let p_data = p_image_route(h, y, top)?;
            let (q_data, quotients) = coinvariant_route(h, y, top, 2)?;
            let mut ledger = q_data.ledger.clone();
            ledger.extend(p_data.ledger.iter().cloned());
            ledger.extend(compare_routes(h, y, &p_data, &q_data, &quotients)?);
            Ok(CocyclicData {
                route: Route::Both,
                ledger,
                ..p_data
            })
        }
    }
}

/// Dimension, conjugacy and characteristic-polynomial comparison of the
/// two routes through the map induced by p on representatives.
pub fn compare_routes(
    h: &HopfPreset,
    y: &CoefficientModule,
    p_data: &CocyclicData,
    q_data: &CocyclicData,
    quotients: &[QuotientProjection],
) -> Result<Vec<LedgerEntry>> {
    let x = ModuleCoalgebra::Regular;
    let ops = Ops::new(h, &x, y)?;
    let top = p_data.top().min(q_data.top());
    let degrees: Vec<usize> = (0..=top).collect();
    let dims = (0..=top)
        .find(|&n| p_data.dims[n] != q_data.dims[n])
        .map(|n| format!("n={n}: p_image {} vs coinvariant {}", p_data.dims[n], q_data.dims[n]));
    let mut isos = Vec::with_capacity(top + 1);
    let mut iso_witness = None;
    for n in 0..=top {
        let big = ChainSpace::new(h.basis(), n + 1, y.dim());
        let small = ChainSpace::new(h.basis(), n, y.dim());
        let p = assemble(h, &big, &small, |v| ops.cm_project(v))?;
        let m = p.mul(&quotients[n].inclusion())?;
        if iso_witness.is_none() && (m.nrows() != m.ncols() || rank(&m) != m.nrows()) {
            iso_witness = Some(format!("n={n}: induced p has rank {} on {}×{}", rank(&m), m.nrows(), m.ncols()));
        }
        isos.push(m);
    }
    let mut intertwine = None;
    let mut charpolys = None;
    if iso_witness.is_none() {
        for n in 0..=top {
            if intertwine.is_none() && isos[n].mul(&q_data.cyclic[n])? != p_data.cyclic[n].mul(&isos[n])? {
                intertwine = Some(format!("n={n}: p t^Q ≠ t p"));
            }
            if n < top {
                for j in 0..=n + 1 {
                    if intertwine.is_none() && isos[n + 1].mul(&q_data.faces[n][j])? != p_data.faces[n][j].mul(&isos[n])? {
                        intertwine = Some(format!("n={n}: p ∂^Q_{j} ≠ d_{j} p"));
                    }
                }
            }
            if charpolys.is_none() && charpoly(&p_data.cyclic[n])? != charpoly(&q_data.cyclic[n])? {
                charpolys = Some(format!("n={n}: characteristic polynomials of t differ"));
            }
        }
    } else {
        intertwine = iso_witness.clone();
        charpolys = iso_witness.clone();
    }
    Ok(vec![
        LedgerEntry::new("routes agree in dimension", degrees.clone(), true, dims),
        LedgerEntry::new("p induces an isomorphism of the routes", degrees.clone(), true, iso_witness),
        LedgerEntry::new("p intertwines faces and t", degrees.clone(), true, intertwine),
        LedgerEntry::new("routes have equal t characteristic polynomials", degrees, true, charpolys),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::Character;

    #[test]
    fn kc2_trivial_dims_double() {
        let h = HopfPreset::kc2();
        let y = CoefficientModule::trivial(&h);
        let d = build_cm_complex(&h, &y, 3, Route::Both).unwrap();
        assert_eq!(d.dims, vec![1, 2, 4, 8]);
        for e in &d.ledger {
            assert!(e.pass, "{e:?}");
        }
    }

    #[test]
    fn point_is_one_dimensional() {
        let h = HopfPreset::field();
        let y = CoefficientModule::trivial(&h);
        let d = build_cm_complex(&h, &y, 3, Route::CoinvariantQuotient).unwrap();
        assert_eq!(d.dims, vec![1, 1, 1, 1]);
    }

    #[test]
    fn sweedler_routes() {
        let h = HopfPreset::sweedler4();
        let y = CoefficientModule::coalgebra_self(&h).unwrap();
        assert!(matches!(build_cm_complex(&h, &y, 1, Route::PImage), Err(HopfError::NotAyd(_))));
        let d = build_cm_complex(&h, &y, 2, Route::CoinvariantQuotient).unwrap();
        for e in &d.ledger {
            assert!(e.pass, "{e:?}");
        }
        let mp = CoefficientModule::modular_pair(&h, Character::Counit, "g").unwrap();
        let d = build_cm_complex(&h, &mp, 2, Route::Both).unwrap();
        for e in &d.ledger {
            assert!(e.pass, "{e:?}");
        }
    }

    #[test]
    fn bialgebra_route_is_cocyclic() {
        let h = HopfPreset::km2();
        let y = CoefficientModule::trivial(&h);
        let d = build_cm_complex(&h, &y, 2, Route::CoinvariantQuotient).unwrap();
        assert!(d.is_cocyclic().unwrap());
        assert!(matches!(build_cm_complex(&h, &y, 1, Route::PImage), Err(HopfError::NotHopf(_))));
    }
}
