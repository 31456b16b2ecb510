use exactlin::{
    kernel_basis, membership, quotient_projection, rank, Scalar, SparseMatrix, SparseVector,
    SubspaceBasis,
};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = SparseMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..4, c), r).prop_map(|rows| {
            SparseMatrix::from_dense(
                &rows
                    .into_iter()
                    .map(|row| row.into_iter().map(Scalar::from_int).collect())
                    .collect::<Vec<_>>(),
            )
        })
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in small_matrix()) {
        prop_assert_eq!(rank(&m) + kernel_basis(&m).dim(), m.ncols());
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in small_matrix()) {
        for v in kernel_basis(&m).vectors() {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn rank_is_transpose_invariant(m in small_matrix()) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn projection_kills_subspace_and_fixes_representatives(m in small_matrix()) {
        let qp = quotient_projection(m.nrows(), m.columns());
        for g in m.columns() {
            prop_assert!(qp.projection.mul_vec(g).unwrap().is_zero());
        }
        let back = qp.projection.mul(&qp.inclusion()).unwrap();
        prop_assert_eq!(back, SparseMatrix::identity(qp.dim()));
        prop_assert_eq!(qp.dim() + rank(&m), m.nrows());
    }

    #[test]
    fn membership_reconstructs(m in small_matrix(), coeffs in prop::collection::vec(-2i64..3, 6)) {
        let basis = SubspaceBasis::span(m.nrows(), m.columns());
        let mut v = SparseVector::zero(m.nrows());
        for (c, col) in coeffs.iter().zip(m.columns()) {
            v = v.add_scaled(col, &Scalar::from_int(*c));
        }
        let found = membership(&v, &basis).unwrap().expect("combination of columns is a member");
        let mut w = SparseVector::zero(m.nrows());
        for (c, b) in found.iter().zip(basis.vectors()) {
            w = w.add_scaled(b, c);
        }
        prop_assert_eq!(w, v);
    }

    #[test]
    fn field_axioms_on_rational_functions(a in -4i64..5, b in 1i64..5, c in -3i64..4) {
        let q = Scalar::q();
        let x = &(&q * &Scalar::from_int(a)) + &Scalar::from_int(b);
        let y = &q.pow(2) + &Scalar::from_int(c * c + 1);
        prop_assert_eq!(&(&x * &y) / &y, x.clone());
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&x * &y, &y * &x);
    }
}
