//! Coxeter matrix invariants.
//!
//! For an algebra with invertible Cartan matrix U, the Coxeter matrix is
//! `c = -U^{-1} U^T`: the matrix of the Serre-twist action on the
//! Grothendieck group. Finite multiplicative order of `c` is a cheap
//! necessary condition for the algebra to be fractionally Calabi-Yau, which
//! makes it a useful screen in front of the much more expensive syzygy
//! orbit computations.
//!
//! Finite order is decided exactly: the squarefree part of the
//! characteristic polynomial must annihilate `c` (diagonalizability) and
//! factor completely into distinct cyclotomics; the order is then the lcm
//! of the cyclotomic indices, and the result is verified by powering.

use crate::algebra::BasedAlgebra;
use crate::field::FieldSpec;
use crate::matrix::{ExactMatrix, MatrixError};
use crate::poly::{char_poly, cyclotomic_periodicity, separable_minimal_polynomial, IntPolynomial};

#[derive(Debug, thiserror::Error)]
pub enum CoxeterError {
    #[error("Cartan matrix is singular; Coxeter matrix undefined")]
    SingularCartan,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// `-U^{-1} U^T` over the rationals (the Cartan matrix counts dimensions,
/// so the invariant ignores the algebra's own ground field).
pub fn coxeter_matrix(a: &BasedAlgebra) -> Result<ExactMatrix, CoxeterError> {
    let u = a.cartan_matrix();
    let u_inv = u.inverse().map_err(|e| match e {
        MatrixError::Singular => CoxeterError::SingularCartan,
        other => CoxeterError::Matrix(other),
    })?;
    let q = FieldSpec::Rationals;
    Ok(u_inv.mul(&u.transpose())?.scale(&q.from_i64(-1)))
}

#[derive(Debug, Clone)]
pub struct CoxeterReport {
    pub matrix: ExactMatrix,
    /// characteristic polynomial of the Coxeter matrix
    pub polynomial: IntPolynomial,
    /// finite multiplicative order, when one exists
    pub order: Option<u64>,
}

pub fn coxeter_polynomial(a: &BasedAlgebra) -> Result<IntPolynomial, CoxeterError> {
    Ok(char_poly(&coxeter_matrix(a)?)?)
}

pub fn coxeter_periodicity(a: &BasedAlgebra) -> Result<CoxeterReport, CoxeterError> {
    let c = coxeter_matrix(a)?;
    let polynomial = char_poly(&c)?;
    let order = match separable_minimal_polynomial(&c)? {
        Some(minpoly) => cyclotomic_periodicity(&minpoly, c.rows()),
        None => None,
    };
    if let Some(n) = order {
        let powered = c.pow(n)?;
        assert_eq!(
            powered,
            ExactMatrix::identity(FieldSpec::Rationals, c.rows()),
            "claimed Coxeter order must verify by powering"
        );
    }
    Ok(CoxeterReport {
        matrix: c,
        polynomial,
        order,
    })
}
