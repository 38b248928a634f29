//! Integer polynomials (coefficients stored lowest degree first), the
//! division-free characteristic polynomial, and the cyclotomic periodicity
//! test used to screen Coxeter matrices.

use crate::field::FieldSpec;
use crate::matrix::{ExactMatrix, MatrixError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x^d - 1`
    pub fn x_pow_minus_one(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[0] = -BigInt::one();
        c[d] = BigInt::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i] += a;
        }
        for (i, b) in other.coeffs.iter().enumerate() {
            c[i] += b;
        }
        Self::new(c)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Exact division: returns `self / divisor` when the division leaves no
    /// remainder and the quotient has integer coefficients; `None` otherwise.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        let lc = divisor.leading_coeff();
        let mut top = rem.len();
        while top > dd {
            let k = top - 1 - dd;
            let head = rem[top - 1].clone();
            if !head.is_zero() {
                let (q, r) = head.div_rem(&lc);
                if !r.is_zero() {
                    return None;
                }
                quot[k] = q.clone();
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * c;
                }
            }
            top -= 1;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Content removed, leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Primitive gcd via a primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let da = self.degree().unwrap_or(0);
        let db = divisor.degree().expect("pseudo_rem by zero");
        if da < db {
            return self.clone();
        }
        let lc = divisor.leading_coeff();
        let mut scale = BigInt::one();
        for _ in 0..(da - db + 1) {
            scale *= &lc;
        }
        let scaled = Self::new(self.coeffs.iter().map(|c| c * &scale).collect());
        // long division of scaled by divisor stays in Z by construction
        let mut rem = scaled.coeffs;
        let mut top = rem.len();
        while top > db {
            let k = top - 1 - db;
            let head = rem[top - 1].clone();
            if !head.is_zero() {
                let q = &head / &lc;
                debug_assert!((&head % &lc).is_zero());
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * c;
                }
            }
            top -= 1;
        }
        Self::new(rem)
    }

    /// `self / gcd(self, self')`: the product of the distinct irreducible
    /// factors, monic whenever `self` is.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.primitive_part();
        }
        self.div_exact(&g)
            .expect("gcd divides the polynomial")
            .primitive_part()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// Evaluate on a square matrix over Q via Horner's rule.
    pub fn eval_matrix(&self, m: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        if m.rows() != m.cols() {
            return Err(MatrixError::NotSquare(m.rows(), m.cols()));
        }
        let f = m.field();
        let n = m.rows();
        let mut acc = ExactMatrix::zeros(f, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m)?;
            let cs = f.from_bigint(c);
            for i in 0..n {
                let cur = acc.at(i, i).clone();
                *acc.at_mut(i, i) = f.add(&cur, &cs);
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending-degree rendering, e.g. `x^11+x^10-x^6-x^5+x+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let show_coeff = !abs.is_one() || deg == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{}", if show_coeff { "*" } else { "" }, deg)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Characteristic polynomial `det(xI - m)`, computed by the division-free
/// Berkowitz algorithm so every intermediate stays an integer.
///
/// Requires a square matrix over Q with integer entries.
pub fn char_poly(m: &ExactMatrix) -> Result<IntPolynomial, MatrixError> {
    if m.field() != FieldSpec::Rationals {
        return Err(MatrixError::FieldMismatch);
    }
    if m.rows() != m.cols() {
        return Err(MatrixError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let a = m.integer_entries()?;
    let at = |i: usize, j: usize| -> &BigInt { &a[i * n + j] };

    // descending-order coefficient vector, starts with det(xI - A) of the 1x1
    // leading minor
    let mut poly = vec![BigInt::one(), -at(0, 0).clone()];
    for k in 1..n {
        // principal k x k minor M, row R = A[k][0..k], column S = A[0..k][k]
        // first column of the (k+2) x (k+1) Toeplitz operator:
        //   [1, -A[k][k], -(R S), -(R M S), -(R M^2 S), ...]
        let mut t = Vec::with_capacity(k + 2);
        t.push(BigInt::one());
        t.push(-at(k, k).clone());
        let mut w: Vec<BigInt> = (0..k).map(|j| at(k, j).clone()).collect();
        for _ in 0..k {
            let dot: BigInt = (0..k).map(|j| &w[j] * at(j, k)).sum();
            t.push(-dot);
            let next: Vec<BigInt> = (0..k)
                .map(|j| (0..k).map(|l| &w[l] * at(l, j)).sum())
                .collect();
            w = next;
        }
        let mut next_poly = vec![BigInt::zero(); k + 2];
        for (i, ti) in t.iter().enumerate() {
            if ti.is_zero() {
                continue;
            }
            for (j, pj) in poly.iter().enumerate() {
                if i + j < k + 2 {
                    next_poly[i + j] += ti * pj;
                }
            }
        }
        poly = next_poly;
    }
    poly.reverse();
    Ok(IntPolynomial::new(poly))
}

/// Minimal polynomial of `m` when it is separable (no repeated roots):
/// the squarefree part of the characteristic polynomial, verified to
/// annihilate `m`. Returns `None` when verification fails, which is exactly
/// the non-diagonalizable case where no finite multiplicative order exists.
pub fn separable_minimal_polynomial(m: &ExactMatrix) -> Result<Option<IntPolynomial>, MatrixError> {
    let p = char_poly(m)?;
    let s = p.squarefree_part();
    let val = s.eval_matrix(m)?;
    Ok(if val.is_zero() { Some(s) } else { None })
}

pub fn euler_phi(mut d: u64) -> u64 {
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= d {
        if d % p == 0 {
            let mut pk = 1;
            while d % p == 0 {
                d /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if d > 1 {
        phi *= d - 1;
    }
    phi
}

/// The d-th cyclotomic polynomial, by exact division of `x^d - 1` by the
/// proper-divisor cyclotomics.
pub fn cyclotomic(d: u64) -> IntPolynomial {
    assert!(d >= 1);
    let mut quot = IntPolynomial::x_pow_minus_one(d as usize);
    for e in 1..d {
        if d % e == 0 {
            quot = quot
                .div_exact(&cyclotomic(e))
                .expect("cyclotomics divide x^d - 1");
        }
    }
    quot
}

/// Multiplicative order detectable from a minimal polynomial.
///
/// If `p` is a squarefree product of cyclotomic polynomials, returns the lcm
/// of the occurring orders `d` — the multiplicative order of any matrix with
/// minimal polynomial `p`. Only `d` with `phi(d) <= deg p` can occur, so only
/// those are tried. Any other shape (not squarefree, or a non-cyclotomic
/// factor remains) yields `None`. The `n` argument is the ambient matrix
/// size and bounds the degree as a sanity check.
pub fn cyclotomic_periodicity(p: &IntPolynomial, n: usize) -> Option<u64> {
    let deg = p.degree()?;
    if deg == 0 || deg > n || !p.is_monic() || !p.is_squarefree() {
        return None;
    }
    let mut rest = p.clone();
    let mut orders: Vec<u64> = Vec::new();
    // phi(d) >= sqrt(d/2), so phi(d) <= deg forces d <= 2 deg^2
    let dmax = 2 * (deg as u64) * (deg as u64) + 1;
    for d in 1..=dmax {
        if euler_phi(d) as usize > deg {
            continue;
        }
        let phi_d = cyclotomic(d);
        if let Some(q) = rest.div_exact(&phi_d) {
            orders.push(d);
            rest = q;
            if rest.is_constant() {
                break;
            }
        }
    }
    if rest == IntPolynomial::one() {
        let order = orders.iter().fold(1u64, |acc, &d| acc.lcm(&d));
        Some(order)
    } else {
        None
    }
}
