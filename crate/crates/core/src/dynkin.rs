//! Closed-form data for Dynkin types: Coxeter numbers, Calabi-Yau
//! dimensions, and the minimal-period formulas for trivial extensions.
//! This module is pure arithmetic — no algebras — and serves as the oracle
//! the orbit engine is checked against.

use num_integer::Integer;

use crate::algebra::{Arrow, Quiver};
use crate::field::FieldSpec;

#[derive(Debug, thiserror::Error)]
pub enum DynkinError {
    #[error("no Dynkin type {family}{rank} (A: n>=1, D: n>=4, E: 6..8)")]
    InvalidRank { family: char, rank: usize },
}

/// Simply-laced Dynkin type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl std::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl DynkinType {
    pub fn new(family: char, rank: usize) -> Result<DynkinType, DynkinError> {
        match (family.to_ascii_uppercase(), rank) {
            ('A', n) if n >= 1 => Ok(DynkinType::A(n)),
            ('D', n) if n >= 4 => Ok(DynkinType::D(n)),
            ('E', n) if (6..=8).contains(&n) => Ok(DynkinType::E(n)),
            (fam, n) => Err(DynkinError::InvalidRank { family: fam, rank: n }),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    /// All types with rank at most `max_rank`, in family order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<DynkinType> {
        let mut out: Vec<DynkinType> = (1..=max_rank).map(DynkinType::A).collect();
        out.extend((4..=max_rank).map(DynkinType::D));
        out.extend((6..=max_rank.min(8)).map(DynkinType::E));
        out
    }

    pub fn coxeter_number(&self) -> u64 {
        match *self {
            DynkinType::A(n) => n as u64 + 1,
            DynkinType::D(n) => 2 * (n as u64 - 1),
            DynkinType::E(6) => 12,
            DynkinType::E(7) => 18,
            DynkinType::E(8) => 30,
            DynkinType::E(_) => unreachable!("rank validated at construction"),
        }
    }

    /// Types whose Weyl group contains -1: A1, D_n with n even, E7, E8.
    /// These halve the Calabi-Yau data and trigger the characteristic-2
    /// period branch.
    pub fn has_minus_one(&self) -> bool {
        match *self {
            DynkinType::A(n) => n == 1,
            DynkinType::D(n) => n % 2 == 0,
            DynkinType::E(n) => n >= 7,
        }
    }

    /// A fixed orientation of the Dynkin diagram: A linear; D a chain with
    /// a fork at the end; E a chain with one branch at the third vertex.
    /// Everything computed downstream (Coxeter polynomial, trivial
    /// extension periods) is independent of the orientation.
    pub fn quiver(&self) -> Quiver {
        let arrow = |s: usize, t: usize, i: usize| Arrow {
            source: s,
            target: t,
            label: format!("a{i}"),
        };
        match *self {
            DynkinType::A(n) => Quiver::linear(n),
            DynkinType::D(n) => {
                let mut arrows: Vec<Arrow> =
                    (0..n - 3).map(|i| arrow(i, i + 1, i)).collect();
                arrows.push(arrow(n - 3, n - 2, n - 3));
                arrows.push(arrow(n - 3, n - 1, n - 2));
                Quiver::new(n, arrows).expect("valid fork quiver")
            }
            DynkinType::E(n) => {
                let mut arrows: Vec<Arrow> =
                    (0..n - 2).map(|i| arrow(i, i + 1, i)).collect();
                arrows.push(arrow(2, n - 1, n - 2));
                Quiver::new(n, arrows).expect("valid branched quiver")
            }
        }
    }
}

/// Fractional Calabi-Yau dimension (m, ell): the ell-th Serre power is the
/// shift by m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyDim {
    pub m: u64,
    pub ell: u64,
}

impl CyDim {
    pub fn new(m: u64, ell: u64) -> CyDim {
        assert!(ell > 0, "ell must be positive");
        CyDim { m, ell }
    }
}

impl std::fmt::Display for CyDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.m, self.ell)
    }
}

/// Minimal Calabi-Yau dimension of the path algebra: (h/2-1, h/2) for the
/// minus-one types, (h-2, h) otherwise.
pub fn cydim_dynkin(t: DynkinType) -> CyDim {
    let h = t.coxeter_number();
    if t.has_minus_one() {
        CyDim::new(h / 2 - 1, h / 2)
    } else {
        CyDim::new(h - 2, h)
    }
}

/// Calabi-Yau dimension of a tensor product of fractionally Calabi-Yau
/// factors: ell = lcm of the factor ells, m = ell * sum(m_i / ell_i).
/// Exact (minimal) when the factors are ring-indecomposable.
pub fn tensor_cydim(parts: &[CyDim]) -> CyDim {
    assert!(!parts.is_empty(), "tensor of zero factors");
    let ell = parts.iter().fold(1u64, |acc, c| acc.lcm(&c.ell));
    let m = parts.iter().map(|c| c.m * (ell / c.ell)).sum();
    CyDim::new(m, ell)
}

/// Minimal period of the trivial extension T(A) of an (m/ell)-Calabi-Yau
/// algebra A: ell+m when (-1)^(ell+m) = 1 in the field (sum even, or
/// characteristic two), and 2(ell+m) otherwise.
pub fn minimal_period_trivext(c: CyDim, f: FieldSpec) -> u64 {
    let s = c.ell + c.m;
    if s % 2 == 0 || f.characteristic() == 2 {
        s
    } else {
        2 * s
    }
}

/// The (g, r) pair attached to an (m/ell)-Calabi-Yau algebra and a cluster
/// parameter d: g = gcd(ell+m, d+1), r = ((d+1)ell - (ell+m)) / g.
pub fn dct_parameters(d: u64, c: CyDim) -> (u64, i64) {
    let s = c.ell + c.m;
    let g = s.gcd(&(d + 1));
    let num = ((d + 1) * c.ell) as i64 - s as i64;
    debug_assert_eq!(num.rem_euclid(g as i64), 0, "g divides the numerator");
    (g, num / g as i64)
}

/// Expected minimal period of T(kQ) straight from the Coxeter number:
/// h-1 when the characteristic is two and the type has -1 in its Weyl
/// group, 2h-2 otherwise. Kept as an independent formula so the identity
/// with minimal_period_trivext(cydim_dynkin(t)) is a genuine cross-check.
pub fn expected_period_dynkin(t: DynkinType, f: FieldSpec) -> u64 {
    let h = t.coxeter_number();
    if f.characteristic() == 2 && t.has_minus_one() {
        h - 1
    } else {
        2 * h - 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::path_algebra;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime_field(p).unwrap()
    }

    #[test]
    fn coxeter_numbers() {
        assert_eq!(DynkinType::A(2).coxeter_number(), 3);
        assert_eq!(DynkinType::A(11).coxeter_number(), 12);
        assert_eq!(DynkinType::D(4).coxeter_number(), 6);
        assert_eq!(DynkinType::D(11).coxeter_number(), 20);
        assert_eq!(DynkinType::E(6).coxeter_number(), 12);
        assert_eq!(DynkinType::E(7).coxeter_number(), 18);
        assert_eq!(DynkinType::E(8).coxeter_number(), 30);
    }

    #[test]
    fn rank_validation() {
        assert!(DynkinType::new('A', 0).is_err());
        assert!(DynkinType::new('D', 3).is_err());
        assert!(DynkinType::new('E', 9).is_err());
        assert!(DynkinType::new('a', 5).is_ok());
        assert!(DynkinType::new('F', 4).is_err());
    }

    #[test]
    fn cydim_values() {
        assert_eq!(cydim_dynkin(DynkinType::A(2)), CyDim::new(1, 3));
        assert_eq!(cydim_dynkin(DynkinType::A(1)), CyDim::new(0, 1));
        assert_eq!(cydim_dynkin(DynkinType::D(4)), CyDim::new(2, 3));
        assert_eq!(cydim_dynkin(DynkinType::D(5)), CyDim::new(6, 8));
        assert_eq!(cydim_dynkin(DynkinType::E(7)), CyDim::new(8, 9));
        assert_eq!(cydim_dynkin(DynkinType::E(8)), CyDim::new(14, 15));
    }

    #[test]
    fn tensor_cydim_examples() {
        assert_eq!(tensor_cydim(&[CyDim::new(1, 3)]), CyDim::new(1, 3));
        assert_eq!(
            tensor_cydim(&[CyDim::new(1, 3), CyDim::new(1, 3)]),
            CyDim::new(2, 3)
        );
        assert_eq!(
            tensor_cydim(&[CyDim::new(2, 3), CyDim::new(8, 9)]),
            CyDim::new(14, 9)
        );
    }

    #[test]
    fn minimal_periods() {
        assert_eq!(minimal_period_trivext(CyDim::new(1, 3), q()), 4);
        assert_eq!(minimal_period_trivext(CyDim::new(2, 3), q()), 10);
        assert_eq!(minimal_period_trivext(CyDim::new(2, 3), gf(2)), 5);
        assert_eq!(minimal_period_trivext(CyDim::new(6, 8), q()), 14);
        assert_eq!(minimal_period_trivext(CyDim::new(6, 8), gf(2)), 14);
        assert_eq!(minimal_period_trivext(CyDim::new(0, 1), q()), 2);
        assert_eq!(minimal_period_trivext(CyDim::new(0, 1), gf(2)), 1);
    }

    #[test]
    fn dct_examples() {
        assert_eq!(dct_parameters(1, CyDim::new(1, 3)), (2, 1));
        assert_eq!(dct_parameters(2, CyDim::new(2, 3)), (1, 4));
        // d = 1 on a non-special type: r = 2/g
        let c = cydim_dynkin(DynkinType::A(4)); // (3, 5)
        let (g, r) = dct_parameters(1, c);
        assert_eq!((g, r), (2, 1));
    }

    #[test]
    fn expected_period_equals_formula_composition() {
        for t in DynkinType::all_up_to_rank(10) {
            for f in [q(), gf(2), gf(3)] {
                assert_eq!(
                    expected_period_dynkin(t, f),
                    minimal_period_trivext(cydim_dynkin(t), f),
                    "type {t}"
                );
            }
        }
    }

    #[test]
    fn boolean_lattice_identity() {
        for n in 1..=8u64 {
            let parts = vec![CyDim::new(1, 3); n as usize];
            let c = tensor_cydim(&parts);
            assert_eq!(c, CyDim::new(n, 3));
            let over_q = minimal_period_trivext(c, q());
            let over_two = minimal_period_trivext(c, gf(2));
            if n % 2 == 1 {
                assert_eq!(over_q, n + 3);
            } else {
                assert_eq!(over_q, 2 * (n + 3));
            }
            assert_eq!(over_two, n + 3);
        }
    }

    #[test]
    fn parity_of_cy_dimensions() {
        // at least one of ell+1 and m is even, for every Dynkin type
        for t in DynkinType::all_up_to_rank(10) {
            let c = cydim_dynkin(t);
            assert!(
                (c.ell + 1) % 2 == 0 || c.m % 2 == 0,
                "parity fails for {t}: {c}"
            );
        }
    }

    #[test]
    fn quiver_shapes() {
        let d4 = DynkinType::D(4).quiver();
        let a = path_algebra(q(), &d4).unwrap();
        assert_eq!(a.vertices(), 4);
        assert_eq!(a.dim(), 9); // 4 trivial + 3 arrows + 2 length-two paths

        let e6 = DynkinType::E(6).quiver();
        let b = path_algebra(q(), &e6).unwrap();
        assert_eq!(b.vertices(), 6);

        let a4 = path_algebra(q(), &DynkinType::A(4).quiver()).unwrap();
        assert_eq!(a4.dim(), 10);
    }
}
