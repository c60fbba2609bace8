//! Exact complex matrix arithmetic over the Gaussian integers.
//!
//! Every matrix entry that occurs in this crate lies in {0, ±1, ±i}, but the
//! scalar type is fully general: unbounded integers, so products and sums can
//! never overflow or round.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A Gaussian integer `re + im·i` with unbounded components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianInteger {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInteger {
    pub fn new(re: i64, im: i64) -> Self {
        GaussianInteger {
            re: BigInt::from(re),
            im: BigInt::from(im),
        }
    }

    pub fn zero() -> Self {
        GaussianInteger::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianInteger::new(1, 0)
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        GaussianInteger::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Complex conjugate: negates `im`, fixes `re`.
    pub fn conjugate(&self) -> Self {
        GaussianInteger {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Add for &GaussianInteger {
    type Output = GaussianInteger;
    fn add(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianInteger {
    type Output = GaussianInteger;
    fn sub(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianInteger {
    type Output = GaussianInteger;
    fn mul(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianInteger {
    type Output = GaussianInteger;
    fn neg(self) -> GaussianInteger {
        GaussianInteger {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            if self.im.is_one() {
                write!(f, "i")
            } else if (-self.im.clone()).is_one() {
                write!(f, "-i")
            } else {
                write!(f, "{}i", self.im)
            }
        } else {
            write!(f, "{}{:+}i", self.re, self.im)
        }
    }
}

/// One of the four fourth roots of unity, the only scalar factors that relate
/// two signed basis monomials in this representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    PlusOne,
    MinusOne,
    PlusI,
    MinusI,
}

impl Phase {
    pub fn as_gaussian(self) -> GaussianInteger {
        match self {
            Phase::PlusOne => GaussianInteger::new(1, 0),
            Phase::MinusOne => GaussianInteger::new(-1, 0),
            Phase::PlusI => GaussianInteger::new(0, 1),
            Phase::MinusI => GaussianInteger::new(0, -1),
        }
    }

    pub const ALL: [Phase; 4] = [Phase::PlusOne, Phase::MinusOne, Phase::PlusI, Phase::MinusI];
}

/// A square matrix of Gaussian integers. Immutable after construction; every
/// operation is pure and exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<GaussianInteger>,
}

/// Raised when two matrices of different dimension are combined.
#[derive(Debug, thiserror::Error)]
#[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
pub struct DimensionMismatch {
    pub left: usize,
    pub right: usize,
}

impl ExactMatrix {
    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        ExactMatrix {
            dim,
            entries: vec![GaussianInteger::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = ExactMatrix::zero(dim);
        for k in 0..dim {
            m.set(k, k, GaussianInteger::one());
        }
        m
    }

    /// Builds a matrix from rows of `(re, im)` pairs.
    pub fn from_rows(rows: &[&[(i64, i64)]]) -> Self {
        let dim = rows.len();
        let mut m = ExactMatrix::zero(dim);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "ragged matrix literal");
            for (c, &(re, im)) in row.iter().enumerate() {
                m.set(r, c, GaussianInteger::new(re, im));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianInteger {
        &self.entries[r * self.dim + c]
    }

    fn set(&mut self, r: usize, c: usize, v: GaussianInteger) {
        self.entries[r * self.dim + c] = v;
    }

    /// Exact matrix product.
    pub fn mat_mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, DimensionMismatch> {
        if self.dim != rhs.dim {
            return Err(DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let n = self.dim;
        let mut out = ExactMatrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = GaussianInteger::zero();
                for k in 0..n {
                    acc = &acc + &(self.get(r, k) * rhs.get(k, c));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> ExactMatrix {
        let n = self.dim;
        let mut out = ExactMatrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, self.get(c, r).clone());
            }
        }
        out
    }

    /// Entrywise Gaussian conjugation.
    pub fn conjugate(&self) -> ExactMatrix {
        let n = self.dim;
        let mut out = ExactMatrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, self.get(r, c).conjugate());
            }
        }
        out
    }

    pub fn negate(&self) -> ExactMatrix {
        self.scale(&GaussianInteger::new(-1, 0))
    }

    pub fn scale(&self, s: &GaussianInteger) -> ExactMatrix {
        let n = self.dim;
        let mut out = ExactMatrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, s * self.get(r, c));
            }
        }
        out
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, DimensionMismatch> {
        if self.dim != rhs.dim {
            return Err(DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let n = self.dim;
        let mut out = ExactMatrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, self.get(r, c) + rhs.get(r, c));
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianInteger::is_zero)
    }

    /// Finds the phase `φ ∈ {±1, ±i}` with `self = φ·other`, if any. Only
    /// these four phases are probed: every group element in scope is a blade
    /// times a fourth root of unity.
    pub fn phase_of(&self, other: &ExactMatrix) -> Option<Phase> {
        if self.dim != other.dim {
            return None;
        }
        Phase::ALL
            .into_iter()
            .find(|&phase| *self == other.scale(&phase.as_gaussian()))
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.mat_mul(rhs).expect("dimension mismatch")
    }
}
