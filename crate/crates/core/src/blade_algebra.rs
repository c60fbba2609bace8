//! The Clifford algebra Cl(p,q) at the level of signed basis monomials.
//!
//! A monomial is a product of distinct generators, identified by a bitmask of
//! generator indices plus a sign. Generators 0..p-1 square to +1, generators
//! p..p+q-1 square to -1, and distinct generators anticommute. No linear
//! combinations ever arise: the signed monomials are closed under
//! multiplication and form a finite group of order 2^(p+q+1).

use std::fmt;

/// Signature (p,q) of a Clifford algebra: p generators square to +1, q to -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraSignature {
    p: u32,
    q: u32,
}

#[derive(Debug, thiserror::Error)]
pub enum BladeError {
    #[error("generator index {index} out of range for Cl({p},{q})")]
    IndexOutOfRange { index: u32, p: u32, q: u32 },
    #[error("invalid blade label {0:?}")]
    BadLabel(String),
}

impl AlgebraSignature {
    pub fn new(p: u32, q: u32) -> Self {
        assert!(p + q >= 1, "need at least one generator");
        AlgebraSignature { p, q }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of generators.
    pub fn dim(&self) -> u32 {
        self.p + self.q
    }

    /// Square of generator `i`: +1 for the first `p` generators, -1 after.
    pub fn generator_square(&self, i: u32) -> Sign {
        assert!(i < self.dim(), "generator index out of range");
        if i < self.p {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Algebra type `(p - q) mod 8`, in the canonical range 0..7.
    pub fn type_mod8(&self) -> u8 {
        (self.p as i64 - self.q as i64).rem_euclid(8) as u8
    }

    /// All `2^(p+q)` unsigned blades, in (grade, mask) order.
    pub fn unsigned_blades(&self) -> Vec<SignedBlade> {
        let mut blades: Vec<SignedBlade> = (0..(1u32 << self.dim()))
            .map(|mask| SignedBlade::new(mask, Sign::Plus))
            .collect();
        blades.sort();
        blades
    }

    /// All `2^(p+q+1)` signed blades, the element set of G(p,q).
    pub fn signed_blades(&self) -> Vec<SignedBlade> {
        let mut blades: Vec<SignedBlade> = (0..(1u32 << self.dim()))
            .flat_map(|mask| {
                [
                    SignedBlade::new(mask, Sign::Plus),
                    SignedBlade::new(mask, Sign::Minus),
                ]
            })
            .collect();
        blades.sort();
        blades
    }

    /// The positive top-grade blade.
    pub fn pseudoscalar(&self) -> SignedBlade {
        SignedBlade::new((1u32 << self.dim()) - 1, Sign::Plus)
    }
}

/// Sign of a blade: the group {+1, -1} under multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(swaps: u32) -> Sign {
        if swaps % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A signed basis monomial: a set of generator indices (bitmask) and a sign.
///
/// Ordering is (grade, mask, sign), which fixes a canonical element order for
/// every table and search in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedBlade {
    mask: u32,
    sign: Sign,
}

impl PartialOrd for SignedBlade {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedBlade {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.grade(), self.mask, self.sign).cmp(&(other.grade(), other.mask, other.sign))
    }
}

impl SignedBlade {
    pub fn new(mask: u32, sign: Sign) -> Self {
        SignedBlade { mask, sign }
    }

    /// The multiplicative identity (empty mask, positive sign).
    pub fn one() -> Self {
        SignedBlade::new(0, Sign::Plus)
    }

    /// The central element -1.
    pub fn minus_one() -> Self {
        SignedBlade::new(0, Sign::Minus)
    }

    /// The single generator γ_i.
    pub fn generator(i: u32) -> Self {
        SignedBlade::new(1 << i, Sign::Plus)
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn grade(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn negate(&self) -> SignedBlade {
        SignedBlade::new(self.mask, self.sign.flip())
    }

    /// The same monomial with positive sign.
    pub fn positive(&self) -> SignedBlade {
        SignedBlade::new(self.mask, Sign::Plus)
    }

    /// Generator indices in ascending order.
    pub fn indices(&self) -> Vec<u32> {
        (0..32).filter(|i| self.mask & (1 << i) != 0).collect()
    }

    /// Canonical text form: optional leading '-', then '1' or 'g' followed by
    /// ascending digit indices ("g024").
    pub fn label(&self) -> String {
        let mut s = String::new();
        if self.sign == Sign::Minus {
            s.push('-');
        }
        if self.mask == 0 {
            s.push('1');
        } else {
            s.push('g');
            for i in self.indices() {
                s.push_str(&i.to_string());
            }
        }
        s
    }

    /// Parses the label grammar: `['-'] ('1' | 'g' digit+)`, digits strictly
    /// ascending.
    pub fn parse(label: &str) -> Result<SignedBlade, BladeError> {
        let bad = || BladeError::BadLabel(label.to_string());
        let (sign, rest) = match label.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest),
            None => (Sign::Plus, label),
        };
        if rest == "1" {
            return Ok(SignedBlade::new(0, sign));
        }
        let digits = rest.strip_prefix('g').ok_or_else(bad)?;
        if digits.is_empty() {
            return Err(bad());
        }
        let mut mask = 0u32;
        let mut prev: Option<u32> = None;
        for ch in digits.chars() {
            let d = ch.to_digit(10).ok_or_else(bad)?;
            if let Some(p) = prev {
                if d <= p {
                    return Err(bad());
                }
            }
            prev = Some(d);
            mask |= 1 << d;
        }
        Ok(SignedBlade::new(mask, sign))
    }
}

impl fmt::Display for SignedBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Parity of the transpositions needed to merge two ascending index lists:
/// counts pairs (i in a, j in b) with i > j.
fn reorder_swaps(a_mask: u32, b_mask: u32) -> u32 {
    let mut swaps = 0;
    let mut shifted = a_mask >> 1;
    while shifted != 0 {
        swaps += (shifted & b_mask).count_ones();
        shifted >>= 1;
    }
    swaps
}

fn check_indices(sig: AlgebraSignature, b: SignedBlade) -> Result<(), BladeError> {
    let allowed = (1u32 << sig.dim()) - 1;
    if b.mask & !allowed != 0 {
        let index = (b.mask & !allowed).trailing_zeros();
        return Err(BladeError::IndexOutOfRange {
            index,
            p: sig.p(),
            q: sig.q(),
        });
    }
    Ok(())
}

/// Product of two signed monomials in Cl(p,q). The result mask is the
/// symmetric difference of the input masks; the sign collects the input
/// signs, the reordering parity, and one metric sign per annihilated
/// generator pair.
pub fn blade_mul(
    sig: AlgebraSignature,
    a: SignedBlade,
    b: SignedBlade,
) -> Result<SignedBlade, BladeError> {
    check_indices(sig, a)?;
    check_indices(sig, b)?;
    let mut sign = a.sign * b.sign * Sign::from_parity(reorder_swaps(a.mask, b.mask));
    let mut annihilated = a.mask & b.mask;
    while annihilated != 0 {
        let i = annihilated.trailing_zeros();
        sign = sign * sig.generator_square(i);
        annihilated &= annihilated - 1;
    }
    Ok(SignedBlade::new(a.mask ^ b.mask, sign))
}

/// Infallible product for blades already known to fit the signature.
pub fn blade_mul_unchecked(sig: AlgebraSignature, a: SignedBlade, b: SignedBlade) -> SignedBlade {
    blade_mul(sig, a, b).expect("blade index out of range")
}

/// Sign s with a·a = s·1. Closed form: (-1)^(k(k-1)/2) times the product of
/// the generator squares over the mask, k = grade.
pub fn blade_square_sign(sig: AlgebraSignature, a: SignedBlade) -> Sign {
    let k = a.grade();
    let mut sign = Sign::from_parity(k * k.wrapping_sub(1) / 2 % 2);
    if k == 0 {
        sign = Sign::Plus;
    }
    for i in a.indices() {
        sign = sign * sig.generator_square(i);
    }
    sign
}

/// Two-sided inverse: ± the blade itself, since b·b = ±1.
pub fn blade_inverse(sig: AlgebraSignature, b: SignedBlade) -> SignedBlade {
    match blade_square_sign(sig, b.positive()) {
        Sign::Plus => SignedBlade::new(b.mask, b.sign),
        Sign::Minus => SignedBlade::new(b.mask, b.sign.flip()),
    }
}

/// Sign ε with b·γ_i·b⁻¹ = ε·γ_i: (-1)^(k-1) if generator i occurs in b,
/// else (-1)^k, where k = grade(b).
pub fn conjugation_sign(sig: AlgebraSignature, b: SignedBlade, i: u32) -> Sign {
    assert!(i < sig.dim(), "generator index out of range");
    let k = b.grade();
    if b.mask & (1 << i) != 0 {
        Sign::from_parity(k.wrapping_sub(1) % 2)
    } else {
        Sign::from_parity(k % 2)
    }
}
