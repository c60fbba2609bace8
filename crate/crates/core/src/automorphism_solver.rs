//! Derives the intertwining blades of the transpose and conjugation
//! involutions from the symmetry pattern of the generator matrices, and
//! verifies the resulting relations at exact matrix level.
//!
//! For an involution that sends each generator to ±itself, the intertwiner B
//! must satisfy B γ_i B⁻¹ = ε_i γ_i with the ε_i read off the pattern.
//! Candidates are found by exhaustive search over the 32 unsigned blades.

use crate::blade_algebra::{
    blade_inverse, blade_mul_unchecked, conjugation_sign, AlgebraSignature, Sign, SignedBlade,
};
use crate::exact_arith::ExactMatrix;
use crate::matrix_rep::{blade_to_matrix, symmetry_patterns, GammaBasis, SymmetryPattern};

/// Required sign ε_i in B γ_i B⁻¹ = ε_i γ_i, one per generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommutationPattern(pub [Sign; 5]);

impl CommutationPattern {
    /// Parses a 5-character string over {+,-}, generator order 0..4.
    pub fn parse(s: &str) -> Option<CommutationPattern> {
        let mut signs = [Sign::Plus; 5];
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != 5 {
            return None;
        }
        for (i, c) in chars.into_iter().enumerate() {
            signs[i] = match c {
                '+' => Sign::Plus,
                '-' => Sign::Minus,
                _ => return None,
            };
        }
        Some(CommutationPattern(signs))
    }
}

impl From<SymmetryPattern> for CommutationPattern {
    fn from(p: SymmetryPattern) -> Self {
        CommutationPattern(p.0)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SolverError {
    #[error("no even-grade blade satisfies the required commutation pattern {0:?}")]
    PatternUnsolvable(String),
    #[error("derived representatives are not eight distinct monomials")]
    RepresentativesNotDistinct,
}

/// The eight automorphism representatives, as positive signed blades.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismSet {
    pub identity: SignedBlade,
    /// Central pseudoscalar (grade involution slot).
    pub w: SignedBlade,
    /// Transpose intertwiner: E γ_iᵀ E⁻¹ = γ_i.
    pub e: SignedBlade,
    /// E·W, positive representative.
    pub c: SignedBlade,
    /// Conjugation intertwiner: Π γ_i* Π⁻¹ = γ_i.
    pub pi: SignedBlade,
    /// Π·W, positive representative.
    pub k: SignedBlade,
    /// Π·E, positive representative.
    pub s: SignedBlade,
    /// Π·C, positive representative.
    pub f: SignedBlade,
}

impl AutomorphismSet {
    pub fn named(&self) -> [(&'static str, SignedBlade); 8] {
        [
            ("I", self.identity),
            ("W", self.w),
            ("E", self.e),
            ("C", self.c),
            ("Pi", self.pi),
            ("K", self.k),
            ("S", self.s),
            ("F", self.f),
        ]
    }
}

/// All unsigned blades B with B γ_i B⁻¹ = pat[i] γ_i for every generator,
/// returned with positive sign in (grade, mask) order.
pub fn solve_commutation_pattern(
    sig: AlgebraSignature,
    pat: CommutationPattern,
) -> Vec<SignedBlade> {
    sig.unsigned_blades()
        .into_iter()
        .filter(|&b| (0..sig.dim()).all(|i| conjugation_sign(sig, b, i) == pat.0[i as usize]))
        .collect()
}

/// Derives the automorphism representatives from the basis: W is the
/// positive pseudoscalar, E and Π are the even-grade solutions of the
/// transpose and conjugation patterns, and C, K, S, F are the positive
/// representatives of EW, ΠW, ΠE, ΠC.
pub fn derive_automorphism_set(basis: &GammaBasis) -> Result<AutomorphismSet, SolverError> {
    let sig = basis.signature();
    let (transpose, conjugation) =
        symmetry_patterns(basis).map_err(|e| SolverError::PatternUnsolvable(e.to_string()))?;

    let even_solution = |pat: CommutationPattern| -> Result<SignedBlade, SolverError> {
        solve_commutation_pattern(sig, pat)
            .into_iter()
            .find(|b| b.grade() % 2 == 0)
            .ok_or_else(|| SolverError::PatternUnsolvable(format!("{pat:?}")))
    };

    let w = sig.pseudoscalar();
    let e = even_solution(transpose.into())?;
    let pi = even_solution(conjugation.into())?;
    let pos = |x: SignedBlade| x.positive();
    let c = pos(blade_mul_unchecked(sig, e, w));
    let k = pos(blade_mul_unchecked(sig, pi, w));
    let s = pos(blade_mul_unchecked(sig, pi, e));
    let f = pos(blade_mul_unchecked(sig, pi, c));
    let set = AutomorphismSet {
        identity: SignedBlade::one(),
        w,
        e,
        c,
        pi,
        k,
        s,
        f,
    };
    let mut masks: Vec<u32> = set.named().iter().map(|(_, b)| b.mask()).collect();
    masks.sort_unstable();
    masks.dedup();
    if masks.len() != 8 {
        return Err(SolverError::RepresentativesNotDistinct);
    }
    Ok(set)
}

/// One failed matrix-level relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntertwiningFailure {
    /// E γ_iᵀ E⁻¹ ≠ γ_i
    Transpose { generator: usize },
    /// Π γ_i* Π⁻¹ ≠ γ_i
    Conjugation { generator: usize },
    /// W fails to commute with γ_i
    NotCentral { generator: usize },
    /// W² ≠ I
    SquareNotIdentity,
}

/// Matrix-level verification of the derived set: the transpose and
/// conjugation intertwining relations for every generator, and W as a
/// central element of order at most 2.
#[derive(Debug, Clone)]
pub struct IntertwiningReport {
    pub failures: Vec<IntertwiningFailure>,
}

impl IntertwiningReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_intertwining(basis: &GammaBasis, set: &AutomorphismSet) -> IntertwiningReport {
    let sig = basis.signature();
    let mut failures = Vec::new();

    let conj_by = |b: SignedBlade, m: &ExactMatrix| -> ExactMatrix {
        let bm = blade_to_matrix(basis, b);
        let bm_inv = blade_to_matrix(basis, blade_inverse(sig, b));
        &(&bm * m) * &bm_inv
    };

    for i in 0..5 {
        let g = basis.gamma(i);
        if conj_by(set.e, &g.transpose()) != *g {
            failures.push(IntertwiningFailure::Transpose { generator: i });
        }
        if conj_by(set.pi, &g.conjugate()) != *g {
            failures.push(IntertwiningFailure::Conjugation { generator: i });
        }
    }

    let wm = blade_to_matrix(basis, set.w);
    for i in 0..5 {
        let g = basis.gamma(i);
        if &wm * g != g * &wm {
            failures.push(IntertwiningFailure::NotCentral { generator: i });
        }
    }
    if &wm * &wm != ExactMatrix::identity(4) {
        failures.push(IntertwiningFailure::SquareNotIdentity);
    }

    IntertwiningReport { failures }
}

/// Any two blades solving the same pattern differ by the central
/// pseudoscalar; exposed for the property tests.
pub fn differ_by_pseudoscalar(sig: AlgebraSignature, a: SignedBlade, b: SignedBlade) -> bool {
    let omega = sig.pseudoscalar();
    let prod = blade_mul_unchecked(sig, a, omega);
    prod.mask() == b.mask()
}
