//! The concrete 4×4 spinor representation of the five generators of Cl(1,4),
//! assembled from 2×2 Pauli blocks with Gaussian-integer entries.

use crate::blade_algebra::{AlgebraSignature, Sign, SignedBlade};
use crate::exact_arith::{ExactMatrix, GaussianInteger};

/// The five generator matrices and their metric.
#[derive(Debug, Clone)]
pub struct GammaBasis {
    gamma: Vec<ExactMatrix>,
    metric: [Sign; 5],
}

/// Per-generator sign under a designated involution (transpose or
/// entrywise conjugation).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryPattern(pub [Sign; 5]);

#[derive(Debug, thiserror::Error)]
pub enum RepError {
    #[error("generator {index} is neither symmetric nor antisymmetric under the involution")]
    NotEigen { index: usize },
}

/// Outcome of the anticommutator check over all 25 generator pairs.
#[derive(Debug, Clone)]
pub struct CliffordReport {
    /// Pairs (α, β) whose anticommutator differs from 2η_{αβ}·I.
    pub failed_pairs: Vec<(usize, usize)>,
    pub total_pairs: usize,
}

impl CliffordReport {
    pub fn passed(&self) -> bool {
        self.failed_pairs.is_empty()
    }
}

/// 2×2 block kinds used by the explicit basis.
fn pauli(k: usize) -> [[(i64, i64); 2]; 2] {
    match k {
        1 => [[(0, 0), (1, 0)], [(1, 0), (0, 0)]],
        2 => [[(0, 0), (0, -1)], [(0, 1), (0, 0)]],
        3 => [[(1, 0), (0, 0)], [(0, 0), (-1, 0)]],
        _ => unreachable!(),
    }
}

fn scale_block(block: [[(i64, i64); 2]; 2], s: (i64, i64)) -> [[(i64, i64); 2]; 2] {
    let mul = |(a, b): (i64, i64), (c, d): (i64, i64)| (a * c - b * d, a * d + b * c);
    let mut out = block;
    for row in &mut out {
        for e in row.iter_mut() {
            *e = mul(*e, s);
        }
    }
    out
}

/// Assembles a 4×4 matrix from four 2×2 blocks.
fn from_blocks(
    tl: [[(i64, i64); 2]; 2],
    tr: [[(i64, i64); 2]; 2],
    bl: [[(i64, i64); 2]; 2],
    br: [[(i64, i64); 2]; 2],
) -> ExactMatrix {
    let mut rows = [[(0i64, 0i64); 4]; 4];
    for r in 0..2 {
        for c in 0..2 {
            rows[r][c] = tl[r][c];
            rows[r][c + 2] = tr[r][c];
            rows[r + 2][c] = bl[r][c];
            rows[r + 2][c + 2] = br[r][c];
        }
    }
    let row_refs: Vec<&[(i64, i64)]> = rows.iter().map(|r| r.as_slice()).collect();
    ExactMatrix::from_rows(&row_refs)
}

const ZERO2: [[(i64, i64); 2]; 2] = [[(0, 0), (0, 0)], [(0, 0), (0, 0)]];
const ID2: [[(i64, i64); 2]; 2] = [[(1, 0), (0, 0)], [(0, 0), (1, 0)]];

/// Builds the explicit basis: γ0 = diag(1₂, -1₂), γk = offdiag(iσk, iσk) for
/// k = 1, 3, γ2 = offdiag(-iσ2, -iσ2), γ4 = offdiag(1₂, -1₂).
pub fn build_gamma_basis() -> GammaBasis {
    let neg_id2 = scale_block(ID2, (-1, 0));
    let i_s1 = scale_block(pauli(1), (0, 1));
    let neg_i_s2 = scale_block(pauli(2), (0, -1));
    let i_s3 = scale_block(pauli(3), (0, 1));

    let gamma = vec![
        from_blocks(ID2, ZERO2, ZERO2, neg_id2),
        from_blocks(ZERO2, i_s1, i_s1, ZERO2),
        from_blocks(ZERO2, neg_i_s2, neg_i_s2, ZERO2),
        from_blocks(ZERO2, i_s3, i_s3, ZERO2),
        from_blocks(ZERO2, ID2, neg_id2, ZERO2),
    ];
    GammaBasis {
        gamma,
        metric: [Sign::Plus, Sign::Minus, Sign::Minus, Sign::Minus, Sign::Minus],
    }
}

impl GammaBasis {
    pub fn gamma(&self, i: usize) -> &ExactMatrix {
        &self.gamma[i]
    }

    pub fn metric(&self) -> &[Sign; 5] {
        &self.metric
    }

    pub fn signature(&self) -> AlgebraSignature {
        AlgebraSignature::new(1, 4)
    }

    /// Replaces one generator; used to exercise failure paths of the
    /// relation check.
    pub fn with_generator(&self, i: usize, m: ExactMatrix) -> GammaBasis {
        let mut out = self.clone();
        out.gamma[i] = m;
        out
    }
}

/// Checks γαγβ + γβγα = 2ηαβ·I exactly for all 25 ordered pairs.
pub fn verify_clifford_relations(basis: &GammaBasis) -> CliffordReport {
    let id = ExactMatrix::identity(4);
    let mut failed = Vec::new();
    for a in 0..5 {
        for b in 0..5 {
            let ab = basis.gamma(a) * basis.gamma(b);
            let ba = basis.gamma(b) * basis.gamma(a);
            let anti = ab.add(&ba).unwrap();
            let expected = if a == b {
                match basis.metric[a] {
                    Sign::Plus => id.scale(&GaussianInteger::new(2, 0)),
                    Sign::Minus => id.scale(&GaussianInteger::new(-2, 0)),
                }
            } else {
                ExactMatrix::zero(4)
            };
            if anti != expected {
                failed.push((a, b));
            }
        }
    }
    CliffordReport {
        failed_pairs: failed,
        total_pairs: 25,
    }
}

/// Sign of the blade times the ordered product of generator matrices over its
/// mask.
pub fn blade_to_matrix(basis: &GammaBasis, b: SignedBlade) -> ExactMatrix {
    let mut m = ExactMatrix::identity(4);
    for i in b.indices() {
        m = &m * basis.gamma(i as usize);
    }
    match b.sign() {
        Sign::Plus => m,
        Sign::Minus => m.negate(),
    }
}

/// For each generator, the sign s with γᵀ = s·γ and γ* = s·γ respectively.
pub fn symmetry_patterns(basis: &GammaBasis) -> Result<(SymmetryPattern, SymmetryPattern), RepError> {
    let mut transpose = [Sign::Plus; 5];
    let mut conjugation = [Sign::Plus; 5];
    for i in 0..5 {
        let g = basis.gamma(i);
        transpose[i] = eigen_sign(&g.transpose(), g).ok_or(RepError::NotEigen { index: i })?;
        conjugation[i] = eigen_sign(&g.conjugate(), g).ok_or(RepError::NotEigen { index: i })?;
    }
    Ok((SymmetryPattern(transpose), SymmetryPattern(conjugation)))
}

fn eigen_sign(image: &ExactMatrix, original: &ExactMatrix) -> Option<Sign> {
    if image == original {
        Some(Sign::Plus)
    } else if *image == original.negate() {
        Some(Sign::Minus)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade_algebra::{blade_mul_unchecked, SignedBlade};
    use crate::exact_arith::Phase;

    fn b(label: &str) -> SignedBlade {
        SignedBlade::parse(label).unwrap()
    }

    #[test]
    fn gamma0_is_block_diagonal() {
        let basis = build_gamma_basis();
        let expected = ExactMatrix::from_rows(&[
            &[(1, 0), (0, 0), (0, 0), (0, 0)],
            &[(0, 0), (1, 0), (0, 0), (0, 0)],
            &[(0, 0), (0, 0), (-1, 0), (0, 0)],
            &[(0, 0), (0, 0), (0, 0), (-1, 0)],
        ]);
        assert_eq!(*basis.gamma(0), expected);
    }

    #[test]
    fn gamma4_is_off_diagonal() {
        let basis = build_gamma_basis();
        let expected = ExactMatrix::from_rows(&[
            &[(0, 0), (0, 0), (1, 0), (0, 0)],
            &[(0, 0), (0, 0), (0, 0), (1, 0)],
            &[(-1, 0), (0, 0), (0, 0), (0, 0)],
            &[(0, 0), (-1, 0), (0, 0), (0, 0)],
        ]);
        assert_eq!(*basis.gamma(4), expected);
    }

    #[test]
    fn gamma2_blocks_are_minus_i_sigma2() {
        let basis = build_gamma_basis();
        let expected = ExactMatrix::from_rows(&[
            &[(0, 0), (0, 0), (0, 0), (-1, 0)],
            &[(0, 0), (0, 0), (1, 0), (0, 0)],
            &[(0, 0), (-1, 0), (0, 0), (0, 0)],
            &[(1, 0), (0, 0), (0, 0), (0, 0)],
        ]);
        assert_eq!(*basis.gamma(2), expected);
    }

    #[test]
    fn all_25_relations_hold() {
        let report = verify_clifford_relations(&build_gamma_basis());
        assert!(report.passed(), "failed pairs: {:?}", report.failed_pairs);
    }

    #[test]
    fn duplicated_generator_breaks_relations() {
        let basis = build_gamma_basis();
        let broken = basis.with_generator(4, basis.gamma(0).clone());
        let report = verify_clifford_relations(&broken);
        assert!(report.failed_pairs.contains(&(0, 4)));
    }

    #[test]
    fn flipped_sign_breaks_relations() {
        let basis = build_gamma_basis();
        // negate the (0,3) entry of gamma1
        let broken = {
            let g = basis.gamma(1);
            let mut lit = [[(0i64, 0i64); 4]; 4];
            for r in 0..4 {
                for c in 0..4 {
                    let e = g.get(r, c);
                    let re: i64 = e.re.to_string().parse().unwrap();
                    let im: i64 = e.im.to_string().parse().unwrap();
                    lit[r][c] = if (r, c) == (0, 3) { (-re, -im) } else { (re, im) };
                }
            }
            let refs: Vec<&[(i64, i64)]> = lit.iter().map(|r| r.as_slice()).collect();
            ExactMatrix::from_rows(&refs)
        };
        let report = verify_clifford_relations(&basis.with_generator(1, broken));
        assert!(!report.passed());
    }

    #[test]
    fn gamma_squares_match_metric_via_matrices() {
        let basis = build_gamma_basis();
        let id = ExactMatrix::identity(4);
        assert_eq!(basis.gamma(0) * basis.gamma(0), id);
        assert_eq!(basis.gamma(2) * basis.gamma(2), id.negate());
    }

    #[test]
    fn transpose_and_conjugation_patterns() {
        let basis = build_gamma_basis();
        let (t, c) = symmetry_patterns(&basis).unwrap();
        use Sign::{Minus as M, Plus as P};
        assert_eq!(t, SymmetryPattern([P, P, M, P, M]));
        assert_eq!(c, SymmetryPattern([P, M, P, M, P]));
    }

    #[test]
    fn blade_to_matrix_basics() {
        let basis = build_gamma_basis();
        assert_eq!(
            blade_to_matrix(&basis, SignedBlade::one()),
            ExactMatrix::identity(4)
        );
        assert_eq!(
            blade_to_matrix(&basis, b("g04")),
            basis.gamma(0) * basis.gamma(4)
        );
        assert_eq!(blade_to_matrix(&basis, b("-g2")), basis.gamma(2).negate());
    }

    #[test]
    fn representation_is_a_homomorphism_on_all_pairs() {
        let basis = build_gamma_basis();
        let sig = basis.signature();
        let blades = sig.unsigned_blades();
        let mats: Vec<ExactMatrix> = blades
            .iter()
            .map(|&x| blade_to_matrix(&basis, x))
            .collect();
        for (i, &x) in blades.iter().enumerate() {
            for (j, &y) in blades.iter().enumerate() {
                let product_blade = blade_mul_unchecked(sig, x, y);
                assert_eq!(
                    blade_to_matrix(&basis, product_blade),
                    &mats[i] * &mats[j],
                    "mismatch at {x} * {y}"
                );
            }
        }
    }

    #[test]
    fn representation_is_two_to_one_with_pseudoscalar_kernel() {
        // In dimension 5 the pseudoscalar is central with square +1, so a
        // 4x4 irreducible representation must send it to ±I. Here it lands
        // on +I, and the signed blade group maps exactly 2-to-1: x and
        // x·g01234 collide, nothing else does.
        let basis = build_gamma_basis();
        let sig = basis.signature();
        let w = sig.pseudoscalar();
        assert_eq!(blade_to_matrix(&basis, w), ExactMatrix::identity(4));

        let blades = sig.signed_blades();
        let mats: Vec<ExactMatrix> = blades
            .iter()
            .map(|&x| blade_to_matrix(&basis, x))
            .collect();
        for i in 0..mats.len() {
            let partner = crate::blade_algebra::blade_mul(sig, blades[i], w).unwrap();
            for j in (i + 1)..mats.len() {
                if blades[j] == partner {
                    assert_eq!(mats[i], mats[j]);
                } else {
                    assert_ne!(mats[i], mats[j]);
                }
            }
        }
        let mut dedup: Vec<&ExactMatrix> = mats.iter().collect();
        dedup.sort_by_key(|m| format!("{m:?}"));
        dedup.dedup();
        assert_eq!(dedup.len(), 32);
    }

    #[test]
    fn matrix_phase_matches_table_cell() {
        let basis = build_gamma_basis();
        let m = &(basis.gamma(0) * basis.gamma(4)) * basis.gamma(0);
        assert_eq!(m.phase_of(basis.gamma(4)), Some(Phase::MinusOne));
    }

    #[test]
    fn transpose_antihomomorphism_on_generator_pairs() {
        let basis = build_gamma_basis();
        for a in 0..5 {
            for bb in 0..5 {
                let ab = basis.gamma(a) * basis.gamma(bb);
                assert_eq!(
                    ab.transpose(),
                    &basis.gamma(bb).transpose() * &basis.gamma(a).transpose()
                );
                assert_eq!(
                    ab.conjugate(),
                    &basis.gamma(a).conjugate() * &basis.gamma(bb).conjugate()
                );
            }
        }
    }
}
