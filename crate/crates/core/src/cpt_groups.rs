//! The two concrete discrete-symmetry groups of Cl(1,4): the set generated by
//! the parity, time-reversal and charge-conjugation blades of the spinor wave
//! equation, and the set derived from the algebra's automorphism
//! intertwiners. Both close to order-16 subgroups of the full blade group
//! G(1,4); their 8 named coset representatives index the printed tables.

use std::fmt;

use crate::automorphism_solver::AutomorphismSet;
use crate::blade_algebra::{
    blade_mul_unchecked, blade_square_sign, AlgebraSignature, Sign, SignedBlade,
};
use crate::exact_arith::Phase;
use crate::group_engine::{self, find_isomorphism, FiniteGroup, GroupHom, StandardGroupKind};

#[derive(Debug, thiserror::Error)]
pub enum CptError {
    #[error("closure has order {got}, expected {expected}")]
    WrongClosureOrder { expected: usize, got: usize },
    #[error("table cell {row}x{col} leaves the signed span of the representatives")]
    CellOutsideSpan { row: String, col: String },
    #[error("closure contains elements with imaginary phase")]
    ImaginaryPhase,
    #[error("groups live over different algebra signatures")]
    IncompatibleUniverse,
    #[error(transparent)]
    Group(#[from] group_engine::GroupError),
}

/// A blade times a fourth root of unity. The blade part always carries
/// positive sign; the sign lives in the phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhasedBlade {
    mask: u32,
    phase: Phase,
}

fn phase_rank(p: Phase) -> u8 {
    match p {
        Phase::PlusOne => 0,
        Phase::MinusOne => 1,
        Phase::PlusI => 2,
        Phase::MinusI => 3,
    }
}

fn phase_mul(a: Phase, b: Phase) -> Phase {
    // i^x * i^y with ranks mapped through {1, -1, i, -i} = i^{0,2,1,3}
    let exp = |p: Phase| match p {
        Phase::PlusOne => 0u8,
        Phase::MinusOne => 2,
        Phase::PlusI => 1,
        Phase::MinusI => 3,
    };
    match (exp(a) + exp(b)) % 4 {
        0 => Phase::PlusOne,
        1 => Phase::PlusI,
        2 => Phase::MinusOne,
        _ => Phase::MinusI,
    }
}

impl PartialOrd for PhasedBlade {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PhasedBlade {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.mask.count_ones(), self.mask, phase_rank(self.phase)).cmp(&(
            other.mask.count_ones(),
            other.mask,
            phase_rank(other.phase),
        ))
    }
}

impl PhasedBlade {
    pub fn from_signed(b: SignedBlade) -> Self {
        PhasedBlade {
            mask: b.mask(),
            phase: match b.sign() {
                Sign::Plus => Phase::PlusOne,
                Sign::Minus => Phase::MinusOne,
            },
        }
    }

    pub fn with_phase(b: SignedBlade, phase: Phase) -> Self {
        let base = match b.sign() {
            Sign::Plus => Phase::PlusOne,
            Sign::Minus => Phase::MinusOne,
        };
        PhasedBlade {
            mask: b.mask(),
            phase: phase_mul(base, phase),
        }
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// The positive-sign blade carrying the same monomial.
    pub fn representative(&self) -> SignedBlade {
        SignedBlade::new(self.mask, Sign::Plus)
    }

    pub fn to_signed(&self) -> Option<SignedBlade> {
        match self.phase {
            Phase::PlusOne => Some(SignedBlade::new(self.mask, Sign::Plus)),
            Phase::MinusOne => Some(SignedBlade::new(self.mask, Sign::Minus)),
            _ => None,
        }
    }

    pub fn mul(sig: AlgebraSignature, a: PhasedBlade, b: PhasedBlade) -> PhasedBlade {
        let product = blade_mul_unchecked(sig, a.representative(), b.representative());
        let mut phase = phase_mul(a.phase, b.phase);
        if product.sign() == Sign::Minus {
            phase = phase_mul(phase, Phase::MinusOne);
        }
        PhasedBlade {
            mask: product.mask(),
            phase,
        }
    }

    /// Sign of the square; the square of a phased blade is always ±1.
    pub fn square_sign(&self, sig: AlgebraSignature) -> Sign {
        let blade_sq = blade_square_sign(sig, self.representative());
        match self.phase {
            Phase::PlusOne | Phase::MinusOne => blade_sq,
            Phase::PlusI | Phase::MinusI => blade_sq.flip(),
        }
    }
}

impl fmt::Display for PhasedBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.phase {
            Phase::PlusOne => "",
            Phase::MinusOne => "-",
            Phase::PlusI => "i*",
            Phase::MinusI => "-i*",
        };
        write!(f, "{}{}", prefix, self.representative().label())
    }
}

/// The eight named elements of a discrete-symmetry set, with the phases of
/// the three generating transformations.
#[derive(Debug, Clone)]
pub struct CptElementSet {
    sig: AlgebraSignature,
    names: [&'static str; 8],
    elements: [PhasedBlade; 8],
}

/// The seven signs (a,..,g): squares of the elements in slots 1..7.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CptSignature(pub [Sign; 7]);

impl fmt::Display for CptSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An order-16 blade subgroup of G(1,4), kept with its concrete elements so
/// containment checks stay meaningful.
#[derive(Debug, Clone)]
pub struct BladeGroup {
    pub sig: AlgebraSignature,
    pub elements: Vec<SignedBlade>,
    pub group: FiniteGroup,
}

/// A computed 8x8 table of signed labels over the set's representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedTable {
    /// Unsigned representative labels, row = column order.
    pub labels: Vec<String>,
    /// cells[r][c] = row element times column element, as a signed label.
    pub cells: Vec<Vec<String>>,
}

const DT_NAMES: [&'static str; 8] = ["1", "P", "T", "PT", "C", "CP", "CT", "CPT"];
const EXT_NAMES: [&'static str; 8] = ["I", "W", "E", "C", "Pi", "K", "S", "F"];

/// Builds the wave-equation symmetry set at unit phases: P = γ0γ4, T = γ0,
/// C = γ2, with the composites as literal blade products.
pub fn build_dt_set() -> CptElementSet {
    build_dt_set_with_phases([Phase::PlusOne; 3])
}

/// Same set with configurable phases for P, T, C; any fourth root of unity
/// is accepted. Everything downstream of the unit-phase default also works
/// for ±1 phases; imaginary phases push the closure to order 32.
pub fn build_dt_set_with_phases(phases: [Phase; 3]) -> CptElementSet {
    let sig = AlgebraSignature::new(1, 4);
    let b = |label: &str| SignedBlade::parse(label).unwrap();
    let p = PhasedBlade::with_phase(b("g04"), phases[0]);
    let t = PhasedBlade::with_phase(b("g0"), phases[1]);
    let c = PhasedBlade::with_phase(b("g2"), phases[2]);
    let mul = |x, y| PhasedBlade::mul(sig, x, y);
    let pt = mul(p, t);
    let cp = mul(c, p);
    let ct = mul(c, t);
    let cpt = mul(mul(c, p), t);
    CptElementSet {
        sig,
        names: DT_NAMES,
        elements: [
            PhasedBlade::from_signed(SignedBlade::one()),
            p,
            t,
            pt,
            c,
            cp,
            ct,
            cpt,
        ],
    }
}

/// Wraps a derived automorphism set in the same container, slotting
/// I, W, E, C, Π, K, S, F into the positions of 1, P, T, PT, C, CP, CT, CPT.
pub fn build_ext_set(derived: &AutomorphismSet) -> CptElementSet {
    let sig = AlgebraSignature::new(1, 4);
    let named = derived.named();
    let mut elements = [PhasedBlade::from_signed(SignedBlade::one()); 8];
    for (slot, (_, blade)) in named.iter().enumerate() {
        elements[slot] = PhasedBlade::from_signed(*blade);
    }
    CptElementSet {
        sig,
        names: EXT_NAMES,
        elements,
    }
}

impl CptElementSet {
    pub fn signature(&self) -> AlgebraSignature {
        self.sig
    }

    pub fn names(&self) -> &[&'static str; 8] {
        &self.names
    }

    pub fn elements(&self) -> &[PhasedBlade; 8] {
        &self.elements
    }

    /// Positive-sign representatives, in slot order; these index the table.
    pub fn representatives(&self) -> [SignedBlade; 8] {
        let mut out = [SignedBlade::one(); 8];
        for (i, e) in self.elements.iter().enumerate() {
            out[i] = e.representative();
        }
        out
    }

    pub fn has_real_phases(&self) -> bool {
        self.elements
            .iter()
            .all(|e| matches!(e.phase(), Phase::PlusOne | Phase::MinusOne))
    }
}

/// The 8x8 signed multiplication table over the set's representatives.
pub fn cayley_table_signed(set: &CptElementSet) -> Result<SignedTable, CptError> {
    let sig = set.sig;
    let reps = set.representatives();
    let labels: Vec<String> = reps.iter().map(|r| r.label()).collect();
    let mut cells = Vec::with_capacity(8);
    for r in 0..8 {
        let mut row = Vec::with_capacity(8);
        for c in 0..8 {
            let product = blade_mul_unchecked(sig, reps[r], reps[c]);
            if !reps.iter().any(|rep| rep.mask() == product.mask()) {
                return Err(CptError::CellOutsideSpan {
                    row: labels[r].clone(),
                    col: labels[c].clone(),
                });
            }
            row.push(product.label());
        }
        cells.push(row);
    }
    Ok(SignedTable { labels, cells })
}

/// The seven square signs in slot order (P, T, PT, C, CP, CT, CPT).
pub fn compute_signature(set: &CptElementSet) -> CptSignature {
    let mut signs = [Sign::Plus; 7];
    for (i, e) in set.elements.iter().skip(1).enumerate() {
        signs[i] = e.square_sign(set.sig);
    }
    CptSignature(signs)
}

/// Closure of the eight elements under blade multiplication. For real phases
/// this is the full order-16 symmetry group containing -1.
pub fn signed_closure(set: &CptElementSet) -> Result<BladeGroup, CptError> {
    if !set.has_real_phases() {
        return Err(CptError::ImaginaryPhase);
    }
    let sig = set.sig;
    let seed: Vec<SignedBlade> = set
        .elements
        .iter()
        .map(|e| e.to_signed().expect("real phase"))
        .collect();
    let closure =
        group_engine::generate_closure(&seed, |a, b| blade_mul_unchecked(sig, *a, *b), 64)?;
    if closure.group.order() != 16 {
        return Err(CptError::WrongClosureOrder {
            expected: 16,
            got: closure.group.order(),
        });
    }
    Ok(BladeGroup {
        sig,
        elements: closure.elements,
        group: closure.group,
    })
}

/// Closure in the phased universe, for exploring non-unit phases. Order 16
/// for real phases, up to 32 otherwise.
pub fn phased_closure(set: &CptElementSet) -> Result<group_engine::Closure<PhasedBlade>, CptError> {
    let sig = set.sig;
    Ok(group_engine::generate_closure(
        &set.elements[..],
        |a, b| PhasedBlade::mul(sig, *a, *b),
        128,
    )?)
}

/// The full blade group of Cl(p,q): closure of the signed generators.
pub fn build_blade_group(sig: AlgebraSignature) -> Result<BladeGroup, CptError> {
    let mut seed = Vec::new();
    for i in 0..sig.dim() {
        seed.push(SignedBlade::generator(i));
        seed.push(SignedBlade::generator(i).negate());
    }
    let limit = 1usize << (sig.dim() + 1);
    let closure =
        group_engine::generate_closure(&seed, |a, b| blade_mul_unchecked(sig, *a, *b), limit)?;
    Ok(BladeGroup {
        sig,
        elements: closure.elements,
        group: closure.group,
    })
}

/// The order-64 blade group G(1,4).
pub fn build_g14() -> BladeGroup {
    build_blade_group(AlgebraSignature::new(1, 4)).expect("G(1,4) closure is finite")
}

/// True containment check between blade groups over the same algebra:
/// returns the index embedding when every element of `sub` lies in `amb`.
pub fn subgroup_check(sub: &BladeGroup, amb: &BladeGroup) -> Result<Option<Vec<usize>>, CptError> {
    if sub.sig != amb.sig {
        return Err(CptError::IncompatibleUniverse);
    }
    let mut embedding = Vec::with_capacity(sub.elements.len());
    for e in &sub.elements {
        match amb.elements.iter().position(|x| x == e) {
            Some(i) => embedding.push(i),
            None => return Ok(None),
        }
    }
    Ok(Some(embedding))
}

/// Outcome of the central-product decomposition check for G(1,4).
#[derive(Debug, Clone)]
pub struct SalingarosReport {
    pub construct_order: usize,
    pub construct_order_structure: (usize, usize),
    pub g14_order_structure: (usize, usize),
    pub construct_center_size: usize,
    pub g14_center_size: usize,
    pub isomorphism: Option<GroupHom>,
}

impl SalingarosReport {
    pub fn passed(&self) -> bool {
        self.isomorphism.is_some()
            && self.construct_order == 64
            && self.construct_order_structure == self.g14_order_structure
            && self.construct_center_size == self.g14_center_size
    }
}

/// Builds Q8 ∘ D8 ∘ (Z2 x Z2) over the designated involutions and compares
/// it with G(1,4) by explicit isomorphism.
pub fn salingaros_check() -> Result<SalingarosReport, CptError> {
    let q8 = group_engine::make_standard_group(StandardGroupKind::Quaternion8)?;
    let d8 = group_engine::make_standard_group(StandardGroupKind::Dihedral8)?;
    let v4 = group_engine::make_standard_group(StandardGroupKind::Viergroup)?;

    let n32 = group_engine::central_product(
        &q8.group,
        q8.central_involution.expect("Q8 has a central involution"),
        &d8.group,
        d8.central_involution.expect("D8 has a central involution"),
    )?;
    // the central involution of the order-32 extraspecial factor
    let n32_center = n32.center();
    let n32_involution = *n32_center
        .iter()
        .find(|&&z| z != n32.identity())
        .expect("extraspecial center has an involution");
    let construct = group_engine::central_product(
        &n32,
        n32_involution,
        &v4.group,
        v4.central_involution.expect("viergroup involution"),
    )?;

    let g14 = build_g14();
    let isomorphism = find_isomorphism(&construct, &g14.group);
    Ok(SalingarosReport {
        construct_order: construct.order(),
        construct_order_structure: construct.order_structure().pair(),
        g14_order_structure: g14.group.order_structure().pair(),
        construct_center_size: construct.center().len(),
        g14_center_size: g14.group.center().len(),
        isomorphism,
    })
}
