//! Generic finite-group machinery: closure from generators, Cayley tables,
//! order structure, centers, quotients, direct and central products, a few
//! standard small 2-groups, and an explicit isomorphism search.
//!
//! Groups are stored as plain Cayley tables over opaque element labels, so
//! the same container serves blade groups, abstract comparison groups, and
//! every quotient or product built from them.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt::Display;
use std::hash::Hash;

#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("closure exceeded the limit of {limit} elements")]
    ClosureExceedsLimit { limit: usize },
    #[error("closure seed must be non-empty")]
    EmptySeed,
    #[error("table is not a Latin square at row {row}")]
    NotLatinSquare { row: usize },
    #[error("no two-sided identity element found")]
    NoIdentity,
    #[error("associativity fails at triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("designated subgroup is not a subgroup")]
    NotSubgroup,
    #[error("designated subgroup is not central")]
    NotCentral,
    #[error("designated element {element} is not a central involution")]
    NotCentralInvolution { element: usize },
    #[error("unsupported standard group kind")]
    UnsupportedKind,
}

/// A finite group as an indexed element list plus a Cayley table.
///
/// `table[r][c]` is the index of (element r) · (element c), in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

/// Histogram of element orders, identity excluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderStructure {
    histogram: BTreeMap<u32, usize>,
}

impl OrderStructure {
    pub fn histogram(&self) -> &BTreeMap<u32, usize> {
        &self.histogram
    }

    pub fn count(&self, order: u32) -> usize {
        self.histogram.get(&order).copied().unwrap_or(0)
    }

    /// The (n₂, n₄) pair: counts of elements of order 2 and order 4.
    pub fn pair(&self) -> (usize, usize) {
        (self.count(2), self.count(4))
    }

    pub fn total(&self) -> usize {
        self.histogram.values().sum()
    }
}

/// An explicit map between two groups, indexed domain element → codomain
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    pub mapping: Vec<usize>,
}

impl GroupHom {
    /// Exhaustively checks h(x·y) = h(x)·h(y) on all pairs, plus identity
    /// preservation and bijectivity.
    pub fn verify_isomorphism(&self, a: &FiniteGroup, b: &FiniteGroup) -> bool {
        if a.order() != b.order() || self.mapping.len() != a.order() {
            return false;
        }
        let mut seen = vec![false; b.order()];
        for &img in &self.mapping {
            if img >= b.order() || seen[img] {
                return false;
            }
            seen[img] = true;
        }
        if self.mapping[a.identity()] != b.identity() {
            return false;
        }
        for x in 0..a.order() {
            for y in 0..a.order() {
                if self.mapping[a.op(x, y)] != b.op(self.mapping[x], self.mapping[y]) {
                    return false;
                }
            }
        }
        true
    }
}

impl FiniteGroup {
    /// Validates and wraps a Cayley table: Latin-square rows and columns, a
    /// two-sided identity, two-sided inverses, and (for orders up to 64)
    /// exhaustive associativity.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = labels.len();
        assert_eq!(table.len(), n, "table height must match element count");
        for (r, row) in table.iter().enumerate() {
            assert_eq!(row.len(), n, "table width must match element count");
            let mut seen = vec![false; n];
            for &v in row {
                if v >= n || seen[v] {
                    return Err(GroupError::NotLatinSquare { row: r });
                }
                seen[v] = true;
            }
        }
        for c in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                if seen[row[c]] {
                    return Err(GroupError::NotLatinSquare { row: c });
                }
                seen[row[c]] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        if n <= 64 {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if table[table[x][y]][z] != table[x][table[y][z]] {
                            return Err(GroupError::NotAssociative(x, y, z));
                        }
                    }
                }
            }
        }
        let mut inverses = vec![0; n];
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or(GroupError::NoInverse { element: x })?;
            inverses[x] = inv;
        }
        Ok(FiniteGroup {
            labels,
            table,
            identity,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn element_order(&self, a: usize) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn order_structure(&self) -> OrderStructure {
        let mut histogram = BTreeMap::new();
        for x in 0..self.order() {
            if x == self.identity {
                continue;
            }
            *histogram.entry(self.element_order(x)).or_insert(0) += 1;
        }
        OrderStructure { histogram }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|x| (0..self.order()).all(|y| self.op(x, y) == self.op(y, x)))
    }

    pub fn exponent(&self) -> u32 {
        (0..self.order())
            .map(|x| self.element_order(x))
            .fold(1u32, lcm)
    }

    /// Elements commuting with every element.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| (0..self.order()).all(|x| self.op(z, x) == self.op(x, z)))
            .collect()
    }

    /// Indices of the subgroup generated by `seed`, within this group.
    pub fn generated_subgroup(&self, seed: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[self.identity] = true;
        let mut worklist: Vec<usize> = vec![self.identity];
        for &s in seed {
            if !member[s] {
                member[s] = true;
                worklist.push(s);
            }
        }
        let mut frontier = 0;
        while frontier < worklist.len() {
            let x = worklist[frontier];
            frontier += 1;
            let snapshot = worklist.clone();
            for y in snapshot {
                for z in [self.op(x, y), self.op(y, x)] {
                    if !member[z] {
                        member[z] = true;
                        worklist.push(z);
                    }
                }
            }
        }
        worklist.sort_unstable();
        worklist
    }

    /// Quotient by a central subgroup. Cosets are labeled by their
    /// smallest-index representative.
    pub fn quotient_by_central_subgroup(&self, z: &[usize]) -> Result<FiniteGroup, GroupError> {
        let mut zs: Vec<usize> = z.to_vec();
        zs.sort_unstable();
        zs.dedup();
        if !zs.contains(&self.identity) {
            return Err(GroupError::NotSubgroup);
        }
        for &a in &zs {
            for &b in &zs {
                if !zs.contains(&self.op(a, b)) {
                    return Err(GroupError::NotSubgroup);
                }
            }
            if !zs.contains(&self.inverse(a)) {
                return Err(GroupError::NotSubgroup);
            }
        }
        let center = self.center();
        if zs.iter().any(|a| !center.contains(a)) {
            return Err(GroupError::NotCentral);
        }

        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &h in &zs {
                coset_of[self.op(h, x)] = id;
            }
        }
        let m = reps.len();
        let labels = reps.iter().map(|&r| format!("[{}]", self.labels[r])).collect();
        let mut table = vec![vec![0usize; m]; m];
        for (i, &ri) in reps.iter().enumerate() {
            for (j, &rj) in reps.iter().enumerate() {
                table[i][j] = coset_of[self.op(ri, rj)];
            }
        }
        FiniteGroup::from_table(labels, table)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Result of generating a closure: the concrete elements in canonical order,
/// paired with the abstract group over their indices.
#[derive(Debug, Clone)]
pub struct Closure<T> {
    pub elements: Vec<T>,
    pub group: FiniteGroup,
}

/// Smallest multiplication-closed superset of `seed`, as a validated group.
/// Elements are sorted by their natural order, so the result is deterministic
/// regardless of seed order.
pub fn generate_closure<T, F>(seed: &[T], mul: F, limit: usize) -> Result<Closure<T>, GroupError>
where
    T: Clone + Eq + Hash + Ord + Display,
    F: Fn(&T, &T) -> T,
{
    if seed.is_empty() {
        return Err(GroupError::EmptySeed);
    }
    let mut elements: Vec<T> = Vec::new();
    let mut seen: HashMap<T, ()> = HashMap::new();
    for s in seed {
        if seen.insert(s.clone(), ()).is_none() {
            elements.push(s.clone());
        }
    }
    let mut frontier = 0;
    while frontier < elements.len() {
        let x = elements[frontier].clone();
        frontier += 1;
        for i in 0..elements.len() {
            let y = elements[i].clone();
            for z in [mul(&x, &y), mul(&y, &x)] {
                if seen.insert(z.clone(), ()).is_none() {
                    elements.push(z);
                    if elements.len() > limit {
                        return Err(GroupError::ClosureExceedsLimit { limit });
                    }
                }
            }
        }
    }
    elements.sort();
    let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let n = elements.len();
    let mut table = vec![vec![0usize; n]; n];
    for r in 0..n {
        for c in 0..n {
            let product = mul(&elements[r], &elements[c]);
            table[r][c] = *index.get(&product).ok_or(GroupError::NotSubgroup)?;
        }
    }
    let labels = elements.iter().map(|e| e.to_string()).collect();
    let group = FiniteGroup::from_table(labels, table)?;
    Ok(Closure { elements, group })
}

/// Componentwise product group of order |a|·|b|.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let n = a.order();
    let m = b.order();
    let mut labels = Vec::with_capacity(n * m);
    for i in 0..n {
        for j in 0..m {
            labels.push(format!("({},{})", a.label(i), b.label(j)));
        }
    }
    let mut table = vec![vec![0usize; n * m]; n * m];
    for i1 in 0..n {
        for j1 in 0..m {
            for i2 in 0..n {
                for j2 in 0..m {
                    table[i1 * m + j1][i2 * m + j2] = a.op(i1, i2) * m + b.op(j1, j2);
                }
            }
        }
    }
    FiniteGroup::from_table(labels, table).expect("direct product of valid groups is valid")
}

/// Central product (a × b) / {(1,1), (a0,b0)} over designated central
/// involutions a0, b0. Order |a|·|b|/2.
pub fn central_product(
    a: &FiniteGroup,
    a0: usize,
    b: &FiniteGroup,
    b0: usize,
) -> Result<FiniteGroup, GroupError> {
    for (g, e) in [(a, a0), (b, b0)] {
        if e == g.identity() || g.op(e, e) != g.identity() || !g.center().contains(&e) {
            return Err(GroupError::NotCentralInvolution { element: e });
        }
    }
    let product = direct_product(a, b);
    let m = b.order();
    let kernel = [product.identity(), a0 * m + b0];
    product.quotient_by_central_subgroup(&kernel)
}

/// The named small groups used for the structure comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardGroupKind {
    Cyclic(usize),
    Dihedral8,
    Quaternion8,
    Viergroup,
}

/// A standard group together with its designated central involution, where
/// one exists (the input slot for central products).
#[derive(Debug, Clone)]
pub struct StandardGroup {
    pub group: FiniteGroup,
    pub central_involution: Option<usize>,
}

pub fn make_standard_group(kind: StandardGroupKind) -> Result<StandardGroup, GroupError> {
    match kind {
        StandardGroupKind::Cyclic(n) => {
            if n == 0 {
                return Err(GroupError::UnsupportedKind);
            }
            let labels = (0..n).map(|i| format!("c{i}")).collect();
            let mut table = vec![vec![0usize; n]; n];
            for i in 0..n {
                for j in 0..n {
                    table[i][j] = (i + j) % n;
                }
            }
            Ok(StandardGroup {
                group: FiniteGroup::from_table(labels, table)?,
                central_involution: if n % 2 == 0 { Some(n / 2) } else { None },
            })
        }
        StandardGroupKind::Dihedral8 => {
            // elements r^i s^j, with s r = r^{-1} s
            let labels: Vec<String> = (0..8)
                .map(|k| {
                    let (i, j) = (k / 2, k % 2);
                    match (i, j) {
                        (0, 0) => "1".to_string(),
                        (i, 0) => format!("r{i}"),
                        (0, _) => "s".to_string(),
                        (i, _) => format!("r{i}s"),
                    }
                })
                .collect();
            let mut table = vec![vec![0usize; 8]; 8];
            for k1 in 0..8 {
                for k2 in 0..8 {
                    let (i1, j1) = (k1 / 2, k1 % 2);
                    let (i2, j2) = (k2 / 2, k2 % 2);
                    let i = if j1 == 0 { (i1 + i2) % 4 } else { (i1 + 4 - i2) % 4 };
                    let j = (j1 + j2) % 2;
                    table[k1][k2] = i * 2 + j;
                }
            }
            let group = FiniteGroup::from_table(labels, table)?;
            let central_involution = group.index_of("r2");
            Ok(StandardGroup {
                group,
                central_involution,
            })
        }
        StandardGroupKind::Quaternion8 => {
            // elements ±1, ±i, ±j, ±k encoded as (unit, sign)
            let units = ["1", "i", "j", "k"];
            let labels: Vec<String> = (0..8)
                .map(|e| {
                    let (u, s) = (e / 2, e % 2);
                    if s == 0 {
                        units[u].to_string()
                    } else {
                        format!("-{}", units[u])
                    }
                })
                .collect();
            // unit multiplication: table of (result unit, sign flip)
            let unit_mul = |a: usize, b: usize| -> (usize, usize) {
                match (a, b) {
                    (0, x) => (x, 0),
                    (x, 0) => (x, 0),
                    (1, 1) => (0, 1),
                    (2, 2) => (0, 1),
                    (3, 3) => (0, 1),
                    (1, 2) => (3, 0),
                    (2, 1) => (3, 1),
                    (2, 3) => (1, 0),
                    (3, 2) => (1, 1),
                    (3, 1) => (2, 0),
                    (1, 3) => (2, 1),
                    _ => unreachable!(),
                }
            };
            let mut table = vec![vec![0usize; 8]; 8];
            for e1 in 0..8 {
                for e2 in 0..8 {
                    let (u1, s1) = (e1 / 2, e1 % 2);
                    let (u2, s2) = (e2 / 2, e2 % 2);
                    let (u, flip) = unit_mul(u1, u2);
                    table[e1][e2] = u * 2 + (s1 + s2 + flip) % 2;
                }
            }
            let group = FiniteGroup::from_table(labels, table)?;
            let central_involution = group.index_of("-1");
            Ok(StandardGroup {
                group,
                central_involution,
            })
        }
        StandardGroupKind::Viergroup => {
            let labels = vec!["1".into(), "a".into(), "b".into(), "ab".into()];
            let mut table = vec![vec![0usize; 4]; 4];
            for i in 0..4 {
                for j in 0..4 {
                    table[i][j] = i ^ j;
                }
            }
            let group = FiniteGroup::from_table(labels, table)?;
            Ok(StandardGroup {
                group,
                // first generator under the canonical ordering
                central_involution: Some(1),
            })
        }
    }
}

/// Greedy generating set: repeatedly add the element whose inclusion most
/// enlarges the generated subgroup. Deterministic under the element order.
pub fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut generated = g.generated_subgroup(&[]);
    while generated.len() < g.order() {
        let mut best: Option<(usize, usize)> = None; // (size, element)
        for x in 0..g.order() {
            if generated.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = gens.clone();
            seed.push(x);
            let size = g.generated_subgroup(&seed).len();
            if best.map_or(true, |(s, _)| size > s) {
                best = Some((size, x));
            }
        }
        let (_, x) = best.expect("group not fully generated but no candidate found");
        gens.push(x);
        generated = g.generated_subgroup(&gens);
    }
    gens
}

/// Derivation of a subgroup from generators: each element in BFS order is
/// either the identity, a generator, or a product of two earlier entries.
struct Derivation {
    /// (element index in parent group, how it arises)
    steps: Vec<(usize, Step)>,
}

enum Step {
    Identity,
    Generator(usize),
    /// Product of the elements at the two earlier step positions.
    Product(usize, usize),
}

fn derive_subgroup(g: &FiniteGroup, gens: &[usize]) -> Derivation {
    let mut steps: Vec<(usize, Step)> = vec![(g.identity(), Step::Identity)];
    let mut pos_of: HashMap<usize, usize> = HashMap::new();
    pos_of.insert(g.identity(), 0);
    for (k, &gen) in gens.iter().enumerate() {
        if !pos_of.contains_key(&gen) {
            pos_of.insert(gen, steps.len());
            steps.push((gen, Step::Generator(k)));
        }
    }
    let mut frontier = 0;
    while frontier < steps.len() {
        let x_pos = frontier;
        frontier += 1;
        let x = steps[x_pos].0;
        let mut y_pos = 0;
        while y_pos < steps.len() {
            let y = steps[y_pos].0;
            for (l, r, prod) in [(x_pos, y_pos, g.op(x, y)), (y_pos, x_pos, g.op(y, x))] {
                if !pos_of.contains_key(&prod) {
                    pos_of.insert(prod, steps.len());
                    steps.push((prod, Step::Product(l, r)));
                }
            }
            y_pos += 1;
        }
    }
    Derivation { steps }
}

/// Backtracking isomorphism search with order-class pruning. Returns the
/// first isomorphism found under the deterministic candidate order, or None.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<GroupHom> {
    if a.order() != b.order() {
        return None;
    }
    if a.order_structure() != b.order_structure() {
        return None;
    }
    if a.is_abelian() != b.is_abelian() {
        return None;
    }
    let gens = greedy_generators(a);
    // Precompute, for each prefix of the generator list, the derivation of
    // the subgroup it generates.
    let derivations: Vec<Derivation> = (0..=gens.len())
        .map(|m| derive_subgroup(a, &gens[..m]))
        .collect();
    let a_orders: Vec<u32> = (0..a.order()).map(|x| a.element_order(x)).collect();
    let b_orders: Vec<u32> = (0..b.order()).map(|x| b.element_order(x)).collect();

    let mut images: Vec<usize> = Vec::new();
    search(
        a, b, &gens, &derivations, &a_orders, &b_orders, &mut images,
    )
    .filter(|h| h.verify_isomorphism(a, b))
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    derivations: &[Derivation],
    a_orders: &[u32],
    b_orders: &[u32],
    images: &mut Vec<usize>,
) -> Option<GroupHom> {
    let m = images.len();
    if let Some(partial) = extend_partial(a, b, &derivations[m], images, a_orders, b_orders) {
        if m == gens.len() {
            let mapping = partial_to_full(a, &derivations[m], &partial);
            return Some(GroupHom { mapping });
        }
        let want = a_orders[gens[m]];
        for candidate in 0..b.order() {
            if b_orders[candidate] != want {
                continue;
            }
            images.push(candidate);
            if let Some(h) = search(a, b, gens, derivations, a_orders, b_orders, images) {
                return Some(h);
            }
            images.pop();
        }
    }
    None
}

/// Maps the derived subgroup through the generator images. Returns the image
/// of each derivation step, or None when the map cannot be a monomorphism
/// (image collision, order mismatch, or product disagreement).
fn extend_partial(
    a: &FiniteGroup,
    b: &FiniteGroup,
    derivation: &Derivation,
    gen_images: &[usize],
    a_orders: &[u32],
    b_orders: &[u32],
) -> Option<Vec<usize>> {
    let mut image = Vec::with_capacity(derivation.steps.len());
    let mut used = vec![false; b.order()];
    for (element, step) in &derivation.steps {
        let img = match step {
            Step::Identity => b.identity(),
            Step::Generator(k) => gen_images[*k],
            Step::Product(x, y) => b.op(image[*x], image[*y]),
        };
        if used[img] || b_orders[img] != a_orders[*element] {
            return None;
        }
        used[img] = true;
        image.push(img);
    }
    // full homomorphism check within the derived subgroup
    let index_in_steps: HashMap<usize, usize> = derivation
        .steps
        .iter()
        .enumerate()
        .map(|(pos, (element, _))| (*element, pos))
        .collect();
    for (xi, (x, _)) in derivation.steps.iter().enumerate() {
        for (yi, (y, _)) in derivation.steps.iter().enumerate() {
            let prod = a.op(*x, *y);
            let pos = *index_in_steps.get(&prod)?;
            if image[pos] != b.op(image[xi], image[yi]) {
                return None;
            }
        }
    }
    Some(image)
}

fn partial_to_full(a: &FiniteGroup, derivation: &Derivation, image: &[usize]) -> Vec<usize> {
    let mut mapping = vec![usize::MAX; a.order()];
    for (pos, (element, _)) in derivation.steps.iter().enumerate() {
        mapping[*element] = image[pos];
    }
    mapping
}
