//! Cocycle-induced gradings on finite groupoid algebras: identity component,
//! homogeneous components, the epsilon local-unit witnesses, and the graded
//! regularity decision with its homogeneous brute-force oracle.

use alloc::{
    collections::{BTreeMap, BTreeSet},
    format,
    vec,
    vec::Vec,
};
use core::fmt;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    element_is_regular, groupoid_algebra, AlgElement, OracleMethod, OracleOutcome, OracleVerdict,
    StructureConstAlgebra,
};
use crate::decision::{Condition, RegularityDecision};
use crate::groupoid::{decide_regular_groupoid_algebra, FiniteGroupoid};
use crate::linalg::{self, Matrix};
use crate::ring::CoeffRing;

/// The grading group: the integers or a finite cyclic group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradingGroup {
    Integers,
    CyclicMod(u32),
}

/// A degree, always reduced for cyclic groups.
pub type Degree = i64;

impl GradingGroup {
    pub fn identity(&self) -> Degree {
        0
    }

    pub fn reduce(&self, d: Degree) -> Degree {
        match self {
            GradingGroup::Integers => d,
            GradingGroup::CyclicMod(k) => d.rem_euclid(*k as i64),
        }
    }

    pub fn add(&self, a: Degree, b: Degree) -> Degree {
        self.reduce(a + b)
    }

    pub fn inv(&self, a: Degree) -> Degree {
        self.reduce(-a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradingError {
    /// c(gamma delta) != c(gamma) + c(delta) at a composable pair.
    NotFunctorial(usize, usize),
    UnitNotDegreeZero(usize),
    DegreeCountMismatch,
    NotHomogeneous,
    /// The membership certificate for an epsilon witness failed to solve.
    MembershipFailed,
    UnsupportedRing,
}

impl fmt::Display for GradingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradingError::NotFunctorial(a, b) => {
                write!(f, "cocycle not multiplicative at pair ({a},{b})")
            }
            GradingError::UnitNotDegreeZero(u) => write!(f, "unit arrow {u} has nonzero degree"),
            GradingError::DegreeCountMismatch => write!(f, "degree list length != arrow count"),
            GradingError::NotHomogeneous => write!(f, "element is not homogeneous"),
            GradingError::MembershipFailed => write!(f, "epsilon membership certificate failed"),
            GradingError::UnsupportedRing => write!(f, "operation requires field coefficients"),
        }
    }
}

/// An arrow-indexed cocycle into the grading group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub group: GradingGroup,
    degrees: Vec<Degree>,
}

impl Cocycle {
    /// Validates functoriality c(ab) = c(a) + c(b) on all composable pairs
    /// and that units have degree zero.
    pub fn new(
        groupoid: &FiniteGroupoid,
        group: GradingGroup,
        degrees: Vec<Degree>,
    ) -> Result<Self, GradingError> {
        if degrees.len() != groupoid.arrow_count() {
            return Err(GradingError::DegreeCountMismatch);
        }
        let degrees: Vec<Degree> = degrees.into_iter().map(|d| group.reduce(d)).collect();
        for a in 0..groupoid.arrow_count() {
            for b in 0..groupoid.arrow_count() {
                if let Some(c) = groupoid.compose(a, b) {
                    if degrees[c] != group.add(degrees[a], degrees[b]) {
                        return Err(GradingError::NotFunctorial(a, b));
                    }
                }
            }
        }
        for u in 0..groupoid.unit_count() {
            let e = groupoid.unit_arrow(u);
            if degrees[e] != group.identity() {
                return Err(GradingError::UnitNotDegreeZero(e));
            }
        }
        Ok(Cocycle { group, degrees })
    }

    pub fn trivial(groupoid: &FiniteGroupoid, group: GradingGroup) -> Self {
        Cocycle {
            group,
            degrees: vec![0; groupoid.arrow_count()],
        }
    }

    pub fn degree(&self, arrow: usize) -> Degree {
        self.degrees[arrow]
    }

    /// Degrees occurring among arrows, sorted.
    pub fn degree_set(&self) -> Vec<Degree> {
        let set: BTreeSet<Degree> = self.degrees.iter().copied().collect();
        set.into_iter().collect()
    }
}

/// A groupoid algebra together with the grading induced by a cocycle.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub groupoid: FiniteGroupoid,
    pub cocycle: Cocycle,
    pub algebra: StructureConstAlgebra,
}

impl GradedAlgebra {
    pub fn new(groupoid: FiniteGroupoid, cocycle: Cocycle, ring: &CoeffRing) -> Self {
        let algebra = groupoid_algebra(&groupoid, ring);
        GradedAlgebra {
            groupoid,
            cocycle,
            algebra,
        }
    }

    /// Basis arrows of one degree.
    pub fn component_basis(&self, h: Degree) -> Vec<usize> {
        (0..self.groupoid.arrow_count())
            .filter(|&a| self.cocycle.degree(a) == h)
            .collect()
    }

    pub fn degree_of_element(&self, a: &AlgElement) -> Result<Degree, GradingError> {
        let degrees: BTreeSet<Degree> = a
            .keys()
            .map(|&k| self.cocycle.degree(k as usize))
            .collect();
        match degrees.len() {
            0 => Ok(self.cocycle.group.identity()),
            1 => Ok(degrees.into_iter().next().unwrap()),
            _ => Err(GradingError::NotHomogeneous),
        }
    }

    pub fn is_homogeneous(&self, a: &AlgElement) -> bool {
        self.degree_of_element(a).is_ok()
    }

    pub fn random_homogeneous(&self, h: Degree, rng: &mut ChaCha8Rng) -> AlgElement {
        use rand::Rng;
        let ring = &self.algebra.ring;
        let mut out = AlgElement::new();
        for a in self.component_basis(h) {
            let c = match ring.size() {
                Some(size) => ring.element_from_index(rng.gen_range(0..size)),
                None => ring.from_int(rng.gen_range(-9i64..=9)),
            };
            if !ring.is_zero(&c) {
                out.insert(a as u32, c);
            }
        }
        out
    }
}

/// The clopen subgroupoid c^{-1}(identity), with the arrow re-indexing.
///
/// Contains all units; closure under composition and inverses is re-verified
/// by the groupoid constructor.
pub fn identity_component(
    groupoid: &FiniteGroupoid,
    cocycle: &Cocycle,
) -> (FiniteGroupoid, BTreeMap<usize, usize>) {
    let kept: Vec<usize> = (0..groupoid.arrow_count())
        .filter(|&a| cocycle.degree(a) == cocycle.group.identity())
        .collect();
    let arrow_map: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let arrows: Vec<(usize, usize)> = kept
        .iter()
        .map(|&a| (groupoid.src(a), groupoid.tgt(a)))
        .collect();
    let mut compose_list = Vec::new();
    for &a in &kept {
        for &b in &kept {
            if let Some(c) = groupoid.compose(a, b) {
                compose_list.push((arrow_map[&a], arrow_map[&b], arrow_map[&c]));
            }
        }
    }
    let labels = kept.iter().map(|&a| groupoid.arrow_label(a)).collect();
    let g = FiniteGroupoid::from_parts(groupoid.unit_count(), &arrows, &compose_list, Some(labels))
        .expect("identity component is a subgroupoid");
    (g, arrow_map)
}

/// Splits an element into its homogeneous components, sorted by degree.
pub fn homogeneous_components(
    graded: &GradedAlgebra,
    a: &AlgElement,
) -> Vec<(Degree, AlgElement)> {
    let mut by_degree: BTreeMap<Degree, AlgElement> = BTreeMap::new();
    for (k, c) in a {
        by_degree
            .entry(graded.cocycle.degree(*k as usize))
            .or_default()
            .insert(*k, c.clone());
    }
    by_degree.into_iter().collect()
}

/// Certificate that an element lies in A_h A_k: pairwise products of
/// homogeneous basis arrows with exact coefficients.
pub type MembershipCertificate = Vec<((usize, usize), crate::ring::Scalar)>;

/// Epsilon witnesses for a homogeneous f: indicators of the unions of
/// U_i U_i^{-1} and U_i^{-1} U_i over the singleton bisections covering
/// supp(f), together with certificates that they lie in A_h A_{h^-1} and
/// A_{h^-1} A_h respectively.
#[derive(Clone, Debug)]
pub struct EpsilonWitness {
    pub left: AlgElement,
    pub right: AlgElement,
    /// left as a combination of products b_g b_d with deg g = h,
    /// deg d = -h: entries ((g, d), coefficient).
    pub left_certificate: MembershipCertificate,
    pub right_certificate: MembershipCertificate,
}

/// Builds the epsilon witnesses for a homogeneous element.
///
/// The membership certificates are found by an exact linear solve over the
/// pairwise products of homogeneous basis arrows (over fields); the solved
/// combination is re-multiplied and checked against the witness.
pub fn epsilon_witness(
    graded: &GradedAlgebra,
    f: &AlgElement,
) -> Result<EpsilonWitness, GradingError> {
    let h = graded.degree_of_element(f)?;
    let ring = &graded.algebra.ring;
    let g = &graded.groupoid;
    let mut left_units = BTreeSet::new();
    let mut right_units = BTreeSet::new();
    for &arrow in f.keys() {
        left_units.insert(g.tgt(arrow as usize));
        right_units.insert(g.src(arrow as usize));
    }
    let mut left = AlgElement::new();
    for &u in &left_units {
        left.insert(g.unit_arrow(u) as u32, ring.one());
    }
    let mut right = AlgElement::new();
    for &u in &right_units {
        right.insert(g.unit_arrow(u) as u32, ring.one());
    }
    debug_assert_eq!(graded.algebra.mul(&left, f), *f);
    debug_assert_eq!(graded.algebra.mul(f, &right), *f);

    let hinv = graded.cocycle.group.inv(h);
    let left_certificate = membership_certificate(graded, &left, h, hinv)?;
    let right_certificate = membership_certificate(graded, &right, hinv, h)?;
    Ok(EpsilonWitness {
        left,
        right,
        left_certificate,
        right_certificate,
    })
}

/// Expresses target as an exact linear combination of products b_g b_d with
/// deg g = dg and deg d = dd, by Gaussian elimination over the products.
fn membership_certificate(
    graded: &GradedAlgebra,
    target: &AlgElement,
    dg: Degree,
    dd: Degree,
) -> Result<MembershipCertificate, GradingError> {
    let ring = &graded.algebra.ring;
    if !ring.is_field() {
        // constructive certificate: gamma gamma^{-1} products, verified
        let g = &graded.groupoid;
        let mut combo: BTreeMap<(usize, usize), crate::ring::Scalar> = BTreeMap::new();
        let mut acc = graded.algebra.zero_element();
        for &arrow_u in target.keys() {
            let arrow_u = arrow_u as usize;
            // find an arrow of degree dg whose product with its inverse is
            // this unit indicator
            let found = (0..g.arrow_count()).find(|&a| {
                graded.cocycle.degree(a) == dg
                    && graded.cocycle.degree(g.inverse(a)) == dd
                    && g.compose(a, g.inverse(a)) == Some(arrow_u)
            });
            let Some(a) = found else {
                return Err(GradingError::MembershipFailed);
            };
            combo.insert((a, g.inverse(a)), ring.one());
            let prod = graded.algebra.mul(
                &graded.algebra.basis_element(a),
                &graded.algebra.basis_element(g.inverse(a)),
            );
            acc = graded.algebra.add(&acc, &prod);
        }
        if acc != *target {
            return Err(GradingError::MembershipFailed);
        }
        return Ok(combo.into_iter().collect());
    }
    let gs = graded.component_basis(dg);
    let ds = graded.component_basis(dd);
    let pairs: Vec<(usize, usize)> = gs
        .iter()
        .flat_map(|&a| ds.iter().map(move |&b| (a, b)))
        .collect();
    let dim = graded.algebra.dim();
    let mut m = Matrix::zeros(ring, dim, pairs.len());
    for (col, &(a, b)) in pairs.iter().enumerate() {
        let prod = graded.algebra.mul(
            &graded.algebra.basis_element(a),
            &graded.algebra.basis_element(b),
        );
        for (row, c) in &prod {
            m.set(*row as usize, col, c.clone());
        }
    }
    let mut rhs = vec![ring.zero(); dim];
    for (row, c) in target {
        rhs[*row as usize] = c.clone();
    }
    let sol = linalg::solve(ring, &m, &rhs).map_err(|_| GradingError::UnsupportedRing)?;
    let Some(x) = sol else {
        return Err(GradingError::MembershipFailed);
    };
    let mut combo = Vec::new();
    let mut acc = graded.algebra.zero_element();
    for (col, c) in x.into_iter().enumerate() {
        if ring.is_zero(&c) {
            continue;
        }
        let (a, b) = pairs[col];
        let prod = graded.algebra.mul(
            &graded.algebra.basis_element(a),
            &graded.algebra.basis_element(b),
        );
        acc = graded.algebra.add(&acc, &graded.algebra.scale(&c, &prod));
        combo.push(((a, b), c));
    }
    if acc != *target {
        return Err(GradingError::MembershipFailed);
    }
    Ok(combo)
}

/// Graded regularity of RG for the grading induced by the cocycle: the
/// algebra is graded regular iff the algebra of the identity-component
/// subgroupoid is regular, which Theorem-A conditions decide.
pub fn decide_graded_regular(
    groupoid: &FiniteGroupoid,
    cocycle: &Cocycle,
    ring: &CoeffRing,
) -> RegularityDecision {
    let (ge, _) = identity_component(groupoid, cocycle);
    let mut inner = decide_regular_groupoid_algebra(&ge, ring);
    let mut evidence = vec![Condition::new(
        format!(
            "identity component has {} of {} arrows; G_e approximately quasi-compact (finite)",
            ge.arrow_count(),
            groupoid.arrow_count()
        ),
        true,
        None,
    )];
    evidence.append(&mut inner.evidence);
    RegularityDecision {
        verdict: inner.verdict,
        evidence,
    }
}

/// Brute-force graded regularity: sweeps every homogeneous element (per
/// degree component) and solves for a quasi-inverse over the full algebra.
///
/// Exhaustive when each component's element count fits the budget; the
/// quasi-inverse of a homogeneous element need not be homogeneous, so the
/// solve always runs over the whole algebra.
pub fn graded_regular_oracle(
    graded: &GradedAlgebra,
    budget: u64,
    seed: u64,
) -> Result<OracleVerdict, GradingError> {
    let ring = &graded.algebra.ring;
    if !ring.is_field() {
        return Err(GradingError::UnsupportedRing);
    }
    let mut exhaustive = true;
    let mut tested: u64 = 0;
    for h in graded.cocycle.degree_set() {
        let basis = graded.component_basis(h);
        match ring.size() {
            Some(size) if size.checked_pow(basis.len() as u32).is_some_and(|t| t <= budget) => {
                let total = size.pow(basis.len() as u32);
                for i in 0..total {
                    let a = component_element_from_index(graded, &basis, i);
                    tested += 1;
                    if element_is_regular(&graded.algebra, &a)
                        .map_err(|_| GradingError::UnsupportedRing)?
                        .is_none()
                    {
                        return Ok(OracleVerdict {
                            outcome: OracleOutcome::NotRegular(a),
                            method: OracleMethod::Exhaustive,
                        });
                    }
                }
            }
            _ => {
                exhaustive = false;
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(h as u64));
                let samples = budget.min(256);
                for _ in 0..samples {
                    let a = graded.random_homogeneous(h, &mut rng);
                    tested += 1;
                    if element_is_regular(&graded.algebra, &a)
                        .map_err(|_| GradingError::UnsupportedRing)?
                        .is_none()
                    {
                        return Ok(OracleVerdict {
                            outcome: OracleOutcome::NotRegular(a),
                            method: OracleMethod::Sampled(tested),
                        });
                    }
                }
            }
        }
    }
    Ok(if exhaustive {
        OracleVerdict {
            outcome: OracleOutcome::Regular,
            method: OracleMethod::Exhaustive,
        }
    } else {
        OracleVerdict {
            outcome: OracleOutcome::Unknown,
            method: OracleMethod::Sampled(tested),
        }
    })
}

fn component_element_from_index(
    graded: &GradedAlgebra,
    basis: &[usize],
    idx: u64,
) -> AlgElement {
    let ring = &graded.algebra.ring;
    let size = ring.size().expect("finite ring");
    let mut idx = idx;
    let mut out = AlgElement::new();
    for &a in basis {
        let c = ring.element_from_index(idx % size);
        idx /= size;
        if !ring.is_zero(&c) {
            out.insert(a as u32, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupTable;

    fn f2() -> CoeffRing {
        CoeffRing::prime_field(2).unwrap()
    }

    fn z2_groupoid_with_injective_cocycle() -> (FiniteGroupoid, Cocycle) {
        let g = FiniteGroupoid::group_groupoid(&GroupTable::cyclic(2));
        // the generator arrow gets degree 1 in Z/2
        let degrees: Vec<Degree> = (0..g.arrow_count())
            .map(|a| if g.is_unit_arrow(a) { 0 } else { 1 })
            .collect();
        let c = Cocycle::new(&g, GradingGroup::CyclicMod(2), degrees).unwrap();
        (g, c)
    }

    #[test]
    fn trivial_cocycle_identity_component_is_everything() {
        let g = FiniteGroupoid::pair_groupoid(3);
        let c = Cocycle::trivial(&g, GradingGroup::Integers);
        let (ge, _) = identity_component(&g, &c);
        assert_eq!(ge.arrow_count(), g.arrow_count());
    }

    #[test]
    fn injective_cocycle_on_z4_gives_trivial_component() {
        let g = FiniteGroupoid::group_groupoid(&GroupTable::cyclic(4));
        // arrow k is g^k, mapped to k in Z/4
        let degrees: Vec<Degree> = (0..4).collect();
        let c = Cocycle::new(&g, GradingGroup::CyclicMod(4), degrees).unwrap();
        let (ge, _) = identity_component(&g, &c);
        assert_eq!(ge.arrow_count(), 1);
    }

    #[test]
    fn pair_groupoid_plus_minus_cocycle() {
        let g = FiniteGroupoid::pair_groupoid(2);
        // arrows (i,j) get degree i - j
        let degrees: Vec<Degree> = (0..g.arrow_count())
            .map(|a| g.tgt(a) as i64 - g.src(a) as i64)
            .collect();
        let c = Cocycle::new(&g, GradingGroup::Integers, degrees).unwrap();
        let (ge, _) = identity_component(&g, &c);
        assert_eq!(ge.arrow_count(), 2); // just the units
        assert!(ge.is_principal());
    }

    #[test]
    fn functoriality_is_enforced() {
        let g = FiniteGroupoid::pair_groupoid(2);
        let mut degrees = vec![0i64; g.arrow_count()];
        degrees[0] = 1; // a unit arrow with nonzero degree cannot be functorial
        assert!(Cocycle::new(&g, GradingGroup::Integers, degrees).is_err());
    }

    #[test]
    fn homogeneous_components_split_and_sum() {
        let g = FiniteGroupoid::pair_groupoid(2);
        let degrees: Vec<Degree> = (0..g.arrow_count())
            .map(|a| g.tgt(a) as i64 - g.src(a) as i64)
            .collect();
        let c = Cocycle::new(&g, GradingGroup::Integers, degrees).unwrap();
        let graded = GradedAlgebra::new(g, c, &f2());
        let mut a = AlgElement::new();
        for i in 0..graded.algebra.dim() {
            a.insert(i as u32, graded.algebra.ring.one());
        }
        let comps = homogeneous_components(&graded, &a);
        assert_eq!(comps.len(), 3); // degrees -1, 0, 1
        let mut sum = graded.algebra.zero_element();
        for (h, part) in &comps {
            assert_eq!(graded.degree_of_element(part).unwrap(), *h);
            sum = graded.algebra.add(&sum, part);
        }
        assert_eq!(sum, a);
    }

    #[test]
    fn epsilon_witness_single_arrow() {
        let g = FiniteGroupoid::pair_groupoid(2);
        let degrees: Vec<Degree> = (0..g.arrow_count())
            .map(|a| g.tgt(a) as i64 - g.src(a) as i64)
            .collect();
        let c = Cocycle::new(&g, GradingGroup::Integers, degrees).unwrap();
        let graded = GradedAlgebra::new(g.clone(), c, &f2());
        let arrow = (0..g.arrow_count()).find(|&a| !g.is_unit_arrow(a)).unwrap();
        let f = graded.algebra.basis_element(arrow);
        let w = epsilon_witness(&graded, &f).unwrap();
        // epsilon is the unit indicator at the target
        let mut expected = AlgElement::new();
        expected.insert(g.unit_arrow(g.tgt(arrow)) as u32, graded.algebra.ring.one());
        assert_eq!(w.left, expected);
        assert_eq!(graded.algebra.mul(&w.left, &f), f);
        assert_eq!(graded.algebra.mul(&f, &w.right), f);
    }

    #[test]
    fn epsilon_witness_zero_element() {
        let (g, c) = z2_groupoid_with_injective_cocycle();
        let graded = GradedAlgebra::new(g, c, &f2());
        let w = epsilon_witness(&graded, &AlgElement::new()).unwrap();
        assert!(w.left.is_empty());
        assert!(w.right.is_empty());
    }

    #[test]
    fn epsilon_witness_two_arrows_common_target() {
        let g = FiniteGroupoid::pair_groupoid(3);
        let c = Cocycle::trivial(&g, GradingGroup::Integers);
        let graded = GradedAlgebra::new(g.clone(), c, &f2());
        // arrows 1 -> 0 and 2 -> 0 share the target unit 0
        let arrows: Vec<usize> = (0..g.arrow_count())
            .filter(|&a| g.tgt(a) == 0 && g.src(a) != 0)
            .collect();
        let mut f = AlgElement::new();
        for &a in &arrows {
            f.insert(a as u32, graded.algebra.ring.one());
        }
        let w = epsilon_witness(&graded, &f).unwrap();
        assert_eq!(w.left.len(), 1); // the union degenerates to one unit
        assert_eq!(graded.algebra.mul(&w.left, &f), f);
    }

    #[test]
    fn graded_gap_witness_z2_over_f2() {
        use crate::algebra::algebra_is_regular_oracle;
        let (g, c) = z2_groupoid_with_injective_cocycle();
        // ungraded: not regular
        let ungraded = decide_regular_groupoid_algebra(&g, &f2());
        assert!(!ungraded.verdict.is_regular());
        let oracle = algebra_is_regular_oracle(&groupoid_algebra(&g, &f2()), 1 << 12, 0);
        assert!(matches!(oracle.outcome, OracleOutcome::NotRegular(_)));
        // graded: regular, both by theorem and by the homogeneous sweep
        let graded_decision = decide_graded_regular(&g, &c, &f2());
        assert!(graded_decision.verdict.is_regular());
        let graded = GradedAlgebra::new(g, c, &f2());
        let v = graded_regular_oracle(&graded, 1 << 12, 0).unwrap();
        assert_eq!(v.outcome, OracleOutcome::Regular);
        assert_eq!(v.method, OracleMethod::Exhaustive);
    }

    #[test]
    fn trivial_cocycle_graded_verdict_matches_ungraded() {
        for g in [
            FiniteGroupoid::pair_groupoid(2),
            FiniteGroupoid::group_groupoid(&GroupTable::cyclic(2)),
        ] {
            let c = Cocycle::trivial(&g, GradingGroup::Integers);
            let graded_v = decide_graded_regular(&g, &c, &f2());
            let ungraded_v = decide_regular_groupoid_algebra(&g, &f2());
            assert_eq!(graded_v.verdict.is_regular(), ungraded_v.verdict.is_regular());
        }
    }

    #[test]
    fn graded_decision_matches_graded_oracle_when_exhaustive() {
        let f2 = f2();
        let f3 = CoeffRing::prime_field(3).unwrap();
        let mut cases: Vec<(FiniteGroupoid, Cocycle, CoeffRing)> = Vec::new();
        let (g, c) = z2_groupoid_with_injective_cocycle();
        cases.push((g, c, f2.clone()));
        let pair = FiniteGroupoid::pair_groupoid(2);
        let degrees: Vec<Degree> = (0..pair.arrow_count())
            .map(|a| pair.tgt(a) as i64 - pair.src(a) as i64)
            .collect();
        let c = Cocycle::new(&pair, GradingGroup::Integers, degrees).unwrap();
        cases.push((pair.clone(), Cocycle::trivial(&pair, GradingGroup::Integers), f3.clone()));
        cases.push((pair, c, f2.clone()));
        let z4 = FiniteGroupoid::group_groupoid(&GroupTable::cyclic(4));
        let c = Cocycle::new(&z4, GradingGroup::CyclicMod(4), (0..4).collect()).unwrap();
        cases.push((z4.clone(), c, f2.clone()));
        cases.push((z4.clone(), Cocycle::trivial(&z4, GradingGroup::Integers), f2));
        for (g, c, ring) in cases {
            let theorem = decide_graded_regular(&g, &c, &ring);
            let graded = GradedAlgebra::new(g, c, &ring);
            let oracle = graded_regular_oracle(&graded, 1 << 16, 0).unwrap();
            if oracle.method != OracleMethod::Exhaustive {
                continue;
            }
            assert_eq!(
                theorem.verdict.is_regular(),
                matches!(oracle.outcome, OracleOutcome::Regular),
                "graded disagreement over {}",
                ring.name()
            );
        }
    }

    #[test]
    fn component_multiplicativity() {
        let g = FiniteGroupoid::pair_groupoid(2);
        let degrees: Vec<Degree> = (0..g.arrow_count())
            .map(|a| g.tgt(a) as i64 - g.src(a) as i64)
            .collect();
        let c = Cocycle::new(&g, GradingGroup::Integers, degrees).unwrap();
        let graded = GradedAlgebra::new(g, c, &f2());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            for h in graded.cocycle.degree_set() {
                for k in graded.cocycle.degree_set() {
                    let f = graded.random_homogeneous(h, &mut rng);
                    let e = graded.random_homogeneous(k, &mut rng);
                    let prod = graded.algebra.mul(&f, &e);
                    if !prod.is_empty() {
                        assert_eq!(graded.degree_of_element(&prod).unwrap(), h + k);
                    }
                }
            }
        }
    }
}
