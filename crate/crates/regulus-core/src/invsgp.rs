//! Finite inverse semigroups as closed sets of partial bijections: closure
//! from generators, Green's relations, maximal subgroups, the Schutzenberger
//! representation, and the regularity decision for the semigroup algebra RS.

use alloc::{
    collections::{BTreeMap, BTreeSet},
    format,
    string::String,
    vec,
    vec::Vec,
};
use core::fmt;

use crate::decision::{Condition, RegularityDecision};
use crate::group::GroupTable;
use crate::pbij::PartialBijection;
use crate::ring::{is_invertible, is_regular_ring, CoeffRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemigroupError {
    DegreeMismatch,
    NoGenerators,
    /// Closure grew past the cap; the generated semigroup may be infinite at
    /// this budget.
    CapExceeded(usize),
    NotInverse(String),
    NotIdempotent,
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupError::DegreeMismatch => write!(f, "generators have different degrees"),
            SemigroupError::NoGenerators => write!(f, "no generators given"),
            SemigroupError::CapExceeded(cap) => write!(f, "closure exceeded cap {cap}"),
            SemigroupError::NotInverse(r) => write!(f, "not an inverse semigroup: {r}"),
            SemigroupError::NotIdempotent => write!(f, "element is not an idempotent"),
        }
    }
}

/// A finite inverse semigroup with full Cayley table.
///
/// Elements are canonically sorted partial bijections of a common degree, so
/// equal semigroups have identical element lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteInverseSemigroup {
    degree: usize,
    elements: Vec<PartialBijection>,
    table: Vec<u32>,
    inverse: Vec<u32>,
    idempotents: Vec<u32>,
}

impl FiniteInverseSemigroup {
    /// Closes the generators (and their inverses) under composition.
    pub fn generate(
        generators: &[PartialBijection],
        cap: usize,
    ) -> Result<Self, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::NoGenerators);
        }
        let degree = generators[0].degree();
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(SemigroupError::DegreeMismatch);
        }
        let cap = cap.max(1);
        let mut set: BTreeSet<PartialBijection> = BTreeSet::new();
        let mut queue: Vec<PartialBijection> = Vec::new();
        for g in generators {
            for h in [g.clone(), g.inverse()] {
                if set.insert(h.clone()) {
                    queue.push(h);
                }
            }
        }
        if set.len() > cap {
            return Err(SemigroupError::CapExceeded(cap));
        }
        while let Some(x) = queue.pop() {
            let snapshot: Vec<PartialBijection> = set.iter().cloned().collect();
            for y in &snapshot {
                for p in [x.compose(y).unwrap(), y.compose(&x).unwrap()] {
                    if set.insert(p.clone()) {
                        if set.len() > cap {
                            return Err(SemigroupError::CapExceeded(cap));
                        }
                        queue.push(p);
                    }
                }
            }
        }
        Self::from_closed_set(set.into_iter().collect())
    }

    /// Builds the tables from an already closed element set.
    pub fn from_closed_set(mut elements: Vec<PartialBijection>) -> Result<Self, SemigroupError> {
        if elements.is_empty() {
            return Err(SemigroupError::NoGenerators);
        }
        elements.sort();
        elements.dedup();
        let degree = elements[0].degree();
        if elements.iter().any(|e| e.degree() != degree) {
            return Err(SemigroupError::DegreeMismatch);
        }
        let index: BTreeMap<&PartialBijection, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e, i as u32))
            .collect();
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = elements[i].compose(&elements[j]).unwrap();
                let k = index
                    .get(&p)
                    .ok_or_else(|| SemigroupError::NotInverse(String::from("not closed under product")))?;
                table[i * n + j] = *k;
            }
        }
        let mut inverse = vec![0u32; n];
        for i in 0..n {
            let inv = elements[i].inverse();
            inverse[i] = *index
                .get(&inv)
                .ok_or_else(|| SemigroupError::NotInverse(String::from("not closed under inversion")))?;
        }
        let idempotents = (0..n as u32)
            .filter(|&i| table[(i * n as u32 + i) as usize] == i)
            .collect();
        let s = FiniteInverseSemigroup {
            degree,
            elements,
            table,
            inverse,
            idempotents,
        };
        s.verify_inverse_axioms()?;
        Ok(s)
    }

    /// Checks s s* s = s, s* s s* = s*, and that E(S) commutes.
    pub fn verify_inverse_axioms(&self) -> Result<(), SemigroupError> {
        for s in 0..self.len() {
            let st = self.inv(s);
            if self.mul(self.mul(s, st), s) != s || self.mul(self.mul(st, s), st) != st {
                return Err(SemigroupError::NotInverse(format!(
                    "ss*s != s at index {s}"
                )));
            }
        }
        for &e in &self.idempotents {
            for &f in &self.idempotents {
                let (e, f) = (e as usize, f as usize);
                if self.mul(e, f) != self.mul(f, e) {
                    return Err(SemigroupError::NotInverse(String::from(
                        "idempotents do not commute",
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn element(&self, i: usize) -> &PartialBijection {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[PartialBijection] {
        &self.elements
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.len() + j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.idempotents.iter().map(|&i| i as usize).collect()
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.mul(i, i) == i
    }

    /// Index of the identity element, if the semigroup is a monoid.
    pub fn monoid_identity(&self) -> Option<usize> {
        (0..self.len()).find(|&e| (0..self.len()).all(|s| self.mul(e, s) == s && self.mul(s, e) == s))
    }

    /// The natural partial order: s <= t iff s = te for some idempotent e.
    pub fn natural_leq(&self, s: usize, t: usize) -> bool {
        self.idempotents
            .iter()
            .any(|&e| self.mul(t, e as usize) == s)
    }

    pub fn label(&self, i: usize) -> String {
        self.elements[i].describe()
    }
}

/// Green's class data: class index per element plus the class lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenClasses {
    pub l_class_of: Vec<usize>,
    pub r_class_of: Vec<usize>,
    pub d_class_of: Vec<usize>,
    pub l_classes: Vec<Vec<usize>>,
    pub r_classes: Vec<Vec<usize>>,
    pub d_classes: Vec<Vec<usize>>,
}

/// L-classes by common s*s, R-classes by common ss*, D-classes as the join.
pub fn green_classes(s: &FiniteInverseSemigroup) -> GreenClasses {
    let n = s.len();
    let mut l_key = vec![0usize; n];
    let mut r_key = vec![0usize; n];
    for i in 0..n {
        l_key[i] = s.mul(s.inv(i), i);
        r_key[i] = s.mul(i, s.inv(i));
    }
    let compress = |keys: &[usize]| -> (Vec<usize>, Vec<Vec<usize>>) {
        let mut class_of = vec![0usize; keys.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut by_key: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, &k) in keys.iter().enumerate() {
            let c = *by_key.entry(k).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            class_of[i] = c;
            classes[c].push(i);
        }
        (class_of, classes)
    };
    let (l_class_of, l_classes) = compress(&l_key);
    let (r_class_of, r_classes) = compress(&r_key);

    // D = join of L and R: union-find over elements, merging L- and R-classes
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    };
    for class in l_classes.iter().chain(r_classes.iter()) {
        for w in class.windows(2) {
            union(&mut parent, w[0], w[1]);
        }
    }
    let mut d_class_of = vec![0usize; n];
    let mut d_classes: Vec<Vec<usize>> = Vec::new();
    let mut by_root: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        let c = *by_root.entry(root).or_insert_with(|| {
            d_classes.push(Vec::new());
            d_classes.len() - 1
        });
        d_class_of[i] = c;
        d_classes[c].push(i);
    }
    GreenClasses {
        l_class_of,
        r_class_of,
        d_class_of,
        l_classes,
        r_classes,
        d_classes,
    }
}

/// The maximal subgroup G_e = {s : s*s = e = ss*}, validated as a group.
pub fn maximal_subgroup(
    s: &FiniteInverseSemigroup,
    e: usize,
) -> Result<(GroupTable, Vec<usize>), SemigroupError> {
    if !s.is_idempotent(e) {
        return Err(SemigroupError::NotIdempotent);
    }
    let members: Vec<usize> = (0..s.len())
        .filter(|&x| s.mul(s.inv(x), x) == e && s.mul(x, s.inv(x)) == e)
        .collect();
    let pos: BTreeMap<usize, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let n = members.len();
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            let p = s.mul(members[i], members[j]);
            let k = pos
                .get(&p)
                .ok_or_else(|| SemigroupError::NotInverse(String::from("G_e not closed")))?;
            table[i * n + j] = *k as u32;
        }
    }
    let labels = members.iter().map(|&m| s.label(m)).collect();
    let group = GroupTable::new(table, labels)
        .map_err(|e| SemigroupError::NotInverse(format!("G_e is not a group: {e}")))?;
    Ok((group, members))
}

/// Primes dividing the order of some maximal subgroup.
///
/// By Cauchy's theorem this is exactly the set of primes p such that S has a
/// cyclic subgroup of order p, so testing these primes for invertibility is
/// the same as testing the order of every finite subgroup of S.
pub fn subgroup_prime_support(s: &FiniteInverseSemigroup) -> Vec<u64> {
    let mut primes = BTreeSet::new();
    for e in s.idempotents() {
        let (g, _) = maximal_subgroup(s, e).expect("idempotent");
        for p in g.prime_support() {
            primes.insert(p);
        }
    }
    primes.into_iter().collect()
}

/// Regularity of the semigroup algebra RS for finite S.
///
/// Conditions: R regular; S locally finite (automatic, S is finite); every
/// prime dividing a maximal subgroup order invertible in R.
pub fn decide_regular_semigroup_algebra(
    s: &FiniteInverseSemigroup,
    ring: &CoeffRing,
) -> RegularityDecision {
    let mut evidence = Vec::new();
    evidence.push(Condition::new(
        format!("coefficient ring {} is regular", ring.name()),
        is_regular_ring(ring),
        None,
    ));
    evidence.push(Condition::new(
        format!("S is locally finite (finite, |S| = {})", s.len()),
        true,
        None,
    ));
    let primes = subgroup_prime_support(s);
    let bad: Vec<u64> = primes
        .iter()
        .copied()
        .filter(|&p| !is_invertible(ring, p))
        .collect();
    evidence.push(Condition::new(
        format!(
            "orders of finite subgroups invertible (prime support {{{}}})",
            primes
                .iter()
                .map(|p| format!("{p}"))
                .collect::<Vec<_>>()
                .join(",")
        ),
        bad.is_empty(),
        if bad.is_empty() {
            None
        } else {
            Some(format!(
                "prime {} not invertible in {}",
                bad[0],
                ring.name()
            ))
        },
    ));
    RegularityDecision::from_conditions(evidence)
}

/// The left Schutzenberger representation of S on the L-class of e:
/// s acts by t -> st when st stays in L_e, undefined otherwise.
pub fn schutzenberger_representation(
    s: &FiniteInverseSemigroup,
    e: usize,
) -> Result<(Vec<usize>, Vec<PartialBijection>), SemigroupError> {
    if !s.is_idempotent(e) {
        return Err(SemigroupError::NotIdempotent);
    }
    let l_class: Vec<usize> = (0..s.len()).filter(|&x| s.mul(s.inv(x), x) == e).collect();
    let pos: BTreeMap<usize, usize> = l_class.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut maps = Vec::with_capacity(s.len());
    for a in 0..s.len() {
        let images = l_class
            .iter()
            .map(|&t| {
                let st = s.mul(a, t);
                pos.get(&st).copied()
            })
            .collect();
        let pb = PartialBijection::new(images)
            .map_err(|_| SemigroupError::NotInverse(String::from("Schutzenberger action not injective")))?;
        maps.push(pb);
    }
    Ok((l_class, maps))
}

/// Certificate produced by [`bounded_l_class_local_finiteness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFinitenessCertificate {
    /// Size of the generated inverse semigroup.
    pub closure_size: usize,
    /// The bound N with |L_e| <= N for all idempotents e.
    pub l_class_bound: usize,
    /// Ambient degree of the partial-bijection embedding.
    pub degree: usize,
    /// The combined Schutzenberger representations separate points.
    pub schutzenberger_faithful: bool,
}

/// Confirms finiteness of the inverse semigroup generated by partial
/// bijections with uniformly bounded L-classes.
///
/// The closure is run with the given cap; on success the bound N on L-class
/// sizes is computed and the Schutzenberger embedding into partial bijections
/// on N points per L-class is verified to separate points, which is the
/// mechanism that makes such semigroups locally finite. Inputs whose closure
/// outgrows the cap (unbounded-degree shift-like generators) get
/// `CapExceeded`.
pub fn bounded_l_class_local_finiteness(
    generators: &[PartialBijection],
    cap: usize,
) -> Result<LocalFinitenessCertificate, SemigroupError> {
    let s = FiniteInverseSemigroup::generate(generators, cap)?;
    let mut bound = 0usize;
    let mut actions: Vec<Vec<PartialBijection>> = Vec::new();
    for e in s.idempotents() {
        let (l_class, maps) = schutzenberger_representation(&s, e)?;
        bound = bound.max(l_class.len());
        actions.push(maps);
    }
    // two elements acting identically in every representation must be equal
    let mut faithful = true;
    'outer: for a in 0..s.len() {
        for b in (a + 1)..s.len() {
            if actions.iter().all(|maps| maps[a] == maps[b]) {
                faithful = false;
                break 'outer;
            }
        }
    }
    Ok(LocalFinitenessCertificate {
        closure_size: s.len(),
        l_class_bound: bound,
        degree: s.degree(),
        schutzenberger_faithful: faithful,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn transposition_generates_order_two_group() {
        let t = PartialBijection::permutation(&[1, 0]).unwrap();
        let s = FiniteInverseSemigroup::generate(&[t], 10).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.monoid_identity().is_some());
    }

    #[test]
    fn brandt_semigroup_b2() {
        let s = zoo::brandt_b2();
        assert_eq!(s.len(), 5);
        // elements: a, a*, aa*, a*a, 04
        assert_eq!(s.idempotents().len(), 3);
        let empty = PartialBijection::empty(2);
        assert!(s.elements().contains(&empty));
    }

    #[test]
    fn symmetric_inverse_monoid_i2() {
        let s = zoo::symmetric_inverse_monoid(2);
        assert_eq!(s.len(), 7);
        assert!(s.monoid_identity().is_some());
    }

    #[test]
    fn cap_exceeded_signals_possible_infiniteness() {
        let t = PartialBijection::permutation(&[1, 2, 3, 4, 0]).unwrap();
        assert_eq!(
            FiniteInverseSemigroup::generate(&[t], 3),
            Err(SemigroupError::CapExceeded(3))
        );
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = PartialBijection::identity(2);
        let b = PartialBijection::identity(3);
        assert_eq!(
            FiniteInverseSemigroup::generate(&[a, b], 10),
            Err(SemigroupError::DegreeMismatch)
        );
    }

    #[test]
    fn green_classes_of_semilattice_are_singletons() {
        let s = zoo::diamond_semilattice();
        let g = green_classes(&s);
        assert!(g.l_classes.iter().all(|c| c.len() == 1));
        assert!(g.r_classes.iter().all(|c| c.len() == 1));
        assert!(g.d_classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn green_classes_of_b2() {
        let s = zoo::brandt_b2();
        let g = green_classes(&s);
        let mut d_sizes: Vec<usize> = g.d_classes.iter().map(|c| c.len()).collect();
        d_sizes.sort_unstable();
        assert_eq!(d_sizes, vec![1, 4]);
    }

    #[test]
    fn green_classes_of_i2_by_rank() {
        let s = zoo::symmetric_inverse_monoid(2);
        let g = green_classes(&s);
        let mut d_sizes: Vec<usize> = g.d_classes.iter().map(|c| c.len()).collect();
        d_sizes.sort_unstable();
        assert_eq!(d_sizes, vec![1, 2, 4]);
        // rank is a D-invariant in I_n
        for class in &g.d_classes {
            let rank = s.element(class[0]).rank();
            assert!(class.iter().all(|&i| s.element(i).rank() == rank));
        }
    }

    #[test]
    fn maximal_subgroups_of_i2() {
        let s = zoo::symmetric_inverse_monoid(2);
        let id = s.monoid_identity().unwrap();
        let (g, _) = maximal_subgroup(&s, id).unwrap();
        assert_eq!(g.order(), 2);
        for e in s.idempotents() {
            if e != id {
                let (g, _) = maximal_subgroup(&s, e).unwrap();
                assert_eq!(g.order(), 1);
            }
        }
        assert_eq!(subgroup_prime_support(&s), vec![2]);
    }

    #[test]
    fn maximal_subgroup_of_b2_at_range_idempotent_is_trivial() {
        let s = zoo::brandt_b2();
        let aastar = (0..s.len())
            .find(|&i| *s.element(i) == PartialBijection::partial_identity(2, &[1]))
            .unwrap();
        let (g, _) = maximal_subgroup(&s, aastar).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn prime_support_of_cyclic_six() {
        let s = zoo::cyclic_group_semigroup(6);
        assert_eq!(subgroup_prime_support(&s), vec![2, 3]);
    }

    #[test]
    fn semilattice_has_empty_prime_support() {
        let s = zoo::diamond_semilattice();
        assert!(subgroup_prime_support(&s).is_empty());
    }

    #[test]
    fn theorem_decision_examples() {
        let z2 = zoo::cyclic_group_semigroup(2);
        let f2 = CoeffRing::prime_field(2).unwrap();
        let f3 = CoeffRing::prime_field(3).unwrap();
        assert!(!decide_regular_semigroup_algebra(&z2, &f2).verdict.is_regular());
        assert!(decide_regular_semigroup_algebra(&z2, &f3).verdict.is_regular());

        let sl = zoo::diamond_semilattice();
        assert!(decide_regular_semigroup_algebra(&sl, &CoeffRing::Rationals)
            .verdict
            .is_regular());

        let i2 = zoo::symmetric_inverse_monoid(2);
        assert!(!decide_regular_semigroup_algebra(&i2, &f2).verdict.is_regular());
        assert!(decide_regular_semigroup_algebra(&i2, &f3).verdict.is_regular());
    }

    #[test]
    fn dimension_count_identity() {
        // |S| equals the sum over D-classes of (#L-classes in D)^2 * |G_D|
        for s in zoo::semigroup_zoo() {
            let g = green_classes(&s.semigroup);
            let mut total = 0usize;
            for class in &g.d_classes {
                let l_count = {
                    let mut set = BTreeSet::new();
                    for &x in class {
                        set.insert(g.l_class_of[x]);
                    }
                    set.len()
                };
                let e = class
                    .iter()
                    .copied()
                    .find(|&x| s.semigroup.is_idempotent(x))
                    .expect("every D-class of an inverse semigroup contains an idempotent");
                let (ge, _) = maximal_subgroup(&s.semigroup, e).unwrap();
                total += l_count * l_count * ge.order();
            }
            assert_eq!(total, s.semigroup.len(), "failed for {}", s.name);
        }
    }

    #[test]
    fn maximal_subgroup_acts_freely_on_r_class() {
        for s in zoo::semigroup_zoo() {
            let sg = &s.semigroup;
            for e in sg.idempotents() {
                let (_, members) = maximal_subgroup(sg, e).unwrap();
                let r_class: Vec<usize> =
                    (0..sg.len()).filter(|&x| sg.mul(x, sg.inv(x)) == e).collect();
                for &g in &members {
                    for &r in &r_class {
                        if sg.mul(g, r) == r {
                            assert_eq!(g, e, "non-identity fixes an R-class point");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn schutzenberger_example_on_b2() {
        let s = zoo::brandt_b2();
        // e = a*a = partial identity on {0}
        let e = (0..s.len())
            .find(|&i| *s.element(i) == PartialBijection::partial_identity(2, &[0]))
            .unwrap();
        let (l_class, maps) = schutzenberger_representation(&s, e).unwrap();
        assert_eq!(l_class.len(), 2);
        let a = (0..s.len())
            .find(|&i| *s.element(i) == PartialBijection::new(vec![Some(1), None]).unwrap())
            .unwrap();
        // a maps a*a to a within L_e
        let pos_e = l_class.iter().position(|&t| t == e).unwrap();
        let pos_a = l_class.iter().position(|&t| t == a).unwrap();
        assert_eq!(maps[a].apply(pos_e), Some(pos_a));
    }

    #[test]
    fn schutzenberger_separates_points() {
        for s in zoo::semigroup_zoo() {
            let sg = &s.semigroup;
            let mut actions = Vec::new();
            for e in sg.idempotents() {
                actions.push(schutzenberger_representation(sg, e).unwrap().1);
            }
            for a in 0..sg.len() {
                for b in (a + 1)..sg.len() {
                    assert!(
                        actions.iter().any(|maps| maps[a] != maps[b]),
                        "elements {a} and {b} not separated in {}",
                        s.name
                    );
                }
            }
        }
    }

    #[test]
    fn group_acting_on_itself_is_regular_representation() {
        let s = zoo::cyclic_group_semigroup(3);
        let id = s.monoid_identity().unwrap();
        let (l_class, maps) = schutzenberger_representation(&s, id).unwrap();
        assert_eq!(l_class.len(), s.len());
        // every element acts by a total bijection
        for m in &maps {
            assert!(m.is_total());
        }
    }

    #[test]
    fn birkhoff_bound_on_product_of_i2() {
        // two copies of I_2 on disjoint point sets, block-diagonal generators
        let gen1 = PartialBijection::new(vec![Some(1), Some(0), Some(2), Some(3)]).unwrap();
        let gen2 = PartialBijection::new(vec![Some(0), None, Some(3), Some(2)]).unwrap();
        let cert = bounded_l_class_local_finiteness(&[gen1, gen2], 1000).unwrap();
        assert!(cert.closure_size <= 49);
        assert!(cert.l_class_bound >= 1);
        assert!(cert.schutzenberger_faithful);
    }

    #[test]
    fn single_finite_semigroup_is_locally_finite() {
        let t = PartialBijection::permutation(&[1, 0]).unwrap();
        let cert = bounded_l_class_local_finiteness(&[t], 100).unwrap();
        assert_eq!(cert.closure_size, 2);
        assert!(cert.schutzenberger_faithful);
    }

    #[test]
    fn shift_like_input_exceeds_cap() {
        // truncated shift on a large window: monogenic closure outgrows any
        // small cap, the desk-scale stand-in for the bicyclic monoid
        let degree = 64;
        let shift =
            PartialBijection::new((0..degree).map(|x| if x + 1 < degree { Some(x + 1) } else { None }).collect())
                .unwrap();
        assert_eq!(
            bounded_l_class_local_finiteness(&[shift], 50),
            Err(SemigroupError::CapExceeded(50))
        );
    }

    #[test]
    fn natural_partial_order_examples() {
        let s = zoo::brandt_b2();
        let zero = (0..s.len())
            .find(|&i| *s.element(i) == PartialBijection::empty(2))
            .unwrap();
        for t in 0..s.len() {
            assert!(s.natural_leq(zero, t));
        }
    }

    #[test]
    fn prime_support_captures_all_finite_subgroup_orders() {
        // The decision tests invertibility of the primes dividing maximal
        // subgroup orders. By Cauchy's theorem that is equivalent to testing
        // the order of every finite subgroup of S; proved here by enumerating
        // all subgroups of every maximal subgroup across the zoo.
        use crate::ring::prime_factors;
        for z in zoo::semigroup_zoo() {
            let s = &z.semigroup;
            let support: BTreeSet<u64> = subgroup_prime_support(s).into_iter().collect();
            let mut from_subgroups: BTreeSet<u64> = BTreeSet::new();
            for e in s.idempotents() {
                let (g, _) = maximal_subgroup(s, e).unwrap();
                for sub in g.all_subgroups() {
                    for p in prime_factors(sub.len() as u64) {
                        from_subgroups.insert(p);
                    }
                }
            }
            assert_eq!(support, from_subgroups, "Cauchy reduction fails on {}", z.name);
            // and every support prime is realized by a cyclic subgroup of
            // exactly that order
            for &p in &support {
                let realized = s.idempotents().iter().any(|&e| {
                    let (g, _) = maximal_subgroup(s, e).unwrap();
                    g.all_subgroups().iter().any(|sub| sub.len() as u64 == p)
                });
                assert!(realized, "prime {p} not realized in {}", z.name);
            }
        }
    }

    #[test]
    fn involution_is_an_antihomomorphism() {
        for s in zoo::semigroup_zoo() {
            let sg = &s.semigroup;
            for a in 0..sg.len() {
                for b in 0..sg.len() {
                    assert_eq!(sg.inv(sg.mul(a, b)), sg.mul(sg.inv(b), sg.inv(a)));
                }
            }
        }
    }
}
