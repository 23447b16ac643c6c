//! Finite-dimensional associative algebras by structure constants over an
//! exact coefficient ring, with the brute-force and linear-algebra regularity
//! oracles that cross-check every theorem-based decision.

use alloc::{
    collections::BTreeMap,
    format,
    string::String,
    vec,
    vec::Vec,
};
use core::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::group::GroupTable;
use crate::groupoid::FiniteGroupoid;
use crate::invsgp::FiniteInverseSemigroup;
use crate::linalg::{self, Matrix};
use crate::ring::{CoeffRing, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// The operation needs a field (use exhaustive search instead).
    UnsupportedRing,
    DimensionMismatch,
    NotAssociative(usize, usize, usize),
    BadUnit,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::UnsupportedRing => write!(f, "operation requires field coefficients"),
            AlgebraError::DimensionMismatch => write!(f, "dimension mismatch"),
            AlgebraError::NotAssociative(i, j, k) => {
                write!(f, "associativity fails on basis triple ({i},{j},{k})")
            }
            AlgebraError::BadUnit => write!(f, "declared unit is not a two-sided identity"),
        }
    }
}

/// Sparse element: basis index -> nonzero coefficient.
pub type AlgElement = BTreeMap<u32, Scalar>;

/// An associative algebra presented by basis labels and a sparse product
/// table over an exact coefficient ring.
#[derive(Clone, Debug)]
pub struct StructureConstAlgebra {
    pub ring: CoeffRing,
    dim: usize,
    labels: Vec<String>,
    /// table[i * dim + j] lists the nonzero structure constants of b_i * b_j.
    table: Vec<Vec<(u32, Scalar)>>,
    unit: Option<AlgElement>,
}

impl StructureConstAlgebra {
    /// Builds the algebra and checks associativity: on all basis triples for
    /// dim <= 64, on pseudo-random triples (fixed seed) above.
    pub fn new(
        ring: CoeffRing,
        labels: Vec<String>,
        table: Vec<Vec<(u32, Scalar)>>,
        unit: Option<AlgElement>,
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if table.len() != dim * dim {
            return Err(AlgebraError::DimensionMismatch);
        }
        let alg = StructureConstAlgebra {
            ring,
            dim,
            labels,
            table,
            unit,
        };
        alg.check_associativity()?;
        alg.check_unit()?;
        Ok(alg)
    }

    fn check_associativity(&self) -> Result<(), AlgebraError> {
        let d = self.dim;
        let check = |i: usize, j: usize, k: usize| -> Result<(), AlgebraError> {
            let bi = self.basis_element(i);
            let bj = self.basis_element(j);
            let bk = self.basis_element(k);
            let left = self.mul(&self.mul(&bi, &bj), &bk);
            let right = self.mul(&bi, &self.mul(&bj, &bk));
            if left != right {
                return Err(AlgebraError::NotAssociative(i, j, k));
            }
            Ok(())
        };
        if d <= 64 {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        check(i, j, k)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..2000 {
                let i = rng.gen_range(0..d);
                let j = rng.gen_range(0..d);
                let k = rng.gen_range(0..d);
                check(i, j, k)?;
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<(), AlgebraError> {
        if let Some(u) = &self.unit {
            for i in 0..self.dim {
                let b = self.basis_element(i);
                if self.mul(u, &b) != b || self.mul(&b, u) != b {
                    return Err(AlgebraError::BadUnit);
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> Option<&AlgElement> {
        self.unit.as_ref()
    }

    pub fn zero_element(&self) -> AlgElement {
        AlgElement::new()
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        let mut e = AlgElement::new();
        e.insert(i as u32, self.ring.one());
        e
    }

    pub fn add(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        let mut out = a.clone();
        for (k, v) in b {
            let sum = match out.get(k) {
                Some(w) => self.ring.add(w, v),
                None => v.clone(),
            };
            if self.ring.is_zero(&sum) {
                out.remove(k);
            } else {
                out.insert(*k, sum);
            }
        }
        out
    }

    pub fn neg(&self, a: &AlgElement) -> AlgElement {
        a.iter().map(|(k, v)| (*k, self.ring.neg(v))).collect()
    }

    pub fn sub(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, c: &Scalar, a: &AlgElement) -> AlgElement {
        let mut out = AlgElement::new();
        for (k, v) in a {
            let cv = self.ring.mul(c, v);
            if !self.ring.is_zero(&cv) {
                out.insert(*k, cv);
            }
        }
        out
    }

    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        let mut acc: AlgElement = AlgElement::new();
        for (i, ci) in a {
            for (j, cj) in b {
                let cij = self.ring.mul(ci, cj);
                if self.ring.is_zero(&cij) {
                    continue;
                }
                for (k, c) in &self.table[*i as usize * self.dim + *j as usize] {
                    let term = self.ring.mul(&cij, c);
                    if self.ring.is_zero(&term) {
                        continue;
                    }
                    let sum = match acc.get(k) {
                        Some(w) => self.ring.add(w, &term),
                        None => term,
                    };
                    if self.ring.is_zero(&sum) {
                        acc.remove(k);
                    } else {
                        acc.insert(*k, sum);
                    }
                }
            }
        }
        acc
    }

    /// Element with coefficients enumerated by a mixed-radix index over a
    /// finite ring; index 0 is the zero element and the first basis
    /// coordinate varies fastest.
    pub fn element_from_index(&self, idx: u64) -> AlgElement {
        let size = self.ring.size().expect("finite ring");
        let mut idx = idx;
        let mut out = AlgElement::new();
        for i in 0..self.dim {
            let c = self.ring.element_from_index(idx % size);
            idx /= size;
            if !self.ring.is_zero(&c) {
                out.insert(i as u32, c);
            }
        }
        out
    }

    pub fn random_element(&self, rng: &mut ChaCha8Rng) -> AlgElement {
        let mut out = AlgElement::new();
        for i in 0..self.dim {
            let c = match self.ring.size() {
                Some(size) => self.ring.element_from_index(rng.gen_range(0..size)),
                None => {
                    // small random rationals
                    let num = rng.gen_range(-9i64..=9);
                    self.ring.from_int(num)
                }
            };
            if !self.ring.is_zero(&c) {
                out.insert(i as u32, c);
            }
        }
        out
    }

    pub fn format_element(&self, a: &AlgElement) -> String {
        if a.is_empty() {
            return String::from("0");
        }
        let parts: Vec<String> = a
            .iter()
            .map(|(k, v)| format!("{}*{}", self.ring.format_scalar(v), self.labels[*k as usize]))
            .collect();
        parts.join(" + ")
    }
}

/// The semigroup algebra RS: free module on the elements of S with the
/// bilinear extension of the Cayley table. Unital exactly when S is a monoid.
pub fn semigroup_algebra(
    s: &FiniteInverseSemigroup,
    ring: &CoeffRing,
) -> StructureConstAlgebra {
    let n = s.len();
    let mut table = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = vec![(s.mul(i, j) as u32, ring.one())];
        }
    }
    let labels = (0..n).map(|i| s.label(i)).collect();
    let unit = s.monoid_identity().map(|e| {
        let mut u = AlgElement::new();
        u.insert(e as u32, ring.one());
        u
    });
    StructureConstAlgebra::new(ring.clone(), labels, table, unit).expect("semigroup algebra")
}

/// The convolution algebra RG of a finite discrete groupoid: basis indexed by
/// arrows, with b_g * b_h = b_{gh} when composable and 0 otherwise. The unit
/// is the sum of the unit-arrow indicators.
pub fn groupoid_algebra(g: &FiniteGroupoid, ring: &CoeffRing) -> StructureConstAlgebra {
    let n = g.arrow_count();
    let mut table = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            if let Some(k) = g.compose(i, j) {
                table[i * n + j] = vec![(k as u32, ring.one())];
            }
        }
    }
    let labels = (0..n).map(|i| g.arrow_label(i)).collect();
    let mut unit = AlgElement::new();
    for u in 0..g.unit_count() {
        unit.insert(g.unit_arrow(u) as u32, ring.one());
    }
    StructureConstAlgebra::new(ring.clone(), labels, table, Some(unit)).expect("groupoid algebra")
}

/// The full matrix algebra M_n(R) by matrix units.
pub fn matrix_algebra(n: usize, ring: &CoeffRing) -> StructureConstAlgebra {
    matrix_group_algebra(n, &GroupTable::trivial(), ring)
}

/// M_n(R\[G\]) with basis E_{i,j} g; the target of the matrix-units
/// decomposition of a transitive groupoid with isotropy G.
pub fn matrix_group_algebra(
    n: usize,
    group: &GroupTable,
    ring: &CoeffRing,
) -> StructureConstAlgebra {
    let m = group.order();
    let dim = n * n * m;
    let idx = |i: usize, j: usize, g: usize| (i * n + j) * m + g;
    let mut table = vec![Vec::new(); dim * dim];
    let mut labels = vec![String::new(); dim];
    for i in 0..n {
        for j in 0..n {
            for g in 0..m {
                labels[idx(i, j, g)] = format!("E{i}{j}.{}", group.label(g));
                for k in 0..n {
                    for l in 0..n {
                        for h in 0..m {
                            if j == k {
                                table[idx(i, j, g) * dim + idx(k, l, h)] =
                                    vec![(idx(i, l, group.mul(g, h)) as u32, ring.one())];
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = AlgElement::new();
    for i in 0..n {
        unit.insert(idx(i, i, group.identity()) as u32, ring.one());
    }
    StructureConstAlgebra::new(ring.clone(), labels, table, Some(unit)).expect("matrix algebra")
}

/// Solves a X a = a for X by exact Gaussian elimination over a field.
///
/// Returns a quasi-inverse b (re-verified: aba = a) or None when the linear
/// system is inconsistent, i.e. a is not regular.
pub fn element_is_regular(
    alg: &StructureConstAlgebra,
    a: &AlgElement,
) -> Result<Option<AlgElement>, AlgebraError> {
    if !alg.ring.is_field() {
        return Err(AlgebraError::UnsupportedRing);
    }
    let d = alg.dim;
    // column k of the system is the coordinate vector of a * b_k * a
    let mut m = Matrix::zeros(&alg.ring, d, d);
    for k in 0..d {
        let col = alg.mul(&alg.mul(a, &alg.basis_element(k)), a);
        for (row, c) in &col {
            m.set(*row as usize, k, c.clone());
        }
    }
    let mut rhs = vec![alg.ring.zero(); d];
    for (row, c) in a {
        rhs[*row as usize] = c.clone();
    }
    let sol = linalg::solve(&alg.ring, &m, &rhs).map_err(|_| AlgebraError::UnsupportedRing)?;
    Ok(sol.map(|x| {
        let mut b = AlgElement::new();
        for (k, c) in x.into_iter().enumerate() {
            if !alg.ring.is_zero(&c) {
                b.insert(k as u32, c);
            }
        }
        debug_assert_eq!(alg.mul(&alg.mul(a, &b), a), *a);
        b
    }))
}

/// Exhaustive quasi-inverse search over a finite coefficient ring.
pub fn exhaustive_quasi_inverse(
    alg: &StructureConstAlgebra,
    a: &AlgElement,
) -> Option<AlgElement> {
    let size = alg.ring.size().expect("finite ring");
    let total = size
        .checked_pow(alg.dim as u32)
        .expect("element sweep too large to enumerate");
    (0..total)
        .map(|i| alg.element_from_index(i))
        .find(|b| alg.mul(&alg.mul(a, b), a) == *a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleMethod {
    Exhaustive,
    TraceRadical,
    Sampled(u64),
    /// Componentwise over a product coefficient ring.
    Composite,
}

impl OracleMethod {
    pub fn name(&self) -> String {
        match self {
            OracleMethod::Exhaustive => String::from("Exhaustive"),
            OracleMethod::TraceRadical => String::from("TraceRadical"),
            OracleMethod::Sampled(n) => format!("Sampled({n})"),
            OracleMethod::Composite => String::from("Composite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Regular,
    /// A witness with no quasi-inverse; re-checkable via the solver or an
    /// exhaustive sweep.
    NotRegular(AlgElement),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub outcome: OracleOutcome,
    pub method: OracleMethod,
}

impl OracleVerdict {
    pub fn is_definitive(&self) -> bool {
        !matches!(self.outcome, OracleOutcome::Unknown)
    }
}

fn per_element_regular(alg: &StructureConstAlgebra, a: &AlgElement) -> bool {
    if alg.ring.is_field() {
        element_is_regular(alg, a).expect("field").is_some()
    } else {
        exhaustive_quasi_inverse(alg, a).is_some()
    }
}

/// Brute-force regularity oracle.
///
/// Over a finite field with |F|^dim within budget every element is swept and
/// tested by the linear solver (Exhaustive). Over Q the trace-form radical
/// decides (TraceRadical; semisimple Artinian rings are regular, and a
/// nonzero radical yields a nilpotent witness). Over finite non-field rings
/// the sweep needs |R|^dim quasi-inverse searches per element, so the
/// exhaustive tier applies when |R|^(2 dim) fits the budget; otherwise
/// sampling can only falsify, and absence of a witness reports Unknown.
/// Product rings decompose componentwise.
pub fn algebra_is_regular_oracle(
    alg: &StructureConstAlgebra,
    budget: u64,
    seed: u64,
) -> OracleVerdict {
    match &alg.ring {
        CoeffRing::Rationals => {
            let radical = trace_radical_char0(alg).expect("rationals");
            match radical.into_iter().next() {
                None => OracleVerdict {
                    outcome: OracleOutcome::Regular,
                    method: OracleMethod::TraceRadical,
                },
                Some(witness) => {
                    debug_assert!(element_is_regular(alg, &witness).unwrap().is_none());
                    OracleVerdict {
                        outcome: OracleOutcome::NotRegular(witness),
                        method: OracleMethod::TraceRadical,
                    }
                }
            }
        }
        CoeffRing::PrimeField(_) | CoeffRing::IntegersMod(_) => {
            let size = alg.ring.size().expect("finite");
            let sweep = size.checked_pow(alg.dim as u32);
            let cost = if alg.ring.is_field() {
                sweep
            } else {
                sweep.and_then(|s| s.checked_mul(s))
            };
            match cost {
                Some(c) if c <= budget => {
                    let total = sweep.unwrap();
                    for i in 0..total {
                        let a = alg.element_from_index(i);
                        if !per_element_regular(alg, &a) {
                            return OracleVerdict {
                                outcome: OracleOutcome::NotRegular(a),
                                method: OracleMethod::Exhaustive,
                            };
                        }
                    }
                    OracleVerdict {
                        outcome: OracleOutcome::Regular,
                        method: OracleMethod::Exhaustive,
                    }
                }
                _ => sampled_oracle(alg, budget, seed),
            }
        }
        CoeffRing::Product(factors) => {
            // A = A_1 x ... x A_k componentwise; regular iff every factor is
            let mut witness: Option<AlgElement> = None;
            let mut all_definitive = true;
            for (pos, factor) in factors.iter().enumerate() {
                let proj = project_algebra(alg, pos, factor);
                let sub = algebra_is_regular_oracle(&proj, budget, seed);
                match sub.outcome {
                    OracleOutcome::Regular => {}
                    OracleOutcome::NotRegular(w) => {
                        witness.get_or_insert(lift_witness(alg, factors, pos, &w));
                    }
                    OracleOutcome::Unknown => all_definitive = false,
                }
            }
            let outcome = match witness {
                Some(w) => OracleOutcome::NotRegular(w),
                None if all_definitive => OracleOutcome::Regular,
                None => OracleOutcome::Unknown,
            };
            OracleVerdict {
                outcome,
                method: OracleMethod::Composite,
            }
        }
    }
}

/// The same algebra with coefficients projected to one product factor.
fn project_algebra(
    alg: &StructureConstAlgebra,
    pos: usize,
    factor: &CoeffRing,
) -> StructureConstAlgebra {
    let proj = |s: &Scalar| -> Scalar {
        match s {
            Scalar::Tuple(xs) => xs[pos].clone(),
            _ => panic!("expected tuple scalar"),
        }
    };
    let table = alg
        .table
        .iter()
        .map(|cell| {
            cell.iter()
                .filter_map(|(k, c)| {
                    let pc = proj(c);
                    if factor.is_zero(&pc) {
                        None
                    } else {
                        Some((*k, pc))
                    }
                })
                .collect()
        })
        .collect();
    let unit = alg.unit.as_ref().map(|u| {
        u.iter()
            .filter_map(|(k, c)| {
                let pc = proj(c);
                if factor.is_zero(&pc) {
                    None
                } else {
                    Some((*k, pc))
                }
            })
            .collect()
    });
    StructureConstAlgebra::new(factor.clone(), alg.labels.clone(), table, unit)
        .expect("projected algebra")
}

/// Lifts a single-factor witness back into the product ring (other
/// components zero); a X a = a then fails in that component for every X.
fn lift_witness(
    alg: &StructureConstAlgebra,
    factors: &[CoeffRing],
    pos: usize,
    w: &AlgElement,
) -> AlgElement {
    w.iter()
        .map(|(k, c)| {
            let tuple: Vec<Scalar> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| if i == pos { c.clone() } else { f.zero() })
                .collect();
            (*k, Scalar::Tuple(tuple))
        })
        .collect::<AlgElement>()
        .into_iter()
        .filter(|(_, c)| !alg.ring.is_zero(c))
        .collect()
}

fn sampled_oracle(alg: &StructureConstAlgebra, budget: u64, seed: u64) -> OracleVerdict {
    let size = alg.ring.size().expect("finite ring");
    let per_test: u64 = if alg.ring.is_field() {
        1
    } else {
        size.saturating_pow(alg.dim as u32)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spent: u64 = 0;
    let mut count: u64 = 0;
    while spent + per_test <= budget {
        let a = alg.random_element(&mut rng);
        spent += per_test;
        count += 1;
        if !per_element_regular(alg, &a) {
            return OracleVerdict {
                outcome: OracleOutcome::NotRegular(a),
                method: OracleMethod::Sampled(count),
            };
        }
    }
    OracleVerdict {
        outcome: OracleOutcome::Unknown,
        method: OracleMethod::Sampled(count),
    }
}

/// Basis of the radical of the trace form over Q: the kernel of the Gram
/// matrix G_{ij} = Tr(L_{b_i} L_{b_j}) of left multiplications.
///
/// In characteristic zero this kernel is the Jacobson radical, so an empty
/// basis certifies the algebra semisimple, hence regular. Works for
/// non-unital algebras too (a non-nilpotent x has Tr(L_x^m) != 0 for some
/// m >= 2 by Newton's identities).
pub fn trace_radical_char0(
    alg: &StructureConstAlgebra,
) -> Result<Vec<AlgElement>, AlgebraError> {
    if alg.ring != CoeffRing::Rationals {
        return Err(AlgebraError::UnsupportedRing);
    }
    let d = alg.dim;
    // Tr(L_a L_b) = sum_{i,k} c^k_{a,i} c^i_{b,k} over structure constants
    let sc = |a: usize, i: usize| -> &[(u32, Scalar)] { &alg.table[a * d + i] };
    let mut gram = Matrix::zeros(&alg.ring, d, d);
    for a in 0..d {
        for b in 0..d {
            let mut acc = alg.ring.zero();
            for i in 0..d {
                for (k, c1) in sc(a, i) {
                    for (i2, c2) in sc(b, *k as usize) {
                        if *i2 as usize == i {
                            acc = alg.ring.add(&acc, &alg.ring.mul(c1, c2));
                        }
                    }
                }
            }
            gram.set(a, b, acc);
        }
    }
    let kernel = linalg::kernel_basis(&alg.ring, &gram).map_err(|_| AlgebraError::UnsupportedRing)?;
    Ok(kernel
        .into_iter()
        .map(|v| {
            v.into_iter()
                .enumerate()
                .filter(|(_, c)| !alg.ring.is_zero(c))
                .map(|(k, c)| (k as u32, c))
                .collect()
        })
        .collect())
}

/// Integer basis map: image of each source basis vector as integer
/// combinations of target basis vectors.
pub type BasisMap = Vec<Vec<(usize, i64)>>;

/// Checks that a linear map given by a basis matrix is an algebra
/// isomorphism: bijective, multiplicative on all basis pairs, and
/// unit-preserving when both units are declared.
pub fn iso_check(
    a: &StructureConstAlgebra,
    b: &StructureConstAlgebra,
    map: &BasisMap,
) -> Result<bool, AlgebraError> {
    if a.dim != b.dim || map.len() != a.dim || a.ring != b.ring {
        return Err(AlgebraError::DimensionMismatch);
    }
    let ring = &a.ring;
    let apply = |x: &AlgElement| -> AlgElement {
        let mut out = AlgElement::new();
        for (i, c) in x {
            for (j, coeff) in &map[*i as usize] {
                let term = ring.mul(c, &ring.from_int(*coeff));
                let sum = match out.get(&(*j as u32)) {
                    Some(w) => ring.add(w, &term),
                    None => term,
                };
                if ring.is_zero(&sum) {
                    out.remove(&(*j as u32));
                } else {
                    out.insert(*j as u32, sum);
                }
            }
        }
        out
    };
    // bijectivity: the matrix of the map is invertible
    let mut m = Matrix::zeros(ring, a.dim, a.dim);
    for (i, row) in map.iter().enumerate() {
        for (j, coeff) in row {
            m.set(*j, i, ring.add(m.at(*j, i), &ring.from_int(*coeff)));
        }
    }
    match linalg::is_invertible_matrix(ring, &m) {
        Ok(true) => {}
        Ok(false) => return Ok(false),
        Err(_) => return Err(AlgebraError::UnsupportedRing),
    }
    // multiplicativity on basis pairs
    for i in 0..a.dim {
        for j in 0..a.dim {
            let lhs = apply(&a.mul(&a.basis_element(i), &a.basis_element(j)));
            let rhs = b.mul(&apply(&a.basis_element(i)), &apply(&a.basis_element(j)));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    if let (Some(ua), Some(ub)) = (&a.unit, &b.unit) {
        if apply(ua) != *ub {
            return Ok(false);
        }
    }
    Ok(true)
}
