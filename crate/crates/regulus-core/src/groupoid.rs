//! Finite discrete groupoids. Every finite discrete groupoid is ample with
//! all subsets open, so the topological condition of the regularity theorem
//! is automatic and the algebraic content (orbits, isotropy, matrix units,
//! the universal groupoid of an inverse semigroup) survives intact.

use alloc::{
    collections::{BTreeMap, BTreeSet},
    format,
    string::String,
    vec,
    vec::Vec,
};
use core::fmt;

use crate::algebra::BasisMap;
use crate::decision::{Condition, RegularityDecision};
use crate::group::{GroupTable, GroupError};
use crate::invsgp::FiniteInverseSemigroup;
use crate::ring::{is_invertible, is_regular_ring, CoeffRing};

const UNDEF: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupoidError {
    ArrowOutOfRange,
    /// Composition defined on a non-composable pair or undefined on a
    /// composable one.
    BadCompositionDomain(usize, usize),
    WrongEndpoints(usize, usize),
    NotAssociative(usize, usize, usize),
    MissingIdentity(usize),
    MissingInverse(usize),
    InvalidAction(String),
    NotTransitive,
    GroupInvalid(GroupError),
}

impl fmt::Display for GroupoidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupoidError::ArrowOutOfRange => write!(f, "arrow index out of range"),
            GroupoidError::BadCompositionDomain(a, b) => {
                write!(f, "composition domain wrong at pair ({a},{b})")
            }
            GroupoidError::WrongEndpoints(a, b) => {
                write!(f, "composite of ({a},{b}) has wrong endpoints")
            }
            GroupoidError::NotAssociative(a, b, c) => {
                write!(f, "associativity fails at ({a},{b},{c})")
            }
            GroupoidError::MissingIdentity(u) => write!(f, "unit {u} has no identity arrow"),
            GroupoidError::MissingInverse(a) => write!(f, "arrow {a} has no inverse"),
            GroupoidError::InvalidAction(r) => write!(f, "invalid group action: {r}"),
            GroupoidError::NotTransitive => write!(f, "groupoid is not transitive"),
            GroupoidError::GroupInvalid(e) => write!(f, "isotropy is not a group: {e}"),
        }
    }
}

/// A finite groupoid: arrows with source/target in a finite unit set,
/// partial composition, inverses, and one identity arrow per unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    unit_count: usize,
    src: Vec<u32>,
    tgt: Vec<u32>,
    compose: Vec<u32>,
    inverse: Vec<u32>,
    unit_arrow: Vec<u32>,
    labels: Vec<String>,
}

impl FiniteGroupoid {
    /// Builds from a sparse composition list and validates all groupoid
    /// axioms. `compose_list` holds triples (a, b, ab) meaning "a after b".
    pub fn from_parts(
        unit_count: usize,
        arrows: &[(usize, usize)],
        compose_list: &[(usize, usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupoidError> {
        let m = arrows.len();
        let mut compose = vec![UNDEF; m * m];
        for &(a, b, c) in compose_list {
            if a >= m || b >= m || c >= m {
                return Err(GroupoidError::ArrowOutOfRange);
            }
            compose[a * m + b] = c as u32;
        }
        let src: Vec<u32> = arrows.iter().map(|&(s, _)| s as u32).collect();
        let tgt: Vec<u32> = arrows.iter().map(|&(_, t)| t as u32).collect();
        if src.iter().chain(tgt.iter()).any(|&u| u as usize >= unit_count) {
            return Err(GroupoidError::ArrowOutOfRange);
        }
        let labels =
            labels.unwrap_or_else(|| (0..m).map(|i| format!("g{i}")).collect());
        let mut g = FiniteGroupoid {
            unit_count,
            src,
            tgt,
            compose,
            inverse: vec![UNDEF; m],
            unit_arrow: vec![UNDEF; unit_count],
            labels,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&mut self) -> Result<(), GroupoidError> {
        let m = self.arrow_count();
        // composition defined exactly when src(a) = tgt(b), endpoints correct
        for a in 0..m {
            for b in 0..m {
                let c = self.compose[a * m + b];
                let composable = self.src[a] == self.tgt[b];
                if composable != (c != UNDEF) {
                    return Err(GroupoidError::BadCompositionDomain(a, b));
                }
                if c != UNDEF {
                    let c = c as usize;
                    if self.src[c] != self.src[b] || self.tgt[c] != self.tgt[a] {
                        return Err(GroupoidError::WrongEndpoints(a, b));
                    }
                }
            }
        }
        // associativity on defined triples
        for a in 0..m {
            for b in 0..m {
                let Some(ab) = self.compose(a, b) else { continue };
                for c in 0..m {
                    if let Some(bc) = self.compose(b, c) {
                        if self.compose(ab, c) != self.compose(a, bc) {
                            return Err(GroupoidError::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        }
        // identity arrow per unit
        for u in 0..self.unit_count {
            let id = (0..m).find(|&e| {
                self.src[e] == u as u32
                    && self.tgt[e] == u as u32
                    && (0..m).all(|x| {
                        (self.src[x] != u as u32 || self.compose(x, e) == Some(x))
                            && (self.tgt[x] != u as u32 || self.compose(e, x) == Some(x))
                    })
            });
            self.unit_arrow[u] = id.ok_or(GroupoidError::MissingIdentity(u))? as u32;
        }
        // two-sided inverses
        for a in 0..m {
            let inv = (0..m).find(|&b| {
                self.compose(a, b) == Some(self.unit_arrow[self.tgt[a] as usize] as usize)
                    && self.compose(b, a) == Some(self.unit_arrow[self.src[a] as usize] as usize)
            });
            self.inverse[a] = inv.ok_or(GroupoidError::MissingInverse(a))? as u32;
        }
        Ok(())
    }

    pub fn arrow_count(&self) -> usize {
        self.src.len()
    }

    pub fn unit_count(&self) -> usize {
        self.unit_count
    }

    pub fn src(&self, a: usize) -> usize {
        self.src[a] as usize
    }

    pub fn tgt(&self, a: usize) -> usize {
        self.tgt[a] as usize
    }

    /// "a after b": defined iff src(a) = tgt(b).
    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        let c = self.compose[a * self.arrow_count() + b];
        (c != UNDEF).then_some(c as usize)
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// The identity arrow at a unit.
    pub fn unit_arrow(&self, u: usize) -> usize {
        self.unit_arrow[u] as usize
    }

    pub fn is_unit_arrow(&self, a: usize) -> bool {
        self.unit_arrow[self.src[a] as usize] as usize == a
    }

    pub fn arrow_label(&self, a: usize) -> String {
        self.labels[a].clone()
    }

    /// Orbits of the unit space: connected components under "exists arrow".
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.unit_count).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for a in 0..self.arrow_count() {
            let (s, t) = (self.src(a), self.tgt(a));
            let (rs, rt) = (find(&mut parent, s), find(&mut parent, t));
            if rs != rt {
                parent[rs.max(rt)] = rs.min(rt);
            }
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for u in 0..self.unit_count {
            let r = find(&mut parent, u);
            classes.entry(r).or_default().push(u);
        }
        classes.into_values().collect()
    }

    /// The isotropy group at a unit, with the arrows realizing its elements.
    pub fn isotropy_group(&self, x: usize) -> Result<(GroupTable, Vec<usize>), GroupoidError> {
        let members: Vec<usize> = (0..self.arrow_count())
            .filter(|&a| self.src(a) == x && self.tgt(a) == x)
            .collect();
        let pos: BTreeMap<usize, usize> =
            members.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let n = members.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let c = self
                    .compose(members[i], members[j])
                    .ok_or(GroupoidError::BadCompositionDomain(members[i], members[j]))?;
                table[i * n + j] = pos[&c] as u32;
            }
        }
        let labels = members.iter().map(|&a| self.labels[a].clone()).collect();
        let group = GroupTable::new(table, labels).map_err(GroupoidError::GroupInvalid)?;
        Ok((group, members))
    }

    pub fn is_principal(&self) -> bool {
        (0..self.unit_count).all(|x| {
            (0..self.arrow_count())
                .filter(|&a| self.src(a) == x && self.tgt(a) == x)
                .count()
                == 1
        })
    }

    /// The subgroupoid on a subset of units; also returns the arrow
    /// re-indexing (old -> new).
    pub fn restrict_to_units(&self, units: &[usize]) -> (FiniteGroupoid, BTreeMap<usize, usize>) {
        let unit_set: BTreeSet<usize> = units.iter().copied().collect();
        let new_unit: BTreeMap<usize, usize> = units
            .iter()
            .enumerate()
            .map(|(i, &u)| (u, i))
            .collect();
        let kept: Vec<usize> = (0..self.arrow_count())
            .filter(|&a| unit_set.contains(&self.src(a)) && unit_set.contains(&self.tgt(a)))
            .collect();
        let arrow_map: BTreeMap<usize, usize> =
            kept.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let arrows: Vec<(usize, usize)> = kept
            .iter()
            .map(|&a| (new_unit[&self.src(a)], new_unit[&self.tgt(a)]))
            .collect();
        let mut compose_list = Vec::new();
        for &a in &kept {
            for &b in &kept {
                if let Some(c) = self.compose(a, b) {
                    compose_list.push((arrow_map[&a], arrow_map[&b], arrow_map[&c]));
                }
            }
        }
        let labels = kept.iter().map(|&a| self.labels[a].clone()).collect();
        let g = FiniteGroupoid::from_parts(units.len(), &arrows, &compose_list, Some(labels))
            .expect("restriction of a valid groupoid");
        (g, arrow_map)
    }

    /// The counting identity |G| = sum over orbits of |O|^2 * |G_x^x|.
    pub fn counting_identity_holds(&self) -> bool {
        let mut total = 0usize;
        for orbit in self.orbits() {
            let (iso, _) = match self.isotropy_group(orbit[0]) {
                Ok(v) => v,
                Err(_) => return false,
            };
            total += orbit.len() * orbit.len() * iso.order();
        }
        total == self.arrow_count()
    }

    /// The pair groupoid on n units: one arrow j -> i for every pair.
    pub fn pair_groupoid(n: usize) -> Self {
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                arrows.push((j, i)); // arrow (i,j): j -> i
            }
        }
        let idx = |i: usize, j: usize| i * n + j;
        let mut compose_list = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    compose_list.push((idx(i, j), idx(j, k), idx(i, k)));
                }
            }
        }
        let labels = (0..n)
            .flat_map(|i| (0..n).map(move |j| format!("({i},{j})")))
            .collect();
        FiniteGroupoid::from_parts(n, &arrows, &compose_list, Some(labels)).expect("pair groupoid")
    }

    /// A group viewed as a one-unit groupoid.
    pub fn group_groupoid(group: &GroupTable) -> Self {
        let n = group.order();
        let arrows = vec![(0usize, 0usize); n];
        let mut compose_list = Vec::new();
        for i in 0..n {
            for j in 0..n {
                compose_list.push((i, j, group.mul(i, j)));
            }
        }
        let labels = (0..n).map(|i| String::from(group.label(i))).collect();
        FiniteGroupoid::from_parts(1, &arrows, &compose_list, Some(labels)).expect("group groupoid")
    }

    /// The transitive groupoid on n units with isotropy H: arrows are
    /// triples (i, h, j) : j -> i composing by (i,h,j)(j,h',k) = (i,hh',k).
    pub fn transitive_with_isotropy(n: usize, group: &GroupTable) -> Self {
        let m = group.order();
        let idx = |i: usize, h: usize, j: usize| (i * n + j) * m + h;
        let mut arrows = vec![(0usize, 0usize); n * n * m];
        let mut labels = vec![String::new(); n * n * m];
        for i in 0..n {
            for j in 0..n {
                for h in 0..m {
                    arrows[idx(i, h, j)] = (j, i);
                    labels[idx(i, h, j)] = format!("({i},{},{j})", group.label(h));
                }
            }
        }
        let mut compose_list = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for h in 0..m {
                        for h2 in 0..m {
                            compose_list.push((
                                idx(i, h, j),
                                idx(j, h2, k),
                                idx(i, group.mul(h, h2), k),
                            ));
                        }
                    }
                }
            }
        }
        FiniteGroupoid::from_parts(n, &arrows, &compose_list, Some(labels))
            .expect("transitive groupoid")
    }

    /// Disjoint union.
    pub fn disjoint_union(parts: &[FiniteGroupoid]) -> Self {
        let mut arrows = Vec::new();
        let mut compose_list = Vec::new();
        let mut labels = Vec::new();
        let mut unit_offset = 0usize;
        let mut arrow_offset = 0usize;
        for p in parts {
            for a in 0..p.arrow_count() {
                arrows.push((p.src(a) + unit_offset, p.tgt(a) + unit_offset));
                labels.push(p.labels[a].clone());
            }
            for a in 0..p.arrow_count() {
                for b in 0..p.arrow_count() {
                    if let Some(c) = p.compose(a, b) {
                        compose_list.push((a + arrow_offset, b + arrow_offset, c + arrow_offset));
                    }
                }
            }
            unit_offset += p.unit_count();
            arrow_offset += p.arrow_count();
        }
        FiniteGroupoid::from_parts(unit_offset, &arrows, &compose_list, Some(labels))
            .expect("disjoint union")
    }
}

/// Regularity of the groupoid algebra RG for finite discrete G: the
/// directed-union condition of the characterization is automatic, so the
/// verdict is "ring regular and all isotropy prime orders invertible". One
/// base unit per orbit suffices since isotropy groups along an orbit are
/// conjugate.
pub fn decide_regular_groupoid_algebra(
    g: &FiniteGroupoid,
    ring: &CoeffRing,
) -> RegularityDecision {
    let mut evidence = Vec::new();
    evidence.push(Condition::new(
        format!("coefficient ring {} is regular", ring.name()),
        is_regular_ring(ring),
        None,
    ));
    evidence.push(Condition::new(
        "directed union of quasi-compact open subgroupoids (finite discrete)",
        true,
        None,
    ));
    let mut primes = BTreeSet::new();
    for orbit in g.orbits() {
        if let Ok((iso, _)) = g.isotropy_group(orbit[0]) {
            for p in iso.prime_support() {
                primes.insert(p);
            }
        }
    }
    let bad: Vec<u64> = primes
        .iter()
        .copied()
        .filter(|&p| !is_invertible(ring, p))
        .collect();
    evidence.push(Condition::new(
        format!(
            "isotropy subgroup orders invertible (prime support {{{}}})",
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
            Some(format!("prime {} not invertible in {}", bad[0], ring.name()))
        },
    ));
    RegularityDecision::from_conditions(evidence)
}

/// Matrix-units data for one transitive component.
#[derive(Clone, Debug)]
pub struct MatrixUnitsComponent {
    /// Units of the component, base first.
    pub orbit: Vec<usize>,
    /// transversal\[i\] : base -> orbit\[i\], with transversal\[0\] the identity.
    pub transversal: Vec<usize>,
    /// bisections\[i\]\[j\] = singleton arrow set U_{i,j} = {tau_i tau_j^{-1}}.
    pub bisections: Vec<Vec<Vec<usize>>>,
    pub isotropy: GroupTable,
    /// isotropy_arrows\[k\] is the arrow realizing isotropy element k.
    pub isotropy_arrows: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct MatrixUnitsDecomposition {
    pub components: Vec<MatrixUnitsComponent>,
}

impl MatrixUnitsComponent {
    /// Verifies U_{i,j} U_{k,l} = U_{i,l} when j = k and empty otherwise,
    /// with the product taken arrow-set-wise in the ambient groupoid.
    pub fn matrix_units_relations_hold(&self, g: &FiniteGroupoid) -> bool {
        let n = self.orbit.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut product = BTreeSet::new();
                        for &a in &self.bisections[i][j] {
                            for &b in &self.bisections[k][l] {
                                if let Some(c) = g.compose(a, b) {
                                    product.insert(c);
                                }
                            }
                        }
                        let expected: BTreeSet<usize> = if j == k {
                            self.bisections[i][l].iter().copied().collect()
                        } else {
                            BTreeSet::new()
                        };
                        if product != expected {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Chooses transversal arrows per transitive component and forms the
/// U_{i,j} = U_{i,1} U_{j,1}^{-1} bisections together with the isotropy
/// group at the base unit.
pub fn matrix_units_decomposition(
    g: &FiniteGroupoid,
) -> Result<MatrixUnitsDecomposition, GroupoidError> {
    let mut components = Vec::new();
    for orbit in g.orbits() {
        let base = orbit[0];
        let mut transversal = Vec::with_capacity(orbit.len());
        for &u in &orbit {
            let arrow = (0..g.arrow_count())
                .find(|&a| g.src(a) == base && g.tgt(a) == u)
                .ok_or(GroupoidError::NotTransitive)?;
            let arrow = if u == base { g.unit_arrow(base) } else { arrow };
            transversal.push(arrow);
        }
        let n = orbit.len();
        let mut bisections = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let u = g
                    .compose(transversal[i], g.inverse(transversal[j]))
                    .expect("transversal arrows share the base source");
                bisections[i][j] = vec![u];
            }
        }
        let (isotropy, isotropy_arrows) = g.isotropy_group(base)?;
        components.push(MatrixUnitsComponent {
            orbit,
            transversal,
            bisections,
            isotropy,
            isotropy_arrows,
        });
    }
    Ok(MatrixUnitsDecomposition { components })
}

/// For a transitive groupoid, the basis map realizing RG = M_n(R\[H\]):
/// an arrow gamma : orbit\[j\] -> orbit\[i\] maps to E_{i,j} h with
/// h = tau_i^{-1} gamma tau_j in the isotropy at the base.
///
/// The target algebra must be `matrix_group_algebra(n, H, ring)`.
pub fn matrix_units_iso_map(
    g: &FiniteGroupoid,
    comp: &MatrixUnitsComponent,
) -> Result<BasisMap, GroupoidError> {
    if comp.orbit.len() != g.unit_count() {
        return Err(GroupoidError::NotTransitive);
    }
    let n = comp.orbit.len();
    let m = comp.isotropy.order();
    let unit_pos: BTreeMap<usize, usize> = comp
        .orbit
        .iter()
        .enumerate()
        .map(|(i, &u)| (u, i))
        .collect();
    let iso_pos: BTreeMap<usize, usize> = comp
        .isotropy_arrows
        .iter()
        .enumerate()
        .map(|(k, &a)| (a, k))
        .collect();
    let mut map = Vec::with_capacity(g.arrow_count());
    for gamma in 0..g.arrow_count() {
        let i = unit_pos[&g.tgt(gamma)];
        let j = unit_pos[&g.src(gamma)];
        let h_arrow = g
            .compose(g.inverse(comp.transversal[i]), gamma)
            .and_then(|x| g.compose(x, comp.transversal[j]))
            .ok_or(GroupoidError::NotTransitive)?;
        let h = *iso_pos
            .get(&h_arrow)
            .ok_or(GroupoidError::NotTransitive)?;
        map.push(vec![((i * n + j) * m + h, 1i64)]);
    }
    Ok(map)
}

/// The transformation groupoid of a finite group action: arrows (g, x) with
/// source x, target g.x and product (h, g.x)(g, x) = (hg, x).
pub fn transformation_groupoid(
    group: &GroupTable,
    action: &[Vec<usize>],
) -> Result<FiniteGroupoid, GroupoidError> {
    let n = group.order();
    if action.len() != n {
        return Err(GroupoidError::InvalidAction(String::from(
            "one permutation per group element required",
        )));
    }
    let points = action[0].len();
    for (g, perm) in action.iter().enumerate() {
        if perm.len() != points {
            return Err(GroupoidError::InvalidAction(String::from(
                "permutations act on different sets",
            )));
        }
        let mut seen = vec![false; points];
        for &y in perm {
            if y >= points || seen[y] {
                return Err(GroupoidError::InvalidAction(format!(
                    "element {g} does not act bijectively"
                )));
            }
            seen[y] = true;
        }
    }
    for x in 0..points {
        if action[group.identity()][x] != x {
            return Err(GroupoidError::InvalidAction(String::from(
                "identity must act trivially",
            )));
        }
    }
    for g in 0..n {
        for h in 0..n {
            for x in 0..points {
                if action[group.mul(g, h)][x] != action[g][action[h][x]] {
                    return Err(GroupoidError::InvalidAction(format!(
                        "action axiom fails at ({g},{h},{x})"
                    )));
                }
            }
        }
    }
    let idx = |g: usize, x: usize| g * points + x;
    let mut arrows = vec![(0usize, 0usize); n * points];
    let mut labels = vec![String::new(); n * points];
    for g in 0..n {
        for x in 0..points {
            arrows[idx(g, x)] = (x, action[g][x]);
            labels[idx(g, x)] = format!("({},{x})", group.label(g));
        }
    }
    let mut compose_list = Vec::new();
    for g in 0..n {
        for h in 0..n {
            for x in 0..points {
                // (h, g.x) after (g, x) = (hg, x)
                compose_list.push((idx(h, action[g][x]), idx(g, x), idx(group.mul(h, g), x)));
            }
        }
    }
    FiniteGroupoid::from_parts(points, &arrows, &compose_list, Some(labels))
}

/// The universal groupoid of a finite inverse semigroup, computed literally
/// from the germ construction over the principal characters of E(S).
#[derive(Clone, Debug)]
pub struct UniversalGroupoid {
    pub groupoid: FiniteGroupoid,
    /// Idempotent index of S realizing each unit (the principal character).
    pub unit_idempotents: Vec<usize>,
    /// Basis map psi_hat : RS -> R G_S sending s to the indicator of the
    /// bisection (s, D_{s*s}) expanded in germ indicators.
    pub psi_hat: BasisMap,
    /// Germ class arrow of the pair (s, f) with s*s >= f.
    pub germ_of: BTreeMap<(usize, usize), usize>,
}

/// Builds the universal groupoid of S.
///
/// Characters of the finite semilattice E(S) are principal filters,
/// represented by their generating idempotent. A pair (s, x_f) with
/// x_f(s*s) = 1 represents a germ; two pairs (s, x_f), (t, x_f) are
/// equivalent iff se = te for some idempotent e with x_f(e) = 1, found here
/// by direct search over E(S).
pub fn universal_groupoid(s: &FiniteInverseSemigroup) -> UniversalGroupoid {
    let idempotents = s.idempotents();
    let unit_of_idem: BTreeMap<usize, usize> = idempotents
        .iter()
        .enumerate()
        .map(|(u, &e)| (e, u))
        .collect();
    // x_f(e) = 1 iff e >= f in the natural order, i.e. ef = f
    let char_value = |f: usize, e: usize| s.mul(e, f) == f;

    // enumerate pairs and compute germ classes per character
    let mut germ_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut arrow_src = Vec::new();
    let mut arrow_tgt = Vec::new();
    let mut arrow_rep: Vec<(usize, usize)> = Vec::new();
    let mut labels = Vec::new();
    for (u, &f) in idempotents.iter().enumerate() {
        let members: Vec<usize> = (0..s.len())
            .filter(|&x| char_value(f, s.mul(s.inv(x), x)))
            .collect();
        let equivalent = |a: usize, b: usize| -> bool {
            idempotents
                .iter()
                .any(|&e| char_value(f, e) && s.mul(a, e) == s.mul(b, e))
        };
        let mut class_rep: Vec<usize> = Vec::new();
        for &x in &members {
            let found = class_rep.iter().find(|&&r| equivalent(r, x)).copied();
            let rep = match found {
                Some(r) => r,
                None => {
                    class_rep.push(x);
                    x
                }
            };
            let key = (x, f);
            let arrow = match germ_of.get(&(rep, f)) {
                Some(&a) => a,
                None => {
                    let a = arrow_rep.len();
                    arrow_rep.push((rep, f));
                    arrow_src.push(u);
                    // target is the character of s f s*
                    let sfs = s.mul(s.mul(rep, f), s.inv(rep));
                    arrow_tgt.push(unit_of_idem[&sfs]);
                    labels.push(format!("[{};{}]", s.label(rep), s.label(f)));
                    germ_of.insert((rep, f), a);
                    a
                }
            };
            germ_of.insert(key, arrow);
        }
    }

    // composition [s, t.x][t, x] = [st, x]
    let mut compose_list = Vec::new();
    for (a, &(sa, _fa)) in arrow_rep.iter().enumerate() {
        for (b, &(sb, fb)) in arrow_rep.iter().enumerate() {
            if arrow_src[a] == arrow_tgt[b] {
                let st = s.mul(sa, sb);
                let c = germ_of[&(st, fb)];
                compose_list.push((a, b, c));
            }
        }
    }
    let arrows: Vec<(usize, usize)> = arrow_src
        .iter()
        .zip(arrow_tgt.iter())
        .map(|(&a, &b)| (a, b))
        .collect();
    let groupoid = FiniteGroupoid::from_parts(
        idempotents.len(),
        &arrows,
        &compose_list,
        Some(labels),
    )
    .expect("universal groupoid");

    // psi_hat(s) = sum of germ indicators over the domain D_{s*s}
    let mut psi_hat = Vec::with_capacity(s.len());
    for x in 0..s.len() {
        let dom = s.mul(s.inv(x), x);
        let mut row = Vec::new();
        for &f in &idempotents {
            if char_value(f, dom) {
                row.push((germ_of[&(x, f)], 1i64));
            }
        }
        psi_hat.push(row);
    }
    UniversalGroupoid {
        groupoid,
        unit_idempotents: idempotents,
        psi_hat,
        germ_of,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{groupoid_algebra, iso_check, matrix_algebra, matrix_group_algebra, semigroup_algebra};
    use crate::zoo;

    #[test]
    fn pair_groupoid_basics() {
        let g = FiniteGroupoid::pair_groupoid(3);
        assert_eq!(g.arrow_count(), 9);
        assert_eq!(g.orbits().len(), 1);
        assert!(g.is_principal());
        assert!(g.counting_identity_holds());
    }

    #[test]
    fn one_unit_group_groupoid() {
        let g = FiniteGroupoid::group_groupoid(&GroupTable::cyclic(4));
        assert_eq!(g.orbits().len(), 1);
        let (iso, _) = g.isotropy_group(0).unwrap();
        assert_eq!(iso.order(), 4);
        assert!(!g.is_principal());
        assert!(g.counting_identity_holds());
    }

    #[test]
    fn disjoint_units_are_singleton_orbits() {
        let d = FiniteGroupoid::disjoint_union(&[
            FiniteGroupoid::pair_groupoid(1),
            FiniteGroupoid::pair_groupoid(1),
        ]);
        assert_eq!(d.orbits().len(), 2);
        assert!(d.is_principal());
    }

    #[test]
    fn groupoid_algebra_of_pair_groupoid_is_matrix_algebra() {
        let ring = CoeffRing::prime_field(2).unwrap();
        let g = FiniteGroupoid::pair_groupoid(2);
        let alg = groupoid_algebra(&g, &ring);
        assert_eq!(alg.dim(), 4);
        let decomposition = matrix_units_decomposition(&g).unwrap();
        let comp = &decomposition.components[0];
        assert!(comp.matrix_units_relations_hold(&g));
        let map = matrix_units_iso_map(&g, comp).unwrap();
        let target = matrix_algebra(2, &ring);
        assert!(iso_check(&alg, &target, &map).unwrap());
    }

    #[test]
    fn transitive_with_isotropy_is_matrix_group_algebra() {
        for ring in [CoeffRing::Rationals, CoeffRing::prime_field(3).unwrap()] {
            let h = GroupTable::cyclic(2);
            let g = FiniteGroupoid::transitive_with_isotropy(2, &h);
            assert_eq!(g.arrow_count(), 8);
            let alg = groupoid_algebra(&g, &ring);
            let decomposition = matrix_units_decomposition(&g).unwrap();
            let comp = &decomposition.components[0];
            assert!(comp.matrix_units_relations_hold(&g));
            let map = matrix_units_iso_map(&g, comp).unwrap();
            let target = matrix_group_algebra(2, &comp.isotropy, &ring);
            assert!(iso_check(&alg, &target, &map).unwrap());
        }
    }

    #[test]
    fn theorem_decision_for_groupoids() {
        let f2 = CoeffRing::prime_field(2).unwrap();
        let pair = FiniteGroupoid::pair_groupoid(2);
        assert!(decide_regular_groupoid_algebra(&pair, &f2).verdict.is_regular());

        let z2 = FiniteGroupoid::group_groupoid(&GroupTable::cyclic(2));
        assert!(!decide_regular_groupoid_algebra(&z2, &f2).verdict.is_regular());

        let principal = FiniteGroupoid::pair_groupoid(3);
        assert!(decide_regular_groupoid_algebra(&principal, &CoeffRing::Rationals)
            .verdict
            .is_regular());
    }

    #[test]
    fn transformation_groupoid_of_free_swap() {
        let z2 = GroupTable::cyclic(2);
        let action = vec![vec![0, 1], vec![1, 0]];
        let g = transformation_groupoid(&z2, &action).unwrap();
        assert_eq!(g.arrow_count(), 4);
        assert!(g.is_principal());
        assert_eq!(g.orbits().len(), 1);
    }

    #[test]
    fn transformation_groupoid_of_trivial_group_is_the_point_set() {
        let trivial = GroupTable::trivial();
        let g = transformation_groupoid(&trivial, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(g.arrow_count(), 3);
        assert_eq!(g.unit_count(), 3);
        assert!(g.is_principal());
        assert_eq!(g.orbits().len(), 3);
    }

    #[test]
    fn transformation_groupoid_with_fixed_point() {
        let z2 = GroupTable::cyclic(2);
        let action = vec![vec![0], vec![0]];
        let g = transformation_groupoid(&z2, &action).unwrap();
        let (iso, _) = g.isotropy_group(0).unwrap();
        assert_eq!(iso.order(), 2);
        let f2 = CoeffRing::prime_field(2).unwrap();
        assert!(!decide_regular_groupoid_algebra(&g, &f2).verdict.is_regular());
    }

    #[test]
    fn invalid_action_is_rejected() {
        let z2 = GroupTable::cyclic(2);
        let not_bijective = vec![vec![0, 1], vec![0, 0]];
        assert!(matches!(
            transformation_groupoid(&z2, &not_bijective),
            Err(GroupoidError::InvalidAction(_))
        ));
        // Z/4 acting through its quotient is a valid (non-faithful) action
        let z4 = GroupTable::cyclic(4);
        let through_quotient = vec![vec![0, 1], vec![1, 0], vec![0, 1], vec![1, 0]];
        assert!(transformation_groupoid(&z4, &through_quotient).is_ok());
        // but g^2 acting as a swap breaks the action axiom
        let broken = vec![vec![0, 1], vec![1, 0], vec![1, 0], vec![0, 1]];
        assert!(matches!(
            transformation_groupoid(&z4, &broken),
            Err(GroupoidError::InvalidAction(_))
        ));
    }

    #[test]
    fn universal_groupoid_of_group_is_the_group() {
        let s = zoo::cyclic_group_semigroup(3);
        let u = universal_groupoid(&s);
        assert_eq!(u.groupoid.unit_count(), 1);
        assert_eq!(u.groupoid.arrow_count(), 3);
    }

    #[test]
    fn universal_groupoid_of_chain_semilattice() {
        let s = zoo::chain_semilattice(2);
        let u = universal_groupoid(&s);
        assert_eq!(u.groupoid.unit_count(), 2);
        assert_eq!(u.groupoid.arrow_count(), 2);
        assert!(u.groupoid.is_principal());
    }

    #[test]
    fn universal_groupoid_of_b2() {
        let s = zoo::brandt_b2();
        let u = universal_groupoid(&s);
        assert_eq!(u.groupoid.unit_count(), 3);
        assert_eq!(u.groupoid.arrow_count(), 5);
        // the zero character is isolated; the other two units form a pair
        // groupoid component
        let orbit_sizes: Vec<usize> = u.groupoid.orbits().iter().map(|o| o.len()).collect();
        let mut sorted = orbit_sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2]);
    }

    #[test]
    fn psi_hat_is_an_isomorphism_on_the_zoo() {
        for z in zoo::semigroup_zoo() {
            let u = universal_groupoid(&z.semigroup);
            assert_eq!(
                u.groupoid.arrow_count(),
                z.semigroup.len(),
                "dim RG_S = |S| fails for {}",
                z.name
            );
            for ring in [CoeffRing::Rationals, CoeffRing::prime_field(2).unwrap()] {
                let rs = semigroup_algebra(&z.semigroup, &ring);
                let rg = groupoid_algebra(&u.groupoid, &ring);
                assert!(
                    iso_check(&rs, &rg, &u.psi_hat).unwrap(),
                    "psi_hat not an isomorphism for {} over {}",
                    z.name,
                    ring.name()
                );
            }
        }
    }

    #[test]
    fn universal_groupoid_isotropy_matches_maximal_subgroups() {
        use crate::invsgp::maximal_subgroup;
        for z in zoo::semigroup_zoo() {
            let s = &z.semigroup;
            let u = universal_groupoid(s);
            for (unit, &e) in u.unit_idempotents.iter().enumerate() {
                let (ge, members) = maximal_subgroup(s, e).unwrap();
                let (iso, iso_arrows) = u.groupoid.isotropy_group(unit).unwrap();
                assert_eq!(ge.order(), iso.order(), "at {} in {}", e, z.name);
                // the canonical map g -> germ [g, x_e] is an isomorphism
                let arrow_pos: BTreeMap<usize, usize> = iso_arrows
                    .iter()
                    .enumerate()
                    .map(|(k, &a)| (a, k))
                    .collect();
                let to_iso: Vec<usize> = members
                    .iter()
                    .map(|&g| arrow_pos[&u.germ_of[&(g, e)]])
                    .collect();
                for (i, &gi) in members.iter().enumerate() {
                    for (j, &gj) in members.iter().enumerate() {
                        let prod = s.mul(gi, gj);
                        let k = members.iter().position(|&m| m == prod).unwrap();
                        assert_eq!(
                            iso.mul(to_iso[i], to_iso[j]),
                            to_iso[k],
                            "isotropy/maximal subgroup mismatch in {}",
                            z.name
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn groupoid_decision_matches_oracle_on_small_cases() {
        use crate::algebra::{algebra_is_regular_oracle, OracleOutcome};
        let f2 = CoeffRing::prime_field(2).unwrap();
        let cases = [
            FiniteGroupoid::pair_groupoid(2),
            FiniteGroupoid::group_groupoid(&GroupTable::cyclic(2)),
            FiniteGroupoid::group_groupoid(&GroupTable::cyclic(3)),
            FiniteGroupoid::transitive_with_isotropy(2, &GroupTable::cyclic(2)),
        ];
        for g in &cases {
            let alg = groupoid_algebra(g, &f2);
            let oracle = algebra_is_regular_oracle(&alg, 1 << 12, 5);
            if !oracle.is_definitive() {
                continue;
            }
            let theorem = decide_regular_groupoid_algebra(g, &f2);
            assert_eq!(
                theorem.verdict.is_regular(),
                matches!(oracle.outcome, OracleOutcome::Regular)
            );
        }
    }
}
