//! Curated desk-scale instances exercising every branch of the decision
//! procedures: semilattices, cyclic groups, S_3, symmetric inverse monoids,
//! the Brandt semigroup B_2, a Clifford semigroup, and a small graph corpus.

use alloc::{format, string::String, vec, vec::Vec};

use crate::graph::DirectedGraph;
use crate::invsgp::FiniteInverseSemigroup;
use crate::pbij::PartialBijection;
use crate::ring::CoeffRing;

pub struct ZooSemigroup {
    pub name: String,
    pub semigroup: FiniteInverseSemigroup,
}

/// Trivial one-element semilattice.
pub fn trivial_semilattice() -> FiniteInverseSemigroup {
    FiniteInverseSemigroup::generate(&[PartialBijection::identity(1)], 4).unwrap()
}

/// Chain semilattice with k elements: nested partial identities.
pub fn chain_semilattice(k: usize) -> FiniteInverseSemigroup {
    let gens: Vec<PartialBijection> = (0..k)
        .map(|i| {
            let points: Vec<usize> = (0..(k - i)).collect();
            PartialBijection::partial_identity(k, &points)
        })
        .collect();
    FiniteInverseSemigroup::generate(&gens, k + 1).unwrap()
}

/// Four-element diamond semilattice: partial identities on the subsets of a
/// two-point set, meet = intersection.
pub fn diamond_semilattice() -> FiniteInverseSemigroup {
    let gens = vec![
        PartialBijection::partial_identity(2, &[0, 1]),
        PartialBijection::partial_identity(2, &[0]),
        PartialBijection::partial_identity(2, &[1]),
        PartialBijection::empty(2),
    ];
    FiniteInverseSemigroup::generate(&gens, 8).unwrap()
}

/// Z/n as a cyclic permutation group on n points.
pub fn cyclic_group_semigroup(n: usize) -> FiniteInverseSemigroup {
    let images: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
    let g = PartialBijection::permutation(&images).unwrap();
    FiniteInverseSemigroup::generate(&[g], n + 1).unwrap()
}

/// The symmetric group S_3 on 3 points.
pub fn symmetric_group_3() -> FiniteInverseSemigroup {
    let cycle = PartialBijection::permutation(&[1, 2, 0]).unwrap();
    let swap = PartialBijection::permutation(&[1, 0, 2]).unwrap();
    FiniteInverseSemigroup::generate(&[cycle, swap], 10).unwrap()
}

/// The symmetric inverse monoid I_n of all partial bijections on n points.
pub fn symmetric_inverse_monoid(n: usize) -> FiniteInverseSemigroup {
    let mut gens = vec![PartialBijection::identity(n)];
    if n >= 2 {
        gens.push(PartialBijection::permutation(&{
            let mut v: Vec<usize> = (0..n).collect();
            v.swap(0, 1);
            v
        })
        .unwrap());
        let mut v: Vec<usize> = (0..n).collect();
        v.rotate_left(1);
        gens.push(PartialBijection::permutation(&v).unwrap());
    }
    if n >= 1 {
        let points: Vec<usize> = (0..n.saturating_sub(1)).collect();
        gens.push(PartialBijection::partial_identity(n, &points));
    }
    FiniteInverseSemigroup::generate(&gens, 4000).unwrap()
}

/// The Brandt semigroup B_2 = {a, a*, aa*, a*a, 0}, generated by the rank-1
/// map 0 -> 1 on two points.
pub fn brandt_b2() -> FiniteInverseSemigroup {
    let a = PartialBijection::new(vec![Some(1), None]).unwrap();
    FiniteInverseSemigroup::generate(&[a], 10).unwrap()
}

/// A Clifford semigroup: a two-element chain of groups Z/2 over Z/2.
///
/// The top group is generated by the double transposition (01)(23), the
/// bottom by its restriction to {0,1}.
pub fn clifford_two_groups() -> FiniteInverseSemigroup {
    let top = PartialBijection::permutation(&[1, 0, 3, 2]).unwrap();
    let bottom = PartialBijection::new(vec![Some(1), Some(0), None, None]).unwrap();
    FiniteInverseSemigroup::generate(&[top, bottom], 20).unwrap()
}

/// The semigroup zoo named in the acceptance criteria.
pub fn semigroup_zoo() -> Vec<ZooSemigroup> {
    let mut out = Vec::new();
    let push = |out: &mut Vec<ZooSemigroup>, name: &str, s: FiniteInverseSemigroup| {
        out.push(ZooSemigroup {
            name: String::from(name),
            semigroup: s,
        })
    };
    push(&mut out, "semilattice-trivial", trivial_semilattice());
    push(&mut out, "semilattice-chain2", chain_semilattice(2));
    push(&mut out, "semilattice-chain3", chain_semilattice(3));
    push(&mut out, "semilattice-diamond", diamond_semilattice());
    for n in 2..=6 {
        out.push(ZooSemigroup {
            name: format!("cyclic-Z{n}"),
            semigroup: cyclic_group_semigroup(n),
        });
    }
    push(&mut out, "symmetric-S3", symmetric_group_3());
    push(&mut out, "inverse-monoid-I1", symmetric_inverse_monoid(1));
    push(&mut out, "inverse-monoid-I2", symmetric_inverse_monoid(2));
    push(&mut out, "brandt-B2", brandt_b2());
    push(&mut out, "clifford-Z2-over-Z2", clifford_two_groups());
    out
}

/// The curated coefficient rings.
pub fn ring_zoo() -> Vec<CoeffRing> {
    vec![
        CoeffRing::Rationals,
        CoeffRing::prime_field(2).unwrap(),
        CoeffRing::prime_field(3).unwrap(),
        CoeffRing::prime_field(5).unwrap(),
        CoeffRing::integers_mod(6).unwrap(),
        CoeffRing::integers_mod(12).unwrap(),
    ]
}

/// The finite-field members of the ring zoo.
pub fn field_zoo() -> Vec<CoeffRing> {
    vec![
        CoeffRing::prime_field(2).unwrap(),
        CoeffRing::prime_field(3).unwrap(),
        CoeffRing::prime_field(5).unwrap(),
    ]
}

pub struct ZooGraph {
    pub name: String,
    pub graph: DirectedGraph,
}

/// Graph corpus: acyclic graphs on up to 6 vertices plus cyclic controls.
pub fn graph_corpus() -> Vec<ZooGraph> {
    let mut out = Vec::new();
    let push = |out: &mut Vec<ZooGraph>, name: &str, g: DirectedGraph| {
        out.push(ZooGraph {
            name: String::from(name),
            graph: g,
        })
    };
    push(&mut out, "single-vertex", DirectedGraph::new(1, &[]));
    push(&mut out, "edgeless-3", DirectedGraph::new(3, &[]));
    push(&mut out, "single-edge", DirectedGraph::new(2, &[(0, 1)]));
    push(&mut out, "line-3", DirectedGraph::new(3, &[(0, 1), (1, 2)]));
    push(
        &mut out,
        "line-6",
        DirectedGraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),
    );
    push(&mut out, "two-into-sink", DirectedGraph::new(3, &[(0, 2), (1, 2)]));
    push(&mut out, "parallel-edges", DirectedGraph::new(2, &[(0, 1), (0, 1)]));
    push(
        &mut out,
        "diamond-dag",
        DirectedGraph::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]),
    );
    push(
        &mut out,
        "binary-tree",
        DirectedGraph::new(5, &[(0, 1), (0, 2), (1, 3), (1, 4)]),
    );
    push(
        &mut out,
        "two-sinks",
        DirectedGraph::new(4, &[(0, 1), (0, 2), (2, 3)]),
    );
    push(&mut out, "loop", DirectedGraph::new(1, &[(0, 0)]));
    push(&mut out, "two-cycle", DirectedGraph::new(2, &[(0, 1), (1, 0)]));
    push(&mut out, "figure-eight", DirectedGraph::new(1, &[(0, 0), (0, 0)]));
    push(&mut out, "loop-with-tail", DirectedGraph::new(2, &[(0, 0), (0, 1)]));
    push(
        &mut out,
        "cycle-into-sink",
        DirectedGraph::new(3, &[(0, 1), (1, 0), (1, 2)]),
    );
    out
}
