//! Finite groups by multiplication table, used for maximal subgroups,
//! isotropy groups and self-similar group closures.

use alloc::{collections::BTreeSet, string::String, vec, vec::Vec};
use core::fmt;

use crate::ring::prime_factors;

/// A finite group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<u32>,
    identity: u32,
    inverse: Vec<u32>,
    labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    NotClosed,
    NoIdentity,
    NoInverse(usize),
    NotAssociative,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::NotClosed => write!(f, "table entries out of range"),
            GroupError::NoIdentity => write!(f, "no identity element"),
            GroupError::NoInverse(i) => write!(f, "element {i} has no inverse"),
            GroupError::NotAssociative => write!(f, "multiplication is not associative"),
        }
    }
}

impl GroupTable {
    /// Builds and validates a group from a raw table, `table[i*n+j] = i*j`.
    pub fn new(table: Vec<u32>, labels: Vec<String>) -> Result<Self, GroupError> {
        let order = labels.len();
        if table.len() != order * order || table.iter().any(|&x| x as usize >= order) {
            return Err(GroupError::NotClosed);
        }
        let at = |i: usize, j: usize| table[i * order + j] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = vec![0u32; order];
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or(GroupError::NoInverse(x))?;
            inverse[x] = inv as u32;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative);
                    }
                }
            }
        }
        Ok(GroupTable {
            order,
            table,
            identity: identity as u32,
            inverse,
            labels,
        })
    }

    pub fn trivial() -> Self {
        GroupTable::new(vec![0], vec![String::from("e")]).unwrap()
    }

    pub fn cyclic(n: usize) -> Self {
        use alloc::format;
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = ((i + j) % n) as u32;
            }
        }
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        GroupTable::new(table, labels).unwrap()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by a set of elements.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(self.identity());
        for &g in gens {
            set.insert(g);
            set.insert(self.inv(g));
        }
        loop {
            let snapshot: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &a in &snapshot {
                for &b in &snapshot {
                    set.insert(self.mul(a, b));
                }
            }
            if set.len() == before {
                break;
            }
        }
        set.into_iter().collect()
    }

    /// All subgroups, as sorted element lists. Exponential; desk scale only.
    pub fn all_subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        found.insert(vec![self.identity()]);
        // closure of every subset of generators is enough: iterate by adding
        // one generator to each subgroup already found until stable
        loop {
            let snapshot: Vec<Vec<usize>> = found.iter().cloned().collect();
            let before = found.len();
            for sub in &snapshot {
                for g in 0..self.order {
                    if !sub.contains(&g) {
                        let mut gens = sub.clone();
                        gens.push(g);
                        found.insert(self.subgroup_generated(&gens));
                    }
                }
            }
            if found.len() == before {
                break;
            }
        }
        found.into_iter().collect()
    }

    /// Primes dividing the group order.
    pub fn prime_support(&self) -> Vec<u64> {
        prime_factors(self.order as u64)
    }
}
