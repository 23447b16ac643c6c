//! Exact coefficient rings with known regularity status.
//!
//! The curated rings are the rationals, prime fields, residue rings Z/n and
//! finite products of these. They cover every branch of the decision
//! procedures: characteristic 0, characteristic p, and non-regular Z/n.

use alloc::{format, string::String, vec::Vec};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A curated exact coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffRing {
    /// The field of rational numbers.
    Rationals,
    /// The prime field F_p; primality is checked at construction.
    PrimeField(u64),
    /// The residue ring Z/n for n >= 2, not necessarily a field.
    IntegersMod(u64),
    /// A finite direct product of coefficient rings.
    Product(Vec<CoeffRing>),
}

/// An exact scalar belonging to some [`CoeffRing`].
///
/// Scalars do not carry their ring; all arithmetic goes through the ring so
/// that residues are always reduced and tuples always match the product shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
    Tuple(Vec<Scalar>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingError {
    NotPrime(u64),
    InvalidModulus(u64),
    EmptyProduct,
    /// try_invert was called on a non-unit.
    NonUnit,
    /// A scalar did not belong to the ring it was used with.
    WrongRing,
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::NotPrime(p) => write!(f, "{p} is not prime"),
            RingError::InvalidModulus(n) => write!(f, "modulus {n} must be >= 2"),
            RingError::EmptyProduct => write!(f, "product ring needs at least one factor"),
            RingError::NonUnit => write!(f, "element is not a unit"),
            RingError::WrongRing => write!(f, "scalar does not belong to this ring"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_squarefree(n: u64) -> bool {
    let mut n = n;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return false;
            }
        }
        d += 1;
    }
    true
}

/// Prime factors of n, ascending, without multiplicity.
pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// Extended gcd; returns (g, x) with a*x = g mod n.
fn invert_mod(a: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(n as i128) as u64)
}

impl CoeffRing {
    pub fn rationals() -> Self {
        CoeffRing::Rationals
    }

    pub fn prime_field(p: u64) -> Result<Self, RingError> {
        if is_prime(p) {
            Ok(CoeffRing::PrimeField(p))
        } else {
            Err(RingError::NotPrime(p))
        }
    }

    pub fn integers_mod(n: u64) -> Result<Self, RingError> {
        if n >= 2 {
            Ok(CoeffRing::IntegersMod(n))
        } else {
            Err(RingError::InvalidModulus(n))
        }
    }

    pub fn product(factors: Vec<CoeffRing>) -> Result<Self, RingError> {
        if factors.is_empty() {
            Err(RingError::EmptyProduct)
        } else {
            Ok(CoeffRing::Product(factors))
        }
    }

    /// Whether this ring is a field (so Gaussian elimination applies).
    pub fn is_field(&self) -> bool {
        matches!(self, CoeffRing::Rationals | CoeffRing::PrimeField(_))
    }

    /// Number of elements, None for infinite rings.
    pub fn size(&self) -> Option<u64> {
        match self {
            CoeffRing::Rationals => None,
            CoeffRing::PrimeField(p) => Some(*p),
            CoeffRing::IntegersMod(n) => Some(*n),
            CoeffRing::Product(fs) => {
                let mut total: u64 = 1;
                for f in fs {
                    total = total.checked_mul(f.size()?)?;
                }
                Some(total)
            }
        }
    }

    /// Characteristic-zero rings contain the rationals in some factor.
    pub fn has_char_zero_factor(&self) -> bool {
        match self {
            CoeffRing::Rationals => true,
            CoeffRing::PrimeField(_) | CoeffRing::IntegersMod(_) => false,
            CoeffRing::Product(fs) => fs.iter().any(|f| f.has_char_zero_factor()),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            CoeffRing::Rationals => Scalar::Rat(BigRational::zero()),
            CoeffRing::PrimeField(_) | CoeffRing::IntegersMod(_) => Scalar::Mod(0),
            CoeffRing::Product(fs) => Scalar::Tuple(fs.iter().map(|f| f.zero()).collect()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            CoeffRing::Rationals => Scalar::Rat(BigRational::one()),
            CoeffRing::PrimeField(_) | CoeffRing::IntegersMod(_) => Scalar::Mod(1),
            CoeffRing::Product(fs) => Scalar::Tuple(fs.iter().map(|f| f.one()).collect()),
        }
    }

    /// Image of an integer in the ring.
    pub fn from_int(&self, k: i64) -> Scalar {
        match self {
            CoeffRing::Rationals => Scalar::Rat(BigRational::from(BigInt::from(k))),
            CoeffRing::PrimeField(n) | CoeffRing::IntegersMod(n) => {
                Scalar::Mod((k.rem_euclid(*n as i64)) as u64)
            }
            CoeffRing::Product(fs) => Scalar::Tuple(fs.iter().map(|f| f.from_int(k)).collect()),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        *a == self.zero()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (CoeffRing::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (CoeffRing::PrimeField(n) | CoeffRing::IntegersMod(n), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod((x + y) % n)
            }
            (CoeffRing::Product(fs), Scalar::Tuple(xs), Scalar::Tuple(ys)) => Scalar::Tuple(
                fs.iter()
                    .zip(xs.iter().zip(ys.iter()))
                    .map(|(f, (x, y))| f.add(x, y))
                    .collect(),
            ),
            _ => panic!("scalar does not belong to this ring"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (CoeffRing::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (CoeffRing::PrimeField(n) | CoeffRing::IntegersMod(n), Scalar::Mod(x)) => {
                Scalar::Mod((n - x % n) % n)
            }
            (CoeffRing::Product(fs), Scalar::Tuple(xs)) => {
                Scalar::Tuple(fs.iter().zip(xs.iter()).map(|(f, x)| f.neg(x)).collect())
            }
            _ => panic!("scalar does not belong to this ring"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (CoeffRing::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (CoeffRing::PrimeField(n) | CoeffRing::IntegersMod(n), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(mul_mod(*x, *y, *n))
            }
            (CoeffRing::Product(fs), Scalar::Tuple(xs), Scalar::Tuple(ys)) => Scalar::Tuple(
                fs.iter()
                    .zip(xs.iter().zip(ys.iter()))
                    .map(|(f, (x, y))| f.mul(x, y))
                    .collect(),
            ),
            _ => panic!("scalar does not belong to this ring"),
        }
    }

    /// Multiplicative inverse, or [`RingError::NonUnit`].
    pub fn try_invert(&self, a: &Scalar) -> Result<Scalar, RingError> {
        match (self, a) {
            (CoeffRing::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    Err(RingError::NonUnit)
                } else {
                    Ok(Scalar::Rat(x.recip()))
                }
            }
            (CoeffRing::PrimeField(n) | CoeffRing::IntegersMod(n), Scalar::Mod(x)) => {
                invert_mod(*x, *n).map(Scalar::Mod).ok_or(RingError::NonUnit)
            }
            (CoeffRing::Product(fs), Scalar::Tuple(xs)) => {
                let mut out = Vec::with_capacity(fs.len());
                for (f, x) in fs.iter().zip(xs.iter()) {
                    out.push(f.try_invert(x)?);
                }
                Ok(Scalar::Tuple(out))
            }
            _ => Err(RingError::WrongRing),
        }
    }

    /// Enumerates the ring's elements by index; `idx < size()`.
    pub fn element_from_index(&self, idx: u64) -> Scalar {
        match self {
            CoeffRing::Rationals => panic!("cannot enumerate an infinite ring"),
            CoeffRing::PrimeField(n) | CoeffRing::IntegersMod(n) => Scalar::Mod(idx % n),
            CoeffRing::Product(fs) => {
                let mut idx = idx;
                let mut out = Vec::with_capacity(fs.len());
                for f in fs {
                    let sz = f.size().expect("finite factor");
                    out.push(f.element_from_index(idx % sz));
                    idx /= sz;
                }
                Scalar::Tuple(out)
            }
        }
    }

    /// Renders a scalar for reports: "3", "-1/2", or "(1,0)".
    pub fn format_scalar(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    format!("{}", x.numer())
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Mod(x) => format!("{x}"),
            Scalar::Tuple(xs) => {
                let parts: Vec<String> = match self {
                    CoeffRing::Product(fs) => fs
                        .iter()
                        .zip(xs.iter())
                        .map(|(f, x)| f.format_scalar(x))
                        .collect(),
                    _ => xs.iter().map(|x| format!("{x:?}")).collect(),
                };
                format!("({})", parts.join(","))
            }
        }
    }

    /// A canonical short name matching the CLI ring literals.
    pub fn name(&self) -> String {
        match self {
            CoeffRing::Rationals => String::from("Q"),
            CoeffRing::PrimeField(p) => format!("F{p}"),
            CoeffRing::IntegersMod(n) => format!("Z{n}"),
            CoeffRing::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|f| f.name()).collect();
                format!("product:[{}]", parts.join(","))
            }
        }
    }
}

/// Whether the ring is von Neumann regular.
///
/// Fields are regular; Z/n is regular exactly when n is squarefree (then it is
/// a product of prime fields); a product is regular iff all factors are.
pub fn is_regular_ring(ring: &CoeffRing) -> bool {
    match ring {
        CoeffRing::Rationals | CoeffRing::PrimeField(_) => true,
        CoeffRing::IntegersMod(n) => is_squarefree(*n),
        CoeffRing::Product(fs) => fs.iter().all(is_regular_ring),
    }
}

/// Whether the image of the positive integer n is a unit in the ring.
pub fn is_invertible(ring: &CoeffRing, n: u64) -> bool {
    match ring {
        CoeffRing::Rationals => n != 0,
        CoeffRing::PrimeField(p) => n % p != 0,
        CoeffRing::IntegersMod(m) => (n % m).gcd(m) == 1,
        CoeffRing::Product(fs) => fs.iter().all(|f| is_invertible(f, n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn exhaustive_quasi_inverse(ring: &CoeffRing, a: &Scalar) -> Option<Scalar> {
        let size = ring.size().unwrap();
        (0..size)
            .map(|i| ring.element_from_index(i))
            .find(|b| ring.mul(&ring.mul(a, b), a) == *a)
    }

    #[test]
    fn regularity_of_curated_rings() {
        assert!(is_regular_ring(&CoeffRing::Rationals));
        assert!(is_regular_ring(&CoeffRing::prime_field(5).unwrap()));
        assert!(is_regular_ring(&CoeffRing::integers_mod(6).unwrap()));
        assert!(!is_regular_ring(&CoeffRing::integers_mod(12).unwrap()));
        let prod = CoeffRing::product(vec![
            CoeffRing::Rationals,
            CoeffRing::integers_mod(6).unwrap(),
        ])
        .unwrap();
        assert!(is_regular_ring(&prod));
        let bad = CoeffRing::product(vec![CoeffRing::Rationals, CoeffRing::integers_mod(4).unwrap()])
            .unwrap();
        assert!(!is_regular_ring(&bad));
    }

    #[test]
    fn squarefree_test_matches_exhaustive_search() {
        // The squarefree criterion is validated, not trusted: for every n we
        // check it against the definition by exhaustive quasi-inverse search.
        for n in 2..=30u64 {
            let ring = CoeffRing::integers_mod(n).unwrap();
            let every_element_regular = (0..n).all(|i| {
                let a = ring.element_from_index(i);
                exhaustive_quasi_inverse(&ring, &a).is_some()
            });
            assert_eq!(
                every_element_regular,
                is_regular_ring(&ring),
                "mismatch at n={n}"
            );
        }
    }

    #[test]
    fn six_has_no_quasi_inverse_in_z12() {
        let ring = CoeffRing::integers_mod(12).unwrap();
        let six = ring.from_int(6);
        assert!(exhaustive_quasi_inverse(&ring, &six).is_none());
    }

    #[test]
    fn invertibility_examples() {
        assert!(!is_invertible(&CoeffRing::prime_field(2).unwrap(), 2));
        assert!(is_invertible(&CoeffRing::Rationals, 7));
        assert!(is_invertible(&CoeffRing::integers_mod(6).unwrap(), 5));
        assert!(!is_invertible(&CoeffRing::integers_mod(6).unwrap(), 4));
    }

    #[test]
    fn invertibility_is_multiplicative() {
        let rings = [
            CoeffRing::Rationals,
            CoeffRing::prime_field(3).unwrap(),
            CoeffRing::integers_mod(6).unwrap(),
            CoeffRing::integers_mod(12).unwrap(),
        ];
        for ring in &rings {
            for m in 1..=12u64 {
                for n in 1..=12u64 {
                    assert_eq!(
                        is_invertible(ring, m * n),
                        is_invertible(ring, m) && is_invertible(ring, n)
                    );
                }
            }
        }
    }

    #[test]
    fn scalar_arithmetic() {
        let q = CoeffRing::Rationals;
        let third = Scalar::Rat(BigRational::new(1.into(), 3.into()));
        let two_thirds = Scalar::Rat(BigRational::new(2.into(), 3.into()));
        assert_eq!(q.add(&two_thirds, &third), q.one());

        let f5 = CoeffRing::prime_field(5).unwrap();
        assert_eq!(f5.try_invert(&f5.from_int(3)).unwrap(), f5.from_int(2));

        let z6 = CoeffRing::integers_mod(6).unwrap();
        assert_eq!(z6.try_invert(&z6.from_int(2)), Err(RingError::NonUnit));
        assert_eq!(z6.try_invert(&z6.from_int(5)).unwrap(), z6.from_int(5));
    }

    #[test]
    fn product_ring_is_componentwise() {
        let prod = CoeffRing::product(vec![
            CoeffRing::prime_field(2).unwrap(),
            CoeffRing::prime_field(3).unwrap(),
        ])
        .unwrap();
        assert_eq!(prod.size(), Some(6));
        let a = prod.element_from_index(3);
        let b = prod.element_from_index(4);
        let ab = prod.mul(&a, &b);
        if let (Scalar::Tuple(xs), Scalar::Tuple(ys), Scalar::Tuple(zs)) = (&a, &b, &ab) {
            assert_eq!(
                zs[0],
                CoeffRing::prime_field(2).unwrap().mul(&xs[0], &ys[0])
            );
            assert_eq!(
                zs[1],
                CoeffRing::prime_field(3).unwrap().mul(&xs[1], &ys[1])
            );
        } else {
            panic!("expected tuples");
        }
    }

    #[test]
    fn element_enumeration_is_a_bijection() {
        let prod = CoeffRing::product(vec![
            CoeffRing::prime_field(2).unwrap(),
            CoeffRing::integers_mod(6).unwrap(),
        ])
        .unwrap();
        let size = prod.size().unwrap();
        let mut seen = alloc::collections::BTreeSet::new();
        for i in 0..size {
            seen.insert(prod.format_scalar(&prod.element_from_index(i)));
        }
        assert_eq!(seen.len() as u64, size);
    }
}
