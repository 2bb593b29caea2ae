//! Coefficient fields for the polynomial engine.
//!
//! The verification pipeline runs entirely over arbitrary-precision
//! rationals (re-exported from `num-rational`, which already guarantees
//! reduced form and positive denominators). A compact prime-field type is
//! also provided for fast modular experiments; its elements carry their
//! modulus so that polynomials stay self-describing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Exact field elements. The polynomial engine is generic over this.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse. Panics on zero input.
    fn inv(&self) -> Self;
}

/// The coefficient field used by the whole verification pipeline.
pub type Rat = BigRational;

/// Small-rational constructor, mostly for tests and family coefficients.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Coeff for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        <BigRational as Zero>::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Coeff::is_zero(self), "division by zero coefficient");
        self.recip()
    }
}

/// Element of the prime field Z/p for a user-chosen prime `p > 2^30`.
///
/// Literals produced by `zero`/`one`/`from_i64` are not yet bound to a
/// modulus; they bind on first contact with a bound element. This keeps the
/// `Coeff` constructors modulus-free without threading a field descriptor
/// through every polynomial.
#[derive(Clone, Copy, Debug)]
pub enum Fp {
    /// Unbound integer literal (reduced on first bound operation).
    Int(i64),
    /// Residue `value` modulo `modulus`.
    Mod { value: u64, modulus: u64 },
}

impl Fp {
    pub const MIN_MODULUS: u64 = 1 << 30;

    /// Embeds `n` into Z/p. Panics if `p` is out of range or not prime.
    pub fn embed(n: i64, p: u64) -> Self {
        assert!(p > Self::MIN_MODULUS, "modulus must exceed 2^30");
        assert!(p < (1 << 62), "modulus too large for checked arithmetic");
        assert!(is_prime_u64(p), "modulus must be prime");
        Fp::Mod {
            value: reduce_i64(n, p),
            modulus: p,
        }
    }

    fn bind(self, p: u64) -> (u64, u64) {
        match self {
            Fp::Int(n) => (reduce_i64(n, p), p),
            Fp::Mod { value, modulus } => {
                assert_eq!(modulus, p, "mixed moduli in prime-field arithmetic");
                (value, p)
            }
        }
    }

    fn promote(self, other: Self) -> Option<u64> {
        match (self, other) {
            (Fp::Mod { modulus, .. }, _) | (_, Fp::Mod { modulus, .. }) => Some(modulus),
            (Fp::Int(_), Fp::Int(_)) => None,
        }
    }

    pub fn value(&self) -> Option<u64> {
        match self {
            Fp::Mod { value, .. } => Some(*value),
            Fp::Int(_) => None,
        }
    }
}

fn reduce_i64(n: i64, p: u64) -> u64 {
    let r = (n as i128).rem_euclid(p as i128);
    r as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (standard witness set).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for w in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        match self.promote(*other) {
            Some(p) => self.bind(p).0 == other.bind(p).0,
            None => match (self, other) {
                (Fp::Int(a), Fp::Int(b)) => a == b,
                _ => unreachable!(),
            },
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fp::Int(n) => write!(f, "{n}"),
            Fp::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Coeff for Fp {
    fn zero() -> Self {
        Fp::Int(0)
    }
    fn one() -> Self {
        Fp::Int(1)
    }
    fn from_i64(n: i64) -> Self {
        Fp::Int(n)
    }
    fn is_zero(&self) -> bool {
        match self {
            Fp::Int(n) => *n == 0,
            Fp::Mod { value, .. } => *value == 0,
        }
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        match self.promote(*rhs) {
            Some(p) => {
                let (a, _) = self.bind(p);
                let (b, _) = rhs.bind(p);
                Fp::Mod {
                    value: (a + b) % p,
                    modulus: p,
                }
            }
            None => match (self, rhs) {
                (Fp::Int(a), Fp::Int(b)) => Fp::Int(a.checked_add(*b).expect("literal overflow")),
                _ => unreachable!(),
            },
        }
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        match self.promote(*rhs) {
            Some(p) => {
                let (a, _) = self.bind(p);
                let (b, _) = rhs.bind(p);
                Fp::Mod {
                    value: mul_mod(a, b, p),
                    modulus: p,
                }
            }
            None => match (self, rhs) {
                (Fp::Int(a), Fp::Int(b)) => Fp::Int(a.checked_mul(*b).expect("literal overflow")),
                _ => unreachable!(),
            },
        }
    }
    fn neg_ref(&self) -> Self {
        match self {
            Fp::Int(n) => Fp::Int(-n),
            Fp::Mod { value, modulus } => Fp::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
    fn inv(&self) -> Self {
        match self {
            Fp::Int(1) => Fp::Int(1),
            Fp::Int(-1) => Fp::Int(-1),
            Fp::Int(0) => panic!("division by zero coefficient"),
            Fp::Int(_) => panic!("cannot invert an unbound prime-field literal"),
            Fp::Mod { value, modulus } => {
                assert!(*value != 0, "division by zero coefficient");
                // Fermat: value^(p-2) mod p.
                Fp::Mod {
                    value: pow_mod(*value, modulus - 2, *modulus),
                    modulus: *modulus,
                }
            }
        }
    }
}
