use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The coefficient field: the rationals or a prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldCtx {
    Rationals,
    PrimeField(u64),
}

/// Largest admissible modulus; products of two residues must fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl FieldCtx {
    pub fn rationals() -> Self {
        FieldCtx::Rationals
    }

    /// `F_p`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldCtx::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldCtx::Rationals => 0,
            FieldCtx::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldCtx::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldCtx::PrimeField(p) => Scalar::Fp {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    /// Image of an integer under the natural map `Z -> k`.
    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldCtx::Rationals => Scalar::Q(BigRational::from_integer(n.clone())),
            FieldCtx::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Scalar::Fp {
                    value: r.to_u64().expect("residue fits"),
                    modulus: *p,
                }
            }
        }
    }

    /// `num / den`, or `None` when `den` maps to zero.
    pub fn from_ratio(&self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.from_i64(den).inv()?;
        Some(&self.from_i64(num) * &d)
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldCtx::Rationals, Scalar::Q(_)) => true,
            (FieldCtx::PrimeField(p), Scalar::Fp { value, modulus }) => p == modulus && value < p,
            _ => false,
        }
    }

    /// A random element: uniform over `F_p`, a small integer over the rationals.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            FieldCtx::Rationals => self.from_i64(rng.gen_range(-9..=9)),
            FieldCtx::PrimeField(p) => Scalar::Fp {
                value: rng.gen_range(0..*p),
                modulus: *p,
            },
        }
    }

    /// Random element that is guaranteed nonzero.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Multiplicative order of `a`, if finite. Over the rationals only `1` and `-1`
    /// are roots of unity.
    pub fn multiplicative_order(&self, a: &Scalar) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        match (self, a) {
            (FieldCtx::Rationals, Scalar::Q(q)) => {
                if q.is_one() {
                    Some(1)
                } else if (-q).is_one() {
                    Some(2)
                } else {
                    None
                }
            }
            (FieldCtx::PrimeField(p), Scalar::Fp { value, .. }) => {
                let group = p - 1;
                let mut best = group;
                let mut d = 1;
                while d * d <= group {
                    if group % d == 0 {
                        for cand in [d, group / d] {
                            if cand < best && mod_pow(*value, cand, *p) == 1 {
                                best = cand;
                            }
                        }
                    }
                    d += 1;
                }
                Some(best)
            }
            _ => None,
        }
    }

    /// All elements of the field when it is finite.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldCtx::Rationals => None,
            FieldCtx::PrimeField(p) => Some(
                (0..*p)
                    .map(|v| Scalar::Fp {
                        value: v,
                        modulus: *p,
                    })
                    .collect(),
            ),
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldCtx::Rationals => write!(f, "QQ"),
            FieldCtx::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl Serialize for FieldCtx {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An exact field element. Rationals are kept reduced with positive denominator
/// (guaranteed by `BigRational`); residues are kept in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> FieldCtx {
        match self {
            Scalar::Q(_) => FieldCtx::Rationals,
            Scalar::Fp { modulus, .. } => FieldCtx::PrimeField(*modulus),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Integer power; negative exponents need an invertible base.
    pub fn pow(&self, exp: i64) -> Option<Scalar> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.field().one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Some(acc)
    }

    /// True for "negative-looking" elements, used only by pretty printers.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }

    fn fp_parts(&self) -> (u64, u64) {
        match self {
            Scalar::Fp { value, modulus } => (*value, *modulus),
            Scalar::Q(_) => panic!("mixed-field arithmetic"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{q}"),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            _ => {
                let (a, p) = self.fp_parts();
                let (b, q) = rhs.fp_parts();
                assert_eq!(p, q, "mixed-field arithmetic");
                Scalar::Fp {
                    value: (a + b) % p,
                    modulus: p,
                }
            }
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            _ => {
                let (a, p) = self.fp_parts();
                let (b, q) = rhs.fp_parts();
                assert_eq!(p, q, "mixed-field arithmetic");
                Scalar::Fp {
                    value: (a + p - b) % p,
                    modulus: p,
                }
            }
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            _ => {
                let (a, p) = self.fp_parts();
                let (b, q) = rhs.fp_parts();
                assert_eq!(p, q, "mixed-field arithmetic");
                Scalar::Fp {
                    value: a * b % p,
                    modulus: p,
                }
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
