//! Exact scalars.
//!
//! [`Rational`] is an arbitrary-precision rational number with an inline
//! machine-word fast path: values whose numerator and denominator fit in
//! `i64` are stored unboxed, anything larger transparently promotes to a
//! [`BigRational`]. The representation is canonical (lowest terms, positive
//! denominator, small whenever it fits), so structural equality is value
//! equality.
//!
//! [`Quad`] is the real quadratic field `Q(sqrt D)`, used where compatible
//! metrics force square roots of rationals.

use crate::matrix::ExactMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Operations every exact scalar type must provide.
///
/// Implementations must be ordered subfields of the reals with exact
/// arithmetic: `signum` is exact and `inv` never rounds.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// Embeds a rational number.
    fn from_rational(q: Rational) -> Self;

    /// Embeds an integer.
    fn from_i64(v: i64) -> Self {
        Self::from_rational(Rational::from(v))
    }

    /// Returns the value as a rational when it lies in `Q`.
    fn to_rational(&self) -> Option<Rational>;

    /// Exact sign: -1, 0 or 1.
    fn signum(&self) -> i32;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// A square root of the rational `q` inside this field, if one exists.
    fn sqrt_of_rational(q: &Rational) -> Option<Self>;

    /// Short name of the field, e.g. `Q` or `Q(sqrt3)`.
    fn field_name() -> String;

    /// Product without consuming either operand.
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other
    }

    /// `self += a * b`.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += &a.mul_ref(b);
    }

    /// `self -= a * b`.
    fn sub_mul(&mut self, a: &Self, b: &Self) {
        *self -= &a.mul_ref(b);
    }

    /// Exact rank of a matrix over this field.
    fn rank_of(m: &ExactMatrix<Self>) -> usize {
        m.rank_by_elimination()
    }
}

/// Error returned when parsing a rational from text fails.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Exact rational number in lowest terms with positive denominator.
#[derive(Clone)]
pub struct Rational(Repr);

#[derive(Clone)]
enum Repr {
    /// Numerator and denominator, coprime, denominator positive, numerator
    /// never `i64::MIN`.
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rational {
    /// Builds `n / d`, reducing to lowest terms. Panics if `d == 0`.
    pub fn new(n: i64, d: i64) -> Rational {
        assert!(d != 0, "zero denominator");
        Rational::from_i128(n as i128, d as i128)
    }

    /// Builds `n / d` from big integers. Panics if `d == 0`.
    pub fn from_bigints(n: BigInt, d: BigInt) -> Rational {
        assert!(!d.is_zero(), "zero denominator");
        Rational::from_big(BigRational::new(n, d))
    }

    fn from_i128(mut n: i128, mut d: i128) -> Rational {
        debug_assert!(d != 0);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if n == 0 {
            return Rational(Repr::Small(0, 1));
        }
        let g = n.gcd(&d);
        if g != 1 {
            n /= g;
            d /= g;
        }
        Rational::from_reduced_i128(n, d)
    }

    fn from_reduced_i128(n: i128, d: i128) -> Rational {
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Rational(Repr::Small(n as i64, d as i64))
        } else {
            Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            ))))
        }
    }

    /// Canonicalizes a big rational that is already in lowest terms.
    fn from_big(b: BigRational) -> Rational {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(b))),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    /// Numerator in lowest terms.
    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    /// Denominator in lowest terms (always positive).
    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    /// True when the denominator is 1.
    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// True when the value is stored in the machine-word representation.
    pub fn is_small(&self) -> bool {
        matches!(self.0, Repr::Small(..))
    }

    /// Absolute value.
    pub fn abs(&self) -> Rational {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact sign.
    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => {
                assert!(*n != 0, "inverse of zero");
                if *n < 0 {
                    Rational(Repr::Small(-d, -n))
                } else {
                    Rational(Repr::Small(*d, *n))
                }
            }
            Repr::Big(b) => {
                assert!(!b.is_zero(), "inverse of zero");
                Rational::from_big(b.recip())
            }
        }
    }

    /// Integer power (negative exponents invert).
    pub fn pow(&self, e: i32) -> Rational {
        let mut base = if e < 0 { self.recip() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Rational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact square root when the value is the square of a rational.
    pub fn sqrt_exact(&self) -> Option<Rational> {
        if self.signum() < 0 {
            return None;
        }
        let n = self.numer();
        let d = self.denom();
        let rn = n.sqrt();
        let rd = d.sqrt();
        if &rn * &rn == n && &rd * &rd == d {
            Some(Rational::from_bigints(rn, rd))
        } else {
            None
        }
    }

    fn add_impl(&self, o: &Rational) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Rational::from_i128(a + c, b);
            }
            return Rational::from_i128(a * d + c * b, b * d);
        }
        Rational::from_big(self.to_big() + o.to_big())
    }

    fn sub_impl(&self, o: &Rational) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Rational::from_i128(a - c, b);
            }
            return Rational::from_i128(a * d - c * b, b * d);
        }
        Rational::from_big(self.to_big() - o.to_big())
    }

    fn mul_impl(&self, o: &Rational) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            if *a == 0 || *c == 0 {
                return Rational::zero();
            }
            let g1 = a.gcd(d);
            let g2 = c.gcd(b);
            let n = (*a / g1) as i128 * (*c / g2) as i128;
            let m = (*b / g2) as i128 * (*d / g1) as i128;
            return Rational::from_reduced_i128(n, m);
        }
        Rational::from_big(self.to_big() * o.to_big())
    }

    fn div_impl(&self, o: &Rational) -> Rational {
        self.mul_impl(&o.recip())
    }
}

impl Zero for Rational {
    fn zero() -> Rational {
        Rational(Repr::Small(0, 1))
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Rational {
        Rational(Repr::Small(1, 1))
    }
    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }
}

impl Default for Rational {
    fn default() -> Rational {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Rational {
        Rational::from_i128(v as i128, 1)
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Rational {
        Rational(Repr::Small(v as i64, 1))
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Rational {
        Rational::from_big(BigRational::from_integer(v))
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Rational {
        Rational::from_big(v)
    }
}

impl From<&Rational> for BigRational {
    fn from(v: &Rational) -> BigRational {
        v.to_big()
    }
}

impl PartialEq for Rational {
    fn eq(&self, o: &Rational) -> bool {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, h: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(h);
                n.hash(h);
                d.hash(h);
            }
            Repr::Big(b) => {
                1u8.hash(h);
                b.numer().hash(h);
                b.denom().hash(h);
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, o: &Rational) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Rational {
    fn cmp(&self, o: &Rational) -> Ordering {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &o.0) {
            return (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128));
        }
        self.to_big().cmp(&o.to_big())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;
    fn from_str(s: &str) -> Result<Rational, ParseRationalError> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        let t = t.strip_prefix('+').unwrap_or(t);
        if t.is_empty() {
            return Err(err());
        }
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n = BigInt::from_str(n).map_err(|_| err())?;
        let d = BigInt::from_str(d).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Rational::from_bigints(n, d))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        Rational::from_str(&s).map_err(serde::de::Error::custom)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }
}

macro_rules! rational_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $imp:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                self.$imp(o)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                self.$imp(&o)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                self.$imp(o)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                self.$imp(&o)
            }
        }
        impl $atr<&Rational> for Rational {
            fn $am(&mut self, o: &Rational) {
                *self = self.$imp(o);
            }
        }
        impl $atr<Rational> for Rational {
            fn $am(&mut self, o: Rational) {
                *self = self.$imp(&o);
            }
        }
    };
}

rational_binop!(Add, add, AddAssign, add_assign, add_impl);
rational_binop!(Sub, sub, SubAssign, sub_assign, sub_impl);
rational_binop!(Mul, mul, MulAssign, mul_assign, mul_impl);
rational_binop!(Div, div, DivAssign, div_assign, div_impl);

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(it: I) -> Rational {
        it.fold(Rational::zero(), |a, b| a + b)
    }
}

impl Field for Rational {
    fn from_rational(q: Rational) -> Rational {
        q
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn signum(&self) -> i32 {
        Rational::signum(self)
    }
    fn inv(&self) -> Rational {
        self.recip()
    }
    fn sqrt_of_rational(q: &Rational) -> Option<Rational> {
        q.sqrt_exact()
    }
    fn field_name() -> String {
        "Q".to_string()
    }
    fn mul_ref(&self, o: &Rational) -> Rational {
        self.mul_impl(o)
    }
    fn add_mul(&mut self, a: &Rational, b: &Rational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.add_impl(&a.mul_impl(b));
    }
    fn sub_mul(&mut self, a: &Rational, b: &Rational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.sub_impl(&a.mul_impl(b));
    }
    fn rank_of(m: &ExactMatrix<Rational>) -> usize {
        m.rank_bareiss()
    }
}

/// Shorthand for `Rational::new`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Shorthand for an integer rational.
pub fn qi(n: i64) -> Rational {
    Rational::from(n)
}

/// Element `a + b sqrt(D)` of the real quadratic field `Q(sqrt D)`.
///
/// `D` must be a positive non-square integer; this is checked whenever the
/// irrational unit is constructed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quad<const D: i64> {
    /// Rational part.
    pub a: Rational,
    /// Coefficient of `sqrt D`.
    pub b: Rational,
}

impl<const D: i64> Quad<D> {
    /// Builds `a + b sqrt D`.
    pub fn new(a: Rational, b: Rational) -> Self {
        Self::check_d();
        Quad { a, b }
    }

    /// The irrational unit `sqrt D`.
    pub fn sqrt_d() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    fn check_d() {
        assert!(D > 1, "quadratic field needs D > 1");
        let r = (D as f64).sqrt().round() as i64;
        assert!(
            (r - 1..=r + 1).all(|s| s * s != D),
            "quadratic field needs non-square D"
        );
    }

    /// Galois conjugate `a - b sqrt D`.
    pub fn conj(&self) -> Self {
        Quad {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm `a^2 - D b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &(&(&self.b * &self.b) * &Rational::from(D))
    }
}

impl<const D: i64> Zero for Quad<D> {
    fn zero() -> Self {
        Quad {
            a: Rational::zero(),
            b: Rational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<const D: i64> One for Quad<D> {
    fn one() -> Self {
        Quad {
            a: Rational::one(),
            b: Rational::zero(),
        }
    }
}

impl<const D: i64> fmt::Display for Quad<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let rad = format!("sqrt({D})");
        let bpart = if self.b.is_one() {
            rad
        } else if (-&self.b).is_one() {
            format!("-{rad}")
        } else {
            format!("{}*{rad}", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{bpart}")
        } else if self.b.signum() < 0 {
            write!(f, "{}{bpart}", self.a)
        } else {
            write!(f, "{}+{bpart}", self.a)
        }
    }
}

impl<const D: i64> fmt::Debug for Quad<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const D: i64> Serialize for Quad<D> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<const D: i64> Neg for Quad<D> {
    type Output = Self;
    fn neg(self) -> Self {
        Quad {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl<const D: i64> Quad<D> {
    fn add_impl(&self, o: &Self) -> Self {
        Quad {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
    fn sub_impl(&self, o: &Self) -> Self {
        Quad {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
    fn mul_impl(&self, o: &Self) -> Self {
        let d = Rational::from(D);
        Quad {
            a: &(&self.a * &o.a) + &(&(&self.b * &o.b) * &d),
            b: &(&self.a * &o.b) + &(&self.b * &o.a),
        }
    }
    fn inv_impl(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero");
        let c = self.conj();
        Quad {
            a: &c.a / &n,
            b: &c.b / &n,
        }
    }
    fn div_impl(&self, o: &Self) -> Self {
        self.mul_impl(&o.inv_impl())
    }
}

macro_rules! quad_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $imp:ident) => {
        impl<const D: i64> $tr<&Quad<D>> for Quad<D> {
            type Output = Quad<D>;
            fn $m(self, o: &Quad<D>) -> Quad<D> {
                self.$imp(o)
            }
        }
        impl<const D: i64> $tr<Quad<D>> for Quad<D> {
            type Output = Quad<D>;
            fn $m(self, o: Quad<D>) -> Quad<D> {
                self.$imp(&o)
            }
        }
        impl<const D: i64> $tr<&Quad<D>> for &Quad<D> {
            type Output = Quad<D>;
            fn $m(self, o: &Quad<D>) -> Quad<D> {
                self.$imp(o)
            }
        }
        impl<const D: i64> $atr<&Quad<D>> for Quad<D> {
            fn $am(&mut self, o: &Quad<D>) {
                *self = self.$imp(o);
            }
        }
        impl<const D: i64> $atr<Quad<D>> for Quad<D> {
            fn $am(&mut self, o: Quad<D>) {
                *self = self.$imp(&o);
            }
        }
    };
}

quad_binop!(Add, add, AddAssign, add_assign, add_impl);
quad_binop!(Sub, sub, SubAssign, sub_assign, sub_impl);
quad_binop!(Mul, mul, MulAssign, mul_assign, mul_impl);
quad_binop!(Div, div, DivAssign, div_assign, div_impl);

impl<const D: i64> Field for Quad<D> {
    fn from_rational(q: Rational) -> Self {
        Quad {
            a: q,
            b: Rational::zero(),
        }
    }
    fn to_rational(&self) -> Option<Rational> {
        if self.b.is_zero() {
            Some(self.a.clone())
        } else {
            None
        }
    }
    fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: compare a^2 with D b^2.
        let a2 = &self.a * &self.a;
        let b2d = &(&self.b * &self.b) * &Rational::from(D);
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }
    fn inv(&self) -> Self {
        self.inv_impl()
    }
    fn sqrt_of_rational(q: &Rational) -> Option<Self> {
        if let Some(r) = q.sqrt_exact() {
            return Some(Self::from_rational(r));
        }
        let r = (q / &Rational::from(D)).sqrt_exact()?;
        Some(Quad::new(Rational::zero(), r))
    }
    fn field_name() -> String {
        format!("Q(sqrt{D})")
    }
}
