//! Exact rational numbers.
//!
//! Every value is kept reduced with a positive denominator, so structural
//! equality is value equality and zero is always `0/1`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational. Values whose reduced numerator and denominator fit in `i64`
/// are stored inline; anything larger spills to [`BigRational`]. The split is
/// canonical, so derived equality and hashing compare values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    // reduced, denominator > 0
    Small(i64, i64),
    // reduced, and at least one part outside i64
    Big(BigRational),
}

/// The four field operations, for callers that pick one at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Reduces `n/d` (`d != 0`) without overflow; `None` sends the caller to the big path.
fn reduce(n: i128, d: i128) -> Option<Rational> {
    let g = n.unsigned_abs().gcd(&d.unsigned_abs());
    let g = i128::try_from(g).ok()?;
    let (mut n, mut d) = (n / g, d / g);
    if d < 0 {
        n = n.checked_neg()?;
        d = d.checked_neg()?;
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Some(Rational(Repr::Small(n, d))),
        _ => Some(Rational::from_big(BigRational::new_raw(n.into(), d.into()))),
    }
}

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DegenerateInput("zero denominator".into()));
        }
        Ok(Rational::from_big(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational::from_big(BigRational::from_integer(n.into()))
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(r)),
        }
    }

    fn big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(r) => match r.numer().sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            },
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DegenerateInput(format!("division of {self} by zero")));
        }
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            if let Some(r) = reduce(*a as i128 * *d as i128, *b as i128 * *c as i128) {
                return Ok(r);
            }
        }
        Ok(Rational::from_big(self.big() / rhs.big()))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Rational> {
        if exp < 0 {
            return self.recip()?.pow(-exp);
        }
        let mut base = self.clone();
        let mut acc = Rational::one();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn arith(&self, rhs: &Rational, op: ArithOp) -> Result<Rational> {
        Ok(match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
            ArithOp::Div => self.checked_div(rhs)?,
        })
    }

    /// Exact square root when the value is the square of a rational.
    pub fn sqrt_exact(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        let (num, den) = (self.numer(), self.denom());
        let (n, d) = (num.sqrt(), den.sqrt());
        if &n * &n == num && &d * &d == den {
            Some(Rational::from_big(BigRational::new(n, d)))
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        const EXACT: i64 = 1 << 53;
        match &self.0 {
            // both parts exact in f64, so one correctly rounded division
            Repr::Small(n, d) if n.abs() <= EXACT && *d <= EXACT => *n as f64 / *d as f64,
            _ => self.big().to_f64().unwrap_or(f64::NAN),
        }
    }

    /// Integer value, if this is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(&self.denom())
    }

    fn add_impl(&self, rhs: &Rational) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == 1 && d == 1 {
                if let Some(r) = reduce(a + c, 1) {
                    return r;
                }
            } else if let Some(r) = (a * d).checked_add(c * b).and_then(|n| reduce(n, b * d)) {
                return r;
            }
        }
        Rational::from_big(self.big() + rhs.big())
    }

    fn mul_impl(&self, rhs: &Rational) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            if let Some(r) = reduce(*a as i128 * *c as i128, *b as i128 * *d as i128) {
                return r;
            }
        }
        Rational::from_big(self.big() * rhs.big())
    }

    fn sub_impl(&self, rhs: &Rational) -> Rational {
        self.add_impl(&-rhs)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.big().cmp(&other.big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p`, `p/q` and plain decimals such as `-0.25`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidParameter(format!("not a rational number: '{s}'"));
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            return Rational::new(n, d);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int.trim_start().starts_with('-');
            let int_part: BigInt = match int.trim() {
                "" | "-" | "+" => BigInt::zero(),
                t => t.parse().map_err(|_| bad())?,
            };
            let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let magnitude = int_part.abs() * &scale + frac_part;
            let numer = if negative { -magnitude } else { magnitude };
            return Rational::new(numer, scale);
        }
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Rational::from_integer(n))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from(n as i64)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                self.$imp(rhs)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$imp(&rhs)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                self.$imp(rhs)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = self.add_impl(rhs);
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = self.sub_impl(rhs);
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = self.mul_impl(rhs);
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
            Repr::Small(n, d) => n
                .checked_neg()
                .map(|m| Rational(Repr::Small(m, *d)))
                .unwrap_or_else(|| Rational::from_big(-self.big())),
            Repr::Big(r) => Rational::from_big(-r),
        }
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        matches!(self.0, Repr::Small(n, 1) if n == *other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rational::from(*other)))
    }
}

/// Builds a rational from integer literals; panics on a zero denominator.
#[macro_export]
macro_rules! rat {
    ($n:expr) => {
        $crate::Rational::from($n as i64)
    };
    ($n:expr, $d:expr) => {
        $crate::Rational::new($n as i64, $d as i64).expect("nonzero denominator")
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn spec_examples() {
        assert_eq!(rat!(1, 2).arith(&rat!(1, 3), ArithOp::Add).unwrap(), rat!(5, 6));
        assert_eq!(rat!(7, 7).arith(&rat!(1), ArithOp::Mul).unwrap(), rat!(1));
        assert!(matches!(
            rat!(3, 4).arith(&rat!(0), ArithOp::Div),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn zero_is_canonical() {
        let z = rat!(0, -5);
        assert_eq!(z.numer(), BigInt::from(0));
        assert_eq!(z.denom(), BigInt::from(1));
        assert_eq!(rat!(2, -4), rat!(-1, 2));
        assert_eq!(rat!(2, -4).denom(), BigInt::from(2));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("3/6".parse::<Rational>().unwrap(), rat!(1, 2));
        assert_eq!("-0.25".parse::<Rational>().unwrap(), rat!(-1, 4));
        assert_eq!("-0.5".parse::<Rational>().unwrap().to_string(), "-1/2");
        assert_eq!("17".parse::<Rational>().unwrap().to_string(), "17");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(rat!(9, 4).sqrt_exact(), Some(rat!(3, 2)));
        assert_eq!(rat!(5).sqrt_exact(), None);
        assert_eq!(rat!(-4).sqrt_exact(), None);
        assert_eq!(rat!(0).sqrt_exact(), Some(rat!(0)));
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..30).prop_map(|(n, d)| rat!(n, d))
    }

    #[test]
    fn spills_and_returns() {
        let m = Rational::from(i64::MIN);
        assert_eq!((-&m).to_string(), "9223372036854775808");
        assert_eq!(-(-&m), m);
        let big = &Rational::from(i64::MAX) * &Rational::from(i64::MAX);
        let back = big.checked_div(&Rational::from(i64::MAX)).unwrap();
        assert_eq!(back, Rational::from(i64::MAX));
        assert!(matches!(back.0, Repr::Small(..)));
        assert_eq!(rat!(1, 3).to_f64(), 1.0 / 3.0);
        let (max, min) = (Rational::from(i64::MAX), Rational::from(i64::MIN));
        assert!(max > rat!(1, 2));
        assert!(-&big < min);
    }

    fn oracle(r: &Rational) -> BigRational {
        BigRational::new(r.numer(), r.denom())
    }

    fn wide() -> impl Strategy<Value = Rational> {
        prop_oneof![
            (any::<i64>(), any::<i64>().prop_filter("nonzero", |d| *d != 0)).prop_map(|(n, d)| Rational::new(n, d).unwrap()),
            (-9i64..9, 1i64..9).prop_map(|(n, d)| rat!(n, d)),
            (any::<i64>(), any::<i64>()).prop_map(|(a, b)| &Rational::from(a) * &Rational::from(b)),
        ]
    }

    proptest! {
        #[test]
        fn matches_bigrational(a in wide(), b in wide()) {
            let (x, y) = (oracle(&a), oracle(&b));
            prop_assert_eq!(oracle(&(&a + &b)), &x + &y);
            prop_assert_eq!(oracle(&(&a - &b)), &x - &y);
            prop_assert_eq!(oracle(&(&a * &b)), &x * &y);
            prop_assert_eq!(oracle(&-&a), -&x);
            prop_assert_eq!(a.cmp(&b), x.cmp(&y));
            if !b.is_zero() {
                prop_assert_eq!(oracle(&a.checked_div(&b).unwrap()), &x / &y);
            }
            // canonical form: a value that fits is always stored inline
            let sum = &a + &b;
            let fits = sum.numer().to_i64().is_some() && sum.denom().to_i64().is_some();
            prop_assert_eq!(fits, matches!(sum.0, Repr::Small(..)));
        }

        #[test]
        fn field_laws(a in small(), b in small(), c in small()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.is_zero() {
                prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
            }
        }
    }
}
