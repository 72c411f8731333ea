//! Elements `a + b·√D` of a real quadratic field over the rationals.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::{ArithOp, Rational};

/// `rational + surd·√radicand`. When the radicand is the square of a rational
/// the surd part is folded into the rational part and stored as zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SurdElement {
    rational: Rational,
    surd: Rational,
    radicand: Rational,
}

impl SurdElement {
    pub fn new(rational: Rational, surd: Rational, radicand: Rational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::NonRealSurd(radicand.to_string()));
        }
        let mut e = SurdElement {
            rational,
            surd,
            radicand,
        };
        if !e.surd.is_zero() {
            if let Some(root) = e.radicand.sqrt_exact() {
                e.rational += &(&e.surd * &root);
                e.surd = Rational::zero();
            }
        }
        Ok(e)
    }

    pub fn from_rational(value: Rational, radicand: &Rational) -> Result<Self> {
        Self::new(value, Rational::zero(), radicand.clone())
    }

    /// `√D` itself.
    pub fn sqrt(radicand: &Rational) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), radicand.clone())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn surd_part(&self) -> &Rational {
        &self.surd
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    /// The value as a rational, when the surd part vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.surd.is_zero().then_some(&self.rational)
    }

    pub fn conjugate(&self) -> Self {
        SurdElement {
            rational: self.rational.clone(),
            surd: -&self.surd,
            radicand: self.radicand.clone(),
        }
    }

    /// `a² − D·b²`.
    pub fn norm(&self) -> Rational {
        &self.rational * &self.rational - &(&self.radicand * &(&self.surd * &self.surd))
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.radicand != other.radicand {
            return Err(Error::FieldMismatch {
                left: self.radicand.to_string(),
                right: other.radicand.to_string(),
            });
        }
        Ok(())
    }

    fn raw(&self, rational: Rational, surd: Rational) -> Self {
        SurdElement {
            rational,
            surd,
            radicand: self.radicand.clone(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.raw(&self.rational + &rhs.rational, &self.surd + &rhs.surd))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.raw(&self.rational - &rhs.rational, &self.surd - &rhs.surd))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        let (a, b, c, d) = (&self.rational, &self.surd, &rhs.rational, &rhs.surd);
        let rational = a * c + &(&self.radicand * &(b * d));
        let surd = a * d + b * c;
        Ok(self.raw(rational, surd))
    }

    /// Division by rationalizing with the conjugate of `rhs`.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        if rhs.is_zero() {
            return Err(Error::DegenerateInput("division by zero surd".into()));
        }
        let norm = rhs.norm();
        let top = self.checked_mul(&rhs.conjugate())?;
        Ok(self.raw(
            top.rational.checked_div(&norm)?,
            top.surd.checked_div(&norm)?,
        ))
    }

    pub fn arith(&self, rhs: &Self, op: ArithOp) -> Result<Self> {
        match op {
            ArithOp::Add => self.checked_add(rhs),
            ArithOp::Sub => self.checked_sub(rhs),
            ArithOp::Mul => self.checked_mul(rhs),
            ArithOp::Div => self.checked_div(rhs),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.raw(&self.rational * k, &self.surd * k)
    }

    pub fn add_rational(&self, k: &Rational) -> Self {
        self.raw(&self.rational + k, self.surd.clone())
    }

    pub fn neg(&self) -> Self {
        self.raw(-&self.rational, -&self.surd)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::from_rational(Rational::one(), &self.radicand)?.checked_div(self)
    }

    /// Integer power; negative exponents go through the reciprocal.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.recip()?.pow(-exp);
        }
        let mut acc = Self::from_rational(Rational::one(), &self.radicand)?;
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Exact sign of the real value.
    pub fn signum(&self) -> i32 {
        let (sa, sb) = (self.rational.signum(), self.surd.signum());
        if sb == 0 || self.radicand.is_zero() {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with D·b²
        let lhs = &self.rational * &self.rational;
        let rhs = &self.radicand * &(&self.surd * &self.surd);
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    /// Rational approximation within `2^-precision` of the exact value.
    pub fn to_approx(&self, precision: u32) -> Result<Rational> {
        if self.radicand.is_negative() {
            return Err(Error::NonRealSurd(self.radicand.to_string()));
        }
        if self.surd.is_zero() {
            return Ok(self.rational.clone());
        }
        // √(p/q) = √(p·q)/q; truncate √(p·q·4^k) so the error in √D is below 2^-k.
        let guard = self.surd.abs().floor().bits() as u32 + 2;
        let k = precision + guard;
        let pq = self.radicand.numer() * self.radicand.denom();
        let scaled: BigInt = pq << (2 * k as usize);
        let root = scaled.sqrt();
        let denom = self.radicand.denom() << (k as usize);
        let sqrt_d = Rational::new(root, denom)?;
        Ok(&self.rational + &(&self.surd * &sqrt_d))
    }

    /// Nearest-double view of [`to_approx`](Self::to_approx) at 64 bits.
    pub fn to_f64(&self) -> Result<f64> {
        Ok(self.to_approx(64)?.to_f64())
    }
}

impl fmt::Display for SurdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.surd;
        if b.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.rational, -b, self.radicand)
        } else {
            write!(f, "{} + {}*sqrt({})", self.rational, b, self.radicand)
        }
    }
}

impl fmt::Debug for SurdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use proptest::prelude::*;

    fn s(a: Rational, b: Rational, d: i64) -> SurdElement {
        SurdElement::new(a, b, rat!(d)).unwrap()
    }

    #[test]
    fn spec_examples() {
        let p = s(rat!(1), rat!(1), 5);
        let q = s(rat!(1), rat!(-1), 5);
        assert_eq!(p.checked_mul(&q).unwrap(), s(rat!(-4), rat!(0), 5));

        let r2 = s(rat!(0), rat!(1), 2);
        assert_eq!(r2.checked_mul(&r2).unwrap(), s(rat!(2), rat!(0), 2));

        let one = s(rat!(1), rat!(0), 5);
        let quot = one.checked_div(&p).unwrap();
        assert_eq!(quot, s(rat!(-1, 4), rat!(1, 4), 5));
        assert_eq!(quot.checked_mul(&p).unwrap(), one);
    }

    #[test]
    fn errors() {
        let a = s(rat!(1), rat!(1), 5);
        let b = s(rat!(1), rat!(1), 2);
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
        let z = s(rat!(0), rat!(0), 5);
        assert!(matches!(a.checked_div(&z), Err(Error::DegenerateInput(_))));
        assert!(matches!(
            SurdElement::new(rat!(1), rat!(1), rat!(-3)),
            Err(Error::NonRealSurd(_))
        ));
    }

    #[test]
    fn perfect_square_radicand_collapses() {
        let e = s(rat!(1), rat!(2), 9);
        assert_eq!(e.rational_part(), &rat!(7));
        assert!(e.surd_part().is_zero());
        let e = SurdElement::new(rat!(0), rat!(1), rat!(9, 4)).unwrap();
        assert_eq!(e.as_rational(), Some(&rat!(3, 2)));
    }

    #[test]
    fn approximations() {
        let r5 = s(rat!(0), rat!(1), 5);
        assert!((r5.to_f64().unwrap() - 5f64.sqrt()).abs() < 1e-15);
        let lam = s(rat!(3, 2), rat!(-1, 2), 5);
        assert!((lam.to_f64().unwrap() - 0.381_966_011_250_105_1).abs() < 1e-15);
        assert_eq!(s(rat!(0), rat!(0), 5).to_f64().unwrap(), 0.0);
    }

    fn assert_within(e: &SurdElement, approx: &Rational, precision: u32) {
        let eps = rat!(1).checked_div(&rat!(2).pow(precision as i64).unwrap()).unwrap();
        let lo = e.add_rational(&-(approx - &eps));
        let hi = e.add_rational(&-(approx + &eps));
        assert_eq!(lo.signum(), 1, "{e} below {approx} - 2^-{precision}");
        assert_eq!(hi.signum(), -1, "{e} above {approx} + 2^-{precision}");
    }

    #[test]
    fn approximation_error_bound_is_exact() {
        for p in [1u32, 10, 53, 64, 200] {
            for e in [
                s(rat!(0), rat!(1), 5),
                s(rat!(3, 2), rat!(-1, 2), 5),
                s(rat!(7, 2), rat!(-3, 2), 5),
                s(rat!(-11, 3), rat!(1000, 7), 2),
                SurdElement::new(rat!(1), rat!(1), rat!(2, 3)).unwrap(),
            ] {
                let approx = e.to_approx(p).unwrap();
                assert_within(&e, &approx, p);
            }
        }
    }

    #[test]
    fn signum_is_exact() {
        assert_eq!(s(rat!(3), rat!(-1), 9).signum(), 0);
        assert_eq!(s(rat!(3), rat!(-1), 8).signum(), 1);
        assert_eq!(s(rat!(3), rat!(-1), 10).signum(), -1);
        assert_eq!(s(rat!(-3), rat!(1), 10).signum(), 1);
    }

    fn elem() -> impl Strategy<Value = SurdElement> {
        (-20i64..20, 1i64..9, -20i64..20, 1i64..9)
            .prop_map(|(a, da, b, db)| s(rat!(a, da), rat!(b, db), 7))
    }

    proptest! {
        #[test]
        fn conjugate_product_is_rational(e in elem()) {
            let prod = e.checked_mul(&e.conjugate()).unwrap();
            prop_assert!(prod.surd_part().is_zero());
            let expected = e.rational_part() * e.rational_part()
                - &(rat!(7) * (e.surd_part() * e.surd_part()));
            prop_assert_eq!(prod.rational_part(), &expected);
        }

        #[test]
        fn division_inverts_multiplication(a in elem(), b in elem()) {
            prop_assume!(!b.is_zero());
            let q = a.checked_div(&b).unwrap();
            prop_assert_eq!(q.checked_mul(&b).unwrap(), a);
        }

        #[test]
        fn rational_elements_convert_within_an_ulp(n in -10_000i64..10_000, d in 1i64..1000) {
            let r = rat!(n, d);
            let e = SurdElement::from_rational(r.clone(), &rat!(5)).unwrap();
            let x = e.to_f64().unwrap();
            let y = r.to_f64();
            prop_assert!((x - y).abs() <= f64::EPSILON * y.abs());
        }
    }
}
