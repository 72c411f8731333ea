//! Binet-type closed forms for two-term denominators, evaluated exactly in `Q(√D)`.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::surd::SurdElement;

/// Roots of `1 + p1 w + p2 w^2` at a rational point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticRootData {
    pub p1: Rational,
    pub p2: Rational,
    pub discriminant: Rational,
    /// `(-p1 + √D) / (2 p2)`
    pub a1: SurdElement,
    /// `(-p1 - √D) / (2 p2)`
    pub a2: SurdElement,
}

impl QuadraticRootData {
    pub fn new(p1: Rational, p2: Rational) -> Result<Self> {
        if p2.is_zero() {
            return Err(Error::DegenerateDenominator);
        }
        let d = &p1 * &p1 - Rational::from(4) * &p2;
        if d.is_negative() {
            return Err(Error::NonRealSurd(d.to_string()));
        }
        if d.is_zero() {
            return Err(Error::RepeatedRoot);
        }
        let sqrt_d = SurdElement::sqrt(&d)?;
        let inv = (Rational::from(2) * &p2).recip()?;
        let a1 = sqrt_d.add_rational(&-&p1).scale(&inv);
        let a2 = sqrt_d.neg().add_rational(&-&p1).scale(&inv);
        Ok(QuadraticRootData {
            p1,
            p2,
            discriminant: d,
            a1,
            a2,
        })
    }

    /// `a1 a2 = 1/p2` and `a1 + a2 = -p1/p2`, checked exactly.
    pub fn vieta_holds(&self) -> bool {
        let prod = self.a1.checked_mul(&self.a2).ok().and_then(|p| p.as_rational().cloned());
        let sum = self.a1.checked_add(&self.a2).ok().and_then(|s| s.as_rational().cloned());
        let inv = self.p2.recip().ok();
        prod == inv && sum == inv.map(|i| -&self.p1 * &i)
    }
}

/// `2^(n-1) p2^n / s`, the shared prefactor, where `s` is `±√D`.
fn prefactor(p2: &Rational, s: &SurdElement, n: u64) -> Result<SurdElement> {
    let k = Rational::from(2).pow(n as i64 - 1)? * p2.pow(n as i64)?;
    s.recip().map(|r| r.scale(&k))
}

fn y2_with_root(p1: &Rational, p2: &Rational, s: &SurdElement, n: u64) -> Result<SurdElement> {
    let pre = prefactor(p2, s, n)?;
    let plus = s.add_rational(p1).checked_div(&s.add_rational(&-p1).pow(n as i64)?)?;
    let minus = s.neg().add_rational(p1).checked_div(&s.neg().add_rational(&-p1).pow(n as i64)?)?;
    pre.checked_mul(&plus.checked_sub(&minus)?)
}

fn s2_with_root(p1: &Rational, p2: &Rational, q0: &Rational, q1: &Rational, s: &SurdElement, n: u64) -> Result<SurdElement> {
    let two_q1 = Rational::from(2) * q1;
    let pre = prefactor(p2, s, n)?;
    let num1 = s.add_rational(p1).scale(q0).add_rational(&-&two_q1);
    let den1 = s.add_rational(&-p1).pow(n as i64)?;
    let num2 = s.add_rational(&-p1).scale(q0).add_rational(&two_q1);
    let den2 = s.neg().add_rational(&-p1).pow(n as i64)?;
    pre.checked_mul(&num1.checked_div(&den1)?.checked_add(&num2.checked_div(&den2)?)?)
}

/// `Y_n(p1, p2)`:
/// `2^(n-1) p2^n / √D * [(p1+√D)/(-p1+√D)^n - (p1-√D)/(-p1-√D)^n]`.
pub fn binet_y2(p1: &Rational, p2: &Rational, n: u64) -> Result<SurdElement> {
    let roots = QuadraticRootData::new(p1.clone(), p2.clone())?;
    y2_with_root(p1, p2, &SurdElement::sqrt(&roots.discriminant)?, n)
}

/// `S_n(p1, p2; q0, q1)`:
/// `2^(n-1) p2^n / √D * [((p1+√D) q0 - 2 q1)/(-p1+√D)^n + ((-p1+√D) q0 + 2 q1)/(-p1-√D)^n]`.
pub fn binet_s2(p1: &Rational, p2: &Rational, q0: &Rational, q1: &Rational, n: u64) -> Result<SurdElement> {
    let roots = QuadraticRootData::new(p1.clone(), p2.clone())?;
    s2_with_root(p1, p2, q0, q1, &SurdElement::sqrt(&roots.discriminant)?, n)
}

/// Both Binet forms evaluated with `√D` replaced by `-√D`.
pub fn binet_conjugated(p1: &Rational, p2: &Rational, q: Option<(&Rational, &Rational)>, n: u64) -> Result<SurdElement> {
    let roots = QuadraticRootData::new(p1.clone(), p2.clone())?;
    let s = SurdElement::sqrt(&roots.discriminant)?.neg();
    match q {
        None => y2_with_root(p1, p2, &s, n),
        Some((q0, q1)) => s2_with_root(p1, p2, q0, q1, &s, n),
    }
}

fn five() -> Rational {
    Rational::from(5)
}

fn r(v: i64) -> Rational {
    Rational::from(v)
}

/// `(-2)^n/√5 * (1/(1-√5)^n - 1/(1+√5)^n)`, the two-term Fibonacci form.
pub fn binet_fibonacci(n: u64) -> Result<SurdElement> {
    let s5 = SurdElement::sqrt(&five())?;
    let lhs = s5.neg().add_rational(&r(1)).pow(-(n as i64))?;
    let rhs = s5.add_rational(&r(1)).pow(-(n as i64))?;
    let k = r(-2).pow(n as i64)?;
    lhs.checked_sub(&rhs)?.checked_div(&s5).map(|v| v.scale(&k))
}

/// The two-term Lucas form as usually stated:
/// `2^n (-1)^n (1/(1+√5)^n - 1/(1-√5)^n)`. Does not give `L_n` (n = 1 yields `-√5`).
pub fn binet_lucas_as_printed(n: u64) -> Result<SurdElement> {
    let s5 = SurdElement::sqrt(&five())?;
    let a = s5.add_rational(&r(1)).pow(-(n as i64))?;
    let b = s5.neg().add_rational(&r(1)).pow(-(n as i64))?;
    let k = r(-2).pow(n as i64)?;
    Ok(a.checked_sub(&b)?.scale(&k))
}

/// `L_n` through the general two-term form with `(P; Q) = (-1, -1; 2, -1)`.
pub fn binet_lucas(n: u64) -> Result<SurdElement> {
    binet_s2(&r(-1), &r(-1), &r(2), &r(-1), n)
}

/// `(-1)^n/(2√2) * ((-2+√2)/(1+√2)^n + (2+√2)/(1-√2)^n)`, i.e. `S_n(-2,-1;1,1)`.
pub fn binet_pell_garland(n: u64) -> Result<SurdElement> {
    let s2 = SurdElement::sqrt(&r(2))?;
    let first = s2.add_rational(&r(-2)).checked_div(&s2.add_rational(&r(1)).pow(n as i64)?)?;
    let second = s2.add_rational(&r(2)).checked_div(&s2.neg().add_rational(&r(1)).pow(n as i64)?)?;
    let k = r(-1).pow(n as i64)?;
    first.checked_add(&second)?.checked_div(&s2.scale(&r(2))).map(|v| v.scale(&k))
}

/// `g_m = ((1+√2)^(m+1) + (1-√2)^(m+1)) / 2`.
pub fn closed_form_gm(m: u64) -> Rational {
    let s2 = SurdElement::sqrt(&r(2)).expect("2 > 0");
    let e = m as i64 + 1;
    let a = s2.add_rational(&r(1)).pow(e).expect("nonnegative power");
    let b = s2.neg().add_rational(&r(1)).pow(e).expect("nonnegative power");
    let sum = a.checked_add(&b).expect("same field").scale(&Rational::new(1, 2).expect("nonzero"));
    sum.as_rational().cloned().expect("conjugate sum is rational")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use crate::series::{expand_s, expand_y, FamilySpec};
    use proptest::prelude::*;

    fn rational_value(e: &SurdElement) -> Rational {
        e.as_rational().cloned().unwrap_or_else(|| panic!("surd part nonzero: {e}"))
    }

    fn oracle(p1: &Rational, p2: &Rational, q: Option<(&Rational, &Rational)>, n: usize) -> Vec<Rational> {
        let qs = q.map(|(a, b)| vec![a.clone().into(), b.clone().into()]).unwrap_or_default();
        let spec = FamilySpec::new(vec![p1.clone().into(), p2.clone().into()], qs, n).unwrap();
        let s = if q.is_some() { expand_s(&spec) } else { expand_y(&spec) };
        s.coeffs().iter().map(|c| c.as_constant().unwrap()).collect()
    }

    #[test]
    fn y2_examples() {
        let v = binet_y2(&rat!(-1), &rat!(-1), 5).unwrap();
        assert_eq!(rational_value(&v), rat!(8));
        assert!(v.surd_part().is_zero());
        assert_eq!(rational_value(&binet_y2(&rat!(-2), &rat!(-1), 2).unwrap()), rat!(5));
        // U_2(x) = 4x^2 - 1 at x = 3/2: p1 = -3, p2 = 1, D = 5
        assert_eq!(rational_value(&binet_y2(&rat!(-3), &rat!(1), 2).unwrap()), rat!(8));
        assert_eq!(rational_value(&binet_y2(&rat!(7), &rat!(2, 3), 0).unwrap()), rat!(1));
    }

    #[test]
    fn chebyshev_u_at_one_is_repeated_root() {
        // p1 = -2, p2 = 1 is the x = 1 point of U_n; D = 0 there
        assert_eq!(binet_y2(&rat!(-2), &rat!(1), 2), Err(Error::RepeatedRoot));
    }

    #[test]
    fn errors() {
        assert_eq!(binet_y2(&rat!(1), &rat!(0), 3), Err(Error::DegenerateDenominator));
        assert!(matches!(binet_y2(&rat!(1), &rat!(1), 3), Err(Error::NonRealSurd(_))));
        assert_eq!(binet_s2(&rat!(2), &rat!(1), &rat!(1), &rat!(0), 1), Err(Error::RepeatedRoot));
    }

    #[test]
    fn s2_examples() {
        assert_eq!(rational_value(&binet_s2(&rat!(-1), &rat!(-1), &rat!(0), &rat!(1), 7).unwrap()), rat!(13));
        assert_eq!(rational_value(&binet_s2(&rat!(-2), &rat!(-1), &rat!(1), &rat!(1), 3).unwrap()), rat!(17));
        assert_eq!(rational_value(&binet_s2(&rat!(-2), &rat!(-1), &rat!(0), &rat!(1), 4).unwrap()), rat!(12));
    }

    #[test]
    fn perfect_square_discriminant() {
        // 1 - 3w + 2w^2 = (1-w)(1-2w): Y_n = 2^(n+1) - 1
        for n in 0..10u64 {
            let v = binet_y2(&rat!(-3), &rat!(2), n).unwrap();
            assert_eq!(rational_value(&v), Rational::from((1i64 << (n + 1)) - 1));
        }
    }

    #[test]
    fn fibonacci_and_lucas_forms() {
        let fib = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55];
        let luc = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123];
        let gar = [1, 3, 7, 17, 41, 99, 239];
        for n in 0..=10 {
            assert_eq!(rational_value(&binet_fibonacci(n as u64).unwrap()), rat!(fib[n]));
            assert_eq!(rational_value(&binet_lucas(n as u64).unwrap()), rat!(luc[n]));
        }
        for (n, g) in gar.iter().enumerate() {
            assert_eq!(rational_value(&binet_pell_garland(n as u64).unwrap()), rat!(*g));
            assert_eq!(closed_form_gm(n as u64), rat!(*g));
        }
        let printed = binet_lucas_as_printed(1).unwrap();
        assert_eq!(printed, SurdElement::sqrt(&rat!(5)).unwrap().neg());
    }

    #[test]
    fn gm_examples() {
        assert_eq!(closed_form_gm(0), rat!(1));
        assert_eq!(closed_form_gm(1), rat!(3));
        assert_eq!(closed_form_gm(4), rat!(41));
    }

    #[test]
    fn vieta() {
        let d = QuadraticRootData::new(rat!(-1), rat!(-1)).unwrap();
        assert!(d.vieta_holds());
        assert_eq!(d.discriminant, rat!(5));
    }

    fn point() -> impl Strategy<Value = (Rational, Rational)> {
        ((-6i64..=6, 1i64..=3), (-6i64..=6, 1i64..=3))
            .prop_map(|((a, b), (c, d))| (rat!(a, b), rat!(c, d)))
            .prop_filter("p2 != 0, D > 0", |(p1, p2)| {
                !p2.is_zero() && (p1 * p1 - Rational::from(4) * p2).signum() > 0
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn binet_matches_oracle((p1, p2) in point(), q0 in -4i64..=4, q1 in -4i64..=4) {
            let (q0, q1) = (rat!(q0), rat!(q1));
            prop_assert!(QuadraticRootData::new(p1.clone(), p2.clone()).unwrap().vieta_holds());
            let ys = oracle(&p1, &p2, None, 12);
            let ss = oracle(&p1, &p2, Some((&q0, &q1)), 12);
            for n in 0..=12u64 {
                let y = binet_y2(&p1, &p2, n).unwrap();
                let s = binet_s2(&p1, &p2, &q0, &q1, n).unwrap();
                prop_assert!(y.surd_part().is_zero() && s.surd_part().is_zero());
                prop_assert_eq!(y.rational_part(), &ys[n as usize]);
                prop_assert_eq!(s.rational_part(), &ss[n as usize]);
                prop_assert_eq!(&binet_conjugated(&p1, &p2, None, n).unwrap(), &y);
                prop_assert_eq!(&binet_conjugated(&p1, &p2, Some((&q0, &q1)), n).unwrap(), &s);
            }
        }
    }
}
