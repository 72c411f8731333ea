//! Sparse multivariate polynomials over [`Rational`] in indexed variables
//! `x1, x2, …`.
//!
//! Terms are kept in graded lexicographic order: higher total degree first,
//! ties broken by comparing exponents of `x1`, then `x2`, and so on. The
//! [`Display`](std::fmt::Display) form follows that order and is accepted back
//! by [`crate::parse::parse_polynomial`].

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A product of variable powers. Exponents are positive; the empty monomial is `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    // sorted by variable index, no zero exponents
    powers: Vec<(u32, u32)>,
    // total degree, cached for ordering
    degree: u32,
}

impl Monomial {
    fn from_sorted(powers: Vec<(u32, u32)>) -> Self {
        let degree = powers.iter().map(|&(_, e)| e).sum();
        Monomial { powers, degree }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(index: u32) -> Self {
        Self::var_pow(index, 1)
    }

    pub fn var_pow(index: u32, exp: u32) -> Self {
        assert!(index >= 1, "variables are numbered from 1");
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial::from_sorted(vec![(index, exp)])
        }
    }

    pub fn from_powers(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            assert!(v >= 1, "variables are numbered from 1");
            *map.entry(v).or_insert(0) += e;
        }
        Monomial::from_sorted(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, var: u32) -> u32 {
        self.powers
            .iter()
            .find(|&&(v, _)| v == var)
            .map_or(0, |&(_, e)| e)
    }

    pub fn powers(&self) -> &[(u32, u32)] {
        &self.powers
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            powers: out,
            degree: self.degree + other.degree,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // lex on the dense exponent vector (x1, x2, ...)
            let (a, b) = (&self.powers, &other.powers);
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(&eb) {
                            Ordering::Equal => {
                                i += 1;
                                j += 1;
                            }
                            ord => return ord,
                        },
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A point at which to evaluate or partially substitute variables.
pub type Assignment = BTreeMap<u32, Rational>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(index: u32) -> Self {
        Self::term(Rational::one(), Monomial::var(index))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Univariate polynomial `Σ coeffs[i]·x_var^i`.
    pub fn univariate(var: u32, coeffs: &[Rational]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var_pow(var, i as u32), c.clone())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Variables occurring in the polynomial, ascending.
    pub fn variables(&self) -> Vec<u32> {
        let mut vars: Vec<u32> = self
            .terms
            .keys()
            .flat_map(|m| m.powers.iter().map(|&(v, _)| v))
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Full evaluation; every occurring variable must be assigned.
    pub fn eval(&self, point: &Assignment) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.powers {
                let x = point.get(&v).ok_or(Error::UnboundVariable(v))?;
                t *= &x.pow(e as i64)?;
            }
            total += &t;
        }
        Ok(total)
    }

    /// Substitutes the assigned variables and leaves the rest symbolic.
    pub fn substitute(&self, point: &Assignment) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut k = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in &m.powers {
                match point.get(&v) {
                    Some(x) => k *= &x.pow(e as i64).expect("nonnegative exponent"),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_sorted(rest), &k);
        }
        out
    }

    /// Replaces variable `var` by the polynomial `value`.
    pub fn compose_var(&self, var: u32, value: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let rest = Monomial::from_sorted(m.powers.iter().copied().filter(|&(v, _)| v != var).collect());
            let t = &Polynomial::term(c.clone(), rest) * &value.pow(e);
            out = &out + &t;
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(Rational::from(c))
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        // accumulate unordered, sort once
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    Entry::Occupied(mut e) => *e.get_mut() += &prod,
                }
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $tr::$method(&self, &rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $tr::$method(&self, rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl std::ops::AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl std::ops::SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c);
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

/// Shorthand for `x_index`.
pub fn x(index: u32) -> Polynomial {
    Polynomial::var(index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use proptest::prelude::*;

    fn c(n: i64) -> Polynomial {
        Polynomial::from(n)
    }

    #[test]
    fn spec_arith_examples() {
        assert_eq!(&(&x(1) + &c(1)) * &(&x(1) - &c(1)), &x(1).pow(2) - &c(1));
        let p = &(&x(1).pow(2) + &x(1).scale(&rat!(4))) + &c(1);
        assert_eq!(&p + &Polynomial::zero(), p);
        assert_eq!(&(-&x(1)) * &(-&x(2)), &x(1) * &x(2));
    }

    #[test]
    fn spec_pow_examples() {
        assert_eq!((&x(1) + &c(1)).pow(2), &(&x(1).pow(2) + &x(1).scale(&rat!(2))) + &c(1));
        assert_eq!((&x(3) - &c(7)).pow(0), Polynomial::one());
        assert_eq!((-&x(1)).pow(3), -&x(1).pow(3));
    }

    #[test]
    fn spec_eval_examples() {
        let p = &(&x(1).pow(2) + &x(1).scale(&rat!(4))) + &c(1);
        let at = |v: Rational| Assignment::from([(1, v)]);
        assert_eq!(p.eval(&at(rat!(1))).unwrap(), rat!(6));
        assert_eq!(p.eval(&at(rat!(-1))).unwrap(), rat!(-2));
        let q = &x(1) * &x(2);
        let pt = Assignment::from([(1, rat!(2, 3)), (2, rat!(3, 2))]);
        assert_eq!(q.eval(&pt).unwrap(), rat!(1));
        assert_eq!(q.eval(&at(rat!(1))), Err(Error::UnboundVariable(2)));
    }

    #[test]
    fn no_zero_terms_survive() {
        let p = &(&x(1) + &c(2)) - &x(1);
        assert_eq!(p, c(2));
        assert_eq!(p.len(), 1);
        assert!((&x(2) - &x(2)).is_zero());
        assert_eq!(Polynomial::constant(rat!(0)).len(), 0);
    }

    #[test]
    fn graded_lex_printing() {
        let p = &(&(&x(2).pow(2) + &x(1)) + &(&x(1) * &x(2)).scale(&rat!(-3, 2))) + &c(-5);
        assert_eq!(p.to_string(), "-3/2*x1*x2 + x2^2 + x1 - 5");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!((-&x(1)).to_string(), "-x1");
        let sextet = &(&(-&x(1).pow(2)) - &x(1).scale(&rat!(4))) - &c(1);
        assert_eq!(sextet.to_string(), "-x1^2 - 4*x1 - 1");
    }

    #[test]
    fn substitute_and_compose() {
        let p = &(&x(1) * &x(2)) + &x(2);
        let s = p.substitute(&Assignment::from([(1, rat!(3))]));
        assert_eq!(s, x(2).scale(&rat!(4)));
        let q = p.compose_var(2, &(&x(1) + &c(1)));
        assert_eq!(q, &(&x(1).pow(2) + &x(1).scale(&rat!(2))) + &c(1));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let term = (-6i64..=6, 1i64..=3, prop::collection::vec((1u32..=3, 0u32..=3), 0..=3))
            .prop_map(|(n, d, pw)| (Monomial::from_powers(pw), rat!(n, d)));
        prop::collection::vec(term, 0..=6).prop_map(Polynomial::from_terms)
    }

    fn arb_point() -> impl Strategy<Value = Assignment> {
        prop::collection::vec((-5i64..=5, 1i64..=4), 3).prop_map(|v| {
            v.into_iter().enumerate().map(|(i, (n, d))| (i as u32 + 1, rat!(n, d))).collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert!((&a * &Polynomial::zero()).is_zero());
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), pt in arb_point()) {
            let (ea, eb) = (a.eval(&pt).unwrap(), b.eval(&pt).unwrap());
            prop_assert_eq!((&a * &b).eval(&pt).unwrap(), &ea * &eb);
            prop_assert_eq!((&a + &b).eval(&pt).unwrap(), &ea + &eb);
            prop_assert_eq!(a.pow(3).eval(&pt).unwrap(), ea.pow(3).unwrap());
        }
    }
}
