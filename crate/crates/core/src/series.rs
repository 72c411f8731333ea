//! Truncated power series in `w` over polynomial coefficients, and the
//! expansions of the defining generating functions.

use crate::error::{Error, Result};
use crate::poly::{Assignment, Polynomial};
use crate::rational::Rational;

/// Coefficients `c_0..c_N` of a power series in `w`, cut after `w^N`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Polynomial>,
}

impl TruncatedSeries {
    /// Builds a series from its coefficients; truncation is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Polynomial>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::DegenerateInput("a series needs at least c_0".into()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Series of a polynomial in `w` given low degree first, padded or cut to truncation `n`.
    pub fn from_w_poly(coeffs: &[Polynomial], n: usize) -> Self {
        let mut out = vec![Polynomial::zero(); n + 1];
        for (slot, c) in out.iter_mut().zip(coeffs) {
            *slot = c.clone();
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn from_rationals(values: &[Rational]) -> Result<Self> {
        Self::new(values.iter().cloned().map(Polynomial::constant).collect())
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Polynomial::from(v)).collect())
    }

    pub fn zero(n: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Polynomial::zero(); n + 1],
        }
    }

    pub fn one(n: usize) -> Self {
        let mut s = Self::zero(n);
        s.coeffs[0] = Polynomial::one();
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Polynomial> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&Polynomial> {
        self.coeffs.get(n).ok_or(Error::TruncationExceeded {
            index: n,
            truncation: self.truncation(),
        })
    }

    /// Keeps `c_0..c_n`; `n` may not exceed the current truncation.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.truncation() {
            return Err(Error::TruncationExceeded {
                index: n,
                truncation: self.truncation(),
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        })
    }

    pub fn eval(&self, point: &Assignment) -> Result<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.eval(point)).collect()
    }

    pub fn substitute(&self, point: &Assignment) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.substitute(point)).collect(),
        }
    }

    pub fn scale(&self, k: &Polynomial) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_lengths(self, other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Index of the last nonzero coefficient.
    fn support_end(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }
}

impl std::fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

fn check_lengths(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<()> {
    if a.truncation() != b.truncation() {
        return Err(Error::LengthMismatch {
            left: a.truncation(),
            right: b.truncation(),
        });
    }
    Ok(())
}

/// Cauchy product cut at the common truncation.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    check_lengths(a, b)?;
    let n = a.truncation();
    let mut out = vec![Polynomial::zero(); n + 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs[..=n - i].iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += &(ai * bj);
            }
        }
    }
    Ok(TruncatedSeries { coeffs: out })
}

/// `a * a`, computing each cross product once.
pub fn series_square(a: &TruncatedSeries) -> TruncatedSeries {
    let n = a.truncation();
    let two = Rational::from(2);
    let coeffs = (0..=n)
        .map(|k| {
            let c = &a.coeffs;
            let mut acc = Polynomial::zero();
            for i in 0..k.div_ceil(2) {
                acc += &(&c[i] * &c[k - i]);
            }
            let mut acc = acc.scale(&two);
            if k % 2 == 0 {
                acc += &(&c[k / 2] * &c[k / 2]);
            }
            acc
        })
        .collect();
    TruncatedSeries { coeffs }
}

/// Multiplicative inverse; `a_0` must be a nonzero rational constant.
pub fn series_reciprocal(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    let a0 = a.coeffs[0]
        .as_constant()
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::NonInvertibleSeries(format!("constant term {} is not a unit", a.coeffs[0])))?;
    let inv = a0.recip()?;
    let minus_inv = -&inv;
    let n = a.truncation();
    let top = a.support_end();
    let mut b = Vec::with_capacity(n + 1);
    b.push(Polynomial::constant(inv));
    for k in 1..=n {
        let mut acc = Polynomial::zero();
        for i in 1..=k.min(top) {
            if !a.coeffs[i].is_zero() {
                acc += &(&a.coeffs[i] * &b[k - i]);
            }
        }
        b.push(acc.scale(&minus_inv));
    }
    Ok(TruncatedSeries { coeffs: b })
}

/// `a^beta` for a series with constant term exactly 1, any rational `beta`.
pub fn series_pow_rational(a: &TruncatedSeries, beta: &Rational) -> Result<TruncatedSeries> {
    if !a.coeffs[0].is_one() {
        return Err(Error::NonInvertibleSeries(format!(
            "rational power needs constant term 1, found {}",
            a.coeffs[0]
        )));
    }
    let n = a.truncation();
    let top = a.support_end();
    let mut b = Vec::with_capacity(n + 1);
    b.push(Polynomial::one());
    for k in 0..n {
        // (k+1) b_{k+1} = sum_j a_j (beta j - (k+1-j)) b_{k+1-j}
        let mut acc = Polynomial::zero();
        for j in 1..=(k + 1).min(top) {
            if a.coeffs[j].is_zero() {
                continue;
            }
            let weight = beta * &Rational::from(j) - Rational::from(k + 1 - j);
            if weight.is_zero() {
                continue;
            }
            acc += &(&a.coeffs[j] * &b[k + 1 - j]).scale(&weight);
        }
        let inv = Rational::from(k + 1).recip()?;
        b.push(acc.scale(&inv));
    }
    Ok(TruncatedSeries { coeffs: b })
}

/// Parameters of a generating function
/// `(Q_0 + Q_1 w + ...)^alpha / (1 + P_1 w + ... + P_m w^m)^beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub denom_polys: Vec<Polynomial>,
    /// Empty means the numerator is 1.
    pub numer_polys: Vec<Polynomial>,
    pub alpha: u32,
    pub beta: Rational,
    pub truncation: usize,
}

impl FamilySpec {
    /// Base family with `alpha = beta = 1`.
    pub fn new(denom_polys: Vec<Polynomial>, numer_polys: Vec<Polynomial>, truncation: usize) -> Result<Self> {
        if denom_polys.is_empty() {
            return Err(Error::DegenerateInput("need at least one denominator polynomial P_1".into()));
        }
        Ok(FamilySpec {
            denom_polys,
            numer_polys,
            alpha: 1,
            beta: Rational::one(),
            truncation,
        })
    }

    pub fn with_orders(mut self, alpha: u32, beta: Rational) -> Self {
        self.alpha = alpha;
        self.beta = beta;
        self
    }

    /// Shorthand for integer-valued polynomials.
    pub fn from_integers(p: &[i64], q: &[i64], truncation: usize) -> Result<Self> {
        Self::new(
            p.iter().map(|&v| Polynomial::from(v)).collect(),
            q.iter().map(|&v| Polynomial::from(v)).collect(),
            truncation,
        )
    }

    pub fn order(&self) -> usize {
        self.denom_polys.len()
    }

    /// `1 + P_1 w + ... + P_m w^m`.
    pub fn denominator_series(&self) -> TruncatedSeries {
        let mut w_poly = Vec::with_capacity(self.denom_polys.len() + 1);
        w_poly.push(Polynomial::one());
        w_poly.extend(self.denom_polys.iter().cloned());
        TruncatedSeries::from_w_poly(&w_poly, self.truncation)
    }

    /// `Q_0 + Q_1 w + ...`, or 1 when no numerator is given.
    pub fn numerator_series(&self) -> TruncatedSeries {
        if self.numer_polys.is_empty() {
            TruncatedSeries::one(self.truncation)
        } else {
            TruncatedSeries::from_w_poly(&self.numer_polys, self.truncation)
        }
    }

    /// Copy with every polynomial partially evaluated.
    pub fn substitute(&self, point: &Assignment) -> Self {
        FamilySpec {
            denom_polys: self.denom_polys.iter().map(|p| p.substitute(point)).collect(),
            numer_polys: self.numer_polys.iter().map(|p| p.substitute(point)).collect(),
            ..self.clone()
        }
    }
}

/// `Y_0..Y_N` of `1/(1 + sum P_j w^j)`. Numerator and orders are ignored.
pub fn expand_y(spec: &FamilySpec) -> TruncatedSeries {
    series_reciprocal(&spec.denominator_series()).expect("denominator constant term is 1")
}

/// `S_0..S_N` of `(sum Q_l w^l)/(1 + sum P_j w^j)`. Orders are ignored.
pub fn expand_s(spec: &FamilySpec) -> TruncatedSeries {
    series_mul(&spec.numerator_series(), &expand_y(spec)).expect("same truncation")
}

/// Coefficients of `(1 + sum P_j w^j)^(-beta)`.
pub fn expand_y_higher(spec: &FamilySpec) -> TruncatedSeries {
    series_pow_rational(&spec.denominator_series(), &-&spec.beta).expect("denominator constant term is 1")
}

/// Coefficients of `(sum Q_l w^l)^alpha (1 + sum P_j w^j)^(-beta)`.
pub fn expand_s_higher(spec: &FamilySpec) -> TruncatedSeries {
    let q = spec.numerator_series();
    let mut acc = expand_y_higher(spec);
    for _ in 0..spec.alpha {
        acc = series_mul(&acc, &q).expect("same truncation");
    }
    acc
}

/// `numer / denom` where `denom` has a nonzero rational constant term.
pub fn expand_general_rational(numer: &TruncatedSeries, denom: &TruncatedSeries) -> Result<TruncatedSeries> {
    check_lengths(numer, denom)?;
    series_mul(numer, &series_reciprocal(denom)?)
}
