//! Euler (binomial) transform of series, Lambert and reciprocal-Fibonacci sums.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::closed_forms::binomial_big;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::series::{expand_s, FamilySpec, TruncatedSeries};
use crate::surd::SurdElement;

/// `T^theta(u)_j = sum_{v=0}^{j} C(j, v) theta^(j-v) u_v`.
pub fn euler_transform(u: &TruncatedSeries, theta: &Polynomial) -> TruncatedSeries {
    let n = u.truncation();
    let mut theta_pows = vec![Polynomial::one()];
    for _ in 0..n {
        let next = theta_pows.last().unwrap() * theta;
        theta_pows.push(next);
    }
    let coeffs = (0..=n)
        .map(|j| {
            let mut acc = Polynomial::zero();
            for (v, uv) in u.coeffs()[..=j].iter().enumerate() {
                if uv.is_zero() || theta_pows[j - v].is_zero() {
                    continue;
                }
                let c = Rational::from(binomial_big(j as u64, v as u64));
                acc += &(&theta_pows[j - v] * uv).scale(&c);
            }
            acc
        })
        .collect();
    TruncatedSeries::new(coeffs).expect("nonempty")
}

/// `T^(-theta)`, the inverse of [`euler_transform`].
pub fn euler_inverse(u: &TruncatedSeries, theta: &Polynomial) -> TruncatedSeries {
    euler_transform(u, &-theta)
}

/// Coefficients of `F_U(√2 x w, (1+3x)/(2√2 x))` at a rational `x != 0`, i.e.
/// `(√2 x)^n U_n((1+3x)/(2√2 x))`, computed in `Q(√2)`.
pub fn scaled_chebyshev_u(x: &Rational, n: usize) -> Result<Vec<SurdElement>> {
    if x.is_zero() {
        return Err(Error::DegenerateInput("x = 0 makes the Chebyshev argument undefined".into()));
    }
    let two = Rational::from(2);
    let s2 = SurdElement::sqrt(&two)?;
    // z = (1+3x)/(2√2 x) = (1+3x)√2/(4x)
    let z = s2.scale(&(&(Rational::one() + Rational::from(3) * x) * &(Rational::from(4) * x).recip()?));
    let two_z = z.scale(&two);
    let scale = s2.scale(x);
    let mut u = vec![SurdElement::from_rational(Rational::one(), &two)?, two_z.clone()];
    while u.len() <= n {
        let k = u.len();
        let next = two_z.checked_mul(&u[k - 1])?.checked_sub(&u[k - 2])?;
        u.push(next);
    }
    u.truncate(n + 1);
    let mut out = Vec::with_capacity(n + 1);
    let mut p = SurdElement::from_rational(Rational::one(), &two)?;
    for un in &u {
        out.push(un.checked_mul(&p)?);
        p = p.checked_mul(&scale)?;
    }
    Ok(out)
}

/// Truncated numeric sum with its stopping data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericSum {
    pub value: f64,
    pub terms_used: usize,
    pub last_term_magnitude: f64,
}

const MAX_TERMS: usize = 100_000;

fn check_tolerance(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}

/// Tail of `sum_{k>j} r^k/(1-r^k)` is at most `r^(j+1) / ((1-r)(1-r^(j+1)))`.
fn lambert_tail_bound(r: f64, j: usize) -> f64 {
    let rj1 = r.powi(j as i32 + 1);
    rj1 / ((1.0 - r) * (1.0 - rj1))
}

/// `L(x) = sum_{j>=1} x^j/(1-x^j)` in floating point.
pub fn lambert_partial(x: f64, tol: f64) -> Result<NumericSum> {
    check_tolerance(tol)?;
    if x.is_nan() || x.abs() >= 1.0 {
        return Err(Error::DivergentArgument(format!("Lambert series needs |x| < 1, got {x}")));
    }
    let r = x.abs();
    let mut sum = 0.0;
    let mut power = 1.0;
    let mut prev = f64::INFINITY;
    for j in 1..=MAX_TERMS {
        power *= x;
        let term = power / (1.0 - power);
        sum += term;
        let mag = term.abs();
        if mag < tol && mag <= prev && lambert_tail_bound(r, j) < tol {
            return Ok(NumericSum {
                value: sum,
                terms_used: j,
                last_term_magnitude: mag,
            });
        }
        prev = mag;
    }
    Err(Error::DivergentArgument(format!("no convergence within {MAX_TERMS} terms")))
}

/// Lambert series at a quadratic-surd point; terms are summed exactly and only
/// the final value is rounded.
pub fn lambert_partial_surd(x: &SurdElement, tol: f64) -> Result<NumericSum> {
    check_tolerance(tol)?;
    let xf = x.to_f64()?;
    if xf.is_nan() || xf.abs() >= 1.0 || abs_cmp_one(x) >= 0 {
        return Err(Error::DivergentArgument(format!("Lambert series needs |x| < 1, got {x}")));
    }
    let r = xf.abs();
    let one = SurdElement::from_rational(Rational::one(), x.radicand())?;
    let mut sum = SurdElement::from_rational(Rational::zero(), x.radicand())?;
    let mut power = one.clone();
    let mut prev = f64::INFINITY;
    for j in 1..=MAX_TERMS {
        power = power.checked_mul(x)?;
        let term = power.checked_div(&one.checked_sub(&power)?)?;
        sum = sum.checked_add(&term)?;
        let mag = term.to_f64()?.abs();
        if mag < tol && mag <= prev && lambert_tail_bound(r, j) < tol {
            return Ok(NumericSum {
                value: sum.to_f64()?,
                terms_used: j,
                last_term_magnitude: mag,
            });
        }
        prev = mag;
    }
    Err(Error::DivergentArgument(format!("no convergence within {MAX_TERMS} terms")))
}

/// `F_0..F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci_numbers(n: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::zero(), BigInt::one()];
    while f.len() <= n {
        let k = f.len();
        let next = &f[k - 1] + &f[k - 2];
        f.push(next);
    }
    f.truncate(n + 1);
    f
}

/// `L_0..L_n` with `L_0 = 2`, `L_1 = 1`.
pub fn lucas_numbers(n: usize) -> Vec<BigInt> {
    let mut l = vec![BigInt::from(2), BigInt::one()];
    while l.len() <= n {
        let k = l.len();
        let next = &l[k - 1] + &l[k - 2];
        l.push(next);
    }
    l.truncate(n + 1);
    l
}

fn big_ratio(num: &BigInt, den: &BigInt) -> f64 {
    // drop low bits so both sides fit in an f64 exponent
    let shift = (num.bits().max(den.bits()) as i64 - 1000).max(0) as usize;
    let n = (num >> shift).to_f64().unwrap_or(f64::INFINITY);
    let d = (den >> shift).to_f64().unwrap_or(f64::INFINITY);
    n / d
}

/// Sum of `coeff(j) w^j` with stopping rule shared by the Fibonacci-type series.
fn ratio_series(w: f64, tol: f64, mut term_at: impl FnMut(usize) -> f64) -> Result<NumericSum> {
    let mut sum = 0.0;
    let mut prev = f64::INFINITY;
    let mut growing = 0usize;
    for j in 1..=MAX_TERMS {
        let term = term_at(j) * w.powi(j as i32);
        if !term.is_finite() {
            return Err(Error::DivergentArgument("terms overflowed".into()));
        }
        sum += term;
        let mag = term.abs();
        if mag > prev && j > 8 {
            growing += 1;
            if growing > 8 {
                return Err(Error::DivergentArgument("terms keep growing".into()));
            }
        } else {
            growing = 0;
        }
        let rho = if prev.is_finite() && prev > 0.0 { mag / prev } else { 1.0 };
        let tail = if rho < 1.0 { mag * rho / (1.0 - rho) } else { f64::INFINITY };
        if mag < tol && mag <= prev && tail < tol {
            return Ok(NumericSum {
                value: sum,
                terms_used: j,
                last_term_magnitude: mag,
            });
        }
        prev = mag;
    }
    Err(Error::DivergentArgument(format!("no convergence within {MAX_TERMS} terms")))
}

fn phi() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// `R_m(w) = sum_{j>=1} w^j / F_{mj}`.
pub fn reciprocal_fib_partial(m: usize, w: f64, tol: f64) -> Result<NumericSum> {
    check_tolerance(tol)?;
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if w.is_nan() || w.abs() >= phi().powi(m as i32) {
        return Err(Error::DivergentArgument(format!("R_{m}(w) needs |w| < phi^{m}, got {w}")));
    }
    if w == 0.0 {
        return Ok(NumericSum {
            value: 0.0,
            terms_used: 0,
            last_term_magnitude: 0.0,
        });
    }
    let mut fib = fibonacci_numbers(m * 64);
    ratio_series(w, tol, |j| {
        if fib.len() <= m * j {
            fib = fibonacci_numbers(2 * m * j);
        }
        big_ratio(&BigInt::one(), &fib[m * j])
    })
}

/// `sum_{j>=1} L_{2j} w^j / F_{4j}`.
pub fn lucas_over_fib4_partial(w: f64, tol: f64) -> Result<NumericSum> {
    check_tolerance(tol)?;
    if w.is_nan() || w.abs() >= phi().powi(2) {
        return Err(Error::DivergentArgument(format!("series needs |w| < phi^2, got {w}")));
    }
    let mut fib = fibonacci_numbers(256);
    let mut luc = lucas_numbers(128);
    ratio_series(w, tol, |j| {
        if fib.len() <= 4 * j {
            fib = fibonacci_numbers(8 * j);
            luc = lucas_numbers(4 * j);
        }
        big_ratio(&luc[2 * j], &fib[4 * j])
    })
}

/// One index of the `F_{2j}/F_j` check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2jRow {
    pub j: usize,
    /// `S_j(-1,-1;1,2)` from the series engine.
    pub s_j: Rational,
    /// `F_{2j}/F_j`, with `F_n = S_n(-1,-1;0,1)`.
    pub ratio: Rational,
    /// `F_{2(j+1)}/F_{j+1}`.
    pub shifted_ratio: Rational,
}

impl F2jRow {
    pub fn printed_holds(&self) -> bool {
        self.s_j == self.ratio
    }

    pub fn shifted_holds(&self) -> bool {
        self.s_j == self.shifted_ratio
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2jReport {
    pub rows: Vec<F2jRow>,
}

impl F2jReport {
    pub fn printed_holds_everywhere(&self) -> bool {
        self.rows.iter().all(F2jRow::printed_holds)
    }

    pub fn shifted_holds_everywhere(&self) -> bool {
        self.rows.iter().all(F2jRow::shifted_holds)
    }
}

/// Compares `S_j(-1,-1;1,2)` with `F_{2j}/F_j` for `1 <= j <= jmax`, exactly.
pub fn verify_f2j_over_fj(jmax: usize) -> Result<F2jReport> {
    if jmax == 0 {
        return Err(Error::InvalidParameter("jmax must be at least 1".into()));
    }
    let n = 2 * (jmax + 1);
    let fib = expand_s(&FamilySpec::from_integers(&[-1, -1], &[0, 1], n)?);
    let f: Vec<Rational> = fib.coeffs().iter().map(|c| c.as_constant().expect("numeric")).collect();
    let s = expand_s(&FamilySpec::from_integers(&[-1, -1], &[1, 2], jmax)?);
    let rows = (1..=jmax)
        .map(|j| {
            Ok(F2jRow {
                j,
                s_j: s.coeffs()[j].as_constant().expect("numeric"),
                ratio: f[2 * j].checked_div(&f[j])?,
                shifted_ratio: f[2 * j + 2].checked_div(&f[j + 1])?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(F2jReport { rows })
}

/// Sign of `|x| - 1`, exactly.
fn abs_cmp_one(x: &SurdElement) -> i32 {
    let abs = if x.signum() < 0 { x.neg() } else { x.clone() };
    abs.add_rational(&-Rational::one()).signum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::x;
    use crate::rat;
    use crate::series::{expand_y, FamilySpec};
    use proptest::prelude::*;

    fn c(v: i64) -> Polynomial {
        Polynomial::from(v)
    }

    fn golden_a() -> SurdElement {
        // (3 - √5)/2
        SurdElement::new(rat!(3, 2), rat!(-1, 2), rat!(5)).unwrap()
    }

    fn golden_b() -> SurdElement {
        // (7 - 3√5)/2
        SurdElement::new(rat!(7, 2), rat!(-3, 2), rat!(5)).unwrap()
    }

    #[test]
    fn euler_examples() {
        let ones = TruncatedSeries::from_integers(&[1; 9]).unwrap();
        let t = euler_transform(&ones, &c(1));
        let pows: Vec<i64> = (0..9).map(|j| 1 << j).collect();
        assert_eq!(t, TruncatedSeries::from_integers(&pows).unwrap());
        let s = TruncatedSeries::from_w_poly(&[x(1), c(3), &x(2) * &x(1)], 5);
        assert_eq!(euler_transform(&s, &c(0)), s);
        assert_eq!(euler_inverse(&s, &c(0)), s);
    }

    fn antichain_spec(n: usize) -> FamilySpec {
        FamilySpec::new(vec![&c(-1) - &x(1), -x(1)], vec![c(1), x(1)], n).unwrap()
    }

    fn ac4_target(n: usize) -> FamilySpec {
        FamilySpec::new(vec![&c(-1) - &x(1).scale(&rat!(3)), x(1).pow(2).scale(&rat!(2))], vec![], n).unwrap()
    }

    #[test]
    fn antichain_euler_identity() {
        let u = expand_s(&antichain_spec(16));
        let t = euler_transform(&u, &x(1));
        assert_eq!(t, expand_y(&ac4_target(16)));
        assert_eq!(euler_inverse(&t, &x(1)), u);
    }

    #[test]
    fn chebyshev_form_of_identity() {
        for xv in [rat!(1), rat!(2), rat!(-1, 3), rat!(5, 7)] {
            let y = expand_y(&ac4_target(12));
            let at = [(1, xv.clone())].into_iter().collect();
            let vals = y.eval(&at).unwrap();
            let surd = scaled_chebyshev_u(&xv, 12).unwrap();
            for (a, b) in vals.iter().zip(&surd) {
                assert_eq!(b.as_rational(), Some(a));
            }
        }
        assert!(matches!(scaled_chebyshev_u(&rat!(0), 3), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn lambert_examples() {
        let l = lambert_partial(0.5, 1e-12).unwrap();
        assert!((l.value - 1.606_695_152_415_291_7).abs() < 1e-10, "{}", l.value);
        assert!(l.last_term_magnitude < 1e-12);
        assert_eq!(lambert_partial(0.0, 1e-12).unwrap().value, 0.0);
        assert!(matches!(lambert_partial(1.0, 1e-9), Err(Error::DivergentArgument(_))));
        assert!(matches!(lambert_partial(-1.5, 1e-9), Err(Error::DivergentArgument(_))));
        let half = SurdElement::from_rational(rat!(1, 2), &rat!(5)).unwrap();
        let ls = lambert_partial_surd(&half, 1e-13).unwrap();
        assert!((ls.value - l.value).abs() < 1e-12);
        let big = SurdElement::new(rat!(0), rat!(1), rat!(5)).unwrap();
        assert!(matches!(lambert_partial_surd(&big, 1e-9), Err(Error::DivergentArgument(_))));
    }

    #[test]
    fn reciprocal_fibonacci_examples() {
        let r = reciprocal_fib_partial(2, 1.0, 1e-13).unwrap();
        let direct: f64 = fibonacci_numbers(120).iter().skip(2).step_by(2).map(|f| 1.0 / f.to_f64().unwrap()).sum();
        assert!((r.value - direct).abs() < 1e-12);
        assert!((r.value - 1.535_370_508_836_252_4).abs() < 1e-12);
        assert_eq!(reciprocal_fib_partial(1, 0.0, 1e-9).unwrap().value, 0.0);
        assert!(matches!(reciprocal_fib_partial(1, 1.7, 1e-9), Err(Error::DivergentArgument(_))));
        // F_4j = F_2j L_2j, so the Lucas-weighted series equals R_2
        let lw = lucas_over_fib4_partial(1.0, 1e-13).unwrap();
        assert!((lw.value - r.value).abs() < 1e-12);
    }

    #[test]
    fn lambert_fibonacci_relation_needs_sqrt5() {
        let la = lambert_partial_surd(&golden_a(), 1e-14).unwrap().value;
        let lb = lambert_partial_surd(&golden_b(), 1e-14).unwrap().value;
        let r2 = reciprocal_fib_partial(2, 1.0, 1e-14).unwrap().value;
        assert!((5f64.sqrt() * (la - lb) - r2).abs() < 1e-12);
        assert!((la - lb - r2).abs() > 0.5);
    }

    #[test]
    fn f2j_report() {
        let rep = verify_f2j_over_fj(10).unwrap();
        assert_eq!(rep.rows[0].s_j, rat!(3));
        assert_eq!(rep.rows[0].ratio, rat!(1));
        assert!(!rep.printed_holds_everywhere());
        assert!(rep.shifted_holds_everywhere());
        let s: Vec<Rational> = rep.rows.iter().map(|r| r.s_j.clone()).collect();
        assert_eq!(s[..5], [rat!(3), rat!(4), rat!(7), rat!(11), rat!(18)]);
    }

    fn arb_series() -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-5i64..=5, -3i64..=3), 17).prop_map(|cs| {
            TruncatedSeries::new(cs.into_iter().map(|(a, b)| &Polynomial::from(a) + &x(1).scale(&Rational::from(b))).collect())
                .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn euler_round_trip(u in arb_series(), p in -6i64..=6, q in 1i64..=4) {
            let theta = Polynomial::constant(rat!(p, q));
            prop_assert_eq!(euler_inverse(&euler_transform(&u, &theta), &theta), u.clone());
            let theta = &x(2) + &theta;
            prop_assert_eq!(euler_inverse(&euler_transform(&u, &theta), &theta), u);
        }

        #[test]
        fn lambert_stops_below_tolerance(xv in -0.95f64..0.95, e in 6i32..13) {
            let tol = 10f64.powi(-e);
            let s = lambert_partial(xv, tol).unwrap();
            prop_assert!(s.last_term_magnitude < tol);
        }
    }
}
