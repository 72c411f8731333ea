//! Explicit nested sums, convolutions and derivative recurrences for the
//! `Y` and `S` families. Nothing here calls the series engine; tests compare
//! the two.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{x, Polynomial};
use crate::rational::Rational;
use crate::series::TruncatedSeries;

/// Exact `C(n, k)` for nonnegative arguments; `k > n` gives 0.
pub fn binomial(n: i64, k: i64) -> Result<Rational> {
    if n < 0 || k < 0 {
        return Err(Error::DegenerateInput(format!("binomial({n}, {k}) needs nonnegative arguments")));
    }
    Ok(Rational::from(binomial_big(n as u64, k as u64)))
}

pub(crate) fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(alpha, k) = alpha (alpha-1) ... (alpha-k+1) / k!` for rational `alpha`.
pub fn binomial_general(alpha: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (alpha - &Rational::from(i)) * Rational::new(1, i + 1).expect("nonzero");
    }
    acc
}

/// Rising factorial `(beta)_n = beta (beta+1) ... (beta+n-1)`.
pub fn pochhammer(beta: &Rational, n: u64) -> Rational {
    (0..n).map(|i| beta + &Rational::from(i)).product()
}

/// Walks exponent vectors `(n_1, ..., n_m)` with `n_1 + 2 n_2 + ... + m n_m = n`.
///
/// Levels `j = 2..m` are chosen in order, each bounded by `floor(r/j)` where
/// `r` is what the lower levels have not used yet; `n_1` takes the rest.
#[derive(Debug, Clone)]
pub struct NestedSumIndex {
    n: u64,
    /// `current[j-2]` is `n_j`.
    current: Vec<u64>,
    done: bool,
}

impl NestedSumIndex {
    pub fn new(m: usize, n: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::OrderTooSmall);
        }
        Ok(NestedSumIndex {
            n,
            current: vec![0; m - 1],
            done: false,
        })
    }

    pub fn order(&self) -> usize {
        self.current.len() + 1
    }

    /// Residual before level `j` (so `residual(2) = n`).
    fn residual(&self, j: usize) -> u64 {
        let used: u64 = (2..j).map(|i| i as u64 * self.current[i - 2]).sum();
        self.n - used
    }

    /// Upper limits `floor(r_{j-1}/j)` at the current position, for `j = 2..m`.
    pub fn bounds(&self) -> Vec<u64> {
        (2..=self.order()).map(|j| self.residual(j) / j as u64).collect()
    }

    fn full_vector(&self) -> Vec<u64> {
        let m = self.order();
        let mut out = Vec::with_capacity(m);
        out.push(self.residual(m + 1));
        out.extend_from_slice(&self.current);
        out
    }
}

impl Iterator for NestedSumIndex {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let item = self.full_vector();
        // odometer: bump the deepest level that still has room
        let m = self.order();
        let mut j = m;
        loop {
            if j < 2 {
                self.done = true;
                break;
            }
            if (self.current[j - 2] + 1) * j as u64 <= self.residual(j) {
                self.current[j - 2] += 1;
                for later in &mut self.current[j - 1..] {
                    *later = 0;
                }
                break;
            }
            j -= 1;
        }
        Some(item)
    }
}

/// `prod_{d=2}^{m} C(n_1 + ... + n_d, n_d)`: the multinomial count of the vector.
pub fn nested_weight(e: &[u64]) -> BigInt {
    let mut partial = e[0];
    let mut acc = BigInt::one();
    for &ed in &e[1..] {
        partial += ed;
        acc *= binomial_big(partial, ed);
    }
    acc
}

fn signed(weight: BigInt, negative: bool) -> Rational {
    let r = Rational::from(weight);
    if negative {
        -r
    } else {
        r
    }
}

/// Single-polynomial case: `(-P_1)^n`.
pub fn explicit_y_m1(p1: &Polynomial, n: u32) -> Polynomial {
    (-p1).pow(n)
}

/// Two-term explicit sum over `n_2 = 0..floor(n/2)`.
pub fn explicit_y_m2(p1: &Polynomial, p2: &Polynomial, n: u64) -> Polynomial {
    let mut acc = Polynomial::zero();
    for n2 in 0..=n / 2 {
        let c = signed(binomial_big(n - n2, n2), (n - n2) % 2 == 1);
        acc += &(&p1.pow((n - 2 * n2) as u32) * &p2.pow(n2 as u32)).scale(&c);
    }
    acc
}

/// Three-term explicit double sum.
///
/// The summand is the printed one in the outer/inner indices `(n_2, n_3)`.
/// The ranges run over `n_2 <= n` and `n_3 <= floor(n_2/2)`, dropping
/// terms whose `P_1` exponent is negative; tighter ranges miss terms such as
/// the lone `P_3` contribution at `n = 3`.
pub fn explicit_y_m3(p1: &Polynomial, p2: &Polynomial, p3: &Polynomial, n: u64) -> Polynomial {
    m3_sum(p1, p2, p3, n, n, 2)
}

/// The same summand over `n_2 <= floor(n/2)`, `n_3 <= floor(n_2/3)`.
/// Kept only to report that these ranges lose terms.
pub fn explicit_y_m3_printed_bounds(p1: &Polynomial, p2: &Polynomial, p3: &Polynomial, n: u64) -> Polynomial {
    m3_sum(p1, p2, p3, n, n / 2, 3)
}

fn m3_sum(p1: &Polynomial, p2: &Polynomial, p3: &Polynomial, n: u64, n2_top: u64, n3_div: u64) -> Polynomial {
    let mut acc = Polynomial::zero();
    for n2 in 0..=n2_top {
        for n3 in 0..=n2 / n3_div {
            if n + n3 < 2 * n2 {
                continue;
            }
            let e1 = n + n3 - 2 * n2;
            let e2 = n2 - 2 * n3;
            let w = binomial_big(n - n2 - n3, e2) * binomial_big(n - n2, n3);
            if w.is_zero() {
                continue;
            }
            let c = signed(w, (n - n2) % 2 == 1);
            let mono = &(&p1.pow(e1 as u32) * &p2.pow(e2 as u32)) * &p3.pow(n3 as u32);
            acc += &mono.scale(&c);
        }
    }
    acc
}

/// General explicit sum over [`NestedSumIndex`] for `m >= 2` polynomials.
pub fn explicit_y_general(p: &[Polynomial], n: u64) -> Result<Polynomial> {
    let m = p.len();
    let index = NestedSumIndex::new(m, n)?;
    // cached powers P_v^e for e <= n/v
    let pows: Vec<Vec<Polynomial>> = p
        .iter()
        .enumerate()
        .map(|(i, pv)| {
            let top = n / (i as u64 + 1);
            let mut v = vec![Polynomial::one()];
            for _ in 0..top {
                let next = v.last().unwrap() * pv;
                v.push(next);
            }
            v
        })
        .collect();
    let mut acc = Polynomial::zero();
    for e in index {
        if p.iter().zip(&e).any(|(pv, &ev)| ev > 0 && pv.is_zero()) {
            continue;
        }
        let total: u64 = e.iter().sum();
        let c = signed(nested_weight(&e), total % 2 == 1);
        let mut term = Polynomial::constant(c);
        for (v, &ev) in e.iter().enumerate() {
            if ev > 0 {
                term = &term * &pows[v][ev as usize];
            }
        }
        acc += &term;
    }
    Ok(acc)
}

/// `Y_n(x, x^2, ..., x^m)` in `x_1`, from the nested sum with exponent `sum j n_j`.
pub fn explicit_y_powers_of_x(m: usize, n: u64) -> Result<Polynomial> {
    let mut acc = Polynomial::zero();
    for e in NestedSumIndex::new(m, n)? {
        let total: u64 = e.iter().sum();
        let deg: u64 = e.iter().enumerate().map(|(i, &ev)| (i as u64 + 1) * ev).sum();
        acc += &x(1).pow(deg as u32).scale(&signed(nested_weight(&e), total % 2 == 1));
    }
    Ok(acc)
}

/// `Y_n(x, x, ..., x)` in `x_1`, with exponent `sum n_j`.
pub fn explicit_y_constant_x(m: usize, n: u64) -> Result<Polynomial> {
    let mut acc = Polynomial::zero();
    for e in NestedSumIndex::new(m, n)? {
        let total: u64 = e.iter().sum();
        acc += &x(1).pow(total as u32).scale(&signed(nested_weight(&e), total % 2 == 1));
    }
    Ok(acc)
}

/// `Y_n(1, ..., 1)`.
pub fn explicit_y_all_ones(m: usize, n: u64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for e in NestedSumIndex::new(m, n)? {
        let total: u64 = e.iter().sum();
        acc += &signed(nested_weight(&e), total % 2 == 1);
    }
    Ok(acc)
}

/// `Y_n(-1, ..., -1)`: every term of the nested sum is positive.
pub fn explicit_y_all_minus_ones(m: usize, n: u64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for e in NestedSumIndex::new(m, n)? {
        acc += &Rational::from(nested_weight(&e));
    }
    Ok(acc)
}

/// Nested sum with sign `(-1)^(sum n_j + sum j n_j)`, i.e. the powers-of-`x`
/// form at `x = -1`. This is `Y_n(-1, 1, -1, 1, ...)`, not `Y_n(-1, ..., -1)`;
/// the two agree only for `n <= 1`.
pub fn explicit_y_alternating(m: usize, n: u64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for e in NestedSumIndex::new(m, n)? {
        let total: u64 = e.iter().sum();
        let weighted: u64 = e.iter().enumerate().map(|(i, &ev)| (i as u64 + 1) * ev).sum();
        acc += &signed(nested_weight(&e), (total + weighted) % 2 == 1);
    }
    Ok(acc)
}

/// Fibonacci numbers of order `m`: `F_{0,m} = 1`, `F_{n,m} = sum_{v=1}^{min(n,m)} F_{n-v,m}`.
pub fn fibonacci_order_m(n: usize, m: usize) -> BigInt {
    let mut f: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=n {
        let s = (1..=k.min(m)).map(|v| &f[k - v]).sum();
        f.push(s);
    }
    f.swap_remove(n)
}

/// `sum_{j=0}^{min(k,n)} Q_j Y_{n-j}`.
pub fn convolution_s_from_y(yseq: &TruncatedSeries, q: &[Polynomial], n: usize) -> Result<Polynomial> {
    let q_one = [Polynomial::one()];
    let q = if q.is_empty() { &q_one[..] } else { q };
    yseq.coeff(n)?;
    let mut acc = Polynomial::zero();
    for (j, qj) in q.iter().enumerate().take(n + 1) {
        acc += &(qj * &yseq.coeffs()[n - j]);
    }
    Ok(acc)
}

/// Same convolution against `Y^{(beta)}`; gives `S_n^{(1, beta)}`.
pub fn convolution_s_higher(ybeta: &TruncatedSeries, q: &[Polynomial], n: usize) -> Result<Polynomial> {
    convolution_s_from_y(ybeta, q, n)
}

/// `Y_{n+1} = -(1/(n+1)) sum_{j=1}^{min(m,n+1)} j P_j Y^{(2)}_{n-j+1}`.
pub fn recurrence_y_next(p: &[Polynomial], ysq: &[Polynomial], n: usize) -> Result<Polynomial> {
    if ysq.len() <= n {
        return Err(Error::TruncationExceeded {
            index: n,
            truncation: ysq.len().saturating_sub(1),
        });
    }
    let mut acc = Polynomial::zero();
    for (j, pj) in p.iter().enumerate().take(n + 1) {
        let j = j + 1;
        acc += &(pj * &ysq[n + 1 - j]).scale(&Rational::from(j));
    }
    Ok(acc.scale(&-Rational::new(1, n as i64 + 1)?))
}

/// `Y_0..Y_N` built only from [`recurrence_y_next`], carrying `Y^{(2)}` along.
pub fn recurrence_y_sequence(p: &[Polynomial], truncation: usize) -> Vec<Polynomial> {
    let mut y = vec![Polynomial::one()];
    let mut y2: Vec<Polynomial> = Vec::new();
    for n in 0..truncation {
        let mut sq: Polynomial = (0..n.div_ceil(2)).map(|i| &y[i] * &y[n - i]).sum();
        sq = sq.scale(&Rational::from(2));
        if n % 2 == 0 {
            sq += &(&y[n / 2] * &y[n / 2]);
        }
        y2.push(sq);
        y.push(recurrence_y_next(p, &y2, n).expect("y2 has n+1 entries"));
    }
    y
}

fn y_upto(p: &[Polynomial], yseq: &TruncatedSeries, n: usize) -> Result<Vec<Polynomial>> {
    let have = yseq.coeffs();
    if have.len() > n + 1 {
        return Ok(have[..=n + 1].to_vec());
    }
    if have.len() <= n {
        return Err(Error::TruncationExceeded {
            index: n,
            truncation: yseq.truncation(),
        });
    }
    // one coefficient short: extend with the Y recurrence
    let mut y = have.to_vec();
    let y2: Vec<Polynomial> = (0..=n)
        .map(|k| (0..=k).map(|i| &y[i] * &y[k - i]).sum())
        .collect();
    y.push(recurrence_y_next(p, &y2, n)?);
    Ok(y)
}

fn recurrence_s_core(p: &[Polynomial], q: &[Polynomial], yseq: &TruncatedSeries, n: usize, sign: i64) -> Result<Polynomial> {
    let y = y_upto(p, yseq, n)?;
    let q_one = [Polynomial::one()];
    let q = if q.is_empty() { &q_one[..] } else { q };
    let n1 = n + 1;
    let mut first = Polynomial::zero();
    let mut second = Polynomial::zero();
    for (l, ql) in q.iter().enumerate().take(n1 + 1) {
        let ql_y = ql * &y[n1 - l];
        if l >= 1 {
            first += &ql_y.scale(&Rational::from(l));
        }
        second += &ql_y.scale(&Rational::from(n1 - l));
    }
    let total = &first + &second.scale(&Rational::from(sign));
    Ok(total.scale(&Rational::new(1, n1 as i64)?))
}

/// `S_{n+1}` from `G' = Q'F + QF'`:
/// `(n+1) S_{n+1} = sum_l l Q_l Y_{n+1-l} + sum_l (n+1-l) Q_l Y_{n+1-l}`.
///
/// `yseq` must reach index `n`; a missing `Y_{n+1}` is filled in from `P`.
pub fn recurrence_s_next(p: &[Polynomial], q: &[Polynomial], yseq: &TruncatedSeries, n: usize) -> Result<Polynomial> {
    recurrence_s_core(p, q, yseq, n, 1)
}

/// The derivative recurrence with a minus sign on the `Q F'` sum.
/// Kept only to report that it disagrees with the convolution.
pub fn recurrence_s_next_as_printed(
    p: &[Polynomial],
    q: &[Polynomial],
    yseq: &TruncatedSeries,
    n: usize,
) -> Result<Polynomial> {
    recurrence_s_core(p, q, yseq, n, -1)
}

/// `Y^{(beta+gamma)}_n = sum_{j=0}^{n} Y^{(beta)}_j Y^{(gamma)}_{n-j}`.
pub fn order_addition(ybeta: &TruncatedSeries, ygamma: &TruncatedSeries, n: usize) -> Result<Polynomial> {
    ybeta.coeff(n)?;
    ygamma.coeff(n)?;
    Ok((0..=n).map(|j| &ybeta.coeffs()[j] * &ygamma.coeffs()[n - j]).sum())
}

/// The order-addition sum with `Y^{(beta)}_n` frozen inside, i.e.
/// `Y^{(beta)}_n * sum_j Y^{(gamma)}_{n-j}`.
pub fn order_addition_as_printed(ybeta: &TruncatedSeries, ygamma: &TruncatedSeries, n: usize) -> Result<Polynomial> {
    ybeta.coeff(n)?;
    ygamma.coeff(n)?;
    Ok((0..=n).map(|j| &ybeta.coeffs()[n] * &ygamma.coeffs()[n - j]).sum())
}

/// Coefficient of `t^j` in `1/(1 - x^k t - y^m t^(m+n))`, with `x = x1`, `y = x2`:
/// `sum_c C(j - c(m+n-1), c) y^(mc) x^(k(j - c(m+n)))`.
pub fn explicit_twovar_g(k: u32, m: u32, n: u32, j: u32) -> Result<Polynomial> {
    explicit_twovar_g_higher(1, k, m, n, j)
}

/// Order-`h` version, the coefficient of `t^j` in `(1 - x^k t - y^m t^(m+n))^(-h)`.
pub fn explicit_twovar_g_higher(h: u32, k: u32, m: u32, n: u32, j: u32) -> Result<Polynomial> {
    let s = m + n;
    if s == 0 {
        return Err(Error::DegenerateInput("m + n = 0 leaves no power of t in the y term".into()));
    }
    if h == 0 {
        return Ok(if j == 0 { Polynomial::one() } else { Polynomial::zero() });
    }
    let mut acc = Polynomial::zero();
    for c in 0..=j / s {
        let parts = (j - c * s + c) as u64;
        let count = binomial_big(parts + h as u64 - 1, h as u64 - 1) * binomial_big(parts, c as u64);
        let mono = &x(2).pow(m * c) * &x(1).pow(k * (j - c * s));
        acc += &mono.scale(&Rational::from(count));
    }
    Ok(acc)
}

/// Denominator list `P` with `1 + sum P_i w^i = 1 - x^k w - y^m w^(m+n)`.
pub fn twovar_denominators(k: u32, m: u32, n: u32) -> Result<Vec<Polynomial>> {
    let s = (m + n) as usize;
    if s == 0 {
        return Err(Error::DegenerateInput("m + n = 0 leaves no power of t in the y term".into()));
    }
    let mut p = vec![Polynomial::zero(); s.max(1)];
    p[0] = -x(1).pow(k);
    p[s - 1] -= &x(2).pow(m);
    Ok(p)
}
