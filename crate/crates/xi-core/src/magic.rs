//! The function `magic(nu,k,beta,eps)`, its generating functions over parity
//! intervals, and the identities it satisfies.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{binom2, qbinom, qnum, Laurent};

fn q(n: i64) -> Laurent {
    Laurent::q_pow(n)
}

pub fn check_eps(eps: i64) -> Result<()> {
    match eps {
        -1..=1 => Ok(()),
        _ => Err(Error::InvalidEps(eps)),
    }
}

/// `{k-1 brack beta-j} {nu-k-1 brack j} q^{j(-3nu+2k-2eps)}`.
pub fn term(nu: i64, k: i64, beta: i64, eps: i64, j: i64) -> Result<Laurent> {
    check_eps(eps)?;
    if j < 0 || j > beta {
        return Ok(Laurent::zero());
    }
    Ok(qbinom(k - 1, beta - j) * qbinom(nu - k - 1, j) * q(j * (-3 * nu + 2 * k - 2 * eps)))
}

pub fn magic(nu: i64, k: i64, beta: i64, eps: i64) -> Result<Laurent> {
    check_eps(eps)?;
    (0..=beta).map(|j| term(nu, k, beta, eps, j)).sum()
}

/// Integers from `lo` to `hi` of the parity of `lo`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParityInterval {
    pub lo: i64,
    pub hi: i64,
}

impl ParityInterval {
    pub fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            ((self.hi - self.lo) / 2 + 1) as usize
        }
    }

    pub fn contains(&self, r: i64) -> bool {
        !self.is_empty() && r >= self.lo && r <= self.hi && (r - self.lo) % 2 == 0
    }

    pub fn members(&self) -> impl Iterator<Item = i64> {
        let lo = self.lo;
        (0..self.len() as i64).map(move |t| lo + 2 * t)
    }
}

impl fmt::Display for ParityInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}]]", self.lo, self.hi)
    }
}

/// Which of the two generating-function windows a `k` falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Window {
    Low,
    High,
}

pub fn window(nu: i64, k: i64, eps: i64) -> Option<Window> {
    if (1..=nu - 1).contains(&k) {
        Some(Window::Low)
    } else if (nu + 1 + eps..=2 * nu - 1 + eps).contains(&k) {
        Some(Window::High)
    } else {
        None
    }
}

pub fn gen_interval_x(nu: i64, k: i64, eps: i64) -> Result<[ParityInterval; 2]> {
    check_eps(eps)?;
    if window(nu, k, eps) != Some(Window::Low) {
        return Err(Error::OutOfRange(format!("X needs 1 <= k <= nu-1, got nu={nu}, k={k}")));
    }
    Ok([
        ParityInterval::new(2 - k, k - 2),
        ParityInterval::new(3 * k - 4 * nu - 2 * eps + 2, k - 2 * nu - 2 * eps - 2),
    ])
}

pub fn gen_interval_xprime(nu: i64, k: i64, eps: i64) -> Result<[ParityInterval; 2]> {
    check_eps(eps)?;
    if window(nu, k, eps) != Some(Window::High) {
        return Err(Error::OutOfRange(format!(
            "X' needs nu+1+eps <= k <= 2nu-1+eps, got nu={nu}, k={k}, eps={eps}"
        )));
    }
    Ok([
        ParityInterval::new(2 - k, k - 2 * nu - 2 * eps - 2),
        ParityInterval::new(3 * k - 4 * nu - 2 * eps + 2, k - 2),
    ])
}

/// `X'` as an outer interval minus a removed one.
pub fn gen_interval_xprime_difference(
    nu: i64,
    k: i64,
    eps: i64,
) -> Result<(ParityInterval, ParityInterval)> {
    gen_interval_xprime(nu, k, eps)?;
    Ok((
        ParityInterval::new(2 - k, k - 2),
        ParityInterval::new(k - 2 * nu - 2 * eps, 3 * k - 4 * nu - 2 * eps),
    ))
}

/// A polynomial in a formal `x`, kept up to `x^B`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct GenSeries {
    coeffs: Vec<Laurent>,
}

impl GenSeries {
    pub fn zero(bound: usize) -> Self {
        Self {
            coeffs: vec![Laurent::zero(); bound + 1],
        }
    }

    pub fn constant(c: Laurent, bound: usize) -> Self {
        let mut out = Self::zero(bound);
        out.coeffs[0] = c;
        out
    }

    pub fn one(bound: usize) -> Self {
        Self::constant(Laurent::one(), bound)
    }

    /// `c0 + c1 x`.
    pub fn linear(c0: Laurent, c1: Laurent, bound: usize) -> Self {
        let mut out = Self::constant(c0, bound);
        if bound >= 1 {
            out.coeffs[1] = c1;
        }
        out
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, beta: usize) -> &Laurent {
        &self.coeffs[beta]
    }

    pub fn coeffs(&self) -> &[Laurent] {
        &self.coeffs
    }

    pub fn mul(&self, rhs: &GenSeries) -> GenSeries {
        let b = self.bound().min(rhs.bound());
        let mut out = Self::zero(b);
        for (i, x) in self.coeffs.iter().enumerate().take(b + 1) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate().take(b + 1 - i) {
                out.coeffs[i + j] += &(x * y);
            }
        }
        out
    }

    pub fn add(&self, rhs: &GenSeries) -> GenSeries {
        let b = self.bound().min(rhs.bound());
        Self {
            coeffs: (0..=b).map(|t| &self.coeffs[t] + &rhs.coeffs[t]).collect(),
        }
    }

    pub fn scale(&self, c: &Laurent) -> GenSeries {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }
}

impl fmt::Display for GenSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| format!("({c})*x^{n}"))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl fmt::Debug for GenSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `prod (1 + q^lambda x)` over the members of the given intervals.
pub fn product_over(intervals: &[ParityInterval], shift: i64, bound: usize) -> GenSeries {
    let mut out = GenSeries::one(bound);
    for iv in intervals {
        for lambda in iv.members() {
            out = out.mul(&GenSeries::linear(Laurent::one(), q(lambda + shift), bound));
        }
    }
    out
}

fn intervals_for(nu: i64, k: i64, eps: i64) -> Result<[ParityInterval; 2]> {
    check_eps(eps)?;
    match window(nu, k, eps) {
        Some(Window::Low) => gen_interval_x(nu, k, eps),
        Some(Window::High) => gen_interval_xprime(nu, k, eps),
        None => Err(Error::OutOfRange(format!(
            "no generating function for nu={nu}, k={k}, eps={eps}"
        ))),
    }
}

/// Series whose `x^beta` coefficient is `magic(nu,k,beta,eps)`.
pub fn magic_genfun(nu: i64, k: i64, eps: i64, bound: usize) -> Result<GenSeries> {
    Ok(product_over(&intervals_for(nu, k, eps)?, 0, bound))
}

/// Series whose `x^beta` coefficient is `q^beta magic(nu,k-1,beta,eps)`.
pub fn magic_genfun_for3(nu: i64, k: i64, eps: i64, bound: usize) -> Result<GenSeries> {
    Ok(product_over(&intervals_for(nu, k - 1, eps)?, 1, bound))
}

/// Both sides of `magic(nu,k,beta,eps) = q^{beta(2k-L)} magic(nu,L-k,beta,eps)`.
pub fn magic_symmetry_sides(nu: i64, beta: i64, eps: i64, k: i64) -> Result<(Laurent, Laurent)> {
    check_eps(eps)?;
    let big_l = 2 * nu + eps;
    if k < 1 || k > big_l - 1 || (nu..=nu + eps).contains(&k) {
        return Err(Error::OutOfRange(format!(
            "symmetry window excludes nu={nu}, k={k}, eps={eps}"
        )));
    }
    Ok((
        magic(nu, k, beta, eps)?,
        q(beta * (2 * k - big_l)) * magic(nu, big_l - k, beta, eps)?,
    ))
}

pub fn magic_symmetry_check(nu: i64, beta: i64, eps: i64, k: i64) -> Result<bool> {
    let (l, r) = magic_symmetry_sides(nu, beta, eps, k)?;
    Ok(l == r)
}

/// The value of `magic` predicted by q-Chu-Vandermonde when
/// `2(k - eps) = 3nu +- (nu - 2)`.
pub fn chu_vandermonde_special(nu: i64, k: i64, beta: i64, eps: i64) -> Result<Laurent> {
    check_eps(eps)?;
    let lhs = 2 * (k - eps);
    let sign = if lhs == 3 * nu + (nu - 2) {
        1
    } else if lhs == 3 * nu - (nu - 2) {
        -1
    } else {
        return Err(Error::OutOfRange(format!(
            "2(k - eps) = 3nu +- (nu - 2) fails for nu={nu}, k={k}, eps={eps}"
        )));
    };
    Ok(q(sign * (nu - k - 1) * beta) * qbinom(nu - 2, beta))
}

/// Both sides of the three-term recursion for `magic` (`eps` in {-1, 0}).
pub fn magic_recursion_sides(nu: i64, k: i64, beta: i64, eps: i64) -> Result<(Laurent, Laurent)> {
    if eps != -1 && eps != 0 {
        return Err(Error::InvalidEps(eps));
    }
    let lhs = qnum(beta) * magic(nu, k, beta, eps)?;
    let rhs = qnum(k - 1) * magic(nu - 1, k - 1, beta - 1, eps)?
        + q(2 * k - 3 * nu - beta - 2 * eps + 1)
            * qnum(nu - k - 1)
            * magic(nu - 1, k, beta - 1, eps + 1)?;
    Ok((lhs, rhs))
}

pub fn magic_recursion_check(nu: i64, k: i64, beta: i64, eps: i64) -> Result<bool> {
    let (l, r) = magic_recursion_sides(nu, k, beta, eps)?;
    Ok(l == r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TelescopeVariant {
    Sum,
    EvenEven,
    OddOdd,
    OddEven,
}

impl TelescopeVariant {
    pub const ALL: [TelescopeVariant; 4] = [Self::Sum, Self::EvenEven, Self::OddOdd, Self::OddEven];

    /// `l` as a function of `nu`.
    pub fn ell(self, nu: i64) -> i64 {
        match self {
            Self::Sum | Self::OddEven => 2 * nu,
            Self::EvenEven => 2 * nu + 1,
            Self::OddOdd => 2 * nu - 1,
        }
    }

    /// Smallest admissible `k`; the largest is `l - 1`.
    pub fn k_min(self, nu: i64) -> i64 {
        match self {
            Self::EvenEven => nu + 1,
            _ => nu,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Sum => "sum",
            Self::EvenEven => "even_even",
            Self::OddOdd => "odd_odd",
            Self::OddEven => "odd_even",
        }
    }
}

/// Both sides of a telescoping identity at `(nu, k, beta)`.
pub fn telescope_sides(
    variant: TelescopeVariant,
    nu: i64,
    k: i64,
    beta: i64,
) -> Result<(Laurent, Laurent)> {
    let ell = variant.ell(nu);
    if k < variant.k_min(nu) || k >= ell {
        return Err(Error::OutOfRange(format!(
            "{} telescope needs {} <= k < {ell}, got k={k}",
            variant.name(),
            variant.k_min(nu)
        )));
    }
    let s = Laurent::sign;
    let cs = (ell - k)..k;
    let (lhs, rhs) = match variant {
        TelescopeVariant::Sum => {
            let lhs = s(k) * (q(-2 * k) - q(-2 * nu)) * magic(nu, k, beta, 0)? * q(k * (k - beta - ell + 1));
            let mut rhs = Laurent::zero();
            for c in cs {
                rhs += &(s(c) * magic(nu, c, beta, -1)? * q(c * (c - beta - ell + 3)));
            }
            (lhs, q(-2 * ell + 2) * rhs)
        }
        TelescopeVariant::EvenEven => {
            let lhs = s(k)
                * (q(2 * k) - q(2 * nu))
                * (q(2 * nu) - q(2 * k - 2))
                * magic(nu, k, beta, 1)?
                * q(k * (k - beta - ell - 2));
            let mut rhs = Laurent::zero();
            for c in cs {
                rhs += &(s(c) * (q(-2 * nu) - q(-2 * c)) * magic(nu, c, beta, 0)? * q(c * (c - beta - ell + 4)));
            }
            (lhs, rhs)
        }
        TelescopeVariant::OddOdd => {
            let lhs = s(k)
                * q(ell - 1)
                * (Laurent::one() - q(2 * beta))
                * magic(nu, k, beta, -1)?
                * q(k * (k - beta - ell));
            let mut rhs = Laurent::zero();
            for c in cs {
                rhs += &(s(c)
                    * (Laurent::one() - q(2 * c + 6 - 4 * nu))
                    * magic(nu - 1, c, beta - 1, -1)?
                    * q(c * (c - beta - ell + 3)));
            }
            (lhs, rhs)
        }
        TelescopeVariant::OddEven => {
            let lhs = s(k)
                * q(2 * ell - 3)
                * (Laurent::one() - q(2 * beta))
                * (q(k - nu) - q(nu - k))
                * magic(nu, k, beta, 0)?
                * q(k * (k - beta - ell));
            let mut rhs = Laurent::zero();
            for c in cs {
                rhs += &(s(c)
                    * (q(c + 1 - nu) - q(nu - c - 1))
                    * (q(ell - 2 - c) - q(c + 2 - ell))
                    * magic(nu - 1, c, beta - 1, 0)?
                    * q(c * (c - beta - ell + 4)));
            }
            (lhs, rhs)
        }
    };
    Ok((lhs, rhs))
}

pub fn telescope_check(variant: TelescopeVariant, nu: i64, k: i64, beta: i64) -> Result<bool> {
    let (l, r) = telescope_sides(variant, nu, k, beta)?;
    Ok(l == r)
}

/// The two summation identities behind the telescopes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReformedVariant {
    /// Summands `(-1)^a [2a+1] q^{2C(a+1,2)} ...`.
    Odd,
    /// Summands `(-1)^a [a+1][2a+2] q^{2C(a+1,2)+a} ...`.
    Even,
}

impl ReformedVariant {
    /// Offset `s` in the factors `1 + q^{s+2i} x`.
    fn s(self) -> i64 {
        match self {
            Self::Odd => 1,
            Self::Even => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Odd => "odd",
            Self::Even => "even",
        }
    }
}

fn lin(c0: Laurent, c1: Laurent, bound: usize) -> GenSeries {
    GenSeries::linear(c0, c1, bound)
}

/// `prod_{i=lo}^{hi} (1 + q^{s+2i} x)`.
fn upper_run(s: i64, lo: i64, hi: i64, bound: usize) -> GenSeries {
    (lo..=hi).fold(GenSeries::one(bound), |acc, i| {
        acc.mul(&lin(Laurent::one(), q(s + 2 * i), bound))
    })
}

/// `prod_{i=lo}^{hi} (q^{s+2i} + x)`.
fn shifted_run(s: i64, lo: i64, hi: i64, bound: usize) -> GenSeries {
    (lo..=hi).fold(GenSeries::one(bound), |acc, i| {
        acc.mul(&lin(q(s + 2 * i), Laurent::one(), bound))
    })
}

/// The summand `f(a)` exactly as it appears in the sum.
pub fn reformed_summand(v: ReformedVariant, big_b: i64, a: i64, bound: usize) -> GenSeries {
    let s = v.s();
    let scalar = match v {
        ReformedVariant::Odd => Laurent::sign(a) * qnum(2 * a + 1) * q(2 * binom2(a + 1)),
        ReformedVariant::Even => {
            Laurent::sign(a) * qnum(a + 1) * qnum(2 * a + 2) * q(2 * binom2(a + 1) + a)
        }
    };
    let low = (1..=a).fold(GenSeries::one(bound), |acc, i| {
        acc.mul(&lin(Laurent::one(), q(-s - 2 * i), bound))
    });
    low.mul(&upper_run(s, a, big_b - 1, bound)).scale(&scalar)
}

/// The summand rewritten with the first product in the form `q^{s+2i} + x`.
pub fn reformed_summand_rewritten(v: ReformedVariant, big_b: i64, a: i64, bound: usize) -> GenSeries {
    let s = v.s();
    let scalar = match v {
        ReformedVariant::Odd => Laurent::sign(a) * q(-a) * qnum(2 * a + 1),
        ReformedVariant::Even => Laurent::sign(a) * q(-a) * qnum(a + 1) * qnum(2 * a + 2),
    };
    shifted_run(s, 1, a, bound)
        .mul(&upper_run(s, a, big_b - 1, bound))
        .scale(&scalar)
}

/// The closed form claimed for the partial sum `PS(a)`.
pub fn reformed_partial_sum_closed(v: ReformedVariant, big_b: i64, a: i64, bound: usize) -> GenSeries {
    let s = v.s();
    let scalar = match v {
        ReformedVariant::Odd => Laurent::sign(a) * q(-2 * a) * qnum(a + 1),
        ReformedVariant::Even => Laurent::sign(a) * q(-2 * a) * qnum(a + 1) * qnum(a + 2),
    };
    shifted_run(s, 2, a + 1, bound)
        .mul(&upper_run(s, a, big_b - 1, bound))
        .scale(&scalar)
}

/// Partial sums `PS(0), ..., PS(B)` of the summands, kept up to `x^bound`.
pub fn reformed_telescope_partial_sums(v: ReformedVariant, big_b: i64, bound: usize) -> Vec<GenSeries> {
    let mut out: Vec<GenSeries> = Vec::new();
    for a in 0..=big_b {
        let f = reformed_summand(v, big_b, a, bound);
        let next = match out.last() {
            Some(prev) => prev.add(&f),
            None => f,
        };
        out.push(next);
    }
    out
}

/// One named equality between two series.
#[derive(Clone, Debug)]
pub struct SeriesIdentity {
    pub label: String,
    pub lhs: GenSeries,
    pub rhs: GenSeries,
}

impl SeriesIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Every equality used to establish the summation at a given `B`: the
/// rewritten summand, the partial-sum closed form, both step ratios
/// (cross-multiplied), and the final sum.
pub fn reformed_telescope_identities(v: ReformedVariant, big_b: i64) -> Vec<SeriesIdentity> {
    let bound = big_b.max(0) as usize + 1;
    let s = v.s();
    let sums = reformed_telescope_partial_sums(v, big_b, bound);
    let mut out = Vec::new();
    for a in 0..=big_b {
        let f = reformed_summand(v, big_b, a, bound);
        out.push(SeriesIdentity {
            label: format!("summand a={a}"),
            lhs: f.clone(),
            rhs: reformed_summand_rewritten(v, big_b, a, bound),
        });
        out.push(SeriesIdentity {
            label: format!("partial sum a={a}"),
            lhs: sums[a as usize].clone(),
            rhs: reformed_partial_sum_closed(v, big_b, a, bound),
        });
        if a == 0 {
            continue;
        }
        let prev = &sums[a as usize - 1];
        let denom = lin(Laurent::one(), q(2 * a + s - 2), bound).scale(&qnum(a));
        // f(a) [a] (1 + q^{2a+s-2} x) = -q^{a-2} c(a) (q^{s+2} + x) PS(a-1)
        let f_factor = match v {
            ReformedVariant::Odd => qnum(2 * a + 1),
            ReformedVariant::Even => qnum(2 * a + 2),
        };
        out.push(SeriesIdentity {
            label: format!("summand ratio a={a}"),
            lhs: f.mul(&denom),
            rhs: prev
                .mul(&lin(q(s + 2), Laurent::one(), bound))
                .scale(&(-(q(a - 2) * f_factor))),
        });
        // PS(a) [a] (1 + q^{2a+s-2} x) = -q^-2 c'(a) (q^{s+2a+2} + x) PS(a-1)
        let ps_factor = match v {
            ReformedVariant::Odd => qnum(a + 1),
            ReformedVariant::Even => qnum(a + 2),
        };
        out.push(SeriesIdentity {
            label: format!("partial sum ratio a={a}"),
            lhs: sums[a as usize].mul(&denom),
            rhs: prev
                .mul(&lin(q(s + 2 * a + 2), Laurent::one(), bound))
                .scale(&(-(q(-2) * ps_factor))),
        });
    }
    let total = match v {
        ReformedVariant::Odd => Laurent::sign(big_b) * q(-2 * big_b) * qnum(big_b + 1),
        ReformedVariant::Even => {
            Laurent::sign(big_b) * q(-2 * big_b) * qnum(big_b + 1) * qnum(big_b + 2)
        }
    };
    out.push(SeriesIdentity {
        label: "total".to_string(),
        lhs: sums[big_b as usize].clone(),
        rhs: shifted_run(s + 2, 1, big_b, bound).scale(&total),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_examples() {
        assert!(term(5, 3, 2, 0, -1).unwrap().is_zero());
        assert!(term(5, 3, 2, 0, 3).unwrap().is_zero());
        assert!(term(2, 2, 0, -1, 0).unwrap().is_one());
        assert!(term(8, 4, 3, 0, 0).unwrap().is_one());
        assert!(term(2, 2, 0, 2, 0).is_err());
    }

    #[test]
    fn magic_small_values() {
        assert!(magic(5, 3, 0, 0).unwrap().is_one());
        assert!(magic(5, 3, -1, 0).unwrap().is_zero());
        assert_eq!(magic(8, 4, 3, 0).unwrap().eval_one(), 20.into());
    }

    #[test]
    fn parity_intervals() {
        let iv = ParityInterval::new(-2, 2);
        assert_eq!(iv.members().collect::<Vec<_>>(), vec![-2, 0, 2]);
        assert!(ParityInterval::new(3, 1).is_empty());
        assert_eq!(ParityInterval::new(3, 1).len(), 0);
        assert!(iv.contains(0) && !iv.contains(1));
    }

    #[test]
    fn interval_example() {
        // nu=8, k=4, eps=0: [[2-k, k-2]] and [[3k-4nu+2, k-2nu-2]].
        let x = gen_interval_x(8, 4, 0).unwrap();
        assert_eq!(x, [ParityInterval::new(-2, 2), ParityInterval::new(-18, -14)]);
        assert!(gen_interval_x(8, 8, 0).is_err());
        assert!(gen_interval_xprime(8, 8, 0).is_err());
        let xp = gen_interval_xprime(5, 10, 1).unwrap();
        assert_eq!(xp[0], ParityInterval::new(-8, -4));
    }

    #[test]
    fn genfun_rejects_gap() {
        assert!(magic_genfun(5, 5, 0, 3).is_err());
        assert!(magic_genfun(5, 6, 1, 3).is_err());
        assert!(magic_genfun(5, 5, -1, 3).is_ok());
    }

    #[test]
    fn chu_vandermonde_branches() {
        assert!(chu_vandermonde_special(6, 4, 2, 0).is_err());
        // k = 2nu - 1 + eps and k = nu + 1 + eps.
        assert!(chu_vandermonde_special(6, 12, 2, 1).is_ok());
        assert!(chu_vandermonde_special(6, 6, 2, -1).is_ok());
    }

    #[test]
    fn telescope_windows() {
        assert!(telescope_sides(TelescopeVariant::Sum, 4, 8, 1).is_err());
        assert!(telescope_sides(TelescopeVariant::EvenEven, 4, 4, 1).is_err());
        let (l, r) = telescope_sides(TelescopeVariant::Sum, 4, 4, 2).unwrap();
        assert!(l.is_zero() && r.is_zero());
    }
}
