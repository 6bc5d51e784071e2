//! Exact evaluation at roots of unity: `p` becomes a primitive `6m`-th root
//! of unity, represented as a residue modulo the cyclotomic polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::closed_formula::{factors_standard, StandardParams};
use crate::error::{Error, Result};
use crate::laurent::{binom2, qbinom, qnum, rho, rho_prime, Laurent};
use crate::magic::magic;
use crate::polyring::Node;

/// Integer polynomial, lowest degree first, no trailing zeros.
pub type IntPoly = Vec<BigInt>;

fn trim(mut f: IntPoly) -> IntPoly {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

fn poly_mul(f: &[BigInt], g: &[BigInt]) -> IntPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(out)
}

/// Division by a monic polynomial: `(quotient, remainder)`.
fn poly_divrem_monic(f: &[BigInt], g: &[BigInt]) -> (IntPoly, IntPoly) {
    let dg = g.len() - 1;
    let mut rem = f.to_vec();
    if rem.len() <= dg {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dg];
    for top in (dg..rem.len()).rev() {
        let c = std::mem::take(&mut rem[top]);
        if c.is_zero() {
            continue;
        }
        for (j, gj) in g.iter().enumerate().take(dg) {
            rem[top - dg + j] -= &c * gj;
        }
        quot[top - dg] = c;
    }
    rem.truncate(dg);
    (trim(quot), trim(rem))
}

/// The cyclotomic polynomial `Phi_n`.
pub fn cyclotomic_poly(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic_poly needs n >= 1");
    let mut f = vec![BigInt::zero(); n as usize + 1];
    f[0] = BigInt::from(-1);
    f[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = poly_divrem_monic(&f, &cyclotomic_poly(d));
        assert!(r.is_empty(), "x^n - 1 must be divisible by Phi_d");
        f = q;
    }
    f
}

/// An element of `Z[x]/Phi_{6m}(x)`, with `x` the image of `p`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycElem {
    m: u32,
    residue: IntPoly,
}

fn modulus(m: u32) -> IntPoly {
    cyclotomic_poly(6 * m as u64)
}

impl CycElem {
    fn reduce(m: u32, f: IntPoly) -> Self {
        let (_, r) = poly_divrem_monic(&f, &modulus(m));
        Self { m, residue: r }
    }

    pub fn zero(m: u32) -> Self {
        Self {
            m,
            residue: Vec::new(),
        }
    }

    pub fn from_int<T: Into<BigInt>>(m: u32, c: T) -> Self {
        Self {
            m,
            residue: trim(vec![c.into()]),
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn residue(&self) -> &[BigInt] {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_empty()
    }

    /// True when every residue coefficient is a multiple of `n`.
    pub fn divisible_by(&self, n: &BigInt) -> bool {
        self.residue.iter().all(|c| c.is_multiple_of(n))
    }

    fn same_m(&self, rhs: &CycElem) {
        assert_eq!(self.m, rhs.m, "mixing residues for different m");
    }

    pub fn add(&self, rhs: &CycElem) -> CycElem {
        self.same_m(rhs);
        let n = self.residue.len().max(rhs.residue.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.residue.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.residue.iter().enumerate() {
            out[i] += c;
        }
        Self {
            m: self.m,
            residue: trim(out),
        }
    }

    pub fn neg(&self) -> CycElem {
        Self {
            m: self.m,
            residue: self.residue.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &CycElem) -> CycElem {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &CycElem) -> CycElem {
        self.same_m(rhs);
        Self::reduce(self.m, poly_mul(&self.residue, &rhs.residue))
    }

    /// The residue read back as a Laurent polynomial in `p`.
    pub fn as_laurent(&self) -> Laurent {
        Laurent::from_terms(
            self.residue
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64, c.clone())),
        )
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.as_laurent(), f)
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (m={})", self, self.m)
    }
}

impl Serialize for CycElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CycElem", 2)?;
        st.serialize_field("m", &self.m)?;
        let res: Vec<String> = self.residue.iter().map(|c| c.to_string()).collect();
        st.serialize_field("residue", &res)?;
        st.end()
    }
}

/// Image of `f` when `p` is a primitive `6m`-th root of unity.
pub fn specialize(f: &Laurent, m: u32) -> CycElem {
    assert!(m >= 2, "specialize needs m >= 2");
    let n = 6 * m as i64;
    let mut dense = vec![BigInt::zero(); n as usize];
    for (e, c) in f.terms() {
        dense[e.rem_euclid(n) as usize] += c;
    }
    CycElem::reduce(m, trim(dense))
}

/// Parameters of `xi_m(a,i)`, with `b = 3m - a - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RouParams {
    pub m: i64,
    pub d: i64,
    pub bottom: i64,
    pub a: i64,
    pub b: i64,
    pub alpha: i64,
    pub beta: i64,
}

impl RouParams {
    pub fn new(m: u32, a: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::OutOfRange(format!("m = {m} must be at least 2")));
        }
        let (m, a) = (m as i64, a as i64);
        if a > 3 * m - 1 {
            return Err(Error::OutOfRange(format!("a = {a} exceeds 3m - 1 = {}", 3 * m - 1)));
        }
        let b = 3 * m - a - 1;
        let d = m / 2;
        let all_odd = m % 2 == 1 && a % 2 == 1 && b % 2 == 1;
        let sp = StandardParams::new(a, b);
        Ok(Self {
            m,
            d,
            bottom: if all_odd { d } else { d - 1 },
            a,
            b,
            alpha: sp.alpha,
            beta: sp.beta,
        })
    }

    pub fn alpha_in_range(&self) -> bool {
        self.bottom <= self.alpha && self.alpha < self.m
    }

    /// The window outside which `xi_m(a,i)` vanishes.
    pub fn a_in_range(&self) -> bool {
        self.m - 1 <= self.a && self.a <= 2 * self.m
    }
}

fn p(n: i64) -> Laurent {
    Laurent::p_pow(n)
}

fn q(n: i64) -> Laurent {
    Laurent::q_pow(n)
}

/// `xi_m(a,i)` from the closed formula at a root of unity.
pub fn xi_rou_formula(m: u32, a: u32, i: Node) -> Result<CycElem> {
    let _ = i;
    let rp = RouParams::new(m, a)?;
    if !rp.a_in_range() {
        return Ok(CycElem::zero(m));
    }
    let RouParams {
        m: mm,
        d,
        bottom,
        a,
        alpha,
        beta,
        ..
    } = rp;
    let tail = match (mm % 2 == 0, a % 2 == 0) {
        (true, true) => p(-2 * beta * beta - 6 * beta - 4),
        (true, false) => p(-2 * beta * beta - 2 * beta),
        (false, true) => p(-2 * beta * beta - 5 * beta - 3 + 3 * d),
        (false, false) => p(-2 * beta * beta - 3 * beta - 1),
    };
    let value = Laurent::sign(d + a + beta)
        * Laurent::from_int(mm * mm)
        * Laurent::z_pow(2 * mm)
        * q(binom2(d + 1) - binom2(alpha + 1) - binom2(beta + 1))
        * qbinom(mm - 1 - bottom, beta - bottom)
        * tail;
    Ok(specialize(&value, m))
}

/// `xi_m(a,i)` in the form depending only on `beta` and `d`.
pub fn xi_rou_corollary(m: u32, a: u32, i: Node) -> Result<CycElem> {
    let _ = i;
    let rp = RouParams::new(m, a)?;
    if !rp.alpha_in_range() {
        return Err(Error::OutOfRange(format!(
            "alpha = {} outside [{}, {}]",
            rp.alpha,
            rp.bottom,
            rp.m - 1
        )));
    }
    let RouParams {
        m: mm,
        d,
        bottom,
        a,
        beta,
        ..
    } = rp;
    let tail = match (mm % 2 == 0, a % 2 == 0) {
        (true, true) => p(beta * beta + 3 * beta * d - d - 1),
        (true, false) => p(beta * beta + 3 * beta * d + 4 * beta - 7 * d + 3),
        (false, true) => p(beta * beta - 9 * beta * d - 2 * beta - 7 * d - 2),
        (false, false) => p(beta * beta - 9 * beta * d - 3 * beta - 7 * d - 3),
    };
    let value = Laurent::sign(d + beta + 1)
        * Laurent::from_int(mm * mm)
        * qbinom(mm - 1 - bottom, beta - bottom)
        * tail;
    Ok(specialize(&value, m))
}

/// One identity instance evaluated at a root of unity.
#[derive(Clone, Debug)]
pub struct RouCheck {
    pub name: &'static str,
    pub inputs: Vec<i64>,
    pub lhs: CycElem,
    pub rhs: CycElem,
}

impl RouCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Every lemma instance for a given `m`.
pub fn rou_lemma_checks(m: u32) -> Result<Vec<RouCheck>> {
    if m < 2 {
        return Err(Error::OutOfRange(format!("m = {m} must be at least 2")));
    }
    let mm = m as i64;
    let d = mm / 2;
    let sp = |f: &Laurent| specialize(f, m);
    let int = |c: i64| CycElem::from_int(m, c);
    let mut out = Vec::new();
    let mut push = |name: &'static str, inputs: Vec<i64>, lhs: CycElem, rhs: CycElem| {
        out.push(RouCheck {
            name,
            inputs,
            lhs,
            rhs,
        })
    };

    push("qnum_m_vanishes", vec![mm], sp(&qnum(mm)), int(0));
    push("qnum_m_minus_1", vec![mm], sp(&qnum(mm - 1)), int(1));
    for k in -2 * mm..=2 * mm {
        push("mirror", vec![k], sp(&qnum(mm - k)), sp(&qnum(k)));
        push("period_m", vec![k], sp(&qnum(k + mm)), sp(&-qnum(k)));
        push("period_2m", vec![k], sp(&qnum(k + 2 * mm)), sp(&qnum(k)));
    }
    for j in 0..mm {
        push("2m_minus_1", vec![j], sp(&qbinom(2 * mm - 1, j)), sp(&Laurent::sign(j)));
    }
    // At j = m the quotient is 0/0 at the root; symmetry gives the j = m - 1 value.
    push(
        "2m_minus_1_at_m",
        vec![mm],
        sp(&qbinom(2 * mm - 1, mm)),
        sp(&Laurent::sign(mm - 1)),
    );

    let rho_m1 = rho(m - 1);
    let rho_d = rho(d as u32);
    let rho_dm1 = if d >= 1 { rho(d as u32 - 1) } else { Laurent::one() };
    push(
        "rho_squared",
        vec![mm],
        sp(&(&rho_m1 * &rho_m1)),
        sp(&(Laurent::sign(mm - 1) * Laurent::from_int(mm * mm))),
    );
    push("rho_prime_m_minus_1", vec![mm], sp(&rho_prime(mm - 1)?), int(mm));
    if mm % 2 == 0 {
        push(
            "rho_trig_even",
            vec![mm],
            sp(&rho_m1),
            sp(&(q(d * (mm - 1)) * Laurent::from_int(mm))),
        );
        push("rho_even_split", vec![mm], sp(&rho_m1), sp(&(&rho_d * &rho_dm1)));
        push(
            "rho_even_step",
            vec![mm],
            sp(&rho_d),
            sp(&(Laurent::from_int(2) * q(d) * &rho_dm1)),
        );
    } else {
        push(
            "rho_trig_odd",
            vec![mm],
            sp(&rho_m1),
            sp(&(Laurent::sign(d) * Laurent::from_int(mm))),
        );
        push("rho_odd_square", vec![mm], sp(&rho_m1), sp(&(&rho_d * &rho_d)));
    }

    let one_minus_q2 = Laurent::one() - q(2);
    let rhs_d = |beta: i64| Laurent::sign(beta + d) * q(binom2(d + 1)) * &rho_d;
    let rhs_dm1 = |beta: i64| Laurent::sign(beta + d - 1) * q(binom2(d)) * &rho_dm1;
    if mm % 2 == 0 {
        for beta in d - 1..=mm - 1 {
            push("magic0", vec![beta], sp(&magic(3 * d, 4 * d, beta, 0)?), sp(&rhs_dm1(beta)));
            push(
                "magic1",
                vec![beta],
                sp(&(magic(3 * d, 4 * d, beta, -1)? * &one_minus_q2)),
                sp(&rhs_d(beta)),
            );
            push(
                "magic3",
                vec![beta],
                sp(&(q(beta) * magic(3 * d, 4 * d - 1, beta, -1)? * &one_minus_q2)),
                sp(&rhs_d(beta)),
            );
        }
    } else {
        for beta in d..=mm - 1 {
            push(
                "magic_odd_odd",
                vec![beta],
                sp(&magic(3 * d + 2, 4 * d + 2, beta, -1)?),
                sp(&rhs_d(beta)),
            );
        }
        for beta in d - 1..=mm - 1 {
            push(
                "magic_even_even_1",
                vec![beta],
                sp(&magic(3 * d + 1, 4 * d + 2, beta, 1)?),
                sp(&rhs_dm1(beta)),
            );
            push(
                "magic_even_even_2",
                vec![beta],
                sp(&(magic(3 * d + 1, 4 * d + 2, beta, 0)? * &one_minus_q2)),
                sp(&rhs_d(beta)),
            );
            push(
                "magic_even_even_3",
                vec![beta],
                sp(&(q(beta) * magic(3 * d + 1, 4 * d + 1, beta, 0)? * &one_minus_q2)),
                sp(&rhs_d(beta)),
            );
        }
    }

    for a in 1..=(3 * m - 2) {
        let rp = RouParams::new(m, a)?;
        let RouParams {
            alpha,
            beta,
            bottom,
            b,
            ..
        } = rp;
        let a = a as i64;
        push("they_add_up", vec![a], int(alpha + beta), int(mm - 1 + bottom));
        let expect = match (a % 2 == 0, b % 2 == 0) {
            (false, false) => 3 * d,
            (true, true) => 3 * d - 1,
            _ => 3 * d - 2,
        };
        push("alpha_beta_d", vec![a], int(alpha + beta), int(expect));
        push(
            "gamma1_at_root",
            vec![a],
            sp(&(rho(alpha as u32) * rho(beta as u32))),
            sp(&(rho(bottom as u32) * &rho_m1 * qbinom(mm - 1 - bottom, alpha - bottom))),
        );
        for i in Node::ALL {
            let f = factors_standard(a as u32, b as u32, i, 2 * m)?;
            let inputs = vec![a, i.get()];
            push("kappa2_trivial", inputs.clone(), sp(&f.kappa2), int(1));
            push("lambda5_trivial", inputs.clone(), sp(&f.lambda5), int(1));
            push("kappa1_power", inputs.clone(), sp(&f.kappa1), sp(&p(4 * mm)));
            if !rp.alpha_in_range() {
                continue;
            }
            let both_even = a % 2 == 0 && b % 2 == 0;
            let top = if both_even { binom2(d) } else { binom2(d + 1) };
            push(
                "gamma_factors",
                inputs,
                sp(&(&f.mu * &f.gamma1 * &f.gamma2 * &f.gamma3)),
                sp(&(Laurent::sign(d + b + 1)
                    * Laurent::from_int(mm * mm)
                    * qbinom(mm - 1 - bottom, alpha - bottom)
                    * q(top - binom2(alpha + 1) - binom2(beta + 1)))),
            );
        }
    }
    Ok(out)
}

/// Summary of [`rou_lemma_checks`] for one `m`.
#[derive(Clone, Debug)]
pub struct RouLemmaReport {
    pub m: u32,
    pub total: usize,
    pub failures: Vec<RouCheck>,
}

impl RouLemmaReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn rou_lemma_suite(m: u32) -> Result<RouLemmaReport> {
    let checks = rou_lemma_checks(m)?;
    let total = checks.len();
    Ok(RouLemmaReport {
        m,
        total,
        failures: checks.into_iter().filter(|c| !c.holds()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|c| BigInt::from(*c)).collect()
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(18).len() - 1, 6);
    }

    #[test]
    fn specialize_examples() {
        for m in 2..=6 {
            let mm = m as i64;
            assert_eq!(specialize(&p(6 * mm), m), CycElem::from_int(m, 1));
            assert!(specialize(&qnum(mm), m).is_zero());
            assert_eq!(specialize(&p(3 * mm), m), CycElem::from_int(m, -1));
        }
    }

    #[test]
    fn params() {
        let rp = RouParams::new(3, 4).unwrap();
        assert_eq!((rp.b, rp.d, rp.bottom), (4, 1, 0));
        let rp = RouParams::new(3, 3).unwrap();
        assert_eq!((rp.b, rp.bottom), (5, 1));
        assert!(RouParams::new(3, 9).is_err());
    }

    #[test]
    fn zero_locus_example() {
        assert!(xi_rou_formula(3, 1, Node::ALL[0]).unwrap().is_zero());
        assert!(xi_rou_corollary(3, 1, Node::ALL[0]).is_err());
    }
}
