//! Exact Laurent polynomials in the half-variable `p`, with `z = p^2` and
//! `q = p^-3`, plus balanced quantum numbers and their relatives.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};

/// An element of `Z[p, p^-1]`, stored as exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::p_pow(0)
    }

    pub fn from_int<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * p^e`.
    pub fn monomial<T: Into<BigInt>>(c: T, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn p_pow(n: i64) -> Self {
        Self::monomial(1, n)
    }

    pub fn z_pow(n: i64) -> Self {
        Self::p_pow(2 * n)
    }

    pub fn q_pow(n: i64) -> Self {
        Self::p_pow(-3 * n)
    }

    /// `(-1)^n`.
    pub fn sign(n: i64) -> Self {
        Self::from_int(if n.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, T>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when the element lies in `Z[z, z^-1]`.
    pub fn is_in_z(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The involution `p -> p^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplication by `p^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Value at `p = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Laurent) -> Option<Laurent> {
        let (&dtop, dlead) = d.terms.iter().next_back()?;
        let dlow = d.min_exp()?;
        let mut rem = self.clone();
        let mut quot = Laurent::zero();
        let floor = match self.min_exp() {
            Some(e) => e - dlow,
            None => return Some(quot),
        };
        while let Some((&rtop, rlead)) = rem.terms.iter().next_back() {
            let (c, r) = rlead.div_rem(dlead);
            let e = rtop - dtop;
            if !r.is_zero() || e < floor {
                return None;
            }
            let step = Laurent::monomial(c, e);
            rem -= &(&step * d);
            quot += &step;
        }
        Some(quot)
    }

    /// Like [`div_exact`](Self::div_exact) but reports a fault on failure.
    pub fn div_exact_or_fault(&self, d: &Laurent, what: &str) -> Result<Laurent> {
        self.div_exact(d)
            .ok_or_else(|| Error::InexactDivision(what.to_string()))
    }

    /// Renders in the variable `var`, where one unit of `var` is `step`
    /// units of `p`. Returns `None` if some exponent is not a multiple.
    fn render_as(&self, var: &str, step: i64) -> Option<String> {
        if self.terms.keys().any(|e| e % step != 0) {
            return None;
        }
        let mut items: Vec<(i64, &BigInt)> =
            self.terms.iter().map(|(e, c)| (e / step, c)).collect();
        items.sort_by_key(|(e, _)| *e);
        Some(render_terms(var, &items))
    }

    /// Rendering in `q`, in increasing powers of `q`.
    pub fn render_q(&self) -> Option<String> {
        self.render_as("q", -3)
    }

    /// Rendering in `z`, in increasing powers of `z`.
    pub fn render_z(&self) -> Option<String> {
        self.render_as("z", 2)
    }
}

fn render_terms(var: &str, items: &[(i64, &BigInt)]) -> String {
    if items.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (n, (e, c)) in items.iter().enumerate() {
        let neg = c.is_negative();
        if n == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if *e == 0 {
            s.push_str(&a.to_string());
            continue;
        }
        if !a.is_one() {
            s.push_str(&a.to_string());
            s.push('*');
        }
        s.push_str(var);
        if *e != 1 {
            s.push('^');
            s.push_str(&e.to_string());
        }
    }
    s
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<(i64, &BigInt)> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        f.write_str(&render_terms("p", &items))
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Laurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::from_int(c)
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl MulAssign<&Laurent> for Laurent {
    fn mul_assign(&mut self, rhs: &Laurent) {
        *self = &*self * rhs;
    }
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Laurent> for Laurent {
            type Output = Laurent;
            fn $f(self, rhs: Laurent) -> Laurent {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Laurent> for Laurent {
            type Output = Laurent;
            fn $f(self, rhs: &Laurent) -> Laurent {
                (&self).$f(rhs)
            }
        }
        impl $tr<Laurent> for &Laurent {
            type Output = Laurent;
            fn $f(self, rhs: Laurent) -> Laurent {
                self.$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

impl std::iter::Sum for Laurent {
    fn sum<I: Iterator<Item = Laurent>>(iter: I) -> Laurent {
        let mut out = Laurent::zero();
        for x in iter {
            out += &x;
        }
        out
    }
}

impl std::iter::Product for Laurent {
    fn product<I: Iterator<Item = Laurent>>(iter: I) -> Laurent {
        let mut out = Laurent::one();
        for x in iter {
            out *= &x;
        }
        out
    }
}

/// `n(n-1)/2`, for any integer `n`.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Balanced quantum number `[k]`.
pub fn qnum(k: i64) -> Laurent {
    if k < 0 {
        return -qnum(-k);
    }
    Laurent::from_terms((0..k).map(|t| (-3 * (k - 1 - 2 * t), 1)))
}

/// `[d]! = [1][2]...[d]`.
pub fn qfact(d: u32) -> Laurent {
    (1..=d as i64).map(qnum).product()
}

/// Gaussian binomial `{n brack j}` for any integer `n`; zero when `j < 0`.
pub fn qbinom(n: i64, j: i64) -> Laurent {
    if j < 0 {
        return Laurent::zero();
    }
    if n >= 0 && n < j {
        return Laurent::zero();
    }
    // Each partial product is itself a Gaussian binomial, so every step divides.
    let mut acc = Laurent::one();
    for t in 1..=j {
        acc = (&acc * &qnum(n - j + t))
            .div_exact(&qnum(t))
            .expect("Gaussian binomial partial product must divide exactly");
    }
    acc
}

/// `rho(d) = prod_{c=1}^{d} (q^c - q^-c)`.
pub fn rho(d: u32) -> Laurent {
    (1..=d as i64)
        .map(|c| Laurent::q_pow(c) - Laurent::q_pow(-c))
        .product()
}

/// `rho'(d) = prod_{c=1}^{d} (1 - q^-2c)`; accepts `d = -1` as the empty product.
pub fn rho_prime(d: i64) -> Result<Laurent> {
    if d < -1 {
        return Err(Error::OutOfRange(format!("rho_prime({d}) needs d >= -1")));
    }
    Ok((1..=d)
        .map(|c| Laurent::one() - Laurent::q_pow(-2 * c))
        .product())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_conventions() {
        assert_eq!(Laurent::z_pow(1), Laurent::p_pow(2));
        assert_eq!(Laurent::q_pow(2), Laurent::p_pow(-6));
        assert_eq!(Laurent::q_pow(2), Laurent::z_pow(-3));
        assert!((Laurent::p_pow(3) * Laurent::p_pow(-3)).is_one());
    }

    #[test]
    fn bar_examples() {
        let f = Laurent::z_pow(1) + Laurent::one();
        assert_eq!(f.bar(), Laurent::z_pow(-1) + Laurent::one());
        assert_eq!(Laurent::one().bar(), Laurent::one());
        let g = Laurent::p_pow(3) - Laurent::p_pow(-1);
        assert_eq!(g.bar(), Laurent::p_pow(-3) - Laurent::p_pow(1));
    }

    #[test]
    fn rendering() {
        let f = Laurent::from_terms([(-3, -2), (0, 1), (4, 1)]);
        assert_eq!(f.to_string(), "-2*p^-3 + 1 + p^4");
        assert_eq!(Laurent::zero().to_string(), "0");
        assert_eq!((-Laurent::p_pow(1)).to_string(), "-p");
        assert_eq!(qnum(2).render_q().unwrap(), "q^-1 + q");
        assert_eq!(Laurent::z_pow(-1).render_z().unwrap(), "z^-1");
        assert!(Laurent::p_pow(1).render_z().is_none());
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"-3":"-2","0":"1","4":"1"}"#
        );
    }

    #[test]
    fn quantum_numbers() {
        assert_eq!(qnum(2), Laurent::q_pow(1) + Laurent::q_pow(-1));
        assert!(qnum(0).is_zero());
        assert!(qnum(1).is_one());
        let three = Laurent::q_pow(2) + Laurent::one() + Laurent::q_pow(-2);
        assert_eq!(qnum(-3), -three);
        for k in -10..=10 {
            assert_eq!(qnum(k).bar(), qnum(k));
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(qbinom(2, 1), qnum(2));
        assert_eq!(qbinom(-3, 2), qbinom(4, 2));
        assert_eq!(qbinom(6, 3).eval_one(), BigInt::from(20));
        assert!(qbinom(3, 5).is_zero());
        assert!(qbinom(3, -1).is_zero());
        assert!(qbinom(-4, 0).is_one());
    }

    #[test]
    fn rho_examples() {
        assert!(rho(0).is_one());
        assert_eq!(rho(1), Laurent::q_pow(1) - Laurent::q_pow(-1));
        let expect = (Laurent::one() - Laurent::q_pow(-2)) * (Laurent::one() - Laurent::q_pow(-4));
        assert_eq!(rho_prime(2).unwrap(), expect);
        assert!(rho_prime(-1).unwrap().is_one());
        assert!(rho_prime(-2).is_err());
    }

    #[test]
    fn div_exact_rejects_non_divisors() {
        let f = qnum(3);
        assert!(f.div_exact(&qnum(2)).is_none());
        assert_eq!((&f * &qnum(2)).div_exact(&qnum(2)), Some(f));
        assert!(Laurent::one().div_exact(&Laurent::zero()).is_none());
    }
}
