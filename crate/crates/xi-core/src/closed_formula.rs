//! Closed formulas for `Xi(a,b,i,k)` in every regime.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{binom2, qnum, rho_prime, Laurent};
use crate::magic::magic;
use crate::polyring::Node;

fn p(n: i64) -> Laurent {
    Laurent::p_pow(n)
}

fn z(n: i64) -> Laurent {
    Laurent::z_pow(n)
}

fn q(n: i64) -> Laurent {
    Laurent::q_pow(n)
}

fn q_minus_qinv() -> Laurent {
    q(1) - q(-1)
}

/// Parameters of the regime `a, b > 0`, `0 < k < l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StandardParams {
    pub a: i64,
    pub b: i64,
    pub alpha: i64,
    pub beta: i64,
    pub nu: i64,
    pub ell: i64,
    pub phi: i64,
}

impl StandardParams {
    /// `a = 2alpha+1` or `2alpha+2`, likewise `b` and `beta`.
    pub fn new(a: i64, b: i64) -> Self {
        let alpha = (a - 1).div_euclid(2);
        let beta = (b - 1).div_euclid(2);
        let phi = (a % 2 == 0) as i64 + (b % 2 == 0) as i64;
        Self {
            a,
            b,
            alpha,
            beta,
            nu: alpha + beta + 2,
            ell: a + b + 1,
            phi,
        }
    }
}

/// Parameters for `k = l`: `a = 2alpha` or `2alpha+1`, `b = 2beta+1` or `2beta+2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KlenParams {
    pub a: i64,
    pub b: i64,
    pub alpha: i64,
    pub beta: i64,
}

impl KlenParams {
    pub fn new(a: i64, b: i64) -> Self {
        Self {
            a,
            b,
            alpha: a.div_euclid(2),
            beta: (b - 1).div_euclid(2),
        }
    }
}

/// The factors of the standard-regime formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factors {
    pub mu: Laurent,
    pub gamma1: Laurent,
    pub gamma2: Laurent,
    pub gamma3: Laurent,
    pub kappa1: Laurent,
    pub kappa2: Laurent,
    pub kappa3: Laurent,
    pub lambda1: Laurent,
    pub lambda2: Laurent,
    pub lambda3: Laurent,
    pub lambda4: Laurent,
    pub lambda5: Laurent,
}

impl Factors {
    pub fn product(&self) -> Laurent {
        [
            &self.mu,
            &self.gamma1,
            &self.gamma2,
            &self.gamma3,
            &self.kappa1,
            &self.kappa2,
            &self.kappa3,
            &self.lambda1,
            &self.lambda2,
            &self.lambda3,
            &self.lambda4,
            &self.lambda5,
        ]
        .into_iter()
        .fold(Laurent::one(), |acc, f| acc * f)
    }
}

fn check_k(a: u32, b: u32, k: u32) -> Result<()> {
    if k > a + b + 1 {
        return Err(Error::OutOfRange(format!("k = {k} exceeds l = {}", a + b + 1)));
    }
    Ok(())
}

pub fn gamma2(sp: &StandardParams, i: Node, k: i64) -> Laurent {
    let StandardParams { a, b, nu, ell, .. } = *sp;
    let d = q_minus_qinv();
    match (a % 2 == 0, b % 2 == 0, i.get()) {
        (false, false, _) => Laurent::one(),
        (true, false, _) => q(-nu) * d * qnum(k - nu),
        (false, true, 1) => q(-nu) * d * qnum(nu - k),
        (false, true, 2) => q(-(ell - 1)) * d * qnum(ell - 1 - k),
        (false, true, _) => q(-(ell - 1)) * d * qnum(1 - k),
        (true, true, 1) => q(-ell) * d.pow(2) * qnum(k - nu) * qnum(nu + 1 - k),
        (true, true, 2) => q(-(ell + nu - 1)) * d.pow(2) * qnum(k - nu) * qnum(ell - 1 - k),
        (true, true, _) => q(-(ell + nu - 1)) * d.pow(2) * qnum(k - 1) * qnum(nu + 1 - k),
    }
}

pub fn gamma3(sp: &StandardParams, i: Node, k: i64) -> Result<Laurent> {
    let StandardParams { a, b, nu, beta, .. } = *sp;
    Ok(match (a % 2 == 0, b % 2 == 0, i.get()) {
        (false, false, _) => magic(nu, k, beta, -1)?,
        (true, false, _) => magic(nu, k, beta, 0)?,
        (false, true, 1) => magic(nu, k, beta, 0)?,
        (false, true, 2) => magic(nu, k, beta, -1)?,
        (false, true, _) => q(beta) * magic(nu, k - 1, beta, -1)?,
        (true, true, 1) => magic(nu, k, beta, 1)?,
        (true, true, 2) => magic(nu, k, beta, 0)?,
        (true, true, _) => q(beta) * magic(nu, k - 1, beta, 0)?,
    })
}

pub fn factors_standard(a: u32, b: u32, i: Node, k: u32) -> Result<Factors> {
    let ell = a + b + 1;
    if a == 0 || b == 0 || k == 0 || k >= ell {
        return Err(Error::OutOfRange(format!(
            "standard regime needs a, b > 0 and 0 < k < l; got ({a},{b},{i},{k})"
        )));
    }
    let sp = StandardParams::new(a as i64, b as i64);
    let StandardParams {
        a,
        b,
        alpha,
        beta,
        ell,
        phi,
        ..
    } = sp;
    let k = k as i64;
    Ok(Factors {
        mu: Laurent::sign(beta + k),
        gamma1: rho_prime(alpha)? * rho_prime(beta)?,
        gamma2: gamma2(&sp, i, k),
        gamma3: gamma3(&sp, i, k)?,
        kappa1: z(k) * q(k * (k - beta - ell)),
        kappa2: if i.get() == 2 { q(2 * k) } else { Laurent::one() },
        kappa3: Laurent::one(),
        lambda1: z(binom2(beta)) * z(-binom2(ell + 1)) * p(-(beta + 1) * (ell + 3 * beta)),
        lambda2: if a % 2 == 1 { z(beta) } else { z(-beta - 3) },
        lambda3: if b % 2 == 1 { z(ell + 1) } else { Laurent::one() },
        lambda4: p((beta + 3) * (phi - 1)),
        lambda5: match i.get() {
            1 => Laurent::one(),
            2 => z(ell),
            _ => z(-ell),
        },
    })
}

pub fn xi_standard(a: u32, b: u32, i: Node, k: u32) -> Result<Laurent> {
    Ok(factors_standard(a, b, i, k)?.product())
}

/// `Xi(a,b,i,l)` for `a > 0`.
pub fn xi_klen(a: u32, b: u32, i: Node) -> Result<Laurent> {
    if a == 0 {
        return Err(Error::OutOfRange("xi_klen needs a > 0".into()));
    }
    let kp = KlenParams::new(a as i64, b as i64);
    let ell = (a + b + 1) as i64;
    if b % 2 == 1 {
        return Ok(Laurent::zero());
    }
    let nabla = match i.get() {
        1 => Laurent::one(),
        2 => return Ok(Laurent::zero()),
        _ => -z(-ell),
    };
    let beta = kp.beta;
    Ok(Laurent::sign(beta + ell)
        * nabla
        * z(-binom2(ell) + binom2(beta + 1) + ell * (beta + 1))
        * rho_prime(kp.alpha + beta + 1)?)
}

/// `Xi(a,b,3,l)` in its simplified form, for comparison with [`xi_klen`].
pub fn xi_klen3(a: u32, b: u32) -> Result<Laurent> {
    if a == 0 {
        return Err(Error::OutOfRange("xi_klen3 needs a > 0".into()));
    }
    if b % 2 == 1 {
        return Ok(Laurent::zero());
    }
    let kp = KlenParams::new(a as i64, b as i64);
    let ell = (a + b + 1) as i64;
    let beta = kp.beta;
    Ok(Laurent::sign(beta + ell + 1)
        * z(-binom2(ell + 1))
        * rho_prime(kp.alpha + beta + 1)?
        * p((2 * ell + beta) * (beta + 1)))
}

/// `Xi(a,0,i,k)` for `a > 0`, `0 < k < l`.
pub fn xi_bzero(a: u32, i: Node, k: u32) -> Result<Laurent> {
    let ell = a + 1;
    if a == 0 || k == 0 || k >= ell {
        return Err(Error::OutOfRange(format!(
            "b = 0 regime needs a > 0 and 0 < k < l; got a={a}, k={k}"
        )));
    }
    let (a, ell, k) = (a as i64, ell as i64, k as i64);
    let alpha = (a - 1).div_euclid(2);
    let a_odd = a % 2 == 1;
    let lambda49 = match (i.get(), a_odd) {
        (1, true) => return Ok(Laurent::zero()),
        (1, false) => p(-2 * ell),
        (2, true) => p(-3 * k),
        (2, false) => p(3 * ell - 6 * k - 3),
        (_, true) => -p(-ell - 3 * k),
        (_, false) => p(-ell - 3),
    };
    Ok(Laurent::sign(k + 1)
        * q(2 * binom2(k))
        * z(-binom2(ell))
        * rho_prime(alpha)?
        * p(k * (3 * ell - 1))
        * lambda49)
}

fn base_value(i: Node, k: u32) -> Laurent {
    match (i.get(), k) {
        (1, 0) | (3, 1) => -z(-1),
        (1, 1) | (2, 0) => Laurent::one(),
        _ => Laurent::zero(),
    }
}

/// Closed-form `Xi(a,b,i,k)`, dispatching over all regimes.
pub fn xi_formula(a: u32, b: u32, i: Node, k: u32) -> Result<Laurent> {
    check_k(a, b, k)?;
    let ell = a + b + 1;
    if a == 0 && b == 0 {
        return Ok(base_value(i, k));
    }
    if k == 0 {
        return xi_formula(a, b, i.pred(), ell);
    }
    let turn = || Laurent::sign(ell as i64) * z(-(ell as i64));
    if k == ell {
        if a > 0 {
            return xi_klen(a, b, i);
        }
        // bar(Xi(b,0,-i-1,0)), with Xi(b,0,j,0) = Xi(b,0,j-1,l).
        return Ok(turn() * xi_klen(b, 0, (-i).pred().pred())?.bar());
    }
    if b == 0 {
        return xi_bzero(a, i, k);
    }
    if a == 0 {
        return Ok(turn() * xi_bzero(b, (-i).pred(), ell - k)?.bar());
    }
    xi_standard(a, b, i, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(i: i64) -> Node {
        Node::new(i).unwrap()
    }

    #[test]
    fn parameter_conventions() {
        let sp = StandardParams::new(3, 6);
        assert_eq!((sp.alpha, sp.beta, sp.nu, sp.ell, sp.phi), (1, 2, 5, 10, 1));
        assert_eq!(sp.ell, 2 * sp.nu - 1 + sp.phi);
        let kp = KlenParams::new(4, 0);
        assert_eq!((kp.alpha, kp.beta), (2, -1));
    }

    #[test]
    fn standard_examples() {
        let f = factors_standard(1, 1, n(1), 2).unwrap();
        assert!(f.gamma2.is_one());
        assert!(f.product().is_one());
        let f = factors_standard(2, 1, n(3), 2).unwrap();
        let sp = StandardParams::new(2, 1);
        assert_eq!(f.gamma3, magic(sp.nu, 2, sp.beta, 0).unwrap());
        // b even, i = 2, k = l - 1.
        assert!(xi_standard(1, 2, n(2), 3).unwrap().is_zero());
        assert!(xi_standard(2, 3, n(1), 3).unwrap().is_zero());
        assert!(factors_standard(0, 3, n(1), 2).is_err());
    }

    #[test]
    fn edge_examples() {
        assert!(xi_klen(3, 2, n(2)).unwrap().is_zero());
        assert!(xi_klen(2, 3, n(1)).unwrap().is_zero());
        assert_eq!(xi_klen(1, 0, n(1)).unwrap(), -z(-1));
        assert!(xi_klen(0, 2, n(1)).is_err());
        assert!(xi_bzero(3, n(1), 2).unwrap().is_zero());
        assert!(xi_bzero(1, n(2), 1).unwrap().is_one());
        assert!(xi_formula(0, 0, n(2), 1).unwrap().is_zero());
    }
}
