//! The ring `Z[z, z^-1][x1, x2, x3]`, the deformed action of the simple
//! reflections, Demazure operators, and the diagram symmetries.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::laurent::Laurent;

/// An element of `Z/3`, stored as a representative in `{1, 2, 3}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Node(u8);

impl Node {
    pub const ALL: [Node; 3] = [Node(1), Node(2), Node(3)];

    /// Accepts only `1`, `2` or `3`.
    pub fn new(i: i64) -> Result<Node> {
        match i {
            1..=3 => Ok(Node(i as u8)),
            _ => Err(Error::InvalidIndex(i)),
        }
    }

    /// Reduces any integer into `{1, 2, 3}`.
    pub fn wrap(i: i64) -> Node {
        Node((i - 1).rem_euclid(3) as u8 + 1)
    }

    pub fn get(self) -> i64 {
        self.0 as i64
    }

    pub fn plus(self, n: i64) -> Node {
        Node::wrap(self.get() + n)
    }

    pub fn succ(self) -> Node {
        self.plus(1)
    }

    pub fn pred(self) -> Node {
        self.plus(-1)
    }

    fn slot(self) -> usize {
        self.0 as usize - 1
    }
}

/// `-i`, the index fixed by the flip 1 <-> 2.
impl Neg for Node {
    type Output = Node;

    fn neg(self) -> Node {
        Node::wrap(-self.get())
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type Exps = [u32; 3];

/// A polynomial in `x1, x2, x3` with [`Laurent`] coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TriPoly {
    terms: BTreeMap<Exps, Laurent>,
}

impl TriPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Laurent) -> Self {
        Self::term(c, [0, 0, 0])
    }

    pub fn term(c: Laurent, e: Exps) -> Self {
        let mut out = Self::zero();
        out.add_term(e, c);
        out
    }

    pub fn monomial(e: Exps) -> Self {
        Self::term(Laurent::one(), e)
    }

    /// The variable `x_i`.
    pub fn x(i: Node) -> Self {
        let mut e = [0; 3];
        e[i.slot()] = 1;
        Self::monomial(e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Laurent)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|e| *e == [0, 0, 0])
    }

    /// The coefficient of `1`, provided no other term is present.
    pub fn scalar(&self) -> Result<Laurent> {
        if !self.is_scalar() {
            return Err(Error::NotScalar);
        }
        Ok(self.terms.get(&[0, 0, 0]).cloned().unwrap_or_default())
    }

    /// Total degrees of the terms present, if homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    fn add_term(&mut self, e: Exps, c: Laurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn map_terms(&self, f: impl Fn(&Exps, &Laurent) -> (Exps, Laurent)) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let (e2, c2) = f(e, c);
            out.add_term(e2, c2);
        }
        out
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        self.map_terms(|e, x| (*e, x * c))
    }

    /// Drops every term divisible by `x1 x2 x3`.
    pub fn drop_x123(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.contains(&0))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// The reflection `s_i`: `x_i -> z x_{i+1}`, `x_{i+1} -> z^-1 x_i`.
    pub fn s_action(&self, i: Node) -> Self {
        let (a, b) = (i.slot(), i.succ().slot());
        self.map_terms(|e, c| {
            let (u, v) = (e[a] as i64, e[b] as i64);
            let mut e2 = *e;
            e2[a] = e[b];
            e2[b] = e[a];
            (e2, c.shift(2 * (u - v)))
        })
    }

    /// The Demazure operator `(f - s_i f) / (x_i - z x_{i+1})`, by exact
    /// long division in `x_i`.
    pub fn demazure(&self, i: Node) -> Result<Self> {
        let (a, b) = (i.slot(), i.succ().slot());
        let mut rem = (self - &self.s_action(i)).terms;
        let mut quot = Self::zero();
        let z = Laurent::z_pow(1);
        loop {
            let top = match rem.keys().map(|e| e[a]).max() {
                Some(t) if t > 0 => t,
                _ => break,
            };
            let keys: Vec<Exps> = rem.keys().filter(|e| e[a] == top).copied().collect();
            for key in keys {
                let c = rem.remove(&key).expect("key present");
                let mut qk = key;
                qk[a] -= 1;
                let mut nk = qk;
                nk[b] += 1;
                let carry = &c * &z;
                quot.add_term(qk, c);
                let mut tmp = Self { terms: rem };
                tmp.add_term(nk, carry);
                rem = tmp.terms;
            }
        }
        if !rem.is_empty() {
            return Err(Error::InexactDivision(format!("demazure({i})")));
        }
        Ok(quot)
    }

    /// Applies `d_{w_1} o ... o d_{w_n}`, so the last letter acts first.
    pub fn demazure_word(&self, word: &[Node], truncate: bool) -> Result<Self> {
        let mut f = if truncate { self.drop_x123() } else { self.clone() };
        for &i in word.iter().rev() {
            f = f.demazure(i)?;
            if truncate {
                f = f.drop_x123();
            }
        }
        Ok(f)
    }

    /// The rotation `x_i -> x_{i+1}`, fixing `z`.
    pub fn sigma(&self) -> Self {
        self.map_terms(|e, c| ([e[2], e[0], e[1]], c.clone()))
    }

    /// `x1 <-> x3`, `x2` fixed, with `z -> z^-1` on coefficients.
    pub fn tau(&self) -> Self {
        self.map_terms(|e, c| ([e[2], e[1], e[0]], c.bar()))
    }
}

impl Add<&TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul<&TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        self.map_terms(|e, c| (*e, -c))
    }
}

fn render_coeff(c: &Laurent) -> String {
    c.render_z().unwrap_or_else(|| c.to_string())
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, x)| **x > 0)
                .map(|(n, x)| match x {
                    1 => format!("x{}", n + 1),
                    _ => format!("x{}^{}", n + 1, x),
                })
                .collect();
            if mono.is_empty() {
                parts.push(format!("({})", render_coeff(c)));
            } else {
                parts.push(format!("{} * ({})", mono.join("*"), render_coeff(c)));
            }
        }
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct JsonTerm<'a>(&'a Exps, &'a Laurent);

impl Serialize for JsonTerm<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("exponents", self.0)?;
        st.serialize_field("coeff", self.1)?;
        st.end()
    }
}

impl Serialize for TriPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&JsonTerm(e, c))?;
        }
        seq.end()
    }
}

/// All monomials `x1^e1 x2^e2 x3^e3` of total degree at most `max_deg`.
pub fn monomials_up_to(max_deg: u32) -> Vec<Exps> {
    let mut out = Vec::new();
    for d in 0..=max_deg {
        for e1 in 0..=d {
            for e2 in 0..=d - e1 {
                out.push([e1, e2, d - e1 - e2]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(i: i64) -> Node {
        Node::new(i).unwrap()
    }

    fn z(e: i64) -> Laurent {
        Laurent::z_pow(e)
    }

    #[test]
    fn node_arithmetic() {
        assert_eq!(Node::wrap(4), n(1));
        assert_eq!(Node::wrap(0), n(3));
        assert_eq!(-n(1), n(2));
        assert_eq!(-n(3), n(3));
        assert!(Node::new(0).is_err());
        assert!(Node::new(4).is_err());
    }

    #[test]
    fn reflection_examples() {
        let x1 = TriPoly::x(n(1));
        let x2 = TriPoly::x(n(2));
        let x3 = TriPoly::x(n(3));
        assert_eq!(x1.s_action(n(1)), x2.scale(&z(1)));
        assert_eq!(x3.s_action(n(1)), x3);
        let f = TriPoly::monomial([3, 1, 0]);
        assert_eq!(f.s_action(n(1)), TriPoly::term(z(2), [1, 3, 0]));
        assert_eq!(f.s_action(n(1)).s_action(n(1)), f);
    }

    #[test]
    fn demazure_examples() {
        let x1 = TriPoly::x(n(1));
        let x2 = TriPoly::x(n(2));
        assert_eq!(x1.demazure(n(1)).unwrap(), TriPoly::constant(Laurent::one()));
        assert_eq!(x2.demazure(n(1)).unwrap(), TriPoly::constant(-z(-1)));
        let cube = TriPoly::monomial([3, 0, 0]).demazure(n(1)).unwrap();
        let expect = &(&TriPoly::monomial([2, 0, 0]) + &TriPoly::term(z(1), [1, 1, 0]))
            + &TriPoly::term(z(2), [0, 2, 0]);
        assert_eq!(cube, expect);
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(TriPoly::x(n(3)).sigma(), TriPoly::x(n(1)));
        assert_eq!(
            TriPoly::term(z(1), [0, 1, 0]).tau(),
            TriPoly::term(z(-1), [0, 1, 0])
        );
        assert_eq!(TriPoly::monomial([2, 0, 1]).tau(), TriPoly::monomial([1, 0, 2]));
    }

    #[test]
    fn rendering() {
        let f = &TriPoly::term(z(3) + Laurent::one(), [2, 1, 0]) + &TriPoly::constant(z(-1));
        assert_eq!(f.to_string(), "(z^-1) + x1^2*x2 * (1 + z^3)");
        let json = serde_json::to_string(&TriPoly::x(n(2))).unwrap();
        assert_eq!(json, r#"[{"exponents":[0,1,0],"coeff":{"0":"1"}}]"#);
    }

    #[test]
    fn monomial_count() {
        // (d+1)(d+2)/2 monomials in each degree d.
        assert_eq!(monomials_up_to(6).len(), (0..=6).map(|d| (d + 1) * (d + 2) / 2).sum::<usize>());
    }
}
