//! The words `w(a,b,i)`, the operator-level oracle for `Xi(a,b,i,k)`, and an
//! independent recursive evaluator.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::polyring::{Node, TriPoly};

/// A clockwise run of length `a`, a peak letter, then a widdershins run of
/// length `b` ending at `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordABI {
    pub a: u32,
    pub b: u32,
    pub i: Node,
    pub letters: Vec<Node>,
}

impl WordABI {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Recovers `(a, b, i)` from a letter sequence, if it has the shape of
    /// some `w(a,b,i)`. Returns every matching triple.
    pub fn parse(letters: &[Node]) -> Vec<(u32, u32, Node)> {
        let Some(&i) = letters.last() else {
            return Vec::new();
        };
        let len = letters.len() as u32;
        (0..len)
            .map(|a| (a, len - 1 - a))
            .filter(|&(a, b)| build_word(a, b, i).letters == letters)
            .map(|(a, b)| (a, b, i))
            .collect()
    }

    pub fn render(&self) -> String {
        self.letters
            .iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn build_word(a: u32, b: u32, i: Node) -> WordABI {
    let j = i.plus(b as i64 - 1);
    let mut letters = Vec::with_capacity((a + b + 1) as usize);
    for t in (0..a as i64).rev() {
        letters.push(j.plus(-t));
    }
    letters.push(j.succ());
    for t in 0..b as i64 {
        letters.push(j.plus(-t));
    }
    WordABI { a, b, i, letters }
}

/// Whether the oracle drops terms divisible by `x1 x2 x3` by default.
pub fn default_truncation(ell: u32) -> bool {
    ell > 8
}

fn check_k(a: u32, b: u32, k: u32) -> Result<u32> {
    let ell = a + b + 1;
    if k > ell {
        return Err(Error::OutOfRange(format!("k = {k} exceeds l = {ell}")));
    }
    Ok(ell)
}

/// `Xi(a,b,i,k)`: apply the operators of `w(a,b,i)` to `x1^k x2^(l-k)`.
pub fn xi_oracle(a: u32, b: u32, i: Node, k: u32, truncate: bool) -> Result<Laurent> {
    let ell = check_k(a, b, k)?;
    let word = build_word(a, b, i);
    let start = TriPoly::monomial([k, ell - k, 0]);
    start.demazure_word(&word.letters, truncate)?.scalar()
}

/// Memoized structural recursion for `Xi`.
#[derive(Default)]
pub struct XiRecursion {
    memo: HashMap<(u32, u32, Node, u32), Laurent>,
}

fn base_value(i: Node, k: u32) -> Laurent {
    match (i.get(), k) {
        (1, 0) | (3, 1) => -Laurent::z_pow(-1),
        (1, 1) | (2, 0) => Laurent::one(),
        _ => Laurent::zero(),
    }
}

impl XiRecursion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn eval(&mut self, a: u32, b: u32, i: Node, k: u32) -> Result<Laurent> {
        check_k(a, b, k)?;
        Ok(self.go(a, b, i, k))
    }

    fn go(&mut self, a: u32, b: u32, i: Node, k: u32) -> Laurent {
        let key = (a, b, i, k);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = self.compute(a, b, i, k);
        self.memo.insert(key, v.clone());
        v
    }

    fn compute(&mut self, a: u32, b: u32, i: Node, k: u32) -> Laurent {
        let ell = a + b + 1;
        let l = ell as i64;
        let kk = k as i64;
        if a == 0 && b == 0 {
            return base_value(i, k);
        }
        if a == 0 {
            // bar(Xi(c,0,i',k')) = (-z)^l Xi(0,c,-i'-1,l-k').
            let v = self.go(b, 0, (-i).pred(), ell - k).bar();
            return Laurent::sign(l) * Laurent::z_pow(-l) * v;
        }
        if k == 0 {
            return self.go(a, b, i.pred(), ell);
        }
        match i.get() {
            1 => {
                if 2 * k < ell {
                    let v = self.go(a, b, i, ell - k);
                    return -(Laurent::z_pow(2 * kk - l) * v);
                }
                let mut sum = Laurent::zero();
                for c in (ell - k)..k {
                    let inner = if b > 0 {
                        self.go(a, b - 1, Node::wrap(2), c)
                    } else {
                        self.go(a - 1, 0, Node::wrap(3), c)
                    };
                    sum += &(Laurent::z_pow(kk - 1 - c as i64) * inner);
                }
                sum
            }
            2 => {
                if k == ell {
                    return Laurent::zero();
                }
                let (first, second, power) = if b > 0 {
                    ((a, b - 1, Node::wrap(3)), (a, b - 1, Node::wrap(1)), 2 * l - 3 * kk - 2)
                } else {
                    ((a - 1, 0, Node::wrap(1)), (a - 1, 0, Node::wrap(3)), l - 1)
                };
                let head = self.go(first.0, first.1, first.2, k);
                if k == ell - 1 {
                    return head;
                }
                let tail = self.go(second.0, second.1, second.2, k);
                head - Laurent::z_pow(power) * tail
            }
            _ => {
                // Xi(a,b,2,l-k) = -z^k Xi(a,b,3,k).
                let v = self.go(a, b, Node::wrap(2), ell - k);
                -(Laurent::z_pow(-kk) * v)
            }
        }
    }
}

/// `Xi(a,b,i,k)` by recursion with a fresh memo table.
pub fn xi_recursive(a: u32, b: u32, i: Node, k: u32) -> Result<Laurent> {
    XiRecursion::new().eval(a, b, i, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(i: i64) -> Node {
        Node::new(i).unwrap()
    }

    fn letters(w: &WordABI) -> Vec<i64> {
        w.letters.iter().map(|x| x.get()).collect()
    }

    #[test]
    fn word_examples() {
        assert_eq!(letters(&build_word(3, 5, n(2))), vec![1, 2, 3, 1, 3, 2, 1, 3, 2]);
        for i in Node::ALL {
            assert_eq!(letters(&build_word(0, 0, i)), vec![i.get()]);
        }
        // Twelve letters, so a + b = 11: this sequence is w(6,5,1).
        assert_eq!(
            letters(&build_word(6, 5, n(1))),
            vec![3, 1, 2, 3, 1, 2, 3, 2, 1, 3, 2, 1]
        );
        assert_eq!(build_word(7, 5, n(1)).len(), 13);
        assert_eq!(build_word(3, 5, n(2)).render(), "1 2 3 1 3 2 1 3 2");
    }

    #[test]
    fn words_determine_their_triple() {
        for len in 1..=12u32 {
            for a in 0..len {
                for i in Node::ALL {
                    let w = build_word(a, len - 1 - a, i);
                    assert_eq!(*w.letters.last().unwrap(), i);
                    assert_eq!(w.len() as u32, len);
                    assert_eq!(WordABI::parse(&w.letters), vec![(a, len - 1 - a, i)]);
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        assert!(xi_oracle(0, 0, n(2), 0, false).unwrap().is_one());
        assert!(xi_oracle(1, 1, n(1), 3, false).unwrap().is_zero());
        assert!(xi_oracle(1, 1, n(1), 2, false).unwrap().is_one());
        assert_eq!(xi_oracle(0, 0, n(1), 0, false).unwrap(), -Laurent::z_pow(-1));
        assert!(xi_oracle(1, 1, n(1), 4, false).is_err());
    }

    #[test]
    fn recursion_examples() {
        assert!(xi_recursive(2, 3, n(2), 6).unwrap().is_zero());
        assert!(xi_recursive(0, 0, n(1), 1).unwrap().is_one());
        assert_eq!(
            xi_recursive(3, 5, n(2), 4).unwrap(),
            xi_oracle(3, 5, n(2), 4, true).unwrap()
        );
    }
}
