use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector of a power product. Its length is the ambient variable count.
///
/// The derived `Ord` is plain lexicographic comparison of the exponent vectors
/// and is only used for storage; term orders used by the algorithms go
/// through [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The monomial `x_i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    #[default]
    Degrevlex,
    Lex,
}

/// A term order on monomials. The optional permutation lists variable
/// indices from most to least significant; without it the declared variable
/// order is used (`x_0 > x_1 > ...`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub permutation: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn degrevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::Degrevlex,
            permutation: None,
        }
    }

    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            permutation: None,
        }
    }

    pub fn with_permutation(mut self, permutation: Vec<usize>) -> Self {
        self.permutation = Some(permutation);
        self
    }

    #[inline]
    fn exp(&self, m: &Monomial, k: usize) -> u32 {
        match &self.permutation {
            Some(p) => m.0[p[k]],
            None => m.0[k],
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.0.len();
        match self.kind {
            OrderKind::Lex => {
                for k in 0..n {
                    match self.exp(a, k).cmp(&self.exp(b, k)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Degrevlex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                // ties: the monomial with the smaller exponent in the last
                // differing variable is larger
                for k in (0..n).rev() {
                    match self.exp(a, k).cmp(&self.exp(b, k)) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderKind::Degrevlex => f.write_str("degrevlex"),
            OrderKind::Lex => f.write_str("lex"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn degrevlex_textbook_cases() {
        let o = MonomialOrder::degrevlex();
        // x^2 > xy > y^2 > xz
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        // x y^2 z vs x^2 z^2 -- same degree, last variable decides
        assert_eq!(o.cmp(&m(&[1, 2, 1]), &m(&[2, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn lex_and_permutation() {
        let o = MonomialOrder::lex();
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        let p = MonomialOrder::lex().with_permutation(vec![1, 0]);
        assert_eq!(p.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Less);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 1, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 2, 1]));
        assert!(a.divides(&a.lcm(&b)));
        assert_eq!(a.quotient_of(&m(&[3, 2, 1])), Some(m(&[2, 0, 1])));
        assert_eq!(a.quotient_of(&b), None);
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 3, 1])));
    }

    fn mono3() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..4, 3).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(a in mono3(), b in mono3(), c in mono3(), lex in any::<bool>()) {
            let o = if lex { MonomialOrder::lex() } else { MonomialOrder::degrevlex() };
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
            prop_assert_ne!(o.cmp(&a, &Monomial::one(3)), Ordering::Less);
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
        }
    }
}
