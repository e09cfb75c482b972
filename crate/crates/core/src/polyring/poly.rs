use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::Rational;
use crate::error::{Error, Result};

/// Ordered list of variable names shared by every polynomial of one ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn same_as(&self, other: &Vars) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    pub(crate) fn check_same(&self, other: &Vars) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.0.join(","),
                right: other.0.join(","),
            })
        }
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &Vars) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Polynomial::constant(vars, Rational::one())
    }

    pub fn from_int(vars: &Vars, c: i64) -> Self {
        Polynomial::constant(vars, Rational::from_integer(c.into()))
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        Polynomial::term(vars, Monomial::variable(vars.len(), i), Rational::one())
    }

    /// The variable called `name`; panics if it is not declared.
    pub fn var_named(vars: &Vars, name: &str) -> Self {
        let i = vars
            .index_of(name)
            .unwrap_or_else(|| panic!("undeclared variable {name}"));
        Polynomial::var(vars, i)
    }

    pub fn term(vars: &Vars, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), vars.len());
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(vars: &Vars, terms: I) -> Self {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in decreasing order under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(Rational::zero),
        )
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.vars.len());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * m * other`
    pub fn add_scaled(&mut self, c: &Rational, m: &Monomial, other: &Polynomial) {
        self.assert_same_vars(other);
        if c.is_zero() {
            return;
        }
        for (om, oc) in &other.terms {
            self.add_term(m.mul(om), c * oc);
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(om, v)| (om.mul(m), v * c))
                .collect(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.vars);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute `images[i]` for the i-th variable. The images may live in a
    /// different ring, which becomes the ring of the result.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.vars.clone(),
            None => self.vars.clone(),
        };
        for im in images {
            target.check_same(&im.vars)?;
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(&target)]; images.len()];
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = out + t;
        }
        Ok(out)
    }

    /// Replace variable `i` by `value`, keeping the same ring.
    pub fn substitute(&self, i: usize, value: &Polynomial) -> Result<Polynomial> {
        let images: Vec<Polynomial> = (0..self.vars.len())
            .map(|k| {
                if k == i {
                    value.clone()
                } else {
                    Polynomial::var(&self.vars, k)
                }
            })
            .collect();
        self.compose(&images)
    }

    /// Re-embed into a ring whose variable list contains all variables of `self`.
    pub fn rename_into(&self, target: &Vars) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| Error::UndeclaredVariable(n.clone()))
            })
            .collect::<Result<_>>()?;
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (k, &x) in m.exponents().iter().enumerate() {
                e[map[k]] += x;
            }
            out.add_term(Monomial::from_exponents(e), c.clone());
        }
        Ok(out)
    }

    pub fn eval_rational(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Coefficients converted to `f64`, for numeric evaluation.
    pub fn float_terms(&self) -> Vec<(Vec<u32>, f64)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.exponents().to_vec(), c.to_f64().unwrap_or(f64::NAN)))
            .collect()
    }

    fn assert_same_vars(&self, other: &Polynomial) {
        assert!(
            self.vars.same_as(&other.vars),
            "polynomials over different variable sets: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    /// Canonical text form with terms in degrevlex order.
    pub fn to_text(&self) -> String {
        self.to_text_with(&MonomialOrder::degrevlex())
    }

    pub fn to_text_with(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = self.monomial_text(m);
            if mono.is_empty() {
                s.push_str(&rational_text(&a));
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&rational_text(&a));
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }

    fn monomial_text(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars.names()[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars.names()[i], e)),
            }
        }
        parts.join("*")
    }
}

fn rational_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.to_text())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.clone() + rhs
    }
}

impl Add<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_vars(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
        self
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        if self.terms.len() >= rhs.terms.len() {
            self + &rhs
        } else {
            rhs + &self
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for v in self.terms.values_mut() {
            *v = -v.clone();
        }
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

impl Sub<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_vars(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
        self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.clone() - rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self - &rhs
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_vars(rhs);
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            for (om, oc) in &rhs.terms {
                out.add_term(m.mul(om), c * oc);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Mul<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        &self * rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Vars {
        Vars::new(&["x", "y"])
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let v = vars();
        let x = Polynomial::var(&v, 0);
        let d = &x - &x;
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
        assert_eq!(d.to_text(), "0");
    }

    #[test]
    fn printing_is_degrevlex_sorted() {
        let v = vars();
        let x = Polynomial::var(&v, 0);
        let y = Polynomial::var(&v, 1);
        let p = &(&x * &y) - &y.pow(3) + &Polynomial::constant(&v, Rational::new(1.into(), 2.into()));
        assert_eq!(p.to_text(), "-y^3 + x*y + 1/2");
    }

    #[test]
    fn compose_and_substitute() {
        let v = vars();
        let x = Polynomial::var(&v, 0);
        let y = Polynomial::var(&v, 1);
        let p = &(&x * &x) + &y;
        // x -> x + y, y -> 2
        let q = p
            .compose(&[&x + &y, Polynomial::from_int(&v, 2)])
            .unwrap();
        let expected = &(&(&x + &y) * &(&x + &y)) + &Polynomial::from_int(&v, 2);
        assert_eq!(q, expected);
        let r = p.substitute(1, &Polynomial::from_int(&v, -1)).unwrap();
        assert_eq!(r, &(&x * &x) - &Polynomial::one(&v));
    }

    #[test]
    fn rename_into_larger_ring() {
        let small = Vars::new(&["y"]);
        let big = vars();
        let y = Polynomial::var(&small, 0).pow(2);
        assert_eq!(y.rename_into(&big).unwrap(), Polynomial::var(&big, 1).pow(2));
        assert!(matches!(
            Polynomial::var(&Vars::new(&["z"]), 0).rename_into(&big),
            Err(Error::UndeclaredVariable(_))
        ));
    }

    #[test]
    fn rational_evaluation() {
        let v = vars();
        let p = &Polynomial::var(&v, 0).pow(2) - &Polynomial::var(&v, 1);
        let half = Rational::new(1.into(), 2.into());
        let val = p.eval_rational(&[half.clone(), Rational::from_integer(3.into())]).unwrap();
        assert_eq!(val, Rational::new((-11).into(), 4.into()));
    }
}
