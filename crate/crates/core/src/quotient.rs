//! Finitely presented algebras `Q[x_1..x_n] / I`.
//!
//! Every [`RingElement`] stores the normal form of its representative with
//! respect to the cached reduced Groebner basis, so element equality is
//! representative equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{
    buchberger_with, express_unit, normal_form_budgeted, parse_polynomial, Budget,
    BuchbergerOptions, GroebnerBasis, MonomialOrder, OrderKind, Polynomial, Rational, Vars,
    DEFAULT_BUDGET,
};

pub type Ring = Arc<QuotientRing>;

#[derive(Debug)]
pub struct QuotientRing {
    vars: Vars,
    relations: Vec<Polynomial>,
    gb: GroebnerBasis,
    order: MonomialOrder,
    trivial: bool,
    budget: u64,
}

/// JSON presentation: `{"vars": [...], "relations": [...], "order": "degrevlex"}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RingSpec {
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default)]
    pub order: OrderKind,
    /// Reduction-step budget for Buchberger and normal forms.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

impl RingSpec {
    pub fn build(&self) -> Result<Ring> {
        let order = MonomialOrder {
            kind: self.order,
            permutation: None,
        };
        let vars = Vars::new(&self.vars);
        let rels = self
            .relations
            .iter()
            .map(|r| parse_polynomial(r, &vars))
            .collect::<Result<Vec<_>>>()?;
        QuotientRing::with_budget(vars, rels, order, self.budget.unwrap_or(DEFAULT_BUDGET))
    }
}

/// Parse `relations` over `variables` and build the ring.
pub fn ring_make<S: AsRef<str>, T: AsRef<str>>(
    variables: &[S],
    relations: &[T],
    order: MonomialOrder,
) -> Result<Ring> {
    let vars = Vars::new(variables);
    let rels = relations
        .iter()
        .map(|r| parse_polynomial(r.as_ref(), &vars))
        .collect::<Result<Vec<_>>>()?;
    QuotientRing::new(vars, rels, order)
}

impl QuotientRing {
    pub fn new(vars: Vars, relations: Vec<Polynomial>, order: MonomialOrder) -> Result<Ring> {
        QuotientRing::with_budget(vars, relations, order, DEFAULT_BUDGET)
    }

    pub fn with_budget(
        vars: Vars,
        relations: Vec<Polynomial>,
        order: MonomialOrder,
        budget: u64,
    ) -> Result<Ring> {
        for r in &relations {
            vars.check_same(r.vars())?;
        }
        let gb = if relations.iter().all(Polynomial::is_zero) {
            GroebnerBasis::empty(&vars, &order)
        } else {
            buchberger_with(
                &relations,
                &order,
                &BuchbergerOptions {
                    budget,
                    ..Default::default()
                },
            )?
        };
        let trivial = gb.is_unit_ideal();
        Ok(Arc::new(QuotientRing {
            vars,
            relations,
            gb,
            order,
            trivial,
            budget,
        }))
    }

    /// The polynomial ring itself, with no relations.
    pub fn free<S: AsRef<str>>(variables: &[S]) -> Ring {
        QuotientRing::new(Vars::new(variables), Vec::new(), MonomialOrder::degrevlex())
            .expect("free ring construction cannot fail")
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// True when `1` lies in the relation ideal.
    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn spec(&self) -> RingSpec {
        RingSpec {
            vars: self.vars.names().to_vec(),
            relations: self.relations.iter().map(Polynomial::to_text).collect(),
            order: self.order.kind,
            budget: (self.budget != DEFAULT_BUDGET).then_some(self.budget),
        }
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        normal_form_budgeted(p, &self.gb, &mut Budget::new(self.budget))
    }

    pub fn same_as(self: &Ring, other: &Ring) -> bool {
        Arc::ptr_eq(self, other)
            || (self.vars.same_as(&other.vars)
                && self.order == other.order
                && self.gb.generators() == other.gb.generators())
    }
}

/// Element constructors hang off the shared handle so that elements can keep it.
pub trait RingExt {
    fn elem(&self, text: &str) -> Result<RingElement>;
    #[allow(clippy::wrong_self_convention)]
    fn from_poly(&self, p: &Polynomial) -> Result<RingElement>;
    fn zero(&self) -> RingElement;
    fn one(&self) -> RingElement;
    fn int(&self, n: i64) -> RingElement;
    fn constant(&self, c: Rational) -> RingElement;
    fn express_one(&self, elements: &[RingElement]) -> Result<Option<Vec<RingElement>>>;
}

impl RingExt for Ring {
    fn elem(&self, text: &str) -> Result<RingElement> {
        let p = parse_polynomial(text, &self.vars)?;
        self.from_poly(&p)
    }

    fn from_poly(&self, p: &Polynomial) -> Result<RingElement> {
        let rep = self.reduce(p)?;
        Ok(RingElement {
            ring: self.clone(),
            rep,
        })
    }

    fn zero(&self) -> RingElement {
        RingElement {
            ring: self.clone(),
            rep: Polynomial::zero(&self.vars),
        }
    }

    fn one(&self) -> RingElement {
        self.int(1)
    }

    fn int(&self, n: i64) -> RingElement {
        self.constant(Rational::from_integer(n.into()))
    }

    fn constant(&self, c: Rational) -> RingElement {
        self.from_poly(&Polynomial::constant(&self.vars, c))
            .expect("constants reduce within any budget")
    }

    /// Cofactors `c` with `sum c_i * elements_i = 1`, or `None` when the
    /// elements generate a proper ideal.
    fn express_one(&self, elements: &[RingElement]) -> Result<Option<Vec<RingElement>>> {
        if elements.is_empty() {
            return Err(Error::Input("express_one needs at least one element".into()));
        }
        for e in elements {
            if !self.same_as(&e.ring) {
                return Err(Error::RingMismatch);
            }
        }
        if self.trivial {
            return Err(Error::TrivialRing);
        }
        let nrel = self.relations.len();
        let mut originals = self.relations.clone();
        originals.extend(elements.iter().map(|e| e.rep.clone()));
        let cof = match express_unit(&originals, &self.order, self.budget)? {
            Some(c) => c,
            None => return Ok(None),
        };
        let cofactors = cof[nrel..]
            .iter()
            .map(|c| self.from_poly(c))
            .collect::<Result<Vec<_>>>()?;
        let sum = cofactors
            .iter()
            .zip(elements)
            .fold(self.zero(), |acc, (c, a)| &acc + &(c * a));
        if !sum.is_one() {
            return Err(Error::Verification(format!(
                "express_one produced cofactors summing to {sum}"
            )));
        }
        Ok(Some(cofactors))
    }
}

/// An element of a [`QuotientRing`], stored by its canonical representative.
#[derive(Clone)]
pub struct RingElement {
    ring: Ring,
    rep: Polynomial,
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rep(&self) -> &Polynomial {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        self.rep.constant_value()
    }

    pub fn scale(&self, c: &Rational) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            rep: self.rep.scale(c),
        }
    }

    pub fn pow(&self, n: u32) -> RingElement {
        let mut acc = self.ring.one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        Ok(self.lift(&self.rep + &other.rep))
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check(other)?;
        Ok(self.lift(&self.rep * &other.rep))
    }

    fn check(&self, other: &RingElement) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn lift(&self, p: Polynomial) -> RingElement {
        self.ring
            .from_poly(&p)
            .expect("reduction of a ring operation result exceeded the budget")
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.rep == other.rep
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.rep, f)
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

// Operator impls panic on ring mismatch; use `try_add`/`try_mul` for checked use.
impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.check(rhs).expect("ring mismatch");
        self.lift(&self.rep - &rhs.rep)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            rep: -&self.rep,
        }
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: RingElement) -> RingElement {
        &self + &rhs
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: RingElement) -> RingElement {
        &self - &rhs
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    fn mul(self, rhs: RingElement) -> RingElement {
        &self * &rhs
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

/// The coordinate ring of the real 3-sphere, `Q[x,y,z,w]/(x^2+y^2+z^2+w^2-1)`.
pub fn sphere3_ring<S: AsRef<str>>(names: &[S; 4]) -> Ring {
    let n: Vec<&str> = names.iter().map(|s| s.as_ref()).collect();
    let rel = format!("{}^2 + {}^2 + {}^2 + {}^2 - 1", n[0], n[1], n[2], n[3]);
    ring_make(&n, &[rel], MonomialOrder::degrevlex()).expect("sphere ring")
}
