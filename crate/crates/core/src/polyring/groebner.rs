//! Buchberger's algorithm with optional representation tracking.
//!
//! With tracking enabled, every basis element `g` carries cofactors `c` with
//! `g = sum_i c_i * originals_i`, which is what turns an ideal-membership
//! answer into an explicit certificate.

use std::collections::HashSet;

use super::monomial::{Monomial, MonomialOrder};
use super::poly::{Polynomial, Vars};
use super::Rational;
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Reduction-step counter shared by one computation.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[derive(Debug, Clone)]
pub struct BuchbergerOptions {
    pub budget: u64,
    /// Record how each basis element arises from the input generators.
    pub track: bool,
    /// Return `{1}` as soon as a nonzero constant shows up.
    pub stop_on_unit: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            budget: DEFAULT_BUDGET,
            track: false,
            stop_on_unit: true,
        }
    }
}

#[derive(Debug, Clone)]
struct Tracking {
    originals: Vec<Polynomial>,
    /// `reps[k][i]` is the cofactor of `originals[i]` in `generators[k]`.
    reps: Vec<Vec<Polynomial>>,
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    vars: Vars,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    reduced: bool,
    tracking: Option<Tracking>,
}

impl GroebnerBasis {
    /// Basis of the zero ideal.
    pub fn empty(vars: &Vars, order: &MonomialOrder) -> Self {
        GroebnerBasis {
            vars: vars.clone(),
            order: order.clone(),
            generators: Vec::new(),
            reduced: true,
            tracking: None,
        }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_tracked(&self) -> bool {
        self.tracking.is_some()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    /// Cofactors expressing generator `k` through the original generators.
    pub fn representation(&self, k: usize) -> Option<&[Polynomial]> {
        self.tracking.as_ref().map(|t| t.reps[k].as_slice())
    }
}

/// `S(f, g) = (L / lt(f)) f - (L / lt(g)) g` with `L = lcm(lm f, lm g)`.
pub fn spolynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    f.vars().check_same(g.vars())?;
    let (fm, fc) = f.leading_term(order).ok_or(Error::ZeroPolynomial)?;
    let (gm, gc) = g.leading_term(order).ok_or(Error::ZeroPolynomial)?;
    let l = fm.lcm(gm);
    let a = fm.quotient_of(&l).expect("lcm divisible");
    let b = gm.quotient_of(&l).expect("lcm divisible");
    Ok(f.mul_term(&a, &fc.recip()) - &g.mul_term(&b, &gc.recip()))
}

pub fn buchberger(generators: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(generators, order, &BuchbergerOptions::default())
}

/// Reduced Groebner basis of the ideal spanned by `generators`.
///
/// Pairs are processed smallest-lcm first; pairs with coprime leading
/// monomials and pairs killed by the chain criterion are skipped.
pub fn buchberger_with(
    generators: &[Polynomial],
    order: &MonomialOrder,
    opts: &BuchbergerOptions,
) -> Result<GroebnerBasis> {
    let vars = match generators.first() {
        Some(g) => g.vars().clone(),
        None => return Err(Error::Input("no generators (variable set unknown)".into())),
    };
    for g in generators {
        vars.check_same(g.vars())?;
    }
    let mut budget = Budget::new(opts.budget);
    let n_orig = generators.len();
    let zero = Polynomial::zero(&vars);
    let unit_rep = |i: usize| -> Vec<Polynomial> {
        (0..n_orig)
            .map(|k| if k == i { Polynomial::one(&vars) } else { zero.clone() })
            .collect()
    };

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut reps: Vec<Vec<Polynomial>> = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        basis.push(g.clone());
        if opts.track {
            reps.push(unit_rep(i));
        }
    }

    let finish_unit = |rep: Option<Vec<Polynomial>>, c: Rational| -> GroebnerBasis {
        let inv = c.recip();
        GroebnerBasis {
            vars: vars.clone(),
            order: order.clone(),
            generators: vec![Polynomial::one(&vars)],
            reduced: true,
            tracking: rep.map(|r| Tracking {
                originals: generators.to_vec(),
                reps: vec![r.iter().map(|p| p.scale(&inv)).collect()],
            }),
        }
    };

    if basis.is_empty() {
        return Ok(GroebnerBasis {
            vars: vars.clone(),
            order: order.clone(),
            generators: Vec::new(),
            reduced: true,
            tracking: opts.track.then(|| Tracking {
                originals: generators.to_vec(),
                reps: Vec::new(),
            }),
        });
    }

    if opts.stop_on_unit {
        if let Some(k) = basis.iter().position(|g| g.is_constant()) {
            let c = basis[k].constant_value().unwrap();
            return Ok(finish_unit(opts.track.then(|| reps[k].clone()), c));
        }
    }

    let mut lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).unwrap().clone())
        .collect();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = lms[a.0].lcm(&lms[a.1]);
        let lb = lms[b.0].lcm(&lms[b.1]);
        la.degree()
            .cmp(&lb.degree())
            .then_with(|| order.cmp(&la, &lb))
            .then_with(|| a.cmp(b))
    }) {
        pending.remove(&(i, j));
        let l = lms[i].lcm(&lms[j]);
        if lms[i].is_coprime(&lms[j]) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let (ci, cj) = (
            basis[i].leading_term(order).unwrap().1.clone(),
            basis[j].leading_term(order).unwrap().1.clone(),
        );
        let mi = lms[i].quotient_of(&l).unwrap();
        let mj = lms[j].quotient_of(&l).unwrap();
        let ai = ci.recip();
        let aj = -cj.recip();
        let mut s = basis[i].mul_term(&mi, &ai);
        s.add_scaled(&aj, &mj, &basis[j]);
        let mut rep = if opts.track {
            let mut r: Vec<Polynomial> = reps[i].iter().map(|p| p.mul_term(&mi, &ai)).collect();
            for (r, q) in r.iter_mut().zip(&reps[j]) {
                r.add_scaled(&aj, &mj, q);
            }
            Some(r)
        } else {
            None
        };

        let h = reduce_full(s, &basis, &lms, rep.as_mut(), &reps, order, &mut budget)?;
        if h.is_zero() {
            continue;
        }
        if opts.stop_on_unit && h.is_constant() {
            let c = h.constant_value().unwrap();
            return Ok(finish_unit(rep, c));
        }
        let new = basis.len();
        lms.push(h.leading_monomial(order).unwrap().clone());
        basis.push(h);
        if let Some(r) = rep {
            reps.push(r);
        }
        for k in 0..new {
            pending.insert((k, new));
        }
    }

    let mut gb = GroebnerBasis {
        vars: vars.clone(),
        order: order.clone(),
        generators: basis,
        reduced: false,
        tracking: opts.track.then(|| Tracking {
            originals: generators.to_vec(),
            reps,
        }),
    };
    gb.reduce(&mut budget)?;
    Ok(gb)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Full multivariate division of `p` by `basis`. When `rep` is given it is
/// updated alongside so that it keeps representing `p`.
fn reduce_full(
    mut p: Polynomial,
    basis: &[Polynomial],
    lms: &[Monomial],
    mut rep: Option<&mut Vec<Polynomial>>,
    reps: &[Vec<Polynomial>],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<Polynomial> {
    let mut rem = Polynomial::zero(p.vars());
    loop {
        let (m, c) = match p.leading_term(order) {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Ok(rem),
        };
        match lms.iter().position(|g| g.divides(&m)) {
            Some(k) => {
                budget.tick()?;
                let q = lms[k].quotient_of(&m).unwrap();
                let qc = -(&c / basis[k].leading_term(order).unwrap().1);
                p.add_scaled(&qc, &q, &basis[k]);
                if let Some(r) = rep.as_deref_mut() {
                    for (r, g) in r.iter_mut().zip(&reps[k]) {
                        r.add_scaled(&qc, &q, g);
                    }
                }
            }
            None => {
                p.add_term(m.clone(), -c.clone());
                rem.add_term(m, c);
            }
        }
    }
}

impl GroebnerBasis {
    /// Turn a Groebner basis into the reduced one: drop redundant elements,
    /// reduce tails, normalise to monic and sort by decreasing leading monomial.
    fn reduce(&mut self, budget: &mut Budget) -> Result<()> {
        let order = self.order.clone();
        let lms: Vec<Monomial> = self
            .generators
            .iter()
            .map(|g| g.leading_monomial(&order).unwrap().clone())
            .collect();
        let mut keep: Vec<usize> = Vec::new();
        for i in 0..self.generators.len() {
            let redundant = (0..self.generators.len()).any(|j| {
                j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i)
            });
            if !redundant {
                keep.push(i);
            }
        }
        let mut gens: Vec<Polynomial> = keep.iter().map(|&i| self.generators[i].clone()).collect();
        let mut reps: Option<Vec<Vec<Polynomial>>> = self
            .tracking
            .as_ref()
            .map(|t| keep.iter().map(|&i| t.reps[i].clone()).collect());
        let klms: Vec<Monomial> = keep.iter().map(|&i| lms[i].clone()).collect();

        for idx in 0..gens.len() {
            let g = gens[idx].clone();
            let (lm, lc) = {
                let (m, c) = g.leading_term(&order).unwrap();
                (m.clone(), c.clone())
            };
            let tail = g - &Polynomial::term(&self.vars, lm.clone(), lc.clone());
            let others: Vec<usize> = (0..gens.len()).filter(|&k| k != idx).collect();
            let obasis: Vec<Polynomial> = others.iter().map(|&k| gens[k].clone()).collect();
            let olms: Vec<Monomial> = others.iter().map(|&k| klms[k].clone()).collect();
            let new_tail;
            if let Some(reps) = reps.as_mut() {
                let oreps: Vec<Vec<Polynomial>> = others.iter().map(|&k| reps[k].clone()).collect();
                // r keeps representing lt(g) + (current tail)
                let mut r = reps[idx].clone();
                new_tail = reduce_full(tail, &obasis, &olms, Some(&mut r), &oreps, &order, budget)?;
                reps[idx] = r;
            } else {
                new_tail = reduce_full(tail, &obasis, &olms, None, &[], &order, budget)?;
            }
            let inv = lc.recip();
            gens[idx] = (Polynomial::term(&self.vars, lm, lc) + new_tail).scale(&inv);
            if let Some(reps) = reps.as_mut() {
                reps[idx] = reps[idx].iter().map(|p| p.scale(&inv)).collect();
            }
        }

        let mut perm: Vec<usize> = (0..gens.len()).collect();
        perm.sort_by(|&a, &b| order.cmp(&klms[b], &klms[a]));
        self.generators = perm.iter().map(|&i| gens[i].clone()).collect();
        if let (Some(t), Some(r)) = (self.tracking.as_mut(), reps) {
            t.reps = perm.iter().map(|&i| r[i].clone()).collect();
        }
        self.reduced = true;
        Ok(())
    }
}

/// Remainder of `f` on division by `gb`; zero exactly when `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    normal_form_budgeted(f, gb, &mut Budget::default())
}

pub fn normal_form_budgeted(f: &Polynomial, gb: &GroebnerBasis, budget: &mut Budget) -> Result<Polynomial> {
    gb.vars.check_same(f.vars())?;
    let lms: Vec<Monomial> = gb
        .generators
        .iter()
        .map(|g| g.leading_monomial(&gb.order).unwrap().clone())
        .collect();
    reduce_full(f.clone(), &gb.generators, &lms, None, &[], &gb.order, budget)
}

/// Division of `f` by a tracked basis, returning the remainder and cofactors
/// on `originals` with `f = remainder + sum cofactor_i * originals_i`.
pub fn normal_form_with_cofactors(
    f: &Polynomial,
    gb: &GroebnerBasis,
    originals: &[Polynomial],
) -> Result<(Polynomial, Vec<Polynomial>)> {
    gb.vars.check_same(f.vars())?;
    let tracking = gb.tracking.as_ref().ok_or(Error::TrackingAbsent)?;
    if tracking.originals.as_slice() != originals {
        return Err(Error::TrackingAbsent);
    }
    let vars = &gb.vars;
    let order = &gb.order;
    let lms: Vec<Monomial> = gb
        .generators
        .iter()
        .map(|g| g.leading_monomial(order).unwrap().clone())
        .collect();
    let mut acc: Vec<Polynomial> = vec![Polynomial::zero(vars); originals.len()];
    let rem = reduce_full(
        f.clone(),
        &gb.generators,
        &lms,
        Some(&mut acc),
        &tracking.reps,
        order,
        &mut Budget::default(),
    )?;
    // reduce_full added (-q)*rep for each quotient term q; negate to get +q*rep
    let cofactors: Vec<Polynomial> = acc.into_iter().map(|p| -p).collect();

    let mut check = rem.clone();
    for (c, o) in cofactors.iter().zip(originals) {
        check = check + &(c * o);
    }
    if &check != f {
        return Err(Error::Verification(
            "cofactor re-expansion does not reproduce the input".into(),
        ));
    }
    Ok((rem, cofactors))
}

/// Basis-free helper: is `one` in the ideal, and with which cofactors?
pub(crate) fn express_unit(
    generators: &[Polynomial],
    order: &MonomialOrder,
    budget: u64,
) -> Result<Option<Vec<Polynomial>>> {
    let gb = buchberger_with(
        generators,
        order,
        &BuchbergerOptions {
            budget,
            track: true,
            stop_on_unit: true,
        },
    )?;
    if !gb.is_unit_ideal() {
        return Ok(None);
    }
    let one = Polynomial::one(&gb.vars);
    let (rem, cof) = normal_form_with_cofactors(&one, &gb, generators)?;
    debug_assert!(rem.is_zero());
    Ok(Some(cof))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse::parse_polynomial;
    use num_traits::One;
    use proptest::prelude::*;

    fn p(s: &str, v: &Vars) -> Polynomial {
        parse_polynomial(s, v).unwrap()
    }

    #[test]
    fn spoly_of_divisible_leading_terms_cancels() {
        let v = Vars::new(&["x"]);
        let s = spolynomial(&p("x^2", &v), &p("x", &v), &MonomialOrder::lex()).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn spoly_hand_expansion() {
        let v = Vars::new(&["x", "y"]);
        let s = spolynomial(&p("x^2+y", &v), &p("x*y+1", &v), &MonomialOrder::lex()).unwrap();
        assert_eq!(s, p("y^2 - x", &v));
    }

    #[test]
    fn spoly_identical_inputs_and_zero_rejection() {
        let v = Vars::new(&["x", "y"]);
        let f = p("x*y - 3*y^2 + 1", &v);
        assert!(spolynomial(&f, &f, &MonomialOrder::degrevlex()).unwrap().is_zero());
        assert!(matches!(
            spolynomial(&f, &Polynomial::zero(&v), &MonomialOrder::degrevlex()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn principal_and_single_variable_ideals() {
        let v = Vars::new(&["x"]);
        let gb = buchberger(&[p("x", &v)], &MonomialOrder::degrevlex()).unwrap();
        assert_eq!(gb.generators(), &[p("x", &v)]);

        let v = Vars::new(&["x1", "x2", "x3", "y1", "y2", "y3"]);
        let rel = p("x1*y1+x2*y2+x3*y3-1", &v);
        let gb = buchberger(std::slice::from_ref(&rel), &MonomialOrder::degrevlex()).unwrap();
        assert_eq!(gb.generators(), &[rel]);
        assert!(gb.is_reduced());
    }

    #[test]
    fn circle_and_diagonal() {
        let v = Vars::new(&["x", "y"]);
        let gb = buchberger(&[p("x^2+y^2-1", &v), p("x-y", &v)], &MonomialOrder::degrevlex()).unwrap();
        assert_eq!(gb.generators(), &[p("y^2 - 1/2", &v), p("x - y", &v)]);
    }

    #[test]
    fn sphere_normal_forms() {
        let v = Vars::new(&["x", "y", "z", "w"]);
        let gb = buchberger(&[p("x^2+y^2+z^2+w^2-1", &v)], &MonomialOrder::degrevlex()).unwrap();
        assert_eq!(normal_form(&p("x^2", &v), &gb).unwrap(), p("1-y^2-z^2-w^2", &v));
        assert_eq!(normal_form(&p("1", &v), &gb).unwrap(), p("1", &v));
        let other = Vars::new(&["x"]);
        assert!(matches!(
            normal_form(&p("x", &other), &gb),
            Err(Error::VariableMismatch { .. })
        ));
    }

    #[test]
    fn generator_reduces_to_zero() {
        let v = Vars::new(&["x1", "x2", "x3", "y1", "y2", "y3"]);
        let rel = p("x1*y1+x2*y2+x3*y3-1", &v);
        let gb = buchberger(std::slice::from_ref(&rel), &MonomialOrder::degrevlex()).unwrap();
        assert!(normal_form(&rel, &gb).unwrap().is_zero());
    }

    fn tracked(gens: &[Polynomial]) -> GroebnerBasis {
        buchberger_with(
            gens,
            &MonomialOrder::degrevlex(),
            &BuchbergerOptions {
                track: true,
                ..Default::default()
            },
        )
        .unwrap()
    }

    #[test]
    fn cofactors_of_partition_of_unity() {
        let v = Vars::new(&["x"]);
        let orig = vec![p("x", &v), p("1-x", &v)];
        let gb = tracked(&orig);
        let (r, c) = normal_form_with_cofactors(&p("1", &v), &gb, &orig).unwrap();
        assert!(r.is_zero());
        assert_eq!(c, vec![p("1", &v), p("1", &v)]);
    }

    #[test]
    fn cofactors_for_proper_ideal() {
        let v = Vars::new(&["x", "y", "z", "w"]);
        let orig = vec![p("x^2+y^2+z^2+w^2-1", &v)];
        let gb = tracked(&orig);
        let (r, c) = normal_form_with_cofactors(&p("1", &v), &gb, &orig).unwrap();
        assert_eq!(r, p("1", &v));
        assert_eq!(c, vec![p("0", &v)]);
    }

    #[test]
    fn cofactors_three_generators() {
        let v = Vars::new(&["x", "y"]);
        let orig = vec![p("x", &v), p("y", &v), p("x+y-1", &v)];
        let gb = tracked(&orig);
        let (r, c) = normal_form_with_cofactors(&p("1", &v), &gb, &orig).unwrap();
        assert!(r.is_zero());
        let sum = c
            .iter()
            .zip(&orig)
            .fold(Polynomial::zero(&v), |acc, (a, b)| acc + a * b);
        assert_eq!(sum, p("1", &v));
    }

    #[test]
    fn untracked_basis_refuses_cofactors() {
        let v = Vars::new(&["x"]);
        let orig = vec![p("x", &v)];
        let gb = buchberger(&orig, &MonomialOrder::degrevlex()).unwrap();
        assert!(matches!(
            normal_form_with_cofactors(&p("x", &v), &gb, &orig),
            Err(Error::TrackingAbsent)
        ));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let v = Vars::new(&["x", "y", "z"]);
        let gens = vec![p("x^3 - y*z + 1", &v), p("y^3 - x*z^2", &v), p("z^3 - x^2*y + x", &v)];
        let r = buchberger_with(
            &gens,
            &MonomialOrder::degrevlex(),
            &BuchbergerOptions {
                budget: 5,
                ..Default::default()
            },
        );
        assert!(matches!(r, Err(Error::BudgetExceeded(5))));
    }

    #[test]
    fn tracked_basis_without_early_exit_is_consistent() {
        let v = Vars::new(&["x", "y", "z"]);
        let orig = vec![p("x*y - z", &v), p("y*z - x", &v), p("x*z - y", &v)];
        let gb = buchberger_with(
            &orig,
            &MonomialOrder::degrevlex(),
            &BuchbergerOptions {
                track: true,
                stop_on_unit: false,
                ..Default::default()
            },
        )
        .unwrap();
        for (k, g) in gb.generators().iter().enumerate() {
            let rep = gb.representation(k).unwrap();
            let sum = rep
                .iter()
                .zip(&orig)
                .fold(Polynomial::zero(&v), |acc, (a, b)| acc + a * b);
            assert_eq!(&sum, g);
        }
        let f = p("x^3*y + z^2 - 2*x*y*z", &v);
        let (r, c) = normal_form_with_cofactors(&f, &gb, &orig).unwrap();
        assert_eq!(r, normal_form(&f, &gb).unwrap());
        assert_eq!(c.len(), 3);
    }

    fn arb_poly(v: Vars) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(((0u32..3, 0u32..3), -3i64..4), 1..4).prop_map(move |ts| {
            Polynomial::from_terms(
                &v,
                ts.into_iter().map(|((a, b), c)| {
                    (Monomial::from_exponents(vec![a, b]), Rational::from_integer(c.into()))
                }),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_axioms(f in arb_poly(Vars::new(&["x", "y"])),
                       g in arb_poly(Vars::new(&["x", "y"])),
                       h in arb_poly(Vars::new(&["x", "y"]))) {
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert!((&f * &Polynomial::zero(f.vars())).is_zero());
            if !f.is_zero() && !g.is_zero() {
                prop_assert_eq!((&f * &g).total_degree().unwrap(),
                                f.total_degree().unwrap() + g.total_degree().unwrap());
            }
        }

        #[test]
        fn normal_form_idempotent_and_sound(f in arb_poly(Vars::new(&["x", "y"])),
                                            g1 in arb_poly(Vars::new(&["x", "y"])),
                                            g2 in arb_poly(Vars::new(&["x", "y"]))) {
            let orig = vec![g1, g2];
            let gb = tracked(&orig);
            let nf = normal_form(&f, &gb).unwrap();
            prop_assert_eq!(normal_form(&nf, &gb).unwrap(), nf.clone());
            let (r, c) = normal_form_with_cofactors(&f, &gb, &orig).unwrap();
            prop_assert_eq!(&r, &nf);
            let re = c.iter().zip(&orig).fold(r.clone(), |acc, (a, b)| acc + a * b);
            prop_assert_eq!(re, f);
        }

        #[test]
        fn reduced_basis_is_canonical(g1 in arb_poly(Vars::new(&["x", "y"])),
                                      g2 in arb_poly(Vars::new(&["x", "y"])),
                                      s in 1i64..5) {
            let o = MonomialOrder::degrevlex();
            let a = buchberger(&[g1.clone(), g2.clone()], &o).unwrap();
            let scale = Rational::new(s.into(), 3.into());
            let b = buchberger(&[g2.scale(&-scale.clone()), g1.scale(&scale), &g1 + &g2], &o).unwrap();
            prop_assert_eq!(a.generators(), b.generators());
            for g in a.generators() {
                prop_assert!(g.leading_term(&o).unwrap().1.is_one());
            }
        }
    }
}
