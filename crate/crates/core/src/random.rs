//! Seeded generators for randomized checks: small polynomials, presented
//! rings, rows that are unimodular by construction, and elementary words.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::polyring::{Monomial, MonomialOrder, Polynomial, Rational, Vars};
use crate::quotient::{ring_make, QuotientRing, Ring, RingElement, RingExt};
use crate::rows::{row_make, ElementaryMove, UnimodularRow};

/// A polynomial with up to `max_terms` terms of degree at most `max_deg`
/// and small integer coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, vars: &Vars, max_deg: u32, max_terms: usize) -> Polynomial {
    let n = vars.len();
    let nterms = rng.gen_range(1..=max_terms);
    let mut p = Polynomial::zero(vars);
    for _ in 0..nterms {
        let deg = rng.gen_range(0..=max_deg);
        let mut e = vec![0u32; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        let c: i64 = rng.gen_range(-3..=3);
        p.add_term(Monomial::from_exponents(e), Rational::from_integer(c.into()));
    }
    p
}

pub fn random_element<R: Rng>(rng: &mut R, ring: &Ring, max_deg: u32, max_terms: usize) -> RingElement {
    let p = random_poly(rng, ring.vars(), max_deg, max_terms);
    ring.from_poly(&p).expect("small element reduces within budget")
}

/// One of a handful of presentation shapes: a free ring, a principal
/// quadric (sphere, `Q_5`-style, random), or a random principal relation
/// with a nonconstant leading term.
pub fn random_ring<R: Rng>(rng: &mut R) -> Ring {
    match rng.gen_range(0..5) {
        0 => QuotientRing::free(&["x", "y", "z"]),
        1 => crate::quotient::sphere3_ring(&["x", "y", "z", "w"]),
        2 => ring_make(
            &["x1", "x2", "x3", "y1", "y2", "y3"],
            &["x1*y1 + x2*y2 + x3*y3 - 1"],
            MonomialOrder::degrevlex(),
        )
        .expect("Q5"),
        _ => {
            let vars = Vars::new(&["x", "y", "z"]);
            loop {
                let rel = random_poly(rng, &vars, 3, 4);
                if rel.total_degree().unwrap_or(0) == 0 {
                    continue;
                }
                let ring = QuotientRing::new(vars.clone(), vec![rel], MonomialOrder::degrevlex())
                    .expect("principal ideal");
                if !ring.is_trivial() {
                    return ring;
                }
            }
        }
    }
}

/// A row unimodular by construction: pick `a_2..a_n` and `c_2..c_n` freely
/// and set `a_1 = 1 - sum c_i a_i`, so `(1, c_2, ..., c_n)` certifies it.
/// The entries are then shuffled.
pub fn constructed_row<R: Rng>(rng: &mut R, ring: &Ring, n: usize) -> UnimodularRow {
    let (a, b) = constructed_entries(rng, ring, n);
    row_make(ring, a, Some(b)).expect("constructed row is certified")
}

pub fn constructed_entries<R: Rng>(
    rng: &mut R,
    ring: &Ring,
    n: usize,
) -> (Vec<RingElement>, Vec<RingElement>) {
    let mut a = vec![ring.zero(); n];
    let mut b = vec![ring.zero(); n];
    b[0] = ring.one();
    let mut first = ring.one();
    for k in 1..n {
        a[k] = random_element(rng, ring, 2, 3);
        b[k] = random_element(rng, ring, 1, 2);
        first = &first - &(&a[k] * &b[k]);
    }
    a[0] = first;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    (
        perm.iter().map(|&k| a[k].clone()).collect(),
        perm.iter().map(|&k| b[k].clone()).collect(),
    )
}

pub fn random_move<R: Rng>(rng: &mut R, ring: &Ring, n: usize) -> ElementaryMove {
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    ElementaryMove::new(i, j, random_element(rng, ring, 2, 2)).expect("distinct indices")
}

pub fn random_word<R: Rng>(rng: &mut R, ring: &Ring, n: usize, len: usize) -> Vec<ElementaryMove> {
    (0..len).map(|_| random_move(rng, ring, n)).collect()
}
