//! Oracles that recompute expected values without going through the
//! library code paths they check.

#![allow(dead_code, clippy::needless_range_loop)]

use std::f64::consts::PI;

use vaserstein::polyring::{rat, Rational};
use vaserstein::quotient::{RingElement, RingExt};

pub type Q = Rational;

/// `(2t, |t|^2 - 1) / (|t|^2 + 1)`: a rational point of `S^3`.
pub fn sphere_point(t: &[Q; 3]) -> [Q; 4] {
    let s: Q = t.iter().map(|x| x * x).sum();
    let d = &s + rat(1);
    let two = rat(2);
    [
        &two * &t[0] / &d,
        &two * &t[1] / &d,
        &two * &t[2] / &d,
        (&s - rat(1)) / &d,
    ]
}

/// 2x2 product over the rationals.
pub fn mul2(m: &[[Q; 2]; 2], n: &[[Q; 2]; 2]) -> [[Q; 2]; 2] {
    let e = |i: usize, j: usize| &m[i][0] * &n[0][j] + &m[i][1] * &n[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn det2(m: &[[Q; 2]; 2]) -> Q {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

/// `(MN, det M)` read as `(x1, x2, y1, y2, z)` for `[[x1, x2], [-y2, y1]]`.
pub fn f_via_matrices(a: &[Q; 4], b: &[Q; 4]) -> [Q; 5] {
    let m = [[a[0].clone(), a[1].clone()], [-b[1].clone(), b[0].clone()]];
    let n = [[a[2].clone(), a[3].clone()], [-b[3].clone(), b[2].clone()]];
    let p = mul2(&m, &n);
    [
        p[0][0].clone(),
        p[0][1].clone(),
        p[1][1].clone(),
        -p[1][0].clone(),
        det2(&m),
    ]
}

/// The Hopf map written out by hand.
pub fn hopf(x: &[Q; 4]) -> [Q; 3] {
    let two = rat(2);
    [
        &two * (&x[0] * &x[2] - &x[1] * &x[3]),
        &two * (&x[0] * &x[3] + &x[1] * &x[2]),
        &x[2] * &x[2] + &x[3] * &x[3] - &x[0] * &x[0] - &x[1] * &x[1],
    ]
}

/// `H(a, b)` from `f` then `(2x1, 2x2, 1 - 2z)`, with its certificate
/// `(2y1, 2y2, 1 - 2z)`, over ring elements.
pub fn h_with_certificate(a: &[RingElement], b: &[RingElement]) -> (Vec<RingElement>, Vec<RingElement>) {
    let ring = a[0].ring();
    let two = ring.int(2);
    let one = ring.one();
    let x1 = &(&a[0] * &a[2]) - &(&a[1] * &b[3]);
    let x2 = &(&a[0] * &a[3]) + &(&a[1] * &b[2]);
    let y1 = &(&b[0] * &b[2]) - &(&a[3] * &b[1]);
    let y2 = &(&a[2] * &b[1]) + &(&b[0] * &b[3]);
    let z = &(&a[0] * &b[0]) + &(&a[1] * &b[1]);
    let w = &one - &(&two * &z);
    (vec![&two * &x1, &two * &x2, w.clone()], vec![&two * &y1, &two * &y2, w])
}


/// Sum of products.
pub fn pairing(a: &[RingElement], b: &[RingElement]) -> RingElement {
    let ring = a[0].ring();
    a.iter().zip(b).fold(ring.zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Pfaffian of a 4x4 alternating matrix from its three matchings.
pub fn pf4(m: &[Vec<RingElement>]) -> RingElement {
    &(&(&m[0][1] * &m[2][3]) - &(&m[0][2] * &m[1][3])) + &(&m[0][3] * &m[1][2])
}

pub type IMat = [[i64; 4]; 4];

pub fn imul(a: &IMat, b: &IMat) -> IMat {
    let mut c = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            c[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

pub fn itranspose(a: &IMat) -> IMat {
    let mut t = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            t[i][j] = a[j][i];
        }
    }
    t
}

/// All 384 signed 4x4 permutation matrices.
pub fn signed_permutations() -> Vec<IMat> {
    let mut perms = Vec::new();
    let mut p = [0usize, 1, 2, 3];
    permute(&mut p, 0, &mut perms);
    let mut out = Vec::new();
    for p in perms {
        for signs in 0..16u32 {
            let mut e = [[0; 4]; 4];
            for i in 0..4 {
                e[i][p[i]] = if signs >> i & 1 == 1 { -1 } else { 1 };
            }
            out.push(e);
        }
    }
    out
}

fn permute(p: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 4 {
        out.push(*p);
        return;
    }
    for i in k..4 {
        p.swap(k, i);
        permute(p, k + 1, out);
        p.swap(k, i);
    }
}

/// `E` with `E^T m E = target`, by exhaustive search.
pub fn congruence_witnesses(m: &IMat, target: &IMat) -> Vec<IMat> {
    signed_permutations()
        .into_iter()
        .filter(|e| imul(&imul(&itranspose(e), m), e) == *target)
        .collect()
}

fn det4(m: &[[f64; 4]; 4]) -> f64 {
    // Laplace expansion along the first row
    let minor = |c: usize| -> f64 {
        let mut s = [[0.0; 3]; 3];
        for i in 1..4 {
            let mut k = 0;
            for j in 0..4 {
                if j != c {
                    s[i - 1][k] = m[i][j];
                    k += 1;
                }
            }
        }
        s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1]) - s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0])
            + s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0])
    };
    (0..4).map(|c| if c % 2 == 0 { 1.0 } else { -1.0 } * m[0][c] * minor(c)).sum()
}

fn dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    (0..4).map(|k| a[k] * b[k]).sum()
}

/// Gauss linking integral of the Hopf fibres over `(0, 0, 1)` and
/// `(0, 0, -1)`, from their parametrizations and exact tangents, charted
/// stereographically from `(1, 1, 1, 1) / 2` with a positively oriented
/// basis, integrated by the periodic trapezoid rule on `n x n` nodes.
pub fn analytic_hopf_linking(n: usize) -> f64 {
    let p = [0.5; 4];
    let r2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut b = [
        [r2, -r2, 0.0, 0.0],
        [0.0, 0.0, r2, -r2],
        [0.5, 0.5, -0.5, -0.5],
    ];
    if det4(&[p, b[0], b[1], b[2]]) < 0.0 {
        b[2] = b[2].map(|c| -c);
    }
    let chart = |x: [f64; 4], dx: [f64; 4]| -> ([f64; 3], [f64; 3]) {
        let d = 1.0 - dot(&p, &x);
        let dp = dot(&p, &dx);
        let y = b.map(|bk| dot(&bk, &x) / d);
        let dy = b.map(|bk| dot(&bk, &dx) / d + dot(&bk, &x) * dp / (d * d));
        (y, dy)
    };
    let h = 2.0 * PI / n as f64;
    let north: Vec<_> = (0..n)
        .map(|k| {
            let t = k as f64 * h;
            chart([0.0, 0.0, t.cos(), t.sin()], [0.0, 0.0, -t.sin(), t.cos()])
        })
        .collect();
    let south: Vec<_> = (0..n)
        .map(|k| {
            let t = k as f64 * h;
            chart([t.cos(), -t.sin(), 0.0, 0.0], [-t.sin(), -t.cos(), 0.0, 0.0])
        })
        .collect();
    let mut total = 0.0;
    for (y1, d1) in &north {
        for (y2, d2) in &south {
            let r = [y1[0] - y2[0], y1[1] - y2[1], y1[2] - y2[2]];
            let c = [
                d1[1] * d2[2] - d1[2] * d2[1],
                d1[2] * d2[0] - d1[0] * d2[2],
                d1[0] * d2[1] - d1[1] * d2[0],
            ];
            let nr = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
            total += (r[0] * c[0] + r[1] * c[1] + r[2] * c[2]) / (nr * nr * nr);
        }
    }
    total * h * h / (4.0 * PI)
}
