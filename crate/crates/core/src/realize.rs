//! Real points: floating-point evaluation of polynomial maps, sampled
//! nonvanishing checks on `S^3`, preimage tracing and the Gauss linking
//! number of two fibres of a map `S^3 -> S^2`.
//!
//! Orientation conventions (they fix the sign of the Hopf invariant):
//! a fibre over `v` is oriented by the generalized cross product of the
//! gradients of `u1.F`, `u2.F`, `|x|^2` where `(u1, u2, v)` is the
//! orthonormal frame built by [`frame`]; the chart is stereographic
//! projection from the chosen pole onto `p^perp` with the Gram-Schmidt basis
//! of the remaining standard vectors. Only `|linking|` is intrinsic.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, Rational};

/// A point of `R^n`; coordinates are always finite.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPoint(Vec<f64>);

impl RealPoint {
    pub fn new(coords: Vec<f64>) -> Result<RealPoint> {
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::Input(format!("non-finite coordinate in {coords:?}")));
        }
        Ok(RealPoint(coords))
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Parse `"0,0,1"`.
    pub fn parse(text: &str) -> Result<RealPoint> {
        let coords = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::Input(format!("bad coordinate {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        RealPoint::new(coords)
    }
}

/// Nested Horner form: `sum_k coeffs[k] * x_var^k`, each coefficient a
/// polynomial in the later variables.
#[derive(Clone, Debug)]
enum Horner {
    Const(f64),
    Var { var: usize, coeffs: Vec<Horner> },
}

impl Horner {
    fn build(terms: &[(Vec<u32>, f64)], var: usize, nvars: usize) -> Horner {
        if var == nvars {
            return Horner::Const(terms.iter().map(|t| t.1).sum());
        }
        let top = terms.iter().map(|t| t.0[var]).max().unwrap_or(0);
        if top == 0 {
            return Horner::build(terms, var + 1, nvars);
        }
        let coeffs = (0..=top)
            .map(|e| {
                let slice: Vec<_> = terms.iter().filter(|t| t.0[var] == e).cloned().collect();
                Horner::build(&slice, var + 1, nvars)
            })
            .collect();
        Horner::Var { var, coeffs }
    }

    fn eval(&self, x: &[f64]) -> f64 {
        match self {
            Horner::Const(c) => *c,
            Horner::Var { var, coeffs } => coeffs
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * x[*var] + c.eval(x)),
        }
    }
}

fn derivative(p: &Polynomial, k: usize) -> Polynomial {
    let mut out = Polynomial::zero(p.vars());
    for (m, c) in p.terms() {
        let e = m.exponents();
        if e[k] == 0 {
            continue;
        }
        let mut d = e.to_vec();
        d[k] -= 1;
        out.add_term(Monomial::from_exponents(d), c * Rational::from_integer(e[k].into()));
    }
    out
}

/// A polynomial map `R^n -> R^m` compiled for floating-point evaluation,
/// together with its Jacobian.
#[derive(Clone, Debug)]
pub struct NumericMap {
    exact: Vec<Polynomial>,
    components: Vec<Horner>,
    jacobian: Vec<Vec<Horner>>,
    source_dim: usize,
}

impl NumericMap {
    pub fn new(components: &[Polynomial]) -> Result<NumericMap> {
        let first = components
            .first()
            .ok_or_else(|| Error::Input("a map needs at least one component".into()))?;
        let vars = first.vars().clone();
        for c in components {
            vars.check_same(c.vars())?;
        }
        let n = vars.len();
        let compile = |p: &Polynomial| Horner::build(&p.float_terms(), 0, n);
        Ok(NumericMap {
            exact: components.to_vec(),
            components: components.iter().map(compile).collect(),
            jacobian: components
                .iter()
                .map(|p| (0..n).map(|k| compile(&derivative(p, k))).collect())
                .collect(),
            source_dim: n,
        })
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.components.len()
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.exact
    }

    fn check_dim(&self, p: &[f64]) -> Result<()> {
        if p.len() != self.source_dim {
            return Err(Error::DimensionMismatch {
                expected: self.source_dim,
                got: p.len(),
            });
        }
        Ok(())
    }

    fn eval_raw(&self, x: &[f64]) -> Vec<f64> {
        self.components.iter().map(|h| h.eval(x)).collect()
    }

    fn jacobian_raw(&self, x: &[f64]) -> Vec<Vec<f64>> {
        self.jacobian
            .iter()
            .map(|row| row.iter().map(|h| h.eval(x)).collect())
            .collect()
    }

    pub fn evaluate(&self, p: &RealPoint) -> Result<RealPoint> {
        self.check_dim(p.coords())?;
        RealPoint::new(self.eval_raw(p.coords()))
    }

    /// Largest relative gap between float evaluation and exact rational
    /// evaluation at a rational point.
    pub fn exactness_gap(&self, point: &[Rational]) -> Result<f64> {
        use num_traits::ToPrimitive;
        let x: Vec<f64> = point.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect();
        self.check_dim(&x)?;
        let approx = self.eval_raw(&x);
        let mut worst = 0.0f64;
        for (p, a) in self.exact.iter().zip(approx) {
            let e = p.eval_rational(point)?.to_f64().unwrap_or(f64::NAN);
            worst = worst.max((a - e).abs() / e.abs().max(1.0));
        }
        Ok(worst)
    }
}

/// Points of `S^3` from the 4D Halton sequence (bases 2, 3, 5, 7), kept when
/// they fall in the unit ball away from the origin, then normalized.
pub fn sphere_samples(count: usize) -> Vec<[f64; 4]> {
    let mut out = Vec::with_capacity(count);
    let mut index = 1usize;
    while out.len() < count {
        let p = [2u8, 3, 5, 7].map(|b| 2.0 * halton::number(b, index) - 1.0);
        index += 1;
        let r = norm(&p);
        if !(1e-3..=1.0).contains(&r) {
            continue;
        }
        out.push(p.map(|c| c / r));
    }
    out
}

/// Smallest target norm over `samples` points of `S^3`, with its argmin.
pub fn certify_nonvanishing(map: &NumericMap, samples: usize) -> Result<(f64, RealPoint)> {
    if map.source_dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: map.source_dim(),
        });
    }
    if samples < 1000 {
        return Err(Error::Input(format!("need at least 1000 samples, got {samples}")));
    }
    let mut best = (f64::INFINITY, [0.0; 4]);
    for x in sphere_samples(samples) {
        let v = norm(&map.eval_raw(&x));
        if v < best.0 {
            best = (v, x);
        }
    }
    Ok((best.0, RealPoint::new(best.1.to_vec())?))
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().sqrt()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub4(a: &[f64; 4], b: &[f64; 4]) -> [f64; 4] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn det4(m: &[[f64; 4]; 4]) -> f64 {
    // det(m1, m2, m3, m0) = -det(m0, m1, m2, m3)
    let rows = [m[1], m[2], m[3]];
    -dot(&m[0], &cross4(&rows))
}

/// The vector `t` with `t.w = det(r1, r2, r3, w)`; orthogonal to all rows,
/// `|t|^2` is the Gram determinant.
fn cross4(r: &[[f64; 4]; 3]) -> [f64; 4] {
    let mut t = [0.0; 4];
    for (k, tk) in t.iter_mut().enumerate() {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in r.iter().enumerate() {
            let mut c = 0;
            for (j, &x) in row.iter().enumerate() {
                if j != k {
                    m[i][c] = x;
                    c += 1;
                }
            }
        }
        let sign = if (k + 3) % 2 == 0 { 1.0 } else { -1.0 };
        *tk = sign * det3(&m);
    }
    t
}

/// An orthonormal frame `(u1, u2, v)` of `R^3` with `v` the given unit vector.
pub fn frame(v: &[f64; 3]) -> ([f64; 3], [f64; 3]) {
    let k = (0..3)
        .min_by(|&a, &b| v[a].abs().total_cmp(&v[b].abs()))
        .unwrap();
    let mut e = [0.0; 3];
    e[k] = 1.0;
    let d = dot(&e, v);
    let mut u1 = [e[0] - d * v[0], e[1] - d * v[1], e[2] - d * v[2]];
    let n = norm(&u1);
    u1 = u1.map(|c| c / n);
    let u2 = [
        v[1] * u1[2] - v[2] * u1[1],
        v[2] * u1[0] - v[0] * u1[2],
        v[0] * u1[1] - v[1] * u1[0],
    ];
    (u1, u2)
}

/// The system `(u1.F, u2.F, |x|^2 - 1) = 0` cutting out one fibre.
struct FibreSystem<'a> {
    map: &'a NumericMap,
    u1: [f64; 3],
    u2: [f64; 3],
    v: [f64; 3],
}

const NEWTON_TOL: f64 = 1e-13;
const REGULARITY_TOL: f64 = 1e-7;

impl FibreSystem<'_> {
    fn residual(&self, x: &[f64; 4]) -> [f64; 3] {
        let f = self.map.eval_raw(x);
        [dot(&self.u1, &f), dot(&self.u2, &f), dot(x, x) - 1.0]
    }

    fn jacobian(&self, x: &[f64; 4]) -> [[f64; 4]; 3] {
        let df = self.map.jacobian_raw(x);
        let mut j = [[0.0; 4]; 3];
        for k in 0..4 {
            j[0][k] = (0..3).map(|i| self.u1[i] * df[i][k]).sum();
            j[1][k] = (0..3).map(|i| self.u2[i] * df[i][k]).sum();
            j[2][k] = 2.0 * x[k];
        }
        j
    }

    fn on_branch(&self, x: &[f64; 4]) -> bool {
        dot(&self.v, &self.map.eval_raw(x)) > 0.0
    }

    /// Unit tangent, or `None` where the rows are nearly dependent.
    fn tangent(&self, x: &[f64; 4]) -> Option<[f64; 4]> {
        let j = self.jacobian(x);
        let t = cross4(&j);
        let scale: f64 = j.iter().map(|r| norm(r)).product();
        let n = norm(&t);
        if scale == 0.0 || n / scale < REGULARITY_TOL {
            return None;
        }
        Some(t.map(|c| c / n))
    }

    /// Minimal-norm Newton iteration onto the fibre.
    fn project(&self, mut x: [f64; 4]) -> Option<[f64; 4]> {
        for _ in 0..40 {
            let g = self.residual(&x);
            if norm(&g) < NEWTON_TOL {
                return Some(x);
            }
            let j = self.jacobian(&x);
            let mut jj = [[0.0; 3]; 3];
            for a in 0..3 {
                for b in 0..3 {
                    jj[a][b] = dot(&j[a], &j[b]);
                }
            }
            let d = det3(&jj);
            if d.abs() < 1e-300 {
                return None;
            }
            let mut y = [0.0; 3];
            for (c, yc) in y.iter_mut().enumerate() {
                let mut m = jj;
                for r in 0..3 {
                    m[r][c] = g[r];
                }
                *yc = det3(&m) / d;
            }
            for k in 0..4 {
                x[k] -= (0..3).map(|a| j[a][k] * y[a]).sum::<f64>();
            }
            if !x.iter().all(|c| c.is_finite()) {
                return None;
            }
        }
        (norm(&self.residual(&x)) < 1e3 * NEWTON_TOL).then_some(x)
    }
}

/// A traced fibre: the closed polyline on `S^3` and its image in the chart.
#[derive(Clone, Debug)]
pub struct LevelCurve {
    /// Vertices on `S^3`; the last equals the first.
    pub sphere: Vec<[f64; 4]>,
    /// The same vertices in the stereographic chart.
    pub chart: Vec<[f64; 3]>,
    /// Largest spacing between consecutive sphere vertices.
    pub step: f64,
}

impl LevelCurve {
    pub fn points(&self) -> Vec<RealPoint> {
        self.chart.iter().map(|p| RealPoint(p.to_vec())).collect()
    }
}

fn unit_value(value: &RealPoint) -> Result<[f64; 3]> {
    if value.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: value.dim(),
        });
    }
    let n = value.norm();
    if n < 1e-12 {
        return Err(Error::Input("value must be a nonzero vector".into()));
    }
    let c = value.coords();
    Ok([c[0] / n, c[1] / n, c[2] / n])
}

fn check_sphere_map(map: &NumericMap) -> Result<()> {
    if map.source_dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: map.source_dim(),
        });
    }
    if map.target_dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: map.target_dim(),
        });
    }
    Ok(())
}

const SEED_SAMPLES: usize = 4096;
const SEED_TRIES: usize = 16;

fn find_seed(sys: &FibreSystem) -> Result<[f64; 4]> {
    let mut scored: Vec<(f64, [f64; 4])> = sphere_samples(SEED_SAMPLES)
        .into_iter()
        .filter_map(|x| {
            let f = sys.map.eval_raw(&x);
            let n = norm(&f);
            (n > 0.0).then(|| (1.0 - dot(&sys.v, &f) / n, x))
        })
        .collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    for (_, x) in scored.into_iter().take(SEED_TRIES) {
        if let Some(y) = sys.project(x) {
            if sys.on_branch(&y) && sys.tangent(&y).is_some() {
                return Ok(y);
            }
        }
    }
    Err(Error::IrregularValue(format!(
        "no regular preimage of ({}, {}, {}) found",
        sys.v[0], sys.v[1], sys.v[2]
    )))
}

/// Trace the fibre over `value` on `S^3` with about `grid` vertices per unit
/// great circle (nominal step `2 pi / grid`).
pub fn trace_fibre(map: &NumericMap, value: &RealPoint, grid: usize) -> Result<Vec<[f64; 4]>> {
    check_sphere_map(map)?;
    if grid < 8 {
        return Err(Error::Input(format!("grid must be at least 8, got {grid}")));
    }
    let v = unit_value(value)?;
    let (u1, u2) = frame(&v);
    let sys = FibreSystem { map, u1, u2, v };
    let x0 = find_seed(&sys)?;
    let h = 2.0 * PI / grid as f64;
    let budget = 64 * grid;
    let mut pts = vec![x0];
    let mut x = x0;
    let mut t = sys.tangent(&x0).expect("seed is regular");
    for _ in 0..budget {
        let mut step = h;
        let next = loop {
            let pred = [0, 1, 2, 3].map(|k| x[k] + step * t[k]);
            if let Some(y) = sys.project(pred) {
                let moved = sub4(&y, &x);
                let drift = norm(&sub4(&y, &pred));
                if sys.on_branch(&y) && dot(&moved, &t) > 0.0 && drift <= 0.3 * step {
                    break y;
                }
            }
            step *= 0.5;
            if step < h * 1e-4 {
                return Err(Error::IrregularValue(format!(
                    "tracing stalled near ({:.6}, {:.6}, {:.6}, {:.6})",
                    x[0], x[1], x[2], x[3]
                )));
            }
        };
        let mut tn = sys.tangent(&next).ok_or_else(|| {
            Error::IrregularValue(format!(
                "rank drop near ({:.6}, {:.6}, {:.6}, {:.6})",
                next[0], next[1], next[2], next[3]
            ))
        })?;
        if dot(&tn, &t) < 0.0 {
            tn = tn.map(|c| -c);
        }
        x = next;
        t = tn;
        pts.push(x);
        let back = sub4(&x0, &x);
        if pts.len() >= 4 && norm(&back) <= h && dot(&back, &t) > 0.0 {
            pts.push(x0);
            return Ok(pts);
        }
    }
    Err(Error::OpenCurve(budget))
}

fn max_step(pts: &[[f64; 4]]) -> f64 {
    pts.windows(2)
        .map(|w| norm(&sub4(&w[1], &w[0])))
        .fold(0.0, f64::max)
}

/// Stereographic projection from `pole` onto `pole^perp`.
pub struct Chart {
    pole: [f64; 4],
    basis: [[f64; 4]; 3],
}

impl Chart {
    pub fn new(pole: [f64; 4]) -> Chart {
        let mut basis: Vec<[f64; 4]> = Vec::with_capacity(3);
        let mut candidates: Vec<usize> = (0..4).collect();
        candidates.sort_by(|&a, &b| pole[a].abs().total_cmp(&pole[b].abs()));
        for k in candidates.into_iter().take(3) {
            let mut e = [0.0; 4];
            e[k] = 1.0;
            let mut w = e;
            for b in std::iter::once(&pole).chain(basis.iter()) {
                let d = dot(&w, b);
                w = [0, 1, 2, 3].map(|i| w[i] - d * b[i]);
            }
            let n = norm(&w);
            basis.push(w.map(|c| c / n));
        }
        // det(p, b1, b2, b3) = +1 keeps the chart orientation independent of the pole
        if det4(&[pole, basis[0], basis[1], basis[2]]) < 0.0 {
            basis[2] = basis[2].map(|c| -c);
        }
        Chart {
            pole,
            basis: [basis[0], basis[1], basis[2]],
        }
    }

    pub fn pole(&self) -> [f64; 4] {
        self.pole
    }

    pub fn project(&self, x: &[f64; 4]) -> Result<[f64; 3]> {
        let denom = 1.0 - dot(x, &self.pole);
        if denom < 1e-9 {
            return Err(Error::ChartEscape);
        }
        Ok(self.basis.map(|b| dot(x, &b) / denom))
    }

    pub fn antipodal(&self) -> Chart {
        Chart::new(self.pole.map(|c| -c))
    }
}

/// The pole farthest from all given points among a fixed candidate set.
pub fn choose_pole(curves: &[&[[f64; 4]]]) -> [f64; 4] {
    let mut candidates = sphere_samples(2048);
    for k in 0..4 {
        for s in [1.0, -1.0] {
            let mut e = [0.0; 4];
            e[k] = s;
            candidates.push(e);
        }
    }
    let mut best = (-1.0, candidates[0]);
    for p in candidates {
        let d = curves
            .iter()
            .flat_map(|c| c.iter())
            .map(|x| norm(&sub4(x, &p)))
            .fold(f64::INFINITY, f64::min);
        if d > best.0 {
            best = (d, p);
        }
    }
    best.1
}

fn chart_curves(curves: &[&[[f64; 4]]]) -> Result<Vec<Vec<[f64; 3]>>> {
    let chart = Chart::new(choose_pole(curves));
    let attempt = |c: &Chart| -> Result<Vec<Vec<[f64; 3]>>> {
        curves
            .iter()
            .map(|pts| pts.iter().map(|x| c.project(x)).collect())
            .collect()
    };
    match attempt(&chart) {
        Err(Error::ChartEscape) => attempt(&chart.antipodal()),
        other => other,
    }
}

/// The fibre of `map / |map|` over `value`, charted from a pole far from it.
pub fn preimage_curve(map: &NumericMap, value: &RealPoint, grid: usize) -> Result<LevelCurve> {
    let sphere = trace_fibre(map, value, grid)?;
    let chart = chart_curves(&[&sphere])?.remove(0);
    Ok(LevelCurve {
        step: max_step(&sphere),
        sphere,
        chart,
    })
}

/// Gauss linking integral of two closed polylines, by the midpoint rule on
/// every pair of segments.
pub fn linking_integral(a: &[[f64; 3]], b: &[[f64; 3]]) -> f64 {
    let segs = |c: &[[f64; 3]]| -> Vec<([f64; 3], [f64; 3])> {
        c.windows(2)
            .map(|w| {
                let d = [w[1][0] - w[0][0], w[1][1] - w[0][1], w[1][2] - w[0][2]];
                let m = [
                    0.5 * (w[1][0] + w[0][0]),
                    0.5 * (w[1][1] + w[0][1]),
                    0.5 * (w[1][2] + w[0][2]),
                ];
                (m, d)
            })
            .collect()
    };
    let sa = segs(a);
    let sb = segs(b);
    let mut total = 0.0;
    for (m1, d1) in &sa {
        for (m2, d2) in &sb {
            let r = [m1[0] - m2[0], m1[1] - m2[1], m1[2] - m2[2]];
            let c = [
                d1[1] * d2[2] - d1[2] * d2[1],
                d1[2] * d2[0] - d1[0] * d2[2],
                d1[0] * d2[1] - d1[1] * d2[0],
            ];
            let n = norm(&r);
            total += dot(&r, &c) / (n * n * n);
        }
    }
    total / (4.0 * PI)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HopfInvariant {
    pub linking: i64,
    /// `|L - linking|`.
    pub residual: f64,
    /// The raw integral `L`.
    pub integral: f64,
    /// Grid at which the residual was accepted.
    pub grid: usize,
}

pub const RESIDUAL_LIMIT: f64 = 0.2;
pub const MAX_DOUBLINGS: u32 = 3;

/// Linking number of the fibres over `v1` and `v2` at one fixed grid.
pub fn linking_at(map: &NumericMap, v1: &RealPoint, v2: &RealPoint, grid: usize) -> Result<f64> {
    check_sphere_map(map)?;
    let (a, b) = (unit_value(v1)?, unit_value(v2)?);
    if norm(&[a[0] - b[0], a[1] - b[1], a[2] - b[2]]) < 1e-9 {
        return Err(Error::Input("the two values must be distinct".into()));
    }
    let c1 = trace_fibre(map, v1, grid)?;
    let c2 = trace_fibre(map, v2, grid)?;
    let charted = chart_curves(&[&c1, &c2])?;
    Ok(linking_integral(&charted[0], &charted[1]))
}

/// Hopf invariant of `map / |map| : S^3 -> S^2` as the rounded linking
/// number of two fibres; the grid is doubled up to [`MAX_DOUBLINGS`] times
/// until the residual is at most [`RESIDUAL_LIMIT`].
pub fn hopf_invariant(
    map: &NumericMap,
    v1: &RealPoint,
    v2: &RealPoint,
    grid: usize,
) -> Result<HopfInvariant> {
    let mut g = grid;
    let mut last = (f64::NAN, f64::INFINITY);
    for _ in 0..=MAX_DOUBLINGS {
        let l = linking_at(map, v1, v2, g)?;
        let k = l.round();
        let residual = (l - k).abs();
        if residual <= RESIDUAL_LIMIT {
            return Ok(HopfInvariant {
                linking: k as i64,
                residual,
                integral: l,
                grid: g,
            });
        }
        last = (l, residual);
        g *= 2;
    }
    Err(Error::ResidualTooLarge {
        linking: last.0,
        residual: last.1,
        limit: RESIDUAL_LIMIT,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, ratio, Vars};
    use crate::spheres::HOPF_FORMULA;

    fn vars4() -> Vars {
        Vars::new(&["x1", "x2", "x3", "x4"])
    }

    fn map_of(texts: &[&str]) -> NumericMap {
        let v = vars4();
        let polys: Vec<_> = texts.iter().map(|t| parse_polynomial(t, &v).unwrap()).collect();
        NumericMap::new(&polys).unwrap()
    }

    fn hopf() -> NumericMap {
        map_of(&HOPF_FORMULA)
    }

    fn pt(c: &[f64]) -> RealPoint {
        RealPoint::new(c.to_vec()).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let h = hopf();
        assert_eq!(h.evaluate(&pt(&[1.0, 0.0, 0.0, 0.0])).unwrap(), pt(&[0.0, 0.0, -1.0]));
        assert_eq!(h.evaluate(&pt(&[0.0, 0.0, 1.0, 0.0])).unwrap(), pt(&[0.0, 0.0, 1.0]));
        let zero = map_of(&["0", "0", "0"]);
        assert_eq!(zero.evaluate(&pt(&[0.3, 1.0, 2.0, 5.0])).unwrap(), pt(&[0.0, 0.0, 0.0]));
        assert!(matches!(
            h.evaluate(&pt(&[1.0, 0.0])),
            Err(Error::DimensionMismatch { expected: 4, got: 2 })
        ));
    }

    #[test]
    fn exact_bridge() {
        let m = map_of(&["1/3*x1^3*x2 - 7/5*x4 + 2", "x1*x2*x3*x4 - 1/7", "x2^5"]);
        let p = [ratio(1, 3), ratio(-5, 7), ratio(11, 13), ratio(2, 9)];
        assert!(m.exactness_gap(&p).unwrap() < 1e-12);
        assert!(hopf().exactness_gap(&p).unwrap() < 1e-12);
    }

    #[test]
    fn nonvanishing_examples() {
        let (m, arg) = certify_nonvanishing(&hopf(), 10_000).unwrap();
        assert!((m - 1.0).abs() < 1e-9);
        assert!((arg.norm() - 1.0).abs() < 1e-12);
        let (m, _) = certify_nonvanishing(&map_of(&["x1", "x2", "x3"]), 10_000).unwrap();
        assert!(m < 0.1, "projection min norm {m}");
        let (m, _) = certify_nonvanishing(&map_of(&["1", "0", "0"]), 1000).unwrap();
        assert_eq!(m, 1.0);
        assert!(certify_nonvanishing(&hopf(), 10).is_err());
    }

    #[test]
    fn hopf_fibres_are_great_circles() {
        let north = preimage_curve(&hopf(), &pt(&[0.0, 0.0, 1.0]), 64).unwrap();
        for x in &north.sphere {
            assert!(x[0].abs() < 1e-6 && x[1].abs() < 1e-6);
            assert!((x[2] * x[2] + x[3] * x[3] - 1.0).abs() < 1e-6);
        }
        let south = preimage_curve(&hopf(), &pt(&[0.0, 0.0, -1.0]), 64).unwrap();
        for x in &south.sphere {
            assert!(x[2].abs() < 1e-6 && x[3].abs() < 1e-6);
        }
        for c in [&north, &south] {
            assert_eq!(c.sphere.first(), c.sphere.last());
            assert!(c.step <= 2.0 * PI / 64.0 + 1e-9);
            assert!(c.sphere.len() > 50);
        }
    }

    #[test]
    fn value_outside_image_is_irregular() {
        let m = map_of(&["x1", "x2", "x3 + 2"]);
        assert!(matches!(
            preimage_curve(&m, &pt(&[0.0, 0.0, -1.0]), 32),
            Err(Error::IrregularValue(_))
        ));
    }

    #[test]
    fn hopf_invariant_is_unit() {
        let r = hopf_invariant(&hopf(), &pt(&[0.0, 0.0, 1.0]), &pt(&[0.0, 0.0, -1.0]), 64).unwrap();
        assert_eq!(r.linking.abs(), 1);
        assert!(r.residual < RESIDUAL_LIMIT);
        assert_eq!(r.grid, 64);
    }

    #[test]
    fn hopf_invariant_other_pairs() {
        let pairs = [
            ([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]),
            ([0.6, 0.0, 0.8], [0.0, -0.6, 0.8]),
            ([1.0, 1.0, 1.0], [-1.0, 0.5, -2.0]),
        ];
        for (a, b) in pairs {
            let r = hopf_invariant(&hopf(), &pt(&a), &pt(&b), 64).unwrap();
            assert_eq!(r.linking.abs(), 1, "{a:?} {b:?}: {r:?}");
        }
    }

    #[test]
    fn degenerate_map_has_zero_linking() {
        let m = map_of(&["x1", "x2", "x3 + 2"]);
        let r = hopf_invariant(&m, &pt(&[0.0, 0.0, 1.0]), &pt(&[0.3, 0.0, 1.0]), 64).unwrap();
        assert_eq!(r.linking, 0);
    }

    #[test]
    fn refinement_and_antisymmetry() {
        let h = hopf();
        let (v1, v2) = (pt(&[0.0, 0.0, 1.0]), pt(&[0.0, 0.0, -1.0]));
        let l1 = linking_at(&h, &v1, &v2, 128).unwrap();
        let l2 = linking_at(&h, &v1, &v2, 256).unwrap();
        assert!((l1 - l2).abs() < 1e-3, "{l1} vs {l2}");
        let a = trace_fibre(&h, &v1, 64).unwrap();
        let b = trace_fibre(&h, &v2, 64).unwrap();
        let c = chart_curves(&[&a, &b]).unwrap();
        let ab = linking_integral(&c[0], &c[1]);
        let ba = linking_integral(&c[1], &c[0]);
        assert!((ab - ba).abs() < 1e-12);
    }

    #[test]
    fn chart_orientation_is_fixed() {
        for p in sphere_samples(50) {
            let c = Chart::new(p);
            assert!((det4(&[p, c.basis[0], c.basis[1], c.basis[2]]) - 1.0).abs() < 1e-9);
        }
        let e = [[1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]];
        assert_eq!(det4(&e), 1.0);
    }

    #[test]
    fn sign_is_stable_across_grids() {
        let (v1, v2) = (pt(&[0.0, 0.0, 1.0]), pt(&[0.0, 0.0, -1.0]));
        let signs: Vec<f64> = [32, 64, 128, 256]
            .iter()
            .map(|&g| linking_at(&hopf(), &v1, &v2, g).unwrap().round())
            .collect();
        assert!(signs.iter().all(|&s| s == signs[0]), "{signs:?}");
    }

    #[test]
    fn distinct_values_required() {
        let v = pt(&[0.0, 0.0, 1.0]);
        assert!(matches!(hopf_invariant(&hopf(), &v, &v, 64), Err(Error::Input(_))));
    }

    #[test]
    fn parse_points() {
        assert_eq!(RealPoint::parse("0, 0,-1").unwrap(), pt(&[0.0, 0.0, -1.0]));
        assert!(RealPoint::parse("0,a").is_err());
        assert!(RealPoint::parse("inf,0").is_err());
    }
}
