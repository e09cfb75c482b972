//! The split quadrics `Q_{2n-1}`, `Q_{2n}` and the explicit morphisms
//! between them:
//!
//! * `f : Q_7 -> Q_4`, `(M, N) |-> (MN, det M)`
//! * `g : Q_4 x G_m -> A^3 \ 0`, `(x1, x2, y1, y2, z, alpha) |-> (2x1, 2x2, (alpha-1)z + 1)`
//! * `H = g(-, -1) . f`, which lands in unimodular rows of length 3
//! * `h : S^3 -> Q_7`, `x |-> (x, x)`
//! * `alpha` on rows of length 4, by default `H` itself
//!
//! The "smash with G_m" step is modelled as substituting the unit `-1` for
//! `alpha`; nothing homotopical is represented.
//!
//! Every map comes in two forms: a [`PolyMap`] over the free polynomial ring
//! modulo the source relation (where well-definedness is proved by a
//! Groebner reduction), and a row-level function acting on certified rows
//! over any presented ring.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polyring::{parse_polynomial, MonomialOrder, Polynomial, Rational, Vars};
use crate::quotient::{ring_make, QuotientRing, Ring, RingElement, RingExt};
use crate::rows::{row_make, UnimodularRow};
use crate::witt::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadricKind {
    /// `Q_{2n-1}`: `sum x_i y_i = 1`
    Odd,
    /// `Q_{2n}`: `sum x_i y_i = z (1 - z)`
    Even,
}

/// A split quadric with its coordinate names and defining polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricSpec {
    pub kind: QuadricKind,
    pub n: usize,
    vars: Vars,
    relation: Polynomial,
}

impl QuadricSpec {
    /// `Q_{2n-1}` in coordinates `x1..xn, y1..yn`.
    pub fn odd(n: usize) -> QuadricSpec {
        QuadricSpec::odd_named(n, "x", "y")
    }

    pub fn odd_named(n: usize, x: &str, y: &str) -> QuadricSpec {
        assert!(n >= 1);
        let names: Vec<String> = (1..=n)
            .map(|i| format!("{x}{i}"))
            .chain((1..=n).map(|i| format!("{y}{i}")))
            .collect();
        let vars = Vars::new(&names);
        let mut rel = Polynomial::from_int(&vars, -1);
        for i in 0..n {
            rel = rel + &(&Polynomial::var(&vars, i) * &Polynomial::var(&vars, n + i));
        }
        QuadricSpec {
            kind: QuadricKind::Odd,
            n,
            vars,
            relation: rel,
        }
    }

    /// `Q_{2n}` in coordinates `x1..xn, y1..yn, z`.
    pub fn even(n: usize) -> QuadricSpec {
        assert!(n >= 1);
        let names: Vec<String> = (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=n).map(|i| format!("y{i}")))
            .chain(std::iter::once("z".to_string()))
            .collect();
        let vars = Vars::new(&names);
        let z = Polynomial::var(&vars, 2 * n);
        let mut rel = -(&z * &(Polynomial::one(&vars) - &z));
        for i in 0..n {
            rel = rel + &(&Polynomial::var(&vars, i) * &Polynomial::var(&vars, n + i));
        }
        QuadricSpec {
            kind: QuadricKind::Even,
            n,
            vars,
            relation: rel,
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn relation(&self) -> &Polynomial {
        &self.relation
    }

    /// The coordinate ring `Q[vars] / (relation)`.
    pub fn ring(&self) -> Ring {
        QuotientRing::new(
            self.vars.clone(),
            vec![self.relation.clone()],
            MonomialOrder::degrevlex(),
        )
        .expect("a single quadric relation is its own Groebner basis")
    }

    pub fn name(&self) -> String {
        match self.kind {
            QuadricKind::Odd => format!("Q{}", 2 * self.n - 1),
            QuadricKind::Even => format!("Q{}", 2 * self.n),
        }
    }
}

/// Whether a point with coordinates in some ring satisfies the relation.
pub fn quadric_member(spec: &QuadricSpec, point: &[RingElement]) -> Result<bool> {
    if point.len() != spec.arity() {
        return Err(Error::DimensionMismatch {
            expected: spec.arity(),
            got: point.len(),
        });
    }
    let ring = match point.first() {
        Some(p) => p.ring().clone(),
        None => return Err(Error::Input("empty point".into())),
    };
    let reps: Vec<Polynomial> = point.iter().map(|e| e.rep().clone()).collect();
    let value = spec.relation.compose(&reps)?;
    Ok(ring.from_poly(&value)?.is_zero())
}

pub fn quadric_member_rational(spec: &QuadricSpec, point: &[Rational]) -> Result<bool> {
    use num_traits::Zero;
    Ok(spec.relation.eval_rational(point)?.is_zero())
}

/// The codomain of a [`PolyMap`].
#[derive(Clone, Debug, PartialEq)]
pub enum Target {
    Quadric(QuadricSpec),
    /// `A^m \ 0`; membership is witnessed by a certificate.
    Punctured(usize),
    Affine(usize),
}

impl Target {
    pub fn dim(&self) -> usize {
        match self {
            Target::Quadric(q) => q.arity(),
            Target::Punctured(m) | Target::Affine(m) => *m,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Quadric(q) => f.write_str(&q.name()),
            Target::Punctured(m) => write!(f, "A^{m} \\ 0"),
            Target::Affine(m) => write!(f, "A^{m}"),
        }
    }
}

/// A tuple of polynomials in the source coordinates, checked on
/// construction to land in its target modulo the source relations.
#[derive(Clone, Debug)]
pub struct PolyMap {
    pub name: String,
    source: Ring,
    target: Target,
    components: Vec<Polynomial>,
    certificate: Option<Vec<Polynomial>>,
}

impl PolyMap {
    pub fn new(
        name: &str,
        source: Ring,
        target: Target,
        components: Vec<Polynomial>,
        certificate: Option<Vec<Polynomial>>,
    ) -> Result<PolyMap> {
        if components.len() != target.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim(),
                got: components.len(),
            });
        }
        for c in components.iter().chain(certificate.iter().flatten()) {
            source.vars().check_same(c.vars())?;
        }
        let map = PolyMap {
            name: name.to_string(),
            source,
            target,
            components,
            certificate,
        };
        map.check_well_defined()?;
        Ok(map)
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Target {
        &self.target
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn certificate(&self) -> Option<&[Polynomial]> {
        self.certificate.as_deref()
    }

    /// Components reduced to normal form in the source ring.
    pub fn reduced_components(&self) -> Result<Vec<RingElement>> {
        self.components
            .iter()
            .map(|c| self.source.from_poly(c))
            .collect()
    }

    fn check_well_defined(&self) -> Result<()> {
        match &self.target {
            Target::Quadric(q) => {
                let value = q.relation().compose(&self.components)?;
                let r = self.source.reduce(&value)?;
                if !r.is_zero() {
                    return Err(Error::Verification(format!(
                        "{}: target relation reduces to {r}",
                        self.name
                    )));
                }
            }
            Target::Punctured(_) => {
                let cert = self.certificate.as_ref().ok_or(Error::CertificateMissing)?;
                if cert.len() != self.components.len() {
                    return Err(Error::WrongLength {
                        expected: self.components.len(),
                        got: cert.len(),
                    });
                }
                let pairing = self
                    .components
                    .iter()
                    .zip(cert)
                    .fold(Polynomial::zero(self.source.vars()), |acc, (a, b)| acc + a * b);
                let r = self.source.reduce(&(pairing - &Polynomial::one(self.source.vars())))?;
                if !r.is_zero() {
                    return Err(Error::Verification(format!(
                        "{}: certificate pairing minus 1 reduces to {r}",
                        self.name
                    )));
                }
            }
            Target::Affine(_) => {}
        }
        Ok(())
    }

    /// `other . self`, with `other` read in the coordinates of `self`'s target.
    pub fn then(&self, other: &PolyMap, name: &str) -> Result<PolyMap> {
        let comps = other
            .components
            .iter()
            .map(|c| c.compose(&self.components))
            .collect::<Result<Vec<_>>>()?;
        let cert = other
            .certificate
            .as_ref()
            .map(|cs| cs.iter().map(|c| c.compose(&self.components)).collect())
            .transpose()?;
        PolyMap::new(name, self.source.clone(), other.target.clone(), comps, cert)
    }
}

fn parse_all(vars: &Vars, texts: &[&str]) -> Vec<Polynomial> {
    texts
        .iter()
        .map(|t| parse_polynomial(t, vars).expect("built-in formula parses"))
        .collect()
}

/// `Q_7` in the coordinates `a1..a4, b1..b4`.
pub fn q7() -> QuadricSpec {
    QuadricSpec::odd_named(4, "a", "b")
}

/// The components of `f` exactly as written in coordinates.
pub const F_FORMULA: [&str; 5] = [
    "a1*a3 - a2*b4",
    "a1*a4 + a2*b3",
    "-a4*b2 + b1*b3",
    "a3*b2 + b1*b4",
    "a1*b1 + a2*b2",
];

/// The Hopf map `S^3 -> S^2` in coordinates `x1..x4`.
pub const HOPF_FORMULA: [&str; 3] = [
    "2*x1*x3 - 2*x2*x4",
    "2*x1*x4 + 2*x2*x3",
    "x3^2 + x4^2 - x1^2 - x2^2",
];

/// `f : Q_7 -> Q_4` from the coordinate formula.
pub fn f_map() -> Result<PolyMap> {
    let src = q7();
    let comps = parse_all(src.vars(), &F_FORMULA);
    PolyMap::new("f", src.ring(), Target::Quadric(QuadricSpec::even(2)), comps, None)
}

/// `(MN, det M)` read back as a point `(x1, x2, y1, y2, z)` of `Q_4`,
/// using the same encoding `[[x1, x2], [-y2, y1]]` as for `Q_7`.
pub fn f_matrix_components() -> Vec<Polynomial> {
    let ring = QuotientRing::free(q7().vars().names());
    let e = |s: &str| ring.elem(s).expect("coordinate");
    let m = Matrix::new(&ring, vec![vec![e("a1"), e("a2")], vec![e("-b2"), e("b1")]]).unwrap();
    let n = Matrix::new(&ring, vec![vec![e("a3"), e("a4")], vec![e("-b4"), e("b3")]]).unwrap();
    let mn = m.mul(&n).unwrap();
    let out = [
        mn.get(0, 0).clone(),
        mn.get(0, 1).clone(),
        mn.get(1, 1).clone(),
        -mn.get(1, 0),
        m.det(),
    ];
    out.iter().map(|x| x.rep().clone()).collect()
}

/// `g` over `Q_4 x G_m`, with `alpha` an extra coordinate. The target is
/// only punctured once `alpha` is a unit, so this form is not certified.
pub fn g_map_symbolic() -> Result<PolyMap> {
    let q4 = QuadricSpec::even(2);
    let mut names: Vec<String> = q4.vars().names().to_vec();
    names.push("alpha".into());
    let vars = Vars::new(&names);
    let rel = q4.relation().rename_into(&vars)?;
    let source = QuotientRing::new(vars.clone(), vec![rel], MonomialOrder::degrevlex())?;
    let comps = parse_all(&vars, &["2*x1", "2*x2", "(alpha - 1)*z + 1"]);
    PolyMap::new("g", source, Target::Affine(3), comps, None)
}

/// `g(-, alpha)` for a fixed rational unit `alpha`, as a map on `Q_4`.
pub fn g_map_at(alpha: &Rational) -> Result<PolyMap> {
    use num_traits::Zero;
    if alpha.is_zero() {
        return Err(Error::NonUnit("0".into()));
    }
    let q4 = QuadricSpec::even(2);
    let v = q4.vars();
    let z = Polynomial::var_named(v, "z");
    let third = &z.scale(&(alpha - Rational::from_integer(1.into()))) + &Polynomial::one(v);
    let comps = vec![
        Polynomial::var_named(v, "x1").scale(&Rational::from_integer(2.into())),
        Polynomial::var_named(v, "x2").scale(&Rational::from_integer(2.into())),
        third,
    ];
    PolyMap::new("g", q4.ring(), Target::Affine(3), comps, None)
}

/// `g(-, -1) : Q_4 -> A^3 \ 0` with certificate `(2 y1, 2 y2, 1 - 2z)`:
/// `4 x1 y1 + 4 x2 y2 + (1 - 2z)^2 = 4 z(1-z) + 1 - 4z + 4z^2 = 1`.
pub fn g_minus_one_map() -> Result<PolyMap> {
    let q4 = QuadricSpec::even(2);
    let v = q4.vars();
    let comps = parse_all(v, &["2*x1", "2*x2", "1 - 2*z"]);
    let cert = parse_all(v, &["2*y1", "2*y2", "1 - 2*z"]);
    PolyMap::new("g[-1]", q4.ring(), Target::Punctured(3), comps, Some(cert))
}

/// `H = g(-, -1) . f : Q_7 -> A^3 \ 0`, with its derived certificate.
pub fn h_composite_map() -> Result<PolyMap> {
    f_map()?.then(&g_minus_one_map()?, "H")
}

/// The 3-sphere ring in coordinates `x1..x4`.
pub fn sphere_ring() -> Ring {
    crate::quotient::sphere3_ring(&["x1", "x2", "x3", "x4"])
}

/// `h : S^3 -> Q_7`, `x |-> (x, x)`.
pub fn h_map() -> Result<PolyMap> {
    let s = sphere_ring();
    let v = s.vars().clone();
    let comps: Vec<Polynomial> = (0..8).map(|k| Polynomial::var(&v, k % 4)).collect();
    PolyMap::new("h", s, Target::Quadric(q7()), comps, None)
}

/// `H . h : S^3 -> A^3 \ 0`.
pub fn hopf_composite_map() -> Result<PolyMap> {
    h_map()?.then(&h_composite_map()?, "H.h")
}

/// The symmetric formula for `alpha` over the free ring on `x1..x4`.
pub fn alpha_symmetric_free() -> Result<PolyMap> {
    let ring = QuotientRing::free(&["x1", "x2", "x3", "x4"]);
    let comps = parse_all(ring.vars(), &HOPF_FORMULA);
    PolyMap::new("alpha-symmetric", ring, Target::Affine(3), comps, None)
}

fn require_len(row: &UnimodularRow, n: usize) -> Result<()> {
    if row.len() != n {
        return Err(Error::WrongLength {
            expected: n,
            got: row.len(),
        });
    }
    Ok(())
}

/// `(M, N) = ([[a1, a2], [-b2, b1]], [[a3, a4], [-b4, b3]])`, with
/// `det M + det N = sum a_i b_i = 1` checked.
pub fn matrix_encoding(row: &UnimodularRow) -> Result<(Matrix, Matrix)> {
    require_len(row, 4)?;
    let ring = row.ring();
    let a = row.entries();
    let b = row.certificate();
    let m = Matrix::new(ring, vec![vec![a[0].clone(), a[1].clone()], vec![-&b[1], b[0].clone()]])?;
    let n = Matrix::new(ring, vec![vec![a[2].clone(), a[3].clone()], vec![-&b[3], b[2].clone()]])?;
    let s = &m.det() + &n.det();
    if !s.is_one() {
        return Err(Error::Verification(format!("det M + det N = {s}")));
    }
    Ok((m, n))
}

/// `f` on a certified row of length 4, returning the point of `Q_4`.
pub fn map_f(row: &UnimodularRow) -> Result<Vec<RingElement>> {
    require_len(row, 4)?;
    let a = row.entries();
    let b = row.certificate();
    let out = vec![
        &(&a[0] * &a[2]) - &(&a[1] * &b[3]),
        &(&a[0] * &a[3]) + &(&a[1] * &b[2]),
        &(&b[0] * &b[2]) - &(&a[3] * &b[1]),
        &(&a[2] * &b[1]) + &(&b[0] * &b[3]),
        &(&a[0] * &b[0]) + &(&a[1] * &b[1]),
    ];
    if !quadric_member(&QuadricSpec::even(2), &out)? {
        return Err(Error::Verification("f(row) is not on Q4".into()));
    }
    let (m, n) = matrix_encoding(row)?;
    let mn = m.mul(&n)?;
    let from_matrices = [
        mn.get(0, 0).clone(),
        mn.get(0, 1).clone(),
        mn.get(1, 1).clone(),
        -mn.get(1, 0),
        m.det(),
    ];
    if out.as_slice() != from_matrices.as_slice() {
        return Err(Error::Verification(
            "coordinate formula for f disagrees with (MN, det M)".into(),
        ));
    }
    Ok(out)
}

/// `g(point, alpha) = (2 x1, 2 x2, (alpha - 1) z + 1)`.
pub fn map_g(point: &[RingElement], alpha: &RingElement) -> Result<Vec<RingElement>> {
    if point.len() != 5 {
        return Err(Error::DimensionMismatch {
            expected: 5,
            got: point.len(),
        });
    }
    let ring = alpha.ring();
    match alpha.constant_value() {
        Some(c) => {
            use num_traits::Zero;
            if c.is_zero() {
                return Err(Error::NonUnit(alpha.to_string()));
            }
        }
        None => {
            if ring.express_one(std::slice::from_ref(alpha))?.is_none() {
                return Err(Error::NonUnit(alpha.to_string()));
            }
        }
    }
    let two = ring.int(2);
    Ok(vec![
        &two * &point[0],
        &two * &point[1],
        &(&(alpha - &ring.one()) * &point[4]) + &ring.one(),
    ])
}

/// `H(row)`: `f`, then `g` with `alpha = -1`. The output row carries the
/// certificate `(2 y1, 2 y2, 1 - 2z)` built from `f(row) = (x1, x2, y1, y2, z)`.
pub fn compose_h(row: &UnimodularRow) -> Result<UnimodularRow> {
    let p = map_f(row)?;
    let ring = row.ring();
    let out = map_g(&p, &ring.int(-1))?;
    let two = ring.int(2);
    let cert = vec![&two * &p[2], &two * &p[3], &ring.one() - &(&two * &p[4])];
    row_make(ring, out, Some(cert)).map_err(|e| match e {
        Error::BadCertificate(s) => {
            Error::Verification(format!("derived certificate of H pairs to {s}"))
        }
        other => other,
    })
}

/// `h` on a ring whose first four variables satisfy `sum x_i^2 = 1`:
/// the row `(x1..x4)` certified by itself.
pub fn map_h(ring: &Ring) -> Result<UnimodularRow> {
    if ring.vars().len() < 4 {
        return Err(Error::Input("h needs a ring with at least four variables".into()));
    }
    let x: Vec<RingElement> = (0..4)
        .map(|k| ring.from_poly(&Polynomial::var(ring.vars(), k)))
        .collect::<Result<_>>()?;
    match row_make(ring, x.clone(), Some(x)) {
        Err(Error::BadCertificate(_)) => Err(Error::NotUnimodular),
        other => other,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AlphaMode {
    /// `alpha = H`, valid for any certificate.
    #[default]
    General,
    /// The closed formula in the entries alone; needs certificate = row.
    Symmetric,
}

/// `alpha` on a certified row of length 4.
///
/// In [`AlphaMode::Symmetric`] the output is
/// `(2a1a3 - 2a2a4, 2a1a4 + 2a2a3, a3^2 + a4^2 - a1^2 - a2^2)` certified by
/// itself, since its squared norm is `(sum a_i^2)^2 = 1`. The two modes
/// agree exactly when the certificate equals the row.
pub fn map_alpha(row: &UnimodularRow, mode: AlphaMode) -> Result<UnimodularRow> {
    require_len(row, 4)?;
    match mode {
        AlphaMode::General => compose_h(row),
        AlphaMode::Symmetric => {
            if row.entries() != row.certificate() {
                return Err(Error::SymmetricModeRefused(format!(
                    "row ({}) has certificate ({})",
                    join(row.entries()),
                    join(row.certificate())
                )));
            }
            let a = row.entries();
            let ring = row.ring();
            let two = ring.int(2);
            let out = vec![
                &two * &(&(&a[0] * &a[2]) - &(&a[1] * &a[3])),
                &two * &(&(&a[0] * &a[3]) + &(&a[1] * &a[2])),
                &(&(&a[2] * &a[2]) + &(&a[3] * &a[3])) - &(&(&a[0] * &a[0]) + &(&a[1] * &a[1])),
            ];
            row_make(ring, out.clone(), Some(out)).map_err(|e| match e {
                Error::BadCertificate(s) => {
                    Error::Verification(format!("symmetric alpha has squared norm {s}"))
                }
                other => other,
            })
        }
    }
}

fn join(v: &[RingElement]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Names accepted by the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapName {
    F,
    G,
    H,
    SmallH,
    Alpha,
    AlphaSymmetric,
}

impl FromStr for MapName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "f" => MapName::F,
            "g" => MapName::G,
            "H" => MapName::H,
            "h" => MapName::SmallH,
            "alpha" => MapName::Alpha,
            "alpha-symmetric" => MapName::AlphaSymmetric,
            other => return Err(Error::UnknownMap(other.to_string())),
        })
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapName::F => "f",
            MapName::G => "g",
            MapName::H => "H",
            MapName::SmallH => "h",
            MapName::Alpha => "alpha",
            MapName::AlphaSymmetric => "alpha-symmetric",
        })
    }
}

/// Outcome of one symbolic identity.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl IdentityCheck {
    fn from_result(name: &'static str, r: Result<String>) -> IdentityCheck {
        match r {
            Ok(detail) => IdentityCheck {
                name,
                passed: true,
                detail,
            },
            Err(e) => IdentityCheck {
                name,
                passed: false,
                detail: e.to_string(),
            },
        }
    }
}

pub fn check_f_membership() -> Result<String> {
    let f = f_map()?;
    Ok(format!(
        "x1*y1 + x2*y2 - z*(1 - z) o f reduces to 0 modulo ({})",
        f.source().relations()[0]
    ))
}

pub fn check_f_matrix_form() -> Result<String> {
    let src = q7();
    let formula = parse_all(src.vars(), &F_FORMULA);
    let from_matrices = f_matrix_components();
    for (k, (a, b)) in formula.iter().zip(&from_matrices).enumerate() {
        let b = b.rename_into(src.vars())?;
        if a != &b {
            return Err(Error::Verification(format!(
                "component {k}: formula {a} vs matrices {b}"
            )));
        }
    }
    Ok("MN and det M match the coordinate formula term for term".into())
}

pub fn check_h_certificate() -> Result<String> {
    let h = h_composite_map()?;
    let cert: Vec<String> = h.certificate().unwrap().iter().map(|c| c.to_string()).collect();
    Ok(format!("H certified by ({})", cert.join(", ")))
}

pub fn check_norm_identity() -> Result<String> {
    let alpha = alpha_symmetric_free()?;
    let v = alpha.source().vars().clone();
    let lhs = alpha
        .components()
        .iter()
        .fold(Polynomial::zero(&v), |acc, c| acc + c * c);
    let s = (0..4).fold(Polynomial::zero(&v), |acc, k| {
        acc + Polynomial::var(&v, k).pow(2)
    });
    let rhs = s.pow(2);
    if lhs != rhs {
        return Err(Error::Verification(format!("{lhs} != {rhs}")));
    }
    Ok("sum alpha_i^2 = (sum x_i^2)^2 in the free ring".into())
}

pub fn check_hopf_formula() -> Result<String> {
    let hh = hopf_composite_map()?;
    let ring = hh.source().clone();
    let got = hh.reduced_components()?;
    for (k, text) in HOPF_FORMULA.iter().enumerate() {
        let want = ring.elem(text)?;
        if got[k] != want {
            return Err(Error::Verification(format!(
                "component {k}: H.h gives {} but the Hopf formula gives {}",
                got[k], want
            )));
        }
    }
    // the row-level route must agree as well
    let row = map_h(&ring)?;
    let out = compose_h(&row)?;
    for (k, text) in HOPF_FORMULA.iter().enumerate() {
        if out.entries()[k] != ring.elem(text)? {
            return Err(Error::Verification(format!("row-level H.h differs at {k}")));
        }
    }
    Ok("H(h(x)) = (2x1x3 - 2x2x4, 2x1x4 + 2x2x3, x3^2 + x4^2 - x1^2 - x2^2) on S^3".into())
}

pub fn check_h_well_defined() -> Result<String> {
    h_map()?;
    Ok("h lands in Q7 modulo the sphere relation".into())
}

/// Substituting `alpha = -1` after `g` equals applying `g` at `-1`.
pub fn check_minus_one_naturality() -> Result<String> {
    let g = g_map_symbolic()?;
    let v = g.source().vars().clone();
    let alpha_idx = v.index_of("alpha").expect("alpha coordinate");
    let minus_one = Polynomial::from_int(&v, -1);
    let at = g_map_at(&Rational::from_integer((-1).into()))?;
    let cert = g_minus_one_map()?;
    for (k, c) in g.components().iter().enumerate() {
        let substituted = c.substitute(alpha_idx, &minus_one)?;
        let direct = at.components()[k].rename_into(&v)?;
        let certified = cert.components()[k].rename_into(&v)?;
        if substituted != direct || direct != certified {
            return Err(Error::Verification(format!(
                "component {k}: {substituted} / {direct} / {certified}"
            )));
        }
    }
    Ok("g(-, alpha)|alpha=-1 == g(-, -1) componentwise".into())
}

/// The symbolic identity battery behind `verify`.
pub fn identity_battery() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck::from_result("f-membership", check_f_membership()),
        IdentityCheck::from_result("f-matrix-form", check_f_matrix_form()),
        IdentityCheck::from_result("h-well-defined", check_h_well_defined()),
        IdentityCheck::from_result("H-certificate", check_h_certificate()),
        IdentityCheck::from_result("minus-one-naturality", check_minus_one_naturality()),
        IdentityCheck::from_result("norm-identity", check_norm_identity()),
        IdentityCheck::from_result("hopf-formula", check_hopf_formula()),
    ]
}

/// Build a ring for a row file whose variables include the given names.
pub fn ring_with_vars(vars: &[&str], relations: &[&str]) -> Result<Ring> {
    ring_make(vars, relations, MonomialOrder::degrevlex())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;
    use crate::quotient::sphere3_ring;
    use crate::random;
    use crate::rows::row_from_text;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn quadric_relations() {
        assert_eq!(QuadricSpec::odd(3).relation().to_text(), "x1*y1 + x2*y2 + x3*y3 - 1");
        assert_eq!(QuadricSpec::even(2).relation().to_text(), "x1*y1 + x2*y2 + z^2 - z");
        assert_eq!(QuadricSpec::even(2).arity(), 5);
        assert_eq!(QuadricSpec::odd(4).name(), "Q7");
    }

    #[test]
    fn quadric_points() {
        let q4 = QuadricSpec::even(2);
        assert!(quadric_member_rational(&q4, &ints(&[1, 0, 0, 0, 1])).unwrap());
        assert!(!quadric_member_rational(&q4, &ints(&[1, 1, 1, 1, 0])).unwrap());
        assert!(quadric_member_rational(&QuadricSpec::odd(3), &ints(&[1, 0, 0, 1, 0, 0])).unwrap());
        assert!(matches!(
            quadric_member_rational(&q4, &ints(&[1, 0])),
            Err(Error::DimensionMismatch { expected: 5, got: 2 })
        ));
    }

    fn q() -> Ring {
        QuotientRing::free(&["t"])
    }

    #[test]
    fn matrix_encoding_examples() {
        let r = q();
        let row = row_from_text(&r, &["1", "0", "1", "0"], Some(&["1", "0", "0", "0"])).unwrap();
        let (m, n) = matrix_encoding(&row).unwrap();
        assert_eq!(m, Matrix::identity(&r, 2));
        assert_eq!(n, Matrix::from_ints(&r, &[vec![1, 0], vec![0, 0]]).unwrap());

        let e1 = UnimodularRow::basepoint(&r, 4).unwrap();
        let (m, n) = matrix_encoding(&e1).unwrap();
        assert_eq!(m, Matrix::identity(&r, 2));
        assert!(n.det().is_zero());

        let s = sphere3_ring(&["x", "y", "z", "w"]);
        let v = ["x", "y", "z", "w"];
        let row = row_from_text(&s, &v, Some(&v)).unwrap();
        let (m, n) = matrix_encoding(&row).unwrap();
        assert_eq!(m.det(), s.elem("x^2 + y^2").unwrap());
        assert_eq!(n.det(), s.elem("z^2 + w^2").unwrap());
    }

    #[test]
    fn f_on_points() {
        let r = q();
        let row = row_from_text(&r, &["1", "0", "1", "0"], Some(&["1", "0", "0", "0"])).unwrap();
        let p = map_f(&row).unwrap();
        let want: Vec<_> = [1, 0, 0, 0, 1].iter().map(|&k| r.int(k)).collect();
        assert_eq!(p, want);

        let e1 = UnimodularRow::basepoint(&r, 4).unwrap();
        let p = map_f(&e1).unwrap();
        let want: Vec<_> = [0, 0, 0, 0, 1].iter().map(|&k| r.int(k)).collect();
        assert_eq!(p, want);
    }

    #[test]
    fn f_is_well_defined_on_q7() {
        let f = f_map().unwrap();
        assert_eq!(f.components().len(), 5);
        assert!(check_f_matrix_form().is_ok());
    }

    #[test]
    fn broken_f_is_caught() {
        let src = q7();
        let mut comps = parse_all(src.vars(), &F_FORMULA);
        comps[0] = parse_polynomial("a1*a3 + a2*b4", src.vars()).unwrap();
        let r = PolyMap::new("f'", src.ring(), Target::Quadric(QuadricSpec::even(2)), comps, None);
        assert!(matches!(r, Err(Error::Verification(_))));
    }

    #[test]
    fn g_examples() {
        let r = QuotientRing::free(&["x1", "x2", "y1", "y2", "z"]);
        let pt: Vec<_> = ["x1", "x2", "y1", "y2", "z"].iter().map(|s| r.elem(s).unwrap()).collect();
        let out = map_g(&pt, &r.int(-1)).unwrap();
        assert_eq!(out[2], r.elem("1 - 2*z").unwrap());
        assert_eq!(out[0], r.elem("2*x1").unwrap());
        let out = map_g(&pt, &r.one()).unwrap();
        assert!(out[2].is_one());

        let pt: Vec<_> = [1, 0, 0, 0, 1].iter().map(|&k| r.int(k)).collect();
        let out = map_g(&pt, &r.int(-1)).unwrap();
        assert_eq!(out, vec![r.int(2), r.zero(), r.int(-1)]);

        assert!(matches!(map_g(&pt, &r.zero()), Err(Error::NonUnit(_))));
        assert!(matches!(map_g(&pt, &r.elem("z").unwrap()), Err(Error::NonUnit(_))));
    }

    #[test]
    fn g_accepts_symbolic_units() {
        let r = ring_with_vars(&["u", "v"], &["u*v - 1"]).unwrap();
        let pt: Vec<_> = [1, 0, 0, 0, 1].iter().map(|&k| r.int(k)).collect();
        let out = map_g(&pt, &r.elem("u").unwrap()).unwrap();
        assert_eq!(out[2], r.elem("u").unwrap());
    }

    #[test]
    fn h_composite_on_points() {
        let r = q();
        let e1 = UnimodularRow::basepoint(&r, 4).unwrap();
        let out = compose_h(&e1).unwrap();
        assert_eq!(out.entries(), &[r.zero(), r.zero(), r.int(-1)]);
        assert_eq!(out.certificate(), &[r.zero(), r.zero(), r.int(-1)]);

        let row = row_from_text(&r, &["1", "0", "1", "0"], Some(&["1", "0", "0", "0"])).unwrap();
        let out = compose_h(&row).unwrap();
        assert_eq!(out.entries(), &[r.int(2), r.zero(), r.int(-1)]);
        assert_eq!(out.certificate(), &[r.zero(), r.zero(), r.int(-1)]);
    }

    #[test]
    fn hopf_formula_from_h_and_h() {
        let s = sphere_ring();
        let row = map_h(&s).unwrap();
        let out = compose_h(&row).unwrap();
        for (k, t) in HOPF_FORMULA.iter().enumerate() {
            assert_eq!(out.entries()[k], s.elem(t).unwrap());
        }
        assert!(check_hopf_formula().is_ok());
    }

    #[test]
    fn h_requires_sphere_relation() {
        let free = QuotientRing::free(&["x1", "x2", "x3", "x4"]);
        assert!(matches!(map_h(&free), Err(Error::NotUnimodular)));
        assert!(map_h(&sphere_ring()).is_ok());
    }

    #[test]
    fn alpha_modes() {
        let s = sphere3_ring(&["x", "y", "z", "w"]);
        let v = ["x", "y", "z", "w"];
        let row = row_from_text(&s, &v, Some(&v)).unwrap();
        let sym = map_alpha(&row, AlphaMode::Symmetric).unwrap();
        let want = ["2*x*z - 2*y*w", "2*x*w + 2*y*z", "z^2 + w^2 - x^2 - y^2"];
        for (k, t) in want.iter().enumerate() {
            assert_eq!(sym.entries()[k], s.elem(t).unwrap());
        }
        let gen = map_alpha(&row, AlphaMode::General).unwrap();
        assert_eq!(gen.entries(), sym.entries());

        let r = q();
        let e1 = UnimodularRow::basepoint(&r, 4).unwrap();
        let out = map_alpha(&e1, AlphaMode::Symmetric).unwrap();
        assert_eq!(out.entries(), &[r.zero(), r.zero(), r.int(-1)]);
        let e3 = row_from_text(&r, &["0", "0", "1", "0"], Some(&["0", "0", "1", "0"])).unwrap();
        let out = map_alpha(&e3, AlphaMode::Symmetric).unwrap();
        assert_eq!(out.entries(), &[r.zero(), r.zero(), r.one()]);

        let row = row_from_text(&r, &["1", "0", "1", "0"], Some(&["1", "0", "0", "0"])).unwrap();
        assert!(matches!(
            map_alpha(&row, AlphaMode::Symmetric),
            Err(Error::SymmetricModeRefused(_))
        ));
    }

    #[test]
    fn map_names_round_trip() {
        for n in ["f", "g", "H", "h", "alpha", "alpha-symmetric"] {
            assert_eq!(n.parse::<MapName>().unwrap().to_string(), n);
        }
        assert!(matches!("F".parse::<MapName>(), Err(Error::UnknownMap(_))));
    }

    #[test]
    fn battery_passes() {
        for c in identity_battery() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn compose_h_always_certified(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let ring = random::random_ring(&mut rng);
            let row = random::constructed_row(&mut rng, &ring, 4);
            let out = compose_h(&row).unwrap();
            prop_assert!(out.pairing().is_one());
            prop_assert!(quadric_member(&QuadricSpec::even(2), &map_f(&row).unwrap()).unwrap());
        }
    }
}
