//! Alternating matrices over a presented ring: Pfaffians, the Vaserstein
//! symbol, orthogonal sums and congruence witnesses.
//!
//! Sign convention: `Pf([[0, a], [-a, 0]]) = a`, hence `Pf(psi_2) = -1` for
//! `psi_2 = [[0, -1], [1, 0]]`. Larger Pfaffians expand along the first row.
//!
//! Witt-class equality is not decided here. What can be checked is an
//! explicit witness: a matrix `E` with `E^T M E = N`, possibly after adding
//! `psi_2` blocks with [`orthogonal_sum`].

use std::fmt;

use crate::error::{Error, Result};
use crate::quotient::{Ring, RingElement, RingExt};
use crate::rows::UnimodularRow;

/// Square matrix of ring elements.
#[derive(Clone)]
pub struct Matrix {
    ring: Ring,
    rows: Vec<Vec<RingElement>>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.rows == other.rows
    }
}

impl Matrix {
    pub fn new(ring: &Ring, rows: Vec<Vec<RingElement>>) -> Result<Matrix> {
        let n = rows.len();
        for r in &rows {
            if r.len() != n {
                return Err(Error::SizeMismatch(format!(
                    "row of length {} in a {n}x{n} matrix",
                    r.len()
                )));
            }
            for e in r {
                if !ring.same_as(e.ring()) {
                    return Err(Error::RingMismatch);
                }
            }
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows,
        })
    }

    pub fn from_text<S: AsRef<str>>(ring: &Ring, rows: &[Vec<S>]) -> Result<Matrix> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.elem(s.as_ref())).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Matrix::new(ring, rows)
    }

    /// Matrix with rational integer entries.
    pub fn from_ints(ring: &Ring, rows: &[Vec<i64>]) -> Result<Matrix> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| ring.int(v)).collect())
            .collect();
        Matrix::new(ring, rows)
    }

    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { ring.one() } else { ring.zero() })
                    .collect()
            })
            .collect();
        Matrix {
            ring: ring.clone(),
            rows,
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<RingElement>] {
        &self.rows
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.size();
        Matrix {
            ring: self.ring.clone(),
            rows: (0..n)
                .map(|i| (0..n).map(|j| self.rows[j][i].clone()).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!(
                "{}x{} times {}x{}",
                self.size(),
                self.size(),
                other.size(),
                other.size()
            )));
        }
        if !self.ring.same_as(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let n = self.size();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(self.ring.zero(), |acc, k| {
                            &acc + &(&self.rows[i][k] * &other.rows[k][j])
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            rows,
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|e| -e).collect())
                .collect(),
        }
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> RingElement {
        let idx: Vec<usize> = (0..self.size()).collect();
        self.det_minor(0, &idx)
    }

    fn det_minor(&self, row: usize, cols: &[usize]) -> RingElement {
        if cols.is_empty() {
            return self.ring.one();
        }
        let mut acc = self.ring.zero();
        for (k, &c) in cols.iter().enumerate() {
            let e = &self.rows[row][c];
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let t = e * &self.det_minor(row + 1, &rest);
            acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1);
        for (i, r) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// Alternating matrix of even size: `M^T = -M` with zero diagonal.
#[derive(Clone, PartialEq)]
pub struct SkewMatrix(Matrix);

impl SkewMatrix {
    pub fn new(m: Matrix) -> Result<SkewMatrix> {
        let n = m.size();
        if n % 2 == 1 {
            return Err(Error::OddSize(n));
        }
        for i in 0..n {
            if !m.rows[i][i].is_zero() {
                return Err(Error::NotAlternating(i, i));
            }
            for j in i + 1..n {
                if m.rows[i][j] != -&m.rows[j][i] {
                    return Err(Error::NotAlternating(i, j));
                }
            }
        }
        Ok(SkewMatrix(m))
    }

    pub fn from_text<S: AsRef<str>>(ring: &Ring, rows: &[Vec<S>]) -> Result<SkewMatrix> {
        SkewMatrix::new(Matrix::from_text(ring, rows)?)
    }

    /// The 0x0 matrix, neutral for [`orthogonal_sum`].
    pub fn empty(ring: &Ring) -> SkewMatrix {
        SkewMatrix(Matrix {
            ring: ring.clone(),
            rows: Vec::new(),
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        self.0.get(i, j)
    }

    /// `-M`, the other sign convention for the symbol.
    pub fn neg(&self) -> SkewMatrix {
        SkewMatrix(self.0.neg())
    }

    /// `E^T M E`, again alternating.
    pub fn congruence(&self, e: &Matrix) -> Result<SkewMatrix> {
        let out = e.transpose().mul(&self.0)?.mul(e)?;
        SkewMatrix::new(out)
    }
}

impl fmt::Debug for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `psi_2 = [[0, -1], [1, 0]]`.
pub fn psi2(ring: &Ring) -> SkewMatrix {
    SkewMatrix(Matrix::from_ints(ring, &[vec![0, -1], vec![1, 0]]).expect("2x2"))
}

/// Pfaffian by expansion along the first row:
/// `Pf(M) = sum_{j>=2} (-1)^j m_1j Pf(M without rows/cols 1, j)`.
pub fn pfaffian(m: &SkewMatrix) -> RingElement {
    let idx: Vec<usize> = (0..m.size()).collect();
    pf_rec(&m.0, &idx)
}

fn pf_rec(m: &Matrix, idx: &[usize]) -> RingElement {
    if idx.is_empty() {
        return m.ring.one();
    }
    let first = idx[0];
    let mut acc = m.ring.zero();
    for (k, &j) in idx.iter().enumerate().skip(1) {
        let e = &m.rows[first][j];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != j).collect();
        let t = e * &pf_rec(m, &rest);
        // k = 1 is the second index (j = 2 in 1-based terms), sign +
        acc = if k % 2 == 1 { &acc + &t } else { &acc - &t };
    }
    acc
}

/// A representative of a class in the elementary symplectic Witt group,
/// with its Pfaffian cached.
#[derive(Clone, Debug, PartialEq)]
pub struct WittRep {
    pub matrix: SkewMatrix,
    pub pfaffian: RingElement,
}

impl WittRep {
    pub fn new(matrix: SkewMatrix) -> WittRep {
        let pfaffian = pfaffian(&matrix);
        WittRep { matrix, pfaffian }
    }
}

/// The 4x4 alternating matrix attached to a certified row `(a_1, a_2, a_3)`
/// with certificate `(b_1, b_2, b_3)`:
///
/// ```text
/// [  0   -a1  -a2  -a3 ]
/// [  a1   0   -b3   b2 ]
/// [  a2   b3   0   -b1 ]
/// [  a3  -b2   b1   0  ]
/// ```
///
/// Its Pfaffian is `sum a_i b_i = 1`, which is checked before returning.
pub fn vaserstein_symbol(row: &UnimodularRow) -> Result<WittRep> {
    if row.len() != 3 {
        return Err(Error::WrongLength {
            expected: 3,
            got: row.len(),
        });
    }
    let ring = row.ring();
    let a = row.entries();
    let b = row.certificate();
    let z = ring.zero();
    let rows = vec![
        vec![z.clone(), -&a[0], -&a[1], -&a[2]],
        vec![a[0].clone(), z.clone(), -&b[2], b[1].clone()],
        vec![a[1].clone(), b[2].clone(), z.clone(), -&b[0]],
        vec![a[2].clone(), -&b[1], b[0].clone(), z],
    ];
    let m = SkewMatrix::new(Matrix::new(ring, rows)?)?;
    let rep = WittRep::new(m);
    if !rep.pfaffian.is_one() {
        return Err(Error::Verification(format!(
            "Pfaffian of the symbol reduced to {}, expected 1",
            rep.pfaffian
        )));
    }
    Ok(rep)
}

/// Block-diagonal sum `M ⊥ N` with `M` in the upper-left block. With this
/// row ordering `Pf(M ⊥ N) = Pf(M) Pf(N)` holds with no extra sign, and is
/// checked.
pub fn orthogonal_sum(m: &SkewMatrix, n: &SkewMatrix) -> Result<SkewMatrix> {
    if !m.ring().same_as(n.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = m.ring();
    let (p, q) = (m.size(), n.size());
    let rows = (0..p + q)
        .map(|i| {
            (0..p + q)
                .map(|j| {
                    if i < p && j < p {
                        m.get(i, j).clone()
                    } else if i >= p && j >= p {
                        n.get(i - p, j - p).clone()
                    } else {
                        ring.zero()
                    }
                })
                .collect()
        })
        .collect();
    let sum = SkewMatrix::new(Matrix::new(ring, rows)?)?;
    let lhs = pfaffian(&sum);
    let rhs = &pfaffian(m) * &pfaffian(n);
    if lhs != rhs {
        return Err(Error::Verification(format!(
            "Pf(M ⊥ N) = {lhs} but Pf(M) Pf(N) = {rhs}"
        )));
    }
    Ok(sum)
}

/// Whether `E^T M E = N` holds entry by entry in the ring.
pub fn congruence_check(m: &SkewMatrix, e: &Matrix, n: &SkewMatrix) -> Result<bool> {
    if e.size() != m.size() || n.size() != m.size() {
        return Err(Error::SizeMismatch(format!(
            "M is {0}x{0}, E is {1}x{1}, N is {2}x{2}",
            m.size(),
            e.size(),
            n.size()
        )));
    }
    let lhs = e.transpose().mul(m.matrix())?.mul(e)?;
    Ok(&lhs == n.matrix())
}
