//! Unimodular rows with certificates and the elementary group acting on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::quotient::{Ring, RingElement, RingExt};

/// A row `(a_1..a_n)` together with `(b_1..b_n)` such that `sum a_i b_i = 1`.
///
/// The certificate is verified on construction and carried through every
/// operation, so downstream constructions never have to search for it again.
#[derive(Clone)]
pub struct UnimodularRow {
    ring: Ring,
    entries: Vec<RingElement>,
    certificate: Vec<RingElement>,
}

/// The transvection `E_ij(lambda)`, acting on the right: `a_j <- a_j + lambda a_i`.
/// Indices are zero-based.
#[derive(Clone, Debug, PartialEq)]
pub struct ElementaryMove {
    pub i: usize,
    pub j: usize,
    pub lambda: RingElement,
}

impl ElementaryMove {
    pub fn new(i: usize, j: usize, lambda: RingElement) -> Result<Self> {
        if i == j {
            return Err(Error::DegenerateMove(i));
        }
        Ok(ElementaryMove { i, j, lambda })
    }

    pub fn inverse(&self) -> ElementaryMove {
        ElementaryMove {
            i: self.i,
            j: self.j,
            lambda: -&self.lambda,
        }
    }
}

/// Formal inverse of a word: reversed, each move negated.
pub fn inverse_word(word: &[ElementaryMove]) -> Vec<ElementaryMove> {
    word.iter().rev().map(ElementaryMove::inverse).collect()
}

fn dot(a: &[RingElement], b: &[RingElement], ring: &Ring) -> RingElement {
    a.iter().zip(b).fold(ring.zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Build a certified row. Without a certificate one is searched for.
pub fn row_make(
    ring: &Ring,
    entries: Vec<RingElement>,
    certificate: Option<Vec<RingElement>>,
) -> Result<UnimodularRow> {
    if ring.is_trivial() {
        return Err(Error::TrivialRing);
    }
    if entries.len() < 2 {
        return Err(Error::Input(format!(
            "unimodular rows need length >= 2, got {}",
            entries.len()
        )));
    }
    for e in &entries {
        if !ring.same_as(e.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    let certificate = match certificate {
        Some(b) => {
            if b.len() != entries.len() {
                return Err(Error::WrongLength {
                    expected: entries.len(),
                    got: b.len(),
                });
            }
            for e in &b {
                if !ring.same_as(e.ring()) {
                    return Err(Error::RingMismatch);
                }
            }
            let s = dot(&entries, &b, ring);
            if !s.is_one() {
                return Err(Error::BadCertificate(s.to_string()));
            }
            b
        }
        None => ring.express_one(&entries)?.ok_or(Error::NotUnimodular)?,
    };
    Ok(UnimodularRow {
        ring: ring.clone(),
        entries,
        certificate,
    })
}

/// Parse entries (and optionally a certificate) from text and build the row.
pub fn row_from_text<S: AsRef<str>>(
    ring: &Ring,
    entries: &[S],
    certificate: Option<&[S]>,
) -> Result<UnimodularRow> {
    let parse = |v: &[S]| -> Result<Vec<RingElement>> {
        v.iter().map(|s| ring.elem(s.as_ref())).collect()
    };
    let a = parse(entries)?;
    let b = certificate.map(parse).transpose()?;
    row_make(ring, a, b)
}

impl PartialEq for UnimodularRow {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring)
            && self.entries == other.entries
            && self.certificate == other.certificate
    }
}

impl UnimodularRow {
    /// `e_1 = (1, 0, ..., 0)` with itself as certificate.
    pub fn basepoint(ring: &Ring, n: usize) -> Result<UnimodularRow> {
        let e: Vec<RingElement> = (0..n)
            .map(|k| if k == 0 { ring.one() } else { ring.zero() })
            .collect();
        row_make(ring, e.clone(), Some(e))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn certificate(&self) -> &[RingElement] {
        &self.certificate
    }

    /// `sum a_i b_i`, which is always `1` for a well-formed row.
    pub fn pairing(&self) -> RingElement {
        dot(&self.entries, &self.certificate, &self.ring)
    }

    /// Right action of `E_ij(lambda)`. The certificate moves by the
    /// inverse transpose, `b_i <- b_i - lambda b_j`, which keeps the pairing at 1.
    pub fn apply(&self, mv: &ElementaryMove) -> Result<UnimodularRow> {
        let n = self.len();
        for idx in [mv.i, mv.j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, len: n });
            }
        }
        if mv.i == mv.j {
            return Err(Error::DegenerateMove(mv.i));
        }
        if !self.ring.same_as(mv.lambda.ring()) {
            return Err(Error::RingMismatch);
        }
        let mut a = self.entries.clone();
        let mut b = self.certificate.clone();
        a[mv.j] = &a[mv.j] + &(&mv.lambda * &self.entries[mv.i]);
        b[mv.i] = &b[mv.i] - &(&mv.lambda * &self.certificate[mv.j]);
        let out = UnimodularRow {
            ring: self.ring.clone(),
            entries: a,
            certificate: b,
        };
        let s = out.pairing();
        if !s.is_one() {
            return Err(Error::Verification(format!(
                "elementary move broke the certificate: pairing = {s}"
            )));
        }
        Ok(out)
    }

    pub fn apply_word(&self, word: &[ElementaryMove]) -> Result<UnimodularRow> {
        word.iter().try_fold(self.clone(), |row, mv| row.apply(mv))
    }

    /// Same entries, certificate recomputed from scratch.
    pub fn recertify(&self) -> Result<UnimodularRow> {
        row_make(&self.ring, self.entries.clone(), None)
    }
}

impl fmt::Debug for UnimodularRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Row{:?} / {:?}", self.entries, self.certificate)
    }
}

impl fmt::Display for UnimodularRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[RingElement]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(f, "({}) / ({})", show(&self.entries), show(&self.certificate))
    }
}
