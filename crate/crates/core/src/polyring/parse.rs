//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := rational | ident | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{Polynomial, Vars};
use super::Rational;
use crate::error::{Error, Result};

pub fn parse_polynomial(text: &str, vars: &Vars) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate_first = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = acc + t;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = acc - t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                let mut den = BigInt::from(1);
                // `/` only appears inside rational literals
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.err("expected denominator"));
                    }
                    den = d.parse().expect("digits");
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                }
                Ok(Polynomial::constant(self.vars, Rational::new(num, den)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.vars.index_of(name) {
                    Some(i) => Ok(Polynomial::var(self.vars, i)),
                    None => Err(Error::UndeclaredVariable(name.to_string())),
                }
            }
            Some(c) => Err(self.err(format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v4() -> Vars {
        Vars::new(&["x1", "x2", "x3", "x4", "x", "y"])
    }

    #[test]
    fn hopf_component_has_two_terms() {
        let p = parse_polynomial("2*x1*x3 - 2*x2*x4", &v4()).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.to_text(), "2*x1*x3 - 2*x2*x4");
    }

    #[test]
    fn zero_literal() {
        assert!(parse_polynomial("0", &v4()).unwrap().is_zero());
    }

    #[test]
    fn binomial_square() {
        let v = v4();
        let p = parse_polynomial("(x+1)^2", &v).unwrap();
        let q = parse_polynomial("x^2 + 2*x + 1", &v).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rationals_and_unary_minus() {
        let v = v4();
        let p = parse_polynomial("-1/2*y^2 + (-3)*x", &v).unwrap();
        assert_eq!(p.to_text(), "-1/2*y^2 - 3*x");
    }

    #[test]
    fn errors_carry_position_or_name() {
        let v = v4();
        match parse_polynomial("x + * y", &v) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse_polynomial("x + q", &v) {
            Err(Error::UndeclaredVariable(n)) => assert_eq!(n, "q"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_polynomial("(x", &v), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("x^", &v), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("1/0", &v), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("", &v), Err(Error::Syntax { .. })));
    }

    fn arb_expr() -> impl Strategy<Value = String> {
        let leaf = prop_oneof![
            (0i64..20).prop_map(|n| n.to_string()),
            (1i64..9, 1i64..9).prop_map(|(a, b)| format!("{a}/{b}")),
            prop::sample::select(vec!["x", "y", "x1", "x4"]).prop_map(str::to_string),
        ];
        leaf.prop_recursive(3, 16, 3, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}) + ({b})")),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}) - ({b})")),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
                (inner, 0u32..3).prop_map(|(a, e)| format!("({a})^{e}")),
            ]
        })
    }

    proptest! {
        #[test]
        fn parse_print_parse_is_identity(src in arb_expr()) {
            let v = v4();
            let p = parse_polynomial(&src, &v).unwrap();
            let printed = p.to_text();
            let q = parse_polynomial(&printed, &v).unwrap();
            prop_assert_eq!(&p, &q);
            prop_assert_eq!(printed, q.to_text());
        }
    }
}
