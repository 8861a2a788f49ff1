//! Recursive-descent parser for knot expressions.
//!
//! ```text
//! expr := term ("#" term)*
//! term := "U" | "T(" int "," int ")" | "mirror(" expr ")"
//! ```
//! Whitespace between tokens is ignored and `#` associates to the left.

use super::KnotExpr;
use crate::error::{Error, Result};
use crate::laurent::check_torus_params;

pub fn parse_knot(text: &str) -> Result<KnotExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(x) => Err(self.error(&format!("expected '{c}', found '{x}'"))),
            None => Err(self.error(&format!("expected '{c}', found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<KnotExpr> {
        let mut acc = self.term()?;
        while self.peek() == Some('#') {
            self.pos += 1;
            let rhs = self.term()?;
            acc = KnotExpr::ConnectedSum(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        self.pos += len;
        &self.src[start..self.pos]
    }

    fn term(&mut self) -> Result<KnotExpr> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.ident() {
            "U" => Ok(KnotExpr::Unknot),
            "T" => {
                self.expect('(')?;
                let p = self.int()?;
                self.expect(',')?;
                let q = self.int()?;
                self.expect(')')?;
                check_torus_params(p, q)?;
                Ok(KnotExpr::torus(p as u32, q as u32))
            }
            "mirror" => {
                self.expect('(')?;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(KnotExpr::Mirror(Box::new(inner)))
            }
            "" => {
                self.pos = start;
                match self.peek() {
                    Some(c) => Err(self.error(&format!("expected a knot, found '{c}'"))),
                    None => Err(self.error("expected a knot, found end of input")),
                }
            }
            other => {
                let msg = format!("unknown knot '{other}'");
                self.pos = start;
                Err(self.error(&msg))
            }
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let mut len = 0;
        if self.rest().starts_with(['-', '+']) {
            len = 1;
        }
        len += self.rest()[len..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len() - len);
        let tok = &self.src[start..start + len];
        let value = tok
            .parse::<i64>()
            .ok()
            .filter(|v| v.unsigned_abs() <= u32::MAX as u64)
            .ok_or_else(|| self.error("expected an integer"))?;
        self.pos += len;
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_terms() {
        assert_eq!(
            parse_knot("T(2,3)").unwrap(),
            KnotExpr::Torus { p: 2, q: 3 }
        );
        assert_eq!(parse_knot("U").unwrap(), KnotExpr::Unknot);
        assert_eq!(parse_knot(" T ( 1 , 7 ) ").unwrap(), KnotExpr::Unknot);
    }

    #[test]
    fn sums_and_mirrors() {
        let k = parse_knot("T(5,6) # mirror(T(3,4))").unwrap();
        assert_eq!(
            k,
            KnotExpr::ConnectedSum(
                Box::new(KnotExpr::Torus { p: 5, q: 6 }),
                Box::new(KnotExpr::Mirror(Box::new(KnotExpr::Torus { p: 3, q: 4 })))
            )
        );
        let k = parse_knot("U#U#T(2,3)").unwrap();
        match k {
            KnotExpr::ConnectedSum(l, r) => {
                assert!(matches!(*l, KnotExpr::ConnectedSum(_, _)));
                assert_eq!(*r, KnotExpr::Torus { p: 2, q: 3 });
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_knot("mirror(T(2,3) # U)").is_ok());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_knot("T(2,4)"), Err(Error::InvalidInput(_))));
        assert!(matches!(parse_knot("T(3,2)"), Err(Error::InvalidInput(_))));
        assert!(matches!(parse_knot("T(-2,3)"), Err(Error::InvalidInput(_))));
        assert!(matches!(
            parse_knot("T(2 3)"),
            Err(Error::Syntax { pos: 4, .. })
        ));
        assert!(matches!(parse_knot(""), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_knot("K"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(
            parse_knot("U U"),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(parse_knot("T(2,3) #"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_knot("mirror(U"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_knot("T(99999999999,3)"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn display_round_trip() {
        for s in [
            "U",
            "T(2,3)",
            "T(5,6) # mirror(T(3,4))",
            "mirror(T(2,3) # T(3,5)) # U",
        ] {
            let k = parse_knot(s).unwrap();
            assert_eq!(parse_knot(&k.to_string()).unwrap(), k);
        }
    }
}
