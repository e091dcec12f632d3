//! Text grammar for coefficients: integers, q, + - * / ^ and parentheses.

use super::{QError, QRat};

pub fn parse_qrat(s: &str) -> Result<QRat, QError> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> QError {
        QError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<QRat, QError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc + t } else { acc - t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QRat, QError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let f = self.unary()?;
            acc = if c == b'*' {
                acc * f
            } else {
                acc.checked_div(&f).map_err(|_| self.err("division by zero"))?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<QRat, QError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.int(true)?;
            if base.is_zero() && e < 0 {
                return Err(self.err("negative power of zero"));
            }
            return Ok(base.pow(e as i32));
        }
        Ok(base)
    }

    fn int(&mut self, signed: bool) -> Result<i64, QError> {
        self.ws();
        let start = self.pos;
        if signed && self.s.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| QError::Parse {
                pos: start,
                msg: "expected integer".into(),
            })
    }

    fn atom(&mut self) -> Result<QRat, QError> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(QRat::q())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                self.ws();
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                Ok(QRat::from_bigint(t.parse().unwrap()))
            }
            _ => Err(self.err("expected coefficient")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rendered_forms() {
        for r in [
            QRat::qdiff(),
            -QRat::q(),
            QRat::q_pow(-3) * QRat::from_int(5),
            QRat::one() / (QRat::one() + QRat::q_pow(2)),
        ] {
            assert_eq!(parse_qrat(&r.to_string()).unwrap(), r);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_qrat("q+").is_err());
        assert!(parse_qrat("(q").is_err());
        assert!(parse_qrat("1/0").is_err());
    }
}
