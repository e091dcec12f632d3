//! Text form of polynomials: "(q-q^-1)*x1.x3 + (-1)*x2.x2".

use super::{NCPoly, Word};
use crate::qcoeff::{parse_qrat, QError, QRat};

fn plain_integer(c: &QRat) -> bool {
    c.den().is_one() && c.num().degree() == 0
}

/// Terms in increasing monomial order; coefficient 1 is omitted on nonconstant words.
pub fn render(p: &NCPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = p
        .terms()
        .map(|(w, c)| match (w.is_empty(), c.is_one()) {
            (true, _) if plain_integer(c) => c.to_string(),
            (true, _) => format!("({c})"),
            (false, true) => w.to_string(),
            (false, false) => format!("({c})*{w}"),
        })
        .collect();
    parts.join(" + ")
}

fn err(pos: usize, msg: &str) -> QError {
    QError::Parse {
        pos,
        msg: msg.to_string(),
    }
}

/// Split at depth-0 '+' / '-' that start a new term; keeps the sign with the chunk.
fn split_terms(s: &str) -> Result<Vec<(usize, &str)>, QError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, &c) in b.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(err(i, "unbalanced ')'"));
                }
            }
            b'+' | b'-' if depth == 0 => {
                let prev = s[..i].trim_end().bytes().last();
                let continues = matches!(prev, None | Some(b'^' | b'*' | b'/' | b'+' | b'-' | b'('));
                if !continues {
                    out.push((start, &s[start..i]));
                    start = i;
                }
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(err(s.len(), "unbalanced '('"));
    }
    out.push((start, &s[start..]));
    Ok(out)
}

fn parse_word(s: &str, offset: usize) -> Result<Word, QError> {
    let s = s.trim();
    if s == "1" {
        return Ok(Word::empty());
    }
    let mut v = Vec::new();
    for part in s.split('.') {
        let idx = part
            .trim()
            .strip_prefix('x')
            .and_then(|d| d.parse::<u8>().ok())
            .filter(|&d| d >= 1)
            .ok_or_else(|| err(offset, &format!("bad generator {part:?}")))?;
        v.push(idx);
    }
    Ok(Word(v))
}

fn is_word(s: &str) -> bool {
    let s = s.trim();
    s.starts_with('x') && s[1..].bytes().all(|c| c.is_ascii_digit() || c == b'.' || c == b'x')
}

/// Parse the rendered grammar (also accepts "-x1", "2*x1", "q*x1.x2").
pub fn parse_ncpoly(s: &str) -> Result<NCPoly, QError> {
    let mut out = NCPoly::zero();
    if s.trim() == "0" {
        return Ok(out);
    }
    for (off, chunk) in split_terms(s)? {
        let mut t = chunk.trim();
        let mut sign = QRat::one();
        if let Some(rest) = t.strip_prefix('+') {
            t = rest.trim_start();
        } else if let Some(rest) = t.strip_prefix('-') {
            if is_word(rest) {
                sign = QRat::from_int(-1);
                t = rest.trim_start();
            }
        }
        if t.is_empty() {
            return Err(err(off, "empty term"));
        }
        // coefficient*word: the word is after the last depth-0 '*'
        let mut depth = 0i32;
        let mut star = None;
        for (i, c) in t.bytes().enumerate() {
            match c {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'*' if depth == 0 => star = Some(i),
                _ => {}
            }
        }
        let (coef, word) = match star {
            Some(i) if is_word(&t[i + 1..]) => (parse_qrat(&t[..i])?, parse_word(&t[i + 1..], off + i + 1)?),
            _ if is_word(t) => (QRat::one(), parse_word(t, off)?),
            _ => (parse_qrat(t)?, Word::empty()),
        };
        out.add_term(word, &(&coef * &sign));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_documented_example() {
        let mut p = NCPoly::zero();
        p.add_term(Word(vec![1, 3]), &QRat::qdiff());
        p.add_term(Word(vec![2, 2]), &QRat::from_int(-1));
        assert_eq!(render(&p), "(q-q^-1)*x1.x3 + (-1)*x2.x2");
        assert_eq!(parse_ncpoly(&render(&p)).unwrap(), p);
    }

    #[test]
    fn constants_and_zero() {
        assert_eq!(render(&NCPoly::zero()), "0");
        assert_eq!(render(&NCPoly::constant(QRat::from_int(-1))), "-1");
        assert_eq!(parse_ncpoly("-1").unwrap(), NCPoly::constant(QRat::from_int(-1)));
        assert_eq!(parse_ncpoly("1").unwrap(), NCPoly::one());
        assert_eq!(parse_ncpoly("0").unwrap(), NCPoly::zero());
    }

    #[test]
    fn loose_forms() {
        let p = parse_ncpoly("-x1.x2 + 2*x3 + q^-1*x1 - (q+1)").unwrap();
        assert_eq!(p.coeff(&Word(vec![1, 2])), QRat::from_int(-1));
        assert_eq!(p.coeff(&Word(vec![3])), QRat::from_int(2));
        assert_eq!(p.coeff(&Word(vec![1])), QRat::q_pow(-1));
        assert_eq!(p.coeff(&Word::empty()), -(QRat::q() + QRat::one()));
    }

    #[test]
    fn rejects_bad_generator() {
        assert!(parse_ncpoly("x0").is_err());
        assert!(parse_ncpoly("(q*x1").is_err());
    }
}
