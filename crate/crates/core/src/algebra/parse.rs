//! Textual polynomial syntax.
//!
//! Named variables, integer and `a/b` literals, the imaginary unit `i`,
//! `+ - * / ^` and parentheses.  Division is only allowed by constants.

use rug::{Integer, Rational};

use super::grat::GRat;
use super::mpoly::MPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Integer),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = vec![];
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = chars[st..i].iter().collect();
            out.push((st, Tok::Num(lit.parse::<Integer>().unwrap())));
        } else if ch.is_alphabetic() || ch == '_' {
            let st = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((st, Tok::Ident(chars[st..i].iter().collect())));
        } else if "+-*/^()".contains(ch) {
            out.push((i, Tok::Op(ch)));
            i += 1;
        } else {
            return Err(perr(i, format!("unexpected character '{}'", ch)));
        }
    }
    Ok(out)
}

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { location: format!("column {}", pos + 1), message: msg.into() }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    names: &'a [String],
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn n(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            let at = self.here();
            self.pos += 1;
            let t = self.unary()?;
            if c == '*' {
                acc = &acc * &t;
            } else {
                match t.constant_value() {
                    Some(k) if !k.is_zero() => acc = acc.scale(&k.inv().unwrap()),
                    Some(_) => return Err(perr(at, "division by zero")),
                    None => return Err(perr(at, "division by a non-constant")),
                }
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let at = self.here();
            match self.peek().cloned() {
                Some(Tok::Num(k)) => {
                    self.pos += 1;
                    let k = k.to_u32().ok_or_else(|| perr(at, "exponent too large"))?;
                    Ok(base.pow(k))
                }
                _ => Err(perr(at, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MPoly> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(k)) => {
                self.pos += 1;
                Ok(MPoly::constant(self.n(), GRat::from_rational(Rational::from(k))))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(v) = self.names.iter().position(|x| *x == name) {
                    Ok(MPoly::var(self.n(), v))
                } else if name == "i" {
                    Ok(MPoly::constant(self.n(), GRat::i()))
                } else {
                    Err(perr(at, format!("unknown variable '{}'", name)))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(perr(self.here(), "expected ')'")),
                }
            }
            Some(t) => Err(perr(at, format!("unexpected token {:?}", t))),
            None => Err(perr(at, "unexpected end of input")),
        }
    }
}

/// Parse `s` as a polynomial in the variables `names`.
pub fn parse_poly(s: &str, names: &[String]) -> Result<MPoly> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(perr(0, "empty polynomial"));
    }
    let mut p = Parser { toks, pos: 0, names, end: s.chars().count() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(perr(p.here(), "trailing input"));
    }
    Ok(e)
}

/// Parse a Gaussian rational scalar such as `3/4`, `-i`, `1/2+3*i`.
pub fn parse_scalar(s: &str) -> Result<GRat> {
    let p = parse_poly(s, &[])?;
    Ok(p.constant_value().unwrap_or_default())
}

/// Canonical text: descending graded-lex terms, coefficients in lowest terms.
pub fn format_poly(p: &MPoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms_grlex_desc().into_iter().enumerate() {
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(v, &d)| if d == 1 { names[v].clone() } else { format!("{}^{}", names[v], d) })
            .collect();
        let (neg, body) = if c.is_real() {
            let neg = c.re().cmp0().is_lt();
            let a = Rational::from(c.re().abs_ref());
            (neg, if a == 1 && !mono.is_empty() { String::new() } else { a.to_string() })
        } else if c.re().cmp0().is_eq() {
            let neg = c.im().cmp0().is_lt();
            let a = Rational::from(c.im().abs_ref());
            (neg, if a == 1 { "i".to_string() } else { format!("{}*i", a) })
        } else {
            (false, format!("({})", c))
        };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
        if !mono.is_empty() {
            if !body.is_empty() {
                out.push('*');
            }
            out.push_str(&mono.join("*"));
        }
    }
    out
}

/// Names `prefix1..prefixN`.
pub fn indexed_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{}{}", prefix, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        indexed_names("z", 3)
    }

    #[test]
    fn parses_and_prints() {
        let p = parse_poly("z1^2 - z2^3 + (1/2+i)*z3 - 3/4", &names()).unwrap();
        assert_eq!(format_poly(&p, &names()), "-z2^3 + z1^2 + (1/2+i)*z3 - 3/4");
        let q = parse_poly(&format_poly(&p, &names()), &names()).unwrap();
        assert_eq!(p, q);
        let r = parse_poly("-i*z1 + 2*i", &names()).unwrap();
        assert_eq!(format_poly(&r, &names()), "-i*z1 + 2*i");
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(parse_poly("z1^^2", &names()), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("z1/z2", &names()), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("q+1", &names()), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("(z1+1", &names()), Err(Error::Parse { .. })));
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("-i").unwrap(), -GRat::i());
        assert_eq!(parse_scalar("3/4").unwrap(), GRat::from_ratio(3, 4));
    }
}
