//! Surface syntax for elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := atom "'"* ('^' '-'? int)?
//! atom   := int | name | 'j' int '(' expr ')' | '(' expr ')'
//! ```
//!
//! Names are `q`, `qb`, `zeta`, `i` or a generator of the selected algebra.
//! Scalars and generators share one grammar, so every rendered element
//! parses back to itself.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::algebra::{AlgebraError, Element, Presentation, Word};
use crate::braided::{embed, leg_factor};
use crate::scalars::Scalar;

/// A syntax or evaluation error at a 1-based character column.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

fn err<T>(column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { column, message: message.into() })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Prime,
    Open,
    Close,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '\'' => Some(Tok::Prime),
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            k += 1;
        } else if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            out.push((Tok::Int(digits.parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push((Tok::Name(chars[start..k].iter().collect()), col));
        } else {
            return err(col, format!("unexpected character '{c}'"));
        }
    }
    Ok(out)
}

/// Parsed expression with the column of its head token.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub column: usize,
    pub node: Node,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Int(BigInt),
    Name(String),
    Leg(usize, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Adjoint(Box<Expr>),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    /// Column of the next token, or of the last one at end of input.
    fn column(&self) -> usize {
        self.toks.get(self.pos).or(self.toks.last()).map_or(1, |(_, c)| *c)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let make: fn(Box<Expr>, Box<Expr>) -> Node = match self.peek() {
                Some(Tok::Plus) => Node::Add,
                Some(Tok::Minus) => Node::Sub,
                _ => return Ok(lhs),
            };
            let (_, column) = self.bump().expect("peeked");
            let rhs = self.term()?;
            lhs = Expr { column, node: make(Box::new(lhs), Box::new(rhs)) };
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let make: fn(Box<Expr>, Box<Expr>) -> Node = match self.peek() {
                Some(Tok::Star) => Node::Mul,
                Some(Tok::Slash) => Node::Div,
                _ => return Ok(lhs),
            };
            let (_, column) = self.bump().expect("peeked");
            let rhs = self.unary()?;
            lhs = Expr { column, node: make(Box::new(lhs), Box::new(rhs)) };
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            let (_, column) = self.bump().expect("peeked");
            let inner = self.unary()?;
            return Ok(Expr { column, node: Node::Neg(Box::new(inner)) });
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.atom()?;
        while self.peek() == Some(&Tok::Prime) {
            let (_, column) = self.bump().expect("peeked");
            e = Expr { column, node: Node::Adjoint(Box::new(e)) };
        }
        if self.peek() == Some(&Tok::Caret) {
            let (_, column) = self.bump().expect("peeked");
            let neg = if self.peek() == Some(&Tok::Minus) {
                self.bump();
                true
            } else {
                false
            };
            let at = self.column();
            let n = match self.bump() {
                Some((Tok::Int(n), _)) => n,
                _ => return err(at, "expected an integer exponent"),
            };
            let n = if neg { -n } else { n };
            let Some(n) = n.to_i32().filter(|n| n.abs() <= 4096) else {
                return err(at, "exponent out of range");
            };
            e = Expr { column, node: Node::Pow(Box::new(e), n) };
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.column();
        match self.bump() {
            Some((Tok::Int(n), column)) => Ok(Expr { column, node: Node::Int(n) }),
            Some((Tok::Name(name), column)) => {
                if let Some(leg) = leg_index(&name) {
                    if self.peek() == Some(&Tok::Open) {
                        let inner = self.group()?;
                        return Ok(Expr { column, node: Node::Leg(leg, Box::new(inner)) });
                    }
                }
                Ok(Expr { column, node: Node::Name(name) })
            }
            Some((Tok::Open, _)) => {
                self.pos -= 1;
                self.group()
            }
            Some((t, column)) => err(column, format!("unexpected {}", describe(&t))),
            None => err(at, "unexpected end of input"),
        }
    }

    /// `'(' expr ')'`; an unclosed group is reported at its `(`.
    fn group(&mut self) -> Result<Expr, ParseError> {
        let (_, open) = self.bump().expect("caller saw '('");
        if self.peek().is_none() {
            return err(open, "unclosed '('");
        }
        let inner = self.expr()?;
        match self.bump() {
            Some((Tok::Close, _)) => Ok(inner),
            Some((t, column)) => err(column, format!("expected ')', found {}", describe(&t))),
            None => err(open, "unclosed '('"),
        }
    }
}

fn leg_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('j')?;
    (!digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit())).then(|| digits.parse().ok()).flatten()
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::Name(s) => format!("name '{s}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::Prime => "'''".into(),
        Tok::Open => "'('".into(),
        Tok::Close => "')'".into(),
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return err(1, "empty expression");
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if let Some((t, column)) = p.bump() {
        return err(column, format!("unexpected {}", describe(&t)));
    }
    Ok(e)
}

fn scalar_name(name: &str) -> Option<Scalar> {
    Some(match name {
        "q" => Scalar::q(),
        "qb" => Scalar::qbar(),
        "zeta" => Scalar::zeta(),
        "i" => Scalar::i(),
        _ => return None,
    })
}

fn int_scalar(n: &BigInt) -> Scalar {
    Scalar::from_rational(n.clone().into())
}

fn alg(column: usize) -> impl Fn(AlgebraError) -> ParseError {
    move |e| ParseError { column, message: e.to_string() }
}

impl Expr {
    /// Evaluates to a normalized element of `p`.
    pub fn eval(&self, p: &Arc<Presentation>) -> Result<Element, ParseError> {
        let col = self.column;
        let scalar_of = |e: &Element| e.as_scalar();
        Ok(match &self.node {
            Node::Int(n) => Element::scalar(p, int_scalar(n)),
            Node::Name(name) => match scalar_name(name) {
                Some(s) => Element::scalar(p, s),
                None => match p.generator(name) {
                    Some(g) => Element::generator(p, g),
                    None if p.is_atomic() => return err(col, format!("unknown-generator: '{name}' in {}", p.label())),
                    None => return err(col, format!("unknown-generator: '{name}'; use j1(...), j2(...) for legs of {}", p.label())),
                },
            },
            Node::Leg(leg, inner) => {
                let factor = leg_factor(p, *leg).map_err(alg(col))?;
                let x = inner.eval(&factor)?;
                embed(p, *leg, &x).map_err(alg(col))?
            }
            Node::Neg(x) => x.eval(p)?.neg(),
            Node::Add(x, y) => x.eval(p)?.try_add(&y.eval(p)?).map_err(alg(col))?,
            Node::Sub(x, y) => x.eval(p)?.try_sub(&y.eval(p)?).map_err(alg(col))?,
            Node::Mul(x, y) => x.eval(p)?.try_mul(&y.eval(p)?).map_err(alg(col))?,
            Node::Div(x, y) => {
                let d = y.eval(p)?;
                let Some(s) = scalar_of(&d) else {
                    return err(y.column, "only scalars can be divisors");
                };
                let inv = s.inv().map_err(|e| ParseError { column: y.column, message: e.to_string() })?;
                x.eval(p)?.scale(&inv)
            }
            Node::Pow(x, n) => {
                let base = x.eval(p)?;
                if *n >= 0 {
                    base.pow(*n as u32).map_err(alg(col))?
                } else {
                    let Some(s) = scalar_of(&base) else {
                        return err(col, "negative powers need a scalar base");
                    };
                    let s = s.inv().map_err(|e| ParseError { column: col, message: e.to_string() })?;
                    Element::scalar(p, s.pow(-n))
                }
            }
            Node::Adjoint(x) => x.eval(p)?.try_adjoint().map_err(alg(col))?,
        })
    }

    /// Expands to an unreduced sum of words, multiplying letters in the order
    /// written. Atomic presentations only.
    pub fn expand(&self, p: &Arc<Presentation>) -> Result<Vec<(Word, Scalar)>, ParseError> {
        let col = self.column;
        let only_scalar = |t: &[(Word, Scalar)]| -> Option<Scalar> {
            t.iter().try_fold(Scalar::zero(), |acc, (w, c)| w.is_empty().then(|| acc.add(c)))
        };
        Ok(match &self.node {
            Node::Int(n) => vec![(Word::empty(), int_scalar(n))],
            Node::Name(name) => match scalar_name(name) {
                Some(s) => vec![(Word::empty(), s)],
                None => match p.generator(name) {
                    Some(g) => vec![(Word::letter(g), Scalar::one())],
                    None => return err(col, format!("unknown-generator: '{name}' in {}", p.label())),
                },
            },
            Node::Leg(..) => return err(col, "leg embeddings cannot be expanded without rewriting"),
            Node::Neg(x) => x.expand(p)?.into_iter().map(|(w, c)| (w, c.neg())).collect(),
            Node::Add(x, y) => {
                let mut t = x.expand(p)?;
                t.extend(y.expand(p)?);
                t
            }
            Node::Sub(x, y) => {
                let mut t = x.expand(p)?;
                t.extend(y.expand(p)?.into_iter().map(|(w, c)| (w, c.neg())));
                t
            }
            Node::Mul(x, y) => product(&x.expand(p)?, &y.expand(p)?),
            Node::Div(x, y) => {
                let Some(s) = only_scalar(&y.expand(p)?) else {
                    return err(y.column, "only scalars can be divisors");
                };
                let inv = s.inv().map_err(|e| ParseError { column: y.column, message: e.to_string() })?;
                x.expand(p)?.into_iter().map(|(w, c)| (w, c.mul(&inv))).collect()
            }
            Node::Pow(x, n) => {
                let base = x.expand(p)?;
                if *n < 0 {
                    let Some(s) = only_scalar(&base) else {
                        return err(col, "negative powers need a scalar base");
                    };
                    let s = s.inv().map_err(|e| ParseError { column: col, message: e.to_string() })?;
                    vec![(Word::empty(), s.pow(-n))]
                } else {
                    (0..*n).fold(vec![(Word::empty(), Scalar::one())], |acc, _| product(&acc, &base))
                }
            }
            Node::Adjoint(x) => x
                .expand(p)?
                .into_iter()
                .map(|(w, c)| (w.letters().iter().rev().map(|&g| p.adjoint_of(g)).collect(), c.conj()))
                .collect(),
        })
    }
}

fn product(x: &[(Word, Scalar)], y: &[(Word, Scalar)]) -> Vec<(Word, Scalar)> {
    x.iter().flat_map(|(w1, c1)| y.iter().map(move |(w2, c2)| (w1.concat(w2), c1.mul(c2)))).collect()
}

/// Parses and evaluates in one step.
pub fn parse_element(text: &str, p: &Arc<Presentation>) -> Result<Element, ParseError> {
    parse(text)?.eval(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::suq2_presentation;
    use crate::braided::twisted_tensor;
    use crate::morphisms::{delta_su, zeta_of};

    #[test]
    fn relation_parses_to_zero() {
        let a = suq2_presentation(&Scalar::q()).unwrap();
        assert!(parse_element("a*g - qb*g*a", &a).unwrap().is_zero());
        assert_eq!(parse_element("a'*a", &a).unwrap().to_string(), "1 - g*g'");
        assert_eq!(parse_element("-g^2/2 + (q/qb)*g'", &a).unwrap().to_string(), "(q/qb)*g' - 1/2*g^2");
    }

    #[test]
    fn syntax_errors_have_columns() {
        assert_eq!(parse("a*(").unwrap_err().column, 3);
        assert_eq!(parse("a*").unwrap_err().column, 2);
        assert_eq!(parse("a + )").unwrap_err().column, 5);
        assert_eq!(parse("a $ g").unwrap_err().column, 3);
        assert_eq!(parse("(a*g").unwrap_err().column, 1);
        let a = suq2_presentation(&Scalar::q()).unwrap();
        assert_eq!(parse_element("a*w", &a).unwrap_err().column, 3);
    }

    #[test]
    fn delta_image_round_trips() {
        let a = suq2_presentation(&Scalar::q()).unwrap();
        let aa = twisted_tensor(&a, &a, &zeta_of(&a).unwrap()).unwrap();
        let d = delta_su(&a).unwrap();
        let x = parse_element("j1(a)*j2(a) - q*j1(g')*j2(g)", &aa).unwrap();
        assert_eq!(x, d.apply(&Element::named(&a, "a").unwrap()).unwrap());
        assert_eq!(parse_element(&x.to_string(), &aa).unwrap(), x);
    }

    #[test]
    fn expansion_keeps_word_order() {
        let a = suq2_presentation(&Scalar::q()).unwrap();
        let raw = parse("(a*g)' - 2").unwrap().expand(&a).unwrap();
        let shown: Vec<String> = raw.iter().map(|(w, c)| format!("{c} {}", a.render_word(w, Default::default()))).collect();
        assert_eq!(shown, vec!["1 g'*a'", "-2 1"]);
    }
}
