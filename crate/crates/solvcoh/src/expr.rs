//! A small expression grammar for forms on the command line.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('^' factor)*          -- '^' is the wedge product
//! factor := rational | 'i' | symbol | character | '(' expr ')' | '-' factor
//! ```
//!
//! Symbols are coframe labels (`phi2`, `psi1`) or their conjugates with
//! `bar` spliced before the numeric suffix (`phibar2`, `psibar1`).
//! Characters are referenced by label with an optional integer exponent
//! in braces: `f{2}`, `beta1{-1}`, bare `f` meaning exponent 1. Scalars
//! are integers or fractions like `3/4`; `i` is the imaginary unit.
//! Wedging 0-forms is scalar multiplication, so `-1^beta1{-1}^psibar1`
//! reads naturally.

use thiserror::Error;

use crate::character::Character;
use crate::element::Element;
use crate::model::ManifoldModel;
use crate::monomial::FormMonomial;
use crate::scalar::Scalar;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("unexpected character {0:?} at position {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of expression")]
    UnexpectedEnd,
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("expected {expected}, found {found}")]
    Expected { expected: String, found: String },
    #[error("bad exponent for character {0}")]
    BadExponent(String),
    #[error("trailing input at position {0}")]
    TrailingInput(usize),
    #[error("division by zero in scalar literal")]
    DivisionByZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Number(i64),
    Ident(String),
    Plus,
    Minus,
    Wedge,
    Slash,
    LParen,
    RParen,
    LBrace,
    RBrace,
}

fn tokenize(input: &str) -> Result<Vec<Token>, ExprError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '^' => {
                out.push(Token::Wedge);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '{' => {
                out.push(Token::LBrace);
                i += 1;
            }
            '}' => {
                out.push(Token::RBrace);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Number(s.parse().map_err(|_| {
                    ExprError::Expected {
                        expected: "integer".into(),
                        found: s.clone(),
                    }
                })?));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(ExprError::UnexpectedChar(other, i)),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    model: &'a ManifoldModel,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Token, what: &str) -> Result<(), ExprError> {
        match self.next() {
            Some(found) if &found == t => Ok(()),
            Some(found) => Err(ExprError::Expected {
                expected: what.into(),
                found: format!("{found:?}"),
            }),
            None => Err(ExprError::UnexpectedEnd),
        }
    }

    fn parse_expr(&mut self) -> Result<Element, ExprError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    acc = acc.add(&self.parse_term()?);
                }
                Some(Token::Minus) => {
                    self.next();
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Element, ExprError> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(&Token::Wedge) {
            self.next();
            let f = self.parse_factor()?;
            acc = acc
                .checked_wedge(&f)
                .expect("parser builds elements over one model");
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Element, ExprError> {
        let arity = self.model.arity();
        match self.next() {
            None => Err(ExprError::UnexpectedEnd),
            Some(Token::Minus) => Ok(self.parse_factor()?.neg()),
            Some(Token::LParen) => {
                let e = self.parse_expr()?;
                self.expect(&Token::RParen, ")")?;
                Ok(e)
            }
            Some(Token::Number(num)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.next();
                    match self.next() {
                        Some(Token::Number(den)) => {
                            if den == 0 {
                                return Err(ExprError::DivisionByZero);
                            }
                            Ok(Element::term(
                                Character::trivial(arity),
                                FormMonomial::ONE,
                                Scalar::from_ratio(num, den),
                            ))
                        }
                        other => Err(ExprError::Expected {
                            expected: "denominator".into(),
                            found: format!("{other:?}"),
                        }),
                    }
                } else {
                    Ok(Element::term(
                        Character::trivial(arity),
                        FormMonomial::ONE,
                        Scalar::from_int(num),
                    ))
                }
            }
            Some(Token::Ident(name)) => self.resolve_ident(&name),
            Some(other) => Err(ExprError::Expected {
                expected: "factor".into(),
                found: format!("{other:?}"),
            }),
        }
    }

    fn resolve_ident(&mut self, name: &str) -> Result<Element, ExprError> {
        let arity = self.model.arity();
        if name == "i" {
            return Ok(Element::term(
                Character::trivial(arity),
                FormMonomial::ONE,
                Scalar::i(),
            ));
        }
        // coframe symbol, possibly conjugated with an infix "bar"
        if let Some(idx) = self.model.label_index(name) {
            return Ok(Element::monomial(
                arity,
                FormMonomial::from_indices(&[idx], &[]),
            ));
        }
        if let Some(base) = debar(name) {
            if let Some(idx) = self.model.label_index(&base) {
                return Ok(Element::monomial(
                    arity,
                    FormMonomial::from_indices(&[], &[idx]),
                ));
            }
        }
        // character label with optional {exponent}
        if let Some(ci) = self.model.character_index(name) {
            let exp = if self.peek() == Some(&Token::LBrace) {
                self.next();
                let sign = if self.peek() == Some(&Token::Minus) {
                    self.next();
                    -1i64
                } else {
                    1
                };
                let k = match self.next() {
                    Some(Token::Number(k)) => k,
                    _ => return Err(ExprError::BadExponent(name.to_string())),
                };
                self.expect(&Token::RBrace, "}")?;
                sign * k
            } else {
                1
            };
            let exp32 =
                i32::try_from(exp).map_err(|_| ExprError::BadExponent(name.to_string()))?;
            let chi = Character::basis(arity, ci).pow(exp32);
            return Ok(Element::term(chi, FormMonomial::ONE, Scalar::one()));
        }
        Err(ExprError::UnknownSymbol(name.to_string()))
    }
}

/// Strip an infix "bar" from a conjugated symbol: `phibar12` → `phi12`.
fn debar(name: &str) -> Option<String> {
    let idx = name.find("bar")?;
    let (prefix, rest) = name.split_at(idx);
    let suffix = &rest[3..];
    if prefix.is_empty() {
        return None;
    }
    Some(format!("{prefix}{suffix}"))
}

/// Parse a form expression over a model's labels.
pub fn parse_element(m: &ManifoldModel, input: &str) -> Result<Element, ExprError> {
    let tokens = tokenize(input)?;
    let mut p = Parser {
        model: m,
        tokens,
        pos: 0,
    };
    let e = p.parse_expr()?;
    if p.pos != p.tokens.len() {
        return Err(ExprError::TrailingInput(p.pos));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn parses_wedges_and_bars() {
        let m = families::bigalke_rollenske(2).unwrap();
        let e = parse_element(&m, "phi2^phibar2").unwrap();
        assert_eq!(
            e,
            Element::monomial(0, FormMonomial::from_indices(&[1], &[1]))
        );
    }

    #[test]
    fn parses_scalars_sums_and_characters() {
        let out = families::nakamura(&families::NakamuraParams {
            lambdas: vec![crate::scalar::ratio(1, 1), crate::scalar::ratio(-1, 1)],
            t: crate::scalar::ratio(1, 1),
        })
        .unwrap();
        let m = &out.model;
        let e = parse_element(m, "-1/2 ^ f{2} ^ (phi0 + phi1) ^ phibar2").unwrap();
        assert_eq!(e.characters(), vec![Character::from_exponents(vec![2])]);
        assert_eq!(e.len(), 2);

        let inv = parse_element(m, "f{-1}").unwrap();
        assert_eq!(inv.characters(), vec![Character::from_exponents(vec![-1])]);

        let bare = parse_element(m, "f").unwrap();
        assert_eq!(bare.characters(), vec![Character::from_exponents(vec![1])]);
    }

    #[test]
    fn imaginary_unit_and_precedence() {
        let m = families::torus(2).unwrap();
        let e = parse_element(&m, "i^phi1 + 2^phi2").unwrap();
        assert_eq!(e.len(), 2);
        let neg = parse_element(&m, "-phi1^phi2").unwrap();
        assert_eq!(
            neg,
            Element::monomial(0, FormMonomial::from_indices(&[0, 1], &[])).neg()
        );
    }

    #[test]
    fn errors_are_reported() {
        let m = families::torus(2).unwrap();
        assert!(matches!(
            parse_element(&m, "phi9"),
            Err(ExprError::UnknownSymbol(_))
        ));
        assert!(matches!(
            parse_element(&m, "phi1 +"),
            Err(ExprError::UnexpectedEnd)
        ));
        assert!(matches!(
            parse_element(&m, "phi1)"),
            Err(ExprError::TrailingInput(_))
        ));
        assert!(matches!(
            parse_element(&m, "1/0"),
            Err(ExprError::DivisionByZero)
        ));
    }
}
