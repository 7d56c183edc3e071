//! Text grammar for game expressions, so games can be entered, stored and
//! round-tripped:
//!
//! ```text
//! expr := term (('+'|'-') term)*
//! term := '-' term | atom
//! atom := INT | INT '/' INT | '*' INT? | 'up' | 'down' | NAME | '{' list '|' list '}'
//! list := (expr (',' expr)*)?
//! ```
//!
//! Dyadic literals write their denominator in decimal (`21/64`); it must be
//! a power of two. A nimber index binds only when adjacent to the star:
//! `*2` is a nimber, `* 2` is two atoms. All error positions are byte
//! offsets into the parsed string.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arena::{Arena, GameId};
use crate::dyadic::Dyadic;

/// Abstract syntax of a game expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(Dyadic),
    Star(u32),
    Up,
    Down,
    Braces(Vec<Expr>, Vec<Expr>),
    Neg(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Diff(Box<Expr>, Box<Expr>),
    Name(String, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("evaluation error at {position}: {message}")]
pub struct EvalError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Star(Option<u32>),
    Up,
    Down,
    Name(String),
    Plus,
    Minus,
    Slash,
    Comma,
    Pipe,
    LBrace,
    RBrace,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, i));
                i += 1;
            }
            '|' => {
                toks.push((Tok::Pipe, i));
                i += 1;
            }
            '{' => {
                toks.push((Tok::LBrace, i));
                i += 1;
            }
            '}' => {
                toks.push((Tok::RBrace, i));
                i += 1;
            }
            '*' => {
                let start = i;
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i > digits_start {
                    let n: u32 = text[digits_start..i].parse().map_err(|_| ParseError {
                        position: digits_start,
                        message: "nimber index too large".into(),
                    })?;
                    toks.push((Tok::Star(Some(n)), start));
                } else {
                    toks.push((Tok::Star(None), start));
                }
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits form an integer");
                toks.push((Tok::Int(n), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "up" => Tok::Up,
                    "down" => Tok::Down,
                    _ => Tok::Name(word.to_string()),
                };
                toks.push((tok, start));
            }
            _ => {
                let c = text[i..].chars().next().unwrap();
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.here(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = Expr::Sum(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = Expr::Diff(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            let inner = self.term()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some((tok, pos)) = self.bump() else {
            return Err(ParseError {
                position: self.end,
                message: "expected a game expression".into(),
            });
        };
        match tok {
            Tok::Int(numer) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let denom_pos = self.here();
                    let Some((Tok::Int(denom), _)) = self.bump() else {
                        return Err(ParseError {
                            position: denom_pos,
                            message: "expected a denominator".into(),
                        });
                    };
                    if denom.is_zero() || !denom.is_positive() {
                        return Err(ParseError {
                            position: denom_pos,
                            message: "denominator must be a positive power of two".into(),
                        });
                    }
                    let tz = denom.trailing_zeros().unwrap_or(0);
                    if !(&denom >> tz).is_one() {
                        return Err(ParseError {
                            position: denom_pos,
                            message: format!("denominator {denom} is not a power of two"),
                        });
                    }
                    Ok(Expr::Number(Dyadic::new(numer, tz as u32)))
                } else {
                    Ok(Expr::Number(Dyadic::integer(numer)))
                }
            }
            Tok::Star(n) => Ok(Expr::Star(n.unwrap_or(1))),
            Tok::Up => Ok(Expr::Up),
            Tok::Down => Ok(Expr::Down),
            Tok::Name(n) => Ok(Expr::Name(n, pos)),
            Tok::LBrace => {
                let left = self.list()?;
                let pipe_pos = self.here();
                if !matches!(self.bump(), Some((Tok::Pipe, _))) {
                    return Err(ParseError {
                        position: pipe_pos,
                        message: "expected `|` between option lists".into(),
                    });
                }
                let right = self.list()?;
                let close_pos = self.here();
                if !matches!(self.bump(), Some((Tok::RBrace, _))) {
                    return Err(ParseError {
                        position: close_pos,
                        message: "expected `}` to close the game".into(),
                    });
                }
                Ok(Expr::Braces(left, right))
            }
            _ => Err(ParseError {
                position: pos,
                message: "expected a game expression".into(),
            }),
        }
    }

    fn list(&mut self) -> Result<Vec<Expr>, ParseError> {
        let mut items = Vec::new();
        if matches!(self.peek(), Some(Tok::Pipe) | Some(Tok::RBrace) | None) {
            return Ok(items);
        }
        items.push(self.expr()?);
        while let Some(Tok::Comma) = self.peek() {
            self.bump();
            items.push(self.expr()?);
        }
        Ok(items)
    }
}

/// Parses a complete expression; trailing input is an error.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let expr = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return parser.err("unexpected trailing input");
    }
    Ok(expr)
}

/// Parses the longest expression starting at the beginning of `text` and
/// returns it with the byte offset where the rest of the input begins.
/// Used by commands that take two expressions in a row.
pub fn parse_prefix(text: &str) -> Result<(Expr, usize), ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let expr = parser.expr()?;
    Ok((expr, parser.here()))
}

impl Arena {
    /// Builds the game a parsed expression denotes, resolving name
    /// references through `bindings`.
    pub fn evaluate(
        &mut self,
        expr: &Expr,
        bindings: &HashMap<String, GameId>,
    ) -> Result<GameId, EvalError> {
        match expr {
            Expr::Number(d) => Ok(self.dyadic_to_game(d)),
            Expr::Star(n) => Ok(self.nimber_to_game(*n)),
            Expr::Up => Ok(self.up()),
            Expr::Down => Ok(self.down()),
            Expr::Braces(left, right) => {
                let mut l = Vec::with_capacity(left.len());
                for e in left {
                    l.push(self.evaluate(e, bindings)?);
                }
                let mut r = Vec::with_capacity(right.len());
                for e in right {
                    r.push(self.evaluate(e, bindings)?);
                }
                Ok(self.make_game(&l, &r))
            }
            Expr::Neg(inner) => {
                let g = self.evaluate(inner, bindings)?;
                Ok(self.negate(g))
            }
            Expr::Sum(a, b) => {
                let ga = self.evaluate(a, bindings)?;
                let gb = self.evaluate(b, bindings)?;
                Ok(self.add(ga, gb))
            }
            Expr::Diff(a, b) => {
                let ga = self.evaluate(a, bindings)?;
                let gb = self.evaluate(b, bindings)?;
                Ok(self.sub(ga, gb))
            }
            Expr::Name(name, pos) => bindings.get(name).copied().ok_or_else(|| EvalError {
                position: *pos,
                message: format!("unknown name `{name}`"),
            }),
        }
    }

    /// Canonical text for a game: recognized numbers print as dyadics,
    /// nimbers as `*n`, the up and down games by name, everything else in
    /// brace notation over canonical options. Parsing the result back
    /// evaluates to an equal game.
    pub fn render(&mut self, g: GameId) -> String {
        let c = self.canonical_form(g);
        self.render_canonical(c)
    }

    fn render_canonical(&mut self, c: GameId) -> String {
        if let Some(d) = self.game_to_number(c) {
            return d.to_string();
        }
        if self.is_impartial(c) {
            let n = self.grundy(c).expect("impartiality checked above");
            return n.to_string();
        }
        if c == self.up() {
            return "up".to_string();
        }
        if c == self.down() {
            return "down".to_string();
        }
        let (left, right) = self.options(c);
        let l: Vec<String> = left.iter().map(|&x| self.render_canonical(x)).collect();
        let r: Vec<String> = right.iter().map(|&x| self.render_canonical(x)).collect();
        format!("{{{}|{}}}", l.join(","), r.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{Comparison, OutcomeClass};

    fn eval(a: &mut Arena, text: &str) -> GameId {
        let expr = parse(text).unwrap();
        a.evaluate(&expr, &HashMap::new()).unwrap()
    }

    #[test]
    fn parses_the_named_atoms() {
        let mut a = Arena::new();
        assert_eq!(eval(&mut a, "{0|0}"), a.star());
        assert_eq!(eval(&mut a, "{|}"), a.zero());
        assert_eq!(eval(&mut a, "up"), a.up());
        assert_eq!(eval(&mut a, "down"), a.down());
        assert_eq!(eval(&mut a, "*"), a.star());
        let s3 = a.nimber_to_game(3);
        assert_eq!(eval(&mut a, "*3"), s3);
        let star = a.star();
        let g = eval(&mut a, "{0,*|1/2}");
        let zero = a.zero();
        let half = a.dyadic_to_game(&Dyadic::new(1, 1));
        assert_eq!(g, a.make_game(&[zero, star], &[half]));
    }

    #[test]
    fn sums_differences_and_negation() {
        let mut a = Arena::new();
        let g = eval(&mut a, "1/2 + 1/2");
        let one = a.one();
        assert_eq!(a.compare(g, one), Comparison::Equal);
        let g = eval(&mut a, "up + up + *");
        assert_eq!(a.outcome(g), OutcomeClass::Positive);
        let g = eval(&mut a, "1 - 1");
        assert_eq!(a.compare(g, a.zero()), Comparison::Equal);
        let g = eval(&mut a, "-{1|2}");
        let h = eval(&mut a, "{-2|-1}");
        assert_eq!(g, h);
    }

    #[test]
    fn star_index_binds_only_when_adjacent() {
        let mut a = Arena::new();
        let (expr, consumed) = parse_prefix("* 3").unwrap();
        assert_eq!(expr, Expr::Star(1));
        assert_eq!(consumed, 2);
        assert_eq!(eval(&mut a, "*2"), a.nimber_to_game(2));
        assert!(parse("* 3").is_err()); // trailing input
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("{0|").unwrap_err();
        assert_eq!(e.position, 3);
        let e = parse("1/3").unwrap_err();
        assert_eq!(e.position, 2);
        assert!(e.message.contains("power of two"));
        let e = parse("1 + $").unwrap_err();
        assert_eq!(e.position, 4);
        let e = parse("").unwrap_err();
        assert_eq!(e.position, 0);
        let e = parse("{0|0} extra").unwrap_err();
        assert_eq!(e.position, 6);
    }

    #[test]
    fn unknown_names_fail_at_evaluation() {
        let mut a = Arena::new();
        let expr = parse("g + 1").unwrap();
        let err = a.evaluate(&expr, &HashMap::new()).unwrap_err();
        assert_eq!(err.position, 0);
        let mut bindings = HashMap::new();
        bindings.insert("g".to_string(), a.star());
        let g = a.evaluate(&expr, &bindings).unwrap();
        let star = a.star();
        let one = a.one();
        let expected = a.add(star, one);
        assert_eq!(g, expected);
    }

    #[test]
    fn rendering_recognizes_values() {
        let mut a = Arena::new();
        assert_eq!(a.render(a.zero()), "0");
        assert_eq!(a.render(a.star()), "*");
        assert_eq!(a.render(a.up()), "up");
        assert_eq!(a.render(a.down()), "down");
        let half = a.dyadic_to_game(&Dyadic::new(1, 1));
        assert_eq!(a.render(half), "1/2");
        let s = a.star();
        let sum = a.add(s, s);
        assert_eq!(a.render(sum), "0");
        let one = a.one();
        let two = a.add(one, one);
        let switch = a.make_game(&[two], &[one]);
        assert_eq!(a.render(switch), "{2|1}");
        let s2 = a.nimber_to_game(2);
        assert_eq!(a.render(s2), "*2");
        let neg_half = a.dyadic_to_game(&Dyadic::new(-1, 1));
        assert_eq!(a.render(neg_half), "-1/2");
    }

    #[test]
    fn render_round_trips_through_parse() {
        let mut a = Arena::new();
        let star = a.star();
        let up = a.up();
        let one = a.one();
        let zero = a.zero();
        let g1 = a.make_game(&[up, star], &[zero]);
        let g2 = a.add(g1, one);
        let g3 = a.make_game(&[g2, zero], &[g1]);
        for g in [g1, g2, g3] {
            let text = a.render(g);
            let back = eval(&mut a, &text);
            assert_eq!(a.compare(back, g), Comparison::Equal, "{text}");
        }
    }
}
