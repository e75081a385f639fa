//! Expressions over generators, parameters and named constructors.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? integer)?
//! atom  := integer | q | r | g<i> | e<i> | name '(' integer (',' integer)* ')' | '(' expr ')'
//! ```

use bwm_core::idempotents::{self, Family, Side, VariantId};
use bwm_core::{Algebra, Coefficients, GenTok, Kind, Word};

use crate::backend::Elem;
use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(i64),
    Q,
    R,
    Gen(Kind, usize),
    Call(String, Vec<i64>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().map(|x| x.1).collect();
            let v = s.parse::<i64>().map_err(|_| CliError::Syntax {
                pos,
                msg: format!("integer {s} out of range"),
            })?;
            out.push((pos, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].1.is_ascii_alphanumeric() || chars[k].1 == '_' || chars[k].1 == '\'') {
                k += 1;
            }
            out.push((pos, Tok::Ident(chars[start..k].iter().map(|x| x.1).collect())));
        } else if "+-*/^(),".contains(c) {
            out.push((pos, Tok::Sym(c)));
            k += 1;
        } else {
            return Err(CliError::Syntax {
                pos,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(CliError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            match self.peek().cloned() {
                Some(Tok::Int(v)) => {
                    self.at += 1;
                    return Ok(Expr::Pow(Box::new(base), if neg { -v } else { v }));
                }
                _ => return self.err("expected an integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        let pos = self.pos();
        self.at += 1;
        match tok {
            Tok::Int(v) => Ok(Expr::Int(v)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym(c) => Err(CliError::Syntax {
                pos,
                msg: format!("unexpected '{c}'"),
            }),
            Tok::Ident(name) => {
                if self.eat('(') {
                    let mut args = Vec::new();
                    loop {
                        match self.peek().cloned() {
                            Some(Tok::Int(v)) => {
                                self.at += 1;
                                args.push(v);
                            }
                            _ => return self.err("expected an integer argument"),
                        }
                        if !self.eat(',') {
                            break;
                        }
                    }
                    self.expect(')')?;
                    return Ok(Expr::Call(name, args));
                }
                match name.as_str() {
                    "q" => return Ok(Expr::Q),
                    "r" => return Ok(Expr::R),
                    _ => {}
                }
                if let Some(t) = GenTok::parse(&name) {
                    return Ok(Expr::Gen(t.kind(), t.index()));
                }
                Err(CliError::Syntax {
                    pos,
                    msg: format!("unknown name {name}"),
                })
            }
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

fn eval_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Eval(msg.into()))
}

/// The coefficient of an element that is a multiple of the identity.
fn as_scalar<F: Coefficients>(f: &F, x: &Elem<F>) -> Option<F::Elem> {
    match x.len() {
        0 => Some(f.zero()),
        1 => x.coeff(&Word::empty()).cloned(),
        _ => None,
    }
}

fn usize_arg(v: i64) -> Result<usize> {
    usize::try_from(v).or_else(|_| eval_err(format!("negative index {v}")))
}

fn named<F: Coefficients>(alg: &Algebra<F>, name: &str, args: &[i64]) -> Result<Elem<F>> {
    let f = alg.field();
    let n = alg.rank();
    let arity = |want: usize| -> Result<()> {
        if args.len() == want {
            Ok(())
        } else {
            eval_err(format!("{name} takes {want} argument(s)"))
        }
    };
    match name {
        "S" | "A" => {
            arity(1)?;
            let m = usize_arg(args[0])?;
            let x = if name == "S" {
                idempotents::symmetrizer(alg, m, VariantId::RightB)?
            } else {
                idempotents::antisymmetrizer(alg, m, VariantId::RightB)?
            };
            return Ok(x);
        }
        _ => {}
    }
    let (sign, rest) = if let Some(r) = name.strip_prefix("bplus").or_else(|| name.strip_prefix("aplus")).or_else(|| name.strip_prefix("dplus")) {
        (Side::Plus, r)
    } else if let Some(r) = name.strip_prefix("bminus").or_else(|| name.strip_prefix("aminus")).or_else(|| name.strip_prefix("dminus")) {
        (Side::Minus, r)
    } else {
        return eval_err(format!("unknown constructor {name}"));
    };
    let fam = match (&name[..1], rest) {
        ("b", "") => Family::RightDown,
        ("b", "_left") => Family::RightUp,
        ("a", "") => Family::LeftUp,
        ("a", "_left") => Family::LeftDown,
        ("d", "") => Family::Tail,
        ("d", "_prime") => Family::TailFlipped,
        ("d", "_bar") => Family::TailReversed,
        ("d", "_bar_prime") => Family::TailFlippedReversed,
        _ => return eval_err(format!("unknown constructor {name}")),
    };
    if fam.two_index() {
        arity(2)?;
        Ok(idempotents::family(f, n, fam, sign, usize_arg(args[0])?, usize_arg(args[1])?)?)
    } else {
        arity(1)?;
        Ok(idempotents::family(f, n, fam, sign, usize_arg(args[0])?, 0)?)
    }
}

/// Evaluates in `alg`; the result is reduced.
pub fn eval<F: Coefficients>(alg: &Algebra<F>, e: &Expr) -> Result<Elem<F>> {
    let x = eval_raw(alg, e)?;
    Ok(alg.reduce(&x)?)
}

fn eval_raw<F: Coefficients>(alg: &Algebra<F>, e: &Expr) -> Result<Elem<F>> {
    let f = alg.field();
    Ok(match e {
        Expr::Int(v) => alg.scalar(f.from_int(*v)),
        Expr::Q => alg.scalar(f.q()),
        Expr::R => alg.scalar(f.r()),
        Expr::Gen(Kind::G, i) => alg.g(*i)?,
        Expr::Gen(Kind::E, i) => alg.e(*i)?,
        Expr::Call(name, args) => named(alg, name, args)?,
        Expr::Neg(a) => eval_raw(alg, a)?.neg(f),
        Expr::Add(a, b) => eval_raw(alg, a)?.add(f, &eval_raw(alg, b)?),
        Expr::Sub(a, b) => eval_raw(alg, a)?.sub(f, &eval_raw(alg, b)?),
        Expr::Mul(a, b) => {
            let (x, y) = (eval_raw(alg, a)?, eval_raw(alg, b)?);
            match (as_scalar(f, &x), as_scalar(f, &y)) {
                (Some(c), _) => y.scale(f, &c),
                (_, Some(c)) => x.scale(f, &c),
                _ => alg.mul(&x, &y)?,
            }
        }
        Expr::Div(a, b) => {
            let x = eval_raw(alg, a)?;
            let Some(c) = as_scalar(f, &alg.reduce(&eval_raw(alg, b)?)?) else {
                return eval_err("division by an element that is not a scalar");
            };
            let Some(inv) = f.inv(&c) else {
                return eval_err("division by zero");
            };
            x.scale(f, &inv)
        }
        Expr::Pow(a, k) => {
            let k = *k;
            if let (Expr::Gen(Kind::G, i), true) = (&**a, k < 0) {
                let inv = alg.g_inv(*i)?;
                return power(alg, &inv, k.unsigned_abs());
            }
            let x = eval_raw(alg, a)?;
            if let Some(c) = as_scalar(f, &x) {
                if k < 0 && f.is_zero(&c) {
                    return eval_err("negative power of zero");
                }
                let k = i32::try_from(k).or_else(|_| eval_err("exponent out of range"))?;
                return Ok(alg.scalar(f.pow(&c, k)));
            }
            if k < 0 {
                return eval_err("negative powers are only defined for scalars and g<i>");
            }
            power(alg, &x, k as u64)?
        }
    })
}

fn power<F: Coefficients>(alg: &Algebra<F>, x: &Elem<F>, k: u64) -> Result<Elem<F>> {
    let mut acc = alg.one();
    for _ in 0..k {
        acc = alg.mul(&acc, x)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bwm_core::Exact;

    #[test]
    fn shapes() {
        let e = parse("g1*e2*g1").unwrap();
        assert!(matches!(e, Expr::Mul(..)));
        let e = parse("S(3) - A(3)").unwrap();
        assert_eq!(
            e,
            Expr::Sub(
                Box::new(Expr::Call("S".into(), vec![3])),
                Box::new(Expr::Call("A".into(), vec![3]))
            )
        );
        assert_eq!(parse("g1^-1").unwrap(), Expr::Pow(Box::new(Expr::Gen(Kind::G, 1)), -1));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("g1 * (e2 + ") {
            Err(CliError::Syntax { pos, .. }) => assert_eq!(pos, 11),
            other => panic!("{other:?}"),
        }
        match parse("g1 $ e1") {
            Err(CliError::Syntax { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inverse_expands() {
        let alg = Algebra::new(Exact::new(), 3);
        let x = eval(&alg, &parse("g1^-1").unwrap()).unwrap();
        let y = eval(&alg, &parse("g1 - (q - q^-1) + (q - q^-1)*e1").unwrap()).unwrap();
        assert_eq!(x, y);
        let one = eval(&alg, &parse("g2^-1 * g2").unwrap()).unwrap();
        assert_eq!(one, alg.one());
    }

    #[test]
    fn constructors_and_division() {
        let alg = Algebra::new(Exact::new(), 3);
        let s = eval(&alg, &parse("S(2)").unwrap()).unwrap();
        let t = eval(&alg, &parse("(1 + q*g1 + q*(q - q^-1)/(1 - q*r)*e1)/(q*(q + q^-1))").unwrap()).unwrap();
        assert_eq!(s, t);
        assert!(eval(&alg, &parse("dplus(3, 2)").unwrap()).is_ok());
        assert!(eval(&alg, &parse("g1 / e1").unwrap()).is_err());
        assert!(eval(&alg, &parse("bplus(3)").unwrap()).is_err());
    }
}
