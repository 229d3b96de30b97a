//! Tokenizer, parser and evaluator for catalog expressions.
//!
//! Scalar level (elements of the symmetric algebra):
//!
//! ```text
//! sexpr  := ['+'|'-'] sterm (('+'|'-') sterm)*
//! sterm  := sfactor (['*'] sfactor)*
//! sfactor:= satom ['^' INT]
//! satom  := INT ['/' INT] | tr['^'INT] '(' mexpr ')' | '(' sexpr ')'
//!         | sum_sgn[HEADER] sterm
//! ```
//!
//! Matrix level (inside `tr`):
//!
//! ```text
//! mexpr  := ['+'|'-'] mterm (('+'|'-') mterm)*
//! mterm  := mfactor+
//! mfactor:= matom ['^' INT]
//! matom  := INT | LETTER | s3(m,m,m) | s5(m,m,m,m,m) | '[' m ',' m ']' | '(' mexpr ')'
//! ```
//!
//! Letters are `x1`..`x9`, `x{s1}` (sigma(1)) and `x{t1}` (tau(1)). A
//! permutation sum header is a comma list of `s in Sk`, `t in Sk` and
//! `s1=1` (sigma fixes 1); the sum binds the rest of its product term, and
//! each summand carries `sign(sigma) * sign(tau)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::genmat::signed_permutations;

use super::trace::{NcPoly, TraceExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LetterRef {
    Fixed(u8),
    Sigma(u8),
    Tau(u8),
}

/// Placeholder letters used while evaluating a permutation-sum body.
const SIGMA_BASE: u8 = 200;
const TAU_BASE: u8 = 230;

impl LetterRef {
    fn placeholder(self) -> u8 {
        match self {
            LetterRef::Fixed(n) => n,
            LetterRef::Sigma(i) => SIGMA_BASE + i,
            LetterRef::Tau(i) => TAU_BASE + i,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermSpec {
    pub sigma: usize,
    pub sigma_fixes_one: bool,
    pub tau: Option<usize>,
}

impl fmt::Display for PermSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s in S{}", self.sigma)?;
        if let Some(t) = self.tau {
            write!(f, ", t in S{t}")?;
        }
        if self.sigma_fixes_one {
            write!(f, ", s1=1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Token {
    Num(u64),
    Letter(LetterRef),
    /// `tr` or `tr^k`, always followed by `(`.
    Tr(u32),
    Std(usize),
    Sum(PermSpec),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Num(n) => write!(f, "{n}"),
            Token::Letter(LetterRef::Fixed(n)) => write!(f, "x{n}"),
            Token::Letter(LetterRef::Sigma(n)) => write!(f, "x{{s{n}}}"),
            Token::Letter(LetterRef::Tau(n)) => write!(f, "x{{t{n}}}"),
            Token::Tr(1) => write!(f, "tr"),
            Token::Tr(k) => write!(f, "tr^{k}"),
            Token::Std(k) => write!(f, "s{k}"),
            Token::Sum(p) => write!(f, "sum_sgn[{p}] "),
            Token::LParen => write!(f, "("),
            Token::RParen => write!(f, ")"),
            Token::LBracket => write!(f, "["),
            Token::RBracket => write!(f, "]"),
            Token::Comma => write!(f, ","),
            Token::Plus => write!(f, " + "),
            Token::Minus => write!(f, " - "),
            Token::Star => write!(f, "*"),
            Token::Slash => write!(f, "/"),
            Token::Caret => write!(f, "^"),
        }
    }
}

/// Renders tokens back to source text.
pub fn render_tokens(tokens: &[Token]) -> String {
    let mut s: String = tokens.iter().map(|t| t.to_string()).collect();
    if s.starts_with(" - ") {
        s = format!("-{}", &s[3..]);
    }
    s.trim().to_string()
}

fn parse_header(text: &str, pos: usize) -> Result<PermSpec> {
    let err = |msg: String| Error::Parse { pos, msg };
    let mut spec = PermSpec {
        sigma: 0,
        sigma_fixes_one: false,
        tau: None,
    };
    for item in text.split(',') {
        let item: String = item.split_whitespace().collect::<Vec<_>>().join(" ");
        if item == "s1=1" || item == "s1 = 1" {
            spec.sigma_fixes_one = true;
            continue;
        }
        let words: Vec<&str> = item.split(' ').collect();
        match words.as_slice() {
            [var, "in", group] if group.starts_with('S') => {
                let n: usize = group[1..]
                    .parse()
                    .map_err(|_| err(format!("bad group {group:?}")))?;
                if !(1..=8).contains(&n) {
                    return Err(err(format!("group S{n} out of range")));
                }
                match *var {
                    "s" => spec.sigma = n,
                    "t" => spec.tau = Some(n),
                    _ => return Err(err(format!("unknown permutation variable {var:?}"))),
                }
            }
            _ => return Err(err(format!("bad sum header item {item:?}"))),
        }
    }
    if spec.sigma == 0 {
        return Err(err("sum header without `s in Sk`".into()));
    }
    Ok(spec)
}

pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let rest = &src[i..];
        if rest.starts_with("sum_sgn[") {
            let close = rest
                .find(']')
                .ok_or_else(|| err(i, "unterminated sum header"))?;
            out.push(Token::Sum(parse_header(&rest[8..close], i)?));
            i += close + 1;
            continue;
        }
        if rest.starts_with("tr") {
            i += 2;
            let mut k = 1;
            if i < b.len() && b[i] == b'^' {
                let start = i + 1;
                let mut j = start;
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                if j == start {
                    return Err(err(i, "expected exponent after tr^"));
                }
                k = src[start..j]
                    .parse()
                    .map_err(|_| err(start, "bad exponent"))?;
                i = j;
            }
            out.push(Token::Tr(k));
            continue;
        }
        if rest.starts_with("s3") || rest.starts_with("s5") {
            out.push(Token::Std((b[i + 1] - b'0') as usize));
            i += 2;
            continue;
        }
        match c {
            b'x' => {
                if i + 1 < b.len() && b[i + 1].is_ascii_digit() && b[i + 1] != b'0' {
                    out.push(Token::Letter(LetterRef::Fixed(b[i + 1] - b'0')));
                    i += 2;
                } else if rest.len() >= 5
                    && b[i + 1] == b'{'
                    && b[i + 4] == b'}'
                    && b[i + 3].is_ascii_digit()
                {
                    let n = b[i + 3] - b'0';
                    let l = match b[i + 2] {
                        b's' => LetterRef::Sigma(n),
                        b't' => LetterRef::Tau(n),
                        _ => return Err(err(i, "expected x{sN} or x{tN}")),
                    };
                    out.push(Token::Letter(l));
                    i += 5;
                } else {
                    return Err(err(i, "bad letter"));
                }
            }
            b'0'..=b'9' => {
                let start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token::Num(
                    src[start..i]
                        .parse()
                        .map_err(|_| err(start, "number too large"))?,
                ));
            }
            b'(' => {
                out.push(Token::LParen);
                i += 1;
            }
            b')' => {
                out.push(Token::RParen);
                i += 1;
            }
            b'[' => {
                out.push(Token::LBracket);
                i += 1;
            }
            b']' => {
                out.push(Token::RBracket);
                i += 1;
            }
            b',' => {
                out.push(Token::Comma);
                i += 1;
            }
            b'+' => {
                out.push(Token::Plus);
                i += 1;
            }
            b'-' => {
                out.push(Token::Minus);
                i += 1;
            }
            b'*' => {
                out.push(Token::Star);
                i += 1;
            }
            b'/' => {
                out.push(Token::Slash);
                i += 1;
            }
            b'^' => {
                out.push(Token::Caret);
                i += 1;
            }
            _ => return Err(err(i, &format!("unexpected character {:?}", c as char))),
        }
    }
    Ok(out)
}

/// Scalar-level expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum SExpr {
    Const(Rat),
    Trace(MExpr),
    Sum(Vec<(bool, SExpr)>),
    Product(Vec<SExpr>),
    Pow(Box<SExpr>, u32),
    PermSum(PermSpec, Box<SExpr>),
}

/// Matrix-level expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum MExpr {
    Const(Rat),
    Letter(LetterRef),
    Sum(Vec<(bool, MExpr)>),
    Product(Vec<MExpr>),
    Pow(Box<MExpr>, u32),
    Standard(Vec<MExpr>),
    Commutator(Box<MExpr>, Box<MExpr>),
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            let found = self
                .peek()
                .map(|x| format!("{x:?}"))
                .unwrap_or_else(|| "end of input".into());
            self.err(format!("expected {t:?}, found {found}"))
        }
    }

    fn exponent(&mut self) -> Result<Option<u32>> {
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(&Token::Num(n)) if n <= 16 => {
                    self.pos += 1;
                    Ok(Some(n as u32))
                }
                _ => self.err("expected small exponent"),
            }
        } else {
            Ok(None)
        }
    }

    fn rational(&mut self, n: u64) -> Result<Rat> {
        if self.peek() == Some(&Token::Slash) {
            self.pos += 1;
            match self.peek() {
                Some(&Token::Num(m)) if m > 0 => {
                    self.pos += 1;
                    Ok(Rat::new(n as i64, m as i64))
                }
                _ => self.err("expected denominator"),
            }
        } else {
            Ok(Rat::from_int(n as i64))
        }
    }

    fn sexpr(&mut self) -> Result<SExpr> {
        let mut terms = Vec::new();
        let mut neg = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            terms.push((neg, self.sterm()?));
            match self.peek() {
                Some(Token::Plus) => neg = false,
                Some(Token::Minus) => neg = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(if terms.len() == 1 && !terms[0].0 {
            terms.pop().unwrap().1
        } else {
            SExpr::Sum(terms)
        })
    }

    fn starts_sfactor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Num(_) | Token::Tr(_) | Token::LParen | Token::Sum(_))
        )
    }

    fn sterm(&mut self) -> Result<SExpr> {
        let mut factors = vec![self.sfactor()?];
        loop {
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
                factors.push(self.sfactor()?);
            } else if self.starts_sfactor() {
                factors.push(self.sfactor()?);
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            SExpr::Product(factors)
        })
    }

    fn sfactor(&mut self) -> Result<SExpr> {
        let atom = match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                SExpr::Const(self.rational(n)?)
            }
            Some(Token::Tr(k)) => {
                self.pos += 1;
                self.expect(Token::LParen)?;
                let m = self.mexpr()?;
                self.expect(Token::RParen)?;
                let t = SExpr::Trace(m);
                if k == 1 {
                    t
                } else {
                    SExpr::Pow(Box::new(t), k)
                }
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let e = self.sexpr()?;
                self.expect(Token::RParen)?;
                e
            }
            Some(Token::Sum(spec)) => {
                self.pos += 1;
                let body = self.sterm()?;
                return Ok(SExpr::PermSum(spec, Box::new(body)));
            }
            _ => return self.err("expected a scalar factor"),
        };
        Ok(match self.exponent()? {
            Some(e) => SExpr::Pow(Box::new(atom), e),
            None => atom,
        })
    }

    fn mexpr(&mut self) -> Result<MExpr> {
        let mut terms = Vec::new();
        let mut neg = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            terms.push((neg, self.mterm()?));
            match self.peek() {
                Some(Token::Plus) => neg = false,
                Some(Token::Minus) => neg = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(if terms.len() == 1 && !terms[0].0 {
            terms.pop().unwrap().1
        } else {
            MExpr::Sum(terms)
        })
    }

    fn starts_mfactor(&self) -> bool {
        matches!(
            self.peek(),
            Some(
                Token::Num(_) | Token::Letter(_) | Token::Std(_) | Token::LBracket | Token::LParen
            )
        )
    }

    fn mterm(&mut self) -> Result<MExpr> {
        let mut factors = vec![self.mfactor()?];
        while self.starts_mfactor() {
            factors.push(self.mfactor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            MExpr::Product(factors)
        })
    }

    fn mfactor(&mut self) -> Result<MExpr> {
        let atom = match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                MExpr::Const(self.rational(n)?)
            }
            Some(Token::Letter(l)) => {
                self.pos += 1;
                MExpr::Letter(l)
            }
            Some(Token::Std(k)) => {
                self.pos += 1;
                self.expect(Token::LParen)?;
                let mut args = vec![self.mexpr()?];
                for _ in 1..k {
                    self.expect(Token::Comma)?;
                    args.push(self.mexpr()?);
                }
                self.expect(Token::RParen)?;
                MExpr::Standard(args)
            }
            Some(Token::LBracket) => {
                self.pos += 1;
                let a = self.mexpr()?;
                self.expect(Token::Comma)?;
                let b = self.mexpr()?;
                self.expect(Token::RBracket)?;
                MExpr::Commutator(Box::new(a), Box::new(b))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let e = self.mexpr()?;
                self.expect(Token::RParen)?;
                e
            }
            _ => return self.err("expected a matrix factor"),
        };
        Ok(match self.exponent()? {
            Some(e) => MExpr::Pow(Box::new(atom), e),
            None => atom,
        })
    }
}

pub fn parse_tokens(toks: &[Token]) -> Result<SExpr> {
    let mut p = Parser { toks, pos: 0 };
    let e = p.sexpr()?;
    if p.pos != toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn parse(src: &str) -> Result<SExpr> {
    parse_tokens(&tokenize(src)?)
}

fn eval_m(e: &MExpr) -> NcPoly {
    match e {
        MExpr::Const(c) => NcPoly::scalar(c.clone()),
        MExpr::Letter(l) => NcPoly::letter(l.placeholder()),
        MExpr::Sum(terms) => {
            let mut acc = NcPoly::zero();
            for (neg, t) in terms {
                acc.add_scaled(&eval_m(t), &Rat::from_int(if *neg { -1 } else { 1 }));
            }
            acc
        }
        MExpr::Product(fs) => fs
            .iter()
            .fold(NcPoly::scalar(Rat::one()), |acc, f| acc.mul(&eval_m(f))),
        MExpr::Pow(b, k) => eval_m(b).pow(*k),
        MExpr::Standard(args) => NcPoly::standard(&args.iter().map(eval_m).collect::<Vec<_>>()),
        MExpr::Commutator(a, b) => NcPoly::commutator(&eval_m(a), &eval_m(b)),
    }
}

/// All `(sigma, tau, sign)` for a permutation-sum header; permutations are
/// 1-based images `sigma[i-1] = sigma(i)`.
fn expand_header(spec: &PermSpec) -> Vec<(Vec<u8>, Vec<u8>, i64)> {
    let sigmas: Vec<(Vec<u8>, i64)> = signed_permutations(spec.sigma)
        .into_iter()
        .map(|(p, s)| (p.iter().map(|&v| v as u8 + 1).collect::<Vec<u8>>(), s))
        .filter(|(p, _)| !spec.sigma_fixes_one || p[0] == 1)
        .collect();
    let taus: Vec<(Vec<u8>, i64)> = match spec.tau {
        Some(n) => signed_permutations(n)
            .into_iter()
            .map(|(p, s)| (p.iter().map(|&v| v as u8 + 1).collect(), s))
            .collect(),
        None => vec![(Vec::new(), 1)],
    };
    let mut out = Vec::with_capacity(sigmas.len() * taus.len());
    for (s, ss) in &sigmas {
        for (t, ts) in &taus {
            out.push((s.clone(), t.clone(), ss * ts));
        }
    }
    out
}

fn eval_s(e: &SExpr) -> Result<TraceExpr> {
    Ok(match e {
        SExpr::Const(c) => TraceExpr::constant(c.clone()),
        SExpr::Trace(m) => TraceExpr::trace_of(&eval_m(m)),
        SExpr::Sum(terms) => {
            let mut acc = TraceExpr::zero();
            for (neg, t) in terms {
                acc.add_scaled(&eval_s(t)?, &Rat::from_int(if *neg { -1 } else { 1 }));
            }
            acc
        }
        SExpr::Product(fs) => {
            let mut acc = TraceExpr::constant(Rat::one());
            for f in fs {
                acc = acc.mul(&eval_s(f)?);
            }
            acc
        }
        SExpr::Pow(b, k) => eval_s(b)?.pow(*k),
        SExpr::PermSum(spec, body) => {
            let body = eval_s(body)?;
            let mut acc = TraceExpr::zero();
            for (sigma, tau, sign) in expand_header(spec) {
                let relabel = |l: u8| -> u8 {
                    if l >= TAU_BASE {
                        tau.get((l - TAU_BASE) as usize - 1).copied().unwrap_or(0)
                    } else if l >= SIGMA_BASE {
                        sigma
                            .get((l - SIGMA_BASE) as usize - 1)
                            .copied()
                            .unwrap_or(0)
                    } else {
                        l
                    }
                };
                acc.add_scaled(&body.relabel(relabel), &Rat::from_int(sign));
            }
            acc
        }
    })
}

fn check_letters(e: &SExpr, spec: Option<&PermSpec>) -> Result<()> {
    fn walk_m(m: &MExpr, spec: Option<&PermSpec>) -> Result<()> {
        match m {
            MExpr::Const(_) => Ok(()),
            MExpr::Letter(l) => {
                let ok = match (l, spec) {
                    (LetterRef::Fixed(_), _) => true,
                    (LetterRef::Sigma(i), Some(s)) => {
                        (*i as usize) >= 1 && (*i as usize) <= s.sigma
                    }
                    (LetterRef::Tau(i), Some(s)) => s
                        .tau
                        .is_some_and(|n| (*i as usize) >= 1 && (*i as usize) <= n),
                    _ => false,
                };
                if ok {
                    Ok(())
                } else {
                    Err(Error::Parse {
                        pos: 0,
                        msg: format!("permutation letter {l:?} outside a matching sum"),
                    })
                }
            }
            MExpr::Sum(ts) => ts.iter().try_for_each(|(_, t)| walk_m(t, spec)),
            MExpr::Product(fs) | MExpr::Standard(fs) => fs.iter().try_for_each(|f| walk_m(f, spec)),
            MExpr::Pow(b, _) => walk_m(b, spec),
            MExpr::Commutator(a, b) => {
                walk_m(a, spec)?;
                walk_m(b, spec)
            }
        }
    }
    match e {
        SExpr::Const(_) => Ok(()),
        SExpr::Trace(m) => walk_m(m, spec),
        SExpr::Sum(ts) => ts.iter().try_for_each(|(_, t)| check_letters(t, spec)),
        SExpr::Product(fs) => fs.iter().try_for_each(|f| check_letters(f, spec)),
        SExpr::Pow(b, _) => check_letters(b, spec),
        SExpr::PermSum(s, body) => {
            if spec.is_some() {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "nested permutation sums".into(),
                });
            }
            check_letters(body, Some(s))
        }
    }
}

/// Evaluates a parsed expression to a formal trace expression.
pub fn evaluate(e: &SExpr) -> Result<TraceExpr> {
    check_letters(e, None)?;
    eval_s(e)
}

/// Parses and evaluates in one step.
pub fn trace_expr(src: &str) -> Result<TraceExpr> {
    evaluate(&parse(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_roundtrip() {
        let src = "tr(s3(x1,x2,x3)x{s1})tr^2(x1x2) - 2tr([x1,x2]^2)*tr(x1^3)";
        let toks = tokenize(src).unwrap();
        assert_eq!(tokenize(&render_tokens(&toks)).unwrap(), toks);
        assert!(tokenize("tr(y1)").is_err());
    }

    #[test]
    fn simple_values() {
        let e = trace_expr("tr(x1x2) - tr(x2x1)").unwrap();
        assert!(e.is_zero());
        let e = trace_expr("tr(x1)tr(x1x2)").unwrap();
        assert!(e.is_zero());
        let a = trace_expr("tr^2(x1x2)").unwrap();
        let b = trace_expr("tr(x1x2)^2").unwrap();
        assert_eq!(a, b);
        let c = trace_expr("3/2 tr(x1^2) + 1/2tr(x1x1)").unwrap();
        assert_eq!(c, trace_expr("2tr(x1^2)").unwrap());
    }

    #[test]
    fn perm_sum_signs() {
        // sum over S2 of sign * tr(x_{s1}^2 x_{s2}) = tr(x1^2x2) - tr(x2^2x1)
        let e = trace_expr("sum_sgn[s in S2] tr(x{s1}^2x{s2})").unwrap();
        assert_eq!(e, trace_expr("tr(x1^2x2) - tr(x2^2x1)").unwrap());
        let f = trace_expr("sum_sgn[s in S3, s1=1] tr(x{s1}x{s2}x{s3})").unwrap();
        assert_eq!(f, trace_expr("tr(x1x2x3) - tr(x1x3x2)").unwrap());
        let g = trace_expr("sum_sgn[s in S2, t in S2] tr(x{s1}x{t1})tr(x{s2}x{t2})").unwrap();
        assert_eq!(g, trace_expr("2tr(x1^2)tr(x2^2) - 2tr(x1x2)^2").unwrap());
    }

    #[test]
    fn sum_binds_term() {
        let e = trace_expr("sum_sgn[s in S2] tr(x{s1}x1)tr(x{s2}^2) + tr(x3^2)").unwrap();
        let f = trace_expr("tr(x1^2)tr(x2^2) - tr(x1x2)tr(x1^2) + tr(x3^2)").unwrap();
        assert_eq!(e, f);
    }

    #[test]
    fn parse_errors() {
        assert!(parse("tr(x1x2))").is_err());
        assert!(parse("(tr(x1x2)").is_err());
        assert!(trace_expr("tr(x{s1}x1)").is_err());
        assert!(parse("tr(s3(x1,x2))").is_err());
    }
}
