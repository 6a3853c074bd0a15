//! Recursive-descent parser and evaluators for transcription oracles.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := base ('^' integer)?
//! base   := integer | symbol | func '(' expr ')' | '(' expr ')'
//! symbol := a | a1 | a2 | a3 | a4 | eta | xi1..xi6 | alpha | Q
//! func   := sin | cos | tan | cot | sec | csc
//! ```
//!
//! `Q` expands to the metric square-norm for the fixture's declared index n;
//! `alpha` and `a` both denote the scale factor.

use crate::error::{Result, RwsaError};
use crate::rational::Rat;
use num::{One, Zero};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sym {
    A,
    A1,
    A2,
    A3,
    A4,
    Eta,
    Xi(u8),
    Alpha,
    Q,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Cot,
    Sec,
    Csc,
}

#[derive(Clone, Debug)]
pub enum OracleExpr {
    Int(i64),
    Sym(Sym),
    Func(Func, Box<OracleExpr>),
    Pow(Box<OracleExpr>, i32),
    Neg(Box<OracleExpr>),
    Add(Box<OracleExpr>, Box<OracleExpr>),
    Sub(Box<OracleExpr>, Box<OracleExpr>),
    Mul(Box<OracleExpr>, Box<OracleExpr>),
    Div(Box<OracleExpr>, Box<OracleExpr>),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn err(&self, msg: impl Into<String>) -> RwsaError {
        RwsaError::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn next_tok(&mut self) -> Result<Tok> {
        while matches!(self.peek(), Some(b' ') | Some(b'\t') | Some(b'\n') | Some(b'\r')) {
            self.bump();
        }
        let b = match self.peek() {
            None => return Ok(Tok::End),
            Some(b) => b,
        };
        match b {
            b'+' => {
                self.bump();
                Ok(Tok::Plus)
            }
            b'-' => {
                self.bump();
                Ok(Tok::Minus)
            }
            b'*' => {
                self.bump();
                Ok(Tok::Star)
            }
            b'/' => {
                self.bump();
                Ok(Tok::Slash)
            }
            b'^' => {
                self.bump();
                Ok(Tok::Caret)
            }
            b'(' => {
                self.bump();
                Ok(Tok::LParen)
            }
            b')' => {
                self.bump();
                Ok(Tok::RParen)
            }
            b'0'..=b'9' => {
                let mut v: i64 = 0;
                while let Some(d @ b'0'..=b'9') = self.peek() {
                    self.bump();
                    v = v
                        .checked_mul(10)
                        .and_then(|x| x.checked_add((d - b'0') as i64))
                        .ok_or_else(|| self.err("integer literal overflows"))?;
                }
                Ok(Tok::Int(v))
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let mut s = String::new();
                while let Some(ch) = self.peek() {
                    if ch.is_ascii_alphanumeric() {
                        s.push(ch as char);
                        self.bump();
                    } else {
                        break;
                    }
                }
                Ok(Tok::Ident(s))
            }
            other => Err(self.err(format!("unexpected character {:?}", other as char))),
        }
    }
}

pub struct Parser<'a> {
    lex: Lexer<'a>,
    tok: Tok,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self> {
        let mut lex = Lexer::new(src);
        let tok = lex.next_tok()?;
        Ok(Parser { lex, tok })
    }

    fn advance(&mut self) -> Result<()> {
        self.tok = self.lex.next_tok()?;
        Ok(())
    }

    fn expr(&mut self) -> Result<OracleExpr> {
        let mut lhs = if self.tok == Tok::Minus {
            self.advance()?;
            OracleExpr::Neg(Box::new(self.term()?))
        } else {
            if self.tok == Tok::Plus {
                self.advance()?;
            }
            self.term()?
        };
        loop {
            match self.tok {
                Tok::Plus => {
                    self.advance()?;
                    let rhs = self.term()?;
                    lhs = OracleExpr::Add(Box::new(lhs), Box::new(rhs));
                }
                Tok::Minus => {
                    self.advance()?;
                    let rhs = self.term()?;
                    lhs = OracleExpr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<OracleExpr> {
        let mut lhs = self.factor()?;
        loop {
            match self.tok {
                Tok::Star => {
                    self.advance()?;
                    let rhs = self.factor()?;
                    lhs = OracleExpr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Tok::Slash => {
                    self.advance()?;
                    let rhs = self.factor()?;
                    lhs = OracleExpr::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<OracleExpr> {
        let base = self.base()?;
        if self.tok == Tok::Caret {
            self.advance()?;
            let neg = if self.tok == Tok::Minus {
                self.advance()?;
                true
            } else {
                false
            };
            match self.tok {
                Tok::Int(v) => {
                    self.advance()?;
                    let e = if neg { -(v as i32) } else { v as i32 };
                    return Ok(OracleExpr::Pow(Box::new(base), e));
                }
                _ => return Err(self.lex.err("expected integer exponent after ^")),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<OracleExpr> {
        match self.tok.clone() {
            Tok::Int(v) => {
                self.advance()?;
                Ok(OracleExpr::Int(v))
            }
            Tok::LParen => {
                self.advance()?;
                let e = self.expr()?;
                if self.tok != Tok::RParen {
                    return Err(self.lex.err("expected )"));
                }
                self.advance()?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.advance()?;
                if let Some(f) = func_of(&name) {
                    if self.tok != Tok::LParen {
                        return Err(self.lex.err(format!("{} must be applied to (...)", name)));
                    }
                    self.advance()?;
                    let arg = self.expr()?;
                    if self.tok != Tok::RParen {
                        return Err(self.lex.err("expected ) closing function argument"));
                    }
                    self.advance()?;
                    return Ok(OracleExpr::Func(f, Box::new(arg)));
                }
                let sym = sym_of(&name).ok_or_else(|| self.lex.err(format!("unknown symbol {name}")))?;
                Ok(OracleExpr::Sym(sym))
            }
            other => Err(self.lex.err(format!("unexpected token {:?}", other))),
        }
    }
}

fn func_of(s: &str) -> Option<Func> {
    Some(match s {
        "sin" => Func::Sin,
        "cos" => Func::Cos,
        "tan" => Func::Tan,
        "cot" => Func::Cot,
        "sec" => Func::Sec,
        "csc" => Func::Csc,
        _ => return None,
    })
}

fn sym_of(s: &str) -> Option<Sym> {
    Some(match s {
        "a" => Sym::A,
        "a1" => Sym::A1,
        "a2" => Sym::A2,
        "a3" => Sym::A3,
        "a4" => Sym::A4,
        "eta" => Sym::Eta,
        "alpha" => Sym::Alpha,
        "Q" => Sym::Q,
        _ => {
            let rest = s.strip_prefix("xi")?;
            let k: u8 = rest.parse().ok()?;
            if (1..=6).contains(&k) {
                Sym::Xi(k)
            } else {
                return None;
            }
        }
    })
}

pub fn parse_oracle(text: &str) -> Result<OracleExpr> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    if p.tok != Tok::End {
        return Err(p.lex.err(format!("trailing input starting with {:?}", p.tok)));
    }
    Ok(e)
}

// -- printing (determinism fixture) -------------------------------------------

impl fmt::Display for OracleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleExpr::Int(v) => write!(f, "{v}"),
            OracleExpr::Sym(s) => write!(f, "{}", sym_name(*s)),
            OracleExpr::Func(func, a) => write!(f, "{}({})", func_name(*func), a),
            OracleExpr::Pow(b, e) => match **b {
                OracleExpr::Int(_) | OracleExpr::Sym(_) | OracleExpr::Func(..) => {
                    write!(f, "{}^{}", b, e)
                }
                _ => write!(f, "({})^{}", b, e),
            },
            OracleExpr::Neg(a) => write!(f, "-{}", wrap_add(a)),
            OracleExpr::Add(a, b) => write!(f, "{} + {}", a, b),
            OracleExpr::Sub(a, b) => write!(f, "{} - {}", a, wrap_add(b)),
            OracleExpr::Mul(a, b) => write!(f, "{}*{}", wrap_add(a), wrap_add(b)),
            OracleExpr::Div(a, b) => write!(f, "{}/{}", wrap_add(a), wrap_tight(b)),
        }
    }
}

fn wrap_add(e: &OracleExpr) -> String {
    match e {
        OracleExpr::Add(..) | OracleExpr::Sub(..) | OracleExpr::Neg(..) => format!("({})", e),
        _ => format!("{}", e),
    }
}

fn wrap_tight(e: &OracleExpr) -> String {
    match e {
        OracleExpr::Add(..) | OracleExpr::Sub(..) | OracleExpr::Neg(..) | OracleExpr::Mul(..)
        | OracleExpr::Div(..) => format!("({})", e),
        _ => format!("{}", e),
    }
}

fn sym_name(s: Sym) -> &'static str {
    match s {
        Sym::A => "a",
        Sym::A1 => "a1",
        Sym::A2 => "a2",
        Sym::A3 => "a3",
        Sym::A4 => "a4",
        Sym::Eta => "eta",
        Sym::Alpha => "alpha",
        Sym::Q => "Q",
        Sym::Xi(1) => "xi1",
        Sym::Xi(2) => "xi2",
        Sym::Xi(3) => "xi3",
        Sym::Xi(4) => "xi4",
        Sym::Xi(5) => "xi5",
        Sym::Xi(6) => "xi6",
        Sym::Xi(_) => unreachable!(),
    }
}

fn func_name(f: Func) -> &'static str {
    match f {
        Func::Sin => "sin",
        Func::Cos => "cos",
        Func::Tan => "tan",
        Func::Cot => "cot",
        Func::Sec => "sec",
        Func::Csc => "csc",
    }
}

// -- evaluation ----------------------------------------------------------------

/// Trig argument shapes the exact evaluator accepts.
enum TrigArg {
    Eta,
    TwoEta,
}

fn classify_arg(e: &OracleExpr) -> Option<TrigArg> {
    match e {
        OracleExpr::Sym(Sym::Eta) => Some(TrigArg::Eta),
        OracleExpr::Mul(a, b) => match (&**a, &**b) {
            (OracleExpr::Int(2), OracleExpr::Sym(Sym::Eta)) => Some(TrigArg::TwoEta),
            (OracleExpr::Sym(Sym::Eta), OracleExpr::Int(2)) => Some(TrigArg::TwoEta),
            _ => None,
        },
        _ => None,
    }
}

/// Point for exact oracle evaluation: a Pythagorean eta (rational sin and
/// cos) plus rational xi's and scale-factor jet. The declared index fixes
/// the expansion of Q.
#[derive(Clone, Debug)]
pub struct OraclePoint {
    pub n: usize,
    pub sin_eta: Rat,
    pub cos_eta: Rat,
    pub xi: Vec<Rat>,
    pub a: Rat,
    pub aj: Vec<Rat>,
}

impl OraclePoint {
    fn trig(&self, f: Func, arg: TrigArg) -> Result<Rat> {
        let (s, c) = match arg {
            TrigArg::Eta => (self.sin_eta.clone(), self.cos_eta.clone()),
            TrigArg::TwoEta => (
                Rat::from_integer(2.into()) * &self.sin_eta * &self.cos_eta,
                &self.cos_eta * &self.cos_eta - &self.sin_eta * &self.sin_eta,
            ),
        };
        let div = |x: Rat, y: Rat| -> Result<Rat> {
            if y.is_zero() {
                Err(RwsaError::EvalDivisionByZero("trig pole"))
            } else {
                Ok(x / y)
            }
        };
        match f {
            Func::Sin => Ok(s),
            Func::Cos => Ok(c),
            Func::Tan => div(s, c),
            Func::Cot => div(c, s),
            Func::Sec => div(Rat::one(), c),
            Func::Csc => div(Rat::one(), s),
        }
    }

    pub fn q(&self) -> Rat {
        // xi1^2 + (xi2^2 + csc^2 xi3^2 + sec^2 xi4^2)/a^2 (+ xi5^2 + xi6^2)
        let a2 = &self.a * &self.a;
        let s2 = &self.sin_eta * &self.sin_eta;
        let c2 = &self.cos_eta * &self.cos_eta;
        let mut q = &self.xi[0] * &self.xi[0]
            + (&self.xi[1] * &self.xi[1]
                + &self.xi[2] * &self.xi[2] / s2
                + &self.xi[3] * &self.xi[3] / c2)
                / a2;
        for j in 4..2 * self.n + 2 {
            q += &self.xi[j] * &self.xi[j];
        }
        q
    }

    /// Map to the u-coordinate evaluation point of the engine expressions.
    pub fn to_exact_point(&self) -> crate::eval::ExactPoint {
        let mut u = self.xi.clone();
        u[2] = &self.xi[2] / &self.sin_eta;
        u[3] = &self.xi[3] / &self.cos_eta;
        crate::eval::ExactPoint {
            s: self.sin_eta.clone(),
            c: self.cos_eta.clone(),
            u,
            alpha: self.a.clone(),
            alphaj: self.aj.clone(),
        }
    }
}

pub fn eval_oracle_exact(e: &OracleExpr, p: &OraclePoint) -> Result<Rat> {
    match e {
        OracleExpr::Int(v) => Ok(Rat::from_integer((*v).into())),
        OracleExpr::Sym(s) => match s {
            Sym::A | Sym::Alpha => Ok(p.a.clone()),
            Sym::A1 => Ok(p.aj[0].clone()),
            Sym::A2 => Ok(p.aj[1].clone()),
            Sym::A3 => Ok(p.aj.get(2).cloned().ok_or(RwsaError::Invalid(
                "a3 needs a jet of length >= 3".into(),
            ))?),
            Sym::A4 => Ok(p.aj.get(3).cloned().ok_or(RwsaError::Invalid(
                "a4 needs a jet of length >= 4".into(),
            ))?),
            Sym::Eta => Err(RwsaError::Invalid(
                "bare eta cannot be evaluated exactly; wrap it in a trig function".into(),
            )),
            Sym::Xi(k) => Ok(p.xi[*k as usize - 1].clone()),
            Sym::Q => Ok(p.q()),
        },
        OracleExpr::Func(f, arg) => {
            let cl = classify_arg(arg).ok_or_else(|| {
                RwsaError::Invalid("trig argument must be eta or 2*eta".into())
            })?;
            p.trig(*f, cl)
        }
        OracleExpr::Pow(b, k) => {
            let v = eval_oracle_exact(b, p)?;
            if v.is_zero() && *k < 0 {
                return Err(RwsaError::EvalDivisionByZero("power"));
            }
            let w = num::pow::pow(v, k.unsigned_abs() as usize);
            Ok(if *k < 0 { Rat::one() / w } else { w })
        }
        OracleExpr::Neg(a) => Ok(-eval_oracle_exact(a, p)?),
        OracleExpr::Add(a, b) => Ok(eval_oracle_exact(a, p)? + eval_oracle_exact(b, p)?),
        OracleExpr::Sub(a, b) => Ok(eval_oracle_exact(a, p)? - eval_oracle_exact(b, p)?),
        OracleExpr::Mul(a, b) => Ok(eval_oracle_exact(a, p)? * eval_oracle_exact(b, p)?),
        OracleExpr::Div(a, b) => {
            let d = eval_oracle_exact(b, p)?;
            if d.is_zero() {
                return Err(RwsaError::EvalDivisionByZero("oracle division"));
            }
            Ok(eval_oracle_exact(a, p)? / d)
        }
    }
}

pub fn eval_oracle_f64(e: &OracleExpr, p: &OraclePoint) -> f64 {
    use crate::rational::rat_to_f64;
    fn go(e: &OracleExpr, v: &dyn Fn(Sym) -> f64, eta: f64) -> f64 {
        match e {
            OracleExpr::Int(k) => *k as f64,
            OracleExpr::Sym(Sym::Eta) => eta,
            OracleExpr::Sym(s) => v(*s),
            OracleExpr::Func(f, a) => {
                let x = go(a, v, eta);
                match f {
                    Func::Sin => x.sin(),
                    Func::Cos => x.cos(),
                    Func::Tan => x.tan(),
                    Func::Cot => 1.0 / x.tan(),
                    Func::Sec => 1.0 / x.cos(),
                    Func::Csc => 1.0 / x.sin(),
                }
            }
            OracleExpr::Pow(b, k) => go(b, v, eta).powi(*k),
            OracleExpr::Neg(a) => -go(a, v, eta),
            OracleExpr::Add(a, b) => go(a, v, eta) + go(b, v, eta),
            OracleExpr::Sub(a, b) => go(a, v, eta) - go(b, v, eta),
            OracleExpr::Mul(a, b) => go(a, v, eta) * go(b, v, eta),
            OracleExpr::Div(a, b) => go(a, v, eta) / go(b, v, eta),
        }
    }
    let q = rat_to_f64(&p.q());
    let eta = rat_to_f64(&p.sin_eta).asin();
    let xi: Vec<f64> = p.xi.iter().map(rat_to_f64).collect();
    let a = rat_to_f64(&p.a);
    let aj: Vec<f64> = p.aj.iter().map(rat_to_f64).collect();
    go(
        e,
        &move |s: Sym| match s {
            Sym::A | Sym::Alpha => a,
            Sym::A1 => aj[0],
            Sym::A2 => aj[1],
            Sym::A3 => aj[2],
            Sym::A4 => aj[3],
            Sym::Xi(k) => xi[k as usize - 1],
            Sym::Q => q,
            Sym::Eta => unreachable!(),
        },
        eta,
    )
}

// -- exact conversion to engine form -------------------------------------------

/// Intermediate: expression times Q^q where q may be transiently positive
/// while walking a denominator.
struct Gx {
    e: crate::expr::SymbolExpr,
    q: i32,
}

fn gx_finalize(g: Gx) -> Result<crate::expr::SymbolExpr> {
    use crate::term::VarPowers;
    if g.q > 0 {
        return Err(RwsaError::Invalid(
            "positive powers of Q cannot be represented structurally".into(),
        ));
    }
    if g.q == 0 {
        return Ok(g.e);
    }
    let mut k = VarPowers::unit(g.e.n);
    k.q = (-g.q) as u32;
    Ok(g.e.mul_key(&k, &crate::rational::GaussRat::one()))
}

/// Invert a single-term expression by negating its exponents.
fn invert_monomial(e: &crate::expr::SymbolExpr) -> Result<crate::expr::SymbolExpr> {
    use crate::rational::GaussRat;
    if e.terms.len() != 1 {
        return Err(RwsaError::Invalid(
            "division is only supported by monomial denominators (after Q extraction)".into(),
        ));
    }
    let (k, c) = e.terms.iter().next().unwrap();
    if k.q != 0 {
        return Err(RwsaError::Invalid("unexpected Q inside monomial".into()));
    }
    if c.is_zero() {
        return Err(RwsaError::EvalDivisionByZero("zero denominator"));
    }
    if k.alphaj.iter().any(|&x| x != 0) || k.u.iter().any(|&x| x != 0) {
        return Err(RwsaError::Invalid(
            "only trig/alpha monomials may be inverted".into(),
        ));
    }
    if !c.im.is_zero() {
        return Err(RwsaError::Invalid("complex denominators unsupported".into()));
    }
    // 1/(u0^a s^b c^d alpha^k) = s^{-2a-b} c^{-d} alpha^{-k}
    let mut inv = k.clone();
    inv.u0 = 0;
    inv.s = -(k.s + 2 * k.u0 as i32);
    inv.c = -k.c;
    inv.alpha = -k.alpha;
    let one = crate::rational::Rat::one();
    let inv_c = GaussRat::from_rat(&one / &c.re);
    Ok(crate::expr::SymbolExpr::from_term(e.n, inv, inv_c))
}

/// Convert a parsed oracle tree into the exact u-coordinate representation.
/// The substitutions are xi3 -> u3 s, xi4 -> u4 c, the trig table for eta
/// and 2 eta, and Q into the structural denominator power.
pub fn oracle_to_expr(node: &OracleExpr, n: usize) -> Result<crate::expr::SymbolExpr> {
    gx_finalize(go_expr(node, n)?)
}

fn go_expr(node: &OracleExpr, n: usize) -> Result<Gx> {
    use crate::expr::SymbolExpr;
    use crate::rational::{rat, GaussRat};
    let mono = |s: i32, c: i32, u0: u32, coeff: GaussRat| -> Gx {
        let mut k = crate::term::VarPowers::unit(n);
        k.s = s;
        k.c = c;
        k.u0 = u0;
        Gx {
            e: SymbolExpr::from_term(n, k, coeff),
            q: 0,
        }
    };
    match node {
        OracleExpr::Int(v) => Ok(Gx {
            e: SymbolExpr::constant(n, GaussRat::from_int(*v)),
            q: 0,
        }),
        OracleExpr::Sym(s) => match s {
            Sym::A | Sym::Alpha => Ok(Gx {
                e: SymbolExpr::var_alpha(n, 1),
                q: 0,
            }),
            Sym::A1 | Sym::A2 | Sym::A3 | Sym::A4 => {
                let j = match s {
                    Sym::A1 => 1,
                    Sym::A2 => 2,
                    Sym::A3 => 3,
                    _ => 4,
                };
                if j > 2 * n {
                    return Err(RwsaError::Invalid(format!(
                        "a{} exceeds the jet length 2n = {}",
                        j,
                        2 * n
                    )));
                }
                Ok(Gx {
                    e: SymbolExpr::var_alphaj(n, j, 1),
                    q: 0,
                })
            }
            Sym::Eta => Err(RwsaError::Invalid(
                "bare eta has no rational u-coordinate image".into(),
            )),
            Sym::Xi(k) => {
                let j = *k as usize;
                if j > 2 * n + 2 {
                    return Err(RwsaError::VarOutOfRange(j, 2 * n + 2));
                }
                let mut key = crate::term::VarPowers::unit(n);
                key.u[j - 1] = 1;
                match j {
                    3 => key.s = 1,
                    4 => key.c = 1,
                    _ => {}
                }
                Ok(Gx {
                    e: SymbolExpr::from_term(n, key, GaussRat::one()),
                    q: 0,
                })
            }
            Sym::Q => Ok(Gx {
                e: SymbolExpr::one(n),
                q: 1,
            }),
        },
        OracleExpr::Func(f, arg) => {
            let one_minus_2u0 = SymbolExpr::one(n)
                .sub(&SymbolExpr::var_u0(n, 1).scale(&GaussRat::from_int(2)))?;
            match classify_arg(arg) {
                Some(TrigArg::Eta) => Ok(match f {
                    Func::Sin => mono(1, 0, 0, GaussRat::one()),
                    Func::Cos => mono(0, 1, 0, GaussRat::one()),
                    Func::Tan => mono(1, -1, 0, GaussRat::one()),
                    Func::Cot => mono(-1, 1, 0, GaussRat::one()),
                    Func::Sec => mono(0, -1, 0, GaussRat::one()),
                    Func::Csc => mono(-1, 0, 0, GaussRat::one()),
                }),
                Some(TrigArg::TwoEta) => match f {
                    // sin 2eta = 2 s c, cos 2eta = 1 - 2 u0
                    Func::Sin => Ok(mono(1, 1, 0, GaussRat::from_int(2))),
                    Func::Cos => Ok(Gx {
                        e: one_minus_2u0,
                        q: 0,
                    }),
                    Func::Csc => Ok(mono(-1, -1, 0, GaussRat::from_rat(rat(1, 2)))),
                    Func::Cot => {
                        let half_inv_sc = mono(-1, -1, 0, GaussRat::from_rat(rat(1, 2)));
                        Ok(Gx {
                            e: one_minus_2u0.mul(&half_inv_sc.e)?,
                            q: 0,
                        })
                    }
                    Func::Tan | Func::Sec => Err(RwsaError::Invalid(
                        "tan(2 eta) and sec(2 eta) have non-monomial denominators".into(),
                    )),
                },
                None => Err(RwsaError::Invalid(
                    "trig argument must be eta or 2*eta".into(),
                )),
            }
        }
        OracleExpr::Pow(b, e) => {
            let g = go_expr(b, n)?;
            if *e >= 0 {
                let mut acc = Gx {
                    e: SymbolExpr::one(n),
                    q: 0,
                };
                for _ in 0..*e {
                    acc = Gx {
                        e: acc.e.mul(&g.e)?,
                        q: acc.q + g.q,
                    };
                }
                Ok(acc)
            } else {
                let inv = invert_monomial(&g.e)?;
                let mut acc = Gx {
                    e: SymbolExpr::one(n),
                    q: 0,
                };
                for _ in 0..(-*e) {
                    acc = Gx {
                        e: acc.e.mul(&inv)?,
                        q: acc.q - g.q,
                    };
                }
                Ok(acc)
            }
        }
        OracleExpr::Neg(a) => {
            let g = go_expr(a, n)?;
            Ok(Gx { e: g.e.neg(), q: g.q })
        }
        OracleExpr::Add(a, b) => {
            let x = gx_finalize(go_expr(a, n)?)?;
            let y = gx_finalize(go_expr(b, n)?)?;
            Ok(Gx {
                e: x.add(&y)?,
                q: 0,
            })
        }
        OracleExpr::Sub(a, b) => {
            let x = gx_finalize(go_expr(a, n)?)?;
            let y = gx_finalize(go_expr(b, n)?)?;
            Ok(Gx {
                e: x.sub(&y)?,
                q: 0,
            })
        }
        OracleExpr::Mul(a, b) => {
            let x = go_expr(a, n)?;
            let y = go_expr(b, n)?;
            Ok(Gx {
                e: x.e.mul(&y.e)?,
                q: x.q + y.q,
            })
        }
        OracleExpr::Div(a, b) => {
            let x = go_expr(a, n)?;
            let y = go_expr(b, n)?;
            let inv = invert_monomial(&y.e)?;
            Ok(Gx {
                e: x.e.mul(&inv)?,
                q: x.q - y.q,
            })
        }
    }
}

// -- comparison ----------------------------------------------------------------

use crate::expr::SymbolExpr;
use crate::rational::{rat, rat_to_f64};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, serde::Serialize)]
pub struct CompareReport {
    pub points: usize,
    pub exact_matches: usize,
    pub max_rel_dev: f64,
    pub worst_point: String,
}

/// Draw an admissible random point: Pythagorean (sin, cos) pair so that all
/// trig values are rational, rational xi's and scale-factor jet, with the
/// small-denominator guards |Q| > 1e-3 and sin*cos > 1e-2.
pub fn random_oracle_point(n: usize, rng: &mut ChaCha8Rng) -> OraclePoint {
    loop {
        let m = rng.gen_range(2..=12i64);
        let k = rng.gen_range(1..m);
        let h = m * m + k * k;
        let (mut se, mut ce) = (rat(m * m - k * k, h), rat(2 * m * k, h));
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut se, &mut ce);
        }
        let xi: Vec<Rat> = (0..2 * n + 2)
            .map(|_| rat(rng.gen_range(-64..=64i64), 64))
            .collect();
        let a = rat(rng.gen_range(16..=64i64), 32);
        let aj: Vec<Rat> = (0..2 * n)
            .map(|_| rat(rng.gen_range(-32..=32i64), 32))
            .collect();
        let p = OraclePoint {
            n,
            sin_eta: se,
            cos_eta: ce,
            xi,
            a,
            aj,
        };
        if rat_to_f64(&(&p.sin_eta * &p.cos_eta)) <= 1e-2 {
            continue;
        }
        if rat_to_f64(&p.q()).abs() <= 1e-3 {
            continue;
        }
        return p;
    }
}

/// Compare an engine expression (u-coordinates) with a transcription oracle
/// (trig coordinates) at `npoints` admissible random points. Both sides are
/// evaluated in exact rational arithmetic; the deviation is exact zero when
/// they agree as functions.
pub fn oracle_compare(
    engine: &SymbolExpr,
    oracle: &OracleExpr,
    n: usize,
    npoints: usize,
    tol: f64,
    seed: u64,
) -> Result<CompareReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CompareReport {
        points: npoints,
        exact_matches: 0,
        max_rel_dev: 0.0,
        worst_point: String::new(),
    };
    for _ in 0..npoints {
        let p = random_oracle_point(n, &mut rng);
        let ev = crate::eval::eval_exact(engine, &p.to_exact_point())?;
        if !ev.im.is_zero() {
            return Err(RwsaError::NonRealTrace);
        }
        let ov = eval_oracle_exact(oracle, &p)?;
        let diff = &ev.re - &ov;
        if diff.is_zero() {
            report.exact_matches += 1;
            continue;
        }
        let denom = rat_to_f64(&ov).abs().max(rat_to_f64(&ev.re).abs()).max(1e-30);
        let dev = rat_to_f64(&diff).abs() / denom;
        if dev > report.max_rel_dev {
            report.max_rel_dev = dev;
            report.worst_point = format!("{:?}", p);
        }
    }
    if report.max_rel_dev > tol {
        return Err(RwsaError::OracleMismatch {
            dev: report.max_rel_dev,
            tol,
            point: report.worst_point.clone(),
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn grammar_smoke() {
        let e = parse_oracle("3*a1^2/(a^2*Q^2)").unwrap();
        let p = OraclePoint {
            n: 1,
            sin_eta: rat(3, 5),
            cos_eta: rat(4, 5),
            xi: vec![rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7)],
            a: rat(2, 1),
            aj: vec![rat(1, 2), rat(0, 1)],
        };
        let v = eval_oracle_exact(&e, &p).unwrap();
        let q = p.q();
        assert_eq!(v, rat(3, 4) / (&q * &q) / rat(4, 1));
    }

    #[test]
    fn csc_two_eta() {
        let e = parse_oracle("csc(2*eta)^2").unwrap();
        let p = OraclePoint {
            n: 1,
            sin_eta: rat(3, 5),
            cos_eta: rat(4, 5),
            xi: vec![rat(1, 2); 4],
            a: rat(1, 1),
            aj: vec![rat(0, 1); 2],
        };
        // sin(2 eta) = 24/25
        assert_eq!(eval_oracle_exact(&e, &p).unwrap(), rat(625, 576));
    }

    #[test]
    fn parse_print_parse_fixed_point() {
        let src = "32*cot(eta)^2*xi3^4*csc(eta)^4/(a^6*Q^4) - 8*xi3^2/(a^4*Q^3)";
        let e1 = parse_oracle(src).unwrap();
        let s1 = e1.to_string();
        let e2 = parse_oracle(&s1).unwrap();
        let s2 = e2.to_string();
        assert_eq!(s1, s2);
    }

    #[test]
    fn errors_carry_position() {
        let err = parse_oracle("3*zeta").unwrap_err();
        match err {
            RwsaError::Parse { line, col, .. } => {
                assert_eq!(line, 1);
                assert!(col >= 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
