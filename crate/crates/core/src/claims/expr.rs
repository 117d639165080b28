//! Polynomials in `n` and the small LaTeX dialect the formulas are written in:
//! integers, `n`, `+ - * /`, `^`, parentheses, implicit products and
//! `\frac{…}{…}`.

use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Rational polynomial in `n`; `coeffs[i]` multiplies `n^i`. No trailing
/// zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(coeffs: Vec<Rational>) -> Poly {
        let mut p = Poly { coeffs };
        while p.coeffs.last().is_some_and(|c| c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::new(vec![c])
    }

    pub fn n() -> Poly {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_integers(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0]),
            _ => None,
        }
    }

    pub fn eval(&self, n: i64) -> Rational {
        let x = Rational::from_integer(n);
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, &c| acc * x + c)
    }

    fn scale(&self, k: Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| c * k).collect())
    }

    fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::constant(Rational::one()), |acc, _| &acc * self)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let at = |p: &Poly, i: usize| p.coeffs.get(i).copied().unwrap_or_else(Rational::zero);
        Poly::new((0..len).map(|i| at(self, i) + at(rhs, i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.scale(-Rational::one())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Num(i64),
    N,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Frac,
}

fn tokenize(input: &str) -> std::result::Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut value: i64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as i64))
                        .ok_or("integer literal too large")?;
                    chars.next();
                }
                out.push(Token::Num(value));
            }
            '\\' => {
                chars.next();
                let word: String = std::iter::from_fn(|| chars.next_if(|c| c.is_ascii_alphabetic())).collect();
                match word.as_str() {
                    "frac" => out.push(Token::Frac),
                    "cdot" | "times" => out.push(Token::Star),
                    _ => return Err(format!("unsupported command `\\{word}`")),
                }
            }
            _ => {
                chars.next();
                out.push(match ch {
                    'n' => Token::N,
                    '+' => Token::Plus,
                    '-' | '−' => Token::Minus,
                    '*' | '·' => Token::Star,
                    '/' => Token::Slash,
                    '^' => Token::Caret,
                    '(' => Token::LParen,
                    ')' => Token::RParen,
                    '{' => Token::LBrace,
                    '}' => Token::RBrace,
                    other => return Err(format!("unexpected character `{other}`")),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token) -> std::result::Result<(), String> {
        match self.bump() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(format!("expected {want:?}, found {t:?}")),
            None => Err(format!("expected {want:?}, found end of input")),
        }
    }

    fn expr(&mut self) -> std::result::Result<Poly, String> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> std::result::Result<Poly, String> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Token::Slash) => {
                    self.bump();
                    let d = self.unary()?;
                    let d = d.as_constant().ok_or("division by a non-constant")?;
                    if d.is_zero() {
                        return Err("division by zero".into());
                    }
                    acc = acc.scale(d.recip());
                }
                Some(Token::Num(_) | Token::N | Token::LParen | Token::Frac) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> std::result::Result<Poly, String> {
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> std::result::Result<Poly, String> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let braced = self.peek() == Some(&Token::LBrace);
        if braced {
            self.bump();
        }
        let e = match self.bump() {
            Some(Token::Num(e)) if e <= 16 => e as u32,
            other => return Err(format!("unsupported exponent {other:?}")),
        };
        if braced {
            self.expect(Token::RBrace)?;
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> std::result::Result<Poly, String> {
        match self.bump() {
            Some(Token::Num(v)) => Ok(Poly::constant(Rational::from_integer(v))),
            Some(Token::N) => Ok(Poly::n()),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Some(Token::LBrace) => {
                let inner = self.expr()?;
                self.expect(Token::RBrace)?;
                Ok(inner)
            }
            Some(Token::Frac) => {
                self.expect(Token::LBrace)?;
                let num = self.expr()?;
                self.expect(Token::RBrace)?;
                self.expect(Token::LBrace)?;
                let den = self.expr()?;
                self.expect(Token::RBrace)?;
                let den = den.as_constant().ok_or("non-constant denominator")?;
                if den.is_zero() {
                    return Err("division by zero".into());
                }
                Ok(num.scale(den.recip()))
            }
            Some(t) => Err(format!("unexpected {t:?}")),
            None => Err("unexpected end of input".into()),
        }
    }
}

pub fn parse(input: &str) -> Result<Poly> {
    let fail = |reason: String| Error::Expression {
        input: input.to_string(),
        reason,
    };
    let tokens = tokenize(input).map_err(fail)?;
    if tokens.is_empty() {
        return Err(fail("empty expression".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let poly = p.expr().map_err(fail)?;
    if p.pos != p.tokens.len() {
        return Err(fail(format!("trailing input at token {}", p.pos)));
    }
    Ok(poly)
}

/// Integer polynomial `Σ coeffs[i]·n^i`, highest power first: `7n^2+16n+1`.
pub fn render_poly(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (power, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.unsigned_abs();
        if mag != 1 || power == 0 {
            out.push_str(&mag.to_string());
        }
        match power {
            0 => {}
            1 => out.push('n'),
            p => out.push_str(&format!("n^{p}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Printed forms of `(Σ coeffs[i]·n^i) / den` in the house style.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    /// `5n+9`, `\frac{7n^2+16n+1}{8}`
    Expanded,
    /// Common integer factor pulled out: `5(n+1)`, `\frac{25(n-1)}{2}`.
    Factored,
}

pub fn render(coeffs: &[i64], den: i64, form: Form) -> String {
    let numerator = match form {
        Form::Expanded => render_poly(coeffs),
        Form::Factored => {
            let g = coeffs.iter().fold(0i64, |g, &c| g.gcd(&c));
            let nonzero = coeffs.iter().filter(|&&c| c != 0).count();
            if g <= 1 || nonzero < 2 {
                render_poly(coeffs)
            } else {
                let inner: Vec<i64> = coeffs.iter().map(|c| c / g).collect();
                format!("{g}({})", render_poly(&inner))
            }
        }
    };
    if den == 1 {
        numerator
    } else {
        format!("\\frac{{{numerator}}}{{{den}}}")
    }
}
