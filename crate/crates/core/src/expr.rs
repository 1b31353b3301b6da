//! A small arithmetic expression language shared by every text input.
//!
//! Ring elements (`1+v^2`), field moduli (`x^3+x+1`), code generators
//! (`(1+v)*z^2 + v^2`) and the `h = z+1` shorthand (`vh^3+v^2h(h+1)`) all
//! parse into the same [`Expr`] tree, which is then evaluated inside whatever
//! algebra the caller supplies. Symbols are single letters, so `vh` reads as
//! `v*h`. Juxtaposition multiplies when the right operand is a symbol or a
//! parenthesised group.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Symbol(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
}

/// Target of expression evaluation.
pub trait Algebra {
    type Value: Clone;

    fn integer(&self, value: u64) -> Self::Value;
    /// `None` means the symbol is unknown in this algebra.
    fn symbol(&self, name: char) -> Option<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;

    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, base: &Self::Value, mut exp: u64) -> Self::Value {
        let mut acc = self.integer(1);
        let mut square = base.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &square);
            }
            exp >>= 1;
            if exp > 0 {
                square = self.mul(&square, &square);
            }
        }
        acc
    }
}

impl Expr {
    pub fn parse(input: &str) -> Result<Expr> {
        let tokens = tokenize(input)?;
        let mut parser = Parser {
            input,
            tokens,
            pos: 0,
        };
        let expr = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::parse(
                input,
                format!("unexpected {}", parser.tokens[parser.pos].describe()),
            ));
        }
        Ok(expr)
    }

    pub fn eval<A: Algebra>(&self, algebra: &A) -> std::result::Result<A::Value, char> {
        Ok(match self {
            Expr::Int(n) => algebra.integer(*n),
            Expr::Symbol(c) => algebra.symbol(*c).ok_or(*c)?,
            Expr::Neg(a) => algebra.neg(&a.eval(algebra)?),
            Expr::Add(a, b) => algebra.add(&a.eval(algebra)?, &b.eval(algebra)?),
            Expr::Sub(a, b) => algebra.sub(&a.eval(algebra)?, &b.eval(algebra)?),
            Expr::Mul(a, b) => algebra.mul(&a.eval(algebra)?, &b.eval(algebra)?),
            Expr::Pow(a, e) => algebra.pow(&a.eval(algebra)?, *e),
        })
    }
}

/// Parse and evaluate in one step, mapping unknown symbols to a parse error.
pub fn evaluate<A: Algebra>(input: &str, algebra: &A) -> Result<A::Value> {
    let expr = Expr::parse(input)?;
    expr.eval(algebra)
        .map_err(|c| Error::parse(input, format!("unknown symbol '{c}'")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Int(u64),
    Symbol(char),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("number {n}"),
            Token::Symbol(c) => format!("symbol '{c}'"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut value: u64 = 0;
                while let Some(&d) = chars.peek() {
                    let Some(digit) = d.to_digit(10) else { break };
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(digit as u64))
                        .ok_or_else(|| Error::parse(input, "integer literal too large"))?;
                    chars.next();
                }
                tokens.push(Token::Int(value));
            }
            c if c.is_ascii_alphabetic() => {
                tokens.push(Token::Symbol(c));
                chars.next();
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                tokens.push(match c {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::LParen,
                    _ => Token::RParen,
                });
                chars.next();
            }
            other => {
                return Err(Error::parse(
                    input,
                    format!("unexpected character '{other}'"),
                ))
            }
        }
    }
    if tokens.is_empty() {
        return Err(Error::parse(input, "empty expression"));
    }
    Ok(tokens)
}

struct Parser<'a> {
    input: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.input, message)
    }

    // expr := ['-'] term { ('+' | '-') term }
    fn expr(&mut self) -> Result<Expr> {
        let mut acc = if self.peek() == Some(Token::Minus) {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor { ['*'] factor }
    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some(Token::Symbol(_)) | Some(Token::LParen) => {
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    // factor := atom ['^' int]
    fn factor(&mut self) -> Result<Expr> {
        let atom = self.atom()?;
        if self.peek() == Some(Token::Caret) {
            self.bump();
            match self.bump() {
                Some(Token::Int(e)) => Ok(Expr::Pow(Box::new(atom), e)),
                Some(t) => Err(self.error(format!("expected exponent, found {}", t.describe()))),
                None => Err(self.error("expected exponent, found end of input")),
            }
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some(Token::Int(n)) => Ok(Expr::Int(n)),
            Some(Token::Symbol(c)) => Ok(Expr::Symbol(c)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(self.error("missing ')'")),
                }
            }
            Some(t) => Err(self.error(format!("unexpected {}", t.describe()))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
