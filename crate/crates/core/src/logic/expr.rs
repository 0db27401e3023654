//! Surface syntax with derived connectives, and its parser.
//!
//! Grammar (binary operators share one precedence level and associate to
//! the left; prefix operators bind tighter):
//!
//! ```text
//! expr   := prefix (binop prefix)*
//! binop  := "|" | "&" | "->" INT | "<->" INT | "=>c" | "=>g"
//! prefix := ("~" | "*" | "D[" INT "/" INT "]" | "X[" INT "/" INT "]") prefix | atom
//! atom   := "p" INT | "0" | "1" | "(" expr ")"
//! ```

use std::fmt;

use crate::chain::Chain;
use crate::error::Error;
use crate::formula::{self as fm, F};
use crate::synth::Definitions;

/// A rational parameter `num/den` of a macro, resolved against the chain at
/// expansion time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Frac {
    pub num: u32,
    pub den: u32,
}

impl Frac {
    /// Numerator of this value in Ł_{n+1}.
    pub fn position(&self, chain: &Chain) -> Result<usize, Error> {
        let n = chain.n() as u64;
        let (a, d) = (self.num as u64, self.den as u64);
        if d == 0 || a > d || !(a * n).is_multiple_of(d) {
            return Err(Error::Macro(format!(
                "{self} is not an element of Ł_{}",
                n + 1
            )));
        }
        Ok((a * n / d) as usize)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Derived {
    /// `α ∧ β := ¬(¬α ∨ ¬β)`
    Meet,
    DeltaA(Frac),
    ChiA(Frac),
    CrispImp,
    GoedelImp,
    /// `∼_{i/n} α := ¬Δ_{i/n} α`
    StrongNeg(u32),
    /// `α →_{i/n} β := ¬Δ_{i/n} α ∨ β`
    ArrowI(u32),
    /// `(α →_{i/n} β) ∧ (β →_{i/n} α)`
    IffI(u32),
    /// `Δ = Δ_1`
    BaazDelta,
}

impl Derived {
    pub fn arity(&self) -> usize {
        match self {
            Derived::DeltaA(_) | Derived::ChiA(_) | Derived::StrongNeg(_) | Derived::BaazDelta => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Var(usize),
    Zero,
    One,
    Neg(Box<Expr>),
    Star(Box<Expr>),
    Join(Box<Expr>, Box<Expr>),
    Macro(Derived, Vec<Expr>),
}

fn filter_position(i: u32, chain: &Chain) -> Result<usize, Error> {
    if i > chain.n() {
        return Err(Error::Macro(format!(
            "{i}/{} is not an element of the chain",
            chain.n()
        )));
    }
    Ok(i as usize)
}

impl Expr {
    /// Expands every macro into the core signature.
    pub fn expand(&self, chain: &Chain, defs: &Definitions) -> Result<F, Error> {
        Ok(match self {
            Expr::Var(i) => fm::var(*i),
            Expr::Zero => fm::zero(),
            Expr::One => fm::one(),
            Expr::Neg(a) => fm::neg(&a.expand(chain, defs)?),
            Expr::Star(a) => fm::star(&a.expand(chain, defs)?),
            Expr::Join(a, b) => fm::join(&a.expand(chain, defs)?, &b.expand(chain, defs)?),
            Expr::Macro(d, args) => {
                let args = args
                    .iter()
                    .map(|a| a.expand(chain, defs))
                    .collect::<Result<Vec<_>, _>>()?;
                if args.len() != d.arity() {
                    return Err(Error::Macro(format!(
                        "{d:?} expects {} arguments",
                        d.arity()
                    )));
                }
                let arrow = |i: usize, a: &F, b: &F| fm::join(&fm::neg(&defs.delta(i, a)), b);
                match *d {
                    Derived::Meet => fm::meet(&args[0], &args[1]),
                    Derived::DeltaA(a) => defs.delta(a.position(chain)?, &args[0]),
                    Derived::ChiA(a) => defs.chi(a.position(chain)?, &args[0]),
                    Derived::CrispImp => defs.crisp_imp(&args[0], &args[1]),
                    Derived::GoedelImp => defs.goedel_imp(&args[0], &args[1]),
                    Derived::StrongNeg(i) => {
                        fm::neg(&defs.delta(filter_position(i, chain)?, &args[0]))
                    }
                    Derived::ArrowI(i) => arrow(filter_position(i, chain)?, &args[0], &args[1]),
                    Derived::IffI(i) => {
                        let i = filter_position(i, chain)?;
                        fm::meet(&arrow(i, &args[0], &args[1]), &arrow(i, &args[1], &args[0]))
                    }
                    Derived::BaazDelta => defs.delta(chain.n() as usize, &args[0]),
                }
            }
        })
    }

    fn is_binary(&self) -> bool {
        matches!(self, Expr::Join(..)) || matches!(self, Expr::Macro(d, _) if d.arity() == 2)
    }
}

struct Operand<'a>(&'a Expr);

impl fmt::Display for Operand<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_binary() {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(i) => write!(f, "p{i}"),
            Expr::Zero => write!(f, "0"),
            Expr::One => write!(f, "1"),
            Expr::Neg(a) => write!(f, "~{}", Operand(a)),
            Expr::Star(a) => write!(f, "*{}", Operand(a)),
            Expr::Join(a, b) => write!(f, "{a} | {}", Operand(b)),
            Expr::Macro(d, args) => match d {
                Derived::DeltaA(a) => write!(f, "D[{a}]({})", args[0]),
                Derived::ChiA(a) => write!(f, "X[{a}]({})", args[0]),
                Derived::StrongNeg(i) => write!(f, "~D[{i}/n]({})", args[0]),
                Derived::BaazDelta => write!(f, "D[1/1]({})", args[0]),
                _ => {
                    let op = match d {
                        Derived::Meet => "&".to_string(),
                        Derived::CrispImp => "=>c".to_string(),
                        Derived::GoedelImp => "=>g".to_string(),
                        Derived::ArrowI(i) => format!("->{i}"),
                        Derived::IffI(i) => format!("<->{i}"),
                        _ => unreachable!(),
                    };
                    write!(f, "{} {op} {}", args[0], Operand(&args[1]))
                }
            },
        }
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.text.len(), |c| c.0)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, Error> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.at).is_some_and(|c| c.1.is_whitespace()) {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).map(|c| c.1)
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        if self.chars.len() >= self.at + n
            && self.chars[self.at..self.at + n]
                .iter()
                .map(|c| c.1)
                .eq(s.chars())
        {
            self.at += n;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), Error> {
        if self.eat(s) {
            Ok(())
        } else {
            self.error(format!("expected '{s}'"))
        }
    }

    /// Digits immediately at the cursor.
    fn int(&mut self) -> Result<u32, Error> {
        let start = self.at;
        while self
            .chars
            .get(self.at)
            .is_some_and(|c| c.1.is_ascii_digit())
        {
            self.at += 1;
        }
        if start == self.at {
            return self.error("expected an integer");
        }
        let s: String = self.chars[start..self.at].iter().map(|c| c.1).collect();
        s.parse().or_else(|_| {
            self.at = start;
            self.error("integer too large")
        })
    }

    fn frac(&mut self) -> Result<Frac, Error> {
        self.expect("[")?;
        self.skip_ws();
        let num = self.int()?;
        self.expect("/")?;
        self.skip_ws();
        let den = self.int()?;
        self.expect("]")?;
        Ok(Frac { num, den })
    }

    fn expr(&mut self) -> Result<Expr, Error> {
        let mut left = self.prefix()?;
        loop {
            let op = if self.eat("|") || self.eat("∨") {
                None
            } else if self.eat("&") || self.eat("∧") {
                Some(Derived::Meet)
            } else if self.eat("<->") {
                Some(Derived::IffI(self.int()?))
            } else if self.eat("->") {
                Some(Derived::ArrowI(self.int()?))
            } else if self.eat("=>c") {
                Some(Derived::CrispImp)
            } else if self.eat("=>g") {
                Some(Derived::GoedelImp)
            } else {
                return Ok(left);
            };
            let right = self.prefix()?;
            left = match op {
                None => Expr::Join(Box::new(left), Box::new(right)),
                Some(d) => Expr::Macro(d, vec![left, right]),
            };
        }
    }

    fn prefix(&mut self) -> Result<Expr, Error> {
        if self.eat("~") || self.eat("∼") || self.eat("¬") {
            return Ok(Expr::Neg(Box::new(self.prefix()?)));
        }
        if self.eat("*") || self.eat("★") {
            return Ok(Expr::Star(Box::new(self.prefix()?)));
        }
        if self.eat("D") {
            let a = self.frac()?;
            return Ok(Expr::Macro(Derived::DeltaA(a), vec![self.prefix()?]));
        }
        if self.eat("X") {
            let a = self.frac()?;
            return Ok(Expr::Macro(Derived::ChiA(a), vec![self.prefix()?]));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, Error> {
        match self.peek() {
            Some('p') => {
                self.at += 1;
                Ok(Expr::Var(self.int()? as usize))
            }
            Some('0') => {
                self.at += 1;
                Ok(Expr::Zero)
            }
            Some('1') => {
                self.at += 1;
                Ok(Expr::One)
            }
            Some('(') => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            Some(c) => self.error(format!("unexpected '{c}'")),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses a formula, keeping derived connectives as macros.
pub fn parse(text: &str) -> Result<Expr, Error> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        at: 0,
        text,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.error("trailing input");
    }
    Ok(e)
}
