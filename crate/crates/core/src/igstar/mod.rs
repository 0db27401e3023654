//! Finite IG★-chains: skeletons, the clamped affine maps f_S and
//! representability inside some Ł*_{k+1}.

mod chain;
mod represent;

pub use chain::{validate_igstar, AbstractIGChain};
pub use represent::{
    check_r_equations, is_representable, simple_partition, Block, Embedding, Representability,
    SimplePartition, Witness,
};

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::structure::StarChain;
use crate::subalgebra::procedure_p;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SkSymbol {
    Star,
    Inv,
}

impl SkSymbol {
    pub fn apply(self, c: &impl StarChain, x: usize) -> usize {
        match self {
            SkSymbol::Star => c.star(x),
            SkSymbol::Inv => c.inv(x),
        }
    }

    fn map<T: Clone + Integer>(self) -> PiecewiseLinear<T> {
        match self {
            SkSymbol::Star => PiecewiseLinear {
                lo: Ratio::new(T::one(), T::one() + T::one()),
                hi: Ratio::one(),
                increasing: true,
            },
            SkSymbol::Inv => PiecewiseLinear {
                lo: Ratio::zero(),
                hi: Ratio::one(),
                increasing: false,
            },
        }
    }
}

/// A word over {★, ∼}; `symbols[0]` is applied first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SkSeq {
    pub symbols: Vec<SkSymbol>,
}

impl SkSeq {
    pub fn new(symbols: Vec<SkSymbol>) -> Self {
        SkSeq { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn inv_count(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == SkSymbol::Inv).count()
    }

    /// Shape `[★^{n1}, ∼, ★^{n2}, …, ∼, ★^{nk}]` with `n1..n_{k-1} > 0`.
    pub fn is_well_formed(&self) -> bool {
        self.symbols.first() == Some(&SkSymbol::Star)
            && self
                .symbols
                .windows(2)
                .all(|w| w != [SkSymbol::Inv, SkSymbol::Inv])
    }

    /// `r` copies of `self` concatenated.
    pub fn repeat(&self, r: usize) -> SkSeq {
        SkSeq::new(self.symbols.repeat(r))
    }

    pub fn concat(&self, other: &SkSeq) -> SkSeq {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        SkSeq::new(symbols)
    }

    pub fn rotate(&self, k: usize) -> SkSeq {
        let mut symbols = self.symbols.clone();
        if !symbols.is_empty() {
            let k = k % symbols.len();
            symbols.rotate_left(k);
        }
        SkSeq::new(symbols)
    }

    pub fn apply(&self, c: &impl StarChain, x: usize) -> usize {
        self.symbols.iter().fold(x, |x, s| s.apply(c, x))
    }

    /// Accepts `**~`, `[★, ★, ∼]`, `[STAR, INV]` and powers such as `*^3~`.
    pub fn parse(text: &str) -> Result<SkSeq, Error> {
        let chars: Vec<char> = text.chars().collect();
        let err = |pos: usize, msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        let mut symbols = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let sym = match c {
                '*' | '★' | '∗' => {
                    i += 1;
                    SkSymbol::Star
                }
                '~' | '∼' | '¬' => {
                    i += 1;
                    SkSymbol::Inv
                }
                '[' | ']' | ',' => {
                    i += 1;
                    continue;
                }
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                c if c.is_ascii_alphabetic() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_alphabetic() {
                        i += 1;
                    }
                    let word: String = chars[start..i].iter().collect();
                    match word.to_ascii_uppercase().as_str() {
                        "STAR" => SkSymbol::Star,
                        "INV" => SkSymbol::Inv,
                        _ => return Err(err(start, &format!("unknown symbol {word}"))),
                    }
                }
                _ => return Err(err(i, &format!("unexpected '{c}'"))),
            };
            let mut count = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                count = digits
                    .parse::<usize>()
                    .map_err(|_| err(start, "expected an exponent"))?;
            }
            symbols.extend(std::iter::repeat_n(sym, count));
        }
        Ok(SkSeq::new(symbols))
    }

    /// True iff `self = (r)R` for a strict prefix `R` and some `r ≥ 2`.
    pub fn is_periodic(&self) -> bool {
        let n = self.len();
        (1..n)
            .any(|p| n.is_multiple_of(p) && (p..n).all(|i| self.symbols[i] == self.symbols[i - p]))
    }
}

impl fmt::Display for SkSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, s) in self.symbols.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{}",
                match s {
                    SkSymbol::Star => '*',
                    SkSymbol::Inv => '~',
                }
            )?;
        }
        write!(f, "]")
    }
}

/// The operation symbols chosen by procedure P from `a`, closing with the
/// step back into the sequence.
pub fn skeleton(c: &impl StarChain, a: usize) -> Result<SkSeq, Error> {
    if c.is_boundary(a) {
        return Err(Error::BoundaryElement);
    }
    if !c.is_positive(a) {
        return Err(Error::NotPositive);
    }
    let p = procedure_p(c, a)?;
    Ok(SkSeq::new(
        p.seq
            .iter()
            .map(|&x| {
                if c.is_positive(x) {
                    SkSymbol::Star
                } else {
                    SkSymbol::Inv
                }
            })
            .collect(),
    ))
}

/// `x ↦ 0` below `lo`, `1` above `hi`, affine in between; mirrored when
/// decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLinear<T: Clone + Integer> {
    pub lo: Ratio<T>,
    pub hi: Ratio<T>,
    pub increasing: bool,
}

impl<T: Clone + Integer> PiecewiseLinear<T> {
    pub fn identity() -> Self {
        PiecewiseLinear {
            lo: Ratio::zero(),
            hi: Ratio::one(),
            increasing: true,
        }
    }

    pub fn of(s: &SkSeq) -> Self {
        s.symbols
            .iter()
            .fold(Self::identity(), |f, sym| f.then(&sym.map()))
    }

    /// `g ∘ self`: apply `self` first.
    pub fn then(&self, g: &Self) -> Self {
        let w = self.hi.clone() - self.lo.clone();
        let (lo, hi) = if self.increasing {
            (
                self.lo.clone() + g.lo.clone() * w.clone(),
                self.lo.clone() + g.hi.clone() * w,
            )
        } else {
            (
                self.hi.clone() - g.hi.clone() * w.clone(),
                self.hi.clone() - g.lo.clone() * w,
            )
        };
        PiecewiseLinear {
            lo,
            hi,
            increasing: self.increasing == g.increasing,
        }
    }

    pub fn apply(&self, x: &Ratio<T>) -> Ratio<T> {
        let t = (x.clone() - self.lo.clone()) / (self.hi.clone() - self.lo.clone());
        let t = if t < Ratio::zero() {
            Ratio::zero()
        } else if t > Ratio::one() {
            Ratio::one()
        } else {
            t
        };
        if self.increasing {
            t
        } else {
            Ratio::one() - t
        }
    }
}

pub fn plmap_of(s: &SkSeq) -> crate::PlMap {
    PiecewiseLinear::of(s)
}

/// The unique solution of `f_S(x) = x` above 1/2.
pub fn fixed_point_of<T: Clone + Integer>(s: &SkSeq) -> Result<Ratio<T>, Error> {
    if !s.is_well_formed() || s.inv_count() == 0 {
        return Err(Error::MalformedSequence(format!(
            "{s} is not of the form [*^n1, ~, ..., ~, *^nk] with at least one ~"
        )));
    }
    let f = PiecewiseLinear::<T>::of(s);
    let one = Ratio::<T>::one();
    let x = if f.increasing {
        f.lo.clone() / (one - f.hi.clone() + f.lo.clone())
    } else {
        f.hi.clone() / (one + f.hi.clone() - f.lo.clone())
    };
    debug_assert!(f.apply(&x) == x);
    Ok(x)
}

pub fn fixed_point(s: &SkSeq) -> Result<Rational, Error> {
    fixed_point_of(s)
}

/// The unique `x` with `f_S(x) = d`, for `0 < d < 1`.
pub fn solve_preimage_of<T: Clone + Integer>(s: &SkSeq, d: &Ratio<T>) -> Result<Ratio<T>, Error> {
    if *d <= Ratio::zero() || *d >= Ratio::one() {
        return Err(Error::OutOfRange(
            "target must lie strictly between 0 and 1".into(),
        ));
    }
    let f = PiecewiseLinear::<T>::of(s);
    let w = f.hi.clone() - f.lo.clone();
    Ok(if f.increasing {
        f.lo + w * d.clone()
    } else {
        f.hi - w * d.clone()
    })
}

pub fn solve_preimage(s: &SkSeq, d: &Rational) -> Result<Rational, Error> {
    solve_preimage_of(s, d)
}
