//! The finite MV-chain Ł_{n+1} = {0, 1/n, ..., 1} with the square operator.
//!
//! Elements are stored as integer numerators over the chain denominator.
//! Mixing elements of different chains is a contract violation and panics.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::structure::StarChain;

/// The chain Ł_{n+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    n: u32,
}

/// An element `num/den` of Ł_{den+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    num: u32,
    den: u32,
}

impl Chain {
    pub fn new(n: u32) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidChain(n));
        }
        Ok(Chain { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn elem(&self, k: u32) -> Result<Elem, Error> {
        if k > self.n {
            return Err(Error::NotInChain { k, n: self.n });
        }
        Ok(Elem {
            num: k,
            den: self.n,
        })
    }

    pub fn zero(&self) -> Elem {
        Elem {
            num: 0,
            den: self.n,
        }
    }

    pub fn one(&self) -> Elem {
        Elem {
            num: self.n,
            den: self.n,
        }
    }

    pub fn coatom(&self) -> Elem {
        Elem {
            num: self.n - 1,
            den: self.n,
        }
    }

    pub fn atom(&self) -> Elem {
        Elem {
            num: 1,
            den: self.n,
        }
    }

    /// All n+1 elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..=self.n).map(move |k| Elem {
            num: k,
            den: self.n,
        })
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.den == self.n
    }
}

impl Elem {
    pub fn num(&self) -> u32 {
        self.num
    }

    pub fn den(&self) -> u32 {
        self.den
    }

    pub fn chain(&self) -> Chain {
        Chain { n: self.den }
    }

    pub fn value(&self) -> Ratio<i64> {
        Ratio::new(self.num as i64, self.den as i64)
    }

    fn with(&self, num: u32) -> Elem {
        Elem { num, den: self.den }
    }

    fn same_chain(&self, other: &Elem) {
        assert_eq!(
            self.den, other.den,
            "elements of different chains: {self} and {other}"
        );
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_boundary(&self) -> bool {
        self.is_zero() || self.is_one()
    }

    /// `x > ¬x`.
    pub fn is_positive(&self) -> bool {
        2 * self.num > self.den
    }

    pub fn neg(&self) -> Elem {
        self.with(self.den - self.num)
    }

    /// `*x = max(0, 2x - 1)`.
    pub fn star(&self) -> Elem {
        self.with((2 * self.num).saturating_sub(self.den))
    }

    /// `+x = min(1, 2x)`.
    pub fn plus(&self) -> Elem {
        self.with((2 * self.num).min(self.den))
    }

    pub fn join(&self, y: Elem) -> Elem {
        self.same_chain(&y);
        self.with(self.num.max(y.num))
    }

    pub fn meet(&self, y: Elem) -> Elem {
        self.same_chain(&y);
        self.with(self.num.min(y.num))
    }

    pub fn luk_imp(&self, y: Elem) -> Elem {
        self.same_chain(&y);
        self.with((self.den - self.num + y.num).min(self.den))
    }

    pub fn luk_conj(&self, y: Elem) -> Elem {
        self.same_chain(&y);
        self.with((self.num + y.num).saturating_sub(self.den))
    }

    pub fn oplus(&self, y: Elem) -> Elem {
        self.same_chain(&y);
        self.with((self.num + y.num).min(self.den))
    }

    pub fn goedel_imp(&self, y: Elem) -> Elem {
        self.same_chain(&y);
        if self.num <= y.num {
            self.with(self.den)
        } else {
            y
        }
    }

    pub fn crisp_imp(&self, y: Elem) -> Elem {
        self.same_chain(&y);
        if self.num <= y.num {
            self.with(self.den)
        } else {
            self.with(0)
        }
    }

    /// Baaz delta: 1 at 1, 0 elsewhere.
    pub fn baaz_delta(&self) -> Elem {
        if self.is_one() {
            *self
        } else {
            self.with(0)
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl StarChain for Chain {
    fn len(&self) -> usize {
        self.n as usize + 1
    }

    fn star(&self, x: usize) -> usize {
        (2 * x).saturating_sub(self.n as usize)
    }

    fn value(&self, x: usize) -> Option<Ratio<i64>> {
        Some(Ratio::new(x as i64, self.n as i64))
    }
}
