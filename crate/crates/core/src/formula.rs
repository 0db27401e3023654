//! Formulas over the signature {∨, ¬, *, 0, 1}.

use std::fmt;
use std::rc::Rc;

use crate::structure::StarChain;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(usize),
    Zero,
    One,
    Neg(Rc<Formula>),
    Star(Rc<Formula>),
    Join(Rc<Formula>, Rc<Formula>),
}

pub type F = Rc<Formula>;

pub fn var(i: usize) -> F {
    Rc::new(Formula::Var(i))
}

pub fn zero() -> F {
    Rc::new(Formula::Zero)
}

pub fn one() -> F {
    Rc::new(Formula::One)
}

pub fn neg(f: &F) -> F {
    Rc::new(Formula::Neg(f.clone()))
}

pub fn star(f: &F) -> F {
    Rc::new(Formula::Star(f.clone()))
}

/// `+f = ¬*¬f`.
pub fn plus(f: &F) -> F {
    neg(&star(&neg(f)))
}

pub fn join(a: &F, b: &F) -> F {
    Rc::new(Formula::Join(a.clone(), b.clone()))
}

/// `a ∧ b = ¬(¬a ∨ ¬b)`.
pub fn meet(a: &F, b: &F) -> F {
    neg(&join(&neg(a), &neg(b)))
}

/// Join of a nonempty list, left-nested.
pub fn join_all(fs: impl IntoIterator<Item = F>) -> Option<F> {
    fs.into_iter().reduce(|acc, f| join(&acc, &f))
}

pub fn meet_all(fs: impl IntoIterator<Item = F>) -> Option<F> {
    fs.into_iter().reduce(|acc, f| meet(&acc, &f))
}

impl Formula {
    /// One more than the largest variable index, or 0 for closed formulas.
    pub fn num_vars(&self) -> usize {
        match self {
            Formula::Var(i) => i + 1,
            Formula::Zero | Formula::One => 0,
            Formula::Neg(a) | Formula::Star(a) => a.num_vars(),
            Formula::Join(a, b) => a.num_vars().max(b.num_vars()),
        }
    }

    /// Number of nodes, counting shared subtrees once per occurrence.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Zero | Formula::One => 1,
            Formula::Neg(a) | Formula::Star(a) => 1 + a.size(),
            Formula::Join(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Value at the valuation `vals` (chain positions indexed by variable).
    ///
    /// Panics if a variable is unbound; use [`crate::logic::eval`] for a
    /// checked version.
    pub fn eval_on(&self, c: &impl StarChain, vals: &[usize]) -> usize {
        match self {
            Formula::Var(i) => vals[*i],
            Formula::Zero => 0,
            Formula::One => c.top(),
            Formula::Neg(a) => c.inv(a.eval_on(c, vals)),
            Formula::Star(a) => c.star(a.eval_on(c, vals)),
            Formula::Join(a, b) => a.eval_on(c, vals).max(b.eval_on(c, vals)),
        }
    }

    /// Replaces each `Var(i)` by `subst[i]`.
    pub fn substitute(&self, subst: &[F]) -> F {
        match self {
            Formula::Var(i) => subst[*i].clone(),
            Formula::Zero => zero(),
            Formula::One => one(),
            Formula::Neg(a) => neg(&a.substitute(subst)),
            Formula::Star(a) => star(&a.substitute(subst)),
            Formula::Join(a, b) => join(&a.substitute(subst), &b.substitute(subst)),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(i) => write!(f, "p{i}"),
            Formula::Zero => write!(f, "0"),
            Formula::One => write!(f, "1"),
            Formula::Neg(a) => write!(f, "~{}", Atomic(a)),
            Formula::Star(a) => write!(f, "*{}", Atomic(a)),
            Formula::Join(a, b) => write!(f, "{} | {}", a, Atomic(b)),
        }
    }
}

struct Atomic<'a>(&'a Formula);

impl fmt::Display for Atomic<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Formula::Join(..) => write!(f, "({})", self.0),
            g => write!(f, "{g}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Chain;

    #[test]
    fn eval_basics() {
        let c = Chain::new(11).unwrap();
        assert_eq!(star(&var(0)).eval_on(&c, &[7]), 3);
        assert_eq!(one().eval_on(&c, &[]), 11);
        assert_eq!(meet(&var(0), &var(1)).eval_on(&c, &[3, 8]), 3);
        assert_eq!(plus(&var(0)).eval_on(&c, &[4]), 8);
    }

    #[test]
    fn display() {
        let f = neg(&join(&var(0), &star(&var(1))));
        assert_eq!(f.to_string(), "~(p0 | *p1)");
        let g = join(&join(&var(0), &var(1)), &join(&var(2), &zero()));
        assert_eq!(g.to_string(), "p0 | p1 | (p2 | 0)");
        assert_eq!(g.num_vars(), 3);
    }
}
