//! Synthesis of the definable operations Δ_a, χ_a, ⇒_c, ⇒_G and ⇒_Ł.
//!
//! The Δ_a procedure works on any [`StarChain`], in particular on
//! subalgebras of Ł*_{n+1} presented by their own positions. Positivity and
//! the comparisons with 1/2 use the involution: `x > 1/2` iff `x > ∼x`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{in_pi, term_equivalent};
use crate::chain::{Chain, Elem};
use crate::error::Error;
use crate::formula::{self as fm, F};
use crate::structure::StarChain;
use crate::subalgebra::is_strictly_simple_chain;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum UnaryOp {
    Star,
    Plus,
    Neg,
}

impl UnaryOp {
    pub fn apply(self, c: &impl StarChain, x: usize) -> usize {
        match self {
            UnaryOp::Star => c.star(x),
            UnaryOp::Plus => c.plus(x),
            UnaryOp::Neg => c.inv(x),
        }
    }

    pub fn apply_real<T: Clone + Integer>(self, x: &Ratio<T>) -> Ratio<T> {
        let two = Ratio::from_integer(T::one() + T::one());
        match self {
            UnaryOp::Star => {
                let y = two * x - Ratio::one();
                if y < Ratio::zero() {
                    Ratio::zero()
                } else {
                    y
                }
            }
            UnaryOp::Plus => {
                let y = two * x;
                if y > Ratio::one() {
                    Ratio::one()
                } else {
                    y
                }
            }
            UnaryOp::Neg => Ratio::one() - x,
        }
    }

    fn symbol(self) -> char {
        match self {
            UnaryOp::Star => '*',
            UnaryOp::Plus => '+',
            UnaryOp::Neg => '~',
        }
    }
}

/// A composition of unary operations; `ops[0]` is applied first.
///
/// Prefix notation writes the outermost operation first, so `+*^2+*x` is
/// `ops = [Star, Plus, Star, Star, Plus]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnaryTerm {
    pub ops: Vec<UnaryOp>,
}

impl UnaryTerm {
    pub fn identity() -> Self {
        UnaryTerm { ops: Vec::new() }
    }

    pub fn repeat(op: UnaryOp, k: usize) -> Self {
        UnaryTerm { ops: vec![op; k] }
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// `other ∘ self`.
    pub fn then(mut self, other: &UnaryTerm) -> Self {
        self.ops.extend_from_slice(&other.ops);
        self
    }

    pub fn eval(&self, c: &impl StarChain, x: usize) -> usize {
        self.ops.iter().fold(x, |x, op| op.apply(c, x))
    }

    pub fn eval_elem(&self, x: Elem) -> Elem {
        let c = x.chain();
        c.elem(self.eval(&c, x.num() as usize) as u32).unwrap()
    }

    pub fn eval_real<T: Clone + Integer>(&self, x: &Ratio<T>) -> Ratio<T> {
        self.ops.iter().fold(x.clone(), |x, op| op.apply_real(&x))
    }

    pub fn apply_to(&self, arg: &F) -> F {
        self.ops.iter().fold(arg.clone(), |f, op| match op {
            UnaryOp::Star => fm::star(&f),
            UnaryOp::Plus => fm::plus(&f),
            UnaryOp::Neg => fm::neg(&f),
        })
    }

    /// Parses prefix notation such as `+*^2+*` (outermost first).
    pub fn parse_paper(text: &str) -> Result<Self, Error> {
        if text.trim() == "id" {
            return Ok(UnaryTerm::identity());
        }
        let chars: Vec<char> = text.chars().collect();
        let mut outer_first = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let op = match chars[i] {
                '*' | '★' => UnaryOp::Star,
                '+' => UnaryOp::Plus,
                '~' | '¬' | '∼' => UnaryOp::Neg,
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                c => {
                    return Err(Error::Parse {
                        pos: i,
                        msg: format!("unexpected '{c}' in term"),
                    })
                }
            };
            i += 1;
            let mut k = 1;
            if i < chars.len() && chars[i] == '^' {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                if end == start {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "expected exponent".into(),
                    });
                }
                k = chars[start..end]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .unwrap();
                i = end;
            }
            outer_first.extend(std::iter::repeat_n(op, k));
        }
        outer_first.reverse();
        Ok(UnaryTerm { ops: outer_first })
    }
}

impl fmt::Display for UnaryTerm {
    /// Prefix notation, outermost first, runs written as `^k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ops.is_empty() {
            return write!(f, "id");
        }
        let outer_first: Vec<UnaryOp> = self.ops.iter().rev().copied().collect();
        let mut i = 0;
        while i < outer_first.len() {
            let op = outer_first[i];
            let mut j = i;
            while j < outer_first.len() && outer_first[j] == op {
                j += 1;
            }
            write!(f, "{}", op.symbol())?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Δ_a as a term. `a = 0` has no unary-term form and is `Δ_1 x ∨ ¬Δ_1 x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaTerm {
    Term(UnaryTerm),
    ConstantOne { delta_one: UnaryTerm },
}

impl DeltaTerm {
    pub fn eval(&self, c: &impl StarChain, x: usize) -> usize {
        match self {
            DeltaTerm::Term(t) => t.eval(c, x),
            DeltaTerm::ConstantOne { delta_one } => {
                let d = delta_one.eval(c, x);
                d.max(c.inv(d))
            }
        }
    }

    pub fn apply_to(&self, arg: &F) -> F {
        match self {
            DeltaTerm::Term(t) => t.apply_to(arg),
            DeltaTerm::ConstantOne { delta_one } => {
                let d = delta_one.apply_to(arg);
                fm::join(&d, &fm::neg(&d))
            }
        }
    }

    pub fn as_unary(&self) -> Option<&UnaryTerm> {
        match self {
            DeltaTerm::Term(t) => Some(t),
            DeltaTerm::ConstantOne { .. } => None,
        }
    }
}

impl fmt::Display for DeltaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaTerm::Term(t) => write!(f, "{t}"),
            DeltaTerm::ConstantOne { delta_one } => write!(f, "{delta_one}x | ~{delta_one}x"),
        }
    }
}

/// The pairs `(x_i, y_i)` visited by the Δ_a procedure and the term applied
/// at each step; the last pair is separated.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SynthTrace {
    pub pairs: Vec<(usize, usize)>,
    pub steps: Vec<UnaryTerm>,
    pub terminal: UnaryTerm,
}

fn separated(c: &impl StarChain, a: usize, b: usize) -> bool {
    (c.is_positive(a) && !c.is_positive(b)) || b == 0 || a == c.top()
}

pub fn is_separated_in(c: &impl StarChain, a: usize, b: usize) -> Result<bool, Error> {
    if a <= b {
        return Err(Error::NotOrdered);
    }
    Ok(separated(c, a, b))
}

pub fn is_separated(a: Elem, b: Elem) -> Result<bool, Error> {
    let c = a.chain();
    assert!(c.contains(b), "elements of different chains: {a} and {b}");
    is_separated_in(&c, a.num() as usize, b.num() as usize)
}

fn iterate_until(c: &impl StarChain, op: UnaryOp, x: usize, target: usize) -> Result<usize, Error> {
    let mut y = x;
    for k in 0..=c.len() {
        if y == target {
            return Ok(k);
        }
        y = op.apply(c, y);
    }
    Err(Error::NoTerm(format!(
        "{op:?} iterates of {x} never reach {target}"
    )))
}

/// A term `t` with `t(a) = 1` and `t(b) = 0` for a separated pair.
///
/// Cases are tried in the order `b = 0` (`+^k`), `a > 1/2 ≥ b` (`+^k *`),
/// `a = 1` (`*^k`), each with minimal `k`.
pub fn separating_term_in(c: &impl StarChain, a: usize, b: usize) -> Result<UnaryTerm, Error> {
    if !is_separated_in(c, a, b)? {
        return Err(Error::NotSeparated);
    }
    let t = if b == 0 {
        UnaryTerm::repeat(UnaryOp::Plus, iterate_until(c, UnaryOp::Plus, a, c.top())?)
    } else if c.is_positive(a) && !c.is_positive(b) {
        let k = iterate_until(c, UnaryOp::Plus, c.star(a), c.top())?;
        UnaryTerm::repeat(UnaryOp::Star, 1).then(&UnaryTerm::repeat(UnaryOp::Plus, k))
    } else {
        UnaryTerm::repeat(UnaryOp::Star, iterate_until(c, UnaryOp::Star, b, 0)?)
    };
    if t.eval(c, a) != c.top() || t.eval(c, b) != 0 {
        return Err(Error::NoTerm(format!("{t} does not separate {a} from {b}")));
    }
    Ok(t)
}

pub fn separating_term(a: Elem, b: Elem) -> Result<UnaryTerm, Error> {
    let c = a.chain();
    assert!(c.contains(b), "elements of different chains: {a} and {b}");
    separating_term_in(&c, a.num() as usize, b.num() as usize)
}

fn check_doubling(c: &impl StarChain, before: (usize, usize), after: (usize, usize)) {
    if let (Some(x0), Some(y0), Some(x1), Some(y1)) = (
        c.value(before.0),
        c.value(before.1),
        c.value(after.0),
        c.value(after.1),
    ) {
        assert!(
            separated(c, after.0, after.1) || x1 - y1 == (x0 - y0) * 2,
            "pair distance did not double: {before:?} -> {after:?}"
        );
    }
}

/// Δ_a on any finite star chain, with the pair trace.
///
/// Case A (both above 1/2) applies `*` and Case B (both at most 1/2)
/// applies `+`, as long as the pair stays distinct; a run stops early once
/// the lower element reaches 0 (Case A) or the upper reaches 1 (Case B).
pub fn synth_delta_traced(c: &impl StarChain, a: usize) -> Result<(DeltaTerm, SynthTrace), Error> {
    let top = c.top();
    let delta_one = UnaryTerm::repeat(UnaryOp::Star, top);
    let mut trace = SynthTrace::default();
    if a == 0 {
        return Ok((DeltaTerm::ConstantOne { delta_one }, trace));
    }
    if a == top {
        trace.terminal = delta_one.clone();
        return Ok((DeltaTerm::Term(delta_one), trace));
    }
    let (mut x, mut y) = (a, a - 1);
    trace.pairs.push((x, y));
    let mut prefix = UnaryTerm::identity();
    let mut seen = HashSet::new();
    while !separated(c, x, y) {
        if !seen.insert((x, y)) {
            return Err(Error::NoTerm(format!(
                "Δ procedure cycles at pair ({x}, {y})"
            )));
        }
        let op = if c.is_positive(y) {
            UnaryOp::Star
        } else {
            UnaryOp::Plus
        };
        let mut step = UnaryTerm::identity();
        loop {
            let (nx, ny) = (op.apply(c, x), op.apply(c, y));
            if nx <= ny {
                break;
            }
            if !separated(c, x, y) {
                check_doubling(c, (x, y), (nx, ny));
            }
            let half = op == UnaryOp::Plus && x == c.inv(x);
            x = nx;
            y = ny;
            step.ops.push(op);
            if half || (op == UnaryOp::Star && y == 0) || (op == UnaryOp::Plus && x == top) {
                break;
            }
        }
        if step.is_empty() {
            return Err(Error::NoTerm(format!("no progress from pair ({x}, {y})")));
        }
        prefix = prefix.then(&step);
        trace.steps.push(step);
        trace.pairs.push((x, y));
    }
    let t = separating_term_in(c, x, y)?;
    trace.terminal = t.clone();
    Ok((DeltaTerm::Term(prefix.then(&t)), trace))
}

pub fn synth_delta_in(c: &impl StarChain, a: usize) -> Result<DeltaTerm, Error> {
    synth_delta_traced(c, a).map(|(t, _)| t)
}

pub fn synth_delta(chain: &Chain, a: Elem) -> DeltaTerm {
    assert!(chain.contains(a), "{a} is not in Ł_{}", chain.n() + 1);
    synth_delta_in(chain, a.num() as usize).expect("Δ_a exists on Ł*_{n+1}")
}

/// Δ_a for every position of a chain, computed once.
#[derive(Clone, Debug)]
pub struct Definitions {
    deltas: Vec<DeltaTerm>,
}

impl Definitions {
    pub fn new(c: &impl StarChain) -> Result<Self, Error> {
        let deltas = (0..c.len())
            .map(|a| synth_delta_in(c, a))
            .collect::<Result<_, _>>()?;
        Ok(Definitions { deltas })
    }

    pub fn for_chain(chain: &Chain) -> Self {
        Definitions::new(chain).expect("Δ_a exists on Ł*_{n+1}")
    }

    pub fn top(&self) -> usize {
        self.deltas.len() - 1
    }

    pub fn delta_term(&self, a: usize) -> &DeltaTerm {
        &self.deltas[a]
    }

    pub fn delta(&self, a: usize, arg: &F) -> F {
        self.deltas[a].apply_to(arg)
    }

    /// χ_a: indicator of `{a}`.
    pub fn chi(&self, a: usize, arg: &F) -> F {
        let top = self.top();
        if a == top {
            self.delta(top, arg)
        } else if a == 0 {
            fm::neg(&self.delta(1, arg))
        } else {
            fm::meet(&self.delta(a, arg), &fm::neg(&self.delta(a + 1, arg)))
        }
    }

    /// `x ⇒_c y = ⋁_a (χ_a(x) ∧ Δ_a(y))`.
    pub fn crisp_imp(&self, x: &F, y: &F) -> F {
        fm::join_all((0..=self.top()).map(|a| fm::meet(&self.chi(a, x), &self.delta(a, y))))
            .unwrap()
    }

    /// `x ⇒_G y = (x ⇒_c y) ∨ y`.
    pub fn goedel_imp(&self, x: &F, y: &F) -> F {
        fm::join(&self.crisp_imp(x, y), y)
    }
}

pub fn synth_chi(chain: &Chain, a: Elem) -> F {
    assert!(chain.contains(a), "{a} is not in Ł_{}", chain.n() + 1);
    Definitions::for_chain(chain).chi(a.num() as usize, &fm::var(0))
}

pub fn synth_crisp_imp(chain: &Chain) -> F {
    Definitions::for_chain(chain).crisp_imp(&fm::var(0), &fm::var(1))
}

pub fn synth_goedel_imp(chain: &Chain) -> F {
    Definitions::for_chain(chain).goedel_imp(&fm::var(0), &fm::var(1))
}

/// Shortest word over {*, +, ¬} taking `a` to `b`, by breadth-first search.
pub fn transfer_term(chain: &Chain, a: Elem, b: Elem) -> Result<UnaryTerm, Error> {
    assert!(chain.contains(a) && chain.contains(b));
    if a.is_boundary() {
        return Err(Error::BoundaryElement);
    }
    if !is_strictly_simple_chain(chain) {
        return Err(Error::NotStrictlySimple);
    }
    let (start, goal) = (a.num() as usize, b.num() as usize);
    let mut parent: Vec<Option<(usize, UnaryOp)>> = vec![None; chain.len()];
    let mut visited = vec![false; chain.len()];
    visited[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if x == goal {
            let mut ops = Vec::new();
            let mut y = x;
            while let Some((p, op)) = parent[y] {
                ops.push(op);
                y = p;
            }
            ops.reverse();
            return Ok(UnaryTerm { ops });
        }
        for op in [UnaryOp::Star, UnaryOp::Plus, UnaryOp::Neg] {
            let y = op.apply(chain, x);
            if !visited[y] {
                visited[y] = true;
                parent[y] = Some((x, op));
                queue.push_back(y);
            }
        }
    }
    Err(Error::NoTerm(format!("{b} is unreachable from {a}")))
}

/// `x ⇒_Ł y` as a formula in `p0, p1`, when Ł_{n+1} and Ł*_{n+1} are
/// term-equivalent.
pub fn synth_luk_imp(chain: &Chain) -> Result<F, Error> {
    let n = chain.n() as usize;
    if !term_equivalent(n as u64) {
        return Err(Error::NotTermEquivalent(in_pi(n as u64)));
    }
    let defs = Definitions::for_chain(chain);
    let (x, y) = (fm::var(0), fm::var(1));
    let mut disjuncts = vec![defs.crisp_imp(&x, &y)];
    for i in 1..=n {
        for j in 0..i {
            let t = if i == n {
                y.clone()
            } else if n == 4 {
                match (i, j) {
                    (_, 0) => fm::neg(&x),
                    (3, 2) => x.clone(),
                    (3, 1) => fm::star(&x),
                    (2, 1) => fm::neg(&y),
                    _ => unreachable!(),
                }
            } else {
                let a = chain.elem(i as u32)?;
                let b = chain.elem((n - i + j) as u32)?;
                transfer_term(chain, a, b)?.apply_to(&x)
            };
            let chis = fm::meet(&defs.chi(i, &x), &defs.chi(j, &y));
            disjuncts.push(fm::meet(&chis, &t));
        }
    }
    Ok(fm::join_all(disjuncts).unwrap())
}
