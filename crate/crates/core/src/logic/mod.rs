//! The matrix logics Λ*_{n+1,i} = ⟨Ł*_{n+1}, F_{i/n}⟩.
//!
//! Validity and consequence are decided by sweeping every valuation.

mod checks;
mod expr;

pub use checks::{
    check_algebraizability, check_crisp_monotonicity, check_hilbert_axioms, check_lambda_equations,
    check_lambda_equations_on, check_lemma_theorems, check_translations, random_sample, Failure,
    Report, Sample,
};
pub use expr::{parse, Derived, Expr, Frac};

use serde::Serialize;

use crate::chain::{Chain, Elem};
use crate::error::Error;
use crate::formula::Formula;

/// Largest valuation space swept by a single check.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// The matrix with designated set `F_{i/n} = {x ≥ i/n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Matrix {
    pub n: u32,
    pub i: u32,
}

impl Matrix {
    pub fn new(n: u32, i: u32) -> Result<Self, Error> {
        Chain::new(n)?;
        if i == 0 || i > n {
            return Err(Error::OutOfRange(format!(
                "filter index {i} not in 1..={n}"
            )));
        }
        Ok(Matrix { n, i })
    }

    pub fn chain(&self) -> Chain {
        Chain::new(self.n).unwrap()
    }

    pub fn designated(&self, x: usize) -> bool {
        x >= self.i as usize
    }
}

/// A valuation witnessing failure: `values[k]` is assigned to `pk`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Countermodel {
    pub values: Vec<String>,
    pub value: String,
}

/// Evaluates `f` with `pk ↦ v[k]`.
pub fn eval(f: &Formula, chain: &Chain, v: &[Elem]) -> Result<Elem, Error> {
    let need = f.num_vars();
    if v.len() < need {
        return Err(Error::OutOfRange(format!(
            "variable p{} is unbound",
            v.len()
        )));
    }
    let pos: Vec<usize> = v
        .iter()
        .map(|x| {
            assert!(chain.contains(*x), "{x} is not in Ł_{}", chain.n() + 1);
            x.num() as usize
        })
        .collect();
    Ok(chain.elem(f.eval_on(chain, &pos) as u32).unwrap())
}

/// Calls `visit` on every valuation of `vars` variables until it returns
/// false; returns whether the sweep completed.
fn sweep(
    size: usize,
    vars: usize,
    budget: u128,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Result<bool, Error> {
    let points = (size as u128).checked_pow(vars as u32).unwrap_or(u128::MAX);
    if points > budget {
        return Err(Error::BudgetExceeded(points));
    }
    let mut vals = vec![0usize; vars];
    loop {
        if !visit(&vals) {
            return Ok(false);
        }
        let mut k = 0;
        loop {
            if k == vars {
                return Ok(true);
            }
            vals[k] += 1;
            if vals[k] < size {
                break;
            }
            vals[k] = 0;
            k += 1;
        }
    }
}

fn countermodel(chain: &Chain, vals: &[usize], value: usize) -> Countermodel {
    let el = |x: usize| chain.elem(x as u32).unwrap().to_string();
    Countermodel {
        values: vals.iter().map(|&x| el(x)).collect(),
        value: el(value),
    }
}

pub fn is_valid(m: Matrix, f: &Formula) -> Result<Option<Countermodel>, Error> {
    consequence(m, &[], f)
}

pub fn is_valid_with_budget(
    m: Matrix,
    f: &Formula,
    budget: u128,
) -> Result<Option<Countermodel>, Error> {
    consequence_with_budget(m, &[], f, budget)
}

/// `None` when `premises ⊨ f`, otherwise a valuation designating every
/// premise but not `f`.
pub fn consequence(
    m: Matrix,
    premises: &[&Formula],
    f: &Formula,
) -> Result<Option<Countermodel>, Error> {
    consequence_with_budget(m, premises, f, DEFAULT_BUDGET)
}

pub fn consequence_with_budget(
    m: Matrix,
    premises: &[&Formula],
    f: &Formula,
    budget: u128,
) -> Result<Option<Countermodel>, Error> {
    let chain = m.chain();
    let vars = premises
        .iter()
        .map(|p| p.num_vars())
        .max()
        .unwrap_or(0)
        .max(f.num_vars());
    let mut found = None;
    sweep(chain.n() as usize + 1, vars, budget, |vals| {
        if premises
            .iter()
            .all(|p| m.designated(p.eval_on(&chain, vals)))
        {
            let v = f.eval_on(&chain, vals);
            if !m.designated(v) {
                found = Some(countermodel(&chain, vals, v));
                return false;
            }
        }
        true
    })?;
    Ok(found)
}
