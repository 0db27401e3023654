//! Procedure P, generated subalgebras and strict simplicity.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::chain::{Chain, Elem};
use crate::error::Error;
use crate::structure::StarChain;

/// Default bound on `n` for [`all_subalgebras`].
pub const DEFAULT_ENUMERATION_BOUND: u32 = 64;

/// Output of procedure P: `a_1 = start`, then `*a_i` if `a_i` is positive
/// and `¬a_i` otherwise, stopping before the first repetition.
///
/// Positions are chain positions (numerators for [`Chain`]). `loop_index`
/// is the 0-based index of the element that `a_{k+1}` repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSequence {
    pub seq: Vec<usize>,
    pub loop_index: usize,
}

impl PSequence {
    pub fn start(&self) -> usize {
        self.seq[0]
    }

    /// True when the sequence returns to its own start.
    pub fn returns_to_start(&self) -> bool {
        self.loop_index == 0
    }

    pub fn last(&self) -> usize {
        *self.seq.last().unwrap()
    }
}

/// One step of procedure P.
pub fn p_step(c: &impl StarChain, x: usize) -> usize {
    if c.is_positive(x) {
        c.star(x)
    } else {
        c.inv(x)
    }
}

pub fn procedure_p(c: &impl StarChain, a: usize) -> Result<PSequence, Error> {
    if c.is_boundary(a) {
        return Err(Error::BoundaryElement);
    }
    let mut seen = vec![usize::MAX; c.len()];
    let mut seq = Vec::new();
    let mut x = a;
    loop {
        if seen[x] != usize::MAX {
            return Ok(PSequence {
                seq,
                loop_index: seen[x],
            });
        }
        seen[x] = seq.len();
        seq.push(x);
        x = p_step(c, x);
        debug_assert!(!c.is_boundary(x) || seen[x] == usize::MAX);
    }
}

/// Least set of positions containing `gens`, 0 and top, closed under
/// involution and star. Sorted.
pub fn closure(c: &impl StarChain, gens: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; c.len()];
    let mut stack = vec![0, c.top()];
    stack.extend_from_slice(gens);
    while let Some(x) = stack.pop() {
        if inside[x] {
            continue;
        }
        inside[x] = true;
        stack.push(c.inv(x));
        stack.push(c.star(x));
    }
    (0..c.len()).filter(|&x| inside[x]).collect()
}

/// Non-boundary elements `x` with `x ≥ ∼x`; every one-generated
/// subalgebra other than {0,1} is generated by one of them.
pub fn generator_candidates(c: &impl StarChain) -> Vec<usize> {
    (0..c.len())
        .filter(|&x| !c.is_boundary(x) && x >= c.inv(x))
        .collect()
}

/// True iff every non-boundary element generates the whole chain.
pub fn is_strictly_simple_chain(c: &impl StarChain) -> bool {
    generator_candidates(c)
        .into_iter()
        .all(|x| closure(c, &[x]).len() == c.len())
}

pub fn run_p(chain: &Chain, a: Elem) -> Result<PSequence, Error> {
    assert!(chain.contains(a), "{a} is not in Ł_{}", chain.n() + 1);
    let p = procedure_p(chain, a.num() as usize)?;
    debug_assert!(p.seq.len() < chain.n() as usize);
    Ok(p)
}

/// A subalgebra of Ł*_{n+1}, given by its numerators in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SubalgebraRepr")]
pub struct Subalgebra {
    n: u32,
    elems: Vec<u32>,
}

#[derive(Deserialize)]
struct SubalgebraRepr {
    n: u32,
    elems: Vec<u32>,
}

impl TryFrom<SubalgebraRepr> for Subalgebra {
    type Error = Error;

    fn try_from(r: SubalgebraRepr) -> Result<Self, Error> {
        Subalgebra::new(Chain::new(r.n)?, r.elems)
    }
}

impl Subalgebra {
    /// Checks that `elems` contains 0 and 1 and is closed under ¬ and *.
    pub fn new(chain: Chain, mut elems: Vec<u32>) -> Result<Self, Error> {
        let n = chain.n();
        elems.sort_unstable();
        elems.dedup();
        if let Some(&k) = elems.iter().find(|&&k| k > n) {
            return Err(Error::NotInChain { k, n });
        }
        let s = Subalgebra { n, elems };
        let closed = s.elems.first() == Some(&0)
            && s.elems.last() == Some(&n)
            && s.elems.iter().all(|&k| {
                let x = chain.elem(k).unwrap();
                s.contains_num(x.neg().num()) && s.contains_num(x.star().num())
            });
        if !closed {
            return Err(Error::NotClosed);
        }
        Ok(s)
    }

    fn from_positions(chain: &Chain, positions: Vec<usize>) -> Self {
        Subalgebra {
            n: chain.n(),
            elems: positions.into_iter().map(|p| p as u32).collect(),
        }
    }

    pub fn full(chain: &Chain) -> Self {
        Subalgebra {
            n: chain.n(),
            elems: (0..=chain.n()).collect(),
        }
    }

    pub fn chain(&self) -> Chain {
        Chain::new(self.n).unwrap()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Numerators in increasing order.
    pub fn numerators(&self) -> &[u32] {
        &self.elems
    }

    pub fn elements(&self) -> Vec<Elem> {
        let c = self.chain();
        self.elems.iter().map(|&k| c.elem(k).unwrap()).collect()
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    fn contains_num(&self, k: u32) -> bool {
        self.elems.binary_search(&k).is_ok()
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.den() == self.n && self.contains_num(x.num())
    }

    /// Position of `x` inside this subalgebra.
    pub fn position(&self, x: Elem) -> Option<usize> {
        if x.den() != self.n {
            return None;
        }
        self.elems.binary_search(&x.num()).ok()
    }

    pub fn elem_at(&self, pos: usize) -> Elem {
        self.chain().elem(self.elems[pos]).unwrap()
    }

    pub fn is_full(&self) -> bool {
        self.elems.len() == self.n as usize + 1
    }
}

impl StarChain for Subalgebra {
    fn len(&self) -> usize {
        self.elems.len()
    }

    fn star(&self, x: usize) -> usize {
        let k = (2 * self.elems[x]).saturating_sub(self.n);
        self.elems
            .binary_search(&k)
            .expect("subalgebra is closed under star")
    }

    fn value(&self, x: usize) -> Option<Ratio<i64>> {
        Some(Ratio::new(self.elems[x] as i64, self.n as i64))
    }
}

/// ⟨a⟩*.
pub fn generated(chain: &Chain, a: Elem) -> Subalgebra {
    generated_by_set(chain, &[a])
}

/// ⟨X⟩*.
pub fn generated_by_set(chain: &Chain, xs: &[Elem]) -> Subalgebra {
    let gens: Vec<usize> = xs
        .iter()
        .map(|x| {
            assert!(chain.contains(*x), "{x} is not in Ł_{}", chain.n() + 1);
            x.num() as usize
        })
        .collect();
    Subalgebra::from_positions(chain, closure(chain, &gens))
}

pub fn all_subalgebras(chain: &Chain) -> Result<Vec<Subalgebra>, Error> {
    all_subalgebras_bounded(chain, DEFAULT_ENUMERATION_BOUND)
}

/// Every subalgebra exactly once, sorted by size and then lexicographically.
///
/// Each subalgebra is the closure of a set of generators `x ≥ ∼x`, so it is
/// reached by adjoining generators one at a time starting from {0,1}.
pub fn all_subalgebras_bounded(chain: &Chain, bound: u32) -> Result<Vec<Subalgebra>, Error> {
    if chain.n() > bound {
        return Err(Error::BoundExceeded {
            n: chain.n(),
            bound,
        });
    }
    let positives = generator_candidates(chain);
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![closure(chain, &[])];
    found.insert(frontier[0].clone());
    while let Some(s) = frontier.pop() {
        for &p in &positives {
            if s.binary_search(&p).is_ok() {
                continue;
            }
            let mut gens = s.clone();
            gens.push(p);
            let t = closure(chain, &gens);
            if found.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let mut out: Vec<Subalgebra> = found
        .into_iter()
        .map(|s| Subalgebra::from_positions(chain, s))
        .collect();
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.elems.cmp(&b.elems)));
    Ok(out)
}

/// True iff the only proper subalgebra of Ł*_{n+1} is {0,1}.
pub fn is_strictly_simple(chain: &Chain) -> bool {
    is_strictly_simple_chain(chain)
}

/// True iff every element of `s` other than 0 and 1 generates `s`.
/// {0,1} is strictly simple (vacuously).
pub fn is_strictly_simple_sub(s: &Subalgebra) -> bool {
    is_strictly_simple_chain(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: u32) -> Chain {
        Chain::new(n).unwrap()
    }

    #[test]
    fn p_examples() {
        let c = chain(9);
        assert_eq!(run_p(&c, c.elem(8).unwrap()).unwrap().seq, vec![8, 7, 5, 1]);
        let c = chain(5);
        assert_eq!(run_p(&c, c.elem(4).unwrap()).unwrap().seq, vec![4, 3, 1]);
        let c = chain(3);
        let p = run_p(&c, c.elem(2).unwrap()).unwrap();
        assert_eq!(p.seq, vec![2, 1]);
        assert_eq!(p.loop_index, 0);
        assert_eq!(run_p(&c, c.one()), Err(Error::BoundaryElement));
    }

    #[test]
    fn generated_examples() {
        let c = chain(9);
        assert_eq!(
            generated(&c, c.elem(8).unwrap()).numerators(),
            &[0, 1, 2, 4, 5, 7, 8, 9]
        );
        let c = chain(17);
        assert_eq!(
            generated(&c, c.coatom()).numerators(),
            &[0, 1, 2, 4, 8, 9, 13, 15, 16, 17]
        );
        assert_eq!(generated(&c, c.one()).numerators(), &[0, 17]);
        let c = chain(4);
        assert_eq!(
            generated_by_set(&c, &[c.elem(2).unwrap()]).numerators(),
            &[0, 2, 4]
        );
        assert_eq!(generated_by_set(&c, &[]).numerators(), &[0, 4]);
    }

    #[test]
    fn enumeration_examples() {
        let subs = |n| -> Vec<Vec<u32>> {
            all_subalgebras(&chain(n))
                .unwrap()
                .into_iter()
                .map(|s| s.elems)
                .collect()
        };
        assert_eq!(subs(2), vec![vec![0, 2], vec![0, 1, 2]]);
        assert_eq!(subs(3), vec![vec![0, 3], vec![0, 1, 2, 3]]);
        assert_eq!(
            subs(4),
            vec![vec![0, 4], vec![0, 2, 4], vec![0, 1, 2, 3, 4]]
        );
        assert!(all_subalgebras(&chain(65)).is_err());
    }

    #[test]
    fn strict_simplicity() {
        assert!(is_strictly_simple(&chain(2)));
        assert!(!is_strictly_simple(&chain(17)));
        assert!(!is_strictly_simple(&chain(4)));
        assert!(is_strictly_simple(&chain(1)));
        let c = chain(5);
        assert!(is_strictly_simple_sub(&generated(&c, c.coatom())));
        assert!(is_strictly_simple_sub(&generated(&c, c.one())));
        assert!(!is_strictly_simple_sub(&Subalgebra::full(&chain(17))));
    }

    #[test]
    fn subalgebra_json() {
        let c = chain(9);
        let s = generated(&c, c.coatom());
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"n":9,"elems":[0,1,2,4,5,7,8,9]}"#);
        let back: Subalgebra = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<Subalgebra>(r#"{"n":9,"elems":[0,8,9]}"#).is_err());
    }
}
