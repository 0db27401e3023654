use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::{fixed_point, skeleton, solve_preimage, AbstractIGChain, SkSeq, SkSymbol};
use crate::error::Error;
use crate::logic::Report;
use crate::structure::StarChain;
use crate::subalgebra::{closure, procedure_p};
use crate::Rational;

/// A strictly simple subalgebra together with the elements it attracts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub core: Vec<usize>,
    pub attracted: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplePartition {
    pub blocks: Vec<Block>,
}

/// Closure of the element procedure P from `x` loops back to.
fn core_of(c: &impl StarChain, x: usize) -> Vec<usize> {
    let p = procedure_p(c, x).unwrap();
    closure(c, &[p.seq[p.loop_index]])
}

fn partition_of(c: &impl StarChain) -> SimplePartition {
    let mut by_core: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for x in 1..c.top() {
        by_core.entry(core_of(c, x)).or_default().push(x);
    }
    SimplePartition {
        blocks: by_core
            .into_iter()
            .map(|(core, attracted)| Block { core, attracted })
            .collect(),
    }
}

pub fn simple_partition(c: &AbstractIGChain) -> Result<SimplePartition, Error> {
    c.require_valid()?;
    Ok(partition_of(c))
}

/// Order-, star- and involution-preserving map into Ł*_{k+1};
/// `image[j]` is the numerator assigned to position `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub k: u64,
    pub image: Vec<u64>,
}

impl Embedding {
    pub fn verify(&self, c: &impl StarChain) -> bool {
        let k = self.k;
        let img = &self.image;
        let luk_star = |v: u64| (2 * v).saturating_sub(k);
        k >= 1
            && img.len() == c.len()
            && img[0] == 0
            && img[c.top()] == k
            && img.windows(2).all(|w| w[0] < w[1])
            && (0..c.len())
                .all(|x| img[c.inv(x)] == k - img[x] && img[c.star(x)] == luk_star(img[x]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Witness {
    /// The coatom of a strictly simple subalgebra has a periodic skeleton.
    PeriodicSkeleton { elem: usize, skeleton: SkSeq },
    /// Coatoms of two distinct strictly simple subalgebras share a skeleton.
    SharedSkeleton { elems: [usize; 2], skeleton: SkSeq },
    /// The induced real values contradict the chain at `elem`.
    Inconsistent { elem: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Representability {
    Representable { embedding: Embedding },
    NotRepresentable { witness: Witness },
}

impl Representability {
    pub fn is_representable(&self) -> bool {
        matches!(self, Representability::Representable { .. })
    }
}

fn real_step(sym: SkSymbol, x: &Rational) -> Rational {
    match sym {
        SkSymbol::Star => {
            let y = x * BigInt::from(2) - Rational::one();
            if y < Rational::zero() {
                Rational::zero()
            } else {
                y
            }
        }
        SkSymbol::Inv => Rational::one() - x,
    }
}

fn symbol_at(c: &impl StarChain, x: usize) -> SkSymbol {
    if c.is_positive(x) {
        SkSymbol::Star
    } else {
        SkSymbol::Inv
    }
}

pub fn is_representable(c: &AbstractIGChain) -> Result<Representability, Error> {
    c.require_valid()?;
    let part = partition_of(c);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut lambda: Vec<Option<Rational>> = vec![None; c.len()];
    lambda[0] = Some(Rational::zero());
    lambda[c.top()] = Some(Rational::one());
    let mut seen: Vec<(usize, SkSeq)> = Vec::new();
    for block in &part.blocks {
        let coatom = block.core[block.core.len() - 2];
        if !c.is_positive(coatom) {
            lambda[coatom] = Some(half.clone());
            continue;
        }
        let sk = skeleton(c, coatom)?;
        if sk.is_periodic() {
            return Ok(Representability::NotRepresentable {
                witness: Witness::PeriodicSkeleton {
                    elem: coatom,
                    skeleton: sk,
                },
            });
        }
        if let Some((other, _)) = seen.iter().find(|(_, s)| *s == sk) {
            return Ok(Representability::NotRepresentable {
                witness: Witness::SharedSkeleton {
                    elems: [*other, coatom],
                    skeleton: sk,
                },
            });
        }
        seen.push((coatom, sk.clone()));
        let mut x = coatom;
        let mut v = fixed_point(&sk)?;
        for sym in &sk.symbols {
            lambda[c.inv(x)] = Some(Rational::one() - v.clone());
            lambda[x] = Some(v.clone());
            v = real_step(*sym, &v);
            x = sym.apply(c, x);
        }
    }
    for x in 1..c.top() {
        if lambda[x].is_some() || !c.is_positive(x) {
            continue;
        }
        let mut word = Vec::new();
        let mut y = x;
        while lambda[y].is_none() {
            word.push(symbol_at(c, y));
            y = word.last().unwrap().apply(c, y);
        }
        let v = solve_preimage(&SkSeq::new(word), lambda[y].as_ref().unwrap())?;
        lambda[c.inv(x)] = Some(Rational::one() - v.clone());
        lambda[x] = Some(v);
    }
    let values: Vec<Rational> = match lambda.into_iter().collect::<Option<Vec<_>>>() {
        Some(v) => v,
        None => unreachable!("every element lies in some block"),
    };
    let k = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let too_big = || Error::OutOfRange(format!("embedding needs Ł*_{{{k}+1}}"));
    let image = values
        .iter()
        .map(|v| (v * Ratio::from_integer(k.clone())).to_integer().to_u64())
        .collect::<Option<Vec<u64>>>()
        .ok_or_else(too_big)?;
    let embedding = Embedding {
        k: k.to_u64().ok_or_else(too_big)?,
        image,
    };
    if !embedding.verify(c) {
        let elem = (0..c.len())
            .find(|&x| {
                let img = &embedding.image;
                (x > 0 && img[x - 1] >= img[x])
                    || img[c.star(x)] != (2 * img[x]).saturating_sub(embedding.k)
            })
            .unwrap_or(0);
        return Ok(Representability::NotRepresentable {
            witness: Witness::Inconsistent { elem },
        });
    }
    Ok(Representability::Representable { embedding })
}

/// Well-formed sk-sequences of length `len`.
fn sequences_of_len(len: usize) -> Vec<SkSeq> {
    let mut out = Vec::new();
    let mut cur = vec![SkSymbol::Star];
    fn go(cur: &mut Vec<SkSymbol>, len: usize, out: &mut Vec<SkSeq>) {
        if cur.len() == len {
            out.push(SkSeq::new(cur.clone()));
            return;
        }
        cur.push(SkSymbol::Star);
        go(cur, len, out);
        cur.pop();
        if *cur.last().unwrap() != SkSymbol::Inv {
            cur.push(SkSymbol::Inv);
            go(cur, len, out);
            cur.pop();
        }
    }
    if len > 0 {
        go(&mut cur, len, &mut out);
    }
    out
}

/// Checks (R1n) and (R2n) for every well-formed `R` and every `r ≥ 1`
/// with `r·|R| ≤ n+1`. One failure is reported per equation instance, at
/// the first offending pair.
pub fn check_r_equations(c: &AbstractIGChain, n: usize) -> Result<Report, Error> {
    c.require_valid()?;
    let size = c.len();
    let top = c.top();
    let d = |x| c.delta(x);
    let iff = |x, y| c.goedel_iff(x, y);
    let imp = |x, y| c.goedel_imp(x, y);
    let mut report = Report::default();
    for len in 1..=n + 1 {
        for r_seq in sequences_of_len(len) {
            let f: Vec<usize> = (0..size).map(|x| r_seq.apply(c, x)).collect();
            let iterate = |times: usize, x: usize| (0..times).fold(x, |x, _| f[x]);
            for r in 1..=(n + 1) / len {
                let bad = (0..size)
                    .flat_map(|x| (0..size).map(move |y| (x, y)))
                    .find(|&(x, y)| {
                        let guard = d(iff(f[x], y));
                        let concl = c.inv(d(iff(iterate(r - 1, y), x)));
                        c.inv(x).max(x).max(iff(x, y)).max(imp(guard, concl)) != top
                    });
                report.expect(
                    "R1n",
                    match bad {
                        Some((x, y)) => format!("R={r_seq}, r={r}, x={x}, y={y}"),
                        None => format!("R={r_seq}, r={r}"),
                    },
                    bad.is_none(),
                );
            }
            let bad = (0..size)
                .flat_map(|x| (0..size).map(move |y| (x, y)))
                .find(|&(x, y)| {
                    let guard = d(iff(f[x], x).min(iff(f[y], y)));
                    let lhs = c.inv(x).max(x).max(c.inv(y)).max(y);
                    lhs.max(imp(guard, d(iff(x, y)))) != top
                });
            report.expect(
                "R2n",
                match bad {
                    Some((x, y)) => format!("R={r_seq}, x={x}, y={y}"),
                    None => format!("R={r_seq}"),
                },
                bad.is_none(),
            );
        }
    }
    Ok(report)
}
