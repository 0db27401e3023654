use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::logic::Report;
use crate::structure::StarChain;

/// A finite chain `0 < 1 < … < size-1` with involution `j ↦ size-1-j` and
/// an arbitrary star table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Repr")]
pub struct AbstractIGChain {
    size: usize,
    star: Vec<usize>,
}

#[derive(Deserialize)]
struct Repr {
    size: usize,
    star: Vec<usize>,
}

impl TryFrom<Repr> for AbstractIGChain {
    type Error = Error;

    fn try_from(r: Repr) -> Result<Self, Error> {
        if r.star.len() != r.size {
            return Err(Error::InvalidTable(format!(
                "size is {} but the star table has {} entries",
                r.size,
                r.star.len()
            )));
        }
        AbstractIGChain::new(r.star)
    }
}

impl AbstractIGChain {
    pub fn new(star: Vec<usize>) -> Result<Self, Error> {
        let size = star.len();
        if size < 2 {
            return Err(Error::InvalidTable(
                "a chain needs at least two elements".into(),
            ));
        }
        if let Some(j) = star.iter().position(|&s| s >= size) {
            return Err(Error::InvalidTable(format!(
                "star({j}) = {} is out of range",
                star[j]
            )));
        }
        Ok(AbstractIGChain { size, star })
    }

    pub fn from_star_chain(c: &impl StarChain) -> Self {
        AbstractIGChain::new(c.star_table()).unwrap()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[usize] {
        &self.star
    }

    /// `Err(NotValidated)` unless the chain satisfies every IG★ equation.
    pub fn require_valid(&self) -> Result<(), Error> {
        let report = validate_igstar(self);
        match report.failures.first() {
            None => Ok(()),
            Some(f) => Err(Error::NotValidated(format!(
                "{} fails at {}",
                f.item, f.params
            ))),
        }
    }
}

impl StarChain for AbstractIGChain {
    fn len(&self) -> usize {
        self.size
    }

    fn star(&self, x: usize) -> usize {
        self.star[x]
    }
}

/// Checks ★1–★5 and the six IG equations at every element and pair.
pub fn validate_igstar(c: &AbstractIGChain) -> Report {
    let top = c.top();
    let imp = |x, y| c.goedel_imp(x, y);
    let iff = |x, y| c.goedel_iff(x, y);
    let d = |x| c.delta(x);
    let inv = |x| c.inv(x);
    let neg = |x| c.goedel_neg(x);
    let s = |x| c.star(x);
    let mut r = Report::default();
    for x in 0..c.len() {
        let p = format!("x={x}");
        // Read as Δ(x ∨ ∼x) = Δ(x ⇔ ★x): "x = ★x iff x ∈ {0, 1}".
        r.expect("★1", p.clone(), d(x.max(inv(x))) == d(iff(x, s(x))));
        r.expect("★2", p.clone(), d(imp(x, inv(x))) == neg(s(x)));
        r.expect(
            "★3",
            p.clone(),
            inv(d(imp(x, inv(x)))).min(inv(d(x))) <= inv(d(imp(x, s(x)))),
        );
        r.expect("IG1", p.clone(), inv(inv(x)) == x);
        r.expect("IG2", p.clone(), neg(x) <= inv(x));
        r.expect("IG4", p, d(x).max(neg(d(x))) == top);
    }
    for x in 0..c.len() {
        for y in 0..c.len() {
            let p = format!("x={x}, y={y}");
            let both_pos = d(imp(inv(x), x)).min(d(imp(inv(y), y)));
            r.expect(
                "★4",
                p.clone(),
                both_pos.min(inv(d(imp(x, y)))) <= inv(d(imp(s(x), s(y)))),
            );
            r.expect(
                "★5",
                p.clone(),
                both_pos.min(d(iff(s(x), s(y)))) <= d(iff(x, y)),
            );
            r.expect("IG3", p.clone(), d(imp(x, y)) == d(imp(inv(y), inv(x))));
            r.expect("IG5", p.clone(), d(x.max(y)) <= d(x).max(d(y)));
            r.expect("IG6", p, d(imp(x, y)) <= imp(d(x), d(y)));
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Chain;
    use crate::subalgebra::all_subalgebras;

    #[test]
    fn json() {
        let c: AbstractIGChain =
            serde_json::from_str(r#"{"size":6,"star":[0,0,0,1,2,5]}"#).unwrap();
        assert_eq!(c.table(), &[0, 0, 0, 1, 2, 5]);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"size":6,"star":[0,0,0,1,2,5]}"#
        );
        assert!(
            serde_json::from_str::<AbstractIGChain>(r#"{"size":5,"star":[0,0,0,1,2,5]}"#).is_err()
        );
        assert!(serde_json::from_str::<AbstractIGChain>(r#"{"size":3,"star":[0,0,3]}"#).is_err());
    }

    #[test]
    fn examples_validate() {
        assert!(validate_igstar(&AbstractIGChain::new(vec![0, 0, 0, 1, 2, 5]).unwrap()).ok());
        assert!(validate_igstar(&AbstractIGChain::new(vec![0, 0, 2]).unwrap()).ok());
    }

    #[test]
    fn subalgebras_validate() {
        for n in 1..=12 {
            for b in all_subalgebras(&Chain::new(n).unwrap()).unwrap() {
                let r = validate_igstar(&AbstractIGChain::from_star_chain(&b));
                assert!(r.ok(), "n={n} {:?}: {:?}", b.numerators(), r.failures);
            }
        }
    }

    #[test]
    fn fixed_interior_point_breaks_star1() {
        let c = AbstractIGChain::new(vec![0, 0, 0, 1, 4, 5]).unwrap();
        let r = validate_igstar(&c);
        assert!(r
            .failures
            .iter()
            .any(|f| f.item == "★1" && f.params == "x=4"));
        assert!(matches!(c.require_valid(), Err(Error::NotValidated(_))));
    }
}
