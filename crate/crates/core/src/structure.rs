//! Finite chains with an order-reversing involution and a star operator.
//!
//! Elements are addressed by position `0..len()` in increasing order; the
//! involution is forced to be `x ↦ top - x`. The Gödel operations are
//! determined by the order.

use num_rational::Ratio;

#[allow(clippy::len_without_is_empty)]
pub trait StarChain {
    /// Number of elements.
    fn len(&self) -> usize;

    fn star(&self, x: usize) -> usize;

    /// Real value of position `x` when the chain sits inside [0,1].
    fn value(&self, _x: usize) -> Option<Ratio<i64>> {
        None
    }

    fn top(&self) -> usize {
        self.len() - 1
    }

    fn inv(&self, x: usize) -> usize {
        self.top() - x
    }

    fn plus(&self, x: usize) -> usize {
        self.inv(self.star(self.inv(x)))
    }

    fn is_positive(&self, x: usize) -> bool {
        x > self.inv(x)
    }

    fn is_boundary(&self, x: usize) -> bool {
        x == 0 || x == self.top()
    }

    fn goedel_imp(&self, x: usize, y: usize) -> usize {
        if x <= y {
            self.top()
        } else {
            y
        }
    }

    fn goedel_iff(&self, x: usize, y: usize) -> usize {
        self.goedel_imp(x, y).min(self.goedel_imp(y, x))
    }

    fn goedel_neg(&self, x: usize) -> usize {
        if x == 0 {
            self.top()
        } else {
            0
        }
    }

    /// `Δx = ¬_G ∼x`.
    fn delta(&self, x: usize) -> usize {
        self.goedel_neg(self.inv(x))
    }

    fn star_table(&self) -> Vec<usize> {
        (0..self.len()).map(|x| self.star(x)).collect()
    }
}

/// Two chains are isomorphic iff they have equal size and equal star tables,
/// since the only order isomorphism between finite chains is positional.
pub fn is_isomorphic(a: &impl StarChain, b: &impl StarChain) -> bool {
    a.len() == b.len() && a.star_table() == b.star_table()
}
