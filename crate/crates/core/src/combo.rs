//! Finite linear combinations of basis labels.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;

use crate::field::Field;

/// A finite sum `Σ c_g · g` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Combo<G: Ord, F> {
    terms: BTreeMap<G, F>,
}

impl<G: Ord, F> Default for Combo<G, F> {
    fn default() -> Self {
        Combo {
            terms: BTreeMap::new(),
        }
    }
}

impl<G: Ord + Clone, F: Field> Combo<G, F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(g: G) -> Self {
        Self::term(g, F::one())
    }

    pub fn term(g: G, c: F) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &G) -> F {
        self.terms.get(g).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, g: G, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        if c.is_zero() {
            return;
        }
        for (g, x) in &other.terms {
            self.add_term(g.clone(), x.clone() * c.clone());
        }
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&G, &F)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &G> {
        self.terms.keys()
    }

    /// Relabels every term; colliding labels are summed.
    pub fn map_labels<H: Ord + Clone>(&self, mut f: impl FnMut(&G) -> H) -> Combo<H, F> {
        let mut out = Combo::zero();
        for (g, c) in &self.terms {
            out.add_term(f(g), c.clone());
        }
        out
    }
}

impl<G: Ord + Clone, F: Field> FromIterator<(G, F)> for Combo<G, F> {
    fn from_iter<I: IntoIterator<Item = (G, F)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (g, c) in iter {
            out.add_term(g, c);
        }
        out
    }
}

impl<G: Ord + fmt::Debug, F: fmt::Debug> fmt::Debug for Combo<G, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (g, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{:?}·{:?}", c, g)?;
        }
        Ok(())
    }
}

/// Expands a product of combinations into basis tuples with their
/// coefficient products. The empty product yields one empty tuple.
pub fn expand_product<G: Ord + Clone, F: Field>(factors: &[&Combo<G, F>]) -> Vec<(Vec<G>, F)> {
    let mut acc: Vec<(Vec<G>, F)> = alloc::vec![(Vec::new(), F::one())];
    for factor in factors {
        if factor.is_zero() {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(acc.len() * factor.len());
        for (tuple, c) in &acc {
            for (g, x) in factor.iter() {
                let mut t = tuple.clone();
                t.push(g.clone());
                next.push((t, c.clone() * x.clone()));
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn cancellation_removes_terms() {
        let mut c: Combo<u8, Rational> = Combo::basis(1);
        c.add_term(1, -Rational::one());
        assert!(c.is_zero());
    }

    #[test]
    fn product_expansion_counts() {
        let a: Combo<u8, Rational> = [(1, Rational::one()), (2, Rational::from_i64(2))]
            .into_iter()
            .collect();
        let b: Combo<u8, Rational> = Combo::term(3, Rational::from_i64(5));
        let e = expand_product(&[&a, &b]);
        assert_eq!(e.len(), 2);
        assert_eq!(e[1], (alloc::vec![2, 3], Rational::from_i64(10)));
        assert!(expand_product(&[&a, &Combo::zero()]).is_empty());
    }
}
