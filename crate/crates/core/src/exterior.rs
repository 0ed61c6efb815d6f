//! Exterior algebra on up to eight basis vectors, with basis monomials
//! encoded as bitmasks. Coefficients are any commutative ring-like type;
//! the quartic invariant uses multivariate polynomials here.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg};

use num::Zero;

/// Number of set bits of `mask` strictly below bit `bit`.
fn bits_below(mask: u8, bit: u8) -> u32 {
    (mask & ((1u8 << bit) - 1)).count_ones()
}

/// Koszul sign of merging disjoint masks `a` and `b` into `a | b`.
fn merge_sign(a: u8, b: u8) -> i8 {
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let bit = rest.trailing_zeros() as u8;
        // elements of `a` above this element of `b` must jump over it
        inversions += (a >> (bit + 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Element of the exterior algebra: map from basis mask to coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiVector<C> {
    terms: BTreeMap<u8, C>,
}

impl<C> MultiVector<C>
where
    C: Clone + Zero + Add<Output = C> + Mul<Output = C> + Neg<Output = C> + PartialEq,
{
    pub fn zero() -> Self {
        MultiVector {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(mask: u8, coeff: C) -> Self {
        let mut mv = MultiVector::zero();
        mv.add_term(mask, coeff);
        mv
    }

    pub fn add_term(&mut self, mask: u8, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(C::zero);
        *entry = entry.clone() + coeff;
        if self.terms[&mask].is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u8, &C)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn coefficient(&self, mask: u8) -> C {
        self.terms.get(&mask).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn wedge(&self, other: &MultiVector<C>) -> MultiVector<C> {
        let mut out = MultiVector::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let c = ca.clone() * cb.clone();
                if merge_sign(*a, *b) > 0 {
                    out.add_term(a | b, c);
                } else {
                    out.add_term(a | b, -c);
                }
            }
        }
        out
    }

    /// Contraction against the basis vector with index `v` (0-based).
    pub fn contract(&self, v: u8) -> MultiVector<C> {
        let mut out = MultiVector::zero();
        let bit = 1u8 << v;
        for (mask, c) in &self.terms {
            if mask & bit == 0 {
                continue;
            }
            if bits_below(*mask, v) % 2 == 0 {
                out.add_term(mask & !bit, c.clone());
            } else {
                out.add_term(mask & !bit, -c.clone());
            }
        }
        out
    }
}
