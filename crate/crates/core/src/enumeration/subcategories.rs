//! Counting by recursion over explicit wide subcategories of `mod A`,
//! without the closed-form reductions.
//!
//! A wide subcategory `W` is stored as a set of indecomposable `A`-modules.
//! Inside `W`, with `Fac_W(X)` the quotients of `X` lying in `W`:
//!
//! - `M` is tau-rigid in `W` iff `Ext^1(M, Fac_W M) = 0`;
//! - `Hom_W(X, τ_W M) = 0` iff `Ext^1(M, Fac_W X) = 0`,
//!
//! so `J_W(M) = {X in W : Hom(M, X) = 0, Ext^1(M, Fac_W X) = 0}` needs only
//! Hom and Ext over `A`. Over a Nakayama algebra every indecomposable is
//! uniserial, and `Y` is a quotient of `X` iff they share a top and
//! `l(Y) <= l(X)`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::nakayama::{ext1_dim, hom_nonzero, indecomposables, AlgebraId, Indecomposable};

type Mask = u128;

const MAX_MODULES: usize = Mask::BITS as usize;

/// Recursive counter over subcategories of one algebra.
pub struct SubcategoryCounter {
    modules: Vec<Indecomposable>,
    hom: Vec<Mask>,
    ext: Vec<Mask>,
    quotients: Vec<Mask>,
    memo: HashMap<Mask, BigUint>,
}

fn mask_of(bits: impl Iterator<Item = usize>) -> Mask {
    bits.fold(0, |acc, b| acc | (1 << b))
}

fn members(w: Mask) -> impl Iterator<Item = usize> {
    (0..MAX_MODULES).filter(move |&b| w & (1 << b) != 0)
}

impl SubcategoryCounter {
    pub fn new(a: &AlgebraId) -> Result<Self> {
        a.validate()?;
        let modules = indecomposables(a);
        if modules.len() > MAX_MODULES {
            return Err(Error::InvalidAlgebra {
                algebra: *a,
                reason: "too many indecomposables for subcategory recursion",
            });
        }
        let range = 0..modules.len();
        let hom = modules
            .iter()
            .map(|m| mask_of(range.clone().filter(|&y| hom_nonzero(a, m, &modules[y]))))
            .collect();
        let ext = modules
            .iter()
            .map(|m| mask_of(range.clone().filter(|&y| ext1_dim(a, m, &modules[y]) > 0)))
            .collect();
        let quotients = modules
            .iter()
            .map(|x| {
                mask_of(range.clone().filter(|&y| {
                    modules[y].top == x.top && modules[y].len <= x.len
                }))
            })
            .collect();
        Ok(Self {
            modules,
            hom,
            ext,
            quotients,
            memo: HashMap::new(),
        })
    }

    pub fn whole(&self) -> Mask {
        mask_of(0..self.modules.len())
    }

    pub fn modules_of(&self, w: Mask) -> Vec<Indecomposable> {
        members(w).map(|b| self.modules[b]).collect()
    }

    pub fn is_rigid_in(&self, w: Mask, m: usize) -> bool {
        self.ext[m] & self.quotients[m] & w == 0
    }

    pub fn perpendicular_in(&self, w: Mask, m: usize) -> Mask {
        let mut out = 0;
        for x in members(w & !self.hom[m]) {
            if self.ext[m] & self.quotients[x] & w == 0 {
                out |= 1 << x;
            }
        }
        out
    }

    /// Number of complete tau-exceptional sequences in `W`.
    pub fn count(&mut self, w: Mask) -> BigUint {
        if w == 0 {
            return BigUint::one();
        }
        if let Some(v) = self.memo.get(&w) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for m in members(w) {
            if self.is_rigid_in(w, m) {
                let j = self.perpendicular_in(w, m);
                total += self.count(j);
            }
        }
        self.memo.insert(w, total.clone());
        total
    }
}

/// Count of complete tau-exceptional sequences in `mod A`, by recursion
/// over wide subcategories. Works for every valid algebra with at most 128
/// indecomposables; exponential in general.
pub fn count_by_subcategories(a: &AlgebraId) -> Result<BigUint> {
    let mut c = SubcategoryCounter::new(a)?;
    let w = c.whole();
    Ok(c.count(w))
}
