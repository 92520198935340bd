//! Lattice coordinates on the AR quiver of `Lambda(n, t)`: the module with
//! socle `isoc` and length `l` sits at `(n - isoc, l - 1)`, i.e. at
//! `(n - isoc) f1 + (l - 1) f2` with `f1 = (2, 0)` and `f2 = (1, 1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{isoc, AlgebraId, Indecomposable};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub a: i64,
    pub b: usize,
}

impl LatticePoint {
    pub const fn new(a: i64, b: usize) -> Self {
        Self { a, b }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

pub fn lattice_l(alg: &AlgebraId, m: &Indecomposable) -> Result<LatticePoint> {
    if !alg.is_cyclic() {
        return Err(Error::NotCyclic(*alg));
    }
    alg.check_module(m)?;
    Ok(LatticePoint::new(
        (alg.n - isoc(alg, m)) as i64,
        m.len - 1,
    ))
}

/// Inverse of [`lattice_l`], extended periodically in the horizontal
/// coordinate.
pub fn lattice_linv(alg: &AlgebraId, p: &LatticePoint) -> Result<Indecomposable> {
    if !alg.is_cyclic() {
        return Err(Error::NotCyclic(*alg));
    }
    alg.validate()?;
    if p.b >= alg.t {
        return Err(Error::LatticeOutOfRange {
            algebra: *alg,
            point: *p,
        });
    }
    let n = alg.n as i64;
    let socle = n - p.a.rem_euclid(n);
    let len = p.b + 1;
    Ok(Indecomposable::new(alg.res(socle - len as i64 + 1), len))
}
