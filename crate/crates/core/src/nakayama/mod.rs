//! Combinatorial model of the module categories of the Nakayama algebras
//! `Gamma(n, t) = kA_n / R^t` (linear) and `Lambda(n, t) = kC_n / R^t` (cyclic).
//!
//! Every indecomposable module is uniserial and determined by its top vertex
//! and its Loewy length, `M = P_top / rad^len(P_top)`. All module-theoretic
//! data used by the rest of the crate (tau, syzygies, Hom and Ext dimensions,
//! tau-rigidity, Bongartz completions) is computed from these two numbers.
//! The [`oracle`] submodule recomputes Hom dimensions from explicit quiver
//! representations, independently of the formulas here.

mod lattice;
pub mod oracle;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use lattice::{lattice_l, lattice_linv, LatticePoint};
pub use oracle::hom_dim_oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Quotient of the linearly oriented `A_n` path algebra.
    #[serde(rename = "gamma")]
    LinearGamma,
    /// Quotient of the cyclically oriented `C_n` path algebra.
    #[serde(rename = "lambda")]
    CyclicLambda,
}

/// Names a Nakayama algebra by family, rank `n` and nilpotency index `t`.
///
/// `Gamma(n, n)` is the hereditary algebra of type `A_n`, `Gamma(n, 1)` is
/// semisimple and `Gamma(0, _)` is the zero algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraId {
    pub family: Family,
    pub n: usize,
    pub t: usize,
}

impl AlgebraId {
    pub const fn gamma(n: usize, t: usize) -> Self {
        Self {
            family: Family::LinearGamma,
            n,
            t,
        }
    }

    pub const fn lambda(n: usize, t: usize) -> Self {
        Self {
            family: Family::CyclicLambda,
            n,
            t,
        }
    }

    /// Hereditary `A_m`, encoded as `Gamma(m, m)`.
    pub const fn hereditary(m: usize) -> Self {
        Self::gamma(m, m)
    }

    pub fn is_linear(&self) -> bool {
        self.family == Family::LinearGamma
    }

    pub fn is_cyclic(&self) -> bool {
        self.family == Family::CyclicLambda
    }

    /// Number of simple modules.
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn validate(&self) -> Result<()> {
        let reason = match self.family {
            Family::LinearGamma if self.n == 0 => None,
            Family::LinearGamma if self.t == 0 => Some("nilpotency index must be at least 1"),
            Family::LinearGamma if self.t > self.n => {
                Some("nilpotency index of a linear algebra cannot exceed its rank")
            }
            Family::LinearGamma => None,
            Family::CyclicLambda if self.n == 0 => Some("cyclic algebras need at least one vertex"),
            Family::CyclicLambda if self.t == 0 => Some("nilpotency index must be at least 1"),
            Family::CyclicLambda => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidAlgebra {
                algebra: *self,
                reason,
            }),
            None => Ok(()),
        }
    }

    /// Canonical name for the same module category: relations that are
    /// vacuous on a linear quiver are dropped (`Gamma(m, t >= m)` becomes
    /// `Gamma(m, m)`), and `Lambda(1, 1)` is the field, i.e. `Gamma(1, 1)`.
    pub fn canonical(&self) -> Self {
        match self.family {
            Family::LinearGamma if self.n == 0 => Self::gamma(0, 0),
            Family::LinearGamma if self.t >= self.n => Self::hereditary(self.n),
            Family::CyclicLambda if self.n == 1 && self.t == 1 => Self::hereditary(1),
            _ => *self,
        }
    }

    pub fn is_hereditary(&self) -> bool {
        self.is_linear() && self.n >= 1 && self.t >= self.n
    }

    pub fn is_semisimple(&self) -> bool {
        self.n >= 1 && (self.t == 1 || (self.is_linear() && self.n == 1))
    }

    /// Residue of `x` in `1..=n`.
    pub fn res(&self, x: i64) -> usize {
        let n = self.n as i64;
        ((x - 1).rem_euclid(n) + 1) as usize
    }

    /// Loewy length of the indecomposable projective at `top`.
    pub fn proj_len(&self, top: usize) -> usize {
        match self.family {
            Family::LinearGamma => self.t.min(self.n + 1 - top),
            Family::CyclicLambda => self.t,
        }
    }

    /// Vertex reached from `v` along its outgoing arrow, if there is one.
    pub fn successor(&self, v: usize) -> Option<usize> {
        match self.family {
            Family::LinearGamma => (v < self.n).then_some(v + 1),
            Family::CyclicLambda => Some(self.res(v as i64 + 1)),
        }
    }

    pub fn contains(&self, m: &Indecomposable) -> bool {
        (1..=self.n).contains(&m.top) && m.len >= 1 && m.len <= self.proj_len(m.top)
    }

    pub fn check_module(&self, m: &Indecomposable) -> Result<()> {
        self.validate()?;
        if self.contains(m) {
            Ok(())
        } else {
            Err(Error::InvalidModule {
                algebra: *self,
                module: *m,
            })
        }
    }

    pub fn projective(&self, top: usize) -> Indecomposable {
        Indecomposable::new(top, self.proj_len(top))
    }

    pub fn projectives(&self) -> Vec<Indecomposable> {
        (1..=self.n).map(|i| self.projective(i)).collect()
    }

    pub fn is_projective(&self, m: &Indecomposable) -> bool {
        m.len == self.proj_len(m.top)
    }

    /// `rad^s(M)` for `0 <= s < l(M)`.
    pub fn radical_power(&self, m: &Indecomposable, s: usize) -> Option<Indecomposable> {
        (s < m.len).then(|| Indecomposable::new(self.res((m.top + s) as i64), m.len - s))
    }

    /// Composition factors of `M` from top to socle.
    pub fn composition_factors(&self, m: &Indecomposable) -> Vec<usize> {
        (0..m.len).map(|s| self.res((m.top + s) as i64)).collect()
    }

    /// Composition series written top-down, e.g. `1/2` for `P_1` of `Gamma(3, 2)`.
    pub fn label(&self, m: &Indecomposable) -> String {
        let factors: Vec<String> = self
            .composition_factors(m)
            .iter()
            .map(ToString::to_string)
            .collect();
        factors.join("/")
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::LinearGamma => write!(f, "Gamma({},{})", self.n, self.t),
            Family::CyclicLambda => write!(f, "Lambda({},{})", self.n, self.t),
        }
    }
}

/// Indecomposable module `P_top / rad^len(P_top)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Indecomposable {
    pub top: usize,
    pub len: usize,
}

impl Indecomposable {
    pub const fn new(top: usize, len: usize) -> Self {
        Self { top, len }
    }

    pub const fn simple(top: usize) -> Self {
        Self { top, len: 1 }
    }
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.top, self.len)
    }
}

/// All indecomposables of `a`, sorted by `(top, len)`.
pub fn indecomposables(a: &AlgebraId) -> Vec<Indecomposable> {
    (1..=a.n)
        .flat_map(|top| (1..=a.proj_len(top)).map(move |len| Indecomposable::new(top, len)))
        .collect()
}

/// Auslander-Reiten translate; `None` for projectives.
pub fn tau(a: &AlgebraId, m: &Indecomposable) -> Option<Indecomposable> {
    if a.is_projective(m) {
        return None;
    }
    // a non-projective over Gamma never has top n, so the successor exists
    a.successor(m.top).map(|top| Indecomposable::new(top, m.len))
}

/// Vertex of the (simple) socle of `M`.
pub fn isoc(a: &AlgebraId, m: &Indecomposable) -> usize {
    a.res((m.top + m.len) as i64 - 1)
}

/// Kernel of the projective cover `P_top -> M`.
pub fn syzygy(a: &AlgebraId, m: &Indecomposable) -> Option<Indecomposable> {
    if a.is_projective(m) {
        return None;
    }
    Some(Indecomposable::new(
        a.res((m.top + m.len) as i64),
        a.proj_len(m.top) - m.len,
    ))
}

/// Membership in the vertex interval `[from, to]`. Cyclic algebras walk
/// forward from `res(from)` until `res(to)`; linear intervals never wrap and
/// are empty when `to < from`.
fn in_interval(a: &AlgebraId, v: usize, from: i64, to: i64) -> bool {
    match a.family {
        Family::LinearGamma => from <= v as i64 && v as i64 <= to,
        Family::CyclicLambda => {
            let end = a.res(to);
            let mut cur = a.res(from);
            for _ in 0..a.n {
                if cur == v {
                    return true;
                }
                if cur == end {
                    return false;
                }
                cur = a.res(cur as i64 + 1);
            }
            false
        }
    }
}

/// Interval criterion for `Hom(M, N) != 0` between uniserial modules:
/// with `M = P_j / rad^l` and `N = P_i / rad^k`, a nonzero map exists iff
/// `j in [i, i+k-1]` and `(i+k-1) in [j, j+l-1]`.
pub fn hom_nonzero(a: &AlgebraId, m: &Indecomposable, n: &Indecomposable) -> bool {
    // A module longer than the cycle wraps around it, and the interval
    // test only sees one occurrence of each vertex.
    if a.is_cyclic() && m.len.max(n.len) > a.n {
        return hom_dim(a, m, n) > 0;
    }
    let (j, l) = (m.top as i64, m.len as i64);
    let (i, k) = (n.top as i64, n.len as i64);
    let socle = match a.family {
        Family::LinearGamma => i + k - 1,
        Family::CyclicLambda => a.res(i + k - 1) as i64,
    };
    in_interval(a, m.top, i, i + k - 1) && in_interval(a, socle as usize, j, j + l - 1)
}

/// `dim Hom(M, N)`. A map `M -> N` is determined up to scalars by its image,
/// which is both a quotient `M / rad^a(M)` and the submodule `rad^(k-a)(N)`;
/// these agree exactly when the top of `rad^(k-a)(N)` is the top of `M`.
pub fn hom_dim(a: &AlgebraId, m: &Indecomposable, n: &Indecomposable) -> usize {
    (1..=m.len.min(n.len))
        .filter(|&len| a.res((n.top + n.len - len) as i64) == m.top)
        .count()
}

/// `dim Ext^1(M, N)` from `0 -> ΩM -> P -> M -> 0`:
/// `dim Hom(ΩM, N) - dim Hom(P, N) + dim Hom(M, N)`.
pub fn ext1_dim(a: &AlgebraId, m: &Indecomposable, n: &Indecomposable) -> usize {
    match syzygy(a, m) {
        None => 0,
        Some(omega) => {
            let cover = a.projective(m.top);
            hom_dim(a, &omega, n) + hom_dim(a, m, n) - hom_dim(a, &cover, n)
        }
    }
}

pub fn is_tau_rigid(a: &AlgebraId, m: &Indecomposable) -> bool {
    match tau(a, m) {
        None => true,
        Some(tm) => !hom_nonzero(a, m, &tm),
    }
}

/// Indecomposables of the torsion class `⊥(τM) = {X : Hom(X, τM) = 0}`.
pub fn left_perp_of_tau(a: &AlgebraId, m: &Indecomposable) -> Vec<Indecomposable> {
    let tm = tau(a, m);
    indecomposables(a)
        .into_iter()
        .filter(|x| tm.is_none_or(|tm| !hom_nonzero(a, x, &tm)))
        .collect()
}

/// Bongartz completion `P(⊥(τM))`: the Ext-projective indecomposables of
/// `⊥(τM)`, found by brute force over all pairs.
pub fn bongartz(a: &AlgebraId, m: &Indecomposable) -> Result<Vec<Indecomposable>> {
    a.check_module(m)?;
    if !is_tau_rigid(a, m) {
        return Err(Error::NotTauRigid {
            algebra: *a,
            module: *m,
        });
    }
    let torsion = left_perp_of_tau(a, m);
    Ok(torsion
        .iter()
        .filter(|x| torsion.iter().all(|y| ext1_dim(a, x, y) == 0))
        .copied()
        .collect())
}
