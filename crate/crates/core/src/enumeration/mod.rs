//! Counting complete tau-exceptional sequences.
//!
//! A complete sequence `(M_1, ..., M_n)` in `mod A` is a tau-rigid `M_n`
//! followed by a complete sequence in `J(M_n)`. When `J(M_n)` splits as a
//! direct sum, sequences in the sum are exactly the shuffles of sequences
//! in the summands, so
//!
//! ```text
//! count(A)       = Σ_{M tau-rigid} count_shape(J(M))
//! count_shape(S) = multinomial(ranks of S) · Π count(component)
//! ```
//!
//! [`count_shape_naive`] and [`enumerate_chains`] instead treat a shape as a
//! single category and never use the shuffle factorisation.

mod chains;
pub mod recurrence;
pub mod subcategories;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nakayama::{indecomposables, is_tau_rigid, AlgebraId};
use crate::perpendicular::{default_rule, j_category, j_category_with, CategoryShape, Rule};

pub use chains::{enumerate_chains, ChainIter, ChainStep, ChoiceChain};

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `(Σ sizes)! / Π sizes_i!`
pub fn multinomial(sizes: &[usize]) -> BigUint {
    // product of binomials C(s_1 + ... + s_k, s_k) keeps intermediates small
    let mut total = 0usize;
    let mut out = BigUint::one();
    for &s in sizes {
        total += s;
        out *= binomial(total, s);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut out = BigUint::one();
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Count for the leaves of the recursion: `(m + 1)^(m - 1)` for hereditary
/// `A_m = Gamma(m, m)`, `m!` for semisimple `Gamma(m, 1)`, and `1` for the
/// zero algebra.
pub fn leaf_count(a: &AlgebraId) -> Result<BigUint> {
    let a = a.canonical();
    let m = a.n;
    if m == 0 {
        return Ok(BigUint::one());
    }
    if a.is_hereditary() {
        return Ok(if m == 1 {
            BigUint::one()
        } else {
            BigUint::from(m + 1).pow(m as u32 - 1)
        });
    }
    if a.is_linear() && a.t == 1 {
        return Ok(factorial(m));
    }
    Err(Error::UnsupportedFamily {
        algebra: a,
        module: None,
    })
}

/// Memoised structural counter. The memo table is keyed by canonical
/// [`AlgebraId`] and filled idempotently, so a shared counter can be used
/// from several threads at once.
#[derive(Debug)]
pub struct Counter {
    memo: Option<RwLock<HashMap<AlgebraId, BigUint>>>,
}

impl Default for Counter {
    fn default() -> Self {
        Self::new()
    }
}

impl Counter {
    pub fn new() -> Self {
        Self {
            memo: Some(RwLock::new(HashMap::new())),
        }
    }

    pub fn without_memo() -> Self {
        Self { memo: None }
    }

    pub fn count_algebra(&self, a: &AlgebraId) -> Result<BigUint> {
        a.validate()?;
        let a = a.canonical();
        if let Some(memo) = &self.memo {
            if let Some(v) = memo.read().expect("memo lock poisoned").get(&a) {
                return Ok(v.clone());
            }
        }
        let value = self.compute(&a)?;
        if let Some(memo) = &self.memo {
            memo.write()
                .expect("memo lock poisoned")
                .entry(a)
                .or_insert_with(|| value.clone());
        }
        Ok(value)
    }

    fn compute(&self, a: &AlgebraId) -> Result<BigUint> {
        if a.n == 0 {
            return Ok(BigUint::one());
        }
        match default_rule(a) {
            Some(rule) if rule.is_leaf() => leaf_count(a),
            Some(rule) => self.sum_over_last_terms(rule, a),
            None => Err(Error::UnsupportedFamily {
                algebra: *a,
                module: None,
            }),
        }
    }

    /// Count with the top-level reduction forced to `rule`; the resulting
    /// components are counted as usual.
    pub fn count_algebra_with(&self, rule: Rule, a: &AlgebraId) -> Result<BigUint> {
        a.validate()?;
        if !rule.applies_to(a) {
            return Err(Error::UnsupportedFamily {
                algebra: *a,
                module: None,
            });
        }
        if rule.is_leaf() {
            return leaf_count(a);
        }
        self.sum_over_last_terms(rule, a)
    }

    fn sum_over_last_terms(&self, rule: Rule, a: &AlgebraId) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for m in indecomposables(a) {
            if is_tau_rigid(a, &m) {
                total += self.count_shape(&j_category_with(rule, a, &m)?)?;
            }
        }
        Ok(total)
    }

    pub fn count_shape(&self, s: &CategoryShape) -> Result<BigUint> {
        let sizes: Vec<usize> = s.components().iter().map(|c| c.n).collect();
        let mut out = multinomial(&sizes);
        for c in s.components() {
            out *= self.count_algebra(c)?;
        }
        Ok(out)
    }
}

fn shared_counter() -> &'static Counter {
    static COUNTER: OnceLock<Counter> = OnceLock::new();
    COUNTER.get_or_init(Counter::new)
}

/// Number of complete tau-exceptional sequences in `mod A`.
pub fn count_algebra(a: &AlgebraId) -> Result<BigUint> {
    shared_counter().count_algebra(a)
}

pub fn count_shape(s: &CategoryShape) -> Result<BigUint> {
    shared_counter().count_shape(s)
}

/// Definitional count over a shape viewed as one category: sum over every
/// component and every tau-rigid indecomposable of it, recursing into the
/// shape with that component replaced by its `J`. Exponential time.
pub fn count_shape_naive(s: &CategoryShape) -> Result<BigUint> {
    if s.rank() == 0 {
        return Ok(BigUint::one());
    }
    let mut total = BigUint::zero();
    for (idx, c) in s.components().iter().enumerate() {
        for m in indecomposables(c) {
            if is_tau_rigid(c, &m) {
                total += count_shape_naive(&s.replace(idx, &j_category(c, &m)?))?;
            }
        }
    }
    Ok(total)
}

/// The four counting families, plus their sequence names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CountingFamily {
    /// `G_n`: `Gamma(n, 2)`.
    G,
    /// `L_n`: `Lambda(n, 2)`.
    L,
    /// `H_n`: `Lambda(n, n)`.
    H,
    /// `K_n`: `Gamma(n, n - 1)`, with `K_1 = 1` and `K_2 = 2` read as
    /// `Gamma(1, 1)` and the semisimple `Gamma(2, 1)`.
    K,
}

impl CountingFamily {
    /// Algebra whose count is the `n`-th term, or `None` where the family
    /// has no member (`L_0`, `H_0`, `K_0`).
    pub fn algebra(self, n: usize) -> Option<AlgebraId> {
        match self {
            CountingFamily::G => Some(AlgebraId::gamma(n, 2).canonical()),
            CountingFamily::L if n >= 1 => Some(AlgebraId::lambda(n, 2)),
            CountingFamily::H if n >= 1 => Some(AlgebraId::lambda(n, n).canonical()),
            CountingFamily::K if n >= 1 => Some(AlgebraId::gamma(n, (n - 1).max(1)).canonical()),
            _ => None,
        }
    }

    pub fn count(self, n: usize) -> Result<Option<BigUint>> {
        self.algebra(n).map(|a| count_algebra(&a)).transpose()
    }
}

/// `[count(family at n)]` for `n = 1..=n_max`.
pub fn sequence_table(family: CountingFamily, n_max: usize) -> Result<Vec<BigUint>> {
    (1..=n_max)
        .map(|n| {
            let a = family.algebra(n).expect("every family has a member for n >= 1");
            count_algebra(&a)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn leaf_counts() {
        assert_eq!(leaf_count(&AlgebraId::gamma(3, 3)).unwrap(), big(16));
        assert_eq!(leaf_count(&AlgebraId::gamma(0, 0)).unwrap(), big(1));
        assert_eq!(leaf_count(&AlgebraId::gamma(1, 1)).unwrap(), big(1));
        assert_eq!(leaf_count(&AlgebraId::gamma(2, 1)).unwrap(), big(2));
        assert_eq!(leaf_count(&AlgebraId::gamma(4, 1)).unwrap(), big(24));
        assert!(leaf_count(&AlgebraId::gamma(4, 2)).is_err());
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[2, 1]), big(3));
        assert_eq!(multinomial(&[1, 1, 1]), big(6));
        assert_eq!(multinomial(&[]), big(1));
        for n in 1..=12 {
            for i in 1..=n {
                assert_eq!(multinomial(&[n - i, i - 1]), binomial(n - 1, i - 1));
            }
        }
    }

    #[test]
    fn algebra_counts() {
        assert_eq!(count_algebra(&AlgebraId::gamma(3, 2)).unwrap(), big(12));
        assert_eq!(count_algebra(&AlgebraId::lambda(3, 3)).unwrap(), big(27));
        assert_eq!(count_algebra(&AlgebraId::gamma(4, 3)).unwrap(), big(98));
        assert_eq!(count_algebra(&AlgebraId::gamma(0, 2)).unwrap(), big(1));
        assert_eq!(count_algebra(&AlgebraId::lambda(1, 2)).unwrap(), big(1));
        assert!(matches!(
            count_algebra(&AlgebraId::lambda(5, 3)),
            Err(Error::UnsupportedFamily { .. })
        ));
    }

    #[test]
    fn shape_counts() {
        let s = CategoryShape::new([AlgebraId::gamma(1, 1), AlgebraId::gamma(2, 2)]);
        assert_eq!(count_shape(&s).unwrap(), big(9));
        assert_eq!(count_shape_naive(&s).unwrap(), big(9));
        assert_eq!(count_shape(&CategoryShape::empty()).unwrap(), big(1));
        assert_eq!(count_shape_naive(&CategoryShape::empty()).unwrap(), big(1));
        let s = CategoryShape::new([AlgebraId::gamma(2, 2), AlgebraId::gamma(2, 2)]);
        assert_eq!(count_shape(&s).unwrap(), big(54));
        assert_eq!(count_shape_naive(&s).unwrap(), big(54));
        let s = CategoryShape::single(AlgebraId::gamma(3, 2));
        assert_eq!(count_shape_naive(&s).unwrap(), big(12));
    }

    #[test]
    fn rule_overlaps_agree() {
        let c = Counter::new();
        let g32 = AlgebraId::gamma(3, 2);
        assert_eq!(c.count_algebra_with(Rule::Gamma2, &g32).unwrap(), big(12));
        assert_eq!(c.count_algebra_with(Rule::GammaNm1, &g32).unwrap(), big(12));
        let l22 = AlgebraId::lambda(2, 2);
        assert_eq!(c.count_algebra_with(Rule::Lambda2, &l22).unwrap(), big(4));
        assert_eq!(c.count_algebra_with(Rule::LambdaN, &l22).unwrap(), big(4));
    }

    #[test]
    fn memoised_and_plain_counters_agree() {
        let memo = Counter::new();
        let plain = Counter::without_memo();
        for n in 1..=7 {
            for a in [
                AlgebraId::gamma(n, 2.min(n)),
                AlgebraId::lambda(n, 2),
                AlgebraId::lambda(n, n),
            ] {
                assert_eq!(memo.count_algebra(&a).unwrap(), plain.count_algebra(&a).unwrap());
            }
        }
    }

    #[test]
    fn tables() {
        let g: Vec<u64> = vec![1, 3, 12, 66, 450, 3690, 35280, 385560, 4740120];
        assert_eq!(
            sequence_table(CountingFamily::G, 9).unwrap(),
            g.into_iter().map(big).collect::<Vec<_>>()
        );
        assert_eq!(
            sequence_table(CountingFamily::H, 5).unwrap(),
            [1u64, 4, 27, 256, 3125].map(big).to_vec()
        );
        assert_eq!(
            sequence_table(CountingFamily::K, 4).unwrap(),
            [1u64, 2, 12, 98].map(big).to_vec()
        );
    }
}
