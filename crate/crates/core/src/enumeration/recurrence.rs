//! The four counting recurrences written out term by term, independent of
//! the structural recursion. Every `(m + 1)^(m - 1)` term (the count for
//! hereditary `A_m`) is evaluated through [`leaf_count`], so no `1^(-1)`
//! conventions are needed.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{binomial, leaf_count, multinomial};
use crate::nakayama::AlgebraId;

fn a(m: usize) -> BigUint {
    leaf_count(&AlgebraId::hereditary(m)).expect("hereditary leaves are always countable")
}

/// `G_0..=G_{n_max}` with `G_0 = G_1 = 1` and
/// `G_n = Σ_{i=1}^{n} C(n-1; n-i, i-1) G_{n-i} G_{i-1}
///      + Σ_{i=1}^{n-1} C(n-1; n-i-1, i-1, 1) G_{n-i-1} G_{i-1}`.
pub fn g_sequence(n_max: usize) -> Vec<BigUint> {
    let mut g = vec![BigUint::one(); 2.min(n_max + 1)];
    for n in 2..=n_max {
        let mut v = BigUint::zero();
        for i in 1..=n {
            v += multinomial(&[n - i, i - 1]) * &g[n - i] * &g[i - 1];
        }
        for i in 1..n {
            v += multinomial(&[n - i - 1, i - 1, 1]) * &g[n - i - 1] * &g[i - 1];
        }
        g.push(v);
    }
    g
}

/// `L_n = n G_{n-1} + n (n-1) G_{n-2}` for `n >= 1` (the second term is
/// absent at `n = 1`). `g` must hold `G_0..=G_{n-1}`.
pub fn l_from_g(n: usize, g: &[BigUint]) -> BigUint {
    assert!(n >= 1 && g.len() >= n, "need G_0..G_(n-1)");
    let mut v = BigUint::from(n) * &g[n - 1];
    if n >= 2 {
        v += BigUint::from(n * (n - 1)) * &g[n - 2];
    }
    v
}

/// `H_0..=H_{n_max}` with `H_0 = 1` and
/// `H_n = n Σ_{i=1}^{n} C(n-1, i-1) i^(i-2) H_{n-i}`.
pub fn h_sequence(n_max: usize) -> Vec<BigUint> {
    let mut h = vec![BigUint::one()];
    for n in 1..=n_max {
        let mut v = BigUint::zero();
        for i in 1..=n {
            v += binomial(n - 1, i - 1) * a(i - 1) * &h[n - i];
        }
        h.push(v * n);
    }
    h
}

/// `K_1..=K_{n_max}` (index 0 holds the EGF convention `K_0 = 0`), with
/// `K_1 = 1`, `K_2 = 2` and for `n >= 3`
///
/// ```text
/// K_n = Σ_{i=1}^{n}   C(n-1, i-1) (n-i+1)^(n-i-1) i^(i-2)
///     + Σ_{i=1}^{n-3} C(n-1, i-1) (n-i+1)^(n-i-1) i^(i-2)
///     + (n-1)(n-2)^(n-3)
///     + Σ_{i=1}^{n-2} C(n-1, i-1) (n-i-1) i^(i-2) K_{n-i}
/// ```
///
/// where the third term is `C(n-1; n-3, 1, 1) · |A_{n-3}|`. The second sum
/// counts each `rad^i(P_1)`, `2 <= i <= n-2`, as if `J` were
/// `A_{n-l} ⊕ A_{l-1}`; that reduction is wrong, so this sequence agrees
/// with the true count only up to `n = 3`. See [`k_sequence_corrected`].
pub fn k_sequence(n_max: usize) -> Vec<BigUint> {
    let mut k = vec![BigUint::zero(), BigUint::one(), BigUint::from(2u32)];
    k.truncate(n_max + 1);
    for n in 3..=n_max {
        let mut v = BigUint::zero();
        for i in 1..=n {
            v += binomial(n - 1, i - 1) * a(n - i) * a(i - 1);
        }
        for i in 1..=n - 3 {
            v += binomial(n - 1, i - 1) * a(n - i) * a(i - 1);
        }
        v += multinomial(&[n - 3, 1, 1]) * a(n - 3);
        for i in 1..=n - 2 {
            v += binomial(n - 1, i - 1) * BigUint::from(n - i - 1) * a(i - 1) * &k[n - i];
        }
        k.push(v);
    }
    k
}

/// `K_0..=K_{n_max}` (with `K_0 = 0`) from the reductions
/// `J(P_i) = A_{n-i} ⊕ A_{i-1}` and, for a non-projective `M` of length
/// `l`, `J(M) = A_{l-1} ⊕ Gamma(n-l, n-l-1)`. There are `n - l` such `M`
/// of each length `l <= n - 2`, which gives, for every `n >= 1`,
///
/// ```text
/// K_n = Σ_{i=1}^{n}   C(n-1, i-1) (n-i+1)^(n-i-1) i^(i-2)
///     + Σ_{i=1}^{n-2} C(n-1, i-1) (n-i) i^(i-2) K_{n-i}
/// ```
pub fn k_sequence_corrected(n_max: usize) -> Vec<BigUint> {
    let mut k = vec![BigUint::zero()];
    for n in 1..=n_max {
        let mut v = BigUint::zero();
        for i in 1..=n {
            v += binomial(n - 1, i - 1) * a(n - i) * a(i - 1);
        }
        for i in 1..=n.saturating_sub(2) {
            v += binomial(n - 1, i - 1) * BigUint::from(n - i) * a(i - 1) * &k[n - i];
        }
        k.push(v);
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn first_terms() {
        assert_eq!(
            nums(&g_sequence(9)),
            vec![1, 1, 3, 12, 66, 450, 3690, 35280, 385560, 4740120]
        );
        assert_eq!(nums(&h_sequence(5)), vec![1, 1, 4, 27, 256, 3125]);
        assert_eq!(nums(&k_sequence(4)), vec![0, 1, 2, 12, 102]);
        assert_eq!(
            nums(&k_sequence_corrected(8)),
            vec![0, 1, 2, 12, 98, 1040, 13682, 215488, 3959426]
        );
        let g = g_sequence(10);
        let l: Vec<u64> = (1..=10)
            .map(|n| (&l_from_g(n, &g)).try_into().unwrap())
            .collect();
        assert_eq!(
            l,
            vec![1, 4, 15, 84, 570, 4680, 44730, 488880, 6010200, 82101600]
        );
    }

    #[test]
    fn short_tables() {
        assert_eq!(g_sequence(0).len(), 1);
        assert_eq!(k_sequence(1).len(), 2);
        assert_eq!(k_sequence_corrected(0).len(), 1);
    }

    #[test]
    fn rad_p1_term_matches_closed_power() {
        // C(n-1; n-3, 1, 1) |A_{n-3}| = (n-1)(n-2)^(n-3)
        for n in 3..=12usize {
            let lhs = multinomial(&[n - 3, 1, 1]) * a(n - 3);
            let rhs = BigUint::from(n - 1) * BigUint::from(n - 2).pow(n as u32 - 3);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}
