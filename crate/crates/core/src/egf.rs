//! Truncated exponential generating functions with exact rational
//! coefficients, and coefficientwise checks of the generating-function
//! identities satisfied by the counting sequences.
//!
//! A series is stored by its ordinary coefficients `a_0..=a_N` of
//! `Σ a_k x^k`; the EGF of a sequence `s` has `a_k = s(k) / k!`. Lambert's
//! `W(-x)` only ever appears as the formal series `-T(x)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::enumeration::{count_algebra, factorial, CountingFamily};
use crate::error::{Error, Result};

/// `Σ_{k=0}^{N} a_k x^k` modulo `x^(N+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedEgf {
    coeffs: Vec<BigRational>,
}

fn rat(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn factorial_q(k: usize) -> BigRational {
    rat(BigInt::from(factorial(k)))
}

impl TruncatedEgf {
    /// Series from ordinary coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least a_0");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(vec![BigRational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigRational::one())
    }

    pub fn constant(order: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x` (just `0` at order 0).
    pub fn x(order: usize) -> Self {
        Self::one(order).shift_mul_x()
    }

    /// EGF of `s(0..=order)`: `a_k = s(k) / k!`.
    pub fn egf_of<I, T>(seq: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(
            seq.into_iter()
                .enumerate()
                .map(|(k, v)| rat(v) / factorial_q(k))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// `a_k · k!`, the `k`-th term of the underlying sequence.
    pub fn coefficient_times_factorial(&self, k: usize) -> BigRational {
        &self.coeffs[k] * factorial_q(k)
    }

    /// Drops terms above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the truncation order");
        Self::from_coeffs(self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x · f`, keeping the same truncation order.
    pub fn shift_mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(BigRational::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        Self::from_coeffs(coeffs)
    }

    /// `f'`, one order lower (order 0 stays at order 0 with value 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * rat(k as u64))
                .collect(),
        )
    }

    /// The `g` with `f · g = 1`.
    pub fn inverse(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        if f0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = f0.recip();
        let mut g: Vec<BigRational> = vec![inv0.clone()];
        for k in 1..=self.order() {
            let s = (1..=k).fold(BigRational::zero(), |acc, j| acc + &self.coeffs[j] * &g[k - j]);
            g.push(-s * &inv0);
        }
        Ok(Self::from_coeffs(g))
    }

    /// `exp(f)` for `f(0) = 0`, from `(exp f)' = f' · exp f`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let mut e: Vec<BigRational> = vec![BigRational::one()];
        for k in 1..=self.order() {
            let s = (1..=k).fold(BigRational::zero(), |acc, j| {
                acc + rat(j as u64) * &self.coeffs[j] * &e[k - j]
            });
            e.push(s / rat(k as u64));
        }
        Ok(Self::from_coeffs(e))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| &acc * self)
    }
}

impl Add for &TruncatedEgf {
    type Output = TruncatedEgf;
    fn add(self, o: Self) -> TruncatedEgf {
        let n = self.order().min(o.order());
        TruncatedEgf::from_coeffs((0..=n).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect())
    }
}

impl Sub for &TruncatedEgf {
    type Output = TruncatedEgf;
    fn sub(self, o: Self) -> TruncatedEgf {
        let n = self.order().min(o.order());
        TruncatedEgf::from_coeffs((0..=n).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect())
    }
}

impl Neg for &TruncatedEgf {
    type Output = TruncatedEgf;
    fn neg(self) -> TruncatedEgf {
        TruncatedEgf::from_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }
}

/// Cauchy product `c_k = Σ_{l=0}^{k} a_l b_{k-l}`.
impl Mul for &TruncatedEgf {
    type Output = TruncatedEgf;
    fn mul(self, o: Self) -> TruncatedEgf {
        let n = self.order().min(o.order());
        TruncatedEgf::from_coeffs(
            (0..=n)
                .map(|k| {
                    (0..=k).fold(BigRational::zero(), |acc, l| {
                        acc + &self.coeffs[l] * &o.coeffs[k - l]
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for TruncatedEgf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})x")?,
                _ => write!(f, "({a})x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// Euler's tree function `T(x) = Σ_{n>=1} n^(n-1) x^n / n! = -W(-x)`.
pub fn tree_series(order: usize) -> TruncatedEgf {
    TruncatedEgf::egf_of((0..=order).map(|n| {
        if n == 0 {
            BigUint::zero()
        } else {
            BigUint::from(n).pow(n as u32 - 1)
        }
    }))
}

/// `e^{-W(-x)} = e^{T(x)}`, with coefficients `(1 + b)^(b - 1) / b!`.
pub fn exp_neg_w(order: usize) -> TruncatedEgf {
    TruncatedEgf::egf_of((0..=order).map(|b| {
        if b == 0 {
            BigUint::one()
        } else {
            BigUint::from(b + 1).pow(b as u32 - 1)
        }
    }))
}

/// The identities that [`verify_identity`] can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Identity {
    /// `g(x) (1 - x - x²/2) = 1` with `g` the EGF of `G_n`.
    GFubini,
    /// `l(x) (1 - x - x²/2) = x + x²` with `l` the EGF of `L_n`, `L_0 = 0`.
    LfromG,
    /// `h(x) (1 - T(x)) = 1` with `h` the EGF of `H_n`, `H_0 = 1`.
    HTree,
    /// `T = x e^T`.
    TreeFixedPoint,
    /// `h'(1 - x e^T) + h e^T = 2 e^{2T} - e^T - T - x T / 2` with `h` the
    /// EGF of `K_n`, `K_0 = 0`. This is the equation that goes with
    /// [`k_sequence`](crate::enumeration::recurrence::k_sequence), not with
    /// the true counts.
    KODE,
    /// `h'(1 - x e^T) = e^{2T} - x e^T` with `h` the EGF of `K_n`,
    /// `K_0 = 0`; the equation that goes with
    /// [`k_sequence_corrected`](crate::enumeration::recurrence::k_sequence_corrected).
    KCorrected,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::GFubini,
        Identity::LfromG,
        Identity::HTree,
        Identity::TreeFixedPoint,
        Identity::KODE,
        Identity::KCorrected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::GFubini => "GFubini",
            Identity::LfromG => "LfromG",
            Identity::HTree => "HTree",
            Identity::TreeFixedPoint => "TreeFixedPoint",
            Identity::KODE => "KODE",
            Identity::KCorrected => "KCorrected",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub order: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub order: usize,
    /// Largest `k` such that orders `0..=k` all agree.
    pub holds_to: Option<usize>,
    pub first_mismatch: Option<Mismatch>,
    pub mismatched_orders: Vec<usize>,
}

impl IdentityReport {
    fn compare(identity: Identity, order: usize, lhs: &TruncatedEgf, rhs: &TruncatedEgf) -> Self {
        let mismatched_orders: Vec<usize> = (0..=order)
            .filter(|&k| lhs.coeff(k) != rhs.coeff(k))
            .collect();
        let first_mismatch = mismatched_orders.first().map(|&k| Mismatch {
            order: k,
            lhs: lhs.coeff(k).to_string(),
            rhs: rhs.coeff(k).to_string(),
        });
        let holds_to = match mismatched_orders.first() {
            None => Some(order),
            Some(0) => None,
            Some(&k) => Some(k - 1),
        };
        Self {
            identity,
            order,
            holds_to,
            first_mismatch,
            mismatched_orders,
        }
    }

    pub fn holds(&self) -> bool {
        self.mismatched_orders.is_empty()
    }

    /// Whether every order in `from..=self.order` agrees.
    pub fn holds_from(&self, from: usize) -> bool {
        self.mismatched_orders.iter().all(|&k| k < from)
    }
}

/// `[count(family at n)]` for `n = 0..=order`, with `value_at_zero` in
/// place of the missing zeroth member.
fn sequence(family: CountingFamily, order: usize, value_at_zero: u32) -> Result<Vec<BigUint>> {
    (0..=order)
        .map(|n| match family.algebra(n) {
            Some(a) if n > 0 || family == CountingFamily::G => count_algebra(&a),
            _ => Ok(BigUint::from(value_at_zero)),
        })
        .collect()
}

/// `1 - x - x²/2`.
fn fubini_denominator(order: usize) -> TruncatedEgf {
    let mut c = vec![BigRational::zero(); order + 1];
    c[0] = BigRational::one();
    if order >= 1 {
        c[1] = -BigRational::one();
    }
    if order >= 2 {
        c[2] = -BigRational::new(1.into(), 2.into());
    }
    TruncatedEgf::from_coeffs(c)
}

/// Checks `id` coefficientwise at orders `0..=order`. Sequence inputs come
/// from the structural counter, not from closed forms.
pub fn verify_identity(id: Identity, order: usize) -> Result<IdentityReport> {
    let (lhs, rhs) = match id {
        Identity::GFubini => {
            let g = TruncatedEgf::egf_of(sequence(CountingFamily::G, order, 1)?);
            (&g * &fubini_denominator(order), TruncatedEgf::one(order))
        }
        Identity::LfromG => {
            let l = TruncatedEgf::egf_of(sequence(CountingFamily::L, order, 0)?);
            let x = TruncatedEgf::x(order);
            (&l * &fubini_denominator(order), &x + &x.shift_mul_x())
        }
        Identity::HTree => {
            let h = TruncatedEgf::egf_of(sequence(CountingFamily::H, order, 1)?);
            let one = TruncatedEgf::one(order);
            (&h * &(&one - &tree_series(order)), one)
        }
        Identity::TreeFixedPoint => {
            let t = tree_series(order);
            let rhs = t.exp()?.shift_mul_x();
            (t, rhs)
        }
        Identity::KODE | Identity::KCorrected => {
            // h' loses one order, so h is built one order higher.
            let k = sequence(CountingFamily::K, order + 1, 0)?;
            return verify_k_identity_with(id, &k, order);
        }
    };
    Ok(IdentityReport::compare(id, order, &lhs, &rhs))
}

/// Checks [`Identity::KODE`] or [`Identity::KCorrected`] at orders
/// `0..=order` for an arbitrary sequence `k = [K_0, ..., K_{order+1}]`.
///
/// # Panics
///
/// If `id` is not one of the two `K` identities or `k` is too short.
pub fn verify_k_identity_with(id: Identity, k: &[BigUint], order: usize) -> Result<IdentityReport> {
    assert!(k.len() >= order + 2, "need K_0..=K_(order+1)");
    let h = TruncatedEgf::egf_of(k[..order + 2].iter().cloned());
    let dh = h.derivative();
    let h = h.truncate(order);
    let g = exp_neg_w(order);
    let xg = g.shift_mul_x();
    let one = TruncatedEgf::one(order);
    let (lhs, rhs) = match id {
        Identity::KODE => {
            let t = tree_series(order);
            let lhs = &(&dh * &(&one - &xg)) + &(&h * &g);
            let half = BigRational::new(1.into(), 2.into());
            let two_g2 = (&g * &g).scale(&rat(2));
            let rhs = &(&(&two_g2 - &g) - &t) - &t.shift_mul_x().scale(&half);
            (lhs, rhs)
        }
        Identity::KCorrected => (&dh * &(&one - &xg), &(&g * &g) - &xg),
        other => panic!("{other} is not a K identity"),
    };
    Ok(IdentityReport::compare(id, order, &lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn seq(f: &TruncatedEgf) -> Vec<BigRational> {
        (0..=f.order()).map(|k| f.coefficient_times_factorial(k)).collect()
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn fubini_inverse() {
        let f = fubini_denominator(5);
        let g = f.inverse().unwrap();
        assert_eq!(seq(&g), ints(&[1, 1, 3, 12, 66, 450]));
        assert_eq!(&f * &g, TruncatedEgf::one(5));
    }

    #[test]
    fn inverse_needs_constant_term() {
        assert!(matches!(
            TruncatedEgf::x(3).inverse(),
            Err(Error::ZeroConstantTerm)
        ));
    }

    #[test]
    fn exp_series_is_its_own_derivative() {
        let e = TruncatedEgf::egf_of(vec![1; 8]);
        assert_eq!(e.derivative(), e.truncate(6));
        assert_eq!(TruncatedEgf::x(7).exp().unwrap(), e);
    }

    #[test]
    fn tree_and_exp_coefficients() {
        assert_eq!(tree_series(3).coeff(3), &q(3, 2));
        assert_eq!(exp_neg_w(0).coeff(0), &rat(1));
        let g = exp_neg_w(10);
        let sq = &g * &g;
        for n in 1..=10usize {
            let expected = BigInt::from(2) * BigInt::from(n + 2).pow(n as u32 - 1);
            assert_eq!(sq.coefficient_times_factorial(n), rat(expected));
        }
        assert_eq!(tree_series(12).exp().unwrap(), exp_neg_w(12));
    }

    #[test]
    fn shift_and_scale() {
        let f = TruncatedEgf::from_coeffs(ints(&[1, 2, 3]));
        assert_eq!(f.shift_mul_x(), TruncatedEgf::from_coeffs(ints(&[0, 1, 2])));
        assert_eq!(f.scale(&rat(2)), TruncatedEgf::from_coeffs(ints(&[2, 4, 6])));
        assert_eq!(TruncatedEgf::zero(0).derivative(), TruncatedEgf::zero(0));
        assert_eq!(f.pow(0), TruncatedEgf::one(2));
    }

    #[test]
    fn display() {
        let f = TruncatedEgf::from_coeffs(vec![rat(1), rat(0), q(1, 2)]);
        assert_eq!(f.to_string(), "1 + (1/2)x^2 + O(x^3)");
        assert_eq!(TruncatedEgf::zero(1).to_string(), "0 + O(x^2)");
    }

    #[test]
    fn identities_hold() {
        for id in Identity::ALL.into_iter().filter(|&id| id != Identity::KODE) {
            let r = verify_identity(id, 12).unwrap();
            assert!(r.holds(), "{id}: {r:?}");
            assert_eq!(r.holds_to, Some(12));
        }
    }

    #[test]
    fn k_identities_follow_their_recurrences() {
        use crate::enumeration::recurrence::{k_sequence, k_sequence_corrected};
        let r = verify_k_identity_with(Identity::KODE, &k_sequence(21), 20).unwrap();
        assert!(r.holds(), "{r:?}");
        let r = verify_k_identity_with(Identity::KCorrected, &k_sequence(21), 20).unwrap();
        assert_eq!(r.holds_to, Some(2));
        let r = verify_k_identity_with(Identity::KCorrected, &k_sequence_corrected(21), 20).unwrap();
        assert!(r.holds(), "{r:?}");
        let r = verify_identity(Identity::KODE, 12).unwrap();
        assert_eq!(r.holds_to, Some(2));
        assert_eq!(r.first_mismatch.unwrap().order, 3);
    }

    #[test]
    fn report_detects_mismatch() {
        let a = TruncatedEgf::from_coeffs(ints(&[1, 2, 3]));
        let b = TruncatedEgf::from_coeffs(ints(&[1, 5, 3]));
        let r = IdentityReport::compare(Identity::GFubini, 2, &a, &b);
        assert_eq!(r.holds_to, Some(0));
        assert_eq!(r.mismatched_orders, vec![1]);
        assert_eq!(r.first_mismatch.as_ref().unwrap().rhs, "5");
        assert!(r.holds_from(2));
        assert!(!r.holds_from(1));
    }
}
