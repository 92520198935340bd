//! Restricted Fubini and Stirling numbers, acyclic function counts, and
//! exact evaluation of the `√3` closed formulas in `Q(√3)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::enumeration::{binomial, factorial};
use crate::error::{Error, Result};

/// `F_{n,<=m}`: ordered set partitions of `{1..n}` into blocks of size at
/// most `m`, by `F_n = Σ_{l=1}^{m} C(n, l) F_{n-l}` with `F_0 = 1`.
pub fn restricted_fubini(n: usize, m: usize) -> BigUint {
    let mut f = vec![BigUint::one()];
    for k in 1..=n {
        let v = (1..=m.min(k)).fold(BigUint::zero(), |acc, l| acc + binomial(k, l) * &f[k - l]);
        f.push(v);
    }
    f.swap_remove(n)
}

/// Restricted Stirling number of the second kind: partitions of `{1..n}`
/// into `k` blocks of size at most `m`. The block holding `n` has size `l`
/// and `C(n-1, l-1)` choices of companions.
pub fn restricted_stirling(n: usize, k: usize, m: usize) -> BigUint {
    // table[i][j] = S(i, j)
    let mut table = vec![vec![BigUint::zero(); k + 1]; n + 1];
    table[0][0] = BigUint::one();
    for i in 1..=n {
        for j in 1..=k {
            let mut v = BigUint::zero();
            for l in 1..=m.min(i) {
                v += binomial(i - 1, l - 1) * &table[i - l][j - 1];
            }
            table[i][j] = v;
        }
    }
    table[n][k].clone()
}

/// Number of set partitions of `{1..n}` with blocks of size at most `m`,
/// indexed by block count, by walking restricted-growth strings.
pub fn partitions_by_block_count(n: usize, m: usize) -> Vec<u64> {
    fn walk(pos: usize, n: usize, m: usize, sizes: &mut Vec<usize>, out: &mut [u64]) {
        if pos == n {
            out[sizes.len()] += 1;
            return;
        }
        for b in 0..sizes.len() {
            if sizes[b] < m {
                sizes[b] += 1;
                walk(pos + 1, n, m, sizes, out);
                sizes[b] -= 1;
            }
        }
        if m >= 1 {
            sizes.push(1);
            walk(pos + 1, n, m, sizes, out);
            sizes.pop();
        }
    }
    let mut out = vec![0u64; n + 1];
    walk(0, n, m, &mut Vec::new(), &mut out);
    out
}

/// Ordered set partitions with blocks of size at most `m`, by enumerating
/// unordered partitions and weighting each `k`-block one by `k!`.
pub fn ordered_partitions_count_bruteforce(n: usize, m: usize) -> BigUint {
    partitions_by_block_count(n, m)
        .iter()
        .enumerate()
        .map(|(k, &c)| factorial(k) * c)
        .sum()
}

/// `N(a, b) = a (a + b)^(b - 1)`, with `N(a, 0) = 1`.
pub fn acyclic_count(a: usize, b: usize) -> BigUint {
    if b == 0 {
        return BigUint::one();
    }
    BigUint::from(a) * BigUint::from(a + b).pow(b as u32 - 1)
}

/// Counts functions `{1..b} -> {1..a+b}` whose functional graph has no
/// cycle inside the domain, by trying all `(a + b)^b` of them.
pub fn acyclic_count_bruteforce(a: usize, b: usize) -> BigUint {
    let codomain = a + b;
    let mut f = vec![0usize; b]; // values in 0..codomain, domain is 0..b
    let mut count = 0u64;
    loop {
        let acyclic = (0..b).all(|start| {
            let mut x = start;
            // an orbit that stays in the domain for b steps has a cycle
            for _ in 0..=b {
                if x >= b {
                    return true;
                }
                x = f[x];
            }
            false
        });
        count += u64::from(acyclic);
        // next function in base `codomain`
        let mut i = 0;
        loop {
            if i == b {
                return BigUint::from(count);
            }
            f[i] += 1;
            if f[i] < codomain {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// `a + b√3` with rational `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExtValue {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadExtValue {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn sqrt3() -> Self {
        Self::from_ints(0, 1)
    }

    /// Field norm `a² - 3b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(3.into()) * &self.b * &self.b
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    pub fn inverse(&self) -> Option<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(Self::new(c.a / &norm, c.b / norm))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(&self.a * k, &self.b * k)
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        Some(out)
    }

    /// The value as a rational integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.b.is_zero() && self.a.is_integer()).then(|| self.a.to_integer())
    }
}

impl Add for &QuadExtValue {
    type Output = QuadExtValue;
    fn add(self, o: Self) -> QuadExtValue {
        QuadExtValue::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &QuadExtValue {
    type Output = QuadExtValue;
    fn sub(self, o: Self) -> QuadExtValue {
        QuadExtValue::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul for &QuadExtValue {
    type Output = QuadExtValue;
    fn mul(self, o: Self) -> QuadExtValue {
        let three = BigRational::from_integer(3.into());
        QuadExtValue::new(
            &self.a * &o.a + three * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

impl Neg for &QuadExtValue {
    type Output = QuadExtValue;
    fn neg(self) -> QuadExtValue {
        QuadExtValue::new(-self.a.clone(), -self.b.clone())
    }
}

impl std::fmt::Display for QuadExtValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} + {}√3", self.a, self.b)
    }
}

/// `(√3 - 1)^e - (-√3 - 1)^e`, divided by `√3`.
fn sqrt3_difference(e: i64) -> QuadExtValue {
    let one = QuadExtValue::one();
    let r = QuadExtValue::sqrt3();
    let p = (&r - &one).pow(e).expect("√3 - 1 is a unit");
    let q = (&(-&r) - &one).pow(e).expect("-√3 - 1 is a unit");
    let inv_sqrt3 = QuadExtValue::new(BigRational::zero(), BigRational::new(1.into(), 3.into()));
    &(&p - &q) * &inv_sqrt3
}

fn integral(v: &QuadExtValue) -> Result<BigUint> {
    v.to_integer()
        .filter(|x| !x.is_negative())
        .and_then(|x| x.to_biguint())
        .ok_or_else(|| Error::NonIntegerResult(v.to_string()))
}

fn factorial_q(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(factorial(n)))
}

/// `n!/√3 · ((√3-1)^(-n-1) - (-√3-1)^(-n-1))`, evaluated exactly.
pub fn g_closed(n: usize) -> Result<BigUint> {
    let e = -(n as i64) - 1;
    integral(&sqrt3_difference(e).scale(&factorial_q(n)))
}

/// `n!/√3 · ((√3-1)^(-n) - (-√3-1)^(-n)) + n!/√3 · ((√3-1)^(1-n) - (-√3-1)^(1-n))`,
/// i.e. `n G_{n-1} + n(n-1) G_{n-2}` with the closed form substituted.
pub fn l_closed(n: usize) -> Result<BigUint> {
    let e = -(n as i64);
    let sum = &sqrt3_difference(e) + &sqrt3_difference(e + 1);
    integral(&sum.scale(&factorial_q(n)))
}

/// Same shape as [`l_closed`] with the two exponents moved to
/// `-n + first` and `-n + second`.
pub fn l_closed_with_offsets(n: usize, first: i64, second: i64) -> Result<BigUint> {
    let e = -(n as i64);
    let sum = &sqrt3_difference(e + first) + &sqrt3_difference(e + second);
    integral(&sum.scale(&factorial_q(n)))
}

/// Rough size guard for the brute-force acyclic enumeration.
pub fn acyclic_bruteforce_size(a: usize, b: usize) -> Option<u64> {
    (a as u64 + b as u64).checked_pow(b as u32)
}
