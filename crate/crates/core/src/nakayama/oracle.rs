//! Hom dimensions from explicit quiver representations.
//!
//! A uniserial module of length `l` with top `i` is realised with one basis
//! vector per composition factor (radical layer `s` sits at vertex
//! `i + s`), each arrow sending layer `s` to layer `s + 1`. A homomorphism
//! is a family of matrices `f_x : M_x -> N_x`, one per vertex, with
//! `f_y M_α = N_α f_x` for every arrow `α : x -> y`. The Hom space is the
//! kernel of that linear system, solved by exact Gaussian elimination.
//! Nothing here uses the interval criteria of the parent module.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgebraId, Indecomposable};

/// Basis of a representation: the vertex of each radical layer.
fn layers(a: &AlgebraId, m: &Indecomposable) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.len);
    let mut v = m.top;
    for s in 0..m.len {
        out.push(v);
        if s + 1 < m.len {
            v = a
                .successor(v)
                .expect("a uniserial module never runs past the last vertex");
        }
    }
    out
}

/// Arrows of the underlying quiver as `(source, target)`.
fn arrows(a: &AlgebraId) -> Vec<(usize, usize)> {
    (1..=a.n)
        .filter_map(|v| a.successor(v).map(|w| (v, w)))
        .collect()
}

/// Exact `dim Hom(M, N)` for indecomposables `M`, `N` of `a`.
pub fn hom_dim_oracle(a: &AlgebraId, m: &Indecomposable, n: &Indecomposable) -> usize {
    let ml = layers(a, m);
    let nl = layers(a, n);

    // one unknown per (vertex x, N-basis p at x, M-basis q at x)
    let mut index = std::collections::HashMap::new();
    for (p, &vp) in nl.iter().enumerate() {
        for (q, &vq) in ml.iter().enumerate() {
            if vp == vq {
                let next = index.len();
                index.insert((p, q), next);
            }
        }
    }
    let unknowns = index.len();
    if unknowns == 0 {
        return 0;
    }

    // action of an arrow on a representation: layer s at the source goes to
    // layer s + 1, provided that layer exists
    let act = |basis: &[usize], s: usize, src: usize| -> Option<usize> {
        (basis[s] == src && s + 1 < basis.len()).then_some(s + 1)
    };

    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (src, dst) in arrows(a) {
        // equation entries indexed by (p at dst in N, q at src in M)
        for (q, &vq) in ml.iter().enumerate() {
            if vq != src {
                continue;
            }
            for (p, &vp) in nl.iter().enumerate() {
                if vp != dst {
                    continue;
                }
                let mut row = vec![BigRational::zero(); unknowns];
                // (f_dst * M_α)[p][q] = f_dst[p][q+1] when M_α e_q = e_{q+1}
                if let Some(q1) = act(&ml, q, src) {
                    if let Some(&k) = index.get(&(p, q1)) {
                        row[k] += BigRational::one();
                    }
                }
                // (N_α * f_src)[p][q] = f_src[p-1][q] when N_α e_{p-1} = e_p
                if p >= 1 && act(&nl, p - 1, src) == Some(p) {
                    if let Some(&k) = index.get(&(p - 1, q)) {
                        row[k] -= BigRational::one();
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    unknowns - rank(rows)
}

/// Rank of a dense rational matrix.
pub(crate) fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..ncols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
