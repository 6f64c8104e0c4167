//! Representations of the quiver `1 → 2 → … → n` and their Ext groups,
//! computed from explicit projective resolutions over the path algebra.
//!
//! Vertices are numbered from 1. A representation stores a vector space per
//! vertex and a matrix per arrow; the indecomposable projective `P(i)` is
//! one-dimensional at every vertex `j ≥ i`.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::field::Field;
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("expected {expected} arrow maps, got {got}")]
    ArrowCount { expected: usize, got: usize },
    #[error("arrow {arrow} has shape {rows}x{cols}, dimensions need {want_rows}x{want_cols}")]
    Shape {
        arrow: usize,
        rows: usize,
        cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("vertex {0} is outside 1..=n")]
    Vertex(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep<F> {
    dims: Vec<usize>,
    /// `maps[k]` goes from vertex `k + 1` to vertex `k + 2`.
    maps: Vec<Matrix<F>>,
}

impl<F: Field> Rep<F> {
    pub fn new(dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self, QuiverError> {
        let expected = dims.len().saturating_sub(1);
        if maps.len() != expected {
            return Err(QuiverError::ArrowCount { expected, got: maps.len() });
        }
        for (k, m) in maps.iter().enumerate() {
            if m.rows() != dims[k + 1] || m.cols() != dims[k] {
                return Err(QuiverError::Shape {
                    arrow: k + 1,
                    rows: m.rows(),
                    cols: m.cols(),
                    want_rows: dims[k + 1],
                    want_cols: dims[k],
                });
            }
        }
        Ok(Rep { dims, maps })
    }

    /// One-dimensional on `a..=b`, identity maps in between.
    pub fn interval(n: usize, a: usize, b: usize) -> Result<Self, QuiverError> {
        for v in [a, b] {
            if v == 0 || v > n {
                return Err(QuiverError::Vertex(v));
            }
        }
        let dims: Vec<usize> = (1..=n).map(|v| usize::from(a <= v && v <= b)).collect();
        let maps = (0..n.saturating_sub(1))
            .map(|k| {
                let mut m = Matrix::zeros(dims[k + 1], dims[k]);
                if dims[k] == 1 && dims[k + 1] == 1 {
                    m.set(0, 0, F::one());
                }
                m
            })
            .collect();
        Rep::new(dims, maps)
    }

    /// The simple module at vertex `i`.
    pub fn simple(n: usize, i: usize) -> Result<Self, QuiverError> {
        Self::interval(n, i, i)
    }

    /// The indecomposable projective at vertex `i`.
    pub fn projective(n: usize, i: usize) -> Result<Self, QuiverError> {
        Self::interval(n, i, n)
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v - 1]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// The map along the unique path from vertex `a` to vertex `b ≥ a`.
    pub fn path_map(&self, a: usize, b: usize) -> Matrix<F> {
        assert!(a <= b, "no path from {a} to {b}");
        let mut m = identity(self.dim(a));
        for k in a..b {
            m = self.maps[k - 1].mul(&m);
        }
        m
    }
}

fn identity<F: Field>(n: usize) -> Matrix<F> {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m.set(i, i, F::one());
    }
    m
}

fn unit_vector<F: Field>(len: usize, k: usize) -> Vec<F> {
    let mut v = vec![F::zero(); len];
    v[k] = F::one();
    v
}

/// Greedily picks candidates that are independent of `span` and of each other.
fn extend_independent<F: Field>(len: usize, span: &[Vec<F>], candidates: impl IntoIterator<Item = Vec<F>>) -> Vec<Vec<F>> {
    let mut current: Vec<Vec<F>> = span.to_vec();
    let mut rank = Matrix::from_columns(len, &current).rank();
    let mut picked = Vec::new();
    for v in candidates {
        current.push(v.clone());
        let r = Matrix::from_columns(len, &current).rank();
        if r > rank {
            rank = r;
            picked.push(v);
        } else {
            current.pop();
        }
    }
    picked
}

/// `0 → P₁ → P₀ → M → 0` with `P₀`, `P₁` sums of indecomposable projectives.
///
/// A generator at vertex `v` spans a copy of `P(v)`. An element of `P₀` at
/// any vertex is a coefficient vector over all generators of `P₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution<F> {
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    /// Image of each generator of `P₁`, as an element of `P₀`.
    pub d: Vec<Vec<F>>,
}

impl<F: Field> Rep<F> {
    /// Minimal projective resolution. Panics if the kernel of the cover is
    /// not projective, which cannot happen over this hereditary algebra.
    pub fn resolve(&self) -> Resolution<F> {
        let n = self.vertex_count();
        // projective cover: lift a complement of the incoming image at each vertex
        let mut p0 = Vec::new();
        let mut tops: Vec<Vec<F>> = Vec::new();
        for v in 1..=n {
            let incoming: Vec<Vec<F>> = if v == 1 {
                Vec::new()
            } else {
                let m = &self.maps[v - 2];
                (0..m.cols()).map(|c| (0..m.rows()).map(|r| m.get(r, c).clone()).collect()).collect()
            };
            let d = self.dim(v);
            for t in extend_independent(d, &incoming, (0..d).map(|k| unit_vector(d, k))) {
                p0.push(v);
                tops.push(t);
            }
        }
        let g0 = p0.len();
        let mut kernels: Vec<Vec<Vec<F>>> = Vec::with_capacity(n);
        for v in 1..=n {
            let live: Vec<usize> = (0..g0).filter(|&g| p0[g] <= v).collect();
            let cols: Vec<Vec<F>> = live.iter().map(|&g| self.path_map(p0[g], v).apply(&tops[g])).collect();
            let pi = Matrix::from_columns(self.dim(v), &cols);
            assert_eq!(pi.rank(), self.dim(v), "cover is not surjective at vertex {v}");
            let ker = pi
                .kernel()
                .into_iter()
                .map(|k| {
                    let mut full = vec![F::zero(); g0];
                    for (x, &g) in k.into_iter().zip(&live) {
                        full[g] = x;
                    }
                    full
                })
                .collect();
            kernels.push(ker);
        }
        // the kernel is itself projective: cover it and check injectivity
        let mut p1 = Vec::new();
        let mut d: Vec<Vec<F>> = Vec::new();
        for v in 1..=n {
            let below: &[Vec<F>] = if v == 1 { &[] } else { &kernels[v - 2] };
            for k in extend_independent(g0, below, kernels[v - 1].iter().cloned()) {
                p1.push(v);
                d.push(k);
            }
        }
        for v in 1..=n {
            let cols: Vec<Vec<F>> = (0..p1.len()).filter(|&g| p1[g] <= v).map(|g| d[g].clone()).collect();
            let rank = Matrix::from_columns(g0, &cols).rank();
            assert_eq!(rank, cols.len(), "second syzygy is nonzero at vertex {v}");
            assert_eq!(rank, kernels[v - 1].len(), "kernel cover is not surjective at vertex {v}");
        }
        Resolution { p0, p1, d }
    }
}

/// `(dim Ext⁰(m, n), dim Ext¹(m, n))`; higher Ext vanishes.
pub fn ext<F: Field>(m: &Rep<F>, n: &Rep<F>) -> (usize, usize) {
    let res = m.resolve();
    let offsets = |gens: &[usize]| -> Vec<usize> {
        let mut out = Vec::with_capacity(gens.len() + 1);
        let mut acc = 0;
        out.push(0);
        for &v in gens {
            acc += n.dim(v);
            out.push(acc);
        }
        out
    };
    let (o0, o1) = (offsets(&res.p0), offsets(&res.p1));
    let (h0, h1) = (o0[res.p0.len()], o1[res.p1.len()]);
    // precomposition with P₁ → P₀, from Hom(P₀, N) to Hom(P₁, N)
    let mut dmat = Matrix::zeros(h1, h0);
    for (g, &vg) in res.p1.iter().enumerate() {
        for (h, &vh) in res.p0.iter().enumerate() {
            let c = &res.d[g][h];
            if c.is_zero() {
                continue;
            }
            let path = n.path_map(vh, vg);
            for r in 0..path.rows() {
                for k in 0..path.cols() {
                    dmat.add_at(o1[g] + r, o0[h] + k, c.clone() * path.get(r, k).clone());
                }
            }
        }
    }
    let rank = dmat.rank();
    (h0 - rank, h1 - rank)
}

/// `dim Hom(m, n)` from the commuting-square equations directly.
pub fn hom_dim<F: Field>(m: &Rep<F>, n: &Rep<F>) -> usize {
    let verts = m.vertex_count();
    let mut offsets = vec![0];
    for v in 1..=verts {
        offsets.push(offsets[v - 1] + n.dim(v) * m.dim(v));
    }
    let unknowns = offsets[verts];
    // unknown (v, r, c) is entry (r, c) of the map at vertex v
    let var = |v: usize, r: usize, c: usize| offsets[v - 1] + r * m.dim(v) + c;
    let mut rows: Vec<Vec<F>> = Vec::new();
    for v in 1..verts {
        let (a, b) = (&m.maps[v - 1], &n.maps[v - 1]);
        // b · f_v − f_{v+1} · a = 0
        for r in 0..n.dim(v + 1) {
            for c in 0..m.dim(v) {
                let mut row = vec![F::zero(); unknowns];
                for k in 0..n.dim(v) {
                    row[var(v, k, c)] += b.get(r, k).clone();
                }
                for k in 0..m.dim(v + 1) {
                    row[var(v + 1, r, k)] += -a.get(k, c).clone();
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return unknowns;
    }
    unknowns - Matrix::from_rows(rows).rank()
}

/// Ext between simples of the `n`-vertex quiver.
pub fn ext_dims<F: Field>(n: usize, i: usize, j: usize) -> Result<(usize, usize), QuiverError> {
    Ok(ext(&Rep::<F>::simple(n, i)?, &Rep::<F>::simple(n, j)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    #[test]
    fn simples() {
        for n in 1..=5 {
            for i in 1..=n {
                assert_eq!(ext_dims::<Q>(n, i, i).unwrap(), (1, 0));
                if i < n {
                    assert_eq!(ext_dims::<Q>(n, i, i + 1).unwrap(), (0, 1));
                    assert_eq!(ext_dims::<Q>(n, i + 1, i).unwrap(), (0, 0));
                }
            }
        }
        assert_eq!(ext_dims::<Q>(3, 1, 3).unwrap(), (0, 0));
    }

    #[test]
    fn projectives_have_no_ext() {
        for i in 1..=4 {
            for j in 1..=4 {
                let (p, m) = (Rep::<Q>::projective(4, i).unwrap(), Rep::<Q>::interval(4, j, 4.min(j + 1)).unwrap());
                assert_eq!(ext(&p, &m).1, 0);
                assert_eq!(ext(&p, &m).0, m.dim(i));
            }
        }
    }

    #[test]
    fn ext_zero_is_hom() {
        let n = 4;
        let mods: Vec<Rep<Q>> = (1..=n).flat_map(|a| (a..=n).map(move |b| Rep::interval(n, a, b).unwrap())).collect();
        for m in &mods {
            for k in &mods {
                assert_eq!(ext(m, k).0, hom_dim(m, k));
            }
        }
    }

    #[test]
    fn characteristic_does_not_matter() {
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(ext_dims::<Q>(4, i, j).unwrap(), ext_dims::<Fp<2>>(4, i, j).unwrap());
            }
        }
    }

    #[test]
    fn bad_shapes_are_rejected() {
        let err = Rep::<Q>::new(vec![1, 2], vec![Matrix::zeros(1, 1)]).unwrap_err();
        assert!(matches!(err, QuiverError::Shape { arrow: 1, .. }));
        assert!(Rep::<Q>::simple(3, 4).is_err());
    }
}
