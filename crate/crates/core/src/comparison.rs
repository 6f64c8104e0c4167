//! Cohomology of the cyclic categories against the quiver oracle.
//!
//! With `|S| = n + 1`, the point `s_i` (`1 ≤ i ≤ n`) matches the simple
//! module at vertex `i`, and `s_0` matches the projective `P(1)` shifted by
//! one.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::ainf::hom_cohomology;
use crate::categories::{BaseObj, CategoryMutation, CyclicCategory};
use crate::cyclic::{eta_shifts, CyclicSet, PointPair};
use crate::field::Field;
use crate::quiver::{ext, Rep};
use crate::twisted::{check_iso_s0, CyclicComplex, IsoCertificate, IsoMutation, IsoViolation, TwCategory};

/// Cohomology dimensions by degree; zero entries are dropped.
pub type DegreeDims = BTreeMap<i64, usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMismatch {
    pub source: usize,
    pub target: usize,
    pub expected: DegreeDims,
    pub found: DegreeDims,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverReport<F> {
    pub pairs_checked: usize,
    pub mismatches: Vec<HomMismatch>,
    /// Outcome of the `s_0` isomorphism check, when `|S| ≥ 2`.
    pub iso: Option<Result<IsoCertificate<F>, IsoViolation>>,
}

impl<F> QuiverReport<F> {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty() && !matches!(self.iso, Some(Err(_)))
    }
}

fn nonzero(m: BTreeMap<i64, usize>) -> DegreeDims {
    m.into_iter().filter(|&(_, d)| d > 0).collect()
}

/// The module matched with `s_i` and its shift.
fn module_for<F: Field>(n: usize, i: usize) -> (Rep<F>, i64) {
    if i == 0 {
        (Rep::projective(n, 1).expect("vertex 1 exists"), 1)
    } else {
        (Rep::simple(n, i).expect("vertex in range"), 0)
    }
}

/// Expected degrees of `hom(s_i, s_j)` from the oracle, reduced modulo `modulus`
/// (0 for integer degrees).
fn expected<F: Field>(n: usize, i: usize, j: usize, modulus: i64) -> DegreeDims {
    let mut out = DegreeDims::new();
    if n == 0 {
        return out;
    }
    let ((m, a), (k, b)) = (module_for::<F>(n, i), module_for::<F>(n, j));
    let (e0, e1) = ext(&m, &k);
    for (deg, dim) in [(b - a, e0), (1 + b - a, e1)] {
        let deg = if modulus == 0 { deg } else { deg.rem_euclid(modulus) };
        *out.entry(deg).or_default() += dim;
    }
    nonzero(out)
}

/// Hom cohomology of the two-periodic category on `n + 1` points against
/// the oracle, for every pair of points.
pub fn compare_two_periodic<F: Field>(n: usize, mutation: Option<CategoryMutation>) -> QuiverReport<F> {
    let set = CyclicSet::standard(n + 1);
    let mut cat = CyclicCategory::two_periodic(&set);
    if let Some(m) = mutation {
        cat = cat.with_mutation(m);
    }
    let mut mismatches = Vec::new();
    let mut pairs_checked = 0;
    for i in 0..=n {
        for j in 0..=n {
            pairs_checked += 1;
            let found = nonzero(hom_cohomology::<F, _>(&cat, &BaseObj::Point(i), &BaseObj::Point(j)));
            let expected = expected::<F>(n, i, j, 2);
            if found != expected {
                mismatches.push(HomMismatch {
                    source: i,
                    target: j,
                    expected,
                    found,
                });
            }
        }
    }
    let iso = (n >= 1).then(|| check_iso_s0::<F>(&set, mutation.map(IsoMutation::Category)));
    QuiverReport {
        pairs_checked,
        mismatches,
        iso,
    }
}

/// Integer-graded hom cohomology between `s_i[η_i]` and `s_j[η_j]` for
/// `1 ≤ i, j ≤ n` against the oracle.
pub fn compare_graded<F: Field>(n: usize, c: &PointPair) -> QuiverReport<F> {
    let set = CyclicSet::standard(n + 1);
    let tw = TwCategory::new(CyclicCategory::graded(&set, c));
    let eta = eta_shifts(&set, c);
    let objs: Vec<CyclicComplex<F>> = (0..=n).map(|i| tw.point(i, eta[i])).collect();
    let mut mismatches = Vec::new();
    let mut pairs_checked = 0;
    for i in 1..=n {
        for j in 1..=n {
            pairs_checked += 1;
            let found = nonzero(hom_cohomology::<F, _>(&tw, &objs[i], &objs[j]));
            let expected = expected::<F>(n, i, j, 0);
            if found != expected {
                mismatches.push(HomMismatch {
                    source: i,
                    target: j,
                    expected,
                    found,
                });
            }
        }
    }
    QuiverReport {
        pairs_checked,
        mismatches,
        iso: None,
    }
}
