//! Finite subsets of the circle, degree-one maps between them, and the
//! point-pair data that grades them.
//!
//! A morphism `S → T` is stored as a monotone integer lift `f̃: Z → Z` of the
//! index map, equivariant in the sense `f̃(i + |S|) = f̃(i) + |T|`. Only
//! `f̃(0), …, f̃(|S|-1)` are kept, normalized so that `0 ≤ f̃(0) < |T|`. Two
//! maps with the same underlying set map can have different lifts (for
//! example the two maps from a two-element set onto a point), which is why
//! the lift, and not the set map, is the identity of a morphism.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

/// Exact rational used for angles and path lengths (in units of full turns).
pub type Turns = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("a cyclic set needs at least one element")]
    EmptySet,
    #[error("lift {lift:?} is not monotone of degree one onto a set of size {target}")]
    NotMonotone { lift: Vec<i64>, target: usize },
    #[error("lift has {got} entries, source has {expected} elements")]
    LengthMismatch { expected: usize, got: usize },
    #[error("morphisms are not composable")]
    Mismatch,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn frac(x: Turns) -> Turns {
    x - Turns::from_integer(x.floor().to_integer())
}

/// A point of the circle, as a fraction of a full turn in `[0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Angle(Turns);

impl Angle {
    /// Reduces any rational modulo one.
    pub fn new(value: Turns) -> Self {
        Angle(frac(value))
    }

    pub fn from_fraction(numer: i64, denom: i64) -> Self {
        Angle::new(Turns::new(numer, denom))
    }

    pub fn value(self) -> Turns {
        self.0
    }

    /// Counterclockwise distance from `self` to `other`, in `[0, 1)`.
    pub fn ccw_distance(self, other: Angle) -> Turns {
        frac(other.0 - self.0)
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Angle {
    type Err = CyclicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || CyclicError::Parse(s.into());
        let value = match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| err())?;
                let q: i64 = q.trim().parse().map_err(|_| err())?;
                if q == 0 {
                    return Err(err());
                }
                Turns::new(p, q)
            }
            None => Turns::from_integer(s.parse().map_err(|_| err())?),
        };
        Ok(Angle::new(value))
    }
}

/// A finite nonempty subset of the circle in increasing angle order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicSet {
    elements: Vec<Angle>,
}

impl CyclicSet {
    /// Sorts and deduplicates; fails on an empty input.
    pub fn new(angles: impl IntoIterator<Item = Angle>) -> Result<Self, CyclicError> {
        let mut elements: Vec<Angle> = angles.into_iter().collect();
        elements.sort();
        elements.dedup();
        if elements.is_empty() {
            return Err(CyclicError::EmptySet);
        }
        Ok(CyclicSet { elements })
    }

    /// `size` equispaced points `0, 1/size, …`.
    pub fn standard(size: usize) -> Self {
        assert!(size > 0, "cyclic sets are nonempty");
        CyclicSet {
            elements: (0..size)
                .map(|i| Angle::from_fraction(i as i64, size as i64))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The `n` of `[s_0, …, s_n]`.
    pub fn n(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn elements(&self) -> &[Angle] {
        &self.elements
    }

    /// `s_i` with the index read cyclically.
    pub fn get(&self, i: i64) -> Angle {
        self.elements[i.rem_euclid(self.len() as i64) as usize]
    }

    /// Position of `s_i` on the universal cover: `s_{i mod m} + ⌊i/m⌋`.
    pub fn lifted(&self, i: i64) -> Turns {
        let m = self.len() as i64;
        self.get(i).0 + Turns::from_integer(floor_div(i, m))
    }

    pub fn index_of(&self, a: Angle) -> Option<usize> {
        self.elements.binary_search(&a).ok()
    }

    /// The index `i` with `x ∈ [s_i, s_{i+1})`, read cyclically.
    pub fn arc_containing(&self, x: Angle) -> usize {
        match self.elements.binary_search(&x) {
            Ok(i) => i,
            Err(0) => self.n(),
            Err(i) => i - 1,
        }
    }
}

impl fmt::Debug for CyclicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CyclicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for CyclicSet {
    type Err = CyclicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let angles = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Angle>, _>>()?;
        CyclicSet::new(angles)
    }
}

/// A morphism of the cyclic category.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicMorphism {
    source: CyclicSet,
    target: CyclicSet,
    lift: Vec<i64>,
}

impl CyclicMorphism {
    pub fn new(source: CyclicSet, target: CyclicSet, lift: Vec<i64>) -> Result<Self, CyclicError> {
        if lift.len() != source.len() {
            return Err(CyclicError::LengthMismatch {
                expected: source.len(),
                got: lift.len(),
            });
        }
        let t = target.len() as i64;
        let monotone = lift.windows(2).all(|w| w[0] <= w[1]);
        if !monotone || lift[lift.len() - 1] > lift[0] + t {
            return Err(CyclicError::NotMonotone {
                lift,
                target: target.len(),
            });
        }
        let shift = floor_div(lift[0], t) * t;
        let lift = lift.into_iter().map(|v| v - shift).collect();
        Ok(CyclicMorphism {
            source,
            target,
            lift,
        })
    }

    pub fn identity(set: &CyclicSet) -> Self {
        CyclicMorphism {
            source: set.clone(),
            target: set.clone(),
            lift: (0..set.len() as i64).collect(),
        }
    }

    pub fn source(&self) -> &CyclicSet {
        &self.source
    }

    pub fn target(&self) -> &CyclicSet {
        &self.target
    }

    pub fn lift(&self) -> &[i64] {
        &self.lift
    }

    /// `f̃(i)` for any integer `i`.
    pub fn eval(&self, i: i64) -> i64 {
        let m = self.source.len() as i64;
        let t = self.target.len() as i64;
        self.lift[i.rem_euclid(m) as usize] + floor_div(i, m) * t
    }

    /// The underlying set map on indices.
    pub fn set_map(&self, i: usize) -> usize {
        self.eval(i as i64).rem_euclid(self.target.len() as i64) as usize
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = alloc::vec![false; self.target.len()];
        (0..self.source.len()).all(|i| !core::mem::replace(&mut hit[self.set_map(i)], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = alloc::vec![false; self.target.len()];
        for i in 0..self.source.len() {
            hit[self.set_map(i)] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.len() == self.target.len() && self.is_injective()
    }

    /// `g ∘ f`.
    pub fn compose(g: &CyclicMorphism, f: &CyclicMorphism) -> Result<Self, CyclicError> {
        if f.target != g.source {
            return Err(CyclicError::Mismatch);
        }
        let lift = (0..f.source.len() as i64).map(|i| g.eval(f.eval(i))).collect();
        CyclicMorphism::new(f.source.clone(), g.target.clone(), lift)
    }

    /// Image-factorization `f = f_inj ∘ f_surj` through the image set.
    pub fn classify_and_factor(&self) -> Factorization {
        let t = self.target.len() as i64;
        let mut image_idx: Vec<usize> = (0..self.source.len()).map(|i| self.set_map(i)).collect();
        image_idx.sort_unstable();
        image_idx.dedup();
        let q = image_idx.len() as i64;
        let image = CyclicSet {
            elements: image_idx.iter().map(|&i| self.target.elements[i]).collect(),
        };
        let inj = CyclicMorphism {
            source: image.clone(),
            target: self.target.clone(),
            lift: image_idx.iter().map(|&i| i as i64).collect(),
        };
        let surj_lift = (0..self.source.len() as i64)
            .map(|i| {
                let tau = self.eval(i);
                let pos = image_idx
                    .binary_search(&(tau.rem_euclid(t) as usize))
                    .expect("image contains every value") as i64;
                pos + floor_div(tau, t) * q
            })
            .collect();
        let surj = CyclicMorphism::new(self.source.clone(), image.clone(), surj_lift)
            .expect("image factor is monotone");
        Factorization { surj, inj, image }
    }

    /// Source indices over target element `t`, in the linear order of the
    /// fiber interval. Empty when `t` is not in the image.
    pub fn fiber(&self, t: usize) -> Vec<usize> {
        let m = self.source.len() as i64;
        let tl = self.target.len() as i64;
        let Some(i0) = (0..m).find(|&i| self.eval(i).rem_euclid(tl) == t as i64) else {
            return Vec::new();
        };
        let tau = self.eval(i0);
        let mut start = i0;
        while start > i0 - m + 1 && self.eval(start - 1) == tau {
            start -= 1;
        }
        let mut out = Vec::new();
        let mut i = start;
        while i < start + m && self.eval(i) == tau {
            out.push(i.rem_euclid(m) as usize);
            i += 1;
        }
        out
    }

    /// The piecewise-linear representative on the universal cover: `s̃_i`
    /// goes to `t̃_{f̃(i)}`, linearly in between. Defined for every rational.
    pub fn lift_point(&self, x: Turns) -> Turns {
        let whole = x.floor();
        let a = Angle::new(x);
        let s = &self.source;
        let mut i = s.arc_containing(a) as i64;
        if a.0 < s.elements[0].0 {
            i -= s.len() as i64;
        }
        let lo = s.lifted(i);
        let hi = s.lifted(i + 1);
        let tlo = self.target.lifted(self.eval(i));
        let thi = self.target.lifted(self.eval(i + 1));
        tlo + (a.0 - lo) / (hi - lo) * (thi - tlo) + whole
    }

    pub fn map_point(&self, a: Angle) -> Angle {
        Angle::new(self.lift_point(a.0))
    }

    pub fn map_pair(&self, c: &PointPair) -> PointPair {
        PointPair::new(self.map_point(c.first()), self.map_point(c.second()))
    }

    /// Every morphism between two cyclic sets, each exactly once.
    pub fn enumerate(source: &CyclicSet, target: &CyclicSet) -> Vec<CyclicMorphism> {
        enumerate_lifts(source.len(), target.len())
            .into_iter()
            .map(|lift| CyclicMorphism {
                source: source.clone(),
                target: target.clone(),
                lift,
            })
            .collect()
    }
}

impl fmt::Debug for CyclicMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CyclicMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] -> [{}] lift=(", self.source, self.target)?;
        for (i, v) in self.lift.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Parses the `lift=(a0,a1,…)` text form.
pub fn parse_lift(s: &str) -> Result<Vec<i64>, CyclicError> {
    let err = || CyclicError::Parse(s.into());
    let body = s.trim().strip_prefix("lift=").unwrap_or(s.trim());
    let body = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(err)?;
    body.split(',')
        .map(|t| t.trim().parse().map_err(|_| err()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub surj: CyclicMorphism,
    pub inj: CyclicMorphism,
    pub image: CyclicSet,
}

/// All normalized lifts from a set of size `m` to a set of size `n`.
pub fn enumerate_lifts(m: usize, n: usize) -> Vec<Vec<i64>> {
    fn extend(cur: &mut Vec<i64>, m: usize, hi: i64, out: &mut Vec<Vec<i64>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let lo = *cur.last().expect("seeded");
        for v in lo..=hi {
            cur.push(v);
            extend(cur, m, hi, out);
            cur.pop();
        }
    }
    assert!(m > 0 && n > 0, "cyclic sets are nonempty");
    let mut out = Vec::new();
    for first in 0..n as i64 {
        let mut cur = alloc::vec![first];
        extend(&mut cur, m, first + n as i64, &mut out);
    }
    out
}

/// A point of the second symmetric product of the circle.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointPair {
    lo: Angle,
    hi: Angle,
}

impl PointPair {
    pub fn new(a: Angle, b: Angle) -> Self {
        if a <= b {
            PointPair { lo: a, hi: b }
        } else {
            PointPair { lo: b, hi: a }
        }
    }

    pub fn first(&self) -> Angle {
        self.lo
    }

    pub fn second(&self) -> Angle {
        self.hi
    }

    pub fn points(&self) -> [Angle; 2] {
        [self.lo, self.hi]
    }
}

impl fmt::Debug for PointPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

impl FromStr for PointPair {
    type Err = CyclicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let (a, b) = body
            .split_once(',')
            .ok_or_else(|| CyclicError::Parse(s.into()))?;
        Ok(PointPair::new(a.parse()?, b.parse()?))
    }
}

/// Multiplicity of `c` in each half-open arc `[s_i, s_{i+1})`.
pub fn alpha_weights(set: &CyclicSet, c: &PointPair) -> Vec<i64> {
    let mut alpha = alloc::vec![0; set.len()];
    for p in c.points() {
        alpha[set.arc_containing(p)] += 1;
    }
    alpha
}

/// Multiplicity of `c` in `[s_0, s_i)`, i.e. partial sums of the α-weights.
pub fn eta_shifts(set: &CyclicSet, c: &PointPair) -> Vec<i64> {
    let alpha = alpha_weights(set, c);
    let mut eta = Vec::with_capacity(alpha.len());
    let mut acc = 0;
    for a in alpha {
        eta.push(acc);
        acc += a;
    }
    eta
}

/// A homotopy class of paths in the symmetric square between two point pairs.
///
/// The canonical representative moves each start point counterclockwise to
/// the end point it is matched with, using the matching of least total travel
/// (ties broken by matching in increasing order). `winding` adds that many
/// extra counterclockwise turns of the first moving point (negative values
/// turn clockwise).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PathClass {
    pub start: PointPair,
    pub end: PointPair,
    pub winding: i64,
}

/// One moving point of a canonical path: lifted start and lifted end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Strand {
    pub from: Turns,
    pub to: Turns,
}

impl PathClass {
    pub fn new(start: PointPair, end: PointPair, winding: i64) -> Self {
        PathClass {
            start,
            end,
            winding,
        }
    }

    pub fn constant(c: PointPair) -> Self {
        PathClass::new(c, c, 0)
    }

    fn canonical_matching(start: &PointPair, end: &PointPair) -> [(Angle, Angle); 2] {
        let [a, b] = start.points();
        let [c, d] = end.points();
        let straight = a.ccw_distance(c) + b.ccw_distance(d);
        let crossed = a.ccw_distance(d) + b.ccw_distance(c);
        if crossed < straight {
            [(a, d), (b, c)]
        } else {
            [(a, c), (b, d)]
        }
    }

    /// Total travel of the canonical path with zero winding.
    pub fn canonical_travel(start: &PointPair, end: &PointPair) -> Turns {
        Self::canonical_matching(start, end)
            .iter()
            .map(|(x, y)| x.ccw_distance(*y))
            .sum()
    }

    /// The two strands of the representative, winding included.
    pub fn strands(&self) -> [Strand; 2] {
        let m = Self::canonical_matching(&self.start, &self.end);
        let strand = |(x, y): (Angle, Angle), extra: i64| Strand {
            from: x.0,
            to: x.0 + x.ccw_distance(y) + Turns::from_integer(extra),
        };
        [strand(m[0], self.winding), strand(m[1], 0)]
    }

    /// Sum of the displacements of both points; a complete invariant of the
    /// class once the endpoints are fixed.
    pub fn travel(&self) -> Turns {
        Self::canonical_travel(&self.start, &self.end) + Turns::from_integer(self.winding)
    }

    /// The class with the given endpoints and total travel.
    pub fn from_travel(start: PointPair, end: PointPair, travel: Turns) -> Self {
        let w = travel - Self::canonical_travel(&start, &end);
        assert!(w.is_integer(), "travel {travel} incompatible with endpoints");
        PathClass::new(start, end, w.to_integer())
    }

    pub fn reverse(&self) -> Self {
        PathClass::from_travel(self.end, self.start, -self.travel())
    }

    /// `second` after `self`; the end of `self` must be the start of `second`.
    pub fn concat(&self, second: &PathClass) -> Self {
        assert_eq!(self.end, second.start, "paths do not meet");
        PathClass::from_travel(self.start, second.end, self.travel() + second.travel())
    }

    /// Image of the path under the piecewise-linear representative of `phi`.
    pub fn push_forward(&self, phi: &CyclicMorphism) -> Self {
        let travel = self
            .strands()
            .iter()
            .map(|s| phi.lift_point(s.to) - phi.lift_point(s.from))
            .sum();
        PathClass::from_travel(phi.map_pair(&self.start), phi.map_pair(&self.end), travel)
    }
}

/// Signed count of crossings of each `s_i`, counterclockwise counting `+1`.
pub fn beta_weights(set: &CyclicSet, path: &PathClass) -> Vec<i64> {
    let m = set.len() as i64;
    let mut beta = alloc::vec![0; set.len()];
    for strand in path.strands() {
        let (lo, hi, sign) = if strand.from <= strand.to {
            (strand.from, strand.to, 1)
        } else {
            (strand.to, strand.from, -1)
        };
        // lifted elements in (lo, hi]
        let base = lo.floor().to_integer() - 1;
        let mut k = base * m;
        loop {
            let p = set.lifted(k);
            if p > hi {
                break;
            }
            if p > lo {
                beta[k.rem_euclid(m) as usize] += sign;
            }
            k += 1;
        }
    }
    beta
}

/// Points `{x, y}` represented as a pair with both coordinates set.
pub fn pair(a: (i64, i64), b: (i64, i64)) -> PointPair {
    PointPair::new(Angle::from_fraction(a.0, a.1), Angle::from_fraction(b.0, b.1))
}

impl Angle {
    pub fn zero() -> Self {
        Angle(Turns::zero())
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(s: &str) -> CyclicSet {
        s.parse().unwrap()
    }

    /// Independent count of normalized lifts: lattice paths from `f(0)` that
    /// never decrease and end at most `f(0) + n`.
    fn count_lifts_brute(m: usize, n: usize) -> usize {
        fn paths(remaining: usize, lo: i64, hi: i64) -> usize {
            if remaining == 0 {
                return 1;
            }
            (lo..=hi).map(|v| paths(remaining - 1, v, hi)).sum()
        }
        (0..n as i64).map(|f0| paths(m - 1, f0, f0 + n as i64)).sum()
    }

    #[test]
    fn make_cyclic_set_examples() {
        let s = CyclicSet::new([
            Angle::from_fraction(1, 2),
            Angle::zero(),
            Angle::from_fraction(1, 2),
        ])
        .unwrap();
        assert_eq!(s.elements(), &[Angle::zero(), Angle::from_fraction(1, 2)]);
        assert_eq!(s.n(), 1);
        assert_eq!(set("3/4").n(), 0);
        assert_eq!(CyclicSet::new([]), Err(CyclicError::EmptySet));
        assert_eq!(set("5/4").elements(), &[Angle::from_fraction(1, 4)]);
    }

    #[test]
    fn make_morphism_examples() {
        let two = set("0,1/2");
        let one = set("0");
        assert!(CyclicMorphism::new(two.clone(), two.clone(), vec![0, 1]).is_ok());
        let a = CyclicMorphism::new(two.clone(), one.clone(), vec![0, 0]).unwrap();
        let b = CyclicMorphism::new(two.clone(), one.clone(), vec![0, 1]).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.set_map(1), b.set_map(1));
        assert!(matches!(
            CyclicMorphism::new(two.clone(), two.clone(), vec![1, 0]),
            Err(CyclicError::NotMonotone { .. })
        ));
        // normalization shifts by multiples of the target size
        let c = CyclicMorphism::new(two.clone(), two, vec![3, 4]).unwrap();
        assert_eq!(c.lift(), &[1, 2]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_lifts(1, 1).len(), 1);
        assert_eq!(enumerate_lifts(2, 1).len(), 2);
        assert_eq!(enumerate_lifts(1, 2).len(), 2);
        for m in 1..=5 {
            for n in 1..=5 {
                let lifts = enumerate_lifts(m, n);
                assert_eq!(lifts.len(), count_lifts_brute(m, n), "({m},{n})");
                let mut sorted = lifts.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), lifts.len());
            }
        }
    }

    #[test]
    fn composition_laws() {
        let sets: Vec<CyclicSet> = (1..=3).map(CyclicSet::standard).collect();
        for a in &sets {
            for b in &sets {
                for f in CyclicMorphism::enumerate(a, b) {
                    let l = CyclicMorphism::compose(&CyclicMorphism::identity(b), &f).unwrap();
                    let r = CyclicMorphism::compose(&f, &CyclicMorphism::identity(a)).unwrap();
                    assert_eq!(l, f);
                    assert_eq!(r, f);
                    for c in &sets {
                        for g in CyclicMorphism::enumerate(b, c) {
                            let gf = CyclicMorphism::compose(&g, &f).unwrap();
                            for d in &sets {
                                for h in CyclicMorphism::enumerate(c, d) {
                                    let left = CyclicMorphism::compose(&h, &gf).unwrap();
                                    let hg = CyclicMorphism::compose(&h, &g).unwrap();
                                    let right = CyclicMorphism::compose(&hg, &f).unwrap();
                                    assert_eq!(left, right);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn surjections_after_injections_reach_both_endomorphisms() {
        let one = CyclicSet::standard(1);
        let two = CyclicSet::standard(2);
        let mut reached = Vec::new();
        for s in CyclicMorphism::enumerate(&two, &one) {
            for i in CyclicMorphism::enumerate(&one, &two) {
                reached.push(CyclicMorphism::compose(&s, &i).unwrap());
            }
        }
        reached.sort();
        reached.dedup();
        // Hom(1,1) has a single element and it is reached
        assert_eq!(reached, CyclicMorphism::enumerate(&one, &one));
    }

    #[test]
    fn mismatch_is_rejected() {
        let f = CyclicMorphism::identity(&CyclicSet::standard(2));
        let g = CyclicMorphism::identity(&CyclicSet::standard(3));
        assert_eq!(CyclicMorphism::compose(&g, &f), Err(CyclicError::Mismatch));
    }

    #[test]
    fn factorization_recomposes() {
        for m in 1..=4 {
            for n in 1..=4 {
                let (a, b) = (CyclicSet::standard(m), CyclicSet::standard(n));
                for f in CyclicMorphism::enumerate(&a, &b) {
                    let fac = f.classify_and_factor();
                    assert!(fac.surj.is_surjective());
                    assert!(fac.inj.is_injective());
                    assert_eq!(CyclicMorphism::compose(&fac.inj, &fac.surj).unwrap(), f);
                    if f.is_injective() {
                        assert!(fac.surj.is_isomorphism());
                        assert_eq!(fac.image.len(), a.len());
                    }
                    if f.is_surjective() {
                        assert_eq!(fac.inj, CyclicMorphism::identity(&b));
                        assert_eq!(fac.surj, f);
                    }
                }
            }
        }
    }

    #[test]
    fn fibers_follow_the_lift() {
        let two = CyclicSet::standard(2);
        let one = CyclicSet::standard(1);
        let a = CyclicMorphism::new(two.clone(), one.clone(), vec![0, 0]).unwrap();
        let b = CyclicMorphism::new(two, one, vec![0, 1]).unwrap();
        assert_eq!(a.fiber(0), vec![0, 1]);
        assert_eq!(b.fiber(0), vec![1, 0]);
        let four = CyclicSet::standard(4);
        let three = CyclicSet::standard(3);
        let f = CyclicMorphism::new(four, three, vec![0, 0, 1, 3]).unwrap();
        // f̃(-1) = 3 - 3 = 0, so the fiber over t_0 wraps around s_0
        assert_eq!(f.fiber(0), vec![3, 0, 1]);
        assert_eq!(f.fiber(1), vec![2]);
        assert_eq!(f.fiber(2), Vec::<usize>::new());
    }

    #[test]
    fn alpha_examples() {
        let s = set("0,1/2");
        assert_eq!(alpha_weights(&s, &pair((1, 4), (1, 4))), vec![2, 0]);
        assert_eq!(alpha_weights(&s, &pair((1, 2), (3, 4))), vec![0, 2]);
        assert_eq!(alpha_weights(&s, &pair((1, 4), (3, 4))), vec![1, 1]);
        assert_eq!(eta_shifts(&s, &pair((1, 4), (3, 4))), vec![0, 1]);
    }

    #[test]
    fn beta_examples() {
        let s = set("0,1/2");
        let c = pair((1, 4), (3, 4));
        assert_eq!(beta_weights(&s, &PathClass::constant(c)), vec![0, 0]);
        assert_eq!(beta_weights(&s, &PathClass::new(c, c, 1)), vec![1, 1]);
        let three = set("0,1/2,7/8");
        let moved = PathClass::new(pair((0, 1), (1, 4)), pair((0, 1), (3, 4)), 0);
        assert_eq!(beta_weights(&three, &moved), vec![0, 1, 0]);
    }

    #[test]
    fn path_algebra() {
        let c = pair((1, 4), (3, 4));
        let d = pair((1, 8), (1, 2));
        let g = PathClass::new(c, d, 2);
        assert_eq!(g.reverse().reverse(), g);
        let loop_ = g.concat(&g.reverse());
        assert_eq!(loop_, PathClass::constant(c));
        let h = PathClass::new(d, c, -1);
        assert_eq!(g.concat(&h).travel(), g.travel() + h.travel());
    }

    #[test]
    fn piecewise_linear_representative() {
        let two = CyclicSet::standard(2);
        let four = CyclicSet::standard(4);
        let f = CyclicMorphism::new(two, four, vec![1, 3]).unwrap();
        assert_eq!(f.map_point(Angle::zero()), Angle::from_fraction(1, 4));
        assert_eq!(f.map_point(Angle::from_fraction(1, 4)), Angle::from_fraction(2, 4));
        assert_eq!(f.lift_point(Turns::new(3, 4)), Turns::new(1, 1));
        // collapsed arcs land exactly on the image point
        let one = CyclicSet::standard(1);
        let g = CyclicMorphism::new(CyclicSet::standard(2), one, vec![0, 0]).unwrap();
        assert_eq!(g.map_point(Angle::from_fraction(1, 8)), Angle::zero());
    }

    #[test]
    fn text_forms() {
        assert_eq!(parse_lift("lift=(0, 1,3)").unwrap(), vec![0, 1, 3]);
        assert!(parse_lift("0,1").is_err());
        let f = CyclicMorphism::new(set("0,1/2"), set("0"), vec![0, 1]).unwrap();
        assert_eq!(alloc::format!("{f}"), "[0/1,1/2] -> [0/1] lift=(0,1)");
        assert_eq!("{1/4, 3/4}".parse::<PointPair>().unwrap(), pair((3, 4), (1, 4)));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn angle() -> impl Strategy<Value = Angle> {
            (0i64..24).prop_map(|k| Angle::from_fraction(k, 24))
        }

        fn cyclic_set() -> impl Strategy<Value = CyclicSet> {
            proptest::collection::vec(angle(), 1..6).prop_map(|v| CyclicSet::new(v).unwrap())
        }

        proptest! {
            #[test]
            fn alpha_sums_to_two(s in cyclic_set(), a in angle(), b in angle()) {
                let alpha = alpha_weights(&s, &PointPair::new(a, b));
                prop_assert_eq!(alpha.iter().sum::<i64>(), 2);
                prop_assert!(alpha.iter().all(|x| (0..=2).contains(x)));
            }

            #[test]
            fn winding_adds_uniformly(s in cyclic_set(), a in angle(), b in angle(),
                                      c in angle(), d in angle(), w in -3i64..4) {
                let start = PointPair::new(a, b);
                let end = PointPair::new(c, d);
                let b0 = beta_weights(&s, &PathClass::new(start, end, 0));
                let bw = beta_weights(&s, &PathClass::new(start, end, w));
                for (x, y) in b0.iter().zip(&bw) {
                    prop_assert_eq!(y - x, w);
                }
            }

            #[test]
            fn beta_transports_alpha(s in cyclic_set(), a in angle(), b in angle(),
                                     c in angle(), d in angle(), w in -2i64..3) {
                let start = PointPair::new(a, b);
                let end = PointPair::new(c, d);
                let beta = beta_weights(&s, &PathClass::new(start, end, w));
                let a0 = alpha_weights(&s, &start);
                let a1 = alpha_weights(&s, &end);
                let m = s.len();
                for i in 0..m {
                    prop_assert_eq!(a1[i], a0[i] + beta[i] - beta[(i + 1) % m]);
                }
            }
        }
    }
}
