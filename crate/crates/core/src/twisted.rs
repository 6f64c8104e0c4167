//! One-sided twisted complexes over an A∞-category.
//!
//! A twisted complex is a list of shifted objects `(x_0[σ_0], …, x_r[σ_r])`
//! with a strictly lower-triangular differential `δ` (components `i → j` only
//! for `j > i`) of degree one satisfying `Σ_d μ_d(δ, …, δ) = 0`.
//!
//! Shifts follow the rule `deg_{hom(x[σ], y[τ])}(g) = |g| + τ - σ`, and the
//! structure maps on shifted objects are `(-1)^{σ_0 + … + σ_{d-1}} μ_d`, where
//! `σ_k` is the shift of the source of the `(k+1)`-th argument. Coefficients of
//! `δ` are stored in this shifted normalization. A component whose source has
//! shift `σ` and whose stored coefficient is `(-1)^σ` is called *plain*; plain
//! coefficients are unchanged by shifting a whole complex.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt::Debug;

use thiserror::Error;

use crate::ainf::{exact_preimage, AInfCategory, Grading};
use crate::categories::{BaseGen, BaseObj, CategoryMutation, CyclicCategory};
use crate::combo::{expand_product, Combo};
use crate::field::Field;
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwEntry<O> {
    pub object: O,
    pub shift: i64,
}

/// A basis element of `hom(X, Y)`: a base generator from entry `from` of `X`
/// to entry `to` of `Y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwGen<G> {
    pub from: usize,
    pub to: usize,
    pub gen: G,
}

impl<G> TwGen<G> {
    pub fn new(from: usize, to: usize, gen: G) -> Self {
        TwGen { from, to, gen }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TwistedComplex<O, G: Ord, F> {
    entries: Vec<TwEntry<O>>,
    delta: BTreeMap<(usize, usize), Combo<G, F>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwError {
    #[error("differential component {from} -> {to} is not strictly lower triangular")]
    NotTriangular { from: usize, to: usize },
    #[error("differential component {from} -> {to} refers to a missing entry")]
    OutOfRange { from: usize, to: usize },
    #[error("differential component {from} -> {to} does not have degree one")]
    WrongDegree { from: usize, to: usize },
    #[error("Maurer-Cartan equation fails on component {from} -> {to}")]
    MaurerCartan { from: usize, to: usize },
}

impl<O: Clone + Ord, G: Clone + Ord, F: Field> TwistedComplex<O, G, F> {
    /// A complex without differential.
    pub fn from_entries(entries: Vec<TwEntry<O>>) -> Self {
        TwistedComplex {
            entries,
            delta: BTreeMap::new(),
        }
    }

    pub fn single(object: O, shift: i64) -> Self {
        Self::from_entries(alloc::vec![TwEntry { object, shift }])
    }

    pub fn empty() -> Self {
        Self::from_entries(Vec::new())
    }

    /// Builds a complex from stored (shift-normalized) differential components.
    pub fn new(entries: Vec<TwEntry<O>>, delta: impl IntoIterator<Item = ((usize, usize), Combo<G, F>)>) -> Result<Self, TwError> {
        let mut out = Self::from_entries(entries);
        for ((from, to), c) in delta {
            out.add_delta(from, to, &c)?;
        }
        Ok(out)
    }

    /// Adds `c` to the component `from → to`, given with plain coefficients.
    pub fn add_plain_delta(&mut self, from: usize, to: usize, c: &Combo<G, F>) -> Result<(), TwError> {
        let sign = F::sign(self.entries.get(from).map_or(0, |e| e.shift));
        self.add_delta(from, to, &c.scaled(&sign))
    }

    /// Adds `c` to the stored component `from → to`.
    pub fn add_delta(&mut self, from: usize, to: usize, c: &Combo<G, F>) -> Result<(), TwError> {
        if from >= self.entries.len() || to >= self.entries.len() {
            return Err(TwError::OutOfRange { from, to });
        }
        if to <= from {
            return Err(TwError::NotTriangular { from, to });
        }
        let slot = self.delta.entry((from, to)).or_default();
        slot.add_scaled(c, &F::one());
        if slot.is_zero() {
            self.delta.remove(&(from, to));
        }
        Ok(())
    }

    pub fn entries(&self) -> &[TwEntry<O>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn shift_of(&self, i: usize) -> i64 {
        self.entries[i].shift
    }

    /// Stored component `from → to`, if nonzero.
    pub fn delta(&self, from: usize, to: usize) -> Option<&Combo<G, F>> {
        self.delta.get(&(from, to))
    }

    pub fn delta_components(&self) -> impl Iterator<Item = (&(usize, usize), &Combo<G, F>)> {
        self.delta.iter()
    }

    /// Component `from → to` with plain coefficients.
    pub fn plain_delta(&self, from: usize, to: usize) -> Combo<G, F> {
        self.delta(from, to)
            .map(|c| c.scaled(&F::sign(self.shift_of(from))))
            .unwrap_or_default()
    }

    /// Increasing chains `from = c_0 < … < c_r = to` with nonzero components.
    pub fn delta_paths(&self, from: usize, to: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = alloc::vec![from];
        self.paths_rec(to, &mut cur, &mut out);
        out
    }

    fn paths_rec(&self, to: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *cur.last().expect("nonempty");
        if last == to {
            out.push(cur.clone());
            return;
        }
        for next in last + 1..=to {
            if self.delta.contains_key(&(last, next)) {
                cur.push(next);
                self.paths_rec(to, cur, out);
                cur.pop();
            }
        }
    }

    pub(crate) fn raw_shift(&self, k: i64) -> Self {
        let sign = F::sign(k);
        TwistedComplex {
            entries: self
                .entries
                .iter()
                .map(|e| TwEntry {
                    object: e.object.clone(),
                    shift: e.shift + k,
                })
                .collect(),
            delta: self.delta.iter().map(|(k, c)| (*k, c.scaled(&sign))).collect(),
        }
    }

    pub(crate) fn reduce_shifts(mut self, grading: Grading) -> Self {
        for e in &mut self.entries {
            e.shift = grading.reduce(e.shift);
        }
        self
    }

    /// Drops the entries for which `keep` is false, with their components.
    fn retain_entries(&self, keep: impl Fn(&O) -> bool) -> (Self, Vec<Option<usize>>) {
        let mut index = Vec::with_capacity(self.entries.len());
        let mut entries = Vec::new();
        for e in &self.entries {
            if keep(&e.object) {
                index.push(Some(entries.len()));
                entries.push(e.clone());
            } else {
                index.push(None);
            }
        }
        let delta = self
            .delta
            .iter()
            .filter_map(|(&(i, j), c)| Some(((index[i]?, index[j]?), c.clone())))
            .collect();
        (TwistedComplex { entries, delta }, index)
    }
}

/// Twisted complexes over `base`, as an A∞-category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwCategory<B> {
    base: B,
}

pub type TwObj<F, B> = TwistedComplex<<B as AInfCategory<F>>::Obj, <B as AInfCategory<F>>::Gen, F>;

/// One base-level term of a δ-insertion sum: the object chain with shifts
/// and the factors in path order.
pub(crate) type Chain<O> = Vec<(O, i64)>;

/// Summand of a δ-insertion sum before expansion.
struct Route<O, G: Ord, F> {
    start: usize,
    end: usize,
    chain: Chain<O>,
    factors: Vec<Combo<G, F>>,
}

/// Expands every way of inserting differentials before, between and after
/// the arguments. `args[k]` goes from `complexes[k]` to `complexes[k + 1]`.
/// Routes longer than `max_arity` are skipped. Each route is reported with
/// its start entry in the first complex and end entry in the last.
fn for_each_route<O: Clone + Ord, G: Clone + Ord, F: Field>(
    complexes: &[&TwistedComplex<O, G, F>],
    args: &[TwGen<G>],
    max_arity: Option<usize>,
    mut visit: impl FnMut(Route<O, G, F>),
) {
    let d = args.len();
    debug_assert_eq!(complexes.len(), d + 1);
    let mut segments: Vec<Vec<Vec<usize>>> = Vec::with_capacity(d + 1);
    if d == 0 {
        let x = complexes[0];
        let mut all = Vec::new();
        for s in 0..x.len() {
            for e in s + 1..x.len() {
                all.extend(x.delta_paths(s, e));
            }
        }
        segments.push(all);
    } else {
        let first = complexes[0];
        let mut head = Vec::new();
        for s in 0..=args[0].from {
            head.extend(first.delta_paths(s, args[0].from));
        }
        segments.push(head);
        for k in 1..d {
            segments.push(complexes[k].delta_paths(args[k - 1].to, args[k].from));
        }
        let last = complexes[d];
        let mut tail = Vec::new();
        for e in args[d - 1].to..last.len() {
            tail.extend(last.delta_paths(args[d - 1].to, e));
        }
        segments.push(tail);
    }
    if segments.iter().any(Vec::is_empty) {
        return;
    }
    let mut choice = alloc::vec![0usize; segments.len()];
    loop {
        let arity = d + choice.iter().enumerate().map(|(k, &c)| segments[k][c].len() - 1).sum::<usize>();
        if max_arity.is_none_or(|m| arity <= m) {
            let mut chain = Vec::with_capacity(arity + 1);
            let mut factors = Vec::with_capacity(arity);
            for (k, &c) in choice.iter().enumerate() {
                let path = &segments[k][c];
                let x = complexes[k];
                for w in path.windows(2) {
                    factors.push(x.delta[&(w[0], w[1])].clone());
                }
                chain.extend(path.iter().map(|&i| (x.entries[i].object.clone(), x.entries[i].shift)));
                if k < d {
                    factors.push(Combo::basis(args[k].gen.clone()));
                }
            }
            visit(Route {
                start: segments[0][choice[0]][0],
                end: *segments[d][choice[d]].last().expect("nonempty path"),
                chain,
                factors,
            });
        }
        // odometer
        let mut k = 0;
        loop {
            if k == choice.len() {
                return;
            }
            choice[k] += 1;
            if choice[k] < segments[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Sums `eval` over every δ-insertion route, weighting by the product of the
/// factor coefficients, grouped by `(start entry, end entry)`.
pub(crate) fn insertion_sum<O, G, F, H>(
    complexes: &[&TwistedComplex<O, G, F>],
    args: &[TwGen<G>],
    max_arity: Option<usize>,
    mut eval: impl FnMut(&Chain<O>, &[G]) -> Combo<H, F>,
) -> BTreeMap<(usize, usize), Combo<H, F>>
where
    O: Clone + Ord,
    G: Clone + Ord,
    F: Field,
    H: Clone + Ord,
{
    let mut out: BTreeMap<(usize, usize), Combo<H, F>> = BTreeMap::new();
    for_each_route(complexes, args, max_arity, |route| {
        let refs: Vec<&Combo<G, F>> = route.factors.iter().collect();
        for (tuple, c) in expand_product(&refs) {
            let value = eval(&route.chain, &tuple);
            if !value.is_zero() {
                out.entry((route.start, route.end)).or_default().add_scaled(&value, &c);
            }
        }
    });
    out.retain(|_, c| !c.is_zero());
    out
}

impl<B> TwCategory<B> {
    pub fn new(base: B) -> Self {
        TwCategory { base }
    }

    pub fn base(&self) -> &B {
        &self.base
    }
}

impl<B> TwCategory<B> {
    /// `μ_d` of the shifted enlargement on a base-level chain.
    pub(crate) fn shifted_mu<F: Field>(base: &B, chain: &Chain<B::Obj>, tuple: &[B::Gen]) -> Combo<B::Gen, F>
    where
        B: AInfCategory<F>,
    {
        if !base.arity_may_be_nonzero(tuple.len()) {
            return Combo::zero();
        }
        let objs: Vec<B::Obj> = chain.iter().map(|(o, _)| o.clone()).collect();
        let value = base.mu(&objs, tuple);
        if value.is_zero() {
            return value;
        }
        let sign: i64 = chain[..tuple.len()].iter().map(|(_, s)| s).sum();
        value.scaled(&F::sign(sign))
    }

    /// Nonzero components of `Σ_d μ_d(δ, …, δ)`.
    pub fn curvature<F: Field>(&self, x: &TwObj<F, B>) -> BTreeMap<(usize, usize), Combo<B::Gen, F>>
    where
        B: AInfCategory<F>,
    {
        insertion_sum(&[x], &[], self.base.arity_bound(), |chain, tuple| {
            Self::shifted_mu(&self.base, chain, tuple)
        })
    }

    /// Checks triangularity, the degree of `δ`, and the Maurer–Cartan equation.
    pub fn validate_mc<F: Field>(&self, x: &TwObj<F, B>) -> Result<(), TwError>
    where
        B: AInfCategory<F>,
    {
        let grading = self.base.grading();
        for (&(from, to), c) in x.delta_components() {
            if to <= from {
                return Err(TwError::NotTriangular { from, to });
            }
            let (a, b) = (&x.entries[from], &x.entries[to]);
            for g in c.labels() {
                let deg = self.base.degree(&a.object, &b.object, g) + b.shift - a.shift;
                if !grading.same(deg, 1) {
                    return Err(TwError::WrongDegree { from, to });
                }
            }
        }
        match self.curvature(x).into_keys().next() {
            Some((from, to)) => Err(TwError::MaurerCartan { from, to }),
            None => Ok(()),
        }
    }

    /// `X[k]`: every shift raised by `k`, reduced in the two-periodic case.
    pub fn shift<F: Field>(&self, x: &TwObj<F, B>, k: i64) -> TwObj<F, B>
    where
        B: AInfCategory<F>,
    {
        x.raw_shift(k).reduce_shifts(self.base.grading())
    }

    /// Removes entries that are zero objects (objects with a vanishing unit).
    pub fn normalize<F: Field>(&self, x: &TwObj<F, B>) -> TwObj<F, B>
    where
        B: AInfCategory<F>,
    {
        self.normalize_with_index(x).0
    }

    /// As [`TwCategory::normalize`], also returning where each old entry went.
    pub fn normalize_with_index<F: Field>(&self, x: &TwObj<F, B>) -> (TwObj<F, B>, Vec<Option<usize>>)
    where
        B: AInfCategory<F>,
    {
        x.retain_entries(|o| !self.base.unit(o).is_zero())
    }

    pub fn is_zero_object<F: Field>(&self, o: &B::Obj) -> bool
    where
        B: AInfCategory<F>,
    {
        self.base.unit(o).is_zero()
    }
}

impl<F: Field, B: AInfCategory<F>> AInfCategory<F> for TwCategory<B> {
    type Obj = TwObj<F, B>;
    type Gen = TwGen<B::Gen>;

    fn grading(&self) -> Grading {
        self.base.grading()
    }

    fn basis(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Gen> {
        let mut out = Vec::new();
        for (i, a) in x.entries.iter().enumerate() {
            for (j, b) in y.entries.iter().enumerate() {
                out.extend(self.base.basis(&a.object, &b.object).into_iter().map(|g| TwGen::new(i, j, g)));
            }
        }
        out
    }

    fn degree(&self, x: &Self::Obj, y: &Self::Obj, g: &Self::Gen) -> i64 {
        let (a, b) = (&x.entries[g.from], &y.entries[g.to]);
        self.base.degree(&a.object, &b.object, &g.gen) + b.shift - a.shift
    }

    fn unit(&self, x: &Self::Obj) -> Combo<Self::Gen, F> {
        let mut out = Combo::zero();
        for (i, e) in x.entries.iter().enumerate() {
            for (g, c) in self.base.unit(&e.object).iter() {
                out.add_term(TwGen::new(i, i, g.clone()), c.clone());
            }
        }
        out
    }

    fn mu(&self, objs: &[Self::Obj], args: &[Self::Gen]) -> Combo<Self::Gen, F> {
        let complexes: Vec<&Self::Obj> = objs.iter().collect();
        let sums = insertion_sum(&complexes, args, self.base.arity_bound(), |chain, tuple| {
            Self::shifted_mu(&self.base, chain, tuple)
        });
        let mut out = Combo::zero();
        for ((s, e), c) in sums {
            for (g, x) in c.iter() {
                out.add_term(TwGen::new(s, e, g.clone()), x.clone());
            }
        }
        out
    }

    fn arity_bound(&self) -> Option<usize> {
        None
    }
}

/// Twisted complexes over a cyclic category.
pub type CyclicTw = TwCategory<CyclicCategory>;
pub type CyclicComplex<F> = TwistedComplex<BaseObj, BaseGen, F>;

impl CyclicTw {
    /// `(s_start → s_{start+1} → … )` with `len` entries, consecutive
    /// generators as plain differential, first entry shifted by `shift`.
    /// Later shifts are forced by the degree of `δ`.
    pub fn interval<F: Field>(&self, start: usize, len: usize, shift: i64) -> CyclicComplex<F> {
        let cat = &self.base;
        let m = cat.size();
        let grading = AInfCategory::<F>::grading(cat);
        let mut entries = Vec::with_capacity(len);
        let mut sigma = shift;
        for k in 0..len {
            let i = (start + k) % m;
            entries.push(TwEntry {
                object: BaseObj::Point(i),
                shift: grading.reduce(sigma),
            });
            sigma += 1 - cat.generator_degree(i);
        }
        let mut x = TwistedComplex::from_entries(entries);
        for k in 0..len.saturating_sub(1) {
            let gen = BaseGen::V((start + k) % m);
            x.add_plain_delta(k, k + 1, &Combo::basis(gen)).expect("consecutive entries");
        }
        x
    }

    /// The single point `s_i[shift]`.
    pub fn point<F: Field>(&self, i: usize, shift: i64) -> CyclicComplex<F> {
        TwistedComplex::single(BaseObj::Point(i), AInfCategory::<F>::grading(&self.base).reduce(shift))
    }
}

/// Deliberate corruptions of the isomorphism check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoMutation {
    /// Remove the differential component between the first two entries of
    /// the interval complex.
    DropDeltaComponent,
    /// Run the check over a corrupted base category.
    Category(CategoryMutation),
}

/// Witness data of the isomorphism `s_0 ≅ (s_1 → … → s_n)[1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate<F> {
    /// `λ` with `μ_2(b, a) = λ · id_{s_0}` in cohomology.
    pub first_scalar: F,
    /// `λ'` with `μ_2(a, b) = λ' · id` on the interval complex in cohomology.
    pub second_scalar: F,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoViolation {
    #[error("at least two points are required")]
    TooSmall,
    #[error("the {0} morphism is not closed")]
    NotClosed(&'static str),
    #[error("the {0} composite is not an invertible multiple of the identity in cohomology")]
    NotInvertible(&'static str),
    #[error("interval complex fails validation: {0}")]
    Invalid(TwError),
}

/// `λ` with `composite - λ·id ∈ im μ_1`, provided `id` is not exact.
pub fn unit_multiple_in_cohomology<F: Field, C: AInfCategory<F>>(
    cat: &C,
    x: &C::Obj,
    composite: &Combo<C::Gen, F>,
) -> Option<F> {
    let unit = cat.unit(x);
    if exact_preimage(cat, x, x, &unit).is_some() {
        return None;
    }
    let basis = cat.basis(x, x);
    let objs = [x.clone(), x.clone()];
    let mut m = Matrix::zeros(basis.len(), basis.len() + 1);
    for (c, g) in basis.iter().enumerate() {
        let image = cat.mu(&objs, core::slice::from_ref(g));
        for (r, h) in basis.iter().enumerate() {
            m.set(r, c, image.coeff(h));
        }
    }
    for (r, h) in basis.iter().enumerate() {
        m.set(r, basis.len(), unit.coeff(h));
    }
    let rhs: Vec<F> = basis.iter().map(|g| composite.coeff(g)).collect();
    let sol = m.solve(&rhs)?;
    Some(sol[basis.len()].clone())
}

/// Verifies that `s_0` and `(s_1 → … → s_n)[1]` are isomorphic in twisted
/// complexes over the two-periodic category with zero object, through the
/// closed degree-zero morphisms induced by `v_0` and `v_n`.
pub fn check_iso_s0<F: Field>(
    set: &crate::cyclic::CyclicSet,
    mutation: Option<IsoMutation>,
) -> Result<IsoCertificate<F>, IsoViolation> {
    let m = set.len();
    if m < 2 {
        return Err(IsoViolation::TooSmall);
    }
    let mut base = CyclicCategory::two_periodic_with_zero(set);
    if let Some(IsoMutation::Category(m)) = mutation {
        base = base.with_mutation(m);
    }
    let tw = TwCategory::new(base);
    let x: CyclicComplex<F> = tw.point(0, 0);
    let mut interval: CyclicComplex<F> = tw.interval(1, m - 1, 0);
    if mutation == Some(IsoMutation::DropDeltaComponent) && m > 2 {
        let c = interval.delta(0, 1).cloned().unwrap_or_default();
        interval.add_delta(0, 1, &c.scaled(&-F::one())).map_err(IsoViolation::Invalid)?;
    }
    tw.validate_mc(&interval).map_err(IsoViolation::Invalid)?;
    let y = tw.shift(&interval, 1);
    let last = m - 2;
    // plain coefficient one on both maps
    let a: Combo<TwGen<BaseGen>, F> = Combo::term(TwGen::new(0, 0, BaseGen::V(0)), F::sign(x.shift_of(0)));
    let b: Combo<TwGen<BaseGen>, F> = Combo::term(TwGen::new(last, 0, BaseGen::V(m - 1)), F::sign(y.shift_of(last)));
    let apply = |objs: &[CyclicComplex<F>], factors: &[&Combo<TwGen<BaseGen>, F>]| {
        let mut acc = Combo::zero();
        for (tuple, c) in expand_product(factors) {
            acc.add_scaled(&tw.mu(objs, &tuple), &c);
        }
        acc
    };
    if !apply(&[x.clone(), y.clone()], &[&a]).is_zero() {
        return Err(IsoViolation::NotClosed("forward"));
    }
    if !apply(&[y.clone(), x.clone()], &[&b]).is_zero() {
        return Err(IsoViolation::NotClosed("backward"));
    }
    let ba = apply(&[x.clone(), y.clone(), x.clone()], &[&a, &b]);
    let ab = apply(&[y.clone(), x.clone(), y.clone()], &[&b, &a]);
    let first = unit_multiple_in_cohomology(&tw, &x, &ba)
        .filter(|l| !l.is_zero())
        .ok_or(IsoViolation::NotInvertible("first"))?;
    let second = unit_multiple_in_cohomology(&tw, &y, &ab)
        .filter(|l| !l.is_zero())
        .ok_or(IsoViolation::NotInvertible("second"))?;
    Ok(IsoCertificate {
        first_scalar: first,
        second_scalar: second,
    })
}
