//! Pullback functors along cyclic maps.
//!
//! Every functor here is stored by its values on the generators of the source
//! cyclic category, with twisted complexes as values, and is extended to
//! twisted complexes on demand. Composites are computed honestly from the
//! pieces, so comparing `(g∘f)*` with `f*∘g*` is a structural check.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::ainf::{compare_functors, for_each_tuple, sum_over_compositions, AInfCategory, AInfFunctor, FunctorDifference, Grading};
use crate::categories::{BaseGen, BaseObj, CyclicCategory};
use crate::combo::Combo;
use crate::cyclic::{beta_weights, enumerate_lifts, eta_shifts, CyclicMorphism, CyclicSet, PathClass, PointPair, Turns};
use crate::field::Field;
use crate::twisted::{insertion_sum, Chain, CyclicComplex, CyclicTw, TwCategory, TwGen, TwistedComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("map is not injective")]
    NotInjective,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("target of the inner functor is not twisted complexes over the source of the outer one")]
    Mismatch,
    #[error("path does not start at the image of the point pair")]
    PathMismatch,
}

/// Which version of the categories to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    TwoPeriodic,
    /// Integer grading determined by a point pair on the source circle.
    Graded(PointPair),
}

/// Deliberate corruptions used to confirm that the checkers can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctorMutation {
    /// Zero the component of an injective pullback on the interval that
    /// starts at the image of `s_i`.
    ZeroInterval(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind<F> {
    Injective { lift: Vec<i64>, preimage: Vec<Option<usize>> },
    Surjective { fibers: Vec<Vec<usize>> },
    Reshift { shifts: Vec<i64> },
    Composite { outer: Box<GenFunctor<F>>, inner: Box<GenFunctor<F>> },
}

/// A functor from a cyclic category to twisted complexes over another one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenFunctor<F> {
    source: CyclicCategory,
    source_tw: CyclicTw,
    target: CyclicTw,
    images: Vec<CyclicComplex<F>>,
    kind: Kind<F>,
    normalize: bool,
    mutation: Option<FunctorMutation>,
}

fn categories(mode: &Mode, source: &CyclicSet, target: &CyclicSet, f: &CyclicMorphism) -> (CyclicCategory, CyclicCategory) {
    match mode {
        Mode::TwoPeriodic => (
            CyclicCategory::two_periodic_with_zero(target),
            CyclicCategory::two_periodic_with_zero(source),
        ),
        Mode::Graded(c) => (CyclicCategory::graded(target, &f.map_pair(c)), CyclicCategory::graded(source, c)),
    }
}

impl<F: Field> GenFunctor<F> {
    fn leaf(source: CyclicCategory, target: CyclicCategory, images: Vec<CyclicComplex<F>>, kind: Kind<F>) -> Self {
        GenFunctor {
            source_tw: TwCategory::new(source.clone()),
            source,
            target: TwCategory::new(target),
            images,
            kind,
            normalize: true,
            mutation: None,
        }
    }

    /// Pullback along an injective map `f: S → T`, from `T`'s category to
    /// twisted complexes over `S`'s. Points outside the image go to zero.
    pub fn injective(f: &CyclicMorphism, mode: &Mode) -> Result<Self, FunctorError> {
        Self::injective_with(f, mode, true)
    }

    fn injective_with(f: &CyclicMorphism, mode: &Mode, normalize: bool) -> Result<Self, FunctorError> {
        if !f.is_injective() {
            return Err(FunctorError::NotInjective);
        }
        let (src, tgt) = categories(mode, f.source(), f.target(), f);
        let mut preimage = vec![None; f.target().len()];
        for i in 0..f.source().len() {
            preimage[f.set_map(i)] = Some(i);
        }
        let images = preimage
            .iter()
            .map(|p| match p {
                Some(i) => TwistedComplex::single(BaseObj::Point(*i), 0),
                None if normalize => TwistedComplex::empty(),
                None => TwistedComplex::single(BaseObj::Zero, 0),
            })
            .collect();
        let kind = Kind::Injective {
            lift: f.lift().to_vec(),
            preimage,
        };
        let mut out = Self::leaf(src, tgt, images, kind);
        out.normalize = normalize;
        Ok(out)
    }

    /// Pullback along a surjective map: each point goes to the interval
    /// complex on its fiber.
    pub fn surjective(f: &CyclicMorphism, mode: &Mode) -> Result<Self, FunctorError> {
        if !f.is_surjective() {
            return Err(FunctorError::NotSurjective);
        }
        let (src, tgt) = categories(mode, f.source(), f.target(), f);
        let tw = TwCategory::new(tgt.clone());
        let fibers: Vec<Vec<usize>> = (0..f.target().len()).map(|t| f.fiber(t)).collect();
        let images = fibers.iter().map(|fib| tw.interval(fib[0], fib.len(), 0)).collect();
        Ok(Self::leaf(src, tgt, images, Kind::Surjective { fibers }))
    }

    /// `s_i ↦ s_i[shifts[i]]`, identity on generators.
    pub fn reshift(source: CyclicCategory, target: CyclicCategory, shifts: Vec<i64>) -> Self {
        let tw = TwCategory::new(target.clone());
        let images = shifts.iter().enumerate().map(|(i, &k)| tw.point(i, k)).collect();
        Self::leaf(source, target, images, Kind::Reshift { shifts })
    }

    /// `outer ∘ inner`, where `outer` acts through its extension to twisted
    /// complexes. With `normalize` off, zero entries are kept.
    pub fn compose(outer: &Self, inner: &Self, normalize: bool) -> Result<Self, FunctorError> {
        if inner.target != outer.source_tw {
            return Err(FunctorError::Mismatch);
        }
        let mut outer = outer.clone();
        outer.normalize = normalize;
        let images = inner.images.iter().map(|x| outer.extend_object(x)).collect();
        Ok(GenFunctor {
            source: inner.source.clone(),
            source_tw: inner.source_tw.clone(),
            target: outer.target.clone(),
            images,
            kind: Kind::Composite {
                outer: Box::new(outer),
                inner: Box::new(inner.clone()),
            },
            normalize,
            mutation: None,
        })
    }

    pub fn with_mutation(mut self, mutation: FunctorMutation) -> Self {
        self.mutation = Some(mutation);
        self
    }

    pub fn source_category(&self) -> &CyclicCategory {
        &self.source
    }

    pub fn target_category(&self) -> &CyclicTw {
        &self.target
    }

    pub fn image(&self, x: &BaseObj) -> CyclicComplex<F> {
        match x {
            BaseObj::Point(i) => self.images[*i].clone(),
            BaseObj::Zero if self.normalize => TwistedComplex::empty(),
            BaseObj::Zero => TwistedComplex::single(BaseObj::Zero, 0),
        }
    }

    /// Longest tuple with a possibly nonzero component.
    fn arity_bound(&self) -> Option<usize> {
        match &self.kind {
            Kind::Injective { preimage, .. } => Some(preimage.len()),
            Kind::Surjective { .. } | Kind::Reshift { .. } => Some(1),
            Kind::Composite { .. } => None,
        }
    }

    /// Same functor with degrees read modulo 2.
    pub fn periodicize(&self) -> Self {
        let source = self.source.periodicize();
        let target = self.target.base().periodicize();
        match &self.kind {
            Kind::Composite { outer, inner } => {
                Self::compose(&outer.periodicize(), &inner.periodicize(), self.normalize).expect("periodicizing keeps categories matched")
            }
            kind => GenFunctor {
                source_tw: TwCategory::new(source.clone()),
                source,
                target: TwCategory::new(target),
                images: self.images.iter().map(|x| x.clone().reduce_shifts(Grading::TwoPeriodic)).collect(),
                kind: kind.clone(),
                normalize: self.normalize,
                mutation: self.mutation,
            },
        }
    }

    /// The unit of the target on the image of `x`.
    fn image_unit(&self, x: &BaseObj) -> Combo<TwGen<BaseGen>, F> {
        self.target.unit(&self.image(x))
    }

    fn leaf_component(&self, objs: &[BaseObj], args: &[BaseGen]) -> Combo<TwGen<BaseGen>, F> {
        if let [BaseGen::Id(_)] = args {
            return self.image_unit(&objs[0]);
        }
        if args.iter().any(|g| matches!(g, BaseGen::Id(_))) {
            return Combo::zero();
        }
        let v = |g: &BaseGen| match g {
            BaseGen::V(i) => *i,
            BaseGen::Id(i) => *i,
        };
        match &self.kind {
            Kind::Injective { lift, preimage } => {
                let n = preimage.len();
                let first = v(&args[0]);
                let Some(i) = preimage[first] else {
                    return Combo::zero();
                };
                let m = lift.len();
                let next = if i + 1 < m { lift[i + 1] } else { lift[0] + n as i64 };
                let k = (next - lift[i]) as usize;
                if args.len() != k || args.iter().enumerate().any(|(j, g)| v(g) != (first + j) % n) {
                    return Combo::zero();
                }
                if self.mutation == Some(FunctorMutation::ZeroInterval(i)) {
                    return Combo::zero();
                }
                Combo::basis(TwGen::new(0, 0, BaseGen::V(i)))
            }
            Kind::Surjective { fibers } => {
                if args.len() != 1 {
                    return Combo::zero();
                }
                let t = v(&args[0]);
                let last = fibers[t].len() - 1;
                let sigma = self.images[t].shift_of(last);
                Combo::term(TwGen::new(last, 0, BaseGen::V(fibers[t][last])), F::sign(sigma))
            }
            Kind::Reshift { shifts } => {
                if args.len() != 1 {
                    return Combo::zero();
                }
                let i = v(&args[0]);
                Combo::term(TwGen::new(0, 0, BaseGen::V(i)), F::sign(shifts[i]))
            }
            Kind::Composite { .. } => unreachable!("composites are not leaves"),
        }
    }

    /// Entry offsets of each block in the flattened image of `x`, and where
    /// each flattened entry lands after normalization.
    fn layout(&self, x: &CyclicComplex<F>) -> (Vec<usize>, Vec<Option<usize>>) {
        let mut offsets = Vec::with_capacity(x.len());
        let mut index = Vec::new();
        let mut kept = 0;
        for e in x.entries() {
            offsets.push(index.len());
            for y in self.image(&e.object).entries() {
                if self.normalize && y.object == BaseObj::Zero {
                    index.push(None);
                } else {
                    index.push(Some(kept));
                    kept += 1;
                }
            }
        }
        (offsets, index)
    }

    /// Value of the functor on a base chain inside a twisted complex, with
    /// the sign coming from the shifts of the interior objects.
    fn chain_value(&self, chain: &Chain<BaseObj>, tuple: &[BaseGen]) -> Combo<TwGen<BaseGen>, F> {
        let objs: Vec<BaseObj> = chain.iter().map(|(o, _)| *o).collect();
        let value = AInfFunctor::component(self, &objs, tuple);
        if value.is_zero() {
            return value;
        }
        let sign: i64 = chain[1..tuple.len()].iter().map(|(_, s)| s).sum();
        value.scaled(&F::sign(sign))
    }

    /// Image of a twisted complex under the extended functor.
    pub fn extend_object(&self, x: &CyclicComplex<F>) -> CyclicComplex<F> {
        let mut entries = Vec::new();
        let mut offsets = Vec::with_capacity(x.len());
        let blocks: Vec<CyclicComplex<F>> = x.entries().iter().map(|e| self.image(&e.object).raw_shift(e.shift)).collect();
        for b in &blocks {
            offsets.push(entries.len());
            entries.extend_from_slice(b.entries());
        }
        let mut out = TwistedComplex::from_entries(entries);
        for (b, &off) in blocks.iter().zip(&offsets) {
            for (&(p, q), c) in b.delta_components() {
                out.add_delta(off + p, off + q, c).expect("block is triangular");
            }
        }
        let outer = insertion_sum(&[x], &[], self.arity_bound(), |chain, tuple| self.chain_value(chain, tuple));
        for ((i, j), combo) in outer {
            for (g, c) in combo.iter() {
                let piece = Combo::term(g.gen, c.clone());
                out.add_delta(offsets[i] + g.from, offsets[j] + g.to, &piece).expect("outer component points forward");
            }
        }
        let out = out.reduce_shifts(AInfCategory::<F>::grading(self.target.base()));
        if self.normalize {
            self.target.normalize(&out)
        } else {
            out
        }
    }

    /// Component of the extended functor on a composable tuple.
    pub fn extend_component(&self, objs: &[CyclicComplex<F>], args: &[TwGen<BaseGen>]) -> Combo<TwGen<BaseGen>, F> {
        let refs: Vec<&CyclicComplex<F>> = objs.iter().collect();
        let sums = insertion_sum(&refs, args, self.arity_bound(), |chain, tuple| self.chain_value(chain, tuple));
        let (first_off, first_idx) = self.layout(&objs[0]);
        let (last_off, last_idx) = self.layout(&objs[objs.len() - 1]);
        let mut out = Combo::zero();
        for ((s, e), c) in sums {
            for (g, x) in c.iter() {
                let from = first_idx[first_off[s] + g.from].expect("generators avoid zero entries");
                let to = last_idx[last_off[e] + g.to].expect("generators avoid zero entries");
                out.add_term(TwGen::new(from, to, g.gen), x.clone());
            }
        }
        out
    }

    /// The extension to twisted complexes as a functor in its own right.
    pub fn extension(&self) -> Extension<'_, F> {
        Extension { gen: self }
    }
}

impl<F: Field> AInfFunctor<F> for GenFunctor<F> {
    type Source = CyclicCategory;
    type Target = CyclicTw;

    fn source(&self) -> &CyclicCategory {
        &self.source
    }

    fn target(&self) -> &CyclicTw {
        &self.target
    }

    fn map_object(&self, x: &BaseObj) -> CyclicComplex<F> {
        self.image(x)
    }

    fn component(&self, objs: &[BaseObj], args: &[BaseGen]) -> Combo<TwGen<BaseGen>, F> {
        if objs.contains(&BaseObj::Zero) {
            return Combo::zero();
        }
        match &self.kind {
            Kind::Composite { outer, inner } => {
                let images: Vec<CyclicComplex<F>> = objs.iter().map(|x| inner.image(x)).collect();
                sum_over_compositions(inner.as_ref(), objs, args, &images, |o, a| outer.extend_component(o, a))
            }
            _ => self.leaf_component(objs, args),
        }
    }
}

/// A generator functor extended to twisted complexes.
pub struct Extension<'a, F> {
    gen: &'a GenFunctor<F>,
}

impl<'a, F: Field> AInfFunctor<F> for Extension<'a, F> {
    type Source = CyclicTw;
    type Target = CyclicTw;

    fn source(&self) -> &CyclicTw {
        &self.gen.source_tw
    }

    fn target(&self) -> &CyclicTw {
        &self.gen.target
    }

    fn map_object(&self, x: &CyclicComplex<F>) -> CyclicComplex<F> {
        self.gen.extend_object(x)
    }

    fn component(&self, objs: &[CyclicComplex<F>], args: &[TwGen<BaseGen>]) -> Combo<TwGen<BaseGen>, F> {
        self.gen.extend_component(objs, args)
    }
}

/// A functor given by explicit tables: object images and the nonzero
/// components on basis tuples. Missing tuples are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorTable<F> {
    pub source: CyclicCategory,
    pub target: CyclicTw,
    pub images: BTreeMap<BaseObj, CyclicComplex<F>>,
    pub components: BTreeMap<(Vec<BaseObj>, Vec<BaseGen>), Combo<TwGen<BaseGen>, F>>,
}

impl<F: Field> FunctorTable<F> {
    /// Records `gen` on every object and on every tuple of length `≤ max_len`.
    pub fn tabulate(gen: &GenFunctor<F>, max_len: usize) -> Self {
        let objects = gen.source.objects();
        let images = objects.iter().map(|x| (*x, gen.image(x))).collect();
        let mut components = BTreeMap::new();
        for d in 1..=max_len {
            for_each_tuple::<F, _>(&gen.source, &objects, d, |objs, args| {
                let value = AInfFunctor::component(gen, objs, args);
                if !value.is_zero() {
                    components.insert((objs.to_vec(), args.to_vec()), value);
                }
            });
        }
        FunctorTable {
            source: gen.source.clone(),
            target: gen.target.clone(),
            images,
            components,
        }
    }
}

impl<F: Field> AInfFunctor<F> for FunctorTable<F> {
    type Source = CyclicCategory;
    type Target = CyclicTw;

    fn source(&self) -> &CyclicCategory {
        &self.source
    }

    fn target(&self) -> &CyclicTw {
        &self.target
    }

    fn map_object(&self, x: &BaseObj) -> CyclicComplex<F> {
        self.images.get(x).cloned().unwrap_or_else(TwistedComplex::empty)
    }

    fn component(&self, objs: &[BaseObj], args: &[BaseGen]) -> Combo<TwGen<BaseGen>, F> {
        self.components.get(&(objs.to_vec(), args.to_vec())).cloned().unwrap_or_default()
    }
}

fn graded_mode_on(mode: &Mode, f: &CyclicMorphism) -> Mode {
    match mode {
        Mode::TwoPeriodic => Mode::TwoPeriodic,
        Mode::Graded(c) => Mode::Graded(f.map_pair(c)),
    }
}

/// `f*` for any cyclic map, via the image factorization `f = f_inj ∘ f_surj`.
pub fn full_pullback<F: Field>(f: &CyclicMorphism, mode: &Mode, normalize: bool) -> GenFunctor<F> {
    let fac = f.classify_and_factor();
    let mut surj = GenFunctor::surjective(&fac.surj, mode).expect("image factor is surjective");
    surj.normalize = normalize;
    let inj = GenFunctor::injective_with(&fac.inj, &graded_mode_on(mode, &fac.surj), normalize).expect("image inclusion is injective");
    GenFunctor::compose(&surj, &inj, normalize).expect("factors meet at the image")
}

/// `f* ∘ g*`.
pub fn pullback_composite<F: Field>(f: &CyclicMorphism, g: &CyclicMorphism, normalize: bool) -> GenFunctor<F> {
    let outer = full_pullback(f, &Mode::TwoPeriodic, normalize);
    let inner = full_pullback(g, &Mode::TwoPeriodic, normalize);
    GenFunctor::compose(&outer, &inner, normalize).expect("composable maps")
}

/// `s_i ↦ s_i[−β_i]` for a path `γ` on the circle of `set`, from the
/// category graded by `γ`'s start to the one graded by its end.
pub fn gamma_functor<F: Field>(set: &CyclicSet, gamma: &PathClass) -> GenFunctor<F> {
    let shifts = beta_weights(set, gamma).into_iter().map(|b| -b).collect();
    GenFunctor::reshift(CyclicCategory::graded(set, &gamma.start), CyclicCategory::graded(set, &gamma.end), shifts)
}

/// The graded pullback along `(φ, γ)`, where `γ` runs from `φ(c)` to some
/// `c′`: a functor from the category of `(T, c′)` to twisted complexes over
/// the category of `(S, c)`.
pub fn graded_pullback<F: Field>(phi: &CyclicMorphism, c: &PointPair, gamma: &PathClass) -> Result<GenFunctor<F>, FunctorError> {
    if gamma.start != phi.map_pair(c) {
        return Err(FunctorError::PathMismatch);
    }
    let full = full_pullback(phi, &Mode::Graded(*c), true);
    let path = gamma_functor(phi.target(), &gamma.reverse());
    GenFunctor::compose(&full, &path, true)
}

/// The identification `s_i ↦ s_i[η_i]` of the periodicized graded category
/// with the two-periodic one, `η_i` counting `c` in `[s_0, s_i)`.
pub fn shift_identification<F: Field>(set: &CyclicSet, c: &PointPair) -> GenFunctor<F> {
    shift_identification_with(set, c, 0)
}

/// [`shift_identification`] followed by a global shift by `offset`.
pub fn shift_identification_with<F: Field>(set: &CyclicSet, c: &PointPair, offset: i64) -> GenFunctor<F> {
    let shifts = eta_shifts(set, c).into_iter().map(|e| (e + offset).rem_euclid(2)).collect();
    GenFunctor::reshift(
        CyclicCategory::graded(set, c).periodicize(),
        CyclicCategory::two_periodic_with_zero(set),
        shifts,
    )
}

/// Straight-line path from `PL(ψ∘φ)(c)` to `PL(ψ)(PL(φ)(c))`.
pub fn composition_offset(phi: &CyclicMorphism, psi: &CyclicMorphism, c: &PointPair) -> PathClass {
    let comp = CyclicMorphism::compose(psi, phi).expect("composable maps");
    let u = psi.target().len() as i64;
    let turns = (psi.eval(phi.eval(0)) - comp.lift()[0]) / u;
    let start = comp.map_pair(c);
    let end = psi.map_pair(&phi.map_pair(c));
    let travel: Turns = c
        .points()
        .iter()
        .map(|p| psi.lift_point(phi.lift_point(p.value())) - comp.lift_point(p.value()) - Turns::from_integer(turns))
        .sum();
    PathClass::from_travel(start, end, travel)
}

/// Composite in the graded cyclic category: `(ψ, δ) ∘ (φ, γ)`.
pub fn graded_compose(
    phi: &CyclicMorphism,
    c: &PointPair,
    gamma: &PathClass,
    psi: &CyclicMorphism,
    delta: &PathClass,
) -> (CyclicMorphism, PathClass) {
    let comp = CyclicMorphism::compose(psi, phi).expect("composable maps");
    let path = composition_offset(phi, psi, c).concat(&gamma.push_forward(psi)).concat(delta);
    (comp, path)
}

pub type GenDifference<F> = FunctorDifference<BaseObj, BaseGen, CyclicComplex<F>, TwGen<BaseGen>, F>;

/// Both ways around the square relating the graded pullback along `(φ, γ)`
/// to the two-periodic pullback along `φ`; returns the mismatches.
pub fn check_graded_square<F: Field>(
    phi: &CyclicMorphism,
    c: &PointPair,
    gamma: &PathClass,
    max_len: usize,
) -> Result<Vec<GenDifference<F>>, FunctorError> {
    check_graded_square_with_offset(phi, c, gamma, 0, max_len)
}

/// Parity of the global shift separating the two ways around the square:
/// for any `t` in the image with fiber starting at `s_j`, the sum
/// `η_j(c) + η_t(φ(c))` plus the signed crossings of `t_0` by `γ`.
pub fn square_shift_parity(phi: &CyclicMorphism, c: &PointPair, gamma: &PathClass) -> i64 {
    let eta_source = eta_shifts(phi.source(), c);
    let eta_target = eta_shifts(phi.target(), &phi.map_pair(c));
    let t = phi.set_map(0);
    let first = phi.fiber(t)[0];
    (eta_source[first] + eta_target[t] + beta_weights(phi.target(), gamma)[0]).rem_euclid(2)
}

/// The square with the source identification shifted by `offset`.
pub fn check_graded_square_with_offset<F: Field>(
    phi: &CyclicMorphism,
    c: &PointPair,
    gamma: &PathClass,
    offset: i64,
    max_len: usize,
) -> Result<Vec<GenDifference<F>>, FunctorError> {
    let graded = graded_pullback::<F>(phi, c, gamma)?.periodicize();
    let left = GenFunctor::compose(&shift_identification_with(phi.source(), c, offset), &graded, true)?;
    let right = GenFunctor::compose(
        &full_pullback(phi, &Mode::TwoPeriodic, true),
        &shift_identification(phi.target(), &gamma.end),
        true,
    )?;
    let objects = left.source().objects();
    Ok(compare_functors(&left, &right, &objects, max_len))
}

/// Compares `(g∘f)*` with `f*∘g*` on every object and every tuple of length
/// at most `max_len`.
pub fn check_pair<F: Field>(f: &CyclicMorphism, g: &CyclicMorphism, normalize: bool, max_len: usize) -> Vec<GenDifference<F>> {
    let gf = CyclicMorphism::compose(g, f).expect("composable maps");
    let left = full_pullback::<F>(&gf, &Mode::TwoPeriodic, normalize);
    let right = pullback_composite::<F>(f, g, normalize);
    compare_functors(&left, &right, &left.source().objects(), max_len)
}

/// Every composable pair `(f, g)` of maps between standard sets with sizes
/// in `1..=max_size`.
pub fn composable_pairs(max_size: usize) -> Vec<(CyclicMorphism, CyclicMorphism)> {
    let mut out = Vec::new();
    for a in 1..=max_size {
        for b in 1..=max_size {
            let fs = CyclicMorphism::enumerate(&CyclicSet::standard(a), &CyclicSet::standard(b));
            for c in 1..=max_size {
                let gs = CyclicMorphism::enumerate(&CyclicSet::standard(b), &CyclicSet::standard(c));
                for f in &fs {
                    for g in &gs {
                        out.push((f.clone(), g.clone()));
                    }
                }
            }
        }
    }
    out
}

/// Tuple length used when comparing pullbacks into a set of size `n`.
pub fn pair_max_len(target_size: usize) -> usize {
    target_size + 2
}

pub struct PairFailure<F> {
    pub f: CyclicMorphism,
    pub g: CyclicMorphism,
    pub differences: Vec<GenDifference<F>>,
}

pub struct TheoremReport<F> {
    pub pairs_checked: usize,
    pub failures: Vec<PairFailure<F>>,
}

impl<F> TheoremReport<F> {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs [`check_pair`] over all composable pairs with sizes `≤ max_size`.
pub fn check_composition_theorem<F: Field>(max_size: usize, normalize: bool) -> TheoremReport<F> {
    let pairs = composable_pairs(max_size);
    let mut failures = Vec::new();
    for (f, g) in &pairs {
        let differences = check_pair::<F>(f, g, normalize, pair_max_len(g.target().len()));
        if !differences.is_empty() {
            failures.push(PairFailure {
                f: f.clone(),
                g: g.clone(),
                differences,
            });
        }
    }
    TheoremReport {
        pairs_checked: pairs.len(),
        failures,
    }
}

fn standard_map(source: usize, target: usize, lift: Vec<i64>) -> CyclicMorphism {
    CyclicMorphism::new(CyclicSet::standard(source), CyclicSet::standard(target), lift).expect("valid lift")
}

/// Inject `n + 1` points into `n + 2` (missing the last one), then collapse
/// the extra point onto the last of the originals. The composite is the identity.
pub fn extra_point_collapsed(n: usize) -> (CyclicMorphism, CyclicMorphism) {
    let m = n as i64 + 1;
    let inj = standard_map(n + 1, n + 2, (0..m).collect());
    let mut lift: Vec<i64> = (0..m).collect();
    lift.push(m - 1);
    (inj, standard_map(n + 2, n + 1, lift))
}

/// Inject `n + 1` points into `n + 2`, then collapse `s_{i0}` onto
/// `s_{i0 − 1}`. Needs `1 ≤ i0 ≤ n`.
pub fn collapse_away_from_extra(n: usize, i0: usize) -> (CyclicMorphism, CyclicMorphism) {
    let m = n as i64 + 1;
    let inj = standard_map(n + 1, n + 2, (0..m).collect());
    let lift = (0..=m).map(|j| if j < i0 as i64 { j } else { j - 1 }).collect();
    (inj, standard_map(n + 2, n + 1, lift))
}

/// Inject `n + 1` points into `n + 2`, then collapse `s_n` onto `s_{n−1}`.
/// Needs `n ≥ 1`.
pub fn collapse_last_pair(n: usize) -> (CyclicMorphism, CyclicMorphism) {
    collapse_away_from_extra(n, n)
}

/// All lifts between standard sets, as morphisms.
pub fn all_maps(source: usize, target: usize) -> Vec<CyclicMorphism> {
    enumerate_lifts(source, target)
        .into_iter()
        .map(|lift| standard_map(source, target, lift))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainf::check_functor;
    use crate::cyclic::pair;
    use crate::field::Rational;
    use BaseGen::V;
    use BaseObj::Point;

    type Q = Rational;

    #[test]
    fn identity_pullback_is_identity() {
        let id = CyclicMorphism::identity(&CyclicSet::standard(3));
        let f = full_pullback::<Q>(&id, &Mode::TwoPeriodic, true);
        for i in 0..3 {
            assert_eq!(f.image(&Point(i)), TwistedComplex::single(Point(i), 0));
            assert_eq!(f.component(&[Point(i), Point((i + 1) % 3)], &[V(i)]), Combo::basis(TwGen::new(0, 0, V(i))));
        }
    }

    #[test]
    fn one_point_into_two() {
        let f = standard_map(1, 2, vec![0]);
        let p = GenFunctor::<Q>::injective(&f, &Mode::TwoPeriodic).unwrap();
        assert_eq!(p.image(&Point(1)), TwistedComplex::empty());
        let value = p.component(&[Point(0), Point(1), Point(0)], &[V(0), V(1)]);
        assert_eq!(value, Combo::basis(TwGen::new(0, 0, V(0))));
        assert!(check_functor(&p, &p.source().objects(), 6).is_ok());
    }

    #[test]
    fn two_points_onto_one() {
        let f = standard_map(2, 1, vec![0, 0]);
        let p = GenFunctor::<Q>::surjective(&f, &Mode::TwoPeriodic).unwrap();
        assert_eq!(p.image(&Point(0)).len(), 2);
        assert_eq!(p.component(&[Point(0), Point(0)], &[V(0)]), Combo::basis(TwGen::new(1, 0, V(1))));
        assert!(check_functor(&p, &p.source().objects(), 5).is_ok());
    }

    #[test]
    fn small_pullbacks_are_functors() {
        for a in 1..=3 {
            for b in 1..=3 {
                for f in all_maps(a, b) {
                    let p = full_pullback::<Q>(&f, &Mode::TwoPeriodic, true);
                    let r = check_functor(&p, &p.source().objects(), b + 2);
                    assert!(r.is_ok(), "{f}: {:?}", r.violations.first());
                }
            }
        }
    }

    #[test]
    fn extension_is_a_functor() {
        let f = standard_map(3, 2, vec![0, 0, 1]);
        let p = full_pullback::<Q>(&f, &Mode::TwoPeriodic, true);
        let tw = p.source_tw.clone();
        let objs = vec![tw.point(0, 0), tw.point(1, 1), tw.interval(0, 2, 0), tw.interval(1, 2, 1)];
        let r = check_functor(&p.extension(), &objs, 3);
        assert!(r.is_ok(), "{:?}", r.violations.first());
    }

    #[test]
    fn collapsing_the_extra_point_gives_identity() {
        for n in 0..=3 {
            let (h, g) = extra_point_collapsed(n);
            let composite = pullback_composite::<Q>(&h, &g, true);
            let id = full_pullback::<Q>(&CyclicMorphism::identity(h.source()), &Mode::TwoPeriodic, true);
            assert!(compare_functors(&composite, &id, &id.source().objects(), n + 3).is_empty());
            let raw = pullback_composite::<Q>(&h, &g, false);
            assert!(!compare_functors(&raw, &id, &id.source().objects(), 1).is_empty());
        }
    }

    #[test]
    fn theorem_on_small_sizes() {
        let r = check_composition_theorem::<Q>(2, true);
        assert!(r.is_ok(), "{} of {}", r.failures.len(), r.pairs_checked);
    }

    #[test]
    fn gamma_loop_shifts_everything() {
        let set = CyclicSet::standard(3);
        let c = pair((1, 6), (1, 2));
        let g = gamma_functor::<Q>(&set, &PathClass::new(c, c, 1));
        for i in 0..3 {
            assert_eq!(g.image(&Point(i)).shift_of(0), -1);
        }
        assert!(check_functor(&g, &g.source().objects(), 5).is_ok());
    }

    #[test]
    fn graded_pullbacks_are_functors() {
        let phi = standard_map(3, 2, vec![0, 1, 1]);
        let c = pair((1, 6), (5, 6));
        let start = phi.map_pair(&c);
        for w in -1..=1 {
            let gamma = PathClass::new(start, pair((1, 4), (3, 4)), w);
            let g = graded_pullback::<Q>(&phi, &c, &gamma).unwrap();
            let r = check_functor(&g, &g.source().objects(), 4);
            assert!(r.is_ok(), "{w}: {:?}", r.violations.first());
        }
    }
}
