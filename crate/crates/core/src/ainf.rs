//! Strictly unital A∞-categories and functors, with exhaustive law checkers.
//!
//! Conventions: a composable tuple is stored in path order, `args[0] = a_1 :
//! X_0 → X_1`, …, `args[d-1] = a_d : X_{d-1} → X_d`, together with the object
//! chain `objs = [X_0, …, X_d]`. `μ_d(a_d, …, a_1)` lands in `hom(X_0, X_d)`
//! and has degree `Σ|a_i| + 2 - d`. The A∞ equations are
//!
//! ```text
//! Σ_{m,n} (-1)^{✝_n} μ_{d-m+1}(a_d, …, a_{n+m+1}, μ_m(a_{n+m}, …, a_{n+1}), a_n, …, a_1) = 0
//! ```
//!
//! with `✝_n = Σ_{i ≤ n} (|a_i| - 1)`. Functor components `F_d` have degree
//! `Σ|a_i| + 1 - d` and satisfy
//!
//! ```text
//! Σ_r Σ_{k_1+…+k_r=d} μ_r(F_{k_r}(…), …, F_{k_1}(…)) = Σ_{m,n} (-1)^{✝_n} F_{d-m+1}(…, μ_m(…), …).
//! ```

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt::Debug;

use thiserror::Error;

use crate::combo::{expand_product, Combo};
use crate::field::Field;
use crate::linalg::Matrix;

/// How degrees are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Grading {
    /// Honest integer degrees.
    Integer,
    /// Degrees modulo 2; the degree-2 periodicity generator is implicit.
    TwoPeriodic,
}

impl Grading {
    pub fn modulus(self) -> i64 {
        match self {
            Grading::Integer => 0,
            Grading::TwoPeriodic => 2,
        }
    }

    /// Canonical representative: itself, or the residue in `{0, 1}`.
    pub fn reduce(self, degree: i64) -> i64 {
        match self {
            Grading::Integer => degree,
            Grading::TwoPeriodic => degree.rem_euclid(2),
        }
    }

    pub fn same(self, a: i64, b: i64) -> bool {
        self.reduce(a) == self.reduce(b)
    }
}

/// A strictly unital A∞-category given by rules on basis elements.
pub trait AInfCategory<F: Field> {
    type Obj: Clone + Ord + Debug;
    type Gen: Clone + Ord + Debug;

    fn grading(&self) -> Grading;

    /// Basis of `hom(x, y)`; labels are unique within a hom space.
    fn basis(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Gen>;

    /// Degree of a basis element of `hom(x, y)`.
    fn degree(&self, x: &Self::Obj, y: &Self::Obj, g: &Self::Gen) -> i64;

    fn unit(&self, x: &Self::Obj) -> Combo<Self::Gen, F>;

    /// `μ_d` on a composable basis tuple, `objs.len() == args.len() + 1`.
    fn mu(&self, objs: &[Self::Obj], args: &[Self::Gen]) -> Combo<Self::Gen, F>;

    /// An arity beyond which every `μ_d` vanishes, if known.
    fn arity_bound(&self) -> Option<usize> {
        None
    }

    /// False only if `μ_d` vanishes identically.
    fn arity_may_be_nonzero(&self, _d: usize) -> bool {
        true
    }
}

/// A strictly unital A∞-functor given by its components on basis tuples.
pub trait AInfFunctor<F: Field> {
    type Source: AInfCategory<F>;
    type Target: AInfCategory<F>;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;

    fn map_object(&self, x: &SrcObj<F, Self>) -> TgtObj<F, Self>;

    /// `F_d` on a composable basis tuple of the source.
    fn component(&self, objs: &[SrcObj<F, Self>], args: &[SrcGen<F, Self>]) -> Combo<TgtGen<F, Self>, F>;
}

pub type SrcObj<F, T> = <<T as AInfFunctor<F>>::Source as AInfCategory<F>>::Obj;
pub type SrcGen<F, T> = <<T as AInfFunctor<F>>::Source as AInfCategory<F>>::Gen;
pub type TgtObj<F, T> = <<T as AInfFunctor<F>>::Target as AInfCategory<F>>::Obj;
pub type TgtGen<F, T> = <<T as AInfFunctor<F>>::Target as AInfCategory<F>>::Gen;

/// A homogeneous element of a hom space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism<O: Ord, G: Ord, F> {
    pub source: O,
    pub target: O,
    pub combo: Combo<G, F>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AInfError {
    #[error("argument {index} does not start where the previous one ends")]
    NotComposable { index: usize },
    #[error("argument {index} is not homogeneous")]
    InhomogeneousInput { index: usize },
    #[error("expected at least one argument")]
    Empty,
}

/// Degree of a combination, `None` if it is zero or inhomogeneous.
pub fn combo_degree<F: Field, C: AInfCategory<F>>(
    cat: &C,
    x: &C::Obj,
    y: &C::Obj,
    combo: &Combo<C::Gen, F>,
) -> Option<i64> {
    let mut degs = combo.labels().map(|g| cat.grading().reduce(cat.degree(x, y, g)));
    let first = degs.next()?;
    degs.all(|d| d == first).then_some(first)
}

/// Multilinear extension of `μ_d` to homogeneous combinations.
pub fn mu_eval<F: Field, C: AInfCategory<F>>(
    cat: &C,
    args: &[Morphism<C::Obj, C::Gen, F>],
) -> Result<Morphism<C::Obj, C::Gen, F>, AInfError> {
    let first = args.first().ok_or(AInfError::Empty)?;
    for (index, pair) in args.windows(2).enumerate() {
        if pair[0].target != pair[1].source {
            return Err(AInfError::NotComposable { index: index + 1 });
        }
    }
    for (index, a) in args.iter().enumerate() {
        if !a.combo.is_zero() && combo_degree(cat, &a.source, &a.target, &a.combo).is_none() {
            return Err(AInfError::InhomogeneousInput { index });
        }
    }
    let mut objs: Vec<C::Obj> = Vec::with_capacity(args.len() + 1);
    objs.push(first.source.clone());
    objs.extend(args.iter().map(|a| a.target.clone()));
    let factors: Vec<&Combo<C::Gen, F>> = args.iter().map(|a| &a.combo).collect();
    let mut out = Combo::zero();
    for (tuple, c) in expand_product(&factors) {
        out.add_scaled(&cat.mu(&objs, &tuple), &c);
    }
    Ok(Morphism {
        source: objs[0].clone(),
        target: objs[args.len()].clone(),
        combo: out,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// The quadratic equation has a nonzero residue.
    Equation,
    /// A structure map produced a term of the wrong degree.
    Degree,
    /// Units do not behave strictly.
    Unit,
}

/// A failing tuple with what went wrong on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<O: Ord, G: Ord, H: Ord, F> {
    pub kind: ViolationKind,
    pub objects: Vec<O>,
    pub tuple: Vec<G>,
    pub residue: Combo<H, F>,
}

/// Outcome of a law check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport<O: Ord, G: Ord, H: Ord, F> {
    pub tuples_checked: usize,
    pub violations: Vec<Violation<O, G, H, F>>,
}

impl<O: Ord, G: Ord, H: Ord, F> LawReport<O, G, H, F> {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub type CategoryReport<F, C> =
    LawReport<<C as AInfCategory<F>>::Obj, <C as AInfCategory<F>>::Gen, <C as AInfCategory<F>>::Gen, F>;
pub type FunctorReport<F, T> = LawReport<SrcObj<F, T>, SrcGen<F, T>, TgtGen<F, T>, F>;

/// Default length bound for a family of objects.
pub fn default_max_len(object_count: usize) -> usize {
    2 * object_count + 2
}

/// Cached bases between a fixed list of objects.
struct BasisTable<G> {
    table: Vec<Vec<Vec<G>>>,
}

impl<G: Clone> BasisTable<G> {
    fn new<F: Field, C: AInfCategory<F, Gen = G>>(cat: &C, objects: &[C::Obj]) -> Self {
        let table = objects
            .iter()
            .map(|x| objects.iter().map(|y| cat.basis(x, y)).collect())
            .collect();
        BasisTable { table }
    }
}

/// Calls `visit` on every composable basis tuple of length `d` whose objects
/// are drawn from `objects`.
pub fn for_each_tuple<F: Field, C: AInfCategory<F>>(
    cat: &C,
    objects: &[C::Obj],
    d: usize,
    mut visit: impl FnMut(&[C::Obj], &[C::Gen]),
) {
    let table = BasisTable::new(cat, objects);
    let mut obj_idx = Vec::with_capacity(d + 1);
    let mut objs = Vec::with_capacity(d + 1);
    let mut args = Vec::with_capacity(d);
    for start in 0..objects.len() {
        obj_idx.push(start);
        objs.push(objects[start].clone());
        walk(&table, objects, d, &mut obj_idx, &mut objs, &mut args, &mut visit);
        obj_idx.pop();
        objs.pop();
    }
}

fn walk<O: Clone, G: Clone>(
    table: &BasisTable<G>,
    objects: &[O],
    d: usize,
    obj_idx: &mut Vec<usize>,
    objs: &mut Vec<O>,
    args: &mut Vec<G>,
    visit: &mut impl FnMut(&[O], &[G]),
) {
    if args.len() == d {
        visit(objs, args);
        return;
    }
    let last = *obj_idx.last().expect("nonempty chain");
    for next in 0..objects.len() {
        let basis = &table.table[last][next];
        if basis.is_empty() {
            continue;
        }
        obj_idx.push(next);
        objs.push(objects[next].clone());
        for g in basis {
            args.push(g.clone());
            walk(table, objects, d, obj_idx, objs, args, visit);
            args.pop();
        }
        obj_idx.pop();
        objs.pop();
    }
}

fn dagger<F: Field, C: AInfCategory<F>>(cat: &C, objs: &[C::Obj], args: &[C::Gen], n: usize) -> i64 {
    (0..n).map(|i| cat.degree(&objs[i], &objs[i + 1], &args[i]) - 1).sum()
}

/// `Σ (-1)^{✝_n} outer(…, μ_m(…), …)` for an arbitrary outer multilinear map.
fn insert_mu<F: Field, C: AInfCategory<F>, H: Ord + Clone>(
    cat: &C,
    objs: &[C::Obj],
    args: &[C::Gen],
    mut outer: impl FnMut(&[C::Obj], &[C::Gen]) -> Combo<H, F>,
) -> Combo<H, F> {
    let d = args.len();
    let mut total = Combo::zero();
    let mut outer_objs = Vec::with_capacity(d + 1);
    let mut outer_args = Vec::with_capacity(d);
    for n in 0..d {
        let sign = F::sign(dagger(cat, objs, args, n));
        for m in 1..=d - n {
            let inner = cat.mu(&objs[n..=n + m], &args[n..n + m]);
            if inner.is_zero() {
                continue;
            }
            outer_objs.clear();
            outer_objs.extend_from_slice(&objs[..=n]);
            outer_objs.extend_from_slice(&objs[n + m..]);
            for (g, c) in inner.iter() {
                outer_args.clear();
                outer_args.extend_from_slice(&args[..n]);
                outer_args.push(g.clone());
                outer_args.extend_from_slice(&args[n + m..]);
                let value = outer(&outer_objs, &outer_args);
                total.add_scaled(&value, &(sign.clone() * c.clone()));
            }
        }
    }
    total
}

/// Terms of `combo` whose degree differs from `expected`.
fn wrong_degree_terms<F: Field, C: AInfCategory<F>>(
    cat: &C,
    x: &C::Obj,
    y: &C::Obj,
    combo: &Combo<C::Gen, F>,
    expected: i64,
) -> Combo<C::Gen, F> {
    combo
        .iter()
        .filter(|(g, _)| !cat.grading().same(cat.degree(x, y, g), expected))
        .map(|(g, c)| (g.clone(), c.clone()))
        .collect()
}

/// Checks the A∞ equations, the degree of every `μ_d`, and strict unitality
/// on all composable basis tuples among `objects` of length `≤ max_len`.
pub fn check_ainf_equations<F: Field, C: AInfCategory<F>>(
    cat: &C,
    objects: &[C::Obj],
    max_len: usize,
) -> CategoryReport<F, C> {
    let mut report = LawReport {
        tuples_checked: 0,
        violations: Vec::new(),
    };
    for d in 1..=max_len {
        for_each_tuple(cat, objects, d, |objs, args| {
            report.tuples_checked += 1;
            let value = cat.mu(objs, args);
            let expected: i64 = (0..d).map(|i| cat.degree(&objs[i], &objs[i + 1], &args[i])).sum::<i64>() + 2 - d as i64;
            let bad = wrong_degree_terms(cat, &objs[0], &objs[d], &value, expected);
            if !bad.is_zero() {
                report.violations.push(Violation {
                    kind: ViolationKind::Degree,
                    objects: objs.to_vec(),
                    tuple: args.to_vec(),
                    residue: bad,
                });
            }
            let residue = insert_mu(cat, objs, args, |o, a| cat.mu(o, a));
            if !residue.is_zero() {
                report.violations.push(Violation {
                    kind: ViolationKind::Equation,
                    objects: objs.to_vec(),
                    tuple: args.to_vec(),
                    residue,
                });
            }
        });
    }
    report.violations.extend(check_strict_units(cat, objects));
    report
}

/// `μ_2(a, id) = a`, `μ_2(id, a) = (-1)^{|a|} a`, and `μ_1(id) = 0`, on basis
/// elements between the given objects.
pub fn check_strict_units<F: Field, C: AInfCategory<F>>(
    cat: &C,
    objects: &[C::Obj],
) -> Vec<Violation<C::Obj, C::Gen, C::Gen, F>> {
    let mut out = Vec::new();
    let unit_mu = |objs: &[C::Obj], args: &[&Combo<C::Gen, F>]| {
        let mut acc = Combo::zero();
        for (tuple, c) in expand_product(args) {
            acc.add_scaled(&cat.mu(objs, &tuple), &c);
        }
        acc
    };
    for x in objects {
        let id = cat.unit(x);
        let d1 = unit_mu(&[x.clone(), x.clone()], &[&id]);
        if !d1.is_zero() {
            out.push(Violation {
                kind: ViolationKind::Unit,
                objects: alloc::vec![x.clone(), x.clone()],
                tuple: Vec::new(),
                residue: d1,
            });
        }
        for y in objects {
            for g in cat.basis(x, y) {
                let a = Combo::basis(g.clone());
                let objs_r = [x.clone(), x.clone(), y.clone()];
                let mut right = unit_mu(&objs_r, &[&id, &a]);
                right.add_term(g.clone(), -F::one());
                let idy = cat.unit(y);
                let objs_l = [x.clone(), y.clone(), y.clone()];
                let mut left = unit_mu(&objs_l, &[&a, &idy]);
                left.add_term(g.clone(), -F::sign(cat.degree(x, y, &g)));
                for residue in [right, left] {
                    if !residue.is_zero() {
                        out.push(Violation {
                            kind: ViolationKind::Unit,
                            objects: alloc::vec![x.clone(), y.clone()],
                            tuple: alloc::vec![g.clone()],
                            residue,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Values of `F` on every contiguous block of a fixed tuple.
struct BlockCache<F: Field, T: AInfFunctor<F> + ?Sized> {
    d: usize,
    values: Vec<Option<Combo<TgtGen<F, T>, F>>>,
}

impl<F: Field, T: AInfFunctor<F> + ?Sized> BlockCache<F, T> {
    fn new(d: usize) -> Self {
        BlockCache {
            d,
            values: alloc::vec![None; (d + 1) * (d + 1)],
        }
    }

    fn get(&mut self, functor: &T, objs: &[SrcObj<F, T>], args: &[SrcGen<F, T>], lo: usize, hi: usize) -> &Combo<TgtGen<F, T>, F> {
        let slot = lo * (self.d + 1) + hi;
        self.values[slot].get_or_insert_with(|| functor.component(&objs[lo..=hi], &args[lo..hi]))
    }
}

/// `Σ_r Σ_{k_1+…+k_r=d} outer_r(inner_{k_r}, …, inner_{k_1})` where `outer` is
/// evaluated on the images of the block boundaries.
pub(crate) fn sum_over_compositions<F: Field, T: AInfFunctor<F> + ?Sized, H: Ord + Clone>(
    functor: &T,
    objs: &[SrcObj<F, T>],
    args: &[SrcGen<F, T>],
    images: &[TgtObj<F, T>],
    mut outer: impl FnMut(&[TgtObj<F, T>], &[TgtGen<F, T>]) -> Combo<H, F>,
) -> Combo<H, F> {
    let d = args.len();
    let mut cache = BlockCache::<F, T>::new(d);
    let mut total = Combo::zero();
    // bit i set: a block boundary after argument i
    for mask in 0u64..(1u64 << (d - 1)) {
        let mut cuts = alloc::vec![0usize];
        for i in 0..d - 1 {
            if mask >> i & 1 == 1 {
                cuts.push(i + 1);
            }
        }
        cuts.push(d);
        let mut blocks = Vec::with_capacity(cuts.len() - 1);
        let mut dead = false;
        for w in cuts.windows(2) {
            let value = cache.get(functor, objs, args, w[0], w[1]).clone();
            if value.is_zero() {
                dead = true;
                break;
            }
            blocks.push(value);
        }
        if dead {
            continue;
        }
        let tobjs: Vec<TgtObj<F, T>> = cuts.iter().map(|&c| images[c].clone()).collect();
        let refs: Vec<&Combo<TgtGen<F, T>, F>> = blocks.iter().collect();
        for (tuple, c) in expand_product(&refs) {
            total.add_scaled(&outer(&tobjs, &tuple), &c);
        }
    }
    total
}

/// Checks the functor equations and the degree of every `F_d` on all
/// composable basis tuples among `objects` of length `≤ max_len`.
pub fn check_functor<F: Field, T: AInfFunctor<F>>(
    functor: &T,
    objects: &[SrcObj<F, T>],
    max_len: usize,
) -> FunctorReport<F, T> {
    let source = functor.source();
    let target = functor.target();
    let images: BTreeMap<SrcObj<F, T>, TgtObj<F, T>> =
        objects.iter().map(|x| (x.clone(), functor.map_object(x))).collect();
    let mut report = LawReport {
        tuples_checked: 0,
        violations: Vec::new(),
    };
    for d in 1..=max_len {
        for_each_tuple(source, objects, d, |objs, args| {
            report.tuples_checked += 1;
            let imgs: Vec<TgtObj<F, T>> = objs.iter().map(|x| images[x].clone()).collect();
            let value = functor.component(objs, args);
            let expected: i64 =
                (0..d).map(|i| source.degree(&objs[i], &objs[i + 1], &args[i])).sum::<i64>() + 1 - d as i64;
            let bad = wrong_degree_terms(target, &imgs[0], &imgs[d], &value, expected);
            if !bad.is_zero() {
                report.violations.push(Violation {
                    kind: ViolationKind::Degree,
                    objects: objs.to_vec(),
                    tuple: args.to_vec(),
                    residue: bad,
                });
            }
            let mut residue = sum_over_compositions(functor, objs, args, &imgs, |o, a| target.mu(o, a));
            let rhs = insert_mu(source, objs, args, |o, a| functor.component(o, a));
            residue.add_scaled(&rhs, &-F::one());
            if !residue.is_zero() {
                report.violations.push(Violation {
                    kind: ViolationKind::Equation,
                    objects: objs.to_vec(),
                    tuple: args.to_vec(),
                    residue,
                });
            }
        });
    }
    report.violations.extend(check_functor_units(functor, objects));
    report
}

/// `F_1(id) = id` and `F_d` vanishes on tuples containing a unit for `d ≥ 2`
/// (checked for `d = 2` against every basis element).
pub fn check_functor_units<F: Field, T: AInfFunctor<F>>(
    functor: &T,
    objects: &[SrcObj<F, T>],
) -> Vec<Violation<SrcObj<F, T>, SrcGen<F, T>, TgtGen<F, T>, F>> {
    let source = functor.source();
    let target = functor.target();
    let mut out = Vec::new();
    let apply = |objs: &[SrcObj<F, T>], factors: &[&Combo<SrcGen<F, T>, F>]| {
        let mut acc = Combo::zero();
        for (tuple, c) in expand_product(factors) {
            acc.add_scaled(&functor.component(objs, &tuple), &c);
        }
        acc
    };
    for x in objects {
        let id = source.unit(x);
        let mut residue = apply(&[x.clone(), x.clone()], &[&id]);
        residue.add_scaled(&target.unit(&functor.map_object(x)), &-F::one());
        if !residue.is_zero() {
            out.push(Violation {
                kind: ViolationKind::Unit,
                objects: alloc::vec![x.clone()],
                tuple: Vec::new(),
                residue,
            });
        }
        for y in objects {
            for g in source.basis(x, y) {
                let a = Combo::basis(g.clone());
                let idy = source.unit(y);
                let r = apply(&[x.clone(), x.clone(), y.clone()], &[&id, &a]);
                let l = apply(&[x.clone(), y.clone(), y.clone()], &[&a, &idy]);
                for residue in [r, l] {
                    if !residue.is_zero() {
                        out.push(Violation {
                            kind: ViolationKind::Unit,
                            objects: alloc::vec![x.clone(), y.clone()],
                            tuple: alloc::vec![g.clone()],
                            residue,
                        });
                    }
                }
            }
        }
    }
    out
}

/// `G ∘ F`, with components `(G∘F)_d = Σ G_r(F_{k_r}, …, F_{k_1})`.
pub struct Composite<'a, G, T> {
    pub outer: &'a G,
    pub inner: &'a T,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("target of the inner functor differs from the source of the outer functor")]
pub struct CompositionMismatch;

/// Composes two functors; `same_middle` decides whether the inner target and
/// the outer source are the same category.
pub fn compose_functors<'a, F, G, T>(
    outer: &'a G,
    inner: &'a T,
    same_middle: bool,
) -> Result<Composite<'a, G, T>, CompositionMismatch>
where
    F: Field,
    T: AInfFunctor<F>,
    G: AInfFunctor<F, Source = T::Target>,
{
    if same_middle {
        Ok(Composite { outer, inner })
    } else {
        Err(CompositionMismatch)
    }
}

impl<'a, F, G, T> AInfFunctor<F> for Composite<'a, G, T>
where
    F: Field,
    T: AInfFunctor<F>,
    G: AInfFunctor<F, Source = T::Target>,
{
    type Source = T::Source;
    type Target = G::Target;

    fn source(&self) -> &Self::Source {
        self.inner.source()
    }

    fn target(&self) -> &Self::Target {
        self.outer.target()
    }

    fn map_object(&self, x: &SrcObj<F, Self>) -> TgtObj<F, Self> {
        self.outer.map_object(&self.inner.map_object(x))
    }

    fn component(&self, objs: &[SrcObj<F, Self>], args: &[SrcGen<F, Self>]) -> Combo<TgtGen<F, Self>, F> {
        let images: Vec<_> = objs.iter().map(|x| self.inner.map_object(x)).collect();
        sum_over_compositions(self.inner, objs, args, &images, |o, a| self.outer.component(o, a))
    }
}

/// The identity functor of a category.
pub struct IdentityFunctor<'a, C> {
    pub category: &'a C,
}

impl<'a, F: Field, C: AInfCategory<F>> AInfFunctor<F> for IdentityFunctor<'a, C> {
    type Source = C;
    type Target = C;

    fn source(&self) -> &C {
        self.category
    }

    fn target(&self) -> &C {
        self.category
    }

    fn map_object(&self, x: &C::Obj) -> C::Obj {
        x.clone()
    }

    fn component(&self, _objs: &[C::Obj], args: &[C::Gen]) -> Combo<C::Gen, F> {
        if args.len() == 1 {
            Combo::basis(args[0].clone())
        } else {
            Combo::zero()
        }
    }
}

/// A mismatch between two functors on a tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctorDifference<O, G, TO, H: Ord, F> {
    Object { object: O, left: TO, right: TO },
    Component { objects: Vec<O>, tuple: Vec<G>, left: Combo<H, F>, right: Combo<H, F> },
}

/// Structural comparison of two functors with the same source and target on
/// objects and on every basis tuple of length `≤ max_len`.
pub fn compare_functors<F, A, B>(
    left: &A,
    right: &B,
    objects: &[SrcObj<F, A>],
    max_len: usize,
) -> Vec<FunctorDifference<SrcObj<F, A>, SrcGen<F, A>, TgtObj<F, A>, TgtGen<F, A>, F>>
where
    F: Field,
    A: AInfFunctor<F>,
    B: AInfFunctor<F, Source = A::Source, Target = A::Target>,
{
    let mut out = Vec::new();
    for x in objects {
        let (l, r) = (left.map_object(x), right.map_object(x));
        if l != r {
            out.push(FunctorDifference::Object {
                object: x.clone(),
                left: l,
                right: r,
            });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for d in 1..=max_len {
        for_each_tuple(left.source(), objects, d, |objs, args| {
            let (l, r) = (left.component(objs, args), right.component(objs, args));
            if l != r {
                out.push(FunctorDifference::Component {
                    objects: objs.to_vec(),
                    tuple: args.to_vec(),
                    left: l,
                    right: r,
                });
            }
        });
    }
    out
}

/// Cohomology dimensions of `(hom(x, y), μ_1)` per reduced degree.
pub fn hom_cohomology<F: Field, C: AInfCategory<F>>(cat: &C, x: &C::Obj, y: &C::Obj) -> BTreeMap<i64, usize> {
    hom_cohomology_in_basis(cat, x, y, &cat.basis(x, y))
}

/// As [`hom_cohomology`], with the basis of `hom(x, y)` listed in a chosen order.
pub fn hom_cohomology_in_basis<F: Field, C: AInfCategory<F>>(
    cat: &C,
    x: &C::Obj,
    y: &C::Obj,
    basis: &[C::Gen],
) -> BTreeMap<i64, usize> {
    let grading = cat.grading();
    let mut by_degree: BTreeMap<i64, Vec<&C::Gen>> = BTreeMap::new();
    for g in basis {
        by_degree.entry(grading.reduce(cat.degree(x, y, g))).or_default().push(g);
    }
    let objs = [x.clone(), y.clone()];
    // rank of μ_1 out of each degree
    let rank_from = |deg: i64| -> usize {
        let Some(src) = by_degree.get(&deg) else {
            return 0;
        };
        let Some(tgt) = by_degree.get(&grading.reduce(deg + 1)) else {
            return 0;
        };
        let mut m = Matrix::zeros(tgt.len(), src.len());
        for (c, g) in src.iter().enumerate() {
            let image = cat.mu(&objs, core::slice::from_ref(*g));
            for (r, h) in tgt.iter().enumerate() {
                m.set(r, c, image.coeff(h));
            }
        }
        m.rank()
    };
    let degrees: Vec<i64> = match grading {
        Grading::TwoPeriodic => alloc::vec![0, 1],
        Grading::Integer => by_degree.keys().copied().collect(),
    };
    degrees
        .into_iter()
        .map(|deg| {
            let dim = by_degree.get(&deg).map_or(0, Vec::len);
            let out_rank = rank_from(deg);
            let in_rank = rank_from(grading.reduce(deg - 1));
            (deg, dim - out_rank - in_rank)
        })
        .collect()
}

/// Solves `μ_1(b) = a` inside `hom(x, y)`; `None` when `a` is not exact.
pub fn exact_preimage<F: Field, C: AInfCategory<F>>(
    cat: &C,
    x: &C::Obj,
    y: &C::Obj,
    a: &Combo<C::Gen, F>,
) -> Option<Combo<C::Gen, F>> {
    let basis = cat.basis(x, y);
    let objs = [x.clone(), y.clone()];
    let mut m = Matrix::zeros(basis.len(), basis.len());
    for (c, g) in basis.iter().enumerate() {
        let image = cat.mu(&objs, core::slice::from_ref(g));
        for (r, h) in basis.iter().enumerate() {
            m.set(r, c, image.coeff(h));
        }
    }
    let rhs: Vec<F> = basis.iter().map(|g| a.coeff(g)).collect();
    let sol = m.solve(&rhs)?;
    Some(basis.into_iter().zip(sol).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use alloc::vec;

    /// The graded field as a category with one object and a single unit,
    /// plus a formal degree-one generator that squares to zero.
    struct DualNumbers {
        mutate: bool,
    }

    impl AInfCategory<Rational> for DualNumbers {
        type Obj = u8;
        type Gen = u8;

        fn grading(&self) -> Grading {
            Grading::Integer
        }
        fn basis(&self, _: &u8, _: &u8) -> Vec<u8> {
            vec![0, 1]
        }
        fn degree(&self, _: &u8, _: &u8, g: &u8) -> i64 {
            *g as i64
        }
        fn unit(&self, _: &u8) -> Combo<u8, Rational> {
            Combo::basis(0)
        }
        fn mu(&self, _: &[u8], args: &[u8]) -> Combo<u8, Rational> {
            match args {
                [0, a] => Combo::basis(*a),
                [a, 0] => Combo::term(*a, Rational::sign(*a as i64)),
                [1] if self.mutate => Combo::basis(1),
                _ => Combo::zero(),
            }
        }
    }

    #[test]
    fn unit_only_category_passes() {
        let cat = DualNumbers { mutate: false };
        let report = check_ainf_equations(&cat, &[0], 5);
        assert!(report.is_ok(), "{:?}", report.violations);
        assert!(report.tuples_checked > 0);
    }

    #[test]
    fn degree_errors_are_reported() {
        let cat = DualNumbers { mutate: true };
        let report = check_ainf_equations(&cat, &[0], 2);
        assert!(report.violations.iter().any(|v| v.kind == ViolationKind::Degree));
    }

    #[test]
    fn identity_functor_passes_and_composes() {
        let cat = DualNumbers { mutate: false };
        let id = IdentityFunctor { category: &cat };
        assert!(check_functor(&id, &[0], 4).is_ok());
        let twice = compose_functors(&id, &id, true).unwrap();
        assert!(compare_functors(&twice, &id, &[0], 4).is_empty());
    }

    #[test]
    fn mu_eval_rejects_bad_input() {
        let cat = DualNumbers { mutate: false };
        let m = |s, t, c: Combo<u8, Rational>| Morphism { source: s, target: t, combo: c };
        assert_eq!(
            mu_eval(&cat, &[m(0, 0, Combo::basis(0)), m(1, 1, Combo::basis(0))]),
            Err(AInfError::NotComposable { index: 1 })
        );
        let mixed: Combo<u8, Rational> = [(0, Rational::one()), (1, Rational::one())].into_iter().collect();
        assert_eq!(
            mu_eval(&cat, &[m(0, 0, mixed)]),
            Err(AInfError::InhomogeneousInput { index: 0 })
        );
        let out = mu_eval(&cat, &[m(0, 0, Combo::basis(1)), m(0, 0, Combo::basis(0))]).unwrap();
        assert_eq!(out.combo, Combo::term(1, -Rational::one()));
    }

    #[test]
    fn cohomology_of_zero_differential() {
        let cat = DualNumbers { mutate: false };
        let h = hom_cohomology(&cat, &0, &0);
        assert_eq!(h, [(0, 1), (1, 1)].into_iter().collect());
    }
}
