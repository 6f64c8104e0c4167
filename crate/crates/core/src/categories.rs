//! The A∞-category attached to a finite subset of the circle.
//!
//! Objects are the points `s_0, …, s_n` (optionally with a zero object). Each
//! hom space is free on the unit and on one generator `v_i : s_i → s_{i+1}`
//! per arc of the complement. Apart from units the only nonzero compositions
//! are the full cycles `μ_{n+1}(v_{i+n}, …, v_i) = id_{s_i}` (times the
//! periodicity generator in the two-periodic version).

use alloc::vec;
use alloc::vec::Vec;

use crate::ainf::{AInfCategory, Grading};
use crate::combo::Combo;
use crate::cyclic::{alpha_weights, CyclicSet, PointPair};
use crate::field::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseObj {
    /// The point `s_i`.
    Point(usize),
    /// The adjoined zero object.
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseGen {
    Id(usize),
    /// `v_i : s_i → s_{i+1}`.
    V(usize),
}

/// Deliberate corruptions used to confirm that the checkers can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CategoryMutation {
    /// Negate the full cycle starting at `s_i`.
    FlipCycleSign(usize),
    /// Make the full cycle starting at `s_i` vanish.
    DropCycle(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCategory {
    set: CyclicSet,
    gen_degrees: Vec<i64>,
    grading: Grading,
    with_zero: bool,
    mutation: Option<CategoryMutation>,
}

impl CyclicCategory {
    /// Two-periodic category on the points of `set`.
    pub fn two_periodic(set: &CyclicSet) -> Self {
        CyclicCategory {
            set: set.clone(),
            gen_degrees: vec![1; set.len()],
            grading: Grading::TwoPeriodic,
            with_zero: false,
            mutation: None,
        }
    }

    /// Two-periodic category with a zero object adjoined.
    pub fn two_periodic_with_zero(set: &CyclicSet) -> Self {
        CyclicCategory {
            with_zero: true,
            ..Self::two_periodic(set)
        }
    }

    /// Integer-graded category with `|v_i| = 1 - α_i(c)`, zero object included.
    pub fn graded(set: &CyclicSet, c: &PointPair) -> Self {
        CyclicCategory {
            set: set.clone(),
            gen_degrees: alpha_weights(set, c).into_iter().map(|a| 1 - a).collect(),
            grading: Grading::Integer,
            with_zero: true,
            mutation: None,
        }
    }

    /// Same generators and compositions, degrees read modulo 2.
    pub fn periodicize(&self) -> Self {
        CyclicCategory {
            grading: Grading::TwoPeriodic,
            ..self.clone()
        }
    }

    pub fn with_mutation(mut self, mutation: CategoryMutation) -> Self {
        self.mutation = Some(mutation);
        self
    }

    pub fn set(&self) -> &CyclicSet {
        &self.set
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn has_zero(&self) -> bool {
        self.with_zero
    }

    /// `|v_i|` as an integer.
    pub fn generator_degree(&self, i: usize) -> i64 {
        self.gen_degrees[i]
    }

    pub fn generator_degrees(&self) -> &[i64] {
        &self.gen_degrees
    }

    pub fn points(&self) -> Vec<BaseObj> {
        (0..self.size()).map(BaseObj::Point).collect()
    }

    /// The points, followed by the zero object when present.
    pub fn objects(&self) -> Vec<BaseObj> {
        let mut out = self.points();
        if self.with_zero {
            out.push(BaseObj::Zero);
        }
        out
    }

    fn next(&self, i: usize) -> usize {
        (i + 1) % self.size()
    }

    fn cycle_coefficient<F: Field>(&self, start: usize) -> F {
        match self.mutation {
            Some(CategoryMutation::FlipCycleSign(i)) if i == start => -F::one(),
            Some(CategoryMutation::DropCycle(i)) if i == start => F::zero(),
            _ => F::one(),
        }
    }
}

impl<F: Field> AInfCategory<F> for CyclicCategory {
    type Obj = BaseObj;
    type Gen = BaseGen;

    fn grading(&self) -> Grading {
        self.grading
    }

    fn basis(&self, x: &BaseObj, y: &BaseObj) -> Vec<BaseGen> {
        let (BaseObj::Point(i), BaseObj::Point(j)) = (*x, *y) else {
            return Vec::new();
        };
        let mut out = Vec::with_capacity(2);
        if i == j {
            out.push(BaseGen::Id(i));
        }
        if j == self.next(i) {
            out.push(BaseGen::V(i));
        }
        out
    }

    fn degree(&self, _x: &BaseObj, _y: &BaseObj, g: &BaseGen) -> i64 {
        match g {
            BaseGen::Id(_) => 0,
            BaseGen::V(i) => self.gen_degrees[*i],
        }
    }

    fn unit(&self, x: &BaseObj) -> Combo<BaseGen, F> {
        match x {
            BaseObj::Point(i) => Combo::basis(BaseGen::Id(*i)),
            BaseObj::Zero => Combo::zero(),
        }
    }

    fn mu(&self, objs: &[BaseObj], args: &[BaseGen]) -> Combo<BaseGen, F> {
        debug_assert_eq!(objs.len(), args.len() + 1);
        match args {
            [BaseGen::Id(_), a] => return Combo::basis(*a),
            [a, BaseGen::Id(_)] => {
                return Combo::term(*a, F::sign(<Self as AInfCategory<F>>::degree(self, &objs[0], &objs[1], a)))
            }
            _ => {}
        }
        if args.len() != self.size() {
            return Combo::zero();
        }
        let BaseGen::V(start) = args[0] else {
            return Combo::zero();
        };
        let mut i = start;
        for g in args {
            if *g != BaseGen::V(i) {
                return Combo::zero();
            }
            i = self.next(i);
        }
        Combo::term(BaseGen::Id(start), self.cycle_coefficient(start))
    }

    fn arity_bound(&self) -> Option<usize> {
        Some(self.size().max(2))
    }

    fn arity_may_be_nonzero(&self, d: usize) -> bool {
        d == 2 || d == self.size()
    }
}

/// A failed degree identity of a graded category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeAuditFailure {
    /// The weights of the point pair do not sum to 2.
    WeightSum(i64),
    /// `|v_i|` differs from `1 − α_i`.
    Generator { index: usize, degree: i64, expected: i64 },
    /// The full cycle from `s_i` changes degree by the wrong amount.
    Cycle { start: usize, degree: i64, expected: i64 },
}

/// Checks the degree bookkeeping of the category graded by `c`: the weights
/// sum to 2, `|v_i| = 1 − α_i`, and each full cycle of `m` generators lowers
/// degree by `m − 2`, as an operation of arity `m` must.
pub fn graded_degree_audit<F: Field>(set: &CyclicSet, c: &PointPair) -> Result<(), DegreeAuditFailure> {
    let alpha = alpha_weights(set, c);
    let total: i64 = alpha.iter().sum();
    if total != 2 {
        return Err(DegreeAuditFailure::WeightSum(total));
    }
    let cat = CyclicCategory::graded(set, c);
    let m = set.len();
    for (i, a) in alpha.iter().enumerate() {
        let degree = AInfCategory::<F>::degree(&cat, &BaseObj::Point(i), &BaseObj::Point((i + 1) % m), &BaseGen::V(i));
        if degree != 1 - a {
            return Err(DegreeAuditFailure::Generator {
                index: i,
                degree,
                expected: 1 - a,
            });
        }
    }
    for start in 0..m {
        let objs: Vec<BaseObj> = (0..=m).map(|k| BaseObj::Point((start + k) % m)).collect();
        let args: Vec<BaseGen> = (0..m).map(|k| BaseGen::V((start + k) % m)).collect();
        let input: i64 = args.iter().map(|g| AInfCategory::<F>::degree(&cat, &objs[0], &objs[0], g)).sum();
        let out = AInfCategory::<F>::mu(&cat, &objs, &args);
        let Some((g, _)) = out.iter().next() else {
            return Err(DegreeAuditFailure::Cycle {
                start,
                degree: i64::MIN,
                expected: 2 - m as i64,
            });
        };
        let degree = AInfCategory::<F>::degree(&cat, &objs[0], &objs[m], g) - input;
        if degree != 2 - m as i64 {
            return Err(DegreeAuditFailure::Cycle {
                start,
                degree,
                expected: 2 - m as i64,
            });
        }
    }
    Ok(())
}
