use cyclic_ainf::ainf::{check_functor, AInfFunctor, ViolationKind};
use cyclic_ainf::categories::BaseGen;
use cyclic_ainf::cyclic::CyclicMorphism;
use cyclic_ainf::field::{Fp, Rational};
use cyclic_ainf::functors::{all_maps, full_pullback, FunctorMutation, GenFunctor, Mode};

type Q = Rational;

/// Long enough for a full cycle of the source category plus three units.
fn max_len(f: &CyclicMorphism) -> usize {
    f.target().len() + 3
}

#[test]
fn injective_and_surjective_pullbacks() {
    let mut seen = 0;
    for a in 1..=5 {
        for b in 1..=5 {
            for f in all_maps(a, b) {
                let p = if f.is_injective() {
                    GenFunctor::<Q>::injective(&f, &Mode::TwoPeriodic).unwrap()
                } else if f.is_surjective() {
                    GenFunctor::<Q>::surjective(&f, &Mode::TwoPeriodic).unwrap()
                } else {
                    continue;
                };
                seen += 1;
                let r = check_functor(&p, &p.source_category().objects(), max_len(&f));
                assert!(r.is_ok(), "{f}: {:?}", r.violations.first());
            }
        }
    }
    // a·C(b, a) injections and b·C(a, b) surjections, isomorphisms counted once
    assert_eq!(seen, 243);
}

#[test]
fn full_pullbacks_up_to_four_points() {
    for a in 1..=4 {
        for b in 1..=4 {
            for f in all_maps(a, b) {
                let p = full_pullback::<Fp<3>>(&f, &Mode::TwoPeriodic, true);
                let r = check_functor(&p, &p.source_category().objects(), b + 3);
                assert!(r.is_ok(), "{f}: {:?}", r.violations.first());
            }
        }
    }
}

#[test]
fn wrong_kind_of_map_is_rejected() {
    let f = &all_maps(2, 1)[0];
    assert!(GenFunctor::<Q>::injective(f, &Mode::TwoPeriodic).is_err());
    let g = &all_maps(1, 2)[0];
    assert!(GenFunctor::<Q>::surjective(g, &Mode::TwoPeriodic).is_err());
}

#[test]
fn zeroed_interval_component_has_a_witness() {
    for f in all_maps(2, 4).into_iter().filter(CyclicMorphism::is_injective) {
        let p = GenFunctor::<Q>::injective(&f, &Mode::TwoPeriodic).unwrap().with_mutation(FunctorMutation::ZeroInterval(0));
        let r = check_functor(&p, &p.source().objects(), max_len(&f));
        let w = r.violations.first().expect("violation");
        assert_eq!(w.kind, ViolationKind::Equation);
        let start = f.set_map(0);
        assert!(w.tuple.contains(&BaseGen::V(start)), "{f}: {:?}", w.tuple);
    }
}
