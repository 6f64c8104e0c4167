use cyclic_ainf::categories::graded_degree_audit;
use cyclic_ainf::cyclic::{alpha_weights, eta_shifts, Angle, CyclicMorphism, CyclicSet, PathClass, PointPair};
use cyclic_ainf::field::Rational;
use proptest::prelude::*;

fn angle() -> impl Strategy<Value = Angle> {
    (0i64..96).prop_map(|k| Angle::from_fraction(k, 96))
}

fn pair() -> impl Strategy<Value = PointPair> {
    (angle(), angle()).prop_map(|(a, b)| PointPair::new(a, b))
}

fn map(max: usize) -> impl Strategy<Value = CyclicMorphism> {
    (1..=max, 1..=max, any::<prop::sample::Index>()).prop_map(|(a, b, pick)| {
        let maps = CyclicMorphism::enumerate(&CyclicSet::standard(a), &CyclicSet::standard(b));
        maps[pick.index(maps.len())].clone()
    })
}

fn pick_from(source: &CyclicSet, target_size: usize, pick: prop::sample::Index) -> CyclicMorphism {
    let maps = CyclicMorphism::enumerate(source, &CyclicSet::standard(target_size));
    maps[pick.index(maps.len())].clone()
}

proptest! {
    #[test]
    fn factorization_recomposes(f in map(5)) {
        let fac = f.classify_and_factor();
        prop_assert!(fac.surj.is_surjective());
        prop_assert!(fac.inj.is_injective());
        prop_assert_eq!(CyclicMorphism::compose(&fac.inj, &fac.surj).unwrap(), f);
    }

    #[test]
    fn composition_is_associative(f in map(4), b in 1usize..=4, c in 1usize..=4,
                                  i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let g = pick_from(f.target(), b, i);
        let h = pick_from(g.target(), c, j);
        let left = CyclicMorphism::compose(&h, &CyclicMorphism::compose(&g, &f).unwrap()).unwrap();
        let right = CyclicMorphism::compose(&CyclicMorphism::compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn fibers_partition_the_source(f in map(5)) {
        let mut seen: Vec<usize> = (0..f.target().len()).flat_map(|t| f.fiber(t)).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..f.source().len()).collect::<Vec<_>>());
    }

    #[test]
    fn pl_maps_carry_weights(f in map(5), c in pair()) {
        let d = f.map_pair(&c);
        prop_assert_eq!(alpha_weights(f.target(), &d).iter().sum::<i64>(), 2);
    }

    #[test]
    fn eta_is_partial_sum(n in 1usize..=6, c in pair()) {
        let s = CyclicSet::standard(n);
        let (alpha, eta) = (alpha_weights(&s, &c), eta_shifts(&s, &c));
        prop_assert_eq!(eta[0], 0);
        for i in 1..n {
            prop_assert_eq!(eta[i], eta[i - 1] + alpha[i - 1]);
        }
    }

    #[test]
    fn degree_audit_holds(n in 1usize..=6, c in pair()) {
        prop_assert!(graded_degree_audit::<Rational>(&CyclicSet::standard(n), &c).is_ok());
    }

    #[test]
    fn paths_reverse_and_concatenate(a in pair(), b in pair(), w in -2i64..=2) {
        let p = PathClass::new(a, b, w);
        prop_assert_eq!(p.reverse().reverse(), p);
        prop_assert_eq!(p.concat(&p.reverse()), PathClass::constant(a));
    }
}
