use cyclic_ainf::categories::CategoryMutation;
use cyclic_ainf::comparison::{compare_graded, compare_two_periodic};
use cyclic_ainf::cyclic::{Angle, CyclicSet, PointPair};
use cyclic_ainf::field::{Fp, Rational};
use cyclic_ainf::quiver::{ext, ext_dims, hom_dim, Rep};
use cyclic_ainf::twisted::{check_iso_s0, IsoMutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = Rational;

#[test]
fn periodic_tables_up_to_six() {
    for n in 0..=6 {
        let r = compare_two_periodic::<Q>(n, None);
        assert!(r.is_ok(), "n = {n}: {:?}", r.mismatches);
        assert_eq!(r.pairs_checked, (n + 1) * (n + 1));
    }
}

#[test]
fn periodic_tables_over_a_prime_field() {
    for n in 0..=4 {
        assert!(compare_two_periodic::<Fp<3>>(n, None).is_ok(), "n = {n}");
    }
}

#[test]
fn s0_is_a_twisted_interval() {
    for k in 2..=6 {
        let set = CyclicSet::standard(k);
        assert!(check_iso_s0::<Q>(&set, None).is_ok(), "|S| = {k}");
    }
}

#[test]
fn broken_iso_is_caught() {
    for k in 2..=4 {
        let set = CyclicSet::standard(k);
        assert!(check_iso_s0::<Q>(&set, Some(IsoMutation::Category(CategoryMutation::DropCycle(0)))).is_err());
    }
}

#[test]
fn one_point_is_acyclic() {
    let r = compare_two_periodic::<Q>(0, None);
    assert!(r.is_ok() && r.mismatches.is_empty());
}

#[test]
fn two_point_dimensions() {
    // A single vertex: P(1) = S_1, so everything is one-dimensional.
    let p = Rep::<Q>::projective(1, 1).unwrap();
    let s = Rep::<Q>::simple(1, 1).unwrap();
    assert_eq!(ext(&p, &p), (1, 0));
    assert_eq!(ext(&s, &s), (1, 0));
    assert_eq!(hom_dim(&p, &s), 1);
    let r = compare_two_periodic::<Q>(1, None);
    assert!(r.is_ok(), "{:?}", r.mismatches);
}

#[test]
fn simple_ext_table() {
    for n in 1..=6 {
        for i in 1..=n {
            for j in 1..=n {
                let expected = match j as i64 - i as i64 {
                    0 => (1, 0),
                    1 => (0, 1),
                    _ => (0, 0),
                };
                assert_eq!(ext_dims::<Q>(n, i, j), Ok(expected), "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn graded_tables_for_seeded_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..10 {
        let c = PointPair::new(
            Angle::from_fraction(rng.gen_range(0..64), 64),
            Angle::from_fraction(rng.gen_range(0..64), 64),
        );
        for n in 1..=4 {
            let r = compare_graded::<Q>(n, &c);
            assert!(r.is_ok(), "n = {n} {c:?}: {:?}", r.mismatches);
        }
    }
}
