use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use respoly::exactla::{random_sti_collection, set_theoretic_checks, Rational, VectorCollection};

fn union(a: &VectorCollection, b: &VectorCollection) -> VectorCollection {
    let mut u = a.clone();
    u.extend(b);
    u
}

#[test]
fn unrelated_and_properly_unrelated_collections() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let (mut unrelated, mut proper) = (0, 0);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=8);
        let c1 = random_sti_collection(&mut rng, n, "a");
        let c2 = random_sti_collection(&mut rng, n, "b");
        let r = set_theoretic_checks(&c1, &c2).unwrap();
        assert!(r.sti_1 && r.sti_2);
        let u = union(&c1, &c2);
        if r.related == Some(false) {
            unrelated += 1;
            assert_eq!(u.rank(), u.len(), "{c1:?} {c2:?}");
        }
        if r.properly_unrelated == Some(true) {
            proper += 1;
            for i in 0..c1.len() {
                let dropped = union(&c1.without(i), &c2);
                assert_eq!(dropped.rank(), dropped.len(), "{c1:?} {c2:?} drop {i}");
            }
        }
    }
    assert!(unrelated > 50 && proper > 100, "{unrelated} {proper}");
}

#[test]
fn small_examples() {
    let e = |n: usize, i: usize| {
        let mut v = vec![Rational::ZERO; n];
        v[i] = Rational::ONE;
        v
    };
    let mut c1 = VectorCollection::new(3);
    c1.push("e1", e(3, 0));
    c1.push("e2", e(3, 1));
    let mut c2 = VectorCollection::new(3);
    c2.push("e3", e(3, 2));
    let r = set_theoretic_checks(&c1, &c2).unwrap();
    assert_eq!((r.sti_1, r.sti_2, r.related), (true, true, Some(false)));

    let mut c1 = VectorCollection::new(2);
    c1.push_indicator("e1+e2", &[0, 1]);
    let mut c2 = VectorCollection::new(2);
    c2.push("e1", e(2, 0));
    c2.push("e2", e(2, 1));
    let r = set_theoretic_checks(&c1, &c2).unwrap();
    assert_eq!((r.related, r.properly_unrelated), (Some(true), Some(true)));
}
