use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use respoly::degen::{
    arrow_blocks, flag_and_realization, initial_space_limit, plucker_limit_oracle,
    verify_degeneration_theorem, DegenError, LaurentSubspace, WeightAssignment,
};
use respoly::exactla::{Rational, Subspace};
use respoly::graphcore::{
    enumerate_ordered_partitions, fixtures, random_level_graph, LevelStructure, RandomGraphParams,
    VertexSet,
};
use respoly::polymat::{splitting, Modularity, SetFunction};
use respoly::residue::residue_space;

fn q(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| Rational::from_integer(x)).collect()
}

fn random_subspace(rng: &mut ChaCha8Rng, n: usize) -> Subspace {
    let m = rng.gen_range(0..=n);
    let rows: Vec<Vec<Rational>> = (0..m)
        .map(|_| {
            (0..n)
                .map(|_| {
                    Rational::from_integer(if rng.gen_bool(0.4) {
                        0
                    } else {
                        rng.gen_range(-3..=3)
                    })
                })
                .collect()
        })
        .collect();
    Subspace::span(n, rows)
}

#[test]
fn two_coordinate_example() {
    let w = Subspace::span(2, [q(&[1, 1])]);
    let ls = LaurentSubspace::new(w.clone(), vec![0, 1]).unwrap();
    let expected = Subspace::span(2, [q(&[0, 1])]);
    assert_eq!(initial_space_limit(&ls), expected);
    assert_eq!(plucker_limit_oracle(&ls).unwrap(), expected);

    let r = flag_and_realization(&w, &[vec![0], vec![1]]).unwrap();
    assert!(r.flag[0].is_zero());
    assert_eq!(r.flag[1], w);
    assert_eq!(r.realization, expected);
}

#[test]
fn constant_weights_fix_the_subspace() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..50 {
        let n = rng.gen_range(1..=6);
        let w = random_subspace(&mut rng, n);
        let c = rng.gen_range(-5..=5);
        let ls = LaurentSubspace::new(w.clone(), vec![c; n]).unwrap();
        assert_eq!(initial_space_limit(&ls), w);
        assert_eq!(plucker_limit_oracle(&ls).unwrap(), w);
        assert_eq!(
            flag_and_realization(&w, &[(0..n).collect()])
                .unwrap()
                .realization,
            w
        );
    }
}

#[test]
fn limits_agree_with_oracle_and_realization() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..300 {
        let n = rng.gen_range(1..=7);
        let w = random_subspace(&mut rng, n);
        let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        let ls = LaurentSubspace::new(w.clone(), weights.clone()).unwrap();
        let limit = initial_space_limit(&ls);
        assert_eq!(limit.dim(), w.dim());
        assert_eq!(
            plucker_limit_oracle(&ls).unwrap(),
            limit,
            "{w:?} {weights:?}"
        );

        // Blocks follow the weights' level sets, lowest weight first.
        let mut levels: Vec<i64> = weights.clone();
        levels.sort_unstable();
        levels.dedup();
        let blocks: Vec<Vec<usize>> = levels
            .iter()
            .map(|&x| (0..n).filter(|&j| weights[j] == x).collect())
            .collect();
        let r = flag_and_realization(&w, &blocks).unwrap();
        assert_eq!(r.realization, limit);
        assert_eq!(
            flag_and_realization(&r.realization, &blocks)
                .unwrap()
                .realization,
            r.realization
        );
        for pair in r.flag.windows(2) {
            assert!(pair[0].is_subspace_of(&pair[1]));
        }
    }
}

#[test]
fn blocks_must_partition() {
    let w = Subspace::full(3);
    assert_eq!(
        flag_and_realization(&w, &[vec![0], vec![1]]),
        Err(DegenError::BlocksNotPartition)
    );
    assert_eq!(
        flag_and_realization(&w, &[vec![0, 1], vec![1, 2]]),
        Err(DegenError::BlocksNotPartition)
    );
    assert!(LaurentSubspace::new(w, vec![0, 1]).is_err());
}

#[test]
fn plucker_bound() {
    let w = Subspace::full(20);
    let mut rows = Vec::new();
    for i in 0..10 {
        let mut r = vec![Rational::ZERO; 20];
        r[i] = Rational::ONE;
        rows.push(r);
    }
    let w10 = Subspace::span(20, rows);
    assert!(plucker_limit_oracle(&LaurentSubspace::new(w10, vec![0; 20]).unwrap()).is_err());
    assert!(plucker_limit_oracle(&LaurentSubspace::new(w, vec![0; 20]).unwrap()).is_ok());
}

#[test]
fn fig1_limit_of_cycle_space() {
    let (g, l) = fixtures::load("FIG1");
    let l0 = LevelStructure::trivial(g.vertex_count());
    let ls =
        LaurentSubspace::on_arrows(&g, residue_space(&g, &l0), &WeightAssignment::standard(&l))
            .unwrap();
    assert_eq!(initial_space_limit(&ls), residue_space(&g, &l));
    let report = verify_degeneration_theorem(&g, &l, &l0).unwrap();
    assert!(report.checks.passed(), "{:?}", report.checks);
    assert_eq!(report.checks.plucker_agrees, Some(true));
    // Identity coarsening.
    assert!(verify_degeneration_theorem(&g, &l, &l)
        .unwrap()
        .checks
        .passed());
}

#[test]
fn k4_realization() {
    let (g, l0) = fixtures::load("K4");
    let l = LevelStructure::from_levels(&[1, 2, 2, 2]);
    let cycle = residue_space(&g, &l0);
    let r = flag_and_realization(&cycle, &arrow_blocks(&g, &l)).unwrap();
    assert_eq!(r.realization, residue_space(&g, &l));
    let ls = LaurentSubspace::on_arrows(&g, cycle, &WeightAssignment::standard(&l)).unwrap();
    assert_eq!(plucker_limit_oracle(&ls).unwrap(), initial_space_limit(&ls));
}

#[test]
fn fig2_merge_lower_levels() {
    let (g, l) = fixtures::load("FIG2");
    let coarse = LevelStructure::from_levels(
        &l.levels()
            .iter()
            .map(|&h| if h <= 2 { 1 } else { 2 })
            .collect::<Vec<i64>>(),
    );
    let report = verify_degeneration_theorem(&g, &l, &coarse).unwrap();
    assert!(report.checks.passed(), "{:?}", report.checks);
    assert!(verify_degeneration_theorem(&g, &coarse, &l).is_err());
}

#[test]
fn every_fixture_against_every_coarsening() {
    for (name, _) in fixtures::ALL {
        let (g, l) = fixtures::load(name);
        for coarse in l.coarsenings() {
            let report = verify_degeneration_theorem(&g, &l, &coarse).unwrap();
            assert!(report.checks.passed(), "{name}: {:?}", report.checks);
        }
    }
}

#[test]
fn random_coarsening_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..40 {
        let (g, _) = random_level_graph(&mut rng, RandomGraphParams::default());
        let parts = enumerate_ordered_partitions(g.vertex_count(), 8).unwrap();
        let fine = &parts[rng.gen_range(0..parts.len())];
        let coarsenings = fine.coarsenings();
        let coarse = &coarsenings[rng.gen_range(0..coarsenings.len())];
        let report = verify_degeneration_theorem(&g, fine, coarse).unwrap();
        assert!(
            report.checks.passed(),
            "{g:?} {fine:?} {coarse:?}: {:?}",
            report.checks
        );
    }
}

/// Projected ranks of the realization are the splitting of those of the input,
/// for arbitrary subspaces with `k` coordinates per ground element.
#[test]
fn realization_splits_projected_ranks() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..150 {
        let v = rng.gen_range(1..=4);
        let k = rng.gen_range(1..=2);
        let n = v * k;
        let w = random_subspace(&mut rng, n);
        let raw: Vec<i64> = (0..v).map(|_| rng.gen_range(0..v as i64)).collect();
        let l = LevelStructure::from_levels(&raw);
        let coords = |set: VertexSet| -> Vec<usize> {
            set.iter().flat_map(|i| i * k..(i + 1) * k).collect()
        };
        let table = |s: &Subspace| {
            SetFunction::from_fn(v, |set| {
                Rational::from_integer(s.projected_rank(&coords(set)).unwrap() as i64)
            })
        };
        let blocks: Vec<Vec<usize>> = l.parts().iter().map(|&p| coords(p)).collect();
        let r = flag_and_realization(&w, &blocks).unwrap();
        assert_eq!(
            table(&r.realization),
            splitting(&table(&w), &l, Modularity::Submodular).unwrap()
        );
    }
}
