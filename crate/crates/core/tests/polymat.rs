use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use respoly::exactla::{Rational, Subspace};
use respoly::graphcore::{
    fixtures, random_level_graph, LevelStructure, Multigraph, RandomGraphParams, VertexSet,
};
use respoly::polymat::{
    base_polytope, chain_face, gamma_table, pi0_gamma_by_contraction, splitting,
    verify_face_theorem, Modularity, Orientation, SetFunction,
};

fn int(x: i64) -> Rational {
    Rational::from_integer(x)
}

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

/// Affine dimension of a point set.
fn affine_dim(points: &[&Vec<Rational>]) -> usize {
    let base = points[0];
    let diffs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    Subspace::span(base.len(), diffs).dim()
}

#[test]
fn k4_gamma_values() {
    let (g, l) = fixtures::load("K4");
    let t = gamma_table(&g, &l, 12).unwrap();
    for bits in 1..16u64 {
        let set = VertexSet::from_bits(bits);
        let expected = if set.len() == 1 { 2 } else { 3 };
        assert_eq!(*t.value(set), int(expected), "{set:?}");
    }
    assert_eq!(t, pi0_gamma_by_contraction(&g, 12).unwrap());

    let adj = t.adjoint();
    for bits in 0..16u64 {
        let set = VertexSet::from_bits(bits);
        let expected = match set.len() {
            0..=2 => 0,
            3 => 1,
            _ => 3,
        };
        assert_eq!(*adj.value(set), int(expected));
    }
}

#[test]
fn c3_loop_and_tree_gamma() {
    let (g, l) = fixtures::load("C3");
    let t = gamma_table(&g, &l, 12).unwrap();
    assert!((1..8u64).all(|b| *t.value(VertexSet::from_bits(b)) == Rational::ONE));

    let (g, l) = fixtures::load("LOOP1");
    assert_eq!(
        *gamma_table(&g, &l, 12)
            .unwrap()
            .value(VertexSet::singleton(0)),
        Rational::ONE
    );

    let tree = Multigraph::from_names(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("b", "d")])
        .unwrap();
    assert_eq!(
        pi0_gamma_by_contraction(&tree, 12).unwrap(),
        SetFunction::zero(4)
    );
    assert_eq!(
        gamma_table(&tree, &LevelStructure::trivial(4), 12).unwrap(),
        SetFunction::zero(4)
    );
}

#[test]
fn fig1_gamma_vanishes_on_lower_vertex() {
    let (g, l) = fixtures::load("FIG1");
    let t = gamma_table(&g, &l, 12).unwrap();
    assert!(t
        .value(VertexSet::singleton(g.vertex_index("u4").unwrap()))
        .is_zero());
    assert_eq!(*t.range(), int(3));
}

#[test]
fn gamma_bound_is_enforced() {
    let (g, l) = fixtures::load("FIG2");
    assert!(gamma_table(&g, &l, 8).is_err());
    assert!(gamma_table(&g, &l, 12).is_ok());
}

#[test]
fn k4_residue_polytope() {
    let (g, l) = fixtures::load("K4");
    let p = base_polytope(&gamma_table(&g, &l, 12).unwrap(), 8).unwrap();
    assert_eq!(p.vertices.len(), 12);
    let mut expected = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                let mut q = vec![0; 4];
                q[i] = 2;
                q[j] = 1;
                expected.push(ints(&q));
            }
        }
    }
    expected.sort();
    assert_eq!(p.vertices, expected);
}

#[test]
fn c3_residue_polytope_is_unit_simplex() {
    let (g, l) = fixtures::load("C3");
    let p = base_polytope(&gamma_table(&g, &l, 12).unwrap(), 8).unwrap();
    assert_eq!(
        p.vertices,
        vec![ints(&[0, 0, 1]), ints(&[0, 1, 0]), ints(&[1, 0, 0])]
    );
    let single = Multigraph::from_names::<&str>(&["v"], &[]).unwrap();
    let p = base_polytope(
        &gamma_table(&single, &LevelStructure::trivial(1), 12).unwrap(),
        8,
    )
    .unwrap();
    assert_eq!(p.vertices, vec![ints(&[0])]);
}

#[test]
fn k4_chain_faces() {
    let (g, l0) = fixtures::load("K4");
    let p = base_polytope(&gamma_table(&g, &l0, 12).unwrap(), 8).unwrap();
    assert_eq!(
        chain_face(&p, &l0, Orientation::TightAtEta).unwrap().len(),
        12
    );
    assert_eq!(
        chain_face(&p, &l0, Orientation::TightAtAdjoint)
            .unwrap()
            .len(),
        12
    );

    // v1 alone on the lower level.
    let l = LevelStructure::from_levels(&[1, 2, 2, 2]);
    let eta = chain_face(&p, &l, Orientation::TightAtEta).unwrap();
    assert_eq!(eta.len(), 3);
    assert!(eta.iter().all(|&i| p.vertices[i][0] == int(2)));
    let adj = chain_face(&p, &l, Orientation::TightAtAdjoint).unwrap();
    assert_eq!(adj.len(), 6);
    assert!(adj.iter().all(|&i| p.vertices[i][0].is_zero()));

    // The polytope of that level graph is the adjoint-tight face.
    let pl = base_polytope(&gamma_table(&g, &l, 12).unwrap(), 8).unwrap();
    let realized: Vec<usize> = pl
        .vertices
        .iter()
        .map(|q| p.vertex_index(q).unwrap())
        .collect();
    let mut sorted = realized.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, adj);
}

#[test]
fn k4_face_theorem() {
    let (g, _) = fixtures::load("K4");
    let report = verify_face_theorem(&g, 6).unwrap();
    assert!(report.passed, "{report:#?}");
    assert_eq!(report.partitions, 75);
    assert_eq!(report.orientation, Some(Orientation::TightAtAdjoint));
    // The truncated tetrahedron has 12 vertices, 18 edges, 8 facets.
    assert_eq!(report.distinct_faces, 12 + 18 + 8 + 1);
}

#[test]
fn k4_face_dimensions_match_truncated_tetrahedron() {
    let (g, l0) = fixtures::load("K4");
    let p = base_polytope(&gamma_table(&g, &l0, 12).unwrap(), 8).unwrap();
    let mut faces = std::collections::BTreeSet::new();
    for l in respoly::graphcore::enumerate_ordered_partitions(4, 8).unwrap() {
        faces.insert(chain_face(&p, &l, Orientation::TightAtAdjoint).unwrap());
    }
    let mut by_dim = [0usize; 4];
    for f in &faces {
        let pts: Vec<&Vec<Rational>> = f.iter().map(|&i| &p.vertices[i]).collect();
        by_dim[affine_dim(&pts)] += 1;
    }
    assert_eq!(by_dim, [12, 18, 8, 1]);
}

#[test]
fn c3_face_theorem() {
    let (g, _) = fixtures::load("C3");
    let report = verify_face_theorem(&g, 6).unwrap();
    assert!(report.passed, "{report:#?}");
    assert_eq!(report.partitions, 13);
    assert_eq!(report.distinct_faces, 7);
}

#[test]
fn face_sweep_bound() {
    let (g, _) = fixtures::load("FIG1");
    assert!(verify_face_theorem(&g, 4).is_err());
}

#[test]
fn k4_splitting_matches_level_graph() {
    let (g, l0) = fixtures::load("K4");
    let l = LevelStructure::from_levels(&[1, 2, 2, 2]);
    let coarse = gamma_table(&g, &l0, 12).unwrap();
    let fine = gamma_table(&g, &l, 12).unwrap();
    assert_eq!(
        splitting(&coarse, &l, Modularity::Submodular).unwrap(),
        fine
    );
    // Equivalently, the supermodular adjoints split to each other.
    assert_eq!(
        splitting(&coarse.adjoint(), &l, Modularity::Supermodular).unwrap(),
        fine.adjoint()
    );
}

#[test]
fn random_gamma_tables() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let (g, l) = random_level_graph(&mut rng, RandomGraphParams::default());
        let t = gamma_table(&g, &l, 12).unwrap();
        assert!(
            t.is_submodular()
                && t.is_nondecreasing()
                && t.is_nonnegative()
                && t.is_integer_valued()
        );
        assert_eq!(*t.range(), int(g.genus() as i64));
        assert_eq!(t.adjoint().adjoint(), t);
        assert!(t.adjoint().le(&t));
        let t0 = gamma_table(&g, &LevelStructure::trivial(g.vertex_count()), 12).unwrap();
        assert_eq!(t0, pi0_gamma_by_contraction(&g, 12).unwrap());
        assert!(t.le(&t0));
    }
}

#[test]
fn greedy_vertices_are_tight_on_prefixes() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let (g, l) = random_level_graph(&mut rng, RandomGraphParams::default());
        let t = gamma_table(&g, &l, 12).unwrap();
        let p = base_polytope(&t, 8).unwrap();
        respoly::polymat::for_each_permutation(g.vertex_count(), |order| {
            let q = respoly::polymat::greedy_vertex(&t, order);
            assert!(p.has_vertex(&q));
            let mut prefix = VertexSet::EMPTY;
            for &i in order {
                prefix.insert(i);
                assert_eq!(respoly::polymat::point_value(&q, prefix), *t.value(prefix));
            }
        });
    }
}

#[test]
fn random_face_theorem() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..5 {
        let (g, _) = random_level_graph(&mut rng, RandomGraphParams::default());
        let report = verify_face_theorem(&g, 6).unwrap();
        assert!(report.passed, "{g:?}: {report:#?}");
    }
}
