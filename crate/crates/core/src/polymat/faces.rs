use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::{
    base_polytope, gamma_table, BasePolytope, PolyError, SetFunction, DEFAULT_VERTEX_BOUND,
};
use crate::exactla::Rational;
use crate::graphcore::{enumerate_ordered_partitions, LevelStructure, Multigraph};

/// Largest vertex count for the exhaustive face sweep.
pub const DEFAULT_FACE_BOUND: usize = 6;

/// Which chain of tight inequalities cuts out the face of an ordered partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Orientation {
    /// `q(F_n) = η(F_n)` for every `n`: lower levels are filled first.
    #[serde(rename = "tight-at-eta")]
    TightAtEta,
    /// `q(F_n) = η*(F_n)` for every `n`: upper levels are filled first.
    #[serde(rename = "tight-at-adjoint")]
    TightAtAdjoint,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::TightAtEta, Orientation::TightAtAdjoint];

    pub fn name(self) -> &'static str {
        match self {
            Orientation::TightAtEta => "tight-at-eta",
            Orientation::TightAtAdjoint => "tight-at-adjoint",
        }
    }
}

/// A weight constant on parts and strictly monotone in the level whose
/// maximizers are the chain face.
pub fn chain_weights(l: &LevelStructure, o: Orientation) -> Vec<Rational> {
    let r = l.depth() as i64;
    l.levels()
        .iter()
        .map(|&h| {
            Rational::from_integer(match o {
                Orientation::TightAtEta => r - h as i64 + 1,
                Orientation::TightAtAdjoint => h as i64,
            })
        })
        .collect()
}

/// Indices of the vertices of `p` tight along the chain `F_1 ⊂ … ⊂ F_r`.
pub fn chain_face(
    p: &BasePolytope,
    l: &LevelStructure,
    o: Orientation,
) -> Result<Vec<usize>, PolyError> {
    if l.vertex_count() != p.table.ground_size() {
        return Err(PolyError::GroundMismatch {
            left: p.table.ground_size(),
            right: l.vertex_count(),
        });
    }
    let reference = match o {
        Orientation::TightAtEta => p.table.clone(),
        Orientation::TightAtAdjoint => p.table.adjoint(),
    };
    let chain: Vec<_> = (1..=l.depth()).map(|n| l.at_or_below(n)).collect();
    Ok(p.vertices
        .iter()
        .enumerate()
        .filter(|(_, q)| {
            chain
                .iter()
                .all(|&f| super::point_value(q, f) == *reference.value(f))
        })
        .map(|(i, _)| i)
        .collect())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FaceTheoremReport {
    pub vertex_count: usize,
    pub partitions: usize,
    pub residue_polytope_vertices: usize,
    /// Number of partitions whose polytope equals the chain face, per orientation.
    pub eta_matches: usize,
    pub adjoint_matches: usize,
    /// Orientations matching every partition (both, when only the trivial
    /// partition exists or the polytope is a point).
    pub consistent_orientations: Vec<Orientation>,
    /// The orientation reported: the adjoint one whenever it is consistent.
    pub orientation: Option<Orientation>,
    pub coarsening_pairs: usize,
    pub distinct_faces: usize,
    pub violations: Vec<String>,
    pub passed: bool,
}

/// One ordered partition's polytope and table, with its face in `P_res`.
#[derive(Clone, Debug)]
pub struct PartitionFace {
    pub level: LevelStructure,
    pub gamma: SetFunction,
    pub polytope: BasePolytope,
    /// Vertex indices of `P_π` inside `P_res` (those that are present).
    pub face: Vec<usize>,
}

pub fn verify_face_theorem(g: &Multigraph, bound: usize) -> Result<FaceTheoremReport, PolyError> {
    face_sweep(g, bound).map(|(report, _)| report)
}

/// [`verify_face_theorem`], also returning each partition's polytope and face.
pub fn face_sweep(
    g: &Multigraph,
    bound: usize,
) -> Result<(FaceTheoremReport, Vec<PartitionFace>), PolyError> {
    let n = g.vertex_count();
    if n > bound {
        return Err(PolyError::BoundExceeded {
            what: "face sweep",
            size: n,
            bound,
        });
    }
    let mut report = FaceTheoremReport {
        vertex_count: n,
        ..Default::default()
    };
    let label = |l: &LevelStructure| format!("{:?}", l.levels());

    let res = base_polytope(
        &gamma_table(g, &LevelStructure::trivial(n), bound)?,
        DEFAULT_VERTEX_BOUND,
    )?;
    report.residue_polytope_vertices = res.vertices.len();

    let partitions = enumerate_ordered_partitions(n, bound).map_err(PolyError::Graph)?;
    report.partitions = partitions.len();
    let mut faces = Vec::with_capacity(partitions.len());
    let mut matches = [true, true];
    for l in partitions {
        let gamma = gamma_table(g, &l, bound)?;
        let lbl = label(&l);
        if !(gamma.is_submodular()
            && gamma.is_nondecreasing()
            && gamma.is_nonnegative()
            && gamma.is_integer_valued())
        {
            report
                .violations
                .push(format!("{lbl}: gamma is not a polymatroid rank function"));
        }
        if *gamma.range() != Rational::from_integer(g.genus() as i64) {
            report.violations.push(format!(
                "{lbl}: gamma(V) = {} but g = {}",
                gamma.range(),
                g.genus()
            ));
        }
        let polytope = base_polytope(&gamma, DEFAULT_VERTEX_BOUND)?;
        let mut face = Vec::new();
        for q in &polytope.vertices {
            match res.vertex_index(q) {
                Some(i) => face.push(i),
                None => report.violations.push(format!(
                    "{lbl}: vertex {q:?} is not a vertex of the residue polytope"
                )),
            }
        }
        face.sort_unstable();
        for (k, o) in Orientation::BOTH.into_iter().enumerate() {
            let chain = chain_face(&res, &l, o)?;
            if res.argmax(&chain_weights(&l, o)) != chain {
                report.violations.push(format!(
                    "{lbl}: {} chain face is not the argmax face",
                    o.name()
                ));
            }
            if chain == face && face.len() == polytope.vertices.len() {
                if k == 0 {
                    report.eta_matches += 1;
                } else {
                    report.adjoint_matches += 1;
                }
            } else {
                matches[k] = false;
            }
        }
        faces.push(PartitionFace {
            level: l,
            gamma,
            polytope,
            face,
        });
    }
    report.consistent_orientations = Orientation::BOTH
        .into_iter()
        .zip(matches)
        .filter(|&(_, m)| m)
        .map(|(o, _)| o)
        .collect();
    report.orientation = report.consistent_orientations.iter().copied().max();
    if report.orientation.is_none() {
        report
            .violations
            .push("no chain-face orientation matches every partition".to_string());
    }

    // Coarsening monotonicity.
    let index: HashMap<&LevelStructure, usize> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (&f.level, i))
        .collect();
    for fine in &faces {
        for coarse in fine.level.coarsenings() {
            if coarse == fine.level {
                continue;
            }
            report.coarsening_pairs += 1;
            let c = &faces[index[&coarse]];
            let lbl = format!("{} ⪯ {}", label(&fine.level), label(&c.level));
            if !fine
                .polytope
                .vertices
                .iter()
                .all(|q| c.polytope.has_vertex(q))
            {
                report
                    .violations
                    .push(format!("{lbl}: vertex sets not nested"));
            }
            if !fine.gamma.le(&c.gamma) {
                report
                    .violations
                    .push(format!("{lbl}: gamma not pointwise below"));
            }
        }
    }

    // Surjectivity onto the chain faces of the resolved orientation.
    let realized: BTreeSet<&Vec<usize>> = faces.iter().map(|f| &f.face).collect();
    let orientation = report.orientation.unwrap_or(Orientation::TightAtAdjoint);
    let mut chain_faces = BTreeSet::new();
    for f in &faces {
        chain_faces.insert(chain_face(&res, &f.level, orientation)?);
    }
    report.distinct_faces = chain_faces.len();
    for cf in &chain_faces {
        if !realized.contains(cf) {
            report.violations.push(format!(
                "chain face {cf:?} is not realized by any partition"
            ));
        }
    }
    report.passed = report.violations.is_empty();
    Ok((report, faces))
}
