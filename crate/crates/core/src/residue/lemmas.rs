use serde::Serialize;

use super::report::block_collections;
use crate::exactla::{set_theoretic_checks, Rational, SetTheoreticReport};
use crate::graphcore::{classify_arrows, summits, LevelStructure, Multigraph};

/// Outcome of the relatedness predicates on one block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub level: usize,
    pub vertices: Vec<String>,
    pub report: SetTheoreticReport,
    pub expected_related: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    /// Local vs Rosenlicht vectors on each level component: always properly
    /// unrelated, related exactly for reducible summits.
    pub level_components: Vec<RelationCheck>,
    /// `T_glob ∪ Ros` vs local vectors on each `C_n` that is nonempty and not
    /// an irreducible summit: related but properly unrelated.
    pub components: Vec<RelationCheck>,
    /// For each reducible summit `S`, `Σ_{v∈S} 1_v − Σ_e 1_e` vanishes.
    pub summit_relations: Vec<bool>,
}

impl LemmaReport {
    pub fn all_ok(&self) -> bool {
        self.level_components.iter().all(|c| c.ok)
            && self.components.iter().all(|c| c.ok)
            && self.summit_relations.iter().all(|&b| b)
    }
}

pub fn lemma_checks(g: &Multigraph, l: &LevelStructure) -> LemmaReport {
    let class = classify_arrows(g, l);
    let s = summits(g, l);
    let names = |set: crate::graphcore::VertexSet| {
        set.iter().map(|v| g.vertex_name(v).to_string()).collect()
    };
    let mut out = LemmaReport::default();
    for n in 1..=l.depth() {
        for comp in g.components_of(l.part(n)) {
            let cols = block_collections(g, l, &class, n, comp);
            let report =
                set_theoretic_checks(&cols.local, &cols.rosenlicht).expect("same ambient space");
            let expected_related = s.is_reducible_summit(comp);
            let ok =
                report.properly_unrelated == Some(true) && report.related == Some(expected_related);
            out.level_components.push(RelationCheck {
                level: n,
                vertices: names(comp),
                report,
                expected_related,
                ok,
            });

            if expected_related {
                // Σ 1_v over S minus Σ 1_e over its horizontal edges.
                let mut total = vec![Rational::ZERO; g.arrow_count()];
                for v in cols.local.vectors() {
                    total.iter_mut().zip(&v.values).for_each(|(t, x)| *t += x);
                }
                for e in cols.rosenlicht.vectors() {
                    total.iter_mut().zip(&e.values).for_each(|(t, x)| *t -= x);
                }
                out.summit_relations
                    .push(total.iter().all(Rational::is_zero));
            }
        }
        for c in g.components_of(l.at_or_below(n)) {
            let cn = c.intersection(l.part(n));
            if cn.is_empty() || s.is_irreducible_summit(c) {
                continue;
            }
            let cols = block_collections(g, l, &class, n, cn);
            let report = set_theoretic_checks(&cols.global_and_rosenlicht(), &cols.local)
                .expect("same ambient space");
            let ok = report.related == Some(true) && report.properly_unrelated == Some(true);
            out.components.push(RelationCheck {
                level: n,
                vertices: names(c),
                report,
                expected_related: true,
                ok,
            });
        }
    }
    out
}
