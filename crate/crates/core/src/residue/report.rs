use serde::Serialize;

use super::constraints::{global_support, local_support};
use super::flag::ResidueFlag;
use crate::exactla::{set_theoretic_checks, SetTheoreticReport, Subspace, VectorCollection};
use crate::graphcore::{
    classify_arrows, components_below, summits, ArrowClassification, LevelStructure, Multigraph,
    Summits, VertexSet,
};

/// The three collections attached to a set `X` of level-`n` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCollections {
    /// Nonzero `1_v` for `v ∈ X`.
    pub local: VectorCollection,
    /// `1_e` for horizontal edges inside `X`.
    pub rosenlicht: VectorCollection,
    /// `1_n^Ξ` for the special components `Ξ` reached from `X`.
    pub global: VectorCollection,
}

impl BlockCollections {
    /// `T_glob ∪ Ros`, the side compared against the local vectors.
    pub fn global_and_rosenlicht(&self) -> VectorCollection {
        let mut c = self.global.clone();
        c.extend(&self.rosenlicht);
        c
    }
}

pub fn block_collections(
    g: &Multigraph,
    l: &LevelStructure,
    class: &ArrowClassification,
    n: usize,
    x: VertexSet,
) -> BlockCollections {
    let dim = g.arrow_count();
    let mut local = VectorCollection::new(dim);
    for v in x.iter() {
        let support = local_support(g, class, v);
        if !support.is_empty() {
            local.push_indicator(g.vertex_name(v), &support);
        }
    }
    let mut rosenlicht = VectorCollection::new(dim);
    for &e in &class.horizontal_edges {
        let (u, v) = g.edges()[e];
        if x.contains(u) && x.contains(v) {
            rosenlicht.push_indicator(
                format!("{}{}#{e}", g.vertex_name(u), g.vertex_name(v)),
                &[2 * e, 2 * e + 1],
            );
        }
    }
    let mut global = VectorCollection::new(dim);
    if n >= 2 {
        for xi in components_below(g, l, n).expect("level in range").special {
            let support = global_support(g, l, class, n, xi);
            if support.iter().any(|&a| x.contains(g.arrow(a).tail)) {
                global.push_indicator(format!("({n},{})", g.set_label(xi)), &support);
            }
        }
    }
    BlockCollections {
        local,
        rosenlicht,
        global,
    }
}

/// One row of the per-component table: level `n`, a component `C` of
/// `G[V_{h≤n}]`, and the block of non-downward arrows with tail in `C_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentRow {
    pub level: usize,
    pub component: Vec<String>,
    pub level_vertices: Vec<String>,
    pub block_dim: usize,
    pub lrc: usize,
    pub ros: usize,
    pub tglob: usize,
    pub codim_rosenlicht: usize,
    pub codim_global: usize,
    pub predicted_codim_rosenlicht: usize,
    pub predicted_codim_global: usize,
    pub checks: SetTheoreticReport,
    pub cardinalities_ok: bool,
}

/// Per-level sums of the component rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelRow {
    pub level: usize,
    pub lrc: usize,
    pub ros: usize,
    pub tglob: usize,
    pub codim_rosenlicht: usize,
    pub codim_global: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub components: Vec<ComponentRow>,
    pub levels: Vec<LevelRow>,
    /// `Σ codim_global = dim U − dim G` and `Σ codim_rosenlicht = dim U − dim R`.
    pub totals_ok: bool,
    /// Every measured codimension equals its prediction.
    pub predictions_ok: bool,
}

fn names(g: &Multigraph, set: VertexSet) -> Vec<String> {
    set.iter().map(|v| g.vertex_name(v).to_string()).collect()
}

/// Codimension of `w ∩ U_block` in `U_block`, with `block` a set of
/// coordinates on which `U` is free.
fn block_codim(w: &Subspace, block: &[usize]) -> usize {
    let outside: Vec<usize> = (0..w.ambient_dim())
        .filter(|i| block.binary_search(i).is_err())
        .collect();
    block.len()
        - w.kernel_of_projection(&outside)
            .expect("coordinates in range")
            .dim()
}

/// Codimension of the Rosenlicht block predicted from level components:
/// each level component contributes its local and Rosenlicht counts, less one
/// when it is a reducible summit.
fn predicted_rosenlicht(
    g: &Multigraph,
    class: &ArrowClassification,
    s: &Summits,
    level_part: VertexSet,
) -> usize {
    g.components_of(level_part)
        .into_iter()
        .map(|comp| {
            let lrc = comp
                .iter()
                .filter(|&v| !local_support(g, class, v).is_empty())
                .count();
            let ros = class
                .horizontal_edges
                .iter()
                .filter(|&&e| comp.contains(g.edges()[e].0))
                .count();
            lrc + ros - usize::from(s.is_reducible_summit(comp))
        })
        .sum()
}

pub fn per_component_report(
    g: &Multigraph,
    l: &LevelStructure,
    flag: &ResidueFlag,
) -> ComponentReport {
    let class = classify_arrows(g, l);
    let s = summits(g, l);
    let mut components = Vec::new();
    let mut levels = Vec::new();
    for n in 1..=l.depth() {
        let mut level_row = LevelRow {
            level: n,
            lrc: 0,
            ros: 0,
            tglob: 0,
            codim_rosenlicht: 0,
            codim_global: 0,
        };
        let special = if n >= 2 {
            components_below(g, l, n).expect("level in range").special
        } else {
            Vec::new()
        };
        for c in g.components_of(l.at_or_below(n)) {
            let cn = c.intersection(l.part(n));
            let block: Vec<usize> = g
                .arrows()
                .iter()
                .filter(|a| cn.contains(a.tail) && !class.is_downward(a.id))
                .map(|a| a.id)
                .collect();
            let cols = block_collections(g, l, &class, n, cn);
            let checks = set_theoretic_checks(&cols.global_and_rosenlicht(), &cols.local)
                .expect("same ambient space");
            let (lrc, ros, tglob) = (cols.local.len(), cols.rosenlicht.len(), cols.global.len());

            let irreducible_singleton = s.is_irreducible_summit(c);
            let expected_lrc = if irreducible_singleton { 0 } else { cn.len() };
            let expected_ros = g
                .edges()
                .iter()
                .filter(|&&(u, v)| cn.contains(u) && cn.contains(v))
                .count();
            let expected_tglob = special.iter().filter(|xi| xi.is_subset(c)).count();
            let cardinalities_ok =
                (lrc, ros, tglob) == (expected_lrc, expected_ros, expected_tglob);

            let total = lrc + ros + tglob;
            let row = ComponentRow {
                level: n,
                component: names(g, c),
                level_vertices: names(g, cn),
                block_dim: block.len(),
                lrc,
                ros,
                tglob,
                codim_rosenlicht: block_codim(&flag.rosenlicht, &block),
                codim_global: block_codim(&flag.global, &block),
                predicted_codim_rosenlicht: predicted_rosenlicht(g, &class, &s, cn),
                predicted_codim_global: total - usize::from(checks.related == Some(true)),
                checks,
                cardinalities_ok,
            };
            level_row.lrc += lrc;
            level_row.ros += ros;
            level_row.tglob += tglob;
            level_row.codim_rosenlicht += row.codim_rosenlicht;
            level_row.codim_global += row.codim_global;
            components.push(row);
        }
        levels.push(level_row);
    }
    let dims = flag.dims();
    let sum_global: usize = levels.iter().map(|r| r.codim_global).sum();
    let sum_ros: usize = levels.iter().map(|r| r.codim_rosenlicht).sum();
    let totals_ok = sum_global == dims[0] - dims[3] && sum_ros == dims[0] - dims[2];
    let predictions_ok = components.iter().all(|r| {
        r.cardinalities_ok
            && r.codim_global == r.predicted_codim_global
            && r.codim_rosenlicht == r.predicted_codim_rosenlicht
    });
    ComponentReport {
        components,
        levels,
        totals_ok,
        predictions_ok,
    }
}
