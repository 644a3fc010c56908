use serde::Serialize;

use crate::exactla::{RationalMatrix, VectorCollection};
use crate::graphcore::{
    components_below, ArrowClassification, ArrowKind, LevelStructure, Multigraph, VertexSet,
};

/// The four families of linear conditions on the arrow space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// Vanishing along downward arrows.
    R1,
    /// Local residue conditions, one per vertex.
    R2,
    /// Rosenlicht conditions, one per horizontal edge.
    R3,
    /// Global residue conditions, one per special component.
    R4,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::R1, Family::R2, Family::R3, Family::R4];
}

/// The rows of one family, as labeled 0/1 vectors in `Q^{2|E|}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSet {
    pub family: Family,
    pub rows: VectorCollection,
}

/// Key of a global residue row: the level `n` and the special component `Ξ`
/// below it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GlobalKey {
    pub level: usize,
    pub component: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraints {
    pub downward: ConstraintSet,
    pub local: ConstraintSet,
    pub rosenlicht: ConstraintSet,
    pub global: ConstraintSet,
    /// Parallel to `global.rows`.
    pub global_keys: Vec<GlobalKey>,
}

impl Constraints {
    pub fn family(&self, f: Family) -> &ConstraintSet {
        match f {
            Family::R1 => &self.downward,
            Family::R2 => &self.local,
            Family::R3 => &self.rosenlicht,
            Family::R4 => &self.global,
        }
    }

    /// Rows of the given families stacked into one matrix, in the order given.
    pub fn stacked(&self, families: &[Family]) -> RationalMatrix {
        let cols = self.downward.rows.ambient_dim();
        let mut m = RationalMatrix::zeros(0, cols);
        for &f in families {
            for v in self.family(f).rows.vectors() {
                m.push_row(&v.values);
            }
        }
        m
    }
}

/// Arrows with tail `v` that are not downward: the support of `1_v`.
pub fn local_support(g: &Multigraph, class: &ArrowClassification, v: usize) -> Vec<usize> {
    g.arrows()
        .iter()
        .filter(|a| a.tail == v && !class.is_downward(a.id))
        .map(|a| a.id)
        .collect()
}

/// Upward arrows from level `n` into `xi`: the support of `1_n^Ξ`.
pub fn global_support(
    g: &Multigraph,
    l: &LevelStructure,
    class: &ArrowClassification,
    n: usize,
    xi: VertexSet,
) -> Vec<usize> {
    let part = l.part(n);
    g.arrows()
        .iter()
        .filter(|a| {
            class.kind(a.id) == ArrowKind::Upward && part.contains(a.tail) && xi.contains(a.head)
        })
        .map(|a| a.id)
        .collect()
}

pub fn build_constraints(
    g: &Multigraph,
    l: &LevelStructure,
    class: &ArrowClassification,
) -> Constraints {
    let dim = g.arrow_count();

    let mut downward = VectorCollection::new(dim);
    for a in class.arrows_of_kind(ArrowKind::Downward) {
        downward.push_indicator(g.arrow_label(a), &[a]);
    }

    let mut local = VectorCollection::new(dim);
    for v in 0..g.vertex_count() {
        let support = local_support(g, class, v);
        if !support.is_empty() {
            local.push_indicator(g.vertex_name(v), &support);
        }
    }

    let mut rosenlicht = VectorCollection::new(dim);
    for &e in &class.horizontal_edges {
        let (u, v) = g.edges()[e];
        rosenlicht.push_indicator(
            format!("{}{}#{e}", g.vertex_name(u), g.vertex_name(v)),
            &[2 * e, 2 * e + 1],
        );
    }

    let mut global = VectorCollection::new(dim);
    let mut global_keys = Vec::new();
    for n in 2..=l.depth() {
        let below = components_below(g, l, n).expect("level in range");
        for xi in below.special {
            global.push_indicator(
                format!("({n},{})", g.set_label(xi)),
                &global_support(g, l, class, n, xi),
            );
            global_keys.push(GlobalKey {
                level: n,
                component: xi,
            });
        }
    }

    Constraints {
        downward: ConstraintSet {
            family: Family::R1,
            rows: downward,
        },
        local: ConstraintSet {
            family: Family::R2,
            rows: local,
        },
        rosenlicht: ConstraintSet {
            family: Family::R3,
            rows: rosenlicht,
        },
        global: ConstraintSet {
            family: Family::R4,
            rows: global,
        },
        global_keys,
    }
}
