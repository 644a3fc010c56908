use serde::Serialize;

use super::constraints::{build_constraints, Constraints, Family};
use crate::exactla::{kernel, Subspace};
use crate::graphcore::{classify_arrows, summits, LevelStructure, Multigraph};

/// Combinatorial counts entering the dimension formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FlagCounts {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub genus: usize,
    pub depth: usize,
    pub vertical_edges: usize,
    pub horizontal_edges: usize,
    pub summits_irreducible: usize,
    pub summits_reducible: usize,
    pub summits: usize,
}

impl FlagCounts {
    pub fn of(g: &Multigraph, l: &LevelStructure) -> Self {
        let class = classify_arrows(g, l);
        let s = summits(g, l);
        Self {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            components: g.component_count(),
            genus: g.genus(),
            depth: l.depth(),
            vertical_edges: class.vertical_edges.len(),
            horizontal_edges: class.horizontal_edges.len(),
            summits_irreducible: s.irreducible_count(),
            summits_reducible: s.reducible_count(),
            summits: s.count(),
        }
    }
}

/// One dimension identity, evaluated on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub ok: bool,
}

impl IdentityCheck {
    fn new(name: &'static str, lhs: i64, rhs: i64) -> Self {
        Self {
            name,
            lhs,
            rhs,
            ok: lhs == rhs,
        }
    }
}

/// The flag `Υ ⊇ Υ⁰ ⊇ R ⊇ G` of subspaces of the arrow space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueFlag {
    pub upsilon: Subspace,
    pub upsilon0: Subspace,
    pub rosenlicht: Subspace,
    pub global: Subspace,
    pub counts: FlagCounts,
}

impl ResidueFlag {
    pub fn dims(&self) -> [usize; 4] {
        [
            self.upsilon.dim(),
            self.upsilon0.dim(),
            self.rosenlicht.dim(),
            self.global.dim(),
        ]
    }

    pub fn inclusions_hold(&self) -> bool {
        self.global.is_subspace_of(&self.rosenlicht)
            && self.rosenlicht.is_subspace_of(&self.upsilon0)
            && self.upsilon0.is_subspace_of(&self.upsilon)
    }

    /// The five dimension identities, in flag order.
    pub fn identities(&self) -> Vec<IdentityCheck> {
        let c = &self.counts;
        let [u, u0, r, g] = self.dims().map(|d| d as i64);
        let n = |x: usize| x as i64;
        vec![
            IdentityCheck::new(
                "dim U = 2|E| - |E_vert|",
                u,
                2 * n(c.edges) - n(c.vertical_edges),
            ),
            IdentityCheck::new(
                "dim U - dim U0 = |V| - s_ir",
                u - u0,
                n(c.vertices) - n(c.summits_irreducible),
            ),
            IdentityCheck::new(
                "dim U0 - dim R = |E_hor| - s_red",
                u0 - r,
                n(c.horizontal_edges) - n(c.summits_reducible),
            ),
            IdentityCheck::new(
                "dim R - dim G = s - c",
                r - g,
                n(c.summits) - n(c.components),
            ),
            IdentityCheck::new(
                "dim G = |E| - |V| + c",
                g,
                n(c.edges) + n(c.components) - n(c.vertices),
            ),
        ]
    }

    pub fn all_identities_hold(&self) -> bool {
        self.inclusions_hold() && self.identities().iter().all(|c| c.ok)
    }
}

/// Builds the four families and the flag they cut out, imposing them cumulatively.
pub fn build_flag_with_constraints(
    g: &Multigraph,
    l: &LevelStructure,
) -> (ResidueFlag, Constraints) {
    let class = classify_arrows(g, l);
    let cons = build_constraints(g, l, &class);
    let space = |families: &[Family]| kernel(&cons.stacked(families));
    let flag = ResidueFlag {
        upsilon: space(&[Family::R1]),
        upsilon0: space(&[Family::R1, Family::R2]),
        rosenlicht: space(&[Family::R1, Family::R2, Family::R3]),
        global: space(&Family::ALL),
        counts: FlagCounts::of(g, l),
    };
    (flag, cons)
}

pub fn build_flag(g: &Multigraph, l: &LevelStructure) -> ResidueFlag {
    build_flag_with_constraints(g, l).0
}

/// The residue space `G_π`.
pub fn residue_space(g: &Multigraph, l: &LevelStructure) -> Subspace {
    let class = classify_arrows(g, l);
    kernel(&build_constraints(g, l, &class).stacked(&Family::ALL))
}
