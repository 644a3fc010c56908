use super::{PolyError, SetFunction};
use crate::exactla::{Rational, Subspace};
use crate::graphcore::{LevelStructure, Multigraph};
use crate::residue::residue_space;

fn check_bound(g: &Multigraph, bound: usize) -> Result<(), PolyError> {
    if g.vertex_count() > bound {
        return Err(PolyError::BoundExceeded {
            what: "subset table",
            size: g.vertex_count(),
            bound,
        });
    }
    Ok(())
}

/// `I ↦ dim pr_I(W)` where `I` ranges over vertex sets and `pr_I` keeps the
/// arrows with tail in `I`.
pub fn projected_rank_table(g: &Multigraph, w: &Subspace) -> SetFunction {
    SetFunction::from_fn(g.vertex_count(), |set| {
        let coords = g.arrows_with_tail_in(set);
        Rational::from_integer(w.projected_rank(&coords).expect("arrow coordinates") as i64)
    })
}

/// `γ_π(I) = dim pr_I(G_π)`.
pub fn gamma_table(
    g: &Multigraph,
    l: &LevelStructure,
    bound: usize,
) -> Result<SetFunction, PolyError> {
    check_bound(g, bound)?;
    Ok(projected_rank_table(g, &residue_space(g, l)))
}

/// `γ_{π_0}(I) = g − g(G[V ∖ I])`, computed from genera alone.
pub fn pi0_gamma_by_contraction(g: &Multigraph, bound: usize) -> Result<SetFunction, PolyError> {
    check_bound(g, bound)?;
    let full = g.all_vertices();
    let genus = g.genus() as i64;
    Ok(SetFunction::from_fn(g.vertex_count(), |set| {
        Rational::from_integer(genus - g.induced_genus(full.difference(set)) as i64)
    }))
}
