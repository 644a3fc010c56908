use serde::Serialize;

use super::{
    arrow_blocks, flag_and_realization, initial_space_limit, plucker_limit_oracle, DegenError,
    LaurentSubspace, WeightAssignment,
};
use crate::exactla::Subspace;
use crate::graphcore::{is_coarsening, LevelStructure, Multigraph};
use crate::polymat::{gamma_table, splitting, Modularity, DEFAULT_TABLE_BOUND};
use crate::residue::residue_space;

/// The outcome of comparing a coarse residue space with a fine one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationReport {
    pub coarse_space: Subspace,
    pub fine_space: Subspace,
    pub limit: Subspace,
    pub realization: Subspace,
    pub checks: DegenerationChecks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerationChecks {
    /// `lim x·G_coarse = G_fine` with `d_n = n`.
    pub limit_equals_fine: bool,
    /// The same with `d_n = 3n + 1`.
    pub limit_independent_of_weights: bool,
    /// `G_coarse(π_fine) = G_fine`.
    pub realization_equals_fine: bool,
    /// The splitting of `γ_coarse` along the fine chain is `γ_fine`.
    pub splitting_equals_fine: bool,
    /// Agreement with the Plücker computation; `None` when out of its bound.
    pub plucker_agrees: Option<bool>,
}

impl DegenerationChecks {
    pub fn passed(&self) -> bool {
        self.limit_equals_fine
            && self.limit_independent_of_weights
            && self.realization_equals_fine
            && self.splitting_equals_fine
            && self.plucker_agrees != Some(false)
    }
}

pub fn verify_degeneration_theorem(
    g: &Multigraph,
    fine: &LevelStructure,
    coarse: &LevelStructure,
) -> Result<DegenerationReport, DegenError> {
    if !is_coarsening(fine, coarse)? {
        return Err(DegenError::NotACoarsening);
    }
    let coarse_space = residue_space(g, coarse);
    let fine_space = residue_space(g, fine);

    let ls =
        LaurentSubspace::on_arrows(g, coarse_space.clone(), &WeightAssignment::standard(fine))?;
    let limit = initial_space_limit(&ls);
    let other = LaurentSubspace::on_arrows(
        g,
        coarse_space.clone(),
        &WeightAssignment::affine(fine, 3, 1),
    )?;
    let limit_other = initial_space_limit(&other);
    let plucker_agrees = match plucker_limit_oracle(&ls) {
        Ok(p) => Some(p == limit),
        Err(DegenError::BoundExceeded { .. }) => None,
        Err(e) => return Err(e),
    };

    let realization = flag_and_realization(&coarse_space, &arrow_blocks(g, fine))?.realization;

    let gamma_coarse = gamma_table(g, coarse, DEFAULT_TABLE_BOUND)?;
    let gamma_fine = gamma_table(g, fine, DEFAULT_TABLE_BOUND)?;
    let split = splitting(&gamma_coarse, fine, Modularity::Submodular)?;

    let checks = DegenerationChecks {
        limit_equals_fine: limit == fine_space,
        limit_independent_of_weights: limit_other == limit,
        realization_equals_fine: realization == fine_space,
        splitting_equals_fine: split == gamma_fine,
        plucker_agrees,
    };
    Ok(DegenerationReport {
        coarse_space,
        fine_space,
        limit,
        realization,
        checks,
    })
}
