use super::DegenError;
use crate::exactla::{Rational, Subspace};
use crate::graphcore::{LevelStructure, Multigraph};

/// The flag `W^{F_1} ⊆ … ⊆ W^{F_r} = W` and the realization `W(π)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub flag: Vec<Subspace>,
    pub realization: Subspace,
}

/// Coordinate blocks of the arrow space: arrow `a` goes to the part of its tail.
pub fn arrow_blocks(g: &Multigraph, l: &LevelStructure) -> Vec<Vec<usize>> {
    let mut blocks = vec![Vec::new(); l.depth()];
    for a in g.arrows() {
        blocks[l.level(a.tail) - 1].push(a.id);
    }
    blocks
}

/// `blocks[n-1]` lists the coordinates of part `n`. `W^{F_n}` is the part of
/// `W` vanishing on the blocks above `n`; `W_n` is its image on block `n`,
/// embedded back with zeros elsewhere; `W(π) = ⊕ W_n`.
pub fn flag_and_realization(
    w: &Subspace,
    blocks: &[Vec<usize>],
) -> Result<Realization, DegenError> {
    let n = w.ambient_dim();
    let mut owner = vec![usize::MAX; n];
    for (k, block) in blocks.iter().enumerate() {
        for &j in block {
            if j >= n || owner[j] != usize::MAX {
                return Err(DegenError::BlocksNotPartition);
            }
            owner[j] = k;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(DegenError::BlocksNotPartition);
    }
    let mut flag = Vec::with_capacity(blocks.len());
    let mut pieces: Vec<Vec<Rational>> = Vec::new();
    for k in 0..blocks.len() {
        let above: Vec<usize> = (0..n).filter(|&j| owner[j] > k).collect();
        let step = w
            .kernel_of_projection(&above)
            .expect("coordinates in range");
        for row in step.basis().row_iter() {
            let piece: Vec<Rational> = row
                .iter()
                .enumerate()
                .map(|(j, x)| {
                    if owner[j] == k {
                        x.clone()
                    } else {
                        Rational::ZERO
                    }
                })
                .collect();
            pieces.push(piece);
        }
        flag.push(step);
    }
    Ok(Realization {
        flag,
        realization: Subspace::span(n, pieces),
    })
}
