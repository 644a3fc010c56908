use rand::Rng;

use super::{LevelStructure, Multigraph};

/// Size limits for [`random_level_graph`].
#[derive(Clone, Copy, Debug)]
pub struct RandomGraphParams {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub allow_loops: bool,
}

impl Default for RandomGraphParams {
    fn default() -> Self {
        Self {
            max_vertices: 5,
            max_edges: 8,
            allow_loops: true,
        }
    }
}

/// A random multigraph (parallel edges allowed, loops optional, not
/// necessarily connected) with a random level structure.
pub fn random_level_graph<R: Rng + ?Sized>(
    rng: &mut R,
    params: RandomGraphParams,
) -> (Multigraph, LevelStructure) {
    let n = rng.gen_range(1..=params.max_vertices.max(1));
    let m = rng.gen_range(0..=params.max_edges);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v && !params.allow_loops {
            if n == 1 {
                break;
            }
            continue;
        }
        edges.push((u, v));
    }
    let names = (1..=n).map(|i| format!("v{i}")).collect();
    let g = Multigraph::new(names, edges).expect("indices are in range");
    let raw: Vec<i64> = (0..n).map(|_| rng.gen_range(0..n as i64)).collect();
    (g, LevelStructure::from_levels(&raw))
}
