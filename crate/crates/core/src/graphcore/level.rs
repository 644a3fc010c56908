use serde::Serialize;

use super::{GraphError, Multigraph, VertexSet};

/// An ordered partition of the vertices, stored as a level function onto `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LevelStructure {
    level: Vec<usize>,
    parts: Vec<VertexSet>,
}

impl LevelStructure {
    /// The one-part structure `π_0 = (V)`.
    pub fn trivial(vertex_count: usize) -> Self {
        Self::from_levels(&vec![0; vertex_count])
    }

    /// Compresses arbitrary integer levels to `1..=r`, preserving order.
    pub fn from_levels(raw: &[i64]) -> Self {
        let mut distinct: Vec<i64> = raw.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let level: Vec<usize> = raw
            .iter()
            .map(|x| distinct.binary_search(x).expect("present") + 1)
            .collect();
        let mut parts = vec![VertexSet::EMPTY; distinct.len()];
        for (v, &l) in level.iter().enumerate() {
            parts[l - 1].insert(v);
        }
        Self { level, parts }
    }

    /// Builds the structure whose `n`-th part is `parts[n-1]`.
    pub fn from_parts(vertex_count: usize, parts: &[VertexSet]) -> Result<Self, GraphError> {
        let mut level = vec![0usize; vertex_count];
        let mut covered = VertexSet::EMPTY;
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() || !part.intersection(covered).is_empty() {
                return Err(GraphError::NotAPartition);
            }
            for v in part.iter() {
                if v >= vertex_count {
                    return Err(GraphError::NotAPartition);
                }
                level[v] = i + 1;
            }
            covered = covered.union(*part);
        }
        if covered != VertexSet::full(vertex_count) {
            return Err(GraphError::NotAPartition);
        }
        Ok(Self {
            level,
            parts: parts.to_vec(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.level.len()
    }

    /// Number of parts `r`.
    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    /// Level of `v`, in `1..=r`.
    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    /// Part `π_n`, for `n` in `1..=r`.
    pub fn part(&self, n: usize) -> VertexSet {
        self.parts[n - 1]
    }

    /// `F_n = V_{h ≤ n}` (with `F_0 = ∅`).
    pub fn at_or_below(&self, n: usize) -> VertexSet {
        self.parts[..n]
            .iter()
            .fold(VertexSet::EMPTY, |acc, p| acc.union(*p))
    }

    /// `V_{h < n}`.
    pub fn strictly_below(&self, n: usize) -> VertexSet {
        self.at_or_below(n - 1)
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.len() == 1
    }

    fn check_level(&self, n: usize) -> Result<(), GraphError> {
        if n == 0 || n > self.depth() {
            return Err(GraphError::LevelOutOfRange {
                level: n,
                depth: self.depth(),
            });
        }
        Ok(())
    }

    /// All coarsenings, obtained by merging runs of consecutive parts
    /// (`2^{r-1}` of them, including `self` and `π_0`).
    pub fn coarsenings(&self) -> Vec<LevelStructure> {
        let r = self.depth();
        let n = self.vertex_count();
        (0..1u64 << (r - 1))
            .map(|cuts| {
                let mut parts = Vec::new();
                let mut acc = VertexSet::EMPTY;
                for (i, p) in self.parts.iter().enumerate() {
                    acc = acc.union(*p);
                    if i + 1 == r || cuts >> i & 1 == 1 {
                        parts.push(acc);
                        acc = VertexSet::EMPTY;
                    }
                }
                LevelStructure::from_parts(n, &parts).expect("merged parts form a partition")
            })
            .collect()
    }
}

/// True iff `coarse ⪰ fine`: each part of `fine` lies in a part of `coarse`
/// and the induced map on level indices is nondecreasing.
pub fn is_coarsening(fine: &LevelStructure, coarse: &LevelStructure) -> Result<bool, GraphError> {
    if fine.vertex_count() != coarse.vertex_count() {
        return Err(GraphError::VertexCountMismatch {
            left: fine.vertex_count(),
            right: coarse.vertex_count(),
        });
    }
    let mut image = Vec::with_capacity(fine.depth());
    for part in fine.parts() {
        let first = part.first().expect("parts are nonempty");
        let target = coarse.level(first);
        if part.iter().any(|v| coarse.level(v) != target) {
            return Ok(false);
        }
        image.push(target);
    }
    Ok(image.windows(2).all(|w| w[0] <= w[1]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrowKind {
    /// Tail strictly above the head in level index (`h(tail) > h(head)`).
    Upward,
    Downward,
    Horizontal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowClassification {
    pub kinds: Vec<ArrowKind>,
    pub vertical_edges: Vec<usize>,
    pub horizontal_edges: Vec<usize>,
}

impl ArrowClassification {
    pub fn kind(&self, arrow: usize) -> ArrowKind {
        self.kinds[arrow]
    }

    pub fn arrows_of_kind(&self, kind: ArrowKind) -> Vec<usize> {
        self.kinds
            .iter()
            .enumerate()
            .filter(|(_, &k)| k == kind)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_downward(&self, arrow: usize) -> bool {
        self.kinds[arrow] == ArrowKind::Downward
    }
}

pub fn classify_arrows(g: &Multigraph, l: &LevelStructure) -> ArrowClassification {
    let kinds: Vec<ArrowKind> = g
        .arrows()
        .iter()
        .map(|a| {
            let (t, h) = (l.level(a.tail), l.level(a.head));
            match t.cmp(&h) {
                std::cmp::Ordering::Greater => ArrowKind::Upward,
                std::cmp::Ordering::Less => ArrowKind::Downward,
                std::cmp::Ordering::Equal => ArrowKind::Horizontal,
            }
        })
        .collect();
    let (mut vertical_edges, mut horizontal_edges) = (Vec::new(), Vec::new());
    for e in 0..g.edge_count() {
        if kinds[2 * e] == ArrowKind::Horizontal {
            horizontal_edges.push(e);
        } else {
            vertical_edges.push(e);
        }
    }
    ArrowClassification {
        kinds,
        vertical_edges,
        horizontal_edges,
    }
}

/// Connected components of `G[π_n]`.
pub fn level_components(
    g: &Multigraph,
    l: &LevelStructure,
    n: usize,
) -> Result<Vec<VertexSet>, GraphError> {
    l.check_level(n)?;
    Ok(g.components_of(l.part(n)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LevelComponent {
    pub level: usize,
    pub vertices: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Summits {
    pub irreducible: Vec<LevelComponent>,
    pub reducible: Vec<LevelComponent>,
}

impl Summits {
    pub fn irreducible_count(&self) -> usize {
        self.irreducible.len()
    }

    pub fn reducible_count(&self) -> usize {
        self.reducible.len()
    }

    pub fn count(&self) -> usize {
        self.irreducible.len() + self.reducible.len()
    }

    pub fn is_reducible_summit(&self, c: VertexSet) -> bool {
        self.reducible.iter().any(|s| s.vertices == c)
    }

    pub fn is_irreducible_summit(&self, c: VertexSet) -> bool {
        self.irreducible.iter().any(|s| s.vertices == c)
    }
}

/// Level components with no vertex that is the tail of an upward arrow,
/// split by whether they are a lone vertex without edges.
pub fn summits(g: &Multigraph, l: &LevelStructure) -> Summits {
    let class = classify_arrows(g, l);
    let mut upward_tail = VertexSet::EMPTY;
    for a in g.arrows() {
        if class.kind(a.id) == ArrowKind::Upward {
            upward_tail.insert(a.tail);
        }
    }
    let mut out = Summits::default();
    for n in 1..=l.depth() {
        for c in g.components_of(l.part(n)) {
            if !c.intersection(upward_tail).is_empty() {
                continue;
            }
            let comp = LevelComponent {
                level: n,
                vertices: c,
            };
            if c.len() == 1 && g.internal_edge_count(c) == 0 {
                out.irreducible.push(comp);
            } else {
                out.reducible.push(comp);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ComponentsBelow {
    /// Components of `G[V_{h<n}]`.
    pub all: Vec<VertexSet>,
    /// Those receiving an arrow with tail in `π_n`.
    pub special: Vec<VertexSet>,
}

pub fn components_below(
    g: &Multigraph,
    l: &LevelStructure,
    n: usize,
) -> Result<ComponentsBelow, GraphError> {
    l.check_level(n)?;
    let below = l.strictly_below(n);
    let part = l.part(n);
    let all = g.components_of(below);
    let special = all
        .iter()
        .copied()
        .filter(|xi| {
            g.arrows()
                .iter()
                .any(|a| part.contains(a.tail) && xi.contains(a.head))
        })
        .collect();
    Ok(ComponentsBelow { all, special })
}
