use std::collections::HashMap;

use super::{GraphError, VertexSet, MAX_VERTICES};

/// Orientation of an arrow relative to its edge as written in the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward = 0,
    Reverse = 1,
}

/// One of the two orientations of an edge. Arrow ids are `2·edge + direction`,
/// which is the coordinate order of the arrow space; `id ^ 1` is the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: usize,
    pub edge: usize,
    pub direction: Direction,
    pub tail: usize,
    pub head: usize,
}

impl Arrow {
    pub fn reverse_id(&self) -> usize {
        self.id ^ 1
    }
}

/// A finite multigraph; loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    arrows: Vec<Arrow>,
    component_count: usize,
    genus: usize,
}

impl Multigraph {
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyVertexList);
        }
        if vertices.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                count: vertices.len(),
                max: MAX_VERTICES,
            });
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, name) in vertices.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertices.len() {
                    return Err(GraphError::UnknownVertex(format!("#{w}")));
                }
            }
        }
        let arrows = edges
            .iter()
            .enumerate()
            .flat_map(|(e, &(u, v))| {
                [
                    Arrow {
                        id: 2 * e,
                        edge: e,
                        direction: Direction::Forward,
                        tail: u,
                        head: v,
                    },
                    Arrow {
                        id: 2 * e + 1,
                        edge: e,
                        direction: Direction::Reverse,
                        tail: v,
                        head: u,
                    },
                ]
            })
            .collect();
        let mut g = Self {
            vertices,
            index,
            edges,
            arrows,
            component_count: 0,
            genus: 0,
        };
        let full = VertexSet::full(g.vertex_count());
        g.component_count = g.components_of(full).len();
        g.genus = g.edges.len() + g.component_count - g.vertices.len();
        Ok(g)
    }

    /// Convenience constructor from vertex names and name pairs.
    pub fn from_names<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self, GraphError> {
        let names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let lookup: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut idx = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let find = |s: &str| {
                lookup
                    .get(s)
                    .copied()
                    .ok_or_else(|| GraphError::UnknownVertex(s.to_string()))
            };
            idx.push((find(a.as_ref())?, find(b.as_ref())?));
        }
        Self::new(names, idx)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// `|E| − |V| + c`, the dimension of the cycle space.
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// Arrow ids with tail in `set`, ascending.
    pub fn arrows_with_tail_in(&self, set: VertexSet) -> Vec<usize> {
        self.arrows
            .iter()
            .filter(|a| set.contains(a.tail))
            .map(|a| a.id)
            .collect()
    }

    /// A readable arrow name such as `u1→u4` (loops get a `#edge` suffix to
    /// keep the two half-edges apart).
    pub fn arrow_label(&self, id: usize) -> String {
        let a = &self.arrows[id];
        let mut s = format!("{}→{}", self.vertices[a.tail], self.vertices[a.head]);
        let parallel = self
            .edges
            .iter()
            .filter(|&&e| {
                e == self.edges[a.edge] || e == (self.edges[a.edge].1, self.edges[a.edge].0)
            })
            .count();
        if a.tail == a.head || parallel > 1 {
            s.push_str(&format!(
                "#{}{}",
                a.edge,
                if a.direction == Direction::Forward {
                    "a"
                } else {
                    "b"
                }
            ));
        }
        s
    }

    /// `{a,b,c}` from vertex names.
    pub fn set_label(&self, set: VertexSet) -> String {
        let names: Vec<&str> = set.iter().map(|v| self.vertex_name(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Connected components of the induced subgraph `G[set]`, each as a vertex
    /// set, ordered by smallest vertex.
    pub fn components_of(&self, set: VertexSet) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            if set.contains(u) && set.contains(v) {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru.max(rv)] = ru.min(rv);
                }
            }
        }
        let mut by_root: Vec<VertexSet> = vec![VertexSet::EMPTY; n];
        for v in set.iter() {
            let r = find(&mut parent, v);
            by_root[r].insert(v);
        }
        let mut comps: Vec<VertexSet> = by_root.into_iter().filter(|s| !s.is_empty()).collect();
        comps.sort_by_key(|s| s.first());
        comps
    }

    /// Number of edges with both endpoints in `set` (loops included).
    pub fn internal_edge_count(&self, set: VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| set.contains(u) && set.contains(v))
            .count()
    }

    /// Genus of the induced subgraph `G[set]`.
    pub fn induced_genus(&self, set: VertexSet) -> usize {
        self.internal_edge_count(set) + self.components_of(set).len() - set.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrows_come_in_reverse_pairs() {
        let g = Multigraph::from_names(&["a", "b"], &[("a", "b"), ("b", "b")]).unwrap();
        assert_eq!(g.arrow_count(), 4);
        for a in g.arrows() {
            let r = g.arrow(a.reverse_id());
            assert_ne!(a.id, r.id);
            assert_eq!((a.tail, a.head), (r.head, r.tail));
            assert_eq!(r.reverse_id(), a.id);
        }
        assert_eq!(g.genus(), 1);
        assert_eq!(g.component_count(), 1);
    }

    #[test]
    fn disconnected_genus() {
        // Triangle plus a separate edge plus an isolated vertex.
        let g = Multigraph::from_names(
            &["a", "b", "c", "d", "e", "f"],
            &[("a", "b"), ("b", "c"), ("c", "a"), ("d", "e")],
        )
        .unwrap();
        assert_eq!(g.component_count(), 3);
        assert_eq!(g.genus(), 1);
        let abc: VertexSet = [0, 1, 2].into_iter().collect();
        assert_eq!(g.induced_genus(abc), 1);
        assert_eq!(g.induced_genus(VertexSet::from_bits(0b11)), 0);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Multigraph::new(vec![], vec![]),
            Err(GraphError::EmptyVertexList)
        );
        assert!(matches!(
            Multigraph::new(vec!["a".into(), "a".into()], vec![]),
            Err(GraphError::DuplicateVertex(_))
        ));
        assert!(matches!(
            Multigraph::from_names(&["a"], &[("a", "z")]),
            Err(GraphError::UnknownVertex(_))
        ));
    }
}
