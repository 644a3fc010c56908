use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{GraphError, LevelStructure, Multigraph};

/// The on-disk graph document:
/// `{"vertices": [...], "edges": [[u, v], ...], "levels": {name: int}}`.
/// Omitting `levels` means the trivial structure.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<BTreeMap<String, serde_json::Value>>,
}

#[derive(Deserialize)]
struct LevelDocument {
    levels: BTreeMap<String, serde_json::Value>,
}

fn json_error(err: serde_json::Error) -> GraphError {
    GraphError::Json {
        line: err.line(),
        column: err.column(),
        message: err.to_string(),
    }
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn build(&self) -> Result<(Multigraph, LevelStructure), GraphError> {
        let g = Multigraph::from_names(&self.vertices, &self.edges)?;
        let l = match &self.levels {
            None => LevelStructure::trivial(g.vertex_count()),
            Some(map) => levels_from_map(&g, map)?,
        };
        Ok((g, l))
    }
}

fn levels_from_map(
    g: &Multigraph,
    map: &BTreeMap<String, serde_json::Value>,
) -> Result<LevelStructure, GraphError> {
    let mut raw = vec![None; g.vertex_count()];
    for (name, value) in map {
        let v = g
            .vertex_index(name)
            .ok_or_else(|| GraphError::UnknownVertex(name.clone()))?;
        let level = value
            .as_i64()
            .ok_or_else(|| GraphError::NonIntegerLevel(name.clone()))?;
        raw[v] = Some(level);
    }
    let raw: Vec<i64> = raw
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| GraphError::MissingLevel(g.vertex_name(v).to_string())))
        .collect::<Result<_, _>>()?;
    Ok(LevelStructure::from_levels(&raw))
}

/// Parses and validates a graph document.
pub fn load_level_graph(text: &str) -> Result<(Multigraph, LevelStructure), GraphError> {
    GraphDocument::parse(text)?.build()
}

/// Parses a document carrying only a `levels` map (extra keys are ignored,
/// so a full graph document also works) against an existing graph.
pub fn load_level_map(g: &Multigraph, text: &str) -> Result<LevelStructure, GraphError> {
    let doc: LevelDocument = serde_json::from_str(text).map_err(json_error)?;
    levels_from_map(g, &doc.levels)
}

/// The document describing `(g, l)`; levels are omitted for `π_0`.
pub fn to_document(g: &Multigraph, l: &LevelStructure) -> GraphDocument {
    GraphDocument {
        vertices: g.vertex_names().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|&(u, v)| (g.vertex_name(u).to_string(), g.vertex_name(v).to_string()))
            .collect(),
        levels: (!l.is_trivial()).then(|| {
            (0..g.vertex_count())
                .map(|v| {
                    (
                        g.vertex_name(v).to_string(),
                        serde_json::Value::from(l.level(v)),
                    )
                })
                .collect()
        }),
    }
}
