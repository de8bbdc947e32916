//! Line-delimited machine output.
//!
//! One record is emitted per solver or oracle invocation when `--machine`
//! is set. Field names are a stable interface:
//!
//! - `instance`: file path or generator descriptor
//! - `variant`: `free` | `fixed` | `link`
//! - `engine`: `solver` | `oracle`
//! - `root`, `terminals`: present for the fixed / link variants
//! - `target`: a colour id, or `"any"`
//! - `per_colour`: per-colour move counts (solver runs; `null` marks an
//!   unreachable goal)
//! - `overall`: the reported optimum
//! - `witness_moves`: `[vertex, colour]` pairs (free oracle)
//! - `witness_colours`: colour sequence at the root (fixed runs)
//! - `subgraph_count`, `state_count`: table sizes for benchmarking
//! - `wall_ms`: wall-clock milliseconds

use serde::Serialize;

use crate::graph::{ColourId, Move, Target, Vertex};

#[derive(Serialize, Clone, Copy, Debug)]
#[serde(untagged)]
pub enum TargetField {
    Any(&'static str),
    Colour(ColourId),
}

impl From<Target> for TargetField {
    fn from(t: Target) -> Self {
        match t {
            Target::Any => TargetField::Any("any"),
            Target::Colour(d) => TargetField::Colour(d),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ResultRecord {
    pub instance: String,
    pub variant: &'static str,
    pub engine: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terminals: Option<Vec<Vertex>>,
    pub target: TargetField,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_colour: Option<Vec<Option<u32>>>,
    pub overall: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_moves: Option<Vec<(Vertex, ColourId)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_colours: Option<Vec<ColourId>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgraph_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state_count: Option<usize>,
    pub wall_ms: f64,
}

impl ResultRecord {
    pub fn new(instance: String, variant: &'static str, engine: &'static str, target: Target) -> Self {
        ResultRecord {
            instance,
            variant,
            engine,
            root: None,
            terminals: None,
            target: target.into(),
            per_colour: None,
            overall: 0,
            witness_moves: None,
            witness_colours: None,
            subgraph_count: None,
            state_count: None,
            wall_ms: 0.0,
        }
    }

    pub fn moves_field(witness: &[Move]) -> Vec<(Vertex, ColourId)> {
        witness.iter().map(|m| (m.vertex, m.colour)).collect()
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialises")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn optional_fields_are_omitted() {
        let rec = ResultRecord::new("x".into(), "free", "solver", Target::Any);
        let line = rec.to_json_line();
        assert!(line.contains("\"target\":\"any\""));
        assert!(!line.contains("root"));
        assert!(!line.contains("terminals"));
    }

    #[test]
    fn colour_target_serialises_as_number() {
        let rec = ResultRecord::new("x".into(), "link", "oracle", Target::Colour(2));
        assert!(rec.to_json_line().contains("\"target\":2"));
    }
}
