//! JSON documents written and read by the CLI. Every top-level document
//! carries `"schema": "htw/1"`.

use std::collections::BTreeMap;

use htw_core::approx::TraceRecord;
use htw_core::{TreeHDecomposition, TreeNode, VertexSet, Violation};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA: &str = "htw/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub parent: Option<usize>,
    pub bag: Vec<usize>,
}

/// `{nodes: [{id, parent, bag}], root, base_set}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub nodes: Vec<NodeJson>,
    pub root: usize,
    pub base_set: Vec<usize>,
}

impl From<&TreeHDecomposition> for DecompositionJson {
    fn from(d: &TreeHDecomposition) -> Self {
        DecompositionJson {
            nodes: d
                .nodes
                .iter()
                .enumerate()
                .map(|(id, node)| NodeJson { id, parent: node.parent, bag: node.bag.to_vec() })
                .collect(),
            root: d.root,
            base_set: d.base_set.to_vec(),
        }
    }
}

impl TryFrom<DecompositionJson> for TreeHDecomposition {
    type Error = CliError;

    /// Node ids must be exactly `0..nodes.len()`, in any order.
    fn try_from(json: DecompositionJson) -> Result<Self, CliError> {
        let count = json.nodes.len();
        let mut nodes: Vec<Option<TreeNode>> = vec![None; count];
        for node in json.nodes {
            let slot = nodes
                .get_mut(node.id)
                .ok_or_else(|| CliError::Decomposition(format!("node id {} out of range 0..{count}", node.id)))?;
            if slot.is_some() {
                return Err(CliError::Decomposition(format!("node id {} appears twice", node.id)));
            }
            *slot = Some(TreeNode { parent: node.parent, bag: node.bag.into_iter().collect() });
        }
        Ok(TreeHDecomposition {
            nodes: nodes.into_iter().map(|n| n.expect("all ids filled")).collect(),
            root: json.root,
            base_set: json.base_set.into_iter().collect::<VertexSet>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceJson {
    pub subproblem_size: usize,
    pub phase: u8,
    pub outcome: &'static str,
    pub deletion_set_size: usize,
    pub oracle_calls: usize,
}

impl From<&TraceRecord> for TraceJson {
    fn from(t: &TraceRecord) -> Self {
        TraceJson {
            subproblem_size: t.subproblem_size,
            phase: t.phase,
            outcome: t.outcome,
            deletion_set_size: t.deletion_set_size,
            oracle_calls: t.oracle_calls,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecomposeCounters {
    pub oracle_calls: usize,
    /// The budget every deletion-oracle call receives: `2k + 2`.
    pub oracle_budget: usize,
    /// Observed budgets, with call counts.
    pub oracle_budgets: BTreeMap<usize, usize>,
    pub improvements: usize,
    pub subroutine_calls: usize,
    pub subproblems: usize,
    pub largest_oracle_input: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecomposeReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub class: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    /// `"decomposed"` or `"width-exceeded"`.
    pub result: &'static str,
    pub width_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub width: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node_count: Option<usize>,
    pub deletion_set_size: usize,
    pub counters: DecomposeCounters,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_htw: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViolationJson {
    /// Which decomposition condition (1-4) fails; `null` for structural defects.
    pub condition: Option<u8>,
    pub message: String,
    pub witness: serde_json::Value,
}

impl From<&Violation> for ViolationJson {
    fn from(v: &Violation) -> Self {
        use serde_json::json;
        let witness = match v {
            Violation::MalformedTree { node, defect } => json!({ "node": node, "defect": format!("{defect:?}") }),
            Violation::BagVertexOutOfRange { node, vertex } => json!({ "node": node, "vertex": vertex }),
            Violation::BaseVertexOutOfRange { vertex }
            | Violation::VertexMissing { vertex }
            | Violation::VertexTraceDisconnected { vertex } => json!({ "vertex": vertex }),
            Violation::EdgeUncovered { u, v } => json!({ "edge": [u, v] }),
            Violation::BaseVertexInManyBags { vertex, nodes } => json!({ "vertex": vertex, "nodes": nodes }),
            Violation::BaseVertexNotInLeaf { vertex, node } => json!({ "vertex": vertex, "node": node }),
            Violation::BaseNotInClass { node } => json!({ "node": node }),
        };
        ViolationJson { condition: v.condition(), message: v.to_string(), witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidateReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub class: String,
    pub valid: bool,
    pub width: usize,
    pub node_count: usize,
    /// Failed conditions, ascending.
    pub conditions: Vec<u8>,
    pub violations: Vec<ViolationJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageCounters {
    pub iterations: usize,
    pub improvements: usize,
    pub oracle_calls: usize,
    /// The budget every deletion-oracle call receives: `2k`.
    pub oracle_budget: usize,
    pub oracle_budgets: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub class: String,
    pub k: usize,
    pub z: Vec<usize>,
    /// `"covered"` or `"no-coverage"`.
    pub result: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separator: Option<Vec<usize>>,
    pub separator_bound: usize,
    pub counters: CoverageCounters,
    /// Exhaustive answer for separators of size at most `k`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_exists: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub class: String,
    pub n: usize,
    pub m: usize,
    pub treewidth: Option<usize>,
    pub htw: Option<usize>,
    pub min_deletion: Option<usize>,
    /// Quantities skipped because the graph exceeds their size limit.
    pub refused: Vec<String>,
}

/// Accepts a bare decomposition or any document with a `decomposition` field
/// (such as the output of `decompose`).
pub fn parse_decomposition(text: &str) -> Result<TreeHDecomposition, CliError> {
    let mut value: serde_json::Value = serde_json::from_str(text)?;
    if let Some(inner) = value.get_mut("decomposition") {
        value = inner.take();
    }
    if value.is_null() {
        return Err(CliError::Decomposition("document holds no decomposition".into()));
    }
    let json: DecompositionJson = serde_json::from_value(value)?;
    json.try_into()
}
