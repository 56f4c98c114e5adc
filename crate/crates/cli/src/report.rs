//! Report types shared by the text and JSON renderings. Big integers are
//! carried as decimal strings so JSON consumers never lose precision.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodResult {
    pub method: String,
    pub value: Option<String>,
    pub error: Option<String>,
    pub micros: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    pub root: usize,
    pub value: String,
}

/// Result of `count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub graph: GraphSummary,
    pub root: Option<usize>,
    pub methods: Vec<MethodResult>,
    /// True iff every value that was computed is the same.
    pub agreement: bool,
    pub bound: Option<BoundValue>,
    pub best_bound: Option<BoundValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub closed_form: Option<String>,
    /// Path written, or `None` when the graph went to stdout.
    pub output: Option<String>,
    /// Graph text when no output path was given.
    pub graph: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub trial_seed: u64,
    pub n: usize,
    pub m: usize,
    pub check: String,
    pub detail: String,
    pub reproduce: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCounts {
    pub tau_methods: usize,
    pub bound_roots: usize,
    pub identity_points: usize,
    pub fpoly_graphs: usize,
    pub grouping_roots: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisconnectedProbe {
    pub inputs: usize,
    pub direct_formula_zero: usize,
    pub grouped_formula_zero: usize,
    pub identity_points: usize,
    pub identity_held: usize,
}

/// Result of `verify`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub n: usize,
    pub m: usize,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
    pub vary: bool,
    pub agreements: usize,
    pub checks: CheckCounts,
    pub violations: Vec<Violation>,
    pub disconnected: Option<DisconnectedProbe>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityLine {
    pub weights: Vec<i64>,
    pub lhs: String,
    pub tau_term: String,
    pub nst_sum: String,
    pub holds: bool,
}

/// Result of `identity`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRun {
    pub root: usize,
    pub points: Vec<IdentityLine>,
    pub all_hold: bool,
}

/// Result of `fpoly`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpolyReport {
    pub n: usize,
    pub m: usize,
    pub endpoint_picks: String,
    pub terms: usize,
    pub matching_number: usize,
    pub matching_oracle: usize,
    pub edge_cover_number: usize,
    pub edge_cover_oracle: usize,
    pub perfect_matchings: Vec<Vec<usize>>,
    pub perfect_matchings_oracle: Vec<Vec<usize>>,
    pub agreement: bool,
    pub dump: Option<Vec<String>>,
}

/// Result of `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub root: usize,
    pub bound: String,
    pub tau: String,
    /// `bound - tau`, the subtree correction sum.
    pub gap: String,
}
