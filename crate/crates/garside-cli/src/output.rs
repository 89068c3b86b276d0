//! Machine-readable output documents.
//!
//! Every document is emitted with stable field order and no
//! environment-dependent content (no timings, no paths), so identical
//! invocations are byte-identical.

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct EqDoc {
    pub command: String,
    pub u: String,
    pub v: String,
    pub equal: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct DivisorsDoc {
    pub command: String,
    pub word: String,
    pub side: String,
    pub count: usize,
    pub divisors: Vec<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct GcdDoc {
    pub command: String,
    pub u: String,
    pub v: String,
    pub gcd: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct OracleLcmDoc {
    pub command: String,
    pub u: String,
    pub v: String,
    pub max_len: usize,
    pub multiple: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ReverseDoc {
    pub command: String,
    pub input: String,
    pub outcome: String,
    pub word: String,
    pub steps: u64,
    /// Positive part when the word reversed to `v'·u'⁻¹`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub positive: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negative: Option<String>,
    /// Leftmost undefined factor for stuck words.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stuck: Option<StuckDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStepDoc>>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct StuckDoc {
    pub s: String,
    pub t: String,
    pub position: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct TraceStepDoc {
    pub position: usize,
    pub s: String,
    pub t: String,
    pub replacement: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ClassifyDoc {
    pub command: String,
    pub u: String,
    pub v: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_prime: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v_prime: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stuck: Option<(String, String)>,
    /// Periodic pair witness with its cycle length in reversing steps.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub periodic: Option<PeriodicDoc>,
    pub pairs_visited: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct PeriodicDoc {
    pub u: String,
    pub v: String,
    pub cycle_steps: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct LcmDoc {
    pub command: String,
    pub u: String,
    pub v: String,
    /// "lcm", "no-common-multiple", "conditional-lcm", or "unknown".
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lcm: Option<String>,
    pub certified_complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub periodic: Option<PeriodicDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stuck: Option<(String, String)>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct CertifyDoc {
    pub command: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_triple: Option<(String, String, String)>,
    pub triples_checked: usize,
    pub holds_defined: usize,
    pub holds_undefined: usize,
    pub fails: usize,
    pub unknown: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct GarsideDoc {
    pub command: String,
    pub element_count: usize,
    pub extremal_count: usize,
    pub generations: usize,
    pub elements: Vec<String>,
    pub extremals: Vec<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct TableDoc {
    pub command: String,
    pub rows: Vec<TableRowDoc>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct TableRowDoc {
    pub preset: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extremal_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}
