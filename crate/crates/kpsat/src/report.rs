//! JSON shapes for verification reports, certificates and search results.
//!
//! Exact values travel as decimal strings (`value_num` / `value_den`) so no
//! precision is lost.

use kpsat_core::bounds::TowerBound;
use kpsat_core::closure::Certificate;
use kpsat_core::search::{Mode, Outcome, SearchProblem, SearchResult};
use kpsat_core::verify::{Applies, BoundValue, VerifyReport, Witness};
use kpsat_core::VertexSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::graph6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundJson {
    pub name: String,
    pub kind: String,
    pub value_num: String,
    pub value_den: String,
    pub satisfied: bool,
    pub applies: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub clique: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub non_edge: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub low_degree: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub subject: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<usize>,
    pub p: usize,
    pub t: Option<usize>,
    pub edges: usize,
    pub min_degree: Option<usize>,
    pub kp_free: bool,
    pub saturated: bool,
    pub semi_saturated: bool,
    pub bounds: Vec<BoundJson>,
    pub witness: Option<WitnessJson>,
    pub fatal: Vec<String>,
}

fn rational_parts(q: &BigRational) -> (String, String) {
    (q.numer().to_string(), q.denom().to_string())
}

pub fn value_parts(v: &BoundValue) -> (String, String) {
    match v {
        BoundValue::Rational(q) => rational_parts(q),
        BoundValue::Tower(TowerBound::Exact(x)) => (x.to_string(), "1".into()),
        BoundValue::Tower(sym) => (sym.to_string(), "1".into()),
    }
}

fn applies_name(a: Applies) -> &'static str {
    match a {
        Applies::Saturated => "saturated",
        Applies::SemiSaturated => "semi-saturated",
        Applies::Informational => "informational",
    }
}

fn witness_json(w: &Witness) -> WitnessJson {
    WitnessJson {
        clique: w.clique.clone(),
        non_edge: w.non_edge.clone(),
        low_degree: w.low_degree.clone(),
    }
}

impl VerifyJson {
    pub fn new(subject: String, report: &VerifyReport) -> Self {
        let bounds = report
            .bounds
            .iter()
            .map(|b| {
                let (value_num, value_den) = value_parts(&b.value);
                BoundJson {
                    name: b.name.into(),
                    kind: if b.upper { "upper" } else { "lower" }.into(),
                    value_num,
                    value_den,
                    satisfied: b.satisfied,
                    applies: applies_name(b.applies).into(),
                }
            })
            .collect();
        Self {
            subject,
            n: report.n,
            r: report.r,
            p: report.p,
            t: report.t,
            edges: report.edges,
            min_degree: report.min_degree,
            kp_free: report.kp_free,
            saturated: report.saturated,
            semi_saturated: report.semi_saturated,
            bounds,
            witness: report.witness.as_ref().map(witness_json),
            fatal: report.fatal().into_iter().map(String::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub r_before: Vec<usize>,
    pub bad: Vec<usize>,
    pub traces: Vec<Vec<usize>>,
    pub reps: Vec<usize>,
    pub xs: Vec<usize>,
    pub r_after: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub graph6: String,
    pub p: usize,
    pub t: usize,
    pub r0: Vec<usize>,
    pub steps: Vec<StepJson>,
    pub r_star: Vec<usize>,
    pub iterations: usize,
    pub bound: usize,
    pub edges: usize,
    pub verified: bool,
}

impl CertificateJson {
    pub fn new(graph6: String, cert: &Certificate) -> Self {
        Self {
            graph6,
            p: cert.p,
            t: cert.t,
            r0: cert.r0.to_vec(),
            steps: cert
                .steps
                .iter()
                .map(|s| StepJson {
                    r_before: s.r_before.to_vec(),
                    bad: s.bad.to_vec(),
                    traces: s.traces.iter().map(VertexSet::to_vec).collect(),
                    reps: s.reps.clone(),
                    xs: s.xs.clone(),
                    r_after: s.r_after.to_vec(),
                })
                .collect(),
            r_star: cert.r_star.to_vec(),
            iterations: cert.iterations,
            bound: cert.bound,
            edges: cert.edges,
            verified: cert.verified,
        }
    }

    /// Rebuilds the in-memory certificate, e.g. for replay.
    pub fn to_certificate(&self, n: usize) -> Certificate {
        let set = |v: &Vec<usize>| v.iter().copied().collect::<VertexSet>();
        Certificate {
            p: self.p,
            t: self.t,
            n,
            r0: set(&self.r0),
            steps: self
                .steps
                .iter()
                .map(|s| kpsat_core::closure::StepRecord {
                    r_before: set(&s.r_before),
                    bad: set(&s.bad),
                    traces: s.traces.iter().map(set).collect(),
                    reps: s.reps.clone(),
                    xs: s.xs.clone(),
                    r_after: set(&s.r_after),
                })
                .collect(),
            r_star: set(&self.r_star),
            iterations: self.iterations,
            bound: self.bound,
            edges: self.edges,
            verified: self.verified,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemJson {
    pub n: usize,
    pub p: usize,
    pub t: usize,
    pub mode: String,
    pub iso_rejection: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchJson {
    pub problem: ProblemJson,
    /// The optimum, or `"infeasible"` / `"resource-limit"`.
    pub value: serde_json::Value,
    /// With a resource limit: every edge count below this was ruled out.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub undecided_from: Option<usize>,
    pub witness_graph6: Option<String>,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub extremal_list: Option<Vec<String>>,
}

pub fn mode_from_name(name: &str) -> Option<Mode> {
    [Mode::AtLeast, Mode::Exactly, Mode::Semi].into_iter().find(|m| m.name() == name)
}

impl SearchJson {
    pub fn new(problem: &SearchProblem, result: &SearchResult, wall_ms: Option<u64>) -> Self {
        let (value, undecided_from) = match result.outcome {
            Outcome::Optimal(m) => (serde_json::Value::from(m), None),
            Outcome::Infeasible => ("infeasible".into(), None),
            Outcome::ResourceLimit { m } => ("resource-limit".into(), Some(m)),
        };
        Self {
            problem: ProblemJson {
                n: problem.n,
                p: problem.p,
                t: problem.t,
                mode: problem.mode.name().into(),
                iso_rejection: problem.iso_rejection,
            },
            value,
            undecided_from,
            witness_graph6: result.witness.as_ref().map(graph6::encode),
            nodes: result.nodes,
            wall_ms,
            extremal_list: result.extremal.as_ref().map(|l| l.iter().map(graph6::encode).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value_num: String,
    pub value_den: String,
}

impl NamedValue {
    pub fn rational(name: &str, q: &BigRational) -> Self {
        let (value_num, value_den) = rational_parts(q);
        Self {
            name: name.into(),
            value_num,
            value_den,
        }
    }

    pub fn integer(name: &str, x: &BigInt) -> Self {
        Self::rational(name, &BigRational::from(x.clone()))
    }

    pub fn tower(name: &str, b: &TowerBound) -> Self {
        let (value_num, value_den) = value_parts(&BoundValue::Tower(b.clone()));
        Self {
            name: name.into(),
            value_num,
            value_den,
        }
    }
}

/// 64-bit FNV-1a digest of a hypergraph's text form, used as its subject.
pub fn digest(text: &str) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    format!("fnv1a:{h:016x}")
}
