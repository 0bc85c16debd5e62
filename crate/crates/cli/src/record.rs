use serde::Serialize;
use serde_json::{Map, Value};

use nsg_core::NumericalSemigroup;

/// The fixed-order description of one semigroup, with command-specific
/// fields appended after the core ones.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisRecord {
    pub generators: Vec<i64>,
    pub minimal_generators: Vec<i64>,
    pub multiplicity: i64,
    pub frobenius: i64,
    pub conductor: i64,
    pub genus: u64,
    pub pf: Vec<i64>,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub reduced_type: usize,
    pub symmetric: bool,
    pub extremality: &'static str,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl AnalysisRecord {
    pub fn new(s: &NumericalSemigroup) -> Self {
        let profile = s.pf_profile();
        Self {
            generators: s.generators().to_vec(),
            minimal_generators: s.minimal_generators().to_vec(),
            multiplicity: s.multiplicity(),
            frobenius: s.frobenius(),
            conductor: s.conductor(),
            genus: s.genus(),
            cm_type: profile.cm_type,
            reduced_type: profile.reduced_type,
            symmetric: s.is_symmetric(),
            extremality: profile.extremality.as_str(),
            pf: profile.pf,
            extra: Map::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.extra.insert(key.to_string(), value.into());
        self
    }

    pub fn render(&self, json: bool) -> String {
        let value = serde_json::to_value(self).expect("records serialize");
        if json {
            return value.to_string();
        }
        let Value::Object(map) = value else { unreachable!() };
        map.iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}
