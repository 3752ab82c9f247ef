use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::{weight_grid, Method};
use crate::centrality::DEFAULT_CI_RADIUS;
use crate::diffusion::{DEFAULT_BETA, DEFAULT_RUNS};
use crate::error::{Error, Result};

/// Global-metric weight: fixed, or chosen by a weight sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WGlobal {
    Fixed(f64),
    Sweep,
}

impl WGlobal {
    fn from_value(v: &Value) -> Option<Self> {
        match v {
            Value::Number(n) => n.as_f64().map(WGlobal::Fixed),
            Value::String(s) if s == "sweep" => Some(WGlobal::Sweep),
            _ => None,
        }
    }
}

mod wglobal_serde {
    use super::*;

    pub fn serialize<S: serde::Serializer>(w: &WGlobal, s: S) -> Result<S::Ok, S::Error> {
        match w {
            WGlobal::Fixed(v) => s.serialize_f64(*v),
            WGlobal::Sweep => s.serialize_str("sweep"),
        }
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(d: D) -> Result<WGlobal, D::Error> {
        let v = Value::deserialize(d)?;
        WGlobal::from_value(&v)
            .ok_or_else(|| serde::de::Error::custom("w_global must be a number or \"sweep\""))
    }
}

/// Flat experiment description, read from a JSON object.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub graph: String,
    /// Name used in table rows; defaults to the graph file stem.
    pub network: Option<String>,
    pub methods: Vec<Method>,
    #[serde(with = "wglobal_serde")]
    pub w_global: WGlobal,
    pub sweep_step: f64,
    pub sweep_days: usize,
    pub k: usize,
    pub sir_days: usize,
    pub runs: usize,
    pub alpha: Option<f64>,
    pub beta: f64,
    pub ic_k: usize,
    pub ic_p_min: f64,
    pub ic_p_max: f64,
    pub ic_p_step: f64,
    pub ic_runs: usize,
    pub q_fracs: Vec<f64>,
    pub ci_radius: usize,
    pub rng_seed: u64,
    pub output_dir: String,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            graph: String::new(),
            network: None,
            methods: Method::ALL.to_vec(),
            w_global: WGlobal::Sweep,
            sweep_step: 0.05,
            sweep_days: 20,
            k: 50,
            sir_days: 50,
            runs: DEFAULT_RUNS,
            alpha: None,
            beta: DEFAULT_BETA,
            ic_k: 10,
            ic_p_min: 0.02,
            ic_p_max: 0.03,
            ic_p_step: 0.002,
            ic_runs: DEFAULT_RUNS,
            q_fracs: vec![0.05, 0.1],
            ci_radius: DEFAULT_CI_RADIUS,
            rng_seed: 0,
            output_dir: "results".into(),
        }
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: ExperimentConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Replaces one key. `value` is read as JSON when it parses, otherwise
    /// as a plain string.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let mut map: Map<String, Value> = match serde_json::to_value(&*self)? {
            Value::Object(m) => m,
            _ => unreachable!("config serializes to an object"),
        };
        if !map.contains_key(key) {
            return Err(Error::Config(format!("unknown key {key:?}")));
        }
        let parsed =
            serde_json::from_str(value).unwrap_or_else(|_| Value::String(value.to_owned()));
        map.insert(key.to_owned(), parsed);
        *self = serde_json::from_value(Value::Object(map))
            .map_err(|e| Error::Config(format!("{key}: {e}")))?;
        Ok(())
    }

    pub fn network_name(&self) -> String {
        self.network.clone().unwrap_or_else(|| {
            Path::new(&self.graph)
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "network".into())
        })
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.methods.is_empty() {
            return fail("methods must not be empty".into());
        }
        if let WGlobal::Fixed(w) = self.w_global {
            if !(0.0..=1.0).contains(&w) {
                return fail(format!("w_global = {w} outside [0, 1]"));
            }
        }
        weight_grid(self.sweep_step).map_err(|e| Error::Config(e.to_string()))?;
        if self.k == 0 || self.ic_k == 0 {
            return fail("seed-set sizes k and ic_k must be >= 1".into());
        }
        if self.runs == 0 || self.ic_runs == 0 {
            return fail("runs and ic_runs must be >= 1".into());
        }
        if let Some(a) = self.alpha {
            if !(0.0..=1.0).contains(&a) {
                return fail(format!("alpha = {a} outside [0, 1]"));
            }
        }
        if !(0.0..=1.0).contains(&self.beta) {
            return fail(format!("beta = {} outside [0, 1]", self.beta));
        }
        if self.q_fracs.iter().any(|f| !(*f > 0.0 && *f < 1.0)) {
            return fail(format!("q_fracs {:?} must lie in (0, 1)", self.q_fracs));
        }
        Ok(())
    }
}
