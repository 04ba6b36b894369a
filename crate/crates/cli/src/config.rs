//! Numerical defaults, an optional JSON config file, and the
//! `--explain` rendering that prints every effective default.

use serde_json::{Map, Value};

use crate::error::CliError;
use crate::schema;

#[derive(Clone, Debug)]
pub struct Numerics {
    /// Truncation window for the exact ℙ¹ section spaces; `None` means
    /// derive it from the divisor in play.
    pub window: Option<i64>,
    /// Stage cap for pole grouping on plane domains.
    pub stages: u32,
    /// Contour radius for principal-part verification.
    pub rho: f64,
    /// Trapezoid sample count for contour extraction.
    pub q_samples: usize,
    /// Sample count for torus double-periodicity checks.
    pub periodicity_samples: usize,
    /// Reporting threshold for contour verification errors.
    pub tolerance: f64,
}

impl Default for Numerics {
    fn default() -> Self {
        Numerics {
            window: None,
            stages: 64,
            rho: 0.05,
            q_samples: 256,
            periodicity_samples: 40,
            tolerance: 1e-6,
        }
    }
}

impl Numerics {
    /// Overlay a JSON config document; unknown keys are rejected so a
    /// typo cannot silently fall back to a default.
    pub fn merge_config(&mut self, text: &str) -> Result<(), CliError> {
        let v = schema::parse_json(text)?;
        schema::check_schema_version(&v)?;
        let obj = v
            .as_object()
            .ok_or_else(|| CliError::schema("config must be a JSON object"))?;
        for (key, val) in obj {
            match key.as_str() {
                "schema_version" => {}
                "window" => {
                    self.window = Some(val.as_i64().ok_or_else(|| {
                        CliError::schema("config \"window\" must be an integer")
                    })?)
                }
                "stages" => {
                    self.stages = val
                        .as_u64()
                        .and_then(|n| u32::try_from(n).ok())
                        .ok_or_else(|| CliError::schema("config \"stages\" must be a count"))?
                }
                "rho" => {
                    self.rho = val
                        .as_f64()
                        .ok_or_else(|| CliError::schema("config \"rho\" must be a number"))?
                }
                "q_samples" => {
                    self.q_samples = val
                        .as_u64()
                        .and_then(|n| usize::try_from(n).ok())
                        .ok_or_else(|| CliError::schema("config \"q_samples\" must be a count"))?
                }
                "periodicity_samples" => {
                    self.periodicity_samples =
                        val.as_u64().and_then(|n| usize::try_from(n).ok()).ok_or_else(
                            || CliError::schema("config \"periodicity_samples\" must be a count"),
                        )?
                }
                "tolerance" => {
                    self.tolerance = val
                        .as_f64()
                        .ok_or_else(|| CliError::schema("config \"tolerance\" must be a number"))?
                }
                other => {
                    return Err(CliError::schema(format!("unknown config key {other:?}")));
                }
            }
        }
        Ok(())
    }

    /// The `--explain` report: every effective numerical default.
    pub fn explain(&self) -> String {
        let mut m = Map::new();
        m.insert(
            String::from("periodicity_samples"),
            Value::from(self.periodicity_samples as u64),
        );
        m.insert(String::from("q_samples"), Value::from(self.q_samples as u64));
        m.insert(String::from("rho"), Value::from(self.rho));
        m.insert(String::from("schema_version"), Value::from(schema::SCHEMA_VERSION));
        m.insert(String::from("stages"), Value::from(self.stages));
        m.insert(String::from("tolerance"), Value::from(self.tolerance));
        m.insert(
            String::from("window"),
            self.window.map(Value::from).unwrap_or(Value::Null),
        );
        schema::render(&Value::Object(m))
    }
}
