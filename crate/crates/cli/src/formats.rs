//! JSON input and output formats.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sturmian_core::exact::{Alpha, AlphaSpec, CirclePoint, Rational};
use sturmian_core::partition::LabeledPartition;
use sturmian_core::subshift::{LanguageModel, LocalRule, SearchCaps};
use sturmian_core::word::{sym, word_to_string, Symbol, Word};

use crate::error::CliError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum AlphaJson {
    Quadratic { p: i64, q: i64, d: u64, r: i64 },
    Cf { prefix: Vec<u64>, period: Vec<u64> },
}

/// Either a preset name or an explicit spec.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlphaInput {
    Preset(String),
    Spec(AlphaJson),
}

impl From<&AlphaSpec> for AlphaJson {
    fn from(spec: &AlphaSpec) -> Self {
        match spec {
            &AlphaSpec::Quadratic { p, q, d, r } => AlphaJson::Quadratic { p, q, d, r },
            AlphaSpec::Cf { prefix, period } => AlphaJson::Cf {
                prefix: prefix.clone(),
                period: period.clone(),
            },
        }
    }
}

impl AlphaInput {
    pub fn resolve(&self) -> Result<Alpha, CliError> {
        let spec = match self {
            AlphaInput::Preset(name) => match name.as_str() {
                "golden" => AlphaSpec::golden(),
                "silver" => AlphaSpec::silver(),
                other => return Err(CliError::Input(format!("unknown alpha preset {other:?}"))),
            },
            AlphaInput::Spec(AlphaJson::Quadratic { p, q, d, r }) => AlphaSpec::Quadratic {
                p: *p,
                q: *q,
                d: *d,
                r: *r,
            },
            AlphaInput::Spec(AlphaJson::Cf { prefix, period }) => AlphaSpec::Cf {
                prefix: prefix.clone(),
                period: period.clone(),
            },
        };
        Ok(Alpha::new(spec)?)
    }
}

/// Parses the `--alpha` flag: a preset name or inline JSON.
pub fn parse_alpha_flag(text: &str) -> Result<Alpha, CliError> {
    let input = if text.trim_start().starts_with('{') {
        AlphaInput::Spec(
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("--alpha: {e}")))?,
        )
    } else {
        AlphaInput::Preset(text.to_string())
    };
    input.resolve()
}

pub fn alpha_json(alpha: &Alpha) -> AlphaJson {
    AlphaJson::from(alpha.spec())
}

/// A cutpoint: `⟨i⟩`, a rational point, or a general point `frac(a + b·α)`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum PointJson {
    Orbit { orbit: i64 },
    Rational { rational: String },
    General { a: String, b: String },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CutJson {
    #[serde(flatten)]
    pub point: PointJson,
    pub label: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PartitionJson {
    pub alpha: AlphaInput,
    pub cuts: Vec<CutJson>,
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| CliError::Input(format!("not a rational number: {s:?}")))
}

impl PointJson {
    pub fn to_point(&self) -> Result<CirclePoint, CliError> {
        Ok(match self {
            PointJson::Orbit { orbit } => CirclePoint::orbit(*orbit),
            PointJson::Rational { rational } => CirclePoint::rational(parse_rational(rational)?),
            PointJson::General { a, b } => CirclePoint::new(parse_rational(a)?, parse_rational(b)?),
        })
    }

    pub fn from_point(x: &CirclePoint) -> Self {
        match x.orbit_index() {
            Some(orbit) => PointJson::Orbit { orbit },
            None if x.b() == Rational::from_integer(0) => PointJson::Rational {
                rational: x.a().to_string(),
            },
            None => PointJson::General {
                a: x.a().to_string(),
                b: x.b().to_string(),
            },
        }
    }
}

impl PartitionJson {
    /// Builds the partition; `alpha_override` replaces the angle in the file.
    pub fn to_partition(
        &self,
        alpha_override: Option<&Alpha>,
    ) -> Result<LabeledPartition, CliError> {
        let alpha = match alpha_override {
            Some(a) => a.clone(),
            None => self.alpha.resolve()?,
        };
        let cuts = self
            .cuts
            .iter()
            .map(|c| Ok((c.point.to_point()?, sym(&c.label))))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(LabeledPartition::from_cut_labels(&alpha, &cuts)?)
    }

    pub fn from_partition(p: &LabeledPartition) -> Self {
        PartitionJson {
            alpha: AlphaInput::Spec(alpha_json(p.alpha())),
            cuts: p
                .cuts()
                .iter()
                .zip(p.labels())
                .map(|(c, l)| CutJson {
                    point: PointJson::from_point(c),
                    label: word_to_string(l),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelJson {
    Sturmian(AlphaInput),
    FullShift(Vec<String>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RuleJson {
    pub model: ModelJson,
    pub width: usize,
    pub table: std::collections::BTreeMap<String, String>,
}

/// Splits a table key into letters: on `.` if present, else per character.
fn parse_word(s: &str) -> Word {
    if s.contains('.') {
        s.split('.').map(sym).collect()
    } else {
        sturmian_core::word::word_from_chars(s)
    }
}

impl RuleJson {
    pub fn to_rule(
        &self,
        alpha_override: Option<&Alpha>,
        caps: SearchCaps,
    ) -> Result<LocalRule, CliError> {
        let model = match &self.model {
            ModelJson::Sturmian(a) => LanguageModel::Sturmian(match alpha_override {
                Some(x) => x.clone(),
                None => a.resolve()?,
            }),
            ModelJson::FullShift(letters) => {
                let refs: Vec<&str> = letters.iter().map(String::as_str).collect();
                LanguageModel::full_shift(&refs)?
            }
        };
        let entries: Vec<(Word, Symbol)> = self
            .table
            .iter()
            .map(|(k, v)| (parse_word(k), sym(v)))
            .collect();
        Ok(LocalRule::with_caps(model, self.width, &entries, caps)?)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
