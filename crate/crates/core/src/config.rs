//! Plain-text algebra configurations.
//!
//! One `key = value` pair per line; `#` starts a comment. Integer lists use
//! bracket notation with the constant term first, and a generator is a list
//! of ring elements, each itself a coefficient list:
//!
//! ```text
//! # Hamilton quaternions over Q(i), p = 3
//! p = 3
//! min_poly = [1, 0, 1]
//! sigma_image = [0, -1]
//! u = -1
//! generator = [[1, 1], [1]]
//! ```

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number_ring::{AlgebraSpec, QuotientRing};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

/// A parsed configuration file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub spec: AlgebraSpec,
    /// Code generator `g(x)`, lowest degree first.
    pub generator: Option<Vec<Vec<i64>>>,
    pub bound: Option<u128>,
    pub seed: Option<u64>,
    pub format: Option<OutputFormat>,
}

const KEYS: &[&str] = &[
    "p",
    "min_poly",
    "sigma_image",
    "u",
    "conjugation_mode",
    "assume_division",
    "generator",
    "bound",
    "seed",
    "format",
];

fn value<T: DeserializeOwned>(line: usize, key: &str, raw: &str) -> Result<T> {
    serde_json::from_str(raw).map_err(|e| Error::Parse {
        line,
        message: format!("bad value for `{key}`: {e}"),
    })
}

fn word<T: DeserializeOwned>(line: usize, key: &str, raw: &str) -> Result<T> {
    value(line, key, &format!("\"{raw}\""))
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let mut seen: Vec<(&str, usize, &str)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, val)) = content.split_once('=') else {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `key = value`, found `{content}`"),
                });
            };
            let key = key.trim();
            let val = val.trim();
            let Some(&known) = KEYS.iter().find(|k| **k == key) else {
                return Err(Error::UnknownKey {
                    line,
                    key: key.to_string(),
                });
            };
            if seen.iter().any(|(k, _, _)| *k == known) {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate key `{key}`"),
                });
            }
            seen.push((known, line, val));
        }
        let get = |k: &str| {
            seen.iter()
                .find(|(key, _, _)| *key == k)
                .map(|&(_, l, v)| (l, v))
        };
        let required = |k: &str| get(k).ok_or_else(|| Error::MissingKey(k.to_string()));

        let (l, v) = required("p")?;
        let p: i64 = value(l, "p", v)?;
        let (l, v) = required("min_poly")?;
        let min_poly: Vec<i64> = value(l, "min_poly", v)?;
        let (l, v) = required("sigma_image")?;
        let sigma_image: Vec<i64> = value(l, "sigma_image", v)?;
        let (l, v) = required("u")?;
        let u: i64 = value(l, "u", v)?;
        let conjugation_mode = match get("conjugation_mode") {
            Some((l, v)) => word(l, "conjugation_mode", v)?,
            None => AlgebraSpec::default_conjugation(&min_poly),
        };
        let assume_division = match get("assume_division") {
            Some((l, v)) => value(l, "assume_division", v)?,
            None => false,
        };
        Ok(Config {
            spec: AlgebraSpec {
                min_poly,
                sigma_image,
                u,
                p,
                conjugation_mode,
                assume_division,
            },
            generator: get("generator")
                .map(|(l, v)| value(l, "generator", v))
                .transpose()?,
            bound: get("bound")
                .map(|(l, v)| value(l, "bound", v))
                .transpose()?,
            seed: get("seed").map(|(l, v)| value(l, "seed", v)).transpose()?,
            format: get("format")
                .map(|(l, v)| word(l, "format", v))
                .transpose()?,
        })
    }

    /// Canonical text form; `parse(to_text(c)) == c`.
    pub fn to_text(&self) -> String {
        let list = |v: &[i64]| serde_json::to_string(v).unwrap().replace(',', ", ");
        let s = &self.spec;
        let mut out = String::new();
        let _ = writeln!(out, "p = {}", s.p);
        let _ = writeln!(out, "min_poly = {}", list(&s.min_poly));
        let _ = writeln!(out, "sigma_image = {}", list(&s.sigma_image));
        let _ = writeln!(out, "u = {}", s.u);
        let _ = writeln!(out, "conjugation_mode = {}", s.conjugation_mode);
        let _ = writeln!(out, "assume_division = {}", s.assume_division);
        if let Some(g) = &self.generator {
            let parts: Vec<String> = g.iter().map(|c| list(c)).collect();
            let _ = writeln!(out, "generator = [{}]", parts.join(", "));
        }
        if let Some(b) = self.bound {
            let _ = writeln!(out, "bound = {b}");
        }
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed = {seed}");
        }
        if let Some(f) = self.format {
            let _ = writeln!(
                out,
                "format = {}",
                if f == OutputFormat::Json {
                    "json"
                } else {
                    "table"
                }
            );
        }
        out
    }

    /// Validates the algebra and builds its quotient ring.
    pub fn ring(&self) -> Result<QuotientRing> {
        QuotientRing::new(self.spec.clone())
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        Self::parse(&text)
    }
}

impl FromStr for Config {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Parses and validates in one step.
pub fn load(text: &str) -> Result<(Config, QuotientRing)> {
    let config = Config::parse(text)?;
    let ring = config.ring()?;
    Ok((config, ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_ring::ConjugationMode;

    const EXAMPLE: &str = "p = 3\nmin_poly = [1, 0, 1]\nsigma_image = [0, -1]\nu = -1";

    #[test]
    fn parses_minimal_config() {
        let c = Config::parse(EXAMPLE).unwrap();
        assert_eq!(c.spec.p, 3);
        assert_eq!(c.spec.min_poly, vec![1, 0, 1]);
        assert_eq!(c.spec.sigma_image, vec![0, -1]);
        assert_eq!(c.spec.u, -1);
        assert_eq!(c.spec.conjugation_mode, ConjugationMode::Complex);
        assert!(!c.spec.assume_division);
        assert_eq!(c.generator, None);
    }

    #[test]
    fn errors() {
        assert_eq!(Config::parse(""), Err(Error::MissingKey("p".into())));
        assert_eq!(
            Config::parse("p = 3\nfoo = 1"),
            Err(Error::UnknownKey {
                line: 2,
                key: "foo".into()
            })
        );
        assert!(matches!(
            Config::parse("p = three"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Config::parse("p 3"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Config::parse("p = 3\np = 5"),
            Err(Error::Parse { line: 2, .. })
        ));
        let bad = EXAMPLE.replace("p = 3", "p = 4");
        assert!(Config::parse(&bad).is_ok());
        assert_eq!(load(&bad).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn round_trip() {
        let text = format!(
            "# comment\n{EXAMPLE}\ngenerator = [[1,1],[1]]  # g = x + 1 + a\nbound = 500\nseed = 9\nformat = json\n"
        );
        let c = Config::parse(&text).unwrap();
        let canon = c.to_text();
        assert_eq!(Config::parse(&canon).unwrap(), c);
        assert_eq!(Config::parse(&canon).unwrap().to_text(), canon);
    }
}
