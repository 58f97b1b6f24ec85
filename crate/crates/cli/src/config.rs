//! Flat `key = value` configuration files.
//!
//! Keys are the long flag names without dashes (`theta`, `alpha-max`,
//! `ratio-alpha-beta`, ...). `axis` may repeat. Material presets are declared
//! with dotted keys:
//!
//! ```text
//! preset.mysite.coupling-mhz = 40.1
//! preset.mysite.eta = 0.3
//! preset.mysite.gamma-mhz-per-t = 11.3188   # optional
//! ```

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use quadspin::MaterialPreset;

use crate::CliError;

#[derive(Debug, Clone)]
struct Entry {
    value: String,
    line: usize,
}

#[derive(Debug, Default)]
pub struct Config {
    source: String,
    entries: BTreeMap<String, Vec<Entry>>,
    presets: Vec<MaterialPreset>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, source: &str) -> Result<Self, CliError> {
        let mut entries: BTreeMap<String, Vec<Entry>> = BTreeMap::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(CliError::Validation(format!(
                    "{source}:{line}: expected `key = value`"
                )));
            };
            let key = key.trim();
            if key.is_empty() {
                return Err(CliError::Validation(format!("{source}:{line}: empty key")));
            }
            entries.entry(key.to_string()).or_default().push(Entry {
                value: value.trim().to_string(),
                line,
            });
        }
        let mut config = Self {
            source: source.to_string(),
            entries,
            presets: Vec::new(),
        };
        config.presets = config.take_presets()?;
        Ok(config)
    }

    pub fn presets(&self) -> &[MaterialPreset] {
        &self.presets
    }

    fn take_presets(&mut self) -> Result<Vec<MaterialPreset>, CliError> {
        let mut fields: BTreeMap<String, BTreeMap<String, (f64, usize)>> = BTreeMap::new();
        let keys: Vec<String> = self
            .entries
            .keys()
            .filter(|k| k.starts_with("preset."))
            .cloned()
            .collect();
        for key in keys {
            let entries = self.entries.remove(&key).unwrap_or_default();
            let entry = self.single(&key, entries)?;
            let rest = &key["preset.".len()..];
            let Some((name, field)) = rest.rsplit_once('.') else {
                return Err(CliError::Validation(format!(
                    "{}:{}: preset keys look like preset.<name>.<field>",
                    self.source, entry.line
                )));
            };
            let value = self.number(&key, &entry)?;
            fields
                .entry(name.to_string())
                .or_default()
                .insert(field.to_string(), (value, entry.line));
        }
        let mut presets = Vec::new();
        for (name, mut f) in fields {
            let mut required = |field: &str| {
                f.remove(field).map(|(v, _)| v).ok_or_else(|| {
                    CliError::Validation(format!(
                        "{}: preset `{name}` is missing `{field}`",
                        self.source
                    ))
                })
            };
            let coupling = required("coupling-mhz")?;
            let eta = required("eta")?;
            let gamma = f.remove("gamma-mhz-per-t").map_or(0.0, |(v, _)| v);
            let moment = f.remove("quadrupole-moment-cm2").map_or(0.0, |(v, _)| v);
            if let Some((field, (_, line))) = f.into_iter().next() {
                return Err(CliError::Validation(format!(
                    "{}:{line}: unknown preset field `{field}`",
                    self.source
                )));
            }
            let preset =
                MaterialPreset::new(name.clone(), coupling, eta, gamma, moment).map_err(|e| {
                    CliError::Validation(format!("{}: preset `{name}`: {e}", self.source))
                })?;
            presets.push(preset);
        }
        Ok(presets)
    }

    fn single(&self, key: &str, mut entries: Vec<Entry>) -> Result<Entry, CliError> {
        if entries.len() > 1 {
            return Err(CliError::Validation(format!(
                "{}:{}: `{key}` given more than once",
                self.source, entries[1].line
            )));
        }
        entries
            .pop()
            .ok_or_else(|| CliError::Validation(format!("{}: `{key}` has no value", self.source)))
    }

    fn number<T: FromStr>(&self, key: &str, entry: &Entry) -> Result<T, CliError> {
        entry.value.parse().map_err(|_| {
            CliError::Validation(format!(
                "{}:{}: `{key}` expects a number, got `{}`",
                self.source, entry.line, entry.value
            ))
        })
    }

    /// Removes and parses a single-valued key.
    pub fn take<T: FromStr>(&mut self, key: &str) -> Result<Option<T>, CliError> {
        match self.entries.remove(key) {
            None => Ok(None),
            Some(entries) => {
                let entry = self.single(key, entries)?;
                self.number(key, &entry).map(Some)
            }
        }
    }

    pub fn take_string(&mut self, key: &str) -> Result<Option<String>, CliError> {
        match self.entries.remove(key) {
            None => Ok(None),
            Some(entries) => Ok(Some(self.single(key, entries)?.value)),
        }
    }

    pub fn take_bool(&mut self, key: &str) -> Result<Option<bool>, CliError> {
        match self.take_string(key)? {
            None => Ok(None),
            Some(v) => match v.as_str() {
                "true" | "yes" | "1" => Ok(Some(true)),
                "false" | "no" | "0" => Ok(Some(false)),
                other => Err(CliError::Validation(format!(
                    "{}: `{key}` expects true or false, got `{other}`",
                    self.source
                ))),
            },
        }
    }

    pub fn take_all(&mut self, key: &str) -> Vec<String> {
        self.entries
            .remove(key)
            .unwrap_or_default()
            .into_iter()
            .map(|e| e.value)
            .collect()
    }

    /// Fails on any key no resolver asked for.
    pub fn finish(self) -> Result<(), CliError> {
        match self.entries.into_iter().next() {
            None => Ok(()),
            Some((key, entries)) => Err(CliError::Validation(format!(
                "{}:{}: unknown key `{key}`",
                self.source, entries[0].line
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_blank_lines_and_whitespace() {
        let mut c = Config::parse("# header\n\n  theta = 0.94  # inline\nphi=0\n", "t").unwrap();
        assert_eq!(c.take::<f64>("theta").unwrap(), Some(0.94));
        assert_eq!(c.take::<f64>("phi").unwrap(), Some(0.0));
        assert_eq!(c.take::<f64>("eta").unwrap(), None);
        c.finish().unwrap();
    }

    #[test]
    fn unknown_keys_are_reported_with_line() {
        let mut c = Config::parse("theta = 1\ntheat = 2\n", "cfg").unwrap();
        c.take::<f64>("theta").unwrap();
        match c.finish() {
            Err(CliError::Validation(msg)) => {
                assert!(msg.contains("cfg:2") && msg.contains("theat"), "{msg}")
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            Config::parse("theta 1", "c"),
            Err(CliError::Validation(_))
        ));
        assert!(matches!(
            Config::parse("= 1", "c"),
            Err(CliError::Validation(_))
        ));
        let mut c = Config::parse("theta = abc", "c").unwrap();
        assert!(matches!(
            c.take::<f64>("theta"),
            Err(CliError::Validation(_))
        ));
        let mut c = Config::parse("theta = 1\ntheta = 2", "c").unwrap();
        assert!(matches!(
            c.take::<f64>("theta"),
            Err(CliError::Validation(_))
        ));
    }

    #[test]
    fn repeated_axis_keys() {
        let mut c = Config::parse("axis = beta:0:1:3\naxis = theta:0:1:2\n", "c").unwrap();
        assert_eq!(c.take_all("axis"), vec!["beta:0:1:3", "theta:0:1:2"]);
    }

    #[test]
    fn user_presets() {
        let c = Config::parse(
            "preset.site-a.coupling-mhz = 40\npreset.site-a.eta = 0.3\npreset.site-a.gamma-mhz-per-t = 11.3\n",
            "c",
        )
        .unwrap();
        assert_eq!(c.presets().len(), 1);
        assert_eq!(c.presets()[0].name, "site-a");
        assert_eq!(c.presets()[0].quadrupole_coupling_mhz, 40.0);
        c.finish().unwrap();
        assert!(Config::parse("preset.x.eta = 0.3\n", "c").is_err());
        assert!(Config::parse(
            "preset.x.coupling-mhz = 1\npreset.x.eta = 0.3\npreset.x.colour = 2\n",
            "c"
        )
        .is_err());
        assert!(Config::parse("preset.x.coupling-mhz = -1\npreset.x.eta = 0.3\n", "c").is_err());
    }

    #[test]
    fn booleans() {
        let mut c = Config::parse("degrees = yes", "c").unwrap();
        assert_eq!(c.take_bool("degrees").unwrap(), Some(true));
        let mut c = Config::parse("degrees = maybe", "c").unwrap();
        assert!(c.take_bool("degrees").is_err());
    }
}
