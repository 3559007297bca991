//! Check reports: the unit of output for scenario bundles, the CLI and
//! the fuzzer.

use std::time::Instant;

use serde::Serialize;

/// How a property was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Decided outright (finite enumeration or exact symbolic shapes).
    Exhaustive,
    /// Verified over all descriptors/elements with parameters up to the
    /// bound.
    Bounded(u64),
    /// Verified over a seeded random sample of this size.
    Sampled(u64),
}

impl Mode {
    pub fn render(self) -> String {
        match self {
            Mode::Exhaustive => "exhaustive".to_string(),
            Mode::Bounded(b) => format!("bounded B={b}"),
            Mode::Sampled(n) => format!("sampled N={n}"),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for Mode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

/// One checked fact: a property name, whether it holds, a serialized
/// witness when it does not (or when the check is a construction whose
/// result is the payload), the verification mode, and wall-clock time.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub property: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub mode: Mode,
    pub millis: u64,
}

impl CheckReport {
    pub fn new(property: impl Into<String>, holds: bool, witness: Option<String>, mode: Mode) -> Self {
        CheckReport {
            property: property.into(),
            holds,
            witness,
            mode,
            millis: 0,
        }
    }

    /// Runs a check closure and captures its timing.
    pub fn timed(
        property: impl Into<String>,
        mode: Mode,
        f: impl FnOnce() -> (bool, Option<String>),
    ) -> Self {
        let start = Instant::now();
        let (holds, witness) = f();
        CheckReport {
            property: property.into(),
            holds,
            witness,
            mode,
            millis: start.elapsed().as_millis() as u64,
        }
    }

    pub fn render_line(&self) -> String {
        let status = if self.holds { "pass" } else { "FAIL" };
        let witness = match &self.witness {
            Some(w) => format!(" witness={w}"),
            None => String::new(),
        };
        format!(
            "[{status}] {} ({}, {} ms){witness}",
            self.property, self.mode, self.millis
        )
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_shapes() {
        let r = CheckReport::new("k-bounded-sober", false, Some("N".into()), Mode::Exhaustive);
        assert!(r.render_line().contains("FAIL"));
        assert!(r.render_line().contains("witness=N"));
        assert_eq!(Mode::Bounded(40).render(), "bounded B=40");
        assert_eq!(Mode::Sampled(500).render(), "sampled N=500");
    }
}
