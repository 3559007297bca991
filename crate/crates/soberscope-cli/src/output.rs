//! Report emission: plain text or line-delimited JSON records with the
//! stable field names property/holds/witness/mode/millis.

use soberscope::report::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub struct Emitter {
    format: Format,
}

impl Emitter {
    pub fn new(format: Format) -> Self {
        Emitter { format }
    }

    pub fn report(&self, report: &CheckReport) {
        match self.format {
            Format::Text => println!("{}", report.render_line()),
            Format::Json => {
                println!("{}", serde_json::to_string(report).expect("reports serialize"))
            }
        }
    }

    pub fn reports<'a>(&self, reports: impl IntoIterator<Item = &'a CheckReport>) {
        for r in reports {
            self.report(r);
        }
    }

    /// A free-form informational line (kept out of json mode so that the
    /// record stream stays machine-readable).
    pub fn note(&self, text: &str) {
        if self.format == Format::Text {
            println!("{text}");
        }
    }

    /// A constructed document, as a single JSON line in both modes.
    pub fn document(&self, doc: &impl serde::Serialize) {
        println!("{}", serde_json::to_string(doc).expect("documents serialize"));
    }
}
