//! Space and map documents: the JSON surface of the tool.
//!
//! A space document is one of three shapes:
//!
//! ```json
//! {"carrier": ["a","b"], "opens": [[], ["b"], ["a","b"]]}
//! {"poset": {"elements": ["a","b"], "le-pairs": [["a","b"]]}, "topology": "alexandroff"}
//! {"family": "johnstone-P", "topology": "scott"}
//! ```
//!
//! Families: `johnstone-P`, `johnstone-X`, `johnstone-Y` (Scott topology
//! by default), `omega-plus-one` and `naturals` (Alexandroff by
//! default). Diagnostics carry the offending field.

use serde::{Deserialize, Serialize};

use soberscope::johnstone::{Ambient, ChainSpace, ChainTopology, JTopologyKind};
use soberscope::space::SpaceError;
use soberscope::{FinitePoset, FiniteSpace, Subset};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub topology: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    #[serde(rename = "le-pairs")]
    pub le_pairs: Vec<(String, String)>,
}

/// A parsed space: finite with explicit opens, a grid ambient, or a
/// symbolic chain.
#[derive(Debug, Clone)]
pub enum ParsedSpace {
    Finite(FiniteSpace),
    Grid { ambient: Ambient, topology: JTopologyKind },
    Chain(ChainSpace),
}

impl ParsedSpace {
    pub fn describe(&self) -> String {
        match self {
            ParsedSpace::Finite(space) => format!(
                "finite space ({} points, {} opens)",
                space.len(),
                space.opens().len()
            ),
            ParsedSpace::Grid { ambient, topology } => format!("({ambient}, {topology})"),
            ParsedSpace::Chain(chain) => chain.render(),
        }
    }
}

/// A diagnostic tied to a document field.
#[derive(Debug, Clone)]
pub struct Diagnostic {
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

fn diag(field: impl Into<String>, message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        field: field.into(),
        message: message.into(),
    }
}

/// Parses document text into a space, with positioned syntax errors and
/// field-level semantic errors.
pub fn parse_space(text: &str) -> Result<ParsedSpace, Vec<Diagnostic>> {
    let doc: SpaceDocument = serde_json::from_str(text).map_err(|e| {
        vec![diag(
            format!("(line {}, column {})", e.line(), e.column()),
            format!("syntax error: {e}"),
        )]
    })?;
    interpret(&doc)
}

pub fn interpret(doc: &SpaceDocument) -> Result<ParsedSpace, Vec<Diagnostic>> {
    let modes = [
        doc.carrier.is_some() || doc.opens.is_some(),
        doc.poset.is_some(),
        doc.family.is_some(),
    ];
    if modes.iter().filter(|&&m| m).count() != 1 {
        return Err(vec![diag(
            "document",
            "provide exactly one of: carrier+opens, poset, family",
        )]);
    }
    if let Some(family) = &doc.family {
        return parse_family(family, doc.topology.as_deref());
    }
    if let Some(poset_doc) = &doc.poset {
        return parse_poset(poset_doc, doc.topology.as_deref());
    }
    parse_explicit(doc)
}

fn parse_family(family: &str, topology: Option<&str>) -> Result<ParsedSpace, Vec<Diagnostic>> {
    let grid = |ambient| {
        let topology = match topology {
            None | Some("scott") => JTopologyKind::Scott,
            Some("alexandroff") => JTopologyKind::Alexandroff,
            Some("scott-si") => JTopologyKind::ScottSi,
            Some(other) => {
                return Err(vec![diag(
                    "topology",
                    format!("unknown topology `{other}` (expected alexandroff|scott|scott-si)"),
                )])
            }
        };
        Ok(ParsedSpace::Grid { ambient, topology })
    };
    let chain = |with_top| {
        let topology = match topology {
            None | Some("alexandroff") => ChainTopology::Alexandroff,
            Some("scott") => ChainTopology::Scott,
            Some(other) => {
                return Err(vec![diag(
                    "topology",
                    format!("unknown topology `{other}` (expected alexandroff|scott)"),
                )])
            }
        };
        Ok(ParsedSpace::Chain(ChainSpace { with_top, topology }))
    };
    match family {
        "johnstone-P" => grid(Ambient::P),
        "johnstone-X" => grid(Ambient::X),
        "johnstone-Y" => grid(Ambient::Y),
        "johnstone-J" => grid(Ambient::J),
        "omega-plus-one" => chain(true),
        "naturals" => chain(false),
        other => Err(vec![diag(
            "family",
            format!(
                "unknown family `{other}` (expected johnstone-P|johnstone-X|johnstone-Y|omega-plus-one|naturals)"
            ),
        )]),
    }
}

fn parse_poset(
    doc: &PosetDocument,
    topology: Option<&str>,
) -> Result<ParsedSpace, Vec<Diagnostic>> {
    let mut pairs = Vec::new();
    for (i, (a, b)) in doc.le_pairs.iter().enumerate() {
        let idx = |name: &str| {
            doc.elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| vec![diag(format!("poset.le-pairs[{i}]"), format!("unknown element `{name}`"))])
        };
        pairs.push((idx(a)?, idx(b)?));
    }
    let poset = FinitePoset::new(doc.elements.clone(), &pairs)
        .map_err(|e| vec![diag("poset", e.to_string())])?;
    let space = match topology {
        None | Some("alexandroff") => soberscope::alexandroff(&poset),
        Some("scott") => soberscope::scott_finite(&poset),
        Some(other) => {
            return Err(vec![diag(
                "topology",
                format!("unknown topology `{other}` (expected alexandroff|scott)"),
            )])
        }
    };
    Ok(ParsedSpace::Finite(space))
}

fn parse_explicit(doc: &SpaceDocument) -> Result<ParsedSpace, Vec<Diagnostic>> {
    let carrier = doc
        .carrier
        .as_ref()
        .ok_or_else(|| vec![diag("carrier", "missing")])?;
    let opens = doc
        .opens
        .as_ref()
        .ok_or_else(|| vec![diag("opens", "missing")])?;
    for (i, open) in opens.iter().enumerate() {
        for member in open {
            if !carrier.contains(member) {
                return Err(vec![diag(
                    format!("opens[{i}]"),
                    format!("unknown identifier `{member}`"),
                )]);
            }
        }
    }
    match FiniteSpace::from_labelled_opens(carrier, opens) {
        Ok(space) => Ok(ParsedSpace::Finite(space)),
        Err(SpaceError::Violations(violations)) => Err(violations
            .iter()
            .map(|v| {
                let axiom = match v {
                    soberscope::TopologyViolation::UnionMissing { .. } => "union axiom",
                    soberscope::TopologyViolation::IntersectionMissing { .. } => {
                        "intersection axiom"
                    }
                    soberscope::TopologyViolation::MissingEmptySet
                    | soberscope::TopologyViolation::MissingCarrier => "union axiom",
                    soberscope::TopologyViolation::MemberOutsideCarrier { .. } => "carrier",
                };
                diag(
                    "opens",
                    format!("{axiom} violated: {}", v.render(|i| carrier[i].clone())),
                )
            })
            .collect()),
        Err(SpaceError::Input(e)) => Err(vec![diag("carrier", e.to_string())]),
    }
}

/// Serializes a parsed space back to a document. Finite spaces round-trip
/// through carrier+opens with members sorted by carrier order; symbolic
/// spaces keep their family form with the topology made explicit.
pub fn to_document(space: &ParsedSpace) -> SpaceDocument {
    match space {
        ParsedSpace::Finite(space) => SpaceDocument {
            carrier: Some(space.labels().to_vec()),
            opens: Some(
                space
                    .opens()
                    .iter()
                    .map(|&u| subset_labels(space, u))
                    .collect(),
            ),
            poset: None,
            topology: None,
            family: None,
        },
        ParsedSpace::Grid { ambient, topology } => SpaceDocument {
            carrier: None,
            opens: None,
            poset: None,
            topology: Some(topology.name().to_string()),
            family: Some(match ambient {
                Ambient::P => "johnstone-P".to_string(),
                Ambient::X => "johnstone-X".to_string(),
                Ambient::Y => "johnstone-Y".to_string(),
                Ambient::J => "johnstone-J".to_string(),
                Ambient::OmegaPlusOne => unreachable!("chains parse to ParsedSpace::Chain"),
            }),
        },
        ParsedSpace::Chain(chain) => SpaceDocument {
            carrier: None,
            opens: None,
            poset: None,
            topology: Some(chain.topology.to_string()),
            family: Some(if chain.with_top {
                "omega-plus-one".to_string()
            } else {
                "naturals".to_string()
            }),
        },
    }
}

pub fn subset_labels(space: &FiniteSpace, s: Subset) -> Vec<String> {
    s.iter().map(|i| space.label(i).to_string()).collect()
}

/// A map document: either a named symbolic map or an explicit table
/// between two space documents.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    #[serde(rename = "paper-map", default, skip_serializing_if = "Option::is_none")]
    pub paper_map: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<SpaceDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<SpaceDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<std::collections::BTreeMap<String, String>>,
}

#[derive(Debug, Clone)]
pub enum ParsedMap {
    Named(soberscope::johnstone::JPiecewiseMap),
    Finite(soberscope::SpaceMap),
}

pub fn parse_map(text: &str) -> Result<ParsedMap, Vec<Diagnostic>> {
    let doc: MapDocument = serde_json::from_str(text).map_err(|e| {
        vec![diag(
            format!("(line {}, column {})", e.line(), e.column()),
            format!("syntax error: {e}"),
        )]
    })?;
    if let Some(name) = &doc.paper_map {
        let named = soberscope::johnstone::JPiecewiseMap::parse(name).ok_or_else(|| {
            vec![diag(
                "paper-map",
                format!("unknown map `{name}` (expected f-case1|f-case2|g-collapse|xi-omega)"),
            )]
        })?;
        return Ok(ParsedMap::Named(named));
    }
    let source = doc
        .source
        .as_ref()
        .ok_or_else(|| vec![diag("source", "missing")])?;
    let target = doc
        .target
        .as_ref()
        .ok_or_else(|| vec![diag("target", "missing")])?;
    let table = doc.map.as_ref().ok_or_else(|| vec![diag("map", "missing")])?;
    let source = match interpret(source)? {
        ParsedSpace::Finite(space) => space,
        other => {
            return Err(vec![diag(
                "source",
                format!("explicit maps need finite spaces, found {}", other.describe()),
            )])
        }
    };
    let target = match interpret(target)? {
        ParsedSpace::Finite(space) => space,
        other => {
            return Err(vec![diag(
                "target",
                format!("explicit maps need finite spaces, found {}", other.describe()),
            )])
        }
    };
    let pairs: Vec<(String, String)> = table
        .iter()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    let map = soberscope::SpaceMap::from_pairs(source, target, &pairs)
        .map_err(|e| vec![diag("map", e.to_string())])?;
    Ok(ParsedMap::Finite(map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_explicit_sierpinski() {
        let text = r#"{"carrier":["a","b"],"opens":[[],["b"],["a","b"]]}"#;
        match parse_space(text).unwrap() {
            ParsedSpace::Finite(space) => {
                assert_eq!(space.len(), 2);
                assert_eq!(space.opens().len(), 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parses_families_with_defaults() {
        match parse_space(r#"{"family":"johnstone-P"}"#).unwrap() {
            ParsedSpace::Grid { ambient, topology } => {
                assert_eq!(ambient, Ambient::P);
                assert_eq!(topology, JTopologyKind::Scott);
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_space(r#"{"family":"omega-plus-one"}"#).unwrap() {
            ParsedSpace::Chain(chain) => {
                assert!(chain.with_top);
                assert_eq!(chain.topology, ChainTopology::Alexandroff);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn union_axiom_diagnostic() {
        let text = r#"{"carrier":["a","b"],"opens":[[],["a"],["b"]]}"#;
        let errs = parse_space(text).unwrap_err();
        assert!(
            errs.iter().any(|d| d.message.contains("union axiom")),
            "{errs:?}"
        );
    }

    #[test]
    fn unknown_identifier_diagnostic() {
        let text = r#"{"carrier":["a"],"opens":[[],["c"]]}"#;
        let errs = parse_space(text).unwrap_err();
        assert!(errs[0].field.contains("opens[1]"), "{errs:?}");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let errs = parse_space("{not json").unwrap_err();
        assert!(errs[0].field.contains("line 1"));
    }

    #[test]
    fn poset_documents_build_alexandroff_spaces() {
        let text = r#"{"poset":{"elements":["a","b","c"],"le-pairs":[["a","c"],["b","c"]]},"topology":"alexandroff"}"#;
        match parse_space(text).unwrap() {
            ParsedSpace::Finite(space) => assert_eq!(space.opens().len(), 5),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip_is_semantically_identical() {
        let text = r#"{"carrier":["a","b"],"opens":[["b"],[],["a","b"]]}"#;
        let parsed = parse_space(text).unwrap();
        let doc = to_document(&parsed);
        let reparsed = parse_space(&serde_json::to_string(&doc).unwrap()).unwrap();
        match (parsed, reparsed) {
            (ParsedSpace::Finite(a), ParsedSpace::Finite(b)) => assert_eq!(a, b),
            _ => panic!("round trip changed the document kind"),
        }
    }

    #[test]
    fn named_map_documents() {
        match parse_map(r#"{"paper-map":"f-case1"}"#).unwrap() {
            ParsedMap::Named(m) => assert_eq!(m.name(), "f-case1"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_map(r#"{"paper-map":"nope"}"#).is_err());
    }

    #[test]
    fn explicit_map_documents() {
        let text = r#"{
            "source": {"carrier":["a","b"],"opens":[[],["b"],["a","b"]]},
            "target": {"carrier":["a","b"],"opens":[[],["b"],["a","b"]]},
            "map": {"a":"a","b":"b"}
        }"#;
        match parse_map(text).unwrap() {
            ParsedMap::Finite(m) => assert_eq!(m.table(), &[0, 1]),
            other => panic!("unexpected {other:?}"),
        }
    }
}
