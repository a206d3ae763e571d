//! the json document formats: complexes, ideals, betti tables, traces,
//! and verification reports.  every emitted document re-parses to an
//! equal value.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use shiftlab_core::{
    BettiTable, Check, CheckStatus, Complex, Face, Monomial, MonomialIdeal, ShiftStep, ShiftTrace,
    SweepSummary, VerificationReport,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocError {
    /// the text is not well-formed json
    Json(String),
    /// the object matches none of the known document shapes
    UnknownShape,
    /// a complex document must carry exactly one of the two face views
    AmbiguousComplex,
    /// a generator's exponent vector does not have length n
    GeneratorWidth { expected: usize, got: usize },
    /// a core constructor rejected the data; the message is its error
    Rejected(String),
    /// the document parsed but is not the kind the command consumes
    WrongKind(&'static str),
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocError::Json(e) => write!(f, "Json: {}", e),
            DocError::UnknownShape => write!(
                f,
                "UnknownShape: expected an object with \"minimal_nonfaces\", \"facets\", \
                 \"generators\", or \"entries\""
            ),
            DocError::AmbiguousComplex => write!(
                f,
                "AmbiguousComplex: give exactly one of \"minimal_nonfaces\" and \"facets\""
            ),
            DocError::GeneratorWidth { expected, got } => write!(
                f,
                "GeneratorWidth: exponent vector of length {} in an ideal with n = {}",
                got, expected
            ),
            DocError::Rejected(e) => write!(f, "{}", e),
            DocError::WrongKind(want) => write!(f, "WrongKind: this command takes {}", want),
        }
    }
}

impl std::error::Error for DocError {}

/// a complex as either of its two views; emission always uses the
/// minimal-nonface view so documents round-trip to equal values
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimal_nonfaces: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<usize>>>,
}

impl ComplexDoc {
    pub fn from_complex(c: &Complex) -> ComplexDoc {
        ComplexDoc {
            n: c.n(),
            minimal_nonfaces: Some(c.min_nonfaces().iter().map(|f| f.vertices()).collect()),
            facets: None,
        }
    }

    pub fn to_complex(&self) -> Result<Complex, DocError> {
        let faces = |sets: &[Vec<usize>]| -> Vec<Face> {
            sets.iter().map(|vs| Face::from_vertices(vs)).collect()
        };
        match (&self.minimal_nonfaces, &self.facets) {
            (Some(nf), None) => Complex::from_min_nonfaces(self.n, &faces(nf))
                .map_err(|e| DocError::Rejected(e.to_string())),
            (None, Some(fc)) => Complex::from_facets(self.n, &faces(fc))
                .map_err(|e| DocError::Rejected(e.to_string())),
            _ => Err(DocError::AmbiguousComplex),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDoc {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

impl IdealDoc {
    pub fn from_ideal(i: &MonomialIdeal) -> IdealDoc {
        IdealDoc {
            n: i.n(),
            generators: i.gens().iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal, DocError> {
        let mut gens = Vec::new();
        for exps in &self.generators {
            if exps.len() != self.n {
                return Err(DocError::GeneratorWidth { expected: self.n, got: exps.len() });
            }
            gens.push(Monomial::new(exps.clone()));
        }
        MonomialIdeal::new(self.n, gens).map_err(|e| DocError::Rejected(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub beta: u64,
}

/// sparse betti table, entries sorted by (i, j)
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiDoc {
    pub entries: Vec<BettiEntry>,
}

impl BettiDoc {
    pub fn from_table(t: &BettiTable) -> BettiDoc {
        BettiDoc {
            entries: t
                .entries()
                .iter()
                .map(|(&(i, j), &beta)| BettiEntry { i, j, beta })
                .collect(),
        }
    }

    pub fn to_table(&self) -> BettiTable {
        let mut t = BettiTable::new();
        for e in &self.entries {
            t.add(e.i, e.j, e.beta);
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDoc {
    pub steps: Vec<(usize, usize)>,
    pub nonface_counts: Vec<usize>,
}

impl TraceDoc {
    pub fn from_trace(t: &ShiftTrace) -> TraceDoc {
        TraceDoc {
            steps: t.steps().iter().map(|s| (s.k(), s.l())).collect(),
            nonface_counts: t.nonface_counts().to_vec(),
        }
    }

    pub fn to_steps(&self) -> Result<Vec<ShiftStep>, DocError> {
        self.steps
            .iter()
            .map(|&(k, l)| ShiftStep::new(k, l).map_err(|e| DocError::Rejected(e.to_string())))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteDoc {
    pub label: String,
    pub closed_form: Option<BettiDoc>,
    pub homology: Vec<(String, Option<BettiDoc>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub id: String,
    pub stable: bool,
    pub seed: u64,
    pub fields: Vec<String>,
    pub passed: bool,
    pub routes: Vec<RouteDoc>,
    pub checks: Vec<CheckDoc>,
}

fn status_str(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::NotApplicable => "not applicable",
    }
}

fn check_doc(c: &Check) -> CheckDoc {
    CheckDoc {
        name: c.name().to_string(),
        status: status_str(c.status()).to_string(),
        detail: c.detail().map(|d| d.to_string()),
    }
}

impl ReportDoc {
    pub fn from_report(r: &VerificationReport) -> ReportDoc {
        ReportDoc {
            id: r.id().to_string(),
            stable: r.stable(),
            seed: r.seed(),
            fields: r.fields().to_vec(),
            passed: r.passed(),
            routes: r
                .routes()
                .iter()
                .map(|rt| RouteDoc {
                    label: rt.label().to_string(),
                    closed_form: rt.closed_form().map(BettiDoc::from_table),
                    homology: rt
                        .homology()
                        .iter()
                        .map(|(f, t)| (f.clone(), t.as_ref().map(BettiDoc::from_table)))
                        .collect(),
                })
                .collect(),
            checks: r.checks().iter().map(check_doc).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryDoc {
    pub n: usize,
    pub mode: String,
    pub total: usize,
    pub passes: usize,
    pub statuses: BTreeMap<String, bool>,
    pub failures: Vec<ReportDoc>,
}

impl SummaryDoc {
    pub fn from_summary(s: &SweepSummary, mode: String) -> SummaryDoc {
        SummaryDoc {
            n: s.n(),
            mode,
            total: s.total(),
            passes: s.passes(),
            statuses: s.statuses().clone(),
            failures: s.failures().iter().map(ReportDoc::from_report).collect(),
        }
    }
}

/// any parsed input document
#[derive(Debug)]
pub enum Doc {
    Complex(ComplexDoc),
    Ideal(IdealDoc),
    Betti(BettiDoc),
}

/// dispatch on the object's keys, then parse strictly
pub fn parse_doc(text: &str) -> Result<Doc, DocError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| DocError::Json(e.to_string()))?;
    let obj = value.as_object().ok_or(DocError::UnknownShape)?;
    let from = |e: serde_json::Error| DocError::Json(e.to_string());
    if obj.contains_key("generators") {
        Ok(Doc::Ideal(serde_json::from_value(value).map_err(from)?))
    } else if obj.contains_key("minimal_nonfaces") || obj.contains_key("facets") {
        Ok(Doc::Complex(serde_json::from_value(value).map_err(from)?))
    } else if obj.contains_key("entries") {
        Ok(Doc::Betti(serde_json::from_value(value).map_err(from)?))
    } else {
        Err(DocError::UnknownShape)
    }
}

/// the ideal a document denotes: ideals directly, complexes through their
/// nonface ideal
pub fn ideal_of(doc: &Doc) -> Result<MonomialIdeal, DocError> {
    match doc {
        Doc::Ideal(d) => d.to_ideal(),
        Doc::Complex(d) => Ok(MonomialIdeal::stanley_reisner(&d.to_complex()?)),
        Doc::Betti(_) => Err(DocError::WrongKind("a complex or ideal document")),
    }
}

/// the complex a document denotes
pub fn complex_of(doc: &Doc) -> Result<Complex, DocError> {
    match doc {
        Doc::Complex(d) => d.to_complex(),
        _ => Err(DocError::WrongKind("a complex document")),
    }
}
