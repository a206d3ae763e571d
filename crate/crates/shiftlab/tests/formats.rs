//! every emitted document re-parses to an equal value, and parsing rejects
//! malformed or ambiguous input with a named error.

use shiftlab::cli::ShiftOutcomeDoc;
use shiftlab::doc::{
    complex_of, ideal_of, parse_doc, BettiDoc, ComplexDoc, Doc, DocError, IdealDoc, ReportDoc,
    SummaryDoc, TraceDoc,
};
use shiftlab::explore::{explore, ExploreDoc, ExploreMode};
use shiftlab_core::{
    combinatorial_shift, sweep_verify, verify_complex, BettiTable, Complex, Face, FieldSpec,
    Monomial, MonomialIdeal, ShiftOrder, SweepMode,
};

fn fix_a() -> Complex {
    Complex::from_min_nonfaces(
        4,
        &[
            Face::from_vertices(&[1, 2]),
            Face::from_vertices(&[2, 3]),
            Face::from_vertices(&[2, 4]),
        ],
    )
    .unwrap()
}

fn reparse<T: serde::Serialize + serde::de::DeserializeOwned>(value: &T) -> T {
    serde_json::from_str(&serde_json::to_string_pretty(value).unwrap()).unwrap()
}

#[test]
fn complex_documents_round_trip() {
    let doc = ComplexDoc::from_complex(&fix_a());
    assert_eq!(reparse(&doc), doc);
    assert_eq!(doc.to_complex().unwrap(), fix_a());

    // the facet view names the same complex
    let facet_doc = ComplexDoc {
        n: 4,
        minimal_nonfaces: None,
        facets: Some(fix_a().facets().iter().map(|f| f.vertices()).collect()),
    };
    assert_eq!(facet_doc.to_complex().unwrap(), fix_a());
}

#[test]
fn complex_documents_need_exactly_one_view() {
    let both = ComplexDoc {
        n: 3,
        minimal_nonfaces: Some(vec![vec![1, 2]]),
        facets: Some(vec![vec![1, 3], vec![2, 3]]),
    };
    assert_eq!(both.to_complex().unwrap_err(), DocError::AmbiguousComplex);
    let neither = ComplexDoc { n: 3, minimal_nonfaces: None, facets: None };
    assert_eq!(neither.to_complex().unwrap_err(), DocError::AmbiguousComplex);
}

#[test]
fn rejected_complexes_surface_the_core_error() {
    let doc = ComplexDoc {
        n: 3,
        minimal_nonfaces: Some(vec![vec![2]]),
        facets: None,
    };
    let err = doc.to_complex().unwrap_err();
    match err {
        DocError::Rejected(msg) => assert!(msg.contains("MissingVertex"), "{}", msg),
        other => panic!("unexpected {:?}", other),
    }
}

#[test]
fn ideal_documents_round_trip() {
    let ideal = MonomialIdeal::new(
        3,
        vec![
            Monomial::new(vec![2, 0, 0]),
            Monomial::new(vec![1, 1, 0]),
            Monomial::new(vec![1, 0, 1]),
        ],
    )
    .unwrap();
    let doc = IdealDoc::from_ideal(&ideal);
    assert_eq!(reparse(&doc), doc);
    assert_eq!(doc.to_ideal().unwrap(), ideal);

    let skew = IdealDoc { n: 3, generators: vec![vec![1, 1]] };
    assert_eq!(
        skew.to_ideal().unwrap_err(),
        DocError::GeneratorWidth { expected: 3, got: 2 }
    );
    let unit = IdealDoc { n: 2, generators: vec![vec![0, 0]] };
    match unit.to_ideal().unwrap_err() {
        DocError::Rejected(msg) => assert!(msg.contains("UnitGenerator"), "{}", msg),
        other => panic!("unexpected {:?}", other),
    }
}

#[test]
fn betti_documents_round_trip() {
    let mut t = BettiTable::new();
    t.add(0, 2, 3);
    t.add(1, 3, 3);
    t.add(2, 4, 1);
    let doc = BettiDoc::from_table(&t);
    assert_eq!(reparse(&doc), doc);
    assert_eq!(doc.to_table(), t);

    let empty = BettiDoc::from_table(&BettiTable::new());
    assert!(empty.entries.is_empty());
    assert_eq!(reparse(&empty).to_table(), BettiTable::new());
}

#[test]
fn trace_documents_round_trip() {
    let (_, trace) = combinatorial_shift(&fix_a(), &ShiftOrder::Canonical).unwrap();
    let doc = TraceDoc::from_trace(&trace);
    assert_eq!(reparse(&doc), doc);
    let steps = doc.to_steps().unwrap();
    assert_eq!(steps.as_slice(), trace.steps());
    let bad = TraceDoc { steps: vec![(2, 2)], nonface_counts: vec![] };
    assert!(bad.to_steps().is_err());
}

#[test]
fn report_documents_round_trip() {
    let report = verify_complex(&fix_a(), &[FieldSpec::Rationals], 3);
    let doc = ReportDoc::from_report(&report);
    assert_eq!(reparse(&doc), doc);
    assert!(doc.passed);
    assert_eq!(doc.fields, vec![String::from("q")]);
}

#[test]
fn summary_documents_round_trip() {
    let summary = sweep_verify(3, &SweepMode::Exhaustive, &[FieldSpec::Rationals], 0).unwrap();
    let doc = SummaryDoc::from_summary(&summary, String::from("exhaustive"));
    assert_eq!(reparse(&doc), doc);
    assert_eq!((doc.total, doc.passes), (6, 6));
    assert_eq!(doc.statuses.len(), 6);
}

#[test]
fn shift_outcome_documents_round_trip() {
    let (shifted, trace) = combinatorial_shift(&fix_a(), &ShiftOrder::Canonical).unwrap();
    let doc = ShiftOutcomeDoc {
        complex: ComplexDoc::from_complex(&shifted),
        trace: Some(TraceDoc::from_trace(&trace)),
    };
    assert_eq!(reparse(&doc), doc);
    let bare = ShiftOutcomeDoc { complex: ComplexDoc::from_complex(&shifted), trace: None };
    let text = serde_json::to_string(&bare).unwrap();
    assert!(!text.contains("trace"), "{}", text);
    assert_eq!(reparse(&bare), bare);
}

#[test]
fn explore_documents_round_trip() {
    let doc: ExploreDoc = explore(3, &ExploreMode::Exhaustive, &FieldSpec::Rationals, 0).unwrap();
    assert_eq!(reparse(&doc), doc);
}

#[test]
fn parse_doc_dispatches_on_keys() {
    match parse_doc(r#"{"n":3,"generators":[[1,1,0]]}"#).unwrap() {
        Doc::Ideal(d) => assert_eq!(d.n, 3),
        _ => panic!("expected an ideal"),
    }
    match parse_doc(r#"{"n":3,"minimal_nonfaces":[[1,2]]}"#).unwrap() {
        Doc::Complex(d) => assert!(d.minimal_nonfaces.is_some()),
        _ => panic!("expected a complex"),
    }
    match parse_doc(r#"{"n":3,"facets":[[1,2],[2,3]]}"#).unwrap() {
        Doc::Complex(d) => assert!(d.facets.is_some()),
        _ => panic!("expected a complex"),
    }
    match parse_doc(r#"{"entries":[{"i":0,"j":2,"beta":1}]}"#).unwrap() {
        Doc::Betti(d) => assert_eq!(d.entries.len(), 1),
        _ => panic!("expected a table"),
    }
    assert_eq!(parse_doc(r#"{"n":3}"#).unwrap_err(), DocError::UnknownShape);
    assert_eq!(parse_doc("[1,2]").unwrap_err(), DocError::UnknownShape);
    match parse_doc("{") {
        Err(DocError::Json(_)) => {}
        other => panic!("unexpected {:?}", other.map(|_| ())),
    }
    // unknown fields are typos, not extensions
    match parse_doc(r#"{"n":3,"minimal_nonfaces":[[1,2]],"facet":[[3]]}"#) {
        Err(DocError::Json(msg)) => assert!(msg.contains("facet"), "{}", msg),
        other => panic!("unexpected {:?}", other.map(|_| ())),
    }
}

#[test]
fn document_helpers_check_their_kind() {
    let betti = parse_doc(r#"{"entries":[]}"#).unwrap();
    assert!(matches!(ideal_of(&betti), Err(DocError::WrongKind(_))));
    let ideal = parse_doc(r#"{"n":3,"generators":[[1,1,0]]}"#).unwrap();
    assert!(matches!(complex_of(&ideal), Err(DocError::WrongKind(_))));
    // a complex's ideal is its nonface ideal
    let complex = parse_doc(r#"{"n":3,"minimal_nonfaces":[[1,2]]}"#).unwrap();
    let i = ideal_of(&complex).unwrap();
    assert_eq!(i.gens().len(), 1);
    assert_eq!(i.gens()[0].exponents(), &[1, 1, 0]);
}
