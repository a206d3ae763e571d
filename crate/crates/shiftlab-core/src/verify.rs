//! end-to-end harness: run every route on a complex and compare.
//!
//! failures are data, not panics — each route lands in the report either as
//! a table or as a failed check with a witness, so corpus sweeps always run
//! to completion and list every candidate counterexample.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::betti::{betti_ahh, betti_koszul, BettiTable};
use crate::complex::{
    enumerate_stable_complexes, random_stable_complex, Complex, ComplexError, StabilityCriterion,
};
use crate::field::FieldSpec;
use crate::gin::MIN_FIELD_SIZE;
use crate::ideal::MonomialIdeal;
use crate::shift::{
    combinatorial_shift, exterior_shift, shift_kl, sigma_star, symmetric_shift, ShiftError,
    ShiftOrder,
};

type GinRoute = fn(&Complex, &FieldSpec, u64, usize) -> Result<Complex, ShiftError>;

/// gin-backed routes repeat the coordinate change this many times
pub const DEFAULT_TRIALS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// one named comparison; the name says what was compared, the detail holds
/// the witness on failure or the reason a check did not apply
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    name: String,
    status: CheckStatus,
    detail: Option<String>,
}

impl Check {
    fn pass(name: String) -> Check {
        Check { name, status: CheckStatus::Pass, detail: None }
    }

    fn fail(name: String, detail: String) -> Check {
        Check { name, status: CheckStatus::Fail, detail: Some(detail) }
    }

    fn skip(name: String, detail: String) -> Check {
        Check { name, status: CheckStatus::NotApplicable, detail: Some(detail) }
    }

    fn compare(name: String, expected: &BettiTable, got: &BettiTable) -> Check {
        if expected == got {
            Check::pass(name)
        } else {
            Check::fail(name, format!("expected {} but got {}", expected, got))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn status(&self) -> CheckStatus {
        self.status
    }

    pub fn detail(&self) -> Option<&str> {
        self.detail.as_deref()
    }
}

/// the tables one route produced: the closed-form count of its ideal and
/// the homology count per field
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteTables {
    label: String,
    closed_form: Option<BettiTable>,
    homology: Vec<(String, Option<BettiTable>)>,
}

impl RouteTables {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn closed_form(&self) -> Option<&BettiTable> {
        self.closed_form.as_ref()
    }

    pub fn homology(&self) -> &[(String, Option<BettiTable>)] {
        &self.homology
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    id: String,
    fields: Vec<String>,
    seed: u64,
    stable: bool,
    routes: Vec<RouteTables>,
    checks: Vec<Check>,
}

impl VerificationReport {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn fields(&self) -> &[String] {
        &self.fields
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stable(&self) -> bool {
        self.stable
    }

    pub fn routes(&self) -> &[RouteTables] {
        &self.routes
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// no check failed; not-applicable checks do not count against a pass
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    /// the first failing check, if any
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail)
    }
}

fn derived_seed(seed: u64, salt: u64) -> u64 {
    seed.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(salt + 1))
}

/// betti table of the nonface ideal by the closed-form count; the input
/// must be a shifted or stable complex for this to apply
fn table_of(c: &Complex) -> Result<BettiTable, String> {
    betti_ahh(&MonomialIdeal::stanley_reisner(c)).map_err(|e| e.to_string())
}

/// run all four routes over the given fields and compare every pair of
/// tables that the theory says must agree.  computation errors become
/// failed checks; a non-stable input yields raw homology data with every
/// theorem-level check marked not applicable.
pub fn verify_complex(c: &Complex, fields: &[FieldSpec], seed: u64) -> VerificationReport {
    let stable = c.is_stable(StabilityCriterion::Ideal);
    let ideal = MonomialIdeal::stanley_reisner(c);
    let mut checks: Vec<Check> = Vec::new();
    let mut routes: Vec<RouteTables> = Vec::new();

    // input route: closed form (stable only) against homology over every field
    let input_table = if stable { betti_ahh(&ideal).ok() } else { None };
    let mut input_homology = Vec::new();
    for f in fields {
        let name = format!("input table: closed form vs homology over {}", f.descriptor());
        let koszul = betti_koszul(&ideal, f, None);
        match (&input_table, &koszul) {
            (Some(t), Ok(k)) => checks.push(Check::compare(name, t, k)),
            (None, Ok(_)) => {
                checks.push(Check::skip(name, "input is not stable".to_string()))
            }
            (_, Err(e)) => checks.push(Check::fail(name, e.to_string())),
        }
        input_homology.push((f.descriptor(), koszul.ok()));
    }
    routes.push(RouteTables {
        label: "input".to_string(),
        closed_form: input_table.clone(),
        homology: input_homology,
    });

    // gin-backed routes, one per field that is large enough
    let mut shifted_tables: Vec<(String, BettiTable)> = Vec::new();
    for f in fields {
        for (kind, run) in [
            ("symmetric", symmetric_shift as GinRoute),
            ("exterior", exterior_shift as GinRoute),
        ] {
            let label = format!("{} ({})", kind, f.descriptor());
            let preserved = format!("{} shift over {}: table preserved", kind, f.descriptor());
            let agrees = format!("{} shift over {}: homology route agrees", kind, f.descriptor());
            if !stable {
                checks.push(Check::skip(preserved, "input is not stable".to_string()));
                continue;
            }
            if !f.size_at_least(MIN_FIELD_SIZE) {
                checks.push(Check::skip(preserved, "field too small for genericity".to_string()));
                continue;
            }
            match run(c, f, seed, DEFAULT_TRIALS) {
                Err(e) => checks.push(Check::fail(preserved, e.to_string())),
                Ok(shifted) => match table_of(&shifted) {
                    Err(e) => checks.push(Check::fail(preserved, e)),
                    Ok(t) => {
                        if let Some(expected) = &input_table {
                            checks.push(Check::compare(preserved, expected, &t));
                        }
                        let si = MonomialIdeal::stanley_reisner(&shifted);
                        match betti_koszul(&si, f, None) {
                            Err(e) => checks.push(Check::fail(agrees, e.to_string())),
                            Ok(k) => {
                                checks.push(Check::compare(agrees, &t, &k));
                                routes.push(RouteTables {
                                    label,
                                    closed_form: Some(t.clone()),
                                    homology: alloc::vec![(f.descriptor(), Some(k))],
                                });
                            }
                        }
                        shifted_tables.push((kind.to_string(), t));
                    }
                },
            }
        }
    }

    // combinatorial route: canonical order plus five random orders
    let mut orders: Vec<(String, ShiftOrder)> = alloc::vec![
        ("canonical".to_string(), ShiftOrder::Canonical),
    ];
    for t in 0..5 {
        orders.push((
            format!("random {}", t + 1),
            ShiftOrder::Random(derived_seed(seed, t)),
        ));
    }
    for (order_name, order) in &orders {
        let preserved = format!("combinatorial shift ({}): table preserved", order_name);
        if !stable {
            checks.push(Check::skip(preserved, "input is not stable".to_string()));
            continue;
        }
        match combinatorial_shift(c, order) {
            Err(e) => checks.push(Check::fail(preserved, e.to_string())),
            Ok((shifted, trace)) => {
                match table_of(&shifted) {
                    Err(e) => checks.push(Check::fail(preserved, e)),
                    Ok(t) => {
                        if let Some(expected) = &input_table {
                            checks.push(Check::compare(preserved.clone(), expected, &t));
                        }
                        if order_name == "canonical" {
                            let mut homology = Vec::new();
                            let si = MonomialIdeal::stanley_reisner(&shifted);
                            for f in fields {
                                let agrees = format!(
                                    "combinatorial shift: homology route agrees over {}",
                                    f.descriptor()
                                );
                                match betti_koszul(&si, f, None) {
                                    Err(e) => checks.push(Check::fail(agrees, e.to_string())),
                                    Ok(k) => {
                                        checks.push(Check::compare(agrees, &t, &k));
                                        homology.push((f.descriptor(), Some(k)));
                                    }
                                }
                            }
                            routes.push(RouteTables {
                                label: "combinatorial (canonical)".to_string(),
                                closed_form: Some(t.clone()),
                                homology,
                            });
                        }
                        shifted_tables.push(("combinatorial".to_string(), t));
                    }
                }
                // walk the trace and re-check every effective step
                let step_stability = format!("steps preserve stability ({})", order_name);
                let step_generators = format!("steps match starred generators ({})", order_name);
                let step_tables = format!("steps preserve the table ({})", order_name);
                let mut stability_ok = true;
                let mut generators_ok = true;
                let mut tables_ok = true;
                let mut witness = String::new();
                let mut current = c.clone();
                for &step in trace.steps() {
                    let before = table_of(&current);
                    let stars: Result<Vec<_>, _> = (0..current.min_nonfaces().len())
                        .map(|i| sigma_star(i, &current, step))
                        .collect();
                    match shift_kl(&current, step) {
                        Err(e) => {
                            stability_ok = false;
                            witness = e.to_string();
                            break;
                        }
                        Ok(next) => {
                            if !next.is_stable(StabilityCriterion::Ideal) {
                                stability_ok = false;
                                witness = format!("{} after {}", next.canonical_id(), step);
                            }
                            match stars {
                                Err(e) => {
                                    generators_ok = false;
                                    witness = e.to_string();
                                }
                                Ok(mut stars) => {
                                    stars.sort();
                                    stars.dedup();
                                    if stars.as_slice() != next.min_nonfaces() {
                                        generators_ok = false;
                                        witness = format!("generator images differ at {}", step);
                                    }
                                }
                            }
                            if before.ok().as_ref() != table_of(&next).ok().as_ref() {
                                tables_ok = false;
                                witness = format!("table changed at {}", step);
                            }
                            current = next;
                        }
                    }
                }
                for (name, ok) in [
                    (step_stability, stability_ok),
                    (step_generators, generators_ok),
                    (step_tables, tables_ok),
                ] {
                    checks.push(if ok {
                        Check::pass(name)
                    } else {
                        Check::fail(name, witness.clone())
                    });
                }
            }
        }
    }

    // the headline comparison: every shifted table equals the input table
    let headline = "all shifted tables match the input".to_string();
    match &input_table {
        None => checks.push(Check::skip(headline, "input is not stable".to_string())),
        Some(expected) => {
            let bad: Vec<&(String, BettiTable)> = shifted_tables
                .iter()
                .filter(|(_, t)| t != expected)
                .collect();
            if !bad.is_empty() {
                checks.push(Check::fail(
                    headline,
                    format!("{} route gives {}", bad[0].0, bad[0].1),
                ));
            } else if shifted_tables.is_empty() {
                checks.push(Check::skip(headline, "no shifted route computed".to_string()));
            } else {
                checks.push(Check::pass(headline));
            }
        }
    }

    VerificationReport {
        id: c.canonical_id(),
        fields: fields.iter().map(FieldSpec::descriptor).collect(),
        seed,
        stable,
        routes,
        checks,
    }
}

/// how a sweep picks its corpus
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepMode {
    /// every stable complex on n vertices (n <= 6)
    Exhaustive,
    /// seeded random stable complexes
    Random { count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    n: usize,
    statuses: BTreeMap<String, bool>,
    total: usize,
    passes: usize,
    failures: Vec<VerificationReport>,
}

impl SweepSummary {
    pub fn n(&self) -> usize {
        self.n
    }

    /// pass/fail per canonical complex identifier
    pub fn statuses(&self) -> &BTreeMap<String, bool> {
        &self.statuses
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn passes(&self) -> usize {
        self.passes
    }

    pub fn failures(&self) -> &[VerificationReport] {
        &self.failures
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// verify a whole corpus; per-complex seeds are derived from the sweep seed,
/// so the summary is deterministic
pub fn sweep_verify(
    n: usize,
    mode: &SweepMode,
    fields: &[FieldSpec],
    seed: u64,
) -> Result<SweepSummary, ComplexError> {
    let corpus: Vec<Complex> = match mode {
        SweepMode::Exhaustive => enumerate_stable_complexes(n)?,
        SweepMode::Random { count } => (0..*count)
            .map(|i| random_stable_complex(n, seed.wrapping_add(i as u64)))
            .collect::<Result<Vec<_>, _>>()?,
    };
    let mut statuses = BTreeMap::new();
    let mut passes = 0;
    let mut failures = Vec::new();
    let total = corpus.len();
    for (i, c) in corpus.into_iter().enumerate() {
        let report = verify_complex(&c, fields, derived_seed(seed, i as u64));
        let ok = report.passed();
        statuses.insert(report.id().to_string(), ok);
        if ok {
            passes += 1;
        } else {
            failures.push(report);
        }
    }
    Ok(SweepSummary { n, statuses, total, passes, failures })
}
