//! Subcommand runners and the built-in scenario library.
//!
//! Each runner turns resolved inputs into ordered [`OutputRow`]s plus
//! verdict records, assumptions and per-task timings.  Wide task grids
//! (ideal × exponent) run on the rayon pool; results are reordered by
//! configuration position afterwards, so parallelism never changes output.

use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::groebner::Ideal;
use crate::multiplicity::{
    cm_frobenius_test, colon_capture_witnesses, compare_hk_hs, ehk_limits, equi_condition_b,
    hk_function, hk_function_at, is_associated_maximal, monotone_sequence_check,
    multiplicity_estimate, tc_membership_bounded, CmReport, EquiOptions, EstimatorKind, HkRecord,
    LimitsOptions, Localization, LocalizedRing,
};
use crate::poly::parse::parse_polynomial;
use crate::poly::{PolyRing, RingPresentation};

use super::config::{default_qs, effective_qs, Scenario};
use super::emit::{describe_estimate, OutputRow};
use super::manifest::{TaskTiming, VerdictRecord};

/// Flags that narrow a run without changing what any row means.
#[derive(Clone, Debug, Default)]
pub struct RunControls {
    /// Cap on Frobenius exponents; filters every grid.
    pub qmax: Option<u64>,
    /// Restrict to one named case.
    pub case: Option<String>,
}

/// Everything a subcommand produces, in final order.
#[derive(Debug, Default)]
pub struct RunOutcome {
    pub rows: Vec<OutputRow>,
    pub verdicts: Vec<VerdictRecord>,
    /// Mathematical assumptions the verdicts rest on.
    pub assumptions: Vec<String>,
    /// Presentation notes for the table footer (not assumptions).
    pub notes: Vec<String>,
    pub timings: Vec<TaskTiming>,
}

impl RunOutcome {
    /// Footer lines for the table: notes first, then deduplicated
    /// assumptions.
    pub fn footers(&self) -> Vec<String> {
        let mut out = self.notes.clone();
        let mut seen = Vec::new();
        for assumption in &self.assumptions {
            if !seen.contains(assumption) {
                seen.push(assumption.clone());
                out.push(format!("assumption: {assumption}"));
            }
        }
        out
    }
}

fn filter_cases<'a, T>(
    all: Vec<(&'a str, T)>,
    controls: &RunControls,
    noun: &str,
) -> Result<Vec<(&'a str, T)>> {
    match &controls.case {
        None => Ok(all),
        Some(wanted) => {
            let picked: Vec<_> = all.into_iter().filter(|(name, _)| name == wanted).collect();
            if picked.is_empty() {
                Err(Error::Config(format!("--case {wanted:?} matches no {noun}")))
            } else {
                Ok(picked)
            }
        }
    }
}

fn selected_ideals<'a>(
    scenario: &'a Scenario,
    controls: &RunControls,
) -> Result<Vec<(&'a str, &'a Ideal)>> {
    let all: Vec<_> = scenario
        .ideals
        .iter()
        .map(|(name, ideal)| (name.as_str(), ideal))
        .collect();
    if all.is_empty() {
        return Err(Error::Config(
            "the configuration defines no [[ideal]] entries".into(),
        ));
    }
    filter_cases(all, controls, "ideal")
}

fn scenario_qs(
    explicit: Option<&[u64]>,
    scenario: &Scenario,
    controls: &RunControls,
) -> Result<Vec<u64>> {
    let qs = effective_qs(
        explicit.or(scenario.spec.run.qs.as_deref()),
        scenario.characteristic(),
        controls.qmax,
    );
    if qs.is_empty() {
        return Err(Error::Config(
            "the exponent grid is empty (check the q list against --qmax)".into(),
        ));
    }
    Ok(qs)
}

fn last_q(qs: &[u64]) -> u64 {
    qs.last().copied().unwrap_or(1)
}

/// Largest even entry of the power list (for the parameter-multiplicity
/// sampler); defaults to 8.
fn lech_bound(ns: Option<&[u64]>) -> Result<u64> {
    match ns {
        None => Ok(8),
        Some(ns) => ns
            .iter()
            .copied()
            .filter(|n| n % 2 == 0 && *n >= 2)
            .max()
            .ok_or_else(|| {
                Error::Config("the n list needs an even entry of at least 2".into())
            }),
    }
}

/// Exact colength of every selected ideal (the `q = 1` point).
pub fn run_colength(scenario: &Scenario, controls: &RunControls) -> Result<RunOutcome> {
    let targets = selected_ideals(scenario, controls)?;
    let mut outcome = RunOutcome::default();
    for (name, ideal) in targets {
        let start = Instant::now();
        let colength = ideal.colength()?;
        outcome
            .timings
            .push(TaskTiming::since(format!("colength:{name}"), start));
        let value = BigRational::from_integer(BigInt::from(colength));
        let mut row = OutputRow::from_value(name, 1, &value);
        row.colength = Some(colength);
        outcome.rows.push(row);
    }
    Ok(outcome)
}

fn function_grid(
    targets: &[(&str, &Ideal)],
    qs: &[u64],
) -> Result<Vec<(usize, u64, HkRecord, TaskTiming)>> {
    let tasks: Vec<(usize, &str, &Ideal, u64)> = targets
        .iter()
        .enumerate()
        .flat_map(|(index, (name, ideal))| qs.iter().map(move |&q| (index, *name, *ideal, q)))
        .collect();
    let mut results = tasks
        .par_iter()
        .map(|&(index, name, ideal, q)| {
            let start = Instant::now();
            let record = hk_function(ideal, &[q])?
                .pop()
                .expect("one exponent yields one record");
            let timing = TaskTiming::since(format!("function:{name}:q={q}"), start);
            Ok((index, q, record, timing))
        })
        .collect::<Result<Vec<_>>>()?;
    results.sort_by_key(|(index, q, _, _)| (*index, *q));
    Ok(results)
}

/// Samples the Hilbert-Kunz function of every selected ideal on the grid.
pub fn run_function(scenario: &Scenario, controls: &RunControls) -> Result<RunOutcome> {
    let targets = selected_ideals(scenario, controls)?;
    let qs = scenario_qs(None, scenario, controls)?;
    let mut outcome = RunOutcome::default();
    for (index, _q, record, timing) in function_grid(&targets, &qs)? {
        outcome
            .rows
            .push(OutputRow::from_record(targets[index].0, &record));
        outcome.timings.push(timing);
    }
    Ok(outcome)
}

/// Function samples plus a two-point limit estimate per ideal.
pub fn run_estimate(scenario: &Scenario, controls: &RunControls) -> Result<RunOutcome> {
    let targets = selected_ideals(scenario, controls)?;
    let qs = scenario_qs(None, scenario, controls)?;
    let grid = function_grid(&targets, &qs)?;
    let mut outcome = RunOutcome::default();
    for (index, (name, _)) in targets.iter().enumerate() {
        let records: Vec<HkRecord> = grid
            .iter()
            .filter(|(i, _, _, _)| *i == index)
            .map(|(_, _, record, _)| record.clone())
            .collect();
        let estimate = multiplicity_estimate(&records, EstimatorKind::TwoPoint)?;
        for record in &records {
            outcome.rows.push(OutputRow::from_record(name, record));
        }
        outcome
            .rows
            .push(OutputRow::from_estimate(name, last_q(&qs), &estimate));
        outcome.verdicts.push(VerdictRecord {
            case: name.to_string(),
            verdict: format!("multiplicity estimate {}", describe_estimate(&estimate)),
            assumptions: Vec::new(),
        });
    }
    outcome.timings = grid.into_iter().map(|(_, _, _, timing)| timing).collect();
    Ok(outcome)
}

/// Frobenius multiplicity against parameter multiplicity for each system.
pub fn run_hs(scenario: &Scenario, controls: &RunControls) -> Result<RunOutcome> {
    let all: Vec<_> = scenario
        .parameter_systems
        .iter()
        .map(|(name, params)| (name.as_str(), params))
        .collect();
    if all.is_empty() {
        return Err(Error::Config(
            "the configuration defines no [[parameter_system]] entries".into(),
        ));
    }
    let systems = filter_cases(all, controls, "parameter system")?;
    let qs = scenario_qs(None, scenario, controls)?;
    let lech_n_max = lech_bound(scenario.spec.run.ns.as_deref())?;
    let mut outcome = RunOutcome::default();
    for (name, params) in systems {
        let start = Instant::now();
        let comparison = compare_hk_hs(&scenario.presentation, params, &qs, lech_n_max)?;
        outcome
            .timings
            .push(TaskTiming::since(format!("hs:{name}"), start));
        outcome.rows.push(OutputRow::from_estimate(
            &format!("{name}:frobenius"),
            last_q(&qs),
            &comparison.frobenius,
        ));
        let mut parameter_row = OutputRow::from_estimate(
            &format!("{name}:parameter"),
            1,
            &comparison.parameter.estimate,
        );
        parameter_row.colength = comparison.parameter.colength;
        outcome.rows.push(parameter_row);
        let verdict = if comparison.consistent {
            "consistent"
        } else {
            "inconsistent"
        };
        outcome
            .rows
            .push(OutputRow::from_verdict(name, last_q(&qs), verdict));
        let mut assumptions = Vec::new();
        if !comparison.parameter.regular_sequence {
            assumptions.push(format!(
                "parameter multiplicity sampled at powers {} and {} (not a regular sequence)",
                lech_n_max / 2,
                lech_n_max
            ));
        }
        outcome.assumptions.extend(assumptions.iter().cloned());
        outcome.verdicts.push(VerdictRecord {
            case: name.to_string(),
            verdict: format!(
                "{verdict}: frobenius {} vs parameter {}",
                describe_estimate(&comparison.frobenius),
                describe_estimate(&comparison.parameter.estimate)
            ),
            assumptions,
        });
    }
    Ok(outcome)
}

fn equi_options_from(
    scenario: &Scenario,
    controls: &RunControls,
    qs_lhs: Option<&[u64]>,
    qs_quotient: Option<&[u64]>,
    qs_local: Option<&[u64]>,
    lech_n_max: Option<u64>,
) -> Result<EquiOptions> {
    Ok(EquiOptions {
        qs_lhs: scenario_qs(qs_lhs, scenario, controls)?,
        qs_quotient: scenario_qs(qs_quotient, scenario, controls)?,
        qs_local: scenario_qs(qs_local, scenario, controls)?,
        lech_n_max: lech_n_max.unwrap_or_else(|| EquiOptions::default().lech_n_max),
        estimator: EstimatorKind::TwoPoint,
    })
}

/// The two sides of the equimultiplicity criterion for the configured pair.
pub fn run_equi(scenario: &Scenario, controls: &RunControls) -> Result<RunOutcome> {
    let spec = scenario
        .spec
        .equi
        .as_ref()
        .ok_or_else(|| Error::Config("the equi subcommand needs an [equi] section".into()))?;
    let ideal = scenario.ideal(&spec.ideal)?;
    let params = scenario.parameters(&spec.parameters)?;
    let minh = scenario.minh_required()?;
    let options = equi_options_from(
        scenario,
        controls,
        spec.qs_lhs.as_deref(),
        spec.qs_quotient.as_deref(),
        spec.qs_local.as_deref(),
        spec.lech_n_max,
    )?;

    let start = Instant::now();
    let report = equi_condition_b(ideal, params, minh, &options)?;
    let mut outcome = RunOutcome::default();
    outcome
        .timings
        .push(TaskTiming::since(format!("equi:{}", spec.ideal), start));

    let tag = spec.ideal.as_str();
    let q_lhs = last_q(&options.qs_lhs);
    let q_local = last_q(&options.qs_local);
    outcome
        .rows
        .push(OutputRow::from_estimate(&format!("{tag}:lhs"), q_lhs, &report.lhs));
    outcome
        .rows
        .push(OutputRow::from_estimate(&format!("{tag}:rhs"), q_local, &report.rhs));
    for (index, contribution) in report.contributions.iter().enumerate() {
        outcome.rows.push(OutputRow::from_estimate(
            &format!("{tag}:component{index}"),
            q_local,
            &contribution.product,
        ));
    }
    outcome.rows.push(OutputRow::from_verdict(
        tag,
        q_lhs,
        &report.verdict.to_string(),
    ));
    outcome.verdicts.push(VerdictRecord {
        case: tag.to_string(),
        verdict: format!(
            "{} (lhs {}, rhs {}, gap {}, combined uncertainty {})",
            report.verdict,
            describe_estimate(&report.lhs),
            describe_estimate(&report.rhs),
            report.gap,
            report.combined_uncertainty
        ),
        assumptions: report.assumptions.clone(),
    });
    outcome.assumptions = report.assumptions;
    Ok(outcome)
}

/// Colon-capturing witnesses for the configured power.
pub fn run_capture(scenario: &Scenario, controls: &RunControls) -> Result<RunOutcome> {
    let spec = scenario.spec.capture.as_ref().ok_or_else(|| {
        Error::Config("the capture subcommand needs a [capture] section".into())
    })?;
    let ideal = scenario.ideal(&spec.ideal)?;
    let sop = scenario.parameters(&spec.parameters)?;
    let test_element = scenario.test_element_required()?;
    let q_max = spec
        .q_max
        .unwrap_or(16)
        .min(controls.qmax.unwrap_or(u64::MAX));

    let start = Instant::now();
    let report = colon_capture_witnesses(ideal, sop, spec.q, test_element, q_max)?;
    let mut outcome = RunOutcome::default();
    outcome
        .timings
        .push(TaskTiming::since(format!("capture:q={}", report.q), start));
    for stage in &report.stages {
        for (witness, tc) in &stage.witnesses {
            outcome.rows.push(OutputRow::from_verdict(
                &format!("capture:stage{}", stage.stage),
                report.q,
                &format!("{witness}: {}", tc.verdict),
            ));
        }
    }
    outcome.rows.push(OutputRow::from_verdict(
        "capture",
        report.q,
        &report.verdict.to_string(),
    ));
    outcome.verdicts.push(VerdictRecord {
        case: String::from("capture"),
        verdict: report.verdict.to_string(),
        assumptions: vec![report.assumption.clone()],
    });
    outcome.assumptions.push(report.assumption);
    Ok(outcome)
}

fn cm_verdict_text(report: &CmReport) -> String {
    if report.all_regular {
        String::from("regular sequence")
    } else {
        let failing = report
            .per_parameter
            .iter()
            .position(|ok| !ok)
            .expect("a non-regular report has a failing parameter");
        format!("fails at parameter {failing}")
    }
}

/// Regularity of the parameters modulo each sampled Frobenius power.
pub fn run_cmtest(scenario: &Scenario, controls: &RunControls) -> Result<RunOutcome> {
    let spec = scenario.spec.cmtest.as_ref().ok_or_else(|| {
        Error::Config("the cmtest subcommand needs a [cmtest] section".into())
    })?;
    let ideal = scenario.ideal(&spec.ideal)?;
    let params = scenario.parameters(&spec.parameters)?;
    let qs = scenario_qs(spec.qs.as_deref(), scenario, controls)?;

    let mut reports = qs
        .par_iter()
        .map(|&q| {
            let start = Instant::now();
            let report = cm_frobenius_test(ideal, params, q)?;
            Ok((q, report, TaskTiming::since(format!("cmtest:q={q}"), start)))
        })
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|(q, _, _)| *q);

    let mut outcome = RunOutcome::default();
    let mut regular_qs = Vec::new();
    let mut failing = Vec::new();
    for (q, report, timing) in reports {
        let text = cm_verdict_text(&report);
        outcome.rows.push(OutputRow::from_verdict(
            &format!("cmtest:{}", spec.ideal),
            q,
            &text,
        ));
        if report.all_regular {
            regular_qs.push(q.to_string());
        } else {
            failing.push(format!("q={q} ({text})"));
        }
        outcome.timings.push(timing);
    }
    let verdict = match (regular_qs.is_empty(), failing.is_empty()) {
        (false, true) => format!("regular at q={}", regular_qs.join(",")),
        (true, false) => format!("fails at {}", failing.join("; ")),
        _ => format!(
            "regular at q={}; fails at {}",
            regular_qs.join(","),
            failing.join("; ")
        ),
    };
    outcome.verdicts.push(VerdictRecord {
        case: format!("cmtest:{}", spec.ideal),
        verdict,
        assumptions: Vec::new(),
    });
    Ok(outcome)
}

/// Associated-maximal scan over the configured candidates and exponents.
pub fn run_assprime(scenario: &Scenario, controls: &RunControls) -> Result<RunOutcome> {
    let spec = scenario.spec.assprime.as_ref().ok_or_else(|| {
        Error::Config("the assprime subcommand needs an [assprime] section".into())
    })?;
    let ideal = scenario.ideal(&spec.ideal)?;
    let maximals = spec
        .maximals
        .iter()
        .map(|name| Ok((name.as_str(), scenario.ideal(name)?)))
        .collect::<Result<Vec<_>>>()?;
    let qs = scenario_qs(spec.qs.as_deref(), scenario, controls)?;

    let tasks: Vec<(usize, &str, &Ideal, u64)> = maximals
        .iter()
        .enumerate()
        .flat_map(|(index, (name, maximal))| {
            qs.iter().map(move |&q| (index, *name, *maximal, q))
        })
        .collect();
    let mut results = tasks
        .par_iter()
        .map(|&(index, name, maximal, q)| {
            let start = Instant::now();
            let frobenius = ideal.frobenius_power(q)?;
            let associated = is_associated_maximal(&frobenius, maximal)?;
            let timing = TaskTiming::since(format!("assprime:{name}:q={q}"), start);
            Ok((index, q, associated, timing))
        })
        .collect::<Result<Vec<_>>>()?;
    results.sort_by_key(|(index, q, _, _)| (*index, *q));

    let mut outcome = RunOutcome::default();
    for (index, (name, _)) in maximals.iter().enumerate() {
        let mut associated_qs = Vec::new();
        let mut absent_qs = Vec::new();
        for (_, q, associated, _) in results.iter().filter(|(i, _, _, _)| *i == index) {
            outcome.rows.push(OutputRow::from_verdict(
                &format!("assprime:{name}"),
                *q,
                if *associated { "associated" } else { "not associated" },
            ));
            if *associated {
                associated_qs.push(q.to_string());
            } else {
                absent_qs.push(q.to_string());
            }
        }
        let verdict = match (associated_qs.is_empty(), absent_qs.is_empty()) {
            (false, true) => format!("associated at q={}", associated_qs.join(",")),
            (true, false) => format!("not associated at q={}", absent_qs.join(",")),
            _ => format!(
                "associated at q={}; not associated at q={}",
                associated_qs.join(","),
                absent_qs.join(",")
            ),
        };
        outcome.verdicts.push(VerdictRecord {
            case: format!("assprime:{name}"),
            verdict,
            assumptions: Vec::new(),
        });
    }
    outcome.timings = results
        .into_iter()
        .map(|(_, _, _, timing)| timing)
        .collect();
    Ok(outcome)
}

/// The scaled-length sequence of a parameter against the configured ideal.
pub fn run_monotone(scenario: &Scenario, _controls: &RunControls) -> Result<RunOutcome> {
    let spec = scenario.spec.monotone.as_ref().ok_or_else(|| {
        Error::Config("the monotone subcommand needs a [monotone] section".into())
    })?;
    let ideal = scenario.ideal(&spec.ideal)?;
    let parameter = parse_polynomial(scenario.presentation.ring(), &spec.parameter)?;
    let n_max = match spec.n_max {
        Some(n) => n,
        None => scenario
            .spec
            .run
            .ns
            .as_deref()
            .and_then(|ns| ns.iter().copied().max())
            .unwrap_or(8),
    };

    let start = Instant::now();
    let report = monotone_sequence_check(ideal, &parameter, n_max)?;
    let mut outcome = RunOutcome::default();
    outcome
        .timings
        .push(TaskTiming::since(format!("monotone:{}", spec.ideal), start));
    let case = format!("monotone:{}", spec.ideal);
    for (offset, value) in report.values.iter().enumerate() {
        outcome
            .rows
            .push(OutputRow::from_value(&case, offset as u64 + 1, value));
    }
    let verdict = if report.non_increasing {
        "non-increasing"
    } else {
        "increases"
    };
    outcome
        .rows
        .push(OutputRow::from_verdict(&case, n_max, verdict));
    outcome.verdicts.push(VerdictRecord {
        case,
        verdict: verdict.to_string(),
        assumptions: Vec::new(),
    });
    outcome
        .notes
        .push(String::from("sequence rows use the q column for the power n"));
    Ok(outcome)
}

/// Scaled multiplicities of bracketed powers against their limit.
pub fn run_limits(scenario: &Scenario, controls: &RunControls) -> Result<RunOutcome> {
    let spec = scenario.spec.limits.as_ref().ok_or_else(|| {
        Error::Config("the limits subcommand needs a [limits] section".into())
    })?;
    let ideal = scenario.ideal(&spec.ideal)?;
    let bracket = scenario.ideal(&spec.bracket)?;
    let minh = scenario.minh_required()?;
    let exponents = match (&spec.exponents, controls.qmax) {
        (Some(list), Some(cap)) => list.iter().copied().filter(|e| *e <= cap).collect(),
        (Some(list), None) => list.clone(),
        (None, cap) => {
            let mut list = vec![1];
            list.extend(default_qs(scenario.characteristic(), cap.unwrap_or(4)));
            list
        }
    };
    if exponents.is_empty() {
        return Err(Error::Config(
            "the exponent list is empty (check it against --qmax)".into(),
        ));
    }
    let options = LimitsOptions {
        exponents,
        equi: equi_options_from(scenario, controls, None, None, None, None)?,
    };

    let start = Instant::now();
    let report = ehk_limits(ideal, bracket, minh, &options)?;
    let mut outcome = RunOutcome::default();
    outcome
        .timings
        .push(TaskTiming::since(format!("limits:{}", spec.ideal), start));
    let case = format!("limits:{}", spec.ideal);
    for row in &report.rows {
        outcome
            .rows
            .push(OutputRow::from_estimate(&case, row.exponent, &row.scaled));
    }
    outcome.rows.push(OutputRow::from_estimate(
        &format!("{case}:limit"),
        last_q(&options.exponents),
        &report.rhs,
    ));
    let verdict = if report.non_increasing {
        "non-increasing toward the limit"
    } else {
        "increases"
    };
    outcome.rows.push(OutputRow::from_verdict(
        &case,
        last_q(&options.exponents),
        verdict,
    ));
    outcome.verdicts.push(VerdictRecord {
        case,
        verdict: verdict.to_string(),
        assumptions: report.assumptions.clone(),
    });
    outcome.assumptions = report.assumptions;
    outcome
        .notes
        .push(String::from("bracket rows use the q column for the exponent q'"));
    Ok(outcome)
}

// --- the built-in scenario library ---------------------------------------

/// Names of the built-in cases, in run order.
pub const LIBRARY_CASES: [&str; 7] = [
    "alpha=0",
    "alpha=1",
    "alpha=root",
    "alpha=t",
    "localized",
    "assprime",
    "tc",
];

const SURFACE_EQUATION: &str = "z^4 + x*y*z^2 + x^3*z + y^3*z";
const CYLINDER_EQUATION: &str = "z^4 + x*y*z^2 + x^3*z + y^3*z + t*x^2*y^2";

fn surface_presentation(
    field: &Arc<FieldDescriptor>,
    quartic_term: Option<&str>,
) -> Result<Arc<RingPresentation>> {
    let ring = PolyRing::new(field, &["x", "y", "z"])?;
    let equation = match quartic_term {
        Some(term) => format!("{SURFACE_EQUATION} + {term}"),
        None => SURFACE_EQUATION.to_string(),
    };
    let relation = parse_polynomial(&ring, &equation)?;
    RingPresentation::new(&ring, vec![relation])
}

fn cylinder_presentation(field: &Arc<FieldDescriptor>) -> Result<Arc<RingPresentation>> {
    let ring = PolyRing::new(field, &["x", "y", "z", "t"])?;
    let relation = parse_polynomial(&ring, CYLINDER_EQUATION)?;
    RingPresentation::new(&ring, vec![relation])
}

fn field_f4() -> Result<Arc<FieldDescriptor>> {
    FieldDescriptor::extension(2, "a", &[1, 1, 1])
}

fn field_f16() -> Result<Arc<FieldDescriptor>> {
    FieldDescriptor::extension(2, "m", &[1, 1, 0, 0, 1])
}

fn library_counts(
    outcome: &mut RunOutcome,
    case: &str,
    ideal: &Ideal,
    qs: &[u64],
) -> Result<()> {
    let mut results = qs
        .par_iter()
        .map(|&q| {
            let start = Instant::now();
            let record = hk_function(ideal, &[q])?
                .pop()
                .expect("one exponent yields one record");
            Ok((q, record, TaskTiming::since(format!("{case}:q={q}"), start)))
        })
        .collect::<Result<Vec<_>>>()?;
    results.sort_by_key(|(q, _, _)| *q);
    let records: Vec<HkRecord> = results.iter().map(|(_, r, _)| r.clone()).collect();
    let estimate = multiplicity_estimate(&records, EstimatorKind::TwoPoint)?;
    for (_, record, timing) in results {
        outcome.rows.push(OutputRow::from_record(case, &record));
        outcome.timings.push(timing);
    }
    outcome
        .rows
        .push(OutputRow::from_estimate(case, last_q(qs), &estimate));
    outcome.verdicts.push(VerdictRecord {
        case: case.to_string(),
        verdict: format!("multiplicity estimate {}", describe_estimate(&estimate)),
        assumptions: Vec::new(),
    });
    Ok(())
}

fn library_surface_case(
    outcome: &mut RunOutcome,
    case: &str,
    field: &Arc<FieldDescriptor>,
    quartic_term: Option<&str>,
    qs: &[u64],
) -> Result<()> {
    let pres = surface_presentation(field, quartic_term)?;
    let origin = Ideal::parse(&pres, &["x", "y", "z"])?;
    library_counts(outcome, case, &origin, qs)
}

fn library_localized_case(outcome: &mut RunOutcome, qs: &[u64]) -> Result<()> {
    let pres = cylinder_presentation(&FieldDescriptor::prime(2)?)?;
    let curve_prime = Ideal::parse(&pres, &["x", "y", "z"])?;
    let localized = LocalizedRing::new(
        &pres,
        &Localization::AtCurveGenericPoint {
            variable: String::from("t"),
        },
    )?;
    let start = Instant::now();
    let records = hk_function_at(&localized, &curve_prime, qs)?;
    outcome
        .timings
        .push(TaskTiming::since("localized", start));
    let estimate = multiplicity_estimate(&records, EstimatorKind::TwoPoint)?;
    for record in &records {
        outcome.rows.push(OutputRow::from_record("localized", record));
    }
    outcome
        .rows
        .push(OutputRow::from_estimate("localized", last_q(qs), &estimate));
    outcome.verdicts.push(VerdictRecord {
        case: String::from("localized"),
        verdict: format!("multiplicity estimate {}", describe_estimate(&estimate)),
        assumptions: Vec::new(),
    });
    outcome.notes.push(String::from(
        "localized rows are lengths over the local ring at the generic point of the t-axis",
    ));
    Ok(())
}

/// The candidate closed points scanned by the library `assprime` case:
/// `(label, extra generator)` pairs cutting out points on the parameter
/// axis.
const LIBRARY_POINTS: [(&str, &str); 5] = [
    ("0", "t"),
    ("1", "t+1"),
    ("m", "t+m"),
    ("m^3", "t+m^3"),
    ("m^5", "t+m^5"),
];

fn library_assprime_case(outcome: &mut RunOutcome, qmax: Option<u64>) -> Result<()> {
    let pres = cylinder_presentation(&field_f16()?)?;
    let curve_prime = Ideal::parse(&pres, &["x", "y", "z"])?;
    let qs = default_qs(2, qmax.unwrap_or(8));
    let maximals = LIBRARY_POINTS
        .iter()
        .map(|(label, extra)| {
            Ok((*label, Ideal::parse(&pres, &["x", "y", "z", extra])?))
        })
        .collect::<Result<Vec<_>>>()?;

    let tasks: Vec<(usize, &str, &Ideal, u64)> = maximals
        .iter()
        .enumerate()
        .flat_map(|(index, (label, maximal))| {
            qs.iter().map(move |&q| (index, *label, maximal, q))
        })
        .collect();
    let mut results = tasks
        .par_iter()
        .map(|&(index, label, maximal, q)| {
            let start = Instant::now();
            let frobenius = curve_prime.frobenius_power(q)?;
            let associated = is_associated_maximal(&frobenius, maximal)?;
            let timing = TaskTiming::since(format!("assprime:alpha={label}:q={q}"), start);
            Ok((index, q, associated, timing))
        })
        .collect::<Result<Vec<_>>>()?;
    results.sort_by_key(|(index, q, _, _)| (*index, *q));

    for (index, q, associated, timing) in results {
        let label = maximals[index].0;
        outcome.rows.push(OutputRow::from_verdict(
            &format!("assprime:alpha={label}"),
            q,
            if associated { "associated" } else { "not associated" },
        ));
        outcome.timings.push(timing);
    }
    outcome.verdicts.push(VerdictRecord {
        case: String::from("assprime"),
        verdict: String::from("see per-point rows"),
        assumptions: Vec::new(),
    });
    Ok(())
}

fn library_tc_case(outcome: &mut RunOutcome, qmax: Option<u64>) -> Result<()> {
    let bound = qmax.unwrap_or(16);

    let pres = cylinder_presentation(&field_f16()?)?;
    let curve_prime = Ideal::parse(&pres, &["x", "y", "z"])?;
    let frobenius = curve_prime.frobenius_power(4)?;
    let c = parse_polynomial(pres.ring(), "x^3+y^3")?;
    let u = parse_polynomial(pres.ring(), "y^3*z^3")?;
    let start = Instant::now();
    let report = tc_membership_bounded(&c, &u, &frobenius, bound)?;
    outcome.timings.push(TaskTiming::since("tc:certify", start));
    outcome
        .rows
        .push(OutputRow::from_verdict("tc:certify", 4, &report.verdict.to_string()));
    outcome.verdicts.push(VerdictRecord {
        case: String::from("tc:certify"),
        verdict: report.verdict.to_string(),
        assumptions: vec![report.assumption.clone()],
    });
    outcome.assumptions.push(report.assumption);

    let pres_t = surface_presentation(
        &FieldDescriptor::rational_function(2, "t")?,
        Some("t*x^2*y^2"),
    )?;
    let origin = Ideal::parse(&pres_t, &["x", "y", "z"])?;
    let frobenius_t = origin.frobenius_power(4)?;
    let c_t = parse_polynomial(pres_t.ring(), "x^3+y^3")?;
    let u_t = parse_polynomial(pres_t.ring(), "y^3*z^3")?;
    let start = Instant::now();
    let report_t = tc_membership_bounded(&c_t, &u_t, &frobenius_t, bound)?;
    outcome.timings.push(TaskTiming::since("tc:generic", start));
    outcome.rows.push(OutputRow::from_verdict(
        "tc:generic",
        4,
        &report_t.verdict.to_string(),
    ));
    outcome.verdicts.push(VerdictRecord {
        case: String::from("tc:generic"),
        verdict: report_t.verdict.to_string(),
        assumptions: vec![report_t.assumption.clone()],
    });
    outcome.assumptions.push(report_t.assumption);
    Ok(())
}

/// Runs the built-in scenario library (all cases, or the one selected by
/// `--case`).
pub fn run_library(controls: &RunControls) -> Result<RunOutcome> {
    let selected: Vec<&str> = match &controls.case {
        Some(wanted) => {
            if LIBRARY_CASES.contains(&wanted.as_str()) {
                vec![wanted.as_str()]
            } else {
                return Err(Error::Config(format!(
                    "--case {wanted:?} is not a library case; available: {}",
                    LIBRARY_CASES.join(", ")
                )));
            }
        }
        None => LIBRARY_CASES.to_vec(),
    };
    let qs = default_qs(2, controls.qmax.unwrap_or(16));
    if qs.is_empty() {
        return Err(Error::Config(
            "the exponent grid is empty (check --qmax)".into(),
        ));
    }
    let mut outcome = RunOutcome::default();
    for case in selected {
        match case {
            "alpha=0" => library_surface_case(
                &mut outcome,
                case,
                &FieldDescriptor::prime(2)?,
                None,
                &qs,
            )?,
            "alpha=1" => {
                library_surface_case(&mut outcome, case, &field_f4()?, Some("x^2*y^2"), &qs)?
            }
            "alpha=root" => {
                library_surface_case(&mut outcome, case, &field_f16()?, Some("m^3*x^2*y^2"), &qs)?
            }
            "alpha=t" => library_surface_case(
                &mut outcome,
                case,
                &FieldDescriptor::rational_function(2, "t")?,
                Some("t*x^2*y^2"),
                &qs,
            )?,
            "localized" => library_localized_case(&mut outcome, &qs)?,
            "assprime" => library_assprime_case(&mut outcome, controls.qmax)?,
            "tc" => library_tc_case(&mut outcome, controls.qmax)?,
            other => unreachable!("unknown library case {other}"),
        }
    }
    Ok(outcome)
}
