//! The `reproduce` suite: every published number recomputed from scratch and
//! compared with its expected value. Check failures are collected, never fatal.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use gorenstein_core::apolarity::{hyperplane_sequence, ApolarAlgebra};
use gorenstein_core::combinatorics::{green_check, macaulay_check, positive_difference, symmetric, unimodal};
use gorenstein_core::hessians::{hessian_poly, slp_rank_test, slp_test, DEFAULT_GUARD};
use gorenstein_core::jordan::{
    conjugate, dominance_cmp, dominance_le, jordan_consistency, jordan_type, pre_jordan_strings,
    string_partition, wlp_test, Partition,
};
use gorenstein_core::perazzo::{
    general_fourfold, lefschetz_element_predicate, minimal_hilbert, normal_form, perazzo_context,
    random_perazzo_threefold_with, MinimalVariant, PerazzoForm,
};
use gorenstein_core::poly::{parse_poly, LinearForm, Polynomial, Side, VariableContext};
use gorenstein_core::sampling::{random_form_in, random_int, random_linear_form, sub_rng, SeededRng};
use gorenstein_core::{int, Scalar};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::survey::{cached_survey, forbidden, SampleRecord};
use crate::{LabError, Result};

pub const CHECK_IDS: [&str; 12] = [
    "normal-form-hf",
    "fourfold-nonunimodal",
    "d5-dichotomy",
    "d6-classification",
    "wlp-hf-criterion",
    "unimodality",
    "hessian-vanishing",
    "jordan-table",
    "dominance-chain",
    "non-lefschetz-strings",
    "rank-bounds",
    "property-suites",
];

/// Seeds and coefficient bound of the socle-degree-10 fourfold example.
pub const FOURFOLD_SEEDS: u64 = 5;
pub const FOURFOLD_BOUND: i64 = 20;

const LAMBDAS: [i64; 3] = [1, 2, -3];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Nothing to compute inside the configured degree range.
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub id: &'static str,
    pub claim: &'static str,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub runtime: Duration,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "claim": self.claim,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status.to_string(),
            "passed": self.passed(),
            "runtime_ms": self.runtime.as_millis() as u64,
        })
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub config: RunConfig,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.config.seed,
            "bound": self.config.bound,
            "trials": self.config.trials,
            "samples": self.config.samples,
            "d_min": self.config.d_min,
            "d_max": self.config.d_max,
            "all_passed": self.all_passed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

struct Outcome {
    expected: String,
    computed: String,
    status: Status,
}

impl Outcome {
    fn new(expected: impl Into<String>, computed: impl Into<String>, passed: bool) -> Self {
        Outcome {
            expected: expected.into(),
            computed: computed.into(),
            status: if passed { Status::Pass } else { Status::Fail },
        }
    }

    fn skip(reason: impl Into<String>) -> Self {
        Outcome {
            expected: String::new(),
            computed: reason.into(),
            status: Status::Skip,
        }
    }
}

type CheckFn = fn(&RunConfig) -> Result<Outcome>;

fn registry(id: &str) -> (&'static str, CheckFn) {
    match id {
        "normal-form-hf" => (
            "the three minimal normal forms have Hilbert function (1,5,6,...,6,5,1)",
            normal_form_hf,
        ),
        "fourfold-nonunimodal" => (
            "a general fourfold of socle degree 10 has the non-unimodal Hilbert function (1,6,15,28,43,42,43,28,15,6,1)",
            fourfold_nonunimodal,
        ),
        "d5-dichotomy" => (
            "threefolds of socle degree 5 have Hilbert function (1,5,6,6,5,1) or (1,5,7,7,5,1)",
            d5_dichotomy,
        ),
        "d6-classification" => (
            "threefolds of socle degree 6 realize only the four admissible Hilbert functions",
            d6_classification,
        ),
        "wlp-hf-criterion" => (
            "a threefold algebra has the WLP iff at most one h_i equals d+2",
            wlp_hf_criterion,
        ),
        "unimodality" => (
            "threefold Hilbert functions are unimodal, as are the positive first differences of WLP threefolds",
            unimodality,
        ),
        "hessian-vanishing" => (
            "the first Hessian of every Perazzo form vanishes identically",
            hessian_vanishing,
        ),
        "jordan-table" => (
            "Jordan types of Lefschetz and non-Lefschetz elements of normal form (i)",
            jordan_table,
        ),
        "dominance-chain" => (
            "the non-Lefschetz Jordan types of normal form (i) form a dominance chain",
            dominance_chain,
        ),
        "non-lefschetz-strings" => (
            "string lengths of non-Lefschetz elements of the three normal forms are bounded",
            non_lefschetz_strings,
        ),
        "rank-bounds" => (
            "h_2 and h_3 are bracketed by the block-matrix ranks, and rank N'_3 <= 4",
            rank_bounds,
        ),
        "property-suites" => (
            "symmetry, Macaulay and Green bounds, exact sequences, Hessian SLP criterion, Jordan consistency",
            property_suites,
        ),
        _ => unreachable!("unknown check id {id}"),
    }
}

/// Runs the checks named in `only` (all of them when empty), in suite order.
pub fn run(cfg: &RunConfig, only: &[String]) -> Result<Report> {
    cfg.validate()?;
    if let Some(bad) = only.iter().find(|id| !CHECK_IDS.contains(&id.as_str())) {
        return Err(LabError::Usage(format!(
            "unknown check `{bad}` (known: {})",
            CHECK_IDS.join(", ")
        )));
    }
    let checks = CHECK_IDS
        .iter()
        .filter(|id| only.is_empty() || only.iter().any(|o| o == *id))
        .map(|id| run_check(id, cfg))
        .collect();
    Ok(Report {
        config: cfg.clone(),
        checks,
    })
}

pub fn run_check(id: &str, cfg: &RunConfig) -> Check {
    let (claim, f) = registry(id);
    let id = CHECK_IDS.iter().find(|k| **k == id).expect("registered id");
    let start = Instant::now();
    let outcome = f(cfg).unwrap_or_else(|e| Outcome::new("no error", format!("error: {e}"), false));
    Check {
        id,
        claim,
        expected: outcome.expected,
        computed: outcome.computed,
        status: outcome.status,
        runtime: start.elapsed(),
    }
}

/// The first few failures and a count of the rest.
fn summarize(failures: &[String]) -> String {
    const SHOWN: usize = 5;
    let mut out = failures[..failures.len().min(SHOWN)].join("; ");
    if failures.len() > SHOWN {
        out.push_str(&format!("; and {} more", failures.len() - SHOWN));
    }
    out
}

fn fmt_hf(h: &[usize]) -> String {
    format!(
        "({})",
        h.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    )
}

fn degrees_or_skip(cfg: &RunConfig, lo: u32, hi: u32) -> std::result::Result<Vec<u32>, Outcome> {
    let ds: Vec<u32> = cfg.degrees(lo, hi).collect();
    if ds.is_empty() {
        Err(Outcome::skip(format!(
            "degrees {lo}..={hi} lie outside {}..={}",
            cfg.d_min, cfg.d_max
        )))
    } else {
        Ok(ds)
    }
}

macro_rules! degrees {
    ($cfg:expr, $lo:expr, $hi:expr) => {
        match degrees_or_skip($cfg, $lo, $hi) {
            Ok(ds) => ds,
            Err(skip) => return Ok(skip),
        }
    };
}

fn variants_with_lambdas() -> Vec<(MinimalVariant, Scalar)> {
    let mut out = vec![(MinimalVariant::I, int(1)), (MinimalVariant::II, int(1))];
    out.extend(LAMBDAS.iter().map(|&l| (MinimalVariant::III, int(l))));
    out
}

fn normal_form_hf(cfg: &RunConfig) -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut count = 0;
    for d in degrees!(cfg, 5, 9) {
        for (variant, lambda) in variants_with_lambdas() {
            count += 1;
            match normal_form(variant, d, &lambda) {
                Ok(pf) if pf.hilbert()? == minimal_hilbert(d) => {}
                Ok(pf) => failures.push(format!("({variant}) d={d} λ={lambda}: {}", pf.hilbert()?)),
                Err(e) => failures.push(format!("({variant}) d={d} λ={lambda}: {e}")),
            }
        }
    }
    Ok(Outcome::new(
        format!("{count} forms with the minimal Hilbert function"),
        if failures.is_empty() {
            format!("{count} forms with the minimal Hilbert function")
        } else {
            summarize(&failures)
        },
        failures.is_empty(),
    ))
}

fn fourfold_nonunimodal(cfg: &RunConfig) -> Result<Outcome> {
    let expected = [1, 6, 15, 28, 43, 42, 43, 28, 15, 6, 1];
    let mut hits = 0;
    let mut seen = Vec::new();
    for i in 0..FOURFOLD_SEEDS {
        let f = general_fourfold(10, cfg.seed.wrapping_add(i), FOURFOLD_BOUND)?;
        let h = ApolarAlgebra::new(&f)?.hilbert().clone();
        hits += usize::from(h.as_slice() == expected);
        seen.push(fmt_hf(h.as_slice()));
    }
    Ok(Outcome::new(
        format!("{} on at least 4 of {FOURFOLD_SEEDS} seeds", fmt_hf(&expected)),
        format!("{hits} of {FOURFOLD_SEEDS} seeds: {}", seen.join(" ")),
        hits >= 4 && !unimodal(&expected),
    ))
}

fn support(records: &[SampleRecord]) -> BTreeSet<Vec<usize>> {
    records.iter().map(|r| r.hilbert.as_slice().to_vec()).collect()
}

fn fmt_support(s: &BTreeSet<Vec<usize>>) -> String {
    s.iter().map(|h| fmt_hf(h)).collect::<Vec<_>>().join(" ")
}

fn d5_dichotomy(cfg: &RunConfig) -> Result<Outcome> {
    degrees!(cfg, 5, 5);
    let records = cached_survey(5, cfg)?;
    let first = &records[..records.len().min(100)];
    let allowed: BTreeSet<Vec<usize>> = [vec![1, 5, 6, 6, 5, 1], vec![1, 5, 7, 7, 5, 1]].into();
    let seen = support(first);
    Ok(Outcome::new(
        format!("support within {}", fmt_support(&allowed)),
        format!("{} samples, support {}", first.len(), fmt_support(&seen)),
        seen.is_subset(&allowed),
    ))
}

fn d6_classification(cfg: &RunConfig) -> Result<Outcome> {
    degrees!(cfg, 6, 6);
    let records = cached_survey(6, cfg)?;
    let allowed: BTreeSet<Vec<usize>> = [
        vec![1, 5, 6, 6, 6, 5, 1],
        vec![1, 5, 6, 7, 6, 5, 1],
        vec![1, 5, 7, 8, 7, 5, 1],
        vec![1, 5, 8, 8, 8, 5, 1],
    ]
    .into();
    let seen = support(&records);
    let excluded = forbidden(6).iter().all(|f| !seen.contains(f));
    Ok(Outcome::new(
        format!("support within {}", fmt_support(&allowed)),
        format!("{} samples, support {}", records.len(), fmt_support(&seen)),
        seen.is_subset(&allowed) && excluded,
    ))
}

fn wlp_hf_criterion(cfg: &RunConfig) -> Result<Outcome> {
    let mut total = 0;
    let mut disagreements = Vec::new();
    let mut with_wlp = 0;
    for d in degrees!(cfg, 5, 8) {
        for r in cached_survey(d, cfg)?.iter() {
            total += 1;
            with_wlp += usize::from(r.wlp.has_wlp);
            if r.wlp.has_wlp != r.wlp_predicate {
                disagreements.push(format!("d={d} #{} {}", r.index, r.hilbert));
            }
        }
    }
    Ok(Outcome::new(
        format!("sampled WLP verdict equals the predicate on all {total} samples"),
        if disagreements.is_empty() {
            format!("{total} agreements ({with_wlp} with WLP)")
        } else {
            format!("disagreements: {}", disagreements.join("; "))
        },
        disagreements.is_empty(),
    ))
}

fn unimodality(cfg: &RunConfig) -> Result<Outcome> {
    let mut total = 0;
    let mut differences = 0;
    let mut failures = Vec::new();
    for d in degrees!(cfg, 5, 9) {
        for r in cached_survey(d, cfg)?.iter() {
            total += 1;
            if !unimodal(r.hilbert.as_slice()) {
                failures.push(format!("d={d} #{} {}", r.index, r.hilbert));
            }
            if r.wlp.has_wlp {
                differences += 1;
                let diff = positive_difference(r.hilbert.as_slice());
                if r.quotient != diff || !unimodal(&diff) {
                    failures.push(format!(
                        "d={d} #{}: quotient {} vs difference {}",
                        r.index,
                        fmt_hf(&r.quotient),
                        fmt_hf(&diff)
                    ));
                }
            }
        }
    }
    Ok(Outcome::new(
        "every Hilbert function and every WLP first difference unimodal",
        if failures.is_empty() {
            format!("{total} Hilbert functions, {differences} first differences, all unimodal")
        } else {
            summarize(&failures)
        },
        failures.is_empty(),
    ))
}

fn hessian_vanishing(cfg: &RunConfig) -> Result<Outcome> {
    let mut total = 0;
    let mut failures = Vec::new();
    for d in cfg.degrees(5, 9) {
        for r in cached_survey(d, cfg)?.iter() {
            total += 1;
            if !r.hessian_vanishes {
                failures.push(format!("d={d} #{}", r.index));
            }
        }
    }
    let ctx = perazzo_context(2, 2)?;
    let f = parse_poly("X*U^2 + Y*U*V + Z*V^2", &ctx, Side::S)?;
    let symbolic_zero = hessian_poly(&f, 1)?.is_zero();
    if !symbolic_zero {
        failures.push("hess(XU^2+YUV+ZV^2) is nonzero".into());
    }
    Ok(Outcome::new(
        "zero at 10 random points for every surveyed form; zero polynomial for XU^2+YUV+ZV^2",
        if failures.is_empty() {
            format!("{total} forms vanish at all points; symbolic determinant is 0")
        } else {
            summarize(&failures)
        },
        failures.is_empty(),
    ))
}

fn threefold_ell(text: &str) -> Result<LinearForm> {
    Ok(LinearForm::parse(text, &perazzo_context(2, 2)?)?)
}

/// Non-Lefschetz rows of normal form (i): representatives and the expected type.
fn table_rows(d: usize) -> Vec<([&'static str; 2], Partition)> {
    vec![
        (["z + v", "2x - y + z + v"], Partition::from_powers(&[(4, d - 2), (2, d), (1, 2)])),
        (["v", "x + 3y - 2v"], Partition::from_powers(&[(3, 2 * d - 4), (2, 2), (1, 2)])),
        (["z", "x - 2y + 3z"], Partition::from_powers(&[(2, 3 * d - 6), (1, 6)])),
        (["y", "4x + y"], Partition::from_powers(&[(2, 2 * d - 2), (1, 2 * d - 2)])),
        (["x", "-3x"], Partition::from_powers(&[(2, d), (1, 4 * d - 6)])),
    ]
}

/// Dominance-maximal Jordan type over `trials` random linear forms.
fn sampled_generic(f: &Polynomial, trials: usize, rng: &mut SeededRng, bound: i64) -> Result<Partition> {
    let mut best: Option<Partition> = None;
    for _ in 0..trials {
        let p = jordan_type(f, &random_linear_form(f.context(), rng, bound))?;
        if best.as_ref().map_or(Ok(true), |b| dominance_le(b, &p))? {
            best = Some(p);
        }
    }
    Ok(best.expect("at least one trial"))
}

fn jordan_table(cfg: &RunConfig) -> Result<Outcome> {
    let mut rows = 0;
    let mut failures = Vec::new();
    for d in degrees!(cfg, 5, 8) {
        let pf = normal_form(MinimalVariant::I, d, &int(1))?;
        let f = pf.form();
        let du = d as usize;
        let mut rng = sub_rng(cfg.seed, 0x6a6f_7264 + u64::from(d));
        let generic = sampled_generic(f, cfg.trials, &mut rng, cfg.bound)?;
        let expect_generic = Partition::from_powers(&[(du + 1, 1), (du - 1, 3), (du - 2, 2)]);
        rows += 1;
        if generic != expect_generic {
            failures.push(format!("d={d} generic: {generic}, expected {expect_generic}"));
        }
        let uv = threefold_ell("u + v")?;
        let nilpotent = jordan_type(f, &uv)?;
        let expect_uv = Partition::from_powers(&[(du, 2), (du - 1, 2), (du - 2, 2)]);
        rows += 1;
        if nilpotent != expect_uv || !wlp_test(f, &uv)? {
            failures.push(format!("d={d} u+v: {nilpotent}, expected {expect_uv}"));
        }
        for (reps, expected) in table_rows(du) {
            for text in reps {
                rows += 1;
                let l = threefold_ell(text)?;
                let p = jordan_type(f, &l)?;
                let strings = string_partition(&pre_jordan_strings(f, &l)?);
                if p != expected || strings != expected {
                    failures.push(format!(
                        "d={d} ℓ={text}: type {p}, strings {strings}, expected {expected}"
                    ));
                }
            }
        }
    }
    Ok(Outcome::new(
        "generic (d+1,(d-1)^3,(d-2)^2); u+v (d^2,(d-1)^2,(d-2)^2); non-Lefschetz rows (4^{d-2},2^d,1^2) (3^{2d-4},2^2,1^2) (2^{3d-6},1^6) (2^{2d-2},1^{2d-2}) (2^d,1^{4d-6})",
        if failures.is_empty() {
            format!("{rows} Jordan types match, pre-Jordan strings included")
        } else {
            summarize(&failures)
        },
        failures.is_empty(),
    ))
}

fn dominance_chain(cfg: &RunConfig) -> Result<Outcome> {
    let mut failures = Vec::new();
    let ds = degrees!(cfg, 5, 8);
    for &d in &ds {
        let pf = normal_form(MinimalVariant::I, d, &int(1))?;
        let du = d as usize;
        let mut chain = Vec::new();
        for (reps, _) in table_rows(du) {
            chain.push(jordan_type(pf.form(), &threefold_ell(reps[0])?)?);
        }
        for pair in chain.windows(2) {
            if dominance_cmp(&pair[0], &pair[1])? != Some(std::cmp::Ordering::Greater) {
                failures.push(format!("d={d}: {} does not strictly dominate {}", pair[0], pair[1]));
            }
        }
        let conj = conjugate(minimal_hilbert(d).as_slice());
        let expected = Partition::from_powers(&[(du + 1, 1), (du - 1, 4), (du - 3, 1)]);
        if conj != expected {
            failures.push(format!("d={d}: conjugate {conj}, expected {expected}"));
        }
    }
    Ok(Outcome::new(
        "strictly decreasing chain; conjugate of (1,5,6,...,6,5,1) is (d+1,(d-1)^4,d-3)",
        if failures.is_empty() {
            format!("chain and conjugate hold for d in {:?}", ds)
        } else {
            summarize(&failures)
        },
        failures.is_empty(),
    ))
}

/// A random linear form outside the weak Lefschetz locus of the normal form.
fn non_lefschetz_form(
    variant: MinimalVariant,
    lambda: &Scalar,
    ctx: &std::sync::Arc<VariableContext>,
    rng: &mut SeededRng,
    bound: i64,
) -> Result<LinearForm> {
    loop {
        let mut c: Vec<Scalar> = (0..5).map(|_| int(random_int(rng, bound))).collect();
        let case = match variant {
            MinimalVariant::I => 0,
            MinimalVariant::II => random_int(rng, 1).unsigned_abs() as usize,
            MinimalVariant::III => (random_int(rng, 1) + 1) as usize,
        };
        match case {
            0 => c[3] = int(0),
            1 => c[4] = int(0),
            _ => c[3] = -(lambda * &c[4]),
        }
        if let Ok(l) = LinearForm::new(ctx, c) {
            return Ok(l);
        }
    }
}

fn non_lefschetz_strings(cfg: &RunConfig) -> Result<Outcome> {
    const D: u32 = 6;
    const PER_VARIANT: usize = 20;
    degrees!(cfg, D, D);
    let lambda = int(2);
    let ctx = perazzo_context(2, 2)?;
    let mut failures = Vec::new();
    let mut longest = Vec::new();
    for (vi, variant) in MinimalVariant::ALL.into_iter().enumerate() {
        let pf = normal_form(variant, D, &lambda)?;
        let mut rng = sub_rng(cfg.seed, 0x6e6c_0000 + vi as u64);
        let mut max_short = 0;
        for _ in 0..PER_VARIANT {
            let l = non_lefschetz_form(variant, &lambda, &ctx, &mut rng, cfg.bound)?;
            if lefschetz_element_predicate(variant, &lambda, &l)? || wlp_test(pf.form(), &l)? {
                failures.push(format!("({variant}) {l} is a Lefschetz element"));
                continue;
            }
            let p = jordan_type(pf.form(), &l)?;
            let short = match variant {
                MinimalVariant::I => 4,
                MinimalVariant::II => 3,
                MinimalVariant::III => 2,
            };
            let long = if variant == MinimalVariant::I { usize::MAX } else { D as usize - 1 };
            for &part in p.parts() {
                if part > short && part < long {
                    failures.push(format!("({variant}) ℓ={l}: {p}"));
                    break;
                }
                if part <= short {
                    max_short = max_short.max(part);
                }
            }
        }
        longest.push(format!("({variant}) short strings up to {max_short}"));
    }
    Ok(Outcome::new(
        "d=6: (i) all lengths <= 4; (ii) lengths >= 5 or <= 3; (iii) lengths >= 5 or <= 2",
        if failures.is_empty() {
            format!("{PER_VARIANT} forms per variant; {}", longest.join(", "))
        } else {
            summarize(&failures)
        },
        failures.is_empty(),
    ))
}

fn rank_bounds(cfg: &RunConfig) -> Result<Outcome> {
    let mut total = 0;
    let mut max_n3 = 0;
    let mut failures = Vec::new();
    for d in degrees!(cfg, 5, 9) {
        let records = cached_survey(d, cfg)?;
        for r in records.iter().take(50) {
            total += 1;
            let b = &r.rank_bounds;
            max_n3 = max_n3.max(b.rank_n3_prime);
            if !b.holds() {
                failures.push(format!("d={d} #{}: {b:?}", r.index));
            }
        }
    }
    Ok(Outcome::new(
        "rank M_k + rank N_k <= h_k <= rank M_k + rank N'_k for k = 2, 3; rank N'_3 <= 4",
        if failures.is_empty() {
            format!("{total} forms satisfy both chains; max rank N'_3 = {max_n3}")
        } else {
            summarize(&failures)
        },
        failures.is_empty(),
    ))
}

/// Random forms of varied shape for the generic property checks.
fn random_case(i: usize, rng: &mut SeededRng, bound: i64) -> Result<Polynomial> {
    Ok(match i % 4 {
        0 | 1 => random_perazzo_threefold_with(5 + (i % 3) as u32, rng, bound)?.form().clone(),
        2 => {
            let ctx = VariableContext::from_upper(&["X", "Y", "Z"])?;
            random_form_in(&ctx, Side::S, &[0, 1, 2], 4 + (i % 3) as u32, rng, bound)
        }
        _ => {
            let ctx = VariableContext::from_upper(&["X", "Y", "Z", "W"])?;
            random_form_in(&ctx, Side::S, &[0, 1, 2, 3], 4, rng, bound)
        }
    })
}

fn property_suites(cfg: &RunConfig) -> Result<Outcome> {
    const CASES: usize = 20;
    let mut failures = Vec::new();

    // Symmetry and Macaulay bounds on every surveyed algebra; Green on its witness quotient.
    let mut pairs = 0;
    for d in cfg.degrees(5, 9) {
        for r in cached_survey(d, cfg)?.iter() {
            pairs += 1;
            let h = r.hilbert.as_slice();
            if !symmetric(h) || !macaulay_check(h) || !green_check(h, &r.quotient) {
                failures.push(format!("survey d={d} #{}: {} / {}", r.index, r.hilbert, fmt_hf(&r.quotient)));
            }
        }
    }

    let mut rng = sub_rng(cfg.seed, 0x7072_6f70);
    let mut exact = 0;
    for i in 0..CASES {
        let f = random_case(i, &mut rng, cfg.bound)?;
        let l = random_linear_form(f.context(), &mut rng, cfg.bound);
        match hyperplane_sequence(&f, &l) {
            Ok(seq) => {
                exact += 1;
                pairs += 1;
                let h = seq.hilbert.as_slice();
                if !symmetric(h) || !macaulay_check(h) || !green_check(h, &seq.quotient) {
                    failures.push(format!("case {i}: {} / {}", seq.hilbert, fmt_hf(&seq.quotient)));
                }
            }
            Err(e) => failures.push(format!("exact sequence case {i}: {e}")),
        }
    }

    // Hessian criterion against ranks of ℓ^{d-2k}, including symbolic determinants.
    let mut slp_cases = 0;
    let mut slp_true = 0;
    for i in 0..CASES {
        let (f, l) = slp_case(i, &mut rng, cfg.bound)?;
        let verdict = match slp_test(&f, &l) {
            Ok(v) => v,
            Err(e) => {
                failures.push(format!("SLP case {i}: {e}"));
                continue;
            }
        };
        slp_cases += 1;
        slp_true += usize::from(verdict.is_strong_lefschetz);
        if verdict != slp_rank_test(&f, &l)? {
            failures.push(format!("SLP case {i}: criteria disagree"));
        }
        let d = f.homogeneous_degree()?;
        for k in 0..=d / 2 {
            let symbolic = hessian_poly(&f, k)?.evaluate(l.coefficients())?;
            let expected_zero = verdict.failing_order == Some(k);
            if verdict.failing_order.map_or(true, |fk| k <= fk) && (symbolic == int(0)) != expected_zero {
                failures.push(format!("SLP case {i}: symbolic Hessian of order {k} disagrees"));
            }
        }
    }

    let mut consistent = 0;
    for i in 0..CASES {
        let (f, l) = consistency_case(i, &mut rng, cfg.bound)?;
        let report = jordan_consistency(&f, &l, cfg.trials, cfg.seed.wrapping_add(i as u64), cfg.bound)?;
        if report.holds() {
            consistent += 1;
        } else {
            failures.push(format!("consistency case {i}: {report:?}"));
        }
    }

    Ok(Outcome::new(
        format!("all pass: {CASES} exact sequences, {CASES} SLP comparisons, {CASES} consistency reports"),
        if failures.is_empty() {
            format!(
                "{pairs} (HF, quotient) pairs; {exact} exact sequences; {slp_cases} SLP comparisons ({slp_true} strong Lefschetz); {consistent} consistent reports"
            )
        } else {
            summarize(&failures)
        },
        failures.is_empty(),
    ))
}

/// Forms whose Hessian matrices stay within [`DEFAULT_GUARD`].
fn slp_case(i: usize, rng: &mut SeededRng, bound: i64) -> Result<(Polynomial, LinearForm)> {
    let f = match i % 4 {
        0 => {
            let ctx = VariableContext::from_upper(&["X", "Y", "Z"])?;
            random_form_in(&ctx, Side::S, &[0, 1, 2], 4 + (i % 2) as u32, rng, bound)
        }
        1 => {
            let ctx = VariableContext::from_upper(&["X", "Y", "Z", "W"])?;
            random_form_in(&ctx, Side::S, &[0, 1, 2, 3], 3, rng, bound)
        }
        2 => normal_form(MinimalVariant::ALL[i % 3], 5, &int(2))?.form().clone(),
        _ => {
            let ctx = VariableContext::from_upper(&["X", "Y"])?;
            random_form_in(&ctx, Side::S, &[0, 1], 6, rng, bound)
        }
    };
    let alg = ApolarAlgebra::new(&f)?;
    debug_assert!(alg.hilbert().as_slice().iter().all(|&h| h <= DEFAULT_GUARD));
    let l = random_linear_form(f.context(), rng, bound);
    Ok((f, l))
}

fn consistency_case(i: usize, rng: &mut SeededRng, bound: i64) -> Result<(Polynomial, LinearForm)> {
    if i % 2 == 0 {
        let variant = MinimalVariant::ALL[(i / 2) % 3];
        let pf: PerazzoForm = normal_form(variant, 5 + (i % 3) as u32, &int(-3))?;
        let texts = ["u", "v", "u + v", "x + z", "u - v", "y + 2v", "3u + v"];
        let l = threefold_ell(texts[(i / 2) % texts.len()])?;
        Ok((pf.form().clone(), l))
    } else {
        let f = random_case(i, rng, bound)?;
        let l = random_linear_form(f.context(), rng, bound);
        Ok((f, l))
    }
}
