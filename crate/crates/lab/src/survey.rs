//! Seeded surveys of random Perazzo threefolds.
//!
//! Sample `i` of degree `d` draws everything (form, test linear forms, Hessian
//! evaluation points) from its own stream `sub_rng(seed, (d << 32) | i)`, so a
//! survey is a deterministic function of the configuration no matter how the
//! samples are scheduled across threads.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use gorenstein_core::apolarity::{ApolarAlgebra, HilbertVector};
use gorenstein_core::combinatorics::unimodal;
use gorenstein_core::hessians::{hessian_matrix_in, VANISHING_POINTS};
use gorenstein_core::jordan::{jordan_type, wlp_generic_with, Partition, WlpGeneric};
use gorenstein_core::perazzo::{
    hf_rank_bounds_check, random_perazzo_threefold_with, wlp_predicate, PerazzoForm, RankBounds,
};
use gorenstein_core::sampling::{random_point, sub_rng};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::Result;

#[derive(Debug, Clone)]
pub struct SampleRecord {
    pub d: u32,
    pub index: usize,
    pub form: PerazzoForm,
    pub hilbert: HilbertVector,
    pub wlp: WlpGeneric,
    pub wlp_predicate: bool,
    /// Hilbert function of `A_F / (ℓ)` for the sampled witness `ℓ`.
    pub quotient: Vec<usize>,
    /// Jordan type of multiplication by the witness.
    pub jordan: Partition,
    /// The first Hessian vanished at every sampled point.
    pub hessian_vanishes: bool,
    pub rank_bounds: RankBounds,
}

/// Hilbert functions that no threefold of the given socle degree can have.
pub fn forbidden(d: u32) -> Vec<Vec<usize>> {
    match d {
        6 => vec![vec![1, 5, 7, 7, 7, 5, 1], vec![1, 5, 6, 8, 6, 5, 1]],
        10 => vec![vec![1, 5, 6, 7, 9, 9, 9, 7, 6, 5, 1]],
        _ => Vec::new(),
    }
}

pub fn sample(d: u32, index: usize, cfg: &RunConfig) -> Result<SampleRecord> {
    let mut rng = sub_rng(cfg.seed, (u64::from(d) << 32) | index as u64);
    let form = random_perazzo_threefold_with(d, &mut rng, cfg.bound)?;
    let alg = ApolarAlgebra::new(form.form())?;
    let hilbert = alg.hilbert().clone();
    let wlp = wlp_generic_with(form.form(), cfg.trials, &mut rng, cfg.bound)?;
    let quotient = alg.quotient_hf(&wlp.witness)?;
    let jordan = jordan_type(form.form(), &wlp.witness)?;
    let hessian = hessian_matrix_in(&alg, 1, &alg.basis_polynomials(1))?;
    let mut hessian_vanishes = true;
    for _ in 0..VANISHING_POINTS {
        let point = random_point(form.context().nvars(), &mut rng, cfg.bound);
        hessian_vanishes &= hessian.vanishes_at(&point)?;
    }
    Ok(SampleRecord {
        d,
        index,
        wlp_predicate: wlp_predicate(hilbert.as_slice(), d),
        rank_bounds: hf_rank_bounds_check(&form)?,
        form,
        hilbert,
        wlp,
        quotient,
        jordan,
        hessian_vanishes,
    })
}

/// `cfg.samples` records of degree `d`, in index order.
pub fn survey(d: u32, cfg: &RunConfig) -> Result<Vec<SampleRecord>> {
    (0..cfg.samples)
        .into_par_iter()
        .map(|i| sample(d, i, cfg))
        .collect()
}

type Cache = Mutex<HashMap<(u32, RunConfig), Arc<Vec<SampleRecord>>>>;

/// [`survey`], memoized for the lifetime of the process.
pub fn cached_survey(d: u32, cfg: &RunConfig) -> Result<Arc<Vec<SampleRecord>>> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(found) = guard.get(&(d, cfg.clone())) {
        return Ok(found.clone());
    }
    let records = Arc::new(survey(d, cfg)?);
    guard.insert((d, cfg.clone()), records.clone());
    Ok(records)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct HfEntry {
    count: usize,
    wlp: usize,
    predicate: bool,
}

/// Hilbert-function histogram with the generic WLP verdicts.
pub fn classification_json(d: u32, cfg: &RunConfig, records: &[SampleRecord]) -> Value {
    let mut hist: BTreeMap<String, HfEntry> = BTreeMap::new();
    for r in records {
        let e = hist.entry(r.hilbert.to_string()).or_default();
        e.count += 1;
        e.wlp += usize::from(r.wlp.has_wlp);
        e.predicate = r.wlp_predicate;
    }
    let histogram: serde_json::Map<String, Value> = hist
        .into_iter()
        .map(|(hf, e)| {
            (
                hf,
                json!({ "count": e.count, "wlp": e.wlp, "wlp_predicate": e.predicate }),
            )
        })
        .collect();
    json!({
        "d": d,
        "seed": cfg.seed,
        "bound": cfg.bound,
        "trials": cfg.trials,
        "samples": records.len(),
        "histogram": histogram,
        "wlp_agrees_with_predicate": records.iter().all(|r| r.wlp.has_wlp == r.wlp_predicate),
    })
}

/// Classification plus Jordan types of the sampled witnesses and the invariant checks.
pub fn survey_json(d: u32, cfg: &RunConfig, records: &[SampleRecord]) -> Value {
    let mut out = classification_json(d, cfg, records);
    let mut jordan: BTreeMap<String, usize> = BTreeMap::new();
    for r in records {
        *jordan.entry(r.jordan.to_string()).or_default() += 1;
    }
    let forbidden_seen: Vec<String> = records
        .iter()
        .filter(|r| forbidden(d).iter().any(|f| f.as_slice() == r.hilbert.as_slice()))
        .map(|r| r.hilbert.to_string())
        .collect();
    out["jordan_types"] = json!(jordan);
    out["all_unimodal"] = json!(records.iter().all(|r| unimodal(r.hilbert.as_slice())));
    out["hessian_vanishes"] = json!(records.iter().all(|r| r.hessian_vanishes));
    out["rank_bounds_hold"] = json!(records.iter().all(|r| r.rank_bounds.holds()));
    out["forbidden_seen"] = json!(forbidden_seen);
    out
}
