//! Timing the extended-ideal pipeline against the baseline signed decomposition.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::random::random_dataset;
use crate::datamodel::{FieldSpec, LiteralSet};
use crate::decompose::{baseline_signed_decomposition, minsets};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub n: usize,
    pub q: u32,
    pub vsize: usize,
    pub trials: usize,
    pub seed: u64,
    pub baseline_cap: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialTiming {
    pub extended_ns: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub baseline_ns: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trial {
    pub index: usize,
    pub signed_minsets: Vec<LiteralSet>,
    pub signed_consistent: bool,
    pub baseline_refused: bool,
    /// `None` when the baseline refused.
    pub agree: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<TrialTiming>,
}

/// Count of trials per power-of-ten bucket of nanoseconds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bucket {
    pub log10_ns: u32,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimingSummary {
    pub median_extended_ns: u64,
    pub median_baseline_ns: Option<u64>,
    pub extended_histogram: Vec<Bucket>,
    pub baseline_histogram: Vec<Bucket>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchReport {
    pub config: BenchConfig,
    pub trials: Vec<Trial>,
    pub all_agree: bool,
    pub baseline_refused: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<TimingSummary>,
}

impl BenchReport {
    /// The report with every wall-clock field removed; identical across runs.
    pub fn without_timings(&self) -> BenchReport {
        let mut r = self.clone();
        r.timing = None;
        r.trials.iter_mut().for_each(|t| t.timing = None);
        r
    }
}

fn nanos(d: Duration) -> u64 {
    u64::try_from(d.as_nanos()).unwrap_or(u64::MAX)
}

fn median(mut v: Vec<u64>) -> Option<u64> {
    if v.is_empty() {
        return None;
    }
    v.sort_unstable();
    let mid = v.len() / 2;
    Some(if v.len() % 2 == 1 { v[mid] } else { (v[mid - 1] + v[mid]) / 2 })
}

fn histogram(v: &[u64]) -> Vec<Bucket> {
    let mut buckets: Vec<Bucket> = Vec::new();
    for &ns in v {
        let b = ns.max(1).ilog10();
        match buckets.iter_mut().find(|x| x.log10_ns == b) {
            Some(x) => x.count += 1,
            None => buckets.push(Bucket { log10_ns: b, count: 1 }),
        }
    }
    buckets.sort_by_key(|b| b.log10_ns);
    buckets
}

/// Runs `trials` seeded random instances through both pipelines. One extra untimed
/// instance warms up caches first.
pub fn run_bench(cfg: BenchConfig) -> Result<BenchReport> {
    if cfg.trials == 0 {
        return Err(Error::Validation("at least one trial is needed".into()));
    }
    let spec = FieldSpec::new(cfg.q, cfg.n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let instances = (0..cfg.trials).map(|_| random_dataset(&mut rng, spec, cfg.vsize)).collect::<Result<Vec<_>>>()?;

    let warm = &instances[0];
    let _ = minsets(warm);
    let _ = baseline_signed_decomposition(warm, cfg.baseline_cap);

    let mut trials = Vec::with_capacity(cfg.trials);
    for (index, data) in instances.iter().enumerate() {
        let start = Instant::now();
        let report = minsets(data);
        let extended_ns = nanos(start.elapsed());

        let start = Instant::now();
        let baseline = baseline_signed_decomposition(data, cfg.baseline_cap);
        let baseline_ns = nanos(start.elapsed());
        let (refused, agree, baseline_ns) = match baseline {
            Ok(sets) => (false, Some(sets == report.signed_minsets), Some(baseline_ns)),
            Err(Error::Capacity(_)) => (true, None, None),
            Err(e) => return Err(e),
        };
        trials.push(Trial {
            index,
            signed_minsets: report.signed_minsets,
            signed_consistent: report.signed_consistent,
            baseline_refused: refused,
            agree,
            timing: Some(TrialTiming { extended_ns, baseline_ns }),
        });
    }

    let ext: Vec<u64> = trials.iter().filter_map(|t| t.timing.as_ref().map(|x| x.extended_ns)).collect();
    let base: Vec<u64> = trials.iter().filter_map(|t| t.timing.as_ref().and_then(|x| x.baseline_ns)).collect();
    Ok(BenchReport {
        config: cfg,
        all_agree: trials.iter().all(|t| t.agree != Some(false)),
        baseline_refused: trials.iter().filter(|t| t.baseline_refused).count(),
        timing: Some(TimingSummary {
            median_extended_ns: median(ext.clone()).unwrap_or(0),
            median_baseline_ns: median(base.clone()),
            extended_histogram: histogram(&ext),
            baseline_histogram: histogram(&base),
        }),
        trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats() {
        assert_eq!(median(vec![5, 1, 3]), Some(3));
        assert_eq!(median(vec![4, 1, 3, 2]), Some(2));
        assert_eq!(median(vec![]), None);
        let h = histogram(&[5, 50, 70, 0, 1_000]);
        assert_eq!(
            h,
            vec![
                Bucket { log10_ns: 0, count: 2 },
                Bucket { log10_ns: 1, count: 2 },
                Bucket { log10_ns: 3, count: 1 }
            ]
        );
    }

    #[test]
    fn small_bench_agrees() {
        let cfg = BenchConfig { n: 4, q: 2, vsize: 6, trials: 5, seed: 3, baseline_cap: 1_000_000 };
        let a = run_bench(cfg).unwrap();
        assert!(a.all_agree);
        assert_eq!(a.trials.len(), 5);
        let b = run_bench(cfg).unwrap();
        assert_eq!(a.without_timings(), b.without_timings());
    }
}
