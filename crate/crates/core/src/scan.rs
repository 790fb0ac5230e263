//! Scans for δ-dependence: builds `Tam_δ(ν)` for many increment vectors of
//! the same `ν` and compares rowmotion orbit data across them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::lattice::orbit_decomposition;
use crate::path::{count_nu_paths, IncrementVector, LatticePath, Step};
use crate::stats::{StatReport, Statistic};
use crate::tamari::{build_alt_tamari_with, TamariOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("max element count {requested} exceeds the global guard {guard}")]
    GuardExceeded { requested: usize, guard: usize },
}

/// Where the paths `ν` come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NuSource {
    Explicit(Vec<LatticePath>),
    /// Every path with at most this many north and east steps.
    Exhaustive {
        max_north: usize,
        max_east: usize,
    },
    /// `count` random paths with `1..=max_north` north and `0..=max_east`
    /// east steps.
    Random {
        count: usize,
        max_north: usize,
        max_east: usize,
        seed: u64,
    },
}

/// Which increment vectors to build for each `ν`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaChoice {
    All,
    /// Given vectors; those that do not fit a particular `ν` are skipped.
    List(Vec<IncrementVector>),
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub source: NuSource,
    pub deltas: DeltaChoice,
    /// Statistics whose per-orbit sums are compared across δ.
    pub statistics: Vec<Statistic>,
    pub options: TamariOptions,
}

impl ScanConfig {
    /// Rejects an element bound above `guard`.
    pub fn new(
        source: NuSource,
        deltas: DeltaChoice,
        statistics: Vec<Statistic>,
        options: TamariOptions,
        guard: usize,
    ) -> Result<Self, ScanError> {
        if options.max_elements > guard {
            return Err(ScanError::GuardExceeded {
                requested: options.max_elements,
                guard,
            });
        }
        Ok(ScanConfig {
            source,
            deltas,
            statistics,
            options,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ScanStatus {
    Consistent,
    /// `what` is `orbit-sizes` or a statistic name.
    Counterexample {
        what: String,
        delta_a: String,
        delta_b: String,
        left: String,
        right: String,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NuScan {
    pub nu: String,
    pub elements: usize,
    pub deltas: usize,
    /// Orbit sizes shared by every δ, when they agree.
    pub orbit_sizes: Vec<usize>,
    pub orbit_sizes_consistent: bool,
    /// Per statistic: whether the `(size, sum)` multisets agree.
    pub statistics: Vec<(String, bool)>,
    pub all_semidistributive: bool,
    #[serde(flatten)]
    pub status: ScanStatus,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub results: Vec<NuScan>,
}

impl ScanReport {
    /// No counterexample and every lattice semidistributive.
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| {
            r.all_semidistributive && !matches!(r.status, ScanStatus::Counterexample { .. })
        })
    }

    pub fn skipped(&self) -> usize {
        self.results
            .iter()
            .filter(|r| matches!(r.status, ScanStatus::Skipped { .. }))
            .count()
    }

    pub fn to_table(&self) -> String {
        let width = self.results.iter().map(|r| r.nu.len()).max().unwrap_or(2);
        let mut out = String::new();
        for r in &self.results {
            let verdict = match &r.status {
                ScanStatus::Consistent => "CONSISTENT".to_string(),
                ScanStatus::Counterexample {
                    what,
                    delta_a,
                    delta_b,
                    left,
                    right,
                } => format!(
                    "COUNTEREXAMPLE {what}: {delta_a} gives {left}, {delta_b} gives {right}"
                ),
                ScanStatus::Skipped { reason } => format!("SKIPPED {reason}"),
            };
            out.push_str(&format!(
                "{:<width$}  {:>6} elements  {:>4} deltas  {verdict}\n",
                r.nu, r.elements, r.deltas
            ));
        }
        let counter = self
            .results
            .iter()
            .filter(|r| matches!(r.status, ScanStatus::Counterexample { .. }))
            .count();
        out.push_str(&format!(
            "{} paths, {} counterexamples, {} skipped\n",
            self.results.len(),
            counter,
            self.skipped()
        ));
        out
    }
}

/// Paths with exactly `north` N steps and `east` E steps, in lexicographic
/// order with `E < N`.
fn words(north: usize, east: usize) -> Vec<LatticePath> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(north + east);
    fn rec(n: usize, e: usize, steps: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        if n == 0 && e == 0 {
            out.push(LatticePath::new(steps.clone()));
            return;
        }
        if e > 0 {
            steps.push(Step::E);
            rec(n, e - 1, steps, out);
            steps.pop();
        }
        if n > 0 {
            steps.push(Step::N);
            rec(n - 1, e, steps, out);
            steps.pop();
        }
    }
    rec(north, east, &mut steps, &mut out);
    out
}

/// The list of `ν` for a source, in a fixed order.
pub fn nu_list(source: &NuSource) -> Vec<LatticePath> {
    match source {
        NuSource::Explicit(list) => list.clone(),
        NuSource::Exhaustive {
            max_north,
            max_east,
        } => (0..=*max_north)
            .flat_map(|n| (0..=*max_east).flat_map(move |e| words(n, e)))
            .collect(),
        NuSource::Random {
            count,
            max_north,
            max_east,
            seed,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*count)
                .map(|_| {
                    let n = rng.gen_range(1..=(*max_north).max(1));
                    let e = rng.gen_range(0..=*max_east);
                    let mut steps = vec![Step::E; n + e];
                    let mut placed = 0;
                    while placed < n {
                        let i = rng.gen_range(0..steps.len());
                        if steps[i] == Step::E {
                            steps[i] = Step::N;
                            placed += 1;
                        }
                    }
                    LatticePath::new(steps)
                })
                .collect()
        }
    }
}

pub fn scan(config: &ScanConfig) -> ScanReport {
    let nus = nu_list(&config.source);
    let results = nus.par_iter().map(|nu| scan_one(nu, config)).collect();
    ScanReport { results }
}

type Signature = (Vec<usize>, Vec<Vec<(usize, i64)>>);

pub fn scan_one(nu: &LatticePath, config: &ScanConfig) -> NuScan {
    let rle = nu.run_lengths();
    let mut result = NuScan {
        nu: nu.to_exponent_string(),
        elements: 0,
        deltas: 0,
        orbit_sizes: Vec::new(),
        orbit_sizes_consistent: true,
        statistics: config
            .statistics
            .iter()
            .map(|s| (s.name().to_string(), true))
            .collect(),
        all_semidistributive: true,
        status: ScanStatus::Consistent,
    };
    let count = count_nu_paths(nu);
    if count > config.options.max_elements as u128 {
        result.status = ScanStatus::Skipped {
            reason: format!(
                "{count} paths exceed the limit {}",
                config.options.max_elements
            ),
        };
        return result;
    }
    result.elements = count as usize;
    let deltas: Vec<IncrementVector> = match &config.deltas {
        DeltaChoice::All => IncrementVector::all_for(&rle),
        DeltaChoice::List(list) => list.iter().filter_map(|d| d.fit_to(&rle).ok()).collect(),
    };
    result.deltas = deltas.len();

    let mut first: Option<(IncrementVector, Signature)> = None;
    for delta in deltas {
        let t = match build_alt_tamari_with(nu, &delta, &config.options) {
            Ok(t) => t,
            Err(e) => {
                result.status = ScanStatus::Skipped {
                    reason: format!("delta {delta}: {e}"),
                };
                return result;
            }
        };
        let l = t.lattice();
        if !l.is_semidistributive() {
            result.all_semidistributive = false;
        }
        let orbits = match orbit_decomposition(l) {
            Ok(o) => o,
            Err(e) => {
                result.all_semidistributive = false;
                result.status = ScanStatus::Skipped {
                    reason: format!("delta {delta}: {e}"),
                };
                return result;
            }
        };
        let sums: Vec<Vec<(usize, i64)>> = config
            .statistics
            .iter()
            .map(|st| {
                StatReport::from_values(st.name(), &st.values(&t), &orbits)
                    .expect("one value per element")
                    .size_sum_multiset()
            })
            .collect();
        let sig = (orbits.sizes(), sums);
        match &first {
            None => {
                result.orbit_sizes = sig.0.clone();
                first = Some((delta, sig));
            }
            Some((d0, sig0)) => {
                let mut mismatch: Option<(String, String, String)> = None;
                if sig0.0 != sig.0 {
                    result.orbit_sizes_consistent = false;
                    mismatch = Some((
                        "orbit-sizes".into(),
                        format!("{:?}", sig0.0),
                        format!("{:?}", sig.0),
                    ));
                }
                for (i, (left, right)) in sig0.1.iter().zip(&sig.1).enumerate() {
                    if left != right {
                        result.statistics[i].1 = false;
                        if mismatch.is_none() {
                            mismatch = Some((
                                result.statistics[i].0.clone(),
                                format!("{left:?}"),
                                format!("{right:?}"),
                            ));
                        }
                    }
                }
                if let (Some((what, left, right)), ScanStatus::Consistent) =
                    (mismatch, &result.status)
                {
                    result.status = ScanStatus::Counterexample {
                        what,
                        delta_a: d0.to_string(),
                        delta_b: delta.to_string(),
                        left,
                        right,
                    };
                }
            }
        }
    }
    if !result.orbit_sizes_consistent {
        result.orbit_sizes.clear();
    }
    result
}
