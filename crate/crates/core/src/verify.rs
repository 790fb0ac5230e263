//! Verification suites. Each case builds lattices with the generic engine and
//! compares them with the closed forms; results come back as a flat list of
//! named checks in a fixed order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bracket::nu_hat;
use crate::closed_forms::hasse::CoverSet;
use crate::closed_forms::{
    congruence_brute_force, congruence_solution_sets, csp_verify, hook_csp_polynomial,
    hook_hasse_prediction, hook_prediction, two_row_hasse_prediction, two_row_prediction,
    two_row_rowmotion_formula,
};
use crate::families::{hook_lattice_with, two_row_lattice_with, HookLattice, TwoRowLattice};
use crate::lattice::{
    orbit_decomposition, products, star_compose, switching::validate_switching, FiniteLattice,
    OrbitDecomposition, RowmotionMap, SwitchEmbedding,
};
use crate::path::{count_nu_paths, IncrementVector, RunLengthEncoding};
use crate::stats::{ddeg_values, StatReport, Statistic};
use crate::tamari::{build_alt_tamari_with, TamariOptions};

/// Name of the check recorded for every lattice a case constructs.
pub const SEMIDISTRIBUTIVE: &str = "semidistributive";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Hook,
    TwoRow,
    Switching,
    Csp,
    Interval,
    Congruence,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Hook,
        Suite::TwoRow,
        Suite::Switching,
        Suite::Csp,
        Suite::Interval,
        Suite::Congruence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hook => "hook",
            Suite::TwoRow => "two-row",
            Suite::Switching => "switching",
            Suite::Csp => "csp",
            Suite::Interval => "interval",
            Suite::Congruence => "congruence",
        }
    }

    /// Parses a suite name, with `all` expanding to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>, String> {
        if s == "all" {
            Ok(Suite::ALL.to_vec())
        } else {
            s.parse().map(|suite| vec![suite])
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                format!("unknown suite {s:?}; expected hook, two-row, switching, csp, interval, congruence or all")
            })
    }
}

/// One named comparison within a case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub case: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub max_a: usize,
    pub max_b: usize,
    /// Number of random `(ν, δ)` pairs in the interval suite.
    pub interval_cases: usize,
    pub seed: u64,
    pub options: TamariOptions,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_a: 6,
            max_b: 6,
            interval_cases: 20,
            seed: 0,
            options: TamariOptions::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn count(&self) -> (usize, usize) {
        let passed = self.checks.iter().filter(|c| c.passed).count();
        (passed, self.checks.len() - passed)
    }

    /// One aligned line per check followed by a totals line.
    pub fn to_table(&self) -> String {
        let w_suite = self
            .checks
            .iter()
            .map(|c| c.suite.name().len())
            .max()
            .unwrap_or(5);
        let w_case = self.checks.iter().map(|c| c.case.len()).max().unwrap_or(4);
        let w_check = self.checks.iter().map(|c| c.check.len()).max().unwrap_or(5);
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            let line = format!(
                "{verdict}  {:<w_suite$}  {:<w_case$}  {:<w_check$}  {}",
                c.suite.name(),
                c.case,
                c.check,
                c.detail
            );
            out.push_str(line.trim_end());
            out.push('\n');
        }
        let (passed, failed) = self.count();
        out.push_str(&format!("{passed} passed, {failed} failed\n"));
        out
    }
}

/// Runs the given suites; cases run in parallel, results keep case order.
pub fn run(suites: &[Suite], config: &VerifyConfig) -> VerifyReport {
    let mut checks = Vec::new();
    for &suite in suites {
        checks.extend(run_suite(suite, config));
    }
    VerifyReport { checks }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Vec<Check> {
    let VerifyConfig {
        max_a,
        max_b,
        interval_cases,
        seed,
        options,
    } = *config;
    let cases: Vec<(usize, usize, usize)> = match suite {
        Suite::Hook => (1..=max_a)
            .flat_map(|a| (1..=max_b).flat_map(move |b| (0..b).map(move |k| (a, b, k))))
            .collect(),
        Suite::Csp => (1..=max_a)
            .flat_map(|a| (1..=max_b).map(move |b| (a, b, 0)))
            .collect(),
        Suite::TwoRow => (0..=max_a)
            .flat_map(|a| (0..=max_b).map(move |b| (a, b, 0)))
            .collect(),
        Suite::Switching => (0..=max_a)
            .flat_map(|a| (1..=max_b).flat_map(move |b| (1..=b).map(move |k| (a, b, k))))
            .collect(),
        Suite::Interval => (0..interval_cases).map(|i| (i, 0, 0)).collect(),
        Suite::Congruence => (0..=max_a)
            .flat_map(|a| (0..=a).map(move |b| (a, b, 0)))
            .collect(),
    };
    let per_case: Vec<Vec<Check>> = cases
        .par_iter()
        .map(|&(a, b, k)| match suite {
            Suite::Hook => hook_case(a, b, k, &options),
            Suite::Csp => csp_case(a, b, &options),
            Suite::TwoRow => two_row_case(a, b, &options),
            Suite::Switching => switching_case(a, b, k, &options),
            Suite::Interval => interval_case(seed, a, &options),
            Suite::Congruence => congruence_case(a, b),
        })
        .collect();
    let mut checks: Vec<Check> = per_case.into_iter().flatten().collect();
    if suite == Suite::TwoRow {
        checks.extend(area_witness_case(&options));
    }
    checks
}

struct CaseLog {
    suite: Suite,
    case: String,
    checks: Vec<Check>,
}

impl CaseLog {
    fn new(suite: Suite, case: String) -> Self {
        CaseLog {
            suite,
            case,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, check: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            suite: self.suite,
            case: self.case.clone(),
            check: check.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    fn compare<T: PartialEq + fmt::Debug>(&mut self, check: &str, engine: &T, predicted: &T) {
        if engine == predicted {
            self.push(check, true, format!("{engine:?}"));
        } else {
            self.push(
                check,
                false,
                format!("engine {engine:?}, predicted {predicted:?}"),
            );
        }
    }

    fn semidistributive(&mut self, label: &str, l: &FiniteLattice) {
        let result = l.check_semidistributive();
        let detail = match &result {
            Ok(()) => format!("{label}: {} elements", l.len()),
            Err(e) => format!("{label}: {e}"),
        };
        self.push(SEMIDISTRIBUTIVE, result.is_ok(), detail);
    }

    fn orbits(&mut self, l: &FiniteLattice) -> Option<OrbitDecomposition> {
        match orbit_decomposition(l) {
            Ok(o) => Some(o),
            Err(e) => {
                self.push("rowmotion", false, e.to_string());
                None
            }
        }
    }
}

fn compare_covers(log: &mut CaseLog, check: &str, engine: &CoverSet, predicted: &CoverSet) {
    if engine == predicted {
        log.push(check, true, format!("{} covers", engine.len()));
    } else {
        let missing = predicted.difference(engine).next();
        let extra = engine.difference(predicted).next();
        log.push(
            check,
            false,
            format!("missing {missing:?}, unexpected {extra:?}"),
        );
    }
}

fn labelled_covers(l: &FiniteLattice, label: impl Fn(usize) -> (usize, usize)) -> CoverSet {
    l.covers()
        .into_iter()
        .map(|(x, y)| (label(x), label(y)))
        .collect()
}

fn hook_case(a: usize, b: usize, k: usize, options: &TamariOptions) -> Vec<Check> {
    let mut log = CaseLog::new(Suite::Hook, format!("a={a} b={b} k={k}"));
    let h = match hook_lattice_with(a, b, k, options) {
        Ok(h) => h,
        Err(e) => {
            log.push("build", false, e.to_string());
            return log.checks;
        }
    };
    let l = h.tamari.lattice();
    log.semidistributive("H", l);

    let engine = labelled_covers(l, |x| (h.coords[x].s, h.coords[x].t));
    match hook_hasse_prediction(a, b, k) {
        Ok(predicted) => compare_covers(&mut log, "hasse", &engine, &predicted),
        Err(e) => log.push("hasse", false, e.to_string()),
    }

    let Some(orbits) = log.orbits(l) else {
        return log.checks;
    };
    let pred = hook_prediction(a, b, k).expect("range checked by the builder");
    log.compare("orbit-sizes", &orbits.sizes(), &pred.orbit_sizes);
    log.compare("order", &orbits.order(), &pred.order);

    let tables = [
        (Statistic::Ddeg, Some(pred.ddeg)),
        (Statistic::Peak, Some(pred.peak)),
        (Statistic::Val, Some(pred.val)),
        (Statistic::Area, pred.area),
    ];
    for (st, sums) in tables {
        let report = StatReport::from_values(st.name(), &st.values(&h.tamari), &orbits)
            .expect("one value per element");
        if let Some(sums) = sums {
            log.compare(
                &format!("{}-sums", st.name()),
                &report.size_sum_multiset(),
                &pred.size_sum_multiset(sums),
            );
        }
        if st != Statistic::Area {
            log.push(
                &format!("{}-homometric", st.name()),
                report.homometric,
                format!("homometric = {}", report.homometric),
            );
        } else if (a, b, k) == AREA_WITNESS {
            push_area_witness(&mut log, &report);
        }
    }

    contraction_check(&mut log, &h);
    log.checks
}

/// The hook where area has different sums on two orbits of equal size.
const AREA_WITNESS: (usize, usize, usize) = (3, 3, 1);

fn push_area_witness(log: &mut CaseLog, report: &StatReport) {
    log.push(
        "area-not-homometric",
        !report.homometric,
        format!("homometric = {} (failure expected here)", report.homometric),
    );
}

/// The area witness on its own, reported under the two-row statistics.
fn area_witness_case(options: &TamariOptions) -> Vec<Check> {
    let (a, b, k) = AREA_WITNESS;
    let mut log = CaseLog::new(Suite::TwoRow, format!("hook a={a} b={b} k={k}"));
    let built = hook_lattice_with(a, b, k, options).map_err(|e| e.to_string());
    let orbits = built
        .as_ref()
        .map_err(Clone::clone)
        .and_then(|h| orbit_decomposition(h.tamari.lattice()).map_err(|e| e.to_string()));
    match (built, orbits) {
        (Ok(h), Ok(orbits)) => {
            log.semidistributive("H", h.tamari.lattice());
            let st = Statistic::Area;
            let report = StatReport::from_values(st.name(), &st.values(&h.tamari), &orbits)
                .expect("one value per element");
            push_area_witness(&mut log, &report);
        }
        (Err(e), _) | (_, Err(e)) => log.push("build", false, e),
    }
    log.checks
}

/// Rowmotion on `H` commutes with the contraction onto `C_a × C_b` away
/// from `w(k)`.
fn contraction_check(log: &mut CaseLog, h: &HookLattice) {
    let (a, b) = (h.a, h.b);
    let l = h.tamari.lattice();
    let map = match RowmotionMap::new(l) {
        Ok(m) => m,
        Err(e) => {
            log.push("contraction", false, e.to_string());
            return;
        }
    };
    let phi = |x: usize| (h.coords[x].s.min(a - 1), h.coords[x].t);
    let w = h.w();
    let bad = (0..l.len()).filter(|&z| z != w).find(|&z| {
        let (s, t) = phi(z);
        phi(map.apply(z)) != ((s + a - 1) % a, (t + b - 1) % b)
    });
    match bad {
        None => log.push("contraction", true, "commutes off w(k)"),
        Some(z) => log.push(
            "contraction",
            false,
            format!("fails at {:?}", (h.coords[z].s, h.coords[z].t)),
        ),
    }
}

fn csp_case(a: usize, b: usize, options: &TamariOptions) -> Vec<Check> {
    let mut log = CaseLog::new(Suite::Csp, format!("a={a} b={b}"));
    let f = hook_csp_polynomial(a, b);
    for k in 0..b {
        let h = match hook_lattice_with(a, b, k, options) {
            Ok(h) => h,
            Err(e) => {
                log.push("build", false, e.to_string());
                continue;
            }
        };
        log.semidistributive(&format!("H k={k}"), h.tamari.lattice());
        let Some(orbits) = log.orbits(h.tamari.lattice()) else {
            continue;
        };
        let order = orbits.order() as u64;
        let check = format!("csp k={k}");
        match csp_verify(&orbits, &f, order, 1e-6) {
            Ok(()) => log.push(&check, true, format!("order {order}")),
            Err(m) => log.push(
                &check,
                false,
                format!(
                    "d={}: {} fixed points, f = {:.6}{:+.6}i",
                    m.d, m.fixed_points, m.value_re, m.value_im
                ),
            ),
        }
    }
    log.checks
}

fn two_row_case(a: usize, b: usize, options: &TamariOptions) -> Vec<Check> {
    let mut log = CaseLog::new(Suite::TwoRow, format!("a={a} b={b}"));
    let pred = two_row_prediction(a, b);
    let mut per_k = Vec::new();
    for k in 0..=b {
        let t = match two_row_lattice_with(a, b, k, options) {
            Ok(t) => t,
            Err(e) => {
                log.push(&format!("build k={k}"), false, e.to_string());
                continue;
            }
        };
        let l = t.tamari.lattice();
        log.semidistributive(&format!("T k={k}"), l);
        let engine = labelled_covers(l, |x| t.planar[x]);
        match two_row_hasse_prediction(a, b, k) {
            Ok(predicted) => compare_covers(&mut log, &format!("hasse k={k}"), &engine, &predicted),
            Err(e) => log.push(&format!("hasse k={k}"), false, e.to_string()),
        }
        let switching = t
            .switch_embedding()
            .and_then(|emb| validate_switching(l, &emb, a));
        log.push(
            &format!("switching k={k}"),
            switching.is_ok(),
            switching.map_or_else(|e| e.to_string(), |()| format!("n = {a}")),
        );
        let Some(orbits) = log.orbits(l) else {
            continue;
        };
        let sizes = orbits.sizes();
        let ddeg = StatReport::from_values("ddeg", &ddeg_values(l), &orbits)
            .expect("one value per element")
            .size_sum_multiset();
        log.compare(&format!("orbit-sizes k={k}"), &sizes, &pred.orbit_sizes());
        log.compare(&format!("ddeg-sums k={k}"), &ddeg, &pred.ddeg_multiset());
        if k == 0 && a + b >= 2 {
            formula_check(&mut log, &t);
        }
        per_k.push((sizes, ddeg));
    }
    let invariant = per_k.windows(2).all(|w| w[0] == w[1]);
    log.push(
        "k-invariance",
        invariant && per_k.len() == b + 1,
        format!("{} increment vectors", per_k.len()),
    );
    log.checks
}

/// The piecewise rowmotion formula against the engine on `T_{δ(0)}(a,b)`.
fn formula_check(log: &mut CaseLog, t: &TwoRowLattice) {
    let l = t.tamari.lattice();
    let map = match RowmotionMap::new(l) {
        Ok(m) => m,
        Err(e) => {
            log.push("row-formula", false, e.to_string());
            return;
        }
    };
    let bad = (0..l.len()).find(|&x| {
        let (px, py) = t.planar[x];
        two_row_rowmotion_formula(t.a, t.b, px, py).ok() != Some(t.planar[map.apply(x)])
    });
    match bad {
        None => log.push("row-formula", true, format!("{} elements", l.len())),
        Some(x) => log.push(
            "row-formula",
            false,
            format!(
                "at {:?}: engine {:?}, formula {:?}",
                t.planar[x],
                t.planar[map.apply(x)],
                two_row_rowmotion_formula(t.a, t.b, t.planar[x].0, t.planar[x].1)
            ),
        ),
    }
}

/// `C_{a+1} × C_k` on the grid, with spine height `a`.
fn grid_factor(a: usize, k: usize) -> (FiniteLattice, SwitchEmbedding) {
    let l = products::grid(&[a + 1, k]);
    let coords = (0..l.len()).map(|id| (id % k, id / k)).collect();
    let emb = SwitchEmbedding::new(coords, a).expect("every row of the grid is occupied");
    (l, emb)
}

fn switching_case(a: usize, b: usize, k: usize, options: &TamariOptions) -> Vec<Check> {
    let mut log = CaseLog::new(Suite::Switching, format!("a={a} b={b} k={k}"));
    let (grid, grid_emb) = grid_factor(a, k);
    let built = two_row_lattice_with(a, b - k, 0, options).and_then(|t| {
        let emb = t.switch_embedding()?;
        Ok((t, emb))
    });
    let (small, small_emb) = match built {
        Ok(x) => x,
        Err(e) => {
            log.push("build", false, e.to_string());
            return log.checks;
        }
    };
    let b_lat = small.tamari.lattice();
    let ab = star_compose(&grid, &grid_emb, b_lat, &small_emb, a);
    let ba = star_compose(b_lat, &small_emb, &grid, &grid_emb, a);
    let (ab, ba) = match (ab, ba) {
        (Ok(ab), Ok(ba)) => (ab, ba),
        (Err(e), _) | (_, Err(e)) => {
            log.push("compose", false, e.to_string());
            return log.checks;
        }
    };
    log.semidistributive("A*B", &ab.lattice);
    log.semidistributive("B*A", &ba.lattice);
    let switching = validate_switching(&ab.lattice, &ab.embedding, a)
        .and_then(|()| validate_switching(&ba.lattice, &ba.embedding, a));
    log.push(
        "switching",
        switching.is_ok(),
        switching.map_or_else(|e| e.to_string(), |()| "both products".to_string()),
    );

    let (Some(o_ab), Some(o_ba)) = (log.orbits(&ab.lattice), log.orbits(&ba.lattice)) else {
        return log.checks;
    };
    log.compare("orbit-sizes", &o_ab.sizes(), &o_ba.sizes());
    let ddeg = |l: &FiniteLattice, o: &OrbitDecomposition| {
        StatReport::from_values("ddeg", &ddeg_values(l), o)
            .expect("one value per element")
            .size_sum_multiset()
    };
    log.compare(
        "ddeg-sums",
        &ddeg(&ab.lattice, &o_ab),
        &ddeg(&ba.lattice, &o_ba),
    );

    for (name, product, target_k) in [("A*B = T(0)", &ab, 0), ("B*A = T(k)", &ba, k)] {
        let engine = labelled_covers(&product.lattice, |x| product.embedding.at(x));
        match two_row_hasse_prediction(a, b, target_k) {
            Ok(target) => compare_covers(&mut log, name, &engine, &target),
            Err(e) => log.push(name, false, e.to_string()),
        }
    }
    log.checks
}

/// Random `ν` with at most 5 north steps and 9 east steps, and a random
/// increment vector, keeping `|P(ν)| ≤ 2000` and `|P(ν̂)| ≤ 4000`.
pub fn random_interval_case(seed: u64, index: usize) -> (RunLengthEncoding, IncrementVector) {
    let mut rng =
        ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    loop {
        let n = rng.gen_range(1..=5);
        let east = rng.gen_range(0..=9);
        let mut values = vec![0usize; n + 1];
        for _ in 0..east {
            values[rng.gen_range(0..=n)] += 1;
        }
        let nu = RunLengthEncoding::new(values.clone()).expect("n + 1 entries");
        let delta =
            IncrementVector::new(values[1..].iter().map(|&v| rng.gen_range(0..=v)).collect());
        let hat = nu_hat(&nu, &delta).expect("delta drawn within range");
        if count_nu_paths(&nu.to_path()) <= 2000 && count_nu_paths(&hat) <= 4000 {
            return (nu, delta);
        }
    }
}

fn interval_case(seed: u64, index: usize, options: &TamariOptions) -> Vec<Check> {
    let (nu, delta) = random_interval_case(seed, index);
    let mut log = CaseLog::new(Suite::Interval, format!("nu={nu} delta={delta}"));
    let hat = nu_hat(&nu, &delta).expect("delta drawn within range");
    let full = IncrementVector::full(&hat.run_lengths());
    let small = build_alt_tamari_with(&nu.to_path(), &delta, options);
    let big = build_alt_tamari_with(&hat, &full, options);
    let (small, big) = match (small, big) {
        (Ok(s), Ok(b)) => (s, b),
        (Err(e), _) | (_, Err(e)) => {
            log.push("build", false, e.to_string());
            return log.checks;
        }
    };
    log.semidistributive("Tam_delta(nu)", small.lattice());
    log.semidistributive("Tam(nu_hat)", big.lattice());

    let embed: Option<Vec<usize>> = small.paths().iter().map(|p| big.index_of(p)).collect();
    let Some(embed) = embed else {
        log.push("interval", false, "a nu-path is missing from Tam(nu_hat)");
        return log.checks;
    };
    let bottom = big
        .index_of(&nu.to_path())
        .expect("nu is weakly above nu_hat");
    let interval: BTreeSet<usize> = big.lattice().up_set(bottom).into_iter().collect();
    let image: BTreeSet<usize> = embed.iter().copied().collect();
    let small_covers: BTreeSet<(usize, usize)> = small
        .lattice()
        .covers()
        .into_iter()
        .map(|(x, y)| (embed[x], embed[y]))
        .collect();
    let big_covers: BTreeSet<(usize, usize)> = big
        .lattice()
        .covers()
        .into_iter()
        .filter(|(x, y)| interval.contains(x) && interval.contains(y))
        .collect();
    let ok = interval == image && small_covers == big_covers;
    log.push(
        "interval",
        ok,
        format!(
            "{} elements, interval {} of {}",
            small.len(),
            interval.len(),
            big.len()
        ),
    );
    log.checks
}

fn congruence_case(a: usize, b: usize) -> Vec<Check> {
    let mut log = CaseLog::new(Suite::Congruence, format!("a={a} b={b}"));
    if a + b < 2 {
        return log.checks;
    }
    let sets = congruence_solution_sets(a, b).expect("b <= a");
    log.compare("solutions", &sets.combined(), &congruence_brute_force(a, b));
    log.compare(
        "orbit-sizes",
        &sets.orbit_sizes(),
        &two_row_prediction(a, b).orbit_sizes(),
    );
    log.checks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_a: 3,
            max_b: 3,
            interval_cases: 4,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn suites_pass_on_small_ranges() {
        let report = run(&Suite::ALL, &small());
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert!(report
            .checks
            .iter()
            .any(|c| c.check == "area-not-homometric"));
    }

    #[test]
    fn report_is_deterministic() {
        let config = small();
        assert_eq!(
            run(&[Suite::Interval, Suite::Hook], &config),
            run(&[Suite::Interval, Suite::Hook], &config)
        );
    }

    #[test]
    fn suite_names() {
        assert_eq!(Suite::parse_list("all").unwrap().len(), 6);
        assert_eq!("two-row".parse::<Suite>().unwrap(), Suite::TwoRow);
        assert!("tworow".parse::<Suite>().is_err());
    }
}
