use std::time::Instant;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::checks::*;
use super::report::{IdentityReport, Mode, Params, Verdict};
use crate::polyring::{int, rat, Rational};
use crate::semigroup::NumericalSemigroup;
use crate::Result;

/// Upper bounds for every parameter family the sweep covers. All pair
/// families enumerate coprime `1 <= a < b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteRanges {
    /// Gap sets, Hilbert series, Alexander chain, restricted sum.
    pub semigroup_b: u64,
    /// Apéry class identities, Carlitz-type polynomials, quotient genus on pairs.
    pub identity_b: u64,
    /// `V_{m,n}` expansions over compositions of `n`.
    pub multinomial_b: u64,
    pub voronoi_m: u32,
    pub voronoi_n: u32,
    /// `V_{m,1}` expansions.
    pub linear_voronoi_b: u64,
    /// Dedekind routes, gap values at roots, the `V_{1,1}` identity.
    pub dedekind_b: u64,
    pub reciprocity_b: u64,
    pub rt_b: u64,
    pub rt_mn: u32,
    pub random_count: usize,
    pub random_gen_max: u64,
    pub member_max: u64,
    pub quotient_d_max: u64,
    pub quotient_s_max: u64,
}

impl Default for SuiteRanges {
    fn default() -> Self {
        Self {
            semigroup_b: 30,
            identity_b: 20,
            multinomial_b: 12,
            voronoi_m: 4,
            voronoi_n: 3,
            linear_voronoi_b: 40,
            dedekind_b: 50,
            reciprocity_b: 40,
            rt_b: 15,
            rt_mn: 3,
            random_count: 20,
            random_gen_max: 30,
            member_max: 25,
            quotient_d_max: 8,
            quotient_s_max: 20,
        }
    }
}

impl SuiteRanges {
    /// Default ranges with every pair bound and the random generator bound
    /// capped at `cap`. `cap = 0` yields an empty sweep.
    pub fn capped(cap: u64) -> Self {
        let d = Self::default();
        Self {
            semigroup_b: d.semigroup_b.min(cap),
            identity_b: d.identity_b.min(cap),
            multinomial_b: d.multinomial_b.min(cap),
            linear_voronoi_b: d.linear_voronoi_b.min(cap),
            dedekind_b: d.dedekind_b.min(cap),
            reciprocity_b: d.reciprocity_b.min(cap),
            rt_b: d.rt_b.min(cap),
            random_gen_max: d.random_gen_max.min(cap),
            ..d
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub ranges: SuiteRanges,
    pub seed: u64,
    /// Keep only identities whose id starts with one of these prefixes.
    pub identities: Vec<String>,
    /// Record wall-clock time per check. Off by default so that reports are
    /// reproducible byte for byte.
    pub record_timing: bool,
    /// Worker threads; `None` reads `SDLAB_THREADS`, else rayon's default.
    pub threads: Option<usize>,
    /// Replaces the per-identity tolerance of every float check.
    pub float_tolerance: Option<f64>,
}


impl SuiteConfig {
    fn wants(&self, ids: &[&str]) -> bool {
        self.identities.is_empty() || ids.iter().any(|id| self.matches(id))
    }

    fn matches(&self, id: &str) -> bool {
        self.identities.is_empty() || self.identities.iter().any(|p| id.starts_with(p.as_str()))
    }
}

/// `count` semigroups with 2–4 generators drawn uniformly from
/// `[2, gen_max]`, redrawn until their gcd is 1.
pub fn random_semigroups(seed: u64, count: usize, gen_max: u64) -> Vec<NumericalSemigroup> {
    if gen_max < 3 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| loop {
            let n = rng.random_range(2..=4);
            let gens: Vec<u64> = (0..n).map(|_| rng.random_range(2..=gen_max)).collect();
            if gens.iter().fold(0, |g, &x| g.gcd(&x)) == 1 {
                break NumericalSemigroup::from_generators(&gens).expect("gcd is 1");
            }
        })
        .collect()
}

fn pairs(b_max: u64) -> impl Iterator<Item = (u64, u64)> {
    (2..=b_max).flat_map(|b| (1..b).filter(move |a| a.gcd(&b) == 1).map(move |a| (a, b)))
}

type Job = Box<dyn Fn() -> Result<Vec<IdentityReport>> + Send + Sync>;

struct Task {
    ids: &'static [&'static str],
    params: Params,
    job: Job,
}

struct Plan<'a> {
    cfg: &'a SuiteConfig,
    tasks: Vec<Task>,
}

impl Plan<'_> {
    fn add<F>(&mut self, ids: &'static [&'static str], params: &[(&str, i64)], job: F)
    where
        F: Fn() -> Result<Vec<IdentityReport>> + Send + Sync + 'static,
    {
        if self.cfg.wants(ids) {
            let params = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
            self.tasks.push(Task { ids, params, job: Box::new(job) });
        }
    }

    fn add_one<F>(&mut self, id: &'static [&'static str], params: &[(&str, i64)], job: F)
    where
        F: Fn() -> Result<IdentityReport> + Send + Sync + 'static,
    {
        self.add(id, params, move || job().map(|r| vec![r]));
    }
}

fn semigroup_params(s: &NumericalSemigroup, extra: &[(&'static str, i64)]) -> Vec<(String, i64)> {
    let mut p: Vec<(String, i64)> = s
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("g{i}"), *g as i64))
        .collect();
    p.extend(extra.iter().map(|(k, v)| (k.to_string(), *v)));
    p
}

const MODES: [Mode; 2] = [Mode::Exact, Mode::Float];

fn build_plan(cfg: &SuiteConfig) -> Vec<Task> {
    let r = &cfg.ranges;
    let mut plan = Plan { cfg, tasks: Vec::new() };

    for (a, b) in pairs(r.semigroup_b) {
        let ab = [("a", a as i64), ("b", b as i64)];
        plan.add_one(&["eq1.mordell"], &ab, move || check_mordell(a, b));
        plan.add_one(&["eq1.carlitz_restricted"], &ab, move || check_carlitz_restricted(a, b));
        plan.add_one(&["alexander.chain"], &ab, move || check_alexander_chain(a, b));
        let n = a * b + b;
        plan.add_one(&["eq1"], &[("a", a as i64), ("b", b as i64), ("n", n as i64)], move || {
            check_eq1(a, b, n)
        });
    }

    for (a, b) in pairs(r.identity_b) {
        let ab = [("a", a as i64), ("b", b as i64)];
        for k in 0..b {
            let abk = [("a", a as i64), ("b", b as i64), ("k", k as i64)];
            for mode in MODES {
                plan.add(&["prop1.eq4", "prop1.eq5"], &abk, move || check_prop1_ab(a, b, k, mode));
            }
        }
        for mode in MODES {
            plan.add_one(&["prop3"], &ab, move || check_prop3(a, b, mode));
            plan.add_one(&["prop5"], &ab, move || check_prop5(a, b, mode));
        }
        plan.add(&["prop4.R11", "prop4.T11"], &ab, move || check_prop4(a, b));
        plan.add_one(&["cor5_10"], &ab, move || check_cor510(a, b));
        plan.add_one(&["carlitz.sawtooth"], &ab, move || check_sawtooth_poly(a, b));
        plan.add_one(&["carlitz.count"], &ab, move || check_carlitz_count(a, b));
    }

    for (a, b) in pairs(r.multinomial_b) {
        for m in 1..=r.voronoi_m {
            for n in 1..=r.voronoi_n {
                let p = [("a", a as i64), ("b", b as i64), ("m", m as i64), ("n", n as i64)];
                plan.add(&["prop2.mirimanoff", "prop2.apostol"], &p, move || check_prop2(a, b, m, n));
            }
        }
    }
    for (a, b) in pairs(r.linear_voronoi_b) {
        for m in 1..=r.voronoi_m {
            let p = [("a", a as i64), ("b", b as i64), ("m", m as i64)];
            plan.add(&["prop2.vm1.mirimanoff", "prop2.vm1.apostol"], &p, move || {
                check_prop2_vm1(a, b, m)
            });
        }
    }

    let lambdas: [Rational; 4] = [int(-1), int(2), rat(1, 2), rat(-3, 2)];
    for b in 1..=r.multinomial_b {
        for m in 0..=r.voronoi_m {
            for lambda in &lambdas {
                let lam = lambda.clone();
                let p = [("b", b as i64), ("m", m as i64)];
                plan.add_one(&["sec3.mirimanoff_apostol"], &p, move || {
                    check_mirimanoff_apostol_exact(&lam, m, b)
                });
            }
            if b >= 2 {
                for j in 1..b as i64 {
                    let p = [("order", b as i64), ("j", j), ("m", m as i64), ("b", b as i64)];
                    plan.add_one(&["sec3.mirimanoff_apostol"], &p, move || {
                        check_mirimanoff_apostol_root(b, j, m, b)
                    });
                }
            }
        }
    }

    for (a, b) in pairs(r.dedekind_b) {
        let ab = [("a", a as i64), ("b", b as i64)];
        plan.add(&["dedekind.routes"], &ab, move || check_dedekind_routes(a, b));
        for k in 0..b {
            let abk = [("a", a as i64), ("b", b as i64), ("k", k as i64)];
            plan.add_one(&["sec5.gap_values"], &abk, move || check_gap_values(a, b, k));
        }
        for mode in MODES {
            plan.add_one(&["prop6.eq7"], &ab, move || check_prop6(a, b, mode));
        }
    }
    for b in 2..=r.reciprocity_b {
        for a in (1..=r.reciprocity_b).filter(|&a| a != b && a.gcd(&b) == 1) {
            let ab = [("a", a as i64), ("b", b as i64)];
            plan.add_one(&["dedekind.reciprocity"], &ab, move || check_reciprocity(a, b));
        }
    }
    for (a, b) in pairs(r.rt_b) {
        for m in 0..=r.rt_mn {
            for n in 0..=r.rt_mn {
                let p = [("a", a as i64), ("b", b as i64), ("m", m as i64), ("n", n as i64)];
                plan.add_one(&["rt.at_one"], &p, move || check_rt_at_one(a, b, m, n));
            }
        }
    }

    let mut population = random_semigroups(cfg.seed, r.random_count, r.random_gen_max);
    for s in &population {
        for m in (1..=r.member_max).filter(|&m| s.contains(m)) {
            let shared = std::sync::Arc::new(s.clone());
            for k in 0..m {
                let p = semigroup_params(s, &[("s", m as i64), ("k", k as i64)]);
                let p: Vec<(&str, i64)> = p.iter().map(|(k, v)| (k.as_str(), *v)).collect();
                let s = shared.clone();
                plan.add(&["prop1.eq2", "prop1.eq3"], &p, move || check_prop1(&s, m, k, Mode::Exact));
            }
            let p = semigroup_params(s, &[("s", m as i64)]);
            let p: Vec<(&str, i64)> = p.iter().map(|(k, v)| (k.as_str(), *v)).collect();
            let s = shared.clone();
            plan.add_one(&["eq6"], &p, move || check_eq6(&s, m));
        }
    }

    population.extend(pairs(r.identity_b).map(|(a, b)| {
        NumericalSemigroup::from_generators(&[a, b]).expect("coprime pair")
    }));
    let s_max = r.quotient_s_max;
    for s in population {
        let shared = std::sync::Arc::new(s);
        for d in 1..=r.quotient_d_max {
            if !(1..=s_max).any(|x| shared.contains(d * x)) {
                continue;
            }
            let p = semigroup_params(&shared, &[("d", d as i64)]);
            let p: Vec<(&str, i64)> = p.iter().map(|(k, v)| (k.as_str(), *v)).collect();
            for mode in MODES {
                let s = shared.clone();
                plan.add_one(&["prop7"], &p, move || check_prop7(&s, d, s_max, mode));
            }
        }
    }

    plan.tasks
}

fn run_task(task: &Task, record_timing: bool) -> Vec<IdentityReport> {
    let start = Instant::now();
    let mut out = match (task.job)() {
        Ok(rs) => rs,
        Err(e) => vec![IdentityReport::exact(task.ids[0], task.params.clone(), f64::INFINITY)
            .with_detail(format!("checker error: {e}"))],
    };
    let ms = start.elapsed().as_secs_f64() * 1e3;
    for r in &mut out {
        if !record_timing {
            r.elapsed_ms = 0.0;
        } else if r.elapsed_ms == 0.0 {
            r.elapsed_ms = ms;
        }
    }
    out
}

fn thread_count(cfg: &SuiteConfig) -> Option<usize> {
    cfg.threads.or_else(|| {
        std::env::var("SDLAB_THREADS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
    })
}

/// Runs every checker over the configured ranges and returns the reports in
/// canonical order (by id, then params, then mode).
pub fn run_suite(cfg: &SuiteConfig) -> Vec<IdentityReport> {
    let tasks = build_plan(cfg);
    let run = || -> Vec<IdentityReport> {
        tasks
            .par_iter()
            .flat_map_iter(|t| run_task(t, cfg.record_timing))
            .collect()
    };
    let mut reports = match thread_count(cfg) {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    reports.retain(|r| cfg.matches(&r.id));
    if let Some(tol) = cfg.float_tolerance {
        for r in reports.iter_mut().filter(|r| r.mode == Mode::Float) {
            r.verdict = if r.residual.is_finite() && r.residual <= tol { Verdict::Pass } else { Verdict::Fail };
        }
    }
    reports.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::Summary;

    #[test]
    fn random_population_is_seeded_and_valid() {
        let a = random_semigroups(7, 20, 30);
        let b = random_semigroups(7, 20, 30);
        assert_eq!(a.len(), 20);
        assert_eq!(a, b);
        for s in &a {
            let g = s.generators();
            assert!(g.iter().all(|&x| (2..=30).contains(&x)));
            assert_eq!(g.iter().fold(0, |x, &y| x.gcd(&y)), 1);
        }
        assert_ne!(a, random_semigroups(8, 20, 30));
        assert!(random_semigroups(0, 5, 2).is_empty());
    }

    #[test]
    fn empty_ranges_give_empty_report() {
        let cfg = SuiteConfig { ranges: SuiteRanges::capped(0), ..SuiteConfig::default() };
        assert!(run_suite(&cfg).is_empty());
    }

    #[test]
    fn small_suite_passes_and_is_sorted() {
        let cfg = SuiteConfig { ranges: SuiteRanges::capped(7), ..SuiteConfig::default() };
        let reports = run_suite(&cfg);
        let summary = Summary::of(&reports);
        assert_eq!(summary.fail, 0, "{:?}", reports.iter().find(|r| r.verdict == Verdict::Fail));
        assert!(summary.expected_discrepancy > 0);
        assert!(reports.windows(2).all(|w| w[0].sort_key() <= w[1].sort_key()));
        assert!(reports.iter().all(|r| r.elapsed_ms == 0.0));
    }

    #[test]
    fn float_tolerance_override() {
        let base = SuiteConfig {
            ranges: SuiteRanges::capped(6),
            identities: vec!["prop6".into(), "prop3".into()],
            ..SuiteConfig::default()
        };
        let strict = SuiteConfig { float_tolerance: Some(0.0), ..base.clone() };
        let reports = run_suite(&strict);
        assert!(reports.iter().any(|r| r.mode == Mode::Float && r.verdict == Verdict::Fail));
        assert!(reports.iter().filter(|r| r.mode == Mode::Exact).all(|r| r.passed()));
        assert!(run_suite(&base).iter().all(|r| r.passed()));
    }

    #[test]
    fn identity_filter_is_a_prefix() {
        let cfg = SuiteConfig {
            ranges: SuiteRanges::capped(9),
            identities: vec!["prop6".into()],
            ..SuiteConfig::default()
        };
        let reports = run_suite(&cfg);
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.id == "prop6.eq7"));
    }
}
