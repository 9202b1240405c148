//! One PASS/FAIL line per acceptance criterion. Thresholds are pinned below;
//! the binary exits nonzero if any criterion fails.

use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rtv_core::density::{scaling_sweep, sweep_instance, KRule, SweepConfig, SweepFamily};
use rtv_core::roundtrip::{lemma3_excluded, Lemma4Checker};
use rtv_core::workbench::{
    corpus_instance, equivalence_harness, oracle_roundtrip, DistanceMatrix, Instance, OracleBudget,
    Variant,
};
use rtv_core::*;

const CORPUS_SEEDS: u64 = 1000;
const CORPUS_MAX_N: usize = 200;
const CORPUS_MAX_K: usize = 20;
const LEMMA_INSTANCES: u64 = 200;
const LEMMA_MAX_N: usize = 40;
const LEMMA_MAX_K: usize = 12;
const REVISED_BOUNDS: [usize; 3] = [0, 2, 4];
const DENSITY_LADDER: [usize; 3] = [1000, 4000, 16000];
const DENSITY_SEEDS: u64 = 10;
/// max c/k over all rows may be at most this multiple of min c/k.
const DENSITY_SPREAD: f64 = 3.0;
const STAR_SIZES: [usize; 4] = [6, 20, 50, 120];
const PRUNING_N: usize = 16000;
const PRUNING_RATIO: f64 = 5.0;

type Check = Box<dyn FnOnce() -> Verdict>;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn first_problem(problems: &[String]) -> String {
    problems
        .first()
        .map_or(String::new(), |p| format!("; first: {p}"))
}

fn corpus(colored: bool) -> Vec<Instance> {
    (0..CORPUS_SEEDS)
        .map(|s| corpus_instance(s, CORPUS_MAX_N, CORPUS_MAX_K, colored).expect("corpus instance"))
        .collect()
}

fn equivalence(instances: Vec<Instance>, colored: bool) -> Verdict {
    let n = instances.len();
    let report = equivalence_harness(instances, &Variant::DEFAULTS, colored, 1);
    let first = report
        .verdicts
        .iter()
        .find(|v| v.outcome != rtv_core::workbench::Outcome::Pass);
    let names: Vec<_> = Variant::DEFAULTS.iter().map(|v| v.to_string()).collect();
    let mut detail = format!(
        "{}/{} instances, {} = oracle",
        report.passed(),
        n,
        names.join(", ")
    );
    if let Some(f) = first {
        detail.push_str(&format!("; first: {f}"));
    }
    verdict(report.all_passed(), detail)
}

fn sum_correctness(instances: &[Instance]) -> Verdict {
    let mut bad = Vec::new();
    for inst in instances {
        let (net, sites) = (&inst.net, &inst.sites);
        let dm = DistanceMatrix::new(net);
        let sum = two_site_sum_diagram(net, sites).expect("sum");
        let order2 = order_c_sum_diagram(net, sites, 2, None).expect("order 2");
        let order1 = order_c_sum_diagram(net, sites, 1, None).expect("order 1");
        let single = single_site_diagram(net, sites).expect("single");
        for v in 0..net.vertex_count() {
            let mut top = dm.sorted_sites(sites, v);
            top.truncate(2);
            let first: Vec<_> = single[v].0.map(|s| (s, single[v].1)).into_iter().collect();
            if sum.labels[v].entries() != top || order2[v] != top || order1[v] != first {
                bad.push(format!("seed {} vertex {}", inst.seed, v + 1));
                break;
            }
        }
    }
    verdict(
        bad.is_empty(),
        format!(
            "{}/{} instances: sum = order-2 = oracle top-2, order-1 = single{}",
            instances.len() - bad.len(),
            instances.len(),
            first_problem(&bad)
        ),
    )
}

#[derive(Default)]
struct LemmaViolations {
    lemma1: usize,
    lemma3: usize,
    table: usize,
    lemma4: usize,
    lemma4_exclusions: usize,
}

fn lemma_suites() -> Verdict {
    let mut v = LemmaViolations::default();
    for seed in 0..LEMMA_INSTANCES {
        for colored in [false, true] {
            let inst = corpus_instance(seed, LEMMA_MAX_N, LEMMA_MAX_K, colored).expect("instance");
            let (net, sites) = (&inst.net, &inst.sites);
            let rule = if colored {
                PairRule::CrossColor
            } else {
                PairRule::AnyTwo
            };
            let (labels, dm) =
                oracle_roundtrip(net, sites, colored, OracleBudget::default()).expect("oracle");
            let (table, _) = build_candidate_table(net, sites, rule).expect("table");
            let radius = |s: SiteId| {
                sites
                    .ids()
                    .filter(|&t| rule.admits(sites, s, t))
                    .map(|t| dm.get(sites.vertex(s), sites.vertex(t)))
                    .min()
                    .unwrap_or(Distance::UNREACHABLE)
            };
            let checker = Lemma4Checker::new(net, sites, rule, u64::MAX).expect("path-pruning checker");
            for (w, label) in labels.iter().enumerate() {
                if let Some(p) = label.pair {
                    let d_st = dm.get(sites.vertex(p.lo), sites.vertex(p.hi));
                    v.lemma1 += sites
                        .ids()
                        .filter(|&x| {
                            dm.get(w, sites.vertex(x)).doubled() > label.dp && p.contains(x)
                        })
                        .count();
                    v.lemma3 += usize::from(lemma3_excluded(d_st, radius(p.lo), radius(p.hi)));
                    v.table += usize::from(table.get(p) != Some(d_st));
                }
                for s in sites.ids() {
                    if !checker.holds(s, w) {
                        v.lemma4_exclusions += 1;
                        v.lemma4 += usize::from(label.pair.is_some_and(|p| p.contains(s)));
                    }
                }
            }
        }
    }
    verdict(
        v.lemma1 + v.lemma3 + v.table + v.lemma4 == 0,
        format!(
            "{} instances x {{plain, two-color}}, n <= {}: violations lemma1={} lemma3={} table={} lemma4={} ({} exclusions checked)",
            LEMMA_INSTANCES, LEMMA_MAX_N, v.lemma1, v.lemma3, v.table, v.lemma4, v.lemma4_exclusions
        ),
    )
}

fn complexity(instances: &[Instance]) -> Verdict {
    let mut violations = Vec::new();
    let mut runs = 0;
    for inst in instances {
        let (n, m, k) = (
            inst.net.vertex_count(),
            inst.net.edge_count(),
            inst.sites.len(),
        );
        for b in REVISED_BOUNDS.into_iter().chain([k]) {
            runs += 1;
            let run = roundtrip_revised(&inst.net, &inst.sites, b).expect("revised");
            let step1 = run.phase("step1").expect("step1 phase");
            let (visits, relax) = (step1.vertex_visits, step1.edge_relaxations);
            if visits > (n * (b + 1).min(k)) as u64 || relax > (2 * m * (b + 1)) as u64 {
                violations.push(format!(
                    "seed {} B={b}: visits {visits} relaxations {relax}",
                    inst.seed
                ));
            }
        }
    }
    verdict(
        violations.is_empty(),
        format!(
            "{runs} revised runs, step-1 visits <= n*min(B+1,k) and relaxations <= 2m(B+1); {} violations{}",
            violations.len(),
            first_problem(&violations)
        ),
    )
}

fn density_trend() -> Verdict {
    let cfg = SweepConfig {
        family: SweepFamily::RandomGeometric,
        ladder: DENSITY_LADDER.to_vec(),
        k_rule: KRule::Sqrt,
        seeds: DENSITY_SEEDS,
        first_seed: 0,
        colored: false,
        bound: 8,
        jobs: 1,
    };
    let out = scaling_sweep(&cfg);
    let ratios: Vec<f64> = out.rows.iter().map(|r| r.report.c_over_k).collect();
    let (lo, hi) = ratios
        .iter()
        .fold((f64::INFINITY, 0f64), |(lo, hi), &r| (lo.min(r), hi.max(r)));
    let rows_ok = out.rows.len() == DENSITY_LADDER.len() * DENSITY_SEEDS as usize;
    let bounded = rows_ok && hi <= DENSITY_SPREAD * lo;
    let means: Vec<String> = DENSITY_LADDER
        .iter()
        .map(|&n| {
            let rung: Vec<f64> = out
                .rows
                .iter()
                .filter(|r| r.rung == n)
                .map(|r| r.report.c_over_k)
                .collect();
            format!(
                "n={n}:{:.3}",
                rung.iter().sum::<f64>() / rung.len().max(1) as f64
            )
        })
        .collect();

    let mut star_ok = true;
    let mut star = Vec::new();
    for k in STAR_SIZES {
        let star_cfg = SweepConfig {
            family: SweepFamily::Star,
            ladder: vec![k],
            seeds: 1,
            ..cfg.clone()
        };
        let (net, sites) = sweep_instance(&star_cfg, k, 0).expect("star");
        let c = density_report(&net, &sites, false, 8)
            .expect("star report")
            .c;
        star_ok &= c == k * (k - 1) / 2;
        star.push(format!("k={k}:c={c}"));
    }
    verdict(
        bounded && star_ok,
        format!(
            "(a) rgg {} rows, c/k in [{lo:.3}, {hi:.3}], spread {:.2} <= {DENSITY_SPREAD}; rung means {} (b) star {} = k(k-1)/2",
            out.rows.len(),
            hi / lo,
            means.join(" "),
            star.join(" ")
        ),
    )
}

fn pruning() -> Verdict {
    let cfg = SweepConfig {
        family: SweepFamily::RandomGeometric,
        ladder: vec![PRUNING_N],
        k_rule: KRule::Sqrt,
        seeds: 1,
        first_seed: 0,
        colored: false,
        bound: 8,
        jobs: 1,
    };
    let (net, sites) = sweep_instance(&cfg, PRUNING_N, 0).expect("instance");
    let brute = roundtrip_brute(&net, &sites)
        .expect("brute")
        .total()
        .edge_relaxations;
    let dynamic = roundtrip_dynamic(&net, &sites)
        .expect("dynamic")
        .total()
        .edge_relaxations;
    let ratio = brute as f64 / dynamic as f64;
    verdict(
        ratio >= PRUNING_RATIO,
        format!("n={} k={}: brute {brute} vs dynamic {dynamic} relaxations, ratio {ratio:.2} (target >= {PRUNING_RATIO})", net.vertex_count(), sites.len()),
    )
}

fn cli_stability() -> Verdict {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let g = |f: &str| golden.join(f).display().to_string();
    let tmp = std::env::temp_dir().join(format!("rtv-acceptance-{}", std::process::id()));
    fs::create_dir_all(&tmp).expect("temp dir");
    let run = |args: &[String]| {
        Command::new(env!("CARGO_BIN_EXE_rtv"))
            .args(args)
            .current_dir(&tmp)
            .output()
            .expect("spawn rtv")
    };
    let args = |s: &[&str]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let mut failures = Vec::new();
    let mut checked = 0;

    let outputs: &[(&[&str], &str)] = &[
        (
            &[
                "voronoi",
                "--graph",
                &g("path3.gr"),
                "--sites",
                &g("path3.sites"),
                "--mode",
                "single",
                "--out",
            ],
            "path3.single.tsv",
        ),
        (
            &[
                "voronoi",
                "--graph",
                &g("path3.gr"),
                "--sites",
                &g("path3.sites"),
                "--mode",
                "sum",
                "--out",
            ],
            "path3.sum.tsv",
        ),
        (
            &[
                "voronoi",
                "--graph",
                &g("path3.gr"),
                "--sites",
                &g("path3.sites"),
                "--mode",
                "orderc",
                "--order",
                "2",
                "--trace",
                "path3.orderc2.trace.tsv",
                "--out",
            ],
            "path3.orderc2.tsv",
        ),
        (
            &[
                "voronoi",
                "--graph",
                &g("path3.gr"),
                "--sites",
                &g("path3.sites"),
                "--mode",
                "roundtrip",
                "--algorithm",
                "brute",
                "--stats",
                "path3.roundtrip.stats.json",
                "--out",
            ],
            "path3.roundtrip.tsv",
        ),
        (
            &[
                "voronoi",
                "--graph",
                &g("path11.gr"),
                "--sites",
                &g("path11.sites"),
                "--mode",
                "roundtrip",
                "--out",
            ],
            "path11.roundtrip.tsv",
        ),
        (
            &[
                "voronoi",
                "--graph",
                &g("path4.gr"),
                "--sites",
                &g("path4.colored.sites"),
                "--mode",
                "two-color",
                "--out",
            ],
            "path4.twocolor.tsv",
        ),
        (
            &[
                "density",
                "--graph",
                &g("path11.gr"),
                "--sites",
                &g("path11.sites"),
                "--out",
            ],
            "path11.density.json",
        ),
        (
            &[
                "density",
                "--graph",
                &g("star6.gr"),
                "--sites",
                &g("star6.sites"),
                "--out",
            ],
            "star6.density.json",
        ),
        (
            &[
                "gen",
                "--family",
                "path",
                "--params",
                "3",
                "--k",
                "2",
                "--seed",
                "1",
                "--out-prefix",
            ],
            "gen-path3",
        ),
    ];
    for (cmd, out) in outputs {
        let mut a = args(cmd);
        a.push(out.to_string());
        let res = run(&a);
        if !res.status.success() {
            failures.push(format!("{out}: exit {:?}", res.status.code()));
            continue;
        }
        let produced: Vec<String> = match *out {
            "gen-path3" => vec!["gen-path3.gr".into(), "gen-path3.sites".into()],
            "path3.orderc2.tsv" => vec![out.to_string(), "path3.orderc2.trace.tsv".into()],
            "path3.roundtrip.tsv" => vec![out.to_string(), "path3.roundtrip.stats.json".into()],
            _ => vec![out.to_string()],
        };
        for f in produced {
            checked += 1;
            if fs::read(tmp.join(&f)).ok() != fs::read(golden.join(&f)).ok() {
                failures.push(format!("{f} differs from golden"));
            }
        }
    }

    let p3 = ["--graph", &g("path3.gr"), "--sites", &g("path3.sites")];
    let exits: Vec<(Vec<&str>, i32)> = vec![
        (
            [
                &["voronoi", "--mode", "single"][..],
                &p3,
                &["--out", "x.tsv"],
            ]
            .concat(),
            0,
        ),
        (
            [
                &["voronoi", "--mode", "single", "--order", "2"][..],
                &p3,
                &["--out", "x.tsv"],
            ]
            .concat(),
            2,
        ),
        (
            [
                &["voronoi", "--mode", "two-color"][..],
                &p3,
                &["--out", "x.tsv"],
            ]
            .concat(),
            1,
        ),
        (vec!["verify", "--instances", "1", "--max-n", "3"], 0),
        (
            vec![
                "verify",
                "--instances",
                "4",
                "--max-n",
                "3",
                "--variants",
                "brute",
                "--inject-fault",
            ],
            1,
        ),
        (
            vec![
                "gen",
                "--family",
                "grid",
                "--params",
                "3",
                "--k",
                "1",
                "--out-prefix",
                "g",
            ],
            2,
        ),
    ];
    for (a, want) in &exits {
        checked += 1;
        let got = run(&args(a)).status.code();
        if got != Some(*want) {
            failures.push(format!("{} exited {got:?}, want {want}", a.join(" ")));
        }
    }
    let _ = fs::remove_dir_all(&tmp);
    verdict(
        failures.is_empty(),
        format!(
            "{checked} golden files and exit codes checked; {}",
            if failures.is_empty() {
                "byte-exact".to_string()
            } else {
                failures.join("; ")
            }
        ),
    )
}

fn main() -> ExitCode {
    let plain = corpus(false);
    let criteria: Vec<(u32, &str, Check)> = vec![
        (
            1,
            "algorithm equivalence",
            Box::new({
                let c = plain.clone();
                move || equivalence(c, false)
            }),
        ),
        (
            2,
            "two-color equivalence",
            Box::new(|| equivalence(corpus(true), true)),
        ),
        (
            3,
            "sum-diagram correctness",
            Box::new({
                let c = plain.clone();
                move || sum_correctness(&c)
            }),
        ),
        (4, "lemma invariant suites", Box::new(lemma_suites)),
        (
            5,
            "complexity counters",
            Box::new(move || complexity(&plain)),
        ),
        (6, "density trend", Box::new(density_trend)),
        (7, "pruning effectiveness", Box::new(pruning)),
        (8, "format/CLI stability", Box::new(cli_stability)),
    ];
    let mut all = true;
    for (id, name, check) in criteria {
        let start = Instant::now();
        let v = check();
        all &= v.pass;
        println!(
            "criterion {id} {} {name}: {} [{:.1}s]",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
