use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use rtv_core::density::{scaling_sweep, KRule, SweepConfig, SweepFamily};
use rtv_core::engine::SearchEvent;
use rtv_core::format::{pair_labels_tsv, single_site_tsv, site_lists_tsv, sum_tsv};
use rtv_core::workbench::{
    corpus_instance, equivalence_harness, generate, place_sites, Family, GeneratorConfig, Variant,
    WeightModel,
};
use rtv_core::{
    density_report, load_network, load_sites, order_c_sum_diagram, roundtrip_traced,
    single_site_diagram, two_site_sum_diagram, Algorithm, Network, PairRule, SiteSet, Weight,
};
use serde::Serialize;
use serde_json::json;

use crate::manifest::{sibling, RunManifest};
use crate::{
    AlgorithmArg, CliError, DensityArgs, FamilyArg, GenArgs, Mode, SweepArgs, VerifyArgs,
    VoronoiArgs,
};

type CmdResult = Result<ExitCode, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn read(path: &Path, manifest: &mut RunManifest) -> Result<String, CliError> {
    let bytes =
        fs::read(path).map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
    manifest.input(path, &bytes);
    String::from_utf8(bytes)
        .map_err(|_| CliError::Failure(format!("{}: not UTF-8", path.display())))
}

fn write(path: &Path, text: &str, manifest: &mut RunManifest) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
    manifest.output(path, text.as_bytes());
    Ok(())
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn finish(manifest: &mut RunManifest, primary: &Path) -> Result<(), CliError> {
    manifest.mark("write");
    let path = sibling(primary);
    fs::write(&path, to_json(manifest))
        .map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
    Ok(())
}

fn load_instance(
    graph: &Path,
    sites: &Path,
    manifest: &mut RunManifest,
) -> Result<(Network, SiteSet), CliError> {
    let (net, report) = load_network(&read(graph, manifest)?)?;
    if report.self_loops > 0 {
        eprintln!("warning: dropped {} self-loop arcs", report.self_loops);
    }
    if report.declared_edges != report.arc_lines {
        eprintln!(
            "warning: header declares {} arcs, file has {}",
            report.declared_edges, report.arc_lines
        );
    }
    let loaded = load_sites(&read(sites, manifest)?, &net)?;
    if loaded.duplicates > 0 {
        eprintln!(
            "warning: collapsed {} duplicate site lines",
            loaded.duplicates
        );
    }
    manifest.mark("load");
    Ok((net, loaded.sites))
}

pub fn voronoi(a: &VoronoiArgs) -> CmdResult {
    let pair_mode = matches!(a.mode, Mode::Roundtrip | Mode::TwoColor);
    if a.order.is_some() != (a.mode == Mode::Orderc) {
        return Err(usage(
            "--order is required by, and only valid with, --mode orderc",
        ));
    }
    if !pair_mode && (a.algorithm.is_some() || a.bound.is_some()) {
        return Err(usage(
            "--algorithm and --bound apply only to --mode roundtrip and two-color",
        ));
    }
    let algorithm = match a.algorithm.unwrap_or(AlgorithmArg::Dynamic) {
        AlgorithmArg::Brute => Algorithm::Brute,
        AlgorithmArg::Revised => Algorithm::Revised(a.bound.unwrap_or(8)),
        AlgorithmArg::Dynamic => Algorithm::Dynamic,
    };
    if a.bound.is_some() && !matches!(algorithm, Algorithm::Revised(_)) {
        return Err(usage("--bound applies only to --algorithm revised"));
    }
    if a.trace.is_some() && (a.mode == Mode::Sum || (pair_mode && algorithm == Algorithm::Brute)) {
        return Err(usage(
            "--trace is not available for --mode sum or --algorithm brute",
        ));
    }

    let mut manifest = RunManifest::new("voronoi", a);
    let (net, sites) = load_instance(&a.graph, &a.sites, &mut manifest)?;
    let mut trace_file = match &a.trace {
        Some(p) => Some(BufWriter::new(fs::File::create(p)?)),
        None => None,
    };
    let mut trace_err = None;
    let mut emit = |e: &SearchEvent| {
        if let Some(w) = trace_file.as_mut() {
            if let Err(err) = writeln!(w, "{e}") {
                trace_err.get_or_insert(err);
            }
        }
    };
    let trace: Option<&mut dyn FnMut(&SearchEvent)> = if a.trace.is_some() {
        Some(&mut emit)
    } else {
        None
    };

    let mut stats = json!({
        "schema_version": 1,
        "mode": a.mode,
        "n": net.vertex_count(),
        "m": net.edge_count(),
        "k": sites.len(),
    });
    let text = match a.mode {
        Mode::Single => {
            if trace.is_some() {
                let labels = rtv_core::engine::apex_sssp(&net, &sites, trace)?;
                single_site_tsv(
                    &labels
                        .owner
                        .into_iter()
                        .zip(labels.dist)
                        .collect::<Vec<_>>(),
                )
            } else {
                single_site_tsv(&single_site_diagram(&net, &sites)?)
            }
        }
        Mode::Sum => {
            let diagram = two_site_sum_diagram(&net, &sites)?;
            stats["max_live_entries"] = json!(diagram.max_live_entries);
            sum_tsv(&diagram.labels)
        }
        Mode::Orderc => {
            let c = a.order.expect("checked above");
            stats["order"] = json!(c);
            site_lists_tsv(&order_c_sum_diagram(&net, &sites, c, trace)?, c)
        }
        Mode::Roundtrip | Mode::TwoColor => {
            let (sites, rule) = if a.mode == Mode::TwoColor {
                if !sites.is_colored() {
                    return Err(CliError::Failure(
                        "--mode two-color needs a colored site file".into(),
                    ));
                }
                (sites, PairRule::CrossColor)
            } else {
                (sites.uncolored(), PairRule::AnyTwo)
            };
            let run = roundtrip_traced(&net, &sites, algorithm, rule, trace)?;
            stats["algorithm"] = json!(algorithm.to_string());
            let phases: Vec<_> = run
                .phases
                .iter()
                .map(|p| json!({ "name": p.name, "stats": p.stats }))
                .collect();
            stats["phases"] = json!(phases);
            stats["total"] = json!(run.total());
            pair_labels_tsv(&run.labels)
        }
    };
    if let Some(err) = trace_err {
        return Err(err.into());
    }
    if let Some(mut w) = trace_file {
        w.flush()?;
    }
    manifest.mark("compute");
    write(&a.out, &text, &mut manifest)?;
    if let Some(path) = &a.stats {
        write(path, &to_json(&stats), &mut manifest)?;
    }
    finish(&mut manifest, &a.out)?;
    Ok(ExitCode::SUCCESS)
}

pub fn density(a: &DensityArgs) -> CmdResult {
    let mut manifest = RunManifest::new("density", a);
    let (net, sites) = load_instance(&a.graph, &a.sites, &mut manifest)?;
    let sites = if a.two_color {
        if !sites.is_colored() {
            return Err(CliError::Failure(
                "--two-color needs a colored site file".into(),
            ));
        }
        sites
    } else {
        sites.uncolored()
    };
    let report = density_report(&net, &sites, a.two_color, a.bound)?;
    manifest.mark("compute");

    #[derive(Serialize)]
    struct Versioned<'a, T> {
        schema_version: u32,
        #[serde(flatten)]
        report: &'a T,
    }
    write(
        &a.out,
        &to_json(&Versioned {
            schema_version: 1,
            report: &report,
        }),
        &mut manifest,
    )?;
    finish(&mut manifest, &a.out)?;
    Ok(ExitCode::SUCCESS)
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| usage(format!("bad {what} `{}`", p.trim())))
        })
        .collect()
}

fn family(arg: FamilyArg, params: &str) -> Result<Family, CliError> {
    let ints = |want: usize| -> Result<Vec<usize>, CliError> {
        let v: Vec<usize> = parse_list(params, "--params value")?;
        if v.len() != want {
            return Err(usage(format!("--params for {arg:?} takes {want} value(s)")));
        }
        Ok(v)
    };
    Ok(match arg {
        FamilyArg::Grid => {
            let v = ints(2)?;
            Family::Grid {
                rows: v[0],
                cols: v[1],
            }
        }
        FamilyArg::Path => Family::Path { n: ints(1)?[0] },
        FamilyArg::Star => Family::Star {
            leaves: ints(1)?[0],
        },
        FamilyArg::Rgg => {
            let (n, radius) = params
                .split_once(',')
                .ok_or_else(|| usage("--params for rgg is N,RADIUS"))?;
            let n = n
                .trim()
                .parse()
                .map_err(|_| usage(format!("bad vertex count `{n}`")))?;
            let radius = radius
                .trim()
                .parse()
                .map_err(|_| usage(format!("bad radius `{radius}`")))?;
            Family::RandomGeometric { n, radius }
        }
    })
}

fn weight_model(text: &str) -> Result<WeightModel, CliError> {
    if text == "unit" {
        return Ok(WeightModel::Unit);
    }
    let bad = || {
        usage(format!(
            "bad --weights `{text}`; expected unit or uniform:LO,HI"
        ))
    };
    let (lo, hi) = text
        .strip_prefix("uniform:")
        .and_then(|r| r.split_once(','))
        .ok_or_else(bad)?;
    let lo = Weight::parse_decimal(lo.trim()).map_err(|_| bad())?;
    let hi = Weight::parse_decimal(hi.trim()).map_err(|_| bad())?;
    Ok(WeightModel::Uniform { lo, hi })
}

pub fn gen(a: &GenArgs) -> CmdResult {
    let mut manifest = RunManifest::new("gen", a);
    manifest.seed(a.seed);
    let cfg = GeneratorConfig {
        family: family(a.family, &a.params)?,
        weights: weight_model(&a.weights)?,
        seed: a.seed,
    };
    let net = generate(&cfg).map_err(|e| usage(e.to_string()))?;
    let sites = place_sites(&net, a.k, a.two_color, a.seed).map_err(|e| usage(e.to_string()))?;
    manifest.mark("generate");
    let prefix = a.out_prefix.display().to_string();
    let graph = Path::new(&format!("{prefix}.gr")).to_path_buf();
    write(&graph, &net.to_dimacs(), &mut manifest)?;
    write(
        Path::new(&format!("{prefix}.sites")),
        &sites.to_site_file(),
        &mut manifest,
    )?;
    finish(&mut manifest, Path::new(&prefix))?;
    Ok(ExitCode::SUCCESS)
}

pub fn verify(a: &VerifyArgs) -> CmdResult {
    let mut variants: Vec<Variant> = parse_list(&a.variants, "variant")?;
    if a.inject_fault {
        variants.push(Variant::FaultyTieBreak);
    }
    if a.jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    let mut manifest = RunManifest::new("verify", a);
    let instances = (a.seed..a.seed + a.instances)
        .map(|seed| {
            manifest.seed(seed);
            corpus_instance(seed, a.max_n, a.max_k, a.two_color)
        })
        .collect::<rtv_core::Result<Vec<_>>>()?;
    manifest.mark("generate");
    let report = equivalence_harness(instances, &variants, a.two_color, a.jobs);
    manifest.mark("verify");
    let text = report.to_string();
    print!("{text}");
    if let Some(out) = &a.out {
        write(out, &text, &mut manifest)?;
        finish(&mut manifest, out)?;
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn sweep(a: &SweepArgs) -> CmdResult {
    let k_rule = match a.k_rule.as_str() {
        "sqrt" => KRule::Sqrt,
        other => other
            .strip_prefix("fixed:")
            .and_then(|k| k.parse().ok())
            .map(KRule::Fixed)
            .ok_or_else(|| usage(format!("bad --k-rule `{other}`; expected sqrt or fixed:K")))?,
    };
    if a.jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    let cfg = SweepConfig {
        family: match a.family {
            FamilyArg::Grid => SweepFamily::Grid,
            FamilyArg::Rgg => SweepFamily::RandomGeometric,
            FamilyArg::Path => SweepFamily::Path,
            FamilyArg::Star => SweepFamily::Star,
        },
        ladder: parse_list(&a.ladder, "--ladder size")?,
        k_rule,
        seeds: a.seeds,
        first_seed: a.first_seed,
        colored: a.two_color,
        bound: a.bound,
        jobs: a.jobs,
    };
    let mut manifest = RunManifest::new("sweep", a);
    for seed in a.first_seed..a.first_seed + a.seeds {
        manifest.seed(seed);
    }
    let out = scaling_sweep(&cfg);
    manifest.mark("sweep");
    for d in &out.diagnostics {
        eprintln!("skipped: {d}");
    }
    write(&a.out, &out.to_csv(), &mut manifest)?;
    finish(&mut manifest, &a.out)?;
    Ok(ExitCode::SUCCESS)
}
