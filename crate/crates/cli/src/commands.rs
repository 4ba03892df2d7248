use std::path::Path;
use std::time::Instant;

use cobase_core::characters::verify_threecycle;
use cobase_core::constructions::build_enumerated;
use cobase_core::probability::{
    bound_report, closed_form_bound, pb_bruteforce, pb_monte_carlo, ClosedFormParams,
};
use cobase_core::verify::{run_suite, Suite, VerifyOptions};
use cobase_core::{GroupSpec, MatrixGroup, PbEstimate, SupportKind};
use serde::Serialize;

use crate::config::{parse_cases, parse_mr, Format, Method, RunConfig};
use crate::error::{CliError, CliResult};
use crate::records::{spectrum_entries, ClosedFormRecord, PbCsvRow, PbRecord, Sink, SpectrumEntry};
use crate::Overrides;

/// Loads `--config` and applies the command line overrides.
fn load(run: &Overrides) -> CliResult<RunConfig> {
    let path = run
        .config
        .as_deref()
        .ok_or_else(|| CliError::Config("--config PATH is required".into()))?;
    let mut cfg = RunConfig::load(path)?;
    if let Some(s) = run.seed {
        cfg.seed = Some(s);
    }
    if let Some(t) = run.trials {
        cfg.trials = Some(t);
    }
    if let Some(c) = &run.c {
        cfg.c = crate::config::CList::Many(c.0.clone());
    }
    if let Some(v) = run.enum_cap {
        cfg.caps.enumeration = v;
    }
    if let Some(v) = run.tuple_cap {
        cfg.caps.tuples = v;
    }
    if let Some(p) = &run.out {
        cfg.output.path = Some(p.clone());
    }
    if let Some(f) = run.format {
        cfg.output.format = f;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn sink(cfg: &RunConfig) -> CliResult<Sink> {
    Sink::open(cfg.output.path.as_deref(), cfg.output.format)
}

fn enumerate(cfg: &RunConfig) -> CliResult<MatrixGroup> {
    Ok(build_enumerated(&cfg.group, cfg.enum_cap())?)
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

#[derive(Serialize)]
struct FieldInfo {
    p: u32,
    e: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
}

#[derive(Serialize)]
struct Spectra {
    fixed: Vec<SpectrumEntry>,
    projective: Vec<SpectrumEntry>,
}

#[derive(Serialize)]
struct GroupInfo {
    spec: GroupSpec,
    label: String,
    dim: usize,
    field: FieldInfo,
    order: usize,
    coprime: bool,
    contains_scalars: bool,
    min_supp: Option<usize>,
    min_supp_projective: Option<usize>,
    spectra: Spectra,
}

#[derive(Serialize)]
struct SpectrumRow {
    support: usize,
    count: u64,
    kind: String,
}

pub fn group_info(run: &Overrides, dump: Option<&Path>) -> CliResult<()> {
    let cfg = load(run)?;
    let group = enumerate(&cfg)?;
    let fixed = group.support_spectrum(SupportKind::Fixed)?;
    let projective = group.support_spectrum(SupportKind::Projective)?;
    let field = group.field();
    let info = GroupInfo {
        spec: cfg.group.clone(),
        label: group.label().to_string(),
        dim: group.dim(),
        field: FieldInfo {
            p: field.characteristic(),
            e: field.degree(),
            q: field.order(),
            modulus: field.modulus().map(<[u32]>::to_vec),
        },
        order: group.elements()?.len(),
        coprime: group.coprime_check()?,
        contains_scalars: group.contains_scalars()?,
        min_supp: group.min_supp()?,
        min_supp_projective: group.min_supp_projective()?,
        spectra: Spectra {
            fixed: spectrum_entries(&fixed),
            projective: spectrum_entries(&projective),
        },
    };
    if let Some(path) = dump {
        std::fs::write(path, group.to_dump()?).map_err(|e| CliError::io(path, e))?;
    }
    let mut out = sink(&cfg)?;
    match out.format() {
        Format::Json => out.json(&info)?,
        Format::Csv => {
            for s in [&fixed, &projective] {
                for (&support, &count) in &s.counts {
                    out.csv(&SpectrumRow {
                        support,
                        count,
                        kind: s.kind.to_string(),
                    })?;
                }
            }
        }
    }
    out.finish()
}

fn emit(out: &mut Sink, rec: &PbRecord) -> CliResult<()> {
    match out.format() {
        Format::Json => out.json(rec),
        Format::Csv => out.csv(&PbCsvRow::from(rec)),
    }
}

fn bounds_record(
    cfg: &RunConfig,
    group: &MatrixGroup,
    c: u32,
    mr: Option<&String>,
    cases: &[String],
) -> CliResult<PbRecord> {
    let start = Instant::now();
    let mr = mr.map(|s| parse_mr(s)).transpose()?;
    let wanted = parse_cases(cases)?;
    let mut report = bound_report(group, c, mr)?;
    report.closed_forms.retain(|b| wanted.contains(&b.case));
    Ok(PbRecord::from_bounds(
        &cfg.group,
        &report,
        elapsed_ms(start),
    ))
}

pub fn pb(run: &Overrides) -> CliResult<()> {
    let cfg = load(run)?;
    let cs = cfg.c.values();
    // Formulas need no enumeration; everything else builds the group once.
    let group = match cfg.method {
        Method::Formula => None,
        _ => Some(enumerate(&cfg)?),
    };
    let mut records = Vec::with_capacity(cs.len());
    for &c in &cs {
        let rec = match (cfg.method, &group) {
            (Method::Bounds, Some(g)) => bounds_record(&cfg, g, c, cfg.mr.as_ref(), &cfg.cases)?,
            (method, g) => {
                let start = Instant::now();
                let est = match (method, g) {
                    (Method::Formula, _) => PbEstimate::from_formula(&cfg.group, c)?,
                    (Method::Montecarlo, Some(g)) => {
                        pb_monte_carlo(g, c, cfg.trials(), cfg.seed.expect("validated"))?
                    }
                    (_, Some(g)) => pb_bruteforce(g, c, cfg.tuple_cap())?,
                    (_, None) => unreachable!("group built for every method but formula"),
                };
                PbRecord::from_estimate(&cfg.group, c, &est, elapsed_ms(start))
            }
        };
        records.push(rec);
    }
    let mut out = sink(&cfg)?;
    for rec in &records {
        emit(&mut out, rec)?;
    }
    out.finish()
}

#[derive(Serialize)]
struct ClosedFormsOnly {
    q: u64,
    dim: u64,
    c: u32,
    closed_forms: Vec<ClosedFormRecord>,
}

#[derive(Serialize)]
struct ClosedFormRow {
    q: u64,
    dim: u64,
    c: u32,
    case: &'static str,
    value: f64,
    vacuous: bool,
    in_regime: bool,
}

pub fn bounds(
    run: &Overrides,
    q: Option<u64>,
    dim: Option<u64>,
    cases: Option<Vec<String>>,
    mr: Option<String>,
) -> CliResult<()> {
    if run.config.is_some() {
        let mut cfg = load(run)?;
        if let Some(cases) = cases {
            cfg.cases = cases;
        }
        if mr.is_some() {
            cfg.mr = mr;
        }
        cfg.validate()?;
        let group = enumerate(&cfg)?;
        let mut out = sink(&cfg)?;
        for c in cfg.c.values() {
            let rec = bounds_record(&cfg, &group, c, cfg.mr.as_ref(), &cfg.cases)?;
            emit(&mut out, &rec)?;
        }
        return out.finish();
    }
    let (Some(q), Some(dim)) = (q, dim) else {
        return Err(CliError::Config(
            "bounds needs either --config PATH or both --q and --dim".into(),
        ));
    };
    let wanted = parse_cases(&cases.unwrap_or_default())?;
    let cs = run.c.clone().map_or_else(|| vec![1], |c| c.0);
    let mut out = Sink::open(run.out.as_deref(), run.format.unwrap_or_default())?;
    for c in cs {
        let params = ClosedFormParams::new(q, dim, c);
        let forms = wanted
            .iter()
            .map(|&case| closed_form_bound(case, &params))
            .collect::<cobase_core::Result<Vec<_>>>()?;
        match out.format() {
            Format::Json => out.json(&ClosedFormsOnly {
                q,
                dim,
                c,
                closed_forms: forms.iter().map(ClosedFormRecord::from).collect(),
            })?,
            Format::Csv => {
                for f in &forms {
                    out.csv(&ClosedFormRow {
                        q,
                        dim,
                        c,
                        case: f.case.name(),
                        value: f.value,
                        vacuous: f.vacuous,
                        in_regime: f.in_regime,
                    })?;
                }
            }
        }
    }
    out.finish()
}

#[derive(Serialize)]
struct Summary {
    summary: bool,
    total: usize,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
struct ThreeCycleCsvRow {
    m: usize,
    lambda: String,
    degree: String,
    value_at_3cycle: String,
    slack_numerator: String,
    slack_denominator: String,
}

fn threecycle_rows(out: &mut Sink, m_max: usize) -> CliResult<()> {
    for m in 3..=m_max {
        let report = verify_threecycle(m)?;
        for row in report.rows {
            out.csv(&ThreeCycleCsvRow {
                m,
                lambda: row.partition.to_string(),
                degree: row.degree.to_string(),
                value_at_3cycle: row.value_at_3cycle.to_string(),
                slack_numerator: row.slack.numer().to_string(),
                slack_denominator: row.slack.denom().to_string(),
            })?;
        }
    }
    Ok(())
}

/// Runs a suite. JSON gives one record per check and a closing summary; CSV
/// gives the 3-cycle sweep for `chars` and one row per check otherwise.
pub fn verify(
    suite: Suite,
    opts: &VerifyOptions,
    out_path: Option<&Path>,
    format: Format,
) -> CliResult<()> {
    let checks = run_suite(suite, opts);
    let mut out = Sink::open(out_path, format)?;
    match format {
        Format::Json => {
            for check in &checks {
                out.json(check)?;
            }
        }
        Format::Csv if suite == Suite::Chars => threecycle_rows(&mut out, opts.m_max)?,
        Format::Csv => {
            for check in &checks {
                out.csv(check)?;
            }
        }
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    if format == Format::Json {
        out.json(&Summary {
            summary: true,
            total: checks.len(),
            passed: checks.len() - failed,
            failed,
        })?;
    }
    out.finish()?;
    for check in checks.iter().filter(|c| !c.passed) {
        eprintln!("FAIL {}: {}", check.name, check.detail);
    }
    if failed > 0 {
        return Err(CliError::Verification {
            failed,
            total: checks.len(),
        });
    }
    Ok(())
}
