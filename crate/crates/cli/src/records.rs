//! Output records and the JSON-lines / CSV writers.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use cobase_core::group::SupportSpectrum;
use cobase_core::probability::{BoundReport, ClosedFormBound, PbValue};
use cobase_core::{GroupSpec, PbEstimate};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::config::Format;
use crate::error::{CliError, CliResult};

/// An exact rational; numerator and denominator are strings so that big
/// values survive JSON readers limited to doubles.
#[derive(Clone, Debug, Serialize)]
pub struct Rational {
    pub num: String,
    pub den: String,
    pub float: f64,
}

impl From<&BigRational> for Rational {
    fn from(r: &BigRational) -> Rational {
        Rational {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
            float: r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    pub support: usize,
    pub count: u64,
}

pub fn spectrum_entries(s: &SupportSpectrum) -> Vec<SpectrumEntry> {
    s.counts
        .iter()
        .map(|(&support, &count)| SpectrumEntry { support, count })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormRecord {
    #[serde(flatten)]
    pub bound: ClosedFormBound,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<Rational>,
}

impl From<&ClosedFormBound> for ClosedFormRecord {
    fn from(b: &ClosedFormBound) -> ClosedFormRecord {
        ClosedFormRecord {
            exact: b.exact.as_ref().map(Rational::from),
            bound: b.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsRecord {
    pub q: u64,
    pub dim: usize,
    pub c: u32,
    pub order: usize,
    pub min_supp: Option<usize>,
    pub mr: Option<Rational>,
    pub spectrum: Vec<SpectrumEntry>,
    pub union_bound: Rational,
    pub minsupp_bound: Rational,
    pub mr_bound: Option<f64>,
    pub closed_forms: Vec<ClosedFormRecord>,
}

impl From<&BoundReport> for BoundsRecord {
    fn from(r: &BoundReport) -> BoundsRecord {
        BoundsRecord {
            q: r.q,
            dim: r.dim,
            c: r.c,
            order: r.order,
            min_supp: r.min_supp,
            mr: r.mr.as_ref().map(Rational::from),
            spectrum: spectrum_entries(&r.spectrum),
            union_bound: (&r.union_bound).into(),
            minsupp_bound: (&r.minsupp_bound).into(),
            mr_bound: r.mr_bound,
            closed_forms: r.closed_forms.iter().map(ClosedFormRecord::from).collect(),
        }
    }
}

/// One `(group, c)` result of the `pb` command.
#[derive(Clone, Debug, Serialize)]
pub struct PbRecord {
    pub spec: GroupSpec,
    pub label: String,
    pub c: u32,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_num: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_den: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_float: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub successes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ci_lo: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ci_hi: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsRecord>,
    pub wall_time_ms: u64,
}

impl PbRecord {
    fn empty(spec: &GroupSpec, c: u32, method: &'static str, wall_time_ms: u64) -> PbRecord {
        PbRecord {
            spec: spec.clone(),
            label: spec.to_string(),
            c,
            method,
            value_num: None,
            value_den: None,
            value_float: None,
            successes: None,
            ci_lo: None,
            ci_hi: None,
            trials: None,
            seed: None,
            bounds: None,
            wall_time_ms,
        }
    }

    pub fn from_estimate(
        spec: &GroupSpec,
        c: u32,
        est: &PbEstimate,
        wall_time_ms: u64,
    ) -> PbRecord {
        let method = match est.method {
            cobase_core::probability::Method::Bruteforce => "bruteforce",
            cobase_core::probability::Method::Formula => "formula",
            cobase_core::probability::Method::Montecarlo => "montecarlo",
        };
        let mut rec = PbRecord::empty(spec, c, method, wall_time_ms);
        match &est.value {
            PbValue::Exact(r) => {
                rec.value_num = Some(r.numer().to_string());
                rec.value_den = Some(r.denom().to_string());
            }
            PbValue::Sampled {
                successes,
                estimate,
                ci_lo,
                ci_hi,
            } => {
                rec.value_float = Some(*estimate);
                rec.successes = Some(*successes);
                rec.ci_lo = Some(*ci_lo);
                rec.ci_hi = Some(*ci_hi);
            }
        }
        rec.trials = est.trials;
        rec.seed = est.seed;
        rec
    }

    pub fn from_bounds(spec: &GroupSpec, report: &BoundReport, wall_time_ms: u64) -> PbRecord {
        let mut rec = PbRecord::empty(spec, report.c, "bounds", wall_time_ms);
        rec.bounds = Some(report.into());
        rec
    }
}

#[derive(Debug, Serialize)]
pub struct PbCsvRow<'a> {
    pub label: &'a str,
    pub c: u32,
    pub method: &'a str,
    pub value_num: Option<&'a str>,
    pub value_den: Option<&'a str>,
    pub value_float: Option<f64>,
    pub ci_lo: Option<f64>,
    pub ci_hi: Option<f64>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub union_bound: Option<f64>,
    pub minsupp_bound: Option<f64>,
    pub mr_bound: Option<f64>,
    pub bound_1: Option<f64>,
    pub bound_2a: Option<f64>,
    pub bound_2b: Option<f64>,
    pub bound_2c: Option<f64>,
    pub wall_time_ms: u64,
}

impl<'a> From<&'a PbRecord> for PbCsvRow<'a> {
    fn from(r: &'a PbRecord) -> PbCsvRow<'a> {
        let b = r.bounds.as_ref();
        let case = |name: &str| {
            b.and_then(|b| {
                b.closed_forms
                    .iter()
                    .find(|f| f.bound.case.name() == name)
                    .map(|f| f.bound.value)
            })
        };
        PbCsvRow {
            label: &r.label,
            c: r.c,
            method: r.method,
            value_num: r.value_num.as_deref(),
            value_den: r.value_den.as_deref(),
            value_float: r.value_float,
            ci_lo: r.ci_lo,
            ci_hi: r.ci_hi,
            trials: r.trials,
            seed: r.seed,
            union_bound: b.map(|b| b.union_bound.float),
            minsupp_bound: b.map(|b| b.minsupp_bound.float),
            mr_bound: b.and_then(|b| b.mr_bound),
            bound_1: case("1"),
            bound_2a: case("2a"),
            bound_2b: case("2b"),
            bound_2c: case("2c"),
            wall_time_ms: r.wall_time_ms,
        }
    }
}

/// Destination for records: a file or stdout, in one format.
pub struct Sink {
    format: Format,
    path: Option<PathBuf>,
    out: Box<dyn Write>,
    csv: Option<csv::Writer<Box<dyn Write>>>,
}

impl Sink {
    pub fn open(path: Option<&Path>, format: Format) -> CliResult<Sink> {
        let open = || -> CliResult<Box<dyn Write>> {
            Ok(match path {
                Some(p) => Box::new(BufWriter::new(
                    File::create(p).map_err(|e| CliError::io(p, e))?,
                )),
                None => Box::new(BufWriter::new(io::stdout())),
            })
        };
        let (out, csv): (Box<dyn Write>, _) = match format {
            Format::Json => (open()?, None),
            Format::Csv => (
                Box::new(io::sink()),
                Some(csv::Writer::from_writer(open()?)),
            ),
        };
        Ok(Sink {
            format,
            path: path.map(Path::to_path_buf),
            out,
            csv,
        })
    }

    pub fn format(&self) -> Format {
        self.format
    }

    fn io_err(&self, e: io::Error) -> CliError {
        CliError::io(self.path.clone().unwrap_or_else(|| "<stdout>".into()), e)
    }

    /// One JSON object per line.
    pub fn json<T: Serialize>(&mut self, record: &T) -> CliResult<()> {
        let line = serde_json::to_string(record).map_err(|e| self.io_err(e.into()))?;
        writeln!(self.out, "{line}").map_err(|e| self.io_err(e))
    }

    pub fn csv<T: Serialize>(&mut self, row: &T) -> CliResult<()> {
        let w = self.csv.as_mut().expect("csv sink");
        let r = w.serialize(row);
        r.map_err(|e| self.io_err(e.into()))
    }

    pub fn finish(mut self) -> CliResult<()> {
        if let Some(mut w) = self.csv.take() {
            w.flush().map_err(|e| self.io_err(e))?;
        }
        self.out.flush().map_err(|e| self.io_err(e))
    }
}
