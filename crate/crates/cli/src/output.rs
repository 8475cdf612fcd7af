//! Text, CSV and JSON writers.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use num_complex::Complex64;
use serde_json::{json, Map, Value};
use zetakit::identity::IdentityReport;
use zetakit::selftest::SelftestReport;
use zetakit::EvalResult;

use crate::functions::Function;
use crate::parse::{fmt_complex, fmt_exact, fmt_real, round15};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub struct Sink(Box<dyn Write>);

impl Sink {
    pub fn open(path: Option<&Path>) -> io::Result<Sink> {
        Ok(Sink(match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        }))
    }

    pub fn line(&mut self, s: &str) -> io::Result<()> {
        writeln!(self.0, "{s}")
    }
}

impl Write for Sink {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        self.0.write(buf)
    }
    fn flush(&mut self) -> io::Result<()> {
        self.0.flush()
    }
}

pub struct Row {
    pub point: BTreeMap<String, Complex64>,
    pub result: zetakit::Result<EvalResult>,
}

impl Row {
    pub fn new(point: BTreeMap<String, Complex64>, result: zetakit::Result<EvalResult>) -> Row {
        Row { point, result }
    }

    fn status(&self) -> &'static str {
        match &self.result {
            Ok(_) => "ok",
            Err(e) => e.kind(),
        }
    }
}

fn num(x: f64) -> Value {
    serde_json::Number::from_f64(round15(x)).map(Value::Number).unwrap_or(Value::Null)
}

fn cnum(z: Complex64) -> Value {
    json!({ "re": num(z.re), "im": num(z.im) })
}

fn cparam(z: Complex64) -> Value {
    let n = |x: f64| serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null);
    json!({ "re": n(z.re), "im": n(z.im) })
}

fn row_json(f: Function, row: &Row) -> Value {
    let mut m = Map::new();
    m.insert("function".into(), f.name().into());
    for name in f.params() {
        m.insert((*name).into(), cparam(row.point[*name]));
    }
    match &row.result {
        Ok(r) => {
            m.insert("value".into(), cnum(r.value));
            m.insert("err_estimate".into(), num(r.err_estimate));
            m.insert("strategy".into(), r.strategy.to_string().into());
            m.insert("work".into(), r.work.into());
        }
        Err(e) => {
            m.insert("error".into(), e.to_string().into());
        }
    }
    m.insert("status".into(), row.status().into());
    Value::Object(m)
}

pub fn write_rows(sink: &mut Sink, format: Format, f: Function, rows: &[Row], single: bool) -> io::Result<()> {
    match format {
        Format::Json => {
            let values: Vec<Value> = rows.iter().map(|r| row_json(f, r)).collect();
            let doc = if single { values[0].clone() } else { Value::Array(values) };
            serde_json::to_writer_pretty(&mut *sink, &doc)?;
            sink.line("")?;
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(&mut *sink);
            let mut header: Vec<String> = Vec::new();
            for name in f.params() {
                header.push(format!("{name}_re"));
                header.push(format!("{name}_im"));
            }
            header.extend(["re", "im", "err_estimate", "strategy", "work", "status"].map(String::from));
            w.write_record(&header)?;
            for row in rows {
                let mut rec: Vec<String> = Vec::new();
                for name in f.params() {
                    let v = row.point[*name];
                    rec.push(fmt_exact(v.re));
                    rec.push(fmt_exact(v.im));
                }
                match &row.result {
                    Ok(r) => rec.extend([
                        fmt_real(r.value.re),
                        fmt_real(r.value.im),
                        format!("{:.3e}", r.err_estimate),
                        r.strategy.to_string(),
                        r.work.to_string(),
                    ]),
                    Err(_) => rec.extend(std::iter::repeat_n(String::new(), 5)),
                }
                rec.push(row.status().into());
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
        Format::Text => {
            if single {
                let row = &rows[0];
                if let Ok(r) = &row.result {
                    sink.line(&format!("value        {}", fmt_complex(r.value)))?;
                    sink.line(&format!("err_estimate {:.3e}", r.err_estimate))?;
                    sink.line(&format!("strategy     {}", r.strategy))?;
                    sink.line(&format!("work         {}", r.work))?;
                }
            } else {
                for row in rows {
                    let params: Vec<String> = f
                        .params()
                        .iter()
                        .map(|n| format!("{n}={}", fmt_complex(row.point[*n])))
                        .collect();
                    let tail = match &row.result {
                        Ok(r) => format!("{:<40} {:>10.3e}  {}", fmt_complex(r.value), r.err_estimate, r.strategy),
                        Err(e) => format!("{:<40} {:>10}  {}", "-", "-", e),
                    };
                    sink.line(&format!("{:<36} {tail}", params.join(" ")))?;
                }
            }
        }
    }
    sink.flush()
}

pub fn write_reports(sink: &mut Sink, format: Format, reports: &[IdentityReport]) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *sink, reports)?;
            sink.line("")?;
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(&mut *sink);
            w.write_record(["name", "points_tested", "max_rel_err", "mean_rel_err", "worst_point", "pass"])?;
            for r in reports {
                w.write_record([
                    r.name.clone(),
                    r.points_tested.to_string(),
                    format!("{:.3e}", r.max_rel_err),
                    format!("{:.3e}", r.mean_rel_err),
                    r.worst_point.as_ref().map(|p| p.to_string()).unwrap_or_default(),
                    r.pass.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in reports {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                let mut line = format!("{verdict}  {:<26} n={:<4} max_rel_err={:.3e}", r.name, r.points_tested, r.max_rel_err);
                if let Some(e) = &r.error {
                    line.push_str(&format!("  ({e})"));
                } else if !r.pass {
                    if let Some(p) = &r.worst_point {
                        line.push_str(&format!("  worst at {p}"));
                    }
                }
                sink.line(&line)?;
            }
            let passed = reports.iter().filter(|r| r.pass).count();
            sink.line(&format!("{passed}/{} identities passed", reports.len()))?;
        }
    }
    sink.flush()
}

pub fn write_selftest(sink: &mut Sink, format: Format, report: &SelftestReport) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *sink, report)?;
            sink.line("")?;
        }
        Format::Csv | Format::Text => {
            for g in &report.golden {
                let verdict = if g.pass { "PASS" } else { "FAIL" };
                let mut line = format!(
                    "{verdict}  {:<26} {:<24} rel_err={:.3e} tol={:.0e}",
                    g.name,
                    fmt_complex(g.computed),
                    g.rel_err,
                    g.tol
                );
                if let Some(e) = &g.error {
                    line.push_str(&format!("  ({e})"));
                }
                sink.line(&line)?;
            }
            write_reports(sink, Format::Text, &report.identities)?;
            for n in &report.printed_forms {
                let holds = if n.holds { "holds" } else { "does not hold" };
                sink.line(&format!("note  {} printed form {holds} (max_rel_err={:.3e})", n.identity, n.max_rel_err))?;
            }
            sink.line(&format!(
                "golden {}/{}, identities {}/{}: {}",
                report.golden_passed,
                report.golden.len(),
                report.identities_passed,
                report.identities.len(),
                if report.pass { "PASS" } else { "FAIL" }
            ))?;
        }
    }
    sink.flush()
}
