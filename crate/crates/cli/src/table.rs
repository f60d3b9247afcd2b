use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use knot_torsion::bounds::{bound_report, ReportOptions};
use knot_torsion::knots::KnotExpr;

use crate::{TableFormat, EXIT_OBSTRUCTED, EXIT_OK};

#[derive(Debug, Serialize)]
struct TorusRow {
    p: u32,
    q: u32,
    ord_v: u32,
    bridge: u32,
    sharp: bool,
}

#[derive(Debug, Deserialize)]
struct InputRow {
    name: String,
    ord_v: u32,
    bridge: Option<u32>,
}

#[derive(Debug, Serialize)]
struct AuditRow {
    name: String,
    ord_v: u32,
    bridge: Option<u32>,
    verdict: &'static str,
}

impl AuditRow {
    fn new(r: InputRow) -> Self {
        let pass = r.bridge.is_none_or(|b| r.ord_v < b);
        AuditRow {
            name: r.name,
            ord_v: r.ord_v,
            bridge: r.bridge,
            verdict: if pass { "pass" } else { "fail" },
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn emit<R: Serialize>(
    rows: &[R],
    header: &[&str],
    cells: impl Fn(&R) -> Vec<String>,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<(), String> {
    let io = |e: std::io::Error| e.to_string();
    match format {
        TableFormat::Md => {
            writeln!(out, "| {} |", header.join(" | ")).map_err(io)?;
            let rule: Vec<&str> = header.iter().map(|_| "---").collect();
            writeln!(out, "| {} |", rule.join(" | ")).map_err(io)?;
            for r in rows {
                writeln!(out, "| {} |", cells(r).join(" | ")).map_err(io)?;
            }
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header).map_err(|e| e.to_string())?;
            for r in rows {
                w.write_record(cells(r)).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            out.write_all(&bytes).map_err(io)?;
        }
        TableFormat::JsonLines => {
            for r in rows {
                let line = serde_json::to_string(r).map_err(|e| e.to_string())?;
                writeln!(out, "{line}").map_err(io)?;
            }
        }
    }
    Ok(())
}

pub fn torus(max: u32, format: TableFormat, out: &mut dyn Write) -> Result<i32, String> {
    let mut rows = Vec::new();
    for p in 2..=max {
        for q in p + 1..=max {
            if gcd(p, q) != 1 {
                continue;
            }
            let report = bound_report(&KnotExpr::Torus(p, q), ReportOptions::default())
                .map_err(|e| e.to_string())?;
            let bridge = report.torus.as_ref().map_or(p, |t| t.bridge);
            rows.push(TorusRow {
                p,
                q,
                ord_v: report.ord_v,
                bridge,
                sharp: report.bound("bridge").is_some_and(|b| b.sharp()),
            });
        }
    }
    emit(
        &rows,
        &["p", "q", "ord_v", "bridge", "sharp"],
        |r| {
            vec![
                r.p.to_string(),
                r.q.to_string(),
                r.ord_v.to_string(),
                r.bridge.to_string(),
                r.sharp.to_string(),
            ]
        },
        format,
        out,
    )?;
    Ok(EXIT_OK)
}

pub fn ingest(
    path: &Path,
    format: TableFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    let text = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    if !text.iter().all(u8::is_ascii_whitespace) {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .flexible(true)
            .from_reader(text.as_slice());
        for rec in reader.deserialize::<InputRow>() {
            match rec {
                Ok(r) => rows.push(AuditRow::new(r)),
                Err(e) => errors.push(e.to_string()),
            }
        }
    }
    emit(
        &rows,
        &["name", "ord_v", "bridge", "verdict"],
        |r| {
            vec![
                r.name.clone(),
                r.ord_v.to_string(),
                r.bridge.map_or_else(String::new, |b| b.to_string()),
                r.verdict.to_string(),
            ]
        },
        format,
        out,
    )?;
    let failed = rows.iter().filter(|r| r.verdict == "fail").count();
    let notes: &mut dyn Write = if format == TableFormat::Md {
        writeln!(out).map_err(io)?;
        out
    } else {
        err
    };
    if !errors.is_empty() {
        writeln!(notes, "errors:").map_err(io)?;
        for e in &errors {
            writeln!(notes, "  {e}").map_err(io)?;
        }
    }
    writeln!(
        notes,
        "{} rows: {} pass, {failed} fail, {} malformed",
        rows.len(),
        rows.len() - failed,
        errors.len()
    )
    .map_err(io)?;
    Ok(if failed > 0 || !errors.is_empty() {
        EXIT_OBSTRUCTED
    } else {
        EXIT_OK
    })
}
