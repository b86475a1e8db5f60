use std::fmt::Write;

use dyckroots_core::dyck::{enumerate_paths_capped, oracle_triangle_parallel, CoeffTriangle, Provenance};
use dyckroots_core::polyarith::format_rat;
use dyckroots_core::rootcert::isolate_real_roots;
use dyckroots_core::triangle::triangle as build_triangle;
use serde_json::{json, Value};

use crate::{source_name, CliError, Format, Global, Output, Source, GENERAL_CAP};

fn build(g: &Global, n: u32, source: Source) -> Result<CoeffTriangle, CliError> {
    g.source_cap(source, n)?;
    let t = match source {
        Source::Oracle => oracle_triangle_parallel(n, g.oracle_cap())?,
        _ => build_triangle(n, Provenance::from(source), g.oracle_cap())?,
    };
    Ok(t)
}

fn ok(text: String) -> Result<Output, CliError> {
    Ok(Output { text, code: 0 })
}

fn json_text(v: &Value) -> Result<Output, CliError> {
    let text = serde_json::to_string_pretty(v).map_err(|e| CliError::Internal(e.to_string()))?;
    ok(text + "\n")
}

fn rows_csv<'a>(n: u32, rows: impl Iterator<Item = (u32, u32, String)> + 'a) -> String {
    let mut s = String::from("n,k,m,value\n");
    for (k, m, v) in rows {
        let _ = writeln!(s, "{n},{k},{m},{v}");
    }
    s
}

fn rows_json(n: u32, rows: impl Iterator<Item = (u32, u32, String)>) -> Vec<Value> {
    rows.map(|(k, m, v)| json!({"n": n, "k": k, "m": m, "value": v}))
        .collect()
}

pub fn triangle(g: &Global, n: u32, source: Source) -> Result<Output, CliError> {
    let t = build(g, n, source)?;
    let rows = || t.entries().map(|(k, m, v)| (k, m, v.to_string()));
    match g.format.unwrap_or(Format::Csv) {
        Format::Csv => ok(rows_csv(n, rows())),
        Format::Json => json_text(&json!({
            "n": n,
            "source": source_name(source),
            "entries": rows_json(n, rows()),
        })),
    }
}

pub fn poly(g: &Global, n: u32, k: u32, source: Source) -> Result<Output, CliError> {
    if k > n {
        return Err(CliError::Usage(format!("W_{{n,k}} needs k <= n, got n = {n}, k = {k}")));
    }
    let t = build(g, n, source)?;
    let row: Vec<(u32, u32, String)> = t
        .entries()
        .filter(|(kk, _, _)| *kk == k)
        .map(|(kk, m, v)| (kk, m, v.to_string()))
        .collect();
    match g.format.unwrap_or(Format::Csv) {
        Format::Csv => ok(rows_csv(n, row.into_iter())),
        Format::Json => {
            let degree = row.last().map_or(-1, |(_, m, _)| *m as i64);
            let mut coeffs = vec!["0".to_string(); (degree + 1) as usize];
            for (_, m, v) in &row {
                coeffs[*m as usize] = v.clone();
            }
            json_text(&json!({
                "n": n,
                "k": k,
                "source": source_name(source),
                "degree": degree,
                "coeffs": coeffs,
            }))
        }
    }
}

pub fn roots(g: &Global, n: u32, k: u32) -> Result<Output, CliError> {
    g.cap(GENERAL_CAP, "roots", n)?;
    if k > n {
        return Err(CliError::Usage(format!("W_{{n,k}} needs k <= n, got n = {n}, k = {k}")));
    }
    let w = dyckroots_core::triangle::w_poly(n, k)?;
    if w.poly.is_zero() {
        return Err(CliError::Usage(format!(
            "W_{{{n},{k}}} is the zero polynomial; every number is a root"
        )));
    }
    let profile = isolate_real_roots(&w.poly.to_rat())?;
    match g.format.unwrap_or(Format::Json) {
        Format::Csv => {
            let mut s = String::from("lo,hi,multiplicity,exact\n");
            for r in &profile.roots {
                let exact = r.exact.as_ref().map(format_rat).unwrap_or_default();
                let _ = writeln!(
                    s,
                    "{},{},{},{exact}",
                    format_rat(&r.lo),
                    format_rat(&r.hi),
                    r.multiplicity
                );
            }
            ok(s)
        }
        Format::Json => {
            let roots: Vec<Value> = profile
                .roots
                .iter()
                .map(|r| {
                    let mut v = json!({
                        "lo": format_rat(&r.lo),
                        "hi": format_rat(&r.hi),
                        "multiplicity": r.multiplicity,
                    });
                    if let Some(x) = &r.exact {
                        v["exact"] = json!(format_rat(x));
                    }
                    v
                })
                .collect();
            json_text(&json!({
                "n": n,
                "k": k,
                "coeffs": w.poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "degree": w.poly.degree(),
                "real_root_count": profile.real_root_count(),
                "real_rooted": profile.is_real_rooted(),
                "roots": roots,
            }))
        }
    }
}

pub fn paths(g: &Global, n: u32, k: Option<u32>, m: Option<u32>, limit: Option<u64>) -> Result<Output, CliError> {
    g.cap(crate::ORACLE_CAP, "paths", n)?;
    let selected = enumerate_paths_capped(n, g.oracle_cap())?
        .map(|p| (p.stats(), p))
        .filter(|(s, _)| k.is_none_or(|k| s.k == k) && m.is_none_or(|m| s.m == m))
        .take(limit.map_or(usize::MAX, |l| l.min(usize::MAX as u64) as usize));
    match g.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut s = String::from("path,k,m\n");
            for (st, p) in selected {
                let _ = writeln!(s, "{p},{},{}", st.k, st.m);
            }
            ok(s)
        }
        Format::Json => {
            let paths: Vec<Value> = selected
                .map(|(st, p)| json!({"path": p.to_string(), "k": st.k, "m": st.m}))
                .collect();
            json_text(&json!({"n": n, "count": paths.len(), "paths": paths}))
        }
    }
}
