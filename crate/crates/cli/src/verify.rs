use std::collections::BTreeMap;

use dyckroots_core::dyck::oracle_triangle_parallel;
use dyckroots_core::error::Operand;
use dyckroots_core::polyarith::{format_rat, RatPoly};
use dyckroots_core::rootcert::{
    certify_real_rooted, check_liu_wang_hypotheses, isolate_real_roots, radical, same_root_set,
    verify_generalized_sturm, verify_sturm_unimodal, Direction, InterlaceVerdict, LiuWangCondition, LiuWangFailure,
    RootLabel,
};
use dyckroots_core::triangle::{
    check_symmetry, fixed_k_family, fixed_n_family, formula_triangle, rec_fixed_k_triangle, rec_fixed_n_triangle,
    w_poly,
};
use dyckroots_core::Error as CoreError;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::range::IndexRange;
use crate::report::{Detail, Report, Verdict};
use crate::{CliError, Global, Target, GENERAL_CAP, ORACLE_CAP};

type Indices<'a> = &'a [(&'a str, i64)];

fn w(n: u32, k: u32) -> Result<RatPoly, CoreError> {
    Ok(w_poly(n, k)?.poly.to_rat())
}

/// Turns a failed computation into a detail: internal errors are reported as
/// errors, anything else as a failure of the property being checked.
fn guard(check: &str, indices: Indices, r: Result<Vec<Detail>, CoreError>) -> Vec<Detail> {
    match r {
        Ok(d) => d,
        Err(e) => {
            let verdict = if e.is_internal() { Verdict::Error } else { Verdict::Fail };
            vec![Detail::new(check, indices, verdict).with_witness(json!({"error": e.to_string()}))]
        }
    }
}

/// Evaluates `items` in the scheduled order, possibly in parallel, and
/// reassembles the details in item order.
fn evaluate<T: Sync>(g: &Global, items: &[T], f: impl Fn(&T) -> Vec<Detail> + Sync) -> Vec<Detail> {
    let mut done: Vec<(usize, Vec<Detail>)> = g
        .schedule(items.len())
        .into_par_iter()
        .map(|i| (i, f(&items[i])))
        .collect();
    done.sort_by_key(|(i, _)| *i);
    done.into_iter().flat_map(|(_, d)| d).collect()
}

fn label_json(l: &RootLabel, g: Indices, f: Indices) -> Value {
    let who = if l.poly == Operand::G { g } else { f };
    let mut v = json!({
        "poly": who.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
        "root_index": l.index,
        "lo": format_rat(&l.lo),
        "hi": format_rat(&l.hi),
    });
    if let Some(x) = &l.exact {
        v["exact"] = json!(format_rat(x));
    }
    v
}

/// Why `lower ⪯ upper` fails; `g` and `f` name the two operands.
fn direction_json(d: &Direction, g: Indices, f: Indices) -> Value {
    match d {
        Direction::Holds | Direction::HoldsByConvention => Value::Null,
        Direction::DegreeMismatch { lower, upper } => json!({
            "reason": "degree",
            "lower_degree": lower,
            "upper_degree": upper,
        }),
        Direction::OrderViolated(w) => json!({
            "reason": "order",
            "left": label_json(&w.left, g, f),
            "right": label_json(&w.right, g, f),
        }),
    }
}

fn verdict_info(v: &InterlaceVerdict) -> Value {
    json!({
        "rising": v.g_interlaces_f(),
        "falling": v.f_interlaces_g(),
        "by_convention": v.g_into_f == Direction::HoldsByConvention || v.f_into_g == Direction::HoldsByConvention,
    })
}

fn range_json(r: &IndexRange) -> Value {
    json!(r.to_string())
}

fn params(target: &str, extra: &[(&str, Value)]) -> BTreeMap<String, Value> {
    let mut p: BTreeMap<String, Value> = extra.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    p.insert("target".into(), json!(target));
    p
}

fn check_range(lo: u32, hi: u32, what: &str) -> Result<(), CliError> {
    if lo > hi {
        return Err(CliError::Usage(format!("empty range for {what}: {lo} > {hi}")));
    }
    Ok(())
}

pub fn run(g: &Global, target: &Target) -> Result<Report, CliError> {
    let (name, parameters, details) = match target {
        Target::Realroots { n_min, n_max } => {
            check_range(*n_min, *n_max, "n")?;
            g.cap(GENERAL_CAP, "realroots", *n_max)?;
            let items: Vec<(u32, u32)> = (*n_min..=*n_max).flat_map(|n| (0..=n).map(move |k| (n, k))).collect();
            let details = evaluate(g, &items, |&(n, k)| {
                let idx = [("n", n as i64), ("k", k as i64)];
                guard("real-rooted", &idx, real_rooted(n, k, &idx))
            });
            (
                "realroots",
                params("realroots", &[("n_min", json!(n_min)), ("n_max", json!(n_max))]),
                details,
            )
        }
        Target::Samezeros { n_min, n_max } => {
            check_range(*n_min, *n_max, "n")?;
            g.cap(GENERAL_CAP, "samezeros", *n_max)?;
            let items: Vec<(u32, u32)> = (*n_min..=*n_max).flat_map(|n| (1..n).map(move |k| (n, k))).collect();
            let details = evaluate(g, &items, |&(n, k)| {
                let idx = [("n", n as i64), ("k", k as i64)];
                guard("same-zeros", &idx, same_zeros(n, k, &idx))
            });
            (
                "samezeros",
                params("samezeros", &[("n_min", json!(n_min)), ("n_max", json!(n_max))]),
                details,
            )
        }
        Target::Symmetry { k_min, k_max } => {
            check_range(*k_min, *k_max, "k")?;
            if *k_min == 0 {
                return Err(CliError::Usage("symmetry needs k >= 1".into()));
            }
            g.cap(GENERAL_CAP, "symmetry", 2 * k_max + 1)?;
            let items: Vec<u32> = (*k_min..=*k_max).collect();
            let details = evaluate(g, &items, |&k| {
                let idx = [("k", k as i64), ("n", 2 * k as i64 + 1)];
                guard(
                    "symmetry",
                    &idx,
                    check_symmetry(k).map(|s| {
                        vec![Detail::from_bool("symmetry", &idx, s.holds).witness_if_failed(|| json!({"m": s.witness}))]
                    }),
                )
            });
            (
                "symmetry",
                params("symmetry", &[("k_min", json!(k_min)), ("k_max", json!(k_max))]),
                details,
            )
        }
        Target::SturmK { k, n_max } => {
            fixed_k_range(g, k, *n_max)?;
            let items: Vec<u32> = k.iter().collect();
            let details = evaluate(g, &items, |&k| {
                guard("generalized-sturm", &[("k", k as i64)], sturm_k(k, *n_max))
            });
            (
                "sturm-k",
                params("sturm-k", &[("k", range_json(k)), ("n_max", json!(n_max))]),
                details,
            )
        }
        Target::UnimodalN { n } => {
            if n.lo == 0 {
                return Err(CliError::Usage("unimodal-n needs n >= 1".into()));
            }
            g.cap(GENERAL_CAP, "unimodal-n", n.hi)?;
            let items: Vec<u32> = n.iter().collect();
            let details = evaluate(g, &items, |&n| {
                guard("sturm-unimodal", &[("n", n as i64)], unimodal_n(n))
            });
            ("unimodal-n", params("unimodal-n", &[("n", range_json(n))]), details)
        }
        Target::LiuWangK { k, n_max } => {
            fixed_k_range(g, k, *n_max)?;
            if *n_max < k.hi + 1 {
                return Err(CliError::Usage("liu-wang-k needs n_max >= k + 1".into()));
            }
            let items: Vec<u32> = k.iter().collect();
            let details = evaluate(g, &items, |&k| {
                let idx = [("k", k as i64)];
                guard(
                    "liu-wang",
                    &idx,
                    fixed_k_family(k, n_max - k + 1).and_then(|f| {
                        // F_i = W_{k+i,k}
                        liu_wang(&f.seq, &f.a, &f.b, &idx, |i| {
                            vec![("n", (k + i) as i64), ("k", k as i64)]
                        })
                    }),
                )
            });
            (
                "liu-wang-k",
                params("liu-wang-k", &[("k", range_json(k)), ("n_max", json!(n_max))]),
                details,
            )
        }
        Target::LiuWangN { n } => {
            if n.lo < 3 {
                return Err(CliError::Usage(
                    "liu-wang-n needs n >= 3 so that the rising half has two members".into(),
                ));
            }
            g.cap(GENERAL_CAP, "liu-wang-n", n.hi)?;
            let items: Vec<u32> = n.iter().collect();
            let details = evaluate(g, &items, |&n| {
                let idx = [("n", n as i64)];
                guard(
                    "liu-wang",
                    &idx,
                    fixed_n_family(n).and_then(|f| {
                        // F_i = W_{n,i+1}
                        liu_wang(&f.seq, &f.a, &f.b, &idx, |i| {
                            vec![("n", n as i64), ("k", (i + 1) as i64)]
                        })
                    }),
                )
            });
            ("liu-wang-n", params("liu-wang-n", &[("n", range_json(n))]), details)
        }
        Target::RecAgree { n_min, n_max } => {
            check_range(*n_min, *n_max, "n")?;
            g.cap(GENERAL_CAP, "rec-agree", *n_max)?;
            let items: Vec<u32> = (*n_min..=*n_max).collect();
            let details = evaluate(g, &items, |&n| {
                let idx = [("n", n as i64)];
                let mut out = guard("rec-k-agree", &idx, agree("rec-k-agree", n, rec_fixed_k_triangle));
                out.extend(guard(
                    "rec-n-agree",
                    &idx,
                    agree("rec-n-agree", n, rec_fixed_n_triangle),
                ));
                out
            });
            (
                "rec-agree",
                params("rec-agree", &[("n_min", json!(n_min)), ("n_max", json!(n_max))]),
                details,
            )
        }
        Target::OracleAgree { n_min, n_max } => {
            check_range(*n_min, *n_max, "n")?;
            g.cap(ORACLE_CAP, "oracle-agree", *n_max)?;
            let cap = g.oracle_cap();
            if *n_max > cap {
                return Err(CoreError::CapExceeded { n: *n_max, cap }.into());
            }
            let items: Vec<u32> = (*n_min..=*n_max).collect();
            let details = evaluate(g, &items, |&n| {
                let idx = [("n", n as i64)];
                guard(
                    "oracle-agree",
                    &idx,
                    agree("oracle-agree", n, |n| oracle_triangle_parallel(n, cap)),
                )
            });
            (
                "oracle-agree",
                params("oracle-agree", &[("n_min", json!(n_min)), ("n_max", json!(n_max))]),
                details,
            )
        }
    };
    Ok(Report::new(&format!("verify {name}"), parameters, details))
}

fn fixed_k_range(g: &Global, k: &IndexRange, n_max: u32) -> Result<(), CliError> {
    if k.lo == 0 {
        return Err(CliError::Usage("fixed-k sequences need k >= 1".into()));
    }
    if n_max < k.hi {
        return Err(CliError::Usage(format!("n_max = {n_max} is below k = {}", k.hi)));
    }
    g.cap(GENERAL_CAP, "fixed-k", n_max)
}

fn real_rooted(n: u32, k: u32, idx: Indices) -> Result<Vec<Detail>, CoreError> {
    let p = w(n, k)?;
    if p.is_zero() {
        // W_{n,0} for n >= 1
        return Ok(vec![
            Detail::pass("real-rooted", idx).with_info(json!({"zero_polynomial": true}))
        ]);
    }
    let ok = certify_real_rooted(&p)?;
    let d = Detail::from_bool("real-rooted", idx, ok);
    Ok(vec![if ok {
        d
    } else {
        let count = isolate_real_roots(&p)?.real_root_count();
        d.with_witness(json!({"degree": p.degree(), "real_root_count": count}))
    }])
}

fn same_zeros(n: u32, k: u32, idx: Indices) -> Result<Vec<Detail>, CoreError> {
    let (p, q) = (w(n, k)?, w(n, n - k)?);
    let ok = same_root_set(&p, &q)?;
    let d = Detail::from_bool("same-zeros", idx, ok);
    Ok(vec![if ok {
        d
    } else {
        d.with_witness(json!({
            "radical_k": radical(&p)?.to_string(),
            "radical_n_minus_k": radical(&q)?.to_string(),
        }))
    }])
}

fn sturm_k(k: u32, n_max: u32) -> Result<Vec<Detail>, CoreError> {
    let seq = (k..=n_max).map(|n| w(n, k)).collect::<Result<Vec<_>, _>>()?;
    let report = verify_generalized_sturm(&seq)?;
    let mut out = Vec::new();
    for (i, v) in report.verdicts.iter().enumerate() {
        let n = (k + i as u32) as i64;
        let idx = [("k", k as i64), ("n", n)];
        let (gi, fi) = ([("n", n), ("k", k as i64)], [("n", n + 1), ("k", k as i64)]);
        // W_{n,k} ⪯ W_{n+1,k}
        out.push(
            Detail::from_bool("interlace-next-n", &idx, v.g_interlaces_f())
                .witness_if_failed(|| direction_json(&v.g_into_f, &gi, &fi)),
        );
    }
    let failing: Vec<u32> = report.failures.iter().map(|&i| k + i as u32).collect();
    out.push(
        Detail::from_bool("generalized-sturm", &[("k", k as i64)], report.is_generalized_sturm)
            .witness_if_failed(|| json!({"failing_n": failing})),
    );
    Ok(out)
}

fn unimodal_n(n: u32) -> Result<Vec<Detail>, CoreError> {
    let seq = (1..=n).map(|k| w(n, k)).collect::<Result<Vec<_>, _>>()?;
    let report = verify_sturm_unimodal(&seq)?;
    let mut out = Vec::new();
    for (i, v) in report.verdicts.iter().enumerate() {
        let k = i as i64 + 1;
        let idx = [("n", n as i64), ("k", k)];
        let (gi, fi) = ([("n", n as i64), ("k", k)], [("n", n as i64), ("k", k + 1)]);
        // relation between W_{n,k} and W_{n,k+1}
        let d = Detail::from_bool("interlace-pair", &idx, !report.failures.contains(&i))
            .with_info(verdict_info(v))
            .witness_if_failed(|| {
                json!({
                    "rising": direction_json(&v.g_into_f, &gi, &fi),
                    "falling": direction_json(&v.f_into_g, &gi, &fi),
                })
            });
        out.push(d);
    }
    out.push(
        Detail::from_bool("sturm-unimodal", &[("n", n as i64)], report.is_sturm_unimodal())
            .with_info(json!({"peaks": report.peaks}))
            .witness_if_failed(|| json!({"failing_k": report.failures.iter().map(|i| i + 1).collect::<Vec<_>>()})),
    );
    Ok(out)
}

fn condition_name(c: LiuWangCondition) -> &'static str {
    match c {
        LiuWangCondition::NonnegativeCoefficients => "liu-wang:nonnegative-coefficients",
        LiuWangCondition::BaseInterlacing => "liu-wang:base-interlacing",
        LiuWangCondition::DegreeGrowth => "liu-wang:degree-growth",
        LiuWangCondition::Recurrence => "liu-wang:recurrence",
        LiuWangCondition::BNonpositive => "liu-wang:b-nonpositive",
    }
}

fn liu_wang(
    seq: &[RatPoly],
    a: &[RatPoly],
    b: &[RatPoly],
    idx: Indices,
    member: impl Fn(u32) -> Vec<(&'static str, i64)>,
) -> Result<Vec<Detail>, CoreError> {
    let report = check_liu_wang_hypotheses(seq, a, b)?;
    let named = |i: usize| -> Value {
        member(i as u32)
            .into_iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect::<serde_json::Map<_, _>>()
            .into()
    };
    let failure_json = |f: &LiuWangFailure| -> Value {
        match f {
            LiuWangFailure::NegativeCoefficient { index } => json!({"poly": named(*index)}),
            LiuWangFailure::BaseNotRealRooted { index } => json!({"poly": named(*index), "reason": "not real-rooted"}),
            LiuWangFailure::BaseNotInterlacing { verdict } => {
                let (g0, g1) = (member(0), member(1));
                direction_json(&verdict.g_into_f, &g0, &g1)
            }
            LiuWangFailure::DegreeGrowth { index, from, to } => {
                json!({"poly": named(*index), "next": named(index + 1), "from": from, "to": to})
            }
            LiuWangFailure::RecurrenceMismatch { index } => json!({"step": index, "target": named(index + 2)}),
            LiuWangFailure::BPositive { index, at } => json!({"step": index, "at": format_rat(at)}),
        }
    };
    use LiuWangCondition::*;
    let out = [
        NonnegativeCoefficients,
        BaseInterlacing,
        DegreeGrowth,
        Recurrence,
        BNonpositive,
    ]
    .into_iter()
    .map(|c| {
        let fails: Vec<Value> = report
            .failures
            .iter()
            .filter(|f| f.condition() == c)
            .map(failure_json)
            .collect();
        let d = Detail::from_bool(condition_name(c), idx, fails.is_empty()).with_info(json!({"steps": report.steps}));
        if fails.is_empty() {
            d
        } else {
            d.with_witness(json!(fails))
        }
    })
    .collect();
    Ok(out)
}

fn agree(
    check: &str,
    n: u32,
    build: impl Fn(u32) -> Result<dyckroots_core::dyck::CoeffTriangle, CoreError>,
) -> Result<Vec<Detail>, CoreError> {
    let got = build(n)?;
    let want = formula_triangle(n)?;
    let diff = got.diff(&want);
    let d = Detail::from_bool(check, &[("n", n as i64)], diff.is_empty());
    Ok(vec![match diff.first() {
        None => d,
        Some((k, m, a, b)) => d.with_witness(json!({
            "k": k,
            "m": m,
            "got": a.to_string(),
            "formula": b.to_string(),
            "differing_entries": diff.len(),
        })),
    }])
}
