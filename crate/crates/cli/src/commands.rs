use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use trace3::catalog::validate_group;
use trace3::characters::tables::{
    check_equation, omega2_table, DEGREE7_PRODUCTS, DEGREE8_PRODUCTS,
};
use trace3::characters::{omega2_component, omega2_component_truncated};
use trace3::exactnum::Rat;
use trace3::genmat::{make_context, MatrixContext, Mode};
use trace3::hilbert::{
    c33_series, expected_h7, expected_h8, kernel_series, oracle_coefficients, select_variant,
    Variant,
};
use trace3::mpoly::Monomial;
use trace3::partitions::{is_symmetric, Partition};
use trace3::relfinder::{counts, find_relations_in, relation_basis, verify_relation};
use trace3::{Error, Result};

use crate::checks::{catalog_groups, group_width, run_check, CHECKS};

/// Result of one command: pass/fail, human-readable text and the JSON report.
pub struct Outcome {
    pub passed: bool,
    pub text: String,
    pub json: Value,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

pub fn dims(d: usize) -> Result<Outcome> {
    let c = counts(d)?;
    let mut text = format!("d = {d}\n k  formula  module-sum\n");
    for (k, f, s) in &c.generators {
        writeln!(text, " {k}  {f}  {s}").unwrap();
    }
    writeln!(
        text,
        " g  {}  {}",
        c.generators_total_formula, c.generators_total_dimsum
    )
    .unwrap();
    let r7_agree = c.r7_formula == Rat::from_int(c.r7_dimsum as i64);
    writeln!(
        text,
        "r7: formula {}, module-sum {}{}",
        c.r7_formula,
        c.r7_dimsum,
        if r7_agree { "" } else { " (disagree)" }
    )
    .unwrap();
    if let Some(r8) = c.r8 {
        writeln!(text, "r8: {r8}").unwrap();
    }
    let mut passed = c.generators_agree();
    if d == 3 {
        passed &= r7_agree && c.r8 == Some(30);
    }
    let mut json = to_value(&c);
    json["r7_agree"] = json!(r7_agree);
    json["passed"] = json!(passed);
    Ok(Outcome { passed, text, json })
}

pub fn decompose(degree: usize, d: Option<usize>) -> Result<Outcome> {
    let d = d.unwrap_or(if degree == 8 { 3 } else { degree });
    let (decomp, dropped) = omega2_component_truncated(degree, d)?;
    let mut text = format!("omega2 degree {degree}, d = {d}: {decomp}\n");
    if dropped > 0 {
        writeln!(text, "({dropped} summands with more than {d} rows dropped)").unwrap();
    }
    let mut passed = true;
    let table = omega2_table(degree).map(|(_, mut t)| {
        t.truncate_rows(d);
        t == decomp
    });
    if let Some(ok) = table {
        writeln!(
            text,
            "reference table: {}",
            if ok { "match" } else { "MISMATCH" }
        )
        .unwrap();
        passed &= ok;
    }
    let equations = match degree {
        7 => &DEGREE7_PRODUCTS[..],
        8 => &DEGREE8_PRODUCTS[..],
        _ => &[][..],
    };
    let mut checks = Vec::new();
    for eq in equations {
        let c = check_equation(eq)?;
        writeln!(
            text,
            "{} {}: {}{}",
            if c.passed { "ok  " } else { "FAIL" },
            c.label,
            c.computed,
            if c.matches_printed {
                ""
            } else {
                " (printed right side differs)"
            }
        )
        .unwrap();
        passed &= c.passed;
        checks.push(c);
    }
    let json = json!({
        "degree": degree,
        "d": d,
        "decomposition": to_value(&decomp),
        "dropped": dropped,
        "table_matches": table,
        "equations": to_value(&checks),
        "passed": passed,
    });
    Ok(Outcome { passed, text, json })
}

pub fn catalog_validate(
    degree: Option<usize>,
    lambda: Option<&Partition>,
    d: Option<usize>,
    mode: Mode,
) -> Result<Outcome> {
    let groups: Vec<_> = catalog_groups()
        .into_iter()
        .filter(|g| {
            degree.is_none_or(|k| g[0].degree == k) && lambda.is_none_or(|l| &g[0].lambda == l)
        })
        .collect();
    if groups.is_empty() {
        return Err(Error::MissingCatalog {
            degree: degree.unwrap_or(0),
            lambda: lambda.map(|l| l.to_string()).unwrap_or_default(),
        });
    }
    let mut contexts: HashMap<usize, MatrixContext> = HashMap::new();
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut passed = true;
    for group in &groups {
        let k = group[0].degree;
        let l = &group[0].lambda;
        let width = group_width(k, l);
        let dd = match d {
            Some(_) if k == 8 => 3,
            Some(x) => x.max(width),
            None => width,
        };
        let ctx = match contexts.entry(dd) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(make_context(dd, mode)?),
        };
        let report = validate_group(group, Some(ctx));
        let mult = omega2_component(k, if k == 8 { 3 } else { k })?.get(l);
        let ok = report.passed() && mult == group.len() as u64;
        passed &= ok;
        writeln!(
            text,
            "{} degree {k} ({}): {} candidates, rank {}, omega2 multiplicity {mult}",
            if ok { "ok  " } else { "FAIL" },
            l.compact(),
            report.candidates,
            report.formal_rank
        )
        .unwrap();
        for e in report.entries.iter().filter(|e| !e.passed()) {
            writeln!(text, "     {} fails: {e:?}", e.label).unwrap();
        }
        let mut v = to_value(&report);
        v["d"] = json!(dd);
        v["omega2_multiplicity"] = json!(mult);
        v["passed"] = json!(ok);
        reports.push(v);
    }
    let json = json!({ "mode": mode.to_string(), "groups": reports, "passed": passed });
    Ok(Outcome { passed, text, json })
}

pub struct Shape {
    pub lambda: Partition,
    pub degree: usize,
    pub d: usize,
}

impl Shape {
    pub fn new(lambda: Partition, degree: Option<usize>, d: Option<usize>) -> Shape {
        let degree = degree.unwrap_or(lambda.size() as usize);
        let d = d.unwrap_or(if degree == 8 { 3 } else { lambda.rows() });
        Shape { lambda, degree, d }
    }
}

fn fmt_vec<T: ToString>(v: &[T]) -> String {
    format!(
        "({})",
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

pub fn relations_find(shape: &Shape, mode: Mode, timings: bool) -> Result<Outcome> {
    let start = Instant::now();
    let mut report = find_relations_in(&shape.lambda, shape.degree, shape.d, mode)?;
    if timings {
        report.wall_ms = Some(start.elapsed().as_millis() as u64);
    }
    let mut text = format!(
        "({}) degree {} d = {}: {} candidates, rank {}, {} monomials\n",
        shape.lambda.compact(),
        shape.degree,
        shape.d,
        report.candidates,
        report.rank,
        report.monomials
    );
    if report.nullspace.is_empty() {
        writeln!(text, "no relations").unwrap();
    }
    for v in &report.nullspace {
        writeln!(text, "relation {}", fmt_vec(v)).unwrap();
    }
    if let Some(m) = report.matched_paper {
        writeln!(
            text,
            "reference relations: {}",
            if m { "match" } else { "MISMATCH" }
        )
        .unwrap();
    }
    let passed = report.matched_paper != Some(false);
    Ok(Outcome {
        passed,
        text,
        json: to_value(&report),
    })
}

pub fn relations_verify(shape: &Shape, coeffs: &[Rat]) -> Result<Outcome> {
    let ok = verify_relation(&shape.lambda, shape.degree, shape.d, coeffs)?;
    let text = format!(
        "{} is {}a relation\n",
        fmt_vec(coeffs),
        if ok { "" } else { "not " }
    );
    let json = json!({
        "lambda": shape.lambda.to_string(),
        "degree": shape.degree,
        "d": shape.d,
        "coeffs": to_value(&coeffs),
        "is_relation": ok,
    });
    Ok(Outcome {
        passed: ok,
        text,
        json,
    })
}

pub fn relations_basis(shape: &Shape) -> Result<Outcome> {
    let basis = relation_basis(&shape.lambda, shape.degree, shape.d)?;
    let mut text = format!(
        "{} basis elements, each vanishing at generic matrices\n",
        basis.len()
    );
    for b in &basis {
        writeln!(text, "{b}").unwrap();
    }
    let elements: Vec<String> = basis.iter().map(|b| b.to_string()).collect();
    let json = json!({
        "lambda": shape.lambda.to_string(),
        "degree": shape.degree,
        "d": shape.d,
        "size": basis.len(),
        "elements": elements,
    });
    Ok(Outcome {
        passed: true,
        text,
        json,
    })
}

pub fn hilbert_series(order: usize, variant: Variant) -> Result<Outcome> {
    let s = c33_series(order, variant)?;
    let mut terms: Vec<(u32, [u32; 3], Rat)> = s
        .body()
        .terms()
        .iter()
        .map(|(m, c)| {
            let e = m.series_exponent_vector(3).expect("series monomial");
            (e.iter().sum(), [e[0], e[1], e[2]], c.clone())
        })
        .collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut text = format!("H(C33) through degree {order}, {variant} numerator\n");
    let mut current = u32::MAX;
    for (deg, e, c) in &terms {
        if *deg != current {
            write!(
                text,
                "{}degree {deg}:",
                if current == u32::MAX { "" } else { "\n" }
            )
            .unwrap();
            current = *deg;
        }
        write!(text, " {c}*{}", Monomial::series_exponents(e)).unwrap();
    }
    text.push('\n');
    let symmetric = is_symmetric(s.body(), 3);
    let rows: Vec<Value> = terms
        .iter()
        .map(|(_, e, c)| json!({ "exponents": e, "coefficient": to_value(c) }))
        .collect();
    let json = json!({ "order": order, "variant": variant.to_string(), "symmetric": symmetric, "terms": rows });
    Ok(Outcome {
        passed: symmetric,
        text,
        json,
    })
}

pub fn hilbert_kernel(order: usize, variant: Variant) -> Result<Outcome> {
    let ks = kernel_series(order, variant)?;
    let mut text = format!("kernel pieces, {variant} numerator\n");
    let mut passed = true;
    let mut pieces = Vec::new();
    for k in 0..=order {
        let h = ks.h(k);
        let ok = match k {
            0..=6 => h.is_empty(),
            7 => h == &expected_h7(),
            8 => h == &expected_h8(),
            _ => true,
        };
        passed &= ok;
        writeln!(
            text,
            "h{k} = {h}  (dim {}){}",
            ks.dimension(k),
            if ok { "" } else { "  UNEXPECTED" }
        )
        .unwrap();
        pieces.push(json!({ "degree": k, "decomposition": to_value(h), "dimension": ks.dimension(k) as u64 }));
    }
    let json = json!({ "order": order, "variant": variant.to_string(), "pieces": pieces, "passed": passed });
    Ok(Outcome { passed, text, json })
}

pub fn oracle(order: u32, seed: u64) -> Result<Outcome> {
    let oracle = oracle_coefficients(order, seed);
    let series: Vec<_> = Variant::ALL
        .iter()
        .map(|&v| c33_series(order as usize, v))
        .collect::<Result<_>>()?;
    let mut text = String::from("exponents  oracle  verbatim  corrected\n");
    let mut rows = Vec::new();
    let mut mismatches = vec![0usize; Variant::ALL.len()];
    for (md, &dim) in &oracle {
        let vals: Vec<Rat> = series
            .iter()
            .map(|s| s.coefficient(&Monomial::series_exponents(md)))
            .collect();
        for (i, v) in vals.iter().enumerate() {
            if *v != Rat::from_int(dim as i64) {
                mismatches[i] += 1;
            }
        }
        writeln!(
            text,
            "{}  {dim}  {}",
            fmt_vec(md),
            vals.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("  ")
        )
        .unwrap();
        rows.push(json!({ "exponents": md, "oracle": dim, "series": to_value(&vals) }));
    }
    let sel = select_variant(seed)?;
    match sel.chosen {
        Some(v) => writeln!(
            text,
            "chosen variant: {v}{}",
            if sel.tie { " (tie)" } else { "" }
        )
        .unwrap(),
        None => writeln!(text, "no variant passes").unwrap(),
    }
    let passed = sel
        .chosen
        .is_some_and(|v| mismatches[Variant::ALL.iter().position(|&x| x == v).unwrap()] == 0);
    let json = json!({
        "order": order,
        "seed": seed,
        "coefficients": rows,
        "selection": to_value(&sel),
        "passed": passed,
    });
    Ok(Outcome { passed, text, json })
}

pub fn check_all(seed: u64, timings: bool) -> Result<Outcome> {
    let mut text = String::new();
    let mut records = Vec::new();
    let mut summary = String::from("\ncheck  result  budget");
    if timings {
        summary.push_str("  wall");
    }
    summary.push('\n');
    for check in &CHECKS {
        let r = run_check(check, seed, timings);
        writeln!(text, "{} {}", r.id, r.name).unwrap();
        for l in &r.lines {
            writeln!(text, "  {l}").unwrap();
        }
        write!(
            summary,
            "{}    {}    {}s",
            r.id,
            if r.passed { "PASS" } else { "FAIL" },
            r.budget_s
        )
        .unwrap();
        if let Some(ms) = r.wall_ms {
            write!(summary, "  {:.2}s", ms as f64 / 1000.0).unwrap();
        }
        summary.push('\n');
        records.push(r);
    }
    summary.push_str("AC9    run the property suites with `cargo test --workspace`\n");
    text.push_str(&summary);
    let passed = records.iter().all(|r| r.passed);
    let json = json!({ "seed": seed, "checks": to_value(&records), "passed": passed });
    Ok(Outcome { passed, text, json })
}
