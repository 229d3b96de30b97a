//! Candidate highest weight vectors: the shipped catalog, expansion into
//! matrix entries, validation and the typo-repair search.

pub mod parse;
mod trace;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{EchelonBuilder, Rat};
use crate::genmat::MatrixContext;
use crate::glaction::{is_hwv, is_hwv_formal};
use crate::mpoly::Poly;
use crate::partitions::Partition;

pub use parse::{
    evaluate, parse, render_tokens, tokenize, trace_expr, LetterRef, MExpr, PermSpec, SExpr, Token,
};
pub use trace::{CyclicWord, NcPoly, TraceExpr, TraceMonomial};

const CATALOG_SOURCE: &str = include_str!("../../data/catalog.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verbatim,
    Repaired,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verbatim => "verbatim",
            Status::Repaired => "repaired",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub degree: usize,
    pub lambda: Partition,
    /// `w`, `w1`, `w2`, ...
    pub label: String,
    pub status: Status,
    /// The formula as printed.
    pub printed: String,
    /// The formula actually evaluated (equal to `printed` when verbatim).
    pub source: String,
    pub note: Option<String>,
    pub expr: TraceExpr,
}

impl CatalogEntry {
    /// Position of the entry within its group, 1-based.
    pub fn index(&self) -> usize {
        self.label.trim_start_matches('w').parse().unwrap_or(1)
    }
}

fn parse_header(line: &str, lineno: usize) -> Result<(usize, Partition, String, Status)> {
    let bad = |msg: &str| Error::Parse {
        pos: lineno,
        msg: format!("catalog line {lineno}: {msg}"),
    };
    let inner = line
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| bad("bad header"))?;
    let fields: Vec<&str> = inner.split('|').map(|s| s.trim()).collect();
    let [deg, lambda, label, status] = fields.as_slice() else {
        return Err(bad("header needs 4 fields"));
    };
    let degree: usize = deg.parse().map_err(|_| bad("bad degree"))?;
    let lambda: Partition = lambda.parse()?;
    let status = match *status {
        "verbatim" => Status::Verbatim,
        "repaired" => Status::Repaired,
        _ => return Err(bad("status must be verbatim or repaired")),
    };
    if lambda.size() as usize != degree {
        return Err(bad("partition size differs from degree"));
    }
    Ok((degree, lambda, label.to_string(), status))
}

/// Parses catalog records. Evaluates every formula; a verbatim record must
/// have no `expr` field, a repaired one must have it.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    struct Raw {
        header: (usize, Partition, String, Status),
        fields: Vec<(String, String)>,
        line: usize,
    }
    let mut raws: Vec<Raw> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let lineno = n + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if trimmed.starts_with('[') {
            raws.push(Raw {
                header: parse_header(trimmed, lineno)?,
                fields: Vec::new(),
                line: lineno,
            });
            continue;
        }
        if line.starts_with(char::is_whitespace) {
            let Some(raw) = raws.last_mut() else {
                return Err(Error::Parse {
                    pos: lineno,
                    msg: "continuation outside a record".into(),
                });
            };
            let Some(last) = raw.fields.last_mut() else {
                return Err(Error::Parse {
                    pos: lineno,
                    msg: "continuation before any field".into(),
                });
            };
            last.1.push(' ');
            last.1.push_str(trimmed);
            continue;
        }
        let Some((key, value)) = trimmed.split_once('=') else {
            return Err(Error::Parse {
                pos: lineno,
                msg: format!("expected key = value, got {trimmed:?}"),
            });
        };
        match raws.last_mut() {
            Some(raw) => raw
                .fields
                .push((key.trim().to_string(), value.trim().to_string())),
            None if key.trim() == "format" => {
                if value.trim() != "1" {
                    return Err(Error::Parse {
                        pos: lineno,
                        msg: "unsupported catalog format".into(),
                    });
                }
            }
            None => {
                return Err(Error::Parse {
                    pos: lineno,
                    msg: "field outside a record".into(),
                })
            }
        }
    }
    raws.into_iter()
        .map(|raw| {
            let (degree, lambda, label, status) = raw.header;
            let get = |k: &str| {
                raw.fields
                    .iter()
                    .find(|(key, _)| key == k)
                    .map(|(_, v)| v.clone())
            };
            let printed = get("printed").ok_or_else(|| Error::Parse {
                pos: raw.line,
                msg: "record without printed".into(),
            })?;
            let expr_src = get("expr");
            let source = match (status, expr_src) {
                (Status::Verbatim, None) => printed.clone(),
                (Status::Repaired, Some(e)) => e,
                (Status::Verbatim, Some(_)) => {
                    return Err(Error::Parse {
                        pos: raw.line,
                        msg: "verbatim record with expr".into(),
                    })
                }
                (Status::Repaired, None) => {
                    return Err(Error::Parse {
                        pos: raw.line,
                        msg: "repaired record without expr".into(),
                    })
                }
            };
            let expr = trace_expr(&source).map_err(|e| Error::Parse {
                pos: raw.line,
                msg: format!("{label} of ({lambda}): {e}"),
            })?;
            Ok(CatalogEntry {
                degree,
                lambda,
                label,
                status,
                printed,
                source,
                note: get("note"),
                expr,
            })
        })
        .collect()
}

/// Every entry of the shipped catalog.
pub fn all_entries() -> &'static [CatalogEntry] {
    static ALL: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ALL.get_or_init(|| parse_catalog(CATALOG_SOURCE).expect("shipped catalog parses"))
}

/// Entries of one degree whose partition has at most `d` rows.
pub fn load_catalog(degree: usize, d: usize) -> Result<Vec<CatalogEntry>> {
    if !(4..=8).contains(&degree) {
        return Err(Error::OutOfScope(format!(
            "catalog degrees are 4..=8 (got {degree})"
        )));
    }
    if degree == 8 && d != 3 {
        return Err(Error::OutOfScope(
            "degree 8 catalog is for d = 3 only".into(),
        ));
    }
    Ok(all_entries()
        .iter()
        .filter(|e| e.degree == degree && e.lambda.rows() <= d)
        .cloned()
        .collect())
}

/// The candidates for one partition, in label order.
pub fn catalog_group(lambda: &Partition, degree: usize) -> Result<Vec<CatalogEntry>> {
    let group: Vec<CatalogEntry> = all_entries()
        .iter()
        .filter(|e| e.degree == degree && &e.lambda == lambda)
        .cloned()
        .collect();
    if group.is_empty() {
        return Err(Error::MissingCatalog {
            degree,
            lambda: lambda.to_string(),
        });
    }
    Ok(group)
}

fn expand_rec(terms: &[(&[CyclicWord], &Rat)], depth: usize, ctx: &MatrixContext) -> Poly {
    let mut acc = Poly::zero();
    let mut i = 0;
    while i < terms.len() {
        let (atoms, c) = terms[i];
        if atoms.len() == depth {
            acc.add_scaled(&Poly::one(), c);
            i += 1;
            continue;
        }
        let head = &atoms[depth];
        let mut j = i + 1;
        while j < terms.len() && terms[j].0.len() > depth && &terms[j].0[depth] == head {
            j += 1;
        }
        let inner = expand_rec(&terms[i..j], depth + 1, ctx);
        if !inner.is_zero() {
            let t = ctx.trace_of_cyclic(head);
            acc.add_scaled(&(&*t * &inner), &Rat::one());
        }
        i = j;
    }
    acc
}

/// Substitutes the matrices of `ctx` into a formal trace expression.
pub fn expand(e: &TraceExpr, ctx: &MatrixContext) -> Result<Poly> {
    let top = e.max_letter() as usize;
    if top > ctx.d() {
        return Err(Error::IndexOutOfRange {
            index: top,
            d: ctx.d(),
        });
    }
    let terms: Vec<(&[CyclicWord], &Rat)> = e.terms().map(|(m, c)| (m.atoms(), c)).collect();
    Ok(expand_rec(&terms, 0, ctx))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub label: String,
    pub lambda: Partition,
    pub status: Status,
    pub multidegree_ok: bool,
    pub hwv_formal: bool,
    pub nonzero_formal: bool,
    /// `None` when the expanded check was not requested.
    pub hwv_expanded: Option<bool>,
    pub nonzero_expanded: Option<bool>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.multidegree_ok
            && self.hwv_formal
            && self.nonzero_formal
            && self.hwv_expanded.unwrap_or(true)
    }
}

/// Checks one entry: multidegree, highest weight property and nonvanishing
/// in the symmetric algebra; with `ctx`, also the highest weight property
/// of the expansion.
pub fn validate_entry(entry: &CatalogEntry, ctx: Option<&MatrixContext>) -> EntryReport {
    let d = entry.lambda.rows();
    let formal = is_hwv_formal(&entry.expr, &entry.lambda, d);
    let multidegree_ok = formal.is_ok() && !entry.expr.is_zero();
    let mut report = EntryReport {
        label: entry.label.clone(),
        lambda: entry.lambda.clone(),
        status: entry.status,
        multidegree_ok,
        hwv_formal: formal.unwrap_or(false),
        nonzero_formal: !entry.expr.is_zero(),
        hwv_expanded: None,
        nonzero_expanded: None,
    };
    if let Some(ctx) = ctx {
        if ctx.d() >= d {
            if let Ok(p) = expand(&entry.expr, ctx) {
                report.nonzero_expanded = Some(!p.is_zero());
                report.hwv_expanded = Some(is_hwv(&p, &entry.lambda, ctx).unwrap_or(false));
            }
        }
    }
    report
}

/// Rank of a family of formal trace expressions.
pub fn formal_rank(exprs: &[&TraceExpr]) -> usize {
    let keys: BTreeSet<&TraceMonomial> = exprs
        .iter()
        .flat_map(|e| e.terms().map(|(m, _)| m))
        .collect();
    let mut eb = EchelonBuilder::new(exprs.len());
    for m in keys {
        let row: Vec<Rat> = exprs.iter().map(|e| e.coefficient(m)).collect();
        eb.push(&row);
        if eb.is_full_rank() {
            break;
        }
    }
    eb.rank()
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub degree: usize,
    pub lambda: Partition,
    pub entries: Vec<EntryReport>,
    pub formal_rank: usize,
    pub candidates: usize,
}

impl GroupReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed()) && self.formal_rank == self.candidates
    }
}

/// Validates every entry of a group and checks their independence in the
/// symmetric algebra.
pub fn validate_group(group: &[CatalogEntry], ctx: Option<&MatrixContext>) -> GroupReport {
    let first = group.first().expect("nonempty group");
    let exprs: Vec<&TraceExpr> = group.iter().map(|e| &e.expr).collect();
    GroupReport {
        degree: first.degree,
        lambda: first.lambda.clone(),
        entries: group.iter().map(|e| validate_entry(e, ctx)).collect(),
        formal_rank: formal_rank(&exprs),
        candidates: group.len(),
    }
}

/// A token-level edit of a printed formula that yields a valid highest
/// weight vector.
#[derive(Clone, Debug)]
pub struct RepairCandidate {
    pub source: String,
    pub description: String,
    pub expr: TraceExpr,
}

fn context_before(tokens: &[Token], pos: usize) -> String {
    let start = pos.saturating_sub(8);
    render_tokens(&tokens[start..pos])
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Deleting a parenthesis that doubles its neighbour is the likeliest fix.
fn deletion_cost(tokens: &[Token], positions: &[usize]) -> usize {
    positions
        .iter()
        .filter(|&&p| {
            let t = &tokens[p];
            !(p > 0 && &tokens[p - 1] == t || tokens.get(p + 1) == Some(t))
        })
        .count()
}

/// Minimal token edits of a printed formula, likeliest first: `(`/`)`
/// deletions restoring the balance (or one `)` insertion for a single
/// missing parenthesis), and for balanced formulas single sign changes,
/// single letter changes and `*` deletions.
pub fn repair_edits(printed: &str, rows: usize) -> Result<Vec<(Vec<Token>, String)>> {
    let toks = tokenize(printed)?;
    let opens: Vec<usize> = (0..toks.len())
        .filter(|&i| toks[i] == Token::LParen)
        .collect();
    let closes: Vec<usize> = (0..toks.len())
        .filter(|&i| toks[i] == Token::RParen)
        .collect();
    let excess = closes.len() as i64 - opens.len() as i64;
    let mut out = Vec::new();
    let delete = |positions: &[usize], what: &str| -> (Vec<Token>, String) {
        let t: Vec<Token> = toks
            .iter()
            .enumerate()
            .filter(|(i, _)| !positions.contains(i))
            .map(|(_, t)| t.clone())
            .collect();
        let desc: Vec<String> = positions
            .iter()
            .map(|&p| format!("deleted `{what}` after `{}`", context_before(&toks, p)))
            .collect();
        (t, desc.join("; "))
    };
    let deletions = |candidates: &[usize], k: usize, what: &str| {
        let mut combos: Vec<Vec<usize>> = combinations(candidates.len(), k)
            .into_iter()
            .map(|c| c.iter().map(|&i| candidates[i]).collect())
            .collect();
        combos.sort_by_key(|c| deletion_cost(&toks, c));
        combos
            .into_iter()
            .map(|c| delete(&c, what))
            .collect::<Vec<_>>()
    };
    if excess > 0 {
        out.extend(deletions(&closes, excess as usize, ")"));
    } else if excess < 0 {
        out.extend(deletions(&opens, (-excess) as usize, "("));
        if excess == -1 {
            for p in 1..=toks.len() {
                let mut t = toks.clone();
                t.insert(p, Token::RParen);
                out.push((
                    t,
                    format!("inserted `)` after `{}`", context_before(&toks, p)),
                ));
            }
        }
    } else {
        for (p, tok) in toks.iter().enumerate() {
            let ctx = context_before(&toks, p);
            let leading = p == 0 || toks[p - 1] == Token::LParen;
            match tok {
                Token::Minus if leading => out.push(delete(&[p], "-")),
                Token::Plus | Token::Minus => {
                    let mut t = toks.clone();
                    t[p] = if *tok == Token::Plus {
                        Token::Minus
                    } else {
                        Token::Plus
                    };
                    out.push((t, format!("flipped the sign after `{ctx}`")));
                }
                Token::Letter(l) => {
                    let (make, cur): (fn(u8) -> LetterRef, u8) = match *l {
                        LetterRef::Fixed(n) => (LetterRef::Fixed, n),
                        LetterRef::Sigma(n) => (LetterRef::Sigma, n),
                        LetterRef::Tau(n) => (LetterRef::Tau, n),
                    };
                    let top = match l {
                        LetterRef::Fixed(_) => rows,
                        _ => 6,
                    };
                    for m in 1..=top as u8 {
                        if m != cur {
                            let mut t = toks.clone();
                            t[p] = Token::Letter(make(m));
                            out.push((
                                t,
                                format!(
                                    "changed `{tok}` to `{}` after `{ctx}`",
                                    Token::Letter(make(m))
                                ),
                            ));
                        }
                    }
                }
                Token::Star => out.push(delete(&[p], "*")),
                _ => {}
            }
            if leading && !matches!(tok, Token::Minus | Token::Plus) {
                let mut t = toks.clone();
                t.insert(p, Token::Minus);
                out.push((t, format!("inserted `-` after `{ctx}`")));
            }
        }
    }
    Ok(out)
}

/// Valid repairs of a printed formula: edits from [`repair_edits`] whose
/// result is a nonzero highest weight vector of multidegree `lambda`, one
/// per line of expressions (the first edit reaching it).
pub fn repair_search(printed: &str, lambda: &Partition) -> Result<Vec<RepairCandidate>> {
    let d = lambda.rows();
    let mut seen: Vec<TraceExpr> = Vec::new();
    let mut out = Vec::new();
    for (toks, description) in repair_edits(printed, d)? {
        let Ok(ast) = parse::parse_tokens(&toks) else {
            continue;
        };
        let Ok(expr) = evaluate(&ast) else { continue };
        if expr.is_zero() {
            continue;
        }
        let class = expr.primitive();
        if seen.contains(&class) || !matches!(is_hwv_formal(&expr, lambda, d), Ok(true)) {
            continue;
        }
        seen.push(class);
        out.push(RepairCandidate {
            source: render_tokens(&toks),
            description,
            expr,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genmat::{make_context, Mode};
    use crate::part;

    #[test]
    fn catalog_parses() {
        let all = all_entries();
        assert!(all.len() >= 40);
        assert_eq!(
            load_catalog(7, 4)
                .unwrap()
                .iter()
                .filter(|e| e.lambda == part![4, 1, 1, 1])
                .count(),
            3
        );
        let d3: Vec<_> = load_catalog(7, 3).unwrap();
        assert_eq!(d3.len(), 4);
        assert!(d3.iter().all(|e| e.lambda == part![3, 2, 2]));
        assert_eq!(
            load_catalog(8, 3)
                .unwrap()
                .iter()
                .filter(|e| e.lambda == part![4, 2, 2])
                .count(),
            9
        );
        assert!(load_catalog(4, 5).unwrap().is_empty());
        assert!(load_catalog(8, 4).is_err());
        assert!(catalog_group(&part![5, 2], 7).is_err());
    }

    #[test]
    fn file_format_errors() {
        assert!(parse_catalog("[7 | 3,2,2 | w1 | verbatim]\nexpr = tr(x1^2)\n").is_err());
        assert!(parse_catalog("[7 | 3,2 | w1 | verbatim]\nprinted = tr(x1^2)\n").is_err());
        let ok = parse_catalog("[2 | 2 | w | verbatim]\nprinted = tr(x1\n  ^2)\n").unwrap();
        assert_eq!(ok[0].expr, trace_expr("tr(x1^2)").unwrap());
    }

    #[test]
    fn expand_is_a_ring_map() {
        let ctx = make_context(3, Mode::DiagonalFirst).unwrap();
        let a = trace_expr("tr(x1^2) + tr(x2x3)").unwrap();
        let b = trace_expr("tr(x1x2x3) - 2tr(x3^2)").unwrap();
        let ea = expand(&a, &ctx).unwrap();
        let eb = expand(&b, &ctx).unwrap();
        assert_eq!(expand(&a.mul(&b), &ctx).unwrap(), &ea * &eb);
        assert_eq!(expand(&a.add(&b), &ctx).unwrap(), &ea + &eb);
        assert!(expand(&a.sub(&a), &ctx).unwrap().is_zero());
        assert!(expand(&trace_expr("tr(x4^2)").unwrap(), &ctx).is_err());
        let p = expand(&trace_expr("tr(x1^2)tr(x2^2)").unwrap(), &ctx).unwrap();
        assert_eq!(p.matrix_multidegree(3), Some(vec![2, 2, 0]));
    }

    #[test]
    fn sign_mutation_breaks_hwv() {
        let w4 = catalog_group(&part![3, 2, 2], 7)
            .unwrap()
            .into_iter()
            .find(|e| e.label == "w4")
            .unwrap();
        assert!(validate_entry(&w4, None).passed());
        let mutated = w4.source.replacen("+2tr(x1^2x2)", "-2tr(x1^2x2)", 1);
        assert_ne!(mutated, w4.source);
        let e = trace_expr(&mutated).unwrap();
        assert!(!is_hwv_formal(&e, &part![3, 2, 2], 3).unwrap());
    }

    #[test]
    fn shipped_repairs_are_the_unique_search_results() {
        for entry in all_entries()
            .iter()
            .filter(|e| e.status == Status::Repaired)
        {
            let found = repair_search(&entry.printed, &entry.lambda).unwrap();
            assert_eq!(found.len(), 1, "{} of ({})", entry.label, entry.lambda);
            assert_eq!(
                found[0].expr.primitive(),
                entry.expr.primitive(),
                "{} of ({})",
                entry.label,
                entry.lambda
            );
        }
    }

    #[test]
    fn verbatim_entries_validate() {
        for entry in all_entries()
            .iter()
            .filter(|e| e.status == Status::Verbatim)
        {
            assert!(trace_expr(&entry.printed).is_ok());
            assert!(
                validate_entry(entry, None).passed(),
                "{} of ({})",
                entry.label,
                entry.lambda
            );
        }
    }
}
