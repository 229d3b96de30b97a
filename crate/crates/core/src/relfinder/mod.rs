//! Linear relations among catalog highest weight vectors, found by exact
//! expansion at generic matrices and a nullspace computation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{catalog_group, expand, formal_rank, CatalogEntry, TraceExpr};
use crate::characters::generator_partitions;
use crate::error::{Error, Result};
use crate::exactnum::{normalize_integer_vector, rank, EchelonBuilder, Rat, RatMatrix};
use crate::genmat::{make_context, MatrixContext, Mode};
use crate::glaction::tableau_basis;
use crate::hilbert::{kernel_series, Variant};
use crate::mpoly::{Monomial, Poly};
use crate::numcheck::{numeric_eval, SamplePoint, DEFAULT_BOUND};
use crate::part;
use crate::partitions::{weyl_dim, Partition};

/// Sample points used to re-check every relation numerically.
pub const CHECK_POINTS: usize = 20;
const CHECK_SEED: u64 = 0x7472_6163_6533;

/// Shapes that carry the degree-7 relations.
pub fn degree7_shapes() -> Vec<Partition> {
    vec![
        part![4, 1, 1, 1],
        part![3, 2, 2],
        part![3, 2, 1, 1],
        part![2, 2, 2, 1],
        part![2, 2, 1, 1, 1],
        part![2, 1, 1, 1, 1, 1],
    ]
}

/// Shapes that carry the degree-8 relations for three matrices, with
/// multiplicity.
pub fn degree8_shapes() -> Vec<(Partition, u64)> {
    vec![
        (part![4, 3, 1], 1),
        (part![4, 2, 2], 2),
        (part![3, 3, 2], 1),
    ]
}

/// Published relation vectors, before normalization.
pub fn printed_relations(lambda: &Partition, degree: usize) -> Option<Vec<Vec<Rat>>> {
    let ints = |v: &[i64]| v.iter().map(|&x| Rat::from_int(x)).collect::<Vec<_>>();
    let rel = match (degree, lambda.parts()) {
        (7, [4, 1, 1, 1]) => vec![ints(&[12, -15, -20])],
        (7, [3, 2, 2]) => vec![ints(&[2, -1, 2, 0])],
        (7, [3, 2, 1, 1]) => vec![ints(&[-6, 0, 10, -15, 0, 40])],
        (7, [2, 2, 2, 1]) => vec![ints(&[12, 1])],
        (7, [2, 2, 1, 1, 1]) => vec![ints(&[0, 1, 0])],
        (7, [2, 1, 1, 1, 1, 1]) => vec![ints(&[2, -5])],
        (7, [3, 1, 1, 1, 1]) => vec![],
        (8, [4, 3, 1]) => vec![ints(&[-6, -18, 3, 0, 3, 0, -8])],
        (8, [4, 2, 2]) => vec![
            vec![
                Rat::from_int(1),
                Rat::from_int(-15),
                Rat::from_int(3),
                Rat::new(21, 4),
                Rat::new(-5, 2),
                Rat::new(5, 2),
                Rat::from_int(-3),
                Rat::zero(),
                Rat::from_int(2),
            ],
            vec![
                Rat::zero(),
                Rat::from_int(-36),
                Rat::from_int(6),
                Rat::new(27, 2),
                Rat::from_int(-6),
                Rat::from_int(6),
                Rat::from_int(-9),
                Rat::from_int(1),
                Rat::from_int(6),
            ],
        ],
        (8, [3, 3, 2]) => vec![ints(&[6, 2, -3, -3])],
        _ => return None,
    };
    Some(rel)
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub lambda: Partition,
    pub d: usize,
    pub degree: usize,
    pub candidates: usize,
    pub labels: Vec<String>,
    /// Normalized integer basis of the relation space.
    #[serde(serialize_with = "ser_bigint_rows")]
    pub nullspace: Vec<Vec<BigInt>>,
    pub rank: usize,
    /// Distinct monomials in the expanded candidates.
    pub monomials: usize,
    /// Rank of the candidates evaluated at random points; a lower bound for
    /// `rank`.
    pub numeric_rank: usize,
    /// Whether the relation space equals the span of the published vectors;
    /// `None` when nothing was published for this shape.
    pub matched_paper: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl RelationReport {
    pub fn nullity(&self) -> usize {
        self.nullspace.len()
    }
}

fn ser_bigint_rows<S: serde::Serializer>(
    rows: &[Vec<BigInt>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for r in rows {
        let v: Vec<json_int::Num> = r.iter().map(json_int::Num::from).collect();
        seq.serialize_element(&v)?;
    }
    seq.end()
}

mod json_int {
    use num_bigint::BigInt;
    use serde::Serialize;

    /// Serializes as a plain integer when it fits, otherwise as a string.
    pub enum Num {
        Small(i64),
        Big(String),
    }

    impl From<&BigInt> for Num {
        fn from(v: &BigInt) -> Num {
            match i64::try_from(v) {
                Ok(x) => Num::Small(x),
                Err(_) => Num::Big(v.to_string()),
            }
        }
    }

    impl Serialize for Num {
        fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            match self {
                Num::Small(x) => s.serialize_i64(*x),
                Num::Big(x) => s.serialize_str(x),
            }
        }
    }
}

fn check_shape(lambda: &Partition, degree: usize, d: usize) -> Result<Vec<CatalogEntry>> {
    if lambda.rows() > d {
        return Err(Error::TooManyRows {
            lambda: lambda.to_string(),
            d,
        });
    }
    if degree == 8 && d != 3 {
        return Err(Error::OutOfScope(format!(
            "degree-8 relations are computed for d = 3 only (got {d})"
        )));
    }
    if lambda.size() as usize != degree {
        return Err(Error::Partition(format!(
            "{lambda} is not a partition of {degree}"
        )));
    }
    catalog_group(lambda, degree)
}

fn combination(group: &[CatalogEntry], coeffs: &[Rat]) -> TraceExpr {
    let mut acc = TraceExpr::zero();
    for (e, c) in group.iter().zip(coeffs) {
        if !c.is_zero() {
            acc.add_scaled(&e.expr, c);
        }
    }
    acc
}

fn check_points(d: usize) -> Vec<SamplePoint> {
    SamplePoint::batch(d, DEFAULT_BOUND, CHECK_SEED, CHECK_POINTS, true)
}

fn expand_all(group: &[CatalogEntry], ctx: &MatrixContext) -> Result<Vec<Poly>> {
    group.par_iter().map(|e| expand(&e.expr, ctx)).collect()
}

/// Rows indexed by monomials, columns by candidates.
fn coefficient_rows(polys: &[Poly]) -> Vec<Vec<Rat>> {
    let mut rows: BTreeMap<&Monomial, Vec<Rat>> = BTreeMap::new();
    for (j, p) in polys.iter().enumerate() {
        for (m, c) in p.terms() {
            rows.entry(m)
                .or_insert_with(|| vec![Rat::zero(); polys.len()])[j] = c.clone();
        }
    }
    rows.into_values().collect()
}

fn same_span(a: &[Vec<Rat>], b: &[Vec<Rat>], cols: usize) -> bool {
    let ra = rank(&RatMatrix::from_rows(cols, a.to_vec()));
    let rb = rank(&RatMatrix::from_rows(cols, b.to_vec()));
    let rab = rank(&RatMatrix::from_rows(cols, [a, b].concat()));
    ra == rb && rb == rab
}

/// Relation space among the catalog vectors of shape `lambda` in degree
/// `degree`, computed at `d` generic matrices with the first one diagonal.
/// Every returned vector is re-expanded exactly and checked at random points.
pub fn find_relations(lambda: &Partition, degree: usize, d: usize) -> Result<RelationReport> {
    find_relations_in(lambda, degree, d, Mode::DiagonalFirst)
}

/// [`find_relations`] with an explicit specialization of the matrices.
pub fn find_relations_in(
    lambda: &Partition,
    degree: usize,
    d: usize,
    mode: Mode,
) -> Result<RelationReport> {
    let group = check_shape(lambda, degree, d)?;
    let n = group.len();

    let points = SamplePoint::batch(d, DEFAULT_BOUND, CHECK_SEED, n + 4, true);
    let mut eval_rows = Vec::with_capacity(n);
    for e in &group {
        eval_rows.push(
            points
                .iter()
                .map(|pt| numeric_eval(&e.expr, pt))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let numeric_rank = rank(&RatMatrix::from_rows(points.len(), eval_rows));

    let ctx = make_context(d, mode)?;
    let polys = expand_all(&group, &ctx)?;
    let rows = coefficient_rows(&polys);
    let mut eb = EchelonBuilder::new(n);
    for r in &rows {
        eb.push(r);
        if eb.is_full_rank() {
            break;
        }
    }
    let nullspace = eb.nullspace();
    assert!(eb.rank() >= numeric_rank, "numeric rank exceeds exact rank");

    let check = check_points(d);
    for v in &nullspace {
        let coeffs: Vec<Rat> = v.iter().map(Rat::from).collect();
        let pairs: Vec<(&Rat, &Poly)> = coeffs.iter().zip(&polys).collect();
        assert!(
            Poly::linear_combination(pairs).is_zero(),
            "nullspace vector does not expand to zero"
        );
        let rel = combination(&group, &coeffs);
        for pt in &check {
            assert!(
                numeric_eval(&rel, pt)?.is_zero(),
                "relation fails at a sample point"
            );
        }
    }

    let matched_paper = printed_relations(lambda, degree).map(|printed| {
        let found: Vec<Vec<Rat>> = nullspace
            .iter()
            .map(|v| v.iter().map(Rat::from).collect())
            .collect();
        same_span(&found, &printed, n)
    });

    Ok(RelationReport {
        lambda: lambda.clone(),
        d,
        degree,
        candidates: n,
        labels: group.iter().map(|e| e.label.clone()).collect(),
        nullspace,
        rank: eb.rank(),
        monomials: rows.len(),
        numeric_rank,
        matched_paper,
        wall_ms: None,
    })
}

/// Whether `sum coeffs[i] * w_i` vanishes. A numeric screen rejects most
/// false candidates before the exact expansion.
pub fn verify_relation(
    lambda: &Partition,
    degree: usize,
    d: usize,
    coeffs: &[Rat],
) -> Result<bool> {
    let group = check_shape(lambda, degree, d)?;
    if coeffs.len() != group.len() {
        return Err(Error::CoefficientLength {
            expected: group.len(),
            found: coeffs.len(),
        });
    }
    let rel = combination(&group, coeffs);
    if rel.is_zero() {
        return Ok(true);
    }
    for pt in check_points(d) {
        if !numeric_eval(&rel, &pt)?.is_zero() {
            return Ok(false);
        }
    }
    let ctx = make_context(d, Mode::DiagonalFirst)?;
    Ok(expand(&rel, &ctx)?.is_zero())
}

/// Normalized form of a printed or computed relation vector.
pub fn normalize_relation(v: &[Rat]) -> Vec<BigInt> {
    normalize_integer_vector(v)
}

/// Basis of the `GL_d`-submodule generated by each relation: the tableau
/// images of every nullspace vector, each checked to expand to zero.
pub fn relation_basis(lambda: &Partition, degree: usize, d: usize) -> Result<Vec<TraceExpr>> {
    let report = find_relations(lambda, degree, d)?;
    let group = catalog_group(lambda, degree)?;
    let ctx = make_context(d, Mode::FullGeneric)?;
    let mut out = Vec::new();
    for v in &report.nullspace {
        let coeffs: Vec<Rat> = v.iter().map(Rat::from).collect();
        let rel = combination(&group, &coeffs);
        let basis = tableau_basis(&rel, lambda, d)?;
        let expanded: Vec<Poly> = basis
            .par_iter()
            .map(|b| expand(b, &ctx))
            .collect::<Result<_>>()?;
        if expanded.iter().any(|p| !p.is_zero()) {
            return Err(Error::NotHighestWeight);
        }
        out.extend(basis);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct LowDegreeGroup {
    pub degree: usize,
    pub lambda: Partition,
    pub d: usize,
    pub nullity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LowDegreeReport {
    /// Degrees `4..=6` whose kernel character vanishes.
    pub kernel_zero: Vec<usize>,
    pub groups: Vec<LowDegreeGroup>,
}

impl LowDegreeReport {
    pub fn passed(&self) -> bool {
        self.kernel_zero == vec![4, 5, 6] && self.groups.iter().all(|g| g.nullity == 0)
    }
}

/// No relations below degree 7: the kernel character vanishes there, and
/// the catalog groups of degrees 5 and 6 with four or more rows are
/// independent.
pub fn no_low_degree_relations_check() -> Result<LowDegreeReport> {
    let ks = kernel_series(6, Variant::Verbatim)?;
    let kernel_zero = (4..=6).filter(|&k| ks.h(k).is_empty()).collect();
    let shapes = [
        (5, part![2, 1, 1, 1], 4),
        (6, part![3, 1, 1, 1], 4),
        (6, part![2, 2, 1, 1], 4),
        (6, part![2, 1, 1, 1, 1], 5),
    ];
    let mut groups = Vec::new();
    for (degree, lambda, d) in shapes {
        let r = find_relations(&lambda, degree, d)?;
        groups.push(LowDegreeGroup {
            degree,
            lambda,
            d,
            nullity: r.nullity(),
        });
    }
    Ok(LowDegreeReport {
        kernel_zero,
        groups,
    })
}

/// Closed formula for the number of generators of degree `k` for `d`
/// traceless matrices.
pub fn generator_count_formula(k: usize, d: usize) -> Rat {
    let d = Rat::from_int(d as i64);
    let c = |x: i64| Rat::from_int(x);
    let dm = |x: i64| &d - &c(x);
    let dp = |x: i64| &d + &c(x);
    match k {
        1 => d.clone(),
        2 => dp(1) * &d / c(2),
        3 => &d * &(&d * &d + c(2)) / c(3),
        4 => dp(1) * &d * dm(1) * (&c(5) * &d - c(6)) / c(24),
        5 => &d * &dm(1) * dm(2) * (&c(3) * &d * &d + &c(4) * &d + c(6)) / c(30),
        6 => dp(2) * dp(1) * &d * dm(1) * (&d * &d - &c(3) * &d + c(4)) / c(48),
        _ => Rat::zero(),
    }
}

/// Closed formula for the total number of generators.
pub fn generator_total_formula(d: usize) -> Rat {
    let d = Rat::from_int(d as i64);
    let c = |x: i64| Rat::from_int(x);
    let p = |e: u32| d.pow(e);
    let inner = &c(5) * &p(5) + &c(19) * &p(4) - &c(5) * &p(3) + &c(65) * &p(2) + c(636);
    &d * &inner / c(240)
}

/// Closed formula for the dimension of the degree-7 relations.
pub fn r7_formula(d: usize) -> Rat {
    let d = Rat::from_int(d as i64);
    let c = |x: i64| Rat::from_int(x);
    let poly = &c(41) * &d.pow(3) - &c(86) * &d.pow(2) + &c(114) * &d - c(360);
    let front = (&d + &c(1)) * &d * (&d - &c(1)) * (&d - &c(2));
    &(&c(2) * &front * poly) / &c(5040)
}

/// Sum of `dim W_d(lambda)` over the degree-7 relation shapes.
pub fn r7_dimsum(d: usize) -> u128 {
    degree7_shapes().iter().map(|l| weyl_dim(l, d)).sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct Counts {
    pub d: usize,
    /// `(k, formula, sum of module dimensions)` for `k = 1..=6`.
    pub generators: Vec<(usize, Rat, u128)>,
    pub generators_total_formula: Rat,
    pub generators_total_dimsum: u128,
    pub r7_formula: Rat,
    pub r7_dimsum: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r8: Option<u128>,
}

impl Counts {
    pub fn generators_agree(&self) -> bool {
        self.generators
            .iter()
            .all(|(_, f, s)| *f == Rat::from_int(*s as i64))
            && self.generators_total_formula == Rat::from_int(self.generators_total_dimsum as i64)
    }
}

pub fn counts(d: usize) -> Result<Counts> {
    if d < 2 {
        return Err(Error::TooFewMatrices(d));
    }
    let mut generators = Vec::new();
    let mut total = 0u128;
    for k in 1..=6 {
        let s: u128 = generator_partitions(k).iter().map(|l| weyl_dim(l, d)).sum();
        total += s;
        generators.push((k, generator_count_formula(k, d), s));
    }
    let r8 = (d == 3).then(|| {
        degree8_shapes()
            .iter()
            .map(|(l, m)| *m as u128 * weyl_dim(l, 3))
            .sum()
    });
    Ok(Counts {
        d,
        generators,
        generators_total_formula: generator_total_formula(d),
        generators_total_dimsum: total,
        r7_formula: r7_formula(d),
        r7_dimsum: r7_dimsum(d),
        r8,
    })
}

/// Dimension of the degree-7 relations for `d` matrices computed from the
/// relation spaces: nullity times module dimension, summed over every
/// degree-7 catalog shape with at most `d` rows.
pub fn empirical_r7(d: usize) -> Result<u128> {
    let mut shapes = degree7_shapes();
    shapes.push(part![3, 1, 1, 1, 1]);
    let mut total = 0;
    for l in shapes.iter().filter(|l| l.rows() <= d) {
        let r = find_relations(l, 7, d)?;
        total += r.nullity() as u128 * weyl_dim(l, d);
    }
    Ok(total)
}

/// Dimension of the degree-7 relations for `d` matrices measured on the
/// relation modules themselves: the rank, in the symmetric algebra, of the
/// tableau bases of all degree-7 relations.
pub fn empirical_r7_from_basis(d: usize) -> Result<usize> {
    let mut shapes = degree7_shapes();
    shapes.push(part![3, 1, 1, 1, 1]);
    let mut total = 0;
    for l in shapes.iter().filter(|l| l.rows() <= d) {
        let basis = relation_basis(l, 7, d)?;
        let refs: Vec<&TraceExpr> = basis.iter().collect();
        total += formal_rank(&refs);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn relation_4111() {
        let r = find_relations(&part![4, 1, 1, 1], 7, 4).unwrap();
        assert_eq!(r.nullspace, vec![ints(&[12, -15, -20])]);
        assert_eq!(r.matched_paper, Some(true));
        assert_eq!(r.rank, 2);
        assert!(r.numeric_rank <= r.rank);
    }

    #[test]
    fn relation_322() {
        let r = find_relations(&part![3, 2, 2], 7, 3).unwrap();
        assert_eq!(r.nullspace, vec![ints(&[2, -1, 2, 0])]);
        assert_eq!(r.matched_paper, Some(true));
        let full = find_relations_in(&part![3, 2, 2], 7, 3, Mode::FullGeneric).unwrap();
        assert_eq!(full.nullspace, r.nullspace);
    }

    #[test]
    fn verify_accepts_and_rejects() {
        let l = part![2, 1, 1, 1, 1, 1];
        let good = [Rat::from_int(2), Rat::from_int(-5)];
        let bad = [Rat::from_int(2), Rat::from_int(5)];
        assert!(verify_relation(&l, 7, 6, &good).unwrap());
        assert!(!verify_relation(&l, 7, 6, &bad).unwrap());
        assert!(matches!(
            verify_relation(&l, 7, 6, &good[..1]),
            Err(Error::CoefficientLength { .. })
        ));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            find_relations(&part![4, 1, 1, 1], 7, 3),
            Err(Error::TooManyRows { .. })
        ));
        assert!(matches!(
            find_relations(&part![4, 3, 1], 8, 4),
            Err(Error::OutOfScope(_))
        ));
        assert!(matches!(
            find_relations(&part![5, 2], 7, 3),
            Err(Error::MissingCatalog { .. })
        ));
    }

    #[test]
    fn count_formulas() {
        for d in 2..=6 {
            assert!(counts(d).unwrap().generators_agree(), "d = {d}");
        }
        assert_eq!(r7_formula(3), Rat::from_int(3));
        assert_eq!(r7_dimsum(3), 3);
        assert_eq!(r7_formula(4), Rat::from_int(64));
        assert_eq!(r7_dimsum(4), 80);
        assert_eq!(counts(3).unwrap().r8, Some(30));
    }

    #[test]
    fn normalization_matches_printed_sign() {
        let printed = printed_relations(&part![3, 2, 1, 1], 7).unwrap();
        assert_eq!(
            normalize_relation(&printed[0]),
            ints(&[6, 0, -10, 15, 0, -40])
        );
    }
}
