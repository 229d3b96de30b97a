use num_bigint::BigInt;
use trace3::exactnum::Rat;
use trace3::part;
use trace3::partitions::Partition;
use trace3::relfinder::{
    counts, empirical_r7, find_relations, no_low_degree_relations_check, relation_basis,
    verify_relation,
};

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn single(lambda: Partition, degree: usize, d: usize, expected: &[i64]) {
    let r = find_relations(&lambda, degree, d).unwrap();
    assert_eq!(r.nullspace, vec![ints(expected)], "{lambda:?}");
    assert_eq!(r.matched_paper, Some(true), "{lambda:?}");
}

#[test]
fn degree7_relations() {
    single(part![4, 1, 1, 1], 7, 4, &[12, -15, -20]);
    single(part![3, 2, 2], 7, 3, &[2, -1, 2, 0]);
    single(part![3, 2, 1, 1], 7, 4, &[6, 0, -10, 15, 0, -40]);
    single(part![2, 2, 2, 1], 7, 4, &[12, 1]);
    single(part![2, 2, 1, 1, 1], 7, 5, &[0, 1, 0]);
    single(part![2, 1, 1, 1, 1, 1], 7, 6, &[2, -5]);
    let r = find_relations(&part![3, 1, 1, 1, 1], 7, 5).unwrap();
    assert!(r.nullspace.is_empty());
    assert_eq!(r.matched_paper, Some(true));
}

#[test]
fn degree8_relations() {
    single(part![4, 3, 1], 8, 3, &[6, 18, -3, 0, -3, 0, 8]);
    single(part![3, 3, 2], 8, 3, &[6, 2, -3, -3]);
    let r = find_relations(&part![4, 2, 2], 8, 3).unwrap();
    assert_eq!(r.nullity(), 2);
    assert_eq!(r.matched_paper, Some(true));
    let l = part![4, 2, 2];
    for v in [
        [4, -60, 12, 21, -10, 10, -12, 0, 8],
        [0, -72, 12, 27, -12, 12, -18, 2, 12],
    ] {
        let c: Vec<Rat> = v.iter().map(|&x| Rat::from_int(x)).collect();
        assert!(verify_relation(&l, 8, 3, &c).unwrap());
    }
}

#[test]
fn relations_survive_more_matrices() {
    let a = find_relations(&part![3, 2, 2], 7, 3).unwrap();
    let b = find_relations(&part![3, 2, 2], 7, 5).unwrap();
    assert_eq!(a.nullspace, b.nullspace);
}

#[test]
fn no_relations_below_degree_seven() {
    let r = no_low_degree_relations_check().unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn relation_module_dimension() {
    let basis = relation_basis(&part![3, 2, 2], 7, 3).unwrap();
    assert_eq!(basis.len(), 3);
}

#[test]
fn degree7_count_at_four_matrices() {
    let c = counts(4).unwrap();
    assert_eq!(c.r7_formula, Rat::from_int(64));
    assert_eq!(c.r7_dimsum, 80);
    assert_eq!(empirical_r7(3).unwrap(), 3);
    assert_eq!(empirical_r7(4).unwrap(), c.r7_dimsum);
}
