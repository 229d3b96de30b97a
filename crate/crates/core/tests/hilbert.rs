use trace3::exactnum::Rat;
use trace3::hilbert::{
    c33_series, expected_h7, expected_h8, kernel_series, oracle_coefficients, select_variant,
    Variant,
};
use trace3::mpoly::Monomial;

fn coeff(v: Variant, md: [u32; 3]) -> Rat {
    c33_series(6, v)
        .unwrap()
        .coefficient(&Monomial::series_exponents(&md))
}

// Below degree 4 there are no trace identities for 3x3 matrices, so these
// coefficients are plain counts of products of traces of words.
#[test]
fn low_coefficients_count_trace_monomials() {
    let counts = [
        ([1, 0, 0], 1),
        ([2, 0, 0], 2),
        ([1, 1, 0], 2),
        ([3, 0, 0], 3),
        ([2, 1, 0], 4),
        ([1, 1, 1], 6),
    ];
    for v in Variant::ALL {
        for (md, n) in counts {
            assert_eq!(coeff(v, md), Rat::from_int(n), "{v} {md:?}");
        }
    }
}

#[test]
fn series_agrees_with_numeric_oracle() {
    let oracle = oracle_coefficients(3, 11);
    assert_eq!(oracle[&[1, 1, 1]], 6);
    for (md, dim) in oracle {
        assert_eq!(
            coeff(Variant::Verbatim, md),
            Rat::from_int(dim as i64),
            "{md:?}"
        );
    }
}

#[test]
fn variant_criteria_do_not_separate_the_readings() {
    let sel = select_variant(3).unwrap();
    assert!(sel.checks.iter().all(|c| c.passed()));
    assert!(sel.tie);
    assert_eq!(sel.chosen, Some(Variant::Verbatim));
}

#[test]
fn kernel_starts_in_degree_seven() {
    let k = kernel_series(8, Variant::Verbatim).unwrap();
    assert!((0..=6).all(|i| k.h(i).is_empty()));
    assert_eq!(k.h(7), &expected_h7());
    assert_eq!(k.h(8), &expected_h8());
    assert_eq!(k.dimension(7), 3);
    assert_eq!(k.dimension(8), 30);
}
