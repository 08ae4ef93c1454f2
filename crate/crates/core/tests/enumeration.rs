use carlitz_core::closed_form::{
    cc_carlitz_perimeter_gf, convex_carlitz_perimeter_gf_half, dq_f1_at_1, dq_g1_at_1, even_to_uni,
    f1_qq,
};
use carlitz_core::poly::{
    count_by_stats, count_partition, Class, ColumnConvexPoly, Generator, DEFAULT_SAFETY_BOUND,
};
use carlitz_core::{Error, UniSeries};
use num_traits::ToPrimitive;

fn ints(s: &UniSeries) -> Vec<u64> {
    s.integer_coeffs()
        .unwrap()
        .iter()
        .map(|c| c.to_u64().unwrap())
        .collect()
}

fn counts(bound: u32, class: Class, carlitz: bool) -> Vec<u64> {
    count_by_stats(bound, class, carlitz)
        .unwrap()
        .counts()
        .into_iter()
        .map(|(_, c)| c)
        .collect()
}

#[test]
fn column_convex_carlitz_counts_match_the_closed_form() {
    assert_eq!(
        counts(10, Class::ColumnConvex, true),
        ints(&cc_carlitz_perimeter_gf(10).unwrap())[2..]
    );
}

#[test]
fn convex_carlitz_counts_match_the_closed_form() {
    assert_eq!(
        counts(12, Class::Convex, true),
        ints(&convex_carlitz_perimeter_gf_half(12).unwrap())[2..]
    );
}

#[test]
fn column_convex_diagonal_matches_f_at_p_equals_q() {
    let table = count_by_stats(8, Class::ColumnConvex, false).unwrap();
    let f = f1_qq(8).unwrap();
    for (n, row) in &table.rows {
        for (k, &want) in row.diagonal().iter().enumerate() {
            let got: i64 = (1..*n)
                .map(|v| {
                    f.coefficient([2 * v, n - v, 0, k as u32, 0])
                        .unwrap()
                        .to_integer()
                        .to_i64()
                        .unwrap()
                })
                .sum();
            assert_eq!(got as u64, want, "n = {n}, q^{k}");
        }
    }
}

#[test]
fn level_sums_match_the_derivatives() {
    let cc: Vec<u64> = count_by_stats(9, Class::ColumnConvex, false)
        .unwrap()
        .rows
        .values()
        .map(|r| r.level_sum())
        .collect();
    assert_eq!(cc, [0, 2, 10, 52, 276, 1492, 8152, 44886]);
    assert_eq!(
        cc,
        ints(&even_to_uni(&dq_f1_at_1(9).unwrap()).unwrap())[2..]
    );

    let convex: Vec<u64> = count_by_stats(10, Class::Convex, false)
        .unwrap()
        .rows
        .values()
        .map(|r| r.level_sum())
        .collect();
    assert_eq!(convex, ints(&dq_g1_at_1(10).unwrap())[2..]);
}

#[test]
fn partitions_by_first_height_merge_to_the_whole() {
    let whole = count_by_stats(9, Class::ColumnConvex, false).unwrap();
    let mut merged =
        count_partition(9, Class::ColumnConvex, false, 1..=1, DEFAULT_SAFETY_BOUND).unwrap();
    for a in 2..=9 {
        merged.merge(
            &count_partition(9, Class::ColumnConvex, false, a..=a, DEFAULT_SAFETY_BOUND).unwrap(),
        );
    }
    assert_eq!(merged, whole);
}

#[test]
fn every_generated_polyomino_is_valid() {
    Generator::new(7).unwrap().for_each(|cols, stats| {
        let p = ColumnConvexPoly::new(cols.iter().map(|c| (c.bottom, c.height))).unwrap();
        assert_eq!(p.stats(), *stats);
        assert!(stats.half_perimeter() <= 7);
    });
}

#[test]
fn safety_bound_is_enforced_and_overridable() {
    assert!(matches!(
        count_by_stats(17, Class::Convex, true),
        Err(Error::BoundExceeded { .. })
    ));
    let t = count_partition(17, Class::Convex, true, 1..=1, 17).unwrap();
    assert_eq!(t.bound, 17);
}

#[test]
fn trivial_size() {
    assert_eq!(counts(2, Class::ColumnConvex, false), [1]);
}
