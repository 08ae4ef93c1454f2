use carlitz_core::asymptotics::{convergence_report, growth_deviation, predict, AsymptoticTarget};

fn ratios(t: AsymptoticTarget, cps: &[u32]) -> (Vec<String>, bool) {
    let r = convergence_report(t, cps).unwrap();
    (
        r.rows
            .iter()
            .map(|row| row.ratio.to_sig_string(18))
            .collect(),
        r.monotone,
    )
}

#[test]
fn convex_carlitz_ratios_are_frozen() {
    let (r, monotone) = ratios(AsymptoticTarget::ConvexCarlitz, &[50, 100, 200, 400]);
    assert!(monotone);
    assert_eq!(
        r,
        [
            "0.753785894215313518",
            "0.825676234825752387",
            "0.877259533417308378",
            "0.913696814360747515"
        ]
    );
}

#[test]
fn column_convex_carlitz_ratios_are_frozen() {
    let (r, monotone) = ratios(AsymptoticTarget::CcCarlitz, &[50, 100, 200]);
    assert!(monotone);
    assert_eq!(
        r,
        [
            "1.0065702343700887",
            "1.00332037199461981",
            "1.00166815759906874"
        ]
    );
}

#[test]
fn convex_level_ratios_are_frozen() {
    let (r, monotone) = ratios(AsymptoticTarget::ConvexLevels, &[50, 100, 200]);
    assert!(monotone);
    assert_eq!(
        r,
        [
            "0.690882194906115356",
            "0.776406749821556874",
            "0.840425466998950577"
        ]
    );
}

#[test]
fn growth_ratio_deviation_is_frozen() {
    let d = growth_deviation(AsymptoticTarget::ConvexCarlitz, 200).unwrap();
    assert_eq!(d.to_sig_string(12), "0.0139561289097");
}

#[test]
fn column_convex_levels_are_far_from_their_formula() {
    let r = convergence_report(AsymptoticTarget::CcLevels, &[8, 12, 16]).unwrap();
    assert!(r.rows.iter().all(|row| row.ratio.to_f64() > 10.0));
}

#[test]
fn checkpoints_are_sorted_and_deduplicated() {
    let r = convergence_report(AsymptoticTarget::ConvexLevels, &[20, 10, 20]).unwrap();
    assert_eq!(r.rows.iter().map(|row| row.n).collect::<Vec<_>>(), [10, 20]);
    assert!(convergence_report(AsymptoticTarget::ConvexLevels, &[1, 10]).is_err());
    assert!(convergence_report(AsymptoticTarget::CcLevels, &[40]).is_err());
}

#[test]
fn prediction_parses_by_name() {
    let t: AsymptoticTarget = "convex-levels".parse().unwrap();
    assert_eq!(predict(t, 10).unwrap().to_sig_string(50), "409600");
    assert!("nope".parse::<AsymptoticTarget>().is_err());
}
