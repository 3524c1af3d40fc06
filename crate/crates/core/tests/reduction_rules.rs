mod common;

use casimir::symfun::{eval_power_product, reduce_to_power, to_power_basis};
use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn closed_rules_match_symbol_for_symbol() {
    for (lhs, rhs) in printed_closed_rules() {
        assert_eq!(reduce_to_power(&lhs), rhs, "q{lhs}");
    }
}

#[test]
fn complete_recursive_rules_hold() {
    let rules = recursive_rules(9, false);
    assert!(rules.len() > 60);
    for r in rules.iter().filter(|r| !INCOMPLETE_RULES.contains(&r.name)) {
        assert!(r.holds(), "{} for q{}", r.name, r.lhs);
    }
}

#[test]
fn three_printed_rules_lack_a_term() {
    let printed = recursive_rules(9, false);
    let corrected = recursive_rules(9, true);
    for name in INCOMPLETE_RULES {
        let broken: Vec<_> = printed.iter().filter(|r| r.name == name).collect();
        assert!(!broken.is_empty());
        assert!(broken.iter().all(|r| !r.holds()), "{name}");
        assert!(
            corrected
                .iter()
                .filter(|r| r.name == name)
                .all(|r| r.holds()),
            "{name}"
        );
    }
}

#[test]
fn smallest_incomplete_instances() {
    let corrected = recursive_rules(7, true);
    let lhs: Vec<_> = corrected
        .iter()
        .filter(|r| INCOMPLETE_RULES.contains(&r.name))
        .map(|r| r.lhs.clone())
        .collect();
    assert!(lhs.contains(&part(&[2, 2, 2, 1])));
    assert!(lhs.contains(&part(&[2, 2, 1, 1])));
    assert!(lhs.contains(&part(&[2, 2, 1, 1, 1])));
}

#[test]
fn reduction_agrees_with_direct_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in all_partitions_up_to(7) {
        let reduced = reduce_to_power(&p);
        for len in 1..=8 {
            let xs = random_tuple(&mut rng, len);
            assert_eq!(
                eval_power_product(&reduced, &xs),
                monomial_oracle(&p, &xs),
                "{p} on {len} values"
            );
        }
    }
}

#[test]
fn power_basis_is_idempotent() {
    for p in all_partitions_up_to(6) {
        let once = reduce_to_power(&p);
        assert_eq!(to_power_basis(&once), once);
    }
}
