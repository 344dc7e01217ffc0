//! End-to-end pipelines across module boundaries, using only the public API.

use parthopf_core::fixtures::{
    builtin_fixtures, m2_blocked, projection_k2_action, sweedler_partial_k2_action, FixtureKind,
};
use parthopf_core::gma_partial::{blocked_datum, check_block_data, decompose, synthesize};
use parthopf_core::group_datum::{
    check_group_datum, datum_to_theorem_data, theorem_data_to_datum,
};
use parthopf_core::hopf::check_hopf;
use parthopf_core::paction::{
    check_group_action, check_left_partial_action, group_to_hopf, hopf_to_group, to_right,
    check_right_partial_action,
};
use parthopf_core::smash::{crossed_iso, left_smash, right_smash, CrossedIsoSide};

#[test]
fn every_fixture_survives_its_full_pipeline() {
    for f in builtin_fixtures() {
        match f.kind {
            FixtureKind::BlockedAction {
                blocked,
                action,
                invariant,
                ..
            } => {
                assert!(check_hopf(&action.hopf).pass(), "{}", f.name);
                assert!(
                    check_left_partial_action(&action, true).unwrap().pass(),
                    "{}",
                    f.name
                );
                let rp = to_right(&action).unwrap();
                assert!(check_right_partial_action(&rp).unwrap().pass(), "{}", f.name);
                left_smash(&action).unwrap();
                right_smash(&rp).unwrap();
                if invariant {
                    let data = decompose(&blocked, &action).unwrap();
                    assert!(check_block_data(&data).unwrap().pass(), "{}", f.name);
                    assert_eq!(synthesize(&data).unwrap().action, action.action, "{}", f.name);
                }
                // the blocked algebra always reassembles from its own datum
                blocked_datum(&blocked).unwrap();
            }
            FixtureKind::Datum(d) => {
                assert!(check_group_datum(&d).unwrap().pass(), "{}", f.name);
                let data = datum_to_theorem_data(&d).unwrap();
                let back = theorem_data_to_datum(&data).unwrap();
                assert_eq!(back.gamma, d.gamma, "{}", f.name);
            }
        }
    }
}

#[test]
fn group_bridge_round_trips_on_the_projection_action() {
    let p = projection_k2_action();
    let u = hopf_to_group(&p).unwrap();
    assert!(check_group_action(&u).unwrap().pass());
    let p2 = group_to_hopf(&u).unwrap();
    assert_eq!(p2.action, p.action);
    for side in [CrossedIsoSide::LeftEta, CrossedIsoSide::RightLambda] {
        let (_, rep) = crossed_iso(&u, side).unwrap();
        assert!(rep.pass(), "{:?}", rep.first_failure());
    }
}

#[test]
fn sweedler_partial_action_decomposes_over_the_two_block_grid() {
    // the action lives on 𝕜×𝕜 viewed as a 2-block generalized matrix algebra
    let p = sweedler_partial_k2_action();
    assert!(check_left_partial_action(&p, true).unwrap().pass());
    let s = left_smash(&p).unwrap();
    assert!(s.algebra.dim <= p.algebra.dim * p.hopf.dim());
    // the blocked M₂ fixture exists independently of any action
    let r = m2_blocked();
    assert_eq!(r.total.dim, 4);
}
