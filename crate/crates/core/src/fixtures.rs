//! The canonical example battery shipped with the crate.
//!
//! Every fixture is a small exact object — a blocked algebra with a partial
//! action, or a group datum — with known checker behavior. The acceptance
//! suite and the CLI `--fixture` flag both draw from `builtin_fixtures()`.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{endomorphism_algebra, FinDimAlgebra};
use crate::gma::{assemble, peirce, BlockedAlgebra, GeneralizedMatrixDatum};
use crate::group_datum::GroupDatum;
use crate::hopf::{group_algebra, sweedler_h4, GroupTable, HopfAlgebraData};
use crate::linalg::{pair_index, Matrix};
use crate::paction::{
    check_left_partial_action, trivial_left_action, PartialActionMap, Side,
    UnitalPartialGroupAction,
};
use crate::scalar::{Field, Scalar};

/// One entry of the battery.
pub struct Fixture {
    pub name: &'static str,
    pub kind: FixtureKind,
}

pub enum FixtureKind {
    /// A partial action presented on a blocked algebra.
    BlockedAction {
        blocked: BlockedAlgebra,
        action: PartialActionMap,
        /// Whether every block is expected invariant (decomposition applies).
        invariant: bool,
        /// Whether the action of some element is genuinely partial
        /// (`h ⇀ 1 ≠ ε(h)·1`).
        genuinely_partial: bool,
    },
    /// A group datum in the sense of the block-bijection description.
    Datum(GroupDatum),
}

fn q(n: i64) -> Scalar {
    Field::Rationals.from_i64(n)
}

fn half() -> Scalar {
    Field::Rationals.from_ratio(1, 2).unwrap()
}

pub fn scalar_algebra(f: Field) -> FinDimAlgebra {
    FinDimAlgebra::new(f, 1, vec![f.one()], vec![f.one()]).unwrap()
}

/// `𝕜^m` with componentwise product.
pub fn diagonal_algebra(f: Field, m: usize) -> FinDimAlgebra {
    let mut mult = vec![f.zero(); m * m * m];
    for i in 0..m {
        mult[(i * m + i) * m + i] = f.one();
    }
    FinDimAlgebra::new(f, m, mult, vec![f.one(); m]).unwrap()
}

/// Any algebra as a single-block grid.
pub fn single_block(a: &FinDimAlgebra) -> BlockedAlgebra {
    assemble(&GeneralizedMatrixDatum::from_algebra(a))
}

/// M₂ split along the diagonal matrix units; basis E₁₁, E₁₂, E₂₁, E₂₂.
pub fn m2_blocked() -> BlockedAlgebra {
    let a = endomorphism_algebra(Field::Rationals, 2).unwrap();
    let e11 = vec![q(1), q(0), q(0), q(0)];
    let e22 = vec![q(0), q(0), q(0), q(1)];
    assemble(&peirce(&a, &[e11, e22]).unwrap().0)
}

/// The `1_g = 0` action of ℤ/2 on 𝕜.
pub fn killing_scalar_action() -> PartialActionMap {
    let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
    let mut action = Matrix::zero(Field::Rationals, 1, 2);
    *action.at_mut(0, pair_index(0, 1, 0)) = q(1);
    PartialActionMap {
        hopf: h,
        algebra: scalar_algebra(Field::Rationals),
        side: Side::Left,
        action,
    }
}

/// ℤ/2 on 𝕜² with `D_g = 𝕜e₁`: `g·(a,b) = (a,0)`.
pub fn projection_k2_action() -> PartialActionMap {
    let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
    let a = diagonal_algebra(Field::Rationals, 2);
    let mut action = Matrix::zero(Field::Rationals, 2, 4);
    *action.at_mut(0, pair_index(0, 2, 0)) = q(1);
    *action.at_mut(1, pair_index(0, 2, 1)) = q(1);
    *action.at_mut(0, pair_index(1, 2, 0)) = q(1);
    PartialActionMap {
        hopf: h,
        algebra: a,
        side: Side::Left,
        action,
    }
}

/// ℤ/2 conjugation by diag(1,−1) on the blocked M₂.
pub fn conjugation_m2_action(r: &BlockedAlgebra) -> PartialActionMap {
    let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
    let mut action = Matrix::zero(Field::Rationals, 4, 8);
    let signs = [q(1), q(-1), q(-1), q(1)];
    for b in 0..4 {
        *action.at_mut(b, pair_index(0, 4, b)) = q(1);
        *action.at_mut(b, pair_index(1, 4, b)) = signs[b].clone();
    }
    PartialActionMap {
        hopf: h,
        algebra: r.total.clone(),
        side: Side::Left,
        action,
    }
}

/// The global ℤ/2 swap σ(x) = JxJ⁻¹ on M₂; exchanges the Peirce blocks.
pub fn swap_m2_action(r: &BlockedAlgebra) -> PartialActionMap {
    let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
    let mut action = Matrix::zero(Field::Rationals, 4, 8);
    let perm = [3usize, 2, 1, 0];
    for b in 0..4 {
        *action.at_mut(b, pair_index(0, 4, b)) = q(1);
        *action.at_mut(perm[b], pair_index(1, 4, b)) = q(1);
    }
    PartialActionMap {
        hopf: h,
        algebra: r.total.clone(),
        side: Side::Left,
        action,
    }
}

/// The genuinely partial Sweedler action on 𝕜×𝕜 committed from the grid
/// solve: `λ = (1, 0, ½, ½)` on the first factor, ε-trivial on the second.
pub fn sweedler_partial_k2_action() -> PartialActionMap {
    let h = sweedler_h4(Field::Rationals).unwrap();
    let a = diagonal_algebra(Field::Rationals, 2);
    let lambda = [q(1), q(0), half(), half()];
    let eps = [q(1), q(1), q(0), q(0)];
    let mut action = Matrix::zero(Field::Rationals, 2, 8);
    for hh in 0..4 {
        *action.at_mut(0, pair_index(hh, 2, 0)) = lambda[hh].clone();
        *action.at_mut(1, pair_index(hh, 2, 1)) = eps[hh].clone();
    }
    PartialActionMap {
        hopf: h,
        algebra: a,
        side: Side::Left,
        action,
    }
}

/// The partial S₃ action on 𝕜e₁ ⊕ 𝕜e₂ obtained by restricting the global
/// permutation action on 𝕜³ to the ideal spanned by the first two
/// idempotents: `σ ⇀ e_j = e_{σ(j)}` when `σ(j) ≤ 2` and `0` otherwise.
pub fn s3_restriction_action() -> PartialActionMap {
    let g = GroupTable::symmetric3();
    let h = group_algebra(&g, Field::Rationals);
    let a = diagonal_algebra(Field::Rationals, 2);
    // one-line permutations in the lexicographic order of the S₃ table
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut action = Matrix::zero(Field::Rationals, 2, 12);
    for (s, p) in perms.iter().enumerate() {
        for j in 0..2 {
            if p[j] < 2 {
                *action.at_mut(p[j], pair_index(s, 2, j)) = q(1);
            }
        }
    }
    PartialActionMap {
        hopf: h,
        algebra: a,
        side: Side::Left,
        action,
    }
}

/// ℤ/3 conjugation by diag(1,2,4) over 𝔽₇ on the 3×3 matrix-unit grid, as
/// a group datum.
pub fn z3_f7_datum() -> GroupDatum {
    let f = Field::Prime(7);
    let s = |n: i64| f.from_i64(n);
    let one = Matrix::from_rows(f, &[vec![s(1)]]).unwrap();
    let theta = vec![one; 27];
    let datum = GeneralizedMatrixDatum::new(
        f,
        3,
        vec![1; 9],
        theta,
        vec![vec![s(1)], vec![s(1)], vec![s(1)]],
    )
    .unwrap();
    let group = GroupTable::cyclic(3);
    let k = scalar_algebra(f);
    let trivial = UnitalPartialGroupAction {
        group: group.clone(),
        algebra: k.clone(),
        unit_idempotents: vec![k.unit.clone(); 3],
        maps: vec![Matrix::identity(f, 1); 3],
    };
    let d = [[1i64, 1, 1], [1, 2, 4], [1, 4, 2]];
    let dinv = [[1i64, 1, 1], [1, 4, 2], [1, 2, 4]];
    let mut gamma = Vec::new();
    for g in 0..3 {
        for i in 0..3 {
            for j in 0..3 {
                gamma.push(Matrix::from_rows(f, &[vec![s(d[g][i] * dinv[g][j])]]).unwrap());
            }
        }
    }
    GroupDatum {
        datum,
        group,
        alpha: vec![trivial.clone(), trivial.clone(), trivial],
        gamma,
    }
}

/// The global ℤ/3 conjugation action on the blocked 3×3 grid over 𝔽₇
/// corresponding to `z3_f7_datum`.
pub fn z3_f7_blocked_action() -> (BlockedAlgebra, PartialActionMap) {
    let d = z3_f7_datum();
    let f = d.datum.field;
    let r = assemble(&d.datum);
    let h = group_algebra(&d.group, f);
    let ratios = [[1i64, 4, 2], [2, 1, 4], [4, 2, 1]]; // d_i·d_j⁻¹ at g = 1
    let sq = |x: i64| (x * x) % 7;
    let mut action = Matrix::zero(f, 9, 27);
    for i in 0..3usize {
        for j in 0..3usize {
            let b = r.offset(i, j);
            *action.at_mut(b, pair_index(0, 9, b)) = f.one();
            *action.at_mut(b, pair_index(1, 9, b)) = f.from_i64(ratios[i][j]);
            *action.at_mut(b, pair_index(2, 9, b)) = f.from_i64(sq(ratios[i][j]));
        }
    }
    let p = PartialActionMap {
        hopf: h,
        algebra: r.total.clone(),
        side: Side::Left,
        action,
    };
    (r, p)
}

fn blocked_fixture(
    name: &'static str,
    blocked: BlockedAlgebra,
    action: PartialActionMap,
    invariant: bool,
    genuinely_partial: bool,
) -> Fixture {
    Fixture {
        name,
        kind: FixtureKind::BlockedAction {
            blocked,
            action,
            invariant,
            genuinely_partial,
        },
    }
}

fn eps_trivial(h: &HopfAlgebraData, blocked: BlockedAlgebra, name: &'static str) -> Fixture {
    let action = trivial_left_action(h, &blocked.total);
    blocked_fixture(name, blocked, action, true, false)
}

/// The canonical battery. The swap fixture is the only one expected to fail
/// block invariance; every other blocked action passes the left checker and
/// is invariant on all blocks.
pub fn builtin_fixtures() -> Vec<Fixture> {
    let f = Field::Rationals;
    let z2 = group_algebra(&GroupTable::cyclic(2), f);
    let z3 = group_algebra(&GroupTable::cyclic(3), f);
    let s3 = group_algebra(&GroupTable::symmetric3(), f);
    let h4 = sweedler_h4(f).unwrap();
    let mut out = Vec::new();

    // (1) ε-trivial family
    out.push(eps_trivial(&z2, single_block(&scalar_algebra(f)), "eps-trivial-z2-k"));
    out.push(eps_trivial(&z3, single_block(&diagonal_algebra(f, 2)), "eps-trivial-z3-k2"));
    out.push(eps_trivial(&s3, m2_blocked(), "eps-trivial-s3-m2"));
    out.push(eps_trivial(&h4, single_block(&diagonal_algebra(f, 2)), "eps-trivial-sweedler-k2"));

    // (2) the 1_g = 0 action on 𝕜
    let p = killing_scalar_action();
    out.push(blocked_fixture(
        "killing-z2-k",
        single_block(&p.algebra),
        p,
        true,
        true,
    ));

    // (3) ℤ/2 on 𝕜² with D_g = 𝕜e₁
    let p = projection_k2_action();
    out.push(blocked_fixture(
        "projection-z2-k2",
        single_block(&p.algebra),
        p,
        true,
        true,
    ));

    // (4) conjugation by diag(1,−1) on the blocked M₂
    let r = m2_blocked();
    let p = conjugation_m2_action(&r);
    out.push(blocked_fixture("conjugation-z2-m2", r, p, true, false));

    // (5) the swap action: invariance-failure fixture
    let r = m2_blocked();
    let p = swap_m2_action(&r);
    out.push(blocked_fixture("swap-z2-m2", r, p, false, false));

    // (6) the genuinely partial Sweedler action from the grid solve
    let p = sweedler_partial_k2_action();
    out.push(blocked_fixture(
        "sweedler-partial-k2",
        single_block(&p.algebra),
        p,
        true,
        true,
    ));

    // a genuinely partial noncommutative-group fixture
    let p = s3_restriction_action();
    out.push(blocked_fixture(
        "s3-restriction-k2",
        single_block(&p.algebra),
        p,
        true,
        true,
    ));

    // (7) the 3-block ℤ/3 global conjugation, as blocked action and datum
    let (r, p) = z3_f7_blocked_action();
    out.push(blocked_fixture("z3-conjugation-m3", r, p, true, false));
    out.push(Fixture {
        name: "z3-conjugation-datum",
        kind: FixtureKind::Datum(z3_f7_datum()),
    });

    out
}

/// Exact grid solve for diagonal Sweedler actions on 𝕜×𝕜: both components
/// are scalar functionals on `{1, g, x, gx}` with value 1 at the identity
/// and the remaining six values drawn from `{0, 1, ½}`. Returns every
/// action matrix in the grid that passes the left partial-action checker.
/// The committed fixture `sweedler_partial_k2_action` is one of them.
pub fn solve_sweedler_diagonal_grid() -> Vec<Matrix> {
    let f = Field::Rationals;
    let h = sweedler_h4(f).unwrap();
    let a = diagonal_algebra(f, 2);
    let grid = [q(0), q(1), half()];
    let mut found = Vec::new();
    let mut digits = [0usize; 6];
    loop {
        let pick = |d: usize| grid[digits[d]].clone();
        let mu = [
            [q(1), pick(0), pick(1), pick(2)],
            [q(1), pick(3), pick(4), pick(5)],
        ];
        let mut action = Matrix::zero(f, 2, 8);
        for hh in 0..4 {
            for i in 0..2 {
                *action.at_mut(i, pair_index(hh, 2, i)) = mu[i][hh].clone();
            }
        }
        let p = PartialActionMap {
            hopf: h.clone(),
            algebra: a.clone(),
            side: Side::Left,
            action,
        };
        if let Ok(rep) = check_left_partial_action(&p, false) {
            if rep.pass() {
                found.push(p.action);
            }
        }
        // odometer over the 3^6 grid
        let mut carry = 0;
        loop {
            digits[carry] += 1;
            if digits[carry] < grid.len() {
                break;
            }
            digits[carry] = 0;
            carry += 1;
            if carry == digits.len() {
                return found;
            }
        }
    }
}


#[cfg(test)]
mod probe_tests {
    use super::*;
    use crate::gma_partial::{check_remark_identities, decompose};

    #[test]
    fn s3_restriction_rewrites_hold_but_bimodule_probe_fails() {
        let p = s3_restriction_action();
        let r = single_block(&p.algebra);
        let data = decompose(&r, &p).unwrap();
        let rep = check_remark_identities(&data).unwrap();
        assert!(rep.pass(), "failed at {:?}", rep.first_failure());
        let probe = rep.item("bimodule(0,0)").unwrap();
        assert!(probe.informational);
        assert!(!probe.pass);
    }
}
