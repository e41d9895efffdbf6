//! Cross-module flows: minimizer vs closed forms, witness feasibility, and
//! quadratic-solver soundness on randomized parameters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use hodge_bounds::complex::delta_series;
use hodge_bounds::constraint::{Constraint, Origin, Relation};
use hodge_bounds::hodge::{MValue, ManifoldProfile};
use hodge_bounds::minimize::{minimize_hodge_number, quadratic_bound_for_target, MinimizeOptions};
use hodge_bounds::var::HodgeVar;
use hodge_bounds::{check_diamond, solve_quadratic_bound, SeriesKind};

#[test]
fn minimizer_matches_closed_form_ceiling_for_threefold_h11() {
    // whenever no other constraint binds, min h^{1,1} is the ceiling of the
    // degree-2 closed form
    for q in [10u64, 20, 50] {
        let pf = ManifoldProfile::new(3, q, MValue::Finite(3)).unwrap();
        let target = HodgeVar::hodge(1, 1);
        let min = minimize_hodge_number(target, &pf, &BTreeMap::new(), &MinimizeOptions::default())
            .unwrap();
        let bound = quadratic_bound_for_target(&pf, target).unwrap().unwrap();
        let mut asg = BTreeMap::new();
        asg.insert(HodgeVar::Q, BigInt::from(q));
        let ceil = bound.ceil_at(&asg).unwrap().unwrap();
        let linear_floor = BigInt::from(2 * q - 1);
        let expected = ceil.clone().max(linear_floor);
        assert_eq!(BigInt::from(min.value), expected, "q={q}");
    }
}

#[test]
fn minimizer_witness_is_always_feasible() {
    let cases: [(u32, u64, u32, (u32, u32)); 5] = [
        (2, 5, 2, (0, 2)),
        (3, 10, 3, (1, 1)),
        (3, 12, 3, (1, 2)),
        (4, 9, 4, (1, 3)),
        (3, 8, 2, (1, 1)),
    ];
    for (d, q, m, (p, j)) in cases {
        let pf = ManifoldProfile::new(d, q, MValue::Finite(m)).unwrap();
        let r = minimize_hodge_number(
            HodgeVar::hodge(p, j),
            &pf,
            &BTreeMap::new(),
            &MinimizeOptions::default(),
        )
        .unwrap();
        let report = check_diamond(&r.witness, &pf, &r.catalog).unwrap();
        assert!(
            report.feasible,
            "witness infeasible for d={d} q={q} m={m} target h^{{{p},{j}}}: {:?}",
            report.violated_entries().collect::<Vec<_>>()
        );
    }
}

#[test]
fn quadratic_solver_soundness_on_random_parameters() {
    // ceil(bound) satisfies the source constraint, floor(bound)-1 violates
    // it, across 50 random parameter assignments with nonnegative radicand
    let pf = ManifoldProfile::new(4, 6, MValue::Finite(4)).unwrap();
    let cs = delta_series(&pf, 1, 3).unwrap();
    let c = Constraint::new(
        4,
        1,
        cs.series.coeff(2).clone(),
        Relation::NonNeg,
        vec![],
        Origin::Coefficient {
            kind: SeriesKind::Delta,
            index: 2,
        },
    );
    let target = HodgeVar::hodge(1, 2);
    let bound = solve_quadratic_bound(&c, target).unwrap();

    let mut state = 0x853c49e6748fea9bu64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut tried = 0;
    while tried < 50 {
        let qv = (next() % 50 + 1) as i64;
        let h11 = (next() % 400) as i64;
        let mut asg = BTreeMap::new();
        asg.insert(HodgeVar::Q, BigInt::from(qv));
        asg.insert(HodgeVar::hodge(1, 1), BigInt::from(h11));
        let rad = bound.radicand.eval(&asg).unwrap();
        let Some(z) = bound.ceil_at(&asg).unwrap() else {
            continue; // radicand negative: side condition fails, skip
        };
        tried += 1;
        let mut full = asg.clone();
        full.insert(target, z.clone());
        assert!(
            !c.expr.eval(&full).unwrap().is_negative(),
            "ceil violates at q={qv} h11={h11}"
        );
        // two below the ceiling is strictly below the larger root; when the
        // root gap sqrt(radicand) exceeds 3 it is still above the smaller
        // root, so the constraint must fail there
        if rad > num_rational::BigRational::from_integer(10.into()) {
            full.insert(target, &z - 2);
            assert!(
                c.expr.eval(&full).unwrap().is_negative(),
                "between-roots value satisfied the constraint at q={qv} h11={h11}"
            );
        }
    }
}
