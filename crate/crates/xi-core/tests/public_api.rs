use xi_core::closed_formula::xi_formula;
use xi_core::exec::Exec;
use xi_core::laurent::{qbinom, qnum};
use xi_core::magic::{gen_interval_x, magic, magic_recursion_check};
use xi_core::rou::{specialize, xi_rou_formula, CycElem};
use xi_core::verify::{run_suite, Bounds, Suite};
use xi_core::words::{build_word, xi_oracle, xi_recursive};
use xi_core::{Laurent, Node, TriPoly};

fn n(i: i64) -> Node {
    Node::new(i).unwrap()
}

#[test]
fn demazure_quotients() {
    let x = |i| TriPoly::x(n(i));
    assert_eq!(x(1).demazure(n(1)).unwrap(), TriPoly::constant(Laurent::one()));
    assert_eq!(x(2).demazure(n(1)).unwrap(), TriPoly::constant(-Laurent::z_pow(-1)));
    // d_1(x1^3) = x1^2 + z x1 x2 + z^2 x2^2
    let want = &(&TriPoly::monomial([2, 0, 0]) + &TriPoly::term(Laurent::z_pow(1), [1, 1, 0]))
        + &TriPoly::term(Laurent::z_pow(2), [0, 2, 0]);
    assert_eq!(TriPoly::monomial([3, 0, 0]).demazure(n(1)).unwrap(), want);
    assert_eq!(x(3).s_action(n(1)), x(3));
    assert_eq!(x(1).s_action(n(1)), TriPoly::term(Laurent::z_pow(1), [0, 1, 0]));
}

#[test]
fn three_evaluations_agree_on_a_sample() {
    for (a, b) in [(1, 1), (2, 3), (3, 5), (4, 0), (0, 4)] {
        for i in Node::ALL {
            for k in 0..=a + b + 1 {
                let o = xi_oracle(a, b, i, k, false).unwrap();
                assert_eq!(xi_formula(a, b, i, k).unwrap(), o, "({a},{b},{i},{k})");
                assert_eq!(xi_recursive(a, b, i, k).unwrap(), o, "({a},{b},{i},{k})");
            }
        }
    }
    assert!(xi_oracle(1, 1, n(1), 3, false).unwrap().is_zero());
    assert!(xi_oracle(1, 1, n(1), 2, false).unwrap().is_one());
}

#[test]
fn words() {
    let w = build_word(3, 5, n(2));
    assert_eq!(w.render(), "1 2 3 1 3 2 1 3 2");
    assert_eq!(build_word(0, 0, n(2)).render(), "2");
}

#[test]
fn magic_examples() {
    assert_eq!(
        magic(8, 4, 3, 0).unwrap().render_q().unwrap(),
        "q^-48 + q^-36 + 2*q^-34 + 3*q^-32 + 2*q^-30 + q^-28 + q^-20 + 2*q^-18 + 3*q^-16 + 2*q^-14 + q^-12 + 1"
    );
    assert!(magic(6, 2, 0, 1).unwrap().is_one());
    assert!(magic(6, 2, -1, 1).unwrap().is_zero());
    assert!(magic_recursion_check(8, 4, 3, 0).unwrap());
    assert!(magic_recursion_check(5, 6, 2, -1).unwrap());
    assert!(magic(5, 2, 1, 2).is_err());
    let [x0, x1] = gen_interval_x(8, 4, 0).unwrap();
    assert_eq!(format!("{x0} {x1}"), "[[-2, 2]] [[-18, -14]]");
}

#[test]
fn quantum_numbers() {
    assert_eq!(qnum(3), Laurent::q_pow(2) + Laurent::one() + Laurent::q_pow(-2));
    let q = Laurent::q_pow;
    assert_eq!(qbinom(4, 2), q(4) + q(2) + Laurent::from_int(2) + q(-2) + q(-4));
    assert!(qbinom(3, 4).is_zero());
}

#[test]
fn roots_of_unity() {
    assert!(specialize(&qnum(4), 4).is_zero());
    assert_eq!(specialize(&Laurent::p_pow(24), 4), CycElem::from_int(4, 1));
    assert!(xi_rou_formula(3, 1, n(1)).unwrap().is_zero());
    let v = xi_rou_formula(3, 4, n(1)).unwrap();
    assert!(!v.is_zero());
    assert!(v.divisible_by(&9.into()));
}

#[test]
fn sequential_and_parallel_reports_match() {
    let b = Bounds {
        max_len: Some(7),
        max_nu: Some(6),
        max_m: Some(4),
        max_deg: Some(4),
    };
    for s in [Suite::Relations, Suite::FormulaVsOracle, Suite::Telescope, Suite::RouXi] {
        let seq = run_suite(s, &b, Exec::Sequential);
        let par = run_suite(s, &b, Exec::Parallel { jobs: Some(4) });
        assert_eq!(seq.to_json(), par.to_json(), "{s}");
        assert!(seq.pass, "{}", seq.to_text());
    }
}
