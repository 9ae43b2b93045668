//! Randomized algebraic laws. Every assertion is an exact identity over
//! Gaussian rationals; proptest only chooses where to look, and shrinks in
//! the small-integer domain the strategies are built from.

use std::sync::LazyLock;

use proptest::collection::vec;
use proptest::prelude::*;

use sextonions::intermediate::IntermediateAlgebra;
use sextonions::jordan::{
    cubic_identity_holds, dim, fder, jmul, tform, JordanElem, VALID_N,
};
use sextonions::linalg::{inertia, solve_in_span, Mat, SpanSolver};
use sextonions::octonion::{ZornOct, OCT_DIM, SEXT_INDICES};
use sextonions::scalar::{
    fmt_gauss, fmt_rat, gauss, gint, gzero, parse_gauss, parse_rat, rat, GaussRat, Rat,
};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn small_gauss() -> impl Strategy<Value = GaussRat> {
    (small_rat(), small_rat()).prop_map(|(re, im)| gauss(re, im))
}

fn octonion() -> impl Strategy<Value = ZornOct> {
    vec(small_gauss(), OCT_DIM).prop_map(|c| ZornOct::from_coords(&c))
}

fn sextonion() -> impl Strategy<Value = ZornOct> {
    vec(small_gauss(), SEXT_INDICES.len()).prop_map(|c| {
        let mut full = vec![gzero(); OCT_DIM];
        for (slot, v) in SEXT_INDICES.iter().zip(c) {
            full[*slot] = v;
        }
        ZornOct::from_coords(&full)
    })
}

fn any_n() -> impl Strategy<Value = u8> {
    proptest::sample::select(VALID_N.to_vec())
}

fn jordan_pair() -> impl Strategy<Value = (JordanElem, JordanElem)> {
    any_n().prop_flat_map(|n| {
        (vec(small_gauss(), dim(n)), vec(small_gauss(), dim(n))).prop_map(move |(a, b)| {
            (JordanElem::from_flat(n, &a), JordanElem::from_flat(n, &b))
        })
    })
}

fn jordan_triple() -> impl Strategy<Value = (JordanElem, JordanElem, JordanElem)> {
    any_n().prop_flat_map(|n| {
        (
            vec(small_gauss(), dim(n)),
            vec(small_gauss(), dim(n)),
            vec(small_gauss(), dim(n)),
        )
            .prop_map(move |(a, b, c)| {
                (
                    JordanElem::from_flat(n, &a),
                    JordanElem::from_flat(n, &b),
                    JordanElem::from_flat(n, &c),
                )
            })
    })
}

proptest! {
    #[test]
    fn scalar_formatting_roundtrips(r in small_rat(), z in small_gauss()) {
        let s = fmt_rat(&r);
        prop_assert!(s.contains('/'));
        let (_, den) = s.split_once('/').unwrap();
        prop_assert!(den.parse::<i64>().unwrap() > 0);
        prop_assert_eq!(parse_rat(&s), Some(r));

        let (re, im) = fmt_gauss(&z);
        prop_assert_eq!(parse_gauss(&re, &im), Some(z));
    }

    #[test]
    fn octonions_are_alternative_and_compose_the_norm(x in octonion(), y in octonion()) {
        let xx = x.mul(&x);
        prop_assert_eq!(xx.mul(&y), x.mul(&x.mul(&y)));
        prop_assert_eq!(y.mul(&xx), y.mul(&x).mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&x), x.mul(&y.mul(&x)));
        prop_assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn conjugation_reverses_products_and_caps_the_degree(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
        prop_assert_eq!(x.add(&x.conj()), ZornOct::one().scale(&x.trace()));
        prop_assert_eq!(x.mul(&x.conj()), ZornOct::one().scale(&x.norm()));
        // x^2 - t(x) x + N(x) 1 = 0.
        let quad = x
            .mul(&x)
            .sub(&x.scale(&x.trace()))
            .add(&ZornOct::one().scale(&x.norm()));
        prop_assert!(quad.is_zero());
    }

    #[test]
    fn sextonions_multiply_into_sextonions(x in sextonion(), y in sextonion()) {
        prop_assert!(x.is_sextonion());
        prop_assert!(x.mul(&y).is_sextonion());
    }

    #[test]
    fn row_rank_equals_column_rank(entries in vec(small_gauss(), 24)) {
        let m = Mat::from_fn(4, 6, |i, j| entries[i * 6 + j].clone());
        let mut rows = SpanSolver::new(6);
        let mut by_rows = 0;
        for i in 0..4 {
            if rows.feed(m.row(i)) {
                by_rows += 1;
            }
        }
        let mt = m.transpose();
        let mut cols = SpanSolver::new(4);
        let mut by_cols = 0;
        for j in 0..6 {
            if cols.feed(mt.row(j)) {
                by_cols += 1;
            }
        }
        prop_assert_eq!(by_rows, by_cols);
    }

    #[test]
    fn solve_in_span_recombines_exactly(
        flat in vec(small_gauss(), 27),
        coeffs in vec(small_gauss(), 3),
    ) {
        let basis: Vec<Mat> = (0..3)
            .map(|k| Mat::from_fn(3, 3, |i, j| flat[9 * k + 3 * i + j].clone()))
            .collect();
        let mut target = Mat::zeros(3, 3);
        for (c, b) in coeffs.iter().zip(&basis) {
            target.add_scaled(c, b);
        }
        let solved = solve_in_span(&target, &basis).expect("built inside the span");
        let mut back = Mat::zeros(3, 3);
        for (c, b) in solved.iter().zip(&basis) {
            back.add_scaled(c, b);
        }
        prop_assert_eq!(back, target);
    }

    #[test]
    fn inertia_is_a_congruence_invariant(
        seed in vec(-5i64..=5, 16),
        shear in vec(small_rat(), 6),
    ) {
        // Any real symmetric start.
        let a = Mat::from_fn(4, 4, |i, j| gint(seed[4 * i + j]));
        let g = a.add(&a.transpose());
        // A unit-diagonal upper-triangular transform is always invertible.
        let mut s = Mat::identity(4);
        let mut k = 0;
        for i in 0..4 {
            for j in (i + 1)..4 {
                s[(i, j)] = gauss(shear[k].clone(), rat(0, 1));
                k += 1;
            }
        }
        let congruent = s.transpose().mul(&g).mul(&s);
        prop_assert_eq!(inertia(&congruent).unwrap(), inertia(&g).unwrap());
    }

    #[test]
    fn jordan_product_is_commutative_and_jordan(
        (x, y) in jordan_pair(),
    ) {
        prop_assert_eq!(jmul(&x, &y), jmul(&y, &x));
        // (x . y) . x^2 = x . (y . x^2).
        let x2 = jmul(&x, &x);
        prop_assert_eq!(jmul(&jmul(&x, &y), &x2), jmul(&x, &jmul(&y, &x2)));
    }

    #[test]
    fn trace_form_is_associative((x, y, z) in jordan_triple()) {
        prop_assert_eq!(tform(&jmul(&x, &y), &z), tform(&x, &jmul(&y, &z)));
    }

    #[test]
    fn commutators_of_multiplications_are_derivations((x, y, z) in jordan_triple()) {
        let d = fder(&x, &y);
        let lhs = d.apply(&jmul(&z, &z));
        let rhs = jmul(&d.apply(&z), &z).scale(&gint(2));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cubic_identity_on_random_elements((x, _) in jordan_pair()) {
        prop_assert!(cubic_identity_holds(&x));
    }
}

static C3H: LazyLock<IntermediateAlgebra> = LazyLock::new(|| IntermediateAlgebra::new(1));

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn intermediate_bracket_is_antisymmetric_and_jacobi(
        a in vec(small_gauss(), 36),
        b in vec(small_gauss(), 36),
        c in vec(small_gauss(), 36),
    ) {
        let ia = &*C3H;
        let (x, y, z) = (ia.from_coords(&a), ia.from_coords(&b), ia.from_coords(&c));
        let xy = ia.coordinatize(&ia.bracket(&x, &y)).unwrap();
        let yx = ia.coordinatize(&ia.bracket(&y, &x)).unwrap();
        for (p, q) in xy.iter().zip(&yx) {
            prop_assert_eq!(p.clone(), -(q.clone()));
        }
        let t1 = ia.coordinatize(&ia.bracket(&ia.bracket(&x, &y), &z)).unwrap();
        let t2 = ia.coordinatize(&ia.bracket(&ia.bracket(&y, &z), &x)).unwrap();
        let t3 = ia.coordinatize(&ia.bracket(&ia.bracket(&z, &x), &y)).unwrap();
        for i in 0..t1.len() {
            prop_assert_eq!(&t1[i] + &t2[i] + &t3[i], gint(0));
        }
    }
}
