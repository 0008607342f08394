use super::field::poly_mul;
use super::sparse::{Echelon, PivotOrder, SparseVec};
use super::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn z(l: u32, k: i64) -> CycNum {
    root_of_unity(l, k)
}

#[test]
fn i_squared_is_minus_one() {
    assert_eq!(&z(4, 1) * &z(4, 1), CycNum::from_int(4, -1));
}

#[test]
fn fifth_roots_sum_to_zero() {
    let mut acc = CycNum::zero(5);
    for k in 0..5 {
        acc += &z(5, k);
    }
    assert!(acc.is_zero());
}

#[test]
fn twisted_character_sum_picks_out_one_root() {
    // (1/n) Σ_{w,r} q^{-wr} q^{i r} q^{j w} = q^{ij} with n = 3, i = 1, j = 2
    let mut acc = CycNum::zero(3);
    for w in 0..3 {
        for r in 0..3 {
            acc += &z(3, -w * r + r + 2 * w);
        }
    }
    let acc = &acc * &CycNum::from_ratio(3, 1, 3);
    assert_eq!(acc, z(3, 2));
}

#[test]
fn lifts_meet_at_lcm() {
    let (a, b) = lift_to_common_conductor(&z(2, 1), &z(3, 1));
    assert_eq!((a.conductor(), b.conductor()), (6, 6));
    assert_eq!(a, CycNum::from_int(6, -1));
    assert_eq!(b, z(6, 2));
    let (a, b) = lift_to_common_conductor(&CycNum::one(2), &CycNum::one(3));
    assert!(a.is_one() && b.is_one());
    let (a, b) = lift_to_common_conductor(&z(4, 1), &z(8, 2));
    assert_eq!(a, b);
    assert_eq!(a.conductor(), 8);
}

#[test]
fn equality_across_conductors() {
    assert_eq!(z(4, 1), z(8, 2));
    assert_eq!(z(12, 4), z(3, 1));
    assert_ne!(z(12, 4), z(3, 2));
}

#[test]
fn cyclotomic_polynomials_multiply_to_x_l_minus_one() {
    for l in 1..=60u32 {
        let mut prod = vec![BigInt::from(1)];
        for d in 1..=l {
            if l % d == 0 {
                prod = poly_mul(&prod, &cyclotomic_polynomial(d));
            }
        }
        let mut expect = vec![BigInt::from(0); l as usize + 1];
        expect[0] = BigInt::from(-1);
        expect[l as usize] = BigInt::from(1);
        assert_eq!(prod, expect, "L = {l}");
    }
}

#[test]
fn cyclotomic_degree_is_totient() {
    let totient = |n: u32| (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count();
    for l in 1..=60u32 {
        assert_eq!(cyclotomic_polynomial(l).len() - 1, totient(l), "L = {l}");
    }
}

#[test]
fn kernel_of_identity_and_zero() {
    assert!(CycMatrix::identity(2, 1).kernel_basis().is_empty());
    assert_eq!(CycMatrix::zeros(1, 2, 1).kernel_basis().len(), 2);
}

#[test]
fn kernel_of_one_by_two() {
    let m = CycMatrix::from_rows(vec![vec![CycNum::one(4), -z(4, 1)]], 4);
    let k = m.kernel_basis();
    assert_eq!(k.len(), 1);
    assert!(m.apply(&k[0]).iter().all(CycNum::is_zero));
    // proportional to (ζ4, 1)
    let ratio = &k[0][0] / &k[0][1];
    assert_eq!(ratio, z(4, 1));
}

#[test]
fn rank_examples() {
    assert_eq!(CycMatrix::identity(5, 7).rank(), 5);
    let m = CycMatrix::from_rows(
        vec![vec![CycNum::one(3), z(3, 1)], vec![z(3, 2), CycNum::one(3)]],
        3,
    );
    assert_eq!(m.rank(), 1);
}

#[test]
fn solve_and_inconsistency() {
    let m = CycMatrix::from_rows(
        vec![vec![CycNum::one(4), z(4, 1)], vec![CycNum::one(4), z(4, 1)]],
        4,
    );
    let x = m.solve(&[CycNum::from_int(4, 2), CycNum::from_int(4, 2)]).unwrap();
    assert_eq!(m.apply(&x), vec![CycNum::from_int(4, 2), CycNum::from_int(4, 2)]);
    assert_eq!(
        m.solve(&[CycNum::one(4), CycNum::zero(4)]),
        Err(crate::HopfError::InconsistentSystem)
    );
}

#[test]
fn intersection_with_self_and_with_complement() {
    let a = CycMatrix::from_rows(
        vec![
            vec![CycNum::one(5), z(5, 1), CycNum::zero(5)],
            vec![CycNum::zero(5), CycNum::one(5), z(5, 3)],
        ],
        5,
    );
    assert_eq!(a.row_space_intersection(&a).rows(), 2);
    let b = CycMatrix::from_rows(vec![vec![CycNum::zero(5), CycNum::zero(5), CycNum::one(5)]], 5);
    assert_eq!(a.row_space_intersection(&b).rows(), 0);
    let c = CycMatrix::from_rows(vec![vec![CycNum::one(5), CycNum::zero(5), -z(5, 4)]], 5);
    // (1, ζ, 0) − ζ(0, 1, ζ³) = (1, 0, −ζ⁴)
    let i = a.row_space_intersection(&c);
    assert_eq!(i.rows(), 1);
}

#[test]
fn display_is_readable() {
    let x = &CycNum::from_ratio(8, 1, 2) - &z(8, 3);
    assert_eq!(x.to_string(), "1/2 - ζ8^3");
}

fn arb_cyc(l: u32) -> impl Strategy<Value = CycNum> {
    let d = cyclotomic_polynomial(l).len() - 1;
    proptest::collection::vec((-6i64..=6, 1i64..=4), d).prop_map(move |cs| {
        let coeffs: Vec<BigRational> = cs
            .into_iter()
            .map(|(n, q)| BigRational::new(n.into(), q.into()))
            .collect();
        CycNum::from_coefficients(l, &coeffs)
    })
}

fn arb_conductor_and_three() -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
    (1u32..=24).prop_flat_map(|l| (arb_cyc(l), arb_cyc(l), arb_cyc(l)))
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in arb_conductor_and_three()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&(&a - &a)).is_zero());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!((&a * &inv).is_one());
            if !b.is_zero() {
                prop_assert!(!(&a * &b).is_zero());
            }
        }
    }

    #[test]
    fn roots_of_unity_have_order_dividing_l(l in 1u32..=40, k in -80i64..80) {
        prop_assert!(root_of_unity(l, k).pow(l as i64).is_one());
        prop_assert_eq!(root_of_unity(l, k) * root_of_unity(l, -k), CycNum::one(l));
    }

    #[test]
    fn lift_is_a_ring_map((a, b, _c) in arb_conductor_and_three(), r in 1u32..=4) {
        let l2 = a.conductor() * r;
        prop_assert_eq!((&a * &b).lift(l2), &a.lift(l2) * &b.lift(l2));
        prop_assert_eq!((&a + &b).lift(l2), &a.lift(l2) + &b.lift(l2));
        prop_assert_eq!(a.lift(l2), a.clone());
    }

    #[test]
    fn kernel_vectors_annihilate(
        l in prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]),
        rows in 1usize..4, cols in 1usize..5, seed in proptest::collection::vec(-2i64..=2, 40)
    ) {
        let mut data = Vec::new();
        for r in 0..rows {
            let mut row = Vec::new();
            for c in 0..cols {
                let s = seed[(r * cols + c) % seed.len()];
                row.push(&CycNum::from_int(l, s) * &root_of_unity(l, (r + 2 * c) as i64));
            }
            data.push(row);
        }
        let m = CycMatrix::from_rows(data, l);
        let k = m.kernel_basis();
        prop_assert_eq!(k.len(), cols - m.rank());
        for v in &k {
            prop_assert!(m.apply(v).iter().all(CycNum::is_zero));
        }
        // the sparse elimination agrees with the dense one
        let mut e = Echelon::new(PivotOrder::Leftmost);
        for r in 0..m.rows() {
            e.insert(sparse::from_dense(m.row(r)));
        }
        prop_assert_eq!(e.rank(), m.rank());
        let ks: Vec<Vec<CycNum>> = e.kernel(cols, l).iter().map(|v| sparse::to_dense(v, cols, l)).collect();
        prop_assert_eq!(ks, k);
    }
}

#[test]
fn rightmost_echelon_reduces_to_normal_form() {
    let l = 1;
    let mut e = Echelon::new(PivotOrder::Rightmost);
    let v: SparseVec = [(0, CycNum::one(l)), (2, CycNum::from_int(l, -3))].into_iter().collect();
    assert_eq!(e.insert(v), Some(2));
    let w: SparseVec = [(2, CycNum::one(l)), (1, CycNum::one(l))].into_iter().collect();
    let r = e.reduce(w);
    let expect: SparseVec = [(0, CycNum::from_ratio(l, 1, 3)), (1, CycNum::one(l))].into_iter().collect();
    assert_eq!(r, expect);
}
