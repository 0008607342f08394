use super::*;
use crate::cyclotomic::sparse::SparseVec;
use crate::cyclotomic::CycNum;
use crate::hopf::{power, Family, LinComb};
use crate::module_algebra::*;
use crate::rep::{rep_from_label, RepLabel};
use proptest::prelude::*;

fn spec(f: Family, name: &str, i: u32, j: u32, eps: i8) -> GradedAlgebraSpec {
    standard_action(&f.build().unwrap(), name, ActionParams { i, j, eps }).unwrap()
}

fn kp(name: &str) -> GradedAlgebraSpec {
    spec(Family::KacPalyutkin, name, 1, 0, 1)
}

#[test]
fn fixed_spaces_in_low_degree() {
    let s = kp("KP-b");
    let mut e = GradedEngine::preferred(&s).unwrap();
    assert!(fixed_in(&mut e, 1).unwrap().is_empty());
    let f2 = fixed_in(&mut e, 2).unwrap();
    assert_eq!(f2.len(), 1);
    let u2 = e.normal_form(&[U, U]).unwrap();
    assert_eq!(f2[0], u2);
    assert_eq!(fixed_in(&mut e, 0).unwrap(), vec![SparseVec::from([(0, CycNum::one(s.conductor()))])]);
    // the counit is the trivial character
    let counit = s.hopf().counit.clone();
    assert_eq!(character_space(&mut e, 4, &counit).unwrap(), fixed_in(&mut e, 4).unwrap());
    assert_eq!(fixed_subspace(&s, 3).unwrap().len(), 0);
}

#[test]
fn degree_one_component_is_the_chosen_module() {
    for s in [kp("KP-c"), spec(Family::B4m { m: 3 }, "Aplus", 1, 0, 1)] {
        let h = s.hopf().clone();
        let mut e = GradedEngine::preferred(&s).unwrap();
        let v = rep_from_label(&h, s.labels[0]).unwrap();
        assert_eq!(hom_dimension(&mut e, 1, &v).unwrap(), 1, "{}", s.name);
        let triv = rep_from_label(&h, trivial_label(h.family)).unwrap();
        assert_eq!(hom_dimension(&mut e, 0, &triv).unwrap(), 1);
        assert_eq!(hom_dimension(&mut e, 1, &triv).unwrap(), 0);
        // multiplicity of the trivial module equals the fixed dimension
        for d in 2..=6 {
            assert_eq!(hom_dimension(&mut e, d, &triv).unwrap(), fixed_in(&mut e, d).unwrap().len());
        }
    }
}

fn trivial_label(f: Family) -> RepLabel {
    match f.shape() {
        crate::hopf::Shape::HType => RepLabel::HOne { k: 0, plus: true },
        crate::hopf::Shape::Dihedral => RepLabel::One { signs: [1, 1, 1] },
    }
}

#[test]
fn kac_palyutkin_fixed_rings() {
    for (name, degrees) in [("KP-b", vec![2, 4]), ("KP-c", vec![2, 4]), ("KP-d", vec![2, 4])] {
        let r = minimal_generators(&kp(name), 18).unwrap();
        assert_eq!(r.sorted_degrees(), degrees, "{name}");
        assert_eq!(r.certificate, Certificate::RegularConsistent);
        assert_eq!(r.product_of_degrees(), 8);
        assert_eq!(r.conjecture_product_holds(), Some(true));
    }
    // (a) is a commutative hypersurface: three pairwise commuting generators
    let a = kp("KP-a");
    let r = minimal_generators(&a, 18).unwrap();
    assert_eq!(r.sorted_degrees(), vec![4, 4, 6]);
    assert!(matches!(r.certificate, Certificate::CertifiedNotRegular { generators: 3 }));
    let mut e = GradedEngine::preferred(&a).unwrap();
    for x in &r.generators {
        for y in &r.generators {
            let xy = e.multiply(&x.coefficients, x.degree, &y.coefficients, y.degree).unwrap();
            let yx = e.multiply(&y.coefficients, y.degree, &x.coefficients, x.degree).unwrap();
            assert_eq!(xy, yx);
        }
    }
}

#[test]
fn generators_are_fixed_and_json_is_complete() {
    let s = spec(Family::A4m { m: 3 }, "Aplus", 1, 0, -1);
    let r = minimal_generators(&s, 26).unwrap();
    let mut e = GradedEngine::preferred(&s).unwrap();
    let h = s.hopf().clone();
    for g in &r.generators {
        for k in 0..h.ngens() as u8 {
            let moved = e.apply_word(&[k], g.degree, &g.coefficients).unwrap();
            let want = crate::cyclotomic::sparse::scale(&g.coefficients, &h.counit[k as usize]);
            assert_eq!(moved, want);
        }
    }
    assert_eq!(r.sorted_degrees(), vec![4, 6, 8]);
    let j = r.to_json();
    for key in [
        "schema", "algebra", "parameters", "degrees", "generators", "hilbert_prefix", "certificate",
        "product_of_degrees", "dim_H", "conjecture_product_holds", "faithful",
    ] {
        assert!(j.get(key).is_some(), "missing {key}");
    }
    assert_eq!(j["certificate"], "certified-not-regular");
    assert_eq!(j["conjecture_product_holds"], serde_json::Value::Null);
}

#[test]
fn odd_skew_plus_is_not_free() {
    let s = spec(Family::H2n2 { n: 3 }, "Aplus", 0, 1, 1);
    let r = minimal_generators(&s, 38).unwrap();
    assert_eq!(r.sorted_degrees(), vec![3, 9]);
    assert_eq!(r.certificate, Certificate::NotFree);
    assert_ne!(free_hilbert_prefix(&[3, 9], 38), r.hilbert_prefix);
}

#[test]
fn small_bound_is_reported() {
    let s = spec(Family::B4m { m: 3 }, "Aplus", 1, 0, 1);
    assert!(matches!(minimal_generators(&s, 9), Err(crate::error::HopfError::DegreeBoundTooSmall(_))));
    assert!(minimal_generators(&s, 1).is_err());
}

#[test]
fn b_plus_hilbert_prefix() {
    let s = spec(Family::B4m { m: 4 }, "Aplus", 1, 0, 1);
    assert_eq!(invariant_hilbert_prefix(&s, 10).unwrap(), vec![1, 0, 0, 0, 1, 0, 0, 0, 2, 0, 1]);
    assert_eq!(algebra_hilbert_prefix(&s, 4).unwrap(), vec![1, 2, 3, 4, 5]);
}

#[test]
fn free_series_counts_monomials() {
    assert_eq!(free_hilbert_prefix(&[2, 4], 8), vec![1, 0, 1, 0, 2, 0, 2, 0, 3]);
    assert_eq!(free_hilbert_prefix(&[], 3), vec![1, 0, 0, 0]);
    assert_eq!(default_degree_bound(8), 18);
}

#[test]
fn claimed_generators_are_checked() {
    let s = kp("KP-b");
    let l = s.conductor();
    let uv = [U, V].repeat(2);
    let vu = [V, U].repeat(2);
    let good = [words(l, &[(1, power(U, 2))]), words(l, &[(1, uv.clone()), (-1, vu.clone())])];
    let c = verify_claimed_generators(&s, &good, 18).unwrap();
    assert_eq!(c, ClaimCheck { all_fixed: true, generates: true, first_gap: None });
    let short = verify_claimed_generators(&s, &good[..1], 18).unwrap();
    assert_eq!(short.first_gap, Some(4));
    assert!(!short.generates);
    let bad = verify_claimed_generators(&s, &[words(l, &[(1, vec![U])])], 6).unwrap();
    assert!(!bad.all_fixed && !bad.generates);
    let mixed = words(l, &[(1, vec![U]), (1, vec![U, V])]);
    let mut e = GradedEngine::preferred(&s).unwrap();
    assert!(element_from_words(&mut e, &mixed).is_err());
}

#[test]
fn faithful_actions() {
    assert!(faithfulness_check(&kp("KP-c"), 18).unwrap());
    assert!(faithfulness_check(&spec(Family::A4m { m: 4 }, "A2minus", 1, 0, 1), 10).unwrap());
    // in degree ≤ 1 only the unit and π appear
    assert!(!faithfulness_check(&kp("KP-c"), 1).unwrap());
}

#[test]
fn ore_extension_invariants() {
    let one = |l: u32| crate::cyclotomic::CycMatrix::identity(2, l);
    for base in [kp("KP-c"), spec(Family::B4m { m: 3 }, "Aminus", 1, 0, 1), spec(Family::B4m { m: 3 }, "Aplus", 1, 0, 1)] {
        let l = base.conductor();
        let ext = ore_extend(&base, &one(l), trivial_label(base.hopf().family)).unwrap();
        assert!(ore_invariants_check(&ext, 10).unwrap(), "{}", base.name);
    }
    assert!(ore_invariants_check(&kp("KP-c"), 4).is_err());
    // t carries T_{ε,ε,−1}, not the trivial module
    let a1 = spec(Family::A4m { m: 4 }, "A1minus", 1, 0, 1);
    assert!(!ore_invariants_check(&a1, 6).unwrap());
}

#[test]
fn even_family_invariants_use_even_powers_of_t() {
    for name in ["A1minus", "A3minus", "A4plus"] {
        let s = spec(Family::A4m { m: 4 }, name, 1, 0, -1);
        let mut e = GradedEngine::preferred(&s).unwrap();
        for d in 1..=8 {
            let basis = e.basis(d).unwrap().to_vec();
            for f in fixed_in(&mut e, d).unwrap() {
                for k in f.keys() {
                    let tcount = basis[*k].iter().filter(|x| **x == T).count();
                    assert_eq!(tcount % 2, 0, "{name} degree {d}");
                }
            }
        }
    }
}

fn lin(ring: &Ring, terms: &[(i64, &[&str])]) -> LinComb {
    let mut out = LinComb::zero(1);
    for (c, word) in terms {
        let mut p = LinComb::one(1);
        for name in *word {
            p = ring.multiply(&p, &ring.var(name).unwrap());
        }
        out = out.add(&ring.scale(&p, *c));
    }
    out
}

fn check(ring: &Ring, target: &LinComb, gens: &[LinComb]) -> bool {
    let m = subalgebra_membership(ring, target, gens).unwrap();
    if m.member {
        assert!(m.witness_checks);
    }
    m.member
}

#[test]
fn binomial_sums_in_commuting_variables() {
    let r = Ring::new(SupportedRing::Commutative).unwrap();
    let (x, y) = (r.var("x").unwrap(), r.var("y").unwrap());
    let xy = r.multiply(&x, &y);
    let plus = x.add(&y);
    let minus = x.sub(&y);
    for l in 1..=8usize {
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let a = r.power(&x, l).add(&r.power(&y, l));
        let b = r.power(&x, l).add(&r.scale(&r.power(&y, l), sign));
        assert!(check(&r, &a, &[plus.clone(), xy.clone()]), "l = {l}");
        assert!(check(&r, &b, &[minus.clone(), xy.clone()]), "l = {l}");
    }
    assert!(!check(&r, &r.power(&x, 2), &[plus, xy]));
}

#[test]
fn skew_plane_invariants() {
    let r = Ring::new(SupportedRing::SkewMinusOne).unwrap();
    let (x, y) = (r.var("x").unwrap(), r.var("y").unwrap());
    let xy = r.multiply(&x, &y);
    let gens = [x.add(&y), r.multiply(&xy, &x.sub(&y))];
    assert!(check(&r, &r.power(&xy, 2), &gens));
    for t in 0..=5usize {
        for l in 0..=5usize {
            if t + l == 0 {
                continue;
            }
            let sign = if t % 2 == 0 { 1 } else { -1 };
            let g = r.multiply(&r.power(&xy, t), &r.power(&x, l).add(&r.scale(&r.power(&y, l), sign)));
            assert!(check(&r, &g, &gens), "t = {t}, l = {l}");
        }
    }
    // xy alone is not reachable
    assert!(!check(&r, &xy, &gens));
    assert_eq!(r.normalize(&lin(&r, &[(1, &["y", "x"]), (1, &["x", "y"])])), LinComb::zero(1));
}

fn f_tls(r: &Ring, t: usize, l: usize, s: usize, sign: i64) -> LinComb {
    let (x, y, z, w) = (r.var("x").unwrap(), r.var("y").unwrap(), r.var("z").unwrap(), r.var("w").unwrap());
    let mid = r.power(&x, l).add(&r.scale(&r.power(&y, l), sign));
    r.multiply(&r.multiply(&r.power(&z, t), &mid), &r.power(&w, s))
}

fn pm(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

#[test]
fn central_quotient_generators() {
    let r = Ring::new(SupportedRing::CentralQuotient { k: 1, alpha: 2 }).unwrap();
    let e = |terms: &[(i64, &[&str])]| lin(&r, terms);
    let z2 = e(&[(1, &["z", "z"])]);
    let xmy = e(&[(1, &["x"]), (-1, &["y"])]);
    let xpyw = e(&[(1, &["x", "w"]), (1, &["y", "w"])]);
    let w2 = e(&[(1, &["w", "w"])]);
    let zxpy = e(&[(1, &["z", "x"]), (1, &["z", "y"])]);
    let zw = e(&[(1, &["z", "w"])]);
    let z = e(&[(1, &["z"])]);
    let full = [z2.clone(), xmy.clone(), xpyw.clone(), w2.clone(), zxpy.clone(), zw];
    let even_s = [z2.clone(), xmy.clone(), w2.clone(), zxpy.clone()];
    let no_z = [z, xmy.clone(), xpyw, w2];
    let no_w = [z2, xmy, zxpy];
    for t in 0..=3usize {
        for l in 0..=3usize {
            for s in 0..=3usize {
                if t + l + s == 0 {
                    continue;
                }
                let f = f_tls(&r, t, l, s, pm(t + s + l));
                assert!(check(&r, &f, &full), "f({t},{l},{s})");
                if s % 2 == 0 {
                    assert!(check(&r, &f, &even_s), "even s: f({t},{l},{s})");
                }
                if l + s > 0 {
                    assert!(check(&r, &f_tls(&r, 0, l, s, pm(l + s)), &no_z), "({l},{s})");
                }
                if t + l > 0 {
                    assert!(check(&r, &f_tls(&r, t, l, 0, pm(t + l)), &no_w), "({t},{l})");
                }
            }
        }
    }
    // the printed exponent l + s does not work without w: z(x + y) needs t in the sign
    assert!(check(&r, &f_tls(&r, 1, 1, 0, 1), &no_w));
    assert!(!check(&r, &f_tls(&r, 0, 1, 0, 1), &no_w));
}

#[test]
fn witnesses_are_readable() {
    let r = Ring::new(SupportedRing::Commutative).unwrap();
    let (x, y) = (r.var("x").unwrap(), r.var("y").unwrap());
    let gens = [x.add(&y), r.multiply(&x, &y)];
    let target = r.power(&x, 2).add(&r.power(&y, 2));
    let m = subalgebra_membership(&r, &target, &gens).unwrap();
    let text = display_witness(m.witness.as_ref().unwrap(), &["s".into(), "p".into()]);
    assert!(text.contains("s·s") && text.contains('p'), "{text}");
    assert!(Ring::new(SupportedRing::CentralQuotient { k: 0, alpha: 1 }).is_err());
    assert!(r.var("q").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// The membership witness always re-evaluates to the target.
    #[test]
    fn products_of_generators_are_members(a in 0usize..3, b in 0usize..3, c in -3i64..4) {
        let r = Ring::new(SupportedRing::CentralQuotient { k: 2, alpha: -1 }).unwrap();
        let (x, y, z, w) = (r.var("x").unwrap(), r.var("y").unwrap(), r.var("z").unwrap(), r.var("w").unwrap());
        let gens = [r.power(&z, 2), x.sub(&y), r.multiply(&x.add(&y), &w), r.power(&w, 2)];
        let p = r.multiply(&r.power(&gens[0], a), &r.power(&gens[3], b));
        let target = r.multiply(&gens[1], &p).scale(&CycNum::from_int(1, c));
        prop_assume!(c != 0);
        let m = subalgebra_membership(&r, &target, &gens).unwrap();
        prop_assert!(m.member && m.witness_checks);
    }
}
