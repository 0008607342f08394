//! Acceptance gate: one PASS/FAIL line per criterion, exact equality throughout.
//!
//! A criterion whose failing rows are exactly a documented counterexample set
//! still prints FAIL, but only a deviation from that set makes the process
//! exit non-zero.

use hopf_core::cyclotomic::sparse::{scale, SparseVec};
use hopf_core::hopf::Family;
use hopf_core::invariants::{default_degree_bound, verify_claimed_generators, Certificate};
use hopf_core::module_algebra::{standard_action, standard_actions, ActionParams, EngineKind, GradedAlgebraSpec, GradedEngine, U, V};
use hopf_core::rep::irreducible_catalog;
use hopf_core::reports::{cached_report, find_case, fixed_ring_specs, published_generators, published_regular, CaseResult, Status};
use hopf_core::{CycMatrix, CycNum};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

struct Outcome {
    /// (row key, message); the key is "id instance" for registry rows.
    failures: Vec<(String, String)>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            let m = what();
            self.failures.push((m.clone(), m));
        }
    }

    fn within(&mut self, what: &str, took: Duration, limit: Duration) {
        self.check(took < limit, || format!("{what} took {took:?}, limit {limit:?}"));
    }

    fn rows(&mut self, rows: &[CaseResult]) {
        self.check(!rows.is_empty(), || "no rows".into());
        for r in rows.iter().filter(|r| r.status == Status::Fail) {
            let key = format!("{} {}", r.id, r.instance);
            let msg = format!("{key}: expected {}, observed {}", r.expected, r.observed);
            self.failures.push((key, msg));
        }
    }

    /// Runs one registry case per parameter value, each under a time limit.
    fn case(&mut self, id: &str, values: &[u32], limit: Duration) {
        let case = find_case(id).expect("registered id");
        if values.is_empty() {
            let t = Instant::now();
            let rows = case.run(None);
            self.within(id, t.elapsed(), limit);
            self.rows(&rows);
        }
        for &v in values {
            let t = Instant::now();
            let rows = case.run(Some(&[v]));
            self.within(&format!("{id} {v}"), t.elapsed(), limit);
            self.rows(&rows);
        }
    }
}

/// Failing rows that were analysed and are expected to persist.
fn documented(criterion: usize) -> BTreeSet<String> {
    let rows: Vec<String> = match criterion {
        // one-dimensional modules of B12 form Z4, those of D12 form Z2 x Z2
        3 => vec!["B4m.isomorphism B4m:3 vs D4m:3".into()],
        // the closure reaches every simple module although the parity rule says it cannot
        4 => ["T_{1,-1,1}", "T_{1,-1,-1}", "T_{-1,1,1}", "T_{-1,1,-1}"]
            .iter()
            .map(|t| format!("A4mEven.inner-faithful A4m:6 pi_2^- + {t}"))
            .collect(),
        _ => vec![],
    };
    rows.into_iter().collect()
}

fn failing_instances(o: &Outcome) -> BTreeSet<String> {
    o.failures.iter().map(|(k, _)| k.clone()).collect()
}

const SECOND: Duration = Duration::from_secs(1);

fn catalog_completeness() -> Outcome {
    let mut o = Outcome::new();
    let mut instances: Vec<(Family, usize, usize)> = (2..=5).map(|n| (Family::H2n2 { n }, 2 * n as usize, (n * (n - 1) / 2) as usize)).collect();
    for m in 2..=6u32 {
        let m_ = m as usize;
        instances.push((Family::B4m { m }, 4, m_ - 1));
        instances.push(if m % 2 == 1 { (Family::A4m { m }, 4, m_ - 1) } else { (Family::A4m { m }, 8, m_ - 2) });
    }
    for (f, ones, twos) in instances {
        let t = Instant::now();
        let h = f.build().unwrap();
        let cat = irreducible_catalog(&h).unwrap();
        o.within(&f.to_string(), t.elapsed(), 5 * SECOND);
        let got1 = cat.iter().filter(|r| r.dim() == 1).count();
        let got2 = cat.iter().filter(|r| r.dim() == 2).count();
        let sq: usize = cat.iter().map(|r| r.dim() * r.dim()).sum();
        o.check((got1, got2) == (ones, twos), || format!("{f}: {got1} one-dim, {got2} two-dim"));
        o.check(sq == h.dimension && sq == f.dimension(), || format!("{f}: sum of squares {sq}"));
        o.check(cat.iter().all(|r| r.check_is_module().is_ok()), || format!("{f}: a catalog entry is not a module"));
    }
    o.case("H2n2.irreps", &[2, 3, 4, 5], 5 * SECOND);
    o.case("B4m.irreps", &[2, 3, 4, 5, 6], 5 * SECOND);
    o.case("A4m.irreps", &[2, 3, 4, 5, 6], 5 * SECOND);
    o
}

fn fusion_oracle() -> Outcome {
    let mut o = Outcome::new();
    o.case("H2n2.fusion", &[2, 3, 4], 60 * SECOND);
    o.case("B4m.fusion", &[2, 3, 4, 5], 60 * SECOND);
    o.case("A4mOdd.fusion", &[3, 5], 60 * SECOND);
    o.case("A4mEven.fusion", &[2, 4, 6], 60 * SECOND);
    o
}

fn fusion_isomorphisms() -> Outcome {
    let mut o = Outcome::new();
    o.case("H2n2.isomorphism", &[2, 3, 4], 60 * SECOND);
    o.case("B4m.isomorphism", &[2, 3, 4], 60 * SECOND);
    o.case("A4mOdd.isomorphism", &[3, 5], 60 * SECOND);
    // the even fusion case also asserts noncommutativity
    o.case("A4mEven.fusion", &[2, 4, 6], 60 * SECOND);
    o
}

fn inner_faithfulness() -> Outcome {
    let mut o = Outcome::new();
    o.case("H2n2.inner-faithful", &[2, 3, 4], 60 * SECOND);
    o.case("B4m.inner-faithful", &[2, 3, 4, 5], 60 * SECOND);
    o.case("A4mOdd.inner-faithful", &[3, 5], 60 * SECOND);
    o.case("A4mEven.inner-faithful.two-dim", &[2, 4, 6], 60 * SECOND);
    o.case("A4mEven.inner-faithful", &[2, 4, 6], 60 * SECOND);
    o
}

/// Every inner-faithful spec swept by the fixed-ring ids, with its id.
fn fixed_specs() -> Vec<(&'static str, GradedAlgebraSpec)> {
    let sweeps: [(&str, &[u32]); 8] = [
        ("H8.fixed", &[0]),
        ("H2n2.fixed.minus", &[2, 3, 4, 5]),
        ("H2n2.fixed.plus", &[2, 3, 4, 5]),
        ("B4m.fixed.minus", &[2, 3, 4]),
        ("B4m.fixed.plus", &[2, 3, 4]),
        ("A4mOdd.fixed.minus", &[3, 5]),
        ("A4mOdd.fixed.plus", &[3, 5]),
        ("A4mEven.fixed", &[2, 4]),
    ];
    let mut out = Vec::new();
    for (id, values) in sweeps {
        for &p in values {
            for s in fixed_ring_specs(id, p).unwrap() {
                if s.inner_faithful {
                    out.push((id, s));
                }
            }
        }
    }
    out
}

fn label(s: &GradedAlgebraSpec) -> String {
    format!("{} {:?} {}", s.hopf().family, s.params, s.name)
}

/// Degrees and certificate stated for each family, independent of the published lists.
fn expected_shape(s: &GradedAlgebraSpec) -> Option<(Vec<usize>, &'static str)> {
    let minus = s.name.ends_with("minus");
    Some(match s.hopf().family {
        Family::H2n2 { n } => {
            let n = n as usize;
            if minus || n % 2 == 0 {
                (vec![n, 2 * n], "regular-consistent")
            } else {
                (vec![n, 3 * n], "not-free")
            }
        }
        Family::B4m { m } | Family::A4m { m } if m % 2 == 1 || matches!(s.hopf().family, Family::B4m { .. }) => {
            let m = m as usize;
            if minus {
                (vec![2, 2 * m], "regular-consistent")
            } else {
                (vec![4, 2 * m, 2 * m + 2], "certified-not-regular")
            }
        }
        _ => return None,
    })
}

fn fixed_ring_degrees(specs: &[(&str, GradedAlgebraSpec)]) -> Outcome {
    let mut o = Outcome::new();
    let results: Vec<(String, Duration, Vec<usize>, &'static str)> = specs
        .par_iter()
        .map(|(_, s)| {
            let t = Instant::now();
            let r = cached_report(s, default_degree_bound(s.hopf().dimension)).unwrap();
            (label(s), t.elapsed(), r.sorted_degrees(), r.certificate.name())
        })
        .collect();
    for ((_, s), (name, took, degrees, cert)) in specs.iter().zip(results) {
        o.within(&name, took, 120 * SECOND);
        if let Some((want, want_cert)) = expected_shape(s) {
            o.check(degrees == want && cert == want_cert, || {
                format!("{name}: degrees {degrees:?} {cert}, expected {want:?} {want_cert}")
            });
        } else if matches!(s.hopf().family, Family::A4m { .. }) {
            let regular = published_regular(s) == Some(true);
            let want_cert = if regular { "regular-consistent" } else { "certified-not-regular" };
            o.check(cert == want_cert, || format!("{name}: {cert}, expected {want_cert}"));
        }
    }
    // the registry rows add the quadratic H8 table and the degrees of the published lists
    for id in ["H8.fixed", "A4mEven.fixed"] {
        let case = find_case(id).unwrap();
        let values = if case.parameter.is_some() { case.default_range.to_vec() } else { vec![] };
        // one instance holds up to 20 specs, each already timed above
        o.case(id, &values, 20 * 120 * SECOND);
    }
    o
}

fn claimed_generators(specs: &[(&str, GradedAlgebraSpec)]) -> Outcome {
    let mut o = Outcome::new();
    let mut checked = 0;
    for (_, s) in specs {
        let Some(claimed) = published_generators(s) else {
            continue;
        };
        checked += 1;
        let bound = default_degree_bound(s.hopf().dimension);
        let c = verify_claimed_generators(s, &claimed, bound).unwrap();
        o.check(c.all_fixed && c.first_gap.is_none(), || {
            format!("{}: all fixed {}, first gap {:?}", label(s), c.all_fixed, c.first_gap)
        });
    }
    o.notes.push(format!("{checked} published lists"));
    o
}

fn hilbert_prefix() -> Outcome {
    let mut o = Outcome::new();
    o.case("B4m.fixed.plus.hilbert", &[2, 3, 4], 120 * SECOND);
    o
}

fn conjecture_evidence(specs: &[(&str, GradedAlgebraSpec)]) -> Outcome {
    let mut o = Outcome::new();
    let mut regular = 0;
    for (_, s) in specs {
        let r = cached_report(s, default_degree_bound(s.hopf().dimension)).unwrap();
        if r.certificate == Certificate::RegularConsistent {
            regular += 1;
            o.check(r.product_of_degrees() == s.hopf().dimension, || {
                format!("{}: product {} against dim {}", label(s), r.product_of_degrees(), s.hopf().dimension)
            });
        }
    }
    o.notes.push(format!("{regular} regular-consistent cases"));
    o.case("Conjecture.product", &[], 600 * SECOND);
    o.case("Conjecture.faithful", &[], 600 * SECOND);
    o
}

fn lemma_suite() -> Outcome {
    let mut o = Outcome::new();
    for id in ["Lemma.binomial", "Lemma.central-quotient", "Lemma.skew"] {
        o.case(id, &[], 120 * SECOND);
    }
    o
}

fn ore_extensions() -> Outcome {
    let mut o = Outcome::new();
    o.case("Ore.trivial-t", &[], 120 * SECOND);
    o.case("Ore.convolution", &[2, 4, 6], 120 * SECOND);
    o
}

fn zeta(l: u32, n: u32, k: i64) -> CycNum {
    CycNum::root_of_unity(l, k * (l / n) as i64)
}

fn field_axioms(o: &mut Outcome) {
    for l in [4u32, 8, 12, 15, 20, 24] {
        let sample: Vec<CycNum> = (0..6i64)
            .map(|k| {
                let mut x = CycNum::from_ratio(l, k - 2, k + 1);
                for t in 0..l as i64 {
                    let c = (k * 7 + t * 3) % 5 - 2;
                    x += &(&CycNum::root_of_unity(l, t) * &CycNum::from_int(l, c));
                }
                x
            })
            .collect();
        let one = CycNum::one(l);
        let mut total = CycNum::zero(l);
        for t in 0..l as i64 {
            total += &CycNum::root_of_unity(l, t);
        }
        o.check(total.is_zero(), || format!("roots of unity of order {l} do not sum to zero"));
        o.check(CycNum::root_of_unity(l, 1).pow(l as i64).is_one(), || format!("zeta_{l}^{l} != 1"));
        for a in &sample {
            if !a.is_zero() {
                o.check(&a.inv().unwrap() * a == one, || format!("inverse fails at conductor {l}"));
            }
            for b in &sample {
                o.check(a * b == b * a, || format!("commutativity fails at conductor {l}"));
                o.check((a * b).lift(2 * l) == &a.lift(2 * l) * &b.lift(2 * l), || format!("lift is not multiplicative at {l}"));
                for c in &sample {
                    o.check(&(a * b) * c == a * &(b * c), || format!("associativity fails at conductor {l}"));
                    o.check(a * &(b + c) == &(a * b) + &(a * c), || format!("distributivity fails at conductor {l}"));
                }
            }
        }
    }
}

fn hopf_axioms(o: &mut Outcome) {
    let mut families = vec![Family::KacPalyutkin];
    families.extend((2..=5).map(|n| Family::H2n2 { n }));
    families.extend((2..=6).map(|m| Family::B4m { m }));
    families.extend((2..=6).map(|m| Family::A4m { m }));
    for f in families {
        let h = f.build().unwrap();
        for g in 0..h.ngens() as u8 {
            o.check(h.coassociativity_holds(g), || format!("{f}: coassociativity at generator {g}"));
            o.check(h.counit_axiom_holds(g), || format!("{f}: counit at generator {g}"));
            o.check(h.antipode_axiom_holds(g), || format!("{f}: antipode at generator {g}"));
        }
        o.check(h.coproduct_respects_relations(), || format!("{f}: coproduct does not respect relations"));
        o.check(h.antipode_respects_relations(), || format!("{f}: antipode does not respect relations"));
        o.check(h.basis().len() == f.dimension(), || format!("{f}: basis size {}", h.basis().len()));
    }
}

/// P sends closed-form coordinates to tensor-quotient coordinates: invertible and intertwining.
fn engine_agreement(o: &mut Outcome) {
    let p = |i, j, eps| ActionParams { i, j, eps };
    let mut specs = Vec::new();
    for (f, prm) in [
        (Family::KacPalyutkin, p(1, 0, 1)),
        (Family::H2n2 { n: 3 }, p(0, 1, 1)),
        (Family::H2n2 { n: 4 }, p(1, 2, 1)),
        (Family::B4m { m: 3 }, p(1, 0, 1)),
        (Family::A4m { m: 5 }, p(2, 0, -1)),
        (Family::A4m { m: 4 }, p(1, 0, 1)),
        (Family::A4m { m: 4 }, p(1, 0, -1)),
    ] {
        specs.extend(standard_actions(&f.build().unwrap(), prm, false).unwrap());
    }
    let bad: Vec<String> = specs
        .par_iter()
        .flat_map(|s| {
            let mut bad = Vec::new();
            let mut closed = GradedEngine::new(s, EngineKind::ClosedForm).unwrap();
            let mut tensor = GradedEngine::new(s, EngineKind::TensorQuotient).unwrap();
            let l = s.conductor();
            for d in 0..=8 {
                let n = closed.dim(d).unwrap();
                if n != tensor.dim(d).unwrap() {
                    bad.push(format!("{}: dimensions differ in degree {d}", label(s)));
                    continue;
                }
                let mono = closed.basis(d).unwrap().to_vec();
                let mut pm = CycMatrix::zeros(n, n, l);
                for (c, w) in mono.iter().enumerate() {
                    for (r, x) in tensor.normal_form(w).unwrap() {
                        pm.set(r, c, x);
                    }
                }
                if pm.rank() != n {
                    bad.push(format!("{}: singular change of basis in degree {d}", label(s)));
                }
                for g in 0..s.hopf().ngens() as u8 {
                    let mc = closed.action_matrix(g, d).unwrap();
                    let mt = tensor.action_matrix(g, d).unwrap();
                    if pm.mul(&mc) != mt.mul(&pm) {
                        bad.push(format!("{}: generator {g} disagrees in degree {d}", label(s)));
                    }
                }
            }
            bad
        })
        .collect();
    o.failures.extend(bad.into_iter().map(|m| (m.clone(), m)));
}

/// z·(u^a v^b) = q^{[a + C(a,2) + C(b,2)]ij + ab j²} p^{ab(i²−j²)} u^b v^a, with (−1)^{ab} on A⁺.
fn z_action_oracle(o: &mut Outcome) {
    for n in 2..=4u32 {
        let h = Family::H2n2 { n }.build().unwrap();
        let l = h.conductor;
        for i in 0..n {
            for j in (0..n).filter(|j| *j != i) {
                for (name, plus) in [("Aminus", false), ("Aplus", true)] {
                    let s = standard_action(&h, name, ActionParams { i, j, eps: 1 }).unwrap();
                    let mut e = GradedEngine::preferred(&s).unwrap();
                    let (ii, jj) = (i as i64, j as i64);
                    for d in 0..=8usize {
                        for a in 0..=d {
                            let b = d - a;
                            let (a_, b_) = (a as i64, b as i64);
                            let qexp = (a_ + a_ * (a_ - 1) / 2 + b_ * (b_ - 1) / 2) * ii * jj + a_ * b_ * jj * jj;
                            let pexp = a_ * b_ * (ii * ii - jj * jj);
                            let mut c = &zeta(l, n, qexp) * &(-zeta(l, 2 * n, 1)).pow(pexp);
                            if plus && (a * b) % 2 == 1 {
                                c = -c;
                            }
                            let src: Vec<u8> = [vec![U; a], vec![V; b]].concat();
                            let dst: Vec<u8> = [vec![U; b], vec![V; a]].concat();
                            let v = e.normal_form(&src).unwrap();
                            let got = e.apply_word(&[2], d, &v).unwrap();
                            let want = scale(&e.normal_form(&dst).unwrap(), &c);
                            o.check(got == want, || format!("z-action H2n2:{n} ({i},{j}) {name} a={a} b={b}"));
                        }
                    }
                }
            }
        }
    }
}

/// s₊(u^{2p}(vu)^q) = λ^{−iq} u^{2p+1}(vu)^{q−1}v on A⁻ of B4m.
fn reflection_oracle(o: &mut Outcome) {
    for m in 2..=5u32 {
        let h = Family::B4m { m }.build().unwrap();
        let l = h.conductor;
        for i in (1..2 * m).filter(|i| num_integer::gcd(*i, 2 * m) == 1) {
            let s = standard_action(&h, "Aminus", ActionParams { i, j: 0, eps: 1 }).unwrap();
            let mut e = GradedEngine::preferred(&s).unwrap();
            for p in 0..=3usize {
                for q in 1..=3usize {
                    let src: Vec<u8> = [vec![U; 2 * p], [V, U].repeat(q)].concat();
                    let dst: Vec<u8> = [vec![U; 2 * p + 1], [V, U].repeat(q - 1), vec![V]].concat();
                    let d = src.len();
                    let v: SparseVec = e.normal_form(&src).unwrap();
                    let got = e.apply_word(&[0], d, &v).unwrap();
                    let want = scale(&e.normal_form(&dst).unwrap(), &zeta(l, 2 * m, -((i as i64) * q as i64)));
                    o.check(got == want, || format!("s+ action B4m:{m} i={i} p={p} q={q}"));
                }
            }
        }
    }
}

fn property_suites() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    field_axioms(&mut o);
    hopf_axioms(&mut o);
    engine_agreement(&mut o);
    z_action_oracle(&mut o);
    reflection_oracle(&mut o);
    o.within("property suites", t.elapsed(), 900 * SECOND);
    o
}

fn main() -> ExitCode {
    let start = Instant::now();
    let specs = fixed_specs();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("catalog completeness", Box::new(catalog_completeness)),
        ("fusion tables equal the closed forms", Box::new(fusion_oracle)),
        ("fusion-ring isomorphisms", Box::new(fusion_isomorphisms)),
        ("inner-faithfulness criteria equal tensor closure", Box::new(inner_faithfulness)),
        ("fixed-ring degrees and certificates", Box::new(|| fixed_ring_degrees(&specs))),
        ("published generators are fixed and generate", Box::new(|| claimed_generators(&specs))),
        ("Hilbert prefix of the B4m plus fixed ring", Box::new(hilbert_prefix)),
        ("conjecture evidence", Box::new(|| conjecture_evidence(&specs))),
        ("membership lemmas with witnesses", Box::new(lemma_suite)),
        ("Ore extensions", Box::new(ore_extensions)),
        ("property suites", Box::new(property_suites)),
    ];
    let mut unexpected = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let n = k + 1;
        let t = Instant::now();
        let o = run();
        let secs = t.elapsed().as_secs_f64();
        let notes = if o.notes.is_empty() { String::new() } else { format!(" [{}]", o.notes.join("; ")) };
        if o.failures.is_empty() {
            println!("PASS  {n:>2} {title} ({secs:.1} s){notes}");
            if !documented(n).is_empty() {
                println!("      documented counterexamples no longer reproduce");
                unexpected += 1;
            }
            continue;
        }
        let documented_rows = documented(n);
        let matches_record = failing_instances(&o) == documented_rows;
        println!(
            "FAIL  {n:>2} {title} ({secs:.1} s){notes}{}",
            if matches_record { " [documented counterexample]" } else { "" }
        );
        for (_, f) in &o.failures {
            println!("      {f}");
        }
        if !matches_record {
            unexpected += 1;
        }
    }
    println!("acceptance finished in {:.1} s", start.elapsed().as_secs_f64());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria deviate from the recorded outcome");
        ExitCode::FAILURE
    }
}
