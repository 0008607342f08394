//! Membership statements for the auxiliary rings used in the fixed-ring proofs.

use super::{CaseResult, Status};
use crate::error::Result;
use crate::hopf::LinComb;
use crate::invariants::{display_witness, subalgebra_membership, Ring, SupportedRing};

fn pm(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

struct Vars {
    x: LinComb,
    y: LinComb,
    z: Option<LinComb>,
    w: Option<LinComb>,
}

fn vars(r: &Ring) -> Result<Vars> {
    let four = r.names.len() == 4;
    Ok(Vars {
        x: r.var("x")?,
        y: r.var("y")?,
        z: if four { Some(r.var("z")?) } else { None },
        w: if four { Some(r.var("w")?) } else { None },
    })
}

/// One row per target: member with a witness that re-evaluates to it.
fn membership_row(
    id: &str,
    ring: &Ring,
    instance: String,
    target: &LinComb,
    gens: &[LinComb],
    gen_names: &[String],
) -> Result<CaseResult> {
    let m = subalgebra_membership(ring, target, gens)?;
    let observed = match (&m.witness, m.member, m.witness_checks) {
        (Some(w), true, true) => format!("member, witness {}", display_witness(w, gen_names)),
        (Some(_), true, false) => "member, witness does not re-evaluate".into(),
        _ => "not a member".into(),
    };
    let pass = m.member && m.witness_checks;
    Ok(CaseResult {
        id: id.into(),
        instance,
        expected: "member with checked witness".into(),
        observed,
        status: if pass { Status::Pass } else { Status::Fail },
    })
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// x^ℓ + y^ℓ ∈ ⟨x+y, xy⟩ and x^ℓ + (−1)^ℓ y^ℓ ∈ ⟨x−y, xy⟩ in k[x, y].
pub fn binomial_sums(id: &str, max_l: usize) -> Result<Vec<CaseResult>> {
    let r = Ring::new(SupportedRing::Commutative)?;
    let Vars { x, y, .. } = vars(&r)?;
    let xy = r.multiply(&x, &y);
    let (s, d) = (x.add(&y), x.sub(&y));
    let mut out = Vec::new();
    for l in 1..=max_l {
        let a = r.power(&x, l).add(&r.power(&y, l));
        out.push(membership_row(
            id,
            &r,
            format!("x^{l} + y^{l}"),
            &a,
            &[s.clone(), xy.clone()],
            &names(&["(x+y)", "(xy)"]),
        )?);
        let b = r.power(&x, l).add(&r.scale(&r.power(&y, l), pm(l)));
        out.push(membership_row(
            id,
            &r,
            format!("x^{l} + ({})y^{l}", pm(l)),
            &b,
            &[d.clone(), xy.clone()],
            &names(&["(x-y)", "(xy)"]),
        )?);
    }
    Ok(out)
}

/// g_{t,l} = (xy)^t (x^l + (−1)^t y^l) ∈ ⟨x+y, xy(x−y)⟩ in k_{−1}[x, y].
pub fn skew_plane(id: &str, max: usize) -> Result<Vec<CaseResult>> {
    let r = Ring::new(SupportedRing::SkewMinusOne)?;
    let Vars { x, y, .. } = vars(&r)?;
    let xy = r.multiply(&x, &y);
    let gens = [x.add(&y), r.multiply(&xy, &x.sub(&y))];
    let gn = names(&["(x+y)", "(xy(x-y))"]);
    let mut out = vec![membership_row(id, &r, "x^2y^2".into(), &r.power(&xy, 2), &gens, &gn)?];
    for t in 0..=max {
        for l in 0..=max {
            if t + l == 0 {
                continue;
            }
            let g = r.multiply(&r.power(&xy, t), &r.power(&x, l).add(&r.scale(&r.power(&y, l), pm(t))));
            out.push(membership_row(id, &r, format!("g({t},{l})"), &g, &gens, &gn)?);
        }
    }
    Ok(out)
}

/// f_{t,l,s} = z^t (x^l ± y^l) w^s in k⟨x,y,z,w⟩/(x, y central, xy = α z^{2k}).
pub fn central_quotient(id: &str, k: u32, alpha: i64, max: usize) -> Result<Vec<CaseResult>> {
    let r = Ring::new(SupportedRing::CentralQuotient { k, alpha })?;
    let Vars { x, y, z, w } = vars(&r)?;
    let (z, w) = (z.unwrap(), w.unwrap());
    let f = |t: usize, l: usize, s: usize, sign: i64| {
        let mid = r.power(&x, l).add(&r.scale(&r.power(&y, l), sign));
        r.multiply(&r.multiply(&r.power(&z, t), &mid), &r.power(&w, s))
    };
    let xpy = x.add(&y);
    let xmy = x.sub(&y);
    let z2 = r.power(&z, 2);
    let w2 = r.power(&w, 2);
    let xpyw = r.multiply(&xpy, &w);
    let zxpy = r.multiply(&z, &xpy);
    let zw = r.multiply(&z, &w);
    let full = [z2.clone(), xmy.clone(), xpyw.clone(), w2.clone(), zxpy.clone(), zw];
    let full_n = names(&["(z^2)", "(x-y)", "((x+y)w)", "(w^2)", "(z(x+y))", "(zw)"]);
    let even_s = [z2.clone(), xmy.clone(), w2.clone(), zxpy.clone()];
    let even_n = names(&["(z^2)", "(x-y)", "(w^2)", "(z(x+y))"]);
    let no_z = [z.clone(), xmy.clone(), xpyw, w2];
    let no_z_n = names(&["z", "(x-y)", "((x+y)w)", "(w^2)"]);
    let no_w = [z2, xmy, zxpy];
    let no_w_n = names(&["(z^2)", "(x-y)", "(z(x+y))"]);
    let tag = format!("k={k} alpha={alpha}");
    let mut out = Vec::new();
    for t in 0..=max {
        for l in 0..=max {
            for s in 0..=max {
                if t + l + s == 0 {
                    continue;
                }
                let target = f(t, l, s, pm(t + s + l));
                out.push(membership_row(id, &r, format!("{tag} f({t},{l},{s})"), &target, &full, &full_n)?);
                if s % 2 == 0 {
                    out.push(membership_row(
                        id,
                        &r,
                        format!("{tag} f({t},{l},{s}), even s"),
                        &target,
                        &even_s,
                        &even_n,
                    )?);
                }
            }
        }
    }
    for l in 0..=max {
        for s in 0..=max {
            if l + s > 0 {
                let target = f(0, l, s, pm(l + s));
                out.push(membership_row(id, &r, format!("{tag} (x^{l}±y^{l})w^{s}"), &target, &no_z, &no_z_n)?);
            }
        }
    }
    for t in 0..=max {
        for l in 0..=max {
            if t + l > 0 {
                // the sign must carry t: z(x + y) is a generator, z(x − y) is not
                let target = f(t, l, 0, pm(t + l));
                out.push(membership_row(id, &r, format!("{tag} z^{t}(x^{l}±y^{l})"), &target, &no_w, &no_w_n)?);
            }
        }
    }
    Ok(out)
}
