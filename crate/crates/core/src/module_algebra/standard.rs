use super::spec::{relation, ActionParams, BasisTag, GradedAlgebraSpec, OreLayer, T, U, V};
use crate::cyclotomic::sparse::SparseVec;
use crate::cyclotomic::{CycMatrix, CycNum};
use crate::error::{HopfError, Result};
use crate::hopf::{zeta, Family, HopfPresentation, LinComb};
use crate::rep::{rep_from_label, RepLabel};
use std::sync::Arc;

/// Names accepted by [`standard_action`] for a family.
pub fn standard_names(family: Family) -> Vec<String> {
    match family {
        Family::KacPalyutkin => ["KP-a", "KP-b", "KP-c", "KP-d"].map(String::from).to_vec(),
        Family::A4m { m } if m % 2 == 0 => (1..=5)
            .flat_map(|k| [format!("A{k}minus"), format!("A{k}plus")])
            .collect(),
        Family::H2n2 { .. } | Family::B4m { .. } | Family::A4m { .. } => {
            vec!["Aminus".into(), "Aplus".into()]
        }
        _ => Vec::new(),
    }
}

/// Parameters used when the caller gives none: the first inner-faithful choice.
pub fn default_params(family: Family) -> ActionParams {
    match family {
        Family::KacPalyutkin => ActionParams { i: 1, j: 0, eps: 1 },
        Family::H2n2 { .. } => ActionParams { i: 0, j: 1, eps: 1 },
        Family::A4m { m } if m % 2 == 1 => ActionParams { i: 1, j: 0, eps: -1 },
        _ => ActionParams { i: 1, j: 0, eps: 1 },
    }
}

/// Every named algebra of the family with its degree-one module structure.
///
/// With `only_inner_faithful`, specs whose degree-one module is not
/// inner-faithful are dropped, and an empty result is an error.
pub fn standard_actions(
    h: &Arc<HopfPresentation>,
    params: ActionParams,
    only_inner_faithful: bool,
) -> Result<Vec<GradedAlgebraSpec>> {
    let names = standard_names(h.family);
    if names.is_empty() {
        return Err(HopfError::UnsupportedPresentation(format!(
            "no named module algebras for {}",
            h.family
        )));
    }
    let mut out = Vec::new();
    for name in names {
        let spec = standard_action(h, &name, params)?;
        if !only_inner_faithful || spec.inner_faithful {
            out.push(spec);
        }
    }
    if out.is_empty() {
        return Err(HopfError::ParameterOutOfRange(format!(
            "parameters {params:?} violate the inner-faithfulness precondition for {}",
            h.family
        )));
    }
    Ok(out)
}

fn skew(l: u32, c: CycNum) -> (Vec<SparseVec>, BasisTag) {
    // vu − c·uv
    let r = relation(2, &[(CycNum::one(l), V, U), (-&c, U, V)]);
    (vec![r], BasisTag::Skew2Gen { c })
}

fn u2cv2(l: u32, c: CycNum) -> (Vec<SparseVec>, BasisTag) {
    // u² − c·v²
    let r = relation(2, &[(CycNum::one(l), U, U), (-&c, V, V)]);
    (vec![r], BasisTag::U2cV2 { c })
}

fn two_gen(
    h: &Arc<HopfPresentation>,
    name: &str,
    params: ActionParams,
    label: RepLabel,
    (relations, tag): (Vec<SparseVec>, BasisTag),
) -> Result<GradedAlgebraSpec> {
    let rep = rep_from_label(h, label)?;
    GradedAlgebraSpec::new(name, params, rep, vec![label], relations, tag, None)
}

fn minus_plus(name: &str) -> Result<bool> {
    if name.ends_with("minus") {
        Ok(true)
    } else if name.ends_with("plus") {
        Ok(false)
    } else {
        Err(HopfError::UnknownName(name.into()))
    }
}

/// The named module algebra, e.g. "Aminus", "A3plus", "KP-c".
pub fn standard_action(h: &Arc<HopfPresentation>, name: &str, params: ActionParams) -> Result<GradedAlgebraSpec> {
    let family = h.family;
    let l = h.conductor;
    let unknown = || HopfError::UnknownName(format!("{name} for {family}"));
    if !standard_names(family).iter().any(|s| s == name) {
        return Err(unknown());
    }
    let p = family.parameter();
    match family {
        Family::KacPalyutkin => {
            let label = RepLabel::HTwo { i: 1, j: 0 };
            let i4 = zeta(l, 4, 1);
            let rel = match name {
                "KP-a" => u2cv2(l, CycNum::from_int(l, -1)),
                "KP-b" => u2cv2(l, CycNum::one(l)),
                // vu + 𝕚uv and vu − 𝕚uv
                "KP-c" => skew(l, -&i4),
                _ => skew(l, i4),
            };
            two_gen(h, name, params, label, rel)
        }
        Family::H2n2 { n } => {
            let (i, j) = (params.i % n, params.j % n);
            let e = (i as i64).pow(2) - (j as i64).pow(2);
            // p = −ζ_{2n}; relation p^{i²−j²}·uv ∓ vu
            let pe = (-zeta(l, 2 * n, 1)).pow(e);
            let c = if minus_plus(name)? { pe } else { -pe };
            two_gen(h, name, params, RepLabel::HTwo { i, j }, skew(l, c))
        }
        Family::B4m { .. } => {
            let li = zeta(l, 2 * p, params.i as i64);
            let c = if minus_plus(name)? { li } else { -li };
            two_gen(h, name, params, RepLabel::Two { i: params.i }, u2cv2(l, c))
        }
        Family::A4m { .. } if p % 2 == 1 => {
            let li = zeta(l, p, params.i as i64);
            let c = if minus_plus(name)? { li } else { -li };
            let label = RepLabel::TwoEps { i: params.i, eps: -1 };
            two_gen(h, name, params, label, u2cv2(l, c))
        }
        Family::A4m { .. } => a_even(h, name, params),
        _ => Err(unknown()),
    }
}

/// The five Ore extensions for 𝒜_{4m}, m even.
fn a_even(h: &Arc<HopfPresentation>, name: &str, params: ActionParams) -> Result<GradedAlgebraSpec> {
    let l = h.conductor;
    let m = h.family.parameter();
    let k: u32 = name[1..2].parse().map_err(|_| HopfError::UnknownName(name.into()))?;
    let minus = minus_plus(name)?;
    let eps = params.eps;
    if eps != 1 && eps != -1 {
        return Err(HopfError::ParameterOutOfRange(format!("ε = {eps}")));
    }
    let li = zeta(l, m, params.i as i64);
    let (base_rel, v_eps) = if k == 1 || k == 3 {
        // uv ∓ vu, i.e. vu = ±uv
        let c = CycNum::from_int(l, if minus { 1 } else { -1 });
        (skew(l, c), 1)
    } else {
        let c = if minus { li.clone() } else { -&li };
        (u2cv2(l, c), -1)
    };
    let v_label = RepLabel::TwoEps { i: params.i, eps: v_eps };
    let base = two_gen(h, &format!("{name}-base"), params, v_label, base_rel)?;
    let sigma = ore_sigma(l, m, params.i, k);
    let t_signs = match k {
        1 | 2 => [eps, eps, -1],
        3 | 4 => [eps, -eps, -1],
        _ => [eps, -eps, 1],
    };
    ore_spec(name, base, sigma, RepLabel::One { signs: t_signs })
}

/// σ on span{u, v} for the k-th extension. For k = 5, kt has a ↦ 1 while a acts
/// by −1 on V, so H-stability forces σ to anticommute with s+ and s−; the only
/// such automorphisms are multiples of diag(1, −1).
pub fn ore_sigma(l: u32, m: u32, i: u32, k: u32) -> CycMatrix {
    let z = || CycNum::zero(l);
    let li = zeta(l, m, i as i64);
    let rows = match k {
        1..=3 => vec![vec![z(), CycNum::one(l)], vec![li, z()]],
        4 => vec![vec![z(), CycNum::from_int(l, -1)], vec![li, z()]],
        _ => vec![vec![CycNum::one(l), z()], vec![z(), CycNum::from_int(l, -1)]],
    };
    CycMatrix::from_rows(rows, l)
}

/// A[t; σ] with W = V ⊕ kt, without the extension-condition gate.
pub fn ore_spec(
    name: &str,
    base: GradedAlgebraSpec,
    sigma: CycMatrix,
    t_label: RepLabel,
) -> Result<GradedAlgebraSpec> {
    let h = base.hopf().clone();
    let l = base.conductor();
    let t_rep = rep_from_label(&h, t_label)?;
    let w = base.degree_one.direct_sum(&t_rep);
    let sigma = sigma.lift(l);
    let mut relations: Vec<SparseVec> = base
        .relations
        .iter()
        .map(|r| r.iter().map(|(k, c)| ((k / 2) * 3 + k % 2, c.clone())).collect())
        .collect();
    for x in [U, V] {
        // t·x − σ(x)·t
        let mut terms = vec![(CycNum::one(l), T, x)];
        for r in [U, V] {
            terms.push((-sigma.get(r as usize, x as usize), r, T));
        }
        relations.push(relation(3, &terms));
    }
    let mut labels = base.labels.clone();
    labels.push(t_label);
    let tag = if base.has_closed_form() {
        BasisTag::OreOverBase
    } else {
        BasisTag::Generic
    };
    let params = base.params;
    let ore = OreLayer { sigma, t_label, base: Box::new(base.clone()) };
    GradedAlgebraSpec::new(name, params, w, labels, relations, tag, Some(ore))
}

/// Extends the action to A[t; σ] when σ is H-linear and kt is trivial, or
/// kt's character ρ satisfies Σ ρ(h₁)h₂ = Σ h₁ρ(h₂) on every generator.
pub fn ore_extend(a: &GradedAlgebraSpec, sigma: &CycMatrix, t_label: RepLabel) -> Result<GradedAlgebraSpec> {
    if a.ore.is_some() || a.ngens() != 2 {
        return Err(HopfError::UnsupportedPresentation(format!(
            "{} is not a two-generator base",
            a.name
        )));
    }
    let h = a.hopf().clone();
    let l = a.conductor();
    let sigma = sigma.lift(l);
    if sigma.rows() != 2 || sigma.cols() != 2 || sigma.rank() != 2 {
        return Err(HopfError::ExtensionConditionFails("σ is not invertible on degree one".into()));
    }
    for (g, m) in a.degree_one.matrices.iter().enumerate() {
        if sigma.mul(m) != m.mul(&sigma) {
            return Err(HopfError::ExtensionConditionFails(format!(
                "σ does not commute with {}",
                h.generators[g]
            )));
        }
    }
    let t_rep = rep_from_label(&h, t_label)?;
    let chi = |w: &[u8]| t_rep.word(w).get(0, 0).clone();
    for (g, terms) in h.coproduct.iter().enumerate() {
        let mut left = LinComb::zero(l);
        let mut right = LinComb::zero(l);
        for (c, w1, w2) in terms {
            left.add_term(w2.clone(), c * &chi(w1));
            right.add_term(w1.clone(), c * &chi(w2));
        }
        if h.normalize(&left) != h.normalize(&right) {
            return Err(HopfError::ExtensionConditionFails(format!(
                "{} fails the convolution condition at {}",
                t_label.name(h.family),
                h.generators[g]
            )));
        }
    }
    ore_spec(&format!("{}[t]", a.name), a.clone(), sigma, t_label)
}
