use super::label::RepLabel;
use super::module::Representation;
use crate::cyclotomic::{CycMatrix, CycNum};
use crate::error::{HopfError, Result};
use crate::hopf::{zeta, Family, HopfPresentation, Shape};
use serde::Serialize;
use std::sync::Arc;

/// Irreducible labels in catalog order: one-dimensional first.
pub fn catalog_labels(family: Family) -> Vec<RepLabel> {
    let p = family.parameter();
    let mut out = Vec::new();
    match family {
        Family::KacPalyutkin | Family::H2n2 { .. } | Family::Wreath { .. } => {
            for k in 0..p {
                for plus in [true, false] {
                    out.push(RepLabel::HOne { k, plus });
                }
            }
            for i in 0..p {
                for j in i + 1..p {
                    out.push(RepLabel::HTwo { i, j });
                }
            }
        }
        Family::B4m { .. } | Family::D4m { .. } => {
            let g = if p % 2 == 0 { 1 } else { -1 };
            for signs in [[1, 1, 1], [1, -1, g], [-1, 1, g], [-1, -1, 1]] {
                out.push(RepLabel::One { signs });
            }
            for i in 1..p {
                out.push(RepLabel::Two { i });
            }
        }
        Family::A4m { .. } | Family::D2mZ2 { .. } => {
            let mixed: &[i8] = if p % 2 == 0 { &[1, -1] } else { &[1] };
            for &mix in mixed {
                for al in [1i8, -1] {
                    for ga in [1i8, -1] {
                        out.push(RepLabel::One { signs: [al, al * mix, ga] });
                    }
                }
            }
            for i in 1..=(p - 1) / 2 {
                for eps in [1i8, -1] {
                    out.push(RepLabel::TwoEps { i, eps });
                }
            }
        }
    }
    out
}

fn swap(l: u32) -> CycMatrix {
    CycMatrix::from_rows(
        vec![vec![CycNum::zero(l), CycNum::one(l)], vec![CycNum::one(l), CycNum::zero(l)]],
        l,
    )
}

fn diag(a: CycNum, b: CycNum, l: u32) -> CycMatrix {
    CycMatrix::from_rows(vec![vec![a, CycNum::zero(l)], vec![CycNum::zero(l), b]], l)
}

fn antidiag(top: CycNum, bottom: CycNum, l: u32) -> CycMatrix {
    CycMatrix::from_rows(vec![vec![CycNum::zero(l), top], vec![bottom, CycNum::zero(l)]], l)
}

fn one_by_one(c: CycNum, l: u32) -> CycMatrix {
    CycMatrix::from_rows(vec![vec![c]], l)
}

/// The module named by a label, built from its raw (uncanonicalized) indices
/// so that the matrices follow the label exactly; the stored label is canonical.
pub fn rep_from_label(h: &Arc<HopfPresentation>, label: RepLabel) -> Result<Representation> {
    let family = h.family;
    let canonical = label.canonical(family)?;
    let l = h.conductor;
    let p = family.parameter();
    let group = family.is_group_algebra();
    let mats = match (family.shape(), label) {
        (Shape::HType, RepLabel::HOne { k, plus }) => {
            let q = zeta(l, p, k as i64);
            let root = if group {
                CycNum::one(l)
            } else {
                // p = −ζ_{2n}, a square root of q
                (-zeta(l, 2 * p, 1)).pow((k as i64) * (k as i64))
            };
            let z = if plus { root } else { -root };
            vec![one_by_one(q.clone(), l), one_by_one(q, l), one_by_one(z, l)]
        }
        (Shape::HType, RepLabel::HTwo { i, j }) => {
            let (qi, qj) = (zeta(l, p, i as i64), zeta(l, p, j as i64));
            let z = if group {
                swap(l)
            } else {
                antidiag(CycNum::one(l), zeta(l, p, (i * j) as i64), l)
            };
            vec![diag(qi.clone(), qj.clone(), l), diag(qj, qi, l), z]
        }
        (Shape::Dihedral, RepLabel::One { signs }) => signs
            .iter()
            .map(|s| one_by_one(CycNum::from_int(l, *s as i64), l))
            .collect(),
        (Shape::Dihedral, RepLabel::Two { i }) => {
            let lam = |k: i64| zeta(l, 2 * p, k);
            let a = CycNum::from_int(l, if i % 2 == 0 { 1 } else { -1 });
            vec![
                swap(l),
                antidiag(lam(-(i as i64)), lam(i as i64), l),
                diag(a.clone(), a, l),
            ]
        }
        (Shape::Dihedral, RepLabel::TwoEps { i, eps }) => {
            let lam = |k: i64| zeta(l, p, k);
            let a = CycNum::from_int(l, eps as i64);
            vec![
                swap(l),
                antidiag(lam(-(i as i64)), lam(i as i64), l),
                diag(a.clone(), a, l),
            ]
        }
        _ => return Err(HopfError::LabelOutOfFamily(format!("{label:?} for {family}"))),
    };
    Representation::new(h.clone(), mats, Some(canonical))
}

/// All irreducible modules, checked to have Σ dim² = dim H.
pub fn irreducible_catalog(h: &Arc<HopfPresentation>) -> Result<Vec<Representation>> {
    let reps: Vec<Representation> = catalog_labels(h.family)
        .into_iter()
        .map(|lab| rep_from_label(h, lab))
        .collect::<Result<_>>()?;
    let total: usize = reps.iter().map(|r| r.dim() * r.dim()).sum();
    if total != h.dimension {
        return Err(HopfError::CatalogIncomplete(format!(
            "{}: Σ dim² = {total}, dim H = {}",
            h.family, h.dimension
        )));
    }
    Ok(reps)
}

/// Isotypic multiplicities of a module, in catalog order (zero entries omitted).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub parts: Vec<(RepLabel, usize)>,
}

impl Decomposition {
    pub fn multiplicity(&self, label: &RepLabel) -> usize {
        self.parts.iter().find(|(l, _)| l == label).map(|(_, m)| *m).unwrap_or(0)
    }
}

/// Multiplicity of each simple S is dim Hom_H(S, ρ) (semisimplicity and
/// absolute irreducibility of the catalog over the cyclotomic field).
pub fn decompose(rho: &Representation, catalog: &[Representation]) -> Result<Decomposition> {
    let mut parts = Vec::new();
    let mut covered = 0;
    for s in catalog {
        let mult = rho.intertwiners_from(s).len();
        if mult > 0 {
            covered += mult * s.dim();
            parts.push((s.label.expect("catalog modules are labelled"), mult));
        }
    }
    if covered != rho.dim() {
        return Err(HopfError::CatalogIncomplete(format!(
            "simple summands cover {covered} of {} dimensions",
            rho.dim()
        )));
    }
    Ok(Decomposition { parts })
}
