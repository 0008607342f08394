//! Closed-form tensor product rules, used as an oracle for the computed tables.
//!
//! Each rule produces raw labels which are then canonicalized and, where
//! reducible, split into their one-dimensional summands.

use super::table::FusionTable;
use crate::error::{HopfError, Result};
use crate::hopf::Family;
use crate::rep::{catalog_labels, RepLabel};
use std::collections::BTreeMap;

fn collect(family: Family, raw: Vec<RepLabel>) -> Result<Vec<(RepLabel, u32)>> {
    let mut out: BTreeMap<RepLabel, u32> = BTreeMap::new();
    for r in raw {
        for s in r.expand(family)? {
            *out.entry(s).or_default() += 1;
        }
    }
    let order = catalog_labels(family);
    let mut v: Vec<(RepLabel, u32)> = out.into_iter().collect();
    v.sort_by_key(|(l, _)| order.iter().position(|x| x == l));
    Ok(v)
}

/// a ⊗ b by the closed-form rules of the family.
pub fn expected_fusion(family: Family, a: RepLabel, b: RepLabel) -> Result<Vec<(RepLabel, u32)>> {
    let out_of_family = || HopfError::LabelOutOfFamily(format!("{a:?} ⊗ {b:?} for {family}"));
    for l in [a, b] {
        if l.canonical(family)? != l || l.is_reducible(family)? {
            return Err(out_of_family());
        }
    }
    let p = family.parameter();
    let raw = match family {
        Family::KacPalyutkin | Family::H2n2 { .. } => h_type(a, b, p),
        Family::B4m { .. } => b_type(a, b, p),
        Family::A4m { .. } if p % 2 == 1 => a_odd(a, b, p),
        Family::A4m { .. } => a_even(a, b, p),
        _ => None,
    }
    .ok_or_else(out_of_family)?;
    collect(family, raw)
}

fn h_type(a: RepLabel, b: RepLabel, n: u32) -> Option<Vec<RepLabel>> {
    use RepLabel::{HOne, HTwo};
    Some(match (a, b) {
        (HOne { k, plus: s }, HOne { k: j, plus: t }) => vec![HOne { k: (k + j) % n, plus: s == t }],
        (HTwo { i, j }, HOne { k, .. }) | (HOne { k, .. }, HTwo { i, j }) => vec![HTwo { i: i + k, j: j + k }],
        (HTwo { i, j }, HTwo { i: k, j: l }) => vec![HTwo { i: i + l, j: j + k }, HTwo { i: i + k, j: j + l }],
        _ => return None,
    })
}

fn b_type(a: RepLabel, b: RepLabel, m: u32) -> Option<Vec<RepLabel>> {
    use RepLabel::{One, Two};
    Some(match (a, b) {
        (One { signs: s }, One { signs: t }) => vec![One { signs: one_dim_product(s, t) }],
        (One { signs }, Two { i }) | (Two { i }, One { signs }) => {
            if signs[0] == signs[1] {
                vec![Two { i }]
            } else {
                vec![Two { i: m - i }]
            }
        }
        (Two { i }, Two { i: j }) => {
            let second = if i + j < m { i + j } else { 2 * m - i - j };
            vec![Two { i: i.abs_diff(j) }, Two { i: second }]
        }
        _ => return None,
    })
}

/// The one-dimensional rule that follows from Δ(s±) = s±⊗e0 s± + s∓⊗e1 s±:
/// when a acts by −1 on the right factor, the right factor sees s+ and s- swapped.
fn one_dim_product(s: [i8; 3], t: [i8; 3]) -> [i8; 3] {
    if t[2] == 1 {
        [s[0] * t[0], s[1] * t[1], s[2] * t[2]]
    } else {
        [s[1] * t[0], s[0] * t[1], s[2] * t[2]]
    }
}

fn two_two(i: u32, e: i8, j: u32, d: i8, threshold: u32, m: u32) -> Vec<RepLabel> {
    let eps = e * d;
    let second = if i + j <= threshold { i + j } else { m - i - j };
    vec![
        RepLabel::TwoEps { i: i.abs_diff(j), eps },
        RepLabel::TwoEps { i: second, eps },
    ]
}

fn a_odd(a: RepLabel, b: RepLabel, m: u32) -> Option<Vec<RepLabel>> {
    use RepLabel::{One, TwoEps};
    Some(match (a, b) {
        (TwoEps { i, eps: e }, TwoEps { i: j, eps: d }) => two_two(i, e, j, d, (m - 1) / 2, m),
        (One { signs }, TwoEps { i, eps }) | (TwoEps { i, eps }, One { signs }) => {
            vec![TwoEps { i, eps: eps * signs[2] }]
        }
        (One { signs: s }, One { signs: t }) => vec![One { signs: [s[0] * t[0], s[1] * t[1], s[2] * t[2]] }],
        _ => return None,
    })
}

fn a_even(a: RepLabel, b: RepLabel, m: u32) -> Option<Vec<RepLabel>> {
    use RepLabel::{One, TwoEps};
    let half = m / 2;
    Some(match (a, b) {
        (TwoEps { i, eps: e }, TwoEps { i: j, eps: d }) => two_two(i, e, j, d, half - 1, m),
        (One { signs }, TwoEps { i, eps }) | (TwoEps { i, eps }, One { signs }) => {
            let idx = if signs[0] == signs[1] { i } else { half - i };
            vec![TwoEps { i: idx, eps: eps * signs[2] }]
        }
        (One { signs: [al, b1, e] }, One { signs: [be, b2, d] }) => {
            let (a_mixed, b_mixed) = (al != b1, be != b2);
            let base = if a_mixed { al * be * d } else { al * be };
            let second = if a_mixed == b_mixed { base } else { -base };
            vec![One { signs: [base, second, e * d] }]
        }
        _ => return None,
    })
}

/// The whole table predicted by the closed forms, in the catalog order.
pub fn expected_table(family: Family) -> Result<FusionTable> {
    let labels = catalog_labels(family);
    let n = labels.len();
    let mut constants = vec![vec![vec![0u32; n]; n]; n];
    for (ia, a) in labels.iter().enumerate() {
        for (ib, b) in labels.iter().enumerate() {
            for (c, k) in expected_fusion(family, *a, *b)? {
                let ic = labels
                    .iter()
                    .position(|x| *x == c)
                    .ok_or_else(|| HopfError::LabelOutOfFamily(format!("{c:?}")))?;
                constants[ia][ib][ic] = k;
            }
        }
    }
    Ok(FusionTable {
        family,
        dims: labels.iter().map(|l| l.dim()).collect(),
        labels,
        constants,
    })
}
