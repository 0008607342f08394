use crate::error::{HopfError, Result};
use crate::hopf::{Family, Shape};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Names of representations, shared by a Hopf algebra and its group counterpart.
///
/// Integer indices are stored raw; [`canonical`] reduces them to the
/// catalog range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RepLabel {
    /// x, y ↦ q^k and z ↦ ±(a square root of q^{k²}).
    HOne { k: u32, plus: bool },
    /// x ↦ diag(q^i, q^j), y ↦ diag(q^j, q^i), z antidiagonal.
    HTwo { i: u32, j: u32 },
    /// s+ ↦ signs[0], s- ↦ signs[1], a ↦ signs[2].
    One { signs: [i8; 3] },
    /// s+ ↦ swap, s- ↦ antidiag(λ^{-i}, λ^i), a ↦ (−1)^i, λ of order 2m.
    Two { i: u32 },
    /// As `Two` with λ of order m and a ↦ eps.
    TwoEps { i: u32, eps: i8 },
}

impl RepLabel {
    pub fn dim(&self) -> usize {
        match self {
            RepLabel::HOne { .. } | RepLabel::One { .. } => 1,
            _ => 2,
        }
    }

    pub fn fits(&self, family: Family) -> bool {
        match (family, self) {
            (_, RepLabel::HOne { .. } | RepLabel::HTwo { .. }) => family.shape() == Shape::HType,
            (_, RepLabel::One { signs }) => {
                family.shape() == Shape::Dihedral && signs.iter().all(|s| *s == 1 || *s == -1)
            }
            (Family::B4m { .. } | Family::D4m { .. }, RepLabel::Two { .. }) => true,
            (Family::A4m { .. } | Family::D2mZ2 { .. }, RepLabel::TwoEps { eps, .. }) => {
                *eps == 1 || *eps == -1
            }
            _ => false,
        }
    }

    /// Canonical representative of the isomorphism class named by a raw label.
    pub fn canonical(&self, family: Family) -> Result<RepLabel> {
        if !self.fits(family) {
            return Err(HopfError::LabelOutOfFamily(format!("{self:?} for {family}")));
        }
        let p = family.parameter();
        Ok(match *self {
            RepLabel::HOne { k, plus } => RepLabel::HOne { k: k % p, plus },
            RepLabel::HTwo { i, j } => {
                let (i, j) = (i % p, j % p);
                RepLabel::HTwo { i: i.min(j), j: i.max(j) }
            }
            RepLabel::One { signs } => RepLabel::One { signs },
            RepLabel::Two { i } => {
                let i = i % (2 * p);
                RepLabel::Two { i: if i > p { 2 * p - i } else { i } }
            }
            RepLabel::TwoEps { i, eps } => {
                let i = i % p;
                RepLabel::TwoEps { i: if 2 * i > p { p - i } else { i }, eps }
            }
        })
    }

    /// Whether the (canonical form of the) label names a reducible module.
    pub fn is_reducible(&self, family: Family) -> Result<bool> {
        let p = family.parameter();
        Ok(match self.canonical(family)? {
            RepLabel::HTwo { i, j } => i == j,
            RepLabel::Two { i } => i == 0 || i == p,
            RepLabel::TwoEps { i, .. } => i == 0 || 2 * i == p,
            _ => false,
        })
    }

    /// Irreducible summands of a reducible convenience label.
    pub fn expand(&self, family: Family) -> Result<Vec<RepLabel>> {
        let c = self.canonical(family)?;
        if !c.is_reducible(family)? {
            return Ok(vec![c]);
        }
        let p = family.parameter();
        let sgn = |e: bool| if e { -1i8 } else { 1 };
        Ok(match c {
            RepLabel::HTwo { i, .. } => vec![
                RepLabel::HOne { k: i, plus: true },
                RepLabel::HOne { k: i, plus: false },
            ],
            RepLabel::Two { i: 0 } => vec![
                RepLabel::One { signs: [1, 1, 1] },
                RepLabel::One { signs: [-1, -1, 1] },
            ],
            RepLabel::Two { .. } => {
                let g = sgn(p % 2 == 1);
                vec![
                    RepLabel::One { signs: [1, -1, g] },
                    RepLabel::One { signs: [-1, 1, g] },
                ]
            }
            RepLabel::TwoEps { i: 0, eps } => vec![
                RepLabel::One { signs: [1, 1, eps] },
                RepLabel::One { signs: [-1, -1, eps] },
            ],
            RepLabel::TwoEps { eps, .. } => vec![
                RepLabel::One { signs: [1, -1, eps] },
                RepLabel::One { signs: [-1, 1, eps] },
            ],
            _ => unreachable!(),
        })
    }

    /// Human-readable name in the notation of the given family.
    pub fn name(&self, family: Family) -> String {
        let pm = |b: bool| if b { "+" } else { "-" };
        match (*self, family) {
            (RepLabel::HOne { k, plus }, Family::KacPalyutkin) => {
                let xy = if k % 2 == 0 { "1" } else { "-1" };
                // z ↦ ±p^{k²} with p = −i
                let z = match (k % 2 == 0, plus) {
                    (true, true) => "1",
                    (true, false) => "-1",
                    (false, true) => "-i",
                    (false, false) => "i",
                };
                format!("T_{{{xy},{xy},{z}}}")
            }
            (RepLabel::HTwo { .. }, Family::KacPalyutkin) => "pi".to_string(),
            (RepLabel::HOne { k, plus }, Family::Wreath { .. }) => format!("U_{k}^{}", pm(plus)),
            (RepLabel::HTwo { i, j }, Family::Wreath { .. }) => format!("rho_{{{i},{j}}}"),
            (RepLabel::HOne { k, plus }, _) => format!("T_{k}^{}", pm(plus)),
            (RepLabel::HTwo { i, j }, _) => format!("pi_{{{i},{j}}}"),
            (RepLabel::One { signs }, _) => {
                format!("T_{{{},{},{}}}", signs[0], signs[1], signs[2])
            }
            (RepLabel::Two { i }, _) => format!("pi_{i}"),
            (RepLabel::TwoEps { i, eps }, _) => format!("pi_{i}^{}", pm(eps == 1)),
        }
    }

    /// Inverse of [`RepLabel::name`]; also accepts unbraced single indices.
    pub fn parse(s: &str, family: Family) -> Result<RepLabel> {
        let bad = || HopfError::UnknownName(s.to_string());
        let s = s.trim();
        let strip = |t: &str| t.trim_matches(|c| c == '{' || c == '}').to_string();
        let nums = |t: &str| -> Result<Vec<i64>> {
            strip(t)
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| bad()))
                .collect()
        };
        let label = if family == Family::KacPalyutkin && s == "pi" {
            RepLabel::HTwo { i: 0, j: 1 }
        } else if family == Family::KacPalyutkin && s.starts_with("T_{") {
            let inner = strip(&s[2..]);
            let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
            match parts.as_slice() {
                ["1", "1", "1"] => RepLabel::HOne { k: 0, plus: true },
                ["1", "1", "-1"] => RepLabel::HOne { k: 0, plus: false },
                ["-1", "-1", "-i"] => RepLabel::HOne { k: 1, plus: true },
                ["-1", "-1", "i"] => RepLabel::HOne { k: 1, plus: false },
                _ => return Err(bad()),
            }
        } else if let Some(rest) = s.strip_prefix("T_").or_else(|| s.strip_prefix("U_")) {
            if let Some((k, sign)) = rest.split_once('^') {
                let k = nums(k)?;
                if k.len() != 1 || k[0] < 0 {
                    return Err(bad());
                }
                RepLabel::HOne { k: k[0] as u32, plus: sign == "+" }
            } else {
                let v = nums(rest)?;
                if v.len() != 3 {
                    return Err(bad());
                }
                RepLabel::One { signs: [v[0] as i8, v[1] as i8, v[2] as i8] }
            }
        } else if let Some(rest) = s.strip_prefix("pi_").or_else(|| s.strip_prefix("rho_")) {
            let (idx, sign) = match rest.split_once('^') {
                Some((a, b)) => (a, Some(b)),
                None => (rest, None),
            };
            let v = nums(idx)?;
            if v.iter().any(|x| *x < 0) {
                return Err(bad());
            }
            match (v.len(), sign) {
                (2, None) => RepLabel::HTwo { i: v[0] as u32, j: v[1] as u32 },
                (1, None) => RepLabel::Two { i: v[0] as u32 },
                (1, Some(e)) => RepLabel::TwoEps {
                    i: v[0] as u32,
                    eps: if e == "+" || e == "+1" { 1 } else { -1 },
                },
                _ => return Err(bad()),
            }
        } else {
            return Err(bad());
        };
        if !label.fits(family) {
            return Err(HopfError::LabelOutOfFamily(format!("{s} for {family}")));
        }
        Ok(label)
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}
