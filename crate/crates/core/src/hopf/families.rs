//! Concrete presentations.
//!
//! Generator order is fixed per family type: `x, y, z` for the H-type algebras
//! and `s+, s-, a` for the dihedral-type ones. The dihedral relations are
//! oriented as a Coxeter-style rewriting system: `a` is central and moves
//! left, and the alternating word of length m starting with `s-` rewrites to
//! `a^b` times the one starting with `s+` (b = 1 when (s+ s-)^m = a, b = 0
//! when (s+ s-)^m = 1).

use super::presentation::HopfPresentation;
use super::rewrite::{RewriteSystem, Rule};
use super::word::{power, LinComb, Word};
use crate::cyclotomic::{root_of_unity, CycNum};
use crate::error::{HopfError, Result};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum Family {
    /// The eight-dimensional Kac–Palyutkin algebra with its classical coproduct.
    KacPalyutkin,
    H2n2 { n: u32 },
    A4m { m: u32 },
    B4m { m: u32 },
    /// Group algebra of Z_n ≀ S_2.
    Wreath { n: u32 },
    /// Group algebra of the dihedral group of order 4m.
    D4m { m: u32 },
    /// Group algebra of D_{2m} × Z_2.
    D2mZ2 { m: u32 },
}

/// Which generator naming a family uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    HType,
    Dihedral,
}

impl Family {
    pub fn shape(&self) -> Shape {
        match self {
            Family::KacPalyutkin | Family::H2n2 { .. } | Family::Wreath { .. } => Shape::HType,
            _ => Shape::Dihedral,
        }
    }

    /// n for the H-type families, m for the dihedral ones.
    pub fn parameter(&self) -> u32 {
        match *self {
            Family::KacPalyutkin => 2,
            Family::H2n2 { n } | Family::Wreath { n } => n,
            Family::A4m { m } | Family::B4m { m } | Family::D4m { m } | Family::D2mZ2 { m } => m,
        }
    }

    pub fn is_group_algebra(&self) -> bool {
        matches!(self, Family::Wreath { .. } | Family::D4m { .. } | Family::D2mZ2 { .. })
    }

    pub fn dimension(&self) -> usize {
        let p = self.parameter() as usize;
        match self.shape() {
            Shape::HType => 2 * p * p,
            Shape::Dihedral => 4 * p,
        }
    }

    /// Smallest conductor containing every structure constant and every
    /// matrix entry of the catalog representations.
    pub fn default_conductor(&self) -> u32 {
        let p = self.parameter();
        match self {
            Family::KacPalyutkin => 4,
            Family::H2n2 { .. } => 2 * p,
            Family::B4m { .. } | Family::D4m { .. } => 2 * p,
            Family::A4m { .. } | Family::D2mZ2 { .. } | Family::Wreath { .. } => p.lcm(&2),
        }
    }

    /// The group algebra with the same fusion-ring shape.
    pub fn group_counterpart(&self) -> Option<Family> {
        match *self {
            Family::H2n2 { n } => Some(Family::Wreath { n }),
            Family::B4m { m } => Some(Family::D4m { m }),
            Family::A4m { m } => Some(Family::D2mZ2 { m }),
            _ => None,
        }
    }

    /// Parses `H2n2:3`, `A4m:4`, `B4m:3`, `KP`, `Wreath:3`, `D4m:3`, `D2mZ2:3`.
    pub fn parse(s: &str) -> Result<Family> {
        let (name, param) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let p = || -> Result<u32> {
            param
                .ok_or_else(|| HopfError::UnknownName(format!("{s}: missing parameter")))?
                .trim()
                .parse::<u32>()
                .map_err(|_| HopfError::UnknownName(s.to_string()))
        };
        let f = match name.trim() {
            "KP" | "H8" | "KacPalyutkin" => Family::KacPalyutkin,
            "H2n2" => Family::H2n2 { n: p()? },
            "A4m" => Family::A4m { m: p()? },
            "B4m" => Family::B4m { m: p()? },
            "Wreath" => Family::Wreath { n: p()? },
            "D4m" => Family::D4m { m: p()? },
            "D2mZ2" => Family::D2mZ2 { m: p()? },
            _ => return Err(HopfError::UnknownName(s.to_string())),
        };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        if self.parameter() < 2 {
            return Err(HopfError::ParameterOutOfRange(format!(
                "{self}: parameter must be at least 2"
            )));
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Arc<HopfPresentation>> {
        self.build_with_conductor(self.default_conductor())
    }

    /// Builds over a larger cyclotomic field; `conductor` must be a multiple
    /// of the default one.
    pub fn build_with_conductor(&self, conductor: u32) -> Result<Arc<HopfPresentation>> {
        self.validate()?;
        if conductor % self.default_conductor() != 0 {
            return Err(HopfError::ParameterOutOfRange(format!(
                "conductor {conductor} is not a multiple of {}",
                self.default_conductor()
            )));
        }
        let h = match *self {
            Family::KacPalyutkin => kac_palyutkin(conductor)?,
            Family::H2n2 { n } => h_type(*self, n, conductor, false)?,
            Family::Wreath { n } => h_type(*self, n, conductor, true)?,
            Family::A4m { m } => dihedral(*self, m, conductor, false, false)?,
            Family::B4m { m } => dihedral(*self, m, conductor, true, false)?,
            Family::D2mZ2 { m } => dihedral(*self, m, conductor, false, true)?,
            Family::D4m { m } => dihedral(*self, m, conductor, true, true)?,
        };
        let found = h.basis().len();
        if found != h.dimension {
            return Err(HopfError::UnsupportedPresentation(format!(
                "{self}: {found} normal words, expected {}",
                h.dimension
            )));
        }
        Ok(Arc::new(h))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::KacPalyutkin => write!(f, "KP"),
            Family::H2n2 { n } => write!(f, "H2n2:{n}"),
            Family::A4m { m } => write!(f, "A4m:{m}"),
            Family::B4m { m } => write!(f, "B4m:{m}"),
            Family::Wreath { n } => write!(f, "Wreath:{n}"),
            Family::D4m { m } => write!(f, "D4m:{m}"),
            Family::D2mZ2 { m } => write!(f, "D2mZ2:{m}"),
        }
    }
}

pub fn build_h2n2(n: u32) -> Result<Arc<HopfPresentation>> {
    Family::H2n2 { n }.build()
}

pub fn build_a4m(m: u32) -> Result<Arc<HopfPresentation>> {
    Family::A4m { m }.build()
}

pub fn build_b4m(m: u32) -> Result<Arc<HopfPresentation>> {
    Family::B4m { m }.build()
}

pub fn build_kac_palyutkin() -> Result<Arc<HopfPresentation>> {
    Family::KacPalyutkin.build()
}

/// ζ_order^k inside the field of the given conductor.
pub(crate) fn zeta(conductor: u32, order: u32, k: i64) -> CycNum {
    debug_assert_eq!(conductor % order, 0);
    root_of_unity(conductor, (conductor / order) as i64 * k)
}

fn rule(lhs: Word, rhs: LinComb) -> Rule {
    Rule { lhs, rhs }
}

const X: u8 = 0;
const Y: u8 = 1;
const Z: u8 = 2;

/// x^i y^j
fn xy(i: u32, j: u32) -> Word {
    let mut w = power(X, i as usize);
    w.extend(power(Y, j as usize));
    w
}

/// (1/n) Σ_{i,j} q^{-ij} x^i y^j with q = ζ_n; the value of z².
pub(crate) fn twisted_idempotent_sum(n: u32, l: u32) -> LinComb {
    let inv_n = CycNum::from_ratio(l, 1, n as i64);
    LinComb::from_terms(
        l,
        (0..n).flat_map(|i| {
            let inv_n = inv_n.clone();
            (0..n).map(move |j| (&inv_n * &zeta(l, n, -((i * j) as i64)), xy(i, j)))
        }),
    )
}

fn h_type_rewriting(n: u32, l: u32, z_squared_is_one: bool) -> Result<RewriteSystem> {
    let zz = if z_squared_is_one {
        LinComb::one(l)
    } else {
        twisted_idempotent_sum(n, l)
    };
    let rules = vec![
        rule(vec![Y, X], LinComb::word(l, vec![X, Y])),
        rule(power(X, n as usize), LinComb::one(l)),
        rule(power(Y, n as usize), LinComb::one(l)),
        rule(vec![Z, X], LinComb::word(l, vec![Y, Z])),
        rule(vec![Z, Y], LinComb::word(l, vec![X, Z])),
        rule(vec![Z, Z], zz),
    ];
    RewriteSystem::new(3, l, rules)
}

fn h_type(family: Family, n: u32, l: u32, group: bool) -> Result<HopfPresentation> {
    let rewriting = h_type_rewriting(n, l, group)?;
    let one = CycNum::one(l);
    let glike = |g: u8| vec![(one.clone(), vec![g], vec![g])];
    let dz = if group {
        glike(Z)
    } else {
        let inv_n = CycNum::from_ratio(l, 1, n as i64);
        let mut terms = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut a = power(X, i as usize);
                a.push(Z);
                let mut b = power(Y, j as usize);
                b.push(Z);
                terms.push((&inv_n * &zeta(l, n, -((i * j) as i64)), a, b));
            }
        }
        terms
    };
    Ok(HopfPresentation {
        family,
        generators: vec!["x".into(), "y".into(), "z".into()],
        conductor: l,
        rewriting,
        coproduct: vec![glike(X), glike(Y), dz],
        counit: vec![one.clone(), one.clone(), one.clone()],
        antipode: vec![
            LinComb::word(l, power(X, n as usize - 1)),
            LinComb::word(l, power(Y, n as usize - 1)),
            LinComb::word(l, vec![Z]),
        ],
        dimension: family.dimension(),
    })
}

/// Same algebra as the n = 2 H-type algebra; coproduct
/// Δ(z) = ½(1⊗1 + 1⊗x + y⊗1 − y⊗x)(z⊗z).
fn kac_palyutkin(l: u32) -> Result<HopfPresentation> {
    let rewriting = h_type_rewriting(2, l, false)?;
    let one = CycNum::one(l);
    let half = CycNum::from_ratio(l, 1, 2);
    let glike = |g: u8| vec![(one.clone(), vec![g], vec![g])];
    let dz = vec![
        (half.clone(), vec![Z], vec![Z]),
        (half.clone(), vec![Z], vec![X, Z]),
        (half.clone(), vec![Y, Z], vec![Z]),
        (-&half, vec![Y, Z], vec![X, Z]),
    ];
    Ok(HopfPresentation {
        family: Family::KacPalyutkin,
        generators: vec!["x".into(), "y".into(), "z".into()],
        conductor: l,
        rewriting,
        coproduct: vec![glike(X), glike(Y), dz],
        counit: vec![one.clone(), one.clone(), one.clone()],
        antipode: vec![
            LinComb::word(l, vec![X]),
            LinComb::word(l, vec![Y]),
            LinComb::word(l, vec![Z]),
        ],
        dimension: 8,
    })
}

pub(crate) const SP: u8 = 0;
pub(crate) const SM: u8 = 1;
pub(crate) const A: u8 = 2;

/// Alternating word of length `len` starting with `first`.
pub(crate) fn alternating(first: u8, len: usize) -> Word {
    (0..len).map(|k| if k % 2 == 0 { first } else { 1 - first }).collect()
}

fn dihedral(family: Family, m: u32, l: u32, twisted_top: bool, group: bool) -> Result<HopfPresentation> {
    let m_us = m as usize;
    let mut top = Vec::new();
    if twisted_top {
        top.push(A);
    }
    top.extend(alternating(SP, m_us));
    let rules = vec![
        rule(vec![SP, SP], LinComb::one(l)),
        rule(vec![SM, SM], LinComb::one(l)),
        rule(vec![A, A], LinComb::one(l)),
        rule(vec![SP, A], LinComb::word(l, vec![A, SP])),
        rule(vec![SM, A], LinComb::word(l, vec![A, SM])),
        rule(alternating(SM, m_us), LinComb::word(l, top)),
    ];
    let rewriting = RewriteSystem::new(3, l, rules)?;
    let one = CycNum::one(l);
    let half = CycNum::from_ratio(l, 1, 2);
    let glike = |g: u8| vec![(one.clone(), vec![g], vec![g])];
    // Δ(s±) = s± ⊗ e0 s± + s∓ ⊗ e1 s±, with e0 = (1 + a)/2, e1 = (1 − a)/2
    let ds = |s: u8| {
        let t = 1 - s;
        vec![
            (half.clone(), vec![s], vec![s]),
            (half.clone(), vec![s], vec![A, s]),
            (half.clone(), vec![t], vec![s]),
            (-&half, vec![t], vec![A, s]),
        ]
    };
    // S(s±) = e0 s± + e1 s∓
    let anti = |s: u8| {
        let t = 1 - s;
        LinComb::from_terms(
            l,
            [
                (half.clone(), vec![s]),
                (half.clone(), vec![A, s]),
                (half.clone(), vec![t]),
                (-&half, vec![A, t]),
            ],
        )
    };
    let (coproduct, antipode) = if group {
        (
            vec![glike(SP), glike(SM), glike(A)],
            vec![
                LinComb::word(l, vec![SP]),
                LinComb::word(l, vec![SM]),
                LinComb::word(l, vec![A]),
            ],
        )
    } else {
        (
            vec![ds(SP), ds(SM), glike(A)],
            vec![anti(SP), anti(SM), LinComb::word(l, vec![A])],
        )
    };
    Ok(HopfPresentation {
        family,
        generators: vec!["s+".into(), "s-".into(), "a".into()],
        conductor: l,
        rewriting,
        coproduct,
        counit: vec![one.clone(), one.clone(), one.clone()],
        antipode,
        dimension: family.dimension(),
    })
}
