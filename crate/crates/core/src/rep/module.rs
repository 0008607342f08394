use super::label::RepLabel;
use crate::cyclotomic::{CycMatrix, CycNum};
use crate::error::{HopfError, Result};
use crate::hopf::{HopfPresentation, LinComb};
use std::sync::Arc;

/// A finite-dimensional module: one matrix per generator, acting on columns.
#[derive(Clone, Debug)]
pub struct Representation {
    pub hopf: Arc<HopfPresentation>,
    pub matrices: Vec<CycMatrix>,
    pub label: Option<RepLabel>,
}

impl Representation {
    /// Wraps matrices after lifting them to the algebra's conductor and
    /// checking every relation.
    pub fn new(
        hopf: Arc<HopfPresentation>,
        matrices: Vec<CycMatrix>,
        label: Option<RepLabel>,
    ) -> Result<Representation> {
        if matrices.len() != hopf.ngens() {
            return Err(HopfError::PresentationMismatch);
        }
        let d = matrices[0].rows();
        let l = hopf.conductor;
        let mut lifted = Vec::new();
        for m in matrices {
            if m.rows() != d || m.cols() != d || l % m.conductor() != 0 {
                return Err(HopfError::PresentationMismatch);
            }
            lifted.push(m.lift(l));
        }
        let rep = Representation { hopf, matrices: lifted, label };
        rep.check_is_module()?;
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn conductor(&self) -> u32 {
        self.hopf.conductor
    }

    pub fn word(&self, w: &[u8]) -> CycMatrix {
        let mut acc = CycMatrix::identity(self.dim(), self.conductor());
        for &g in w {
            acc = acc.mul(&self.matrices[g as usize]);
        }
        acc
    }

    pub fn lincomb(&self, x: &LinComb) -> CycMatrix {
        let mut acc = CycMatrix::zeros(self.dim(), self.dim(), self.conductor());
        for (w, c) in x.terms() {
            acc = acc.add(&self.word(w).scale(c));
        }
        acc
    }

    /// Every rewriting rule holds on the matrices.
    pub fn check_is_module(&self) -> Result<()> {
        for r in self.hopf.rewriting.rules() {
            if self.word(&r.lhs) != self.lincomb(&r.rhs) {
                return Err(HopfError::NotAModule(format!(
                    "relation {:?} → {:?}",
                    r.lhs, r.rhs
                )));
            }
        }
        Ok(())
    }

    /// V ⊗ W through the coproduct; basis vector (i, j) has index i·dim W + j.
    pub fn tensor(&self, other: &Representation) -> Result<Representation> {
        if self.hopf.family != other.hopf.family || self.conductor() != other.conductor() {
            return Err(HopfError::PresentationMismatch);
        }
        let n = self.dim() * other.dim();
        let l = self.conductor();
        let mut mats = Vec::new();
        for terms in &self.hopf.coproduct {
            let mut acc = CycMatrix::zeros(n, n, l);
            for (c, w1, w2) in terms {
                acc = acc.add(&self.word(w1).kron(&other.word(w2)).scale(c));
            }
            mats.push(acc);
        }
        Ok(Representation { hopf: self.hopf.clone(), matrices: mats, label: None })
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let (a, b) = (self.dim(), other.dim());
        let l = self.conductor();
        let mats = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(x, y)| {
                let mut m = CycMatrix::zeros(a + b, a + b, l);
                for r in 0..a {
                    for c in 0..a {
                        m.set(r, c, x.get(r, c).clone());
                    }
                }
                for r in 0..b {
                    for c in 0..b {
                        m.set(a + r, a + c, y.get(r, c).clone());
                    }
                }
                m
            })
            .collect();
        Representation { hopf: self.hopf.clone(), matrices: mats, label: None }
    }

    /// Basis of Hom_H(S, self): matrices M with self(g)·M = M·S(g).
    pub fn intertwiners_from(&self, s: &Representation) -> Vec<CycMatrix> {
        let (dr, ds) = (self.dim(), s.dim());
        let l = self.conductor();
        let nvar = dr * ds;
        let mut eqs: Vec<Vec<CycNum>> = Vec::new();
        for (rg, sg) in self.matrices.iter().zip(&s.matrices) {
            for r in 0..dr {
                for c in 0..ds {
                    let mut row = vec![CycNum::zero(l); nvar];
                    for k in 0..dr {
                        row[k * ds + c] += rg.get(r, k);
                    }
                    for k in 0..ds {
                        row[r * ds + k] -= sg.get(k, c);
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        eqs.push(row);
                    }
                }
            }
        }
        let basis = if eqs.is_empty() {
            CycMatrix::zeros(1, nvar, l).kernel_basis()
        } else {
            CycMatrix::from_rows(eqs, l).kernel_basis()
        };
        basis
            .into_iter()
            .map(|v| {
                CycMatrix::from_rows(
                    (0..dr).map(|r| v[r * ds..(r + 1) * ds].to_vec()).collect(),
                    l,
                )
            })
            .collect()
    }

    /// P⁻¹ ρ(g) P, i.e. the module expressed in the basis given by P's columns.
    pub fn change_basis(&self, p: &CycMatrix) -> Result<Representation> {
        let pinv = invert(p)?;
        let mats = self.matrices.iter().map(|m| pinv.mul(m).mul(p)).collect();
        Ok(Representation { hopf: self.hopf.clone(), matrices: mats, label: self.label })
    }

    /// Whether some basis intertwiner V → self is invertible; decisive when V is simple.
    pub fn is_isomorphic_to(&self, other: &Representation) -> bool {
        self.dim() == other.dim()
            && self
                .intertwiners_from(other)
                .iter()
                .any(|m| m.rank() == self.dim())
    }
}

/// Inverse of a square matrix by solving against the identity.
pub fn invert(p: &CycMatrix) -> Result<CycMatrix> {
    let n = p.rows();
    if p.cols() != n || p.rank() != n {
        return Err(HopfError::InconsistentSystem);
    }
    let l = p.conductor();
    let mut cols = Vec::new();
    for k in 0..n {
        let mut e = vec![CycNum::zero(l); n];
        e[k] = CycNum::one(l);
        cols.push(p.solve(&e)?);
    }
    Ok(CycMatrix::from_rows(
        (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect(),
        l,
    ))
}
