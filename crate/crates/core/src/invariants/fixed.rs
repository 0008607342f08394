use crate::cyclotomic::sparse::{Echelon, PivotOrder, SparseVec};
use crate::cyclotomic::CycNum;
use crate::error::Result;
use crate::module_algebra::{GradedAlgebraSpec, GradedEngine};
use crate::rep::Representation;

/// Basis of {f ∈ A_d : g·f = ε(g)f for every generator g}, one vector per
/// free column of the echelonized system.
pub fn fixed_in(engine: &mut GradedEngine, d: usize) -> Result<Vec<SparseVec>> {
    let hopf = engine.spec().hopf().clone();
    let counit: Vec<CycNum> = hopf.counit.clone();
    character_space(engine, d, &counit)
}

/// Vectors of A_d on which each generator g acts by the scalar chi[g].
pub fn character_space(engine: &mut GradedEngine, d: usize, chi: &[CycNum]) -> Result<Vec<SparseVec>> {
    let dim = engine.dim(d)?;
    let l = engine.conductor();
    let mut ech = Echelon::new(PivotOrder::Leftmost);
    for (g, c) in chi.iter().enumerate() {
        let cols = engine.action_columns(g as u8, d)?;
        let mut rows = vec![SparseVec::new(); dim];
        for (j, col) in cols.iter().enumerate() {
            for (r, x) in col {
                rows[*r].insert(j, x.clone());
            }
        }
        for (r, mut row) in rows.into_iter().enumerate() {
            let diag = row.remove(&r).unwrap_or_else(|| CycNum::zero(l)) - c;
            if !diag.is_zero() {
                row.insert(r, diag);
            }
            if !row.is_empty() {
                ech.insert(row);
            }
        }
    }
    Ok(ech.kernel(dim, l))
}

pub fn fixed_subspace(spec: &GradedAlgebraSpec, d: usize) -> Result<Vec<SparseVec>> {
    fixed_in(&mut GradedEngine::preferred(spec)?, d)
}

/// dim Hom_H(S, A_d): maps m with ρ_A(g)·m_c = Σ_k S(g)[k][c]·m_k.
pub fn hom_dimension(engine: &mut GradedEngine, d: usize, s: &Representation) -> Result<usize> {
    let dim = engine.dim(d)?;
    let ds = s.dim();
    let mut ech = Echelon::new(PivotOrder::Leftmost);
    for (g, sg) in s.matrices.iter().enumerate() {
        let cols = engine.action_columns(g as u8, d)?;
        // row-major copy of ρ_A(g)
        let mut rows = vec![SparseVec::new(); dim];
        for (j, col) in cols.iter().enumerate() {
            for (r, x) in col {
                rows[*r].insert(j, x.clone());
            }
        }
        for c in 0..ds {
            for (r, row) in rows.iter().enumerate() {
                let mut eq: SparseVec = row.iter().map(|(j, x)| (c * dim + j, x.clone())).collect();
                for k in 0..ds {
                    let coef = sg.get(k, c);
                    if coef.is_zero() {
                        continue;
                    }
                    let key = k * dim + r;
                    let cur = eq.remove(&key).unwrap_or_else(|| CycNum::zero(coef.conductor()));
                    let next = cur - coef;
                    if !next.is_zero() {
                        eq.insert(key, next);
                    }
                }
                if !eq.is_empty() {
                    ech.insert(eq);
                }
            }
        }
    }
    Ok(ds * dim - ech.rank())
}
