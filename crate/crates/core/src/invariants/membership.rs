//! Membership of a homogeneous element in the subalgebra generated by given
//! homogeneous elements, with an explicit expression as witness.

use crate::cyclotomic::sparse::{Echelon, PivotOrder, SparseVec};
use crate::cyclotomic::CycNum;
use crate::error::{HopfError, Result};
use crate::hopf::{concat, LinComb, RewriteSystem, Rule, Word};
use std::collections::HashMap;

/// Coefficients live in ℚ.
const Q: u32 = 1;

/// Graded rings with a confluent rewriting system for their relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportedRing {
    /// k[x, y].
    Commutative,
    /// k_{−1}[x, y]: yx = −xy.
    SkewMinusOne,
    /// k⟨x,y,z,w⟩ with x, y central and xy = α z^{2k}; deg x = deg y = k, deg z = deg w = 1.
    CentralQuotient { k: u32, alpha: i64 },
}

/// A supported ring with its normal forms.
pub struct Ring {
    pub kind: SupportedRing,
    pub names: Vec<&'static str>,
    pub weights: Vec<usize>,
    sys: RewriteSystem,
}

fn word(c: i64, w: &[u8]) -> LinComb {
    LinComb::from_terms(Q, [(CycNum::from_int(Q, c), w.to_vec())])
}

impl Ring {
    pub fn new(kind: SupportedRing) -> Result<Ring> {
        let (x, y, z, w) = (0u8, 1u8, 2u8, 3u8);
        let (names, weights, rules) = match kind {
            SupportedRing::Commutative => (
                vec!["x", "y"],
                vec![1, 1],
                vec![Rule { lhs: vec![y, x], rhs: word(1, &[x, y]) }],
            ),
            SupportedRing::SkewMinusOne => (
                vec!["x", "y"],
                vec![1, 1],
                vec![Rule { lhs: vec![y, x], rhs: word(-1, &[x, y]) }],
            ),
            SupportedRing::CentralQuotient { k, alpha } => {
                if k == 0 || alpha == 0 {
                    return Err(HopfError::UnsupportedRing(format!("{kind:?}")));
                }
                let k = k as usize;
                // z^{2k} = α⁻¹·xy; x and y move to the front
                let inv = LinComb::from_terms(Q, [(CycNum::from_ratio(Q, 1, alpha), vec![x, y])]);
                (
                    vec!["x", "y", "z", "w"],
                    vec![k, k, 1, 1],
                    vec![
                        Rule { lhs: vec![y, x], rhs: word(1, &[x, y]) },
                        Rule { lhs: vec![z, x], rhs: word(1, &[x, z]) },
                        Rule { lhs: vec![w, x], rhs: word(1, &[x, w]) },
                        Rule { lhs: vec![z, y], rhs: word(1, &[y, z]) },
                        Rule { lhs: vec![w, y], rhs: word(1, &[y, w]) },
                        Rule { lhs: vec![z; 2 * k], rhs: inv },
                    ],
                )
            }
        };
        let sys = RewriteSystem::new(names.len(), Q, rules)?;
        Ok(Ring { kind, names, weights, sys })
    }

    pub fn degree_of_word(&self, w: &[u8]) -> usize {
        w.iter().map(|g| self.weights[*g as usize]).sum()
    }

    /// Weighted degree of a homogeneous element; `None` for zero or mixed degrees.
    pub fn degree(&self, x: &LinComb) -> Option<usize> {
        let mut d = None;
        for (w, _) in x.terms() {
            let e = self.degree_of_word(w);
            if d.is_some_and(|d| d != e) {
                return None;
            }
            d = Some(e);
        }
        d
    }

    pub fn normalize(&self, x: &LinComb) -> LinComb {
        self.sys.normalize(x)
    }

    pub fn multiply(&self, a: &LinComb, b: &LinComb) -> LinComb {
        let mut out = LinComb::zero(Q);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                for (w, c) in self.sys.normalize_word(&concat(wa, wb)).terms() {
                    out.add_term(w.clone(), &(ca * cb) * c);
                }
            }
        }
        out
    }

    pub fn power(&self, a: &LinComb, k: usize) -> LinComb {
        let mut out = LinComb::one(Q);
        for _ in 0..k {
            out = self.multiply(&out, a);
        }
        out
    }

    pub fn add(&self, a: &LinComb, b: &LinComb) -> LinComb {
        a.add(b)
    }

    /// The letter with the given name as an element.
    pub fn var(&self, name: &str) -> Result<LinComb> {
        let g = self
            .names
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| HopfError::UnknownName(name.into()))?;
        Ok(word(1, &[g as u8]))
    }

    /// c·x.
    pub fn scale(&self, x: &LinComb, c: i64) -> LinComb {
        x.scale(&CycNum::from_int(Q, c))
    }

    /// Σ c_w · (product of the generators named by w) in the ring.
    pub fn evaluate(&self, expr: &LinComb, gens: &[LinComb]) -> LinComb {
        let mut out = LinComb::zero(Q);
        for (w, c) in expr.terms() {
            let mut p = LinComb::one(Q);
            for &g in w {
                p = self.multiply(&p, &gens[g as usize]);
            }
            out = out.add(&p.scale(c));
        }
        out
    }
}

/// Result of a membership query.
#[derive(Clone, Debug)]
pub struct Membership {
    pub member: bool,
    /// Noncommutative polynomial in the generators (letter i = generator i).
    pub witness: Option<LinComb>,
    /// The witness evaluated in the ring equals the target.
    pub witness_checks: bool,
}

/// Echelon whose rows remember how they were built from generator products.
struct Tracked {
    ech: Echelon,
    exprs: Vec<LinComb>,
}

impl Tracked {
    fn new() -> Tracked {
        Tracked { ech: Echelon::new(PivotOrder::Leftmost), exprs: Vec::new() }
    }

    fn insert(&mut self, v: SparseVec, expr: LinComb) {
        let (r, used) = self.ech.reduce_tracked(v);
        let Some((_, lead)) = r.iter().next() else { return };
        let inv = lead.inv().expect("nonzero lead");
        let mut e = expr;
        for (ri, c) in used {
            e = e.sub(&self.exprs[ri].scale(&c));
        }
        self.ech.push_reduced(r);
        self.exprs.push(e.scale(&inv));
    }

    /// Expression for v if it lies in the span.
    fn express(&self, v: SparseVec) -> Option<LinComb> {
        let (r, used) = self.ech.reduce_tracked(v);
        if !r.is_empty() {
            return None;
        }
        let mut e = LinComb::zero(Q);
        for (ri, c) in used {
            e = e.add(&self.exprs[ri].scale(&c));
        }
        Some(e)
    }
}

/// Decides target ∈ k⟨gens⟩ by spanning the subalgebra degree by degree.
pub fn subalgebra_membership(ring: &Ring, target: &LinComb, gens: &[LinComb]) -> Result<Membership> {
    let target = ring.normalize(target);
    if target.is_zero() {
        return Ok(Membership { member: true, witness: Some(LinComb::zero(Q)), witness_checks: true });
    }
    let d = ring
        .degree(&target)
        .ok_or_else(|| HopfError::ParameterOutOfRange("target is not homogeneous".into()))?;
    let gens: Vec<LinComb> = gens.iter().map(|g| ring.normalize(g)).collect();
    let mut gdeg = Vec::new();
    for g in &gens {
        gdeg.push(
            ring.degree(g)
                .filter(|e| *e > 0)
                .ok_or_else(|| HopfError::ParameterOutOfRange("generator is not homogeneous of positive degree".into()))?,
        );
    }
    let mut interner: HashMap<Word, usize> = HashMap::new();
    let mut coords = |x: &LinComb| -> SparseVec {
        x.terms()
            .map(|(w, c)| {
                let n = interner.len();
                (*interner.entry(w.clone()).or_insert(n), c.clone())
            })
            .collect()
    };
    // levels[e] holds (element, expression) pairs spanning S_e
    let mut levels: Vec<Vec<(LinComb, LinComb)>> = vec![vec![(LinComb::one(Q), LinComb::one(Q))]];
    let mut top = Tracked::new();
    for e in 1..=d {
        let mut tr = Tracked::new();
        let mut elems = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if gdeg[i] > e {
                continue;
            }
            for (s, expr) in &levels[e - gdeg[i]] {
                let prod = ring.multiply(g, s);
                let mut pe = LinComb::zero(Q);
                for (w, c) in expr.terms() {
                    pe.add_term(concat(&[i as u8], w), c.clone());
                }
                let before = tr.ech.rank();
                tr.insert(coords(&prod), pe.clone());
                if tr.ech.rank() > before {
                    elems.push((prod, pe));
                }
            }
        }
        levels.push(elems);
        if e == d {
            top = tr;
        }
    }
    let witness = top.express(coords(&target));
    let witness_checks = witness
        .as_ref()
        .is_some_and(|w| ring.normalize(&ring.evaluate(w, &gens)) == target);
    Ok(Membership { member: witness.is_some(), witness, witness_checks })
}

/// Readable witness, e.g. "(1/4)·g0 g2 + g1".
pub fn display_witness(expr: &LinComb, gen_names: &[String]) -> String {
    let parts: Vec<String> = expr
        .terms()
        .map(|(w, c)| {
            let mono = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|g| gen_names[*g as usize].clone()).collect::<Vec<_>>().join("·")
            };
            if c.is_one() {
                mono
            } else {
                format!("({c})·{mono}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}
