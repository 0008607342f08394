//! Graded components and the induced H-action, degree by degree.
//!
//! Two normal-form engines share one interface. The closed-form engine
//! rewrites words with the tag's Gröbner rules and computes
//! h·(x b) = Σ h₍₁₎(x)·h₍₂₎(b) recursively on normal words. The tensor engine
//! quotients V^{⊗d} by the degree-d part of the ideal with exact elimination
//! and acts on free tensors before reducing. Both order monomials grlex with
//! u < v < t, which for a fixed degree is the numeric order of the base-n
//! digit string.

use super::spec::GradedAlgebraSpec;
use crate::cyclotomic::sparse::{axpy, Echelon, PivotOrder, SparseVec};
use crate::cyclotomic::{CycMatrix, CycNum};
use crate::error::{HopfError, Result};
use crate::hopf::{concat, Word};
use std::collections::HashMap;

/// Degree cap for the tensor engine: V^{⊗d} has (dim V)^d coordinates.
pub const TENSOR_DEGREE_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineKind {
    ClosedForm,
    TensorQuotient,
}

/// Normal-form monomials of one degree together with the coordinate maps.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    pub degree: usize,
    pub monomials: Vec<Word>,
    /// Column k is the normal form of the k-th word of V^{⊗d}.
    pub to_normal: Vec<SparseVec>,
    /// Tensor index of each monomial; a section of `to_normal`.
    pub section: Vec<usize>,
}

impl DegreeBasis {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }
}

/// Caches graded components and action matrices of one algebra.
pub struct GradedEngine {
    spec: GradedAlgebraSpec,
    kind: EngineKind,
    n: usize,
    l: u32,
    bases: Vec<Vec<Word>>,
    index: Vec<HashMap<Word, usize>>,
    /// Degree-d part of the ideal (tensor engine only).
    ideals: Vec<Echelon>,
    /// actions[d][g]: columns of g acting on A_d.
    actions: Vec<Vec<Vec<SparseVec>>>,
    /// normal form of y·b for b in the degree-(d−1) basis, keyed by (y, index of b).
    left: Vec<HashMap<(u8, usize), SparseVec>>,
    /// g acting on a free tensor word.
    free: HashMap<(u8, Word), SparseVec>,
    letter_words: HashMap<Word, CycMatrix>,
}

fn tensor_index(w: &[u8], n: usize) -> usize {
    w.iter().fold(0, |acc, &g| acc * n + g as usize)
}

fn tensor_word(mut idx: usize, d: usize, n: usize) -> Word {
    let mut w = vec![0u8; d];
    for k in (0..d).rev() {
        w[k] = (idx % n) as u8;
        idx /= n;
    }
    w
}

impl GradedEngine {
    pub fn new(spec: &GradedAlgebraSpec, kind: EngineKind) -> Result<GradedEngine> {
        if kind == EngineKind::ClosedForm && !spec.has_closed_form() {
            return Err(HopfError::UnsupportedPresentation(format!(
                "{} has no closed-form basis",
                spec.name
            )));
        }
        let n = spec.ngens();
        let mut e = GradedEngine {
            spec: spec.clone(),
            kind,
            n,
            l: spec.conductor(),
            bases: vec![vec![Vec::new()]],
            index: vec![HashMap::from([(Vec::new(), 0)])],
            ideals: vec![Echelon::new(PivotOrder::Rightmost)],
            actions: Vec::new(),
            left: vec![HashMap::new()],
            free: HashMap::new(),
            letter_words: HashMap::new(),
        };
        let counit = &spec.hopf().counit;
        e.actions.push(
            counit
                .iter()
                .map(|c| vec![SparseVec::from([(0, c.clone())])])
                .collect(),
        );
        Ok(e)
    }

    /// Closed-form engine when the tag allows one, tensor engine otherwise.
    pub fn preferred(spec: &GradedAlgebraSpec) -> Result<GradedEngine> {
        let kind = if spec.has_closed_form() {
            EngineKind::ClosedForm
        } else {
            EngineKind::TensorQuotient
        };
        Self::new(spec, kind)
    }

    pub fn spec(&self) -> &GradedAlgebraSpec {
        &self.spec
    }

    pub fn kind(&self) -> EngineKind {
        self.kind
    }

    fn ensure_basis(&mut self, d: usize) -> Result<()> {
        while self.bases.len() <= d {
            let k = self.bases.len();
            match self.kind {
                EngineKind::ClosedForm => self.extend_closed_basis(k),
                EngineKind::TensorQuotient => self.extend_tensor_basis(k)?,
            }
            self.left.push(HashMap::new());
        }
        Ok(())
    }

    fn extend_closed_basis(&mut self, k: usize) {
        let sys = self.spec.rewriting().expect("closed-form engine has rules");
        let mut next = Vec::new();
        for w in &self.bases[k - 1] {
            for g in 0..self.n as u8 {
                let mut nw = w.clone();
                nw.push(g);
                // subwords of normal words are normal, so only suffixes can match
                if sys.rules().iter().all(|r| !nw.ends_with(&r.lhs)) {
                    next.push(nw);
                }
            }
        }
        self.index.push(next.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect());
        self.bases.push(next);
    }

    fn extend_tensor_basis(&mut self, k: usize) -> Result<()> {
        if k > TENSOR_DEGREE_CAP {
            return Err(HopfError::ParameterOutOfRange(format!(
                "tensor engine is capped at degree {TENSOR_DEGREE_CAP}"
            )));
        }
        let n = self.n;
        let mut ech = Echelon::new(PivotOrder::Rightmost);
        if k >= 2 {
            // I_k = I_{k−1} ⊗ V + V^{⊗(k−2)} ⊗ R
            for row in self.ideals[k - 1].rows() {
                for a in 0..n {
                    ech.insert(row.iter().map(|(i, c)| (i * n + a, c.clone())).collect());
                }
            }
            let shift = n * n;
            for p in 0..n.pow(k as u32 - 2) {
                for r in &self.spec.relations {
                    ech.insert(r.iter().map(|(i, c)| (p * shift + i, c.clone())).collect());
                }
            }
        }
        let basis: Vec<Word> = (0..n.pow(k as u32))
            .filter(|i| !ech.is_pivot(*i))
            .map(|i| tensor_word(i, k, n))
            .collect();
        self.index.push(basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect());
        self.bases.push(basis);
        self.ideals.push(ech);
        Ok(())
    }

    pub fn dim(&mut self, d: usize) -> Result<usize> {
        self.ensure_basis(d)?;
        Ok(self.bases[d].len())
    }

    pub fn basis(&mut self, d: usize) -> Result<&[Word]> {
        self.ensure_basis(d)?;
        Ok(&self.bases[d])
    }

    /// Coordinates of an arbitrary word in the normal-form basis of its degree.
    pub fn normal_form(&mut self, w: &[u8]) -> Result<SparseVec> {
        let d = w.len();
        self.ensure_basis(d)?;
        let mut out = SparseVec::new();
        match self.kind {
            EngineKind::ClosedForm => {
                let sys = self.spec.rewriting().expect("closed-form engine has rules");
                for (nw, c) in sys.try_normalize_word(w)?.terms() {
                    out.insert(self.index[d][nw], c.clone());
                }
            }
            EngineKind::TensorQuotient => {
                let e = SparseVec::from([(tensor_index(w, self.n), CycNum::one(self.l))]);
                for (i, c) in self.ideals[d].reduce(e) {
                    out.insert(self.index[d][&tensor_word(i, d, self.n)], c);
                }
            }
        }
        Ok(out)
    }

    /// Normal form of a free tensor given in V^{⊗d} coordinates.
    fn reduce_tensor(&mut self, v: &SparseVec, d: usize) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (i, c) in v {
            let nf = self.normal_form(&tensor_word(*i, d, self.n))?;
            axpy(&mut out, c, &nf);
        }
        Ok(out)
    }

    pub fn degree_basis(&mut self, d: usize) -> Result<DegreeBasis> {
        if d > TENSOR_DEGREE_CAP {
            return Err(HopfError::ParameterOutOfRange(format!(
                "coordinate maps are capped at degree {TENSOR_DEGREE_CAP}"
            )));
        }
        self.ensure_basis(d)?;
        let to_normal = (0..self.n.pow(d as u32))
            .map(|i| self.normal_form(&tensor_word(i, d, self.n)))
            .collect::<Result<_>>()?;
        let monomials = self.bases[d].clone();
        let section = monomials.iter().map(|w| tensor_index(w, self.n)).collect();
        Ok(DegreeBasis { degree: d, monomials, to_normal, section })
    }

    fn degree_one_word(&mut self, w: &[u8]) -> CycMatrix {
        if let Some(m) = self.letter_words.get(w) {
            return m.clone();
        }
        let m = self.spec.degree_one.word(w);
        self.letter_words.insert(w.to_vec(), m.clone());
        m
    }

    fn ensure_actions(&mut self, d: usize) -> Result<()> {
        self.ensure_basis(d)?;
        while self.actions.len() <= d {
            let k = self.actions.len();
            let ng = self.spec.hopf().ngens();
            let mut per_gen = Vec::with_capacity(ng);
            for g in 0..ng as u8 {
                let cols = match (k, self.kind) {
                    (1, _) => {
                        let m = &self.spec.degree_one.matrices[g as usize];
                        (0..self.n)
                            .map(|c| crate::cyclotomic::sparse::from_dense(&m.column(c)))
                            .collect()
                    }
                    (_, EngineKind::ClosedForm) => self.closed_columns(g, k)?,
                    (_, EngineKind::TensorQuotient) => self.tensor_columns(g, k)?,
                };
                per_gen.push(cols);
            }
            self.actions.push(per_gen);
        }
        Ok(())
    }

    /// g·(x b′) = Σ c·(w₁·x)(w₂·b′) over the coproduct terms (c, w₁, w₂).
    fn closed_columns(&mut self, g: u8, d: usize) -> Result<Vec<SparseVec>> {
        let terms = self.spec.hopf().coproduct[g as usize].clone();
        let basis = self.bases[d].clone();
        let mut cols = Vec::with_capacity(basis.len());
        for b in &basis {
            let x = b[0] as usize;
            let rest = SparseVec::from([(self.index[d - 1][&b[1..]], CycNum::one(self.l))]);
            let mut col = SparseVec::new();
            for (c, w1, w2) in &terms {
                let m1 = self.degree_one_word(w1);
                let moved = self.apply_word(w2, d - 1, &rest)?;
                if moved.is_empty() {
                    continue;
                }
                for y in 0..self.n {
                    let a = m1.get(y, x);
                    if a.is_zero() {
                        continue;
                    }
                    let prod = self.left_multiply(y as u8, &moved, d - 1)?;
                    axpy(&mut col, &(c * a), &prod);
                }
            }
            cols.push(col);
        }
        Ok(cols)
    }

    /// y·v for v in A_{d}, landing in A_{d+1}.
    fn left_multiply(&mut self, y: u8, v: &SparseVec, d: usize) -> Result<SparseVec> {
        self.ensure_basis(d + 1)?;
        let mut out = SparseVec::new();
        for (b, c) in v {
            let hit = self.left[d + 1].get(&(y, *b)).cloned();
            let prod = match hit {
                Some(p) => p,
                None => {
                    let w = concat(&[y], &self.bases[d][*b]);
                    let p = self.normal_form(&w)?;
                    self.left[d + 1].insert((y, *b), p.clone());
                    p
                }
            };
            axpy(&mut out, c, &prod);
        }
        Ok(out)
    }

    /// Acts on the tensor representative of each basis word, then reduces.
    fn tensor_columns(&mut self, g: u8, d: usize) -> Result<Vec<SparseVec>> {
        let basis = self.bases[d].clone();
        let mut cols = Vec::with_capacity(basis.len());
        for b in &basis {
            let free = self.free_action(g, b);
            cols.push(self.reduce_tensor(&free, d)?);
        }
        Ok(cols)
    }

    /// g acting on the free tensor w ∈ V^{⊗|w|}, without reduction.
    fn free_action(&mut self, g: u8, w: &[u8]) -> SparseVec {
        if let Some(v) = self.free.get(&(g, w.to_vec())) {
            return v.clone();
        }
        let n = self.n;
        let hopf = self.spec.hopf().clone();
        let out = if w.is_empty() {
            SparseVec::from([(0, hopf.counit[g as usize].clone())])
        } else {
            let x = w[0] as usize;
            let tail_len = w.len() - 1;
            let shift = n.pow(tail_len as u32);
            let mut out = SparseVec::new();
            for (c, w1, w2) in &hopf.coproduct[g as usize] {
                let m1 = self.degree_one_word(w1);
                let tail = self.free_word_action(w2, &w[1..]);
                for y in 0..n {
                    let a = m1.get(y, x);
                    if a.is_zero() {
                        continue;
                    }
                    let ca = c * a;
                    let shifted: SparseVec = tail.iter().map(|(i, v)| (y * shift + i, v.clone())).collect();
                    axpy(&mut out, &ca, &shifted);
                }
            }
            out
        };
        self.free.insert((g, w.to_vec()), out.clone());
        out
    }

    fn free_word_action(&mut self, h: &[u8], w: &[u8]) -> SparseVec {
        let d = w.len();
        let mut v = SparseVec::from([(tensor_index(w, self.n), CycNum::one(self.l))]);
        for &g in h.iter().rev() {
            let mut next = SparseVec::new();
            for (i, c) in &v {
                let img = self.free_action(g, &tensor_word(*i, d, self.n));
                axpy(&mut next, c, &img);
            }
            v = next;
        }
        v
    }

    /// Columns of generator g acting on A_d.
    pub fn action_columns(&mut self, g: u8, d: usize) -> Result<&[SparseVec]> {
        self.ensure_actions(d)?;
        Ok(&self.actions[d][g as usize])
    }

    pub fn action_matrix(&mut self, g: u8, d: usize) -> Result<CycMatrix> {
        let dim = self.dim(d)?;
        let l = self.l;
        let cols = self.action_columns(g, d)?;
        let mut m = CycMatrix::zeros(dim, dim, l);
        for (c, col) in cols.iter().enumerate() {
            for (r, x) in col {
                m.set(*r, c, x.clone());
            }
        }
        Ok(m)
    }

    /// The word h = g₁…g_k acting on v ∈ A_d (g_k applied first).
    pub fn apply_word(&mut self, h: &[u8], d: usize, v: &SparseVec) -> Result<SparseVec> {
        self.ensure_actions(d)?;
        let mut cur = v.clone();
        for &g in h.iter().rev() {
            let cols = &self.actions[d][g as usize];
            let mut next = SparseVec::new();
            for (b, c) in &cur {
                axpy(&mut next, c, &cols[*b]);
            }
            cur = next;
        }
        Ok(cur)
    }

    /// Product of a ∈ A_{da} and b ∈ A_{db}.
    pub fn multiply(&mut self, a: &SparseVec, da: usize, b: &SparseVec, db: usize) -> Result<SparseVec> {
        self.ensure_basis(da.max(db))?;
        let mut out = SparseVec::new();
        for (i, x) in a {
            for (j, y) in b {
                let w = concat(&self.bases[da][*i], &self.bases[db][*j]);
                let nf = self.normal_form(&w)?;
                axpy(&mut out, &(x * y), &nf);
            }
        }
        Ok(out)
    }

    pub fn conductor(&self) -> u32 {
        self.l
    }
}

/// Normal-form basis and coordinate maps of A_d, by the preferred engine.
pub fn degree_basis(spec: &GradedAlgebraSpec, d: usize) -> Result<DegreeBasis> {
    GradedEngine::preferred(spec)?.degree_basis(d)
}

/// Matrix of generator g on A_d, by the preferred engine.
pub fn graded_action(spec: &GradedAlgebraSpec, g: u8, d: usize) -> Result<CycMatrix> {
    GradedEngine::preferred(spec)?.action_matrix(g, d)
}
