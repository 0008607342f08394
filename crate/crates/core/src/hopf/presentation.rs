use super::families::Family;
use super::rewrite::RewriteSystem;
use super::word::{concat, LinComb, Word};
use crate::cyclotomic::CycNum;
use std::collections::BTreeMap;

/// Element of H^{⊗k}: tuples of normal words with coefficients.
pub type Tensor = BTreeMap<Vec<Word>, CycNum>;

fn tensor_add(t: &mut Tensor, key: Vec<Word>, c: CycNum) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&key) {
        Some(cur) => {
            *cur += &c;
            if cur.is_zero() {
                t.remove(&key);
            }
        }
        None => {
            t.insert(key, c);
        }
    }
}

/// A Hopf algebra given by generators, a confluent rewriting system for the
/// relations, and coproduct, counit and antipode on generators.
///
/// Coproduct terms `(c, w1, w2)` and antipode images are stored in normal form.
#[derive(Debug, Clone)]
pub struct HopfPresentation {
    pub family: Family,
    pub generators: Vec<String>,
    pub conductor: u32,
    pub rewriting: RewriteSystem,
    pub coproduct: Vec<Vec<(CycNum, Word, Word)>>,
    pub counit: Vec<CycNum>,
    pub antipode: Vec<LinComb>,
    pub dimension: usize,
}

impl HopfPresentation {
    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<u8> {
        self.generators.iter().position(|g| g == name).map(|i| i as u8)
    }

    pub fn normalize(&self, x: &LinComb) -> LinComb {
        self.rewriting.normalize(x)
    }

    pub fn normalize_word(&self, w: &[u8]) -> LinComb {
        self.rewriting.normalize_word(w)
    }

    pub fn multiply(&self, a: &LinComb, b: &LinComb) -> LinComb {
        let mut out = LinComb::zero(self.conductor);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let c = ca * cb;
                for (w, cw) in self.normalize_word(&concat(wa, wb)).terms() {
                    out.add_term(w.clone(), &c * cw);
                }
            }
        }
        out
    }

    /// Normal-word basis of the algebra.
    pub fn basis(&self) -> Vec<Word> {
        self.rewriting.normal_words(self.dimension)
    }

    fn tensor_mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (ka, ca) in a {
            for (kb, cb) in b {
                let mut partial: Tensor = Tensor::new();
                partial.insert(Vec::new(), ca * cb);
                for (wa, wb) in ka.iter().zip(kb) {
                    let prod = self.normalize_word(&concat(wa, wb));
                    let mut next = Tensor::new();
                    for (key, c) in &partial {
                        for (w, cw) in prod.terms() {
                            let mut k = key.clone();
                            k.push(w.clone());
                            tensor_add(&mut next, k, c * cw);
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    tensor_add(&mut out, k, c);
                }
            }
        }
        out
    }

    /// Δ of a word, as an element of H ⊗ H.
    pub fn coproduct_word(&self, w: &[u8]) -> Tensor {
        let mut acc = Tensor::new();
        acc.insert(vec![Vec::new(), Vec::new()], CycNum::one(self.conductor));
        for &g in w {
            let mut dg = Tensor::new();
            for (c, a, b) in &self.coproduct[g as usize] {
                tensor_add(&mut dg, vec![a.clone(), b.clone()], c.clone());
            }
            acc = self.tensor_mul(&acc, &dg);
        }
        acc
    }

    /// Applies Δ to tensor factor `slot`, raising the arity by one.
    pub fn coproduct_on_slot(&self, t: &Tensor, slot: usize) -> Tensor {
        let mut out = Tensor::new();
        for (key, c) in t {
            for (k2, c2) in self.coproduct_word(&key[slot]) {
                let mut k = key[..slot].to_vec();
                k.extend(k2);
                k.extend_from_slice(&key[slot + 1..]);
                tensor_add(&mut out, k, c * &c2);
            }
        }
        out
    }

    /// Δ^{(d-1)}(g) ∈ H^{⊗d}, expanded on the last factor.
    pub fn iterated_coproduct(&self, g: u8, d: usize) -> Tensor {
        let mut t = Tensor::new();
        t.insert(vec![vec![g]], CycNum::one(self.conductor));
        for k in 1..d {
            t = self.coproduct_on_slot(&t, k - 1);
        }
        t
    }

    pub fn counit_word(&self, w: &[u8]) -> CycNum {
        let mut c = CycNum::one(self.conductor);
        for &g in w {
            c = &c * &self.counit[g as usize];
        }
        c
    }

    pub fn counit_of(&self, x: &LinComb) -> CycNum {
        let mut c = CycNum::zero(self.conductor);
        for (w, a) in x.terms() {
            c += &(a * &self.counit_word(w));
        }
        c
    }

    /// S is an anti-homomorphism, so S(g1…gk) = S(gk)…S(g1).
    pub fn antipode_word(&self, w: &[u8]) -> LinComb {
        let mut acc = LinComb::one(self.conductor);
        for &g in w.iter().rev() {
            acc = self.multiply(&acc, &self.antipode[g as usize]);
        }
        acc
    }

    pub fn coassociativity_holds(&self, g: u8) -> bool {
        let d = self.coproduct_word(&[g]);
        self.coproduct_on_slot(&d, 0) == self.coproduct_on_slot(&d, 1)
    }

    pub fn counit_axiom_holds(&self, g: u8) -> bool {
        let target = self.normalize_word(&[g]);
        let mut left = LinComb::zero(self.conductor);
        let mut right = LinComb::zero(self.conductor);
        for (key, c) in self.coproduct_word(&[g]) {
            left.add_term(key[1].clone(), &c * &self.counit_word(&key[0]));
            right.add_term(key[0].clone(), &c * &self.counit_word(&key[1]));
        }
        left == target && right == target
    }

    pub fn antipode_axiom_holds(&self, g: u8) -> bool {
        let target = LinComb::one(self.conductor).scale(&self.counit[g as usize]);
        let mut left = LinComb::zero(self.conductor);
        let mut right = LinComb::zero(self.conductor);
        for (key, c) in self.coproduct_word(&[g]) {
            let a = self.antipode_word(&key[0]);
            let b = LinComb::word(self.conductor, key[1].clone());
            left = left.add(&self.multiply(&a, &b).scale(&c));
            let a = LinComb::word(self.conductor, key[0].clone());
            let b = self.antipode_word(&key[1]);
            right = right.add(&self.multiply(&a, &b).scale(&c));
        }
        left == target && right == target
    }

    /// Δ and ε respect every relation: the images of both sides of each rule agree.
    pub fn coproduct_respects_relations(&self) -> bool {
        self.rewriting.rules().iter().all(|r| {
            let mut rhs = Tensor::new();
            for (w, c) in r.rhs.terms() {
                for (k, ck) in self.coproduct_word(w) {
                    tensor_add(&mut rhs, k, c * &ck);
                }
            }
            let eps_rhs = self.counit_of(&r.rhs);
            self.coproduct_word(&r.lhs) == rhs && self.counit_word(&r.lhs) == eps_rhs
        })
    }

    /// S respects every relation (as an anti-homomorphism).
    pub fn antipode_respects_relations(&self) -> bool {
        self.rewriting.rules().iter().all(|r| {
            let mut rhs = LinComb::zero(self.conductor);
            for (w, c) in r.rhs.terms() {
                rhs = rhs.add(&self.antipode_word(w).scale(c));
            }
            self.antipode_word(&r.lhs) == rhs
        })
    }
}
