use crate::cyclotomic::CycNum;
use std::collections::BTreeMap;
use std::fmt;

/// A word in the generators; the empty word is the identity.
pub type Word = Vec<u8>;

/// `g` repeated `k` times.
pub fn power(g: u8, k: usize) -> Word {
    vec![g; k]
}

pub fn concat(a: &[u8], b: &[u8]) -> Word {
    let mut w = Vec::with_capacity(a.len() + b.len());
    w.extend_from_slice(a);
    w.extend_from_slice(b);
    w
}

/// Finite linear combination of words with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb {
    conductor: u32,
    terms: BTreeMap<Word, CycNum>,
}

impl LinComb {
    pub fn zero(conductor: u32) -> LinComb {
        LinComb {
            conductor,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(conductor: u32) -> LinComb {
        Self::word(conductor, Vec::new())
    }

    pub fn word(conductor: u32, w: Word) -> LinComb {
        let mut l = Self::zero(conductor);
        l.add_term(w, CycNum::one(conductor));
        l
    }

    pub fn from_terms(conductor: u32, terms: impl IntoIterator<Item = (CycNum, Word)>) -> LinComb {
        let mut l = Self::zero(conductor);
        for (c, w) in terms {
            l.add_term(w, c);
        }
        l
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn add_term(&mut self, w: Word, c: CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(cur) => {
                *cur += &c;
                if cur.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LinComb) -> LinComb {
        self.add(&other.scale(&CycNum::from_int(self.conductor, -1)))
    }

    pub fn scale(&self, c: &CycNum) -> LinComb {
        let mut out = Self::zero(self.conductor);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &CycNum)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &[u8]) -> CycNum {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| CycNum::zero(self.conductor))
    }
}

impl fmt::Debug for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})·{w:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
