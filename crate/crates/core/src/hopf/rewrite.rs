use super::word::{concat, LinComb, Word};
use crate::cyclotomic::CycNum;
use crate::error::{HopfError, Result};
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

const STEP_LIMIT: usize = 2_000_000;

/// `lhs → rhs`.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: LinComb,
}

/// A finite string-rewriting system with linear right-hand sides.
///
/// Construction checks every critical pair, so a built system is locally
/// confluent; termination is enforced by a step limit.
#[derive(Debug)]
pub struct RewriteSystem {
    conductor: u32,
    ngens: usize,
    rules: Vec<Rule>,
    cache: RwLock<HashMap<Word, LinComb>>,
}

impl Clone for RewriteSystem {
    fn clone(&self) -> Self {
        RewriteSystem {
            conductor: self.conductor,
            ngens: self.ngens,
            rules: self.rules.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl RewriteSystem {
    pub fn new(ngens: usize, conductor: u32, rules: Vec<Rule>) -> Result<RewriteSystem> {
        let sys = RewriteSystem {
            conductor,
            ngens,
            rules,
            cache: RwLock::new(HashMap::new()),
        };
        sys.check_local_confluence()?;
        Ok(sys)
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    fn first_match(&self, w: &[u8]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for (ri, r) in self.rules.iter().enumerate() {
                if w[pos..].starts_with(&r.lhs) {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.first_match(w).is_none()
    }

    /// Normal form of a single word.
    pub fn try_normalize_word(&self, w: &[u8]) -> Result<LinComb> {
        if let Some(hit) = self.cache.read().unwrap().get(w) {
            return Ok(hit.clone());
        }
        let mut pending: BTreeMap<Word, CycNum> = BTreeMap::new();
        pending.insert(w.to_vec(), CycNum::one(self.conductor));
        let mut out = LinComb::zero(self.conductor);
        let mut steps = 0;
        while let Some((word, c)) = pending.pop_first() {
            steps += 1;
            if steps > STEP_LIMIT {
                return Err(HopfError::NonTerminating(STEP_LIMIT));
            }
            if c.is_zero() {
                continue;
            }
            match self.first_match(&word) {
                None => out.add_term(word, c),
                Some((pos, ri)) => {
                    let r = &self.rules[ri];
                    let prefix = &word[..pos];
                    let suffix = &word[pos + r.lhs.len()..];
                    for (rw, rc) in r.rhs.terms() {
                        let nw = concat(&concat(prefix, rw), suffix);
                        let nc = &c * rc;
                        let e = pending
                            .entry(nw)
                            .or_insert_with(|| CycNum::zero(self.conductor));
                        *e += &nc;
                    }
                }
            }
        }
        let mut cache = self.cache.write().unwrap();
        if cache.len() < 200_000 {
            cache.insert(w.to_vec(), out.clone());
        }
        Ok(out)
    }

    pub fn normalize_word(&self, w: &[u8]) -> LinComb {
        self.try_normalize_word(w)
            .expect("rewriting system verified at construction")
    }

    pub fn try_normalize(&self, x: &LinComb) -> Result<LinComb> {
        let mut out = LinComb::zero(self.conductor);
        for (w, c) in x.terms() {
            let n = self.try_normalize_word(w)?;
            for (nw, nc) in n.terms() {
                out.add_term(nw.clone(), c * nc);
            }
        }
        Ok(out)
    }

    pub fn normalize(&self, x: &LinComb) -> LinComb {
        self.try_normalize(x)
            .expect("rewriting system verified at construction")
    }

    /// Joins every overlap and inclusion ambiguity between rule left sides.
    pub fn check_local_confluence(&self) -> Result<()> {
        let one = CycNum::one(self.conductor);
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                // overlaps: a proper suffix of lhs1 equals a proper prefix of lhs2
                for k in 1..r1.lhs.len().min(r2.lhs.len()) {
                    if r1.lhs[r1.lhs.len() - k..] != r2.lhs[..k] {
                        continue;
                    }
                    let tail = &r2.lhs[k..];
                    let head = &r1.lhs[..r1.lhs.len() - k];
                    let left = expand(&r1.rhs, &[], tail, &one);
                    let right = expand(&r2.rhs, head, &[], &one);
                    self.join(&left, &right, || {
                        format!("overlap of rules {i} and {j} on {:?}", concat(&r1.lhs, tail))
                    })?;
                }
                // inclusions: lhs2 occurs inside lhs1
                if i != j && r2.lhs.len() <= r1.lhs.len() {
                    for pos in 0..=r1.lhs.len() - r2.lhs.len() {
                        if r1.lhs[pos..pos + r2.lhs.len()] != r2.lhs[..] {
                            continue;
                        }
                        let left = r1.rhs.clone();
                        let right = expand(
                            &r2.rhs,
                            &r1.lhs[..pos],
                            &r1.lhs[pos + r2.lhs.len()..],
                            &one,
                        );
                        self.join(&left, &right, || {
                            format!("rule {j} inside rule {i} on {:?}", r1.lhs)
                        })?;
                    }
                }
            }
        }
        Ok(())
    }

    fn join(&self, a: &LinComb, b: &LinComb, what: impl Fn() -> String) -> Result<()> {
        let na = self.try_normalize(a)?;
        let nb = self.try_normalize(b)?;
        if na == nb {
            Ok(())
        } else {
            Err(HopfError::NotConfluent(format!(
                "{}: {na:?} vs {nb:?}",
                what()
            )))
        }
    }

    /// All irreducible words of length ≤ `max_len`, in length-then-lex order.
    pub fn normal_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        let mut frontier: Vec<Word> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for g in 0..self.ngens as u8 {
                    let mut nw = w.clone();
                    nw.push(g);
                    // only suffixes can create a new match
                    if self.rules.iter().all(|r| !nw.ends_with(&r.lhs)) {
                        next.push(nw);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

fn expand(x: &LinComb, prefix: &[u8], suffix: &[u8], c: &CycNum) -> LinComb {
    let mut out = LinComb::zero(x.conductor());
    for (w, a) in x.terms() {
        out.add_term(concat(&concat(prefix, w), suffix), a * c);
    }
    out
}
