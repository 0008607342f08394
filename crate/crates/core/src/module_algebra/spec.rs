use crate::cyclotomic::sparse::SparseVec;
use crate::cyclotomic::{CycMatrix, CycNum};
use crate::error::{HopfError, Result};
use crate::fusion::{closure_is_complete, inner_faithful_criterion};
use crate::hopf::{HopfPresentation, LinComb, RewriteSystem, Rule};
use crate::rep::{RepLabel, Representation};
use serde::Serialize;
use serde_json::{json, Value};
use std::sync::Arc;

/// Letters of the degree-one space: u, v, and t when an Ore layer is present.
pub const U: u8 = 0;
pub const V: u8 = 1;
pub const T: u8 = 2;

/// Integer parameters of a named action.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ActionParams {
    pub i: u32,
    pub j: u32,
    pub eps: i8,
}

/// Closed-form normal-form engine available for the relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisTag {
    /// One relation vu = c·uv; basis u^a v^b.
    Skew2Gen { c: CycNum },
    /// One relation u² = c·v²; basis u^i (vu)^j v^ℓ with ℓ ≤ 1.
    U2cV2 { c: CycNum },
    /// Base algebra's rules plus t·x = σ(x)·t; basis (base monomial)·t^k.
    OreOverBase,
    /// No closed form; only the tensor-quotient engine applies.
    Generic,
}

impl BasisTag {
    pub fn name(&self) -> &'static str {
        match self {
            BasisTag::Skew2Gen { .. } => "skew-2gen",
            BasisTag::U2cV2 { .. } => "u2cv2",
            BasisTag::OreOverBase => "ore-over-base",
            BasisTag::Generic => "generic",
        }
    }
}

/// t acting by a one-dimensional module, commuting past the base as σ.
#[derive(Clone, Debug)]
pub struct OreLayer {
    /// σ on span{u, v}, columns are images: σ(u) = column 0.
    pub sigma: CycMatrix,
    pub t_label: RepLabel,
    pub base: Box<GradedAlgebraSpec>,
}

/// A quadratic algebra T(W)/(R) with W an H-module and R an H-submodule of W⊗W.
///
/// Invariants checked at construction: R is H-stable; the closed-form rules
/// (when the tag has them) are confluent and cut out exactly R in degree 2.
#[derive(Clone, Debug)]
pub struct GradedAlgebraSpec {
    pub name: String,
    pub params: ActionParams,
    pub degree_one: Representation,
    /// Raw labels of the summands of W, in basis order.
    pub labels: Vec<RepLabel>,
    /// Spanning vectors of R; coordinate a·dim W + b is the word [a, b].
    pub relations: Vec<SparseVec>,
    pub tag: BasisTag,
    pub ore: Option<OreLayer>,
    /// Every simple module occurs in some tensor power of W.
    pub inner_faithful: bool,
    /// The arithmetic criterion's verdict, when the module has a covered shape.
    pub criterion_verdict: Option<bool>,
    /// The two-dimensional part of W is reducible; the theorems do not apply.
    pub reducible_degree_one: bool,
    pub(crate) rewriting: Option<Arc<RewriteSystem>>,
}

impl GradedAlgebraSpec {
    pub fn new(
        name: impl Into<String>,
        params: ActionParams,
        degree_one: Representation,
        labels: Vec<RepLabel>,
        relations: Vec<SparseVec>,
        tag: BasisTag,
        ore: Option<OreLayer>,
    ) -> Result<GradedAlgebraSpec> {
        let n = degree_one.dim();
        if n > 3 || labels.iter().map(|l| l.dim()).sum::<usize>() != n {
            return Err(HopfError::PresentationMismatch);
        }
        if let BasisTag::U2cV2 { c } = &tag {
            if c.is_zero() {
                return Err(HopfError::ParameterOutOfRange("u² − c·v² needs c ≠ 0".into()));
            }
        }
        let family = degree_one.hopf.family;
        let mut reducible = false;
        let mut expanded = Vec::new();
        for l in &labels {
            if l.dim() == 2 && l.is_reducible(family)? {
                reducible = true;
            }
            expanded.extend(l.expand(family)?);
        }
        let table = crate::fusion::cached_fusion_table(family)?;
        let inner_faithful = closure_is_complete(&expanded, &table)?;
        let canonical: Vec<RepLabel> =
            labels.iter().map(|l| l.canonical(family)).collect::<Result<_>>()?;
        let criterion_verdict = inner_faithful_criterion(family, &canonical).ok();
        let mut spec = GradedAlgebraSpec {
            name: name.into(),
            params,
            degree_one,
            labels,
            relations,
            tag,
            ore,
            inner_faithful,
            criterion_verdict,
            reducible_degree_one: reducible,
            rewriting: None,
        };
        spec.check_relations_stable()?;
        if let Some(rules) = spec.closed_form_rules() {
            let l = spec.conductor();
            let sys = RewriteSystem::new(n, l, rules)?;
            spec.check_rules_match_relations(&sys)?;
            spec.rewriting = Some(Arc::new(sys));
        }
        Ok(spec)
    }

    pub fn hopf(&self) -> &Arc<HopfPresentation> {
        &self.degree_one.hopf
    }

    pub fn conductor(&self) -> u32 {
        self.degree_one.conductor()
    }

    pub fn ngens(&self) -> usize {
        self.degree_one.dim()
    }

    pub fn has_closed_form(&self) -> bool {
        self.rewriting.is_some()
    }

    pub fn rewriting(&self) -> Option<&RewriteSystem> {
        self.rewriting.as_deref()
    }

    /// g·R ⊆ R for every generator g, by rank.
    fn check_relations_stable(&self) -> Result<()> {
        let sq = self.degree_one.tensor(&self.degree_one)?;
        let n2 = sq.dim();
        let l = self.conductor();
        let dense: Vec<Vec<CycNum>> = self
            .relations
            .iter()
            .map(|r| crate::cyclotomic::sparse::to_dense(r, n2, l))
            .collect();
        if dense.is_empty() {
            return Ok(());
        }
        let span = CycMatrix::from_rows(dense.clone(), l);
        let rank = span.rank();
        for (gi, g) in sq.matrices.iter().enumerate() {
            let moved: Vec<Vec<CycNum>> = dense.iter().map(|r| g.apply(r)).collect();
            if span.vstack(&CycMatrix::from_rows(moved, l)).rank() != rank {
                return Err(HopfError::RelationNotStable(format!(
                    "{}: generator {} moves the relations out of their span",
                    self.name,
                    self.hopf().generators[gi]
                )));
            }
        }
        Ok(())
    }

    /// Rewriting rules for the closed-form tags, in the grlex order u < v < t.
    fn closed_form_rules(&self) -> Option<Vec<Rule>> {
        let l = self.conductor();
        match &self.tag {
            BasisTag::Skew2Gen { c } => Some(vec![Rule {
                lhs: vec![V, U],
                rhs: LinComb::from_terms(l, [(c.clone(), vec![U, V])]),
            }]),
            BasisTag::U2cV2 { c } => Some(vec![
                Rule {
                    lhs: vec![V, V],
                    rhs: LinComb::from_terms(l, [(c.inv()?, vec![U, U])]),
                },
                // v·u² = c⁻¹·v·v² ... = u²·v, since u² is a multiple of v²
                Rule {
                    lhs: vec![V, U, U],
                    rhs: LinComb::word(l, vec![U, U, V]),
                },
            ]),
            BasisTag::OreOverBase => {
                let ore = self.ore.as_ref()?;
                let mut rules: Vec<Rule> = ore.base.rewriting()?.rules().to_vec();
                for x in [U, V] {
                    let mut rhs = LinComb::zero(l);
                    for r in [U, V] {
                        rhs.add_term(vec![r, T], ore.sigma.get(r as usize, x as usize).lift(l));
                    }
                    rules.push(Rule { lhs: vec![T, x], rhs });
                }
                Some(rules)
            }
            BasisTag::Generic => None,
        }
    }

    /// The rules kill every relation and leave n² − dim R normal words of length 2.
    fn check_rules_match_relations(&self, sys: &RewriteSystem) -> Result<()> {
        let n = self.ngens();
        let l = self.conductor();
        for r in &self.relations {
            let mut x = LinComb::zero(l);
            for (k, c) in r {
                x.add_term(vec![(k / n) as u8, (k % n) as u8], c.clone());
            }
            if !sys.normalize(&x).is_zero() {
                return Err(HopfError::PresentationMismatch);
            }
        }
        let rank = {
            let dense: Vec<Vec<CycNum>> = self
                .relations
                .iter()
                .map(|r| crate::cyclotomic::sparse::to_dense(r, n * n, l))
                .collect();
            if dense.is_empty() {
                0
            } else {
                CycMatrix::from_rows(dense, l).rank()
            }
        };
        let normal2 = sys.normal_words(2).iter().filter(|w| w.len() == 2).count();
        if normal2 != n * n - rank {
            return Err(HopfError::PresentationMismatch);
        }
        Ok(())
    }

    pub fn generator_names(&self) -> Vec<&'static str> {
        ["u", "v", "t"][..self.ngens()].to_vec()
    }

    pub fn to_json(&self) -> Value {
        let family = self.hopf().family;
        let n = self.ngens();
        let names = self.generator_names();
        let relations: Vec<Value> = self
            .relations
            .iter()
            .map(|r| {
                Value::Array(
                    r.iter()
                        .map(|(k, c)| {
                            json!({
                                "word": format!("{}{}", names[k / n], names[k % n]),
                                "coefficient": cyc_json(c),
                            })
                        })
                        .collect(),
                )
            })
            .collect();
        let (sigma, t_label) = match &self.ore {
            Some(o) => (
                Value::Array(
                    (0..2)
                        .map(|r| Value::Array((0..2).map(|c| cyc_json(o.sigma.get(r, c))).collect()))
                        .collect(),
                ),
                Value::String(o.t_label.name(family)),
            ),
            None => (Value::Null, Value::Null),
        };
        json!({
            "schema": crate::SCHEMA,
            "algebra": self.name,
            "family": family.to_string(),
            "parameters": self.params,
            "generators": names,
            "degree_one": self.labels.iter().map(|l| l.name(family)).collect::<Vec<_>>(),
            "relations": relations,
            "sigma": sigma,
            "t_label": t_label,
            "basis_tag": self.tag.name(),
            "inner_faithful": self.inner_faithful,
            "reducible_degree_one": self.reducible_degree_one,
        })
    }
}

/// A cyclotomic number as its conductor and rational power-basis coefficients.
pub fn cyc_json(c: &CycNum) -> Value {
    json!({
        "conductor": c.conductor(),
        "coefficients": c.coefficients().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
    })
}

/// e_{[a,b]} in W⊗W coordinates.
pub(crate) fn pair(n: usize, a: u8, b: u8) -> usize {
    a as usize * n + b as usize
}

pub(crate) fn relation(n: usize, terms: &[(CycNum, u8, u8)]) -> SparseVec {
    let mut v = SparseVec::new();
    for (c, a, b) in terms {
        crate::cyclotomic::sparse::axpy(&mut v, c, &SparseVec::from([(pair(n, *a, *b), CycNum::one(c.conductor()))]));
    }
    v
}
