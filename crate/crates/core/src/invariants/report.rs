use super::fixed::{fixed_in, hom_dimension};
use crate::cyclotomic::sparse::{axpy, Echelon, PivotOrder, SparseVec};
use crate::cyclotomic::CycNum;
use crate::error::{HopfError, Result};
use crate::hopf::{LinComb, Word};
use crate::module_algebra::{cyc_json, GradedAlgebraSpec, GradedEngine};
use crate::rep::irreducible_catalog;
use serde_json::{json, Value};

/// Evidence level for AS-regularity of the invariant ring; never a proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Hilbert prefix equals Π 1/(1 − t^{d_i}) through the bound.
    RegularConsistent,
    /// More minimal generators than the GK dimension allows a regular algebra.
    CertifiedNotRegular { generators: usize },
    /// Few enough generators, but the Hilbert prefix is not that of a free algebra on them.
    NotFree,
    Inconclusive,
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::RegularConsistent => "regular-consistent",
            Certificate::CertifiedNotRegular { .. } => "certified-not-regular",
            Certificate::NotFree => "not-free",
            Certificate::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct InvariantGenerator {
    pub degree: usize,
    /// Coordinates in the normal-form basis of A_degree.
    pub coefficients: SparseVec,
    pub display: String,
}

#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub algebra: String,
    pub bound: usize,
    /// dim (A^H)_d for d = 0..=bound.
    pub hilbert_prefix: Vec<usize>,
    pub generators: Vec<InvariantGenerator>,
    pub certificate: Certificate,
    pub dim_h: usize,
    /// Set by [`faithfulness_check`] when requested.
    pub faithful: Option<bool>,
    pub(crate) spec_json: Value,
}

impl InvariantReport {
    pub fn degrees(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    pub fn product_of_degrees(&self) -> usize {
        self.generators.iter().map(|g| g.degree).product()
    }

    /// Product of degrees = dim H, asked only of regular-consistent rings.
    pub fn conjecture_product_holds(&self) -> Option<bool> {
        (self.certificate == Certificate::RegularConsistent).then(|| self.product_of_degrees() == self.dim_h)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": crate::SCHEMA,
            "algebra": self.algebra,
            "parameters": self.spec_json.get("parameters").cloned().unwrap_or(Value::Null),
            "family": self.spec_json.get("family").cloned().unwrap_or(Value::Null),
            "bound": self.bound,
            "degrees": self.degrees(),
            "generators": self.generators.iter().map(|g| json!({
                "degree": g.degree,
                "display": g.display,
                "coefficients": g.coefficients.iter().map(|(k, c)| json!({
                    "index": k,
                    "value": cyc_json(c),
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "hilbert_prefix": self.hilbert_prefix,
            "certificate": self.certificate.name(),
            "product_of_degrees": self.product_of_degrees(),
            "dim_H": self.dim_h,
            "conjecture_product_holds": self.conjecture_product_holds(),
            "faithful": self.faithful,
        })
    }
}

/// 2·dim H + 2, unless HOPF_MAX_DEGREE is set to a positive integer.
pub fn default_degree_bound(dim_h: usize) -> usize {
    std::env::var("HOPF_MAX_DEGREE")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|d| *d > 0)
        .unwrap_or(2 * dim_h + 2)
}

/// Coefficients of Π 1/(1 − t^{d_i}) through degree `bound`.
pub fn free_hilbert_prefix(degrees: &[usize], bound: usize) -> Vec<usize> {
    let mut series = vec![0usize; bound + 1];
    series[0] = 1;
    for &d in degrees {
        if d == 0 {
            continue;
        }
        for k in d..=bound {
            series[k] += series[k - d];
        }
    }
    series
}

/// dim A_d for d = 0..=bound.
pub fn algebra_hilbert_prefix(spec: &GradedAlgebraSpec, bound: usize) -> Result<Vec<usize>> {
    let mut e = GradedEngine::preferred(spec)?;
    (0..=bound).map(|d| e.dim(d)).collect()
}

/// dim (A^H)_d for d = 0..=bound.
pub fn invariant_hilbert_prefix(spec: &GradedAlgebraSpec, bound: usize) -> Result<Vec<usize>> {
    let mut e = GradedEngine::preferred(spec)?;
    (0..=bound).map(|d| Ok(fixed_in(&mut e, d)?.len())).collect()
}

/// Readable form of an element of A_d, e.g. "u^2 + (-1)·v^2".
pub fn display_element(engine: &mut GradedEngine, d: usize, v: &SparseVec) -> Result<String> {
    let names = engine.spec().generator_names();
    let basis = engine.basis(d)?.to_vec();
    let mut parts = Vec::new();
    for (k, c) in v {
        let mono = display_word(&basis[*k], &names);
        parts.push(if c.is_one() { mono } else { format!("({c})·{mono}") });
    }
    Ok(if parts.is_empty() { "0".into() } else { parts.join(" + ") })
}

fn display_word(w: &[u8], names: &[&str]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let mut k = 0;
    while k < w.len() {
        let mut run = 1;
        while k + run < w.len() && w[k + run] == w[k] {
            run += 1;
        }
        out.push_str(names[w[k] as usize]);
        if run > 1 {
            out.push_str(&format!("^{run}"));
        }
        k += run;
    }
    out
}

/// Degree-by-degree span of products of the given homogeneous elements.
struct Filtration {
    /// echelon of S_d per degree
    levels: Vec<Echelon>,
}

impl Filtration {
    fn new(l: u32) -> Filtration {
        let mut one = Echelon::new(PivotOrder::Leftmost);
        one.insert(SparseVec::from([(0, CycNum::one(l))]));
        Filtration { levels: vec![one] }
    }

    /// S_d = Σ_g g·S_{d − deg g}, built from the lower levels already present.
    fn products_at(
        &self,
        engine: &mut GradedEngine,
        gens: &[(usize, SparseVec)],
        d: usize,
    ) -> Result<Echelon> {
        let mut ech = Echelon::new(PivotOrder::Leftmost);
        for (e, g) in gens {
            if *e > d || *e == 0 {
                continue;
            }
            let lower: Vec<SparseVec> = self.levels[d - e].rows().to_vec();
            for s in &lower {
                ech.insert(engine.multiply(g, *e, s, d - e)?);
            }
        }
        Ok(ech)
    }
}

/// Minimal homogeneous generators of A^H through degree `bound`.
///
/// At each degree the new generators complete the span of products of
/// lower-degree generators inside the fixed space; candidates are taken in
/// the order of the fixed-space basis and reduced against that span.
pub fn minimal_generators(spec: &GradedAlgebraSpec, bound: usize) -> Result<InvariantReport> {
    if bound < 2 {
        return Err(HopfError::ParameterOutOfRange(format!("degree bound {bound} < 2")));
    }
    let mut engine = GradedEngine::preferred(spec)?;
    let l = engine.conductor();
    let mut filt = Filtration::new(l);
    let mut gens: Vec<(usize, SparseVec)> = Vec::new();
    let mut prefix = vec![1usize];
    for d in 1..=bound {
        let fixed = fixed_in(&mut engine, d)?;
        prefix.push(fixed.len());
        let mut span = filt.products_at(&mut engine, &gens, d)?;
        for f in fixed {
            let r = span.reduce(f);
            if r.is_empty() {
                continue;
            }
            let lead = r.keys().next().copied().unwrap();
            let inv = r[&lead].inv().unwrap();
            let g = crate::cyclotomic::sparse::scale(&r, &inv);
            span.insert(g.clone());
            gens.push((d, g));
        }
        if span.rank() != prefix[d] {
            return Err(HopfError::InconsistentSystem);
        }
        filt.levels.push(span);
    }
    let max_deg = gens.iter().map(|(d, _)| *d).max().unwrap_or(0);
    if let Some((late, _)) = gens.iter().find(|(d, _)| *d + max_deg > bound) {
        return Err(HopfError::DegreeBoundTooSmall(format!(
            "{}: generator in degree {late} with bound {bound}",
            spec.name
        )));
    }
    let degrees: Vec<usize> = gens.iter().map(|(d, _)| *d).collect();
    let gk = spec.ngens();
    let certificate = if gens.is_empty() {
        Certificate::Inconclusive
    } else if gens.len() > gk {
        Certificate::CertifiedNotRegular { generators: gens.len() }
    } else if free_hilbert_prefix(&degrees, bound) == prefix {
        Certificate::RegularConsistent
    } else {
        Certificate::NotFree
    };
    let mut generators = Vec::new();
    for (d, g) in gens {
        let display = display_element(&mut engine, d, &g)?;
        generators.push(InvariantGenerator { degree: d, coefficients: g, display });
    }
    Ok(InvariantReport {
        algebra: spec.name.clone(),
        bound,
        hilbert_prefix: prefix,
        generators,
        certificate,
        dim_h: spec.hopf().dimension,
        faithful: None,
        spec_json: spec.to_json(),
    })
}

/// Outcome of checking a published generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    /// Each claimed element is fixed by every generator of H.
    pub all_fixed: bool,
    /// Their products span the whole fixed space in every degree ≤ bound.
    pub generates: bool,
    /// Least degree where the span falls short, if any.
    pub first_gap: Option<usize>,
}

/// Coordinates of a homogeneous combination of words in u, v, t.
pub fn element_from_words(engine: &mut GradedEngine, x: &LinComb) -> Result<(usize, SparseVec)> {
    let mut degree = None;
    let mut out = SparseVec::new();
    for (w, c) in x.terms() {
        match degree {
            None => degree = Some(w.len()),
            Some(d) if d != w.len() => {
                return Err(HopfError::ParameterOutOfRange("inhomogeneous element".into()))
            }
            _ => {}
        }
        let nf = engine.normal_form(w)?;
        axpy(&mut out, c, &nf);
    }
    Ok((degree.unwrap_or(0), out))
}

/// Checks that `claimed` are invariants generating A^H through `bound`.
pub fn verify_claimed_generators(spec: &GradedAlgebraSpec, claimed: &[LinComb], bound: usize) -> Result<ClaimCheck> {
    let mut engine = GradedEngine::preferred(spec)?;
    let hopf = spec.hopf().clone();
    let mut gens = Vec::new();
    let mut all_fixed = true;
    for x in claimed {
        let (d, v) = element_from_words(&mut engine, x)?;
        for g in 0..hopf.ngens() as u8 {
            let moved = engine.apply_word(&[g], d, &v)?;
            let expect = crate::cyclotomic::sparse::scale(&v, &hopf.counit[g as usize]);
            if moved != expect {
                all_fixed = false;
            }
        }
        if v.is_empty() {
            all_fixed = false;
        }
        gens.push((d, v));
    }
    let mut filt = Filtration::new(engine.conductor());
    let mut first_gap = None;
    for d in 1..=bound {
        let span = filt.products_at(&mut engine, &gens, d)?;
        let fixed = fixed_in(&mut engine, d)?.len();
        if span.rank() != fixed && first_gap.is_none() {
            first_gap = Some(d);
        }
        filt.levels.push(span);
    }
    Ok(ClaimCheck { all_fixed, generates: all_fixed && first_gap.is_none(), first_gap })
}

/// Every simple module occurs in some A_d with d ≤ bound.
pub fn faithfulness_check(spec: &GradedAlgebraSpec, bound: usize) -> Result<bool> {
    let catalog = irreducible_catalog(spec.hopf())?;
    let mut engine = GradedEngine::preferred(spec)?;
    let mut missing: Vec<usize> = (0..catalog.len()).collect();
    for d in 0..=bound {
        let mut still = Vec::new();
        for &k in &missing {
            if hom_dimension(&mut engine, d, &catalog[k])? == 0 {
                still.push(k);
            }
        }
        missing = still;
        if missing.is_empty() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Per degree, dim A[t;σ]^H_d = Σ_k dim (A^H)_{d−k}.
pub fn ore_invariants_check(spec: &GradedAlgebraSpec, bound: usize) -> Result<bool> {
    let ore = spec.ore.as_ref().ok_or_else(|| {
        HopfError::UnsupportedPresentation(format!("{} is not an Ore extension", spec.name))
    })?;
    let ext = invariant_hilbert_prefix(spec, bound)?;
    let base = invariant_hilbert_prefix(&ore.base, bound)?;
    Ok((0..=bound).all(|d| ext[d] == base[..=d].iter().sum::<usize>()))
}

/// Words of a LinComb in the letters u = 0, v = 1, t = 2, given as (coefficient, word).
pub fn words(l: u32, terms: &[(i64, Word)]) -> LinComb {
    LinComb::from_terms(l, terms.iter().map(|(c, w)| (CycNum::from_int(l, *c), w.clone())))
}
