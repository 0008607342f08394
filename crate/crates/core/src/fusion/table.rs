use crate::error::{HopfError, Result};
use crate::hopf::{Family, HopfPresentation};
use crate::rep::{decompose, irreducible_catalog, RepLabel};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// Structure constants N^c_{ab} of a Grothendieck ring, indexed by catalog position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTable {
    pub family: Family,
    pub labels: Vec<RepLabel>,
    pub dims: Vec<usize>,
    /// `constants[a][b][c]` = N^c_{ab}.
    pub constants: Vec<Vec<Vec<u32>>>,
}

#[derive(Serialize)]
struct FusionJson<'a> {
    schema: &'static str,
    family: String,
    labels: Vec<String>,
    dims: &'a [usize],
    structure_constants: &'a [Vec<Vec<u32>>],
}

impl FusionTable {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &RepLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// a ⊗ b as (label, multiplicity) pairs in catalog order.
    pub fn product(&self, a: usize, b: usize) -> Vec<(RepLabel, u32)> {
        self.constants[a][b]
            .iter()
            .enumerate()
            .filter(|(_, n)| **n > 0)
            .map(|(c, n)| (self.labels[c], *n))
            .collect()
    }

    /// Index of the trivial module, if it is a two-sided unit.
    pub fn unit(&self) -> Option<usize> {
        (0..self.len()).find(|&u| {
            (0..self.len()).all(|a| {
                (0..self.len()).all(|c| {
                    let delta = u32::from(a == c);
                    self.constants[u][a][c] == delta && self.constants[a][u][c] == delta
                })
            })
        })
    }

    pub fn dimensions_consistent(&self) -> bool {
        (0..self.len()).all(|a| {
            (0..self.len()).all(|b| {
                let total: usize = (0..self.len())
                    .map(|c| self.constants[a][b][c] as usize * self.dims[c])
                    .sum();
                total == self.dims[a] * self.dims[b]
            })
        })
    }

    /// Σ_e N^e_{ab} N^d_{ec} = Σ_e N^e_{bc} N^d_{ae}.
    pub fn is_associative(&self) -> bool {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let left: u32 = (0..n)
                            .map(|e| self.constants[a][b][e] * self.constants[e][c][d])
                            .sum();
                        let right: u32 = (0..n)
                            .map(|e| self.constants[b][c][e] * self.constants[a][e][d])
                            .sum();
                        if left != right {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.constants[a][b] == self.constants[b][a]))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(FusionJson {
            schema: crate::SCHEMA,
            family: self.family.to_string(),
            labels: self.labels.iter().map(|l| l.name(self.family)).collect(),
            dims: &self.dims,
            structure_constants: &self.constants,
        })
        .expect("plain data serializes")
    }
}

/// N^c_{ab} = multiplicity of c in a ⊗ b, by intertwiner ranks.
pub fn build_fusion_table(h: &Arc<HopfPresentation>) -> Result<FusionTable> {
    let cat = irreducible_catalog(h)?;
    let n = cat.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let rows: Vec<Vec<u32>> = pairs
        .par_iter()
        .map(|&(a, b)| -> Result<Vec<u32>> {
            let t = cat[a].tensor(&cat[b])?;
            let d = decompose(&t, &cat)?;
            Ok(cat
                .iter()
                .map(|s| d.multiplicity(&s.label.unwrap()) as u32)
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut constants = vec![vec![Vec::new(); n]; n];
    for ((a, b), row) in pairs.into_iter().zip(rows) {
        constants[a][b] = row;
    }
    Ok(FusionTable {
        family: h.family,
        labels: cat.iter().map(|r| r.label.unwrap()).collect(),
        dims: cat.iter().map(|r| r.dim()).collect(),
        constants,
    })
}

/// Least set of labels containing every summand of every tensor power of V.
pub fn generation_closure(v: &[RepLabel], table: &FusionTable) -> Result<BTreeSet<RepLabel>> {
    let mut gens = Vec::new();
    for l in v {
        for s in l.expand(table.family)? {
            let i = table
                .index_of(&s)
                .ok_or_else(|| HopfError::LabelOutOfFamily(format!("{s:?}")))?;
            if !gens.contains(&i) {
                gens.push(i);
            }
        }
    }
    let cap = table.len() * table.len();
    let mut seen: BTreeSet<usize> = gens.iter().copied().collect();
    let mut frontier: Vec<usize> = gens.clone();
    let mut steps = 0;
    while !frontier.is_empty() {
        steps += 1;
        if steps > cap {
            return Err(HopfError::ClosureDiverged(cap));
        }
        let mut next = Vec::new();
        for &a in &frontier {
            for &g in &gens {
                for (c, n) in table.constants[a][g].iter().enumerate() {
                    if *n > 0 && seen.insert(c) {
                        next.push(c);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().map(|i| table.labels[i]).collect())
}

pub fn closure_is_complete(v: &[RepLabel], table: &FusionTable) -> Result<bool> {
    Ok(generation_closure(v, table)?.len() == table.len())
}

/// Whether the bijection carries every structure constant of `t1` onto `t2`.
pub fn compare_fusion_isomorphism(
    t1: &FusionTable,
    t2: &FusionTable,
    bijection: &HashMap<RepLabel, RepLabel>,
) -> Result<bool> {
    if t1.len() != t2.len() || bijection.len() != t1.len() {
        return Err(HopfError::BijectionNotDimensionPreserving(format!(
            "{} labels vs {} labels, {} pairs",
            t1.len(),
            t2.len(),
            bijection.len()
        )));
    }
    let mut perm = Vec::with_capacity(t1.len());
    for (i, l) in t1.labels.iter().enumerate() {
        let img = bijection
            .get(l)
            .ok_or_else(|| HopfError::BijectionNotDimensionPreserving(format!("{l:?} unmapped")))?;
        let j = t2
            .index_of(img)
            .ok_or_else(|| HopfError::BijectionNotDimensionPreserving(format!("{img:?} missing")))?;
        if t1.dims[i] != t2.dims[j] {
            return Err(HopfError::BijectionNotDimensionPreserving(format!("{l:?} ↦ {img:?}")));
        }
        perm.push(j);
    }
    let distinct: BTreeSet<usize> = perm.iter().copied().collect();
    if distinct.len() != perm.len() {
        return Err(HopfError::BijectionNotDimensionPreserving("not injective".into()));
    }
    Ok(respects(t1, t2, &perm))
}

fn respects(t1: &FusionTable, t2: &FusionTable, perm: &[usize]) -> bool {
    let n = t1.len();
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| t1.constants[a][b][c] == t2.constants[perm[a]][perm[b]][perm[c]]))
    })
}

/// Maps each label to the equal label of the other table.
pub fn identity_bijection(t1: &FusionTable) -> HashMap<RepLabel, RepLabel> {
    t1.labels.iter().map(|l| (*l, *l)).collect()
}

/// Searches all dimension-preserving bijections for a ring isomorphism.
pub fn find_fusion_isomorphism(t1: &FusionTable, t2: &FusionTable) -> Option<HashMap<RepLabel, RepLabel>> {
    if t1.len() != t2.len() {
        return None;
    }
    let n = t1.len();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn consistent(t1: &FusionTable, t2: &FusionTable, perm: &[usize], k: usize) -> bool {
        // every triple among assigned labels 0..=k involving k
        for a in 0..=k {
            for b in 0..=k {
                for c in 0..=k {
                    if a != k && b != k && c != k {
                        continue;
                    }
                    if t1.constants[a][b][c] != t2.constants[perm[a]][perm[b]][perm[c]] {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(t1: &FusionTable, t2: &FusionTable, perm: &mut Vec<usize>, used: &mut Vec<bool>, k: usize) -> bool {
        if k == t1.len() {
            return respects(t1, t2, perm);
        }
        for j in 0..t2.len() {
            if used[j] || t1.dims[k] != t2.dims[j] {
                continue;
            }
            perm[k] = j;
            used[j] = true;
            if consistent(t1, t2, perm, k) && go(t1, t2, perm, used, k + 1) {
                return true;
            }
            used[j] = false;
        }
        perm[k] = usize::MAX;
        false
    }
    if go(t1, t2, &mut perm, &mut used, 0) {
        Some((0..n).map(|i| (t1.labels[i], t2.labels[perm[i]])).collect())
    } else {
        None
    }
}

/// Fusion table of a family's default presentation, built once per process.
pub fn cached_fusion_table(family: Family) -> Result<Arc<FusionTable>> {
    static CACHE: OnceLock<Mutex<HashMap<Family, Arc<FusionTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&family) {
        return Ok(t.clone());
    }
    let t = Arc::new(build_fusion_table(&family.build()?)?);
    cache.lock().unwrap().insert(family, t.clone());
    Ok(t)
}
