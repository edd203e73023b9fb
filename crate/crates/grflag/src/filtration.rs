//! The associated graded of the multiplicative weight filtration on a model
//! `K^0 = Z_(p) (x) P(y)`.
//!
//! The filtration is generated by the weighted transgression-element models:
//! `L_m` is the integer span of all products of generators of total weight at
//! least `m`, written in monomial coordinates with `v1 = 1` (the Bott class is
//! a unit, weights carry its bookkeeping). Per weight, the invariant factors
//! of `L_m / L_{m+1}` are read off a Smith normal form.

use crate::error::{Error, Result};
use crate::liedata::{GroupCase, GrGenerators};
use crate::ring::{AlgebraPresentation, Element, Expo};
use crate::snf::{self, Mat, Row};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct FiltrationSpec {
    pub ambient: Arc<AlgebraPresentation>,
    /// Generators `(label, weight >= 1, element)`; elements lie in the
    /// augmentation ideal.
    pub generators: Vec<(String, u32, Element)>,
}

impl FiltrationSpec {
    pub fn new(
        ambient: Arc<AlgebraPresentation>,
        generators: Vec<(String, u32, Element)>,
    ) -> Result<Self> {
        for (label, w, e) in &generators {
            if *w == 0 {
                return Err(Error::Filtration(format!("generator {label} has weight 0")));
            }
            if e.has_unit_part() {
                return Err(Error::Filtration(format!(
                    "generator {label} is not in the augmentation ideal"
                )));
            }
            if e.is_zero() {
                return Err(Error::Filtration(format!("generator {label} is zero")));
            }
        }
        Ok(FiltrationSpec {
            ambient,
            generators,
        })
    }

    /// The filtration attached to a case, honoring its generator policy
    /// (full integer models, or their mod-p reductions for the SO family).
    pub fn from_case(case: &GroupCase) -> Result<Self> {
        let mut gens = Vec::new();
        for b in &case.b_models {
            let value = match case.gr_generators {
                GrGenerators::Full => b.value.clone(),
                GrGenerators::ModPLeading => b.value.reduce_mod(case.prime as i128),
            };
            if value.is_zero() {
                continue;
            }
            gens.push((b.label.clone(), b.weight, value));
        }
        FiltrationSpec::new(Arc::clone(&case.py), gens)
    }
}

/// One nonzero product of generators, tagged with its total weight.
#[derive(Debug, Clone)]
pub struct Product {
    /// Sorted indices into the generator list (with repetition).
    pub word: Vec<usize>,
    pub weight: u32,
    pub value: Element,
}

impl Product {
    pub fn label(&self, spec: &FiltrationSpec) -> String {
        word_label(spec, &self.word)
    }
}

pub fn word_label(spec: &FiltrationSpec, word: &[usize]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let label = &spec.generators[word[i]].0;
        let count = j - i;
        if count == 1 {
            parts.push(label.clone());
        } else if label.contains('^') {
            for _ in 0..count {
                parts.push(label.clone());
            }
        } else {
            parts.push(format!("{label}^{count}"));
        }
        i = j;
    }
    parts.join("*")
}

/// Parse a product word back into `(word, element)`; `"1"` is the empty word.
pub fn parse_word(spec: &FiltrationSpec, src: &str) -> Result<(Vec<usize>, Element)> {
    let mut word = Vec::new();
    if src.trim() != "1" {
        for tok in src.split('*') {
            let tok = tok.trim();
            let (label, count) = match spec.generators.iter().position(|(l, _, _)| l == tok) {
                Some(_) => (tok.to_string(), 1usize),
                None => match tok.rsplit_once('^') {
                    Some((head, n)) => {
                        let n: usize = n
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad word token '{tok}'")))?;
                        (head.to_string(), n)
                    }
                    None => return Err(Error::Parse(format!("unknown generator '{tok}'"))),
                },
            };
            let idx = spec
                .generators
                .iter()
                .position(|(l, _, _)| *l == label)
                .ok_or_else(|| Error::Parse(format!("unknown generator '{label}'")))?;
            for _ in 0..count {
                word.push(idx);
            }
        }
    }
    word.sort_unstable();
    let mut value = Element::one(&spec.ambient);
    for &i in &word {
        value = value.mul(&spec.generators[i].2)?;
    }
    Ok((word, value))
}

/// Enumerate all products of generators (with repetition) whose natural
/// degree sum stays within the top Chow degree of the ambient algebra and
/// whose normal form is nonzero. Any omitted product is zero in the ambient.
pub fn enumerate_products(spec: &FiltrationSpec) -> Result<Vec<Product>> {
    struct Walk<'a> {
        spec: &'a FiltrationSpec,
        mindeg: Vec<u32>,
        top: u32,
        out: Vec<Product>,
    }
    impl Walk<'_> {
        fn dfs(
            &mut self,
            start: usize,
            word: &mut Vec<usize>,
            value: &Element,
            weight: u32,
            degsum: u32,
        ) -> Result<()> {
            for i in start..self.spec.generators.len() {
                let d = degsum.saturating_add(self.mindeg[i]);
                if d > self.top {
                    continue;
                }
                let v = value.mul(&self.spec.generators[i].2)?;
                if v.is_zero() {
                    continue;
                }
                let w = weight + self.spec.generators[i].1;
                word.push(i);
                self.out.push(Product {
                    word: word.clone(),
                    weight: w,
                    value: v.clone(),
                });
                self.dfs(i, word, &v, w, d)?;
                word.pop();
            }
            Ok(())
        }
    }
    let mut walk = Walk {
        spec,
        mindeg: spec
            .generators
            .iter()
            .map(|(_, _, e)| e.min_degree().unwrap_or(u32::MAX))
            .collect(),
        top: spec.ambient.top_degree()?,
        out: Vec::new(),
    };
    let one = Element::one(&spec.ambient);
    walk.dfs(0, &mut Vec::new(), &one, 0, 0)?;
    let mut out = walk.out;
    out.sort_by(|a, b| a.word.cmp(&b.word));
    Ok(out)
}

/// Hermite bases of the lattice chain `L_0 >= L_1 >= ...`; index `m` holds
/// `L_m`, up to `max_weight + 1` (which is zero).
#[derive(Debug, Clone)]
pub struct LatticeChain {
    pub basis_index: BTreeMap<Expo, usize>,
    pub levels: Vec<Mat>,
    pub max_weight: u32,
}

pub fn element_coords(e: &Element, index: &BTreeMap<Expo, usize>) -> Row {
    let mut v = vec![0i128; index.len()];
    for (m, c) in e.terms() {
        v[index[m]] = *c;
    }
    v
}

pub fn lattice_chain(spec: &FiltrationSpec, products: &[Product]) -> Result<LatticeChain> {
    let basis = spec.ambient.basis()?;
    let basis_index: BTreeMap<Expo, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let n = basis.len();
    let max_weight = products.iter().map(|p| p.weight).max().unwrap_or(0);
    let mut by_weight: BTreeMap<u32, Vec<Row>> = BTreeMap::new();
    for p in products {
        by_weight
            .entry(p.weight)
            .or_default()
            .push(element_coords(&p.value, &basis_index));
    }
    let mut levels = vec![Mat::new(); max_weight as usize + 2];
    // build top-down so each level reuses the HNF below it
    let mut acc: Mat = Vec::new();
    for m in (1..=max_weight).rev() {
        if let Some(rows) = by_weight.get(&m) {
            acc.extend(rows.iter().cloned());
            acc = snf::hnf_rows(&acc);
        }
        levels[m as usize] = acc.clone();
    }
    // L_0 is the full algebra
    levels[0] = (0..n)
        .map(|i| {
            let mut r = vec![0i128; n];
            r[i] = 1;
            r
        })
        .collect();
    Ok(LatticeChain {
        basis_index,
        levels,
        max_weight,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GrWeightPiece {
    pub w: u32,
    /// Invariant factors: `0` for a free summand, else a prime power.
    pub factors: Vec<i64>,
    /// Product words (or, when no single word generates a summand, the
    /// polynomial form of its lattice generator).
    pub reps: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GrTotals {
    pub free: u32,
    pub torsion: u32,
    pub mod_p_dim: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GrResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub weights: Vec<GrWeightPiece>,
    pub totals: GrTotals,
}

/// Expected per-weight data as stored in case files.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GrExpectation {
    pub weights: Vec<GrWeightPiece>,
    pub totals: GrTotals,
}

fn render_poly(spec: &FiltrationSpec, v: &Row, index: &BTreeMap<Expo, usize>) -> String {
    let mut e = Element::zero(&spec.ambient);
    for (m, &i) in index {
        if v[i] != 0 {
            e = e.add(&Element::monomial(&spec.ambient, m, v[i])).unwrap();
        }
    }
    format!("{e}")
}

/// Compute the associated graded: per-weight invariant factors with product
/// word representatives, chosen lexicographically least.
pub fn gr_invariants(spec: &FiltrationSpec) -> Result<GrResult> {
    let products = enumerate_products(spec)?;
    let chain = lattice_chain(spec, &products)?;
    let index = &chain.basis_index;
    let mut weights: Vec<GrWeightPiece> = Vec::new();
    let (mut free, mut torsion) = (0u32, 0u32);

    for m in 0..=chain.max_weight {
        let sup = &chain.levels[m as usize];
        let sub = &chain.levels[m as usize + 1];
        if sup.is_empty() {
            continue;
        }
        let (factors, gens) = snf::quotient_invariants(sup, sub)?;
        if factors.is_empty() {
            continue;
        }
        // candidate words in lex order; only weight-exactly-m products can
        // have a nonzero class here (deeper words lie in L_{m+1} already),
        // and weight 0 also sees the empty word
        let mut candidates: Vec<(Vec<usize>, Row)> = Vec::new();
        if m == 0 {
            let one = Element::one(&spec.ambient);
            candidates.push((Vec::new(), element_coords(&one, index)));
        }
        for p in &products {
            if p.weight == m {
                candidates.push((p.word.clone(), element_coords(&p.value, index)));
            }
        }
        let mut reps: Vec<String> = Vec::new();
        for (i, &d) in factors.iter().enumerate() {
            // a word represents summand i exactly when it is a unit multiple
            // of the summand generator modulo L_{m+1} + <other generators>
            let mut rows: Mat = sub.clone();
            for (j, g) in gens.iter().enumerate() {
                if j != i {
                    rows.push(g.clone());
                }
            }
            let rest = snf::hnf_rows(&rows);
            let units: Vec<i128> = if d == 0 {
                vec![1, -1]
            } else {
                (1..d).filter(|u| gcd(*u, d) == 1).collect()
            };
            let mut found = None;
            'cand: for (word, v) in &candidates {
                for &u in &units {
                    let diff: Row = v
                        .iter()
                        .zip(&gens[i])
                        .map(|(a, b)| a - u * b)
                        .collect();
                    if snf::in_lattice(&diff, &rest) {
                        found = Some(word_label(spec, word));
                        break 'cand;
                    }
                }
            }
            reps.push(found.unwrap_or_else(|| render_poly(spec, &gens[i], index)));
            if d == 0 {
                free += 1;
            } else {
                torsion += 1;
            }
        }
        weights.push(GrWeightPiece {
            w: m,
            factors: factors.iter().map(|&d| d as i64).collect(),
            reps,
        });
    }
    Ok(GrResult {
        case: None,
        weights,
        totals: GrTotals {
            free,
            torsion,
            mod_p_dim: free + torsion,
        },
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightDiff {
    pub w: u32,
    pub expected_factors: Vec<i64>,
    pub actual_factors: Vec<i64>,
    pub rep_mismatches: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiffReport {
    pub equal: bool,
    pub diffs: Vec<WeightDiff>,
    pub totals_equal: bool,
}

/// Resolve a stored representative string: first as a product word, then as a
/// polynomial in the ambient variables.
fn resolve_rep(spec: &FiltrationSpec, src: &str) -> Result<Element> {
    match parse_word(spec, src) {
        Ok((_, e)) => Ok(e),
        Err(_) => Element::parse(&spec.ambient, src),
    }
}

/// Compare an engine result against expected data: per-weight invariant
/// factors exactly, and representatives up to coset (unit multiples allowed).
pub fn compare_expected(
    spec: &FiltrationSpec,
    result: &GrResult,
    expected: &GrExpectation,
) -> Result<DiffReport> {
    let products = enumerate_products(spec)?;
    let chain = lattice_chain(spec, &products)?;
    let index = &chain.basis_index;
    let mut diffs = Vec::new();
    let mut all_w: Vec<u32> = result
        .weights
        .iter()
        .map(|p| p.w)
        .chain(expected.weights.iter().map(|p| p.w))
        .collect();
    all_w.sort_unstable();
    all_w.dedup();
    for w in all_w {
        let got = result.weights.iter().find(|p| p.w == w);
        let want = expected.weights.iter().find(|p| p.w == w);
        let got_f = got.map(|p| p.factors.clone()).unwrap_or_default();
        let want_f = want.map(|p| p.factors.clone()).unwrap_or_default();
        let mut rep_mismatches = Vec::new();
        if got_f == want_f {
            if let (Some(got), Some(want)) = (got, want) {
                let empty = Mat::new();
                let sub: &Mat = chain.levels.get(w as usize + 1).unwrap_or(&empty);
                // match expected summands against engine summands of the same
                // factor, up to coset and unit multiples (the order of equal
                // factors within a weight is a presentation artifact)
                let coset_eq = |a: &str, b: &str, d: i64| -> Option<bool> {
                    let (Ok(ea), Ok(eb)) = (resolve_rep(spec, a), resolve_rep(spec, b)) else {
                        return None;
                    };
                    let va = element_coords(&ea, index);
                    let vb = element_coords(&eb, index);
                    let units: Vec<i128> = if d == 0 {
                        vec![1, -1]
                    } else {
                        (1..d as i128).filter(|u| gcd(*u, d as i128) == 1).collect()
                    };
                    Some(units.iter().any(|&u| {
                        let diff: Row = va.iter().zip(&vb).map(|(x, y)| x - u * y).collect();
                        snf::in_lattice(&diff, sub)
                    }))
                };
                let mut used = vec![false; got.reps.len()];
                for (i, er) in want.reps.iter().enumerate() {
                    let d = want.factors[i];
                    let mut matched = false;
                    for (j, gr) in got.reps.iter().enumerate() {
                        if used[j] || got.factors[j] != d {
                            continue;
                        }
                        match coset_eq(er, gr, d) {
                            Some(true) => {
                                used[j] = true;
                                matched = true;
                                break;
                            }
                            Some(false) => {}
                            None => {
                                rep_mismatches
                                    .push(format!("cannot resolve rep '{er}' or '{gr}'"));
                                used[j] = true;
                                matched = true;
                                break;
                            }
                        }
                    }
                    if !matched {
                        rep_mismatches.push(format!(
                            "weight {w}: no engine class matches '{er}' (factor {d}) up to coset"
                        ));
                    }
                }
            }
        }
        if got_f != want_f || !rep_mismatches.is_empty() {
            diffs.push(WeightDiff {
                w,
                expected_factors: want_f,
                actual_factors: got_f,
                rep_mismatches,
            });
        }
    }
    let totals_equal = result.totals == expected.totals;
    Ok(DiffReport {
        equal: diffs.is_empty() && totals_equal,
        diffs,
        totals_equal,
    })
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// The mod-p dimension counted per Chow degree of the class representatives
/// (meaningful when every representative is homogeneous, as in the SO-family
/// leading models).
pub fn mod_p_dim_by_degree(spec: &FiltrationSpec, result: &GrResult) -> Result<Vec<i64>> {
    let mut out: Vec<i64> = Vec::new();
    for piece in &result.weights {
        for rep in &piece.reps {
            let e = resolve_rep(spec, rep)?;
            let d = e.chow_degree().ok_or_else(|| {
                Error::Filtration(format!("representative '{rep}' is not homogeneous"))
            })? as usize;
            if out.len() <= d {
                out.resize(d + 1, 0);
            }
            out[d] += 1;
        }
    }
    Ok(out)
}
