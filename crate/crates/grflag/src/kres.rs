//! v1-explicit calculus in `k* (x) P(y)` with `k* = Z_(p)[v1]`: restriction
//! images, the Spin telescoping identity, torsion-index bounds, and Rost
//! motive counts.
//!
//! Elements here are finitely supported sums `c * v1^e * (monomial)`; the
//! total degree `chow(monomial) - (p-1) * e` is constant on everything the
//! case models produce, which keeps all membership questions inside single
//! graded levels of monomial dimension.

use crate::error::{Error, Result};
use crate::filtration::{self, FiltrationSpec};
use crate::liedata::{Family, GroupCase};
use crate::ring::{Element, Expo};
use crate::snf::{self, Mat, Row};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// An element of the free `P(y)`-module over `Z[v1, v1^{-1}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentElement {
    /// `(v1 exponent, monomial) -> coefficient`; no zero coefficients stored.
    pub terms: BTreeMap<(i64, Expo), i128>,
    nvars: usize,
    truncs: Vec<u32>,
}

impl LaurentElement {
    pub fn zero(case: &GroupCase) -> Self {
        LaurentElement {
            terms: BTreeMap::new(),
            nvars: case.py.nvars(),
            truncs: case.py.vars.iter().map(|v| v.trunc.unwrap()).collect(),
        }
    }

    pub fn from_v1_form(case: &GroupCase, form: &[(u32, i128, Expo)]) -> Self {
        let mut out = Self::zero(case);
        for (v1, c, m) in form {
            out.insert(*v1 as i64, m.clone(), *c);
        }
        out
    }

    pub fn from_py(case: &GroupCase, e: &Element, v1: i64) -> Self {
        let mut out = Self::zero(case);
        for (m, c) in e.terms() {
            out.insert(v1, m.clone(), *c);
        }
        out
    }

    fn insert(&mut self, v1: i64, m: Expo, c: i128) {
        if c == 0 || m.iter().zip(&self.truncs).any(|(e, t)| *e >= *t) {
            return;
        }
        let key = (v1, m);
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((v, m), c) in &other.terms {
            out.insert(*v, m.clone(), *c);
        }
        out
    }

    pub fn scale(&self, c: i128) -> Self {
        let mut out = LaurentElement {
            terms: BTreeMap::new(),
            nvars: self.nvars,
            truncs: self.truncs.clone(),
        };
        if c == 0 {
            return out;
        }
        for ((v, m), k) in &self.terms {
            out.terms.insert((*v, m.clone()), k * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    /// Multiply by `v1^k` (any integer `k`; v1 is invertible in `K*`).
    pub fn v1_shift(&self, k: i64) -> Self {
        let mut out = LaurentElement {
            terms: BTreeMap::new(),
            nvars: self.nvars,
            truncs: self.truncs.clone(),
        };
        for ((v, m), c) in &self.terms {
            out.terms.insert((v + k, m.clone()), *c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentElement {
            terms: BTreeMap::new(),
            nvars: self.nvars,
            truncs: self.truncs.clone(),
        };
        for ((va, ma), ca) in &self.terms {
            for ((vb, mb), cb) in &other.terms {
                let m: Expo = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                out.insert(va + vb, m, ca * cb);
            }
        }
        out
    }

    pub fn reduce_mod(&self, p: i128) -> Self {
        let mut out = LaurentElement {
            terms: BTreeMap::new(),
            nvars: self.nvars,
            truncs: self.truncs.clone(),
        };
        for ((v, m), c) in &self.terms {
            let c = c.rem_euclid(p);
            if c != 0 {
                out.terms.insert((*v, m.clone()), c);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Membership in `k*` (no negative v1 exponents) vs `K*`.
    pub fn is_nonneg_v1(&self) -> bool {
        self.terms.keys().all(|(v, _)| *v >= 0)
    }

    /// Evaluate at `v1 = 1`, landing back in the truncated algebra.
    pub fn at_v1_one(&self, case: &GroupCase) -> Element {
        let mut e = Element::zero(&case.py);
        for ((_, m), c) in &self.terms {
            e = e.add(&Element::monomial(&case.py, m, *c)).unwrap();
        }
        e
    }

    pub fn display(&self, case: &GroupCase) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((v, m), c)| {
                let mut s = String::new();
                if *c != 1 || (*v == 0 && m.iter().all(|&e| e == 0)) {
                    s.push_str(&c.to_string());
                }
                if *v != 0 {
                    if !s.is_empty() {
                        s.push('*');
                    }
                    if *v == 1 {
                        s.push_str("v1");
                    } else {
                        s.push_str(&format!("v1^{v}"));
                    }
                }
                for (i, &e) in m.iter().enumerate() {
                    if e > 0 {
                        if !s.is_empty() {
                            s.push('*');
                        }
                        s.push_str(&case.py.vars[i].label);
                        if e > 1 {
                            s.push_str(&format!("^{e}"));
                        }
                    }
                }
                if s.is_empty() {
                    s.push('1');
                }
                s
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((v, m), c)| format!("{c}*v1^{v}*{m:?}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Hermite (or mod-p echelon) bases of the generated submodule, per total
/// degree `chow(monomial) - (p-1) * v1exp`, in monomial coordinates.
#[derive(Debug, Clone)]
pub struct SubmoduleBasis {
    /// total degree -> echelon basis over the monomial coordinates
    pub per_total_degree: BTreeMap<i64, Mat>,
    pub mod_p: bool,
    pub degree_cap: u32,
    pub v1_cap: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct ImageReport {
    pub case: String,
    pub mod_p: bool,
    pub degree_cap: u32,
    pub v1_cap: u32,
    /// monomial label -> minimal v1 exponent (None = not attained at caps)
    pub min_exponents: Vec<(String, Option<u32>)>,
    /// every basis monomial attained
    pub full: bool,
    pub missing: Vec<String>,
    /// tables agree when the v1 cap is enlarged
    pub stable: bool,
    /// for spin cases: which exterior index convention the attained generator
    /// set matches
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index_convention: Option<String>,
}

fn mono_label(case: &GroupCase, m: &Expo) -> String {
    let e = Element::monomial(&case.py, m, 1);
    format!("{e}")
}

/// All products of the v1-explicit generator models (with repetition),
/// bounded by the P(y) top degree; the empty product is included.
fn laurent_products(case: &GroupCase, degree_cap: u32) -> Result<Vec<LaurentElement>> {
    let gens: Vec<LaurentElement> = case
        .b_models
        .iter()
        .map(|b| LaurentElement::from_v1_form(case, &b.v1_form))
        .collect();
    let mindeg: Vec<u32> = case
        .b_models
        .iter()
        .map(|b| b.value.min_degree().unwrap_or(u32::MAX))
        .collect();
    let mut one = LaurentElement::zero(case);
    one.insert(0, vec![0; case.py.nvars()], 1);
    let mut out = vec![one.clone()];
    fn dfs(
        gens: &[LaurentElement],
        mindeg: &[u32],
        cap: u32,
        start: usize,
        value: &LaurentElement,
        degsum: u32,
        out: &mut Vec<LaurentElement>,
    ) {
        for i in start..gens.len() {
            let d = degsum.saturating_add(mindeg[i]);
            if d > cap {
                continue;
            }
            let v = value.mul(&gens[i]);
            if v.is_zero() {
                continue;
            }
            out.push(v.clone());
            dfs(gens, mindeg, cap, i, &v, d, out);
        }
    }
    dfs(&gens, &mindeg, degree_cap, 0, &one, 0, &mut out);
    Ok(out)
}

fn total_degree(case: &GroupCase, v1: i64, m: &Expo) -> i64 {
    case.py.monomial_degree(m) as i64 - (case.prime as i64 - 1) * v1
}

/// Row-echelon membership structure per total degree.
fn build_levels(
    case: &GroupCase,
    products: &[LaurentElement],
    mod_p: bool,
    degree_cap: u32,
    v1_cap: u32,
) -> SubmoduleBasis {
    let basis = case.py.basis().unwrap();
    let index: BTreeMap<Expo, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let n = basis.len();
    let p = case.prime as i128;
    // collect v1-shifted products per total degree
    let mut rows_by_level: BTreeMap<i64, Vec<Row>> = BTreeMap::new();
    let min_level: i64 = -((case.prime as i64 - 1) * v1_cap as i64);
    for prod in products {
        if prod.is_zero() {
            continue;
        }
        // products are total-degree homogeneous; read the degree off any term
        let ((v0, m0), _) = prod.terms.iter().next().unwrap();
        let tau = total_degree(case, *v0, m0);
        debug_assert!(prod
            .terms
            .iter()
            .all(|((v, m), _)| total_degree(case, *v, m) == tau));
        // max extra shift keeping every v1 exponent within the cap
        let vmax = prod.terms.keys().map(|(v, _)| *v).max().unwrap();
        for j in 0..=(v1_cap as i64).saturating_sub(vmax).max(0) {
            let shifted_tau = tau - (case.prime as i64 - 1) * j;
            if shifted_tau < min_level {
                break;
            }
            let mut row = vec![0i128; n];
            for ((_, m), c) in &prod.terms {
                row[index[m]] += *c;
            }
            let row = if mod_p {
                row.iter().map(|x| x.rem_euclid(p)).collect()
            } else {
                row
            };
            rows_by_level.entry(shifted_tau).or_default().push(row);
        }
    }
    let mut per = BTreeMap::new();
    for (tau, rows) in rows_by_level {
        let b = if mod_p {
            fp_echelon(&rows, p)
        } else {
            snf::hnf_rows(&rows)
        };
        per.insert(tau, b);
    }
    SubmoduleBasis {
        per_total_degree: per,
        mod_p,
        degree_cap,
        v1_cap,
    }
}

fn fp_echelon(rows: &[Row], p: i128) -> Mat {
    let mut work: Vec<Row> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .filter(|r: &Row| r.iter().any(|&x| x != 0))
        .collect();
    let ncols = work.first().map_or(0, |r| r.len());
    let mut basis: Mat = Vec::new();
    for col in 0..ncols {
        if let Some(i) = (0..work.len()).find(|&i| work[i][col] != 0) {
            let piv = work.remove(i);
            let inv = mod_inv_i128(piv[col], p);
            let piv: Row = piv.iter().map(|x| x * inv % p).collect();
            for r in work.iter_mut() {
                if r[col] != 0 {
                    let f = r[col];
                    for (a, b) in r.iter_mut().zip(&piv) {
                        *a = (*a - f * b).rem_euclid(p);
                    }
                }
            }
            work.retain(|r| r.iter().any(|&x| x != 0));
            basis.push(piv);
        }
    }
    // back-substitute for a canonical reduced echelon form
    for i in (0..basis.len()).rev() {
        let pc = basis[i].iter().position(|&x| x != 0).unwrap();
        for j in 0..i {
            if basis[j][pc] != 0 {
                let f = basis[j][pc];
                let lower = basis[i].clone();
                for (a, b) in basis[j].iter_mut().zip(&lower) {
                    *a = (*a - f * b).rem_euclid(p);
                }
            }
        }
    }
    basis
}

fn mod_inv_i128(a: i128, p: i128) -> i128 {
    let mut result = 1i128;
    let mut base = a.rem_euclid(p);
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn level_contains(levels: &SubmoduleBasis, tau: i64, v: &Row, p: i128) -> bool {
    let Some(basis) = levels.per_total_degree.get(&tau) else {
        return false;
    };
    if levels.mod_p {
        let mut v: Row = v.iter().map(|x| x.rem_euclid(p)).collect();
        for row in basis {
            let pc = row.iter().position(|&x| x != 0).unwrap();
            if v[pc] != 0 {
                let f = v[pc];
                for (a, b) in v.iter_mut().zip(row) {
                    *a = (*a - f * b).rem_euclid(p);
                }
            }
        }
        v.iter().all(|&x| x == 0)
    } else {
        snf::in_lattice(v, basis)
    }
}

fn min_exponent_table(
    case: &GroupCase,
    levels: &SubmoduleBasis,
    v1_cap: u32,
) -> BTreeMap<Expo, Option<u32>> {
    let basis = case.py.basis().unwrap();
    let index: BTreeMap<Expo, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let p = case.prime as i128;
    let mut out = BTreeMap::new();
    for m in &basis {
        let mut best = None;
        let d = case.py.monomial_degree(m) as i64;
        for s in 0..=v1_cap {
            let tau = d - (case.prime as i64 - 1) * s as i64;
            let mut v = vec![0i128; basis.len()];
            v[index[m]] = 1;
            if level_contains(levels, tau, &v, p) {
                best = Some(s);
                break;
            }
        }
        out.insert(m.clone(), best);
    }
    out
}

/// Which exterior index convention the mod-2 image generator set matches for
/// a spin case: the candidate index sets over `2 <= i <= ell` are
/// `{i-1 : i != 2^j}` (the proof maps) and `{i : i != 2^j - 1}` (the
/// statement text). The attained set is read off the models: the `c_i'`
/// whose v1-form survives reduction mod p.
fn spin_index_convention(case: &GroupCase) -> Option<String> {
    let Family::Spin { ell } = case.family else {
        return None;
    };
    let is_pow2 = |x: u32| x != 0 && x & (x - 1) == 0;
    let p = case.prime as i128;
    let mut attained: BTreeSet<u32> = BTreeSet::new();
    for b in &case.b_models {
        let Some(i) = b
            .label
            .strip_prefix('c')
            .and_then(|s| s.strip_suffix('\''))
            .and_then(|s| s.parse::<u32>().ok())
        else {
            continue;
        };
        let nonzero = b.v1_form.iter().any(|(_, c, _)| c.rem_euclid(p) != 0);
        if nonzero {
            attained.insert(i);
        }
    }
    let set_a: BTreeSet<u32> = (2..=ell).filter(|i| !is_pow2(*i)).map(|i| i - 1).collect();
    let set_b: BTreeSet<u32> = (2..=ell).filter(|i| !is_pow2(i + 1)).collect();
    if attained == set_a && attained == set_b {
        Some("both conventions agree here".to_string())
    } else if attained == set_a {
        Some("matches Lambda(c_{i-1}' | i != 2^j)".to_string())
    } else if attained == set_b {
        Some("matches Lambda(c_i' | i != 2^j - 1)".to_string())
    } else {
        Some(format!("matches neither convention: attained {attained:?}"))
    }
}

/// Basis of the subalgebra generated by the v1-explicit models, reported as a
/// per-monomial minimal v1-exponent table.
pub fn image_subalgebra(
    case: &GroupCase,
    mod_p: bool,
    degree_cap: Option<u32>,
    v1_cap: Option<u32>,
) -> Result<ImageReport> {
    let top = case.py.top_degree()?;
    let degree_cap = degree_cap.unwrap_or(top);
    let default_v1 = top / (case.prime - 1).max(1) + 2;
    let v1_cap = v1_cap.unwrap_or(default_v1);

    let products = laurent_products(case, degree_cap)?;
    let products: Vec<LaurentElement> = if mod_p {
        products
            .iter()
            .map(|e| e.reduce_mod(case.prime as i128))
            .filter(|e| !e.is_zero())
            .collect()
    } else {
        products
    };
    let levels = build_levels(case, &products, mod_p, degree_cap, v1_cap);
    let table = min_exponent_table(case, &levels, v1_cap);
    // stability under cap growth
    let levels2 = build_levels(case, &products, mod_p, degree_cap, v1_cap + 2);
    let table2 = min_exponent_table(case, &levels2, v1_cap + 2);
    let stable = table
        .iter()
        .all(|(m, s)| table2.get(m).copied().flatten() == *s);

    let mut min_exponents = Vec::new();
    let mut missing = Vec::new();
    for (m, s) in &table {
        min_exponents.push((mono_label(case, m), *s));
        if s.is_none() {
            missing.push(mono_label(case, m));
        }
    }
    let index_convention = if mod_p { spin_index_convention(case) } else { None };
    Ok(ImageReport {
        case: case.name.clone(),
        mod_p,
        degree_cap,
        v1_cap,
        min_exponents,
        full: missing.is_empty(),
        missing,
        stable,
        index_convention,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TelescopeReport {
    pub case: String,
    pub k: u32,
    pub base_ok: bool,
    /// recursion steps `(i, exact)`
    pub steps: Vec<(u32, bool)>,
    /// `(range description, equal, residual)`
    pub identity: Vec<(String, bool, String)>,
}

/// Verify the Spin telescoping recursion step-by-step in the model and evaluate
/// the displayed identity for both candidate summation ranges.
pub fn telescope_check(case: &GroupCase, k: u32) -> Result<TelescopeReport> {
    let Family::Spin { ell } = case.family else {
        return Err(Error::Kres(format!("{} is not a spin case", case.name)));
    };
    if 2u32.pow(k + 1) >= ell {
        return Err(Error::Kres(format!(
            "hypothesis violated: 2^(k+1) = {} must be < ell = {ell}",
            2u32.pow(k + 1)
        )));
    }
    // c_i' = 2 y_{2i} + v1 y_{2i+2}, with y-classes resolved through the
    // square rule and y2-powers killed
    let c_prime = |i: u32| -> Result<LaurentElement> {
        let lo = crate::liedata::spin_resolve_y(case, 2 * i)?;
        let hi = crate::liedata::spin_resolve_y(case, 2 * i + 2)?;
        Ok(LaurentElement::from_py(case, &lo.scale(2), 0)
            .add(&LaurentElement::from_py(case, &hi, 1)))
    };
    let pow2 = 2u32.pow(k);
    // base: c'' = c_{2^k}' - 2 y_{2*2^k} = v1 y_{2(2^k+1)}
    let y_lo = crate::liedata::spin_resolve_y(case, 2 * pow2)?;
    let c_dd = c_prime(pow2)?.sub(&LaurentElement::from_py(case, &y_lo.scale(2), 0));
    let base_expect = LaurentElement::from_py(
        case,
        &crate::liedata::spin_resolve_y(case, 2 * (pow2 + 1))?,
        1,
    );
    let base_ok = c_dd == base_expect;

    // recursion: v1 y_{2(2^k+i+1)} = c_{2^k+i}' - 2 v1^{-1} * (previous)
    let mut steps = Vec::new();
    let mut prev = c_dd.clone();
    for i in 1..=pow2.saturating_sub(1) {
        let idx = pow2 + i;
        if idx > ell {
            break;
        }
        let cur = c_prime(idx)?.sub(&prev.v1_shift(-1).scale(2));
        let expect = LaurentElement::from_py(
            case,
            &crate::liedata::spin_resolve_y(case, 2 * (idx + 1))?,
            1,
        );
        steps.push((i, cur == expect));
        prev = cur;
    }

    // displayed identity: 2^{2^k} c_{2^k}' + sum (-1)^i 2^{2^k - i} v1^i
    // c_{2^k+i}' = v1^{2^k} c_{2^{k+1}-1}', summation range unspecified
    let mut identity = Vec::new();
    for range_hi in [pow2.saturating_sub(1), pow2] {
        if pow2 + range_hi > ell {
            identity.push((
                format!("i=1..{range_hi}"),
                false,
                "range leaves the class list".to_string(),
            ));
            continue;
        }
        let mut lhs = c_prime(pow2)?.scale(1i128 << pow2);
        for i in 1..=range_hi {
            let sign = if i % 2 == 1 { -1 } else { 1 };
            let coeff = sign * (1i128 << (pow2 - i));
            lhs = lhs.add(&c_prime(pow2 + i)?.v1_shift(i as i64).scale(coeff));
        }
        let rhs = c_prime(2u32.pow(k + 1) - 1)?.v1_shift(pow2 as i64);
        let residual = lhs.sub(&rhs);
        identity.push((
            format!("i=1..{range_hi}"),
            residual.is_zero(),
            residual.display(case),
        ));
    }
    Ok(TelescopeReport {
        case: case.name.clone(),
        k,
        base_ok,
        steps,
        identity,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TorsionBound {
    pub case: String,
    pub exponent: u32,
    pub witness: String,
    /// the y_top coefficient of the witness is exactly p^s times this unit
    pub unit_cofactor: i128,
}

/// Minimal `s` over products of the cohomology parts of the b-models whose
/// value is supported on `y_top` alone, with p-valuation `s` there.
///
/// The truncated model cannot see decomposable tails, so this certifies the
/// upper-bound direction only: the witness exhibits `p^s * (y_top + ...)`.
pub fn torsion_bound(case: &GroupCase) -> Result<TorsionBound> {
    let p = case.prime as i128;
    // cohomology part: the deficit-0 monomials of each model
    let mut gens = Vec::new();
    for b in &case.b_models {
        let mut part = Element::zero(&case.py);
        for (m, c) in b.value.terms() {
            if case.py.monomial_degree(m) == b.weight {
                part = part.add(&Element::monomial(&case.py, m, *c))?;
            }
        }
        if !part.is_zero() {
            gens.push((b.label.clone(), b.weight, part));
        }
    }
    let spec = FiltrationSpec::new(std::sync::Arc::clone(&case.py), gens)?;
    let products = filtration::enumerate_products(&spec)?;
    let mut best: Option<(u32, Vec<usize>, i128)> = None;
    for prod in &products {
        if prod.value.num_terms() != 1 {
            continue;
        }
        let (m, c) = prod.value.terms().next().unwrap();
        if *m != case.y_top {
            continue;
        }
        let s = crate::ring::p_valuation(*c, case.prime).unwrap();
        let better = match &best {
            None => true,
            Some((bs, bw, _)) => s < *bs || (s == *bs && prod.word < *bw),
        };
        if better {
            best = Some((s, prod.word.clone(), c / p.pow(s)));
        }
    }
    let Some((s, word, unit)) = best else {
        return Err(Error::Kres(format!(
            "{}: no product of cohomology parts reaches y_top",
            case.name
        )));
    };
    Ok(TorsionBound {
        case: case.name.clone(),
        exponent: s,
        witness: filtration::word_label(&spec, &word),
        unit_cofactor: unit,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RostReport {
    pub n: u32,
    pub p: u32,
    pub chow_basis_count: u32,
    pub gr_geo_killed_count: u32,
    pub relation_verified: bool,
    pub basis_labels: Vec<String>,
    pub killed_labels: Vec<String>,
}

/// Chow-class and killed-class counts for the Rost motive `R_n` at `p`, with
/// the relation `v1 c_j(y) = v_j c_1(y)` verified in a truncated symbolic
/// model.
pub fn rost_counts(n: u32, p: u32) -> Result<RostReport> {
    if n < 1 || !crate::ring::is_prime(p) {
        return Err(Error::Kres("need n >= 1 and p prime".into()));
    }
    // basis {1} u {c_j(y^i) : 0 <= j <= n-1, 1 <= i <= p-1}
    let mut basis_labels = vec!["1".to_string()];
    for i in 1..=p - 1 {
        for j in 0..n {
            basis_labels.push(format!("c{j}(y^{i})"));
        }
    }
    let chow_basis_count = 1 + n * (p - 1);
    // killed by gr_geo: I = Z/p{c_2..c_{n-1}}[y]/(y^{p-1})
    let mut killed_labels = Vec::new();
    for i in 1..=p - 1 {
        for j in 2..n {
            killed_labels.push(format!("c{j}(y^{i})"));
        }
    }
    let gr_geo_killed_count = if n >= 3 { (n - 2) * (p - 1) } else { 0 };
    debug_assert_eq!(killed_labels.len() as u32, gr_geo_killed_count);

    // symbolic check in Z[v_0..v_{n-1}] (x) Z[y]/(y^p): with c_j(x) = v_j x,
    // v1 * c_j(y^i) equals v_j * c_1(y^i) for every j and i
    #[derive(PartialEq, Eq, PartialOrd, Ord, Clone, Debug)]
    struct Term {
        v: Vec<u32>,
        y: u32,
    }
    let mul = |a: &BTreeMap<Term, i128>, b: &BTreeMap<Term, i128>| {
        let mut out: BTreeMap<Term, i128> = BTreeMap::new();
        for (ta, ca) in a {
            for (tb, cb) in b {
                let y = ta.y + tb.y;
                if y >= p {
                    continue; // y^p = 0
                }
                let v: Vec<u32> = ta.v.iter().zip(&tb.v).map(|(x, z)| x + z).collect();
                *out.entry(Term { v, y }).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    };
    let var_v = |j: usize| {
        let mut v = vec![0u32; n as usize];
        v[j] = 1;
        BTreeMap::from([(Term { v, y: 0 }, 1i128)])
    };
    let y_pow = |i: u32| BTreeMap::from([(Term { v: vec![0; n as usize], y: i }, 1i128)]);
    let mut relation_verified = n >= 2;
    if n >= 2 {
        for i in 1..=p - 1 {
            for j in 1..n as usize {
                let cj = mul(&var_v(j), &y_pow(i)); // c_j(y^i) = v_j y^i
                let c1 = mul(&var_v(1), &y_pow(i));
                let lhs = mul(&var_v(1), &cj);
                let rhs = mul(&var_v(j), &c1);
                if lhs != rhs {
                    relation_verified = false;
                }
            }
        }
    }
    Ok(RostReport {
        n,
        p,
        chow_basis_count,
        gr_geo_killed_count,
        relation_verified,
        basis_labels,
        killed_labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liedata::load_case;

    #[test]
    fn v1_forms_evaluate_to_models() {
        for name in crate::liedata::list_cases() {
            let case = load_case(&name).unwrap();
            for b in &case.b_models {
                let le = LaurentElement::from_v1_form(&case, &b.v1_form);
                assert_eq!(le.at_v1_one(&case), b.value, "{name}:{}", b.label);
                assert!(le.is_nonneg_v1());
            }
        }
    }

    #[test]
    fn so7_image_misses_y2_line() {
        let case = load_case("so7").unwrap();
        let rep = image_subalgebra(&case, true, None, None).unwrap();
        assert!(!rep.full);
        assert!(rep.stable);
        let get = |label: &str| {
            rep.min_exponents
                .iter()
                .find(|(l, _)| l == label)
                .map(|(_, s)| *s)
                .unwrap()
        };
        assert_eq!(get("y2^2"), Some(1));
        assert_eq!(get("y6"), Some(1));
        assert_eq!(get("y2^2*y6"), Some(2));
        assert_eq!(get("y2"), None);
        assert_eq!(get("y2^3"), None);
        assert_eq!(get("y2*y6"), None);
        assert_eq!(get("y2^3*y6"), None);
    }

    #[test]
    fn spin11_image_is_full() {
        let case = load_case("spin11").unwrap();
        let rep = image_subalgebra(&case, true, None, None).unwrap();
        assert!(rep.full, "missing: {:?}", rep.missing);
        let get = |label: &str| {
            rep.min_exponents
                .iter()
                .find(|(l, _)| l == label)
                .map(|(_, s)| *s)
                .unwrap()
        };
        assert_eq!(get("y6"), Some(1));
        assert_eq!(get("y10"), Some(1));
        assert_eq!(get("y6*y10"), Some(2));
        assert_eq!(
            rep.index_convention.as_deref(),
            Some("matches Lambda(c_{i-1}' | i != 2^j)")
        );
    }

    #[test]
    fn telescope_spin11() {
        let case = load_case("spin11").unwrap();
        let rep = telescope_check(&case, 1).unwrap();
        assert!(rep.base_ok, "c'' = v1 y6 must hold in the model");
        assert!(rep.steps.iter().all(|(_, ok)| *ok), "steps: {:?}", rep.steps);
        // the displayed identity does not close in this model; the report
        // carries the residuals rather than asserting either range
        assert_eq!(rep.identity.len(), 2);
        assert!(telescope_check(&case, 2).is_err(), "2^(k+1) >= ell");
    }

    #[test]
    fn torsion_bounds_match_cases() {
        for (name, s, witness) in [
            ("spin11", 1, "c1^8"),
            ("e7p2", 2, "b2*b7"),
            ("e8p3", 2, "b2*b8"),
            ("so5", 2, "c1*c2"),
            ("so7", 3, "c1*c2*c3"),
            ("typeI(p=3)", 1, "b4"),
            ("typeI(p=5)", 1, "b8"),
        ] {
            let case = load_case(name).unwrap();
            let tb = torsion_bound(&case).unwrap();
            assert_eq!(tb.exponent, s, "case {name}");
            assert_eq!(tb.witness, witness, "case {name}");
            assert!(tb.unit_cofactor % case.prime as i128 != 0, "case {name}");
        }
    }

    #[test]
    fn rost_examples() {
        let r = rost_counts(2, 5).unwrap();
        assert_eq!(r.chow_basis_count, 9);
        assert_eq!(r.gr_geo_killed_count, 0);
        assert!(r.relation_verified);
        let r = rost_counts(3, 2).unwrap();
        assert_eq!(r.chow_basis_count, 4);
        assert_eq!(r.gr_geo_killed_count, 1);
        assert_eq!(r.killed_labels, vec!["c2(y^1)"]);
        let r = rost_counts(1, 7).unwrap();
        assert_eq!(r.chow_basis_count, 7);
        assert_eq!(r.gr_geo_killed_count, 0);
    }
}
