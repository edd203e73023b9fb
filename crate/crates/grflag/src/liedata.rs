//! Case database: one record per (G, p) with the cohomology model, Milnor
//! operation tables, weighted transgression-element models and expected
//! results, plus the Q-operation calculus on `Lambda(x) (x) P(y)`.
//!
//! Built-in cases are shipped as JSON under `assets/cases/` and loaded through
//! the same validation path as user files (`GRFLAG_CASE_DIR`).

use crate::error::{Error, Result};
use crate::parse::parse_poly;
use crate::ring::{AlgebraPresentation, CoefficientRing, Element, Expo, VarSpec};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseFile {
    pub name: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    pub prime: u32,
    pub rank: u32,
    pub weyl_order: u64,
    pub py: Vec<PyVar>,
    #[serde(default)]
    pub x_gens: Vec<XGen>,
    #[serde(default)]
    pub q_table: Vec<QEntry>,
    pub b_models: Vec<BModelFile>,
    pub y_top: String,
    #[serde(default)]
    pub gr_generators: GrGenerators,
    #[serde(default)]
    pub family: Family,
    #[serde(default)]
    pub dropped_terms: Vec<String>,
    #[serde(default)]
    pub notes: Vec<String>,
    #[serde(default)]
    pub expected: Expected,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PyVar {
    pub label: String,
    pub chow_degree: u32,
    pub trunc: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct XGen {
    pub label: String,
    pub degree: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QEntry {
    pub n: u32,
    pub x: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BModelFile {
    pub label: String,
    pub weight: u32,
    pub value: String,
    #[serde(default)]
    pub v1_form: Option<String>,
    #[serde(default)]
    pub x: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum GrGenerators {
    /// Use the full integer models of the b-elements.
    #[default]
    Full,
    /// Use the mod-p reductions of the b-elements (the SO-family models,
    /// where the mod-2 relation `c_i = v_1 y_{2i+2}` drives the graded ring).
    ModPLeading,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    So { ell: u32 },
    Spin { ell: u32 },
    TypeI,
    #[default]
    Exceptional,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct Expected {
    #[serde(default)]
    pub torsion_exponent: Option<u32>,
    #[serde(default)]
    pub torsion_witness: Option<String>,
    #[serde(default)]
    pub gr: Option<crate::filtration::GrExpectation>,
    /// The explicit S(t)-ideal, when the case has one: a named construction
    /// ("so_squares" or "spin11_gr") or a path to an ideal JSON file.
    #[serde(default, alias = "presentation_file")]
    pub presentation: Option<String>,
    #[serde(default)]
    pub image: Option<ImageExpectation>,
    /// Lower bound on the mod-p dimension of gr (injection-style results).
    #[serde(default)]
    pub min_mod_p_dim: Option<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ImageExpectation {
    /// Every P(y) basis monomial is attained at a finite v1-exponent.
    Full { min_exponents: Vec<MinExponent> },
    /// The exterior-basis monomials containing the y2-line are missed,
    /// everything else is attained (the SO picture).
    MissesY2Line { min_exponents: Vec<MinExponent> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MinExponent {
    pub monomial: String,
    pub s: u32,
}

/// One transgression-element model: a label, its Chow weight, the exact
/// integer element of P(y) (v1 evaluated at 1), and the v1-explicit form.
#[derive(Debug, Clone)]
pub struct BModel {
    pub label: String,
    pub weight: u32,
    pub value: Element,
    /// Terms `(v1_exponent, coefficient, monomial)`.
    pub v1_form: Vec<(u32, i128, Expo)>,
    pub x: Option<String>,
}

#[derive(Debug, Clone)]
pub struct GroupCase {
    pub name: String,
    pub aliases: Vec<String>,
    pub prime: u32,
    pub rank: u32,
    pub weyl_order: u64,
    pub py: Arc<AlgebraPresentation>,
    pub x_gens: Vec<XGen>,
    pub q_table: BTreeMap<(u32, String), Element>,
    pub b_models: Vec<BModel>,
    pub y_top: Expo,
    pub gr_generators: GrGenerators,
    pub family: Family,
    pub dropped_terms: Vec<String>,
    pub notes: Vec<String>,
    pub expected: Expected,
}

impl GroupCase {
    pub fn b_model(&self, label: &str) -> Option<&BModel> {
        self.b_models.iter().find(|b| b.label == label)
    }

    pub fn q_value(&self, n: u32, x: &str) -> Option<&Element> {
        self.q_table.get(&(n, x.to_string()))
    }

    pub fn y_top_element(&self) -> Element {
        Element::monomial(&self.py, &self.y_top, 1)
    }
}

fn parse_v1_form(py: &Arc<AlgebraPresentation>, src: &str) -> Result<Vec<(u32, i128, Expo)>> {
    let mut labels = py.label_map();
    let v1_idx = labels.len();
    labels.insert("v1".to_string(), v1_idx);
    let raw = parse_poly(src, &labels)?;
    let mut out = Vec::new();
    for (m, c) in raw {
        let v1 = m[v1_idx];
        let mono: Expo = m[..v1_idx].to_vec();
        out.push((v1, c, mono));
    }
    Ok(out)
}

fn build_case(file: &CaseFile) -> Result<GroupCase> {
    if !crate::ring::is_prime(file.prime) {
        return Err(Error::Case(format!("{}: prime {} is not prime", file.name, file.prime)));
    }
    let vars: Vec<VarSpec> = file
        .py
        .iter()
        .map(|v| VarSpec {
            label: v.label.clone(),
            chow_degree: v.chow_degree,
            trunc: Some(v.trunc),
        })
        .collect();
    let py = AlgebraPresentation::new(vars, CoefficientRing::Exact)?;
    let parse_elem = |src: &str| -> Result<Element> { Element::parse(&py, src) };

    let mut q_table = BTreeMap::new();
    for e in &file.q_table {
        if !file.x_gens.iter().any(|x| x.label == e.x) {
            return Err(Error::Case(format!(
                "{}: q_table references unknown x-generator {}",
                file.name, e.x
            )));
        }
        q_table.insert((e.n, e.x.clone()), parse_elem(&e.value)?);
    }

    let p = file.prime as i128;
    let mut b_models = Vec::new();
    for b in &file.b_models {
        let value = parse_elem(&b.value)?;
        let v1_form = match &b.v1_form {
            Some(src) => parse_v1_form(&py, src)?,
            None => value
                .terms()
                .map(|(m, c)| (0u32, *c, m.clone()))
                .collect(),
        };
        // v1-form evaluated at v1 = 1 must reproduce the integer model
        let mut at_one = Element::zero(&py);
        for (_, c, m) in &v1_form {
            at_one = at_one.add(&Element::monomial(&py, m, *c))?;
        }
        if at_one != value {
            return Err(Error::Case(format!(
                "{}: v1_form of {} does not evaluate to its element at v1=1",
                file.name, b.label
            )));
        }
        if value.has_unit_part() {
            return Err(Error::Case(format!(
                "{}: model {} has a unit part",
                file.name, b.label
            )));
        }
        // weight-deficit invariant: every monomial sits at most (p-1)-stepwise
        // above the weight
        for (m, _) in value.terms() {
            let d = py.monomial_degree(m);
            if d < b.weight || (d - b.weight) % (file.prime - 1).max(1) != 0 {
                return Err(Error::Case(format!(
                    "{}: model {} monomial of degree {} violates the weight-deficit invariant at weight {}",
                    file.name, b.label, d, b.weight
                )));
            }
        }
        // v1-form bookkeeping: deficit = (p-1) * v1-exponent
        for (v1, _, m) in &v1_form {
            let d = py.monomial_degree(m);
            if d != b.weight + (file.prime - 1) * v1 {
                return Err(Error::Case(format!(
                    "{}: v1-form of {} has an inconsistent v1-exponent on a degree-{} monomial",
                    file.name, b.label, d
                )));
            }
        }
        // q-table consistency against the linked transgressing x-generator
        if let Some(x) = &b.x {
            if !file.x_gens.iter().any(|g| &g.label == x) {
                return Err(Error::Case(format!(
                    "{}: model {} links unknown x-generator {}",
                    file.name, b.label, x
                )));
            }
            let x_deg = file.x_gens.iter().find(|g| &g.label == x).unwrap().degree;
            if x_deg + 1 != 2 * b.weight {
                return Err(Error::Case(format!(
                    "{}: model {} weight {} does not match |{}|+1 = {}",
                    file.name, b.label, b.weight, x, x_deg + 1
                )));
            }
            let mut weight0 = Element::zero(&py);
            let mut deficit1 = Element::zero(&py);
            for (m, c) in value.terms() {
                let d = py.monomial_degree(m);
                if d == b.weight {
                    weight0 = weight0.add(&Element::monomial(&py, m, *c))?;
                } else if d == b.weight + (file.prime - 1) {
                    deficit1 = deficit1.add(&Element::monomial(&py, m, *c))?;
                }
            }
            if let Some(q0) = q_table.get(&(0, x.clone())) {
                if weight0 != q0.scale(p) {
                    return Err(Error::Case(format!(
                        "{}: weight-0 part of {} is not p * Q_0({})",
                        file.name, b.label, x
                    )));
                }
            }
            if let Some(q1) = q_table.get(&(1, x.clone())) {
                if deficit1.reduce_mod(p) != q1.reduce_mod(p) {
                    return Err(Error::Case(format!(
                        "{}: deficit-1 part of {} is not Q_1({}) mod p",
                        file.name, b.label, x
                    )));
                }
            }
        }
        b_models.push(BModel {
            label: b.label.clone(),
            weight: b.weight,
            value,
            v1_form,
            x: b.x.clone(),
        });
    }

    // y_top must be the unique top-degree basis monomial
    let y_top_elem = parse_elem(&file.y_top)?;
    if y_top_elem.num_terms() != 1 {
        return Err(Error::Case(format!("{}: y_top must be a single monomial", file.name)));
    }
    let (y_top, c) = y_top_elem.terms().next().map(|(m, c)| (m.clone(), *c)).unwrap();
    if c != 1 {
        return Err(Error::Case(format!("{}: y_top must have coefficient 1", file.name)));
    }
    let expect_top: Expo = py
        .vars
        .iter()
        .map(|v| v.trunc.unwrap() - 1)
        .collect();
    if y_top != expect_top {
        return Err(Error::Case(format!(
            "{}: y_top is not the product of top truncation powers",
            file.name
        )));
    }

    // duplicate labels
    let mut labels: Vec<&str> = file.b_models.iter().map(|b| b.label.as_str()).collect();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() != file.b_models.len() {
        return Err(Error::Case(format!("{}: duplicate b-model labels", file.name)));
    }

    Ok(GroupCase {
        name: file.name.clone(),
        aliases: file.aliases.clone(),
        prime: file.prime,
        rank: file.rank,
        weyl_order: file.weyl_order,
        py,
        x_gens: file.x_gens.clone(),
        q_table,
        b_models,
        y_top,
        gr_generators: file.gr_generators,
        family: file.family,
        dropped_terms: file.dropped_terms.clone(),
        notes: file.notes.clone(),
        expected: file.expected.clone(),
    })
}

const BUILTIN_CASES: &[&str] = &[
    include_str!("../assets/cases/so5.json"),
    include_str!("../assets/cases/so7.json"),
    include_str!("../assets/cases/spin11.json"),
    include_str!("../assets/cases/typeI_p3.json"),
    include_str!("../assets/cases/typeI_p5.json"),
    include_str!("../assets/cases/e8p3.json"),
    include_str!("../assets/cases/e7p2.json"),
    include_str!("../assets/cases/e8p2.json"),
];

fn external_case_files() -> Vec<(String, String)> {
    let Ok(dir) = std::env::var("GRFLAG_CASE_DIR") else {
        return Vec::new();
    };
    let Ok(entries) = std::fs::read_dir(&dir) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for e in entries.flatten() {
        let path = e.path();
        if path.extension().is_some_and(|x| x == "json") {
            if let Ok(src) = std::fs::read_to_string(&path) {
                out.push((path.display().to_string(), src));
            }
        }
    }
    out.sort();
    out
}

/// Names of all registered cases (built-ins first, then `GRFLAG_CASE_DIR`).
pub fn list_cases() -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for src in BUILTIN_CASES {
        if let Ok(f) = serde_json::from_str::<CaseFile>(src) {
            names.push(f.name);
        }
    }
    for (_, src) in external_case_files() {
        if let Ok(f) = serde_json::from_str::<CaseFile>(&src) {
            if !names.contains(&f.name) {
                names.push(f.name);
            }
        }
    }
    names
}

/// Load a case by name or alias, validating every case invariant; external
/// case files shadow nothing (built-ins win on name clashes).
pub fn load_case(name: &str) -> Result<GroupCase> {
    let target = name.to_lowercase();
    for src in BUILTIN_CASES {
        let f: CaseFile = serde_json::from_str(src)?;
        if f.name.to_lowercase() == target
            || f.aliases.iter().any(|a| a.to_lowercase() == target)
        {
            return build_case(&f);
        }
    }
    for (path, src) in external_case_files() {
        let f: CaseFile = serde_json::from_str(&src)
            .map_err(|e| Error::Case(format!("{path}: {e}")))?;
        if f.name.to_lowercase() == target
            || f.aliases.iter().any(|a| a.to_lowercase() == target)
        {
            return build_case(&f);
        }
    }
    Err(Error::Case(format!("unknown case '{name}'")))
}

/// Load from an explicit JSON file.
pub fn load_case_file(path: &str) -> Result<GroupCase> {
    let src = std::fs::read_to_string(path)?;
    let f: CaseFile = serde_json::from_str(&src)?;
    build_case(&f)
}

/// An element of `Lambda(x_1,...,x_l) (x) P(y)`: sparse map from squarefree
/// x-words (bitmask over the case's x-generators) to P(y)-elements.
#[derive(Debug, Clone, PartialEq)]
pub struct XElement {
    pub terms: BTreeMap<u64, Element>,
}

impl XElement {
    pub fn zero() -> Self {
        XElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_py(e: Element) -> Self {
        let mut t = BTreeMap::new();
        if !e.is_zero() {
            t.insert(0u64, e);
        }
        XElement { terms: t }
    }

    pub fn x_gen(case: &GroupCase, label: &str) -> Result<Self> {
        let idx = case
            .x_gens
            .iter()
            .position(|x| x.label == label)
            .ok_or_else(|| Error::Case(format!("unknown x-generator {label}")))?;
        let mut t = BTreeMap::new();
        t.insert(1u64 << idx, Element::one(&case.py));
        Ok(XElement { terms: t })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.terms.clone();
        for (mask, e) in &other.terms {
            let cur = match out.get(mask) {
                Some(c) => c.add(e)?,
                None => e.clone(),
            };
            if cur.is_zero() {
                out.remove(mask);
            } else {
                out.insert(*mask, cur);
            }
        }
        Ok(XElement { terms: out })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = XElement::zero();
        for (ma, ea) in &self.terms {
            for (mb, eb) in &other.terms {
                if ma & mb != 0 {
                    continue; // repeated odd generator squares to zero here
                }
                // Koszul sign: count inversions between the two masks
                let mut sign = 1i128;
                for i in 0..64 {
                    if mb >> i & 1 == 1 {
                        let higher = ma >> (i + 1);
                        if higher.count_ones() % 2 == 1 {
                            sign = -sign;
                        }
                    }
                }
                let prod = ea.mul(eb)?.scale(sign);
                if prod.is_zero() {
                    continue;
                }
                let mask = ma | mb;
                let cur = match out.terms.get(&mask) {
                    Some(c) => c.add(&prod)?,
                    None => prod,
                };
                if cur.is_zero() {
                    out.terms.remove(&mask);
                } else {
                    out.terms.insert(mask, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Apply the Milnor operation `Q_n` as an odd derivation: `Q_n` is tabled on
/// the x-generators and vanishes on `P(y)`.
///
/// Errors when a required table entry is missing.
pub fn apply_q(case: &GroupCase, n: u32, e: &XElement) -> Result<XElement> {
    let mut out = XElement::zero();
    for (mask, coeff) in &e.terms {
        let mut sign = 1i128;
        for i in 0..case.x_gens.len() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let label = &case.x_gens[i].label;
            let q = case.q_value(n, label).ok_or_else(|| {
                Error::Case(format!("Q_{n}({label}) is not tabled for {}", case.name))
            })?;
            let rest = mask & !(1u64 << i);
            let contrib = coeff.mul(q)?.scale(sign);
            if !contrib.is_zero() {
                let term = XElement {
                    terms: BTreeMap::from([(rest, contrib)]),
                };
                out = out.add(&term)?;
            }
            sign = -sign; // passing Q_n over the odd generator x_i
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum AnticommuteStatus {
    Zero,
    NotCheckable,
    Nonzero(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct AnticommuteReport {
    pub i: u32,
    pub j: u32,
    pub per_generator: Vec<(String, AnticommuteStatus)>,
    pub failures: usize,
}

/// Check `Q_i Q_j + Q_j Q_i = 0` on every tabled x-generator (and `Q_n^2 = 0`
/// when `i == j`). Untabled compositions are reported, never passed.
pub fn q_anticommute_check(case: &GroupCase, i: u32, j: u32) -> AnticommuteReport {
    let mut rows = Vec::new();
    let mut failures = 0;
    for x in &case.x_gens {
        let tabled = |n: u32| case.q_value(n, &x.label).is_some();
        if !tabled(i) || !tabled(j) {
            rows.push((x.label.clone(), AnticommuteStatus::NotCheckable));
            continue;
        }
        let xe = XElement::x_gen(case, &x.label).unwrap();
        let qj = apply_q(case, j, &xe).unwrap();
        let qi = apply_q(case, i, &xe).unwrap();
        // outer applications act on pure P(y) parts unless a table entry is
        // missing for some surviving x-letter
        let qiqj = apply_q(case, i, &qj);
        let qjqi = apply_q(case, j, &qi);
        match (qiqj, qjqi) {
            (Ok(a), Ok(b)) => {
                let sum = a.add(&b).unwrap();
                if sum.is_zero() {
                    rows.push((x.label.clone(), AnticommuteStatus::Zero));
                } else {
                    failures += 1;
                    rows.push((x.label.clone(), AnticommuteStatus::Nonzero(format!("{sum:?}"))));
                }
            }
            _ => rows.push((x.label.clone(), AnticommuteStatus::NotCheckable)),
        }
    }
    AnticommuteReport {
        i,
        j,
        per_generator: rows,
        failures,
    }
}

/// For spin families: the P(y)' element modeled by `y_{2i}`, resolving the
/// square rule `y_{4i} = y_{2i}^2` and killing powers of `y_2` (those classes
/// live in the S(t)-part of the splitting).
pub fn spin_resolve_y(case: &GroupCase, even_degree: u32) -> Result<Element> {
    if !even_degree.is_multiple_of(2) {
        return Err(Error::Case(format!("y_{even_degree} is not an even class")));
    }
    let mut m = even_degree / 2; // index i in y_{2i}
    let mut power = 1u32;
    while m.is_multiple_of(2) {
        m /= 2;
        power *= 2;
    }
    if m == 1 {
        return Ok(Element::zero(&case.py)); // a power of y_2
    }
    let label = format!("y{}", 2 * m);
    match case.py.var_index(&label) {
        None => Ok(Element::zero(&case.py)), // beyond the truncation range
        Some(_) => Element::var(&case.py, &label)?.pow(power),
    }
}
