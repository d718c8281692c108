//! Quotient construction: the rational Chen-Ruan cohomology ring of the
//! weighted projective (symplectic) or weighted hyperprojective (hyper)
//! quotient, obtained from the sector subring by a per-sector kernel ideal,
//! plus the multivariable presentation of the same ring in one `u_i` variable
//! per coordinate.
//!
//! Over Q the kernel generator of sector `g` normalizes to the monic power
//! `u^{|S_g|} a_g`. The conjectural integral model keeps the weight factors of
//! the kernel generators instead of normalizing them away; its output is
//! tagged and never used as verified ground truth.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::inertial::{closed_form_exponents, unit_product, ProductMonomial};
use crate::lattice::kernel_basis;
use crate::rational::Rational;
use crate::weights::{default_order, weight_list_string, CircleWeightSystem, Mode, Sector};

/// The lattice data of the circle inclusion: the weight covector, a canonical
/// basis of its kernel lattice, and the covector's restriction to each
/// sector's fixed coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMaps {
    pub iota: Vec<i64>,
    pub j_generators: Vec<Vec<BigInt>>,
    /// Indexed by sector residue: the weights restricted to the fixed set.
    pub per_sector_iota: Vec<Vec<i64>>,
}

pub fn lattice_maps(ws: &CircleWeightSystem) -> Result<LatticeMaps, Error> {
    if ws.weights().iter().all(|&w| w == 0) {
        return Err(Error::DegenerateWeights);
    }
    let iota = ws.weights().to_vec();
    let j_generators = kernel_basis(&iota);
    // Substituting u_i -> b_i u must annihilate every generator.
    for row in &j_generators {
        let dot: BigInt = row.iter().zip(&iota).map(|(r, &w)| r * BigInt::from(w)).sum();
        assert!(dot.is_zero(), "kernel generator not orthogonal to the weights");
    }
    let per_sector_iota = ws
        .sectors()
        .map(|s| s.fixed.iter().map(|&i| iota[i]).collect())
        .collect();
    Ok(LatticeMaps { iota, j_generators, per_sector_iota })
}

/// The kernel of the quotient surjection as a monomial ideal: one generator
/// `u^{d_g} a_g` per sector, with `d_g = |S_g|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelIdeal {
    pub generators: Vec<(u64, u32)>,
}

fn require_quotient(ws: &CircleWeightSystem) -> Result<(), Error> {
    if !ws.all_positive() {
        return Err(Error::PositivityRequired);
    }
    let lcm = default_order(ws.weights());
    if ws.order() != lcm {
        return Err(Error::OrderMismatch { order: ws.order(), lcm });
    }
    Ok(())
}

pub fn truncation_exponents(ws: &CircleWeightSystem) -> Result<KernelIdeal, Error> {
    require_quotient(ws)?;
    let generators: Vec<(u64, u32)> = ws.sectors().map(|s| (s.g, s.fixed.len() as u32)).collect();
    assert_eq!(generators[0].1 as usize, ws.dim(), "identity sector must fix everything");
    Ok(KernelIdeal { generators })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientTag {
    /// Verified output over the rationals.
    Rational,
    /// Integral model suggested by the integral sector presentation; tagged,
    /// not certified.
    IntegerConjectural,
}

impl fmt::Display for CoefficientTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientTag::Rational => write!(f, "Q"),
            CoefficientTag::IntegerConjectural => write!(f, "Z-conjectural"),
        }
    }
}

/// A quotient-ring basis monomial `u^{u_power} a_{sector}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub sector: u64,
    pub u_power: u32,
    pub degree: Rational,
}

impl BasisElement {
    pub fn label(&self) -> String {
        format!("u^{}*a{}", self.u_power, self.sector)
    }

    fn parse_label(label: &str) -> Result<(u32, u64), Error> {
        let bad = || Error::Parse(format!("invalid basis label `{label}`"));
        let rest = label.strip_prefix("u^").ok_or_else(bad)?;
        let (power, sector) = rest.split_once("*a").ok_or_else(bad)?;
        Ok((power.parse().map_err(|_| bad())?, sector.parse().map_err(|_| bad())?))
    }
}

/// One conjectural integral kernel generator:
/// `coefficient * u^{u_exponent} a_{sector}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralKernelGenerator {
    pub sector: u64,
    pub coefficient: BigInt,
    pub u_exponent: u32,
}

impl fmt::Display for IntegralKernelGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} u^{} a{}", self.coefficient, self.u_exponent, self.sector)
    }
}

/// A finite-dimensional graded commutative algebra on the monomial basis
/// `{u^k a_g : 0 <= k < d_g}` with sparse structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGradedAlgebra {
    pub weights: Vec<i64>,
    pub mode: Mode,
    pub order: u64,
    pub sectors: Vec<Sector>,
    /// `d_g` per sector.
    pub truncation: Vec<u32>,
    pub basis: Vec<BasisElement>,
    /// Products of basis pairs, keyed by `(i, j)` with `i <= j`; missing keys
    /// are zero products.
    pub constants: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    pub coefficients: CoefficientTag,
    /// Present only on conjectural integral output.
    pub integral_kernel: Option<Vec<IntegralKernelGenerator>>,
}

/// The rational Chen-Ruan cohomology ring of the quotient.
pub fn cr_algebra(ws: &CircleWeightSystem) -> Result<FiniteGradedAlgebra, Error> {
    build_algebra(ws, CoefficientTag::Rational)
}

/// The conjectural integral model: same monomial basis and constants, but the
/// kernel generators keep their weight factors instead of being normalized to
/// monic powers.
pub fn conjectural_integral_algebra(ws: &CircleWeightSystem) -> Result<FiniteGradedAlgebra, Error> {
    let mut algebra = build_algebra(ws, CoefficientTag::IntegerConjectural)?;
    for terms in algebra.constants.values() {
        for (_, c) in terms {
            assert!(c.is_integer(), "conjectural integral model has a fractional constant");
        }
    }
    let gens = algebra
        .sectors
        .iter()
        .map(|s| {
            let mut coefficient = BigInt::one();
            for &j in &s.fixed {
                let b = BigInt::from(algebra.weights[j]);
                coefficient *= match algebra.mode {
                    Mode::Symplectic => b,
                    Mode::Hyper => &b * &b,
                };
            }
            IntegralKernelGenerator { sector: s.g, coefficient, u_exponent: s.fixed.len() as u32 }
        })
        .collect();
    algebra.integral_kernel = Some(gens);
    Ok(algebra)
}

fn build_algebra(
    ws: &CircleWeightSystem,
    coefficients: CoefficientTag,
) -> Result<FiniteGradedAlgebra, Error> {
    require_quotient(ws)?;
    let m = ws.order();
    let sectors: Vec<Sector> = ws.sectors().collect();
    let truncation: Vec<u32> = sectors.iter().map(|s| s.fixed.len() as u32).collect();

    let mut basis = Vec::new();
    let mut offsets = Vec::with_capacity(m as usize);
    for (g, s) in sectors.iter().enumerate() {
        offsets.push(basis.len());
        for k in 0..truncation[g] {
            basis.push(BasisElement {
                sector: s.g,
                u_power: k,
                degree: Rational::from_integer(2 * k as i64) + &s.cr_degree,
            });
        }
    }
    assert_eq!(basis.len(), sectors.iter().map(|s| s.fixed.len()).sum::<usize>());

    let mut memo: BTreeMap<(u64, u64), ProductMonomial> = BTreeMap::new();
    let mut unit = |g: u64, h: u64| -> ProductMonomial {
        let key = (g.min(h), g.max(h));
        memo.entry(key)
            .or_insert_with(|| {
                let p = unit_product(ws, key.0, key.1);
                debug_assert_eq!(p, unit_product(ws, key.1, key.0), "unit product not symmetric");
                p
            })
            .clone()
    };

    let mut constants = BTreeMap::new();
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let p = unit(basis[i].sector, basis[j].sector);
            let exponent = basis[i].u_power + basis[j].u_power + p.u_exponent;
            if exponent < truncation[p.target as usize] {
                let k = offsets[p.target as usize] + exponent as usize;
                constants
                    .insert((i, j), vec![(k, Rational::from_integer(p.coefficient.clone()))]);
            }
        }
    }

    // The kernel must be an ideal: a killed monomial times any basis monomial
    // stays killed, i.e. d_g + e(g,h) >= d_{[g+h]}. Exhaustive over all
    // sector pairs for small orders; for large orders every kernel sector is
    // checked against the populated ones.
    let populated: Vec<u64> = (0..m).filter(|&g| truncation[g as usize] > 0).collect();
    let pairs: Box<dyn Iterator<Item = (u64, u64)>> = if m <= 512 {
        Box::new((0..m).flat_map(move |g| (g..m).map(move |h| (g, h))))
    } else {
        Box::new((0..m).flat_map(move |g| populated.clone().into_iter().map(move |h| (g, h))))
    };
    for (g, h) in pairs {
        let p = unit(g, h);
        let smaller = truncation[g as usize].min(truncation[h as usize]);
        assert!(
            smaller + p.u_exponent >= truncation[p.target as usize],
            "kernel fails the ideal property at sectors ({g}, {h})"
        );
    }

    let algebra = FiniteGradedAlgebra {
        weights: ws.weights().to_vec(),
        mode: ws.mode(),
        order: m,
        sectors,
        truncation,
        basis,
        constants,
        coefficients,
        integral_kernel: None,
    };
    algebra.validate();
    Ok(algebra)
}

impl FiniteGradedAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Index of the multiplicative identity `u^0 a_0`.
    pub fn identity_index(&self) -> usize {
        0
    }

    /// The product of basis elements `i` and `j` as (index, coefficient)
    /// terms; empty means zero.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        let key = (i.min(j), i.max(j));
        self.constants.get(&key).map_or(&[], |v| v.as_slice())
    }

    /// Dimension of each graded piece, keyed by degree.
    pub fn hilbert(&self) -> BTreeMap<Rational, usize> {
        let mut out = BTreeMap::new();
        for b in &self.basis {
            *out.entry(b.degree.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Unitality and degree additivity of the finished table; commutativity
    /// is structural (constants are stored for unordered pairs). Panics on
    /// violation.
    fn validate(&self) {
        let id = self.identity_index();
        assert_eq!(self.basis[id].u_power, 0);
        assert_eq!(self.basis[id].sector, 0);
        for j in 0..self.dim() {
            assert_eq!(
                self.product(id, j),
                &[(j, Rational::one())],
                "basis element {j} not fixed by the identity"
            );
        }
        for ((i, j), terms) in &self.constants {
            for (k, c) in terms {
                assert!(!c.is_zero());
                assert_eq!(
                    &self.basis[*i].degree + &self.basis[*j].degree,
                    self.basis[*k].degree,
                    "structure constant violates degree additivity"
                );
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "chen-ruan algebra weights={} mode={} order={} coefficients={}\n",
            weight_list_string(&self.weights),
            self.mode,
            self.order,
            self.coefficients
        );
        if self.coefficients == CoefficientTag::IntegerConjectural {
            out.push_str("CONJECTURAL: integral model; not certified output\n");
        }
        out.push_str(&format!("dimension {}\n", self.dim()));
        for (s, d) in self.sectors.iter().zip(&self.truncation) {
            let fixed =
                s.fixed.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
            out.push_str(&format!(
                "sector {}: fixed={{{fixed}}} age={} degree={} truncation={d}\n",
                s.g, s.age, s.cr_degree
            ));
        }
        out.push_str("basis:");
        for b in &self.basis {
            out.push_str(&format!(" {}", b.label()));
        }
        out.push('\n');
        out.push_str("hilbert:");
        for (deg, dim) in self.hilbert() {
            out.push_str(&format!(" {deg}:{dim}"));
        }
        out.push('\n');
        if let Some(gens) = &self.integral_kernel {
            out.push_str("integral kernel:");
            for g in gens {
                out.push_str(&format!(" [{g}]"));
            }
            out.push('\n');
        }
        out.push_str("nonzero products (i <= j):\n");
        for ((i, j), terms) in &self.constants {
            let rhs = terms
                .iter()
                .map(|(k, c)| format!("{c} {}", self.basis[*k].label()))
                .collect::<Vec<_>>()
                .join(" + ");
            out.push_str(&format!(
                "{} * {} = {rhs}\n",
                self.basis[*i].label(),
                self.basis[*j].label()
            ));
        }
        out
    }

    /// Single-`u` quotient presentation: sector relations among nonidentity
    /// units plus the truncation monomials.
    pub fn to_latex(&self) -> String {
        let ws = CircleWeightSystem::with_order(self.weights.clone(), self.mode, self.order)
            .expect("stored system is valid");
        let field = match self.coefficients {
            CoefficientTag::Rational => "\\mathbb{Q}".to_string(),
            CoefficientTag::IntegerConjectural => "\\mathbb{Z}\\,(\\text{conjectural})".to_string(),
        };
        let gens = (1..self.order).map(|g| format!(", \\alpha_{{{g}}}")).collect::<String>();
        let mut ideal: Vec<String> = Vec::new();
        for g in 1..self.order {
            for h in g..self.order {
                let p = unit_product(&ws, g, h);
                ideal.push(format!(
                    "\\alpha_{{{g}}} \\alpha_{{{h}}} - {}",
                    crate::inertial::latex_monomial(&p)
                ));
            }
        }
        match &self.integral_kernel {
            None => {
                for (s, d) in self.sectors.iter().zip(&self.truncation) {
                    ideal.push(latex_kernel_monomial(s.g, &BigInt::one(), *d));
                }
            }
            Some(gens) => {
                for g in gens {
                    ideal.push(latex_kernel_monomial(g.sector, &g.coefficient, g.u_exponent));
                }
            }
        }
        let degrees = std::iter::once("\\deg u = 2".to_string())
            .chain(
                self.sectors
                    .iter()
                    .skip(1)
                    .map(|s| format!("\\deg \\alpha_{{{}}} = {}", s.g, s.cr_degree)),
            )
            .collect::<Vec<_>>()
            .join(",\\ ");
        format!(
            "H^*_{{CR}} \\cong {field}[u{gens}] / \\langle {} \\rangle,\\quad {degrees}\n",
            ideal.join(",\\ ")
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("weights".into(), self.weights.iter().copied().collect());
        obj.insert("mode".into(), self.mode.to_string().into());
        obj.insert("order".into(), self.order.into());
        obj.insert(
            "sectors".into(),
            self.sectors
                .iter()
                .zip(&self.truncation)
                .map(|(s, d)| {
                    let mut sec = serde_json::Map::new();
                    sec.insert("g".into(), s.g.into());
                    sec.insert("fixed".into(), s.fixed.iter().map(|&i| i as u64).collect());
                    sec.insert("age".into(), s.age.to_string().into());
                    sec.insert("degree".into(), s.cr_degree.to_string().into());
                    sec.insert("truncation".into(), (*d).into());
                    serde_json::Value::Object(sec)
                })
                .collect(),
        );
        obj.insert(
            "basis".into(),
            self.basis
                .iter()
                .map(|b| {
                    let mut el = serde_json::Map::new();
                    el.insert("label".into(), b.label().into());
                    el.insert("degree".into(), b.degree.to_string().into());
                    serde_json::Value::Object(el)
                })
                .collect(),
        );
        obj.insert(
            "structure_constants".into(),
            self.constants
                .iter()
                .map(|((i, j), terms)| {
                    let terms: serde_json::Value = terms
                        .iter()
                        .map(|(k, c)| serde_json::json!([k, c.to_string()]))
                        .collect();
                    serde_json::json!([i, j, terms])
                })
                .collect(),
        );
        let mut hilbert = serde_json::Map::new();
        for (deg, dim) in self.hilbert() {
            hilbert.insert(deg.to_string(), dim.into());
        }
        obj.insert("hilbert".into(), serde_json::Value::Object(hilbert));
        obj.insert("coefficients".into(), self.coefficients.to_string().into());
        if let Some(gens) = &self.integral_kernel {
            obj.insert(
                "kernel_generators".into(),
                gens.iter()
                    .map(|g| serde_json::json!([g.sector, g.coefficient.to_string(), g.u_exponent]))
                    .collect(),
            );
        }
        serde_json::Value::Object(obj)
    }

    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json_str(s: &str) -> Result<FiniteGradedAlgebra, Error> {
        let value: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&value)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<FiniteGradedAlgebra, Error> {
        let missing = |field: &str| Error::Parse(format!("missing or invalid field `{field}`"));
        let obj = value.as_object().ok_or_else(|| missing("algebra"))?;
        let weights: Vec<i64> = obj
            .get("weights")
            .and_then(|v| v.as_array())
            .ok_or_else(|| missing("weights"))?
            .iter()
            .map(|w| w.as_i64().ok_or_else(|| missing("weights")))
            .collect::<Result<_, _>>()?;
        let mode: Mode = obj
            .get("mode")
            .and_then(|v| v.as_str())
            .ok_or_else(|| missing("mode"))?
            .to_ascii_lowercase()
            .parse()?;
        let order =
            obj.get("order").and_then(|v| v.as_u64()).ok_or_else(|| missing("order"))?;
        let mut sectors = Vec::new();
        let mut truncation = Vec::new();
        for sec in
            obj.get("sectors").and_then(|v| v.as_array()).ok_or_else(|| missing("sectors"))?
        {
            let g = sec.get("g").and_then(|v| v.as_u64()).ok_or_else(|| missing("sectors.g"))?;
            let fixed = sec
                .get("fixed")
                .and_then(|v| v.as_array())
                .ok_or_else(|| missing("sectors.fixed"))?
                .iter()
                .map(|v| v.as_u64().map(|x| x as usize).ok_or_else(|| missing("sectors.fixed")))
                .collect::<Result<_, _>>()?;
            let age: Rational = sec
                .get("age")
                .and_then(|v| v.as_str())
                .ok_or_else(|| missing("sectors.age"))?
                .parse()?;
            let cr_degree: Rational = sec
                .get("degree")
                .and_then(|v| v.as_str())
                .ok_or_else(|| missing("sectors.degree"))?
                .parse()?;
            truncation.push(
                sec.get("truncation")
                    .and_then(|v| v.as_u64())
                    .ok_or_else(|| missing("sectors.truncation"))? as u32,
            );
            sectors.push(Sector { g, fixed, age, cr_degree });
        }
        let mut basis = Vec::new();
        for el in obj.get("basis").and_then(|v| v.as_array()).ok_or_else(|| missing("basis"))? {
            let label = el
                .get("label")
                .and_then(|v| v.as_str())
                .ok_or_else(|| missing("basis.label"))?;
            let degree: Rational = el
                .get("degree")
                .and_then(|v| v.as_str())
                .ok_or_else(|| missing("basis.degree"))?
                .parse()?;
            let (u_power, sector) = BasisElement::parse_label(label)?;
            basis.push(BasisElement { sector, u_power, degree });
        }
        let mut constants = BTreeMap::new();
        for row in obj
            .get("structure_constants")
            .and_then(|v| v.as_array())
            .ok_or_else(|| missing("structure_constants"))?
        {
            let row = row.as_array().ok_or_else(|| missing("structure_constants"))?;
            if row.len() != 3 {
                return Err(missing("structure_constants"));
            }
            let i = row[0].as_u64().ok_or_else(|| missing("structure_constants"))? as usize;
            let j = row[1].as_u64().ok_or_else(|| missing("structure_constants"))? as usize;
            let mut terms = Vec::new();
            for t in row[2].as_array().ok_or_else(|| missing("structure_constants"))? {
                let t = t.as_array().ok_or_else(|| missing("structure_constants"))?;
                if t.len() != 2 {
                    return Err(missing("structure_constants"));
                }
                let k = t[0].as_u64().ok_or_else(|| missing("structure_constants"))? as usize;
                let c: Rational =
                    t[1].as_str().ok_or_else(|| missing("structure_constants"))?.parse()?;
                terms.push((k, c));
            }
            constants.insert((i, j), terms);
        }
        let coefficients = match obj.get("coefficients").and_then(|v| v.as_str()) {
            Some("Q") => CoefficientTag::Rational,
            Some("Z-conjectural") => CoefficientTag::IntegerConjectural,
            _ => return Err(missing("coefficients")),
        };
        let integral_kernel = match obj.get("kernel_generators") {
            None => None,
            Some(v) => {
                let mut gens = Vec::new();
                for g in v.as_array().ok_or_else(|| missing("kernel_generators"))? {
                    let g = g.as_array().ok_or_else(|| missing("kernel_generators"))?;
                    if g.len() != 3 {
                        return Err(missing("kernel_generators"));
                    }
                    gens.push(IntegralKernelGenerator {
                        sector: g[0].as_u64().ok_or_else(|| missing("kernel_generators"))?,
                        coefficient: g[1]
                            .as_str()
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| missing("kernel_generators"))?,
                        u_exponent: g[2].as_u64().ok_or_else(|| missing("kernel_generators"))?
                            as u32,
                    });
                }
                Some(gens)
            }
        };
        Ok(FiniteGradedAlgebra {
            weights,
            mode,
            order,
            sectors,
            truncation,
            basis,
            constants,
            coefficients,
            integral_kernel,
        })
    }
}

fn latex_kernel_monomial(sector: u64, coefficient: &BigInt, exponent: u32) -> String {
    let mut out = String::new();
    if !coefficient.is_one() {
        out.push_str(&format!("{coefficient} "));
    }
    if exponent > 0 {
        out.push_str(&format!("u^{{{exponent}}}"));
    }
    if sector != 0 {
        if exponent > 0 {
            out.push(' ');
        }
        out.push_str(&format!("\\alpha_{{{sector}}}"));
    } else if exponent == 0 {
        out.push('1');
    }
    out
}

fn linear_form(row: &[BigInt], var: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (i, c) in row.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if mag.is_one() {
            out.push_str(&var(i));
        } else {
            out.push_str(&format!("{mag}*{}", var(i)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Rendered lines of the three ideals, in order.
struct IdealLines {
    relations: Vec<String>,
    linear: Vec<String>,
    kernel: Vec<String>,
}

fn ideal_lines(
    ws: &CircleWeightSystem,
    var: &impl Fn(usize) -> String,
    alpha: &impl Fn(u64) -> String,
) -> Result<IdealLines, Error> {
    let maps = lattice_maps(ws)?;
    let m = ws.order();
    let mut i_lines = Vec::new();
    for g in 0..m {
        for h in g..m {
            let exponents = closed_form_exponents(ws, g, h)?;
            let target = ws.add_residues(g, h);
            let mut factors = String::new();
            for (i, &(base_exp, fiber_exp)) in exponents.iter().enumerate() {
                if base_exp == 1 {
                    factors.push_str(&format!("({} {})", ws.weights()[i], var(i)));
                }
                if fiber_exp == 1 {
                    factors.push_str(&format!("({} {})", -ws.weights()[i], var(i)));
                }
            }
            if factors.is_empty() {
                i_lines.push(format!("{}*{} = {}", alpha(g), alpha(h), alpha(target)));
            } else {
                i_lines.push(format!("{}*{} = {}*{factors}", alpha(g), alpha(h), alpha(target)));
            }
        }
    }
    let linear = maps.j_generators.iter().map(|row| linear_form(row, var)).collect();
    let kernel = ws
        .sectors()
        .map(|s| {
            let mut line = alpha(s.g);
            if !s.fixed.is_empty() {
                line.push('*');
                for &j in &s.fixed {
                    line.push_str(&format!("({} {})", ws.weights()[j], var(j)));
                }
            }
            line
        })
        .collect();
    Ok(IdealLines { relations: i_lines, linear, kernel })
}

/// The three-ideal presentation of the quotient ring in one variable per
/// coordinate: the sector relations with `(b_i u_i)` factors, the linear
/// relations spanned by the kernel lattice, and one kernel generator
/// `a_g*(b_j u_j)...` per sector over its fixed coordinates.
pub fn multivariable_presentation(ws: &CircleWeightSystem) -> Result<String, Error> {
    require_quotient(ws)?;
    let lines = ideal_lines(ws, &|i| format!("u{i}"), &|g| format!("a{g}"))?;
    let mut out = format!(
        "ring Q[u0..u{}, a0..a{}] mode={} weights={} order={}\n",
        ws.dim() - 1,
        ws.order() - 1,
        ws.mode(),
        ws.weights_string(),
        ws.order()
    );
    out.push_str("I:\n");
    for line in &lines.relations {
        out.push_str(line);
        out.push('\n');
    }
    out.push_str("J:\n");
    for line in &lines.linear {
        out.push_str(line);
        out.push('\n');
    }
    out.push_str("K:\n");
    for line in &lines.kernel {
        out.push_str(line);
        out.push('\n');
    }
    Ok(out)
}

/// LaTeX form of [`multivariable_presentation`].
pub fn multivariable_presentation_latex(ws: &CircleWeightSystem) -> Result<String, Error> {
    require_quotient(ws)?;
    let lines = ideal_lines(ws, &|i| format!("u_{{{i}}}"), &|g| format!("\\alpha_{{{g}}}"))?;
    let mut out = format!(
        "H^*_{{CR}} \\cong \\mathbb{{Q}}[u_0, \\ldots, u_{{{}}}, \\alpha_0, \\ldots, \\alpha_{{{}}}] / (\\mathcal{{I}} + \\mathcal{{J}} + \\mathcal{{K}})\n",
        ws.dim() - 1,
        ws.order() - 1
    );
    out.push_str(&format!("\\mathcal{{I}} = \\langle {} \\rangle\n", lines.relations.join(",\\ ")));
    out.push_str(&format!("\\mathcal{{J}} = \\langle {} \\rangle\n", lines.linear.join(",\\ ")));
    out.push_str(&format!("\\mathcal{{K}} = \\langle {} \\rangle\n", lines.kernel.join(",\\ ")));
    Ok(out)
}
