//! The sector product of inertial cohomology for diagonal circle actions, and
//! the resulting ring presentation.
//!
//! Two independent routes compute the product of sector unit classes:
//!
//! * [`obstruction_data`] evaluates, coordinate line by coordinate line, the
//!   defining logweight-sum conditions for the obstruction bundle and the
//!   pushforward planes, and multiplies out the equivariant Euler classes.
//!   This route works for any weights and any sector order.
//! * [`unit_product_closed_form`] evaluates the closed-form exponent formula
//!   of the presentation ideal. It applies only to nonnegative weights with
//!   the default sector order, and must agree with the first route there —
//!   the `check` suites enforce this.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::poly::UPoly;
use crate::rational::Rational;
use crate::weights::{CircleWeightSystem, Mode};

/// Per-pair obstruction and pushforward data for sector units `g`, `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionData {
    /// Base-copy coordinate lines in the obstruction bundle: the logweights of
    /// g, h, and (g+h)^-1 with respect to the line's weight sum to 2.
    pub base: Vec<usize>,
    /// Fiber-copy obstruction lines (always empty in symplectic mode).
    pub fiber: Vec<usize>,
    /// Coordinates fixed by g+h but not by g and h: the normal directions of
    /// the pushforward.
    pub pushforward: Vec<usize>,
    /// Together with `u_exponent`, the product of all Euler-class factors:
    /// the virtual fundamental class times the pushforward class.
    pub euler_coefficient: BigInt,
    pub u_exponent: u32,
}

impl ObstructionData {
    pub fn euler_upoly(&self) -> UPoly {
        UPoly::monomial(self.u_exponent, Rational::from_integer(self.euler_coefficient.clone()))
    }
}

/// The product of two sector unit classes: a single monomial
/// `coefficient * u^u_exponent` in the target sector `[g+h]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductMonomial {
    pub target: u64,
    pub coefficient: BigInt,
    pub u_exponent: u32,
}

/// Renders as `c u^e a{k}`, the wire form used by the CLI.
impl fmt::Display for ProductMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} u^{} a{}", self.coefficient, self.u_exponent, self.target)
    }
}

/// Definitional route: tests the logweight-sum conditions on every coordinate
/// line exactly.
///
/// In hyper mode the coefficient is
/// `prod_{j in base} b_j * prod_{k in fiber} (-b_k) * prod_{i in pushforward} (-b_i^2)`
/// with `u_exponent = |base| + |fiber| + 2|pushforward|`; in symplectic mode
/// there are no fiber lines, pushforward coordinates contribute `+b_i`, and
/// `u_exponent = |base| + |pushforward|`.
pub fn obstruction_data(ws: &CircleWeightSystem, g: u64, h: u64) -> ObstructionData {
    let m = ws.order();
    let g = g % m;
    let h = h % m;
    let sum = ws.add_residues(g, h);
    let inv_sum = ws.neg_residue(sum);
    let two = Rational::from_integer(2);

    let mut base = Vec::new();
    let mut fiber = Vec::new();
    let mut pushforward = Vec::new();
    let mut coefficient = BigInt::one();
    let mut u_exponent = 0u32;

    for (i, &w) in ws.weights().iter().enumerate() {
        let triple = |weight: i64| {
            ws.logweight_of(weight, g) + ws.logweight_of(weight, h) + ws.logweight_of(weight, inv_sum)
        };
        if triple(w) == two {
            base.push(i);
            coefficient *= BigInt::from(w);
            u_exponent += 1;
        }
        if ws.mode() == Mode::Hyper && triple(-w) == two {
            fiber.push(i);
            coefficient *= BigInt::from(-w);
            u_exponent += 1;
        }
        let gw = ws.reduce(w as i128 * g as i128);
        let hw = ws.reduce(w as i128 * h as i128);
        let sw = ws.reduce(w as i128 * sum as i128);
        if gw != 0 && hw != 0 && sw == 0 {
            pushforward.push(i);
            match ws.mode() {
                Mode::Symplectic => {
                    coefficient *= BigInt::from(w);
                    u_exponent += 1;
                }
                Mode::Hyper => {
                    coefficient *= -BigInt::from(w) * BigInt::from(w);
                    u_exponent += 2;
                }
            }
        }
    }

    ObstructionData { base, fiber, pushforward, euler_coefficient: coefficient, u_exponent }
}

/// Product of the unit classes of sectors `g` and `h` via the definitional
/// route. Total on all weight systems.
pub fn unit_product(ws: &CircleWeightSystem, g: u64, h: u64) -> ProductMonomial {
    let data = obstruction_data(ws, g, h);
    ProductMonomial {
        target: ws.add_residues(g % ws.order(), h % ws.order()),
        coefficient: data.euler_coefficient,
        u_exponent: data.u_exponent,
    }
}

fn require_closed_form(ws: &CircleWeightSystem) -> Result<(), Error> {
    if !ws.is_nonnegative() {
        return Err(Error::ClosedFormInapplicable(
            "the closed form is stated for nonnegative weights only; use the definitional route"
                .into(),
        ));
    }
    if !ws.has_default_order() {
        return Err(Error::ClosedFormInapplicable(
            "the closed form is stated for the default sector order only; use the definitional route"
                .into(),
        ));
    }
    Ok(())
}

/// Per-coordinate exponent pairs of the closed-form ideal:
/// `([b_i g] + [b_i h] - [b_i (g+h)]) / m` for the base factor `(b_i u)` and
/// the same with negated weights for the fiber factor `(-b_i u)`.
///
/// Each exponent is exactly 0 or 1; symplectic mode uses only the base one.
pub fn closed_form_exponents(
    ws: &CircleWeightSystem,
    g: u64,
    h: u64,
) -> Result<Vec<(u32, u32)>, Error> {
    require_closed_form(ws)?;
    let m = ws.order();
    let g = g % m;
    let h = h % m;
    let sum = ws.add_residues(g, h);
    let exponent = |w: i64| -> u32 {
        let bracket = |x: i64, r: u64| crate::weights::residue(x as i128 * r as i128, m) as i128;
        let numer = bracket(w, g) + bracket(w, h) - bracket(w, sum);
        debug_assert_eq!(numer.rem_euclid(m as i128), 0, "closed-form numerator not divisible");
        let e = numer / m as i128;
        assert!(e == 0 || e == 1, "closed-form exponent {e} outside {{0,1}}");
        e as u32
    };
    Ok(ws
        .weights()
        .iter()
        .map(|&w| (exponent(w), if ws.mode() == Mode::Hyper { exponent(-w) } else { 0 }))
        .collect())
}

/// Closed-form route: evaluates the exponent formula of the presentation
/// ideal and multiplies out `(b_i u)^{e_i} (-b_i u)^{f_i}` per coordinate.
pub fn unit_product_closed_form(
    ws: &CircleWeightSystem,
    g: u64,
    h: u64,
) -> Result<ProductMonomial, Error> {
    let exponents = closed_form_exponents(ws, g, h)?;
    let mut coefficient = BigInt::one();
    let mut u_exponent = 0u32;
    for (&w, &(base_exp, fiber_exp)) in ws.weights().iter().zip(&exponents) {
        if base_exp == 1 {
            coefficient *= BigInt::from(w);
            u_exponent += 1;
        }
        if fiber_exp == 1 {
            coefficient *= BigInt::from(-w);
            u_exponent += 1;
        }
    }
    Ok(ProductMonomial {
        target: ws.add_residues(g % ws.order(), h % ws.order()),
        coefficient,
        u_exponent,
    })
}

/// A sector-graded class: one `u`-polynomial per sector, in the basis where
/// the sector unit maps to 1. Absent sectors are zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InertialElement {
    sectors: BTreeMap<u64, UPoly>,
}

impl InertialElement {
    pub fn zero() -> Self {
        InertialElement::default()
    }

    /// The unit class of sector `g`.
    pub fn unit(g: u64) -> Self {
        InertialElement::from_sector(g, UPoly::one())
    }

    pub fn from_sector(g: u64, p: UPoly) -> Self {
        let mut e = InertialElement::zero();
        e.add_assign_sector(g, p);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn sector(&self, g: u64) -> Option<&UPoly> {
        self.sectors.get(&g)
    }

    pub fn sectors(&self) -> impl Iterator<Item = (u64, &UPoly)> {
        self.sectors.iter().map(|(g, p)| (*g, p))
    }

    pub fn add_assign_sector(&mut self, g: u64, p: UPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.sectors.remove(&g);
        let sum = match entry {
            None => p,
            Some(old) => &old + &p,
        };
        if !sum.is_zero() {
            self.sectors.insert(g, sum);
        }
    }

    pub fn add(&self, other: &InertialElement) -> InertialElement {
        let mut out = self.clone();
        for (g, p) in other.sectors() {
            out.add_assign_sector(g, p.clone());
        }
        out
    }
}

/// Bilinear extension of the sector-unit product (definitional route); the
/// `u`-polynomial factors multiply through.
pub fn inertial_product(
    ws: &CircleWeightSystem,
    a: &InertialElement,
    b: &InertialElement,
) -> InertialElement {
    let mut out = InertialElement::zero();
    for (g, p) in a.sectors() {
        for (h, q) in b.sectors() {
            let unit = unit_product(ws, g, h);
            let factor = (p * q).shift(unit.u_exponent);
            let scaled = factor.scale(&Rational::from_integer(unit.coefficient.clone()));
            out.add_assign_sector(unit.target, scaled);
        }
    }
    out
}

/// One presentation relation: `a_g * a_h = c u^e a_{[g+h]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub g: u64,
    pub h: u64,
    pub product: ProductMonomial,
}

/// Generators-and-relations form of the sector subring over Z: generators `u`
/// and one unit class per sector, one relation per unordered sector pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InertialPresentation {
    pub weights: Vec<i64>,
    pub mode: Mode,
    pub order: u64,
    /// Degree of each sector unit class (index = sector).
    pub generator_degrees: Vec<Rational>,
    /// Sorted by (g, h) with g <= h.
    pub relations: Vec<Relation>,
}

/// The sector-unit relations of the inertial ring, computed by the
/// definitional route (cross-checkable against the closed form whenever that
/// applies). Requires nonnegative weights, the regime where the integral
/// presentation is established.
pub fn inertial_presentation(ws: &CircleWeightSystem) -> Result<InertialPresentation, Error> {
    if !ws.is_nonnegative() {
        return Err(Error::ClosedFormInapplicable(
            "the integral presentation requires nonnegative weights".into(),
        ));
    }
    let m = ws.order();
    let mut relations = Vec::new();
    for g in 0..m {
        for h in g..m {
            relations.push(Relation { g, h, product: unit_product(ws, g, h) });
        }
    }
    Ok(InertialPresentation {
        weights: ws.weights().to_vec(),
        mode: ws.mode(),
        order: m,
        generator_degrees: ws.sectors().map(|s| s.cr_degree).collect(),
        relations,
    })
}

impl InertialPresentation {
    pub fn header(&self) -> String {
        format!(
            "ring Z[u, a0..a{}] mode={} weights={} order={}",
            self.order - 1,
            self.mode,
            crate::weights::weight_list_string(&self.weights),
            self.order
        )
    }

    /// Bit-exact text form: header plus one `a{g}*a{h} = c u^e a{k}` line per
    /// unordered pair, sorted by (g, h).
    pub fn to_text(&self) -> String {
        let mut out = self.header();
        out.push('\n');
        for r in &self.relations {
            out.push_str(&format!("a{}*a{} = {}\n", r.g, r.h, r.product));
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = format!(
            "\\mathbb{{Z}}[u, \\alpha_0, \\ldots, \\alpha_{{{}}}] / \\mathcal{{I}}\n",
            self.order - 1
        );
        out.push_str("\\mathcal{I} = \\langle\n");
        for r in &self.relations {
            let rhs = latex_monomial(&r.product);
            out.push_str(&format!(
                "  \\alpha_{{{}}} \\smile \\alpha_{{{}}} - {rhs},\n",
                r.g, r.h
            ));
        }
        out.push_str("\\rangle\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("weights".into(), self.weights.iter().copied().collect());
        obj.insert("mode".into(), self.mode.to_string().into());
        obj.insert("order".into(), self.order.into());
        obj.insert("coefficients".into(), "Z".into());
        obj.insert(
            "generator_degrees".into(),
            self.generator_degrees.iter().map(|d| d.to_string()).collect(),
        );
        obj.insert(
            "relations".into(),
            self.relations
                .iter()
                .map(|r| {
                    serde_json::json!([
                        r.g,
                        r.h,
                        [r.product.target, r.product.coefficient.to_string(), r.product.u_exponent]
                    ])
                })
                .collect(),
        );
        serde_json::Value::Object(obj)
    }
}

pub(crate) fn latex_monomial(p: &ProductMonomial) -> String {
    let mut rhs = String::new();
    if p.coefficient != BigInt::one() {
        rhs.push_str(&p.coefficient.to_string());
        rhs.push(' ');
    }
    if p.u_exponent > 0 {
        rhs.push_str(&format!("u^{{{}}} ", p.u_exponent));
    }
    rhs.push_str(&format!("\\alpha_{{{}}}", p.target));
    rhs
}
