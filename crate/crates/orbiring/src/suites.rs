//! Seeded randomized check suites over bounded weight systems. The CLI
//! `check` verb and the acceptance tests both drive these.
//!
//! Systems are sampled uniformly and resampled whenever the weight lcm
//! exceeds [`MAX_SWEEP_ORDER`], which keeps the all-pairs and all-triples
//! sweeps inside the suite time budget without shrinking the weight range.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::comparator::{check_homotopy_theorem, rep_homotopy_equivalent};
use crate::inertial::{
    closed_form_exponents, inertial_product, obstruction_data, unit_product,
    unit_product_closed_form, InertialElement, ProductMonomial,
};
use crate::poly::UPoly;
use crate::quotient::{cr_algebra, lattice_maps, truncation_exponents};
use crate::rational::Rational;
use crate::weights::{default_order, CircleWeightSystem, Mode};

/// Sector-order cap for randomized sweeps; sampled systems above it are
/// rejected and redrawn.
pub const MAX_SWEEP_ORDER: u64 = 40;

pub const SUITE_NAMES: [&str; 5] = ["oracle", "ring", "combinatorics", "homotopy", "quotient"];

#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    pub trials: u32,
    pub seed: u64,
    pub max_n: usize,
    pub max_weight: i64,
}

impl SweepConfig {
    pub fn new(seed: u64) -> Self {
        SweepConfig { trials: 200, seed, max_n: 5, max_weight: 12 }
    }
}

/// First failing property of a suite, with enough data to replay it.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub suite: &'static str,
    pub property: String,
    pub weights: Vec<i64>,
    pub mode: Mode,
    pub order: u64,
    pub g: Option<u64>,
    pub h: Option<u64>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite {} property {}: weights={} mode={} order={}",
            self.suite,
            self.property,
            crate::weights::weight_list_string(&self.weights),
            self.mode,
            self.order
        )?;
        if let Some(g) = self.g {
            write!(f, " g={g}")?;
        }
        if let Some(h) = self.h {
            write!(f, " h={h}")?;
        }
        write!(f, "\n  left:  {}\n  right: {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub trials: u32,
    pub checks: u64,
}

struct Ctx<'a> {
    suite: &'static str,
    ws: &'a CircleWeightSystem,
    checks: u64,
}

impl Ctx<'_> {
    fn check(
        &mut self,
        ok: bool,
        property: &str,
        pair: (Option<u64>, Option<u64>),
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) -> Result<(), Box<Counterexample>> {
        self.checks += 1;
        if ok {
            return Ok(());
        }
        Err(Box::new(Counterexample {
            suite: self.suite,
            property: property.to_string(),
            weights: self.ws.weights().to_vec(),
            mode: self.ws.mode(),
            order: self.ws.order(),
            g: pair.0,
            h: pair.1,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }))
    }
}

fn sample_weights(rng: &mut ChaCha8Rng, cfg: &SweepConfig, min_weight: i64) -> Vec<i64> {
    loop {
        let len = rng.random_range(1..=cfg.max_n.max(1));
        let weights: Vec<i64> =
            (0..len).map(|_| rng.random_range(min_weight..=cfg.max_weight)).collect();
        if default_order(&weights) <= MAX_SWEEP_ORDER {
            return weights;
        }
    }
}

fn systems(weights: &[i64]) -> Vec<CircleWeightSystem> {
    [Mode::Symplectic, Mode::Hyper]
        .into_iter()
        .map(|mode| CircleWeightSystem::new(weights.to_vec(), mode).expect("bounded weights"))
        .collect()
}

pub fn run_suite(name: &str, cfg: &SweepConfig) -> Result<SuiteOutcome, Box<Counterexample>> {
    match name {
        "oracle" => suite_oracle(cfg),
        "ring" => suite_ring(cfg),
        "combinatorics" => suite_combinatorics(cfg),
        "homotopy" => suite_homotopy(cfg),
        "quotient" => suite_quotient(cfg),
        other => panic!("unknown suite `{other}`"),
    }
}

/// Run one named suite, or every suite for `all`.
pub fn run_suites(name: &str, cfg: &SweepConfig) -> Result<Vec<SuiteOutcome>, Box<Counterexample>> {
    if name == "all" {
        SUITE_NAMES.iter().map(|suite| run_suite(suite, cfg)).collect()
    } else {
        Ok(vec![run_suite(name, cfg)?])
    }
}

/// Closed-form route equals the definitional route on every sector pair.
fn suite_oracle(cfg: &SweepConfig) -> Result<SuiteOutcome, Box<Counterexample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut checks = 0u64;
    for _ in 0..cfg.trials {
        let weights = sample_weights(&mut rng, cfg, 0);
        for ws in systems(&weights) {
            let mut ctx = Ctx { suite: "oracle", ws: &ws, checks: 0 };
            let m = ws.order();
            for g in 0..m {
                for h in 0..m {
                    let closed = unit_product_closed_form(&ws, g, h)
                        .expect("sampled systems satisfy the closed-form preconditions");
                    let oracle = unit_product(&ws, g, h);
                    ctx.check(
                        closed == oracle,
                        "closed-form equals definitional product",
                        (Some(g), Some(h)),
                        &closed,
                        &oracle,
                    )?;
                }
            }
            checks += ctx.checks;
        }
    }
    Ok(SuiteOutcome { name: "oracle", trials: cfg.trials, checks })
}

fn product_table(ws: &CircleWeightSystem) -> Vec<Vec<ProductMonomial>> {
    let m = ws.order();
    (0..m).map(|g| (0..m).map(|h| unit_product(ws, g, h)).collect()).collect()
}

/// Ring axioms of the sector product: unit, commutativity, associativity,
/// degree additivity.
fn suite_ring(cfg: &SweepConfig) -> Result<SuiteOutcome, Box<Counterexample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut checks = 0u64;
    for _ in 0..cfg.trials {
        let weights = sample_weights(&mut rng, cfg, 0);
        for ws in systems(&weights) {
            let mut ctx = Ctx { suite: "ring", ws: &ws, checks: 0 };
            let m = ws.order();
            let table = product_table(&ws);
            let ages: Vec<Rational> = ws.sectors().map(|s| s.age).collect();
            for g in 0..m {
                let unit = &table[g as usize][0];
                ctx.check(
                    unit.target == g && unit.coefficient == BigInt::from(1) && unit.u_exponent == 0,
                    "identity sector is a unit",
                    (Some(g), Some(0)),
                    unit,
                    format!("1 u^0 a{g}"),
                )?;
                for h in g..m {
                    let p = &table[g as usize][h as usize];
                    ctx.check(
                        p == &table[h as usize][g as usize],
                        "sector product is commutative",
                        (Some(g), Some(h)),
                        p,
                        &table[h as usize][g as usize],
                    )?;
                    // age(g) + age(h) = age([g+h]) + uExponent.
                    let lhs = &ages[g as usize] + &ages[h as usize];
                    let rhs = &ages[p.target as usize] + &Rational::from_integer(p.u_exponent as i64);
                    ctx.check(
                        lhs == rhs,
                        "degree additivity of the sector product",
                        (Some(g), Some(h)),
                        &lhs,
                        &rhs,
                    )?;
                }
            }
            for g in 0..m {
                for h in 0..m {
                    for k in 0..m {
                        let gh = &table[g as usize][h as usize];
                        let left = &table[gh.target as usize][k as usize];
                        let hk = &table[h as usize][k as usize];
                        let right = &table[g as usize][hk.target as usize];
                        let lhs = (
                            left.target,
                            &gh.coefficient * &left.coefficient,
                            gh.u_exponent + left.u_exponent,
                        );
                        let rhs = (
                            right.target,
                            &hk.coefficient * &right.coefficient,
                            hk.u_exponent + right.u_exponent,
                        );
                        ctx.check(
                            lhs == rhs,
                            &format!("associativity at k={k}"),
                            (Some(g), Some(h)),
                            format!("{} u^{} a{}", lhs.1, lhs.2, lhs.0),
                            format!("{} u^{} a{}", rhs.1, rhs.2, rhs.0),
                        )?;
                    }
                }
            }
            checks += ctx.checks;
        }
    }
    Ok(SuiteOutcome { name: "ring", trials: cfg.trials, checks })
}

/// The per-coordinate combinatorial facts behind the product formula.
fn suite_combinatorics(cfg: &SweepConfig) -> Result<SuiteOutcome, Box<Counterexample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut checks = 0u64;
    let two = Rational::from_integer(2);
    for _ in 0..cfg.trials {
        let weights = sample_weights(&mut rng, cfg, 0);
        for ws in systems(&weights) {
            let mut ctx = Ctx { suite: "combinatorics", ws: &ws, checks: 0 };
            let m = ws.order();
            for g in 0..m {
                // Logweight complement identity per weight.
                for &w in ws.weights() {
                    let a = ws.logweight_of(w, g);
                    let b = ws.logweight_of(-w, g);
                    let sum = &a + &b;
                    ctx.check(
                        sum == if a.is_zero() { Rational::zero() } else { Rational::one() },
                        "logweight complement identity",
                        (Some(g), None),
                        &sum,
                        "0 or 1",
                    )?;
                }
                if ws.mode() == Mode::Hyper {
                    let s = ws.sector(g);
                    ctx.check(
                        s.age.is_integer(),
                        "hyper ages are integral",
                        (Some(g), None),
                        &s.age,
                        "an integer",
                    )?;
                }
                for h in 0..m {
                    let exponents = closed_form_exponents(&ws, g, h)
                        .expect("sampled systems satisfy the closed-form preconditions");
                    for (e, f) in &exponents {
                        ctx.check(
                            *e <= 1 && *f <= 1,
                            "closed-form exponents lie in {0,1}",
                            (Some(g), Some(h)),
                            format!("({e}, {f})"),
                            "0 or 1",
                        )?;
                    }
                    // The two obstruction conditions never hold together on
                    // one coordinate.
                    let inv_sum = ws.neg_residue(ws.add_residues(g, h));
                    for &w in ws.weights() {
                        let triple = |weight: i64| {
                            ws.logweight_of(weight, g)
                                + ws.logweight_of(weight, h)
                                + ws.logweight_of(weight, inv_sum)
                        };
                        let both = triple(w) == two && triple(-w) == two;
                        ctx.check(
                            !both,
                            "base and fiber obstruction conditions are exclusive",
                            (Some(g), Some(h)),
                            format!("weight {w}: both sums equal 2"),
                            "at most one",
                        )?;
                    }
                    let data = obstruction_data(&ws, g, h);
                    let overlap = data
                        .base
                        .iter()
                        .chain(&data.fiber)
                        .any(|i| data.pushforward.contains(i));
                    ctx.check(
                        !overlap,
                        "obstruction and pushforward index sets are disjoint",
                        (Some(g), Some(h)),
                        format!("{:?} {:?} {:?}", data.base, data.fiber, data.pushforward),
                        "disjoint sets",
                    )?;
                }
            }
            checks += ctx.checks;
        }
    }
    Ok(SuiteOutcome { name: "combinatorics", trials: cfg.trials, checks })
}

/// Stability of everything under appended trivial summands.
fn suite_homotopy(cfg: &SweepConfig) -> Result<SuiteOutcome, Box<Counterexample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut checks = 0u64;
    for _ in 0..cfg.trials {
        let weights = sample_weights(&mut rng, cfg, 0);
        for ws in systems(&weights) {
            let mut ctx = Ctx { suite: "homotopy", ws: &ws, checks: 0 };
            let m = ws.order();
            for extra in 1..=2usize {
                let padded = ws.append_zeros(extra);
                for g in 0..m {
                    for h in g..m {
                        let a = unit_product(&ws, g, h);
                        let b = unit_product(&padded, g, h);
                        ctx.check(
                            a == b,
                            "sector products are stable under zero weights",
                            (Some(g), Some(h)),
                            &a,
                            &b,
                        )?;
                    }
                }
                let theorem = check_homotopy_theorem(&ws, extra)
                    .expect("nonnegative sampled weights admit a presentation");
                ctx.check(
                    theorem,
                    "appending zeros preserves the presentation",
                    (None, None),
                    "presentations differ",
                    "presentations equal",
                )?;
                ctx.check(
                    rep_homotopy_equivalent(ws.weights(), padded.weights()),
                    "zero padding is representation-homotopy trivial",
                    (None, None),
                    "false",
                    "true",
                )?;
            }
            checks += ctx.checks;
        }
    }
    Ok(SuiteOutcome { name: "homotopy", trials: cfg.trials, checks })
}

/// Quotient-ring construction invariants, including the compatibility of
/// truncation with the inertial product.
fn suite_quotient(cfg: &SweepConfig) -> Result<SuiteOutcome, Box<Counterexample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut checks = 0u64;
    for _ in 0..cfg.trials {
        let weights = sample_weights(&mut rng, cfg, 1);
        for ws in systems(&weights) {
            let mut ctx = Ctx { suite: "quotient", ws: &ws, checks: 0 };
            let m = ws.order();
            let algebra = cr_algebra(&ws).expect("positive default-order system");
            let kernel = truncation_exponents(&ws).expect("positive default-order system");
            let expected_dim: usize = ws.sectors().map(|s| s.fixed.len()).sum();
            ctx.check(
                algebra.dim() == expected_dim,
                "dimension equals the total fixed-index count",
                (None, None),
                algebra.dim(),
                expected_dim,
            )?;
            ctx.check(
                kernel.generators[0] == (0, ws.dim() as u32),
                "identity-sector truncation is n+1",
                (Some(0), None),
                format!("{:?}", kernel.generators[0]),
                format!("(0, {})", ws.dim()),
            )?;
            let hilbert_total: usize = algebra.hilbert().values().sum();
            ctx.check(
                hilbert_total == algebra.dim(),
                "hilbert function sums to the dimension",
                (None, None),
                hilbert_total,
                algebra.dim(),
            )?;
            // J-reduction soundness.
            let maps = lattice_maps(&ws).expect("nonzero weights");
            for row in &maps.j_generators {
                let image: BigInt =
                    row.iter().zip(ws.weights()).map(|(r, &w)| r * BigInt::from(w)).sum();
                ctx.check(
                    image == BigInt::from(0),
                    "substituting u_i -> b_i u kills the linear ideal",
                    (None, None),
                    &image,
                    0,
                )?;
            }
            // The kernel is an ideal: min(d_g, d_h) + e(g,h) >= d_{[g+h]}
            // for all pairs.
            for g in 0..m {
                for h in g..m {
                    let p = unit_product(&ws, g, h);
                    let smaller =
                        algebra.truncation[g as usize].min(algebra.truncation[h as usize]);
                    let lhs = smaller + p.u_exponent;
                    let rhs = algebra.truncation[p.target as usize];
                    ctx.check(
                        lhs >= rhs,
                        "kernel ideal absorbs products",
                        (Some(g), Some(h)),
                        lhs,
                        rhs,
                    )?;
                }
            }
            // Quotient compatibility on random elements: truncating the full
            // inertial product agrees with multiplying the truncations.
            let offsets: Vec<usize> = algebra
                .truncation
                .iter()
                .scan(0usize, |acc, d| {
                    let out = *acc;
                    *acc += *d as usize;
                    Some(out)
                })
                .collect();
            let truncate = |elem: &InertialElement| -> BTreeMap<usize, Rational> {
                let mut out = BTreeMap::new();
                for (g, poly) in elem.sectors() {
                    for (e, c) in poly.terms() {
                        if e < algebra.truncation[g as usize] {
                            let idx = offsets[g as usize] + e as usize;
                            let entry = out.entry(idx).or_insert_with(Rational::zero);
                            *entry = &*entry + c;
                        }
                    }
                }
                out.retain(|_, c| !c.is_zero());
                out
            };
            for _ in 0..4 {
                let random_element = |rng: &mut ChaCha8Rng| {
                    let mut e = InertialElement::zero();
                    for _ in 0..rng.random_range(1..=3) {
                        let g = rng.random_range(0..m);
                        let exp = rng.random_range(0..=(algebra.truncation[g as usize] + 1));
                        let coeff = rng.random_range(-3i64..=3);
                        e = e.add(&InertialElement::from_sector(
                            g,
                            UPoly::monomial(exp, Rational::from_integer(coeff)),
                        ));
                    }
                    e
                };
                let x = random_element(&mut rng);
                let y = random_element(&mut rng);
                let direct = truncate(&inertial_product(&ws, &x, &y));
                let mut staged: BTreeMap<usize, Rational> = BTreeMap::new();
                for (i, ci) in truncate(&x) {
                    for (j, cj) in truncate(&y) {
                        for (k, c) in algebra.product(i, j) {
                            let entry = staged.entry(*k).or_insert_with(Rational::zero);
                            *entry = &*entry + &(&(&ci * &cj) * c);
                        }
                    }
                }
                staged.retain(|_, c| !c.is_zero());
                ctx.check(
                    direct == staged,
                    "truncation commutes with the inertial product",
                    (None, None),
                    format!("{direct:?}"),
                    format!("{staged:?}"),
                )?;
            }
            checks += ctx.checks;
        }
    }
    Ok(SuiteOutcome { name: "quotient", trials: cfg.trials, checks })
}
