//! Circle weight systems and per-sector combinatorics: fixed index sets,
//! logweights, ages, and Chen-Ruan degrees.
//!
//! A weight system records a diagonal circle action. In `Symplectic` mode the
//! ambient space is a copy of C for each weight; in `Hyper` mode each weight
//! additionally acts with the opposite sign on a paired fiber coordinate. The
//! sector group is Z/mZ, where m defaults to the lcm of the nonzero weights
//! (the group generated by the finite stabilizers) but may be overridden.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::Error;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Symplectic,
    Hyper,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Symplectic => write!(f, "SYMPLECTIC"),
            Mode::Hyper => write!(f, "HYPER"),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "symplectic" => Ok(Mode::Symplectic),
            "hyper" => Ok(Mode::Hyper),
            other => Err(Error::Parse(format!(
                "unknown mode `{other}` (expected symplectic or hyper)"
            ))),
        }
    }
}

/// The lcm of the absolute values of the nonzero weights; 1 when there are
/// none. This is the order of the group generated by the finite stabilizers.
///
/// Panics if the lcm does not fit in a `u64`; use
/// [`CircleWeightSystem::new`] for a checked construction.
pub fn default_order(weights: &[i64]) -> u64 {
    default_order_checked(weights).expect("weight lcm exceeds u64")
}

fn default_order_checked(weights: &[i64]) -> Option<u64> {
    let mut acc = BigUint::one();
    for &w in weights {
        if w != 0 {
            acc = acc.lcm(&BigUint::from(w.unsigned_abs()));
        }
    }
    acc.to_u64()
}

/// The logweight of the residue `g` with respect to an integer weight `w` in
/// the cyclic group of order `m`: the fraction `((w*g) mod m)/m` in `[0, 1)`.
pub fn logweight(w: i64, g: u64, m: u64) -> Rational {
    assert!(m >= 1, "sector order must be >= 1");
    Rational::new(residue(w as i128 * g as i128, m), m)
}

/// Smallest nonnegative representative of `x` modulo `m`.
pub(crate) fn residue(x: i128, m: u64) -> u64 {
    let m = m as i128;
    (((x % m) + m) % m) as u64
}

/// Per-sector combinatorial data attached to a residue class `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sector {
    pub g: u64,
    /// Indices whose coordinate line is fixed by g: `b_i * g == 0 (mod m)`.
    pub fixed: Vec<usize>,
    /// Sum of the logweights of g over all ambient coordinate lines.
    pub age: Rational,
    /// Degree of the sector's unit class: twice the age.
    pub cr_degree: Rational,
}

/// A diagonal circle action described by its integer weights, a mode, and the
/// sector-group order. The sole input datum of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleWeightSystem {
    weights: Vec<i64>,
    mode: Mode,
    order: u64,
}

impl CircleWeightSystem {
    /// Construct with the default sector order (the stabilizer lcm).
    pub fn new(weights: Vec<i64>, mode: Mode) -> Result<Self, Error> {
        let order = default_order_checked(&weights).ok_or(Error::OrderTooLarge)?;
        Ok(CircleWeightSystem { weights, mode, order })
    }

    /// Construct with an explicit sector order, which need not be the
    /// stabilizer lcm (nor a multiple of it).
    pub fn with_order(weights: Vec<i64>, mode: Mode, order: u64) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::InvalidOrder);
        }
        Ok(CircleWeightSystem { weights, mode, order })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Number of base coordinates (n+1 for weights b_0..b_n).
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.weights.iter().all(|&w| w >= 0)
    }

    pub fn all_positive(&self) -> bool {
        !self.weights.is_empty() && self.weights.iter().all(|&w| w >= 1)
    }

    /// Whether the order equals the stabilizer lcm.
    pub fn has_default_order(&self) -> bool {
        default_order_checked(&self.weights) == Some(self.order)
    }

    pub fn reduce(&self, x: i128) -> u64 {
        residue(x, self.order)
    }

    pub fn add_residues(&self, g: u64, h: u64) -> u64 {
        self.reduce(g as i128 + h as i128)
    }

    pub fn neg_residue(&self, g: u64) -> u64 {
        self.reduce(-(g as i128))
    }

    pub fn logweight_of(&self, w: i64, g: u64) -> Rational {
        logweight(w, g, self.order)
    }

    /// The same system with `k` zero weights appended; order and mode are
    /// unchanged (zero weights do not alter the stabilizer lcm).
    pub fn append_zeros(&self, k: usize) -> Self {
        let mut weights = self.weights.clone();
        weights.extend(std::iter::repeat_n(0, k));
        CircleWeightSystem { weights, mode: self.mode, order: self.order }
    }

    /// Fixed index set, age, and Chen-Ruan degree of the sector `g`.
    pub fn sector(&self, g: u64) -> Sector {
        let g = g % self.order;
        let mut fixed = Vec::new();
        let mut age = Rational::zero();
        for (i, &w) in self.weights.iter().enumerate() {
            if self.reduce(w as i128 * g as i128) == 0 {
                fixed.push(i);
            }
            match self.mode {
                Mode::Symplectic => age = age + self.logweight_of(w, g),
                Mode::Hyper => {
                    age = age + self.logweight_of(w, g) + self.logweight_of(-w, g);
                }
            }
        }
        let cr_degree = &age + &age;
        Sector { g, fixed, age, cr_degree }
    }

    pub fn sectors(&self) -> impl Iterator<Item = Sector> + '_ {
        (0..self.order).map(|g| self.sector(g))
    }

    /// Comma-separated weights, the CLI wire form.
    pub fn weights_string(&self) -> String {
        weight_list_string(&self.weights)
    }
}

pub fn weight_list_string(weights: &[i64]) -> String {
    weights
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parse the CLI weight-list form `b0,b1,...,bn` (signed decimal integers).
pub fn parse_weight_list(s: &str) -> Result<Vec<i64>, String> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| format!("malformed weight `{}` in `{s}`", part.trim()))
        })
        .collect()
}
