//! Graded-algebra fingerprints and the distinguishing test that certifies
//! non-isomorphism, plus the decidable representation-homotopy criterion for
//! diagonal circle representations.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::inertial::inertial_presentation;
use crate::quotient::FiniteGradedAlgebra;
use crate::rational::Rational;
use crate::weights::CircleWeightSystem;

/// Isomorphism invariants of a graded algebra: the Hilbert function and the
/// rank of every multiplication pairing between graded pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub hilbert: BTreeMap<Rational, usize>,
    /// Keyed by degree pairs (a, b) with a <= b.
    pub pairing_ranks: BTreeMap<(Rational, Rational), usize>,
}

/// Exact rank over Q by fraction-free-enough Gaussian elimination.
fn matrix_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for cell in rows[rank][col..].iter_mut() {
            *cell = &*cell * &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (cell, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *cell = &*cell - &(&factor * p);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn fingerprint(algebra: &FiniteGradedAlgebra) -> Fingerprint {
    let hilbert = algebra.hilbert();
    let mut by_degree: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
    for (i, b) in algebra.basis.iter().enumerate() {
        by_degree.entry(b.degree.clone()).or_default().push(i);
    }
    // Pairings against a one-dimensional degree-0 piece are omitted: that
    // piece is spanned by the identity, so their rank is the target
    // dimension, already recorded in the Hilbert function.
    let skip_unit_pairs = by_degree.get(&Rational::zero()).is_some_and(|v| v.len() == 1);
    let degrees: Vec<Rational> = by_degree.keys().cloned().collect();
    let mut pairing_ranks = BTreeMap::new();
    for (ai, a) in degrees.iter().enumerate() {
        if skip_unit_pairs && a.is_zero() {
            continue;
        }
        for b in &degrees[ai..] {
            let target = a + b;
            let Some(cols) = by_degree.get(&target) else {
                pairing_ranks.insert((a.clone(), b.clone()), 0);
                continue;
            };
            let col_of: BTreeMap<usize, usize> =
                cols.iter().enumerate().map(|(c, &k)| (k, c)).collect();
            let mut rows = Vec::new();
            for &i in &by_degree[a] {
                for &j in &by_degree[b] {
                    let mut row = vec![Rational::zero(); cols.len()];
                    for (k, c) in algebra.product(i, j) {
                        row[col_of[k]] = c.clone();
                    }
                    rows.push(row);
                }
            }
            pairing_ranks.insert((a.clone(), b.clone()), matrix_rank(rows));
        }
    }
    Fingerprint { hilbert, pairing_ranks }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The algebras are certifiably non-isomorphic as graded algebras.
    Distinguished,
    /// No invariant differed; no isomorphism claim is made.
    Indistinguishable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Distinguished => write!(f, "DISTINGUISHED"),
            Verdict::Indistinguishable => write!(f, "INDISTINGUISHABLE"),
        }
    }
}

/// Which invariant differed, where, and the two values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Hilbert { degree: Rational, values: (usize, usize) },
    PairingRank { degrees: (Rational, Rational), values: (usize, usize) },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishResult {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl DistinguishResult {
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("verdict".into(), self.verdict.to_string().into());
        let witness = match &self.witness {
            None => serde_json::Value::Null,
            Some(Witness::Hilbert { degree, values }) => serde_json::json!({
                "invariant": "hilbert",
                "at": degree.to_string(),
                "values": [values.0, values.1],
            }),
            Some(Witness::PairingRank { degrees, values }) => serde_json::json!({
                "invariant": "pairing_rank",
                "at": [degrees.0.to_string(), degrees.1.to_string()],
                "values": [values.0, values.1],
            }),
        };
        obj.insert("witness".into(), witness);
        serde_json::Value::Object(obj)
    }

    pub fn to_text(&self) -> String {
        match &self.witness {
            None => self.verdict.to_string(),
            Some(Witness::Hilbert { degree, values }) => format!(
                "{} witness=hilbert at={degree} values={},{}",
                self.verdict, values.0, values.1
            ),
            Some(Witness::PairingRank { degrees, values }) => format!(
                "{} witness=pairing_rank at=({},{}) values={},{}",
                self.verdict, degrees.0, degrees.1, values.0, values.1
            ),
        }
    }
}

/// Compare Hilbert functions, then pairing ranks; the first mismatch is the
/// witness. Sound (a mismatch certifies non-isomorphism), incomplete by
/// design.
pub fn distinguish(a: &FiniteGradedAlgebra, b: &FiniteGradedAlgebra) -> DistinguishResult {
    assert_eq!(
        a.coefficients, b.coefficients,
        "distinguish requires the same coefficient field"
    );
    let fa = fingerprint(a);
    let fb = fingerprint(b);
    let degrees: BTreeSet<&Rational> = fa.hilbert.keys().chain(fb.hilbert.keys()).collect();
    for degree in degrees {
        let da = fa.hilbert.get(degree).copied().unwrap_or(0);
        let db = fb.hilbert.get(degree).copied().unwrap_or(0);
        if da != db {
            return DistinguishResult {
                verdict: Verdict::Distinguished,
                witness: Some(Witness::Hilbert { degree: degree.clone(), values: (da, db) }),
            };
        }
    }
    let keys: BTreeSet<&(Rational, Rational)> =
        fa.pairing_ranks.keys().chain(fb.pairing_ranks.keys()).collect();
    for key in keys {
        let ra = fa.pairing_ranks.get(key).copied().unwrap_or(0);
        let rb = fb.pairing_ranks.get(key).copied().unwrap_or(0);
        if ra != rb {
            return DistinguishResult {
                verdict: Verdict::Distinguished,
                witness: Some(Witness::PairingRank { degrees: key.clone(), values: (ra, rb) }),
            };
        }
    }
    DistinguishResult { verdict: Verdict::Indistinguishable, witness: None }
}

/// Decidable criterion for representation homotopy of diagonal circle
/// representations: the multisets of nonzero weights agree (trivial summands
/// are absorbable).
pub fn rep_homotopy_equivalent(weights_a: &[i64], weights_b: &[i64]) -> bool {
    let multiset = |w: &[i64]| {
        let mut v: Vec<i64> = w.iter().copied().filter(|&x| x != 0).collect();
        v.sort_unstable();
        v
    };
    multiset(weights_a) == multiset(weights_b)
}

/// Concrete linear-representation instance of homotopy invariance: appending
/// trivial summands must leave every sector relation unchanged.
pub fn check_homotopy_theorem(ws: &CircleWeightSystem, extra_zeros: usize) -> Result<bool, Error> {
    let base = inertial_presentation(ws)?;
    let padded = inertial_presentation(&ws.append_zeros(extra_zeros))?;
    Ok(base.order == padded.order && base.relations == padded.relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::cr_algebra;
    use crate::weights::Mode::{Hyper, Symplectic};
    use crate::weights::Mode;
    use proptest::prelude::*;

    fn algebra(weights: &[i64], mode: Mode) -> FiniteGradedAlgebra {
        cr_algebra(&CircleWeightSystem::new(weights.to_vec(), mode).unwrap()).unwrap()
    }

    #[test]
    fn fingerprint_hilbert_examples() {
        let f = fingerprint(&algebra(&[2, 1, 1], Symplectic));
        let expected: Vec<(Rational, usize)> =
            [(0, 1), (2, 2), (4, 1)].map(|(d, n)| (Rational::from_integer(d), n)).to_vec();
        assert_eq!(f.hilbert.into_iter().collect::<Vec<_>>(), expected);

        let f = fingerprint(&algebra(&[2, 1, 1], Hyper));
        let expected: Vec<(Rational, usize)> =
            [(0, 1), (2, 1), (4, 2)].map(|(d, n)| (Rational::from_integer(d), n)).to_vec();
        assert_eq!(f.hilbert.into_iter().collect::<Vec<_>>(), expected);

        // One-dimensional algebra: single Hilbert value, no pairings (the
        // unit pairing is forced).
        let f = fingerprint(&algebra(&[1], Symplectic));
        assert_eq!(f.hilbert.len(), 1);
        assert_eq!(f.hilbert[&Rational::zero()], 1);
        assert!(f.pairing_ranks.is_empty());

        // A two-dimensional degree-0 piece keeps its self-pairing: the group
        // ring of Z/2 has a rank-2 multiplication pairing in degree 0.
        let f = fingerprint(&algebra(&[2], Symplectic));
        assert_eq!(f.hilbert[&Rational::zero()], 2);
        assert_eq!(f.pairing_ranks[&(Rational::zero(), Rational::zero())], 2);
    }

    #[test]
    fn distinguish_golden_pair() {
        let a = algebra(&[2, 1, 1], Symplectic);
        let b = algebra(&[2, 1, 1], Hyper);
        let r = distinguish(&a, &b);
        assert_eq!(r.verdict, Verdict::Distinguished);
        assert_eq!(
            r.witness,
            Some(Witness::Hilbert { degree: Rational::from_integer(2), values: (2, 1) })
        );
        // Soundness: the witnessed values really are the two Hilbert values.
        assert_eq!(fingerprint(&a).hilbert[&Rational::from_integer(2)], 2);
        assert_eq!(fingerprint(&b).hilbert[&Rational::from_integer(2)], 1);
    }

    #[test]
    fn distinguish_reflexive_and_smooth() {
        let a = algebra(&[2, 1, 1], Hyper);
        assert_eq!(distinguish(&a, &a).verdict, Verdict::Indistinguishable);

        let s = algebra(&[1, 1, 1], Symplectic);
        let h = algebra(&[1, 1, 1], Hyper);
        assert_eq!(distinguish(&s, &h).verdict, Verdict::Indistinguishable);
    }

    #[test]
    fn distinguish_on_fractional_degrees() {
        // (3,1): the projective side has twisted classes in degrees 2/3 and
        // 4/3; the hyperprojective side concentrates everything in degree 2.
        let a = algebra(&[3, 1], Symplectic);
        let b = algebra(&[3, 1], Hyper);
        let r = distinguish(&a, &b);
        assert_eq!(r.verdict, Verdict::Distinguished);
        assert_eq!(
            r.witness,
            Some(Witness::Hilbert { degree: Rational::new(2, 3), values: (1, 0) })
        );
        assert_eq!(
            r.to_json().to_string(),
            "{\"verdict\":\"DISTINGUISHED\",\"witness\":{\"invariant\":\"hilbert\",\"at\":\"2/3\",\"values\":[1,0]}}"
        );
    }

    #[test]
    fn rep_homotopy_examples() {
        assert!(!rep_homotopy_equivalent(&[2], &[]));
        assert!(rep_homotopy_equivalent(&[1], &[1, 0, 0]));
        assert!(rep_homotopy_equivalent(&[1, 2], &[2, 1]));
        assert!(!rep_homotopy_equivalent(&[2], &[-2]));
    }

    #[test]
    fn homotopy_theorem_examples() {
        let w = CircleWeightSystem::new(vec![2, 1, 1], Hyper).unwrap();
        assert!(check_homotopy_theorem(&w, 2).unwrap());
        assert!(check_homotopy_theorem(&w, 0).unwrap());
        let w = CircleWeightSystem::with_order(vec![2], Symplectic, 3).unwrap();
        assert!(check_homotopy_theorem(&w, 1).unwrap());
    }

    #[test]
    fn plain_equivariant_homotopy_is_not_enough() {
        // Weight (2) versus the empty representation at order 3: the sector
        // products differ (2u versus 1), although both spaces contract.
        let x = CircleWeightSystem::with_order(vec![2], Symplectic, 3).unwrap();
        let y = CircleWeightSystem::with_order(vec![], Symplectic, 3).unwrap();
        let px = crate::inertial::unit_product(&x, 1, 1);
        let py = crate::inertial::unit_product(&y, 1, 1);
        assert_eq!(px.u_exponent, 1);
        assert_eq!(py.u_exponent, 0);
        assert_ne!((px.coefficient, px.u_exponent), (py.coefficient, py.u_exponent));
    }

    proptest! {
        /// Rank bounds and dimension bookkeeping of fingerprints on random
        /// quotient rings.
        #[test]
        fn fingerprint_bounds(
            weights in proptest::collection::vec(1i64..=6, 1..=4),
            hyper in proptest::bool::ANY,
        ) {
            let mode = if hyper { Hyper } else { Symplectic };
            let ws = CircleWeightSystem::new(weights, mode).unwrap();
            prop_assume!(ws.order() <= 12);
            let a = cr_algebra(&ws).unwrap();
            let f = fingerprint(&a);
            prop_assert_eq!(f.hilbert.values().sum::<usize>(), a.dim());
            for ((da, db), rank) in &f.pairing_ranks {
                let dim_a = f.hilbert[da];
                let dim_b = f.hilbert[db];
                let dim_ab = f.hilbert.get(&(da + db)).copied().unwrap_or(0);
                prop_assert!(*rank <= (dim_a * dim_b).min(dim_ab));
            }
            // Pairings against a one-dimensional unit piece are omitted.
            if f.hilbert[&Rational::zero()] == 1 {
                for (a, _) in f.pairing_ranks.keys() {
                    prop_assert!(!a.is_zero());
                }
            }
        }

        #[test]
        fn rep_homotopy_is_an_equivalence(
            a in proptest::collection::vec(-4i64..=4, 0..5),
            b in proptest::collection::vec(-4i64..=4, 0..5),
            c in proptest::collection::vec(-4i64..=4, 0..5),
            zeros in 0usize..3,
            mut perm in proptest::collection::vec(0usize..100, 0..5),
        ) {
            prop_assert!(rep_homotopy_equivalent(&a, &a));
            prop_assert_eq!(rep_homotopy_equivalent(&a, &b), rep_homotopy_equivalent(&b, &a));
            if rep_homotopy_equivalent(&a, &b) && rep_homotopy_equivalent(&b, &c) {
                prop_assert!(rep_homotopy_equivalent(&a, &c));
            }
            // Constructed equivalent partner: permute and pad with zeros.
            let mut shuffled = a.clone();
            perm.truncate(shuffled.len());
            for (i, p) in perm.iter().enumerate() {
                let j = p % shuffled.len().max(1);
                shuffled.swap(i, j);
            }
            shuffled.extend(std::iter::repeat_n(0, zeros));
            prop_assert!(rep_homotopy_equivalent(&a, &shuffled));
        }
    }
}
