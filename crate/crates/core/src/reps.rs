//! Irreducible representations: Weyl dimension, Freudenthal multiplicities,
//! and the decomposition of `R(Λ⁺)` into Weyl orbits.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::lattice::{mu_to_lambda, DominantLambda, MuTuple, Rank, Scalar};
use crate::orbit_char::{ch_orbit, cof_extract, CofVector, Method};
use crate::orbits::orbit_dimension;
use crate::symfun::{Basis, SymExpr};

/// `⟨a, b⟩ = Σ a_I b_I - (Σ a)(Σ b)/(N+1)` on μ-tuples; roots have length² 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InnerProduct {
    slots: usize,
}

impl InnerProduct {
    pub fn new(rank: Rank) -> Self {
        InnerProduct {
            slots: rank.slots(),
        }
    }

    pub fn pair(&self, a: &[i64], b: &[i64]) -> Scalar {
        Scalar::new(self.pair_scaled(a, b).into(), (self.slots as i64).into())
    }

    /// `(N+1)·⟨a, b⟩`, always an integer.
    pub fn pair_scaled(&self, a: &[i64], b: &[i64]) -> i64 {
        debug_assert_eq!(a.len(), self.slots);
        debug_assert_eq!(b.len(), self.slots);
        let dot: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        let sa: i64 = a.iter().sum();
        let sb: i64 = b.iter().sum();
        self.slots as i64 * dot - sa * sb
    }
}

/// `∏_{i<j} (θ_i - θ_j)/(j - i)` with `θ_i - θ_j = a_i - a_j + (j - i)`.
pub fn weyl_dim(w: &DominantLambda) -> BigUint {
    let a = w.mu().into_vec();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let gap = (j - i) as i64;
            num *= (a[i] - a[j] + gap) as u64;
            den *= gap as u64;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

fn sort_desc(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Dominant weights below `top` (same coordinate sum), `top` first and then by
/// increasing depth.
fn dominant_weights_below(top: &[i64]) -> Vec<Vec<i64>> {
    // Moving one unit from a larger to a smaller coordinate subtracts a
    // positive root; every dominated dominant weight is reached this way.
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(top.to_vec(), ());
    queue.push_back(top.to_vec());
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len() {
            for j in i + 1..cur.len() {
                if cur[i] - cur[j] < 2 {
                    continue;
                }
                let mut next = cur.clone();
                next[i] -= 1;
                next[j] += 1;
                let next = sort_desc(next);
                if seen.insert(next.clone(), ()).is_none() {
                    queue.push_back(next);
                }
            }
        }
    }
    let prefix = |v: &[i64]| -> Vec<i64> {
        v.iter()
            .scan(0, |acc, x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    };
    let top_prefix = prefix(top);
    let level = |v: &[i64]| -> i64 { top_prefix.iter().zip(prefix(v)).map(|(t, p)| t - p).sum() };
    let mut all: Vec<Vec<i64>> = seen.into_keys().collect();
    all.sort_by(|a, b| level(a).cmp(&level(b)).then_with(|| b.cmp(a)));
    all
}

fn to_dominant(v: &[i64]) -> DominantLambda {
    let min = *v.iter().min().expect("non-empty");
    let canon =
        MuTuple::canonical(v.iter().map(|x| x - min).collect()).expect("at least two slots");
    DominantLambda::try_from_weight(mu_to_lambda(&canon)).expect("sorted")
}

/// Multiplicities of every dominant weight of `R(w)` by Freudenthal's
/// recursion over positive roots `μ_I - μ_J`, `I < J`:
///
/// `(|Λ+ρ|² - |λ+ρ|²) m(λ) = 2 Σ_{α>0} Σ_{k≥1} m(λ+kα) ⟨λ+kα, α⟩`.
///
/// Non-dominant weights take the multiplicity of their sorted rearrangement.
pub fn freudenthal(w: &DominantLambda) -> BTreeMap<DominantLambda, BigUint> {
    freudenthal_by_level(w).into_iter().collect()
}

fn freudenthal_by_level(w: &DominantLambda) -> Vec<(DominantLambda, BigUint)> {
    let rank = w.rank();
    let form = InnerProduct::new(rank);
    let slots = rank.slots();
    let top = w.mu().into_vec();
    let rho: Vec<i64> = (0..slots).rev().map(|i| i as i64).collect();
    let shift = |v: &[i64]| -> Vec<i64> { v.iter().zip(&rho).map(|(a, r)| a + r).collect() };
    let top_rho = shift(&top);
    let top_norm = form.pair_scaled(&top_rho, &top_rho);

    let order = dominant_weights_below(&top);
    let mut mult: HashMap<Vec<i64>, BigInt> = HashMap::new();
    mult.insert(top.clone(), BigInt::one());
    for lam in order.iter().skip(1) {
        let mut acc = BigInt::zero();
        for i in 0..slots {
            for j in i + 1..slots {
                let mut alpha = vec![0i64; slots];
                alpha[i] = 1;
                alpha[j] = -1;
                let mut shifted = lam.clone();
                loop {
                    shifted[i] += 1;
                    shifted[j] -= 1;
                    let Some(m) = mult.get(&sort_desc(shifted.clone())) else {
                        break;
                    };
                    acc += m * form.pair_scaled(&shifted, &alpha);
                }
            }
        }
        let lam_rho = shift(lam);
        let gap = top_norm - form.pair_scaled(&lam_rho, &lam_rho);
        let (m, r) = (acc * BigInt::from(2)).div_rem(&BigInt::from(gap));
        debug_assert!(r.is_zero(), "non-integral multiplicity at {lam:?}");
        mult.insert(lam.clone(), m);
    }
    order
        .into_iter()
        .map(|v| {
            let m = mult.remove(&v).expect("computed");
            (
                to_dominant(&v),
                m.to_biguint().expect("multiplicities are positive"),
            )
        })
        .collect()
}

/// `R(Λ⁺) = Σ m(λ⁺) Π(λ⁺)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitalDecomposition {
    highest: DominantLambda,
    entries: Vec<(DominantLambda, BigUint)>,
}

impl OrbitalDecomposition {
    pub fn highest(&self) -> &DominantLambda {
        &self.highest
    }

    /// Orbits with their multiplicities, the highest weight first and then by
    /// increasing depth below it.
    pub fn entries(&self) -> &[(DominantLambda, BigUint)] {
        &self.entries
    }

    /// `Σ m(λ⁺)·|Π(λ⁺)|`.
    pub fn dimension(&self) -> BigUint {
        self.entries
            .iter()
            .map(|(w, m)| m * orbit_dimension(w))
            .sum()
    }
}

pub fn orbital_decomposition(w: &DominantLambda) -> OrbitalDecomposition {
    OrbitalDecomposition {
        highest: w.clone(),
        entries: freudenthal_by_level(w),
    }
}

/// `ch_s(R(w)) = Σ m(λ⁺) ch_s(Π(λ⁺))`.
pub fn ch_rep(w: &DominantLambda, s: u32, method: Method) -> SymExpr {
    let decomposition = orbital_decomposition(w);
    let parts: Vec<SymExpr> = decomposition
        .entries()
        .par_iter()
        .map(|(orbit, m)| {
            ch_orbit(orbit, s, method).scaled(&Scalar::from_integer(BigInt::from(m.clone())))
        })
        .collect();
    let mut out = SymExpr::zero(Basis::Monomial);
    for p in &parts {
        out.add_scaled(p, &Scalar::one());
    }
    out
}

pub fn cof_rep(w: &DominantLambda, s: u32) -> CofVector {
    cof_extract(&ch_rep(w, s, Method::Formula), s)
}
