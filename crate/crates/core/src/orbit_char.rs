//! The orbital power-sum character `ch_s(Π) = Σ_{μ ∈ Π} μ^s`, computed by the
//! closed orbit formula and by brute-force expansion over the orbit, and its
//! `cof` coefficients in the power-product basis.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{
    factorial, partitions, partitions_into_k, partitions_no_ones, DominantLambda, Partition, Rank,
    Scalar,
};
use crate::orbits::split_by_leading;
use crate::symfun::{monomial_sum, to_power_basis, Basis, SymExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Formula,
    BruteForce,
}

/// `cof_p` for every partition `p` of the order with no unit part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofVector {
    order: u32,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl CofVector {
    pub fn zero(order: u32) -> Self {
        CofVector {
            order,
            coeffs: partitions_no_ones(order)
                .into_iter()
                .map(|p| (p, Scalar::zero()))
                .collect(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficient of `μ(p_1)…μ(p_k)`; zero for classes of another order.
    pub fn get(&self, class: &Partition) -> Scalar {
        self.coeffs.get(class).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Classes largest first, i.e. `(s)` before `(s-2,2)`.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.coeffs.iter().rev()
    }

    pub fn classes(&self) -> Vec<Partition> {
        self.coeffs.keys().rev().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_scaled(&mut self, other: &CofVector, factor: &Scalar) {
        assert_eq!(self.order, other.order, "orders differ");
        for (k, c) in &other.coeffs {
            *self.coeffs.get_mut(k).expect("same key set") += c * factor;
        }
    }
}

fn ratio(num: BigUint, den: &BigUint) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den.clone()))
}

/// `Ω_s(q_1,…,q_σ; N)` with the monomial generators `μ(…)` kept formal.
///
/// `q` holds the strictly positive entries of a dominant μ-tuple, largest
/// first. Partitions with more than `σ` parts do not contribute.
pub fn omega(q: &[i64], s: u32, rank: Rank) -> Result<SymExpr> {
    let sigma = q.len();
    let slots = rank.slots();
    if sigma > slots {
        return Err(Error::LengthMismatch {
            expected: slots,
            found: sigma,
        });
    }
    if q.iter().any(|&x| x <= 0) || q.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parse(format!(
            "orbit parameters {q:?} must be positive and non-increasing"
        )));
    }
    let qs: Vec<BigInt> = q.iter().map(|&x| BigInt::from(x)).collect();
    let outer = factorial((slots - sigma) as u64);
    let mut out = SymExpr::zero(Basis::Monomial);
    for k in 1..=sigma.min(s as usize) {
        let lead = factorial((slots - k) as u64);
        for p in partitions_into_k(s, k) {
            let q_val = monomial_sum(&p, &qs);
            let num = &lead * p.xi() * p.multinomial();
            let c = Scalar::from_integer(q_val) * ratio(num, &outer);
            out.add_term(p, c);
        }
    }
    Ok(out)
}

/// `ch_s` of the orbit `Π(w)` in the monomial basis.
pub fn ch_orbit(w: &DominantLambda, s: u32, method: Method) -> SymExpr {
    match method {
        Method::Formula => ch_orbit_formula(w, s),
        Method::BruteForce => ch_bruteforce(w.mu().entries(), s),
    }
}

fn ch_orbit_formula(w: &DominantLambda, s: u32) -> SymExpr {
    if w.is_zero() {
        return SymExpr::zero(Basis::Monomial);
    }
    let mu = w.mu();
    let q = mu.positive_entries();
    let omega = omega(&q, s, w.rank()).expect("dominant tuples are valid orbit parameters");
    let xi = BigInt::from(mu.nonzero_value_symmetry());
    omega.scaled(&BigRational::new(BigInt::from(1), xi))
}

/// Expands `Σ (Σ_I a_I μ_I)^s` over all distinct rearrangements of `entries`.
///
/// The sum is symmetric, so the coefficient of `μ(p)` equals the coefficient
/// of the single monomial `μ_1^{p_1} … μ_k^{p_k}`, which is
/// `M(p) Σ_{orbit} a_1^{p_1} … a_k^{p_k}`. Any gauge of the tuple is
/// accepted.
pub fn ch_bruteforce(entries: &[i64], s: u32) -> SymExpr {
    let slots = entries.len();
    let pats: Vec<Partition> = partitions(s)
        .into_iter()
        .filter(|p| p.len() <= slots)
        .collect();
    let max_abs = entries.iter().map(|a| a.unsigned_abs()).max().unwrap_or(0);
    // Entries of magnitude ≤ 15 keep every product and orbit sum inside i128.
    let narrow = max_abs <= 15 && s <= 12;
    let chunks = split_by_leading(entries.to_vec());
    let sums: Vec<BigInt> = if narrow {
        let partial: Vec<Vec<i128>> = chunks
            .into_par_iter()
            .map(|chunk| {
                let mut acc = vec![0i128; pats.len()];
                for elem in chunk {
                    for (slot, p) in acc.iter_mut().zip(&pats) {
                        let mut prod = 1i128;
                        for (a, &e) in elem.iter().zip(p.parts()) {
                            prod *= (*a as i128).pow(e);
                        }
                        *slot += prod;
                    }
                }
                acc
            })
            .collect();
        (0..pats.len())
            .map(|i| BigInt::from(partial.iter().map(|v| v[i]).sum::<i128>()))
            .collect()
    } else {
        let partial: Vec<Vec<BigInt>> = chunks
            .into_par_iter()
            .map(|chunk| {
                let mut acc = vec![BigInt::zero(); pats.len()];
                for elem in chunk {
                    for (slot, p) in acc.iter_mut().zip(&pats) {
                        let mut prod = BigInt::from(1);
                        for (a, &e) in elem.iter().zip(p.parts()) {
                            prod *= BigInt::from(*a).pow(e);
                        }
                        *slot += prod;
                    }
                }
                acc
            })
            .collect();
        (0..pats.len())
            .map(|i| partial.iter().map(|v| &v[i]).sum())
            .collect()
    };
    let mut out = SymExpr::zero(Basis::Monomial);
    for (p, sum) in pats.into_iter().zip(sums) {
        let m = BigInt::from(p.multinomial());
        out.add_term(p, Scalar::from_integer(sum * m));
    }
    out
}

/// Reduces a degree-`s` monomial-basis expression to power products, sets
/// `μ(1) = 0`, and collects the surviving coefficients.
pub fn cof_extract(expr: &SymExpr, s: u32) -> CofVector {
    let mut out = CofVector::zero(s);
    let power = to_power_basis(expr);
    for (key, c) in power.iter() {
        if key.has_part_one() {
            continue;
        }
        debug_assert_eq!(key.size(), s, "inhomogeneous input");
        if let Some(slot) = out.coeffs.get_mut(key) {
            *slot += c;
        }
    }
    out
}
