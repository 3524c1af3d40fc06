//! Formal symmetric functions over the fundamental weights `μ_I`.
//!
//! Two bases are used. In the monomial basis a key `(s_1,…,s_k)` stands for
//! `μ(s_1,…,s_k)`, the sum over *distinct* monomials
//! `μ_{I_1}^{s_1} … μ_{I_k}^{s_k}` with pairwise different indices. In the
//! power-product basis the same key stands for `μ(s_1) μ(s_2) … μ(s_k)` with
//! `μ(s) = Σ_I μ_I^s`; the empty key is the constant `1`.
//!
//! [`reduce_to_power`] rewrites a monomial generator in power sums. The
//! identical rules hold for the numeric generators `q(…)` evaluated on a
//! weight's coordinates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{factorial, partitions, Partition, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    PowerProduct,
}

/// Exact linear combination over one of the two bases. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpr {
    basis: Basis,
    terms: BTreeMap<Partition, Scalar>,
}

impl SymExpr {
    pub fn zero(basis: Basis) -> Self {
        SymExpr {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(basis: Basis, key: Partition, coeff: Scalar) -> Self {
        let mut e = SymExpr::zero(basis);
        e.add_term(key, coeff);
        e
    }

    /// The power sum `μ(s)` (or `1` for `s = 0`).
    pub fn power_sum(s: u32) -> Self {
        let key = if s == 0 {
            Partition::empty()
        } else {
            Partition::single(s)
        };
        SymExpr::term(Basis::PowerProduct, key, Scalar::one())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Scalar> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &Partition) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, key: Partition, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &SymExpr, factor: &Scalar) {
        assert_eq!(self.basis, other.basis, "mixing bases");
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> SymExpr {
        let mut out = SymExpr::zero(self.basis);
        out.add_scaled(self, factor);
        out
    }

    /// Product in the power-product basis.
    pub fn mul_power(&self, other: &SymExpr) -> SymExpr {
        assert!(
            self.basis == Basis::PowerProduct && other.basis == Basis::PowerProduct,
            "products are only formed over power sums"
        );
        let mut out = SymExpr::zero(Basis::PowerProduct);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term(ka.union(kb), ca * cb);
            }
        }
        out
    }

    /// Total degree of every stored key.
    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(Partition::size)
    }

    /// Renders a key as `mu(3,1)` or `mu(2)^2*mu(3)` depending on the basis.
    pub fn key_label(&self, key: &Partition) -> String {
        key_label(self.basis, key)
    }
}

pub fn key_label(basis: Basis, key: &Partition) -> String {
    match basis {
        Basis::Monomial => format!("mu{key}"),
        Basis::PowerProduct => {
            if key.is_empty() {
                return "1".to_string();
            }
            let mut parts = Vec::new();
            for v in key.distinct_parts().into_iter().rev() {
                let m = key.multiplicity(v);
                if m == 1 {
                    parts.push(format!("mu({v})"));
                } else {
                    parts.push(format!("mu({v})^{m}"));
                }
            }
            parts.join("*")
        }
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", c, self.key_label(k))?;
        }
        Ok(())
    }
}

fn reduction_cache() -> &'static RwLock<HashMap<Partition, SymExpr>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, SymExpr>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Expresses the monomial generator `μ(p)` as a polynomial in power sums.
///
/// Peels off the largest part `a` of `p = ν ∪ {a}`:
/// `μ(a)·μ(ν) = mult_p(a)·μ(p) + Σ_b mult_{λ_b}(a+b)·μ(λ_b)` where `b` runs
/// over the distinct parts of `ν` and `λ_b = ν - {b} + {a+b}` has fewer
/// parts. Results are cached per partition.
pub fn reduce_to_power(p: &Partition) -> SymExpr {
    if let Some(hit) = reduction_cache().read().expect("cache poisoned").get(p) {
        return hit.clone();
    }
    let result = reduce_uncached(p);
    reduction_cache()
        .write()
        .expect("cache poisoned")
        .insert(p.clone(), result.clone());
    result
}

fn reduce_uncached(p: &Partition) -> SymExpr {
    match p.len() {
        0 => return SymExpr::power_sum(0),
        1 => return SymExpr::power_sum(p.parts()[0]),
        _ => {}
    }
    let a = p.parts()[0];
    let rest = p.without_part(a);
    let mut acc = SymExpr::power_sum(a).mul_power(&reduce_to_power(&rest));
    for b in rest.distinct_parts() {
        let merged = rest.without_part(b).with_part(a + b);
        let mult = merged.multiplicity(a + b) as i64;
        acc.add_scaled(
            &reduce_to_power(&merged),
            &Scalar::from_integer((-mult).into()),
        );
    }
    let mult_a = p.multiplicity(a) as i64;
    acc.scaled(&BigRational::new(BigInt::one(), BigInt::from(mult_a)))
}

/// Rewrites every monomial generator of a monomial-basis expression in power
/// sums.
pub fn to_power_basis(expr: &SymExpr) -> SymExpr {
    match expr.basis {
        Basis::PowerProduct => expr.clone(),
        Basis::Monomial => {
            let mut out = SymExpr::zero(Basis::PowerProduct);
            for (k, c) in &expr.terms {
                out.add_scaled(&reduce_to_power(k), c);
            }
            out
        }
    }
}

fn pow<T>(x: &T, e: u32) -> T
where
    T: Clone + One + for<'a> std::ops::Mul<&'a T, Output = T>,
{
    (0..e).fold(T::one(), |acc, _| acc * x)
}

/// Monomial symmetric function `m_p` on `values`, each distinct monomial
/// counted once. Generic over the value ring so the orbit formula can run on
/// plain integers.
pub(crate) fn monomial_sum<T>(p: &Partition, values: &[T]) -> T
where
    T: Clone + Zero + One + for<'a> std::ops::Mul<&'a T, Output = T>,
{
    // Dynamic programme over the sub-multisets of p still to be placed.
    let distinct = p.distinct_parts();
    let counts: Vec<usize> = distinct.iter().map(|&v| p.multiplicity(v)).collect();
    let mut radix = Vec::with_capacity(counts.len());
    let mut states = 1usize;
    for &c in &counts {
        radix.push(states);
        states *= c + 1;
    }
    let full: usize = counts.iter().zip(&radix).map(|(c, r)| c * r).sum();
    let mut table: Vec<T> = vec![T::zero(); states];
    table[full] = T::one();
    for x in values {
        let powers: Vec<T> = distinct.iter().map(|&d| pow(x, d)).collect();
        // States only decrease, so sweeping upwards reads pre-update values.
        for st in 0..states {
            for (j, &r) in radix.iter().enumerate() {
                let have = (st / r) % (counts[j] + 1);
                if have == counts[j] {
                    continue;
                }
                let from = st + r;
                if table[from].is_zero() {
                    continue;
                }
                let add = table[from].clone() * &powers[j];
                table[st] = table[st].clone() + add;
            }
        }
    }
    table.swap_remove(0)
}

/// Evaluates `μ(p)` (equivalently `q(p)`) on a tuple of values.
pub fn eval_monomial(p: &Partition, values: &[Scalar]) -> Result<Scalar> {
    if values.len() < p.len() {
        return Err(Error::UndefinedGenerator {
            parts: p.len(),
            len: values.len(),
        });
    }
    Ok(monomial_sum(p, values))
}

/// Evaluates a power-product expression with `μ(s) := Σ values^s`.
pub fn eval_power_product(expr: &SymExpr, values: &[Scalar]) -> Scalar {
    assert_eq!(
        expr.basis,
        Basis::PowerProduct,
        "expected power-product basis"
    );
    let mut sums: HashMap<u32, Scalar> = HashMap::new();
    let mut total = Scalar::zero();
    for (k, c) in &expr.terms {
        let mut term = c.clone();
        for &s in k.parts() {
            let ps = sums
                .entry(s)
                .or_insert_with(|| values.iter().map(|v| pow(v, s)).sum());
            term *= &*ps;
        }
        total += term;
    }
    total
}

/// Outcome of comparing `h_k` against the elementary Schur function `S_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurReport {
    pub k: u32,
    /// `h_k` after reduction and `μ(s) → s x_s`; keys denote `∏ x_{part}`.
    pub reduced: SymExpr,
    /// `S_k(x) = Σ ∏_j x_j^{k_j} / k_j!`.
    pub expected: SymExpr,
    /// `reduced - expected`.
    pub difference: SymExpr,
}

impl SchurReport {
    pub fn equal(&self) -> bool {
        self.difference.is_zero()
    }
}

/// Builds `h_k = Σ_{p ⊢ k} μ(p)`, reduces it, substitutes `μ(s) → s x_s` and
/// compares with the explicit expansion of `S_k(x)`.
pub fn schur_check(k: u32) -> SchurReport {
    let mut h = SymExpr::zero(Basis::Monomial);
    for p in partitions(k) {
        h.add_term(p, Scalar::one());
    }
    let reduced_mu = to_power_basis(&h);
    let mut reduced = SymExpr::zero(Basis::PowerProduct);
    for (key, c) in reduced_mu.iter() {
        let weight: BigInt = key.parts().iter().map(|&s| BigInt::from(s)).product();
        reduced.add_term(key.clone(), c * Scalar::from_integer(weight));
    }
    let mut expected = SymExpr::zero(Basis::PowerProduct);
    for p in partitions(k) {
        let den: num_bigint::BigUint = p
            .distinct_parts()
            .iter()
            .map(|&v| factorial(p.multiplicity(v) as u64))
            .product();
        expected.add_term(p, BigRational::new(BigInt::one(), BigInt::from(den)));
    }
    let mut difference = reduced.clone();
    difference.add_scaled(&expected, &-Scalar::one());
    SchurReport {
        k,
        reduced,
        expected,
        difference,
    }
}
