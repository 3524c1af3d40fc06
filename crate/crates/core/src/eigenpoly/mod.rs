//! θ/Θ variables and the eigenvalue polynomials `P_p(Λ⁺, N)`.
//!
//! `P_p` is defined through `cof_p(Λ⁺)/dimR(Λ⁺)`, normalised at the
//! fundamental weight `λ_k`, `k` the number of parts of `p`. For orders 4 to
//! 7 it has a closed form as a polynomial in the power sums
//! `Θ(s) = Σ θ_i^s` of the ρ-shifted coordinates, see [`tables`].

pub mod tables;
pub mod verify;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{DominantLambda, Partition, Scalar};
use crate::reps::{cof_rep, weyl_dim};

pub use tables::{
    closed_forms, closed_forms_from, known_errata, ClosedFormPoly, KnownErratum, Poly, RationalFn,
    Table, Term,
};
pub use verify::{
    default_sample, verify_class, verify_class_with, CoefficientCheck, Erratum, TierA, TierB,
    VerificationReport,
};

/// `θ_i = a_i + (N+1-i) - mean`, so that `θ_i - θ_{i+1} = 1 + r_i` and
/// `Σ θ_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaTuple(Vec<Scalar>);

impl ThetaTuple {
    pub fn values(&self) -> &[Scalar] {
        &self.0
    }

    /// `Θ(s) = Σ θ_i^s`.
    pub fn power(&self, s: u32) -> Scalar {
        self.0
            .iter()
            .map(|t| num_traits::pow(t.clone(), s as usize))
            .sum()
    }

    /// `Θ(m_1)…Θ(m_j)`; one for the empty monomial.
    pub fn monomial(&self, m: &Partition) -> Scalar {
        m.parts().iter().map(|&p| self.power(p)).product()
    }
}

pub fn theta(w: &DominantLambda) -> ThetaTuple {
    let mu = w.mu();
    let slots = mu.entries().len() as i64;
    let shifted: Vec<i64> = mu
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &a)| a + slots - 1 - i as i64)
        .collect();
    let mean = Scalar::new(shifted.iter().sum::<i64>().into(), slots.into());
    ThetaTuple(
        shifted
            .into_iter()
            .map(|x| Scalar::from_integer(x.into()) - &mean)
            .collect(),
    )
}

pub fn theta_power(s: u32, w: &DominantLambda) -> Scalar {
    theta(w).power(s)
}

/// Choice of the free coefficient of a closed form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// The published constants for `P_4`, `P_22`, `P_5`, `P_32`; one for the
    /// other classes.
    #[default]
    Default,
    Unit,
}

impl Normalization {
    /// The free coefficient as a function of `N`.
    pub fn free_coefficient(self, class: &Partition) -> RationalFn {
        match self {
            Normalization::Unit => RationalFn::constant(Scalar::one()),
            Normalization::Default => tables::default_free_coefficient(class)
                .unwrap_or_else(|| RationalFn::constant(Scalar::one())),
        }
    }
}

fn class_label(class: &Partition) -> String {
    class
        .parts()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The published closed form for `class`; orders outside 4 to 7 are
/// unsupported.
pub fn closed_form(class: &Partition) -> Result<&'static ClosedFormPoly> {
    closed_form_from(class, Table::Printed)
}

pub fn closed_form_from(class: &Partition, table: Table) -> Result<&'static ClosedFormPoly> {
    closed_forms_from(table)
        .iter()
        .find(|f| &f.class == class)
        .ok_or_else(|| Error::UnsupportedClass(class_label(class)))
}

fn denominators<'a>(
    form: &'a ClosedFormPoly,
    free: &'a RationalFn,
) -> impl Iterator<Item = &'a Poly> {
    form.denominator_factors().chain(free.den.iter())
}

/// Smallest `N` from which on no denominator factor vanishes.
pub fn n_min(class: &Partition, norm: Normalization) -> Result<u32> {
    n_min_with(class, norm, Table::Printed)
}

pub fn n_min_with(class: &Partition, norm: Normalization, table: Table) -> Result<u32> {
    let form = closed_form_from(class, table)?;
    let free = norm.free_coefficient(class);
    let worst = denominators(form, &free)
        .filter_map(|p| p.largest_natural_root(64))
        .max();
    Ok(worst.map_or(1, |r| (r + 1).max(1) as u32))
}

fn check_domain(form: &ClosedFormPoly, free: &RationalFn, n: u32) -> Result<()> {
    match denominators(form, free).find(|p| p.eval(n as i64).is_zero()) {
        Some(p) => Err(Error::Domain {
            class: class_label(&form.class),
            n,
            factor: p.to_string(),
        }),
        None => Ok(()),
    }
}

/// `Σ_α k_p(α, N) Θ_α(Λ⁺)` from the published tables, with the free
/// coefficient fixed by `norm`.
pub fn eval_closed(class: &Partition, w: &DominantLambda, norm: Normalization) -> Result<Scalar> {
    eval_closed_with(class, w, norm, Table::Printed)
}

pub fn eval_closed_with(
    class: &Partition,
    w: &DominantLambda,
    norm: Normalization,
    table: Table,
) -> Result<Scalar> {
    let form = closed_form_from(class, table)?;
    let free = norm.free_coefficient(class);
    let n = w.rank().n();
    check_domain(form, &free, n)?;
    let th = theta(w);
    let mut sum = Scalar::zero();
    for t in &form.terms {
        let k = t.ratio.eval(n as i64).expect("domain checked");
        if !k.is_zero() {
            sum += k * th.monomial(&t.monomial);
        }
    }
    Ok(sum * free.eval(n as i64).expect("domain checked"))
}

/// `cof_p(Λ⁺)/dimR(Λ⁺)`.
pub fn cof_density(class: &Partition, w: &DominantLambda) -> Scalar {
    let cof = cof_rep(w, class.size()).get(class);
    let dim = Scalar::from_integer(BigInt::from(weyl_dim(w)));
    cof / dim
}

/// `P_p(Λ⁺) = cof_p(Λ⁺)/cof_p(λ_k) · dimR(λ_k)/dimR(Λ⁺) · P_p(λ_k)`.
pub fn eval_from_cof(class: &Partition, w: &DominantLambda, reference: &Scalar) -> Result<Scalar> {
    let rank = w.rank();
    let k = class.len();
    let degenerate = || Error::DegenerateReference {
        class: class_label(class),
        k,
        n: rank.n(),
    };
    if k == 0 || class.has_part_one() {
        return Err(Error::UnsupportedClass(class_label(class)));
    }
    if k > rank.n() as usize {
        return Err(degenerate());
    }
    let base = cof_density(class, &DominantLambda::fundamental(k, rank)?);
    if base.is_zero() {
        return Err(degenerate());
    }
    Ok(cof_density(class, w) / base * reference)
}
