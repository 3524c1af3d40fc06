//! Exact verification of the closed forms against `cof_p/dimR`.
//!
//! Tier A checks that `cof_p(Λ⁺)/dimR(Λ⁺)` divided by the closed form is the
//! same constant on every sample weight. Tier B fits `cof_p/dimR` on the
//! full basis of Θ-monomials of degree at most `|p|` and compares each fitted
//! coefficient, relative to the free one, with the tabulated ratio.

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{closed_form_from, cof_density, eval_closed_with, theta, Normalization, Table};
use crate::error::Result;
use crate::lattice::{DominantLambda, Partition, Rank, Scalar};

/// One weight's Tier A ratio; `None` when both sides vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioSample {
    pub weight: DominantLambda,
    pub density: Scalar,
    pub closed: Scalar,
    pub ratio: Option<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TierA {
    pub samples: Vec<RatioSample>,
    pub constant: Option<Scalar>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientCheck {
    pub index: Option<usize>,
    pub monomial: Partition,
    /// Tabulated ratio at this `N`; zero for monomials outside the table.
    pub printed: Scalar,
    pub fitted: Option<Scalar>,
    /// False when the coefficient is absent from the table.
    pub listed: bool,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TierB {
    pub unknowns: usize,
    pub rank: usize,
    /// The linear system had a solution.
    pub consistent: bool,
    pub checks: Vec<CoefficientCheck>,
}

impl TierB {
    pub fn determined(&self) -> bool {
        self.consistent && self.rank == self.unknowns
    }

    pub fn passed(&self) -> bool {
        self.determined() && self.checks.iter().all(|c| c.matches)
    }
}

/// A tabulated coefficient that disagrees with the fit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub label: String,
    pub n: u32,
    pub monomial: Partition,
    pub printed: Scalar,
    pub fitted: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub class: Partition,
    pub n: u32,
    pub tier_a: TierA,
    pub tier_b: TierB,
    pub table: Table,
}

impl VerificationReport {
    pub fn errata(&self) -> Vec<Erratum> {
        let form = closed_form_from(&self.class, self.table).expect("verified class");
        self.tier_b
            .checks
            .iter()
            .filter(|c| !c.matches)
            .filter_map(|c| {
                let fitted = c.fitted.clone()?;
                let label = match c.index {
                    Some(i) => form.coefficient_label(i),
                    None => format!("{}(Θ{},N)", form.label(), c.monomial),
                };
                Some(Erratum {
                    label,
                    n: self.n,
                    monomial: c.monomial.clone(),
                    printed: c.printed.clone(),
                    fitted,
                })
            })
            .collect()
    }
}

/// `Θ`-monomials with parts ≥ 2 and degree at most `s`, the constant included.
pub fn theta_basis(s: u32) -> Vec<Partition> {
    (0..=s)
        .rev()
        .flat_map(|d| {
            if d == 0 {
                vec![Partition::empty()]
            } else {
                crate::lattice::partitions_no_ones(d)
            }
        })
        .collect()
}

/// Largest `Σ r_i` in [`default_sample`].
pub const SAMPLE_LEVEL: i64 = 3;

/// `λ_k` followed by every dominant weight with `Σ r_i ≤ 3`, by level.
pub fn default_sample(class: &Partition, rank: Rank) -> Vec<DominantLambda> {
    let n = rank.n() as usize;
    let mut out = Vec::new();
    if (1..=n).contains(&class.len()) {
        out.push(DominantLambda::fundamental(class.len(), rank).expect("in range"));
    }
    for level in 0..=SAMPLE_LEVEL {
        for c in compositions(level, n) {
            let w = DominantLambda::new(c, rank).expect("dominant");
            if !out.contains(&w) {
                out.push(w);
            }
        }
    }
    out
}

/// Non-negative vectors of length `len` summing to `total`, lexicographically decreasing.
fn compositions(total: i64, len: usize) -> Vec<Vec<i64>> {
    if len == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Row-reduces `[a | b]`; returns the solution when the system is
/// consistent and of full column rank, along with rank and consistency.
fn solve_exact(mut rows: Vec<Vec<Scalar>>, cols: usize) -> (usize, bool, Option<Vec<Scalar>>) {
    let mut rank = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = Scalar::one() / &rows[rank][col];
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let consistent = rows[rank..].iter().all(|r| r[cols].is_zero());
    if !consistent || rank < cols {
        return (rank, consistent, None);
    }
    let sol = (0..cols).map(|i| rows[i][cols].clone()).collect();
    (rank, consistent, Some(sol))
}

/// Runs Tier A and Tier B for the published `class` at `rank`.
pub fn verify_class(
    class: &Partition,
    rank: Rank,
    sample: &[DominantLambda],
) -> Result<VerificationReport> {
    verify_class_with(class, rank, sample, Table::Printed)
}

pub fn verify_class_with(
    class: &Partition,
    rank: Rank,
    sample: &[DominantLambda],
    table: Table,
) -> Result<VerificationReport> {
    let form = closed_form_from(class, table)?;
    let n = rank.n();
    let basis = theta_basis(class.size());

    let rows: Vec<Result<(RatioSample, Vec<Scalar>)>> = sample
        .par_iter()
        .map(|w| {
            let density = cof_density(class, w);
            let closed = eval_closed_with(class, w, Normalization::Unit, table)?;
            let ratio = if closed.is_zero() {
                if density.is_zero() {
                    None
                } else {
                    // a non-zero density over a vanishing polynomial has no ratio
                    Some(Scalar::zero())
                }
            } else {
                Some(&density / &closed)
            };
            let th = theta(w);
            let mut row: Vec<Scalar> = basis.iter().map(|m| th.monomial(m)).collect();
            row.push(density.clone());
            Ok((
                RatioSample {
                    weight: w.clone(),
                    density,
                    closed,
                    ratio,
                },
                row,
            ))
        })
        .collect();
    let mut samples = Vec::with_capacity(rows.len());
    let mut system = Vec::with_capacity(rows.len());
    for r in rows {
        let (s, row) = r?;
        samples.push(s);
        system.push(row);
    }

    let degenerate = samples
        .iter()
        .any(|s| s.closed.is_zero() && !s.density.is_zero());
    let mut defined = samples.iter().filter_map(|s| s.ratio.as_ref());
    let constant = defined.next().cloned();
    let passed = !degenerate
        && constant.as_ref().is_some_and(|c| !c.is_zero())
        && samples
            .iter()
            .filter_map(|s| s.ratio.as_ref())
            .all(|r| Some(r) == constant.as_ref());
    let tier_a = TierA {
        samples,
        constant: if passed { constant } else { None },
        passed,
    };

    let (fit_rank, consistent, solution) = solve_exact(system, basis.len());
    let free_monomial = &form.free_term().monomial;
    let free_fit = solution.as_ref().and_then(|sol| {
        let i = basis
            .iter()
            .position(|m| m == free_monomial)
            .expect("free monomial in basis");
        (!sol[i].is_zero()).then(|| sol[i].clone())
    });
    let checks = basis
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let term = form.ratio_for(m);
            let printed = term
                .map(|t| t.ratio.eval(n as i64).expect("n above n_min"))
                .unwrap_or_else(Scalar::zero);
            let fitted = match (&solution, &free_fit) {
                (Some(sol), Some(free)) => Some(&sol[i] / free),
                _ => None,
            };
            let matches = fitted.as_ref() == Some(&printed);
            CoefficientCheck {
                index: term.map(|t| t.index),
                monomial: m.clone(),
                printed,
                fitted,
                listed: term.is_some_and(|t| t.printed),
                matches,
            }
        })
        .collect();
    Ok(VerificationReport {
        class: class.clone(),
        n,
        tier_a,
        tier_b: TierB {
            unknowns: basis.len(),
            rank: fit_rank,
            consistent,
            checks,
        },
        table,
    })
}
