#![allow(dead_code)]

use std::collections::BTreeMap;

use casimir::lattice::{partitions, Partition, Rank, Scalar};
use casimir::symfun::reduce_to_power;
use casimir::{Basis, DominantLambda, SymExpr};
use num_traits::{One, Zero};
use rand::Rng;

pub fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

/// Power-product expression from `(num, den, [power-sum degrees])` triples.
pub fn power_expr(terms: &[(i64, i64, &[u32])]) -> SymExpr {
    let mut e = SymExpr::zero(Basis::PowerProduct);
    for (n, d, k) in terms {
        e.add_term(part(k), rat(*n, *d));
    }
    e
}

/// Reduction rules as printed, right-hand sides in power sums.
pub fn printed_closed_rules() -> Vec<(Partition, SymExpr)> {
    vec![
        // four-part and lower rules of order 4
        (
            part(&[1, 1, 1, 1]),
            power_expr(&[
                (1, 24, &[1, 1, 1, 1]),
                (-1, 4, &[2, 1, 1]),
                (1, 8, &[2, 2]),
                (1, 3, &[3, 1]),
                (-1, 4, &[4]),
            ]),
        ),
        (
            part(&[2, 1, 1]),
            power_expr(&[
                (1, 2, &[2, 1, 1]),
                (-1, 2, &[2, 2]),
                (-1, 1, &[3, 1]),
                (1, 1, &[4]),
            ]),
        ),
        (part(&[3, 1]), power_expr(&[(1, 1, &[3, 1]), (-1, 1, &[4])])),
        (part(&[2, 2]), power_expr(&[(1, 2, &[2, 2]), (-1, 2, &[4])])),
        // order 5
        (part(&[4, 1]), power_expr(&[(1, 1, &[4, 1]), (-1, 1, &[5])])),
        (part(&[3, 2]), power_expr(&[(1, 1, &[3, 2]), (-1, 1, &[5])])),
        (
            part(&[3, 1, 1]),
            power_expr(&[
                (1, 2, &[3, 1, 1]),
                (-1, 2, &[3, 2]),
                (-1, 1, &[4, 1]),
                (1, 1, &[5]),
            ]),
        ),
        (
            part(&[2, 2, 1]),
            power_expr(&[
                (1, 2, &[2, 2, 1]),
                (-1, 1, &[3, 2]),
                (-1, 2, &[4, 1]),
                (1, 1, &[5]),
            ]),
        ),
        (
            part(&[2, 1, 1, 1]),
            power_expr(&[
                (1, 6, &[2, 1, 1, 1]),
                (-3, 6, &[2, 2, 1]),
                (-3, 6, &[3, 1, 1]),
                (5, 6, &[3, 2]),
                (6, 6, &[4, 1]),
                (-6, 6, &[5]),
            ]),
        ),
        (
            part(&[1, 1, 1, 1, 1]),
            power_expr(&[
                (1, 120, &[1, 1, 1, 1, 1]),
                (-10, 120, &[2, 1, 1, 1]),
                (15, 120, &[2, 2, 1]),
                (20, 120, &[3, 1, 1]),
                (-20, 120, &[3, 2]),
                (-30, 120, &[4, 1]),
                (24, 120, &[5]),
            ]),
        ),
    ]
}

/// A product of generators `q(p_1) q(p_2) …` with a rational weight.
pub type QTerm = (Scalar, Vec<Vec<u32>>);

/// One instance of a printed recursive rule: `q(lhs) = Σ c ∏ q(…)`.
#[derive(Clone, Debug)]
pub struct RuleInstance {
    pub name: &'static str,
    pub lhs: Partition,
    pub rhs: Vec<QTerm>,
}

impl RuleInstance {
    /// The right-hand side with every generator reduced to power sums.
    pub fn rhs_power(&self) -> SymExpr {
        let mut out = SymExpr::zero(Basis::PowerProduct);
        for (c, factors) in &self.rhs {
            let mut prod = SymExpr::power_sum(0);
            for f in factors {
                prod = prod.mul_power(&reduce_to_power(&part(f)));
            }
            out.add_scaled(&prod, c);
        }
        out
    }

    pub fn holds(&self) -> bool {
        reduce_to_power(&self.lhs) == self.rhs_power()
    }
}

fn q(v: &[u32]) -> Vec<u32> {
    v.to_vec()
}

fn rep(a: u32, n: usize) -> Vec<u32> {
    vec![a; n]
}

fn cat(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

/// The printed recursive rules instantiated for all admissible arguments
/// with total degree at most `max_degree`. `corrected` adds the
/// `q(2 i_1, …)` term missing from three of them.
pub fn recursive_rules(max_degree: u32, corrected: bool) -> Vec<RuleInstance> {
    let one = Scalar::one;
    let neg = || -Scalar::one();
    let frac = |d: i64| rat(1, d);
    let mut out = Vec::new();
    let mut push = |name, lhs: Vec<u32>, rhs: Vec<QTerm>| {
        if lhs.iter().sum::<u32>() <= max_degree {
            out.push(RuleInstance {
                name,
                lhs: part(&lhs),
                rhs,
            });
        }
    };
    let scaled = |f: Scalar, terms: Vec<QTerm>| -> Vec<QTerm> {
        terms.into_iter().map(|(c, t)| (c * &f, t)).collect()
    };
    for a in 1..=max_degree {
        // equal-part rules q(a^k)
        push(
            "q(i1,i1)",
            rep(a, 2),
            scaled(
                frac(2),
                vec![(one(), vec![q(&[a]), q(&[a])]), (neg(), vec![q(&[2 * a])])],
            ),
        );
        for k in 3..=7usize {
            let mut lower_merged = vec![2 * a];
            lower_merged.extend(rep(a, k - 2));
            push(
                match k {
                    3 => "q(i1,i1,i1)",
                    4 => "q(i1,i1,i1,i1)",
                    5 => "q(i1^5)",
                    6 => "q(i1^6)",
                    _ => "q(i1^7)",
                },
                rep(a, k),
                scaled(
                    frac(k as i64),
                    vec![
                        (one(), vec![q(&[a]), rep(a, k - 1)]),
                        (neg(), vec![lower_merged]),
                    ],
                ),
            );
        }
        for b in 1..a {
            push(
                "q(i1,i2)",
                vec![a, b],
                vec![(one(), vec![q(&[a]), q(&[b])]), (neg(), vec![q(&[a + b])])],
            );
            for k in 2..=5usize {
                push(
                    match k {
                        2 => "q(i1,i2,i2)",
                        3 => "q(i1,i2,i2,i2)",
                        4 => "q(i1,i2^4)",
                        _ => "q(i1,i2^5)",
                    },
                    cat(&[a], &rep(b, k)),
                    vec![
                        (one(), vec![q(&[a]), rep(b, k)]),
                        (neg(), vec![cat(&[a + b], &rep(b, k - 1))]),
                    ],
                );
            }
            push(
                "q(i1,i1,i2)",
                vec![a, a, b],
                scaled(
                    frac(2),
                    vec![
                        (one(), vec![q(&[a]), q(&[a, b])]),
                        (neg(), vec![q(&[2 * a, b])]),
                        (neg(), vec![q(&[a + b, a])]),
                    ],
                ),
            );
            let mut r8 = vec![
                (one(), vec![q(&[a]), q(&[a, a, b])]),
                (neg(), vec![q(&[a + b, a, a])]),
            ];
            let mut r9 = vec![
                (one(), vec![q(&[a]), q(&[a, b, b])]),
                (neg(), vec![q(&[a + b, a, b])]),
            ];
            let mut r13 = vec![
                (one(), vec![q(&[a]), q(&[a, b, b, b])]),
                (neg(), vec![q(&[a + b, a, b, b])]),
            ];
            if corrected {
                r8.push((neg(), vec![q(&[2 * a, a, b])]));
                r9.push((neg(), vec![q(&[2 * a, b, b])]));
                r13.push((neg(), vec![q(&[2 * a, b, b, b])]));
            }
            push("q(i1,i1,i1,i2)", vec![a, a, a, b], scaled(frac(3), r8));
            push("q(i1,i1,i2,i2)", vec![a, a, b, b], scaled(frac(2), r9));
            push(
                "q(i1,i1,i2,i2,i2)",
                vec![a, a, b, b, b],
                scaled(frac(2), r13),
            );
            for c in 1..b {
                push(
                    "q(i1,i2,i3)",
                    vec![a, b, c],
                    vec![
                        (one(), vec![q(&[a]), q(&[b, c])]),
                        (neg(), vec![q(&[a + b, c])]),
                        (neg(), vec![q(&[a + c, b])]),
                    ],
                );
                push(
                    "q(i1,i2,i3,i3)",
                    vec![a, b, c, c],
                    vec![
                        (one(), vec![q(&[a]), q(&[b, c, c])]),
                        (neg(), vec![q(&[a + b, c, c])]),
                        (neg(), vec![q(&[a + c, b, c])]),
                    ],
                );
            }
        }
    }
    out
}

/// Names of the printed rules that omit the `q(2 i_1, …)` term.
pub const INCOMPLETE_RULES: [&str; 3] = ["q(i1,i1,i1,i2)", "q(i1,i1,i2,i2)", "q(i1,i1,i2,i2,i2)"];

/// `m_p(x)` by summing over every distinct exponent vector, independent of
/// the library's dynamic programme.
pub fn monomial_oracle(p: &Partition, xs: &[Scalar]) -> Scalar {
    if p.len() > xs.len() {
        return Scalar::zero();
    }
    let mut exps: Vec<u32> = p.parts().to_vec();
    exps.resize(xs.len(), 0);
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for e in &exps {
        *counts.entry(*e).or_default() += 1;
    }
    let mut total = Scalar::zero();
    let mut current = Vec::with_capacity(xs.len());
    distinct_arrangements(&mut counts, xs.len(), &mut current, &mut |v| {
        let mut term = Scalar::one();
        for (x, &e) in xs.iter().zip(v) {
            for _ in 0..e {
                term *= x;
            }
        }
        total += term;
    });
    total
}

fn distinct_arrangements(
    counts: &mut BTreeMap<u32, usize>,
    len: usize,
    current: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if current.len() == len {
        visit(current);
        return;
    }
    let keys: Vec<u32> = counts
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(&k, _)| k)
        .collect();
    for k in keys {
        *counts.get_mut(&k).unwrap() -= 1;
        current.push(k);
        distinct_arrangements(counts, len, current, visit);
        current.pop();
        *counts.get_mut(&k).unwrap() += 1;
    }
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Scalar {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=7))
}

pub fn random_tuple<R: Rng>(rng: &mut R, len: usize) -> Vec<Scalar> {
    (0..len).map(|_| random_rational(rng)).collect()
}

/// Uniform λ-coefficients in `0..=max`.
pub fn random_dominant<R: Rng>(rng: &mut R, n: u32, max: i64) -> DominantLambda {
    let coeffs = (0..n).map(|_| rng.gen_range(0..=max)).collect();
    DominantLambda::new(coeffs, Rank::new(n).unwrap()).unwrap()
}

/// Every dominant weight of rank `n` with coefficients in `0..=max`.
pub fn all_dominant(n: u32, max: i64) -> Vec<DominantLambda> {
    let rank = Rank::new(n).unwrap();
    let mut out = Vec::new();
    let mut c = vec![0i64; n as usize];
    loop {
        out.push(DominantLambda::new(c.clone(), rank).unwrap());
        let mut i = 0;
        while i < c.len() && c[i] == max {
            c[i] = 0;
            i += 1;
        }
        if i == c.len() {
            return out;
        }
        c[i] += 1;
    }
}

/// Every dominant weight of rank `n` with `Σ r_i ≤ total`.
pub fn dominant_up_to_level(n: u32, total: i64) -> Vec<DominantLambda> {
    all_dominant(n, total)
        .into_iter()
        .filter(|w| w.coeffs().iter().sum::<i64>() <= total)
        .collect()
}

pub fn binomial(n: u64, k: u64) -> num_bigint::BigUint {
    (0..k).fold(num_bigint::BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn all_partitions_up_to(max: u32) -> Vec<Partition> {
    (1..=max).flat_map(partitions).collect()
}
