use casimir::eigenpoly::{
    closed_forms, default_sample, known_errata, n_min, verify_class_with, Normalization, Table,
};
use casimir::lattice::{partitions, Rank, Scalar};
use casimir::orbit_char::ch_orbit;
use casimir::orbits::{orbit_dimension, Orbit};
use casimir::symfun::{eval_monomial, eval_power_product, reduce_to_power, schur_check};
use casimir::{DominantLambda, Method};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::commands::rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Orbits,
    Reductions,
    Schur,
    Eigen,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub status: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub label: String,
    pub n: u32,
    pub monomial: String,
    pub printed: Value,
    pub fitted: Value,
    pub explained: bool,
}

pub struct Outcome {
    pub checks: Vec<Check>,
    pub candidates: Vec<Candidate>,
}

impl Outcome {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == "fail").count()
    }
}

fn check(suite: &'static str, name: String, ok: bool, detail: String) -> Check {
    Check {
        suite,
        name,
        status: if ok { "pass" } else { "fail" },
        detail,
    }
}

fn level_weights(rank: Rank, level: i64) -> Vec<DominantLambda> {
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            rec(n, left - x, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(rank.n() as usize, level, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|c| DominantLambda::new(c, rank).expect("dominant"))
        .collect()
}

fn orbit_suite(rank_max: u32, order_max: u32, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let mut out = Vec::new();
    let limit = 100_000u64;
    for n in 1..=rank_max {
        let rank = Rank::new(n).expect("positive rank");
        let mut weights = level_weights(rank, 3);
        let mut extra = 0;
        while extra < 10 {
            let c: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            let w = DominantLambda::new(c, rank).expect("dominant");
            if orbit_dimension(&w) <= limit.into() {
                weights.push(w);
                extra += 1;
            }
        }
        let small: Vec<&DominantLambda> = weights
            .iter()
            .filter(|w| orbit_dimension(w) <= limit.into())
            .collect();
        let bad: Vec<String> = small
            .par_iter()
            .filter(|w| orbit_dimension(w) != (Orbit::new(w).iter().count() as u64).into())
            .map(|w| w.to_string())
            .collect();
        out.push(check(
            "orbits",
            format!("orbit dimension N={n}"),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} weights", small.len())
            } else {
                bad.join(" ")
            },
        ));
        let bad: Vec<String> = small
            .par_iter()
            .flat_map_iter(|w| (2..=order_max).map(move |s| (*w, s)))
            .filter(|(w, s)| {
                ch_orbit(w, *s, Method::Formula) != ch_orbit(w, *s, Method::BruteForce)
            })
            .map(|(w, s)| format!("{w}@s={s}"))
            .collect();
        out.push(check(
            "orbits",
            format!("ch_s formula vs brute force N={n}"),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} weights, s = 2..{order_max}", small.len())
            } else {
                bad.join(" ")
            },
        ));
    }
    out
}

fn reduction_suite(order_max: u32, rng: &mut ChaCha8Rng) -> Vec<Check> {
    (1..=order_max)
        .map(|s| {
            let mut bad = Vec::new();
            let parts = partitions(s);
            for p in &parts {
                let reduced = reduce_to_power(p);
                for _ in 0..20 {
                    let len = rng.gen_range(p.len()..=p.len() + 3);
                    let xs: Vec<Scalar> = (0..len)
                        .map(|_| {
                            Scalar::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=7).into())
                        })
                        .collect();
                    let direct = eval_monomial(p, &xs).expect("enough values");
                    if eval_power_product(&reduced, &xs) != direct {
                        bad.push(p.to_string());
                        break;
                    }
                }
            }
            check(
                "reductions",
                format!("power-sum reduction s={s}"),
                bad.is_empty(),
                if bad.is_empty() {
                    format!("{} partitions x 20 tuples", parts.len())
                } else {
                    bad.join(" ")
                },
            )
        })
        .collect()
}

fn schur_suite(order_max: u32) -> Vec<Check> {
    (1..=order_max)
        .map(|k| {
            let r = schur_check(k);
            check(
                "schur",
                format!("h_{k} = S_{k}"),
                r.equal(),
                format!("difference {}", r.difference),
            )
        })
        .collect()
}

fn eigen_suite(rank_max: u32, order_max: u32, table: Table) -> (Vec<Check>, Vec<Candidate>) {
    let mut checks = Vec::new();
    let mut candidates = Vec::new();
    for form in closed_forms()
        .iter()
        .filter(|f| f.class.size() <= order_max)
    {
        let lo = n_min(&form.class, Normalization::Unit)
            .expect("tabulated class")
            .max(form.class.size() - 1);
        let ranks: Vec<u32> = (lo..lo + 3).filter(|&n| n <= rank_max).collect();
        if ranks.is_empty() {
            checks.push(Check {
                suite: "eigen",
                name: format!("{} Tier A", form.label()),
                status: "skipped",
                detail: format!("needs N >= {lo}"),
            });
            continue;
        }
        for n in ranks {
            let rank = Rank::new(n).expect("positive rank");
            let sample = default_sample(&form.class, rank);
            let report =
                verify_class_with(&form.class, rank, &sample, table).expect("tabulated class");
            let detail = match &report.tier_a.constant {
                Some(c) => format!("{} weights, constant {c}", sample.len()),
                None => format!("{} weights, ratio not constant", sample.len()),
            };
            checks.push(check(
                "eigen",
                format!("{} Tier A N={n}", form.label()),
                report.tier_a.passed,
                detail,
            ));
            let audit = if table == Table::Printed {
                report
            } else {
                verify_class_with(&form.class, rank, &sample, Table::Printed)
                    .expect("tabulated class")
            };
            checks.push(check(
                "eigen",
                format!("{} Tier B fit N={n}", form.label()),
                audit.tier_b.determined(),
                format!("rank {}/{}", audit.tier_b.rank, audit.tier_b.unknowns),
            ));
            for e in audit.errata() {
                let index = audit
                    .tier_b
                    .checks
                    .iter()
                    .find(|c| c.monomial == e.monomial)
                    .and_then(|c| c.index);
                let explained = known_errata().iter().any(|k| {
                    k.class == form.class && index.is_some_and(|i| k.indices.contains(&i))
                });
                candidates.push(Candidate {
                    label: e.label,
                    n: e.n,
                    monomial: e.monomial.to_string(),
                    printed: rat(&e.printed),
                    fitted: rat(&e.fitted),
                    explained,
                });
            }
        }
    }
    (checks, candidates)
}

pub fn run(suite: Suite, rank_max: u32, order_max: u32, seed: u64, table: Table) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let mut candidates = Vec::new();
    let want = |s: Suite| suite == Suite::All || suite == s;
    if want(Suite::Orbits) {
        checks.extend(orbit_suite(rank_max, order_max, &mut rng));
    }
    if want(Suite::Reductions) {
        checks.extend(reduction_suite(order_max, &mut rng));
    }
    if want(Suite::Schur) {
        checks.extend(schur_suite(order_max));
    }
    if want(Suite::Eigen) {
        let (c, e) = eigen_suite(rank_max, order_max, table);
        checks.extend(c);
        candidates.extend(e);
    }
    Outcome { checks, candidates }
}
