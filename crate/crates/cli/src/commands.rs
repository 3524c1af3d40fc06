use casimir::eigenpoly::{
    closed_form_from, eval_closed_with, eval_from_cof, known_errata, n_min_with, Normalization,
    Table,
};
use casimir::lattice::{Partition, Rank, Scalar};
use casimir::orbit_char::{ch_orbit, cof_extract, CofVector};
use casimir::orbits::{orbit_dimension, Orbit};
use casimir::reps::{ch_rep, orbital_decomposition, weyl_dim};
use casimir::symfun::key_label;
use casimir::{Basis, DominantLambda, Method, SymExpr};
use serde_json::{json, Value};

use crate::record::{object, Request, Status, WeightEcho};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodArg {
    Formula,
    Bruteforce,
    Both,
}

impl MethodArg {
    fn name(self) -> &'static str {
        match self {
            MethodArg::Formula => "formula",
            MethodArg::Bruteforce => "bruteforce",
            MethodArg::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum NormArg {
    Default,
    Unit,
}

impl From<NormArg> for Normalization {
    fn from(n: NormArg) -> Self {
        match n {
            NormArg::Default => Normalization::Default,
            NormArg::Unit => Normalization::Unit,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableArg {
    Printed,
    Corrected,
}

impl From<TableArg> for Table {
    fn from(t: TableArg) -> Self {
        match t {
            TableArg::Printed => Table::Printed,
            TableArg::Corrected => Table::Corrected,
        }
    }
}

pub fn rat(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

pub fn parse_weight(rank: u32, text: &str) -> Result<DominantLambda, CliError> {
    let coeffs = text
        .split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| CliError::input(format!("bad weight coefficient {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let rank = Rank::new(rank)?;
    Ok(DominantLambda::new(coeffs, rank)?)
}

pub fn parse_class(text: &str) -> Result<Partition, CliError> {
    let p: Partition = text.parse()?;
    if p.is_empty() {
        return Err(CliError::input("empty class"));
    }
    Ok(p)
}

pub fn echo(w: &DominantLambda) -> WeightEcho {
    WeightEcho {
        lambda: w.coeffs().to_vec(),
        mu: w.mu().into_vec(),
        label: w.to_string(),
    }
}

pub fn base_request(w: &DominantLambda) -> Request {
    Request {
        rank: Some(w.rank().n()),
        weight: Some(echo(w)),
        ..Default::default()
    }
}

fn terms_value(e: &SymExpr) -> Value {
    object(
        e.terms()
            .iter()
            .rev()
            .map(|(k, c)| (key_label(e.basis(), k), rat(c))),
    )
}

fn cof_value(c: &CofVector) -> Value {
    object(
        c.iter()
            .map(|(k, v)| (key_label(Basis::PowerProduct, k), rat(v))),
    )
}

fn methods(m: MethodArg) -> Vec<Method> {
    match m {
        MethodArg::Formula => vec![Method::Formula],
        MethodArg::Bruteforce => vec![Method::BruteForce],
        MethodArg::Both => vec![Method::Formula, Method::BruteForce],
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Formula => "formula",
        Method::BruteForce => "bruteforce",
    }
}

pub fn orbit(w: &DominantLambda, list: bool) -> (Request, Status, Value) {
    let mut pairs = vec![
        ("dimension", Value::String(orbit_dimension(w).to_string())),
        ("dominant_mu", json!(w.mu().into_vec())),
    ];
    if list {
        let elems: Vec<Value> = Orbit::new(w).iter().map(|t| json!(t.into_vec())).collect();
        pairs.push(("elements", Value::Array(elems)));
    }
    (base_request(w), Status::Ok, object(pairs))
}

fn character(w: &DominantLambda, s: u32, m: Method, rep: bool) -> SymExpr {
    if rep {
        ch_rep(w, s, m)
    } else {
        ch_orbit(w, s, m)
    }
}

/// Shared body of `chs` and `cof`: one entry per method plus a match flag.
fn per_method(
    w: &DominantLambda,
    s: u32,
    method: MethodArg,
    rep: bool,
    render: impl Fn(&SymExpr) -> Value,
) -> (Request, Status, Value) {
    let mut req = base_request(w);
    req.order = Some(s);
    req.method = Some(method.name().into());
    let values: Vec<(Method, Value)> = methods(method)
        .into_iter()
        .map(|m| (m, render(&character(w, s, m, rep))))
        .collect();
    let source = if rep { "representation" } else { "orbit" };
    if let [(_, only)] = values.as_slice() {
        return (
            req,
            Status::Ok,
            object([("source", json!(source)), ("terms", only.clone())]),
        );
    }
    let agree = values.windows(2).all(|p| p[0].1 == p[1].1);
    let mut pairs: Vec<(String, Value)> = vec![("source".into(), json!(source))];
    pairs.extend(
        values
            .into_iter()
            .map(|(m, v)| (method_name(m).to_string(), v)),
    );
    pairs.push(("match".into(), Value::Bool(agree)));
    let status = if agree { Status::Ok } else { Status::Failed };
    (req, status, object(pairs))
}

pub fn chs(w: &DominantLambda, s: u32, method: MethodArg, rep: bool) -> (Request, Status, Value) {
    per_method(w, s, method, rep, terms_value)
}

pub fn cof(w: &DominantLambda, s: u32, method: MethodArg, rep: bool) -> (Request, Status, Value) {
    per_method(w, s, method, rep, |e| cof_value(&cof_extract(e, s)))
}

pub fn decompose(w: &DominantLambda) -> (Request, Status, Value) {
    let d = orbital_decomposition(w);
    let orbits: Vec<Value> = d
        .entries()
        .iter()
        .map(|(o, m)| {
            object([
                ("lambda", json!(o.coeffs())),
                ("mu", json!(o.mu().into_vec())),
                ("label", json!(o.to_string())),
                ("multiplicity", Value::String(m.to_string())),
                ("orbit_size", Value::String(orbit_dimension(o).to_string())),
            ])
        })
        .collect();
    let result = object([
        ("dimension", Value::String(d.dimension().to_string())),
        ("weyl_dimension", Value::String(weyl_dim(w).to_string())),
        ("orbits", Value::Array(orbits)),
    ]);
    (base_request(w), Status::Ok, result)
}

pub fn eigen(
    w: &DominantLambda,
    class: &Partition,
    method: MethodArg,
    norm: NormArg,
    table: TableArg,
) -> Result<(Request, Status, Value), CliError> {
    let mut req = base_request(w);
    req.class = Some(
        class
            .parts()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    req.method = Some(method.name().into());
    req.norm = Some(format!("{norm:?}").to_lowercase());
    req.table = Some(format!("{table:?}").to_lowercase());
    let (norm, table) = (Normalization::from(norm), Table::from(table));
    let closed = closed_form_from(class, table);
    let mut pairs: Vec<(&str, Value)> = Vec::new();
    if let Ok(form) = closed {
        pairs.push(("n_min", json!(n_min_with(class, norm, table)?)));
        let applied: Vec<Value> = known_errata()
            .iter()
            .filter(|e| table == Table::Corrected && e.class == form.class)
            .map(|e| json!(e.description))
            .collect();
        pairs.push(("errata_applied", Value::Array(applied)));
    }
    let closed_value = match method {
        MethodArg::Formula | MethodArg::Both => Some(eval_closed_with(class, w, norm, table)?),
        MethodArg::Bruteforce => None,
    };
    let cof_value = match method {
        MethodArg::Bruteforce | MethodArg::Both => {
            let k = class.len();
            let reference_weight = DominantLambda::fundamental(k, w.rank()).ok();
            let reference = match (closed.is_ok(), reference_weight) {
                (true, Some(r)) => eval_closed_with(class, &r, norm, table)?,
                _ => Scalar::from_integer(1.into()),
            };
            pairs.push(("reference", rat(&reference)));
            Some(eval_from_cof(class, w, &reference)?)
        }
        MethodArg::Formula => None,
    };
    let mut status = Status::Ok;
    if let Some(v) = &closed_value {
        pairs.push(("closed", rat(v)));
    }
    if let Some(v) = &cof_value {
        pairs.push(("from_cof", rat(v)));
    }
    if let (Some(a), Some(b)) = (&closed_value, &cof_value) {
        pairs.push(("match", Value::Bool(a == b)));
        if a != b {
            status = Status::Failed;
        }
    }
    Ok((req, status, object(pairs)))
}
