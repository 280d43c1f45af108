//! Verification suites. Each suite expands the catalog into independent cases,
//! evaluates them (in parallel when enabled) and collects a [`Report`].

mod chi;
mod exact_axioms;
mod frobenius;
mod higman;
mod phi_machinery;
mod stable;

use std::collections::BTreeMap;

use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::catalog::{field_name, Catalog, CatalogEntry};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::group::Subgroup;
use crate::par::{self, Exec};
use crate::report::{case_rng, Case, Outcome, Report};

pub const SUITES: [&str; 6] = ["frobenius", "phi-machinery", "higman", "exact-axioms", "stable-frobenius", "chi-functor"];

/// Runs the named suite; unknown names are an input error.
pub fn run(suite: &str, catalog: &Catalog, seed: u64, exec: Exec) -> Result<Report> {
    let report = match suite {
        "frobenius" => frobenius::run(catalog, seed, exec),
        "phi-machinery" => phi_machinery::run(catalog, seed, exec),
        "higman" => higman::run(catalog, seed, exec),
        "exact-axioms" => exact_axioms::run(catalog, seed, exec),
        "stable-frobenius" => stable::run(catalog, seed, exec),
        "chi-functor" => chi::run(catalog, seed, exec),
        other => return Err(Error::Input(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    };
    Ok(report)
}

/// Tally of named checks for one case, keeping the first few failure messages.
#[derive(Default)]
pub(crate) struct Checks {
    counts: BTreeMap<String, usize>,
    failed: usize,
    failures: Vec<String>,
    notes: BTreeMap<String, Value>,
}

const KEPT_FAILURES: usize = 5;

impl Checks {
    pub(crate) fn check(&mut self, kind: &str, ok: bool, what: impl FnOnce() -> String) {
        *self.counts.entry(kind.to_string()).or_default() += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(format!("{kind}: {}", what()));
            }
        }
    }

    pub(crate) fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.notes.insert(key.to_string(), value.into());
    }

    pub(crate) fn bump(&mut self, key: &str) {
        let e = self.notes.entry(key.to_string()).or_insert(json!(0));
        *e = json!(e.as_u64().unwrap_or(0) + 1);
    }

    fn finish(self) -> (Outcome, Value) {
        let total: usize = self.counts.values().sum();
        let mut details = serde_json::Map::new();
        details.insert("checks".into(), json!(total));
        details.insert("failed".into(), json!(self.failed));
        details.insert("by_kind".into(), json!(self.counts));
        if !self.failures.is_empty() {
            details.insert("failures".into(), json!(self.failures));
        }
        for (k, v) in self.notes {
            details.insert(k, v);
        }
        let outcome = if self.failed == 0 { Outcome::Pass } else { Outcome::Fail };
        (outcome, Value::Object(details))
    }
}

pub(crate) struct Task<T> {
    pub id: String,
    pub inputs: String,
    pub data: T,
}

/// Evaluates every task and assembles the report in id order.
pub(crate) fn run_tasks<T, F>(suite: &str, seed: u64, exec: Exec, tasks: Vec<Task<T>>, eval: F) -> Report
where
    T: Sync,
    F: Fn(&T, &mut ChaCha8Rng, &mut Checks) -> Result<()> + Sync + Send,
{
    let cases = par::map(exec, &tasks, |t| {
        let mut rng = case_rng(seed, &t.id);
        let mut checks = Checks::default();
        match eval(&t.data, &mut rng, &mut checks) {
            Ok(()) => {
                let (outcome, details) = checks.finish();
                Case::new(t.id.clone(), &t.inputs, outcome, details)
            }
            Err(e) => Case::new(t.id.clone(), &t.inputs, Outcome::Error, json!({ "error": e.to_string() })),
        }
    });
    Report::new(suite, seed, cases)
}

/// Canonical input description of a `(group, field, extra)` case.
pub(crate) fn inputs(suite: &str, entry: &CatalogEntry, field: &FiniteField, extra: &[String]) -> String {
    let table = serde_json::to_string(&entry.group.to_json()).expect("group serializes");
    let fd = serde_json::to_string(&field.descriptor()).expect("field serializes");
    format!("{suite}|{}|{table}|{fd}|{}", entry.name, extra.join("|"))
}

pub(crate) fn case_id(entry: &CatalogEntry, field: &FiniteField, rest: &[String]) -> String {
    let mut parts = vec![entry.name.clone(), field_name(field)];
    parts.extend(rest.iter().cloned());
    parts.join("/")
}

pub(crate) fn p_of(field: &FiniteField) -> usize {
    field.characteristic() as usize
}

/// Elements of `G` whose order is prime to `p`, when they form a subgroup
/// (always so for abelian `G`).
pub(crate) fn p_prime_part(whole: &Subgroup, p: usize) -> Option<Subgroup> {
    let g = whole.group();
    let members: Vec<_> = whole.members().iter().copied().filter(|&x| !g.elem_order(x).is_multiple_of(p)).collect();
    Subgroup::from_members(g, &members).ok()
}

/// A uniformly random element of a hom space.
pub(crate) fn random_hom<R: rand::Rng>(hs: &crate::rep::HomSpace, field: &FiniteField, rng: &mut R) -> crate::matrix::Matrix {
    let coeffs: Vec<_> = (0..hs.dim()).map(|_| crate::catalog::random_scalar(field, rng)).collect();
    hs.combination(&coeffs)
}

/// `Ω_v` (or `Ω_{C,v}`) recomputed from definitions: the span of the orbit of `x`,
/// fixing checked on every member, and `U(C∩K)` formed as a set of products.
pub(crate) fn omega_by_definition(
    v: &crate::rep::Rep,
    x: &[crate::field::Scalar],
    c: Option<&Subgroup>,
) -> Result<Vec<Vec<u32>>> {
    let k = v.domain();
    let g = v.group();
    let orbit: Vec<Vec<_>> = k.members().iter().map(|&h| v.act(h).mul_vec(x)).collect();
    let span = crate::matrix::Subspace::from_vectors(v.field(), v.dim(), &orbit).dim();
    let ck: Vec<_> = match c {
        Some(c) => c.members().iter().copied().filter(|&z| k.contains(z)).collect(),
        None => vec![g.identity()],
    };
    let mut out = Vec::new();
    for u in crate::group::all_subgroups(k)? {
        if !u.members().iter().all(|&h| v.act(h).mul_vec(x) == x) {
            continue;
        }
        let mut prod: Vec<_> = u.members().iter().flat_map(|&a| ck.iter().map(move |&b| g.mul(a, b))).collect();
        prod.sort();
        prod.dedup();
        if k.order() / prod.len() > span {
            out.push(u.member_indices());
        }
    }
    Ok(out)
}
