//! The maps `φ_{U,v}` and their assembly over `p`-groups in characteristic `p`.

use rand::Rng;

use super::{case_id, inputs, omega_by_definition, p_of, run_tasks, Checks, Task};
use crate::catalog::{random_scalar, rep_catalog, subgroup_name, Catalog, NamedRep};
use crate::error::{Error, Result};
use crate::field::{FiniteField, Scalar};
use crate::group::{all_subgroups, Subgroup};
use crate::matrix::Subspace;
use crate::par::Exec;
use crate::rep::{assemble_phi, default_vectors, fixed_points, omega_v, phi_uv, rep_induce, GMap, Rep, VectorChoice};
use crate::report::Report;

const MAX_DIM: usize = 3;
const ALL_VECTORS_CAP: usize = 256;
const RANDOM_VECTORS: usize = 24;

enum Data {
    Constants { k: Subgroup, field: FiniteField },
    Module { field: FiniteField, v: NamedRep },
}

pub(super) fn run(catalog: &Catalog, seed: u64, exec: Exec) -> Report {
    let mut tasks = Vec::new();
    for (entry, field) in catalog.pairs() {
        let k = Subgroup::whole(&entry.group);
        if !k.is_p_group(p_of(field)) {
            continue;
        }
        let rest = ["constants".to_string()];
        tasks.push(Task {
            id: case_id(entry, field, &rest),
            inputs: inputs("phi-machinery", entry, field, &rest),
            data: Data::Constants { k: k.clone(), field: field.clone() },
        });
        for v in rep_catalog(&k, field, MAX_DIM) {
            let rest = [v.name.clone()];
            tasks.push(Task {
                id: case_id(entry, field, &rest),
                inputs: inputs("phi-machinery", entry, field, &rest),
                data: Data::Module { field: field.clone(), v },
            });
        }
    }
    run_tasks("phi-machinery", seed, exec, tasks, eval)
}

fn eval(d: &Data, rng: &mut rand_chacha::ChaCha8Rng, ch: &mut Checks) -> Result<()> {
    match d {
        Data::Constants { k, field } => constants(k, field, ch),
        Data::Module { field, v } => module(field, &v.rep, rng, ch),
    }
}

/// `ind_U^K(F)^K` is the line of constant functions.
fn constants(k: &Subgroup, field: &FiniteField, ch: &mut Checks) -> Result<()> {
    for u in all_subgroups(k)? {
        let ind = rep_induce(&Rep::trivial(&u, field, 1), k)?;
        let fp = fixed_points(&ind.rep, k)?;
        let ones = vec![Scalar::ONE; ind.rep.dim()];
        ch.check("fixed-points-constant", fp.dim() == 1 && fp.contains(&ones), || {
            format!("U={} dim {}", subgroup_name(&u), fp.dim())
        });
    }
    Ok(())
}

fn module(field: &FiniteField, v: &Rep, rng: &mut rand_chacha::ChaCha8Rng, ch: &mut Checks) -> Result<()> {
    let k = v.domain();
    let n = v.dim();
    ch.check("nonzero-fixed-points", fixed_points(v, k)?.dim() >= 1, || "V^K = 0".into());

    for x in sample_vectors(field, v, rng) {
        let omega = omega_v(v, &x, None)?;
        let listed: Vec<Vec<u32>> = omega.iter().map(|u| u.member_indices()).collect();
        ch.check("omega-definition", listed == omega_by_definition(v, &x, None)?, || format!("v={}", raw(&x)));
        for u in &omega {
            let (ind, phi) = phi_uv(v, u, &x)?;
            let tag = || format!("v={} U={}", raw(&x), subgroup_name(u));
            ch.check("phi-equivariant", GMap::new(&ind.rep, v, phi.matrix().clone()).is_ok(), tag);
            ch.check("phi-kernel-nonzero", phi.rank() < ind.rep.dim(), tag);
            let mut char_u = vec![Scalar::ZERO; ind.rep.dim()];
            char_u[ind.basis_index(ind.trivial_coset(), 0)] = Scalar::ONE;
            ch.check("phi-char-u", phi.matrix().mul_vec(&char_u) == x, tag);
        }
    }

    match assemble_phi(v, None, &VectorChoice::Default) {
        Ok(a) => {
            ch.bump("assembled");
            ch.note("dim_s", a.dim_s());
            ch.check("assembled-surjective", a.is_surjective(), || format!("rank {} < {n}", a.matrix.rank()));
            ch.check("vanishes-on-fixed-points", a.on_fixed_points()?.is_zero(), || "φ(S^K) ≠ 0".into());
            ch.check("assembled-equivariant", a.materialize().is_ok(), || "S → V not equivariant".into());
        }
        Err(Error::Uncovered(list)) => {
            // Only legitimate when the listed vectors really have empty Ω and the
            // vectors that do contribute span a proper submodule.
            ch.bump("uncovered");
            ch.note("uncovered_vectors", list.len());
            let mut covered = Vec::new();
            for x in default_vectors(v) {
                let empty = omega_by_definition(v, &x, None)?.is_empty();
                let code: Vec<u32> = x.iter().map(|s| s.raw()).collect();
                if list.contains(&code) {
                    ch.check("uncovered-has-empty-omega", empty, || format!("v={code:?}"));
                } else if !empty {
                    covered.extend(v.domain().members().iter().map(|&g| v.act(g).mul_vec(&x)));
                }
            }
            let span = Subspace::from_vectors(field, n, &covered).dim();
            ch.check("uncovered-image-proper", span < n, || format!("covered span {span} = dim V"));
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

fn raw(x: &[Scalar]) -> String {
    format!("{:?}", x.iter().map(|s| s.raw()).collect::<Vec<_>>())
}

fn all_nonzero(field: &FiniteField, n: usize) -> Option<Vec<Vec<Scalar>>> {
    let q = field.order() as usize;
    let total = q.checked_pow(n as u32)?;
    if total > ALL_VECTORS_CAP {
        return None;
    }
    Some(
        (1..total)
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let s = field.element((code % q) as u32);
                        code /= q;
                        s
                    })
                    .collect()
            })
            .collect(),
    )
}

/// Every nonzero vector when there are few, otherwise the standard basis and a
/// seeded random sample.
fn sample_vectors(field: &FiniteField, v: &Rep, rng: &mut impl Rng) -> Vec<Vec<Scalar>> {
    let n = v.dim();
    if let Some(all) = all_nonzero(field, n) {
        return all;
    }
    let mut out: Vec<Vec<Scalar>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { Scalar::ONE } else { Scalar::ZERO }).collect())
        .collect();
    while out.len() < n + RANDOM_VECTORS {
        let x: Vec<Scalar> = (0..n).map(|_| random_scalar(field, rng)).collect();
        if x.iter().any(|s| !s.is_zero()) {
            out.push(x);
        }
    }
    out
}
