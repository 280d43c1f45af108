//! Frobenius reciprocity on both sides of the induction adjunction.

use super::{case_id, inputs, random_hom, run_tasks, Checks, Task};
use crate::catalog::{rep_catalog, subgroup_name, Catalog};
use crate::error::Result;
use crate::field::FiniteField;
use crate::group::{all_subgroups, Subgroup};
use crate::par::Exec;
use crate::rep::{frobenius_lower, frobenius_upper, hom_space, lower_inverse, rep_induce, upper_inverse, GMap};
use crate::report::Report;

const MAX_DIM: usize = 4;
const RANDOM_SAMPLES: usize = 2;

struct Data {
    field: FiniteField,
    u: Subgroup,
}

pub(super) fn run(catalog: &Catalog, seed: u64, exec: Exec) -> Report {
    let mut tasks = Vec::new();
    for (entry, field) in catalog.pairs() {
        let whole = Subgroup::whole(&entry.group);
        for u in all_subgroups(&whole).unwrap_or_default() {
            let rest = [subgroup_name(&u)];
            tasks.push(Task {
                id: case_id(entry, field, &rest),
                inputs: inputs("frobenius", entry, field, &rest),
                data: Data { field: field.clone(), u },
            });
        }
    }
    run_tasks("frobenius", seed, exec, tasks, eval)
}

fn eval(d: &Data, rng: &mut rand_chacha::ChaCha8Rng, ch: &mut Checks) -> Result<()> {
    let f = &d.field;
    let whole = Subgroup::whole(d.u.group());
    let ws = rep_catalog(&d.u, f, MAX_DIM);
    let vs = rep_catalog(&whole, f, MAX_DIM);
    ch.note("w_count", ws.len());
    ch.note("v_count", vs.len());
    for w in &ws {
        let ind = rep_induce(&w.rep, &whole)?;
        for v in &vs {
            let tag = || format!("W={} V={}", w.name, v.name);
            let vu = v.rep.restrict(&d.u)?;

            // Hom_U(W, V|_U) ≅ Hom_G(ind W, V)
            let small = hom_space(&w.rep, &vu)?;
            let big = hom_space(&ind.rep, &v.rep)?;
            ch.check("lower-dim", small.dim() == big.dim(), || format!("{} {} vs {}", tag(), small.dim(), big.dim()));
            let mut samples = small.basis();
            samples.extend((0..RANDOM_SAMPLES).map(|_| random_hom(&small, f, rng)));
            for m in samples {
                let psi = GMap::new(&w.rep, &vu, m)?;
                let up = frobenius_lower(&ind, &v.rep, &psi)?;
                ch.check("lower-equivariant", big.contains(up.matrix()), tag);
                ch.check("lower-roundtrip", lower_inverse(&ind, &up)? == psi, tag);
            }
            let mut samples = big.basis();
            samples.extend((0..RANDOM_SAMPLES).map(|_| random_hom(&big, f, rng)));
            for m in samples {
                let big_map = GMap::new(&ind.rep, &v.rep, m)?;
                let down = lower_inverse(&ind, &big_map)?;
                ch.check("lower-roundtrip-inverse", frobenius_lower(&ind, &v.rep, &down)? == big_map, tag);
            }

            // Hom_U(V|_U, W) ≅ Hom_G(V, Ind W)
            let small = hom_space(&vu, &w.rep)?;
            let big = hom_space(&v.rep, &ind.rep)?;
            ch.check("upper-dim", small.dim() == big.dim(), || format!("{} {} vs {}", tag(), small.dim(), big.dim()));
            let mut samples = small.basis();
            samples.extend((0..RANDOM_SAMPLES).map(|_| random_hom(&small, f, rng)));
            for m in samples {
                let psi = GMap::new(&vu, &w.rep, m)?;
                let up = frobenius_upper(&ind, &v.rep, &psi)?;
                ch.check("upper-equivariant", big.contains(up.matrix()), tag);
                ch.check("upper-roundtrip", upper_inverse(&ind, &up)? == psi, tag);
            }
            let mut samples = big.basis();
            samples.extend((0..RANDOM_SAMPLES).map(|_| random_hom(&big, f, rng)));
            for m in samples {
                let big_map = GMap::new(&v.rep, &ind.rep, m)?;
                let down = upper_inverse(&ind, &big_map)?;
                ch.check("upper-roundtrip-inverse", frobenius_upper(&ind, &v.rep, &down)? == big_map, tag);
            }
        }
    }
    Ok(())
}
