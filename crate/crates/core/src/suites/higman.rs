//! Modules induced from `p'`-subgroups are projective; the trivial module is
//! projective exactly when `p ∤ |G|`.

use super::{case_id, inputs, p_of, run_tasks, Checks, Task};
use crate::catalog::{rep_catalog, subgroup_name, Catalog, NamedRep};
use crate::error::Result;
use crate::exact::{adjunction_counit_b, adjunction_unit_a, relative_projectivity_test, Side};
use crate::field::FiniteField;
use crate::group::{all_subgroups, Subgroup};
use crate::par::Exec;
use crate::rep::{rep_induce, Rep};
use crate::report::Report;

const MAX_DIM: usize = 2;

enum Data {
    Induced { u: Subgroup, w: NamedRep },
    Trivial { g: Subgroup, field: FiniteField },
}

pub(super) fn run(catalog: &Catalog, seed: u64, exec: Exec) -> Report {
    let mut tasks = Vec::new();
    for (entry, field) in catalog.pairs() {
        let whole = Subgroup::whole(&entry.group);
        let p = p_of(field);
        for u in all_subgroups(&whole).unwrap_or_default() {
            if u.order() % p == 0 {
                continue;
            }
            for w in rep_catalog(&u, field, MAX_DIM) {
                let rest = [subgroup_name(&u), w.name.clone()];
                tasks.push(Task {
                    id: case_id(entry, field, &rest),
                    inputs: inputs("higman", entry, field, &rest),
                    data: Data::Induced { u: u.clone(), w },
                });
            }
        }
        let rest = ["absolute".to_string(), "triv".to_string()];
        tasks.push(Task {
            id: case_id(entry, field, &rest),
            inputs: inputs("higman", entry, field, &rest),
            data: Data::Trivial { g: whole, field: field.clone() },
        });
    }
    run_tasks("higman", seed, exec, tasks, eval)
}

fn eval(d: &Data, _rng: &mut rand_chacha::ChaCha8Rng, ch: &mut Checks) -> Result<()> {
    match d {
        Data::Induced { u, w } => {
            let whole = Subgroup::whole(u.group());
            let ind = rep_induce(&w.rep, &whole)?;
            ch.note("dim", ind.rep.dim());
            test_both(&ind.rep, true, ch)
        }
        Data::Trivial { g, field } => {
            let expected = g.order() % p_of(field) != 0;
            ch.note("expected_projective", expected);
            test_both(&Rep::trivial(g, field, 1), expected, ch)
        }
    }
}

/// Absolute projectivity (`U = {e}`) on both sides, with witnesses re-checked.
fn test_both(x: &Rep, expected: bool, ch: &mut Checks) -> Result<()> {
    let e = Subgroup::trivial(x.group());
    let g = x.domain();
    let (proj, wp) = relative_projectivity_test(x, &e, Side::Projective)?;
    ch.check("projective", proj == expected, || format!("got {proj}, expected {expected}"));
    if let Some(w) = wp {
        ch.check("projective-witness", w.verify(&adjunction_counit_b(x, &e)?.map, g), || "B section".into());
    }
    let (inj, wi) = relative_projectivity_test(x, &e, Side::Injective)?;
    ch.check("injective", inj == expected, || format!("got {inj}, expected {expected}"));
    if let Some(w) = wi {
        ch.check("injective-witness", w.verify(&adjunction_unit_a(x, &e)?.map, g), || "A retraction".into());
    }
    Ok(())
}
