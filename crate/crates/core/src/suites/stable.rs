//! Relative projectives and injectives coincide; `T` and `Ω` on Jordan blocks of
//! `C_p`; stable endomorphisms of the trivial module.

use super::{case_id, inputs, p_of, run_tasks, Checks, Task};
use crate::catalog::{rep_catalog, subgroup_name, Catalog};
use crate::error::Result;
use crate::exact::{
    factoring_through, loop_omega, relative_projectivity_by_search, relative_projectivity_test, stable_hom, stable_jordan_type,
    suspension_t, Flavor, Side,
};
use crate::field::FiniteField;
use crate::group::{all_subgroups, Subgroup};
use crate::par::Exec;
use crate::matrix::Subspace;
use crate::rep::{jordan_rep, rep_induce, Rep};
use crate::report::Report;

const MAX_DIM: usize = 4;
/// Largest induced module for which the direct hom-space search is also run.
const DIRECT_SEARCH_DIM: usize = 16;

enum Data {
    Frobenius { field: FiniteField, u: Subgroup },
    Jordan { field: FiniteField, g: Subgroup, p: usize },
}

pub(super) fn run(catalog: &Catalog, seed: u64, exec: Exec) -> Report {
    let mut tasks = Vec::new();
    for (entry, field) in catalog.pairs() {
        let whole = Subgroup::whole(&entry.group);
        for u in all_subgroups(&whole).unwrap_or_default() {
            let rest = [subgroup_name(&u)];
            tasks.push(Task {
                id: case_id(entry, field, &rest),
                inputs: inputs("stable-frobenius", entry, field, &rest),
                data: Data::Frobenius { field: field.clone(), u },
            });
        }
        let p = p_of(field);
        if whole.order() == p {
            let rest = ["jordan".to_string()];
            tasks.push(Task {
                id: case_id(entry, field, &rest),
                inputs: inputs("stable-frobenius", entry, field, &rest),
                data: Data::Jordan { field: field.clone(), g: whole, p },
            });
        }
    }
    run_tasks("stable-frobenius", seed, exec, tasks, eval)
}

fn eval(d: &Data, _rng: &mut rand_chacha::ChaCha8Rng, ch: &mut Checks) -> Result<()> {
    match d {
        Data::Frobenius { field, u } => frobenius(field, u, ch),
        Data::Jordan { field, g, p } => jordan(field, g, *p, ch),
    }
}

fn frobenius(field: &FiniteField, u: &Subgroup, ch: &mut Checks) -> Result<()> {
    let whole = Subgroup::whole(u.group());
    let mut projectives = 0;
    let index = u.index_in(&whole);
    let ws = rep_catalog(u, field, MAX_DIM);
    for x in rep_catalog(&whole, field, MAX_DIM) {
        let tag = || x.name.clone();
        let (proj, _) = relative_projectivity_test(&x.rep, u, Side::Projective)?;
        let (inj, _) = relative_projectivity_test(&x.rep, u, Side::Injective)?;
        ch.check("projective-iff-injective", proj == inj, || format!("{} proj {proj} inj {inj}", tag()));
        if u.index_in(&whole) * x.rep.dim() <= DIRECT_SEARCH_DIM {
            let (p2, _) = relative_projectivity_by_search(&x.rep, u, Side::Projective)?;
            let (i2, _) = relative_projectivity_by_search(&x.rep, u, Side::Injective)?;
            ch.check("direct-search-agrees", p2 == proj && i2 == inj, tag);
        }
        projectives += usize::from(proj);
        let a = stable_hom(&x.rep, &x.rep, u, Flavor::Injective)?;
        let b = stable_hom(&x.rep, &x.rep, u, Flavor::Projective)?;
        ch.check("stable-flavours-agree", a.factoring == b.factoring, || {
            format!("{} factoring {} vs {}", tag(), a.factoring_dim, b.factoring_dim)
        });
        if index * x.rep.dim() <= DIRECT_SEARCH_DIM {
            // Maps factoring through some ind_U^G(W) span exactly the maps factoring
            // through A, once W = X|_U is among the W.
            let mut ms = vec![x.rep.restrict(u)?];
            ms.extend(ws.iter().filter(|w| index * w.rep.dim() <= DIRECT_SEARCH_DIM).map(|w| w.rep.clone()));
            let mut span = Subspace::zero(field, x.rep.dim() * x.rep.dim());
            for w in &ms {
                let m = factoring_through(&x.rep, &x.rep, &rep_induce(w, &whole)?.rep)?;
                ch.check("induced-factoring-inside", m.is_subspace_of(&a.factoring), tag);
                span = span.sum(&m);
            }
            ch.check("induced-factoring-spans", span == a.factoring, || {
                format!("{} span {} vs {}", tag(), span.dim(), a.factoring_dim)
            });
        }
        ch.check("stable-end-vanishes-iff-projective", (a.stable_dim == 0) == proj, || {
            format!("{} stable_dim {} projective {proj}", tag(), a.stable_dim)
        });
    }
    ch.note("relative_projectives", projectives);
    Ok(())
}

fn jordan(field: &FiniteField, g: &Subgroup, p: usize, ch: &mut Checks) -> Result<()> {
    let e = Subgroup::trivial(g.group());
    let id = g.group().identity();
    let gen = *g.members().iter().find(|&&x| x != id).expect("order p > 1");
    let block_type = |r: &Rep| stable_jordan_type(r.act(gen), p);
    for i in 1..p {
        let j = jordan_rep(g, field, gen, i)?;
        let (om, _) = loop_omega(&j, &e)?;
        let (t, _) = suspension_t(&j, &e)?;
        let (om_t, _) = loop_omega(&t, &e)?;
        let (t_om, _) = suspension_t(&om, &e)?;
        ch.check("omega-j", block_type(&om)? == vec![p - i], || format!("Ω(J{i}) = {:?}", block_type(&om)));
        ch.check("t-j", block_type(&t)? == vec![p - i], || format!("T(J{i}) = {:?}", block_type(&t)));
        ch.check("omega-t-j", block_type(&om_t)? == vec![i], || format!("Ω(T(J{i})) = {:?}", block_type(&om_t)));
        ch.check("t-omega-j", block_type(&t_om)? == vec![i], || format!("T(Ω(J{i})) = {:?}", block_type(&t_om)));
    }
    let triv = Rep::trivial(g, field, 1);
    for flavor in [Flavor::Injective, Flavor::Projective] {
        let s = stable_hom(&triv, &triv, &e, flavor)?;
        ch.check("stable-end-trivial", s.stable_dim == 1, || format!("{flavor:?} stable_dim {}", s.stable_dim));
    }
    Ok(())
}
