//! Axioms of the exact structure `E_U` on constructed short exact sequences, the
//! independence of `E_U` from `p'`-index subgroups, and the adjunction maps.

use rand::Rng;

use super::{case_id, inputs, p_of, random_hom, run_tasks, Checks, Task};
use crate::catalog::{rep_catalog, subgroup_name, Catalog, NamedRep};
use crate::error::Result;
use crate::exact::{
    adjunction_counit_b, adjunction_unit_a, averaging_section, is_admissible_epic, is_admissible_monic, pullback,
    pushout, suspension_t, loop_omega, u_split_search, SplitKind,
};
use crate::field::FiniteField;
use crate::group::{all_subgroups, Subgroup};
use crate::matrix::Matrix;
use crate::par::Exec;
use crate::rep::{direct_sum, hom_space, sub_rep, GMap, Ses};
use crate::report::Report;

const MAX_DIM: usize = 3;
const RANDOM_SEQUENCES: usize = 20;
const MIN_SEQUENCES: usize = 50;
/// Largest index `[G:U]` used for the sequences built from `A` and `B`.
const AB_INDEX: usize = 4;

struct Data {
    field: FiniteField,
    g: Subgroup,
}

pub(super) fn run(catalog: &Catalog, seed: u64, exec: Exec) -> Report {
    let tasks = catalog
        .pairs()
        .into_iter()
        .map(|(entry, field)| Task {
            id: case_id(entry, field, &[]),
            inputs: inputs("exact-axioms", entry, field, &[]),
            data: Data { field: field.clone(), g: Subgroup::whole(&entry.group) },
        })
        .collect();
    run_tasks("exact-axioms", seed, exec, tasks, eval)
}

struct Named {
    name: String,
    ses: Ses,
    split: bool,
}

fn eval(d: &Data, rng: &mut rand_chacha::ChaCha8Rng, ch: &mut Checks) -> Result<()> {
    let f = &d.field;
    let subs = all_subgroups(&d.g)?;
    let xs = rep_catalog(&d.g, f, MAX_DIM);
    let seqs = build_sequences(d, &xs, &subs, rng)?;
    ch.note("sequences", seqs.len());
    ch.check("enough-sequences", seqs.len() >= MIN_SEQUENCES, || format!("only {}", seqs.len()));
    let p = p_of(f);

    for x in &xs {
        let id = GMap::identity(&x.rep);
        for u in &subs {
            ch.check("identity-admissible", is_admissible_epic(&id, u)? && is_admissible_monic(&id, u)?, || {
                format!("{} U={}", x.name, subgroup_name(u))
            });
        }
    }

    for s in &seqs {
        let (left, right) = (&s.ses.left, &s.ses.right);
        let mut member = Vec::with_capacity(subs.len());
        let mut sections = Vec::with_capacity(subs.len());
        for u in &subs {
            let tag = || format!("{} U={}", s.name, subgroup_name(u));
            let sec = u_split_search(right, u, SplitKind::Section)?;
            let ret = u_split_search(left, u, SplitKind::Retraction)?;
            ch.check("monic-iff-epic", sec.is_some() == ret.is_some(), tag);
            if let Some(w) = &sec {
                ch.check("section-verifies", w.verify(right, u), tag);
            }
            if let Some(w) = &ret {
                ch.check("retraction-verifies", w.verify(left, u), tag);
            }
            member.push(sec.is_some());
            sections.push(sec);
        }
        if s.split {
            ch.check("split-in-every-class", member.iter().all(|&m| m), || s.name.clone());
        }

        for (i, u) in subs.iter().enumerate() {
            for (j, up) in subs.iter().enumerate() {
                if i == j || !up.is_subgroup_of(u) {
                    continue;
                }
                let tag = || format!("{} U={} U'={}", s.name, subgroup_name(u), subgroup_name(up));
                // E_U ⊆ E_{U'} by restriction.
                if let Some(w) = &sections[i] {
                    ch.check("restriction", w.verify(right, up), tag);
                    ch.check("monotone", member[j], tag);
                }
                if up.index_in(u) % p != 0 {
                    ch.check("coprime-index-equal", member[i] == member[j], tag);
                    if let Some(w) = &sections[j] {
                        let avg = averaging_section(&w.map, right, up, u)?;
                        ch.check("averaging-section", avg.verify(right, u), tag);
                    }
                }
            }
        }

        closure(d, s, &subs, &member, &xs, rng, ch)?;
    }

    adjunction_witnesses(&xs, &subs, ch)?;
    Ok(())
}

/// Composition, pullback and pushout keep admissibility.
fn closure(
    d: &Data,
    s: &Named,
    subs: &[Subgroup],
    member: &[bool],
    xs: &[NamedRep],
    rng: &mut impl Rng,
    ch: &mut Checks,
) -> Result<()> {
    let f = &d.field;
    let (left, right) = (&s.ses.left, &s.ses.right);
    let extra = &xs[rng.gen_range(0..xs.len())].rep;
    let v = right.source();

    let vx = direct_sum(&[v.clone(), extra.clone()])?;
    let proj = GMap::new(&vx, v, Matrix::identity(f, v.dim()).hstack(&Matrix::zeros(f, v.dim(), extra.dim())))?;
    let incl = GMap::new(v, &vx, Matrix::identity(f, v.dim()).vstack(&Matrix::zeros(f, extra.dim(), v.dim())))?;
    let epic = right.compose(&proj)?;
    let monic = incl.compose(left)?;

    let y = &xs[rng.gen_range(0..xs.len())].rep;
    let g = GMap::new(y, right.target(), random_hom(&hom_space(y, right.target())?, f, rng))?;
    let (pb, pb_to_y, _) = pullback(right, &g)?;
    let h = GMap::new(left.source(), y, random_hom(&hom_space(left.source(), y)?, f, rng))?;
    let (_, _, y_to_q) = pushout(left, &h)?;

    for (u, &m) in subs.iter().zip(member) {
        if !m {
            continue;
        }
        let tag = || format!("{} U={}", s.name, subgroup_name(u));
        ch.check("compose-epic", is_admissible_epic(&epic, u)?, tag);
        ch.check("compose-monic", is_admissible_monic(&monic, u)?, tag);
        ch.check("pullback-epic", is_admissible_epic(&pb_to_y, u)?, tag);
        ch.check("pullback-kernel", pb.dim() == y.dim() + left.source().dim(), tag);
        ch.check("pushout-monic", is_admissible_monic(&y_to_q, u)?, tag);
    }
    Ok(())
}

/// `A` is an admissible monic and `B` an admissible epic, with the evaluation and
/// inclusion maps as witnesses.
fn adjunction_witnesses(xs: &[NamedRep], subs: &[Subgroup], ch: &mut Checks) -> Result<()> {
    for x in xs {
        for u in subs {
            let tag = || format!("{} U={}", x.name, subgroup_name(u));
            let a = adjunction_unit_a(&x.rep, u)?;
            ch.check("a-witness", a.witness.verify(&a.map, u), tag);
            ch.check("a-admissible-monic", is_admissible_monic(&a.map, u)?, tag);
            let b = adjunction_counit_b(&x.rep, u)?;
            ch.check("b-witness", b.witness.verify(&b.map, u), tag);
            ch.check("b-admissible-epic", is_admissible_epic(&b.map, u)?, tag);
        }
    }
    Ok(())
}

fn build_sequences(d: &Data, xs: &[NamedRep], subs: &[Subgroup], rng: &mut impl Rng) -> Result<Vec<Named>> {
    let f = &d.field;
    let mut out = Vec::new();
    for a in xs {
        for b in xs {
            let sum = direct_sum(&[a.rep.clone(), b.rep.clone()])?;
            let (da, db) = (a.rep.dim(), b.rep.dim());
            let i = GMap::new(&a.rep, &sum, Matrix::identity(f, da).vstack(&Matrix::zeros(f, db, da)))?;
            let q = GMap::new(&sum, &b.rep, Matrix::zeros(f, db, da).hstack(&Matrix::identity(f, db)))?;
            out.push(Named { name: format!("split {}+{}", a.name, b.name), ses: Ses::new(i, q)?, split: true });
        }
    }
    for k in 0..RANDOM_SEQUENCES {
        let v1 = &xs[rng.gen_range(0..xs.len())].rep;
        let v2 = &xs[rng.gen_range(0..xs.len())].rep;
        let gamma = GMap::new(v1, v2, random_hom(&hom_space(v1, v2)?, f, rng))?;
        // 0 → ker γ → V₁ → im γ → 0
        let (img, img_incl) = sub_rep(v2, &gamma.matrix().image());
        let onto = GMap::new(v1, &img, solve_through(&img_incl, &gamma))?;
        let (_, ker_incl) = onto.kernel();
        out.push(Named { name: format!("kernel{k}"), ses: Ses::new(ker_incl, onto)?, split: false });
        // 0 → im γ → V₂ → coker γ → 0
        let (_, quot) = gamma.cokernel();
        out.push(Named { name: format!("cokernel{k}"), ses: Ses::new(img_incl, quot)?, split: false });
    }
    for x in xs.iter().filter(|x| x.rep.dim() <= 2) {
        for u in subs.iter().filter(|u| u.index_in(&d.g) <= AB_INDEX) {
            let a = adjunction_unit_a(&x.rep, u)?;
            let (_, q) = suspension_t(&x.rep, u)?;
            let name = format!("A {} U={}", x.name, subgroup_name(u));
            out.push(Named { name, ses: Ses::new(a.map, q)?, split: false });
            let b = adjunction_counit_b(&x.rep, u)?;
            let (_, k) = loop_omega(&x.rep, u)?;
            let name = format!("B {} U={}", x.name, subgroup_name(u));
            out.push(Named { name, ses: Ses::new(k, b.map)?, split: false });
        }
    }
    Ok(out)
}

/// The matrix of `γ` as a map into the submodule with inclusion `incl`.
fn solve_through(incl: &GMap, gamma: &GMap) -> Matrix {
    crate::matrix::linear_solve(incl.matrix(), gamma.matrix())
        .expect("shapes agree")
        .expect("γ lands in its image")
}
