//! `χ`-eigenspaces for a central `p'`-subgroup `C`: projectors, exactness of
//! `V ↦ V^χ` on surjections, `V ⊠ χ`, and `Ω_{C,v}`.

use rand::Rng;

use super::{case_id, inputs, omega_by_definition, p_of, p_prime_part, random_hom, run_tasks, Checks, Task};
use crate::catalog::{characters, rep_catalog, Catalog};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::group::{sylow, Subgroup};
use crate::matrix::Matrix;
use crate::par::Exec;
use crate::rep::{
    chi_eigenspace, default_vectors, eigen_restriction, extend_by_chi, hom_space, omega_v, phi_uv, Character, GMap,
    Rep,
};
use crate::report::Report;

const MAX_DIM: usize = 4;
const SURJECTIONS: usize = 20;
const ATTEMPTS: usize = 8;

struct Data {
    field: FiniteField,
    c: Subgroup,
    chi: Character,
    index: usize,
}

pub(super) fn run(catalog: &Catalog, seed: u64, exec: Exec) -> Report {
    let mut tasks = Vec::new();
    for (entry, field) in catalog.pairs() {
        let whole = Subgroup::whole(&entry.group);
        if !whole.is_abelian() {
            continue;
        }
        let Some(c) = p_prime_part(&whole, p_of(field)) else { continue };
        if c.is_trivial() {
            continue;
        }
        for (index, chi) in characters(&c, field).into_iter().enumerate() {
            let rest = [format!("chi{index}")];
            tasks.push(Task {
                id: case_id(entry, field, &rest),
                inputs: inputs("chi-functor", entry, field, &rest),
                data: Data { field: field.clone(), c: c.clone(), chi, index },
            });
        }
    }
    run_tasks("chi-functor", seed, exec, tasks, eval)
}

fn eval(d: &Data, rng: &mut rand_chacha::ChaCha8Rng, ch: &mut Checks) -> Result<()> {
    let whole = Subgroup::whole(d.c.group());
    let reps = rep_catalog(&whole, &d.field, MAX_DIM);
    projectors(d, &reps, ch)?;
    surjections(d, &reps, rng, ch)?;
    extension(d, ch)?;
    if d.index == 0 {
        omega_c(d, &reps, ch)?;
    }
    Ok(())
}

fn projectors(d: &Data, reps: &[crate::catalog::NamedRep], ch: &mut Checks) -> Result<()> {
    for v in reps {
        let eig = chi_eigenspace(&v.rep, &d.chi)?;
        let Some(p) = eig.projector else {
            ch.check("projector-exists", false, || format!("{} index {}", v.name, eig.averaging_index));
            continue;
        };
        ch.check("projector-idempotent", p.mul(&p) == p, || v.name.clone());
        ch.check("projector-image", p.image() == eig.space, || v.name.clone());
        let commutes = v.rep.domain().generators().iter().all(|&g| p.mul(v.rep.act(g)) == v.rep.act(g).mul(&p));
        ch.check("projector-equivariant", commutes, || v.name.clone());
    }
    Ok(())
}

/// Surjections drawn as random equivariant maps that happen to be onto, or as
/// quotient maps onto cokernels of random maps.
fn surjections(d: &Data, reps: &[crate::catalog::NamedRep], rng: &mut impl Rng, ch: &mut Checks) -> Result<()> {
    let mut found = 0;
    let mut from_cokernel = 0;
    for round in 0..SURJECTIONS {
        let mut gamma: Option<GMap> = None;
        if round % 2 == 0 {
            for _ in 0..ATTEMPTS {
                let v1 = &reps[rng.gen_range(0..reps.len())].rep;
                let v2 = &reps[rng.gen_range(0..reps.len())].rep;
                let hs = hom_space(v1, v2)?;
                let m = random_hom(&hs, &d.field, rng);
                let g = GMap::new(v1, v2, m)?;
                if g.is_surjective() {
                    gamma = Some(g);
                    break;
                }
            }
        }
        let gamma = match gamma {
            Some(g) => g,
            None => {
                let v1 = &reps[rng.gen_range(0..reps.len())].rep;
                let v2 = &reps[rng.gen_range(0..reps.len())].rep;
                let m = random_hom(&hom_space(v1, v2)?, &d.field, rng);
                from_cokernel += 1;
                GMap::new(v1, v2, m)?.cokernel().1
            }
        };
        ch.check("sample-surjective", gamma.is_surjective(), || "sampled map is not onto".into());
        let src = chi_eigenspace(gamma.source(), &d.chi)?.space;
        let tgt = chi_eigenspace(gamma.target(), &d.chi)?.space;
        match eigen_restriction(gamma.matrix(), &src, &tgt) {
            Some(r) => ch.check("eigen-surjective", r.rank() == tgt.dim(), || {
                format!("rank {} < dim {}", r.rank(), tgt.dim())
            }),
            None => ch.check("eigen-maps-into", false, || "γ(V^χ) ⊄ W^χ".into()),
        }
        found += 1;
    }
    ch.note("surjections", found);
    ch.note("surjections_from_cokernels", from_cokernel);
    Ok(())
}

/// `V ⊠ χ` restricts back to `V`; `C` acts on it through `χ`.
fn extension(d: &Data, ch: &mut Checks) -> Result<()> {
    let whole = Subgroup::whole(d.c.group());
    let k = sylow(&whole, p_of(&d.field));
    let kc = k.join(&d.c);
    for v in rep_catalog(&k, &d.field, 3) {
        let ext = extend_by_chi(&v.rep, &d.chi, &kc)?;
        ch.check("extension-valid", ext.validate().is_ok(), || v.name.clone());
        ch.check("extension-restricts", ext.restrict(&k)? == v.rep, || v.name.clone());
        let eig = chi_eigenspace(&ext, &d.chi)?;
        ch.check("extension-c-acts-by-chi", eig.space.dim() == ext.dim(), || v.name.clone());
        let again = extend_by_chi(&ext, &d.chi, &kc)?;
        ch.check("extension-idempotent", again == ext, || v.name.clone());
    }
    if !d.chi.is_trivial() {
        let triv = Rep::trivial(&whole, &d.field, 1);
        let err = extend_by_chi(&triv, &d.chi, &whole).err();
        ch.check("extension-incompatible", err == Some(Error::CharacterIncompatible), || format!("{err:?}"));
    }
    Ok(())
}

/// `Ω_{C,v}` for modules on which `C` acts trivially, against the definition.
fn omega_c(d: &Data, reps: &[crate::catalog::NamedRep], ch: &mut Checks) -> Result<()> {
    let mut modules = 0;
    for v in reps {
        let trivial_on_c = d.c.generators().iter().all(|&g| *v.rep.act(g) == Matrix::identity(&d.field, v.rep.dim()));
        if !trivial_on_c {
            if let Some(x) = default_vectors(&v.rep)
                .into_iter()
                .find(|x| d.c.generators().iter().any(|&g| v.rep.act(g).mul_vec(x) != *x))
            {
                let err = omega_v(&v.rep, &x, Some(&d.c)).err();
                ch.check("omega-c-not-fixed", err == Some(Error::NotFixed), || format!("{} {err:?}", v.name));
            }
            continue;
        }
        modules += 1;
        let ck = d.c.intersect(v.rep.domain());
        for x in default_vectors(&v.rep) {
            let omega = omega_v(&v.rep, &x, Some(&d.c))?;
            let listed: Vec<Vec<u32>> = omega.iter().map(|u| u.member_indices()).collect();
            ch.check("omega-c-definition", listed == omega_by_definition(&v.rep, &x, Some(&d.c))?, || v.name.clone());
            for u in &omega {
                let (ind, phi) = phi_uv(&v.rep, &u.join(&ck), &x)?;
                ch.check("omega-c-kernel-nonzero", phi.rank() < ind.rep.dim(), || v.name.clone());
            }
        }
    }
    ch.note("modules_trivial_on_c", modules);
    Ok(())
}
