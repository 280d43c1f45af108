//! Characters `χ: C → F^×` of abelian subgroups, `χ`-eigenspaces with their
//! averaging projectors, and the extension `V ⊠ χ` from `K` to `KC`.

use super::{Rep, Vector};
use crate::error::{Error, Result};
use crate::field::{FiniteField, Scalar};
use crate::group::{is_power_of, right_cosets, Elem, Subgroup};
use crate::matrix::{Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    domain: Subgroup,
    field: FiniteField,
    /// Indexed like `domain.members()`.
    values: Vec<Scalar>,
}

impl Character {
    pub fn new(domain: &Subgroup, field: &FiniteField, values: Vec<Scalar>) -> Result<Self> {
        if !domain.is_abelian() {
            return Err(Error::NotAbelian);
        }
        if values.len() != domain.order() {
            return Err(Error::NotCharacter(format!(
                "{} values for a subgroup of order {}",
                values.len(),
                domain.order()
            )));
        }
        let chi = Character { domain: domain.clone(), field: field.clone(), values };
        chi.validate()?;
        Ok(chi)
    }

    /// Extends values on generators multiplicatively.
    pub fn from_generators(domain: &Subgroup, field: &FiniteField, images: &[(Elem, Scalar)]) -> Result<Self> {
        if !domain.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let mats: Vec<(Elem, Matrix)> = images
            .iter()
            .map(|&(g, s)| {
                let mut m = Matrix::zeros(field, 1, 1);
                m.set(0, 0, s);
                (g, m)
            })
            .collect();
        let rep = if mats.is_empty() {
            Rep::trivial(domain, field, 1)
        } else {
            Rep::build(domain, field, &mats).map_err(|e| Error::NotCharacter(e.to_string()))?
        };
        Character::new(domain, field, rep.action().iter().map(|m| m.get(0, 0)).collect())
    }

    pub fn trivial(domain: &Subgroup, field: &FiniteField) -> Self {
        Character { domain: domain.clone(), field: field.clone(), values: vec![Scalar::ONE; domain.order()] }
    }

    fn validate(&self) -> Result<()> {
        let g = self.domain.group();
        let f = &self.field;
        if self.value(g.identity()) != Scalar::ONE {
            return Err(Error::NotCharacter("χ(e) ≠ 1".into()));
        }
        if self.values.iter().any(|s| s.is_zero()) {
            return Err(Error::NotCharacter("zero value".into()));
        }
        for &a in self.domain.members() {
            for &b in self.domain.members() {
                if self.value(g.mul(a, b)) != f.mul(self.value(a), self.value(b)) {
                    return Err(Error::NotCharacter(format!("not multiplicative at ({}, {})", g.label(a), g.label(b))));
                }
            }
        }
        let p = f.characteristic() as usize;
        for &a in self.domain.members() {
            if is_power_of(g.elem_order(a), p) && self.value(a) != Scalar::ONE {
                return Err(Error::NotCharacter(format!("nontrivial on the p-element {}", g.label(a))));
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn value(&self, c: Elem) -> Scalar {
        self.values[self.domain.position(c).expect("element outside the character's domain")]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&s| s == Scalar::ONE)
    }

    pub fn restrict(&self, d: &Subgroup) -> Result<Character> {
        if !d.is_subgroup_of(&self.domain) {
            return Err(Error::NotContained("character restriction".into()));
        }
        Ok(Character {
            domain: d.clone(),
            field: self.field.clone(),
            values: d.members().iter().map(|&c| self.value(c)).collect(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct Eigenspace {
    pub space: Subspace,
    /// `P = [C:N]⁻¹ Σ_{c ∈ C/N} χ(c⁻¹) ρ(c)` where `N` is the common kernel of `ρ` and
    /// `χ` on `C`; present when `p ∤ [C:N]`.
    pub projector: Option<Matrix>,
    pub averaging_index: usize,
}

/// `V^χ = {v : ρ(c)v = χ(c)v for all c ∈ C}`.
pub fn chi_eigenspace(v: &Rep, chi: &Character) -> Result<Eigenspace> {
    let c = chi.domain();
    if !c.is_subgroup_of(v.domain()) {
        return Err(Error::NotContained("character domain".into()));
    }
    if chi.field() != v.field() {
        return Err(Error::FieldMismatch);
    }
    let f = v.field();
    let n = v.dim();
    let g = v.group();
    let id = Matrix::identity(f, n);
    let space = match c.generators() {
        [] => Subspace::full(f, n),
        gens => gens
            .iter()
            .map(|&x| v.act(x).sub(&id.scale(chi.value(x))))
            .reduce(|a, b| a.vstack(&b))
            .expect("nonempty")
            .kernel(),
    };
    let kernel_members: Vec<Elem> =
        c.members().iter().copied().filter(|&x| chi.value(x) == Scalar::ONE && *v.act(x) == id).collect();
    let kern = Subgroup::from_members(g, &kernel_members)?;
    let idx = kern.index_in(c);
    let p = f.characteristic() as usize;
    let projector = (idx % p != 0).then(|| {
        let mut acc = Matrix::zeros(f, n, n);
        for &r in right_cosets(c, &kern).reps() {
            acc = acc.add(&v.act(r).scale(chi.value(g.inv(r))));
        }
        acc.scale(f.inv(f.from_int(idx as i64)).expect("p does not divide the index"))
    });
    Ok(Eigenspace { space, projector, averaging_index: idx })
}

/// `V ⊠ χ` on `KC`: `(kc)·v = χ(c) k·v`.
pub fn extend_by_chi(v: &Rep, chi: &Character, kc: &Subgroup) -> Result<Rep> {
    let k = v.domain();
    let c = chi.domain();
    let g = v.group();
    if !c.same_parent(k) {
        return Err(Error::GroupMismatch);
    }
    if !c.is_central() {
        return Err(Error::NotCentral(format!("{c:?}")));
    }
    if *kc != k.join(c) {
        return Err(Error::Input("target subgroup must be KC".into()));
    }
    let f = v.field();
    let id = Matrix::identity(f, v.dim());
    for &x in c.intersect(k).members() {
        if *v.act(x) != id.scale(chi.value(x)) {
            return Err(Error::CharacterIncompatible);
        }
    }
    let action = kc
        .members()
        .iter()
        .map(|&x| {
            let (kk, cc) = c
                .members()
                .iter()
                .find_map(|&cc| {
                    let kk = g.mul(x, g.inv(cc));
                    k.contains(kk).then_some((kk, cc))
                })
                .expect("x lies in KC");
            v.act(kk).scale(chi.value(cc))
        })
        .collect();
    Ok(Rep::from_trusted(kc, f, v.dim(), action))
}

/// `γ` restricted to eigenspaces, in echelon coordinates of the two eigenspaces.
pub fn eigen_restriction(gamma: &Matrix, source: &Subspace, target: &Subspace) -> Option<Matrix> {
    let f = gamma.field();
    let cols: Option<Vec<Vector>> =
        source.basis_vectors().iter().map(|w| target.coords(&gamma.mul_vec(w))).collect();
    let cols = cols?;
    Some(Matrix::from_data(f, cols.len(), target.dim(), cols.concat()).expect("shape").transpose())
}
