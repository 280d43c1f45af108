//! Induction `ind_U^G W` as functions `f: G → W` with `f(ux) = u·f(x)`, acted on by
//! right translation, and the two Frobenius reciprocity bijections.
//!
//! Basis: `f_{i,j}` is supported on the coset `U r_i` with `f(r_i) = w_j`, ordered
//! by coset first. The trivial coset is represented by the identity.

use super::{GMap, Rep};
use crate::error::{Error, Result};
use crate::group::{induction_transversal, Elem, Subgroup, Transversal};
use crate::matrix::Matrix;
use crate::par::{self, Exec};

#[derive(Clone, Debug)]
pub struct Induced {
    pub rep: Rep,
    pub inducing: Rep,
    pub transversal: Transversal,
    /// `(coset representative, W-basis index)` for every basis vector.
    pub legend: Vec<(Elem, usize)>,
}

impl Induced {
    /// Index of the coset `U` in the transversal.
    pub fn trivial_coset(&self) -> usize {
        self.transversal.coset_of(self.rep.group().identity())
    }

    /// Basis index of `f_{i,j}`.
    pub fn basis_index(&self, coset: usize, j: usize) -> usize {
        coset * self.inducing.dim() + j
    }

    pub fn index(&self) -> usize {
        self.transversal.len()
    }
}

/// `ind_U^G W` for a representation `W` of `U ≤ G`.
pub fn rep_induce(w: &Rep, universe: &Subgroup) -> Result<Induced> {
    rep_induce_with(w, universe, Exec::default())
}

pub fn rep_induce_with(w: &Rep, universe: &Subgroup, exec: Exec) -> Result<Induced> {
    let u = w.domain();
    if !u.is_subgroup_of(universe) {
        return Err(Error::NotContained("inducing subgroup".into()));
    }
    let g = universe.group().clone();
    let f = w.field().clone();
    let t = induction_transversal(universe, u);
    let (n, d) = (t.len(), w.dim());
    let dim = n * d;
    let rinv: Vec<Elem> = t.reps().iter().map(|&r| g.inv(r)).collect();
    let action = par::map(exec, universe.members(), |&h| {
        let hinv = g.inv(h);
        let mut m = Matrix::zeros(&f, dim, dim);
        for i in 0..n {
            let l = t.coset_of(g.mul(t.reps()[i], hinv));
            let x = g.mul(g.mul(t.reps()[l], h), rinv[i]);
            m.paste(l * d, i * d, w.act(x));
        }
        m
    });
    let legend = t.reps().iter().flat_map(|&r| (0..d).map(move |j| (r, j))).collect();
    Ok(Induced { rep: Rep::from_trusted(universe, &f, dim, action), inducing: w.clone(), transversal: t, legend })
}

/// `Hom_U(W, V|_U) → Hom_G(ind_U^G W, V)`: `Ψ(f) = Σ_i ρ_V(r_i⁻¹) ψ(f(r_i))`.
pub fn frobenius_lower(ind: &Induced, v: &Rep, psi: &GMap) -> Result<GMap> {
    if psi.source() != &ind.inducing || *psi.target() != v.restrict(ind.inducing.domain())? {
        return Err(Error::RepMismatch);
    }
    let g = v.group();
    let d = ind.inducing.dim();
    let mut m = Matrix::zeros(v.field(), v.dim(), ind.rep.dim());
    for (i, &r) in ind.transversal.reps().iter().enumerate() {
        m.paste(0, i * d, &v.act(g.inv(r)).mul(psi.matrix()));
    }
    Ok(GMap::from_trusted(&ind.rep, v, m))
}

/// Inverse of [`frobenius_lower`]: restrict `Ψ` to the functions supported on `U`.
pub fn lower_inverse(ind: &Induced, big: &GMap) -> Result<GMap> {
    if big.source().dim() != ind.rep.dim() || big.source().domain() != ind.rep.domain() {
        return Err(Error::RepMismatch);
    }
    let d = ind.inducing.dim();
    let i0 = ind.trivial_coset();
    let m = big.matrix().submatrix(0, i0 * d, big.target().dim(), d);
    let target = big.target().restrict(ind.inducing.domain())?;
    GMap::new(&ind.inducing, &target, m)
}

/// `Hom_U(V|_U, W) → Hom_G(V, ind_U^G W)`: `Ψ(v)(x) = ψ(ρ_V(x) v)`.
pub fn frobenius_upper(ind: &Induced, v: &Rep, psi: &GMap) -> Result<GMap> {
    if psi.target() != &ind.inducing || *psi.source() != v.restrict(ind.inducing.domain())? {
        return Err(Error::RepMismatch);
    }
    let d = ind.inducing.dim();
    let mut m = Matrix::zeros(v.field(), ind.rep.dim(), v.dim());
    for (i, &r) in ind.transversal.reps().iter().enumerate() {
        m.paste(i * d, 0, &psi.matrix().mul(v.act(r)));
    }
    Ok(GMap::from_trusted(v, &ind.rep, m))
}

/// Inverse of [`frobenius_upper`]: evaluate at the identity.
pub fn upper_inverse(ind: &Induced, big: &GMap) -> Result<GMap> {
    if big.target().dim() != ind.rep.dim() || big.target().domain() != ind.rep.domain() {
        return Err(Error::RepMismatch);
    }
    let d = ind.inducing.dim();
    let i0 = ind.trivial_coset();
    let m = big.matrix().submatrix(i0 * d, 0, d, big.source().dim());
    let source = big.source().restrict(ind.inducing.domain())?;
    GMap::new(&source, &ind.inducing, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::group::catalog;
    use crate::rep::{fixed_points, hom_space};

    fn f(p: u32) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    #[test]
    fn induce_from_whole_group_is_identity() {
        let g = catalog::s3();
        let w = Subgroup::whole(&g);
        let reg = Rep::regular(&w, &f(3));
        let ind = rep_induce(&reg, &w).unwrap();
        assert_eq!(ind.rep, reg);
    }

    #[test]
    fn induce_from_trivial_gives_regular_dimension() {
        let g = catalog::cyclic(2);
        let ind = rep_induce(&Rep::trivial(&Subgroup::trivial(&g), &f(2), 1), &Subgroup::whole(&g)).unwrap();
        ind.rep.validate().unwrap();
        assert_eq!(ind.rep.dim(), 2);
        assert_eq!(ind.rep, Rep::regular(&Subgroup::whole(&g), &f(2)));
    }

    #[test]
    fn induce_s3_from_c2() {
        let g = catalog::s3();
        let c2 = Subgroup::generate(&g, &[g.find_label("(12)").unwrap()]);
        let w = Subgroup::whole(&g);
        let ind = rep_induce(&Rep::trivial(&c2, &f(3), 1), &w).unwrap();
        ind.rep.validate().unwrap();
        assert_eq!(ind.rep.dim(), 3);
        assert_eq!(fixed_points(&ind.rep, &w).unwrap().dim(), 1);
        assert_eq!(ind.legend[0].0, g.identity());
    }

    #[test]
    fn induce_nontrivial_w_is_homomorphism() {
        let g = catalog::dihedral(4);
        let w = Subgroup::whole(&g);
        let r = g.find_label("r^1").unwrap();
        let c4 = Subgroup::generate(&g, &[r]);
        let jw = crate::rep::jordan_rep(&c4, &f(2), r, 3).unwrap();
        let ind = rep_induce(&jw, &w).unwrap();
        ind.rep.validate().unwrap();
        assert_eq!(ind.rep.dim(), 6);
    }

    #[test]
    fn frobenius_roundtrips_on_basis() {
        let g = catalog::s3();
        let w = Subgroup::whole(&g);
        let c2 = Subgroup::generate(&g, &[g.find_label("(12)").unwrap()]);
        let fld = f(3);
        let triv_u = Rep::trivial(&c2, &fld, 1);
        let ind = rep_induce(&triv_u, &w).unwrap();
        let v = Rep::regular(&w, &fld);
        let vu = v.restrict(&c2).unwrap();
        let small = hom_space(&triv_u, &vu).unwrap();
        let big = hom_space(&ind.rep, &v).unwrap();
        assert_eq!(small.dim(), big.dim());
        for b in small.basis() {
            let psi = GMap::new(&triv_u, &vu, b).unwrap();
            let up = frobenius_lower(&ind, &v, &psi).unwrap();
            GMap::new(&ind.rep, &v, up.matrix().clone()).unwrap();
            assert_eq!(lower_inverse(&ind, &up).unwrap(), psi);
        }
        let small = hom_space(&vu, &triv_u).unwrap();
        assert_eq!(small.dim(), hom_space(&v, &ind.rep).unwrap().dim());
        for b in small.basis() {
            let psi = GMap::new(&vu, &triv_u, b).unwrap();
            let up = frobenius_upper(&ind, &v, &psi).unwrap();
            GMap::new(&v, &ind.rep, up.matrix().clone()).unwrap();
            assert_eq!(upper_inverse(&ind, &up).unwrap(), psi);
        }
    }
}
