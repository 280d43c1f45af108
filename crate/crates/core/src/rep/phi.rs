//! The sets `Ω_v`, the maps `φ_{U,v}: ind_U^K F → V`, and their assembly into
//! `φ: S → V`.

use super::induce::{rep_induce, Induced};
use super::{cyclic_dim, direct_sum, fixed_points, GMap, Rep, Vector};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::group::{all_subgroups, Subgroup};
use crate::matrix::{Matrix, Subspace};

/// `Ω_v` (or `Ω_{C,v}` when `c` is given): subgroups `U ≤ K` fixing `v` with
/// `[K : U(C∩K)] > dim F[K]v`, in `(order, members)` order.
pub fn omega_v(v: &Rep, x: &[Scalar], c: Option<&Subgroup>) -> Result<Vec<Subgroup>> {
    let k = v.domain();
    if x.len() != v.dim() {
        return Err(Error::DimensionMismatch("vector length".into()));
    }
    if x.iter().all(|s| s.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let ck = central_part(v, x, c)?;
    let bound = cyclic_dim(v, x)?;
    let mut out = Vec::new();
    for u in all_subgroups(k)? {
        if !fixes(v, &u, x) {
            continue;
        }
        let uc = match &ck {
            Some(ck) => u.join(ck),
            None => u.clone(),
        };
        if uc.index_in(k) > bound {
            out.push(u);
        }
    }
    Ok(out)
}

/// `C ∩ K`, after checking `C` is central and acts trivially on `v`.
fn central_part(v: &Rep, x: &[Scalar], c: Option<&Subgroup>) -> Result<Option<Subgroup>> {
    let Some(c) = c else { return Ok(None) };
    if !c.same_parent(v.domain()) {
        return Err(Error::GroupMismatch);
    }
    if !c.is_central() {
        return Err(Error::NotCentral(format!("{c:?}")));
    }
    let ck = c.intersect(v.domain());
    if !fixes(v, &ck, x) {
        return Err(Error::NotFixed);
    }
    Ok(Some(ck))
}

fn fixes(v: &Rep, u: &Subgroup, x: &[Scalar]) -> bool {
    u.generators().iter().all(|&g| v.act(g).mul_vec(x) == x)
}

/// `φ_{U,v}(f) = Σ_{r ∈ U\K} f(r) r⁻¹v` on `ind_U^K F`.
pub fn phi_uv(v: &Rep, u: &Subgroup, x: &[Scalar]) -> Result<(Induced, GMap)> {
    if !u.is_subgroup_of(v.domain()) {
        return Err(Error::NotContained("U".into()));
    }
    if x.len() != v.dim() {
        return Err(Error::DimensionMismatch("vector length".into()));
    }
    if !fixes(v, u, x) {
        return Err(Error::NotFixed);
    }
    let f = v.field();
    let g = v.group();
    let ind = rep_induce(&Rep::trivial(u, f, 1), v.domain())?;
    let cols: Vec<Vector> = ind.transversal.reps().iter().map(|&r| v.act(g.inv(r)).mul_vec(x)).collect();
    let m = Matrix::from_data(f, cols.len(), v.dim(), cols.concat()).expect("shape").transpose();
    let map = GMap::from_trusted(&ind.rep, v, m);
    Ok((ind, map))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VectorChoice {
    /// All nonzero vectors when `q^dim ≤ 256`, otherwise the orbit of the standard basis.
    Default,
    /// A caller-supplied list, which must span `V`.
    Explicit(Vec<Vector>),
}

/// Cut-off for enumerating every nonzero vector of `V`.
pub const ALL_VECTORS_CAP: u64 = 256;

#[derive(Clone, Debug)]
pub struct PhiBlock {
    pub v: Vector,
    /// The member of `Ω_v` (or `Ω_{C,v}`).
    pub u: Subgroup,
    /// `U`, or `U(C∩K)` in the central variant; the block is `ind` of the trivial rep from it.
    pub inducing: Subgroup,
    pub induced: Induced,
    pub phi: GMap,
    pub offset: usize,
}

/// `φ: S = ⊕_v ⊕_{U∈Ω_v} ind_U^K F → V`, stored block by block.
#[derive(Clone, Debug)]
pub struct AssembledPhi {
    pub target: Rep,
    pub blocks: Vec<PhiBlock>,
    /// The concatenated matrix `[φ_1 | φ_2 | …]`.
    pub matrix: Matrix,
    /// Vectors whose `Ω` was empty and were left out because the rest still covers `V`.
    pub skipped: Vec<Vector>,
}

impl AssembledPhi {
    pub fn dim_s(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    /// `(v, U)` for each block.
    pub fn summand_index(&self) -> Vec<(Vector, Subgroup)> {
        self.blocks.iter().map(|b| (b.v.clone(), b.u.clone())).collect()
    }

    /// `φ` on a basis of `S^K`, block by block (`S^K = ⊕ block^K`).
    pub fn on_fixed_points(&self) -> Result<Matrix> {
        let k = self.target.domain();
        let mut cols: Vec<Vector> = Vec::new();
        for b in &self.blocks {
            let fp = fixed_points(&b.induced.rep, k)?;
            for w in fp.basis_vectors() {
                cols.push(b.phi.matrix().mul_vec(&w));
            }
        }
        let f = self.target.field();
        Ok(Matrix::from_data(f, cols.len(), self.target.dim(), cols.concat()).expect("shape").transpose())
    }

    /// `S` as one representation together with `φ` as a [`GMap`].
    pub fn materialize(&self) -> Result<(Rep, GMap)> {
        let v = &self.target;
        if self.blocks.is_empty() {
            let s = Rep::trivial(v.domain(), v.field(), 0);
            let z = GMap::zero(&s, v);
            return Ok((s, z));
        }
        let reps: Vec<Rep> = self.blocks.iter().map(|b| b.induced.rep.clone()).collect();
        let s = direct_sum(&reps)?;
        let map = GMap::new(&s, v, self.matrix.clone())?;
        Ok((s, map))
    }
}

/// The vectors [`VectorChoice::Default`] uses: every nonzero vector when there are
/// at most [`ALL_VECTORS_CAP`], otherwise the orbits of the standard basis.
pub fn default_vectors(v: &Rep) -> Vec<Vector> {
    let f = v.field();
    let q = f.order() as u64;
    let n = v.dim();
    let total = q.checked_pow(n as u32);
    match total {
        Some(t) if t <= ALL_VECTORS_CAP => (1..t)
            .map(|mut code| {
                let mut x = vec![Scalar::ZERO; n];
                for s in x.iter_mut() {
                    *s = f.element((code % q) as u32);
                    code /= q;
                }
                x
            })
            .collect(),
        _ => {
            let mut out: Vec<Vector> = Vec::new();
            for j in 0..n {
                let mut e = vec![Scalar::ZERO; n];
                e[j] = Scalar::ONE;
                for &g in v.domain().members() {
                    let y = v.act(g).mul_vec(&e);
                    if !out.contains(&y) {
                        out.push(y);
                    }
                }
            }
            out
        }
    }
}

/// Assembles `φ` over the chosen nonzero vectors. Vectors with empty `Ω` are
/// dropped only when the remaining blocks still span `V`; otherwise the call fails
/// with [`Error::Uncovered`].
pub fn assemble_phi(v: &Rep, c: Option<&Subgroup>, choice: &VectorChoice) -> Result<AssembledPhi> {
    let f = v.field();
    let k = v.domain();
    let vectors = match choice {
        VectorChoice::Default => default_vectors(v),
        VectorChoice::Explicit(list) => {
            if list.iter().any(|x| x.len() != v.dim()) {
                return Err(Error::DimensionMismatch("vector length".into()));
            }
            if Subspace::from_vectors(f, v.dim(), list).dim() != v.dim() {
                return Err(Error::Input("chosen vectors do not span V".into()));
            }
            list.iter().filter(|x| x.iter().any(|s| !s.is_zero())).cloned().collect()
        }
    };
    let ck = match c {
        Some(c) => {
            if !c.is_central() {
                return Err(Error::NotCentral(format!("{c:?}")));
            }
            Some(c.intersect(k))
        }
        None => None,
    };
    let mut blocks = Vec::new();
    let mut skipped = Vec::new();
    let mut offset = 0;
    for x in vectors {
        let omega = omega_v(v, &x, c)?;
        if omega.is_empty() {
            skipped.push(x);
            continue;
        }
        for u in omega {
            let inducing = match &ck {
                Some(ck) => u.join(ck),
                None => u.clone(),
            };
            let (induced, phi) = phi_uv(v, &inducing, &x)?;
            let d = induced.rep.dim();
            blocks.push(PhiBlock { v: x.clone(), u, inducing, induced, phi, offset });
            offset += d;
        }
    }
    let mut matrix = Matrix::zeros(f, v.dim(), offset);
    for b in &blocks {
        matrix.paste(0, b.offset, b.phi.matrix());
    }
    let out = AssembledPhi { target: v.clone(), blocks, matrix, skipped };
    if !out.skipped.is_empty() && !out.is_surjective() {
        return Err(Error::Uncovered(
            out.skipped.iter().map(|x| x.iter().map(|s| s.raw()).collect()).collect(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::group::{catalog, Elem};

    fn f2() -> FiniteField {
        FiniteField::prime(2).unwrap()
    }

    #[test]
    fn omega_c4_trivial() {
        let g = catalog::cyclic(4);
        let v = Rep::trivial(&Subgroup::whole(&g), &f2(), 1);
        let om = omega_v(&v, &[Scalar::ONE], None).unwrap();
        let orders: Vec<_> = om.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2]);
    }

    #[test]
    fn omega_rejects_zero_and_can_be_empty() {
        let g = catalog::cyclic(2);
        let reg = Rep::regular(&Subgroup::whole(&g), &f2());
        assert_eq!(omega_v(&reg, &[Scalar::ZERO, Scalar::ZERO], None), Err(Error::ZeroVector));
        assert!(omega_v(&reg, &[Scalar::ONE, Scalar::ZERO], None).unwrap().is_empty());
    }

    #[test]
    fn phi_c2_is_augmentation() {
        let g = catalog::cyclic(2);
        let v = Rep::trivial(&Subgroup::whole(&g), &f2(), 1);
        let (ind, phi) = phi_uv(&v, &Subgroup::trivial(&g), &[Scalar::ONE]).unwrap();
        assert_eq!(phi.matrix(), &Matrix::from_ints(&f2(), &[vec![1, 1]]));
        assert_eq!(phi.matrix().kernel().dim(), 1);
        let i0 = ind.trivial_coset();
        assert_eq!(phi.matrix().column(i0), vec![Scalar::ONE]);
    }

    #[test]
    fn phi_requires_fixed_vector() {
        let g = catalog::cyclic(2);
        let reg = Rep::regular(&Subgroup::whole(&g), &f2());
        let err = phi_uv(&reg, &Subgroup::whole(&g), &[Scalar::ONE, Scalar::ZERO]).unwrap_err();
        assert_eq!(err, Error::NotFixed);
    }

    #[test]
    fn assemble_c2_trivial() {
        let g = catalog::cyclic(2);
        let v = Rep::trivial(&Subgroup::whole(&g), &f2(), 1);
        let a = assemble_phi(&v, None, &VectorChoice::Default).unwrap();
        assert_eq!(a.blocks.len(), 1);
        assert_eq!(a.dim_s(), 2);
        assert!(a.is_surjective());
        assert!(a.on_fixed_points().unwrap().is_zero());
        let (s, map) = a.materialize().unwrap();
        s.validate().unwrap();
        assert!(map.is_surjective());
    }

    #[test]
    fn assemble_zero_rep() {
        let g = catalog::cyclic(2);
        let v = Rep::trivial(&Subgroup::whole(&g), &f2(), 0);
        let a = assemble_phi(&v, None, &VectorChoice::Default).unwrap();
        assert_eq!(a.dim_s(), 0);
        assert!(a.is_surjective());
    }

    #[test]
    fn assemble_regular_reports_uncovered() {
        let g = catalog::cyclic(2);
        let reg = Rep::regular(&Subgroup::whole(&g), &f2());
        match assemble_phi(&reg, None, &VectorChoice::Default) {
            Err(Error::Uncovered(vs)) => assert!(!vs.is_empty()),
            other => panic!("expected Uncovered, got {other:?}"),
        }
    }

    #[test]
    fn central_variant_uses_enlarged_subgroup() {
        let g = catalog::direct_product(&catalog::cyclic(2), &catalog::cyclic(2));
        let k = Subgroup::whole(&g);
        let c = Subgroup::generate(&g, &[Elem(1)]);
        let v = Rep::trivial(&k, &f2(), 1);
        let om = omega_v(&v, &[Scalar::ONE], Some(&c)).unwrap();
        // [K : U·C] > 1 requires U·C ≠ K, so U ∈ {e, C}.
        assert_eq!(om.len(), 2);
        let a = assemble_phi(&v, Some(&c), &VectorChoice::Default).unwrap();
        assert!(a.blocks.iter().all(|b| c.is_subgroup_of(&b.inducing)));
        assert!(a.is_surjective());
    }
}
