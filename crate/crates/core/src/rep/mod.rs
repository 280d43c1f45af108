//! Finite-dimensional representations `ρ: D → GL_n(F)` of a subgroup `D` of a
//! table group, equivariant maps between them, and the basic constructions of
//! the category: restriction, direct sums, kernels, cokernels, hom spaces and
//! fixed points.
//!
//! Every representation remembers its domain as a [`Subgroup`] of an ambient
//! group, so representations of `U`, `K` and `G` inside the same group can be
//! restricted and induced between each other without re-indexing elements.

pub mod character;
pub mod induce;
pub mod phi;

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FiniteField, Scalar};
use crate::group::{Elem, GroupRef, Subgroup};
use crate::matrix::{Matrix, MatrixJson, Subspace};

pub use character::{chi_eigenspace, eigen_restriction, extend_by_chi, Character, Eigenspace};
pub use induce::{frobenius_lower, frobenius_upper, lower_inverse, rep_induce, upper_inverse, Induced};
pub use phi::{assemble_phi, default_vectors, omega_v, phi_uv, AssembledPhi, PhiBlock, VectorChoice};

/// A column vector in a representation's basis.
pub type Vector = Vec<Scalar>;

#[derive(Clone)]
pub struct Rep {
    domain: Subgroup,
    field: FiniteField,
    dim: usize,
    /// `action[i]` is the matrix of `domain.members()[i]`.
    action: Arc<Vec<Matrix>>,
}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep(dim {} of {:?} over {:?})", self.dim, self.domain, self.field)
    }
}

impl PartialEq for Rep {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.field == other.field && self.action == other.action
    }
}
impl Eq for Rep {}

impl Rep {
    /// Builds a representation from the full element-indexed action and verifies the
    /// homomorphism property over all pairs.
    pub fn new(domain: &Subgroup, field: &FiniteField, action: Vec<Matrix>) -> Result<Self> {
        let dim = action.first().map_or(0, Matrix::rows);
        if action.len() != domain.order() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for a domain of order {}",
                action.len(),
                domain.order()
            )));
        }
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch("action matrices must be square of equal size".into()));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        let rep = Rep::from_trusted(domain, field, dim, action);
        rep.validate()?;
        Ok(rep)
    }

    pub(crate) fn from_trusted(domain: &Subgroup, field: &FiniteField, dim: usize, action: Vec<Matrix>) -> Self {
        Rep { domain: domain.clone(), field: field.clone(), dim, action: Arc::new(action) }
    }

    /// Checks `ρ(e) = 1`, `ρ(gh) = ρ(g)ρ(h)` for all pairs, and invertibility.
    pub fn validate(&self) -> Result<()> {
        let g = self.group();
        let e = g.identity();
        if *self.act(e) != Matrix::identity(&self.field, self.dim) {
            return Err(Error::NotHomomorphism(e, e));
        }
        for &a in self.domain.members() {
            for &b in self.domain.members() {
                if *self.act(g.mul(a, b)) != self.act(a).mul(self.act(b)) {
                    return Err(Error::NotHomomorphism(a, b));
                }
            }
        }
        // A homomorphism from a finite group lands in invertible matrices automatically,
        // but a malformed table of matrices may still be singular.
        for &a in self.domain.members() {
            if !self.act(a).is_invertible() {
                return Err(Error::NotInvertible(a));
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn group(&self) -> &GroupRef {
        self.domain.group()
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn act(&self, g: Elem) -> &Matrix {
        let i = self.domain.position(g).expect("element outside the representation's domain");
        &self.action[i]
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn trivial(domain: &Subgroup, field: &FiniteField, dim: usize) -> Self {
        let id = Matrix::identity(field, dim);
        Rep::from_trusted(domain, field, dim, vec![id; domain.order()])
    }

    /// Left regular representation on `F[D]`, basis indexed by `domain.members()`.
    pub fn regular(domain: &Subgroup, field: &FiniteField) -> Self {
        let g = domain.group();
        let n = domain.order();
        let action = domain
            .members()
            .iter()
            .map(|&h| {
                let mut m = Matrix::zeros(field, n, n);
                for (j, &x) in domain.members().iter().enumerate() {
                    let i = domain.position(g.mul(h, x)).expect("closed");
                    m.set(i, j, Scalar::ONE);
                }
                m
            })
            .collect();
        Rep::from_trusted(domain, field, n, action)
    }

    /// Extends images on a generating set to the whole domain by walking the Cayley
    /// graph, then checks every relation.
    pub fn build(domain: &Subgroup, field: &FiniteField, images: &[(Elem, Matrix)]) -> Result<Self> {
        let g = domain.group();
        let dim = images.first().map_or(0, |(_, m)| m.rows());
        for (x, m) in images {
            if !domain.contains(*x) {
                return Err(Error::NotContained(format!("generator {x:?}")));
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch("generator images must be square of equal size".into()));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch);
            }
            if !m.is_invertible() {
                return Err(Error::NotInvertible(*x));
            }
        }
        let n = domain.order();
        let mut action: Vec<Option<Matrix>> = vec![None; n];
        let e = g.identity();
        action[domain.position(e).unwrap()] = Some(Matrix::identity(field, dim));
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            let mx = action[domain.position(x).unwrap()].clone().unwrap();
            for (s, ms) in images {
                let y = g.mul(x, *s);
                let my = mx.mul(ms);
                let slot = &mut action[domain.position(y).unwrap()];
                match slot {
                    Some(existing) if *existing != my => {
                        return Err(Error::InconsistentImages(format!(
                            "{} reached with two different matrices",
                            g.label(y)
                        )))
                    }
                    Some(_) => {}
                    None => {
                        *slot = Some(my);
                        queue.push_back(y);
                    }
                }
            }
        }
        if action.iter().any(Option::is_none) {
            return Err(Error::NotGenerating);
        }
        let rep = Rep::from_trusted(domain, field, dim, action.into_iter().map(Option::unwrap).collect());
        rep.validate().map_err(|e| match e {
            Error::NotHomomorphism(a, b) => {
                Error::InconsistentImages(format!("relation violated at ({}, {})", g.label(a), g.label(b)))
            }
            other => other,
        })?;
        Ok(rep)
    }

    /// Same space, action restricted to `u`.
    pub fn restrict(&self, u: &Subgroup) -> Result<Rep> {
        if !u.is_subgroup_of(&self.domain) {
            return Err(Error::NotContained("restriction subgroup".into()));
        }
        let action = u.members().iter().map(|&x| self.act(x).clone()).collect();
        Ok(Rep::from_trusted(u, &self.field, self.dim, action))
    }

    /// The representation `P⁻¹ ρ(g) P` for an invertible change of basis `P`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Rep> {
        let pinv = p.inverse().ok_or_else(|| Error::Input("change of basis is singular".into()))?;
        let action = self.action.iter().map(|m| pinv.mul(m).mul(p)).collect();
        Ok(Rep::from_trusted(&self.domain, &self.field, self.dim, action))
    }

    pub fn same_category(&self, other: &Rep) -> bool {
        self.domain == other.domain && self.field == other.field
    }

    pub fn to_json(&self, group_ref: &str) -> RepJson {
        RepJson {
            group_ref: group_ref.to_string(),
            field: self.field.descriptor(),
            dim: self.dim,
            domain: (self.domain.order() != self.group().order()).then(|| self.domain.member_indices()),
            action: Some(self.action.iter().map(|m| m.to_raw()).collect()),
            generator_images: None,
        }
    }

    pub fn from_json(j: &RepJson, group: &GroupRef) -> Result<Rep> {
        let field = FiniteField::from_descriptor(&j.field)?;
        let domain = match &j.domain {
            Some(m) => {
                let elems = m.iter().map(|&i| group.elem(i)).collect::<Result<Vec<_>>>()?;
                Subgroup::from_members(group, &elems)?
            }
            None => Subgroup::whole(group),
        };
        let to_matrix = |raw: &Vec<Vec<u32>>| -> Result<Matrix> {
            let m = Matrix::from_raw(&field, raw)?;
            if m.rows() != j.dim || (j.dim > 0 && m.cols() != j.dim) {
                return Err(Error::DimensionMismatch(format!("expected {0}x{0} matrices", j.dim)));
            }
            Ok(if j.dim == 0 { Matrix::zeros(&field, 0, 0) } else { m })
        };
        match (&j.action, &j.generator_images) {
            (Some(action), _) => {
                let mats = action.iter().map(to_matrix).collect::<Result<Vec<_>>>()?;
                Rep::new(&domain, &field, mats)
            }
            (None, Some(gens)) => {
                let images = gens
                    .iter()
                    .map(|g| Ok((group.elem(g.element)?, to_matrix(&g.matrix)?)))
                    .collect::<Result<Vec<_>>>()?;
                if images.is_empty() {
                    return Ok(Rep::trivial(&domain, &field, j.dim));
                }
                Rep::build(&domain, &field, &images)
            }
            (None, None) => Err(Error::Input("rep JSON needs `action` or `generator_images`".into())),
        }
    }
}

/// Rep JSON: `{group_ref, field, dim, action | generator_images}`; `domain` lists the
/// member indices when the representation lives on a proper subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub group_ref: String,
    pub field: crate::field::FieldDescriptor,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<u32>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_images: Option<Vec<GeneratorImage>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorImage {
    pub element: u32,
    pub matrix: Vec<Vec<u32>>,
}

/// GMap JSON: `{source_ref, target_ref, matrix}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GMapJson {
    pub source_ref: String,
    pub target_ref: String,
    pub matrix: MatrixJson,
}

/// An equivariant linear map `source → target`, a `target.dim × source.dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GMap {
    source: Rep,
    target: Rep,
    matrix: Matrix,
}

impl GMap {
    /// Checks `M ρ_s(g) = ρ_t(g) M` on a generating set of the domain, which is
    /// equivalent to checking every element.
    pub fn new(source: &Rep, target: &Rep, matrix: Matrix) -> Result<Self> {
        if !source.same_category(target) {
            return Err(Error::RepMismatch);
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        for &g in source.domain().generators() {
            if matrix.mul(source.act(g)) != target.act(g).mul(&matrix) {
                return Err(Error::NotEquivariant(g));
            }
        }
        Ok(GMap { source: source.clone(), target: target.clone(), matrix })
    }

    pub(crate) fn from_trusted(source: &Rep, target: &Rep, matrix: Matrix) -> Self {
        debug_assert!(GMap::new(source, target, matrix.clone()).is_ok());
        GMap { source: source.clone(), target: target.clone(), matrix }
    }

    pub fn identity(v: &Rep) -> Self {
        GMap::from_trusted(v, v, Matrix::identity(v.field(), v.dim()))
    }

    pub fn zero(source: &Rep, target: &Rep) -> Self {
        GMap::from_trusted(source, target, Matrix::zeros(source.field(), target.dim(), source.dim()))
    }

    pub fn source(&self) -> &Rep {
        &self.source
    }

    pub fn target(&self) -> &Rep {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GMap) -> Result<GMap> {
        if other.target != self.source {
            return Err(Error::RepMismatch);
        }
        Ok(GMap { source: other.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&other.matrix) })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn restrict(&self, u: &Subgroup) -> Result<GMap> {
        Ok(GMap { source: self.source.restrict(u)?, target: self.target.restrict(u)?, matrix: self.matrix.clone() })
    }

    /// The kernel as a representation, with its inclusion into the source.
    pub fn kernel(&self) -> (Rep, GMap) {
        sub_rep(&self.source, &self.matrix.kernel())
    }

    /// The cokernel on the complement spanned by the non-pivot coordinates of the
    /// image's echelon basis, with the quotient map.
    pub fn cokernel(&self) -> (Rep, GMap) {
        quotient_rep(&self.target, &self.matrix.image())
    }

    pub fn to_json(&self, source_ref: &str, target_ref: &str) -> GMapJson {
        GMapJson {
            source_ref: source_ref.to_string(),
            target_ref: target_ref.to_string(),
            matrix: self.matrix.to_json(),
        }
    }
}

/// The subrepresentation on an invariant subspace, with its inclusion map.
pub fn sub_rep(v: &Rep, w: &Subspace) -> (Rep, GMap) {
    let f = v.field();
    let incl = w.basis().transpose();
    let piv = w.pivots();
    let action = v.action.iter().map(|m| m.mul(&incl).select_rows(piv)).collect();
    let sub = Rep::from_trusted(v.domain(), f, w.dim(), action);
    let map = GMap::from_trusted(&sub, v, incl);
    (sub, map)
}

/// The quotient by an invariant subspace, with the projection map.
pub fn quotient_rep(v: &Rep, w: &Subspace) -> (Rep, GMap) {
    let f = v.field();
    let n = v.dim();
    let comp = w.complement_coords();
    let c = comp.len();
    let mut q = Matrix::zeros(f, c, n);
    for j in 0..n {
        let mut e = vec![Scalar::ZERO; n];
        e[j] = Scalar::ONE;
        let r = w.reduce(&e);
        for (k, &cj) in comp.iter().enumerate() {
            q.set(k, j, r[cj]);
        }
    }
    let mut s = Matrix::zeros(f, n, c);
    for (k, &cj) in comp.iter().enumerate() {
        s.set(cj, k, Scalar::ONE);
    }
    let action = v.action.iter().map(|m| q.mul(m).mul(&s)).collect();
    let quot = Rep::from_trusted(v.domain(), f, c, action);
    let map = GMap::from_trusted(v, &quot, q);
    (quot, map)
}

/// `V₁ ⊕ … ⊕ V_r` with block-diagonal action.
pub fn direct_sum(reps: &[Rep]) -> Result<Rep> {
    let first = reps.first().ok_or_else(|| Error::Input("empty direct sum".into()))?;
    if reps.iter().any(|r| !r.same_category(first)) {
        return Err(Error::RepMismatch);
    }
    let f = first.field();
    let dim: usize = reps.iter().map(Rep::dim).sum();
    let action = (0..first.domain().order())
        .map(|i| {
            let mut m = Matrix::zeros(f, dim, dim);
            let mut off = 0;
            for r in reps {
                m.paste(off, off, &r.action[i]);
                off += r.dim();
            }
            m
        })
        .collect();
    Ok(Rep::from_trusted(first.domain(), f, dim, action))
}

/// Intertwiners `Hom(V₁, V₂)` as a subspace of flattened `dim₂ × dim₁` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    rows: usize,
    cols: usize,
    space: Subspace,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn basis(&self) -> Vec<Matrix> {
        let f = self.space.field();
        self.space
            .basis_vectors()
            .into_iter()
            .map(|v| Matrix::from_data(f, self.rows, self.cols, v).expect("shape"))
            .collect()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        (m.rows(), m.cols()) == (self.rows, self.cols) && self.space.contains(m.data())
    }

    /// `Σ c_i B_i` over the canonical basis.
    pub fn combination(&self, coeffs: &[Scalar]) -> Matrix {
        let f = self.space.field();
        let mut acc = Matrix::zeros(f, self.rows, self.cols);
        for (b, &c) in self.basis().iter().zip(coeffs) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }
}

/// Equations `M ρ₁(g) − ρ₂(g) M = 0` for `g` in a generating set, solved one
/// generator at a time inside the running solution space.
pub fn hom_space(v1: &Rep, v2: &Rep) -> Result<HomSpace> {
    if !v1.same_category(v2) {
        return Err(Error::RepMismatch);
    }
    let f = v1.field();
    let (d1, d2) = (v1.dim(), v2.dim());
    let n = d1 * d2;
    let mut space = Subspace::full(f, n);
    for &g in v1.domain().generators() {
        if space.dim() == 0 {
            break;
        }
        let (r1, r2) = (v1.act(g), v2.act(g));
        // Apply the linear operator M ↦ Mρ₁ − ρ₂M to each basis element of the current space.
        let images: Vec<Vec<Scalar>> = space
            .basis_vectors()
            .into_iter()
            .map(|v| {
                let m = Matrix::from_data(f, d2, d1, v).expect("shape");
                m.mul(r1).sub(&r2.mul(&m)).flatten()
            })
            .collect();
        let img = Matrix::from_data(f, images.len(), n, images.concat()).expect("shape");
        // Combinations of the basis that the operator kills.
        let ker = img.transpose().kernel();
        if ker.dim() == space.dim() {
            continue;
        }
        space = Subspace::from_rows(&ker.basis().mul(space.basis()));
    }
    Ok(HomSpace { rows: d2, cols: d1, space })
}

/// `V^U`: common kernel of `ρ(u) − 1` over generators of `U`.
pub fn fixed_points(v: &Rep, u: &Subgroup) -> Result<Subspace> {
    if !u.is_subgroup_of(v.domain()) {
        return Err(Error::NotContained("fixed-point subgroup".into()));
    }
    let f = v.field();
    let id = Matrix::identity(f, v.dim());
    let gens = u.generators();
    if gens.is_empty() {
        return Ok(Subspace::full(f, v.dim()));
    }
    let stacked = gens
        .iter()
        .map(|&g| v.act(g).sub(&id))
        .reduce(|a, b| a.vstack(&b))
        .expect("nonempty");
    Ok(stacked.kernel())
}

/// `dim F[D]v`.
pub fn cyclic_dim(v: &Rep, x: &[Scalar]) -> Result<usize> {
    if x.len() != v.dim() {
        return Err(Error::DimensionMismatch("vector length".into()));
    }
    let f = v.field();
    let orbit: Vec<Vector> = v.domain().members().iter().map(|&g| v.act(g).mul_vec(x)).collect();
    Ok(Subspace::from_vectors(f, v.dim(), &orbit).dim())
}

/// A short exact sequence `0 → V' → V → V'' → 0`.
#[derive(Clone, Debug)]
pub struct Ses {
    pub left: GMap,
    pub right: GMap,
}

impl Ses {
    pub fn new(left: GMap, right: GMap) -> Result<Self> {
        if left.target() != right.source() {
            return Err(Error::NotExact("middle terms differ".into()));
        }
        if !left.is_injective() {
            return Err(Error::NotExact("left map is not injective".into()));
        }
        if !right.is_surjective() {
            return Err(Error::NotExact("right map is not surjective".into()));
        }
        if left.matrix().image() != right.matrix().kernel() {
            return Err(Error::NotExact("image of left differs from kernel of right".into()));
        }
        Ok(Ses { left, right })
    }
}

/// Upper-triangular unipotent Jordan block `J_n` (ones on the diagonal and
/// superdiagonal).
pub fn jordan_block(field: &FiniteField, n: usize) -> Matrix {
    let mut m = Matrix::identity(field, n);
    for i in 0..n.saturating_sub(1) {
        m.set(i, i + 1, Scalar::ONE);
    }
    m
}

/// The cyclic-group representation sending `generator` to `J_n`.
pub fn jordan_rep(domain: &Subgroup, field: &FiniteField, generator: Elem, n: usize) -> Result<Rep> {
    Rep::build(domain, field, &[(generator, jordan_block(field, n))])
}
