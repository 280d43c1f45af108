//! The relative exact structure `E_U` on representations of a finite group `G`:
//! sequences that split after restriction to `U`. Splittings are found by solving
//! affine systems inside `U`-equivariant hom spaces; the unit `A` and counit `B` of
//! the restriction/induction adjunction give the relative injective and projective
//! envelopes, and from them `T`, `Ω` and stable hom spaces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::group::{right_cosets, Subgroup};
use crate::matrix::{linear_solve, Matrix, Subspace};
use crate::rep::{
    direct_sum, frobenius_lower, frobenius_upper, hom_space, rep_induce, sub_rep, GMap, Induced, Rep, Ses,
};

/// The class `E_U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactTag {
    pub u: Subgroup,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitKind {
    /// `X` with `f ∘ X = 1`.
    Section,
    /// `X` with `X ∘ f = 1`.
    Retraction,
}

/// A `U`-equivariant one-sided inverse of a map `f: S → T`, as a `dim S × dim T` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    pub kind: SplitKind,
    pub map: Matrix,
}

impl SplitWitness {
    /// Checks the identity on the required side and equivariance over `u`.
    pub fn verify(&self, f: &GMap, u: &Subgroup) -> bool {
        let (s, t) = (f.source(), f.target());
        let x = &self.map;
        if x.rows() != s.dim() || x.cols() != t.dim() {
            return false;
        }
        let id_ok = match self.kind {
            SplitKind::Section => f.matrix().mul(x) == Matrix::identity(t.field(), t.dim()),
            SplitKind::Retraction => x.mul(f.matrix()) == Matrix::identity(s.field(), s.dim()),
        };
        id_ok && u.generators().iter().all(|&g| x.mul(t.act(g)) == s.act(g).mul(x))
    }
}

/// Solves `{X ∈ Hom_U(T, S) : f∘X = 1}` or `{… : X∘f = 1}`. The returned solution
/// is the one with zero free coordinates in the echelon basis of `Hom_U`.
pub fn u_split_search(f: &GMap, u: &Subgroup, kind: SplitKind) -> Result<Option<SplitWitness>> {
    let (s, t) = (f.source(), f.target());
    if !u.is_subgroup_of(s.domain()) {
        return Err(Error::NotContained("splitting subgroup".into()));
    }
    let homs = hom_space(&t.restrict(u)?, &s.restrict(u)?)?;
    Ok(solve_split(f, kind, &homs.basis())?.map(|map| SplitWitness { kind, map }))
}

/// Solves `f∘X = 1` (or `X∘f = 1`) for `X` in the span of `candidates`, free
/// coefficients set to zero.
fn solve_split(f: &GMap, kind: SplitKind, candidates: &[Matrix]) -> Result<Option<Matrix>> {
    let (s, t) = (f.source(), f.target());
    let fld = s.field();
    let n = match kind {
        SplitKind::Section => t.dim(),
        SplitKind::Retraction => s.dim(),
    };
    let id = Matrix::identity(fld, n);
    if candidates.is_empty() {
        return Ok(if n == 0 { Some(Matrix::zeros(fld, s.dim(), t.dim())) } else { None });
    }
    let cols: Vec<Vec<Scalar>> = candidates
        .iter()
        .map(|b| match kind {
            SplitKind::Section => f.matrix().mul(b).flatten(),
            SplitKind::Retraction => b.mul(f.matrix()).flatten(),
        })
        .collect();
    let a = Matrix::from_data(fld, cols.len(), n * n, cols.concat()).expect("shape").transpose();
    let rhs = Matrix::from_data(fld, n * n, 1, id.flatten()).expect("shape");
    let Some(c) = linear_solve(&a, &rhs)? else { return Ok(None) };
    let mut map = Matrix::zeros(fld, s.dim(), t.dim());
    for (b, &k) in candidates.iter().zip(c.column(0).iter()) {
        if !k.is_zero() {
            map = map.add(&b.scale(k));
        }
    }
    Ok(Some(map))
}

pub fn is_admissible_epic(f: &GMap, u: &Subgroup) -> Result<bool> {
    Ok(f.is_surjective() && u_split_search(f, u, SplitKind::Section)?.is_some())
}

pub fn is_admissible_monic(f: &GMap, u: &Subgroup) -> Result<bool> {
    Ok(f.is_injective() && u_split_search(f, u, SplitKind::Retraction)?.is_some())
}

/// A short exact sequence lies in `E_U` when its epic splits over `U`.
pub fn ses_in_exact_structure(ses: &Ses, u: &Subgroup) -> Result<bool> {
    Ok(u_split_search(&ses.right, u, SplitKind::Section)?.is_some())
}

/// `σ̃ = [U:U']⁻¹ Σ_{u ∈ U'\U} u⁻¹ σ u` turns a `U'`-equivariant section of `f` into a
/// `U`-equivariant one.
pub fn averaging_section(sigma: &Matrix, f: &GMap, u_prime: &Subgroup, u: &Subgroup) -> Result<SplitWitness> {
    let (s, t) = (f.source(), f.target());
    let fld = s.field();
    if !u_prime.is_subgroup_of(u) || !u.is_subgroup_of(s.domain()) {
        return Err(Error::NotContained("U' ≤ U ≤ G".into()));
    }
    let given = SplitWitness { kind: SplitKind::Section, map: sigma.clone() };
    if !given.verify(f, u_prime) {
        return Err(Error::Input("sigma is not a U'-equivariant section of f".into()));
    }
    let idx = u_prime.index_in(u);
    let p = fld.characteristic();
    if idx.is_multiple_of(p as usize) {
        return Err(Error::IndexDivisibleByP { index: idx, p });
    }
    let g = s.group();
    let mut acc = Matrix::zeros(fld, s.dim(), t.dim());
    for &r in right_cosets(u, u_prime).reps() {
        acc = acc.add(&s.act(g.inv(r)).mul(sigma).mul(t.act(r)));
    }
    let inv = fld.inv(fld.from_int(idx as i64)).expect("index invertible");
    Ok(SplitWitness { kind: SplitKind::Section, map: acc.scale(inv) })
}

/// `A` or `B` together with the induced module and the `U`-equivariant splitting.
#[derive(Clone, Debug)]
pub struct AdjunctionMap {
    pub induced: Induced,
    pub map: GMap,
    pub witness: SplitWitness,
}

/// `A: X → Ind_U^G(X|_U)`, `x ↦ [g ↦ gx]`; evaluation at the identity is a
/// `U`-equivariant retraction.
pub fn adjunction_unit_a(x: &Rep, u: &Subgroup) -> Result<AdjunctionMap> {
    let xu = x.restrict(u)?;
    let induced = rep_induce(&xu, x.domain())?;
    let map = frobenius_upper(&induced, x, &GMap::identity(&xu))?;
    let d = x.dim();
    let mut eval = Matrix::zeros(x.field(), d, induced.rep.dim());
    eval.paste(0, induced.trivial_coset() * d, &Matrix::identity(x.field(), d));
    Ok(AdjunctionMap { induced, map, witness: SplitWitness { kind: SplitKind::Retraction, map: eval } })
}

/// `B: ind_U^G(X|_U) → X`, `f ↦ Σ_{g ∈ U\G} g⁻¹ f(g)`; `x ↦ f_x` (supported on `U`,
/// value `x` at the identity) is a `U`-equivariant section.
pub fn adjunction_counit_b(x: &Rep, u: &Subgroup) -> Result<AdjunctionMap> {
    let xu = x.restrict(u)?;
    let induced = rep_induce(&xu, x.domain())?;
    let map = frobenius_lower(&induced, x, &GMap::identity(&xu))?;
    let d = x.dim();
    let mut sec = Matrix::zeros(x.field(), induced.rep.dim(), d);
    sec.paste(induced.trivial_coset() * d, 0, &Matrix::identity(x.field(), d));
    Ok(AdjunctionMap { induced, map, witness: SplitWitness { kind: SplitKind::Section, map: sec } })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Projective,
    Injective,
}

/// Relatively `U`-projective iff `B` splits over `G`; relatively injective iff `A` does.
///
/// The splitting is searched in `Hom_G` spanned by Frobenius transports of
/// `End_U(P|_U)`, which is all of it and much smaller to compute than solving for
/// `Hom_G` against the induced module directly.
pub fn relative_projectivity_test(p: &Rep, u: &Subgroup, side: Side) -> Result<(bool, Option<SplitWitness>)> {
    let pu = p.restrict(u)?;
    let ends = hom_space(&pu, &pu)?.basis();
    let w = match side {
        Side::Projective => {
            let b = adjunction_counit_b(p, u)?;
            let cands = ends
                .iter()
                .map(|m| Ok(frobenius_upper(&b.induced, p, &GMap::from_trusted(&pu, &pu, m.clone()))?.matrix().clone()))
                .collect::<Result<Vec<_>>>()?;
            solve_split(&b.map, SplitKind::Section, &cands)?.map(|map| SplitWitness { kind: SplitKind::Section, map })
        }
        Side::Injective => {
            let a = adjunction_unit_a(p, u)?;
            let cands = ends
                .iter()
                .map(|m| Ok(frobenius_lower(&a.induced, p, &GMap::from_trusted(&pu, &pu, m.clone()))?.matrix().clone()))
                .collect::<Result<Vec<_>>>()?;
            solve_split(&a.map, SplitKind::Retraction, &cands)?
                .map(|map| SplitWitness { kind: SplitKind::Retraction, map })
        }
    };
    Ok((w.is_some(), w))
}

/// Same answer as [`relative_projectivity_test`], by [`u_split_search`] over the full
/// `Hom_G` against the induced module. Only practical for small modules.
pub fn relative_projectivity_by_search(p: &Rep, u: &Subgroup, side: Side) -> Result<(bool, Option<SplitWitness>)> {
    let whole = p.domain().clone();
    let w = match side {
        Side::Projective => u_split_search(&adjunction_counit_b(p, u)?.map, &whole, SplitKind::Section)?,
        Side::Injective => u_split_search(&adjunction_unit_a(p, u)?.map, &whole, SplitKind::Retraction)?,
    };
    Ok((w.is_some(), w))
}

/// `T(X) = coker A`, with the quotient map from `Ind_U^G(X|_U)`.
pub fn suspension_t(x: &Rep, u: &Subgroup) -> Result<(Rep, GMap)> {
    Ok(adjunction_unit_a(x, u)?.map.cokernel())
}

/// `Ω(X) = ker B`, with its inclusion into `ind_U^G(X|_U)`.
pub fn loop_omega(x: &Rep, u: &Subgroup) -> Result<(Rep, GMap)> {
    Ok(adjunction_counit_b(x, u)?.map.kernel())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Injective,
    Projective,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableHomResult {
    pub flavor: Flavor,
    pub total_dim: usize,
    pub factoring_dim: usize,
    pub stable_dim: usize,
    /// Representatives of the quotient, reduced modulo the factoring subspace and
    /// put in echelon form.
    pub quotient_basis: Vec<Matrix>,
    pub total: Subspace,
    pub factoring: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableHomJson {
    pub flavor: Flavor,
    pub total_dim: usize,
    pub factoring_dim: usize,
    pub stable_dim: usize,
}

impl StableHomResult {
    pub fn to_json(&self) -> StableHomJson {
        StableHomJson {
            flavor: self.flavor,
            total_dim: self.total_dim,
            factoring_dim: self.factoring_dim,
            stable_dim: self.stable_dim,
        }
    }
}

/// `Hom_G(V₁, V₂)` modulo maps factoring through a relative injective (through `A`)
/// or a relative projective (through `B`).
pub fn stable_hom(v1: &Rep, v2: &Rep, u: &Subgroup, flavor: Flavor) -> Result<StableHomResult> {
    if !v1.same_category(v2) {
        return Err(Error::RepMismatch);
    }
    let f = v1.field();
    let total = hom_space(v1, v2)?;
    let n = v1.dim() * v2.dim();
    // Hom_G out of (or into) the induced module is spanned by transports of
    // Hom_U(V₁|_U, V₂|_U).
    let (v1u, v2u) = (v1.restrict(u)?, v2.restrict(u)?);
    let small = hom_space(&v1u, &v2u)?.basis();
    let factoring_vectors: Vec<Vec<Scalar>> = match flavor {
        Flavor::Injective => {
            let a = adjunction_unit_a(v1, u)?;
            small
                .iter()
                .map(|m| {
                    let phi = frobenius_lower(&a.induced, v2, &GMap::from_trusted(&v1u, &v2u, m.clone()))?;
                    Ok(phi.matrix().mul(a.map.matrix()).flatten())
                })
                .collect::<Result<_>>()?
        }
        Flavor::Projective => {
            let b = adjunction_counit_b(v2, u)?;
            small
                .iter()
                .map(|m| {
                    let psi = frobenius_upper(&b.induced, v1, &GMap::from_trusted(&v1u, &v2u, m.clone()))?;
                    Ok(b.map.matrix().mul(psi.matrix()).flatten())
                })
                .collect::<Result<_>>()?
        }
    };
    let factoring = Subspace::from_vectors(f, n, &factoring_vectors);
    debug_assert!(factoring.is_subspace_of(total.space()));
    let reduced: Vec<Vec<Scalar>> = total.space().basis_vectors().iter().map(|b| factoring.reduce(b)).collect();
    let quotient = Subspace::from_vectors(f, n, &reduced);
    let quotient_basis = quotient
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_data(f, v2.dim(), v1.dim(), v).expect("shape"))
        .collect();
    Ok(StableHomResult {
        flavor,
        total_dim: total.dim(),
        factoring_dim: factoring.dim(),
        stable_dim: total.dim() - factoring.dim(),
        quotient_basis,
        total: total.space().clone(),
        factoring,
    })
}

/// Span of all `β∘α` with `α: V₁ → M`, `β: M → V₂` equivariant.
pub fn factoring_through(v1: &Rep, v2: &Rep, m: &Rep) -> Result<Subspace> {
    let alphas = hom_space(v1, m)?.basis();
    let betas = hom_space(m, v2)?.basis();
    let vecs: Vec<Vec<Scalar>> =
        betas.iter().flat_map(|b| alphas.iter().map(move |a| b.mul(a).flatten())).collect();
    Ok(Subspace::from_vectors(v1.field(), v1.dim() * v2.dim(), &vecs))
}

/// Pullback `P = X ×_{V''} V` of `β: V → V''` along `g: X → V''`, with its two
/// projections `P → X` and `P → V`.
pub fn pullback(beta: &GMap, g: &GMap) -> Result<(Rep, GMap, GMap)> {
    if beta.target() != g.target() {
        return Err(Error::RepMismatch);
    }
    let (x, v) = (g.source(), beta.source());
    let f = x.field();
    let sum = direct_sum(&[x.clone(), v.clone()])?;
    let minus_beta = beta.matrix().scale(f.neg(Scalar::ONE));
    let diff = GMap::new(&sum, g.target(), g.matrix().hstack(&minus_beta))?;
    let (p, incl) = sub_rep(&sum, &diff.matrix().kernel());
    let px = Matrix::identity(f, x.dim()).hstack(&Matrix::zeros(f, x.dim(), v.dim()));
    let pv = Matrix::zeros(f, v.dim(), x.dim()).hstack(&Matrix::identity(f, v.dim()));
    let to_x = GMap::new(&p, x, px.mul(incl.matrix()))?;
    let to_v = GMap::new(&p, v, pv.mul(incl.matrix()))?;
    Ok((p, to_x, to_v))
}

/// Pushout `Q = (V ⊕ Y)/{(α(x), −h(x))}` of `α: V' → V` along `h: V' → Y`, with
/// the two maps `V → Q` and `Y → Q`.
pub fn pushout(alpha: &GMap, h: &GMap) -> Result<(Rep, GMap, GMap)> {
    if alpha.source() != h.source() {
        return Err(Error::RepMismatch);
    }
    let (v, y) = (alpha.target(), h.target());
    let f = v.field();
    let sum = direct_sum(&[v.clone(), y.clone()])?;
    let minus_h = h.matrix().scale(f.neg(Scalar::ONE));
    let into = GMap::new(alpha.source(), &sum, alpha.matrix().vstack(&minus_h))?;
    let (q, quot) = into.cokernel();
    let iv = Matrix::identity(f, v.dim()).vstack(&Matrix::zeros(f, y.dim(), v.dim()));
    let iy = Matrix::zeros(f, v.dim(), y.dim()).vstack(&Matrix::identity(f, y.dim()));
    let from_v = GMap::new(v, &q, quot.matrix().mul(&iv))?;
    let from_y = GMap::new(y, &q, quot.matrix().mul(&iy))?;
    Ok((q, from_v, from_y))
}

/// Jordan block sizes (descending) of a unipotent matrix, from the ranks of
/// `(M − 1)^k`.
pub fn jordan_type(m: &Matrix) -> Result<Vec<usize>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("Jordan type needs a square matrix".into()));
    }
    let n = m.rows();
    let nil = m.sub(&Matrix::identity(m.field(), n));
    let mut ranks = vec![n];
    let mut pw = Matrix::identity(m.field(), n);
    for _ in 0..n {
        pw = pw.mul(&nil);
        let r = pw.rank();
        ranks.push(r);
        if r == 0 {
            break;
        }
    }
    if *ranks.last().unwrap() != 0 {
        return Err(Error::Input("matrix is not unipotent".into()));
    }
    // blocks of size ≥ k: ranks[k-1] - ranks[k]
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut out = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        out.extend(std::iter::repeat_n(k, exactly));
    }
    Ok(out)
}

/// Jordan type with blocks of size `p^a` (projective for a cyclic group of that
/// order) removed.
pub fn stable_jordan_type(m: &Matrix, projective_size: usize) -> Result<Vec<usize>> {
    Ok(jordan_type(m)?.into_iter().filter(|&b| b != projective_size).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::group::{all_subgroups, catalog, Elem};
    use crate::rep::{jordan_block, jordan_rep};

    fn f(p: u32) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    fn augmentation(p: u32) -> GMap {
        let g = catalog::cyclic(2);
        let w = Subgroup::whole(&g);
        let reg = Rep::regular(&w, &f(p));
        let t = Rep::trivial(&w, &f(p), 1);
        GMap::new(&reg, &t, Matrix::from_ints(&f(p), &[vec![1, 1]])).unwrap()
    }

    #[test]
    fn split_search_examples() {
        let aug = augmentation(2);
        let g = aug.source().group().clone();
        let e = Subgroup::trivial(&g);
        let w = u_split_search(&aug, &e, SplitKind::Section).unwrap().unwrap();
        assert!(w.verify(&aug, &e));
        assert!(u_split_search(&aug, &Subgroup::whole(&g), SplitKind::Section).unwrap().is_none());
        let id = GMap::identity(aug.source());
        let w = u_split_search(&id, &Subgroup::whole(&g), SplitKind::Section).unwrap().unwrap();
        assert_eq!(w.map, Matrix::identity(&f(2), 2));
    }

    #[test]
    fn averaging_example_over_f3() {
        let aug = augmentation(3);
        let g = aug.source().group().clone();
        let sigma = Matrix::from_ints(&f(3), &[vec![1], vec![0]]);
        let w = averaging_section(&sigma, &aug, &Subgroup::trivial(&g), &Subgroup::whole(&g)).unwrap();
        assert_eq!(w.map, Matrix::from_ints(&f(3), &[vec![2], vec![2]]));
        assert!(w.verify(&aug, &Subgroup::whole(&g)));
        let same = averaging_section(&sigma, &aug, &Subgroup::trivial(&g), &Subgroup::trivial(&g)).unwrap();
        assert_eq!(same.map, sigma);
        let aug2 = augmentation(2);
        let g2 = aug2.source().group().clone();
        let s2 = Matrix::from_ints(&f(2), &[vec![1], vec![0]]);
        assert_eq!(
            averaging_section(&s2, &aug2, &Subgroup::trivial(&g2), &Subgroup::whole(&g2)),
            Err(Error::IndexDivisibleByP { index: 2, p: 2 })
        );
    }

    #[test]
    fn unit_and_counit_c2() {
        let g = catalog::cyclic(2);
        let w = Subgroup::whole(&g);
        let e = Subgroup::trivial(&g);
        let x = Rep::trivial(&w, &f(2), 1);
        let a = adjunction_unit_a(&x, &e).unwrap();
        assert_eq!(a.map.matrix(), &Matrix::from_ints(&f(2), &[vec![1], vec![1]]));
        assert!(a.witness.verify(&a.map, &e));
        let b = adjunction_counit_b(&x, &e).unwrap();
        assert_eq!(b.map.matrix(), &Matrix::from_ints(&f(2), &[vec![1, 1]]));
        assert!(b.witness.verify(&b.map, &e));
        let a = adjunction_unit_a(&x, &w).unwrap();
        assert_eq!(a.map.matrix(), &Matrix::identity(&f(2), 1));
    }

    #[test]
    fn transported_search_matches_direct_search() {
        for (g, q) in [(catalog::s3(), 3), (catalog::cyclic(4), 2), (catalog::klein_four(), 2)] {
            let w = Subgroup::whole(&g);
            let x = Rep::regular(&w, &f(q)).restrict(&w).unwrap();
            let t = Rep::trivial(&w, &f(q), 1);
            for u in all_subgroups(&w).unwrap() {
                for m in [&x, &t] {
                    for side in [Side::Projective, Side::Injective] {
                        let (fast, wit) = relative_projectivity_test(m, &u, side).unwrap();
                        let (slow, _) = relative_projectivity_by_search(m, &u, side).unwrap();
                        assert_eq!(fast, slow);
                        if let Some(wit) = wit {
                            let map = match side {
                                Side::Projective => adjunction_counit_b(m, &u).unwrap().map,
                                Side::Injective => adjunction_unit_a(m, &u).unwrap().map,
                            };
                            assert!(wit.verify(&map, &w));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn projectivity_s3_over_f3() {
        let g = catalog::s3();
        let w = Subgroup::whole(&g);
        let x = Rep::trivial(&w, &f(3), 1);
        let c3 = Subgroup::generate(&g, &[Elem(1)]);
        assert!(relative_projectivity_test(&x, &c3, Side::Projective).unwrap().0);
        assert!(!relative_projectivity_test(&x, &Subgroup::trivial(&g), Side::Projective).unwrap().0);
        assert!(!relative_projectivity_test(&x, &Subgroup::trivial(&g), Side::Injective).unwrap().0);
    }

    #[test]
    fn t_and_omega_small() {
        let g = catalog::cyclic(2);
        let w = Subgroup::whole(&g);
        let e = Subgroup::trivial(&g);
        let x = Rep::trivial(&w, &f(2), 1);
        let (t, _) = suspension_t(&x, &e).unwrap();
        assert_eq!(t, x);
        let (o, _) = loop_omega(&x, &e).unwrap();
        assert_eq!(o, x);
        assert_eq!(suspension_t(&x, &w).unwrap().0.dim(), 0);
        assert_eq!(loop_omega(&x, &w).unwrap().0.dim(), 0);
    }

    #[test]
    fn omega_j1_is_j2_for_c3() {
        let g = catalog::cyclic(3);
        let w = Subgroup::whole(&g);
        let j1 = jordan_rep(&w, &f(3), Elem(1), 1).unwrap();
        let (o, _) = loop_omega(&j1, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(jordan_type(o.act(Elem(1))).unwrap(), vec![2]);
    }

    #[test]
    fn stable_hom_examples() {
        let g = catalog::cyclic(3);
        let w = Subgroup::whole(&g);
        let e = Subgroup::trivial(&g);
        let t = Rep::trivial(&w, &f(3), 1);
        for fl in [Flavor::Injective, Flavor::Projective] {
            let r = stable_hom(&t, &t, &e, fl).unwrap();
            assert_eq!((r.total_dim, r.factoring_dim, r.stable_dim), (1, 0, 1));
            assert_eq!(stable_hom(&t, &t, &w, fl).unwrap().stable_dim, 0);
        }
        let reg = Rep::regular(&w, &f(3));
        assert_eq!(stable_hom(&t, &reg, &e, Flavor::Injective).unwrap().stable_dim, 0);
    }

    #[test]
    fn jordan_type_basic() {
        let fl = f(3);
        let m = jordan_block(&fl, 3).block_diag(&jordan_block(&fl, 1));
        assert_eq!(jordan_type(&m).unwrap(), vec![3, 1]);
        assert_eq!(stable_jordan_type(&m, 3).unwrap(), vec![1]);
        assert!(jordan_type(&Matrix::from_ints(&fl, &[vec![2]])).is_err());
    }

    #[test]
    fn pullback_of_admissible_epic() {
        let aug = augmentation(2);
        let g = aug.source().group().clone();
        let e = Subgroup::trivial(&g);
        let t = aug.target().clone();
        let (p, _, to_v) = pullback(&aug, &GMap::identity(&t)).unwrap();
        p.validate().unwrap();
        assert_eq!(p.dim(), 2);
        let (_, to_x, _) = pullback(&aug, &GMap::identity(&t)).unwrap();
        assert!(is_admissible_epic(&to_x, &e).unwrap());
        assert!(to_v.is_injective());
    }
}
