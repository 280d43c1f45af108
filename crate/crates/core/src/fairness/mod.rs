//! Fairness at finite level: searching for an element `g` that defeats a proposed
//! refinement `H' ⊆ H`, the refinement through a central element, and the `SL₂`
//! congruence-depth calculus in [`sl2`].

pub mod sl2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{all_subgroups, center, conjugate_intersect, Elem, Subgroup};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessOutcome {
    WitnessFound,
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub outcome: WitnessOutcome,
    pub g: Option<Elem>,
    pub k: Subgroup,
    pub h: Subgroup,
    pub h_prime: Subgroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub outcome: WitnessOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_label: Option<String>,
    pub group_order: usize,
    pub k: Vec<u32>,
    pub h: Vec<u32>,
    pub h_prime: Vec<u32>,
}

impl WitnessReport {
    pub fn to_json(&self) -> WitnessJson {
        let grp = self.k.group();
        WitnessJson {
            outcome: self.outcome,
            g: self.g.map(|g| g.0),
            g_label: self.g.map(|g| grp.label(g)),
            group_order: grp.order(),
            k: self.k.member_indices(),
            h: self.h.member_indices(),
            h_prime: self.h_prime.member_indices(),
        }
    }

    /// Re-checks a found witness.
    pub fn verify(&self) -> bool {
        match (self.outcome, self.g) {
            (WitnessOutcome::WitnessFound, Some(g)) => {
                conjugate_intersect(&self.k, &self.h_prime, g) == conjugate_intersect(&self.k, &self.h, g)
            }
            (WitnessOutcome::Exhausted, None) => true,
            _ => false,
        }
    }
}

/// First `g` (by index) with `K ∩ gH'g⁻¹ = K ∩ gHg⁻¹`, or `Exhausted` when the
/// inclusion is strict for every `g` in the ambient group.
pub fn fairness_witness_search(k: &Subgroup, h: &Subgroup, h_prime: &Subgroup) -> Result<WitnessReport> {
    if !h.same_parent(k) || !h_prime.same_parent(k) {
        return Err(Error::GroupMismatch);
    }
    if !h_prime.is_subgroup_of(h) {
        return Err(Error::HprimeNotInH);
    }
    if !h.is_subgroup_of(k) {
        return Err(Error::NotContained("H in K".into()));
    }
    let g = k
        .group()
        .elements()
        .find(|&g| conjugate_intersect(k, h_prime, g) == conjugate_intersect(k, h, g));
    Ok(WitnessReport {
        outcome: if g.is_some() { WitnessOutcome::WitnessFound } else { WitnessOutcome::Exhausted },
        g,
        k: k.clone(),
        h: h.clone(),
        h_prime: h_prime.clone(),
    })
}

/// Picks the first nontrivial `z ∈ Z(G) ∩ H` and returns a largest subgroup of `H`
/// avoiding `z` (ties broken by the smallest member list).
pub fn central_refinement(k: &Subgroup, h: &Subgroup) -> Result<(Elem, Subgroup)> {
    if !h.is_subgroup_of(k) {
        return Err(Error::NotContained("H in K".into()));
    }
    let z_g = center(&Subgroup::whole(k.group()));
    let zh = z_g.intersect(h);
    let e = k.group().identity();
    let z = *zh.members().iter().find(|&&x| x != e).ok_or(Error::TrivialCentralIntersection)?;
    let best = all_subgroups(h)?
        .into_iter()
        .filter(|s| !s.contains(z))
        .max_by(|a, b| a.order().cmp(&b.order()).then_with(|| b.members().cmp(a.members())))
        .expect("the trivial subgroup avoids z");
    Ok((z, best))
}

/// `(H·C) ∩ K`, the saturation used when central characters are in play.
pub fn saturate(h: &Subgroup, c: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    if !c.is_central() {
        return Err(Error::NotCentral(format!("{c:?}")));
    }
    Ok(h.join(c).intersect(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    #[test]
    fn equal_subgroups_give_identity_witness() {
        let g = catalog::s3();
        let k = Subgroup::whole(&g);
        let r = fairness_witness_search(&k, &k, &k).unwrap();
        assert_eq!(r.g, Some(g.identity()));
        assert!(r.verify());
    }

    #[test]
    fn s3_examples() {
        let g = catalog::s3();
        let t = Subgroup::generate(&g, &[g.find_label("(12)").unwrap()]);
        let e = Subgroup::trivial(&g);
        let r = fairness_witness_search(&t, &t, &e).unwrap();
        assert_eq!(g.label(r.g.unwrap()), "(123)");
        let c3 = Subgroup::generate(&g, &[g.find_label("(123)").unwrap()]);
        let r = fairness_witness_search(&c3, &c3, &e).unwrap();
        assert_eq!(r.outcome, WitnessOutcome::Exhausted);
        assert_eq!(fairness_witness_search(&c3, &e, &c3).unwrap_err(), Error::HprimeNotInH);
    }

    #[test]
    fn central_refinement_examples() {
        let c4 = catalog::cyclic(4);
        let k = Subgroup::whole(&c4);
        let h = Subgroup::generate(&c4, &[Elem(2)]);
        let (z, hp) = central_refinement(&k, &h).unwrap();
        assert_eq!(z, Elem(2));
        assert!(hp.is_trivial());

        let s3 = catalog::s3();
        let t = Subgroup::generate(&s3, &[s3.find_label("(12)").unwrap()]);
        assert_eq!(
            central_refinement(&Subgroup::whole(&s3), &t).unwrap_err(),
            Error::TrivialCentralIntersection
        );

        let v4 = catalog::klein_four();
        let w = Subgroup::whole(&v4);
        let (z, hp) = central_refinement(&w, &w).unwrap();
        assert_eq!(z, Elem(1));
        assert_eq!(hp.member_indices(), vec![0, 2]);
        assert_eq!(fairness_witness_search(&w, &w, &hp).unwrap().outcome, WitnessOutcome::Exhausted);
    }
}
