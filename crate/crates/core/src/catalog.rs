//! The group/field catalog the verification suites iterate over, its JSON file
//! format, and a generated catalog of small representations for each domain.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FiniteField, Scalar};
use crate::group::{all_subgroups, catalog as groups, FinGroup, GroupJson, GroupRef, Subgroup};
use crate::matrix::Matrix;
use crate::rep::{direct_sum, jordan_block, rep_induce, Character, Rep};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: GroupRef,
    pub fields: Vec<FiniteField>,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

/// One group in a catalog file: a builtin name, a path to a group JSON file
/// (relative to the catalog file), or an inline table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogGroupJson {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<GroupJson>,
    /// Overrides the catalog-wide field list.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fields: Option<Vec<FieldDescriptor>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogJson {
    pub groups: Vec<CatalogGroupJson>,
    pub fields: Vec<FieldDescriptor>,
}

pub const STANDARD_GROUPS: [&str; 9] = ["C2", "C3", "C4", "C2xC2", "C9", "S3", "D4", "Q8", "A4"];

fn desc(p: u32, k: u32) -> FieldDescriptor {
    FieldDescriptor { p, k, modulus: None }
}

pub fn standard_fields() -> Vec<FieldDescriptor> {
    vec![desc(2, 1), desc(3, 1), desc(2, 2), desc(3, 2)]
}

impl Catalog {
    /// The nine standard groups over `F_2, F_3, F_4, F_9`, plus `C_5` over `F_5` and
    /// the abelian groups `C_2×C_3`, `C_2×C_6` used by the central-character suite.
    pub fn standard() -> Catalog {
        Catalog::from_json(&Catalog::standard_json(), None).expect("standard catalog")
    }

    pub fn standard_json() -> CatalogJson {
        let mut groups: Vec<CatalogGroupJson> = STANDARD_GROUPS
            .iter()
            .map(|n| CatalogGroupJson {
                name: n.to_string(),
                builtin: Some(n.to_string()),
                file: None,
                table: None,
                fields: None,
            })
            .collect();
        for (n, fields) in [("C5", vec![desc(5, 1)]), ("C2xC3", vec![desc(3, 1), desc(2, 2)]), ("C2xC6", vec![desc(2, 2)])] {
            groups.push(CatalogGroupJson {
                name: n.to_string(),
                builtin: Some(n.to_string()),
                file: None,
                table: None,
                fields: Some(fields),
            });
        }
        CatalogJson { groups, fields: standard_fields() }
    }

    pub fn load(path: &Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        let j: CatalogJson =
            serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Catalog::from_json(&j, path.parent())
    }

    pub fn from_json(j: &CatalogJson, base: Option<&Path>) -> Result<Catalog> {
        let default_fields =
            j.fields.iter().map(FiniteField::from_descriptor).collect::<Result<Vec<_>>>()?;
        let mut entries = Vec::new();
        for g in &j.groups {
            let group = match (&g.builtin, &g.file, &g.table) {
                (Some(b), None, None) => {
                    groups::by_name(b).ok_or_else(|| Error::Input(format!("unknown builtin group {b}")))?
                }
                (None, Some(f), None) => load_group_file(&base.unwrap_or(Path::new(".")).join(f))?,
                (None, None, Some(t)) => FinGroup::from_json(t)?,
                _ => {
                    return Err(Error::Input(format!(
                        "group {} needs exactly one of builtin, file, table",
                        g.name
                    )))
                }
            };
            let fields = match &g.fields {
                Some(fs) => fs.iter().map(FiniteField::from_descriptor).collect::<Result<Vec<_>>>()?,
                None => default_fields.clone(),
            };
            entries.push(CatalogEntry { name: g.name.clone(), group, fields });
        }
        Ok(Catalog { entries })
    }

    /// Inline form with every table spelled out.
    pub fn to_json(&self) -> CatalogJson {
        CatalogJson {
            groups: self
                .entries
                .iter()
                .map(|e| CatalogGroupJson {
                    name: e.name.clone(),
                    builtin: None,
                    file: None,
                    table: Some(e.group.to_json()),
                    fields: Some(e.fields.iter().map(FiniteField::descriptor).collect()),
                })
                .collect(),
            fields: Vec::new(),
        }
    }

    /// `(entry, field)` pairs in catalog order.
    pub fn pairs(&self) -> Vec<(&CatalogEntry, &FiniteField)> {
        self.entries.iter().flat_map(|e| e.fields.iter().map(move |f| (e, f))).collect()
    }
}

pub fn load_group_file(path: &Path) -> Result<GroupRef> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    let j: GroupJson = serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    FinGroup::from_json(&j)
}

/// Short field name used in case ids: `F2`, `F4`, ….
pub fn field_name(f: &FiniteField) -> String {
    format!("F{}", f.order())
}

/// Subgroup name for case ids: member indices joined by `.`.
pub fn subgroup_name(s: &Subgroup) -> String {
    let m: Vec<String> = s.member_indices().iter().map(u32::to_string).collect();
    format!("[{}]", m.join("."))
}

#[derive(Clone, Debug)]
pub struct NamedRep {
    pub name: String,
    pub rep: Rep,
}

/// All characters `D → F^×` of an abelian `D`, trivial first, found by trying every
/// assignment of values on the generators.
pub fn characters(domain: &Subgroup, field: &FiniteField) -> Vec<Character> {
    if !domain.is_abelian() {
        return Vec::new();
    }
    let gens = domain.generators().to_vec();
    let units: Vec<Scalar> = field.elements().filter(|s| !s.is_zero()).collect();
    let mut out = vec![Character::trivial(domain, field)];
    let total = units.len().pow(gens.len() as u32);
    for code in 0..total {
        let mut c = code;
        let images: Vec<_> = gens
            .iter()
            .map(|&g| {
                let v = units[c % units.len()];
                c /= units.len();
                (g, v)
            })
            .collect();
        if let Ok(chi) = Character::from_generators(domain, field, &images) {
            if !out.contains(&chi) {
                out.push(chi);
            }
        }
    }
    out
}

/// One-dimensional representations `D → F^×` (any `D`), trivial first.
pub fn linear_reps(domain: &Subgroup, field: &FiniteField) -> Vec<Rep> {
    let gens = domain.generators().to_vec();
    let units: Vec<Scalar> = field.elements().filter(|s| !s.is_zero()).collect();
    let mut out = vec![Rep::trivial(domain, field, 1)];
    for code in 0..units.len().pow(gens.len() as u32) {
        let mut c = code;
        let images: Vec<_> = gens
            .iter()
            .map(|&g| {
                let mut m = Matrix::zeros(field, 1, 1);
                m.set(0, 0, units[c % units.len()]);
                c /= units.len();
                (g, m)
            })
            .collect();
        if let Ok(r) = Rep::build(domain, field, &images) {
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out
}

/// Cap on the number of catalog representations per domain.
pub const REPS_PER_DOMAIN: usize = 7;

/// A deterministic list of representations of `domain` of dimension `≤ max_dim`:
/// the trivial module, nontrivial linear characters, coset permutation modules,
/// Jordan blocks on a cyclic generator, a decomposable sum, and a seeded change of
/// basis of one of the above.
pub fn rep_catalog(domain: &Subgroup, field: &FiniteField, max_dim: usize) -> Vec<NamedRep> {
    let mut out: Vec<NamedRep> = Vec::new();
    let push = |out: &mut Vec<NamedRep>, name: String, rep: Rep| {
        if rep.dim() <= max_dim && rep.dim() > 0 && out.len() < REPS_PER_DOMAIN && !out.iter().any(|r| r.rep == rep) {
            out.push(NamedRep { name, rep });
        }
    };
    push(&mut out, "triv".into(), Rep::trivial(domain, field, 1));
    for (i, r) in linear_reps(domain, field).into_iter().enumerate().skip(1).take(2) {
        push(&mut out, format!("lin{i}"), r);
    }
    let subs = all_subgroups(domain).unwrap_or_default();
    let mut perms = 0;
    for h in subs.iter().rev() {
        let idx = h.index_in(domain);
        if idx < 2 || idx > max_dim || perms >= 2 {
            continue;
        }
        if let Ok(ind) = rep_induce(&Rep::trivial(h, field, 1), domain) {
            push(&mut out, format!("perm{idx}[{}]", subgroup_name(h)), ind.rep);
            perms += 1;
        }
    }
    if let [g] = domain.generators() {
        for k in 2..=max_dim.min(4) {
            if let Ok(r) = Rep::build(domain, field, &[(*g, jordan_block(field, k))]) {
                push(&mut out, format!("J{k}"), r);
            }
        }
    }
    if max_dim >= 2 {
        let (name, second) = out
            .get(1)
            .map(|r| (r.name.clone(), r.rep.clone()))
            .unwrap_or_else(|| ("triv".into(), Rep::trivial(domain, field, 1)));
        if let Ok(sum) = direct_sum(&[Rep::trivial(domain, field, 1), second]) {
            push(&mut out, format!("triv+{name}"), sum);
        }
    }
    if let Some(base) = out.iter().find(|r| r.rep.dim() >= 2).cloned() {
        let mut rng = ChaCha8Rng::seed_from_u64(domain_seed(domain, field));
        let p = random_invertible(field, base.rep.dim(), &mut rng);
        if let Ok(twisted) = base.rep.change_basis(&p) {
            push(&mut out, format!("{}^P", base.name), twisted);
        }
    }
    out
}

fn domain_seed(domain: &Subgroup, field: &FiniteField) -> u64 {
    domain.member_indices().iter().fold(field.order() as u64, |h, &m| h.wrapping_mul(1_000_003).wrapping_add(m as u64))
}

pub fn random_scalar<R: Rng>(field: &FiniteField, rng: &mut R) -> Scalar {
    field.element(rng.gen_range(0..field.order()))
}

pub fn random_matrix<R: Rng>(field: &FiniteField, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let data = (0..rows * cols).map(|_| random_scalar(field, rng)).collect();
    Matrix::from_data(field, rows, cols, data).expect("shape")
}

pub fn random_invertible<R: Rng>(field: &FiniteField, n: usize, rng: &mut R) -> Matrix {
    loop {
        let m = random_matrix(field, n, n, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_catalog_shape() {
        let c = Catalog::standard();
        assert_eq!(c.entries.len(), 12);
        assert_eq!(c.entries[0].fields.len(), 4);
        assert_eq!(c.pairs().len(), 9 * 4 + 1 + 2 + 1);
    }

    #[test]
    fn catalog_json_roundtrip_inline() {
        let c = Catalog::standard();
        let j = c.to_json();
        let back = Catalog::from_json(&j, None).unwrap();
        assert_eq!(back.entries.len(), c.entries.len());
        assert_eq!(back.entries[5].group, c.entries[5].group);
    }

    #[test]
    fn catalog_rejects_ambiguous_entry() {
        let mut j = Catalog::standard_json();
        j.groups[0].file = Some("x.json".into());
        assert!(matches!(Catalog::from_json(&j, None), Err(Error::Input(_))));
    }

    #[test]
    fn characters_of_c3_over_f4() {
        let g = groups::cyclic(3);
        let f = FiniteField::new(2, 2, None).unwrap();
        assert_eq!(characters(&Subgroup::whole(&g), &f).len(), 3);
        let f2 = FiniteField::prime(2).unwrap();
        assert_eq!(characters(&Subgroup::whole(&g), &f2).len(), 1);
    }

    #[test]
    fn rep_catalog_is_valid_and_deterministic() {
        let g = groups::dihedral(4);
        let w = Subgroup::whole(&g);
        let f = FiniteField::prime(2).unwrap();
        let a = rep_catalog(&w, &f, 4);
        let b = rep_catalog(&w, &f, 4);
        assert!(a.len() >= 3);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.rep, y.rep);
            x.rep.validate().unwrap();
            assert!(x.rep.dim() <= 4);
        }
    }
}
