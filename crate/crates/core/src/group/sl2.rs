//! `SL₂(Z/p^N)` as a table group with its principal congruence filtration.

use super::{FinGroup, GroupRef, Subgroup};
use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::par::{self, Exec};

/// Default cap on `|SL₂(Z/p^N)|` for table construction.
pub const SL2_CAP: usize = 5000;

/// `|SL₂(Z/p^N)| = p^{3N-2}(p² - 1)`.
pub fn sl2_order(p: u64, n: u32) -> Option<u64> {
    if n == 0 {
        return Some(1);
    }
    p.checked_pow(3 * n - 2)?.checked_mul(p * p - 1)
}

#[derive(Clone, Debug)]
pub struct Sl2Group {
    pub p: u32,
    pub level: u32,
    pub modulus: u32,
    pub group: GroupRef,
    /// Entries `[a, b, c, d]` of each element, in table order.
    pub entries: Vec<[u32; 4]>,
    /// `K_m = {M ≡ 1 mod p^m}` for `1 ≤ m < N`, indexed by `m - 1`.
    pub filtration: Vec<Subgroup>,
}

impl Sl2Group {
    pub fn congruence(&self, m: u32) -> Option<&Subgroup> {
        (m >= 1).then(|| self.filtration.get(m as usize - 1)).flatten()
    }
}

pub fn sl2_quotient_group(p: u32, level: u32) -> Result<Sl2Group> {
    sl2_quotient_group_with(p, level, SL2_CAP, Exec::default())
}

/// Elements are enumerated in lexicographic order of `(a, b, c, d)`.
pub fn sl2_quotient_group_with(p: u32, level: u32, cap: usize, exec: Exec) -> Result<Sl2Group> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if level == 0 {
        return Err(Error::Input("level must be at least 1".into()));
    }
    let order = sl2_order(p as u64, level).unwrap_or(u64::MAX);
    if order > cap as u64 {
        return Err(Error::CapExceeded { order: order.min(usize::MAX as u64) as usize, cap });
    }
    let q = p.pow(level);
    let qq = q as u64;
    let mut entries = Vec::with_capacity(order as usize);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let det = (a as u64 * d as u64 + qq * qq - b as u64 * c as u64 % qq) % qq;
                    if det == 1 {
                        entries.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    debug_assert_eq!(entries.len() as u64, order);
    let key = |m: &[u32; 4]| (((m[0] * q + m[1]) * q + m[2]) * q + m[3]) as usize;
    let mut lookup = vec![u32::MAX; (q as usize).pow(4)];
    for (i, m) in entries.iter().enumerate() {
        lookup[key(m)] = i as u32;
    }
    let n = entries.len();
    let rows: Vec<Vec<u32>> = par::map_range(exec, 0..n, |i| {
        let x = entries[i];
        entries
            .iter()
            .map(|y| {
                let prod = [
                    ((x[0] as u64 * y[0] as u64 + x[1] as u64 * y[2] as u64) % qq) as u32,
                    ((x[0] as u64 * y[1] as u64 + x[1] as u64 * y[3] as u64) % qq) as u32,
                    ((x[2] as u64 * y[0] as u64 + x[3] as u64 * y[2] as u64) % qq) as u32,
                    ((x[2] as u64 * y[1] as u64 + x[3] as u64 * y[3] as u64) % qq) as u32,
                ];
                lookup[key(&prod)]
            })
            .collect()
    });
    let labels = entries.iter().map(|m| format!("{},{};{},{}", m[0], m[1], m[2], m[3])).collect();
    let group = FinGroup::from_table_labeled(rows, Some(labels))?;
    let filtration = (1..level)
        .map(|m| {
            let pm = p.pow(m);
            let mask: Vec<bool> = entries
                .iter()
                .map(|e| e[0] % pm == 1 % pm && e[1] % pm == 0 && e[2] % pm == 0 && e[3] % pm == 1 % pm)
                .collect();
            Subgroup::from_mask(&group, &mask)
        })
        .collect();
    Ok(Sl2Group { p, level, modulus: q, group, entries, filtration })
}
