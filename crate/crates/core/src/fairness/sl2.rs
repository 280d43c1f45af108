//! Congruence depths of `K_m ∩ z K_n z⁻¹` in `SL₂(Z_p)` for `z = diag(p^a, p^{-a})`,
//! the refinement certificate built on them, and a brute-force oracle working in
//! `SL₂(Z/p^N)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::par::{self, Exec};

/// Depths `(r, s, t)` of the factorization `U_{p^r} · T_{p^s} · L_{p^t}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DepthTriple {
    pub upper: u32,
    pub torus: u32,
    pub lower: u32,
}

impl DepthTriple {
    pub fn as_array(self) -> [u32; 3] {
        [self.upper, self.torus, self.lower]
    }

    /// Componentwise `≥` (the subgroup of `self` is contained in that of `other`).
    pub fn dominates(self, other: DepthTriple) -> bool {
        self.as_array().iter().zip(other.as_array()).all(|(a, b)| *a >= b)
    }

    /// Componentwise `≥` with at least one strict component.
    pub fn strictly_dominates(self, other: DepthTriple) -> bool {
        self.dominates(other) && self != other
    }
}

impl fmt::Display for DepthTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.upper, self.torus, self.lower)
    }
}

/// `(max(m, n+2a), max(m, n), max(m, n−2a))`.
pub fn sl2_depth_intersect(m: u32, n: u32, a: u32) -> Result<DepthTriple> {
    if m < 1 || n < 1 {
        return Err(Error::BadDepth);
    }
    let (m, n, a) = (m as i64, n as i64, a as i64);
    let f = |slope: i64| (m.max(n + slope * a)) as u32;
    Ok(DepthTriple { upper: f(2), torus: f(0), lower: f(-2) })
}

/// `max(m, c + s·a)` for integer `a ≥ 0`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct MaxExpr {
    pub floor: i64,
    pub constant: i64,
    pub slope: i64,
}

impl MaxExpr {
    pub fn eval(&self, a: i64) -> i64 {
        self.floor.max(self.constant + self.slope * a)
    }

    /// First integer `a ≥ 0` past which the expression is a single affine piece.
    fn settles_at(&self) -> i64 {
        if self.slope == 0 {
            return 0;
        }
        // constant + slope·a = floor
        let num = self.floor - self.constant;
        let cross = if self.slope > 0 { num.div_euclid(self.slope) + 1 } else { (-num).div_euclid(-self.slope) + 1 };
        cross.max(0)
    }

    /// `(intercept, slope)` of the piece that holds for large `a`.
    fn tail(&self) -> (i64, i64) {
        if self.slope > 0 {
            (self.constant, self.slope)
        } else if self.slope < 0 {
            (self.floor, 0)
        } else {
            (self.floor.max(self.constant), 0)
        }
    }
}

impl fmt::Display for MaxExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.slope {
            0 => write!(f, "max({}, {})", self.floor, self.constant),
            s if s > 0 => write!(f, "max({}, {} + {}a)", self.floor, self.constant, s),
            s => write!(f, "max({}, {} - {}a)", self.floor, self.constant, -s),
        }
    }
}

/// Whether `lhs(a) > rhs(a)` for every integer `a ≥ 0`: both sides are evaluated
/// up to the point where they stop changing shape, after which their difference is
/// affine and it suffices to compare slopes.
pub fn strictly_greater_for_all_a(lhs: &MaxExpr, rhs: &MaxExpr) -> bool {
    let settle = lhs.settles_at().max(rhs.settles_at());
    if (0..=settle).any(|a| lhs.eval(a) <= rhs.eval(a)) {
        return false;
    }
    let ((_, sl), (_, sr)) = (lhs.tail(), rhs.tail());
    sl >= sr
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub name: String,
    pub lhs_expr: String,
    pub rhs_expr: String,
    pub strict_for_all_a: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FairnessCertificate {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    pub m: u32,
    pub n: u32,
    pub n_prime: u32,
    pub components: Vec<Component>,
    pub strict_component: String,
    pub reduction_note: String,
}

impl FairnessCertificate {
    /// Recomputes the depth triples at `a` and checks the strict inclusion.
    pub fn holds_at(&self, a: u32) -> bool {
        match (sl2_depth_intersect(self.m, self.n_prime, a), sl2_depth_intersect(self.m, self.n, a)) {
            (Ok(new), Ok(old)) => new.strictly_dominates(old),
            _ => false,
        }
    }
}

pub const REDUCTION_NOTE: &str = "Every g in SL2(Q_p) factors as k z k' with k, k' in SL2(Z_p) and \
z = diag(p^a, p^-a), a >= 0. K_m and K_n are normal in SL2(Z_p), so the outer factors conjugate away and \
it suffices to compare the depth triples of K_m and z K_n z^-1 for these z.";

fn exprs(m: u32, n: u32) -> [(&'static str, MaxExpr); 3] {
    let e = |slope| MaxExpr { floor: m as i64, constant: n as i64, slope };
    [("upper", e(2)), ("torus", e(0)), ("lower", e(-2))]
}

/// `n' = max(m, n) + 1`, with a symbolic comparison of the three components.
pub fn sl2_fair_refine(m: u32, n: u32) -> Result<FairnessCertificate> {
    if m < 1 || n < 1 {
        return Err(Error::BadDepth);
    }
    let n_prime = m.max(n) + 1;
    let components: Vec<Component> = exprs(m, n_prime)
        .into_iter()
        .zip(exprs(m, n))
        .map(|((name, lhs), (_, rhs))| Component {
            name: name.to_string(),
            lhs_expr: lhs.to_string(),
            rhs_expr: rhs.to_string(),
            strict_for_all_a: strictly_greater_for_all_a(&lhs, &rhs),
        })
        .collect();
    let strict_component = components
        .iter()
        .find(|c| c.name == "torus" && c.strict_for_all_a)
        .map(|c| c.name.clone())
        .expect("the torus depth rises from max(m, n) to max(m, n) + 1");
    Ok(FairnessCertificate {
        p: None,
        m,
        n,
        n_prime,
        components,
        strict_component,
        reduction_note: REDUCTION_NOTE.to_string(),
    })
}

/// Default cap on `|K_n mod p^N| = p^{3(N−n)}` for the brute-force oracle.
pub const BRUTEFORCE_CAP: u64 = 1 << 20;

/// The oracle's precision precondition: `n + 2a ≤ N`, `m + 2a ≤ N` and `m < N`.
/// The error names the first inequality that fails.
pub fn bruteforce_precondition(big_n: u32, m: u32, n: u32, a: u32) -> Result<()> {
    let fail = if n + 2 * a > big_n {
        Some(format!("n + 2a <= N fails: {n} + 2*{a} = {} > {big_n}", n + 2 * a))
    } else if m + 2 * a > big_n {
        Some(format!("m + 2a <= N fails: {m} + 2*{a} = {} > {big_n}", m + 2 * a))
    } else if m >= big_n {
        Some(format!("m < N fails: {m} >= {big_n}"))
    } else {
        None
    };
    match fail {
        Some(msg) => Err(Error::Precision(msg)),
        None => Ok(()),
    }
}

pub fn sl2_depth_bruteforce(p: u32, big_n: u32, m: u32, n: u32, a: u32) -> Result<DepthTriple> {
    sl2_depth_bruteforce_with(p, big_n, m, n, a, BRUTEFORCE_CAP, Exec::default())
}

fn val(x: u64, p: u64, cap: u32) -> u32 {
    if x == 0 {
        return cap;
    }
    let mut v = 0;
    let mut y = x;
    while y.is_multiple_of(p) {
        y /= p;
        v += 1;
    }
    v.min(cap)
}

/// Enumerates `X ∈ K_n` modulo `p^N`, keeps the conjugates `zXz⁻¹` that are
/// integral (lower entry divisible by `p^{2a}`) and lie in `K_m`, and returns the
/// minimal valuations of the upper entry, the diagonal entries minus one, and the
/// lower entry. Requires `n + 2a ≤ N`, `m + 2a ≤ N` and `m < N` so that every
/// valuation and membership test is decided at working precision.
pub fn sl2_depth_bruteforce_with(
    p: u32,
    big_n: u32,
    m: u32,
    n: u32,
    a: u32,
    cap: u64,
    exec: Exec,
) -> Result<DepthTriple> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m < 1 || n < 1 {
        return Err(Error::BadDepth);
    }
    bruteforce_precondition(big_n, m, n, a)?;
    let pp = p as u64;
    let q = pp.checked_pow(big_n).ok_or_else(|| Error::Precision("modulus overflow".into()))?;
    let step = pp.pow(n.min(big_n));
    let count = q / step;
    let size = count.checked_pow(3).unwrap_or(u64::MAX);
    if size > cap {
        return Err(Error::CapExceeded { order: size.min(usize::MAX as u64) as usize, cap: cap as usize });
    }
    let inv = |x: u64| -> u64 {
        // x is a unit mod p^N; Euler: x^{φ(q)−1}
        let phi = q / pp * (pp - 1);
        let mut r = 1u64;
        let mut b = x % q;
        let mut e = phi - 1;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % q;
            }
            b = b * b % q;
            e >>= 1;
        }
        r
    };
    // Shard over the top-left entry 1 + i·p^n.
    let shards = par::map_range(exec, 0..count as usize, |i| {
        let x11 = (1 + i as u64 * step) % q;
        let x11_inv = inv(x11);
        let mut best = [u32::MAX; 3];
        for j in 0..count {
            let b = j * step;
            for k in 0..count {
                let c = k * step;
                // det = x11·d − b·c = 1
                let d = (1 + b * c % q) % q * x11_inv % q;
                // conjugated lower entry c / p^{2a}: need divisibility
                let vc = val(c, pp, big_n);
                if vc < 2 * a {
                    continue;
                }
                let v_up = (val(b, pp, big_n) + 2 * a).min(big_n);
                let v_low = vc - 2 * a;
                let v_t = val((x11 + q - 1) % q, pp, big_n).min(val((d + q - 1) % q, pp, big_n));
                if v_up < m || v_low < m || v_t < m {
                    continue;
                }
                best[0] = best[0].min(v_up);
                best[1] = best[1].min(v_t);
                best[2] = best[2].min(v_low);
            }
        }
        best
    });
    let best = shards.into_iter().fold([u32::MAX; 3], |acc, s| [acc[0].min(s[0]), acc[1].min(s[1]), acc[2].min(s[2])]);
    Ok(DepthTriple { upper: best[0], torus: best[1], lower: best[2] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_examples() {
        assert_eq!(sl2_depth_intersect(1, 1, 0).unwrap().as_array(), [1, 1, 1]);
        assert_eq!(sl2_depth_intersect(1, 1, 1).unwrap().as_array(), [3, 1, 1]);
        assert_eq!(sl2_depth_intersect(2, 1, 1).unwrap().as_array(), [3, 2, 2]);
        assert_eq!(sl2_depth_intersect(0, 1, 1), Err(Error::BadDepth));
    }

    #[test]
    fn refine_examples() {
        let c = sl2_fair_refine(1, 1).unwrap();
        assert_eq!(c.n_prime, 2);
        assert_eq!(c.strict_component, "torus");
        assert_eq!(c.components[0].lhs_expr, "max(1, 2 + 2a)");
        assert_eq!(c.components[2].rhs_expr, "max(1, 1 - 2a)");
        let flags: Vec<bool> = c.components.iter().map(|c| c.strict_for_all_a).collect();
        assert_eq!(flags, vec![true, true, false]);
        assert_eq!(sl2_fair_refine(2, 1).unwrap().n_prime, 3);
        for a in 0..3 {
            assert!(c.holds_at(a));
        }
    }

    #[test]
    fn symbolic_comparison() {
        let e = |floor, constant, slope| MaxExpr { floor, constant, slope };
        assert!(strictly_greater_for_all_a(&e(1, 2, 2), &e(1, 1, 2)));
        assert!(!strictly_greater_for_all_a(&e(1, 2, -2), &e(1, 1, -2)));
        assert!(!strictly_greater_for_all_a(&e(1, 5, -1), &e(1, 1, 1)));
        assert!(strictly_greater_for_all_a(&e(3, 0, 0), &e(1, 2, 0)));
        // crosses late: 10 − a > 1 + 0a fails from a = 9 on
        assert!(!strictly_greater_for_all_a(&e(0, 10, -1), &e(1, 1, 0)));
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(sl2_depth_bruteforce(2, 4, 1, 1, 0).unwrap().as_array(), [1, 1, 1]);
        assert_eq!(sl2_depth_bruteforce(2, 4, 1, 1, 1).unwrap().as_array(), [3, 1, 1]);
        assert_eq!(sl2_depth_bruteforce(3, 3, 1, 1, 1).unwrap().as_array(), [3, 1, 1]);
        assert!(matches!(sl2_depth_bruteforce(2, 2, 1, 1, 1), Err(Error::Precision(_))));
    }

    #[test]
    fn bruteforce_sequential_matches_parallel() {
        let a = sl2_depth_bruteforce_with(3, 4, 2, 1, 1, BRUTEFORCE_CAP, Exec::Parallel).unwrap();
        let b = sl2_depth_bruteforce_with(3, 4, 2, 1, 1, BRUTEFORCE_CAP, Exec::Sequential).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, sl2_depth_intersect(2, 1, 1).unwrap());
    }
}
