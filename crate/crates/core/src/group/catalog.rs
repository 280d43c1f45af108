//! Small groups used throughout the suites, built from closed-form multiplication
//! rules or permutation generators.

use std::collections::{BTreeSet, VecDeque};

use super::{FinGroup, GroupRef};

/// `C_n`, element `i` is `g^i`.
pub fn cyclic(n: usize) -> GroupRef {
    let labels = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g^{i}") }).collect();
    FinGroup::from_fn(n, |a, b| (a + b) % n, Some(labels)).expect("cyclic group")
}

/// `G × H` with `(g, h)` at index `g·|H| + h`.
pub fn direct_product(g: &GroupRef, h: &GroupRef) -> GroupRef {
    let (n, m) = (g.order(), h.order());
    let labels = (0..n * m)
        .map(|i| {
            let (a, b) = (i / m, i % m);
            format!("({},{})", g.label(super::Elem(a as u32)), h.label(super::Elem(b as u32)))
        })
        .collect();
    FinGroup::from_fn(
        n * m,
        |x, y| {
            let a = g.mul(super::Elem((x / m) as u32), super::Elem((y / m) as u32)).idx();
            let b = h.mul(super::Elem((x % m) as u32), super::Elem((y % m) as u32)).idx();
            a * m + b
        },
        Some(labels),
    )
    .expect("direct product")
}

pub fn klein_four() -> GroupRef {
    direct_product(&cyclic(2), &cyclic(2))
}

/// Dihedral group of order `2n`; index `j·n + i` is `r^i s^j`.
pub fn dihedral(n: usize) -> GroupRef {
    let labels = (0..2 * n)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (i, 0) => format!("r^{i}"),
                (0, _) => "s".to_string(),
                (i, _) => format!("r^{i}s"),
            }
        })
        .collect();
    FinGroup::from_fn(
        2 * n,
        |x, y| {
            let (i, j) = (x % n, x / n);
            let (k, l) = (y % n, y / n);
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            ((j + l) % 2) * n + rot
        },
        Some(labels),
    )
    .expect("dihedral group")
}

/// `S_3` as the dihedral group of order 6 with `r = (123)`, `s = (12)`, so the
/// elements are ordered `(), (123), (132), (12), (13), (23)`.
pub fn s3() -> GroupRef {
    let d = dihedral(3);
    let labels = ["()", "(123)", "(132)", "(12)", "(13)", "(23)"].map(String::from).to_vec();
    FinGroup::from_table_labeled(d.to_json().table, Some(labels)).expect("S3")
}

/// Quaternion group; indices `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> GroupRef {
    // unit index u ∈ {1, i, j, k} = 0..4, sign bit s; element = 2u + s
    let unit_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) | (x, 0) => (x, false),
            (x, y) if x == y => (0, true),
            (1, 2) => (3, false),
            (2, 3) => (1, false),
            (3, 1) => (2, false),
            (2, 1) => (3, true),
            (3, 2) => (1, true),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|x| format!("{}{}", if x % 2 == 1 { "-" } else { "" }, names[x / 2]))
        .collect();
    FinGroup::from_fn(
        8,
        |x, y| {
            let (u, neg) = unit_mul(x / 2, y / 2);
            let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
            2 * u + sign
        },
        Some(labels),
    )
    .expect("quaternion group")
}

/// Permutation group generated by `gens` (images of `0..degree`), elements sorted
/// lexicographically by image list; composition is `(στ)(x) = σ(τ(x))`.
pub fn permutation_group(degree: usize, gens: &[Vec<usize>]) -> GroupRef {
    let id: Vec<usize> = (0..degree).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y: Vec<usize> = (0..degree).map(|i| x[s[i]]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let elems: Vec<Vec<usize>> = seen.into_iter().collect();
    let index = |p: &Vec<usize>| elems.binary_search(p).expect("closed");
    let labels = elems.iter().map(|p| cycle_notation(p)).collect();
    FinGroup::from_fn(
        elems.len(),
        |a, b| {
            let prod: Vec<usize> = (0..degree).map(|i| elems[a][elems[b][i]]).collect();
            index(&prod)
        },
        Some(labels),
    )
    .expect("permutation group")
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

pub fn a4() -> GroupRef {
    permutation_group(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

/// Looks up a catalog group by name: `C<n>`, `C<a>xC<b>`, `S3`, `D<n>` (order `2n`),
/// `Q8`, `A4`.
pub fn by_name(name: &str) -> Option<GroupRef> {
    match name {
        "S3" => return Some(s3()),
        "Q8" => return Some(quaternion()),
        "A4" => return Some(a4()),
        _ => {}
    }
    if let Some((a, b)) = name.split_once('x') {
        return Some(direct_product(&by_name(a)?, &by_name(b)?));
    }
    let (head, num) = name.split_at(1);
    let n: usize = num.parse().ok().filter(|&n| n >= 1)?;
    match head {
        "C" => Some(cyclic(n)),
        "D" if n >= 2 => Some(dihedral(n)),
        _ => None,
    }
}
