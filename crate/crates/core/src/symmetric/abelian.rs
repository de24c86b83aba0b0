//! Abelian index `|G| / max{|A| : A ≤ G abelian}` and the dimension bound.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::characters::max_dimension;
use super::partition::{factorial, partitions};
use super::perm::Permutation;
use crate::error::{Error, Result};

pub const MAX_ABELIAN_SEARCH_K: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupDescriptor {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    /// `S_k` through the asymptotic estimate `k!/3^{k/3}`.
    SymmetricFormula(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AbelianIndex {
    pub group_order: String,
    /// Exact largest abelian subgroup order, when computed.
    pub max_abelian_order: Option<u64>,
    pub value: f64,
    pub asymptotic: bool,
}

pub fn abelian_index(group: GroupDescriptor) -> Result<AbelianIndex> {
    let exact = |order: BigUint, best: u64| AbelianIndex {
        value: order.to_f64().expect("fits") / best as f64,
        group_order: order.to_string(),
        max_abelian_order: Some(best),
        asymptotic: false,
    };
    match group {
        GroupDescriptor::Cyclic(c) if c >= 1 => Ok(exact(BigUint::from(c), c as u64)),
        // D_2 is the Klein four-group; otherwise the rotations are largest
        GroupDescriptor::Dihedral(2) => Ok(exact(BigUint::from(4u32), 4)),
        GroupDescriptor::Dihedral(c) if c >= 3 => Ok(exact(BigUint::from(2 * c), c as u64)),
        GroupDescriptor::Symmetric(k) if k >= 1 => Ok(exact(factorial(k), max_abelian_order(k)?)),
        GroupDescriptor::SymmetricFormula(k) if k >= 1 => {
            let order = factorial(k);
            let value = order.to_f64().unwrap_or(f64::INFINITY) / 3f64.powf(k as f64 / 3.0);
            Ok(AbelianIndex { group_order: order.to_string(), max_abelian_order: None, value, asymptotic: true })
        }
        other => Err(Error::Unsupported(format!("abelian index of {other:?}"))),
    }
}

type Perm = Vec<u8>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn commute(a: &Perm, b: &Perm) -> bool {
    (0..a.len()).all(|x| a[b[x] as usize] == b[a[x] as usize])
}

/// Abelian group generated by `group` and a commuting element `g`.
fn extend(group: &[Perm], g: &Perm) -> Vec<Perm> {
    let mut out: Vec<Perm> = group.to_vec();
    let mut seen: HashSet<Perm> = group.iter().cloned().collect();
    let mut power = g.clone();
    while !seen.contains(&power) {
        for a in group {
            let x = compose(a, &power);
            if seen.insert(x.clone()) {
                out.push(x);
            }
        }
        power = compose(&power, g);
    }
    out
}

struct AbelianSearch<'a> {
    elements: &'a [Perm],
    best: usize,
    visited: HashSet<Vec<Perm>>,
}

impl AbelianSearch<'_> {
    /// `group` is abelian; `centralizer` lists element indices commuting with it.
    fn grow(&mut self, group: Vec<Perm>, centralizer: Vec<usize>, last: usize) {
        self.best = self.best.max(group.len());
        if centralizer.len() <= self.best {
            return;
        }
        let mut key = group.clone();
        key.sort_unstable();
        if !self.visited.insert(key) {
            return;
        }
        let members: HashSet<&Perm> = group.iter().collect();
        for &g in centralizer.iter().filter(|&&g| g > last) {
            let elem = &self.elements[g];
            if members.contains(elem) {
                continue;
            }
            let next = extend(&group, elem);
            let cent: Vec<usize> = centralizer.iter().copied().filter(|&h| commute(elem, &self.elements[h])).collect();
            self.grow(next, cent, g);
        }
    }
}

/// Largest abelian subgroup of `S_k` by exhaustive search.
///
/// Up to conjugacy every non-trivial abelian subgroup contains a canonical
/// prime-order class representative; further generators are drawn from the
/// running centraliser in increasing order.
pub fn max_abelian_order(k: usize) -> Result<u64> {
    if k == 0 || k > MAX_ABELIAN_SEARCH_K {
        return Err(Error::TooLarge { what: "abelian subgroup search k", size: k as f64, limit: MAX_ABELIAN_SEARCH_K as f64 });
    }
    if k == 1 {
        return Ok(1);
    }
    let to_small = |p: &Permutation| -> Perm { p.images().iter().map(|&x| x as u8).collect() };
    let elements: Vec<Perm> = Permutation::all(k).iter().map(to_small).collect();
    let is_prime = |p: usize| p >= 2 && (2..p).all(|d| !p.is_multiple_of(d));
    let mut search = AbelianSearch { elements: &elements, best: 1, visited: HashSet::new() };
    let identity: Perm = (0..k as u8).collect();
    for ct in partitions(k)? {
        let cycles: Vec<usize> = ct.parts().iter().copied().filter(|&l| l > 1).collect();
        let prime_order = !cycles.is_empty() && cycles.iter().all(|&l| l == cycles[0]) && is_prime(cycles[0]);
        if !prime_order {
            continue;
        }
        let g = to_small(&Permutation::from_cycle_type(&ct));
        let group = extend(std::slice::from_ref(&identity), &g);
        let cent: Vec<usize> = (0..elements.len()).filter(|&h| commute(&g, &elements[h])).collect();
        search.grow(group, cent, 0);
    }
    Ok(search.best as u64)
}

/// `d_max ≤ α` for `S_k` with exact `α`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityCheck {
    pub k: usize,
    pub holds: bool,
    pub d_max: String,
    pub alpha: f64,
    pub max_abelian_order: u64,
}

pub fn fundamental_ineq_check(k: usize) -> Result<InequalityCheck> {
    let d_max = max_dimension(k)?;
    let best = max_abelian_order(k)?;
    let order = factorial(k);
    Ok(InequalityCheck {
        k,
        // d_max ≤ k!/A  ⇔  d_max·A ≤ k!
        holds: &d_max * best <= order,
        d_max: d_max.to_string(),
        alpha: order.to_f64().expect("fits") / best as f64,
        max_abelian_order: best,
    })
}
