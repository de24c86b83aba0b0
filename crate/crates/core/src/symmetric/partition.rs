use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

pub const MAX_PARTITION_K: usize = 40;

/// Integer partition with parts in non-increasing order.
///
/// Used both as a cycle type (conjugacy class of `S_k`) and as an irrep label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidHint(format!("partition {parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// Trusted constructor for parts already sorted descending and positive.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn trivial(k: usize) -> Self {
        Partition(vec![k])
    }

    pub fn sign(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of part `l`.
    pub fn multiplicity(&self, l: usize) -> usize {
        self.0.iter().filter(|&&p| p == l).count()
    }

    pub fn distinct_parts(&self) -> usize {
        let mut n = 0;
        let mut last = 0;
        for &p in &self.0 {
            if p != last {
                n += 1;
                last = p;
            }
        }
        n
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Hook length at box `(row, col)`, zero-indexed.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let conj = self.conjugate();
        (self.0[row] - col - 1) + (conj.0[col] - row - 1) + 1
    }

    /// Sign of a permutation of this cycle type: `(−1)^{k − #parts}`.
    pub fn parity_sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Centraliser order `z_μ = ∏ ℓ^{m_ℓ} · m_ℓ!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut m = 0usize;
            while i < self.0.len() && self.0[i] == l {
                m += 1;
                i += 1;
                z *= BigUint::from(l) * BigUint::from(m);
            }
        }
        z
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `k` in descending lexicographic order.
pub fn partitions(k: usize) -> Result<Vec<Partition>> {
    if k == 0 || k > MAX_PARTITION_K {
        return Err(Error::TooLarge { what: "partition order k", size: k as f64, limit: MAX_PARTITION_K as f64 });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(k, k, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

pub fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Euler's pentagonal-number recurrence, independent of the enumerator.
    fn partition_count(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            for j in 1.. {
                let j = j as i64;
                let g1 = (j * (3 * j - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if j % 2 == 1 { 1 } else { -1 };
                total += sign * p[m - g1];
                let g2 = (j * (3 * j + 1) / 2) as usize;
                if g2 <= m {
                    total += sign * p[m - g2];
                }
            }
            p[m] = total;
        }
        p[n] as u64
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        assert_eq!(partitions(4).unwrap().len(), 5);
        assert_eq!(partitions(1).unwrap(), vec![Partition(vec![1])]);
        assert_eq!(partitions(10).unwrap().len(), 42);
        for k in 1..=25 {
            assert_eq!(partitions(k).unwrap().len() as u64, partition_count(k), "k={k}");
        }
    }

    #[test]
    fn order_is_descending_lexicographic() {
        let ps = partitions(6).unwrap();
        for w in ps.windows(2) {
            assert!(w[0].parts() > w[1].parts());
        }
        assert_eq!(ps[0].parts(), &[6]);
        assert_eq!(ps.last().unwrap().parts(), &[1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn guard_is_enforced() {
        assert!(partitions(0).is_err());
        assert!(partitions(41).is_err());
    }

    #[test]
    fn conjugate_hook_and_centralizer() {
        let p = Partition::new(vec![1, 3, 2]).unwrap();
        assert_eq!(p.parts(), &[3, 2, 1]);
        assert_eq!(p.conjugate().parts(), &[3, 2, 1]);
        assert_eq!(p.hook(0, 0), 5);
        assert_eq!(p.hook(1, 1), 1);
        // S_3: transposition class has centraliser 2, 3-cycles 3
        assert_eq!(Partition::new(vec![2, 1]).unwrap().centralizer_order(), BigUint::from(2u32));
        assert_eq!(Partition::new(vec![3]).unwrap().centralizer_order(), BigUint::from(3u32));
        assert_eq!(Partition::sign(4).centralizer_order(), BigUint::from(24u32));
        assert_eq!(Partition::new(vec![2, 2, 1, 1]).unwrap().distinct_parts(), 2);
    }
}
