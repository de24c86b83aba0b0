use std::fmt;

use super::partition::Partition;

/// Permutation of `0..k` in one-line notation: `self.0[x]` is the image of `x`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    /// Checked constructor: `images` must be a bijection on `0..len`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &x in &images {
            if x >= k || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation(images))
    }

    /// Canonical representative of a cycle type: cycles on consecutive points.
    pub fn from_cycle_type(cycle_type: &Partition) -> Self {
        let mut images = Vec::with_capacity(cycle_type.size());
        let mut start = 0;
        for &len in cycle_type.parts() {
            for i in 0..len {
                images.push(start + (i + 1) % len);
            }
            start += len;
        }
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(x, &y)| x == y).count()
    }

    pub fn inversions(&self) -> usize {
        let k = self.0.len();
        (0..k).map(|i| (i + 1..k).filter(|&j| self.0[i] > self.0[j]).count()).sum()
    }

    pub fn cycle_type(&self) -> Partition {
        let k = self.0.len();
        let mut seen = vec![false; k];
        let mut lens = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(lens)
    }

    /// Lexicographic successor, or `None` at the last permutation.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut v = self.0.clone();
        let k = v.len();
        if k < 2 {
            return None;
        }
        let mut i = k - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let mut j = k - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        Some(Permutation(v))
    }

    /// All `k!` permutations in lexicographic order.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(k)];
        while let Some(next) = out.last().unwrap().next_lex() {
            out.push(next);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}
