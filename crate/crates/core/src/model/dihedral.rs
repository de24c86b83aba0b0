use crate::error::{Error, Result};

/// Element `r^rotation · s^reflection` of the dihedral group `D_C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DihedralElement {
    pub rotation: usize,
    pub reflection: bool,
}

impl DihedralElement {
    pub fn new(rotation: usize, reflection: bool) -> Self {
        DihedralElement { rotation, reflection }
    }

    pub fn identity() -> Self {
        DihedralElement { rotation: 0, reflection: false }
    }

    /// `r^a s^x · r^b s^y = r^{a ± b} s^{x+y}` using `s r s = r^{-1}`.
    pub fn compose(self, other: Self, cycle: usize) -> Self {
        let b = if self.reflection { (cycle - other.rotation % cycle) % cycle } else { other.rotation % cycle };
        DihedralElement {
            rotation: (self.rotation + b) % cycle,
            reflection: self.reflection ^ other.reflection,
        }
    }

    pub fn inverse(self, cycle: usize) -> Self {
        if self.reflection {
            self
        } else {
            DihedralElement { rotation: (cycle - self.rotation % cycle) % cycle, reflection: false }
        }
    }

    /// Position in a `2C` table: rotations first, then reflections.
    pub fn index(self, cycle: usize) -> usize {
        self.rotation % cycle + if self.reflection { cycle } else { 0 }
    }

    pub fn from_index(index: usize, cycle: usize) -> Self {
        DihedralElement { rotation: index % cycle, reflection: index >= cycle }
    }

    pub fn is_valid(self, cycle: usize) -> bool {
        self.rotation < cycle
    }
}

/// Direction-dependent edge cost: a table over all `2C` elements of `D_C`.
#[derive(Debug, Clone, PartialEq)]
pub struct DihedralCost {
    cycle: usize,
    values: Vec<f64>,
}

impl DihedralCost {
    pub fn new(cycle: usize, values: Vec<f64>) -> Result<Self> {
        if cycle < 2 {
            return Err(Error::InvalidCost(format!("cycle length {cycle} must be at least 2")));
        }
        if values.len() != 2 * cycle {
            return Err(Error::InvalidCost(format!(
                "dihedral table needs {} entries, got {}",
                2 * cycle,
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidCost("dihedral table entries must be finite".into()));
        }
        Ok(DihedralCost { cycle, values })
    }

    pub fn cycle(&self) -> usize {
        self.cycle
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn eval(&self, g: DihedralElement) -> f64 {
        self.values[g.index(self.cycle)]
    }
}
