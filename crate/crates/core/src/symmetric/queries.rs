use num_bigint::BigUint;
use serde::Serialize;

use super::partition::factorial;
use crate::analytics::{ceil_log2, sig_figs, sig_figs_int, Sci};
use crate::error::{Error, Result};

/// Query counts for one `k`: `m·r·k²·⌈log₂k⌉` edge-level queries against
/// `m·k!` function evaluations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryRow {
    pub k: usize,
    pub group_order: BigUint,
    pub quantum: BigUint,
    pub classical: BigUint,
}

impl QueryRow {
    pub fn speedup(&self, sig: u32) -> Sci {
        sig_figs(&self.classical, &self.quantum, sig)
    }

    /// True when the classical count exceeds the quantum one.
    pub fn quantum_wins(&self) -> bool {
        self.classical > self.quantum
    }

    pub fn printable(&self) -> QueryPrintRow {
        QueryPrintRow {
            k: self.k,
            group_order: self.group_order.to_string(),
            quantum: sig_figs_int(&self.quantum, 2).to_string(),
            classical: sig_figs_int(&self.classical, 2).to_string(),
            speedup: self.speedup(2).to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QueryPrintRow {
    pub k: usize,
    #[serde(rename = "|S_k|")]
    pub group_order: String,
    pub quantum: String,
    pub classical: String,
    pub speedup: String,
}

pub fn query_table(ks: &[usize], m: u64, r: u64) -> Result<Vec<QueryRow>> {
    ks.iter()
        .map(|&k| {
            if k < 2 {
                return Err(Error::InvalidParameter(format!("query table needs k ≥ 2, got {k}")));
            }
            let order = factorial(k);
            let k64 = k as u64;
            Ok(QueryRow {
                k,
                quantum: BigUint::from(m * r * k64 * k64 * ceil_log2(k64)),
                classical: &order * m,
                group_order: order,
            })
        })
        .collect()
}

/// Adjacent `(k, k')` pairs where the speedup crosses one.
pub fn crossovers(rows: &[QueryRow]) -> Vec<(usize, usize)> {
    rows.windows(2).filter(|w| w[0].quantum_wins() != w[1].quantum_wins()).map(|w| (w[0].k, w[1].k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_ten_row() {
        let row = &query_table(&[10], 10, 3).unwrap()[0];
        assert_eq!(row.quantum, BigUint::from(12_000u32));
        assert_eq!(row.classical, BigUint::from(36_288_000u32));
        assert_eq!(row.speedup(4).digits, 3024);
    }

    #[test]
    fn small_k_loses() {
        let rows = query_table(&[3, 4, 5, 6, 7], 10, 3).unwrap();
        assert_eq!(rows[0].printable().speedup, "1.1e-1");
        assert_eq!(crossovers(&rows), vec![(5, 6)]);
        assert!(query_table(&[1], 10, 3).is_err());
    }
}
