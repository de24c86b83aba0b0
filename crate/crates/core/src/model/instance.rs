use std::fmt;

use super::cost::CostFunction;
use super::dihedral::{DihedralCost, DihedralElement};
use super::graph::Graph;
use crate::error::{Error, Result};
use crate::symmetric::{ClassFunction, Permutation};

/// Group the node variables live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
}

impl Domain {
    pub fn order_param(self) -> usize {
        match self {
            Domain::Cyclic(c) | Domain::Dihedral(c) | Domain::Symmetric(c) => c,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Cyclic(c) => write!(f, "Z_{c}"),
            Domain::Dihedral(c) => write!(f, "D_{c}"),
            Domain::Symmetric(k) => write!(f, "S_{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum EdgeCost {
    Cyclic(CostFunction),
    Dihedral(DihedralCost),
    Class(ClassFunction),
}

impl EdgeCost {
    fn fits(&self, domain: Domain) -> bool {
        match (self, domain) {
            (EdgeCost::Cyclic(f), Domain::Cyclic(c)) => f.cycle() == c,
            (EdgeCost::Dihedral(f), Domain::Dihedral(c)) => f.cycle() == c,
            (EdgeCost::Class(f), Domain::Symmetric(k)) => f.k() == k,
            _ => false,
        }
    }

    fn describe(&self) -> String {
        match self {
            EdgeCost::Cyclic(f) => format!("Z_{} cost", f.cycle()),
            EdgeCost::Dihedral(f) => format!("D_{} cost", f.cycle()),
            EdgeCost::Class(f) => format!("S_{} class function", f.k()),
        }
    }

    pub fn min_value(&self) -> f64 {
        match self {
            EdgeCost::Cyclic(f) => f.min_value(),
            EdgeCost::Dihedral(f) => f.values().iter().copied().fold(f64::INFINITY, f64::min),
            EdgeCost::Class(f) => f.min_value(),
        }
    }

    pub fn max_value(&self) -> f64 {
        match self {
            EdgeCost::Cyclic(f) => f.max_value(),
            EdgeCost::Dihedral(f) => f.values().iter().copied().fold(f64::NEG_INFINITY, f64::max),
            EdgeCost::Class(f) => f.max_value(),
        }
    }
}

/// Per-node group elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Assignment {
    Cyclic(Vec<usize>),
    Dihedral(Vec<DihedralElement>),
    Symmetric(Vec<Permutation>),
}

impl Assignment {
    pub fn len(&self) -> usize {
        match self {
            Assignment::Cyclic(v) => v.len(),
            Assignment::Dihedral(v) => v.len(),
            Assignment::Symmetric(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_cyclic(&self) -> Option<&[usize]> {
        match self {
            Assignment::Cyclic(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_symmetric(&self) -> Option<&[Permutation]> {
        match self {
            Assignment::Symmetric(v) => Some(v),
            _ => None,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Assignment::Cyclic(_) => "cyclic assignment",
            Assignment::Dihedral(_) => "dihedral assignment",
            Assignment::Symmetric(_) => "permutation assignment",
        }
    }
}

/// A graph whose edges all carry a cost over one group.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkInstance {
    graph: Graph,
    domain: Domain,
    costs: Vec<EdgeCost>,
}

impl NetworkInstance {
    pub fn new(graph: Graph, domain: Domain, costs: Vec<EdgeCost>) -> Result<Self> {
        let size = domain.order_param();
        if size < 2 {
            return Err(Error::InvalidGraph(format!("group parameter of {domain} must be at least 2")));
        }
        if matches!(domain, Domain::Cyclic(_)) && graph.is_directed() {
            return Err(Error::InvalidGraph(
                "cyclic instances are undirected; use the dihedral domain for direction-dependent costs".into(),
            ));
        }
        if costs.len() != graph.edge_count() {
            return Err(Error::InvalidGraph(format!(
                "{} edges but {} cost functions",
                graph.edge_count(),
                costs.len()
            )));
        }
        if let Some(e) = costs.iter().position(|c| !c.fits(domain)) {
            return Err(Error::DomainMismatch { expected: format!("{domain} cost on edge {e}"), found: costs[e].describe() });
        }
        Ok(NetworkInstance { graph, domain, costs })
    }

    pub fn cyclic(graph: Graph, costs: Vec<CostFunction>) -> Result<Self> {
        let c = costs.first().map_or(2, CostFunction::cycle);
        Self::new(graph, Domain::Cyclic(c), costs.into_iter().map(EdgeCost::Cyclic).collect())
    }

    pub fn symmetric(graph: Graph, k: usize, costs: Vec<ClassFunction>) -> Result<Self> {
        Self::new(graph, Domain::Symmetric(k), costs.into_iter().map(EdgeCost::Class).collect())
    }

    pub fn dihedral(graph: Graph, cycle: usize, costs: Vec<DihedralCost>) -> Result<Self> {
        Self::new(graph, Domain::Dihedral(cycle), costs.into_iter().map(EdgeCost::Dihedral).collect())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn costs(&self) -> &[EdgeCost] {
        &self.costs
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Cycle length `C` for cyclic instances.
    pub fn cycle(&self) -> Result<usize> {
        match self.domain {
            Domain::Cyclic(c) => Ok(c),
            other => Err(Error::DomainMismatch { expected: "cyclic instance".into(), found: other.to_string() }),
        }
    }

    pub fn cyclic_costs(&self) -> Result<Vec<&CostFunction>> {
        self.cycle()?;
        Ok(self
            .costs
            .iter()
            .map(|c| match c {
                EdgeCost::Cyclic(f) => f,
                _ => unreachable!("validated at construction"),
            })
            .collect())
    }

    pub fn class_costs(&self) -> Result<Vec<&ClassFunction>> {
        match self.domain {
            Domain::Symmetric(_) => Ok(self
                .costs
                .iter()
                .map(|c| match c {
                    EdgeCost::Class(f) => f,
                    _ => unreachable!("validated at construction"),
                })
                .collect()),
            other => Err(Error::DomainMismatch { expected: "symmetric instance".into(), found: other.to_string() }),
        }
    }

    /// `H = Σ_e f_e(rel(x_i, x_j))` with the relative element `μ_i − μ_j`
    /// (cyclic), `g_i·g_j⁻¹` (dihedral) or `σ_i⁻¹·σ_j` (symmetric).
    pub fn eval_cost(&self, assignment: &Assignment) -> Result<f64> {
        let n = self.node_count();
        let mismatch = || Error::DomainMismatch { expected: format!("{} assignment", self.domain), found: assignment.kind().into() };
        if assignment.len() != n {
            return Err(Error::InvalidGraph(format!("assignment has {} entries for {n} nodes", assignment.len())));
        }
        let edges = self.graph.edges();
        match (self.domain, assignment) {
            (Domain::Cyclic(c), Assignment::Cyclic(mu)) => {
                if let Some(&bad) = mu.iter().find(|&&x| x >= c) {
                    return Err(Error::NodeOutOfRange { node: bad, nodes: c });
                }
                Ok(edges
                    .iter()
                    .zip(&self.costs)
                    .map(|(&(i, j), cost)| match cost {
                        EdgeCost::Cyclic(f) => f.eval((mu[i] + c - mu[j]) % c),
                        _ => unreachable!(),
                    })
                    .sum())
            }
            (Domain::Dihedral(c), Assignment::Dihedral(g)) => {
                if let Some(bad) = g.iter().find(|x| !x.is_valid(c)) {
                    return Err(Error::NodeOutOfRange { node: bad.rotation, nodes: c });
                }
                Ok(edges
                    .iter()
                    .zip(&self.costs)
                    .map(|(&(i, j), cost)| match cost {
                        EdgeCost::Dihedral(f) => f.eval(g[i].compose(g[j].inverse(c), c)),
                        _ => unreachable!(),
                    })
                    .sum())
            }
            (Domain::Symmetric(k), Assignment::Symmetric(s)) => {
                if let Some(bad) = s.iter().find(|p| p.degree() != k) {
                    return Err(Error::PartitionMismatch(k, bad.degree()));
                }
                Ok(edges
                    .iter()
                    .zip(&self.costs)
                    .map(|(&(i, j), cost)| match cost {
                        EdgeCost::Class(f) => f.eval(&s[i].inverse().compose(&s[j])),
                        _ => unreachable!(),
                    })
                    .sum())
            }
            _ => Err(mismatch()),
        }
    }
}
