//! JSON instance documents.
//!
//! ```json
//! {"domain": {"cyclic": 8}, "nodes": 3, "directed": false,
//!  "edges": [{"i": 0, "j": 1, "cost": {"type": "cosine", "weights": [1.0]}}]}
//! ```
//!
//! Cost objects are `table` (`values`), `cosine` (`weights`), `pwl`
//! (`breakpoints` as `[position, value]` pairs, optional `harmonics`) or
//! `class` (`values` as `{cycle_type, value}` entries, or `coefficients` as
//! `{irrep, c}` entries). Dihedral tables list the `C` rotations before the
//! `C` reflections.

use serde_json::{json, Map, Value};

use super::cost::{CostFunction, CostKind};
use super::dihedral::DihedralCost;
use super::graph::Graph;
use super::instance::{Domain, EdgeCost, NetworkInstance};
use crate::error::{Error, Result};
use crate::symmetric::{ClassFunction, Partition};

fn err(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { path: path.into(), message: message.into() }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| err(path, format!("missing field `{key}`")))
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| err(path, "expected an object"))
}

fn uint(v: &Value, path: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| err(path, "expected a non-negative integer"))
}

fn real(v: &Value, path: &str) -> Result<f64> {
    v.as_f64().ok_or_else(|| err(path, "expected a number"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn reals(v: &Value, path: &str) -> Result<Vec<f64>> {
    array(v, path)?.iter().enumerate().map(|(i, x)| real(x, &format!("{path}[{i}]"))).collect()
}

fn partition(v: &Value, path: &str) -> Result<Partition> {
    let parts = array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| uint(x, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts).map_err(|e| err(path, e.to_string()))
}

fn parse_domain(v: &Value) -> Result<Domain> {
    let obj = object(v, "domain")?;
    if obj.len() != 1 {
        return Err(err("domain", "expected exactly one of `cyclic`, `dihedral`, `symmetric`"));
    }
    let (key, val) = obj.iter().next().unwrap();
    let path = format!("domain.{key}");
    let size = uint(val, &path)?;
    let domain = match key.as_str() {
        "cyclic" => Domain::Cyclic(size),
        "dihedral" => Domain::Dihedral(size),
        "symmetric" => Domain::Symmetric(size),
        other => return Err(err("domain", format!("unknown domain `{other}`"))),
    };
    if size < 2 {
        return Err(err(path, "group parameter must be at least 2"));
    }
    Ok(domain)
}

fn parse_cost(v: &Value, domain: Domain, path: &str) -> Result<EdgeCost> {
    let obj = object(v, path)?;
    let kind = field(obj, "type", path)?.as_str().ok_or_else(|| err(format!("{path}.type"), "expected a string"))?;
    let wrap = |e: Error| err(path, e.to_string());
    match (kind, domain) {
        ("table", Domain::Cyclic(c)) => {
            let values = reals(field(obj, "values", path)?, &format!("{path}.values"))?;
            if values.len() != c {
                return Err(err(format!("{path}.values"), format!("expected {c} entries, got {}", values.len())));
            }
            CostFunction::table(values).map(EdgeCost::Cyclic).map_err(wrap)
        }
        ("table", Domain::Dihedral(c)) => {
            let values = reals(field(obj, "values", path)?, &format!("{path}.values"))?;
            DihedralCost::new(c, values).map(EdgeCost::Dihedral).map_err(wrap)
        }
        ("cosine", Domain::Cyclic(c)) => {
            let weights = reals(field(obj, "weights", path)?, &format!("{path}.weights"))?;
            CostFunction::cosine(c, weights).map(EdgeCost::Cyclic).map_err(wrap)
        }
        ("pwl", Domain::Cyclic(c)) => {
            let bp_path = format!("{path}.breakpoints");
            let breakpoints = array(field(obj, "breakpoints", path)?, &bp_path)?
                .iter()
                .enumerate()
                .map(|(i, pair)| {
                    let p = format!("{bp_path}[{i}]");
                    let xs = reals(pair, &p)?;
                    match xs[..] {
                        [pos, val] => Ok((pos, val)),
                        _ => Err(err(p, "expected [position, value]")),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let harmonics = obj.get("harmonics").map(|h| uint(h, &format!("{path}.harmonics"))).transpose()?;
            match harmonics {
                None => CostFunction::pwl(c, breakpoints),
                Some(h) => CostFunction::pwl_truncated(c, breakpoints, h),
            }
            .map(EdgeCost::Cyclic)
            .map_err(wrap)
        }
        ("class", Domain::Symmetric(k)) => {
            if let Some(values) = obj.get("values") {
                let vp = format!("{path}.values");
                let pairs = array(values, &vp)?
                    .iter()
                    .enumerate()
                    .map(|(i, entry)| {
                        let p = format!("{vp}[{i}]");
                        let e = object(entry, &p)?;
                        let ct = partition(field(e, "cycle_type", &p)?, &format!("{p}.cycle_type"))?;
                        let val = real(field(e, "value", &p)?, &format!("{p}.value"))?;
                        Ok((ct, val))
                    })
                    .collect::<Result<Vec<_>>>()?;
                ClassFunction::from_class_values(k, &pairs).map(EdgeCost::Class).map_err(wrap)
            } else if let Some(coeffs) = obj.get("coefficients") {
                let cp = format!("{path}.coefficients");
                let pairs = array(coeffs, &cp)?
                    .iter()
                    .enumerate()
                    .map(|(i, entry)| {
                        let p = format!("{cp}[{i}]");
                        let e = object(entry, &p)?;
                        let irrep = partition(field(e, "irrep", &p)?, &format!("{p}.irrep"))?;
                        let c = real(field(e, "c", &p)?, &format!("{p}.c"))?;
                        Ok((irrep, c))
                    })
                    .collect::<Result<Vec<_>>>()?;
                ClassFunction::from_coefficients(k, &pairs).map(EdgeCost::Class).map_err(wrap)
            } else {
                Err(err(path, "class cost needs `values` or `coefficients`"))
            }
        }
        ("table" | "cosine" | "pwl" | "class", d) => Err(err(format!("{path}.type"), format!("`{kind}` cost is not valid over {d}"))),
        (other, _) => Err(err(format!("{path}.type"), format!("unknown cost type `{other}`"))),
    }
}

pub fn parse_instance(text: &str) -> Result<NetworkInstance> {
    let doc: Value = serde_json::from_str(text).map_err(|e| err("$", e.to_string()))?;
    let root = object(&doc, "$")?;
    let domain = parse_domain(field(root, "domain", "$")?)?;
    let nodes = uint(field(root, "nodes", "$")?, "nodes")?;
    if nodes == 0 {
        return Err(err("nodes", "instance needs at least one node"));
    }
    let directed = match root.get("directed") {
        None => false,
        Some(v) => v.as_bool().ok_or_else(|| err("directed", "expected a boolean"))?,
    };
    let edge_values = array(field(root, "edges", "$")?, "edges")?;
    let mut edges = Vec::with_capacity(edge_values.len());
    let mut costs = Vec::with_capacity(edge_values.len());
    for (idx, ev) in edge_values.iter().enumerate() {
        let path = format!("edges[{idx}]");
        let e = object(ev, &path)?;
        let i = uint(field(e, "i", &path)?, &format!("{path}.i"))?;
        let j = uint(field(e, "j", &path)?, &format!("{path}.j"))?;
        if i == j {
            return Err(err(path, format!("self-loop at node {i}")));
        }
        for node in [i, j] {
            if node >= nodes {
                return Err(err(path, format!("node {node} out of range for {nodes} nodes")));
            }
        }
        costs.push(parse_cost(field(e, "cost", &path)?, domain, &format!("{path}.cost"))?);
        edges.push((i, j));
    }
    let graph = Graph::new(nodes, edges, directed).map_err(|e| err("edges", e.to_string()))?;
    NetworkInstance::new(graph, domain, costs).map_err(|e| err("$", e.to_string()))
}

fn cost_json(cost: &EdgeCost) -> Value {
    match cost {
        EdgeCost::Cyclic(f) => match f.kind() {
            CostKind::Table => json!({"type": "table", "values": f.values()}),
            CostKind::Cosine { weights } => json!({"type": "cosine", "weights": weights}),
            CostKind::Pwl { breakpoints, harmonics } => {
                let bp: Vec<[f64; 2]> = breakpoints.iter().map(|&(p, v)| [p, v]).collect();
                match harmonics {
                    Some(h) => json!({"type": "pwl", "breakpoints": bp, "harmonics": h}),
                    None => json!({"type": "pwl", "breakpoints": bp}),
                }
            }
        },
        EdgeCost::Dihedral(f) => json!({"type": "table", "values": f.values()}),
        EdgeCost::Class(f) => {
            let values: Vec<Value> = f
                .classes()
                .iter()
                .zip(f.values())
                .map(|(p, v)| json!({"cycle_type": p.parts(), "value": v}))
                .collect();
            json!({"type": "class", "values": values})
        }
    }
}

pub fn serialize_instance(instance: &NetworkInstance) -> String {
    let domain = match instance.domain() {
        Domain::Cyclic(c) => json!({"cyclic": c}),
        Domain::Dihedral(c) => json!({"dihedral": c}),
        Domain::Symmetric(k) => json!({"symmetric": k}),
    };
    let edges: Vec<Value> = instance
        .graph()
        .edges()
        .iter()
        .zip(instance.costs())
        .map(|(&(i, j), cost)| json!({"i": i, "j": j, "cost": cost_json(cost)}))
        .collect();
    let doc = json!({
        "domain": domain,
        "nodes": instance.node_count(),
        "directed": instance.graph().is_directed(),
        "edges": edges,
    });
    serde_json::to_string_pretty(&doc).expect("finite values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::topology;
    use crate::symmetric::hamming_cost;

    #[test]
    fn minimal_document() {
        let text = r#"{"domain":{"cyclic":4},"nodes":2,"edges":[{"i":0,"j":1,"cost":{"type":"table","values":[0,1,2,3]}}]}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!((inst.node_count(), inst.edge_count()), (2, 1));
    }

    #[test]
    fn round_trips() {
        let tri = topology::complete(3);
        let f = CostFunction::table(vec![1.0, -1.0]).unwrap();
        let inst = NetworkInstance::cyclic(tri, vec![f.clone(), f.clone(), f]).unwrap();
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);

        let ring = topology::ring(4);
        let costs = vec![
            CostFunction::cosine(8, vec![0.3, 1.7]).unwrap(),
            CostFunction::pwl(8, vec![(0.0, 1.0), (3.5, -0.25)]).unwrap(),
            CostFunction::pwl_truncated(8, vec![(0.0, 1.0), (4.0, 0.0)], 2).unwrap(),
            CostFunction::table((0..8).map(|x| (x as f64).sqrt()).collect()).unwrap(),
        ];
        let inst = NetworkInstance::cyclic(ring, costs).unwrap();
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);

        let g = Graph::undirected(2, vec![(0, 1)]).unwrap();
        let inst = NetworkInstance::symmetric(g, 4, vec![hamming_cost(4).unwrap()]).unwrap();
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn errors_name_the_field() {
        let self_loop = r#"{"domain":{"cyclic":2},"nodes":2,"edges":[{"i":0,"j":1,"cost":{"type":"table","values":[1,-1]}},{"i":1,"j":1,"cost":{"type":"table","values":[1,-1]}}]}"#;
        match parse_instance(self_loop) {
            Err(Error::Parse { path, message }) => {
                assert_eq!(path, "edges[1]");
                assert!(message.contains("self-loop"));
            }
            other => panic!("{other:?}"),
        }
        let bad_weight = r#"{"domain":{"cyclic":8},"nodes":2,"edges":[{"i":0,"j":1,"cost":{"type":"cosine","weights":[-1]}}]}"#;
        assert!(matches!(parse_instance(bad_weight), Err(Error::Parse { path, .. }) if path == "edges[0].cost"));
        assert!(parse_instance("{").is_err());
        assert!(parse_instance(r#"{"domain":{"cyclic":2},"nodes":0,"edges":[]}"#).is_err());
    }

    #[test]
    fn class_coefficient_form() {
        let text = r#"{"domain":{"symmetric":3},"nodes":2,"edges":[{"i":0,"j":1,"cost":{"type":"class","coefficients":[{"irrep":[3],"c":2},{"irrep":[2,1],"c":-1}]}}]}"#;
        let inst = parse_instance(text).unwrap();
        let f = inst.class_costs().unwrap()[0];
        assert_eq!(f.values(), hamming_cost(3).unwrap().values());
    }
}
