//! Witness and report JSON.
//!
//! ```json
//! {"type": "path", "vertices": [0, 1, 2]}
//! {"type": "bipartite", "kind": "complete", "X": [0], "Y": [1, 2]}
//! {"type": "homogeneous", "kind": "stable", "vertices": [3, 4], "epsilon": "1/10", "edge_count": 0}
//! {"type": "embedding", "pattern": "P4", "pattern_graph6": "Ch", "map": [0, 1, 2, 3]}
//! ```
//!
//! Reports wrap the witness under `"witness"`; [`parse_witness`] accepts
//! either form.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::certificates::{
    BipartitePairWitness, HomogeneousKind, HomogeneousSetWitness, InducedPathWitness, PairKind,
    PatternEmbedding, Witness,
};
use crate::error::Result;
use crate::exact::{format_ratio, serde_ratio, Ratio};
use crate::io::graph6::{decode_graph6, encode_graph6};
use crate::pipeline::{EhOutcome, EhReport, ExtractionReport, GuaranteeTier, PipelineConstants, Route};

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum Wire {
    Path {
        vertices: Vec<usize>,
    },
    Bipartite {
        kind: WirePair,
        #[serde(rename = "X")]
        x: Vec<usize>,
        #[serde(rename = "Y")]
        y: Vec<usize>,
    },
    Homogeneous {
        kind: WireHomogeneous,
        vertices: Vec<usize>,
        #[serde(with = "serde_ratio")]
        epsilon: Ratio,
        edge_count: u64,
    },
    Embedding {
        pattern: String,
        pattern_graph6: String,
        map: Vec<usize>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum WirePair {
    Empty,
    Complete,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum WireHomogeneous {
    Stable,
    Clique,
}

fn to_wire(w: &Witness) -> Result<Wire> {
    Ok(match w {
        Witness::Path(p) => Wire::Path { vertices: p.vertices.clone() },
        Witness::Bipartite(b) => Wire::Bipartite {
            kind: match b.kind {
                PairKind::Empty => WirePair::Empty,
                PairKind::Complete => WirePair::Complete,
            },
            x: b.x.clone(),
            y: b.y.clone(),
        },
        Witness::Homogeneous(h) => Wire::Homogeneous {
            kind: match h.kind {
                HomogeneousKind::Stable => WireHomogeneous::Stable,
                HomogeneousKind::Clique => WireHomogeneous::Clique,
            },
            vertices: h.vertices.clone(),
            epsilon: h.epsilon,
            edge_count: h.edge_count,
        },
        Witness::Embedding(e) => Wire::Embedding {
            pattern: e.name.clone(),
            pattern_graph6: encode_graph6(&e.pattern)?,
            map: e.map.clone(),
        },
    })
}

fn from_wire(w: Wire) -> Result<Witness> {
    Ok(match w {
        Wire::Path { vertices } => Witness::Path(InducedPathWitness { vertices }),
        Wire::Bipartite { kind, x, y } => Witness::Bipartite(BipartitePairWitness {
            kind: match kind {
                WirePair::Empty => PairKind::Empty,
                WirePair::Complete => PairKind::Complete,
            },
            x,
            y,
        }),
        Wire::Homogeneous { kind, vertices, epsilon, edge_count } => {
            Witness::Homogeneous(HomogeneousSetWitness {
                kind: match kind {
                    WireHomogeneous::Stable => HomogeneousKind::Stable,
                    WireHomogeneous::Clique => HomogeneousKind::Clique,
                },
                vertices,
                epsilon,
                edge_count,
            })
        }
        Wire::Embedding { pattern, pattern_graph6, map } => Witness::Embedding(PatternEmbedding {
            name: pattern,
            pattern: decode_graph6(&pattern_graph6)?,
            map,
        }),
    })
}

pub fn witness_to_value(w: &Witness) -> Result<Value> {
    Ok(serde_json::to_value(to_wire(w)?)?)
}

pub fn witness_from_value(v: Value) -> Result<Witness> {
    from_wire(serde_json::from_value(v)?)
}

pub fn witness_to_json(w: &Witness) -> Result<String> {
    Ok(serde_json::to_string_pretty(&witness_to_value(w)?)?)
}

/// Reads a bare witness object or any object with a `"witness"` field.
pub fn parse_witness(text: &str) -> Result<Witness> {
    let v: Value = serde_json::from_str(text)?;
    match v {
        Value::Object(mut m) if !m.contains_key("type") && m.contains_key("witness") => {
            witness_from_value(m.remove("witness").expect("checked"))
        }
        v => witness_from_value(v),
    }
}

pub fn constants_to_value(c: &PipelineConstants) -> Value {
    json!({
        "k": c.k,
        "epsilon": format_ratio(c.epsilon),
        "c": format_ratio(c.c),
        "delta_log2": c.delta.symbolic_exponent(),
        "delta_log2_value": c.delta.exponent(),
        "c_k": c.c_k_symbolic(),
        "c_k_log2": c.log2_c_k(),
        "c_prime": c.c_prime(),
        "path_bound": format_ratio(c.path_bound()),
    })
}

pub fn report_to_value(r: &ExtractionReport) -> Result<Value> {
    let (tier, side) = match r.tier {
        GuaranteeTier::Linear { side } => ("linear", Some(side)),
        GuaranteeTier::Forbidden => ("forbidden", None),
        GuaranteeTier::Fallback => ("fallback", None),
    };
    let t = &r.trace;
    let steps: Vec<Value> = t
        .extractor
        .iter()
        .map(|s| {
            json!({
                "kind": format!("{:?}", s.kind),
                "n": s.n,
                "outside": s.outside,
                "largest_component": s.largest_component,
            })
        })
        .collect();
    Ok(json!({
        "n": r.n,
        "outcome": r.outcome.as_str(),
        "tier": tier,
        "guaranteed_side": side,
        "complemented": r.complemented,
        "constants": constants_to_value(&r.constants),
        "trace": {
            "precheck_found": t.precheck,
            "homogeneous_target": t.homogeneous_target,
            "homogeneous": t.homogeneous.map(|(k, s)| json!({"kind": k.as_str(), "size": s})),
            "pruned": t.pruned,
            "side_target": t.side_target,
            "degree_bound": t.degree_bound,
            "components": t.components,
            "route": t.route.map(|r| match r {
                Route::Connected => "connected",
                Route::ComponentSplit => "component-split",
                Route::LargestComponent => "largest-component",
            }),
            "extractor": steps,
            "path_len": t.path_len,
        },
        "witness": witness_to_value(&r.witness)?,
    }))
}

pub fn eh_report_to_value(r: &EhReport) -> Result<Value> {
    let (outcome, witness) = match &r.outcome {
        EhOutcome::Homogeneous(h) => ("homogeneous", Witness::Homogeneous(h.clone())),
        EhOutcome::Certificate(e) => ("pattern-certificate", Witness::Embedding(e.clone())),
    };
    Ok(json!({
        "n": r.n,
        "outcome": outcome,
        "constants": constants_to_value(&r.constants),
        "cograph_size": r.cograph_size,
        "depth": r.depth,
        "bound": r.bound,
        "witness": witness_to_value(&witness)?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::patterns::path_graph;

    fn round_trip(w: Witness) {
        let text = witness_to_json(&w).unwrap();
        assert_eq!(parse_witness(&text).unwrap(), w);
        let wrapped = format!("{{\"witness\": {text}, \"n\": 3}}");
        assert_eq!(parse_witness(&wrapped).unwrap(), w);
    }

    #[test]
    fn all_types_round_trip() {
        round_trip(Witness::Path(InducedPathWitness { vertices: vec![2, 0, 1] }));
        round_trip(Witness::Bipartite(BipartitePairWitness {
            kind: PairKind::Complete,
            x: vec![0],
            y: vec![1, 2],
        }));
        round_trip(Witness::Homogeneous(HomogeneousSetWitness {
            kind: HomogeneousKind::Stable,
            vertices: vec![3, 4],
            epsilon: Ratio::new(1, 10),
            edge_count: 0,
        }));
        round_trip(Witness::Embedding(PatternEmbedding {
            name: "P4".into(),
            pattern: path_graph(4),
            map: vec![0, 1, 2, 3],
        }));
    }

    #[test]
    fn field_names() {
        let w = Witness::Homogeneous(HomogeneousSetWitness {
            kind: HomogeneousKind::Clique,
            vertices: vec![0, 1],
            epsilon: Ratio::new(2, 4),
            edge_count: 1,
        });
        let v = witness_to_value(&w).unwrap();
        assert_eq!(
            v,
            json!({"type": "homogeneous", "kind": "clique", "vertices": [0, 1], "epsilon": "1/2", "edge_count": 1})
        );
        let b = parse_witness(r#"{"type":"bipartite","kind":"empty","X":[0],"Y":[2]}"#).unwrap();
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(b.verify(&g).is_ok());
    }

    #[test]
    fn rejects_bad_json() {
        assert!(parse_witness(r#"{"type":"triangle"}"#).is_err());
        assert!(parse_witness(r#"{"type":"path","vertices":[-1]}"#).is_err());
        assert!(parse_witness(r#"{"type":"homogeneous","kind":"stable","vertices":[0],"epsilon":"1/0","edge_count":0}"#).is_err());
        assert!(parse_witness("not json").is_err());
    }
}
