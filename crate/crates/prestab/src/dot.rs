//! DOT export: the strict order pairs as a directed graph, with clopen
//! components rendered as subgraph clusters. Output is byte-stable.

use crate::preord::Preorder;

fn node_id(p: &Preorder, i: usize) -> String {
    let name = p.carrier().name(i);
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot(p: &Preorder) -> String {
    let mut out = String::from("digraph preorder {\n");
    for (k, block) in p.clopen_components().blocks().iter().enumerate() {
        out.push_str(&format!("  subgraph cluster_{k} {{\n"));
        for i in block.indices() {
            out.push_str(&format!("    {};\n", node_id(p, i)));
        }
        out.push_str("  }\n");
    }
    for (a, b) in p.rel().pairs() {
        if a != b {
            out.push_str(&format!("  {} -> {};\n", node_id(p, a), node_id(p, b)));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_two_has_isolated_nodes() {
        let p = Preorder::discrete(2).unwrap();
        let dot = export_dot(&p);
        assert_eq!(
            dot,
            "digraph preorder {\n  subgraph cluster_0 {\n    \"0\";\n  }\n  subgraph cluster_1 {\n    \"1\";\n  }\n}\n"
        );
    }

    #[test]
    fn arrow_has_one_edge() {
        let p = Preorder::generated(2, &[(0, 1)]).unwrap();
        let dot = export_dot(&p);
        assert!(dot.contains("\"0\" -> \"1\";"));
        assert!(!dot.contains("\"1\" -> \"0\";"));
    }

    #[test]
    fn clusters_follow_components() {
        let p = Preorder::generated(3, &[(0, 1)]).unwrap();
        let dot = export_dot(&p);
        assert_eq!(
            dot,
            "digraph preorder {\n  subgraph cluster_0 {\n    \"0\";\n    \"1\";\n  }\n  subgraph cluster_1 {\n    \"2\";\n  }\n  \"0\" -> \"1\";\n}\n"
        );
    }
}
