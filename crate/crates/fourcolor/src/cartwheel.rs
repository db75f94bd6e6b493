//! Cartwheels: degree-decorated second neighborhoods, their extraction from
//! triangulations, and the hub charge computed inside the cartwheel alone.

use crate::graph::{second_neighborhood, RotationGraph};
use crate::part::{Cartwheel, PartVertex};
use crate::rules::{rule_image_count, DischargingRule};

fn second_neighborhood_well_behaved(t: &RotationGraph, v: usize) -> bool {
    second_neighborhood(t, v).map(|nb| nb.well_behaved).unwrap_or(false)
}

#[derive(Debug, thiserror::Error)]
pub enum CartwheelError {
    #[error("second neighborhood of vertex {0} is not well-behaved")]
    NotWellBehaved(usize),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("cartwheel structure broken at vertex {0}")]
    Malformed(usize),
}

/// Extract the cartwheel appearing with hub `v`: spokes in rotation order,
/// labels recording ambient degrees. Fails when the second neighborhood is
/// not well-behaved.
pub fn extract_cartwheel(t: &RotationGraph, v: usize) -> Result<Cartwheel, CartwheelError> {
    if v >= t.vertex_count() {
        return Err(CartwheelError::NoSuchVertex(v));
    }
    if !second_neighborhood_well_behaved(t, v) {
        return Err(CartwheelError::NotWellBehaved(v));
    }
    // Orient so that around each spoke the vertex after the hub is the
    // previous spoke, matching the part-graph convention.
    let oriented;
    let t = {
        let spokes = t.neighbors(v);
        let d = spokes.len();
        let s0 = spokes[0];
        let rot0 = t.neighbors(s0);
        let at = rot0.iter().position(|&x| x == v).ok_or(CartwheelError::Malformed(v))?;
        let after = rot0[(at + 1) % rot0.len()];
        if after == spokes[d - 1] {
            t
        } else if after == spokes[1 % d] {
            oriented = t.reflected();
            &oriented
        } else {
            return Err(CartwheelError::Malformed(s0));
        }
    };
    let spokes: Vec<usize> = t.neighbors(v).to_vec();
    let d = spokes.len();
    let deg = |u: usize| t.degree(u) as u32;
    let mut hat_labels = Vec::with_capacity(d);
    let mut fan_labels = Vec::with_capacity(d);
    for k in 0..d {
        let sk = spokes[k];
        let rot = t.neighbors(sk);
        let g = rot.len();
        let at = rot.iter().position(|&x| x == v).unwrap();
        // rotation around a spoke: v, prev spoke, hat below, fans, hat
        // above, next spoke
        let prev = rot[(at + 1) % g];
        let next = rot[(at + g - 1) % g];
        if prev != spokes[(k + d - 1) % d] || next != spokes[(k + 1) % d] {
            return Err(CartwheelError::Malformed(sk));
        }
        let hat_above = rot[(at + g - 2) % g];
        let fans: Vec<u32> = (3..g - 2).map(|s| deg(rot[(at + s) % g])).collect();
        hat_labels.push(deg(hat_above));
        if fans.len() != g - 5 {
            return Err(CartwheelError::Malformed(sk));
        }
        fan_labels.push(fans);
    }
    let spoke_degrees = spokes.iter().map(|&s| deg(s)).collect();
    Ok(Cartwheel::new(spoke_degrees, hat_labels, fan_labels))
}

/// Charge of the cartwheel hub in tenths: 10(6 - d) - outflow + inflow,
/// with rule appearances judged against the cartwheel's promised labels.
pub fn cartwheel_charge(w: &Cartwheel, rules: &[DischargingRule]) -> i64 {
    let d = w.hub_degree();
    let (graph, desc, labels) = w.graph();
    let hub = 0usize;
    let mut charge = 10 * (6 - d as i64);
    for (i, &pv) in desc.iter().enumerate() {
        if !matches!(pv, PartVertex::Spoke(_)) {
            continue;
        }
        for rule in rules {
            charge -= rule.q * rule_image_count(rule, &graph, &labels, hub, i) as i64;
            charge += rule.q * rule_image_count(rule, &graph, &labels, i, hub) as i64;
        }
    }
    charge
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::shapes::{icosahedron, octahedron};
    use crate::rules::known::{double_triangle_rule, edge_rule, triangle_rule};
    use crate::rules::vertex_charge;

    #[test]
    fn icosahedron_cartwheel_is_all_fives() {
        let g = icosahedron();
        let w = extract_cartwheel(&g, 0).unwrap();
        assert_eq!(w.hub_degree(), 5);
        assert_eq!(w.spoke_degrees, vec![5; 5]);
        assert_eq!(w.hat_labels, vec![5; 5]);
        assert!(w.fan_labels.iter().all(|f| f.is_empty()));
        assert_eq!(cartwheel_charge(&w, &[]), 10);
    }

    #[test]
    fn octahedron_vertex_fails_extraction() {
        let g = octahedron();
        assert!(matches!(extract_cartwheel(&g, 0), Err(CartwheelError::NotWellBehaved(0))));
    }

    #[test]
    fn hub_charge_matches_triangulation_charge() {
        let g = icosahedron();
        let rule_sets = [
            vec![],
            vec![triangle_rule(1)],
            vec![triangle_rule(2), edge_rule(1, 5, Some(5), 6, None), double_triangle_rule(1)],
        ];
        for rules in &rule_sets {
            for v in 0..g.vertex_count() {
                let w = extract_cartwheel(&g, v).unwrap();
                assert_eq!(
                    cartwheel_charge(&w, rules),
                    vertex_charge(&g, v, rules),
                    "vertex {v}"
                );
            }
        }
    }

    #[test]
    fn charge_is_reembedding_invariant() {
        let g = icosahedron();
        let w = extract_cartwheel(&g, 3).unwrap();
        let rules = vec![triangle_rule(1)];
        let c1 = cartwheel_charge(&w, &rules);
        let c2 = cartwheel_charge(&w, &rules);
        assert_eq!(c1, c2);
    }
}
