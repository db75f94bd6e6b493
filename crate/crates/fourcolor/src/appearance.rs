//! Configuration appearance: exact-degree embeddings of a configuration
//! into parts, cartwheels, and triangulations.

use crate::appear::{find_embeddings, Embedding};
use crate::config::Configuration;
use crate::graph::RotationGraph;
use crate::part::{Cartwheel, Interval, Part, PartVertex};

/// Embeddings of G(K) into a labeled host where every image vertex carries
/// exactly gamma.
pub fn appearances_in_labeled(
    k: &Configuration,
    host: &RotationGraph,
    labels: &[u32],
) -> Vec<Embedding> {
    let ok = |p: usize, h: usize| labels[h] == k.gamma[p];
    find_embeddings(&k.graph, host, &ok, &[])
}

/// Does the configuration appear in the triangulation (ambient degrees play
/// the role of gamma)?
pub fn appears_in_triangulation(k: &Configuration, t: &RotationGraph) -> bool {
    let labels: Vec<u32> = (0..t.vertex_count()).map(|v| t.degree(v) as u32).collect();
    !appearances_in_labeled(k, t, &labels).is_empty()
}

/// Does the configuration appear in the cartwheel?
pub fn appears_in_cartwheel(k: &Configuration, w: &Cartwheel) -> bool {
    let (graph, _, labels) = w.graph();
    !appearances_in_labeled(k, &graph, &labels).is_empty()
}

/// Well-positioned appearance in a part: an embedding onto vertices pinned
/// at exactly gamma such that whenever both hats adjacent to a spoke are in
/// the image, the spoke is too.
pub fn well_positioned_appearance(k: &Configuration, part: &Part) -> bool {
    let (graph, desc) = part.part_graph();
    let ok = |p: usize, h: usize| {
        part.interval(desc[h]).is_some_and(|iv| iv == Interval::exact(k.gamma[p]))
    };
    let maps = find_embeddings(&k.graph, &graph, &ok, &[]);
    maps.iter().any(|m| well_positioned(part, &desc, m))
}

fn well_positioned(part: &Part, desc: &[PartVertex], map: &Embedding) -> bool {
    let d = part.hub_degree();
    let image: std::collections::HashSet<PartVertex> = map.iter().map(|&h| desc[h]).collect();
    for k in 0..d {
        let below = PartVertex::Hat((k + d - 1) % d);
        let above = PartVertex::Hat(k);
        if image.contains(&below) && image.contains(&above) && !image.contains(&PartVertex::Spoke(k)) {
            return false;
        }
    }
    true
}
