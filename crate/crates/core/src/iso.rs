//! Isomorphism testing for small graphs: joint colour refinement on both
//! graphs, then individualise-and-refine backtracking.

use std::collections::BTreeMap;

use crate::graph::{Graph, GraphError};

pub const ISOMORPHISM_VERTEX_LIMIT: usize = 20;

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    for graph in [g, h] {
        if graph.vertex_count() > ISOMORPHISM_VERTEX_LIMIT {
            return Err(GraphError::SizeLimitExceeded {
                limit: ISOMORPHISM_VERTEX_LIMIT,
                got: graph.vertex_count(),
            });
        }
    }
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    let n = g.vertex_count();
    let Some((cg, ch)) = refine(g, h, vec![0; n], vec![0; n]) else {
        return Ok(false);
    };
    Ok(search(g, h, cg, ch))
}

/// Refines both colourings with the same signature table so colours stay
/// comparable. Returns `None` once the colour histograms diverge.
fn refine(
    g: &Graph,
    h: &Graph,
    mut cg: Vec<u32>,
    mut ch: Vec<u32>,
) -> Option<(Vec<u32>, Vec<u32>)> {
    let classes = |c: &[u32]| c.iter().copied().max().map_or(0, |x| x + 1);
    loop {
        let before = classes(&cg);
        let signature = |graph: &Graph, colours: &[u32], v: usize| {
            let mut around: Vec<u32> = graph.neighbors(v).iter().map(|&w| colours[w]).collect();
            around.sort_unstable();
            (colours[v], around)
        };
        let sg: Vec<_> = (0..g.vertex_count())
            .map(|v| signature(g, &cg, v))
            .collect();
        let sh: Vec<_> = (0..h.vertex_count())
            .map(|v| signature(h, &ch, v))
            .collect();
        let mut table: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            table.entry(s).or_insert(0);
        }
        for (i, id) in table.values_mut().enumerate() {
            *id = i as u32;
        }
        cg = sg.iter().map(|s| table[s]).collect();
        ch = sh.iter().map(|s| table[s]).collect();
        if histogram(&cg) != histogram(&ch) {
            return None;
        }
        if classes(&cg) == before {
            return Some((cg, ch));
        }
    }
}

fn histogram(colours: &[u32]) -> BTreeMap<u32, usize> {
    let mut counts = BTreeMap::new();
    for &c in colours {
        *counts.entry(c).or_insert(0) += 1;
    }
    counts
}

fn search(g: &Graph, h: &Graph, cg: Vec<u32>, ch: Vec<u32>) -> bool {
    let counts = histogram(&cg);
    let target = counts
        .iter()
        .filter(|(_, &size)| size > 1)
        .min_by_key(|(_, &size)| size)
        .map(|(&colour, _)| colour);
    let Some(colour) = target else {
        // discrete colouring: the bijection is forced
        let mut image = vec![0; g.vertex_count()];
        for (u, &c) in cg.iter().enumerate() {
            image[u] = ch.iter().position(|&d| d == c).expect("histograms match");
        }
        return g
            .edges()
            .iter()
            .all(|&(u, v)| h.has_edge(image[u], image[v]));
    };
    let fresh = cg.iter().copied().max().unwrap_or(0) + 1;
    let u = cg
        .iter()
        .position(|&c| c == colour)
        .expect("colour present");
    for v in (0..h.vertex_count()).filter(|&v| ch[v] == colour) {
        let mut ng = cg.clone();
        let mut nh = ch.clone();
        ng[u] = fresh;
        nh[v] = fresh;
        if let Some((rg, rh)) = refine(g, h, ng, nh) {
            if search(g, h, rg, rh) {
                return true;
            }
        }
    }
    false
}
