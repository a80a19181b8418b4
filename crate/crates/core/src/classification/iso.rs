//! Two independent isomorphism tests for small undirected graphs.
//!
//! [`iso`] refines vertex colours by neighbourhood multisets on both graphs
//! jointly and backtracks by individualizing vertices. [`iso_plain_backtrack`]
//! extends partial maps vertex by vertex, checking only degrees and
//! adjacency to already-mapped vertices.

use std::collections::BTreeMap;

use super::PlainGraph;

/// True iff `map` is a bijection `g → h` preserving adjacency both ways.
pub fn verify_bijection(g: &PlainGraph, h: &PlainGraph, map: &[usize]) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() || map.len() != g.vertex_count() {
        return false;
    }
    let mut hit = vec![false; h.vertex_count()];
    for &w in map {
        if w >= hit.len() || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v]))
}

/// Refines two colourings jointly until stable; colour ids are shared so
/// classes can be compared across the graphs.
fn refine(g: &PlainGraph, h: &PlainGraph, cg: &mut Vec<usize>, ch: &mut Vec<usize>) {
    loop {
        let sig = |graph: &PlainGraph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = graph.neighbours(v).iter().map(|&w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sg: Vec<_> = (0..g.vertex_count()).map(|v| sig(g, cg, v)).collect();
        let sh: Vec<_> = (0..h.vertex_count()).map(|v| sig(h, ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            ids.entry(s.clone()).or_insert(0);
        }
        for (i, v) in ids.values_mut().enumerate() {
            *v = i;
        }
        let before = count_classes(cg, ch);
        *cg = sg.iter().map(|s| ids[s]).collect();
        *ch = sh.iter().map(|s| ids[s]).collect();
        if count_classes(cg, ch) == before {
            return;
        }
    }
}

fn count_classes(cg: &[usize], ch: &[usize]) -> usize {
    let mut all: Vec<usize> = cg.iter().chain(ch.iter()).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &x in c {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

fn search(g: &PlainGraph, h: &PlainGraph, mut cg: Vec<usize>, mut ch: Vec<usize>) -> Option<Vec<usize>> {
    refine(g, h, &mut cg, &mut ch);
    let hg = histogram(&cg);
    if hg != histogram(&ch) {
        return None;
    }
    // Smallest non-singleton class, ties broken by colour id.
    let Some((&colour, _)) = hg.iter().filter(|(_, &n)| n > 1).min_by_key(|(&c, &n)| (n, c)) else {
        let map: Vec<usize> = cg.iter().map(|c| ch.iter().position(|x| x == c).expect("same histogram")).collect();
        return verify_bijection(g, h, &map).then_some(map);
    };
    let fresh = cg.iter().chain(ch.iter()).max().map_or(0, |m| m + 1);
    let v = cg.iter().position(|&c| c == colour).expect("class is present");
    for w in (0..h.vertex_count()).filter(|&w| ch[w] == colour) {
        let (mut cg2, mut ch2) = (cg.clone(), ch.clone());
        cg2[v] = fresh;
        ch2[w] = fresh;
        if let Some(map) = search(g, h, cg2, ch2) {
            return Some(map);
        }
    }
    None
}

/// An isomorphism `g → h` as a vertex map, if one exists.
pub fn iso(g: &PlainGraph, h: &PlainGraph) -> Option<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() || g.degrees() != h.degrees() {
        return None;
    }
    let cg = vec![0; g.vertex_count()];
    let ch = vec![0; h.vertex_count()];
    let map = search(g, h, cg, ch)?;
    assert!(verify_bijection(g, h, &map), "refinement engine produced a non-isomorphism");
    Some(map)
}

/// An isomorphism `g → h` mapping each vertex to one of the same colour.
pub fn iso_coloured(g: &PlainGraph, h: &PlainGraph, cg: &[usize], ch: &[usize]) -> Option<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() || histogram(cg) != histogram(ch) {
        return None;
    }
    let map = search(g, h, cg.to_vec(), ch.to_vec())?;
    assert!(verify_bijection(g, h, &map) && (0..map.len()).all(|v| cg[v] == ch[map[v]]));
    Some(map)
}

/// Vertices of `g` in breadth-first order per component, each component
/// started from a vertex of maximal degree.
fn connected_order(g: &PlainGraph) -> Vec<usize> {
    let mut seen = vec![false; g.vertex_count()];
    let mut order = Vec::new();
    while order.len() < g.vertex_count() {
        let s = (0..g.vertex_count()).filter(|&v| !seen[v]).max_by_key(|&v| (g.degree(v), usize::MAX - v)).unwrap();
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Isomorphism by plain backtracking over degree-compatible partial maps.
pub fn iso_plain_backtrack(g: &PlainGraph, h: &PlainGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() || g.degrees() != h.degrees() {
        return None;
    }
    let order = connected_order(g);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        g: &PlainGraph,
        h: &PlainGraph,
        order: &[usize],
        k: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(&v) = order.get(k) else { return true };
        for w in 0..h.vertex_count() {
            if used[w] || h.degree(w) != g.degree(v) {
                continue;
            }
            let consistent = order[..k].iter().all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(g, h, order, k + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
        false
    }

    if !extend(g, h, &order, 0, &mut map, &mut used) {
        return None;
    }
    assert!(verify_bijection(g, h, &map), "backtracking engine produced a non-isomorphism");
    Some(map)
}
