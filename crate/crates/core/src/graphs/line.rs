use crate::graphs::simple::SimpleGraph;

/// Line graph of `g`. Vertex `e` of the result is the `e`-th edge of
/// `g.edges()` (lexicographic `(min, max)` order); two such vertices are
/// adjacent when the edges share an endpoint.
pub fn build_line_graph(g: &SimpleGraph) -> SimpleGraph {
    let edges = g.edges();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (e, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }
    let mut adj = vec![Vec::new(); edges.len()];
    for star in &incident {
        for (a, &e) in star.iter().enumerate() {
            for &f in &star[a + 1..] {
                adj[e].push(f);
                adj[f].push(e);
            }
        }
    }
    SimpleGraph::from_unsorted(adj)
}
