use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::automorphisms::action::{is_automorphism, InducedAction};
use crate::error::{Error, Result};
use crate::graphs::SimpleGraph;

/// What the group acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitTarget {
    Vertices,
    Edges,
    /// Ordered pairs `(u, v)` with `uv` an edge; each edge gives two arcs.
    Arcs,
}

impl FromStr for OrbitTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertices" => Ok(OrbitTarget::Vertices),
            "edges" => Ok(OrbitTarget::Edges),
            "arcs" => Ok(OrbitTarget::Arcs),
            other => Err(Error::InvalidParams(format!("unknown orbit target {other:?}"))),
        }
    }
}

impl fmt::Display for OrbitTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitTarget::Vertices => "vertices",
            OrbitTarget::Edges => "edges",
            OrbitTarget::Arcs => "arcs",
        })
    }
}

struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), sets: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.sets -= 1;
        }
    }
}

/// Number of orbits of the group generated by `generators` on vertices,
/// edges or arcs of `g`.
///
/// Orbits of a generated group are the connected components of the graph
/// joining each object to its image under each generator, so one pass of
/// union-find over (object, generator) suffices.
pub fn orbit_count(g: &SimpleGraph, generators: &[InducedAction], on: OrbitTarget) -> Result<usize> {
    for (i, a) in generators.iter().enumerate() {
        if !is_automorphism(g, a)? {
            return Err(Error::NotAnAutomorphism(i));
        }
    }
    let uf = match on {
        OrbitTarget::Vertices => {
            let mut uf = UnionFind::new(g.vertex_count());
            for a in generators {
                for v in 0..g.vertex_count() {
                    uf.union(v, a.apply(v));
                }
            }
            uf
        }
        OrbitTarget::Edges => {
            let edges = g.edges();
            let id: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
            let mut uf = UnionFind::new(edges.len());
            for a in generators {
                for (i, &(u, v)) in edges.iter().enumerate() {
                    let (x, y) = (a.apply(u), a.apply(v));
                    uf.union(i, id[&(x.min(y), x.max(y))]);
                }
            }
            uf
        }
        OrbitTarget::Arcs => {
            let arcs: Vec<(usize, usize)> = g.edges().into_iter().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
            let id: HashMap<(usize, usize), usize> = arcs.iter().enumerate().map(|(i, &e)| (e, i)).collect();
            let mut uf = UnionFind::new(arcs.len());
            for a in generators {
                for (i, &(u, v)) in arcs.iter().enumerate() {
                    uf.union(i, id[&(a.apply(u), a.apply(v))]);
                }
            }
            uf
        }
    };
    Ok(uf.sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphisms::action::Provenance;
    use crate::automorphisms::group::aut_group;
    use crate::graphs::{build_inclusion_graph, GraphParams};

    fn count(n: u32, k: u32, l: u32, on: OrbitTarget) -> usize {
        let p = GraphParams::new(n, k, l).unwrap();
        let g = build_inclusion_graph(p).unwrap();
        let gens = aut_group(p).unwrap().generator_actions().unwrap();
        orbit_count(g.graph(), &gens, on).unwrap()
    }

    #[test]
    fn orbit_counts_on_small_graphs() {
        assert_eq!(count(5, 2, 3, OrbitTarget::Arcs), 1);
        assert_eq!(count(4, 1, 2, OrbitTarget::Edges), 1);
        assert_eq!(count(4, 1, 2, OrbitTarget::Vertices), 2);
        assert_eq!(count(4, 1, 2, OrbitTarget::Arcs), 2);
        assert_eq!(count(4, 1, 3, OrbitTarget::Vertices), 1);
    }

    #[test]
    fn no_generators_means_singleton_orbits() {
        let g = build_inclusion_graph(GraphParams::new(4, 1, 2).unwrap()).unwrap();
        assert_eq!(orbit_count(g.graph(), &[], OrbitTarget::Vertices).unwrap(), 10);
        assert_eq!(orbit_count(g.graph(), &[], OrbitTarget::Arcs).unwrap(), 24);
    }

    #[test]
    fn rejects_non_automorphism() {
        let g = build_inclusion_graph(GraphParams::new(4, 1, 2).unwrap()).unwrap();
        let mut images: Vec<usize> = (0..10).collect();
        images.swap(0, 9);
        let bad = InducedAction::from_images(images, Provenance::Composite).unwrap();
        assert!(matches!(orbit_count(g.graph(), &[bad], OrbitTarget::Edges), Err(Error::NotAnAutomorphism(0))));
    }

    #[test]
    fn target_names_round_trip() {
        for t in [OrbitTarget::Vertices, OrbitTarget::Edges, OrbitTarget::Arcs] {
            assert_eq!(t.to_string().parse::<OrbitTarget>().unwrap(), t);
        }
        assert!("faces".parse::<OrbitTarget>().is_err());
    }
}
