use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::automorphisms::action::{induced_on_index, tau_action, InducedAction};
use crate::automorphisms::perm::BasePermutation;
use crate::combinatorics::factorial;
use crate::error::Result;
use crate::graphs::{GraphParams, SubsetIndex};

/// Isomorphism type of `Aut(G(n,k,l))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Sym(u32),
    SymTimesZ2(u32),
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Sym(n) => write!(f, "Sym({n})"),
            GroupKind::SymTimesZ2(n) => write!(f, "Sym({n})×Z2"),
        }
    }
}

/// A generator named by its origin rather than by its vertex table, so
/// describing the group never needs the graph to be built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Sigma(BasePermutation),
    Tau,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sigma(g) => write!(f, "σ{g}"),
            Generator::Tau => f.write_str("τ"),
        }
    }
}

/// The automorphism group of a canonical `G(n,k,l)`.
#[derive(Debug, Clone)]
pub struct GroupDescription {
    pub params: GraphParams,
    pub kind: GroupKind,
    pub order: BigUint,
    pub generators: Vec<Generator>,
}

impl GroupDescription {
    /// Vertex tables of the generators on `G(n,k,l)`.
    pub fn generator_actions(&self) -> Result<Vec<InducedAction>> {
        let index = SubsetIndex::new(self.params)?;
        self.generators
            .iter()
            .map(|g| match g {
                Generator::Sigma(p) => induced_on_index(p, &index),
                Generator::Tau => tau_action(self.params),
            })
            .collect()
    }

    pub fn report(&self, verified_brute_force: Option<bool>) -> GroupReport {
        GroupReport {
            kind: self.kind.to_string(),
            order: self.order.to_string(),
            generators: self.generators.len(),
            verified_brute_force,
        }
    }
}

/// Machine-readable group summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub kind: String,
    /// Decimal string, since the order outgrows every fixed-width integer.
    pub order: String,
    pub generators: usize,
    pub verified_brute_force: Option<bool>,
}

/// `Aut(G(n,k,l))`: `S_n` when `k + l < n`, `S_n × Z2` when `k + l = n`.
///
/// `S_n` is generated by `σ` of the transposition `(1 2)` and of the cycle
/// `(1 2 … n)`; complementation `τ` supplies the extra factor.
pub fn aut_group(params: GraphParams) -> Result<GroupDescription> {
    params.require_canonical()?;
    let n = params.n();
    let mut generators = vec![
        Generator::Sigma(BasePermutation::transposition(n, 0, 1)?),
        Generator::Sigma(BasePermutation::rotation(n)),
    ];
    let (kind, order) = if params.is_self_complementary() {
        generators.push(Generator::Tau);
        (GroupKind::SymTimesZ2(n), factorial(n) * 2u32)
    } else {
        (GroupKind::Sym(n), factorial(n))
    };
    Ok(GroupDescription { params, kind, order, generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphisms::action::is_automorphism;
    use crate::graphs::build_inclusion_graph;

    #[test]
    fn kinds_and_orders() {
        let g = aut_group(GraphParams::new(4, 1, 2).unwrap()).unwrap();
        assert_eq!(g.kind.to_string(), "Sym(4)");
        assert_eq!(g.order, BigUint::from(24u32));
        assert_eq!(g.generators.len(), 2);
        let g = aut_group(GraphParams::new(4, 1, 3).unwrap()).unwrap();
        assert_eq!(g.kind.to_string(), "Sym(4)×Z2");
        assert_eq!(g.order, BigUint::from(48u32));
        assert_eq!(g.generators.len(), 3);
        assert_eq!(aut_group(GraphParams::new(5, 2, 3).unwrap()).unwrap().order, BigUint::from(240u32));
    }

    #[test]
    fn large_order_needs_no_graph() {
        let g = aut_group(GraphParams::new(60, 29, 30).unwrap()).unwrap();
        assert_eq!(g.order, factorial(60));
    }

    #[test]
    fn generators_are_automorphisms() {
        for p in crate::graphs::canonical_params(3..=7) {
            let graph = build_inclusion_graph(p).unwrap();
            for a in aut_group(p).unwrap().generator_actions().unwrap() {
                assert!(is_automorphism(graph.graph(), &a).unwrap());
            }
        }
    }

    #[test]
    fn report_shape() {
        let r = aut_group(GraphParams::new(4, 1, 3).unwrap()).unwrap().report(Some(true));
        assert_eq!(r.order, "48");
        assert_eq!(r.generators, 3);
        assert_eq!(r.verified_brute_force, Some(true));
    }

    #[test]
    fn generator_names() {
        let g = aut_group(GraphParams::new(4, 1, 3).unwrap()).unwrap();
        let names: Vec<String> = g.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["σ(1 2)", "σ(1 2 3 4)", "τ"]);
    }
}
