//! Ribbon graphs, the cyclic sets of local complement components at their
//! vertices and edges, and the resulting diagram of categories.
//!
//! A vertex is a cycle of half-edges in counterclockwise order. Corner `j`
//! of a vertex lies between its half-edges `j` and `j + 1`. Each edge is
//! oriented from its first half-edge to its second, and its two sides are
//! the left side (element 0) and the right side (element 1).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::ainf::{check_functor, FunctorReport};
use crate::categories::CyclicCategory;
use crate::cyclic::{CyclicMorphism, CyclicSet};
use crate::field::Field;
use crate::functors::{full_pullback, GenFunctor, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MalformedGraph {
    #[error("vertex {0} has no half-edges")]
    EmptyVertex(usize),
    #[error("half-edge {0} appears at more than one vertex position")]
    RepeatedHalfEdge(usize),
    #[error("half-edge {0} is not attached to any vertex")]
    UnknownHalfEdge(usize),
    #[error("half-edge {0} is paired with itself")]
    SelfPaired(usize),
    #[error("half-edge {0} belongs to two edges")]
    PairedTwice(usize),
}

/// Where a half-edge sits: its vertex and its position in the rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub vertex: usize,
    pub position: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonGraph {
    vertices: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    slots: BTreeMap<usize, Slot>,
}

impl RibbonGraph {
    /// `vertices` lists each vertex's half-edges in rotation order; `edges`
    /// pairs half-edges. Unpaired half-edges are legs.
    pub fn new(vertices: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Result<Self, MalformedGraph> {
        let mut slots = BTreeMap::new();
        for (v, cycle) in vertices.iter().enumerate() {
            if cycle.is_empty() {
                return Err(MalformedGraph::EmptyVertex(v));
            }
            for (position, &h) in cycle.iter().enumerate() {
                if slots.insert(h, Slot { vertex: v, position }).is_some() {
                    return Err(MalformedGraph::RepeatedHalfEdge(h));
                }
            }
        }
        let mut paired = BTreeMap::new();
        for &(a, b) in &edges {
            if a == b {
                return Err(MalformedGraph::SelfPaired(a));
            }
            for h in [a, b] {
                if !slots.contains_key(&h) {
                    return Err(MalformedGraph::UnknownHalfEdge(h));
                }
                if paired.insert(h, ()).is_some() {
                    return Err(MalformedGraph::PairedTwice(h));
                }
            }
        }
        Ok(RibbonGraph { vertices, edges, slots })
    }

    /// Two vertices joined by three edges.
    pub fn theta() -> Self {
        RibbonGraph::new(vec![vec![0, 1, 2], vec![3, 4, 5]], vec![(0, 5), (1, 4), (2, 3)]).expect("valid graph")
    }

    /// One vertex of valence two with a loop.
    pub fn loop_graph() -> Self {
        RibbonGraph::new(vec![vec![0, 1]], vec![(0, 1)]).expect("valid graph")
    }

    /// One edge between two vertices of valence one.
    pub fn segment() -> Self {
        RibbonGraph::new(vec![vec![0], vec![1]], vec![(0, 1)]).expect("valid graph")
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn valence(&self, v: usize) -> usize {
        self.vertices[v].len()
    }

    pub fn slot(&self, h: usize) -> Option<Slot> {
        self.slots.get(&h).copied()
    }

    /// Half-edges not paired into an edge.
    pub fn legs(&self) -> Vec<usize> {
        let paired: Vec<usize> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        self.slots.keys().copied().filter(|h| !paired.contains(h)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeEnd {
    /// The end at the edge's first half-edge.
    Start,
    /// The end at the edge's second half-edge.
    Finish,
}

/// An edge end together with the map from the edge's sides to the corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub edge: usize,
    pub end: EdgeEnd,
    pub vertex: usize,
    pub map: CyclicMorphism,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData {
    pub vertex_sets: Vec<CyclicSet>,
    pub edge_sets: Vec<CyclicSet>,
    pub incidences: Vec<Incidence>,
}

/// Corner sets, edge side sets and the incidence maps between them.
///
/// Leaving a vertex along half-edge `j` of `k`, the left side borders corner
/// `j` and the right side corner `j − 1`, and a counterclockwise turn from
/// left to right sweeps `k − 1` corners. Arriving along half-edge `m`, the
/// left side borders corner `m − 1` and the right side corner `m`.
pub fn local_cyclic_data(graph: &RibbonGraph) -> LocalData {
    let vertex_sets: Vec<CyclicSet> = (0..graph.vertices.len()).map(|v| CyclicSet::standard(graph.valence(v))).collect();
    let side_set = CyclicSet::standard(2);
    let mut incidences = Vec::with_capacity(2 * graph.edges.len());
    for (e, &(a, b)) in graph.edges.iter().enumerate() {
        for (end, h) in [(EdgeEnd::Start, a), (EdgeEnd::Finish, b)] {
            let slot = graph.slot(h).expect("validated graph");
            let k = graph.valence(slot.vertex) as i64;
            let j = slot.position as i64;
            let lift = match end {
                EdgeEnd::Start => vec![j, j + k - 1],
                EdgeEnd::Finish => vec![j - 1, j],
            };
            let map = CyclicMorphism::new(side_set.clone(), vertex_sets[slot.vertex].clone(), lift).expect("incidence lifts are monotone");
            incidences.push(Incidence {
                edge: e,
                end,
                vertex: slot.vertex,
                map,
            });
        }
    }
    LocalData {
        vertex_sets,
        edge_sets: vec![side_set; graph.edges.len()],
        incidences,
    }
}

/// Categories on the cells and restriction functors from each vertex
/// category to the categories of the edges at it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryDiagram<F> {
    pub graph: RibbonGraph,
    pub local: LocalData,
    pub vertex_categories: Vec<CyclicCategory>,
    pub edge_categories: Vec<CyclicCategory>,
    /// One functor per incidence, in the same order.
    pub functors: Vec<GenFunctor<F>>,
}

pub fn build_category_diagram<F: Field>(graph: &RibbonGraph) -> CategoryDiagram<F> {
    let local = local_cyclic_data(graph);
    let vertex_categories = local.vertex_sets.iter().map(CyclicCategory::two_periodic_with_zero).collect();
    let edge_categories = local.edge_sets.iter().map(CyclicCategory::two_periodic_with_zero).collect();
    let functors = local
        .incidences
        .iter()
        .map(|inc| full_pullback(&inc.map, &Mode::TwoPeriodic, true))
        .collect();
    CategoryDiagram {
        graph: graph.clone(),
        local,
        vertex_categories,
        edge_categories,
        functors,
    }
}

impl<F: Field> CategoryDiagram<F> {
    /// Runs the functor checker on every restriction functor.
    pub fn check_functors(&self, max_len: usize) -> Vec<FunctorReport<F, GenFunctor<F>>> {
        self.functors
            .iter()
            .map(|f| check_functor(f, &f.source_category().objects(), max_len))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn theta_maps_are_injective() {
        let data = local_cyclic_data(&RibbonGraph::theta());
        assert!(data.vertex_sets.iter().all(|s| s.len() == 3));
        assert_eq!(data.incidences.len(), 6);
        assert!(data.incidences.iter().all(|i| i.map.is_injective()));
    }

    #[test]
    fn loop_sides_land_in_both_corners() {
        let data = local_cyclic_data(&RibbonGraph::loop_graph());
        assert_eq!(data.vertex_sets[0].len(), 2);
        assert_eq!(data.incidences.len(), 2);
        for inc in &data.incidences {
            assert!(CyclicMorphism::enumerate(&CyclicSet::standard(2), &CyclicSet::standard(2)).contains(&inc.map));
            assert!(inc.map.is_isomorphism());
        }
    }

    #[test]
    fn segment_ends_use_both_collapses() {
        let data = local_cyclic_data(&RibbonGraph::segment());
        let [a, b] = [&data.incidences[0].map, &data.incidences[1].map];
        assert!(!a.is_injective() && !b.is_injective());
        assert_ne!(a, b);
        assert_eq!(a.set_map(0), b.set_map(0));
    }

    #[test]
    fn leg_has_no_incidence() {
        let g = RibbonGraph::new(vec![vec![7]], vec![]).unwrap();
        assert_eq!(g.legs(), vec![7]);
        let data = local_cyclic_data(&g);
        assert_eq!(data.vertex_sets[0].len(), 1);
        assert!(data.incidences.is_empty());
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(RibbonGraph::new(vec![vec![]], vec![]), Err(MalformedGraph::EmptyVertex(0)));
        assert_eq!(RibbonGraph::new(vec![vec![0, 0]], vec![]), Err(MalformedGraph::RepeatedHalfEdge(0)));
        assert_eq!(RibbonGraph::new(vec![vec![0]], vec![(0, 3)]), Err(MalformedGraph::UnknownHalfEdge(3)));
        assert_eq!(RibbonGraph::new(vec![vec![0]], vec![(0, 0)]), Err(MalformedGraph::SelfPaired(0)));
        assert_eq!(
            RibbonGraph::new(vec![vec![0, 1, 2]], vec![(0, 1), (1, 2)]),
            Err(MalformedGraph::PairedTwice(1))
        );
    }

    #[test]
    fn diagrams_pass_the_checker() {
        for g in [RibbonGraph::theta(), RibbonGraph::loop_graph(), RibbonGraph::segment()] {
            let d = build_category_diagram::<Rational>(&g);
            assert!(d.check_functors(5).iter().all(|r| r.is_ok()));
        }
    }
}
