use cyclic_ainf::field::Rational;
use cyclic_ainf::functors::FunctorTable;
use cyclic_ainf::ainf::check_functor;
use cyclic_ainf::ribbon::{build_category_diagram, local_cyclic_data, EdgeEnd, RibbonGraph};

type Q = Rational;

fn graphs() -> Vec<RibbonGraph> {
    vec![
        RibbonGraph::theta(),
        RibbonGraph::loop_graph(),
        RibbonGraph::segment(),
        RibbonGraph::new(vec![vec![0, 1, 2, 3]], vec![(0, 2), (1, 3)]).unwrap(),
        RibbonGraph::new(vec![vec![0, 1, 2], vec![3]], vec![(0, 3)]).unwrap(),
    ]
}

#[test]
fn corners_count_half_edges() {
    for g in graphs() {
        let data = local_cyclic_data(&g);
        let corners: usize = data.vertex_sets.iter().map(|s| s.len()).sum();
        assert_eq!(corners, 2 * g.edges().len() + g.legs().len());
        assert_eq!(data.incidences.len(), 2 * g.edges().len());
        assert!(data.edge_sets.iter().all(|s| s.len() == 2));
    }
}

#[test]
fn each_edge_has_one_incidence_per_end() {
    for g in graphs() {
        let data = local_cyclic_data(&g);
        for e in 0..g.edges().len() {
            let ends: Vec<EdgeEnd> = data.incidences.iter().filter(|i| i.edge == e).map(|i| i.end).collect();
            assert_eq!(ends, vec![EdgeEnd::Start, EdgeEnd::Finish]);
        }
    }
}

#[test]
fn theta_and_loop_functors() {
    for g in [RibbonGraph::theta(), RibbonGraph::loop_graph()] {
        let d = build_category_diagram::<Q>(&g);
        for r in d.check_functors(6) {
            assert!(r.is_ok(), "{:?}", r);
        }
    }
}

#[test]
fn tabulated_functors_agree() {
    let d = build_category_diagram::<Q>(&RibbonGraph::theta());
    for f in &d.functors {
        let table = FunctorTable::tabulate(f, 5);
        let objs = f.source_category().objects();
        assert!(check_functor(&table, &objs, 5).is_ok());
    }
}
