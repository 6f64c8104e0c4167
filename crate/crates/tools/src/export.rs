//! Export of category diagrams and their rebuild from the exported document.

use cyclic_ainf::ainf::{check_functor, AInfCategory, AInfFunctor};
use cyclic_ainf::categories::CyclicCategory;
use cyclic_ainf::field::Field;
use cyclic_ainf::functors::FunctorTable;
use cyclic_ainf::ribbon::{build_category_diagram, CategoryDiagram, EdgeEnd};
use serde::{Deserialize, Serialize};

use crate::format::{
    combo_doc, complex_doc, generator_name, object_name, parse_combo, parse_complex, parse_generator, parse_object,
    ComplexDoc, FormatError, RibbonDoc, TermDoc,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub name: String,
    pub source: String,
    pub target: String,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryDoc {
    pub cell: String,
    pub points: usize,
    pub objects: Vec<String>,
    pub generators: Vec<GeneratorDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectImageDoc {
    pub object: String,
    pub image: ComplexDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub objects: Vec<String>,
    pub generators: Vec<String>,
    pub value: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorDoc {
    pub edge: usize,
    pub end: String,
    pub vertex: usize,
    pub lift: Vec<i64>,
    pub objects: Vec<ObjectImageDoc>,
    pub components: Vec<ComponentDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDoc {
    pub graph: RibbonDoc,
    /// Tuples up to this length are tabulated in `components`.
    pub max_len: usize,
    pub vertex_categories: Vec<CategoryDoc>,
    pub edge_categories: Vec<CategoryDoc>,
    pub functors: Vec<FunctorDoc>,
}

fn category_doc<F: Field>(cell: String, cat: &CyclicCategory) -> CategoryDoc {
    let objects = cat.objects();
    let mut generators = Vec::new();
    for x in &objects {
        for y in &objects {
            for g in AInfCategory::<F>::basis(cat, x, y) {
                generators.push(GeneratorDoc {
                    name: generator_name(&g),
                    source: object_name(x),
                    target: object_name(y),
                    degree: AInfCategory::<F>::degree(cat, x, y, &g),
                });
            }
        }
    }
    CategoryDoc {
        cell,
        points: cat.size(),
        objects: objects.iter().map(object_name).collect(),
        generators,
    }
}

fn end_name(end: EdgeEnd) -> &'static str {
    match end {
        EdgeEnd::Start => "start",
        EdgeEnd::Finish => "finish",
    }
}

fn table_doc<F: Field>(table: &FunctorTable<F>) -> (Vec<ObjectImageDoc>, Vec<ComponentDoc>) {
    let objects = table
        .images
        .iter()
        .map(|(x, c)| ObjectImageDoc {
            object: object_name(x),
            image: complex_doc(c),
        })
        .collect();
    let components = table
        .components
        .iter()
        .map(|((objs, gens), value)| ComponentDoc {
            objects: objs.iter().map(object_name).collect(),
            generators: gens.iter().map(generator_name).collect(),
            value: combo_doc(value),
        })
        .collect();
    (objects, components)
}

pub fn export_diagram<F: Field>(d: &CategoryDiagram<F>, max_len: usize) -> DiagramDoc {
    let vertex_categories = d
        .vertex_categories
        .iter()
        .enumerate()
        .map(|(v, c)| category_doc::<F>(format!("vertex {v}"), c))
        .collect();
    let edge_categories = d
        .edge_categories
        .iter()
        .enumerate()
        .map(|(e, c)| category_doc::<F>(format!("edge {e}"), c))
        .collect();
    let functors = d
        .local
        .incidences
        .iter()
        .zip(&d.functors)
        .map(|(inc, f)| {
            let (objects, components) = table_doc(&FunctorTable::tabulate(f, max_len));
            FunctorDoc {
                edge: inc.edge,
                end: end_name(inc.end).into(),
                vertex: inc.vertex,
                lift: inc.map.lift().to_vec(),
                objects,
                components,
            }
        })
        .collect();
    DiagramDoc {
        graph: RibbonDoc::from_graph(&d.graph),
        max_len,
        vertex_categories,
        edge_categories,
        functors,
    }
}

/// The diagram rebuilt from the graph, and the functor tables read back
/// from the document.
pub struct Imported<F> {
    pub diagram: CategoryDiagram<F>,
    pub tables: Vec<FunctorTable<F>>,
}

pub fn import_diagram<F: Field>(doc: &DiagramDoc) -> Result<Imported<F>, FormatError> {
    let diagram = build_category_diagram::<F>(&doc.graph.to_graph()?);
    let mut tables = Vec::with_capacity(doc.functors.len());
    for (fd, f) in doc.functors.iter().zip(&diagram.functors) {
        let images = fd
            .objects
            .iter()
            .map(|o| Ok((parse_object(&o.object)?, parse_complex::<F>(&o.image)?)))
            .collect::<Result<_, FormatError>>()?;
        let components = fd
            .components
            .iter()
            .map(|c| {
                let objs = c.objects.iter().map(|s| parse_object(s)).collect::<Result<Vec<_>, _>>()?;
                let gens = c.generators.iter().map(|s| parse_generator(s)).collect::<Result<Vec<_>, _>>()?;
                Ok(((objs, gens), parse_combo::<F>(&c.value)?))
            })
            .collect::<Result<_, FormatError>>()?;
        tables.push(FunctorTable {
            source: f.source_category().clone(),
            target: f.target_category().clone(),
            images,
            components,
        });
    }
    Ok(Imported { diagram, tables })
}

/// What went wrong in an export round trip, if anything.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    pub document_differs: bool,
    pub diagram_differs: bool,
    pub json_differs: bool,
    /// Incidences whose re-read table fails the functor checker.
    pub failing_tables: Vec<usize>,
    pub incidence_maps_differ: bool,
}

impl RoundTrip {
    pub fn is_ok(&self) -> bool {
        !self.document_differs && !self.diagram_differs && !self.json_differs && self.failing_tables.is_empty() && !self.incidence_maps_differ
    }
}

/// Serializes to JSON, parses back, rebuilds and re-checks.
pub fn round_trip<F: Field>(d: &CategoryDiagram<F>, max_len: usize) -> Result<RoundTrip, FormatError> {
    let doc = export_diagram(d, max_len);
    let json = serde_json::to_string(&doc)?;
    let parsed: DiagramDoc = serde_json::from_str(&json)?;
    let imported = import_diagram::<F>(&parsed)?;
    let again = export_diagram(&imported.diagram, max_len);
    let failing_tables = imported
        .tables
        .iter()
        .enumerate()
        .filter(|(_, t)| !check_functor(*t, &t.source().objects(), max_len).is_ok())
        .map(|(i, _)| i)
        .collect();
    let maps_from_doc: Vec<Vec<i64>> = parsed.functors.iter().map(|f| f.lift.clone()).collect();
    let maps_rebuilt: Vec<Vec<i64>> = imported.diagram.local.incidences.iter().map(|i| i.map.lift().to_vec()).collect();
    Ok(RoundTrip {
        document_differs: parsed != doc || again != doc,
        diagram_differs: imported.diagram != *d,
        json_differs: serde_json::to_string(&again)? != json,
        failing_tables,
        incidence_maps_differ: maps_from_doc != maps_rebuilt,
    })
}

/// Graphviz rendering of the graph with vertices labelled by valence.
pub fn graph_dot(doc: &RibbonDoc) -> String {
    let mut out = String::from("graph ribbon {\n");
    let vertex_of = |h: usize| doc.sigma.iter().position(|c| c.contains(&h));
    for (v, cycle) in doc.sigma.iter().enumerate() {
        out += &format!("  v{v} [label=\"v{v} ({})\"];\n", cycle.len());
    }
    for (e, [a, b]) in doc.alpha.iter().enumerate() {
        if let (Some(x), Some(y)) = (vertex_of(*a), vertex_of(*b)) {
            out += &format!("  v{x} -- v{y} [label=\"e{e}\"];\n");
        }
    }
    out + "}\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclic_ainf::field::Rational;
    use cyclic_ainf::ribbon::RibbonGraph;

    #[test]
    fn theta_round_trips() {
        let d = build_category_diagram::<Rational>(&RibbonGraph::theta());
        let r = round_trip(&d, 4).unwrap();
        assert!(r.is_ok(), "{r:?}");
    }

    #[test]
    fn lone_vertex_has_one_category() {
        let g = RibbonGraph::new(vec![vec![0, 1]], vec![]).unwrap();
        let doc = export_diagram(&build_category_diagram::<Rational>(&g), 3);
        assert_eq!(doc.vertex_categories.len() + doc.edge_categories.len(), 1);
        assert!(doc.functors.is_empty());
    }

    #[test]
    fn dot_lists_edges() {
        let dot = graph_dot(&RibbonDoc::from_graph(&RibbonGraph::theta()));
        assert_eq!(dot.matches(" -- ").count(), 3);
    }
}
