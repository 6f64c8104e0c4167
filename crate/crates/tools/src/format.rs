//! JSON documents for ribbon graphs and text encodings of generators,
//! objects and coefficients.

use std::collections::BTreeSet;

use cyclic_ainf::categories::{BaseGen, BaseObj};
use cyclic_ainf::combo::Combo;
use cyclic_ainf::field::Field;
use cyclic_ainf::ribbon::{MalformedGraph, RibbonGraph};
use cyclic_ainf::twisted::{CyclicComplex, TwEntry, TwGen, TwistedComplex};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid ribbon graph: {0}")]
    Graph(#[from] MalformedGraph),
    #[error("half-edge {0} is listed but not in any vertex cycle")]
    Unplaced(usize),
    #[error("half-edge {0} appears in a vertex cycle but not in the half-edge list")]
    Unlisted(usize),
    #[error("cannot parse {what} from {text:?}")]
    Parse { what: &'static str, text: String },
    #[error("twisted complex: {0}")]
    Complex(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn parse_err(what: &'static str, text: &str) -> FormatError {
    FormatError::Parse { what, text: text.into() }
}

/// A ribbon graph as half-edge ids, the vertex rotation as cycles, and the
/// edge pairing as a list of pairs. Half-edges left unpaired are legs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonDoc {
    pub half_edges: Vec<usize>,
    pub sigma: Vec<Vec<usize>>,
    pub alpha: Vec<[usize; 2]>,
}

impl RibbonDoc {
    pub fn from_graph(g: &RibbonGraph) -> Self {
        let mut half_edges: Vec<usize> = g.vertices().iter().flatten().copied().collect();
        half_edges.sort_unstable();
        RibbonDoc {
            half_edges,
            sigma: g.vertices().to_vec(),
            alpha: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<RibbonGraph, FormatError> {
        let listed: BTreeSet<usize> = self.half_edges.iter().copied().collect();
        let placed: BTreeSet<usize> = self.sigma.iter().flatten().copied().collect();
        if let Some(&h) = listed.difference(&placed).next() {
            return Err(FormatError::Unplaced(h));
        }
        if let Some(&h) = placed.difference(&listed).next() {
            return Err(FormatError::Unlisted(h));
        }
        let edges = self.alpha.iter().map(|&[a, b]| (a, b)).collect();
        Ok(RibbonGraph::new(self.sigma.clone(), edges)?)
    }
}

pub fn object_name(x: &BaseObj) -> String {
    match x {
        BaseObj::Point(i) => format!("s{i}"),
        BaseObj::Zero => "zero".into(),
    }
}

pub fn parse_object(s: &str) -> Result<BaseObj, FormatError> {
    if s == "zero" {
        return Ok(BaseObj::Zero);
    }
    s.strip_prefix('s')
        .and_then(|i| i.parse().ok())
        .map(BaseObj::Point)
        .ok_or_else(|| parse_err("object", s))
}

pub fn generator_name(g: &BaseGen) -> String {
    match g {
        BaseGen::Id(i) => format!("id{i}"),
        BaseGen::V(i) => format!("v{i}"),
    }
}

pub fn parse_generator(s: &str) -> Result<BaseGen, FormatError> {
    let num = |rest: &str| rest.parse().map_err(|_| parse_err("generator", s));
    if let Some(rest) = s.strip_prefix("id") {
        Ok(BaseGen::Id(num(rest)?))
    } else if let Some(rest) = s.strip_prefix('v') {
        Ok(BaseGen::V(num(rest)?))
    } else {
        Err(parse_err("generator", s))
    }
}

/// Accepts an integer or `p/q`.
pub fn parse_coefficient<F: Field>(s: &str) -> Result<F, FormatError> {
    let err = || parse_err("coefficient", s);
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<i64>().map_err(|_| err())?, d.trim().parse::<i64>().map_err(|_| err())?),
        None => (s.trim().parse::<i64>().map_err(|_| err())?, 1),
    };
    let inv = F::from_i64(d).inv().ok_or_else(err)?;
    Ok(F::from_i64(n) * inv)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub from: usize,
    pub to: usize,
    pub generator: String,
    pub coefficient: String,
}

pub fn combo_doc<F: Field>(c: &Combo<TwGen<BaseGen>, F>) -> Vec<TermDoc> {
    c.iter()
        .map(|(g, a)| TermDoc {
            from: g.from,
            to: g.to,
            generator: generator_name(&g.gen),
            coefficient: a.to_string(),
        })
        .collect()
}

pub fn parse_combo<F: Field>(terms: &[TermDoc]) -> Result<Combo<TwGen<BaseGen>, F>, FormatError> {
    let mut out = Combo::zero();
    for t in terms {
        out.add_term(TwGen::new(t.from, t.to, parse_generator(&t.generator)?), parse_coefficient(&t.coefficient)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub object: String,
    pub shift: i64,
}

/// A twisted complex; `delta` holds the stored (shifted) coefficients with
/// `from`/`to` naming entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub entries: Vec<EntryDoc>,
    pub delta: Vec<TermDoc>,
}

pub fn complex_doc<F: Field>(x: &CyclicComplex<F>) -> ComplexDoc {
    let entries = x
        .entries()
        .iter()
        .map(|e| EntryDoc {
            object: object_name(&e.object),
            shift: e.shift,
        })
        .collect();
    let delta = x
        .delta_components()
        .flat_map(|(&(from, to), c)| {
            c.iter().map(move |(g, a)| TermDoc {
                from,
                to,
                generator: generator_name(g),
                coefficient: a.to_string(),
            })
        })
        .collect();
    ComplexDoc { entries, delta }
}

pub fn parse_complex<F: Field>(doc: &ComplexDoc) -> Result<CyclicComplex<F>, FormatError> {
    let entries = doc
        .entries
        .iter()
        .map(|e| Ok(TwEntry { object: parse_object(&e.object)?, shift: e.shift }))
        .collect::<Result<Vec<_>, FormatError>>()?;
    let mut out = TwistedComplex::from_entries(entries);
    for t in &doc.delta {
        let c = Combo::term(parse_generator(&t.generator)?, parse_coefficient::<F>(&t.coefficient)?);
        out.add_delta(t.from, t.to, &c).map_err(|e| FormatError::Complex(e.to_string()))?;
    }
    Ok(out)
}
