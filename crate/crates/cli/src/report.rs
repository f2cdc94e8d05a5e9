//! The JSON report emitted by `arq build`.

use arq_core::coxeter::CoxeterData;
use arq_core::{ARQuiver, DerivedQuiver, HammockResult, Result, ZVertex};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pos {
    pub r: i64,
    pub i: usize,
}

impl Pos {
    /// Sort key: base vertex first, then level.
    pub fn key(&self) -> (usize, i64) {
        (self.i, self.r)
    }
}

impl From<ZVertex> for Pos {
    fn from(v: ZVertex) -> Self {
        Pos {
            r: v.level,
            i: v.base,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dynkin {
    pub family: String,
    pub rank: usize,
    /// Canonical label of each input vertex, in input order.
    pub relabel: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub indecomposables: usize,
    pub cluster: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Nilpotency {
    pub module: u32,
    pub derived: u32,
    pub cluster: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub r: i64,
    pub i: usize,
    pub dim: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowEntry {
    pub src: Pos,
    pub dst: Pos,
    pub val: [u32; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub r: i64,
    pub i: usize,
    pub h: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HammockEntry {
    pub k: usize,
    pub terminator: Pos,
    pub injective: Pos,
    pub vertices: Vec<Pos>,
    pub table: Vec<TableEntry>,
}

impl From<&HammockResult> for HammockEntry {
    fn from(h: &HammockResult) -> Self {
        let mut vertices: Vec<Pos> = h.hammock_vertices().iter().map(|&v| v.into()).collect();
        vertices.sort_by_key(Pos::key);
        let mut table: Vec<TableEntry> = h
            .table
            .iter()
            .map(|(v, &h)| TableEntry {
                r: v.level,
                i: v.base,
                h,
            })
            .collect();
        table.sort_by_key(|e| (e.i, e.r));
        HammockEntry {
            k: h.k,
            terminator: h.terminator.into(),
            injective: h.injective().into(),
            vertices,
            table,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub dynkin: Dynkin,
    pub coxeter_order: u32,
    pub rho: Vec<usize>,
    pub m: Vec<u32>,
    pub counts: Counts,
    pub nilpotency: Nilpotency,
    pub vertices: Vec<VertexEntry>,
    pub arrows: Vec<ArrowEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hammocks: Option<Vec<HammockEntry>>,
}

impl Report {
    /// Runs every statistic, including the derived and cluster certificates.
    pub fn new(arq: &ARQuiver, cd: &CoxeterData, with_hammocks: bool) -> Result<Report> {
        let module = arq.counts_and_nilpotency(cd.order)?;
        let dq = DerivedQuiver::new(arq)?;
        let derived = dq.derived_nilpotency(cd)?;
        let cluster = dq.cluster_counts(cd)?;

        let mut vertices: Vec<VertexEntry> = arq
            .vertices
            .iter()
            .map(|&v| {
                Ok(VertexEntry {
                    r: v.level,
                    i: v.base,
                    dim: arq.dim_vector(v)?.to_vec(),
                })
            })
            .collect::<Result<_>>()?;
        vertices.sort_by_key(|e| (e.i, e.r));
        let mut arrows: Vec<ArrowEntry> = arq
            .arrows
            .iter()
            .map(|a| ArrowEntry {
                src: a.src.into(),
                dst: a.dst.into(),
                val: [a.val.0, a.val.1],
            })
            .collect();
        arrows.sort_by_key(|a| (a.src.key(), a.dst.key()));

        Ok(Report {
            dynkin: Dynkin {
                family: arq.dynkin.family().letter().to_string(),
                rank: arq.dynkin.rank(),
                relabel: arq.dynkin.relabel.clone(),
            },
            coxeter_order: cd.order,
            rho: arq.rho.clone(),
            m: arq.m.clone(),
            counts: Counts {
                indecomposables: module.indecomposables,
                cluster: cluster.objects,
            },
            nilpotency: Nilpotency {
                module: module.nilpotency,
                derived,
                cluster: cluster.nilpotency,
            },
            vertices,
            arrows,
            hammocks: with_hammocks.then(|| arq.hammocks.iter().map(HammockEntry::from).collect()),
        })
    }

    /// Pretty JSON with object keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report fields are plain data");
        let mut out = serde_json::to_string_pretty(&value).expect("values always serialize");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }
}
