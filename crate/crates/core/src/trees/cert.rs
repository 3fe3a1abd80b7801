use serde::{Deserialize, Serialize};

use super::{TreeFamily, VertexPartition};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// JSON form of a tree family. `host` is the host's edge-list SHA-256.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCert {
    pub host: String,
    pub k: usize,
    pub trees: Vec<Vec<[usize; 2]>>,
    pub i: usize,
    pub j: usize,
}

impl FamilyCert {
    pub fn from_family(f: &TreeFamily) -> FamilyCert {
        FamilyCert {
            host: f.host().to_string(),
            k: f.k(),
            trees: f
                .trees()
                .iter()
                .map(|t| t.edges().iter().map(|&(u, v)| [u, v]).collect())
                .collect(),
            i: f.overlap_inner().len(),
            j: f.overlap_edges().len(),
        }
    }

    /// Rebuilds the family over `g`, checking the host hash and recorded overlaps.
    pub fn to_family(&self, g: &Graph) -> Result<TreeFamily> {
        if self.host != g.fingerprint() {
            return Err(Error::InvalidCertificate(
                "certificate host hash does not match the graph".into(),
            ));
        }
        if self.k != self.trees.len() {
            return Err(Error::InvalidCertificate(format!(
                "k = {} but {} trees listed",
                self.k,
                self.trees.len()
            )));
        }
        let lists = self
            .trees
            .iter()
            .map(|t| t.iter().map(|&[u, v]| (u, v)).collect())
            .collect();
        let f = TreeFamily::from_edge_lists(g, lists)?;
        if f.overlap_inner().len() != self.i || f.overlap_edges().len() != self.j {
            return Err(Error::InvalidCertificate(format!(
                "recorded overlaps ({},{}) differ from measured ({},{})",
                self.i,
                self.j,
                f.overlap_inner().len(),
                f.overlap_edges().len()
            )));
        }
        Ok(f)
    }
}

/// JSON form of a partition; when `rooted`, the last block is the root block A.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCert {
    pub blocks: Vec<Vec<usize>>,
    pub rooted: bool,
    pub l: usize,
}

impl PartitionCert {
    pub fn from_partition(p: &VertexPartition, l: usize) -> PartitionCert {
        let mut blocks = p.blocks().to_vec();
        if let Some(a) = p.root() {
            blocks.push(a.to_vec());
        }
        PartitionCert {
            blocks,
            rooted: p.root().is_some(),
            l,
        }
    }

    pub fn to_partition(&self, n: usize) -> Result<VertexPartition> {
        let mut blocks = self.blocks.clone();
        let root = if self.rooted {
            Some(blocks.pop().ok_or_else(|| {
                Error::InvalidCertificate("rooted partition without blocks".into())
            })?)
        } else {
            None
        };
        VertexPartition::new(n, blocks, root)
    }
}

/// JSON form of a list of (rooted) connected dominating sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CdsCert {
    pub sets: Vec<Vec<usize>>,
    pub l: usize,
}
