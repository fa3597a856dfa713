use std::fmt;

use crate::graph::{CycleCertificate, SubdivisionWitness};
use crate::vset::format_ids;
use crate::{VertexSet, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OutcomeTag {
    /// `G[S]` connected; `achieved` is the residual `w*` after removing `S`.
    ConnectedSeparator,
    /// `G[S]` connected; `achieved` is `w(N(S))`.
    NeighborhoodSet,
    /// The reduction to `S` is a cycle; `achieved` is `w(S)`.
    CycleSet,
    /// A clique subdivision (or general pattern) was found.
    SubdivisionWitness,
    /// A single vertex; `achieved` is its weight.
    HeavyVertex,
}

impl OutcomeTag {
    pub fn name(self) -> &'static str {
        match self {
            OutcomeTag::ConnectedSeparator => "separator",
            OutcomeTag::NeighborhoodSet => "neighborhood",
            OutcomeTag::CycleSet => "cycle",
            OutcomeTag::SubdivisionWitness => "subdivision",
            OutcomeTag::HeavyVertex => "heavy-vertex",
        }
    }
}

impl fmt::Display for OutcomeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of one decomposition step. The claim is `achieved >= constant * basis`,
/// where `basis` is the quantity the lemma measures against (usually `w(G)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralOutcome {
    pub tag: OutcomeTag,
    /// The set `S`; branch vertices for a witness.
    pub set: VertexSet,
    pub cycle: Option<CycleCertificate>,
    pub witness: Option<SubdivisionWitness>,
    pub achieved: Weight,
    pub constant: Weight,
    pub basis: Weight,
}

impl StructuralOutcome {
    pub fn new(tag: OutcomeTag, set: VertexSet, achieved: Weight, constant: Weight, basis: Weight) -> Self {
        StructuralOutcome { tag, set, cycle: None, witness: None, achieved, constant, basis }
    }

    pub fn with_cycle(mut self, cycle: CycleCertificate) -> Self {
        self.cycle = Some(cycle);
        self
    }

    pub fn with_witness(mut self, witness: SubdivisionWitness) -> Self {
        self.witness = Some(witness);
        self
    }

    /// The guarantee `achieved >= constant * basis` (vacuous for witnesses).
    pub fn meets_claim(&self) -> bool {
        self.tag == OutcomeTag::SubdivisionWitness || self.achieved >= self.constant * self.basis
    }

    pub fn record(&self) -> String {
        format!(
            "outcome tag={} S={} achieved={} constant={}",
            self.tag,
            format_ids(self.set.iter()),
            self.achieved,
            self.constant
        )
    }
}

impl fmt::Display for StructuralOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.record())
    }
}
