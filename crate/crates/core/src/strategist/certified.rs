use std::fmt;

use crate::decompose::StructuralOutcome;
use crate::game::{GameState, Strategy};
use crate::graph::SubdivisionWitness;
use crate::select::{Dichotomy, LegalOrderingContext};
use crate::{VertexId, VertexSet, Weight};

/// What produced a certified bound, with the quantities it was computed from.
#[derive(Clone, Debug)]
pub enum Provenance {
    /// Oracle continuation from a position with taken set `taken`.
    Comp { taken: VertexSet },
    /// `s` is the union of the chosen blocks.
    CompR { s: VertexSet },
    CycleR(CyclePlan),
    Legal { ctx: LegalOrderingContext },
    Sparse {
        level: usize,
        outcome: Option<StructuralOutcome>,
        witness: Option<SubdivisionWitness>,
        inner: Box<Provenance>,
    },
    Master { dichotomy: Dichotomy, inner: Box<Provenance> },
}

impl Provenance {
    pub fn lemma(&self) -> &'static str {
        match self {
            Provenance::Comp { .. } => "strat-comp",
            Provenance::CompR { .. } => "strat-comp-R",
            Provenance::CycleR(_) => "strat-cycle-R",
            Provenance::Legal { .. } => "strat-legal",
            Provenance::Sparse { .. } => "strat-sparse",
            Provenance::Master { .. } => "master",
        }
    }

    /// The innermost lemma actually playing.
    pub fn leaf(&self) -> &Provenance {
        match self {
            Provenance::Sparse { inner, .. } | Provenance::Master { inner, .. } => inner.leaf(),
            other => other,
        }
    }
}

/// How the cycle strategy was set up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclePlan {
    /// Centers in cyclic order, zero-weight blocks dropped.
    pub centers: Vec<VertexId>,
    /// `None` when at most six centers remain and the heaviest is taken first;
    /// otherwise 1 or 2 for the sub-strategy in use.
    pub claim: Option<u8>,
    /// Centers the rules keep away from Bob.
    pub protected: VertexSet,
    pub first: Option<VertexId>,
}

/// A strategy for Alice together with a lower bound on her final gain.
pub struct CertifiedStrategy {
    pub strategy: Box<dyn Strategy>,
    pub bound: Weight,
    /// The worst-case constant of the producing lemma, for reference.
    pub constant: Weight,
    pub provenance: Provenance,
}

impl Clone for CertifiedStrategy {
    fn clone(&self) -> Self {
        CertifiedStrategy {
            strategy: self.strategy.clone_box(),
            bound: self.bound,
            constant: self.constant,
            provenance: self.provenance.clone(),
        }
    }
}

impl fmt::Debug for CertifiedStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CertifiedStrategy")
            .field("strategy", &self.strategy.name())
            .field("bound", &self.bound)
            .field("constant", &self.constant)
            .field("provenance", &self.provenance)
            .finish()
    }
}

impl CertifiedStrategy {
    pub fn lemma(&self) -> &'static str {
        self.provenance.lemma()
    }

    pub fn report(&self, realized: Weight) -> String {
        format!(
            "certified lemma={} bound={} realized={} paperConstant={}",
            self.lemma(),
            self.bound,
            realized,
            self.constant
        )
    }
}

impl Strategy for CertifiedStrategy {
    fn name(&self) -> &str {
        self.lemma()
    }

    fn choose_move(&mut self, state: &GameState) -> crate::Result<VertexId> {
        self.strategy.choose_move(state)
    }

    fn certified_bound(&self) -> Option<Weight> {
        Some(self.bound)
    }

    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}
