use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation is not a partial order: {0} <= {1} and {1} <= {0}")]
    NotAPoset(String, String),

    #[error("not a lattice: {kind} of {lhs} and {rhs} does not exist")]
    NotALattice {
        kind: MissingBound,
        lhs: String,
        rhs: String,
    },

    #[error("lattice is not distributive at ({0}, {1}, {2})")]
    NotDistributive(String, String, String),

    #[error("lattice has no elements")]
    EmptyLattice,

    #[error("duplicate element identifier {0:?}")]
    DuplicateElement(String),

    #[error("element {0:?} does not belong to the carrier")]
    ForeignElement(String),

    #[error("operands live on different carriers")]
    CarrierMismatch,

    #[error("{what} has size {size}, above the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("{set} is not a filter: {reason}")]
    NotAFilter { set: String, reason: String },

    #[error("invalid morphism data: {0}")]
    InvalidMorphism(String),

    #[error("image does not preserve finite meets ({0})")]
    ImageNotMeetPreserving(String),

    #[error("invalid preneighbourhood: {0}")]
    InvalidStructure(String),

    #[error("not a pseudo-frame set: {0}")]
    NotAPseudoFrameSet(String),

    #[error("not a Kuratowski interior: {0}")]
    NotKuratowski(String),

    #[error("not a neighbourhood: {0}")]
    NotANeighbourhood(String),

    #[error("structure has class {found}, but {required} is required")]
    WrongClass {
        found: &'static str,
        required: &'static str,
    },

    #[error("morphism does not have the preimage-preserves-joins property")]
    NoPpjWitness,

    #[error("not a preneighbourhood morphism: {0}")]
    NotAMorphism(String),

    #[error("operation requires a finite-set backend morphism")]
    BackendRequired,

    #[error("backend does not expose restrictions along subobjects")]
    BackendLacksRestrictions,

    #[error("not a frame homomorphism: {0}")]
    NotAFrameHom(String),

    #[error("invalid Heyting implication table: {0}")]
    InvalidImplication(String),

    #[error("invalid sublocale: {0}")]
    NotASublocale(String),

    #[error("invalid function: {0}")]
    InvalidFunction(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MissingBound {
    Meet,
    Join,
}

impl std::fmt::Display for MissingBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MissingBound::Meet => "meet",
            MissingBound::Join => "join",
        })
    }
}
