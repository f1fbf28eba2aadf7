use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid symbol name `{0}`")]
    InvalidSymbol(String),
    #[error("conjugation mismatch: {0}")]
    ConjugationMismatch(String),
    #[error("polynomial has symbolic coefficients: {0}")]
    SymbolicCoefficient(String),
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("slot variance mismatch: {0}")]
    VarianceMismatch(String),
    #[error("slot primedness mismatch: {0}")]
    PrimednessMismatch(String),
    #[error("symmetrization over slots of mixed type")]
    MixedSlots,
    #[error("spinor signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("slot index {0} out of range")]
    SlotOutOfRange(usize),
    #[error("box action needs a target with lower slots only")]
    UpperSlot,
    #[error("dyad transform is not unimodular (det = {0})")]
    NotUnimodular(String),
    #[error("unknown Segre pattern `{0}`")]
    UnknownPattern(String),
    #[error("unknown Petrov type `{0}`")]
    UnknownPetrov(String),
    #[error("symbolic and sampled ranks disagree: symbolic {symbolic}, sampled {sampled}")]
    InconsistentInstantiationRank { symbolic: usize, sampled: usize },
    #[error("no admissible instantiation found for {0}")]
    NoAdmissibleInstance(String),
    #[error("Petrov type of symbolic Weyl spinor is undetermined; supply a petrov_hint")]
    PetrovUndetermined,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("Ricci spinor is not Hermitian: {0}")]
    Hermiticity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
