use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid cluster: {0}")]
    InvalidCluster(String),
    #[error("energy {lambda} is within pole tolerance of the pole at {pole}")]
    PoleHit { lambda: f64, pole: f64 },
    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("coupling gamma01 must be nonzero")]
    DegenerateCoupling,
    #[error("invalid coupling: {0}")]
    InvalidCoupling(String),
    #[error("non-positive momentum k = {0}")]
    NonpositiveMomentum(f64),
    #[error("search window endpoint {0} sits on a pole")]
    WindowAtPole(f64),
    #[error("invalid window [{0}, {1}]")]
    InvalidWindow(f64, f64),
    #[error("energy {0} is not strictly inside an excited-chain band")]
    OutOfBand(f64),
    #[error("Q vanishes at energy {0}")]
    ZeroQ(f64),
    #[error("energy {0} lies inside a band (both Bloch roots unimodular)")]
    InBand(f64),
    #[error("gap must be positive, got {0}")]
    NonpositiveGap(f64),
    #[error("linear system is singular (condition estimate {condition:e})")]
    SingularSystem { condition: f64 },
    #[error("closed form not applicable: {0}")]
    OutOfDomain(String),
    #[error("closed-form denominator too small ({0:e})")]
    DenominatorSmall(f64),
    #[error("input must be positive: {0}")]
    NonpositiveInput(String),
    #[error("quadrature did not converge: {0}")]
    QuadratureFailure(String),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("unknown material `{0}`")]
    UnknownMaterial(String),
    #[error("material table: {0}")]
    Table(String),
}
