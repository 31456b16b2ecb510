use exactlin::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("word {word} exceeds the degree cap {cap}")]
    DegreeOverflow { word: String, cap: u32 },
    #[error("preset {0} has no antipode")]
    NotHopf(String),
    #[error("coefficient module is not {0}-stable")]
    NotStable(i64),
    #[error("coefficient module is not anti-Yetter-Drinfeld: {0}")]
    NotAyd(String),
    #[error("not a coideal: {0}")]
    NotCoideal(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("not a complex: {0}")]
    NotAComplex(String),
    #[error("not cocyclic: {0}")]
    NotCocyclic(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Result<T> = std::result::Result<T, HopfError>;
