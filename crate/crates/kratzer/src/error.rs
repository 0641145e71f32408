use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// a ≥ 0 leaves no bound states below the asymptote.
    #[error(
        "continuum regime: Coulomb-like coefficient a = {a} eV·Å must be negative for bound states"
    )]
    Continuum { a: f64 },

    #[error(
        "negative discriminant for ell = {ell}: b = {b} eV·Å² gives (2ℓ+1)² + 8μb/(ħc)² = {disc}"
    )]
    NegativeDiscriminant { ell: u32, b: f64, disc: f64 },

    #[error("unknown molecule '{name}'; available: {available}")]
    UnknownMolecule { name: String, available: String },

    #[error("config parse error at line {line}: {msg}")]
    Config { line: usize, msg: String },

    #[error("non-finite integrand sample at r = {r}")]
    NonFiniteSample { r: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the CLI maps this error to (2 = usage, 1 = runtime).
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::UnknownMolecule { .. } | Error::InvalidArgument(_) | Error::Config { .. } => 2,
            _ => 1,
        }
    }
}
