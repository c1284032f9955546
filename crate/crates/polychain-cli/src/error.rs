use std::fmt;

/// CLI failure classification, mapped to exit codes in `main`:
/// `Usage` exits 64 (the request itself was malformed in a way argument
/// parsing could not catch), `Op` exits 1 (the request was well-formed
/// but could not be completed).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Op(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(message) | CliError::Op(message) => f.write_str(message),
        }
    }
}

impl std::error::Error for CliError {}

macro_rules! operational {
    ($($ty:ty),* $(,)?) => {$(
        impl From<$ty> for CliError {
            fn from(err: $ty) -> Self {
                CliError::Op(err.to_string())
            }
        }
    )*};
}

operational!(
    std::io::Error,
    serde_json::Error,
    csv::Error,
    polychain::chain::ChainError,
    polychain::chain::SpecParseError,
    polychain::network::NetworkError,
    polychain::resistance::ResistanceError,
    polychain::reduction::ReductionError,
    polychain::isomer::IsomerError,
    polychain::extremal::ExtremalError,
);
