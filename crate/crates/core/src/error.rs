use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("Wigner parameter {name} = {value} must be greater than -1/2")]
    WignerRange { name: &'static str, value: String },

    #[error("Jacobi parameters must satisfy alpha > -1 and beta > -1 (got alpha = {alpha}, beta = {beta})")]
    JacobiRange { alpha: f64, beta: f64 },

    #[error("angular quantum number l = {ell} is not valid for a sector with epsilon = {epsilon}")]
    InvalidEll { ell: String, epsilon: i8 },

    #[error("degenerate angular eigenproblem: {0}")]
    DegenerateAngular(String),

    #[error("confluent hypergeometric function has a pole at b = {b} (a = {a})")]
    HypergeometricPole { a: f64, b: f64 },

    #[error("invalid oscillator scale: {0}")]
    InvalidScale(String),

    #[error("invalid discretization: {0}")]
    InvalidDiscretization(String),

    #[error("eigenvalue request invalid: {0}")]
    EigenRequest(String),

    #[error("bisection failed to converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("direct summation cut-off n_max = {n_max} leaves a tail above the requested bound")]
    TruncatedSum { n_max: usize },

    #[error("invalid thermal input: {0}")]
    ThermoInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
