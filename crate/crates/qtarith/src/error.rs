use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QtError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {q}, t = {t}")]
    Pole { q: String, t: String },
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
