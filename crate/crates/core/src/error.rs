use thiserror::Error;

/// Errors surfaced by the engine.
///
/// Regime/argument rejections are contract checks on the caller's input;
/// `NegativeMultiplicity` and `NotATiltingClass` report that a computed
/// quantity violated a positivity constraint that holds for genuine
/// multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid regime: {0}")]
    InvalidRegime(String),

    #[error("laurent character is not symmetric under weight negation (offending weight {0})")]
    AsymmetricCharacter(i64),

    #[error("fusion barrier must be at least 2, got {0}")]
    BarrierTooSmall(u32),

    #[error("semisimple regime: tilting multiplicities equal Weyl multiplicities; use the Weyl grid")]
    SemisimpleTiltingGrid,

    #[error("operation requires a modular or mixed regime, got {0}")]
    RequiresModularRegime(String),

    #[error("negative multiplicity {value} at (n = {n}, m = {m}): c/d tables are inconsistent")]
    NegativeMultiplicity { n: u32, m: u32, value: String },

    #[error("generator {generator} is not the class of a tilting module: simple dimension at weight {weight} came out {value}")]
    NotATiltingClass {
        generator: String,
        weight: u32,
        value: String,
    },

    #[error("{0}")]
    Unsupported(String),
}
