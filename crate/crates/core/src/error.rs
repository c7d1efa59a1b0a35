use thiserror::Error;

/// Every failure the library can report.
///
/// The CLI renders these as `<name>: <message>` using [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{0}")]
    Domain(String),

    #[error("{value} is not positive (sign {sign}); only real generators are supported")]
    NonRealExtension { value: String, sign: i8 },

    #[error("{value} is a square (witness {witness}){}", root_note(.root))]
    NotAProperExtension {
        value: String,
        witness: String,
        /// For quadratic adjunction, the root that already lies in the field.
        root: Option<String>,
    },

    #[error("{value} is not a square in the current tower; extend it first with `adjoin {value}`")]
    NotASquareInTower { value: String },

    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },

    #[error("level {level} out of range 0..={max}")]
    LevelOutOfRange { level: usize, max: usize },

    #[error("expected {expected} coordinates, found {found}")]
    CoordinateLength { expected: usize, found: usize },

    #[error("invalid tower: {0}")]
    InvalidTower(String),

    #[error("{value} is not a root of the polynomial (value {residual})")]
    NotARoot { value: String, residual: String },

    #[error("expected a cubic, found degree {0}")]
    NotCubic(String),

    #[error("generator g{index} out of range (tower depth {depth})")]
    UnknownGenerator { index: usize, depth: usize },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("exponent {0} exceeds the limit of 64 in absolute value")]
    ExponentTooLarge(i64),

    #[error("unexpected character {found:?} at offset {offset}")]
    Lex { offset: usize, found: char },

    #[error("at offset {offset}: expected {expected}, found {found}")]
    Syntax {
        offset: usize,
        expected: String,
        found: String,
    },

    #[error("bad rational literal {0:?}")]
    BadRational(String),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Stable variant name used in rendered messages.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::Domain(_) => "DomainError",
            Error::NonRealExtension { .. } => "NonRealExtension",
            Error::NotAProperExtension { .. } => "NotAProperExtension",
            Error::NotASquareInTower { .. } => "NotASquareInTower",
            Error::LevelMismatch { .. } => "LevelMismatch",
            Error::LevelOutOfRange { .. } => "LevelOutOfRange",
            Error::CoordinateLength { .. } => "CoordinateLength",
            Error::InvalidTower(_) => "InvalidTower",
            Error::NotARoot { .. } => "NotARoot",
            Error::NotCubic(_) => "NotCubic",
            Error::UnknownGenerator { .. } => "UnknownGenerator",
            Error::UnknownName(_) => "UnknownName",
            Error::ExponentTooLarge(_) => "ExponentTooLarge",
            Error::Lex { .. } => "LexError",
            Error::Syntax { .. } => "SyntaxError",
            Error::BadRational(_) => "BadRational",
            Error::Format { .. } => "FormatError",
            Error::Io(_) => "IoError",
        }
    }

    /// True for I/O and file-format failures (exit status 2 in the CLI).
    pub fn is_io_or_format(&self) -> bool {
        matches!(self, Error::Io(_) | Error::Format { .. })
    }

    pub fn render(&self) -> String {
        format!("{}: {}", self.name(), self)
    }
}

fn root_note(root: &Option<String>) -> String {
    match root {
        Some(r) => format!("; root {r} is already in the field"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
