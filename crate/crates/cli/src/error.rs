//! CLI error type and the exit-code contract.

use thiserror::Error;

/// Everything the CLI can fail with, each mapped to a documented exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// An error bubbled up from the interpolation library.
    #[error("{0}")]
    Core(#[from] kli::Error),

    /// A value the user supplied could not be parsed or validated.
    #[error("{}{msg}", match line { Some(n) => format!("line {n}: "), None => String::new() })]
    Parse {
        /// 1-based line number when the value came from a pairs file.
        line: Option<usize>,
        /// What was wrong with it.
        msg: String,
    },

    /// Flags were combined in an unsupported way.
    #[error("{0}")]
    Usage(String),

    /// Reading input or writing output failed.
    #[error("{0}")]
    Io(#[from] std::io::Error),

    /// Serializing a JSON document failed.
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Exit code for this error: 3 for interpolation failures
    /// (non-convergence, antipodal endpoints), 2 for everything else
    /// (invalid input, bad flag combinations, I/O).
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(kli::Error::NonConvergence { .. })
            | CliError::Core(kli::Error::AntipodalInput { .. }) => 3,
            _ => 2,
        }
    }

    /// True when the failure is a closed pipe on our output (e.g. piping
    /// into `head`), which is a silent success by Unix convention.
    pub fn is_broken_pipe(&self) -> bool {
        match self {
            CliError::Io(e) => e.kind() == std::io::ErrorKind::BrokenPipe,
            CliError::Json(e) => e.io_error_kind() == Some(std::io::ErrorKind::BrokenPipe),
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_failures_exit_3_validation_exits_2() {
        assert_eq!(
            CliError::Core(kli::Error::NonConvergence { t_max: 1.0 }).exit_code(),
            3
        );
        assert_eq!(
            CliError::Core(kli::Error::AntipodalInput { dot: -1.0 }).exit_code(),
            3
        );
        assert_eq!(
            CliError::Core(kli::Error::NonUnitQuaternion {
                norm: 0.5,
                tolerance: 1e-6
            })
            .exit_code(),
            2
        );
        assert_eq!(
            CliError::Parse {
                line: Some(3),
                msg: "bad".into()
            }
            .exit_code(),
            2
        );
        assert_eq!(CliError::Usage("bad flags".into()).exit_code(), 2);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let e = CliError::Parse {
            line: Some(4),
            msg: "expected 8 values".into(),
        };
        assert_eq!(e.to_string(), "line 4: expected 8 values");
        let e = CliError::Parse {
            line: None,
            msg: "expected 4 values".into(),
        };
        assert_eq!(e.to_string(), "expected 4 values");
    }
}
