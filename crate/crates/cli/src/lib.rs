//! Library side of the `cwcover` command: input parsing and reports.

pub mod input;
pub mod report;

use cw_core::Error;

/// Process exit status for a failed command: 2 when an internal
/// consistency check tripped, 1 for bad input.
pub fn exit_code(e: &Error) -> u8 {
    if e.is_guard() {
        2
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_errors_exit_with_two() {
        assert_eq!(exit_code(&Error::OracleMismatch("x".into())), 2);
        assert_eq!(exit_code(&Error::HodgeSumMismatch(0)), 2);
        assert_eq!(exit_code(&Error::NonInvariantSubspace("x".into())), 2);
        assert_eq!(exit_code(&Error::TrivialBranch(1)), 1);
        assert_eq!(exit_code(&Error::NoGenerators), 1);
    }
}
