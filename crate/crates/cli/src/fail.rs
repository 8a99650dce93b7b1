//! Error-to-exit-code mapping.
//!
//! The binary distinguishes four outcomes:
//!
//! * `0` — the command ran and, for verification commands, the claim held;
//! * `1` — a verified-claim failure: counterexamples to the exhaustive screen,
//!   or a lemma check that came back false;
//! * `2` — bad input: malformed flags or files, out-of-range parameters, and
//!   unmet preconditions (the question was not well-posed);
//! * `3` — a resource cap was hit before the computation finished (budget,
//!   closure cap, or search cap). Nothing is claimed either way.

use modp_lab::matgroup::{
    FieldError, GenFileError, GroupError, MatrixError, MonomialError, PairError, WeightError,
};
use modp_lab::{ParamError, ProfileError, RepError, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// A terminal failure: message for stderr plus the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: i32,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Failure {
        Failure {
            message: message.into(),
            code: EXIT_INPUT,
        }
    }
}

impl From<ParamError> for Failure {
    fn from(err: ParamError) -> Failure {
        Failure::input(err.to_string())
    }
}

impl From<ProfileError> for Failure {
    fn from(err: ProfileError) -> Failure {
        Failure::input(err.to_string())
    }
}

impl From<RepError> for Failure {
    fn from(err: RepError) -> Failure {
        Failure::input(err.to_string())
    }
}

impl From<VerifyError> for Failure {
    fn from(err: VerifyError) -> Failure {
        let code = match err {
            VerifyError::BudgetExceeded { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Failure {
            message: err.to_string(),
            code,
        }
    }
}

impl From<FieldError> for Failure {
    fn from(err: FieldError) -> Failure {
        Failure::input(err.to_string())
    }
}

impl From<MatrixError> for Failure {
    fn from(err: MatrixError) -> Failure {
        Failure::input(err.to_string())
    }
}

impl From<GenFileError> for Failure {
    fn from(err: GenFileError) -> Failure {
        Failure::input(err.to_string())
    }
}

impl From<GroupError> for Failure {
    fn from(err: GroupError) -> Failure {
        let code = match err {
            GroupError::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Failure {
            message: err.to_string(),
            code,
        }
    }
}

impl From<PairError> for Failure {
    fn from(err: PairError) -> Failure {
        let code = match &err {
            PairError::CapExceeded { .. }
            | PairError::PairwiseCheckTooLarge { .. }
            | PairError::SearchSpaceTooLarge { .. } => EXIT_CAP,
            PairError::Group(inner) => match inner {
                GroupError::CapExceeded { .. } => EXIT_CAP,
                _ => EXIT_INPUT,
            },
            _ => EXIT_INPUT,
        };
        Failure {
            message: err.to_string(),
            code,
        }
    }
}

impl From<MonomialError> for Failure {
    fn from(err: MonomialError) -> Failure {
        let code = match &err {
            MonomialError::Group(GroupError::CapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Failure {
            message: err.to_string(),
            code,
        }
    }
}

impl From<WeightError> for Failure {
    fn from(err: WeightError) -> Failure {
        let code = match err {
            WeightError::SearchTooLarge { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Failure {
            message: err.to_string(),
            code,
        }
    }
}
