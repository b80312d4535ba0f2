use catkit::categorify::CategorifyError;
use catkit::category::CategoryError;
use catkit::cohomology::CohomologyError;
use catkit::extension::ExtensionError;
use catkit::group::GroupError;
use catkit::io::IoError;
use catkit::nerve::NerveError;
use catkit::topology::TopologyError;
use thiserror::Error;

/// Exit status 1: bad input or a failed check; 2: enumeration bound hit.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] IoError),
    #[error("{0}")]
    Validation(String),
    #[error("{0}; raise --max-candidates or CATKIT_MAX_CANDIDATES")]
    SizeLimit(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::SizeLimit(_) => 2,
            _ => 1,
        }
    }
}

fn classify(size_limit: bool, e: impl std::fmt::Display) -> CliError {
    if size_limit {
        CliError::SizeLimit(e.to_string())
    } else {
        CliError::Validation(e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        classify(matches!(e, GroupError::SizeLimit { .. }), e)
    }
}

impl From<CategoryError> for CliError {
    fn from(e: CategoryError) -> Self {
        classify(matches!(e, CategoryError::SizeLimit { .. }), e)
    }
}

impl From<CategorifyError> for CliError {
    fn from(e: CategorifyError) -> Self {
        match e {
            CategorifyError::Group(e) => e.into(),
            CategorifyError::Category(e) => e.into(),
            e => CliError::Validation(e.to_string()),
        }
    }
}

impl From<ExtensionError> for CliError {
    fn from(e: ExtensionError) -> Self {
        match e {
            ExtensionError::Group(e) => e.into(),
            e => classify(matches!(e, ExtensionError::SizeLimit { .. }), e),
        }
    }
}

impl From<CohomologyError> for CliError {
    fn from(e: CohomologyError) -> Self {
        classify(matches!(e, CohomologyError::SizeLimit { .. }), e)
    }
}

impl From<NerveError> for CliError {
    fn from(e: NerveError) -> Self {
        classify(matches!(e, NerveError::SizeLimit { .. }), e)
    }
}

impl From<TopologyError> for CliError {
    fn from(e: TopologyError) -> Self {
        CliError::Validation(e.to_string())
    }
}
