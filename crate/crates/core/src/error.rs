use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter {name} = {value} is out of range: {expected}")]
    OutOfRange {
        name: &'static str,
        value: u64,
        expected: &'static str,
    },

    #[error("invalid linear forest: {0}")]
    InvalidForest(String),

    #[error("graph order {order} exceeds the limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("graph6: {0}")]
    Graph6(#[from] crate::graph6::Graph6Error),

    #[error("no arrowing order found up to the cap r = {cap}")]
    CapacityExceeded {
        cap: usize,
        /// A graph on `cap` vertices avoiding both patterns, if any was found.
        largest_counterexample: Option<Box<crate::graph::SmallGraph>>,
    },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_range(
    name: &'static str,
    value: u64,
    ok: bool,
    expected: &'static str,
) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name,
            value,
            expected,
        })
    }
}
