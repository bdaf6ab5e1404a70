use crate::error::{Error, Result};

/// Largest vertex count any graph in this crate can hold.
pub const MAX_VERTICES: usize = 64;

/// Resource limits for the exponential-time routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Vertex limit for exact (NP-hard) computations.
    pub exact_vertices: usize,
    /// Largest fold count accepted by the b-fold routines.
    pub max_fold: usize,
    /// Largest order for exhaustive labeled-graph enumeration.
    pub enumeration_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exact_vertices: 20,
            max_fold: 4,
            enumeration_order: 7,
        }
    }
}

impl Limits {
    pub fn with_exact_vertices(mut self, n: usize) -> Self {
        self.exact_vertices = n;
        self
    }

    pub(crate) fn check_exact(&self, what: &'static str, n: usize) -> Result<()> {
        let limit = self.exact_vertices.min(MAX_VERTICES);
        if n > limit {
            return Err(Error::LimitExceeded {
                what,
                size: n,
                limit,
            });
        }
        Ok(())
    }
}
