//! Variable registries shared by polynomials.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use super::ExactError;

static NEXT_RING: AtomicU64 = AtomicU64::new(1);

/// Index of a variable inside its ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub usize);

struct RingData {
    id: u64,
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered list of named variables. Cloning is cheap; two rings are the
/// same context only if one was cloned from the other.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ring, ExactError> {
        let mut index = HashMap::new();
        let mut owned = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref().to_string();
            if n.is_empty() || index.insert(n.clone(), i).is_some() {
                return Err(ExactError::BadVariable(n));
            }
            owned.push(n);
        }
        Ok(Ring(Arc::new(RingData {
            id: NEXT_RING.fetch_add(1, Ordering::Relaxed),
            names: owned,
            index,
        })))
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn name(&self, v: VarId) -> &str {
        &self.0.names[v.0]
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn var(&self, name: &str) -> Option<VarId> {
        self.0.index.get(name).copied().map(VarId)
    }

    /// Like [`Ring::var`] but panics on unknown names. For names fixed in code.
    pub fn v(&self, name: &str) -> VarId {
        self.var(name)
            .unwrap_or_else(|| panic!("no variable {name} in ring"))
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> {
        (0..self.len()).map(VarId)
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn check_same(&self, other: &Ring) -> Result<(), ExactError> {
        if self == other {
            Ok(())
        } else {
            Err(ExactError::Context)
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring#{}{:?}", self.0.id, self.0.names)
    }
}
