use serde::{Deserialize, Serialize};

use super::literal::{LiteralSet, Monomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Alphabet {
    /// `{x_1, …, x_n}`
    Plain,
    /// `{x_1, …, x_n, x̄_1, …, x̄_n}`
    Extended,
}

/// A squarefree monomial ideal given by a finite list of generators.
///
/// An empty generator list is the zero ideal; an empty generator makes it the whole ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    alphabet: Alphabet,
    n: usize,
    generators: Vec<Monomial>,
}

impl Ideal {
    pub fn new(alphabet: Alphabet, n: usize, generators: Vec<Monomial>) -> Result<Ideal> {
        for g in &generators {
            if g.var_bound() > n {
                return Err(Error::Validation(format!("generator {} mentions a variable beyond x{n}", g.product())));
            }
            if alphabet == Alphabet::Plain && !g.is_plain_only() {
                return Err(Error::Validation(format!("generator {} uses barred literals", g.product())));
            }
        }
        Ok(Ideal { alphabet, n, generators })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_empty())
    }

    pub(crate) fn with_generators(&self, generators: Vec<Monomial>) -> Ideal {
        Ideal { alphabet: self.alphabet, n: self.n, generators }
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.product()).collect();
        write!(f, "⟨{}⟩", gens.join(", "))
    }
}

/// Unsigned and signed min-sets of a data set.
///
/// Unsigned min-sets carry only plain literals. `signed_consistent` is false exactly when no
/// unate function fits the data; `signed_minsets` is then empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinSetReport {
    pub unsigned_minsets: Vec<LiteralSet>,
    pub signed_minsets: Vec<LiteralSet>,
    pub signed_consistent: bool,
}
