use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default cap on cliques visited by one enumeration (or subproblems
/// created by one recurrence).
pub const DEFAULT_CLIQUE_BUDGET: u64 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueBudget(pub u64);

/// Environment variable overriding [`DEFAULT_CLIQUE_BUDGET`].
pub const BUDGET_ENV: &str = "BCLIQUE_BUDGET";

/// Reads [`BUDGET_ENV`]; a malformed value falls back to the default here
/// and is rejected by [`CliqueBudget::from_env`].
impl Default for CliqueBudget {
    fn default() -> Self {
        CliqueBudget::from_env().unwrap_or(CliqueBudget(DEFAULT_CLIQUE_BUDGET))
    }
}

impl CliqueBudget {
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Err(_) => Ok(CliqueBudget(DEFAULT_CLIQUE_BUDGET)),
            Ok(v) => match v.trim().parse::<u64>() {
                Ok(n) if n > 0 => Ok(CliqueBudget(n)),
                _ => Err(Error::Budget(format!(
                    "{BUDGET_ENV} must be a positive integer, got {v:?}"
                ))),
            },
        }
    }

    pub(crate) fn exceeded(self, what: &str) -> Error {
        Error::Budget(format!("{what} exceeded the limit of {}", self.0))
    }
}

/// Calls `visit` on every clique of `g`, including the empty clique, in
/// lexicographic order of sorted index lists. Returns the clique count.
pub fn for_each_clique(
    g: &Graph,
    budget: CliqueBudget,
    mut visit: impl FnMut(VertexSet),
) -> Result<u64> {
    let mut count = 0u64;
    extend(g, VertexSet::EMPTY, g.vertices(), budget, &mut count, &mut visit)?;
    Ok(count)
}

fn extend(
    g: &Graph,
    clique: VertexSet,
    candidates: VertexSet,
    budget: CliqueBudget,
    count: &mut u64,
    visit: &mut impl FnMut(VertexSet),
) -> Result<()> {
    if *count >= budget.0 {
        return Err(budget.exceeded("clique enumeration"));
    }
    *count += 1;
    visit(clique);
    for v in candidates {
        let next = candidates.after(v).intersection(g.neighbors(v));
        extend(g, clique.with(v), next, budget, count, visit)?;
    }
    Ok(())
}

/// Every clique of `g`, in the order of [`for_each_clique`].
pub fn enumerate_cliques(g: &Graph, budget: CliqueBudget) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for_each_clique(g, budget, |k| out.push(k))?;
    Ok(out)
}
