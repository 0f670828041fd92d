//! Search budgets and cooperative interruption.
//!
//! Budgets bound three things: the class index `n` a search may target, the
//! number of search nodes visited, and wall-clock time. The first two are
//! enforced here. Wall clocks are not available to this crate, so the time
//! cap is carried as data and enforced through an [`Interrupt`] implementation
//! supplied by the embedding (the CLI installs a deadline-based one); a search
//! that trips any limit aborts with an error rather than returning a partial
//! result.

use core::sync::atomic::{AtomicU64, Ordering};
use core::time::Duration;

use crate::error::{BudgetLimit, Error, Result};

/// Limits governing backtracking searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest admissible class index (Frobenius number, maximum primitive,
    /// or genus) for enumeration entry points.
    pub max_n: u32,
    /// Cap on visited search nodes, across all worker threads of one run.
    pub node_cap: Option<u64>,
    /// Wall-clock cap; enforced only when an [`Interrupt`] source derived
    /// from it is attached to the [`SearchContext`].
    pub time_cap: Option<Duration>,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_n: 45,
            node_cap: None,
            time_cap: Some(Duration::from_secs(600)),
        }
    }
}

impl EnumerationBudget {
    /// No limits at all; for oracles and tests on small inputs.
    pub fn unlimited() -> Self {
        EnumerationBudget { max_n: u32::MAX, node_cap: None, time_cap: None }
    }

    pub fn with_max_n(mut self, max_n: u32) -> Self {
        self.max_n = max_n;
        self
    }

    pub fn with_node_cap(mut self, cap: u64) -> Self {
        self.node_cap = Some(cap);
        self
    }
}

/// Cooperative stop signal polled by long searches.
pub trait Interrupt: Sync {
    fn interrupted(&self) -> bool;
}

/// The never-firing interrupt.
impl Interrupt for () {
    fn interrupted(&self) -> bool {
        false
    }
}

/// Shared state of one logical enumeration run: the budget, an optional
/// interrupt source, and the global node counter. A single context may be
/// shared by several worker threads enumerating disjoint search prefixes;
/// the node cap then applies to their combined work.
pub struct SearchContext<'a> {
    budget: EnumerationBudget,
    interrupt: Option<&'a dyn Interrupt>,
    nodes: AtomicU64,
}

impl SearchContext<'static> {
    pub fn new(budget: EnumerationBudget) -> Self {
        SearchContext { budget, interrupt: None, nodes: AtomicU64::new(0) }
    }

    /// Context for small exact computations and tests.
    pub fn unlimited() -> Self {
        SearchContext::new(EnumerationBudget::unlimited())
    }
}

impl<'a> SearchContext<'a> {
    pub fn with_interrupt(budget: EnumerationBudget, interrupt: &'a dyn Interrupt) -> Self {
        SearchContext { budget, interrupt: Some(interrupt), nodes: AtomicU64::new(0) }
    }

    pub fn budget(&self) -> &EnumerationBudget {
        &self.budget
    }

    /// Total nodes charged so far across all threads of this run.
    pub fn nodes_visited(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    /// Gate an enumeration entry point on `max_n`.
    pub(crate) fn admit(&self, requested: u32) -> Result<()> {
        if requested > self.budget.max_n {
            return Err(Error::BudgetExceeded(BudgetLimit::MaxN {
                requested,
                max_n: self.budget.max_n,
            }));
        }
        Ok(())
    }

    /// Charge a batch of visited nodes and poll the caps. Called roughly once
    /// per thousand nodes, so the atomic and the interrupt poll stay cheap.
    pub(crate) fn charge(&self, batch: u64) -> Result<()> {
        let total = self.nodes.fetch_add(batch, Ordering::Relaxed) + batch;
        if let Some(cap) = self.budget.node_cap {
            if total > cap {
                return Err(Error::BudgetExceeded(BudgetLimit::NodeCap { cap }));
            }
        }
        if let Some(intr) = self.interrupt {
            if intr.interrupted() {
                return Err(Error::BudgetExceeded(BudgetLimit::Interrupted));
            }
        }
        Ok(())
    }
}
