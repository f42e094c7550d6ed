//! Finite-domain search over a [`ConstraintModel`].
//!
//! Depth-first search with ascending value order, first-fail variable
//! selection and full propagation at every node. With an objective the search
//! runs branch-and-bound: each incumbent raises the lower bound on the score
//! and the search continues from where it stood.

mod check;
mod oracle;
pub mod propagate;

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use indexmap::IndexMap;
use serde::Serialize;

use crate::domain::DomainSet;
use crate::graph::NodeId;
use crate::grid::Slot;
use crate::model::ConstraintModel;

pub use check::{check_assignment, Violation};
pub use oracle::{brute_force_oracle, OracleSolution, TooLarge, ORACLE_LIMIT};
pub use propagate::{propagate_all_different, propagate_capacity, Failure};

use propagate::{Bounds, Engine, State};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueOrder {
    #[default]
    Ascending,
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub time_limit: Option<Duration>,
    /// Stop after this many solutions (incumbents when optimizing).
    pub max_solutions: Option<usize>,
    /// Maximize the objective when the model has one.
    pub optimize: bool,
    pub value_order: ValueOrder,
    /// Checked between search nodes; setting it stops the search.
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            time_limit: None,
            max_solutions: None,
            optimize: true,
            value_order: ValueOrder::Ascending,
            cancel: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SearchStats {
    pub nodes_explored: u64,
    pub failures: u64,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
    pub proven_optimal: bool,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl SearchStats {
    /// Counters without wall-clock time, for reproducibility checks.
    pub fn counters(&self) -> (u64, u64, bool) {
        (self.nodes_explored, self.failures, self.proven_optimal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    /// Slot per event node, in variable order.
    pub assignment: IndexMap<NodeId, Slot>,
    pub score: u32,
    /// Statistics at the moment the solution was found.
    pub stats: SearchStats,
}

impl Solution {
    /// Slots in variable order.
    pub fn slots(&self) -> Vec<Slot> {
        self.assignment.values().copied().collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    /// Optimizing search exhausted: the last solution is optimal.
    Optimal,
    /// At least one solution, search stopped at `max_solutions` or ran to
    /// completion without an objective.
    Feasible,
    /// Search exhausted without a solution.
    Unsat,
    /// Deadline or cancellation hit; any solutions found so far are kept.
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub solutions: Vec<Solution>,
    pub stats: SearchStats,
}

impl SolveOutcome {
    pub fn best(&self) -> Option<&Solution> {
        self.solutions.last()
    }
}

/// A search candidate for [`select_variable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Candidate {
    pub index: usize,
    pub size: u32,
    pub degree: u32,
}

/// First-fail with constraint-count tie-break: smallest domain, then most
/// constraints, then smallest index.
pub fn select_variable(candidates: impl IntoIterator<Item = Candidate>) -> Option<usize> {
    candidates
        .into_iter()
        .min_by_key(|c| (c.size, std::cmp::Reverse(c.degree), c.index))
        .map(|c| c.index)
}

enum Branch {
    Event(usize),
    Aux(usize),
}

struct Frame {
    state: State,
    branch: Branch,
    remaining: DomainSet,
    // Auxiliary branches iterate lo..=hi.
    next_aux: u32,
}

struct Search<'m> {
    model: &'m ConstraintModel,
    engine: Engine<'m>,
    degrees: Vec<u32>,
    config: &'m SolverConfig,
    optimize: bool,
    start: Instant,
    deadline: Option<Instant>,
    stats: SearchStats,
    solutions: Vec<Solution>,
    bound: u32,
}

/// Solves `model`. Never fails: infeasibility and timeouts are statuses.
pub fn solve(model: &ConstraintModel, config: &SolverConfig) -> SolveOutcome {
    let start = Instant::now();
    let mut search = Search {
        model,
        engine: Engine::new(model),
        degrees: model.static_degrees(),
        config,
        optimize: config.optimize && model.objective.is_some(),
        start,
        deadline: config.time_limit.map(|t| start + t),
        stats: SearchStats::default(),
        solutions: Vec::new(),
        bound: 0,
    };
    let status = search.run();
    search.stats.elapsed = start.elapsed();
    SolveOutcome {
        status,
        solutions: search.solutions,
        stats: search.stats,
    }
}

enum Stop {
    Exhausted,
    Limit,
    Interrupted,
}

impl Search<'_> {
    fn run(&mut self) -> SolveStatus {
        let stop = self.dfs();
        if matches!(stop, Stop::Exhausted) {
            self.stats.proven_optimal = true;
        }
        match stop {
            Stop::Interrupted => SolveStatus::Timeout,
            _ if self.solutions.is_empty() => SolveStatus::Unsat,
            Stop::Exhausted if self.optimize => SolveStatus::Optimal,
            _ => SolveStatus::Feasible,
        }
    }

    fn interrupted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
            || self
                .config
                .cancel
                .as_ref()
                .is_some_and(|c| c.load(Ordering::Relaxed))
    }

    fn score_of(&self, state: &State) -> u32 {
        self.model.objective.map(|o| state.aux[o.0].lo).unwrap_or(0)
    }

    /// Applies the branch-and-bound cut; returns the constraints to wake.
    fn apply_bound(&self, state: &mut State) -> Result<Vec<usize>, Failure> {
        let Some(objective) = self.model.objective.filter(|_| self.optimize) else {
            return Ok(Vec::new());
        };
        let b = &mut state.aux[objective.0];
        if self.bound <= b.lo {
            return Ok(Vec::new());
        }
        if self.bound > b.hi {
            return Err(Failure);
        }
        b.lo = self.bound;
        Ok(self.engine.aux_watchers(objective.0).to_vec())
    }

    fn next_branch(&self, state: &State) -> Option<Branch> {
        let candidates = state
            .events
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_singleton())
            .map(|(index, d)| Candidate {
                index,
                size: d.len(),
                degree: self.degrees[index],
            });
        if let Some(v) = select_variable(candidates) {
            return Some(Branch::Event(v));
        }
        // Auxiliaries are normally fixed by propagation once events are.
        state.aux.iter().position(|b| !b.is_fixed()).map(Branch::Aux)
    }

    fn record(&mut self, state: &State) -> bool {
        let assignment = self
            .model
            .vars
            .iter()
            .zip(&state.events)
            .map(|(v, d)| (v.event.clone(), d.value().expect("all events fixed")))
            .collect();
        let score = self.score_of(state);
        let mut stats = self.stats;
        stats.elapsed = self.start.elapsed();
        self.solutions.push(Solution {
            assignment,
            score,
            stats,
        });
        if self.optimize {
            self.bound = score + 1;
        }
        self.config
            .max_solutions
            .is_some_and(|m| self.solutions.len() >= m)
    }

    /// Explores a freshly created node; returns the frame to push, if any.
    fn expand(&mut self, mut state: State, seeds: Vec<usize>) -> Result<Option<Frame>, Stop> {
        self.stats.nodes_explored += 1;
        let propagated = self
            .apply_bound(&mut state)
            .and_then(|extra| self.engine.propagate(&mut state, seeds.into_iter().chain(extra)));
        if propagated.is_err() {
            self.stats.failures += 1;
            return Ok(None);
        }
        match self.next_branch(&state) {
            None => {
                if self.record(&state) {
                    Err(Stop::Limit)
                } else {
                    Ok(None)
                }
            }
            Some(branch) => {
                let (remaining, next_aux) = match branch {
                    Branch::Event(v) => (state.events[v], 0),
                    Branch::Aux(a) => (DomainSet::EMPTY, state.aux[a].lo),
                };
                Ok(Some(Frame {
                    state,
                    branch,
                    remaining,
                    next_aux,
                }))
            }
        }
    }

    fn dfs(&mut self) -> Stop {
        if self.interrupted() {
            return Stop::Interrupted;
        }
        let root = State::initial(self.model);
        let all = (0..self.model.constraints.len()).collect();
        let mut stack = match self.expand(root, all) {
            Err(stop) => return stop,
            Ok(None) => return Stop::Exhausted,
            Ok(Some(frame)) => vec![frame],
        };
        while let Some(top) = stack.last_mut() {
            if self.interrupted() {
                return Stop::Interrupted;
            }
            let mut child = top.state.clone();
            let seeds = match top.branch {
                Branch::Event(v) => {
                    let Some(value) = top.remaining.min() else {
                        stack.pop();
                        continue;
                    };
                    top.remaining.remove(value);
                    child.events[v] = DomainSet::singleton(value);
                    self.engine.event_watchers(v).to_vec()
                }
                Branch::Aux(a) => {
                    let value = top.next_aux;
                    if value > top.state.aux[a].hi {
                        stack.pop();
                        continue;
                    }
                    top.next_aux += 1;
                    child.aux[a] = Bounds::new(value, value);
                    self.engine.aux_watchers(a).to_vec()
                }
            };
            match self.expand(child, seeds) {
                Err(stop) => return stop,
                Ok(None) => {}
                Ok(Some(frame)) => stack.push(frame),
            }
        }
        Stop::Exhausted
    }
}
