use rayon::prelude::*;

use super::equation::CanonicalEquation;
use super::step::{tau_step, DetRelation};
use crate::error::Result;
use crate::hankel::hankel_det;
use crate::series::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub equation: CanonicalEquation,
    pub relation: DetRelation,
}

/// A chain of transformation steps from a starting equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauTrace {
    start: CanonicalEquation,
    steps: Vec<TraceStep>,
    stop: Option<String>,
}

impl TauTrace {
    /// Trace with no steps.
    pub fn new(start: CanonicalEquation) -> Self {
        TauTrace {
            start,
            steps: Vec::new(),
            stop: None,
        }
    }

    pub fn start(&self) -> &CanonicalEquation {
        &self.start
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Why iteration ended before the requested number of steps, if it did.
    pub fn stop_reason(&self) -> Option<&str> {
        self.stop.as_deref()
    }

    /// Equation `i`, where `0` is the start and `i` is the result of step `i`.
    pub fn equation(&self, i: usize) -> &CanonicalEquation {
        if i == 0 {
            &self.start
        } else {
            &self.steps[i - 1].equation
        }
    }

    pub fn equations(&self) -> impl Iterator<Item = &CanonicalEquation> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.equation))
    }

    pub fn final_equation(&self) -> &CanonicalEquation {
        self.equation(self.steps.len())
    }

    /// Total Hankel-order offset accumulated by the first `upto` steps.
    pub fn offset_through(&self, upto: usize) -> usize {
        self.steps[..upto].iter().map(|s| s.relation.offset).sum()
    }

    /// `det H_n` of equation `from`'s series, pulled back through the
    /// relations of steps `from+1..=to` from `det H_m` of equation `to`.
    pub fn pull_back(
        &self,
        from: usize,
        to: usize,
        n: usize,
        base: &dyn Fn(usize) -> Result<Rational>,
    ) -> Result<Rational> {
        if from == to {
            return base(n);
        }
        self.steps[from]
            .relation
            .pull_back(n, |m| self.pull_back(from + 1, to, m, base))
    }
}

/// Applies up to `steps` transformations, stopping early (with the reason
/// recorded) if an equation cannot be transformed.
pub fn iterate_tau(eq: &CanonicalEquation, steps: usize) -> TauTrace {
    assert!(steps > 0, "iterate_tau needs at least one step");
    let mut trace = TauTrace::new(eq.clone());
    for _ in 0..steps {
        match tau_step(trace.final_equation()) {
            Ok((equation, relation)) => trace.steps.push(TraceStep { equation, relation }),
            Err(e) => {
                trace.stop = Some(e.to_string());
                break;
            }
        }
    }
    trace
}

/// `det H_n` of an equation's series for `n = 0..=n_max`, computed directly.
pub fn direct_dets(eq: &CanonicalEquation, n_max: usize) -> Result<Vec<Rational>> {
    let f = eq.series(2 * n_max + 1)?;
    (0..=n_max)
        .into_par_iter()
        .map(|n| hankel_det(&f, n))
        .collect()
}

/// `det H_n` of the starting series for `n = 0..=n_max`, obtained from the
/// final equation's determinants through the composed step relations.
pub fn replay_trace(trace: &TauTrace, n_max: usize) -> Result<Vec<Rational>> {
    let base = direct_dets(trace.final_equation(), n_max)?;
    let lookup = |m: usize| Ok(base[m].clone());
    (0..=n_max)
        .map(|n| trace.pull_back(0, trace.len(), n, &lookup))
        .collect()
}
