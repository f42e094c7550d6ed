//! Textual rendering of a [`ConstraintModel`].
//!
//! One statement per line, no indentation, every statement ends with a comma
//! and the final `labeling` line ends with a period:
//!
//! ```text
//! domain([MATHL1, PHYSICSL1], 0, 29),
//! LECTURER1 = [MATHL1, PHYSICSL1],
//! all_different(LECTURER1),
//! L = [MATHL1, PHYSICSL1],
//! labeling([ffc], L).
//! ```
//!
//! Declarations come first (event variables, then auxiliary variables), then
//! each resource list followed by its `all_different`, then the remaining
//! constraints in model order.

use std::collections::BTreeMap;
use std::ops::Range;

use crate::model::{AuxId, Constraint, ConstraintModel, VarId};
use crate::naming::Namer;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgramText {
    pub text: String,
    /// Lines (0-based, half-open) produced by each constraint, keyed by its
    /// index in the model.
    pub line_index: BTreeMap<usize, Range<usize>>,
}

impl ProgramText {
    pub fn lines(&self) -> impl Iterator<Item = &str> {
        self.text.lines()
    }
}

struct Writer<'m> {
    model: &'m ConstraintModel,
    lines: Vec<String>,
    line_index: BTreeMap<usize, Range<usize>>,
    names: Namer,
}

pub fn emit(model: &ConstraintModel) -> ProgramText {
    let mut names = Namer::new();
    for name in model
        .vars
        .iter()
        .map(|v| &v.name)
        .chain(model.aux.iter().map(|a| &a.name))
        .chain(model.lists.iter().map(|l| &l.name))
    {
        names.reserve(name);
    }
    let mut w = Writer {
        model,
        lines: Vec::new(),
        line_index: BTreeMap::new(),
        names,
    };
    w.declarations();
    w.lists();
    for (i, c) in model.constraints.iter().enumerate() {
        if !matches!(c, Constraint::AllDifferent(_)) {
            w.constraint(i, c);
        }
    }
    w.labeling();
    ProgramText {
        text: w.lines.join("\n"),
        line_index: w.line_index,
    }
}

fn join<I: IntoIterator<Item = S>, S: AsRef<str>>(items: I, sep: &str) -> String {
    items.into_iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().join(sep)
}

impl Writer<'_> {
    fn var(&self, v: VarId) -> &str {
        &self.model.vars[v.0].name
    }

    fn aux(&self, a: AuxId) -> &str {
        &self.model.aux[a.0].name
    }

    fn push(&mut self, line: String) {
        self.lines.push(line);
    }

    /// Groups variables sharing the same bounds into one `domain` line, in
    /// order of first appearance.
    fn domain_lines(&mut self, entries: Vec<(String, (u32, u32))>) {
        let mut groups: Vec<((u32, u32), Vec<String>)> = Vec::new();
        for (name, bounds) in entries {
            match groups.iter_mut().find(|(b, _)| *b == bounds) {
                Some((_, names)) => names.push(name),
                None => groups.push((bounds, vec![name])),
            }
        }
        for ((lo, hi), names) in groups {
            self.push(format!("domain([{}], {lo}, {hi}),", join(&names, ", ")));
        }
    }

    fn declarations(&mut self) {
        let model = self.model;
        let events = model
            .vars
            .iter()
            .map(|v| {
                // An empty domain prints as an empty interval.
                let bounds = v.domain.min().zip(v.domain.max()).unwrap_or((1, 0));
                (v.name.clone(), bounds)
            })
            .collect();
        self.domain_lines(events);
        for v in &model.vars {
            if !v.domain.is_contiguous() {
                let (lo, hi) = (v.domain.min().unwrap(), v.domain.max().unwrap());
                let holes: Vec<String> = (lo..=hi)
                    .filter(|s| !v.domain.contains(*s))
                    .map(|s| s.to_string())
                    .collect();
                self.push(format!("remove({}, [{}]),", v.name, holes.join(", ")));
            }
        }
        let aux = model.aux.iter().map(|a| (a.name.clone(), (a.lo, a.hi))).collect();
        self.domain_lines(aux);
    }

    fn lists(&mut self) {
        let model = self.model;
        for (id, list) in model.lists.iter().enumerate() {
            let members = join(list.members.iter().map(|m| self.var(*m)), ", ");
            self.push(format!("{} = [{}],", list.name, members));
            for (i, c) in model.constraints.iter().enumerate() {
                if matches!(c, Constraint::AllDifferent(l) if l.0 == id) {
                    self.constraint(i, c);
                }
            }
        }
    }

    fn constraint(&mut self, index: usize, c: &Constraint) {
        let start = self.lines.len();
        let model = self.model;
        match c {
            Constraint::AllDifferent(l) => {
                self.push(format!("all_different({}),", model.lists[l.0].name));
            }
            Constraint::CapacityPerSlot { vars, limit, .. } => {
                let ends: Vec<String> = vars
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        let base = format!("{}E{i}", self.var(*v));
                        self.names.fresh(&base)
                    })
                    .collect();
                let total = model.grid.total_slots();
                self.push(format!("domain([{}], 1, {total}),", ends.join(", ")));
                let tasks = vars
                    .iter()
                    .zip(&ends)
                    .enumerate()
                    .map(|(i, (v, end))| format!("task({}, 1, {end}, 1, {i})", self.var(*v)));
                self.push(format!(
                    "cumulative([{}],[limit({limit}),global(true)]),",
                    join(tasks, ", ")
                ));
            }
            Constraint::CountEq { list, value, count } => {
                self.push(format!("count({value}, {}, {}),", model.lists[list.0].name, self.aux(*count)));
            }
            Constraint::CountInterval { list, lo, hi, count } => {
                self.push(format!(
                    "count_interval({lo}, {hi}, {}, {}),",
                    model.lists[list.0].name,
                    self.aux(*count)
                ));
            }
            Constraint::ReifyIsZero { count, flag } => {
                self.push(format!("{} #= 0 #<=> {},", self.aux(*count), self.aux(*flag)));
            }
            Constraint::ReifyNonZero { count, flag } => {
                self.push(format!("{} #\\= 0 #<=> {},", self.aux(*count), self.aux(*flag)));
            }
            Constraint::LinearLeq { terms, bound } => {
                let boolean = !terms.is_empty() && terms.iter().all(|t| model.aux[t.0].is_boolean());
                if boolean {
                    // Sums of flags print highest index first with a strict bound.
                    let sum = join(terms.iter().rev().map(|t| self.aux(*t)), " + ");
                    self.push(format!("{sum} #< {},", bound + 1));
                } else {
                    let sum = if terms.is_empty() {
                        "0".to_string()
                    } else {
                        join(terms.iter().map(|t| self.aux(*t)), " + ")
                    };
                    self.push(format!("{sum} #=< {bound},"));
                }
            }
            Constraint::SumEq { total, terms } => {
                let sum = if terms.is_empty() {
                    "0".to_string()
                } else {
                    join(terms.iter().map(|t| self.aux(*t)), " + ")
                };
                self.push(format!("{} #= {sum},", self.aux(*total)));
            }
            Constraint::Precedence { before, after, strict } => {
                let op = if *strict { "#<" } else { "#=<" };
                self.push(format!("{} {op} {},", self.var(*before), self.var(*after)));
            }
        }
        self.line_index.insert(index, start..self.lines.len());
    }

    fn labeling(&mut self) {
        let model = self.model;
        let list = self.names.fresh("L");
        if !model.vars.is_empty() {
            let vars = join(model.vars.iter().map(|v| v.name.as_str()), ", ");
            self.push(format!("{list} = [{vars}],"));
        }
        let options = match model.objective {
            Some(score) => format!("ffc, maximize({})", self.aux(score)),
            None => "ffc".to_string(),
        };
        self.push(format!("labeling([{options}], {list})."));
    }
}
