//! Visual university timetabling: a typed graph of courses, events and
//! resources is validated as it is drawn, compiled into a finite-domain
//! constraint model, printed as a constraint program and solved with
//! first-fail branch-and-bound search.
//!
//! ```
//! use timetable_studio::{compile, emit, Graph, NodeAttrs, NodeKind};
//!
//! let mut g = Graph::default();
//! g.set_room_type("lecture_hall", 2, None);
//! let math = g.add_node(NodeKind::Course, "Math", NodeAttrs::default()).unwrap();
//! let lecture = g.add_node(NodeKind::Lecture, "Math L1", NodeAttrs::default()).unwrap();
//! let lecturer = g.add_node(NodeKind::Lecturer, "Lecturer1", NodeAttrs::default()).unwrap();
//! g.request_link(&math, &lecture).unwrap();
//! g.request_link(&lecturer, &lecture).unwrap();
//!
//! let program = emit(&compile(&g).unwrap());
//! assert!(program.text.contains("LECTURER1 = [MATHL1],"));
//! ```

pub mod checks;
pub mod cli;
pub mod compiler;
pub mod domain;
pub mod emitter;
pub mod format;
pub mod generator;
pub mod graph;
pub mod grid;
pub mod model;
pub mod naming;
pub mod service;
pub mod solver;
pub mod timetable;

pub use checks::{static_checks, Finding, Severity};
pub use compiler::{compile, CompileError};
pub use domain::DomainSet;
pub use emitter::{emit, ProgramText};
pub use format::{parse_graph, serialize_graph, ParseError, SemanticError};
pub use generator::{gen_instance, GenError, GeneratorSpec};
pub use graph::{
    Graph, GraphError, LinkRejection, Node, NodeAttrs, NodeClass, NodeId, NodeKind, Precedence, Wish, WishMode,
};
pub use grid::{decode_slot, Slot, TimeGrid};
pub use model::{Constraint, ConstraintModel};
pub use solver::{solve, SolveOutcome, SolveStatus, Solution, SolverConfig};
pub use timetable::{grid_to_text, render_grids, WeeklyGrid};
