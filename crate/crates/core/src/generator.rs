//! Deterministic synthetic instances for benchmarks and property tests.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, NodeAttrs, NodeId, NodeKind, Wish, WishMode};
use crate::grid::TimeGrid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub seed: u64,
    pub courses: u32,
    pub groups: u32,
    pub lecturers: u32,
    pub tas: u32,
    pub tutorials_per_course: u32,
    pub wishes: u32,
    pub grid: TimeGrid,
}

impl Default for GeneratorSpec {
    fn default() -> Self {
        Self {
            seed: 1,
            courses: 4,
            groups: 2,
            lecturers: 2,
            tas: 2,
            tutorials_per_course: 2,
            wishes: 4,
            grid: TimeGrid::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(&'static str),
}

/// Builds a legal graph from `spec`.
///
/// Each course gets one lecture and `tutorials_per_course` tutorials.
/// Lectures are dealt round-robin to lecturers, tutorials round-robin to
/// teaching assistants and to groups, and every group attends the lectures
/// of the courses it has tutorials in. Room counts are sized so that each
/// room type has some slack over the grid. Soft wishes are drawn from the
/// seed without repeats.
pub fn gen_instance(spec: &GeneratorSpec) -> Result<Graph, GenError> {
    let tutorials = spec.courses as u64 * spec.tutorials_per_course as u64;
    if spec.courses > 0 && spec.lecturers == 0 {
        return Err(GenError::InfeasibleSpec("lectures need at least one lecturer"));
    }
    if tutorials > 0 && spec.tas == 0 {
        return Err(GenError::InfeasibleSpec("tutorials need at least one teaching assistant"));
    }
    if tutorials > 0 && spec.groups == 0 {
        return Err(GenError::InfeasibleSpec("tutorials need at least one study group"));
    }
    let resources = spec.lecturers as u64 + spec.tas as u64 + spec.groups as u64;
    if spec.wishes as u64 > resources * spec.grid.total_slots() as u64 {
        return Err(GenError::InfeasibleSpec("more wishes than resource slots"));
    }

    let mut g = Graph::new(spec.grid.clone());
    let slots = spec.grid.total_slots() as u64;
    let rooms = |events: u64| (events * 5).div_ceil(slots * 4).max(1) as u32;
    g.set_room_type("lecture_hall", rooms(spec.courses as u64), None);
    g.set_room_type("classroom", rooms(tutorials), None);

    let add = |g: &mut Graph, kind, name: String| g.add_node(kind, &name, NodeAttrs::default()).expect("generated node is valid");
    let lecturers: Vec<NodeId> = (1..=spec.lecturers)
        .map(|i| add(&mut g, NodeKind::Lecturer, format!("Lecturer {i}")))
        .collect();
    let tas: Vec<NodeId> = (1..=spec.tas)
        .map(|i| add(&mut g, NodeKind::TeachingAssistant, format!("TA {i}")))
        .collect();
    let groups: Vec<NodeId> = (1..=spec.groups)
        .map(|i| add(&mut g, NodeKind::StudyGroup, format!("Group {i}")))
        .collect();

    let link = |g: &mut Graph, a: &NodeId, b: &NodeId| g.request_link(a, b).expect("generated link is legal");
    let mut tutorial_index = 0usize;
    for c in 0..spec.courses as usize {
        let course = add(&mut g, NodeKind::Course, format!("Course {}", c + 1));
        let lecture = add(&mut g, NodeKind::Lecture, format!("Course {} Lecture", c + 1));
        link(&mut g, &course, &lecture);
        link(&mut g, &lecturers[c % lecturers.len()], &lecture);
        let mut attending = Vec::new();
        for t in 0..spec.tutorials_per_course {
            let tutorial = add(&mut g, NodeKind::Tutorial, format!("Course {} Tutorial {}", c + 1, t + 1));
            link(&mut g, &course, &tutorial);
            link(&mut g, &tas[tutorial_index % tas.len()], &tutorial);
            let group = &groups[tutorial_index % groups.len()];
            link(&mut g, group, &tutorial);
            if !attending.contains(group) {
                attending.push(group.clone());
            }
            tutorial_index += 1;
        }
        for group in &attending {
            link(&mut g, group, &lecture);
        }
    }

    let all_resources: Vec<NodeId> = lecturers.iter().chain(&tas).chain(&groups).cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut taken = HashSet::new();
    while taken.len() < spec.wishes as usize {
        let resource = rng.gen_range(0..all_resources.len());
        let slot = rng.gen_range(0..spec.grid.total_slots());
        if taken.insert((resource, slot)) {
            g.add_wish(Wish {
                resource: all_resources[resource].clone(),
                slot,
                mode: WishMode::Soft,
            })
            .expect("generated wish is valid");
        }
    }
    Ok(g)
}
