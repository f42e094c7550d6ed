//! Stateless HTTP/JSON API over link validation, compilation and solving.
//!
//! Every request carries the whole graph document; nothing is kept between
//! requests. The handlers are plain functions of the request body so they
//! can be exercised without a socket.

use std::net::SocketAddr;
use std::time::Duration;

use axum::body::Bytes;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::checks::static_checks;
use crate::compiler::compile;
use crate::emitter::emit;
use crate::format::{parse_graph_value, ParseError};
use crate::graph::{Graph, NodeId};
use crate::grid::Slot;
use crate::solver::{solve, SearchStats, SolveStatus, SolverConfig};
use crate::timetable::render_grids;

pub const DEFAULT_TIME_LIMIT_CAP_MS: u64 = 30_000;

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    /// Upper bound applied to every solve request's time limit.
    pub time_limit_cap: Duration,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        Self {
            time_limit_cap: Duration::from_millis(DEFAULT_TIME_LIMIT_CAP_MS),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ErrorCode {
    SyntaxError,
    SemanticError,
    UnknownNode,
    CompileError,
    InternalError,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApiError {
    pub code: ErrorCode,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl ApiError {
    fn new(code: ErrorCode, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
            detail: None,
        }
    }
}

impl From<ParseError> for ApiError {
    fn from(e: ParseError) -> Self {
        let code = match e {
            ParseError::Syntax { .. } => ErrorCode::SyntaxError,
            ParseError::Semantic(_) => ErrorCode::SemanticError,
        };
        ApiError::new(code, e.to_string())
    }
}

/// Status code and JSON body of a handled request.
#[derive(Debug, Clone, PartialEq)]
pub struct ApiResponse {
    pub status: StatusCode,
    pub body: Value,
}

impl ApiResponse {
    fn ok(body: Value) -> Self {
        Self {
            status: StatusCode::OK,
            body,
        }
    }

    fn error(status: StatusCode, error: ApiError) -> Self {
        Self {
            status,
            body: serde_json::to_value(error).expect("error serializes"),
        }
    }
}

impl IntoResponse for ApiResponse {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}

fn bad_request(e: impl Into<ApiError>) -> ApiResponse {
    ApiResponse::error(StatusCode::BAD_REQUEST, e.into())
}

fn parse_body<T: for<'de> Deserialize<'de>>(body: &[u8]) -> Result<T, ApiResponse> {
    serde_json::from_slice(body).map_err(|e| bad_request(ApiError::new(ErrorCode::SyntaxError, e.to_string())))
}

fn load_graph(document: Value) -> Result<Graph, ApiResponse> {
    parse_graph_value(document).map_err(bad_request)
}

#[derive(Deserialize)]
struct LinkRequest {
    graph: Value,
    a: NodeId,
    b: NodeId,
}

#[derive(Deserialize)]
struct CompileRequest {
    graph: Value,
}

#[derive(Deserialize)]
struct SolveRequest {
    graph: Value,
    time_limit_ms: Option<u64>,
    max_solutions: Option<usize>,
    optimize: Option<bool>,
}

/// `POST /api/validate-link`: `{accepted, reason?}`.
pub fn validate_link(body: &[u8]) -> ApiResponse {
    let run = || -> Result<ApiResponse, ApiResponse> {
        let req: LinkRequest = parse_body(body)?;
        let graph = load_graph(req.graph)?;
        for id in [&req.a, &req.b] {
            if graph.node(id).is_none() {
                return Err(bad_request(ApiError::new(ErrorCode::UnknownNode, format!("unknown node {id}"))));
            }
        }
        Ok(ApiResponse::ok(match graph.check_link(&req.a, &req.b) {
            Ok(()) => json!({ "accepted": true }),
            Err(reason) => json!({ "accepted": false, "reason": reason.code() }),
        }))
    };
    run().unwrap_or_else(|e| e)
}

/// `POST /api/compile`: `{program, findings, stats}`.
pub fn compile_graph(body: &[u8]) -> ApiResponse {
    let run = || -> Result<ApiResponse, ApiResponse> {
        let req: CompileRequest = parse_body(body)?;
        let graph = load_graph(req.graph)?;
        let findings = static_checks(&graph);
        let model = compile(&graph).map_err(compile_failure)?;
        Ok(ApiResponse::ok(json!({
            "program": emit(&model).text,
            "findings": findings,
            "stats": {
                "vars": model.vars.len(),
                "constraints": model.constraints.len(),
                "flags": model.flags.len(),
            },
        })))
    };
    run().unwrap_or_else(|e| e)
}

fn compile_failure(e: crate::compiler::CompileError) -> ApiResponse {
    let mut error = ApiError::new(ErrorCode::CompileError, e.to_string());
    error.detail = Some(json!({ "findings": e.findings }));
    ApiResponse::error(StatusCode::UNPROCESSABLE_ENTITY, error)
}

#[derive(Serialize)]
struct SolutionBody<'a> {
    assignment: &'a IndexMap<NodeId, Slot>,
    score: u32,
}

/// `POST /api/solve`: `{status, solutions, grids, stats}`. The grids show the
/// last (best) solution.
pub fn solve_graph(body: &[u8], config: &ServiceConfig) -> ApiResponse {
    let run = || -> Result<ApiResponse, ApiResponse> {
        let req: SolveRequest = parse_body(body)?;
        let graph = load_graph(req.graph)?;
        let model = compile(&graph).map_err(compile_failure)?;
        let requested = req
            .time_limit_ms
            .map(Duration::from_millis)
            .unwrap_or(config.time_limit_cap);
        let solver_config = SolverConfig {
            time_limit: Some(requested.min(config.time_limit_cap)),
            max_solutions: req.max_solutions,
            optimize: req.optimize.unwrap_or(true),
            ..SolverConfig::default()
        };
        let outcome = solve(&model, &solver_config);
        let grids = match outcome.best() {
            Some(best) => render_grids(&best.assignment, &graph)
                .map_err(|e| ApiResponse::error(StatusCode::INTERNAL_SERVER_ERROR, ApiError::new(ErrorCode::InternalError, e.to_string())))?,
            None => Vec::new(),
        };
        let solutions: Vec<SolutionBody> = outcome
            .solutions
            .iter()
            .map(|s| SolutionBody {
                assignment: &s.assignment,
                score: s.score,
            })
            .collect();
        Ok(ApiResponse::ok(json!({
            "status": status_str(outcome.status),
            "solutions": solutions,
            "grids": grids,
            "stats": stats_json(&outcome.stats),
        })))
    };
    run().unwrap_or_else(|e| e)
}

pub fn status_str(status: SolveStatus) -> &'static str {
    match status {
        SolveStatus::Optimal => "optimal",
        SolveStatus::Feasible => "feasible",
        SolveStatus::Unsat => "unsat",
        SolveStatus::Timeout => "timeout",
    }
}

pub fn stats_json(stats: &SearchStats) -> Value {
    json!({
        "nodes_explored": stats.nodes_explored,
        "failures": stats.failures,
        "elapsed_ms": stats.elapsed.as_millis() as u64,
        "proven_optimal": stats.proven_optimal,
    })
}

pub fn router(config: ServiceConfig) -> Router {
    Router::new()
        .route("/api/health", get(|| async { Json(json!({ "status": "ok" })) }))
        .route("/api/validate-link", post(|body: Bytes| async move { validate_link(&body) }))
        .route("/api/compile", post(|body: Bytes| async move { compile_graph(&body) }))
        .route(
            "/api/solve",
            post(move |body: Bytes| {
                let config = config.clone();
                async move {
                    tokio::task::spawn_blocking(move || solve_graph(&body, &config))
                        .await
                        .unwrap_or_else(|e| {
                            ApiResponse::error(
                                StatusCode::INTERNAL_SERVER_ERROR,
                                ApiError::new(ErrorCode::InternalError, e.to_string()),
                            )
                        })
                }
            }),
        )
}

/// Serves the API until the process is stopped.
pub async fn serve(addr: SocketAddr, config: ServiceConfig) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(config)).await
}
