//! C ABI over `topolab`.
//!
//! Graphs cross the boundary as opaque `TopolabGraph*` handles owned by the
//! caller and released with `topolab_graph_free`. Every fallible call returns
//! a `TopolabStatus`; on failure `topolab_last_error_message` describes the
//! most recent error on the calling thread. Output arrays are caller
//! allocated.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use topolab::generators::{generate_fba, generate_ig, FbaParams, IgParams, RngSeed};
use topolab::graph::largest_component;
use topolab::io::{parse_edge_list, write_edge_list};
use topolab::metrics::{
    degree_ccdf, fit_power_law_exponent, rich_club_curve, triangle_coefficients, triangle_summary,
};
use topolab::robustness::{attack_curve, AttackStrategy};
use topolab::{Error, Graph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopolabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParameter = 2,
    ParseError = 3,
    IoError = 4,
    GeneratorStalled = 5,
    InsufficientRange = 6,
    InvalidUtf8 = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopolabAttackStrategy {
    TargetedStatic = 0,
    TargetedAdaptive = 1,
    Random = 2,
}

/// Opaque graph handle.
pub struct TopolabGraph {
    graph: Graph,
    labels: Option<Vec<CString>>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> TopolabStatus {
    match err {
        Error::NodeOutOfRange { .. } | Error::InvalidParameter(_) | Error::ZeroWeights => {
            TopolabStatus::InvalidParameter
        }
        Error::Parse { .. } | Error::NoEdges => TopolabStatus::ParseError,
        Error::InsufficientRange(_) => TopolabStatus::InsufficientRange,
        Error::GeneratorStalled(_) => TopolabStatus::GeneratorStalled,
        Error::Io(_) => TopolabStatus::IoError,
    }
}

/// Runs `body`, converting errors and panics into a status code.
fn guard<F>(body: F) -> TopolabStatus
where
    F: FnOnce() -> Result<(), (TopolabStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => TopolabStatus::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside topolab");
            TopolabStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (TopolabStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (TopolabStatus, String) {
    (TopolabStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(
    g: *const TopolabGraph,
) -> Result<&'a TopolabGraph, (TopolabStatus, String)> {
    g.as_ref().ok_or_else(|| null("graph"))
}

unsafe fn input<'a, T>(
    p: *const T,
    len: usize,
    what: &str,
) -> Result<&'a [T], (TopolabStatus, String)> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts(p, len))
}

unsafe fn output<'a, T>(
    p: *mut T,
    len: usize,
    what: &str,
) -> Result<&'a mut [T], (TopolabStatus, String)> {
    if len == 0 {
        return Ok(&mut []);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts_mut(p, len))
}

unsafe fn path_arg(path: *const c_char) -> Result<String, (TopolabStatus, String)> {
    if path.is_null() {
        return Err(null("path"));
    }
    CStr::from_ptr(path)
        .to_str()
        .map(str::to_owned)
        .map_err(|e| (TopolabStatus::InvalidUtf8, format!("path: {e}")))
}

unsafe fn emit(out: *mut *mut TopolabGraph, handle: TopolabGraph) {
    *out = Box::into_raw(Box::new(handle));
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn topolab_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a graph from `len` pairs `(us[i], vs[i])` on `n_nodes` nodes.
/// Self-loops and duplicate pairs are dropped.
#[no_mangle]
pub unsafe extern "C" fn topolab_graph_from_edges(
    n_nodes: usize,
    us: *const u32,
    vs: *const u32,
    len: usize,
    out: *mut *mut TopolabGraph,
) -> TopolabStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let us = input(us, len, "us")?;
        let vs = input(vs, len, "vs")?;
        let (graph, _) = Graph::from_edges(n_nodes, us.iter().copied().zip(vs.iter().copied()))
            .map_err(lib_err)?;
        emit(
            out,
            TopolabGraph {
                graph,
                labels: None,
            },
        );
        Ok(())
    })
}

/// Reads a whitespace-separated edge-list file. Node labels are kept and
/// available through `topolab_graph_label`.
#[no_mangle]
pub unsafe extern "C" fn topolab_graph_read_edge_list(
    path: *const c_char,
    out: *mut *mut TopolabGraph,
) -> TopolabStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let path = path_arg(path)?;
        let file =
            File::open(&path).map_err(|e| (TopolabStatus::IoError, format!("{path}: {e}")))?;
        let (graph, report) = parse_edge_list(BufReader::new(file)).map_err(lib_err)?;
        let labels = report
            .label_map
            .iter()
            .map(|l| CString::new(l.as_str()).unwrap_or_default())
            .collect();
        emit(
            out,
            TopolabGraph {
                graph,
                labels: Some(labels),
            },
        );
        Ok(())
    })
}

/// Writes the graph as an edge list, using stored labels when present.
#[no_mangle]
pub unsafe extern "C" fn topolab_graph_write_edge_list(
    graph: *const TopolabGraph,
    path: *const c_char,
) -> TopolabStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let path = path_arg(path)?;
        let file =
            File::create(&path).map_err(|e| (TopolabStatus::IoError, format!("{path}: {e}")))?;
        let labels = g.labels.as_ref().map(|ls| {
            ls.iter()
                .map(|c| c.to_string_lossy().into_owned())
                .collect::<topolab::io::LabelSet>()
        });
        write_edge_list(&g.graph, labels.as_ref(), BufWriter::new(file)).map_err(lib_err)
    })
}

/// Fitness-weighted preferential attachment on the default 8-node star seed
/// with uniform fitness.
#[no_mangle]
pub unsafe extern "C" fn topolab_generate_fba(
    n_target: usize,
    m: usize,
    seed: u64,
    out: *mut *mut TopolabGraph,
) -> TopolabStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let params = FbaParams {
            m,
            ..FbaParams::with_defaults(n_target)
        };
        let graph = generate_fba(&params, RngSeed(seed)).map_err(lib_err)?;
        emit(
            out,
            TopolabGraph {
                graph,
                labels: None,
            },
        );
        Ok(())
    })
}

/// Interactive growth on the default 8-node star seed.
#[no_mangle]
pub unsafe extern "C" fn topolab_generate_ig(
    n_target: usize,
    p_one_host: f64,
    seed: u64,
    out: *mut *mut TopolabGraph,
) -> TopolabStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let params = IgParams {
            p_one_host,
            ..IgParams::with_defaults(n_target)
        };
        let graph = generate_ig(&params, RngSeed(seed)).map_err(lib_err)?;
        emit(
            out,
            TopolabGraph {
                graph,
                labels: None,
            },
        );
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn topolab_graph_free(graph: *mut TopolabGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Node count, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn topolab_graph_node_count(graph: *const TopolabGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.node_count())
}

/// Link count, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn topolab_graph_edge_count(graph: *const TopolabGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// Copies every node's degree into `out[0..len]`; `len` must equal the node count.
#[no_mangle]
pub unsafe extern "C" fn topolab_graph_degrees(
    graph: *const TopolabGraph,
    out: *mut usize,
    len: usize,
) -> TopolabStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        check_len(len, g.graph.node_count())?;
        let out = output(out, len, "out")?;
        for (slot, d) in out.iter_mut().zip(g.graph.degrees()) {
            *slot = d;
        }
        Ok(())
    })
}

/// External label of node `id` for graphs read from a file, else NULL.
/// Valid for the lifetime of the handle.
#[no_mangle]
pub unsafe extern "C" fn topolab_graph_label(graph: *const TopolabGraph, id: u32) -> *const c_char {
    graph
        .as_ref()
        .and_then(|g| g.labels.as_ref())
        .and_then(|ls| ls.get(id as usize))
        .map_or(ptr::null(), |c| c.as_ptr())
}

fn check_len(len: usize, expected: usize) -> Result<(), (TopolabStatus, String)> {
    if len != expected {
        return Err((
            TopolabStatus::InvalidParameter,
            format!("buffer length {len}, expected {expected}"),
        ));
    }
    Ok(())
}

/// Least-squares power-law exponent of the degree CCDF over `k >= kmin`.
#[no_mangle]
pub unsafe extern "C" fn topolab_power_law_exponent(
    graph: *const TopolabGraph,
    kmin: usize,
    gamma_out: *mut f64,
) -> TopolabStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let slot = gamma_out.as_mut().ok_or_else(|| null("gamma_out"))?;
        *slot = fit_power_law_exponent(&degree_ccdf(&g.graph), kmin).map_err(lib_err)?;
        Ok(())
    })
}

/// Rich-club connectivity φ(r) for each of `len` rank fractions.
#[no_mangle]
pub unsafe extern "C" fn topolab_rich_club(
    graph: *const TopolabGraph,
    r_values: *const f64,
    len: usize,
    phi_out: *mut f64,
) -> TopolabStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let r = input(r_values, len, "r_values")?;
        let out = output(phi_out, len, "phi_out")?;
        let curve = rich_club_curve(&g.graph, r).map_err(lib_err)?;
        for (slot, (_, phi)) in out.iter_mut().zip(curve.points) {
            *slot = phi;
        }
        Ok(())
    })
}

/// Per-node triangle coefficients; `len` must equal the node count.
#[no_mangle]
pub unsafe extern "C" fn topolab_triangle_coefficients(
    graph: *const TopolabGraph,
    out: *mut u64,
    len: usize,
) -> TopolabStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        check_len(len, g.graph.node_count())?;
        let out = output(out, len, "out")?;
        out.copy_from_slice(&triangle_coefficients(&g.graph).per_node);
        Ok(())
    })
}

/// Maximum and mean triangle coefficient.
#[no_mangle]
pub unsafe extern "C" fn topolab_triangle_summary(
    graph: *const TopolabGraph,
    max_out: *mut u64,
    mean_out: *mut f64,
) -> TopolabStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let max_slot = max_out.as_mut().ok_or_else(|| null("max_out"))?;
        let mean_slot = mean_out.as_mut().ok_or_else(|| null("mean_out"))?;
        let (max, mean) = triangle_summary(&triangle_coefficients(&g.graph));
        *max_slot = max;
        *mean_slot = mean;
        Ok(())
    })
}

/// Largest component after excluding the `len` node ids in `excluded`.
#[no_mangle]
pub unsafe extern "C" fn topolab_largest_component(
    graph: *const TopolabGraph,
    excluded: *const u32,
    len: usize,
    size_out: *mut usize,
) -> TopolabStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let ids = input(excluded, len, "excluded")?;
        let slot = size_out.as_mut().ok_or_else(|| null("size_out"))?;
        let n = g.graph.node_count();
        let mut mask = vec![false; n];
        for &u in ids {
            if u as usize >= n {
                return Err((
                    TopolabStatus::InvalidParameter,
                    format!("excluded node {u} outside [0, {n})"),
                ));
            }
            mask[u as usize] = true;
        }
        *slot = largest_component(&g.graph, &mask);
        Ok(())
    })
}

/// Giant-component fraction `s` for each removal fraction in `fractions`.
/// `seed` is only used by the random strategy.
#[no_mangle]
pub unsafe extern "C" fn topolab_attack_curve(
    graph: *const TopolabGraph,
    strategy: TopolabAttackStrategy,
    seed: u64,
    fractions: *const f64,
    len: usize,
    s_out: *mut f64,
) -> TopolabStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let f = input(fractions, len, "fractions")?;
        let out = output(s_out, len, "s_out")?;
        let strategy = match strategy {
            TopolabAttackStrategy::TargetedStatic => AttackStrategy::TargetedStatic,
            TopolabAttackStrategy::TargetedAdaptive => AttackStrategy::TargetedAdaptive,
            TopolabAttackStrategy::Random => AttackStrategy::Random(RngSeed(seed)),
        };
        let curve = attack_curve(&g.graph, strategy, f).map_err(lib_err)?;
        for (slot, (_, s)) in out.iter_mut().zip(curve.points) {
            *slot = s;
        }
        Ok(())
    })
}
