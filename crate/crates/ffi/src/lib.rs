//! C ABI for `qchrom`.
//!
//! Graphs and certificates cross the boundary as opaque heap handles that the
//! caller releases with the matching `*_free` function. Every fallible call
//! returns a [`QcStatus`]; on a non-`Ok` status, [`qc_last_error`] describes
//! what went wrong. Strings returned through `char **` out-parameters are
//! owned by the caller and released with [`qc_string_free`].

use qchrom::cert::json::{parse_certificate_json, write_certificate_json};
use qchrom::cert::{
    classical_to_rank1, real_rep_to_rank1_od, unit_modulus_rep_to_rank1, verify, CertError, Certificate,
};
use qchrom::graph::io::{parse_any, write_dimacs, write_json};
use qchrom::graph::{complete_graph, cycle_graph, gnp, verify_proper_colouring, ClassicalColouring, Graph};
use qchrom::solve::{chromatic_number, max_clique, max_independent_set, Budget, SolveError};
use qchrom::vecrep::{fourth_roots_dim4_graph, g18_dataset, hadamard_graph, roots_of_unity_graph};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes. The first four match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcStatus {
    Ok = 0,
    /// A verification ran and found violations.
    Fail = 1,
    /// Malformed input or arguments.
    InvalidInput = 2,
    /// A search budget ran out before an answer was found.
    Inconclusive = 3,
    NullPointer = 4,
    /// A Rust panic was caught at the boundary.
    Internal = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcParameter {
    Chromatic = 0,
    Clique = 1,
    Independence = 2,
}

/// Opaque graph handle.
pub struct QcGraph(Graph);

/// Opaque certificate handle; keeps the graph it certifies.
pub struct QcCertificate {
    graph: Graph,
    cert: Certificate,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Error(QcStatus, String);

impl Error {
    fn input(e: impl std::fmt::Display) -> Self {
        Error(QcStatus::InvalidInput, e.to_string())
    }
}

impl From<SolveError> for Error {
    fn from(e: SolveError) -> Self {
        let status = match e {
            SolveError::Inconclusive { .. } => QcStatus::Inconclusive,
            _ => QcStatus::InvalidInput,
        };
        Error(status, e.to_string())
    }
}

impl From<CertError> for Error {
    fn from(e: CertError) -> Self {
        let status = match e {
            CertError::ImproperColouring(_) | CertError::Precondition(_) => QcStatus::Fail,
            _ => QcStatus::InvalidInput,
        };
        Error(status, e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status and the last-error message.
fn guard(f: impl FnOnce() -> Result<(), Error>) -> QcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            QcStatus::Ok
        }
        Ok(Err(Error(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error (panic)");
            QcStatus::Internal
        }
    }
}

fn null() -> Error {
    Error(QcStatus::NullPointer, "null pointer argument".into())
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Error> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Error::input("string is not valid UTF-8"))
}

unsafe fn out<T>(p: *mut T, value: T) -> Result<(), Error> {
    if p.is_null() {
        return Err(null());
    }
    p.write(value);
    Ok(())
}

unsafe fn out_string(p: *mut *mut c_char, s: String) -> Result<(), Error> {
    let s = CString::new(s).map_err(Error::input)?;
    out(p, s.into_raw())
}

unsafe fn graph_ref<'a>(g: *const QcGraph) -> Result<&'a Graph, Error> {
    g.as_ref().map(|g| &g.0).ok_or_else(null)
}

fn new_graph(g: Graph) -> *mut QcGraph {
    Box::into_raw(Box::new(QcGraph(g)))
}

/// Message for the most recent failed call on this thread. The pointer stays
/// valid until the next `qc_*` call on the same thread.
#[no_mangle]
pub extern "C" fn qc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from a `char **` out-parameter of this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph in DIMACS or JSON format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_parse(text: *const c_char, out_graph: *mut *mut QcGraph) -> QcStatus {
    guard(|| {
        let g = parse_any(str_arg(text)?).map_err(Error::input)?;
        out(out_graph, new_graph(g))
    })
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcFamily {
    /// `arg` = n.
    Complete = 0,
    /// `arg` = n.
    Cycle = 1,
    /// `arg` = n (even).
    Hadamard = 2,
    /// `arg` = p (prime).
    RootsOfUnity = 3,
    /// `arg` ignored.
    Dim4 = 4,
    /// `arg` ignored.
    G18 = 5,
}

/// Builds a graph from one of the named families.
///
/// # Safety
/// `out_graph` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_generate(family: QcFamily, arg: u32, out_graph: *mut *mut QcGraph) -> QcStatus {
    guard(|| {
        let g = match family {
            QcFamily::Complete => complete_graph(arg as usize).map_err(Error::input)?,
            QcFamily::Cycle => cycle_graph(arg as usize).map_err(Error::input)?,
            QcFamily::Hadamard => hadamard_graph(arg).map_err(Error::input)?,
            QcFamily::RootsOfUnity => roots_of_unity_graph(arg).map_err(Error::input)?.0,
            QcFamily::Dim4 => fourth_roots_dim4_graph().map_err(Error::input)?.0,
            QcFamily::G18 => g18_dataset().map_err(Error::input)?.0,
        };
        out(out_graph, new_graph(g))
    })
}

/// Samples `G(n, p)` deterministically from `seed`.
///
/// # Safety
/// `out_graph` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_gnp(n: usize, p: f64, seed: u64, out_graph: *mut *mut QcGraph) -> QcStatus {
    guard(|| out(out_graph, new_graph(gnp(n, p, seed).map_err(Error::input)?)))
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_vertex_count(g: *const QcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_edge_count(g: *const QcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Serializes a graph as DIMACS (`json == false`) or JSON.
///
/// # Safety
/// `g` must be a live graph handle; `out_text` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_write(g: *const QcGraph, json: bool, out_text: *mut *mut c_char) -> QcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        out_string(out_text, if json { write_json(g) } else { write_dimacs(g) })
    })
}

/// # Safety
/// `g` must be null or a handle from this library that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_free(g: *mut QcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Exact chromatic number, clique number or independence number.
/// A `budget` of 0 selects the default node budget.
///
/// # Safety
/// `g` must be a live graph handle; `out_value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_solve(
    g: *const QcGraph,
    parameter: QcParameter,
    budget: u64,
    out_value: *mut usize,
) -> QcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let mut budget = if budget == 0 {
            Budget::default()
        } else {
            Budget::new(budget)
        };
        let result = match parameter {
            QcParameter::Chromatic => chromatic_number(g, &mut budget)?,
            QcParameter::Clique => max_clique(g, &mut budget)?,
            QcParameter::Independence => max_independent_set(g, &mut budget)?,
        };
        out(out_value, result.value)
    })
}

/// Checks a classical colouring (`n` entries, 0-indexed colours below `c`).
/// Returns `Ok` when proper and `Fail` otherwise.
///
/// # Safety
/// `g` must be a live graph handle; `colours` must point to `n` values.
#[no_mangle]
pub unsafe extern "C" fn qc_verify_colouring(g: *const QcGraph, colours: *const usize, n: usize, c: usize) -> QcStatus {
    guard(|| {
        let col = colouring(colours, n, c)?;
        let report = verify_proper_colouring(graph_ref(g)?, &col).map_err(Error::input)?;
        if report.pass {
            Ok(())
        } else {
            Err(Error(QcStatus::Fail, report.to_string()))
        }
    })
}

unsafe fn colouring(colours: *const usize, n: usize, c: usize) -> Result<ClassicalColouring, Error> {
    if colours.is_null() && n > 0 {
        return Err(null());
    }
    let slice = if n == 0 {
        &[][..]
    } else {
        std::slice::from_raw_parts(colours, n)
    };
    ClassicalColouring::new(c, slice.to_vec()).map_err(Error::input)
}

fn new_cert(graph: Graph, cert: Certificate) -> *mut QcCertificate {
    Box::into_raw(Box::new(QcCertificate { graph, cert }))
}

/// Parses a certificate JSON document (the graph is embedded in it).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out_cert` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_certificate_parse(text: *const c_char, out_cert: *mut *mut QcCertificate) -> QcStatus {
    guard(|| {
        let (graph, cert) = parse_certificate_json(str_arg(text)?)?;
        out(out_cert, new_cert(graph, cert))
    })
}

/// # Safety
/// `cert` must be a live certificate handle; `out_text` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_certificate_write(cert: *const QcCertificate, out_text: *mut *mut c_char) -> QcStatus {
    guard(|| {
        let cert = cert.as_ref().ok_or_else(null)?;
        out_string(out_text, write_certificate_json(&cert.graph, &cert.cert))
    })
}

/// Rank-1 certificate from a proper classical colouring.
///
/// # Safety
/// As for [`qc_verify_colouring`]; `out_cert` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_certificate_classical(
    g: *const QcGraph,
    colours: *const usize,
    n: usize,
    c: usize,
    out_cert: *mut *mut QcCertificate,
) -> QcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let cert = classical_to_rank1(g, &colouring(colours, n, c)?)?;
        out(out_cert, new_cert(g.clone(), cert.into()))
    })
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcLift {
    /// Unit-modulus vectors, Fourier lift.
    Fourier = 0,
    /// Real vectors of dimension at most 8, orthogonal-design lift.
    OrthogonalDesign = 1,
}

/// Lifts an orthogonal representation given as vector JSON.
///
/// # Safety
/// `g` must be a live graph handle, `vectors_json` a NUL-terminated string
/// and `out_cert` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_certificate_lift(
    g: *const QcGraph,
    lift: QcLift,
    vectors_json: *const c_char,
    out_cert: *mut *mut QcCertificate,
) -> QcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let rep = qchrom::vecrep::io::parse_vectors_json(str_arg(vectors_json)?).map_err(Error::input)?;
        let cert = match lift {
            QcLift::Fourier => unit_modulus_rep_to_rank1(g, &rep)?,
            QcLift::OrthogonalDesign => real_rep_to_rank1_od(g, &rep)?,
        };
        out(out_cert, new_cert(g.clone(), cert.into()))
    })
}

/// Number of colours of a certificate, or 0 for a null handle.
///
/// # Safety
/// `cert` must be null or a live certificate handle.
#[no_mangle]
pub unsafe extern "C" fn qc_certificate_colours(cert: *const QcCertificate) -> usize {
    cert.as_ref().map_or(0, |c| c.cert.c())
}

/// Verifies a certificate at tolerance `tol` against its embedded graph.
/// Returns `Ok` on pass and `Fail` on violations; `out_worst` (optional)
/// receives the largest residual.
///
/// # Safety
/// `cert` must be a live certificate handle; `out_worst` null or writable.
#[no_mangle]
pub unsafe extern "C" fn qc_certificate_verify(cert: *const QcCertificate, tol: f64, out_worst: *mut f64) -> QcStatus {
    guard(|| {
        let cert = cert.as_ref().ok_or_else(null)?;
        let report = verify(&cert.graph, &cert.cert, tol)?;
        if !out_worst.is_null() {
            out_worst.write(report.worst_residual);
        }
        if report.pass {
            Ok(())
        } else {
            Err(Error(QcStatus::Fail, report.to_string()))
        }
    })
}

/// # Safety
/// `cert` must be null or a handle from this library that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qc_certificate_free(cert: *mut QcCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}
