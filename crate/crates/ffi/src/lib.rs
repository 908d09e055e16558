//! C ABI over `graphqec`.
//!
//! Objects cross the boundary as opaque pointers that the caller releases
//! with the matching `*_free`. Every fallible call returns a status code:
//! 0 on success, otherwise the library's exit code for the error kind
//! (see `graphqec --help`), `GQEC_NULL_ARGUMENT` for a null pointer, or
//! `GQEC_PANIC` if Rust panicked. The message of the last failure on the
//! calling thread is available from `gqec_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use graphqec::codespace::{code_from_cycles, code_report, GraphicalCode};
use graphqec::families::by_name;
use graphqec::graph::QuantizedGraph;
use graphqec::metrics::distance;
use graphqec::pauli::{stabilizers, PairingConvention};
use graphqec::Error;

pub const GQEC_OK: i32 = 0;
/// k = 0: the code has no logical qubit, so no distance.
pub const GQEC_NO_LOGICAL: i32 = 60;
pub const GQEC_NULL_ARGUMENT: i32 = 61;
pub const GQEC_BAD_UTF8: i32 = 62;
pub const GQEC_PANIC: i32 = 99;

/// A validated quantized graph.
pub struct GqecGraph(QuantizedGraph);

/// A graphical code together with its pairing convention.
pub struct GqecCode {
    code: GraphicalCode,
    convention: PairingConvention,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), (i32, String)>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GQEC_OK,
        Ok(Err((code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic".into());
            GQEC_PANIC
        }
    }
}

fn lib(e: Error) -> (i32, String) {
    (e.exit_code(), e.to_string())
}

fn null() -> (i32, String) {
    (GQEC_NULL_ARGUMENT, "null argument".into())
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, (i32, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| (GQEC_BAD_UTF8, "argument is not UTF-8".into()))
}

unsafe fn out_string(out: *mut *mut c_char, s: String) -> Result<(), (i32, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = CString::new(s).expect("no interior nul").into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gqec_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gqec_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph from its JSON file format.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gqec_graph_from_json(json: *const c_char, out: *mut *mut GqecGraph) -> i32 {
    guard(|| {
        let text = str_arg(json)?;
        if out.is_null() {
            return Err(null());
        }
        let g = QuantizedGraph::from_json(text).map_err(lib)?;
        *out = Box::into_raw(Box::new(GqecGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must come from `gqec_graph_from_json` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gqec_graph_free(g: *mut GqecGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn gqec_graph_vertex_count(g: *const GqecGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn gqec_graph_edge_count(g: *const GqecGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Builds the code whose stabilizers are the given cycles. Cycle i is
/// `edges[offsets[i] .. offsets[i + 1]]`, so `offsets` has
/// `cycle_count + 1` entries.
///
/// # Safety
/// The arrays must hold the stated number of elements.
#[no_mangle]
pub unsafe extern "C" fn gqec_code_from_cycles(
    g: *const GqecGraph,
    edges: *const usize,
    offsets: *const usize,
    cycle_count: usize,
    out: *mut *mut GqecCode,
) -> i32 {
    guard(|| {
        let g = &g.as_ref().ok_or_else(null)?.0;
        if out.is_null() || offsets.is_null() || (edges.is_null() && cycle_count > 0) {
            return Err(null());
        }
        let offs = std::slice::from_raw_parts(offsets, cycle_count + 1);
        let total = offs[cycle_count];
        let all = if total == 0 { &[][..] } else { std::slice::from_raw_parts(edges, total) };
        let mut cycles = Vec::with_capacity(cycle_count);
        for w in offs.windows(2) {
            if w[0] > w[1] || w[1] > total {
                return Err((2, "offsets must be non-decreasing".into()));
            }
            let mut v = g.empty_edge_set();
            for &e in &all[w[0]..w[1]] {
                if e >= g.edge_count() {
                    return Err((2, format!("edge index {e} out of range")));
                }
                v.flip(e);
            }
            cycles.push(v);
        }
        let code = code_from_cycles(g, &cycles).map_err(lib)?;
        *out = Box::into_raw(Box::new(GqecCode { code, convention: PairingConvention::default() }));
        Ok(())
    })
}

/// Builds a named family instance. `param` is ignored by families
/// without a size parameter; pass 0 there.
///
/// # Safety
/// `name` must be nul-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn gqec_family(name: *const c_char, param: usize, out: *mut *mut GqecCode) -> i32 {
    guard(|| {
        let name = str_arg(name)?;
        if out.is_null() {
            return Err(null());
        }
        let f = by_name(name, (param > 0).then_some(param)).map_err(lib)?;
        *out = Box::into_raw(Box::new(GqecCode { code: f.code, convention: f.convention }));
        Ok(())
    })
}

/// # Safety
/// `c` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gqec_code_free(c: *mut GqecCode) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of physical qubits.
///
/// # Safety
/// `c` must be a live code handle.
#[no_mangle]
pub unsafe extern "C" fn gqec_code_n(c: *const GqecCode) -> usize {
    c.as_ref().map_or(0, |c| c.code.n)
}

/// Number of logical qubits.
///
/// # Safety
/// `c` must be a live code handle.
#[no_mangle]
pub unsafe extern "C" fn gqec_code_k(c: *const GqecCode) -> usize {
    c.as_ref().map_or(0, |c| c.code.k)
}

/// Sets the pairing letters, e.g. "ZYX".
///
/// # Safety
/// `c` must be a live code handle and `letters` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn gqec_code_set_convention(c: *mut GqecCode, letters: *const c_char) -> i32 {
    guard(|| {
        let c = c.as_mut().ok_or_else(null)?;
        c.convention = str_arg(letters)?.parse().map_err(lib)?;
        Ok(())
    })
}

/// Graphical distance, searching up to `budget`.
///
/// # Safety
/// `c` must be a live code handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn gqec_code_distance(c: *const GqecCode, budget: usize, out: *mut usize) -> i32 {
    guard(|| {
        let c = c.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        match distance(&c.code, budget).map_err(lib)?.d {
            Some(d) => {
                *out = d;
                Ok(())
            }
            None => Err((GQEC_NO_LOGICAL, "code has no logical qubit".into())),
        }
    })
}

/// Stabilizer generators as a newline-separated list of signed Pauli
/// words. Free the result with `gqec_string_free`.
///
/// # Safety
/// `c` must be a live code handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn gqec_code_stabilizers(c: *const GqecCode, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let c = c.as_ref().ok_or_else(null)?;
        let s = stabilizers(&c.code, &c.convention).map_err(lib)?;
        let words: Vec<String> = s.generators().iter().map(|p| p.to_string()).collect();
        out_string(out, words.join("\n"))
    })
}

/// JSON code report. Free the result with `gqec_string_free`.
///
/// # Safety
/// `c` must be a live code handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn gqec_code_report_json(c: *const GqecCode, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let c = c.as_ref().ok_or_else(null)?;
        let text = serde_json::to_string_pretty(&code_report(&c.code)).expect("serializable");
        out_string(out, text)
    })
}
