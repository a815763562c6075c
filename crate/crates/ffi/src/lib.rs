//! C ABI over the cyclespect core: opaque handles for graphs and spectra,
//! status codes for every failure mode, and JSON strings for structured
//! results (certificates, reports).
//!
//! Conventions:
//! - every function returns a [`CsStatus`]; results come back through out
//!   pointers, which are written only on `CS_STATUS_OK`;
//! - handles are created and released by this library only
//!   ([`cs_graph_free`], [`cs_spectrum_free`], [`cs_string_free`]);
//! - all functions are panic-safe: a caught panic reports
//!   `CS_STATUS_INTERNAL_PANIC` instead of unwinding across the boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cyclespect::chromatic::{
    chromatic_number, consecutive_cycles_chromatic, ChromaticError, DEFAULT_CHROMATIC_BUDGET,
};
use cyclespect::extraction::{consecutive_even_cycles, PipelineConfig};
use cyclespect::graph::{girth, Graph};
use cyclespect::report::{verify_certificate, BudgetInfo, CertificateFile};
use cyclespect::spectrum::{
    cycle_spectrum, reciprocal_sum, CycleSpectrum, SpectrumOptions, DEFAULT_NODE_BUDGET,
};

/// Status of every call across this boundary.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsStatus {
    CsStatusOk = 0,
    /// A required pointer argument was null.
    CsStatusNullArgument = 1,
    /// A string argument was not valid UTF-8.
    CsStatusInvalidUtf8 = 2,
    /// Input text failed to parse (edge list or certificate JSON).
    CsStatusParseError = 3,
    /// Arguments violated a documented precondition.
    CsStatusInvalidInput = 4,
    /// A search or solver exceeded its budget.
    CsStatusBudgetExceeded = 5,
    /// The pipeline could not produce a certificate; see the stage in the
    /// library logs.
    CsStatusPipelineFailed = 6,
    /// The certificate did not replay against the graph.
    CsStatusVerifyFailed = 7,
    /// A numeric result does not fit the out-parameter's range.
    CsStatusOverflow = 8,
    /// An internal panic was caught at the boundary.
    CsStatusInternalPanic = 9,
}

/// Opaque graph handle.
pub struct CsGraph {
    inner: Graph,
}

/// Opaque cycle-spectrum handle.
pub struct CsSpectrum {
    inner: CycleSpectrum,
}

fn guarded(body: impl FnOnce() -> CsStatus) -> CsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => CsStatus::CsStatusInternalPanic,
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated C string.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, CsStatus> {
    if text.is_null() {
        return Err(CsStatus::CsStatusNullArgument);
    }
    unsafe { CStr::from_ptr(text) }
        .to_str()
        .map_err(|_| CsStatus::CsStatusInvalidUtf8)
}

fn give_string(out: *mut *mut c_char, text: String) -> CsStatus {
    match CString::new(text) {
        Ok(cstr) => {
            unsafe { *out = cstr.into_raw() };
            CsStatus::CsStatusOk
        }
        Err(_) => CsStatus::CsStatusInvalidInput,
    }
}

/// Version of the underlying library, as a static string.
#[no_mangle]
pub extern "C" fn cs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Short name of a status code, as a static string.
#[no_mangle]
pub extern "C" fn cs_status_name(status: CsStatus) -> *const c_char {
    let name: &'static str = match status {
        CsStatus::CsStatusOk => "ok\0",
        CsStatus::CsStatusNullArgument => "null_argument\0",
        CsStatus::CsStatusInvalidUtf8 => "invalid_utf8\0",
        CsStatus::CsStatusParseError => "parse_error\0",
        CsStatus::CsStatusInvalidInput => "invalid_input\0",
        CsStatus::CsStatusBudgetExceeded => "budget_exceeded\0",
        CsStatus::CsStatusPipelineFailed => "pipeline_failed\0",
        CsStatus::CsStatusVerifyFailed => "verify_failed\0",
        CsStatus::CsStatusOverflow => "overflow\0",
        CsStatus::CsStatusInternalPanic => "internal_panic\0",
    };
    name.as_ptr() as *const c_char
}

/// Parses edge-list text (`n m` header, then `u v` lines) into a graph
/// handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated C string and `out_graph` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_parse(
    text: *const c_char,
    out_graph: *mut *mut CsGraph,
) -> CsStatus {
    guarded(|| {
        if out_graph.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        let text = match unsafe { read_str(text) } {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Graph::parse_edge_list(text) {
            Ok(g) => {
                unsafe { *out_graph = Box::into_raw(Box::new(CsGraph { inner: g })) };
                CsStatus::CsStatusOk
            }
            Err(_) => CsStatus::CsStatusParseError,
        }
    })
}

/// Builds a graph from a flat array of 2*edge_count endpoints.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable u64 values (or be null
/// when `edge_count` is 0); `out_graph` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_from_edges(
    vertex_count: u64,
    edges: *const u64,
    edge_count: u64,
    out_graph: *mut *mut CsGraph,
) -> CsStatus {
    guarded(|| {
        if out_graph.is_null() || (edges.is_null() && edge_count > 0) {
            return CsStatus::CsStatusNullArgument;
        }
        let flat = if edge_count == 0 {
            &[]
        } else {
            unsafe { std::slice::from_raw_parts(edges, 2 * edge_count as usize) }
        };
        let pairs: Vec<(usize, usize)> = flat
            .chunks_exact(2)
            .map(|c| (c[0] as usize, c[1] as usize))
            .collect();
        match Graph::new(vertex_count as usize, &pairs) {
            Ok(g) => {
                unsafe { *out_graph = Box::into_raw(Box::new(CsGraph { inner: g })) };
                CsStatus::CsStatusOk
            }
            Err(_) => CsStatus::CsStatusInvalidInput,
        }
    })
}

/// Releases a graph handle. Null is tolerated.
///
/// # Safety
/// `graph` must be null or a pointer from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_free(graph: *mut CsGraph) {
    if !graph.is_null() {
        drop(unsafe { Box::from_raw(graph) });
    }
}

/// # Safety
/// `graph` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_vertex_count(
    graph: *const CsGraph,
    out: *mut u64,
) -> CsStatus {
    guarded(|| {
        if graph.is_null() || out.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        unsafe { *out = (*graph).inner.vertex_count() as u64 };
        CsStatus::CsStatusOk
    })
}

/// # Safety
/// `graph` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_edge_count(graph: *const CsGraph, out: *mut u64) -> CsStatus {
    guarded(|| {
        if graph.is_null() || out.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        unsafe { *out = (*graph).inner.edge_count() as u64 };
        CsStatus::CsStatusOk
    })
}

/// Girth of the graph; 0 means the graph has no cycle.
///
/// # Safety
/// `graph` and `out_girth` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_girth(graph: *const CsGraph, out_girth: *mut u64) -> CsStatus {
    guarded(|| {
        if graph.is_null() || out_girth.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        let g = unsafe { &(*graph).inner };
        unsafe { *out_girth = girth(g).unwrap_or(0) as u64 };
        CsStatus::CsStatusOk
    })
}

/// Serializes the graph back to edge-list text; free with
/// [`cs_string_free`].
///
/// # Safety
/// `graph` and `out_text` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_to_edge_list(
    graph: *const CsGraph,
    out_text: *mut *mut c_char,
) -> CsStatus {
    guarded(|| {
        if graph.is_null() || out_text.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        let text = unsafe { &(*graph).inner }.to_edge_list();
        give_string(out_text, text)
    })
}

/// Computes the cycle spectrum up to `max_len` (0 means all lengths) with
/// the given node budget (0 means the default).
///
/// # Safety
/// `graph` and `out_spectrum` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cs_spectrum_compute(
    graph: *const CsGraph,
    max_len: u64,
    node_budget: u64,
    out_spectrum: *mut *mut CsSpectrum,
) -> CsStatus {
    guarded(|| {
        if graph.is_null() || out_spectrum.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        let g = unsafe { &(*graph).inner };
        let opts = SpectrumOptions {
            max_len: (max_len > 0).then_some(max_len as usize),
            node_budget: if node_budget > 0 {
                node_budget
            } else {
                DEFAULT_NODE_BUDGET
            },
            store_witnesses: false,
        };
        let spec = cycle_spectrum(g, &opts);
        unsafe { *out_spectrum = Box::into_raw(Box::new(CsSpectrum { inner: spec })) };
        CsStatus::CsStatusOk
    })
}

/// Releases a spectrum handle. Null is tolerated.
///
/// # Safety
/// `spectrum` must be null or a pointer from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cs_spectrum_free(spectrum: *mut CsSpectrum) {
    if !spectrum.is_null() {
        drop(unsafe { Box::from_raw(spectrum) });
    }
}

/// # Safety
/// `spectrum` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cs_spectrum_length_count(
    spectrum: *const CsSpectrum,
    out: *mut u64,
) -> CsStatus {
    guarded(|| {
        if spectrum.is_null() || out.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        unsafe { *out = (*spectrum).inner.count() as u64 };
        CsStatus::CsStatusOk
    })
}

/// Copies the realized cycle lengths (ascending) into `buf`, writing at
/// most `capacity` values; `out_written` receives the number copied.
///
/// # Safety
/// `spectrum`, `buf` (for `capacity` u64 values) and `out_written` must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn cs_spectrum_lengths(
    spectrum: *const CsSpectrum,
    buf: *mut u64,
    capacity: u64,
    out_written: *mut u64,
) -> CsStatus {
    guarded(|| {
        if spectrum.is_null() || out_written.is_null() || (buf.is_null() && capacity > 0) {
            return CsStatus::CsStatusNullArgument;
        }
        let lengths = unsafe { &(*spectrum).inner };
        let mut written = 0u64;
        for (&len, slot) in lengths.lengths().iter().zip(0..capacity) {
            unsafe { *buf.add(slot as usize) = len as u64 };
            written += 1;
        }
        unsafe { *out_written = written };
        CsStatus::CsStatusOk
    })
}

/// True when every possible cycle length of the host graph was decided.
///
/// # Safety
/// `spectrum` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cs_spectrum_is_exhaustive(
    spectrum: *const CsSpectrum,
    out: *mut bool,
) -> CsStatus {
    guarded(|| {
        if spectrum.is_null() || out.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        unsafe { *out = (*spectrum).inner.is_exhaustive() };
        CsStatus::CsStatusOk
    })
}

/// # Safety
/// `spectrum` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cs_spectrum_reciprocal_sum(
    spectrum: *const CsSpectrum,
    out: *mut f64,
) -> CsStatus {
    guarded(|| {
        if spectrum.is_null() || out.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        unsafe { *out = reciprocal_sum(&(*spectrum).inner) };
        CsStatus::CsStatusOk
    })
}

/// Exact chromatic number with the given branch budget (0 means the
/// default).
///
/// # Safety
/// `graph` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cs_chromatic_number(
    graph: *const CsGraph,
    branch_budget: u64,
    out: *mut u32,
) -> CsStatus {
    guarded(|| {
        if graph.is_null() || out.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        let g = unsafe { &(*graph).inner };
        let budget = if branch_budget > 0 {
            branch_budget
        } else {
            DEFAULT_CHROMATIC_BUDGET
        };
        match chromatic_number(g, budget) {
            Ok((chi, _)) => {
                unsafe { *out = chi };
                CsStatus::CsStatusOk
            }
            Err(ChromaticError::BudgetExceeded(_)) => CsStatus::CsStatusBudgetExceeded,
            Err(_) => CsStatus::CsStatusInvalidInput,
        }
    })
}

/// Minimum order of a graph with minimum degree `d` and girth `g`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cs_moore_bound(d: u64, g: u64, out: *mut u64) -> CsStatus {
    guarded(|| {
        if out.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        match cyclespect::bounds::moore_bound(d, g) {
            Ok(v) => match u64::try_from(v) {
                Ok(small) => {
                    unsafe { *out = small };
                    CsStatus::CsStatusOk
                }
                Err(_) => CsStatus::CsStatusOverflow,
            },
            Err(_) => CsStatus::CsStatusInvalidInput,
        }
    })
}

/// Runs the consecutive-even-lengths pipeline and returns the certificate
/// as JSON; free with [`cs_string_free`].
///
/// # Safety
/// `graph` and `out_json` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cs_even_cycle_certificate(
    graph: *const CsGraph,
    d_param: u64,
    seed: u64,
    out_json: *mut *mut c_char,
) -> CsStatus {
    guarded(|| {
        if graph.is_null() || out_json.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        let g = unsafe { &(*graph).inner };
        let cfg = PipelineConfig {
            seed,
            ..PipelineConfig::default()
        };
        match consecutive_even_cycles(g, d_param, &cfg) {
            Ok(cert) => {
                let file = CertificateFile::from_certificate(&cert, seed, BudgetInfo::default());
                give_string(out_json, serde_json::to_string_pretty(&file).unwrap())
            }
            Err(_) => CsStatus::CsStatusPipelineFailed,
        }
    })
}

/// Runs the consecutive-lengths (both parities) pipeline and returns the
/// certificate as JSON; free with [`cs_string_free`].
///
/// # Safety
/// `graph` and `out_json` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cs_chromatic_certificate(
    graph: *const CsGraph,
    seed: u64,
    out_json: *mut *mut c_char,
) -> CsStatus {
    guarded(|| {
        if graph.is_null() || out_json.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        let g = unsafe { &(*graph).inner };
        let cfg = PipelineConfig {
            seed,
            ..PipelineConfig::default()
        };
        match consecutive_cycles_chromatic(g, &cfg, DEFAULT_CHROMATIC_BUDGET) {
            Ok(cert) => {
                let file = CertificateFile::from_certificate(&cert, seed, BudgetInfo::default());
                give_string(out_json, serde_json::to_string_pretty(&file).unwrap())
            }
            Err(_) => CsStatus::CsStatusPipelineFailed,
        }
    })
}

/// Replays a certificate (JSON text) against a graph.
///
/// # Safety
/// `graph` must be a valid handle and `cert_json` a valid NUL-terminated
/// C string.
#[no_mangle]
pub unsafe extern "C" fn cs_verify_certificate(
    graph: *const CsGraph,
    cert_json: *const c_char,
) -> CsStatus {
    guarded(|| {
        if graph.is_null() {
            return CsStatus::CsStatusNullArgument;
        }
        let text = match unsafe { read_str(cert_json) } {
            Ok(t) => t,
            Err(s) => return s,
        };
        let file: CertificateFile = match serde_json::from_str(text) {
            Ok(f) => f,
            Err(_) => return CsStatus::CsStatusParseError,
        };
        let g = unsafe { &(*graph).inner };
        match verify_certificate(g, &file) {
            Ok(()) => CsStatus::CsStatusOk,
            Err(_) => CsStatus::CsStatusVerifyFailed,
        }
    })
}

/// Releases a string returned by this library. Null is tolerated.
///
/// # Safety
/// `text` must be null or a pointer returned by this library, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn cs_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}
