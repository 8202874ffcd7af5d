//! C ABI over `eslab`.
//!
//! Structures and labellings are opaque heap handles created by the
//! `*_parse`, `*_fixture`, `*_generate` and `eslab_label` functions and
//! released with the matching `*_free`. Output pointers are left untouched
//! on failure. Every fallible call returns an [`EslabStatus`]; on
//! failure the message is available from [`eslab_last_error_message`] on the
//! same thread until the next failing call. Strings handed out by the library
//! are released with [`eslab_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eslab::gen::{fixture, generate, GenKind, GenParams};
use eslab::graph::{degree, DEFAULT_EXACT_LIMIT};
use eslab::io::{read_es, read_labels, serialize_es, serialize_labels};
use eslab::label::{label_with, verify_labelling, Labelling, Strategy};
use eslab::{Error, EventStructure};

/// Opaque event structure handle.
pub struct EslabStructure(EventStructure);

/// Opaque labelling handle.
pub struct EslabLabelling(Labelling);

/// Result of a library call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EslabStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed text input.
    SyntaxError = 3,
    /// Well-formed input describing an invalid structure or labelling.
    InvalidInput = 4,
    /// A size or search limit was reached.
    LimitExceeded = 5,
    /// The structure is outside the scope of the requested algorithm.
    Unsupported = 6,
    /// A bound that should hold failed; indicates a bug or a counterexample.
    TheoryViolation = 7,
    /// A Rust panic was caught at the boundary.
    Panic = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<(CString, &'static str)>> = const { RefCell::new(None) };
}

fn set_error(kind: &'static str, msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some((text, kind)));
}

fn status_of(e: &Error) -> EslabStatus {
    if e.is_theory_violation() {
        return EslabStatus::TheoryViolation;
    }
    match e {
        Error::Syntax { .. } => EslabStatus::SyntaxError,
        Error::SizeLimitExceeded { .. } | Error::ExceedsCap { .. } | Error::DomainTooLarge { .. } => {
            EslabStatus::LimitExceeded
        }
        Error::NotAForest(_)
        | Error::DegreeExceedsThree(_)
        | Error::NotSimple { .. }
        | Error::NotATree(_)
        | Error::ClassNotThreeLabellable(_) => EslabStatus::Unsupported,
        _ => EslabStatus::InvalidInput,
    }
}

fn fail(e: Error) -> EslabStatus {
    set_error(e.kind(), &e.to_string());
    status_of(&e)
}

fn guard(f: impl FnOnce() -> EslabStatus) -> EslabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("Panic", "panic inside eslab");
            EslabStatus::Panic
        }
    }
}

unsafe fn c_str<'a>(p: *const c_char) -> Result<&'a str, EslabStatus> {
    if p.is_null() {
        set_error("NullArgument", "null string argument");
        return Err(EslabStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("InvalidUtf8", "string argument is not UTF-8");
        EslabStatus::InvalidUtf8
    })
}

fn null_arg() -> EslabStatus {
    set_error("NullArgument", "null pointer argument");
    EslabStatus::NullArgument
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> EslabStatus {
    *out = Box::into_raw(Box::new(value));
    EslabStatus::Ok
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> EslabStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            EslabStatus::Ok
        }
        Err(_) => {
            set_error("InvalidInput", "output contains a nul byte");
            EslabStatus::InvalidInput
        }
    }
}

macro_rules! try_text {
    ($p:expr) => {
        match c_str($p) {
            Ok(s) => s,
            Err(status) => return status,
        }
    };
}

macro_rules! try_lib {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

/// Parses the text format into a new structure.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eslab_structure_parse(text: *const c_char, out: *mut *mut EslabStructure) -> EslabStatus {
    guard(|| {
        if out.is_null() {
            return null_arg();
        }
        let t = try_text!(text);
        put(out, EslabStructure(try_lib!(read_es(t))))
    })
}

/// Builds one of the named fixtures.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eslab_structure_fixture(name: *const c_char, out: *mut *mut EslabStructure) -> EslabStatus {
    guard(|| {
        if out.is_null() {
            return null_arg();
        }
        let n = try_text!(name);
        put(out, EslabStructure(try_lib!(fixture(n))))
    })
}

/// Generates a structure; `kind` is `random`, `forest` or `simple`.
///
/// # Safety
/// `kind` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eslab_structure_generate(
    kind: *const c_char,
    events: usize,
    seed: u64,
    out: *mut *mut EslabStructure,
) -> EslabStatus {
    guard(|| {
        if out.is_null() {
            return null_arg();
        }
        let k: GenKind = match try_text!(kind).parse() {
            Ok(k) => k,
            Err(msg) => return fail(Error::GenerationFailed(msg)),
        };
        put(out, EslabStructure(try_lib!(generate(&GenParams::new(k, events, seed)))))
    })
}

/// Releases a structure. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn eslab_structure_free(s: *mut EslabStructure) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of events, or 0 for null.
///
/// # Safety
/// `s` must be null or a live structure.
#[no_mangle]
pub unsafe extern "C" fn eslab_structure_event_count(s: *const EslabStructure) -> usize {
    s.as_ref().map_or(0, |s| s.0.len())
}

/// Clique number of the orthogonality graph, or 0 for null.
///
/// # Safety
/// `s` must be null or a live structure.
#[no_mangle]
pub unsafe extern "C" fn eslab_structure_degree(s: *const EslabStructure) -> usize {
    s.as_ref().map_or(0, |s| degree(&s.0))
}

/// Largest antichain size, or 0 for null.
///
/// # Safety
/// `s` must be null or a live structure.
#[no_mangle]
pub unsafe extern "C" fn eslab_structure_width(s: *const EslabStructure) -> usize {
    s.as_ref().map_or(0, |s| s.0.width())
}

/// Canonical text form; free the result with [`eslab_string_free`].
///
/// # Safety
/// `s` must be a live structure and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eslab_structure_serialize(s: *const EslabStructure, out: *mut *mut c_char) -> EslabStatus {
    guard(|| match (s.as_ref(), out.is_null()) {
        (Some(s), false) => put_string(out, serialize_es(&s.0)),
        _ => null_arg(),
    })
}

/// Labels with the named strategy: `exact`, `dilworth`, `stratified`,
/// `forest`, `simple` or `greedy`.
///
/// # Safety
/// `s` must be a live structure, `strategy` a nul-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eslab_label(
    s: *const EslabStructure,
    strategy: *const c_char,
    out: *mut *mut EslabLabelling,
) -> EslabStatus {
    guard(|| {
        let Some(s) = s.as_ref() else { return null_arg() };
        if out.is_null() {
            return null_arg();
        }
        let st: Strategy = match try_text!(strategy).parse() {
            Ok(st) => st,
            Err(msg) => return fail(Error::BadOrder(msg)),
        };
        let lab = try_lib!(label_with(&s.0, st, s.0.len(), DEFAULT_EXACT_LIMIT));
        put(out, EslabLabelling(lab))
    })
}

/// Reads a labelling file for `s`.
///
/// # Safety
/// `s` must be a live structure, `text` a nul-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eslab_labelling_parse(
    s: *const EslabStructure,
    text: *const c_char,
    out: *mut *mut EslabLabelling,
) -> EslabStatus {
    guard(|| {
        let Some(s) = s.as_ref() else { return null_arg() };
        if out.is_null() {
            return null_arg();
        }
        let t = try_text!(text);
        put(out, EslabLabelling(try_lib!(read_labels(&s.0, t))))
    })
}

/// Releases a labelling. Null is ignored.
///
/// # Safety
/// `l` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn eslab_labelling_free(l: *mut EslabLabelling) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Alphabet size, or 0 for null.
///
/// # Safety
/// `l` must be null or a live labelling.
#[no_mangle]
pub unsafe extern "C" fn eslab_labelling_alphabet_size(l: *const EslabLabelling) -> usize {
    l.as_ref().map_or(0, |l| l.0.alphabet_size)
}

/// Letter of the event named `event`.
///
/// # Safety
/// `l` must be a live labelling, `event` a nul-terminated string and
/// `letter` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eslab_labelling_letter(
    l: *const EslabLabelling,
    event: *const c_char,
    letter: *mut usize,
) -> EslabStatus {
    guard(|| {
        let Some(l) = l.as_ref() else { return null_arg() };
        if letter.is_null() {
            return null_arg();
        }
        let id = try_text!(event);
        match l.0.letter(id) {
            Some(x) => {
                *letter = x;
                EslabStatus::Ok
            }
            None => fail(Error::UnknownEvent(id.to_string())),
        }
    })
}

/// Counts orthogonal pairs sharing a letter; zero means the labelling is nice.
///
/// # Safety
/// `s` and `l` must be live handles and `clashes` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eslab_labelling_verify(
    s: *const EslabStructure,
    l: *const EslabLabelling,
    clashes: *mut usize,
) -> EslabStatus {
    guard(|| match (s.as_ref(), l.as_ref(), clashes.is_null()) {
        (Some(s), Some(l), false) => {
            *clashes = try_lib!(verify_labelling(&s.0, &l.0)).len();
            EslabStatus::Ok
        }
        _ => null_arg(),
    })
}

/// Labelling file text; free the result with [`eslab_string_free`].
///
/// # Safety
/// `l` must be a live labelling and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eslab_labelling_serialize(l: *const EslabLabelling, out: *mut *mut c_char) -> EslabStatus {
    guard(|| match (l.as_ref(), out.is_null()) {
        (Some(l), false) => put_string(out, serialize_labels(&l.0)),
        _ => null_arg(),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn eslab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn eslab_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |(m, _)| m.as_ptr()))
}

/// Error kind name of the last failure on this thread (for example
/// `NotAForest`), or null. The string is static.
#[no_mangle]
pub extern "C" fn eslab_last_error_kind() -> *const c_char {
    LAST_ERROR.with(|e| {
        e.borrow().as_ref().map_or(ptr::null(), |(_, k)| {
            // Kind names are static; keep one interned C string per name.
            intern(k).as_ptr()
        })
    })
}

fn intern(kind: &'static str) -> &'static CStr {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static KINDS: OnceLock<Mutex<HashMap<&'static str, &'static CStr>>> = OnceLock::new();
    let mut map = KINDS.get_or_init(Default::default).lock().unwrap_or_else(|p| p.into_inner());
    map.entry(kind).or_insert_with(|| Box::leak(CString::new(kind).expect("ascii kind").into_boxed_c_str()))
}

/// Clears the last error on this thread.
#[no_mangle]
pub extern "C" fn eslab_clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}
