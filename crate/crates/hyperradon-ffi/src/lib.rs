//! C ABI over the hyperradon crate.
//!
//! Every entry point takes an opaque `HrContext` handle, writes results
//! through out-pointers and returns an `HrStatus`. On any non-OK status
//! a human-readable message is available from `hr_last_error` until the
//! next call on the same context. Handles are not thread-safe; use one
//! context per thread.

use hyperradon::config::Tolerances;
use hyperradon::geometry::DiscGeodesic;
use hyperradon::radon::{radon_disc_closed_form, radon_disc_mode, singular_value};
use hyperradon::specfun::conical::conical_p;
use hyperradon::specfun::{bessel_k_imag, ConicalOrder};
use hyperradon::spectral::{poschl_teller_spectrum, LiouvilleExtension};
use hyperradon::Error;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result status of every FFI call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HrStatus {
    Ok = 0,
    /// A pointer argument was null or a handle was invalid.
    NullArgument = 1,
    /// Parameters were rejected before any computation ran.
    InvalidParameter = 2,
    /// A quadrature or series did not reach its tolerance.
    NonConvergence = 3,
    /// The computation panicked; the context is still usable.
    Internal = 4,
}

/// Opaque evaluation context: tolerances plus the last error message.
pub struct HrContext {
    tol: Tolerances,
    last_error: Option<CString>,
}

fn status_of(e: &Error) -> HrStatus {
    match e {
        Error::NonConvergence { .. } => HrStatus::NonConvergence,
        _ => HrStatus::InvalidParameter,
    }
}

impl HrContext {
    fn fail(&mut self, status: HrStatus, msg: String) -> HrStatus {
        let sanitized = msg.replace('\0', " ");
        self.last_error = Some(CString::new(sanitized).expect("no interior nul"));
        status
    }

    fn run<T>(
        &mut self,
        body: impl FnOnce(&Tolerances) -> Result<T, Error>,
        sink: impl FnOnce(T),
    ) -> HrStatus {
        let tol = self.tol.clone();
        match catch_unwind(AssertUnwindSafe(|| body(&tol))) {
            Ok(Ok(v)) => {
                self.last_error = None;
                sink(v);
                HrStatus::Ok
            }
            Ok(Err(e)) => self.fail(status_of(&e), e.to_string()),
            Err(_) => self.fail(HrStatus::Internal, "internal panic".into()),
        }
    }
}

/// Allocate a context with default tolerances. Free with
/// `hr_context_free`.
#[no_mangle]
pub extern "C" fn hr_context_new() -> *mut HrContext {
    Box::into_raw(Box::new(HrContext { tol: Tolerances::default(), last_error: None }))
}

/// Release a context. Passing null is a no-op.
#[no_mangle]
pub extern "C" fn hr_context_free(ctx: *mut HrContext) {
    if !ctx.is_null() {
        drop(unsafe { Box::from_raw(ctx) });
    }
}

/// Override one tolerance by name, e.g. `sigma_cutoff` = `60.0`.
/// Unknown keys and non-positive values are rejected.
///
/// # Safety
/// `ctx` must come from `hr_context_new`; `key` must be a NUL-terminated
/// string.
#[no_mangle]
pub unsafe extern "C" fn hr_context_set(
    ctx: *mut HrContext,
    key: *const c_char,
    value: f64,
) -> HrStatus {
    let Some(ctx) = ctx.as_mut() else { return HrStatus::NullArgument };
    if key.is_null() {
        return ctx.fail(HrStatus::NullArgument, "key is null".into());
    }
    let Ok(key) = CStr::from_ptr(key).to_str() else {
        return ctx.fail(HrStatus::InvalidParameter, "key is not utf-8".into());
    };
    match ctx.tol.set(key, &format!("{value}")) {
        Ok(()) => {
            ctx.last_error = None;
            HrStatus::Ok
        }
        Err(e) => ctx.fail(status_of(&e), e.to_string()),
    }
}

/// Message for the most recent failing call on this context, or null if
/// the last call succeeded. The pointer is owned by the context and is
/// invalidated by the next call on it.
///
/// # Safety
/// `ctx` must come from `hr_context_new`.
#[no_mangle]
pub unsafe extern "C" fn hr_last_error(ctx: *const HrContext) -> *const c_char {
    match ctx.as_ref().and_then(|c| c.last_error.as_ref()) {
        Some(s) => s.as_ptr(),
        None => std::ptr::null(),
    }
}

/// Modified Bessel function of imaginary order, K_{i kappa}(x), with an
/// a-posteriori error estimate.
///
/// # Safety
/// All pointers must be valid; `ctx` must come from `hr_context_new`.
#[no_mangle]
pub unsafe extern "C" fn hr_bessel_k_imag(
    ctx: *mut HrContext,
    kappa: f64,
    x: f64,
    out_value: *mut f64,
    out_abs_error: *mut f64,
) -> HrStatus {
    let Some(ctx) = ctx.as_mut() else { return HrStatus::NullArgument };
    if out_value.is_null() || out_abs_error.is_null() {
        return ctx.fail(HrStatus::NullArgument, "output pointer is null".into());
    }
    ctx.run(
        |_| bessel_k_imag(kappa, x),
        |r| {
            *out_value = r.re();
            *out_abs_error = r.abs_error;
        },
    )
}

/// Conical function P^m_{i kappa - 1/2}(x) for x > 1.
///
/// # Safety
/// All pointers must be valid; `ctx` must come from `hr_context_new`.
#[no_mangle]
pub unsafe extern "C" fn hr_conical_p(
    ctx: *mut HrContext,
    kappa: f64,
    m: i32,
    x: f64,
    out_value: *mut f64,
    out_abs_error: *mut f64,
) -> HrStatus {
    let Some(ctx) = ctx.as_mut() else { return HrStatus::NullArgument };
    if out_value.is_null() || out_abs_error.is_null() {
        return ctx.fail(HrStatus::NullArgument, "output pointer is null".into());
    }
    ctx.run(
        |_| conical_p(ConicalOrder { kappa, m }, x),
        |r| {
            *out_value = r.re();
            *out_abs_error = r.abs_error;
        },
    )
}

/// Bound-state orders of the depth-k well, smallest first. Writes at
/// most `cap` values into `out` and stores the true count in
/// `out_count`; call again with a larger buffer if truncated.
///
/// # Safety
/// `out` must point to at least `cap` doubles when `cap > 0`.
#[no_mangle]
pub unsafe extern "C" fn hr_poschl_teller_spectrum(
    ctx: *mut HrContext,
    k: u32,
    out: *mut f64,
    cap: usize,
    out_count: *mut usize,
) -> HrStatus {
    let Some(ctx) = ctx.as_mut() else { return HrStatus::NullArgument };
    if out_count.is_null() || (cap > 0 && out.is_null()) {
        return ctx.fail(HrStatus::NullArgument, "output pointer is null".into());
    }
    if k == 0 {
        return ctx.fail(HrStatus::InvalidParameter, "well depth k must be >= 1".into());
    }
    let spec = poschl_teller_spectrum(k);
    *out_count = spec.len();
    for (i, v) in spec.iter().take(cap).enumerate() {
        *out.add(i) = *v;
    }
    ctx.last_error = None;
    HrStatus::Ok
}

/// Bound-state order 2(n + theta/pi) of the boundary-angle extension.
///
/// # Safety
/// `ctx` must come from `hr_context_new`; `out_nu` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hr_extension_bound_order(
    ctx: *mut HrContext,
    theta: f64,
    n: i64,
    out_nu: *mut f64,
) -> HrStatus {
    let Some(ctx) = ctx.as_mut() else { return HrStatus::NullArgument };
    if out_nu.is_null() {
        return ctx.fail(HrStatus::NullArgument, "output pointer is null".into());
    }
    let ext = LiouvilleExtension { theta, k: 1.0 };
    let nu = ext.bound_order(n);
    if nu <= 0.0 {
        return ctx.fail(
            HrStatus::InvalidParameter,
            format!("index n = {n} gives non-positive order {nu}"),
        );
    }
    *out_nu = nu;
    ctx.last_error = None;
    HrStatus::Ok
}

/// Geodesic Radon image of the disc eigenmode (k, nu) over the geodesic
/// at angle theta with offset xi, by adaptive quadrature. The context's
/// `sigma_cutoff` tolerance controls the arc truncation.
///
/// # Safety
/// All pointers must be valid; `ctx` must come from `hr_context_new`.
#[no_mangle]
pub unsafe extern "C" fn hr_radon_disc(
    ctx: *mut HrContext,
    k: i32,
    nu: f64,
    theta: f64,
    xi: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> HrStatus {
    let Some(ctx) = ctx.as_mut() else { return HrStatus::NullArgument };
    if out_re.is_null() || out_im.is_null() {
        return ctx.fail(HrStatus::NullArgument, "output pointer is null".into());
    }
    ctx.run(
        |tol| {
            let g = DiscGeodesic { theta, xi, orientation: 1 };
            radon_disc_mode(k, nu, &g, tol.sigma_cutoff).map(|r| r.value)
        },
        |v| {
            *out_re = v.re;
            *out_im = v.im;
        },
    )
}

/// Closed form of the disc Radon image, for cross-checking the
/// quadrature route.
///
/// # Safety
/// All pointers must be valid; `ctx` must come from `hr_context_new`.
#[no_mangle]
pub unsafe extern "C" fn hr_radon_disc_closed_form(
    ctx: *mut HrContext,
    k: i32,
    nu: f64,
    theta: f64,
    xi: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> HrStatus {
    let Some(ctx) = ctx.as_mut() else { return HrStatus::NullArgument };
    if out_re.is_null() || out_im.is_null() {
        return ctx.fail(HrStatus::NullArgument, "output pointer is null".into());
    }
    ctx.run(
        |_| {
            let g = DiscGeodesic { theta, xi, orientation: 1 };
            radon_disc_closed_form(k, nu, &g)
        },
        |v| {
            *out_re = v.re;
            *out_im = v.im;
        },
    )
}

/// Singular value of the Radon transform at spectral order nu.
///
/// # Safety
/// All pointers must be valid; `ctx` must come from `hr_context_new`.
#[no_mangle]
pub unsafe extern "C" fn hr_singular_value(
    ctx: *mut HrContext,
    nu: f64,
    out_value: *mut f64,
) -> HrStatus {
    let Some(ctx) = ctx.as_mut() else { return HrStatus::NullArgument };
    if out_value.is_null() {
        return ctx.fail(HrStatus::NullArgument, "output pointer is null".into());
    }
    ctx.run(|_| singular_value(nu), |v| *out_value = v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bessel_value_round_trips_through_the_abi() {
        let ctx = hr_context_new();
        let (mut v, mut e) = (0.0, 0.0);
        let st = unsafe { hr_bessel_k_imag(ctx, 1.0, 2.0, &mut v, &mut e) };
        assert_eq!(st, HrStatus::Ok);
        let direct = bessel_k_imag(1.0, 2.0).unwrap();
        assert_eq!(v, direct.re());
        assert!(e > 0.0);
        assert!(unsafe { hr_last_error(ctx) }.is_null());
        hr_context_free(ctx);
    }

    #[test]
    fn errors_set_a_message_and_the_matching_status() {
        let ctx = hr_context_new();
        let (mut v, mut e) = (0.0, 0.0);
        // conical functions live on x > 1
        let st = unsafe { hr_conical_p(ctx, 1.0, 0, 0.5, &mut v, &mut e) };
        assert_eq!(st, HrStatus::InvalidParameter);
        let msg = unsafe { CStr::from_ptr(hr_last_error(ctx)) };
        assert!(!msg.to_bytes().is_empty());
        hr_context_free(ctx);
    }

    #[test]
    fn null_handles_and_pointers_are_rejected() {
        let (mut v, mut e) = (0.0, 0.0);
        let st = unsafe { hr_bessel_k_imag(std::ptr::null_mut(), 1.0, 2.0, &mut v, &mut e) };
        assert_eq!(st, HrStatus::NullArgument);
        let ctx = hr_context_new();
        let st = unsafe { hr_bessel_k_imag(ctx, 1.0, 2.0, std::ptr::null_mut(), &mut e) };
        assert_eq!(st, HrStatus::NullArgument);
        hr_context_free(ctx);
    }

    #[test]
    fn spectrum_reports_count_and_truncates_to_the_buffer() {
        let ctx = hr_context_new();
        let mut out = [0.0f64; 3];
        let mut count = 0usize;
        let st = unsafe { hr_poschl_teller_spectrum(ctx, 5, out.as_mut_ptr(), 3, &mut count) };
        assert_eq!(st, HrStatus::Ok);
        assert_eq!(count, 5);
        assert_eq!(out, [0.5, 1.5, 2.5]);
        hr_context_free(ctx);
    }

    #[test]
    fn tolerance_override_reaches_the_quadrature() {
        let ctx = hr_context_new();
        let key = CString::new("sigma_cutoff").unwrap();
        assert_eq!(unsafe { hr_context_set(ctx, key.as_ptr(), 10.0) }, HrStatus::Ok);
        let (mut re, mut im) = (0.0, 0.0);
        // a cutoff of 10 leaves a visible tail, so the call must report
        // non-convergence instead of a silently truncated value
        let st = unsafe { hr_radon_disc(ctx, 1, 1.0, 0.0, 0.3, &mut re, &mut im) };
        assert_eq!(st, HrStatus::NonConvergence);
        hr_context_free(ctx);
    }

    #[test]
    fn quadrature_and_closed_form_agree_through_the_abi() {
        let ctx = hr_context_new();
        let (mut qr, mut qi, mut cr, mut ci) = (0.0, 0.0, 0.0, 0.0);
        let st = unsafe { hr_radon_disc(ctx, 2, 1.5, 0.4, 0.8, &mut qr, &mut qi) };
        assert_eq!(st, HrStatus::Ok);
        let st = unsafe { hr_radon_disc_closed_form(ctx, 2, 1.5, 0.4, 0.8, &mut cr, &mut ci) };
        assert_eq!(st, HrStatus::Ok);
        let scale = (cr * cr + ci * ci).sqrt();
        assert!(((qr - cr).powi(2) + (qi - ci).powi(2)).sqrt() < 1e-6 * scale);
        hr_context_free(ctx);
    }

    #[test]
    fn generated_header_declares_the_api() {
        let header = std::fs::read_to_string(
            std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hyperradon.h"),
        )
        .expect("header generated at build time");
        for sym in [
            "HrContext",
            "HrStatus",
            "hr_context_new",
            "hr_context_free",
            "hr_context_set",
            "hr_last_error",
            "hr_bessel_k_imag",
            "hr_conical_p",
            "hr_poschl_teller_spectrum",
            "hr_radon_disc",
            "hr_radon_disc_closed_form",
            "hr_singular_value",
        ] {
            assert!(header.contains(sym), "missing {sym}");
        }
        assert!(header.contains("HYPERRADON_H"));
    }
}
