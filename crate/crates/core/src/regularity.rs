//! Regularity bound for the exterior-algebra cohomology modules.
//!
//! With k the generic and f the maximal Albanese fiber dimension, set
//! l = max{k, f-1}. For p > l the module of p-form cohomology is
//! (d - p + l)-regular; for p <= l the bound does not apply.

use crate::error::{CoreError, Result};

/// d - p + l when p > l, where l = max{k, f-1}; errors when inputs are out
/// of range or p <= l.
pub fn regularity_bound(d: u32, p: u32, k: u32, f: u32) -> Result<u32> {
    if p > d {
        return Err(CoreError::FormDegreeOutOfRange { p, d });
    }
    if k > f || f > d {
        return Err(CoreError::InvalidProfile(format!(
            "fiber dimensions need 0 <= k <= f <= d, got k={k} f={f}"
        )));
    }
    let l = k.max(f.saturating_sub(1));
    if p <= l {
        return Err(CoreError::RegularityInapplicable { p, l });
    }
    Ok(d - p + l)
}
