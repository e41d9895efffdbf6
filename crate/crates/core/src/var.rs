//! Named Hodge variables.
//!
//! A variable is either a Hodge number `h^{p,j}` or the irregularity `q`.
//! The constructor [`HodgeVar::hodge`] canonicalizes under Hodge symmetry
//! (indices sorted so p <= j) and identifies `h^{0,1}` with `q`, so formulas
//! written in either name compare structurally.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum HodgeVar {
    /// Hodge number h^{p,j}, stored with p <= j.
    H { p: u32, j: u32 },
    /// The irregularity q = h^{0,1}.
    Q,
}

impl HodgeVar {
    /// Canonical variable for the Hodge number h^{p,j}.
    pub fn hodge(p: u32, j: u32) -> Self {
        let (a, b) = if p <= j { (p, j) } else { (j, p) };
        if (a, b) == (0, 1) {
            HodgeVar::Q
        } else {
            HodgeVar::H { p: a, j: b }
        }
    }

    pub fn indices(&self) -> Option<(u32, u32)> {
        match self {
            HodgeVar::H { p, j } => Some((*p, *j)),
            HodgeVar::Q => None,
        }
    }

    pub fn latex(&self) -> String {
        match self {
            HodgeVar::H { p, j } => format!("h^{{{p},{j}}}"),
            HodgeVar::Q => "q".to_string(),
        }
    }
}

impl fmt::Display for HodgeVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HodgeVar::H { p, j } => write!(f, "h^{{{p},{j}}}"),
            HodgeVar::Q => write!(f, "q"),
        }
    }
}

/// Parse "q", "h^{p,j}", "h{p,j}" or the compact "hpj" (single digits).
pub fn parse_var(s: &str) -> Option<HodgeVar> {
    let t = s.trim();
    if t == "q" {
        return Some(HodgeVar::Q);
    }
    let body = t
        .strip_prefix("h^{")
        .or_else(|| t.strip_prefix("h{"))
        .and_then(|r| r.strip_suffix('}'));
    if let Some(body) = body {
        let mut it = body.split(',');
        let p = it.next()?.trim().parse().ok()?;
        let j = it.next()?.trim().parse().ok()?;
        if it.next().is_some() {
            return None;
        }
        return Some(HodgeVar::hodge(p, j));
    }
    // compact form h12 -> h^{1,2}
    if let Some(digits) = t.strip_prefix('h') {
        let ds: Vec<u32> = digits
            .chars()
            .map(|c| c.to_digit(10))
            .collect::<Option<_>>()?;
        if ds.len() == 2 {
            return Some(HodgeVar::hodge(ds[0], ds[1]));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalization() {
        assert_eq!(HodgeVar::hodge(2, 1), HodgeVar::hodge(1, 2));
        assert_eq!(HodgeVar::hodge(1, 0), HodgeVar::Q);
        assert_eq!(HodgeVar::hodge(0, 1), HodgeVar::Q);
        assert_eq!(HodgeVar::hodge(0, 0), HodgeVar::H { p: 0, j: 0 });
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_var("q"), Some(HodgeVar::Q));
        assert_eq!(parse_var("h^{1,2}"), Some(HodgeVar::H { p: 1, j: 2 }));
        assert_eq!(parse_var("h21"), Some(HodgeVar::H { p: 1, j: 2 }));
        assert_eq!(parse_var("h10"), Some(HodgeVar::Q));
        assert_eq!(parse_var("x"), None);
    }
}
