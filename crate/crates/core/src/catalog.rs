//! Group labels and the default test catalog.
//!
//! Grammar: `Z<n>`, `D<2n>`, `Q<4n>`, `S<n>`, `A<n>`, or factors joined by `x`
//! for direct products (left to right). Catalog files hold one label per
//! line; blank lines and `#` comments are skipped.

use crate::error::{Error, Result};
use crate::group::*;

fn parse_err(label: &str, reason: impl Into<String>) -> Error {
    Error::Parse { label: label.to_string(), reason: reason.into() }
}

/// Builds the group named by `label` within the element budget.
pub fn parse_group(label: &str) -> Result<GroupTable> {
    parse_group_with_budget(label, DEFAULT_BUDGET)
}

pub fn parse_group_with_budget(label: &str, budget: usize) -> Result<GroupTable> {
    let label = label.trim();
    if label.is_empty() {
        return Err(parse_err(label, "empty label"));
    }
    let factors: Vec<&str> = label.split('x').collect();
    let mut sizes = Vec::with_capacity(factors.len());
    for f in &factors {
        sizes.push(factor_size(f).map_err(|reason| parse_err(label, reason))?);
    }
    let total = sizes.iter().try_fold(1u128, |acc, &s| acc.checked_mul(s)).unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(Error::budget(format!("group {label}"), total, budget as u128));
    }
    let mut group = build_factor(factors[0])?;
    for f in &factors[1..] {
        group = direct_product_with_budget(&group, &build_factor(f)?, budget)?;
    }
    Ok(group.with_label(label))
}

/// Parses a factor into its family letter and numeric argument.
fn split_factor(f: &str) -> std::result::Result<(char, usize), String> {
    let mut chars = f.chars();
    let family = chars.next().ok_or("empty factor")?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("factor {f:?} needs a decimal size after the family letter"));
    }
    let n = digits.parse::<usize>().map_err(|e| format!("factor {f:?}: {e}"))?;
    Ok((family, n))
}

/// Group order named by a factor, without building it.
fn factor_size(f: &str) -> std::result::Result<u128, String> {
    let (family, n) = split_factor(f)?;
    let factorial = |k: usize| (1..=k as u128).try_fold(1u128, |acc, i| acc.checked_mul(i)).unwrap_or(u128::MAX);
    let valid = match family {
        'Z' | 'S' => n >= 1,
        'D' => n >= 6 && n % 2 == 0,
        'Q' => n >= 8 && n % 4 == 0,
        'A' => n >= 3,
        _ => true,
    };
    if !valid {
        return Err(format!("no group {f:?} in this family"));
    }
    match family {
        'Z' | 'D' | 'Q' => Ok(n as u128),
        'S' => Ok(factorial(n)),
        'A' => Ok(factorial(n) / 2),
        _ => Err(format!("unknown family {family:?} in {f:?}; expected one of Z, D, Q, S, A")),
    }
}

fn build_factor(f: &str) -> Result<GroupTable> {
    let (family, n) = split_factor(f).map_err(|reason| parse_err(f, reason))?;
    match family {
        'Z' => make_cyclic(n),
        'D' => make_dihedral(n),
        'Q' => make_generalized_quaternion(n),
        'S' => make_symmetric(n),
        'A' => make_alternating(n),
        _ => Err(parse_err(f, "unknown family")),
    }
}

/// Labels from catalog text; errors carry the 1-based line number.
pub fn parse_catalog(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line.split_whitespace().count() != 1 {
            return Err(parse_err(line, format!("line {}: one label per line", i + 1)));
        }
        for f in line.split('x') {
            split_factor(f)
                .and_then(|_| factor_size(f))
                .map_err(|reason| parse_err(line, format!("line {}: {reason}", i + 1)))?;
        }
        out.push(line.to_string());
    }
    Ok(out)
}

/// Cyclic groups up to 24, dihedral up to 40, quaternion up to 40,
/// symmetric and alternating up to degree 7, and a set of direct products.
pub fn default_catalog() -> Vec<String> {
    let mut v: Vec<String> = (1..=24).map(|n| format!("Z{n}")).collect();
    v.extend((6..=40).step_by(2).map(|n| format!("D{n}")));
    v.extend((8..=40).step_by(4).map(|n| format!("Q{n}")));
    v.extend((1..=7).map(|n| format!("S{n}")));
    v.extend((3..=7).map(|n| format!("A{n}")));
    v.extend(
        [
            "Z2xZ2", "Z2xZ2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ6", "Z4xZ4", "Z3xZ9", "S3xZ2", "S3xZ3", "S3xS3", "A4xZ2",
            "A4xZ3", "D8xZ2", "D10xZ3", "Q8xZ2", "Q8xZ3", "D8xD8", "Q8xQ8", "S4xZ2",
        ]
        .map(String::from),
    );
    v
}
