//! Shared inputs for the criterion benches.

use forestsym::graphs::HessenbergFunction;

/// The complete graph's Hessenberg function on `[n]`.
pub fn complete(n: usize) -> HessenbergFunction {
    HessenbergFunction::new(vec![n; n]).expect("constant n is a Hessenberg function")
}

/// The path on `[n]`.
pub fn path(n: usize) -> HessenbergFunction {
    HessenbergFunction::new((1..=n).map(|i| (i + 1).min(n)).collect()).expect("path is a Hessenberg function")
}

/// A mid-density function: `m(i) = min(i + 2, n)`.
pub fn band(n: usize) -> HessenbergFunction {
    HessenbergFunction::new((1..=n).map(|i| (i + 2).min(n)).collect()).expect("band is a Hessenberg function")
}
