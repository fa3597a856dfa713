//! The exact constants of the decomposition lemmas.
//!
//! With `c_{n,m} = 1/q` the recurrence gives `c_{n,m+1} = 1/(2q + 3)`, so every
//! constant is a unit fraction and is computed on denominators directly.

use crate::error::{Error, Result};
use crate::Weight;

/// Hamiltonian separator lemma.
pub fn c_hamil1() -> Weight {
    Weight::frac(1, 5)
}

/// Hamiltonian growth lemma.
pub fn c_hamil2() -> Weight {
    Weight::frac(1, 5)
}

/// Product of the two Hamiltonian constants.
pub fn c_hamil_combined() -> Weight {
    c_hamil1() * c_hamil2()
}

/// `c'/(2(1+c'))` with `c' = 1/25`.
pub fn c_full() -> Weight {
    let c = c_hamil_combined();
    c / (Weight::int(2) * (Weight::ONE + c))
}

pub fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_range(n: usize, m: usize) -> Result<()> {
    if n == 0 || m > max_edges(n) {
        return Err(Error::Precondition(format!("invalid subdivision parameters n={n}, m={m}")));
    }
    Ok(())
}

fn q_nm(n: usize, m: usize) -> Result<u64> {
    check_range(n, m)?;
    // n = 1 only admits m = 0 and the lemma holds through its third case; the
    // constant is taken to be 1.
    let mut q = if n == 1 { 1 } else { (n - 1) as u64 };
    for _ in 0..m {
        q = q
            .checked_mul(2)
            .and_then(|x| x.checked_add(3))
            .ok_or_else(|| Error::Precondition(format!("c_{{{n},{m}}} does not fit in 64-bit denominators")))?;
    }
    Ok(q)
}

/// `c_{n,m}`.
pub fn c_nm(n: usize, m: usize) -> Result<Weight> {
    Ok(Weight::frac(1, q_nm(n, m)?))
}

/// `beta_{n,m} = c_{n,m-1} / (2(1 + c_{n,m-1}))`, defined for `m >= 1`.
pub fn beta_nm(n: usize, m: usize) -> Result<Weight> {
    if m == 0 {
        return Err(Error::Precondition("beta is defined for m >= 1".into()));
    }
    check_range(n, m)?;
    let q = q_nm(n, m - 1)?;
    Ok(Weight::frac(1, 2 * (q + 1)))
}

/// `c_full * c_{n, C(n,2)}`.
pub fn c_subdiv(n: usize) -> Result<Weight> {
    Ok(c_full() * c_nm(n, max_edges(n))?)
}
