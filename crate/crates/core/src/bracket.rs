//! ν-bracket vectors, the ν̂ base path, and the simplified hook and two-row
//! coordinates read off bracket vectors.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::path::{IncrementVector, LatticePath, PathError, RunLengthEncoding};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("path {path} is not weakly above the base {base}")]
    BelowBase { path: String, base: String },
    #[error("bracket vectors have different shapes")]
    ShapeMismatch,
    #[error("not a {family} bracket vector for (a,b,k) = ({a},{b},{k}): {reason}")]
    Malformed {
        family: &'static str,
        a: usize,
        b: usize,
        k: usize,
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BracketVector {
    pub entries: Vec<usize>,
    /// `f_0, …, f_n`: the last index at which the base path reaches height `i`.
    pub fixed_positions: Vec<usize>,
}

/// `(ν̂_0, δ_1, …, δ_n)` with `ν̂_0 = Σν_i − Σδ_i`.
pub fn nu_hat(nu: &RunLengthEncoding, delta: &IncrementVector) -> Result<LatticePath, PathError> {
    delta.validate(nu)?;
    let mut values = Vec::with_capacity(nu.values().len());
    values.push(nu.east_count() - delta.sum());
    values.extend_from_slice(delta.values());
    Ok(RunLengthEncoding::new(values)?.to_path())
}

/// Fixed positions of a base path.
pub fn fixed_positions(base: &LatticePath) -> Vec<usize> {
    let heights = base.heights();
    let mut f = vec![0; base.north_count() + 1];
    for (idx, &h) in heights.iter().enumerate() {
        f[h] = idx;
    }
    f
}

/// The base-bracket vector of `mu`.
pub fn bracket_vector(base: &LatticePath, mu: &LatticePath) -> Result<BracketVector, BracketError> {
    if !mu.is_weakly_above(base) {
        return Err(BracketError::BelowBase {
            path: mu.to_string(),
            base: base.to_string(),
        });
    }
    let fixed = fixed_positions(base);
    let len = base.len() + 1;
    let mut entries: Vec<Option<usize>> = vec![None; len];
    for (i, &f) in fixed.iter().enumerate() {
        entries[f] = Some(i);
    }
    let mut counts = vec![0usize; fixed.len()];
    for h in mu.heights() {
        counts[h] += 1;
    }
    for (i, &f) in fixed.iter().enumerate() {
        let mut remaining = counts[i] - 1;
        let mut spot = f;
        while remaining > 0 {
            if spot == 0 {
                return Err(BracketError::BelowBase {
                    path: mu.to_string(),
                    base: base.to_string(),
                });
            }
            spot -= 1;
            if entries[spot].is_none() {
                entries[spot] = Some(i);
                remaining -= 1;
            }
        }
    }
    let entries = entries
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| BracketError::BelowBase {
            path: mu.to_string(),
            base: base.to_string(),
        })?;
    Ok(BracketVector {
        entries,
        fixed_positions: fixed,
    })
}

/// Entrywise comparison of two vectors over the same base.
pub fn componentwise_leq(b1: &BracketVector, b2: &BracketVector) -> Result<bool, BracketError> {
    if b1.entries.len() != b2.entries.len() || b1.fixed_positions != b2.fixed_positions {
        return Err(BracketError::ShapeMismatch);
    }
    Ok(b1.entries.iter().zip(&b2.entries).all(|(x, y)| x <= y))
}

/// `(s, t)` coordinates of an element of the hook family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HookCoords {
    pub s: usize,
    pub t: usize,
}

/// `(a − s, u, v)` coordinates of an element of the two-row family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoRowTriple {
    pub height: usize,
    pub u: usize,
    pub v: usize,
}

fn malformed<T>(
    family: &'static str,
    (a, b, k): (usize, usize, usize),
    reason: String,
) -> Result<T, BracketError> {
    Err(BracketError::Malformed {
        family,
        a,
        b,
        k,
        reason,
    })
}

/// Splits a word into `hi^t lo^rest`, returning `t`.
fn split_two_values(word: &[usize], hi: usize, lo: usize) -> Option<usize> {
    let t = word.iter().take_while(|&&x| x == hi).count();
    word[t..].iter().all(|&x| x == lo).then_some(t)
}

/// Reads `(s, t)` from a bracket vector over `ν̂(k)` for the hook with
/// `ν = E N^{a−1} E^{b−1} N` (`ν = E^b N` when `a = 1`), rejecting vectors
/// that do not have the hook shape.
pub fn hook_coords(
    bv: &BracketVector,
    a: usize,
    b: usize,
    k: usize,
) -> Result<HookCoords, BracketError> {
    let shape = (a, b, k);
    const FAMILY: &str = "hook";
    if a == 0 || b == 0 || k >= b.max(1) {
        return malformed(FAMILY, shape, "need a, b >= 1 and k < b".into());
    }
    let e = &bv.entries;
    if e.len() != a + b + 1 {
        return malformed(
            FAMILY,
            shape,
            format!("length {} != {}", e.len(), a + b + 1),
        );
    }
    if a == 1 {
        if bv.fixed_positions != [b, b + 1] {
            return malformed(FAMILY, shape, "fixed positions differ from E^bN".into());
        }
        let s = e[b - 1];
        let t = split_two_values(&e[..b - 1], 1, 0).ok_or_else(|| BracketError::Malformed {
            family: FAMILY,
            a,
            b,
            k,
            reason: "leading block is not 1^t 0^r".into(),
        })?;
        if s > 1 || (s == 1 && t != b - 1) {
            return malformed(FAMILY, shape, format!("(s,t) = ({s},{t}) out of range"));
        }
        return Ok(HookCoords { s, t });
    }

    let mut expected_fixed = vec![b - k];
    expected_fixed.extend((1..=a - 2).map(|i| b - k + i));
    expected_fixed.push(b + a - 1);
    expected_fixed.push(b + a);
    if bv.fixed_positions != expected_fixed {
        return malformed(
            FAMILY,
            shape,
            "fixed positions differ from nu-hat(k)".into(),
        );
    }
    let s = e[b - k - 1];
    let mut ab: Vec<usize> = e[..b - k - 1].to_vec();
    ab.extend_from_slice(&e[b - k + a - 1..b + a - 1]);
    let t = split_two_values(&ab, a, a - 1).ok_or_else(|| BracketError::Malformed {
        family: FAMILY,
        a,
        b,
        k,
        reason: "(alpha, beta) is not a^t (a-1)^r".into(),
    })?;
    let ok = match s {
        s if s == a - 1 => t + k < b,
        s if s == a => t + 1 + k >= b,
        s => s <= a - 2,
    };
    if !ok {
        return malformed(FAMILY, shape, format!("(s,t) = ({s},{t}) out of range"));
    }
    Ok(HookCoords { s, t })
}

/// Reads `(a − s, u, v)` from a bracket vector over `ν̂(k) = E^{a+b−k} N E^k N`.
pub fn two_row_triple(
    bv: &BracketVector,
    a: usize,
    b: usize,
    k: usize,
) -> Result<TwoRowTriple, BracketError> {
    let shape = (a, b, k);
    const FAMILY: &str = "two-row";
    if k > b {
        return malformed(FAMILY, shape, "need k <= b".into());
    }
    let e = &bv.entries;
    let f0 = a + b - k;
    if e.len() != a + b + 3 || bv.fixed_positions != [f0, a + b + 1, a + b + 2] {
        return malformed(FAMILY, shape, "shape differs from nu-hat(k)".into());
    }
    let s = e[..f0].iter().rev().take_while(|&&x| x == 0).count();
    if s > a {
        return malformed(FAMILY, shape, format!("{s} non-fixed zeros exceed a"));
    }
    let alpha = &e[..f0 - s];
    let beta = &e[f0 + 1..a + b + 1];
    let mut ab = alpha.to_vec();
    ab.extend_from_slice(beta);
    if split_two_values(&ab, 2, 1).is_none() {
        return malformed(FAMILY, shape, "(alpha, beta) is not 2^t 1^r".into());
    }
    let u = alpha.iter().filter(|&&x| x == 2).count();
    let v = beta.iter().filter(|&&x| x == 2).count();
    Ok(TwoRowTriple {
        height: a - s,
        u,
        v,
    })
}

/// The hook base path `E N^{a−1} E^{b−1} N`, or `E^b N` when `a = 1`.
pub fn hook_nu(a: usize, b: usize) -> LatticePath {
    hook_run_lengths(a, b).to_path()
}

pub fn hook_run_lengths(a: usize, b: usize) -> RunLengthEncoding {
    assert!(a >= 1 && b >= 1);
    let values = if a == 1 {
        vec![b, 0]
    } else {
        let mut v = vec![1];
        v.extend(std::iter::repeat_n(0, a - 2));
        v.push(b - 1);
        v.push(0);
        v
    };
    RunLengthEncoding::new(values).expect("nonempty")
}

/// `δ(k) = (0^{a−2}, k, 0)`; for `a = 1` the only increment vector is `(0)`.
pub fn hook_delta(a: usize, k: usize) -> IncrementVector {
    if a == 1 {
        return IncrementVector::zeros(1);
    }
    let mut v = vec![0; a];
    v[a - 2] = k;
    IncrementVector::new(v)
}

/// `E^a N E^b N`.
pub fn two_row_nu(a: usize, b: usize) -> LatticePath {
    RunLengthEncoding::new(vec![a, b, 0])
        .expect("nonempty")
        .to_path()
}

/// `δ(k) = (k, 0)`.
pub fn two_row_delta(k: usize) -> IncrementVector {
    IncrementVector::new(vec![k, 0])
}
