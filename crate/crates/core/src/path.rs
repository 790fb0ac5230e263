//! Lattice paths over `{N, E}`, their run-length encodings, increment vectors,
//! δ-altitude profiles and δ-rotations.
//!
//! A path always starts at the origin. Its endpoint is `(#E, #N)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised by path parsing and path-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("unexpected character {ch:?} at offset {offset}")]
    MalformedCharacter { ch: char, offset: usize },
    #[error("zero exponent at offset {offset}")]
    ZeroExponent { offset: usize },
    #[error("exponent without a preceding step at offset {offset}")]
    DanglingExponent { offset: usize },
    #[error("malformed run-length encoding: {0}")]
    MalformedRunLength(String),
    #[error("malformed increment vector: {0}")]
    MalformedIncrement(String),
    #[error("increment vector has {got} entries but the path has {expected} north steps")]
    IncrementLength { expected: usize, got: usize },
    #[error("increment entry delta_{index} = {value} exceeds nu_{index} = {bound}")]
    IncrementOutOfRange {
        index: usize,
        value: usize,
        bound: usize,
    },
    #[error("path {path} does not share endpoints with {base}")]
    EndpointMismatch { path: String, base: String },
    #[error("path {path} is not weakly above {base}")]
    NotAbove { path: String, base: String },
    #[error("{count} paths lie above {base}, more than the limit of {limit}")]
    TooManyPaths {
        base: String,
        count: u128,
        limit: usize,
    },
    #[error("no matching altitude after valley {position} of {path}")]
    RotationTargetMissing { path: String, position: usize },
}

/// A unit step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    N,
    E,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
        }
    }
}

/// A finite word over `{N, E}` read as a lattice path from the origin.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn empty() -> Self {
        LatticePath { steps: Vec::new() }
    }

    /// The top path `N^n E^m`.
    pub fn top(north: usize, east: usize) -> Self {
        let mut steps = vec![Step::N; north];
        steps.extend(std::iter::repeat_n(Step::E, east));
        LatticePath { steps }
    }

    /// Builds the path whose `i`-th north step sits at x-coordinate `xs[i]`,
    /// padded with east steps up to `east` in total.
    ///
    /// `xs` must be weakly increasing and bounded by `east`.
    pub fn from_north_positions(xs: &[usize], east: usize) -> Self {
        let mut steps = Vec::with_capacity(xs.len() + east);
        let mut x = 0;
        for &target in xs {
            debug_assert!(target >= x && target <= east);
            steps.extend(std::iter::repeat_n(Step::E, target - x));
            steps.push(Step::N);
            x = target;
        }
        steps.extend(std::iter::repeat_n(Step::E, east - x));
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn north_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::N).count()
    }

    pub fn east_count(&self) -> usize {
        self.steps.len() - self.north_count()
    }

    /// `(number of E steps, number of N steps)`.
    pub fn endpoint(&self) -> (usize, usize) {
        (self.east_count(), self.north_count())
    }

    /// x-coordinate of each north step, in order.
    pub fn north_positions(&self) -> Vec<usize> {
        let mut x = 0;
        let mut out = Vec::new();
        for &s in &self.steps {
            match s {
                Step::E => x += 1,
                Step::N => out.push(x),
            }
        }
        out
    }

    /// y-coordinates of the lattice points along the path, starting at the origin.
    pub fn heights(&self) -> Vec<usize> {
        let mut y = 0;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(0);
        for &s in &self.steps {
            if s == Step::N {
                y += 1;
            }
            out.push(y);
        }
        out
    }

    /// True when both paths end at the same point and `self` never goes
    /// strictly below `base`.
    pub fn is_weakly_above(&self, base: &LatticePath) -> bool {
        if self.endpoint() != base.endpoint() {
            return false;
        }
        self.north_positions()
            .iter()
            .zip(base.north_positions())
            .all(|(&x, bx)| x <= bx)
    }

    pub fn run_lengths(&self) -> RunLengthEncoding {
        let mut values = vec![0];
        for &s in &self.steps {
            match s {
                Step::E => *values.last_mut().unwrap() += 1,
                Step::N => values.push(0),
            }
        }
        RunLengthEncoding { values }
    }

    /// Number of `NE` factors.
    pub fn peaks(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w[0] == Step::N && w[1] == Step::E)
            .count()
    }

    /// Number of `EN` factors.
    pub fn valleys(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w[0] == Step::E && w[1] == Step::N)
            .count()
    }

    /// Canonical text in exponent notation, e.g. `EN^2E^2N`.
    pub fn to_exponent_string(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.steps.len() {
            let s = self.steps[i];
            let mut j = i;
            while j < self.steps.len() && self.steps[j] == s {
                j += 1;
            }
            out.push(s.as_char());
            if j - i > 1 {
                out.push('^');
                out.push_str(&(j - i).to_string());
            }
            i = j;
        }
        out
    }

    fn expect_above(&self, base: &LatticePath) -> Result<(), PathError> {
        if self.endpoint() != base.endpoint() {
            return Err(PathError::EndpointMismatch {
                path: self.to_string(),
                base: base.to_string(),
            });
        }
        if !self.is_weakly_above(base) {
            return Err(PathError::NotAbove {
                path: self.to_string(),
                base: base.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exponent_string())
    }
}

impl FromStr for LatticePath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_path(s)
    }
}

impl Serialize for LatticePath {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_exponent_string())
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_path(&text).map_err(serde::de::Error::custom)
    }
}

/// Parses `N`/`E` words with optional `^k` exponents (`^{k}` also accepted),
/// or a run-length tuple such as `(1,0,6,0)`. Whitespace is ignored.
pub fn parse_path(text: &str) -> Result<LatticePath, PathError> {
    let trimmed = text.trim();
    if trimmed.starts_with('(') {
        return trimmed
            .parse::<RunLengthEncoding>()
            .map(|rle| rle.to_path());
    }

    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut steps = Vec::new();
    let mut last: Option<Step> = None;
    let mut i = 0;
    while i < chars.len() {
        let (offset, ch) = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            'N' | 'E' => {
                let step = if ch == 'N' { Step::N } else { Step::E };
                steps.push(step);
                last = Some(step);
                i += 1;
            }
            '^' => {
                let step = last.ok_or(PathError::DanglingExponent { offset })?;
                i += 1;
                let braced = matches!(chars.get(i), Some((_, '{')));
                if braced {
                    i += 1;
                }
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    let (o, c) = chars.get(i).copied().unwrap_or((text.len(), '^'));
                    return Err(PathError::MalformedCharacter { ch: c, offset: o });
                }
                if braced {
                    match chars.get(i) {
                        Some((_, '}')) => i += 1,
                        Some(&(o, c)) => {
                            return Err(PathError::MalformedCharacter { ch: c, offset: o })
                        }
                        None => {
                            return Err(PathError::MalformedCharacter {
                                ch: '{',
                                offset: chars[start - 1].0,
                            })
                        }
                    }
                }
                let digits: String = chars[start..i]
                    .iter()
                    .map(|&(_, c)| c)
                    .filter(|c| c.is_ascii_digit())
                    .collect();
                let exp: usize = digits
                    .parse()
                    .map_err(|_| PathError::MalformedCharacter { ch: '^', offset })?;
                if exp == 0 {
                    return Err(PathError::ZeroExponent { offset });
                }
                // the step itself was already pushed once
                steps.extend(std::iter::repeat_n(step, exp - 1));
                // a second exponent must not stack onto the same step
                last = None;
            }
            _ => return Err(PathError::MalformedCharacter { ch, offset }),
        }
    }
    Ok(LatticePath { steps })
}

/// `(ν_0, ν_1, …, ν_n)`: ν_0 leading east steps, then ν_i east steps after
/// the `i`-th north step.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RunLengthEncoding {
    values: Vec<usize>,
}

impl RunLengthEncoding {
    /// `values` must be nonempty (it always contains ν_0).
    pub fn new(values: Vec<usize>) -> Result<Self, PathError> {
        if values.is_empty() {
            return Err(PathError::MalformedRunLength(
                "at least nu_0 is required".into(),
            ));
        }
        Ok(RunLengthEncoding { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Number of north steps.
    pub fn north_count(&self) -> usize {
        self.values.len() - 1
    }

    pub fn east_count(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn to_path(&self) -> LatticePath {
        let mut steps = Vec::with_capacity(self.north_count() + self.east_count());
        for (i, &v) in self.values.iter().enumerate() {
            if i > 0 {
                steps.push(Step::N);
            }
            steps.extend(std::iter::repeat_n(Step::E, v));
        }
        LatticePath { steps }
    }
}

impl fmt::Display for RunLengthEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for RunLengthEncoding {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| PathError::MalformedRunLength(s.to_string()))?;
        let values = inner
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| PathError::MalformedRunLength(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        RunLengthEncoding::new(values)
    }
}

/// `(δ_1, …, δ_n)` with `0 ≤ δ_i ≤ ν_i` once validated against a path.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IncrementVector {
    values: Vec<usize>,
}

impl IncrementVector {
    pub fn new(values: Vec<usize>) -> Self {
        IncrementVector { values }
    }

    pub fn zeros(n: usize) -> Self {
        IncrementVector { values: vec![0; n] }
    }

    /// δ_i = ν_i: the classical ν-Tamari order.
    pub fn full(nu: &RunLengthEncoding) -> Self {
        IncrementVector {
            values: nu.values()[1..].to_vec(),
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.values.iter().sum()
    }

    /// 1-based access matching the δ_i convention.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn validate(&self, nu: &RunLengthEncoding) -> Result<(), PathError> {
        if self.values.len() != nu.north_count() {
            return Err(PathError::IncrementLength {
                expected: nu.north_count(),
                got: self.values.len(),
            });
        }
        for (i, (&d, &bound)) in self.values.iter().zip(&nu.values()[1..]).enumerate() {
            if d > bound {
                return Err(PathError::IncrementOutOfRange {
                    index: i + 1,
                    value: d,
                    bound,
                });
            }
        }
        Ok(())
    }

    /// Left-pads with zeros up to `n` entries, but only across leading
    /// positions where `ν_i = 0` (so the padded entries are forced). Shorter
    /// vectors are otherwise rejected by [`IncrementVector::validate`].
    pub fn fit_to(&self, nu: &RunLengthEncoding) -> Result<IncrementVector, PathError> {
        let n = nu.north_count();
        let missing = n.saturating_sub(self.values.len());
        if missing == 0 || nu.values()[1..=missing].iter().any(|&v| v != 0) {
            self.validate(nu)?;
            return Ok(self.clone());
        }
        let mut values = vec![0; missing];
        values.extend_from_slice(&self.values);
        let fitted = IncrementVector { values };
        fitted.validate(nu)?;
        Ok(fitted)
    }

    /// Every increment vector of `nu`, in lexicographic order.
    pub fn all_for(nu: &RunLengthEncoding) -> Vec<IncrementVector> {
        let bounds = &nu.values()[1..];
        let mut out = Vec::new();
        let mut current = vec![0; bounds.len()];
        loop {
            out.push(IncrementVector::new(current.clone()));
            // odometer, last coordinate fastest
            let mut i = bounds.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if current[i] < bounds[i] {
                    current[i] += 1;
                    for c in &mut current[i + 1..] {
                        *c = 0;
                    }
                    break;
                }
            }
        }
    }
}

impl fmt::Display for IncrementVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for IncrementVector {
    type Err = PathError;

    /// Comma list, optionally parenthesised: `2,0` or `(2,0)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Ok(IncrementVector::default());
        }
        let values = t
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| PathError::MalformedIncrement(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IncrementVector { values })
    }
}

/// δ-altitude at each lattice point of a path, indexed by step count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltProfile {
    values: Vec<i64>,
}

impl AltProfile {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn at(&self, point: usize) -> i64 {
        self.values[point]
    }

    pub fn last(&self) -> i64 {
        *self.values.last().unwrap()
    }
}

fn altitudes(delta: &IncrementVector, mu: &[Step]) -> Vec<i64> {
    let mut out = Vec::with_capacity(mu.len() + 1);
    let mut alt = 0i64;
    let mut north_seen = 0;
    out.push(alt);
    for &s in mu {
        match s {
            Step::E => alt -= 1,
            Step::N => {
                north_seen += 1;
                alt += delta.get(north_seen) as i64;
            }
        }
        out.push(alt);
    }
    out
}

/// δ-altitude profile of `mu`, a path weakly above `nu`.
pub fn delta_altitude(
    nu: &LatticePath,
    delta: &IncrementVector,
    mu: &LatticePath,
) -> Result<AltProfile, PathError> {
    delta.validate(&nu.run_lengths())?;
    mu.expect_above(nu)?;
    Ok(AltProfile {
        values: altitudes(delta, mu.steps()),
    })
}

/// All δ-rotations of `mu`, one per valley, in left-to-right valley order.
///
/// Callers must have validated `delta` against the base path and `mu` against it.
pub(crate) fn rotations_unchecked(
    delta: &IncrementVector,
    mu: &LatticePath,
) -> Result<Vec<LatticePath>, PathError> {
    let steps = mu.steps();
    let alt = altitudes(delta, steps);
    let mut out = Vec::new();
    for j in 1..steps.len() {
        if steps[j - 1] != Step::E || steps[j] != Step::N {
            continue;
        }
        let target = alt[j];
        let end = (j + 1..=steps.len())
            .find(|&t| alt[t] == target)
            .ok_or_else(|| PathError::RotationTargetMissing {
                path: mu.to_string(),
                position: j,
            })?;
        let mut rotated = Vec::with_capacity(steps.len());
        rotated.extend_from_slice(&steps[..j - 1]);
        rotated.extend_from_slice(&steps[j..end]);
        rotated.push(Step::E);
        rotated.extend_from_slice(&steps[end..]);
        out.push(LatticePath::new(rotated));
    }
    Ok(out)
}

/// Upper covers of `mu` in the alt ν-Tamari order given by `delta`.
pub fn delta_covers(
    nu: &LatticePath,
    delta: &IncrementVector,
    mu: &LatticePath,
) -> Result<Vec<LatticePath>, PathError> {
    delta.validate(&nu.run_lengths())?;
    mu.expect_above(nu)?;
    rotations_unchecked(delta, mu)
}

/// Number of paths weakly above `nu` with its endpoints.
pub fn count_nu_paths(nu: &LatticePath) -> u128 {
    let bounds = nu.north_positions();
    let east = nu.east_count();
    // ways[x] = number of prefixes whose last north step sits at x
    let mut ways = vec![0u128; east + 1];
    ways[0] = 1;
    for &bound in &bounds {
        let mut next = vec![0u128; east + 1];
        let mut running = 0u128;
        for x in 0..=east {
            running += ways[x];
            if x <= bound {
                next[x] = running;
            }
        }
        ways = next;
    }
    ways.iter().sum()
}

/// Enumerates the ν-paths in canonical order: ascending by the tuple of
/// x-coordinates of north steps. `ν` itself is last, `N^n E^m` first.
pub fn enumerate_nu_paths(nu: &LatticePath) -> Vec<LatticePath> {
    let bounds = nu.north_positions();
    let east = nu.east_count();
    let mut out = Vec::new();
    let mut xs = Vec::with_capacity(bounds.len());
    fn rec(bounds: &[usize], east: usize, xs: &mut Vec<usize>, out: &mut Vec<LatticePath>) {
        let i = xs.len();
        if i == bounds.len() {
            out.push(LatticePath::from_north_positions(xs, east));
            return;
        }
        let lo = xs.last().copied().unwrap_or(0);
        for x in lo..=bounds[i] {
            xs.push(x);
            rec(bounds, east, xs, out);
            xs.pop();
        }
    }
    rec(&bounds, east, &mut xs, &mut out);
    out
}

/// [`enumerate_nu_paths`] behind a size guard.
pub fn enumerate_nu_paths_bounded(
    nu: &LatticePath,
    limit: usize,
) -> Result<Vec<LatticePath>, PathError> {
    let count = count_nu_paths(nu);
    if count > limit as u128 {
        return Err(PathError::TooManyPaths {
            base: nu.to_string(),
            count,
            limit,
        });
    }
    Ok(enumerate_nu_paths(nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Step::{E, N};

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn parses_exponent_notation() {
        assert_eq!(p("EN^2E^2N").steps(), &[E, N, N, E, E, N]);
        assert_eq!(p("N").steps(), &[N]);
        assert_eq!(p("E^3NE^4N").steps(), &[E, E, E, N, E, E, E, E, N]);
        assert_eq!(p("E^{12}N").east_count(), 12);
        assert_eq!(p(" E N ").steps(), &[E, N]);
        assert!(p("").is_empty());
    }

    #[test]
    fn short_increments_pad_forced_zeros() {
        let nu: RunLengthEncoding = "(1,0,2,0)".parse().unwrap();
        let d: IncrementVector = "2,0".parse().unwrap();
        assert_eq!(d.fit_to(&nu).unwrap().values(), &[0, 2, 0]);
        let nu: RunLengthEncoding = "(1,1,2,0)".parse().unwrap();
        assert!(d.fit_to(&nu).is_err());
        let d: IncrementVector = "1,2,0".parse().unwrap();
        assert_eq!(d.fit_to(&nu).unwrap(), d);
    }

    #[test]
    fn parses_run_length_form() {
        assert_eq!(p("(1,0,6,0)"), p("EN^2E^6N"));
        assert_eq!(p("(3,3,0)"), p("E^3NE^3N"));
        assert_eq!(p("(0)"), LatticePath::empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_path("ENX"),
            Err(PathError::MalformedCharacter { ch: 'X', offset: 2 })
        ));
        assert!(matches!(
            parse_path("E^0N"),
            Err(PathError::ZeroExponent { .. })
        ));
        assert!(matches!(
            parse_path("^2N"),
            Err(PathError::DanglingExponent { .. })
        ));
        assert!(parse_path("E^N").is_err());
        assert!(parse_path("E^2^3").is_err());
        assert!(parse_path("n").is_err());
        assert!(parse_path("(1,x)").is_err());
    }

    #[test]
    fn display_is_canonical_run_form() {
        assert_eq!(p("ENNEEN").to_string(), "EN^2E^2N");
        assert_eq!(p("E^1N^1").to_string(), "EN");
    }

    #[test]
    fn run_lengths_round_trip() {
        let nu = p("EN^3E^6N");
        let rle = nu.run_lengths();
        assert_eq!(rle.values(), &[1, 0, 0, 6, 0]);
        assert_eq!(rle.north_count(), 4);
        assert_eq!(rle.east_count(), 7);
        assert_eq!(rle.to_path(), nu);
        assert_eq!(rle.to_string(), "(1,0,0,6,0)");
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_nu_paths(&p("EN^2E^2N")).len(), 10);
        assert_eq!(count_nu_paths(&p("EN^2E^2N")), 10);
        assert_eq!(enumerate_nu_paths(&p("N^3E^4")).len(), 1);
        assert_eq!(enumerate_nu_paths(&p("E^3NE^3N")).len(), 22);
        assert_eq!(count_nu_paths(&p("E^3NE^3N")), 22);
        assert_eq!(enumerate_nu_paths(&LatticePath::empty()).len(), 1);
        assert_eq!(count_nu_paths(&p("E^4")), 1);
    }

    #[test]
    fn enumeration_matches_brute_force_filter() {
        // all C(6,3) = 20 words with endpoint (3,3), keep the ones above ν
        let nu = p("EN^2E^2N");
        let mut brute = Vec::new();
        for mask in 0u32..64 {
            if mask.count_ones() != 3 {
                continue;
            }
            let steps: Vec<Step> = (0..6)
                .map(|i| if mask >> (5 - i) & 1 == 1 { N } else { E })
                .collect();
            let path = LatticePath::new(steps);
            if path.is_weakly_above(&nu) {
                brute.push(path);
            }
        }
        let mut listed = enumerate_nu_paths(&nu);
        assert_eq!(listed.len(), brute.len());
        listed.sort_by_key(|q| q.to_string());
        brute.sort_by_key(|q| q.to_string());
        assert_eq!(listed, brute);
    }

    #[test]
    fn enumeration_order_and_extremes() {
        let nu = p("E^3NE^3N");
        let all = enumerate_nu_paths(&nu);
        assert_eq!(all.first().unwrap(), &LatticePath::top(2, 6));
        assert_eq!(all.last().unwrap(), &nu);
        let keys: Vec<_> = all.iter().map(|q| q.north_positions()).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn guard_refuses_large_families() {
        let nu = p("E^6N^6");
        assert!(matches!(
            enumerate_nu_paths_bounded(&nu, 100),
            Err(PathError::TooManyPaths { count: 924, .. })
        ));
        assert_eq!(enumerate_nu_paths_bounded(&nu, 924).unwrap().len(), 924);
    }

    #[test]
    fn increment_validation() {
        let nu = p("EN^2E^2N").run_lengths();
        assert!(IncrementVector::new(vec![0, 2, 0]).validate(&nu).is_ok());
        assert!(matches!(
            IncrementVector::new(vec![0, 3, 0]).validate(&nu),
            Err(PathError::IncrementOutOfRange { index: 2, .. })
        ));
        assert!(matches!(
            IncrementVector::new(vec![0]).validate(&nu),
            Err(PathError::IncrementLength { .. })
        ));
        assert_eq!(IncrementVector::all_for(&nu).len(), 3);
        assert_eq!("2,0".parse::<IncrementVector>().unwrap().values(), &[2, 0]);
        assert_eq!(
            "(1, 0)".parse::<IncrementVector>().unwrap().values(),
            &[1, 0]
        );
        assert!("".parse::<IncrementVector>().unwrap().is_empty());
    }

    #[test]
    fn altitude_base_cases() {
        let nu = p("EN^2E^2N");
        let delta = IncrementVector::zeros(3);
        let prof = delta_altitude(&nu, &delta, &nu).unwrap();
        assert_eq!(prof.at(0), 0);
        // δ = 0: minus the number of east steps seen so far
        assert_eq!(prof.values(), &[0, -1, -1, -1, -2, -3, -3]);
    }

    #[test]
    fn altitude_with_full_increment_is_shifted_classical_altitude() {
        // classical altitude: east steps addable to the right before crossing ν
        let nu = p("EN^2E^2N");
        let rle = nu.run_lengths();
        let full = IncrementVector::full(&rle);
        let nu_x = nu.north_positions();
        for mu in enumerate_nu_paths(&nu) {
            let prof = delta_altitude(&nu, &full, &mu).unwrap();
            let mut x = 0usize;
            let mut y = 0usize;
            let mut points = vec![(0, 0)];
            for &s in mu.steps() {
                match s {
                    E => x += 1,
                    N => y += 1,
                }
                points.push((x, y));
            }
            for (idx, &(px, py)) in points.iter().enumerate() {
                // rightmost x of ν on row y is the x of its (y+1)-th north step, or m
                let limit = if py < nu_x.len() {
                    nu_x[py]
                } else {
                    nu.east_count()
                };
                let classical = limit as i64 - px as i64;
                assert_eq!(prof.at(idx), classical - rle.values()[0] as i64);
            }
        }
    }

    #[test]
    fn altitude_rejects_bad_inputs() {
        let nu = p("EN^2E^2N");
        let delta = IncrementVector::zeros(3);
        assert!(delta_altitude(&nu, &delta, &p("E^3N^3")).is_err());
        assert!(delta_altitude(&nu, &IncrementVector::new(vec![0, 5, 0]), &nu).is_err());
    }

    #[test]
    fn top_path_has_no_rotation() {
        let nu = p("EN^2E^2N");
        let delta = IncrementVector::new(vec![0, 1, 0]);
        let top = LatticePath::top(3, 3);
        assert!(delta_covers(&nu, &delta, &top).unwrap().is_empty());
    }

    #[test]
    fn zero_increment_flips_valleys() {
        let nu = p("EN^2E^2N");
        let delta = IncrementVector::zeros(3);
        let covers = delta_covers(&nu, &delta, &nu).unwrap();
        // ν = E N N E E N has valleys at steps 0-1 and 4-5
        assert_eq!(covers, vec![p("NENE^2N"), p("EN^2ENE")]);
    }

    #[test]
    fn increment_controls_rotation_length() {
        // the first valley carries the E step past the whole NE^2 block
        let nu = p("EN^2E^2N");
        let delta = IncrementVector::new(vec![0, 2, 0]);
        let covers = delta_covers(&nu, &delta, &p("NENE^2N")).unwrap();
        assert_eq!(covers, vec![p("N^2E^3N"), p("NENENE")]);
        // a large δ_1 lets the matched subpath run past a later north step
        let nu = p("ENE^2N");
        let mu = p("ENENE");
        let wide = delta_covers(&nu, &IncrementVector::new(vec![2, 0]), &mu).unwrap();
        assert_eq!(wide[0], p("NENE^2"));
        let narrow = delta_covers(&nu, &IncrementVector::zeros(2), &mu).unwrap();
        assert_eq!(narrow[0], p("NE^2NE"));
    }

    #[test]
    fn stats_on_paths() {
        let mu = p("NENE^2N");
        assert_eq!(mu.peaks(), 2);
        assert_eq!(mu.valleys(), 2);
        assert_eq!(mu.heights(), vec![0, 1, 1, 2, 2, 2, 3]);
    }
}
