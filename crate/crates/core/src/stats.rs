//! Statistics on lattice elements and their orbit sums.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::lattice::{FiniteLattice, OrbitDecomposition};
use crate::path::{LatticePath, PathError};
use crate::tamari::TamariLattice;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatError {
    #[error("unknown statistic {0:?} (expected one of ddeg, peak, val, area)")]
    Unknown(String),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("statistic has {values} values for a decomposition of {elements} elements")]
    LengthMismatch { values: usize, elements: usize },
}

/// Number of lower covers.
pub fn ddeg(l: &FiniteLattice, x: usize) -> usize {
    l.lower_covers(x).len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PathStats {
    pub peak: usize,
    pub val: usize,
    pub area: usize,
}

/// Peaks (`NE`), valleys (`EN`) and the number of cells between `mu` and `nu`.
pub fn path_stats(mu: &LatticePath, nu: &LatticePath) -> Result<PathStats, PathError> {
    if !mu.is_weakly_above(nu) {
        return Err(PathError::NotAbove {
            path: mu.to_string(),
            base: nu.to_string(),
        });
    }
    // row j contributes the horizontal gap between the j-th north steps
    let area = nu
        .north_positions()
        .iter()
        .zip(mu.north_positions())
        .map(|(x_nu, x_mu)| x_nu - x_mu)
        .sum();
    Ok(PathStats {
        peak: mu.peaks(),
        val: mu.valleys(),
        area,
    })
}

/// The statistics known by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    Ddeg,
    Peak,
    Val,
    Area,
}

impl Statistic {
    pub const ALL: [Statistic; 4] = [
        Statistic::Ddeg,
        Statistic::Peak,
        Statistic::Val,
        Statistic::Area,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Ddeg => "ddeg",
            Statistic::Peak => "peak",
            Statistic::Val => "val",
            Statistic::Area => "area",
        }
    }

    /// Value on every element of an alt ν-Tamari lattice.
    pub fn values(self, t: &TamariLattice) -> Vec<i64> {
        let l = t.lattice();
        (0..t.len())
            .map(|x| {
                let value = match self {
                    Statistic::Ddeg => ddeg(l, x),
                    other => {
                        let s = path_stats(t.path(x), t.nu()).expect("elements lie above nu");
                        match other {
                            Statistic::Peak => s.peak,
                            Statistic::Val => s.val,
                            _ => s.area,
                        }
                    }
                };
                value as i64
            })
            .collect()
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = StatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s.trim())
            .ok_or_else(|| StatError::Unknown(s.to_string()))
    }
}

/// ddeg on every element of any lattice.
pub fn ddeg_values(l: &FiniteLattice) -> Vec<i64> {
    (0..l.len()).map(|x| ddeg(l, x) as i64).collect()
}

fn ratio_as_string<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// Per-orbit sums of one statistic with the homomesy and homometry verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatReport {
    pub statistic: String,
    pub sizes: Vec<usize>,
    pub sums: Vec<i64>,
    /// True when every orbit has the same average.
    pub homomesic: bool,
    /// The common average when homomesic.
    #[serde(serialize_with = "ratio_as_string")]
    pub average: Option<Rational>,
    /// True when orbits of equal size have equal sums.
    pub homometric: bool,
}

impl StatReport {
    pub fn from_values(
        statistic: &str,
        values: &[i64],
        orbits: &OrbitDecomposition,
    ) -> Result<Self, StatError> {
        let elements: usize = orbits.sizes().iter().sum();
        if values.len() != elements {
            return Err(StatError::LengthMismatch {
                values: values.len(),
                elements,
            });
        }
        let sizes = orbits.sizes();
        let sums: Vec<i64> = orbits
            .orbits()
            .iter()
            .map(|o| o.iter().map(|&x| values[x]).sum())
            .collect();
        let averages: Vec<Rational> = sizes
            .iter()
            .zip(&sums)
            .map(|(&n, &s)| Rational::new(s, n as i64))
            .collect();
        let homomesic = averages.windows(2).all(|w| w[0] == w[1]);
        let average = if homomesic {
            averages.first().copied()
        } else {
            None
        };
        let mut by_size: BTreeMap<usize, i64> = BTreeMap::new();
        let mut homometric = true;
        for (&n, &s) in sizes.iter().zip(&sums) {
            if *by_size.entry(n).or_insert(s) != s {
                homometric = false;
            }
        }
        Ok(StatReport {
            statistic: statistic.to_string(),
            sizes,
            sums,
            homomesic,
            average,
            homometric,
        })
    }

    /// `(size, sum)` pairs, sorted.
    pub fn size_sum_multiset(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = self
            .sizes
            .iter()
            .copied()
            .zip(self.sums.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Aligned text table.
    pub fn to_table(&self) -> String {
        let header = ["orbit", "size", "sum", "average"];
        let rows: Vec<[String; 4]> = self
            .sizes
            .iter()
            .zip(&self.sums)
            .enumerate()
            .map(|(i, (&n, &s))| {
                [
                    i.to_string(),
                    n.to_string(),
                    s.to_string(),
                    Rational::new(s, n as i64).to_string(),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = format!("statistic: {}\n", self.statistic);
        let line = |cells: [&str; 4]| {
            cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        out.push_str(&line(header));
        out.push('\n');
        for row in &rows {
            out.push_str(&line([&row[0], &row[1], &row[2], &row[3]]));
            out.push('\n');
        }
        let avg = self
            .average
            .map_or_else(|| "-".to_string(), |r| r.to_string());
        out.push_str(&format!(
            "homomesic: {} (average {avg})\nhomometric: {}\n",
            self.homomesic, self.homometric
        ));
        out
    }
}

/// Report for a named statistic on an alt ν-Tamari lattice.
pub fn orbit_stat_report(
    t: &TamariLattice,
    orbits: &OrbitDecomposition,
    statistic: &str,
) -> Result<StatReport, StatError> {
    let st: Statistic = statistic.parse()?;
    StatReport::from_values(st.name(), &st.values(t), orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{orbit_decomposition, products};
    use crate::path::IncrementVector;
    use crate::tamari::build_alt_tamari;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn path_statistics() {
        let nu = p("EN^2E^2N");
        let s = path_stats(&nu, &nu).unwrap();
        assert_eq!(s.area, 0);
        assert_eq!(s.val, nu.valleys());
        let top = path_stats(&LatticePath::top(3, 3), &nu).unwrap();
        assert_eq!(
            top,
            PathStats {
                peak: 1,
                val: 0,
                area: 1 + 1 + 3
            }
        );
        assert!(path_stats(&p("E^3N^3"), &nu).is_err());
    }

    #[test]
    fn grid_ddeg() {
        let l = products::grid(&[3, 3]);
        assert_eq!(ddeg(&l, l.bottom()), 0);
        assert_eq!(ddeg(&l, 4), 2);
        assert_eq!(ddeg(&l, 1), 1);
    }

    #[test]
    fn names_round_trip() {
        for st in Statistic::ALL {
            assert_eq!(st.name().parse::<Statistic>().unwrap(), st);
        }
        assert!(matches!(
            "depth".parse::<Statistic>(),
            Err(StatError::Unknown(_))
        ));
    }

    #[test]
    fn singleton_is_homomesic() {
        let t = build_alt_tamari(&p("N"), &IncrementVector::zeros(1)).unwrap();
        let orbits = orbit_decomposition(t.lattice()).unwrap();
        for st in Statistic::ALL {
            let r = orbit_stat_report(&t, &orbits, st.name()).unwrap();
            assert!(r.homomesic && r.homometric);
        }
    }

    #[test]
    fn hook_2_2_ddeg_sums() {
        // ν = ENEN, δ = (0,0)
        let t = build_alt_tamari(&p("ENEN"), &IncrementVector::zeros(2)).unwrap();
        let orbits = orbit_decomposition(t.lattice()).unwrap();
        let r = orbit_stat_report(&t, &orbits, "ddeg").unwrap();
        assert_eq!(r.size_sum_multiset(), vec![(2, 2), (3, 3)]);
        assert!(r.homometric);
        let table = r.to_table();
        assert!(table.contains("homometric: true"));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["sums"], serde_json::json!([2, 3]));
    }
}
