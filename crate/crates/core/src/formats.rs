//! File formats: `GridFunction` CSV (`x,value`), `FourierSeries` JSON and
//! the report writers shared by the CLI.

use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::LabError;
use crate::function_space::{Domain, FourierSeries, GridFunction};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Malformed { line: u64, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Lab(#[from] LabError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// How to interpret the `x` column of a grid file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainHint {
    /// `[x_first, x_last]`, both endpoints included.
    Interval,
    /// Periodic grid starting at 0; circumference inferred from the spacing
    /// unless given.
    Circle { circumference: Option<f64> },
}

fn malformed(line: u64, message: impl Into<String>) -> FormatError {
    FormatError::Malformed {
        line,
        message: message.into(),
    }
}

/// Reads `x,value` rows in grid order. Line numbers in errors are 1-based and
/// count the header.
pub fn read_grid_csv(reader: impl Read, hint: DomainHint) -> Result<GridFunction, FormatError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = rdr
        .headers()
        .map_err(|e| malformed(1, e.to_string()))?
        .clone();
    if header.len() != 2 || &header[0] != "x" || &header[1] != "value" {
        return Err(malformed(
            1,
            format!(
                "expected header `x,value`, got `{}`",
                header.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }
    let mut xs = Vec::new();
    let mut vs = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            malformed(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 2 {
            return Err(malformed(
                line,
                format!("expected 2 fields, got {}", record.len()),
            ));
        }
        let parse = |field: &str, name: &str| {
            field
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| malformed(line, format!("{name} `{field}` is not a finite number")))
        };
        xs.push(parse(&record[0], "x")?);
        vs.push(parse(&record[1], "value")?);
    }
    let n = xs.len();
    if n < 2 {
        return Err(FormatError::Invalid(format!("grid file has {n} rows")));
    }
    let domain = match hint {
        DomainHint::Interval => Domain::interval(xs[0], xs[n - 1])?,
        DomainHint::Circle { circumference } => {
            if xs[0].abs() > 1e-12 {
                return Err(malformed(2, "circle grids start at x = 0"));
            }
            let l = circumference.unwrap_or((xs[n - 1] - xs[0]) * n as f64 / (n - 1) as f64);
            Domain::circle(l)?
        }
    };
    let h = domain.spacing(n);
    for (i, &x) in xs.iter().enumerate() {
        if (x - domain.node(i, n)).abs() > 1e-9 * domain.length().max(h) {
            return Err(malformed(
                i as u64 + 2,
                format!(
                    "x = {x} is off the uniform grid (expected {})",
                    domain.node(i, n)
                ),
            ));
        }
    }
    Ok(GridFunction::new(domain, vs)?)
}

pub fn write_grid_csv(f: &GridFunction, mut w: impl Write) -> std::io::Result<()> {
    writeln!(w, "x,value")?;
    for (x, v) in f.nodes().iter().zip(f.values()) {
        writeln!(w, "{x:?},{v:?}")?;
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
struct CoefficientRecord {
    n: i64,
    re: f64,
    im: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct SeriesRecord {
    circumference: f64,
    coefficients: Vec<CoefficientRecord>,
}

/// `{circumference, coefficients: [{n, re, im}]}`, modes in increasing `n`.
pub fn series_to_json(s: &FourierSeries) -> serde_json::Value {
    let record = SeriesRecord {
        circumference: s.circumference(),
        coefficients: s
            .modes()
            .map(|(n, a)| CoefficientRecord {
                n,
                re: a.re,
                im: a.im,
            })
            .collect(),
    };
    serde_json::to_value(record).expect("series serializes")
}

pub fn series_from_json(text: &str) -> Result<FourierSeries, FormatError> {
    let record: SeriesRecord = serde_json::from_str(text)?;
    let mut seen = std::collections::BTreeSet::new();
    for c in &record.coefficients {
        if !seen.insert(c.n) {
            return Err(FormatError::Invalid(format!("mode {} listed twice", c.n)));
        }
    }
    Ok(FourierSeries::from_pairs(
        record.circumference,
        record
            .coefficients
            .into_iter()
            .map(|c| (c.n, Complex64::new(c.re, c.im))),
    )?)
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_csv_round_trip() {
        let f =
            GridFunction::from_fn(Domain::interval(2.0, 5.0).unwrap(), 33, |x| x.sin()).unwrap();
        let mut buf = Vec::new();
        write_grid_csv(&f, &mut buf).unwrap();
        let g = read_grid_csv(buf.as_slice(), DomainHint::Interval).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn circle_csv_infers_circumference() {
        let f = GridFunction::from_fn(Domain::unit_circle(), 64, |x| x.cos()).unwrap();
        let mut buf = Vec::new();
        write_grid_csv(&f, &mut buf).unwrap();
        let g = read_grid_csv(
            buf.as_slice(),
            DomainHint::Circle {
                circumference: None,
            },
        )
        .unwrap();
        assert!(g.domain().is_unit_circle());
        assert_eq!(f.values(), g.values());
    }

    #[test]
    fn malformed_rows_report_line_numbers() {
        let mut text = String::from("x,value\n");
        for i in 0..20 {
            let x = i as f64 / 19.0;
            if i == 6 {
                text.push_str(&format!("{x},abc\n"));
            } else {
                text.push_str(&format!("{x},1\n"));
            }
        }
        match read_grid_csv(text.as_bytes(), DomainHint::Interval) {
            Err(FormatError::Malformed { line, .. }) => assert_eq!(line, 8),
            other => panic!("unexpected {other:?}"),
        }
        let bad_header = "t,f\n0,1\n";
        assert!(matches!(
            read_grid_csv(bad_header.as_bytes(), DomainHint::Interval),
            Err(FormatError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn series_json_shape() {
        let s = FourierSeries::from_real_modes(1.0, 1.0, &[0.2], &[]).unwrap();
        let v = series_to_json(&s);
        assert_eq!(v["circumference"], 1.0);
        assert_eq!(v["coefficients"].as_array().unwrap().len(), 3);
        assert_eq!(v["coefficients"][0]["n"], -1);
        let back = series_from_json(&v.to_string()).unwrap();
        assert_eq!(back, s);
    }
}
