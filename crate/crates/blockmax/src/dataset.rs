//! CSV ingestion of annual-maxima series.
//!
//! Accepted layouts, comma-delimited with an optional single header row:
//!
//! ```text
//! value          year,value
//! 131.2          1956,131.2
//! 98.4           1957,98.4
//! ```

use std::io::Read;
use std::path::Path;

use blockmax_core::Sample;

use crate::{Error, Result};

/// Which columns to expect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColumnSpec {
    /// One column means values, two mean year,value.
    #[default]
    Auto,
    Value,
    YearValue,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub label: String,
    /// Same length as the sample and strictly increasing when present.
    pub years: Option<Vec<i64>>,
    pub sample: Sample,
}

impl Dataset {
    pub fn new(label: impl Into<String>, years: Option<Vec<i64>>, sample: Sample) -> Result<Self> {
        if let Some(y) = &years {
            if y.len() != sample.len() {
                return Err(Error::Usage(format!(
                    "{} years for {} values",
                    y.len(),
                    sample.len()
                )));
            }
            if let Some(i) = y.windows(2).position(|w| w[0] >= w[1]) {
                return Err(Error::Parse {
                    row: i as u64 + 2,
                    reason: "years must be strictly increasing".into(),
                });
            }
        }
        Ok(Dataset { label: label.into(), years, sample })
    }
}

pub fn load_csv(path: impl AsRef<Path>, columns: ColumnSpec) -> Result<Dataset> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(path.to_path_buf()),
        _ => Error::Io(e),
    })?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "dataset".into());
    read_csv(file, columns, label)
}

fn parse_value(field: &str, row: u64) -> Result<f64> {
    let v: f64 = field.parse().map_err(|_| Error::Parse {
        row,
        reason: format!("not a number: {field:?}"),
    })?;
    if !v.is_finite() {
        return Err(Error::Parse { row, reason: format!("non-finite value: {field:?}") });
    }
    Ok(v)
}

fn parse_year(field: &str, row: u64) -> Result<i64> {
    field.parse().map_err(|_| Error::Parse {
        row,
        reason: format!("not an integer year: {field:?}"),
    })
}

pub fn read_csv<R: Read>(reader: R, columns: ColumnSpec, label: String) -> Result<Dataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut layout = columns;
    let mut years = Vec::new();
    let mut values = Vec::new();
    let mut first = true;

    for record in rdr.records() {
        let record = record?;
        let row = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        let is_first = std::mem::take(&mut first);
        if is_first && record.iter().any(|f| f.parse::<f64>().is_err()) {
            // header row
            if layout == ColumnSpec::Auto {
                layout = width_layout(record.len(), row)?;
            }
            continue;
        }
        if layout == ColumnSpec::Auto {
            layout = width_layout(record.len(), row)?;
        }
        match (layout, record.len()) {
            (ColumnSpec::Value, 1) => values.push(parse_value(&record[0], row)?),
            (ColumnSpec::YearValue, 2) => {
                years.push(parse_year(&record[0], row)?);
                values.push(parse_value(&record[1], row)?);
            }
            (_, width) => {
                return Err(Error::Parse { row, reason: format!("unexpected column count {width}") })
            }
        }
    }

    if values.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let years = (layout == ColumnSpec::YearValue).then_some(years);
    Dataset::new(label, years, Sample::new(values)?)
}

fn width_layout(width: usize, row: u64) -> Result<ColumnSpec> {
    match width {
        1 => Ok(ColumnSpec::Value),
        2 => Ok(ColumnSpec::YearValue),
        w => Err(Error::Parse { row, reason: format!("expected 1 or 2 columns, found {w}") }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn read(text: &str) -> Result<Dataset> {
        read_csv(text.as_bytes(), ColumnSpec::Auto, "t".into())
    }

    #[test]
    fn year_value_pairs() {
        let d = read("1956,131.2\n1957,98.4").unwrap();
        assert_eq!(d.years, Some(vec![1956, 1957]));
        assert_eq!(d.sample.len(), 2);
        assert_eq!(d.sample.values(), &[131.2, 98.4]);
    }

    #[test]
    fn single_column_with_header() {
        let d = read("rain_mm\n10\n20\n\n30\n").unwrap();
        assert_eq!(d.years, None);
        assert_eq!(d.sample.values(), &[10.0, 20.0, 30.0]);
        let d = read("year, value\n2000, 1.5\n2001, 2.5\n").unwrap();
        assert_eq!(d.years, Some(vec![2000, 2001]));
    }

    #[test]
    fn bad_rows_are_numbered() {
        assert!(matches!(read("1\n2\nabc\n"), Err(Error::Parse { row: 3, .. })));
        assert!(matches!(read("1\nNaN\n"), Err(Error::Parse { row: 2, .. })));
        assert!(matches!(read("1\ninf\n"), Err(Error::Parse { row: 2, .. })));
        assert!(matches!(read("2000,1\n2000.5,2\n"), Err(Error::Parse { row: 2, .. })));
        assert!(matches!(read("2001,1\n2000,2\n"), Err(Error::Parse { row: 2, .. })));
        assert!(matches!(read("1\n2,3\n"), Err(Error::Parse { row: 2, .. })));
        assert!(matches!(read("1,2,3\n"), Err(Error::Parse { row: 1, .. })));
    }

    #[test]
    fn empty_inputs() {
        assert!(matches!(read(""), Err(Error::EmptyDataset)));
        assert!(matches!(read("value\n"), Err(Error::EmptyDataset)));
        assert!(matches!(read("\n\n"), Err(Error::EmptyDataset)));
    }

    #[test]
    fn forced_layout() {
        let r = read_csv("1956,131.2\n".as_bytes(), ColumnSpec::Value, "t".into());
        assert!(matches!(r, Err(Error::Parse { row: 1, .. })));
    }
}
