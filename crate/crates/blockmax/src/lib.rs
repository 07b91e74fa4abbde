//! File formats, the analysis pipeline and report emission on top of
//! `blockmax-core`.

pub mod dataset;
mod error;
pub mod pipeline;
pub mod plot;
pub mod report;
pub mod simulate;

pub use dataset::{load_csv, ColumnSpec, Dataset};
pub use error::Error;
pub use pipeline::{run_pipeline, AnalysisReport, FitEntry, GofEntry, PipelineConfig};
pub use plot::{emit_plot_data, PlotOptions};
pub use report::{emit_report, parse_report, Format};
pub use simulate::simulate_to_file;

pub type Result<T> = std::result::Result<T, Error>;

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so readers never see a partial file.
pub(crate) fn write_atomic(path: &std::path::Path, contents: &[u8]) -> Result<()> {
    use std::io::Write;

    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => std::path::Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}
