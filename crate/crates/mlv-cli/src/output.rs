//! Rendering results as CSV or JSON and writing them out.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::args::Format;
use crate::error::CliError;

/// Render `value` as pretty JSON, or `rows` as CSV with a header.
pub fn render<T: Serialize, R: Serialize>(format: Format, value: &T, rows: &[R]) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(value)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in rows {
                w.serialize(row)?;
            }
            w.into_inner().map_err(|e| CliError::Encode(e.to_string()))
        }
    }
}

/// Write rendered bytes to `path`, or to standard output.
pub fn emit(bytes: &[u8], path: Option<&Path>) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.map(Path::to_path_buf), source };
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(io),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes).and_then(|()| out.flush()).map_err(io)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        a: u32,
        b: &'static str,
    }

    #[test]
    fn csv_has_header_and_rows() {
        let rows = [Row { a: 1, b: "x" }, Row { a: 2, b: "y,z" }];
        let out = render(Format::Csv, &(), &rows).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "a,b\n1,x\n2,\"y,z\"\n");
    }

    #[test]
    fn json_ends_with_newline() {
        let out = render::<_, ()>(Format::Json, &[1, 2], &[]).unwrap();
        assert!(out.ends_with(b"]\n"));
    }
}
