//! JSON result envelopes.
//!
//! Floats are written in scientific notation with 17 significant digits,
//! which parses back to the identical `f64`. Non-finite values become
//! `null`.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::error::{CliError, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub schema_version: u32,
    pub command: &'a [String],
    pub seed: Option<u64>,
    pub timestamp: String,
    pub payload: &'a T,
}

/// Pretty layout with full-precision floats.
struct PreciseFormatter<'a>(PrettyFormatter<'a>);

fn write_float<W: ?Sized + Write>(writer: &mut W, value: f64) -> io::Result<()> {
    if value.is_finite() {
        write!(writer, "{value:.16e}")
    } else {
        writer.write_all(b"null")
    }
}

impl Formatter for PreciseFormatter<'_> {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write_float(writer, value)
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        write_float(writer, f64::from(value))
    }

    fn begin_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_array(writer)
    }

    fn end_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + Write>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object(writer)
    }

    fn end_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + Write>(
        &mut self,
        writer: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object_value(writer)
    }
}

pub fn to_writer<W: Write, T: Serialize>(writer: W, value: &T) -> Result<()> {
    let mut ser =
        serde_json::Serializer::with_formatter(writer, PreciseFormatter(PrettyFormatter::new()));
    value.serialize(&mut ser)?;
    Ok(())
}

#[cfg(test)]
pub fn to_string<T: Serialize>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    to_writer(&mut buf, value)?;
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}

/// Wraps `payload` in an envelope and writes it to `out` (`-` is stdout).
pub fn emit<T: Serialize>(
    out: &Path,
    command: &[String],
    seed: Option<u64>,
    payload: &T,
) -> Result<()> {
    let envelope = Envelope {
        tool: "weyl-pinch",
        version: env!("CARGO_PKG_VERSION"),
        schema_version: SCHEMA_VERSION,
        command,
        seed,
        timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true),
        payload,
    };
    let io_err = |source| CliError::Io {
        path: out.to_path_buf(),
        source,
    };
    if out == Path::new("-") {
        let mut stdout = io::stdout().lock();
        to_writer(&mut stdout, &envelope)?;
        writeln!(stdout).map_err(io_err)?;
        return Ok(());
    }
    let mut file = BufWriter::new(File::create(out).map_err(io_err)?);
    to_writer(&mut file, &envelope)?;
    writeln!(file).map_err(io_err)?;
    file.flush().map_err(io_err)
}
