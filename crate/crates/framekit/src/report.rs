//! Deterministic JSON rendering.
//!
//! Report output must be byte-identical across runs for identical inputs:
//! struct fields serialize in declaration order and every float is written
//! with 17 significant digits, enough to round-trip an `f64` exactly.

use std::io;

use serde::Serialize;
use serde_json::ser::Formatter;

struct FixedFloatFormatter;

impl Formatter for FixedFloatFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{:.16e}", value as f64)
    }
}

/// Serializes a report value to its canonical JSON byte form.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloatFormatter);
    value
        .serialize(&mut ser)
        .expect("report types serialize infallibly");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}
