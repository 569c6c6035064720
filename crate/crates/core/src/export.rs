//! Mesh and table output for sampled surfaces.
//!
//! Coordinates are written as `(x1, x2, x3)` verbatim, so a viewer that
//! treats them as Euclidean shows the Euclidean shadow of the Lorentzian
//! surface. Every number is printed with 17 significant digits, which
//! round-trips binary64 exactly.

use std::io::{self, BufRead, Write};

use crate::algebra::Vec3M;
use crate::surfaces::SurfaceSampleGrid;

pub const CSV_HEADER: &str = "u,v,x1,x2,x3";

/// `d.ddddddddddddddddeN`: 17 significant digits.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// ASCII OBJ: one `v` record per sample in row-major order (`u` outer) and
/// one quad `f` record per grid cell, 1-based.
pub fn write_obj<W: Write>(grid: &SurfaceSampleGrid, out: &mut W) -> io::Result<()> {
    let (nu, nv) = grid.dims();
    writeln!(out, "# constant slope surface, {nu}x{nv} samples, {:?} construction", grid.construction)?;
    for p in &grid.points {
        writeln!(out, "v {} {} {}", format_f64(p.e1), format_f64(p.e2), format_f64(p.e3))?;
    }
    let index = |i: usize, j: usize| i * nv + j + 1;
    for i in 0..nu - 1 {
        for j in 0..nv - 1 {
            writeln!(
                out,
                "f {} {} {} {}",
                index(i, j),
                index(i + 1, j),
                index(i + 1, j + 1),
                index(i, j + 1)
            )?;
        }
    }
    Ok(())
}

/// Header `u,v,x1,x2,x3`, then one row per sample in storage order.
pub fn write_csv<W: Write>(grid: &SurfaceSampleGrid, out: &mut W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for (u, v, p) in grid.samples() {
        writeln!(
            out,
            "{},{},{},{},{}",
            format_f64(u),
            format_f64(v),
            format_f64(p.e1),
            format_f64(p.e2),
            format_f64(p.e3)
        )?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsvRow {
    pub u: f64,
    pub v: f64,
    pub point: Vec3M,
}

/// Reads back the output of [`write_csv`].
pub fn read_csv<R: BufRead>(input: R) -> io::Result<Vec<CsvRow>> {
    let bad = |line: usize, msg: &str| io::Error::new(io::ErrorKind::InvalidData, format!("line {line}: {msg}"));
    let mut lines = input.lines();
    let header = lines.next().transpose()?;
    if header.as_deref().map(str::trim) != Some(CSV_HEADER) {
        return Err(bad(1, "missing `u,v,x1,x2,x3` header"));
    }
    let mut rows = Vec::new();
    for (k, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields = line
            .split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| bad(k + 2, &e.to_string()))?;
        let [u, v, x1, x2, x3] = fields[..] else {
            return Err(bad(k + 2, "expected 5 fields"));
        };
        rows.push(CsvRow {
            u,
            v,
            point: Vec3M::new(x1, x2, x3),
        });
    }
    Ok(rows)
}
