//! Plain-text point lists: one `x y` pair per line, `#` comments and blank
//! lines ignored. Coordinates are written as the shortest decimal that reads
//! back to the same binary64 value, so a write/read cycle is bit-exact.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{HullError, Result};
use crate::geom::Point;

pub fn parse_points<R: BufRead>(reader: R) -> Result<Vec<Point>> {
    let mut points = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| HullError::Parse { line: lineno, msg: e.to_string() })?;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut fields = body.split_whitespace();
        let (Some(xs), Some(ys), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(HullError::Parse { line: lineno, msg: format!("expected two coordinates, got {body:?}") });
        };
        let coord = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| HullError::Parse { line: lineno, msg: format!("bad coordinate {s:?}: {e}") })
        };
        let (x, y) = (coord(xs)?, coord(ys)?);
        let p = Point::try_new(x, y).map_err(|e| HullError::Parse { line: lineno, msg: e.to_string() })?;
        points.push(p);
    }
    Ok(points)
}

pub fn write_points<W: Write>(mut w: W, points: &[Point]) -> io::Result<()> {
    for p in points {
        writeln!(w, "{p}")?;
    }
    w.flush()
}

pub fn read_points_file(path: &Path) -> Result<Vec<Point>> {
    let file = File::open(path).map_err(|source| HullError::Io { path: path.to_owned(), source })?;
    parse_points(BufReader::new(file))
}

pub fn write_points_file(path: &Path, points: &[Point]) -> Result<()> {
    let io_err = |source| HullError::Io { path: path.to_owned(), source };
    let file = File::create(path).map_err(io_err)?;
    write_points(BufWriter::new(file), points).map_err(io_err)
}
