//! 3D binary pictures with 26-adjacency for the foreground and
//! 6-adjacency for the background.
//!
//! Two text formats are read. The dense grid starts with a line `X Y Z`
//! followed by Z blocks of Y lines of X characters from `{0,1}`, blocks
//! separated by blank lines. The coordinate list starts with `dims X Y Z`
//! followed by one `x y z` line per foreground voxel.

mod cycles;

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::cubical::Point3;
use crate::error::{Error, Result};

pub use cycles::{cycle_to_voxels, CycleProjector, VoxelCycle};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Picture3D {
    dims: [usize; 3],
    bits: Vec<bool>,
}

impl Picture3D {
    /// An empty picture.
    pub fn new(dims: [usize; 3]) -> Result<Self> {
        if dims.contains(&0) {
            return Err(Error::usage("picture dimensions must be positive"));
        }
        let n = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::usage("picture too large"))?;
        Ok(Picture3D {
            dims,
            bits: vec![false; n],
        })
    }

    pub fn from_points(dims: [usize; 3], points: &[Point3]) -> Result<Self> {
        let mut p = Picture3D::new(dims)?;
        for &q in points {
            if !p.in_box(q) {
                return Err(Error::usage(format!(
                    "voxel {q} lies outside the {dims:?} box"
                )));
            }
            p.set(q, true);
        }
        Ok(p)
    }

    /// The smallest picture at the origin holding `points`, which must have
    /// nonnegative coordinates.
    pub fn fitting(points: &[Point3]) -> Result<Self> {
        let mut dims = [1usize; 3];
        for q in points {
            for (axis, d) in dims.iter_mut().enumerate() {
                let c = q.coord(axis);
                if c < 0 {
                    return Err(Error::usage(format!("voxel {q} has a negative coordinate")));
                }
                *d = (*d).max(c as usize + 1);
            }
        }
        Picture3D::from_points(dims, points)
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn in_box(&self, p: Point3) -> bool {
        (0..3).all(|a| p.coord(a) >= 0 && (p.coord(a) as usize) < self.dims[a])
    }

    fn index(&self, p: Point3) -> usize {
        let [x, y, _] = self.dims;
        p.x as usize + x * (p.y as usize + y * p.z as usize)
    }

    fn point(&self, i: usize) -> Point3 {
        let [x, y, _] = self.dims;
        Point3::new((i % x) as i32, (i / x % y) as i32, (i / (x * y)) as i32)
    }

    /// Whether `p` is a foreground voxel. Points outside the box are background.
    pub fn get(&self, p: Point3) -> bool {
        self.in_box(p) && self.bits[self.index(p)]
    }

    /// Panics if `p` lies outside the box.
    pub fn set(&mut self, p: Point3, value: bool) {
        assert!(self.in_box(p), "voxel {p} outside the picture");
        let i = self.index(p);
        self.bits[i] = value;
    }

    /// The foreground B, in increasing (x, y, z) order.
    pub fn foreground(&self) -> Vec<Point3> {
        let mut out: Vec<Point3> = self
            .bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| self.point(i))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// A foreground voxel with a 6-neighbour in the background.
    pub fn is_boundary_voxel(&self, p: Point3) -> bool {
        self.get(p) && p.neighbors6().any(|n| !self.get(n))
    }
}

fn parse_usize(token: &str, line: usize, column: usize) -> Result<usize> {
    token.parse::<usize>().map_err(|_| {
        Error::parse(
            line,
            column,
            format!("expected a nonnegative integer, found {token:?}"),
        )
    })
}

/// Tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_dims(toks: &[(usize, &str)], line: usize) -> Result<[usize; 3]> {
    if toks.len() != 3 {
        return Err(Error::parse(
            line,
            1,
            "malformed header: expected three dimensions",
        ));
    }
    let mut dims = [0; 3];
    for (d, &(col, t)) in dims.iter_mut().zip(toks) {
        *d = parse_usize(t, line, col)?;
        if *d == 0 {
            return Err(Error::parse(
                line,
                col,
                "malformed header: dimensions must be positive",
            ));
        }
    }
    Ok(dims)
}

/// Reads a picture in either text format.
pub fn parse_picture(bytes: &[u8]) -> Result<Picture3D> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let line = bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1;
        Error::parse(line, 1, "input is not valid UTF-8")
    })?;
    if text.is_empty() {
        return Err(Error::parse(1, 1, "malformed header: empty input"));
    }
    let lines: Vec<&str> = text.split('\n').collect();
    if !text.ends_with('\n') {
        return Err(Error::parse(
            lines.len(),
            lines[lines.len() - 1].len() + 1,
            "missing trailing newline",
        ));
    }
    let lines = &lines[..lines.len() - 1];
    let header = tokens(lines[0].trim_end_matches('\r'));
    if header.first().map(|t| t.1) == Some("dims") {
        parse_coordinates(&header[1..], lines)
    } else {
        parse_grid(&header, lines)
    }
}

fn parse_grid(header: &[(usize, &str)], lines: &[&str]) -> Result<Picture3D> {
    let dims = parse_dims(header, 1)?;
    let mut pic = Picture3D::new(dims).map_err(|_| Error::parse(1, 1, "picture too large"))?;
    let rows = dims[1] * dims[2];
    let mut row = 0;
    for (i, raw) in lines.iter().enumerate().skip(1) {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if row == rows {
            return Err(Error::parse(
                line_no,
                1,
                "size mismatch: more rows than the header declares",
            ));
        }
        let mut n = 0;
        for (col, ch) in line.chars().enumerate() {
            let bit = match ch {
                '0' => false,
                '1' => true,
                _ => {
                    return Err(Error::parse(
                        line_no,
                        col + 1,
                        format!("illegal character {ch:?}"),
                    ))
                }
            };
            if n == dims[0] {
                return Err(Error::parse(
                    line_no,
                    col + 1,
                    format!("size mismatch: row longer than {}", dims[0]),
                ));
            }
            let p = Point3::new(n as i32, (row % dims[1]) as i32, (row / dims[1]) as i32);
            pic.set(p, bit);
            n += 1;
        }
        if n != dims[0] {
            return Err(Error::parse(
                line_no,
                n + 1,
                format!("size mismatch: row of {n} bits, expected {}", dims[0]),
            ));
        }
        row += 1;
    }
    if row != rows {
        return Err(Error::parse(
            lines.len() + 1,
            1,
            format!("size mismatch: {row} rows, expected {rows}"),
        ));
    }
    Ok(pic)
}

fn parse_coordinates(header: &[(usize, &str)], lines: &[&str]) -> Result<Picture3D> {
    let dims = parse_dims(header, 1)?;
    let mut pic = Picture3D::new(dims).map_err(|_| Error::parse(1, 1, "picture too large"))?;
    for (i, raw) in lines.iter().enumerate().skip(1) {
        let line_no = i + 1;
        let toks = tokens(raw.trim_end_matches('\r'));
        if toks.is_empty() {
            continue;
        }
        if toks.len() != 3 {
            return Err(Error::parse(line_no, 1, "expected three coordinates"));
        }
        let mut c = [0i32; 3];
        for (axis, &(col, t)) in toks.iter().enumerate() {
            let v = parse_usize(t, line_no, col)?;
            if v >= dims[axis] {
                return Err(Error::parse(
                    line_no,
                    col,
                    format!("coordinate {v} outside 0..{}", dims[axis]),
                ));
            }
            c[axis] = v as i32;
        }
        let p = Point3::new(c[0], c[1], c[2]);
        if pic.get(p) {
            return Err(Error::parse(line_no, 1, format!("duplicate voxel {p}")));
        }
        pic.set(p, true);
    }
    Ok(pic)
}

/// The canonical dense grid form.
pub fn serialize_picture(p: &Picture3D) -> String {
    let [x, y, z] = p.dims;
    let mut out = format!("{x} {y} {z}\n");
    for k in 0..z {
        if k > 0 {
            out.push('\n');
        }
        for j in 0..y {
            for i in 0..x {
                let bit = p.get(Point3::new(i as i32, j as i32, k as i32));
                out.push(if bit { '1' } else { '0' });
            }
            out.push('\n');
        }
    }
    out
}

/// The coordinate list form.
pub fn serialize_coordinates(p: &Picture3D) -> String {
    let [x, y, z] = p.dims;
    let mut out = format!("dims {x} {y} {z}\n");
    for q in p.foreground() {
        let _ = writeln!(out, "{} {} {}", q.x, q.y, q.z);
    }
    out
}

/// Number of 26-connected components of the foreground.
pub fn foreground_components(p: &Picture3D) -> usize {
    let mut seen = vec![false; p.bits.len()];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in 0..p.bits.len() {
        if !p.bits[start] || seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            for n in p.point(i).neighbors26() {
                if p.get(n) {
                    let j = p.index(n);
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
    }
    count
}

/// The background of `p` inside its box grown by `padding` on all six
/// sides. Voxel (x,y,z) of `p` becomes (x+padding, y+padding, z+padding).
pub fn complement_picture(p: &Picture3D, padding: usize) -> Picture3D {
    let dims = p.dims.map(|d| d + 2 * padding);
    let mut out = Picture3D::new(dims).expect("positive dims");
    let pad = padding as i32;
    for i in 0..out.bits.len() {
        let q = out.point(i);
        let src = Point3::new(q.x - pad, q.y - pad, q.z - pad);
        out.bits[i] = !p.get(src);
    }
    out
}
