use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::matrix::CostMatrix;

/// Sample depth of a written image.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PixelDepth {
    /// One byte per sample, maxval 255.
    #[default]
    Eight,
    /// Two big-endian bytes per sample, maxval 65535.
    Sixteen,
}

impl PixelDepth {
    pub fn maxval(self) -> u32 {
        match self {
            PixelDepth::Eight => 255,
            PixelDepth::Sixteen => 65535,
        }
    }
}

/// What to draw: the cost matrix as a grayscale background and a path on top.
#[derive(Clone, Copy, Debug)]
pub struct OverlaySpec<'a> {
    pub matrix: &'a CostMatrix,
    /// 1-based row per column; its length must equal the column count.
    pub path: &'a [usize],
    /// 8-bit RGB path color. `None` leaves the background untouched.
    pub color: Option<[u8; 3]>,
    pub depth: PixelDepth,
}

impl<'a> OverlaySpec<'a> {
    pub const RED: [u8; 3] = [255, 0, 0];

    /// A red path over an 8-bit background.
    pub fn new(matrix: &'a CostMatrix, path: &'a [usize]) -> Self {
        Self {
            matrix,
            path,
            color: Some(Self::RED),
            depth: PixelDepth::Eight,
        }
    }
}

struct Cursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn line(&self) -> usize {
        self.data[..self.pos]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1
    }

    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.data.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.data.get(self.pos) {
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    /// Next unsigned decimal token, or `None` at end of input.
    fn number(&mut self) -> Option<std::result::Result<u64, String>> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        while self
            .data
            .get(self.pos)
            .is_some_and(|b| !b.is_ascii_whitespace() && *b != b'#')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let token = String::from_utf8_lossy(&self.data[start..self.pos]);
        Some(token.parse().map_err(|_| token.into_owned()))
    }

    fn header_field(&mut self, what: &str) -> Result<u64> {
        match self.number() {
            Some(Ok(v)) => Ok(v),
            Some(Err(token)) => Err(Error::MalformedHeader(format!(
                "{what} is not an unsigned integer: {token:?}"
            ))),
            None => Err(Error::MalformedHeader(format!("missing {what}"))),
        }
    }
}

/// Reads a P2 or P5 graymap as costs `1 - gray / maxval`.
pub fn read_pgm<R: Read>(mut source: R) -> Result<CostMatrix> {
    let mut data = Vec::new();
    source.read_to_end(&mut data).map_err(Error::ReadFailure)?;
    if data.len() < 2 {
        return Err(Error::UnsupportedMagic(
            String::from_utf8_lossy(&data).into_owned(),
        ));
    }
    let binary = match &data[..2] {
        b"P2" => false,
        b"P5" => true,
        other => {
            return Err(Error::UnsupportedMagic(
                String::from_utf8_lossy(other).into_owned(),
            ))
        }
    };
    let mut cur = Cursor {
        data: &data,
        pos: 2,
    };
    if !cur
        .data
        .get(2)
        .is_some_and(|b| b.is_ascii_whitespace() || *b == b'#')
    {
        return Err(Error::MalformedHeader("no separator after magic".into()));
    }
    let width = cur.header_field("width")?;
    let height = cur.header_field("height")?;
    let maxval = cur.header_field("maxval")?;
    if !(1..=65535).contains(&maxval) {
        return Err(Error::MaxvalOutOfRange(maxval));
    }
    let (cols, rows) = match (usize::try_from(width), usize::try_from(height)) {
        (Ok(w), Ok(h)) => (w, h),
        _ => return Err(Error::MalformedHeader("dimensions too large".into())),
    };
    let expected = rows
        .checked_mul(cols)
        .ok_or_else(|| Error::MalformedHeader("dimensions too large".into()))?;
    let maxval = maxval as u32;

    let samples: Vec<u32> = if binary {
        // Exactly one whitespace byte separates maxval from the raster.
        if !cur.data.get(cur.pos).is_some_and(u8::is_ascii_whitespace) {
            return Err(Error::MalformedHeader("no separator after maxval".into()));
        }
        let raster = &data[cur.pos + 1..];
        let width = if maxval > 255 { 2 } else { 1 };
        let available = raster.len() / width;
        if available < expected {
            return Err(Error::TruncatedPixelData {
                expected,
                actual: available,
            });
        }
        raster
            .chunks_exact(width)
            .take(expected)
            .map(|b| match b {
                [hi, lo] => u32::from(u16::from_be_bytes([*hi, *lo])),
                [v] => u32::from(*v),
                _ => unreachable!(),
            })
            .collect()
    } else {
        let mut out = Vec::new();
        while out.len() < expected {
            match cur.number() {
                Some(Ok(v)) => out.push(u32::try_from(v).unwrap_or(u32::MAX)),
                Some(Err(token)) => {
                    return Err(Error::Parse {
                        line: cur.line(),
                        column: out.len() + 1,
                        token,
                    })
                }
                None => {
                    return Err(Error::TruncatedPixelData {
                        expected,
                        actual: out.len(),
                    })
                }
            }
        }
        out
    };

    let scale = f64::from(maxval);
    let mut values = Vec::with_capacity(expected);
    for (k, &g) in samples.iter().enumerate() {
        if g > maxval {
            return Err(Error::SampleOutOfRange {
                row: k / cols + 1,
                col: k % cols + 1,
                sample: g,
                maxval,
            });
        }
        values.push(1.0 - f64::from(g) / scale);
    }
    CostMatrix::new(rows, cols, values)
}

fn gray_level(cost: f64, maxval: u32) -> u32 {
    ((1.0 - cost) * f64::from(maxval)).round() as u32
}

fn put_sample<W: Write>(sink: &mut W, v: u32, depth: PixelDepth) -> std::io::Result<()> {
    match depth {
        PixelDepth::Eight => sink.write_all(&[v as u8]),
        PixelDepth::Sixteen => sink.write_all(&(v as u16).to_be_bytes()),
    }
}

/// Writes the matrix as a binary (P5) graymap, gray `round((1 - cost) * maxval)`.
pub fn write_pgm<W: Write>(c: &CostMatrix, depth: PixelDepth, mut sink: W) -> Result<()> {
    let maxval = depth.maxval();
    let mut buf = format!("P5\n{} {}\n{}\n", c.cols(), c.rows(), maxval).into_bytes();
    for &v in c.grid().as_slice() {
        put_sample(&mut buf, gray_level(v, maxval), depth).map_err(Error::WriteFailure)?;
    }
    sink.write_all(&buf).map_err(Error::WriteFailure)?;
    sink.flush().map_err(Error::WriteFailure)
}

/// Writes a binary (P6) color image of the matrix with the path drawn on it.
pub fn render_overlay<W: Write>(spec: &OverlaySpec<'_>, mut sink: W) -> Result<()> {
    let c = spec.matrix;
    let (m, n) = c.shape();
    if spec.path.len() != n {
        return Err(Error::InfeasiblePath {
            reason: format!("path has {} columns, matrix has {n}", spec.path.len()),
        });
    }
    if let Some(&r) = spec.path.iter().find(|&&r| r < 1 || r > m) {
        return Err(Error::InfeasiblePath {
            reason: format!("row {r} is outside 1..={m}"),
        });
    }
    let maxval = spec.depth.maxval();
    let color = spec
        .color
        .map(|rgb| rgb.map(|v| u32::from(v) * maxval / 255));
    let mut buf = format!("P6\n{n} {m}\n{maxval}\n").into_bytes();
    for i in 1..=m {
        for j in 1..=n {
            let rgb = match color {
                Some(rgb) if spec.path[j - 1] == i => rgb,
                _ => [gray_level(c.get(i, j), maxval); 3],
            };
            for v in rgb {
                put_sample(&mut buf, v, spec.depth).map_err(Error::WriteFailure)?;
            }
        }
    }
    sink.write_all(&buf).map_err(Error::WriteFailure)?;
    sink.flush().map_err(Error::WriteFailure)
}
