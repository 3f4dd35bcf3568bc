//! graph6 serialization: one printable line per graph, plus level-file helpers.
//!
//! Layout for `n <= 62`: first byte is `n + 63`; the remaining bytes pack the
//! upper triangle of the adjacency matrix column by column (the bit for pair
//! `(i, j)` with `i < j` sits at position `j(j-1)/2 + i`), big-endian six bits
//! per byte, each byte offset by 63, padded with zeros to a multiple of six.

use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::graph::{SmallGraph, MAX_VERTICES};

/// Errors from [`parse_g6`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    /// Line is empty.
    Empty,
    /// A byte outside the printable range `63..=126`, at this offset.
    BadChar { offset: usize, byte: u8 },
    /// Line length does not match the order in the header.
    BadLength { expected: usize, got: usize },
    /// Padding bits after the triangle were not zero.
    BadPadding { offset: usize },
    /// Order exceeds this toolkit's vertex capacity.
    TooLarge { order: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 line"),
            Graph6Error::BadChar { offset, byte } => {
                write!(f, "invalid graph6 byte 0x{byte:02x} at offset {offset}")
            }
            Graph6Error::BadLength { expected, got } => {
                write!(f, "graph6 line has {got} bytes, expected {expected}")
            }
            Graph6Error::BadPadding { offset } => {
                write!(f, "nonzero padding bits in graph6 byte at offset {offset}")
            }
            Graph6Error::TooLarge { order } => {
                write!(f, "graph6 order {order} exceeds capacity {MAX_VERTICES}")
            }
        }
    }
}

impl std::error::Error for Graph6Error {}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn encode_g6(g: &SmallGraph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_VERTICES);
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

/// Parses one graph6 line. Inverse of [`encode_g6`] for orders up to 32.
pub fn parse_g6(line: &str) -> Result<SmallGraph, Graph6Error> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadChar { offset, byte: b });
        }
    }
    let n = (bytes[0] - 63) as usize;
    // 63..=126 covers orders 0..=63; multi-byte headers (n > 62) start with
    // '~' = 126, which already exceeds our capacity.
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { order: n });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            got: bytes.len(),
        });
    }
    let mut g = SmallGraph::empty(n);
    let mut pos = 0;
    for (k, &b) in bytes[1..].iter().enumerate() {
        let group = b - 63;
        for bit in 0..6 {
            let set = group >> (5 - bit) & 1 != 0;
            if pos < nbits {
                if set {
                    let (i, j) = pair_from_position(pos);
                    g.add_edge(i, j);
                }
            } else if set {
                return Err(Graph6Error::BadPadding { offset: k + 1 });
            }
            pos += 1;
        }
    }
    Ok(g)
}

/// Inverse of `pos = j(j-1)/2 + i` for `i < j`.
#[inline]
fn pair_from_position(pos: usize) -> (usize, usize) {
    let mut j = 1;
    while (j + 1) * j / 2 <= pos {
        j += 1;
    }
    (pos - j * (j - 1) / 2, j)
}

/// Conventional level-file name, e.g. `c4k5_9.g6`.
pub fn level_file_name(family: &str, order: usize) -> String {
    format!("{family}_{order}.g6")
}

pub fn level_file_path(dir: &Path, family: &str, order: usize) -> PathBuf {
    dir.join(level_file_name(family, order))
}

/// Errors from reading a graph6 file.
#[derive(Debug)]
pub enum FileError {
    Io(PathBuf, io::Error),
    Parse(PathBuf, usize, Graph6Error),
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            FileError::Parse(path, line, e) => {
                write!(f, "{}:{line}: {e}", path.display())
            }
        }
    }
}

impl std::error::Error for FileError {}

/// Reads every graph from a one-graph-per-line file.
pub fn read_g6_file(path: &Path) -> Result<Vec<SmallGraph>, FileError> {
    let file = File::open(path).map_err(|e| FileError::Io(path.to_path_buf(), e))?;
    let reader = BufReader::new(file);
    let mut graphs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| FileError::Io(path.to_path_buf(), e))?;
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        let g =
            parse_g6(line).map_err(|e| FileError::Parse(path.to_path_buf(), idx + 1, e))?;
        graphs.push(g);
    }
    Ok(graphs)
}

/// Writes graphs one per line, newline-terminated, no header.
pub fn write_g6_file(path: &Path, graphs: &[SmallGraph]) -> io::Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    for g in graphs {
        out.write_all(encode_g6(g).as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()
}
