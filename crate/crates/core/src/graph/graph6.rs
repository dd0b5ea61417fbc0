//! McKay's graph6 format.
//!
//! `N(n)` header (one byte for n <= 62, `~` plus three bytes up to 258047,
//! `~~` plus six bytes beyond), then the upper triangle in column order
//! `x(0,1) x(0,2) x(1,2) x(0,3) ...`, six bits per byte, big-endian, each
//! byte offset by 63, final byte zero-padded.

use std::io::BufRead;

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph> {
    let mut start = 0;
    if text.starts_with(HEADER) {
        start = HEADER.len();
    }
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let bytes = trimmed.as_bytes();
    for (i, &b) in bytes.iter().enumerate().skip(start) {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                i,
                format!("byte {b} outside printable range 63..=126"),
            ));
        }
    }
    let field = |at: usize, len: usize| -> Result<usize> {
        if at + len > bytes.len() {
            return Err(parse_err(bytes.len(), "truncated size header"));
        }
        Ok(bytes[at..at + len]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    if start >= bytes.len() {
        return Err(parse_err(start, "empty input"));
    }
    let (n, mut pos) = if bytes[start] != 126 {
        ((bytes[start] - 63) as usize, start + 1)
    } else if bytes.get(start + 1) != Some(&126) {
        (field(start + 1, 3)?, start + 4)
    } else {
        (field(start + 2, 6)?, start + 8)
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(parse_err(
            bytes.len(),
            format!("truncated payload: expected {nbytes} bytes after header"),
        ));
    }
    if bytes.len() > pos + nbytes {
        return Err(parse_err(pos + nbytes, "trailing bytes after payload"));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        pos += nbytes - 1;
        let pad = 6 - nbits % 6;
        if (bytes[pos] - 63) & ((1 << pad) - 1) != 0 {
            return Err(parse_err(pos, "nonzero padding bits"));
        }
    }
    g.finish();
    Ok(g)
}

/// Decodes one graph per nonblank line. Errors carry the 1-based line number.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(Error::Io(e.to_string()))),
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(graph6_decode(l.trim()).map_err(|e| Error::AtLine {
                line: i + 1,
                source: Box::new(e),
            })),
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = graph6_decode("A_").unwrap();
        assert_eq!(g, Graph::new(2, &[(0, 1)]).unwrap());
        assert_eq!(graph6_encode(&g), "A_");
    }

    #[test]
    fn single_vertex_and_empty() {
        assert_eq!(graph6_encode(&Graph::empty(1)), "@");
        assert_eq!(graph6_encode(&Graph::empty(0)), "?");
        assert_eq!(graph6_decode("@").unwrap().order(), 1);
    }

    #[test]
    fn four_cycle_hand_packed() {
        // bits x01 x02 x12 x03 x13 x23 = 1 0 1 1 0 1 -> 45 + 63 = 108 'l'
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(graph6_encode(&c4), "Cl");
        assert_eq!(graph6_decode("Cl").unwrap(), c4);
    }

    #[test]
    fn header_and_newline_are_accepted() {
        assert_eq!(graph6_decode(">>graph6<<A_\n").unwrap().size(), 1);
    }

    #[test]
    fn malformed_byte_reports_offset() {
        let err = graph6_decode("C l").unwrap_err();
        assert!(matches!(err, Error::Graph6 { offset: 1, .. }));
    }

    #[test]
    fn truncated_payload() {
        let err = graph6_decode("E").unwrap_err();
        assert!(matches!(err, Error::Graph6 { offset: 1, .. }));
    }

    #[test]
    fn trailing_bytes_rejected() {
        assert!(graph6_decode("A__").is_err());
    }

    #[test]
    fn nonzero_padding_rejected() {
        // n = 2 has one data bit; '`' = 96 - 63 = 33 = 100001
        assert!(graph6_decode("A`").is_err());
    }

    #[test]
    fn long_header_round_trip() {
        let edges: Vec<_> = (0..69).map(|i| (i, i + 1)).collect();
        let g = Graph::new(70, &edges).unwrap();
        let s = graph6_encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(graph6_decode(&s).unwrap(), g);
    }

    #[test]
    fn reads_lines_with_numbers() {
        let text = "A_\n\nCl\nC!\n";
        let parsed: Vec<_> = read_graph6_lines(text.as_bytes()).collect();
        assert_eq!(parsed.len(), 3);
        assert!(parsed[0].is_ok() && parsed[1].is_ok());
        assert!(matches!(parsed[2], Err(Error::AtLine { line: 4, .. })));
    }
}
