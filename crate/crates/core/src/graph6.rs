//! Short-form graph6 reader and writer (orders up to 62).
//!
//! A record is one byte `n + 63` followed by the strict upper triangle of the
//! adjacency matrix, read column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, most significant bit first, each byte offset by
//! 63. The final byte is zero padded.

use std::io::BufRead;

use crate::graph::Graph;

/// Optional header some corpus files start with.
pub const HEADER: &str = ">>graph6<<";

/// Largest order the short form can express.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("byte {offset}: empty record")]
    Empty { offset: usize },
    #[error("byte {offset}: character {byte:#04x} outside printable range 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("byte {offset}: long-form order prefix, only n <= 62 is supported")]
    LongForm { offset: usize },
    #[error("byte {offset}: record truncated, expected {expected} body bytes, found {found}")]
    Truncated { offset: usize, expected: usize, found: usize },
    #[error("byte {offset}: {extra} unexpected trailing byte(s)")]
    TrailingBytes { offset: usize, extra: usize },
    #[error("byte {offset}: nonzero padding bits")]
    NonzeroPadding { offset: usize },
    #[error("cannot encode graph of order {0}; short form stops at 62")]
    Unsupported(usize),
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Graph6Error>,
    },
    #[error("read error at line {line}: {message}")]
    Io { line: usize, message: String },
}

impl Graph6Error {
    /// Byte offset within the offending record, when the error has one.
    pub fn offset(&self) -> Option<usize> {
        match self {
            Graph6Error::Empty { offset }
            | Graph6Error::BadCharacter { offset, .. }
            | Graph6Error::LongForm { offset }
            | Graph6Error::Truncated { offset, .. }
            | Graph6Error::TrailingBytes { offset, .. }
            | Graph6Error::NonzeroPadding { offset } => Some(*offset),
            Graph6Error::AtLine { source, .. } => source.offset(),
            Graph6Error::Unsupported(_) | Graph6Error::Io { .. } => None,
        }
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one record. A leading `>>graph6<<` header is stripped; offsets in
/// errors are relative to the start of `line` as given.
pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let (skip, rest) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    decode_body(rest.as_bytes(), skip)
}

fn decode_body(bytes: &[u8], base: usize) -> Result<Graph, Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty { offset: base })?;
    if first == 126 {
        return Err(Graph6Error::LongForm { offset: base });
    }
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::BadCharacter { offset: base, byte: first });
    }
    let n = (first - 63) as usize;
    let expected = body_len(n);
    let body = &bytes[1..];
    for (i, &b) in body.iter().enumerate().take(expected) {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadCharacter { offset: base + 1 + i, byte: b });
        }
    }
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: base + bytes.len(),
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            offset: base + 1 + expected,
            extra: body.len() - expected,
        });
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let pad = expected * 6 - total_bits;
    if pad > 0 {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: base + expected });
        }
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("indices bounded by n");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` as a canonical short-form record (no header, no newline).
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::Unsupported(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Encodes the labelled graph whose edge set is `mask`, bit `k` standing for
/// the `k`-th pair in column order; this is the enumeration order used by
/// the exhaustive drivers, so no intermediate [`Graph`] is needed.
pub fn encode_mask(n: usize, mask: u64) -> String {
    let bits = n * n.saturating_sub(1) / 2;
    debug_assert!(bits <= 64);
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    for chunk in 0..body_len(n) {
        let mut byte = 0u8;
        for b in 0..6 {
            let k = chunk * 6 + b;
            byte = byte << 1 | (k < bits && mask >> k & 1 == 1) as u8;
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// A decoded record with its 1-based line number.
#[derive(Debug, Clone)]
pub struct Graph6Record {
    pub line_number: usize,
    pub line: String,
    pub graph: Graph,
}

/// Lazily decodes a line-oriented graph6 stream.
///
/// Blank lines are skipped. A `>>graph6<<` header is accepted on the first
/// record only. Each item is either a record or a format error tagged with
/// its line number, so callers can stop at the first error or count and skip.
pub struct Graph6Reader<R> {
    source: R,
    line_number: usize,
    seen_record: bool,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(source: R) -> Self {
        Graph6Reader {
            source,
            line_number: 0,
            seen_record: false,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph6Record, Graph6Error>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.source.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => {
                    return Some(Err(Graph6Error::Io {
                        line: self.line_number + 1,
                        message: e.to_string(),
                    }))
                }
            }
            self.line_number += 1;
            let line = self.buf.trim_end_matches(['\n', '\r']);
            if line.trim().is_empty() {
                continue;
            }
            let first = !self.seen_record;
            self.seen_record = true;
            let (skip, body) = match line.strip_prefix(HEADER) {
                Some(rest) if first => (HEADER.len(), rest),
                _ => (0, line),
            };
            let line_number = self.line_number;
            return Some(
                decode_body(body.as_bytes(), skip)
                    .map(|graph| Graph6Record {
                        line_number,
                        line: body.to_string(),
                        graph,
                    })
                    .map_err(|e| Graph6Error::AtLine {
                        line: line_number,
                        source: Box::new(e),
                    }),
            );
        }
    }
}

/// Convenience wrapper over [`Graph6Reader::new`].
pub fn stream_graph6<R: BufRead>(source: R) -> Graph6Reader<R> {
    Graph6Reader::new(source)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn hand_encoded_examples() {
        let k2 = Family::Complete(2).build().unwrap();
        assert_eq!(decode_graph6("A_").unwrap(), k2);
        assert_eq!(encode_graph6(&k2).unwrap(), "A_");
        assert_eq!(decode_graph6("D??").unwrap(), Graph::empty(5));
        assert_eq!(encode_graph6(&Family::Complete(1).build().unwrap()).unwrap(), "@");
        assert_eq!(decode_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(decode_graph6("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn matches_a_known_record() {
        // C_5 as 0-1-2-3-4-0: pairs (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),(0,4),(1,4),(2,4),(3,4)
        // bits 1,0,1,0,0,1,1,0,0,1 -> 101001 100100 -> 41+63, 36+63 -> 'h', 'c'
        let c5 = Family::Cycle(5).build().unwrap();
        assert_eq!(encode_graph6(&c5).unwrap(), "Dhc");
    }

    #[test]
    fn header_is_stripped() {
        assert_eq!(
            decode_graph6(">>graph6<<A_").unwrap(),
            Family::Complete(2).build().unwrap()
        );
    }

    #[test]
    fn format_errors_carry_offsets() {
        assert_eq!(decode_graph6(""), Err(Graph6Error::Empty { offset: 0 }));
        assert_eq!(
            decode_graph6("D?\x20"),
            Err(Graph6Error::BadCharacter { offset: 2, byte: 0x20 })
        );
        assert_eq!(decode_graph6("~?@"), Err(Graph6Error::LongForm { offset: 0 }));
        assert_eq!(
            decode_graph6("D?"),
            Err(Graph6Error::Truncated { offset: 2, expected: 2, found: 1 })
        );
        assert_eq!(
            decode_graph6("A_?"),
            Err(Graph6Error::TrailingBytes { offset: 2, extra: 1 })
        );
        // n = 2 carries 1 bit; '`' = 96 -> 100001 sets a padding bit
        assert_eq!(decode_graph6("A`"), Err(Graph6Error::NonzeroPadding { offset: 1 }));
        assert_eq!(
            decode_graph6(">>graph6<<A`").unwrap_err().offset(),
            Some(11)
        );
    }

    #[test]
    fn unsupported_order() {
        assert_eq!(
            encode_graph6(&Graph::empty(63)),
            Err(Graph6Error::Unsupported(63))
        );
        let g = Family::Complete(62).build().unwrap();
        assert_eq!(decode_graph6(&encode_graph6(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn mask_encoding_matches_graph_encoding() {
        let b8 = Family::B(8).build().unwrap();
        let mut mask = 0u64;
        let mut k = 0;
        for j in 1..8 {
            for i in 0..j {
                if b8.has_edge(i, j) {
                    mask |= 1 << k;
                }
                k += 1;
            }
        }
        assert_eq!(encode_mask(8, mask), encode_graph6(&b8).unwrap());
    }

    #[test]
    fn stream_reports_line_numbers() {
        let text = ">>graph6<<A_\n\nD??\r\nA`\n>>graph6<<A_\nBw\n";
        let items: Vec<_> = stream_graph6(text.as_bytes()).collect();
        assert_eq!(items.len(), 5);
        let first = items[0].as_ref().unwrap();
        assert_eq!((first.line_number, first.line.as_str()), (1, "A_"));
        assert_eq!(items[1].as_ref().unwrap().line_number, 3);
        match &items[2] {
            Err(Graph6Error::AtLine { line: 4, source }) => {
                assert_eq!(**source, Graph6Error::NonzeroPadding { offset: 1 })
            }
            other => panic!("unexpected {other:?}"),
        }
        // header only tolerated at stream start
        assert!(matches!(items[3], Err(Graph6Error::AtLine { line: 5, .. })));
        assert_eq!(items[4].as_ref().unwrap().graph, Family::Complete(3).build().unwrap());
    }
}
