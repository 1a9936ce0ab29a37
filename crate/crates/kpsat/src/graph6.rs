//! graph6 encoding and decoding.

use kpsat_core::Graph;

const BIAS: u8 = 63;
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("graph6 parse error at byte {offset}: {reason}")]
pub struct Graph6Error {
    pub offset: usize,
    pub reason: &'static str,
}

fn err<T>(offset: usize, reason: &'static str) -> Result<T, Graph6Error> {
    Err(Graph6Error { offset, reason })
}

fn push_bits(out: &mut String, value: u64, chunks: usize) {
    for i in (0..chunks).rev() {
        out.push(char::from(((value >> (6 * i)) & 0x3f) as u8 + BIAS));
    }
}

/// Encodes `g` as one graph6 line (without the newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= SMALL_MAX {
        out.push(char::from(n as u8 + BIAS));
    } else if n <= MEDIUM_MAX {
        out.push('~');
        push_bits(&mut out, n as u64, 3);
    } else {
        out.push_str("~~");
        push_bits(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(acc + BIAS));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((acc << (6 - filled)) + BIAS));
    }
    out
}

fn read_chunks(bytes: &[u8], start: usize, count: usize) -> Result<u64, Graph6Error> {
    let mut v = 0u64;
    for k in 0..count {
        let Some(&b) = bytes.get(start + k) else {
            return err(start + k, "truncated size header");
        };
        if !(BIAS..=BIAS + 63).contains(&b) {
            return err(start + k, "byte outside the printable range 63..=126");
        }
        v = v << 6 | u64::from(b - BIAS);
    }
    Ok(v)
}

/// Decodes one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let base = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let body = line[base..].trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return err(base, "empty input");
    };
    let (n, mut pos) = if first != b'~' {
        (read_chunks(bytes, 0, 1)? as usize, 1)
    } else if bytes.get(1) != Some(&b'~') {
        let n = read_chunks(bytes, 1, 3).map_err(|e| shift(e, base))?;
        if n <= SMALL_MAX as u64 {
            return err(base, "size header is not minimal");
        }
        (n as usize, 4)
    } else {
        let n = read_chunks(bytes, 2, 6).map_err(|e| shift(e, base))?;
        if n <= MEDIUM_MAX as u64 {
            return err(base, "size header is not minimal");
        }
        if n > 1 << 18 {
            return err(base, "graphs above 2^18 vertices are not supported");
        }
        (n as usize, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() < pos + need {
        return err(base + bytes.len(), "adjacency data is truncated");
    }
    if bytes.len() > pos + need {
        return err(base + pos + need, "unexpected bytes after the adjacency data");
    }
    let mut g = Graph::new(n);
    let (mut i, mut j) = (0usize, 1usize);
    let mut seen = 0;
    while seen < bits {
        let b = bytes[pos];
        if !(BIAS..=BIAS + 63).contains(&b) {
            return err(base + pos, "byte outside the printable range 63..=126");
        }
        let chunk = b - BIAS;
        for k in (0..6).rev() {
            let bit = chunk >> k & 1;
            if seen == bits {
                if bit != 0 {
                    return err(base + pos, "nonzero padding bits");
                }
                continue;
            }
            if bit == 1 {
                g.add_edge(i, j).expect("pair in range");
            }
            seen += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Ok(g)
}

fn shift(mut e: Graph6Error, by: usize) -> Graph6Error {
    e.offset += by;
    e
}
