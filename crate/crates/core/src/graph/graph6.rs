//! graph6 short form (orders up to 62).
//!
//! Layout: one size byte `n + 63`, then the upper triangle in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte (most significant
//! first), zero padded, each byte offset by 63.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";

pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text.strip_prefix(HEADER).unwrap_or(text);
    while let [rest @ .., b'\n' | b'\r' | b' ' | b'\t'] = bytes {
        bytes = rest;
    }
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::MalformedGraph6("empty input".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::MalformedGraph6(format!("bad size byte {first}")));
    }
    let n = (first - 63) as usize;
    if n > MAX_ORDER {
        return Err(Error::MalformedGraph6("long-form orders are not supported".into()));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for n={n}, got {}",
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")));
    }
    let bit = |k: usize| ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    for pad in k..expected * 6 {
        if bit(pad) {
            return Err(Error::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::TooLarge { n, max: MAX_ORDER });
    }
    let mut out = Vec::with_capacity(1 + (n * n) / 12 + 1);
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
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(g, Graph::star(4).relabel(&[4, 0, 1, 2, 3]));
        assert_eq!(emit_graph6(&g).unwrap(), "D?{");
        assert_eq!(parse_graph6(b"A_").unwrap(), Graph::complete(2));
        assert_eq!(emit_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(emit_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6(b">>graph6<<A_\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn path_round_trip() {
        let p4 = Graph::path(4);
        assert_eq!(parse_graph6(emit_graph6(&p4).unwrap().as_bytes()).unwrap(), p4);
    }

    #[test]
    fn malformed_inputs() {
        for bad in [&b""[..], b"A", b"A__", b"D?\x20", b"A`", b"~"] {
            assert!(matches!(parse_graph6(bad), Err(Error::MalformedGraph6(_))), "{bad:?}");
        }
    }
}
