//! Text edge lists and graph6.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Parses `n`, then `u v` lines (`v v` is a loop), then an optional `w:` weight line.
/// Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let n: usize = header.parse().map_err(|_| Error::Parse(format!("bad vertex count {header:?}")))?;
    let mut g = Graph::empty(n)?;
    let mut weights = None;
    for line in lines {
        if weights.is_some() {
            return Err(Error::Parse("weight line must come last".into()));
        }
        if let Some(rest) = line.strip_prefix("w:") {
            let w = rest
                .split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad weight {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            weights = Some(w);
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match nums.as_slice() {
            [u, v] => g.add_edge(*u, *v)?,
            _ => return Err(Error::Parse(format!("expected `u v`, found {line:?}"))),
        }
    }
    match weights {
        Some(w) => g.with_weights(w),
        None => Ok(g),
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    if g.is_weighted() {
        let w: Vec<String> = g.weights().iter().map(ToString::to_string).collect();
        out.push_str(&format!("w: {}\n", w.join(" ")));
    }
    out
}

/// Decodes a graph6 string (simple graphs only, at most 62 vertices).
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let first = *bytes.first().ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
    if !(63..=126).contains(&first) || first == 126 {
        return Err(Error::Parse("unsupported graph6 size prefix".into()));
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::Parse(format!("graph6 graph with {n} vertices is too large")));
    }
    let body = &bytes[1..];
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(Error::Parse(format!("graph6 body has {} bytes, expected {needed}", body.len())));
    }
    let mut bitstream = body.iter().flat_map(|&b| {
        let v = b.wrapping_sub(63);
        (0..6).rev().map(move |i| v >> i & 1 == 1)
    });
    if body.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse("graph6 byte out of range".into()));
    }
    let mut g = Graph::empty(n)?;
    for j in 1..n {
        for i in 0..j {
            if bitstream.next() == Some(true) {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    if g.has_loops() || g.n() > 62 {
        return Err(Error::InvalidParameter("graph6 needs a simple graph on at most 62 vertices".into()));
    }
    let n = g.n();
    let mut out = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut count = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            count += 1;
            if count == 6 {
                out.push(acc + 63);
                acc = 0;
                count = 0;
            }
        }
    }
    if count > 0 {
        out.push((acc << (6 - count)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip_with_loops_and_weights() {
        let text = "3\n0 1\n1 1\n# comment\n1 2\nw: 2 1 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 1), (1, 2)]);
        assert_eq!(g.weights(), vec![2, 1, 3]);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2\n0 2\n").is_err());
        assert!(parse_edge_list("2\n0\n").is_err());
        assert!(parse_edge_list("2\nw: 1 1\n0 1\n").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // P3 with centre 1, and the 5-cycle.
        let p3 = parse_graph6("Bg").unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        let c5 = parse_graph6("Dhc").unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(to_graph6(&c5).unwrap(), "Dhc");
        assert!(parse_graph6("Bgg").is_err());
    }
}
