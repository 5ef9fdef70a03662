//! graph6 and edge-list encodings.
//!
//! graph6 is the header-less printable format: the order (6-bit chunks
//! offset by 63, with a `~` escape for n >= 63), then the upper triangle of
//! the adjacency matrix in column order, packed 6 bits per byte, zero
//! padded. Decoding is strict: exact length, bytes in `?`..`~`, and zero
//! padding bits are all enforced so that encode/decode is a bijection.

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = Vec::new();
        if n <= 62 {
            out.push(63 + n as u8);
        } else {
            // 18-bit form, enough for the 64-vertex kernel.
            out.push(126);
            out.push(63 + ((n >> 12) & 0x3f) as u8);
            out.push(63 + ((n >> 6) & 0x3f) as u8);
            out.push(63 + (n & 0x3f) as u8);
        }
        let mut acc = 0u8;
        let mut nbits = 0;
        for v in 1..n {
            for u in 0..v {
                acc = (acc << 1) | u8::from(self.has_edge(u, v));
                nbits += 1;
                if nbits == 6 {
                    out.push(63 + acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push(63 + (acc << (6 - nbits)));
        }
        String::from_utf8(out).unwrap()
    }

    pub fn from_graph6(s: &str) -> Result<Graph> {
        let s = s.trim();
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Parse("empty graph6 string".into()));
        }
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(Error::Parse(format!("byte {b:#04x} outside graph6 range")));
        }
        let (n, header_len) = if bytes[0] == 126 {
            if bytes.len() >= 2 && bytes[1] == 126 {
                return Err(Error::Parse("8-byte graph6 orders are beyond the 64-vertex kernel".into()));
            }
            if bytes.len() < 4 {
                return Err(Error::Parse("truncated graph6 order".into()));
            }
            let n = ((bytes[1] as usize - 63) << 12)
                | ((bytes[2] as usize - 63) << 6)
                | (bytes[3] as usize - 63);
            (n, 4)
        } else {
            (bytes[0] as usize - 63, 1)
        };
        let mut g = Graph::new(n)?;
        let nbits = n * (n - 1) / 2;
        let nbytes = nbits.div_ceil(6);
        if bytes.len() != header_len + nbytes {
            return Err(Error::Parse(format!(
                "graph6 body for n = {n} needs {nbytes} bytes, got {}",
                bytes.len() - header_len
            )));
        }
        let mut idx = 0usize;
        for &b in &bytes[header_len..] {
            let chunk = b - 63;
            for k in 0..6 {
                let bit = (chunk >> (5 - k)) & 1;
                if idx < nbits {
                    if bit == 1 {
                        // Column order: bit idx addresses pair (u, v).
                        let (u, v) = pair_at(idx);
                        g.add_edge(u, v);
                    }
                } else if bit != 0 {
                    return Err(Error::Parse("nonzero padding bits in graph6 body".into()));
                }
                idx += 1;
            }
        }
        Ok(g)
    }

    /// Plain text: a `n m` header line, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), "vertex count")?;
        let m: usize = parse_field(it.next(), "edge count")?;
        if it.next().is_some() {
            return Err(Error::Parse("header must be exactly `n m`".into()));
        }
        let mut g = Graph::new(n)?;
        let mut count = 0usize;
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = parse_field(it.next(), "edge endpoint")?;
            let v: usize = parse_field(it.next(), "edge endpoint")?;
            if it.next().is_some() {
                return Err(Error::Parse(format!("malformed edge line `{line}`")));
            }
            if u >= n || v >= n {
                return Err(Error::Parse(format!("edge ({u},{v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::Parse(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::Parse(format!("duplicate edge ({u},{v})")));
            }
            g.add_edge(u, v);
            count += 1;
        }
        if count != m {
            return Err(Error::Parse(format!("header promised {m} edges, found {count}")));
        }
        Ok(g)
    }
}

fn pair_at(idx: usize) -> (usize, usize) {
    // Inverse of column-order indexing: column v contributes v bits.
    let mut v = 1usize;
    let mut base = 0usize;
    while base + v <= idx {
        base += v;
        v += 1;
    }
    (idx - base, v)
}

fn parse_field(f: Option<&str>, what: &str) -> Result<usize> {
    f.ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad {what}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::super::Graph;

    #[test]
    fn known_graph6_strings() {
        assert_eq!(Graph::complete(5).unwrap().to_graph6(), "D~{");
        assert_eq!(Graph::cycle(5).unwrap().to_graph6(), "Dhc");
        assert_eq!(Graph::new(0).unwrap().to_graph6(), "?");
        assert_eq!(Graph::new(1).unwrap().to_graph6(), "@");
        assert_eq!(Graph::complete(2).unwrap().to_graph6(), "A_");
    }

    #[test]
    fn graph6_roundtrip() {
        for g in [
            Graph::petersen(),
            Graph::complete(7).unwrap(),
            Graph::cycle(9).unwrap(),
            Graph::new(5).unwrap(),
            Graph::complete(63).unwrap(),
            Graph::cycle(64).unwrap(),
        ] {
            let enc = Graph::from_graph6(&g.to_graph6()).unwrap();
            assert_eq!(enc, g);
        }
    }

    #[test]
    fn graph6_long_form_for_63_plus() {
        let g = Graph::new(63).unwrap();
        let s = g.to_graph6();
        assert!(s.starts_with('~'));
        assert_eq!(Graph::from_graph6(&s).unwrap().n(), 63);
    }

    #[test]
    fn graph6_rejects_malformed_input() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("D~").is_err()); // truncated body
        assert!(Graph::from_graph6("D~{{").is_err()); // trailing byte
        assert!(Graph::from_graph6("A\u{7f}").is_err()); // out of range
        assert!(Graph::from_graph6("A`").is_err()); // nonzero padding
        // 65 vertices: within graph6, beyond the kernel.
        let too_big = format!("~{}{}{}", '?', 'A', '@');
        assert!(Graph::from_graph6(&too_big).is_err());
    }

    #[test]
    fn graph6_tolerates_the_conventional_header() {
        assert_eq!(Graph::from_graph6(">>graph6<<D~{").unwrap(), Graph::complete(5).unwrap());
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::petersen();
        let text = g.to_edge_list();
        assert!(text.starts_with("10 15\n"));
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
        assert_eq!(Graph::from_edge_list("0 0\n").unwrap().n(), 0);
    }

    #[test]
    fn edge_list_rejects_malformed_input() {
        assert!(Graph::from_edge_list("").is_err());
        assert!(Graph::from_edge_list("3 1\n0 3\n").is_err());
        assert!(Graph::from_edge_list("3 1\n1 1\n").is_err());
        assert!(Graph::from_edge_list("3 2\n0 1\n0 1\n").is_err());
        assert!(Graph::from_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::from_edge_list("x y\n").is_err());
    }
}
