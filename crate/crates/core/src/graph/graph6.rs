use super::{Graph, GraphError};

const BIAS: u8 = 63;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Encodes `g` in graph6: size header, then the upper triangle in column
/// order `(0,1),(0,2),(1,2),(0,3),…` packed six bits per byte, big-endian.
pub fn graph6_encode(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    out
}

fn sextet(b: u8) -> Result<u8, GraphError> {
    if (BIAS..=BIAS + 63).contains(&b) {
        Ok(b - BIAS)
    } else {
        Err(GraphError::Graph6(format!("byte {b:#04x} outside the printable range")))
    }
}

pub fn graph6_decode(bytes: &[u8]) -> Result<Graph, GraphError> {
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let (n, body) = match bytes {
        [] => return Err(GraphError::Graph6("empty input".into())),
        [b'~', b'~', rest @ ..] => {
            if rest.len() < 6 {
                return Err(GraphError::Graph6("truncated size header".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = (n << 6) | sextet(b)? as usize;
            }
            (n, &rest[6..])
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(GraphError::Graph6("truncated size header".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = (n << 6) | sextet(b)? as usize;
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => (sextet(*b)? as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[k / 6])?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sextet(body[expected - 1])?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(GraphError::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}
