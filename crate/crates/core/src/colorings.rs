//! Coloring constructors (extremal lower-bound witness, seeded random,
//! planted structures) and the LRC1 text file format.

use crate::binom::choose;
use crate::hypergraph::{
    edge_unrank, Color, Coloring, LooseCycle, Provenance, Vertex,
};
use crate::{Error, Result};

/// Parameters of the extremal partition coloring: vertices `[0, A)` form the
/// red core, the remaining `B` vertices force every edge meeting them blue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowerBoundSpec {
    pub k: usize,
    pub n: usize,
    pub m: usize,
}

impl LowerBoundSpec {
    pub fn new(k: usize, n: usize, m: usize) -> Result<LowerBoundSpec> {
        if k < 3 || m < 3 || n < m {
            return Err(Error::InvalidInput(format!(
                "lower bound spec needs k >= 3, n >= m >= 3, got k={k} n={n} m={m}"
            )));
        }
        Ok(LowerBoundSpec { k, n, m })
    }

    pub fn a_size(&self) -> usize {
        (self.k - 1) * self.n - 1
    }

    pub fn b_size(&self) -> usize {
        (self.m - 1) / 2
    }

    pub fn n_verts(&self) -> usize {
        self.a_size() + self.b_size()
    }
}

/// The extremal coloring on `(k-1)n + floor((m-1)/2) - 1` vertices: an edge
/// is red iff it lies entirely inside `A`, blue iff it meets `B`.
pub fn lower_bound_coloring(k: usize, n: usize, m: usize) -> Result<Coloring> {
    let spec = LowerBoundSpec::new(k, n, m)?;
    let nv = spec.n_verts();
    let a = spec.a_size();
    let mut col = Coloring::all_red(k, nv)?;
    for rank in 0..col.n_edges() {
        let e = edge_unrank(rank, k, nv)?;
        if e.vertices().iter().any(|v| v.index() >= a) {
            col.set_rank(rank, Color::Blue);
        }
    }
    col.provenance = Provenance::LowerBound { n, m };
    Ok(col)
}

/// splitmix64 step; the fixed PRNG behind [`random_coloring`].
#[inline]
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Seeded random coloring: edge at rank r is blue iff the r-th draw of the
/// splitmix64 stream falls below `p_blue` (53-bit threshold compare), so the
/// bitmap is reproducible bit-for-bit across platforms.
pub fn random_coloring(k: usize, n_verts: usize, seed: u64, p_blue: f64) -> Result<Coloring> {
    if !(0.0..=1.0).contains(&p_blue) {
        return Err(Error::InvalidInput(format!("p_blue={p_blue} out of [0,1]")));
    }
    let mut col = Coloring::all_red(k, n_verts)?;
    let threshold = (p_blue * (1u64 << 53) as f64) as u64;
    let mut state = seed;
    for rank in 0..col.n_edges() {
        let x = splitmix64(&mut state);
        if (x >> 11) < threshold {
            col.set_rank(rank, Color::Blue);
        }
    }
    col.provenance = Provenance::Random { seed, p_blue };
    Ok(col)
}

/// Recolor the edges of a chosen loose cycle on the first `len*(k-1)`
/// vertices, leaving every other rank untouched.
pub fn plant_cycle(coloring: &Coloring, len: usize, color: Color) -> Result<(Coloring, LooseCycle)> {
    let k = coloring.k();
    let need = len * (k - 1);
    if coloring.n_verts() < need {
        return Err(Error::InvalidInput(format!(
            "N={} too small to plant a {len}-edge cycle",
            coloring.n_verts()
        )));
    }
    let cycle = LooseCycle::new(k, (0..need as u32).map(Vertex).collect())?;
    let mut out = coloring.clone();
    for e in cycle.edges() {
        out.set(&e, color)?;
    }
    out.provenance = Provenance::Bitmap;
    Ok((out, cycle))
}

/// Plant the blue `C^k_{m-1}` that seeds the cycle-transfer lemmas: recolors
/// exactly the `m-1` edges of the cycle on the first `(m-1)(k-1)` vertices.
pub fn plant_blue_cycle(coloring: &Coloring, m: usize) -> Result<(Coloring, LooseCycle)> {
    if coloring.n_verts() < 4 * m {
        return Err(Error::InvalidInput(format!(
            "N={} < 4m={} for plant_blue_cycle",
            coloring.n_verts(),
            4 * m
        )));
    }
    plant_cycle(coloring, m - 1, Color::Blue)
}

/// Plant a red `C^k_len` on the first vertices (test-input generator for the
/// red-to-blue transfer lemmas).
pub fn plant_red_cycle(coloring: &Coloring, len: usize) -> Result<(Coloring, LooseCycle)> {
    plant_cycle(coloring, len, Color::Red)
}

const HEX: &[u8; 16] = b"0123456789abcdef";

/// Serialize a coloring as LRC1 text. Lowerbound/random colorings round-trip
/// through their construction parameters; bitmap colorings carry the payload.
pub fn write_coloring(coloring: &Coloring) -> String {
    let mut out = String::new();
    out.push_str("LRC1\n");
    match &coloring.provenance {
        Provenance::LowerBound { n, m } => {
            out.push_str(&format!(
                "k={} N={} mode=lowerbound\n",
                coloring.k(),
                coloring.n_verts()
            ));
            out.push_str(&format!("n={n} m={m}\n"));
        }
        Provenance::Random { seed, p_blue } => {
            out.push_str(&format!(
                "k={} N={} mode=random\n",
                coloring.k(),
                coloring.n_verts()
            ));
            out.push_str(&format!("seed={seed} pblue={p_blue}\n"));
        }
        Provenance::Bitmap => {
            out.push_str(&format!(
                "k={} N={} mode=bitmap\n",
                coloring.k(),
                coloring.n_verts()
            ));
            let nibbles = (coloring.n_edges() as usize + 3) / 4;
            let mut line = String::new();
            for nib in 0..nibbles {
                let mut val = 0u8;
                for t in 0..4 {
                    let rank = (nib * 4 + t) as u64;
                    if rank < coloring.n_edges() && coloring.color_of_rank(rank) == Color::Blue {
                        // most-significant bit of the nibble = lowest rank
                        val |= 8 >> t;
                    }
                }
                line.push(HEX[val as usize] as char);
                if line.len() == 64 {
                    out.push_str(&line);
                    out.push('\n');
                    line.clear();
                }
            }
            if !line.is_empty() {
                out.push_str(&line);
                out.push('\n');
            }
        }
    }
    out
}

fn header_field<'a>(tok: Option<&'a str>, key: &str) -> Result<&'a str> {
    let tok = tok.ok_or_else(|| Error::Parse(format!("missing field {key}")))?;
    tok.strip_prefix(&format!("{key}="))
        .ok_or_else(|| Error::Parse(format!("expected {key}=..., got {tok:?}")))
}

/// Parse LRC1 text into a coloring; non-bitmap modes are materialized from
/// their parameters so a file round-trips exactly to its construction.
pub fn read_coloring(text: &str) -> Result<Coloring> {
    let mut lines = text.lines();
    match lines.next() {
        Some("LRC1") => {}
        other => return Err(Error::Parse(format!("bad magic line {other:?}"))),
    }
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing header line".into()))?;
    let mut toks = header.split_whitespace();
    let k: usize = header_field(toks.next(), "k")?
        .parse()
        .map_err(|e| Error::Parse(format!("bad k: {e}")))?;
    let n_verts: usize = header_field(toks.next(), "N")?
        .parse()
        .map_err(|e| Error::Parse(format!("bad N: {e}")))?;
    let mode = header_field(toks.next(), "mode")?;
    match mode {
        "lowerbound" => {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing lowerbound params".into()))?;
            let mut toks = line.split_whitespace();
            let n: usize = header_field(toks.next(), "n")?
                .parse()
                .map_err(|e| Error::Parse(format!("bad n: {e}")))?;
            let m: usize = header_field(toks.next(), "m")?
                .parse()
                .map_err(|e| Error::Parse(format!("bad m: {e}")))?;
            let col = lower_bound_coloring(k, n, m)?;
            if col.n_verts() != n_verts {
                return Err(Error::Parse(format!(
                    "header N={n_verts} does not match lowerbound({k},{n},{m})"
                )));
            }
            Ok(col)
        }
        "random" => {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing random params".into()))?;
            let mut toks = line.split_whitespace();
            let seed: u64 = header_field(toks.next(), "seed")?
                .parse()
                .map_err(|e| Error::Parse(format!("bad seed: {e}")))?;
            let p_blue: f64 = header_field(toks.next(), "pblue")?
                .parse()
                .map_err(|e| Error::Parse(format!("bad pblue: {e}")))?;
            random_coloring(k, n_verts, seed, p_blue)
        }
        "bitmap" => {
            let mut col = Coloring::all_red(k, n_verts)?;
            let payload: String = lines.collect::<Vec<_>>().concat();
            let expected_nibbles = (col.n_edges() as usize + 3) / 4;
            if payload.len() != expected_nibbles {
                return Err(Error::Parse(format!(
                    "payload has {} hex digits, expected {expected_nibbles}",
                    payload.len()
                )));
            }
            for (nib, ch) in payload.bytes().enumerate() {
                let val = match ch {
                    b'0'..=b'9' => ch - b'0',
                    b'a'..=b'f' => ch - b'a' + 10,
                    _ => return Err(Error::Parse(format!("bad hex digit {:?}", ch as char))),
                };
                for t in 0..4 {
                    let rank = (nib * 4 + t) as u64;
                    if val & (8 >> t) != 0 {
                        if rank >= col.n_edges() {
                            return Err(Error::Parse("padding bits must be zero".into()));
                        }
                        col.set_rank(rank, Color::Blue);
                    }
                }
            }
            Ok(col)
        }
        other => Err(Error::Parse(format!("unknown mode {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::path_color_check;

    #[test]
    fn lower_bound_counts() {
        // k=5, n=3, m=3: N=12, |A|=11, red edges C(11,5)=462, blue 330
        let col = lower_bound_coloring(5, 3, 3).unwrap();
        assert_eq!(col.n_verts(), 12);
        assert_eq!(col.n_edges(), choose(12, 5));
        let blue = col.count_blue();
        assert_eq!(col.n_edges() - blue, choose(11, 5));
        assert_eq!(blue, choose(12, 5) - choose(11, 5));
    }

    #[test]
    fn lower_bound_partition_structure() {
        // every red edge inside A, every blue edge meets B (exhaustive, N<=16)
        for (k, n, m) in [(5usize, 3usize, 3usize), (3, 3, 3), (3, 4, 3), (5, 3, 4)] {
            let spec = LowerBoundSpec::new(k, n, m).unwrap();
            let col = lower_bound_coloring(k, n, m).unwrap();
            assert!(col.n_verts() <= 16);
            for rank in 0..col.n_edges() {
                let e = edge_unrank(rank, k, col.n_verts()).unwrap();
                let meets_b = e.vertices().iter().any(|v| v.index() >= spec.a_size());
                match col.color_of_rank(rank) {
                    Color::Red => assert!(!meets_b),
                    Color::Blue => assert!(meets_b),
                }
            }
        }
    }

    #[test]
    fn lower_bound_k3_cross_check() {
        // k=3, n=3, m=3: N = 2*3 + 1 - 1 = 6, red edges C(5,3) = 10 of C(6,3) = 20
        let col = lower_bound_coloring(3, 3, 3).unwrap();
        assert_eq!(col.n_verts(), 6);
        assert_eq!(col.n_edges(), choose(6, 3));
        assert_eq!(col.n_edges() - col.count_blue(), choose(5, 3));
    }

    #[test]
    fn random_extremes_and_determinism() {
        let all_red = random_coloring(5, 12, 3, 0.0).unwrap();
        assert_eq!(all_red.count_blue(), 0);
        let all_blue = random_coloring(5, 12, 3, 1.0).unwrap();
        assert_eq!(all_blue.count_blue(), all_blue.n_edges());
        let a = random_coloring(5, 25, 1, 0.5).unwrap();
        let b = random_coloring(5, 25, 1, 0.5).unwrap();
        assert!(a.bitmap_equal(&b));
    }

    #[test]
    fn plant_blue_recolors_only_planted_edges() {
        let red = Coloring::all_red(5, 25).unwrap();
        let (planted, cycle) = plant_blue_cycle(&red, 4).unwrap();
        assert_eq!(planted.count_blue(), 3);
        assert!(path_color_check(&planted, &cycle, Color::Blue));
        // plant into random: planted edges blue, all other ranks unchanged
        let base = random_coloring(5, 25, 9, 0.5).unwrap();
        let (planted, cycle) = plant_blue_cycle(&base, 4).unwrap();
        let planted_ranks: Vec<u64> = cycle
            .edges()
            .map(|e| {
                let mut s = e.clone();
                s.sort_unstable();
                crate::hypergraph::edge_rank(
                    &crate::hypergraph::Edge::new(s, 5, 25).unwrap(),
                    5,
                    25,
                )
                .unwrap()
            })
            .collect();
        for rank in 0..base.n_edges() {
            if planted_ranks.contains(&rank) {
                assert_eq!(planted.color_of_rank(rank), Color::Blue);
            } else {
                assert_eq!(planted.color_of_rank(rank), base.color_of_rank(rank));
            }
        }
    }

    #[test]
    fn lrc_round_trips() {
        let col = lower_bound_coloring(5, 3, 3).unwrap();
        let text = write_coloring(&col);
        let back = read_coloring(&text).unwrap();
        assert!(back.bitmap_equal(&col));

        let col = random_coloring(5, 14, 42, 0.25).unwrap();
        let text = write_coloring(&col);
        let back = read_coloring(&text).unwrap();
        assert!(back.bitmap_equal(&col));

        // bitmap mode
        let (planted, _) = plant_blue_cycle(&col, 3).unwrap();
        let text = write_coloring(&planted);
        assert!(text.contains("mode=bitmap"));
        let back = read_coloring(&text).unwrap();
        assert!(back.bitmap_equal(&planted));
    }

    #[test]
    fn lrc_truncated_payload_rejected() {
        let col = random_coloring(5, 10, 7, 0.5).unwrap();
        let mut forced = col.clone();
        forced.provenance = Provenance::Bitmap;
        let text = write_coloring(&forced);
        let truncated = &text[..text.len() - 2];
        assert!(matches!(read_coloring(truncated), Err(Error::Parse(_))));
    }

    #[test]
    fn lrc_bad_hex_rejected() {
        let col = Coloring::all_red(5, 8).unwrap();
        let mut forced = col.clone();
        forced.provenance = Provenance::Bitmap;
        let text = write_coloring(&forced);
        let bad = text.replace('0', "g");
        assert!(read_coloring(&bad).is_err());
    }
}
