//! CERT text format: serializable, independently verifiable records of
//! path / cycle / configuration claims.

use crate::hypergraph::{path_color_check, Color, Coloring, LooseCycle, LoosePath, Vertex};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertKind {
    Path,
    Cycle,
    Config,
}

impl CertKind {
    fn name(self) -> &'static str {
        match self {
            CertKind::Path => "PATH",
            CertKind::Cycle => "CYCLE",
            CertKind::Config => "CONFIG",
        }
    }
}

/// A claim about the coloring: a monochromatic path, cycle, or 2-edge
/// configuration, given by its vertices in traversal order.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub kind: CertKind,
    pub k: usize,
    pub color: Color,
    pub vertices: Vec<Vertex>,
    /// CONFIG only: the two end vertices (in W).
    pub endpoints: Option<(Vertex, Vertex)>,
    /// Optional provenance annotation, e.g. `lemma=3.2 case=... fallback=false`.
    pub annotation: Option<String>,
}

impl Certificate {
    pub fn for_path(path: &LoosePath, color: Color) -> Certificate {
        Certificate {
            kind: CertKind::Path,
            k: path.k(),
            color,
            vertices: path.vertices().to_vec(),
            endpoints: None,
            annotation: None,
        }
    }

    pub fn for_cycle(cycle: &LooseCycle, color: Color) -> Certificate {
        Certificate {
            kind: CertKind::Cycle,
            k: cycle.k(),
            color,
            vertices: cycle.vertices().to_vec(),
            endpoints: None,
            annotation: None,
        }
    }

    pub fn with_annotation(mut self, ann: String) -> Certificate {
        self.annotation = Some(ann);
        self
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("CERT {}\n", self.kind.name()));
        out.push_str(&format!("k={} color={}\n", self.k, self.color));
        let verts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("vertices= {}\n", verts.join(" ")));
        if let Some((x, y)) = self.endpoints {
            out.push_str(&format!("endpoints= {x} {y}\n"));
        }
        if let Some(ann) = &self.annotation {
            out.push_str(ann);
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Certificate> {
        let mut lines = text.lines();
        let head = lines
            .next()
            .ok_or_else(|| Error::Parse("empty certificate".into()))?;
        let kind = match head {
            "CERT PATH" => CertKind::Path,
            "CERT CYCLE" => CertKind::Cycle,
            "CERT CONFIG" => CertKind::Config,
            other => return Err(Error::Parse(format!("bad certificate head {other:?}"))),
        };
        let meta = lines
            .next()
            .ok_or_else(|| Error::Parse("missing k/color line".into()))?;
        let mut toks = meta.split_whitespace();
        let k: usize = toks
            .next()
            .and_then(|t| t.strip_prefix("k="))
            .ok_or_else(|| Error::Parse("missing k=".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad k: {e}")))?;
        let color = Color::parse(
            toks.next()
                .and_then(|t| t.strip_prefix("color="))
                .ok_or_else(|| Error::Parse("missing color=".into()))?,
        )?;
        let vline = lines
            .next()
            .ok_or_else(|| Error::Parse("missing vertices line".into()))?;
        let vtext = vline
            .strip_prefix("vertices=")
            .ok_or_else(|| Error::Parse("missing vertices=".into()))?;
        let vertices: Vec<Vertex> = vtext
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map(Vertex)
                    .map_err(|e| Error::Parse(format!("bad vertex {t:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        let mut endpoints = None;
        let mut annotation = None;
        for line in lines {
            if let Some(rest) = line.strip_prefix("endpoints=") {
                let ids: Vec<u32> = rest
                    .split_whitespace()
                    .map(|t| t.parse::<u32>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|e| Error::Parse(format!("bad endpoints: {e}")))?;
                if ids.len() != 2 {
                    return Err(Error::Parse("endpoints= needs two vertices".into()));
                }
                endpoints = Some((Vertex(ids[0]), Vertex(ids[1])));
            } else if !line.trim().is_empty() {
                annotation = Some(line.to_string());
            }
        }
        if kind == CertKind::Config && endpoints.is_none() {
            return Err(Error::Parse("CONFIG certificate needs endpoints=".into()));
        }
        Ok(Certificate {
            kind,
            k,
            color,
            vertices,
            endpoints,
            annotation,
        })
    }

    /// Re-verify the claim against a coloring: structural validity first,
    /// then every derived edge has the claimed color.
    pub fn verify(&self, coloring: &Coloring) -> Result<()> {
        if self.k != coloring.k() {
            return Err(Error::Structure(format!(
                "certificate k={} vs coloring k={}",
                self.k,
                coloring.k()
            )));
        }
        match self.kind {
            CertKind::Cycle => {
                let c = LooseCycle::new(self.k, self.vertices.clone())?;
                if !path_color_check(coloring, &c, self.color) {
                    return Err(Error::Structure(format!(
                        "cycle is not {} under this coloring",
                        self.color
                    )));
                }
            }
            CertKind::Path => {
                let p = LoosePath::new(self.k, self.vertices.clone())?;
                if !path_color_check(coloring, &p, self.color) {
                    return Err(Error::Structure(format!(
                        "path is not {} under this coloring",
                        self.color
                    )));
                }
            }
            CertKind::Config => {
                let p = LoosePath::new(self.k, self.vertices.clone())?;
                if p.len() != 2 {
                    return Err(Error::Structure("CONFIG must have exactly 2 edges".into()));
                }
                if !path_color_check(coloring, &p, self.color) {
                    return Err(Error::Structure(format!(
                        "configuration is not {} under this coloring",
                        self.color
                    )));
                }
                let (x, y) = self.endpoints.unwrap();
                if p.first() != x || p.last() != y {
                    return Err(Error::Structure(
                        "endpoints do not match the vertex sequence".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::random_coloring;
    use crate::hypergraph::Coloring;

    #[test]
    fn cycle_cert_round_trip() {
        let col = Coloring::all_red(5, 12).unwrap();
        let cycle = LooseCycle::new(5, (0..12u32).map(Vertex).collect()).unwrap();
        let cert = Certificate::for_cycle(&cycle, Color::Red)
            .with_annotation("lemma=3.2 case=case2 fallback=false".into());
        let text = cert.emit();
        let back = Certificate::parse(&text).unwrap();
        assert_eq!(back, cert);
        back.verify(&col).unwrap();
    }

    #[test]
    fn corrupted_cert_fails_verification() {
        let col = random_coloring(5, 13, 5, 0.5).unwrap();
        let path = LoosePath::new(5, (0..13u32).map(Vertex).collect()).unwrap();
        let color = col.color_of(path.edge(0)).unwrap();
        // force a cert with the wrong color on at least one edge
        let other = color.opposite();
        let cert = Certificate::for_path(&path, other);
        // edge 0 has `color`, so claiming `other` for the whole path must fail
        assert!(cert.verify(&col).is_err());
    }

    #[test]
    fn malformed_cert_rejected() {
        assert!(Certificate::parse("CERT TRIANGLE\n").is_err());
        assert!(Certificate::parse("CERT PATH\nk=5 color=red\n").is_err());
    }
}
