//! Star-forest covers from contact representations by horizontal and
//! vertical segments. Representations are inputs; none are computed here.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::cover::{Component, CoverCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EndLabel {
    Up,
    Down,
    Left,
    Right,
}

impl EndLabel {
    pub const ALL: [EndLabel; 4] = [EndLabel::Up, EndLabel::Down, EndLabel::Left, EndLabel::Right];

    pub fn axis(self) -> Axis {
        match self {
            EndLabel::Up | EndLabel::Down => Axis::Vertical,
            EndLabel::Left | EndLabel::Right => Axis::Horizontal,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EndLabel::Up => "up",
            EndLabel::Down => "down",
            EndLabel::Left => "left",
            EndLabel::Right => "right",
        }
    }
}

impl fmt::Display for EndLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EndLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        EndLabel::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::InvalidRepresentation(format!("unknown endpoint label `{s}`")))
    }
}

/// Segment `owner`'s endpoint `label` touches the interior of `other`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Touch {
    pub owner: usize,
    pub label: EndLabel,
    pub other: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactRepresentation {
    pub axes: Vec<Axis>,
    pub touches: Vec<Touch>,
}

impl ContactRepresentation {
    /// Checks the representation against `g`: one touch per edge, every
    /// endpoint used once, labels matching axes, edges across axes.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidRepresentation(m));
        if self.axes.len() != g.vertex_count() {
            return bad(format!("{} segments for {} vertices", self.axes.len(), g.vertex_count()));
        }
        let mut ends = HashMap::new();
        let mut seen = vec![false; g.edge_count()];
        for t in &self.touches {
            let Some(e) = g.edge_index(t.owner, t.other) else {
                return bad(format!("touch {} {} {} is not an edge", t.owner, t.label, t.other));
            };
            if std::mem::replace(&mut seen[e], true) {
                return bad(format!("edge {}-{} realized twice", t.owner, t.other));
            }
            if let Some(prev) = ends.insert((t.owner, t.label), t.other) {
                return bad(format!("endpoint {} of {} touches both {prev} and {}", t.label, t.owner, t.other));
            }
            if self.axes[t.owner] != t.label.axis() {
                return bad(format!("segment {} cannot have a {} endpoint", t.owner, t.label));
            }
            if self.axes[t.owner] == self.axes[t.other] {
                return bad(format!("segments {} and {} are parallel", t.owner, t.other));
            }
        }
        if let Some(e) = seen.iter().position(|&s| !s) {
            let (u, v) = g.edges()[e];
            return bad(format!("edge {u}-{v} has no contact"));
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, a) in self.axes.iter().enumerate() {
            s.push_str(&format!("seg {v} {}\n", if *a == Axis::Horizontal { "h" } else { "v" }));
        }
        for t in &self.touches {
            s.push_str(&format!("touch {} {} {}\n", t.owner, t.label, t.other));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut axes: Vec<Option<Axis>> = Vec::new();
        let mut touches = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: i + 1, msg: msg.to_string() };
            let f: Vec<&str> = line.split_whitespace().collect();
            match f.as_slice() {
                ["seg", v, a] => {
                    let v: usize = v.parse().map_err(|_| err("bad vertex"))?;
                    let a = match *a {
                        "h" => Axis::Horizontal,
                        "v" => Axis::Vertical,
                        _ => return Err(err("axis must be h or v")),
                    };
                    if axes.len() <= v {
                        axes.resize(v + 1, None);
                    }
                    axes[v] = Some(a);
                }
                ["touch", o, l, w] => touches.push(Touch {
                    owner: o.parse().map_err(|_| err("bad owner"))?,
                    label: l.parse().map_err(|_| err("bad endpoint label"))?,
                    other: w.parse().map_err(|_| err("bad vertex"))?,
                }),
                _ => return Err(err("expected `seg` or `touch`")),
            }
        }
        let axes = axes
            .into_iter()
            .enumerate()
            .map(|(v, a)| a.ok_or_else(|| Error::InvalidRepresentation(format!("segment {v} missing"))))
            .collect::<Result<_>>()?;
        Ok(ContactRepresentation { axes, touches })
    }
}

/// Groups edges by the endpoint label realizing them. Every owner has at
/// most one edge per label, so each group is a star forest centred on the
/// touched segments.
pub fn contact_star_forests(g: &Graph, rep: &ContactRepresentation) -> Result<CoverCertificate> {
    rep.validate(g)?;
    let mut cert = CoverCertificate::new(g.vertex_count());
    for label in EndLabel::ALL {
        let edges: Vec<(usize, usize)> =
            rep.touches.iter().filter(|t| t.label == label).map(|t| (t.owner, t.other)).collect();
        if edges.is_empty() {
            continue;
        }
        let mut vs: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vs.sort_unstable();
        vs.dedup();
        cert.components.push(Component::from_host_edges(&vs, &edges));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::TemplateClass;
    use crate::cover::{verify_cover, Mode};
    use crate::graph::cycle;

    // a square: 0 and 2 horizontal, 1 and 3 vertical
    const C4: &str = "seg 0 h\nseg 1 v\nseg 2 h\nseg 3 v\n\
                      touch 1 up 0\ntouch 1 down 2\ntouch 0 right 3\ntouch 2 left 3\n";

    #[test]
    fn square() {
        let g = cycle(4).unwrap();
        let rep = ContactRepresentation::from_text(C4).unwrap();
        assert_eq!(ContactRepresentation::from_text(&rep.to_text()).unwrap(), rep);
        let cert = contact_star_forests(&g, &rep).unwrap();
        assert_eq!(cert.components.len(), 4);
        assert!(verify_cover(&g, &cert, TemplateClass::StarForest, Mode::Global).unwrap().valid);
    }

    #[test]
    fn reused_endpoint_is_rejected() {
        let g = cycle(4).unwrap();
        let bad = C4.replace("touch 1 down 2", "touch 1 up 2");
        let rep = ContactRepresentation::from_text(&bad).unwrap();
        assert!(matches!(contact_star_forests(&g, &rep), Err(Error::InvalidRepresentation(_))));
    }
}
