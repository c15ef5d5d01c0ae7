use std::fmt::Write as _;

use crate::angle::Angle;
use crate::error::Error;
use crate::portrait::{verify_prop_1_2, MarkedPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Infinity,
    /// Landing vertex of the J* part with this index.
    Julia(usize),
    /// Fatou-type vertex ω of the F* part with this index.
    Fatou(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKey {
    Ray(Angle),
    Internal(Angle),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Edge {
    /// Edge from infinity; `preferred` marks the ray of argument 0.
    WebRay {
        angle: Angle,
        lands_on: Vertex,
        preferred: bool,
    },
    /// Edge joining the landing vertex of `angle` to the Fatou vertex of its part.
    Internal {
        angle: Angle,
        from: Vertex,
        to: Vertex,
        preferred: bool,
    },
}

impl Edge {
    pub fn key(&self) -> EdgeKey {
        match *self {
            Edge::WebRay { angle, .. } => EdgeKey::Ray(angle),
            Edge::Internal { angle, .. } => EdgeKey::Internal(angle),
        }
    }

    pub fn angle(&self) -> Angle {
        match *self {
            Edge::WebRay { angle, .. } | Edge::Internal { angle, .. } => angle,
        }
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        match *self {
            Edge::WebRay { lands_on, .. } => (Vertex::Infinity, lands_on),
            Edge::Internal { from, to, .. } => (from, to),
        }
    }

    pub fn is_preferred(&self) -> bool {
        match *self {
            Edge::WebRay { preferred, .. } | Edge::Internal { preferred, .. } => preferred,
        }
    }
}

/// The abstract web: stored as a graph plus the counterclockwise order of the
/// web rays at infinity, which is the numeric order of their arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Web {
    fstar: MarkedPartition,
    jstar: MarkedPartition,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl Web {
    pub fn new(fstar: MarkedPartition, jstar: MarkedPartition) -> Result<Web, Error> {
        if let Some(w) = verify_prop_1_2(&jstar, &fstar) {
            return Err(w.into_error());
        }
        if jstar.part_of(Angle::ZERO).is_none() {
            return Err(Error::InvalidPartition("J* does not contain the argument 0".into()));
        }

        let mut vertices = vec![Vertex::Infinity];
        vertices.extend((0..jstar.len()).map(Vertex::Julia));
        vertices.extend((0..fstar.len()).map(Vertex::Fatou));

        let mut edges = Vec::new();
        for angle in jstar.ground_set() {
            let part = jstar.part_of(angle).expect("angle from ground set");
            edges.push(Edge::WebRay {
                angle,
                lands_on: Vertex::Julia(part),
                preferred: angle == Angle::ZERO,
            });
        }
        for (k, part) in fstar.parts().iter().enumerate() {
            let preferred = part.preferred();
            for &angle in part.angles() {
                let landing = jstar.part_of(angle).ok_or_else(|| {
                    Error::InvalidPartition(format!("F* angle {angle} has no J* part"))
                })?;
                edges.push(Edge::Internal {
                    angle,
                    from: Vertex::Julia(landing),
                    to: Vertex::Fatou(k),
                    preferred: preferred == Some(angle),
                });
            }
        }

        Ok(Web {
            fstar,
            jstar,
            vertices,
            edges,
        })
    }

    pub fn fstar(&self) -> &MarkedPartition {
        &self.fstar
    }

    pub fn jstar(&self) -> &MarkedPartition {
        &self.jstar
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, key: EdgeKey) -> Option<&Edge> {
        self.edges.iter().find(|e| e.key() == key)
    }

    /// Web rays in counterclockwise order at infinity.
    pub fn rays(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| matches!(e, Edge::WebRay { .. }))
    }

    pub fn internal_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| matches!(e, Edge::Internal { .. }))
    }

    /// Vertex containing the web ray of `angle` as its landing point.
    pub fn landing_vertex(&self, angle: Angle) -> Option<Vertex> {
        self.jstar.part_of(angle).map(Vertex::Julia)
    }

    /// Stable id: `v0` is infinity, then J* parts, then F* parts.
    pub fn vertex_id(&self, v: Vertex) -> String {
        let n = match v {
            Vertex::Infinity => 0,
            Vertex::Julia(i) => 1 + i,
            Vertex::Fatou(k) => 1 + self.jstar.len() + k,
        };
        format!("v{n}")
    }

    /// Deterministic text listing: vertices, web rays, internal edges and the
    /// circular order at infinity.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vertices {}", self.vertices.len());
        for v in &self.vertices {
            let label = match *v {
                Vertex::Infinity => "infinity".to_string(),
                Vertex::Julia(i) => format!("julia {}", self.jstar.parts()[i]),
                Vertex::Fatou(k) => format!("fatou {}", self.fstar.parts()[k]),
            };
            let _ = writeln!(out, "  {} {}", self.vertex_id(*v), label);
        }
        let _ = writeln!(out, "web rays {}", self.rays().count());
        for e in self.rays() {
            let (_, to) = e.endpoints();
            let flag = if e.is_preferred() { " preferred" } else { "" };
            let _ = writeln!(out, "  {} -> {}{}", e.angle(), self.vertex_id(to), flag);
        }
        let _ = writeln!(out, "internal edges {}", self.internal_edges().count());
        for e in self.internal_edges() {
            let (from, to) = e.endpoints();
            let flag = if e.is_preferred() { " preferred" } else { "" };
            let _ = writeln!(
                out,
                "  {} {} -- {}{}",
                e.angle(),
                self.vertex_id(from),
                self.vertex_id(to),
                flag
            );
        }
        let order: Vec<String> = self.rays().map(|e| e.angle().to_string()).collect();
        let _ = writeln!(out, "ray order {}", order.join(" "));
        out
    }
}
