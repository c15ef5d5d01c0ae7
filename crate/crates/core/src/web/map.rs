use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::Error;
use crate::portrait::{AddressSystem, MarkedPartition};
use crate::web::graph::{Edge, EdgeKey, Vertex, Web};

/// The self-map of a web induced by `m_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebMap {
    vertices: BTreeMap<Vertex, Vertex>,
    edges: BTreeMap<EdgeKey, EdgeKey>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeClass {
    Periodic,
    Preperiodic,
}

/// Index of the part containing the whole image of part `k`.
fn image_part(parts: &MarkedPartition, k: usize, d: u32) -> Result<usize, Error> {
    let part = &parts.parts()[k];
    let mut target = None;
    for a in part.angles() {
        let image = a.md(d);
        let j = parts
            .part_of(image)
            .ok_or_else(|| Error::InconsistentMap(format!("m_d({a}) = {image} is not marked")))?;
        match target {
            None => target = Some(j),
            Some(t) if t != j => {
                return Err(Error::InconsistentMap(format!(
                    "the image of {part} meets two parts"
                )))
            }
            _ => {}
        }
    }
    Ok(target.expect("parts are non-empty"))
}

impl WebMap {
    /// Builds the map and re-checks that parts map into parts, edges into
    /// edges with matching endpoints, and preferred edges to preferred edges.
    pub fn new(web: &Web, sys: &AddressSystem) -> Result<WebMap, Error> {
        let d = sys.degree();
        let mut vertices = BTreeMap::new();
        vertices.insert(Vertex::Infinity, Vertex::Infinity);
        for k in 0..web.jstar().len() {
            vertices.insert(Vertex::Julia(k), Vertex::Julia(image_part(web.jstar(), k, d)?));
        }
        for k in 0..web.fstar().len() {
            vertices.insert(Vertex::Fatou(k), Vertex::Fatou(image_part(web.fstar(), k, d)?));
        }

        let mut edges = BTreeMap::new();
        for e in web.edges() {
            let image_key = match e.key() {
                EdgeKey::Ray(a) => EdgeKey::Ray(a.md(d)),
                EdgeKey::Internal(a) => EdgeKey::Internal(a.md(d)),
            };
            let image = web.edge(image_key).ok_or_else(|| {
                Error::InconsistentMap(format!("no edge {image_key:?} for the image of {e:?}"))
            })?;
            let (from, to) = e.endpoints();
            if (vertices[&from], vertices[&to]) != image.endpoints() {
                return Err(Error::InconsistentMap(format!(
                    "endpoints of {e:?} do not map to those of {image:?}"
                )));
            }
            if e.is_preferred() && !image.is_preferred() {
                return Err(Error::InconsistentMap(format!(
                    "preferred edge {e:?} maps to the non-preferred {image:?}"
                )));
            }
            edges.insert(e.key(), image_key);
        }
        Ok(WebMap { vertices, edges })
    }

    pub fn vertex(&self, v: Vertex) -> Option<Vertex> {
        self.vertices.get(&v).copied()
    }

    pub fn edge(&self, e: EdgeKey) -> Option<EdgeKey> {
        self.edges.get(&e).copied()
    }

    /// An edge is periodic iff some iterate of the edge map returns it to itself.
    pub fn classify_edges(&self) -> BTreeMap<EdgeKey, EdgeClass> {
        self.edges
            .keys()
            .map(|&start| {
                let mut e = start;
                let mut class = EdgeClass::Preperiodic;
                for _ in 0..self.edges.len() {
                    e = self.edges[&e];
                    if e == start {
                        class = EdgeClass::Periodic;
                        break;
                    }
                }
                (start, class)
            })
            .collect()
    }

    /// Vertex images followed by edge images and classes.
    pub fn to_text(&self, web: &Web) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vertex map");
        for (v, w) in &self.vertices {
            let _ = writeln!(out, "  {} -> {}", web.vertex_id(*v), web.vertex_id(*w));
        }
        let classes = self.classify_edges();
        let _ = writeln!(out, "edge map");
        for e in web.edges() {
            let image = self.edges[&e.key()];
            let (kind, target) = match (e, image) {
                (Edge::WebRay { .. }, EdgeKey::Ray(t)) => ("ray", t),
                (_, EdgeKey::Internal(t)) | (_, EdgeKey::Ray(t)) => ("internal", t),
            };
            let class = match classes[&e.key()] {
                EdgeClass::Periodic => "periodic",
                EdgeClass::Preperiodic => "preperiodic",
            };
            let _ = writeln!(out, "  {kind} {} -> {} {class}", e.angle(), target);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::Angle;
    use crate::portrait::CriticalPortrait;

    fn a(p: i64, q: i64) -> Angle {
        Angle::new(p, q).unwrap()
    }

    fn levy() -> (AddressSystem, Web) {
        let sys = AddressSystem::new(
            CriticalPortrait::new(vec![vec![a(1, 4), a(7, 12)], vec![a(3, 4), a(1, 12)]], vec![])
                .unwrap(),
        );
        let gamma = sys.gen_special_arguments();
        let web = Web::new(sys.build_fstar(&gamma).unwrap(), sys.build_jstar(&gamma).unwrap())
            .unwrap();
        (sys, web)
    }

    #[test]
    fn levy_web_counts() {
        let (_, web) = levy();
        assert_eq!(web.vertices().len(), 9);
        assert_eq!(web.rays().count(), 7);
        assert_eq!(web.internal_edges().count(), 6);
        let order: Vec<String> = web.rays().map(|e| e.angle().to_string()).collect();
        assert_eq!(order, ["0", "1/12", "1/4", "13/36", "7/12", "3/4", "31/36"]);
        assert!(web.edge(EdgeKey::Ray(Angle::ZERO)).unwrap().is_preferred());
        assert_eq!(web.internal_edges().filter(|e| e.is_preferred()).count(), 2);
    }

    #[test]
    fn levy_web_map() {
        let (sys, web) = levy();
        let map = WebMap::new(&web, &sys).unwrap();
        assert_eq!(map.vertex(Vertex::Infinity), Some(Vertex::Infinity));
        assert_eq!(map.edge(EdgeKey::Ray(a(13, 36))), Some(EdgeKey::Ray(a(1, 12))));
        let v = web.landing_vertex(a(13, 36)).unwrap();
        assert_eq!(map.vertex(v), web.landing_vertex(a(1, 12)));
        let f1 = Vertex::Fatou(web.fstar().part_of(a(1, 4)).unwrap());
        let f2 = Vertex::Fatou(web.fstar().part_of(a(3, 4)).unwrap());
        assert_eq!(map.vertex(f1), Some(f2));
        assert_eq!(map.vertex(f2), Some(f1));
    }

    #[test]
    fn levy_edge_classes() {
        let (sys, web) = levy();
        let classes = WebMap::new(&web, &sys).unwrap().classify_edges();
        assert_eq!(classes[&EdgeKey::Ray(a(1, 4))], EdgeClass::Periodic);
        assert_eq!(classes[&EdgeKey::Ray(a(3, 4))], EdgeClass::Periodic);
        assert_eq!(classes[&EdgeKey::Ray(a(13, 36))], EdgeClass::Preperiodic);
        assert_eq!(classes[&EdgeKey::Ray(Angle::ZERO)], EdgeClass::Periodic);
        assert_eq!(classes[&EdgeKey::Internal(a(7, 12))], EdgeClass::Preperiodic);
    }

    #[test]
    fn cube_web() {
        let sys = AddressSystem::new(
            CriticalPortrait::new(vec![vec![Angle::ZERO, a(1, 3), a(2, 3)]], vec![]).unwrap(),
        );
        let web = Web::new(sys.build_fstar(&[]).unwrap(), sys.build_jstar(&[]).unwrap()).unwrap();
        assert_eq!(web.vertices().len(), 5);
        assert_eq!(web.rays().count(), 3);
        assert_eq!(web.internal_edges().count(), 3);
        WebMap::new(&web, &sys).unwrap();
    }

    #[test]
    fn linked_families_do_not_embed() {
        let jstar = MarkedPartition::julia(vec![vec![Angle::ZERO, a(1, 2)], vec![a(1, 4), a(3, 4)]])
            .unwrap();
        assert!(matches!(
            Web::new(MarkedPartition::default(), jstar),
            Err(Error::Obstruction { .. })
        ));
    }
}
