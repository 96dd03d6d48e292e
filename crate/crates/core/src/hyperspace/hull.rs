//! Finite convex hulls `∪_z (z, S]` as rooted trees.

use serde::Serialize;

use super::point::log_dist;
use super::HPoint;
use crate::error::{Error, Result};
use crate::padic::{PadicNumber, RadiusExp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Base,
    Branch,
    Leaf,
}

/// A hull vertex. Leaves are points of ℚ_p and carry no radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullNode {
    pub kind: NodeKind,
    pub center: PadicNumber,
    pub rexp: Option<RadiusExp>,
}

impl HullNode {
    pub fn point(&self) -> Option<HPoint> {
        self.rexp.map(|r| HPoint::new(self.center.clone(), r).unwrap())
    }
}

/// An edge from a child to its parent; `length` is `None` for the infinite edge above a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullEdge {
    pub from: usize,
    pub to: usize,
    pub length: Option<RadiusExp>,
}

/// The tree spanned by a finite set of points and a base point above them.
///
/// Vertex 0 is the base. Every other vertex has exactly one edge, to its parent.
#[derive(Debug, Clone)]
pub struct ConvexHull {
    pub vertices: Vec<HullNode>,
    pub edges: Vec<HullEdge>,
}

/// Tree item: a ball, or a type-1 point when `rexp` is `None`.
#[derive(Clone)]
struct Item {
    center: PadicNumber,
    rexp: Option<RadiusExp>,
}

fn join_items(a: &Item, b: &Item) -> Result<HPoint> {
    let floor = match (a.rexp, b.rexp) {
        (Some(x), Some(y)) => x.max(y),
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => RadiusExp::integer(i64::MIN / 4),
    };
    let l = log_dist(&a.center, &b.center, floor)?;
    let r = [a.rexp, b.rexp, l].into_iter().flatten().max().ok_or(Error::IndistinguishablePoints)?;
    HPoint::new(a.center.clone(), r)
}

fn item_in(ball: &HPoint, item: &Item) -> Result<bool> {
    match item.rexp {
        Some(r) => Ok(r <= ball.rexp() && ball.contains(&item.center)?),
        None => ball.contains(&item.center),
    }
}

impl ConvexHull {
    /// Hull of the points together with extra balls (e.g. boundary Gauss points of an affinoid).
    pub fn build(points: &[PadicNumber], extra: &[HPoint], base: &HPoint) -> Result<ConvexHull> {
        let mut leaves: Vec<PadicNumber> = Vec::new();
        for z in points {
            if !base.contains(z)? {
                return Err(Error::PointsOutsideBall);
            }
            if !leaves.contains(z) {
                leaves.push(z.clone());
            }
        }
        let mut items: Vec<Item> = leaves.iter().map(|z| Item { center: z.clone(), rexp: None }).collect();
        for b in extra {
            if !base.contains_ball(b)? {
                return Err(Error::PointsOutsideBall);
            }
            items.push(Item { center: b.center().clone(), rexp: Some(b.rexp()) });
        }

        let mut balls: Vec<HPoint> = vec![base.clone()];
        let add = |q: HPoint, balls: &mut Vec<HPoint>| {
            if !balls.contains(&q) {
                balls.push(q);
            }
        };
        for b in extra {
            add(b.clone(), &mut balls);
        }
        for i in 0..items.len() {
            for j in i + 1..items.len() {
                add(join_items(&items[i], &items[j])?, &mut balls);
            }
        }
        // base first, then by decreasing radius; ties keep insertion order
        balls[1..].sort_by_key(|b| std::cmp::Reverse(b.rexp()));

        let mut vertices: Vec<HullNode> = balls
            .iter()
            .enumerate()
            .map(|(i, b)| HullNode {
                kind: if i == 0 { NodeKind::Base } else { NodeKind::Branch },
                center: b.center().clone(),
                rexp: Some(b.rexp()),
            })
            .collect();
        let mut edges = Vec::new();
        for i in 1..balls.len() {
            let parent = Self::smallest_container(&balls, |b| Ok(b.rexp() > balls[i].rexp() && b.contains_ball(&balls[i])?))?
                .expect("base contains every vertex");
            edges.push(HullEdge { from: i, to: parent, length: Some(balls[i].distance(&balls[parent])?) });
        }
        for z in &leaves {
            let item = Item { center: z.clone(), rexp: None };
            let parent = Self::smallest_container(&balls, |b| item_in(b, &item))?.expect("base contains every leaf");
            vertices.push(HullNode { kind: NodeKind::Leaf, center: z.clone(), rexp: None });
            edges.push(HullEdge { from: vertices.len() - 1, to: parent, length: None });
        }
        Ok(ConvexHull { vertices, edges })
    }

    /// Hull of finitely many points of the ball of `base`.
    pub fn of_points(points: &[PadicNumber], base: &HPoint) -> Result<ConvexHull> {
        ConvexHull::build(points, &[], base)
    }

    fn smallest_container(balls: &[HPoint], pred: impl Fn(&HPoint) -> Result<bool>) -> Result<Option<usize>> {
        let mut best: Option<usize> = None;
        for (k, b) in balls.iter().enumerate() {
            if pred(b)? && best.is_none_or(|j| b.rexp() < balls[j].rexp()) {
                best = Some(k);
            }
        }
        Ok(best)
    }

    pub fn base(&self) -> &HullNode {
        &self.vertices[0]
    }

    /// Ball vertices other than the base.
    pub fn branch_points(&self) -> Vec<HPoint> {
        self.vertices.iter().filter(|v| v.kind == NodeKind::Branch).filter_map(HullNode::point).collect()
    }

    pub fn parent_of(&self, vertex: usize) -> Option<usize> {
        self.edges.iter().find(|e| e.from == vertex).map(|e| e.to)
    }
}

impl Serialize for ConvexHull {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct V<'a> {
            kind: NodeKind,
            center: &'a PadicNumber,
            rexp: String,
        }
        #[derive(Serialize)]
        struct E {
            from: usize,
            to: usize,
            length: String,
        }
        #[derive(Serialize)]
        struct Tree<'a> {
            vertices: Vec<V<'a>>,
            edges: Vec<E>,
        }
        let tree = Tree {
            vertices: self
                .vertices
                .iter()
                .map(|v| V {
                    kind: v.kind,
                    center: &v.center,
                    rexp: v.rexp.map_or_else(|| "-inf".to_string(), |r| r.to_string()),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| E { from: e.from, to: e.to, length: e.length.map_or_else(|| "inf".to_string(), |l| l.to_string()) })
                .collect(),
        };
        tree.serialize(s)
    }
}
