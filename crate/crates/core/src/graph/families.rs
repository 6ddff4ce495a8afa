//! Standard graph families and their string descriptors.
//!
//! Descriptor grammar: `name:params` joined by `+` for disjoint unions, e.g.
//! `spider:3,2,1,1`, `K:2,3`, `Kn1:5`, `Sn1:4`, `P:3+Kn:1`.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Spider: a torso (vertex 0) with paths of the given lengths hanging off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spider {
    legs: Vec<usize>,
}

impl Spider {
    /// Requires at least three legs.
    pub fn new(legs: &[usize]) -> Result<Self> {
        let s = Self::relaxed(legs)?;
        if s.legs.len() < 3 {
            return Err(Error::NotASpider(format!("{} legs", s.legs.len())));
        }
        Ok(s)
    }

    /// Allows fewer than three legs (the result is then a path).
    pub fn relaxed(legs: &[usize]) -> Result<Self> {
        if legs.iter().any(|&l| l == 0) {
            return Err(Error::InvalidParameter("leg lengths must be positive".into()));
        }
        let mut legs = legs.to_vec();
        legs.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Spider { legs })
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn is_true_spider(&self) -> bool {
        self.legs.len() >= 3
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.legs.iter().sum::<usize>()
    }

    /// Torso is 0; each leg occupies consecutive indices starting next to the torso.
    pub fn graph(&self) -> Result<Graph> {
        let mut g = Graph::empty(self.vertex_count())?;
        let mut next = 1;
        for &len in &self.legs {
            let mut prev = 0;
            for _ in 0..len {
                g.add_edge(prev, next)?;
                prev = next;
                next += 1;
            }
        }
        Ok(g)
    }
}

/// Caterpillar with spine `0..=s`; `f[i]` leaves hang off spine vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caterpillar {
    f: Vec<usize>,
}

impl Caterpillar {
    pub fn new(f: &[usize]) -> Result<Self> {
        if f.len() < 2 {
            return Err(Error::InvalidParameter("caterpillar spine needs s >= 1".into()));
        }
        if f[0] == 0 || f[f.len() - 1] == 0 {
            return Err(Error::InvalidParameter("end spine vertices need a leaf".into()));
        }
        Ok(Caterpillar { f: f.to_vec() })
    }

    pub fn leaves(&self) -> &[usize] {
        &self.f
    }

    /// Index of the last spine vertex.
    pub fn s(&self) -> usize {
        self.f.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.f.len() + self.f.iter().sum::<usize>()
    }

    pub fn spine_degrees(&self) -> Vec<usize> {
        let s = self.s();
        self.f
            .iter()
            .enumerate()
            .map(|(i, &fi)| if i == 0 || i == s { fi + 1 } else { fi + 2 })
            .collect()
    }

    pub fn graph(&self) -> Result<Graph> {
        let mut g = Graph::empty(self.vertex_count())?;
        for i in 0..self.s() {
            g.add_edge(i, i + 1)?;
        }
        let mut next = self.f.len();
        for (i, &fi) in self.f.iter().enumerate() {
            for _ in 0..fi {
                g.add_edge(i, next)?;
                next += 1;
            }
        }
        Ok(g)
    }
}

/// A parsed family descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `Kn:n`, the complete graph.
    Complete(usize),
    /// `K:a,b,...`, complete multipartite with the given part sizes.
    Multipartite(Vec<usize>),
    /// `P:n`, path on n vertices.
    Path(usize),
    /// `C:n`, cycle on n vertices.
    Cycle(usize),
    /// `S:n`, star on n vertices with centre 0.
    Star(usize),
    /// `Sn1:n`, star on n vertices with a loop at the centre.
    StarLoop(usize),
    /// `Kn1:n`, complete graph with a loop on vertex 0.
    CompleteLoop(usize),
    /// `E:n`, edgeless.
    Edgeless(usize),
    /// `Eloop:n`, n isolated looped vertices.
    EdgelessLoops(usize),
    /// `Ploop:n`, path with a loop on vertex 0.
    PathLoop(usize),
    /// `Kminus:n,k`, complete graph minus k disjoint edges.
    CompleteMinusMatching(usize, usize),
    /// `M:n,k`, k disjoint edges plus isolated vertices, n vertices in total.
    Matching(usize, usize),
    Spider(Spider),
    /// `cat:f0,...,fs`.
    Caterpillar(Caterpillar),
    Union(Vec<Family>),
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
        .collect()
}

fn single(params: &[usize], name: &str) -> Result<usize> {
    match params {
        [n] => Ok(*n),
        _ => Err(Error::Parse(format!("{name} takes one parameter"))),
    }
}

fn pair(params: &[usize], name: &str) -> Result<(usize, usize)> {
    match params {
        [a, b] => Ok((*a, *b)),
        _ => Err(Error::Parse(format!("{name} takes two parameters"))),
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let pieces: Vec<&str> = s.split('+').collect();
        if pieces.len() > 1 {
            return pieces.iter().map(|p| p.parse()).collect::<Result<_>>().map(Family::Union);
        }
        let (name, rest) =
            s.trim().split_once(':').ok_or_else(|| Error::Parse(format!("missing ':' in {s:?}")))?;
        let p = parse_list(rest)?;
        Ok(match name {
            "Kn" => Family::Complete(single(&p, name)?),
            "K" => Family::Multipartite(p),
            "P" => Family::Path(single(&p, name)?),
            "C" => Family::Cycle(single(&p, name)?),
            "S" => Family::Star(single(&p, name)?),
            "Sn1" => Family::StarLoop(single(&p, name)?),
            "Kn1" => Family::CompleteLoop(single(&p, name)?),
            "E" => Family::Edgeless(single(&p, name)?),
            "Eloop" => Family::EdgelessLoops(single(&p, name)?),
            "Ploop" => Family::PathLoop(single(&p, name)?),
            "Kminus" => {
                let (n, k) = pair(&p, name)?;
                Family::CompleteMinusMatching(n, k)
            }
            "M" => {
                let (n, k) = pair(&p, name)?;
                Family::Matching(n, k)
            }
            "spider" => Family::Spider(Spider::new(&p)?),
            "cat" => Family::Caterpillar(Caterpillar::new(&p)?),
            _ => return Err(Error::Parse(format!("unknown family {name:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            Family::Complete(n) => write!(f, "Kn:{n}"),
            Family::Multipartite(p) => write!(f, "K:{}", list(p)),
            Family::Path(n) => write!(f, "P:{n}"),
            Family::Cycle(n) => write!(f, "C:{n}"),
            Family::Star(n) => write!(f, "S:{n}"),
            Family::StarLoop(n) => write!(f, "Sn1:{n}"),
            Family::CompleteLoop(n) => write!(f, "Kn1:{n}"),
            Family::Edgeless(n) => write!(f, "E:{n}"),
            Family::EdgelessLoops(n) => write!(f, "Eloop:{n}"),
            Family::PathLoop(n) => write!(f, "Ploop:{n}"),
            Family::CompleteMinusMatching(n, k) => write!(f, "Kminus:{n},{k}"),
            Family::Matching(n, k) => write!(f, "M:{n},{k}"),
            Family::Spider(s) => write!(f, "spider:{}", list(s.legs())),
            Family::Caterpillar(c) => write!(f, "cat:{}", list(c.leaves())),
            Family::Union(parts) => {
                let s: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", s.join("+"))
            }
        }
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!("{what} needs at least one vertex")))
    } else {
        Ok(())
    }
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Complete(n) => Family::Multipartite(vec![1; *n]).build(),
            Family::Multipartite(parts) => {
                if parts.iter().any(|&p| p == 0) {
                    return Err(Error::InvalidParameter("parts must be positive".into()));
                }
                let n: usize = parts.iter().sum();
                let mut g = Graph::empty(n)?;
                let mut part_of = Vec::with_capacity(n);
                for (i, &p) in parts.iter().enumerate() {
                    part_of.extend(std::iter::repeat(i).take(p));
                }
                for u in 0..n {
                    for v in u + 1..n {
                        if part_of[u] != part_of[v] {
                            g.add_edge(u, v)?;
                        }
                    }
                }
                Ok(g)
            }
            Family::Path(n) => {
                positive(*n, "path")?;
                let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(*n, &edges)
            }
            Family::Cycle(n) => {
                if *n < 3 {
                    return Err(Error::InvalidParameter("cycle needs at least 3 vertices".into()));
                }
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(*n, &edges)
            }
            Family::Star(n) => {
                positive(*n, "star")?;
                let edges: Vec<_> = (1..*n).map(|i| (0, i)).collect();
                Graph::from_edges(*n, &edges)
            }
            Family::StarLoop(n) => {
                let mut g = Family::Star(*n).build()?;
                g.add_edge(0, 0)?;
                Ok(g)
            }
            Family::CompleteLoop(n) => {
                positive(*n, "complete graph")?;
                let mut g = Family::Complete(*n).build()?;
                g.add_edge(0, 0)?;
                Ok(g)
            }
            Family::Edgeless(n) => Graph::empty(*n),
            Family::EdgelessLoops(n) => {
                let edges: Vec<_> = (0..*n).map(|i| (i, i)).collect();
                Graph::from_edges(*n, &edges)
            }
            Family::PathLoop(n) => {
                let mut g = Family::Path(*n).build()?;
                g.add_edge(0, 0)?;
                Ok(g)
            }
            Family::CompleteMinusMatching(n, k) => {
                if 2 * k > *n {
                    return Err(Error::InvalidParameter(format!("cannot remove {k} disjoint edges from K{n}")));
                }
                let g = Family::Complete(*n).build()?;
                let mut adj = g.masks().to_vec();
                for i in 0..*k {
                    adj[2 * i] &= !(1u64 << (2 * i + 1));
                    adj[2 * i + 1] &= !(1u64 << (2 * i));
                }
                Graph::from_masks(adj)
            }
            Family::Matching(n, k) => {
                if 2 * k > *n {
                    return Err(Error::InvalidParameter(format!("{k} disjoint edges need {} vertices", 2 * k)));
                }
                let edges: Vec<_> = (0..*k).map(|i| (2 * i, 2 * i + 1)).collect();
                Graph::from_edges(*n, &edges)
            }
            Family::Spider(s) => s.graph(),
            Family::Caterpillar(c) => c.graph(),
            Family::Union(parts) => {
                let mut g = Graph::empty(0)?;
                for p in parts {
                    g = g.disjoint_union(&p.build()?)?;
                }
                Ok(g)
            }
        }
    }
}

/// Parses and builds a descriptor in one step.
pub fn build_family(descriptor: &str) -> Result<Graph> {
    descriptor.parse::<Family>()?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_has_centre_zero() {
        let g = build_family("S:4").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 3)]);
        assert!(!g.has_loops());
    }

    #[test]
    fn looped_complete_graph() {
        let g = build_family("Kn1:2").unwrap();
        assert_eq!(g.edges(), vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn twelve_vertex_spider() {
        let g = build_family("spider:3,2,1,1,1,1,1,1").unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(g.degree(0), 8);
        assert!(g.is_tree());
    }

    #[test]
    fn caterpillar_layout() {
        let c = Caterpillar::new(&[1, 0, 1]).unwrap();
        assert_eq!(c.spine_degrees(), vec![2, 2, 2]);
        let g = c.graph().unwrap();
        assert!(g.is_tree());
        assert_eq!(g.n(), 5);
        assert!(Caterpillar::new(&[0, 1]).is_err());
    }

    #[test]
    fn descriptors_round_trip() {
        for d in ["K:2,3", "Kn:4", "spider:2,1,1", "cat:2,0,1", "P:3+Kn:1", "Kminus:5,2", "M:8,1"] {
            let f: Family = d.parse().unwrap();
            assert_eq!(f.to_string(), d);
        }
        assert!("spider:2,1".parse::<Family>().is_err());
        assert!("Q:3".parse::<Family>().is_err());
    }

    #[test]
    fn complete_minus_matching() {
        let g = build_family("Kminus:5,2").unwrap();
        assert_eq!(g.edge_count(), 8);
    }
}
