use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, VertexSet};

/// Named graph families with their canonical labelled constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// K_n.
    Complete(usize),
    /// P_n on `n` vertices, `0 - 1 - ... - (n-1)`.
    Path(usize),
    /// C_n, the path closed by the edge `(n-1, 0)`.
    Cycle(usize),
    /// K_{p,q} with parts `0..p` and `p..p+q`.
    CompleteBipartite(usize, usize),
    /// L_n: pendant path `0 - 1` attached at vertex 2 of the clique on `2..n`.
    L(usize),
    /// B_n: path `0 - 1 - 2` with ends attached to clique vertices 3 and 4;
    /// the clique is `3..n`.
    B(usize),
    /// K_{1,k}, centre 0.
    Star(usize),
}

impl Family {
    pub fn order(&self) -> usize {
        match *self {
            Family::Complete(n) | Family::Path(n) | Family::Cycle(n) => n,
            Family::L(n) | Family::B(n) => n,
            Family::CompleteBipartite(p, q) => p + q,
            Family::Star(k) => k + 1,
        }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        let invalid = |msg: &str| Err(GraphError::InvalidFamily(format!("{self}: {msg}")));
        match *self {
            Family::Complete(n) => {
                if n == 0 {
                    return invalid("needs n >= 1");
                }
                let mut g = Graph::empty(n);
                add_clique(&mut g, 0..n);
                Ok(g)
            }
            Family::Path(n) => {
                if n == 0 {
                    return invalid("needs n >= 1");
                }
                let mut g = Graph::empty(n);
                for v in 1..n {
                    g.add_edge(v - 1, v)?;
                }
                Ok(g)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return invalid("needs n >= 3");
                }
                let mut g = Family::Path(n).build()?;
                g.add_edge(n - 1, 0)?;
                Ok(g)
            }
            Family::CompleteBipartite(p, q) => {
                if p == 0 || q == 0 {
                    return invalid("needs p, q >= 1");
                }
                let mut g = Graph::empty(p + q);
                for a in 0..p {
                    for b in p..p + q {
                        g.add_edge(a, b)?;
                    }
                }
                Ok(g)
            }
            Family::Star(k) => {
                if k == 0 {
                    return invalid("needs k >= 1");
                }
                Family::CompleteBipartite(1, k).build()
            }
            Family::L(n) => {
                if n < 4 {
                    return invalid("needs n >= 4");
                }
                let mut g = Graph::empty(n);
                g.add_edge(0, 1)?;
                g.add_edge(1, 2)?;
                add_clique(&mut g, 2..n);
                Ok(g)
            }
            Family::B(n) => {
                if n < 6 {
                    return invalid("needs n >= 6");
                }
                let mut g = Graph::empty(n);
                g.add_edge(0, 1)?;
                g.add_edge(1, 2)?;
                g.add_edge(0, 3)?;
                g.add_edge(2, 4)?;
                add_clique(&mut g, 3..n);
                Ok(g)
            }
        }
    }
}

fn add_clique(g: &mut Graph, vertices: std::ops::Range<usize>) {
    for u in vertices.clone() {
        for v in u + 1..vertices.end {
            g.add_edge(u, v).expect("clique vertices are in range");
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Complete(n) => write!(f, "K:{n}"),
            Family::Path(n) => write!(f, "P:{n}"),
            Family::Cycle(n) => write!(f, "C:{n}"),
            Family::CompleteBipartite(p, q) => write!(f, "Kpq:{p}:{q}"),
            Family::L(n) => write!(f, "L:{n}"),
            Family::B(n) => write!(f, "B:{n}"),
            Family::Star(k) => write!(f, "star:{k}"),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Parses `NAME:params`, e.g. `K:5`, `Kpq:2:8`, `star:6`, `L:7`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::InvalidFamily(s.to_string());
        let mut parts = s.split(':');
        let name = parts.next().ok_or_else(bad)?;
        let params: Vec<usize> = parts
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let one = || match params.as_slice() {
            [n] => Ok(*n),
            _ => Err(bad()),
        };
        match name {
            "K" | "complete" => Ok(Family::Complete(one()?)),
            "P" | "path" => Ok(Family::Path(one()?)),
            "C" | "cycle" => Ok(Family::Cycle(one()?)),
            "L" => Ok(Family::L(one()?)),
            "B" => Ok(Family::B(one()?)),
            "star" => Ok(Family::Star(one()?)),
            "Kpq" | "complete_bipartite" => match params.as_slice() {
                [p, q] => Ok(Family::CompleteBipartite(*p, *q)),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }
}

fn binomial2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// True iff `g` is isomorphic to L_n of its own order.
///
/// L_n is rigid enough that a structural fingerprint decides isomorphism:
/// a degree-1 vertex `p` whose neighbour `q` has degree 2, with the remaining
/// `n - 2` vertices (which include `q`'s other neighbour) forming a clique,
/// and exactly `C(n-2, 2) + 2` edges.
pub fn matches_ln(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 || g.edge_count() != binomial2(n - 2) + 2 {
        return false;
    }
    for p in (0..n).filter(|&p| g.deg(p) == 1) {
        let q = g.neighbors(p).next().expect("degree-1 vertex has a neighbour");
        if g.deg(q) != 2 {
            continue;
        }
        let mut rest = VertexSet::full(n);
        rest.remove(p);
        rest.remove(q);
        if g.is_clique(&rest) {
            return true;
        }
    }
    false
}

/// True iff `g` is isomorphic to B_n of its own order.
///
/// Fingerprint: a degree-2 vertex whose two neighbours also have degree 2 and
/// are non-adjacent, whose outer neighbours are distinct, with the other
/// `n - 3` vertices forming a clique and exactly `C(n-3, 2) + 4` edges.
pub fn matches_bn(g: &Graph) -> bool {
    let n = g.order();
    if n < 6 || g.edge_count() != binomial2(n - 3) + 4 {
        return false;
    }
    for mid in (0..n).filter(|&v| g.deg(v) == 2) {
        let mut nb = g.neighbors(mid);
        let (a, b) = (nb.next().unwrap(), nb.next().unwrap());
        if g.deg(a) != 2 || g.deg(b) != 2 || g.has_edge(a, b) {
            continue;
        }
        let outer = |end: usize| g.neighbors(end).find(|&w| w != mid).unwrap();
        if outer(a) == outer(b) {
            continue;
        }
        let mut rest = VertexSet::full(n);
        for v in [a, mid, b] {
            rest.remove(v);
        }
        if g.is_clique(&rest) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_counts_of_constructions() {
        assert_eq!(Family::L(7).build().unwrap().edge_count(), 12);
        assert_eq!(Family::B(8).build().unwrap().edge_count(), 14);
        assert_eq!(Family::Complete(4).build().unwrap().edge_count(), 6);
        assert_eq!(Family::CompleteBipartite(2, 8).build().unwrap().edge_count(), 16);
        assert_eq!(Family::Star(6).build().unwrap().order(), 7);
    }

    #[test]
    fn invalid_parameters() {
        for f in [
            Family::L(3),
            Family::B(5),
            Family::CompleteBipartite(0, 3),
            Family::Cycle(2),
            Family::Complete(0),
        ] {
            assert!(matches!(f.build(), Err(GraphError::InvalidFamily(_))), "{f}");
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for f in [
            Family::Complete(5),
            Family::CompleteBipartite(2, 8),
            Family::Star(6),
            Family::L(7),
            Family::B(8),
            Family::Path(4),
            Family::Cycle(5),
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("Q:3".parse::<Family>().is_err());
        assert!("K:x".parse::<Family>().is_err());
        assert!("Kpq:3".parse::<Family>().is_err());
    }

    #[test]
    fn fingerprints_on_families() {
        for n in 4..=12 {
            assert!(matches_ln(&Family::L(n).build().unwrap()), "L_{n}");
            assert!(!matches_ln(&Family::Complete(n).build().unwrap()));
        }
        for n in 6..=12 {
            let b = Family::B(n).build().unwrap();
            assert!(matches_bn(&b), "B_{n}");
            assert!(!matches_ln(&b));
            assert!(!matches_bn(&Family::L(n).build().unwrap()));
        }
    }

    #[test]
    fn fingerprint_is_relabelling_invariant() {
        let l7 = Family::L(7).build().unwrap();
        let perm = [4, 6, 0, 2, 5, 1, 3];
        assert!(matches_ln(&l7.relabel(&perm).unwrap()));
        let b8 = Family::B(8).build().unwrap();
        let perm = [7, 3, 5, 0, 6, 2, 1, 4];
        assert!(matches_bn(&b8.relabel(&perm).unwrap()));
    }

    #[test]
    fn perturbed_b8_is_rejected() {
        let b8 = Family::B(8).build().unwrap();
        assert!(!matches_bn(&b8.without_edge(5, 6).unwrap()));
        assert!(!matches_bn(&b8.without_edge(3, 4).unwrap()));
    }
}
