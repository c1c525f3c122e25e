use crate::graph::{reach_word, Graph};

use super::Certificate;

/// Cheap structural proof that `g` has no HIST, if one of the two patterns
/// applies: a cut vertex of degree 2, or a path `s0 s1 s2 s3 s4` whose three
/// interior vertices have degree 2 and whose ends have degree at least 3.
///
/// `None` means neither pattern is present, not that a HIST exists. Graphs
/// with fewer than 3 vertices or that are disconnected never get a
/// certificate.
pub fn no_hist_certificate(g: &Graph) -> Option<Certificate> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    let deg2: Vec<usize> = (0..n).filter(|&v| g.deg(v) == 2).collect();
    if deg2.is_empty() || !g.is_connected() {
        return None;
    }

    let cut = match g.word_rows() {
        Some(rows) => {
            let all = u64::MAX >> (64 - n);
            deg2.iter().copied().find(|&v| {
                let alive = all & !(1 << v);
                reach_word(rows, alive, alive.trailing_zeros() as usize) != alive
            })
        }
        None => {
            let cuts = g.cut_vertices().expect("connectivity checked");
            deg2.iter().copied().find(|&v| cuts.contains(v))
        }
    };
    if let Some(v) = cut {
        return Some(Certificate::CutVertexDeg2(v));
    }

    for &s2 in &deg2 {
        let mut nb = g.neighbors(s2);
        let (s1, s3) = (nb.next().unwrap(), nb.next().unwrap());
        if g.deg(s1) != 2 || g.deg(s3) != 2 {
            continue;
        }
        let other = |v: usize| g.neighbors(v).find(|&w| w != s2).unwrap();
        let (s0, s4) = (other(s1), other(s3));
        if s0 != s4 && g.deg(s0) >= 3 && g.deg(s4) >= 3 {
            return Some(Certificate::P5Pattern([s0, s1, s2, s3, s4]));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn extremal_families_carry_certificates() {
        let l7 = Family::L(7).build().unwrap();
        assert_eq!(no_hist_certificate(&l7), Some(Certificate::CutVertexDeg2(1)));
        let b8 = Family::B(8).build().unwrap();
        assert_eq!(
            no_hist_certificate(&b8),
            Some(Certificate::P5Pattern([3, 0, 1, 2, 4]))
        );
        assert_eq!(no_hist_certificate(&Family::Complete(5).build().unwrap()), None);
    }

    #[test]
    fn certificate_contents_are_sound() {
        for n in 6..=12 {
            let b = Family::B(n).build().unwrap();
            let Some(Certificate::P5Pattern(s)) = no_hist_certificate(&b) else {
                panic!("B_{n} lacks a P5 certificate");
            };
            for w in s.windows(2) {
                assert!(b.has_edge(w[0], w[1]));
            }
            assert!(s[1..4].iter().all(|&v| b.deg(v) == 2));
            assert!(b.deg(s[0]) >= 3 && b.deg(s[4]) >= 3);
        }
    }

    #[test]
    fn cycles_and_tiny_graphs() {
        // every vertex of C_6 has degree 2, so no P5 end has degree >= 3
        assert_eq!(no_hist_certificate(&Family::Cycle(6).build().unwrap()), None);
        assert_eq!(no_hist_certificate(&Family::Complete(2).build().unwrap()), None);
        assert_eq!(
            no_hist_certificate(&Family::Path(3).build().unwrap()),
            Some(Certificate::CutVertexDeg2(1))
        );
    }
}
