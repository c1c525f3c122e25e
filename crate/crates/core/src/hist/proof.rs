use std::cmp::Reverse;

use crate::graph::{bits, matches_bn, matches_ln, Graph};
use crate::spectral::ExtremalFamily;

use super::{is_hist, Edge, SearchError};

/// Which extremal statement's case analysis to replay.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ProofTheorem {
    /// Connected graphs, `n >= 7`, extremal graph L_n.
    #[serde(rename = "thm1")]
    OneConnected,
    /// 2-connected graphs, `n >= 8`, extremal graph B_n.
    #[serde(rename = "thm2")]
    TwoConnected,
}

impl ProofTheorem {
    pub fn min_order(self) -> usize {
        self.family().min_order()
    }

    pub fn family(self) -> ExtremalFamily {
        match self {
            ProofTheorem::OneConnected => ExtremalFamily::L,
            ProofTheorem::TwoConnected => ExtremalFamily::B,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum TraceOutcome {
    /// An explicit HIST from the matching construction.
    Hist(Vec<Edge>),
    /// The graph is the extremal graph itself.
    Extremal(ExtremalFamily),
    /// The case analysis discharges this configuration by counting, not by a
    /// construction.
    OutsideProofCases(String),
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ProofTrace {
    pub case_label: String,
    /// Role names from the case analysis, in the order they were assigned.
    pub vertex_roles: Vec<(String, usize)>,
    pub outcome: TraceOutcome,
}

/// Replays the case analysis for a graph with a large maximum degree.
///
/// The hub is a maximum-degree vertex, lowest id on ties. Requires `n <= 64`,
/// `n >= theorem.min_order()`, connectivity (2-connectivity for
/// [`ProofTheorem::TwoConnected`]) and `Δ >= n - 2` (resp. `Δ >= n - 3`).
/// Every emitted tree is re-validated.
pub fn proof_guided_hist(g: &Graph, theorem: ProofTheorem) -> Result<ProofTrace, SearchError> {
    let n = g.order();
    let rows = g.word_rows().ok_or(SearchError::TooLarge(n))?;
    if n < theorem.min_order() {
        return Err(SearchError::Precondition(format!(
            "order {n} is below {}",
            theorem.min_order()
        )));
    }
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    if theorem == ProofTheorem::TwoConnected && !g.is_2_connected().unwrap_or(false) {
        return Err(SearchError::Precondition("graph is not 2-connected".into()));
    }
    let hub = (0..n)
        .max_by_key(|&v| (rows[v].count_ones(), Reverse(v)))
        .expect("order checked");
    let ctx = Ctx {
        g,
        n,
        rows,
        all: u64::MAX >> (64 - n),
    };
    let trace = match theorem {
        ProofTheorem::OneConnected => ctx.one_connected(hub)?,
        ProofTheorem::TwoConnected => ctx.two_connected(hub)?,
    };
    if let TraceOutcome::Hist(t) = &trace.outcome {
        if !is_hist(g, t) {
            return Err(SearchError::Invariant(format!(
                "{} produced an invalid tree {t:?}",
                trace.case_label
            )));
        }
    }
    Ok(trace)
}

struct Ctx<'a> {
    g: &'a Graph,
    n: usize,
    rows: &'a [u64],
    all: u64,
}

fn first(mask: u64) -> Option<usize> {
    (mask != 0).then(|| mask.trailing_zeros() as usize)
}

fn bit(v: usize) -> u64 {
    1 << v
}

fn trace(label: &str, roles: &[(&str, usize)], outcome: TraceOutcome) -> ProofTrace {
    let mut vertex_roles: Vec<(String, usize)> = Vec::with_capacity(roles.len());
    for &(name, v) in roles {
        if !vertex_roles.iter().any(|(r, _)| r == name) {
            vertex_roles.push((name.to_string(), v));
        }
    }
    ProofTrace {
        case_label: label.to_string(),
        vertex_roles,
        outcome,
    }
}

fn outside(label: &str, roles: &[(&str, usize)], why: &str) -> ProofTrace {
    trace(label, roles, TraceOutcome::OutsideProofCases(why.to_string()))
}

impl Ctx<'_> {
    fn deg(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Edges from `hub` to its neighbours except `skip`, plus `extra`.
    fn star(&self, hub: usize, skip: &[usize], extra: &[Edge]) -> TraceOutcome {
        let mut t: Vec<Edge> = bits(self.rows[hub])
            .filter(|w| !skip.contains(w))
            .map(|w| (hub.min(w), hub.max(w)))
            .collect();
        t.extend(extra.iter().map(|&(a, b)| (a.min(b), a.max(b))));
        TraceOutcome::Hist(t)
    }

    /// Lowest edge inside `mask`.
    fn edge_within(&self, mask: u64) -> Option<Edge> {
        bits(mask).find_map(|a| first(self.rows[a] & mask & !((bit(a) << 1) - 1)).map(|b| (a, b)))
    }

    fn cross_edges(&self, a: u64, b: u64) -> Vec<Edge> {
        bits(a)
            .flat_map(|x| bits(self.rows[x] & b).map(move |y| (x, y)))
            .collect()
    }

    fn one_connected(&self, x: usize) -> Result<ProofTrace, SearchError> {
        let d = self.deg(x);
        if d == self.n - 1 {
            return Ok(trace("Thm1/Δ=n−1", &[("x", x)], self.star(x, &[], &[])));
        }
        if d != self.n - 2 {
            return Err(SearchError::Precondition(format!("Δ = {d} is below n−2")));
        }
        let nx = self.rows[x];
        let y = first(self.all & !nx & !bit(x)).expect("one non-neighbour");
        for xi in bits(self.rows[y]) {
            if let Some(xj) = first(self.rows[xi] & nx) {
                let tree = self.star(x, &[xj], &[(xi, y), (xi, xj)]);
                let roles = [("x", x), ("y", y), ("x_i", xi), ("x_j", xj)];
                return Ok(trace("Thm1/Δ=n−2", &roles, tree));
            }
        }
        let a = self.rows[y].count_ones();
        if a >= 2 {
            return Ok(outside("Thm1/Δ=n−2/Fact1", &[("x", x), ("y", y)], "a ≥ 2"));
        }
        let x1 = first(self.rows[y]).expect("connected");
        let roles = [("x", x), ("y", y), ("x_1", x1)];
        Ok(if matches_ln(self.g) {
            trace("Thm1/Δ=n−2/Fact1", &roles, TraceOutcome::Extremal(ExtremalFamily::L))
        } else {
            outside("Thm1/Δ=n−2/Fact1", &roles, "a = 1 on a proper subgraph of L_n")
        })
    }

    fn two_connected(&self, u: usize) -> Result<ProofTrace, SearchError> {
        let d = self.deg(u);
        let n = self.n;
        if d == n - 1 {
            return Ok(trace("Thm2/Δ=n−1", &[("u", u)], self.star(u, &[], &[])));
        }
        if d == n - 2 {
            return Ok(self.case1(u));
        }
        if d != n - 3 {
            return Err(SearchError::Precondition(format!("Δ = {d} is below n−3")));
        }
        let mut outer = bits(self.all & !self.rows[u] & !bit(u));
        let (v1, v2) = (outer.next().unwrap(), outer.next().unwrap());
        if let Some(u1) = first(self.rows[v1] & self.rows[v2]) {
            let tree = self.star(u, &[], &[(u1, v1), (u1, v2)]);
            let roles = [("u", u), ("v_1", v1), ("v_2", v2), ("u_1", u1)];
            return Ok(trace("Thm2/Case2", &roles, tree));
        }
        Ok(if self.rows[v1] & bit(v2) != 0 {
            self.case2_1(u, v1, v2)
        } else {
            self.case2_2(u, v1, v2)
        })
    }

    fn case1(&self, u: usize) -> ProofTrace {
        let nu = self.rows[u];
        let v = first(self.all & !nu & !bit(u)).expect("one non-neighbour");
        let nv = self.rows[v];
        if let Some((ur, us)) = self.edge_within(nv) {
            let tree = self.star(u, &[us], &[(ur, v), (ur, us)]);
            let roles = [("u", u), ("v", v), ("u_r", ur), ("u_s", us)];
            return trace("Thm2/Case1", &roles, tree);
        }
        if nv == nu {
            return outside("Thm2/Case1/Fact2", &[("u", u), ("v", v)], "G ≅ K_{2,n−2}");
        }
        match self.cross_edges(nv, nu & !nv).first() {
            Some(&(ui, uj)) => {
                let tree = self.star(u, &[uj], &[(v, ui), (ui, uj)]);
                let roles = [("u", u), ("v", v), ("u_i", ui), ("u_j", uj)];
                trace("Thm2/Case1/Fact2", &roles, tree)
            }
            None => outside("Thm2/Case1/Fact2", &[("u", u), ("v", v)], "G − u is disconnected"),
        }
    }

    fn case2_1(&self, u: usize, v1: usize, v2: usize) -> ProofTrace {
        let nu = self.rows[u];
        let x1 = self.rows[v1] & !bit(v2);
        let x2 = self.rows[v2] & !bit(v1);
        let x = nu & !x1 & !x2;
        let base = [("u", u), ("v_1", v1), ("v_2", v2)];
        let with = |extra: &[(&'static str, usize)]| -> Vec<(&'static str, usize)> {
            base.iter().chain(extra).copied().collect()
        };
        if x == 0 {
            return self.fact3(u, v1, v2, x1, x2);
        }

        // an attaching edge from a side of size >= 2 into X
        for (side, vs, vo) in [(x2, v2, v1), (x1, v1, v2)] {
            if side.count_ones() < 2 {
                continue;
            }
            if let Some(&(ud, uj)) = self.cross_edges(side, x).first() {
                let ud1 = first(side & !bit(ud)).unwrap();
                let tree = self.star(u, &[ud1, uj], &[(ud, uj), (ud1, vs), (ud, vs), (vo, vs)]);
                let roles = [("u", u), ("v_1", vo), ("v_2", vs), ("u_d", ud), ("u_{d−1}", ud1), ("u_j", uj)];
                return trace("Thm2/Case2.1/Fig3", &roles, tree);
            }
        }

        // every attaching edge starts in a singleton side
        let mut saw_degree_two = false;
        for (s1, s2, w1, w2) in [(x1, x2, v1, v2), (x2, x1, v2, v1)] {
            if s2.count_ones() != 1 {
                continue;
            }
            let ud = first(s2).unwrap();
            let attach = self.rows[ud] & x;
            if attach == 0 {
                continue;
            }
            let c = s1.count_ones();
            let roles_base = [("u", u), ("v_1", w1), ("v_2", w2), ("u_d", ud)];
            let mut any_high = false;
            for u1 in bits(s1) {
                let extra = self.rows[u1] & !bit(u) & !bit(w1) & !bit(w2);
                if extra == 0 {
                    continue;
                }
                any_high = true;
                if c >= 2 {
                    if let Some(up) = first(extra & !s1) {
                        let uc = first(s1 & !bit(u1)).unwrap();
                        let tree = self.star(u, &[uc, up], &[(u1, up), (u1, w1), (w1, w2), (w1, uc)]);
                        let roles: Vec<_> = roles_base
                            .iter()
                            .copied()
                            .chain([("u_1", u1), ("u_p", up), ("u_c", uc)])
                            .collect();
                        return trace("Thm2/Case2.1/Fig4a", &roles, tree);
                    }
                }
                for up in bits(extra) {
                    if let Some(uj) = first(attach & !bit(up)) {
                        let tree = self.star(u, &[up, uj], &[(u1, up), (u1, w1), (ud, w2), (ud, uj)]);
                        let roles: Vec<_> = roles_base
                            .iter()
                            .copied()
                            .chain([("u_1", u1), ("u_p", up), ("u_j", uj)])
                            .collect();
                        return trace("Thm2/Case2.1/Fig4b", &roles, tree);
                    }
                }
            }
            if !any_high {
                saw_degree_two = true;
                if c >= 2 {
                    return outside("Thm2/Case2.1/Fact4", &roles_base, "c ≥ 2 with d(u_i) = 2 on X_1");
                }
                if matches_bn(self.g) {
                    return trace("Thm2/Case2.1/Fact4", &roles_base, TraceOutcome::Extremal(ExtremalFamily::B));
                }
            }
        }
        if saw_degree_two {
            return outside("Thm2/Case2.1/Fact4", &with(&[]), "c = 1 on a proper subgraph of B_n");
        }
        outside(
            "Thm2/Case2.1/Fig4",
            &with(&[]),
            "X_1 and X_2 attach to X only through one shared vertex",
        )
    }

    fn fact3(&self, u: usize, v1: usize, v2: usize, x1: u64, x2: u64) -> ProofTrace {
        let base = [("u", u), ("v_1", v1), ("v_2", v2)];
        let cross = self.cross_edges(x1, x2);
        if let Some(&(a, b)) = cross.first() {
            if x1.count_ones() == 1 {
                let u3 = first(x2 & !bit(b)).expect("n >= 8 leaves X_2 at least two vertices");
                let tree = self.star(u, &[a, u3], &[(a, b), (b, v2), (v1, v2), (v2, u3)]);
                let roles = [base[0], base[1], base[2], ("u_1", a), ("u_2", b), ("u_3", u3)];
                return trace("Thm2/Case2.1/Fact3/Fig2a", &roles, tree);
            }
            let u1 = first(x1 & !bit(a)).unwrap();
            let tree = self.star(u, &[u1, b], &[(u1, v1), (a, v1), (a, b), (v1, v2)]);
            let roles = [base[0], base[1], base[2], ("u_1", u1), ("u_c", a), ("u_{c+1}", b)];
            return trace("Thm2/Case2.1/Fact3/Fig2b", &roles, tree);
        }
        match (self.edge_within(x1), self.edge_within(x2)) {
            (None, None) => outside("Thm2/Case2.1/Fact3", &base, "N(u) is independent"),
            (Some((u1, u2)), Some((ud1, ud))) => {
                let tree = self.star(u, &[u2, ud1], &[(u1, u2), (u1, v1), (ud1, ud), (ud, v2)]);
                let roles = [
                    base[0],
                    base[1],
                    base[2],
                    ("u_1", u1),
                    ("u_2", u2),
                    ("u_{d−1}", ud1),
                    ("u_d", ud),
                ];
                trace("Thm2/Case2.1/Fact3/Fig2c", &roles, tree)
            }
            (e1, e2) => {
                let ((u1, u2), side, w1, w2) = match (e1, e2) {
                    (Some(e), None) => (e, x1, v1, v2),
                    (None, Some(e)) => (e, x2, v2, v1),
                    _ => unreachable!(),
                };
                let roles = [("u", u), ("v_1", w1), ("v_2", w2), ("u_1", u1), ("u_2", u2)];
                if side.count_ones() == 2 {
                    return outside("Thm2/Case2.1/Fact3", &roles, "|X_1| = 2 with X_2 independent");
                }
                let uc = first(side & !bit(u1) & !bit(u2)).unwrap();
                let tree = self.star(u, &[u2, uc], &[(u1, u2), (u1, w1), (w1, uc), (w1, w2)]);
                let roles = [roles[0], roles[1], roles[2], roles[3], roles[4], ("u_c", uc)];
                trace("Thm2/Case2.1/Fact3/Fig2d", &roles, tree)
            }
        }
    }

    fn case2_2(&self, u: usize, v1: usize, v2: usize) -> ProofTrace {
        let nu = self.rows[u];
        let (n1, n2) = (self.rows[v1], self.rows[v2]);
        let y = nu & !n1 & !n2;
        let base = [("u", u), ("v_1", v1), ("v_2", v2)];
        let cross = self.cross_edges(n1, n2);

        if y == 0 {
            if cross.len() >= 2 {
                let (ui, uk) = cross[0];
                let (uj, ul) = *cross[1..]
                    .iter()
                    .find(|&&(a, b)| a != ui || b != uk)
                    .unwrap();
                let (label, tree) = if ui != uj && uk != ul {
                    ("Thm2/Case2.2/Fact5/Fig5a", self.star(u, &[ui, ul], &[(uj, v1), (uj, ul), (ui, uk), (uk, v2)]))
                } else if ui == uj {
                    ("Thm2/Case2.2/Fact5/Fig5b", self.star(u, &[uj, ul], &[(uj, v1), (uj, ul), (uj, uk), (uk, v2)]))
                } else {
                    ("Thm2/Case2.2/Fact5/Fig5c", self.star(u, &[uj, ul], &[(ui, v1), (ui, ul), (uj, ul), (ul, v2)]))
                };
                let roles = [base[0], base[1], base[2], ("u_i", ui), ("u_j", uj), ("u_k", uk), ("u_l", ul)];
                return trace(label, &roles, tree);
            }
            let Some(&(a, b)) = cross.first() else {
                return outside("Thm2/Case2.2/Fact5", &base, "G − u is disconnected");
            };
            let oriented = match (self.edge_within(n1), self.edge_within(n2)) {
                (Some(e), _) => (e, v1, v2, a, b),
                (None, Some(e)) => (e, v2, v1, b, a),
                (None, None) => {
                    return outside("Thm2/Case2.2/Fact5", &base, "N(v_1) and N(v_2) are independent");
                }
            };
            let ((s, t), w1, w2, up, up1) = oriented;
            let (s, t) = if s == up { (t, s) } else { (s, t) };
            let tree = self.star(u, &[s, up], &[(t, w1), (s, t), (up, up1), (up1, w2)]);
            let roles = [("u", u), ("v_1", w1), ("v_2", w2), ("u_s", s), ("u_t", t), ("u_p", up), ("u_{p+1}", up1)];
            return trace("Thm2/Case2.2/Fact5/Fig6a", &roles, tree);
        }

        if let Some(&(a, b)) = cross.first() {
            for (na, w1, w2, up, up1) in [(n1, v1, v2, a, b), (n2, v2, v1, b, a)] {
                if let Some(&(ui, uj)) = self.cross_edges(na, y).first() {
                    let tree = self.star(u, &[up, uj], &[(ui, w1), (ui, uj), (up, up1), (up1, w2)]);
                    let roles = [
                        ("u", u),
                        ("v_1", w1),
                        ("v_2", w2),
                        ("u_i", ui),
                        ("u_j", uj),
                        ("u_p", up),
                        ("u_{p+1}", up1),
                    ];
                    return trace("Thm2/Case2.2/Fig6b", &roles, tree);
                }
            }
            return outside("Thm2/Case2.2", &base, "G − u is disconnected");
        }

        let left = self.cross_edges(n1, y);
        let right = self.cross_edges(n2, y);
        for &(u1, uj) in &left {
            if let Some(&(uq, uk)) = right.iter().find(|&&(_, k)| k != uj) {
                let tree = self.star(u, &[uj, uk], &[(u1, v1), (u1, uj), (uq, v2), (uq, uk)]);
                let roles = [base[0], base[1], base[2], ("u_1", u1), ("u_j", uj), ("u_q", uq), ("u_k", uk)];
                return trace("Thm2/Case2.2/Fig6c", &roles, tree);
            }
        }
        outside(
            "Thm2/Case2.2",
            &base,
            "N(v_1) and N(v_2) reach Y only through one shared vertex",
        )
    }
}
