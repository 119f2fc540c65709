use super::ambient::Ambient;
use crate::cert::Certificate;

/// Truncated simplicial data over an ambient category: objects `X0..Xk`,
/// faces `faces[n][i] = d_i: X_n → X_{n-1}` for `n ≥ 1` and degeneracies
/// `degens[n][j] = s_j: X_n → X_{n+1}`.
#[derive(Debug, Clone)]
pub struct Simplicial<A: Ambient> {
    pub objs: Vec<A::Obj>,
    pub faces: Vec<Vec<A::Mor>>,
    pub degens: Vec<Vec<A::Mor>>,
}

impl<A: Ambient> Simplicial<A> {
    pub fn top(&self) -> usize {
        self.objs.len() - 1
    }

    fn face(&self, n: usize, i: usize) -> Option<&A::Mor> {
        self.faces.get(n).and_then(|v| v.get(i))
    }

    fn degen(&self, n: usize, j: usize) -> Option<&A::Mor> {
        self.degens.get(n).and_then(|v| v.get(j))
    }
}

fn compare<A: Ambient>(
    amb: &A,
    cert: &mut Certificate,
    name: String,
    lhs: crate::Result<A::Mor>,
    rhs: crate::Result<A::Mor>,
) {
    let w = match (lhs, rhs) {
        (Ok(l), Ok(r)) => amb.difference(&l, &r),
        (Err(e), _) | (_, Err(e)) => Some(format!("ill-typed: {e}")),
    };
    cert.record(name, w);
}

/// Checks typing and every simplicial identity available in the data.
pub fn check_simplicial<A: Ambient>(amb: &A, s: &Simplicial<A>) -> Certificate {
    let mut cert = Certificate::new(format!("simplicial identities in {}", amb.name()));
    let top = s.top();
    for n in 1..=top {
        for (i, d) in s.faces[n].iter().enumerate() {
            let ok = amb.dom(d) == s.objs[n] && amb.cod(d) == s.objs[n - 1];
            cert.record(format!("d_{i} typed on X{n}"), (!ok).then(|| format!("{}→{}", amb.dom(d), amb.cod(d))));
        }
    }
    for n in 0..top {
        for (j, sd) in s.degens.get(n).into_iter().flatten().enumerate() {
            let ok = amb.dom(sd) == s.objs[n] && amb.cod(sd) == s.objs[n + 1];
            cert.record(format!("s_{j} typed on X{n}"), (!ok).then(|| format!("{}→{}", amb.dom(sd), amb.cod(sd))));
        }
    }
    if !cert.passed() {
        return cert;
    }
    // d_i d_{j+1} = d_j d_i, i ≤ j, on X_n
    for n in 2..=top {
        for j in 0..n - 1 {
            for i in 0..=j {
                let (Some(a), Some(b), Some(c), Some(d)) =
                    (s.face(n - 1, i), s.face(n, j + 1), s.face(n - 1, j), s.face(n, i))
                else {
                    continue;
                };
                compare(
                    amb,
                    &mut cert,
                    format!("d_i.d_{{j+1}}=d_j.d_i [X{n}, i={i}, j={j}]"),
                    amb.compose(a, b),
                    amb.compose(c, d),
                );
            }
        }
    }
    // faces after degeneracies, s_j: X_n → X_{n+1}
    for n in 0..top {
        for j in 0..=n {
            let Some(sj) = s.degen(n, j) else { continue };
            for i in 0..=n + 1 {
                let Some(di) = s.face(n + 1, i) else { continue };
                let lhs = amb.compose(di, sj);
                if i < j {
                    let (Some(sj1), Some(di0)) = (s.degen(n - 1, j - 1), s.face(n, i)) else { continue };
                    compare(
                        amb,
                        &mut cert,
                        format!("d_i.s_j=s_{{j-1}}.d_i [X{n}, i={i}, j={j}]"),
                        lhs,
                        amb.compose(sj1, di0),
                    );
                } else if i == j || i == j + 1 {
                    compare(amb, &mut cert, format!("d_i.s_j=1 [X{n}, i={i}, j={j}]"), lhs, Ok(amb.id(&s.objs[n])));
                } else {
                    let (Some(sjl), Some(di1)) = (s.degen(n - 1, j), s.face(n, i - 1)) else { continue };
                    compare(
                        amb,
                        &mut cert,
                        format!("d_i.s_j=s_j.d_{{i-1}} [X{n}, i={i}, j={j}]"),
                        lhs,
                        amb.compose(sjl, di1),
                    );
                }
            }
        }
    }
    // s_{j+1} s_i = s_i s_j, i ≤ j, s_i, s_j on X_n
    for n in 0..top.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                let (Some(a), Some(b), Some(c), Some(d)) =
                    (s.degen(n + 1, j + 1), s.degen(n, i), s.degen(n + 1, i), s.degen(n, j))
                else {
                    continue;
                };
                compare(
                    amb,
                    &mut cert,
                    format!("s_{{j+1}}.s_i=s_i.s_j [X{n}, i={i}, j={j}]"),
                    amb.compose(a, b),
                    amb.compose(c, d),
                );
            }
        }
    }
    cert
}
