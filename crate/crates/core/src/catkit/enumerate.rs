use super::internal::{InternalCategory, ReflexiveGraph};
use crate::setcat::{Atom, FinMap, FinSetObj};

/// Reflexive graphs with `objects` objects and `arrows` arrows in total
/// (identities included), one representative per multiset of endpoint pairs
/// of the non-identity arrows.
pub fn reflexive_graphs(objects: usize, arrows: usize) -> Vec<ReflexiveGraph> {
    if arrows < objects || (objects == 0 && arrows > 0) {
        return Vec::new();
    }
    let extra = arrows - objects;
    let ends: Vec<(usize, usize)> =
        (0..objects).flat_map(|a| (0..objects).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let mut choice = Vec::new();
    multisets(&ends, extra, 0, &mut choice, &mut |sel: &[(usize, usize)]| {
        let x0 = FinSetObj::range("X0", objects);
        let mut names = Vec::new();
        let mut d1 = Vec::new();
        let mut d0 = Vec::new();
        for o in 0..objects {
            names.push(Atom::sym(format!("i{o}")));
            d1.push(o);
            d0.push(o);
        }
        for (k, (a, b)) in sel.iter().enumerate() {
            names.push(Atom::sym(format!("f{k}")));
            d1.push(*a);
            d0.push(*b);
        }
        let x1 = FinSetObj::collect("X1", names.clone());
        let obj = |i: usize| Atom::Int(i as i64);
        let d1m = FinMap::from_pairs(&x1, &x0, names.iter().cloned().zip(d1.iter().map(|&i| obj(i)))).unwrap();
        let d0m = FinMap::from_pairs(&x1, &x0, names.iter().cloned().zip(d0.iter().map(|&i| obj(i)))).unwrap();
        let s0 = FinMap::new(&x0, &x1, |o| match o {
            Atom::Int(i) => Atom::sym(format!("i{i}")),
            _ => unreachable!(),
        })
        .unwrap();
        out.push(ReflexiveGraph::new(d0m, d1m, s0).unwrap());
    });
    out
}

fn multisets<T: Clone>(items: &[T], k: usize, start: usize, acc: &mut Vec<T>, emit: &mut impl FnMut(&[T])) {
    if k == 0 {
        emit(acc);
        return;
    }
    for i in start..items.len() {
        acc.push(items[i].clone());
        multisets(items, k - 1, i, acc, emit);
        acc.pop();
    }
}

/// Every category structure (composition) on a reflexive graph.
pub fn category_structures(g: &ReflexiveGraph) -> Vec<InternalCategory> {
    let arrows: Vec<Atom> = g.x1.elems().to_vec();
    let n = arrows.len();
    let pos = |a: &Atom| g.x1.index_of(a).unwrap();
    let src: Vec<usize> = arrows.iter().map(|f| g.x0.index_of(g.d1.get(f).unwrap()).unwrap()).collect();
    let tgt: Vec<usize> = arrows.iter().map(|f| g.x0.index_of(g.d0.get(f).unwrap()).unwrap()).collect();
    let idn: Vec<usize> = g.x0.iter().map(|o| pos(g.s0.get(o).unwrap())).collect();
    let is_id = |f: usize| idn[src[f]] == f;
    // table[f * n + h] is the composite "f then h"
    let mut table: Vec<Option<usize>> = vec![None; n * n];
    let mut free = Vec::new();
    for f in 0..n {
        for h in 0..n {
            if tgt[f] != src[h] {
                continue;
            }
            if is_id(f) {
                table[f * n + h] = Some(h);
            } else if is_id(h) {
                table[f * n + h] = Some(f);
            } else {
                free.push((f, h));
            }
        }
    }
    let candidates: Vec<Vec<usize>> = free
        .iter()
        .map(|&(f, h)| (0..n).filter(|&k| src[k] == src[f] && tgt[k] == tgt[h]).collect())
        .collect();
    let shape = Shape { n, src: &src, tgt: &tgt };
    let mut tables = Vec::new();
    search(&shape, &free, &candidates, 0, &mut table, &mut tables);
    let x2 = g.x2();
    tables
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            let m = FinMap::new(&x2, &g.x1, |p| {
                let (f, h) = (pos(p.proj(0).unwrap()), pos(p.proj(1).unwrap()));
                arrows[t[f * n + h].unwrap()].clone()
            })
            .unwrap();
            InternalCategory::on_graph(format!("C{i}"), g, m).unwrap()
        })
        .collect()
}

struct Shape<'a> {
    n: usize,
    src: &'a [usize],
    tgt: &'a [usize],
}

impl Shape<'_> {
    /// Associativity of every fully defined triple that uses the pair (a, b).
    fn consistent_at(&self, table: &[Option<usize>], a: usize, b: usize) -> bool {
        let n = self.n;
        let get = |f: usize, h: usize| table[f * n + h];
        let check = |f: usize, h: usize, k: usize| match (get(f, h), get(h, k)) {
            (Some(fh), Some(hk)) => match (get(fh, k), get(f, hk)) {
                (Some(l), Some(r)) => l == r,
                _ => true,
            },
            _ => true,
        };
        for x in 0..n {
            if self.tgt[b] == self.src[x] && !check(a, b, x) {
                return false;
            }
            if self.tgt[x] == self.src[a] && !check(x, a, b) {
                return false;
            }
        }
        // (a, b) may also occur as an outer composite
        for f in 0..n {
            for h in 0..n {
                if self.tgt[f] != self.src[h] {
                    continue;
                }
                if get(f, h) == Some(a) && self.tgt[h] == self.src[b] && !check(f, h, b) {
                    return false;
                }
                if get(f, h) == Some(b) && self.tgt[a] == self.src[f] && !check(a, f, h) {
                    return false;
                }
            }
        }
        true
    }
}

fn search(
    shape: &Shape,
    free: &[(usize, usize)],
    candidates: &[Vec<usize>],
    depth: usize,
    table: &mut Vec<Option<usize>>,
    out: &mut Vec<Vec<Option<usize>>>,
) {
    if depth == free.len() {
        out.push(table.clone());
        return;
    }
    let (f, h) = free[depth];
    let slot = f * shape.n + h;
    for &cand in &candidates[depth] {
        table[slot] = Some(cand);
        if consistent_after(shape, table, f, h) {
            search(shape, free, candidates, depth + 1, table, out);
        }
    }
    table[slot] = None;
}

/// Setting (f, h) can newly complete triples where it appears as an inner
/// or outer pair; every such triple is checked.
fn consistent_after(shape: &Shape, table: &[Option<usize>], f: usize, h: usize) -> bool {
    let n = shape.n;
    if !shape.consistent_at(table, f, h) {
        return false;
    }
    let c = table[f * n + h].unwrap();
    for k in 0..n {
        if shape.tgt[c] == shape.src[k] && !shape.consistent_at(table, c, k) {
            return false;
        }
        if shape.tgt[k] == shape.src[c] && !shape.consistent_at(table, k, c) {
            return false;
        }
    }
    true
}

/// Every category with at most `max_objects` objects and `max_arrows` arrows.
pub fn small_categories(max_objects: usize, max_arrows: usize) -> Vec<InternalCategory> {
    let mut out = Vec::new();
    for n in 0..=max_objects {
        for k in n..=max_arrows {
            for g in reflexive_graphs(n, k) {
                out.extend(category_structures(&g));
            }
        }
    }
    for (i, c) in out.iter_mut().enumerate() {
        c.name = format!("cat{i}");
    }
    out
}
