use super::set::{Elem, ElemSet};

/// All sets closed under `close` over the ground set `{0, .., n-1}`, in lectic order.
///
/// `close` must be a closure operator (extensive, monotone, idempotent). This is
/// Ganter's NextClosure: each closed set is produced exactly once and only `close`
/// is ever evaluated, so memory stays linear in the output.
pub fn next_closure_all<F>(n: usize, close: F) -> Vec<ElemSet>
where
    F: Fn(ElemSet) -> ElemSet,
{
    let mut out = Vec::new();
    let mut current = close(ElemSet::EMPTY);
    loop {
        out.push(current);
        match next_closure(n, &close, current) {
            Some(next) => current = next,
            None => return out,
        }
    }
}

fn next_closure<F>(n: usize, close: &F, current: ElemSet) -> Option<ElemSet>
where
    F: Fn(ElemSet) -> ElemSet,
{
    for i in (0..n).rev() {
        let e = Elem(i);
        if current.contains(e) {
            continue;
        }
        let prefix = current.below_index(i);
        let candidate = close(prefix.with(e));
        if candidate.below_index(i) == prefix {
            return Some(candidate);
        }
    }
    None
}
