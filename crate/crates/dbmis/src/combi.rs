//! Lexicographic combination enumeration shared by the local searches.

/// Calls `f` on every size-`size` index combination of `0..n` in
/// lexicographic order. `f` returns true to stop early; the return value
/// says whether a call stopped the scan.
pub(crate) fn for_each_combination(
    n: usize,
    size: usize,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let mut cur = Vec::with_capacity(size);
    rec(n, size, 0, &mut cur, f)
}

fn rec(
    n: usize,
    size: usize,
    start: usize,
    cur: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if cur.len() == size {
        return f(cur);
    }
    let needed = size - cur.len();
    for i in start..n {
        if n - i < needed {
            break;
        }
        cur.push(i);
        if rec(n, size, i + 1, cur, f) {
            return true;
        }
        cur.pop();
    }
    false
}
