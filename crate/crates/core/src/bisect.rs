/// Bisection on a sign-change bracket, run down to a few ulps.
///
/// Panics if `f(lo)` and `f(hi)` have the same (nonzero) sign; callers are
/// expected to hand in validated brackets from a scan.
pub(crate) fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    let fhi = f(hi);
    if fhi == 0.0 {
        return hi;
    }
    assert!(
        flo * fhi < 0.0,
        "bisect: no sign change on [{lo}, {hi}] (f = {flo}, {fhi})"
    );
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval is one ulp wide
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Scan `f` on `n` equally spaced points over `[lo, hi]` and bisect every
/// sign-change cell. Returns the roots in ascending order.
pub(crate) fn scan_roots<F: Fn(f64) -> f64 + Copy>(f: F, lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let mut roots = Vec::new();
    let mut x_prev = lo;
    let mut f_prev = f(lo);
    for i in 1..n {
        let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let fx = f(x);
        if f_prev == 0.0 {
            roots.push(x_prev);
        } else if fx != 0.0 && (f_prev > 0.0) != (fx > 0.0) {
            roots.push(bisect(f, x_prev, x));
        }
        x_prev = x;
        f_prev = fx;
    }
    if f_prev == 0.0 {
        roots.push(x_prev);
    }
    roots
}
