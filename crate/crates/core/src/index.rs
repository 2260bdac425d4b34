//! Mixed-radix (row-major) index bookkeeping.

/// Row-major strides: party 1 varies slowest.
pub fn strides(dims: &[usize]) -> Vec<usize> {
    let mut out = vec![1; dims.len()];
    for n in (0..dims.len().saturating_sub(1)).rev() {
        out[n] = out[n + 1] * dims[n + 1];
    }
    out
}

pub fn total_dim(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// Splits every linear index into the stride-weighted contribution of the
/// parties in `bits` and the remainder, so `idx == inside[idx] + outside[idx]`.
pub fn split_in_place(dims: &[usize], bits: u64) -> (Vec<u32>, Vec<u32>) {
    let d = total_dim(dims);
    let st = strides(dims);
    let mut inside = vec![0u32; d];
    let mut outside = vec![0u32; d];
    for idx in 0..d {
        let mut acc = 0usize;
        for (n, (&dn, &sn)) in dims.iter().zip(&st).enumerate() {
            if bits >> n & 1 == 1 {
                acc += (idx / sn % dn) * sn;
            }
        }
        inside[idx] = acc as u32;
        outside[idx] = (idx - acc) as u32;
    }
    (inside, outside)
}

/// Maps every linear index to a compact row-major index over the parties in
/// `bits` and another over the remaining parties.
pub fn split_compact(dims: &[usize], bits: u64) -> (Vec<usize>, Vec<usize>, usize, usize) {
    let d = total_dim(dims);
    let st = strides(dims);
    let mut keep = vec![0usize; d];
    let mut rest = vec![0usize; d];
    let (mut dk, mut dr) = (1usize, 1usize);
    for (n, &dn) in dims.iter().enumerate() {
        if bits >> n & 1 == 1 {
            dk *= dn;
        } else {
            dr *= dn;
        }
    }
    for idx in 0..d {
        let (mut k, mut r) = (0usize, 0usize);
        for (n, (&dn, &sn)) in dims.iter().zip(&st).enumerate() {
            let digit = idx / sn % dn;
            if bits >> n & 1 == 1 {
                k = k * dn + digit;
            } else {
                r = r * dn + digit;
            }
        }
        keep[idx] = k;
        rest[idx] = r;
    }
    (keep, rest, dk, dr)
}
