//! Exact orientation predicate on f64 inputs.
//!
//! The fast floating-point determinant is used when its error bound proves the
//! sign; otherwise we fall back to an exact evaluation with floating-point
//! expansions (Shewchuk's technique). Constructions elsewhere stay floating;
//! only the *sign* decisions route through here.

const EPSILON: f64 = f64::EPSILON / 2.0;
const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
const CCW_ERRBOUND_A: f64 = (3.0 + 16.0 * EPSILON) * EPSILON;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let x = a + b;
    let bv = x - a;
    let av = x - bv;
    let y = (a - av) + (b - bv);
    (x, y)
}

#[inline]
fn two_diff(a: f64, b: f64) -> (f64, f64) {
    let x = a - b;
    let bv = a - x;
    let av = x + bv;
    let y = (a - av) - (b - bv);
    (x, y)
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let c = SPLITTER * a;
    let hi = c - (c - a);
    let lo = a - hi;
    (hi, lo)
}

#[inline]
fn two_product(a: f64, b: f64) -> (f64, f64) {
    let x = a * b;
    let (ahi, alo) = split(a);
    let (bhi, blo) = split(b);
    let err = x - ahi * bhi - alo * bhi - ahi * blo;
    let y = alo * blo - err;
    (x, y)
}

/// Grows an expansion `e` by a single component `b`; result is nonoverlapping
/// and in increasing order of magnitude. Returns the used prefix length.
fn grow_expansion(e: &[f64], b: f64, out: &mut Vec<f64>) {
    out.clear();
    let mut q = b;
    for &enow in e {
        let (sum, err) = two_sum(q, enow);
        if err != 0.0 {
            out.push(err);
        }
        q = sum;
    }
    out.push(q);
}

fn expansion_sum(e: &[f64], f: &[f64]) -> Vec<f64> {
    let mut acc: Vec<f64> = e.to_vec();
    let mut tmp = Vec::with_capacity(acc.len() + 1);
    for &b in f {
        grow_expansion(&acc, b, &mut tmp);
        std::mem::swap(&mut acc, &mut tmp);
    }
    acc
}

fn expansion_sign(e: &[f64]) -> f64 {
    // Largest-magnitude component decides; components are nonoverlapping.
    for &c in e.iter().rev() {
        if c != 0.0 {
            return c;
        }
    }
    0.0
}

fn orient2d_exact(pa: [f64; 2], pb: [f64; 2], pc: [f64; 2]) -> f64 {
    let (axby, axby_t) = two_product(pa[0], pb[1]);
    let (axcy, axcy_t) = two_product(pa[0], pc[1]);
    let (bxcy, bxcy_t) = two_product(pb[0], pc[1]);
    let (bxay, bxay_t) = two_product(pb[0], pa[1]);
    let (cxay, cxay_t) = two_product(pc[0], pa[1]);
    let (cxby, cxby_t) = two_product(pc[0], pb[1]);

    // det = (axby - axcy) + (bxcy - bxay) + (cxay - cxby)
    let pos = expansion_sum(
        &expansion_sum(&[axby_t, axby], &[bxcy_t, bxcy]),
        &[cxay_t, cxay],
    );
    let neg = expansion_sum(
        &expansion_sum(&[axcy_t, axcy], &[bxay_t, bxay]),
        &[cxby_t, cxby],
    );
    let neg: Vec<f64> = neg.iter().map(|v| -v).collect();
    expansion_sign(&expansion_sum(&pos, &neg))
}

/// Sign of the signed area of triangle (a, b, c): positive when counterclockwise.
pub fn orient2d(pa: [f64; 2], pb: [f64; 2], pc: [f64; 2]) -> f64 {
    let detleft = (pa[0] - pc[0]) * (pb[1] - pc[1]);
    let detright = (pa[1] - pc[1]) * (pb[0] - pc[0]);
    let det = detleft - detright;

    let detsum = if detleft > 0.0 {
        if detright <= 0.0 {
            return det;
        }
        detleft + detright
    } else if detleft < 0.0 {
        if detright >= 0.0 {
            return det;
        }
        -detleft - detright
    } else {
        return det;
    };

    let errbound = CCW_ERRBOUND_A * detsum;
    if det >= errbound || -det >= errbound {
        det
    } else {
        orient2d_exact(pa, pb, pc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_basic() {
        assert!(orient2d([0.0, 0.0], [1.0, 0.0], [0.0, 1.0]) > 0.0);
        assert!(orient2d([0.0, 0.0], [0.0, 1.0], [1.0, 0.0]) < 0.0);
        assert_eq!(orient2d([0.0, 0.0], [1.0, 1.0], [2.0, 2.0]), 0.0);
    }

    #[test]
    fn orientation_near_degenerate() {
        // Points almost on a line; naive arithmetic misjudges some of these.
        let a = [12.0, 12.0];
        let b = [24.0, 24.0];
        for i in 0..32 {
            for j in 0..32 {
                let c = [
                    0.5 + (i as f64) * f64::EPSILON,
                    0.5 + (j as f64) * f64::EPSILON,
                ];
                let s = orient2d(a, b, c);
                // Exact sign of (a-c)x(b-c): compare against 128-bit rational-free check
                // using the fact that all coordinates are exactly representable.
                let exact = exact_sign(a, b, c);
                assert_eq!(s > 0.0, exact > 0, "i={i} j={j}");
                assert_eq!(s < 0.0, exact < 0, "i={i} j={j}");
                assert_eq!(s == 0.0, exact == 0, "i={i} j={j}");
            }
        }
    }

    // Independent oracle on dyadic inputs via i128 arithmetic after scaling.
    fn exact_sign(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> i32 {
        let s = 2f64.powi(56);
        let ax = (a[0] * s) as i128;
        let ay = (a[1] * s) as i128;
        let bx = (b[0] * s) as i128;
        let by = (b[1] * s) as i128;
        let cx = (c[0] * s) as i128;
        let cy = (c[1] * s) as i128;
        let det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
        det.signum() as i32
    }
}
