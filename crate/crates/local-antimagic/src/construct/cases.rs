//! The five construction branches. Each leaf i owns the pair
//! {lo, hi} from the partition of {n+3..3n+2}; a branch only decides which
//! element goes to x and which to y, plus the orientation of the hub-apex
//! labels {n+1, n+2}.
//!
//! Pair element shorthands, matching the partition's two regimes:
//!   first regime  (i <= (n+1)/2):  lo = 2n+4-2i,  hi = (5n+3)/2 + i
//!   second regime (i >= (n+3)/2):  lo = 3n+4-2i,  hi = (3n+3)/2 + i

use super::{CaseStrategy, CaseTag, Construction, ConstructError};
use crate::graph::Role;

fn first_lo(n: u64, i: u64) -> u64 {
    2 * n + 4 - 2 * i
}

fn first_hi(n: u64, i: u64) -> u64 {
    (5 * n + 3) / 2 + i
}

fn second_lo(n: u64, i: u64) -> u64 {
    3 * n + 4 - 2 * i
}

fn second_hi(n: u64, i: u64) -> u64 {
    (3 * n + 3) / 2 + i
}

fn in_domain(n: u64) -> bool {
    n >= 3 && n % 2 == 1 && (n + 1) % 3 != 0
}

/// n = 1: the fixed base table f(vv1)=1, f(vx)=5, f(vy)=4, f(v1x)=2,
/// f(v1y)=3.
pub struct Base1;

impl CaseStrategy for Base1 {
    fn tag(&self) -> CaseTag {
        CaseTag::Base1
    }

    fn applies(&self, n: u64) -> bool {
        n == 1
    }

    fn hub_labels(&self, _n: u64) -> (u64, u64) {
        (5, 4)
    }

    fn apex_labels(&self, _n: u64, _i: u64) -> (u64, u64) {
        (2, 3)
    }
}

/// (n+1)/2 ≡ 0 (mod 4).
pub struct Case1;

impl CaseStrategy for Case1 {
    fn tag(&self) -> CaseTag {
        CaseTag::C1
    }

    fn applies(&self, n: u64) -> bool {
        in_domain(n) && ((n + 1) / 2) % 4 == 0
    }

    fn hub_labels(&self, n: u64) -> (u64, u64) {
        (n + 2, n + 1)
    }

    fn apex_labels(&self, n: u64, i: u64) -> (u64, u64) {
        let half = (n + 1) / 2;
        if i <= half {
            if i % 4 == 1 || i % 4 == 0 {
                (first_hi(n, i), first_lo(n, i))
            } else {
                (first_lo(n, i), first_hi(n, i))
            }
        } else if i == half + 1 || i == half + 2 {
            // the special triple at (n+3)/2, (n+5)/2, (n+7)/2
            (second_hi(n, i), second_lo(n, i))
        } else if i == half + 3 {
            (second_lo(n, i), second_hi(n, i))
        } else if i % 4 == 0 || i % 4 == 3 {
            (second_hi(n, i), second_lo(n, i))
        } else {
            (second_lo(n, i), second_hi(n, i))
        }
    }
}

/// (n+1)/2 ≡ 2 (mod 4).
pub struct Case2;

impl CaseStrategy for Case2 {
    fn tag(&self) -> CaseTag {
        CaseTag::C2
    }

    fn applies(&self, n: u64) -> bool {
        in_domain(n) && ((n + 1) / 2) % 4 == 2
    }

    fn hub_labels(&self, n: u64) -> (u64, u64) {
        (n + 2, n + 1)
    }

    fn apex_labels(&self, n: u64, i: u64) -> (u64, u64) {
        let half = (n + 1) / 2;
        if i <= half {
            if i % 4 == 1 || i % 4 == 0 {
                (first_hi(n, i), first_lo(n, i))
            } else {
                (first_lo(n, i), first_hi(n, i))
            }
        } else if i == half + 1 {
            // the single pivot at (n+3)/2
            (second_hi(n, i), second_lo(n, i))
        } else if i % 4 == 0 || i % 4 == 3 {
            (second_hi(n, i), second_lo(n, i))
        } else {
            (second_lo(n, i), second_hi(n, i))
        }
    }
}

/// (n+1)/2 odd and 3 | (n+3)/2 (so n/3 is an integer). The only case where
/// f(vx) = n+1.
pub struct Case3;

impl CaseStrategy for Case3 {
    fn tag(&self) -> CaseTag {
        CaseTag::C3
    }

    fn applies(&self, n: u64) -> bool {
        in_domain(n) && ((n + 1) / 2) % 2 == 1 && ((n + 3) / 2) % 3 == 0
    }

    fn hub_labels(&self, n: u64) -> (u64, u64) {
        (n + 1, n + 2)
    }

    fn apex_labels(&self, n: u64, i: u64) -> (u64, u64) {
        if i == 1 {
            (first_lo(n, 1), first_hi(n, 1))
        } else if i <= n / 3 {
            if i % 2 == 0 {
                (first_hi(n, i), first_lo(n, i))
            } else {
                (first_lo(n, i), first_hi(n, i))
            }
        } else if i <= (n + 1) / 2 {
            if i % 2 == 0 {
                (first_lo(n, i), first_hi(n, i))
            } else {
                (first_hi(n, i), first_lo(n, i))
            }
        } else if i % 2 == 0 {
            (second_lo(n, i), second_hi(n, i))
        } else {
            (second_hi(n, i), second_lo(n, i))
        }
    }
}

/// (n+1)/2 odd and 3 | (n−1)/2 (so (n+2)/3 is an integer).
pub struct Case4;

impl CaseStrategy for Case4 {
    fn tag(&self) -> CaseTag {
        CaseTag::C4
    }

    fn applies(&self, n: u64) -> bool {
        in_domain(n) && ((n + 1) / 2) % 2 == 1 && ((n - 1) / 2) % 3 == 0
    }

    fn hub_labels(&self, n: u64) -> (u64, u64) {
        (n + 2, n + 1)
    }

    fn apex_labels(&self, n: u64, i: u64) -> (u64, u64) {
        if i == 1 {
            (first_lo(n, 1), first_hi(n, 1))
        } else if i <= (n + 2) / 3 {
            if i % 2 == 0 {
                (first_hi(n, i), first_lo(n, i))
            } else {
                (first_lo(n, i), first_hi(n, i))
            }
        } else if i <= (n + 1) / 2 {
            if i % 2 == 0 {
                (first_lo(n, i), first_hi(n, i))
            } else {
                (first_hi(n, i), first_lo(n, i))
            }
        } else if i % 2 == 0 {
            (second_lo(n, i), second_hi(n, i))
        } else {
            (second_hi(n, i), second_lo(n, i))
        }
    }
}

pub static REGISTRY: &[&dyn CaseStrategy] = &[&Base1, &Case1, &Case2, &Case3, &Case4];

/// Extracts (f(v_i x), f(v_i y)) for i = 1..n from a finished construction.
fn apex_label_table(c: &Construction) -> (Vec<u64>, Vec<u64>) {
    let n = c.n as usize;
    let mut to_x = vec![0u64; n + 1];
    let mut to_y = vec![0u64; n + 1];
    for (idx, &(a, b)) in c.graph.edges().iter().enumerate() {
        match (c.graph.role(a), c.graph.role(b)) {
            (Role::Leaf(i), Role::ApexX) => to_x[i as usize] = c.labeling.label(idx),
            (Role::Leaf(i), Role::ApexY) => to_y[i as usize] = c.labeling.label(idx),
            _ => {}
        }
    }
    (to_x, to_y)
}

/// Checks the balance identities each case's proof rests on, directly on
/// the constructed labels:
///
/// * C1/C2, first region: for i ≡ 1 (mod 4) with i+3 ≤ (n+1)/2, both the
///   x-block and y-block sums Σ_{j=i}^{i+3} equal 9n+8−2i.
/// * C1/C2, tail region: four-blocks of x and y labels have equal sums.
/// * C3/C4: pairwise offsets of +3 between the x and y sides over the
///   stated even-i ranges (toward y in the opening region, toward x after).
pub fn verify_case_identities(c: &Construction) -> Result<(), ConstructError> {
    let n = c.n;
    let fail = |detail: String| ConstructError::Internal { n, detail };
    let (fx, fy) = apex_label_table(c);
    let block = |t: &[u64], i: u64| -> u64 { (i..i + 4).map(|j| t[j as usize]).sum() };

    let check_offset_runs = |ranges: &[(u64, u64, bool)]| -> Result<(), ConstructError> {
        // (start, end, toward_y): for even i in [start, end] with i+1 <= end,
        // the heavier side leads by exactly 3
        for &(start, end, toward_y) in ranges {
            let mut i = start.max(2);
            if i % 2 == 1 {
                i += 1;
            }
            while i + 1 <= end {
                let (xs, ys) = (fx[i as usize] + fx[i as usize + 1], fy[i as usize] + fy[i as usize + 1]);
                let ok = if toward_y { ys == xs + 3 } else { xs == ys + 3 };
                if !ok {
                    return Err(fail(format!("offset identity fails at i={i} (x pair {xs}, y pair {ys})")));
                }
                i += 2;
            }
        }
        Ok(())
    };

    match c.case {
        CaseTag::Base1 => Ok(()),
        CaseTag::C1 | CaseTag::C2 => {
            let half = (n + 1) / 2;
            let mut i = 1;
            while i + 3 <= half {
                let (bx, by) = (block(&fx, i), block(&fy, i));
                if bx != by {
                    return Err(fail(format!("first-region block sums differ at i={i}")));
                }
                if c.case == CaseTag::C1 && bx != 9 * n + 8 - 2 * i {
                    return Err(fail(format!("block sum at i={i} is {bx}, want {}", 9 * n + 8 - 2 * i)));
                }
                i += 4;
            }
            // tail region starts after the case's pivot leaves
            let tail_start = match c.case {
                CaseTag::C1 => half + 4, // (n+9)/2
                _ => half + 2,           // (n+5)/2
            };
            let mut i = tail_start;
            while i + 3 <= n {
                if block(&fx, i) != block(&fy, i) {
                    return Err(fail(format!("tail-region block sums differ at i={i}")));
                }
                i += 4;
            }
            Ok(())
        }
        CaseTag::C3 => check_offset_runs(&[
            (2, n / 3, true),
            ((n + 3) / 3, (n + 1) / 2, false),
            ((n + 3) / 2, n, false),
        ]),
        CaseTag::C4 => check_offset_runs(&[
            (2, (n + 2) / 3, true),
            ((n + 5) / 3, (n + 1) / 2, false),
            ((n + 3) / 2, n, false),
        ]),
        CaseTag::EvenN | CaseTag::DivisibleByThree => {
            Err(fail("identity check on a rejected construction".into()))
        }
    }
}
