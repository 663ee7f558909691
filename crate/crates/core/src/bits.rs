//! Bitmask helpers for enumerating binary vectors by Hamming weight.
//!
//! Vectors of length n <= 63 are stored as `u64` masks, bit k holding
//! coordinate x_k.

/// Iterator over all masks of width `n` with exactly `weight` bits set,
/// in increasing numeric order (Gosper's hack).
pub(crate) fn weight_masks(n: u32, weight: u32) -> WeightMasks {
    debug_assert!(n < 64 && weight <= n);
    WeightMasks {
        next: if weight == 0 { 0 } else { (1u64 << weight) - 1 },
        limit: 1u64 << n,
        done: false,
        zero_case: weight == 0,
    }
}

pub(crate) struct WeightMasks {
    next: u64,
    limit: u64,
    done: bool,
    zero_case: bool,
}

impl Iterator for WeightMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done || self.next >= self.limit {
            self.done = true;
            return None;
        }
        let current = self.next;
        if self.zero_case {
            self.done = true;
        } else {
            let c = self.next & self.next.wrapping_neg();
            let r = self.next + c;
            self.next = (((r ^ self.next) >> 2) / c) | r;
        }
        Some(current)
    }
}

/// Parity of the standard inner product of two masks: (-1)^{a.b} as +-1.
pub(crate) fn dot_sign(a: u64, b: u64) -> i64 {
    if (a & b).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}
