use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

/// A non-negative reduced fraction over `u128`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExactRatio {
    num: u128,
    den: u128,
}

impl ExactRatio {
    /// Panics if `den` is zero.
    pub fn new(num: u128, den: u128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = num.gcd(&den);
        ExactRatio { num: num / g, den: den / g }
    }

    pub const fn zero() -> Self {
        ExactRatio { num: 0, den: 1 }
    }

    pub const fn one() -> Self {
        ExactRatio { num: 1, den: 1 }
    }

    pub fn numer(&self) -> u128 {
        self.num
    }

    pub fn denom(&self) -> u128 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 1 && self.den == 1
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Decimal expansion rounded half-to-even at `places` digits.
    pub fn to_decimal(&self, places: u32) -> String {
        let scaled = 10u128.checked_pow(places).and_then(|s| self.num.checked_mul(s).map(|n| (s, n)));
        let Some((scale, n)) = scaled else {
            return format!("{:.*}", places as usize, self.to_f64());
        };
        let (mut q, r) = n.div_rem(&self.den);
        let rest = self.den - r;
        if r > rest || (r == rest && q % 2 == 1) {
            q += 1;
        }
        if places == 0 {
            return q.to_string();
        }
        format!("{}.{:0width$}", q / scale, q % scale, width = places as usize)
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Ord for ExactRatio {
    /// Continued-fraction comparison; never forms a cross product, so it
    /// cannot overflow.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b, mut c, mut d) = (self.num, self.den, other.num, other.den);
        loop {
            let (qa, ra) = a.div_rem(&b);
            let (qc, rc) = c.div_rem(&d);
            match qa.cmp(&qc) {
                Ordering::Equal => {}
                unequal => return unequal,
            }
            match (ra == 0, rc == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                // ra/b < rc/d  ⇔  b/ra > d/rc
                (false, false) => (a, b, c, d) = (d, rc, b, ra),
            }
        }
    }
}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_and_renders() {
        let r = ExactRatio::new(40, 64);
        assert_eq!((r.numer(), r.denom()), (5, 8));
        assert_eq!(r.to_string(), "5/8");
        assert_eq!(r.to_decimal(6), "0.625000");
        assert_eq!(ExactRatio::new(3, 3).to_string(), "1");
        assert_eq!(ExactRatio::new(3, 4).to_decimal(6), "0.750000");
        assert_eq!(ExactRatio::new(1, 3).to_decimal(6), "0.333333");
        assert_eq!(ExactRatio::new(2, 3).to_decimal(6), "0.666667");
        assert_eq!(ExactRatio::new(7, 12).to_decimal(6), "0.583333");
    }

    #[test]
    fn half_even_rounding() {
        // 1/8 = 0.125 → 0.12 ; 3/8 = 0.375 → 0.38
        assert_eq!(ExactRatio::new(1, 8).to_decimal(2), "0.12");
        assert_eq!(ExactRatio::new(3, 8).to_decimal(2), "0.38");
        assert_eq!(ExactRatio::new(1, 2).to_decimal(0), "0");
        assert_eq!(ExactRatio::new(3, 2).to_decimal(0), "2");
    }

    #[test]
    fn ordering_near_u128_limit() {
        let big = u128::MAX - 1;
        let a = ExactRatio::new(big - 1, big);
        let b = ExactRatio::new(big - 2, big - 1);
        assert!(b < a);
        assert!(ExactRatio::one() > a);
    }

    proptest! {
        #[test]
        fn ordering_matches_cross_multiplication(a in 0u64..1 << 40, b in 1u64..1 << 40, c in 0u64..1 << 40, d in 1u64..1 << 40) {
            let lhs = a as u128 * d as u128;
            let rhs = c as u128 * b as u128;
            let x = ExactRatio::new(a as u128, b as u128);
            let y = ExactRatio::new(c as u128, d as u128);
            prop_assert_eq!(x.cmp(&y), lhs.cmp(&rhs));
            prop_assert_eq!(x == y, lhs == rhs);
        }
    }
}
