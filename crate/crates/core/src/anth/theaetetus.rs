use serde_json::{json, Value};

use super::{anth_pair, cross_product_equal_anth, AnthExpansion, DEFAULT_MAX_STEPS};
use crate::exact::QuadraticSurd;

/// The diagonal/side pair `a = √2`, `b = 1` taken one and a half division
/// steps, with the proportion `b*c2 = c1^2` that makes the rest repeat.
#[derive(Debug, Clone)]
pub struct TheaetetusTrace {
    pub a: QuadraticSurd,
    pub b: QuadraticSurd,
    /// `a - b`
    pub c1: QuadraticSurd,
    /// `b - 2*c1 = 3b - 2a`
    pub c2: QuadraticSurd,
    pub first_quotient: num_bigint::BigInt,
    pub second_quotient: num_bigint::BigInt,
    pub b_lt_a_lt_2b: bool,
    pub three_b_gt_two_a: bool,
    /// `b*c2 == c1^2`
    pub logos: bool,
    pub c2_lt_c1: bool,
    /// `Anth(b, c1) == Anth(c1, c2)`, from the cross-product equality.
    pub tail_repeats: bool,
    pub expansion: AnthExpansion,
}

impl TheaetetusTrace {
    pub fn all_hold(&self) -> bool {
        self.b_lt_a_lt_2b
            && self.three_b_gt_two_a
            && self.logos
            && self.c2_lt_c1
            && self.tail_repeats
            && self.first_quotient == 1.into()
            && self.second_quotient == 2.into()
            && self.expansion.prefix_u64() == Some(vec![1])
            && self.expansion.period_u64() == Some(vec![2])
    }

    /// `Anth(a,b) = [k0, k1, Anth(c1,c2)] = [...]` rendered from the computed data.
    pub fn chain(&self) -> String {
        let list = |v: Vec<u64>| v.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
        let prefix = self.expansion.prefix_u64().unwrap_or_default();
        let period = self.expansion.period_u64().unwrap_or_default();
        let mut closed = list(prefix);
        if !closed.is_empty() {
            closed.push_str(", ");
        }
        format!(
            "Anth(a,b) = [{}, {}, Anth(c1,c2)] = [{}period({})]",
            self.first_quotient,
            self.second_quotient,
            closed,
            list(period)
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "c1": self.c1.to_string(),
            "c2": self.c2.to_string(),
            "b_lt_a_lt_2b": self.b_lt_a_lt_2b,
            "three_b_gt_two_a": self.three_b_gt_two_a,
            "logos": self.logos,
            "c2_lt_c1": self.c2_lt_c1,
            "tail_repeats": self.tail_repeats,
            "chain": self.chain(),
            "expansion": self.expansion.to_json(),
        })
    }
}

pub fn theaetetus_trace() -> TheaetetusTrace {
    let b = QuadraticSurd::one();
    let a = QuadraticSurd::sqrt_of(2).expect("2 is a valid radicand");
    let two = QuadraticSurd::from_int(2);
    let three = QuadraticSurd::from_int(3);

    let c1 = &a - &b;
    let c2 = &b - &two * &c1;
    debug_assert_eq!(c2, &three * &b - &two * &a);

    let first_quotient = (&a / &b).floor();
    let second_quotient = (&b / &c1).floor();
    let logos = &b * &c2 == c1.square();
    let tail_repeats = cross_product_equal_anth(&b, &c1, &c1, &c2, DEFAULT_MAX_STEPS).unwrap_or(false);

    TheaetetusTrace {
        b_lt_a_lt_2b: b < a && a < &two * &b,
        three_b_gt_two_a: &three * &b > &two * &a,
        c2_lt_c1: c2 < c1,
        expansion: anth_pair(&a, &b, DEFAULT_MAX_STEPS).expect("√2 : 1 is a valid pair"),
        logos,
        tail_repeats,
        first_quotient,
        second_quotient,
        a,
        b,
        c1,
        c2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_values() {
        let t = theaetetus_trace();
        assert_eq!(t.c1, QuadraticSurd::new(-1, 1, 2, 1).unwrap());
        assert_eq!(t.c2, QuadraticSurd::new(3, -2, 2, 1).unwrap());
        assert_eq!(&t.b * &t.c2, t.c1.square());
        assert!(t.logos);
        assert!(t.all_hold());
        assert_eq!(t.chain(), "Anth(a,b) = [1, 2, Anth(c1,c2)] = [1, period(2)]");
    }
}
