use num_bigint::BigUint;
use serde_json::{json, Value};

use super::{biguint_json, AnthError, AnthExpansion, Status};
use crate::exact::QuadraticSurd;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Commensurable,
    Incommensurable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    FiniteExpansion,
    PeriodicHenceInfinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    CommonMeasure(QuadraticSurd),
    Period { prefix: Vec<BigUint>, period: Vec<BigUint> },
}

/// A finite expansion exhibits a common measure; a periodic one never ends,
/// so no common measure exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub reason: Reason,
    pub witness: Witness,
}

impl Certificate {
    pub fn to_json(&self) -> Value {
        let witness = match &self.witness {
            Witness::CommonMeasure(m) => json!({ "common_measure": m.to_string() }),
            Witness::Period { prefix, period } => json!({
                "prefix": prefix.iter().map(biguint_json).collect::<Vec<_>>(),
                "period": period.iter().map(biguint_json).collect::<Vec<_>>(),
            }),
        };
        json!({
            "verdict": format!("{:?}", self.verdict),
            "reason": format!("{:?}", self.reason),
            "witness": witness,
        })
    }
}

pub fn incomm_certificate(e: &AnthExpansion) -> Result<Certificate, AnthError> {
    match e.status() {
        Status::Terminated => Ok(Certificate {
            verdict: Verdict::Commensurable,
            reason: Reason::FiniteExpansion,
            witness: Witness::CommonMeasure(e.common_measure().cloned().ok_or(AnthError::Inconclusive)?),
        }),
        Status::Periodic => Ok(Certificate {
            verdict: Verdict::Incommensurable,
            reason: Reason::PeriodicHenceInfinite,
            witness: Witness::Period {
                prefix: e.prefix().to_vec(),
                period: e.period().ok_or(AnthError::Inconclusive)?.to_vec(),
            },
        }),
        Status::Truncated => Err(AnthError::Inconclusive),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anth::{anth_pair, surd_anth, DEFAULT_MAX_STEPS};
    use crate::exact::rational_make;
    use proptest::prelude::*;

    fn s(p: i64, q: i64, d: i64, r: i64) -> QuadraticSurd {
        QuadraticSurd::new(p, q, d, r).unwrap()
    }

    #[test]
    fn root_two_is_incommensurable() {
        let e = anth_pair(&s(0, 1, 2, 1), &QuadraticSurd::one(), DEFAULT_MAX_STEPS).unwrap();
        let c = incomm_certificate(&e).unwrap();
        assert_eq!(c.verdict, Verdict::Incommensurable);
        assert_eq!(c.reason, Reason::PeriodicHenceInfinite);
        assert_eq!(c.witness, Witness::Period { prefix: vec![1u32.into()], period: vec![2u32.into()] });
    }

    #[test]
    fn four_two_is_commensurable() {
        let e = anth_pair(&QuadraticSurd::from_int(4), &QuadraticSurd::from_int(2), DEFAULT_MAX_STEPS).unwrap();
        let c = incomm_certificate(&e).unwrap();
        assert_eq!(c.verdict, Verdict::Commensurable);
        assert_eq!(c.witness, Witness::CommonMeasure(QuadraticSurd::from_int(2)));
    }

    #[test]
    fn golden_section_is_incommensurable() {
        let e = anth_pair(&s(1, 1, 5, 2), &QuadraticSurd::one(), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(incomm_certificate(&e).unwrap().verdict, Verdict::Incommensurable);
    }

    #[test]
    fn truncated_is_inconclusive() {
        let Err(AnthError::StepCapExceeded(partial)) = surd_anth(&s(0, 1, 19, 1), 2) else {
            panic!("expected a truncated expansion");
        };
        assert_eq!(incomm_certificate(&partial), Err(AnthError::Inconclusive));
    }

    #[test]
    fn json_witness() {
        let e = anth_pair(&s(0, 1, 2, 1), &QuadraticSurd::one(), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(
            incomm_certificate(&e).unwrap().to_json().to_string(),
            r#"{"verdict":"Incommensurable","reason":"PeriodicHenceInfinite","witness":{"prefix":[1],"period":[2]}}"#
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn rationals_never_incommensurable(an in 1i64..1_000_000, ad in 1i64..1_000_000, bn in 1i64..1_000_000, bd in 1i64..1_000_000) {
            let a = QuadraticSurd::from_rational(&rational_make(an, ad).unwrap());
            let b = QuadraticSurd::from_rational(&rational_make(bn, bd).unwrap());
            let e = anth_pair(&a, &b, DEFAULT_MAX_STEPS).unwrap();
            prop_assert_eq!(incomm_certificate(&e).unwrap().verdict, Verdict::Commensurable);
        }
    }
}
