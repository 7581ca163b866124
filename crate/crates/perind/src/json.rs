//! JSON serialization of isolation plans.
//!
//! One object per plan, keys in a fixed order:
//! `prime, s, a, ell, g, r, diagram, N, vpN, conditions, strategy`.
//! `N` is a decimal string; `a` and `g` are `null` when not applicable.

use perind_core::IsolationPlan;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionsRecord {
    pub crt_ell: bool,
    pub crt_p: bool,
    pub valuation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanRecord {
    pub prime: u64,
    pub s: u64,
    pub a: Option<u32>,
    pub ell: u64,
    pub g: Option<u32>,
    pub r: u64,
    pub diagram: String,
    #[serde(rename = "N")]
    pub n: String,
    #[serde(rename = "vpN")]
    pub vp_n: u64,
    pub conditions: ConditionsRecord,
    pub strategy: String,
}

impl From<&IsolationPlan> for PlanRecord {
    fn from(plan: &IsolationPlan) -> Self {
        PlanRecord {
            prime: plan.prime.get(),
            s: plan.s,
            a: plan.a,
            ell: plan.ell,
            g: plan.g,
            r: plan.r,
            diagram: plan.diagram.to_string(),
            n: plan.n.to_string(),
            vp_n: plan.vp_n,
            conditions: ConditionsRecord {
                crt_ell: plan.conditions.crt_ell,
                crt_p: plan.conditions.crt_p,
                valuation: plan.conditions.valuation,
            },
            strategy: plan.strategy.to_string(),
        }
    }
}

pub fn plan_to_json(plan: &IsolationPlan) -> String {
    serde_json::to_string_pretty(&PlanRecord::from(plan)).expect("plan records always serialize")
}

pub fn plans_to_json(plans: &[IsolationPlan]) -> String {
    let records: Vec<PlanRecord> = plans.iter().map(PlanRecord::from).collect();
    serde_json::to_string_pretty(&records).expect("plan records always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use perind_core::planner::find_minimal_r;
    use perind_core::Prime;

    #[test]
    fn key_order_and_values() {
        let plan = find_minimal_r(36, Prime::new(2).unwrap(), 2, 9, 1000).unwrap();
        let text = serde_json::to_string(&PlanRecord::from(&plan)).unwrap();
        assert_eq!(
            text,
            r#"{"prime":2,"s":2,"a":2,"ell":9,"g":null,"r":9,"diagram":"9","N":"708930508","vpN":2,"conditions":{"crt_ell":true,"crt_p":true,"valuation":true},"strategy":"minimal"}"#
        );
    }

    #[test]
    fn rejects_unknown_keys() {
        let text = r#"{"prime":2,"s":2,"a":2,"ell":9,"g":null,"r":9,"diagram":"9","N":"1","vpN":2,"conditions":{"crt_ell":true,"crt_p":true,"valuation":true},"strategy":"minimal","extra":1}"#;
        assert!(serde_json::from_str::<PlanRecord>(text).is_err());
    }
}
