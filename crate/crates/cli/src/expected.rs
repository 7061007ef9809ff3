//! Closed-form Noether numbers for reduced Z/p-modules.

use serde::{Deserialize, Serialize};

use modinv_core::ModuleSpec;

/// Which closed form applies, decided by the reduced block multiset alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BetaRule {
    /// Some summand V_n with n ≥ 4: k(p-1) + p - 2.
    LargeBlock,
    /// mV_2 + lV_3 with l > 0: k(p-1) + 1.
    HasV3,
    /// V_2 or 2V_2: p.
    Kv2Small,
    /// kV_2 with k ≥ 3: k(p-1).
    Kv2Large,
    /// Only trivial summands; β = 1 by convention.
    Trivial,
}

impl BetaRule {
    pub fn name(&self) -> &'static str {
        match self {
            BetaRule::LargeBlock => "large_block",
            BetaRule::HasV3 => "has_v3",
            BetaRule::Kv2Small => "kv2_small",
            BetaRule::Kv2Large => "kv2_large",
            BetaRule::Trivial => "trivial",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedBeta {
    pub spec: ModuleSpec,
    pub value: usize,
    pub rule: BetaRule,
}

pub fn expected_beta(spec: &ModuleSpec) -> ExpectedBeta {
    let blocks = spec.reduced_blocks();
    let k = blocks.len();
    let p = spec.p() as usize;
    let (value, rule) = if blocks.is_empty() {
        (1, BetaRule::Trivial)
    } else if blocks.iter().any(|&d| d >= 4) {
        (k * (p - 1) + p - 2, BetaRule::LargeBlock)
    } else if blocks.contains(&3) {
        (k * (p - 1) + 1, BetaRule::HasV3)
    } else if k <= 2 {
        (p, BetaRule::Kv2Small)
    } else {
        (k * (p - 1), BetaRule::Kv2Large)
    };
    ExpectedBeta {
        spec: spec.clone(),
        value,
        rule,
    }
}
