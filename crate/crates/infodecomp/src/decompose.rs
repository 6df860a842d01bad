use crate::dist::JointDistribution3;
use crate::error::Result;
use crate::measures::entropy_unchecked;

/// Split of the total information the predictor pair (Y1, Y2) carries about
/// the outcome X into redundant, unique, and synergistic parts, all in bits.
/// The four parts sum to `total`; each is non-negative up to f64 rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialDecomposition {
    pub total: f64,
    pub redundancy: f64,
    pub unique_y1: f64,
    pub unique_y2: f64,
    pub synergy: f64,
    /// total - I(X;Y1) - I(X;Y2): positive when synergy outweighs redundancy.
    pub interaction_info: f64,
    pub mi_y1: f64,
    pub mi_y2: f64,
}

/// Per-outcome-state decomposition. Only states with positive probability
/// appear; their probability-weighted component averages reproduce the
/// global decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecificDecomposition {
    pub states: Vec<SpecificState>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecificState {
    pub x: usize,
    /// p(x), the averaging weight.
    pub weight: f64,
    pub total: f64,
    pub redundancy: f64,
    pub unique_y1: f64,
    pub unique_y2: f64,
    pub synergy: f64,
}

pub fn decompose(dist: &JointDistribution3) -> PartialDecomposition {
    let mi_y1 = dist.xy1().mutual_information();
    let mi_y2 = dist.xy2().mutual_information();
    let total = dist.total_information();
    let redundancy = dist.redundancy();
    let unique_y1 = mi_y1 - redundancy;
    let unique_y2 = mi_y2 - redundancy;
    let synergy = total - redundancy - unique_y1 - unique_y2;
    PartialDecomposition {
        total,
        redundancy,
        unique_y1,
        unique_y2,
        synergy,
        interaction_info: total - mi_y1 - mi_y2,
        mi_y1,
        mi_y2,
    }
}

pub fn specific_decompose(dist: &JointDistribution3) -> Result<SpecificDecomposition> {
    let px = dist.marginal_x();
    let xy1 = dist.xy1();
    let xy2 = dist.xy2();
    let mut states = Vec::new();
    for (x, &weight) in px.iter().enumerate() {
        if weight <= 0.0 {
            continue;
        }
        let s1 = xy1.specific_information(x)?;
        let s2 = xy2.specific_information(x)?;
        let total = dist.specific_total_information(x)?;
        let redundancy = s1.min(s2);
        let unique_y1 = s1 - redundancy;
        let unique_y2 = s2 - redundancy;
        let synergy = total - redundancy - unique_y1 - unique_y2;
        states.push(SpecificState {
            x,
            weight,
            total,
            redundancy,
            unique_y1,
            unique_y2,
            synergy,
        });
    }
    Ok(SpecificDecomposition { states })
}

impl SpecificDecomposition {
    /// Probability-weighted average of one component across states.
    pub fn average(&self, component: impl Fn(&SpecificState) -> f64) -> f64 {
        self.states.iter().map(|s| s.weight * component(s)).sum()
    }
}

impl PartialDecomposition {
    /// Component values labeled for reporting, in a fixed order.
    pub fn components(&self) -> [(&'static str, f64); 4] {
        [
            ("redundancy", self.redundancy),
            ("unique_y1", self.unique_y1),
            ("unique_y2", self.unique_y2),
            ("synergy", self.synergy),
        ]
    }
}

/// Entropy in bits of the outcome marginal of a joint distribution.
pub fn outcome_entropy(dist: &JointDistribution3) -> f64 {
    entropy_unchecked(dist.marginal_x().into_iter())
}
