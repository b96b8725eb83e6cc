//! Theta lifts of unipotent representations between unitary groups of
//! opposite parity.

use serde::{Deserialize, Serialize};

use crate::partitions::{is_2transverse, partitions_of, Partition};

/// `m_{λ,λ′} ∈ {0, 1}`: whether `π_{λ′}` occurs in `Θ_{n,n′}(π_λ)`.
pub fn theta_multiplicity(lambda: &Partition, target: &Partition) -> u8 {
    u8::from(is_2transverse(&lambda.transpose(), &target.transpose()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaLift {
    pub source: Partition,
    pub target_size: usize,
    /// In canonical partition order.
    pub components: Vec<Partition>,
}

impl ThetaLift {
    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }
}

pub fn theta_lift(lambda: &Partition, target_size: usize) -> ThetaLift {
    let components = partitions_of(target_size)
        .filter(|t| theta_multiplicity(lambda, t) == 1)
        .collect();
    ThetaLift {
        source: lambda.clone(),
        target_size,
        components,
    }
}
