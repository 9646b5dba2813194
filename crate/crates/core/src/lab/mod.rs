//! Finite truncations of the enumeration gadgets.
//!
//! r.e. sets are replaced by [`SetDescriptor`]s, whose classification
//! (finite, cofinite, …) is decidable. Each gadget has a builder producing a
//! finite class (or a [`StagedFamily`] when stages matter) and a verifier that
//! checks the finite-scale combinatorial claims about it. Verifiers never
//! consult the descriptor's classification to compute a verdict; it is only
//! used afterwards to check the verdict (and, where the construction itself
//! is case-split, to pick which claims apply).

pub mod descriptor;
pub mod gadgets;
pub mod recursive;
pub mod staged;

pub use descriptor::SetDescriptor;
pub use gadgets::{
    build_acds_gadget, build_t1_gadget, build_tdplus_gadget, build_xtdplus_gadget, refute_positive_teaching_set,
    verify_acds, verify_t1, verify_tdplus, verify_xtdplus, Refutation,
};
pub use recursive::{
    build_gan_gadget, build_lk_gadget, build_rtd_reduction, mover_count, verify_gan, verify_lk,
    verify_rtd_reduction, GanGadget,
};
pub use staged::{evaluate_stages, stage_restrict, Horizons, StagedFamily, StagedVerdict};

use alloc::string::String;
use alloc::vec::Vec;

/// One finite-scale claim and whether it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// The comparison between a verifier's verdict and the descriptor's ground
/// truth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linkage {
    /// The descriptor property the verdict predicts, e.g. `"cofinite"`.
    pub property: &'static str,
    pub predicted: bool,
    pub ground_truth: bool,
}

impl Linkage {
    pub fn holds(&self) -> bool {
        self.predicted == self.ground_truth
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabReport {
    pub gadget: &'static str,
    pub params: Vec<(String, String)>,
    pub horizons: Horizons,
    pub checks: Vec<Check>,
    pub linkage: Option<Linkage>,
}

impl LabReport {
    fn new(gadget: &'static str, horizons: Horizons) -> Self {
        LabReport {
            gadget,
            params: Vec::new(),
            horizons,
            checks: Vec::new(),
            linkage: None,
        }
    }

    fn param(&mut self, key: &str, value: impl core::fmt::Display) {
        self.params.push((key.into(), alloc::format!("{value}")));
    }

    fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.linkage.as_ref().map_or(true, Linkage::holds)
    }
}
