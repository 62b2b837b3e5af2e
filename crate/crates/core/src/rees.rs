//! Placeholder, replaced by the pipeline implementation.
pub struct Equation;
pub struct HypothesisReport;
pub struct Presentation;
pub struct ReesInput;
pub struct VerifyReport;
pub enum Verdict {}
pub enum HypothesisMode {}
