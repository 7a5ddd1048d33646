//! One-shot LLM design-pattern detection over Java codebases, with
//! hallucination-aware scoring against ground-truth role annotations.

pub mod annotations;
pub mod config;
pub mod corpus;
pub mod detection;
pub mod evaluation;
pub mod gateway;
pub mod pipeline;
pub mod promptgen;
pub mod report;
