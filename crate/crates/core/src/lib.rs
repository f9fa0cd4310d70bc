//! Exact analysis of plane arrangements of lines and smooth conics.

pub mod analysis;
pub mod bounds;
pub mod classify;
pub mod geometry;
pub mod linalg;
pub mod milnor;
pub mod numbers;
pub mod poly;
pub mod verify;
