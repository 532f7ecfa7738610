pub mod align;
pub mod bench;
pub mod correlate;
pub mod eval;
pub mod synth;
