//! placeholder
#[derive(Clone, Debug)]
pub struct GapReport<T> { pub _v: Vec<T> }
