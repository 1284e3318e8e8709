//! placeholder
#[derive(Clone, Debug)]
pub struct WeightedCutGraph<T> { pub _w: Vec<T> }
