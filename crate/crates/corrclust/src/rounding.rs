//! placeholder
use crate::scalar::Scalar;
#[derive(Clone, Debug, PartialEq)]
pub struct CgwParams<T> { pub gamma: T, pub delta: T }
#[derive(Clone, Debug)]
pub struct RoundingCertificate<T> { pub rounded_objective: T }
pub fn _hold<T: Scalar>() {}
