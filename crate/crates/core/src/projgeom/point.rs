use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::Zero;

use super::{GeomError, Result};
use crate::polyring::Rational;

/// A point of P^4 given by five homogeneous coordinates.
///
/// Equality and hashing go through the canonical representative whose
/// first nonzero coordinate is 1.
#[derive(Clone)]
pub struct ProjPoint {
    coords: [Rational; 5],
}

impl ProjPoint {
    pub fn new(coords: [Rational; 5]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(GeomError::ZeroPoint);
        }
        Ok(Self { coords })
    }

    pub fn from_slice(coords: &[Rational]) -> Result<Self> {
        let arr: [Rational; 5] =
            coords
                .to_vec()
                .try_into()
                .map_err(|v: Vec<Rational>| GeomError::ContextSize {
                    expected: 5,
                    got: v.len(),
                })?;
        Self::new(arr)
    }

    pub fn coords(&self) -> &[Rational; 5] {
        &self.coords
    }

    pub fn canonical(&self) -> [Rational; 5] {
        let lead = self
            .coords
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero by construction")
            .clone();
        self.coords.clone().map(|c| c / &lead)
    }

    pub fn scaled(&self, c: &Rational) -> Result<Self> {
        Self::new(self.coords.clone().map(|x| x * c))
    }

    /// On the hyperplane at infinity `z0 = 0`.
    pub fn is_at_infinity(&self) -> bool {
        self.coords[0].is_zero()
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for ProjPoint {}

impl Hash for ProjPoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", c.join(" : "))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjPoint{self}")
    }
}
