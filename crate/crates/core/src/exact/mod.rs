//! Exact character theory for reflection groups and their Pin covers.

pub mod appendix;
pub mod cyclo;
pub mod dihedral;
pub mod dixon;
pub mod group;
pub mod labels;
pub mod modp;
pub mod noncrystal;
pub mod pin;
pub mod roots;

pub use cyclo::Cyc;
pub use group::{ConjClass, FiniteGroup};
pub use roots::{GroupName, ReflectionGroup, RootSystemSpec};
