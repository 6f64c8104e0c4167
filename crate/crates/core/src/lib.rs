//! Cyclic-symmetric A∞-categories over exact fields.
//!
//! The crate builds, for every finite subset `S` of the circle, a small
//! A∞-category whose objects are the points of `S`, together with its
//! twisted-complex envelope and the contravariant pullback functors induced
//! by degree-one maps of circles. Every structure map is computed exactly, and
//! the law checkers in [`ainf`] verify the A∞ and functor equations on
//! explicit finite families of inputs.
#![no_std]

extern crate alloc;

pub mod ainf;
pub mod categories;
pub mod combo;
pub mod comparison;
pub mod cyclic;
pub mod field;
pub mod functors;
pub mod linalg;
pub mod quiver;
pub mod ribbon;
pub mod twisted;
