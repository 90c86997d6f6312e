//! Exact-arithmetic structure theory for finite-dimensional and
//! window-truncated graded Lie algebras over Q and single finite
//! extensions of Q.

pub mod families;
pub mod fdlie;
pub mod field;
pub mod graded;
pub mod identities;
pub mod json;
pub mod linalg;
pub mod roots;
