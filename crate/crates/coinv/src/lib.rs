//! Exact-arithmetic toolkit for descent representations of the generalized
//! coinvariant algebras `R_{n,k}` (symmetric group) and `S_{n,k}` (wreath
//! products `G(r,1,n)`), together with an independent linear-algebra oracle
//! and the point-orbit top-degree-ideal algorithm for `D_n`.
//!
//! The crate is organized around the objects it computes with:
//!
//! - [`combinatorics`]: partitions, (colored) permutations, descent
//!   statistics, dominance order, q-binomial coefficients.
//! - [`tableaux`]: standard / semistandard / standard r-tableaux with
//!   descent sets, and the RSK correspondence.
//! - [`symfunc`]: exact multivariate polynomials, Schur / elementary /
//!   homogeneous / ribbon-Schur polynomials, Schur expansion, omega.
//! - [`descent_monomials`]: descent monomial bases, the straightening
//!   algorithm, and the partition decompositions behind them.
//! - [`representations`]: closed-form multiplicities of irreducibles in the
//!   refined components `R_{n,k,rho}` and `S_{n,k,rho}`, graded generating
//!   functions, Frobenius images and the ribbon-product identity.
//! - [`oracle`]: brute-force ground truth: explicit graded quotients by
//!   exact row reduction, graded traces, Murnaghan-Nakayama character
//!   tables (plain and wreath), and character decompositions.
//! - [`points_ideal`]: vanishing ideals of finite point orbits, top-degree
//!   forms, and the null-space algorithm computing standard monomials and
//!   Hilbert series of `C[x]/T(X)`.
//! - [`cli`]: the `coinv` command-line front end.
//!
//! All arithmetic is exact: `BigRational` coefficients, cyclotomic integers
//! for wreath characters, and quadratic extensions `Q(sqrt(d))` for point
//! coordinates. No floating point anywhere.

pub mod cli;
pub mod combinatorics;
pub mod descent_monomials;
pub mod error;
pub mod oracle;
pub mod points_ideal;
pub mod representations;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
