//! Exact computations on cuspidal projective plane curves: polynomial
//! arithmetic over the rationals, intersection multiplicities, embedded
//! resolution of cusps, fiber graph calculus and Cremona maps.

pub mod cli;
pub mod cremona;
pub mod curvealg;
pub mod exactpoly;
pub mod fibergraph;
pub mod resolution;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] exactpoly::PolyError),
    #[error(transparent)]
    Curve(#[from] curvealg::CurveError),
    #[error(transparent)]
    Extension(#[from] curvealg::ExtensionFieldSingularity),
    #[error(transparent)]
    Resolution(#[from] resolution::ResolutionError),
    #[error(transparent)]
    Fiber(#[from] fibergraph::FiberError),
    #[error(transparent)]
    Cremona(#[from] cremona::CremonaError),
}
