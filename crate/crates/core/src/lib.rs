//! Exact computation of genus-0 maximal-tangency log Gromov–Witten
//! invariants `N_d` for three pairs built from the plane:
//!
//! * toric boundary: tropical enumeration ([`tropical`]),
//! * a line and a conic: a sum over partitions fed by counts on the
//!   Hirzebruch surface `F₂` ([`degeneration`]),
//! * a nodal cubic: consistent completion of a two-line scattering diagram
//!   ([`scattering`]),
//!
//! plus the fans and intersection numbers of the toric models
//! ([`toricgeo`]). All arithmetic is over exact rationals ([`rational`],
//! [`series`]).

pub mod acceptance;
pub mod degeneration;
pub mod rational;
pub mod scattering;
pub mod series;
pub mod svg;
pub mod toricgeo;
pub mod tropical;

pub use rational::Rational;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] series::SeriesError),
    #[error(transparent)]
    Scatter(#[from] scattering::ScatterError),
    #[error(transparent)]
    Tropical(#[from] tropical::TropicalError),
    #[error(transparent)]
    Partition(#[from] degeneration::PartitionError),
    #[error(transparent)]
    Toric(#[from] toricgeo::ToricError),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Series(_) => "series",
            Error::Scatter(_) => "scattering",
            Error::Tropical(tropical::TropicalError::Degenerate(_)) => "degenerate",
            Error::Tropical(tropical::TropicalError::BoundExceeded { .. }) => "bound-exceeded",
            Error::Tropical(_) => "tropical",
            Error::Partition(_) => "partition",
            Error::Toric(_) => "toric",
        }
    }
}
