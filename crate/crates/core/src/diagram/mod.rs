//! Tangle vectors and four-ended port-graph diagrams, with the moves used to
//! generate test diagrams.

mod build;
mod graph;
mod moves;
mod twist;
mod vector;

pub use build::{build_basic, elementary};
pub use graph::{Combine, Crossing, Sign, TangleDiagram, Terminal};
pub use moves::{flype_pair, insert_kink, virtualize_crossing, FlypeKind};
pub use twist::{reduce_twist_region, Letter, TwistWord};
pub use vector::{parse_vector, Entry, Orientation, TangleVector, Twist};

/// The four boundary positions of a tangle, also used for the ports of a
/// crossing in its own frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Endpoint {
    Nw = 0,
    Ne = 1,
    Sw = 2,
    Se = 3,
}

impl Endpoint {
    pub const ALL: [Endpoint; 4] = [Endpoint::Nw, Endpoint::Ne, Endpoint::Sw, Endpoint::Se];

    /// Diagonally opposite position.
    pub fn opposite(self) -> Self {
        Self::ALL[3 - self as usize]
    }

    /// Image under a quarter turn clockwise.
    pub fn clockwise(self) -> Self {
        match self {
            Endpoint::Nw => Endpoint::Ne,
            Endpoint::Ne => Endpoint::Se,
            Endpoint::Se => Endpoint::Sw,
            Endpoint::Sw => Endpoint::Nw,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Horizontal,
    Vertical,
}

impl core::fmt::Display for Axis {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Axis::Horizontal => "horizontal",
            Axis::Vertical => "vertical",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("terminal {0:?} is not joined by any arc")]
    UnpairedTerminal(Terminal),
    #[error("terminal {0:?} is used by more than one arc")]
    DuplicateTerminal(Terminal),
    #[error("no crossing with index {0}")]
    NoSuchCrossing(usize),
    #[error("crossing {0} is virtual, expected a classical crossing")]
    NotClassical(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum VectorError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax {
        offset: usize,
        message: &'static str,
    },
    #[error("a tangle vector needs at least one entry")]
    Empty,
    #[error("entry {position}: inf is only allowed as the first entry")]
    InfinityNotFirst { position: usize },
    #[error("inf cannot carry a virtual crossing")]
    VirtualInfinity,
    #[error("entry {position}: interior {axis} entry may not be the trivial 0 tangle")]
    TrivialInterior { position: usize, axis: Axis },
}

/// A twist region whose classical crossings do not all have the same sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("twist region mixes positive and negative crossings")]
pub struct MixedSignError;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoint_maps() {
        for e in Endpoint::ALL {
            assert_eq!(e.opposite().opposite(), e);
            assert_eq!(e.clockwise().clockwise(), e.opposite());
            assert_eq!(e.clockwise().clockwise().clockwise().clockwise(), e);
        }
        assert_eq!(Endpoint::Nw.opposite(), Endpoint::Se);
        assert_eq!(Endpoint::Ne.opposite(), Endpoint::Sw);
    }
}
