use alloc::vec::Vec;

use super::graph::{Crossing, Sign, TangleDiagram};
use super::{Axis, MixedSignError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Classical(Sign),
    Virtual,
}

/// A single twist region read along its axis, as a word in its crossings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistWord {
    pub letters: Vec<Letter>,
    pub axis: Axis,
}

impl TwistWord {
    pub fn new(letters: Vec<Letter>, axis: Axis) -> Self {
        Self { letters, axis }
    }

    /// The twist region as drawn, crossings joined by `+` or `*`.
    pub fn to_diagram(&self) -> TangleDiagram {
        let (mut t, join): (
            TangleDiagram,
            fn(&TangleDiagram, &TangleDiagram) -> TangleDiagram,
        ) = match self.axis {
            Axis::Horizontal => (TangleDiagram::horizontal_strands(), TangleDiagram::plus),
            Axis::Vertical => (TangleDiagram::vertical_strands(), TangleDiagram::star),
        };
        for l in &self.letters {
            let c = match *l {
                Letter::Classical(s) => Crossing::Classical(s),
                Letter::Virtual => Crossing::Virtual,
            };
            t = join(&t, &TangleDiagram::single(c));
        }
        t
    }
}

/// Collects the virtual crossings of a same-sign twist region at one end and
/// cancels them in pairs, giving the elementary `(n, e)`.
pub fn reduce_twist_region(w: &TwistWord) -> Result<(i64, bool), MixedSignError> {
    let mut sign = None;
    let mut count = 0i64;
    let mut virtuals = 0usize;
    for l in &w.letters {
        match *l {
            Letter::Virtual => virtuals += 1,
            Letter::Classical(s) => {
                if *sign.get_or_insert(s) != s {
                    return Err(MixedSignError);
                }
                count += s.as_i64();
            }
        }
    }
    Ok((count, virtuals % 2 == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const P: Letter = Letter::Classical(Sign::Pos);
    const N: Letter = Letter::Classical(Sign::Neg);
    const V: Letter = Letter::Virtual;

    #[test]
    fn reductions() {
        let w = TwistWord::new(vec![P, V, P, V], Axis::Horizontal);
        assert_eq!(reduce_twist_region(&w), Ok((2, false)));
        assert_eq!(
            reduce_twist_region(&TwistWord::new(vec![V], Axis::Vertical)),
            Ok((0, true))
        );
        assert_eq!(
            reduce_twist_region(&TwistWord::new(vec![P, N], Axis::Horizontal)),
            Err(MixedSignError)
        );
        assert_eq!(
            reduce_twist_region(&TwistWord::new(vec![N, V, N, N], Axis::Vertical)),
            Ok((-3, true))
        );
        assert_eq!(
            reduce_twist_region(&TwistWord::new(Vec::new(), Axis::Vertical)),
            Ok((0, false))
        );
    }

    #[test]
    fn word_diagram_counts() {
        let d = TwistWord::new(vec![P, V, P, V], Axis::Horizontal).to_diagram();
        assert_eq!(d.classical_count(), 2);
        assert_eq!(d.virtual_count(), 2);
    }
}
