use super::graph::{Crossing, Sign, TangleDiagram};
use super::vector::{TangleVector, Twist};
use super::Axis;

/// The elementary tangle `[n^e]` (horizontal) or `1/[n^e]` (vertical).
///
/// A horizontal `[n]` is `|n|` crossings of type `Sign::of(n)` joined by `+`;
/// the vertical one joins them by `*`. With `virtual_end` a virtual crossing
/// sits at the east end (horizontal) or south end (vertical).
pub fn elementary(n: i64, virtual_end: bool, axis: Axis) -> TangleDiagram {
    let (mut t, join): (
        TangleDiagram,
        fn(&TangleDiagram, &TangleDiagram) -> TangleDiagram,
    ) = match axis {
        Axis::Horizontal => (TangleDiagram::horizontal_strands(), TangleDiagram::plus),
        Axis::Vertical => (TangleDiagram::vertical_strands(), TangleDiagram::star),
    };
    let c = TangleDiagram::single(Crossing::Classical(Sign::of(n)));
    for _ in 0..n.unsigned_abs() {
        t = join(&t, &c);
    }
    if virtual_end {
        t = join(&t, &TangleDiagram::virtual_crossing());
    }
    t
}

/// The basic diagram `((([a_1] * 1/[a_2]) + [a_3]) * ...)` of a vector.
pub fn build_basic(v: &TangleVector) -> TangleDiagram {
    let v = v.normalized();
    let mut acc: Option<TangleDiagram> = None;
    for (idx, e) in v.entries().iter().enumerate() {
        let axis = v.axis(idx);
        let piece = match e.twist {
            Twist::Infinity => TangleDiagram::vertical_strands(),
            Twist::Finite(a) => elementary(a, e.virtual_end, axis),
        };
        acc = Some(match acc {
            None => piece,
            Some(t) => match axis {
                Axis::Horizontal => t.plus(&piece),
                Axis::Vertical => t.star(&piece),
            },
        });
    }
    acc.expect("validated vectors are nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{Endpoint, Terminal};

    #[test]
    fn trivial_elementaries() {
        assert_eq!(
            elementary(0, false, Axis::Horizontal),
            TangleDiagram::horizontal_strands()
        );
        assert_eq!(
            elementary(0, false, Axis::Vertical),
            TangleDiagram::vertical_strands()
        );
        assert_eq!(
            elementary(0, true, Axis::Horizontal),
            TangleDiagram::virtual_crossing()
        );
        assert_eq!(
            elementary(0, true, Axis::Vertical),
            TangleDiagram::virtual_crossing()
        );
    }

    #[test]
    fn two_twist_is_two_same_sign_crossings() {
        let t = elementary(2, false, Axis::Horizontal);
        assert_eq!(t.nodes(), &[Crossing::Classical(Sign::Pos); 2]);
        let one = TangleDiagram::single(Crossing::Classical(Sign::Pos));
        assert_eq!(t, one.plus(&one));
        let m = elementary(-3, true, Axis::Vertical);
        assert_eq!(m.classical_count(), 3);
        assert_eq!(m.virtual_count(), 1);
        assert_eq!(m.nodes()[3], Crossing::Virtual);
        // the virtual crossing is the southmost node
        assert_eq!(
            m.partner(Terminal::Boundary(Endpoint::Sw)),
            Terminal::Port(3, Endpoint::Sw)
        );
    }

    #[test]
    fn basic_diagram_shapes() {
        let v: TangleVector = "2".parse().unwrap();
        assert_eq!(build_basic(&v), elementary(2, false, Axis::Horizontal));
        let v: TangleVector = "2,3,1".parse().unwrap();
        let expected = elementary(2, false, Axis::Horizontal)
            .star(&elementary(3, false, Axis::Vertical))
            .plus(&elementary(1, false, Axis::Horizontal));
        let d = build_basic(&v);
        assert_eq!(d, expected);
        assert_eq!(d.crossing_count(), 6);
        let v: TangleVector = "inf,2".parse().unwrap();
        assert_eq!(build_basic(&v), elementary(2, false, Axis::Vertical));
    }

    #[test]
    fn crossing_count_matches_vector() {
        for text in ["1,-2v,3", "0v,1v,0v", "inf,4v,-1", "-5"] {
            let v: TangleVector = text.parse().unwrap();
            assert_eq!(
                build_basic(&v).crossing_count(),
                v.crossing_count(),
                "{text}"
            );
        }
    }
}
