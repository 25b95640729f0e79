//! Moves applied to diagrams to produce pairs that must share a bracket.

use super::graph::{Crossing, Sign, TangleDiagram, Terminal};
use super::{DiagramError, Endpoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlypeKind {
    /// Positive crossing moved from the west side of the box to the east.
    ClassicalLeft,
    /// Negative crossing moved from the east side of the box to the west.
    ClassicalRight,
    Virtual,
}

impl FlypeKind {
    pub const ALL: [FlypeKind; 3] = [
        FlypeKind::ClassicalLeft,
        FlypeKind::ClassicalRight,
        FlypeKind::Virtual,
    ];
}

/// Both sides of a flype around the box `p`: a crossing on one side of `p`,
/// and on the other side of the half-turned box.
pub fn flype_pair(p: &TangleDiagram, kind: FlypeKind) -> (TangleDiagram, TangleDiagram) {
    let turned = p.rotate_pi();
    match kind {
        FlypeKind::ClassicalLeft => {
            let c = TangleDiagram::single(Crossing::Classical(Sign::Pos));
            (c.plus(p), turned.plus(&c))
        }
        FlypeKind::ClassicalRight => {
            let c = TangleDiagram::single(Crossing::Classical(Sign::Neg));
            (p.plus(&c), c.plus(&turned))
        }
        FlypeKind::Virtual => {
            let x = TangleDiagram::virtual_crossing();
            (x.plus(p), turned.plus(&x))
        }
    }
}

/// Replaces classical crossing `idx` by `X + c + X`: the crossing keeps its
/// local type, but the two virtual crossings swap which outer strands meet
/// it, so seen from outside its over/under information is switched.
pub fn virtualize_crossing(t: &TangleDiagram, idx: usize) -> Result<TangleDiagram, DiagramError> {
    use Endpoint::*;
    match t.nodes().get(idx) {
        None => return Err(DiagramError::NoSuchCrossing(idx)),
        Some(Crossing::Virtual) => return Err(DiagramError::NotClassical(idx)),
        Some(Crossing::Classical(_)) => {}
    }
    let mut out = t.clone();
    let west = out.push_node(Crossing::Virtual);
    let east = out.push_node(Crossing::Virtual);
    let outer = |p: Endpoint| match p {
        Nw => Terminal::Port(west, Nw),
        Sw => Terminal::Port(west, Sw),
        Ne => Terminal::Port(east, Ne),
        Se => Terminal::Port(east, Se),
    };
    let old: [Terminal; 4] = Endpoint::ALL.map(|p| t.partner(Terminal::Port(idx, p)));
    for p in Endpoint::ALL {
        let q = match old[p as usize] {
            Terminal::Port(k, e) if k == idx => outer(e),
            q => q,
        };
        out.connect(outer(p), q);
    }
    out.connect(Terminal::Port(idx, Nw), Terminal::Port(west, Ne));
    out.connect(Terminal::Port(idx, Sw), Terminal::Port(west, Se));
    out.connect(Terminal::Port(idx, Ne), Terminal::Port(east, Nw));
    out.connect(Terminal::Port(idx, Se), Terminal::Port(east, Sw));
    out.check();
    Ok(out)
}

/// Adds a curl on the strand ending at `endpoint`. A positive kink multiplies
/// the bracket by `-A^3`, a negative one by `-A^-3`.
pub fn insert_kink(t: &TangleDiagram, endpoint: Endpoint, positive: bool) -> TangleDiagram {
    use Endpoint::*;
    let sign = if positive { Sign::Neg } else { Sign::Pos };
    let mut out = t.clone();
    let end = Terminal::Boundary(endpoint);
    let q = t.partner(end);
    let k = out.push_node(Crossing::Classical(sign));
    out.connect(q, Terminal::Port(k, Nw));
    out.connect(Terminal::Port(k, Ne), Terminal::Port(k, Se));
    out.connect(Terminal::Port(k, Sw), end);
    out.check();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn virtualize_wiring() {
        let c = TangleDiagram::single(Crossing::Classical(Sign::Pos));
        let v = virtualize_crossing(&c, 0).unwrap();
        let x = TangleDiagram::virtual_crossing();
        let expected = x.plus(&c).plus(&x);
        assert_eq!(v.crossing_count(), 3);
        assert_eq!(v.classical_count(), 1);
        // same wiring up to node order: X(1) + c(0) + X(2)
        for p in Endpoint::ALL {
            let a = v.partner(Terminal::Boundary(p));
            let b = expected.partner(Terminal::Boundary(p));
            let relabel = |t: Terminal| match t {
                Terminal::Port(0, e) => Terminal::Port(1, e),
                Terminal::Port(1, e) => Terminal::Port(0, e),
                t => t,
            };
            assert_eq!(a, relabel(b));
        }
    }

    #[test]
    fn virtualize_rejects_bad_index() {
        let x = TangleDiagram::virtual_crossing();
        assert_eq!(
            virtualize_crossing(&x, 0),
            Err(DiagramError::NotClassical(0))
        );
        assert_eq!(
            virtualize_crossing(&x, 3),
            Err(DiagramError::NoSuchCrossing(3))
        );
    }

    #[test]
    fn virtualize_handles_self_arcs() {
        let k = insert_kink(&TangleDiagram::horizontal_strands(), Endpoint::Ne, true);
        let v = virtualize_crossing(&k, 0).unwrap();
        assert_eq!(v.crossing_count(), 3);
    }

    #[test]
    fn kink_adds_one_crossing() {
        let z = TangleDiagram::horizontal_strands();
        let k = insert_kink(&z, Endpoint::Ne, true);
        assert_eq!(k.nodes(), &[Crossing::Classical(Sign::Neg)]);
        assert_eq!(
            k.partner(Terminal::Boundary(Endpoint::Ne)),
            Terminal::Port(0, Endpoint::Sw)
        );
        assert_eq!(
            k.partner(Terminal::Boundary(Endpoint::Nw)),
            Terminal::Port(0, Endpoint::Nw)
        );
        assert_eq!(
            k.partner(Terminal::Port(0, Endpoint::Ne)),
            Terminal::Port(0, Endpoint::Se)
        );
    }

    #[test]
    fn flype_sides_have_same_size() {
        let p = TangleDiagram::single(Crossing::Classical(Sign::Neg))
            .star(&TangleDiagram::virtual_crossing());
        for kind in FlypeKind::ALL {
            let (a, b) = flype_pair(&p, kind);
            assert_eq!(a.crossing_count(), 3);
            assert_eq!(b.crossing_count(), 3);
        }
    }
}
