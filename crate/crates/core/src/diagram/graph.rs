use alloc::vec;
use alloc::vec::Vec;

use super::{DiagramError, Endpoint};

/// Local type of a classical crossing.
///
/// `Pos` means the over-strand runs along the NW-SE diagonal of the
/// crossing's own frame; its A-smoothing then joins NW-NE and SW-SE.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn of(n: i64) -> Self {
        if n < 0 {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Crossing {
    Classical(Sign),
    Virtual,
}

impl Crossing {
    pub fn is_classical(self) -> bool {
        matches!(self, Crossing::Classical(_))
    }
}

/// Either one of the four tangle endpoints or a port of a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Terminal {
    Boundary(Endpoint),
    Port(usize, Endpoint),
}

impl Terminal {
    pub(crate) fn index(self) -> usize {
        match self {
            Terminal::Boundary(e) => e as usize,
            Terminal::Port(node, e) => 4 + 4 * node + e as usize,
        }
    }

    pub(crate) fn from_index(idx: usize) -> Self {
        let pos = Endpoint::ALL[idx % 4];
        if idx < 4 {
            Terminal::Boundary(pos)
        } else {
            Terminal::Port(idx / 4 - 1, pos)
        }
    }
}

/// How two tangles are glued.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Combine {
    /// Left tangle's east endpoints to the right tangle's west endpoints.
    Plus,
    /// Upper tangle's south endpoints to the lower tangle's north endpoints.
    Star,
}

/// A four-ended tangle diagram stored as a port graph.
///
/// Every terminal (boundary endpoint or crossing port) is joined by an arc to
/// exactly one other terminal; `links` holds that involution by terminal
/// index. Closed components that meet no crossing are only counted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TangleDiagram {
    nodes: Vec<Crossing>,
    links: Vec<usize>,
    free_loops: usize,
}

impl TangleDiagram {
    /// Builds a diagram from an explicit arc list, checking that every
    /// terminal is used exactly once.
    pub fn from_arcs(
        nodes: Vec<Crossing>,
        arcs: &[(Terminal, Terminal)],
        free_loops: usize,
    ) -> Result<Self, DiagramError> {
        let size = 4 + 4 * nodes.len();
        let mut links = vec![usize::MAX; size];
        for &(a, b) in arcs {
            for t in [a, b] {
                if let Terminal::Port(node, _) = t {
                    if node >= nodes.len() {
                        return Err(DiagramError::NoSuchCrossing(node));
                    }
                }
            }
            let (ia, ib) = (a.index(), b.index());
            if ia == ib {
                return Err(DiagramError::DuplicateTerminal(a));
            }
            for (i, t) in [(ia, a), (ib, b)] {
                if links[i] != usize::MAX {
                    return Err(DiagramError::DuplicateTerminal(t));
                }
            }
            links[ia] = ib;
            links[ib] = ia;
        }
        if let Some(idx) = links.iter().position(|&l| l == usize::MAX) {
            return Err(DiagramError::UnpairedTerminal(Terminal::from_index(idx)));
        }
        Ok(Self {
            nodes,
            links,
            free_loops,
        })
    }

    fn from_links(nodes: Vec<Crossing>, links: Vec<usize>, free_loops: usize) -> Self {
        debug_assert_eq!(links.len(), 4 + 4 * nodes.len());
        debug_assert!(links
            .iter()
            .enumerate()
            .all(|(i, &j)| links[j] == i && i != j));
        Self {
            nodes,
            links,
            free_loops,
        }
    }

    /// The `[0]` tangle: NW-NE and SW-SE.
    pub fn horizontal_strands() -> Self {
        Self::from_links(Vec::new(), vec![1, 0, 3, 2], 0)
    }

    /// The `[inf]` tangle: NW-SW and NE-SE.
    pub fn vertical_strands() -> Self {
        Self::from_links(Vec::new(), vec![2, 3, 0, 1], 0)
    }

    /// A single crossing whose ports are wired to the matching endpoints.
    pub fn single(crossing: Crossing) -> Self {
        let links = vec![4, 5, 6, 7, 0, 1, 2, 3];
        Self::from_links(vec![crossing], links, 0)
    }

    /// The tangle consisting of one virtual crossing.
    pub fn virtual_crossing() -> Self {
        Self::single(Crossing::Virtual)
    }

    pub fn nodes(&self) -> &[Crossing] {
        &self.nodes
    }

    pub fn crossing_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn classical_count(&self) -> usize {
        self.nodes.iter().filter(|c| c.is_classical()).count()
    }

    pub fn virtual_count(&self) -> usize {
        self.nodes.len() - self.classical_count()
    }

    /// Indices of the classical crossings, in node order.
    pub fn classical_indices(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&k| self.nodes[k].is_classical())
            .collect()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn partner(&self, t: Terminal) -> Terminal {
        Terminal::from_index(self.links[t.index()])
    }

    pub(crate) fn links(&self) -> &[usize] {
        &self.links
    }

    /// Each arc once, as `(lower index, higher index)`.
    pub fn arcs(&self) -> Vec<(Terminal, Terminal)> {
        self.links
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i < j)
            .map(|(i, &j)| (Terminal::from_index(i), Terminal::from_index(j)))
            .collect()
    }

    /// Adds a closed loop disjoint from everything else.
    pub fn with_free_loop(&self) -> Self {
        let mut out = self.clone();
        out.free_loops += 1;
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        self.combine(other, Combine::Plus)
    }

    pub fn star(&self, other: &Self) -> Self {
        self.combine(other, Combine::Star)
    }

    /// Glues `other` to the east (`Plus`) or south (`Star`) of `self`.
    ///
    /// Arcs meeting at a glued endpoint are fused; components made only of
    /// glued arcs close up into free loops.
    pub fn combine(&self, other: &Self, op: Combine) -> Self {
        use Endpoint::*;
        let off = self.links.len();
        let total = off + other.links.len();
        // Raw terminal space: self's terminals, then other's.
        let raw_partner = |i: usize| -> usize {
            if i < off {
                self.links[i]
            } else {
                other.links[i - off] + off
            }
        };
        // Glued endpoint pairs (self boundary, other boundary).
        let glued: [(Endpoint, Endpoint); 2] = match op {
            Combine::Plus => [(Ne, Nw), (Se, Sw)],
            Combine::Star => [(Sw, Nw), (Se, Ne)],
        };
        let mut glue = vec![usize::MAX; total];
        for (a, b) in glued {
            glue[a as usize] = off + b as usize;
            glue[off + b as usize] = a as usize;
        }
        // Outer boundary: which raw boundary terminal becomes each endpoint.
        let outer: [usize; 4] = match op {
            Combine::Plus => [
                Nw as usize,
                off + Ne as usize,
                Sw as usize,
                off + Se as usize,
            ],
            Combine::Star => [
                Nw as usize,
                Ne as usize,
                off + Sw as usize,
                off + Se as usize,
            ],
        };
        let n_self = self.nodes.len();
        let new_index = |raw: usize| -> usize {
            if raw < off {
                if raw < 4 {
                    outer
                        .iter()
                        .position(|&o| o == raw)
                        .expect("outer endpoint")
                } else {
                    raw
                }
            } else {
                let local = raw - off;
                if local < 4 {
                    outer
                        .iter()
                        .position(|&o| o == raw)
                        .expect("outer endpoint")
                } else {
                    local + 4 * n_self
                }
            }
        };
        let is_glue = |raw: usize| glue[raw] != usize::MAX;

        let mut links = vec![usize::MAX; 4 + 4 * (n_self + other.nodes.len())];
        let mut seen_glue = vec![false; total];
        for raw in 0..total {
            if is_glue(raw) {
                continue;
            }
            let mut y = raw_partner(raw);
            while is_glue(y) {
                seen_glue[y] = true;
                seen_glue[glue[y]] = true;
                y = raw_partner(glue[y]);
            }
            links[new_index(raw)] = new_index(y);
        }
        let mut free_loops = self.free_loops + other.free_loops;
        for start in 0..total {
            if !is_glue(start) || seen_glue[start] {
                continue;
            }
            free_loops += 1;
            let mut y = start;
            loop {
                seen_glue[y] = true;
                let z = raw_partner(y);
                seen_glue[z] = true;
                y = glue[z];
                if y == start {
                    break;
                }
            }
        }
        let mut nodes = self.nodes.clone();
        nodes.extend_from_slice(&other.nodes);
        Self::from_links(nodes, links, free_loops)
    }

    fn relabel(
        &self,
        map: impl Fn(Endpoint) -> Endpoint,
        node: impl Fn(Crossing) -> Crossing,
    ) -> Self {
        let image = |idx: usize| -> usize {
            match Terminal::from_index(idx) {
                Terminal::Boundary(e) => Terminal::Boundary(map(e)).index(),
                Terminal::Port(k, e) => Terminal::Port(k, map(e)).index(),
            }
        };
        let mut links = vec![0; self.links.len()];
        for (i, &j) in self.links.iter().enumerate() {
            links[image(i)] = image(j);
        }
        let nodes = self.nodes.iter().map(|&c| node(c)).collect();
        Self::from_links(nodes, links, self.free_loops)
    }

    /// Rotation by a half turn in the plane: NW<->SE, NE<->SW. Crossing types
    /// are unchanged since a half-turned crossing is the same crossing.
    pub fn rotate_pi(&self) -> Self {
        self.relabel(Endpoint::opposite, |c| c)
    }

    /// Rotation by a quarter turn clockwise. Classical crossing types flip,
    /// because the A-smoothing of a rotated crossing joins the other pair.
    pub fn rotate_quarter(&self) -> Self {
        self.relabel(Endpoint::clockwise, |c| match c {
            Crossing::Classical(s) => Crossing::Classical(s.flip()),
            Crossing::Virtual => Crossing::Virtual,
        })
    }

    pub(crate) fn push_node(&mut self, c: Crossing) -> usize {
        self.nodes.push(c);
        let base = self.links.len();
        self.links.extend_from_slice(&[usize::MAX; 4]);
        (base - 4) / 4
    }

    pub(crate) fn connect(&mut self, a: Terminal, b: Terminal) {
        let (ia, ib) = (a.index(), b.index());
        self.links[ia] = ib;
        self.links[ib] = ia;
    }

    pub(crate) fn check(&self) {
        debug_assert!(self
            .links
            .iter()
            .enumerate()
            .all(|(i, &j)| j < self.links.len() && self.links[j] == i && i != j));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Endpoint::*;

    #[test]
    fn terminal_index_round_trip() {
        for idx in 0..40 {
            assert_eq!(Terminal::from_index(idx).index(), idx);
        }
    }

    #[test]
    fn from_arcs_validates() {
        let ok = TangleDiagram::from_arcs(
            Vec::new(),
            &[
                (Terminal::Boundary(Nw), Terminal::Boundary(Ne)),
                (Terminal::Boundary(Sw), Terminal::Boundary(Se)),
            ],
            0,
        )
        .unwrap();
        assert_eq!(ok, TangleDiagram::horizontal_strands());

        let missing = TangleDiagram::from_arcs(
            Vec::new(),
            &[(Terminal::Boundary(Nw), Terminal::Boundary(Ne))],
            0,
        );
        assert_eq!(
            missing,
            Err(DiagramError::UnpairedTerminal(Terminal::Boundary(Sw)))
        );

        let dup = TangleDiagram::from_arcs(
            Vec::new(),
            &[
                (Terminal::Boundary(Nw), Terminal::Boundary(Ne)),
                (Terminal::Boundary(Nw), Terminal::Boundary(Se)),
            ],
            0,
        );
        assert_eq!(
            dup,
            Err(DiagramError::DuplicateTerminal(Terminal::Boundary(Nw)))
        );

        let bad = TangleDiagram::from_arcs(
            Vec::new(),
            &[(Terminal::Boundary(Nw), Terminal::Port(0, Nw))],
            0,
        );
        assert_eq!(bad, Err(DiagramError::NoSuchCrossing(0)));
    }

    #[test]
    fn zero_plus_zero_is_zero() {
        let z = TangleDiagram::horizontal_strands();
        assert_eq!(z.plus(&z), z);
    }

    #[test]
    fn zero_star_zero_closes_a_loop() {
        let z = TangleDiagram::horizontal_strands();
        let s = z.star(&z);
        assert_eq!(s.free_loops(), 1);
        assert_eq!(s.crossing_count(), 0);
        assert_eq!(s.partner(Terminal::Boundary(Nw)), Terminal::Boundary(Ne));
        assert_eq!(s.partner(Terminal::Boundary(Sw)), Terminal::Boundary(Se));
    }

    #[test]
    fn inf_star_inf_is_inf_without_loops() {
        let v = TangleDiagram::vertical_strands();
        assert_eq!(v.star(&v), v);
        assert_eq!(v.plus(&v).free_loops(), 1);
    }

    #[test]
    fn one_plus_one_wiring() {
        let c = TangleDiagram::single(Crossing::Classical(Sign::Pos));
        let two = c.plus(&c);
        assert_eq!(two.crossing_count(), 2);
        assert_eq!(two.partner(Terminal::Port(0, Ne)), Terminal::Port(1, Nw));
        assert_eq!(two.partner(Terminal::Port(0, Se)), Terminal::Port(1, Sw));
        assert_eq!(two.partner(Terminal::Boundary(Ne)), Terminal::Port(1, Ne));
        assert_eq!(two.partner(Terminal::Boundary(Nw)), Terminal::Port(0, Nw));
    }

    #[test]
    fn rotations() {
        let z = TangleDiagram::horizontal_strands();
        assert_eq!(z.rotate_pi(), z);
        assert_eq!(z.rotate_quarter(), TangleDiagram::vertical_strands());
        let c = TangleDiagram::single(Crossing::Classical(Sign::Pos));
        assert_eq!(c.rotate_pi(), c);
        assert_eq!(
            c.rotate_quarter(),
            TangleDiagram::single(Crossing::Classical(Sign::Neg))
        );
        let t = c.plus(&TangleDiagram::virtual_crossing()).star(&c);
        assert_eq!(t.rotate_pi().rotate_pi(), t);
        assert_eq!(t.rotate_quarter().rotate_quarter(), t.rotate_pi());
    }
}
