//! Kauffman bracket of a tangle diagram as a combination of the three
//! crossing-free four-ended tangles.
//!
//! Every state (one smoothing per classical crossing) leaves two boundary
//! strands and some closed loops; virtual crossings only route strands. The
//! strands realize one of three pairings, so the bracket is
//! `f <vertical> + g <horizontal> + h <crossed>`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::arith::{Cyc8, LaurentPoly};
use crate::diagram::{Axis, Crossing, Sign, TangleDiagram};

/// How the four endpoints are joined after smoothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pairing {
    /// NW-NE and SW-SE, the `[0]` tangle; coefficient `g`.
    Horizontal,
    /// NW-SW and NE-SE, the `[inf]` tangle; coefficient `f`.
    Vertical,
    /// NW-SE and NE-SW, the single virtual crossing; coefficient `h`.
    Crossed,
}

/// `(f, g, h)`: coefficients of the vertical, horizontal and crossed tangles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BracketTriple {
    pub f: LaurentPoly,
    pub g: LaurentPoly,
    pub h: LaurentPoly,
}

impl BracketTriple {
    pub fn new(f: LaurentPoly, g: LaurentPoly, h: LaurentPoly) -> Self {
        Self { f, g, h }
    }

    pub fn zero() -> Self {
        Self::new(
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
        )
    }

    /// Bracket of `[0]`.
    pub fn horizontal() -> Self {
        Self::new(LaurentPoly::zero(), LaurentPoly::one(), LaurentPoly::zero())
    }

    /// Bracket of `[inf]`.
    pub fn vertical() -> Self {
        Self::new(LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero())
    }

    /// Bracket of a lone virtual crossing.
    pub fn crossed() -> Self {
        Self::new(LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one())
    }

    pub fn coefficient(&self, p: Pairing) -> &LaurentPoly {
        match p {
            Pairing::Vertical => &self.f,
            Pairing::Horizontal => &self.g,
            Pairing::Crossed => &self.h,
        }
    }

    pub fn is_classical(&self) -> bool {
        self.h.is_zero()
    }

    pub fn scale(&self, k: &LaurentPoly) -> Self {
        Self::new(&self.f * k, &self.g * k, &self.h * k)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.f + &other.f, &self.g + &other.g, &self.h + &other.h)
    }

    /// Bracket of `T + S` from the brackets of `T` and `S`.
    pub fn plus(&self, s: &Self) -> Self {
        let (a, b, c) = (&self.f, &self.g, &self.h);
        let (d, e, f) = (&s.f, &s.g, &s.h);
        let delta = LaurentPoly::loop_factor();
        Self::new(
            &(a * d) * &delta + a * e + a * f + b * d + c * d,
            b * e + c * f,
            b * f + c * e,
        )
    }

    /// Bracket of `T * S` from the brackets of `T` and `S`.
    pub fn star(&self, s: &Self) -> Self {
        let (a, b, c) = (&self.f, &self.g, &self.h);
        let (d, e, f) = (&s.f, &s.g, &s.h);
        let delta = LaurentPoly::loop_factor();
        Self::new(
            a * d + c * f,
            a * e + b * d + &(b * e) * &delta + b * f + c * e,
            a * f + c * d,
        )
    }

    /// `T + X`: the virtual crossing swaps the horizontal and crossed terms.
    pub fn with_virtual_east(&self) -> Self {
        Self::new(self.f.clone(), self.h.clone(), self.g.clone())
    }

    /// `T * X`: the virtual crossing swaps the vertical and crossed terms.
    pub fn with_virtual_south(&self) -> Self {
        Self::new(self.h.clone(), self.g.clone(), self.f.clone())
    }

    /// `(f, g, h)` at `A = zeta_8`.
    pub fn eval_at_zeta8(&self) -> [Cyc8; 3] {
        [
            self.f.eval_at_zeta8(),
            self.g.eval_at_zeta8(),
            self.h.eval_at_zeta8(),
        ]
    }
}

impl core::fmt::Display for BracketTriple {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "f={}, g={}, h={}", self.f, self.g, self.h)
    }
}

/// Outcome of one state: the pairing, the closed loops (including free loops
/// of the diagram) and the number of A- and B-smoothings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StateResolution {
    pub pairing: Pairing,
    pub loops: usize,
    pub a_smoothings: usize,
    pub b_smoothings: usize,
}

impl StateResolution {
    /// `A^(#A - #B)`.
    pub fn weight(&self) -> LaurentPoly {
        LaurentPoly::a_pow(self.a_smoothings as i64 - self.b_smoothings as i64)
    }
}

/// Resolves the state in which classical crossing `k` (counted in node order,
/// virtual crossings skipped) takes its B-smoothing iff `b_choices[k]`.
///
/// # Panics
/// If `b_choices` does not have one entry per classical crossing.
pub fn resolve_state(t: &TangleDiagram, b_choices: &[bool]) -> StateResolution {
    let engine = StateSum::new(t);
    assert_eq!(
        b_choices.len(),
        engine.classical.len(),
        "one choice per classical crossing"
    );
    let mask = b_choices
        .iter()
        .enumerate()
        .fold(0u64, |m, (k, &b)| m | (u64::from(b) << k));
    let mut scratch = engine.scratch();
    let (pairing, loops) = engine.resolve(mask, &mut scratch);
    let b = mask.count_ones() as usize;
    StateResolution {
        pairing,
        loops: loops + t.free_loops(),
        a_smoothings: b_choices.len() - b,
        b_smoothings: b,
    }
}

/// Largest number of classical crossings the state sum accepts.
pub const MAX_CLASSICAL: usize = 40;

// Internal routing at a crossing is `port ^ code`: 1 joins NW-NE / SW-SE,
// 2 joins NW-SW / NE-SE, 3 joins the diagonals.
const JOIN_H: u8 = 1;
const JOIN_V: u8 = 2;
const JOIN_X: u8 = 3;

/// Brute-force state sum over a fixed diagram; the state space can be split
/// into ranges whose counts are merged afterwards.
#[derive(Clone, Debug)]
pub struct StateSum {
    links: Vec<u32>,
    base_code: Vec<u8>,
    classical: Vec<(usize, u8, u8)>,
    free_loops: usize,
}

/// Per-thread scratch for [`StateSum::resolve`].
#[derive(Clone, Debug)]
pub struct Scratch {
    code: Vec<u8>,
    stamp: Vec<u32>,
    generation: u32,
}

impl StateSum {
    /// # Panics
    /// If the diagram has more than [`MAX_CLASSICAL`] classical crossings.
    pub fn new(t: &TangleDiagram) -> Self {
        let mut base_code = Vec::with_capacity(t.nodes().len());
        let mut classical = Vec::new();
        for (k, c) in t.nodes().iter().enumerate() {
            match *c {
                Crossing::Virtual => base_code.push(JOIN_X),
                Crossing::Classical(s) => {
                    let (a, b) = match s {
                        Sign::Pos => (JOIN_H, JOIN_V),
                        Sign::Neg => (JOIN_V, JOIN_H),
                    };
                    classical.push((k, a, b));
                    base_code.push(a);
                }
            }
        }
        assert!(
            classical.len() <= MAX_CLASSICAL,
            "state sum limited to {MAX_CLASSICAL} classical crossings"
        );
        Self {
            links: t.links().iter().map(|&l| l as u32).collect(),
            base_code,
            classical,
            free_loops: t.free_loops(),
        }
    }

    pub fn classical_count(&self) -> usize {
        self.classical.len()
    }

    /// Number of states, `2^N`.
    pub fn state_count(&self) -> u64 {
        1u64 << self.classical.len()
    }

    pub fn scratch(&self) -> Scratch {
        Scratch {
            code: self.base_code.clone(),
            stamp: vec![0; self.links.len()],
            generation: 0,
        }
    }

    fn next_generation(s: &mut Scratch) -> u32 {
        s.generation = s.generation.wrapping_add(1);
        if s.generation == 0 {
            s.stamp.iter_mut().for_each(|x| *x = 0);
            s.generation = 1;
        }
        s.generation
    }

    /// Pairing and number of closed loops of state `mask` (bit `k` set means
    /// classical crossing `k` takes its B-smoothing). Free loops of the
    /// diagram are not included.
    pub fn resolve(&self, mask: u64, s: &mut Scratch) -> (Pairing, usize) {
        for (bit, &(node, a, b)) in self.classical.iter().enumerate() {
            s.code[node] = if mask >> bit & 1 == 1 { b } else { a };
        }
        let gen = Self::next_generation(s);
        let links = &self.links;
        // follow a strand from boundary terminal `start` to its other end
        let walk = |start: u32, s: &mut Scratch| -> u32 {
            s.stamp[start as usize] = gen;
            let mut i = start;
            loop {
                let j = links[i as usize];
                s.stamp[j as usize] = gen;
                if j < 4 {
                    return j;
                }
                let node = (j - 4) >> 2;
                let out = j ^ u32::from(s.code[node as usize]);
                s.stamp[out as usize] = gen;
                i = out;
            }
        };
        let end = walk(0, s);
        let pairing = match end {
            1 => Pairing::Horizontal,
            2 => Pairing::Vertical,
            _ => Pairing::Crossed,
        };
        let other = (1..4)
            .find(|&e| s.stamp[e as usize] != gen)
            .expect("second strand");
        walk(other, s);
        let mut loops = 0;
        for start in 4..links.len() as u32 {
            if s.stamp[start as usize] == gen {
                continue;
            }
            loops += 1;
            let mut i = start;
            loop {
                s.stamp[i as usize] = gen;
                let node = (i - 4) >> 2;
                let out = i ^ u32::from(s.code[node as usize]);
                s.stamp[out as usize] = gen;
                i = links[out as usize];
                if i == start {
                    break;
                }
            }
        }
        (pairing, loops)
    }

    /// Tallies the states with masks in `range`.
    pub fn count_range(&self, range: Range<u64>) -> StateCounts {
        let mut counts = StateCounts::empty(self);
        let mut scratch = self.scratch();
        for mask in range {
            let (p, loops) = self.resolve(mask, &mut scratch);
            let a = self.classical.len() - mask.count_ones() as usize;
            counts.bump(p, a, loops);
        }
        counts
    }

    pub fn bracket(&self) -> BracketTriple {
        self.count_range(0..self.state_count()).into_triple()
    }
}

/// Number of states by (pairing, A-smoothings, loops); additive over
/// disjoint ranges of states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateCounts {
    n: usize,
    max_loops: usize,
    free_loops: usize,
    counts: Vec<u64>,
}

impl StateCounts {
    pub fn empty(sum: &StateSum) -> Self {
        let n = sum.classical.len();
        // each loop uses at least two ports
        let max_loops = sum.links.len() / 2;
        Self {
            n,
            max_loops,
            free_loops: sum.free_loops,
            counts: vec![0; 3 * (n + 1) * (max_loops + 1)],
        }
    }

    fn slot(&self, p: Pairing, a: usize, loops: usize) -> usize {
        ((p as usize) * (self.n + 1) + a) * (self.max_loops + 1) + loops
    }

    fn bump(&mut self, p: Pairing, a: usize, loops: usize) {
        let k = self.slot(p, a, loops);
        self.counts[k] += 1;
    }

    pub fn merge(&mut self, other: &StateCounts) {
        assert_eq!(
            self.counts.len(),
            other.counts.len(),
            "counts from different diagrams"
        );
        for (x, y) in self.counts.iter_mut().zip(&other.counts) {
            *x += *y;
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn into_triple(self) -> BracketTriple {
        let delta = LaurentPoly::loop_factor();
        let mut delta_pow = Vec::with_capacity(self.max_loops + self.free_loops + 1);
        delta_pow.push(LaurentPoly::one());
        for k in 1..=self.max_loops + self.free_loops {
            let next = &delta_pow[k - 1] * &delta;
            delta_pow.push(next);
        }
        let mut out = [
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
        ];
        for (pi, p) in [Pairing::Horizontal, Pairing::Vertical, Pairing::Crossed]
            .into_iter()
            .enumerate()
        {
            for a in 0..=self.n {
                let exp = 2 * a as i64 - self.n as i64;
                for loops in 0..=self.max_loops {
                    let c = self.counts[self.slot(p, a, loops)];
                    if c != 0 {
                        out[pi] +=
                            delta_pow[loops + self.free_loops].scale_monomial(&c.into(), exp);
                    }
                }
            }
        }
        let [g, f, h] = out;
        BracketTriple::new(f, g, h)
    }
}

/// Exhaustive state sum over all `2^N` smoothings.
pub fn bracket(t: &TangleDiagram) -> BracketTriple {
    StateSum::new(t).bracket()
}

/// Closed-form bracket of `[n^e]` (horizontal) or `1/[n^e]` (vertical).
pub fn bracket_elementary(n: i64, virtual_end: bool, axis: Axis) -> BracketTriple {
    if n == 0 {
        return match (axis, virtual_end) {
            (_, true) => BracketTriple::crossed(),
            (Axis::Horizontal, false) => BracketTriple::horizontal(),
            (Axis::Vertical, false) => BracketTriple::vertical(),
        };
    }
    let s = n.signum();
    let m = n.unsigned_abs();
    // sum_{k < |n|} (-A^(q))^k
    let geometric = |q: i64| {
        LaurentPoly::from_terms((0..m as i64).map(|k| (q * k, if k % 2 == 0 { 1 } else { -1 })))
    };
    match axis {
        Axis::Horizontal => {
            let f = &LaurentPoly::a_pow(n - 2 * s) * &geometric(-4 * s);
            let t = LaurentPoly::a_pow(n);
            if virtual_end {
                BracketTriple::new(f, LaurentPoly::zero(), t)
            } else {
                BracketTriple::new(f, t, LaurentPoly::zero())
            }
        }
        Axis::Vertical => {
            let f = LaurentPoly::a_pow(-n);
            let g = &LaurentPoly::a_pow(-n + 2 * s) * &geometric(4 * s);
            let t = BracketTriple::new(f, g, LaurentPoly::zero());
            if virtual_end {
                // the south virtual crossing trades the vertical and crossed terms
                t.with_virtual_south()
            } else {
                t
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{elementary, insert_kink, Endpoint};

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn resolve_examples() {
        let z = TangleDiagram::horizontal_strands();
        let r = resolve_state(&z, &[]);
        assert_eq!((r.pairing, r.loops), (Pairing::Horizontal, 0));
        assert_eq!(r.weight(), LaurentPoly::one());

        let one = elementary(1, false, Axis::Horizontal);
        let a = resolve_state(&one, &[false]);
        assert_eq!(
            (a.pairing, a.loops, a.weight()),
            (Pairing::Horizontal, 0, LaurentPoly::a_pow(1))
        );
        let b = resolve_state(&one, &[true]);
        assert_eq!(
            (b.pairing, b.loops, b.weight()),
            (Pairing::Vertical, 0, LaurentPoly::a_pow(-1))
        );

        let x = resolve_state(&TangleDiagram::virtual_crossing(), &[]);
        assert_eq!((x.pairing, x.loops), (Pairing::Crossed, 0));
    }

    #[test]
    fn zero_star_zero_has_a_loop() {
        let z = TangleDiagram::horizontal_strands();
        let r = resolve_state(&z.star(&z), &[]);
        assert_eq!((r.pairing, r.loops), (Pairing::Horizontal, 1));
    }

    #[test]
    fn elementary_state_sums() {
        let b = bracket(&elementary(1, false, Axis::Horizontal));
        assert_eq!(
            b,
            BracketTriple::new(p("A^-1"), p("A"), LaurentPoly::zero())
        );
        let b = bracket(&elementary(2, false, Axis::Horizontal));
        assert_eq!(
            b,
            BracketTriple::new(p("1 - A^-4"), p("A^2"), LaurentPoly::zero())
        );
        let b = bracket(&elementary(1, true, Axis::Horizontal));
        assert_eq!(
            b,
            BracketTriple::new(p("A^-1"), LaurentPoly::zero(), p("A"))
        );
        let b = bracket(&elementary(2, true, Axis::Vertical));
        assert_eq!(
            b,
            BracketTriple::new(LaurentPoly::zero(), p("1 - A^4"), p("A^-2"))
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            bracket_elementary(3, false, Axis::Horizontal),
            BracketTriple::new(p("A - A^-3 + A^-7"), p("A^3"), LaurentPoly::zero())
        );
        assert_eq!(
            bracket_elementary(-1, false, Axis::Horizontal),
            BracketTriple::new(p("A"), p("A^-1"), LaurentPoly::zero())
        );
        assert_eq!(
            bracket_elementary(2, true, Axis::Vertical),
            BracketTriple::new(LaurentPoly::zero(), p("1 - A^4"), p("A^-2"))
        );
    }

    #[test]
    fn closed_forms_match_state_sum() {
        for n in -6..=6 {
            for v in [false, true] {
                for axis in [Axis::Horizontal, Axis::Vertical] {
                    assert_eq!(
                        bracket(&elementary(n, v, axis)),
                        bracket_elementary(n, v, axis),
                        "{n} {v} {axis}"
                    );
                }
            }
        }
    }

    #[test]
    fn kink_factors() {
        let z = TangleDiagram::horizontal_strands();
        let b = bracket(&insert_kink(&z, Endpoint::Ne, true));
        assert_eq!(b, BracketTriple::horizontal().scale(&p("-A^3")));
        let b = bracket(&insert_kink(&z, Endpoint::Sw, false));
        assert_eq!(b, BracketTriple::horizontal().scale(&p("-A^-3")));
    }

    #[test]
    fn composition_matches_state_sum() {
        let t = elementary(2, true, Axis::Horizontal);
        let s = elementary(-1, false, Axis::Vertical).plus(&TangleDiagram::virtual_crossing());
        let (bt, bs) = (bracket(&t), bracket(&s));
        assert_eq!(bracket(&t.plus(&s)), bt.plus(&bs));
        assert_eq!(bracket(&t.star(&s)), bt.star(&bs));
        let x = TangleDiagram::virtual_crossing();
        assert_eq!(bracket(&t.plus(&x)), bt.with_virtual_east());
        assert_eq!(bracket(&t.star(&x)), bt.with_virtual_south());
    }

    #[test]
    fn range_partition_is_order_free() {
        let t = elementary(3, true, Axis::Horizontal).star(&elementary(-2, false, Axis::Vertical));
        let sum = StateSum::new(&t);
        let whole = sum.count_range(0..sum.state_count());
        let mut parts = sum.count_range(20..32);
        parts.merge(&sum.count_range(0..7));
        parts.merge(&sum.count_range(7..20));
        assert_eq!(parts, whole);
        assert_eq!(whole.total(), 32);
    }
}
