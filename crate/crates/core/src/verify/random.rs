//! Seeded random tangle diagrams built from elementary pieces.

use alloc::boxed::Box;
use core::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{elementary, Axis, Combine, TangleDiagram};

/// Recipe for a random diagram; its `Display` form names report instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tree {
    Leaf {
        n: i64,
        virtual_end: bool,
        axis: Axis,
    },
    Join {
        op: Combine,
        left: Box<Tree>,
        right: Box<Tree>,
    },
    HalfTurn(Box<Tree>),
    QuarterTurn(Box<Tree>),
}

impl Tree {
    pub fn build(&self) -> TangleDiagram {
        match self {
            Tree::Leaf {
                n,
                virtual_end,
                axis,
            } => elementary(*n, *virtual_end, *axis),
            Tree::Join { op, left, right } => left.build().combine(&right.build(), *op),
            Tree::HalfTurn(t) => t.build().rotate_pi(),
            Tree::QuarterTurn(t) => t.build().rotate_quarter(),
        }
    }

    pub fn classical_count(&self) -> usize {
        match self {
            Tree::Leaf { n, .. } => n.unsigned_abs() as usize,
            Tree::Join { left, right, .. } => left.classical_count() + right.classical_count(),
            Tree::HalfTurn(t) | Tree::QuarterTurn(t) => t.classical_count(),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf {
                n,
                virtual_end,
                axis,
            } => {
                let v = if *virtual_end { "v" } else { "" };
                match axis {
                    Axis::Horizontal => write!(f, "[{n}{v}]"),
                    Axis::Vertical => write!(f, "1/[{n}{v}]"),
                }
            }
            Tree::Join { op, left, right } => {
                let sym = match op {
                    Combine::Plus => '+',
                    Combine::Star => '*',
                };
                write!(f, "({left} {sym} {right})")
            }
            Tree::HalfTurn(t) => write!(f, "rot180({t})"),
            Tree::QuarterTurn(t) => write!(f, "rot90({t})"),
        }
    }
}

/// A random tree with at most `budget` classical crossings. Virtual
/// crossings appear only when `allow_virtual` is set.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, budget: usize, allow_virtual: bool) -> Tree {
    let tree = if budget <= 1 || rng.random_bool(0.3) {
        let cap = budget.min(4) as i64;
        Tree::Leaf {
            n: rng.random_range(-cap..=cap),
            virtual_end: allow_virtual && rng.random_bool(0.4),
            axis: if rng.random_bool(0.5) {
                Axis::Horizontal
            } else {
                Axis::Vertical
            },
        }
    } else {
        let left_budget = rng.random_range(1..budget);
        let op = if rng.random_bool(0.5) {
            Combine::Plus
        } else {
            Combine::Star
        };
        Tree::Join {
            op,
            left: Box::new(random_tree(rng, left_budget, allow_virtual)),
            right: Box::new(random_tree(rng, budget - left_budget, allow_virtual)),
        }
    };
    match rng.random_range(0..10) {
        0 => Tree::HalfTurn(Box::new(tree)),
        1 => Tree::QuarterTurn(Box::new(tree)),
        _ => tree,
    }
}

/// The generator for sample `index` of a seeded run; samples are independent
/// of each other, so runs can be split across threads.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_is_respected() {
        for i in 0..200 {
            let mut rng = sample_rng(7, i);
            let t = random_tree(&mut rng, 10, true);
            assert!(t.classical_count() <= 10, "{t}");
            assert_eq!(t.build().classical_count(), t.classical_count());
        }
    }

    #[test]
    fn classical_trees_have_no_virtual_crossings() {
        for i in 0..50 {
            let t = random_tree(&mut sample_rng(3, i), 8, false);
            assert_eq!(t.build().virtual_count(), 0);
        }
    }

    #[test]
    fn deterministic_per_index() {
        let a = random_tree(&mut sample_rng(11, 5), 10, true);
        let b = random_tree(&mut sample_rng(11, 5), 10, true);
        assert_eq!(a, b);
    }
}
