//! The surreal-number layer: recognizing number-valued games, converting
//! dyadics to games and back, Conway multiplication, and the iterative
//! enclosure of multiplicative inverses.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arena::{Arena, GameId};
use crate::dyadic::{simplest_dyadic_between, Dyadic};
use crate::error::Error;

/// Finite stage of the inverse iteration for a positive number `x`: two
/// growing sets of numbers bracketing `1/x`. Every left element `y`
/// satisfies `x*y < 1` and every right element `x*y > 1`.
///
/// The sets hold exact rationals rather than dyadics: the recurrence
/// divides by the option values of `x` (for `x = 4` that is a division by
/// 3), which in general leaves the dyadic fractions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InverseApproximation {
    left: BTreeSet<BigRational>,
    right: BTreeSet<BigRational>,
    depth: u32,
}

impl InverseApproximation {
    pub fn left(&self) -> &BTreeSet<BigRational> {
        &self.left
    }

    pub fn right(&self) -> &BTreeSet<BigRational> {
        &self.right
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }
}

impl Arena {
    /// The game for an exact dyadic value: `0 = {|}`, positive integers
    /// `k = {k-1|}` (negatives mirrored), and `(2m+1)/2^(n+1)` as
    /// `{m/2^n | (m+1)/2^n}`.
    pub fn dyadic_to_game(&mut self, d: &Dyadic) -> GameId {
        if let Some(&g) = self.memo.dyadic_game.get(d) {
            return g;
        }
        let g = if d.is_integer() {
            let negative = d.is_negative();
            let magnitude = d.numer().magnitude().clone();
            // walk the integer chain up from 0, caching every rung
            let mut cur = self.zero();
            let mut i = num_bigint::BigUint::one();
            while i <= magnitude {
                let signed = BigInt::from(i.clone());
                let key = Dyadic::integer(if negative { -signed } else { signed });
                cur = match self.memo.dyadic_game.get(&key) {
                    Some(&g) => g,
                    None => {
                        let g = if negative {
                            self.make_game(&[], &[cur])
                        } else {
                            self.make_game(&[cur], &[])
                        };
                        self.memo.dyadic_game.insert(key, g);
                        g
                    }
                };
                i += 1u32;
            }
            cur
        } else {
            let below = Dyadic::new((d.numer() - 1) / 2, d.exp() - 1);
            let above = Dyadic::new((d.numer() + 1) / 2, d.exp() - 1);
            let lg = self.dyadic_to_game(&below);
            let rg = self.dyadic_to_game(&above);
            self.make_game(&[lg], &[rg])
        };
        self.memo.dyadic_game.insert(d.clone(), g);
        g
    }

    /// The dyadic value of `g` if it is equal to a number, else `None`.
    ///
    /// Recognition works by shape on the canonical form: a canonical short
    /// number has at most one option per side, each recursively a number,
    /// with left value below right value; its value is the simplest dyadic
    /// between them.
    pub fn game_to_number(&mut self, g: GameId) -> Option<Dyadic> {
        if let Some(v) = self.memo.number.get(&g) {
            return v.clone();
        }
        let c = self.canonical_form(g);
        let v = self.canonical_number_value(c);
        #[cfg(debug_assertions)]
        if let Some(d) = &v {
            let check = self.dyadic_to_game(&d.clone());
            debug_assert!(
                self.equal(c, check),
                "number recognition disagrees with the game order for {d}"
            );
        }
        self.memo.number.insert(g, v.clone());
        v
    }

    fn canonical_number_value(&mut self, c: GameId) -> Option<Dyadic> {
        if let Some(v) = self.memo.number.get(&c) {
            return v.clone();
        }
        let (left, right) = self.options(c);
        let v = 'compute: {
            if left.len() > 1 || right.len() > 1 {
                break 'compute None;
            }
            let lv = match left.first() {
                Some(&x) => match self.canonical_number_value(x) {
                    Some(v) => Some(v),
                    None => break 'compute None,
                },
                None => None,
            };
            let rv = match right.first() {
                Some(&x) => match self.canonical_number_value(x) {
                    Some(v) => Some(v),
                    None => break 'compute None,
                },
                None => None,
            };
            if let (Some(l), Some(r)) = (&lv, &rv) {
                if l >= r {
                    break 'compute None;
                }
            }
            Some(
                simplest_dyadic_between(lv.as_ref(), rv.as_ref())
                    .expect("option values are strictly ordered"),
            )
        };
        self.memo.number.insert(c, v.clone());
        v
    }

    /// Conway product of two games, by the four-family option formula.
    ///
    /// Defined for arbitrary games, but only congruent with equality when
    /// both factors are numbers: there are games `G = G'` with
    /// `G*H != G'*H`, so treat the result as a formal product unless both
    /// inputs are number-valued.
    pub fn conway_product(&mut self, g: GameId, h: GameId) -> GameId {
        let key = if g <= h { (g, h) } else { (h, g) };
        if let Some(&p) = self.memo.product.get(&key) {
            return p;
        }
        let (gl, gr) = self.options(g);
        let (hl, hr) = self.options(h);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for &a in &gl {
            for &b in &hl {
                let t = self.product_term(g, h, a, b);
                left.push(t);
            }
        }
        for &a in &gr {
            for &b in &hr {
                let t = self.product_term(g, h, a, b);
                left.push(t);
            }
        }
        for &a in &gl {
            for &b in &hr {
                let t = self.product_term(g, h, a, b);
                right.push(t);
            }
        }
        for &a in &gr {
            for &b in &hl {
                let t = self.product_term(g, h, a, b);
                right.push(t);
            }
        }
        let p = self.make_game(&left, &right);
        self.memo.product.insert(key, p);
        p
    }

    /// `a*H + G*b - a*b` for options `a` of `G` and `b` of `H`.
    fn product_term(&mut self, g: GameId, h: GameId, a: GameId, b: GameId) -> GameId {
        let p1 = self.conway_product(a, h);
        let p2 = self.conway_product(g, b);
        let p3 = self.conway_product(a, b);
        let s = self.add(p1, p2);
        self.sub(s, p3)
    }

    /// Runs `depth` rounds of the inverse recurrence for a game equal to a
    /// positive number.
    ///
    /// The iteration starts from left set `{0}` and empty right set; each
    /// round first extends the right set from the current left set, then
    /// the left set from the just-extended right set. Option values of the
    /// canonical form of `x` drive the recurrence, skipping a left option
    /// equal to 0 (canonical positive numbers have no negative options, so
    /// nothing else needs normalizing away).
    pub fn inverse_options(
        &mut self,
        x: GameId,
        depth: u32,
    ) -> Result<InverseApproximation, Error> {
        let value = self.game_to_number(x).ok_or(Error::NotAPositiveNumber)?;
        if !value.is_positive() {
            return Err(Error::NotAPositiveNumber);
        }
        let c = self.canonical_form(x);
        let (left, right) = self.options(c);
        let xr = value.to_ratio();
        let mut left_gens: Vec<BigRational> = Vec::new();
        for &opt in &left {
            let v = self
                .game_to_number(opt)
                .expect("options of a canonical number are numbers");
            if !v.is_zero() {
                left_gens.push(v.to_ratio());
            }
        }
        let mut right_gens: Vec<BigRational> = Vec::new();
        for &opt in &right {
            let v = self
                .game_to_number(opt)
                .expect("options of a canonical number are numbers");
            right_gens.push(v.to_ratio());
        }
        let step = |gen: &BigRational, y: &BigRational| -> BigRational {
            (BigRational::one() + (gen - &xr) * y) / gen
        };
        let mut yl: BTreeSet<BigRational> = BTreeSet::new();
        yl.insert(BigRational::zero());
        let mut yr: BTreeSet<BigRational> = BTreeSet::new();
        for _ in 0..depth {
            // a left-option generator flips elements to the other side,
            // a right-option generator keeps them on the same side
            let mut next_right = yr.clone();
            for gen in &left_gens {
                for y in &yl {
                    next_right.insert(step(gen, y));
                }
            }
            for gen in &right_gens {
                for y in &yr {
                    next_right.insert(step(gen, y));
                }
            }
            yr = next_right;
            let mut next_left = yl.clone();
            for gen in &right_gens {
                for y in &yl {
                    next_left.insert(step(gen, y));
                }
            }
            for gen in &left_gens {
                for y in &yr {
                    next_left.insert(step(gen, y));
                }
            }
            yl = next_left;
        }
        Ok(InverseApproximation {
            left: yl,
            right: yr,
            depth,
        })
    }

    /// Tightest enclosure of `1/x` available at the given depth: the
    /// largest generated left element and, when the right set is nonempty,
    /// the smallest right element.
    pub fn inverse_bounds(
        &mut self,
        x: GameId,
        depth: u32,
    ) -> Result<(BigRational, Option<BigRational>), Error> {
        let approx = self.inverse_options(x, depth)?;
        let lo = approx
            .left()
            .iter()
            .next_back()
            .expect("left set always contains 0")
            .clone();
        let hi = approx.right().iter().next().cloned();
        Ok((lo, hi))
    }
}
