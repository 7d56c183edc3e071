//! Impartial games: recognition, mex, Grundy values and the explicit Nim
//! strategy.

use std::fmt;

use crate::arena::{Arena, GameId};
use crate::error::Error;

/// A natural number `n` denoting the single Nim heap `*n`. Two nimbers are
/// equal as games exactly when the heap sizes match.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Nimber(pub u32);

impl Nimber {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Nimber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "0"),
            1 => write!(f, "*"),
            n => write!(f, "*{n}"),
        }
    }
}

/// Least natural number not contained in `values`.
pub fn mex(values: &[u32]) -> u32 {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut least = 0;
    for v in sorted {
        if v == least {
            least += 1;
        } else if v > least {
            break;
        }
    }
    least
}

/// XOR of the heap sizes; zero exactly when the position is a second-player
/// win.
pub fn nim_sum(heaps: &[u32]) -> u32 {
    heaps.iter().fold(0, |acc, &h| acc ^ h)
}

/// A winning first move in a Nim position, if there is one: the lowest heap
/// index that can be reduced so the nim-sum of the result is zero, together
/// with the new heap size. `None` exactly when the nim-sum is already zero.
pub fn nim_winning_move(heaps: &[u32]) -> Option<(usize, u32)> {
    let s = nim_sum(heaps);
    if s == 0 {
        return None;
    }
    heaps
        .iter()
        .enumerate()
        .find_map(|(i, &h)| ((h ^ s) < h).then_some((i, h ^ s)))
}

impl Arena {
    /// Whether at every position the left and right option sets are
    /// identical.
    pub fn is_impartial(&mut self, g: GameId) -> bool {
        if let Some(&b) = self.memo.impartial.get(&g) {
            return b;
        }
        let (left, right) = self.options(g);
        let mut result = left == right;
        if result {
            for &opt in &left {
                if !self.is_impartial(opt) {
                    result = false;
                    break;
                }
            }
        }
        self.memo.impartial.insert(g, result);
        result
    }

    /// `*n = {*0, ..., *(n-1) | *0, ..., *(n-1)}`, with `*0 = 0`.
    pub fn nimber_to_game(&mut self, n: u32) -> GameId {
        while self.memo.nimbers.len() <= n as usize {
            let smaller = self.memo.nimbers.clone();
            let g = self.make_game(&smaller, &smaller);
            self.memo.nimbers.push(g);
        }
        self.memo.nimbers[n as usize]
    }

    /// The unique nimber equal to an impartial game: the mex of the option
    /// Grundy values, recursively. Partizan input is a domain error.
    pub fn grundy(&mut self, g: GameId) -> Result<Nimber, Error> {
        if !self.is_impartial(g) {
            return Err(Error::NotImpartial);
        }
        Ok(Nimber(self.grundy_unchecked(g)))
    }

    fn grundy_unchecked(&mut self, g: GameId) -> u32 {
        if let Some(&n) = self.memo.grundy.get(&g) {
            return n;
        }
        let (left, _) = self.options(g);
        let option_values: Vec<u32> = left.iter().map(|&x| self.grundy_unchecked(x)).collect();
        let n = mex(&option_values);
        self.memo.grundy.insert(g, n);
        n
    }
}
