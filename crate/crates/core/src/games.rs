//! Construction-independent game operations: negation, disjunctive sums,
//! order, outcome classification, birthdays and position enumeration.

use std::collections::HashSet;
use std::fmt;

use crate::arena::{Arena, GameId};

/// Result of comparing two games. Unlike numbers, games may be `Fuzzy`:
/// confused with each other, neither less, greater nor equal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    Fuzzy,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Comparison::Less => "less",
            Comparison::Equal => "equal",
            Comparison::Greater => "greater",
            Comparison::Fuzzy => "fuzzy",
        };
        f.write_str(s)
    }
}

/// The four outcome classes under optimal play; every game is in exactly
/// one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutcomeClass {
    /// Second player wins, whoever that is.
    Zero,
    /// Left wins no matter who starts.
    Positive,
    /// Right wins no matter who starts.
    Negative,
    /// First player wins, whoever that is.
    Fuzzy,
}

impl OutcomeClass {
    /// Who forces the win, in words.
    pub fn winner(&self) -> &'static str {
        match self {
            OutcomeClass::Zero => "second player wins",
            OutcomeClass::Positive => "Left wins",
            OutcomeClass::Negative => "Right wins",
            OutcomeClass::Fuzzy => "first player wins",
        }
    }
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OutcomeClass::Zero => "zero",
            OutcomeClass::Positive => "positive",
            OutcomeClass::Negative => "negative",
            OutcomeClass::Fuzzy => "fuzzy",
        };
        f.write_str(s)
    }
}

impl Arena {
    /// `-G`: swaps the two option sets and negates recursively.
    pub fn negate(&mut self, g: GameId) -> GameId {
        if let Some(&n) = self.memo.negate.get(&g) {
            return n;
        }
        let (left, right) = self.options(g);
        let new_left: Vec<GameId> = right.iter().map(|&r| self.negate(r)).collect();
        let new_right: Vec<GameId> = left.iter().map(|&l| self.negate(l)).collect();
        let n = self.make_game(&new_left, &new_right);
        self.memo.negate.insert(g, n);
        // negation is a structural involution, so cache the reverse edge too
        self.memo.negate.insert(n, g);
        n
    }

    /// Disjunctive sum `G + H`: each player moves in exactly one component.
    pub fn add(&mut self, g: GameId, h: GameId) -> GameId {
        if g == self.zero() {
            return h;
        }
        if h == self.zero() {
            return g;
        }
        // structurally commutative under interning, so normalize the key
        let key = if g <= h { (g, h) } else { (h, g) };
        if let Some(&s) = self.memo.add.get(&key) {
            return s;
        }
        let (gl, gr) = self.options(g);
        let (hl, hr) = self.options(h);
        let mut left = Vec::with_capacity(gl.len() + hl.len());
        for &x in &gl {
            left.push(self.add(x, h));
        }
        for &x in &hl {
            left.push(self.add(g, x));
        }
        let mut right = Vec::with_capacity(gr.len() + hr.len());
        for &x in &gr {
            right.push(self.add(x, h));
        }
        for &x in &hr {
            right.push(self.add(g, x));
        }
        let s = self.make_game(&left, &right);
        self.memo.add.insert(key, s);
        s
    }

    /// `G - H`, i.e. `G + (-H)`.
    pub fn sub(&mut self, g: GameId, h: GameId) -> GameId {
        let nh = self.negate(h);
        self.add(g, nh)
    }

    /// Whether `G <= H`, by the direct two-argument recursion: no left
    /// option of `G` is `>= H` and no right option of `H` is `<= G`. Agrees
    /// with the sum-based form `G - H <= 0`; that agreement is a tested
    /// invariant.
    pub fn leq(&mut self, g: GameId, h: GameId) -> bool {
        if let Some(&b) = self.memo.leq.get(&(g, h)) {
            return b;
        }
        let mut result = true;
        let (gl, _) = self.options(g);
        for &x in &gl {
            if self.leq(h, x) {
                result = false;
                break;
            }
        }
        if result {
            let (_, hr) = self.options(h);
            for &x in &hr {
                if self.leq(x, g) {
                    result = false;
                    break;
                }
            }
        }
        self.memo.leq.insert((g, h), result);
        result
    }

    /// Whether `G = H` as values (second player wins `G - H`).
    pub fn equal(&mut self, g: GameId, h: GameId) -> bool {
        self.leq(g, h) && self.leq(h, g)
    }

    /// Full comparison derived from `leq` in both directions.
    pub fn compare(&mut self, g: GameId, h: GameId) -> Comparison {
        match (self.leq(g, h), self.leq(h, g)) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::Less,
            (false, true) => Comparison::Greater,
            (false, false) => Comparison::Fuzzy,
        }
    }

    /// Outcome class of `G`, read off the comparison with zero.
    pub fn outcome(&mut self, g: GameId) -> OutcomeClass {
        match self.compare(g, self.zero()) {
            Comparison::Equal => OutcomeClass::Zero,
            Comparison::Greater => OutcomeClass::Positive,
            Comparison::Less => OutcomeClass::Negative,
            Comparison::Fuzzy => OutcomeClass::Fuzzy,
        }
    }

    /// Creation rank: 0 for the empty game, else one more than the latest
    /// option. Finite for every game in the arena, since all are short.
    pub fn birthday(&mut self, g: GameId) -> u32 {
        if let Some(&b) = self.memo.birthday.get(&g) {
            return b;
        }
        let (left, right) = self.options(g);
        let mut b = 0;
        for &opt in left.iter().chain(right.iter()) {
            b = b.max(1 + self.birthday(opt));
        }
        self.memo.birthday.insert(g, b);
        b
    }

    /// All positions of `G`: the game itself and, recursively, the
    /// positions of its options. Returned deduplicated, sorted by handle.
    pub fn positions(&self, g: GameId) -> Vec<GameId> {
        let mut seen = HashSet::new();
        let mut stack = vec![g];
        while let Some(cur) = stack.pop() {
            if !seen.insert(cur) {
                continue;
            }
            let node = self.node(cur);
            stack.extend(node.left().iter().chain(node.right().iter()).copied());
        }
        let mut out: Vec<GameId> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }
}
