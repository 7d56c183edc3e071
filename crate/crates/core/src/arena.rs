//! Interned game storage. Games are immutable nodes in a shared arena;
//! structural identity is handle equality.

use std::collections::HashMap;

use crate::analysis::Stops;
use crate::dyadic::Dyadic;

/// Opaque handle to an interned game. Two handles from the same arena are
/// equal exactly when the games are identical: same sets of identical
/// options. Handles also witness creation order: every option of a game was
/// interned strictly before the game itself, so option chains always
/// descend.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GameId(u32);

impl GameId {
    pub(crate) fn index(self) -> usize {
        self.0 as usize
    }
}

/// A game: two deduplicated option sets, stored sorted by handle so that
/// structural hashing is deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GameNode {
    left: Box<[GameId]>,
    right: Box<[GameId]>,
}

impl GameNode {
    pub fn left(&self) -> &[GameId] {
        &self.left
    }

    pub fn right(&self) -> &[GameId] {
        &self.right
    }
}

/// Memoization tables. Entries are never evicted within a session and only
/// record pure facts about interned games, so cached and uncached runs
/// always agree.
#[derive(Default)]
pub(crate) struct Memo {
    pub negate: HashMap<GameId, GameId>,
    pub add: HashMap<(GameId, GameId), GameId>,
    pub leq: HashMap<(GameId, GameId), bool>,
    pub birthday: HashMap<GameId, u32>,
    pub canonical: HashMap<GameId, GameId>,
    pub product: HashMap<(GameId, GameId), GameId>,
    pub number: HashMap<GameId, Option<Dyadic>>,
    pub dyadic_game: HashMap<Dyadic, GameId>,
    pub stops: HashMap<GameId, Stops>,
    pub grundy: HashMap<GameId, u32>,
    pub impartial: HashMap<GameId, bool>,
    pub all_small: HashMap<GameId, bool>,
    pub up_bound_le: HashMap<GameId, u32>,
    pub up_bound_lf: HashMap<GameId, u32>,
    pub nimbers: Vec<GameId>,
}

/// Shared store of interned short games plus memo caches for the engine's
/// recursive queries.
///
/// The arena is the unit of sharing: all operations take `&mut self`
/// because interning and memoization mutate it, but every query is a pure
/// function of the games involved. For concurrent use, wrap the arena in a
/// `Mutex`; results never depend on execution order.
pub struct Arena {
    nodes: Vec<GameNode>,
    intern: HashMap<GameNode, GameId>,
    zero: GameId,
    one: GameId,
    neg_one: GameId,
    star: GameId,
    up: GameId,
    down: GameId,
    pub(crate) memo: Memo,
}

impl Arena {
    pub fn new() -> Arena {
        let placeholder = GameId(0);
        let mut arena = Arena {
            nodes: Vec::new(),
            intern: HashMap::new(),
            zero: placeholder,
            one: placeholder,
            neg_one: placeholder,
            star: placeholder,
            up: placeholder,
            down: placeholder,
            memo: Memo::default(),
        };
        let zero = arena.intern_node(&[], &[]);
        arena.zero = zero;
        arena.one = arena.intern_node(&[zero], &[]);
        arena.neg_one = arena.intern_node(&[], &[zero]);
        let star = arena.intern_node(&[zero], &[zero]);
        arena.star = star;
        arena.up = arena.intern_node(&[zero], &[star]);
        arena.down = arena.intern_node(&[star], &[zero]);
        arena
    }

    /// The empty game `{|}`.
    pub fn zero(&self) -> GameId {
        self.zero
    }

    /// `{0|}`: one free move for Left.
    pub fn one(&self) -> GameId {
        self.one
    }

    /// `{|0}`: one free move for Right.
    pub fn neg_one(&self) -> GameId {
        self.neg_one
    }

    /// `{0|0}`: a free move for whoever takes it first.
    pub fn star(&self) -> GameId {
        self.star
    }

    /// `{0|*}`: the canonical positive infinitesimal.
    pub fn up(&self) -> GameId {
        self.up
    }

    /// `{*|0}`: the negative of up.
    pub fn down(&self) -> GameId {
        self.down
    }

    /// Interns the game with the given option sets, deduplicating and
    /// sorting the inputs. Identical structure always yields the identical
    /// handle.
    ///
    /// Panics if a handle does not belong to this arena.
    pub fn make_game(&mut self, left: &[GameId], right: &[GameId]) -> GameId {
        self.check_handles(left);
        self.check_handles(right);
        self.intern_node(left, right)
    }

    fn check_handles(&self, ids: &[GameId]) {
        for &id in ids {
            assert!(
                id.index() < self.nodes.len(),
                "game handle {:?} does not belong to this arena ({} games interned)",
                id,
                self.nodes.len()
            );
        }
    }

    fn intern_node(&mut self, left: &[GameId], right: &[GameId]) -> GameId {
        let mut l = left.to_vec();
        l.sort_unstable();
        l.dedup();
        let mut r = right.to_vec();
        r.sort_unstable();
        r.dedup();
        let node = GameNode {
            left: l.into_boxed_slice(),
            right: r.into_boxed_slice(),
        };
        if let Some(&id) = self.intern.get(&node) {
            return id;
        }
        let id = GameId(u32::try_from(self.nodes.len()).expect("arena handle space exhausted"));
        self.nodes.push(node.clone());
        self.intern.insert(node, id);
        id
    }

    /// The interned node behind a handle.
    pub fn node(&self, g: GameId) -> &GameNode {
        &self.nodes[g.index()]
    }

    /// Number of distinct games interned so far.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub(crate) fn options(&self, g: GameId) -> (Vec<GameId>, Vec<GameId>) {
        let node = self.node(g);
        (node.left.to_vec(), node.right.to_vec())
    }
}

impl Default for Arena {
    fn default() -> Self {
        Arena::new()
    }
}
