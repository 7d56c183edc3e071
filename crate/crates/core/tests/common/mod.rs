//! Shared helpers for the integration suites: a script-driven pool builder
//! for shrinkable random games, and brute-force oracles that never touch
//! the engine's order relation.

use std::collections::HashMap;

use cgt_core::{Arena, GameId, OutcomeClass};

/// Materializes a shrinkable script into a pool of short games. Each entry
/// picks up to three options per side from the constants and earlier
/// entries, capped at depth 4.
pub fn build_pool(arena: &mut Arena, script: &[(Vec<u8>, Vec<u8>)]) -> Vec<GameId> {
    let mut pool: Vec<(GameId, u32)> = vec![
        (arena.zero(), 0),
        (arena.one(), 1),
        (arena.neg_one(), 1),
        (arena.star(), 1),
        (arena.up(), 2),
        (arena.down(), 2),
    ];
    let mut out = Vec::new();
    for (ls, rs) in script {
        let candidates: Vec<(GameId, u32)> =
            pool.iter().copied().filter(|&(_, d)| d < 4).collect();
        let pick = |idxs: &[u8]| -> (Vec<GameId>, u32) {
            let mut opts = Vec::new();
            let mut depth = 0;
            for &i in idxs.iter().take(3) {
                let (g, d) = candidates[i as usize % candidates.len()];
                opts.push(g);
                depth = depth.max(d + 1);
            }
            (opts, depth)
        };
        let (left, dl) = pick(ls);
        let (right, dr) = pick(rs);
        let g = arena.make_game(&left, &right);
        pool.push((g, dl.max(dr)));
        out.push(g);
    }
    if out.is_empty() {
        out.push(arena.zero());
    }
    out
}

/// Script-driven pool of all-small games: both sides nonempty at every
/// built position, options all small by induction.
pub fn build_all_small_pool(arena: &mut Arena, script: &[(Vec<u8>, Vec<u8>)]) -> Vec<GameId> {
    let star2 = arena.nimber_to_game(2);
    let mut pool: Vec<(GameId, u32)> = vec![
        (arena.zero(), 0),
        (arena.star(), 1),
        (arena.up(), 2),
        (arena.down(), 2),
        (star2, 2),
    ];
    let mut out = Vec::new();
    for (ls, rs) in script {
        let candidates: Vec<(GameId, u32)> =
            pool.iter().copied().filter(|&(_, d)| d < 4).collect();
        let pick = |idxs: &[u8]| -> (Vec<GameId>, u32) {
            let mut opts = Vec::new();
            let mut depth = 0;
            for &i in idxs.iter().take(3) {
                let (g, d) = candidates[i as usize % candidates.len()];
                opts.push(g);
                depth = depth.max(d + 1);
            }
            if opts.is_empty() {
                // keep both sides nonempty; the first candidate is the zero game
                opts.push(candidates[0].0);
                depth = 1;
            }
            (opts, depth)
        };
        let (left, dl) = pick(ls);
        let (right, dr) = pick(rs);
        let g = arena.make_game(&left, &right);
        pool.push((g, dl.max(dr)));
        out.push(g);
    }
    if out.is_empty() {
        out.push(arena.star());
    }
    out
}

/// Script-driven pool of impartial games: one option set, shared by both
/// sides.
pub fn build_impartial_pool(arena: &mut Arena, script: &[Vec<u8>]) -> Vec<GameId> {
    let mut pool: Vec<(GameId, u32)> = (0..4u32).map(|n| (arena.nimber_to_game(n), n)).collect();
    let mut out = Vec::new();
    for idxs in script {
        let candidates: Vec<(GameId, u32)> =
            pool.iter().copied().filter(|&(_, d)| d < 5).collect();
        let mut opts = Vec::new();
        let mut depth = 0;
        for &i in idxs.iter().take(3) {
            let (g, d) = candidates[i as usize % candidates.len()];
            opts.push(g);
            depth = depth.max(d + 1);
        }
        let g = arena.make_game(&opts, &opts);
        pool.push((g, depth));
        out.push(g);
    }
    if out.is_empty() {
        out.push(arena.star());
    }
    out
}

/// Brute-force outcome by game-tree search straight from the normal play
/// convention: a player unable to move loses. Independent of the engine's
/// order recursion.
pub fn outcome_by_minimax(arena: &Arena, g: GameId) -> OutcomeClass {
    let mut memo = HashMap::new();
    let left_first = mover_wins(arena, g, true, &mut memo);
    let right_first = mover_wins(arena, g, false, &mut memo);
    match (left_first, right_first) {
        (true, true) => OutcomeClass::Fuzzy,
        (true, false) => OutcomeClass::Positive,
        (false, true) => OutcomeClass::Negative,
        (false, false) => OutcomeClass::Zero,
    }
}

fn mover_wins(
    arena: &Arena,
    g: GameId,
    left_to_move: bool,
    memo: &mut HashMap<(GameId, bool), bool>,
) -> bool {
    if let Some(&w) = memo.get(&(g, left_to_move)) {
        return w;
    }
    let node = arena.node(g);
    let opts: Vec<GameId> = if left_to_move {
        node.left().to_vec()
    } else {
        node.right().to_vec()
    };
    let win = opts
        .iter()
        .any(|&o| !mover_wins(arena, o, !left_to_move, memo));
    memo.insert((g, left_to_move), win);
    win
}

/// Brute-force first-player-win search over Nim heap lists, again straight
/// from the rules: reduce any single heap, last mover wins.
pub fn nim_first_player_wins(heaps: &[u32]) -> bool {
    let mut memo = HashMap::new();
    nim_mover_wins(heaps, &mut memo)
}

fn nim_mover_wins(heaps: &[u32], memo: &mut HashMap<Vec<u32>, bool>) -> bool {
    let mut key: Vec<u32> = heaps.iter().copied().filter(|&h| h > 0).collect();
    key.sort_unstable();
    if let Some(&w) = memo.get(&key) {
        return w;
    }
    let mut win = false;
    'search: for i in 0..key.len() {
        for smaller in 0..key[i] {
            let mut next = key.clone();
            next[i] = smaller;
            if !nim_mover_wins(&next, memo) {
                win = true;
                break 'search;
            }
        }
    }
    memo.insert(key, win);
    win
}
