//! Pool-based random game generators for property tests and benchmarks.
//! Each new game draws its options from games generated earlier, which
//! keeps position counts small while reaching all four outcome classes.

use rand::Rng;

use crate::arena::{Arena, GameId};

/// Generates `count` short games with bounded depth and branching, drawing
/// options from the constants and earlier output. Depth here is the longest
/// option chain, so position counts stay desk-scale.
pub fn random_pool<R: Rng>(
    arena: &mut Arena,
    rng: &mut R,
    count: usize,
    max_depth: u32,
    max_branch: usize,
) -> Vec<GameId> {
    let mut pool: Vec<(GameId, u32)> = vec![
        (arena.zero(), 0),
        (arena.one(), 1),
        (arena.neg_one(), 1),
        (arena.star(), 1),
        (arena.up(), 2),
        (arena.down(), 2),
    ];
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let candidates: Vec<(GameId, u32)> = pool
            .iter()
            .copied()
            .filter(|&(_, d)| d < max_depth)
            .collect();
        let pick_side = |rng: &mut R| -> (Vec<GameId>, u32) {
            let n = rng.gen_range(0..=max_branch);
            let mut opts = Vec::with_capacity(n);
            let mut depth = 0;
            for _ in 0..n {
                let (g, d) = candidates[rng.gen_range(0..candidates.len())];
                opts.push(g);
                depth = depth.max(d + 1);
            }
            (opts, depth)
        };
        let (left, dl) = pick_side(rng);
        let (right, dr) = pick_side(rng);
        let g = arena.make_game(&left, &right);
        pool.push((g, dl.max(dr)));
        out.push(g);
    }
    out
}

/// Generates impartial games: both sides share one nonempty option set
/// drawn from nimbers and earlier output.
pub fn random_impartial_pool<R: Rng>(
    arena: &mut Arena,
    rng: &mut R,
    count: usize,
    max_depth: u32,
    max_branch: usize,
) -> Vec<GameId> {
    let mut pool: Vec<(GameId, u32)> = (0..4)
        .map(|n| (arena.nimber_to_game(n), n))
        .collect();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let candidates: Vec<(GameId, u32)> = pool
            .iter()
            .copied()
            .filter(|&(_, d)| d < max_depth)
            .collect();
        let n = rng.gen_range(1..=max_branch);
        let mut opts = Vec::with_capacity(n);
        let mut depth = 0;
        for _ in 0..n {
            let (g, d) = candidates[rng.gen_range(0..candidates.len())];
            opts.push(g);
            depth = depth.max(d + 1);
        }
        let g = arena.make_game(&opts, &opts);
        pool.push((g, depth));
        out.push(g);
    }
    out
}

/// Generates all-small games: every built position has options on both
/// sides or on neither, so every output is all small by construction.
pub fn random_all_small_pool<R: Rng>(
    arena: &mut Arena,
    rng: &mut R,
    count: usize,
    max_depth: u32,
    max_branch: usize,
) -> Vec<GameId> {
    let star2 = arena.nimber_to_game(2);
    let mut pool: Vec<(GameId, u32)> = vec![
        (arena.zero(), 0),
        (arena.star(), 1),
        (arena.up(), 2),
        (arena.down(), 2),
        (star2, 2),
    ];
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let candidates: Vec<(GameId, u32)> = pool
            .iter()
            .copied()
            .filter(|&(_, d)| d < max_depth)
            .collect();
        let pick_side = |rng: &mut R| -> (Vec<GameId>, u32) {
            let n = rng.gen_range(1..=max_branch);
            let mut opts = Vec::with_capacity(n);
            let mut depth = 0;
            for _ in 0..n {
                let (g, d) = candidates[rng.gen_range(0..candidates.len())];
                opts.push(g);
                depth = depth.max(d + 1);
            }
            (opts, depth)
        };
        let (left, dl) = pick_side(rng);
        let (right, dr) = pick_side(rng);
        let g = arena.make_game(&left, &right);
        pool.push((g, dl.max(dr)));
        out.push(g);
    }
    out
}
