//! Canonical (simplest) forms for short games: delete dominated options,
//! bypass reversible ones, and the gift-horse construction used to go the
//! other way.

use crate::arena::{Arena, GameId};
use crate::error::Error;
use crate::games::Comparison;

impl Arena {
    /// Removes every dominated option: a left option that is `<=` another
    /// left option, a right option that is `>=` another right option. Among
    /// equal options the one with the smallest handle is kept, so the
    /// output is deterministic. Expects the options of `g` to be canonical
    /// already; the result is equal to `g` as a game.
    pub fn remove_dominated(&mut self, g: GameId) -> GameId {
        let (left, right) = self.options(g);
        let mut keep_left = Vec::with_capacity(left.len());
        'left: for (i, &x) in left.iter().enumerate() {
            for (j, &y) in left.iter().enumerate() {
                if i == j {
                    continue;
                }
                if self.leq(x, y) && (!self.leq(y, x) || y < x) {
                    continue 'left;
                }
            }
            keep_left.push(x);
        }
        let mut keep_right = Vec::with_capacity(right.len());
        'right: for (i, &x) in right.iter().enumerate() {
            for (j, &y) in right.iter().enumerate() {
                if i == j {
                    continue;
                }
                if self.leq(y, x) && (!self.leq(x, y) || y < x) {
                    continue 'right;
                }
            }
            keep_right.push(x);
        }
        self.make_game(&keep_left, &keep_right)
    }

    /// Bypasses reversible options until none remain at the top level: a
    /// left option with some right option `K <= G` is replaced by all of
    /// `K`'s left options, and mirrored on the right. Expects the options
    /// of `g` to be canonical already; the result is equal to `g`.
    ///
    /// Terminates because every replacement swaps an option for strictly
    /// older handles.
    pub fn bypass_reversible(&mut self, g: GameId) -> GameId {
        let mut cur = g;
        'scan: loop {
            let (left, right) = self.options(cur);
            for (i, &h) in left.iter().enumerate() {
                let (_, h_right) = self.options(h);
                for &k in &h_right {
                    if self.leq(k, cur) {
                        let (k_left, _) = self.options(k);
                        let mut new_left: Vec<GameId> = Vec::new();
                        new_left.extend(left.iter().take(i));
                        new_left.extend(left.iter().skip(i + 1));
                        new_left.extend(k_left);
                        cur = self.make_game(&new_left, &right);
                        continue 'scan;
                    }
                }
            }
            for (i, &h) in right.iter().enumerate() {
                let (h_left, _) = self.options(h);
                for &k in &h_left {
                    if self.leq(cur, k) {
                        let (_, k_right) = self.options(k);
                        let mut new_right: Vec<GameId> = Vec::new();
                        new_right.extend(right.iter().take(i));
                        new_right.extend(right.iter().skip(i + 1));
                        new_right.extend(k_right);
                        cur = self.make_game(&left, &new_right);
                        continue 'scan;
                    }
                }
            }
            return cur;
        }
    }

    /// The unique equal game with no dominated or reversible positions.
    /// Computed bottom-up: canonicalize all options, then alternate
    /// bypassing and domination removal until a fixpoint.
    pub fn canonical_form(&mut self, g: GameId) -> GameId {
        if let Some(&c) = self.memo.canonical.get(&g) {
            return c;
        }
        let (left, right) = self.options(g);
        let cl: Vec<GameId> = left.iter().map(|&x| self.canonical_form(x)).collect();
        let cr: Vec<GameId> = right.iter().map(|&x| self.canonical_form(x)).collect();
        let mut cur = self.make_game(&cl, &cr);
        loop {
            let bypassed = self.bypass_reversible(cur);
            let pruned = self.remove_dominated(bypassed);
            if pruned == cur {
                break;
            }
            cur = pruned;
        }
        self.memo.canonical.insert(g, cur);
        self.memo.canonical.insert(cur, cur);
        cur
    }

    /// Adds extra options that no player wants: every left horse must be
    /// less than or fuzzy to `g`, every right horse greater than or fuzzy.
    /// The result is equal to `g`; violating horses are a domain error.
    pub fn add_gift_horses(
        &mut self,
        g: GameId,
        left_horses: &[GameId],
        right_horses: &[GameId],
    ) -> Result<GameId, Error> {
        for &h in left_horses {
            match self.compare(h, g) {
                Comparison::Less | Comparison::Fuzzy => {}
                _ => return Err(Error::NotAGiftHorse { side: "left" }),
            }
        }
        for &h in right_horses {
            match self.compare(h, g) {
                Comparison::Greater | Comparison::Fuzzy => {}
                _ => return Err(Error::NotAGiftHorse { side: "right" }),
            }
        }
        let (mut left, mut right) = self.options(g);
        left.extend_from_slice(left_horses);
        right.extend_from_slice(right_horses);
        Ok(self.make_game(&left, &right))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominated_options_are_deleted() {
        let mut a = Arena::new();
        let zero = a.zero();
        let one = a.one();
        let two = a.add(one, one);
        let three = a.add(two, one);
        // {0,1|} -> {1|}
        let g = a.make_game(&[zero, one], &[]);
        assert_eq!(a.remove_dominated(g), a.make_game(&[one], &[]));
        // {0,1|2,3} -> {1|2}
        let g = a.make_game(&[zero, one], &[two, three]);
        assert_eq!(a.remove_dominated(g), a.make_game(&[one], &[two]));
        // incomparable options survive
        let star = a.star();
        let g = a.make_game(&[zero, star], &[zero]);
        assert_eq!(a.remove_dominated(g), g);
    }

    #[test]
    fn reversible_options_are_bypassed() {
        let mut a = Arena::new();
        let star = a.star();
        let g = a.make_game(&[star], &[star]);
        assert_eq!(a.bypass_reversible(g), a.zero());
        let neg_one = a.neg_one();
        let one = a.one();
        let g = a.make_game(&[neg_one], &[one]);
        assert_eq!(a.bypass_reversible(g), a.zero());
        // 1 = {0|} is already canonical: 0 has no right option to reverse through
        assert_eq!(a.bypass_reversible(one), one);
    }

    #[test]
    fn canonical_forms_of_paper_identities() {
        let mut a = Arena::new();
        let star = a.star();
        let ss = a.add(star, star);
        assert_eq!(a.canonical_form(ss), a.zero());
        let zero = a.zero();
        let one = a.one();
        let two = a.add(one, one);
        let three = a.add(two, one);
        let g = a.make_game(&[zero, one], &[two, three]);
        let c = a.canonical_form(g);
        assert_eq!(c, a.make_game(&[one], &[two]));
        assert_eq!(a.canonical_form(two), a.make_game(&[one], &[]));
    }

    #[test]
    fn canonical_form_is_idempotent_and_value_preserving() {
        let mut a = Arena::new();
        let star = a.star();
        let up = a.up();
        let zero = a.zero();
        let g0 = a.make_game(&[star, up], &[star, zero]);
        let g1 = a.add(g0, star);
        for g in [g0, g1] {
            let c = a.canonical_form(g);
            assert_eq!(a.canonical_form(c), c);
            assert_eq!(a.compare(c, g), Comparison::Equal);
            assert!(a.positions(c).len() <= a.positions(g).len());
        }
    }

    #[test]
    fn gift_horses_keep_the_value() {
        let mut a = Arena::new();
        let zero = a.zero();
        let one = a.one();
        let two = a.add(one, one);
        // 2 = {1|} = {0,1|}
        let with_horse = a.add_gift_horses(two, &[zero], &[]).unwrap();
        assert_eq!(with_horse, a.make_game(&[zero, one], &[]));
        assert_eq!(a.compare(with_horse, two), Comparison::Equal);
        // no horses, no change
        assert_eq!(a.add_gift_horses(two, &[], &[]).unwrap(), two);
        // 2 is greater than 2, so it is no left gift horse for 2
        let err = a.add_gift_horses(two, &[two], &[]).unwrap_err();
        assert_eq!(err, Error::NotAGiftHorse { side: "left" });
        let err = a.add_gift_horses(two, &[], &[one]).unwrap_err();
        assert_eq!(err, Error::NotAGiftHorse { side: "right" });
    }
}
