//! Stops, confusion intervals, infinitesimal classification and the
//! up-multiple bound for short infinitesimals.

use crate::arena::{Arena, GameId};
use crate::dyadic::Dyadic;
use crate::error::Error;

/// Left and right stops of a game: the number reached under optimal
/// alternating play with Left (resp. Right) moving first. Both equal the
/// value when the game is a number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stops {
    pub left: Dyadic,
    pub right: Dyadic,
}

impl Arena {
    /// Left and right stops, by the defining recursion: a number is its own
    /// stop pair; otherwise the left stop is the best right stop among left
    /// options, and mirrored.
    pub fn stops(&mut self, g: GameId) -> Stops {
        if let Some(s) = self.memo.stops.get(&g) {
            return s.clone();
        }
        let s = if let Some(v) = self.game_to_number(g) {
            Stops {
                left: v.clone(),
                right: v,
            }
        } else {
            let (left, right) = self.options(g);
            assert!(
                !left.is_empty() && !right.is_empty(),
                "a game lacking options on a side is a number"
            );
            let mut best_left: Option<Dyadic> = None;
            for &x in &left {
                let r = self.stops(x).right;
                best_left = Some(match best_left {
                    Some(cur) => cur.max(r),
                    None => r,
                });
            }
            let mut best_right: Option<Dyadic> = None;
            for &x in &right {
                let l = self.stops(x).left;
                best_right = Some(match best_right {
                    Some(cur) => cur.min(l),
                    None => l,
                });
            }
            Stops {
                left: best_left.unwrap(),
                right: best_right.unwrap(),
            }
        };
        self.memo.stops.insert(g, s.clone());
        s
    }

    /// The interval of numbers the game is confused with, as the pair
    /// (right stop, left stop). Whether the endpoints themselves are
    /// confused is not decided here.
    pub fn confusion_interval(&mut self, g: GameId) -> (Dyadic, Dyadic) {
        let s = self.stops(g);
        (s.right, s.left)
    }

    /// Whether every position has left options exactly when it has right
    /// options.
    pub fn is_all_small(&mut self, g: GameId) -> bool {
        if let Some(&b) = self.memo.all_small.get(&g) {
            return b;
        }
        let (left, right) = self.options(g);
        let mut result = left.is_empty() == right.is_empty();
        if result {
            for &opt in left.iter().chain(right.iter()) {
                if !self.is_all_small(opt) {
                    result = false;
                    break;
                }
            }
        }
        self.memo.all_small.insert(g, result);
        result
    }

    /// Whether the game lies strictly between `-2^-n` and `2^-n` for every
    /// `n`. For short games this is equivalent to both stops being 0 (or
    /// the game being the number 0), which is what is decided here.
    pub fn is_infinitesimal(&mut self, g: GameId) -> bool {
        match self.game_to_number(g) {
            Some(v) => v.is_zero(),
            None => {
                let s = self.stops(g);
                s.left.is_zero() && s.right.is_zero()
            }
        }
    }

    /// The sum of `m` copies of up.
    pub fn up_multiple(&mut self, m: u32) -> GameId {
        let mut acc = self.zero();
        let up = self.up();
        for _ in 0..m {
            acc = self.add(acc, up);
        }
        acc
    }

    /// Some positive `m` with `G <= m·up` or `G` less-or-fuzzy against
    /// `m·up`, for infinitesimal `G`. The bound certificate comes from the
    /// two-part recursion over options (taking `max(m1, m0+3)` on the way
    /// up); the returned value is the smallest one the engine order
    /// actually verifies, at most the certificate. It is not claimed
    /// minimal overall.
    pub fn up_multiple_bound(&mut self, g: GameId) -> Result<u32, Error> {
        if !self.is_infinitesimal(g) {
            return Err(Error::NotInfinitesimal);
        }
        let certificate = self.up_bound_le(g);
        for m in 1..=certificate {
            let mu = self.up_multiple(m);
            if self.leq(g, mu) || !self.leq(mu, g) {
                return Ok(m);
            }
        }
        unreachable!("certificate m={certificate} failed engine verification")
    }

    /// Bound `m` with `G <= m·up`, valid when `G <= 2^-n` for all `n`.
    fn up_bound_le(&mut self, g: GameId) -> u32 {
        if let Some(&m) = self.memo.up_bound_le.get(&g) {
            return m;
        }
        let m = if self.game_to_number(g).is_some() {
            // a number below every 2^-n is <= 0 < up
            1
        } else {
            let m0 = self.up_bound_lf(g);
            let (left, _) = self.options(g);
            let mut m1 = 1;
            for &x in &left {
                let mx = self.up_bound_lf(x);
                m1 = m1.max(mx);
            }
            m1.max(m0 + 3)
        };
        self.memo.up_bound_le.insert(g, m);
        m
    }

    /// Bound `m` with `G` less-or-fuzzy against `m·up`, valid when `G` is
    /// less-or-fuzzy against every `2^-n`.
    fn up_bound_lf(&mut self, g: GameId) -> u32 {
        if let Some(&m) = self.memo.up_bound_lf.get(&g) {
            return m;
        }
        let m = if self.game_to_number(g).is_some() {
            1
        } else {
            // one right option stays below every 2^-n; those are exactly
            // the right options with left stop <= 0
            let (_, right) = self.options(g);
            let mut pick = None;
            for &x in &right {
                let s = self.stops(x);
                if !s.left.is_positive() {
                    pick = Some(x);
                    break;
                }
            }
            let x = pick.expect("weak avoidance yields a right option below every 2^-n");
            self.up_bound_le(x)
        };
        self.memo.up_bound_lf.insert(g, m);
        m
    }

    /// Checks both number avoidance statements for a non-number `G` and a
    /// number `x`: the weak form (`x` less-or-fuzzy against `G` exactly
    /// when some left option is `>= x`) and the strong form
    /// (`G + x = {G^L + x | G^R + x}`). Returns their conjunction; used as
    /// a property-test driver.
    pub fn check_number_avoidance(&mut self, g: GameId, x: &Dyadic) -> Result<bool, Error> {
        if self.game_to_number(g).is_some() {
            return Err(Error::NumberAvoidanceOnNumber);
        }
        let xg = self.dyadic_to_game(x);
        let x_lf_g = !self.leq(g, xg);
        let (left, right) = self.options(g);
        let mut some_left_ge_x = false;
        for &gl in &left {
            if self.leq(xg, gl) {
                some_left_ge_x = true;
                break;
            }
        }
        let weak = x_lf_g == some_left_ge_x;
        let shifted_left: Vec<GameId> = left.iter().map(|&o| self.add(o, xg)).collect();
        let shifted_right: Vec<GameId> = right.iter().map(|&o| self.add(o, xg)).collect();
        let shifted = self.make_game(&shifted_left, &shifted_right);
        let total = self.add(g, xg);
        let strong = self.equal(total, shifted);
        Ok(weak && strong)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::Comparison;

    fn d(m: i64, n: u32) -> Dyadic {
        Dyadic::new(m, n)
    }

    #[test]
    fn stops_of_numbers_and_switches() {
        let mut a = Arena::new();
        let half_game = a.dyadic_to_game(&d(1, 1));
        let s = a.stops(half_game);
        assert_eq!(s.left, d(1, 1));
        assert_eq!(s.right, d(1, 1));
        let s = a.stops(a.star());
        assert_eq!(s.left, Dyadic::zero());
        assert_eq!(s.right, Dyadic::zero());
        let one = a.one();
        let two = a.add(one, one);
        let switch = a.make_game(&[two], &[one]);
        let s = a.stops(switch);
        assert_eq!(s.left, Dyadic::integer(2));
        assert_eq!(s.right, Dyadic::one());
    }

    #[test]
    fn confusion_interval_brackets_fuzzy_numbers() {
        let mut a = Arena::new();
        assert_eq!(
            a.confusion_interval(a.star()),
            (Dyadic::zero(), Dyadic::zero())
        );
        let one = a.one();
        let two = a.add(one, one);
        let switch = a.make_game(&[two], &[one]);
        assert_eq!(
            a.confusion_interval(switch),
            (Dyadic::one(), Dyadic::integer(2))
        );
        let mid = a.dyadic_to_game(&d(3, 1));
        assert_eq!(a.compare(switch, mid), Comparison::Fuzzy);
        let half = a.dyadic_to_game(&d(1, 1));
        let s = a.stops(half);
        assert_eq!((s.right.clone(), s.left), a.confusion_interval(half));
    }

    #[test]
    fn all_small_recognition() {
        let mut a = Arena::new();
        let star = a.star();
        let up = a.up();
        let down = a.down();
        for g in [star, up, down] {
            assert!(a.is_all_small(g));
        }
        assert!(!a.is_all_small(a.one()));
        // a miny has the number -1 buried in a position
        let zero = a.zero();
        let neg_one = a.neg_one();
        let inner = a.make_game(&[zero], &[neg_one]);
        let miny = a.make_game(&[zero], &[inner]);
        assert!(!a.is_all_small(miny));
        assert!(a.is_infinitesimal(miny));
    }

    #[test]
    fn infinitesimal_classification() {
        let mut a = Arena::new();
        assert!(a.is_infinitesimal(a.up()));
        assert!(a.is_infinitesimal(a.star()));
        assert!(a.is_infinitesimal(a.zero()));
        let half = a.dyadic_to_game(&d(1, 1));
        assert!(!a.is_infinitesimal(half));
        let one = a.one();
        let switch = a.make_game(&[one], &[a.neg_one()]);
        assert!(!a.is_infinitesimal(switch));
    }

    #[test]
    fn up_multiple_bounds_are_verified() {
        let mut a = Arena::new();
        let up = a.up();
        assert_eq!(a.up_multiple_bound(up), Ok(1));
        let down = a.down();
        assert_eq!(a.up_multiple_bound(down), Ok(1));
        let star = a.star();
        let m = a.up_multiple_bound(star).unwrap();
        assert!(m <= 2);
        let two_up = a.up_multiple(2);
        assert_eq!(a.compare(star, two_up), Comparison::Less);
        let half = a.dyadic_to_game(&d(1, 1));
        assert_eq!(a.up_multiple_bound(half), Err(Error::NotInfinitesimal));
    }

    #[test]
    fn number_avoidance_examples() {
        let mut a = Arena::new();
        let star = a.star();
        assert_eq!(a.check_number_avoidance(star, &Dyadic::zero()), Ok(true));
        let one = a.one();
        let two = a.add(one, one);
        let switch = a.make_game(&[two], &[one]);
        assert_eq!(a.check_number_avoidance(switch, &d(1, 1)), Ok(true));
        assert_eq!(
            a.check_number_avoidance(one, &Dyadic::zero()),
            Err(Error::NumberAvoidanceOnNumber)
        );
    }
}
