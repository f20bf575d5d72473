//! Global counting bounds on `|MUS(T)|` and the positional stabbing bound.

use crate::error::Result;
use crate::mus::MusSet;
use crate::text::Text;

/// Number of maximal runs of equal symbols.
pub fn rle_size(t: &Text) -> Result<usize> {
    t.require_nonempty()?;
    let b = t.as_bytes();
    Ok(1 + b.windows(2).filter(|w| w[0] != w[1]).count())
}

/// Upper bound on `max_i |MUS(T, i)|` for a text of length `n`.
///
/// If `h + 1` MUSs share a position then `h^2/6 + h - 3/2 < 2n`, i.e.
/// `(h + 3)^2 < 12n + 18`, so the count `h + 1` is below `sqrt(12n + 18) - 2`.
pub fn sqrt_bound(n: usize) -> f64 {
    (12.0 * n as f64 + 18.0).sqrt() - 2.0
}

/// Exact integer form of `count <= sqrt(12n + 18) - 2`.
pub fn within_sqrt_bound(count: usize, n: usize) -> bool {
    let c = count as u128 + 2;
    c * c <= 12 * n as u128 + 18
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub mus_count: usize,
    pub rle_size: usize,
    pub max_stab_pos: usize,
    pub max_stab_count: usize,
    pub sqrt_bound: f64,
    /// `|MUS(T)| <= n`
    pub bound_n_ok: bool,
    /// `|MUS(T)| <= 2m - 1` for RLE size `m`
    pub bound_rle_ok: bool,
    /// `max_stab <= sqrt(12n + 18) - 2`
    pub bound_sqrt_ok: bool,
}

impl BoundReport {
    pub fn all_ok(&self) -> bool {
        self.bound_n_ok && self.bound_rle_ok && self.bound_sqrt_ok
    }
}

/// Evaluates the three bounds for `t` with `ms = MUS(t)`.
pub fn check_bounds(t: &Text, ms: &MusSet) -> Result<BoundReport> {
    let n = t.len();
    let rle = rle_size(t)?;
    let (max_stab_pos, max_stab_count) = ms.max_stab();
    let mus_count = ms.len();
    let sqrt_bound = sqrt_bound(n);
    Ok(BoundReport {
        n,
        mus_count,
        rle_size: rle,
        max_stab_pos,
        max_stab_count,
        sqrt_bound,
        bound_n_ok: mus_count <= n,
        bound_rle_ok: mus_count < 2 * rle,
        bound_sqrt_ok: (max_stab_count as f64) <= sqrt_bound
            && within_sqrt_bound(max_stab_count, n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mus::mus_of;

    #[test]
    fn rle_examples() {
        assert_eq!(rle_size(&Text::from("aaaa")), Ok(1));
        assert_eq!(rle_size(&Text::from("banana")), Ok(6));
        assert_eq!(rle_size(&Text::from("aabbba")), Ok(3));
        assert!(rle_size(&Text::default()).is_err());
    }

    #[test]
    fn sqrt_bound_values() {
        assert!((sqrt_bound(6) - (90f64.sqrt() - 2.0)).abs() < 1e-12);
        assert!((sqrt_bound(72) - 27.698).abs() < 1e-3);
        assert!((sqrt_bound(1) - 3.477).abs() < 1e-3);
        // (c + 2)^2 <= 12n + 18 at the boundary: n = 1 admits c = 3, not 4.
        assert!(within_sqrt_bound(3, 1));
        assert!(!within_sqrt_bound(4, 1));
    }

    #[test]
    fn bound_examples() {
        let t = Text::from("banana");
        let r = check_bounds(&t, &mus_of(&t).unwrap()).unwrap();
        assert_eq!((r.mus_count, r.rle_size, r.max_stab_count), (2, 6, 1));
        assert!(r.all_ok());

        let t = Text::from("a");
        let r = check_bounds(&t, &mus_of(&t).unwrap()).unwrap();
        assert_eq!((r.mus_count, r.rle_size, r.max_stab_count), (1, 1, 1));
        assert!(r.all_ok());
    }
}
