//! Evaluation over ranges of genera.
//!
//! With the `parallel` feature the genera are spread over the rayon thread
//! pool; results always come back in ascending genus order.

use std::ops::RangeInclusive;

pub fn map_genera_sequential<T, F>(genera: RangeInclusive<u32>, f: F) -> Vec<T>
where
    F: Fn(u32) -> T,
{
    genera.map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_genera_parallel<T, F>(genera: RangeInclusive<u32>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u32) -> T + Sync + Send,
{
    use rayon::prelude::*;
    genera.into_par_iter().map(f).collect()
}

pub fn map_genera<T, F>(genera: RangeInclusive<u32>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u32) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_genera_parallel(genera, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_genera_sequential(genera, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let seq = map_genera_sequential(2..=20, |g| g * g);
        assert_eq!(map_genera(2..=20, |g| g * g), seq);
        assert_eq!(seq[0], 4);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        assert_eq!(
            map_genera_parallel(2..=9, |g| g + 1),
            map_genera_sequential(2..=9, |g| g + 1)
        );
        let (lo, hi) = (3, 2);
        let empty = lo..=hi;
        assert!(map_genera_parallel(empty, |g| g).is_empty());
    }
}
