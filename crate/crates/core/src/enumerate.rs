//! Exhaustive enumeration of down-closed families.

use crate::error::{Error, Result};
use crate::subset::Subset;

/// All subsets `S` with `x ∈ S ⇒ below[x] ⊆ S`, where `below[x]` is the
/// principal down-set of `x` in a partial order (so it contains `x`).
///
/// Elements are decided in a linear extension, so every branch of the
/// search yields a distinct down-set and there are no dead ends. Fails
/// once more than `cap` sets would be produced.
pub fn down_sets(below: &[Subset], cap: usize) -> Result<Vec<Subset>> {
    let n = below.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (below[x].count(), x));
    let mut out = Vec::new();
    let mut current = Subset::empty(n);
    walk(below, &order, 0, &mut current, &mut out, cap)?;
    Ok(out)
}

fn walk(
    below: &[Subset],
    order: &[usize],
    pos: usize,
    current: &mut Subset,
    out: &mut Vec<Subset>,
    cap: usize,
) -> Result<()> {
    if pos == order.len() {
        if out.len() >= cap {
            return Err(Error::SizeTooLarge {
                size: out.len() + 1,
                limit: cap,
            });
        }
        out.push(current.clone());
        return Ok(());
    }
    let x = order[pos];
    walk(below, order, pos + 1, current, out, cap)?;
    let mut strictly_below = below[x].clone();
    strictly_below.remove(x);
    if strictly_below.is_subset(current) {
        current.insert(x);
        walk(below, order, pos + 1, current, out, cap)?;
        current.remove(x);
    }
    Ok(())
}

/// All subsets `S` with `x ∈ S ⇒ above[x] ⊆ S`.
pub fn up_sets(above: &[Subset], cap: usize) -> Result<Vec<Subset>> {
    down_sets(above, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_of_three_has_four_down_sets() {
        let below: Vec<Subset> = (0..3).map(|x| Subset::from_indices(3, 0..=x)).collect();
        let sets = down_sets(&below, 100).unwrap();
        assert_eq!(sets.len(), 4);
    }

    #[test]
    fn antichain_has_all_subsets() {
        let below: Vec<Subset> = (0..4).map(|x| Subset::singleton(4, x)).collect();
        assert_eq!(down_sets(&below, 100).unwrap().len(), 16);
        assert!(matches!(down_sets(&below, 10), Err(Error::SizeTooLarge { .. })));
    }
}
