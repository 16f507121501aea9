//! Explicit isometries `c → W_f` for 1-complemented hyperplanes, and the
//! identification `W_f = c₀` when `f = ±e₁`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hyperplane::{classify, member, one_complemented, HyperplaneClass};
use crate::rational::{self, Rational};
use crate::seq::{ConvergentSeq, L1Functional};

/// The coordinate `j₀` (smallest qualifying index) driving the isometry.
pub fn pivot_index(f: &L1Functional) -> Result<usize> {
    one_complemented(f)
        .first()
        .copied()
        .ok_or(Error::NotOneComplemented)
}

/// `T(x) = (x₁, …, x_{j₀−2}, α, x_{j₀−1}, x_{j₀}, …)` where `α` is the unique
/// value putting `T(x)` in `ker f`.
pub fn embed_c_into_wf(f: &L1Functional, x: &ConvergentSeq) -> Result<ConvergentSeq> {
    let j0 = pivot_index(f)?;
    // Coordinates of T(x) other than position j₀ − 1 are x shifted right by one
    // past that position; the limit is unchanged.
    let len = x.prefix_len().max(f.support_len()) + 1;
    let mut coords: Vec<Rational> = x.coords(len);
    coords.insert(j0 - 2, Rational::zero());
    let partial = ConvergentSeq::new(coords.clone(), x.tail().clone());
    let alpha = -f.pair(&partial) / f.coeff(j0);
    coords[j0 - 2] = alpha;
    Ok(ConvergentSeq::new(coords, x.tail().clone()))
}

/// Inverse of [`embed_c_into_wf`]: deletes coordinate `j₀ − 1`.
pub fn project_wf_to_c(f: &L1Functional, y: &ConvergentSeq) -> Result<ConvergentSeq> {
    let j0 = pivot_index(f)?;
    if !member(f, y) {
        return Err(Error::NotInHyperplane(rational::format(&f.pair(y))));
    }
    let mut coords = y.coords(y.prefix_len().max(j0 - 1));
    coords.remove(j0 - 2);
    Ok(ConvergentSeq::new(coords, y.tail().clone()))
}

/// Identity on `W_f = c₀`; only meaningful for `f = ±e₁`.
pub fn iso_c0(f: &L1Functional, x: &ConvergentSeq) -> Result<ConvergentSeq> {
    let class = classify(f);
    if class != HyperplaneClass::IsoC0 {
        return Err(Error::WrongClass {
            expected: "iso_c0",
            got: class,
        });
    }
    if !x.limit().is_zero() {
        return Err(Error::NotInC0(rational::format(x.limit())));
    }
    Ok(x.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: &[(i64, i64)]) -> L1Functional {
        L1Functional::from_ratios(p).unwrap()
    }

    fn seq(p: &[(i64, i64)], t: (i64, i64)) -> ConvergentSeq {
        ConvergentSeq::from_ratios(p, t)
    }

    #[test]
    fn embed_examples() {
        let cases = [
            (
                f(&[(0, 1), (1, 1)]),
                seq(&[(5, 1)], (2, 1)),
                seq(&[(0, 1), (5, 1)], (2, 1)),
            ),
            (
                f(&[(1, 2), (1, 2)]),
                seq(&[], (1, 1)),
                seq(&[(-1, 1)], (1, 1)),
            ),
            (
                f(&[(1, 4), (1, 2), (1, 4)]),
                seq(&[(1, 1)], (0, 1)),
                seq(&[(-1, 2), (1, 1)], (0, 1)),
            ),
        ];
        for (g, x, want) in cases {
            let y = embed_c_into_wf(&g, &x).unwrap();
            assert_eq!(y, want);
            assert!(member(&g, &y));
            assert_eq!(y.sup_norm(), x.sup_norm());
            assert_eq!(project_wf_to_c(&g, &y).unwrap(), x);
        }
    }

    #[test]
    fn embed_with_later_pivot() {
        // j₀ = 3: α is inserted at coordinate 2.
        let g = f(&[(1, 8), (1, 8), (3, 4)]);
        let x = seq(&[(1, 1), (-1, 1), (1, 2)], (1, 3));
        let y = embed_c_into_wf(&g, &x).unwrap();
        assert_eq!(y.coord(1), x.coord(1));
        assert_eq!(y.coord(3), x.coord(2));
        assert_eq!(y.coord(4), x.coord(3));
        assert!(member(&g, &y));
        assert_eq!(y.sup_norm(), x.sup_norm());
        assert_eq!(project_wf_to_c(&g, &y).unwrap(), x);
    }

    #[test]
    fn project_examples() {
        assert_eq!(
            project_wf_to_c(&f(&[(0, 1), (1, 1)]), &seq(&[(0, 1), (5, 1)], (2, 1))).unwrap(),
            seq(&[(5, 1)], (2, 1))
        );
        assert_eq!(
            project_wf_to_c(&f(&[(1, 2), (1, 2)]), &seq(&[(-1, 1)], (1, 1))).unwrap(),
            seq(&[], (1, 1))
        );
        assert!(matches!(
            project_wf_to_c(&f(&[(0, 1), (1, 1)]), &seq(&[(1, 1)], (0, 1))),
            Err(Error::NotInHyperplane(_))
        ));
        assert_eq!(
            embed_c_into_wf(&f(&[(3, 4), (1, 4)]), &seq(&[], (1, 1))),
            Err(Error::NotOneComplemented)
        );
    }

    #[test]
    fn c0_identification() {
        let x = seq(&[(3, 1)], (0, 1));
        assert_eq!(iso_c0(&f(&[(1, 1)]), &x).unwrap(), x);
        assert_eq!(
            iso_c0(&f(&[(-1, 1)]), &ConvergentSeq::zero()).unwrap(),
            ConvergentSeq::zero()
        );
        assert!(matches!(
            iso_c0(&f(&[(1, 1)]), &seq(&[], (1, 1))),
            Err(Error::NotInC0(_))
        ));
        assert!(matches!(
            iso_c0(&f(&[(3, 4), (1, 4)]), &x),
            Err(Error::WrongClass { .. })
        ));
    }
}
