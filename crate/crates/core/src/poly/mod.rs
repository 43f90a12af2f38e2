//! Power products, term orderings, sparse multivariate and dense univariate
//! polynomials.

mod monomial;
mod multi;
mod parse;
mod ring;
mod uni;

pub use monomial::{PowerProduct, TermOrder};
pub use multi::MultiPoly;
pub use parse::parse_poly;
pub use ring::PolyRing;
pub use uni::UniPoly;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};
    use crate::error::Error;
    use num_bigint::BigInt;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn qring() -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, &["x", "y"], TermOrder::DegRevLex)
    }

    #[test]
    fn denominators() {
        let r = qring();
        assert_eq!(MultiPoly::zero(&r).den(), BigInt::from(1));
        assert_eq!(parse_poly(&r, "x/3 + 1/9").unwrap().den(), BigInt::from(9));
        assert_eq!(parse_poly(&r, "x + y").unwrap().den(), BigInt::from(1));
    }

    #[test]
    fn reduction_mod_p() {
        let r = qring();
        let f = parse_poly(&r, "y^2 + x/3 - y/9 + 1/9").unwrap();
        let r2 = r.with_field(PrimeField::new(2).unwrap());
        assert_eq!(f.map_mod_p(&r2).unwrap().to_string(), "y^2 + x + y + 1");
        let r3 = r.with_field(PrimeField::new(3).unwrap());
        assert_eq!(f.map_mod_p(&r3), Err(Error::UglyPrime(3)));
        let r5 = r.with_field(PrimeField::new(5).unwrap());
        let g = parse_poly(&r, "x^2 - y").unwrap();
        assert_eq!(g.map_mod_p(&r5).unwrap().to_string(), "x^2 + 4y");
    }

    #[test]
    fn substitution() {
        let r = qring();
        let f = parse_poly(&r, "x + y").unwrap();
        let mu = UniPoly::from_i64(Rationals, &[-5, 1]);
        assert_eq!(MultiPoly::subst_univariate(&mu, &f).to_string(), "x + y - 5");
        let mu = UniPoly::from_i64(Rationals, &[0, 0, 1]);
        assert_eq!(
            MultiPoly::subst_univariate(&mu, &f).to_string(),
            "x^2 + 2x*y + y^2"
        );
        let f2 = PrimeField::new(2).unwrap();
        let r2 = r.with_field(f2);
        let mu = UniPoly::from_i64(f2, &[0, 0, 0, 1]);
        let g = parse_poly(&r2, "x + y").unwrap();
        assert_eq!(
            MultiPoly::subst_univariate(&mu, &g).to_string(),
            "x^3 + x^2*y + x*y^2 + y^3"
        );
    }

    #[test]
    fn univariate_view() {
        let r = qring();
        let f = parse_poly(&r, "y^3 - 2y + 1").unwrap();
        assert_eq!(f.as_univariate(1).unwrap().to_string(), "z^3 - 2z + 1");
        assert!(f.as_univariate(0).is_none());
    }

    fn arb_qpoly() -> impl Strategy<Value = MultiPoly<Rationals>> {
        proptest::collection::vec(((0u32..3, 0u32..3), -20i64..20, 1i64..12), 0..6).prop_map(
            |ts| {
                let r = qring();
                let terms = ts
                    .into_iter()
                    .map(|((a, b), n, d)| {
                        (
                            PowerProduct::from_exps(&[a, b]),
                            num_rational::BigRational::new(n.into(), d.into()),
                        )
                    })
                    .collect();
                MultiPoly::from_terms(&r, terms)
            },
        )
    }

    proptest! {
        #[test]
        fn reduction_is_a_ring_homomorphism(f in arb_qpoly(), g in arb_qpoly()) {
            let p = 13;
            let r = PolyRing::new(PrimeField::new(p).unwrap(), &["x", "y"], TermOrder::DegRevLex);
            let d = f.den() * g.den();
            prop_assume!(&d % p != BigInt::from(0));
            let (fp, gp) = (f.map_mod_p(&r).unwrap(), g.map_mod_p(&r).unwrap());
            prop_assert_eq!(f.mul(&g).map_mod_p(&r).unwrap(), fp.mul(&gp));
            prop_assert_eq!(f.add(&g).map_mod_p(&r).unwrap(), fp.add(&gp));
        }

        #[test]
        fn print_parse_roundtrip(f in arb_qpoly()) {
            let r = qring();
            let text = f.to_string();
            let g = parse_poly(&r, &text).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(g.to_string(), text);
        }

        #[test]
        fn arithmetic_laws(f in arb_qpoly(), g in arb_qpoly(), h in arb_qpoly()) {
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            prop_assert_eq!(f.sub(&f), MultiPoly::zero(&qring()));
            prop_assert_eq!(f.mul(&g), g.mul(&f));
        }
    }
}
