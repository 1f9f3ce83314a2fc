use serde::Serialize;

use crate::error::{Error, Result};
use num_traits::Zero;

use crate::polycore::{Degree, Poly2};

/// Flags for the adapted-coordinate hypotheses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdaptedReport {
    pub monomial_xd_present: bool,
    pub monomial_yd_present: bool,
    pub infinity_transversal: bool,
}

impl AdaptedReport {
    pub fn all(&self) -> bool {
        self.monomial_xd_present && self.monomial_yd_present && self.infinity_transversal
    }
}

/// A plane curve `{R = 0}` together with its validation report.
///
/// Affine smoothness is taken on trust; the numeric layer fails loudly at singular points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveSpec {
    pub r: Poly2,
    pub d: u32,
    pub adapted: AdaptedReport,
}

/// Checks the leading monomials and transversality to the line at infinity.
pub fn validate_curve(r: Poly2) -> Result<CurveSpec> {
    let d = match r.degree() {
        Degree::NegInfinity => return Err(Error::ZeroCurve),
        Degree::Finite(0) => return Err(Error::Invalid("a nonzero constant does not define a curve".into())),
        Degree::Finite(d) => d,
    };
    let r2_at_infinity = r.to_infinity_chart(d).restrict_y_zero();
    let adapted = AdaptedReport {
        monomial_xd_present: !r.coeff(d, 0).is_zero(),
        monomial_yd_present: !r.coeff(0, d).is_zero(),
        infinity_transversal: r2_at_infinity.degree() == Some(d as usize) && r2_at_infinity.is_squarefree(),
    };
    Ok(CurveSpec { r, d, adapted })
}



/// `R₂(x₂, y₂) = y₂^d R(x₂/y₂, 1/y₂)`.
pub fn infinity_chart(c: &CurveSpec) -> Result<Poly2> {
    if c.r.degree() != Degree::Finite(c.d) {
        return Err(Error::DegreeMismatch { declared: c.d, actual: c.r.degree().to_string() });
    }
    Ok(c.r.to_infinity_chart(c.d))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChartTransferReport {
    pub pass: bool,
    /// `y₂^(d-1)·(R_x ∘ chart) − ∂R₂/∂x₂`; zero on success.
    pub residual: Poly2,
}

/// Verifies `y₂^(d−1) · R_x(x₂/y₂, 1/y₂) = ∂R₂/∂x₂` as an exact polynomial identity.
pub fn chart_partial_transfer(c: &CurveSpec) -> Result<ChartTransferReport> {
    let r2 = infinity_chart(c)?;
    let lhs = c.r.partial(1, 0).to_infinity_chart(c.d - 1);
    let residual = &lhs - &r2.partial(1, 0);
    Ok(ChartTransferReport { pass: residual.is_zero(), residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_poly;
    use crate::rational::{frac, Rational};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn curve(s: &str) -> CurveSpec {
        validate_curve(parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn validation_flags() {
        let c = curve("x^4 + y^4 - 2");
        assert_eq!(c.d, 4);
        assert!(c.adapted.all());

        let c = curve("x^2*y - 1");
        assert_eq!(c.d, 3);
        assert!(!c.adapted.monomial_yd_present);

        let c = curve("x^5 + y^5");
        assert!(c.adapted.infinity_transversal);

        // (x - y)^2 meets infinity tangentially
        let c = curve("x^2 - 2*x*y + y^2 + x");
        assert!(!c.adapted.infinity_transversal);

        assert_eq!(validate_curve(Poly2::zero()), Err(Error::ZeroCurve));
    }

    #[test]
    fn chart_examples() {
        assert_eq!(infinity_chart(&curve("x^4 + y^4 - 2")).unwrap(), parse_poly("x^4 - 2*y^4 + 1").unwrap());
        for d in 1..8 {
            let c = curve(&format!("x^{d} + y^{d}"));
            assert_eq!(infinity_chart(&c).unwrap(), parse_poly(&format!("x^{d} + 1")).unwrap());
        }
        assert_eq!(infinity_chart(&curve("x^3 + y^3 + x")).unwrap(), parse_poly("x^3 + x*y^2 + 1").unwrap());

        let mut bad = curve("x^3 + y^3 + x");
        bad.d = 4;
        assert!(matches!(infinity_chart(&bad), Err(Error::DegreeMismatch { declared: 4, .. })));
    }

    #[test]
    fn partial_transfer_examples() {
        for s in ["x^4 + y^4 - 2", "x^3 + y^3 + x", "x + y - 1", "x^5 + 3*x^2*y^3 - x*y + y^5 + 7"] {
            let rep = chart_partial_transfer(&curve(s)).unwrap();
            assert!(rep.pass, "{s}: residual {}", rep.residual);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn chart_reproduces_affine_values(xn in -20i64..20, yn in -20i64..20, yd in 1i64..7) {
            prop_assume!(yn != 0);
            let c = curve("x^3 + y^3 + x - 1/2*x*y + 5");
            let r2 = infinity_chart(&c).unwrap();
            let x2 = frac(xn, yd);
            let y2 = frac(yn, yd);
            let (x, y) = (&x2 / &y2, Rational::one() / &y2);
            let lhs = r2.eval(&x2, &y2) / num_traits::pow(y2.clone(), 3);
            prop_assert_eq!(lhs, c.r.eval(&x, &y));
            prop_assert!(!Rational::is_zero(&y2));
        }
    }
}
