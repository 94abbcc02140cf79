use crate::algorithms::{Algorithm, Model};
use crate::alpha::Alpha;

/// Guaranteed fraction of OPT (the reciprocal of the approximation factor)
/// for `model` at budget `alpha`.
///
/// With `beta = Some(β)` the β-restricted RSD guarantee
/// `1 / (√(β − 3/4) + 1/2)` is returned instead; it needs no metric.
pub fn theoretical_bound(model: Model, alpha: Alpha, beta: Option<f64>) -> f64 {
    if let Some(beta) = beta {
        return 1.0 / ((beta - 0.75).sqrt() + 0.5);
    }
    let a = alpha.as_f64();
    match model {
        Model::OneSided => 1.0 / (3.0 - (2.0 - 2f64.sqrt()) * a),
        Model::TwoSided if alpha < Alpha::HALF => 1.0 / (3.0 - a),
        Model::TwoSided => {
            let a = alpha.min(Alpha::THREE_QUARTERS).as_f64();
            (2.0 * a * a - 3.0 * a + 3.0) / ((3.0 - 2.0 * a) * (3.0 - a))
        }
        Model::TotalOrder => {
            let s = (1.0 - alpha.min(Alpha::THREE_QUARTERS).as_f64()).sqrt();
            (2.0 - s) / (2.0 + s)
        }
    }
}

/// The guarantee that applies to `alg` run at `alpha`.
pub fn algorithm_bound(alg: Algorithm, alpha: Alpha, beta: Option<f64>) -> f64 {
    match alg {
        Algorithm::Random if beta.is_none() => 1.0 / 3.0,
        Algorithm::Random => 1.0 / beta.expect("checked").max(1.0),
        Algorithm::Rsd => theoretical_bound(Model::OneSided, Alpha::ONE, beta),
        Algorithm::RsdPartial if beta.is_some() && alpha == Alpha::ONE => {
            theoretical_bound(Model::OneSided, alpha, beta)
        }
        other => theoretical_bound(other.model(), alpha, None),
    }
}
