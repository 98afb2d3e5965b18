use crate::field::Field;
use crate::module::Character;
use crate::weyl::{ParamKind, PositiveCoroot};

/// The set `P(χ)` of positive coroots on which `χ` hits `q_α^{±2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KatoResult {
    pub pchi: Vec<PositiveCoroot>,
    pub irreducible: bool,
}

impl KatoResult {
    pub fn labels(&self) -> Vec<&'static str> {
        self.pchi.iter().map(|c| c.label()).collect()
    }
}

pub fn kato<F: Field>(chi: &Character<F>) -> KatoResult {
    let params = chi.params();
    let pchi: Vec<PositiveCoroot> = PositiveCoroot::ALL
        .into_iter()
        .filter(|c| {
            let qa = match c.param() {
                ParamKind::Q => params.q(),
                ParamKind::P => params.p(),
            };
            let sq = qa.square();
            let inv = sq.checked_inv().expect("nonzero");
            let val = chi.eval(c.vector());
            val == sq || val == inv
        })
        .collect();
    KatoResult {
        irreducible: pchi.is_empty(),
        pchi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational as Q;
    use crate::hecke::Parameters;

    #[test]
    fn table_rows_and_a_generic_point() {
        let params = Parameters::new(Q::from_int(5), Q::from_int(3)).unwrap();
        let chi = |a: Q, b: Q| Character::new(a, b, &params).unwrap();
        let a = kato(&chi(Q::from_int(45), Q::from_int(5)));
        assert_eq!(a.labels(), vec!["a1", "a2"]);
        let c = kato(&chi(Q::from_parts(-1, 5, 0, 1), Q::from_int(5)));
        assert_eq!(c.labels(), vec!["a2", "2a1+a2"]);
        let g = kato(&chi(Q::from_int(2), Q::from_int(7)));
        assert!(g.irreducible && g.pchi.is_empty());
    }
}
