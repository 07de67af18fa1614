use serde::{Deserialize, Serialize};

/// The integrals behind one inequality evaluated on one function.
///
/// `deficit = energy - constant * (entropy - correction)`; `correction` is
/// zero for the unit-mass forms. `ratio` is `energy / (entropy - correction)`
/// when that denominator is positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FunctionalReport {
    pub mass: f64,
    pub entropy: f64,
    pub energy: f64,
    pub constant: f64,
    pub deficit: f64,
    pub ratio: Option<f64>,
    /// Normalization parameter `m`: the root mean square for the L² forms,
    /// the mean for the density form.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<f64>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub correction: f64,
}

fn is_zero(v: &f64) -> bool {
    *v == 0.0
}

impl FunctionalReport {
    pub(crate) fn assemble(
        mass: f64,
        entropy: f64,
        energy: f64,
        constant: f64,
        correction: f64,
        m: Option<f64>,
    ) -> Self {
        let centred = entropy - correction;
        Self {
            mass,
            entropy,
            energy,
            constant,
            deficit: energy - constant * centred,
            ratio: (centred > 0.0).then(|| energy / centred),
            m,
            correction,
        }
    }

    pub const CSV_HEADER: &'static str = "mass,entropy,energy,constant,deficit,ratio";

    /// `mass,entropy,energy,constant,deficit,ratio`; a missing ratio is an
    /// empty field.
    pub fn csv_row(&self) -> String {
        let ratio = self.ratio.map(|r| format!("{r:?}")).unwrap_or_default();
        format!(
            "{:?},{:?},{:?},{:?},{:?},{}",
            self.mass, self.entropy, self.energy, self.constant, self.deficit, ratio
        )
    }
}
