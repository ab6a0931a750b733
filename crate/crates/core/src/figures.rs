//! Parameter sets behind the eight thermal figures and their sweeps.
//!
//! Figures 1/3/5/7 (Z, U, C, S) have one panel per sector and vary (ν₁, ν₂)
//! along the diagonal ν₁ = ν₂ ∈ {−0.4, −0.2, 0, 0.2, 0.4} and the
//! anti-diagonal ν₁ = −ν₂ ∈ {±0.2, ±0.4}. Figures 2/4/6/8 have one panel per
//! (±0.4, ±0.4) and one curve per sector.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::params::{Branch, Ell, Parity, Sector, WignerParams};
use crate::thermo::{default_grid, sweep, Ladder, Mode, Quantity, ThermoCurve};

/// Figure number 1–8 with an optional panel letter a–d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FigureId {
    pub number: u8,
    pub panel: Option<char>,
}

impl FigureId {
    pub fn new(number: u8, panel: Option<char>) -> Result<Self> {
        if !(1..=8).contains(&number) {
            return Err(Error::Parse(format!("unknown figure {number} (expected 1 to 8)")));
        }
        if let Some(p) = panel {
            if !('a'..='d').contains(&p) {
                return Err(Error::Parse(format!("unknown panel {p:?} (expected a to d)")));
            }
        }
        Ok(Self { number, panel })
    }

    pub fn quantity(self) -> Quantity {
        match self.number {
            1 | 2 => Quantity::Z,
            3 | 4 => Quantity::U,
            5 | 6 => Quantity::C,
            _ => Quantity::S,
        }
    }

    /// Odd figures vary ν within a sector; even figures vary the sector.
    pub fn varies_sector(self) -> bool {
        self.number.is_multiple_of(2)
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number)?;
        if let Some(p) = self.panel {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown figure {s:?} (expected 1 to 8, optionally followed by a to d)"));
        let (digits, panel) = match s.char_indices().last() {
            Some((i, c)) if c.is_ascii_alphabetic() => (&s[..i], Some(c.to_ascii_lowercase())),
            Some(_) => (s, None),
            None => return Err(bad()),
        };
        let number: u8 = digits.parse().map_err(|_| bad())?;
        Self::new(number, panel).map_err(|_| bad())
    }
}

/// Values ν₁ = ν₂ used on the diagonal of the odd figures.
pub const DIAGONAL_NU: [f64; 5] = [-0.4, -0.2, 0.0, 0.2, 0.4];
/// Values v with (ν₁, ν₂) = (v, −v) added to the odd figures.
pub const ANTI_DIAGONAL_NU: [f64; 4] = [-0.4, -0.2, 0.2, 0.4];
/// Panel parameters of the even figures, panels a to d.
pub const EVEN_PANEL_NU: [(f64, f64); 4] = [(0.4, 0.4), (0.4, -0.4), (-0.4, 0.4), (-0.4, -0.4)];

#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec {
    pub sector: Sector,
    pub nu1: f64,
    pub nu2: f64,
    pub ell: Ell,
}

impl CurveSpec {
    pub fn params(&self) -> Result<WignerParams> {
        WignerParams::from_f64(self.nu1, self.nu2)
    }

    pub fn label(&self) -> String {
        format!("sector={} nu1={} nu2={} ell={}", self.sector, self.nu1, self.nu2, self.ell)
    }

    /// File-name stem such as `pm_nu1_0.4_nu2_-0.4`.
    pub fn stem(&self) -> String {
        let tag = match self.sector {
            Sector::PlusPlus => "pp",
            Sector::MinusMinus => "mm",
            Sector::PlusMinus => "pm",
            Sector::MinusPlus => "mp",
        };
        format!("{tag}_nu1_{}_nu2_{}", self.nu1, self.nu2)
    }

    pub fn ladder(&self) -> Result<Ladder> {
        Ladder::for_level(self.sector, self.ell, Branch::Plus, &self.params()?)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PanelSpec {
    pub letter: char,
    pub caption: String,
    pub curves: Vec<CurveSpec>,
}

/// ℓ for each parity; defaults 1 and 1/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EllChoice {
    pub even: Ell,
    pub odd: Ell,
}

impl EllChoice {
    pub fn for_parity(&self, parity: Parity) -> Ell {
        match parity {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }
}

impl Default for EllChoice {
    fn default() -> Self {
        Self {
            even: Ell::minimum(Parity::Even),
            odd: Ell::minimum(Parity::Odd),
        }
    }
}

fn panel_letter(index: usize) -> char {
    (b'a' + index as u8) as char
}

/// Panels of a figure (all four, or only the requested one).
pub fn figure_panels(id: FigureId, ells: &EllChoice) -> Vec<PanelSpec> {
    let curve = |sector: Sector, nu1: f64, nu2: f64| CurveSpec {
        sector,
        nu1,
        nu2,
        ell: ells.for_parity(sector.epsilon()),
    };
    let panels: Vec<PanelSpec> = if id.varies_sector() {
        EVEN_PANEL_NU
            .iter()
            .enumerate()
            .map(|(i, &(nu1, nu2))| PanelSpec {
                letter: panel_letter(i),
                caption: format!("nu1={nu1} nu2={nu2}"),
                curves: Sector::ALL.iter().map(|&s| curve(s, nu1, nu2)).collect(),
            })
            .collect()
    } else {
        Sector::ALL
            .iter()
            .enumerate()
            .map(|(i, &sector)| {
                let diagonal = DIAGONAL_NU.iter().map(|&v| curve(sector, v, v));
                let anti = ANTI_DIAGONAL_NU.iter().map(|&v| curve(sector, v, -v));
                PanelSpec {
                    letter: panel_letter(i),
                    caption: format!("sector {sector}"),
                    curves: diagonal.chain(anti).collect(),
                }
            })
            .collect()
    };
    match id.panel {
        Some(p) => panels.into_iter().filter(|panel| panel.letter == p).collect(),
        None => panels,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureCurve {
    pub panel: char,
    pub spec: CurveSpec,
    pub curve: ThermoCurve,
}

/// Evaluates every curve of the figure on `grid` (default grid if `None`).
pub fn generate(id: FigureId, ells: &EllChoice, mode: Mode, grid: Option<&[f64]>) -> Result<Vec<FigureCurve>> {
    let default;
    let grid = match grid {
        Some(g) => g,
        None => {
            default = default_grid();
            &default
        }
    };
    let mut out = Vec::new();
    for panel in figure_panels(id, ells) {
        for spec in panel.curves {
            let curve = sweep(id.quantity(), &spec.ladder()?, mode, grid)?;
            out.push(FigureCurve {
                panel: panel.letter,
                spec,
                curve,
            });
        }
    }
    Ok(out)
}

/// Number of strict interior local maxima (plateaus count once).
pub fn interior_maxima(values: &[f64]) -> usize {
    let mut count = 0;
    let mut rising = false;
    for w in values.windows(2) {
        if w[1] > w[0] {
            rising = true;
        } else if w[1] < w[0] {
            if rising {
                count += 1;
            }
            rising = false;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_ids() {
        assert_eq!("2a".parse::<FigureId>().unwrap(), FigureId { number: 2, panel: Some('a') });
        assert_eq!("5".parse::<FigureId>().unwrap().quantity(), Quantity::C);
        assert!("9".parse::<FigureId>().is_err());
        assert!("2e".parse::<FigureId>().is_err());
        assert!("".parse::<FigureId>().is_err());
    }

    #[test]
    fn figure_2a_has_four_sectors() {
        let panels = figure_panels("2a".parse().unwrap(), &EllChoice::default());
        assert_eq!(panels.len(), 1);
        let curves = &panels[0].curves;
        assert_eq!(curves.len(), 4);
        assert!(curves.iter().all(|c| c.nu1 == 0.4 && c.nu2 == 0.4));
        let sectors: Vec<_> = curves.iter().map(|c| c.sector).collect();
        assert_eq!(sectors, Sector::ALL.to_vec());
        assert_eq!(curves[2].ell, Ell::half_odd(0));
    }

    #[test]
    fn odd_figures_sweep_nu() {
        let panels = figure_panels("1".parse().unwrap(), &EllChoice::default());
        assert_eq!(panels.len(), 4);
        assert!(panels.iter().all(|p| p.curves.len() == 9));
    }

    #[test]
    fn anti_diagonal_matches_undeformed_in_plus_plus() {
        let id: FigureId = "1a".parse().unwrap();
        let curves = generate(id, &EllChoice::default(), Mode::Consistent, None).unwrap();
        let base = curves.iter().find(|c| c.spec.nu1 == 0.0 && c.spec.nu2 == 0.0).unwrap();
        for c in curves.iter().filter(|c| c.spec.nu1 == -c.spec.nu2 && c.spec.nu1 != 0.0) {
            assert_eq!(c.curve.values, base.curve.values, "{}", c.spec.label());
        }
    }

    #[test]
    fn maxima_counter() {
        assert_eq!(interior_maxima(&[0.0, 1.0, 0.5, 0.7, 0.6]), 2);
        assert_eq!(interior_maxima(&[0.0, 1.0, 1.0, 0.5]), 1);
        assert_eq!(interior_maxima(&[0.0, 1.0, 2.0]), 0);
    }
}
