use super::{CharacterTable, ChartabError};

/// A real representation as multiplicities over the real irreducibles of a
/// [`CharacterTable`], indexed like [`CharacterTable::real`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RGModule {
    mults: Vec<u32>,
}

impl RGModule {
    pub fn zero(irreducibles: usize) -> Self {
        RGModule {
            mults: vec![0; irreducibles],
        }
    }

    pub fn from_multiplicities(mults: Vec<u32>) -> Self {
        RGModule { mults }
    }

    /// A single copy of irreducible `index`.
    pub fn irreducible(irreducibles: usize, index: usize) -> Self {
        let mut m = Self::zero(irreducibles);
        m.mults[index] = 1;
        m
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mults
    }

    pub fn multiplicity(&self, index: usize) -> u32 {
        self.mults[index]
    }

    pub fn is_zero(&self) -> bool {
        self.mults.iter().all(|&m| m == 0)
    }

    /// `(index, multiplicity)` for every summand present.
    pub fn summands(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.mults
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i, m))
    }

    pub fn add_copies(&mut self, index: usize, copies: u32) {
        self.mults[index] += copies;
    }

    pub fn direct_sum(&self, other: &RGModule) -> RGModule {
        assert_eq!(
            self.mults.len(),
            other.mults.len(),
            "modules over different tables"
        );
        RGModule {
            mults: self
                .mults
                .iter()
                .zip(&other.mults)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn dimension(&self, table: &CharacterTable) -> u64 {
        self.summands()
            .map(|(i, m)| m as u64 * table.real()[i].degree())
            .sum()
    }

    /// `U6+2*W8_1` style text, `0` for the zero module.
    pub fn display(&self, table: &CharacterTable) -> String {
        let parts: Vec<String> = self
            .summands()
            .map(|(i, m)| {
                let name = table.real()[i].name();
                if m == 1 {
                    name.to_string()
                } else {
                    format!("{m}*{name}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    /// Inverse of [`RGModule::display`].
    pub fn parse(table: &CharacterTable, text: &str) -> Result<RGModule, ChartabError> {
        let mut module = RGModule::zero(table.real().len());
        let text = text.trim();
        if text == "0" {
            return Ok(module);
        }
        for part in text.split('+') {
            let part = part.trim();
            let (copies, name) = match part.split_once('*') {
                Some((m, name)) => (
                    m.trim().parse::<u32>().map_err(|_| {
                        ChartabError::Parse(format!("bad multiplicity in {part:?}"))
                    })?,
                    name.trim(),
                ),
                None => (1, part),
            };
            let index = table
                .real_index(name)
                .ok_or_else(|| ChartabError::UnknownCharacter(name.to_string()))?;
            module.add_copies(index, copies);
        }
        Ok(module)
    }
}
