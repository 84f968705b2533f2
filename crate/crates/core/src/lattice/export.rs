use serde::{Deserialize, Serialize};

use super::SubgroupLattice;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeClassExport {
    pub label: String,
    pub iso_type: String,
    pub order: usize,
    pub class_size: usize,
    pub normal: bool,
    /// Generators of the representative in 1-based cycle notation.
    pub generators: Vec<String>,
}

/// Diffable dump of a lattice; edges name the smaller class first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeExport {
    pub group_order: usize,
    pub classes: Vec<LatticeClassExport>,
    pub edges: Vec<(String, String)>,
}

impl SubgroupLattice {
    pub fn export(&self) -> LatticeExport {
        let g = &self.group;
        LatticeExport {
            group_order: g.order(),
            classes: self
                .classes
                .iter()
                .map(|c| LatticeClassExport {
                    label: c.label.clone(),
                    iso_type: c.iso_type.clone(),
                    order: c.order(),
                    class_size: c.class_size,
                    normal: c.is_normal,
                    generators: c
                        .representative
                        .generator_ids()
                        .iter()
                        .map(|&x| g.element(x).to_string())
                        .collect(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| (self.classes[a].label.clone(), self.classes[b].label.clone()))
                .collect(),
        }
    }

    /// One line per class (`label order size [normal]`), then one
    /// `edge <smaller> <larger>` line per covering pair.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.classes {
            out.push_str(&format!(
                "{} {} {}{}\n",
                c.label,
                c.order(),
                c.class_size,
                if c.is_normal { " normal" } else { "" }
            ));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!(
                "edge {} {}\n",
                self.classes[a].label, self.classes[b].label
            ));
        }
        out
    }
}
