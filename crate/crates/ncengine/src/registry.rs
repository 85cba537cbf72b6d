use crate::word::{gen_of, is_inverse, letter, Letter};
use std::collections::HashMap;
use std::fmt;

/// Generator kinds, listed in normal order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    FrtMinus,
    FrtPlus,
    Scaling,
    Translation,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::FrtMinus => "frt-minus",
            Kind::FrtPlus => "frt-plus",
            Kind::Scaling => "scaling",
            Kind::Translation => "translation",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        Some(match s {
            "frt-minus" => Kind::FrtMinus,
            "frt-plus" => Kind::FrtPlus,
            "scaling" => Kind::Scaling,
            "translation" => Kind::Translation,
            _ => return None,
        })
    }

    pub fn is_frt(self) -> bool {
        matches!(self, Kind::FrtMinus | Kind::FrtPlus)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    /// Base symbol: `p`, `sqrtP`, `sqrtp0`, `L-`, `L+`.
    pub base: String,
    pub indices: Vec<i32>,
    pub kind: Kind,
    pub invertible: bool,
}

impl Generator {
    pub fn new(base: &str, indices: &[i32], kind: Kind, invertible: bool) -> Self {
        Generator { base: base.into(), indices: indices.to_vec(), kind, invertible }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if !self.indices.is_empty() {
            let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
            write!(f, "[{}]", idx.join(","))?;
        }
        Ok(())
    }
}

/// Ordered generator list; position is rank.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Registry {
    gens: Vec<Generator>,
    by_name: HashMap<String, usize>,
}

impl Registry {
    pub fn new(gens: Vec<Generator>) -> Self {
        let mut r = Registry::default();
        for g in gens {
            r.push(g);
        }
        r
    }

    pub fn push(&mut self, g: Generator) -> usize {
        let name = g.name();
        assert!(!self.by_name.contains_key(&name), "duplicate generator {name}");
        self.by_name.insert(name, self.gens.len());
        self.gens.push(g);
        self.gens.len() - 1
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn get(&self, idx: usize) -> &Generator {
        &self.gens[idx]
    }

    pub fn kind(&self, l: Letter) -> Kind {
        self.gens[gen_of(l)].kind
    }

    pub fn find(&self, base: &str, indices: &[i32]) -> Option<usize> {
        self.by_name.get(&Generator::new(base, indices, Kind::Translation, false).name()).copied()
    }

    pub fn letter(&self, base: &str, indices: &[i32]) -> Option<Letter> {
        self.find(base, indices).map(|g| letter(g, false))
    }

    /// Every letter: each generator, and the inverse of each invertible one.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            out.push(letter(i, false));
            if g.invertible {
                out.push(letter(i, true));
            }
        }
        out
    }

    pub fn letter_name(&self, l: Letter) -> String {
        let g = &self.gens[gen_of(l)];
        if is_inverse(l) {
            format!("{g}^-1")
        } else {
            g.name()
        }
    }

    /// Maps letters of `self` to letters of `target` by generator name.
    pub fn embedding(&self, target: &Registry) -> Option<Vec<usize>> {
        self.gens.iter().map(|g| target.by_name.get(&g.name()).copied()).collect()
    }
}
