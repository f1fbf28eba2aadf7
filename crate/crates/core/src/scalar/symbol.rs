//! Global append-only symbol interner.
//!
//! A symbol is identified by its name together with its kind, so the same
//! name declared real in one document and complex in another yields two
//! distinct symbols. Every complex symbol `x` is interned together with its
//! conjugate partner `x_bar`; a real symbol is its own partner.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const CONJ_SUFFIX: &str = "_bar";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymbolKind {
    Real,
    Complex,
}

/// Interned symbol handle. Ordering follows interning order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u32);

#[derive(Debug, Clone)]
struct Entry {
    name: String,
    kind: SymbolKind,
    partner: u32,
    /// True for the `_bar` half of a complex pair.
    barred: bool,
}

#[derive(Default)]
struct Interner {
    entries: Vec<Entry>,
    by_key: HashMap<(String, SymbolKind), u32>,
}

fn table() -> &'static RwLock<Interner> {
    static TABLE: OnceLock<RwLock<Interner>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(Interner::default()))
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Symbol {
    /// Interns `name` with the given kind. For complex symbols the name must
    /// not itself carry the conjugate suffix; the partner is created alongside.
    pub fn intern(name: &str, kind: SymbolKind) -> Result<Symbol> {
        if !valid_identifier(name) || name == "i" {
            return Err(Error::InvalidSymbol(name.to_string()));
        }
        if kind == SymbolKind::Complex && name.ends_with(CONJ_SUFFIX) {
            return Err(Error::InvalidSymbol(name.to_string()));
        }
        let key = (name.to_string(), kind);
        if let Some(&id) = table().read().unwrap().by_key.get(&key) {
            return Ok(Symbol(id));
        }
        let mut t = table().write().unwrap();
        if let Some(&id) = t.by_key.get(&key) {
            return Ok(Symbol(id));
        }
        let id = t.entries.len() as u32;
        match kind {
            SymbolKind::Real => {
                t.entries.push(Entry { name: name.to_string(), kind, partner: id, barred: false });
            }
            SymbolKind::Complex => {
                t.entries.push(Entry { name: name.to_string(), kind, partner: id + 1, barred: false });
                t.entries.push(Entry {
                    name: format!("{name}{CONJ_SUFFIX}"),
                    kind,
                    partner: id,
                    barred: true,
                });
            }
        }
        t.by_key.insert(key, id);
        Ok(Symbol(id))
    }

    /// Interns a real symbol; panics on an invalid identifier.
    pub fn real(name: &str) -> Symbol {
        Self::intern(name, SymbolKind::Real).expect("valid identifier")
    }

    /// Interns a complex symbol; panics on an invalid identifier.
    pub fn complex(name: &str) -> Symbol {
        Self::intern(name, SymbolKind::Complex).expect("valid identifier")
    }

    pub fn name(self) -> String {
        table().read().unwrap().entries[self.0 as usize].name.clone()
    }

    pub fn kind(self) -> SymbolKind {
        table().read().unwrap().entries[self.0 as usize].kind
    }

    pub fn is_real(self) -> bool {
        self.kind() == SymbolKind::Real
    }

    /// True for the `_bar` member of a complex pair.
    pub fn is_barred(self) -> bool {
        table().read().unwrap().entries[self.0 as usize].barred
    }

    pub fn conj(self) -> Symbol {
        Symbol(table().read().unwrap().entries[self.0 as usize].partner)
    }

    /// The unbarred member of the conjugate pair this symbol belongs to.
    pub fn base(self) -> Symbol {
        if self.is_barred() {
            self.conj()
        } else {
            self
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
