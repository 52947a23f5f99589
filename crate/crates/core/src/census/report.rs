use std::collections::HashMap;
use std::fmt::{self, Display};

/// Outcome of checking a map exhaustively over one domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub length: usize,
    pub domain_size: u64,
    pub codomain_size: u64,
    pub image_size: u64,
    /// Every input was mapped without error into the codomain.
    pub image_in_codomain: bool,
    pub injective: bool,
    pub surjective: bool,
    pub preserved_stats: Vec<(String, bool)>,
    pub counterexample: Option<String>,
}

impl VerificationReport {
    pub fn bijection_verified(&self) -> bool {
        self.image_in_codomain && self.injective && self.surjective && self.domain_size == self.codomain_size
    }

    pub fn passed(&self) -> bool {
        self.bijection_verified() && self.preserved_stats.iter().all(|(_, ok)| *ok)
    }
}

impl Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} len={} domain={} codomain={} injective={} surjective={}",
            if self.passed() { "OK" } else { "FAIL" },
            self.name,
            self.length,
            self.domain_size,
            self.codomain_size,
            self.injective,
            self.surjective,
        )?;
        for (stat, ok) in &self.preserved_stats {
            write!(f, " {stat}={ok}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample: {c}")?;
        }
        Ok(())
    }
}

type Predicate<'a, D, C> = Box<dyn Fn(&D, &C) -> bool + 'a>;

/// A named property checked on every (input, image) pair.
pub struct Preserved<'a, D, C> {
    pub name: &'a str,
    pub holds: Predicate<'a, D, C>,
}

impl<'a, D, C> Preserved<'a, D, C> {
    pub fn new(name: &'a str, holds: impl Fn(&D, &C) -> bool + 'a) -> Self {
        Preserved { name, holds: Box::new(holds) }
    }
}

/// Applies `map` to every element of `domain`. Injectivity is checked with a
/// seen-set keyed by the image's canonical text; surjectivity by comparing
/// the number of distinct images with `codomain_size`, which callers count
/// independently of `map`.
pub fn verify_bijection<D, C, E>(
    name: &str,
    length: usize,
    domain: impl IntoIterator<Item = D>,
    codomain_size: u64,
    map: impl Fn(&D) -> Result<C, E>,
    in_codomain: impl Fn(&C) -> bool,
    preserved: &[Preserved<'_, D, C>],
) -> VerificationReport
where
    D: Display,
    C: Display,
    E: Display,
{
    let mut seen: HashMap<String, String> = HashMap::new();
    let mut domain_size = 0u64;
    let mut image_in_codomain = true;
    let mut injective = true;
    let mut stat_ok = vec![true; preserved.len()];
    let mut counterexample = None;
    let mut note = |msg: String| {
        if counterexample.is_none() {
            counterexample = Some(msg);
        }
    };

    for x in domain {
        domain_size += 1;
        let y = match map(&x) {
            Ok(y) => y,
            Err(e) => {
                image_in_codomain = false;
                note(format!("{x}: {e}"));
                continue;
            }
        };
        if !in_codomain(&y) {
            image_in_codomain = false;
            note(format!("{x} -> {y} lies outside the codomain"));
        }
        for (i, p) in preserved.iter().enumerate() {
            if !(p.holds)(&x, &y) {
                stat_ok[i] = false;
                note(format!("{} fails at {x} -> {y}", p.name));
            }
        }
        let key = y.to_string();
        if let Some(prev) = seen.get(&key) {
            injective = false;
            note(format!("{prev} and {x} both map to {key}"));
        } else {
            seen.insert(key, x.to_string());
        }
    }

    let image_size = seen.len() as u64;
    let surjective = image_in_codomain && image_size == codomain_size;
    if !surjective && image_in_codomain {
        note(format!("image has {image_size} elements, codomain has {codomain_size}"));
    }
    VerificationReport {
        name: name.to_string(),
        length,
        domain_size,
        codomain_size,
        image_size,
        image_in_codomain,
        injective,
        surjective,
        preserved_stats: preserved.iter().zip(stat_ok).map(|(p, ok)| (p.name.to_string(), ok)).collect(),
        counterexample,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityEntry {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub ok: bool,
}

/// Outcome of checking an identity at a list of indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdentityReport {
    pub name: String,
    pub entries: Vec<IdentityEntry>,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>) -> Self {
        IdentityReport { name: name.into(), entries: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, lhs: impl Display, rhs: impl Display) {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        let ok = lhs == rhs;
        self.entries.push(IdentityEntry { label: label.into(), lhs, rhs, ok });
    }

    /// Records a check whose outcome is decided by the caller.
    pub fn push_with(&mut self, label: impl Into<String>, lhs: impl Display, rhs: impl Display, ok: bool) {
        self.entries.push(IdentityEntry { label: label.into(), lhs: lhs.to_string(), rhs: rhs.to_string(), ok });
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn first_failure(&self) -> Option<&IdentityEntry> {
        self.entries.iter().find(|e| !e.ok)
    }

    /// One `OK`/`FAIL` line per entry.
    pub fn lines(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| {
                format!(
                    "{} {} {}: {} {} {}",
                    if e.ok { "OK" } else { "FAIL" },
                    self.name,
                    e.label,
                    e.lhs,
                    if e.ok { "=" } else { "!=" },
                    e.rhs
                )
            })
            .collect()
    }
}
