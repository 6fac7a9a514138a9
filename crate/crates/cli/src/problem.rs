//! Line-oriented problem files.
//!
//! ```text
//! # comments run to end of line; keywords are case-insensitive
//! mode aon
//! nodes 4
//! arc 1 2
//! arc 2 4
//! arc 1 3
//! arc 3 4
//! reliability 2 = 0.9
//! ratings 3 = VL L H
//! ```
//!
//! Components are node ids in AON mode and 1-based arc ordinals (input
//! order) in AOA mode. Every component that can fail appears in exactly one
//! `reliability` or `ratings` line; AON terminals appear in neither.

use std::collections::BTreeSet;
use std::fmt;

use relcalc_core::{
    DefuzzificationResult, ExpertRatingSet, LinguisticVariable, Mode, Network, StateDistribution,
};

use crate::error::ProblemError;

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemFile {
    pub mode: Mode,
    pub nodes: usize,
    pub arcs: Vec<(usize, usize)>,
    /// Components with a known reliability, in file order.
    pub crisp: Vec<(usize, f64)>,
    /// Components rated by experts, in file order.
    pub uncertain: Vec<(usize, Vec<LinguisticVariable>)>,
}

impl ProblemFile {
    pub fn network(&self) -> Result<Network, ProblemError> {
        Network::new(self.nodes, self.arcs.iter().copied(), self.mode)
            .map_err(ProblemError::Network)
    }

    pub fn ratings(&self) -> Result<ExpertRatingSet, ProblemError> {
        let network = self.network()?;
        ExpertRatingSet::new(&network, self.uncertain.iter().cloned())
            .map_err(ProblemError::Network)
    }

    /// Combines the crisp entries with already-resolved uncertain ones.
    pub fn distribution(
        &self,
        network: &Network,
        resolved: &[(usize, DefuzzificationResult)],
    ) -> Result<StateDistribution, ProblemError> {
        let entries = self
            .crisp
            .iter()
            .copied()
            .chain(resolved.iter().map(|(k, r)| (*k, r.reliability)));
        StateDistribution::new(network, entries).map_err(ProblemError::Network)
    }

    fn validate(&self) -> Result<(), ProblemError> {
        let network = self.network()?;
        let mut seen = BTreeSet::new();
        let components = self
            .crisp
            .iter()
            .map(|&(k, _)| k)
            .chain(self.uncertain.iter().map(|(k, _)| *k));
        for component in components {
            if component == 0 || component > network.vector_len() {
                return Err(ProblemError::UnknownComponent(component));
            }
            if network.mode() == Mode::Aon && network.is_terminal(component) {
                return Err(ProblemError::TerminalComponent(component));
            }
            if !seen.insert(component) {
                return Err(ProblemError::DuplicateComponent(component));
            }
        }
        if let Some(missing) = network.mutable_components().find(|k| !seen.contains(k)) {
            return Err(ProblemError::MissingComponent(missing));
        }
        for &(component, p) in &self.crisp {
            if !(0.0..=1.0).contains(&p) {
                return Err(ProblemError::ProbabilityOutOfRange { component, p });
            }
        }
        if let Some((_, first)) = self.uncertain.first() {
            for (component, ratings) in &self.uncertain {
                if ratings.len() != first.len() {
                    return Err(ProblemError::ExpertCountMismatch {
                        component: *component,
                        expected: first.len(),
                        found: ratings.len(),
                    });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            Mode::Aoa => "aoa",
            Mode::Aon => "aon",
        };
        writeln!(f, "mode {mode}")?;
        writeln!(f, "nodes {}", self.nodes)?;
        for (i, j) in &self.arcs {
            writeln!(f, "arc {i} {j}")?;
        }
        for (component, p) in &self.crisp {
            writeln!(f, "reliability {component} = {p}")?;
        }
        for (component, ratings) in &self.uncertain {
            write!(f, "ratings {component} =")?;
            for r in ratings {
                write!(f, " {r}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ProblemError {
    ProblemError::Syntax {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, ProblemError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected {what}, found {token:?}")))
}

/// Splits `<component> = <rest…>` into the component id and the tokens after `=`.
fn assignment<'a>(line: usize, args: &[&'a str]) -> Result<(usize, Vec<&'a str>), ProblemError> {
    match args {
        [component, "=", rest @ ..] if !rest.is_empty() => {
            Ok((number(line, component, "a component id")?, rest.to_vec()))
        }
        _ => Err(syntax(line, "expected `<component> = <value>`")),
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, ProblemError> {
    let mut mode = None;
    let mut nodes = None;
    let mut arcs = Vec::new();
    let mut crisp = Vec::new();
    let mut uncertain = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").replace('=', " = ");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((keyword, args)) = tokens.split_first() else {
            continue;
        };
        match keyword.to_ascii_lowercase().as_str() {
            "mode" => {
                let value = match args {
                    [m] if m.eq_ignore_ascii_case("aon") => Mode::Aon,
                    [m] if m.eq_ignore_ascii_case("aoa") => Mode::Aoa,
                    _ => return Err(syntax(line, "expected `mode aon` or `mode aoa`")),
                };
                if mode.replace(value).is_some() {
                    return Err(ProblemError::RepeatedDirective {
                        line,
                        directive: "mode",
                    });
                }
            }
            "nodes" => {
                let [n] = args else {
                    return Err(syntax(line, "expected `nodes <n>`"));
                };
                if nodes.replace(number(line, n, "a node count")?).is_some() {
                    return Err(ProblemError::RepeatedDirective {
                        line,
                        directive: "nodes",
                    });
                }
            }
            "arc" => {
                let [i, j] = args else {
                    return Err(syntax(line, "expected `arc <i> <j>`"));
                };
                arcs.push((number(line, i, "a node id")?, number(line, j, "a node id")?));
            }
            "reliability" => {
                let (component, value) = assignment(line, args)?;
                let [p] = value[..] else {
                    return Err(syntax(line, "expected a single probability"));
                };
                crisp.push((component, number(line, p, "a probability")?));
            }
            "ratings" => {
                let (component, tokens) = assignment(line, args)?;
                let ratings = tokens
                    .iter()
                    .map(|t| {
                        t.parse::<LinguisticVariable>().map_err(|_| {
                            ProblemError::UnknownLinguistic {
                                line,
                                component,
                                token: t.to_string(),
                            }
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                uncertain.push((component, ratings));
            }
            other => return Err(syntax(line, format!("unknown directive {other:?}"))),
        }
    }

    let problem = ProblemFile {
        mode: mode.ok_or(ProblemError::MissingDirective("mode"))?,
        nodes: nodes.ok_or(ProblemError::MissingDirective("nodes"))?,
        arcs,
        crisp,
        uncertain,
    };
    problem.validate()?;
    Ok(problem)
}
