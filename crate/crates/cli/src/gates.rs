//! Gate-list syntax for `state --apply`.
//!
//! Qubit 0 is the leftmost character of a ket label. A positioned gate is
//! padded with identities on both sides and tensored into a full-register
//! operator.

use ketsim::{Operator, ProductOperator};

use crate::Failure;

pub struct Step {
    pub label: String,
    pub op: Operator,
}

fn single(name: &str) -> Option<Operator> {
    match name {
        "i" => Some(Operator::identity(1).expect("one qubit")),
        "x" => Some(Operator::pauli_x()),
        "h" => Some(Operator::hadamard()),
        _ => None,
    }
}

/// Splits on commas, re-attaching the target of `cnot@c,t`.
fn tokens(list: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for raw in list.split(',').map(str::trim) {
        let is_target = !raw.is_empty() && raw.bytes().all(|b| b.is_ascii_digit());
        match out.last_mut() {
            Some(prev) if is_target && prev.starts_with("cnot@") && !prev.contains(',') => {
                prev.push(',');
                prev.push_str(raw);
            }
            _ => out.push(raw.to_string()),
        }
    }
    out
}

fn position(text: &str, token: &str) -> Result<usize, Failure> {
    text.parse()
        .map_err(|_| Failure::Usage(format!("bad qubit position in '{token}'")))
}

fn padded(gate: Operator, at: usize, n: usize, token: &str) -> Result<Operator, Failure> {
    let width = gate.n();
    if at + width > n {
        return Err(Failure::Usage(format!(
            "'{token}' reaches past qubit {} of a {n}-qubit state",
            n - 1
        )));
    }
    let mut factors = Vec::new();
    if at > 0 {
        factors.push(Operator::identity(at)?);
    }
    factors.push(gate);
    if at + width < n {
        factors.push(Operator::identity(n - at - width)?);
    }
    Ok(ProductOperator::new(factors)?.expand()?)
}

pub fn parse_gate_list(list: &str, n: usize) -> Result<Vec<Step>, Failure> {
    let mut steps = Vec::new();
    for token in tokens(list) {
        let lower = token.to_ascii_lowercase();
        let (name, at) = match lower.split_once('@') {
            Some((name, at)) => (name, Some(at)),
            None => (lower.as_str(), None),
        };
        let op = match (name, at) {
            ("", _) => return Err(Failure::Usage(format!("empty gate in '{list}'"))),
            ("i", None) => Operator::identity(n)?,
            ("cnot", None) if n == 2 => Operator::cnot(),
            ("cnot", None) => {
                return Err(Failure::Usage(format!(
                    "bare cnot needs a 2-qubit state, this one has {n}; write cnot@c,t"
                )))
            }
            ("cnot", Some(at)) => {
                let (c, t) = at.split_once(',').ok_or_else(|| {
                    Failure::Usage(format!("'{token}' needs control and target: cnot@c,t"))
                })?;
                let (c, t) = (position(c, &token)?, position(t, &token)?);
                if t != c + 1 {
                    return Err(Failure::Usage(format!(
                        "'{token}': only adjacent control,target pairs (t = c + 1) are supported"
                    )));
                }
                padded(Operator::cnot(), c, n, &token)?
            }
            (name, None) => match single(name) {
                Some(op) if n == 1 => op,
                Some(_) => {
                    return Err(Failure::Usage(format!(
                        "bare {name} needs a 1-qubit state, this one has {n}; write {name}@q"
                    )))
                }
                None => return Err(Failure::Usage(format!("unknown gate '{token}'"))),
            },
            (name, Some(at)) => match single(name) {
                Some(op) => padded(op, position(at, &token)?, n, &token)?,
                None => return Err(Failure::Usage(format!("unknown gate '{token}'"))),
            },
        };
        steps.push(Step { label: token, op });
    }
    Ok(steps)
}
