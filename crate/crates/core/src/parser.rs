//! Text form of quantum states in bra-ket notation.
//!
//! ```text
//! expression := sign? term (('+' | '-') term)*
//! term       := coeff? '*'? ket
//! coeff      := factor (('*' | '/')? factor)*
//! factor     := number | 'i' | 'sqrt' '(' sum ')' | '(' sum ')'
//! sum        := unary (('+' | '-') unary)*      (inside parentheses only)
//! ket        := '|' label '>'
//! ```
//!
//! Coefficients are folded to double-precision constants while parsing.
//! Labels made of `0`/`1` are bit-strings; any other digit string is a
//! decimal index and needs an explicit qubit count. Whitespace is ignored
//! between tokens.

use std::ops::Range;

use crate::basis::{bit_string, BasisState};
use crate::error::{Error, Result};
use crate::state::{check_qubits, Amplitude, QuantumState};

/// Squared-norm slack accepted when reading text. Ten printed digits leave
/// roughly 1e-10 of rounding per amplitude, so the strict construction
/// tolerance would reject our own output.
pub const PARSE_NORM_TOLERANCE: f64 = 1e-8;

/// How [`format_state`] writes ket labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelMode {
    Binary,
    Decimal,
}

/// One `coefficient |label>` term as written.
#[derive(Debug, Clone, PartialEq)]
pub struct StateTerm {
    pub coefficient: Amplitude,
    pub label: String,
    /// Byte range of the whole term, sign included.
    pub span: Range<usize>,
    /// Byte offset of the label's first character.
    pub label_pos: usize,
}

/// A parsed but unresolved expression.
#[derive(Debug, Clone, PartialEq)]
pub struct StateExpression {
    pub terms: Vec<StateTerm>,
}

impl StateExpression {
    /// Resolves labels to basis states of a common width.
    pub fn resolve(&self, qubit_hint: Option<usize>) -> Result<Vec<(Amplitude, BasisState)>> {
        if let Some(n) = qubit_hint {
            check_qubits(n)?;
        }
        let all_binary = self
            .terms
            .iter()
            .all(|t| t.label.bytes().all(|b| b == b'0' || b == b'1'));

        let binary = match qubit_hint {
            None => {
                if let Some(t) = self
                    .terms
                    .iter()
                    .find(|t| !t.label.bytes().all(|b| b == b'0' || b == b'1'))
                {
                    return Err(Error::ContextRequired {
                        pos: t.label_pos,
                        label: t.label.clone(),
                    });
                }
                true
            }
            Some(n) => all_binary && self.terms.iter().all(|t| t.label.len() == n),
        };

        if binary {
            let width = self.terms[0].label.len();
            self.terms
                .iter()
                .map(|t| {
                    if t.label.len() != width {
                        return Err(Error::DimensionMismatch {
                            expected: width,
                            found: t.label.len(),
                        });
                    }
                    Ok((t.coefficient, BasisState::from_bits(&t.label)?))
                })
                .collect()
        } else {
            let n = qubit_hint.expect("decimal labels only arise with a hint");
            self.terms
                .iter()
                .map(|t| {
                    let out_of_range = || Error::Parse {
                        pos: t.label_pos,
                        msg: format!("ket label {} does not fit in {n} qubits", t.label),
                    };
                    let index: u64 = t.label.parse().map_err(|_| out_of_range())?;
                    let b = BasisState::new(index, n).map_err(|_| out_of_range())?;
                    Ok((t.coefficient, b))
                })
                .collect()
        }
    }
}

/// Parses `text` into terms without resolving labels.
pub fn parse_expression(text: &str) -> Result<StateExpression> {
    Parser::new(text).expression()
}

/// Parses a state. Decimal labels require `qubit_hint`. The squared norm
/// must be within [`PARSE_NORM_TOLERANCE`] of 1.
pub fn parse_state(text: &str, qubit_hint: Option<usize>) -> Result<QuantumState> {
    let terms = parse_expression(text)?.resolve(qubit_hint)?;
    QuantumState::from_amplitudes_within(accumulate(&terms), PARSE_NORM_TOLERANCE)
}

/// Parses a state and rescales it to unit norm whatever its written norm.
pub fn parse_state_normalized(text: &str, qubit_hint: Option<usize>) -> Result<QuantumState> {
    let terms = parse_expression(text)?.resolve(qubit_hint)?;
    QuantumState::superpose_normalized(&terms)
}

/// Non-blank, non-comment lines of a fixture file with 1-based line numbers.
/// `#` starts a comment that runs to the end of the line.
pub fn fixture_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then_some((i + 1, body))
        })
        .collect()
}

fn accumulate(terms: &[(Amplitude, BasisState)]) -> Vec<Amplitude> {
    let n = terms[0].1.n();
    let mut amps = vec![Amplitude::new(0.0, 0.0); 1 << n];
    for (w, b) in terms {
        amps[b.index() as usize] += w;
    }
    amps
}

/// Writes `state` in the grammar above, nonzero terms only, in basis order.
/// `precision` is the number of digits after the decimal point.
pub fn format_state(state: &QuantumState, mode: LabelMode, precision: usize) -> String {
    let cutoff = 0.5 * 10f64.powi(-(precision as i32));
    let label = |k: usize| match mode {
        LabelMode::Binary => bit_string(k as u64, state.n()),
        LabelMode::Decimal => k.to_string(),
    };
    let fmt = |x: f64| format!("{x:.precision$}");
    let one = fmt(1.0);

    let mut out = String::new();
    for (k, a) in state.amps().iter().enumerate() {
        let re_zero = a.re.abs() < cutoff;
        let im_zero = a.im.abs() < cutoff;
        if re_zero && im_zero {
            continue;
        }
        let (negative, body) = if im_zero {
            let m = fmt(a.re.abs());
            (
                a.re < 0.0,
                if m == one {
                    String::new()
                } else {
                    format!("({m})")
                },
            )
        } else if re_zero {
            let m = fmt(a.im.abs());
            let unit = if a.im < 0.0 { "(0-1i)" } else { "(0+1i)" };
            (
                false,
                if m == one {
                    unit.to_string()
                } else {
                    format!("{unit}*({m})")
                },
            )
        } else {
            let sign = if a.im < 0.0 { '-' } else { '+' };
            (false, format!("({}{sign}{}i)", fmt(a.re), fmt(a.im.abs())))
        };
        match (out.is_empty(), negative) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&body);
        out.push('|');
        out.push_str(&label(k));
        out.push('>');
    }
    if out.is_empty() {
        // every amplitude rounds to zero at this precision
        let (k, a) = state
            .amps()
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
            .expect("states are never empty");
        out = format!("({}{:+}i)|{}>", a.re, a.im, label(k));
    }
    out
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expression(&mut self) -> Result<StateExpression> {
        if self.peek().is_none() {
            return self.err(self.pos, "empty expression");
        }
        let mut terms = Vec::new();
        let mut start = self.pos;
        let mut negate = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            negate = c == b'-';
            self.pos += 1;
        }
        loop {
            let mut term = self.term(start)?;
            if negate {
                term.coefficient = -term.coefficient;
            }
            terms.push(term);
            match self.peek() {
                None => break,
                Some(c @ (b'+' | b'-')) => {
                    start = self.pos;
                    negate = c == b'-';
                    self.pos += 1;
                }
                Some(_) => return self.err(self.pos, "expected '+' or '-' between terms"),
            }
        }
        Ok(StateExpression { terms })
    }

    fn term(&mut self, start: usize) -> Result<StateTerm> {
        let coeff_pos = match self.peek() {
            None => return self.err(self.pos, "expected a term"),
            Some(_) => self.pos,
        };
        let coefficient = if self.peek() == Some(b'|') {
            Amplitude::new(1.0, 0.0)
        } else {
            let c = self.product(false)?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
            c
        };
        if !coefficient.is_finite() {
            return self.err(coeff_pos, "coefficient is not finite");
        }
        match self.peek() {
            Some(b'|') => self.pos += 1,
            Some(_) => return self.err(self.pos, "expected a ket '|...>'"),
            None => return self.err(self.pos, "expected a ket '|...>' before end of input"),
        }
        let label_pos = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let label = &self.src[label_pos..self.pos];
        match self.bytes.get(self.pos) {
            Some(b'>') if label.is_empty() => return self.err(label_pos, "empty ket label"),
            Some(b'>') => self.pos += 1,
            Some(_) => return self.err(self.pos, "ket labels are digit strings closed by '>'"),
            None => return self.err(self.pos, "unclosed ket"),
        }
        Ok(StateTerm {
            coefficient,
            label: label.to_string(),
            span: start..self.pos,
            label_pos,
        })
    }

    /// `factor (('*' | '/')? factor)*`. A `*` directly in front of a ket is
    /// left for the caller.
    fn product(&mut self, allow_unary: bool) -> Result<Amplitude> {
        let mut acc = self.factor(allow_unary)?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    let save = self.pos;
                    self.pos += 1;
                    if self.peek() == Some(b'|') {
                        self.pos = save;
                        return Ok(acc);
                    }
                    acc *= self.factor(true)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor(true)?;
                    if d.norm() == 0.0 {
                        return self.err(at, "division by zero");
                    }
                    acc /= d;
                }
                Some(c) if c.is_ascii_digit() || matches!(c, b'.' | b'(' | b'i' | b's') => {
                    acc *= self.factor(false)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn sum(&mut self) -> Result<Amplitude> {
        let mut acc = self.product(true)?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.product(true)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= self.product(true)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self, allow_unary: bool) -> Result<Amplitude> {
        let at = self.pos;
        match self.peek() {
            Some(b'-') if allow_unary => {
                self.pos += 1;
                Ok(-self.factor(true)?)
            }
            Some(b'+') if allow_unary => {
                self.pos += 1;
                self.factor(true)
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                self.close_paren(at)?;
                Ok(v)
            }
            Some(b's') if self.src[self.pos..].starts_with("sqrt") => {
                self.pos += 4;
                if self.peek() != Some(b'(') {
                    return self.err(self.pos, "expected '(' after sqrt");
                }
                let open = self.pos;
                self.pos += 1;
                let v = self.sum()?;
                self.close_paren(open)?;
                Ok(v.sqrt())
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(Amplitude::new(0.0, 1.0))
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(_) => self.err(self.pos, "expected a coefficient or ket"),
            None => self.err(self.pos, "unexpected end of input"),
        }
    }

    fn close_paren(&mut self, open: usize) -> Result<()> {
        match self.peek() {
            Some(b')') => {
                self.pos += 1;
                Ok(())
            }
            Some(_) => self.err(self.pos, "expected ')'"),
            None => self.err(open, "unclosed '('"),
        }
    }

    fn number(&mut self) -> Result<Amplitude> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            while p.pos < p.bytes.len() && p.bytes[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
        };
        digits(self);
        if self.bytes.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            digits(self);
        }
        if matches!(self.bytes.get(self.pos), Some(b'e' | b'E')) {
            let mark = self.pos;
            self.pos += 1;
            if matches!(self.bytes.get(self.pos), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            let exp_start = self.pos;
            digits(self);
            if self.pos == exp_start {
                self.pos = mark;
            }
        }
        let text = &self.src[start..self.pos];
        match text.parse::<f64>() {
            Ok(v) => Ok(Amplitude::new(v, 0.0)),
            Err(_) => self.err(start, format!("malformed number '{text}'")),
        }
    }
}
