//! Text file formats and report serializers.
//!
//! Matrix text (used repo-wide): first line `rows cols p`, then one line per
//! row of space-separated residues. Codes add a `CODE n k q [d]` header line
//! in front of the generator matrix. Block systems: first line `v r count`,
//! then one sorted block per line as space-separated 0-based indices. All
//! formats round-trip bit-exactly; outputs are UTF-8 with LF line endings.

use std::fmt::Write as _;

use stopred_core::bounds::CurveRow;
use stopred_core::codes::{CodeError, LinearCode};
use stopred_core::combin;
use stopred_core::designs::BlockSystem;
use stopred_core::field::{FieldMatrix, FieldSpec};
use stopred_core::search::LogEntry;
use stopred_core::stopping::ErasureProfile;

/// Errors from parsing the text formats.
#[derive(Debug)]
pub enum FormatError {
    Syntax(String),
    Semantics(String),
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormatError::Syntax(msg) => write!(f, "syntax error: {msg}"),
            FormatError::Semantics(msg) => write!(f, "invalid contents: {msg}"),
        }
    }
}

impl std::error::Error for FormatError {}

fn syntax(msg: impl Into<String>) -> FormatError {
    FormatError::Syntax(msg.into())
}

fn parse_fields<T: std::str::FromStr>(line: &str) -> Result<Vec<T>, FormatError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| syntax(format!("bad token {tok:?}")))
        })
        .collect()
}

/// Serializes a matrix as `rows cols p` plus one line per row.
pub fn write_matrix(m: &FieldMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", m.rows(), m.cols(), m.field().modulus());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Parses the matrix text format.
pub fn parse_matrix(text: &str) -> Result<FieldMatrix, FormatError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| syntax("empty matrix file"))?;
    let dims: Vec<u64> = parse_fields(header)?;
    let [rows, cols, p] = dims[..] else {
        return Err(syntax("matrix header must be `rows cols p`"));
    };
    let field = FieldSpec::new(u32::try_from(p).map_err(|_| syntax("modulus out of range"))?)
        .map_err(|e| FormatError::Semantics(e.to_string()))?;
    let mut row_vecs = Vec::with_capacity(rows as usize);
    for _ in 0..rows {
        let line = lines.next().ok_or_else(|| syntax("missing matrix row"))?;
        let row: Vec<u32> = parse_fields(line)?;
        if row.len() != cols as usize {
            return Err(syntax("matrix row has the wrong length"));
        }
        row_vecs.push(row);
    }
    if lines.next().is_some() {
        return Err(syntax("trailing content after matrix rows"));
    }
    FieldMatrix::from_rows(field, &row_vecs).map_err(|e| FormatError::Semantics(e.to_string()))
}

/// Serializes a code as `CODE n k q [d]` plus its generator matrix.
pub fn write_code(code: &LinearCode) -> String {
    let mut out = String::new();
    match code.cached_min_distance() {
        Some(d) => {
            let _ = writeln!(out, "CODE {} {} {} {}", code.n(), code.k(), code.q(), d);
        }
        None => {
            let _ = writeln!(out, "CODE {} {} {}", code.n(), code.k(), code.q());
        }
    }
    out.push_str(&write_matrix(code.generator()));
    out
}

/// Parses the code format. A claimed minimum distance in the header is
/// verified by enumeration when the code is small enough and dropped (with
/// no cache) when it is not; a wrong claim is an error.
pub fn parse_code(text: &str) -> Result<LinearCode, FormatError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| syntax("empty code file"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("CODE") {
        return Err(syntax("code files start with a CODE header"));
    }
    let nums: Vec<u64> = toks
        .map(|t| t.parse().map_err(|_| syntax(format!("bad token {t:?}"))))
        .collect::<Result<_, _>>()?;
    let (n, k, q, claimed_d) = match nums[..] {
        [n, k, q] => (n, k, q, None),
        [n, k, q, d] => (n, k, q, Some(d as usize)),
        _ => return Err(syntax("code header must be `CODE n k q [d]`")),
    };
    let rest: String = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .skip(1)
        .collect::<Vec<_>>()
        .join("\n");
    let generator = parse_matrix(&rest)?;
    if generator.rows() != k as usize
        || generator.cols() != n as usize
        || u64::from(generator.field().modulus()) != q
    {
        return Err(FormatError::Semantics(
            "generator does not match the CODE header".into(),
        ));
    }
    let code = LinearCode::new(generator).map_err(|e| FormatError::Semantics(e.to_string()))?;
    match claimed_d {
        None => Ok(code),
        Some(d) => match code.clone().with_claimed_distance(d, 1_000_000) {
            Ok(cached) => Ok(cached),
            Err(CodeError::BudgetExceeded) => Ok(code),
            Err(e) => Err(FormatError::Semantics(e.to_string())),
        },
    }
}

/// Serializes a block system as `v r count` plus one sorted block per line.
pub fn write_block_system(s: &BlockSystem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", s.v(), s.r(), s.len());
    for block in s.blocks_as_indices() {
        let row: Vec<String> = block.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Parses the block-system format.
pub fn parse_block_system(text: &str) -> Result<BlockSystem, FormatError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| syntax("empty block-system file"))?;
    let dims: Vec<usize> = parse_fields(header)?;
    let [v, r, count] = dims[..] else {
        return Err(syntax("block-system header must be `v r count`"));
    };
    let blocks: Vec<Vec<usize>> = lines.map(parse_fields).collect::<Result<_, _>>()?;
    if blocks.len() != count {
        return Err(syntax("block count does not match the header"));
    }
    BlockSystem::from_index_blocks(v, r, &blocks).map_err(|e| FormatError::Semantics(e.to_string()))
}

/// Erasure profile as CSV with columns `w,count,binom,fraction`.
pub fn write_profile_csv(profile: &ErasureProfile, n: usize) -> String {
    let mut out = String::from("w,count,binom,fraction\n");
    for (&w, &count) in &profile.weights {
        let binom = combin::binomial_u64(n, w).unwrap_or(0);
        let fraction = if binom == 0 {
            0.0
        } else {
            count as f64 / binom as f64
        };
        let _ = writeln!(out, "{w},{count},{binom},{fraction}");
    }
    out
}

/// Bound curves as CSV with columns `n,d,k,bound,value,normalized`.
pub fn write_curves_csv(rows: &[CurveRow]) -> String {
    let mut out = String::from("n,d,k,bound,value,normalized\n");
    for row in rows {
        let value = row
            .value_int
            .as_ref()
            .map(ToString::to_string)
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            row.n, row.d, row.k, row.bound, value, row.normalized
        );
    }
    out
}

#[derive(serde::Serialize)]
struct LogLine {
    iteration: usize,
    rows: usize,
    uncovered: u64,
}

/// Search trace as JSON lines of `(iteration, rows, uncovered)`.
pub fn write_search_log(log: &[LogEntry]) -> String {
    let mut out = String::new();
    for entry in log {
        let line = serde_json::to_string(&LogLine {
            iteration: entry.iteration,
            rows: entry.rows,
            uncovered: entry.uncovered,
        })
        .expect("plain struct serializes");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use stopred_core::codes::rs_code;

    #[test]
    fn matrix_roundtrip_is_bit_exact() {
        let m = FieldMatrix::from_rows(FieldSpec::new(7).unwrap(), &[vec![1, 2, 3], vec![0, 6, 5]])
            .unwrap();
        let text = write_matrix(&m);
        assert_eq!(text, "2 3 7\n1 2 3\n0 6 5\n");
        let back = parse_matrix(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(write_matrix(&back), text);
    }

    #[test]
    fn code_roundtrip_keeps_verified_distance() {
        let code = rs_code(5, 5, 2).unwrap();
        let text = write_code(&code);
        assert!(text.starts_with("CODE 5 2 5 4\n"));
        let back = parse_code(&text).unwrap();
        assert!(back.same_codeword_set(&code));
        assert_eq!(back.cached_min_distance(), Some(4));
    }

    #[test]
    fn wrong_claimed_distance_is_rejected() {
        let code = rs_code(5, 5, 2).unwrap();
        let text = write_code(&code).replace("CODE 5 2 5 4", "CODE 5 2 5 3");
        assert!(parse_code(&text).is_err());
    }

    #[test]
    fn block_system_roundtrip() {
        let s =
            BlockSystem::from_index_blocks(5, 2, &[vec![0, 3], vec![1, 2], vec![2, 4]]).unwrap();
        let text = write_block_system(&s);
        assert_eq!(text, "5 2 3\n0 3\n1 2\n2 4\n");
        let back = parse_block_system(&text).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn malformed_inputs_error() {
        assert!(parse_matrix("2 2\n1 0\n0 1\n").is_err());
        assert!(parse_matrix("1 2 4\n1 0\n").is_err()); // 4 is not prime
        assert!(parse_matrix("1 2 3\n1\n").is_err());
        assert!(parse_block_system("4 2 2\n0 1\n").is_err());
        assert!(parse_code("1 2 3\n").is_err());
    }
}
