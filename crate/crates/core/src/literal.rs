//! Text forms of partitions.
//!
//! A literal reads `upper|lower;blocks`, for example `o|o;(u1 l1)` for the
//! white identity or `|;` for the empty partition. Colors are `o` (white) and
//! `x` (black); blocks list their points as `u<i>` or `l<i>`, one-based.

use crate::error::PartitionError;
use crate::partition::{Color, ColoredPartition, Point};

fn syntax(pos: usize, msg: impl Into<String>) -> PartitionError {
    PartitionError::Syntax { pos, msg: msg.into() }
}

fn parse_colors(text: &str, offset: usize) -> Result<Vec<Color>, PartitionError> {
    text.char_indices()
        .map(|(i, c)| {
            Color::from_char(c)
                .ok_or_else(|| syntax(offset + i, format!("expected 'o' or 'x', found {c:?}")))
        })
        .collect()
}

/// Parses a partition literal.
pub fn parse_partition(text: &str) -> Result<ColoredPartition, PartitionError> {
    let bar = text.find('|').ok_or_else(|| syntax(text.len(), "missing '|'"))?;
    let semi = text[bar + 1..]
        .find(';')
        .map(|i| i + bar + 1)
        .ok_or_else(|| syntax(text.len(), "missing ';'"))?;
    let upper = parse_colors(&text[..bar], 0)?;
    let lower = parse_colors(&text[bar + 1..semi], bar + 1)?;

    let bytes = text.as_bytes();
    let mut pos = semi + 1;
    let mut blocks: Vec<Vec<Point>> = Vec::new();
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(syntax(pos, "expected '('"));
        }
        pos += 1;
        let mut block = Vec::new();
        loop {
            let row = match bytes.get(pos) {
                Some(b'u') => 'u',
                Some(b'l') => 'l',
                _ => return Err(syntax(pos, "expected a point 'u<i>' or 'l<i>'")),
            };
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(syntax(pos, "expected a point index"));
            }
            let index: usize = text[start..pos]
                .parse()
                .map_err(|_| syntax(start, "point index too large"))?;
            if index == 0 {
                return Err(PartitionError::IndexOutOfRange(format!("{row}0")));
            }
            block.push(if row == 'u' { Point::Upper(index - 1) } else { Point::Lower(index - 1) });
            match bytes.get(pos) {
                Some(b' ') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                _ => return Err(syntax(pos, "expected ' ' or ')'")),
            }
        }
        blocks.push(block);
    }
    ColoredPartition::new(upper, lower, &blocks)
}

/// Renders the canonical literal.
pub fn render_partition(p: &ColoredPartition) -> String {
    let mut out = String::with_capacity(4 + 2 * p.size() + 4 * p.size());
    out.extend(p.upper_colors().iter().map(|c| c.to_char()));
    out.push('|');
    out.extend(p.lower_colors().iter().map(|c| c.to_char()));
    out.push(';');
    for block in p.blocks() {
        out.push('(');
        for (i, pt) in block.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&pt.to_string());
        }
        out.push(')');
    }
    out
}

fn block_tag(b: usize) -> String {
    if b < 26 {
        ((b'A' + b as u8) as char).to_string()
    } else {
        b.to_string()
    }
}

/// Two-row diagram: each color row is paired with a row of block tags, so
/// points sharing a tag lie in the same block.
///
/// ```text
///  o  x
///  A  B
/// ------
///  A  B
///  x  o
/// ```
pub fn render_diagram(p: &ColoredPartition) -> String {
    let width = 3;
    let row = |items: Vec<String>| -> String {
        items.iter().map(|s| format!("{s:>width$}")).collect::<String>()
    };
    let upper: Vec<Point> = (0..p.k()).map(Point::Upper).collect();
    let lower: Vec<Point> = (0..p.l()).map(Point::Lower).collect();
    let colors = |pts: &[Point]| pts.iter().map(|&pt| p.color_of(pt).to_char().to_string()).collect();
    let tags = |pts: &[Point]| pts.iter().map(|&pt| block_tag(p.block_of(pt))).collect();
    let rule = "-".repeat(width * p.k().max(p.l()).max(1));
    [row(colors(&upper)), row(tags(&upper)), rule, row(tags(&lower)), row(colors(&lower))]
        .iter()
        .map(|s| s.trim_end().to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parses a generator file: one literal per line, `#` starts a comment,
/// blank lines are skipped.
pub fn parse_generator_file(text: &str) -> Result<Vec<ColoredPartition>, (usize, PartitionError)> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let content = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        }
        .trim();
        if content.is_empty() {
            continue;
        }
        out.push(parse_partition(content).map_err(|e| (lineno + 1, e))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let id = parse_partition("o|o;(u1 l1)").unwrap();
        assert_eq!(id, ColoredPartition::identity(&[Color::White]));
        let pair = parse_partition("|ox;(l1 l2)").unwrap();
        assert_eq!(pair.k(), 0);
        assert_eq!(pair.lower_colors(), &[Color::White, Color::Black]);
        assert_eq!(pair.num_blocks(), 1);
        assert!(parse_partition("|;").unwrap().is_empty());
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(
            parse_partition("|oo;(l1)(l2 l3)"),
            Err(PartitionError::IndexOutOfRange(_))
        ));
        assert!(matches!(parse_partition("|oo;(l1)(l1 l2)"), Err(PartitionError::DuplicatePoint(_))));
        assert!(matches!(parse_partition("|oo;(l1)"), Err(PartitionError::UncoveredPoint(_))));
        assert!(matches!(parse_partition("|oa;(l1 l2)"), Err(PartitionError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_partition("|oo;(l1  l2)"), Err(PartitionError::Syntax { .. })));
        assert!(matches!(parse_partition("|oo;(l1 l2) "), Err(PartitionError::Syntax { .. })));
        assert!(matches!(parse_partition("oo;"), Err(PartitionError::Syntax { .. })));
        assert!(matches!(parse_partition("|o;(l0)"), Err(PartitionError::IndexOutOfRange(_))));
        assert!(matches!(parse_partition("|o;()"), Err(PartitionError::Syntax { .. })));
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(render_partition(&ColoredPartition::identity(&[Color::White])), "o|o;(u1 l1)");
        assert_eq!(render_partition(&ColoredPartition::empty()), "|;");
        let p = parse_partition("ox|xo;(l2 u1)(l1 u2)").unwrap();
        assert_eq!(render_partition(&p), "ox|xo;(u1 l2)(u2 l1)");
    }

    #[test]
    fn diagram_shape() {
        let p = parse_partition("ox|xo;(u1 l2)(u2 l1)").unwrap();
        assert_eq!(render_diagram(&p), "  o  x\n  A  B\n------\n  B  A\n  x  o");
    }

    #[test]
    fn generator_file_comments() {
        let text = "# pair\n|ox;(l1 l2)  # trailing\n\n|;\n";
        assert_eq!(parse_generator_file(text).unwrap().len(), 2);
        let err = parse_generator_file("|ox;(l1 l2)\nbad\n").unwrap_err();
        assert_eq!(err.0, 2);
    }
}
