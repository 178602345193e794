use std::str::FromStr;

/// An integer parameter given as `a`, `a..b` (inclusive) or `a,b,c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Range(pub Vec<usize>);

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid integer `{t}`"));
        if let Some((a, b)) = s.split_once("..") {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {a}..{b}"));
            }
            return Ok(Range((a..=b).collect()));
        }
        let values = s.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
        Ok(Range(values))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!("3".parse::<Range>().unwrap().0, vec![3]);
        assert_eq!("2..4".parse::<Range>().unwrap().0, vec![2, 3, 4]);
        assert_eq!("2,5".parse::<Range>().unwrap().0, vec![2, 5]);
        assert!("4..2".parse::<Range>().is_err());
        assert!("x".parse::<Range>().is_err());
    }
}
