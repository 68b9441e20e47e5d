//! Text forms accepted on the command line.

use upkit_core::components::CharFn;
use upkit_core::partition::{ClassPartition, Partition};

/// `5,3,1`, `3^2,1` or the empty string. Parts may come in any order.
pub fn parse_partition(text: &str) -> Result<Partition, String> {
    let text = text.trim();
    let text = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(text);
    let mut parts = Vec::new();
    if text.trim().is_empty() {
        return Ok(Partition::empty());
    }
    for item in text.split(',') {
        let item = item.trim();
        let (base, exp) = match item.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim()),
            None => (item, "1"),
        };
        let part: u64 = base.parse().map_err(|_| format!("bad part `{}`", item))?;
        let k: usize = exp.parse().map_err(|_| format!("bad exponent in `{}`", item))?;
        if part == 0 {
            return Err(format!("parts must be positive, got `{}`", item));
        }
        parts.extend(std::iter::repeat_n(part, k));
    }
    Ok(Partition::new(parts))
}

/// Either a sign string over `S(λ)` in increasing order (`-` marks a member, `−` is accepted
/// too) or a set `{1,3}`.
pub fn parse_eps(cp: &ClassPartition, text: &str) -> Result<CharFn, String> {
    let t = text.trim();
    if let Some(inner) = t.strip_prefix('{').and_then(|x| x.strip_suffix('}')) {
        let mut subset = Vec::new();
        for item in inner.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            subset.push(item.parse::<u64>().map_err(|_| format!("bad set member `{}`", item))?);
        }
        return CharFn::on(cp, subset).map_err(|e| e.to_string());
    }
    let t = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(t);
    let signs: Vec<char> = t.chars().collect();
    let support = cp.s_set();
    if signs.len() != support.len() {
        return Err(format!("sign string has {} signs but S(lambda) has {} elements", signs.len(), support.len()));
    }
    let mut subset = Vec::new();
    for (&c, &sign) in support.iter().zip(&signs) {
        match sign {
            '+' => {}
            '-' | '−' => subset.push(c),
            other => return Err(format!("unexpected sign `{}`", other)),
        }
    }
    CharFn::on(cp, subset).map_err(|e| e.to_string())
}

/// `B` is `s = +1`, `C` is `s = -1`.
pub fn parse_dual(text: &str) -> Result<i8, String> {
    match text {
        "B" | "b" => Ok(1),
        "C" | "c" => Ok(-1),
        _ => Err(format!("dual type must be B or C, got `{}`", text)),
    }
}

pub fn dual_name(s: i8) -> &'static str {
    if s == 1 { "B" } else { "C" }
}

#[cfg(test)]
mod tests {
    use super::*;
    use upkit_core::partition::{classify, GroupType};

    #[test]
    fn partitions() {
        assert_eq!(parse_partition("5,3,1").unwrap().parts(), &[5, 3, 1]);
        assert_eq!(parse_partition("1,3^2").unwrap().parts(), &[3, 3, 1]);
        assert_eq!(parse_partition("(2,2)").unwrap().parts(), &[2, 2]);
        assert!(parse_partition("").unwrap().is_empty());
        assert!(parse_partition("3,0").is_err());
        assert!(parse_partition("3,x").is_err());
    }

    #[test]
    fn signs_and_sets() {
        let cp = classify(parse_partition("5,3,1").unwrap(), GroupType::new(1, 9).unwrap()).unwrap();
        assert_eq!(parse_eps(&cp, "--+").unwrap().subset(), &[1, 3]);
        assert_eq!(parse_eps(&cp, "(−−+)").unwrap().subset(), &[1, 3]);
        assert_eq!(parse_eps(&cp, "{3, 1}").unwrap().subset(), &[1, 3]);
        assert!(parse_eps(&cp, "{}").unwrap().subset().is_empty());
        assert!(parse_eps(&cp, "-+").is_err());
        assert!(parse_eps(&cp, "{2}").is_err());
    }
}
