use jacklr_partitions::Partition;

/// Parses `3,2,1`; errors name the 1-based column of the offending part.
pub fn parse_partition(text: &str) -> Result<Partition, String> {
    if text.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    let mut column = 1;
    for token in text.split(',') {
        let trimmed = token.trim();
        let at = column + (token.len() - token.trim_start().len());
        let part: u32 = trimmed
            .parse()
            .map_err(|_| format!("invalid part {trimmed:?} at column {at}"))?;
        if part == 0 {
            return Err(format!("zero part at column {at}"));
        }
        if parts.last().is_some_and(|&prev| prev < part) {
            return Err(format!("part {part} at column {at} exceeds the part before it"));
        }
        parts.push(part);
        column += token.len() + 1;
    }
    Partition::new(parts).map_err(|e| e.to_string())
}
