//! The `parity` subcommand: the bit sequence of the real and complex
//! counts at indices divisible by 8, with zero positions listed.

use k3count::congruences::parity_sequence;

pub fn run(k_max: usize) -> String {
    let bits = parity_sequence(k_max);
    let rendered: Vec<String> = bits.iter().map(|b| b.to_string()).collect();
    let zeros: Vec<String> = bits
        .iter()
        .enumerate()
        .filter(|&(_, &b)| b == 0)
        .map(|(i, _)| i.to_string())
        .collect();
    let ones = bits.iter().filter(|&&b| b == 1).count();
    format!(
        "i_0..i_{k_max}: {}\nones: {}, zeros: {}\nzeros at {{{}}}\n",
        rendered.join(" "),
        ones,
        bits.len() - ones,
        zeros.join(", "),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn opening_bits_and_zero_positions() {
        let out = run(4);
        assert!(out.contains("i_0..i_4: 1 1 1 0 1"));
        assert!(out.contains("ones: 4, zeros: 1"));
        assert!(out.contains("zeros at {3}"));
    }

    #[test]
    fn degenerate_prefix() {
        let out = run(0);
        assert!(out.contains("i_0..i_0: 1"));
        assert!(out.contains("zeros at {}"));
    }

    #[test]
    fn first_two_octuple_indices_are_odd() {
        let out = run(2);
        assert!(out.contains("i_0..i_2: 1 1 1"));
    }
}
