//! Character table data of A7 restricted to the representations of dimension at most 20,
//! together with the character of the 20-dimensional third exterior power.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::CyclotomicNumber;

pub const NUM_CLASSES: usize = 9;

/// Column labels: representative words of the conjugacy classes, in table order.
pub const COLUMN_WORDS: [&str; NUM_CLASSES] =
    ["id", "ab^-1ab", "a", "a^-1bab", "a^-1bab^2", "b", "ababab^2", "ab", "a^-1b"];

/// Columns holding the two classes of elements of order 7.
pub const ORDER7_COLUMNS: (usize, usize) = (7, 8);

/// `i sqrt 7` as the quadratic Gauss sum in `zeta_7 = zeta_21^3`:
/// `z7 + z7^2 + z7^4 - z7^3 - z7^5 - z7^6`.
pub fn i_sqrt7() -> CyclotomicNumber {
    let z7 = |k: i64| CyclotomicNumber::zeta_pow(3 * k);
    let pos = [1, 2, 4].iter().fold(CyclotomicNumber::zero(), |acc, &k| &acc + &z7(k));
    [3, 5, 6].iter().fold(pos, |acc, &k| &acc - &z7(k))
}

/// `-(1 - i sqrt 7)/2` when `plus` is false, `-(1 + i sqrt 7)/2` when true.
fn order7_value(plus: bool) -> CyclotomicNumber {
    let s = i_sqrt7();
    let one = CyclotomicNumber::one();
    let inner = if plus { &one + &s } else { &one - &s };
    (-&inner).div_int(&BigInt::from(2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub name: String,
    pub values: Vec<CyclotomicNumber>,
}

impl CharacterRow {
    pub fn new(name: &str, values: Vec<CyclotomicNumber>) -> Self {
        assert_eq!(values.len(), NUM_CLASSES);
        CharacterRow { name: name.to_owned(), values }
    }

    fn integral(name: &str, v: [i64; NUM_CLASSES]) -> Self {
        Self::new(name, v.iter().map(|&x| CyclotomicNumber::from_int(x)).collect())
    }

    pub fn dimension(&self) -> &CyclotomicNumber {
        &self.values[0]
    }

    /// Exchange the values at the two order-7 columns.
    pub fn swap_order7(&self) -> Self {
        let mut values = self.values.clone();
        values.swap(ORDER7_COLUMNS.0, ORDER7_COLUMNS.1);
        CharacterRow { name: format!("{}*", self.name), values }
    }

    pub fn conj(&self) -> Self {
        CharacterRow { name: self.name.clone(), values: self.values.iter().map(|v| v.conj()).collect() }
    }
}

impl fmt::Display for CharacterRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.name)?;
        for v in &self.values {
            write!(f, " [{v}]")?;
        }
        Ok(())
    }
}

/// Rows `V0, V6, V10, V10', V14, V14', V15, W`.
pub fn table1() -> Vec<CharacterRow> {
    let mut v10 = CharacterRow::integral("V10", [10, -2, 1, 1, 0, 0, 1, 0, 0]);
    v10.values[7] = order7_value(false);
    v10.values[8] = order7_value(true);
    let v10p = CharacterRow::new("V10'", v10.swap_order7().values);
    vec![
        CharacterRow::integral("V0", [1; NUM_CLASSES]),
        CharacterRow::integral("V6", [6, 2, 3, 0, 0, 1, -1, -1, -1]),
        v10,
        v10p,
        CharacterRow::integral("V14", [14, 2, 2, -1, 0, -1, 2, 0, 0]),
        CharacterRow::integral("V14'", [14, 2, -1, 2, 0, -1, -1, 0, 0]),
        CharacterRow::integral("V15", [15, -1, 3, 0, -1, 0, -1, 1, 1]),
        CharacterRow::integral("W", [20, -4, 2, 2, 0, 0, 2, -1, -1]),
    ]
}

pub fn table_row(name: &str) -> Option<CharacterRow> {
    table1().into_iter().find(|r| r.name == name)
}

/// `<chi, psi> = sum_C |C| chi(C) conj(psi(C)) / sum_C |C|`.
pub fn inner_product(
    chi: &CharacterRow,
    psi: &CharacterRow,
    class_sizes: &[usize; NUM_CLASSES],
) -> CyclotomicNumber {
    let total: usize = class_sizes.iter().sum();
    let sum = (0..NUM_CLASSES).fold(CyclotomicNumber::zero(), |acc, c| {
        let t = &chi.values[c] * &psi.values[c].conj();
        &acc + &t.scale_int(&BigInt::from(class_sizes[c]))
    });
    sum.div_int(&BigInt::from(total))
}
