//! Hook lengths of the eight-parameter window family over `(21, 21, 321)`.

use std::fmt;

use jacklr_exact::{alpha, divrem, int, MultiPoly, ALPHA};
use jacklr_partitions::root::RootBox;
use jacklr_partitions::{Cell, Slot};
use jacklr_stanley::{FreeBox, HookChoice, HookContext, VirtualHookContext};

use crate::HookSpaceError;

/// Window parameters. The family only exists when `r2·n4 = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct WindowParams {
    pub m1: u32,
    pub m2: u32,
    pub m3: u32,
    pub n1: u32,
    pub n2: u32,
    pub n4: u32,
    pub r1: u32,
    pub r2: u32,
}

impl WindowParams {
    pub const NAMES: [&'static str; 8] = ["m1", "m2", "m3", "n1", "n2", "n4", "r1", "r2"];

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_array(v: [u32; 8]) -> Result<Self, HookSpaceError> {
        let [m1, m2, m3, n1, n2, n4, r1, r2] = v;
        WindowParams { m1, m2, m3, n1, n2, n4, r1, r2 }.validate()
    }

    pub fn to_array(self) -> [u32; 8] {
        [self.m1, self.m2, self.m3, self.n1, self.n2, self.n4, self.r1, self.r2]
    }

    pub fn validate(self) -> Result<Self, HookSpaceError> {
        if self.r2 != 0 && self.n4 != 0 {
            return Err(HookSpaceError::Constraint);
        }
        Ok(self)
    }
}

impl fmt::Display for WindowParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Self::NAMES
            .iter()
            .zip(self.to_array())
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// `β = α − 1`.
pub fn beta_value() -> MultiPoly {
    &alpha() - &MultiPoly::one()
}

/// Upper hooks of the twelve boxes, in `RootBox::ALL` order, for parameter
/// values given as polynomials.
fn upper_rows(p: &[MultiPoly; 8]) -> [MultiPoly; 12] {
    let [m1, m2, m3, n1, n2, n4, r1, r2] = p;
    let a = alpha();
    let one = MultiPoly::one();
    let k = |c: i64| MultiPoly::from_int(c);
    // h = constant part + (alpha part)·α
    let row = |c: MultiPoly, al: MultiPoly| &c + &(&al * &a);
    let sum = |xs: &[&MultiPoly]| xs.iter().fold(MultiPoly::zero(), |s, x| &s + *x);
    [
        row(m1.clone(), n1 + &one),
        row(&sum(&[m1, m2, r1]) + &one, &(n1 + n2) + &k(2)),
        row(m2.clone(), n2 + &one),
        row(m3.clone(), one.clone()),
        row(&sum(&[m3, r1, r2]) + &one, n4 + &k(2)),
        row(MultiPoly::zero(), n4 + &one),
        row(MultiPoly::zero(), one.clone()),
        row(&sum(&[m1, m3, r1]) + &one, n1 + &k(2)),
        row(r1.clone(), one.clone()),
        row(&sum(&[m1, m2, m3, r1, r2]) + &k(2), &sum(&[n1, n2, n4]) + &k(3)),
        row(&sum(&[m2, r1, r2]) + &one, &(n2 + n4) + &k(2)),
        row(r2.clone(), one),
    ]
}

/// The hook table of one window: twelve boxes plus the virtual box `b̃3`.
#[derive(Clone, Debug, PartialEq)]
pub struct HookTable {
    params: WindowParams,
    upper: [MultiPoly; 12],
    virtual_upper: MultiPoly,
}

impl HookTable {
    pub fn params(&self) -> WindowParams {
        self.params
    }

    pub fn hook(&self, b: RootBox, choice: HookChoice) -> MultiPoly {
        lower_if(&self.upper[b as usize], choice)
    }

    /// `h_{b̃3}^U = α^{-1} h_{b3}^U h_{c1}^L h_{c6}^U`.
    pub fn virtual_hook(&self, choice: HookChoice) -> MultiPoly {
        lower_if(&self.virtual_upper, choice)
    }

    pub fn free(&self, b: FreeBox, choice: HookChoice) -> MultiPoly {
        match b {
            FreeBox::Bt3 => self.virtual_hook(choice),
            _ => self.hook(b.root_box(), choice),
        }
    }

    /// `x_b(h^U + h^L)` for the ten free boxes.
    pub fn ell(&self, b: FreeBox) -> MultiPoly {
        let s = &self.free(b, HookChoice::U) + &self.free(b, HookChoice::L);
        s.scale(&int(b.x_sign()))
    }
}

fn lower_if(upper: &MultiPoly, choice: HookChoice) -> MultiPoly {
    match choice {
        HookChoice::U => upper.clone(),
        HookChoice::L => upper - &beta_value(),
    }
}

impl HookContext for HookTable {
    fn hook(&self, slot: Slot, cell: Cell, choice: HookChoice) -> Option<MultiPoly> {
        RootBox::at(slot, cell).map(|b| HookTable::hook(self, b, choice))
    }
}

impl VirtualHookContext for HookTable {
    fn free_hook(&self, b: FreeBox, choice: HookChoice) -> Option<MultiPoly> {
        Some(self.free(b, choice))
    }
}

/// All thirteen rows of the hook-length table at the given parameters.
pub fn hook_table(p: WindowParams) -> Result<HookTable, HookSpaceError> {
    let p = p.validate()?;
    let values = p.to_array().map(|v| MultiPoly::from_int(v as i64));
    let upper = upper_rows(&values);
    let lower_c1 = lower_if(&upper[RootBox::C1 as usize], HookChoice::L);
    let product = &(&upper[RootBox::B3 as usize] * &lower_c1) * &upper[RootBox::C6 as usize];
    let (virtual_upper, rem) = divrem(&product, &alpha())?;
    if !rem.is_zero() {
        return Err(HookSpaceError::VirtualRemainder(rem.to_string()));
    }
    Ok(HookTable { params: p, upper, virtual_upper })
}

/// The upper hooks of the ten free boxes as polynomials in the parameter
/// names and `a`, with `b̃3` reduced modulo `r2·n4`.
pub fn symbolic_free_hooks() -> Vec<(FreeBox, MultiPoly)> {
    let vars = WindowParams::NAMES.map(MultiPoly::var);
    let upper = upper_rows(&vars);
    let product = &upper[RootBox::B3 as usize] * &upper[RootBox::C6 as usize];
    // h_{c1}^L = 1, so only the α^{-1} remains; drop every r2·n4 multiple.
    let reduced: MultiPoly = product
        .term_list()
        .into_iter()
        .filter(|(pw, _)| !(pw.iter().any(|(v, _)| v == "r2") && pw.iter().any(|(v, _)| v == "n4")))
        .map(|(pw, c)| {
            let pw: Vec<(&str, u32)> = pw.iter().map(|(v, e)| (v.as_str(), *e)).collect();
            MultiPoly::monomial(c, &pw)
        })
        .sum();
    let virtual_upper: MultiPoly = reduced
        .coefficients_in(ALPHA)
        .into_iter()
        .map(|(e, c)| {
            assert!(e >= 1, "virtual hook has an α-free part");
            &c * &alpha().pow(e - 1)
        })
        .sum();
    FreeBox::ALL
        .into_iter()
        .map(|b| {
            let h = match b {
                FreeBox::Bt3 => virtual_upper.clone(),
                _ => upper[b.root_box() as usize].clone(),
            };
            (b, h)
        })
        .collect()
}
