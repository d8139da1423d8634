//! Adaptive Gauss–Kronrod (7/15) quadrature on finite intervals.

use crate::error::{Error, Result};
use crate::scalar::{lit, Scalar};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature<T> {
    pub value: T,
    pub abs_error: T,
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

fn gauss_kronrod<T, F>(f: &mut F, a: T, b: T) -> Result<Segment<T>>
where
    T: Scalar,
    F: FnMut(T) -> Result<T>,
{
    let center = (a + b) * lit(0.5);
    let half = (b - a) * lit(0.5);
    let fc = f(center)?;
    let mut kronrod = fc * lit(WGK[7]);
    let mut gauss = fc * lit(WG[3]);
    for (j, &node) in XGK[..7].iter().enumerate() {
        let dx = half * lit(node);
        let pair = f(center - dx)? + f(center + dx)?;
        kronrod = kronrod + pair * lit(WGK[j]);
        if j % 2 == 1 {
            gauss = gauss + pair * lit(WG[j / 2]);
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    Ok(Segment { a, b, value, error })
}

/// Integrates `f` over `[a, b]`, bisecting the worst segment until the summed
/// error estimate is below `max(abs_tol, rel_tol·|value|)`.
pub fn integrate<T, F>(
    mut f: F,
    a: T,
    b: T,
    abs_tol: T,
    rel_tol: T,
    max_intervals: usize,
) -> Result<Quadrature<T>>
where
    T: Scalar,
    F: FnMut(T) -> Result<T>,
{
    if !(b > a) {
        return Err(Error::InvalidInput(format!("empty interval [{a}, {b}]")));
    }
    let mut segments = vec![gauss_kronrod(&mut f, a, b)?];
    loop {
        let value = segments.iter().fold(T::zero(), |acc, s| acc + s.value);
        let error = segments.iter().fold(T::zero(), |acc, s| acc + s.error);
        if error <= abs_tol.max(rel_tol * value.abs()) || segments.len() >= max_intervals {
            return Ok(Quadrature {
                value,
                abs_error: error,
                intervals: segments.len(),
            });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.partial_cmp(&y.1.error).expect("finite errors"))
            .map(|(i, _)| i)
            .expect("at least one segment");
        let s = segments.swap_remove(worst);
        let mid = (s.a + s.b) * lit(0.5);
        if mid <= s.a || mid >= s.b {
            // interval exhausted at this precision; keep it and stop refining it
            segments.push(Segment {
                error: T::zero(),
                ..s
            });
            continue;
        }
        segments.push(gauss_kronrod(&mut f, s.a, mid)?);
        segments.push(gauss_kronrod(&mut f, mid, s.b)?);
    }
}
