//! Arithmetic shared by float and jet evaluation of leaf quantities.

use super::GeometryError;
use crate::series::{rational_to_f64, Jet, Rational};

pub(crate) trait LeafScalar: Clone + Sized {
    /// A constant of the same kind (and truncation order) as `self`.
    fn lift(&self, value: &Rational) -> Self;
    fn divide(&self, by: &Self) -> Result<Self, GeometryError>;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
}

macro_rules! ring_ops {
    () => {
        fn plus(&self, other: &Self) -> Self {
            self + other
        }
        fn minus(&self, other: &Self) -> Self {
            self - other
        }
        fn times(&self, other: &Self) -> Self {
            self * other
        }
    };
}

impl LeafScalar for f64 {
    ring_ops!();

    fn lift(&self, value: &Rational) -> Self {
        rational_to_f64(value)
    }

    fn divide(&self, by: &Self) -> Result<Self, GeometryError> {
        if *by == 0.0 {
            return Err(GeometryError::Degenerate("division by zero in float evaluation".into()));
        }
        Ok(self / by)
    }
}

impl LeafScalar for Jet {
    ring_ops!();

    fn lift(&self, value: &Rational) -> Self {
        Jet::constant(value.clone(), self.order())
    }

    fn divide(&self, by: &Self) -> Result<Self, GeometryError> {
        Ok(self.checked_div(by)?)
    }
}

/// Values of one warp and its first two derivatives at a point (or as jets).
#[derive(Clone, Debug)]
pub(crate) struct WarpValues<T> {
    pub dim: u32,
    pub factor_scalar: Rational,
    pub f: T,
    pub df: T,
    pub ddf: T,
    pub f_at_zero: T,
}

#[derive(Clone, Debug)]
pub(crate) struct Assembled<T> {
    pub kappas: Vec<T>,
    pub mean: T,
    pub b_norm_sq: T,
    pub ric_normal: T,
    pub s_leaf: T,
    pub s_ambient: T,
    pub area_ratio: T,
}

fn int_like<T: LeafScalar>(like: &T, v: i64) -> T {
    like.lift(&Rational::from_integer(v.into()))
}

pub(crate) fn assemble<T: LeafScalar>(terms: &[WarpValues<T>]) -> Result<Assembled<T>, GeometryError> {
    let first = terms.first().ok_or_else(|| GeometryError::Degenerate("metric has no factors".into()))?;
    let zero = int_like(&first.f, 0);
    let mut kappas = Vec::with_capacity(terms.len());
    let mut mean = zero.clone();
    let mut b_norm_sq = zero.clone();
    let mut second_sum = zero.clone();
    let mut s_leaf = zero.clone();
    let mut self_pairs = zero.clone();
    let mut diagonal = zero.clone();
    let mut area_ratio = int_like(&first.f, 1);
    for w in terms {
        let d = i64::from(w.dim);
        let kappa = w.df.divide(&w.f)?;
        let kappa_sq = kappa.times(&kappa);
        mean = mean.plus(&int_like(&kappa, d).times(&kappa));
        b_norm_sq = b_norm_sq.plus(&int_like(&kappa, d).times(&kappa_sq));
        second_sum = second_sum.plus(&int_like(&w.f, d).times(&w.ddf.divide(&w.f)?));
        s_leaf = s_leaf.plus(&w.f.lift(&w.factor_scalar).divide(&w.f.times(&w.f))?);
        self_pairs = self_pairs.plus(&int_like(&kappa, d * (d - 1)).times(&kappa_sq));
        diagonal = diagonal.plus(&int_like(&kappa, d * d).times(&kappa_sq));
        let ratio = w.f.divide(&w.f_at_zero)?;
        for _ in 0..w.dim {
            area_ratio = area_ratio.times(&ratio);
        }
        kappas.push(kappa);
    }
    // Σ_{i≠j} dᵢdⱼκᵢκⱼ = H² − Σ dᵢ²κᵢ²
    let cross_pairs = mean.times(&mean).minus(&diagonal);
    let s_ambient = s_leaf
        .minus(&int_like(&second_sum, 2).times(&second_sum))
        .minus(&self_pairs)
        .minus(&cross_pairs);
    Ok(Assembled {
        kappas,
        mean,
        b_norm_sq,
        ric_normal: zero.minus(&second_sum),
        s_leaf,
        s_ambient,
        area_ratio,
    })
}
