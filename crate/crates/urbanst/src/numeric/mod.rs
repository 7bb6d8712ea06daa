//! Minimal dense-tensor compute layer.
//!
//! Every differentiable operation here ships an explicit backward companion
//! instead of a recorded autograd tape; the gradient-check suite in
//! [`gradcheck`] validates each pair against central finite differences.

mod linalg;
mod ops;

pub mod gradcheck;

pub use linalg::{matmul_nn, matmul_nt, matmul_tn};
pub use ops::{
    instance_stats, matmul, matmul_backward, scaled_dot_attention, scaled_dot_attention_backward,
    softmax_backward, softmax_stable,
};

/// Scalar type for all numerics: 64-bit by default so finite-difference
/// checks are reliable, 32-bit under the `f32` feature for training builds.
#[cfg(not(feature = "f32"))]
pub type Real = f64;
#[cfg(feature = "f32")]
pub type Real = f32;

/// Dense row-major tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<Real>,
}

impl Tensor {
    pub fn new(shape: Vec<usize>, data: Vec<Real>) -> Self {
        assert_eq!(
            data.len(),
            shape.iter().product::<usize>(),
            "data length must equal the shape product"
        );
        Tensor { shape, data }
    }

    pub fn zeros(shape: &[usize]) -> Self {
        Tensor {
            shape: shape.to_vec(),
            data: vec![0.0; shape.iter().product()],
        }
    }

    pub fn scalar(v: Real) -> Self {
        Tensor {
            shape: vec![],
            data: vec![v],
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[Real] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Real] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<Real> {
        self.data
    }

    /// Number of rows when viewed as a 2-D matrix (all leading axes folded).
    pub fn rows_2d(&self) -> usize {
        let cols = *self.shape.last().expect("tensor must have at least 1 axis");
        if cols == 0 {
            0
        } else {
            self.data.len() / cols
        }
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn fill(&mut self, v: Real) {
        self.data.iter_mut().for_each(|x| *x = v);
    }

    pub fn map(&self, f: impl Fn(Real) -> Real) -> Tensor {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }
}

/// A learnable tensor with its gradient accumulator.
#[derive(Debug, Clone)]
pub struct Parameter {
    pub value: Tensor,
    pub grad: Tensor,
    pub name: String,
}

impl Parameter {
    pub fn new(name: impl Into<String>, value: Tensor) -> Self {
        let grad = Tensor::zeros(value.shape());
        Parameter {
            value,
            grad,
            name: name.into(),
        }
    }

    pub fn zero_grad(&mut self) {
        self.grad.fill(0.0);
    }

    /// Adds `other` (same shape) into this parameter's gradient.
    pub fn accumulate(&mut self, other: &Tensor) {
        debug_assert_eq!(self.grad.shape(), other.shape());
        for (g, o) in self.grad.data_mut().iter_mut().zip(other.data()) {
            *g += *o;
        }
    }
}
