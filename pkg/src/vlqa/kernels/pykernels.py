"""Numpy implementations of the hot numeric kernels.

This is the fallback backend; ``vlqa.kernels.cykernels`` provides the same
surface compiled with Cython. Both operate on C-contiguous float64 arrays
and return freshly allocated outputs.
"""

import numpy as np

BACKEND = "numpy"


def matmul(a, b, trans_a=False, trans_b=False):
    """Matrix product with optional operand transposes (no copies)."""
    if trans_a:
        a = a.T
    if trans_b:
        b = b.T
    return np.ascontiguousarray(a @ b)


def softmax_rows(x):
    """Row-wise softmax of a 2-D array, stabilised by max subtraction."""
    m = x.max(axis=1, keepdims=True)
    e = np.exp(x - m)
    e /= e.sum(axis=1, keepdims=True)
    return e


def softmax_rows_grad(y, gy):
    """Backward of softmax_rows: y is the forward output, gy the upstream grad."""
    s = (y * gy).sum(axis=1, keepdims=True)
    return y * (gy - s)


def tanh(x):
    return np.tanh(x)


def tanh_grad(y, gy):
    return gy * (1.0 - y * y)


def sigmoid(x):
    # Branch on sign so exp never overflows.
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def sigmoid_grad(y, gy):
    return gy * y * (1.0 - y)


def relu(x):
    return np.maximum(x, 0.0)


def relu_grad(y, gy):
    return np.where(y > 0.0, gy, 0.0)


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def scale(a, c):
    return a * c


def sum_all(a):
    return float(a.sum())
