# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels (same surface as ``pykernels``).

Written for the small, dense float64 arrays this model runs on, where
per-call overhead matters more than asymptotic throughput.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport exp as c_exp, tanh as c_tanh

cnp.import_array()

BACKEND = "cython"


def matmul(cnp.ndarray a, cnp.ndarray b, bint trans_a=False, bint trans_b=False):
    cdef double[:, ::1] A = np.ascontiguousarray(a, dtype=np.float64)
    cdef double[:, ::1] B = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t m = A.shape[1] if trans_a else A.shape[0]
    cdef Py_ssize_t k = A.shape[0] if trans_a else A.shape[1]
    cdef Py_ssize_t n = B.shape[0] if trans_b else B.shape[1]
    out_arr = np.zeros((m, n), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, p
    cdef double acc
    if not trans_a and not trans_b:
        for i in range(m):
            for p in range(k):
                acc = A[i, p]
                for j in range(n):
                    out[i, j] += acc * B[p, j]
    elif trans_a and not trans_b:
        for i in range(m):
            for p in range(k):
                acc = A[p, i]
                for j in range(n):
                    out[i, j] += acc * B[p, j]
    elif not trans_a and trans_b:
        for i in range(m):
            for j in range(n):
                acc = 0.0
                for p in range(k):
                    acc += A[i, p] * B[j, p]
                out[i, j] = acc
    else:
        for i in range(m):
            for p in range(k):
                acc = A[p, i]
                for j in range(n):
                    out[i, j] += acc * B[j, p]
    return out_arr


def softmax_rows(cnp.ndarray x):
    cdef double[:, ::1] X = np.ascontiguousarray(x, dtype=np.float64)
    cdef Py_ssize_t m = X.shape[0], n = X.shape[1]
    out_arr = np.empty((m, n), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double hi, tot
    for i in range(m):
        hi = X[i, 0]
        for j in range(1, n):
            if X[i, j] > hi:
                hi = X[i, j]
        tot = 0.0
        for j in range(n):
            out[i, j] = c_exp(X[i, j] - hi)
            tot += out[i, j]
        for j in range(n):
            out[i, j] /= tot
    return out_arr


def softmax_rows_grad(cnp.ndarray y, cnp.ndarray gy):
    cdef double[:, ::1] Y = np.ascontiguousarray(y, dtype=np.float64)
    cdef double[:, ::1] G = np.ascontiguousarray(gy, dtype=np.float64)
    cdef Py_ssize_t m = Y.shape[0], n = Y.shape[1]
    out_arr = np.empty((m, n), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double s
    for i in range(m):
        s = 0.0
        for j in range(n):
            s += Y[i, j] * G[i, j]
        for j in range(n):
            out[i, j] = Y[i, j] * (G[i, j] - s)
    return out_arr


cdef _flat(cnp.ndarray a):
    return np.ascontiguousarray(a, dtype=np.float64).reshape(-1)


def tanh(cnp.ndarray x):
    cdef double[::1] X = _flat(x)
    out_arr = np.empty(X.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(X.shape[0]):
        out[i] = c_tanh(X[i])
    return out_arr.reshape(x.shape)


def tanh_grad(cnp.ndarray y, cnp.ndarray gy):
    cdef double[::1] Y = _flat(y)
    cdef double[::1] G = _flat(gy)
    out_arr = np.empty(Y.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(Y.shape[0]):
        out[i] = G[i] * (1.0 - Y[i] * Y[i])
    return out_arr.reshape(y.shape)


def sigmoid(cnp.ndarray x):
    cdef double[::1] X = _flat(x)
    out_arr = np.empty(X.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef double e
    for i in range(X.shape[0]):
        if X[i] >= 0.0:
            out[i] = 1.0 / (1.0 + c_exp(-X[i]))
        else:
            e = c_exp(X[i])
            out[i] = e / (1.0 + e)
    return out_arr.reshape(x.shape)


def sigmoid_grad(cnp.ndarray y, cnp.ndarray gy):
    cdef double[::1] Y = _flat(y)
    cdef double[::1] G = _flat(gy)
    out_arr = np.empty(Y.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(Y.shape[0]):
        out[i] = G[i] * Y[i] * (1.0 - Y[i])
    return out_arr.reshape(y.shape)


def relu(cnp.ndarray x):
    cdef double[::1] X = _flat(x)
    out_arr = np.empty(X.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(X.shape[0]):
        out[i] = X[i] if X[i] > 0.0 else 0.0
    return out_arr.reshape(x.shape)


def relu_grad(cnp.ndarray y, cnp.ndarray gy):
    cdef double[::1] Y = _flat(y)
    cdef double[::1] G = _flat(gy)
    out_arr = np.empty(Y.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(Y.shape[0]):
        out[i] = G[i] if Y[i] > 0.0 else 0.0
    return out_arr.reshape(y.shape)


def add(cnp.ndarray a, cnp.ndarray b):
    cdef double[::1] A = _flat(a)
    cdef double[::1] B = _flat(b)
    out_arr = np.empty(A.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(A.shape[0]):
        out[i] = A[i] + B[i]
    return out_arr.reshape(a.shape)


def mul(cnp.ndarray a, cnp.ndarray b):
    cdef double[::1] A = _flat(a)
    cdef double[::1] B = _flat(b)
    out_arr = np.empty(A.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(A.shape[0]):
        out[i] = A[i] * B[i]
    return out_arr.reshape(a.shape)


def scale(cnp.ndarray a, double c):
    cdef double[::1] A = _flat(a)
    out_arr = np.empty(A.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(A.shape[0]):
        out[i] = A[i] * c
    return out_arr.reshape(a.shape)


def sum_all(cnp.ndarray a):
    cdef double[::1] A = _flat(a)
    cdef double acc = 0.0
    cdef Py_ssize_t i
    for i in range(A.shape[0]):
        acc += A[i]
    return acc
