"""
Finite-difference oracles shared by the algebra and manifold modules.

Central differences with the step rule h = eps**(1/3) * max(1, |x_i|) for
first derivatives and eps**(1/4) * max(1, |x_i|) for second derivatives.
"""

import os
import sys
from typing import Callable, Optional

import numpy as np

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), "../.."))
from src.errors import NonFiniteError

EPS = np.finfo(float).eps
FIRST_ORDER_STEP = EPS ** (1.0 / 3.0)
SECOND_ORDER_STEP = EPS ** 0.25


def default_step(x, order: int = 1) -> np.ndarray:
    """Per-coordinate step scaled to the magnitude of x."""
    base = FIRST_ORDER_STEP if order == 1 else SECOND_ORDER_STEP
    return base * np.maximum(1.0, np.abs(np.atleast_1d(np.asarray(x, dtype=float))))


def _evaluate(f: Callable, x: np.ndarray, scalar_input: bool) -> np.ndarray:
    value = np.atleast_1d(np.asarray(f(x[0] if scalar_input else x), dtype=float))
    if not np.all(np.isfinite(value)):
        raise NonFiniteError(f"non-finite sample at x={x.tolist()}")
    return value.ravel()


def fd_jacobian(f: Callable, x, step: Optional[float] = None) -> np.ndarray:
    """
    Central-difference Jacobian of f at x.

    Args:
        f: Callable taking a vector (or a scalar when x is a scalar) and
            returning a scalar or a vector.
        x: Evaluation point.
        step: Absolute step. Defaults to the cube-root rule per coordinate.

    Returns:
        Matrix of shape (len(f(x)), len(x)).
    """
    scalar_input = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float)).copy()
    steps = default_step(x) if step is None else np.full(x.shape, float(step))

    columns = []
    for i in range(x.size):
        forward = x.copy()
        backward = x.copy()
        forward[i] += steps[i]
        backward[i] -= steps[i]
        f_plus = _evaluate(f, forward, scalar_input)
        f_minus = _evaluate(f, backward, scalar_input)
        columns.append((f_plus - f_minus) / (forward[i] - backward[i]))

    return np.column_stack(columns)


def fd_hessian(f: Callable, x, step: Optional[float] = None) -> np.ndarray:
    """
    Central-difference second derivatives of a (vector-valued) f.

    Returns:
        Array of shape (len(f(x)), len(x), len(x)), symmetric in the last two axes.
    """
    scalar_input = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float)).copy()
    steps = default_step(x, order=2) if step is None else np.full(x.shape, float(step))
    n = x.size
    m = _evaluate(f, x, scalar_input).size
    hessian = np.zeros((m, n, n))

    for i in range(n):
        for k in range(i, n):
            values = []
            for si, sk in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                shifted = x.copy()
                shifted[i] += si * steps[i]
                shifted[k] += sk * steps[k]
                values.append(_evaluate(f, shifted, scalar_input))
            block = (values[0] - values[1] - values[2] + values[3]) / (4.0 * steps[i] * steps[k])
            hessian[:, i, k] = block
            hessian[:, k, i] = block

    return hessian


if __name__ == "__main__":
    # f(x) = x^2 at x = 3
    jac = fd_jacobian(lambda t: t * t, 3.0)
    print(f"d/dx x^2 at 3: {jac[0, 0]:.10f}")
    assert abs(jac[0, 0] - 6.0) < 1e-7

    A = np.array([[1.0, 2.0], [3.0, -4.0]])
    jac = fd_jacobian(lambda v: A @ v, np.array([0.5, -1.5]))
    assert np.allclose(jac, A, atol=1e-12)
    print("Finite-difference self-check passed")
