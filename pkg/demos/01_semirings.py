"""Four semirings on nonnegative numbers.

Each instance reinterprets + and * while keeping 0 and 1 as the neutral
elements.  Run with ``python demos/01_semirings.py``.
"""

import numpy as np

from zsemiring import Scalar, Semiring, sr_try_div
from zsemiring.errors import NotInvertibleError

# %% the same two numbers in every instance
for sr in Semiring:
    a, b = (Scalar(0.7, sr), Scalar(0.6, sr))
    print(f"{sr.value:12s}  0.7 + 0.6 = {(a + b).value:.4g}   0.7 * 0.6 = {(a * b).value:.4g}")

# %% max-times and nonnegative live on [0, inf), the lattices on [0, 1]
print(Scalar(6, "max-times") + Scalar(2, "max-times"))
try:
    Scalar(1.5, "max-min")
except ValueError as exc:
    print("rejected:", exc)

# %% idempotency separates nonnegative algebra from the rest
x = np.array([0.25, 0.5, 1.0])
for sr in Semiring:
    print(f"{sr.value:12s}  x + x == x: {np.array_equal(sr.add(x, x), x)}")

# %% division: every lam > 0 is invertible in max-times and nonnegative algebra,
# nothing but 1 is invertible in the lattices
print(sr_try_div(Scalar(6, "max-times"), Scalar(2, "max-times")).value)
try:
    sr_try_div(Scalar(0.5, "max-min"), Scalar(0.7, "max-min"))
except NotInvertibleError as exc:
    print("max-min:", exc)

# %% distributivity checked on a batch of random triples
rng = np.random.default_rng(0)
a, b, c = rng.integers(0, 2**10, size=(3, 10_000)) / 2**10
for sr in Semiring:
    lhs = sr.mul(a, sr.add(b, c))
    rhs = sr.add(sr.mul(a, b), sr.mul(a, c))
    print(f"{sr.value:12s}  a(b+c) = ab+ac on 10k triples: {np.allclose(lhs, rhs, rtol=1e-12, atol=0)}")
