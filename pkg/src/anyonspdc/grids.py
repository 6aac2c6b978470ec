"""Uniform 1D sampling grids and trapezoidal quadrature weights.

Three grids appear in the pipeline: positions along the waveguide (z),
difference frequencies (omega_minus) and HOM delays (tau).  They share one
implementation; the subclasses only differ in name and in what the samples
mean.  Exchange-type operations pair sample ``k`` with sample ``n - 1 - k``,
which is the +x/-x partner exactly when the grid is symmetric about zero.
"""

import numpy as np

from .errors import GridError, PairingError

# Relative tolerance on spacing uniformity.  np.linspace grids of ~1e4 points
# deviate by a few 1e-13 of the spacing, so 1e-12 would reject them.
UNIFORM_RTOL = 1e-9
# Pairing tolerance, in units of the spacing.
PAIRING_RTOL = 1e-9


def _readonly(a):
    a = np.array(a, dtype=float)
    a.flags.writeable = False
    return a


class UniformGrid:
    """Strictly increasing, uniformly spaced 1D samples."""

    def __init__(self, samples):
        x = _readonly(samples)
        if x.ndim != 1 or x.size < 2:
            raise GridError("grid needs a 1D array of at least 2 samples")
        if not np.all(np.isfinite(x)):
            raise GridError("grid samples must be finite")
        d = np.diff(x)
        if np.any(d <= 0):
            raise GridError("grid samples must be strictly increasing")
        step = (x[-1] - x[0]) / (x.size - 1)
        if np.max(np.abs(d - step)) > UNIFORM_RTOL * step:
            raise GridError("grid spacing is not uniform")
        self._x = x
        self._step = float(step)

    @classmethod
    def symmetric(cls, n, half_width):
        """``n`` samples spanning ``[-half_width, half_width]``, exactly paired.

        Odd ``n`` puts a sample at zero; even ``n`` straddles it.
        """
        n = int(n)
        if n < 2:
            raise GridError(f"need at least 2 samples, got {n}")
        if not half_width > 0:
            raise GridError(f"half_width must be > 0, got {half_width}")
        step = 2.0 * half_width / (n - 1)
        # integer offsets keep x[k] == -x[n-1-k] bit for bit
        return cls((np.arange(n) - (n - 1) / 2) * step)

    @property
    def samples(self):
        return self._x

    @property
    def step(self):
        return self._step

    @property
    def size(self):
        return self._x.size

    def __len__(self):
        return self._x.size

    @property
    def is_symmetric(self):
        return bool(
            np.max(np.abs(self._x + self._x[::-1])) <= PAIRING_RTOL * self._step
        )

    def require_symmetric(self, what="operation"):
        if not self.is_symmetric:
            raise PairingError(f"{what} needs a grid symmetric about zero")

    def weights(self):
        """Trapezoidal quadrature weights."""
        w = np.full(self.size, self._step)
        w[0] = w[-1] = 0.5 * self._step
        return w

    def integrate(self, values, axis=-1):
        values = np.asarray(values)
        return np.tensordot(values, self.weights(), axes=([axis], [0]))

    def same_as(self, other):
        return (
            type(self) is type(other)
            and self.size == other.size
            and np.array_equal(self._x, other._x)
        )

    def __repr__(self):
        return (
            f"{type(self).__name__}(n={self.size}, "
            f"range=[{self._x[0]:.6g}, {self._x[-1]:.6g}])"
        )


class SpatialGrid(UniformGrid):
    """Positions z along the waveguide [m]."""

    @property
    def z(self):
        return self._x


class FrequencyGrid(UniformGrid):
    """Difference frequencies omega_minus = omega_s - omega_i [rad/s]."""

    @property
    def omega(self):
        return self._x


class DelayGrid(UniformGrid):
    """Signal-idler delays tau [s]."""

    @property
    def tau(self):
        return self._x
