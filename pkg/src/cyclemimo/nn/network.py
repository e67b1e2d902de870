"""Dense feed-forward networks with hand-written backpropagation.

The engine supports exactly four layer kinds (dense, leaky_relu, dropout,
tanh) over double-precision batch matrices of shape ``[batch, features]``.
Training forwards push an activation cache onto a per-network stack;
``backward`` pops the most recent cache, so nested uses of the same network
(e.g. a generator applied twice inside one loss) must unwind in LIFO order.
Parameter gradients accumulate across backward calls until an optimizer
step clears them, which lets several loss terms contribute to one update.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass

import numpy as np

from ..errors import DimensionError, NumericError, StateError

_KINDS = ("dense", "leaky_relu", "dropout", "tanh")


@dataclass
class LayerSpec:
    """One layer of a network: kind plus its scalar hyperparameters."""

    kind: str
    width: int | None = None  # dense output width
    slope: float = 0.2  # leaky_relu negative-axis slope
    drop_rate: float = 0.1  # dropout dormancy rate

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown layer kind {self.kind!r}")
        if self.kind == "dense":
            if self.width is None or self.width < 1:
                raise ValueError("dense layer needs a positive width")
        if self.kind == "leaky_relu" and not self.slope > 0:
            raise ValueError(f"leaky_relu slope must be > 0, got {self.slope}")
        if self.kind == "dropout" and not 0.0 <= self.drop_rate < 1.0:
            raise ValueError(f"drop_rate must be in [0, 1), got {self.drop_rate}")


def _as_matrix(x, name: str) -> np.ndarray:
    a = np.asarray(x, dtype=np.float64)
    if a.ndim != 2:
        raise DimensionError(f"{name} must be 2-D, got shape {a.shape}")
    return a


def _check_finite(a: np.ndarray, where: str):
    # sum() is non-finite iff any entry is NaN/Inf at the magnitudes seen here
    if not np.isfinite(a.sum()):
        raise NumericError(f"non-finite values produced at {where}")


def dense_forward(x, W, b) -> np.ndarray:
    """Affine map ``x @ W + b`` with strict shape checks."""
    x = _as_matrix(x, "x")
    W = _as_matrix(W, "W")
    b = np.asarray(b, dtype=np.float64).reshape(-1)
    if x.shape[1] != W.shape[0]:
        raise DimensionError(
            f"dense input has {x.shape[1]} features but weight matrix is "
            f"{W.shape[0]}x{W.shape[1]}"
        )
    if b.shape[0] != W.shape[1]:
        raise DimensionError(
            f"bias length {b.shape[0]} does not match weight matrix "
            f"{W.shape[0]}x{W.shape[1]}"
        )
    return x @ W + b


class NeuralNet:
    """An ordered layer stack with parameters, gradients and Adam-ready state.

    Weights start Glorot-uniform (``±sqrt(6 / (fan_in + fan_out))``), biases
    zero, drawn from the provided generator.  Dropout masks come from an
    internal generator seeded at construction so that eval-mode forwards
    never consume randomness and clones replay identical masks.
    """

    def __init__(self, input_width: int, specs: list[LayerSpec], rng: np.random.Generator):
        if input_width < 1:
            raise ValueError("input_width must be positive")
        self.input_width = int(input_width)
        self.specs = list(specs)
        self.params: list[list[np.ndarray]] = []  # [W, b] per dense layer
        self.grads: list[list[np.ndarray]] = []
        self._dense_in: list[int] = []  # input width of each dense layer

        width = self.input_width
        for spec in self.specs:
            if spec.kind == "dense":
                bound = np.sqrt(6.0 / (width + spec.width))
                W = rng.uniform(-bound, bound, size=(width, spec.width))
                b = np.zeros(spec.width)
                self.params.append([W, b])
                self.grads.append([np.zeros_like(W), np.zeros_like(b)])
                self._dense_in.append(width)
                width = spec.width
        self.output_width = width
        self._cache_stack: list[list] = []
        self._dropout_rng = np.random.Generator(
            np.random.PCG64(rng.integers(0, 2**63 - 1))
        )

    def reseed_dropout(self, seed: int):
        """Pin the dropout stream, e.g. to freeze masks for a gradient check."""
        self._dropout_rng = np.random.Generator(np.random.PCG64(seed))

    def clone(self) -> "NeuralNet":
        return copy.deepcopy(self)

    def zero_grads(self):
        for g in self.grads:
            g[0][...] = 0.0
            g[1][...] = 0.0

    def forward(self, x, train: bool = False) -> np.ndarray:
        x = _as_matrix(x, "input")
        if x.shape[1] != self.input_width:
            raise DimensionError(
                f"network expects {self.input_width} input features, got {x.shape[1]}"
            )
        _check_finite(x, "input")
        cache = [] if train else None
        dense_i = 0
        out = x
        for li, spec in enumerate(self.specs):
            if spec.kind == "dense":
                W, b = self.params[dense_i]
                if train:
                    cache.append(out)
                out = out @ W + b
                dense_i += 1
            elif spec.kind == "leaky_relu":
                factor = np.where(out >= 0.0, 1.0, spec.slope)
                if train:
                    cache.append(factor)
                out = out * factor
            elif spec.kind == "dropout":
                if train:
                    if spec.drop_rate > 0.0:
                        keep = 1.0 - spec.drop_rate
                        mask = (
                            self._dropout_rng.random(out.shape) >= spec.drop_rate
                        ) / keep
                    else:
                        mask = np.ones_like(out)
                    cache.append(mask)
                    out = out * mask
                # eval: identity, no rng consumed
            else:  # tanh
                out = np.tanh(out)
                if train:
                    cache.append(out)
            _check_finite(out, f"layer {li} ({spec.kind})")
        if train:
            self._cache_stack.append(cache)
        return out

    def backward(self, upstream) -> np.ndarray:
        """Backpropagate, accumulating parameter grads; returns the input grad.

        Pops the cache of the most recent train-mode forward.
        """
        if not self._cache_stack:
            raise StateError("backward called without a live train-mode forward")
        cache = self._cache_stack.pop()
        grad = _as_matrix(upstream, "upstream_grad")
        if grad.shape[1] != self.output_width:
            raise DimensionError(
                f"upstream grad has {grad.shape[1]} features, network outputs "
                f"{self.output_width}"
            )
        ci = len(cache) - 1
        dense_i = len(self.params) - 1
        for spec in reversed(self.specs):
            if spec.kind == "dense":
                x = cache[ci]
                W, _ = self.params[dense_i]
                self.grads[dense_i][0] += x.T @ grad
                self.grads[dense_i][1] += grad.sum(axis=0)
                grad = grad @ W.T
                dense_i -= 1
            elif spec.kind == "leaky_relu":
                grad = grad * cache[ci]
            elif spec.kind == "dropout":
                grad = grad * cache[ci]
            else:  # tanh
                y = cache[ci]
                grad = grad * (1.0 - y * y)
            ci -= 1
        _check_finite(grad, "input gradient")
        return grad

    @property
    def has_live_cache(self) -> bool:
        return bool(self._cache_stack)

    def param_vector(self) -> np.ndarray:
        """Flat copy of all parameters, in layer order (W row-major, then b)."""
        return np.concatenate([np.concatenate([W.ravel(), b]) for W, b in self.params])

    def set_param_vector(self, vec: np.ndarray):
        vec = np.asarray(vec, dtype=np.float64)
        pos = 0
        for W, b in self.params:
            n = W.size
            W[...] = vec[pos : pos + n].reshape(W.shape)
            pos += n
            b[...] = vec[pos : pos + b.size]
            pos += b.size
        if pos != vec.size:
            raise DimensionError(f"parameter vector length {vec.size}, expected {pos}")
