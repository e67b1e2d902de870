"""Adam optimizer with decoupled L2 gradient augmentation."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .network import NeuralNet


@dataclass
class AdamState:
    """Per-network optimizer state.

    ``l2_coeff`` augments each gradient with ``l2_coeff * param`` before the
    moment updates, implementing the weight regularizer outside the loss.
    """

    learning_rate: float = 2e-4
    beta1: float = 0.5
    beta2: float = 0.99
    epsilon: float = 1e-8
    l2_coeff: float = 1e-4
    step_count: int = 0
    first_moment: list = field(default=None, repr=False)
    second_moment: list = field(default=None, repr=False)

    def __post_init__(self):
        if not (0.0 <= self.beta1 < 1.0 and 0.0 <= self.beta2 < 1.0):
            raise ValueError("beta1 and beta2 must lie in [0, 1)")

    def _ensure_moments(self, net: NeuralNet):
        if self.first_moment is None:
            self.first_moment = [[np.zeros_like(W), np.zeros_like(b)] for W, b in net.params]
            self.second_moment = [[np.zeros_like(W), np.zeros_like(b)] for W, b in net.params]


def adam_step(net: NeuralNet, state: AdamState):
    """Apply one bias-corrected Adam update from ``net.grads``, then clear them."""
    state._ensure_moments(net)
    state.step_count += 1
    t = state.step_count
    b1, b2 = state.beta1, state.beta2
    c1 = 1.0 - b1**t
    c2 = 1.0 - b2**t
    for layer, grads, m, v in zip(net.params, net.grads, state.first_moment, state.second_moment):
        for p, g, mi, vi in zip(layer, grads, m, v):
            if state.l2_coeff:
                g = g + state.l2_coeff * p
            mi *= b1
            mi += (1.0 - b1) * g
            vi *= b2
            vi += (1.0 - b2) * g * g
            p -= state.learning_rate * (mi / c1) / (np.sqrt(vi / c2) + state.epsilon)
    net.zero_grads()
