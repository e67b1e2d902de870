from .network import LayerSpec, NeuralNet, dense_forward
from .adam import AdamState, adam_step
from .checkpoint import save_network, load_network, network_to_bytes, network_from_bytes

__all__ = [
    "LayerSpec",
    "NeuralNet",
    "dense_forward",
    "AdamState",
    "adam_step",
    "save_network",
    "load_network",
    "network_to_bytes",
    "network_from_bytes",
]
