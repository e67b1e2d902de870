"""Flat binary network checkpoints.

Layout (all integers little-endian):

===========  ========================================================
header       magic ``b"CMNN"``, version u32 (=1), layer count u32,
             input width u32
per layer    kind u8 (0 dense, 1 leaky_relu, 2 dropout, 3 tanh), then
             dense:       rows u32, cols u32, W as float64 row-major,
                          b as float64
             leaky_relu:  slope float64
             dropout:     drop_rate float64
             tanh:        nothing
===========  ========================================================

Round-trips are byte-identical: ``network_to_bytes(network_from_bytes(blob))
== blob``.
"""

from __future__ import annotations

import io
import struct

import numpy as np

from .network import LayerSpec, NeuralNet

_MAGIC = b"CMNN"
_VERSION = 1
_KIND_CODE = {"dense": 0, "leaky_relu": 1, "dropout": 2, "tanh": 3}
_CODE_KIND = {v: k for k, v in _KIND_CODE.items()}


def network_to_bytes(net: NeuralNet) -> bytes:
    buf = io.BytesIO()
    buf.write(_MAGIC)
    buf.write(struct.pack("<III", _VERSION, len(net.specs), net.input_width))
    dense_i = 0
    for spec in net.specs:
        buf.write(struct.pack("<B", _KIND_CODE[spec.kind]))
        if spec.kind == "dense":
            W, b = net.params[dense_i]
            buf.write(struct.pack("<II", W.shape[0], W.shape[1]))
            buf.write(np.ascontiguousarray(W, dtype="<f8").tobytes())
            buf.write(np.ascontiguousarray(b, dtype="<f8").tobytes())
            dense_i += 1
        elif spec.kind == "leaky_relu":
            buf.write(struct.pack("<d", spec.slope))
        elif spec.kind == "dropout":
            buf.write(struct.pack("<d", spec.drop_rate))
    return buf.getvalue()


def network_from_bytes(blob: bytes) -> NeuralNet:
    buf = io.BytesIO(blob)
    magic = buf.read(4)
    if magic != _MAGIC:
        raise ValueError(f"bad checkpoint magic {magic!r}")
    version, n_layers, input_width = struct.unpack("<III", buf.read(12))
    if version != _VERSION:
        raise ValueError(f"unsupported checkpoint version {version}")
    specs = []
    dense_params = []
    for _ in range(n_layers):
        (code,) = struct.unpack("<B", buf.read(1))
        kind = _CODE_KIND[code]
        if kind == "dense":
            rows, cols = struct.unpack("<II", buf.read(8))
            W = np.frombuffer(buf.read(rows * cols * 8), dtype="<f8").reshape(rows, cols)
            b = np.frombuffer(buf.read(cols * 8), dtype="<f8")
            specs.append(LayerSpec("dense", width=cols))
            dense_params.append([W.copy(), b.copy()])
        elif kind == "leaky_relu":
            (slope,) = struct.unpack("<d", buf.read(8))
            specs.append(LayerSpec("leaky_relu", slope=slope))
        elif kind == "dropout":
            (rate,) = struct.unpack("<d", buf.read(8))
            specs.append(LayerSpec("dropout", drop_rate=rate))
        else:
            specs.append(LayerSpec("tanh"))
    net = NeuralNet(input_width, specs, np.random.default_rng(0))
    for slot, loaded in zip(net.params, dense_params):
        slot[0][...] = loaded[0]
        slot[1][...] = loaded[1]
    return net


def save_network(net: NeuralNet, path):
    with open(path, "wb") as fh:
        fh.write(network_to_bytes(net))


def load_network(path) -> NeuralNet:
    with open(path, "rb") as fh:
        return network_from_bytes(fh.read())
