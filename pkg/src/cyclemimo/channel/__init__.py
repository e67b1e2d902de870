from .jakes import JakesParams, jakes_sample, jakes_series
from .realization import ChannelRealization, make_realization, dump_channels
from .generate import (
    ChannelSequenceConfig,
    NoiseSpec,
    awgn,
    gen_rayleigh_sequence,
    gen_rician_sequence,
)

__all__ = [
    "JakesParams",
    "jakes_sample",
    "jakes_series",
    "ChannelRealization",
    "make_realization",
    "dump_channels",
    "ChannelSequenceConfig",
    "NoiseSpec",
    "awgn",
    "gen_rayleigh_sequence",
    "gen_rician_sequence",
]
