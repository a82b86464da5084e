"""Secure degrees-of-freedom bounds and scheme simulator for the two-antenna
broadcast channel with delayed CSIT and alternating link topology."""

from . import experiments, gaussian_mi, lattice, regions, schemes, topology
from .topology import ChannelRealization, TopologyProfile, TopologyState

__all__ = [
    "topology",
    "regions",
    "gaussian_mi",
    "schemes",
    "lattice",
    "experiments",
    "TopologyProfile",
    "TopologyState",
    "ChannelRealization",
]

__version__ = "0.1.0"
