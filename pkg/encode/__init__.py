"""
Bijective encodings: kernel codes, homeomorphic-reduction codes, port maps
of augmented cores, and 2-regular graph counts.
"""

from .kernel_codes import (
    encode_given_kernel,
    decode_given_kernel,
    iter_kernel_codes,
    enumerate_kernel_codes,
    kernel_code_to_dict
)
from .homeo_codes import (
    suppressed_vertices,
    encode_given_H,
    decode_given_H,
    iter_homeo_codes,
    enumerate_homeo_codes,
    count_homeo_codes,
    cycle_count_law,
    homeo_code_to_dict
)
from .two_regular import (
    two_regular_count,
    iter_two_regular,
    enumerate_two_regular
)
from .port_maps import (
    PortMaps,
    core_to_port_maps,
    port_maps_to_core,
    count_port_maps,
    iter_port_maps,
    iter_augmented_cores,
    enumerate_augmented_cores
)

__all__ = [
    # Kernel codes
    "encode_given_kernel",
    "decode_given_kernel",
    "iter_kernel_codes",
    "enumerate_kernel_codes",
    "kernel_code_to_dict",
    # Homeomorphic-reduction codes
    "suppressed_vertices",
    "encode_given_H",
    "decode_given_H",
    "iter_homeo_codes",
    "enumerate_homeo_codes",
    "count_homeo_codes",
    "cycle_count_law",
    "homeo_code_to_dict",
    # 2-regular graphs
    "two_regular_count",
    "iter_two_regular",
    "enumerate_two_regular",
    # Port maps
    "PortMaps",
    "core_to_port_maps",
    "port_maps_to_core",
    "count_port_maps",
    "iter_port_maps",
    "iter_augmented_cores",
    "enumerate_augmented_cores",
]
