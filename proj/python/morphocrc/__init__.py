"""Byte-parallel CRC equation networks, an 8x8 reconfigurable-array simulator,
and throughput report tooling."""

from ._core import (
    apply_network,
    bench_report,
    crc,
    derive_listing,
    feedforward_encode,
    metrics,
    simulate,
    speedup,
)

__all__ = [
    "apply_network",
    "bench_report",
    "crc",
    "derive_listing",
    "feedforward_encode",
    "metrics",
    "simulate",
    "speedup",
]
