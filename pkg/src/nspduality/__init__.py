"""Non-separable planar maps, beta(1,0)-trees, decorated trees and synchronized
Tamari intervals: recursive decompositions, bijections and dualities."""

from .model import (
    CLASSES,
    LEAF,
    BetaTree,
    DecoTree,
    ParseError,
    RootedMap,
    SyncInterval,
    ValidationError,
    class_of,
    decode,
    encode,
    size,
    validate,
)

__all__ = [
    "CLASSES",
    "LEAF",
    "BetaTree",
    "DecoTree",
    "ParseError",
    "RootedMap",
    "SyncInterval",
    "ValidationError",
    "class_of",
    "decode",
    "encode",
    "size",
    "validate",
]
