"""Combinatorics of finite cube complexes given as pocsets.

Thin wrapper around the compiled `_core` module. When the package is not
installed, point CUBECOMB_CORE_DIR at the directory containing the built
extension (the CMake build tree does this for the test suite).
"""

import os
import sys

_core_dir = os.environ.get("CUBECOMB_CORE_DIR")
if _core_dir and _core_dir not in sys.path:
    sys.path.insert(0, _core_dir)

try:
    from _core import (  # type: ignore[import-not-found]
        CubeComplex,
        CubecombError,
        Pocset,
        build,
        cocycle_norms,
        generate,
        parse_document,
        verify,
    )
except ImportError:  # installed layout: extension lives inside the package
    from cubecomb._core import (  # type: ignore[import-not-found]
        CubeComplex,
        CubecombError,
        Pocset,
        build,
        cocycle_norms,
        generate,
        parse_document,
        verify,
    )

__all__ = [
    "CubeComplex",
    "CubecombError",
    "Pocset",
    "build",
    "cocycle_norms",
    "generate",
    "parse_document",
    "verify",
]
