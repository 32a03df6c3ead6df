"""matchforge: exact matching-ratio certificates on bridgeless cubic graphs.

The library computes the worst-case ratio between the best perfect
matching and the best matching under adversarial nonnegative edge
weights, produces machine-checkable bound certificates, and applies the
same machinery to quadrangulating triangle meshes.
"""

from __future__ import annotations

__version__ = "0.1.0"

DEFAULT_SEED = 0xC0FFEE
