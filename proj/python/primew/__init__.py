"""Lambert-W based estimators of the n-th prime and the prime counting function.

High-precision values cross the C++ boundary as decimal strings; the helpers
here keep that explicit. `float(...)` them for quick work, or feed them to
`decimal.Decimal` / `mpmath` when the digits matter.
"""

try:
    from ._core import *  # installed package layout
    from . import _core
except ImportError:  # build-tree layout: _core.so next to the package dir
    from _core import *  # type: ignore
    import _core  # type: ignore

__version__ = _core.__version__

__all__ = [name for name in dir(_core) if not name.startswith("_")]
