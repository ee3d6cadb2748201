"""Python interface to the compressible nematic flow bench core."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:
    # Plain CMake builds drop _core next to this package instead of inside it.
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
