"""Reverse-rank graph queries over all-distances sketches."""

try:
    from ._revrank import *  # noqa: F401,F403
    from ._revrank import __version__  # noqa: F401
except ImportError:  # in-tree test runs load the module from the build dir
    from _revrank import *  # noqa: F401,F403
    from _revrank import __version__  # noqa: F401
