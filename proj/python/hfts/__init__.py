"""Depth-based robust forecasting for hierarchical functional time series."""

try:
    from ._hfts import *  # noqa: F401,F403  (installed package layout)
    from ._hfts import __version__
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _hfts import *  # noqa: F401,F403
    from _hfts import __version__
