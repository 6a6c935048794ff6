"""Geodesic contact-curve synthesis for rolling bodies."""

try:
    from ._geocontact import *  # noqa: F401,F403  (installed package layout)
    from ._geocontact import __doc__  # noqa: F401
except ImportError:  # in-tree builds put the module next to the package
    from _geocontact import *  # noqa: F401,F403
