"""Exact predicates, conditional-independence testing and seeded learning
experiments for small categorical causal models. The heavy lifting happens in
the compiled extension; this package just re-exports it."""

try:
    from ._minlab import *  # noqa: F401,F403
    from ._minlab import __doc__ as _core_doc
except ImportError:  # extension on PYTHONPATH rather than inside the package
    from _minlab import *  # noqa: F401,F403
    from _minlab import __doc__ as _core_doc

__doc__ = _core_doc or __doc__
__version__ = "0.1.0"
