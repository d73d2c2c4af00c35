__version__ = '0.1.0'

try:
    from .superalgebra import LieSuperalgebra  # NOQA
    from .catalog import load_catalog  # NOQA
except ImportError:
    # for setup.py and docs
    pass
