"""Version of ``circ_minors``; read by ``setup.py`` and the package ``__init__``."""
# License: BSD 3-Clause

# PEP 440 version string.
__version__ = "0.1.0a1"
