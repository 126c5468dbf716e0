"""Circulant contraction minors of circular matrices.

Subpackages: ``ground`` (circular index arithmetic), ``matrices``, ``digraphs``,
``circuits``, ``synthesis`` (circuits <-> minors), ``circulant`` (the D(n, k) and
G(n, k) specializations), ``oracle`` (brute-force cross-checks) and ``cli``.
"""

import os

__version__ = None
with open(os.path.join(os.path.dirname(__file__), "version.py")) as fp:
    exec(fp.read())
