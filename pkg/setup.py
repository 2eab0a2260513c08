"""Builds the optional compiled search core.

The package works without the extension (a pure-Python twin of every kernel
is selected at import time); the extension only speeds up the hot
branch-and-bound loops.
"""

import os

from setuptools import Extension, setup

PYX = "src/setfam/engines/_fastcore.pyx"

extensions = []
if os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [Extension("setfam.engines._fastcore", [PYX], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=extensions)
