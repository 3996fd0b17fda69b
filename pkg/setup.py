"""Builds the optional Cython kernels; the package also runs without them."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("CHARHOPF_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            ["src/charhopf/_ckernels.pyx"],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=ext_modules)
